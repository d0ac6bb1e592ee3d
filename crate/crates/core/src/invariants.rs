//! Topological invariants of U(p,q)-Higgs bundles and holomorphic triples.
//!
//! A U(p,q)-Higgs bundle `V ⊕ W` is labelled by the ranks `(p, q)` and
//! degrees `(d_V, d_W)`. The allowed labels are cut out by the Milnor–Wood
//! type inequality
//!
//! ```text
//! |q·d_V − p·d_W| / (p + q)  ≤  min(p, q)·(g − 1)
//! ```
//!
//! and each allowed label indexes one connected component. Local minima of
//! the Higgs field norm with `c = 0` (resp. `b = 0`) correspond to
//! holomorphic triples via `E1 = V ⊗ K, E2 = W` (resp. `E1 = W ⊗ K, E2 = V`).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A closed surface of genus `g ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Surface {
    genus: u32,
}

impl Surface {
    pub fn new(genus: u32) -> Result<Self> {
        if genus < 2 {
            return Err(Error::InvalidGenus(genus));
        }
        Ok(Surface { genus })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// `deg K = 2g − 2`.
    pub fn canonical_degree(&self) -> i64 {
        2 * i64::from(self.genus) - 2
    }
}

/// Ranks and degrees `(p, q, d_V, d_W)` of a U(p,q)-Higgs bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HiggsType {
    pub p: u32,
    pub q: u32,
    pub d_v: i64,
    pub d_w: i64,
}

impl HiggsType {
    pub fn new(p: u32, q: u32, d_v: i64, d_w: i64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::NonPositiveRank);
        }
        Ok(HiggsType { p, q, d_v, d_w })
    }

    /// `q·d_V − p·d_W`, the signed numerator of the Milnor–Wood quantity.
    pub fn toledo_numerator(&self) -> i64 {
        i64::from(self.q) * self.d_v - i64::from(self.p) * self.d_w
    }
}

impl fmt::Display for HiggsType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p={}, q={}, d_V={}, d_W={})", self.p, self.q, self.d_v, self.d_w)
    }
}

/// Ranks and degrees `(n1, n2, d1, d2)` of a holomorphic triple `E2 → E1`.
///
/// Zero ranks are allowed so the type can carry degenerate pieces in
/// extension-complex bookkeeping; a zero-rank bundle must have degree 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TripleType {
    pub n1: u32,
    pub n2: u32,
    pub d1: i64,
    pub d2: i64,
}

impl TripleType {
    pub fn new(n1: u32, n2: u32, d1: i64, d2: i64) -> Result<Self> {
        if n1 + n2 == 0 {
            return Err(Error::DegenerateTriple);
        }
        if n1 == 0 && d1 != 0 {
            return Err(Error::ZeroRankDegree(d1));
        }
        if n2 == 0 && d2 != 0 {
            return Err(Error::ZeroRankDegree(d2));
        }
        Ok(TripleType { n1, n2, d1, d2 })
    }

    pub fn total_rank(&self) -> i64 {
        i64::from(self.n1) + i64::from(self.n2)
    }

    pub fn total_degree(&self) -> i64 {
        self.d1 + self.d2
    }
}

impl fmt::Display for TripleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.n1, self.n2, self.d1, self.d2)
    }
}

/// Which of the two off-diagonal Higgs field components vanishes at a
/// local minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MinimaType {
    CZero,
    BZero,
    Both,
}

impl fmt::Display for MinimaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MinimaType::CZero => "CZero",
            MinimaType::BZero => "BZero",
            MinimaType::Both => "Both",
        })
    }
}

/// The side of the Higgs ↔ triple correspondence: which component of the
/// Higgs field is zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TripleSide {
    CZero,
    BZero,
}

impl fmt::Display for TripleSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TripleSide::CZero => "CZero",
            TripleSide::BZero => "BZero",
        })
    }
}

/// Inclusive integer range `lo..=hi`, written `lo:hi` (or a bare integer).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeRange {
    pub lo: i64,
    pub hi: i64,
}

impl DegreeRange {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::EmptyWindow { lo, hi });
        }
        Ok(DegreeRange { lo, hi })
    }

    pub fn single(value: i64) -> Self {
        DegreeRange { lo: value, hi: value }
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }
}

impl FromStr for DegreeRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "degree range",
            input: s.to_string(),
        };
        match s.split_once(':') {
            None => s.trim().parse().map(DegreeRange::single).map_err(|_| err()),
            Some((lo, hi)) => {
                let lo = lo.trim().parse().map_err(|_| err())?;
                let hi = hi.trim().parse().map_err(|_| err())?;
                DegreeRange::new(lo, hi)
            }
        }
    }
}

impl fmt::Display for DegreeRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lo, self.hi)
    }
}

/// A rectangle of `(d_V, d_W)` values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeWindow {
    pub d_v: DegreeRange,
    pub d_w: DegreeRange,
}

impl DegreeWindow {
    pub fn new(d_v: DegreeRange, d_w: DegreeRange) -> Result<Self> {
        for r in [d_v, d_w] {
            if r.is_empty() {
                return Err(Error::EmptyWindow { lo: r.lo, hi: r.hi });
            }
        }
        Ok(DegreeWindow { d_v, d_w })
    }

    pub fn square(lo: i64, hi: i64) -> Result<Self> {
        let r = DegreeRange::new(lo, hi)?;
        Ok(DegreeWindow { d_v: r, d_w: r })
    }

    /// Points in lexicographic `(d_V, d_W)` order.
    pub fn points(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.d_v
            .iter()
            .flat_map(move |dv| self.d_w.iter().map(move |dw| (dv, dw)))
    }
}

/// Right-hand side of the Milnor–Wood inequality, `min(p, q)·(g − 1)`.
pub fn mw_bound(p: u32, q: u32, surface: Surface) -> Result<Rational> {
    if p == 0 || q == 0 {
        return Err(Error::NonPositiveRank);
    }
    Ok(Rational::integer(
        i64::from(p.min(q)) * (i64::from(surface.genus()) - 1),
    ))
}

/// Left-hand side of the Milnor–Wood inequality, `|q·d_V − p·d_W| / (p + q)`.
pub fn mw_value(h: &HiggsType) -> Rational {
    Rational::new(h.toledo_numerator().abs(), i64::from(h.p) + i64::from(h.q))
}

/// Whether `(d_V, d_W)` satisfies the Milnor–Wood inequality; equality is
/// allowed.
pub fn is_allowed(h: &HiggsType, surface: Surface) -> Result<bool> {
    Ok(mw_value(h) <= mw_bound(h.p, h.q, surface)?)
}

/// All allowed `(d_V, d_W)` in the window, sorted by `(d_V, d_W)`.
pub fn census(p: u32, q: u32, surface: Surface, window: &DegreeWindow) -> Result<Vec<HiggsType>> {
    let bound = mw_bound(p, q, surface)?;
    Ok(window
        .points()
        .map(|(d_v, d_w)| HiggsType { p, q, d_v, d_w })
        .filter(|h| mw_value(h) <= bound)
        .collect())
}

/// Compares `d_V/p` with `d_W/q`: the smaller-slope side determines which
/// Higgs field component vanishes at a minimum.
pub fn minima_type(h: &HiggsType) -> MinimaType {
    // d_V/p < d_W/q  ⇔  q·d_V < p·d_W
    match h.toledo_numerator().signum() {
        -1 => MinimaType::CZero,
        1 => MinimaType::BZero,
        _ => MinimaType::Both,
    }
}

/// The triple attached to a minimum of the given side.
///
/// `CZero`: `(p, q, d_V + p(2g−2), d_W)`. `BZero`: `(q, p, d_W + q(2g−2), d_V)`.
pub fn higgs_to_triple(h: &HiggsType, surface: Surface, side: TripleSide) -> TripleType {
    let k = surface.canonical_degree();
    match side {
        TripleSide::CZero => TripleType {
            n1: h.p,
            n2: h.q,
            d1: h.d_v + i64::from(h.p) * k,
            d2: h.d_w,
        },
        TripleSide::BZero => TripleType {
            n1: h.q,
            n2: h.p,
            d1: h.d_w + i64::from(h.q) * k,
            d2: h.d_v,
        },
    }
}

/// Inverse of [`higgs_to_triple`] for the same side.
pub fn triple_to_higgs(t: &TripleType, surface: Surface, side: TripleSide) -> Result<HiggsType> {
    let k = surface.canonical_degree();
    let untwisted = t.d1 - i64::from(t.n1) * k;
    match side {
        TripleSide::CZero => HiggsType::new(t.n1, t.n2, untwisted, t.d2),
        TripleSide::BZero => HiggsType::new(t.n2, t.n1, t.d2, untwisted),
    }
}

/// The triple side used at a minimum of type `m`; `Both` resolves to
/// `CZero`.
pub fn default_side(m: MinimaType) -> TripleSide {
    match m {
        MinimaType::BZero => TripleSide::BZero,
        MinimaType::CZero | MinimaType::Both => TripleSide::CZero,
    }
}
