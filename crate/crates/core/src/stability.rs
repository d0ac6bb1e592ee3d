//! Slope and α-slope arithmetic for holomorphic triples.
//!
//! For a triple `T = (E1, E2, φ)` the α-slope is
//!
//! ```text
//! μ_α(T) = (d1 + d2)/(n1 + n2) + α·n2/(n1 + n2)
//! ```
//!
//! and a subtriple destabilizes when its α-slope exceeds that of `T`. Only
//! numerical classes of subtriples are modelled here: the ranks `(n1′, n2′)`
//! and the total degree `d1′ + d2′`, which is all that enters `μ_α`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::TripleType;
use crate::rational::Rational;

/// Upper end of the α-range where the triple moduli space can be non-empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AlphaBound {
    Finite(Rational),
    Unbounded,
}

impl fmt::Display for AlphaBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaBound::Finite(r) => write!(f, "{r}"),
            AlphaBound::Unbounded => f.write_str("unbounded"),
        }
    }
}

/// Numerical class `(n1′, n2′, d1′ + d2′)` of a candidate subtriple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SubtripleClass {
    pub n1p: u32,
    pub n2p: u32,
    pub dtot: i64,
}

impl SubtripleClass {
    pub fn new(n1p: u32, n2p: u32, dtot: i64) -> Self {
        SubtripleClass { n1p, n2p, dtot }
    }

    pub fn total_rank(&self) -> i64 {
        i64::from(self.n1p) + i64::from(self.n2p)
    }

    /// Fails unless `0 ≤ n_i′ ≤ n_i` and the ranks are neither `(0, 0)`
    /// nor `(n1, n2)`.
    pub fn check_proper(&self, t: &TripleType) -> Result<()> {
        if is_proper_rank_pair(self.n1p, self.n2p, t) {
            Ok(())
        } else {
            Err(Error::ImproperSubtriple {
                n1p: self.n1p,
                n2p: self.n2p,
                n1: t.n1,
                n2: t.n2,
            })
        }
    }

    /// The class of the quotient `T / T′`.
    pub fn complement(&self, t: &TripleType) -> SubtripleClass {
        SubtripleClass {
            n1p: t.n1 - self.n1p,
            n2p: t.n2 - self.n2p,
            dtot: t.total_degree() - self.dtot,
        }
    }
}

impl fmt::Display for SubtripleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n1p, self.n2p, self.dtot)
    }
}

pub(crate) fn is_proper_rank_pair(n1p: u32, n2p: u32, t: &TripleType) -> bool {
    n1p <= t.n1 && n2p <= t.n2 && (n1p, n2p) != (0, 0) && (n1p, n2p) != (t.n1, t.n2)
}

/// All proper rank pairs `(n1′, n2′)` for `t`, in lexicographic order.
pub fn proper_rank_pairs(t: &TripleType) -> impl Iterator<Item = (u32, u32)> + '_ {
    (0..=t.n1)
        .flat_map(move |a| (0..=t.n2).map(move |b| (a, b)))
        .filter(move |&(a, b)| is_proper_rank_pair(a, b, t))
}

/// `μ = d/n`.
pub fn slope(n: u32, d: i64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::NonPositiveRank);
    }
    Ok(Rational::new(d, i64::from(n)))
}

fn alpha_slope_parts(n1: u32, n2: u32, dtot: i64, alpha: Rational) -> Result<Rational> {
    let total = i64::from(n1) + i64::from(n2);
    if total == 0 {
        return Err(Error::DegenerateTriple);
    }
    Ok(Rational::new(dtot, total) + alpha * Rational::new(i64::from(n2), total))
}

pub fn alpha_slope(t: &TripleType, alpha: Rational) -> Result<Rational> {
    alpha_slope_parts(t.n1, t.n2, t.total_degree(), alpha)
}

/// α-slope of a subtriple class.
pub fn class_alpha_slope(sub: &SubtripleClass, alpha: Rational) -> Result<Rational> {
    alpha_slope_parts(sub.n1p, sub.n2p, sub.dtot, alpha)
}

/// `α_M = 2·n1·(μ(E1) − μ(E2)) / (n1 − n2)` for `n1 > n2`; unbounded when
/// `n1 = n2`. Triples with `n1 < n2` must be passed through [`dual`] first.
pub fn alpha_max(t: &TripleType) -> Result<AlphaBound> {
    if t.n1 == 0 || t.n2 == 0 {
        return Err(Error::NonPositiveRank);
    }
    if t.n1 < t.n2 {
        return Err(Error::NeedsDual { n1: t.n1, n2: t.n2 });
    }
    if t.n1 == t.n2 {
        return Ok(AlphaBound::Unbounded);
    }
    let n1 = i64::from(t.n1);
    let gap = slope(t.n1, t.d1)? - slope(t.n2, t.d2)?;
    Ok(AlphaBound::Finite(gap * (2 * n1) / (n1 - i64::from(t.n2))))
}

/// The dual triple `(E1*, E2*, φ*)` reindexed so that the map again goes
/// from the second bundle to the first: `(n2, n1, −d2, −d1)`.
pub fn dual(t: &TripleType) -> TripleType {
    TripleType {
        n1: t.n2,
        n2: t.n1,
        d1: -t.d2,
        d2: -t.d1,
    }
}

/// `μ_α(T) − μ_α(T′)`. Positive: the class does not destabilize at `α`;
/// zero: equality (strict semistability is possible); negative: the class
/// destabilizes.
pub fn subtriple_margin(sub: &SubtripleClass, t: &TripleType, alpha: Rational) -> Result<Rational> {
    sub.check_proper(t)?;
    Ok(alpha_slope(t, alpha)? - class_alpha_slope(sub, alpha)?)
}
