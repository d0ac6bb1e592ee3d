//! Critical values of the stability parameter and the chamber decomposition
//! of the α-line for a fixed triple type.
//!
//! A proper subtriple class `(n1′, n2′, d′)` balances against `T` where
//! `μ_α(T′) = μ_α(T)`. Writing `N = n1 + n2`, `N′ = n1′ + n2′` and
//! `D = d1 + d2`, this is the linear equation
//!
//! ```text
//! α·(n2′·N − n2·N′) = D·N′ − d′·N
//! ```
//!
//! Its solutions inside `[0, α_M]` (or `[0, cap]` when `n1 = n2`) are the
//! numerical walls. Between consecutive walls no class changes sign, so the
//! α-stability condition is constant on each open chamber.
//!
//! Numerical walls are a superset of the walls actually realized by
//! semistable triples: we never check that a witnessing class occurs inside
//! some semistable triple.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{
    default_side, higgs_to_triple, is_allowed, minima_type, mw_bound, mw_value, DegreeWindow,
    HiggsType, Surface, TripleType,
};
use crate::rational::Rational;
use crate::stability::{alpha_max, dual, proper_rank_pairs, AlphaBound, SubtripleClass};

/// Solution set of `μ_α(T′) = μ_α(T)` in α.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WallSolution {
    Value(Rational),
    NoSolution,
    AllAlpha,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Wall {
    pub alpha: Rational,
    pub witnesses: Vec<SubtripleClass>,
}

/// Open interval `(lower, upper)` of α-values free of walls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Chamber {
    pub lower: Rational,
    pub upper: Rational,
}

impl Chamber {
    pub fn contains(&self, alpha: Rational) -> bool {
        self.lower < alpha && alpha < self.upper
    }

    pub fn midpoint(&self) -> Rational {
        (self.lower + self.upper) / 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ChamberLocation {
    Inside(Chamber),
    OnWall(Wall),
    OutOfRange,
}

/// Coefficient `n2′·N − n2·N′` of α in the balancing equation.
fn alpha_coefficient(n1p: u32, n2p: u32, t: &TripleType) -> i64 {
    let np = i64::from(n1p) + i64::from(n2p);
    i64::from(n2p) * t.total_rank() - i64::from(t.n2) * np
}

pub fn wall_alpha(sub: &SubtripleClass, t: &TripleType) -> Result<WallSolution> {
    sub.check_proper(t)?;
    let coeff = alpha_coefficient(sub.n1p, sub.n2p, t);
    let rhs = t.total_degree() * sub.total_rank() - sub.dtot * t.total_rank();
    Ok(match (coeff, rhs) {
        (0, 0) => WallSolution::AllAlpha,
        (0, _) => WallSolution::NoSolution,
        _ => WallSolution::Value(Rational::new(rhs, coeff)),
    })
}

/// Upper end of the α-range scanned for walls: `α_M` when `n1 > n2`, the
/// cap when `n1 = n2`. The cap is ignored when `n1 > n2`.
pub fn alpha_range_end(t: &TripleType, cap: Option<Rational>) -> Result<Rational> {
    match alpha_max(t)? {
        AlphaBound::Finite(am) => Ok(am),
        AlphaBound::Unbounded => match cap {
            None => Err(Error::MissingCap),
            Some(c) if c <= 0 => Err(Error::NonPositiveCap(c.to_string())),
            Some(c) => Ok(c),
        },
    }
}

/// Walls of `t` inside `[0, upper]`, for any rank pair (no `n1 ≥ n2`
/// normalization). Empty when `upper < 0`.
pub fn numerical_walls(t: &TripleType, upper: Rational) -> Vec<Wall> {
    let mut walls: BTreeMap<Rational, Vec<SubtripleClass>> = BTreeMap::new();
    if upper.is_negative() {
        return Vec::new();
    }
    let n = t.total_rank();
    for (n1p, n2p) in proper_rank_pairs(t) {
        let coeff = alpha_coefficient(n1p, n2p, t);
        if coeff == 0 {
            continue;
        }
        let np = i64::from(n1p) + i64::from(n2p);
        // d′·N = D·N′ − α·coeff, with α running over [0, upper].
        let base = Rational::integer(t.total_degree() * np);
        let swing = upper * coeff;
        let lo = (base - swing.max(Rational::ZERO)) / n;
        let hi = (base - swing.min(Rational::ZERO)) / n;
        for dtot in lo.ceil()..=hi.floor() {
            let alpha = Rational::new(t.total_degree() * np - dtot * n, coeff);
            debug_assert!(alpha >= 0 && alpha <= upper);
            walls
                .entry(alpha)
                .or_default()
                .push(SubtripleClass::new(n1p, n2p, dtot));
        }
    }
    walls
        .into_iter()
        .map(|(alpha, mut witnesses)| {
            witnesses.sort();
            Wall { alpha, witnesses }
        })
        .collect()
}

/// Sorted critical values of α in `[0, α_M]` (or `[0, cap]` if `n1 = n2`),
/// each with every witnessing class. Requires `n1 ≥ n2`.
pub fn critical_values(t: &TripleType, cap: Option<Rational>) -> Result<Vec<Wall>> {
    let upper = alpha_range_end(t, cap)?;
    Ok(numerical_walls(t, upper))
}

/// The walls and open chambers of the α-range of a triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub triple: TripleType,
    pub alpha_max: AlphaBound,
    /// End of the scanned range; equals the cap when `alpha_max` is unbounded.
    pub range_end: Rational,
    pub walls: Vec<Wall>,
    pub chambers: Vec<Chamber>,
}

impl Decomposition {
    pub fn new(t: &TripleType, cap: Option<Rational>) -> Result<Self> {
        let alpha_max = alpha_max(t)?;
        let range_end = alpha_range_end(t, cap)?;
        let walls = numerical_walls(t, range_end);
        let chambers = chambers_between(&walls, range_end);
        Ok(Decomposition {
            triple: *t,
            alpha_max,
            range_end,
            walls,
            chambers,
        })
    }

    pub fn wall_alphas(&self) -> Vec<Rational> {
        self.walls.iter().map(|w| w.alpha).collect()
    }

    /// An endpoint of the range that carries no wall is assigned to the
    /// adjacent chamber, whose stability condition it shares.
    pub fn locate(&self, alpha: Rational) -> ChamberLocation {
        if alpha.is_negative() || alpha > self.range_end {
            return ChamberLocation::OutOfRange;
        }
        if let Ok(i) = self.walls.binary_search_by(|w| w.alpha.cmp(&alpha)) {
            return ChamberLocation::OnWall(self.walls[i].clone());
        }
        self.chambers
            .iter()
            .find(|c| c.lower <= alpha && alpha <= c.upper)
            .map_or(ChamberLocation::OutOfRange, |c| ChamberLocation::Inside(*c))
    }
}

fn chambers_between(walls: &[Wall], upper: Rational) -> Vec<Chamber> {
    if upper <= 0 {
        return Vec::new();
    }
    let mut cuts = vec![Rational::ZERO];
    cuts.extend(walls.iter().map(|w| w.alpha));
    cuts.push(upper);
    cuts.dedup();
    cuts.windows(2)
        .filter(|w| w[0] < w[1])
        .map(|w| Chamber {
            lower: w[0],
            upper: w[1],
        })
        .collect()
}

pub fn chambers(t: &TripleType, cap: Option<Rational>) -> Result<Vec<Chamber>> {
    Ok(Decomposition::new(t, cap)?.chambers)
}

pub fn chamber_of(t: &TripleType, alpha: Rational, cap: Option<Rational>) -> Result<ChamberLocation> {
    Ok(Decomposition::new(t, cap)?.locate(alpha))
}

/// Independent scan for critical values: tries every reduced `a/b` in the
/// range with `b ≤ (n1 + n2)²` and keeps those at which some proper rank
/// pair admits an integral total degree balancing the α-slopes.
///
/// Any wall has denominator dividing `|n2′·N − n2·N′| < N²`, so the scan is
/// exhaustive. Rank pairs with α-independent balance are skipped.
pub fn oracle_critical_values(t: &TripleType, cap: Option<Rational>) -> Result<Vec<Rational>> {
    let upper = alpha_range_end(t, cap)?;
    let mut found = Vec::new();
    if upper.is_negative() {
        return Ok(found);
    }
    let n = t.total_rank();
    let d = t.total_degree();
    let classes: Vec<(i64, i64)> = proper_rank_pairs(t)
        .map(|(a, b)| {
            let np = i64::from(a) + i64::from(b);
            (np, i64::from(b) * n - i64::from(t.n2) * np)
        })
        .filter(|&(_, c)| c != 0)
        .collect();
    for b in 1..=n * n {
        let top = (upper * b).floor();
        for a in 0..=top {
            if a.gcd(&b) != 1 {
                continue;
            }
            // d′ = (D·N′·b − a·c) / (N·b) must be an integer.
            let hit = classes
                .iter()
                .any(|&(np, c)| (d * np * b - a * c) % (n * b) == 0);
            if hit {
                found.push(Rational::new(a, b));
            }
        }
    }
    found.sort();
    Ok(found)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyViolation {
    pub higgs: HiggsType,
    /// Minima-side triple, dualized so that `n1 > n2`.
    pub triple: TripleType,
    pub alpha_max: Rational,
    pub allowed: bool,
    pub mw_equality: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub checked: usize,
    /// Points where the Milnor–Wood inequality is an equality.
    pub boundary: usize,
    pub violations: Vec<ConsistencyViolation>,
}

/// The minima-side triple of `h`, dualized if needed so that `n1 ≥ n2`.
pub fn normalized_minima_triple(h: &HiggsType, surface: Surface) -> (TripleType, bool) {
    let t = higgs_to_triple(h, surface, default_side(minima_type(h)));
    if t.n1 < t.n2 {
        (dual(&t), true)
    } else {
        (t, false)
    }
}

/// Checks, for every `(d_V, d_W)` in the window, that the Milnor–Wood
/// inequality holds exactly when `2g − 2 ≤ α_M` for the minima-side triple,
/// with equality on one side iff equality on the other.
pub fn mw_alpha_consistency(
    p: u32,
    q: u32,
    surface: Surface,
    window: &DegreeWindow,
) -> Result<ConsistencyReport> {
    if p == q {
        return Err(Error::VacuousRegime(p));
    }
    let bound = mw_bound(p, q, surface)?;
    let target = Rational::integer(surface.canonical_degree());
    let mut report = ConsistencyReport {
        checked: 0,
        boundary: 0,
        violations: Vec::new(),
    };
    for (d_v, d_w) in window.points() {
        let h = HiggsType::new(p, q, d_v, d_w)?;
        let (t, _) = normalized_minima_triple(&h, surface);
        let AlphaBound::Finite(am) = alpha_max(&t)? else {
            unreachable!("p != q gives n1 != n2");
        };
        let allowed = is_allowed(&h, surface)?;
        let mw_equality = mw_value(&h) == bound;
        report.checked += 1;
        if mw_equality {
            report.boundary += 1;
        }
        if allowed != (target <= am) || mw_equality != (target == am) {
            report.violations.push(ConsistencyViolation {
                higgs: h,
                triple: t,
                alpha_max: am,
                allowed,
                mw_equality,
            });
        }
    }
    Ok(report)
}
