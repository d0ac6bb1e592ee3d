//! Grid sweeps that cross-check the library against independent routes.
//!
//! Each sweep returns a [`SweepOutcome`]; the `check` subcommand runs them
//! all and fails if any reports a mismatch.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::chambers::{critical_values, mw_alpha_consistency, numerical_walls, oracle_critical_values, Decomposition};
use crate::error::Result;
use crate::extension::expected_dim;
use crate::invariants::{
    census, higgs_to_triple, triple_to_higgs, DegreeRange, DegreeWindow, HiggsType, Surface, TripleSide, TripleType,
};
use crate::rational::Rational;
use crate::stability::{alpha_max, dual, AlphaBound};
use crate::vhs::{adjoint_grading, classify_chain, HodgeChain, MinimaVerdict, Side};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
    pub note: String,
}

impl SweepOutcome {
    fn new(name: &'static str) -> Self {
        SweepOutcome {
            name,
            passed: true,
            checked: 0,
            failures: Vec::new(),
            note: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.passed = false;
            if self.failures.len() < 20 {
                self.failures.push(what());
            }
        }
    }
}

/// Cap used for `n1 = n2` triples in the oracle grids.
pub const GRID_CAP: i64 = 10;

fn surface(genus: u32) -> Surface {
    Surface::new(genus).expect("genus >= 2")
}

/// Triples with `n1, n2 ≥ 1`, `n1 + n2 ≤ max_rank`, `|d_i| ≤ max_degree`.
pub fn triple_grid(max_rank: u32, max_degree: i64) -> Vec<TripleType> {
    let mut out = Vec::new();
    for n1 in 1..max_rank {
        for n2 in 1..=max_rank - n1 {
            for d1 in -max_degree..=max_degree {
                for d2 in -max_degree..=max_degree {
                    out.push(TripleType { n1, n2, d1, d2 });
                }
            }
        }
    }
    out
}

fn normalize(t: &TripleType) -> TripleType {
    if t.n1 < t.n2 {
        dual(t)
    } else {
        *t
    }
}

fn cap_for(t: &TripleType) -> Option<Rational> {
    (t.n1 == t.n2).then(|| Rational::integer(GRID_CAP))
}

fn wall_set(t: &TripleType) -> Result<Vec<Rational>> {
    Ok(critical_values(t, cap_for(t))?.into_iter().map(|w| w.alpha).collect())
}

pub fn census_counts() -> Result<SweepOutcome> {
    let mut out = SweepOutcome::new("census");
    let square = DegreeWindow::square(0, 3)?;
    let n = census(1, 1, surface(2), &square)?.len();
    out.check(n == 14, || format!("p=q=1, g=2, [0,3]^2: {n} pairs, expected 14"));
    let strip = DegreeWindow::new(DegreeRange::new(0, 3)?, DegreeRange::new(0, 1)?)?;
    let n = census(2, 1, surface(2), &strip)?.len();
    out.check(n == 8, || format!("p=2, q=1, g=2, [0,3]x[0,1]: {n} pairs, expected 8"));
    Ok(out)
}

/// `is_allowed ⇔ 2g − 2 ≤ α_M` for `p ≠ q ≤ 4`, `g ∈ {2,3,4}`,
/// `d_V, d_W ∈ [−10, 10]`.
pub fn mw_alpha_equivalence() -> Result<SweepOutcome> {
    let mut out = SweepOutcome::new("mw-alpha-equivalence");
    let window = DegreeWindow::square(-10, 10)?;
    let mut boundary = 0;
    for genus in 2..=4 {
        for p in 1..=4 {
            for q in (1..=4).filter(|&q| q != p) {
                let rep = mw_alpha_consistency(p, q, surface(genus), &window)?;
                boundary += rep.boundary;
                out.checked += rep.checked - rep.violations.len();
                for v in rep.violations {
                    out.check(false, || format!("g={genus} {}: alpha_M={} allowed={}", v.higgs, v.alpha_max, v.allowed));
                }
            }
        }
    }
    out.note = format!("{boundary} boundary points matched with alpha_M = 2g-2");
    Ok(out)
}

/// Enumerated walls agree with the denominator scan on `n1 + n2 ≤ 5`,
/// `|d_i| ≤ 6`; `n1 < n2` triples are dualized first.
pub fn oracle_equivalence() -> Result<SweepOutcome> {
    let mut out = SweepOutcome::new("oracle-equivalence");
    for t in triple_grid(5, 6) {
        let t = normalize(&t);
        let fast = wall_set(&t)?;
        let slow = oracle_critical_values(&t, cap_for(&t))?;
        out.check(fast == slow, || format!("{t}: enumerated {fast:?}, oracle {slow:?}"));
    }
    Ok(out)
}

pub fn worked_chamber() -> Result<SweepOutcome> {
    let mut out = SweepOutcome::new("worked-chamber");
    let t = TripleType::new(2, 1, 3, 0)?;
    let d = Decomposition::new(&t, None)?;
    out.check(d.alpha_max == AlphaBound::Finite(6.into()), || format!("alpha_M = {}", d.alpha_max));
    let expected: Vec<Rational> = [(0, 1), (3, 2), (3, 1), (9, 2), (6, 1)]
        .iter()
        .map(|&(a, b)| Rational::new(a, b))
        .collect();
    out.check(d.wall_alphas() == expected, || format!("walls {:?}", d.wall_alphas()));
    let inside = matches!(d.locate(2.into()), crate::chambers::ChamberLocation::Inside(c)
        if c.lower == Rational::new(3, 2) && c.upper == 3);
    out.check(inside, || format!("alpha=2 located at {:?}", d.locate(2.into())));
    let on_wall = matches!(d.locate(3.into()), crate::chambers::ChamberLocation::OnWall(w) if w.alpha == 3);
    out.check(on_wall, || format!("alpha=3 located at {:?}", d.locate(3.into())));
    Ok(out)
}

fn closed_form_dim(t: &TripleType, genus: u32) -> i64 {
    let (n1, n2) = (i64::from(t.n1), i64::from(t.n2));
    (i64::from(genus) - 1) * (n1 * n1 + n2 * n2 - n1 * n2) + n2 * t.d1 - n1 * t.d2 + 1
}

/// `expected_dim` against its closed form, and its twist invariance, on
/// `n1 + n2 ≤ 6`, `|d_i| ≤ 6`, `g ∈ {2,3,4}`.
pub fn expected_dimension() -> Result<SweepOutcome> {
    let mut out = SweepOutcome::new("expected-dimension");
    let t = TripleType::new(2, 1, 3, 0)?;
    let d = expected_dim(&t, surface(2));
    out.check(d == 7, || format!("(2,1,3,0), g=2: {d}"));
    for genus in 2..=4 {
        let s = surface(genus);
        for t in triple_grid(6, 6) {
            let d = expected_dim(&t, s);
            let closed = closed_form_dim(&t, genus);
            out.check(d == closed, || format!("{t}, g={genus}: {d} vs closed form {closed}"));
            for c in [-2, -1, 1, 2] {
                let twisted = TripleType {
                    d1: t.d1 + c * i64::from(t.n1),
                    d2: t.d2 + c * i64::from(t.n2),
                    ..t
                };
                let dt = expected_dim(&twisted, s);
                out.check(dt == d, || format!("{t} twisted by {c}, g={genus}: {dt} vs {d}"));
            }
        }
    }
    Ok(out)
}

/// Calls `f` on every alternating chain starting on `first` with ranks in
/// `1..=max_rank`, length `m`, degrees in `[−max_degree, max_degree]`.
pub fn for_each_chain(first: Side, m: usize, max_rank: u32, max_degree: i64, mut f: impl FnMut(&HodgeChain)) {
    let mut ranks = vec![1u32; m];
    loop {
        let mut degrees = vec![-max_degree; m];
        loop {
            let chain = HodgeChain::alternating(first, &ranks, &degrees).expect("alternating chain");
            f(&chain);
            if !advance(&mut degrees, -max_degree, max_degree) {
                break;
            }
        }
        if !advance_u32(&mut ranks, 1, max_rank) {
            break;
        }
    }
}

fn advance(digits: &mut [i64], lo: i64, hi: i64) -> bool {
    for d in digits.iter_mut() {
        if *d < hi {
            *d += 1;
            return true;
        }
        *d = lo;
    }
    false
}

fn advance_u32(digits: &mut [u32], lo: u32, hi: u32) -> bool {
    for d in digits.iter_mut() {
        if *d < hi {
            *d += 1;
            return true;
        }
        *d = lo;
    }
    false
}

/// Summary of classifying all chains in a grid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ChainTally {
    pub chains: usize,
    pub minimum: usize,
    pub numerical: usize,
    pub by_lemma: usize,
}

/// Minima classification over ranks `≤ 3`, `m ≤ 5`, degrees in `[−3, 3]`,
/// both starting sides, `g ∈ {2, 3}`.
pub fn vhs_minima() -> Result<SweepOutcome> {
    let mut out = SweepOutcome::new("vhs-minima");
    let mut notes = Vec::new();
    for genus in [2, 3] {
        let s = surface(genus);
        for m in 1..=5usize {
            let mut tally = ChainTally::default();
            for first in [Side::V, Side::W] {
                for_each_chain(first, m, 3, 3, |c| {
                    tally.chains += 1;
                    match classify_chain(c, s) {
                        MinimaVerdict::Minimum => tally.minimum += 1,
                        MinimaVerdict::NotMinimumNumerical(_) => tally.numerical += 1,
                        MinimaVerdict::NotMinimumByLemma => tally.by_lemma += 1,
                    }
                    // The grading sums only depend on ranks/degrees; check
                    // them once per chain at the first genus.
                    if genus == 2 {
                        let total: u64 = c.pieces().iter().map(|p| u64::from(p.rank)).sum();
                        let grading = adjoint_grading(c);
                        let rank_sum: u64 = grading.iter().map(|u| u.rank).sum();
                        let degree_sum: i64 = grading.iter().map(|u| u.degree).sum();
                        out.check(rank_sum == total * total && degree_sum == 0, || {
                            format!("{c}: sum rank {rank_sum}, sum degree {degree_sum}")
                        });
                    }
                });
            }
            let expect_minimum = if m <= 2 { tally.chains } else { 0 };
            out.check(tally.minimum == expect_minimum, || {
                format!("g={genus} m={m}: {} minima out of {}", tally.minimum, tally.chains)
            });
            if m >= 3 && (m - 1) % 2 == 0 {
                out.check(tally.by_lemma == 0, || {
                    format!("g={genus} m={m}: {} chains without numerical obstruction", tally.by_lemma)
                });
            }
            notes.push(format!(
                "g={genus} m={m}: {} chains, {} minimum, {} numerical, {} by lemma",
                tally.chains, tally.minimum, tally.numerical, tally.by_lemma
            ));
        }
    }
    out.note = notes.join("; ");
    Ok(out)
}

/// Wall sets are unchanged by duality and by twisting
/// `(d1, d2) → (d1 + c·n1, d2 + c·n2)` on the oracle grid.
pub fn duality_and_twist() -> Result<SweepOutcome> {
    let mut out = SweepOutcome::new("duality-and-twist");
    for t in triple_grid(5, 6) {
        if t.n1 < t.n2 {
            continue;
        }
        let cap = cap_for(&t);
        let walls = wall_set(&t)?;
        let end = crate::chambers::alpha_range_end(&t, cap)?;
        let dual_walls: Vec<Rational> = numerical_walls(&dual(&t), end).into_iter().map(|w| w.alpha).collect();
        out.check(walls == dual_walls, || format!("{t}: walls {walls:?}, dual walls {dual_walls:?}"));
        let am = alpha_max(&t)?;
        for c in -2..=2 {
            let twisted = TripleType {
                d1: t.d1 + c * i64::from(t.n1),
                d2: t.d2 + c * i64::from(t.n2),
                ..t
            };
            let tw = wall_set(&twisted)?;
            let tam = alpha_max(&twisted)?;
            out.check(tw == walls && tam == am, || format!("{t} twisted by {c}: walls {tw:?}, alpha_M {tam}"));
        }
    }
    Ok(out)
}

/// Exhaustive Higgs ↔ triple roundtrip on a small grid.
pub fn translation_roundtrip() -> Result<SweepOutcome> {
    let mut out = SweepOutcome::new("translation-roundtrip");
    let mut seen = BTreeSet::new();
    for genus in 2..=4 {
        let s = surface(genus);
        for p in 1..=4 {
            for q in 1..=4 {
                for d_v in -10..=10 {
                    for d_w in -10..=10 {
                        let h = HiggsType::new(p, q, d_v, d_w)?;
                        for side in [TripleSide::CZero, TripleSide::BZero] {
                            let t = higgs_to_triple(&h, s, side);
                            let back = triple_to_higgs(&t, s, side)?;
                            out.check(back == h, || format!("{h}, g={genus}, {side}: came back as {back}"));
                            seen.insert((genus, side, t));
                        }
                    }
                }
            }
        }
    }
    // Injectivity: distinct inputs map to distinct triples per side.
    let (images, inputs) = (seen.len(), out.checked);
    out.check(images == inputs, || format!("{images} distinct images for {inputs} inputs"));
    Ok(out)
}

pub fn run_all() -> Result<Vec<SweepOutcome>> {
    Ok(vec![
        census_counts()?,
        mw_alpha_equivalence()?,
        oracle_equivalence()?,
        worked_chamber()?,
        expected_dimension()?,
        vhs_minima()?,
        duality_and_twist()?,
        translation_roundtrip()?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_enumeration_counts() {
        let mut n = 0;
        for_each_chain(Side::V, 3, 2, 1, |_| n += 1);
        assert_eq!(n, 8 * 27);
    }

    #[test]
    fn small_sweeps_pass() {
        for s in [census_counts().unwrap(), worked_chamber().unwrap()] {
            assert!(s.passed, "{s:?}");
        }
    }

    #[test]
    fn grid_shape() {
        // (1,1..4), (2,1..3), (3,1..2), (4,1) = 10 rank pairs
        assert_eq!(triple_grid(5, 0).len(), 10);
    }
}
