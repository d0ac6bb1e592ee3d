//! Acceptance criteria, one line per criterion. Exits non-zero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use pqtriples::chambers::{
    chamber_of, critical_values, normalized_minima_triple, numerical_walls, oracle_critical_values, alpha_range_end,
    ChamberLocation,
};
use pqtriples::extension::expected_dim;
use pqtriples::invariants::{census, higgs_to_triple, is_allowed, mw_bound, mw_value, triple_to_higgs};
use pqtriples::stability::{alpha_max, dual, AlphaBound};
use pqtriples::vhs::{adjoint_grading, classify_chain, HodgeChain, MinimaVerdict, Side};
use pqtriples::{DegreeRange, DegreeWindow, HiggsType, Rational, Surface, TripleSide, TripleType};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn g(genus: u32) -> Surface {
    Surface::new(genus).unwrap()
}

fn r(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

/// Triples with n1, n2 ≥ 1 and n1 + n2 ≤ max_rank, |d_i| ≤ max_degree.
fn grid(max_rank: u32, max_degree: i64) -> impl Iterator<Item = TripleType> {
    (1..max_rank).flat_map(move |n1| {
        (1..=max_rank - n1).flat_map(move |n2| {
            (-max_degree..=max_degree)
                .flat_map(move |d1| (-max_degree..=max_degree).map(move |d2| TripleType { n1, n2, d1, d2 }))
        })
    })
}

fn cap_for(t: &TripleType) -> Option<Rational> {
    (t.n1 == t.n2).then(|| Rational::integer(10))
}

fn wall_alphas(t: &TripleType) -> Vec<Rational> {
    critical_values(t, cap_for(t)).unwrap().into_iter().map(|w| w.alpha).collect()
}

fn mw_census() -> Outcome {
    let start = Instant::now();
    let a = census(1, 1, g(2), &DegreeWindow::square(0, 3).unwrap()).unwrap().len();
    let strip = DegreeWindow::new(DegreeRange::new(0, 3).unwrap(), DegreeRange::new(0, 1).unwrap()).unwrap();
    let b = census(2, 1, g(2), &strip).unwrap().len();
    ensure(a == 14, || format!("p=q=1: {a} pairs"))?;
    ensure(b == 8, || format!("p=2,q=1: {b} pairs"))?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("14 and 8 pairs in {:?}", start.elapsed()))
}

fn mw_alpha_equivalence() -> Outcome {
    let start = Instant::now();
    let (mut checked, mut boundary) = (0, 0);
    for genus in 2..=4 {
        let s = g(genus);
        let target = Rational::integer(2 * i64::from(genus) - 2);
        for p in 1..=4u32 {
            for q in (1..=4u32).filter(|&q| q != p) {
                for d_v in -10..=10 {
                    for d_w in -10..=10 {
                        let h = HiggsType::new(p, q, d_v, d_w).unwrap();
                        let (t, _) = normalized_minima_triple(&h, s);
                        let AlphaBound::Finite(am) = alpha_max(&t).unwrap() else {
                            return Err(format!("{h}: unbounded alpha_M"));
                        };
                        let allowed = is_allowed(&h, s).unwrap();
                        let equality = mw_value(&h) == mw_bound(p, q, s).unwrap();
                        ensure(allowed == (target <= am), || format!("g={genus} {h}: allowed={allowed}, alpha_M={am}"))?;
                        ensure(equality == (target == am), || format!("g={genus} {h}: boundary mismatch, alpha_M={am}"))?;
                        checked += 1;
                        boundary += usize::from(equality);
                    }
                }
            }
        }
    }
    // The worked boundary instance.
    let h = HiggsType::new(2, 1, 3, 0).unwrap();
    let (t, dualized) = normalized_minima_triple(&h, g(2));
    ensure(dualized && t == TripleType::new(2, 1, -3, -2).unwrap(), || format!("minima triple {t}"))?;
    ensure(alpha_max(&t).unwrap() == AlphaBound::Finite(2.into()), || "alpha_M != 2".into())?;
    ensure(mw_value(&h) == mw_bound(2, 1, g(2)).unwrap(), || "MW not an equality".into())?;
    within(start, Duration::from_secs(30))?;
    Ok(format!("{checked} points, {boundary} boundary, 0 violations in {:?}", start.elapsed()))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for t in grid(5, 6) {
        let t = if t.n1 < t.n2 { dual(&t) } else { t };
        let fast = wall_alphas(&t);
        let slow = oracle_critical_values(&t, cap_for(&t)).unwrap();
        ensure(fast == slow, || format!("{t}: {fast:?} vs oracle {slow:?}"))?;
        checked += 1;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{checked} triples agree in {:?}", start.elapsed()))
}

fn worked_chamber() -> Outcome {
    let t = TripleType::new(2, 1, 3, 0).unwrap();
    ensure(alpha_max(&t).unwrap() == AlphaBound::Finite(6.into()), || "alpha_M != 6".into())?;
    let walls = wall_alphas(&t);
    let expected = vec![r(0, 1), r(3, 2), r(3, 1), r(9, 2), r(6, 1)];
    ensure(walls == expected, || format!("walls {walls:?}"))?;
    match chamber_of(&t, 2.into(), None).unwrap() {
        ChamberLocation::Inside(c) if c.lower == r(3, 2) && c.upper == 3 => {}
        other => return Err(format!("alpha=2: {other:?}")),
    }
    match chamber_of(&t, 3.into(), None).unwrap() {
        ChamberLocation::OnWall(w) if w.alpha == 3 => {}
        other => return Err(format!("alpha=3: {other:?}")),
    }
    Ok("alpha_M=6, walls {0, 3/2, 3, 9/2, 6}, alpha=2 in (3/2, 3), alpha=3 on wall".into())
}

fn expected_dimension() -> Outcome {
    let mut checked = 0;
    let d = expected_dim(&TripleType::new(2, 1, 3, 0).unwrap(), g(2));
    ensure(d == 7, || format!("(2,1,3,0), g=2: {d}"))?;
    for genus in 2..=4u32 {
        for t in grid(6, 6) {
            let (n1, n2) = (i64::from(t.n1), i64::from(t.n2));
            let closed = (i64::from(genus) - 1) * (n1 * n1 + n2 * n2 - n1 * n2) + n2 * t.d1 - n1 * t.d2 + 1;
            let d = expected_dim(&t, g(genus));
            ensure(d == closed, || format!("{t}, g={genus}: {d} vs {closed}"))?;
            for c in -3..=3 {
                let tw = TripleType { d1: t.d1 + c * n1, d2: t.d2 + c * n2, ..t };
                ensure(expected_dim(&tw, g(genus)) == d, || format!("{t} twist {c}, g={genus}"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (triple, genus) points match the closed form; twist invariant"))
}

fn each_chain(m: usize, first: Side, mut f: impl FnMut(&HodgeChain)) {
    // ranks in 1..=3, degrees in -3..=3, enumerated as mixed-radix counters
    let rank_count = 3usize.pow(m as u32);
    let degree_count = 7usize.pow(m as u32);
    let mut ranks = vec![0u32; m];
    let mut degrees = vec![0i64; m];
    for ri in 0..rank_count {
        let mut x = ri;
        for slot in ranks.iter_mut() {
            *slot = (x % 3) as u32 + 1;
            x /= 3;
        }
        for di in 0..degree_count {
            let mut y = di;
            for slot in degrees.iter_mut() {
                *slot = (y % 7) as i64 - 3;
                y /= 7;
            }
            f(&HodgeChain::alternating(first, &ranks, &degrees).unwrap());
        }
    }
}

fn vhs_minima() -> Outcome {
    let mut summary = Vec::new();
    for genus in [2, 3] {
        for m in 1..=5usize {
            let (mut total, mut by_lemma, mut failure) = (0usize, 0usize, None);
            for first in [Side::V, Side::W] {
                each_chain(m, first, |c| {
                    total += 1;
                    let verdict = classify_chain(c, g(genus));
                    let ok = match verdict {
                        MinimaVerdict::Minimum => m <= 2,
                        MinimaVerdict::NotMinimumNumerical(k) => m >= 3 && k >= 2 && k % 2 == 0,
                        MinimaVerdict::NotMinimumByLemma => {
                            by_lemma += 1;
                            m >= 3
                        }
                    };
                    if genus == 2 {
                        let n: u64 = c.pieces().iter().map(|p| u64::from(p.rank)).sum();
                        let u = adjoint_grading(c);
                        let sums_ok = u.iter().map(|x| x.rank).sum::<u64>() == n * n
                            && u.iter().map(|x| x.degree).sum::<i64>() == 0;
                        if !sums_ok && failure.is_none() {
                            failure = Some(format!("{c}: grading sums"));
                        }
                    }
                    if !ok && failure.is_none() {
                        failure = Some(format!("{c}, g={genus}: {verdict}"));
                    }
                });
            }
            if let Some(f) = failure {
                return Err(f);
            }
            if m >= 3 && (m - 1) % 2 == 0 {
                ensure(by_lemma == 0, || format!("g={genus} m={m}: {by_lemma} chains fell back to the lemma"))?;
            }
            if by_lemma > 0 {
                summary.push(format!("g={genus} m={m}: {by_lemma}/{total} by lemma"));
            }
        }
    }
    Ok(format!(
        "m<=2 minimum, m>=3 never; odd m always numerical; even-m lemma fallbacks: {}",
        if summary.is_empty() { "none".to_string() } else { summary.join(", ") }
    ))
}

fn duality_twist_roundtrip() -> Outcome {
    let mut checked = 0;
    for t in grid(5, 6).filter(|t| t.n1 >= t.n2) {
        let walls = wall_alphas(&t);
        let end = alpha_range_end(&t, cap_for(&t)).unwrap();
        let dual_walls: Vec<Rational> = numerical_walls(&dual(&t), end).into_iter().map(|w| w.alpha).collect();
        ensure(walls == dual_walls, || format!("{t}: dual walls differ"))?;
        ensure(dual(&dual(&t)) == t, || format!("{t}: dual not an involution"))?;
        let am = alpha_max(&t).unwrap();
        for c in -3..=3 {
            let tw = TripleType { d1: t.d1 + c * i64::from(t.n1), d2: t.d2 + c * i64::from(t.n2), ..t };
            ensure(alpha_max(&tw).unwrap() == am, || format!("{t} twist {c}: alpha_M"))?;
            ensure(wall_alphas(&tw) == walls, || format!("{t} twist {c}: walls"))?;
        }
        checked += 1;
    }

    let mut runner = TestRunner::new_with_rng(
        Config { cases: 10_000, ..Config::default() },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    );
    let strategy = (1u32..=50, 1u32..=50, -10_000i64..=10_000, -10_000i64..=10_000, 2u32..=50, proptest::bool::ANY);
    for _ in 0..10_000 {
        let (p, q, d_v, d_w, genus, c_side) = strategy.new_tree(&mut runner).unwrap().current();
        let h = HiggsType::new(p, q, d_v, d_w).unwrap();
        let side = if c_side { TripleSide::CZero } else { TripleSide::BZero };
        let back = triple_to_higgs(&higgs_to_triple(&h, g(genus), side), g(genus), side).unwrap();
        ensure(back == h, || format!("{h}, g={genus}, {side}: roundtrip gave {back}"))?;
    }
    Ok(format!("{checked} triples duality/twist invariant; 10000 random roundtrips exact"))
}

fn cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_pqtriples")).args(args).output().expect("run binary")
}

fn cli_determinism() -> Outcome {
    let requests: [&[&str]; 6] = [
        &["census", "--p", "1", "--q", "1", "--genus", "2", "--dv", "0:3", "--dw", "0:3", "--format", "csv"],
        &["chambers", "--n1", "2", "--n2", "1", "--d1", "3", "--d2", "0"],
        &["walls", "--n1", "2", "--n2", "1", "--d1", "3", "--d2", "0", "--format", "csv"],
        &["translate", "--p", "2", "--q", "3", "--dv", "0", "--dw", "0", "--genus", "2"],
        &["chi", "--n1", "2", "--n2", "1", "--d1", "3", "--d2", "0", "--genus", "2", "--format", "text"],
        &["minima", "--chain", "1:2:V,1:1:W,1:0:V", "--genus", "2"],
    ];
    for args in requests {
        let (a, b) = (cli(args), cli(args));
        ensure(a.status.code() == Some(0), || format!("{args:?}: exit {:?}", a.status.code()))?;
        ensure(a.stdout == b.stdout && !a.stdout.is_empty(), || format!("{args:?}: output differs between runs"))?;
    }
    let census_rows = String::from_utf8(cli(requests[0]).stdout).unwrap().lines().count() - 1;
    ensure(census_rows == 14, || format!("census csv has {census_rows} rows"))?;

    let start = Instant::now();
    let check = cli(&["check", "--format", "text"]);
    ensure(check.status.code() == Some(0), || {
        format!("check exit {:?}:\n{}", check.status.code(), String::from_utf8_lossy(&check.stdout))
    })?;
    Ok(format!("6 commands byte-identical across runs; check exits 0 in {:?}", start.elapsed()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("Milnor-Wood census", mw_census),
        ("MW <=> alpha_M equivalence at alpha = 2g-2", mw_alpha_equivalence),
        ("chamber oracle equivalence", oracle_equivalence),
        ("worked chamber instance (2,1,3,0)", worked_chamber),
        ("expected-dimension cross-check", expected_dimension),
        ("VHS minima suite", vhs_minima),
        ("duality, twist invariance, translation roundtrip", duality_twist_roundtrip),
        ("CLI determinism and check", cli_determinism),
    ];
    let mut failed = 0;
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
