//! WebAssembly bindings for the `pqtriples` demo page.
//!
//! Each exported function takes plain numbers or strings and returns a JSON
//! string; errors surface as JavaScript exceptions carrying the message. The
//! `*_json` functions are the same operations for native callers and tests.

use pqtriples::chambers::{ChamberLocation, Decomposition};
use pqtriples::invariants::{census, is_allowed, minima_type, mw_bound, mw_value};
use pqtriples::stability::{dual, AlphaBound};
use pqtriples::vhs::{adjoint_grading, chain_to_higgs, classify_chain, iso_feasible, HodgeChain, MinimaVerdict};
use pqtriples::{DegreeRange, DegreeWindow, HiggsType, Rational, Surface, TripleType};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Keeps a single request small enough for an interactive page.
const MAX_RANK: u32 = 12;
const MAX_WINDOW_POINTS: usize = 201 * 201;
const MAX_CAP: i64 = 200;
const MAX_CHAIN: usize = 8;

type Outcome = Result<Value, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn check_rank(what: &str, n: u32) -> Result<(), String> {
    if n > MAX_RANK {
        return Err(format!("{what} = {n} exceeds the demo limit {MAX_RANK}"));
    }
    Ok(())
}

fn parse_rational(what: &str, s: &str) -> Result<Option<Rational>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(None);
    }
    s.parse().map(Some).map_err(|_| format!("{what}: expected an integer or a/b, got {s:?}"))
}

/// Milnor–Wood census over a degree window, with every point flagged.
pub fn census_grid_json(p: u32, q: u32, genus: u32, dv: &str, dw: &str) -> Outcome {
    check_rank("p", p)?;
    check_rank("q", q)?;
    let s = Surface::new(genus).map_err(err)?;
    let dv: DegreeRange = dv.parse().map_err(err)?;
    let dw: DegreeRange = dw.parse().map_err(err)?;
    let window = DegreeWindow::new(dv, dw).map_err(err)?;
    if dv.len().saturating_mul(dw.len()) > MAX_WINDOW_POINTS {
        return Err(format!("window has more than {MAX_WINDOW_POINTS} points"));
    }
    let points: Vec<Value> = window
        .points()
        .map(|(d_v, d_w)| -> Outcome {
            let h = HiggsType::new(p, q, d_v, d_w).map_err(err)?;
            Ok(json!({
                "d_v": d_v,
                "d_w": d_w,
                "allowed": is_allowed(&h, s).map_err(err)?,
                "mw_value": mw_value(&h).to_string(),
                "minima_type": minima_type(&h).to_string(),
            }))
        })
        .collect::<Result<_, _>>()?;
    Ok(json!({
        "bound": mw_bound(p, q, s).map_err(err)?.to_string(),
        "allowed_count": census(p, q, s, &window).map_err(err)?.len(),
        "dv": [dv.lo, dv.hi],
        "dw": [dw.lo, dw.hi],
        "points": points,
    }))
}

/// Walls and chambers on the α-line. Triples with `n1 < n2` are dualized
/// first; `cap` (required when `n1 = n2`) and `alpha` may be empty.
pub fn chamber_diagram_json(n1: u32, n2: u32, d1: i64, d2: i64, cap: &str, alpha: &str) -> Outcome {
    check_rank("n1", n1)?;
    check_rank("n2", n2)?;
    let input = TripleType::new(n1, n2, d1, d2).map_err(err)?;
    let dualized = n1 < n2;
    let t = if dualized { dual(&input) } else { input };
    let cap = parse_rational("cap", cap)?;
    if cap.is_some_and(|c| c > MAX_CAP) {
        return Err(format!("cap exceeds the demo limit {MAX_CAP}"));
    }
    let alpha = parse_rational("alpha", alpha)?;
    let dec = Decomposition::new(&t, cap).map_err(err)?;
    if let AlphaBound::Finite(am) = dec.alpha_max {
        if am > MAX_CAP {
            return Err(format!("alpha_M = {am} exceeds the demo limit {MAX_CAP}"));
        }
    }
    let walls: Vec<Value> = dec
        .walls
        .iter()
        .map(|w| {
            json!({
                "alpha": w.alpha.to_string(),
                "value": w.alpha.to_f64(),
                "witnesses": w.witnesses.iter().map(|c| [i64::from(c.n1p), i64::from(c.n2p), c.dtot]).collect::<Vec<_>>(),
            })
        })
        .collect();
    let chambers: Vec<Value> = dec
        .chambers
        .iter()
        .map(|c| json!({"lower": c.lower.to_string(), "upper": c.upper.to_string()}))
        .collect();
    let location = alpha.map(|a| match dec.locate(a) {
        ChamberLocation::Inside(c) => json!({"kind": "chamber", "lower": c.lower.to_string(), "upper": c.upper.to_string()}),
        ChamberLocation::OnWall(w) => json!({"kind": "wall", "alpha": w.alpha.to_string()}),
        ChamberLocation::OutOfRange => json!({"kind": "out_of_range"}),
    });
    Ok(json!({
        "triple": [t.n1, t.n2, t.d1, t.d2],
        "dualized": dualized,
        "alpha_max": dec.alpha_max.to_string(),
        "range_end": dec.range_end.to_string(),
        "range_end_value": dec.range_end.to_f64(),
        "walls": walls,
        "chambers": chambers,
        "location": location,
        "alpha": alpha.map(|a| a.to_string()),
        "alpha_value": alpha.map(|a| a.to_f64()),
    }))
}

/// Graded pieces of `End(E)` for a Hodge chain `r:d:S,...` and its verdict.
pub fn classify_chain_json(spec: &str, genus: u32) -> Outcome {
    let s = Surface::new(genus).map_err(err)?;
    let chain: HodgeChain = spec.parse().map_err(err)?;
    if chain.len() > MAX_CHAIN {
        return Err(format!("chains longer than {MAX_CHAIN} are outside the demo limit"));
    }
    if let Some(piece) = chain.pieces().iter().find(|p| p.rank > MAX_RANK) {
        return Err(format!("rank {} exceeds the demo limit {MAX_RANK}", piece.rank));
    }
    let grading: Vec<Value> = adjoint_grading(&chain)
        .into_iter()
        .map(|u| json!({"k": u.k, "rank": u.rank, "degree": u.degree}))
        .collect();
    let top = chain.len() as i32;
    let tests: Vec<Value> = (2..top)
        .step_by(2)
        .map(|k| json!({"k": k, "feasible": iso_feasible(&chain, k, s)}))
        .collect();
    let verdict = classify_chain(&chain, s);
    let higgs = chain_to_higgs(&chain).map_err(err)?;
    Ok(json!({
        "chain": chain.to_string(),
        "verdict": verdict.to_string(),
        "is_minimum": verdict == MinimaVerdict::Minimum,
        "grading": grading,
        "even_tests": tests,
        "higgs": [higgs.p, higgs.q, higgs.d_v, higgs.d_w],
        "allowed": is_allowed(&higgs, s).map_err(err)?,
    }))
}

fn to_js(outcome: Outcome) -> Result<String, JsError> {
    outcome.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = censusGrid)]
pub fn census_grid(p: u32, q: u32, genus: u32, dv: &str, dw: &str) -> Result<String, JsError> {
    to_js(census_grid_json(p, q, genus, dv, dw))
}

#[wasm_bindgen(js_name = chamberDiagram)]
pub fn chamber_diagram(n1: u32, n2: u32, d1: i32, d2: i32, cap: &str, alpha: &str) -> Result<String, JsError> {
    // i32 rather than i64 so JavaScript passes plain numbers, not BigInts.
    to_js(chamber_diagram_json(n1, n2, d1.into(), d2.into(), cap, alpha))
}

#[wasm_bindgen(js_name = classifyChain)]
pub fn classify(spec: &str, genus: u32) -> Result<String, JsError> {
    to_js(classify_chain_json(spec, genus))
}
