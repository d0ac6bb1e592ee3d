//! Command-line front end.
//!
//! Every command produces one [`Output`], which is rendered as JSON (the
//! canonical form), CSV or plain text. Exit codes: 0 on success, 1 on input
//! errors, 2 when an internal cross-check disagrees.

mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::chambers::{oracle_critical_values, ChamberLocation, Decomposition};
use crate::error::Error;
use crate::extension::{expected_dim, hom_complex_chi};
use crate::invariants::{
    census, default_side, higgs_to_triple, is_allowed, minima_type, mw_bound, mw_value, triple_to_higgs, DegreeRange,
    DegreeWindow, HiggsType, Surface, TripleSide, TripleType,
};
use crate::rational::Rational;
use crate::stability::dual;
use crate::sweeps;
use crate::vhs::{adjoint_grading, chain_to_higgs, classify_chain, HodgeChain, MinimaVerdict};

pub use output::{Output, Table};

pub const SCHEMA_VERSION: &str = "1";

const MAX_RANK: u32 = 100;
const MAX_ABS_DEGREE: i64 = 100_000;
/// Bound on `range_end · (n1 + n2)²`, the number of candidate walls.
const MAX_WALL_CANDIDATES: i64 = 5_000_000;
/// The oracle scan is only run when this cheap.
const MAX_ORACLE_WORK: i64 = 2_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "pqtriples",
    version,
    about = "Exact invariants, stability chambers and Hodge-chain checks for U(p,q)-Higgs bundles and triples"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Reserved: no command uses randomness. Always rejected.
    #[arg(long, global = true, hide = true)]
    pub seedless: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the Milnor–Wood allowed (d_V, d_W) in a window.
    Census(CensusArgs),
    /// Translate between Higgs and triple invariants.
    Translate(TranslateArgs),
    /// Walls and chambers of the alpha-line for a triple.
    Chambers(ChamberArgs),
    /// Walls with all witnessing subtriple classes.
    Walls(ChamberArgs),
    /// Euler characteristic of the triple extension complex.
    Chi(ChiArgs),
    /// Minima type of a Higgs type, or classification of a Hodge chain.
    Minima(MinimaArgs),
    /// Run every cross-check sweep.
    Check,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long = "p")]
    pub p: u32,
    #[arg(long = "q")]
    pub q: u32,
    #[arg(long)]
    pub genus: u32,
    /// d_V window, "lo:hi" or a single integer.
    #[arg(long, allow_hyphen_values = true)]
    pub dv: DegreeRange,
    /// d_W window, "lo:hi" or a single integer.
    #[arg(long, allow_hyphen_values = true)]
    pub dw: DegreeRange,
}

#[derive(Debug, Args)]
pub struct TranslateArgs {
    #[arg(long)]
    pub genus: u32,
    #[arg(long = "p", requires_all = ["q", "dv", "dw"], conflicts_with_all = ["n1", "n2", "d1", "d2"])]
    pub p: Option<u32>,
    #[arg(long = "q")]
    pub q: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub dv: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub dw: Option<i64>,
    #[arg(long, requires_all = ["n2", "d1", "d2"])]
    pub n1: Option<u32>,
    #[arg(long)]
    pub n2: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub d1: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub d2: Option<i64>,
    /// Side of the correspondence for triple → Higgs; both when omitted.
    #[arg(long, value_enum)]
    pub side: Option<SideArg>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    #[value(name = "CZero", alias = "c-zero")]
    CZero,
    #[value(name = "BZero", alias = "b-zero")]
    BZero,
}

impl From<SideArg> for TripleSide {
    fn from(s: SideArg) -> Self {
        match s {
            SideArg::CZero => TripleSide::CZero,
            SideArg::BZero => TripleSide::BZero,
        }
    }
}

#[derive(Debug, Args)]
pub struct ChamberArgs {
    #[arg(long)]
    pub n1: u32,
    #[arg(long)]
    pub n2: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub d1: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub d2: i64,
    /// Upper end of the alpha-range when n1 = n2.
    #[arg(long)]
    pub cap: Option<Rational>,
    /// Locate alpha = 2g - 2 (and set the default cap).
    #[arg(long)]
    pub genus: Option<u32>,
    /// Locate this alpha.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct ChiArgs {
    #[arg(long)]
    pub n1: u32,
    #[arg(long)]
    pub n2: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub d1: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub d2: i64,
    #[arg(long)]
    pub genus: u32,
    /// Quotient triple T'' as "n1,n2,d1,d2"; defaults to the triple itself.
    #[arg(long, allow_hyphen_values = true)]
    pub quotient: Option<String>,
}

#[derive(Debug, Args)]
pub struct MinimaArgs {
    /// Hodge chain "rank:degree:side,...", e.g. "1:2:V,1:1:W,1:0:V".
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["p", "q", "dv", "dw"])]
    pub chain: Option<HodgeChain>,
    #[arg(long)]
    pub genus: Option<u32>,
    #[arg(long = "p", requires_all = ["q", "dv", "dw"])]
    pub p: Option<u32>,
    #[arg(long = "q")]
    pub q: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub dv: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub dw: Option<i64>,
}

/// Failure modes of a command, mapped onto exit codes.
#[derive(Debug)]
pub enum Failure {
    Input(Error),
    /// An internal cross-check failed; the output is still emitted.
    Violation(Box<Output>),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

fn input(msg: impl Into<String>) -> Failure {
    Failure::Input(Error::Parse {
        what: "arguments",
        input: msg.into(),
    })
}

/// Parses `args` (including the program name), runs the command and writes
/// the result to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    1
                }
            };
        }
    };
    if cli.seedless {
        let _ = writeln!(err, "error: --seedless is reserved; no command uses randomness");
        return 1;
    }
    let (code, output) = match execute(&cli.command) {
        Ok(o) => (0, o),
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
        Err(Failure::Violation(o)) => (2, *o),
    };
    if let Err(e) = output.render(cli.format, out) {
        let _ = writeln!(err, "error: {e}");
        return 1;
    }
    code
}

pub fn execute(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Census(a) => run_census(a),
        Command::Translate(a) => run_translate(a),
        Command::Chambers(a) => run_chambers(a, false),
        Command::Walls(a) => run_chambers(a, true),
        Command::Chi(a) => run_chi(a),
        Command::Minima(a) => run_minima(a),
        Command::Check => run_check(),
    }
}

fn check_rank(n: u32) -> Result<(), Failure> {
    if n > MAX_RANK {
        return Err(input(format!("rank {n} exceeds {MAX_RANK}")));
    }
    Ok(())
}

fn check_degree(d: i64) -> Result<(), Failure> {
    if d.abs() > MAX_ABS_DEGREE {
        return Err(input(format!("degree {d} exceeds {MAX_ABS_DEGREE} in absolute value")));
    }
    Ok(())
}

fn checked_higgs(p: u32, q: u32, d_v: i64, d_w: i64) -> Result<HiggsType, Failure> {
    check_rank(p)?;
    check_rank(q)?;
    check_degree(d_v)?;
    check_degree(d_w)?;
    Ok(HiggsType::new(p, q, d_v, d_w)?)
}

fn checked_triple(n1: u32, n2: u32, d1: i64, d2: i64) -> Result<TripleType, Failure> {
    check_rank(n1)?;
    check_rank(n2)?;
    check_degree(d1)?;
    check_degree(d2)?;
    Ok(TripleType::new(n1, n2, d1, d2)?)
}

fn run_census(a: &CensusArgs) -> Result<Output, Failure> {
    let surface = Surface::new(a.genus)?;
    for r in [a.dv, a.dw] {
        check_degree(r.lo)?;
        check_degree(r.hi)?;
    }
    if a.dv.len().saturating_mul(a.dw.len()) > 4_000_000 {
        return Err(input("census window has more than 4000000 points"));
    }
    check_rank(a.p)?;
    check_rank(a.q)?;
    let window = DegreeWindow::new(a.dv, a.dw)?;
    let bound = mw_bound(a.p, a.q, surface)?;
    let allowed = census(a.p, a.q, surface, &window)?;

    let rows: Vec<Value> = allowed
        .iter()
        .map(|h| json!({"d_v": h.d_v, "d_w": h.d_w, "mw_value": mw_value(h), "minima_type": minima_type(h)}))
        .collect();
    let mut table = Table::new(["d_v", "d_w", "mw_value", "minima_type"]);
    for h in &allowed {
        table.push([h.d_v.to_string(), h.d_w.to_string(), mw_value(h).to_string(), minima_type(h).to_string()]);
    }
    let mut text = format!(
        "p={} q={} genus={} window d_V {} x d_W {}\nbound min(p,q)(g-1) = {bound}\n{} allowed pairs\n",
        a.p,
        a.q,
        a.genus,
        a.dv,
        a.dw,
        allowed.len()
    );
    for h in &allowed {
        text.push_str(&format!("  ({}, {})  |q dV - p dW|/(p+q) = {}\n", h.d_v, h.d_w, mw_value(h)));
    }
    Ok(Output {
        command: "census",
        params: json!({"p": a.p, "q": a.q, "genus": a.genus, "dv": a.dv.to_string(), "dw": a.dw.to_string()}),
        result: json!({"bound": bound, "count": allowed.len(), "pairs": rows}),
        table,
        text,
        provenance: "formula: |q d_V - p d_W|/(p+q) <= min(p,q)(g-1), boundary included".into(),
    })
}

fn triple_json(t: &TripleType) -> Value {
    json!({"n1": t.n1, "n2": t.n2, "d1": t.d1, "d2": t.d2})
}

fn higgs_json(h: &HiggsType) -> Value {
    json!({"p": h.p, "q": h.q, "d_v": h.d_v, "d_w": h.d_w})
}

fn run_translate(a: &TranslateArgs) -> Result<Output, Failure> {
    let surface = Surface::new(a.genus)?;
    if let (Some(p), Some(q), Some(d_v), Some(d_w)) = (a.p, a.q, a.dv, a.dw) {
        let h = checked_higgs(p, q, d_v, d_w)?;
        let kind = minima_type(&h);
        let allowed = is_allowed(&h, surface)?;
        let c = higgs_to_triple(&h, surface, TripleSide::CZero);
        let b = higgs_to_triple(&h, surface, TripleSide::BZero);
        let side = default_side(kind);
        let mut table = Table::new(["side", "n1", "n2", "d1", "d2", "minima_type", "minimum_side"]);
        for (s, t) in [(TripleSide::CZero, c), (TripleSide::BZero, b)] {
            table.push([
                s.to_string(),
                t.n1.to_string(),
                t.n2.to_string(),
                t.d1.to_string(),
                t.d2.to_string(),
                kind.to_string(),
                (s == side).to_string(),
            ]);
        }
        let text = format!(
            "Higgs {h}, genus {}\nminima_type = {kind}\nMilnor-Wood: {} <= {} is {allowed}\nCZero triple {c}\nBZero triple {b}\nminimum side {side}\n",
            a.genus,
            mw_value(&h),
            mw_bound(p, q, surface)?
        );
        return Ok(Output {
            command: "translate",
            params: json!({"genus": a.genus, "p": p, "q": q, "dv": d_v, "dw": d_w}),
            result: json!({
                "higgs": higgs_json(&h),
                "minima_type": kind,
                "allowed": allowed,
                "mw_value": mw_value(&h),
                "triples": {"CZero": triple_json(&c), "BZero": triple_json(&b)},
                "minimum_side": side,
            }),
            table,
            text,
            provenance: "formula: CZero (p,q,d_V+p(2g-2),d_W); BZero (q,p,d_W+q(2g-2),d_V)".into(),
        });
    }
    if let (Some(n1), Some(n2), Some(d1), Some(d2)) = (a.n1, a.n2, a.d1, a.d2) {
        let t = checked_triple(n1, n2, d1, d2)?;
        let sides: Vec<TripleSide> = match a.side {
            Some(s) => vec![s.into()],
            None => vec![TripleSide::CZero, TripleSide::BZero],
        };
        let mut table = Table::new(["side", "p", "q", "d_v", "d_w", "minima_type"]);
        let mut result = serde_json::Map::new();
        let mut text = format!("triple {t}, genus {}\n", a.genus);
        for s in sides {
            let h = triple_to_higgs(&t, surface, s)?;
            table.push([
                s.to_string(),
                h.p.to_string(),
                h.q.to_string(),
                h.d_v.to_string(),
                h.d_w.to_string(),
                minima_type(&h).to_string(),
            ]);
            text.push_str(&format!("{s}: Higgs {h}, minima_type {}\n", minima_type(&h)));
            result.insert(s.to_string(), json!({"higgs": higgs_json(&h), "minima_type": minima_type(&h)}));
        }
        return Ok(Output {
            command: "translate",
            params: json!({"genus": a.genus, "n1": n1, "n2": n2, "d1": d1, "d2": d2, "side": a.side.map(|s| TripleSide::from(s).to_string())}),
            result: json!({"triple": triple_json(&t), "higgs": Value::Object(result)}),
            table,
            text,
            provenance: "formula: inverse of the Higgs-to-triple degree shift".into(),
        });
    }
    Err(input("translate needs either --p --q --dv --dw or --n1 --n2 --d1 --d2"))
}

fn location_json(loc: &ChamberLocation) -> Value {
    match loc {
        ChamberLocation::Inside(c) => json!({"kind": "inside", "chamber": c}),
        ChamberLocation::OnWall(w) => json!({"kind": "on_wall", "wall": w}),
        ChamberLocation::OutOfRange => json!({"kind": "out_of_range"}),
    }
}

fn location_text(loc: &ChamberLocation) -> String {
    match loc {
        ChamberLocation::Inside(c) => format!("inside chamber ({}, {})", c.lower, c.upper),
        ChamberLocation::OnWall(w) => format!("on wall {}", w.alpha),
        ChamberLocation::OutOfRange => "out of range".into(),
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn run_chambers(a: &ChamberArgs, witnesses: bool) -> Result<Output, Failure> {
    let given = checked_triple(a.n1, a.n2, a.d1, a.d2)?;
    if given.n1 == 0 || given.n2 == 0 {
        return Err(Error::NonPositiveRank.into());
    }
    let surface = a.genus.map(Surface::new).transpose()?;
    let (t, dualized) = if given.n1 < given.n2 { (dual(&given), true) } else { (given, false) };

    let mut cap_note = None;
    let cap = match (t.n1 == t.n2, a.cap) {
        (true, None) => {
            let g = i64::from(surface.map_or(2, |s| s.genus()));
            let c = (4 * g).max(2 * (2 * g - 2) + 1);
            cap_note = Some(format!(
                "n1 = n2: default cap max(4g, 2(2g-2)+1) = {c} with g = {g}{}",
                if surface.is_none() { " (no --genus given)" } else { "" }
            ));
            Some(Rational::integer(c))
        }
        (_, c) => c,
    };
    if let Some(c) = cap {
        if c.abs() > MAX_ABS_DEGREE {
            return Err(input(format!("cap {c} is too large")));
        }
    }
    let range_end = crate::chambers::alpha_range_end(&t, cap)?;
    let n = t.total_rank();
    if range_end.max(Rational::ZERO) * (n * n) > MAX_WALL_CANDIDATES {
        return Err(input(format!("alpha-range [0, {range_end}] is too wide to enumerate")));
    }
    let d = Decomposition::new(&t, cap)?;

    // Cross-check against the independent scan when it is cheap.
    let work = (d.range_end.max(Rational::ZERO) * (n * n * n * n)).ceil();
    let oracle = if work <= MAX_ORACLE_WORK {
        Some(oracle_critical_values(&t, cap)? == d.wall_alphas())
    } else {
        None
    };

    let mut locate = serde_json::Map::new();
    let mut text = String::new();
    if dualized {
        text.push_str(&format!("n1 < n2: dualized {given} -> {t}\n"));
    }
    text.push_str(&format!("triple {t}\nalpha_M = {}\n", d.alpha_max));
    if let Some(note) = &cap_note {
        text.push_str(&format!("{note}\n"));
    }
    text.push_str(&format!("range [0, {}]\n", d.range_end));
    text.push_str(&format!("walls: {}\n", join(d.wall_alphas())));
    if witnesses {
        for w in &d.walls {
            text.push_str(&format!("  {}: {}\n", w.alpha, join(&w.witnesses)));
        }
    } else {
        text.push_str(&format!(
            "chambers: {}\n",
            join(d.chambers.iter().map(|c| format!("({}, {})", c.lower, c.upper)))
        ));
    }
    if let Some(s) = surface {
        let alpha = Rational::integer(s.canonical_degree());
        let loc = d.locate(alpha);
        text.push_str(&format!("alpha = 2g-2 = {alpha}: {}\n", location_text(&loc)));
        locate.insert("alpha_2g_2".into(), json!({"alpha": alpha, "location": location_json(&loc)}));
    }
    if let Some(alpha) = a.alpha {
        let loc = d.locate(alpha);
        text.push_str(&format!("alpha = {alpha}: {}\n", location_text(&loc)));
        locate.insert("alpha".into(), json!({"alpha": alpha, "location": location_json(&loc)}));
    }
    match oracle {
        Some(true) => text.push_str("oracle scan agrees\n"),
        Some(false) => text.push_str("ORACLE SCAN DISAGREES\n"),
        None => text.push_str("oracle scan skipped (range too wide)\n"),
    }

    let mut table;
    if witnesses {
        table = Table::new(["alpha", "n1p", "n2p", "dtot"]);
        for w in &d.walls {
            for c in &w.witnesses {
                table.push([w.alpha.to_string(), c.n1p.to_string(), c.n2p.to_string(), c.dtot.to_string()]);
            }
        }
    } else {
        table = Table::new(["kind", "alpha", "lower", "upper"]);
        for w in &d.walls {
            table.push(["wall".to_string(), w.alpha.to_string(), String::new(), String::new()]);
        }
        for c in &d.chambers {
            table.push(["chamber".to_string(), String::new(), c.lower.to_string(), c.upper.to_string()]);
        }
    }

    let mut result = json!({
        "triple": triple_json(&t),
        "alpha_max": d.alpha_max.to_string(),
        "range_end": d.range_end,
        "oracle_agrees": oracle,
    });
    let obj = result.as_object_mut().expect("object");
    if witnesses {
        obj.insert("walls".into(), json!(d.walls));
    } else {
        obj.insert("walls".into(), json!(d.wall_alphas()));
        obj.insert("chambers".into(), json!(d.chambers));
    }
    if dualized {
        obj.insert("dualized_from".into(), triple_json(&given));
    }
    if let Some(c) = cap {
        obj.insert("cap".into(), json!(c));
    }
    if !locate.is_empty() {
        obj.insert("locate".into(), Value::Object(locate));
    }
    let provenance = match oracle {
        Some(_) => "formula: wall enumeration; cross-checked by denominator-bounded oracle scan",
        None => "formula: wall enumeration; oracle scan skipped",
    };
    let output = Output {
        command: if witnesses { "walls" } else { "chambers" },
        params: json!({
            "n1": a.n1, "n2": a.n2, "d1": a.d1, "d2": a.d2,
            "cap": a.cap, "genus": a.genus, "alpha": a.alpha,
        }),
        result,
        table,
        text,
        provenance: match &cap_note {
            Some(note) => format!("{provenance}; {note}"),
            None => provenance.into(),
        },
    };
    if oracle == Some(false) {
        return Err(Failure::Violation(Box::new(output)));
    }
    Ok(output)
}

fn parse_triple(s: &str) -> Result<TripleType, Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || {
        Failure::Input(Error::Parse {
            what: "triple n1,n2,d1,d2",
            input: s.to_string(),
        })
    };
    if parts.len() != 4 {
        return Err(bad());
    }
    let n1 = parts[0].parse().map_err(|_| bad())?;
    let n2 = parts[1].parse().map_err(|_| bad())?;
    let d1 = parts[2].parse().map_err(|_| bad())?;
    let d2 = parts[3].parse().map_err(|_| bad())?;
    checked_triple(n1, n2, d1, d2)
}

fn run_chi(a: &ChiArgs) -> Result<Output, Failure> {
    let surface = Surface::new(a.genus)?;
    let sub = checked_triple(a.n1, a.n2, a.d1, a.d2)?;
    let quotient = match &a.quotient {
        Some(s) => parse_triple(s)?,
        None => sub,
    };
    let rep = hom_complex_chi(&quotient, &sub, surface);
    let dim = (a.quotient.is_none() && sub.n1 > 0 && sub.n2 > 0).then(|| expected_dim(&sub, surface));

    let mut table = Table::new(["chi_term0", "chi_term1", "chi_total", "expected_dim"]);
    table.push([
        rep.chi_term0.to_string(),
        rep.chi_term1.to_string(),
        rep.chi_total.to_string(),
        dim.map(|d| d.to_string()).unwrap_or_default(),
    ]);
    let mut text = format!(
        "extensions of T'' = {quotient} by T' = {sub}, genus {}\nchi(C0) = {}\nchi(C1) = {}\nchi = {}\n",
        a.genus, rep.chi_term0, rep.chi_term1, rep.chi_total
    );
    if let Some(d) = dim {
        text.push_str(&format!("expected dimension 1 - chi(T,T) = {d}\n"));
    }
    Ok(Output {
        command: "chi",
        params: json!({"n1": a.n1, "n2": a.n2, "d1": a.d1, "d2": a.d2, "genus": a.genus, "quotient": a.quotient}),
        result: json!({
            "sub": triple_json(&sub),
            "quotient": triple_json(&quotient),
            "chi": rep,
            "expected_dim": dim,
        }),
        table,
        text,
        provenance: "formula: Riemann-Roch chi = d + n(1-g) on each term of the extension complex".into(),
    })
}

fn run_minima(a: &MinimaArgs) -> Result<Output, Failure> {
    if let Some(chain) = &a.chain {
        let genus = a.genus.ok_or_else(|| input("minima --chain needs --genus"))?;
        let surface = Surface::new(genus)?;
        if chain.len() > 64 {
            return Err(input("chains longer than 64 pieces are not supported"));
        }
        for p in chain.pieces() {
            check_rank(p.rank)?;
            check_degree(p.degree)?;
        }
        let grading = adjoint_grading(chain);
        let verdict = classify_chain(chain, surface);
        let higgs = chain_to_higgs(chain).ok();
        let mut table = Table::new(["k", "rank", "degree"]);
        for u in &grading {
            table.push([u.k.to_string(), u.rank.to_string(), u.degree.to_string()]);
        }
        let mut text = format!("chain {chain} (m = {}), genus {genus}\n", chain.len());
        for u in &grading {
            text.push_str(&format!("  U_{}: rank {}, degree {}\n", u.k, u.rank, u.degree));
        }
        text.push_str(&format!("verdict: {verdict}\n"));
        if let Some(h) = &higgs {
            text.push_str(&format!("Higgs type {h}\n"));
        }
        let obstruction = match verdict {
            MinimaVerdict::NotMinimumNumerical(k) => Some(k),
            _ => None,
        };
        return Ok(Output {
            command: "minima",
            params: json!({"chain": chain.to_string(), "genus": genus}),
            result: json!({
                "chain": chain,
                "length": chain.len(),
                "grading": grading,
                "verdict": verdict.to_string(),
                "obstruction_k": obstruction,
                "higgs": higgs.as_ref().map(higgs_json),
            }),
            table,
            text,
            provenance: "formula: rank/degree test of U_k -> U_{k+1} (x) K at even k >= 2; length >= 3 is never a minimum"
                .into(),
        });
    }
    if let (Some(p), Some(q), Some(d_v), Some(d_w)) = (a.p, a.q, a.dv, a.dw) {
        let h = checked_higgs(p, q, d_v, d_w)?;
        let kind = minima_type(&h);
        let mut table = Table::new(["p", "q", "d_v", "d_w", "minima_type"]);
        table.push([p.to_string(), q.to_string(), d_v.to_string(), d_w.to_string(), kind.to_string()]);
        return Ok(Output {
            command: "minima",
            params: json!({"p": p, "q": q, "dv": d_v, "dw": d_w}),
            result: json!({"higgs": higgs_json(&h), "minima_type": kind}),
            table,
            text: format!("Higgs {h}: minima_type {kind}\n"),
            provenance: "formula: compare d_V/p with d_W/q".into(),
        });
    }
    Err(input("minima needs --chain or --p --q --dv --dw"))
}

fn run_check() -> Result<Output, Failure> {
    let outcomes = sweeps::run_all()?;
    let passed = outcomes.iter().all(|o| o.passed);
    let mut table = Table::new(["sweep", "passed", "checked", "failures"]);
    let mut text = String::new();
    for o in &outcomes {
        table.push([o.name.to_string(), o.passed.to_string(), o.checked.to_string(), o.failures.len().to_string()]);
        text.push_str(&format!(
            "[{}] {} ({} checks)\n",
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.checked
        ));
        for f in &o.failures {
            text.push_str(&format!("    {f}\n"));
        }
        if !o.note.is_empty() {
            text.push_str(&format!("    {}\n", o.note));
        }
    }
    let output = Output {
        command: "check",
        params: json!({}),
        result: json!({"passed": passed, "sweeps": outcomes}),
        table,
        text,
        provenance: "formula vs independent oracles (denominator scan, closed forms, exhaustive grids)".into(),
    };
    if passed {
        Ok(output)
    } else {
        Err(Failure::Violation(Box::new(output)))
    }
}
