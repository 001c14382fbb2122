//! Command-line front end: `factor`, `report`, `reproduce` and `search`.

pub mod reproduce;
pub mod search;

use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::analysis::{gray_params, weight_enumerator, Metric, DEFAULT_CAP};
use crate::codes::{classify_cyclic, crt_decompose, generator_count_bounds, GqcCode};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::onegen::{distance_lower_bound, minimal_generating_set, minimal_generating_set_unchecked, OneGenSpec};
use crate::poly::factor_cyclotomic;
use crate::qc::{check_thm55, construct_cor52, euclid_dual, fq_distance, product_bound, GaloisExtR, QcCode};

use reproduce::{Outcome, EXAMPLE_IDS};
use search::SearchConfig;

/// Exit code of `reproduce` when some check fails.
pub const EXIT_FAIL: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "gqc", version, about = "Generalized quasi-cyclic codes over F_q + uF_q")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Factor x^m - 1 over F_q (and its trivial lift over R).
    Factor {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "GF(2,1)")]
        field: Field,
        #[command(flatten)]
        common: Common,
    },
    /// Analyse a code given as JSON (a path or an inline object).
    Report {
        #[arg(long)]
        code: String,
        #[command(flatten)]
        ops: ReportOps,
        #[command(flatten)]
        common: Common,
    },
    /// Recompute a worked example and compare with its printed values.
    Reproduce {
        /// Example id such as 4.6.2, or `all`.
        id: String,
        #[command(flatten)]
        common: Common,
    },
    /// Search 1-generator codes for the best distance per dimension.
    Search {
        #[arg(long, value_delimiter = ',')]
        blocks: Vec<usize>,
        #[arg(long, default_value = "GF(2,1)")]
        field: Field,
        #[arg(long, default_value_t = 3)]
        max_deg: usize,
        /// Largest number of candidates examined.
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        /// Fill in the time_ms column (makes the output run-dependent).
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, default_value = "gray")]
    pub metric: Metric,
    #[arg(long, default_value_t = DEFAULT_CAP, value_parser = parse_cap)]
    pub cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for sampled searches.
    #[arg(long)]
    pub seed: Option<u64>,
}

fn parse_cap(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("cap must be at least 1".into()),
        Ok(c) => Ok(c),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Args, Debug, Clone, Default)]
pub struct ReportOps {
    /// Gray-image parameters [n,k,d].
    #[arg(long)]
    pub params: bool,
    /// Weight enumerator under the chosen metric.
    #[arg(long)]
    pub enumerator: bool,
    /// CRT decomposition and generator count.
    #[arg(long)]
    pub decompose: bool,
    /// Minimal generating set of a 1-generator code.
    #[arg(long)]
    pub mingen: bool,
    /// Distance lower bound (1-generator codes, or QC codes with --qc).
    #[arg(long)]
    pub bound: bool,
    /// Euclidean dual of a code with equal blocks.
    #[arg(long)]
    pub dual: bool,
    /// Quasi-cyclic view: index-2 construction for one block, extension view otherwise.
    #[arg(long)]
    pub qc: bool,
    /// Canonical generators of a cyclic code (one block).
    #[arg(long)]
    pub classify: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Runs a parsed command line, writing to `out`; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Factor { m, field, common } => {
            let v = cmd_factor(m, &field)?;
            emit(out, common.format, &v, || text_factor(&v))?;
            Ok(0)
        }
        Command::Report { code, ops, common } => {
            let code = load_code(&code)?;
            let v = cmd_report(&code, &ops, common.metric, common.cap)?;
            emit(out, common.format, &v, || text_sections(&v))?;
            Ok(0)
        }
        Command::Reproduce { id, common } => {
            let ids: Vec<&str> = if id == "all" {
                EXAMPLE_IDS.to_vec()
            } else {
                vec![EXAMPLE_IDS.iter().copied().find(|e| *e == id).ok_or_else(|| Error::Parse(format!("unknown example {id:?}; known: {}", EXAMPLE_IDS.join(", "))))?]
            };
            let mut failed = false;
            let mut all = Vec::new();
            for id in ids {
                let rep = reproduce::reproduce(id, common.cap)?;
                failed |= rep.outcome == Outcome::Fail;
                all.push(rep);
            }
            match common.format {
                Format::Json => writeln!(out, "{}", pretty(&serde_json::to_value(&all).expect("serializable")))?,
                Format::Text => {
                    for rep in &all {
                        write!(out, "{}", rep.to_text())?;
                    }
                }
            }
            Ok(if failed { EXIT_FAIL } else { 0 })
        }
        Command::Search { blocks, field, max_deg, budget, timing, common } => {
            let cfg = SearchConfig { field, blocks, max_deg, metric: common.metric, budget, seed: common.seed, cap: common.cap, timing };
            let table = search::search(&cfg)?;
            match common.format {
                Format::Json => writeln!(out, "{}", pretty(&serde_json::to_value(&table).expect("serializable")))?,
                Format::Text => write!(out, "{}", table.to_csv())?,
            }
            Ok(0)
        }
    }
}

/// Parses the process arguments, runs, and reports errors on stderr.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn emit(out: &mut dyn Write, format: Format, v: &Value, text: impl FnOnce() -> String) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", pretty(v))?,
        Format::Text => write!(out, "{}", text())?,
    }
    Ok(())
}

/// Reads code JSON from an inline object or a file.
pub fn load_code(arg: &str) -> Result<GqcCode> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg)).map_err(|e| Error::Parse(format!("cannot read {arg}: {e}")))?
    };
    GqcCode::from_json(&text)
}

pub fn cmd_factor(m: usize, f: &Field) -> Result<Value> {
    let fact = factor_cyclotomic(m, f)?;
    let product_ok = fact.product(f) == crate::FqPoly::xm1(m, f);
    Ok(json!({
        "m": m,
        "field": f.to_string(),
        "factorization": fact.fmt(f),
        "exponent": fact.exponent(),
        "factors": fact.factors.iter().map(|c| json!({"g": c.g.fmt(f), "d": c.d})).collect::<Vec<_>>(),
        "product_is_xm1": product_ok,
    }))
}

fn text_factor(v: &Value) -> String {
    format!("x^{}-1 over {} = {}\n", v["m"], v["field"].as_str().unwrap_or(""), v["factorization"].as_str().unwrap_or(""))
}

/// Dispatches the requested analyses; sections are keyed by operation name.
pub fn cmd_report(code: &GqcCode, ops: &ReportOps, metric: Metric, cap: usize) -> Result<Value> {
    metric.check(code.field())?;
    let r = code.ring();
    let mut out = Map::new();
    out.insert("code".into(), Value::String(code.to_string()));
    let any = ops.params || ops.enumerator || ops.decompose || ops.mingen || ops.bound || ops.dual || ops.qc || ops.classify;
    if ops.params || !any {
        let p = gray_params(code, cap)?;
        out.insert("params".into(), json!({"gray": p.to_string(), "n": p.n, "k": p.k, "d": p.d, "size": p.size}));
    }
    if ops.enumerator {
        let we = weight_enumerator(code, metric, cap)?;
        let mut j = we.to_json();
        j["polynomial"] = Value::String(we.polynomial());
        out.insert("enumerator".into(), j);
    }
    if ops.decompose {
        let d = crt_decompose(code)?;
        let gc = generator_count_bounds(code)?;
        let mut j = serde_json::to_value(d.to_json(r)).expect("serializable");
        j["ranks"] = json!(gc.ranks);
        j["free"] = json!(gc.free);
        j["generator_count"] = json!(gc.k);
        out.insert("decompose".into(), j);
    }
    if ops.mingen {
        let spec = OneGenSpec::from_code(code)?;
        let (mg, strict) = match minimal_generating_set(&spec) {
            Ok(mg) => (mg, true),
            Err(Error::Precondition(_)) => (minimal_generating_set_unchecked(&spec), false),
            Err(e) => return Err(e),
        };
        let mut j = mg.to_json(r);
        j["hypothesis_holds"] = Value::Bool(strict);
        j["oracle_size"] = json!(code.span().size(code.field()));
        out.insert("mingen".into(), j);
    }
    if ops.bound && !ops.qc {
        let spec = OneGenSpec::from_code(code)?;
        let b = distance_lower_bound(&spec, metric, cap)?;
        let mut j = b.to_json(r);
        j["distance"] = json!(crate::analysis::min_distance(code, metric, cap)?);
        out.insert("bound".into(), j);
    }
    if ops.classify {
        if code.ell() != 1 {
            return Err(Error::Precondition("classification needs a single block".into()));
        }
        let gens: Vec<_> = code.generators().iter().map(|g| g[0].clone()).collect();
        let c = classify_cyclic(r, code.blocks()[0], &gens)?;
        out.insert(
            "classify".into(),
            json!({"form": format!("{:?}", c.form), "g": c.g.fmt(r.field()), "p": c.p.fmt(r.field()), "a": c.a.fmt(r.field()), "generators": c.gens.iter().map(|g| g.fmt(r)).collect::<Vec<_>>(), "description": c.describe(r)}),
        );
    }
    if ops.qc {
        out.insert("qc".into(), qc_section(code, ops.bound, cap)?);
    }
    if ops.dual {
        let qc = QcCode::from_gqc(code.clone())?;
        let dual = euclid_dual(&qc)?;
        let p = gray_params(dual.gqc(), cap)?;
        let (sc, sd) = (qc.span().size(qc.field()), dual.span().size(qc.field()));
        let rep = check_thm55(&qc)?;
        out.insert(
            "dual".into(),
            json!({
                "gray": p.to_string(),
                "dimension": dual.span().dim(),
                "size_product": sc.zip(sd).map(|(a, b)| a as u128 * b as u128),
                "self_dual": rep.self_dual,
                "generator_counts": rep.to_json(),
            }),
        );
    }
    Ok(Value::Object(out))
}

fn qc_section(code: &GqcCode, with_bound: bool, cap: usize) -> Result<Value> {
    let r = code.ring();
    if code.ell() == 1 {
        if code.generators().len() != 1 {
            return Err(Error::Precondition("the index-2 construction needs a single generator".into()));
        }
        let m = code.blocks()[0];
        let c = construct_cor52(r, &code.generators()[0][0], m, None, cap)?;
        let mut j = c.to_json(r);
        if with_bound {
            let d = fq_distance(&c.span, r.field(), cap)?;
            j["distance"] = json!(d);
            j["params"] = Value::String(match d {
                Some(d) => format!("[{},{},{}]", 2 * m, c.dim(), d),
                None => format!("[{},0,-]", 2 * m),
            });
        }
        return Ok(j);
    }
    let qc = QcCode::from_gqc(code.clone())?;
    let ext = GaloisExtR::new(r, qc.ell(), None)?;
    let gens = qc.gqc().generators().iter().map(|t| ext.ext_view(t, qc.m())).collect::<Result<Vec<_>>>()?;
    let mut j = json!({"index": qc.ell(), "co_index": qc.m(), "extension_modulus": ext.modulus().fmt(r)});
    if with_bound {
        let pb = product_bound(&ext, &gens, qc.m(), cap)?;
        j["product_bound"] = serde_json::to_value(&pb).expect("serializable");
        j["distance"] = json!(crate::analysis::min_distance(code, Metric::Hamming, cap)?);
    }
    Ok(j)
}

/// Human-readable rendering of a report: one block per section.
pub fn text_sections(v: &Value) -> String {
    let mut s = String::new();
    let Some(obj) = v.as_object() else { return format!("{v}\n") };
    if let Some(c) = obj.get("code").and_then(Value::as_str) {
        s.push_str(c);
        s.push('\n');
    }
    for (k, sec) in obj.iter().filter(|(k, _)| *k != "code") {
        s.push_str(&format!("{k}:\n"));
        match sec.as_object() {
            Some(fields) => {
                for (fk, fv) in fields {
                    let shown = match fv {
                        Value::String(t) => t.clone(),
                        other => other.to_string(),
                    };
                    s.push_str(&format!("  {fk}: {shown}\n"));
                }
            }
            None => s.push_str(&format!("  {sec}\n")),
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let cli = Cli::try_parse_from(std::iter::once("gqc").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let code = run(cli, &mut buf).unwrap();
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn factor_command() {
        let (code, out) = run_args(&["factor", "--m", "6", "--field", "GF(3,1)"]);
        assert_eq!(code, 0);
        assert_eq!(out, "x^6-1 over GF(3,1,x) = (x+2)^3 (x+1)^3\n");
        let (_, out) = run_args(&["factor", "--m", "7", "--format", "json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["factors"].as_array().unwrap().len(), 3);
        assert_eq!(v["product_is_xm1"], true);
    }

    #[test]
    fn report_mingen_params_enumerator() {
        let code = r#"{"field":{"p":2,"n":1},"blocks":[2,4],"generators":[["x+1+u","x^3+x^2+x+1+u"]]}"#;
        let (_, out) = run_args(&["report", "--code", code, "--mingen", "--params", "--enumerator", "--format", "json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["mingen"]["r"], 1);
        assert_eq!(v["mingen"]["t"], 3);
        assert_eq!(v["params"]["gray"], "[12,5,4]");
        assert_eq!(v["enumerator"]["polynomial"], "x^12+7x^8y^4+16x^6y^6+7x^4y^8+y^12");
    }

    #[test]
    fn report_zero_code_and_errors() {
        let zero = r#"{"field":{"p":2,"n":1},"blocks":[2,3],"generators":[]}"#;
        let (_, out) = run_args(&["report", "--code", zero, "--params", "--format", "json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["params"]["gray"], "[10,0,-]");
        let f3 = r#"{"field":{"p":3,"n":1},"blocks":[2],"generators":[["1"]]}"#;
        let cli = Cli::try_parse_from(["gqc", "report", "--code", f3, "--enumerator", "--metric", "lee"]).unwrap();
        let err = run(cli, &mut Vec::new()).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = load_code("{not json").unwrap_err();
        assert_eq!(err.exit_code(), 1);
        let big = r#"{"field":{"p":2,"n":1},"blocks":[12],"generators":[["1"]]}"#;
        let cli = Cli::try_parse_from(["gqc", "report", "--code", big, "--params"]).unwrap();
        assert_eq!(run(cli, &mut Vec::new()).unwrap_err().exit_code(), 3);
    }

    #[test]
    fn report_qc_bound_example() {
        let code = r#"{"field":{"p":2,"n":1},"blocks":[7],"generators":[["x^4+(1+u)x^3+(1+u)x^2+u*x+1+u"]]}"#;
        let (_, out) = run_args(&["report", "--code", code, "--qc", "--bound", "--format", "json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["qc"]["bound"], 4);
        assert_eq!(v["qc"]["params"], "[14,6,4]");
    }

    #[test]
    fn cli_rejects_zero_cap() {
        assert!(Cli::try_parse_from(["gqc", "factor", "--m", "3", "--cap", "0"]).is_err());
    }

    #[test]
    fn report_is_deterministic() {
        let code = r#"{"field":{"p":3,"n":1},"blocks":[6,12],"generators":[["x^4-1","x^2-x"],["x^3","x^2+1"]]}"#;
        let a = run_args(&["report", "--code", code, "--decompose"]);
        let b = run_args(&["report", "--code", code, "--decompose"]);
        assert_eq!(a, b);
        assert!(a.1.contains("generator_count: 2"));
    }
}
