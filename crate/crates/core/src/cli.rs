//! The `heffter` command line.
//!
//! Exit codes: 0 on success or a valid verdict, 1 when a construction,
//! search or check fails, 2 on usage errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::array::{Cell, PFArray};
use crate::construct::{
    construct, nh_from_heffter, nh_random, Method, RandomSpec, DEFAULT_MAX_ATTEMPTS,
};
use crate::decomp::{develop, df_from_array, orthogonal, Axis, Decomposition};
use crate::embed::{archdeacon_embedding, compatible, compatible_search};
use crate::format::{parse_array, parse_orderings, write_array, write_orderings};
use crate::params::ArrayParams;
use crate::residue::Residue;
use crate::transversal::Transversal;
use crate::verify::{
    find_simple_ordering, is_globally_simple, make_simple_pair, verify_heffter, verify_nh,
    OrderingPair, SearchOutcome, Verdict, DEFAULT_BUDGET,
};
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "heffter",
    version,
    about = "Non-zero sum Heffter arrays, path decompositions and biembeddings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build an array.
    Construct(ConstructArgs),
    /// Check an array file.
    Verify(VerifyArgs),
    /// Find simple (optionally compatible) orderings for an array.
    Order(OrderArgs),
    /// Build difference families and cyclic decompositions from an array.
    Decompose(DecomposeArgs),
    /// Build the biembedding of K_v and report its genus.
    Embed(EmbedArgs),
    /// Search an ordering of a set with distinct partial sums.
    Alspach(AlspachArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    K1,
    K2,
    Diagonal,
    Rectangular,
    FromHeffter,
    Random,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::K1 => Method::K1,
            MethodArg::K2 => Method::K2,
            MethodArg::Diagonal => Method::Diagonal,
            MethodArg::Rectangular => Method::Rectangular,
            MethodArg::FromHeffter => Method::FromHeffter,
            MethodArg::Random => Method::Random,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AxisArg {
    Rows,
    Columns,
    Both,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub method: MethodArg,
    #[arg(short = 'm', long = "m")]
    pub m: Option<usize>,
    #[arg(short = 'n', long = "n")]
    pub n: Option<usize>,
    #[arg(long = "h")]
    pub h: Option<usize>,
    #[arg(short = 'k', long = "k")]
    pub k: Option<usize>,
    #[arg(short = 't', long = "t", default_value_t = 1)]
    pub t: u64,
    /// Required for `random`.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_MAX_ATTEMPTS)]
    pub max_attempts: usize,
    /// Heffter array file for `from-heffter`.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Cells to negate for `from-heffter`, as `r,c;r,c;...` (1-based).
    #[arg(long)]
    pub transversal: Option<String>,
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
    /// State which construction was used.
    #[arg(long)]
    pub explain: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub input: PathBuf,
    /// Check the zero-sum Heffter conditions instead.
    #[arg(long)]
    pub heffter: bool,
    /// Also require the natural row and column orderings to be simple.
    #[arg(long)]
    pub simple: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Args, Debug)]
pub struct OrderArgs {
    pub input: PathBuf,
    /// Require a compatible pair.
    #[arg(long)]
    pub compatible: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    pub input: PathBuf,
    /// Orderings file; simple orderings are searched when omitted.
    #[arg(long)]
    pub orderings: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = AxisArg::Both)]
    pub axis: AxisArg,
    /// Print every developed block, not just the base families.
    #[arg(long)]
    pub blocks: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Args, Debug)]
pub struct EmbedArgs {
    pub input: PathBuf,
    /// Orderings file; a compatible pair is searched when omitted.
    #[arg(long)]
    pub orderings: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Also print the rotation template as a cycle.
    #[arg(long)]
    pub rho0: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Args, Debug)]
pub struct AlspachArgs {
    /// Group order.
    #[arg(long)]
    pub v: u64,
    /// Comma-separated elements.
    #[arg(long, allow_hyphen_values = true)]
    pub elements: String,
    /// Also forbid zero partial sums.
    #[arg(long)]
    pub nonzero: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

/// What a command produced: where its parts go and its exit status.
struct Outcome {
    stdout: String,
    stderr: String,
    code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let outcome = match dispatch(cli.command) {
        Ok(o) => o,
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: match e {
                Error::InvalidParameters(_) | Error::Parse { .. } | Error::Io(_) => 2,
                _ => 1,
            },
        },
    };
    let _ = out.write_all(outcome.stdout.as_bytes());
    let _ = err.write_all(outcome.stderr.as_bytes());
    outcome.code
}

fn dispatch(command: Command) -> Result<Outcome> {
    match command {
        Command::Construct(a) => cmd_construct(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Order(a) => cmd_order(a),
        Command::Decompose(a) => cmd_decompose(a),
        Command::Embed(a) => cmd_embed(a),
        Command::Alspach(a) => cmd_alspach(a),
    }
}

fn read_array(path: &Path) -> Result<PFArray> {
    parse_array(&fs::read_to_string(path)?)
}

fn json_line(v: Value) -> String {
    format!("{v}\n")
}

fn residues(xs: &[Residue]) -> Vec<i64> {
    xs.iter().map(|x| x.signed()).collect()
}

fn pair_json(pair: &OrderingPair) -> Value {
    json!({
        "rows": pair.rows.iter().map(|r| residues(r)).collect::<Vec<_>>(),
        "columns": pair.columns.iter().map(|c| residues(c)).collect::<Vec<_>>(),
    })
}

fn array_json(a: &PFArray) -> Value {
    let p = a.params();
    let rows: Vec<Vec<Option<i64>>> = (1..=p.m)
        .map(|i| (1..=p.n).map(|j| a.get(i, j).map(|x| x.signed())).collect())
        .collect();
    json!({"m": p.m, "n": p.n, "h": p.h, "k": p.k, "t": p.t, "v": p.v, "rows": rows})
}

fn verdict_json(v: &Verdict) -> Value {
    Value::Array(v.violations.iter().map(|x| json!(x.to_string())).collect())
}

/// Parses `r,c;r,c;...`.
pub fn parse_transversal(text: &str) -> Result<Transversal> {
    let mut cells = Vec::new();
    for part in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (r, c) = part
            .split_once(',')
            .ok_or_else(|| Error::InvalidParameters(format!("bad cell `{part}`, expected r,c")))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidParameters(format!("bad coordinate `{s}`")))
        };
        cells.push(Cell::new(parse(r)?, parse(c)?));
    }
    Ok(Transversal::new(cells))
}

fn parse_elements(text: &str, v: u64) -> Result<Vec<Residue>> {
    if v < 2 {
        return Err(Error::InvalidParameters("--v must be at least 2".into()));
    }
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<i64>()
                .map(|x| Residue::new(x, v))
                .map_err(|_| Error::InvalidParameters(format!("bad element `{s}`")))
        })
        .collect()
}

fn cmd_construct(a: ConstructArgs) -> Result<Outcome> {
    let method: Method = a.method.into();
    let report = match method {
        Method::Random => {
            let need = |x: Option<usize>, name: &str| {
                x.ok_or_else(|| Error::InvalidParameters(format!("method random needs --{name}")))
            };
            let seed = a
                .seed
                .ok_or_else(|| Error::InvalidParameters("method random needs --seed".into()))?;
            let (m, n, h, k) = (
                need(a.m, "m")?,
                need(a.n, "n")?,
                need(a.h, "h")?,
                need(a.k, "k")?,
            );
            ArrayParams::new(m, n, h, k, a.t)
                .map_err(|e| Error::InvalidParameters(e.to_string()))?;
            nh_random(RandomSpec {
                m,
                n,
                h,
                k,
                t: a.t,
                seed,
                max_attempts: a.max_attempts,
            })?
        }
        Method::FromHeffter => {
            let input = a.input.as_ref().ok_or_else(|| {
                Error::InvalidParameters("method from-heffter needs --input".into())
            })?;
            let h = read_array(input)?;
            let tr = a
                .transversal
                .as_deref()
                .map(parse_transversal)
                .transpose()?;
            let array = nh_from_heffter(&h, tr.as_ref())?;
            crate::construct::ConstructionReport {
                array,
                method,
                attempts: None,
                seed: None,
            }
        }
        _ => {
            if matches!(method, Method::K1 | Method::K2 | Method::Diagonal)
                && a.m.is_some_and(|m| Some(m) != a.n)
            {
                return Err(Error::InvalidParameters(format!(
                    "method {method} builds square arrays"
                )));
            }
            construct(method, a.m, a.n, a.k).map_err(|e| match e {
                Error::InvalidParameters(_) => e,
                other => Error::InvalidParameters(other.to_string()),
            })?
        }
    };
    let array = &report.array;
    let p = array.params();
    let nh = verify_nh(array);
    let simple = is_globally_simple(array);
    let text = write_array(array);
    let report_text = match a.format {
        OutputFormat::Text => {
            let mut r = format!("method: {}\n", report.method);
            if a.explain {
                r += &format!("construction: {}\n", report.method.label());
            }
            r += &format!(
                "parameters: m={} n={} h={} k={} t={}\nv: {}\n",
                p.m, p.n, p.h, p.k, p.t, p.v
            );
            if let Some(seed) = report.seed {
                r += &format!("seed: {seed}\n");
            }
            if let Some(n) = report.attempts {
                r += &format!("attempts: {n}\n");
            }
            r += &format!(
                "verdict: {}\n",
                if nh.is_valid() { "valid" } else { "invalid" }
            );
            for v in &nh.violations {
                r += &format!("  {v}\n");
            }
            r += &format!(
                "globally simple: {}\n",
                if simple.is_valid() { "yes" } else { "no" }
            );
            r
        }
        OutputFormat::Structured => {
            let mut obj = json!({
                "method": report.method.to_string(),
                "parameters": {"m": p.m, "n": p.n, "h": p.h, "k": p.k, "t": p.t},
                "v": p.v,
                "seed": report.seed,
                "attempts": report.attempts,
                "valid": nh.is_valid(),
                "violations": verdict_json(&nh),
                "globally_simple": simple.is_valid(),
            });
            if a.explain {
                obj["construction"] = json!(report.method.label());
            }
            if a.output.is_none() {
                obj["array"] = array_json(array);
            }
            json_line(obj)
        }
    };
    let code = if nh.is_valid() { 0 } else { 1 };
    Ok(match (&a.output, a.format) {
        (Some(path), _) => {
            fs::write(path, &text)?;
            Outcome {
                stdout: report_text,
                stderr: String::new(),
                code,
            }
        }
        (None, OutputFormat::Text) => Outcome {
            stdout: text,
            stderr: report_text,
            code,
        },
        (None, OutputFormat::Structured) => Outcome {
            stdout: report_text,
            stderr: String::new(),
            code,
        },
    })
}

fn cmd_verify(a: VerifyArgs) -> Result<Outcome> {
    let array = read_array(&a.input)?;
    let mut verdict = if a.heffter {
        verify_heffter(&array)
    } else {
        verify_nh(&array)
    };
    if a.simple {
        verdict = verdict.merge(is_globally_simple(&array));
    }
    let stdout = match a.format {
        OutputFormat::Text => verdict.to_string(),
        OutputFormat::Structured => json_line(json!({
            "valid": verdict.is_valid(),
            "violations": verdict_json(&verdict),
        })),
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: if verdict.is_valid() { 0 } else { 1 },
    })
}

fn search_failure(what: &str, outcome: &SearchOutcome<OrderingPair>) -> Error {
    match outcome {
        SearchOutcome::Exhausted => {
            Error::BudgetExhausted(format!("no {what} found within the budget"))
        }
        _ => Error::NoOrdering(format!("no {what} exists")),
    }
}

fn cmd_order(a: OrderArgs) -> Result<Outcome> {
    let array = read_array(&a.input)?;
    let pair = if a.compatible {
        let outcome = compatible_search(&array, a.budget)?;
        match outcome {
            SearchOutcome::Found(p) => p,
            other => {
                return Err(search_failure(
                    "compatible pair of simple orderings",
                    &other,
                ))
            }
        }
    } else {
        make_simple_pair(&array, a.budget)?
    };
    let is_compat = compatible(&pair, &array);
    let body = match a.format {
        OutputFormat::Text => write_orderings(&pair),
        OutputFormat::Structured => {
            let mut v = pair_json(&pair);
            v["compatible"] = json!(is_compat);
            json_line(v)
        }
    };
    Ok(match a.output {
        Some(path) => {
            fs::write(path, write_orderings(&pair))?;
            Outcome::ok(format!("compatible: {is_compat}\n"))
        }
        None => Outcome::ok(body),
    })
}

fn orderings_for(
    array: &PFArray,
    path: Option<&Path>,
    budget: u64,
    need_compatible: bool,
) -> Result<OrderingPair> {
    match path {
        Some(p) => parse_orderings(&fs::read_to_string(p)?, array),
        None if need_compatible => match compatible_search(array, budget)? {
            SearchOutcome::Found(p) => Ok(p),
            other => Err(search_failure(
                "compatible pair of simple orderings",
                &other,
            )),
        },
        None => make_simple_pair(array, budget),
    }
}

fn cmd_decompose(a: DecomposeArgs) -> Result<Outcome> {
    let array = read_array(&a.input)?;
    let pair = orderings_for(&array, a.orderings.as_deref(), a.budget, false)?;
    let axes: &[Axis] = match a.axis {
        AxisArg::Rows => &[Axis::Rows],
        AxisArg::Columns => &[Axis::Columns],
        AxisArg::Both => &[Axis::Rows, Axis::Columns],
    };
    let mut decomps: Vec<(Axis, Decomposition)> = Vec::new();
    for &axis in axes {
        decomps.push((axis, develop(&df_from_array(&array, &pair, axis)?)?));
    }
    let orth = if decomps.len() == 2 {
        Some(orthogonal(&decomps[0].1, &decomps[1].1)?)
    } else {
        None
    };
    let name = |axis: Axis| match axis {
        Axis::Rows => "rows",
        Axis::Columns => "columns",
    };
    let stdout = match a.format {
        OutputFormat::Text => {
            let mut s = String::new();
            for (axis, d) in &decomps {
                s += &format!("# {} family\n{}", name(*axis), d.base);
                s += &format!(
                    "# {}: {} blocks, {} edges\n",
                    name(*axis),
                    d.blocks.len(),
                    d.edge_count()
                );
                if a.blocks {
                    s += &d.to_string();
                }
            }
            if let Some(o) = orth {
                s += &format!("orthogonal: {o}\n");
            }
            s
        }
        OutputFormat::Structured => {
            let fams: Vec<Value> = decomps
                .iter()
                .map(|(axis, d)| {
                    let mut v = json!({
                        "axis": name(*axis),
                        "v": d.host().v,
                        "t": d.host().t,
                        "base": d.base.blocks.iter().map(|b| residues(b.vertices())).collect::<Vec<_>>(),
                        "blocks": d.blocks.len(),
                        "edges": d.edge_count(),
                    });
                    if a.blocks {
                        v["developed"] = json!(d.blocks.iter().map(|b| residues(b.vertices())).collect::<Vec<_>>());
                    }
                    v
                })
                .collect();
            json_line(json!({"families": fams, "orthogonal": orth}))
        }
    };
    Ok(Outcome::ok(stdout))
}

fn cmd_embed(a: EmbedArgs) -> Result<Outcome> {
    let array = read_array(&a.input)?;
    let pair = orderings_for(&array, a.orderings.as_deref(), a.budget, true)?;
    if !compatible(&pair, &array) {
        return Err(Error::Incompatible("orderings are not compatible".into()));
    }
    let run = archdeacon_embedding(&array, &pair)?;
    let emb = &run.embedding;
    let stdout = match a.format {
        OutputFormat::Text => {
            let mut s = emb.to_string();
            if a.rho0 {
                let cyc: Vec<String> = run.rotation.cycle().iter().map(|x| x.to_string()).collect();
                s += &format!("rho0 ({})\n", cyc.join(" "));
            }
            s
        }
        OutputFormat::Structured => {
            let faces: Vec<Value> = emb
                .faces
                .iter()
                .map(|f| json!({"color": f.color, "length": f.circuit.len(), "walk": residues(&f.circuit.vertices).iter().map(|x| x.rem_euclid(emb.vertices as i64)).collect::<Vec<_>>()}))
                .collect();
            let mut v = json!({
                "V": emb.vertices,
                "E": emb.edges,
                "F": emb.faces.len(),
                "genus": emb.genus,
                "faces_match_circuits": run.faces_match,
                "orderings": pair_json(&pair),
                "faces": faces,
            });
            if a.rho0 {
                v["rho0"] = json!(residues(&run.rotation.cycle()));
            }
            json_line(v)
        }
    };
    Ok(Outcome {
        stdout,
        stderr: format!("faces match circuits: {}\n", run.faces_match),
        code: if run.faces_match { 0 } else { 1 },
    })
}

fn cmd_alspach(a: AlspachArgs) -> Result<Outcome> {
    let elements = parse_elements(&a.elements, a.v)?;
    let outcome = find_simple_ordering(&elements, a.nonzero, a.budget)?;
    let (status, ordering) = match &outcome {
        SearchOutcome::Found(o) => ("found", Some(residues(o))),
        SearchOutcome::NotFound => ("none", None),
        SearchOutcome::Exhausted => ("exhausted", None),
    };
    let stdout = match a.format {
        OutputFormat::Text => match &ordering {
            Some(o) => format!(
                "{}\n",
                o.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            None => format!("{status}\n"),
        },
        OutputFormat::Structured => json_line(json!({"status": status, "ordering": ordering})),
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: if ordering.is_some() { 0 } else { 1 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("heffter").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn construct_diagonal_prints_array() {
        let (code, out, err) =
            run_capture(&["construct", "--method", "diagonal", "-n", "3", "-k", "3"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("3 3 3 3 1\n"));
        assert!(err.contains("verdict: valid"));
    }

    #[test]
    fn random_requires_seed() {
        let (code, _, err) = run_capture(&[
            "construct",
            "--method",
            "random",
            "-m",
            "2",
            "-n",
            "3",
            "--h",
            "3",
            "-k",
            "2",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("--seed"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_capture(&["construct"]).0, 2);
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        assert_eq!(
            run_capture(&["construct", "--method", "diagonal", "-n", "3", "-k", "4"]).0,
            2
        );
    }

    #[test]
    fn alspach_examples() {
        let (code, out, _) =
            run_capture(&["alspach", "--v", "7", "--elements", "1,2,3", "--nonzero"]);
        assert_eq!((code, out.as_str()), (0, "1,2,3\n"));
        let (code, out, _) = run_capture(&[
            "alspach",
            "--v",
            "7",
            "--elements",
            "1,2,3",
            "--budget",
            "0",
        ]);
        assert_eq!((code, out.as_str()), (1, "exhausted\n"));
    }

    #[test]
    fn transversal_parsing() {
        let t = parse_transversal("1,1; 2,3;").unwrap();
        assert_eq!(t.cells, vec![Cell::new(1, 1), Cell::new(2, 3)]);
        assert!(parse_transversal("1;2").is_err());
        assert!(parse_transversal("a,1").is_err());
    }

    #[test]
    fn explain_names_construction() {
        let (_, _, err) = run_capture(&[
            "construct",
            "--method",
            "rectangular",
            "-m",
            "2",
            "-n",
            "3",
            "--explain",
        ]);
        assert!(err.contains("construction: globally simple NH(m,n;n,m)"));
    }
}
