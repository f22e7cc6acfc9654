//! `srm`: build sandwiched Reed–Muller codes, compute their parameters and
//! run the verification suites.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error,
//! 3 search budget exhausted.

mod config;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use sandwich_rm::analysis::distance::{
    min_distance, min_weight_codewords, DistanceOptions, DistanceReport, Strategy,
};
use sandwich_rm::analysis::minvec::{predicted_min_vectors, MinVecCase, PREDICTION_CAP};
use sandwich_rm::verify::{run_suite, Suite, SuiteReport};
use sandwich_rm::{Code, Error, Family, FieldCtx, Kind};

use config::{
    parse_family, parse_i, parse_kind, parse_strategy, split_q, Format, ISet, Resolved, RunConfig,
};

#[derive(Parser, Debug)]
#[command(
    name = "srm",
    version,
    about = "Sandwiched Reed–Muller codes over GF(q)"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Node budget for distance searches.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// JSON file whose keys override the flags.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Field commands.
    Field {
        #[command(subcommand)]
        cmd: FieldCmd,
    },
    /// Code commands.
    Code {
        #[command(subcommand)]
        cmd: CodeCmd,
    },
    /// Run a verification suite (or `all`).
    Verify { suite: String },
    /// Write a matrix, defining set or minimum vectors.
    Export {
        #[command(flatten)]
        code: CodeArgs,
        /// generator, parity, defset or minvectors.
        #[arg(long)]
        what: String,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum FieldCmd {
    /// Modulus and sizes of GF(q^n).
    Info {
        #[command(flatten)]
        code: CodeArgs,
    },
}

#[derive(Subcommand, Debug)]
enum CodeCmd {
    /// [N, K, D] with K from both the formula and the rank.
    Params {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// The dual code and its parameters.
    Dual {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Minimum distance report.
    Mindist {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Minimum-weight codewords against the predicted subspace words.
    Minvecs {
        #[command(flatten)]
        code: CodeArgs,
        /// Weight to enumerate (default: the minimum distance).
        #[arg(long)]
        w: Option<usize>,
    },
}

#[derive(Args, Debug, Clone, Default)]
struct CodeArgs {
    /// Alphabet size, a prime power.
    #[arg(long)]
    q: Option<u32>,
    /// Extension degree (even); the field is GF(q^n).
    #[arg(long)]
    n: Option<u32>,
    /// Order r.
    #[arg(long, allow_hyphen_values = true)]
    r: Option<i64>,
    /// Selector I, e.g. 1,3.
    #[arg(long = "I", value_parser = parse_i)]
    i: Option<ISet>,
    /// extended or punctured.
    #[arg(long, value_parser = parse_kind)]
    kind: Option<Kind>,
    /// sandwich or rm.
    #[arg(long, value_parser = parse_family)]
    family: Option<Family>,
    /// Modulus coefficients over GF(p), low degree first.
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
    /// auto, exhaustive, support or bz.
    #[arg(long, value_parser = parse_strategy)]
    strategy: Option<Strategy>,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
    report: Option<String>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
            report: None,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::BudgetExceeded(_) => 3,
            Error::Inconsistent(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
            report: None,
        }
    }
}

struct Ctx {
    cli_format: Option<Format>,
    cfg: RunConfig,
    budget: Option<u64>,
    threads: Option<usize>,
}

impl Ctx {
    fn resolve(&self, a: &CodeArgs) -> Result<Resolved, Failure> {
        let cfg = &self.cfg;
        let (mut p, mut l) = match a.q {
            Some(q) => split_q(q).map_err(Failure::usage)?,
            None => (0, 0),
        };
        let mut n = a.n.unwrap_or(0);
        let mut modulus = a.modulus.clone();
        if let Some(f) = &cfg.field {
            (p, l, n) = (f.p, f.l, f.n);
            if f.modulus.is_some() {
                modulus = f.modulus.clone();
            }
        }
        if p == 0 || n == 0 {
            return Err(Failure::usage(
                "the field needs --q and --n (or a config field entry)",
            ));
        }
        let cc = cfg.code.clone().unwrap_or_default();
        let mut distance = DistanceOptions::default();
        if let Some(b) = cfg.budget.or(self.budget) {
            distance.budget = b;
        }
        if let Some(s) = cfg.strategy.or(a.strategy) {
            distance.strategy = s;
        }
        if let Some(s) = cfg.seed {
            distance.seed = s;
        }
        if let Some(k) = cfg.random_iters {
            distance.random_iters = k;
        }
        Ok(Resolved {
            p,
            l,
            n,
            modulus,
            family: cc.family.or(a.family).unwrap_or(Family::Sandwich),
            r: cc.r.or(a.r),
            i: cc.i.or(a.i.clone().map(|x| x.0)).unwrap_or_default(),
            kind: cc.kind.or(a.kind).unwrap_or(Kind::Extended),
            format: self.format(),
            distance,
        })
    }

    fn format(&self) -> Format {
        self.cfg.format.or(self.cli_format).unwrap_or(Format::Text)
    }

    fn distance_options(&self) -> DistanceOptions {
        let mut d = DistanceOptions::default();
        if let Some(b) = self.cfg.budget.or(self.budget) {
            d.budget = b;
        }
        if let Some(s) = self.cfg.strategy {
            d.strategy = s;
        }
        if let Some(s) = self.cfg.seed {
            d.seed = s;
        }
        d
    }
}

fn field_of(r: &Resolved) -> Result<Arc<FieldCtx>, Failure> {
    Ok(Arc::new(FieldCtx::new(r.p, r.l, r.n, r.modulus.clone())?))
}

fn code_of(r: &Resolved) -> Result<Code, Failure> {
    let rr = r.r.ok_or_else(|| Failure::usage("missing --r"))?;
    Ok(Code::build(field_of(r)?, r.family, r.kind, rr, &r.i)?)
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

#[derive(Serialize)]
struct Params {
    code: String,
    length: usize,
    dimension: usize,
    formula_dimension: Option<u128>,
    distance: DistanceReport,
}

fn distance_or_fail(
    code: &Code,
    opts: &DistanceOptions,
    format: Format,
) -> Result<DistanceReport, Failure> {
    match min_distance(code, opts) {
        Ok(d) => Ok(d),
        Err(Error::BudgetExceeded(rep)) => Err(Failure {
            code: 3,
            message: format!(
                "budget exhausted for {}: {} <= d <= {}",
                rep.code, rep.lower_bound, rep.upper_bound
            ),
            report: (format == Format::Json).then(|| json(&*rep)),
        }),
        Err(e) => Err(e.into()),
    }
}

fn show_d(d: &DistanceReport) -> String {
    match d.exact {
        Some(x) => x.to_string(),
        None => format!("{}..{}", d.lower_bound, d.upper_bound),
    }
}

fn cmd_params(r: &Resolved) -> Result<String, Failure> {
    let code = code_of(r)?;
    let k = code.checked_dimension()?;
    let d = distance_or_fail(&code, &r.distance, r.format)?;
    let p = Params {
        code: code.label(),
        length: code.length(),
        dimension: k,
        formula_dimension: code.formula_dimension(),
        distance: d,
    };
    Ok(match r.format {
        Format::Json => json(&p),
        Format::Csv => format!(
            "code,length,dimension,distance\n\"{}\",{},{},{}\n",
            p.code,
            p.length,
            p.dimension,
            show_d(&p.distance)
        ),
        Format::Text => format!(
            "{}: [{},{},{}]\n",
            p.code,
            p.length,
            p.dimension,
            show_d(&p.distance)
        ),
    })
}

#[derive(Serialize)]
struct DualOut {
    code: String,
    dimension: usize,
    dual: String,
    dual_dimension: usize,
}

fn cmd_dual(r: &Resolved) -> Result<String, Failure> {
    let code = code_of(r)?;
    let dual = code.dual()?;
    let o = DualOut {
        code: code.label(),
        dimension: code.dimension(),
        dual: dual.label(),
        dual_dimension: dual.dimension(),
    };
    Ok(match r.format {
        Format::Json => json(&o),
        Format::Csv => format!(
            "code,dimension,dual,dual_dimension\n\"{}\",{},\"{}\",{}\n",
            o.code, o.dimension, o.dual, o.dual_dimension
        ),
        Format::Text => format!(
            "{} [{}] ⊥ {} [{}]\n",
            o.code, o.dimension, o.dual, o.dual_dimension
        ),
    })
}

fn cmd_mindist(r: &Resolved) -> Result<String, Failure> {
    let code = code_of(r)?;
    let d = distance_or_fail(&code, &r.distance, r.format)?;
    Ok(match r.format {
        Format::Json => json(&d),
        Format::Csv => format!(
            "code,lower,upper,exact,strategy,nodes\n\"{}\",{},{},{},{},{}\n",
            d.code,
            d.lower_bound,
            d.upper_bound,
            d.exact.map(|x| x.to_string()).unwrap_or_default(),
            label(&d.strategy),
            d.nodes
        ),
        Format::Text => format!(
            "{}: d = {} (lower bound by {}, strategy {}, {} nodes)\nwitness {}\n",
            d.code,
            show_d(&d),
            label(&d.lower_method),
            label(&d.strategy),
            d.nodes,
            d.witness_digits.clone().unwrap_or_default()
        ),
    })
}

/// The serde name of a unit enum variant.
fn label<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|x| x.as_str().map(str::to_owned))
        .unwrap_or_default()
}

#[derive(Serialize)]
struct MinvecOut {
    code: String,
    weight: usize,
    case: MinVecCase,
    predicted: usize,
    found: usize,
    predicted_subset_of_found: bool,
    equal: bool,
    words: Vec<String>,
}

fn cmd_minvecs(r: &Resolved, w: Option<usize>) -> Result<String, Failure> {
    let code = code_of(r)?;
    let w = match w {
        Some(w) => w,
        None => distance_or_fail(&code, &r.distance, r.format)?
            .exact
            .expect("exact distance"),
    };
    let found = min_weight_codewords(&code, w, &r.distance)?;
    let pred = predicted_min_vectors(&code, PREDICTION_CAP)?;
    let predicted = pred.for_kind(&code);
    let set: std::collections::HashSet<_> = found.iter().collect();
    let o = MinvecOut {
        code: code.label(),
        weight: w,
        case: pred.case,
        predicted: predicted.len(),
        found: found.len(),
        predicted_subset_of_found: predicted.iter().all(|x| set.contains(x)),
        equal: predicted == found.as_slice(),
        words: found.iter().map(|x| x.to_digit_string(code.q())).collect(),
    };
    let verdict_ok = pred.case == MinVecCase::None || o.predicted_subset_of_found;
    let out = match r.format {
        Format::Json => json(&o),
        Format::Csv => o.words.join("\n") + "\n",
        Format::Text => {
            let mut s = format!(
                "{}: {} words of weight {}; case {}, {} predicted, equal = {}\n",
                o.code,
                o.found,
                o.weight,
                label(&o.case),
                o.predicted,
                o.equal
            );
            for wd in &o.words {
                let _ = writeln!(s, "{wd}");
            }
            s
        }
    };
    if verdict_ok {
        Ok(out)
    } else {
        Err(Failure {
            code: 1,
            message: "predicted minimum vectors missing from the code".into(),
            report: Some(out),
        })
    }
}

fn export(r: &Resolved, what: &str) -> Result<String, Failure> {
    let code = code_of(r)?;
    let q = code.q();
    let matrix = |m: &sandwich_rm::linalg::Matrix| -> String {
        match r.format {
            Format::Json => json(&m.row_iter().map(|row| row.to_vec()).collect::<Vec<_>>()),
            _ => m
                .row_iter()
                .map(|row| {
                    row.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                        + "\n"
                })
                .collect(),
        }
    };
    Ok(match what {
        "generator" => matrix(code.generator_matrix()),
        "parity" => matrix(code.parity_matrix()),
        "defset" => serde_json::to_string(code.defining_set()).expect("serializable") + "\n",
        "minvectors" => {
            let d = distance_or_fail(&code, &r.distance, r.format)?;
            let words = min_weight_codewords(&code, d.exact.expect("exact"), &r.distance)?;
            let digits: Vec<String> = words.iter().map(|x| x.to_digit_string(q)).collect();
            match r.format {
                Format::Json => json(&digits),
                _ => digits.join("\n") + "\n",
            }
        }
        other => {
            return Err(Failure::usage(format!(
                "--what must be generator, parity, defset or minvectors, got {other:?}"
            )))
        }
    })
}

fn render_suite(rep: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => json(rep),
        Format::Csv => {
            let mut s = String::from("suite,check,expected,computed,pass\n");
            for c in &rep.checks {
                let esc = |x: &str| x.replace('"', "\"\"");
                let _ = writeln!(
                    s,
                    "{},\"{}\",\"{}\",\"{}\",{}",
                    rep.suite,
                    esc(&c.name),
                    esc(&c.expected),
                    esc(&c.computed),
                    c.pass
                );
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for c in &rep.checks {
                let tag = if c.pass { "PASS" } else { "FAIL" };
                if c.pass {
                    let _ = writeln!(s, "{tag} {}: {}", c.name, c.computed);
                } else {
                    let _ = writeln!(
                        s,
                        "{tag} {}: expected {}, computed {}",
                        c.name, c.expected, c.computed
                    );
                }
            }
            let _ = writeln!(
                s,
                "{}: {}",
                rep.suite,
                if rep.passed { "ok" } else { "FAILED" }
            );
            s
        }
    }
}

fn cmd_verify(ctx: &Ctx, name: &str) -> Result<String, Failure> {
    let suites: Vec<Suite> = if name == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![name
            .parse::<Suite>()
            .map_err(|e| Failure::usage(e.to_string()))?]
    };
    let opts = ctx.distance_options();
    let format = ctx.format();
    let mut out = String::new();
    let mut reports = Vec::new();
    for s in suites {
        reports.push(run_suite(s, &opts)?);
    }
    if format == Format::Json && reports.len() > 1 {
        out = json(&reports);
    } else {
        for r in &reports {
            out.push_str(&render_suite(r, format));
        }
    }
    if reports.iter().any(|r| r.budget_exceeded) {
        return Err(Failure {
            code: 3,
            message: "a distance search ran out of budget".into(),
            report: Some(out),
        });
    }
    if reports.iter().any(|r| !r.passed) {
        return Err(Failure {
            code: 1,
            message: "verification mismatch".into(),
            report: Some(out),
        });
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<String, Failure> {
    let cfg = match &cli.config {
        Some(p) => RunConfig::load(p).map_err(Failure::usage)?,
        None => RunConfig::default(),
    };
    let ctx = Ctx {
        cli_format: cli.format,
        cfg,
        budget: cli.budget,
        threads: cli.threads,
    };
    if let Some(t) = ctx.cfg.threads.or(ctx.threads) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::usage(e.to_string()))?;
    }
    match &cli.command {
        Command::Field {
            cmd: FieldCmd::Info { code },
        } => {
            let r = ctx.resolve(code)?;
            let f = field_of(&r)?;
            Ok(match r.format {
                Format::Json => json(&f.info()),
                _ => {
                    let i = f.info();
                    format!(
                        "{}\nq = {}, n = {}, order = {}, N = {}\nmodulus (low degree first) = {:?}\n",
                        i.descriptor, i.q, i.n, i.order, i.big_n, i.modulus
                    )
                }
            })
        }
        Command::Code { cmd } => match cmd {
            CodeCmd::Params { code } => cmd_params(&ctx.resolve(code)?),
            CodeCmd::Dual { code } => cmd_dual(&ctx.resolve(code)?),
            CodeCmd::Mindist { code } => cmd_mindist(&ctx.resolve(code)?),
            CodeCmd::Minvecs { code, w } => cmd_minvecs(&ctx.resolve(code)?, *w),
        },
        Command::Verify { suite } => cmd_verify(&ctx, suite),
        Command::Export { code, what, out } => {
            let text = export(&ctx.resolve(code)?, what)?;
            match out {
                Some(path) => {
                    std::fs::write(path, text)
                        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(r) = f.report {
                let _ = std::io::stdout().write_all(r.as_bytes());
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
