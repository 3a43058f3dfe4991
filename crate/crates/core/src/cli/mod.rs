//! Command-line front end. Every command prints one JSON object on stdout;
//! exact values are strings (`"7"`, `"-3/4"`), series are coefficient arrays.
//!
//! Exit codes: 0 on success, 1 on usage, domain or precondition errors, 2
//! when a verification disagrees.

mod lozenge_cmd;

use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::excited::{count_excited, enumerate_excited, CountMethod, Variant};
use crate::exactmath::{rational_string, QSeries};
use crate::multivar::{specialize_hooks, verify_identity, HookMode, HookValue, IdentityKind, IdentityParams};
use crate::products::{
    build_lambda_shape, conjecture_eval, f_corollary, f_lambda_product, q_corollary, q_lambda_product, ConjectureKind,
    CorollaryKind, LambdaParams, QCorollaryKind,
};
use crate::schubert::{
    classify, family, rothe_diagram, upsilon_closed_form, upsilon_shifted, vexillary_shapes, Family, Permutation,
    UpsilonMethod,
};
use crate::shapes::{ssyt_series_oracle, syt_count_oracle, SkewShape, SytMethod};
use crate::verify::{run_all, run_criterion, Level};

#[derive(Debug, Parser)]
#[command(name = "skewhook", version, about = "Exact skew tableaux, excited diagrams, Schubert evaluations and lozenge tilings")]
pub struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Add wall-clock time to the output.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Group,
}

#[derive(Debug, Subcommand)]
pub enum Group {
    /// Standard Young tableaux of skew shape.
    #[command(subcommand)]
    Syt(SytCmd),
    /// Excited diagrams.
    #[command(subcommand)]
    Excited(ExcitedCmd),
    /// Multivariate identities at random rational points.
    #[command(subcommand)]
    Multivar(MultivarCmd),
    /// The six-parameter product formulas.
    #[command(subcommand)]
    Product(ProductCmd),
    /// Principal evaluations of Schubert polynomials.
    #[command(subcommand)]
    Schubert(SchubertCmd),
    /// Weighted lozenge tilings.
    #[command(subcommand)]
    Lozenge(lozenge_cmd::LozengeCmd),
    /// The acceptance suite.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SytMethodArg {
    /// Excited diagrams at the hook point.
    Nhlf,
    Backtrack,
    Determinant,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SeriesMethodArg {
    Hooks,
    Oracle,
}

#[derive(Debug, Subcommand)]
pub enum SytCmd {
    /// `f^{λ/μ}`.
    Count {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long, value_enum, default_value = "nhlf")]
        method: SytMethodArg,
    },
    /// `s_{λ/μ}(1, q, q^2, ...)` through `q^order`.
    Qseries {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, value_enum, default_value = "hooks")]
        method: SeriesMethodArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CountMethodArg {
    Enumerate,
    Determinant,
    HookContent,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VariantArg {
    Se,
    Ne,
}

#[derive(Debug, Subcommand)]
pub enum ExcitedCmd {
    /// `|E(λ/μ)|`.
    Count {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long, value_enum, default_value = "enumerate")]
        method: CountMethodArg,
    },
    /// List the diagrams.
    Enumerate {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long, value_enum, default_value = "se")]
        variant: VariantArg,
        /// Refuse to list more than this many.
        #[arg(long, default_value_t = 10_000)]
        limit: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum MultivarCmd {
    /// Check one identity at seeded random points.
    Verify {
        /// rect_symmetry, slim_symmetry, thick_strip, slim_flip or reverse_hook_path.
        #[arg(long)]
        kind: IdentityKind,
        #[arg(long)]
        shape: Option<SkewShape>,
        /// `a,b,c` for the path identities.
        #[arg(long)]
        abc: Option<String>,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CorollaryArg {
    Abcde,
    Abc,
    Abcde1,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ConjectureArg {
    SchubSkew,
    Kratt,
}

#[derive(Debug, Subcommand)]
pub enum ProductCmd {
    /// `f^{Λ(a,b,c,d,e,m)}` by the product formula, or its q-analogue.
    Eval {
        /// `a,b,c,d,e,m`.
        #[arg(long)]
        params: LambdaParams,
        /// Use the closed corollary form instead; `m` is ignored.
        #[arg(long, value_enum)]
        corollary: Option<CorollaryArg>,
        /// Give the q-series through this order.
        #[arg(long)]
        q_order: Option<usize>,
    },
    /// Compare the product formula with the determinant oracle.
    Verify {
        #[arg(long)]
        params: LambdaParams,
        #[arg(long)]
        q_order: Option<usize>,
    },
    /// Evaluate a conjectured closed form against the oracle.
    Conjecture {
        #[arg(long, value_enum)]
        kind: ConjectureArg,
        #[arg(long)]
        a: usize,
        #[arg(long, default_value_t = 0)]
        c: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum SchubertCmd {
    /// `Υ_w(c) = 𝔖_{1^c × w}(1, ..., 1)`.
    Upsilon {
        #[arg(long)]
        perm: Permutation,
        #[arg(long, default_value_t = 0)]
        c: usize,
        /// auto, macdonald, vexillary_excited or skew321.
        #[arg(long, default_value = "auto")]
        method: UpsilonMethod,
    },
    /// A named family: closed form, and with `--check` the Macdonald sum.
    Family {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long, default_value_t = 0)]
        c: usize,
        #[arg(long)]
        check: bool,
    },
    /// Pattern classes, Rothe diagram and shapes.
    Classify {
        #[arg(long)]
        perm: Permutation,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// All ten criteria.
    All {
        #[arg(long, default_value = "desk")]
        level: Level,
    },
    /// One criterion by number.
    Criterion {
        #[arg(long)]
        id: usize,
        #[arg(long, default_value = "desk")]
        level: Level,
    },
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Reply {
    pub provenance: &'static str,
    pub value: Value,
    /// False when a check inside the command disagreed.
    pub ok: bool,
}

impl Reply {
    pub fn formula(value: Value) -> Self {
        Reply { provenance: "formula", value, ok: true }
    }

    pub fn oracle(value: Value) -> Self {
        Reply { provenance: "oracle", value, ok: true }
    }

    pub fn checked(provenance: &'static str, value: Value, ok: bool) -> Self {
        Reply { provenance, value, ok }
    }
}

/// Result of one invocation, ready to print.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn series_json(s: &QSeries) -> Value {
    json!({ "order": s.order(), "coeffs": s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>() })
}

fn int(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

pub(crate) fn parse_triple(text: &str) -> Result<(usize, usize, usize)> {
    let v: Vec<usize> = text
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Domain(format!("bad number {s:?} in {text:?}"))))
        .collect::<Result<_>>()?;
    match v[..] {
        [a, b, c] => Ok((a, b, c)),
        _ => Err(Error::Domain(format!("expected a,b,c, got {text:?}"))),
    }
}

fn syt(cmd: SytCmd) -> Result<Reply> {
    match cmd {
        SytCmd::Count { shape, method } => {
            let (v, prov) = match method {
                SytMethodArg::Nhlf => (crate::multivar::nhlf_count(&shape)?, "formula"),
                SytMethodArg::Backtrack => (syt_count_oracle(&shape, SytMethod::Backtrack)?, "oracle"),
                SytMethodArg::Determinant => (syt_count_oracle(&shape, SytMethod::Determinant)?, "oracle"),
            };
            Ok(Reply::checked(prov, json!({ "shape": shape.to_string(), "count": int(&v) }), true))
        }
        SytCmd::Qseries { shape, order, method } => {
            let (s, prov) = match method {
                SeriesMethodArg::Hooks => match specialize_hooks(&shape, HookMode::QSeries(order))? {
                    HookValue::Series(s) => (s, "formula"),
                    HookValue::Numeric(_) => unreachable!("series mode"),
                },
                SeriesMethodArg::Oracle => (ssyt_series_oracle(&shape, order)?, "oracle"),
            };
            Ok(Reply::checked(prov, json!({ "shape": shape.to_string(), "series": series_json(&s) }), true))
        }
    }
}

fn excited(cmd: ExcitedCmd) -> Result<Reply> {
    match cmd {
        ExcitedCmd::Count { shape, method } => {
            let m = match method {
                CountMethodArg::Enumerate => CountMethod::Enumerate,
                CountMethodArg::Determinant => CountMethod::Determinant,
                CountMethodArg::HookContent => CountMethod::HookContent,
            };
            let v = count_excited(&shape, m)?;
            let prov = if matches!(method, CountMethodArg::Enumerate) { "oracle" } else { "formula" };
            Ok(Reply::checked(prov, json!({ "shape": shape.to_string(), "count": int(&v) }), true))
        }
        ExcitedCmd::Enumerate { shape, variant, limit } => {
            let v = match variant {
                VariantArg::Se => Variant::SE,
                VariantArg::Ne => Variant::NE,
            };
            let ds = enumerate_excited(&shape, v);
            if ds.len() > limit {
                return Err(Error::Resource(format!("{} diagrams exceed --limit {limit}", ds.len())));
            }
            let list: Vec<Value> = ds.iter().map(|d| d.to_json()["cells"].clone()).collect();
            Ok(Reply::oracle(json!({ "shape": shape.to_string(), "variant": v, "count": ds.len(), "diagrams": list })))
        }
    }
}

fn multivar(cmd: MultivarCmd) -> Result<Reply> {
    let MultivarCmd::Verify { kind, shape, abc, trials, seed } = cmd;
    let params = match (shape, abc) {
        (Some(s), None) => IdentityParams::shape(s),
        (None, Some(t)) => {
            let (a, b, c) = parse_triple(&t)?;
            IdentityParams::abc(a, b, c)
        }
        (None, None) => return Err(Error::Precondition("give --shape or --abc".into())),
        (Some(_), Some(_)) => return Err(Error::Precondition("give only one of --shape and --abc".into())),
    };
    let r = verify_identity(kind, &params, trials, seed)?;
    let ok = r.passed();
    Ok(Reply::checked("formula", serde_json::to_value(&r).expect("report serializes"), ok))
}

fn product(cmd: ProductCmd) -> Result<Reply> {
    match cmd {
        ProductCmd::Eval { params, corollary, q_order } => {
            let LambdaParams { a, b, c, d, e, .. } = params;
            let shape = build_lambda_shape(params).to_string();
            let value = match (corollary, q_order) {
                (None, None) => json!({ "shape": shape, "count": int(&f_lambda_product(params)) }),
                (None, Some(o)) => json!({ "shape": shape, "series": series_json(&q_lambda_product(params, o)?) }),
                (Some(k), None) => {
                    let kind = match k {
                        CorollaryArg::Abcde => CorollaryKind::Abcde,
                        CorollaryArg::Abc => CorollaryKind::Abc,
                        CorollaryArg::Abcde1 => CorollaryKind::Abcde1,
                    };
                    let shape = build_lambda_shape(kind.params(a, b, c, d, e)).to_string();
                    json!({ "shape": shape, "corollary": kind, "count": int(&f_corollary(kind, a, b, c, d, e)) })
                }
                (Some(k), Some(o)) => {
                    let kind = match k {
                        CorollaryArg::Abcde => QCorollaryKind::Abcde,
                        CorollaryArg::Abc => QCorollaryKind::Abc,
                        CorollaryArg::Abcde1 => QCorollaryKind::Abcde1,
                    };
                    json!({ "corollary": kind, "series": series_json(&q_corollary(kind, a, b, c, d, e, o)?) })
                }
            };
            Ok(Reply::formula(value))
        }
        ProductCmd::Verify { params, q_order } => {
            let shape = build_lambda_shape(params);
            match q_order {
                None => {
                    let f = f_lambda_product(params);
                    let o = syt_count_oracle(&shape, SytMethod::Determinant)?;
                    let ok = f == o;
                    Ok(Reply::checked(
                        "formula",
                        json!({ "shape": shape.to_string(), "product": int(&f), "oracle": int(&o), "equal": ok }),
                        ok,
                    ))
                }
                Some(order) => {
                    let f = q_lambda_product(params, order)?;
                    let o = ssyt_series_oracle(&shape, order)?;
                    let ok = f == o;
                    Ok(Reply::checked(
                        "formula",
                        json!({ "shape": shape.to_string(), "product": series_json(&f), "oracle": series_json(&o), "equal": ok }),
                        ok,
                    ))
                }
            }
        }
        ProductCmd::Conjecture { kind, a, c } => {
            let kind = match kind {
                ConjectureArg::SchubSkew => ConjectureKind::SchubSkew,
                ConjectureArg::Kratt => ConjectureKind::Kratt,
            };
            let r = conjecture_eval(kind, a, c)?;
            Ok(Reply::checked("conjectural", serde_json::to_value(&r).expect("report serializes"), true))
        }
    }
}

fn schubert(cmd: SchubertCmd) -> Result<Reply> {
    match cmd {
        SchubertCmd::Upsilon { perm, c, method } => {
            let v = upsilon_shifted(&perm, c, method)?;
            let prov = if method == UpsilonMethod::Macdonald { "oracle" } else { "formula" };
            Ok(Reply::checked(prov, json!({ "perm": perm.to_string(), "c": c, "method": method, "upsilon": int(&v) }), true))
        }
        SchubertCmd::Family { kind, n, a, b, c, check } => {
            let fam = Family::from_parts(&kind, n, a, b)?;
            let w = family(fam)?;
            let closed = upsilon_closed_form(fam, c)?;
            let mut value = json!({
                "family": fam.to_string(),
                "perm": w.to_string(),
                "length": w.length(),
                "c": c,
                "closed_form": int(&closed),
            });
            let mut ok = true;
            if check {
                let m = upsilon_shifted(&w, c, UpsilonMethod::Macdonald)?;
                ok = m == closed;
                value["macdonald"] = int(&m);
                value["equal"] = json!(ok);
            }
            Ok(Reply::checked("formula", value, ok))
        }
        SchubertCmd::Classify { perm } => {
            let class = classify(&perm);
            let d = rothe_diagram(&perm);
            let mut value = json!({
                "perm": perm.to_string(),
                "length": perm.length(),
                "class": class,
                "diagram": d.cells.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
                "essential": d.essential.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
            });
            if class.vexillary {
                let (mu, lambda) = vexillary_shapes(&perm)?;
                value["shape"] = json!(SkewShape::new(lambda, mu)?.to_string());
            }
            Ok(Reply::oracle(value))
        }
    }
}

fn verify(cmd: VerifyCmd, timed: bool) -> Result<Reply> {
    let reports = match cmd {
        VerifyCmd::All { level } => run_all(level, timed),
        VerifyCmd::Criterion { id, level } => vec![run_criterion(id, level, timed)?],
    };
    let ok = reports.iter().all(|r| r.passed());
    Ok(Reply::checked("oracle", json!({ "passed": ok, "criteria": reports }), ok))
}

fn dispatch(cli: Cli) -> Result<Reply> {
    match cli.command {
        Group::Syt(c) => syt(c),
        Group::Excited(c) => excited(c),
        Group::Multivar(c) => multivar(c),
        Group::Product(c) => product(c),
        Group::Schubert(c) => schubert(c),
        Group::Lozenge(c) => lozenge_cmd::run(c),
        Group::Verify(c) => verify(c, cli.timing),
    }
}

fn render(v: &Value, pretty: bool) -> String {
    let mut s = if pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) }.expect("JSON values serialize");
    s.push('\n');
    s
}

/// Parse `argv` (program name first) and run it.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: 1, stdout: String::new(), stderr: text },
            };
        }
    };
    let command: Vec<String> = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .filter(|a| a != "--pretty" && a != "--timing")
        .collect();
    let (pretty, timed) = (cli.pretty, cli.timing);
    let start = Instant::now();
    match dispatch(cli) {
        Ok(reply) => {
            let mut out = json!({
                "command": command.join(" "),
                "provenance": reply.provenance,
                "ok": reply.ok,
                "value": reply.value,
            });
            if timed {
                out["millis"] = json!(start.elapsed().as_millis() as u64);
            }
            let code = if reply.ok { 0 } else { 2 };
            Outcome { code, stdout: render(&out, pretty), stderr: String::new() }
        }
        Err(e) => {
            let code = if matches!(e, Error::Verification(_)) { 2 } else { 1 };
            let out = json!({ "command": command.join(" "), "error": e.to_string() });
            Outcome { code, stdout: render(&out, pretty), stderr: format!("skewhook: {e}\n") }
        }
    }
}

pub(crate) fn rational_json(r: &num_rational::BigRational) -> Value {
    Value::String(rational_string(r))
}
