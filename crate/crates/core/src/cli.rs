//! Command-line front end. [`run`] parses arguments, dispatches to the library
//! and returns the exit code with the rendered output, so the binary stays a
//! one-liner and tests can drive it in process.
//!
//! Exit codes: 0 on success with every check equal, 1 when a check disagrees,
//! 2 on a usage or domain error.

use std::ffi::OsString;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::characters::{kostka_foulkes, kostka_oracle, level1_strips, Variant};
use crate::error::{parse_err, Error, Result};
use crate::polyring::json::{polynomial_value, qpoly_value};
use crate::polyring::rational_text;
use crate::schur::{schur, Method};
use crate::shapes::{BorderStrip, Partition, SkewDiagram};
use crate::spectra::{delta, enumerate_fiber, SpectrumPoint};
use crate::twisted::{twisted_schur, TwistedMethod, TwistedSpectrumPoint};
use crate::verify::{self, summary, ReportRecord, SuiteBounds};

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A comma-separated list of positive block lengths; `""` is the empty list.
/// Surrounding `[]` or `<>` are ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blocks(pub Vec<usize>);

impl FromStr for Blocks {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['[', '<']).trim_end_matches([']', '>']);
        inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<usize>() {
                Ok(m) if m > 0 => Ok(m),
                _ => Err(parse_err(t, "expected a positive integer")),
            })
            .collect::<Result<Vec<_>>>()
            .map(Blocks)
    }
}

#[derive(Parser, Debug)]
#[command(name = "vertex-spectra", version, about = "Exact skew Schur functions, vertex-model spectra and level-1 character identities")]
struct Cli {
    /// Human-readable polynomials instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// CSV instead of JSON for tabular output.
    #[arg(long, global = true)]
    csv: bool,
    /// Attach wall-clock times to reports (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Skew Schur polynomial of a shape.
    Schur(SchurArgs),
    /// Spectrum points with |κ| ≤ N, their strips, energies and fiber sizes.
    Spectrum {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        sector: Option<usize>,
    },
    /// Configurations in the fiber of a spectrum point.
    Fiber {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        h: Blocks,
    },
    /// Strip decomposition of a level-1 character, checked against the theta function.
    Decompose(DjkmoArgs),
    /// Kostka–Foulkes polynomial K_{λ,(1^|λ|)}(q) with its contributing strips.
    Kostka {
        #[arg(long)]
        lambda: Partition,
        /// Rank; defaults to the length of λ.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Identity checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// The signed-alphabet model.
    #[command(subcommand)]
    Twisted(TwistedCommand),
}

#[derive(Args, Debug)]
struct SchurArgs {
    #[arg(long)]
    shape: SkewDiagram,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    relation: bool,
    #[arg(long, default_value = "enum")]
    method: Method,
}

#[derive(Args, Debug)]
struct DjkmoArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 6)]
    order: usize,
    #[arg(long, default_value = "a")]
    variant: Variant,
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Level-1 theta function = strip decomposition.
    Djkmo {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 6)]
        order: usize,
        /// Omit to check both variants.
        #[arg(long)]
        variant: Option<Variant>,
    },
    /// Σ_λ b_λ s_λ = strip decomposition.
    Branching {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// F_N = H_N and the H_N recursion, without the relation.
    Rogers {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
    },
    /// A_{N,m}: sum = closed form, and the recursion.
    Acoeff {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
    },
    /// Strip sum = triangular oracle for every λ ⊢ N.
    Kostka {
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Enumeration = Jacobi–Trudi (= strip determinant = recursion for strips).
    Schur {
        #[arg(long)]
        shape: SkewDiagram,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        relation: bool,
    },
    /// Fiber character = s_κ(h), and the tableau bijection.
    Fiber {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        h: Blocks,
        #[arg(long)]
        relation: bool,
    },
    /// q^{E_N} H_N(q^{-1}) = spectrum sum = vertex partition function.
    Polychronakos {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
    },
    /// Leading coefficients agree between N and N+n.
    Stabilize {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
    /// s_κ splits at every pair with m_i + m_{i+1} > n.
    Factorization {
        #[arg(long)]
        h: Blocks,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        relation: bool,
    },
    /// Conjugate = s of the n-complement (relation mode).
    Conjugate {
        #[arg(long)]
        shape: SkewDiagram,
        #[arg(long)]
        n: usize,
    },
    /// SST ↔ GZ round trip.
    Gz {
        #[arg(long)]
        shape: SkewDiagram,
        #[arg(long)]
        n: usize,
    },
    /// Twisted theta = strip decomposition = fiber sum.
    Twisted {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        order: usize,
    },
    /// Every family over a fixed range.
    All {
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Subcommand, Debug)]
enum TwistedCommand {
    /// Theta function = strip decomposition = fiber sum.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        order: usize,
    },
    /// s^L of κ(h) = ⟨h, 2n⟩.
    Schur {
        #[arg(long, allow_hyphen_values = true)]
        h: Blocks,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "enum")]
        method: TwistedMethod,
    },
}

struct Rendered {
    body: String,
    failed: bool,
}

impl Rendered {
    fn ok(body: String) -> Self {
        Self { body, failed: false }
    }
}

fn to_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values always serialize") + "\n"
}

fn to_csv(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn reports(records: Vec<ReportRecord>, cli: &Cli, start: std::time::Instant) -> Rendered {
    let mut records = records;
    if cli.timing {
        let ms = start.elapsed().as_millis() as u64;
        records.iter_mut().filter(|r| r.wall_time_ms.is_none()).for_each(|r| r.wall_time_ms = Some(ms));
    }
    let failed = records.iter().any(|r| !r.equal);
    let body = if cli.csv {
        to_csv(
            &["identity", "parameters", "equal", "first_mismatch"],
            records
                .iter()
                .map(|r| {
                    vec![
                        r.identity.clone(),
                        r.parameters.to_string(),
                        r.equal.to_string(),
                        r.first_mismatch
                            .as_ref()
                            .map_or(String::new(), |m| serde_json::to_string(m).unwrap()),
                    ]
                })
                .collect(),
        )
    } else if records.len() == 1 {
        to_json(&serde_json::to_value(&records[0]).unwrap())
    } else {
        to_json(&summary(&records))
    };
    Rendered { body, failed }
}

fn dispatch(cli: &Cli) -> Result<Rendered> {
    let start = std::time::Instant::now();
    match &cli.command {
        Command::Schur(a) => {
            let p = schur(&a.shape, a.n, a.relation, a.method)?;
            Ok(Rendered::ok(if cli.pretty {
                format!("{p}\n")
            } else {
                to_json(&json!({
                    "shape": a.shape.to_string(),
                    "n": a.n,
                    "relation": a.relation,
                    "method": a.method.to_string(),
                    "polynomial": polynomial_value(&p),
                }))
            }))
        }
        Command::Spectrum { n, big_n, sector } => spectrum(cli, *n, *big_n, *sector),
        Command::Fiber { n, h } => fiber(cli, *n, h),
        Command::Decompose(a) => decompose(cli, a, start),
        Command::Kostka { lambda, n } => kostka(cli, lambda, *n),
        Command::Verify(v) => {
            let records = match v {
                VerifyCommand::Djkmo { n, k, order, variant } => match variant {
                    Some(v) => vec![verify::djkmo(*n, *k, *order, *v)?],
                    None => vec![
                        verify::djkmo(*n, *k, *order, Variant::A)?,
                        verify::djkmo(*n, *k, *order, Variant::B)?,
                    ],
                },
                VerifyCommand::Branching { n, k, order } => vec![verify::branching(*n, *k, *order)?],
                VerifyCommand::Rogers { n, big_n } => {
                    vec![verify::rogers(*n, *big_n), verify::rogers_recursion(*n, *big_n)]
                }
                VerifyCommand::Acoeff { n, big_n } => verify::a_coefficients(*n, *big_n)?,
                VerifyCommand::Kostka { big_n, n } => verify::kostka(*big_n, n.unwrap_or(*big_n).max(1)),
                VerifyCommand::Schur { shape, n, relation } => verify::schur_methods(shape, *n, *relation),
                VerifyCommand::Fiber { n, h, relation } => {
                    verify::spectral(&SpectrumPoint::new(*n, h.0.clone())?, *relation)?
                }
                VerifyCommand::Polychronakos { n, big_n } => {
                    verify::require(*n >= 1, "need n >= 1")?;
                    verify::polychronakos(*n, *big_n)?
                }
                VerifyCommand::Stabilize { n, big_n, order } => vec![verify::stabilize(*n, *big_n, *order)?],
                VerifyCommand::Factorization { h, n, relation } => {
                    let bs = BorderStrip::new(h.0.clone())?;
                    let r = verify::factorization(&bs, *n, *relation)?;
                    verify::require(!r.is_empty(), format!("{bs} has no pair with m_i + m_(i+1) > {n}"))?;
                    r
                }
                VerifyCommand::Conjugate { shape, n } => verify::conjugate(shape, *n)?,
                VerifyCommand::Gz { shape, n } => vec![verify::gz(shape, *n)?],
                VerifyCommand::Twisted { n, order } => verify::twisted_identity(*n, *order)?,
                VerifyCommand::All { quick } => verify::suite(SuiteBounds::new(*quick), cli.timing)?,
            };
            Ok(reports(records, cli, start))
        }
        Command::Twisted(TwistedCommand::Verify { n, order }) => {
            Ok(reports(verify::twisted_identity(*n, *order)?, cli, start))
        }
        Command::Twisted(TwistedCommand::Schur { h, n, method }) => {
            let point = TwistedSpectrumPoint::new(h.0.clone())?;
            let p = twisted_schur(&point, *n, *method)?;
            Ok(Rendered::ok(if cli.pretty {
                format!("{p}\n")
            } else {
                to_json(&json!({
                    "h": point.to_string(),
                    "kappa": point.kappa(*n).to_string(),
                    "n": n,
                    "method": if *method == TwistedMethod::Enumeration { "enum" } else { "det" },
                    "polynomial": polynomial_value(&p),
                }))
            }))
        }
    }
}

fn spectrum(cli: &Cli, n: usize, big_n: usize, sector: Option<usize>) -> Result<Rendered> {
    verify::require(n >= 1, "need n >= 1")?;
    let mut rows = Vec::new();
    for size in 0..=big_n {
        if sector.is_some_and(|k| size % n != k) {
            continue;
        }
        for bs in verify::spectrum_strips(size, n) {
            let h = SpectrumPoint::new(n, bs.columns().to_vec())?;
            rows.push(json!({
                "h": h.to_string(),
                "sector": h.sector(),
                "kappa": bs.to_string(),
                "shape": bs.realize().to_string(),
                "t": bs.t_statistic(),
                "energy": h.energy(),
                "fiber_size": enumerate_fiber(&h).len(),
            }));
        }
    }
    let keys = ["h", "sector", "kappa", "shape", "t", "energy", "fiber_size"];
    Ok(Rendered::ok(if cli.csv {
        to_csv(
            &keys,
            rows.iter()
                .map(|r| keys.iter().map(|k| plain(&r[*k])).collect())
                .collect(),
        )
    } else {
        to_json(&json!({"n": n, "N": big_n, "sector": sector, "points": rows}))
    }))
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn fiber(cli: &Cli, n: usize, h: &Blocks) -> Result<Rendered> {
    verify::require(n >= 1, "need n >= 1")?;
    let point = SpectrumPoint::new(n, h.0.clone())?;
    let configs = enumerate_fiber(&point);
    Ok(Rendered::ok(if cli.csv {
        to_csv(
            &["prefix", "energy", "weight_doubled"],
            configs
                .iter()
                .map(|s| {
                    let prefix: Vec<String> = s.prefix().iter().map(usize::to_string).collect();
                    let w: Vec<String> = s.weight().doubled().iter().map(i32::to_string).collect();
                    vec![prefix.join(" "), s.energy().to_string(), w.join(" ")]
                })
                .collect(),
        )
    } else {
        to_json(&json!({
            "n": n,
            "h": point.to_string(),
            "kappa": point.kappa().to_string(),
            "count": configs.len(),
            "configurations": configs.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
        }))
    }))
}

fn decompose(cli: &Cli, a: &DjkmoArgs, start: std::time::Instant) -> Result<Rendered> {
    let record = verify::djkmo(a.n, a.k, a.order, a.variant)?;
    let kb = match a.variant {
        Variant::A => a.k,
        Variant::B => (a.n - a.k) % a.n,
    };
    let strips: Vec<Value> = level1_strips(a.n, kb, a.order, 0)
        .into_iter()
        .map(|(j, bs)| {
            json!({
                "strip": bs.to_string(),
                "exponent": rational_text(delta(a.n, a.k) + num_rational::Rational64::from(j as i64)),
            })
        })
        .collect();
    let mut r = reports(vec![record], cli, start);
    if !cli.csv {
        let mut v: Value = serde_json::from_str(&r.body).unwrap();
        v["strips"] = Value::Array(strips);
        r.body = to_json(&v);
    }
    Ok(r)
}

fn kostka(cli: &Cli, lambda: &Partition, n: Option<usize>) -> Result<Rendered> {
    let n = n.unwrap_or(lambda.len().max(1));
    let result = kostka_foulkes(lambda, n);
    let oracle = kostka_oracle(lambda, n);
    let agrees = oracle == result.polynomial;
    let body = if cli.csv {
        to_csv(
            &["strip", "t", "lr"],
            result
                .strips
                .iter()
                .map(|(bs, t, c)| vec![bs.to_string(), t.to_string(), c.to_string()])
                .collect(),
        )
    } else if cli.pretty {
        format!("{}\n", result.polynomial)
    } else {
        let top = result.polynomial.max_degree().unwrap_or(0).max(0);
        let dense: Vec<Value> = (0..=top)
            .map(|e| json!(result.polynomial.coeff(e).to_string().parse::<i64>().unwrap_or(0)))
            .collect();
        to_json(&json!({
            "lambda": lambda.to_string(),
            "n": n,
            "polynomial": qpoly_value(&result.polynomial),
            "coefficients": dense,
            "pretty": result.polynomial.to_string(),
            "strip_count": result.strips.len(),
            "strips": result.strips.iter().map(|(bs, t, c)| json!({"strip": bs.to_string(), "t": t, "lr": c})).collect::<Vec<_>>(),
            "oracle_equal": agrees,
        }))
    };
    Ok(Rendered { body, failed: !agrees })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(&cli) {
        Ok(r) => Outcome {
            code: i32::from(r.failed),
            stdout: r.body,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
