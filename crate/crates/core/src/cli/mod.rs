//! The `szf` command line: argument parsing, input ingestion, dispatch and
//! output rendering. [`parse_and_run`] is the whole program minus process I/O.

pub mod document;
pub mod parse;
pub mod render;

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use thiserror::Error;

use crate::error::ZetaError;
use crate::exact_poly::RationalSeries;
use crate::invariants::{
    as_complete_intersection, dual_info, lci_consistency_check, polar_degrees_with_tail,
};
use crate::staircase::{integral_closure_reduce, monomial2d_zeta, MonomialIdeal2D};
use crate::zeta::{
    bootstrap_zeta, ci_zeta, linear_system_zeta, splayed_product, validate_zeta, SegreClassData,
    SegreZeta,
};
use document::SchemaError;
use parse::ParseError;
use render::Style;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MALFORMED: i32 = 3;
pub const EXIT_IO: i32 = 4;
pub const EXIT_MATH: i32 = 5;
pub const EXIT_INVALID: i32 = 6;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{source_name}: {error}")]
    Schema {
        source_name: String,
        error: SchemaError,
    },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Math(#[from] ZetaError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Schema { .. } => EXIT_MALFORMED,
            CliError::Io { .. } => EXIT_IO,
            CliError::Math(_) => EXIT_MATH,
            CliError::Usage(_) => EXIT_USAGE,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Latex,
}

#[derive(Debug, Parser)]
#[command(
    name = "szf",
    version,
    about = "Segre zeta functions: construction, expansion and projective invariants"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "SZF_FORMAT", default_value = "plain")]
    pub format: OutputFormat,

    /// Also print the power-series expansion up to t^N.
    #[arg(long, global = true, value_name = "N")]
    pub expand: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ZetaInput {
    /// Inline zeta, e.g. "(3t^2+8t^3)/((1+2t)^3)".
    #[arg(long, allow_hyphen_values = true)]
    pub zeta: Option<String>,
    /// JSON zeta document; `-` reads stdin.
    #[arg(long, value_name = "PATH", conflicts_with = "zeta")]
    pub zeta_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Complete intersection of hypersurfaces of the given degrees.
    Ci {
        #[arg(required = true, allow_negative_numbers = true)]
        degrees: Vec<i64>,
    },
    /// Two-variable monomial ideal from its exponent vectors.
    Monomial {
        /// Exponent pairs, e.g. "7,0;5,1;4,2".
        #[arg(long, required_unless_present = "file")]
        generators: Option<String>,
        /// JSON document {"vars": 2, "generators": [[a,b], ...]}; `-` reads stdin.
        #[arg(long, value_name = "PATH", conflicts_with = "generators")]
        file: Option<PathBuf>,
    },
    /// Rebuild the zeta from generator degrees and truncated Segre-class data.
    Bootstrap {
        /// Generator degrees, comma separated.
        #[arg(long)]
        degrees: String,
        /// Segre coefficients of H^0, H^1, ..., comma separated.
        #[arg(long, allow_hyphen_values = true, required_unless_present = "segre_file")]
        segre: Option<String>,
        /// JSON document {"ambient_dim": n, "coefficients": [...]}; `-` reads stdin.
        #[arg(long, value_name = "PATH", conflicts_with = "segre")]
        segre_file: Option<PathBuf>,
        /// Ambient dimension for inline data (default: enough to hold the data
        /// and at least the number of degrees minus one).
        #[arg(long)]
        ambient_dim: Option<usize>,
    },
    /// Hypersurfaces of one degree from a linear system, given intersection counts.
    Linsys {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n: usize,
        /// N_0, ..., N_n, comma separated.
        #[arg(long)]
        counts: String,
    },
    /// Product of zetas (ideals in disjoint variables).
    Product {
        #[arg(long = "zeta", allow_hyphen_values = true)]
        zetas: Vec<String>,
        #[arg(long = "zeta-file", value_name = "PATH")]
        files: Vec<PathBuf>,
    },
    /// Reduce and expand a zeta (default order: twice the denominator degree).
    Expand {
        #[command(flatten)]
        input: ZetaInput,
    },
    /// Polar degrees and dual-variety data of a nonsingular Z in P^n.
    Ranks {
        #[command(flatten)]
        input: ZetaInput,
        #[arg(long)]
        n: usize,
        /// Number of series coefficients past t^n to report (default n).
        #[arg(long)]
        tail: Option<usize>,
    },
    /// The substitution t -> -t/(1+t).
    Dual {
        #[command(flatten)]
        input: ZetaInput,
    },
    /// Recognize a complete-intersection zeta.
    CheckCi {
        #[command(flatten)]
        input: ZetaInput,
    },
    /// Split the numerator as for a local complete intersection cut out by forms of the given degrees.
    CheckLci {
        #[command(flatten)]
        input: ZetaInput,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degrees: String,
    },
    /// Check the rationality structure against generator degrees.
    Validate {
        #[command(flatten)]
        input: ZetaInput,
        #[arg(long)]
        degrees: String,
    },
}

/// Exit status and rendered streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command. `stdin` is
/// consulted only for file arguments equal to `-`.
pub fn parse_and_run<I, T>(argv: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    match run(&cli, stdin) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("szf: {e}\n"),
        },
    }
}

struct Ctx<'a> {
    format: OutputFormat,
    expand: Option<usize>,
    stdin: &'a mut dyn Read,
}

impl Ctx<'_> {
    fn read_source(&mut self, path: &PathBuf) -> Result<(String, String), CliError> {
        let name = path.display().to_string();
        let mut text = String::new();
        let res = if name == "-" {
            self.stdin.read_to_string(&mut text).map(|_| ())
        } else {
            std::fs::read_to_string(path).map(|t| text = t)
        };
        res.map_err(|e| CliError::Io {
            path: name.clone(),
            message: e.to_string(),
        })?;
        Ok((if name == "-" { "<stdin>".into() } else { name }, text))
    }

    fn read_json<T>(
        &mut self,
        path: &PathBuf,
        reader: impl Fn(&Value) -> Result<T, SchemaError>,
    ) -> Result<T, CliError> {
        let (source_name, text) = self.read_source(path)?;
        document::parse_json(&text)
            .and_then(|v| reader(&v))
            .map_err(|error| CliError::Schema { source_name, error })
    }

    fn series_from(&mut self, inline: Option<&String>, file: Option<&PathBuf>) -> Result<RationalSeries, CliError> {
        match (inline, file) {
            (Some(s), _) => Ok(parse::parse_zeta(s)?),
            (None, Some(path)) => self.read_json(path, document::read_series),
            (None, None) => Err(CliError::Usage("one of --zeta or --zeta-file is required".into())),
        }
    }

    fn zeta(&mut self, input: &ZetaInput) -> Result<SegreZeta, CliError> {
        let series = self.series_from(input.zeta.as_ref(), input.zeta_file.as_ref())?;
        Ok(SegreZeta::from_series(series)?)
    }

    fn style(&self) -> Style {
        match self.format {
            OutputFormat::Latex => Style::Latex,
            _ => Style::Plain,
        }
    }
}

fn degrees_arg(raw: &[i64]) -> Result<Vec<u64>, CliError> {
    raw.iter()
        .map(|&d| {
            u64::try_from(d)
                .ok()
                .filter(|&d| d > 0)
                .ok_or(CliError::Math(ZetaError::InvalidDegree(d)))
        })
        .collect()
}

fn degree_list_arg(s: &str) -> Result<Vec<u64>, CliError> {
    degrees_arg(&parse::parse_int_list(s)?)
}

fn json_out(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

/// Renders a zeta (and its expansion when requested) in the chosen format;
/// `extra` lines are appended in plain/LaTeX output and `fields` merged into JSON.
fn emit_zeta(
    ctx: &Ctx,
    z: &SegreZeta,
    order: Option<usize>,
    extra: Vec<String>,
    fields: Vec<(&str, Value)>,
) -> String {
    let expansion = order.map(|n| z.expand(n));
    match ctx.format {
        OutputFormat::Json => {
            let mut obj = json!({
                "zeta": document::write_zeta(z),
                "codim": z.codim(),
                "degree": z.degree().to_string(),
            });
            if let Some(e) = &expansion {
                let n = order.expect("set with expansion");
                obj["expansion"] = json!((0..=n).map(|k| e.coeff(k).to_string()).collect::<Vec<_>>());
            }
            for (k, v) in fields {
                obj[k] = v;
            }
            json_out(obj)
        }
        _ => {
            let style = ctx.style();
            let mut lines = vec![render::series(z.series(), style)];
            if let Some(e) = &expansion {
                lines.push(render::poly(e, style));
            }
            lines.extend(extra);
            lines.join("\n") + "\n"
        }
    }
}

fn default_order(z: &SegreZeta) -> usize {
    (2 * z.denominator().len()).max(z.numerator().degree().unwrap_or(0))
}

fn run(cli: &Cli, stdin: &mut dyn Read) -> Result<(i32, String), CliError> {
    let mut ctx = Ctx {
        format: cli.format,
        expand: cli.expand,
        stdin,
    };
    let out = match &cli.command {
        Command::Ci { degrees } => {
            let z = ci_zeta(&degrees_arg(degrees)?)?;
            emit_zeta(&ctx, &z, ctx.expand, vec![], vec![])
        }

        Command::Monomial { generators, file } => {
            let gens = match (generators, file) {
                (Some(s), _) => parse::parse_generators(s)?,
                (None, Some(path)) => ctx.read_json(path, document::read_generators)?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            let ideal = MonomialIdeal2D::new(gens)?;
            let reduction = integral_closure_reduce(&ideal);
            let z = monomial2d_zeta(&ideal);
            let list = |v: &[crate::staircase::Exponent]| {
                v.iter().map(ToString::to_string).collect::<Vec<_>>()
            };
            let vertices = list(reduction.boundary.vertices());
            let discarded = list(&reduction.discarded);
            let on_edge = list(&reduction.on_edge);
            let mut extra = vec![format!("hull vertices: {}", vertices.join(" "))];
            if !discarded.is_empty() {
                extra.push(format!("discarded (integral over the rest): {}", discarded.join(" ")));
            }
            if !on_edge.is_empty() {
                extra.push(format!("on a hull edge (redundant): {}", on_edge.join(" ")));
            }
            emit_zeta(
                &ctx,
                &z,
                ctx.expand,
                extra,
                vec![
                    ("vertices", json!(reduction.boundary.vertices().iter().map(|e| [e.x, e.y]).collect::<Vec<_>>())),
                    ("discarded", json!(reduction.discarded.iter().map(|e| [e.x, e.y]).collect::<Vec<_>>())),
                    ("on_edge", json!(reduction.on_edge.iter().map(|e| [e.x, e.y]).collect::<Vec<_>>())),
                ],
            )
        }

        Command::Bootstrap {
            degrees,
            segre,
            segre_file,
            ambient_dim,
        } => {
            let degrees = degree_list_arg(degrees)?;
            let (n, coeffs) = match (segre, segre_file) {
                (Some(s), _) => {
                    let coeffs = parse::parse_bigint_list(s)?;
                    let n = ambient_dim.unwrap_or_else(|| {
                        coeffs.len().saturating_sub(1).max(degrees.len().saturating_sub(1))
                    });
                    (n, coeffs)
                }
                (None, Some(path)) => ctx.read_json(path, document::read_segre)?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            let data = SegreClassData::new(n, coeffs)?;
            let z = bootstrap_zeta(&degrees, &data)?;
            emit_zeta(&ctx, &z, ctx.expand, vec![], vec![])
        }

        Command::Linsys { d, n, counts } => {
            let counts = parse::parse_int_list(counts)?
                .into_iter()
                .map(|c| {
                    u64::try_from(c).map_err(|_| {
                        CliError::Usage(format!("count {c} must be a nonnegative integer"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let z = linear_system_zeta(*d, *n, &counts)?;
            emit_zeta(&ctx, &z, ctx.expand, vec![], vec![])
        }

        Command::Product { zetas, files } => {
            let mut factors = Vec::new();
            for s in zetas {
                factors.push(SegreZeta::from_series(parse::parse_zeta(s)?)?);
            }
            for f in files {
                let series = ctx.series_from(None, Some(f))?;
                factors.push(SegreZeta::from_series(series)?);
            }
            let mut iter = factors.into_iter();
            let first = iter
                .next()
                .ok_or_else(|| CliError::Usage("product needs at least one --zeta or --zeta-file".into()))?;
            let z = iter.fold(first, |acc, f| splayed_product(&acc, &f));
            emit_zeta(&ctx, &z, ctx.expand, vec![], vec![])
        }

        Command::Expand { input } => {
            let z = ctx.zeta(input)?;
            let order = ctx.expand.unwrap_or_else(|| default_order(&z));
            emit_zeta(&ctx, &z, Some(order), vec![], vec![])
        }

        Command::Ranks { input, n, tail } => {
            let z = ctx.zeta(input)?;
            let pd = polar_degrees_with_tail(&z, *n, tail.unwrap_or(*n))?;
            let (dual_dim, dual_degree) = dual_info(&pd);
            let style = ctx.style();
            match ctx.format {
                OutputFormat::Json => json_out(json!({
                    "n": pd.n,
                    "m": pd.m,
                    "deltas": (0..=pd.m).rev().map(|i| json!({
                        "i": i,
                        "delta": pd.delta(i).expect("i ≤ m").to_string(),
                    })).collect::<Vec<_>>(),
                    "tail": render::bigints(&pd.tail),
                    "dual": {"dimension": dual_dim, "degree": dual_degree.to_string()},
                    "assumes_nonsingular": pd.assumes_nonsingular,
                })),
                _ => {
                    let deltas = (0..=pd.m)
                        .rev()
                        .map(|i| format!("{} = {}", render::delta_name(i, style), pd.delta(i).expect("i ≤ m")))
                        .collect::<Vec<_>>()
                        .join(", ");
                    let mut out = format!("{deltas}; dual: dimension {dual_dim}, degree {dual_degree}\n");
                    if !pd.tail.is_empty() {
                        let mut coeffs = vec![BigInt::from(0); pd.n + 1];
                        coeffs.extend(pd.tail.iter().cloned());
                        let tail = crate::exact_poly::IntPoly::new(coeffs);
                        out.push_str(&format!("tail: {}\n", render::poly(&tail, style)));
                    }
                    out
                }
            }
        }

        Command::Dual { input } => {
            let z = ctx.zeta(input)?;
            let dual = z.series().subst_dual();
            let expansion = ctx.expand.map(|n| dual.expand(n).expect("dual denominator has constant term 1"));
            match ctx.format {
                OutputFormat::Json => {
                    let mut obj = json!({
                        "numerator": render::bigints(dual.numerator.coeffs()),
                        "denominator": render::bigints(dual.denominator.coeffs()),
                    });
                    if let Some(e) = &expansion {
                        obj["expansion"] = json!(render::bigints(e.coeffs()));
                    }
                    json_out(obj)
                }
                _ => {
                    let mut out = render::fraction(&dual, ctx.style()) + "\n";
                    if let Some(e) = &expansion {
                        out.push_str(&render::poly(e, ctx.style()));
                        out.push('\n');
                    }
                    out
                }
            }
        }

        Command::CheckCi { input } => {
            let z = ctx.zeta(input)?;
            let ci = as_complete_intersection(&z);
            match ctx.format {
                OutputFormat::Json => json_out(json!({ "complete_intersection": ci })),
                _ => match ci {
                    Some(d) => format!("complete intersection of degrees {}\n", render::int_list(&d)),
                    None => "not a complete intersection\n".into(),
                },
            }
        }

        Command::CheckLci { input, n, degrees } => {
            let z = ctx.zeta(input)?;
            let report = lci_consistency_check(&z, *n, &degree_list_arg(degrees)?)?;
            match ctx.format {
                OutputFormat::Json => json_out(json!({
                    "is_ci_type": report.is_ci_type,
                    "normal_degrees": report.normal_degrees,
                    "residual_degrees": report.residual_degrees,
                })),
                _ => match (&report.normal_degrees, &report.residual_degrees) {
                    (Some(normal), Some(residual)) => format!(
                        "complete-intersection type: normal degrees [{}], residual degrees [{}]\n",
                        render::int_list(normal),
                        render::int_list(residual)
                    ),
                    _ => "not of complete-intersection type\n".into(),
                },
            }
        }

        Command::Validate { input, degrees } => {
            let z = ctx.zeta(input)?;
            let report = validate_zeta(&z, &degree_list_arg(degrees)?);
            let code = if report.passed() { EXIT_OK } else { EXIT_INVALID };
            let out = match ctx.format {
                OutputFormat::Json => json_out(json!({
                    "passed": report.passed(),
                    "checks": report.checks.iter().map(|c| json!({
                        "name": c.name, "passed": c.passed, "detail": c.detail,
                    })).collect::<Vec<_>>(),
                })),
                _ => {
                    let mut out: String = report
                        .checks
                        .iter()
                        .map(|c| format!("[{}] {}: {}\n", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail))
                        .collect();
                    out.push_str(if report.passed() { "valid\n" } else { "invalid\n" });
                    out
                }
            };
            return Ok((code, out));
        }
    };
    Ok((EXIT_OK, out))
}
