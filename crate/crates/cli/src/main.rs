//! `tiltstab`: command-line front end for the exact verification engine.
//!
//! JSON goes to stdout (or `--out`) as one compact line with every number an
//! exact scalar string. CSV and SVG carry a version comment as their first line.
//! Exit codes: 0 success, 1 domain error, 2 usage error.

mod figures;
mod plot;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use tiltstab_core::bg3::{
    ch2ch3_certificate, delta_value, delta_x, enumerate_weight_tuples, gamma_from_delta, q_gamma,
    q_kernel_seminegativity, reduction_region, Ch2Ch3Case, QGammaParams,
};
use tiltstab_core::bounds::{grid, make_upsilon, make_upsilon_tilde, make_xi, omega, upsilon, upsilon_tilde};
use tiltstab_core::chern::{ChernVector3, GeometryData, Variety};
use tiltstab_core::clifford::{clifford_bound, clifford_bound_bruteforce, restriction_bound, strong_bg_check};
use tiltstab_core::par::Exec;
use tiltstab_core::stab::{central_charge, in_u_gamma, support_interval, StabParams};
use tiltstab_core::verify::verify_all;
use tiltstab_core::walls::{bn_lower_bound, bn_upper_bound, first_wall};
use tiltstab_core::{Error, Scalar};

use figures::Figure;
use plot::{Panel, PlotSpec, Series, Source, Window};

const VERSION: &str = env!("CARGO_PKG_VERSION");
const GRID_ENV: &str = "TILTSTAB_GRID";
const DEFAULT_SAMPLES_PER_UNIT: u32 = 32;
const DEFAULT_BRUTEFORCE_GRID: u32 = 64;
const DEFAULT_VERIFY_SAMPLES: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "tiltstab", version, about = "Exact checks of Bogomolov-Gieseker type bounds and stability conditions")]
struct Cli {
    /// Calabi-Yau threefold: triple or double cover of P^3.
    #[arg(long, global = true, default_value = "triple", value_parser = parse_variety)]
    variety: Variety,
    /// Output format; each command documents which ones it supports.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

/// Inclusive sweep `lo:hi:step`.
#[derive(Clone, Debug)]
struct Sweep {
    lo: Scalar,
    hi: Scalar,
    step: Scalar,
}

impl Sweep {
    fn points(&self) -> Vec<Scalar> {
        grid(&self.lo, &self.hi, &self.step)
    }
}

#[derive(Args, Debug, Clone)]
struct StabArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
    alpha: Scalar,
    #[arg(long, allow_hyphen_values = true, default_value = "0", value_parser = parse_scalar)]
    beta: Scalar,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
    a: Scalar,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
    b: Scalar,
    /// Defaults to the variety's gamma.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
    gamma: Option<Scalar>,
}

impl StabArgs {
    fn params(&self, geom: &GeometryData) -> StabParams {
        let gamma = self.gamma.clone().unwrap_or_else(|| geom.gamma.clone());
        StabParams::new(self.alpha.clone(), self.beta.clone(), self.a.clone(), self.b.clone(), gamma)
    }
}

#[derive(Subcommand, Debug)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Strong BG curve Xi(t) on [0, 1]; without --t dumps the curve (json|csv|svg).
    Xi {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
        t: Option<Scalar>,
    },
    /// Upsilon(x) (or Upsilon~ with --tilde); without --x dumps the curve on [--lo, --hi].
    Upsilon {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
        x: Option<Scalar>,
        #[arg(long)]
        tilde: bool,
        #[arg(long, allow_hyphen_values = true, default_value = "-3", value_parser = parse_scalar)]
        lo: Scalar,
        #[arg(long, allow_hyphen_values = true, default_value = "3", value_parser = parse_scalar)]
        hi: Scalar,
    },
    /// Section bound Omega(x, y) of a vector (ch2, H ch1) = (x, y), y > 0.
    Omega {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
        x: Scalar,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
        y: Scalar,
    },
    /// First possible wall at t (json, or svg of the (beta, alpha)-plane).
    Wall {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
        t: Scalar,
    },
    /// Brill-Noether slope bounds at t, or over --sweep (json|csv).
    BnBounds {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar, conflicts_with = "sweep")]
        t: Option<Scalar>,
        #[arg(long, value_parser = parse_sweep)]
        sweep: Option<Sweep>,
    },
    /// Clifford-type bound at t, or over --sweep lo:hi:step (json|csv|svg).
    Clifford {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar, conflicts_with = "sweep")]
        t: Option<Scalar>,
        #[arg(long, value_parser = parse_sweep)]
        sweep: Option<Sweep>,
        /// Shorthand for --format svg on a sweep.
        #[arg(long, requires = "sweep")]
        emit_svg: bool,
        /// Also run the lattice polygon search with this grid (default 64 or $TILTSTAB_GRID).
        #[arg(long, num_args = 0..=1, default_missing_value = "0")]
        bruteforce: Option<u32>,
    },
    /// Upper bound for ch2/(H^2 ch0) on the surface at mu in (0, 1/2], or over --sweep (json|csv).
    RestrictionBound {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar, conflicts_with = "sweep")]
        mu: Option<Scalar>,
        #[arg(long, value_parser = parse_sweep)]
        sweep: Option<Sweep>,
    },
    /// Check ch2/ch0 <= Xi(|mu|) for --ch r,a,b[,c].
    StrongBgCheck {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ch)]
        ch: ChernVector3,
    },
    /// Quadratic form Q^Gamma_{alpha,beta} on --ch r,a,b,c.
    Qgamma {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ch)]
        ch: ChernVector3,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
        alpha: Scalar,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
        beta: Scalar,
        /// Defaults to the variety's gamma.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
        gamma: Option<Scalar>,
    },
    /// The constant delta_X (stated value, or the literal max formula with --literal).
    Delta {
        #[arg(long)]
        literal: bool,
    },
    /// The constant gamma and its derivation from delta_X.
    Gamma,
    /// Whether (alpha, beta) lies in the reduction region alpha > beta^2/2, |beta| <= 1/2.
    ReductionRegion {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
        alpha: Scalar,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
        beta: Scalar,
    },
    /// Seminegativity of Q^Gamma on the kernel of the reduced central charge.
    KernelCheck {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
        alpha: Scalar,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
        beta: Scalar,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
        gamma: Option<Scalar>,
    },
    /// Whether the parameters lie in U_gamma.
    Ugamma {
        #[command(flatten)]
        params: StabArgs,
    },
    /// Open K-interval on which the kernel matrix is negative definite.
    SupportInterval {
        #[command(flatten)]
        params: StabArgs,
    },
    /// Central charge Z of --ch r,a,b,c.
    CentralCharge {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ch)]
        ch: ChernVector3,
        #[command(flatten)]
        params: StabArgs,
    },
    /// Weight tuples of weighted projective Calabi-Yau hypersurfaces (json|csv).
    Weights {
        #[arg(long, default_value_t = 30)]
        max: u64,
    },
    /// ch2-ch3 inequality certificate for --ch r,a,b,c in case 1..4.
    Ch2ch3 {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ch)]
        ch: ChernVector3,
        #[arg(long)]
        case: Ch2Ch3Case,
    },
    /// Regenerate figure fig1..fig5 (svg|csv); --t applies to fig3 and fig5.
    Figure {
        name: Figure,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
        t: Option<Scalar>,
    },
    /// Run every named consistency check for the variety (json|csv).
    VerifyAll,
}

fn parse_scalar(v: &str) -> Result<Scalar, String> {
    v.parse::<Scalar>().map_err(|e| e.to_string())
}

fn parse_variety(v: &str) -> Result<Variety, String> {
    v.parse::<Variety>().map_err(|_| format!("unknown variety {v:?} (expected triple or double)"))
}

fn parse_sweep(v: &str) -> Result<Sweep, String> {
    let parts: Vec<&str> = v.split(':').collect();
    let [lo, hi, step] = parts[..] else {
        return Err(format!("expected lo:hi:step, got {v:?}"));
    };
    let sweep = Sweep { lo: parse_scalar(lo)?, hi: parse_scalar(hi)?, step: parse_scalar(step)? };
    if !sweep.step.is_positive() || sweep.lo > sweep.hi {
        return Err("sweep needs lo <= hi and step > 0".into());
    }
    Ok(sweep)
}

fn parse_ch(v: &str) -> Result<ChernVector3, String> {
    let xs = v.split(',').map(parse_scalar).collect::<Result<Vec<_>, _>>()?;
    match xs.len() {
        3 | 4 => {
            let mut it = xs.into_iter();
            let (r, a, b) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
            Ok(ChernVector3::new(r, a, b, it.next().unwrap_or_else(Scalar::zero)))
        }
        n => Err(format!("expected r,a,b[,c], got {n} entries")),
    }
}

/// Failure modes mapped to exit codes.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn grid_override() -> Result<Option<u32>, Failure> {
    match std::env::var(GRID_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u32>()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("{GRID_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn header() -> String {
    format!("tiltstab {VERSION}")
}

fn to_json<T: Serialize>(v: &T) -> Outcome {
    serde_json::to_string(v).map(|s| s + "\n").map_err(|e| Failure::Domain(e.to_string()))
}

fn csv(columns: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut out = format!("# {}\n{columns}\n", header());
    for r in rows {
        let _ = writeln!(out, "{r}");
    }
    out
}

fn unsupported(cmd: &str, f: Format) -> Failure {
    Failure::Usage(format!("format {f:?} is not supported by {cmd}").to_lowercase())
}

fn only_json(cmd: &str, f: Format, v: serde_json::Value) -> Outcome {
    match f {
        Format::Json => to_json(&v),
        other => Err(unsupported(cmd, other)),
    }
}

fn emit_plot(spec: &PlotSpec, f: Format) -> Outcome {
    Ok(match f {
        Format::Svg => plot::render_svg(spec, &header())?,
        Format::Csv => plot::render_csv(spec, &header())?,
        Format::Json => unreachable!("plots are svg or csv"),
    })
}

fn curve_plot(name: &str, curve: tiltstab_core::bounds::PiecewiseCurve, window: Window, spu: u32) -> PlotSpec {
    PlotSpec {
        name: name.to_string(),
        panels: vec![Panel {
            title: name.to_string(),
            window,
            series: vec![Series::new(name, Source::Curve(curve), "red").thick()],
        }],
        samples_per_unit: spu,
    }
}

fn samples_per_unit() -> Result<u32, Failure> {
    let spu = grid_override()?.unwrap_or(DEFAULT_SAMPLES_PER_UNIT);
    if spu < 8 {
        return Err(Failure::Usage(format!("{GRID_ENV} must be at least 8 for plots")));
    }
    Ok(spu)
}

fn opt(v: &Option<Scalar>) -> String {
    v.as_ref().map(Scalar::to_string).unwrap_or_default()
}

fn run(cli: Cli) -> Outcome {
    let geom = cli.variety.geometry();
    let exec = Exec::default();
    let fmt = cli.format;
    let f = fmt.unwrap_or(Format::Json);
    match cli.command {
        Command::Xi { t: Some(t) } => {
            let value = make_xi().eval(&t)?;
            match f {
                Format::Json => to_json(&json!({ "t": t, "value": value })),
                Format::Csv => Ok(csv("t,value", [format!("{t},{value}")])),
                Format::Svg => Err(unsupported("xi --t", f)),
            }
        }
        Command::Xi { t: None } => {
            let curve = make_xi();
            match f {
                Format::Json => to_json(&curve),
                _ => emit_plot(&curve_plot("xi", curve, Window::new("0", "1", "-1/4", "1/2"), samples_per_unit()?), f),
            }
        }
        Command::Upsilon { x: Some(x), tilde, .. } => {
            let value = if tilde { upsilon_tilde(&x) } else { upsilon(&x) };
            match f {
                Format::Json => to_json(&json!({ "x": x, "tilde": tilde, "value": value })),
                Format::Csv => Ok(csv("x,value", [format!("{x},{value}")])),
                Format::Svg => Err(unsupported("upsilon --x", f)),
            }
        }
        Command::Upsilon { x: None, tilde, lo, hi } => {
            let curve = if tilde { make_upsilon_tilde(&lo, &hi)? } else { make_upsilon(&lo, &hi)? };
            let name = if tilde { "upsilon_tilde" } else { "upsilon" };
            match f {
                Format::Json => to_json(&curve),
                _ => {
                    let top = (&(&lo * &lo).max(&hi * &hi) / &Scalar::int(2)) + Scalar::one();
                    let window = Window { x0: lo, x1: hi, y0: Scalar::int(-1), y1: top };
                    emit_plot(&curve_plot(name, curve, window, samples_per_unit()?), f)
                }
            }
        }
        Command::Omega { x, y } => {
            let value = omega(&x, &y)?;
            only_json("omega", f, json!({ "x": x, "y": y, "value": value }))
        }
        Command::Wall { t } => match f {
            Format::Json => to_json(&first_wall(&t, &geom)?),
            Format::Svg | Format::Csv => {
                let spec = PlotSpec {
                    name: "wall".into(),
                    panels: vec![figures::wall_panel(&t, &geom)?],
                    samples_per_unit: samples_per_unit()?,
                };
                emit_plot(&spec, f)
            }
        },
        Command::BnBounds { t, sweep } => {
            let ts = match (t, sweep) {
                (Some(t), _) => vec![t],
                (None, Some(s)) => s.points(),
                (None, None) => return Err(Failure::Usage("bn-bounds needs --t or --sweep".into())),
            };
            let rows = ts
                .iter()
                .map(|t| Ok((t.clone(), bn_upper_bound(t, &geom)?, bn_lower_bound(t, &geom)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            match f {
                Format::Json => {
                    let v: Vec<_> = rows
                        .iter()
                        .map(|(t, u, l)| json!({ "t": t, "upper": u, "lower": l, "bn_stable": u.is_none() }))
                        .collect();
                    if v.len() == 1 {
                        to_json(&v[0])
                    } else {
                        to_json(&v)
                    }
                }
                Format::Csv => Ok(csv("t,upper,lower", rows.iter().map(|(t, u, l)| format!("{t},{},{}", opt(u), opt(l))))),
                Format::Svg => Err(unsupported("bn-bounds", f)),
            }
        }
        Command::Clifford { t, sweep, emit_svg, bruteforce } => {
            let f = if emit_svg { fmt.map_or(Ok(Format::Svg), |x| if x == Format::Svg { Ok(x) } else { Err(Failure::Usage("--emit-svg conflicts with --format".into())) })? } else { f };
            let grid_n = match bruteforce {
                None => None,
                Some(0) => Some(grid_override()?.unwrap_or(DEFAULT_BRUTEFORCE_GRID)),
                Some(n) => Some(n),
            };
            match (t, sweep) {
                (Some(t), _) => {
                    let b = clifford_bound(&t, &geom)?;
                    let mut v = serde_json::to_value(&b).map_err(|e| Failure::Domain(e.to_string()))?;
                    if let Some(n) = grid_n {
                        v["bruteforce"] = serde_json::to_value(clifford_bound_bruteforce(&t, &geom, n, exec)?)
                            .map_err(|e| Failure::Domain(e.to_string()))?;
                    }
                    match f {
                        Format::Json => to_json(&v),
                        Format::Csv => Ok(csv("t,bound,argmax_label", [format!("{},{},{}", b.t, b.bound, b.argmax_label)])),
                        Format::Svg => Err(unsupported("clifford --t", f)),
                    }
                }
                (None, Some(s)) => {
                    let ts = s.points();
                    let bounds = exec.map(&ts, |t| clifford_bound(t, &geom)).into_iter().collect::<Result<Vec<_>, _>>()?;
                    let brute = match grid_n {
                        Some(n) => Some(
                            ts.iter()
                                .map(|t| clifford_bound_bruteforce(t, &geom, n, exec))
                                .collect::<Result<Vec<_>, _>>()?,
                        ),
                        None => None,
                    };
                    match f {
                        Format::Json => {
                            let rows: Vec<_> = bounds
                                .iter()
                                .enumerate()
                                .map(|(i, b)| {
                                    let mut v = json!({ "t": b.t, "bound": b.bound, "argmax_label": b.argmax_label, "case": b.case });
                                    if let Some(bf) = &brute {
                                        v["bruteforce"] = json!(bf[i].value);
                                    }
                                    v
                                })
                                .collect();
                            to_json(&rows)
                        }
                        Format::Csv => {
                            let cols = if brute.is_some() { "t,bound,argmax_label,bruteforce" } else { "t,bound,argmax_label" };
                            Ok(csv(
                                cols,
                                bounds.iter().enumerate().map(|(i, b)| {
                                    let mut row = format!("{},{},{}", b.t, b.bound, b.argmax_label);
                                    if let Some(bf) = &brute {
                                        let _ = write!(row, ",{}", bf[i].value);
                                    }
                                    row
                                }),
                            ))
                        }
                        Format::Svg => {
                            let mut spec = PlotSpec { name: "clifford".into(), panels: Vec::new(), samples_per_unit: samples_per_unit()? };
                            for panel in figures::clifford_panels(&geom)? {
                                let overlaps = panel.window.x0 <= s.hi && s.lo <= panel.window.x1;
                                if overlaps {
                                    spec.panels.push(panel);
                                }
                            }
                            if spec.panels.is_empty() {
                                return Err(Failure::Domain("sweep lies outside [0, 1/2] and [3/2, 2]".into()));
                            }
                            emit_plot(&spec, f)
                        }
                    }
                }
                (None, None) => Err(Failure::Usage("clifford needs --t or --sweep".into())),
            }
        }
        Command::RestrictionBound { mu, sweep } => {
            let mus = match (mu, sweep) {
                (Some(m), _) => vec![m],
                (None, Some(s)) => s.points().into_iter().filter(|m| m.is_positive()).collect(),
                (None, None) => return Err(Failure::Usage("restriction-bound needs --mu or --sweep".into())),
            };
            let xi = make_xi();
            let rows = exec
                .map(&mus, |m| -> Result<_, Error> { Ok((m.clone(), restriction_bound(m, &geom)?, xi.eval(m)?)) })
                .into_iter()
                .collect::<Result<Vec<_>, _>>()?;
            match f {
                Format::Json => {
                    let v: Vec<_> = rows
                        .iter()
                        .map(|(m, b, x)| json!({ "mu": m, "bound": b, "xi": x, "below_xi": b < x }))
                        .collect();
                    if v.len() == 1 {
                        to_json(&v[0])
                    } else {
                        to_json(&v)
                    }
                }
                Format::Csv => Ok(csv("mu,bound,xi", rows.iter().map(|(m, b, x)| format!("{m},{b},{x}")))),
                Format::Svg => Err(unsupported("restriction-bound", f)),
            }
        }
        Command::StrongBgCheck { ch } => only_json("strong-bg-check", f, json!(strong_bg_check(&ch.r, &ch.a, &ch.b)?)),
        Command::Qgamma { ch, alpha, beta, gamma } => {
            let p = QGammaParams::new(alpha, beta, gamma.unwrap_or_else(|| geom.gamma.clone()), &geom)?;
            let value = q_gamma(&ch, &p);
            only_json(
                "qgamma",
                f,
                json!({ "ch": ch, "alpha": p.alpha, "beta": p.beta, "gamma": p.gamma, "value": value }),
            )
        }
        Command::Delta { literal } => {
            let report = delta_x(&geom);
            let value = delta_value(&geom, !literal);
            only_json(
                "delta",
                f,
                json!({ "variety": geom.variety, "literal": literal, "value": value, "report": report }),
            )
        }
        Command::Gamma => only_json(
            "gamma",
            f,
            json!({ "variety": geom.variety, "gamma": geom.gamma, "from_delta": gamma_from_delta(&geom) }),
        ),
        Command::ReductionRegion { alpha, beta } => {
            let inside = reduction_region(&alpha, &beta);
            only_json("reduction-region", f, json!({ "alpha": alpha, "beta": beta, "inside": inside }))
        }
        Command::KernelCheck { alpha, beta, gamma } => {
            let p = QGammaParams::new(alpha, beta, gamma.unwrap_or_else(|| geom.gamma.clone()), &geom)?;
            only_json("kernel-check", f, json!(q_kernel_seminegativity(&p)?))
        }
        Command::Ugamma { params } => only_json("ugamma", f, json!(in_u_gamma(&params.params(&geom)))),
        Command::SupportInterval { params } => only_json("support-interval", f, json!(support_interval(&params.params(&geom))?)),
        Command::CentralCharge { ch, params } => {
            only_json("central-charge", f, json!(central_charge(&ch, &params.params(&geom))))
        }
        Command::Weights { max } => {
            let ws = enumerate_weight_tuples(max)?;
            match f {
                Format::Json => to_json(&ws),
                Format::Csv => Ok(csv(
                    "a0,a1,a2,a3,a4,m",
                    ws.iter().map(|w| {
                        let a = w.weights;
                        format!("{},{},{},{},{},{}", a[0], a[1], a[2], a[3], a[4], w.m)
                    }),
                )),
                Format::Svg => Err(unsupported("weights", f)),
            }
        }
        Command::Ch2ch3 { ch, case } => only_json("ch2ch3", f, json!(ch2ch3_certificate(&ch, &geom, case)?)),
        Command::Figure { name, t } => {
            let f = fmt.unwrap_or(Format::Svg);
            if f == Format::Json {
                return Err(unsupported("figure", f));
            }
            emit_plot(&figures::figure(name, &geom, t.as_ref(), samples_per_unit()?)?, f)
        }
        Command::VerifyAll => {
            let samples = grid_override()?.map_or(DEFAULT_VERIFY_SAMPLES, |n| n as usize);
            let report = verify_all(&geom, samples, exec);
            match f {
                Format::Json => to_json(&report),
                Format::Csv => {
                    let mut rows: Vec<String> = report
                        .checks
                        .iter()
                        .map(|c| format!("{},{},{}", c.name, if c.pass { "pass" } else { "fail" }, c.failures.len()))
                        .collect();
                    rows.extend(report.warnings.iter().map(|w| format!("warning,,\"{}\"", w.replace('"', "'"))));
                    Ok(csv("check,status,failures", rows))
                }
                Format::Svg => Err(unsupported("verify-all", f)),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let out = cli.out.clone();
    match run(cli) {
        Ok(text) => match out {
            Some(path) => match std::fs::write(&path, text) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    ExitCode::from(1)
                }
            },
            None => {
                print!("{text}");
                ExitCode::SUCCESS
            }
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
