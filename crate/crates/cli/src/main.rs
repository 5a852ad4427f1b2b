use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use npk::exact_poly::int;
use npk::expr::parse_rational_expr;
use npk::implicitize::{bivariate_newton, implicit_equation, reduced_part};
use npk::lattice::{content, divide, LatticePolygon, LatticeVector, PolygonJson};
use npk::newton_pipeline::{newton_pushforward, support_identity};
use npk::ratfunc::{coprime_factorization, order_family, Parametrization};
use npk::registry::{polygon_method, polygon_methods, root_strategies, root_strategy};
use npk::svg::render_svg;
use npk::synth::{dim_mq, realizability, segment_analysis, synthesize_with};
use npk::Error;

#[derive(Parser)]
#[command(name = "npk", version, about = "Newton polygons of rational plane curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CurveArgs {
    /// First coordinate as a rational expression in t.
    #[arg(long, allow_hyphen_values = true)]
    fx: String,
    /// Second coordinate as a rational expression in t.
    #[arg(long, allow_hyphen_values = true)]
    fy: String,
    /// Machine-readable JSON output.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Predict the Newton polygon of the curve.
    Polygon {
        #[command(flatten)]
        curve: CurveArgs,
        /// Algorithm used for the prediction; see `npk methods`.
        #[arg(long, default_value = "orders")]
        method: String,
        /// Cross-check the prediction against the resultant.
        #[arg(long)]
        verify: bool,
    },
    /// Print the pushforward equation and the reduced curve equation.
    Implicitize {
        #[command(flatten)]
        curve: CurveArgs,
    },
    /// Check the predicted pushforward polygon against the resultant.
    Verify {
        #[command(flatten)]
        curve: CurveArgs,
    },
    /// Evaluate both sides of the support-function identity at sigma.
    Identity {
        #[command(flatten)]
        curve: CurveArgs,
        /// Direction `a,b` with both entries nonzero.
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
    },
    /// Build a birational parametrization with a given Newton polygon.
    Synthesize {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Root placement strategy; see `npk methods`.
        #[arg(long, default_value = "generic")]
        strategy: String,
        #[arg(long)]
        json: bool,
    },
    /// Report which kinds of parametrization realize a polygon.
    Realizable {
        #[arg(long)]
        polygon: PathBuf,
    },
    /// Draw a polygon, or the pushforward polygon of a curve, as SVG.
    Plot {
        #[arg(long)]
        polygon: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true, requires = "fy")]
        fx: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "fx")]
        fy: Option<String>,
        /// Output path.
        #[arg(long)]
        svg: PathBuf,
    },
    /// List the registered polygon methods and root strategies.
    Methods,
}

enum Failure {
    Usage(String),
    Lib(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Mismatch(_) => 4,
            Failure::Lib(e) => match e {
                Error::Parse { .. } => 2,
                Error::VerificationMismatch(_) => 4,
                Error::GenericityFailure { .. } => 1,
                _ => 3,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) | Failure::Mismatch(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

type Outcome = Result<(), Failure>;

fn degenerate_or_usage(flag: &str, e: Error) -> Failure {
    match e {
        Error::Parse { .. } => Failure::Usage(format!("{flag}: {e}")),
        other => Failure::Lib(other),
    }
}

fn parametrization(c: &CurveArgs) -> Result<Parametrization, Failure> {
    let f = parse_rational_expr(&c.fx).map_err(|e| degenerate_or_usage("--fx", e))?;
    let g = parse_rational_expr(&c.fy).map_err(|e| degenerate_or_usage("--fy", e))?;
    Ok(Parametrization::new(f, g)?)
}

fn read_polygon(path: &PathBuf) -> Result<LatticePolygon, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let json: PolygonJson =
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(LatticePolygon::from_json(&json)?)
}

fn vertices(q: &LatticePolygon) -> Value {
    json!(q.to_json().vertices)
}

fn print_json(v: &Value) {
    println!("{v}");
}

fn cmd_polygon(curve: &CurveArgs, method: &str, verify: bool) -> Outcome {
    let m = polygon_method(method).ok_or_else(|| Failure::Usage(format!("unknown method {method:?}")))?;
    let rho = parametrization(curve)?;
    let push = m.pushforward(&rho)?;
    let r = implicit_equation(&rho)?;
    let (_, delta) = reduced_part(&r)?;
    if verify {
        let oracle = bivariate_newton(&r)?;
        if oracle != push {
            return Err(Failure::Mismatch(format!("predicted {push}, resultant gives {oracle}")));
        }
    }
    let curve_polygon = divide(&push, delta as i64)?;
    if curve.json {
        print_json(&json!({ "vertices": vertices(&curve_polygon), "degree": delta }));
    } else {
        println!("polygon: {curve_polygon}");
        println!("degree: {delta}");
        if verify {
            println!("verified against the resultant");
        }
    }
    Ok(())
}

fn cmd_implicitize(curve: &CurveArgs) -> Outcome {
    let rho = parametrization(curve)?;
    let r = implicit_equation(&rho)?;
    let (e, delta) = reduced_part(&r)?;
    if curve.json {
        print_json(&json!({
            "pushforward": serde_json::to_value(r.to_json()).expect("serializable"),
            "reduced": serde_json::to_value(e.to_json()).expect("serializable"),
            "degree": delta,
        }));
    } else {
        println!("pushforward: {}", r.fmt_xy());
        println!("reduced: {}", e.fmt_xy());
        println!("degree: {delta}");
    }
    Ok(())
}

fn cmd_verify(curve: &CurveArgs) -> Outcome {
    let rho = parametrization(curve)?;
    let predicted = newton_pushforward(&rho)?;
    let r = implicit_equation(&rho)?;
    let oracle = bivariate_newton(&r)?;
    let (_, delta) = reduced_part(&r)?;
    if predicted != oracle {
        return Err(Failure::Mismatch(format!("predicted {predicted}, resultant gives {oracle}")));
    }
    let curve_polygon = divide(&predicted, delta as i64)?;
    if curve.json {
        print_json(&json!({
            "verified": true,
            "degree": delta,
            "pushforward": vertices(&predicted),
            "curve": vertices(&curve_polygon),
        }));
    } else {
        println!("verified: pushforward polygon matches the resultant");
        println!("deg rho: {delta}");
        println!("pushforward: {predicted}");
        println!("curve: {curve_polygon}");
    }
    Ok(())
}

fn parse_sigma(s: &str) -> Result<LatticeVector, Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => {
            let a = a.parse().map_err(|_| Failure::Usage(format!("bad sigma entry {a:?}")))?;
            let b = b.parse().map_err(|_| Failure::Usage(format!("bad sigma entry {b:?}")))?;
            Ok(LatticeVector::new(a, b))
        }
        _ => Err(Failure::Usage(format!("sigma must be `a,b`, got {s:?}"))),
    }
}

fn cmd_identity(curve: &CurveArgs, sigma: &str) -> Outcome {
    let sigma = parse_sigma(sigma)?;
    let rho = parametrization(curve)?;
    let (lhs, rhs) = support_identity(&rho, sigma)?;
    let holds = rhs == int(lhs);
    if curve.json {
        print_json(&json!({ "sigma": [sigma.m, sigma.n], "lhs": lhs, "rhs": rhs.to_string(), "holds": holds }));
    } else {
        println!("lhs: {lhs}");
        println!("rhs: {rhs}");
    }
    if !holds {
        return Err(Failure::Mismatch(format!("support identity fails at {sigma}: {lhs} != {rhs}")));
    }
    Ok(())
}

fn cmd_synthesize(path: &PathBuf, seed: u64, strategy: &str, as_json: bool) -> Outcome {
    let s = root_strategy(strategy).ok_or_else(|| Failure::Usage(format!("unknown strategy {strategy:?}")))?;
    let q = read_polygon(path)?;
    let (u, rho) = synthesize_with(&q, seed, s)?;
    if as_json {
        let roots: Vec<Vec<String>> = u.roots.iter().map(|rs| rs.iter().map(ToString::to_string).collect()).collect();
        print_json(&json!({
            "fx": rho.f().to_string(),
            "fy": rho.g().to_string(),
            "alpha": u.alpha.to_string(),
            "beta": u.beta.to_string(),
            "roots": roots,
        }));
    } else {
        println!("fx: {}", rho.f());
        println!("fy: {}", rho.g());
    }
    Ok(())
}

fn cmd_realizable(path: &PathBuf) -> Outcome {
    let q = read_polygon(path)?;
    let out = if q.is_polygon() {
        let r = realizability(&q)?;
        json!({
            "as_curve": r.as_curve,
            "by_laurent": r.by_laurent,
            "by_polynomials": r.by_polynomials,
            "dim_MQ": dim_mq(&q)?,
            "content": content(&q)?,
        })
    } else {
        let s = segment_analysis(&q)?;
        json!({
            "as_curve": s.as_curve,
            "by_laurent": null,
            "by_polynomials": null,
            "dim_MQ": dim_mq(&q)?,
            "content": s.content,
            "direction": [s.a, s.b],
        })
    };
    print_json(&out);
    Ok(())
}

fn cmd_plot(polygon: Option<&PathBuf>, fx: Option<&String>, fy: Option<&String>, out: &PathBuf) -> Outcome {
    let svg = match (polygon, fx, fy) {
        (Some(path), None, None) => render_svg(&read_polygon(path)?, None),
        (None, Some(fx), Some(fy)) => {
            let rho = parametrization(&CurveArgs { fx: fx.clone(), fy: fy.clone(), json: false })?;
            let family = order_family(&coprime_factorization(&rho));
            render_svg(&newton_pushforward(&rho)?, Some(&family))
        }
        _ => return Err(Failure::Usage("plot needs either --polygon or both --fx and --fy".into())),
    };
    fs::write(out, svg).map_err(|e| Failure::Usage(format!("{}: {e}", out.display())))?;
    Ok(())
}

fn cmd_methods() -> Outcome {
    println!("polygon methods:");
    for m in polygon_methods() {
        println!("  {:<10} {}", m.name(), m.description());
    }
    println!("root strategies:");
    for s in root_strategies() {
        println!("  {:<10} {}", s.name(), s.description());
    }
    Ok(())
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Polygon { curve, method, verify } => cmd_polygon(curve, method, *verify),
        Command::Implicitize { curve } => cmd_implicitize(curve),
        Command::Verify { curve } => cmd_verify(curve),
        Command::Identity { curve, sigma } => cmd_identity(curve, sigma),
        Command::Synthesize { polygon, seed, strategy, json } => cmd_synthesize(polygon, *seed, strategy, *json),
        Command::Realizable { polygon } => cmd_realizable(polygon),
        Command::Plot { polygon, fx, fy, svg } => cmd_plot(polygon.as_ref(), fx.as_ref(), fy.as_ref(), svg),
        Command::Methods => cmd_methods(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("npk: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
