//! Command-line front end. `run` is the whole program; the binary only wires
//! it to the process streams.
//!
//! Exit codes: 0 on success, 1 on domain errors (a divergent table handed to
//! `ffzt invert`, an element with no polar form, …), 2 on usage errors
//! including an invalid prime.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cesaro::{cesaro_sum, SeriesValue};
use crate::error::Error;
use crate::ffzt::{ff_dtft, ffzt_eval, ffzt_table_with_ceiling, iffzt, TransformTable, DIVERGENT};
use crate::gf::{Prime, DEFAULT_TABLE_CEILING};
use crate::gi::GiElem;
use crate::group::{
    check_gs_generator, element_order, enumerate_subgroup, find_gs_generator, order_census, SubgroupKind,
};
use crate::polar::to_polar;
use crate::render::{render_text, svg_string, PlaneView, RenderSpec};
use crate::sequence::SequenceSpec;
use crate::zplane::{build_plane_with, order_trajectory_with, trajectory_radius_pattern};

#[derive(Debug, Parser)]
#[command(name = "galois-z", version, about = "Z plane, Cesàro sums and Z transforms over GF(p)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List a subgroup of GI(p)* with element orders.
    Group(GroupArgs),
    /// Count elements of GI(p)* by multiplicative order.
    Census(CensusArgs),
    /// Convert an element to polar form r·ε^θ.
    Polar(PolarArgs),
    /// Draw the Z plane.
    Zplane(PlaneArgs),
    /// Follow the powers of an element around the plane.
    Trajectory(TrajectoryArgs),
    /// Cesàro-sum a sequence.
    Cesaro(CesaroArgs),
    /// Evaluate, tabulate or invert the Z transform.
    #[command(subcommand)]
    Ffzt(FfztCommand),
    /// Evaluate the transform on the unit circle at ε^θ.
    Dtft(DtftArgs),
}

#[derive(Debug, Subcommand)]
pub enum FfztCommand {
    /// X(Z) at one point.
    Eval(FfztEvalArgs),
    /// X(Z) at every nonzero Z.
    Table(FfztTableArgs),
    /// Recover x[n] from a saved table.
    Invert(FfztInvertArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Unimodular,
    SupraUnimodular,
    ModulusGroup,
    FullGroup,
}

impl From<Kind> for SubgroupKind {
    fn from(k: Kind) -> SubgroupKind {
        match k {
            Kind::Unimodular => SubgroupKind::Unimodular,
            Kind::SupraUnimodular => SubgroupKind::SupraUnimodular,
            Kind::ModulusGroup => SubgroupKind::ModulusGroup,
            Kind::FullGroup => SubgroupKind::FullGroup,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum View {
    All,
    Unit,
    Unimodular,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Prime p ≡ 3 (mod 4).
    #[arg(long = "p")]
    pub p: u64,
    /// Write to FILE instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SequenceArgs {
    /// Full sequence: impulse, step, expo:A,a or left=..;prefix=..;tail=..
    #[arg(long, allow_hyphen_values = true)]
    pub seq: Option<String>,
    /// One of impulse, step, expo:A,a.
    #[arg(long)]
    pub basic: Option<String>,
    /// Negative-index entries as n:value,…
    #[arg(long, allow_hyphen_values = true)]
    pub left: Option<String>,
    /// Values at n = 0, 1, … before the periodic tail.
    #[arg(long, allow_hyphen_values = true)]
    pub prefix: Option<String>,
    /// Periodic tail; defaults to 0 when only --left/--prefix are given.
    #[arg(long, allow_hyphen_values = true)]
    pub tail: Option<String>,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value = "unimodular")]
    pub kind: Kind,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long = "max-p", default_value_t = DEFAULT_TABLE_CEILING)]
    pub max_p: u64,
}

#[derive(Debug, Args)]
pub struct PolarArgs {
    #[command(flatten)]
    pub common: Common,
    /// Element a+bj.
    #[arg(long, allow_hyphen_values = true)]
    pub element: String,
    /// Generator of the unit circle; defaults to the canonical one.
    #[arg(long, allow_hyphen_values = true)]
    pub epsilon: Option<String>,
}

#[derive(Debug, Args)]
pub struct PlaneArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value = "svg")]
    pub format: Format,
    #[arg(long, value_enum, default_value = "all")]
    pub view: View,
    #[arg(long, allow_hyphen_values = true)]
    pub epsilon: Option<String>,
    /// Canvas size in pixels.
    #[arg(long, default_value_t = 640)]
    pub size: u32,
    #[arg(long)]
    pub no_labels: bool,
    #[arg(long = "max-p", default_value_t = DEFAULT_TABLE_CEILING)]
    pub max_p: u64,
}

#[derive(Debug, Args)]
pub struct TrajectoryArgs {
    #[command(flatten)]
    pub plane: PlaneArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub element: String,
}

#[derive(Debug, Args)]
pub struct CesaroArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub seq: SequenceArgs,
}

#[derive(Debug, Args)]
pub struct FfztEvalArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub seq: SequenceArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub z: String,
}

#[derive(Debug, Args)]
pub struct FfztTableArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub seq: SequenceArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long = "max-p", default_value_t = DEFAULT_TABLE_CEILING)]
    pub max_p: u64,
}

#[derive(Debug, Args)]
pub struct FfztInvertArgs {
    /// Table file written by `ffzt table --format json`.
    #[arg(long)]
    pub table: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DtftArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub seq: SequenceArgs,
    /// Phase index in [0, 2(p+1)); every θ when omitted.
    #[arg(long)]
    pub theta: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    pub epsilon: Option<String>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Usage(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::InvalidPrime(_) => Failure::Usage("p must be prime with p ≡ 3 (mod 4)".into()),
            Error::Parse(_) | Error::InvalidSequence(_) | Error::CeilingExceeded { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Runs the program on `args` (including the program name) and returns the
/// exit code. Data goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };

    let target = match &cli.command {
        Command::Group(a) => a.common.out.clone(),
        Command::Census(a) => a.common.out.clone(),
        Command::Polar(a) => a.common.out.clone(),
        Command::Zplane(a) => a.common.out.clone(),
        Command::Trajectory(a) => a.plane.common.out.clone(),
        Command::Cesaro(a) => a.common.out.clone(),
        Command::Ffzt(FfztCommand::Eval(a)) => a.common.out.clone(),
        Command::Ffzt(FfztCommand::Table(a)) => a.common.out.clone(),
        Command::Ffzt(FfztCommand::Invert(a)) => a.out.clone(),
        Command::Dtft(a) => a.common.out.clone(),
    };

    let result = match cli.command {
        Command::Group(a) => group(a),
        Command::Census(a) => census(a),
        Command::Polar(a) => polar(a),
        Command::Zplane(a) => zplane(a),
        Command::Trajectory(a) => trajectory(a),
        Command::Cesaro(a) => cesaro(a),
        Command::Ffzt(FfztCommand::Eval(a)) => ffzt_eval_cmd(a),
        Command::Ffzt(FfztCommand::Table(a)) => ffzt_table_cmd(a),
        Command::Ffzt(FfztCommand::Invert(a)) => ffzt_invert_cmd(a),
        Command::Dtft(a) => dtft(a),
    };

    match result {
        Ok(text) => {
            let written = match target {
                Some(path) => {
                    std::fs::write(&path, text.as_bytes()).map_err(|e| format!("cannot write {}: {e}", path.display()))
                }
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => 0,
                Err(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    1
                }
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn prime(p: u64) -> std::result::Result<Prime, Failure> {
    Ok(Prime::new(p)?)
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data");
    s.push('\n');
    s
}

fn reject_format(format: Format, allowed: &[Format]) -> std::result::Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("format {format:?} is not available here")))
    }
}

fn element(s: &str, p: Prime) -> std::result::Result<GiElem, Failure> {
    GiElem::parse(s, p).map_err(|e| Failure::Usage(e.to_string()))
}

fn epsilon(s: &Option<String>, p: Prime) -> std::result::Result<GiElem, Failure> {
    match s {
        None => Ok(find_gs_generator(p)),
        Some(s) => {
            let eps = element(s, p)?;
            check_gs_generator(eps)?;
            Ok(eps)
        }
    }
}

fn sequence(args: &SequenceArgs, p: Prime) -> std::result::Result<SequenceSpec, Failure> {
    let explicit = args.left.is_some() || args.prefix.is_some() || args.tail.is_some();
    let chosen = [args.seq.is_some(), args.basic.is_some(), explicit].iter().filter(|&&b| b).count();
    if chosen != 1 {
        return Err(Failure::Usage("give exactly one of --seq, --basic, or --left/--prefix/--tail".into()));
    }
    let spec = if let Some(s) = &args.seq {
        SequenceSpec::parse(s, p)?
    } else if let Some(b) = &args.basic {
        if !(b == "impulse" || b == "step" || b.starts_with("expo:")) {
            return Err(Failure::Usage(format!("unknown basic sequence {b:?}")));
        }
        SequenceSpec::parse(b, p)?
    } else {
        SequenceSpec::from_lists(
            p,
            args.left.as_deref().unwrap_or(""),
            args.prefix.as_deref().unwrap_or(""),
            args.tail.as_deref().unwrap_or(""),
        )?
    };
    Ok(spec)
}

fn series_value(v: SeriesValue) -> String {
    match v {
        SeriesValue::Converges(x) => x.to_string(),
        SeriesValue::Divergent => DIVERGENT.to_string(),
    }
}

#[derive(Serialize)]
struct ElementOrder {
    element: String,
    order: u64,
}

fn group(a: GroupArgs) -> Outcome {
    reject_format(a.format, &[Format::Json, Format::Csv])?;
    let p = prime(a.common.p)?;
    if a.kind == Kind::FullGroup {
        p.check_ceiling(DEFAULT_TABLE_CEILING)?;
    }
    let rows: Vec<ElementOrder> = enumerate_subgroup(p, a.kind.into())
        .into_iter()
        .map(|z| ElementOrder { element: z.to_string(), order: element_order(z).expect("nonzero") })
        .collect();
    Ok(match a.format {
        Format::Csv => {
            let mut s = String::from("element,order\n");
            for r in rows {
                s.push_str(&format!("{},{}\n", r.element, r.order));
            }
            s
        }
        _ => json_line(&rows),
    })
}

#[derive(Serialize)]
struct CensusRow {
    order: u64,
    count: u64,
}

fn census(a: CensusArgs) -> Outcome {
    reject_format(a.format, &[Format::Json, Format::Csv])?;
    let p = prime(a.common.p)?;
    p.check_ceiling(a.max_p)?;
    let rows: Vec<CensusRow> =
        order_census(p).entries.into_iter().map(|(order, count)| CensusRow { order, count }).collect();
    Ok(match a.format {
        Format::Csv => {
            let mut s = String::from("order,count\n");
            for r in rows {
                s.push_str(&format!("{},{}\n", r.order, r.count));
            }
            s
        }
        _ => json_line(&rows),
    })
}

fn polar(a: PolarArgs) -> Outcome {
    let p = prime(a.common.p)?;
    let z = element(&a.element, p)?;
    let eps = epsilon(&a.epsilon, p)?;
    Ok(json_line(&to_polar(z, eps)?.to_json()))
}

fn render_spec(a: &PlaneArgs) -> RenderSpec {
    let view = match a.view {
        View::All => PlaneView::All,
        View::Unit => PlaneView::UnitCircle,
        View::Unimodular => PlaneView::Unimodular,
    };
    RenderSpec { size: a.size, view, labels: !a.no_labels }
}

fn zplane(a: PlaneArgs) -> Outcome {
    reject_format(a.format, &[Format::Svg, Format::Text, Format::Json])?;
    let p = prime(a.common.p)?;
    let eps = epsilon(&a.epsilon, p)?;
    let plane = build_plane_with(p, eps, a.max_p)?;
    Ok(match a.format {
        Format::Svg => svg_string(&plane, None, &render_spec(&a)),
        Format::Text => render_text(&plane, None),
        _ => json_line(&plane.to_json()),
    })
}

#[derive(Serialize)]
struct TrajectoryOut {
    #[serde(flatten)]
    trajectory: crate::zplane::TrajectoryJson,
    radius_step: u64,
    radius_law: bool,
    positions: Vec<u64>,
}

fn trajectory(a: TrajectoryArgs) -> Outcome {
    let pa = &a.plane;
    reject_format(pa.format, &[Format::Svg, Format::Text, Format::Json])?;
    let p = prime(pa.common.p)?;
    let eps = epsilon(&pa.epsilon, p)?;
    let z = element(&a.element, p)?;
    let t = order_trajectory_with(z, eps)?;
    Ok(match pa.format {
        Format::Json => {
            let pattern = trajectory_radius_pattern(&t);
            json_line(&TrajectoryOut {
                trajectory: t.to_json(),
                radius_step: pattern.step,
                radius_law: pattern.satisfies_radius_law(),
                positions: pattern.positions,
            })
        }
        format => {
            let plane = build_plane_with(p, eps, pa.max_p)?;
            if format == Format::Svg {
                svg_string(&plane, Some(&t), &render_spec(pa))
            } else {
                render_text(&plane, Some(&t))
            }
        }
    })
}

fn cesaro(a: CesaroArgs) -> Outcome {
    let p = prime(a.common.p)?;
    let x = sequence(&a.seq, p)?;
    Ok(json_line(&cesaro_sum(&x).to_json()))
}

#[derive(Serialize)]
struct PointValue {
    z: String,
    value: String,
}

fn ffzt_eval_cmd(a: FfztEvalArgs) -> Outcome {
    let p = prime(a.common.p)?;
    let x = sequence(&a.seq, p)?;
    let z = element(&a.z, p)?;
    let v = ffzt_eval(&x, z)?;
    Ok(json_line(&PointValue { z: z.to_string(), value: series_value(v) }))
}

fn ffzt_table_cmd(a: FfztTableArgs) -> Outcome {
    reject_format(a.format, &[Format::Json, Format::Csv])?;
    let p = prime(a.common.p)?;
    let x = sequence(&a.seq, p)?;
    let table = ffzt_table_with_ceiling(&x, a.max_p)?;
    Ok(match a.format {
        Format::Csv => table.to_csv(),
        _ => table.to_json(),
    })
}

#[derive(Serialize)]
struct Inverted {
    n: i64,
    value: u64,
}

fn ffzt_invert_cmd(a: FfztInvertArgs) -> Outcome {
    let text = std::fs::read_to_string(&a.table)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", a.table.display())))?;
    let table = TransformTable::from_json(&text)?;
    let v = iffzt(&table, a.n)?;
    Ok(json_line(&Inverted { n: a.n, value: v.value() }))
}

#[derive(Serialize)]
struct DtftPoint {
    theta: u64,
    z: String,
    value: String,
}

#[derive(Serialize)]
struct DtftOut {
    epsilon: String,
    points: Vec<DtftPoint>,
}

fn dtft(a: DtftArgs) -> Outcome {
    let p = prime(a.common.p)?;
    let x = sequence(&a.seq, p)?;
    let eps = epsilon(&a.epsilon, p)?;
    let thetas: Vec<u64> = match a.theta {
        Some(t) => vec![t],
        None => (0..p.phase_order()).collect(),
    };
    let points = thetas
        .into_iter()
        .map(|theta| {
            let v = ff_dtft(&x, theta, eps)?;
            Ok(DtftPoint { theta, z: eps.pow(theta).to_string(), value: series_value(v) })
        })
        .collect::<std::result::Result<Vec<_>, Error>>()?;
    Ok(json_line(&DtftOut { epsilon: eps.to_string(), points }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["galois-z"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn bad_prime_is_usage_error() {
        let (code, out, err) = call(&["group", "--p", "8", "--kind", "unimodular"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("p must be prime with p ≡ 3 (mod 4)"));
    }

    #[test]
    fn cesaro_example() {
        let (code, out, _) = call(&["cesaro", "--p", "7", "--basic", "expo:1,3"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"converges\":true,\"sigma\":3,\"P\":6,\"preperiod\":0}\n");
    }

    #[test]
    fn sequence_flags_are_exclusive() {
        let (code, _, _) = call(&["cesaro", "--p", "7", "--basic", "step", "--tail", "1"]);
        assert_eq!(code, 2);
        let (code, _, _) = call(&["cesaro", "--p", "7"]);
        assert_eq!(code, 2);
        let (code, _, _) = call(&["cesaro", "--p", "7", "--basic", "left=-1:1;tail=0"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn wrong_format_is_usage_error() {
        let (code, _, _) = call(&["group", "--p", "7", "--format", "svg"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn help_and_version() {
        let (code, out, _) = call(&["--version"]);
        assert_eq!(code, 0);
        assert!(out.contains(env!("CARGO_PKG_VERSION")));
        let (code, out, _) = call(&["ffzt", "table", "--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("--format"));
    }
}
