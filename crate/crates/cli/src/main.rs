use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use walkweyl::claims::{verify_paper_claims, VerifyOptions};
use walkweyl::enumerate::{region_count, walk_slice, Region};
use walkweyl::isometry::{
    generate_group, published_group, search_affine_isometries, search_linear_isometries,
    AffineIsometry, GroupCaps, GroupSource, IsometryGroup, SearchBounds,
};
use walkweyl::orbitsum::{compare_orbit_vs_oracle, PointRange};
use walkweyl::{Point, StepSet};

mod render;
mod report;

#[derive(Debug, Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error("verification failed: {0}")]
    Verify(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verify(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }
}

impl From<walkweyl::Error> for Failure {
    fn from(e: walkweyl::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, Failure>;

#[derive(Parser)]
#[command(
    name = "walkweyl",
    version,
    about = "Exact quarter-plane walk counts and their reflection groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count walks between two points.
    Count(CountArgs),
    /// Print or render a whole slice of counts.
    Slice(SliceArgs),
    /// Report on a model's isometry group.
    Group(GroupArgs),
    /// Compare signed orbit sums with confined counts.
    Orbit(OrbitArgs),
    /// Run the claims battery and write the report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ModelArgs {
    /// Named model: reverse-kreweras, kreweras, gessel, mishna-rechnitzer, simple.
    #[arg(long, conflicts_with = "steps_set")]
    model: Option<String>,
    /// Custom steps, e.g. "1,0;0,1;-1,-1".
    #[arg(long = "steps-set", allow_hyphen_values = true)]
    steps_set: Option<String>,
}

impl ModelArgs {
    fn steps(&self) -> CliResult<StepSet> {
        match (&self.model, &self.steps_set) {
            (Some(m), None) => Ok(StepSet::by_name(m)?),
            (None, Some(s)) => Ok(StepSet::parse(s)?),
            _ => Err(Failure::Usage(
                "one of --model or --steps-set is required".into(),
            )),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RegionArg {
    Free,
    #[value(alias = "open-quadrant")]
    Qp,
    #[value(alias = "closed-quadrant")]
    Closed,
}

impl RegionArg {
    fn region(self) -> Region {
        match self {
            RegionArg::Free => Region::Free,
            RegionArg::Qp => Region::OpenQuadrant,
            RegionArg::Closed => Region::ClosedQuadrant,
        }
    }
}

fn parse_point(s: &str) -> Result<Point, String> {
    s.parse::<Point>().map_err(|e| e.to_string())
}

fn parse_span(s: &str) -> Result<(i64, i64), String> {
    let p = parse_point(s)?;
    if p.x > p.y {
        return Err(format!("empty range {s}"));
    }
    Ok((p.x, p.y))
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    from: Point,
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    to: Point,
    #[arg(long)]
    t: u32,
    #[arg(long, value_enum, default_value = "free")]
    region: RegionArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Ascii,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Values {
    Exact,
    LogBucket,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SourceArg {
    Paper,
    Search,
    Custom,
}

impl SourceArg {
    fn source(self) -> GroupSource {
        match self {
            SourceArg::Paper => GroupSource::Published,
            SourceArg::Search => GroupSource::Search,
            SourceArg::Custom => GroupSource::Custom,
        }
    }
}

#[derive(Args)]
struct SliceArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long)]
    t: u32,
    #[arg(long, value_parser = parse_point, default_value = "0,0", allow_hyphen_values = true)]
    start: Point,
    #[arg(long, value_enum, default_value = "free")]
    region: RegionArg,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Draw reflection lines (svg only).
    #[arg(long)]
    overlay: bool,
    /// Group whose lines are drawn.
    #[arg(long = "overlay-source", value_enum, default_value = "search")]
    overlay_source: SourceArg,
    /// Cell size in svg units.
    #[arg(long, default_value_t = 12)]
    scale: u32,
    #[arg(long, value_enum, default_value = "exact")]
    values: Values,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Show {
    Matrices,
    Orders,
    Lines,
    Eigenvectors,
    Form,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Table,
}

#[derive(Args)]
struct GroupArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, value_enum, default_value = "search")]
    source: SourceArg,
    #[arg(long, value_enum, default_value = "matrices")]
    show: Show,
    /// Slice length for affine groups and line positions.
    #[arg(long, default_value_t = 6)]
    t: u32,
    /// Generator for --source custom, e.g. "-1,0;0,1" or "1,-1;0,-1+t*0,1".
    #[arg(long = "generator", allow_hyphen_values = true)]
    generators: Vec<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OrbitArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, value_enum, default_value = "paper")]
    source: SourceArg,
    #[arg(long = "generator", allow_hyphen_values = true)]
    generators: Vec<String>,
    #[arg(long, value_enum, default_value = "qp")]
    region: RegionArg,
    #[arg(long = "a-range", value_parser = parse_span, allow_hyphen_values = true, default_value = "1,4")]
    a_range: (i64, i64),
    #[arg(long = "b-range", value_parser = parse_span, allow_hyphen_values = true, default_value = "1,4")]
    b_range: (i64, i64),
    #[arg(long = "t-max", default_value_t = 8)]
    t_max: u32,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    PaperClaims,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "paper-claims")]
    suite: Suite,
    #[arg(long = "t-max", default_value_t = 8)]
    t_max: u32,
    /// Start and end box `lo,hi` (both coordinates) for the orbit scans.
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true, default_value = "1,4")]
    range: (i64, i64),
    #[arg(long)]
    out: Option<PathBuf>,
}

fn emit(out: Option<&PathBuf>, text: &str) -> CliResult {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Io(e.to_string()))
        }
    }
}

/// A model's group from the requested source, for slice `t`.
fn resolve_group(
    steps: &StepSet,
    source: SourceArg,
    generators: &[String],
    t: u32,
) -> CliResult<IsometryGroup> {
    match source {
        SourceArg::Paper => Ok(published_group(steps.model())?.group()),
        SourceArg::Search => {
            let drift_free = steps
                .barycenter()
                .map(|b| b.x == 0.into() && b.y == 0.into())
                .unwrap_or(true);
            if drift_free {
                Ok(search_linear_isometries(
                    steps,
                    SearchBounds::default().matrix_entry,
                ))
            } else {
                Ok(search_affine_isometries(steps, t, SearchBounds::default()))
            }
        }
        SourceArg::Custom => {
            if generators.is_empty() {
                return Err(Failure::Usage(
                    "--source custom needs at least one --generator".into(),
                ));
            }
            let gens = generators
                .iter()
                .map(|g| g.parse::<AffineIsometry>())
                .collect::<Result<Vec<_>, _>>()?;
            Ok(generate_group(&gens, GroupCaps::for_slice(t)))
        }
    }
}

fn cmd_count(a: CountArgs) -> CliResult {
    let steps = a.model.steps()?;
    let n = region_count(&steps, a.from, a.to, a.t, &a.region.region());
    emit(None, &format!("{n}\n"))
}

fn cmd_slice(a: SliceArgs) -> CliResult {
    let steps = a.model.steps()?;
    let table = walk_slice(&steps, a.start, a.t, &a.region.region());
    let text = match a.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
        Format::Ascii => render::ascii(&table),
        Format::Svg => {
            let lines = if a.overlay {
                let g = resolve_group(&steps, a.overlay_source, &[], a.t)?;
                walkweyl::chamber::reflection_arrangement(&g, a.t).at_slice()
            } else {
                Vec::new()
            };
            render::svg(&table, &lines, a.scale.max(1), a.values)
        }
    };
    emit(a.out.as_ref(), &text)
}

fn cmd_group(a: GroupArgs) -> CliResult {
    let steps = a.model.steps()?;
    let group = resolve_group(&steps, a.source, &a.generators, a.t)?;
    let labels = published_group(steps.model()).ok();
    let view = report::group_view(&group, labels.as_ref(), a.show, a.t);
    let text = match a.format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&view).expect("group view serializes");
            s.push('\n');
            s
        }
        ReportFormat::Table => report::table(&view),
    };
    emit(a.out.as_ref(), &text)
}

fn cmd_orbit(a: OrbitArgs) -> CliResult {
    let steps = a.model.steps()?;
    let group = resolve_group(&steps, a.source, &a.generators, a.t_max)?;
    let ra = PointRange::square(a.a_range.0, a.a_range.1);
    let rb = PointRange::square(a.b_range.0, a.b_range.1);
    let rep = compare_orbit_vs_oracle(
        &group,
        a.source.source(),
        &steps,
        &a.region.region(),
        ra,
        rb,
        a.t_max,
    )?;
    let mut s = serde_json::to_string_pretty(&rep).expect("report serializes");
    s.push('\n');
    emit(a.out.as_ref(), &s)
}

fn cmd_verify(a: VerifyArgs) -> CliResult {
    let Suite::PaperClaims = a.suite;
    let opts = VerifyOptions {
        t_max: a.t_max,
        orbit_range: PointRange::square(a.range.0, a.range.1),
        ..VerifyOptions::default()
    };
    let report = verify_paper_claims(&opts);
    emit(a.out.as_ref(), &report.to_json())?;
    let s = report.summary;
    eprintln!("{} pass, {} fail, {} disputed", s.pass, s.fail, s.disputed);
    if report.exit_code != 0 {
        let failed: Vec<&str> = report
            .claims
            .iter()
            .filter(|c| c.status == walkweyl::claims::Status::Fail)
            .map(|c| c.id.as_str())
            .collect();
        return Err(Failure::Verify(failed.join(", ")));
    }
    Ok(())
}

fn configure_threads() -> CliResult {
    let Ok(v) = std::env::var("WALKWEYL_THREADS") else {
        return Ok(());
    };
    let n: usize = v.parse().map_err(|_| {
        Failure::Usage(format!(
            "WALKWEYL_THREADS must be a positive integer, got {v:?}"
        ))
    })?;
    if n == 0 {
        return Err(Failure::Usage("WALKWEYL_THREADS must be at least 1".into()));
    }
    // a second initialisation is harmless
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    configure_threads()?;
    match cli.command {
        Command::Count(a) => cmd_count(a),
        Command::Slice(a) => cmd_slice(a),
        Command::Group(a) => cmd_group(a),
        Command::Orbit(a) => cmd_orbit(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("walkweyl: {e}");
            ExitCode::from(e.code())
        }
    }
}
