use std::f64::consts::{PI, TAU};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lambert_core::arc::KeplerianArc;
use lambert_core::conic::{orbit_and_anomaly_from_state, ConicOrbit, Orbit, Orientation, RectilinearOrbit, StateVector, UnifocalConic};
use lambert_core::cycle::{cycle_from_arc, cycle_invariant_report, CycleSample, LambertCycle};
use lambert_core::error::Error;
use lambert_core::lambert::{classify_arc, solve_lambert_multi, ChordConfig, MultiRevBranch};
use lambert_core::record::{render, Format, Record};
use lambert_core::sampling::{self, Regime};
use lambert_core::svg;
use lambert_core::vec2::Vec2;
use lambert_core::verify::{run_suite, Suite, Tolerances};

#[derive(Parser)]
#[command(name = "lambert", version, about = "Planar Kepler problem: transfer times, Lambert arcs, cycles and verification")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Override a named tolerance, NAME=REAL. Repeatable.
    #[arg(long, global = true, value_name = "NAME=REAL")]
    tol: Vec<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Ccw,
    Cw,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Branch {
    Smaller,
    Larger,
}

#[derive(Clone, Copy, ValueEnum)]
enum Figure {
    ChordFamily,
    Cycle,
    Foci,
    Cycloid,
}

#[derive(Subcommand)]
enum Command {
    /// Time of flight along an orbit between two anomalies.
    Tof(TofArgs),
    /// Arcs from A to B with a given transfer time.
    Lambert(LambertArgs),
    /// Invariants along the Lambert cycle of a seed arc.
    Cycle(CycleArgs),
    /// Seeded verification suites.
    Verify(VerifyArgs),
    /// SVG figures.
    Plot(PlotArgs),
}

#[derive(Args)]
struct TofArgs {
    /// Initial state x,y,vx,vy.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["conic", "rectilinear"])]
    state: Option<String>,
    /// Advance of the anomaly from the state, in turns of 2 pi.
    #[arg(long, requires = "state")]
    turns: Option<f64>,
    /// Conic alpha,beta,gamma of r = alpha x + beta y + gamma.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "rectilinear")]
    conic: Option<String>,
    #[arg(long, value_enum, default_value_t = Direction::Ccw)]
    orientation: Direction,
    /// Radial orbit along +x.
    #[arg(long)]
    rectilinear: bool,
    /// Energy of the radial orbit.
    #[arg(long = "H", allow_hyphen_values = true)]
    energy: Option<f64>,
    #[arg(long)]
    from_collision: bool,
    #[arg(long)]
    to_culmination: bool,
    /// Initial anomaly.
    #[arg(long, allow_hyphen_values = true)]
    from: Option<f64>,
    /// Final anomaly.
    #[arg(long, allow_hyphen_values = true)]
    to: Option<f64>,
}

#[derive(Args)]
struct LambertArgs {
    #[arg(long = "A", allow_hyphen_values = true)]
    a: String,
    #[arg(long = "B", allow_hyphen_values = true)]
    b: String,
    #[arg(long)]
    dt: f64,
    #[arg(long, value_enum, default_value_t = Direction::Both)]
    direction: Direction,
    #[arg(long, default_value_t = 0)]
    revs: u32,
    /// Root returned for several revolutions.
    #[arg(long, value_enum, default_value_t = Branch::Smaller)]
    branch: Branch,
}

#[derive(Args)]
struct SeedArc {
    /// Seed arc start; a random arc is drawn from --seed when omitted.
    #[arg(long = "A", allow_hyphen_values = true, requires_all = ["b", "dt"])]
    a: Option<String>,
    #[arg(long = "B", allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long)]
    dt: Option<f64>,
    #[arg(long, value_enum, default_value_t = Direction::Ccw)]
    direction: Direction,
}

#[derive(Args)]
struct CycleArgs {
    #[command(flatten)]
    seed_arc: SeedArc,
    #[arg(long, default_value_t = 20)]
    samples: usize,
    /// Also draw the cycle into this SVG file.
    #[arg(long)]
    emit_svg: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of conservation, cycle, lambert, action, geometry; all when omitted.
    #[arg(long)]
    suite: Option<String>,
    #[arg(long, default_value_t = 100)]
    trials: usize,
}

#[derive(Args)]
struct PlotArgs {
    #[arg(long, value_enum)]
    fig: Figure,
    #[command(flatten)]
    seed_arc: SeedArc,
    /// Number of drawn members.
    #[arg(long, default_value_t = 12)]
    members: usize,
}

enum Failure {
    BadInput(String),
    Infeasible(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_)
            | Error::RectilinearFamily
            | Error::RectilinearSeed
            | Error::NotSubRevolution
            | Error::Precondition(_) => Failure::BadInput(e.to_string()),
            _ => Failure::Infeasible(e.to_string()),
        }
    }
}

type Outcome = Result<Output, Failure>;

/// Text for `--out` or standard output, and whether verification failed.
struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn records(records: &[Record], format: Format) -> Self {
        Output {
            text: render(records, format),
            failed: false,
        }
    }
}

fn parse_reals<const N: usize>(what: &str, s: &str) -> Result<[f64; N], Failure> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::BadInput(format!("{what}: {e}")))?;
    let arr: [f64; N] = parts
        .try_into()
        .map_err(|_| Failure::BadInput(format!("{what}: expected {N} comma separated numbers")))?;
    if arr.iter().any(|x| !x.is_finite()) {
        return Err(Failure::BadInput(format!("{what}: values must be finite")));
    }
    Ok(arr)
}

fn parse_point(what: &str, s: &str) -> Result<Vec2, Failure> {
    let [x, y] = parse_reals::<2>(what, s)?;
    Ok(Vec2::new(x, y))
}

fn orientations(d: Direction) -> Vec<Orientation> {
    match d {
        Direction::Ccw => vec![Orientation::Ccw],
        Direction::Cw => vec![Orientation::Cw],
        Direction::Both => vec![Orientation::Ccw, Orientation::Cw],
    }
}

fn single(d: Direction) -> Result<Orientation, Failure> {
    match d {
        Direction::Ccw => Ok(Orientation::Ccw),
        Direction::Cw => Ok(Orientation::Cw),
        Direction::Both => Err(Failure::BadInput("a single direction is required here".into())),
    }
}

fn orientation_name(o: Orientation) -> &'static str {
    match o {
        Orientation::Ccw => "ccw",
        Orientation::Cw => "cw",
    }
}

fn class_name(arc: &KeplerianArc) -> String {
    classify_arc(arc).map(|c| c.to_string()).unwrap_or_else(|_| "none".into())
}

fn kind_name(arc: &KeplerianArc) -> String {
    arc.kind().map(|k| format!("{k:?}").to_lowercase()).unwrap_or_else(|| "rectilinear".into())
}

/// Fields shared by every arc record.
fn arc_record(arc: &KeplerianArc) -> Record {
    let mut r = Record::new()
        .with("dt", arc.time_of_flight())
        .with("H", arc.energy())
        .with("kind", kind_name(arc));
    match arc.orbit() {
        Orbit::Conic(c) => {
            r.push("alpha", c.conic.alpha());
            r.push("beta", c.conic.beta());
            r.push("gamma", c.conic.gamma());
            r.push("e", c.conic.eccentricity());
            r.push("orientation", orientation_name(c.orientation));
        }
        Orbit::Rectilinear(_) => {
            r.push("alpha", f64::NAN);
            r.push("beta", f64::NAN);
            r.push("gamma", 0.0);
            r.push("e", 1.0);
            r.push("orientation", "radial");
        }
    }
    r.push("s_a", arc.s_a());
    r.push("s_b", arc.s_b());
    r.push("revolutions", arc.revolutions());
    r.push("class", class_name(arc));
    r
}

fn cmd_tof(args: &TofArgs, format: Format) -> Outcome {
    let arc = if let Some(state) = &args.state {
        let [x, y, vx, vy] = parse_reals::<4>("--state", state)?;
        let s = StateVector::new(Vec2::new(x, y), Vec2::new(vx, vy), 0.0)?;
        let (orbit, s0) = orbit_and_anomaly_from_state(&s);
        let ds = match (args.turns, args.to) {
            (Some(t), None) => TAU * t,
            (None, Some(to)) => to,
            _ => return Err(Failure::BadInput("--state needs exactly one of --turns or --to".into())),
        };
        KeplerianArc::new(orbit, s0, s0 + ds)?
    } else if let Some(c) = &args.conic {
        let [alpha, beta, gamma] = parse_reals::<3>("--conic", c)?;
        let conic = UnifocalConic::new(alpha, beta, gamma)?;
        let orbit = Orbit::Conic(ConicOrbit::new(conic, single(args.orientation)?, 0.0));
        let (Some(from), Some(to)) = (args.from, args.to) else {
            return Err(Failure::BadInput("--conic needs --from and --to anomalies".into()));
        };
        KeplerianArc::new(orbit, from, to)?
    } else if args.rectilinear {
        let h = args.energy.ok_or_else(|| Failure::BadInput("--rectilinear needs --H".into()))?;
        let orbit = RectilinearOrbit::new(Vec2::X, h, 0.0)?;
        let from = if args.from_collision { Some(0.0) } else { args.from };
        let to = if args.to_culmination {
            if h >= 0.0 {
                return Err(Failure::Infeasible("unbound radial orbit has no culmination".into()));
            }
            Some(PI)
        } else {
            args.to
        };
        let (Some(from), Some(to)) = (from, to) else {
            return Err(Failure::BadInput("--rectilinear needs both ends of the interval".into()));
        };
        KeplerianArc::new(Orbit::Rectilinear(orbit), from, to)?
    } else {
        return Err(Failure::BadInput("one of --state, --conic or --rectilinear is required".into()));
    };
    Ok(Output::records(&[arc_record(&arc)], format))
}

fn cmd_lambert(args: &LambertArgs, format: Format) -> Outcome {
    let a = parse_point("--A", &args.a)?;
    let b = parse_point("--B", &args.b)?;
    let branch = match args.branch {
        Branch::Smaller => MultiRevBranch::SmallerSemimajorAxis,
        Branch::Larger => MultiRevBranch::LargerSemimajorAxis,
    };
    let mut records = Vec::new();
    for dir in orientations(args.direction) {
        let arc = solve_lambert_multi(a, b, args.dt, dir, args.revs, branch)?;
        let (sa, sb) = (arc.start_state()?, arc.end_state()?);
        let mut r = arc_record(&arc);
        r.push("vA_x", sa.v.x);
        r.push("vA_y", sa.v.y);
        r.push("vB_x", sb.v.x);
        r.push("vB_y", sb.v.y);
        r.push("residual", (arc.time_of_flight() - args.dt).abs() / args.dt.max(1.0));
        records.push(r);
    }
    Ok(Output::records(&records, format))
}

fn seed_cycle(seed_arc: &SeedArc, seed: u64, regime: Regime) -> Result<LambertCycle, Failure> {
    let arc = match (&seed_arc.a, &seed_arc.b, seed_arc.dt) {
        (Some(a), Some(b), Some(dt)) => {
            let (a, b) = (parse_point("--A", a)?, parse_point("--B", b)?);
            lambert_core::lambert::solve_lambert(a, b, dt, single(seed_arc.direction)?, 0)?
        }
        _ => sampling::arc(&mut sampling::trial_rng(seed, 0), regime)?,
    };
    let cycle = cycle_from_arc(&arc)?;
    if cycle.is_flat() {
        return Err(Failure::Infeasible("the seed chord passes through the center: flat cycle".into()));
    }
    Ok(cycle)
}

fn sample_record(kind: &str, s: &CycleSample) -> Record {
    Record::new()
        .with("row", kind)
        .with("phi", s.phi)
        .with("dt", s.time_of_flight)
        .with("chord", s.chord)
        .with("radii_sum", s.radii_sum)
        .with("H", s.energy)
        .with("scaled_angular_momentum", s.scaled_angular_momentum)
        .with("scaled_area", s.scaled_area)
        .with("w", s.action)
        .with("class", s.class.map(|c| c.to_string()).unwrap_or_else(|| "none".into()))
}

fn cmd_cycle(args: &CycleArgs, seed: u64, tol: &Tolerances, format: Format) -> Outcome {
    let cycle = seed_cycle(&args.seed_arc, seed, Regime::Mixed)?;
    let report = cycle_invariant_report(&cycle, args.samples)?;
    let mut records = vec![sample_record("seed", &report.seed)];
    records.extend(report.samples.iter().map(|s| sample_record("sample", s)));
    for (end, t) in &report.limits {
        let r = Record::new().with("row", "limit").with("end", format!("{end:?}"));
        records.push(match t {
            Ok(t) => r.with("dt", *t).with("error", ""),
            Err(e) => r.with("dt", f64::NAN).with("error", e.to_string()),
        });
    }
    let invariant = report.time_of_flight <= tol.get("tof_invariance")
        && report.chord.max(report.radii_sum).max(report.energy) <= tol.get("geometric_invariance");
    records.push(
        Record::new()
            .with("row", "summary")
            .with("dt_deviation", report.time_of_flight)
            .with("chord_deviation", report.chord)
            .with("radii_sum_deviation", report.radii_sum)
            .with("H_deviation", report.energy)
            .with("w_deviation", report.action)
            .with("limit_deviation", report.limit_deviation())
            .with("classes_agree", report.classes_agree)
            .with("invariant", invariant),
    );
    if let Some(path) = &args.emit_svg {
        let plot = svg::cycle_figure(&cycle, 8)?;
        fs::write(path, plot.render()).map_err(|e| Failure::BadInput(format!("{}: {e}", path.display())))?;
    }
    Ok(Output {
        text: render(&records, format),
        failed: !(invariant && report.classes_agree),
    })
}

fn cmd_verify(args: &VerifyArgs, seed: u64, tol: &Tolerances, format: Format) -> Outcome {
    let suites = match &args.suite {
        Some(s) => vec![s.parse::<Suite>()?],
        None => Suite::ALL.to_vec(),
    };
    let mut records = Vec::new();
    let mut failed = Vec::new();
    for suite in suites {
        let report = run_suite(suite, args.trials, seed, tol);
        if !report.passed() {
            failed.push(suite.to_string());
        }
        records.extend(report.records());
    }
    if !failed.is_empty() {
        eprintln!("failed suites: {}", failed.join(", "));
    }
    Ok(Output {
        text: render(&records, format),
        failed: !failed.is_empty(),
    })
}

fn cmd_plot(args: &PlotArgs, seed: u64) -> Outcome {
    if args.members == 0 {
        return Err(Failure::BadInput("--members must be positive".into()));
    }
    let plot = match args.fig {
        Figure::ChordFamily => {
            let a = args.seed_arc.a.as_deref().map(|s| parse_point("--A", s)).transpose()?;
            let b = args.seed_arc.b.as_deref().map(|s| parse_point("--B", s)).transpose()?;
            let cfg = ChordConfig::new(a.unwrap_or(Vec2::X), b.unwrap_or(Vec2::Y))?;
            svg::chord_family_figure(&cfg, args.members)?
        }
        Figure::Cycle => svg::cycle_figure(&seed_cycle(&args.seed_arc, seed, Regime::Mixed)?, args.members)?,
        Figure::Foci => svg::foci_figure(&seed_cycle(&args.seed_arc, seed, Regime::Elliptic)?, args.members)?,
        Figure::Cycloid => svg::cycloid_figure(),
    };
    Ok(Output {
        text: plot.render(),
        failed: false,
    })
}

fn run(cli: &Cli) -> Outcome {
    let mut tol = Tolerances::default();
    for setting in &cli.tol {
        tol.apply(setting)?;
    }
    let format = match cli.format {
        OutFormat::Json => Format::Json,
        OutFormat::Csv => Format::Csv,
    };
    match &cli.command {
        Command::Tof(a) => cmd_tof(a, format),
        Command::Lambert(a) => cmd_lambert(a, format),
        Command::Cycle(a) => cmd_cycle(a, cli.seed, &tol, format),
        Command::Verify(a) => cmd_verify(a, cli.seed, &tol, format),
        Command::Plot(a) => cmd_plot(a, cli.seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = run(&cli).and_then(|out| {
        match &cli.out {
            Some(path) => fs::write(path, &out.text)
                .map_err(|e| Failure::BadInput(format!("{}: {e}", path.display())))?,
            None => print!("{}", out.text),
        }
        if out.failed {
            Err(Failure::Verification("verification failed".into()))
        } else {
            Ok(out)
        }
    });
    match outcome {
        Ok(_) => ExitCode::SUCCESS,
        Err(Failure::BadInput(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Infeasible(m)) => {
            eprintln!("infeasible: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Verification(m)) => {
            eprintln!("{m}");
            ExitCode::from(4)
        }
    }
}
