use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use ballcomp::ball::{
    enumerate_balls, enumerate_realizable_samples, member_sets, sample_realizable, vc_dimension, EXHAUSTIVE_LIMIT,
};
use ballcomp::formats;
use ballcomp::{
    generate, hyperbolicity, ApproxParams, Ball, CactusScheme, Center, CfMedianScheme, CompressedSample, CycleScheme,
    GenSpec, Graph, GraphClass, HyperbolicScheme, IntervalMode, IntervalRepresentation, IntervalScheme,
    PlanarUnitScheme, RotationSystem, Sample, Scheme, SplitScheme, TreeFixedRadius, TreeFixedRadiusSets, TreeLscs,
    TreeUscs, VerificationReport, VerifyOptions,
};

#[derive(Parser)]
#[command(name = "ballcomp", version, about = "Sample compression schemes for balls in graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph (and its rotation or interval representation).
    Gen(GenArgs),
    /// Compress a sample file and print the compressed sample.
    Compress(CompressArgs),
    /// Decode a compressed sample and print the ball.
    Reconstruct(ReconstructArgs),
    /// Run a scheme on every realizable sample (or a seeded subset).
    Verify(VerifyArgs),
    /// Print the VC-dimension of the ball family.
    Vcdim(VcdimArgs),
    /// Print the exact Gromov hyperbolicity.
    Delta(DeltaArgs),
    /// List the distinct balls of the graph.
    Balls(BallsArgs),
}

#[derive(Clone, Copy, Debug)]
struct Grid(usize, usize);

fn parse_grid(s: &str) -> std::result::Result<Grid, String> {
    let (r, c) = s.split_once('x').ok_or("expected ROWSxCOLS, e.g. 2x3")?;
    let r = r.parse().map_err(|_| format!("bad row count {r:?}"))?;
    let c = c.parse().map_err(|_| format!("bad column count {c:?}"))?;
    Ok(Grid(r, c))
}

/// Where the graph comes from: a file, or a generator spec.
#[derive(Args)]
struct Source {
    /// Graph file: header "n m", then one "u v" line per edge.
    #[arg(long, conflicts_with = "class", required_unless_present = "class")]
    graph: Option<PathBuf>,
    /// Generate a graph of this class instead of reading one.
    #[arg(long)]
    class: Option<GraphClass>,
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of cycles for cactus generation.
    #[arg(long)]
    cycles: Option<usize>,
    /// Grid dimensions for cfmedian and planar-rot, e.g. 3x3.
    #[arg(long, value_parser = parse_grid)]
    grid: Option<Grid>,
    #[arg(long)]
    density: Option<f64>,
    /// Rotation file ("v: n1 n2 ..." clockwise) for the planar scheme.
    #[arg(long)]
    rotation: Option<PathBuf>,
    /// Interval file ("v s e") for the interval scheme.
    #[arg(long)]
    intervals: Option<PathBuf>,
}

struct Instance {
    graph: Graph,
    rotation: Option<RotationSystem>,
    intervals: Option<IntervalRepresentation>,
}

fn read(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

impl Source {
    fn spec(&self, class: GraphClass) -> GenSpec {
        GenSpec {
            cycles: self.cycles,
            grid: self.grid.map(|Grid(r, c)| (r, c)),
            density: self.density,
            ..GenSpec::new(class, self.n, self.seed)
        }
    }

    fn load(&self) -> Result<Instance> {
        let mut inst = match (&self.graph, self.class) {
            (Some(path), _) => Instance {
                graph: formats::parse_graph(&read(path)?).with_context(|| format!("in {}", path.display()))?,
                rotation: None,
                intervals: None,
            },
            (None, Some(class)) => {
                let out = generate(&self.spec(class))?;
                Instance {
                    graph: out.graph,
                    rotation: out.rotation,
                    intervals: out.intervals,
                }
            }
            (None, None) => bail!("either --graph or --class is required"),
        };
        if let Some(path) = &self.rotation {
            inst.rotation = Some(formats::parse_rotation(&read(path)?, inst.graph.n())?);
        }
        if let Some(path) = &self.intervals {
            inst.intervals = Some(formats::parse_intervals(&read(path)?)?);
        }
        Ok(inst)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeKind {
    /// Trees, unlabeled, metric balls (size 2).
    Uscs,
    /// Trees, labeled, any radius (size 2).
    Lscs,
    /// Trees, fixed radius, ordered slots (size 2); needs --radius.
    Fixed,
    /// Trees, fixed radius, plain sets (size 6); needs --radius.
    Sets,
    Cycle,
    Cactus,
    Cfmedian,
    /// Interval graphs; --radius selects the fixed-radius variant.
    Interval,
    Split,
    /// Radius-1 balls of a plane graph; needs a rotation system.
    Planar,
    /// Approximate scheme for hyperbolic graphs.
    Hyperbolic,
}

#[derive(Args)]
struct SchemeArgs {
    #[arg(long, value_enum)]
    scheme: SchemeKind,
    /// Ball radius for fixed-radius schemes.
    #[arg(long)]
    radius: Option<u32>,
}

struct Built {
    scheme: Box<dyn Scheme>,
    opts: VerifyOptions,
}

fn build(args: &SchemeArgs, inst: &Instance) -> Result<Built> {
    let g = &inst.graph;
    let need_radius = || args.radius.ok_or_else(|| anyhow!("--radius is required for this scheme"));
    let exact = |k: usize, s: Box<dyn Scheme>| Built {
        scheme: s,
        opts: VerifyOptions::exact(k),
    };
    Ok(match args.scheme {
        SchemeKind::Uscs => Built {
            scheme: Box::new(TreeUscs::new(g)?),
            opts: VerifyOptions {
                proper: false,
                ..VerifyOptions::exact(2)
            },
        },
        SchemeKind::Lscs => exact(2, Box::new(TreeLscs::new(g)?)),
        SchemeKind::Fixed => {
            let r = need_radius()?;
            Built {
                scheme: Box::new(TreeFixedRadius::new(g, r)?),
                opts: VerifyOptions::exact(2).with_radius(r),
            }
        }
        SchemeKind::Sets => {
            let r = need_radius()?;
            Built {
                scheme: Box::new(TreeFixedRadiusSets::new(g, r)?),
                opts: VerifyOptions::exact(6).with_radius(r),
            }
        }
        SchemeKind::Cycle => exact(3, Box::new(CycleScheme::new(g)?)),
        SchemeKind::Cactus => exact(6, Box::new(CactusScheme::new(g)?)),
        SchemeKind::Cfmedian => exact(22, Box::new(CfMedianScheme::new(g)?)),
        SchemeKind::Interval => {
            let rep = inst
                .intervals
                .clone()
                .ok_or_else(|| anyhow!("the interval scheme needs --intervals (or --class interval)"))?;
            let mode = args.radius.map_or(IntervalMode::All, IntervalMode::Fixed);
            let opts = match args.radius {
                Some(r) => VerifyOptions::exact(4).with_radius(r),
                None => VerifyOptions::exact(4),
            };
            Built {
                scheme: Box::new(IntervalScheme::new(g, rep, mode)?),
                opts,
            }
        }
        SchemeKind::Split => {
            let s = SplitScheme::new(g)?;
            let omega = s.partition().omega();
            exact(omega, Box::new(s))
        }
        SchemeKind::Planar => {
            let rot = inst
                .rotation
                .as_ref()
                .ok_or_else(|| anyhow!("the planar scheme needs --rotation (or --class planar-rot)"))?;
            Built {
                scheme: Box::new(PlanarUnitScheme::new(g, rot)?),
                opts: VerifyOptions::exact(4).with_radius(1),
            }
        }
        SchemeKind::Hyperbolic => exact(2, Box::new(HyperbolicScheme::new(g))),
    })
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    source: Source,
    /// Write the graph here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Write the rotation system of planar-rot graphs here.
    #[arg(long)]
    rotation_out: Option<PathBuf>,
    /// Write the interval representation of interval graphs here.
    #[arg(long)]
    intervals_out: Option<PathBuf>,
}

#[derive(Args)]
struct CompressArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    scheme: SchemeArgs,
    /// Sample file ("+ v" / "- v" lines); `-` for stdin.
    #[arg(long, default_value = "-")]
    sample: PathBuf,
}

#[derive(Args)]
struct ReconstructArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    scheme: SchemeArgs,
    /// Compressed sample such as "+0 * | -3"; read from stdin when absent.
    #[arg(long, allow_hyphen_values = true)]
    code: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    scheme: SchemeArgs,
    /// Require exhaustive enumeration of the realizable samples.
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    /// Test this many seeded realizable samples instead.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 1)]
    sample_seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Balls,
}

#[derive(Args)]
struct VcdimArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value = "balls")]
    family: Family,
    /// Restrict to balls of this radius.
    #[arg(long)]
    radius: Option<u32>,
}

#[derive(Args)]
struct DeltaArgs {
    #[command(flatten)]
    source: Source,
    /// Also print a quadruple attaining the value.
    #[arg(long)]
    witness: bool,
}

#[derive(Args)]
struct BallsArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    radius: Option<u32>,
}

fn describe(b: &Ball) -> String {
    match b.center() {
        None => "empty".into(),
        Some(c) => {
            let c = match c {
                Center::Vertex(v) => v.to_string(),
                Center::Midpoint(u, v) => format!("{u}~{v}"),
            };
            let members: Vec<String> = b.vertices().iter().map(usize::to_string).collect();
            format!("center={c} radius={} members={}", b.radius(), members.join(","))
        }
    }
}

fn verify(args: &VerifyArgs) -> Result<VerificationReport> {
    let inst = args.source.load()?;
    let built = build(&args.scheme, &inst)?;
    let n = inst.graph.n();
    if args.exhaustive && n > EXHAUSTIVE_LIMIT {
        bail!("exhaustive enumeration is limited to n <= {EXHAUSTIVE_LIMIT}");
    }
    let dm = inst.graph.distances();
    let family = enumerate_balls(&dm, built.opts.radius);
    let samples = match args.samples {
        Some(k) => sample_realizable(n, &family, k, args.sample_seed),
        None => enumerate_realizable_samples(n, &family, None),
    };
    if args.scheme.scheme != SchemeKind::Hyperbolic {
        return Ok(ballcomp::verify_scheme(&dm, built.scheme.as_ref(), &built.opts, &samples));
    }
    let hyp = HyperbolicScheme::new(&inst.graph);
    let mut groups: Vec<(ApproxParams, Vec<Sample>)> = Vec::new();
    for x in samples {
        let p = hyp.params_for(&x);
        match groups.iter_mut().find(|gr| gr.0 == p) {
            Some(gr) => gr.1.push(x),
            None => groups.push((p, vec![x])),
        }
    }
    let mut total: Option<VerificationReport> = None;
    for (p, part) in groups {
        let opts = VerifyOptions {
            approx: Some(p),
            ..built.opts.clone()
        };
        let rep = ballcomp::verify_scheme(&dm, &hyp, &opts, &part);
        match total.as_mut() {
            Some(t) => t.merge(rep),
            None => total = Some(rep),
        }
    }
    Ok(total.unwrap_or(VerificationReport {
        scheme: hyp.id(),
        samples_tested: 0,
        failures: Vec::new(),
        max_support: 0,
        properness_violations: 0,
        approx: None,
    }))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Command::Gen(args) => {
            let class = args.source.class.ok_or_else(|| anyhow!("gen needs --class"))?;
            let out = generate(&args.source.spec(class))?;
            let text = formats::write_graph(&out.graph);
            match &args.output {
                Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
                None => print!("{text}"),
            }
            if let (Some(p), Some(rot)) = (&args.rotation_out, &out.rotation) {
                fs::write(p, formats::write_rotation(rot))?;
            }
            if let (Some(p), Some(rep)) = (&args.intervals_out, &out.intervals) {
                fs::write(p, formats::write_intervals(rep))?;
            }
        }
        Command::Compress(args) => {
            let inst = args.source.load()?;
            let built = build(&args.scheme, &inst)?;
            let x = formats::parse_sample(&read(&args.sample)?, inst.graph.n())?;
            println!("{}", built.scheme.compress(&x)?);
        }
        Command::Reconstruct(args) => {
            let inst = args.source.load()?;
            let built = build(&args.scheme, &inst)?;
            let code = match args.code {
                Some(c) => c,
                None => read(Path::new("-"))?,
            };
            for line in code.lines().filter(|l| !l.trim().is_empty()) {
                let y = CompressedSample::parse(line)?;
                println!("{}", describe(&built.scheme.reconstruct(&y)?));
            }
        }
        Command::Verify(args) => {
            let rep = verify(&args)?;
            print!("{}", formats::write_report(&rep));
            if !rep.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Vcdim(args) => {
            let Family::Balls = args.family;
            let g = args.source.load()?.graph;
            let balls = enumerate_balls(&g.distances(), args.radius);
            println!("{}", vc_dimension(&member_sets(&balls), g.n()));
        }
        Command::Delta(args) => {
            let g = args.source.load()?.graph;
            let h = hyperbolicity(&g.distances());
            println!("{}", h.delta);
            if let (true, Some(q)) = (args.witness, h.witness) {
                println!("witness {} {} {} {}", q[0], q[1], q[2], q[3]);
            }
        }
        Command::Balls(args) => {
            let g = args.source.load()?.graph;
            for b in enumerate_balls(&g.distances(), args.radius) {
                println!("{}", describe(&b));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
