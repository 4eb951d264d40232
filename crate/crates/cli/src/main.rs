//! `quiverbar` command line: factor matrices, compute homology, and print
//! persistence and zigzag barcodes.

mod svg;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use quiverbar::complex::{parse_filtration, parse_simplicial, parse_vertex_map, SimplicialComplex};
use quiverbar::factor::{factorize, lqu, FactorKind};
use quiverbar::homology::homology_basis;
use quiverbar::pipeline::{persistence, Strategy, Via};
use quiverbar::quiver::{
    barcode_form_parallel, barcode_form_sequential, diagram_to_quiver, extract_barcode, parse_diagram, parse_quiver,
    Diagram,
};
use quiverbar::sparse::{parse_matrix, write_matrix};
use quiverbar::{Field, Initial, Interval, TypeAQuiverRep};

#[derive(Parser, Debug)]
#[command(name = "quiverbar", version, about = "Persistence and zigzag barcodes via quiver factorizations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor a matrix and check the product.
    Factor {
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Leup)]
        kind: Kind,
        #[command(flatten)]
        out: TextOut,
    },
    /// Betti numbers of a complex.
    Homology {
        complex: PathBuf,
        #[command(flatten)]
        input: ComplexIn,
        #[command(flatten)]
        out: TextOut,
    },
    /// Persistence barcode of a filtration.
    Persist {
        filtration: PathBuf,
        #[arg(long, value_enum, default_value_t = ViaArg::Reduction)]
        via: ViaArg,
        /// Report filtration values instead of cell positions.
        #[arg(long)]
        values: bool,
        /// Drop bars born and killed at the same filtration value.
        #[arg(long)]
        skip_zero: bool,
        #[command(flatten)]
        input: ComplexIn,
        #[command(flatten)]
        strategy: StrategyArgs,
        #[command(flatten)]
        out: BarcodeOut,
    },
    /// Zigzag barcode of a diagram of complexes.
    Zigzag {
        diagram: PathBuf,
        #[command(flatten)]
        input: ComplexIn,
        #[command(flatten)]
        strategy: StrategyArgs,
        #[command(flatten)]
        out: BarcodeOut,
    },
    /// Barcode of a type-A quiver representation.
    Quiver {
        quiver: PathBuf,
        #[command(flatten)]
        strategy: StrategyArgs,
        #[command(flatten)]
        out: BarcodeOut,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Leup,
    Pleu,
    Uelp,
    Puel,
    Lqu,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ViaArg {
    Reduction,
    Quiver,
    Telescope,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InitialArg {
    Right,
    Left,
}

#[derive(Args, Debug)]
struct ComplexIn {
    /// Coefficient field (F2, F<p> or Q), replacing the file header.
    #[arg(long, value_parser = parse_field)]
    field: Option<Field>,
    /// Highest homology dimension; defaults to the top cell dimension.
    #[arg(long)]
    max_dim: Option<usize>,
}

#[derive(Args, Debug)]
struct StrategyArgs {
    /// Use the divide-and-conquer factorization.
    #[arg(long)]
    parallel: bool,
    /// Nodes per leaf segment of the parallel factorization.
    #[arg(long)]
    leaf_size: Option<usize>,
    /// Direction of the first sequential sweep.
    #[arg(long, value_enum)]
    initial: Option<InitialArg>,
}

#[derive(Args, Debug)]
struct TextOut {
    /// Write the text result here instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BarcodeOut {
    #[command(flatten)]
    text: TextOut,
    /// Also draw the barcode as SVG.
    #[arg(long)]
    svg: Option<PathBuf>,
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse::<Field>().map_err(|e| e.to_string())
}

/// Why a run stopped. Bad input exits 1, a failed self-check exits 2.
enum Failure {
    Invalid(anyhow::Error),
    Check(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Invalid(e)
    }
}

impl From<quiverbar::Error> for Failure {
    fn from(e: quiverbar::Error) -> Self {
        Failure::Invalid(e.into())
    }
}

struct Report {
    text: String,
    plot: Option<(Vec<svg::Bar>, PathBuf)>,
    check_failed: bool,
}

impl StrategyArgs {
    fn any(&self) -> bool {
        self.parallel || self.leaf_size.is_some() || self.initial.is_some()
    }

    fn strategy(&self) -> anyhow::Result<Strategy> {
        if self.parallel {
            if self.initial.is_some() {
                bail!("--initial applies to the sequential factorization only");
            }
            let leaf_size = self.leaf_size.unwrap_or(1);
            if leaf_size == 0 {
                bail!("--leaf-size must be at least 1");
            }
            return Ok(Strategy::Parallel { leaf_size });
        }
        if self.leaf_size.is_some() {
            bail!("--leaf-size needs --parallel");
        }
        Ok(Strategy::Sequential(match self.initial {
            Some(InitialArg::Left) => Initial::Leftward,
            _ => Initial::Rightward,
        }))
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn with_path<T>(path: &Path, r: quiverbar::Result<T>) -> anyhow::Result<T> {
    r.with_context(|| path.display().to_string())
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var("QUIVERBAR_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| anyhow!("QUIVERBAR_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    Ok(())
}

fn intervals(q: &TypeAQuiverRep, strategy: Strategy) -> Result<Vec<Interval>, Failure> {
    let form = match strategy {
        Strategy::Sequential(init) => barcode_form_sequential(q, init, false),
        Strategy::Parallel { leaf_size } => barcode_form_parallel(q, leaf_size),
    };
    extract_barcode(&form).map_err(|e| Failure::Check(e.into()))
}

fn bar_lines(bars: &[(usize, Interval)]) -> String {
    bars.iter().map(|(k, i)| format!("{k} {} {}\n", i.birth, i.death)).collect()
}

/// Quiver bars cover closed node ranges; drawn as `[birth, death + 1)`.
fn plot_intervals(bars: &[(usize, Interval)]) -> Vec<svg::Bar> {
    bars.iter()
        .map(|(k, i)| svg::Bar { dim: *k, birth: i.birth as f64, death: Some((i.death + 1) as f64) })
        .collect()
}

fn run_factor(matrix: &Path, kind: Kind) -> Result<Report, Failure> {
    let a = with_path(matrix, parse_matrix(&read(matrix)?))?;
    let mut text = String::new();
    let ok = match kind {
        Kind::Lqu => {
            let f = lqu(&a);
            for (label, m) in [("L", &f.l), ("Q", &f.q), ("U", &f.u)] {
                text += &format!("# {label}\n{}", write_matrix(m));
            }
            f.product() == a && f.l.is_unit_lower() && f.u.is_unit_upper() && f.q.is_pivot()
        }
        _ => {
            let kind = match kind {
                Kind::Leup => FactorKind::Leup,
                Kind::Pleu => FactorKind::Pleu,
                Kind::Uelp => FactorKind::Uelp,
                _ => FactorKind::Puel,
            };
            let f = factorize(&a, kind);
            for (label, m) in kind.labels().iter().zip(f.factors()) {
                text += &format!("# {label}\n{}", write_matrix(&m));
            }
            f.product() == a && f.shapes_ok()
        }
    };
    text += if ok { "check: ok\n" } else { "check: FAIL\n" };
    Ok(Report { text, plot: None, check_failed: !ok })
}

fn run_homology(path: &Path, input: &ComplexIn) -> Result<Report, Failure> {
    let x = with_path(path, parse_simplicial(&read(path)?, input.field))?;
    let top = input.max_dim.unwrap_or(x.num_dims().saturating_sub(1));
    let hb = homology_basis(x.complex(), top);
    let text = (0..=top).map(|k| format!("{k} {}\n", hb.betti(k))).collect();
    Ok(Report { text, plot: None, check_failed: false })
}

fn run_persist(
    path: &Path,
    via: ViaArg,
    values: bool,
    skip_zero: bool,
    input: &ComplexIn,
    strategy: &StrategyArgs,
    svg_path: Option<PathBuf>,
) -> Result<Report, Failure> {
    if via != ViaArg::Quiver && strategy.any() {
        return Err(anyhow!("--parallel, --leaf-size and --initial need --via quiver").into());
    }
    let strategy = strategy.strategy()?;
    let fc = with_path(path, parse_filtration(&read(path)?, input.field))?;
    let top = input.max_dim.unwrap_or(fc.complex().num_dims().saturating_sub(1));
    let via = match via {
        ViaArg::Reduction => Via::Reduction,
        ViaArg::Quiver => Via::Quiver,
        ViaArg::Telescope => Via::Telescope,
    };
    let mut barcode = persistence(&fc, top, via, strategy)?;
    let value = |i: usize| fc.value_at(i - 1);
    if skip_zero {
        barcode = barcode
            .iter()
            .filter(|b| b.death.is_none_or(|d| value(d) > value(b.birth)))
            .copied()
            .collect();
    }
    let text = if values { barcode.to_text_with(value) } else { barcode.to_text() };
    let plot = svg_path.map(|p| {
        let at = |i: usize| if values { value(i) } else { i as f64 };
        let bars = barcode.iter().map(|b| svg::Bar { dim: b.dim, birth: at(b.birth), death: b.death.map(at) }).collect();
        (bars, p)
    });
    Ok(Report { text, plot, check_failed: false })
}

fn run_zigzag(path: &Path, input: &ComplexIn, strategy: &StrategyArgs, svg_path: Option<PathBuf>) -> Result<Report, Failure> {
    let strategy = strategy.strategy()?;
    let spec = with_path(path, parse_diagram(&read(path)?))?;
    if spec.nodes.is_empty() {
        return Err(anyhow!("{}: diagram has no nodes", path.display()).into());
    }
    // Referenced files are relative to the diagram file.
    let base = path.parent().unwrap_or(Path::new("."));
    let mut nodes: Vec<(usize, SimplicialComplex)> = Vec::new();
    for (id, file) in &spec.nodes {
        let p = base.join(file);
        nodes.push((*id, with_path(&p, parse_simplicial(&read(&p)?, input.field))?));
    }
    let field = nodes[0].1.field();
    if let Some((id, x)) = nodes.iter().find(|(_, x)| x.field() != field) {
        return Err(anyhow!("node {id} is over {} but node {} is over {field}", x.field(), nodes[0].0).into());
    }
    let mut edges = Vec::new();
    for (s, t, file) in &spec.edges {
        let p = base.join(file);
        edges.push((*s, *t, with_path(&p, parse_vertex_map(&read(&p)?))?));
    }
    let d = with_path(path, Diagram::from_simplicial(field, &nodes, &edges))?;
    let top = input
        .max_dim
        .unwrap_or_else(|| nodes.iter().map(|(_, x)| x.num_dims().saturating_sub(1)).max().unwrap_or(0));
    let mut bars = Vec::new();
    for k in 0..=top {
        let q = with_path(path, diagram_to_quiver(&d, k).and_then(|q| q.to_type_a()))?;
        bars.extend(intervals(&q, strategy)?.into_iter().map(|i| (k, i)));
    }
    Ok(Report { text: bar_lines(&bars), plot: svg_path.map(|p| (plot_intervals(&bars), p)), check_failed: false })
}

fn run_quiver(path: &Path, strategy: &StrategyArgs, svg_path: Option<PathBuf>) -> Result<Report, Failure> {
    let strategy = strategy.strategy()?;
    let q = with_path(path, parse_quiver(&read(path)?))?;
    let bars: Vec<_> = intervals(&q, strategy)?.into_iter().map(|i| (0, i)).collect();
    Ok(Report { text: bar_lines(&bars), plot: svg_path.map(|p| (plot_intervals(&bars), p)), check_failed: false })
}

fn run(cli: Cli) -> Result<(), Failure> {
    let (report, output) = match cli.command {
        Command::Factor { matrix, kind, out } => (run_factor(&matrix, kind)?, out.output),
        Command::Homology { complex, input, out } => (run_homology(&complex, &input)?, out.output),
        Command::Persist { filtration, via, values, skip_zero, input, strategy, out } => {
            (run_persist(&filtration, via, values, skip_zero, &input, &strategy, out.svg)?, out.text.output)
        }
        Command::Zigzag { diagram, input, strategy, out } => (run_zigzag(&diagram, &input, &strategy, out.svg)?, out.text.output),
        Command::Quiver { quiver, strategy, out } => (run_quiver(&quiver, &strategy, out.svg)?, out.text.output),
    };
    match output {
        Some(p) => fs::write(&p, &report.text).with_context(|| format!("cannot write {}", p.display()))?,
        None => print!("{}", report.text),
    }
    if let Some((bars, p)) = &report.plot {
        fs::write(p, svg::render(bars)).with_context(|| format!("cannot write {}", p.display()))?;
    }
    if report.check_failed {
        return Err(Failure::Check(anyhow!("factors do not reproduce the input")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Check(e)) => {
            eprintln!("check failed: {e:#}");
            ExitCode::from(2)
        }
    }
}
