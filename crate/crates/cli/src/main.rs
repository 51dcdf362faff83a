use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tromino_core::aztec::{
    embed_in_aztec, gen_aztec_diamond, gen_aztec_rectangle, has_l_cover, recognize_aztec, tile_aztec,
    tile_aztec_one_defect, AztecRectangleSpec,
};
use tromino_core::boxplus::{decompose, find_detaching_cut, is_detachable, tile_boxplus, AdjacencyGraph};
use tromino_core::render::{render_ascii, render_svg};
use tromino_core::sample::{random_region, seeded_rng};
use tromino_core::solver::{SolveStatus, Solver, DEFAULT_BUDGET};
use tromino_core::tromino180::{decide_180_cover_with, detect_forbidden, find_claw, IntersectionGraph};
use tromino_core::{Error, PieceSet, Region, Tiling};

const COVERED: u8 = 0;
const UNCOVERABLE: u8 = 1;
const USAGE: u8 = 2;
const RESOURCE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "tromino", version, about = "Tromino tilings of grid regions")]
struct Cli {
    /// Node budget for exponential searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,

    /// Seed for random region generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a generated region in the text format.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Find a tiling of a region.
    Tile {
        region: PathBuf,
        #[arg(long, value_enum, default_value_t = Pieces::L)]
        pieces: Pieces,
        #[arg(long, value_enum, default_value_t = Strategy::Auto)]
        strategy: Strategy,
        /// Where to write the tiling as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Count the tilings of a region exactly.
    Count {
        region: PathBuf,
        #[arg(long, value_enum, default_value_t = Pieces::L)]
        pieces: Pieces,
    },
    /// Report structural properties of a region.
    Check {
        region: PathBuf,
        #[arg(long = "check", value_enum, required = true)]
        checks: Vec<CheckKind>,
    },
    /// Subdivide every cell into a 2×2 block and tile the result with L-trominoes.
    Boxplus {
        region: PathBuf,
        /// Where to write the tiling as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the subdivided region.
        #[arg(long)]
        region_out: Option<PathBuf>,
        /// Print the decomposition into trees.
        #[arg(long)]
        show_decomposition: bool,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Render a region, optionally with a tiling.
    Render {
        region: PathBuf,
        #[arg(long)]
        tiling: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Embed a region into an Aztec rectangle whose other cells are defects.
    Embed {
        region: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a tiling against a region.
    Validate { region: PathBuf, tiling: PathBuf },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    AztecRect {
        a: u32,
        b: u32,
    },
    AztecDiamond {
        n: u32,
    },
    /// Random polyomino grown from the seed.
    Random {
        #[arg(long, default_value_t = 12)]
        max_cells: usize,
        #[arg(long, default_value_t = 0.0)]
        defect_rate: f64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Pieces {
    /// All four L-tromino orientations.
    L,
    /// Right-oriented 180-trominoes.
    L180r,
    /// Left-oriented 180-trominoes.
    L180l,
    /// I-trominoes.
    I,
}

impl Pieces {
    fn set(self) -> PieceSet {
        match self {
            Pieces::L => PieceSet::ALL_L,
            Pieces::L180r => PieceSet::RIGHT_180,
            Pieces::L180l => PieceSet::LEFT_180,
            Pieces::I => PieceSet::I,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Strategy {
    Auto,
    Constructive,
    Oracle,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Ascii,
    Svg,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CheckKind {
    Forbidden,
    Detachable,
    Claw,
}

/// A finished command: exit code and the message explaining a non-zero code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit { .. } => RESOURCE,
            Error::NoCover(_) => UNCOVERABLE,
            _ => USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::from(COVERED),
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Gen { kind, out } => cmd_gen(kind, out.as_deref(), cli.seed),
        Command::Tile {
            region,
            pieces,
            strategy,
            out,
            format,
        } => cmd_tile(
            &read_region(region)?,
            *pieces,
            *strategy,
            cli.budget,
            out.as_deref(),
            *format,
        ),
        Command::Count { region, pieces } => cmd_count(&read_region(region)?, *pieces, cli.budget),
        Command::Check { region, checks } => cmd_check(&read_region(region)?, checks),
        Command::Boxplus {
            region,
            out,
            region_out,
            show_decomposition,
            format,
        } => cmd_boxplus(
            &read_region(region)?,
            out.as_deref(),
            region_out.as_deref(),
            *show_decomposition,
            *format,
        ),
        Command::Render { region, tiling, format } => {
            let r = read_region(region)?;
            let t = match tiling {
                Some(p) => read_tiling(p, &r)?,
                None => Tiling::new(Vec::new()),
            };
            print!("{}", render(&r, &t, *format));
            Ok(())
        }
        Command::Embed { region, out } => {
            let (spec, host) = embed_in_aztec(&read_region(region)?);
            eprintln!("embedded in AR({},{})", spec.a, spec.b);
            emit(out.as_deref(), &host.to_text())
        }
        Command::Validate { region, tiling } => {
            let r = read_region(region)?;
            let t = read_tiling(tiling, &r)?;
            println!("valid: {} placements", t.len());
            Ok(())
        }
    }
}

fn read_text(path: &Path) -> std::result::Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::new(USAGE, format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::new(USAGE, format!("{}: {e}", path.display())))
}

fn read_region(path: &Path) -> std::result::Result<Region, Failure> {
    Region::parse(&read_text(path)?).map_err(|e| Failure::new(USAGE, format!("{}: {e}", path.display())))
}

/// Reads a tiling and checks it against the region.
fn read_tiling(path: &Path, r: &Region) -> std::result::Result<Tiling, Failure> {
    let t =
        Tiling::from_json(&read_text(path)?).map_err(|e| Failure::new(USAGE, format!("{}: {e}", path.display())))?;
    t.validate(r)
        .map_err(|v| Failure::new(USAGE, format!("invalid tiling: {v}")))?;
    Ok(t)
}

/// Writes to the file when given, otherwise to stdout.
fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::new(USAGE, format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(r: &Region, t: &Tiling, format: Format) -> String {
    match format {
        Format::Ascii => render_ascii(r, t),
        Format::Svg => render_svg(r, t),
        Format::Json => t.to_json() + "\n",
    }
}

fn cmd_gen(kind: &GenKind, out: Option<&Path>, seed: u64) -> Outcome {
    let r = match *kind {
        GenKind::AztecRect { a, b } => gen_aztec_rectangle(AztecRectangleSpec::new(a, b)?),
        GenKind::AztecDiamond { n } => gen_aztec_diamond(n)?,
        GenKind::Random { max_cells, defect_rate } => {
            if max_cells == 0 || !(0.0..=1.0).contains(&defect_rate) {
                return Err(Failure::new(USAGE, "need max-cells ≥ 1 and defect-rate in [0, 1]"));
            }
            random_region(&mut seeded_rng(seed), max_cells, defect_rate)
        }
    };
    eprintln!("{} cells", r.len());
    emit(out, &r.to_text())
}

/// How a tiling was found, for the report line.
enum Route {
    Aztec,
    AztecOneDefect,
    Pipeline180,
    Oracle,
}

impl Route {
    fn name(&self) -> &'static str {
        match self {
            Route::Aztec => "aztec-constructive",
            Route::AztecOneDefect => "aztec-one-defect",
            Route::Pipeline180 => "180-pipeline",
            Route::Oracle => "oracle",
        }
    }
}

fn uncoverable(reason: &str) -> Failure {
    Failure::new(UNCOVERABLE, format!("uncoverable: {reason}"))
}

/// Constructive routes for recognized Aztec rectangles: `None` when the
/// region is not one or has defects the tilers do not handle.
fn aztec_route(r: &Region) -> Option<std::result::Result<(Tiling, Route), Failure>> {
    let (spec, lo) = recognize_aztec(r)?;
    let shift = |t: Tiling| {
        t.map_cells(|c| c.offset(lo.x, lo.y))
            .expect("translated trominoes stay trominoes")
    };
    let defects: Vec<_> = r.defects().iter().collect();
    match defects.as_slice() {
        [] if !has_l_cover(spec.a, spec.b) => {
            Some(Err(uncoverable("Aztec rectangle cell count is not divisible by 3")))
        }
        [] => Some(
            tile_aztec(spec.a, spec.b)
                .map(|t| (shift(t), Route::Aztec))
                .map_err(Failure::from),
        ),
        [d] if spec.a % 3 == 1 && spec.b % 3 == 1 => Some(
            tile_aztec_one_defect(spec.a, spec.b, d.offset(-lo.x, -lo.y))
                .map(|t| (shift(t), Route::AztecOneDefect))
                .map_err(Failure::from),
        ),
        _ => None,
    }
}

fn pipeline_180(r: &Region, pieces: PieceSet, budget: u64) -> std::result::Result<(Tiling, Route), Failure> {
    let d = decide_180_cover_with(r, pieces, budget)?;
    d.tiling
        .map(|t| (t, Route::Pipeline180))
        .ok_or_else(|| uncoverable(&format!("maximum independent set has {} triangles", d.max_independent)))
}

fn oracle(r: &Region, pieces: PieceSet, budget: u64) -> std::result::Result<(Tiling, Route), Failure> {
    let res = Solver::with_budget(budget).solve(r, pieces)?;
    eprintln!("{} nodes expanded", res.nodes_expanded);
    match res.status {
        SolveStatus::Covered(t) => Ok((t, Route::Oracle)),
        SolveStatus::Uncoverable => Err(uncoverable("exhaustive search found no cover")),
    }
}

fn cmd_tile(
    r: &Region,
    pieces: Pieces,
    strategy: Strategy,
    budget: u64,
    out: Option<&Path>,
    format: Format,
) -> Outcome {
    let set = pieces.set();
    let is_180 = matches!(pieces, Pieces::L180r | Pieces::L180l);
    let (tiling, route) = match strategy {
        Strategy::Oracle => oracle(r, set, budget)?,
        Strategy::Constructive => {
            if is_180 {
                pipeline_180(r, set, budget)?
            } else if let (Pieces::L, Some(found)) = (pieces, aztec_route(r)) {
                found?
            } else {
                return Err(Failure::new(USAGE, "no constructive route applies to this instance"));
            }
        }
        Strategy::Auto => {
            if !r.free_count().is_multiple_of(3) {
                return Err(uncoverable(&format!(
                    "{} free cells is not a multiple of 3",
                    r.free_count()
                )));
            }
            match (pieces, aztec_route(r)) {
                (Pieces::L, Some(found)) => found?,
                _ if is_180 => pipeline_180(r, set, budget)?,
                _ => oracle(r, set, budget)?,
            }
        }
    };
    if let Err(v) = tiling.validate(r) {
        return Err(Failure::new(
            USAGE,
            format!("internal error: produced tiling is invalid: {v}"),
        ));
    }
    eprintln!("covered: {} placements via {}", tiling.len(), route.name());
    if let Some(p) = out {
        emit(Some(p), &(tiling.to_json() + "\n"))?;
    }
    print!("{}", render(r, &tiling, format));
    Ok(())
}

fn cmd_count(r: &Region, pieces: Pieces, budget: u64) -> Outcome {
    let n = Solver::with_budget(budget).count(r, pieces.set())?;
    println!("{n}");
    Ok(())
}

fn cmd_check(r: &Region, checks: &[CheckKind]) -> Outcome {
    for check in checks {
        match check {
            CheckKind::Forbidden => {
                let found = detect_forbidden(r);
                if found.is_empty() {
                    println!("forbidden: none");
                } else {
                    println!("forbidden: {} occurrence(s)", found.len());
                    for occ in found {
                        let cells: Vec<String> = occ.cells.iter().map(|c| c.to_string()).collect();
                        println!("  class {} via {}: {}", occ.class_id, occ.transform, cells.join(" "));
                    }
                }
            }
            CheckKind::Claw => {
                let ig = IntersectionGraph::from_region(r);
                match find_claw(&ig.graph) {
                    None => println!("claw: none"),
                    Some(c) => {
                        let leaves: Vec<String> = c.leaves.iter().map(|&i| ig.triangles[i].to_string()).collect();
                        println!("claw: center {} leaves {}", ig.triangles[c.center], leaves.join(" "));
                    }
                }
            }
            CheckKind::Detachable => {
                if is_detachable(r)? {
                    let cut = find_detaching_cut(&AdjacencyGraph::from_region(r)?)?;
                    let edges: Vec<String> = cut.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                    println!(
                        "detachable: yes, parts of {} and {} cells, cut {}",
                        cut.parts[0].len(),
                        cut.parts[1].len(),
                        edges.join(" ")
                    );
                } else {
                    println!("detachable: no");
                }
            }
        }
    }
    Ok(())
}

fn cmd_boxplus(r: &Region, out: Option<&Path>, region_out: Option<&Path>, show: bool, format: Format) -> Outcome {
    if !r.len().is_multiple_of(3) {
        return Err(uncoverable(&format!("{} cells is not a multiple of 3", r.len())));
    }
    let t = tile_boxplus(r)?;
    let sub = r.subdivide_boxplus();
    if show {
        print!("{}", decompose(r)?.to_text());
    }
    if let Some(p) = region_out {
        emit(Some(p), &sub.to_text())?;
    }
    if let Some(p) = out {
        emit(Some(p), &(t.to_json() + "\n"))?;
    }
    eprintln!("covered: {} placements on {} cells", t.len(), sub.len());
    print!("{}", render(&sub, &t, format));
    Ok(())
}
