//! Command-line surface.
//!
//! Exit codes: 0 success, 1 a property check failed, 2 bad input or usage.

pub mod format;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::cells::{enumerate_cells, maximal_upper_adjacent_pairs};
use crate::census::store::write_corpus;
use crate::census::{build_corpus, exhaustive_crosscheck, Predicates};
use crate::error::LatticeError;
use crate::expansion::{decompose, full_expansion_with, one_step_expansion_with};
use crate::grid::recognize_grid_minus_corners;
use crate::lattice::LatticeDiagram;
use crate::slimming::{add_eye, slim};

pub use format::{emit_dot, emit_lattice, parse_lattice, parse_raw, ParseError, ParsedRaw};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "planarlat", version, about = "Planar semimodular lattice diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the predicate vector.
    Check {
        file: PathBuf,
        /// Comma-separated predicates that must hold, e.g. `semimodular,slim`.
        #[arg(long, value_delimiter = ',')]
        require: Vec<String>,
    },
    /// Remove all eyes; the removed eyes are listed as comments.
    Slim { file: PathBuf },
    /// Insert an eye into a 4-cell, numbered as listed by `decompose --cells`.
    AddEye {
        file: PathBuf,
        #[arg(long)]
        cell: usize,
        #[arg(long, default_value_t = 0)]
        position: usize,
    },
    /// Expand until distributive; prints the trace and the final lattice.
    Expand {
        file: PathBuf,
        /// Which maximal pair to expand at in every step.
        #[arg(long, default_value_t = 0)]
        seed_order: usize,
        /// Stop after this many steps.
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Show the interval decomposition at a maximal pair.
    Decompose {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed_order: usize,
        /// List all cells as well.
        #[arg(long)]
        cells: bool,
    },
    /// Recognize a distributive diagram as a grid minus two corners.
    Recognize { file: PathBuf },
    /// Build the constructive corpus and write it to a directory.
    Corpus {
        #[arg(long, default_value_t = crate::census::DEFAULT_MAX_ELEMENTS)]
        max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the corpus with brute-force enumeration.
    Crosscheck {
        #[arg(long, default_value_t = 7)]
        n: usize,
        /// Write the report as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit DOT.
    Export {
        file: PathBuf,
        /// Draw the one-step expansion, grouping each kernel class.
        #[arg(long)]
        expand: bool,
        #[arg(long, default_value_t = 0)]
        seed_order: usize,
    },
}

enum Failure {
    Input(String),
    Property(String),
}

impl From<LatticeError> for Failure {
    fn from(e: LatticeError) -> Failure {
        match e {
            LatticeError::BoundExceeded(_) | LatticeError::SearchTooLarge { .. } => Failure::Input(e.to_string()),
            _ => Failure::Property(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Input(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_INPUT
        }
        Err(Failure::Property(m)) => {
            let _ = writeln!(err, "failed: {m}");
            EXIT_PROPERTY
        }
    }
}

fn load(path: &Path) -> std::result::Result<LatticeDiagram, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_lattice(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn names(d: &LatticeDiagram, xs: &[usize]) -> String {
    xs.iter().map(|&x| d.name(x)).collect::<Vec<_>>().join(",")
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Check { file, require } => {
            let d = load(&file)?;
            let p = Predicates::of(&d);
            writeln!(out, "{}", p.line())?;
            for r in &require {
                let holds = match r.as_str() {
                    "planar" => p.planar,
                    "semimodular" => p.semimodular,
                    "modular" => p.modular,
                    "distributive" => p.distributive,
                    "slim" => p.slim,
                    "4cell" => p.four_cell,
                    other => return Err(Failure::Input(format!("unknown predicate `{other}`"))),
                };
                if !holds {
                    return Err(Failure::Property(format!("{r} does not hold")));
                }
            }
        }
        Command::Slim { file } => {
            let d = load(&file)?;
            let (s, eyes) = slim(&d);
            for e in &eyes {
                let c = &e.host;
                writeln!(
                    out,
                    "# eye {} in cell {{{},{},{},{}}} at position {}",
                    e.removed, c.bottom, c.left[1], c.right[1], c.top, e.position
                )?;
            }
            write!(out, "{}", emit_lattice(&s))?;
        }
        Command::AddEye { file, cell, position } => {
            let d = load(&file)?;
            let cells = enumerate_cells(&d);
            let c = cells
                .get(cell)
                .ok_or_else(|| Failure::Input(format!("cell {cell} out of range ({} cells)", cells.len())))?;
            let e = add_eye(&d, c, position).map_err(|e| Failure::Input(e.to_string()))?;
            write!(out, "{}", emit_lattice(&e))?;
        }
        Command::Expand {
            file,
            seed_order,
            steps,
        } => {
            let d = load(&file)?;
            let final_d = match steps {
                Some(k) => {
                    let mut cur = d;
                    for step in 0..k {
                        let e = one_step_expansion_with(&cur, seed_order)?;
                        write_step(out, step, &cur, &e)?;
                        cur = (*e.base).clone();
                    }
                    cur
                }
                None => {
                    let f = full_expansion_with(&d, seed_order)?;
                    let mut cur = d;
                    for (step, e) in f.steps.iter().enumerate() {
                        write_step(out, step, &cur, e)?;
                        cur = (*e.base).clone();
                    }
                    writeln!(out, "# phi: {:?}", f.phi.table())?;
                    (*f.distributive).clone()
                }
            };
            writeln!(out, "# final: {} elements", final_d.len())?;
            match recognize_grid_minus_corners(&final_d) {
                Ok(g) => writeln!(
                    out,
                    "# recognized: {}x{} grid, left corner {:?}, right corner {:?}",
                    g.m, g.n, g.left_corner, g.right_corner
                )?,
                Err(e) => writeln!(out, "# not recognized: {e}")?,
            }
            write!(out, "{}", emit_lattice(&final_d))?;
        }
        Command::Decompose {
            file,
            seed_order,
            cells,
        } => {
            let d = load(&file)?;
            if cells {
                for (k, c) in enumerate_cells(&d).iter().enumerate() {
                    writeln!(
                        out,
                        "cell {k}: left={} right={}",
                        names(&d, &c.left),
                        names(&d, &c.right)
                    )?;
                }
            }
            let pairs = maximal_upper_adjacent_pairs(&d);
            if pairs.is_empty() {
                return Err(LatticeError::AlreadyModular.into());
            }
            let p = &pairs[seed_order % pairs.len()];
            let ctx = decompose(&d, p)?;
            let n = |x: usize| d.name(x);
            writeln!(out, "pair: top={} u={} v={} w={}", n(p.top), n(p.u), n(p.v), n(p.w))?;
            writeln!(out, "C: {}", names(&d, &ctx.c.chain))?;
            writeln!(out, "D: {}", names(&d, &ctx.d.chain))?;
            writeln!(
                out,
                "anchors: v+={} c+={} w+={} d+={}",
                n(ctx.v_plus),
                n(ctx.c_plus),
                n(ctx.w_plus),
                n(ctx.d_plus)
            )?;
            for (name, block) in [("T", &ctx.t), ("B", &ctx.b), ("I", &ctx.i), ("J", &ctx.j)] {
                writeln!(out, "{name}: {}", names(&d, block))?;
            }
            for (name, bridges) in [("I-bridges", &ctx.i_bridges), ("J-bridges", &ctx.j_bridges)] {
                let s: Vec<String> = bridges.iter().map(|&(x, y)| format!("{}<{}", n(x), n(y))).collect();
                writeln!(out, "{name}: {}", s.join(" "))?;
            }
        }
        Command::Recognize { file } => {
            let d = load(&file)?;
            let g = recognize_grid_minus_corners(&d)?;
            writeln!(out, "grid: {}x{}", g.m, g.n)?;
            writeln!(out, "left corner: {:?}", g.left_corner)?;
            writeln!(out, "right corner: {:?}", g.right_corner)?;
        }
        Command::Corpus { max, out: dir } => {
            let corpus = build_corpus(max)?;
            writeln!(out, "size total slim")?;
            for k in 1..=max {
                let at: Vec<_> = corpus.entries.iter().filter(|e| e.diagram.len() == k).collect();
                let slim = at.iter().filter(|e| e.predicates.slim).count();
                writeln!(out, "{k:>4} {:>5} {:>4}", at.len(), slim)?;
            }
            if let Some(dir) = dir {
                write_corpus(&dir, &corpus)?;
                writeln!(out, "wrote {} entries to {}", corpus.entries.len(), dir.display())?;
            }
        }
        Command::Crosscheck { n, out: path } => {
            let report = exhaustive_crosscheck(n)?;
            write!(out, "{}", report.table())?;
            if let Some(path) = path {
                let json = serde_json::to_string_pretty(&report).map_err(|e| Failure::Input(e.to_string()))?;
                fs::write(path, json + "\n")?;
            }
            if !report.matches() {
                return Err(Failure::Property("corpus and enumeration disagree".into()));
            }
        }
        Command::Export {
            file,
            expand,
            seed_order,
        } => {
            let d = load(&file)?;
            if expand {
                let e = one_step_expansion_with(&d, seed_order)?;
                let groups: Vec<Vec<usize>> = e
                    .projection
                    .kernel_classes()
                    .into_iter()
                    .filter(|c| c.len() > 1)
                    .collect();
                write!(out, "{}", emit_dot(&e.base, &groups))?;
            } else {
                write!(out, "{}", emit_dot(&d, &[]))?;
            }
        }
    }
    Ok(())
}

fn write_step(
    out: &mut dyn Write,
    step: usize,
    before: &LatticeDiagram,
    e: &crate::expansion::ExpandedLattice,
) -> std::io::Result<()> {
    let p = &e.context.pair;
    let classes: Vec<usize> = e
        .projection
        .kernel_classes()
        .iter()
        .map(Vec::len)
        .filter(|&k| k > 1)
        .collect();
    writeln!(
        out,
        "# step {step}: pair top={} u={}, {} -> {} elements, kernel classes {:?}, collapsed covers {}",
        before.name(p.top),
        before.name(p.u),
        before.len(),
        e.base.len(),
        classes,
        e.projection.collapsed_covers().len()
    )
}
