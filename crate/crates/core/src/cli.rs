//! Command-line front end used by the `regularize` binary.
//!
//! Exit codes: 0 success or predicate true, 1 predicate false (the graph is
//! not in the requested class), 2 input error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num::{BigRational, One, Signed, Zero};

use crate::analysis::{vulnerability, VULNERABILITY_MAX_N};
use crate::classify::{classify_graph, is_regular, regular_degree, Category};
use crate::graph::{int, satisfies_system, verify_assignment, Graph, WeightAssignment};
use crate::io::{
    export_dot, export_lp, parse_graph, parse_witness, verdict_json, write_witness, Timings, WitnessClass, WitnessFile,
};
use crate::synth::{kernel_witness, synth_arbitrary, synth_nonnegative, synth_positive, SynthError};
use crate::transform::canonical_form;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "regularize", version, about = "Classify graphs by regularizability and build weight witnesses")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report the most specific class, with witness or certificate.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write a witness file for the requested class.
    Weights {
        file: PathBuf,
        #[arg(long, value_enum)]
        class: ClassArg,
    },
    /// Check a witness file against a graph.
    Verify {
        file: PathBuf,
        #[arg(long)]
        witness: PathBuf,
    },
    /// Print the block form given by the alternating-path classes.
    Canonical { file: PathBuf },
    /// Write a nonzero solution of `B w = 0`.
    Kernel { file: PathBuf },
    /// Write the LP feasibility model for a class.
    Lp {
        file: PathBuf,
        #[arg(long, value_enum)]
        class: LpClass,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Vulnerability of an undirected graph.
    Vuln {
        file: PathBuf,
        #[arg(long = "max-n", default_value_t = VULNERABILITY_MAX_N)]
        max_n: usize,
    },
    /// Graphviz rendering, optionally labelled with a witness.
    Dot {
        file: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Regular,
    Positive,
    Nonnegative,
    Arbitrary,
    Best,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LpClass {
    Positive,
    Nonnegative,
    Arbitrary,
}

impl From<LpClass> for Category {
    fn from(c: LpClass) -> Self {
        match c {
            LpClass::Positive => Category::PositivelyRegularizable,
            LpClass::Nonnegative => Category::NonnegativelyRegularizable,
            LpClass::Arbitrary => Category::ArbitrarilyRegularizable,
        }
    }
}

/// Error carrying the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

fn predicate_false(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_FALSE,
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn load_witness(path: &Path, g: &Graph) -> Result<WitnessFile, Failure> {
    let w = parse_witness(&read(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    if !w.matches_graph(g) {
        return Err(input_error(format!(
            "{}: edge list does not match the graph's edge enumeration",
            path.display()
        )));
    }
    Ok(w)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "regularize: {}", f.message);
            f.code
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| input_error(format!("write failed: {e}")))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Classify { file, json } => {
            let t0 = Instant::now();
            let g = load_graph(&file)?;
            let t1 = Instant::now();
            let verdict = classify_graph(&g);
            let timings = Timings {
                parse: (t1 - t0).as_micros() as u64,
                classify: t1.elapsed().as_micros() as u64,
            };
            if json {
                let report = verdict_json(&verdict, timings);
                let text = serde_json::to_string_pretty(&report).expect("verdict serializes");
                emit(out, &format!("{text}\n"))?;
            } else {
                let mut text = format!("category {}\n", verdict.category);
                if let Some(w) = &verdict.witness {
                    text += &write_witness(&WitnessFile::new(
                        WitnessClass::Category(verdict.category),
                        &g,
                        w.clone(),
                    ));
                }
                if let Some(c) = &verdict.certificate {
                    text += &format!("certificate {c}\n");
                }
                if let Some(r) = &verdict.solve_report {
                    text += &format!("det {}\n", r.det_magnitude);
                }
                emit(out, &text)?;
            }
            Ok(EXIT_OK)
        }
        Command::Weights { file, class } => {
            let g = load_graph(&file)?;
            let (category, w) = weights_for(&g, class)?;
            emit(out, &write_witness(&WitnessFile::new(WitnessClass::Category(category), &g, w)))?;
            Ok(EXIT_OK)
        }
        Command::Verify { file, witness } => {
            let g = load_graph(&file)?;
            let wf = load_witness(&witness, &g)?;
            let w = &wf.assignment;
            let solves = match wf.class {
                WitnessClass::Kernel => satisfies_system(&g, w).map(|ok| ok && w.degree.is_zero() && !w.is_zero()),
                WitnessClass::Category(_) => verify_assignment(&g, w),
            }
            .map_err(|e| input_error(e.to_string()))?;
            if !solves {
                emit(out, "invalid: B w = r e does not hold with the required r and w != 0\n")?;
                return Ok(EXIT_FALSE);
            }
            if let Some(reason) = sign_violation(&g, wf.class, w) {
                emit(out, &format!("invalid: {reason}\n"))?;
                return Ok(EXIT_FALSE);
            }
            emit(out, &format!("valid {} witness, degree {}\n", wf.class, w.degree))?;
            Ok(EXIT_OK)
        }
        Command::Canonical { file } => {
            let g = load_graph(&file)?;
            let form = canonical_form(&g).map_err(|e| predicate_false(e.to_string()))?;
            emit(out, &form.to_string())?;
            Ok(if form.all_square() { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Kernel { file } => {
            let g = load_graph(&file)?;
            let w = kernel_witness(&g).map_err(|e| match e {
                SynthError::ArbitrarilyRegularizable | SynthError::AcyclicOnlyTrivial => predicate_false(e.to_string()),
                other => input_error(other.to_string()),
            })?;
            emit(out, &write_witness(&WitnessFile::new(WitnessClass::Kernel, &g, w)))?;
            Ok(EXIT_OK)
        }
        Command::Lp { file, class, output } => {
            let g = load_graph(&file)?;
            let text = export_lp(&g, class.into());
            match output {
                Some(path) => fs::write(&path, text).map_err(|e| input_error(format!("{}: {e}", path.display())))?,
                None => emit(out, &text)?,
            }
            Ok(EXIT_OK)
        }
        Command::Vuln { file, max_n } => {
            let g = load_graph(&file)?;
            let report = vulnerability(&g, max_n).map_err(|e| input_error(e.to_string()))?;
            let one_based = |v: &[usize]| v.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ");
            emit(
                out,
                &format!(
                    "vulnerability {}\nset {}\nneighbourhood {}\n",
                    report.value,
                    one_based(&report.witness),
                    one_based(&report.neighborhood)
                ),
            )?;
            Ok(EXIT_OK)
        }
        Command::Dot { file, witness } => {
            let g = load_graph(&file)?;
            let w = match witness {
                Some(path) => Some(load_witness(&path, &g)?.assignment),
                None => None,
            };
            let text = export_dot(&g, w.as_ref()).map_err(|e| input_error(e.to_string()))?;
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
    }
}

fn weights_for(g: &Graph, class: ClassArg) -> Result<(Category, WeightAssignment), Failure> {
    let not_in = |c: Category| predicate_false(format!("graph is not {c}"));
    match class {
        ClassArg::Regular => {
            let r = regular_degree(g).ok_or_else(|| not_in(Category::Regular))?;
            Ok((
                Category::Regular,
                WeightAssignment::uniform(g.edge_count(), BigRational::one(), int(r as i64)),
            ))
        }
        ClassArg::Positive => synth_positive(g)
            .map(|w| (Category::PositivelyRegularizable, w))
            .map_err(|_| not_in(Category::PositivelyRegularizable)),
        ClassArg::Nonnegative => synth_nonnegative(g)
            .map(|w| (Category::NonnegativelyRegularizable, w.normalized()))
            .map_err(|_| not_in(Category::NonnegativelyRegularizable)),
        ClassArg::Arbitrary => synth_arbitrary(g)
            .map(|(w, _)| (Category::ArbitrarilyRegularizable, w))
            .map_err(|_| not_in(Category::ArbitrarilyRegularizable)),
        ClassArg::Best => {
            let v = classify_graph(g);
            match v.witness {
                Some(w) => Ok((v.category, w)),
                None => Err(predicate_false(format!(
                    "graph is not regularizable: {}",
                    v.certificate.map(|c| c.to_string()).unwrap_or_default()
                ))),
            }
        }
    }
}

/// Reason the weights break the sign pattern of the claimed class.
fn sign_violation(g: &Graph, class: WitnessClass, w: &WeightAssignment) -> Option<String> {
    match class {
        WitnessClass::Category(Category::Regular) => {
            if !is_regular(g) {
                Some("graph is not regular".into())
            } else if w.weights.windows(2).any(|p| p[0] != p[1]) {
                Some("regular witness must be constant".into())
            } else {
                None
            }
        }
        WitnessClass::Category(Category::PositivelyRegularizable) => {
            (!w.all_positive()).then(|| "positive witness has a weight <= 0".into())
        }
        WitnessClass::Category(Category::NonnegativelyRegularizable) => {
            w.weights.iter().any(Signed::is_negative).then(|| "nonnegative witness has a negative weight".into())
        }
        WitnessClass::Category(Category::NotRegularizable) => {
            Some("class `none` has no witness".into())
        }
        WitnessClass::Category(Category::ArbitrarilyRegularizable) | WitnessClass::Kernel => None,
    }
}
