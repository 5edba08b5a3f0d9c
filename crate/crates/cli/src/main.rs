use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qpc::bound::{counting_bound, exponent_threshold};
use qpc::error::Error;
use qpc::family::{family_lambdas, run_family, FamilyCount, LambdaSource};
use qpc::field::Field;
use qpc::format::{lambda_from_digits, QpcFile};
use qpc::geometry::AffineSpace;
use qpc::grm::{build_grm, build_target_code, grm_dimension, grm_min_distance, target_order};
use qpc::linalg::FqMatrix;
use qpc::switching::{apply_switch, SwitchingFrame};
use qpc::verify::{
    covering_radius_exhaustive, is_linear, is_translate_linear, min_distance_exhaustive, Budgets,
    CodeReport,
};
use qpc::words::CodeWords;

const EXIT_FAILED: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_MALFORMED: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "qpc",
    version,
    about = "Build, switch and verify q-ary quasi-perfect codes"
)]
struct Cli {
    #[command(flatten)]
    run: RunArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Worker threads for parallel scans (0 = one per core).
    #[arg(long, global = true, env = "QPC_WORKERS", default_value_t = 0)]
    workers: usize,
    /// Cap on codeword pairs examined by pair scans.
    #[arg(long, global = true, default_value_t = Budgets::default().pairs)]
    budget_pairs: u64,
    /// Cap on distance evaluations in ambient-space scans.
    #[arg(long, global = true, default_value_t = Budgets::default().ambient)]
    budget_ambient: u64,
    /// Cap on syndrome-table entries.
    #[arg(long, global = true, default_value_t = Budgets::default().leader)]
    budget_leader: usize,
    /// Cap on enumerated codewords.
    #[arg(long, global = true, default_value_t = Budgets::default().enumeration)]
    budget_enumeration: u64,
}

impl RunArgs {
    fn budgets(&self) -> Budgets {
        Budgets {
            pairs: self.budget_pairs,
            ambient: self.budget_ambient,
            leader: self.budget_leader,
            enumeration: self.budget_enumeration,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the generator of RM_q(r, m); r defaults to (q-1)m-2.
    Build {
        q: usize,
        m: usize,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Switch a linear code file around a coordinate.
    Switch {
        input: PathBuf,
        /// 0-based coordinate.
        #[arg(long)]
        coord: usize,
        /// Explicit digits, `random`, or `single:t,lambda`.
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report the parameters of a code file and check them.
    Verify {
        input: PathBuf,
        /// Cross-check against brute-force scans.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a batch of switch vectors for one coordinate.
    Family {
        q: usize,
        m: usize,
        coord: usize,
        /// Number of codes, or `all`.
        count: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Enumerate switch vectors from the zero vector instead of sampling.
        #[arg(long)]
        sequential: bool,
        /// Per-code table destination.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the counting bound on nonequivalent switched codes.
    Bound {
        q: u64,
        m: u32,
        /// Also report the smallest m where the bound exceeds q^((1/q - eps) n).
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long, default_value_t = 8)]
        max_m: u32,
    },
    /// Write a matrix or the codeword list of a code file.
    Export {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ExportKind::Generator)]
        what: ExportKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Wrap a plain generator matrix into a linear code file.
    Import {
        input: PathBuf,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExportKind {
    Generator,
    Parity,
    Words,
}

enum Failure {
    Core(Error),
    Io(String),
    Claims,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.run.workers)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_MALFORMED);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Claims) => ExitCode::from(EXIT_FAILED),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_MALFORMED)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Consistency(_) => EXIT_FAILED,
        _ => EXIT_MALFORMED,
    }
}

fn run(cli: &Cli) -> CmdResult {
    let budgets = cli.run.budgets();
    match &cli.command {
        Command::Build { q, m, order, out } => cmd_build(*q, *m, *order, out.as_deref()),
        Command::Switch {
            input,
            coord,
            lambda,
            seed,
            out,
        } => cmd_switch(input, *coord, lambda, *seed, out.as_deref(), &budgets),
        Command::Verify {
            input,
            exhaustive,
            out,
        } => cmd_verify(input, *exhaustive, out.as_deref(), &budgets),
        Command::Family {
            q,
            m,
            coord,
            count,
            seed,
            sequential,
            out,
        } => cmd_family(
            *q,
            *m,
            *coord,
            count,
            *seed,
            *sequential,
            out.as_deref(),
            &budgets,
        ),
        Command::Bound {
            q,
            m,
            epsilon,
            max_m,
        } => cmd_bound(*q, *m, *epsilon, *max_m),
        Command::Export { input, what, out } => cmd_export(input, *what, out.as_deref(), &budgets),
        Command::Import { input, q, m, out } => cmd_import(input, *q, *m, out.as_deref()),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

/// Writes `text` to `out`, or to stdout when no path is given.
fn emit(out: Option<&Path>, text: &str) -> CmdResult {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn space_for(q: usize, m: usize) -> Result<AffineSpace, Error> {
    AffineSpace::new(&Field::with_order(q)?, m)
}

fn cmd_build(q: usize, m: usize, order: Option<usize>, out: Option<&Path>) -> CmdResult {
    let space = space_for(q, m)?;
    let r = match order {
        Some(r) => r,
        None => target_order(q, m)?,
    };
    let code = build_grm(&space, r)?;
    let text = QpcFile::from_linear(&code, m).to_text()?;
    let info = format!(
        "n={} dim={} d={}\n",
        code.n(),
        code.dim(),
        grm_min_distance(q, m, r)?
    );
    match out {
        Some(_) => {
            emit(out, &text)?;
            print!("{info}");
        }
        None => {
            print!("{text}");
            eprint!("{info}");
        }
    }
    Ok(())
}

fn cmd_switch(
    input: &Path,
    coord: usize,
    spec: &str,
    seed: u64,
    out: Option<&Path>,
    budgets: &Budgets,
) -> CmdResult {
    let file = QpcFile::parse(&read(input)?)?;
    let code = file.to_linear_code()?;
    let space = file.space()?;
    if !code.same_code(&build_target_code(&space)?) {
        return Err(Error::InvalidParameter(format!(
            "input is not RM_{}({}, {})",
            space.q(),
            target_order(space.q(), space.m())?,
            space.m()
        ))
        .into());
    }
    let frame = SwitchingFrame::new(&space, coord, budgets.leader)?;
    let lambdas = if spec == "random" {
        family_lambdas(&frame, FamilyCount::Count(1), LambdaSource::Random { seed })?
            .remove(0)
            .1
    } else if let Some(rest) = spec.strip_prefix("single:") {
        let (t, l) = rest
            .split_once(',')
            .ok_or_else(|| Error::InvalidParameter(format!("malformed lambda spec `{spec}`")))?;
        let t: usize = t
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad coset index `{t}`")))?;
        let l: u8 = l
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad shift `{l}`")))?;
        frame.single_lambdas(t, l)?
    } else {
        lambda_from_digits(space.field(), spec)?
    };
    let sw = apply_switch(&frame, lambdas)?;
    emit(out, &QpcFile::from_switched(&sw).to_text()?)
}

/// Parameters the construction promises for the code in `file`, if any.
fn expected_params(file: &QpcFile, report: &CodeReport) -> Result<Option<Expected>, Error> {
    let q = file.field().q();
    let m = file.m();
    let n = report.n;
    match file {
        QpcFile::Switched { .. } => Ok(Some(Expected {
            order: target_order(q, m)?,
            size_exp: n - m - 1,
            d: 3,
            rho: Some(2),
        })),
        QpcFile::Linear { .. } => {
            let code = file.to_linear_code()?;
            let space = file.space()?;
            for r in 0..=(q - 1) * m {
                if grm_dimension(q, m, r)? != code.dim() as u64 {
                    continue;
                }
                if build_grm(&space, r)?.same_code(&code) {
                    let target = q >= 3 && r + 2 == (q - 1) * m;
                    return Ok(Some(Expected {
                        order: r,
                        size_exp: code.dim(),
                        d: grm_min_distance(q, m, r)? as usize,
                        rho: target.then_some(2),
                    }));
                }
            }
            Ok(None)
        }
    }
}

struct Expected {
    order: usize,
    size_exp: usize,
    d: usize,
    rho: Option<usize>,
}

fn cmd_verify(input: &Path, exhaustive: bool, out: Option<&Path>, budgets: &Budgets) -> CmdResult {
    let file = QpcFile::parse(&read(input)?)?;
    let switched = match &file {
        QpcFile::Switched { .. } => Some(file.to_switched(budgets.leader)?),
        QpcFile::Linear { .. } => None,
    };
    let report = match &switched {
        Some(sw) => CodeReport::for_switched(sw, budgets)?,
        None => CodeReport::for_linear(&file.to_linear_code()?, budgets)?,
    };
    let mut text = report.to_text();
    let mut ok = true;
    match expected_params(&file, &report)? {
        Some(exp) => {
            let q = report.q;
            let size = num_bigint::BigUint::from(q).pow(exp.size_exp as u32);
            let _ = writeln!(text, "grm_order={}", exp.order);
            let mut claim = |name: &str, holds: bool| {
                let _ = writeln!(text, "check_{name}={}", if holds { "ok" } else { "FAILED" });
                ok &= holds;
            };
            claim("size", report.size == size);
            claim("d", report.min_distance == exp.d);
            if let Some(rho) = exp.rho {
                claim("rho", report.covering_radius == rho);
                claim("quasi_perfect", report.is_quasi_perfect());
            }
        }
        None => {
            let _ = writeln!(text, "grm_order=none");
        }
    }

    let mut refusal = None;
    if exhaustive {
        match exhaustive_check(&file, switched.as_ref(), budgets) {
            Ok(ex) => {
                let _ = writeln!(text, "exhaustive_d={}", ex.min_distance);
                let _ = writeln!(text, "exhaustive_rho={}", ex.covering_radius);
                let _ = writeln!(text, "exhaustive_linear={}", ex.is_linear);
                let _ = writeln!(
                    text,
                    "exhaustive_translate_linear={}",
                    ex.is_translate_linear
                );
                let agree = ex.min_distance == report.min_distance
                    && ex.covering_radius == report.covering_radius
                    && ex.is_linear == report.is_linear
                    && ex.is_translate_linear == report.is_translate_linear;
                let _ = writeln!(
                    text,
                    "cross_check={}",
                    if agree { "agree" } else { "DISAGREE" }
                );
                ok &= agree;
            }
            Err(e @ Error::BudgetExceeded { .. }) => {
                let _ = writeln!(text, "exhaustive=refused");
                refusal = Some(e);
            }
            Err(e) => return Err(e.into()),
        }
    }
    let status = match (ok, &refusal) {
        (false, _) => "failed",
        (true, Some(_)) => "budget_refused",
        (true, None) => "verified",
    };
    let _ = writeln!(text, "status={status}");
    emit(out, &text)?;
    match (ok, refusal) {
        (false, _) => Err(Failure::Claims),
        (true, Some(e)) => Err(e.into()),
        (true, None) => Ok(()),
    }
}

struct Exhaustive {
    min_distance: usize,
    covering_radius: usize,
    is_linear: bool,
    is_translate_linear: bool,
}

fn exhaustive_check(
    file: &QpcFile,
    switched: Option<&qpc::switching::SwitchedCode>,
    budgets: &Budgets,
) -> Result<Exhaustive, Error> {
    let space = file.space()?;
    let size = match switched {
        Some(sw) => {
            (space.q() as u128).pow(sw.frame().ri().dim() as u32) * sw.frame().coset_count() as u128
        }
        None => (space.q() as u128).pow(file.to_linear_code()?.dim() as u32),
    };
    let ambient = (space.q() as u128)
        .checked_pow(space.n() as u32)
        .unwrap_or(u128::MAX);
    let needed = ambient.saturating_mul(size);
    if needed > budgets.ambient as u128 {
        return Err(Error::BudgetExceeded {
            what: "ambient scan",
            needed,
            cap: budgets.ambient as u128,
        });
    }
    let words = materialize(file, switched, budgets)?;
    Ok(Exhaustive {
        min_distance: min_distance_exhaustive(&words, budgets.pairs)?,
        covering_radius: covering_radius_exhaustive(&words, budgets.ambient)?,
        is_linear: is_linear(&words),
        is_translate_linear: is_translate_linear(&words),
    })
}

fn materialize(
    file: &QpcFile,
    switched: Option<&qpc::switching::SwitchedCode>,
    budgets: &Budgets,
) -> Result<CodeWords, Error> {
    match switched {
        Some(sw) => sw.materialize(budgets.enumeration),
        None => file.to_linear_code()?.codewords(budgets.enumeration),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_family(
    q: usize,
    m: usize,
    coord: usize,
    count: &str,
    seed: u64,
    sequential: bool,
    out: Option<&Path>,
    budgets: &Budgets,
) -> CmdResult {
    let count = if count == "all" {
        FamilyCount::All
    } else {
        FamilyCount::Count(
            count
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("count `{count}` is not a number")))?,
        )
    };
    let source = if sequential {
        LambdaSource::Sequential
    } else {
        LambdaSource::Random { seed }
    };
    let space = space_for(q, m)?;
    let frame = SwitchingFrame::new(&space, coord, budgets.leader)?;
    let lambdas = family_lambdas(&frame, count, source)?;
    let summary = run_family(&frame, lambdas, budgets)?;
    let table = summary.table_text()?;
    let text = summary.summary_text();
    match out {
        Some(_) => {
            emit(out, &table)?;
            print!("{text}");
        }
        None => print!("{table}{text}"),
    }
    let all_good = summary
        .rows
        .iter()
        .all(|r| r.min_distance == 3 && r.covering_radius == 2)
        && summary.distinct_codes == summary.distinct_lambdas;
    if all_good {
        Ok(())
    } else {
        Err(Failure::Claims)
    }
}

fn cmd_bound(q: u64, m: u32, epsilon: Option<f64>, max_m: u32) -> CmdResult {
    let b = counting_bound(q, m)?;
    let mut text = b.to_text();
    if let Some(eps) = epsilon {
        let threshold = exponent_threshold(q, eps, max_m)?;
        let _ = writeln!(
            text,
            "threshold_m={}",
            threshold.map_or_else(|| "none".to_string(), |t| t.to_string())
        );
    }
    print!("{text}");
    Ok(())
}

fn cmd_export(input: &Path, what: ExportKind, out: Option<&Path>, budgets: &Budgets) -> CmdResult {
    let file = QpcFile::parse(&read(input)?)?;
    let switched = match &file {
        QpcFile::Switched { .. } => Some(file.to_switched(budgets.leader)?),
        QpcFile::Linear { .. } => None,
    };
    let text = match (what, &switched) {
        (ExportKind::Words, _) => {
            let words = materialize(&file, switched.as_ref(), budgets)?;
            let mut s = String::new();
            for w in words.iter() {
                let row: Vec<String> = w.iter().map(u8::to_string).collect();
                s.push_str(&row.join(" "));
                s.push('\n');
            }
            s
        }
        (ExportKind::Generator, None) => file.to_linear_code()?.generator().to_text(),
        (ExportKind::Parity, None) => file.to_linear_code()?.parity().to_text(),
        (ExportKind::Generator, Some(sw)) => sw.frame().ri().basis().to_text(),
        (ExportKind::Parity, Some(sw)) => sw.frame().ri().parity().to_text(),
    };
    emit(out, &text)
}

fn cmd_import(input: &Path, q: usize, m: usize, out: Option<&Path>) -> CmdResult {
    let space = space_for(q, m)?;
    let matrix = FqMatrix::from_text(space.field(), &read(input)?)?;
    if matrix.rows() > 0 && matrix.cols() != space.n() {
        return Err(Error::LengthMismatch {
            expected: space.n(),
            got: matrix.cols(),
        }
        .into());
    }
    let code = qpc::grm::LinearCode::from_generator(&matrix)?;
    emit(out, &QpcFile::from_linear(&code, m).to_text()?)
}
