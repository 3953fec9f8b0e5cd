//! Command-line front end for gidkit.
//!
//! Every command reads JSON, computes or checks a generalized inverse and
//! emits `{"result": …, "index": …, "report": …}`. A computed inverse is
//! always re-verified before it is written.
//!
//! Exit codes: `0` success, `2` the requested inverse does not exist or a
//! candidate failed verification, `1` any input or internal error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use gidkit::json::{self, JsonScalar};
use gidkit::verifier::{default_k_max, verify_dagger_drazin_in, verify_drazin_in};
use gidkit::{
    dagger_drazin, dagger_drazin_pinj, dagger_group_inverse, drazin_endo_pinj, drazin_index,
    drazin_inverse, moore_penrose, opposing_drazin, verify_dagger_drazin, verify_dagger_group,
    verify_drazin, verify_group, verify_mp, verify_opposing, DaggerMode, DynMatrix, Error, Field,
    FieldKind, Matrix, MoorePenroseResult, OpposingPair, PartialInjection, PinjCategory,
    VerificationReport,
};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "gidkit",
    version,
    about = "Exact Drazin, group, dagger-Drazin and Moore-Penrose inverses"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Drazin inverse of a square matrix.
    Drazin(Compute),
    /// Group inverse of a square matrix (exit 2 if the Drazin index exceeds 1).
    Group(Compute),
    /// Dagger-Drazin inverse of any matrix.
    DaggerDrazin(Compute),
    /// Dagger-group inverse (exit 2 if the dagger-Drazin index exceeds 1).
    DaggerGroup(Compute),
    /// Moore-Penrose inverse (exit 2 if it does not exist for the chosen dagger).
    Mp(Compute),
    /// Drazin inverse of an opposing pair `{"fwd": A, "bwd": B}`.
    Opposing(Compute),
    /// Drazin inverse of a partial injection on a finite set.
    PinjDrazin(Compute),
    /// Dagger-Drazin inverse (the converse) of a partial injection.
    PinjDaggerDrazin(Compute),
    /// Check a candidate inverse (exit 2 if it fails).
    Verify(Verify),
    /// Drazin or dagger-Drazin index.
    Index(Index),
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Field to compute over; the input is converted losslessly.
    #[arg(long, value_enum, ignore_case = true)]
    pub field: Option<FieldArg>,
    #[arg(long, value_enum, default_value_t = DaggerArg::Transpose)]
    pub dagger: DaggerArg,
    /// Largest power searched when verifying the index axiom.
    #[arg(long, env = "GIDKIT_KMAX")]
    pub k_max: Option<usize>,
    /// Write the JSON output here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct Compute {
    /// Input JSON file, or `-` for stdin.
    pub input: PathBuf,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Args, Debug)]
pub struct Verify {
    #[arg(long, value_enum)]
    pub kind: Kind,
    pub input: PathBuf,
    /// Candidate inverse; a previous gidkit output is accepted as is.
    pub candidate: PathBuf,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Args, Debug)]
pub struct Index {
    #[arg(long, value_enum)]
    pub kind: IndexKind,
    pub input: PathBuf,
    #[command(flatten)]
    pub options: Options,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Drazin,
    Group,
    DaggerDrazin,
    DaggerGroup,
    Mp,
    Opposing,
    PinjDrazin,
    PinjDaggerDrazin,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexKind {
    Drazin,
    Dagger,
    Opposing,
    PinjDrazin,
    PinjDagger,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldArg {
    #[value(name = "Q")]
    Q,
    #[value(name = "Qi")]
    Qi,
    #[value(name = "C64")]
    C64,
}

impl From<FieldArg> for FieldKind {
    fn from(f: FieldArg) -> Self {
        match f {
            FieldArg::Q => FieldKind::Q,
            FieldArg::Qi => FieldKind::Qi,
            FieldArg::C64 => FieldKind::C64,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum DaggerArg {
    Transpose,
    ConjugateTranspose,
}

impl From<DaggerArg> for DaggerMode {
    fn from(d: DaggerArg) -> Self {
        match d {
            DaggerArg::Transpose => DaggerMode::Transpose,
            DaggerArg::ConjugateTranspose => DaggerMode::ConjugateTranspose,
        }
    }
}

/// What one invocation produced.
#[derive(Debug)]
pub struct Outcome {
    pub exit_code: u8,
    pub document: Option<Value>,
    pub message: Option<String>,
}

impl Outcome {
    fn failure(message: String) -> Self {
        Outcome {
            exit_code: 1,
            document: None,
            message: Some(message),
        }
    }
}

enum Status {
    /// A computed inverse; it must pass its own report.
    Computed,
    /// The requested inverse does not exist; the report shows why.
    Nonexistent,
    /// A user-supplied candidate, judged by the report.
    Checked,
}

struct Answer {
    result: Value,
    index: Option<usize>,
    report: VerificationReport,
    warnings: Vec<String>,
    status: Status,
}

impl Answer {
    fn computed(
        result: Value,
        index: usize,
        report: VerificationReport,
        warnings: Vec<String>,
    ) -> Self {
        Answer {
            result,
            index: Some(index),
            report,
            warnings,
            status: Status::Computed,
        }
    }

    fn nonexistent(index: Option<usize>, report: VerificationReport) -> Self {
        Answer {
            result: Value::Null,
            index,
            report,
            warnings: Vec::new(),
            status: Status::Nonexistent,
        }
    }

    fn into_outcome(self) -> Outcome {
        let mut report = self.report;
        report.warnings.extend(self.warnings);
        let passed = report.passed();
        let document = |report: &VerificationReport| json!({ "result": self.result, "index": self.index, "report": report });
        match self.status {
            Status::Computed if passed => Outcome {
                exit_code: 0,
                document: Some(document(&report)),
                message: None,
            },
            Status::Computed => Outcome::failure(format!(
                "computed inverse failed verification (axioms {:?}); report: {}",
                report.failed(),
                json::to_string_pretty(&report)
            )),
            Status::Nonexistent => Outcome {
                exit_code: 2,
                document: Some(document(&report)),
                message: Some("the requested inverse does not exist".into()),
            },
            Status::Checked => Outcome {
                exit_code: if passed { 0 } else { 2 },
                document: Some(document(&report)),
                message: (!passed).then(|| format!("candidate fails axioms {:?}", report.failed())),
            },
        }
    }
}

fn value_of<V: serde::Serialize>(v: &V) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

fn read_json(path: &Path) -> gidkit::Result<Value> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
    };
    json::from_str(&text)
}

/// A previous gidkit output stands for its `result`.
fn candidate_value(v: Value) -> Value {
    match v {
        Value::Object(mut map) if map.contains_key("result") && map.contains_key("report") => {
            map.remove("result").unwrap_or(Value::Null)
        }
        other => other,
    }
}

fn parse<V: serde::de::DeserializeOwned>(v: Value, what: &str) -> gidkit::Result<V> {
    serde_json::from_value(v).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn level(k: FieldKind) -> u8 {
    match k {
        FieldKind::Q => 0,
        FieldKind::Qi => 1,
        FieldKind::C64 => 2,
    }
}

/// The field to compute over: the explicit choice, else the richest input.
fn target_field(options: &Options, inputs: &[&DynMatrix]) -> FieldKind {
    options.field.map(FieldKind::from).unwrap_or_else(|| {
        inputs
            .iter()
            .map(|m| m.kind())
            .max_by_key(|&k| level(k))
            .unwrap_or(FieldKind::Q)
    })
}

fn prepare(options: &Options, inputs: Vec<DynMatrix>) -> gidkit::Result<Vec<DynMatrix>> {
    let target = target_field(options, &inputs.iter().collect::<Vec<_>>());
    if options.dagger == DaggerArg::ConjugateTranspose && target == FieldKind::Q {
        return Err(Error::Parse(
            "the conjugate-transpose dagger requires field Qi or C64 (pass --field Qi)".into(),
        ));
    }
    inputs.into_iter().map(|m| m.promote(target)).collect()
}

fn reject_field(options: &Options) -> gidkit::Result<()> {
    match options.field {
        Some(_) => Err(Error::Parse(
            "--field does not apply to partial injections".into(),
        )),
        None => Ok(()),
    }
}

macro_rules! with_matrix {
    ($m:expr, |$x:ident| $body:expr) => {
        match $m {
            DynMatrix::Q($x) => $body,
            DynMatrix::Qi($x) => $body,
            DynMatrix::C64($x) => $body,
        }
    };
}

macro_rules! with_matrices {
    ($a:expr, $b:expr, |$x:ident, $y:ident| $body:expr) => {
        match ($a, $b) {
            (DynMatrix::Q($x), DynMatrix::Q($y)) => $body,
            (DynMatrix::Qi($x), DynMatrix::Qi($y)) => $body,
            (DynMatrix::C64($x), DynMatrix::C64($y)) => $body,
            _ => unreachable!("inputs were promoted to one field"),
        }
    };
}

fn one_matrix(options: &Options, v: Value) -> gidkit::Result<DynMatrix> {
    let m = parse(v, "matrix")?;
    Ok(prepare(options, vec![m])?.remove(0))
}

fn two_matrices(options: &Options, a: Value, b: Value) -> gidkit::Result<(DynMatrix, DynMatrix)> {
    let mut ms = prepare(options, vec![parse(a, "matrix")?, parse(b, "matrix")?])?;
    let b = ms.pop().unwrap();
    Ok((ms.pop().unwrap(), b))
}

fn pair_values(v: Value) -> gidkit::Result<(Value, Value)> {
    let p: OpposingPair<Value> = parse(v, "opposing pair")?;
    Ok((p.fwd, p.bwd))
}

fn compute_matrix<T: Field + JsonScalar>(
    kind: Kind,
    f: &Matrix<T>,
    mode: DaggerMode,
    k_max: Option<usize>,
) -> gidkit::Result<Answer> {
    let k_max = k_max.unwrap_or_else(|| default_k_max(f));
    Ok(match kind {
        Kind::Drazin => {
            let r = drazin_inverse(f)?;
            let report = verify_drazin(f, &r.inverse, k_max)?;
            Answer::computed(value_of(&r.inverse), r.index, report, r.warnings)
        }
        Kind::Group => {
            let r = drazin_inverse(f)?;
            let report = verify_group(f, &r.inverse)?;
            if r.index <= 1 {
                Answer::computed(value_of(&r.inverse), r.index, report, r.warnings)
            } else {
                Answer::nonexistent(Some(r.index), report)
            }
        }
        Kind::DaggerDrazin => {
            let r = dagger_drazin(f, mode)?;
            let report = verify_dagger_drazin(f, &r.inverse, mode, k_max)?;
            Answer::computed(value_of(&r.inverse), r.index, report, r.warnings)
        }
        Kind::DaggerGroup => match dagger_group_inverse(f, mode) {
            Ok(inv) => {
                let r = dagger_drazin(f, mode)?;
                let report = verify_dagger_group(f, &inv, mode)?;
                Answer::computed(value_of(&inv), r.index, report, r.warnings)
            }
            Err(Error::NoDaggerGroupInverse { index }) => {
                let r = dagger_drazin(f, mode)?;
                Answer::nonexistent(Some(index), verify_dagger_group(f, &r.inverse, mode)?)
            }
            Err(e) => return Err(e),
        },
        Kind::Mp => match moore_penrose(f, mode)? {
            MoorePenroseResult::Exists(m) => {
                let report = verify_mp(f, &m, mode)?;
                Answer {
                    index: None,
                    ..Answer::computed(value_of(&m), 0, report, Vec::new())
                }
            }
            MoorePenroseResult::Nonexistent { dagger_drazin, .. } => {
                Answer::nonexistent(None, verify_mp(f, &dagger_drazin, mode)?)
            }
        },
        Kind::Opposing | Kind::PinjDrazin | Kind::PinjDaggerDrazin => {
            unreachable!("not a single-matrix kind")
        }
    })
}

fn compute_opposing<T: Field + JsonScalar>(
    fwd: Matrix<T>,
    bwd: Matrix<T>,
    k_max: Option<usize>,
) -> gidkit::Result<Answer> {
    let pair = OpposingPair::new(fwd, bwd)?;
    let r = opposing_drazin(&pair)?;
    let k_max = k_max.unwrap_or_else(|| default_k_max(&pair.fwd));
    let report = verify_opposing(&pair, &r.as_pair(), k_max)?;
    Ok(Answer::computed(
        value_of(&r.as_pair()),
        r.index,
        report,
        r.warnings,
    ))
}

fn compute_pinj(kind: Kind, f: &PartialInjection, k_max: Option<usize>) -> gidkit::Result<Answer> {
    if kind == Kind::PinjDrazin {
        let (inv, index) = drazin_endo_pinj(f)?;
        let report = verify_drazin_in(&PinjCategory, f, &inv, k_max.unwrap_or(f.dom() + 1))?;
        Ok(Answer::computed(value_of(&inv), index, report, Vec::new()))
    } else {
        let (inv, index) = dagger_drazin_pinj(f);
        let report = verify_dagger_drazin_in(&PinjCategory, f, &inv, k_max.unwrap_or(2))?;
        Ok(Answer::computed(value_of(&inv), index, report, Vec::new()))
    }
}

fn compute(kind: Kind, input: &Path, options: &Options) -> gidkit::Result<Answer> {
    let v = read_json(input)?;
    let (mode, k_max) = (options.dagger.into(), options.k_max);
    match kind {
        Kind::Opposing => {
            let (a, b) = pair_values(v)?;
            let (a, b) = two_matrices(options, a, b)?;
            with_matrices!(a, b, |x, y| compute_opposing(x, y, k_max))
        }
        Kind::PinjDrazin | Kind::PinjDaggerDrazin => {
            reject_field(options)?;
            compute_pinj(kind, &parse(v, "partial injection")?, k_max)
        }
        _ => with_matrix!(one_matrix(options, v)?, |m| compute_matrix(
            kind, &m, mode, k_max
        )),
    }
}

fn check_matrix<T: Field>(
    kind: Kind,
    f: &Matrix<T>,
    cand: &Matrix<T>,
    mode: DaggerMode,
    k_max: Option<usize>,
) -> gidkit::Result<VerificationReport> {
    let k_max = k_max.unwrap_or_else(|| default_k_max(f));
    match kind {
        Kind::Drazin => verify_drazin(f, cand, k_max),
        Kind::Group => verify_group(f, cand),
        Kind::DaggerDrazin => verify_dagger_drazin(f, cand, mode, k_max),
        Kind::DaggerGroup => verify_dagger_group(f, cand, mode),
        Kind::Mp => verify_mp(f, cand, mode),
        Kind::Opposing | Kind::PinjDrazin | Kind::PinjDaggerDrazin => {
            unreachable!("not a single-matrix kind")
        }
    }
}

fn check_opposing<T: Field>(
    (f, g): (Matrix<T>, Matrix<T>),
    (x, y): (Matrix<T>, Matrix<T>),
    k_max: Option<usize>,
) -> gidkit::Result<VerificationReport> {
    let pair = OpposingPair::new(f, g)?;
    let cand = OpposingPair::new(x, y)?;
    verify_opposing(
        &pair,
        &cand,
        k_max.unwrap_or_else(|| default_k_max(&pair.fwd)),
    )
}

fn verify(args: &Verify) -> gidkit::Result<Answer> {
    let options = &args.options;
    let input = read_json(&args.input)?;
    let cand = candidate_value(read_json(&args.candidate)?);
    let (mode, k_max) = (options.dagger.into(), options.k_max);
    let report = match args.kind {
        Kind::Opposing => {
            let ((a, b), (c, d)) = (pair_values(input)?, pair_values(cand)?);
            let mut ms = prepare(
                options,
                [a, b, c, d]
                    .into_iter()
                    .map(|v| parse(v, "matrix"))
                    .collect::<gidkit::Result<Vec<DynMatrix>>>()?,
            )?;
            let (d, c, b, a) = (
                ms.pop().unwrap(),
                ms.pop().unwrap(),
                ms.pop().unwrap(),
                ms.pop().unwrap(),
            );
            match (a, b, c, d) {
                (DynMatrix::Q(a), DynMatrix::Q(b), DynMatrix::Q(c), DynMatrix::Q(d)) => {
                    check_opposing((a, b), (c, d), k_max)?
                }
                (DynMatrix::Qi(a), DynMatrix::Qi(b), DynMatrix::Qi(c), DynMatrix::Qi(d)) => {
                    check_opposing((a, b), (c, d), k_max)?
                }
                (DynMatrix::C64(a), DynMatrix::C64(b), DynMatrix::C64(c), DynMatrix::C64(d)) => {
                    check_opposing((a, b), (c, d), k_max)?
                }
                _ => unreachable!("inputs were promoted to one field"),
            }
        }
        Kind::PinjDrazin | Kind::PinjDaggerDrazin => {
            reject_field(options)?;
            let f: PartialInjection = parse(input, "partial injection")?;
            let x: PartialInjection = parse(cand, "candidate partial injection")?;
            if args.kind == Kind::PinjDrazin {
                verify_drazin_in(&PinjCategory, &f, &x, k_max.unwrap_or(f.dom() + 1))?
            } else {
                verify_dagger_drazin_in(&PinjCategory, &f, &x, k_max.unwrap_or(2))?
            }
        }
        kind => {
            let (f, x) = two_matrices(options, input, cand)?;
            with_matrices!(f, x, |f, x| check_matrix(kind, &f, &x, mode, k_max)?)
        }
    };
    Ok(Answer {
        result: Value::Bool(report.passed()),
        index: report.minimal_index,
        report,
        warnings: Vec::new(),
        status: Status::Checked,
    })
}

fn index_of_matrix<T: Field + JsonScalar>(
    kind: IndexKind,
    f: &Matrix<T>,
    mode: DaggerMode,
    k_max: Option<usize>,
) -> gidkit::Result<Answer> {
    let computed = match kind {
        IndexKind::Drazin => compute_matrix(Kind::Drazin, f, mode, k_max)?,
        _ => compute_matrix(Kind::DaggerDrazin, f, mode, k_max)?,
    };
    if kind == IndexKind::Drazin && computed.index != Some(drazin_index(f)?) {
        return Err(Error::Inconsistent(
            "Drazin index disagrees with the rank chain".into(),
        ));
    }
    Ok(computed)
}

fn index(args: &Index) -> gidkit::Result<Answer> {
    let options = &args.options;
    let (mode, k_max) = (options.dagger.into(), options.k_max);
    let mut answer = match args.kind {
        IndexKind::Opposing => compute(Kind::Opposing, &args.input, options)?,
        IndexKind::PinjDrazin => compute(Kind::PinjDrazin, &args.input, options)?,
        IndexKind::PinjDagger => compute(Kind::PinjDaggerDrazin, &args.input, options)?,
        kind => {
            let v = read_json(&args.input)?;
            with_matrix!(one_matrix(options, v)?, |m| index_of_matrix(
                kind, &m, mode, k_max
            )?)
        }
    };
    answer.result = json!(answer.index);
    Ok(answer)
}

/// Carries out one command without touching stdout or the output file.
pub fn run(cli: &Cli) -> Outcome {
    let answer = match &cli.command {
        Command::Drazin(c) => compute(Kind::Drazin, &c.input, &c.options),
        Command::Group(c) => compute(Kind::Group, &c.input, &c.options),
        Command::DaggerDrazin(c) => compute(Kind::DaggerDrazin, &c.input, &c.options),
        Command::DaggerGroup(c) => compute(Kind::DaggerGroup, &c.input, &c.options),
        Command::Mp(c) => compute(Kind::Mp, &c.input, &c.options),
        Command::Opposing(c) => compute(Kind::Opposing, &c.input, &c.options),
        Command::PinjDrazin(c) => compute(Kind::PinjDrazin, &c.input, &c.options),
        Command::PinjDaggerDrazin(c) => compute(Kind::PinjDaggerDrazin, &c.input, &c.options),
        Command::Verify(v) => verify(v),
        Command::Index(i) => index(i),
    };
    match answer {
        Ok(a) => a.into_outcome(),
        Err(e) => Outcome::failure(e.to_string()),
    }
}

impl Cli {
    pub fn options(&self) -> &Options {
        match &self.command {
            Command::Drazin(c)
            | Command::Group(c)
            | Command::DaggerDrazin(c)
            | Command::DaggerGroup(c)
            | Command::Mp(c)
            | Command::Opposing(c)
            | Command::PinjDrazin(c)
            | Command::PinjDaggerDrazin(c) => &c.options,
            Command::Verify(v) => &v.options,
            Command::Index(i) => &i.options,
        }
    }
}

/// Runs the command, writes its JSON and messages, and returns the exit code.
pub fn execute(cli: &Cli) -> u8 {
    let outcome = run(cli);
    if let Some(doc) = &outcome.document {
        let text = json::to_string_pretty(doc) + "\n";
        let written = match &cli.options().output {
            Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
            None => io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| e.to_string()),
        };
        if let Err(e) = written {
            eprintln!("error: {e}");
            return 1;
        }
    }
    if let Some(msg) = &outcome.message {
        eprintln!(
            "{}: {msg}",
            if outcome.exit_code == 1 {
                "error"
            } else {
                "note"
            }
        );
    }
    outcome.exit_code
}
