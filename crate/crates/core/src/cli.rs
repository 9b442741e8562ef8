//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 violated precondition,
//! 3 a predictor disagreed with the oracle.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::check::{run_check, CheckOptions};
use crate::error::Error;
use crate::fixtures::{self, pretty, BASE_FLATS, CLOSURE_ILLUSTRATIONS, SPLIT_FLATS};
use crate::gf2::GF2Matrix;
use crate::graph::{cycle_matroid, LabeledGraph};
use crate::matroid::{BinaryMatroid, Caps};
use crate::set::{sort_canonical, ElemSet, LabelSet};
use crate::split::{SplitContext, DEFAULT_LABEL_A, DEFAULT_LABEL_GAMMA};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "essplit", about = "es-splitting of binary matroids", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the split matrix.
    Split {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        split: SplitArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Closure of a subset of the split ground set.
    Closure(QueryArgs),
    /// Rank of a subset of the split ground set.
    Rank(QueryArgs),
    /// Circuits of the split matroid (or of the input matroid without --X/--e).
    Circuits(ListArgs),
    /// Flats of the split matroid (or of the input matroid without --X/--e).
    Flats(ListArgs),
    /// Compare every predictor with the oracle over all (or sampled) subsets.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        split: SplitArgs,
        /// Check this many random subsets instead of all of them.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reproduce the worked example.
    #[command(name = "demo-fig2")]
    DemoFig2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Matrix,
    Graph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Formula,
    Oracle,
    Both,
}

#[derive(Debug, Args)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Kind::Matrix)]
    kind: Kind,
    /// Enumeration cap (sets both the circuit and the all-subsets cap).
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Debug, Args)]
struct SplitArgs {
    /// Comma-separated labels of X.
    #[arg(long = "X", value_name = "LABELS")]
    x: String,
    #[arg(long)]
    e: String,
    #[arg(long, default_value = DEFAULT_LABEL_A)]
    label_a: String,
    #[arg(long, default_value = DEFAULT_LABEL_GAMMA)]
    label_gamma: String,
}

#[derive(Debug, Args)]
struct OptionalSplitArgs {
    #[arg(long = "X", value_name = "LABELS", requires = "e")]
    x: Option<String>,
    #[arg(long, requires = "x")]
    e: Option<String>,
    #[arg(long, default_value = DEFAULT_LABEL_A)]
    label_a: String,
    #[arg(long, default_value = DEFAULT_LABEL_GAMMA)]
    label_gamma: String,
}

#[derive(Debug, Args)]
struct QueryArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    split: SplitArgs,
    /// Comma-separated labels of A'.
    #[arg(long, allow_hyphen_values = true)]
    subset: String,
    #[arg(long, value_enum, default_value_t = Mode::Both)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct ListArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    split: OptionalSplitArgs,
    #[arg(long, value_enum, default_value_t = Mode::Both)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Failure carrying its exit code and message.
struct Failure {
    code: i32,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::UnknownLabel(_)
            | Error::DuplicateLabel(_)
            | Error::TooLarge { .. } => EXIT_USAGE,
            Error::FormulaDisagreement { .. } => EXIT_DISAGREEMENT,
            Error::GroundSetTooLarge { .. }
            | Error::LabelCollision(_)
            | Error::ElementNotInX(_)
            | Error::PreconditionViolated(_)
            | Error::BaseNotFlat(_)
            | Error::InvalidPartition(_) => EXIT_PRECONDITION,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

type Outcome = std::result::Result<(String, i32), Failure>;

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let target: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn execute(cmd: Command) -> Outcome {
    match cmd {
        Command::Split {
            input,
            split,
            format,
        } => {
            let ctx = load_context(&input, &split)?;
            let m = ctx.build_split_matrix();
            Ok((
                match format {
                    Format::Text => m.to_text(),
                    Format::Json => format!("{}\n", m.to_json()),
                },
                EXIT_OK,
            ))
        }
        Command::Closure(q) => cmd_closure(&q),
        Command::Rank(q) => cmd_rank(&q),
        Command::Circuits(l) => cmd_circuits(&l),
        Command::Flats(l) => cmd_flats(&l),
        Command::Check {
            input,
            split,
            sample,
            seed,
            format,
        } => {
            let ctx = load_context(&input, &split)?;
            let summary = run_check(&ctx, &CheckOptions { sample, seed })?;
            let code = if summary.passed() {
                EXIT_OK
            } else {
                EXIT_DISAGREEMENT
            };
            let text = match format {
                Format::Text => summary.to_text(),
                Format::Json => format!("{}\n", serde_json::to_string(&summary).expect("serializes")),
            };
            Ok((text, code))
        }
        Command::DemoFig2 => Ok((demo_fig2()?, EXIT_OK)),
    }
}

fn caps(input: &InputArgs) -> Caps {
    match input.cap {
        Some(c) => Caps {
            circuits: c,
            subsets: c,
        },
        None => Caps::default(),
    }
}

fn load_matroid(input: &InputArgs) -> std::result::Result<BinaryMatroid, Failure> {
    let path = input.input.display().to_string();
    let text = std::fs::read_to_string(&input.input).map_err(|e| Failure {
        code: EXIT_USAGE,
        msg: format!("{path}: {e}"),
    })?;
    let with_path = |e: Error| match e {
        Error::Parse { line, msg } => Failure {
            code: EXIT_USAGE,
            msg: format!("{path}:{line}: {msg}"),
        },
        other => Failure::from(other),
    };
    let matrix = match input.kind {
        Kind::Matrix => GF2Matrix::parse(&text).map_err(with_path)?,
        Kind::Graph => {
            let g = LabeledGraph::parse(&text).map_err(with_path)?;
            cycle_matroid(&g)?.matrix().clone()
        }
    };
    Ok(BinaryMatroid::with_caps(matrix, caps(input)))
}

fn make_context(
    base: BinaryMatroid,
    x: &str,
    e: &str,
    label_a: &str,
    label_gamma: &str,
) -> std::result::Result<SplitContext, Failure> {
    let x = LabelSet::parse_list(x);
    if x.is_empty() {
        return Err(Failure {
            code: EXIT_PRECONDITION,
            msg: "X must not be empty".into(),
        });
    }
    Ok(SplitContext::with_labels(base, &x, e, label_a, label_gamma)?)
}

fn load_context(input: &InputArgs, split: &SplitArgs) -> std::result::Result<SplitContext, Failure> {
    make_context(
        load_matroid(input)?,
        &split.x,
        &split.e,
        &split.label_a,
        &split.label_gamma,
    )
}

fn cmd_closure(q: &QueryArgs) -> Outcome {
    let ctx = load_context(&q.input, &q.split)?;
    let query = ctx.query(&LabelSet::parse_list(&q.subset))?;
    let report = match q.mode {
        Mode::Formula => ctx.predict_closure(&query, false)?,
        Mode::Both => ctx.predict_closure(&query, true)?,
        Mode::Oracle => crate::split::ClosureCaseReport {
            matched: Vec::new(),
            formula: None,
            oracle: Some(ctx.split_ground().labels_of(ctx.split_matroid().closure_mask(query.a_prime))),
            agree: None,
        },
    };
    let code = if report.agree == Some(false) {
        EXIT_DISAGREEMENT
    } else {
        EXIT_OK
    };
    let text = match q.format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Text => {
            let mut s = String::new();
            let show = |o: &Option<LabelSet>| o.as_ref().map_or("-".to_string(), |l| l.to_string());
            let ids: Vec<&str> = report.matched.iter().map(|c| c.id()).collect();
            let _ = writeln!(s, "A'      = {}", ctx.split_ground().labels_of(query.a_prime));
            if q.mode != Mode::Oracle {
                let _ = writeln!(
                    s,
                    "matched = {}",
                    if ids.is_empty() { "none".to_string() } else { ids.join(",") }
                );
                let _ = writeln!(s, "formula = {}", show(&report.formula));
            }
            if q.mode != Mode::Formula {
                let _ = writeln!(s, "oracle  = {}", show(&report.oracle));
            }
            if let Some(a) = report.agree {
                let _ = writeln!(s, "agree   = {a}");
            }
            s
        }
    };
    Ok((text, code))
}

fn cmd_rank(q: &QueryArgs) -> Outcome {
    let ctx = load_context(&q.input, &q.split)?;
    let query = ctx.query(&LabelSet::parse_list(&q.subset))?;
    let formula = match q.mode {
        Mode::Oracle => None,
        _ => Some(ctx.predict_rank(&query)?),
    };
    let oracle = match q.mode {
        Mode::Formula => None,
        _ => Some(ctx.split_matroid().rank_mask(query.a_prime)),
    };
    let agree = formula.zip(oracle).map(|(f, o)| f == o);
    let code = if agree == Some(false) {
        EXIT_DISAGREEMENT
    } else {
        EXIT_OK
    };
    let labels = ctx.split_ground().labels_of(query.a_prime);
    let text = match q.format {
        Format::Json => format!(
            "{}\n",
            json!({"query": labels, "formula": formula, "oracle": oracle, "agree": agree})
        ),
        Format::Text => {
            let mut s = format!("A'      = {labels}\n");
            if let Some(f) = formula {
                let _ = writeln!(s, "formula = {f}");
            }
            if let Some(o) = oracle {
                let _ = writeln!(s, "oracle  = {o}");
            }
            if let Some(a) = agree {
                let _ = writeln!(s, "agree   = {a}");
            }
            s
        }
    };
    Ok((text, code))
}

fn list_context(l: &ListArgs) -> std::result::Result<(BinaryMatroid, Option<SplitContext>), Failure> {
    let base = load_matroid(&l.input)?;
    match (&l.split.x, &l.split.e) {
        (Some(x), Some(e)) => {
            let ctx = make_context(base.clone(), x, e, &l.split.label_a, &l.split.label_gamma)?;
            Ok((base, Some(ctx)))
        }
        _ => Ok((base, None)),
    }
}

fn render_sets(title: &str, sets: &[LabelSet]) -> String {
    let mut s = format!("{title} ({}):\n", sets.len());
    for c in sets {
        let _ = writeln!(s, "  {c}");
    }
    s
}

fn cmd_circuits(l: &ListArgs) -> Outcome {
    let (base, ctx) = list_context(l)?;
    let Some(ctx) = ctx else {
        let circuits = base.circuits()?;
        return Ok(match l.format {
            Format::Json => (format!("{}\n", json!({ "oracle": circuits })), EXIT_OK),
            Format::Text => (render_sets("circuits", &circuits), EXIT_OK),
        });
    };
    let g = ctx.split_ground().clone();
    let formula: Option<Vec<LabelSet>> = match l.mode {
        Mode::Oracle => None,
        _ => Some(
            ctx.predict_circuit_masks()?
                .flattened()
                .into_iter()
                .map(|c| g.labels_of(c))
                .collect(),
        ),
    };
    let oracle = match l.mode {
        Mode::Formula => None,
        _ => Some(ctx.split_matroid().circuits()?),
    };
    let agree = match (&formula, &oracle) {
        (Some(f), Some(o)) => Some(f == o),
        _ => None,
    };
    let code = if agree == Some(false) {
        EXIT_DISAGREEMENT
    } else {
        EXIT_OK
    };
    let text = match l.format {
        Format::Json => format!(
            "{}\n",
            json!({"formula": formula, "oracle": oracle, "agree": agree})
        ),
        Format::Text => {
            let mut s = String::new();
            if let Some(f) = &formula {
                s.push_str(&render_sets("predicted circuits", f));
            }
            if let Some(o) = &oracle {
                s.push_str(&render_sets("oracle circuits", o));
            }
            if let (Some(f), Some(o)) = (&formula, &oracle) {
                for c in o.iter().filter(|c| !f.contains(c)) {
                    let _ = writeln!(s, "missing from prediction: {c}");
                }
                for c in f.iter().filter(|c| !o.contains(c)) {
                    let _ = writeln!(s, "predicted but not a circuit: {c}");
                }
                let _ = writeln!(s, "agree = {}", agree.unwrap_or(false));
            }
            s
        }
    };
    Ok((text, code))
}

fn cmd_flats(l: &ListArgs) -> Outcome {
    let (base, ctx) = list_context(l)?;
    let Some(ctx) = ctx else {
        let flats = base.flats()?;
        return Ok(match l.format {
            Format::Json => (format!("{}\n", json!({ "oracle": flats })), EXIT_OK),
            Format::Text => (render_sets("flats", &flats), EXIT_OK),
        });
    };
    let g = ctx.split_ground().clone();
    let split = ctx.split_matroid();
    let mut certified: Vec<(ElemSet, String)> = Vec::new();
    if l.mode != Mode::Oracle {
        let a = ElemSet::singleton(ctx.a_index());
        let gm = ElemSet::singleton(ctx.gamma_index());
        for flat in base.flat_masks()? {
            for extra in [ElemSet::EMPTY, a, gm, a.union(gm)] {
                let q = ctx.query_mask(flat.union(extra));
                if let Some(c) = ctx.predict_is_flat(&q)? {
                    certified.push((q.a_prime, c.to_string()));
                }
            }
        }
        certified.sort_by(|x, y| x.0.canonical_cmp(y.0));
    }
    let oracle: Option<Vec<ElemSet>> = match l.mode {
        Mode::Formula => None,
        _ => Some(split.flat_masks()?),
    };
    let violations: Vec<LabelSet> = match &oracle {
        Some(o) => certified
            .iter()
            .filter(|(s, _)| !o.contains(s))
            .map(|(s, _)| g.labels_of(*s))
            .collect(),
        None => Vec::new(),
    };
    let code = if violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_DISAGREEMENT
    };
    let certified_json: Vec<_> = certified
        .iter()
        .map(|(s, c)| json!({"set": g.labels_of(*s), "condition": c}))
        .collect();
    let oracle_sets: Option<Vec<LabelSet>> =
        oracle.map(|o| o.into_iter().map(|s| g.labels_of(s)).collect());
    let text = match l.format {
        Format::Json => format!(
            "{}\n",
            json!({
                "formula": (l.mode != Mode::Oracle).then_some(certified_json),
                "oracle": oracle_sets,
                "violations": violations,
            })
        ),
        Format::Text => {
            let mut s = String::new();
            if l.mode != Mode::Oracle {
                let _ = writeln!(s, "certified by a flat condition ({}):", certified.len());
                for (set, c) in &certified {
                    let _ = writeln!(s, "  {} {}", c, g.labels_of(*set));
                }
            }
            if let Some(o) = &oracle_sets {
                s.push_str(&render_sets("oracle flats", o));
            }
            for v in &violations {
                let _ = writeln!(s, "certified but not a flat: {v}");
            }
            s
        }
    };
    Ok((text, code))
}

fn show(set: &LabelSet) -> String {
    set.display_with(pretty)
}

/// Text reproduction of the worked example: closure illustrations, the two
/// published flat lists checked against the oracle, and the ranks.
pub fn demo_fig2() -> crate::Result<String> {
    let ctx = fixtures::figure2_context()?;
    let base = ctx.base();
    let split = ctx.split_matroid();
    let sg = ctx.split_ground();
    let mut s = String::new();

    let _ = writeln!(s, "Worked example: X = {{x,y}}, e = y");
    let _ = writeln!(s, "r(M) = {}, r(M^e_X) = {}", base.rank(), split.rank());
    let _ = writeln!(s);
    let _ = writeln!(s, "Closure illustrations");
    let mut closure_mismatches = 0;
    for ill in &CLOSURE_ILLUSTRATIONS {
        let q = ctx.query(&LabelSet::new(ill.query.iter().copied()))?;
        let report = ctx.predict_closure(&q, true)?;
        let published = sg.set(ill.published.iter().copied())?;
        let computed = report.oracle.clone().expect("oracle requested");
        let ids: Vec<&str> = report.matched.iter().map(|c| c.id()).collect();
        let _ = writeln!(
            s,
            "  cl'({}) = {}   [{}; formula {}]",
            show(&sg.labels_of(q.a_prime)),
            show(&computed),
            ids.join(","),
            match report.agree {
                Some(true) => "agrees with oracle",
                Some(false) => "DISAGREES with oracle",
                None => "n/a",
            }
        );
        if computed != published {
            closure_mismatches += 1;
            let _ = writeln!(
                s,
                "    published {} differs from the oracle{}",
                show(&published),
                ill.note.map(|n| format!(": {n}")).unwrap_or_default()
            );
        }
    }
    let _ = writeln!(
        s,
        "  {} of {} published closures match the oracle",
        CLOSURE_ILLUSTRATIONS.len() - closure_mismatches,
        CLOSURE_ILLUSTRATIONS.len()
    );

    for (title, matroid, listed) in [
        ("M", base, &BASE_FLATS[..]),
        ("M^e_X", split, &SPLIT_FLATS[..]),
    ] {
        let g = matroid.ground();
        let _ = writeln!(s);
        let _ = writeln!(s, "Flats of {title}");
        let mut listed_masks = Vec::new();
        let mut rejected = Vec::new();
        for entry in listed {
            let mask = g.mask(entry.iter().copied())?;
            listed_masks.push(mask);
            if !matroid.is_flat_mask(mask) {
                rejected.push(g.labels_of(mask));
            }
        }
        let _ = writeln!(
            s,
            "  {} of {} listed flats confirmed by the oracle",
            listed.len() - rejected.len(),
            listed.len()
        );
        for r in &rejected {
            let _ = writeln!(s, "  REJECTED: {}", show(r));
        }
        let oracle = matroid.flat_masks()?;
        let mut unlisted: Vec<ElemSet> = oracle
            .iter()
            .copied()
            .filter(|f| !f.is_empty() && !listed_masks.contains(f))
            .collect();
        sort_canonical(&mut unlisted);
        let _ = writeln!(
            s,
            "  oracle finds {} nonempty flats; {} are not in the list:",
            oracle.iter().filter(|f| !f.is_empty()).count(),
            unlisted.len()
        );
        let rendered: Vec<String> = unlisted.iter().map(|&f| show(&g.labels_of(f))).collect();
        for chunk in rendered.chunks(8) {
            let _ = writeln!(s, "    {}", chunk.join(" "));
        }
    }
    Ok(s)
}
