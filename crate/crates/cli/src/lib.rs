//! Command-line front end: JSON in, JSON out.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use eulersign_core::{
    are_conjugate_subgroups, census, classify, gassmann_equivalent, realizability, reduced_sum,
    search_candidates, sign_chi, CartanType, GlobalDescriptor, GroupFile, InvariantFamily,
    PermGroup, Realizability, SearchOptions, Subgroup, DEFAULT_MAX_ELEMENTS,
};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_TOO_LARGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "eulersign", version, about = "Euler characteristic signs and Gassmann searches")]
pub struct Cli {
    /// Cap on enumerated group elements; larger groups exit with code 3.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ELEMENTS)]
    pub max_elements: u64,

    /// Worker threads (0 lets the runtime choose).
    #[arg(long, global = true, env = "EULERSIGN_THREADS", default_value_t = 0)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sign of the Euler characteristic for a global descriptor.
    Sign {
        #[arg(long)]
        input: PathBuf,
    },
    /// Signs attained by a type within bounds on the number of places.
    Classify {
        #[arg(long = "type")]
        cartan: String,
        #[arg(long, default_value_t = 2)]
        max_real: u32,
        #[arg(long, default_value_t = 2)]
        max_finite: u32,
    },
    /// Whether a family of local invariants comes from a global class.
    Realizable {
        #[arg(long)]
        input: PathBuf,
    },
    /// Gassmann equivalence and conjugacy of two subgroups.
    Gassmann {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        h2: PathBuf,
    },
    /// Gassmann-triple search against the point stabilizer.
    Search(SearchArgs),
    /// The local form census.
    DumpTables {
        #[arg(long, default_value_t = 8)]
        max_rank: u32,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub group: PathBuf,
    /// A group file or an array of group files.
    #[arg(long)]
    pub candidates: Option<PathBuf>,
    /// Intermediate subgroups to test, same format as candidates.
    #[arg(long)]
    pub intermediates: Option<PathBuf>,
}

/// An error reported as `{"error": {"kind", "message"}}`.
#[derive(Debug)]
pub struct Failure {
    pub kind: String,
    pub message: String,
    pub code: i32,
}

impl Failure {
    fn input(message: String) -> Self {
        Failure {
            kind: "InvalidInput".into(),
            message,
            code: EXIT_INVALID,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "kind": self.kind, "message": self.message } })
    }
}

impl From<eulersign_core::Error> for Failure {
    fn from(e: eulersign_core::Error) -> Self {
        let code = match e {
            eulersign_core::Error::TooLarge(_) => EXIT_TOO_LARGE,
            _ => EXIT_INVALID,
        };
        Failure {
            kind: e.kind().into(),
            message: e.to_string(),
            code,
        }
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_group(path: &Path) -> Result<PermGroup, Failure> {
    Ok(PermGroup::from_file(read_json::<GroupFile>(path)?)?)
}

/// One group file or a JSON array of them.
fn read_groups(path: &Path) -> Result<Vec<PermGroup>, Failure> {
    let files = match read_json::<Value>(path)? {
        Value::Array(items) => items
            .into_iter()
            .map(serde_json::from_value)
            .collect::<Result<Vec<GroupFile>, _>>(),
        single => serde_json::from_value(single).map(|f| vec![f]),
    }
    .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    files
        .into_iter()
        .map(|f| PermGroup::from_file(f).map_err(Failure::from))
        .collect()
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable output")
}

fn execute(cli: &Cli) -> Result<Value, Failure> {
    let max = cli.max_elements;
    match &cli.command {
        Command::Sign { input } => {
            let desc: GlobalDescriptor = read_json(input)?;
            Ok(to_value(&sign_chi(&desc)?))
        }
        Command::Classify {
            cartan,
            max_real,
            max_finite,
        } => {
            let c: CartanType = cartan.parse()?;
            let signs = classify(c, *max_real, *max_finite)?;
            Ok(json!({ "signs": to_value(&signs) }))
        }
        Command::Realizable { input } => {
            let family: InvariantFamily = read_json(input)?;
            let status = realizability(&family)?;
            if status == Realizability::Vacuous {
                log::warn!("center {:?} imposes no global constraint", family.center());
            }
            Ok(json!({
                "realizable": status.holds(),
                "status": to_value(&status),
                "reduced_sum": reduced_sum(&family),
            }))
        }
        Command::Gassmann { group, h, h2 } => {
            let g = Arc::new(read_group(group)?);
            let h = Subgroup::from_group(g.clone(), read_group(h)?)?;
            let h2 = Subgroup::from_group(g, read_group(h2)?)?;
            let equivalent = gassmann_equivalent(&h, &h2, max)?;
            let conjugate = are_conjugate_subgroups(&h, &h2, max)?;
            Ok(json!({ "equivalent": equivalent, "conjugate": conjugate }))
        }
        Command::Search(args) => {
            let g = read_group(&args.group)?;
            let candidates = match &args.candidates {
                Some(p) => read_groups(p)?,
                None => Vec::new(),
            };
            let intermediates = match &args.intermediates {
                Some(p) => read_groups(p)?,
                None => Vec::new(),
            };
            let opts = SearchOptions { max_elements: max };
            Ok(to_value(&search_candidates(&g, &candidates, &intermediates, opts)?))
        }
        Command::DumpTables { max_rank } => Ok(to_value(&census(*max_rank))),
    }
}

fn emit(out: &mut dyn Write, value: &Value) {
    // A closed pipe leaves nothing useful to report.
    let _ = writeln!(out, "{value}");
}

/// Parses `args` (including the program name), runs the verb and writes one
/// JSON document to `out`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let failure = Failure {
                kind: "InvalidArguments".into(),
                message: e.to_string().trim_end().to_string(),
                code: EXIT_INVALID,
            };
            emit(out, &failure.to_json());
            return failure.code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(pool) => pool,
        Err(e) => {
            let failure = Failure::input(format!("cannot start thread pool: {e}"));
            emit(out, &failure.to_json());
            return failure.code;
        }
    };
    match pool.install(|| execute(&cli)) {
        Ok(value) => {
            emit(out, &value);
            EXIT_OK
        }
        Err(failure) => {
            log::error!("{}: {}", failure.kind, failure.message);
            emit(out, &failure.to_json());
            failure.code
        }
    }
}
