mod hgfile;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use hgdual::enumerator::{enumerate_all, EnumConfig, EnumMode, KPolicy};
use hgdual::extension::{ext_k, ext_k_nondominated};
use hgdual::reductions::{hat_down, hat_up};
use hgdual::traces::{conformality_bounded, vc_dim};
use hgdual::{trans_hyp_step, DualizeMode, Error, Hypergraph, Provenance, StepOutcome};
use std::time::Instant;

const EXIT_OK: i32 = 0;
const EXIT_NOT_DUAL: i32 = 1;
const EXIT_MALFORMED: i32 = 2;
const EXIT_USAGE: i32 = 64;
const EXIT_PARSE: i32 = 65;
const EXIT_INTERNAL: i32 = 70;

const AUTO_VC_LIMIT: usize = 25;

#[derive(Parser)]
#[command(
    name = "hgdual",
    version,
    about = "Enumerate minimal transversals of hypergraphs and check duality"
)]
struct Cli {
    /// Worker threads for the brute-force oracle scans (default 1 keeps
    /// everything on one thread)
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AutoK {
    /// k = vc_dim + 1 by brute force (exponential; refused for large inputs)
    Vc,
    /// k = floor(log2 m) + 1 (always cheap)
    Log,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    /// Add fresh vertices to every edge
    HatUp,
    /// Add one fresh vertex inside a new edge per k-subset
    HatDown,
}

#[derive(Subcommand)]
enum Command {
    /// Stream the minimal transversals, one per line, in discovery order
    Enum {
        file: String,
        /// Fixed trace width
        #[arg(long, conflicts_with_all = ["auto_k", "conformal"])]
        k: Option<usize>,
        /// Pick the trace width automatically (default: log)
        #[arg(long = "auto-k", value_enum, conflicts_with = "conformal")]
        auto_k: Option<AutoK>,
        /// Conformal fast path at this width; sound only for inputs whose
        /// conformality is at most the given value
        #[arg(long)]
        conformal: Option<usize>,
        /// Stop after this many outputs
        #[arg(long)]
        limit: Option<usize>,
        /// Re-check each output against the minimality predicate
        #[arg(long)]
        verify: bool,
        /// Allow --auto-k vc on universes past the refusal threshold
        #[arg(long)]
        force: bool,
    },
    /// Decide whether the second file lists all minimal transversals of the
    /// first; prints DUAL or a missing one
    Check {
        h_file: String,
        g_file: String,
        #[arg(long)]
        k: usize,
        /// Skip the extension loop (sound only for k-conformal inputs)
        #[arg(long)]
        conformal: bool,
    },
    /// Print the VC-dimension (brute force)
    Vcdim { file: String },
    /// Print the conformality if it is at most --max, ">MAX" otherwise
    Conformality {
        file: String,
        #[arg(long)]
        max: usize,
    },
    /// Print the k-extension family
    Extk {
        file: String,
        #[arg(long)]
        k: usize,
        /// Only members contained in no edge
        #[arg(long)]
        nondominated: bool,
    },
    /// Print a lifted hypergraph in .hg format (fresh vertices _x1, _x2, ...)
    Gen {
        kind: GenKind,
        file: String,
        #[arg(long)]
        k: usize,
    },
    /// Brute-force counterparts for cross-checking
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// All minimal transversals by exhaustive scan
    Enum { file: String },
    /// Family equality against the brute-force transversal set
    Dual { h_file: String, g_file: String },
    /// The k-extension by exhaustive scan
    Extk {
        file: String,
        #[arg(long)]
        k: usize,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                print!("{e}");
                std::process::exit(EXIT_OK);
            }
            _ => {
                eprint!("{e}");
                std::process::exit(EXIT_USAGE);
            }
        },
    };
    if cli.threads == 0 {
        eprintln!("--threads must be at least 1");
        std::process::exit(EXIT_USAGE);
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
        .expect("rayon pool configured once at startup");
    std::process::exit(run(cli.command));
}

fn load(path: &str) -> Result<Hypergraph, i32> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{path}: {e}");
            return Err(EXIT_USAGE);
        }
    };
    hgfile::parse_hg(&text).map_err(|e| {
        eprintln!("{path}: {e}");
        EXIT_PARSE
    })
}

/// Loads `g` and re-indexes it onto `h`'s universe by label.
fn load_aligned(h: &Hypergraph, path: &str) -> Result<Hypergraph, i32> {
    let g = load(path)?;
    hgfile::align_universe(h, &g).map_err(|e| {
        eprintln!("{path}: {e}");
        EXIT_MALFORMED
    })
}

fn internal_error_code(e: &Error) -> i32 {
    match e {
        Error::ExtensionOverflow { .. } => EXIT_INTERNAL,
        Error::KOutOfRange { .. } | Error::KTooLarge { .. } | Error::TooLarge { .. } => EXIT_USAGE,
        _ => EXIT_INTERNAL,
    }
}

fn describe_provenance(h: &Hypergraph, p: &Provenance) -> String {
    match p {
        Provenance::Precheck { edge_index, vertex } => format!(
            "precheck: edge #{edge_index} is a non-minimal transversal of the list (vertex '{}' removable)",
            h.label(*vertex)
        ),
        Provenance::TraceLoop(tr) => format!(
            "trace loop: the list misses a transversal with T = {{{}}} on S = {{{}}}",
            h.format_set(tr.t()),
            h.format_set(tr.s())
        ),
        Provenance::ExtensionLoop => "extension loop: a compatible non-dominated set".to_string(),
    }
}

fn run(command: Command) -> i32 {
    match command {
        Command::Enum {
            file,
            k,
            auto_k,
            conformal,
            limit,
            verify,
            force,
        } => {
            let h = match load(&file) {
                Ok(h) => h,
                Err(code) => return code,
            };
            let mode = if let Some(ck) = conformal {
                EnumMode::Conformal(ck)
            } else if let Some(k) = k {
                EnumMode::General(KPolicy::Fixed(k))
            } else {
                match auto_k.unwrap_or(AutoK::Log) {
                    AutoK::Log => EnumMode::General(KPolicy::AutoLog),
                    AutoK::Vc => {
                        if h.universe_size() > AUTO_VC_LIMIT && !force {
                            eprintln!(
                                "--auto-k vc is exponential and refused for more than {AUTO_VC_LIMIT} vertices; pass --force to override"
                            );
                            return EXIT_USAGE;
                        }
                        EnumMode::General(KPolicy::AutoVc)
                    }
                }
            };
            let start = Instant::now();
            let mut stream = match enumerate_all(&h, EnumConfig { mode, limit }) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("{e}");
                    return internal_error_code(&e);
                }
            };
            let check_h = stream.hypergraph().clone();
            let mut count = 0usize;
            while let Some(item) = stream.next() {
                match item {
                    Ok(set) => {
                        if verify && !check_h.is_minimal_transversal(&set) {
                            eprintln!("verification failed: {} is not minimal", check_h.format_set(&set));
                            return EXIT_INTERNAL;
                        }
                        println!("{}", check_h.format_set(&set));
                        count += 1;
                    }
                    Err(e) => {
                        eprintln!("{e}");
                        return internal_error_code(&e);
                    }
                }
            }
            let steps = stream.step_durations().len();
            eprintln!(
                "# {count} minimal transversals, {steps} dual-check steps, {:.3?}{}",
                start.elapsed(),
                if stream.truncated() {
                    " (truncated at limit)"
                } else {
                    ""
                }
            );
            EXIT_OK
        }

        Command::Check {
            h_file,
            g_file,
            k,
            conformal,
        } => {
            let h = match load(&h_file) {
                Ok(h) => h,
                Err(code) => return code,
            };
            let g = match load_aligned(&h, &g_file) {
                Ok(g) => g,
                Err(code) => return code,
            };
            let reduced = h.sperner_reduce();
            let mode = if conformal {
                DualizeMode::Conformal
            } else {
                DualizeMode::General
            };
            match trans_hyp_step(&reduced, &g, k, mode) {
                Ok(StepOutcome::Dual) => {
                    println!("DUAL");
                    EXIT_OK
                }
                Ok(StepOutcome::NewTransversal { set, provenance }) => {
                    println!("{}", reduced.format_set(&set));
                    eprintln!("{}", describe_provenance(&reduced, &provenance));
                    EXIT_NOT_DUAL
                }
                Err(Error::NotInDual { member, .. }) => {
                    eprintln!(
                        "not a sub-family of the minimal transversals: {} is not one",
                        reduced.format_set(&member)
                    );
                    EXIT_MALFORMED
                }
                Err(Error::EdgeNotTransversal { index }) => {
                    eprintln!("edge #{index} is not covered by the list");
                    EXIT_MALFORMED
                }
                Err(e) => {
                    eprintln!("{e}");
                    internal_error_code(&e)
                }
            }
        }

        Command::Vcdim { file } => match load(&file) {
            Ok(h) => {
                println!("{}", vc_dim(&h));
                EXIT_OK
            }
            Err(code) => code,
        },

        Command::Conformality { file, max } => match load(&file) {
            Ok(h) => {
                match conformality_bounded(&h, max) {
                    Some(c) => println!("{c}"),
                    None => println!(">{max}"),
                }
                EXIT_OK
            }
            Err(code) => code,
        },

        Command::Extk {
            file,
            k,
            nondominated,
        } => {
            let h = match load(&file) {
                Ok(h) => h,
                Err(code) => return code,
            };
            let members = if nondominated {
                ext_k_nondominated(&h, k, None)
            } else {
                ext_k(&h, k, None).map(|fam| fam.members().to_vec())
            };
            match members {
                Ok(members) => {
                    for m in &members {
                        println!("{}", h.format_set(m));
                    }
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("{e}");
                    internal_error_code(&e)
                }
            }
        }

        Command::Gen { kind, file, k } => {
            let h = match load(&file) {
                Ok(h) => h,
                Err(code) => return code,
            };
            let lifted = match kind {
                GenKind::HatUp => {
                    if k < 1 || h.edge_count() == 0 {
                        eprintln!("hat-up needs k >= 1 and at least one edge");
                        return EXIT_USAGE;
                    }
                    hat_up(&h, k)
                }
                GenKind::HatDown => {
                    if k < 1 || k > h.universe_size() {
                        eprintln!(
                            "hat-down needs 1 <= k <= {} for this input",
                            h.universe_size()
                        );
                        return EXIT_USAGE;
                    }
                    hat_down(&h, k)
                }
            };
            print!("{}", hgfile::serialize_hg(&lifted.lifted));
            EXIT_OK
        }

        Command::Oracle { cmd } => run_oracle(cmd),
    }
}

fn run_oracle(cmd: OracleCmd) -> i32 {
    use hgdual::oracle::{brute_ext_k, brute_tr};
    match cmd {
        OracleCmd::Enum { file } => {
            let h = match load(&file) {
                Ok(h) => h,
                Err(code) => return code,
            };
            match brute_tr(&h) {
                Ok(tr) => {
                    for t in &tr {
                        println!("{}", h.format_set(t));
                    }
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("{e}");
                    internal_error_code(&e)
                }
            }
        }
        OracleCmd::Dual { h_file, g_file } => {
            let h = match load(&h_file) {
                Ok(h) => h,
                Err(code) => return code,
            };
            let g = match load_aligned(&h, &g_file) {
                Ok(g) => g,
                Err(code) => return code,
            };
            let tr = match brute_tr(&h) {
                Ok(tr) => tr,
                Err(e) => {
                    eprintln!("{e}");
                    return internal_error_code(&e);
                }
            };
            let mut g_edges = g.edges().to_vec();
            g_edges.sort();
            g_edges.dedup();
            if tr == g_edges {
                println!("DUAL");
                return EXIT_OK;
            }
            // malformed members outrank missing ones, as in `check`
            if let Some(extra) = g_edges.iter().find(|e| !tr.contains(e)) {
                eprintln!(
                    "not a sub-family of the minimal transversals: {} is not one",
                    h.format_set(extra)
                );
                return EXIT_MALFORMED;
            }
            let missing = tr.iter().find(|t| !g_edges.contains(t)).unwrap();
            println!("{}", h.format_set(missing));
            EXIT_NOT_DUAL
        }
        OracleCmd::Extk { file, k } => {
            let h = match load(&file) {
                Ok(h) => h,
                Err(code) => return code,
            };
            match brute_ext_k(&h, k) {
                Ok(fam) => {
                    for m in &fam {
                        println!("{}", h.format_set(m));
                    }
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("{e}");
                    internal_error_code(&e)
                }
            }
        }
    }
}
