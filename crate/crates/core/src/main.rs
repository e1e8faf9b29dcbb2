//! Command-line interface.
//!
//! Reads a framework in the textual format from a file or stdin and runs
//! one of: extension solving (`solve`), axiom and principle checks
//! (`check`), inference-property evaluation (`nmr`), attack-graph export
//! (`graph`) or the brute-force cross-check (`oracle`).
//!
//! Exit codes: 0 success or property holds, 1 violation or divergence
//! found, 2 input or usage error.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use abaplus::axioms::{self, CheckReport, CheckStatus};
use abaplus::emit;
use abaplus::framework::Framework;
use abaplus::nmr::{self, NmrDirection, NmrMode, NmrProperty, NmrSetting};
use abaplus::random::{random_framework, GenConfig};
use abaplus::semantics::{self, Family, SemanticsId, DEFAULT_MAX_ASSUMPTIONS};
use abaplus::set::AsmSet;
use abaplus::{attacks, dsl, naive};

const DEFAULT_GRAPH_BOUND: usize = 12;

#[derive(Parser)]
#[command(
    name = "abaplus",
    version,
    about = "Extension semantics for flat assumption-based argumentation with preferences"
)]
struct Cli {
    /// Cap on the assumption count for subset enumeration.
    #[arg(long, global = true, env = "ABAP_MAX_A")]
    max_assumptions: Option<usize>,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, env = "ABAP_SEED")]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate extensions under one semantics.
    Solve {
        #[arg(long, value_enum)]
        sem: SemArg,
        /// Use the plain attack relation, ignoring preferences.
        #[arg(long)]
        plain: bool,
        /// Framework file; stdin when absent or `-`.
        file: Option<PathBuf>,
    },
    /// Run an axiom or principle check.
    Check {
        #[arg(value_enum)]
        kind: CheckArg,
        /// Semantics for the extension-quantified checks.
        #[arg(long, value_enum, default_value = "complete")]
        sem: SemArg,
        file: Option<PathBuf>,
    },
    /// Evaluate an inference property under a framework transformation.
    Nmr {
        #[arg(long, value_enum)]
        setting: SettingArg,
        #[arg(long = "prop", value_enum)]
        prop: PropArg,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Restrict the promoted conclusion to this sentence.
        #[arg(long)]
        psi: Option<String>,
        #[arg(long, value_enum, default_value = "complete")]
        sem: SemArg,
        /// Use the plain attack relation, ignoring preferences.
        #[arg(long)]
        plain: bool,
        file: Option<PathBuf>,
    },
    /// Export the attack graph over assumption sets as DOT.
    Graph {
        /// Use the preference-aware relation instead of the plain one.
        #[arg(long)]
        preferences: bool,
        /// Omit the empty set and the full assumption set.
        #[arg(long)]
        omit_trivial: bool,
        file: Option<PathBuf>,
    },
    /// Cross-check the engine against the brute-force reference.
    Oracle {
        /// Check this many random frameworks instead of an input file.
        #[arg(long)]
        random: Option<usize>,
        file: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SemArg {
    Stable,
    Complete,
    Preferred,
    Grounded,
    Ideal,
}

impl From<SemArg> for Family {
    fn from(value: SemArg) -> Family {
        match value {
            SemArg::Stable => Family::Stable,
            SemArg::Complete => Family::Complete,
            SemArg::Preferred => Family::Preferred,
            SemArg::Grounded => Family::Grounded,
            SemArg::Ideal => Family::Ideal,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Contraposition,
    WeakContraposition,
    ConflictPreservation,
    EmptyPreferences,
    MaximalElements,
    PrincipleOne,
}

#[derive(Clone, Copy, ValueEnum)]
enum SettingArg {
    Strict,
    Asm,
}

#[derive(Clone, Copy, ValueEnum)]
enum PropArg {
    Cut,
    Mon,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Sceptical,
    Credulous,
}

fn read_input(file: &Option<PathBuf>) -> Result<String, String> {
    match file {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display())),
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            Ok(text)
        }
    }
}

fn load_framework(file: &Option<PathBuf>) -> Result<Framework, String> {
    let text = read_input(file)?;
    let (fw, warnings) = dsl::parse_with_warnings(&text).map_err(|e| e.to_string())?;
    for warning in warnings {
        eprintln!("{warning}");
    }
    Ok(fw)
}

fn report_exit(report: &CheckReport) -> ExitCode {
    println!(
        "{}",
        serde_json::to_string(report).expect("reports serialize")
    );
    match report.status {
        CheckStatus::Violated => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let bound = cli.max_assumptions.unwrap_or(DEFAULT_MAX_ASSUMPTIONS);
    match cli.command {
        Command::Solve { sem, plain, file } => {
            let fw = load_framework(&file)?;
            let sem = SemanticsId {
                family: sem.into(),
                preference_aware: !plain,
            };
            let exts = semantics::extensions(&fw, sem, bound).map_err(|e| e.to_string())?;
            println!("{}", emit::emit_extensions(&fw, sem, &exts));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { kind, sem, file } => {
            let fw = load_framework(&file)?;
            let family: Family = sem.into();
            let report = match kind {
                CheckArg::Contraposition => axioms::check_contraposition(&fw),
                CheckArg::WeakContraposition => axioms::check_weak_contraposition(&fw),
                CheckArg::ConflictPreservation => {
                    axioms::check_conflict_preservation(&fw, family, bound)
                        .map_err(|e| e.to_string())?
                }
                CheckArg::EmptyPreferences => axioms::check_empty_preferences(&fw, family, bound)
                    .map_err(|e| e.to_string())?,
                CheckArg::MaximalElements => axioms::check_maximal_elements(&fw, family, bound)
                    .map_err(|e| e.to_string())?,
                CheckArg::PrincipleOne => axioms::check_principle_one(&fw, family, bound)
                    .map_err(|e| e.to_string())?,
            };
            Ok(report_exit(&report))
        }
        Command::Nmr {
            setting,
            prop,
            mode,
            psi,
            sem,
            plain,
            file,
        } => {
            let fw = load_framework(&file)?;
            let sem = SemanticsId {
                family: sem.into(),
                preference_aware: !plain,
            };
            let setting = match setting {
                SettingArg::Strict => NmrSetting::Strict,
                SettingArg::Asm => NmrSetting::Asm,
            };
            let property = NmrProperty {
                direction: match prop {
                    PropArg::Cut => NmrDirection::Cut,
                    PropArg::Mon => NmrDirection::Mon,
                },
                mode: match mode {
                    ModeArg::Sceptical => NmrMode::Sceptical,
                    ModeArg::Credulous => NmrMode::Credulous,
                },
            };
            let report = nmr::evaluate(&fw, sem, setting, property, psi.as_deref(), bound)
                .map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::to_string(&report).expect("reports serialize")
            );
            if report.holds() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Graph {
            preferences,
            omit_trivial,
            file,
        } => {
            let fw = load_framework(&file)?;
            let graph_bound = cli.max_assumptions.unwrap_or(DEFAULT_GRAPH_BOUND);
            if fw.assumption_count() > graph_bound {
                return Err(format!(
                    "graph over {} assumptions exceeds the bound of {graph_bound}",
                    fw.assumption_count()
                ));
            }
            let full = fw.all_assumptions();
            let filter = |s: AsmSet| !s.is_empty() && s != full;
            let node_filter: Option<&dyn Fn(AsmSet) -> bool> =
                if omit_trivial { Some(&filter) } else { None };
            let nodes = attacks::graph_nodes(&fw, node_filter);
            let edges = attacks::attack_graph(&fw, preferences, node_filter, graph_bound)
                .map_err(|e| e.to_string())?;
            print!("{}", emit::emit_dot(&fw, &nodes, &edges));
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { random, file } => {
            let mut divergent: Vec<String> = Vec::new();
            let checked;
            match random {
                Some(count) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed.unwrap_or(0));
                    let cfg = GenConfig::default();
                    for index in 0..count {
                        let fw = random_framework(&mut rng, &cfg);
                        for label in naive::divergences(&fw) {
                            divergent.push(format!("random[{index}]: {label}"));
                        }
                    }
                    checked = count;
                }
                None => {
                    let fw = load_framework(&file)?;
                    if fw.assumption_count() > 12 {
                        return Err("the oracle is limited to 12 assumptions".into());
                    }
                    divergent = naive::divergences(&fw);
                    checked = 1;
                }
            }
            println!(
                "{}",
                serde_json::json!({
                    "checked": checked,
                    "divergences": divergent,
                })
            );
            if divergent.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
