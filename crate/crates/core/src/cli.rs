//! Command-line front end. Decision commands print `true`/`false` and exit
//! 0/1; scans exit 1 if they find a violation; parse and usage errors exit 2.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::desingularize::{birman_scan, eta, eta_tilde, DEFAULT_WORD_LIMIT};
use crate::graph::DefiningGraph;
use crate::orbit_check::{check_all_kinds, MAX_TUPLE_LEN};
use crate::singular::{Family, SingularMonoid, Word};
use crate::trace::power_conjugacy_scan;

#[derive(Debug, Parser)]
#[command(name = "raag", version, about = "Word problems and normal forms in right-angled Artin groups and their singular monoids")]
struct Cli {
    /// Graph file: a `vertices:` line followed by an `edges:` line.
    #[arg(long)]
    graph: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Sigma,
    Tau,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the normal form of a word
    Normalize {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Decide whether two words are equal
    Eq {
        #[arg(allow_hyphen_values = true)]
        w1: String,
        #[arg(allow_hyphen_values = true)]
        w2: String,
    },
    /// Decide whether two words commute
    Commute {
        #[arg(allow_hyphen_values = true)]
        w1: String,
        #[arg(allow_hyphen_values = true)]
        w2: String,
    },
    /// Print the image in the group under τ ↦ σ
    Theta {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Print the number of singular letters
    Ord {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Print the image in the group ring under τ ↦ σ − σ⁻¹
    Eta {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Print the truncated series of a word that may contain `!v` (τ_v⁻¹)
    EtaTrunc {
        #[arg(long, allow_negative_numbers = true)]
        cutoff: i64,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Decide whether a group element conjugates σ_s to σ_t
    Ribbon {
        #[arg(long)]
        s: String,
        #[arg(long)]
        t: String,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Decide α·gen_s^k = gen_t^k·α
    Frz {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        s: String,
        #[arg(long)]
        t: String,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Check injectivity of the desingularization map on all short words
    BirmanScan {
        #[arg(long)]
        max_len: usize,
        /// Refuse to enumerate more words than this
        #[arg(long, default_value_t = DEFAULT_WORD_LIMIT)]
        limit: u128,
    },
    /// Check normal forms against merge/swap orbits of all small expressions
    NfOrbitCheck {
        #[arg(long)]
        max_syll: usize,
        #[arg(long)]
        max_exp: u32,
    },
    /// Check v^p·u = u·w^p ⟹ v = w and u commutes with v, on the graph's trace monoid
    Lemma42Scan {
        #[arg(long)]
        max_l: usize,
        #[arg(long)]
        max_p: usize,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn decision(out: &mut dyn Write, b: bool) -> Result<i32, Failure> {
    writeln!(out, "{b}")?;
    Ok(if b { 0 } else { 1 })
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = std::fs::read_to_string(&cli.graph)
        .map_err(|e| Failure(format!("{}: {e}", cli.graph.display())))?;
    let graph: DefiningGraph = text.parse().map_err(|e| Failure(format!("{}: {e}", cli.graph.display())))?;
    let monoid = SingularMonoid::new(&graph);
    let word = |s: &str| Word::parse(s, &graph);

    match &cli.command {
        Command::Normalize { word: w } => {
            let w = word(w)?;
            let x = monoid.evaluate(&w);
            if w.is_group_word() {
                writeln!(out, "{}", x.group.display(&graph))?;
            } else {
                writeln!(out, "{}", x.display(&graph))?;
            }
            Ok(0)
        }
        Command::Eq { w1, w2 } => decision(out, monoid.equals(&word(w1)?, &word(w2)?)),
        Command::Commute { w1, w2 } => {
            let (a, b) = (word(w1)?, word(w2)?);
            decision(out, monoid.equals(&a.concat(&b), &b.concat(&a)))
        }
        Command::Theta { word: w } => {
            writeln!(out, "{}", monoid.theta(&monoid.evaluate(&word(w)?)).display(&graph))?;
            Ok(0)
        }
        Command::Ord { word: w } => {
            writeln!(out, "{}", monoid.ord(&monoid.evaluate(&word(w)?)))?;
            Ok(0)
        }
        Command::Eta { word: w } => {
            writeln!(out, "{}", eta(&monoid, &monoid.evaluate(&word(w)?)).display(&graph))?;
            Ok(0)
        }
        Command::EtaTrunc { cutoff, word: w } => {
            let w = Word::parse_extended(w, &graph)?;
            write!(out, "{}", eta_tilde(&monoid, &w, *cutoff)?.display(&graph))?;
            Ok(0)
        }
        Command::Ribbon { s, t, word: w } => {
            let w = word(w)?;
            if !w.is_group_word() {
                return Err(Failure("ribbon expects a word without singular letters".into()));
            }
            let alpha = monoid.evaluate(&w).group;
            decision(out, monoid.is_ribbon(&alpha, graph.vertex(s)?, graph.vertex(t)?))
        }
        Command::Frz { family, s, t, k, word: w } => {
            let family = match family {
                FamilyArg::Sigma => Family::Sigma,
                FamilyArg::Tau => Family::Tau,
            };
            let alpha = monoid.evaluate(&word(w)?);
            decision(out, monoid.frz_decide(family, &alpha, graph.vertex(s)?, graph.vertex(t)?, *k)?)
        }
        Command::BirmanScan { max_len, limit } => {
            let report = birman_scan(&graph, *max_len, *limit)?;
            write!(out, "{report}")?;
            Ok(if report.collisions == 0 { 0 } else { 1 })
        }
        Command::NfOrbitCheck { max_syll, max_exp } => {
            if *max_syll > MAX_TUPLE_LEN {
                return Err(Failure(format!("--max-syll must be at most {MAX_TUPLE_LEN}")));
            }
            let reports = check_all_kinds(&graph, *max_syll, *max_exp)?;
            let mut clean = true;
            for r in &reports {
                write!(out, "{r}")?;
                clean &= r.violations == 0;
            }
            Ok(if clean { 0 } else { 1 })
        }
        Command::Lemma42Scan { max_l, max_p } => {
            if *max_p == 0 {
                return Err(Failure("--max-p must be at least 1".into()));
            }
            let report = power_conjugacy_scan(&graph, *max_l, *max_p);
            write!(out, "{report}")?;
            Ok(if report.counterexamples == 0 { 0 } else { 1 })
        }
    }
}
