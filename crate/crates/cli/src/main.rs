use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use parikh_core::automata::{minimize, subset_construct, Automaton};
use parikh_core::bounds::{grammar_report, nfa_report};
use parikh_core::determinize::{decompose_nfa, extract_semilinear, nfa_to_parikh_dfa};
use parikh_core::fixtures::{example1_nfa, example1_parikh_dfa, random_grammar, random_nfa, rng};
use parikh_core::grammar::{cfg_to_parikh_2dfa, cfg_to_parikh_dfa, cfg_to_parikh_nfa, decompose_cfg, witness_grammar};
use parikh_core::parikh::parikh_image_bounded;
use parikh_core::twoway::nfa_to_parikh_2dfa;
use parikh_core::unary::{chrobak_normal_form, unary_nfa_to_2dfa, unary_nfa_to_dfa};
use parikh_core::Dfa;
use serde_json::{json, Value};
use thiserror::Error;

mod input;

use input::{load_grammar, load_nfa, Input};

/// Parikh-equivalent determinization of automata and grammars.
#[derive(Parser)]
#[command(name = "parikh", version)]
struct Cli {
    /// Seed for randomly generated fixtures.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Split an NFA (or grammar) into its nonunary and per-letter unary parts.
    Decompose { input: PathBuf },
    /// Semilinear representation of the Parikh image of an NFA.
    Semilinear { input: PathBuf },
    /// Parikh-equivalent complete DFA of an NFA.
    Nfa2pdfa { input: PathBuf },
    /// Parikh-equivalent 2DFA of an NFA.
    Nfa2p2dfa { input: PathBuf },
    /// Parikh-equivalent NFA of a CNF grammar.
    Cfg2pnfa { input: PathBuf },
    /// Parikh-equivalent complete DFA of a CNF grammar.
    Cfg2pdfa { input: PathBuf },
    /// Parikh-equivalent 2DFA of a CNF grammar.
    Cfg2p2dfa { input: PathBuf },
    /// Chrobak normal form of a unary NFA.
    UnaryChrobak { input: PathBuf },
    /// Equivalent DFA of a unary NFA.
    UnaryDfa { input: PathBuf },
    /// Equivalent 2DFA of a unary NFA.
    #[command(name = "unary-2dfa")]
    Unary2dfa { input: PathBuf },
    /// Minimal complete DFA of an NFA or DFA; the size goes to stderr.
    Minimize { input: PathBuf },
    /// Compare bounded Parikh images; exit 1 when they differ.
    Verify {
        /// Largest word length compared.
        #[arg(long, default_value_t = 12)]
        bound: usize,
        first: PathBuf,
        second: PathBuf,
    },
    /// Measured state counts against the expected bounds.
    Report {
        input: PathBuf,
        #[arg(long)]
        csv: bool,
    },
    /// Worked examples.
    Demo { which: Demo },
    /// Write a built-in or random input.
    Fixture {
        which: Fixture,
        /// `h` for `witness` and `random-grammar`, `n` for `random-nfa`.
        #[arg(long, default_value_t = 5)]
        size: usize,
        /// Alphabet size for random inputs.
        #[arg(long, default_value_t = 2)]
        letters: usize,
    },
    /// Graphviz rendering of an automaton or 2DFA.
    Dot { input: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Demo {
    Example1,
    /// A random NFA from `--seed`, converted and checked.
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fixture {
    Example1,
    Example1Pdfa,
    Witness,
    RandomNfa,
    RandomGrammar,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}: {inner}", path.display())]
    Input { path: PathBuf, inner: Box<CliError> },
    #[error("{}: expected {expected}, got {found} input", path.display())]
    WrongInput {
        path: PathBuf,
        expected: &'static str,
        found: &'static str,
    },
    #[error(transparent)]
    Core(#[from] parikh_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn at(self, path: &Path) -> CliError {
        CliError::Input {
            path: path.to_path_buf(),
            inner: Box::new(self),
        }
    }
}

/// What a command produced: text to emit, and whether a check failed.
struct Outcome {
    text: String,
    failed: bool,
}

impl From<String> for Outcome {
    fn from(text: String) -> Self {
        Outcome { text, failed: false }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(cli.output.as_deref(), &out.text) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

fn to_value(json: &str) -> Value {
    serde_json::from_str(json).expect("own output parses")
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let text = match &cli.command {
        Command::Decompose { input } => match Input::load(input)? {
            Input::Grammar(g) => {
                let parts = decompose_cfg(&g);
                json!({
                    "nonunary": to_value(&parts.nonunary.to_json()),
                    "unary": parts.unary_parts.iter().map(|p| to_value(&p.to_json())).collect::<Vec<_>>(),
                })
                .to_string()
            }
            other => {
                let parts = decompose_nfa(&other.into_nfa(input)?);
                json!({
                    "nonunary": to_value(&parts.nonunary.to_json()),
                    "unary": parts.unary_parts.iter().map(|p| to_value(&p.to_json())).collect::<Vec<_>>(),
                })
                .to_string()
            }
        },
        Command::Semilinear { input } => extract_semilinear(&load_nfa(input)?)?.to_json(),
        Command::Nfa2pdfa { input } => nfa_to_parikh_dfa(&load_nfa(input)?)?.to_json(),
        Command::Nfa2p2dfa { input } => nfa_to_parikh_2dfa(&load_nfa(input)?)?.to_json(),
        Command::Cfg2pnfa { input } => cfg_to_parikh_nfa(&load_grammar(input)?).to_json(),
        Command::Cfg2pdfa { input } => cfg_to_parikh_dfa(&load_grammar(input)?)?.to_json(),
        Command::Cfg2p2dfa { input } => cfg_to_parikh_2dfa(&load_grammar(input)?)?.to_json(),
        Command::UnaryChrobak { input } => chrobak_normal_form(&load_nfa(input)?)?.to_json(),
        Command::UnaryDfa { input } => unary_nfa_to_dfa(&load_nfa(input)?)?.to_json(),
        Command::Unary2dfa { input } => unary_nfa_to_2dfa(&load_nfa(input)?)?.to_json(),
        Command::Minimize { input } => {
            let d = match Input::load(input)? {
                Input::Automaton(Automaton::Dfa(d)) => minimize(&d),
                other => minimize(&subset_construct(&other.into_nfa(input)?)),
            };
            eprintln!("minimal DFA: {} states", d.num_states());
            d.to_json()
        }
        Command::Verify { bound, first, second } => return verify(*bound, first, second),
        Command::Report { input, csv } => {
            let report = match Input::load(input)? {
                Input::Grammar(g) => grammar_report(&g)?,
                other => nfa_report(&other.into_nfa(input)?)?,
            };
            if *csv {
                report.to_csv()
            } else {
                report.to_text()
            }
        }
        Command::Demo { which: Demo::Example1 } => demo_example1(),
        Command::Demo { which: Demo::Random } => return demo_random(cli.seed),
        Command::Fixture { which, size, letters } => fixture(*which, *size, *letters, cli.seed)?,
        Command::Dot { input } => match Input::load(input)? {
            Input::Automaton(Automaton::Nfa(a)) => a.to_dot(),
            Input::Automaton(Automaton::Dfa(d)) => d.to_dot(),
            Input::TwoWay(t) => t.to_dot(),
            Input::Grammar(_) => {
                return Err(CliError::WrongInput {
                    path: input.clone(),
                    expected: "an automaton",
                    found: "grammar",
                });
            }
        },
    };
    Ok(text.into())
}

fn verify(bound: usize, first: &Path, second: &Path) -> Result<Outcome, CliError> {
    let a = Input::load(first)?;
    let b = Input::load(second)?;
    if a.alphabet() != b.alphabet() {
        return Err(CliError::Usage(format!(
            "alphabets differ: {:?} vs {:?}",
            a.alphabet().letters(),
            b.alphabet().letters()
        )));
    }
    let (ia, ib) = (a.image(bound), b.image(bound));
    if ia == ib {
        return Ok(format!("OK: {} vectors agree up to length {bound}", ia.len()).into());
    }
    let mut lines = vec![format!("MISMATCH up to length {bound}")];
    lines.extend(ia.difference(&ib).take(10).map(|v| format!("  only in first: {v}")));
    lines.extend(ib.difference(&ia).take(10).map(|v| format!("  only in second: {v}")));
    Ok(Outcome {
        text: lines.join("\n"),
        failed: true,
    })
}

fn demo_example1() -> String {
    let a = example1_nfa();
    let minimal = minimize(&subset_construct(&a));
    let fixture = example1_parikh_dfa();
    let ok = parikh_image_bounded(&a, 250) == parikh_image_bounded(&fixture, 250);
    format!(
        "input NFA: {} states; minimal equivalent DFA: {}; Parikh-equivalent DFA fixture: {}; verify(bound=250): {}",
        a.num_states(),
        minimal.num_states(),
        fixture.num_states(),
        if ok { "OK" } else { "MISMATCH" }
    )
}

fn demo_random(seed: u64) -> Result<Outcome, CliError> {
    let a = random_nfa(&mut rng(seed), 5, 2, 0.3);
    let d: Dfa = nfa_to_parikh_dfa(&a)?;
    let ok = parikh_image_bounded(&a, 12) == parikh_image_bounded(&d, 12);
    Ok(Outcome {
        text: format!(
            "seed {seed}: input NFA: {} states; minimal equivalent DFA: {}; Parikh-equivalent DFA: {}; verify(bound=12): {}",
            a.num_states(),
            minimize(&subset_construct(&a)).num_states(),
            d.num_states(),
            if ok { "OK" } else { "MISMATCH" }
        ),
        failed: !ok,
    })
}

fn fixture(which: Fixture, size: usize, letters: usize, seed: u64) -> Result<String, CliError> {
    Ok(match which {
        Fixture::Example1 => example1_nfa().to_json(),
        Fixture::Example1Pdfa => example1_parikh_dfa().to_json(),
        Fixture::Witness => witness_grammar(size)?.to_json(),
        Fixture::RandomNfa => {
            check_size(size, letters)?;
            random_nfa(&mut rng(seed), size, letters, 0.3).to_json()
        }
        Fixture::RandomGrammar => {
            check_size(size, letters)?;
            random_grammar(&mut rng(seed), size, letters).to_json()
        }
    })
}

fn check_size(size: usize, letters: usize) -> Result<(), CliError> {
    if size == 0 || letters == 0 {
        return Err(CliError::Usage("--size and --letters must be positive".into()));
    }
    Ok(())
}
