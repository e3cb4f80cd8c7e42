//! `regint`: membership checks, deciders, witness search, reductions and
//! solvers from the command line.
//!
//! Every invocation prints one JSON document on stdout. The exit code is the
//! verdict: 0 for yes, 1 for no, 2 for malformed input or any other error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use regint_core::automata::{regex::is_metacharacter, Alphabet, Automaton};
use regint_core::deciders::{decide_intreg_sequential_string_eq, decide_intreg_unary_shuffled};
use regint_core::problems::{
    check_bpcp, member_bounded_tiling, member_bpcp, member_corridor_tiling, member_machine_language,
    member_sequential_string_eq, member_shuffled_regex_eq, member_shuffled_string_eq, solve_bounded_tiling,
    solve_corridor_tiling, MachineMode, PcpJson, ProblemError, TilingInstanceJson, TilingVariant, TmSpec,
};
use regint_core::reductions::{
    reduce_ntm_to_tiles, reduce_ntm_to_tiling_lang, reduce_pcp_to_bpcp_lang, reduce_pcp_to_shuffled_regex,
    reduce_tm_to_machine_lang, GeneratedLanguage,
};
use regint_core::{find_witness_parallel, SearchBudget};

const WORKER_ENV: &str = "REGINT_WORKER_COUNT";

#[derive(Parser)]
#[command(name = "regint", version, about = "Regular intersection emptiness toolkit")]
struct Cli {
    /// Report elapsed times as 0 so repeated runs print identical output.
    #[arg(long, global = true)]
    deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test one word for membership in a problem language.
    Check {
        #[arg(long)]
        problem: ProblemId,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[command(flatten)]
        letters: Letters,
    },
    /// Run one of the deciders on a DFA.
    Decide {
        #[arg(long)]
        problem: DecidableProblem,
        #[arg(long)]
        dfa: PathBuf,
        #[command(flatten)]
        letters: Letters,
    },
    /// Search an automaton's language for a word of a problem language.
    Search {
        #[arg(long)]
        problem: ProblemId,
        #[arg(long)]
        automaton: PathBuf,
        #[arg(long, default_value_t = 20)]
        max_len: usize,
        #[arg(long)]
        max_words: Option<u64>,
        /// Wall-clock limit in seconds.
        #[arg(long)]
        timeout: Option<f64>,
        #[command(flatten)]
        letters: Letters,
    },
    /// Build the automaton (or tile set) of a reduction.
    Reduce {
        kind: ReductionKind,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "bounded")]
        variant: Variant,
        #[arg(long, default_value_t = '_')]
        pad: char,
    },
    /// Solve a tiling or bounded-PCP instance.
    Solve {
        kind: SolveKind,
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(clap::Args)]
struct Letters {
    /// Base alphabet as a string of letters; inferred when omitted.
    #[arg(long)]
    alphabet: Option<String>,
    #[arg(long, default_value_t = '_')]
    pad: char,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProblemId {
    ShuffledStringEq,
    SequentialStringEq,
    UnaryShuffledStringEq,
    ShuffledRegexEq,
    Bpcp,
    BoundedTiling,
    CorridorTiling,
    MachineNl,
    MachineNp,
    MachinePspace,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecidableProblem {
    SequentialStringEq,
    UnaryShuffledStringEq,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReductionKind {
    PcpToShuffledRegex,
    PcpToBpcp,
    TmToMachineLang,
    NtmToTiles,
    NtmToTilingLang,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveKind {
    BoundedTiling,
    CorridorTiling,
    Bpcp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Bounded,
    Corridor,
}

impl From<Variant> for TilingVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Bounded => TilingVariant::Bounded,
            Variant::Corridor => TilingVariant::Corridor,
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Schema { path: PathBuf, source: serde_json::Error },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error(transparent)]
    Automata(#[from] regint_core::AutomataError),
    #[error(transparent)]
    Reduction(#[from] regint_core::ReductionError),
}

/// The JSON document to print and the exit code.
struct Reply {
    body: Value,
    code: u8,
}

impl Reply {
    fn verdict(yes: bool, body: Value) -> Self {
        Reply {
            body,
            code: if yes { 0 } else { 1 },
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => return emit(&json!({ "error": e.render().to_string().trim_end() }), 2),
    };
    match run(cli) {
        Ok(reply) => emit(&reply.body, reply.code),
        Err(e) => emit(&json!({ "error": e.to_string() }), 2),
    }
}

fn emit(body: &Value, code: u8) -> ExitCode {
    println!("{body}");
    ExitCode::from(code)
}

fn run(cli: Cli) -> Result<Reply, CliError> {
    match cli.command {
        Command::Check { problem, word, letters } => {
            let checker = Checker::for_word(problem, &letters, &word)?;
            let member = checker.check(&word)?;
            Ok(Reply::verdict(
                member,
                json!({ "problem": problem_name(problem), "word": word, "member": member }),
            ))
        }
        Command::Decide { problem, dfa, letters } => decide(problem, &dfa, &letters),
        Command::Search {
            problem,
            automaton,
            max_len,
            max_words,
            timeout,
            letters,
        } => {
            let automaton = load_automaton(&automaton)?;
            let checker = Checker::for_alphabet(problem, &letters, automaton.alphabet())?;
            let wall_clock = match timeout {
                Some(s) if s.is_finite() && s > 0.0 => Duration::from_secs_f64(s),
                Some(s) => return Err(CliError::Invalid(format!("timeout: expected positive seconds, got {s}"))),
                None => SearchBudget::length_only(max_len).wall_clock_limit,
            };
            let budget = SearchBudget::new(max_len, max_words.unwrap_or(u64::MAX), wall_clock);
            let report = find_witness_parallel(&automaton, |w| checker.check(w), budget, worker_count()?)
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            let found = report.witness().is_some();
            Ok(Reply::verdict(found, report.to_json(cli.deterministic)))
        }
        Command::Reduce {
            kind,
            input,
            out,
            variant,
            pad,
        } => {
            let document = reduce(kind, &input, variant, pad)?;
            match out {
                Some(path) => {
                    let text = serde_json::to_string_pretty(&document).expect("JSON value serializes");
                    fs::write(&path, text + "\n").map_err(|source| CliError::Write {
                        path: path.clone(),
                        source,
                    })?;
                    Ok(Reply::verdict(true, json!({ "written": path, "kind": reduction_name(kind) })))
                }
                None => Ok(Reply::verdict(true, document)),
            }
        }
        Command::Solve { kind, input } => solve(kind, &input),
    }
}

fn worker_count() -> Result<usize, CliError> {
    match std::env::var(WORKER_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Invalid(format!("{WORKER_ENV}: expected a positive integer, got {v:?}"))),
        Err(_) => Ok(1),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read(path)?).map_err(|source| CliError::Schema {
        path: path.to_path_buf(),
        source,
    })
}

fn load_automaton(path: &Path) -> Result<Automaton, CliError> {
    Automaton::from_json_str(&read(path)?).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

fn problem_name(p: ProblemId) -> String {
    p.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn reduction_name(k: ReductionKind) -> String {
    k.to_possible_value().expect("no skipped variants").get_name().to_string()
}

/// A problem language with its alphabet fixed.
struct Checker {
    problem: ProblemId,
    alphabet: Alphabet,
    pad: char,
}

impl Checker {
    fn for_word(problem: ProblemId, letters: &Letters, word: &str) -> Result<Self, CliError> {
        Self::for_alphabet(problem, letters, &word.chars().collect())
    }

    /// Without `--alphabet`, the base alphabet is `seen` minus the pad and
    /// the problem's own separators.
    fn for_alphabet(problem: ProblemId, letters: &Letters, seen: &Alphabet) -> Result<Self, CliError> {
        let pad = letters.pad;
        let alphabet = match &letters.alphabet {
            Some(given) => {
                let a = Alphabet::from_str_chars(given);
                if a.contains(pad) {
                    return Err(CliError::Invalid(format!("alphabet: contains the pad {pad:?}")));
                }
                a
            }
            None => match problem {
                ProblemId::ShuffledRegexEq => seen.without(seen.iter().filter(|&c| is_metacharacter(c))),
                ProblemId::SequentialStringEq => seen.without([pad, '$']),
                _ => seen.without([pad]),
            },
        };
        if problem == ProblemId::UnaryShuffledStringEq && letters.alphabet.is_some() && alphabet.len() != 1 {
            return Err(CliError::Invalid("alphabet: the unary problem needs exactly one letter".into()));
        }
        Ok(Checker { problem, alphabet, pad })
    }

    fn check(&self, word: &str) -> Result<bool, ProblemError> {
        let (a, pad) = (&self.alphabet, self.pad);
        Ok(match self.problem {
            ProblemId::ShuffledStringEq => member_shuffled_string_eq(word, a, pad),
            ProblemId::SequentialStringEq => member_sequential_string_eq(word, a, pad),
            ProblemId::UnaryShuffledStringEq => a.len() <= 1 && member_shuffled_string_eq(word, a, pad),
            ProblemId::ShuffledRegexEq => member_shuffled_regex_eq(word, a),
            ProblemId::Bpcp => member_bpcp(word),
            ProblemId::BoundedTiling => member_bounded_tiling(word),
            ProblemId::CorridorTiling => member_corridor_tiling(word)?,
            ProblemId::MachineNl => member_machine_language(word, MachineMode::Nl)?,
            ProblemId::MachineNp => member_machine_language(word, MachineMode::Np)?,
            ProblemId::MachinePspace => member_machine_language(word, MachineMode::Pspace)?,
        })
    }
}

fn decide(problem: DecidableProblem, path: &Path, letters: &Letters) -> Result<Reply, CliError> {
    let dfa = load_automaton(path)?.to_dfa();
    let pad = letters.pad;
    let given = letters.alphabet.as_deref().map(Alphabet::from_str_chars);
    match problem {
        DecidableProblem::SequentialStringEq => {
            let base = given.unwrap_or_else(|| dfa.alphabet().without([pad, '$']));
            let decision = decide_intreg_sequential_string_eq(&dfa, &base, pad)?;
            Ok(Reply::verdict(
                decision.nonempty,
                json!({
                    "problem": "sequential-string-eq",
                    "nonempty": decision.nonempty,
                    "witness": decision.witness,
                }),
            ))
        }
        DecidableProblem::UnaryShuffledStringEq => {
            let base = given.unwrap_or_else(|| dfa.alphabet().without([pad]));
            let &[letter] = base.symbols() else {
                return Err(CliError::Invalid(format!(
                    "alphabet: the unary problem needs exactly one letter besides the pad, got {base}"
                )));
            };
            let nonempty = decide_intreg_unary_shuffled(&dfa, letter, pad)?;
            Ok(Reply::verdict(
                nonempty,
                json!({ "problem": "unary-shuffled-string-eq", "nonempty": nonempty }),
            ))
        }
    }
}

fn language_document(lang: GeneratedLanguage) -> Value {
    serde_json::to_value(lang.to_json()).expect("generated language serializes")
}

fn reduce(kind: ReductionKind, input: &Path, variant: Variant, pad: char) -> Result<Value, CliError> {
    let pcp = || -> Result<_, CliError> { Ok(parse_json::<PcpJson>(input)?.into_instance()?) };
    let tm = || parse_json::<TmSpec>(input);
    Ok(match kind {
        ReductionKind::PcpToShuffledRegex => language_document(reduce_pcp_to_shuffled_regex(&pcp()?, pad)?),
        ReductionKind::PcpToBpcp => language_document(reduce_pcp_to_bpcp_lang(&pcp()?)?),
        ReductionKind::TmToMachineLang => language_document(reduce_tm_to_machine_lang(&tm()?)?),
        ReductionKind::NtmToTilingLang => language_document(reduce_ntm_to_tiling_lang(&tm()?, variant.into())?),
        ReductionKind::NtmToTiles => {
            let tiles = reduce_ntm_to_tiles(&tm()?)?;
            let mut doc = serde_json::to_value(tiles.to_json()).expect("tile set serializes");
            doc["serialized"] = Value::String(tiles.serialize());
            doc
        }
    })
}

fn solve(kind: SolveKind, input: &Path) -> Result<Reply, CliError> {
    let none = || Reply::verdict(false, Value::String("none".into()));
    match kind {
        SolveKind::Bpcp => {
            let doc: PcpJson = parse_json(input)?;
            let bound = doc
                .k
                .ok_or_else(|| CliError::Invalid("k: the bound is required".into()))?;
            let instance = doc.into_instance()?;
            Ok(match check_bpcp(&instance, bound) {
                Some(solution) => Reply::verdict(true, json!({ "indices": solution.indices, "bound": solution.bound })),
                None => none(),
            })
        }
        SolveKind::BoundedTiling | SolveKind::CorridorTiling => {
            let expected = match kind {
                SolveKind::BoundedTiling => TilingVariant::Bounded,
                _ => TilingVariant::Corridor,
            };
            let instance = parse_json::<TilingInstanceJson>(input)?.into_instance()?;
            if instance.variant() != expected {
                return Err(CliError::Invalid(format!(
                    "variant: expected {}",
                    serde_json::to_value(expected).expect("variant serializes")
                )));
            }
            let tiling = match expected {
                TilingVariant::Bounded => solve_bounded_tiling(&instance),
                TilingVariant::Corridor => solve_corridor_tiling(&instance)?.map(|(_, t)| t),
            };
            Ok(match tiling {
                Some(t) => {
                    let rows: Vec<Vec<usize>> = t.grid.chunks(t.width).map(<[usize]>::to_vec).collect();
                    Reply::verdict(true, json!({ "width": t.width, "height": t.height, "rows": rows }))
                }
                None => none(),
            })
        }
    }
}
