//! The `cwords` command line.
//!
//! [`dispatch`] parses an argument vector, runs the requested operation and
//! returns the report together with the exit status: `0` for an affirmative
//! verdict, `1` for a negative one, `2` for usage or input errors.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{Map, Value};

use crate::automaton::{self, LengthAnswer};
use crate::constructions::Family;
use crate::crucial;
use crate::error::{Error, Result};
use crate::morphism;
use crate::prohibition::ProhibitionSet;
use crate::reduction::{self, Digraph};
use crate::search::{self, SearchOptions, SearchOutcome};
use crate::words::{Alphabet, Word};

#[derive(Debug, Parser)]
#[command(name = "cwords", version, about = "Free and crucial words for prohibition sets")]
struct Cli {
    /// Emit a single JSON object instead of plain lines.
    #[arg(long, global = true)]
    json: bool,
    /// Leave out the timing line.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Seed for randomized generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for searches.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a word against a prohibition set.
    Free {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long)]
        word: String,
    },
    /// Crucial words: check, search, construct.
    #[command(subcommand)]
    Crucial(CrucialCommand),
    /// Completeness of explicit sets.
    #[command(subcommand)]
    Complete(CompleteCommand),
    /// Generate morphic words.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Digraph to prohibition set reduction.
    #[command(subcommand)]
    Reduce(ReduceCommand),
}

#[derive(Debug, Subcommand)]
enum CrucialCommand {
    Check {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long)]
        word: String,
    },
    MinSearch {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long)]
        bound: usize,
    },
    MaxSearch {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long)]
        bound: usize,
    },
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Also check freeness and cruciality of the result.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Debug, Subcommand)]
enum CompleteCommand {
    Check { setfile: PathBuf },
    Longest { setfile: PathBuf },
    Exists {
        setfile: PathBuf,
        #[arg(long)]
        len: usize,
    },
    VerifyBound {
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    Thue {
        #[arg(long)]
        len: usize,
    },
    S3free {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Debug, Subcommand)]
enum ReduceCommand {
    Encode {
        graphfile: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    Check {
        graphfile: PathBuf,
        #[arg(long)]
        len: usize,
    },
    /// Compare longest path and longest free word, for a graph file or for
    /// seeded random digraphs.
    Crossval {
        graphfile: Option<PathBuf>,
        /// Number of random digraphs to check instead of a file.
        #[arg(long, conflicts_with = "graphfile")]
        random: Option<usize>,
        #[arg(long, default_value_t = 5)]
        vertices: usize,
        #[arg(long, default_value_t = 0.4)]
        density: f64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SetName {
    S1,
    S2,
    S3,
}

#[derive(Debug, Args)]
struct SetArgs {
    /// Alphabet as a string of distinct characters.
    #[arg(long)]
    alphabet: Option<String>,
    /// Parametric set.
    #[arg(long = "set", value_enum, conflicts_with = "set_file")]
    set: Option<SetName>,
    /// Hamming parameter for s3.
    #[arg(long)]
    k: Option<usize>,
    /// Explicit set file.
    #[arg(long)]
    set_file: Option<PathBuf>,
}

impl SetArgs {
    fn load(&self) -> Result<ProhibitionSet> {
        if let Some(path) = &self.set_file {
            return ProhibitionSet::parse_set_file(&read(path)?);
        }
        let name = self
            .set
            .ok_or_else(|| Error::InvalidInput("give --set or --set-file".into()))?;
        let alphabet = Alphabet::new(
            self.alphabet
                .as_deref()
                .ok_or_else(|| Error::InvalidInput("--set needs --alphabet".into()))?,
        )?;
        match name {
            SetName::S1 => Ok(ProhibitionSet::squares(alphabet)),
            SetName::S2 => Ok(ProhibitionSet::abelian_squares(alphabet)),
            SetName::S3 => ProhibitionSet::hamming_pairs(
                alphabet,
                self.k.ok_or_else(|| Error::InvalidInput("--set s3 needs --k".into()))?,
            ),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub status: i32,
    pub report: String,
}

#[derive(Default)]
struct Report {
    fields: Vec<(String, Value, bool)>,
}

impl Report {
    fn field(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.push((key.to_string(), value.into(), false));
        self
    }

    /// A field printed as its bare value in plain mode.
    fn bare(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.push((key.to_string(), value.into(), true));
        self
    }

    fn render(&self, json: bool) -> String {
        if json {
            let map: Map<String, Value> =
                self.fields.iter().map(|(k, v, _)| (k.clone(), v.clone())).collect();
            return format!("{}\n", Value::Object(map));
        }
        let mut out = String::new();
        for (key, value, bare) in &self.fields {
            let text = match value {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            if *bare {
                out.push_str(&text);
            } else {
                out.push_str(&format!("{key}: {text}"));
            }
            out.push('\n');
        }
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Runs the command line `argv` (including the program name).
pub fn dispatch<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let report = if status == 2 {
                let text = e.to_string();
                format!("{}\n", text.lines().next().unwrap_or("error: bad usage"))
            } else {
                e.to_string()
            };
            return CommandOutcome { status, report };
        }
    };
    let started = Instant::now();
    let mut report = Report::default();
    match run(&cli, &mut report) {
        Ok(status) => {
            if !cli.no_timing {
                report.field("time-ms", started.elapsed().as_millis() as u64);
            }
            CommandOutcome { status, report: report.render(cli.json) }
        }
        Err(e) => {
            let mut err = Report::default();
            err.field("error", e.to_string());
            CommandOutcome { status: 2, report: err.render(cli.json) }
        }
    }
}

fn run(cli: &Cli, out: &mut Report) -> Result<i32> {
    let options = SearchOptions { threads: cli.threads, ..SearchOptions::default() };
    match &cli.command {
        Command::Free { set, word } => {
            let set = set.load()?;
            let w = set.alphabet().parse_word(word)?;
            match set.find_violation(&w)? {
                None => {
                    out.field("free", "yes");
                    Ok(0)
                }
                Some(v) => {
                    out.field("free", "no")
                        .field("violation-start", v.start)
                        .field("violation-length", v.length)
                        .field("violation", set.alphabet().render(&v.subword(&w)))
                        .field("kind", v.kind.to_string());
                    Ok(1)
                }
            }
        }
        Command::Crucial(cmd) => run_crucial(cmd, &options, out),
        Command::Complete(cmd) => run_complete(cmd, out),
        Command::Gen(cmd) => run_gen(cmd, out),
        Command::Reduce(cmd) => run_reduce(cmd, cli.seed, out),
    }
}

fn run_crucial(cmd: &CrucialCommand, options: &SearchOptions, out: &mut Report) -> Result<i32> {
    match cmd {
        CrucialCommand::Check { set, word } => {
            let set = set.load()?;
            let alphabet = set.alphabet().clone();
            let w = alphabet.parse_word(word)?;
            match crucial::certify(&w, &set)? {
                Some(cert) => {
                    out.field("crucial", "yes");
                    for (i, ending) in cert.endings.iter().enumerate() {
                        let letter = Word::from(vec![i as u8]);
                        out.field(
                            &format!("ending[{}]", alphabet.render(&letter)),
                            alphabet.render(ending),
                        );
                    }
                    Ok(0)
                }
                None => {
                    out.field("crucial", "no").field("free", yes_no(set.is_free(&w)?));
                    Ok(1)
                }
            }
        }
        CrucialCommand::MinSearch { set, bound } => {
            let set = set.load()?;
            let report = search::search_min_crucial_with(&set, *bound, options)?;
            Ok(search_report(&set, &report, "min-crucial", out))
        }
        CrucialCommand::MaxSearch { set, bound } => {
            let set = set.load()?;
            let report = search::search_max_crucial_with(&set, *bound, options)?;
            Ok(search_report(&set, &report, "max-crucial", out))
        }
        CrucialCommand::Construct { family, n, k, verify } => {
            let family: Family = family.parse()?;
            let word = family.construct(*n, *k)?;
            let set = family.prohibition_set(*n, *k)?;
            out.field("family", family.to_string())
                .field("word", set.alphabet().render(&word))
                .field("length", word.len());
            if *verify {
                let ok = crucial::is_crucial(&word, &set)?;
                out.field("crucial", yes_no(ok));
                return Ok(if ok { 0 } else { 1 });
            }
            Ok(0)
        }
    }
}

fn search_report(
    set: &ProhibitionSet,
    report: &search::SearchReport,
    key: &str,
    out: &mut Report,
) -> i32 {
    let status = match &report.outcome {
        SearchOutcome::Found { word, length } => {
            out.field(key, set.alphabet().render(word)).field("length", *length);
            0
        }
        SearchOutcome::NoneWithinBound { bound } => {
            out.field(key, "none").field("bound", *bound);
            1
        }
        SearchOutcome::UnboundedEvidence { bound, word } => {
            out.field(key, "unbounded-evidence")
                .field("bound", *bound)
                .field("crucial-at-bound", set.alphabet().render(word));
            1
        }
    };
    out.field("explored", report.explored);
    status
}

fn run_complete(cmd: &CompleteCommand, out: &mut Report) -> Result<i32> {
    match cmd {
        CompleteCommand::Check { setfile } => {
            let set = ProhibitionSet::parse_set_file(&read(setfile)?)?;
            let complete = automaton::is_complete(&set)?;
            out.field("complete", yes_no(complete));
            Ok(if complete { 0 } else { 1 })
        }
        CompleteCommand::Longest { setfile } => {
            let set = ProhibitionSet::parse_set_file(&read(setfile)?)?;
            let a = set.automaton().expect("explicit set");
            let answer = a.longest_free_length();
            match answer {
                LengthAnswer::Finite(m) => {
                    let witness = a.longest_free_word().expect("complete set");
                    out.field("longest", m).field("witness", set.alphabet().render(&witness));
                }
                LengthAnswer::Unbounded => {
                    out.field("longest", "unbounded");
                }
            }
            Ok(0)
        }
        CompleteCommand::Exists { setfile, len } => {
            let set = ProhibitionSet::parse_set_file(&read(setfile)?)?;
            let exists = automaton::exists_free_word(&set, *len)?;
            out.field("exists", yes_no(exists));
            Ok(if exists { 0 } else { 1 })
        }
        CompleteCommand::VerifyBound { alphabet, n } => {
            let alphabet = Alphabet::new(alphabet)?;
            let r = automaton::verify_length_bound(&alphabet, *n)?;
            let extremal: Vec<String> = r.extremal_set.iter().map(|w| alphabet.render(w)).collect();
            out.field("observed-max", r.observed_max)
                .field("formula", r.formula)
                .field("match", yes_no(r.matches()))
                .field("subsets", r.subsets)
                .field("complete-subsets", r.complete_subsets)
                .field("extremal-set", extremal.join(" "));
            Ok(if r.matches() { 0 } else { 1 })
        }
    }
}

fn run_gen(cmd: &GenCommand, out: &mut Report) -> Result<i32> {
    match cmd {
        GenCommand::Thue { len } => {
            let w = morphism::fixed_point_prefix(&morphism::Morphism::thue(), 0, *len)?;
            out.bare("word", morphism::thue_alphabet().render(&w));
            Ok(0)
        }
        GenCommand::S3free { k, len, verify } => {
            let w = morphism::generate_s3_free(*k, *len)?;
            let alphabet = morphism::block_alphabet();
            out.bare("word", alphabet.render(&w));
            if *verify {
                let set = ProhibitionSet::hamming_pairs(alphabet, *k)?;
                let free = set.is_free(&w)?;
                out.field("free", yes_no(free));
                return Ok(if free { 0 } else { 1 });
            }
            Ok(0)
        }
    }
}

fn run_reduce(cmd: &ReduceCommand, seed: u64, out: &mut Report) -> Result<i32> {
    match cmd {
        ReduceCommand::Encode { graphfile, output } => {
            let g = Digraph::parse(&read(graphfile)?)?;
            let set = reduction::encode(&g)?.to_prohibition_set()?;
            let text = set.to_set_file().expect("explicit set with symbols");
            std::fs::write(output, text)
                .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", output.display())))?;
            out.field("wrote", output.display().to_string())
                .field("words", set.explicit_words().map_or(0, <[Word]>::len));
            Ok(0)
        }
        ReduceCommand::Check { graphfile, len } => {
            let g = Digraph::parse(&read(graphfile)?)?;
            let words = reduction::decide_via_words(&g, *len)?;
            let paths = reduction::decide_via_paths(&g, *len)?;
            out.field("exists", yes_no(words)).field("path", yes_no(paths)).field("agree", yes_no(words == paths));
            Ok(if words { 0 } else { 1 })
        }
        ReduceCommand::Crossval { graphfile, random, vertices, density } => {
            let graphs = match (graphfile, random) {
                (Some(path), _) => vec![Digraph::parse(&read(path)?)?],
                (None, Some(count)) => {
                    if !(0.0..=1.0).contains(density) {
                        return Err(Error::InvalidParameter("density must lie in [0, 1]".into()));
                    }
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    (0..*count)
                        .map(|_| Digraph::random(*vertices, *density, &mut rng))
                        .collect::<Result<Vec<_>>>()?
                }
                (None, None) => {
                    return Err(Error::InvalidInput("give a graph file or --random".into()))
                }
            };
            let mut all_agree = true;
            for (i, g) in graphs.iter().enumerate() {
                let cv = reduction::cross_validate(g)?;
                all_agree &= cv.agrees();
                if graphs.len() == 1 {
                    out.field("longest-path", cv.longest_path)
                        .field("longest-free-word", cv.longest_free_word);
                    if let Some(a) = cv.automaton_longest {
                        out.field("automaton-longest", a);
                    }
                } else if !cv.agrees() {
                    out.field(&format!("disagree[{i}]"), g.to_text().replace('\n', ";"));
                }
            }
            out.field("graphs", graphs.len()).field("agree", yes_no(all_agree));
            Ok(if all_agree { 0 } else { 1 })
        }
    }
}
