use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use nbhood_core::distance::DEFAULT_ALIGNMENT_BUDGET;
use nbhood_core::neighborhood::{enumerate_kind, DEFAULT_ORACLE_BUDGET};
use nbhood_core::verify::{
    extremal_scan, run_verification, table1, CheckGroup, ExtremalReport, ScanMode, VerifyConfig,
};
use nbhood_core::{
    bound_f, brute_force_enumerate, conjecture_bound, count, leftmost_optimal_alignment, levenshtein,
    optimal_alignment, unary_cn_size, unary_scn_size, Alphabet, NeighborhoodKind, Word,
};

const BUDGET_VAR: &str = "NBHOOD_BUDGET";

#[derive(Parser)]
#[command(name = "nbhood", version, about = "Levenshtein neighborhoods, exact counts and bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct AlphabetArgs {
    /// Use the first S letters a..z.
    #[arg(long, value_name = "S")]
    sigma: Option<usize>,
    /// Explicit alphabet symbols, in order; overrides --sigma.
    #[arg(long)]
    alphabet: Option<String>,
}

impl AlphabetArgs {
    fn resolve(&self) -> Result<Option<Alphabet>, String> {
        let alphabet = match (&self.alphabet, self.sigma) {
            (Some(spec), _) => Alphabet::new(spec),
            (None, Some(s)) => Alphabet::first_letters(s),
            (None, None) => return Ok(None),
        };
        alphabet.map(Some).map_err(|e| e.to_string())
    }

    fn require(&self) -> Result<Alphabet, String> {
        self.resolve()?.ok_or_else(|| "one of --sigma or --alphabet is required".into())
    }
}

#[derive(clap::Args)]
struct Params {
    #[arg(long, value_name = "W")]
    length: u64,
    #[arg(long, value_name = "D")]
    dist: u64,
    #[arg(long, value_name = "S")]
    sigma: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormulaKind {
    UnaryCn,
    UnaryScn,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundKind {
    F,
    Conjecture,
}

#[derive(Subcommand)]
enum Command {
    /// Edit distance between two words.
    Dist {
        u: String,
        v: String,
        #[command(flatten)]
        alphabet: AlphabetArgs,
        /// Also print an optimal alignment.
        #[arg(long)]
        alignment: bool,
        /// Also print the leftmost optimal alignment.
        #[arg(long)]
        leftmost: bool,
    },
    /// Enumerate or count a neighborhood.
    Enum {
        #[arg(long)]
        word: String,
        #[arg(long)]
        dist: usize,
        #[command(flatten)]
        alphabet: AlphabetArgs,
        #[arg(long, default_value = "full")]
        kind: NeighborhoodKind,
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Use the brute-force enumerator instead of the trie walk.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Closed-form neighborhood size of a unary word.
    Formula {
        #[arg(value_enum)]
        kind: FormulaKind,
        #[command(flatten)]
        params: Params,
    },
    /// Upper bounds on the condensed neighborhood size.
    Bound {
        #[arg(value_enum)]
        kind: BoundKind,
        #[command(flatten)]
        params: Params,
        /// Also print the exact rational value.
        #[arg(long)]
        exact_rational: bool,
    },
    /// Both bound panels for s = 2 and w in {4, 6, 8, 10}.
    Table1 {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cross-check everything against brute force.
    Verify {
        /// Alphabet sizes, one per scope.
        #[arg(long, value_delimiter = ',', default_values_t = [2, 3])]
        sigma: Vec<usize>,
        /// Longest query per scope, paired with --sigma.
        #[arg(long, value_delimiter = ',', default_values_t = [6, 4])]
        max_length: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        max_dist: usize,
        #[arg(long)]
        budget: Option<u128>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        random_cases: usize,
        #[arg(long, default_value_t = 20)]
        lemma_max_length: u64,
        #[arg(long, value_delimiter = ',', default_values_t = [2, 3, 4])]
        lemma_sigma: Vec<u64>,
        /// Run only these check groups.
        #[arg(long, value_delimiter = ',')]
        check: Vec<CheckGroup>,
        /// Print at most this many failures per check.
        #[arg(long, default_value_t = 20)]
        show: usize,
    },
    /// Words of a given length with the smallest and largest neighborhoods.
    Extremal {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        dist: usize,
        #[command(flatten)]
        alphabet: AlphabetArgs,
        #[arg(long, default_value = "condensed")]
        kind: NeighborhoodKind,
        /// Sample this many words instead of scanning all of them.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<u128>,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(2),
    }
}

fn budget(flag: Option<u128>) -> Result<u128, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{BUDGET_VAR} must be a decimal integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_ORACLE_BUDGET),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match command {
        Command::Dist {
            u,
            v,
            alphabet,
            alignment,
            leftmost,
        } => {
            let alphabet = match alphabet.resolve()? {
                Some(a) => a,
                None => inferred_alphabet(&u, &v)?,
            };
            let (u, v) = (alphabet.word(&u)?, alphabet.word(&v)?);
            writeln!(out, "{}", levenshtein(&u, &v)?)?;
            if alignment {
                writeln!(out, "{}", optimal_alignment(&u, &v)?.render())?;
            }
            if leftmost {
                writeln!(out, "{}", leftmost_optimal_alignment(&u, &v)?.render())?;
            }
        }
        Command::Enum {
            word,
            dist,
            alphabet,
            kind,
            count_only,
            format,
            output,
            oracle,
            budget: flag,
        } => {
            let alphabet = alphabet.require()?;
            let query = alphabet.word(&word)?;
            let result = if oracle {
                brute_force_enumerate(&query, dist, &alphabet, kind, budget(flag)?)?
            } else if count_only {
                nbhood_core::NeighborhoodResult {
                    count: count(&query, dist, &alphabet, kind)?,
                    query: query.clone(),
                    d: dist,
                    kind,
                    words: None,
                }
            } else {
                enumerate_kind(&query, dist, &alphabet, kind)?
            };
            let words = (!count_only).then(|| result.words());
            let mut sink: Box<dyn Write> = match output {
                Some(path) => Box::new(File::create(path)?),
                None => Box::new(out),
            };
            match format {
                Format::Text => match words {
                    Some(words) => {
                        for w in words {
                            writeln!(sink, "{w}")?;
                        }
                    }
                    None => writeln!(sink, "{}", result.count)?,
                },
                Format::Json => {
                    let mut obj = json!({
                        "query": query.to_string(),
                        "distance": dist,
                        "alphabet": alphabet.to_string(),
                        "kind": kind.as_str(),
                        "count": result.count.to_string(),
                    });
                    if let Some(words) = words {
                        obj["words"] = words.iter().map(|w| w.to_string()).collect();
                    }
                    writeln!(sink, "{obj}")?;
                }
                Format::Csv => {
                    let mut csv = csv::Writer::from_writer(sink);
                    match words {
                        Some(words) => {
                            csv.write_record(["word"])?;
                            for w in words {
                                csv.write_record([w.to_string()])?;
                            }
                        }
                        None => {
                            csv.write_record(["query", "distance", "alphabet", "kind", "count"])?;
                            csv.write_record([
                                query.to_string(),
                                dist.to_string(),
                                alphabet.to_string(),
                                kind.as_str().to_string(),
                                result.count.to_string(),
                            ])?;
                        }
                    }
                    csv.flush()?;
                }
            }
        }
        Command::Formula { kind, params } => {
            let f = match kind {
                FormulaKind::UnaryCn => unary_cn_size,
                FormulaKind::UnaryScn => unary_scn_size,
            };
            writeln!(out, "{}", f(params.length, params.dist, params.sigma)?)?;
        }
        Command::Bound {
            kind,
            params,
            exact_rational,
        } => {
            let Params { length: w, dist: d, sigma: s } = params;
            match kind {
                BoundKind::F => writeln!(out, "{}", bound_f(w, d, s)?)?,
                BoundKind::Conjecture => {
                    let exact = conjecture_bound(w, d, s)?;
                    writeln!(out, "{}", exact.floor())?;
                    if exact_rational {
                        writeln!(out, "{exact}")?;
                    }
                }
            }
        }
        Command::Table1 { format } => write_table1(&mut out, format)?,
        Command::Verify {
            sigma,
            max_length,
            max_dist,
            budget: flag,
            seed,
            random_cases,
            lemma_max_length,
            lemma_sigma,
            check,
            show,
        } => {
            if sigma.len() != max_length.len() {
                return Err(Failure::Usage("--sigma and --max-length need the same number of entries".into()));
            }
            let oracle_budget = budget(flag)?;
            if oracle_budget == 0 {
                return Err(Failure::Usage("budget must be positive".into()));
            }
            let config = VerifyConfig {
                scopes: sigma.into_iter().zip(max_length).collect(),
                max_dist,
                random_cases,
                seed,
                oracle_budget,
                alignment_budget: DEFAULT_ALIGNMENT_BUDGET,
                lemma_max_w: lemma_max_length,
                lemma_sigmas: lemma_sigma,
                only: check,
                ..VerifyConfig::default()
            };
            let summary = run_verification(&config)?;
            for c in &summary.checks {
                let status = match (c.passed(), c.advisory) {
                    (true, _) => "PASS",
                    (false, true) => "NOTE",
                    (false, false) => "FAIL",
                };
                writeln!(out, "{status} {:<26} cases={:<6} failures={}", c.name, c.cases, c.failures.len())?;
            }
            for c in summary.checks.iter().filter(|c| !c.passed()) {
                writeln!(out)?;
                for f in c.failures.iter().take(show) {
                    writeln!(out, "{f}")?;
                }
                if c.failures.len() > show {
                    writeln!(out, "[{}] ... {} more", c.name, c.failures.len() - show)?;
                }
            }
            writeln!(out)?;
            writeln!(
                out,
                "cases={} failures={} findings={} elapsed={:.2}s",
                summary.cases_run(),
                summary.failures().count(),
                summary.findings().count(),
                summary.elapsed.as_secs_f64()
            )?;
            if !summary.passed() {
                return Err(Failure::Verification);
            }
        }
        Command::Extremal {
            length,
            dist,
            alphabet,
            kind,
            samples,
            seed,
            budget: flag,
        } => {
            let alphabet = alphabet.require()?;
            let mode = match samples {
                Some(samples) => ScanMode::Sampled { seed, samples },
                None => ScanMode::Exhaustive,
            };
            let report = extremal_scan(length, dist, &alphabet, kind, mode, budget(flag)?)?;
            write_extremal(&mut out, &report)?;
        }
    }
    Ok(())
}

fn inferred_alphabet(u: &str, v: &str) -> Result<Alphabet, Failure> {
    let mut chars: Vec<char> = u.chars().chain(v.chars()).collect();
    chars.sort_unstable();
    chars.dedup();
    if chars.is_empty() {
        chars.push('a');
    }
    Ok(Alphabet::new(&chars.into_iter().collect::<String>())?)
}

fn write_table1(out: &mut impl Write, format: Format) -> Result<(), Failure> {
    let cells = table1();
    match format {
        Format::Text => {
            for c in &cells {
                writeln!(out, "({}) w={:<2} d={:<2} {}", c.panel, c.w, c.d, c.value)?;
            }
        }
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(out);
            csv.write_record(["panel", "w", "d", "value"])?;
            for c in &cells {
                csv.write_record([c.panel.to_string(), c.w.to_string(), c.d.to_string(), c.value.to_string()])?;
            }
            csv.flush()?;
        }
        Format::Json => {
            let rows: Vec<_> = cells
                .iter()
                .map(|c| json!({"panel": c.panel.to_string(), "w": c.w, "d": c.d, "value": c.value.to_string()}))
                .collect();
            writeln!(out, "{}", json!({"sigma": 2, "cells": rows}))?;
        }
    }
    Ok(())
}

fn write_extremal(out: &mut impl Write, r: &ExtremalReport) -> io::Result<()> {
    let mode = match r.mode {
        ScanMode::Exhaustive => "exhaustive".to_string(),
        ScanMode::Sampled { seed, samples } => format!("sampled seed={seed} samples={samples}"),
    };
    writeln!(out, "w={} d={} s={} kind={} mode={mode} scanned={}", r.w, r.d, r.s, r.kind, r.scanned)?;
    let list = |ws: &[Word]| ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ");
    writeln!(out, "min {} : {}", r.min_count, list(&r.minimizers))?;
    writeln!(out, "max {} : {}", r.max_count, list(&r.maximizers))
}
