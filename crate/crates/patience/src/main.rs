use std::io::{self, Write};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use patience::json::{self, tableau_to_json, words_to_json};
use patience::tables::{self, TableRow};
use patience::{dot, parallel, scan, OutputFormat, RunConfig};
use patience_core::conjugacy::{evsim, lsim_bounded, osim_bounded, psim_witness, tpsim_witness, ConjugacyVerdict};
use patience_core::insertion::{column_reading, delayed_column_readings, equivalent, insert_word};
use patience_core::presentation::congruence_closure;
use patience_core::shiftgraph::{cocharge, path_to_center, path_to_center_repeated_min, ShiftGraph};
use patience_core::{Evaluation, Guard, PsTableau, Variant, Word};

#[derive(Parser)]
#[command(name = "patience", version, about = "Left and right Patience Sorting monoids")]
struct Cli {
    /// left or right
    #[arg(long, global = true)]
    variant: Option<Variant>,

    #[arg(long, global = true, default_value = "text")]
    format: OutputFormat,

    /// Largest number of words a command may enumerate.
    #[arg(long, global = true, env = "PATIENCE_GUARD")]
    guard: Option<u64>,

    /// Longest conjugator tried by bounded searches (default |u| + 4).
    #[arg(long, global = true)]
    bound: Option<usize>,

    #[arg(long, global = true, default_value_t = 1)]
    parallelism: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Relation {
    Psim,
    Tpsim,
    Lsim,
    Osim,
    Evsim,
}

#[derive(Subcommand)]
enum Command {
    /// Insert a word and print its tableau.
    Insert { word: String },
    /// Column reading of the tableau of a word.
    Reading {
        word: String,
        /// Delayed column readings instead (right variant).
        #[arg(long)]
        delayed: bool,
    },
    /// Whether two words give the same tableau.
    Equiv { u: String, v: String },
    /// Every word congruent to the given one.
    Closure { word: String },
    /// Connected component of the cyclic shift graph.
    Component {
        word: Option<String>,
        /// Use the whole class of this evaluation, e.g. "(4,1,4)".
        #[arg(long, conflicts_with = "word")]
        evaluation: Option<Evaluation>,
    },
    /// Vertex counts and diameters as CSV.
    Tables {
        /// Standard rows for lengths 1..=N.
        #[arg(long, default_value_t = 0)]
        max_len: usize,
        /// Extra rows, repeatable.
        #[arg(long)]
        evaluation: Vec<Evaluation>,
    },
    /// Cocharge sequence of a standard word.
    Cocharge { word: String },
    /// Decide a conjugacy relation between the tableaux of two words.
    Conj {
        #[arg(long, value_enum)]
        relation: Relation,
        u: String,
        v: String,
    },
    /// Shift path from a right element to the central element of its class.
    CenterPath {
        word: String,
        /// Head for the repeated-minimum target instead.
        #[arg(long)]
        repeated_min: bool,
    },
    /// Diameters of all classes with content {1..n}, against the known bounds.
    ConjectureScan {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 50_000)]
        max_class_size: u64,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
}

fn parse_word(s: &str) -> anyhow::Result<Word> {
    s.parse().with_context(|| format!("cannot parse word `{s}`"))
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    if cli.parallelism == 0 {
        bail!("--parallelism must be at least 1");
    }
    let guard = match cli.guard {
        Some(g) => Guard::new(g).context("--guard must be at least 1")?,
        None => Guard::DEFAULT,
    };
    let config = RunConfig {
        variant: cli.variant,
        guard,
        conj_bound: cli.bound,
        format: cli.format,
        parallelism: cli.parallelism,
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Insert { word } => {
            let t = insert_word(&parse_word(&word)?, config.variant()?);
            match config.format {
                OutputFormat::Json => writeln!(out, "{}", tableau_to_json(&t))?,
                _ => write!(out, "{}", diagram(&t))?,
            }
        }
        Command::Reading { word, delayed } => {
            let t = insert_word(&parse_word(&word)?, config.variant()?);
            if delayed {
                let readings = delayed_column_readings(&t)?;
                match config.format {
                    OutputFormat::Json => writeln!(out, "{}", words_to_json(&readings))?,
                    _ => readings.iter().try_for_each(|w| writeln!(out, "{w}"))?,
                }
            } else {
                let r = column_reading(&t);
                match config.format {
                    OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&r.to_string())?)?,
                    _ => writeln!(out, "{r}")?,
                }
            }
        }
        Command::Equiv { u, v } => {
            let same = equivalent(&parse_word(&u)?, &parse_word(&v)?, config.variant()?);
            match config.format {
                OutputFormat::Json => writeln!(out, "{{\"equivalent\":{same}}}")?,
                _ => writeln!(out, "{same}")?,
            }
        }
        Command::Closure { word } => {
            let words = congruence_closure(&parse_word(&word)?, config.variant()?, config.guard)?;
            match config.format {
                OutputFormat::Json => writeln!(out, "{}", words_to_json(&words))?,
                _ => words.iter().try_for_each(|w| writeln!(out, "{w}"))?,
            }
        }
        Command::Component { word, evaluation } => {
            let variant = config.variant()?;
            let g = match (word, evaluation) {
                (Some(w), None) => ShiftGraph::component_of(&insert_word(&parse_word(&w)?, variant), config.guard)?,
                (None, Some(e)) => ShiftGraph::class_graph(&e, variant, config.guard)?,
                _ => bail!("give a word or --evaluation"),
            };
            let d = parallel::diameter(&g, config.parallelism)?;
            let summary = format!(
                "vertices={} diameter={}",
                g.vertex_count(),
                d.map_or_else(|| "disconnected".to_owned(), |d| d.to_string())
            );
            match config.format {
                OutputFormat::Json => {
                    writeln!(out, "{}", json::graph_to_json(&g, d))?;
                    eprintln!("{summary}");
                }
                OutputFormat::Dot => {
                    write!(out, "{}", dot::graph_to_dot(&g))?;
                    eprintln!("{summary}");
                }
                _ => writeln!(out, "{summary}")?,
            }
        }
        Command::Tables { max_len, evaluation } => {
            let variant = config.variant.unwrap_or(Variant::Right);
            let mut rows = tables::standard_rows(max_len, variant, config.guard, config.parallelism)?;
            for e in &evaluation {
                rows.push(tables::compute_row(e, variant, config.guard, config.parallelism)?);
            }
            match config.format {
                OutputFormat::Json => writeln!(out, "{}", rows_to_json(&rows))?,
                _ => tables::write_csv(&rows, &mut out)?,
            }
        }
        Command::Cocharge { word } => {
            let c = cocharge(&parse_word(&word)?)?;
            match config.format {
                OutputFormat::Json => writeln!(out, "{}", json::cocharge_to_json(&c))?,
                _ => writeln!(out, "{c}")?,
            }
        }
        Command::Conj { relation, u, v } => {
            let variant = config.variant()?;
            let (u, v) = (insert_word(&parse_word(&u)?, variant), insert_word(&parse_word(&v)?, variant));
            let verdict = decide(relation, &u, &v, &config)?;
            match config.format {
                OutputFormat::Json => writeln!(out, "{}", json::verdict_to_json(&verdict))?,
                _ => {
                    write!(out, "{}", verdict.status)?;
                    if let Some(w) = &verdict.witness {
                        write!(out, " witness={}", if w.is_empty() { "ε".to_owned() } else { w.to_string() })?;
                    }
                    if let Some(b) = verdict.bound {
                        write!(out, " bound={b}")?;
                    }
                    writeln!(out)?;
                }
            }
        }
        Command::CenterPath { word, repeated_min } => {
            if config.variant.is_some_and(|v| v != Variant::Right) {
                bail!("center paths are defined for the right variant");
            }
            let t = insert_word(&parse_word(&word)?, Variant::Right);
            let path = if repeated_min { path_to_center_repeated_min(&t)? } else { path_to_center(&t)? };
            match config.format {
                OutputFormat::Json => writeln!(out, "{}", json::path_to_json(&path))?,
                _ => {
                    writeln!(out, "start {}", column_reading(path.start()))?;
                    for s in path.steps() {
                        writeln!(out, "{} | {} -> {}", s.x, s.y, column_reading(&s.target))?;
                    }
                    writeln!(out, "length={}", path.len())?;
                }
            }
        }
        Command::ConjectureScan { n, max_class_size, max_len } => {
            let report = scan::conjecture_scan(n, max_class_size, max_len, &config)?;
            match config.format {
                OutputFormat::Json => writeln!(out, "{}", rows_to_json(&report.rows))?,
                OutputFormat::Csv => tables::write_csv(&report.rows, &mut out)?,
                _ => {
                    for (e, vertices, d) in report.computed() {
                        writeln!(out, "{e} vertices={vertices} diameter={d}")?;
                    }
                }
            }
            let fmt = |d: Option<usize>| d.map_or_else(|| "-".to_owned(), |d| d.to_string());
            eprintln!(
                "n={} classes={} skipped={} min_diameter={} max_diameter={} upper_violations={} below_n_minus_1={}",
                n,
                report.rows.len() - report.skipped(),
                report.skipped(),
                fmt(report.min_diameter()),
                fmt(report.max_diameter()),
                report.upper_violations.len(),
                report.below_lower.len()
            );
            for e in &report.upper_violations {
                eprintln!("upper bound violated by {e}");
            }
        }
    }
    Ok(())
}

fn diagram(t: &PsTableau) -> String {
    let s = t.to_string();
    if s.ends_with('\n') {
        s
    } else {
        s + "\n"
    }
}

fn rows_to_json(rows: &[TableRow]) -> String {
    let rows: Vec<serde_json::Value> = rows
        .iter()
        .map(|r| {
            serde_json::json!({
                "evaluation": r.evaluation.counts(),
                "vertices": r.vertices(),
                "diameter": r.diameter(),
                "skipped": r.vertices().is_none(),
            })
        })
        .collect();
    serde_json::to_string(&rows).expect("plain data serializes")
}

fn decide(relation: Relation, u: &PsTableau, v: &PsTableau, config: &RunConfig) -> anyhow::Result<ConjugacyVerdict> {
    let bound = config.bound_for(u.len());
    Ok(match relation {
        Relation::Psim => match psim_witness(u, v, config.guard)? {
            Some((x, _)) => ConjugacyVerdict::related(x),
            None => ConjugacyVerdict::not_related(),
        },
        Relation::Tpsim => match tpsim_witness(u, v, config.guard)? {
            Some(g) => ConjugacyVerdict::related(g),
            None => ConjugacyVerdict::not_related(),
        },
        Relation::Lsim => lsim_bounded(u, v, bound)?,
        Relation::Osim => osim_bounded(u, v, bound)?,
        Relation::Evsim => {
            if u.variant() != v.variant() {
                bail!("operands have different variants");
            }
            let mut verdict =
                if evsim(u, v) { ConjugacyVerdict::related(Word::empty()) } else { ConjugacyVerdict::not_related() };
            verdict.witness = None;
            verdict
        }
    })
}
