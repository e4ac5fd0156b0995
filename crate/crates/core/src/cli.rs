//! Command-line interface. Data goes to `out`, diagnostics to `err`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::decomposer::decompose;
use crate::error::{Error, Result};
use crate::evaluation::{comparability, evaluate, kappa_annotations, AnnotatedLexicon};
use crate::morphology::{build_families, filter_test_set, harvest_terms, Stemmer};
use crate::pipeline::{load_terms, run_extraction_with, Preset, Resources, RunConfig};
use crate::resources::{load_corpus, load_inventory, load_translation_table, PipelineConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Kv,
}

#[derive(Debug, Parser)]
#[command(name = "morphocomp", version, about = "Compositional translation of morphologically complex terms")]
pub struct Cli {
    /// Output format for reports.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every decomposition of a term, one per line.
    Decompose {
        term: String,
        #[arg(long)]
        inventory: PathBuf,
        #[arg(long, default_value = "en")]
        language: String,
        #[arg(long, default_value_t = PipelineConfig::default().min_base_len)]
        min_base_length: usize,
        #[arg(long, default_value_t = PipelineConfig::default().max_minimal_components)]
        max_components: usize,
    },
    /// Translate a list of source terms into a candidate lexicon.
    Extract {
        #[arg(long)]
        terms: PathBuf,
        #[arg(long, env = "MORPHOCOMP_CONFIG")]
        config: PathBuf,
        /// Overrides the preset of the config file (B, BS, BM, BD, BSMD, Pref).
        #[arg(long)]
        preset: Option<Preset>,
        /// Drop candidates with more content words than the source term.
        #[arg(long)]
        no_fertile: bool,
        /// Lexicon file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// List corpus words containing a seed morpheme or an inner hyphen.
    Harvest {
        #[arg(long)]
        corpus: PathBuf,
        /// File with one seed morpheme per line.
        #[arg(long)]
        seeds: Option<PathBuf>,
        #[arg(long, default_value = "en")]
        language: String,
    },
    /// Build a morphological family table from word lists.
    Families {
        #[arg(required = true)]
        wordlists: Vec<PathBuf>,
        #[arg(long)]
        language: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Keep the terms the dictionary cannot translate into an attested target lemma.
    FilterTestset {
        #[arg(long)]
        terms: PathBuf,
        #[arg(long)]
        dictionary: PathBuf,
        #[arg(long)]
        target_corpus: PathBuf,
        #[arg(long, default_value = "fr")]
        target_language: String,
    },
    /// Coverage, precision and overall quality of an annotated lexicon.
    Evaluate { annotations: PathBuf },
    /// Inter-annotator agreement between two annotation files.
    Kappa { first: PathBuf, second: PathBuf },
    /// Dictionary-based comparability of two corpora.
    Comparability {
        source: PathBuf,
        target: PathBuf,
        dictionary: PathBuf,
        #[arg(long, default_value = "en")]
        source_language: String,
        #[arg(long, default_value = "fr")]
        target_language: String,
    },
}

fn read_lines(path: &Path) -> Result<Vec<String>> {
    load_terms(path)
}

fn write_output(path: Option<&Path>, out: &mut dyn Write, data: &[u8]) -> Result<()> {
    match path {
        Some(p) => fs::write(p, data).map_err(|e| Error::io(p, e)),
        None => out.write_all(data).map_err(|e| Error::io("<stdout>", e)),
    }
}

fn stdout_err(e: io::Error) -> Error {
    Error::io("<stdout>", e)
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let kv = cli.format == Format::Kv;
    match cli.command {
        Command::Decompose {
            term,
            inventory,
            language,
            min_base_length,
            max_components,
        } => {
            let cfg = PipelineConfig {
                min_base_len: min_base_length,
                max_minimal_components: max_components,
                ..PipelineConfig::default()
            };
            cfg.validate()?;
            let inv = load_inventory(&inventory, &language)?;
            for d in decompose(&term, &inv, &cfg) {
                writeln!(out, "{d}").map_err(stdout_err)?;
            }
        }
        Command::Extract {
            terms,
            config,
            preset,
            no_fertile,
            out: out_path,
            workers,
        } => {
            let mut cfg = RunConfig::load(&config)?;
            if let Some(p) = preset {
                cfg.preset = p;
            }
            if no_fertile {
                cfg.fertile_translations = false;
            }
            if let Some(w) = workers {
                cfg.workers = w;
            }
            let terms = load_terms(&terms)?;
            let res = Resources::load(&cfg)?;
            let lex = run_extraction_with(&terms, &res, &cfg)?;
            let mut buf = Vec::new();
            lex.write_tsv(&mut buf).map_err(stdout_err)?;
            write_output(out_path.as_deref(), out, &buf)?;
            for e in &lex.entries {
                for d in &e.diagnostics {
                    let _ = writeln!(err, "warning: {d}");
                }
            }
            let _ = writeln!(
                err,
                "preset {}: {} ({:.2}s)",
                lex.metadata.preset,
                lex.stats,
                lex.metadata.elapsed.as_secs_f64()
            );
        }
        Command::Harvest {
            corpus,
            seeds,
            language,
        } => {
            let corpus = load_corpus(&corpus, &language)?;
            let seeds = match seeds {
                Some(p) => read_lines(&p)?,
                None => Vec::new(),
            };
            for t in harvest_terms(&corpus, &seeds) {
                writeln!(out, "{t}").map_err(stdout_err)?;
            }
        }
        Command::Families {
            wordlists,
            language,
            out: out_path,
        } => {
            let stemmer = Stemmer::for_language(&language)?;
            let lists = wordlists.iter().map(|p| read_lines(p)).collect::<Result<Vec<_>>>()?;
            let (table, families) = build_families(&lists, &language, &stemmer);
            let mut buf = Vec::new();
            table.write_to(&mut buf).map_err(stdout_err)?;
            write_output(out_path.as_deref(), out, &buf)?;
            let _ = writeln!(err, "{} families, {} pairs", families.len(), table.pair_count());
        }
        Command::FilterTestset {
            terms,
            dictionary,
            target_corpus,
            target_language,
        } => {
            let terms = read_lines(&terms)?;
            let dict = load_translation_table(&dictionary)?;
            let target = load_corpus(&target_corpus, &target_language)?;
            for t in filter_test_set(&terms, &dict, &target) {
                writeln!(out, "{t}").map_err(stdout_err)?;
            }
        }
        Command::Evaluate { annotations } => {
            let report = evaluate(&AnnotatedLexicon::load(&annotations)?)?;
            if report.zero_candidates {
                let _ = writeln!(err, "warning: no candidates, precision undefined");
            }
            let text = if kv { report.to_kv() } else { report.to_string() };
            out.write_all(text.as_bytes()).map_err(stdout_err)?;
        }
        Command::Kappa { first, second } => {
            let k = kappa_annotations(&AnnotatedLexicon::load(&first)?, &AnnotatedLexicon::load(&second)?)?;
            if kv {
                writeln!(out, "kappa={k:.6}")
            } else {
                writeln!(out, "kappa: {k:.4}")
            }
            .map_err(stdout_err)?;
        }
        Command::Comparability {
            source,
            target,
            dictionary,
            source_language,
            target_language,
        } => {
            let src = load_corpus(&source, &source_language)?;
            let tgt = load_corpus(&target, &target_language)?;
            let dict = load_translation_table(&dictionary)?;
            let c = comparability(&src, &tgt, &dict);
            for w in &c.warnings {
                let _ = writeln!(err, "warning: {}", w.message);
            }
            if kv {
                writeln!(
                    out,
                    "comparability={:.6}\nforward={:.6}\nbackward={:.6}",
                    c.score, c.forward, c.backward
                )
            } else {
                writeln!(
                    out,
                    "comparability: {:.4} (forward {:.4}, backward {:.4})",
                    c.score, c.forward, c.backward
                )
            }
            .map_err(stdout_err)?;
        }
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code: 0 on success, 1 on a runtime error, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return e.exit_code();
        }
    };
    match execute(cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
