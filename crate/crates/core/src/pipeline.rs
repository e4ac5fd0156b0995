//! End-to-end extraction: decompose → translate → recompose → select, per
//! source term, over a set of resources chosen by a [`Preset`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::io::{self, BufRead, Write};
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant, SystemTime};

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::decomposer::{decompose_with, SplitGrammar};
use crate::error::{Error, Result};
use crate::recomposer::{r1_generate, r1_generate_in_order, r1_raw_count, r2_filter, LexicalSeq};
use crate::resources::{
    ComponentInventory, PipelineConfig, StopwordList, TaggedCorpus, TranslationTable, VariantTable,
};
use crate::selector::{collect_candidates, CandidateTranslation};
use crate::translator::{TranslatedSeq, Translator};

/// Which resources are combined on top of the baseline (general dictionary
/// plus morpheme table).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Preset {
    pub synonyms: bool,
    pub morphology: bool,
    pub domain: bool,
    /// Prefix + lexical base translation only: no permutation, no fertile output.
    pub prefix_only: bool,
}

impl Preset {
    pub const B: Preset = Preset { synonyms: false, morphology: false, domain: false, prefix_only: false };
    pub const BS: Preset = Preset { synonyms: true, ..Preset::B };
    pub const BM: Preset = Preset { morphology: true, ..Preset::B };
    pub const BD: Preset = Preset { domain: true, ..Preset::B };
    pub const BSMD: Preset = Preset { synonyms: true, morphology: true, domain: true, prefix_only: false };
    pub const PREF: Preset = Preset { prefix_only: true, ..Preset::B };
}

impl Default for Preset {
    fn default() -> Self {
        Preset::B
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.prefix_only {
            return f.write_str("Pref");
        }
        f.write_str("B")?;
        for (on, c) in [(self.synonyms, "S"), (self.morphology, "M"), (self.domain, "D")] {
            if on {
                f.write_str(c)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Preset {
    type Err = Error;

    /// `Pref`, or `B` followed by any of `S`, `M`, `D` in any order.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("pref") {
            return Ok(Preset::PREF);
        }
        let letters: Vec<char> = s.to_ascii_uppercase().chars().collect();
        let bad = || Error::Config(format!("unknown preset `{s}`"));
        if letters.first() != Some(&'B') {
            return Err(bad());
        }
        let mut p = Preset::B;
        for c in &letters[1..] {
            let flag = match c {
                'S' => &mut p.synonyms,
                'M' => &mut p.morphology,
                'D' => &mut p.domain,
                _ => return Err(bad()),
            };
            if *flag {
                return Err(bad());
            }
            *flag = true;
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ResourcePaths {
    pub source_inventory: Option<PathBuf>,
    pub target_inventory: Option<PathBuf>,
    pub general_dictionary: Option<PathBuf>,
    pub morpheme_table: Option<PathBuf>,
    pub domain_dictionary: Option<PathBuf>,
    pub source_synonyms: Option<PathBuf>,
    pub target_synonyms: Option<PathBuf>,
    pub source_morphology: Option<PathBuf>,
    pub target_morphology: Option<PathBuf>,
    pub stopwords: Option<PathBuf>,
    pub corpus: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub pipeline: PipelineConfig,
    pub paths: ResourcePaths,
    pub preset: Preset,
    pub fertile_translations: bool,
    /// Per-term cap on lexical sequences passed to selection.
    pub max_sequences: usize,
    pub workers: usize,
    pub source_language: String,
    pub target_language: String,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            pipeline: PipelineConfig::default(),
            paths: ResourcePaths::default(),
            preset: Preset::B,
            fertile_translations: true,
            max_sequences: 10_000,
            workers: 1,
            source_language: "en".into(),
            target_language: "fr".into(),
        }
    }
}

fn parse_bool(v: &str) -> Option<bool> {
    match v.to_ascii_lowercase().as_str() {
        "true" | "yes" | "on" | "1" => Some(true),
        "false" | "no" | "off" | "0" => Some(false),
        _ => None,
    }
}

impl RunConfig {
    /// Parses `key = value` lines. Relative paths resolve against `base_dir`.
    pub fn from_reader<R: BufRead>(reader: R, base_dir: &Path) -> Result<Self> {
        let mut cfg = RunConfig::default();
        for (i, line) in reader.lines().enumerate() {
            let n = i + 1;
            let line = line.map_err(|e| Error::parse(n, e.to_string()))?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::parse(n, "expected `key = value`"))?;
            let (key, value) = (key.trim(), value.trim());
            let path = || Some(base_dir.join(value));
            let number = || {
                value
                    .parse::<usize>()
                    .map_err(|_| Error::parse(n, format!("`{key}` expects a number, got `{value}`")))
            };
            let p = &mut cfg.paths;
            match key {
                "source_language" => cfg.source_language = value.to_string(),
                "target_language" => cfg.target_language = value.to_string(),
                "source_inventory" => p.source_inventory = path(),
                "target_inventory" => p.target_inventory = path(),
                "general_dictionary" => p.general_dictionary = path(),
                "morpheme_table" => p.morpheme_table = path(),
                "domain_dictionary" => p.domain_dictionary = path(),
                "source_synonyms" => p.source_synonyms = path(),
                "target_synonyms" => p.target_synonyms = path(),
                "source_morphology" => p.source_morphology = path(),
                "target_morphology" => p.target_morphology = path(),
                "stopwords" => p.stopwords = path(),
                "corpus" => p.corpus = path(),
                "preset" => cfg.preset = value.parse().map_err(|e: Error| Error::parse(n, e.to_string()))?,
                "fertile" => {
                    cfg.fertile_translations = parse_bool(value)
                        .ok_or_else(|| Error::parse(n, format!("`fertile` expects a boolean, got `{value}`")))?
                }
                "min_base_length" => cfg.pipeline.min_base_len = number()?,
                "max_gap" => cfg.pipeline.max_gap = number()?,
                "max_components" => cfg.pipeline.max_minimal_components = number()?,
                "max_sequences" => cfg.max_sequences = number()?,
                "workers" => cfg.workers = number()?,
                other => return Err(Error::parse(n, format!("unknown key `{other}`"))),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
        let base = path.parent().unwrap_or(Path::new("."));
        Self::from_reader(io::BufReader::new(file), base).map_err(|e| e.with_path(path))
    }

    pub fn validate(&self) -> Result<()> {
        self.pipeline.validate()?;
        if self.max_sequences == 0 {
            return Err(Error::Config("max_sequences must be >= 1".into()));
        }
        let p = &self.paths;
        let required = [
            ("source_inventory", &p.source_inventory),
            ("target_inventory", &p.target_inventory),
            ("general_dictionary", &p.general_dictionary),
            ("morpheme_table", &p.morpheme_table),
            ("stopwords", &p.stopwords),
            ("corpus", &p.corpus),
        ];
        for (name, value) in required {
            if value.is_none() {
                return Err(Error::Config(format!("missing `{name}`")));
            }
        }
        if self.preset.domain && p.domain_dictionary.is_none() {
            return Err(Error::Config(format!("preset {} needs `domain_dictionary`", self.preset)));
        }
        if self.preset.synonyms && p.source_synonyms.is_none() && p.target_synonyms.is_none() {
            return Err(Error::Config(format!("preset {} needs a synonym table", self.preset)));
        }
        if self.preset.morphology && p.source_morphology.is_none() && p.target_morphology.is_none() {
            return Err(Error::Config(format!(
                "preset {} needs a morphological family table",
                self.preset
            )));
        }
        Ok(())
    }
}

/// Loaded resources, merged according to a preset.
#[derive(Debug, Clone)]
pub struct Resources {
    pub source_inventory: ComponentInventory,
    pub target_inventory: ComponentInventory,
    pub translations: TranslationTable,
    pub source_variants: VariantTable,
    pub target_variants: VariantTable,
    pub stopwords: StopwordList,
    pub corpus: TaggedCorpus,
    /// `(path, sha256)` of every file read.
    pub checksums: Vec<(PathBuf, String)>,
}

fn sha256_hex(path: &Path) -> Result<String> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    Ok(Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect())
}

impl Resources {
    pub fn load(cfg: &RunConfig) -> Result<Self> {
        cfg.validate()?;
        let p = &cfg.paths;
        let (src, tgt) = (cfg.source_language.as_str(), cfg.target_language.as_str());
        let req = |o: &Option<PathBuf>| o.clone().expect("validated");
        let mut checksums = Vec::new();
        let mut track = |path: &Path| -> Result<()> {
            checksums.push((path.to_path_buf(), sha256_hex(path)?));
            Ok(())
        };

        let source_inventory = load_logged(&req(&p.source_inventory), |f| ComponentInventory::load(f, src))?;
        let target_inventory = load_logged(&req(&p.target_inventory), |f| ComponentInventory::load(f, tgt))?;
        track(&req(&p.source_inventory))?;
        track(&req(&p.target_inventory))?;

        let mut translations = TranslationTable::new();
        let mut dicts = vec![req(&p.general_dictionary), req(&p.morpheme_table)];
        if cfg.preset.domain {
            dicts.push(req(&p.domain_dictionary));
        }
        for path in &dicts {
            translations.merge(&load_logged(path, |f| TranslationTable::load(f))?);
            track(path)?;
        }
        for w in translations.validate_targets(&target_inventory) {
            log::debug!("{w}");
        }

        let mut source_variants = VariantTable::new(src);
        let mut target_variants = VariantTable::new(tgt);
        let mut var_paths = Vec::new();
        if cfg.preset.synonyms {
            var_paths.push((&p.source_synonyms, true));
            var_paths.push((&p.target_synonyms, false));
        }
        if cfg.preset.morphology {
            var_paths.push((&p.source_morphology, true));
            var_paths.push((&p.target_morphology, false));
        }
        for (path, is_source) in var_paths {
            let Some(path) = path else { continue };
            let (table, lang) = if is_source {
                (&mut source_variants, src)
            } else {
                (&mut target_variants, tgt)
            };
            table.merge(&load_logged(path, |f| VariantTable::load(f, lang))?);
            track(path)?;
        }

        let stopwords = StopwordList::load(req(&p.stopwords), tgt)?;
        track(&req(&p.stopwords))?;
        let corpus = TaggedCorpus::load(req(&p.corpus), tgt)?;
        track(&req(&p.corpus))?;

        Ok(Resources {
            source_inventory,
            target_inventory,
            translations,
            source_variants,
            target_variants,
            stopwords,
            corpus,
            checksums,
        })
    }
}

fn load_logged<T>(path: &Path, f: impl FnOnce(&Path) -> Result<crate::resources::Loaded<T>>) -> Result<T> {
    let loaded = f(path)?;
    for w in &loaded.warnings {
        log::warn!("{}: {w}", path.display());
    }
    Ok(loaded.value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtractOptions {
    pub pipeline: PipelineConfig,
    pub fertile_translations: bool,
    pub max_sequences: usize,
    pub prefix_only: bool,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        ExtractOptions {
            pipeline: PipelineConfig::default(),
            fertile_translations: true,
            max_sequences: 10_000,
            prefix_only: false,
        }
    }
}

impl From<&RunConfig> for ExtractOptions {
    fn from(cfg: &RunConfig) -> Self {
        ExtractOptions {
            pipeline: cfg.pipeline,
            fertile_translations: cfg.fertile_translations && !cfg.preset.prefix_only,
            max_sequences: cfg.max_sequences,
            prefix_only: cfg.preset.prefix_only,
        }
    }
}

/// Furthest stage a term reached.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stage {
    #[default]
    None,
    Decomposed,
    Translated,
    Recomposed,
    Attested,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermResult {
    pub term: String,
    pub candidates: Vec<CandidateTranslation>,
    pub stage: Stage,
    pub diagnostics: Vec<String>,
}

/// Sequences above this multiple of `max_sequences` are not even generated.
const HARD_LIMIT_FACTOR: usize = 100;

pub fn translate_term_detailed(term: &str, res: &Resources, opts: &ExtractOptions) -> TermResult {
    let mut result = TermResult {
        term: term.to_string(),
        candidates: Vec::new(),
        stage: Stage::None,
        diagnostics: Vec::new(),
    };
    let grammar = if opts.prefix_only {
        SplitGrammar::PrefixFree
    } else {
        SplitGrammar::Full
    };
    let decompositions = decompose_with(term, &res.source_inventory, &opts.pipeline, grammar);
    if decompositions.is_empty() {
        return result;
    }
    result.stage = Stage::Decomposed;

    let translator = Translator::new(&res.translations, &res.source_variants, &res.target_variants);
    let hard_limit = opts.max_sequences.saturating_mul(HARD_LIMIT_FACTOR);
    let estimate = decompositions
        .iter()
        .map(|d| translator.count_translations(d).saturating_mul(r1_raw_count(d.len())))
        .fold(0usize, usize::saturating_add);
    if estimate > hard_limit {
        result.diagnostics.push(format!(
            "{term}: about {estimate} recompositions exceed the limit of {hard_limit}, term skipped"
        ));
        return result;
    }

    let mut seen = BTreeSet::new();
    let translated: Vec<TranslatedSeq> = decompositions
        .iter()
        .flat_map(|d| translator.translate_decomposition(d))
        .filter(|ts| {
            seen.insert(
                ts.items
                    .iter()
                    .map(|i| (i.form.clone(), i.bound))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    if translated.is_empty() {
        return result;
    }
    result.stage = Stage::Translated;

    let mut recomposed: BTreeMap<Vec<String>, LexicalSeq> = BTreeMap::new();
    for ts in &translated {
        let seqs = if opts.prefix_only {
            r1_generate_in_order(ts)
        } else {
            r1_generate(ts)
        };
        for s in seqs {
            recomposed.entry(s.key()).or_insert(s);
        }
    }
    let mut filtered = r2_filter(recomposed.into_values().collect(), &res.target_inventory);
    if filtered.is_empty() {
        return result;
    }
    result.stage = Stage::Recomposed;
    if filtered.len() > opts.max_sequences {
        result.diagnostics.push(format!(
            "{term}: {} lexical sequences truncated to {}",
            filtered.len(),
            opts.max_sequences
        ));
        filtered.truncate(opts.max_sequences);
    }

    let source_words = term.split_whitespace().count().max(1);
    let mut candidates = collect_candidates(&filtered, &res.corpus, &res.stopwords, &opts.pipeline, source_words);
    if !opts.fertile_translations {
        candidates.retain(|c| !c.fertile);
    }
    if !candidates.is_empty() {
        result.stage = Stage::Attested;
    }
    result.candidates = candidates;
    result
}

pub fn translate_term(term: &str, res: &Resources, opts: &ExtractOptions) -> Vec<CandidateTranslation> {
    translate_term_detailed(term, res, opts).candidates
}

/// Number of terms that reached at least each stage.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StageStats {
    pub terms: usize,
    pub decomposed: usize,
    pub translated: usize,
    pub recomposed: usize,
    pub attested: usize,
}

impl fmt::Display for StageStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "terms={} decomposed={} translated={} recomposed={} attested={}",
            self.terms, self.decomposed, self.translated, self.recomposed, self.attested
        )
    }
}

#[derive(Debug, Clone)]
pub struct RunMetadata {
    pub preset: Preset,
    pub pipeline: PipelineConfig,
    pub fertile_translations: bool,
    pub checksums: Vec<(PathBuf, String)>,
    pub started: SystemTime,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct Lexicon {
    pub entries: Vec<TermResult>,
    pub stats: StageStats,
    pub metadata: RunMetadata,
}

impl Lexicon {
    /// Source terms with at least one candidate.
    pub fn covered_terms(&self) -> BTreeSet<&str> {
        self.entries
            .iter()
            .filter(|e| !e.candidates.is_empty())
            .map(|e| e.term.as_str())
            .collect()
    }

    /// `source, candidate, count, fertile` rows; a term without candidates
    /// gets one row with an empty candidate and count 0.
    pub fn write_tsv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "#source\tcandidate\tcount\tfertile")?;
        for e in &self.entries {
            if e.candidates.is_empty() {
                writeln!(w, "{}\t\t0\tfalse", e.term)?;
            }
            for c in &e.candidates {
                writeln!(w, "{}\t{}\t{}\t{}", e.term, c.render(), c.count(), c.fertile)?;
            }
        }
        Ok(())
    }

    pub fn to_tsv(&self) -> String {
        let mut buf = Vec::new();
        self.write_tsv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("utf-8 input")
    }
}

/// Reads source terms, one per line; blank and `#` lines are skipped.
pub fn read_terms<R: BufRead>(reader: R) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::parse(i + 1, e.to_string()))?;
        let t = line.trim();
        if !t.is_empty() && !t.starts_with('#') {
            out.push(t.to_string());
        }
    }
    Ok(out)
}

pub fn load_terms(path: impl AsRef<Path>) -> Result<Vec<String>> {
    let path = path.as_ref();
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_terms(io::BufReader::new(file)).map_err(|e| e.with_path(path))
}

fn isolated(term: &str, res: &Resources, opts: &ExtractOptions) -> TermResult {
    panic::catch_unwind(AssertUnwindSafe(|| translate_term_detailed(term, res, opts))).unwrap_or_else(|_| {
        TermResult {
            term: term.to_string(),
            candidates: Vec::new(),
            stage: Stage::None,
            diagnostics: vec![format!("{term}: internal failure, term skipped")],
        }
    })
}

/// Translates every term with `workers` threads. Output order follows input
/// order and does not depend on the worker count.
pub fn extract(terms: &[String], res: &Resources, opts: &ExtractOptions, workers: usize) -> Result<Vec<TermResult>> {
    if workers <= 1 {
        return Ok(terms.iter().map(|t| isolated(t, res, opts)).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Config(format!("cannot start {workers} workers: {e}")))?;
    Ok(pool.install(|| terms.par_iter().map(|t| isolated(t, res, opts)).collect()))
}

pub fn run_extraction_with(terms: &[String], res: &Resources, cfg: &RunConfig) -> Result<Lexicon> {
    let started = SystemTime::now();
    let clock = Instant::now();
    let opts = ExtractOptions::from(cfg);
    let entries = extract(terms, res, &opts, cfg.workers)?;
    let mut stats = StageStats {
        terms: entries.len(),
        ..Default::default()
    };
    for e in &entries {
        for d in &e.diagnostics {
            log::warn!("{d}");
        }
        stats.decomposed += usize::from(e.stage >= Stage::Decomposed);
        stats.translated += usize::from(e.stage >= Stage::Translated);
        stats.recomposed += usize::from(e.stage >= Stage::Recomposed);
        stats.attested += usize::from(e.stage >= Stage::Attested);
    }
    log::info!("{stats}");
    Ok(Lexicon {
        entries,
        stats,
        metadata: RunMetadata {
            preset: cfg.preset,
            pipeline: cfg.pipeline,
            fertile_translations: opts.fertile_translations,
            checksums: res.checksums.clone(),
            started,
            elapsed: clock.elapsed(),
        },
    })
}

/// Loads every resource (failing before any term is processed) and runs the
/// extraction.
pub fn run_extraction(terms: &[String], cfg: &RunConfig) -> Result<Lexicon> {
    let res = Resources::load(cfg)?;
    run_extraction_with(terms, &res, cfg)
}
