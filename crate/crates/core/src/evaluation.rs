//! Lexicon quality metrics, inter-annotator agreement and corpus comparability.
//!
//! Precision is pooled over all generated candidates, coverage is the share
//! of source terms that received at least one candidate, and overall quality
//! is their product. Each is reported under a gold standard (canonical
//! translations only) and a silver standard (canonical plus recoverable).

use std::collections::{BTreeSet, HashSet};
use std::fmt::{self, Write as _};
use std::io::BufRead;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::resources::{TaggedCorpus, TranslationTable, Warning};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnnotationLabel {
    /// Canonical translation.
    Gold,
    /// Recoverable translation: paraphrase or morphological variant.
    Silver,
    Incorrect,
}

impl AnnotationLabel {
    pub const ALL: [AnnotationLabel; 3] = [AnnotationLabel::Gold, AnnotationLabel::Silver, AnnotationLabel::Incorrect];

    pub fn is_correct(self, standard: Standard) -> bool {
        match standard {
            Standard::Gold => self == AnnotationLabel::Gold,
            Standard::Silver => self != AnnotationLabel::Incorrect,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            AnnotationLabel::Gold => "gold",
            AnnotationLabel::Silver => "silver",
            AnnotationLabel::Incorrect => "incorrect",
        }
    }
}

impl fmt::Display for AnnotationLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for AnnotationLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_lowercase().as_str() {
            "gold" | "g" | "canonical" => Ok(AnnotationLabel::Gold),
            "silver" | "s" | "recoverable" => Ok(AnnotationLabel::Silver),
            "incorrect" | "i" | "wrong" => Ok(AnnotationLabel::Incorrect),
            other => Err(Error::InvalidValue(format!("unknown annotation label `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Standard {
    Gold,
    Silver,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedRow {
    pub source: String,
    pub candidate: String,
    pub label: AnnotationLabel,
}

/// Annotated candidates plus the full set of attempted source terms.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnnotatedLexicon {
    rows: Vec<AnnotatedRow>,
    source_terms: BTreeSet<String>,
    keys: HashSet<(String, String)>,
}

impl AnnotatedLexicon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_source_term(&mut self, term: &str) {
        self.source_terms.insert(term.to_string());
    }

    /// Adds an annotated candidate; its source term joins the term set.
    pub fn add(&mut self, source: &str, candidate: &str, label: AnnotationLabel) -> Result<()> {
        if !self.keys.insert((source.to_string(), candidate.to_string())) {
            return Err(Error::Annotation(format!("duplicate row `{source}` / `{candidate}`")));
        }
        self.source_terms.insert(source.to_string());
        self.rows.push(AnnotatedRow {
            source: source.to_string(),
            candidate: candidate.to_string(),
            label,
        });
        Ok(())
    }

    pub fn rows(&self) -> &[AnnotatedRow] {
        &self.rows
    }

    pub fn labels(&self) -> Vec<AnnotationLabel> {
        self.rows.iter().map(|r| r.label).collect()
    }

    pub fn source_terms(&self) -> &BTreeSet<String> {
        &self.source_terms
    }

    /// Reads a lexicon TSV with a label column appended
    /// (`source, candidate, count, fertile, label`); the short form
    /// `source, candidate, label` is accepted too. A row with an empty
    /// candidate registers a source term that received no candidate.
    pub fn from_reader<R: BufRead>(reader: R) -> Result<Self> {
        let mut lex = AnnotatedLexicon::new();
        for (i, line) in reader.lines().enumerate() {
            let n = i + 1;
            let line = line.map_err(|e| Error::parse(n, e.to_string()))?;
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            let source = cols[0].trim();
            if source.is_empty() {
                return Err(Error::parse(n, "empty source term"));
            }
            let candidate = cols.get(1).map_or("", |c| c.trim());
            if candidate.is_empty() {
                lex.add_source_term(source);
                continue;
            }
            let label = match cols.len() {
                3 => cols[2],
                l if l >= 5 => cols[4],
                _ => "",
            };
            if label.trim().is_empty() {
                return Err(Error::parse(n, format!("unlabeled candidate `{candidate}`")));
            }
            let label: AnnotationLabel = label.parse().map_err(|e: Error| Error::parse(n, e.to_string()))?;
            lex.add(source, candidate, label).map_err(|e| Error::parse(n, e.to_string()))?;
        }
        Ok(lex)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
        Self::from_reader(std::io::BufReader::new(file)).map_err(|e| e.with_path(path))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StandardScores {
    pub correct: usize,
    pub precision: f64,
    pub overall_quality: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub source_terms: usize,
    pub covered_terms: usize,
    pub candidates: usize,
    pub coverage: f64,
    pub gold: StandardScores,
    pub silver: StandardScores,
    /// No candidate was generated: precision is undefined and reported as 0.
    pub zero_candidates: bool,
}

impl EvalReport {
    pub fn to_kv(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "source_terms={}", self.source_terms);
        let _ = writeln!(s, "covered_terms={}", self.covered_terms);
        let _ = writeln!(s, "candidates={}", self.candidates);
        let _ = writeln!(s, "coverage={:.6}", self.coverage);
        let _ = writeln!(s, "correct_gold={}", self.gold.correct);
        let _ = writeln!(s, "correct_silver={}", self.silver.correct);
        let _ = writeln!(s, "precision_gold={:.6}", self.gold.precision);
        let _ = writeln!(s, "precision_silver={:.6}", self.silver.precision);
        let _ = writeln!(s, "oq_gold={:.6}", self.gold.overall_quality);
        let _ = writeln!(s, "oq_silver={:.6}", self.silver.overall_quality);
        let _ = writeln!(s, "zero_candidates={}", self.zero_candidates);
        s
    }
}

impl fmt::Display for EvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "source terms: {}  covered: {}  candidates: {}",
            self.source_terms, self.covered_terms, self.candidates
        )?;
        writeln!(f, "{:<8} {:>6} {:>6} {:>6}", "", "C", "P", "OQ")?;
        for (name, s) in [("gold", &self.gold), ("silver", &self.silver)] {
            writeln!(
                f,
                "{:<8} {:>6.3} {:>6.3} {:>6.3}",
                name, self.coverage, s.precision, s.overall_quality
            )?;
        }
        if self.zero_candidates {
            writeln!(f, "warning: no candidates, precision undefined")?;
        }
        Ok(())
    }
}

pub fn evaluate(lex: &AnnotatedLexicon) -> Result<EvalReport> {
    let st = lex.source_terms.len();
    if st == 0 {
        return Err(Error::Annotation("no source terms".into()));
    }
    let covered: HashSet<&str> = lex.rows.iter().map(|r| r.source.as_str()).collect();
    let coverage = covered.len() as f64 / st as f64;
    let candidates = lex.rows.len();
    let scores = |standard: Standard| {
        let correct = lex.rows.iter().filter(|r| r.label.is_correct(standard)).count();
        let precision = if candidates == 0 {
            0.0
        } else {
            correct as f64 / candidates as f64
        };
        StandardScores {
            correct,
            precision,
            overall_quality: precision * coverage,
        }
    };
    Ok(EvalReport {
        source_terms: st,
        covered_terms: covered.len(),
        candidates,
        coverage,
        gold: scores(Standard::Gold),
        silver: scores(Standard::Silver),
        zero_candidates: candidates == 0,
    })
}

/// Cohen's kappa over the three annotation labels.
pub fn kappa(a: &[AnnotationLabel], b: &[AnnotationLabel]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Annotation(format!(
            "annotation lengths differ: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    if a.is_empty() {
        return Err(Error::Annotation("no annotations".into()));
    }
    let n = a.len() as f64;
    let observed = a.iter().zip(b).filter(|(x, y)| x == y).count() as f64 / n;
    let expected: f64 = AnnotationLabel::ALL
        .iter()
        .map(|l| {
            let pa = a.iter().filter(|x| *x == l).count() as f64 / n;
            let pb = b.iter().filter(|x| *x == l).count() as f64 / n;
            pa * pb
        })
        .sum();
    if (1.0 - expected).abs() < f64::EPSILON {
        return if a == b {
            Ok(1.0)
        } else {
            Err(Error::DegenerateMarginals)
        };
    }
    Ok((observed - expected) / (1.0 - expected))
}

/// Kappa between two annotation files, which must list the same
/// `(source, candidate)` rows in the same order.
pub fn kappa_annotations(a: &AnnotatedLexicon, b: &AnnotatedLexicon) -> Result<f64> {
    if a.rows.len() != b.rows.len() {
        return Err(Error::Annotation(format!(
            "annotation files have {} and {} rows",
            a.rows.len(),
            b.rows.len()
        )));
    }
    for (i, (x, y)) in a.rows.iter().zip(&b.rows).enumerate() {
        if x.source != y.source || x.candidate != y.candidate {
            return Err(Error::Annotation(format!(
                "row {} differs: `{}`/`{}` vs `{}`/`{}`",
                i + 1,
                x.source,
                x.candidate,
                y.source,
                y.candidate
            )));
        }
    }
    kappa(&a.labels(), &b.labels())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparability {
    pub score: f64,
    /// Share of source dictionary words with a translation attested in the target.
    pub forward: f64,
    /// Same, from target to source through the inverted dictionary.
    pub backward: f64,
    pub warnings: Vec<Warning>,
}

fn directional(from: &TaggedCorpus, to: &TaggedCorpus, dict: &TranslationTable) -> Option<f64> {
    let mut known = 0usize;
    let mut attested = 0usize;
    for lemma in from.vocabulary() {
        if !dict.contains_key(lemma) {
            continue;
        }
        known += 1;
        if dict.lookup(lemma).any(|t| to.contains_lemma(&t.form)) {
            attested += 1;
        }
    }
    (known > 0).then(|| attested as f64 / known as f64)
}

/// Unweighted expectation of finding, for a dictionary word of one corpus,
/// a translation in the other corpus, averaged over both directions.
pub fn comparability(src: &TaggedCorpus, tgt: &TaggedCorpus, dict: &TranslationTable) -> Comparability {
    let mut warnings = Vec::new();
    let mut side = |from: &TaggedCorpus, to: &TaggedCorpus, d: &TranslationTable, name: &str| {
        directional(from, to, d).unwrap_or_else(|| {
            warnings.push(Warning {
                line: 0,
                message: format!("no dictionary word occurs in the {name} corpus"),
            });
            0.0
        })
    };
    let forward = side(src, tgt, dict, "source");
    let backward = side(tgt, src, &dict.inverted(), "target");
    Comparability {
        score: (forward + backward) / 2.0,
        forward,
        backward,
        warnings,
    }
}
