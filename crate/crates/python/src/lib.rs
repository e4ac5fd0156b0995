//! Python bindings for `morphocomp`.

use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use morphocomp::decomposer;
use morphocomp::evaluation::{self, AnnotatedLexicon, AnnotationLabel};
use morphocomp::morphology;
use morphocomp::pipeline::{self, ExtractOptions, Preset, Resources, RunConfig};
use morphocomp::recomposer::{self, LexicalSeq};
use morphocomp::resources::{
    ComponentInventory, ComponentKind, PipelineConfig, StopwordList, TaggedCorpus, Token,
    TranslationTable as CoreTable, VariantTable as CoreVariants,
};
use morphocomp::selector;
use morphocomp::translator::{Provenance, TranslatedItem, TranslatedSeq, Translator};

fn to_py(e: morphocomp::Error) -> PyErr {
    match e {
        morphocomp::Error::Io { .. } => PyIOError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn kind(s: &str) -> PyResult<ComponentKind> {
    s.parse().map_err(to_py)
}

#[pyclass(name = "Inventory", module = "morphocomp_py", skip_from_py_object)]
#[derive(Clone)]
pub struct PyInventory(ComponentInventory);

#[pymethods]
impl PyInventory {
    #[new]
    fn new(language: &str) -> Self {
        PyInventory(ComponentInventory::new(language))
    }

    #[staticmethod]
    fn load(path: &str, language: &str) -> PyResult<Self> {
        Ok(PyInventory(ComponentInventory::load(path, language).map_err(to_py)?.value))
    }

    /// `kind` is one of `pref`, `conf`, `suff`, `free`.
    fn insert(&mut self, form: &str, kind: &str) -> PyResult<bool> {
        let k = self::kind(kind)?;
        self.0.insert(form, k).map_err(to_py)
    }

    fn contains(&self, form: &str, kind: &str) -> PyResult<bool> {
        Ok(self.0.contains(form, self::kind(kind)?))
    }

    fn kinds(&self, form: &str) -> Vec<&'static str> {
        self.0.kinds(form).into_iter().map(ComponentKind::tag).collect()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }
}

#[pyclass(name = "TranslationTable", module = "morphocomp_py", skip_from_py_object)]
#[derive(Clone, Default)]
pub struct PyTranslationTable(CoreTable);

#[pymethods]
impl PyTranslationTable {
    #[new]
    fn new() -> Self {
        Self::default()
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        Ok(PyTranslationTable(CoreTable::load(path).map_err(to_py)?.value))
    }

    #[pyo3(signature = (source, target, bound = false))]
    fn insert(&mut self, source: &str, target: &str, bound: bool) -> PyResult<bool> {
        self.0.insert(source, target, bound).map_err(to_py)
    }

    /// `(form, bound)` pairs.
    fn lookup(&self, source: &str) -> Vec<(String, bool)> {
        self.0.lookup(source).map(|t| (t.form.clone(), t.bound)).collect()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }
}

#[pyclass(name = "VariantTable", module = "morphocomp_py", skip_from_py_object)]
#[derive(Clone)]
pub struct PyVariantTable(CoreVariants);

#[pymethods]
impl PyVariantTable {
    #[new]
    fn new(language: &str) -> Self {
        PyVariantTable(CoreVariants::new(language))
    }

    #[staticmethod]
    fn load(path: &str, language: &str) -> PyResult<Self> {
        Ok(PyVariantTable(CoreVariants::load(path, language).map_err(to_py)?.value))
    }

    fn insert(&mut self, from: &str, to: &str) -> PyResult<bool> {
        self.0.insert(from, to).map_err(to_py)
    }

    fn related(&self, form: &str) -> Vec<String> {
        self.0.related(form).map(str::to_string).collect()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }
}

#[pyclass(name = "StopwordList", module = "morphocomp_py", skip_from_py_object)]
#[derive(Clone)]
pub struct PyStopwordList(StopwordList);

#[pymethods]
impl PyStopwordList {
    #[new]
    #[pyo3(signature = (language, lemmas = Vec::new()))]
    fn new(language: &str, lemmas: Vec<String>) -> Self {
        PyStopwordList(StopwordList::from_lemmas(language, lemmas))
    }

    #[staticmethod]
    fn load(path: &str, language: &str) -> PyResult<Self> {
        Ok(PyStopwordList(StopwordList::load(path, language).map_err(to_py)?))
    }

    fn __contains__(&self, lemma: &str) -> bool {
        self.0.contains(lemma)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }
}

#[pyclass(name = "Corpus", module = "morphocomp_py", skip_from_py_object)]
#[derive(Clone)]
pub struct PyCorpus(TaggedCorpus);

#[pymethods]
impl PyCorpus {
    /// `sentences` is a list of sentences, each a list of `(surface, lemma, pos)`.
    #[staticmethod]
    fn from_sentences(language: &str, sentences: Vec<Vec<(String, String, String)>>) -> PyResult<Self> {
        let sentences = sentences
            .iter()
            .map(|s| {
                s.iter()
                    .map(|(w, l, p)| Token::new(w, l, p))
                    .collect::<morphocomp::Result<Vec<_>>>()
            })
            .collect::<morphocomp::Result<Vec<_>>>()
            .map_err(to_py)?;
        Ok(PyCorpus(TaggedCorpus::from_sentences(language, sentences)))
    }

    #[staticmethod]
    fn load(path: &str, language: &str) -> PyResult<Self> {
        Ok(PyCorpus(TaggedCorpus::load(path, language).map_err(to_py)?))
    }

    fn positions(&self, lemma: &str) -> Vec<usize> {
        self.0.positions(lemma).to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }
}

fn candidate_dicts<'py>(
    py: Python<'py>,
    cands: &[selector::CandidateTranslation],
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    cands
        .iter()
        .map(|c| {
            let d = PyDict::new(py);
            d.set_item("candidate", c.render())?;
            d.set_item("count", c.count())?;
            d.set_item("fertile", c.fertile)?;
            d.set_item("content_words", c.content_words)?;
            Ok(d)
        })
        .collect()
}

#[pyclass(name = "Extractor", module = "morphocomp_py")]
pub struct PyExtractor {
    resources: Resources,
    config: RunConfig,
}

#[pymethods]
impl PyExtractor {
    #[new]
    #[pyo3(signature = (
        source_inventory, target_inventory, translations, stopwords, corpus,
        source_variants = None, target_variants = None, fertile = true, max_gap = 3,
        min_base_length = 5, max_components = 4
    ))]
    #[allow(clippy::too_many_arguments)]
    fn new(
        source_inventory: &PyInventory,
        target_inventory: &PyInventory,
        translations: &PyTranslationTable,
        stopwords: &PyStopwordList,
        corpus: &PyCorpus,
        source_variants: Option<&PyVariantTable>,
        target_variants: Option<&PyVariantTable>,
        fertile: bool,
        max_gap: usize,
        min_base_length: usize,
        max_components: usize,
    ) -> PyResult<Self> {
        let config = RunConfig {
            pipeline: PipelineConfig {
                min_base_len: min_base_length,
                max_gap,
                max_minimal_components: max_components,
            },
            fertile_translations: fertile,
            source_language: source_inventory.0.language().to_string(),
            target_language: target_inventory.0.language().to_string(),
            ..RunConfig::default()
        };
        config.pipeline.validate().map_err(to_py)?;
        let empty = |lang: &str| CoreVariants::new(lang);
        let resources = Resources {
            source_variants: source_variants
                .map(|v| v.0.clone())
                .unwrap_or_else(|| empty(&config.source_language)),
            target_variants: target_variants
                .map(|v| v.0.clone())
                .unwrap_or_else(|| empty(&config.target_language)),
            source_inventory: source_inventory.0.clone(),
            target_inventory: target_inventory.0.clone(),
            translations: translations.0.clone(),
            stopwords: stopwords.0.clone(),
            corpus: corpus.0.clone(),
            checksums: Vec::new(),
        };
        Ok(PyExtractor { resources, config })
    }

    /// Loads every resource named in a run configuration file.
    #[staticmethod]
    #[pyo3(signature = (path, preset = None, fertile = None))]
    fn from_config(path: &str, preset: Option<&str>, fertile: Option<bool>) -> PyResult<Self> {
        let mut config = RunConfig::load(path).map_err(to_py)?;
        if let Some(p) = preset {
            config.preset = p.parse::<Preset>().map_err(to_py)?;
        }
        if let Some(f) = fertile {
            config.fertile_translations = f;
        }
        let resources = Resources::load(&config).map_err(to_py)?;
        Ok(PyExtractor { resources, config })
    }

    /// Ranked candidate translations of one term.
    fn translate<'py>(&self, py: Python<'py>, term: &str) -> PyResult<Vec<Bound<'py, PyDict>>> {
        let opts = ExtractOptions::from(&self.config);
        let cands = py.detach(|| pipeline::translate_term(term, &self.resources, &opts));
        candidate_dicts(py, &cands)
    }

    /// Lexicon TSV for a list of terms.
    #[pyo3(signature = (terms, workers = 1))]
    fn extract(&self, py: Python<'_>, terms: Vec<String>, workers: usize) -> PyResult<String> {
        let cfg = RunConfig {
            workers,
            ..self.config.clone()
        };
        let lex = py
            .detach(|| pipeline::run_extraction_with(&terms, &self.resources, &cfg))
            .map_err(to_py)?;
        Ok(lex.to_tsv())
    }
}

/// Every decomposition of `term` as a list of component groups.
#[pyfunction]
#[pyo3(signature = (term, inventory, min_base_length = 5, max_components = 4))]
fn decompose(term: &str, inventory: &PyInventory, min_base_length: usize, max_components: usize) -> PyResult<Vec<Vec<String>>> {
    let cfg = PipelineConfig {
        min_base_len: min_base_length,
        max_minimal_components: max_components,
        ..PipelineConfig::default()
    };
    cfg.validate().map_err(to_py)?;
    Ok(decomposer::decompose(term, &inventory.0, &cfg)
        .iter()
        .map(|d| d.forms().into_iter().map(str::to_string).collect())
        .collect())
}

fn provenance_name(p: Provenance) -> &'static str {
    match p {
        Provenance::Direct => "direct",
        Provenance::SourceVariant => "source_variant",
        Provenance::TargetVariant => "target_variant",
    }
}

/// `(form, bound, provenance)` translations of one component.
#[pyfunction]
#[pyo3(signature = (component, translations, source_variants = None, target_variants = None))]
fn translate_component(
    component: &str,
    translations: &PyTranslationTable,
    source_variants: Option<&PyVariantTable>,
    target_variants: Option<&PyVariantTable>,
) -> Vec<(String, bool, &'static str)> {
    let none = CoreVariants::new("");
    let t = Translator::new(
        &translations.0,
        source_variants.map_or(&none, |v| &v.0),
        target_variants.map_or(&none, |v| &v.0),
    );
    t.translate_component(component)
        .into_iter()
        .map(|i| (i.form, i.bound, provenance_name(i.provenance)))
        .collect()
}

/// Permutations and concatenations of `(form, bound)` items.
#[pyfunction]
fn r1_generate(items: Vec<(String, bool)>) -> Vec<Vec<String>> {
    let ts = TranslatedSeq {
        items: items
            .into_iter()
            .map(|(form, bound)| TranslatedItem {
                source: form.clone(),
                form,
                bound,
                provenance: Provenance::Direct,
            })
            .collect(),
    };
    recomposer::r1_generate(&ts).iter().map(LexicalSeq::key).collect()
}

/// Drops sequences containing a form that is bound-only in the target inventory.
#[pyfunction]
fn r2_filter(seqs: Vec<Vec<String>>, target_inventory: &PyInventory) -> Vec<Vec<String>> {
    let seqs = seqs.into_iter().map(LexicalSeq::from_forms).collect();
    recomposer::r2_filter(seqs, &target_inventory.0)
        .iter()
        .map(LexicalSeq::key)
        .collect()
}

/// Matched token positions of a lemma sequence.
#[pyfunction]
#[pyo3(signature = (lemmas, corpus, stopwords, max_gap = 3))]
fn match_sequence(lemmas: Vec<String>, corpus: &PyCorpus, stopwords: &PyStopwordList, max_gap: usize) -> Vec<Vec<usize>> {
    let cfg = PipelineConfig {
        max_gap,
        ..PipelineConfig::default()
    };
    selector::match_sequence(&LexicalSeq::from_forms(lemmas), &corpus.0, &stopwords.0, &cfg)
        .into_iter()
        .map(|s| s.positions)
        .collect()
}

#[pyfunction]
#[pyo3(signature = (word, language = "en"))]
fn stem(word: &str, language: &str) -> PyResult<String> {
    morphology::stem(word, language).map_err(to_py)
}

/// Coverage, precision and overall quality of an annotated lexicon file.
#[pyfunction]
fn evaluate<'py>(py: Python<'py>, path: &str) -> PyResult<Bound<'py, PyDict>> {
    let r = evaluation::evaluate(&AnnotatedLexicon::load(path).map_err(to_py)?).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("source_terms", r.source_terms)?;
    d.set_item("covered_terms", r.covered_terms)?;
    d.set_item("candidates", r.candidates)?;
    d.set_item("coverage", r.coverage)?;
    d.set_item("precision_gold", r.gold.precision)?;
    d.set_item("precision_silver", r.silver.precision)?;
    d.set_item("oq_gold", r.gold.overall_quality)?;
    d.set_item("oq_silver", r.silver.overall_quality)?;
    Ok(d)
}

/// Cohen's kappa over labels `gold`, `silver`, `incorrect`.
#[pyfunction]
fn kappa(first: Vec<String>, second: Vec<String>) -> PyResult<f64> {
    let parse = |v: Vec<String>| {
        v.iter()
            .map(|s| s.parse::<AnnotationLabel>())
            .collect::<morphocomp::Result<Vec<_>>>()
            .map_err(to_py)
    };
    evaluation::kappa(&parse(first)?, &parse(second)?).map_err(to_py)
}

/// `(score, forward, backward)`.
#[pyfunction]
fn comparability(source: &PyCorpus, target: &PyCorpus, dictionary: &PyTranslationTable) -> (f64, f64, f64) {
    let c = evaluation::comparability(&source.0, &target.0, &dictionary.0);
    (c.score, c.forward, c.backward)
}

#[pymodule]
fn morphocomp_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInventory>()?;
    m.add_class::<PyTranslationTable>()?;
    m.add_class::<PyVariantTable>()?;
    m.add_class::<PyStopwordList>()?;
    m.add_class::<PyCorpus>()?;
    m.add_class::<PyExtractor>()?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(translate_component, m)?)?;
    m.add_function(wrap_pyfunction!(r1_generate, m)?)?;
    m.add_function(wrap_pyfunction!(r2_filter, m)?)?;
    m.add_function(wrap_pyfunction!(match_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(stem, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(kappa, m)?)?;
    m.add_function(wrap_pyfunction!(comparability, m)?)?;
    Ok(())
}
