//! Linguistic resources: morpheme inventories, translation and variant tables,
//! stopword lists and lemmatized corpora, with their on-disk TSV formats.
//!
//! All forms and lemmas are case-folded at load time, and positional hyphen
//! notation (`post-`, `-cyto-`, `-less`) is stripped: the [`ComponentKind`]
//! carries the position instead.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentKind {
    Prefix,
    Confix,
    Suffix,
    Free,
}

impl ComponentKind {
    pub const ALL: [ComponentKind; 4] = [
        ComponentKind::Prefix,
        ComponentKind::Confix,
        ComponentKind::Suffix,
        ComponentKind::Free,
    ];

    /// Tag used in inventory files.
    pub fn tag(self) -> &'static str {
        match self {
            ComponentKind::Prefix => "pref",
            ComponentKind::Confix => "conf",
            ComponentKind::Suffix => "suff",
            ComponentKind::Free => "free",
        }
    }

    /// Bound morphemes cannot occur as autonomous lexical items.
    pub fn is_bound(self) -> bool {
        self != ComponentKind::Free
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ComponentKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_lowercase().as_str() {
            "pref" | "prefix" => Ok(ComponentKind::Prefix),
            "conf" | "confix" => Ok(ComponentKind::Confix),
            "suff" | "suffix" => Ok(ComponentKind::Suffix),
            "free" => Ok(ComponentKind::Free),
            other => Err(Error::InvalidValue(format!("unknown component kind `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component {
    pub form: String,
    pub kind: ComponentKind,
    pub language: String,
}

impl Component {
    pub fn is_bound(&self) -> bool {
        self.kind.is_bound()
    }
}

impl fmt::Display for Component {
    /// Hyphen notation: `post-`, `-cyto-`, `-less`, `toxic`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ComponentKind::Prefix => write!(f, "{}-", self.form),
            ComponentKind::Confix => write!(f, "-{}-", self.form),
            ComponentKind::Suffix => write!(f, "-{}", self.form),
            ComponentKind::Free => f.write_str(&self.form),
        }
    }
}

/// Non-fatal issue found while loading a resource.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Warning {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line > 0 {
            write!(f, "line {}: {}", self.line, self.message)
        } else {
            f.write_str(&self.message)
        }
    }
}

/// A loaded resource together with the warnings raised while reading it.
#[derive(Debug, Clone)]
pub struct Loaded<T> {
    pub value: T,
    pub warnings: Vec<Warning>,
}

impl<T> Loaded<T> {
    fn new(value: T, warnings: Vec<Warning>) -> Self {
        Loaded { value, warnings }
    }
}

/// Case-folds a form and strips hyphen markers at both ends.
pub fn normalize_form(raw: &str) -> std::result::Result<String, String> {
    let form = raw.trim().trim_matches('-').to_lowercase();
    if form.is_empty() {
        return Err(format!("empty form `{raw}`"));
    }
    if form.chars().any(char::is_whitespace) {
        return Err(format!("form `{raw}` contains whitespace"));
    }
    Ok(form)
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Error::io(path, e))
}

/// Iterates `(line_number, line)` pairs, skipping blank and `#` comment lines.
fn data_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<(usize, String)>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Ok(line) => {
                let trimmed = line.trim_end_matches(['\r', '\n']);
                let t = trimmed.trim();
                if t.is_empty() || t.starts_with('#') {
                    None
                } else {
                    Some(Ok((i + 1, trimmed.to_string())))
                }
            }
            Err(e) => Some(Err(Error::parse(i + 1, e.to_string()))),
        })
}

/// Morpheme and lexical-item lists of one language, one set per kind.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ComponentInventory {
    language: String,
    sets: [BTreeSet<String>; 4],
}

impl ComponentInventory {
    pub fn new(language: impl Into<String>) -> Self {
        ComponentInventory {
            language: language.into(),
            sets: Default::default(),
        }
    }

    pub fn language(&self) -> &str {
        &self.language
    }

    /// Inserts a form, returning whether it was new for that kind.
    pub fn insert(&mut self, form: &str, kind: ComponentKind) -> Result<bool> {
        let form = normalize_form(form).map_err(Error::InvalidValue)?;
        if form.contains('-') {
            return Err(Error::InvalidValue(format!(
                "component `{form}` contains an inner hyphen"
            )));
        }
        Ok(self.sets[kind.index()].insert(form))
    }

    pub fn contains(&self, form: &str, kind: ComponentKind) -> bool {
        self.sets[kind.index()].contains(form)
    }

    /// Every kind the form is listed under.
    pub fn kinds(&self, form: &str) -> Vec<ComponentKind> {
        ComponentKind::ALL
            .into_iter()
            .filter(|k| self.contains(form, *k))
            .collect()
    }

    /// True when the form is listed, and only under bound kinds.
    pub fn is_bound_only(&self, form: &str) -> bool {
        !self.contains(form, ComponentKind::Free)
            && ComponentKind::ALL
                .into_iter()
                .any(|k| k.is_bound() && self.contains(form, k))
    }

    pub fn forms(&self, kind: ComponentKind) -> impl Iterator<Item = &str> {
        self.sets[kind.index()].iter().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.sets.iter().map(BTreeSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(form, kind)` pairs in kind order, then form order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, ComponentKind)> {
        ComponentKind::ALL
            .into_iter()
            .flat_map(move |k| self.forms(k).map(move |f| (f, k)))
    }

    pub fn components(&self) -> impl Iterator<Item = Component> + '_ {
        self.iter().map(|(form, kind)| Component {
            form: form.to_string(),
            kind,
            language: self.language.clone(),
        })
    }

    /// Merges all entries of `other` into `self`.
    pub fn extend(&mut self, other: &ComponentInventory) {
        for (set, theirs) in self.sets.iter_mut().zip(other.sets.iter()) {
            set.extend(theirs.iter().cloned());
        }
    }

    pub fn from_reader<R: BufRead>(reader: R, language: &str) -> Result<Loaded<Self>> {
        let mut inv = ComponentInventory::new(language);
        let mut warnings = Vec::new();
        for item in data_lines(reader) {
            let (n, line) = item?;
            let mut cols = line.split('\t');
            let (Some(form), Some(kind)) = (cols.next(), cols.next()) else {
                return Err(Error::parse(n, "expected `form<TAB>kind`"));
            };
            let kind: ComponentKind = kind
                .parse()
                .map_err(|e: Error| Error::parse(n, e.to_string()))?;
            let form = normalize_form(form).map_err(|m| Error::parse(n, m))?;
            if form.contains('-') {
                warnings.push(Warning {
                    line: n,
                    message: format!("component `{form}` contains an inner hyphen, dropped"),
                });
                continue;
            }
            inv.sets[kind.index()].insert(form);
        }
        Ok(Loaded::new(inv, warnings))
    }

    pub fn load(path: impl AsRef<Path>, language: &str) -> Result<Loaded<Self>> {
        let path = path.as_ref();
        Self::from_reader(open(path)?, language).map_err(|e| e.with_path(path))
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> io::Result<()> {
        for (form, kind) in self.iter() {
            writeln!(w, "{form}\t{kind}")?;
        }
        Ok(())
    }
}

/// Convenience wrapper returning only the inventory; warnings are logged.
pub fn load_inventory(path: impl AsRef<Path>, language: &str) -> Result<ComponentInventory> {
    let loaded = ComponentInventory::load(path.as_ref(), language)?;
    log_warnings(path.as_ref(), &loaded.warnings);
    Ok(loaded.value)
}

/// A target-language translation and whether it is a bound morpheme there.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TargetForm {
    pub form: String,
    pub bound: bool,
}

impl TargetForm {
    pub fn new(form: impl Into<String>, bound: bool) -> Self {
        TargetForm {
            form: form.into(),
            bound,
        }
    }

    fn tag(&self) -> &'static str {
        if self.bound {
            "bound"
        } else {
            "free"
        }
    }
}

/// Many-to-many mapping from source components to target forms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TranslationTable {
    entries: BTreeMap<String, BTreeSet<TargetForm>>,
}

impl TranslationTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, source: &str, target: &str, bound: bool) -> Result<bool> {
        let source = normalize_form(source).map_err(Error::InvalidValue)?;
        let target = normalize_form(target).map_err(Error::InvalidValue)?;
        Ok(self
            .entries
            .entry(source)
            .or_default()
            .insert(TargetForm::new(target, bound)))
    }

    /// Translations of `source`; absent keys yield nothing.
    pub fn lookup<'a>(&'a self, source: &str) -> impl Iterator<Item = &'a TargetForm> + 'a {
        self.entries.get(source).into_iter().flatten()
    }

    pub fn contains_key(&self, source: &str) -> bool {
        self.entries.contains_key(source)
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &BTreeSet<TargetForm>)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Number of source keys.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn merge(&mut self, other: &TranslationTable) {
        for (k, v) in &other.entries {
            self.entries
                .entry(k.clone())
                .or_default()
                .extend(v.iter().cloned());
        }
    }

    /// Reverse direction: every target form maps back to its sources (as free forms).
    pub fn inverted(&self) -> TranslationTable {
        let mut inv = TranslationTable::new();
        for (src, targets) in &self.entries {
            for t in targets {
                inv.entries
                    .entry(t.form.clone())
                    .or_default()
                    .insert(TargetForm::new(src.clone(), false));
            }
        }
        inv
    }

    /// Warns about targets that the target inventory does not list.
    pub fn validate_targets(&self, target_inventory: &ComponentInventory) -> Vec<Warning> {
        let mut out = Vec::new();
        for (src, targets) in &self.entries {
            for t in targets {
                let known = if t.bound {
                    ComponentKind::ALL
                        .into_iter()
                        .any(|k| k.is_bound() && target_inventory.contains(&t.form, k))
                } else {
                    target_inventory.contains(&t.form, ComponentKind::Free)
                };
                if !known {
                    out.push(Warning {
                        line: 0,
                        message: format!(
                            "translation `{src}` → `{}` ({}) is absent from the target inventory",
                            t.form,
                            t.tag()
                        ),
                    });
                }
            }
        }
        out
    }

    pub fn from_reader<R: BufRead>(reader: R) -> Result<Loaded<Self>> {
        let mut table = TranslationTable::new();
        for item in data_lines(reader) {
            let (n, line) = item?;
            let (src, targets) = line
                .split_once('\t')
                .ok_or_else(|| Error::parse(n, "expected `source<TAB>targets`"))?;
            let src = normalize_form(src).map_err(|m| Error::parse(n, m))?;
            let mut set = BTreeSet::new();
            for target in targets.split('|').filter(|t| !t.trim().is_empty()) {
                let (form, tag) = target.trim().rsplit_once(':').ok_or_else(|| {
                    Error::parse(n, format!("target `{target}` lacks a `:bound`/`:free` tag"))
                })?;
                let bound = match tag.trim() {
                    "bound" => true,
                    "free" => false,
                    other => {
                        return Err(Error::parse(n, format!("unknown bound tag `{other}`")));
                    }
                };
                let form = normalize_form(form).map_err(|m| Error::parse(n, m))?;
                set.insert(TargetForm::new(form, bound));
            }
            if set.is_empty() {
                return Err(Error::parse(n, format!("no targets for `{src}`")));
            }
            table.entries.entry(src).or_default().extend(set);
        }
        Ok(Loaded::new(table, Vec::new()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Loaded<Self>> {
        let path = path.as_ref();
        Self::from_reader(open(path)?).map_err(|e| e.with_path(path))
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> io::Result<()> {
        for (src, targets) in &self.entries {
            let joined: Vec<String> = targets
                .iter()
                .map(|t| format!("{}:{}", t.form, t.tag()))
                .collect();
            writeln!(w, "{src}\t{}", joined.join("|"))?;
        }
        Ok(())
    }
}

pub fn load_translation_table(path: impl AsRef<Path>) -> Result<TranslationTable> {
    let loaded = TranslationTable::load(path.as_ref())?;
    log_warnings(path.as_ref(), &loaded.warnings);
    Ok(loaded.value)
}

/// Directional mapping between related lexical units of one language.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VariantTable {
    language: String,
    entries: BTreeMap<String, BTreeSet<String>>,
}

impl VariantTable {
    pub fn new(language: impl Into<String>) -> Self {
        VariantTable {
            language: language.into(),
            entries: BTreeMap::new(),
        }
    }

    pub fn language(&self) -> &str {
        &self.language
    }

    /// Adds `from → to`. Self-mappings are refused and return `Ok(false)`.
    pub fn insert(&mut self, from: &str, to: &str) -> Result<bool> {
        let from = normalize_form(from).map_err(Error::InvalidValue)?;
        let to = normalize_form(to).map_err(Error::InvalidValue)?;
        if from == to {
            return Ok(false);
        }
        Ok(self.entries.entry(from).or_default().insert(to))
    }

    pub fn related<'a>(&'a self, form: &str) -> impl Iterator<Item = &'a str> + 'a {
        self.entries
            .get(form)
            .into_iter()
            .flatten()
            .map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &BTreeSet<String>)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Number of keys.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Number of directional `from → to` pairs.
    pub fn pair_count(&self) -> usize {
        self.entries.values().map(BTreeSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn merge(&mut self, other: &VariantTable) {
        for (k, v) in &other.entries {
            self.entries
                .entry(k.clone())
                .or_default()
                .extend(v.iter().cloned());
        }
    }

    pub fn from_reader<R: BufRead>(reader: R, language: &str) -> Result<Loaded<Self>> {
        let mut table = VariantTable::new(language);
        let mut warnings = Vec::new();
        for item in data_lines(reader) {
            let (n, line) = item?;
            let (src, related) = line
                .split_once('\t')
                .ok_or_else(|| Error::parse(n, "expected `form<TAB>related forms`"))?;
            let src = normalize_form(src).map_err(|m| Error::parse(n, m))?;
            for rel in related.split('|').filter(|r| !r.trim().is_empty()) {
                let rel = normalize_form(rel).map_err(|m| Error::parse(n, m))?;
                if rel == src {
                    warnings.push(Warning {
                        line: n,
                        message: format!("`{src}` maps to itself, entry dropped"),
                    });
                    continue;
                }
                table.entries.entry(src.clone()).or_default().insert(rel);
            }
        }
        Ok(Loaded::new(table, warnings))
    }

    pub fn load(path: impl AsRef<Path>, language: &str) -> Result<Loaded<Self>> {
        let path = path.as_ref();
        Self::from_reader(open(path)?, language).map_err(|e| e.with_path(path))
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> io::Result<()> {
        for (src, rel) in &self.entries {
            let joined: Vec<&str> = rel.iter().map(String::as_str).collect();
            writeln!(w, "{src}\t{}", joined.join("|"))?;
        }
        Ok(())
    }
}

pub fn load_variant_table(path: impl AsRef<Path>, language: &str) -> Result<VariantTable> {
    let loaded = VariantTable::load(path.as_ref(), language)?;
    log_warnings(path.as_ref(), &loaded.warnings);
    Ok(loaded.value)
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StopwordList {
    language: String,
    lemmas: BTreeSet<String>,
}

impl StopwordList {
    pub fn new(language: impl Into<String>) -> Self {
        StopwordList {
            language: language.into(),
            lemmas: BTreeSet::new(),
        }
    }

    pub fn from_lemmas<I, S>(language: &str, lemmas: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut list = StopwordList::new(language);
        for l in lemmas {
            list.insert(l.as_ref());
        }
        list
    }

    pub fn language(&self) -> &str {
        &self.language
    }

    pub fn insert(&mut self, lemma: &str) -> bool {
        let lemma = lemma.trim().to_lowercase();
        !lemma.is_empty() && self.lemmas.insert(lemma)
    }

    pub fn contains(&self, lemma: &str) -> bool {
        self.lemmas.contains(lemma)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.lemmas.iter().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.lemmas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lemmas.is_empty()
    }

    pub fn from_reader<R: BufRead>(reader: R, language: &str) -> Result<Self> {
        let mut list = StopwordList::new(language);
        for (i, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| Error::parse(i + 1, e.to_string()))?;
            list.insert(&line);
        }
        Ok(list)
    }

    pub fn load(path: impl AsRef<Path>, language: &str) -> Result<Self> {
        let path = path.as_ref();
        Self::from_reader(open(path)?, language).map_err(|e| e.with_path(path))
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> io::Result<()> {
        for l in &self.lemmas {
            writeln!(w, "{l}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Token {
    pub surface: String,
    pub lemma: String,
    pub pos: String,
}

impl Token {
    /// Builds a token, case-folding the lemma.
    pub fn new(surface: &str, lemma: &str, pos: &str) -> Result<Self> {
        let lemma = lemma.trim().to_lowercase();
        let pos = pos.trim().to_string();
        if lemma.is_empty() || pos.is_empty() {
            return Err(Error::InvalidValue(format!(
                "token `{surface}` has an empty lemma or POS"
            )));
        }
        Ok(Token {
            surface: surface.to_string(),
            lemma,
            pos,
        })
    }
}

/// Lemmatized, POS-tagged corpus with a lemma → positions index.
///
/// Sentence boundaries are kept: every token records the sentence it belongs to.
#[derive(Debug, Clone, Default)]
pub struct TaggedCorpus {
    language: String,
    tokens: Vec<Token>,
    sentence_of: Vec<usize>,
    index: HashMap<String, Vec<usize>>,
}

impl TaggedCorpus {
    pub fn from_sentences(language: &str, sentences: Vec<Vec<Token>>) -> Self {
        let mut tokens = Vec::new();
        let mut sentence_of = Vec::new();
        for (s, sentence) in sentences.into_iter().filter(|s| !s.is_empty()).enumerate() {
            for t in sentence {
                tokens.push(t);
                sentence_of.push(s);
            }
        }
        let mut index: HashMap<String, Vec<usize>> = HashMap::new();
        for (i, t) in tokens.iter().enumerate() {
            index.entry(t.lemma.clone()).or_default().push(i);
        }
        TaggedCorpus {
            language: language.to_string(),
            tokens,
            sentence_of,
            index,
        }
    }

    pub fn language(&self) -> &str {
        &self.language
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn token(&self, i: usize) -> &Token {
        &self.tokens[i]
    }

    /// Sorted positions of tokens bearing `lemma`.
    pub fn positions(&self, lemma: &str) -> &[usize] {
        self.index.get(lemma).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn sentence_of(&self, i: usize) -> usize {
        self.sentence_of[i]
    }

    pub fn sentence_count(&self) -> usize {
        self.sentence_of.last().map_or(0, |s| s + 1)
    }

    pub fn contains_lemma(&self, lemma: &str) -> bool {
        self.index.contains_key(lemma)
    }

    /// Distinct lemmas (unordered).
    pub fn vocabulary(&self) -> impl Iterator<Item = &str> {
        self.index.keys().map(String::as_str)
    }

    pub fn sentences(&self) -> impl Iterator<Item = &[Token]> {
        self.sentence_of
            .chunk_by(|a, b| a == b)
            .scan(0usize, |start, chunk| {
                let s = *start;
                *start += chunk.len();
                Some(&self.tokens[s..s + chunk.len()])
            })
    }

    pub fn from_reader<R: BufRead>(reader: R, language: &str) -> Result<Self> {
        let mut sentences = vec![Vec::new()];
        for (i, line) in reader.lines().enumerate() {
            let n = i + 1;
            let line = line.map_err(|e| Error::parse(n, e.to_string()))?;
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() {
                if !sentences.last().is_some_and(Vec::is_empty) {
                    sentences.push(Vec::new());
                }
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 3 {
                return Err(Error::parse(
                    n,
                    format!("expected 3 tab-separated fields, found {}", cols.len()),
                ));
            }
            let tok = Token::new(cols[0], cols[1], cols[2]).map_err(|e| Error::parse(n, e.to_string()))?;
            sentences.last_mut().expect("non-empty").push(tok);
        }
        Ok(TaggedCorpus::from_sentences(language, sentences))
    }

    pub fn load(path: impl AsRef<Path>, language: &str) -> Result<Self> {
        let path = path.as_ref();
        let corpus = Self::from_reader(open(path)?, language).map_err(|e| e.with_path(path))?;
        log::info!("{}: {} tokens", path.display(), corpus.len());
        Ok(corpus)
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> io::Result<()> {
        for (i, sentence) in self.sentences().enumerate() {
            if i > 0 {
                writeln!(w)?;
            }
            for t in sentence {
                writeln!(w, "{}\t{}\t{}", t.surface, t.lemma, t.pos)?;
            }
        }
        Ok(())
    }
}

pub fn load_corpus(path: impl AsRef<Path>, language: &str) -> Result<TaggedCorpus> {
    TaggedCorpus::load(path, language)
}

pub fn load_stopwords(path: impl AsRef<Path>, language: &str) -> Result<StopwordList> {
    StopwordList::load(path, language)
}

fn log_warnings(path: &Path, warnings: &[Warning]) {
    for w in warnings {
        log::warn!("{}: {w}", path.display());
    }
}

/// Numeric knobs of the decomposition and selection steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineConfig {
    /// Minimum residual length after stripping a prefix (strict: `n - i > min_base_len`).
    pub min_base_len: usize,
    /// Maximum index distance between consecutive matched tokens.
    pub max_gap: usize,
    /// Splits with more minimal components are discarded.
    pub max_minimal_components: usize,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            min_base_len: 5,
            max_gap: 3,
            max_minimal_components: 4,
        }
    }
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<()> {
        if self.min_base_len < 1 {
            return Err(Error::Config("min_base_len must be >= 1".into()));
        }
        if self.max_gap < 1 {
            return Err(Error::Config("max_gap must be >= 1".into()));
        }
        if self.max_minimal_components < 1 {
            return Err(Error::Config("max_minimal_components must be >= 1".into()));
        }
        Ok(())
    }
}
