//! Decomposition of a single-word term into morpheme components.
//!
//! Step one ([`d1_minimal_split`]) segments the term into minimal components
//! following `[Prefix] (Confix|Free)+ [Suffix]`, keeping only the splits with
//! the highest component count. Step two ([`d2_enumerate`]) lists every way
//! of concatenating adjacent minimal components, which lets a longer unit
//! such as `cytotoxic` be looked up whole when its parts cannot.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;

use crate::combinatorics::contiguous_groupings;
use crate::resources::{ComponentInventory, ComponentKind, PipelineConfig, TranslationTable};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morph {
    pub form: String,
    pub kind: ComponentKind,
}

impl Morph {
    pub fn new(form: impl Into<String>, kind: ComponentKind) -> Self {
        Morph {
            form: form.into(),
            kind,
        }
    }
}

/// Minimal components covering a term left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinimalSplit(Vec<Morph>);

impl MinimalSplit {
    pub fn new(morphs: Vec<Morph>) -> Self {
        MinimalSplit(morphs)
    }

    pub fn morphs(&self) -> &[Morph] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation of all forms.
    pub fn surface(&self) -> String {
        self.0.iter().map(|m| m.form.as_str()).collect()
    }
}

impl fmt::Display for MinimalSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let forms: Vec<&str> = self.0.iter().map(|m| m.form.as_str()).collect();
        f.write_str(&forms.join("+"))
    }
}

/// A run of adjacent minimal components concatenated into one string.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Group {
    pub form: String,
    /// Indices of the covered elements in the originating split.
    pub span: Range<usize>,
    pub kinds: Vec<ComponentKind>,
}

impl Group {
    /// True when the group is a single minimal component.
    pub fn is_minimal(&self) -> bool {
        self.span.len() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    groups: Vec<Group>,
}

impl Decomposition {
    pub fn groups(&self) -> &[Group] {
        &self.groups
    }

    pub fn forms(&self) -> Vec<&str> {
        self.groups.iter().map(|g| g.form.as_str()).collect()
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// Builds a decomposition from plain strings, one minimal element per group.
    pub fn from_forms<I, S>(forms: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let groups = forms
            .into_iter()
            .enumerate()
            .map(|(i, f)| Group {
                form: f.into(),
                span: i..i + 1,
                kinds: Vec::new(),
            })
            .collect();
        Decomposition { groups }
    }

    /// Per group: true iff the group string has no entry of its own in `trans`.
    pub fn boundness(&self, trans: &TranslationTable) -> Vec<bool> {
        self.groups
            .iter()
            .map(|g| !trans.contains_key(&g.form))
            .collect()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.forms().join("+"))
    }
}

/// Which splits step one may produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SplitGrammar {
    /// `[Prefix] (Confix|Free)+ [Suffix]`
    #[default]
    Full,
    /// Exactly a prefix followed by one free lexical base.
    PrefixFree,
}

/// Case-folds a term and drops leading/trailing hyphens.
pub fn normalize_term(term: &str) -> String {
    term.trim().trim_matches('-').to_lowercase()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Start,
    Core,
}

struct SplitSearch<'a> {
    chars: Vec<char>,
    inv: &'a ComponentInventory,
    cfg: &'a PipelineConfig,
    /// Length of the term without hyphens.
    letters: usize,
    out: Vec<MinimalSplit>,
}

impl SplitSearch<'_> {
    fn piece(&self, range: Range<usize>) -> Option<String> {
        let slice = &self.chars[range];
        if slice.is_empty() || slice.contains(&'-') {
            None
        } else {
            Some(slice.iter().collect())
        }
    }

    /// Position after the hyphens starting at `pos`.
    fn skip_hyphens(&self, mut pos: usize) -> usize {
        while pos < self.chars.len() && self.chars[pos] == '-' {
            pos += 1;
        }
        pos
    }

    fn run(&mut self, pos: usize, state: State, acc: &mut Vec<Morph>) {
        if acc.len() >= self.cfg.max_minimal_components {
            return;
        }
        let len = self.chars.len();
        if state == State::Start {
            for end in pos + 1..len {
                let Some(form) = self.piece(pos..end) else { break };
                let prefix_len = end - pos;
                if self.inv.contains(&form, ComponentKind::Prefix)
                    && self.letters - prefix_len > self.cfg.min_base_len
                {
                    acc.push(Morph::new(form, ComponentKind::Prefix));
                    let next = self.skip_hyphens(end);
                    self.run(next, State::Core, acc);
                    acc.pop();
                }
            }
            self.run(pos, State::Core, acc);
            return;
        }

        let has_core = acc.iter().any(|m| matches!(m.kind, ComponentKind::Confix | ComponentKind::Free));
        for end in pos + 1..=len {
            let Some(form) = self.piece(pos..end) else { break };
            for kind in [ComponentKind::Confix, ComponentKind::Free] {
                if !self.inv.contains(&form, kind) {
                    continue;
                }
                acc.push(Morph::new(form.clone(), kind));
                if end == len {
                    self.out.push(MinimalSplit(acc.clone()));
                } else {
                    let next = self.skip_hyphens(end);
                    if next < len {
                        self.run(next, State::Core, acc);
                    }
                }
                acc.pop();
            }
            if end == len && has_core && self.inv.contains(&form, ComponentKind::Suffix) {
                acc.push(Morph::new(form, ComponentKind::Suffix));
                self.out.push(MinimalSplit(acc.clone()));
                acc.pop();
            }
        }
    }
}

/// Every grammar-valid split with at most `max_minimal_components` elements.
pub fn all_splits(term: &str, inv: &ComponentInventory, cfg: &PipelineConfig) -> Vec<MinimalSplit> {
    let chars: Vec<char> = normalize_term(term).chars().collect();
    if chars.is_empty() {
        return Vec::new();
    }
    let letters = chars.iter().filter(|c| **c != '-').count();
    let mut search = SplitSearch {
        chars,
        inv,
        cfg,
        letters,
        out: Vec::new(),
    };
    search.run(0, State::Start, &mut Vec::new());
    let set: BTreeSet<MinimalSplit> = search.out.into_iter().collect();
    set.into_iter().collect()
}

/// Splits a term into minimal components, keeping only the splits with the
/// maximal component count. An empty result means the term cannot be segmented.
pub fn d1_minimal_split(term: &str, inv: &ComponentInventory, cfg: &PipelineConfig) -> Vec<MinimalSplit> {
    d1_minimal_split_with(term, inv, cfg, SplitGrammar::Full)
}

pub fn d1_minimal_split_with(
    term: &str,
    inv: &ComponentInventory,
    cfg: &PipelineConfig,
    grammar: SplitGrammar,
) -> Vec<MinimalSplit> {
    let mut splits = all_splits(term, inv, cfg);
    if grammar == SplitGrammar::PrefixFree {
        splits.retain(|s| {
            matches!(
                s.morphs(),
                [a, b] if a.kind == ComponentKind::Prefix && b.kind == ComponentKind::Free
            )
        });
    }
    let Some(best) = splits.iter().map(MinimalSplit::len).max() else {
        return splits;
    };
    splits.retain(|s| s.len() == best);
    splits
}

/// All `2^(n-1)` concatenation patterns of a minimal split.
pub fn d2_enumerate(split: &MinimalSplit) -> Vec<Decomposition> {
    let morphs = split.morphs();
    contiguous_groupings(morphs.len())
        .map(|runs| Decomposition {
            groups: runs
                .into_iter()
                .map(|span| Group {
                    form: morphs[span.clone()].iter().map(|m| m.form.as_str()).collect(),
                    kinds: morphs[span.clone()].iter().map(|m| m.kind).collect(),
                    span,
                })
                .collect(),
        })
        .collect()
}

/// Decomposes a term: union of step two over every step-one split,
/// deduplicated by group strings. Ordered by group count (descending), then
/// lexicographically.
pub fn decompose(term: &str, inv: &ComponentInventory, cfg: &PipelineConfig) -> Vec<Decomposition> {
    decompose_with(term, inv, cfg, SplitGrammar::Full)
}

pub fn decompose_with(
    term: &str,
    inv: &ComponentInventory,
    cfg: &PipelineConfig,
    grammar: SplitGrammar,
) -> Vec<Decomposition> {
    let mut seen = BTreeSet::new();
    let mut out: Vec<Decomposition> = d1_minimal_split_with(term, inv, cfg, grammar)
        .iter()
        .flat_map(d2_enumerate)
        .filter(|d| seen.insert(d.forms().iter().map(|s| s.to_string()).collect::<Vec<_>>()))
        .collect();
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.forms().cmp(&b.forms())));
    out
}
