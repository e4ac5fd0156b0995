//! Recomposition of translated components into candidate lexical sequences.
//!
//! Every permutation of the translated items is cut into contiguous runs, and
//! each run is concatenated into one lexical item. Sequences are then filtered
//! by [`RecompositionRule`]s. The default rule drops sequences in which a
//! bound-only morpheme of the target language stands alone.

use std::collections::BTreeMap;
use std::fmt;

use crate::combinatorics::{contiguous_groupings, factorial, permutations};
use crate::resources::ComponentInventory;
use crate::translator::TranslatedSeq;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LexicalItem {
    pub form: String,
    /// Built by concatenating two or more translated components.
    pub compound: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LexicalSeq {
    pub items: Vec<LexicalItem>,
}

impl LexicalSeq {
    /// Sequence of plain (non-compound) items.
    pub fn from_forms<I, S>(forms: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        LexicalSeq {
            items: forms
                .into_iter()
                .map(|f| LexicalItem {
                    form: f.into(),
                    compound: false,
                })
                .collect(),
        }
    }

    pub fn forms(&self) -> Vec<&str> {
        self.items.iter().map(|i| i.form.as_str()).collect()
    }

    pub fn key(&self) -> Vec<String> {
        self.items.iter().map(|i| i.form.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

impl fmt::Display for LexicalSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.forms().join(", "))
    }
}

/// Upper bound on the raw (pre-dedup) output size of [`r1_generate`] for `n` items.
pub fn r1_raw_count(n: usize) -> usize {
    if n == 0 {
        0
    } else {
        factorial(n).saturating_mul(1usize << (n - 1))
    }
}

/// Emits every `(permutation, grouping)` pair as a sequence, duplicates included.
pub fn r1_generate_raw(ts: &TranslatedSeq) -> Vec<LexicalSeq> {
    r1_generate_raw_with(ts, true)
}

fn r1_generate_raw_with(ts: &TranslatedSeq, permute: bool) -> Vec<LexicalSeq> {
    let n = ts.len();
    let orders: Vec<Vec<usize>> = if permute {
        permutations(n).collect()
    } else {
        vec![(0..n).collect()]
    };
    let mut out = Vec::new();
    for order in orders {
        for runs in contiguous_groupings(n) {
            let items = runs
                .into_iter()
                .map(|run| LexicalItem {
                    compound: run.len() > 1,
                    form: order[run].iter().map(|&i| ts.items[i].form.as_str()).collect(),
                })
                .collect();
            out.push(LexicalSeq { items });
        }
    }
    out
}

fn dedup(seqs: Vec<LexicalSeq>) -> Vec<LexicalSeq> {
    let mut seen: BTreeMap<Vec<String>, ()> = BTreeMap::new();
    seqs.into_iter()
        .filter(|s| seen.insert(s.key(), ()).is_none())
        .collect()
}

/// All permutations × concatenation patterns, deduplicated by item strings
/// (first occurrence kept).
pub fn r1_generate(ts: &TranslatedSeq) -> Vec<LexicalSeq> {
    dedup(r1_generate_raw_with(ts, true))
}

/// Concatenation patterns of the items in their original order only.
pub fn r1_generate_in_order(ts: &TranslatedSeq) -> Vec<LexicalSeq> {
    dedup(r1_generate_raw_with(ts, false))
}

/// A filter applied to recomposed sequences.
pub trait RecompositionRule: Send + Sync {
    fn accepts(&self, seq: &LexicalSeq, target_inventory: &ComponentInventory) -> bool;
}

/// Rejects sequences containing an item that is listed in the target
/// inventory only as a prefix, confix or suffix. Items are checked whole, so
/// `cytotoxique` passes even though `cyto` is bound.
#[derive(Debug, Clone, Copy, Default)]
pub struct BoundnessRule;

impl RecompositionRule for BoundnessRule {
    fn accepts(&self, seq: &LexicalSeq, inv: &ComponentInventory) -> bool {
        !seq.items.iter().any(|item| inv.is_bound_only(&item.form))
    }
}

pub fn r2_filter(seqs: Vec<LexicalSeq>, target_inventory: &ComponentInventory) -> Vec<LexicalSeq> {
    r2_filter_with(seqs, target_inventory, &[&BoundnessRule])
}

pub fn r2_filter_with(
    seqs: Vec<LexicalSeq>,
    target_inventory: &ComponentInventory,
    rules: &[&dyn RecompositionRule],
) -> Vec<LexicalSeq> {
    seqs.into_iter()
        .filter(|s| rules.iter().all(|r| r.accepts(s, target_inventory)))
        .collect()
}
