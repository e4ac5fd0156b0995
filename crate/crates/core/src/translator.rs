//! Group-wise translation of decompositions.
//!
//! A component `c` translates to the union of its direct translations, the
//! translations of its source-language variants, and the target-language
//! variants of its direct translations. Variants are applied at depth one
//! only. A decomposition translates to the cross-product of its groups'
//! translations, or to nothing if any group has none.

use std::collections::HashSet;

use itertools::Itertools;

use crate::decomposer::Decomposition;
use crate::resources::{TranslationTable, VariantTable};

/// Which branch of the translation union produced an item.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    Direct,
    SourceVariant,
    TargetVariant,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TranslatedItem {
    pub form: String,
    pub bound: bool,
    pub provenance: Provenance,
    /// The source group this item translates.
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TranslatedSeq {
    pub items: Vec<TranslatedItem>,
}

impl TranslatedSeq {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn forms(&self) -> Vec<&str> {
        self.items.iter().map(|i| i.form.as_str()).collect()
    }
}

/// Borrowed view of the tables used for translation.
#[derive(Debug, Clone, Copy)]
pub struct Translator<'a> {
    pub trans: &'a TranslationTable,
    pub var_src: &'a VariantTable,
    pub var_tgt: &'a VariantTable,
}

impl<'a> Translator<'a> {
    pub fn new(trans: &'a TranslationTable, var_src: &'a VariantTable, var_tgt: &'a VariantTable) -> Self {
        Translator { trans, var_src, var_tgt }
    }

    /// Translations of a single group string, deduplicated by `(form, bound)`
    /// with the first provenance kept (direct, then source variant, then
    /// target variant).
    pub fn translate_component(&self, component: &str) -> Vec<TranslatedItem> {
        let mut seen: HashSet<(String, bool)> = HashSet::new();
        let mut out = Vec::new();
        let mut push = |form: &str, bound: bool, provenance: Provenance| {
            if seen.insert((form.to_string(), bound)) {
                out.push(TranslatedItem {
                    form: form.to_string(),
                    bound,
                    provenance,
                    source: component.to_string(),
                });
            }
        };

        for t in self.trans.lookup(component) {
            push(&t.form, t.bound, Provenance::Direct);
        }
        for variant in self.var_src.related(component) {
            for t in self.trans.lookup(variant) {
                push(&t.form, t.bound, Provenance::SourceVariant);
            }
        }
        for t in self.trans.lookup(component) {
            for variant in self.var_tgt.related(&t.form) {
                push(variant, false, Provenance::TargetVariant);
            }
        }
        out
    }

    /// Cross-product of the groups' translations; empty as soon as one group
    /// is untranslatable.
    pub fn translate_decomposition(&self, d: &Decomposition) -> Vec<TranslatedSeq> {
        if d.is_empty() {
            return Vec::new();
        }
        let per_group: Vec<Vec<TranslatedItem>> = d
            .groups()
            .iter()
            .map(|g| self.translate_component(&g.form))
            .collect();
        if per_group.iter().any(Vec::is_empty) {
            return Vec::new();
        }
        per_group
            .into_iter()
            .multi_cartesian_product()
            .map(|items| TranslatedSeq { items })
            .collect()
    }

    /// Number of sequences [`Self::translate_decomposition`] would yield.
    pub fn count_translations(&self, d: &Decomposition) -> usize {
        d.groups()
            .iter()
            .map(|g| self.translate_component(&g.form).len())
            .fold(1usize, usize::saturating_mul)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy_tables() -> (TranslationTable, VariantTable, VariantTable) {
        let mut trans = TranslationTable::new();
        trans.insert("cyto", "cyto", true).unwrap();
        trans.insert("cyto", "cellule", false).unwrap();
        trans.insert("toxic", "toxique", false).unwrap();
        trans.insert("cytotoxicity", "cytotoxicité", false).unwrap();
        let mut var_en = VariantTable::new("en");
        var_en.insert("cytotoxic", "cytotoxicity").unwrap();
        (trans, var_en, VariantTable::new("fr"))
    }

    fn pairs(items: &[TranslatedItem]) -> Vec<(&str, bool)> {
        items.iter().map(|i| (i.form.as_str(), i.bound)).collect()
    }

    #[test]
    fn components_of_the_toy_example() {
        let (trans, vs, vt) = toy_tables();
        let t = Translator::new(&trans, &vs, &vt);
        assert_eq!(pairs(&t.translate_component("toxic")), [("toxique", false)]);
        assert_eq!(
            pairs(&t.translate_component("cyto")),
            [("cellule", false), ("cyto", true)]
        );
        let via_variant = t.translate_component("cytotoxic");
        assert_eq!(pairs(&via_variant), [("cytotoxicité", false)]);
        assert_eq!(via_variant[0].provenance, Provenance::SourceVariant);
        assert!(t.translate_component("unknown").is_empty());
    }

    #[test]
    fn target_variants_are_free_and_deduplicated() {
        let mut trans = TranslationTable::new();
        trans.insert("cardio", "cardio", true).unwrap();
        trans.insert("cardio", "cœur", false).unwrap();
        let vs = VariantTable::new("en");
        let mut vt = VariantTable::new("fr");
        vt.insert("cœur", "cardiaque").unwrap();
        vt.insert("cardio", "cœur").unwrap();
        let t = Translator::new(&trans, &vs, &vt);
        let items = t.translate_component("cardio");
        assert_eq!(
            pairs(&items),
            [("cardio", true), ("cœur", false), ("cardiaque", false)]
        );
        assert_eq!(items[1].provenance, Provenance::Direct);
        assert_eq!(items[2].provenance, Provenance::TargetVariant);
    }

    #[test]
    fn variants_are_not_chained() {
        let mut trans = TranslationTable::new();
        trans.insert("c", "x", false).unwrap();
        let mut vs = VariantTable::new("en");
        vs.insert("a", "b").unwrap();
        vs.insert("b", "c").unwrap();
        let vt = VariantTable::new("fr");
        let t = Translator::new(&trans, &vs, &vt);
        assert!(t.translate_component("a").is_empty());
    }

    #[test]
    fn decompositions_of_the_toy_example() {
        let (trans, vs, vt) = toy_tables();
        let t = Translator::new(&trans, &vs, &vt);
        let seqs = t.translate_decomposition(&Decomposition::from_forms(["cyto", "toxic"]));
        let got: Vec<Vec<(&str, bool)>> = seqs.iter().map(|s| pairs(&s.items)).collect();
        assert_eq!(
            got,
            [
                vec![("cellule", false), ("toxique", false)],
                vec![("cyto", true), ("toxique", false)],
            ]
        );
        for s in &seqs {
            assert_eq!(s.items[0].source, "cyto");
            assert_eq!(s.items[1].source, "toxic");
        }
        let seqs = t.translate_decomposition(&Decomposition::from_forms(["cytotoxic"]));
        assert_eq!(seqs.len(), 1);
        assert_eq!(seqs[0].forms(), ["cytotoxicité"]);
    }

    #[test]
    fn one_untranslatable_group_fails_the_whole_decomposition() {
        let (trans, vs, vt) = toy_tables();
        let t = Translator::new(&trans, &vs, &vt);
        let d = Decomposition::from_forms(["non", "toxic"]);
        assert!(t.translate_decomposition(&d).is_empty());
        assert_eq!(t.count_translations(&d), 0);
    }
}
