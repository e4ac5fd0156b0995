mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use morphocomp::decomposer::{all_splits, d1_minimal_split, decompose, normalize_term, Decomposition};
use morphocomp::evaluation::{comparability, evaluate, kappa, AnnotatedLexicon, AnnotationLabel};
use morphocomp::morphology::{build_families, harvest_terms, Stemmer};
use morphocomp::pipeline::{run_extraction_with, Resources, RunConfig};
use morphocomp::recomposer::{r1_generate, r1_raw_count, r2_filter};
use morphocomp::resources::{
    ComponentInventory, ComponentKind, PipelineConfig, StopwordList, TaggedCorpus, Token, TranslationTable,
    VariantTable,
};
use morphocomp::selector::{collect_candidates, match_sequence};
use morphocomp::translator::{Provenance, TranslatedItem, TranslatedSeq, Translator};

fn kind() -> impl Strategy<Value = ComponentKind> {
    prop::sample::select(ComponentKind::ALL.to_vec())
}

fn inventory() -> impl Strategy<Value = ComponentInventory> {
    prop::collection::vec(("[ab]{1,3}", kind()), 1..12).prop_map(|entries| {
        let mut inv = ComponentInventory::new("en");
        for (f, k) in entries {
            inv.insert(&f, k).unwrap();
        }
        inv.insert("ab", ComponentKind::Free).unwrap();
        inv
    })
}

fn table() -> impl Strategy<Value = TranslationTable> {
    prop::collection::vec(("s[0-3]", "t[0-4]", any::<bool>()), 0..10).prop_map(|rows| {
        let mut t = TranslationTable::new();
        for (s, f, b) in rows {
            t.insert(&s, &f, b).unwrap();
        }
        t
    })
}

fn variants(prefix: &'static str, lang: &'static str) -> impl Strategy<Value = VariantTable> {
    prop::collection::vec((0..5u8, 0..5u8), 0..5).prop_map(move |pairs| {
        let mut v = VariantTable::new(lang);
        for (a, b) in pairs {
            v.insert(&format!("{prefix}{a}"), &format!("{prefix}{b}")).unwrap();
        }
        v
    })
}

fn corpus(max_len: usize) -> impl Strategy<Value = TaggedCorpus> {
    prop::collection::vec(("[abcd]", "[NA]", prop::bool::weighted(0.08)), 0..max_len).prop_map(|toks| {
        let mut sentences = vec![Vec::new()];
        for (l, p, brk) in toks {
            if brk {
                sentences.push(Vec::new());
            }
            sentences.last_mut().unwrap().push(Token::new(&l, &l, &p).unwrap());
        }
        TaggedCorpus::from_sentences("fr", sentences.into_iter().filter(|s| !s.is_empty()).collect())
    })
}

fn label() -> impl Strategy<Value = AnnotationLabel> {
    prop::sample::select(AnnotationLabel::ALL.to_vec())
}

fn seq_set(seqs: &[TranslatedSeq]) -> BTreeSet<Vec<(String, bool)>> {
    seqs.iter()
        .map(|s| s.items.iter().map(|i| (i.form.clone(), i.bound)).collect())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn component_boundness_is_kind_not_free(inv in inventory()) {
        for c in inv.components() {
            prop_assert_eq!(c.is_bound(), c.kind != ComponentKind::Free);
        }
    }

    #[test]
    fn decompositions_spell_the_term(inv in inventory(), parts in prop::collection::vec("[ab]{1,3}", 1..6), hyphens in any::<u8>(), upper in any::<bool>()) {
        let mut term = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i > 0 && hyphens & (1 << (i % 8)) != 0 {
                term.push('-');
            }
            term.push_str(p);
        }
        if upper {
            term = term.to_uppercase();
        }
        let plain: String = normalize_term(&term).chars().filter(|c| *c != '-').collect();
        let cfg = PipelineConfig { min_base_len: 2, ..PipelineConfig::default() };
        for d in decompose(&term, &inv, &cfg) {
            prop_assert_eq!(d.forms().concat(), plain.clone());
        }
        let all = all_splits(&term, &inv, &cfg);
        let best = all.iter().map(|s| s.len()).max();
        for s in d1_minimal_split(&term, &inv, &cfg) {
            prop_assert_eq!(Some(s.len()), best);
        }
    }

    #[test]
    fn translation_is_monotone_and_ordered(
        trans in table(), vs in variants("s", "en"), vt in variants("t", "fr"),
        groups in prop::collection::vec("s[0-3]", 1..4),
        extra in ("s[0-3]", "t[0-4]", any::<bool>()),
    ) {
        let d = Decomposition::from_forms(groups.iter().cloned());
        let before = Translator::new(&trans, &vs, &vt).translate_decomposition(&d);
        for seq in &before {
            for (item, g) in seq.items.iter().zip(&groups) {
                prop_assert_eq!(&item.source, g);
            }
        }
        let mut bigger = trans.clone();
        bigger.insert(&extra.0, &extra.1, extra.2).unwrap();
        let after = Translator::new(&bigger, &vs, &vt).translate_decomposition(&d);
        prop_assert!(seq_set(&before).is_subset(&seq_set(&after)));
        let mut more_vars = vs.clone();
        more_vars.insert(&extra.0, "s3").unwrap();
        let after = Translator::new(&trans, &more_vars, &vt).translate_decomposition(&d);
        prop_assert!(seq_set(&before).is_subset(&seq_set(&after)));
    }

    #[test]
    fn recomposition_bounds_and_filter_soundness(
        items in prop::collection::vec(("[xy]{1,2}", any::<bool>()), 1..5),
        bound_forms in prop::collection::vec("[xy]{1,2}", 0..4),
    ) {
        let ts = TranslatedSeq {
            items: items.iter().map(|(f, b)| TranslatedItem {
                form: f.clone(), bound: *b, provenance: Provenance::Direct, source: f.clone(),
            }).collect(),
        };
        let seqs = r1_generate(&ts);
        prop_assert!(seqs.len() <= r1_raw_count(items.len()));
        let mut inv = ComponentInventory::new("fr");
        for f in &bound_forms {
            inv.insert(f, ComponentKind::Confix).unwrap();
        }
        let kept = r2_filter(seqs.clone(), &inv);
        for s in &kept {
            prop_assert!(seqs.contains(s));
            prop_assert!(s.items.iter().all(|i| !inv.is_bound_only(&i.form)));
        }
    }

    #[test]
    fn candidates_partition_the_spans(c in corpus(120), stops in prop::collection::btree_set("[abcd]", 0..3), words in 1usize..3) {
        let stop = StopwordList::from_lemmas("fr", &stops);
        let cfg = PipelineConfig::default();
        let seqs: Vec<_> = [vec!["a", "b"], vec!["b", "a"], vec!["c"], vec!["a", "c", "d"]]
            .into_iter()
            .map(morphocomp::recomposer::LexicalSeq::from_forms)
            .collect();
        let mut spans = BTreeSet::new();
        for s in &seqs {
            spans.extend(match_sequence(s, &c, &stop, &cfg).into_iter().map(|m| m.positions));
        }
        let cands = collect_candidates(&seqs, &c, &stop, &cfg, words);
        let total: usize = cands.iter().map(|c| c.count()).sum();
        prop_assert_eq!(total, spans.len());
        let mut seen = BTreeSet::new();
        for cand in &cands {
            for span in &cand.spans {
                prop_assert_eq!(&span.window, &cand.key);
                prop_assert!(seen.insert(span.positions.clone()));
            }
            let content = cand.key.iter().filter(|(l, _)| !stop.contains(l)).count();
            prop_assert_eq!(cand.fertile, content > words);
        }
        for w in cands.windows(2) {
            prop_assert!(w[0].count() >= w[1].count());
        }
    }

    #[test]
    fn families_are_disjoint_and_never_self_map(words in prop::collection::vec("[a-z]{2,9}", 0..30)) {
        let (table, families) = build_families([&words], "en", &Stemmer::Porter);
        let input: BTreeSet<String> = words.iter().cloned().collect();
        let mut members = BTreeSet::new();
        for f in &families {
            for m in &f.members {
                prop_assert!(members.insert(m.clone()));
                prop_assert!(input.contains(m));
            }
        }
        for (from, related) in table.iter() {
            prop_assert!(!related.contains(from));
        }
    }

    #[test]
    fn harvest_is_monotone_in_seeds(c in corpus(60), a in prop::collection::vec("[abcd]{1,2}", 0..3), b in prop::collection::vec("[abcd]{1,2}", 0..3)) {
        let small = harvest_terms(&c, &a);
        let both: Vec<String> = a.iter().chain(&b).cloned().collect();
        let large: BTreeSet<String> = harvest_terms(&c, &both).into_iter().collect();
        prop_assert!(small.iter().all(|t| large.contains(t)));
    }

    #[test]
    fn stemming_is_deterministic(w in "[a-zé]{0,14}") {
        for lang in ["en", "fr", "de"] {
            let s = Stemmer::for_language(lang).unwrap();
            prop_assert_eq!(s.stem(&w), s.stem(&w));
        }
    }

    #[test]
    fn metric_laws(rows in prop::collection::vec((0..6u8, label()), 0..30), extra_terms in 1usize..5, relabel in label()) {
        let mut lex = AnnotatedLexicon::new();
        let mut relabelled = AnnotatedLexicon::new();
        for t in 0..extra_terms {
            lex.add_source_term(&format!("u{t}"));
            relabelled.add_source_term(&format!("u{t}"));
        }
        for (i, (t, l)) in rows.iter().enumerate() {
            lex.add(&format!("t{t}"), &format!("c{i}"), *l).unwrap();
            relabelled.add(&format!("t{t}"), &format!("c{i}"), relabel).unwrap();
        }
        let r = evaluate(&lex).unwrap();
        prop_assert!(r.silver.precision >= r.gold.precision);
        prop_assert_eq!(r.gold.overall_quality, r.gold.precision * r.coverage);
        prop_assert_eq!(r.silver.overall_quality, r.silver.precision * r.coverage);
        prop_assert_eq!(evaluate(&relabelled).unwrap().coverage, r.coverage);
    }

    #[test]
    fn kappa_is_symmetric(pairs in prop::collection::vec((label(), label()), 1..40)) {
        let (a, b): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        match (kappa(&a, &b), kappa(&b, &a)) {
            (Ok(x), Ok(y)) => prop_assert!((x - y).abs() < 1e-12),
            (Err(_), Err(_)) => {}
            other => prop_assert!(false, "asymmetric outcome {:?}", other),
        }
    }

    #[test]
    fn comparability_swaps_with_the_inverted_dictionary(src in corpus(40), tgt in corpus(40)) {
        let mut dict = TranslationTable::new();
        for (s, t) in [("a", "b"), ("b", "c"), ("c", "c"), ("d", "a")] {
            dict.insert(s, t, false).unwrap();
        }
        let forward = comparability(&src, &tgt, &dict);
        let swapped = comparability(&tgt, &src, &dict.inverted());
        prop_assert!((forward.score - swapped.score).abs() < 1e-12);
        prop_assert!((forward.forward - swapped.backward).abs() < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn stage_counts_never_increase(seed in any::<u64>()) {
        let tmp = tempfile::tempdir().unwrap();
        let world = common::write_world(tmp.path(), seed, 80);
        let cfg = RunConfig::load(&world.config).unwrap();
        let res = Resources::load(&cfg).unwrap();
        let s = run_extraction_with(&world.terms, &res, &cfg).unwrap().stats;
        prop_assert!(s.terms >= s.decomposed);
        prop_assert!(s.decomposed >= s.translated);
        prop_assert!(s.translated >= s.recomposed);
        prop_assert!(s.recomposed >= s.attested);
    }
}
