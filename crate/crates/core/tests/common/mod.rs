//! Shared helpers: fixture paths, the CLI binary, and a seeded synthetic
//! resource set written to disk.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rand::rngs::StdRng;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};

pub fn toy_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/toy")
}

pub fn morphocomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_morphocomp"))
        .args(args)
        .env_remove("MORPHOCOMP_CONFIG")
        .output()
        .expect("binary runs")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// `(source, candidate, count, fertile)` rows of a lexicon file, header skipped.
pub fn lexicon_rows(tsv: &str) -> Vec<(String, String, usize, bool)> {
    tsv.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let c: Vec<&str> = l.split('\t').collect();
            assert_eq!(c.len(), 4, "{l}");
            (c[0].to_string(), c[1].to_string(), c[2].parse().unwrap(), c[3].parse().unwrap())
        })
        .collect()
}

const CONSONANTS: &[char] = &['b', 'd', 'f', 'g', 'k', 'l', 'm', 'n', 'p', 'r', 's', 't', 'v', 'z'];
const VOWELS: &[char] = &['a', 'e', 'i', 'o', 'u'];
pub const STOPWORDS: &[(&str, &str)] = &[("le", "DET"), ("de", "PREP"), ("pour", "PREP"), ("du", "PREP")];

struct Words {
    rng: StdRng,
    used: BTreeSet<String>,
}

impl Words {
    fn fresh(&mut self, syllables: usize) -> String {
        loop {
            let mut w = String::new();
            for _ in 0..syllables {
                w.push(*CONSONANTS.choose(&mut self.rng).unwrap());
                w.push(*VOWELS.choose(&mut self.rng).unwrap());
            }
            if STOPWORDS.iter().all(|(s, _)| *s != w) && self.used.insert(w.clone()) {
                return w;
            }
        }
    }
}

#[derive(Debug, Clone)]
struct Part {
    source: String,
    /// Every target rendering any resource can produce; bound ones first.
    options: Vec<(String, bool)>,
}

/// A seeded synthetic language pair. Some free words are only in the domain
/// dictionary and some attestations are only reachable through synonym or
/// morphological variants, so richer presets cover strictly more terms.
pub struct World {
    pub terms: Vec<String>,
    pub config: PathBuf,
}

pub fn write_world(dir: &Path, seed: u64, n_terms: usize) -> World {
    let mut words = Words {
        rng: StdRng::seed_from_u64(seed),
        used: BTreeSet::new(),
    };
    let mut inv_en = String::new();
    let mut inv_fr = String::new();
    let mut general = String::new();
    let mut morphemes = String::new();
    let mut domain = String::new();
    let (mut syn_en, mut syn_fr, mut morph_en, mut morph_fr) = (String::new(), String::new(), String::new(), String::new());

    let mut prefixes = Vec::new();
    for _ in 0..6 {
        let (s, t) = (words.fresh(2), words.fresh(2));
        writeln!(inv_en, "{s}\tpref").unwrap();
        writeln!(inv_fr, "{t}\tpref").unwrap();
        writeln!(morphemes, "{s}\t{t}:bound").unwrap();
        prefixes.push(Part {
            source: s,
            options: vec![(t, true)],
        });
    }
    let mut cores = Vec::new();
    for _ in 0..20 {
        let (s, tb, tf) = (words.fresh(2), words.fresh(2), words.fresh(3));
        writeln!(inv_en, "{s}\tconf").unwrap();
        writeln!(inv_fr, "{tb}\tconf\n{tf}\tfree").unwrap();
        writeln!(morphemes, "{s}\t{tb}:bound|{tf}:free").unwrap();
        cores.push(Part {
            source: s,
            options: vec![(tb, true), (tf, false)],
        });
    }
    for i in 0..50 {
        let (s, t) = (words.fresh(3), words.fresh(3));
        writeln!(inv_en, "{s}\tfree").unwrap();
        writeln!(inv_fr, "{t}\tfree").unwrap();
        let dict = if i % 3 == 0 { &mut domain } else { &mut general };
        writeln!(dict, "{s}\t{t}:free").unwrap();
        let mut options = vec![(t.clone(), false)];
        match i % 5 {
            1 => {
                // source synonym with its own dictionary entry
                let (s2, t2) = (words.fresh(3), words.fresh(3));
                writeln!(syn_en, "{s}\t{s2}").unwrap();
                writeln!(general, "{s2}\t{t2}:free").unwrap();
                options.push((t2, false));
            }
            2 => {
                let t2 = words.fresh(3);
                writeln!(syn_fr, "{t}\t{t2}").unwrap();
                options.push((t2, false));
            }
            3 => {
                let (s2, t2) = (format!("{s}s"), format!("{t}on"));
                writeln!(morph_en, "{s}\t{s2}").unwrap();
                writeln!(general, "{s2}\t{t2}:free").unwrap();
                options.push((t2, false));
            }
            4 => {
                let t2 = format!("{t}al");
                writeln!(morph_fr, "{t}\t{t2}").unwrap();
                options.push((t2, false));
            }
            _ => {}
        }
        cores.push(Part { source: s, options });
    }

    let rng = &mut words.rng;
    let mut terms = Vec::new();
    let mut term_parts: BTreeMap<String, Vec<Part>> = BTreeMap::new();
    while terms.len() < n_terms {
        if rng.random_bool(0.05) {
            let unknown: String = (0..8).map(|_| *CONSONANTS.choose(rng).unwrap()).collect();
            terms.push(unknown);
            continue;
        }
        let mut parts = Vec::new();
        if rng.random_bool(0.3) {
            parts.push(prefixes.choose(rng).unwrap().clone());
        }
        for _ in 0..rng.random_range(1..=2) {
            parts.push(cores.choose(rng).unwrap().clone());
        }
        let term: String = parts.iter().map(|p| p.source.as_str()).collect();
        term_parts.entry(term.clone()).or_insert(parts);
        terms.push(term);
    }

    let noise: Vec<String> = (0..30).map(|_| words.fresh(3)).collect();
    let rng = &mut words.rng;
    let mut pos: BTreeMap<String, &str> = BTreeMap::new();
    let mut corpus = String::new();
    let mut emit = |corpus: &mut String, lemma: &str, rng: &mut StdRng| {
        let p = *pos
            .entry(lemma.to_string())
            .or_insert_with(|| if rng.random_bool(0.7) { "N" } else { "A" });
        writeln!(corpus, "{lemma}\t{lemma}\t{p}").unwrap();
    };
    let stop = |corpus: &mut String, rng: &mut StdRng| {
        let (s, p) = STOPWORDS.choose(rng).unwrap();
        writeln!(corpus, "{s}\t{s}\t{p}").unwrap();
    };
    for parts in term_parts.values() {
        if !rng.random_bool(0.7) {
            continue;
        }
        let mut chosen: Vec<(String, bool)> = parts.iter().map(|p| p.options.choose(rng).unwrap().clone()).collect();
        chosen.shuffle(rng);
        // bound forms never stand alone: glue each onto its right neighbour
        let mut items: Vec<String> = Vec::new();
        let mut pending = String::new();
        for (form, bound) in chosen {
            pending.push_str(&form);
            if !bound {
                items.push(std::mem::take(&mut pending));
            }
        }
        if !pending.is_empty() {
            match items.last_mut() {
                Some(last) => last.push_str(&pending),
                None => items.push(pending),
            }
        }
        for _ in 0..rng.random_range(0..=2) {
            emit(&mut corpus, noise.choose(rng).unwrap(), rng);
        }
        for (i, item) in items.iter().enumerate() {
            if i > 0 {
                for _ in 0..rng.random_range(0..=2) {
                    stop(&mut corpus, rng);
                }
            }
            emit(&mut corpus, item, rng);
        }
        for _ in 0..rng.random_range(0..=2) {
            emit(&mut corpus, noise.choose(rng).unwrap(), rng);
        }
        corpus.push('\n');
    }

    let files = [
        ("inventory.en.tsv", inv_en),
        ("inventory.fr.tsv", inv_fr),
        ("general.tsv", general),
        ("morphemes.tsv", morphemes),
        ("domain.tsv", domain),
        ("syn.en.tsv", syn_en),
        ("syn.fr.tsv", syn_fr),
        ("morph.en.tsv", morph_en),
        ("morph.fr.tsv", morph_fr),
        ("stop.fr.txt", STOPWORDS.iter().map(|(s, _)| format!("{s}\n")).collect()),
        ("corpus.fr.vert", corpus),
        ("terms.txt", terms.iter().map(|t| format!("{t}\n")).collect()),
    ];
    for (name, content) in files {
        fs::write(dir.join(name), content).unwrap();
    }
    let config = dir.join("run.conf");
    fs::write(
        &config,
        "source_inventory = inventory.en.tsv\n\
         target_inventory = inventory.fr.tsv\n\
         general_dictionary = general.tsv\n\
         morpheme_table = morphemes.tsv\n\
         domain_dictionary = domain.tsv\n\
         source_synonyms = syn.en.tsv\n\
         target_synonyms = syn.fr.tsv\n\
         source_morphology = morph.en.tsv\n\
         target_morphology = morph.fr.tsv\n\
         stopwords = stop.fr.txt\n\
         corpus = corpus.fr.vert\n\
         preset = BSMD\n",
    )
    .unwrap();
    World { terms, config }
}
