//! Resource-building tools: stemming, morphological families, source-term
//! harvesting and test-set filtering.

pub mod porter;

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::resources::{TaggedCorpus, TranslationTable, VariantTable};

/// Longest-suffix stripper with a minimum stem length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixStripper {
    suffixes: Vec<String>,
    min_stem: usize,
}

impl SuffixStripper {
    pub fn new<I, S>(suffixes: I, min_stem: usize) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut suffixes: Vec<String> = suffixes.into_iter().map(Into::into).collect();
        suffixes.sort_by(|a, b| b.chars().count().cmp(&a.chars().count()).then_with(|| a.cmp(b)));
        suffixes.dedup();
        SuffixStripper { suffixes, min_stem }
    }

    pub fn french() -> Self {
        SuffixStripper::new(
            [
                "issements", "issement", "atrices", "atrice", "ateurs", "ateur", "ations", "ation",
                "ements", "ement", "ités", "ité", "iques", "ique", "ismes", "isme", "istes", "iste",
                "ables", "able", "euses", "euse", "eux", "ives", "ive", "ifs", "if", "aux", "al",
                "ales", "ale", "ées", "ée", "és", "é", "es", "e", "s",
            ],
            3,
        )
    }

    pub fn german() -> Self {
        SuffixStripper::new(
            [
                "ungen", "ung", "heiten", "heit", "keiten", "keit", "lichen", "liche", "lich",
                "ischen", "ische", "isch", "ern", "em", "en", "er", "es", "e", "s",
            ],
            3,
        )
    }

    pub fn stem(&self, word: &str) -> String {
        let word = word.to_lowercase();
        let len = word.chars().count();
        for suffix in &self.suffixes {
            let slen = suffix.chars().count();
            if len >= slen + self.min_stem && word.ends_with(suffix.as_str()) {
                return word[..word.len() - suffix.len()].to_string();
            }
        }
        word
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stemmer {
    Porter,
    Suffix(SuffixStripper),
}

impl Stemmer {
    /// `en` uses Porter; `fr` and `de` use conservative suffix tables.
    pub fn for_language(language: &str) -> Result<Self> {
        match language.to_lowercase().as_str() {
            "en" | "eng" | "english" => Ok(Stemmer::Porter),
            "fr" | "fra" | "fre" | "french" => Ok(Stemmer::Suffix(SuffixStripper::french())),
            "de" | "deu" | "ger" | "german" => Ok(Stemmer::Suffix(SuffixStripper::german())),
            other => Err(Error::UnsupportedLanguage(other.to_string())),
        }
    }

    pub fn stem(&self, word: &str) -> String {
        match self {
            Stemmer::Porter => porter::stem(word),
            Stemmer::Suffix(s) => s.stem(word),
        }
    }
}

pub fn stem(word: &str, language: &str) -> Result<String> {
    Ok(Stemmer::for_language(language)?.stem(word))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemFamily {
    pub stem: String,
    pub members: BTreeSet<String>,
}

/// Groups words by stem. Every family of two or more members becomes a
/// directional clique in the returned variant table.
pub fn build_families<L, W>(wordlists: L, language: &str, stemmer: &Stemmer) -> (VariantTable, Vec<StemFamily>)
where
    L: IntoIterator<Item = W>,
    W: IntoIterator,
    W::Item: AsRef<str>,
{
    let mut by_stem: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for list in wordlists {
        for word in list {
            let word = word.as_ref().trim().to_lowercase();
            if word.is_empty() || word.chars().any(char::is_whitespace) {
                continue;
            }
            by_stem.entry(stemmer.stem(&word)).or_default().insert(word);
        }
    }
    let families: Vec<StemFamily> = by_stem
        .into_iter()
        .filter(|(_, members)| members.len() >= 2)
        .map(|(stem, members)| StemFamily { stem, members })
        .collect();
    let mut table = VariantTable::new(language);
    for fam in &families {
        for a in &fam.members {
            for b in fam.members.iter().filter(|b| *b != a) {
                table.insert(a, b).expect("members are normalized words");
            }
        }
    }
    (table, families)
}

fn has_inner_hyphen(word: &str) -> bool {
    let trimmed = word.trim_matches('-');
    trimmed.contains('-') && trimmed.chars().any(char::is_alphabetic)
}

/// Corpus words containing any seed morpheme, plus every hyphenated word.
/// Surface forms are case-folded; the result is sorted and deduplicated.
pub fn harvest_terms<I, S>(corpus: &TaggedCorpus, seeds: I) -> Vec<String>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let seeds: Vec<String> = seeds
        .into_iter()
        .map(|s| s.as_ref().trim().trim_matches('-').to_lowercase())
        .filter(|s| !s.is_empty())
        .collect();
    let mut out = BTreeSet::new();
    for tok in corpus.tokens() {
        let word = tok.surface.trim().to_lowercase();
        if !word.chars().any(char::is_alphabetic) {
            continue;
        }
        if has_inner_hyphen(&word) || seeds.iter().any(|s| word.contains(s.as_str())) {
            out.insert(word);
        }
    }
    out.into_iter().collect()
}

/// Drops terms that the dictionary translates into a lemma attested in the
/// target corpus. Input order is preserved.
pub fn filter_test_set<I, S>(terms: I, dict: &TranslationTable, target: &TaggedCorpus) -> Vec<String>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    terms
        .into_iter()
        .map(|t| t.as_ref().trim().to_string())
        .filter(|t| !t.is_empty())
        .filter(|t| {
            let key = t.to_lowercase();
            !dict.lookup(&key).any(|tr| target.contains_lemma(&tr.form))
        })
        .collect()
}
