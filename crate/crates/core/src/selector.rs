//! Corpus attestation of recomposed lexical sequences.
//!
//! A sequence `l_1..l_n` matches the corpus at positions `i_1 < .. < i_n` when
//! each token `i_j` has lemma `l_j`, consecutive positions are at most
//! `max_gap` apart, every other token of the window `[i_1, i_n]` is a
//! stopword, and the window stays inside one sentence. Matches whose windows
//! carry the same `(lemma, POS)` sequence are one candidate translation.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::recomposer::LexicalSeq;
use crate::resources::{PipelineConfig, StopwordList, TaggedCorpus};

/// `(lemma, POS)` pairs of a match window.
pub type CandidateKey = Vec<(String, String)>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatchSpan {
    /// Positions of the matched tokens, strictly increasing.
    pub positions: Vec<usize>,
    pub start: usize,
    /// Inclusive.
    pub end: usize,
    pub window: CandidateKey,
}

impl MatchSpan {
    fn new(positions: Vec<usize>, corpus: &TaggedCorpus) -> Self {
        let start = positions[0];
        let end = *positions.last().expect("non-empty");
        let window = (start..=end)
            .map(|i| {
                let t = corpus.token(i);
                (t.lemma.clone(), t.pos.clone())
            })
            .collect();
        MatchSpan {
            positions,
            start,
            end,
            window,
        }
    }
}

/// Renders `(lemma, POS)` pairs as `lemma/POS lemma/POS ...`.
pub fn render_key(key: &[(String, String)]) -> String {
    key.iter()
        .map(|(l, p)| format!("{l}/{p}"))
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateTranslation {
    pub key: CandidateKey,
    pub spans: Vec<MatchSpan>,
    /// Lexical sequences that produced at least one span.
    pub sources: Vec<LexicalSeq>,
    /// Non-stopword lemmas in the window.
    pub content_words: usize,
    /// The candidate has more content words than the source term.
    pub fertile: bool,
}

impl CandidateTranslation {
    pub fn count(&self) -> usize {
        self.spans.len()
    }

    pub fn render(&self) -> String {
        render_key(&self.key)
    }
}

impl fmt::Display for CandidateTranslation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// All matches of `seq` in the corpus.
pub fn match_sequence(
    seq: &LexicalSeq,
    corpus: &TaggedCorpus,
    stop: &StopwordList,
    cfg: &PipelineConfig,
) -> Vec<MatchSpan> {
    let lemmas = seq.forms();
    let Some(first) = lemmas.first() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut positions = Vec::with_capacity(lemmas.len());
    for &start in corpus.positions(first) {
        positions.push(start);
        extend(&lemmas, corpus, stop, cfg.max_gap, &mut positions, &mut out);
        positions.pop();
    }
    out
}

fn extend(
    lemmas: &[&str],
    corpus: &TaggedCorpus,
    stop: &StopwordList,
    max_gap: usize,
    positions: &mut Vec<usize>,
    out: &mut Vec<MatchSpan>,
) {
    let j = positions.len();
    if j == lemmas.len() {
        out.push(MatchSpan::new(positions.clone(), corpus));
        return;
    }
    let prev = *positions.last().expect("started");
    let sentence = corpus.sentence_of(prev);
    let limit = (prev + max_gap).min(corpus.len().saturating_sub(1));
    for q in prev + 1..=limit {
        if corpus.sentence_of(q) != sentence {
            break;
        }
        let tok = corpus.token(q);
        if tok.lemma == lemmas[j] {
            positions.push(q);
            extend(lemmas, corpus, stop, max_gap, positions, out);
            positions.pop();
        }
        // q can only be skipped over if it is a stopword
        if !stop.contains(&tok.lemma) {
            break;
        }
    }
}

/// Matches every sequence and groups the spans by window `(lemma, POS)`
/// sequence. `source_words` is the number of lexical words in the source term.
///
/// Candidates are ordered by occurrence count (descending), then by key.
pub fn collect_candidates(
    seqs: &[LexicalSeq],
    corpus: &TaggedCorpus,
    stop: &StopwordList,
    cfg: &PipelineConfig,
    source_words: usize,
) -> Vec<CandidateTranslation> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut groups: BTreeMap<CandidateKey, CandidateTranslation> = BTreeMap::new();
    for seq in seqs {
        for span in match_sequence(seq, corpus, stop, cfg) {
            if !seen.insert(span.positions.clone()) {
                continue;
            }
            let cand = groups.entry(span.window.clone()).or_insert_with(|| {
                let content_words = span.window.iter().filter(|(l, _)| !stop.contains(l)).count();
                CandidateTranslation {
                    key: span.window.clone(),
                    spans: Vec::new(),
                    sources: Vec::new(),
                    content_words,
                    fertile: content_words > source_words,
                }
            });
            if !cand.sources.contains(seq) {
                cand.sources.push(seq.clone());
            }
            cand.spans.push(span);
        }
    }
    let mut out: Vec<CandidateTranslation> = groups.into_values().collect();
    for c in &mut out {
        c.spans.sort();
    }
    // stable sort keeps key order among equal counts
    out.sort_by_key(|c| std::cmp::Reverse(c.count()));
    out
}
