//! Tokenized corpus ingestion and the statistics the corpus-based algorithms
//! consume: term/document frequencies, windowed co-occurrence counts, the
//! collocation graph, distant document labeling, and PMI.
//!
//! Corpus format (UTF-8, LF): a document starts with `#doc <id>`, each token
//! follows on its own line as `form<TAB>lemma`, and a blank line ends the
//! document.  Forms are kept verbatim; lemmas are normalized.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{TermGraph, TermGraphBuilder};
use crate::lexicon::{normalize_term, Polarity};
use crate::seeds::{SeedKind, SeedSet};

/// Distant labeling emits a warning above this positive:negative ratio.
pub const IMBALANCE_WARN_RATIO: f64 = 5.0;

/// Smoothing constant added to every count inside PMI.
pub const DEFAULT_PMI_EPSILON: f64 = 0.5;

#[derive(Debug, Clone)]
pub struct Token {
    /// Surface form, verbatim from the corpus.
    pub form: String,
    /// Normalized lemma.
    pub lemma: String,
}

#[derive(Debug, Clone)]
pub struct TokenizedDocument {
    pub doc_id: String,
    pub tokens: Vec<Token>,
}

/// Parses the vertical corpus format without computing statistics.
pub fn parse_corpus(text: &str, path: &str) -> Result<Vec<TokenizedDocument>> {
    let mut documents: Vec<TokenizedDocument> = Vec::new();
    let mut seen_ids: HashSet<String> = HashSet::new();
    let mut current: Option<TokenizedDocument> = None;

    let mut close = |doc: Option<TokenizedDocument>, line_no: usize| -> Result<()> {
        if let Some(doc) = doc {
            if doc.tokens.is_empty() {
                return Err(Error::Parse {
                    path: path.to_string(),
                    line: line_no,
                    msg: format!("document `{}` has no tokens", doc.doc_id),
                });
            }
            documents.push(doc);
        }
        Ok(())
    };

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if let Some(rest) = line.strip_prefix("#doc ") {
            let id = rest.trim();
            if id.is_empty() {
                return Err(Error::Parse {
                    path: path.to_string(),
                    line: line_no,
                    msg: "document header without an id".to_string(),
                });
            }
            if !seen_ids.insert(id.to_string()) {
                return Err(Error::Parse {
                    path: path.to_string(),
                    line: line_no,
                    msg: format!("duplicate document id `{id}`"),
                });
            }
            close(current.take(), line_no)?;
            current = Some(TokenizedDocument {
                doc_id: id.to_string(),
                tokens: Vec::new(),
            });
            continue;
        }
        if line.trim().is_empty() {
            close(current.take(), line_no)?;
            continue;
        }
        let Some(doc) = current.as_mut() else {
            return Err(Error::Parse {
                path: path.to_string(),
                line: line_no,
                msg: "token line outside any document (missing `#doc` header)".to_string(),
            });
        };
        let Some((form, lemma_raw)) = line.split_once('\t') else {
            return Err(Error::Parse {
                path: path.to_string(),
                line: line_no,
                msg: "expected `form<TAB>lemma`".to_string(),
            });
        };
        if form.is_empty() {
            return Err(Error::Parse {
                path: path.to_string(),
                line: line_no,
                msg: "empty token form".to_string(),
            });
        }
        let lemma = normalize_term(lemma_raw).map_err(|e| Error::Parse {
            path: path.to_string(),
            line: line_no,
            msg: e.to_string(),
        })?;
        doc.tokens.push(Token {
            form: form.to_string(),
            lemma,
        });
    }
    let last_line = text.lines().count();
    close(current.take(), last_line)?;
    Ok(documents)
}

/// Loads documents without frequency filtering (evaluation-side ingestion).
pub fn load_documents(path: &Path) -> Result<Vec<TokenizedDocument>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_corpus(&text, &path.display().to_string())
}

/// Lemma-level corpus statistics over the frequency-filtered vocabulary.
#[derive(Debug, Clone)]
pub struct CorpusStats {
    n_tokens: u64,
    n_docs: u64,
    min_freq: u32,
    terms: Vec<String>,
    index: HashMap<String, u32>,
    tf: Vec<u64>,
    df: Vec<u64>,
}

impl CorpusStats {
    /// Counts term and document frequencies and keeps only terms with
    /// `tf >= min_freq` in the vocabulary.
    pub fn build(documents: &[TokenizedDocument], min_freq: u32) -> Result<Self> {
        if min_freq < 1 {
            return Err(Error::InvalidParams(format!(
                "min_freq must be >= 1, got {min_freq}"
            )));
        }
        if documents.is_empty() {
            return Err(Error::EmptyCorpus("no documents loaded".to_string()));
        }
        let mut tf_all: HashMap<&str, u64> = HashMap::new();
        let mut df_all: HashMap<&str, u64> = HashMap::new();
        let mut n_tokens: u64 = 0;
        for doc in documents {
            n_tokens += doc.tokens.len() as u64;
            let mut seen: HashSet<&str> = HashSet::new();
            for token in &doc.tokens {
                *tf_all.entry(token.lemma.as_str()).or_insert(0) += 1;
                if seen.insert(token.lemma.as_str()) {
                    *df_all.entry(token.lemma.as_str()).or_insert(0) += 1;
                }
            }
        }
        let mut terms: Vec<String> = tf_all
            .iter()
            .filter(|&(_, &c)| c >= min_freq as u64)
            .map(|(t, _)| t.to_string())
            .collect();
        terms.sort();
        let index: HashMap<String, u32> = terms
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i as u32))
            .collect();
        let tf = terms.iter().map(|t| tf_all[t.as_str()]).collect();
        let df = terms.iter().map(|t| df_all[t.as_str()]).collect();
        Ok(CorpusStats {
            n_tokens,
            n_docs: documents.len() as u64,
            min_freq,
            terms,
            index,
            tf,
            df,
        })
    }

    pub fn n_tokens(&self) -> u64 {
        self.n_tokens
    }

    pub fn n_docs(&self) -> u64 {
        self.n_docs
    }

    pub fn min_freq(&self) -> u32 {
        self.min_freq
    }

    pub fn vocab_size(&self) -> usize {
        self.terms.len()
    }

    /// Vocabulary terms in lexicographic order.
    pub fn vocab(&self) -> &[String] {
        &self.terms
    }

    pub fn term_id(&self, term: &str) -> Option<u32> {
        self.index.get(term).copied()
    }

    pub fn term(&self, id: u32) -> &str {
        &self.terms[id as usize]
    }

    /// Term frequency, `None` for terms below `min_freq`.
    pub fn tf(&self, term: &str) -> Option<u64> {
        self.term_id(term).map(|id| self.tf[id as usize])
    }

    /// Document frequency, `None` for terms below `min_freq`.
    pub fn df(&self, term: &str) -> Option<u64> {
        self.term_id(term).map(|id| self.df[id as usize])
    }

    fn tf_by_id(&self, id: u32) -> u64 {
        self.tf[id as usize]
    }
}

/// Loads a corpus and builds its statistics in one pass.
pub fn load_corpus(path: &Path, min_freq: u32) -> Result<(Vec<TokenizedDocument>, CorpusStats)> {
    let documents = load_documents(path)?;
    let stats = CorpusStats::build(&documents, min_freq)?;
    Ok((documents, stats))
}

/// Symmetric windowed co-occurrence counts over the filtered vocabulary.
#[derive(Debug, Clone)]
pub struct CooccurrenceCounts {
    window: usize,
    counts: HashMap<(u32, u32), u64>,
}

impl CooccurrenceCounts {
    pub fn window(&self) -> usize {
        self.window
    }

    pub fn count_ids(&self, a: u32, b: u32) -> u64 {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.counts.get(&key).copied().unwrap_or(0)
    }

    pub fn count(&self, stats: &CorpusStats, a: &str, b: &str) -> u64 {
        match (stats.term_id(a), stats.term_id(b)) {
            (Some(ia), Some(ib)) => self.count_ids(ia, ib),
            _ => 0,
        }
    }

    /// Smoothed term-term pointwise mutual information in bits.
    pub fn pmi(&self, stats: &CorpusStats, a: &str, b: &str, epsilon: f64) -> Result<f64> {
        let ia = stats
            .term_id(a)
            .ok_or_else(|| Error::OutOfVocabulary(a.to_string()))?;
        let ib = stats
            .term_id(b)
            .ok_or_else(|| Error::OutOfVocabulary(b.to_string()))?;
        let joint = self.count_ids(ia, ib) as f64;
        let total = stats.n_tokens() as f64;
        let fa = stats.tf_by_id(ia) as f64;
        let fb = stats.tf_by_id(ib) as f64;
        Ok(((joint + epsilon) * total / ((fa + epsilon) * (fb + epsilon))).log2())
    }
}

/// Counts co-occurrences of vocabulary terms within `window` token positions.
pub fn count_cooccurrences(
    documents: &[TokenizedDocument],
    stats: &CorpusStats,
    window: usize,
) -> Result<CooccurrenceCounts> {
    if window < 1 {
        return Err(Error::InvalidParams(format!(
            "window must be >= 1, got {window}"
        )));
    }
    let mut counts: HashMap<(u32, u32), u64> = HashMap::new();
    let mut ids: Vec<Option<u32>> = Vec::new();
    for doc in documents {
        ids.clear();
        ids.extend(doc.tokens.iter().map(|t| stats.term_id(&t.lemma)));
        for i in 0..ids.len() {
            let Some(a) = ids[i] else { continue };
            let hi = (i + window).min(ids.len().saturating_sub(1));
            for j in (i + 1)..=hi {
                let Some(b) = ids[j] else { continue };
                let key = if a <= b { (a, b) } else { (b, a) };
                *counts.entry(key).or_insert(0) += 1;
            }
        }
    }
    Ok(CooccurrenceCounts { window, counts })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeWeighting {
    /// Positive PMI normalized by the maximum positive PMI.
    Pmi,
    /// Raw co-occurrence count normalized by the maximum count.
    Count,
}

impl std::str::FromStr for EdgeWeighting {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pmi" => Ok(EdgeWeighting::Pmi),
            "count" => Ok(EdgeWeighting::Count),
            other => Err(Error::InvalidParams(format!(
                "unknown weighting `{other}` (expected `pmi` or `count`)"
            ))),
        }
    }
}

/// Builds the collocation graph: vocabulary terms as nodes, co-occurring
/// pairs as edges with weights normalized into (0, 1].  Zero- and
/// negative-PMI pairs are dropped under PMI weighting.
pub fn build_cooccurrence_graph(
    documents: &[TokenizedDocument],
    stats: &CorpusStats,
    window: usize,
    weighting: EdgeWeighting,
    pmi_epsilon: f64,
) -> Result<TermGraph> {
    let cooc = count_cooccurrences(documents, stats, window)?;
    let mut builder = TermGraphBuilder::new();
    for term in stats.vocab() {
        builder.add_node(term);
    }
    // Deterministic edge order: sorted id pairs.
    let mut pairs: Vec<(u32, u32, u64)> = cooc
        .counts
        .iter()
        .filter(|&(&(a, b), _)| a != b)
        .map(|(&(a, b), &c)| (a, b, c))
        .collect();
    pairs.sort_unstable();

    match weighting {
        EdgeWeighting::Count => {
            let max = pairs.iter().map(|&(_, _, c)| c).max().unwrap_or(0);
            for (a, b, c) in pairs {
                builder.add_edge(stats.term(a), stats.term(b), c as f64 / max as f64)?;
            }
        }
        EdgeWeighting::Pmi => {
            let mut weighted: Vec<(u32, u32, f64)> = Vec::new();
            let mut max_pmi = 0.0_f64;
            for (a, b, _) in pairs {
                let v = cooc.pmi(stats, stats.term(a), stats.term(b), pmi_epsilon)?;
                if v > 0.0 {
                    max_pmi = max_pmi.max(v);
                    weighted.push((a, b, v));
                }
            }
            for (a, b, v) in weighted {
                builder.add_edge(stats.term(a), stats.term(b), v / max_pmi)?;
            }
        }
    }
    Ok(builder.build())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocLabel {
    Positive,
    Negative,
    Discarded,
}

/// Distantly labeled documents plus the class-conditional token counts the
/// PMI-based methods need.
#[derive(Debug, Clone)]
pub struct LabeledDocumentSet {
    labels: Vec<DocLabel>,
    n_pos: u64,
    n_neg: u64,
    /// (positive, negative) token totals over labeled documents.
    class_tokens: (u64, u64),
    /// Per vocabulary id: (count in positive docs, count in negative docs).
    term_counts: Vec<(u64, u64)>,
}

impl LabeledDocumentSet {
    pub fn label(&self, doc_index: usize) -> DocLabel {
        self.labels[doc_index]
    }

    pub fn labels(&self) -> &[DocLabel] {
        &self.labels
    }

    pub fn n_pos(&self) -> u64 {
        self.n_pos
    }

    pub fn n_neg(&self) -> u64 {
        self.n_neg
    }

    /// Positive:negative document ratio (larger class over smaller).
    pub fn imbalance_ratio(&self) -> Option<f64> {
        let (lo, hi) = (self.n_pos.min(self.n_neg), self.n_pos.max(self.n_neg));
        (lo > 0).then(|| hi as f64 / lo as f64)
    }

    pub fn is_imbalanced(&self) -> bool {
        self.imbalance_ratio().is_none_or(|r| r > IMBALANCE_WARN_RATIO)
    }

    pub fn class_tokens(&self) -> (u64, u64) {
        self.class_tokens
    }

    /// (positive, negative) occurrence counts of a vocabulary term.
    pub fn term_counts(&self, stats: &CorpusStats, term: &str) -> Option<(u64, u64)> {
        stats.term_id(term).map(|id| self.term_counts[id as usize])
    }

    /// Smoothed term-class PMI in bits over the labeled documents.
    pub fn pmi(
        &self,
        stats: &CorpusStats,
        term: &str,
        class: Polarity,
        epsilon: f64,
    ) -> Result<f64> {
        let id = stats
            .term_id(term)
            .ok_or_else(|| Error::OutOfVocabulary(term.to_string()))?;
        let (cpos, cneg) = self.term_counts[id as usize];
        let joint = match class {
            Polarity::Positive => cpos,
            Polarity::Negative => cneg,
            Polarity::Neutral => {
                return Err(Error::InvalidParams(
                    "class PMI is defined for polar classes only".to_string(),
                ))
            }
        } as f64;
        let term_total = (cpos + cneg) as f64;
        let class_total = match class {
            Polarity::Positive => self.class_tokens.0,
            Polarity::Negative => self.class_tokens.1,
            Polarity::Neutral => unreachable!(),
        } as f64;
        let total = (self.class_tokens.0 + self.class_tokens.1) as f64;
        Ok(((joint + epsilon) * total / ((term_total + epsilon) * (class_total + epsilon))).log2())
    }
}

fn literal_matches_doc(doc: &TokenizedDocument, words: &[&str]) -> bool {
    match words {
        [] => false,
        [single] => doc.tokens.iter().any(|t| t.lemma == *single),
        phrase => doc
            .tokens
            .windows(phrase.len())
            .any(|w| w.iter().zip(phrase).all(|(t, p)| t.lemma == *p)),
    }
}

/// Labels each document by the polar seeds it contains: positive iff at least
/// one positive and no negative seed matches, symmetrically for negative,
/// discarded otherwise.  Literal seeds match lemmas, pattern seeds match
/// surface forms.
pub fn distant_label(
    documents: &[TokenizedDocument],
    seeds: &SeedSet,
    stats: &CorpusStats,
) -> Result<LabeledDocumentSet> {
    if seeds.is_empty() {
        return Err(Error::InvalidParams("empty seed set".to_string()));
    }
    let polar: Vec<_> = seeds.iter().filter(|s| s.polarity.is_polar()).collect();
    let mut labels = Vec::with_capacity(documents.len());
    let (mut n_pos, mut n_neg) = (0u64, 0u64);
    let mut class_tokens = (0u64, 0u64);
    let mut term_counts = vec![(0u64, 0u64); stats.vocab_size()];

    for doc in documents {
        let mut hit_pos = false;
        let mut hit_neg = false;
        for seed in &polar {
            let matched = match seed.kind {
                SeedKind::Literal => {
                    let words: Vec<&str> = seed.text.split(' ').collect();
                    literal_matches_doc(doc, &words)
                }
                SeedKind::Pattern => doc.tokens.iter().any(|t| seed.matches_token(&t.form)),
            };
            if matched {
                match seed.polarity {
                    Polarity::Positive => hit_pos = true,
                    Polarity::Negative => hit_neg = true,
                    Polarity::Neutral => {}
                }
            }
            if hit_pos && hit_neg {
                break;
            }
        }
        let label = match (hit_pos, hit_neg) {
            (true, false) => DocLabel::Positive,
            (false, true) => DocLabel::Negative,
            _ => DocLabel::Discarded,
        };
        match label {
            DocLabel::Positive => {
                n_pos += 1;
                class_tokens.0 += doc.tokens.len() as u64;
                for token in &doc.tokens {
                    if let Some(id) = stats.term_id(&token.lemma) {
                        term_counts[id as usize].0 += 1;
                    }
                }
            }
            DocLabel::Negative => {
                n_neg += 1;
                class_tokens.1 += doc.tokens.len() as u64;
                for token in &doc.tokens {
                    if let Some(id) = stats.term_id(&token.lemma) {
                        term_counts[id as usize].1 += 1;
                    }
                }
            }
            DocLabel::Discarded => {}
        }
        labels.push(label);
    }
    Ok(LabeledDocumentSet {
        labels,
        n_pos,
        n_neg,
        class_tokens,
        term_counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corpus(text: &str) -> Vec<TokenizedDocument> {
        parse_corpus(text, "mem").unwrap()
    }

    fn doc_from_lemmas(id: &str, lemmas: &[&str]) -> String {
        let mut out = format!("#doc {id}\n");
        for l in lemmas {
            out.push_str(&format!("{l}\t{l}\n"));
        }
        out.push('\n');
        out
    }

    #[test]
    fn parses_documents_and_preserves_forms() {
        let text = "#doc d1\nGut\tgut\n:)\t:)\n\n#doc d2\nSchlecht\tschlecht\n";
        let docs = corpus(text);
        assert_eq!(docs.len(), 2);
        assert_eq!(docs[0].tokens[0].form, "Gut");
        assert_eq!(docs[0].tokens[0].lemma, "gut");
        assert_eq!(docs[0].tokens[1].form, ":)");
    }

    #[test]
    fn rejects_malformed_lines_with_location() {
        let text = "#doc d1\nno-tab-here\n";
        match parse_corpus(text, "mem") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_corpus("orphan\ttoken\n", "mem").is_err());
        assert!(parse_corpus("#doc a\nx\tx\n\n#doc a\ny\ty\n", "mem").is_err());
        assert!(parse_corpus("#doc empty\n\n", "mem").is_err());
    }

    #[test]
    fn min_freq_filters_vocabulary() {
        let text = doc_from_lemmas("d1", &["a", "a", "b"]);
        let docs = corpus(&text);
        let stats = CorpusStats::build(&docs, 2).unwrap();
        assert_eq!(stats.vocab(), &["a".to_string()]);
        assert_eq!(stats.tf("a"), Some(2));
        assert_eq!(stats.tf("b"), None);

        let stats1 = CorpusStats::build(&docs, 1).unwrap();
        assert_eq!(stats1.vocab(), &["a".to_string(), "b".to_string()]);
        assert_eq!(stats1.n_tokens(), 3);
    }

    #[test]
    fn empty_corpus_is_rejected() {
        assert!(matches!(
            CorpusStats::build(&[], 1),
            Err(Error::EmptyCorpus(_))
        ));
    }

    #[test]
    fn frequencies_match_naive_recount() {
        // 100 synthetic documents; compare against an independent recount.
        let mut text = String::new();
        let lemmas = ["rot", "blau", "grün", "gelb", "grau"];
        for i in 0..100 {
            let chosen: Vec<&str> = (0..(i % 7 + 1)).map(|j| lemmas[(i * 3 + j) % 5]).collect();
            text.push_str(&doc_from_lemmas(&format!("d{i}"), &chosen));
        }
        let docs = corpus(&text);
        let stats = CorpusStats::build(&docs, 1).unwrap();

        let mut tf: HashMap<String, u64> = HashMap::new();
        let mut df: HashMap<String, u64> = HashMap::new();
        for doc in &docs {
            let mut seen = HashSet::new();
            for t in &doc.tokens {
                *tf.entry(t.lemma.clone()).or_insert(0) += 1;
                if seen.insert(t.lemma.clone()) {
                    *df.entry(t.lemma.clone()).or_insert(0) += 1;
                }
            }
        }
        for term in stats.vocab() {
            assert_eq!(stats.tf(term), Some(tf[term]));
            assert_eq!(stats.df(term), Some(df[term]));
        }
        assert_eq!(stats.n_tokens(), tf.values().sum::<u64>());
    }

    #[test]
    fn cooccurrence_respects_window() {
        let text = doc_from_lemmas("d1", &["a", "b"]) + &doc_from_lemmas("d2", &["a", "c", "b"]);
        let docs = corpus(&text);
        let stats = CorpusStats::build(&docs, 1).unwrap();
        let cooc = count_cooccurrences(&docs, &stats, 1).unwrap();
        // window 1: (a,b) adjacent once in d1, not adjacent in d2.
        assert_eq!(cooc.count(&stats, "a", "b"), 1);
        assert_eq!(cooc.count(&stats, "b", "a"), 1);
        assert_eq!(cooc.count(&stats, "a", "c"), 1);

        let cooc2 = count_cooccurrences(&docs, &stats, 2).unwrap();
        assert_eq!(cooc2.count(&stats, "a", "b"), 2);
    }

    #[test]
    fn single_pair_graph_gets_weight_one() {
        let text = doc_from_lemmas("d1", &["a", "b"]);
        let docs = corpus(&text);
        let stats = CorpusStats::build(&docs, 1).unwrap();
        let g = build_cooccurrence_graph(&docs, &stats, 1, EdgeWeighting::Pmi, DEFAULT_PMI_EPSILON)
            .unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges.len(), 1);
        assert_eq!(edges[0].2, 1.0);
    }

    #[test]
    fn graph_pmi_weights_match_brute_force() {
        // Synthetic corpus with skewed pair frequencies.
        let mut text = String::new();
        let pool = ["gut", "tag", "prima", "regen", "stadt", "übel"];
        for i in 0..500 {
            let a = pool[i % 6];
            let b = pool[(i * i + 1) % 6];
            let c = pool[(7 * i + 2) % 6];
            text.push_str(&doc_from_lemmas(&format!("d{i}"), &[a, b, c, a]));
        }
        let docs = corpus(&text);
        let stats = CorpusStats::build(&docs, 4).unwrap();
        let window = 2;
        let g = build_cooccurrence_graph(&docs, &stats, window, EdgeWeighting::Pmi, 0.5).unwrap();

        // Brute-force recount from raw token positions.
        let mut pair_counts: HashMap<(String, String), u64> = HashMap::new();
        for doc in &docs {
            for i in 0..doc.tokens.len() {
                for j in (i + 1)..doc.tokens.len().min(i + window + 1) {
                    let (u, v) = (&doc.tokens[i].lemma, &doc.tokens[j].lemma);
                    if stats.tf(u).is_none() || stats.tf(v).is_none() {
                        continue;
                    }
                    let key = if u <= v {
                        (u.clone(), v.clone())
                    } else {
                        (v.clone(), u.clone())
                    };
                    *pair_counts.entry(key).or_insert(0) += 1;
                }
            }
        }
        let n = stats.n_tokens() as f64;
        let mut pmis: HashMap<(String, String), f64> = HashMap::new();
        let mut max_pmi = 0.0_f64;
        for ((u, v), c) in &pair_counts {
            if u == v {
                continue;
            }
            let p = ((*c as f64 + 0.5) * n
                / ((stats.tf(u).unwrap() as f64 + 0.5) * (stats.tf(v).unwrap() as f64 + 0.5)))
                .log2();
            if p > 0.0 {
                max_pmi = max_pmi.max(p);
                pmis.insert((u.clone(), v.clone()), p);
            }
        }
        let mut checked = 0;
        for (u, v, w) in g.edges() {
            let (tu, tv) = (g.term(u).to_string(), g.term(v).to_string());
            let key = if tu <= tv { (tu, tv) } else { (tv, tu) };
            let expect = pmis[&key] / max_pmi;
            assert!((w - expect).abs() < 1e-12, "{key:?}: {w} vs {expect}");
            checked += 1;
        }
        assert_eq!(checked, pmis.len());
        assert!(checked > 0);
    }

    fn seeds_gut_schlecht() -> SeedSet {
        SeedSet::from_tsv(
            "gut\tpositive\t1.000000\nschlecht\tnegative\t1.000000\n",
            "mem",
        )
        .unwrap()
    }

    #[test]
    fn distant_label_assigns_and_discards() {
        let text = doc_from_lemmas("p", &["gut", "tag"])
            + &doc_from_lemmas("n", &["schlecht", "tag"])
            + &doc_from_lemmas("both", &["gut", "schlecht"])
            + &doc_from_lemmas("none", &["tag", "tag"]);
        let docs = corpus(&text);
        let stats = CorpusStats::build(&docs, 1).unwrap();
        let labeled = distant_label(&docs, &seeds_gut_schlecht(), &stats).unwrap();
        assert_eq!(labeled.label(0), DocLabel::Positive);
        assert_eq!(labeled.label(1), DocLabel::Negative);
        assert_eq!(labeled.label(2), DocLabel::Discarded);
        assert_eq!(labeled.label(3), DocLabel::Discarded);
        assert_eq!((labeled.n_pos(), labeled.n_neg()), (1, 1));
    }

    #[test]
    fn distant_label_pattern_seeds_match_forms() {
        let text = "#doc d1\n:)\t:)\ntag\ttag\n\n#doc d2\n:(\t:(\n\n";
        let docs = corpus(text);
        let stats = CorpusStats::build(&docs, 1).unwrap();
        let seeds = SeedSet::from_tsv(
            "[:;]-?\\)+\tpositive\t1.000000\tpattern\n[:;]-?\\(+\tnegative\t1.000000\tpattern\n",
            "mem",
        )
        .unwrap();
        let labeled = distant_label(&docs, &seeds, &stats).unwrap();
        assert_eq!(labeled.label(0), DocLabel::Positive);
        assert_eq!(labeled.label(1), DocLabel::Negative);
    }

    #[test]
    fn distant_label_is_order_stable() {
        let text = doc_from_lemmas("p", &["gut"])
            + &doc_from_lemmas("n", &["schlecht"])
            + &doc_from_lemmas("x", &["tag"]);
        let mut docs = corpus(&text);
        let stats = CorpusStats::build(&docs, 1).unwrap();
        let by_id = |docs: &[TokenizedDocument], labeled: &LabeledDocumentSet| {
            docs.iter()
                .enumerate()
                .map(|(i, d)| (d.doc_id.clone(), labeled.label(i)))
                .collect::<std::collections::BTreeMap<_, _>>()
        };
        let first = by_id(&docs, &distant_label(&docs, &seeds_gut_schlecht(), &stats).unwrap());
        docs.reverse();
        let second = by_id(&docs, &distant_label(&docs, &seeds_gut_schlecht(), &stats).unwrap());
        assert_eq!(first, second);
    }

    #[test]
    fn imbalance_ratio_is_reported() {
        let mut text = String::new();
        for i in 0..9 {
            text.push_str(&doc_from_lemmas(&format!("p{i}"), &["gut", "tag"]));
        }
        text.push_str(&doc_from_lemmas("n0", &["schlecht", "tag"]));
        let docs = corpus(&text);
        let stats = CorpusStats::build(&docs, 1).unwrap();
        let labeled = distant_label(&docs, &seeds_gut_schlecht(), &stats).unwrap();
        assert_eq!(labeled.imbalance_ratio(), Some(9.0));
        assert!(labeled.is_imbalanced());
    }

    #[test]
    fn class_counts_never_exceed_tf() {
        let text = doc_from_lemmas("p", &["gut", "tag", "tag"])
            + &doc_from_lemmas("n", &["schlecht", "tag"])
            + &doc_from_lemmas("skip", &["tag", "gut", "schlecht"]);
        let docs = corpus(&text);
        let stats = CorpusStats::build(&docs, 1).unwrap();
        let labeled = distant_label(&docs, &seeds_gut_schlecht(), &stats).unwrap();
        for term in stats.vocab() {
            let (p, n) = labeled.term_counts(&stats, term).unwrap();
            assert!(p + n <= stats.tf(term).unwrap());
        }
    }

    #[test]
    fn class_pmi_matches_hand_computation() {
        // Frozen fixture: joint=8, term=10, class=50, total=100.
        let labeled = LabeledDocumentSet {
            labels: vec![],
            n_pos: 1,
            n_neg: 1,
            class_tokens: (50, 50),
            term_counts: vec![(8, 2)],
        };
        let docs = corpus(&doc_from_lemmas("d", &["w"]));
        let stats = CorpusStats::build(&docs, 1).unwrap();
        let got = labeled.pmi(&stats, "w", Polarity::Positive, 0.5).unwrap();
        // log2((8+0.5)*100 / ((10+0.5)*(50+0.5))) computed independently.
        let expect = ((8.5_f64 * 100.0) / (10.5 * 50.5)).log2();
        assert!((got - expect).abs() < 1e-15);
        assert!((got - 0.680_790_125_494_509).abs() < 1e-12);
    }

    #[test]
    fn class_pmi_sign_check() {
        let text = doc_from_lemmas("p", &["gut", "wunder", "tag"])
            + &doc_from_lemmas("n", &["schlecht", "tag", "tag"]);
        let docs = corpus(&text);
        let stats = CorpusStats::build(&docs, 1).unwrap();
        let labeled = distant_label(&docs, &seeds_gut_schlecht(), &stats).unwrap();
        let pos = labeled.pmi(&stats, "wunder", Polarity::Positive, 0.5).unwrap();
        let neg = labeled.pmi(&stats, "wunder", Polarity::Negative, 0.5).unwrap();
        assert!(pos > 0.0, "pmi(wunder, pos) = {pos}");
        assert!(neg < 0.0, "pmi(wunder, neg) = {neg}");
        assert!(matches!(
            labeled.pmi(&stats, "unknown", Polarity::Positive, 0.5),
            Err(Error::OutOfVocabulary(_))
        ));
    }
}
