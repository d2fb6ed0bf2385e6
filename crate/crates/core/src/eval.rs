//! Intrinsic lexicon evaluation: case-insensitive trie matching of lexicon
//! entries against running corpus text, span-exact scoring of the polar
//! classes, and token-level scoring of the neutral class and micro average.
//!
//! Gold file format (UTF-8, LF, `#` comments):
//! `doc_id<TAB>start<TAB>end<TAB>polarity<TAB>surface(optional)` with token
//! index spans `[start, end)` and polarity in {positive, negative}.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::corpus::TokenizedDocument;
use crate::error::{Error, Result};
use crate::lexicon::{normalize_term, Lexicon, Polarity};

/// A gold-annotated polar span, in token indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldAnnotation {
    pub doc_id: String,
    pub start: usize,
    pub end: usize,
    pub polarity: Polarity,
}

/// Parses a gold annotation file.  Spans are validated against documents
/// separately (see [`validate_gold`]).
pub fn load_gold(path: &Path) -> Result<Vec<GoldAnnotation>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_gold(&text, &path.display().to_string())
}

pub fn parse_gold(text: &str, path: &str) -> Result<Vec<GoldAnnotation>> {
    let mut gold = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 4 && fields.len() != 5 {
            return Err(Error::Parse {
                path: path.to_string(),
                line: line_no,
                msg: format!("expected 4 or 5 tab-separated fields, got {}", fields.len()),
            });
        }
        let start: usize = fields[1].parse().map_err(|_| Error::Parse {
            path: path.to_string(),
            line: line_no,
            msg: format!("invalid start index `{}`", fields[1]),
        })?;
        let end: usize = fields[2].parse().map_err(|_| Error::Parse {
            path: path.to_string(),
            line: line_no,
            msg: format!("invalid end index `{}`", fields[2]),
        })?;
        if end <= start {
            return Err(Error::Parse {
                path: path.to_string(),
                line: line_no,
                msg: format!("span end must exceed start, got [{start}, {end})"),
            });
        }
        let polarity: Polarity = fields[3].parse().map_err(|_| Error::Parse {
            path: path.to_string(),
            line: line_no,
            msg: format!("unknown polarity `{}`", fields[3]),
        })?;
        if !polarity.is_polar() {
            return Err(Error::Parse {
                path: path.to_string(),
                line: line_no,
                msg: "gold spans must be positive or negative".to_string(),
            });
        }
        gold.push(GoldAnnotation {
            doc_id: fields[0].to_string(),
            start,
            end,
            polarity,
        });
    }
    Ok(gold)
}

/// Checks that every gold span lies inside a loaded document and that spans
/// within one document do not overlap.
pub fn validate_gold(gold: &[GoldAnnotation], documents: &[TokenizedDocument]) -> Result<()> {
    let doc_len: HashMap<&str, usize> = documents
        .iter()
        .map(|d| (d.doc_id.as_str(), d.tokens.len()))
        .collect();
    let mut by_doc: BTreeMap<&str, Vec<&GoldAnnotation>> = BTreeMap::new();
    for ann in gold {
        let Some(&len) = doc_len.get(ann.doc_id.as_str()) else {
            return Err(Error::InvalidSpan(format!(
                "gold span references unknown document `{}`",
                ann.doc_id
            )));
        };
        if ann.end > len {
            return Err(Error::InvalidSpan(format!(
                "gold span [{}, {}) exceeds document `{}` of length {len}",
                ann.start, ann.end, ann.doc_id
            )));
        }
        by_doc.entry(&ann.doc_id).or_default().push(ann);
    }
    for (doc_id, mut anns) in by_doc {
        anns.sort_by_key(|a| a.start);
        for pair in anns.windows(2) {
            if pair[1].start < pair[0].end {
                return Err(Error::InvalidSpan(format!(
                    "overlapping gold spans [{}, {}) and [{}, {}) in document `{doc_id}`",
                    pair[0].start, pair[0].end, pair[1].start, pair[1].end
                )));
            }
        }
    }
    Ok(())
}

/// Which token attribute carried a match.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchChannel {
    /// Every matched token was matched on its surface form.
    Form,
    /// At least one matched token required the lemma.
    Lemma,
}

/// A lexicon entry matched against a document, in token indices.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchSpan {
    pub doc_id: String,
    pub start: usize,
    pub end: usize,
    pub polarity: Polarity,
    pub term: String,
    pub channel: MatchChannel,
}

#[derive(Debug, Default)]
struct TrieNode {
    children: BTreeMap<String, usize>,
    terminal: Option<(String, Polarity)>,
}

/// Token-sequence trie over the normalized words of lexicon entries.
#[derive(Debug)]
pub struct MatchTrie {
    nodes: Vec<TrieNode>,
    depth: usize,
    terminals: usize,
}

impl MatchTrie {
    /// Builds the trie from a non-empty lexicon.  Entries are split on single
    /// spaces; neutral entries participate and predict neutral explicitly.
    pub fn build(lexicon: &Lexicon) -> Result<Self> {
        if lexicon.is_empty() {
            return Err(Error::InvalidParams(
                "cannot build a trie from an empty lexicon".to_string(),
            ));
        }
        let mut trie = MatchTrie {
            nodes: vec![TrieNode::default()],
            depth: 0,
            terminals: 0,
        };
        for entry in lexicon.iter() {
            let mut node = 0;
            let words: Vec<&str> = entry.term.split(' ').collect();
            for word in &words {
                let next = match trie.nodes[node].children.get(*word) {
                    Some(&n) => n,
                    None => {
                        trie.nodes.push(TrieNode::default());
                        let n = trie.nodes.len() - 1;
                        trie.nodes[node].children.insert(word.to_string(), n);
                        n
                    }
                };
                node = next;
            }
            if trie.nodes[node].terminal.is_none() {
                trie.terminals += 1;
            }
            trie.nodes[node].terminal = Some((entry.term.clone(), entry.polarity));
            trie.depth = trie.depth.max(words.len());
        }
        Ok(trie)
    }

    /// Longest entry word count.
    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn terminal_count(&self) -> usize {
        self.terminals
    }

    /// Exact walk over the words of `term` (already normalized).
    pub fn contains_term(&self, term: &str) -> bool {
        let mut node = 0;
        for word in term.split(' ') {
            match self.nodes[node].children.get(word) {
                Some(&n) => node = n,
                None => return false,
            }
        }
        self.nodes[node].terminal.is_some()
    }

    /// Deepest terminal reachable from token position `at`, where each step
    /// may match the token's normalized form or normalized lemma.  Prefers
    /// form steps when both channels lead to matches of equal length.
    fn longest_match(
        &self,
        tokens: &[(Option<String>, String)],
        at: usize,
    ) -> Option<(usize, &(String, Polarity), MatchChannel)> {
        let mut best: Option<(usize, &(String, Polarity), bool)> = None;
        // DFS over (node, depth, used_lemma); form-first exploration order
        // with strictly-longer-wins keeps the result deterministic.
        let mut stack = vec![(0usize, 0usize, false)];
        while let Some((node, depth, used_lemma)) = stack.pop() {
            if let Some(terminal) = &self.nodes[node].terminal {
                let better = match &best {
                    None => depth > 0,
                    Some((bd, _, bl)) => depth > *bd || (depth == *bd && *bl && !used_lemma),
                };
                if better {
                    best = Some((depth, terminal, used_lemma));
                }
            }
            let Some((form, lemma)) = tokens.get(at + depth) else {
                continue;
            };
            // Push the lemma branch first so the form branch is explored
            // first (stack order).
            let lemma_child = self.nodes[node].children.get(lemma.as_str()).copied();
            let form_child = form
                .as_deref()
                .and_then(|f| self.nodes[node].children.get(f))
                .copied();
            if let Some(n) = lemma_child {
                if form_child != Some(n) {
                    stack.push((n, depth + 1, true));
                }
            }
            if let Some(n) = form_child {
                stack.push((n, depth + 1, used_lemma));
            }
            // A token whose form and lemma normalize to the same child walks
            // the form channel.
        }
        best.map(|(depth, terminal, used_lemma)| {
            let channel = if used_lemma {
                MatchChannel::Lemma
            } else {
                MatchChannel::Form
            };
            (depth, terminal, channel)
        })
    }
}

/// Scans every document left to right, emitting the longest non-overlapping
/// matches.  On a successful match the scan resumes after it; otherwise it
/// advances one token.
pub fn match_corpus(trie: &MatchTrie, documents: &[TokenizedDocument]) -> Vec<MatchSpan> {
    let mut spans = Vec::new();
    for doc in documents {
        let tokens: Vec<(Option<String>, String)> = doc
            .tokens
            .iter()
            .map(|t| (normalize_term(&t.form).ok(), t.lemma.clone()))
            .collect();
        let mut i = 0;
        while i < tokens.len() {
            match trie.longest_match(&tokens, i) {
                Some((len, (term, polarity), channel)) => {
                    spans.push(MatchSpan {
                        doc_id: doc.doc_id.clone(),
                        start: i,
                        end: i + len,
                        polarity: *polarity,
                        term: term.clone(),
                        channel,
                    });
                    i += len;
                }
                None => i += 1,
            }
        }
    }
    spans
}

/// Precision/recall/F for one polarity class, with the raw counts behind
/// them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassMetrics {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub true_positives: u64,
    pub false_positives: u64,
    pub false_negatives: u64,
}

impl ClassMetrics {
    fn from_counts(tp: u64, fp: u64, fn_: u64) -> Self {
        let precision = if tp + fp == 0 {
            0.0
        } else {
            tp as f64 / (tp + fp) as f64
        };
        let recall = if tp + fn_ == 0 {
            0.0
        } else {
            tp as f64 / (tp + fn_) as f64
        };
        let f1 = if precision + recall == 0.0 {
            0.0
        } else {
            2.0 * precision * recall / (precision + recall)
        };
        ClassMetrics {
            precision,
            recall,
            f1,
            true_positives: tp,
            false_positives: fp,
            false_negatives: fn_,
        }
    }
}

/// The full evaluation report.  Positive and negative are span-exact; the
/// neutral class and the micro average are token-level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub positive: ClassMetrics,
    pub negative: ClassMetrics,
    pub neutral: ClassMetrics,
    pub macro_f: f64,
    pub micro_f: f64,
    pub total_tokens: u64,
    pub correct_tokens: u64,
}

impl EvalReport {
    pub fn class(&self, polarity: Polarity) -> &ClassMetrics {
        match polarity {
            Polarity::Positive => &self.positive,
            Polarity::Negative => &self.negative,
            Polarity::Neutral => &self.neutral,
        }
    }
}

/// Scores a match list against gold annotations.
///
/// A polar match is a true positive iff a gold annotation with the same
/// document, span, and polarity exists.  Tokens inside no gold span count as
/// gold-neutral; tokens inside no polar match span count as predicted
/// neutral.  The micro average is token-level accuracy over the three-class
/// single-label assignment.
pub fn evaluate(
    matches: &[MatchSpan],
    gold: &[GoldAnnotation],
    documents: &[TokenizedDocument],
) -> Result<EvalReport> {
    validate_gold(gold, documents)?;
    let doc_index: HashMap<&str, usize> = documents
        .iter()
        .enumerate()
        .map(|(i, d)| (d.doc_id.as_str(), i))
        .collect();

    // Token-level class assignments.
    let mut gold_class: Vec<Vec<Polarity>> = documents
        .iter()
        .map(|d| vec![Polarity::Neutral; d.tokens.len()])
        .collect();
    let mut pred_class = gold_class.clone();
    for ann in gold {
        let di = doc_index[ann.doc_id.as_str()];
        for t in ann.start..ann.end {
            gold_class[di][t] = ann.polarity;
        }
    }
    for span in matches {
        let Some(&di) = doc_index.get(span.doc_id.as_str()) else {
            return Err(Error::InvalidSpan(format!(
                "match references unknown document `{}`",
                span.doc_id
            )));
        };
        if span.end > documents[di].tokens.len() || span.start >= span.end {
            return Err(Error::InvalidSpan(format!(
                "match span [{}, {}) out of bounds in document `{}`",
                span.start, span.end, span.doc_id
            )));
        }
        if span.polarity.is_polar() {
            for t in span.start..span.end {
                pred_class[di][t] = span.polarity;
            }
        }
    }

    // Span-exact counting for the polar classes.
    let gold_set: HashSet<(usize, usize, usize, Polarity)> = gold
        .iter()
        .map(|a| (doc_index[a.doc_id.as_str()], a.start, a.end, a.polarity))
        .collect();
    let mut tp = [0u64; 2];
    let mut fp = [0u64; 2];
    let mut matched_gold: HashSet<(usize, usize, usize, Polarity)> = HashSet::new();
    for span in matches.iter().filter(|s| s.polarity.is_polar()) {
        let key = (
            doc_index[span.doc_id.as_str()],
            span.start,
            span.end,
            span.polarity,
        );
        let ci = (span.polarity == Polarity::Negative) as usize;
        if gold_set.contains(&key) {
            // Duplicate identical polar matches cannot occur in trie output;
            // count each gold twin once.
            if matched_gold.insert(key) {
                tp[ci] += 1;
            }
        } else {
            fp[ci] += 1;
        }
    }
    let mut fn_ = [0u64; 2];
    for key in &gold_set {
        if !matched_gold.contains(key) {
            fn_[(key.3 == Polarity::Negative) as usize] += 1;
        }
    }

    // Token-level counting for neutral and micro.
    let (mut neu_tp, mut neu_fp, mut neu_fn) = (0u64, 0u64, 0u64);
    let (mut total, mut correct) = (0u64, 0u64);
    for (g_doc, p_doc) in gold_class.iter().zip(&pred_class) {
        for (g, p) in g_doc.iter().zip(p_doc) {
            total += 1;
            if g == p {
                correct += 1;
            }
            match (*g == Polarity::Neutral, *p == Polarity::Neutral) {
                (true, true) => neu_tp += 1,
                (false, true) => neu_fp += 1,
                (true, false) => neu_fn += 1,
                (false, false) => {}
            }
        }
    }

    let positive = ClassMetrics::from_counts(tp[0], fp[0], fn_[0]);
    let negative = ClassMetrics::from_counts(tp[1], fp[1], fn_[1]);
    let neutral = ClassMetrics::from_counts(neu_tp, neu_fp, neu_fn);
    let macro_f = (positive.f1 + negative.f1 + neutral.f1) / 3.0;
    let micro_f = if total == 0 {
        0.0
    } else {
        correct as f64 / total as f64
    };
    Ok(EvalReport {
        positive,
        negative,
        neutral,
        macro_f,
        micro_f,
        total_tokens: total,
        correct_tokens: correct,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
    CsvRow,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            "csv-row" => Ok(ReportFormat::CsvRow),
            other => Err(Error::InvalidParams(format!(
                "unknown report format `{other}` (expected text, json, or csv-row)"
            ))),
        }
    }
}

/// Renders a report.  Text mirrors the class/precision/recall/F table layout
/// with three decimals; JSON carries the raw counts; csv-row is the flat
/// machine-readable variant used by the sweep harness.
pub fn format_report(report: &EvalReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => {
            let mut out = String::new();
            out.push_str("class      precision  recall     f1\n");
            for (name, m) in [
                ("positive", &report.positive),
                ("negative", &report.negative),
                ("neutral", &report.neutral),
            ] {
                out.push_str(&format!(
                    "{name:<10} {:<10.3} {:<10.3} {:<10.3}\n",
                    m.precision, m.recall, m.f1
                ));
            }
            out.push_str(&format!("macro-F    {:.3}\n", report.macro_f));
            out.push_str(&format!("micro-F    {:.3}\n", report.micro_f));
            out.push_str(
                "# positive/negative are span-exact; neutral and micro-F are token-level\n",
            );
            out
        }
        ReportFormat::Json => {
            let mut text = serde_json::to_string_pretty(report).expect("report serializes");
            text.push('\n');
            text
        }
        ReportFormat::CsvRow => {
            let mut out = String::from(
                "pos_precision,pos_recall,pos_f1,neg_precision,neg_recall,neg_f1,\
                 neu_precision,neu_recall,neu_f1,macro_f,micro_f\n",
            );
            out.push_str(&format!(
                "{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6}\n",
                report.positive.precision,
                report.positive.recall,
                report.positive.f1,
                report.negative.precision,
                report.negative.recall,
                report.negative.f1,
                report.neutral.precision,
                report.neutral.recall,
                report.neutral.f1,
                report.macro_f,
                report.micro_f
            ));
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::parse_corpus;
    use crate::lexicon::LexiconEntry;

    fn lexicon(entries: &[(&str, Polarity)]) -> Lexicon {
        let mut l = Lexicon::new("test");
        for (t, p) in entries {
            l.insert(LexiconEntry::new(t, *p, 1.0).unwrap());
        }
        l
    }

    fn docs_from(text: &str) -> Vec<TokenizedDocument> {
        parse_corpus(text, "mem").unwrap()
    }

    #[test]
    fn trie_shape_for_multiword_entry() {
        let trie = MatchTrie::build(&lexicon(&[("sehr gut", Polarity::Positive)])).unwrap();
        assert_eq!(trie.depth(), 2);
        assert_eq!(trie.terminal_count(), 1);
        assert!(trie.contains_term("sehr gut"));
        assert!(!trie.contains_term("sehr"));
    }

    #[test]
    fn trie_collapses_case_variants() {
        // "GUT" normalizes onto the same path as "gut" inside the lexicon.
        let mut l = lexicon(&[("gut", Polarity::Positive)]);
        l.insert(LexiconEntry::new("GUT", Polarity::Positive, 1.0).unwrap());
        assert_eq!(l.len(), 1);
        let trie = MatchTrie::build(&l).unwrap();
        assert_eq!(trie.terminal_count(), 1);
    }

    #[test]
    fn trie_rejects_empty_lexicon() {
        assert!(MatchTrie::build(&Lexicon::new("empty")).is_err());
    }

    #[test]
    fn every_entry_of_a_large_lexicon_is_retrievable() {
        let mut l = Lexicon::new("big");
        let mut terms = Vec::new();
        for i in 0..1000 {
            let term = if i % 3 == 0 {
                format!("wort{i} extra{}", i % 17)
            } else {
                format!("wort{i}")
            };
            terms.push(term.clone());
            l.insert(LexiconEntry::new(&term, Polarity::Positive, 1.0).unwrap());
        }
        let trie = MatchTrie::build(&l).unwrap();
        for term in &terms {
            assert!(trie.contains_term(term), "missing {term}");
        }
        assert_eq!(trie.terminal_count(), 1000);
    }

    #[test]
    fn matches_by_form_or_lemma() {
        let docs = docs_from("#doc d\nGut\tgut\n");
        let trie = MatchTrie::build(&lexicon(&[("gut", Polarity::Positive)])).unwrap();
        let spans = match_corpus(&trie, &docs);
        assert_eq!(spans.len(), 1);
        assert_eq!((spans[0].start, spans[0].end), (0, 1));
        // Normalized form "gut" itself matches, so the form channel carries it.
        assert_eq!(spans[0].channel, MatchChannel::Form);

        // Inflected form only matches through the lemma.
        let docs = docs_from("#doc d\nGutes\tgut\n");
        let spans = match_corpus(&trie, &docs);
        assert_eq!(spans.len(), 1);
        assert_eq!(spans[0].channel, MatchChannel::Lemma);
    }

    #[test]
    fn longest_match_wins() {
        let docs = docs_from("#doc d\nsehr\tsehr\ngut\tgut\n");
        let trie = MatchTrie::build(&lexicon(&[
            ("gut", Polarity::Positive),
            ("sehr gut", Polarity::Positive),
        ]))
        .unwrap();
        let spans = match_corpus(&trie, &docs);
        assert_eq!(spans.len(), 1);
        assert_eq!(spans[0].term, "sehr gut");
        assert_eq!((spans[0].start, spans[0].end), (0, 2));
    }

    #[test]
    fn channels_can_mix_within_one_match() {
        let docs = docs_from("#doc d\nsehr\tsehr\nGutes\tgut\n");
        let trie = MatchTrie::build(&lexicon(&[("sehr gut", Polarity::Positive)])).unwrap();
        let spans = match_corpus(&trie, &docs);
        assert_eq!(spans.len(), 1);
        assert_eq!(spans[0].channel, MatchChannel::Lemma);
    }

    #[test]
    fn no_overlap_in_output_and_resume_after_match() {
        let docs = docs_from("#doc d\ngut\tgut\ngut\tgut\nschlecht\tschlecht\n");
        let trie = MatchTrie::build(&lexicon(&[
            ("gut gut", Polarity::Positive),
            ("gut schlecht", Polarity::Negative),
            ("schlecht", Polarity::Negative),
        ]))
        .unwrap();
        let spans = match_corpus(&trie, &docs);
        let ranges: Vec<(usize, usize)> = spans.iter().map(|s| (s.start, s.end)).collect();
        assert_eq!(ranges, vec![(0, 2), (2, 3)]);
    }

    #[test]
    fn empty_overlap_matches_nothing() {
        let docs = docs_from("#doc d\nx\tx\ny\ty\n");
        let trie = MatchTrie::build(&lexicon(&[("gut", Polarity::Positive)])).unwrap();
        assert!(match_corpus(&trie, &docs).is_empty());
    }

    fn ten_token_doc() -> Vec<TokenizedDocument> {
        let mut text = String::from("#doc d\n");
        for i in 0..10 {
            text.push_str(&format!("t{i}\tt{i}\n"));
        }
        docs_from(&text)
    }

    #[test]
    fn hand_counted_fixture() {
        let docs = ten_token_doc();
        let gold = vec![GoldAnnotation {
            doc_id: "d".to_string(),
            start: 2,
            end: 4,
            polarity: Polarity::Positive,
        }];
        let matches = vec![
            MatchSpan {
                doc_id: "d".to_string(),
                start: 2,
                end: 4,
                polarity: Polarity::Positive,
                term: "t2 t3".to_string(),
                channel: MatchChannel::Form,
            },
            MatchSpan {
                doc_id: "d".to_string(),
                start: 7,
                end: 8,
                polarity: Polarity::Negative,
                term: "t7".to_string(),
                channel: MatchChannel::Form,
            },
        ];
        let report = evaluate(&matches, &gold, &docs).unwrap();
        assert!((report.positive.precision - 1.0).abs() < 1e-12);
        assert!((report.positive.recall - 1.0).abs() < 1e-12);
        assert!((report.positive.f1 - 1.0).abs() < 1e-12);
        assert_eq!(report.negative.precision, 0.0);
        assert_eq!(report.negative.recall, 0.0);
        assert_eq!(report.negative.f1, 0.0);
        assert!((report.neutral.precision - 1.0).abs() < 1e-12);
        assert!((report.neutral.recall - 7.0 / 8.0).abs() < 1e-12);
        assert!((report.neutral.f1 - 14.0 / 15.0).abs() < 1e-12);
        assert!((report.macro_f - 29.0 / 45.0).abs() < 1e-12);
        assert!((report.micro_f - 0.9).abs() < 1e-12);
        assert_eq!(report.total_tokens, 10);
        assert_eq!(report.correct_tokens, 9);
    }

    #[test]
    fn perfect_lexicon_scores_one_everywhere() {
        let docs = docs_from("#doc d\ngut\tgut\nx\tx\nschlecht\tschlecht\n");
        let gold = vec![
            GoldAnnotation {
                doc_id: "d".into(),
                start: 0,
                end: 1,
                polarity: Polarity::Positive,
            },
            GoldAnnotation {
                doc_id: "d".into(),
                start: 2,
                end: 3,
                polarity: Polarity::Negative,
            },
        ];
        let trie = MatchTrie::build(&lexicon(&[
            ("gut", Polarity::Positive),
            ("schlecht", Polarity::Negative),
        ]))
        .unwrap();
        let report = evaluate(&match_corpus(&trie, &docs), &gold, &docs).unwrap();
        for m in [&report.positive, &report.negative, &report.neutral] {
            assert_eq!((m.precision, m.recall, m.f1), (1.0, 1.0, 1.0));
        }
        assert_eq!(report.macro_f, 1.0);
        assert_eq!(report.micro_f, 1.0);
    }

    #[test]
    fn empty_match_list_degenerates_as_specified() {
        let docs = ten_token_doc();
        let gold = vec![GoldAnnotation {
            doc_id: "d".into(),
            start: 2,
            end: 4,
            polarity: Polarity::Positive,
        }];
        let report = evaluate(&[], &gold, &docs).unwrap();
        assert_eq!(report.positive.f1, 0.0);
        assert_eq!(report.negative.f1, 0.0);
        assert_eq!(report.neutral.recall, 1.0);
        assert!((report.neutral.precision - 8.0 / 10.0).abs() < 1e-12);
    }

    #[test]
    fn gold_replayed_as_matches_is_perfect() {
        let docs = ten_token_doc();
        let gold = vec![
            GoldAnnotation {
                doc_id: "d".into(),
                start: 1,
                end: 3,
                polarity: Polarity::Positive,
            },
            GoldAnnotation {
                doc_id: "d".into(),
                start: 5,
                end: 6,
                polarity: Polarity::Negative,
            },
        ];
        let matches: Vec<MatchSpan> = gold
            .iter()
            .map(|a| MatchSpan {
                doc_id: a.doc_id.clone(),
                start: a.start,
                end: a.end,
                polarity: a.polarity,
                term: "oracle".to_string(),
                channel: MatchChannel::Form,
            })
            .collect();
        let report = evaluate(&matches, &gold, &docs).unwrap();
        assert_eq!(report.macro_f, 1.0);
    }

    #[test]
    fn unmatched_entries_leave_report_unchanged() {
        let docs = docs_from("#doc d\ngut\tgut\nx\tx\n");
        let gold = vec![GoldAnnotation {
            doc_id: "d".into(),
            start: 0,
            end: 1,
            polarity: Polarity::Positive,
        }];
        let base = lexicon(&[("gut", Polarity::Positive)]);
        let mut extended = base.clone();
        extended.insert(LexiconEntry::new("niemals", Polarity::Negative, 1.0).unwrap());
        let r1 = evaluate(
            &match_corpus(&MatchTrie::build(&base).unwrap(), &docs),
            &gold,
            &docs,
        )
        .unwrap();
        let r2 = evaluate(
            &match_corpus(&MatchTrie::build(&extended).unwrap(), &docs),
            &gold,
            &docs,
        )
        .unwrap();
        assert_eq!(r1, r2);
    }

    #[test]
    fn micro_f_equals_token_accuracy() {
        let docs = ten_token_doc();
        let gold = vec![GoldAnnotation {
            doc_id: "d".into(),
            start: 0,
            end: 2,
            polarity: Polarity::Negative,
        }];
        let matches = vec![MatchSpan {
            doc_id: "d".into(),
            start: 1,
            end: 3,
            polarity: Polarity::Negative,
            term: "x".into(),
            channel: MatchChannel::Form,
        }];
        let report = evaluate(&matches, &gold, &docs).unwrap();
        // gold: tokens 0,1 negative; predicted: tokens 1,2 negative.
        // correct: token 1 plus tokens 3..9 -> 8 of 10.
        assert!((report.micro_f - 0.8).abs() < 1e-12);
        assert_eq!(
            report.micro_f,
            report.correct_tokens as f64 / report.total_tokens as f64
        );
    }

    #[test]
    fn gold_validation_errors() {
        let docs = ten_token_doc();
        let out_of_bounds = vec![GoldAnnotation {
            doc_id: "d".into(),
            start: 8,
            end: 11,
            polarity: Polarity::Positive,
        }];
        assert!(matches!(
            evaluate(&[], &out_of_bounds, &docs),
            Err(Error::InvalidSpan(_))
        ));
        let overlapping = vec![
            GoldAnnotation {
                doc_id: "d".into(),
                start: 1,
                end: 3,
                polarity: Polarity::Positive,
            },
            GoldAnnotation {
                doc_id: "d".into(),
                start: 2,
                end: 4,
                polarity: Polarity::Negative,
            },
        ];
        assert!(matches!(
            evaluate(&[], &overlapping, &docs),
            Err(Error::InvalidSpan(_))
        ));
        let unknown_doc = vec![GoldAnnotation {
            doc_id: "nope".into(),
            start: 0,
            end: 1,
            polarity: Polarity::Positive,
        }];
        assert!(matches!(
            evaluate(&[], &unknown_doc, &docs),
            Err(Error::InvalidSpan(_))
        ));
    }

    #[test]
    fn gold_file_parsing() {
        let text = "# comment\nd\t2\t4\tpositive\tsehr gut\nd\t7\t8\tnegative\n";
        let gold = parse_gold(text, "mem").unwrap();
        assert_eq!(gold.len(), 2);
        assert_eq!(gold[0].polarity, Polarity::Positive);
        assert!(parse_gold("d\t3\t3\tpositive\n", "mem").is_err());
        assert!(parse_gold("d\t0\t1\tneutral\n", "mem").is_err());
        assert!(parse_gold("d\t0\tx\tpositive\n", "mem").is_err());
    }

    #[test]
    fn report_formats() {
        let docs = ten_token_doc();
        let gold = vec![GoldAnnotation {
            doc_id: "d".into(),
            start: 2,
            end: 4,
            polarity: Polarity::Positive,
        }];
        let matches = vec![
            MatchSpan {
                doc_id: "d".into(),
                start: 2,
                end: 4,
                polarity: Polarity::Positive,
                term: "t2 t3".into(),
                channel: MatchChannel::Form,
            },
            MatchSpan {
                doc_id: "d".into(),
                start: 7,
                end: 8,
                polarity: Polarity::Negative,
                term: "t7".into(),
                channel: MatchChannel::Form,
            },
        ];
        let report = evaluate(&matches, &gold, &docs).unwrap();

        let text = format_report(&report, ReportFormat::Text);
        assert!(text.contains("positive   1.000      1.000      1.000"));
        assert!(text.contains("negative   0.000      0.000      0.000"));

        let json = format_report(&report, ReportFormat::Json);
        let parsed: EvalReport = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, report);

        let csv = format_report(&report, ReportFormat::CsvRow);
        let mut lines = csv.lines();
        assert!(lines.next().unwrap().starts_with("pos_precision,"));
        assert!(lines.next().unwrap().starts_with("1.000000,1.000000,1.000000,"));
    }

    #[test]
    fn all_perfect_report_prints_ones() {
        let docs = docs_from("#doc d\ngut\tgut\nx\tx\nschlecht\tschlecht\n");
        let gold = vec![
            GoldAnnotation {
                doc_id: "d".into(),
                start: 0,
                end: 1,
                polarity: Polarity::Positive,
            },
            GoldAnnotation {
                doc_id: "d".into(),
                start: 2,
                end: 3,
                polarity: Polarity::Negative,
            },
        ];
        let trie = MatchTrie::build(&lexicon(&[
            ("gut", Polarity::Positive),
            ("schlecht", Polarity::Negative),
        ]))
        .unwrap();
        let report = evaluate(&match_corpus(&trie, &docs), &gold, &docs).unwrap();
        let text = format_report(&report, ReportFormat::Text);
        for line in text.lines().filter(|l| !l.starts_with('#')) {
            if line.starts_with("macro") || line.starts_with("micro") {
                assert!(line.ends_with("1.000"));
            }
        }
    }
}
