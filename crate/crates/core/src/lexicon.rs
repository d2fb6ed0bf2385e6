//! Polarity lexicons: the universal output of every induction algorithm and
//! the input of the evaluation harness.
//!
//! A lexicon maps a normalized term to a `(polarity, score)` pair.  Scores are
//! non-negative confidence magnitudes on an algorithm-specific scale; the
//! polarity is kept separate so that algorithms with different score semantics
//! (probabilities, magnetizations, margins) share one container.
//!
//! File format: UTF-8, LF line endings, one entry per line as
//! `term<TAB>polarity<TAB>score` with the score printed to 6 decimal places,
//! lines sorted by (score descending, term ascending).  `#`-prefixed lines are
//! comments.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::seeds::SeedSet;

/// Three-valued prior polarity of a term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Positive,
    Negative,
    Neutral,
}

impl Polarity {
    /// Positive <-> negative; neutral maps to itself.
    pub fn flipped(self) -> Polarity {
        match self {
            Polarity::Positive => Polarity::Negative,
            Polarity::Negative => Polarity::Positive,
            Polarity::Neutral => Polarity::Neutral,
        }
    }

    pub fn is_polar(self) -> bool {
        !matches!(self, Polarity::Neutral)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Polarity::Positive => "positive",
            Polarity::Negative => "negative",
            Polarity::Neutral => "neutral",
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Polarity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "positive" => Ok(Polarity::Positive),
            "negative" => Ok(Polarity::Negative),
            "neutral" => Ok(Polarity::Neutral),
            other => Err(Error::InvalidTerm(format!("unknown polarity `{other}`"))),
        }
    }
}

/// Canonical form of a lexicon term: trimmed, lowercased, with internal
/// whitespace runs collapsed to a single space.
pub fn normalize_term(raw: &str) -> Result<String> {
    let trimmed = raw.trim();
    if trimmed.is_empty() {
        return Err(Error::InvalidTerm(format!(
            "term is empty after trimming: {raw:?}"
        )));
    }
    let mut out = String::with_capacity(trimmed.len());
    let mut pending_space = false;
    for ch in trimmed.chars() {
        if ch.is_whitespace() {
            pending_space = true;
            continue;
        }
        if pending_space && !out.is_empty() {
            out.push(' ');
        }
        pending_space = false;
        for low in ch.to_lowercase() {
            out.push(low);
        }
    }
    Ok(out)
}

/// One lexicon entry: a normalized term with its polarity and confidence.
#[derive(Debug, Clone, PartialEq)]
pub struct LexiconEntry {
    pub term: String,
    pub polarity: Polarity,
    pub score: f64,
}

impl LexiconEntry {
    /// Builds an entry, normalizing the term and validating the score.
    pub fn new(term: &str, polarity: Polarity, score: f64) -> Result<Self> {
        if !score.is_finite() || score < 0.0 {
            return Err(Error::InvalidTerm(format!(
                "score for `{term}` must be a finite non-negative number, got {score}"
            )));
        }
        Ok(LexiconEntry {
            term: normalize_term(term)?,
            polarity,
            score,
        })
    }
}

/// A term -> entry map with a provenance label describing how it was built.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Lexicon {
    entries: BTreeMap<String, LexiconEntry>,
    pub provenance: String,
}

impl Lexicon {
    pub fn new(provenance: impl Into<String>) -> Self {
        Lexicon {
            entries: BTreeMap::new(),
            provenance: provenance.into(),
        }
    }

    /// Inserts an entry, replacing any previous entry for the same term.
    pub fn insert(&mut self, entry: LexiconEntry) {
        self.entries.insert(entry.term.clone(), entry);
    }

    pub fn get(&self, term: &str) -> Option<&LexiconEntry> {
        self.entries.get(term)
    }

    pub fn contains(&self, term: &str) -> bool {
        self.entries.contains_key(term)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in term order (the internal map order).
    pub fn iter(&self) -> impl Iterator<Item = &LexiconEntry> {
        self.entries.values()
    }

    /// Number of entries with the given polarity.
    pub fn count(&self, polarity: Polarity) -> usize {
        self.iter().filter(|e| e.polarity == polarity).count()
    }

    /// Entries in the canonical serialization order: score descending, then
    /// term ascending.
    pub fn sorted_entries(&self) -> Vec<&LexiconEntry> {
        let mut out: Vec<&LexiconEntry> = self.entries.values().collect();
        out.sort_by(|a, b| {
            b.score
                .total_cmp(&a.score)
                .then_with(|| a.term.cmp(&b.term))
        });
        out
    }

    /// Serializes to the lexicon TSV format.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for entry in self.sorted_entries() {
            out.push_str(&format!(
                "{}\t{}\t{:.6}\n",
                entry.term, entry.polarity, entry.score
            ));
        }
        out
    }

    pub fn write_file(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_tsv()).map_err(|e| Error::io(path, e))
    }

    /// Parses the lexicon TSV format.  Duplicate normalized terms are
    /// rejected; `#`-prefixed and blank lines are ignored.
    pub fn from_tsv(text: &str, path: &str, provenance: impl Into<String>) -> Result<Self> {
        let mut lexicon = Lexicon::new(provenance);
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 {
                return Err(Error::Parse {
                    path: path.to_string(),
                    line: line_no,
                    msg: format!("expected 3 tab-separated fields, got {}", fields.len()),
                });
            }
            let polarity: Polarity = fields[1].parse().map_err(|_| Error::Parse {
                path: path.to_string(),
                line: line_no,
                msg: format!("unknown polarity `{}`", fields[1]),
            })?;
            let score: f64 = fields[2].parse().map_err(|_| Error::Parse {
                path: path.to_string(),
                line: line_no,
                msg: format!("invalid score `{}`", fields[2]),
            })?;
            let entry = LexiconEntry::new(fields[0], polarity, score).map_err(|e| Error::Parse {
                path: path.to_string(),
                line: line_no,
                msg: e.to_string(),
            })?;
            if lexicon.contains(&entry.term) {
                return Err(Error::Parse {
                    path: path.to_string(),
                    line: line_no,
                    msg: format!("duplicate term `{}`", entry.term),
                });
            }
            lexicon.insert(entry);
        }
        Ok(lexicon)
    }

    pub fn read_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Lexicon::from_tsv(
            &text,
            &path.display().to_string(),
            format!("file({})", path.display()),
        )
    }
}

/// Union of lexicons.  A term appearing with conflicting polarities keeps the
/// highest-scoring entry; a score tie between conflicting polarities resolves
/// to neutral.
pub fn lexicon_union(lexicons: &[Lexicon]) -> Lexicon {
    let mut out = Lexicon::new(format!(
        "union({})",
        lexicons
            .iter()
            .map(|l| l.provenance.as_str())
            .collect::<Vec<_>>()
            .join(", ")
    ));
    let mut terms: BTreeMap<&str, Vec<&LexiconEntry>> = BTreeMap::new();
    for lexicon in lexicons {
        for entry in lexicon.iter() {
            terms.entry(&entry.term).or_default().push(entry);
        }
    }
    for (term, entries) in terms {
        let max_score = entries
            .iter()
            .map(|e| e.score)
            .fold(f64::NEG_INFINITY, f64::max);
        let mut winners = entries.iter().filter(|e| e.score == max_score);
        let first = winners.next().expect("at least one entry");
        let polarity = if winners.all(|e| e.polarity == first.polarity) {
            first.polarity
        } else {
            Polarity::Neutral
        };
        out.insert(LexiconEntry {
            term: term.to_string(),
            polarity,
            score: max_score,
        });
    }
    out
}

/// Intersection of lexicons.  A term survives iff it appears in every input
/// with the same polarity; the resulting score is the minimum input score.
pub fn lexicon_intersection(lexicons: &[Lexicon]) -> Lexicon {
    let mut out = Lexicon::new(format!(
        "intersection({})",
        lexicons
            .iter()
            .map(|l| l.provenance.as_str())
            .collect::<Vec<_>>()
            .join(", ")
    ));
    let Some(first) = lexicons.first() else {
        return out;
    };
    'terms: for entry in first.iter() {
        let mut score = entry.score;
        for other in &lexicons[1..] {
            match other.get(&entry.term) {
                Some(e) if e.polarity == entry.polarity => score = score.min(e.score),
                _ => continue 'terms,
            }
        }
        out.insert(LexiconEntry {
            term: entry.term.clone(),
            polarity: entry.polarity,
            score,
        });
    }
    out
}

/// The first `k` entries under (score descending, term ascending), optionally
/// restricted to one polarity.  Terms that are literal seeds are excluded when
/// a seed set is supplied.
pub fn top_k(
    lexicon: &Lexicon,
    k: usize,
    polarity: Option<Polarity>,
    exclude_seeds: Option<&SeedSet>,
) -> Vec<LexiconEntry> {
    lexicon
        .sorted_entries()
        .into_iter()
        .filter(|e| polarity.is_none_or(|p| e.polarity == p))
        .filter(|e| !exclude_seeds.is_some_and(|s| s.contains_literal(&e.term)))
        .take(k)
        .cloned()
        .collect()
}
