//! Seed sets: the small hand-labeled term lists that bootstrap every
//! induction algorithm.
//!
//! Seed files share the lexicon TSV layout with an optional fourth column
//! `pattern` that marks the first field as a token-level regular expression
//! instead of a literal term.  Patterns are matched against whole tokens.

use std::fmt;
use std::fs;
use std::path::Path;

use regex::Regex;

use crate::error::{Error, Result};
use crate::lexicon::{normalize_term, Lexicon, LexiconEntry, Polarity};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedKind {
    Literal,
    Pattern,
}

#[derive(Debug, Clone)]
pub struct SeedEntry {
    /// Normalized term for literals, the raw expression for patterns.
    pub text: String,
    pub polarity: Polarity,
    pub kind: SeedKind,
    pub score: f64,
    regex: Option<Regex>,
}

impl SeedEntry {
    pub fn literal(term: &str, polarity: Polarity, score: f64) -> Result<Self> {
        Ok(SeedEntry {
            text: normalize_term(term)?,
            polarity,
            kind: SeedKind::Literal,
            score,
            regex: None,
        })
    }

    pub fn pattern(pattern: &str, polarity: Polarity, score: f64) -> Result<Self> {
        // Anchor so the expression classifies whole tokens.
        let regex = Regex::new(&format!("^(?:{pattern})$")).map_err(|e| Error::Pattern {
            pattern: pattern.to_string(),
            message: e.to_string(),
        })?;
        Ok(SeedEntry {
            text: pattern.to_string(),
            polarity,
            kind: SeedKind::Pattern,
            score,
            regex: Some(regex),
        })
    }

    /// Whole-token match for pattern seeds; literals never match here.
    pub fn matches_token(&self, token: &str) -> bool {
        self.regex.as_ref().is_some_and(|r| r.is_match(token))
    }
}

impl fmt::Display for SeedEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.text, self.polarity)
    }
}

/// An ordered list of labeled seed terms and patterns.
#[derive(Debug, Clone, Default)]
pub struct SeedSet {
    entries: Vec<SeedEntry>,
}

impl SeedSet {
    /// Builds a seed set, requiring at least one non-neutral entry.
    pub fn new(entries: Vec<SeedEntry>) -> Result<Self> {
        if !entries.iter().any(|e| e.polarity.is_polar()) {
            return Err(Error::InvalidParams(
                "seed set contains no polar entries".to_string(),
            ));
        }
        Ok(SeedSet { entries })
    }

    pub fn iter(&self) -> impl Iterator<Item = &SeedEntry> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Literal seeds only, in file order.
    pub fn literals(&self) -> impl Iterator<Item = &SeedEntry> {
        self.entries.iter().filter(|e| e.kind == SeedKind::Literal)
    }

    /// Pattern seeds only, in file order.
    pub fn patterns(&self) -> impl Iterator<Item = &SeedEntry> {
        self.entries.iter().filter(|e| e.kind == SeedKind::Pattern)
    }

    pub fn contains_literal(&self, term: &str) -> bool {
        self.literals().any(|e| e.text == term)
    }

    /// A copy with positive and negative labels exchanged.
    pub fn flipped(&self) -> SeedSet {
        SeedSet {
            entries: self
                .entries
                .iter()
                .map(|e| SeedEntry {
                    polarity: e.polarity.flipped(),
                    ..e.clone()
                })
                .collect(),
        }
    }

    /// Literal seeds as a lexicon (pattern seeds have no term form and are
    /// skipped).
    pub fn to_lexicon(&self, provenance: impl Into<String>) -> Lexicon {
        let mut lexicon = Lexicon::new(provenance);
        for seed in self.literals() {
            lexicon.insert(LexiconEntry {
                term: seed.text.clone(),
                polarity: seed.polarity,
                score: seed.score,
            });
        }
        lexicon
    }

    /// Parses the seed TSV format.
    pub fn from_tsv(text: &str, path: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 && fields.len() != 4 {
                return Err(Error::Parse {
                    path: path.to_string(),
                    line: line_no,
                    msg: format!("expected 3 or 4 tab-separated fields, got {}", fields.len()),
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
            let entry = match fields.get(3) {
                None => SeedEntry::literal(fields[0], polarity, score),
                Some(&"pattern") => SeedEntry::pattern(fields[0], polarity, score),
                Some(other) => Err(Error::Parse {
                    path: path.to_string(),
                    line: line_no,
                    msg: format!("unknown seed kind `{other}` (expected `pattern`)"),
                }),
            }
            .map_err(|e| match e {
                Error::Parse { .. } => e,
                other => Error::Parse {
                    path: path.to_string(),
                    line: line_no,
                    msg: other.to_string(),
                },
            })?;
            entries.push(entry);
        }
        SeedSet::new(entries)
    }

    pub fn read_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        SeedSet::from_tsv(&text, &path.display().to_string())
    }
}
