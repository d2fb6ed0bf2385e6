//! WordNet-style lexical database loading and the derived lemma-level term
//! graph that the dictionary-based algorithms run on.
//!
//! Input formats (UTF-8, LF, `#` comments):
//!   * `synsets.tsv`:   `id<TAB>pos<TAB>lemma1|lemma2|...<TAB>gloss(optional)`
//!   * `relations.tsv`: `src<TAB>kind<TAB>dst`

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{TermGraph, TermGraphBuilder};
use crate::lexicon::normalize_term;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartOfSpeech {
    Noun,
    Verb,
    Adjective,
    Other,
}

impl FromStr for PartOfSpeech {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "noun" | "n" => Ok(PartOfSpeech::Noun),
            "verb" | "v" => Ok(PartOfSpeech::Verb),
            "adjective" | "adj" | "a" => Ok(PartOfSpeech::Adjective),
            "other" | "x" => Ok(PartOfSpeech::Other),
            other => Err(Error::InvalidTerm(format!(
                "unknown part of speech `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationKind {
    Antonym,
    Hypernym,
    Hyponym,
    Similar,
    Related,
}

impl FromStr for RelationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "antonym" => Ok(RelationKind::Antonym),
            "hypernym" => Ok(RelationKind::Hypernym),
            "hyponym" => Ok(RelationKind::Hyponym),
            "similar" => Ok(RelationKind::Similar),
            "related" => Ok(RelationKind::Related),
            other => Err(Error::InvalidTerm(format!("unknown relation `{other}`"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Synset {
    pub id: String,
    pub pos: PartOfSpeech,
    pub lemmas: Vec<String>,
    pub gloss: Option<String>,
}

#[derive(Debug, Clone)]
pub struct RelationEdge {
    pub src: String,
    pub dst: String,
    pub kind: RelationKind,
}

/// A loaded taxonomy: synsets, relations, and the lemma -> synsets index.
#[derive(Debug, Clone)]
pub struct LexicalGraph {
    synsets: BTreeMap<String, Synset>,
    edges: Vec<RelationEdge>,
    lemma_index: BTreeMap<String, BTreeSet<String>>,
}

impl LexicalGraph {
    pub fn synset(&self, id: &str) -> Option<&Synset> {
        self.synsets.get(id)
    }

    pub fn synsets(&self) -> impl Iterator<Item = &Synset> {
        self.synsets.values()
    }

    pub fn synset_count(&self) -> usize {
        self.synsets.len()
    }

    pub fn relations(&self) -> &[RelationEdge] {
        &self.edges
    }

    pub fn lemma_count(&self) -> usize {
        self.lemma_index.len()
    }

    /// Synset ids containing the given (normalized) lemma.
    pub fn synsets_of(&self, lemma: &str) -> Option<&BTreeSet<String>> {
        self.lemma_index.get(lemma)
    }

    /// Glosses of every synset containing the lemma, in synset-id order.
    pub fn glosses_of(&self, lemma: &str) -> Vec<&str> {
        self.lemma_index
            .get(lemma)
            .into_iter()
            .flatten()
            .filter_map(|id| self.synsets[id].gloss.as_deref())
            .collect()
    }
}

/// Loads and cross-validates the synset and relation files.
pub fn load_taxonomy(synset_path: &Path, relation_path: &Path) -> Result<LexicalGraph> {
    let synset_text = fs::read_to_string(synset_path).map_err(|e| Error::io(synset_path, e))?;
    let synset_file = synset_path.display().to_string();
    let mut synsets: BTreeMap<String, Synset> = BTreeMap::new();
    let mut lemma_index: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();

    for (idx, line) in synset_text.lines().enumerate() {
        let line_no = idx + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 && fields.len() != 4 {
            return Err(Error::Parse {
                path: synset_file.clone(),
                line: line_no,
                msg: format!("expected 3 or 4 tab-separated fields, got {}", fields.len()),
            });
        }
        let id = fields[0].to_string();
        if synsets.contains_key(&id) {
            return Err(Error::Parse {
                path: synset_file.clone(),
                line: line_no,
                msg: format!("duplicate synset id `{id}`"),
            });
        }
        let pos: PartOfSpeech = fields[1].parse().map_err(|e: Error| Error::Parse {
            path: synset_file.clone(),
            line: line_no,
            msg: e.to_string(),
        })?;
        let mut lemmas = Vec::new();
        for raw in fields[2].split('|') {
            let lemma = normalize_term(raw).map_err(|e| Error::Parse {
                path: synset_file.clone(),
                line: line_no,
                msg: e.to_string(),
            })?;
            lemma_index.entry(lemma.clone()).or_default().insert(id.clone());
            lemmas.push(lemma);
        }
        if lemmas.is_empty() {
            return Err(Error::Parse {
                path: synset_file.clone(),
                line: line_no,
                msg: "synset has no lemmas".to_string(),
            });
        }
        let gloss = fields.get(3).map(|g| g.to_string()).filter(|g| !g.is_empty());
        synsets.insert(
            id.clone(),
            Synset {
                id,
                pos,
                lemmas,
                gloss,
            },
        );
    }

    let relation_text =
        fs::read_to_string(relation_path).map_err(|e| Error::io(relation_path, e))?;
    let relation_file = relation_path.display().to_string();
    let mut edges = Vec::new();
    for (idx, line) in relation_text.lines().enumerate() {
        let line_no = idx + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                path: relation_file.clone(),
                line: line_no,
                msg: format!("expected 3 tab-separated fields, got {}", fields.len()),
            });
        }
        let kind: RelationKind = fields[1].parse().map_err(|e: Error| Error::Parse {
            path: relation_file.clone(),
            line: line_no,
            msg: e.to_string(),
        })?;
        for endpoint in [fields[0], fields[2]] {
            if !synsets.contains_key(endpoint) {
                return Err(Error::ReferentialIntegrity {
                    path: relation_file.clone(),
                    line: line_no,
                    id: endpoint.to_string(),
                });
            }
        }
        if kind == RelationKind::Antonym && fields[0] == fields[2] {
            return Err(Error::Parse {
                path: relation_file.clone(),
                line: line_no,
                msg: format!("antonym self-loop on `{}`", fields[0]),
            });
        }
        edges.push(RelationEdge {
            src: fields[0].to_string(),
            dst: fields[2].to_string(),
            kind,
        });
    }

    Ok(LexicalGraph {
        synsets,
        edges,
        lemma_index,
    })
}

/// Weight assigned to each relation kind when deriving the term graph.
#[derive(Debug, Clone, Copy)]
pub struct EdgePolicy {
    pub co_membership: f64,
    pub similar: f64,
    pub hypernym: f64,
    pub hyponym: f64,
    pub related: f64,
    pub antonym: f64,
}

impl Default for EdgePolicy {
    fn default() -> Self {
        EdgePolicy {
            co_membership: 1.0,
            similar: 0.8,
            hypernym: 0.3,
            hyponym: 0.3,
            related: 0.2,
            antonym: -1.0,
        }
    }
}

impl EdgePolicy {
    pub fn validate(&self) -> Result<()> {
        let all = [
            ("co_membership", self.co_membership),
            ("similar", self.similar),
            ("hypernym", self.hypernym),
            ("hyponym", self.hyponym),
            ("related", self.related),
            ("antonym", self.antonym),
        ];
        for (name, w) in all {
            if !w.is_finite() || w.abs() > 1.0 {
                return Err(Error::InvalidPolicy(format!(
                    "{name} weight must lie in [-1, 1], got {w}"
                )));
            }
        }
        if self.antonym >= 0.0 {
            return Err(Error::InvalidPolicy(format!(
                "antonym weight must be negative, got {}",
                self.antonym
            )));
        }
        if self.co_membership <= 0.0 {
            return Err(Error::InvalidPolicy(format!(
                "co-membership weight must be positive, got {}",
                self.co_membership
            )));
        }
        Ok(())
    }

    fn weight(&self, kind: RelationKind) -> f64 {
        match kind {
            RelationKind::Antonym => self.antonym,
            RelationKind::Hypernym => self.hypernym,
            RelationKind::Hyponym => self.hyponym,
            RelationKind::Similar => self.similar,
            RelationKind::Related => self.related,
        }
    }

    pub fn describe(&self) -> String {
        format!(
            "co_membership={} similar={} hypernym={} hyponym={} related={} antonym={}",
            self.co_membership, self.similar, self.hypernym, self.hyponym, self.related,
            self.antonym
        )
    }
}

/// Projects the taxonomy onto a lemma-level signed graph.
///
/// Lemmas sharing a synset are connected with the co-membership weight; lemma
/// pairs across a relation edge get that kind's weight.  Duplicate pairs are
/// resolved by the term-graph rule (largest magnitude, negative on ties).
pub fn derive_term_graph(graph: &LexicalGraph, policy: &EdgePolicy) -> Result<TermGraph> {
    policy.validate()?;
    let mut builder = TermGraphBuilder::new();
    for synset in graph.synsets() {
        for lemma in &synset.lemmas {
            builder.add_node(lemma);
        }
        for (i, a) in synset.lemmas.iter().enumerate() {
            for b in &synset.lemmas[i + 1..] {
                if a != b {
                    builder.add_edge(a, b, policy.co_membership)?;
                }
            }
        }
    }
    for edge in graph.relations() {
        let weight = policy.weight(edge.kind);
        let src = &graph.synsets[&edge.src];
        let dst = &graph.synsets[&edge.dst];
        for a in &src.lemmas {
            for b in &dst.lemmas {
                if a != b {
                    builder.add_edge(a, b, weight)?;
                }
            }
        }
    }
    Ok(builder.build())
}
