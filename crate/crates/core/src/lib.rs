//! Sentiment lexicon generation toolkit: dictionary- and corpus-based
//! induction algorithms over a lexical taxonomy or raw token corpora, plus an
//! intrinsic trie-matching evaluation harness.

pub mod corpus;
pub mod dict_induction;
pub mod error;
pub mod eval;
pub(crate) mod hinge;
pub mod graph;
pub mod lexicon;
pub mod seeds;
pub mod taxonomy;

pub use error::{Error, Result};
pub use graph::TermGraph;
pub use lexicon::{normalize_term, Lexicon, LexiconEntry, Polarity};
pub use seeds::{SeedEntry, SeedKind, SeedSet};
pub use taxonomy::{EdgePolicy, LexicalGraph, Synset};
