//! Corpus-based induction: four algorithms mapping corpus statistics and
//! seeds to a ranked polar candidate list, plus dev-set size tuning.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lexicon::{Lexicon, LexiconEntry, Polarity};

mod kiritchenko;
mod severyn;
mod takamura;
mod tune;
mod velikovich;

pub use kiritchenko::kiritchenko;
pub use severyn::severyn;
pub use takamura::takamura_ising;
pub use tune::{tune_lexicon_size, TunedLexicon};
pub use velikovich::{path_alphas, velikovich};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CorpusAlgorithm {
    Takamura,
    Velikovich,
    Kiritchenko,
    Severyn,
}

impl CorpusAlgorithm {
    pub const ALL: [CorpusAlgorithm; 4] = [
        CorpusAlgorithm::Takamura,
        CorpusAlgorithm::Velikovich,
        CorpusAlgorithm::Kiritchenko,
        CorpusAlgorithm::Severyn,
    ];

    pub fn id(self) -> &'static str {
        match self {
            CorpusAlgorithm::Takamura => "tkm",
            CorpusAlgorithm::Velikovich => "vel",
            CorpusAlgorithm::Kiritchenko => "kir",
            CorpusAlgorithm::Severyn => "sev",
        }
    }
}

impl FromStr for CorpusAlgorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CorpusAlgorithm::ALL
            .into_iter()
            .find(|a| a.id() == s)
            .ok_or_else(|| {
                Error::InvalidParams(format!(
                    "unknown corpus algorithm `{s}` (expected one of tkm, vel, kir, sev)"
                ))
            })
    }
}

/// Hyper-parameters shared by the corpus algorithms.
#[derive(Debug, Clone)]
pub struct CorpusParams {
    /// Inverse temperature of the mean-field relaxation.
    pub beta: f64,
    /// Relaxation iterations, or training epochs for the feature-ranking
    /// method.
    pub max_iterations: usize,
    pub tolerance: f64,
    /// Path-length bound of the max-product propagation.
    pub t_max: usize,
    /// Negative-mass weight; defaults to the positive:negative mass ratio.
    pub gamma: Option<f64>,
    /// Candidate list cap (per side for the feature-ranking method).
    pub top_k: usize,
    pub neutral_threshold: f64,
    pub pmi_epsilon: f64,
    pub rng_seed: u64,
}

impl CorpusParams {
    pub fn defaults(algorithm: CorpusAlgorithm) -> Self {
        let mut params = CorpusParams {
            beta: 1.0,
            max_iterations: 1000,
            tolerance: 1e-9,
            t_max: 4,
            gamma: None,
            top_k: 1000,
            neutral_threshold: 0.0,
            pmi_epsilon: crate::corpus::DEFAULT_PMI_EPSILON,
            rng_seed: 42,
        };
        match algorithm {
            CorpusAlgorithm::Takamura => params.neutral_threshold = 0.05,
            CorpusAlgorithm::Velikovich => params.neutral_threshold = 0.01,
            CorpusAlgorithm::Kiritchenko => params.neutral_threshold = 0.1,
            CorpusAlgorithm::Severyn => params.max_iterations = 20,
        }
        params
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.beta >= 0.0) {
            return Err(Error::InvalidParams("beta must be >= 0".into()));
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidParams("max_iterations must be >= 1".into()));
        }
        if !(self.tolerance > 0.0) {
            return Err(Error::InvalidParams("tolerance must be > 0".into()));
        }
        if self.t_max == 0 {
            return Err(Error::InvalidParams("t_max must be >= 1".into()));
        }
        if let Some(gamma) = self.gamma {
            if !(gamma > 0.0) {
                return Err(Error::InvalidParams("gamma must be > 0".into()));
            }
        }
        if self.top_k == 0 {
            return Err(Error::InvalidParams("top_k must be >= 1".into()));
        }
        if !(self.neutral_threshold >= 0.0) {
            return Err(Error::InvalidParams("neutral_threshold must be >= 0".into()));
        }
        if !(self.pmi_epsilon > 0.0) {
            return Err(Error::InvalidParams("pmi_epsilon must be > 0".into()));
        }
        Ok(())
    }

    pub fn describe(&self) -> String {
        let gamma = match self.gamma {
            Some(g) => g.to_string(),
            None => "mass-ratio".to_string(),
        };
        format!(
            "beta={} max_iterations={} tolerance={} t_max={} gamma={} top_k={} \
             neutral_threshold={} pmi_epsilon={} rng_seed={}",
            self.beta,
            self.max_iterations,
            self.tolerance,
            self.t_max,
            gamma,
            self.top_k,
            self.neutral_threshold,
            self.pmi_epsilon,
            self.rng_seed
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankedCandidate {
    pub term: String,
    pub polarity: Polarity,
    pub score: f64,
}

/// Polar candidate terms in rank order (score non-increasing, ties by term),
/// never containing seed terms.
#[derive(Debug, Clone)]
pub struct RankedCandidates {
    items: Vec<RankedCandidate>,
    pub provenance: String,
    pub warnings: Vec<String>,
}

impl RankedCandidates {
    /// Sorts, truncates to `top_k`, and wraps the candidate list.
    pub(crate) fn rank(
        mut items: Vec<RankedCandidate>,
        top_k: usize,
        provenance: String,
        warnings: Vec<String>,
    ) -> Self {
        items.sort_by(|a, b| {
            b.score
                .total_cmp(&a.score)
                .then_with(|| a.term.cmp(&b.term))
        });
        items.truncate(top_k);
        RankedCandidates {
            items,
            provenance,
            warnings,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &RankedCandidate> {
        self.items.iter()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&RankedCandidate> {
        self.items.get(index)
    }

    /// The ranked list as a lexicon (the TSV order equals the rank order).
    pub fn to_lexicon(&self) -> Lexicon {
        let mut lexicon = Lexicon::new(self.provenance.clone());
        for c in &self.items {
            lexicon.insert(LexiconEntry {
                term: c.term.clone(),
                polarity: c.polarity,
                score: c.score,
            });
        }
        lexicon
    }

    /// Reads a ranked list back from the lexicon TSV (used by the size-tuning
    /// command).
    pub fn from_lexicon(lexicon: &Lexicon) -> Self {
        let items = lexicon
            .sorted_entries()
            .into_iter()
            .map(|e| RankedCandidate {
                term: e.term.clone(),
                polarity: e.polarity,
                score: e.score,
            })
            .collect();
        RankedCandidates {
            items,
            provenance: lexicon.provenance.clone(),
            warnings: Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algorithm_ids_round_trip() {
        for algo in CorpusAlgorithm::ALL {
            assert_eq!(algo.id().parse::<CorpusAlgorithm>().unwrap(), algo);
        }
        assert!("nope".parse::<CorpusAlgorithm>().is_err());
    }

    #[test]
    fn ranking_orders_and_truncates() {
        let items = vec![
            RankedCandidate {
                term: "b".into(),
                polarity: Polarity::Positive,
                score: 0.5,
            },
            RankedCandidate {
                term: "a".into(),
                polarity: Polarity::Negative,
                score: 0.5,
            },
            RankedCandidate {
                term: "c".into(),
                polarity: Polarity::Positive,
                score: 0.9,
            },
        ];
        let ranked = RankedCandidates::rank(items, 2, "test".into(), vec![]);
        let terms: Vec<&str> = ranked.iter().map(|c| c.term.as_str()).collect();
        assert_eq!(terms, vec!["c", "a"]);
    }

    #[test]
    fn lexicon_round_trip_preserves_rank() {
        let items = vec![
            RankedCandidate {
                term: "x".into(),
                polarity: Polarity::Positive,
                score: 0.75,
            },
            RankedCandidate {
                term: "y".into(),
                polarity: Polarity::Negative,
                score: 0.25,
            },
        ];
        let ranked = RankedCandidates::rank(items, 10, "test".into(), vec![]);
        let back = RankedCandidates::from_lexicon(&ranked.to_lexicon());
        assert_eq!(
            ranked.iter().collect::<Vec<_>>(),
            back.iter().collect::<Vec<_>>()
        );
    }
}
