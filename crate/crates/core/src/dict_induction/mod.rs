//! Dictionary-based induction: six algorithm families mapping
//! (term graph, seed set, parameters) to a ternary polarity lexicon.
//!
//! Every algorithm shares the same contract: literal seeds are resolved to
//! graph nodes (absent ones are skipped with a warning), at least one polar
//! seed must resolve, and every resolved seed appears in the output lexicon
//! with its seed polarity.

use std::collections::HashMap;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::TermGraph;
use crate::lexicon::{Lexicon, LexiconEntry, Polarity};
use crate::seeds::{SeedKind, SeedSet};
use crate::taxonomy::LexicalGraph;

mod blair_goldensohn;
mod esuli_sebastiani;
mod hu_liu;
mod kim_hovy;
mod label_propagation;
mod mincut;
mod random_walk;

pub use blair_goldensohn::blair_goldensohn;
pub use esuli_sebastiani::esuli_sebastiani;
pub use hu_liu::hu_liu;
pub use kim_hovy::kim_hovy;
pub use label_propagation::{label_distributions, rao_label_propagation, LabelPropagationRun};
pub use mincut::{mincut_partition, rao_mincut};
pub use random_walk::awadallah_radwan;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DictAlgorithm {
    HuLiu,
    BlairGoldensohn,
    KimHovy,
    EsuliSebastiani,
    MinCut,
    LabelPropagation,
    RandomWalk,
}

impl DictAlgorithm {
    pub const ALL: [DictAlgorithm; 7] = [
        DictAlgorithm::HuLiu,
        DictAlgorithm::BlairGoldensohn,
        DictAlgorithm::KimHovy,
        DictAlgorithm::EsuliSebastiani,
        DictAlgorithm::MinCut,
        DictAlgorithm::LabelPropagation,
        DictAlgorithm::RandomWalk,
    ];

    pub fn id(self) -> &'static str {
        match self {
            DictAlgorithm::HuLiu => "hl",
            DictAlgorithm::BlairGoldensohn => "bg",
            DictAlgorithm::KimHovy => "kh",
            DictAlgorithm::EsuliSebastiani => "es",
            DictAlgorithm::MinCut => "mincut",
            DictAlgorithm::LabelPropagation => "lblprop",
            DictAlgorithm::RandomWalk => "rndwalk",
        }
    }
}

impl FromStr for DictAlgorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DictAlgorithm::ALL
            .into_iter()
            .find(|a| a.id() == s)
            .ok_or_else(|| {
                Error::InvalidParams(format!(
                    "unknown dictionary algorithm `{s}` (expected one of hl, bg, kh, es, mincut, lblprop, rndwalk)"
                ))
            })
    }
}

/// Hyper-parameters shared by the dictionary algorithms.  Each algorithm
/// reads the fields relevant to it.
#[derive(Debug, Clone)]
pub struct DictParams {
    pub max_iterations: usize,
    /// Neutral-zone threshold on the algorithm's decision value.
    pub threshold: f64,
    pub tolerance: f64,
    pub rng_seed: u64,
    pub walks_per_node: usize,
    pub max_walk_length: usize,
    pub expansion_rounds: usize,
    /// (positive, negative, neutral) class priors; uniform when absent.
    pub class_priors: Option<[f64; 3]>,
}

impl DictParams {
    pub fn defaults(algorithm: DictAlgorithm) -> Self {
        let mut params = DictParams {
            max_iterations: 5,
            threshold: 0.0,
            tolerance: 1e-6,
            rng_seed: 42,
            walks_per_node: 1000,
            max_walk_length: 10,
            expansion_rounds: 2,
            class_priors: None,
        };
        match algorithm {
            DictAlgorithm::LabelPropagation => {
                params.max_iterations = 200;
                params.threshold = 0.05;
            }
            DictAlgorithm::RandomWalk => params.threshold = 0.1,
            _ => {}
        }
        params
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_iterations == 0 {
            return Err(Error::InvalidParams("max_iterations must be >= 1".into()));
        }
        if !(self.threshold >= 0.0) {
            return Err(Error::InvalidParams("threshold must be >= 0".into()));
        }
        if !(self.tolerance > 0.0) {
            return Err(Error::InvalidParams("tolerance must be > 0".into()));
        }
        if self.walks_per_node == 0 || self.max_walk_length == 0 {
            return Err(Error::InvalidParams(
                "walks_per_node and max_walk_length must be >= 1".into(),
            ));
        }
        if self.expansion_rounds == 0 {
            return Err(Error::InvalidParams("expansion_rounds must be >= 1".into()));
        }
        if let Some(priors) = self.class_priors {
            if priors.iter().any(|p| !(*p >= 0.0)) {
                return Err(Error::InvalidParams("class priors must be >= 0".into()));
            }
            let sum: f64 = priors.iter().sum();
            if (sum - 1.0).abs() > 1e-9 {
                return Err(Error::InvalidParams(format!(
                    "class priors must sum to 1, got {sum}"
                )));
            }
        }
        Ok(())
    }

    pub fn describe(&self) -> String {
        let priors = match self.class_priors {
            Some([p, n, u]) => format!("{p}/{n}/{u}"),
            None => "uniform".to_string(),
        };
        format!(
            "max_iterations={} threshold={} tolerance={} rng_seed={} walks_per_node={} \
             max_walk_length={} expansion_rounds={} priors={}",
            self.max_iterations,
            self.threshold,
            self.tolerance,
            self.rng_seed,
            self.walks_per_node,
            self.max_walk_length,
            self.expansion_rounds,
            priors
        )
    }
}

/// A produced lexicon plus any non-fatal diagnostics.
#[derive(Debug, Clone)]
pub struct InductionResult {
    pub lexicon: Lexicon,
    pub warnings: Vec<String>,
}

/// Literal seeds resolved against the graph's node set.
#[derive(Debug, Clone, Default)]
pub(crate) struct SeedNodes {
    pub positive: Vec<usize>,
    pub negative: Vec<usize>,
    pub neutral: Vec<usize>,
    pub polarity_of: HashMap<usize, Polarity>,
}

impl SeedNodes {
    pub fn polar(&self) -> impl Iterator<Item = usize> + '_ {
        self.positive.iter().chain(&self.negative).copied()
    }

    pub fn all(&self) -> impl Iterator<Item = usize> + '_ {
        self.polar().chain(self.neutral.iter().copied())
    }
}

pub(crate) fn resolve_seeds(
    graph: &TermGraph,
    seeds: &SeedSet,
) -> Result<(SeedNodes, Vec<String>)> {
    let mut nodes = SeedNodes::default();
    let mut warnings = Vec::new();
    let mut skipped = 0usize;
    let patterns = seeds.patterns().count();
    if patterns > 0 {
        warnings.push(format!(
            "{patterns} pattern seed(s) ignored: dictionary induction uses literal seeds only"
        ));
    }
    for seed in seeds.iter().filter(|s| s.kind == SeedKind::Literal) {
        let Some(node) = graph.node(&seed.text) else {
            skipped += 1;
            continue;
        };
        match nodes.polarity_of.get(&node) {
            Some(existing) if *existing != seed.polarity => {
                return Err(Error::InconsistentSeeds(format!(
                    "`{}` is labeled both {existing} and {}",
                    seed.text, seed.polarity
                )));
            }
            Some(_) => continue,
            None => {}
        }
        nodes.polarity_of.insert(node, seed.polarity);
        match seed.polarity {
            Polarity::Positive => nodes.positive.push(node),
            Polarity::Negative => nodes.negative.push(node),
            Polarity::Neutral => nodes.neutral.push(node),
        }
    }
    if skipped > 0 {
        warnings.push(format!("{skipped} literal seed(s) absent from the graph"));
    }
    if nodes.positive.is_empty() && nodes.negative.is_empty() {
        return Err(Error::EmptySeeds);
    }
    for list in [&mut nodes.positive, &mut nodes.negative, &mut nodes.neutral] {
        list.sort_unstable();
    }
    Ok((nodes, warnings))
}

/// Builds the output lexicon from per-node classifications, forcing every
/// resolved seed to its seed polarity.
pub(crate) fn build_lexicon(
    graph: &TermGraph,
    seeds: &SeedNodes,
    provenance: String,
    entries: Vec<(usize, Polarity, f64)>,
) -> Lexicon {
    let mut by_node: HashMap<usize, (Polarity, f64)> = entries
        .into_iter()
        .map(|(node, pol, score)| (node, (pol, score)))
        .collect();
    for (&node, &polarity) in &seeds.polarity_of {
        match by_node.get_mut(&node) {
            Some(slot) => slot.0 = polarity,
            None => {
                by_node.insert(node, (polarity, 1.0));
            }
        }
    }
    let mut lexicon = Lexicon::new(provenance);
    for (node, (polarity, score)) in by_node {
        lexicon.insert(LexiconEntry {
            term: graph.term(node).to_string(),
            polarity,
            score,
        });
    }
    lexicon
}

/// Runs one dictionary algorithm by id.  The taxonomy is needed only by the
/// classifier-committee method for its glosses.
pub fn induce(
    algorithm: DictAlgorithm,
    graph: &TermGraph,
    taxonomy: &LexicalGraph,
    seeds: &SeedSet,
    params: &DictParams,
) -> Result<InductionResult> {
    match algorithm {
        DictAlgorithm::HuLiu => hu_liu(graph, seeds, params),
        DictAlgorithm::BlairGoldensohn => blair_goldensohn(graph, seeds, params),
        DictAlgorithm::KimHovy => kim_hovy(graph, seeds, params),
        DictAlgorithm::EsuliSebastiani => esuli_sebastiani(graph, taxonomy, seeds, params),
        DictAlgorithm::MinCut => rao_mincut(graph, seeds, params),
        DictAlgorithm::LabelPropagation => rao_label_propagation(graph, seeds, params),
        DictAlgorithm::RandomWalk => awadallah_radwan(graph, seeds, params),
    }
}
