//! Naive-Bayes-style polarity assignment: class prior times the smoothed
//! likelihood of a word's neighbors appearing in the class membership bags.

use std::collections::BTreeSet;

use super::{build_lexicon, resolve_seeds, DictParams, InductionResult};
use crate::error::Result;
use crate::graph::TermGraph;
use crate::lexicon::Polarity;
use crate::seeds::SeedSet;

const CLASSES: [Polarity; 3] = [Polarity::Positive, Polarity::Negative, Polarity::Neutral];

/// Ties between the best classes resolve to neutral.
const TIE_EPSILON: f64 = 1e-12;

/// For each candidate `w`, computes `P(c) * prod_{n in nbrs+(w)} P(n | c)`
/// with add-one smoothing over the graph vocabulary, where the class bags are
/// the seeds expanded by one positive-edge hop.  The winning class must beat
/// the runner-up; exact ties are neutral.  The score is the normalized
/// posterior of the winning class.
pub fn kim_hovy(graph: &TermGraph, seeds: &SeedSet, params: &DictParams) -> Result<InductionResult> {
    params.validate()?;
    let (seed_nodes, warnings) = resolve_seeds(graph, seeds)?;

    let mut bags: [BTreeSet<usize>; 3] = Default::default();
    for (ci, class) in CLASSES.iter().enumerate() {
        let members: &[usize] = match class {
            Polarity::Positive => &seed_nodes.positive,
            Polarity::Negative => &seed_nodes.negative,
            Polarity::Neutral => &seed_nodes.neutral,
        };
        for &seed in members {
            bags[ci].insert(seed);
            for &(neighbor, weight) in graph.neighbors(seed) {
                if weight > 0.0 {
                    bags[ci].insert(neighbor);
                }
            }
        }
    }

    let priors = params.class_priors.unwrap_or([1.0 / 3.0; 3]);
    let vocab = graph.node_count() as f64;
    let mut entries = Vec::with_capacity(graph.node_count());
    for node in 0..graph.node_count() {
        let mut log_scores = [0.0_f64; 3];
        for ci in 0..3 {
            let mut ls = priors[ci].ln();
            let denominator = bags[ci].len() as f64 + vocab;
            for &(neighbor, weight) in graph.neighbors(node) {
                if weight > 0.0 {
                    let count = u64::from(bags[ci].contains(&neighbor));
                    ls += ((count + 1) as f64 / denominator).ln();
                }
            }
            log_scores[ci] = ls;
        }
        let mut order = [0usize, 1, 2];
        order.sort_by(|&a, &b| log_scores[b].total_cmp(&log_scores[a]));
        let (best, second) = (order[0], order[1]);
        let tie = (log_scores[best] - log_scores[second]).abs() <= TIE_EPSILON;
        let polarity = if tie { Polarity::Neutral } else { CLASSES[best] };
        // Normalized posterior of the winning class.
        let max = log_scores[best];
        let z: f64 = log_scores.iter().map(|ls| (ls - max).exp()).sum();
        let score = (log_scores[best] - max).exp() / z;
        entries.push((node, polarity, score));
    }

    let lexicon = build_lexicon(
        graph,
        &seed_nodes,
        format!("kh({})", params.describe()),
        entries,
    );
    Ok(InductionResult { lexicon, warnings })
}
