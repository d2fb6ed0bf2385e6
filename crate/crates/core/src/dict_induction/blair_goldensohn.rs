//! Score-vector propagation: repeated multiplication of a seed score vector
//! with the signed adjacency matrix.

use super::{build_lexicon, resolve_seeds, DictParams, InductionResult};
use crate::error::{Error, Result};
use crate::graph::TermGraph;
use crate::lexicon::Polarity;
use crate::seeds::SeedSet;

/// Runs `max_iterations` steps of `v <- A v` from the seed vector (+1/-1 for
/// polar seeds, 0 elsewhere).  After each step neutral-seed entries are
/// re-zeroed and polar-seed signs are re-clamped while magnitudes may grow.
/// Final polarity is `sign(v)` outside the `threshold` neutral zone; the
/// score is `ln(1 + |v|)`.
pub fn blair_goldensohn(
    graph: &TermGraph,
    seeds: &SeedSet,
    params: &DictParams,
) -> Result<InductionResult> {
    params.validate()?;
    let (seed_nodes, warnings) = resolve_seeds(graph, seeds)?;
    let scores = propagate(graph, &seed_nodes, params)?;

    let entries = scores
        .iter()
        .enumerate()
        .map(|(node, &v)| {
            let polarity = if v.abs() > params.threshold {
                if v > 0.0 {
                    Polarity::Positive
                } else {
                    Polarity::Negative
                }
            } else {
                Polarity::Neutral
            };
            (node, polarity, (1.0 + v.abs()).ln())
        })
        .collect();
    let lexicon = build_lexicon(
        graph,
        &seed_nodes,
        format!("bg({})", params.describe()),
        entries,
    );
    Ok(InductionResult { lexicon, warnings })
}

fn propagate(
    graph: &TermGraph,
    seeds: &super::SeedNodes,
    params: &DictParams,
) -> Result<Vec<f64>> {
    let mut v = vec![0.0_f64; graph.node_count()];
    for &s in &seeds.positive {
        v[s] = 1.0;
    }
    for &s in &seeds.negative {
        v[s] = -1.0;
    }
    for step in 1..=params.max_iterations {
        let mut next = vec![0.0_f64; v.len()];
        for (node, slot) in next.iter_mut().enumerate() {
            for &(neighbor, weight) in graph.neighbors(node) {
                *slot += weight * v[neighbor];
            }
        }
        for &s in &seeds.neutral {
            next[s] = 0.0;
        }
        for &s in &seeds.positive {
            next[s] = next[s].abs();
        }
        for &s in &seeds.negative {
            next[s] = -next[s].abs();
        }
        if next.iter().any(|x| !x.is_finite()) {
            return Err(Error::NumericOverflow { iterations: step });
        }
        v = next;
    }
    Ok(v)
}
