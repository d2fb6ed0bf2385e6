//! Max-product path propagation: a seed's influence on a word is the best
//! multiplicative path weight over paths of bounded length, pruning noisy
//! corpus links by taking maxima instead of sums.

use super::{CorpusParams, RankedCandidate, RankedCandidates};
use crate::dict_induction::resolve_seeds;
use crate::error::{Error, Result};
use crate::graph::TermGraph;
use crate::lexicon::Polarity;
use crate::seeds::SeedSet;

/// `alpha[w] = max` over paths `source -> w` of at most `t_max` positive
/// edges of the product of their weights; `alpha[source] = 1`.  Negative
/// edges are ignored.
pub fn path_alphas(graph: &TermGraph, source: usize, t_max: usize) -> Vec<f64> {
    let n = graph.node_count();
    let mut alpha = vec![0.0_f64; n];
    alpha[source] = 1.0;
    for _ in 0..t_max {
        let mut next = alpha.clone();
        for u in 0..n {
            if alpha[u] <= 0.0 {
                continue;
            }
            for &(v, w) in graph.neighbors(u) {
                if w <= 0.0 {
                    continue;
                }
                let candidate = alpha[u] * w;
                if candidate > next[v] {
                    next[v] = candidate;
                }
            }
        }
        alpha = next;
    }
    alpha
}

/// Sums per-seed alphas into positive and negative masses, weighs the
/// negative mass by `gamma` (defaulting to the positive:negative mass
/// ratio), and ranks non-seed terms by the absolute combined polarity.
pub fn velikovich(
    graph: &TermGraph,
    seeds: &SeedSet,
    params: &CorpusParams,
) -> Result<RankedCandidates> {
    params.validate()?;
    let (seed_nodes, warnings) = resolve_seeds(graph, seeds)?;
    let n = graph.node_count();

    let mut pos = vec![0.0_f64; n];
    let mut neg = vec![0.0_f64; n];
    for &s in &seed_nodes.positive {
        for (w, a) in pos.iter_mut().zip(path_alphas(graph, s, params.t_max)) {
            *w += a;
        }
    }
    for &s in &seed_nodes.negative {
        for (w, a) in neg.iter_mut().zip(path_alphas(graph, s, params.t_max)) {
            *w += a;
        }
    }

    let is_seed: Vec<bool> = (0..n)
        .map(|u| seed_nodes.polarity_of.contains_key(&u))
        .collect();
    let gamma = match params.gamma {
        Some(g) => g,
        None => {
            let pos_mass: f64 = (0..n).filter(|&u| !is_seed[u]).map(|u| pos[u]).sum();
            let neg_mass: f64 = (0..n).filter(|&u| !is_seed[u]).map(|u| neg[u]).sum();
            if neg_mass == 0.0 {
                return Err(Error::DegenerateSeeds(
                    "total negative path mass is zero, mass-ratio gamma is undefined".to_string(),
                ));
            }
            pos_mass / neg_mass
        }
    };

    let polarity_value: Vec<f64> = (0..n).map(|u| pos[u] - gamma * neg[u]).collect();
    let max_abs = (0..n)
        .filter(|&u| !is_seed[u])
        .map(|u| polarity_value[u].abs())
        .fold(0.0_f64, f64::max);
    let mut items = Vec::new();
    if max_abs > 0.0 {
        for u in (0..n).filter(|&u| !is_seed[u]) {
            let score = polarity_value[u].abs() / max_abs;
            if score > params.neutral_threshold {
                items.push(RankedCandidate {
                    term: graph.term(u).to_string(),
                    polarity: if polarity_value[u] > 0.0 {
                        Polarity::Positive
                    } else {
                        Polarity::Negative
                    },
                    score,
                });
            }
        }
    }
    Ok(RankedCandidates::rank(
        items,
        params.top_k,
        format!("vel({})", params.describe()),
        warnings,
    ))
}
