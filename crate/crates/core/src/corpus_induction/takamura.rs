//! Mean-field relaxation of an Ising spin assignment over the collocation
//! graph (optionally merged with taxonomy edges).  Seeds are hard-clamped at
//! +1/-1 (0 for neutral); non-seed spins relax under
//! `x_i <- tanh(beta * sum_j w_ij x_j)` with degree-normalized weights.

use super::{CorpusParams, RankedCandidate, RankedCandidates};
use crate::dict_induction::resolve_seeds;
use crate::error::Result;
use crate::graph::TermGraph;
use crate::lexicon::Polarity;
use crate::seeds::SeedSet;

pub fn takamura_ising(
    graph: &TermGraph,
    seeds: &SeedSet,
    params: &CorpusParams,
) -> Result<RankedCandidates> {
    params.validate()?;
    let (seed_nodes, mut warnings) = resolve_seeds(graph, seeds)?;
    let n = graph.node_count();

    let mut clamped = vec![None::<f64>; n];
    for &s in &seed_nodes.positive {
        clamped[s] = Some(1.0);
    }
    for &s in &seed_nodes.negative {
        clamped[s] = Some(-1.0);
    }
    for &s in &seed_nodes.neutral {
        clamped[s] = Some(0.0);
    }

    let degree: Vec<f64> = (0..n).map(|u| graph.weighted_degree(u)).collect();
    let mut x: Vec<f64> = (0..n).map(|u| clamped[u].unwrap_or(0.0)).collect();
    let mut converged = false;
    for _ in 0..params.max_iterations {
        let mut next = x.clone();
        let mut delta = 0.0_f64;
        for u in 0..n {
            if clamped[u].is_some() || graph.neighbors(u).is_empty() {
                continue;
            }
            let mut field = 0.0;
            for &(v, w) in graph.neighbors(u) {
                field += w / (degree[u] * degree[v]).sqrt() * x[v];
            }
            let value = (params.beta * field).tanh();
            delta = delta.max((value - x[u]).abs());
            next[u] = value;
        }
        x = next;
        if delta < params.tolerance {
            converged = true;
            break;
        }
    }
    if !converged {
        warnings.push(format!(
            "mean-field relaxation did not converge within {} iterations; using the last iterate",
            params.max_iterations
        ));
    }

    let items = (0..n)
        .filter(|&u| clamped[u].is_none())
        .filter(|&u| x[u].abs() > params.neutral_threshold)
        .map(|u| RankedCandidate {
            term: graph.term(u).to_string(),
            polarity: if x[u] > 0.0 {
                Polarity::Positive
            } else {
                Polarity::Negative
            },
            score: x[u].abs(),
        })
        .collect();
    Ok(RankedCandidates::rank(
        items,
        params.top_k,
        format!("tkm({})", params.describe()),
        warnings,
    ))
}
