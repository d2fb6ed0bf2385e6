//! Label propagation over a row-stochastic transition matrix with clamped
//! seed distributions.  Antonym edges route mass through the neighbor's
//! label triple with its positive and negative components exchanged.

use super::{build_lexicon, resolve_seeds, DictParams, InductionResult, SeedNodes};
use crate::error::Result;
use crate::graph::TermGraph;
use crate::lexicon::Polarity;
use crate::seeds::SeedSet;

/// Per-node (positive, negative, neutral) label distributions after
/// propagation.
#[derive(Debug, Clone)]
pub struct LabelPropagationRun {
    pub distributions: Vec<[f64; 3]>,
    pub iterations: usize,
    pub converged: bool,
    pub warnings: Vec<String>,
}

fn one_hot(polarity: Polarity) -> [f64; 3] {
    match polarity {
        Polarity::Positive => [1.0, 0.0, 0.0],
        Polarity::Negative => [0.0, 1.0, 0.0],
        Polarity::Neutral => [0.0, 0.0, 1.0],
    }
}

/// Jacobi iteration of `Y <- T Y` with seed rows re-clamped after every
/// step, until the largest component change drops below `tolerance` or
/// `max_iterations` is reached.
pub fn label_distributions(
    graph: &TermGraph,
    seeds: &SeedSet,
    params: &DictParams,
) -> Result<LabelPropagationRun> {
    params.validate()?;
    let (seed_nodes, warnings) = resolve_seeds(graph, seeds)?;
    let run = propagate(graph, &seed_nodes, params, warnings);
    Ok(run)
}

fn propagate(
    graph: &TermGraph,
    seed_nodes: &SeedNodes,
    params: &DictParams,
    mut warnings: Vec<String>,
) -> LabelPropagationRun {
    let n = graph.node_count();
    let mut y: Vec<[f64; 3]> = vec![[1.0 / 3.0; 3]; n];
    for node in seed_nodes.all() {
        y[node] = one_hot(seed_nodes.polarity_of[&node]);
    }
    let isolated_seeds = seed_nodes
        .all()
        .filter(|&s| graph.neighbors(s).is_empty())
        .count();
    if isolated_seeds > 0 {
        warnings.push(format!(
            "{isolated_seeds} seed(s) have degree 0 and take no part in propagation"
        ));
    }
    let degree: Vec<f64> = (0..n).map(|u| graph.weighted_degree(u)).collect();

    let mut iterations = 0;
    let mut converged = false;
    let mut next = y.clone();
    for _ in 0..params.max_iterations {
        iterations += 1;
        let mut delta = 0.0_f64;
        for u in 0..n {
            if seed_nodes.polarity_of.contains_key(&u) {
                next[u] = y[u];
                continue;
            }
            if graph.neighbors(u).is_empty() {
                next[u] = y[u];
                continue;
            }
            let mut row = [0.0_f64; 3];
            for &(v, w) in graph.neighbors(u) {
                let t = w.abs() / degree[u];
                let lbl = y[v];
                let routed = if w > 0.0 {
                    lbl
                } else {
                    [lbl[1], lbl[0], lbl[2]]
                };
                for c in 0..3 {
                    row[c] += t * routed[c];
                }
            }
            for c in 0..3 {
                delta = delta.max((row[c] - y[u][c]).abs());
            }
            next[u] = row;
        }
        std::mem::swap(&mut y, &mut next);
        if delta < params.tolerance {
            converged = true;
            break;
        }
    }
    LabelPropagationRun {
        distributions: y,
        iterations,
        converged,
        warnings,
    }
}

/// Converts converged distributions to a lexicon: the winning polar class
/// must exceed the runner-up by more than `threshold`, otherwise the node is
/// neutral; the score is the winning mass.
pub fn rao_label_propagation(
    graph: &TermGraph,
    seeds: &SeedSet,
    params: &DictParams,
) -> Result<InductionResult> {
    params.validate()?;
    let (seed_nodes, warnings) = resolve_seeds(graph, seeds)?;
    let run = propagate(graph, &seed_nodes, params, warnings);

    let entries = run
        .distributions
        .iter()
        .enumerate()
        .map(|(node, dist)| {
            let mut order = [0usize, 1, 2];
            order.sort_by(|&a, &b| dist[b].total_cmp(&dist[a]));
            let (best, second) = (order[0], order[1]);
            let margin = dist[best] - dist[second];
            let polarity = match best {
                0 if margin > params.threshold => Polarity::Positive,
                1 if margin > params.threshold => Polarity::Negative,
                _ => Polarity::Neutral,
            };
            (node, polarity, dist[best])
        })
        .collect();
    let lexicon = build_lexicon(
        graph,
        &seed_nodes,
        format!("lblprop({})", params.describe()),
        entries,
    );
    Ok(InductionResult {
        lexicon,
        warnings: run.warnings,
    })
}
