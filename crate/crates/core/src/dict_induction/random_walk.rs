//! Monte-Carlo hitting times: a node's polarity is decided by whether random
//! walks from it reach positive or negative seeds faster on average.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{build_lexicon, resolve_seeds, DictParams, InductionResult};
use crate::error::Result;
use crate::graph::TermGraph;
use crate::lexicon::Polarity;
use crate::seeds::SeedSet;

/// From every node, runs `walks_per_node` walks (next hop proportional to
/// |w|) that stop at the first polar seed or after `max_walk_length` steps.
/// A walk that never reaches a class contributes `max_walk_length` steps to
/// that class's mean.  A node is polar when the hitting-time means differ by
/// more than `threshold`; the score is the normalized difference.
pub fn awadallah_radwan(
    graph: &TermGraph,
    seeds: &SeedSet,
    params: &DictParams,
) -> Result<InductionResult> {
    params.validate()?;
    let (seed_nodes, warnings) = resolve_seeds(graph, seeds)?;

    let mut seed_class: Vec<Option<Polarity>> = vec![None; graph.node_count()];
    for &s in &seed_nodes.positive {
        seed_class[s] = Some(Polarity::Positive);
    }
    for &s in &seed_nodes.negative {
        seed_class[s] = Some(Polarity::Negative);
    }

    let max_len = params.max_walk_length;
    let mut rng = ChaCha8Rng::seed_from_u64(params.rng_seed);
    let mut entries = Vec::with_capacity(graph.node_count());
    for start in 0..graph.node_count() {
        let mut steps_pos = 0u64;
        let mut steps_neg = 0u64;
        for _ in 0..params.walks_per_node {
            let (steps, hit) = walk(graph, &seed_class, start, max_len, &mut rng);
            match hit {
                Some(Polarity::Positive) => {
                    steps_pos += steps as u64;
                    steps_neg += max_len as u64;
                }
                Some(Polarity::Negative) => {
                    steps_pos += max_len as u64;
                    steps_neg += steps as u64;
                }
                _ => {
                    steps_pos += max_len as u64;
                    steps_neg += max_len as u64;
                }
            }
        }
        let walks = params.walks_per_node as f64;
        let h_pos = steps_pos as f64 / walks;
        let h_neg = steps_neg as f64 / walks;
        let diff = h_pos - h_neg;
        let polarity = if diff.abs() > params.threshold {
            if h_pos < h_neg {
                Polarity::Positive
            } else {
                Polarity::Negative
            }
        } else {
            Polarity::Neutral
        };
        entries.push((start, polarity, diff.abs() / max_len as f64));
    }

    let lexicon = build_lexicon(
        graph,
        &seed_nodes,
        format!("rndwalk({})", params.describe()),
        entries,
    );
    Ok(InductionResult { lexicon, warnings })
}

/// One walk.  The start node counts as an immediate hit when it is itself a
/// polar seed; a dead end exhausts the walk.
fn walk(
    graph: &TermGraph,
    seed_class: &[Option<Polarity>],
    start: usize,
    max_len: usize,
    rng: &mut ChaCha8Rng,
) -> (usize, Option<Polarity>) {
    if let Some(class) = seed_class[start] {
        return (0, Some(class));
    }
    let mut current = start;
    for step in 1..=max_len {
        let neighbors = graph.neighbors(current);
        if neighbors.is_empty() {
            return (max_len, None);
        }
        let total: f64 = neighbors.iter().map(|(_, w)| w.abs()).sum();
        let mut draw = rng.random::<f64>() * total;
        let mut chosen = neighbors[neighbors.len() - 1].0;
        for &(v, w) in neighbors {
            draw -= w.abs();
            if draw <= 0.0 {
                chosen = v;
                break;
            }
        }
        if let Some(class) = seed_class[chosen] {
            return (step, Some(class));
        }
        current = chosen;
    }
    (max_len, None)
}

#[cfg(test)]
mod tests {
    use super::super::test_support::*;
    use super::super::DictAlgorithm;
    use super::*;

    fn params() -> DictParams {
        DictParams::defaults(DictAlgorithm::RandomWalk)
    }

    #[test]
    fn single_edge_to_positive_seed_is_positive() {
        let g = graph(&[("p", "x", 1.0)]);
        let seeds = seed_set(&[("p", Polarity::Positive)]);
        let out = awadallah_radwan(&g, &seeds, &params()).unwrap().lexicon;
        let x = out.get("x").unwrap();
        assert_eq!(x.polarity, Polarity::Positive);
        // Every walk hits at step 1: h_pos = 1, h_neg = max_walk_length.
        let expected = (params().max_walk_length as f64 - 1.0) / params().max_walk_length as f64;
        assert!((x.score - expected).abs() < 1e-12);
    }

    #[test]
    fn symmetric_path_is_neutral() {
        let g = graph(&[("p", "x", 1.0), ("x", "n", 1.0)]);
        let seeds = seed_set(&[("p", Polarity::Positive), ("n", Polarity::Negative)]);
        let mut p = params();
        p.walks_per_node = 2000;
        p.max_walk_length = 3;
        p.rng_seed = 11;
        let out = awadallah_radwan(&g, &seeds, &p).unwrap().lexicon;
        assert_eq!(out.get("x").unwrap().polarity, Polarity::Neutral);
    }

    #[test]
    fn identical_seeds_give_identical_lexicons() {
        let g = graph(&[
            ("p", "x", 1.0),
            ("x", "y", 0.5),
            ("y", "n", 0.75),
            ("x", "n", 0.25),
        ]);
        let seeds = seed_set(&[("p", Polarity::Positive), ("n", Polarity::Negative)]);
        let a = awadallah_radwan(&g, &seeds, &params()).unwrap().lexicon;
        let b = awadallah_radwan(&g, &seeds, &params()).unwrap().lexicon;
        assert_eq!(a.to_tsv(), b.to_tsv());
    }

    #[test]
    fn walks_prefer_heavy_edges() {
        // x's edge to p is 16x heavier than to the chain leading to n.
        let g = graph(&[("p", "x", 1.0), ("x", "y", 0.0625), ("y", "n", 1.0)]);
        let seeds = seed_set(&[("p", Polarity::Positive), ("n", Polarity::Negative)]);
        let out = awadallah_radwan(&g, &seeds, &params()).unwrap().lexicon;
        assert_eq!(out.get("x").unwrap().polarity, Polarity::Positive);
    }

    #[test]
    fn seeds_classify_themselves() {
        let g = graph(&[("p", "n", 1.0)]);
        let seeds = seed_set(&[("p", Polarity::Positive), ("n", Polarity::Negative)]);
        let out = awadallah_radwan(&g, &seeds, &params()).unwrap().lexicon;
        assert_eq!(out.get("p").unwrap().polarity, Polarity::Positive);
        assert_eq!(out.get("n").unwrap().polarity, Polarity::Negative);
        assert_eq!(out.get("p").unwrap().score, 1.0);
    }
}
