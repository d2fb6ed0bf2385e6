//! Classifier-committee induction: seed sets are expanded over the graph for
//! a fixed number of rounds, every term is represented as a bag-of-terms
//! vector built from its glosses and neighbors, and a committee of one
//! centroid classifier and one hinge-loss linear classifier per one-vs-rest
//! polar task votes on the final label.

use std::collections::{BTreeSet, HashMap};

use super::{build_lexicon, resolve_seeds, DictParams, InductionResult, SeedNodes};
use crate::error::{Error, Result};
use crate::graph::TermGraph;
use crate::hinge::{dot, l2_normalize, train_hinge, SparseVec};
use crate::lexicon::Polarity;
use crate::seeds::SeedSet;
use crate::taxonomy::LexicalGraph;

const HINGE_EPOCHS: usize = 30;
const HINGE_LAMBDA: f64 = 0.01;

/// Expands the three seed sets for `rounds` rounds: positive edges keep the
/// class, negative edges swap positive and negative, and the neutral set
/// grows over positive edges only.
pub(crate) fn expand_training_sets(
    graph: &TermGraph,
    seeds: &SeedNodes,
    rounds: usize,
) -> [BTreeSet<usize>; 3] {
    let mut sets: [BTreeSet<usize>; 3] = [
        seeds.positive.iter().copied().collect(),
        seeds.negative.iter().copied().collect(),
        seeds.neutral.iter().copied().collect(),
    ];
    for _ in 0..rounds {
        let mut additions: [BTreeSet<usize>; 3] = Default::default();
        for (si, set) in sets.iter().enumerate() {
            for &node in set {
                for &(neighbor, weight) in graph.neighbors(node) {
                    let target = if weight > 0.0 {
                        si
                    } else {
                        match si {
                            0 => 1,
                            1 => 0,
                            _ => continue, // neutral does not cross antonyms
                        }
                    };
                    additions[target].insert(neighbor);
                }
            }
        }
        for (set, add) in sets.iter_mut().zip(additions) {
            set.extend(add);
        }
    }
    sets
}

fn mean_vector(members: &BTreeSet<usize>, vectors: &[SparseVec], dim: usize) -> Vec<f64> {
    let mut centroid = vec![0.0_f64; dim];
    if members.is_empty() {
        return centroid;
    }
    for &node in members {
        for &(i, v) in &vectors[node] {
            centroid[i as usize] += v;
        }
    }
    for c in &mut centroid {
        *c /= members.len() as f64;
    }
    centroid
}

fn squared_distance(x: &SparseVec, centroid: &[f64]) -> f64 {
    // ||x||^2 - 2 x.c + ||c||^2 with unit-norm x.
    let c_norm: f64 = centroid.iter().map(|v| v * v).sum();
    1.0 - 2.0 * dot(centroid, x) + c_norm
}

/// Committee vote for one candidate: per polar task two member margins, plus
/// centroid distances for the tie-break.  Returns the label and the raw
/// (unnormalized) score.
fn decide(m_pos: [f64; 2], m_neg: [f64; 2], d_pos: f64, d_neg: f64) -> (Polarity, f64) {
    let votes_pos = m_pos.iter().filter(|m| **m > 0.0).count();
    let votes_neg = m_neg.iter().filter(|m| **m > 0.0).count();
    let mean = |m: [f64; 2]| (m[0] + m[1]) / 2.0;
    if votes_pos > votes_neg {
        return (Polarity::Positive, mean(m_pos).max(0.0));
    }
    if votes_neg > votes_pos {
        return (Polarity::Negative, mean(m_neg).max(0.0));
    }
    if votes_pos == 0 {
        return (Polarity::Neutral, 0.0);
    }
    if d_pos < d_neg {
        (Polarity::Positive, mean(m_pos).max(0.0))
    } else if d_neg < d_pos {
        (Polarity::Negative, mean(m_neg).max(0.0))
    } else {
        (Polarity::Neutral, 0.0)
    }
}

/// The committee method.  Needs the taxonomy for its glosses in addition to
/// the derived term graph.
pub fn esuli_sebastiani(
    graph: &TermGraph,
    taxonomy: &LexicalGraph,
    seeds: &SeedSet,
    params: &DictParams,
) -> Result<InductionResult> {
    params.validate()?;
    let (seed_nodes, mut warnings) = resolve_seeds(graph, seeds)?;
    let n = graph.node_count();

    // Bag-of-terms vectors: gloss tokens plus neighbor terms.
    let mut feature_ids: HashMap<String, u32> = HashMap::new();
    let mut vectors: Vec<SparseVec> = Vec::with_capacity(n);
    let mut with_gloss = 0usize;
    for node in 0..n {
        let term = graph.term(node);
        let mut counts: HashMap<u32, f64> = HashMap::new();
        let glosses = taxonomy.glosses_of(term);
        if !glosses.is_empty() {
            with_gloss += 1;
        }
        for gloss in glosses {
            for raw in gloss.split_whitespace() {
                let Ok(token) = crate::lexicon::normalize_term(raw) else {
                    continue;
                };
                let next_id = feature_ids.len() as u32;
                let id = *feature_ids.entry(token).or_insert(next_id);
                *counts.entry(id).or_insert(0.0) += 1.0;
            }
        }
        for &(neighbor, _) in graph.neighbors(node) {
            let next_id = feature_ids.len() as u32;
            let id = *feature_ids
                .entry(graph.term(neighbor).to_string())
                .or_insert(next_id);
            *counts.entry(id).or_insert(0.0) += 1.0;
        }
        let mut vec: SparseVec = counts.into_iter().collect();
        vec.sort_unstable_by_key(|&(i, _)| i);
        l2_normalize(&mut vec);
        vectors.push(vec);
    }
    if vectors.iter().all(|v| v.is_empty()) {
        return Err(Error::DegenerateFeatures);
    }
    if with_gloss * 2 < n {
        warnings.push(format!(
            "glosses cover only {with_gloss}/{n} candidate terms"
        ));
    }
    let dim = feature_ids.len();

    let sets = expand_training_sets(graph, &seed_nodes, params.expansion_rounds);

    // One-vs-rest members per polar task.
    let centroids: Vec<Vec<f64>> = sets.iter().map(|s| mean_vector(s, &vectors, dim)).collect();
    let rest_centroid = |task: usize| -> Vec<f64> {
        let rest: BTreeSet<usize> = sets
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != task)
            .flat_map(|(_, s)| s.iter().copied())
            .collect();
        mean_vector(&rest, &vectors, dim)
    };
    let rest_centroids = [rest_centroid(0), rest_centroid(1)];

    let mut hinge_models = Vec::new();
    for task in 0..2 {
        let own: &BTreeSet<usize> = &sets[task];
        let rest: BTreeSet<usize> = sets
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != task)
            .flat_map(|(_, s)| s.iter().copied())
            .collect();
        let mut samples: Vec<(SparseVec, f64)> = Vec::new();
        for &node in own.difference(&rest) {
            samples.push((vectors[node].clone(), 1.0));
        }
        for &node in rest.difference(own) {
            samples.push((vectors[node].clone(), -1.0));
        }
        hinge_models.push(train_hinge(
            &samples,
            dim,
            HINGE_EPOCHS,
            HINGE_LAMBDA,
            params.rng_seed.wrapping_add(task as u64),
        ));
    }

    let mut raw: Vec<(Polarity, f64)> = Vec::with_capacity(n);
    for node in 0..n {
        let x = &vectors[node];
        let margins = |task: usize| -> [f64; 2] {
            [
                dot(&centroids[task], x) - dot(&rest_centroids[task], x),
                hinge_models[task].margin(x),
            ]
        };
        let d_pos = squared_distance(x, &centroids[0]);
        let d_neg = squared_distance(x, &centroids[1]);
        raw.push(decide(margins(0), margins(1), d_pos, d_neg));
    }
    let max_raw = raw.iter().map(|(_, s)| *s).fold(0.0_f64, f64::max);
    let entries = raw
        .into_iter()
        .enumerate()
        .map(|(node, (polarity, score))| {
            let normalized = if max_raw > 0.0 { score / max_raw } else { 0.0 };
            (node, polarity, normalized)
        })
        .collect();

    let lexicon = build_lexicon(
        graph,
        &seed_nodes,
        format!("es({})", params.describe()),
        entries,
    );
    Ok(InductionResult { lexicon, warnings })
}
