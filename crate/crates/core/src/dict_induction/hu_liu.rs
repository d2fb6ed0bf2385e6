//! Breadth-first polarity propagation: positive edges carry a node's
//! polarity to its neighbors, negative edges carry the flipped polarity.

use std::collections::BTreeMap;

use super::{build_lexicon, resolve_seeds, DictParams, InductionResult};
use crate::error::Result;
use crate::graph::TermGraph;
use crate::lexicon::Polarity;
use crate::seeds::SeedSet;

/// Expands the seeds round by round.  A node first reached in round `r` gets
/// score `1/(r+1)`; conflicting proposals within one round make it neutral;
/// neutral nodes (seeds or conflicts) do not propagate further.  Unreached
/// nodes are absent from the output.
pub fn hu_liu(graph: &TermGraph, seeds: &SeedSet, params: &DictParams) -> Result<InductionResult> {
    params.validate()?;
    let (seed_nodes, warnings) = resolve_seeds(graph, seeds)?;

    let mut assigned: Vec<Option<(Polarity, usize)>> = vec![None; graph.node_count()];
    for node in seed_nodes.all() {
        assigned[node] = Some((seed_nodes.polarity_of[&node], 0));
    }
    let mut frontier: Vec<usize> = seed_nodes.polar().collect();
    frontier.sort_unstable();

    for round in 1..=params.max_iterations {
        if frontier.is_empty() {
            break;
        }
        // None marks a conflict between proposals in this round.
        let mut proposals: BTreeMap<usize, Option<Polarity>> = BTreeMap::new();
        for &node in &frontier {
            let polarity = assigned[node].expect("frontier nodes are assigned").0;
            for &(neighbor, weight) in graph.neighbors(node) {
                if assigned[neighbor].is_some() {
                    continue;
                }
                let proposed = if weight > 0.0 {
                    polarity
                } else {
                    polarity.flipped()
                };
                proposals
                    .entry(neighbor)
                    .and_modify(|slot| {
                        if *slot != Some(proposed) {
                            *slot = None;
                        }
                    })
                    .or_insert(Some(proposed));
            }
        }
        frontier.clear();
        for (node, proposal) in proposals {
            let polarity = proposal.unwrap_or(Polarity::Neutral);
            assigned[node] = Some((polarity, round));
            if polarity.is_polar() {
                frontier.push(node);
            }
        }
    }

    let entries = assigned
        .iter()
        .enumerate()
        .filter_map(|(node, slot)| {
            slot.map(|(polarity, round)| (node, polarity, 1.0 / (round as f64 + 1.0)))
        })
        .collect();
    let lexicon = build_lexicon(
        graph,
        &seed_nodes,
        format!("hl({})", params.describe()),
        entries,
    );
    Ok(InductionResult { lexicon, warnings })
}
