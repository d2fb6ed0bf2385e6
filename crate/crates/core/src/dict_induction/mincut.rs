//! Semi-supervised polarity assignment by two s-t minimum cuts: once with the
//! positive seeds as the source, once with the negative seeds.  A node
//! claimed by exactly one source side gets that polarity; claimed by both or
//! neither it stays neutral.  The output is unranked (every score is 1).
//!
//! Positive edges enter the flow network with their weight as an undirected
//! capacity.  An antonym edge contributes terminal capacity instead: each
//! endpoint whose partner is a seed is attached, with the edge's magnitude,
//! to the terminal holding the class opposite to the partner's label.

use std::collections::BTreeSet;

use super::{build_lexicon, resolve_seeds, DictParams, InductionResult, SeedNodes};
use crate::error::Result;
use crate::graph::TermGraph;
use crate::lexicon::Polarity;
use crate::seeds::SeedSet;

const RESIDUAL_EPS: f64 = 1e-12;

/// Dinic max-flow over f64 capacities.  Edges are stored in reverse pairs:
/// edge `i` and `i ^ 1` invert each other.
pub(crate) struct FlowNetwork {
    pub(crate) to: Vec<usize>,
    pub(crate) cap: Vec<f64>,
    pub(crate) head: Vec<usize>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        FlowNetwork {
            to: Vec::new(),
            cap: Vec::new(),
            head: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    pub(crate) fn add_edge(&mut self, from: usize, to: usize, cap_fwd: f64, cap_rev: f64) {
        let id = self.to.len();
        self.to.push(to);
        self.cap.push(cap_fwd);
        self.head.push(from);
        self.adj[from].push(id);
        self.to.push(from);
        self.cap.push(cap_rev);
        self.head.push(to);
        self.adj[to].push(id + 1);
    }

    fn bfs_levels(&self, source: usize, sink: usize) -> Option<Vec<i32>> {
        let mut level = vec![-1; self.adj.len()];
        level[source] = 0;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if level[v] < 0 && self.cap[e] > RESIDUAL_EPS {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        (level[sink] >= 0).then_some(level)
    }

    fn dfs_push(
        &mut self,
        u: usize,
        sink: usize,
        pushed: f64,
        level: &[i32],
        iter: &mut [usize],
    ) -> f64 {
        if u == sink {
            return pushed;
        }
        while iter[u] < self.adj[u].len() {
            let e = self.adj[u][iter[u]];
            let v = self.to[e];
            if level[v] == level[u] + 1 && self.cap[e] > RESIDUAL_EPS {
                let flow = self.dfs_push(v, sink, pushed.min(self.cap[e]), level, iter);
                if flow > RESIDUAL_EPS {
                    self.cap[e] -= flow;
                    self.cap[e ^ 1] += flow;
                    return flow;
                }
            }
            iter[u] += 1;
        }
        0.0
    }

    pub(crate) fn max_flow(&mut self, source: usize, sink: usize) -> f64 {
        let mut total = 0.0;
        while let Some(level) = self.bfs_levels(source, sink) {
            let mut iter = vec![0usize; self.adj.len()];
            loop {
                let pushed = self.dfs_push(source, sink, f64::INFINITY, &level, &mut iter);
                if pushed <= RESIDUAL_EPS {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    /// Nodes reachable from `source` in the residual graph (the canonical
    /// minimum source side).
    pub(crate) fn source_side(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if !seen[v] && self.cap[e] > RESIDUAL_EPS {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

/// Builds the flow network for one s-t problem.  Node ids `0..n` mirror the
/// graph; `n` is the source, `n + 1` the sink.
pub(crate) fn build_network(
    graph: &TermGraph,
    seeds: &SeedNodes,
    source_class: Polarity,
) -> FlowNetwork {
    let n = graph.node_count();
    let (source, sink) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    for (u, v, w) in graph.edges() {
        if w > 0.0 {
            net.add_edge(u, v, w, w);
        } else {
            for (a, b) in [(u, v), (v, u)] {
                let Some(&partner_label) = seeds.polarity_of.get(&b) else {
                    continue;
                };
                let target = partner_label.flipped();
                if target == source_class {
                    net.add_edge(source, a, -w, 0.0);
                } else {
                    net.add_edge(a, sink, -w, 0.0);
                }
            }
        }
    }
    for (&node, &label) in seeds.polarity_of.iter().collect::<BTreeSet<_>>() {
        if label == source_class {
            net.add_edge(source, node, f64::INFINITY, 0.0);
        } else {
            net.add_edge(node, sink, f64::INFINITY, 0.0);
        }
    }
    net
}

fn claimed(graph: &TermGraph, seeds: &SeedNodes, source_class: Polarity) -> Vec<bool> {
    let n = graph.node_count();
    let mut net = build_network(graph, seeds, source_class);
    net.max_flow(n, n + 1);
    let side = net.source_side(n);
    side[..n].to_vec()
}

/// The source-side node set of one of the two cut problems, by term.
pub fn mincut_partition(
    graph: &TermGraph,
    seeds: &SeedSet,
    source_class: Polarity,
) -> Result<BTreeSet<String>> {
    let (seed_nodes, _) = resolve_seeds(graph, seeds)?;
    Ok(claimed(graph, &seed_nodes, source_class)
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(i, _)| graph.term(i).to_string())
        .collect())
}

pub fn rao_mincut(
    graph: &TermGraph,
    seeds: &SeedSet,
    params: &DictParams,
) -> Result<InductionResult> {
    params.validate()?;
    let (seed_nodes, warnings) = resolve_seeds(graph, seeds)?;
    let pos_side = claimed(graph, &seed_nodes, Polarity::Positive);
    let neg_side = claimed(graph, &seed_nodes, Polarity::Negative);

    let entries = (0..graph.node_count())
        .map(|node| {
            let polarity = match (pos_side[node], neg_side[node]) {
                (true, false) => Polarity::Positive,
                (false, true) => Polarity::Negative,
                _ => Polarity::Neutral,
            };
            (node, polarity, 1.0)
        })
        .collect();
    let lexicon = build_lexicon(
        graph,
        &seed_nodes,
        format!("mincut({})", params.describe()),
        entries,
    );
    Ok(InductionResult { lexicon, warnings })
}
