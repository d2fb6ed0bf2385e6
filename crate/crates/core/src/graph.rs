//! Signed, weighted, undirected term graph.
//!
//! One structure backs both graph flavors used by the induction algorithms:
//! the taxonomy-derived graph (signed weights in [-1, 1], negative only from
//! antonymy) and the corpus collocation graph (positive weights in (0, 1],
//! optionally merged with taxonomy edges).  Nodes are normalized terms; node
//! indices are assigned in lexicographic term order so that identical inputs
//! always produce identical graphs.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct TermGraph {
    terms: Vec<String>,
    index: HashMap<String, usize>,
    adjacency: Vec<Vec<(usize, f64)>>,
    edge_count: usize,
}

impl TermGraph {
    pub fn node_count(&self) -> usize {
        self.terms.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn term(&self, node: usize) -> &str {
        &self.terms[node]
    }

    pub fn terms(&self) -> &[String] {
        &self.terms
    }

    pub fn node(&self, term: &str) -> Option<usize> {
        self.index.get(term).copied()
    }

    /// Neighbors of `node` with edge weights, sorted by neighbor index.
    pub fn neighbors(&self, node: usize) -> &[(usize, f64)] {
        &self.adjacency[node]
    }

    /// Sum of |w| over incident edges.
    pub fn weighted_degree(&self, node: usize) -> f64 {
        self.adjacency[node].iter().map(|(_, w)| w.abs()).sum()
    }

    /// Every edge once, with `u < v`, in (u, v) order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .filter(move |(v, _)| u < *v)
                .map(move |&(v, w)| (u, v, w))
        })
    }

    /// Canonical line-per-edge rendering used for determinism checks.
    pub fn canonical_edges(&self) -> String {
        let mut out = String::new();
        for (u, v, w) in self.edges() {
            out.push_str(&format!("{}\t{}\t{:.12}\n", self.terms[u], self.terms[v], w));
        }
        out
    }
}

/// Accumulates edges and resolves duplicates before freezing a graph.
///
/// When several derivations produce an edge for the same unordered pair, the
/// weight with the largest magnitude wins; on a magnitude tie the negative
/// edge is kept.
#[derive(Debug, Default)]
pub struct TermGraphBuilder {
    nodes: BTreeMap<String, ()>,
    edges: BTreeMap<(String, String), f64>,
}

impl TermGraphBuilder {
    pub fn new() -> Self {
        TermGraphBuilder::default()
    }

    pub fn add_node(&mut self, term: &str) {
        self.nodes.entry(term.to_string()).or_insert(());
    }

    /// Adds an undirected edge.  Zero weights are ignored; self-loops are
    /// rejected.
    pub fn add_edge(&mut self, u: &str, v: &str, weight: f64) -> Result<()> {
        if !weight.is_finite() || weight.abs() > 1.0 {
            return Err(Error::InvalidParams(format!(
                "edge weight must lie in [-1, 1], got {weight}"
            )));
        }
        if u == v {
            return Err(Error::InvalidParams(format!("self-loop on `{u}`")));
        }
        self.add_node(u);
        self.add_node(v);
        if weight == 0.0 {
            return Ok(());
        }
        let key = if u < v {
            (u.to_string(), v.to_string())
        } else {
            (v.to_string(), u.to_string())
        };
        self.edges
            .entry(key)
            .and_modify(|existing| {
                let stronger = weight.abs() > existing.abs();
                let tie_negative = weight.abs() == existing.abs() && weight < *existing;
                if stronger || tie_negative {
                    *existing = weight;
                }
            })
            .or_insert(weight);
        Ok(())
    }

    pub fn build(self) -> TermGraph {
        let terms: Vec<String> = self.nodes.into_keys().collect();
        let index: HashMap<String, usize> = terms
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        let mut adjacency = vec![Vec::new(); terms.len()];
        let edge_count = self.edges.len();
        for ((u, v), w) in self.edges {
            let (ui, vi) = (index[&u], index[&v]);
            adjacency[ui].push((vi, w));
            adjacency[vi].push((ui, w));
        }
        for nbrs in &mut adjacency {
            nbrs.sort_by_key(|(v, _)| *v);
        }
        TermGraph {
            terms,
            index,
            adjacency,
            edge_count,
        }
    }
}

/// Merges two term graphs into one, applying the duplicate-edge rule across
/// inputs.  Used to combine a corpus collocation graph with taxonomy edges.
pub fn merge_term_graphs(a: &TermGraph, b: &TermGraph) -> TermGraph {
    let mut builder = TermGraphBuilder::new();
    for graph in [a, b] {
        for term in graph.terms() {
            builder.add_node(term);
        }
        for (u, v, w) in graph.edges() {
            builder
                .add_edge(graph.term(u), graph.term(v), w)
                .expect("merging validated edges cannot fail");
        }
    }
    builder.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_is_symmetric() {
        let mut b = TermGraphBuilder::new();
        b.add_edge("a", "b", 0.5).unwrap();
        b.add_edge("b", "c", -1.0).unwrap();
        let g = b.build();
        for u in 0..g.node_count() {
            for &(v, w) in g.neighbors(u) {
                assert!(g.neighbors(v).iter().any(|&(x, wx)| x == u && wx == w));
            }
        }
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn duplicate_edges_keep_largest_magnitude() {
        let mut b = TermGraphBuilder::new();
        b.add_edge("a", "b", 0.3).unwrap();
        b.add_edge("b", "a", 0.9).unwrap();
        let g = b.build();
        let (a, bn) = (g.node("a").unwrap(), g.node("b").unwrap());
        assert_eq!(g.neighbors(a), &[(bn, 0.9)]);
    }

    #[test]
    fn magnitude_tie_prefers_negative() {
        let mut b = TermGraphBuilder::new();
        b.add_edge("a", "b", 1.0).unwrap();
        b.add_edge("a", "b", -1.0).unwrap();
        let g = b.build();
        assert_eq!(g.edges().next().unwrap().2, -1.0);

        // Same outcome regardless of insertion order.
        let mut b = TermGraphBuilder::new();
        b.add_edge("a", "b", -1.0).unwrap();
        b.add_edge("a", "b", 1.0).unwrap();
        let g = b.build();
        assert_eq!(g.edges().next().unwrap().2, -1.0);
    }

    #[test]
    fn rejects_self_loops_and_out_of_range_weights() {
        let mut b = TermGraphBuilder::new();
        assert!(b.add_edge("a", "a", 0.5).is_err());
        assert!(b.add_edge("a", "b", 1.5).is_err());
    }

    #[test]
    fn merge_unions_nodes_and_resolves_edges() {
        let mut b1 = TermGraphBuilder::new();
        b1.add_edge("a", "b", 0.4).unwrap();
        b1.add_node("lonely");
        let g1 = b1.build();

        let mut b2 = TermGraphBuilder::new();
        b2.add_edge("a", "b", -1.0).unwrap();
        b2.add_edge("b", "c", 0.2).unwrap();
        let g2 = b2.build();

        let merged = merge_term_graphs(&g1, &g2);
        assert_eq!(merged.node_count(), 4);
        assert_eq!(merged.edge_count(), 2);
        let (a, bn) = (merged.node("a").unwrap(), merged.node("b").unwrap());
        assert!(merged.neighbors(a).contains(&(bn, -1.0)));
    }

    #[test]
    fn node_order_is_deterministic() {
        let mut b1 = TermGraphBuilder::new();
        b1.add_edge("z", "a", 0.5).unwrap();
        b1.add_edge("m", "a", 0.25).unwrap();
        let g1 = b1.build();

        let mut b2 = TermGraphBuilder::new();
        b2.add_edge("m", "a", 0.25).unwrap();
        b2.add_edge("a", "z", 0.5).unwrap();
        let g2 = b2.build();

        assert_eq!(g1.canonical_edges(), g2.canonical_edges());
        assert_eq!(g1.terms(), g2.terms());
    }
}
