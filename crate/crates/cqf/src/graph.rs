//! Acyclically oriented labeled graphs and their poset structure.
//!
//! Vertices are labeled `1..=n`. An edge `(u, v)` is oriented from `u` to
//! `v`; labels need not respect the orientation (a labeling is *natural*
//! when every edge satisfies `u < v`). The induced poset has `u < v` exactly
//! when a directed path runs from `u` to `v`.

use serde::{Deserialize, Deserializer, Serialize};
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate or anti-parallel edge between {0} and {1}")]
    DuplicateEdge(usize, usize),
    #[error("orientation contains a directed cycle")]
    NotAcyclic,
    #[error("chain cover preconditions violated: {0}")]
    ChainCoverPrecondition(String),
    #[error("no chain decomposition with one source and one sink per chain")]
    ChainCoverNotFound,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrientedGraph {
    n: usize,
    /// Sorted lexicographically; `(u, v)` means an edge oriented `u -> v`.
    edges: Vec<(usize, usize)>,
}

impl OrientedGraph {
    pub fn new(n: usize, mut edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        edges.sort_unstable();
        edges.dedup();
        for &(u, v) in &edges {
            for &x in &[u, v] {
                if x == 0 || x > n {
                    return Err(GraphError::VertexOutOfRange(x, n));
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if edges.binary_search(&(v, u)).is_ok() {
                return Err(GraphError::DuplicateEdge(u, v));
            }
        }
        let g = OrientedGraph { n, edges };
        if g.topological_order().is_none() {
            return Err(GraphError::NotAcyclic);
        }
        Ok(g)
    }

    /// Construction that skips acyclicity re-validation; for internal use on
    /// relabelings and reversals of graphs already known to be DAGs.
    fn from_parts(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        OrientedGraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u, v)).is_ok()
    }

    pub fn is_naturally_labeled(&self) -> bool {
        self.edges.iter().all(|&(u, v)| u < v)
    }

    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|&&(u, _)| u == v)
            .map(|&(_, w)| w)
            .collect()
    }

    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|&&(_, w)| w == v)
            .map(|&(u, _)| u)
            .collect()
    }

    pub fn undirected_neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(u, w)| {
                if u == v {
                    Some(w)
                } else if w == v {
                    Some(u)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// A topological order, or `None` if the orientation has a cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indegree = vec![0usize; self.n + 1];
        for &(_, v) in &self.edges {
            indegree[v] += 1;
        }
        let mut queue: VecDeque<usize> = (1..=self.n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in self.out_neighbors(v) {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    /// Sources and sinks, each sorted; an isolated vertex is both.
    pub fn sources_and_sinks(&self) -> (Vec<usize>, Vec<usize>) {
        let mut has_in = vec![false; self.n + 1];
        let mut has_out = vec![false; self.n + 1];
        for &(u, v) in &self.edges {
            has_out[u] = true;
            has_in[v] = true;
        }
        let sources = (1..=self.n).filter(|&v| !has_in[v]).collect();
        let sinks = (1..=self.n).filter(|&v| !has_out[v]).collect();
        (sources, sinks)
    }

    /// Reverses the orientation of every edge.
    pub fn reverse(&self) -> OrientedGraph {
        OrientedGraph::from_parts(self.n, self.edges.iter().map(|&(u, v)| (v, u)).collect())
    }

    /// Transitive closure of the edge relation.
    #[allow(clippy::needless_range_loop)]
    pub fn poset_closure(&self) -> PosetClosure {
        let mut reach = vec![vec![false; self.n + 1]; self.n + 1];
        for &(u, v) in &self.edges {
            reach[u][v] = true;
        }
        // Process in reverse topological order so each vertex inherits the
        // full reachability of its successors.
        let order = self.topological_order().expect("graph is acyclic");
        for &v in order.iter().rev() {
            for w in self.out_neighbors(v) {
                for t in 1..=self.n {
                    if reach[w][t] {
                        reach[v][t] = true;
                    }
                }
            }
        }
        PosetClosure { n: self.n, reach }
    }

    /// Relabels vertex `v` as `perm[v - 1]`; `perm` must be a permutation of
    /// `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> OrientedGraph {
        assert_eq!(perm.len(), self.n);
        OrientedGraph::from_parts(
            self.n,
            self.edges
                .iter()
                .map(|&(u, v)| (perm[u - 1], perm[v - 1]))
                .collect(),
        )
    }

    /// The lexicographically minimal edge set over all relabelings that make
    /// the labeling natural (each such relabeling reads off a linear
    /// extension of the induced poset). Two DAGs are digraph-isomorphic
    /// exactly when their canonical forms are equal.
    pub fn canonical_form(&self) -> OrientedGraph {
        let mut best: Option<Vec<(usize, usize)>> = None;
        let mut position = vec![0usize; self.n + 1];
        let mut indegree = vec![0usize; self.n + 1];
        for &(_, v) in &self.edges {
            indegree[v] += 1;
        }
        self.extend_canonical(&mut position, &mut indegree, 1, &mut best);
        OrientedGraph::from_parts(self.n, best.unwrap_or_default())
    }

    fn extend_canonical(
        &self,
        position: &mut Vec<usize>,
        indegree: &mut Vec<usize>,
        next: usize,
        best: &mut Option<Vec<(usize, usize)>>,
    ) {
        if next > self.n {
            let mut mapped: Vec<(usize, usize)> = self
                .edges
                .iter()
                .map(|&(u, v)| (position[u], position[v]))
                .collect();
            mapped.sort_unstable();
            if best.as_ref().is_none_or(|b| mapped < *b) {
                *best = Some(mapped);
            }
            return;
        }
        for v in 1..=self.n {
            if position[v] != 0 || indegree[v] != 0 {
                continue;
            }
            position[v] = next;
            for w in self.out_neighbors(v) {
                indegree[w] -= 1;
            }
            self.extend_canonical(position, indegree, next + 1, best);
            position[v] = 0;
            for w in self.out_neighbors(v) {
                indegree[w] += 1;
            }
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_vertex_sets().len() == 1
    }

    fn connected_vertex_sets(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut components = Vec::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for w in self.undirected_neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// Components of the underlying undirected graph, each relabeled
    /// `1..=k` preserving the relative order of the original labels.
    pub fn connected_components(&self) -> Vec<OrientedGraph> {
        self.connected_vertex_sets()
            .into_iter()
            .map(|comp| {
                let rank = |v: usize| comp.binary_search(&v).unwrap() + 1;
                let edges = self
                    .edges
                    .iter()
                    .filter(|&&(u, _)| comp.binary_search(&u).is_ok())
                    .map(|&(u, v)| (rank(u), rank(v)))
                    .collect();
                OrientedGraph::from_parts(comp.len(), edges)
            })
            .collect()
    }

    /// A maximum-cardinality antichain of the induced poset, computed from a
    /// maximum bipartite matching on the comparability relation.
    #[allow(clippy::needless_range_loop)]
    pub fn max_antichain(&self) -> Vec<usize> {
        let closure = self.poset_closure();
        let matching = comparability_matching(&closure);
        // Alternating reachability from unmatched left vertices: a minimum
        // vertex cover misses exactly one side of each reachable pair, and
        // the uncovered vertices form a maximum antichain.
        let n = self.n;
        let mut left_reached = vec![false; n + 1];
        let mut right_reached = vec![false; n + 1];
        let mut queue: VecDeque<usize> =
            (1..=n).filter(|&u| matching.next_of[u].is_none()).collect();
        for &u in &queue {
            left_reached[u] = true;
        }
        while let Some(u) = queue.pop_front() {
            for v in 1..=n {
                if closure.less(u, v) && !right_reached[v] {
                    right_reached[v] = true;
                    if let Some(u2) = matching.prev_of[v] {
                        if !left_reached[u2] {
                            left_reached[u2] = true;
                            queue.push_back(u2);
                        }
                    }
                }
            }
        }
        let antichain: Vec<usize> = (1..=n)
            .filter(|&v| left_reached[v] && !right_reached[v])
            .collect();
        debug_assert_eq!(antichain.len(), n - matching.size);
        debug_assert!(antichain
            .iter()
            .all(|&u| antichain.iter().all(|&v| u == v || !closure.less(u, v))));
        antichain
    }

    /// A minimum chain decomposition: as many chains as the maximum
    /// antichain has elements.
    pub fn min_chain_cover(&self) -> ChainDecomposition {
        let closure = self.poset_closure();
        let matching = comparability_matching(&closure);
        let mut chains = Vec::new();
        for start in 1..=self.n {
            if matching.prev_of[start].is_some() {
                continue;
            }
            let mut chain = vec![start];
            let mut v = start;
            while let Some(w) = matching.next_of[v] {
                chain.push(w);
                v = w;
            }
            chains.push(chain);
        }
        ChainDecomposition { chains }
    }

    /// A minimum chain decomposition in which every chain contains exactly
    /// one source and one sink. Requires equal numbers of sources and sinks
    /// matching the maximum antichain size. Falls back to exhaustive search
    /// if the matching-based cover fails the per-chain requirement, and
    /// reports `ChainCoverNotFound` if no decomposition qualifies.
    pub fn source_sink_chain_cover(&self) -> Result<ChainDecomposition, GraphError> {
        let (sources, sinks) = self.sources_and_sinks();
        let a = self.max_antichain().len();
        if sources.len() != sinks.len() || sources.len() != a {
            return Err(GraphError::ChainCoverPrecondition(format!(
                "{} sources, {} sinks, max antichain {a}",
                sources.len(),
                sinks.len()
            )));
        }
        let cover = self.min_chain_cover();
        if self.chains_have_unique_source_and_sink(&cover, &sources, &sinks) {
            return Ok(cover);
        }
        self.exhaustive_chain_cover(a, &sources, &sinks)
            .ok_or(GraphError::ChainCoverNotFound)
    }

    fn chains_have_unique_source_and_sink(
        &self,
        cover: &ChainDecomposition,
        sources: &[usize],
        sinks: &[usize],
    ) -> bool {
        cover.chains.iter().all(|chain| {
            chain.iter().filter(|v| sources.contains(v)).count() == 1
                && chain.iter().filter(|v| sinks.contains(v)).count() == 1
        })
    }

    fn exhaustive_chain_cover(
        &self,
        a: usize,
        sources: &[usize],
        sinks: &[usize],
    ) -> Option<ChainDecomposition> {
        let closure = self.poset_closure();
        let order = self.topological_order().expect("graph is acyclic");
        let mut chains: Vec<Vec<usize>> = Vec::new();
        fn rec(
            order: &[usize],
            idx: usize,
            a: usize,
            closure: &PosetClosure,
            chains: &mut Vec<Vec<usize>>,
            sources: &[usize],
            sinks: &[usize],
        ) -> bool {
            if idx == order.len() {
                return chains.len() == a
                    && chains.iter().all(|chain| {
                        chain.iter().filter(|v| sources.contains(v)).count() == 1
                            && chain.iter().filter(|v| sinks.contains(v)).count() == 1
                    });
            }
            let v = order[idx];
            for i in 0..chains.len() {
                if chains[i].iter().all(|&u| closure.less(u, v)) {
                    chains[i].push(v);
                    if rec(order, idx + 1, a, closure, chains, sources, sinks) {
                        return true;
                    }
                    chains[i].pop();
                }
            }
            if chains.len() < a {
                chains.push(vec![v]);
                if rec(order, idx + 1, a, closure, chains, sources, sinks) {
                    return true;
                }
                chains.pop();
            }
            false
        }
        rec(&order, 0, a, &closure, &mut chains, sources, sinks)
            .then_some(ChainDecomposition { chains })
    }
}

impl std::fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OrientedGraph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl<'de> Deserialize<'de> for OrientedGraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        OrientedGraph::new(raw.n, raw.edges).map_err(serde::de::Error::custom)
    }
}

/// The strict order relation of the induced poset.
#[derive(Clone)]
pub struct PosetClosure {
    n: usize,
    reach: Vec<Vec<bool>>,
}

impl PosetClosure {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether a directed path runs from `u` to `v` (strict: `u != v`).
    pub fn less(&self, u: usize, v: usize) -> bool {
        self.reach[u][v]
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.less(u, v) || self.less(v, u)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in 1..=self.n {
                if self.reach[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Disjoint chains covering all vertices; each chain is listed in increasing
/// poset order. Chains are poset chains (pairwise comparable elements), not
/// necessarily edge-paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainDecomposition {
    pub chains: Vec<Vec<usize>>,
}

impl ChainDecomposition {
    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }
}

struct Matching {
    size: usize,
    /// `next_of[u]` = the matched successor of `u` in the chain relation.
    next_of: Vec<Option<usize>>,
    /// `prev_of[v]` = the matched predecessor of `v`.
    prev_of: Vec<Option<usize>>,
}

/// Maximum matching of the split bipartite comparability graph
/// (left copy of `u` joined to right copy of `v` when `u < v`).
fn comparability_matching(closure: &PosetClosure) -> Matching {
    let n = closure.n();
    let mut next_of: Vec<Option<usize>> = vec![None; n + 1];
    let mut prev_of: Vec<Option<usize>> = vec![None; n + 1];
    let mut size = 0;

    fn augment(
        u: usize,
        closure: &PosetClosure,
        visited: &mut [bool],
        next_of: &mut [Option<usize>],
        prev_of: &mut [Option<usize>],
    ) -> bool {
        for v in 1..=closure.n() {
            if closure.less(u, v) && !visited[v] {
                visited[v] = true;
                if prev_of[v].is_none()
                    || augment(prev_of[v].unwrap(), closure, visited, next_of, prev_of)
                {
                    next_of[u] = Some(v);
                    prev_of[v] = Some(u);
                    return true;
                }
            }
        }
        false
    }

    for u in 1..=n {
        let mut visited = vec![false; n + 1];
        if augment(u, closure, &mut visited, &mut next_of, &mut prev_of) {
            size += 1;
        }
    }
    Matching {
        size,
        next_of,
        prev_of,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> OrientedGraph {
        OrientedGraph::new(n, edges.to_vec()).unwrap()
    }

    #[test]
    fn validation_rejects_bad_input() {
        assert_eq!(
            OrientedGraph::new(2, vec![(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            OrientedGraph::new(2, vec![(1, 2), (2, 1)]),
            Err(GraphError::DuplicateEdge(1, 2))
        );
        assert_eq!(
            OrientedGraph::new(3, vec![(1, 2), (2, 3), (3, 1)]),
            Err(GraphError::NotAcyclic)
        );
        assert_eq!(
            OrientedGraph::new(1, vec![(1, 2)]),
            Err(GraphError::VertexOutOfRange(2, 1))
        );
    }

    #[test]
    fn sources_and_sinks_examples() {
        assert_eq!(g(2, &[(1, 2)]).sources_and_sinks(), (vec![1], vec![2]));
        assert_eq!(
            g(3, &[(1, 3), (2, 3)]).sources_and_sinks(),
            (vec![1, 2], vec![3])
        );
        // Naturally oriented 4-cycle: one source, one sink, adjacent.
        let c4 = g(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        assert_eq!(c4.sources_and_sinks(), (vec![1], vec![4]));
        // Isolated vertices are both.
        assert_eq!(g(1, &[]).sources_and_sinks(), (vec![1], vec![1]));
    }

    #[test]
    fn reversal_swaps_sources_and_sinks() {
        let graphs = [
            g(2, &[(1, 2)]),
            g(3, &[(1, 3), (2, 3)]),
            g(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]),
            g(5, &[(1, 2), (1, 3), (3, 4), (2, 5)]),
        ];
        for gr in &graphs {
            assert_eq!(gr.reverse().reverse(), *gr);
            let (s, t) = gr.sources_and_sinks();
            let (rs, rt) = gr.reverse().sources_and_sinks();
            assert_eq!((rs, rt), (t, s));
        }
        assert_eq!(g(2, &[(1, 2)]).reverse(), g(2, &[(2, 1)]));
    }

    #[test]
    fn closure_examples() {
        let chain = g(3, &[(1, 2), (2, 3)]);
        assert_eq!(chain.poset_closure().pairs(), vec![(1, 2), (1, 3), (2, 3)]);
        assert!(g(3, &[]).poset_closure().pairs().is_empty());
        assert_eq!(
            g(3, &[(1, 3), (2, 3)]).poset_closure().pairs(),
            vec![(1, 3), (2, 3)]
        );
    }

    #[test]
    fn closure_is_transitive_and_irreflexive() {
        let gr = g(6, &[(1, 3), (2, 3), (3, 4), (4, 6), (2, 5), (5, 6)]);
        let cl = gr.poset_closure();
        for u in 1..=6 {
            assert!(!cl.less(u, u));
            for v in 1..=6 {
                for w in 1..=6 {
                    if cl.less(u, v) && cl.less(v, w) {
                        assert!(cl.less(u, w));
                    }
                }
            }
        }
    }

    fn brute_force_max_antichain(gr: &OrientedGraph) -> usize {
        let cl = gr.poset_closure();
        let n = gr.n();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let verts: Vec<usize> = (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
            if verts
                .iter()
                .all(|&u| verts.iter().all(|&v| u == v || !cl.comparable(u, v)))
            {
                best = best.max(verts.len());
            }
        }
        best
    }

    /// All naturally labeled DAGs on n vertices (every DAG is isomorphic to
    /// one of these).
    fn natural_dags(n: usize) -> Vec<OrientedGraph> {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        (0u32..(1 << pairs.len()))
            .map(|mask| {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                OrientedGraph::new(n, edges).unwrap()
            })
            .collect()
    }

    #[test]
    fn dilworth_equality_on_small_dags() {
        for n in 1..=4 {
            for gr in natural_dags(n) {
                let a = gr.max_antichain().len();
                assert_eq!(a, brute_force_max_antichain(&gr), "{gr:?}");
                let cover = gr.min_chain_cover();
                assert_eq!(cover.len(), a, "{gr:?}");
                // The chains partition the vertex set and are real chains.
                let cl = gr.poset_closure();
                let mut all: Vec<usize> = cover.chains.iter().flatten().copied().collect();
                all.sort_unstable();
                assert_eq!(all, (1..=n).collect::<Vec<_>>());
                for chain in &cover.chains {
                    for w in chain.windows(2) {
                        assert!(cl.less(w[0], w[1]));
                    }
                }
            }
        }
    }

    #[test]
    fn antichain_examples() {
        assert_eq!(g(3, &[(1, 2), (2, 3)]).max_antichain().len(), 1);
        assert_eq!(g(3, &[(1, 3), (2, 3)]).max_antichain(), vec![1, 2]);
        assert_eq!(g(4, &[]).max_antichain(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn chain_cover_examples() {
        let chain = g(3, &[(1, 2), (2, 3)]);
        assert_eq!(chain.min_chain_cover().chains, vec![vec![1, 2, 3]]);
        assert_eq!(
            chain.source_sink_chain_cover().unwrap().chains,
            vec![vec![1, 2, 3]]
        );

        let two_chains = g(4, &[(1, 3), (2, 4)]);
        let cover = two_chains.source_sink_chain_cover().unwrap();
        assert_eq!(cover.chains, vec![vec![1, 3], vec![2, 4]]);

        // Unequal sources and sinks: precondition fails.
        assert!(matches!(
            g(3, &[(1, 3), (2, 3)]).source_sink_chain_cover(),
            Err(GraphError::ChainCoverPrecondition(_))
        ));
    }

    #[test]
    fn source_sink_cover_exists_on_qualifying_small_dags() {
        for n in 1..=5 {
            for gr in natural_dags(n) {
                if !gr.is_connected() {
                    continue;
                }
                let (sources, sinks) = gr.sources_and_sinks();
                let a = gr.max_antichain().len();
                if sources.len() != sinks.len() || sources.len() != a {
                    continue;
                }
                let cover = gr.source_sink_chain_cover().expect("cover must exist");
                assert_eq!(cover.len(), a);
                assert!(gr.chains_have_unique_source_and_sink(&cover, &sources, &sinks));
            }
        }
    }

    #[test]
    fn canonical_form_examples() {
        assert_eq!(g(2, &[(2, 1)]).canonical_form(), g(2, &[(1, 2)]));
        let two_source = g(3, &[(1, 3), (2, 3)]);
        let relabeled = g(3, &[(2, 3), (1, 3)]);
        assert_eq!(two_source.canonical_form(), relabeled.canonical_form());
        // Idempotence.
        for gr in natural_dags(3) {
            let canon = gr.canonical_form();
            assert_eq!(canon.canonical_form(), canon);
        }
    }

    #[test]
    fn components_relabel_naturally() {
        let gr = g(4, &[(1, 2), (3, 4)]);
        let comps = gr.connected_components();
        assert_eq!(comps, vec![g(2, &[(1, 2)]), g(2, &[(1, 2)])]);
        let gr = g(3, &[]);
        assert_eq!(gr.connected_components().len(), 3);
        let gr = g(3, &[(1, 3), (2, 3)]);
        assert_eq!(gr.connected_components(), vec![gr.clone()]);
        // Orientation within a component survives relabeling.
        let gr = g(3, &[(3, 2)]);
        assert_eq!(gr.connected_components(), vec![g(1, &[]), g(2, &[(2, 1)])]);
    }

    #[test]
    fn json_contract() {
        let gr = g(3, &[(2, 3), (1, 3)]);
        let json = serde_json::to_string(&gr).unwrap();
        assert_eq!(json, r#"{"n":3,"edges":[[1,3],[2,3]]}"#);
        let back: OrientedGraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, gr);
        assert!(serde_json::from_str::<OrientedGraph>(r#"{"n":2,"edges":[[1,2],[2,1]]}"#).is_err());
    }

    proptest! {
        #[test]
        fn canonical_form_is_relabeling_invariant(
            mask in 0u32..1024, seed in 0usize..120
        ) {
            let n = 5;
            let base = {
                let pairs: Vec<(usize, usize)> = (1..=n)
                    .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
                    .collect();
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                OrientedGraph::new(n, edges).unwrap()
            };
            // A random topological relabeling: permute labels by composing
            // with any permutation consistent with acyclicity.
            let mut perm: Vec<usize> = (1..=n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                perm.swap(i, s % (i + 1));
                s /= i + 1;
            }
            // Relabeling preserves the digraph, so the canonical form is fixed.
            let relabeled = base.relabel(&perm);
            prop_assert_eq!(base.canonical_form(), relabeled.canonical_form());
        }
    }
}
