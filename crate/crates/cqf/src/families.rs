//! Constructors for the graph families under study: mountain graphs and
//! their bottomless and mixed variants, natural unit interval graphs, small
//! oriented trees, stars, paths and cycles, and exhaustive enumeration of
//! connected DAGs at small vertex counts.
//!
//! Mountain-style graphs are built left to right: `p` cliques strung along a
//! cycle, adjacent cliques sharing one *lower* vertex, plus a *bottom edge*
//! joining the leftmost and rightmost vertices. A full clique of size `k`
//! contributes `k - 2` *upper* vertices; a bottomless clique is a
//! `(k+1)`-clique with the edge between its two lower vertices removed and
//! contributes `k - 1` upper vertices. Every edge is oriented from the
//! smaller to the larger label.

use crate::graph::{GraphError, OrientedGraph};
use serde::Serialize;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("clique {0} and its right neighbor do not form a full/bottomless pair")]
    InvalidSwapSite(usize),
    #[error("invalid step function: {0}")]
    InvalidFunction(String),
    #[error("size guard: {0}")]
    SizeGuard(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CliqueKind {
    Full,
    Bottomless,
}

/// Shape of a mixed mountain graph: the clique size parameter `k` and the
/// left-to-right sequence of clique kinds.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MountainSpec {
    pub k: usize,
    pub cliques: Vec<CliqueKind>,
}

impl MountainSpec {
    pub fn new(k: usize, cliques: Vec<CliqueKind>) -> Result<Self, FamilyError> {
        if k < 2 {
            return Err(FamilyError::InvalidParams(format!("k = {k} < 2")));
        }
        if cliques.len() < 2 {
            return Err(FamilyError::InvalidParams(format!(
                "need at least 2 cliques, got {}",
                cliques.len()
            )));
        }
        if k < 3 && cliques.contains(&CliqueKind::Bottomless) {
            return Err(FamilyError::InvalidParams(
                "bottomless cliques require k >= 3".into(),
            ));
        }
        Ok(MountainSpec { k, cliques })
    }

    /// Parses strings like "fbf": `f` = full, `b` = bottomless.
    pub fn parse(k: usize, tags: &str) -> Result<Self, FamilyError> {
        let cliques = tags
            .chars()
            .map(|c| match c {
                'f' => Ok(CliqueKind::Full),
                'b' => Ok(CliqueKind::Bottomless),
                other => Err(FamilyError::InvalidParams(format!(
                    "unknown clique tag {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        MountainSpec::new(k, cliques)
    }

    pub fn p(&self) -> usize {
        self.cliques.len()
    }

    /// Number of upper vertices contributed by clique `i`.
    pub fn upper_count(&self, i: usize) -> usize {
        match self.cliques[i] {
            CliqueKind::Full => self.k - 2,
            CliqueKind::Bottomless => self.k - 1,
        }
    }

    pub fn vertex_count(&self) -> usize {
        1 + (0..self.p())
            .map(|i| self.upper_count(i) + 1)
            .sum::<usize>()
    }

    pub fn reversed(&self) -> MountainSpec {
        let mut cliques = self.cliques.clone();
        cliques.reverse();
        MountainSpec { k: self.k, cliques }
    }
}

/// Vertex-placement data for a mixed mountain graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MountainGeometry {
    spec: MountainSpec,
    /// The `p + 1` vertices along the induced cycle, left to right.
    lowers: Vec<usize>,
    /// Upper vertices of each clique, left to right.
    uppers: Vec<Vec<usize>>,
}

impl MountainGeometry {
    pub fn spec(&self) -> &MountainSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.vertex_count()
    }

    pub fn p(&self) -> usize {
        self.spec.p()
    }

    pub fn k(&self) -> usize {
        self.spec.k
    }

    pub fn kind(&self, clique: usize) -> CliqueKind {
        self.spec.cliques[clique]
    }

    pub fn lowers(&self) -> &[usize] {
        &self.lowers
    }

    pub fn uppers(&self, clique: usize) -> &[usize] {
        &self.uppers[clique]
    }

    pub fn all_uppers(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.uppers.iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }

    pub fn bottom_edge(&self) -> (usize, usize) {
        (1, self.n())
    }

    pub fn is_lower(&self, v: usize) -> bool {
        self.lowers.binary_search(&v).is_ok()
    }

    /// The clique containing an upper vertex, with its 0-based slot.
    pub fn upper_position(&self, v: usize) -> Option<(usize, usize)> {
        for (i, ups) in self.uppers.iter().enumerate() {
            if let Ok(slot) = ups.binary_search(&v) {
                return Some((i, slot));
            }
        }
        None
    }

    /// All vertices of a clique, left to right (lower, uppers..., lower).
    pub fn clique_vertices(&self, clique: usize) -> Vec<usize> {
        let mut out = vec![self.lowers[clique]];
        out.extend_from_slice(&self.uppers[clique]);
        out.push(self.lowers[clique + 1]);
        out
    }

    pub fn reversed(&self) -> MountainGeometry {
        build_geometry(self.spec.reversed())
    }

    pub fn graph(&self) -> OrientedGraph {
        geometry_graph(self)
    }

    /// The interchange view: lower vertices, upper vertices, and the vertex
    /// list of each clique.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "lower": self.lowers,
            "upper": self.all_uppers(),
            "cliques": (0..self.p()).map(|i| self.clique_vertices(i)).collect::<Vec<_>>(),
        })
    }
}

fn build_geometry(spec: MountainSpec) -> MountainGeometry {
    let mut lowers = vec![1usize];
    let mut uppers = Vec::with_capacity(spec.p());
    let mut next = 2usize;
    for i in 0..spec.p() {
        let count = spec.upper_count(i);
        uppers.push((next..next + count).collect());
        next += count;
        lowers.push(next);
        next += 1;
    }
    MountainGeometry {
        spec,
        lowers,
        uppers,
    }
}

fn geometry_graph(geom: &MountainGeometry) -> OrientedGraph {
    let mut edges = Vec::new();
    for i in 0..geom.p() {
        let verts = geom.clique_vertices(i);
        for (a_idx, &a) in verts.iter().enumerate() {
            for &b in &verts[a_idx + 1..] {
                if geom.kind(i) == CliqueKind::Bottomless
                    && a == geom.lowers[i]
                    && b == geom.lowers[i + 1]
                {
                    continue;
                }
                edges.push((a, b));
            }
        }
    }
    edges.push(geom.bottom_edge());
    OrientedGraph::new(geom.n(), edges).expect("left-to-right orientation is acyclic")
}

/// The mixed mountain graph of a spec, with its geometry.
pub fn mixed_mountain(spec: &MountainSpec) -> (OrientedGraph, MountainGeometry) {
    let geom = build_geometry(spec.clone());
    (geometry_graph(&geom), geom)
}

/// The `(p, k)`-mountain graph: `p` full `k`-cliques.
pub fn mountain(p: usize, k: usize) -> Result<(OrientedGraph, MountainGeometry), FamilyError> {
    if p < 2 {
        return Err(FamilyError::InvalidParams(format!("p = {p} < 2")));
    }
    let spec = MountainSpec::new(k, vec![CliqueKind::Full; p])?;
    Ok(mixed_mountain(&spec))
}

/// The `(p, k)`-bottomless mountain graph: `p` bottomless `(k+1)`-cliques,
/// `1 + p*k` vertices.
pub fn bottomless_mountain(
    p: usize,
    k: usize,
) -> Result<(OrientedGraph, MountainGeometry), FamilyError> {
    if p < 2 {
        return Err(FamilyError::InvalidParams(format!("p = {p} < 2")));
    }
    if k < 3 {
        return Err(FamilyError::InvalidParams(format!(
            "bottomless mountains require k >= 3, got {k}"
        )));
    }
    let spec = MountainSpec::new(k, vec![CliqueKind::Bottomless; p])?;
    Ok(mixed_mountain(&spec))
}

/// Exchanges a full clique at `clique_index` with the bottomless clique
/// immediately to its right.
pub fn swap_graph(
    geom: &MountainGeometry,
    clique_index: usize,
) -> Result<(OrientedGraph, MountainGeometry), FamilyError> {
    if clique_index + 1 >= geom.p()
        || geom.kind(clique_index) != CliqueKind::Full
        || geom.kind(clique_index + 1) != CliqueKind::Bottomless
    {
        return Err(FamilyError::InvalidSwapSite(clique_index));
    }
    let mut spec = geom.spec().clone();
    spec.cliques.swap(clique_index, clique_index + 1);
    Ok(mixed_mountain(&spec))
}

/// Inverse of [`swap_graph`]: exchanges a bottomless clique at
/// `clique_index` with the full clique immediately to its right.
pub fn unswap_graph(
    geom: &MountainGeometry,
    clique_index: usize,
) -> Result<(OrientedGraph, MountainGeometry), FamilyError> {
    if clique_index + 1 >= geom.p()
        || geom.kind(clique_index) != CliqueKind::Bottomless
        || geom.kind(clique_index + 1) != CliqueKind::Full
    {
        return Err(FamilyError::InvalidSwapSite(clique_index));
    }
    let mut spec = geom.spec().clone();
    spec.cliques.swap(clique_index, clique_index + 1);
    Ok(mixed_mountain(&spec))
}

/// Natural unit interval graph of a nondecreasing step function:
/// edges `(i, j)` for `i < j <= h(i)`.
pub fn natural_unit_interval(h: &[usize]) -> Result<OrientedGraph, FamilyError> {
    let n = h.len();
    for i in 1..=n {
        if h[i - 1] < i || h[i - 1] > n {
            return Err(FamilyError::InvalidFunction(format!(
                "h({i}) = {} out of range {i}..={n}",
                h[i - 1]
            )));
        }
        if i > 1 && h[i - 1] < h[i - 2] {
            return Err(FamilyError::InvalidFunction(format!(
                "h({}) = {} > h({i}) = {}",
                i - 1,
                h[i - 2],
                h[i - 1]
            )));
        }
    }
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=h[i - 1] {
            edges.push((i, j));
        }
    }
    Ok(OrientedGraph::new(n, edges)?)
}

/// All nondecreasing step functions whose unit interval graph is connected.
pub fn connected_step_functions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut h = Vec::with_capacity(n);
    fn rec(n: usize, h: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = h.len() + 1;
        if i > n {
            out.push(h.clone());
            return;
        }
        let lo = if i < n {
            // Connectivity needs an edge leaving every proper prefix.
            (i + 1).max(h.last().copied().unwrap_or(1))
        } else {
            n
        };
        for value in lo..=n {
            h.push(value);
            rec(n, h, out);
            h.pop();
        }
    }
    if n >= 1 {
        rec(n, &mut h, &mut out);
    }
    out
}

/// Star with `t` inward leaves (labeled `1..=t`), center `t + 1`, and the
/// remaining leaves outward.
pub fn oriented_star(n: usize, leaf_points_inward: &[bool]) -> OrientedGraph {
    assert!(n >= 2 && leaf_points_inward.len() == n - 1);
    let t = leaf_points_inward.iter().filter(|&&b| b).count();
    let center = t + 1;
    let mut edges = Vec::new();
    for leaf in 1..=t {
        edges.push((leaf, center));
    }
    for leaf in t + 2..=n {
        edges.push((center, leaf));
    }
    OrientedGraph::new(n, edges).expect("stars are acyclic")
}

/// Path on `bits.len() + 1` vertices; `bits[i]` directs the i-th edge from
/// the smaller to the larger endpoint.
pub fn path_oriented(bits: &[bool]) -> OrientedGraph {
    let n = bits.len() + 1;
    let edges = bits
        .iter()
        .enumerate()
        .map(|(i, &forward)| {
            if forward {
                (i + 1, i + 2)
            } else {
                (i + 2, i + 1)
            }
        })
        .collect();
    OrientedGraph::new(n, edges).expect("paths are acyclic")
}

/// All acyclic orientations of the cycle on `n` vertices, up to digraph
/// isomorphism.
pub fn cycle_acyclic_orientations(n: usize) -> Vec<OrientedGraph> {
    assert!(n >= 3);
    let cycle_edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).chain([(n, 1)]).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let oriented: Vec<(usize, usize)> = cycle_edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| if mask >> i & 1 == 1 { (a, b) } else { (b, a) })
            .collect();
        if let Ok(g) = OrientedGraph::new(n, oriented) {
            let canon = g.canonical_form();
            if seen.insert(canon.clone()) {
                out.push(canon);
            }
        }
    }
    out.sort();
    out
}

/// The naturally oriented cycle: one source, one sink, and an edge from the
/// source to the sink.
pub fn natural_cycle(n: usize) -> OrientedGraph {
    assert!(n >= 3);
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).chain([(1, n)]).collect();
    OrientedGraph::new(n, edges).expect("naturally oriented")
}

/// All orientations of all trees on `n` vertices, up to digraph isomorphism.
pub fn oriented_trees(n: usize) -> Vec<OrientedGraph> {
    assert!(n >= 1);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for tree in undirected_trees(n) {
        for mask in 0u32..(1 << tree.len().max(1)) {
            if tree.is_empty() && mask > 0 {
                break;
            }
            let oriented: Vec<(usize, usize)> = tree
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| if mask >> i & 1 == 1 { (a, b) } else { (b, a) })
                .collect();
            let g = OrientedGraph::new(n, oriented).expect("trees are acyclic");
            let canon = g.canonical_form();
            if seen.insert(canon.clone()) {
                out.push(canon);
            }
        }
    }
    out.sort();
    out
}

/// Unlabeled trees on `n` vertices, as edge lists on labels `1..=n`, built
/// by leaf attachment with isomorphism rejection.
fn undirected_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for tree in &level {
            for attach in 1..m {
                let mut edges = tree.clone();
                edges.push((attach, m));
                let code = tree_code(m, &edges);
                if seen.insert(code) {
                    next.push(edges);
                }
            }
        }
        level = next;
    }
    level
}

/// Canonical code of an unlabeled tree: root at the center (minimum over
/// both when the tree is bicentral) and take the sorted recursive code.
fn tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    if n == 1 {
        return "()".into();
    }
    let mut adj = vec![Vec::new(); n + 1];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    // Peel leaves to find the center(s).
    let mut degree: Vec<usize> = (0..=n)
        .map(|v| if v == 0 { 0 } else { adj[v].len() })
        .collect();
    let mut layer: Vec<usize> = (1..=n).filter(|&v| degree[v] <= 1).collect();
    let mut removed = vec![false; n + 1];
    let mut remaining = n;
    while remaining > 2 {
        let mut next_layer = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in &adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next_layer.push(w);
                    }
                }
            }
        }
        layer = next_layer;
    }
    let centers: Vec<usize> = (1..=n).filter(|&v| !removed[v]).collect();

    fn rooted(v: usize, parent: usize, adj: &[Vec<usize>]) -> String {
        let mut child_codes: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| rooted(w, v, adj))
            .collect();
        child_codes.sort();
        format!("({})", child_codes.concat())
    }

    centers
        .iter()
        .map(|&c| rooted(c, 0, &adj))
        .min()
        .expect("a tree has a center")
}

/// All acyclic orientations of a labeled undirected graph, as distinct
/// oriented graphs (not deduplicated by isomorphism).
fn acyclic_orientations(n: usize, edges: &[(usize, usize)]) -> Vec<OrientedGraph> {
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    loop {
        let mut position = vec![0usize; n + 1];
        for (idx, &v) in perm.iter().enumerate() {
            position[v] = idx;
        }
        let oriented: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| {
                if position[a] < position[b] {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        let g = OrientedGraph::new(n, oriented).expect("orientation follows a vertex order");
        if seen.insert(g.clone()) {
            out.push(g);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Canonical labeled form of an undirected graph: the lexicographically
/// minimal edge list over relabelings that sort vertices by degree (degree
/// classes are the only candidates an isomorphism can permute).
fn canonical_undirected(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut degree = vec![0usize; n + 1];
    for &(a, b) in edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let mut by_degree: Vec<usize> = (1..=n).collect();
    by_degree.sort_by_key(|&v| (degree[v], v));
    // Group vertices of equal degree; enumerate block-wise permutations.
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &by_degree {
        match groups.last_mut() {
            Some(last) if degree[last[0]] == degree[v] => last.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut perm = vec![0usize; n + 1];
    fn rec(
        groups: &mut [Vec<usize>],
        gi: usize,
        offset: usize,
        perm: &mut Vec<usize>,
        edges: &[(usize, usize)],
        best: &mut Option<Vec<(usize, usize)>>,
    ) {
        if gi == groups.len() {
            let mut mapped: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a], perm[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            mapped.sort_unstable();
            if best.as_ref().is_none_or(|b| mapped < *b) {
                *best = Some(mapped);
            }
            return;
        }
        let size = groups[gi].len();
        let mut order: Vec<usize> = (0..size).collect();
        loop {
            for (slot, &idx) in order.iter().enumerate() {
                perm[groups[gi][idx]] = offset + slot + 1;
            }
            rec(groups, gi + 1, offset + size, perm, edges, best);
            if !next_permutation(&mut order) {
                break;
            }
        }
    }
    rec(&mut groups, 0, 0, &mut perm, edges, &mut best);
    best.unwrap_or_default()
}

/// Isomorphism classes of undirected graphs on `n` labeled vertices, grown
/// one vertex at a time (disconnected intermediates are kept because a
/// connected graph can have disconnected vertex-deleted subgraphs).
fn undirected_graph_classes(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for graph in &level {
            for neighbor_mask in 0u32..(1 << (m - 1)) {
                let mut edges = graph.clone();
                for v in 1..m {
                    if neighbor_mask >> (v - 1) & 1 == 1 {
                        edges.push((v, m));
                    }
                }
                let canon = canonical_undirected(m, &edges);
                if seen.insert(canon.clone()) {
                    next.push(canon);
                }
            }
        }
        level = next;
    }
    level
}

fn is_connected_undirected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return false;
    }
    let mut adj = vec![Vec::new(); n + 1];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n + 1];
    let mut stack = vec![1];
    seen[1] = true;
    let mut count = 0;
    while let Some(v) = stack.pop() {
        count += 1;
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    count == n
}

pub const CONNECTED_DAG_GUARD: usize = 7;
pub const CONNECTED_DAG_HARD_LIMIT: usize = 8;

/// Every connected acyclic orientation on `n` vertices, up to digraph
/// isomorphism, in a deterministic order. Guarded at `n <= 7`; the `n = 8`
/// sweep is exposed separately behind the long-running entry point.
pub fn all_connected_dags(n: usize) -> Result<Vec<OrientedGraph>, FamilyError> {
    if n > CONNECTED_DAG_GUARD {
        return Err(FamilyError::SizeGuard(format!(
            "connected DAG enumeration is guarded at n <= {CONNECTED_DAG_GUARD}; \
             use the long-running entry point for n = {CONNECTED_DAG_HARD_LIMIT}"
        )));
    }
    Ok(connected_dags_unguarded(n))
}

/// Long-running variant allowing `n = 8`.
pub fn all_connected_dags_large(n: usize) -> Result<Vec<OrientedGraph>, FamilyError> {
    if n > CONNECTED_DAG_HARD_LIMIT {
        return Err(FamilyError::SizeGuard(format!(
            "connected DAG enumeration is hard-limited at n <= {CONNECTED_DAG_HARD_LIMIT}"
        )));
    }
    Ok(connected_dags_unguarded(n))
}

fn connected_dags_unguarded(n: usize) -> Vec<OrientedGraph> {
    if n == 0 {
        return Vec::new();
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for skeleton in undirected_graph_classes(n) {
        if !is_connected_undirected(n, &skeleton) {
            continue;
        }
        for oriented in acyclic_orientations(n, &skeleton) {
            let canon = oriented.canonical_form();
            if seen.insert(canon.clone()) {
                out.push(canon);
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> OrientedGraph {
        OrientedGraph::new(n, edges.to_vec()).unwrap()
    }

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn smallest_mountain_is_the_triangle() {
        let (graph, geom) = mountain(2, 2).unwrap();
        assert_eq!(graph, g(3, &[(1, 2), (1, 3), (2, 3)]));
        assert_eq!(geom.lowers(), &[1, 2, 3]);
        assert_eq!(geom.bottom_edge(), (1, 3));
    }

    #[test]
    fn mountain_vertex_and_edge_counts() {
        let (graph, _) = mountain(5, 4).unwrap();
        assert_eq!(graph.n(), 16);
        for p in 2..=5 {
            for k in 2..=4 {
                let (graph, geom) = mountain(p, k).unwrap();
                assert_eq!(graph.n(), p * (k - 1) + 1, "vertices of ({p},{k})");
                assert_eq!(
                    graph.num_edges(),
                    p * binomial(k, 2) + 1,
                    "edges of ({p},{k})"
                );
                assert!(graph.is_naturally_labeled());
                assert!(graph.is_connected());
                assert_eq!(geom.lowers().len(), p + 1);
            }
        }
    }

    #[test]
    fn width_two_mountains_are_natural_cycles() {
        for p in 2..=6 {
            let (graph, _) = mountain(p, 2).unwrap();
            assert_eq!(graph, natural_cycle(p + 1));
        }
    }

    #[test]
    fn bottomless_mountains() {
        let (graph, geom) = bottomless_mountain(2, 3).unwrap();
        assert_eq!(graph.n(), 7);
        // Each clique is a 4-clique minus the edge between its lower
        // vertices; only the bottom edge joins lower vertices.
        for (i, &a) in geom.lowers().iter().enumerate() {
            for &b in &geom.lowers()[i + 1..] {
                let present = graph.has_edge(a, b);
                assert_eq!(present, (a, b) == geom.bottom_edge(), "lower pair {a},{b}");
            }
        }
        // Edge count both ways: p complete (k+1)-cliques minus their lower
        // edges, plus the bottom edge.
        for p in 2..=3 {
            for k in 3..=4 {
                let (graph, _) = bottomless_mountain(p, k).unwrap();
                assert_eq!(graph.n(), 1 + p * k);
                assert_eq!(graph.num_edges(), p * (binomial(k + 1, 2) - 1) + 1);
            }
        }
        assert!(bottomless_mountain(2, 2).is_err());
    }

    #[test]
    fn mixed_mountains_degenerate_to_pure_families() {
        let all_full = MountainSpec::new(3, vec![CliqueKind::Full; 3]).unwrap();
        assert_eq!(mixed_mountain(&all_full).0, mountain(3, 3).unwrap().0);
        let all_bottomless = MountainSpec::new(3, vec![CliqueKind::Bottomless; 2]).unwrap();
        assert_eq!(
            mixed_mountain(&all_bottomless).0,
            bottomless_mountain(2, 3).unwrap().0
        );
    }

    #[test]
    fn small_mixed_mountain_layout() {
        let spec = MountainSpec::parse(3, "fb").unwrap();
        let (graph, geom) = mixed_mountain(&spec);
        assert_eq!(graph.n(), 6);
        assert_eq!(geom.bottom_edge(), (1, 6));
        assert_eq!(geom.lowers(), &[1, 3, 6]);
        assert_eq!(geom.uppers(0), &[2]);
        assert_eq!(geom.uppers(1), &[4, 5]);
        assert!(
            !graph.has_edge(3, 6),
            "bottomless clique misses its lower edge"
        );
        assert!(graph.has_edge(1, 6), "bottom edge present");
    }

    #[test]
    fn reversed_spec_is_the_horizontal_reflection() {
        for tags in ["fb", "bf", "ffb", "fbf", "bfb", "fbb"] {
            let spec = MountainSpec::parse(3, tags).unwrap();
            let (graph, geom) = mixed_mountain(&spec);
            let (reflected, _) = mixed_mountain(&spec.reversed());
            let n = graph.n();
            let mirrored = OrientedGraph::new(
                n,
                graph
                    .edges()
                    .iter()
                    .map(|&(u, v)| (n + 1 - v, n + 1 - u))
                    .collect(),
            )
            .unwrap();
            assert_eq!(mirrored, reflected, "spec {tags}");
            assert_eq!(geom.reversed().spec(), &spec.reversed());
        }
    }

    #[test]
    fn swap_and_unswap_are_inverse_on_specs() {
        let spec = MountainSpec::parse(3, "fbf").unwrap();
        let (graph, geom) = mixed_mountain(&spec);
        let (swapped_graph, swapped_geom) = swap_graph(&geom, 0).unwrap();
        assert_eq!(swapped_geom.spec(), &MountainSpec::parse(3, "bff").unwrap());
        assert_eq!(swapped_graph.n(), graph.n());
        let (back_graph, back_geom) = unswap_graph(&swapped_geom, 0).unwrap();
        assert_eq!(back_graph, graph);
        assert_eq!(back_geom, geom);
        // Wrong site kinds are rejected.
        assert!(matches!(
            swap_graph(&geom, 1),
            Err(FamilyError::InvalidSwapSite(1))
        ));
        assert!(matches!(
            swap_graph(&geom, 5),
            Err(FamilyError::InvalidSwapSite(5))
        ));
    }

    #[test]
    fn unit_interval_graphs() {
        assert_eq!(
            natural_unit_interval(&[2, 3, 4, 4]).unwrap(),
            g(4, &[(1, 2), (2, 3), (3, 4)])
        );
        assert_eq!(
            natural_unit_interval(&[4, 4, 4, 4]).unwrap(),
            g(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
        );
        assert_eq!(natural_unit_interval(&[2, 2]).unwrap(), g(2, &[(1, 2)]));
        assert!(natural_unit_interval(&[3, 2, 3]).is_err());
        assert!(natural_unit_interval(&[1, 2]).is_ok());
        assert!(natural_unit_interval(&[0, 2]).is_err());
    }

    #[test]
    fn connected_step_function_counts_are_catalan() {
        // 1, 1, 2, 5, 14, 42 connected step functions for n = 1..6.
        let expected = [1usize, 1, 2, 5, 14, 42];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            let hs = connected_step_functions(n);
            assert_eq!(hs.len(), want, "n = {n}");
            for h in &hs {
                assert!(natural_unit_interval(h).unwrap().is_connected());
            }
        }
    }

    #[test]
    fn star_and_path_constructors() {
        assert_eq!(
            oriented_star(4, &[true, true, true]),
            g(4, &[(1, 4), (2, 4), (3, 4)])
        );
        assert_eq!(
            oriented_star(4, &[false, false, false]),
            g(4, &[(1, 2), (1, 3), (1, 4)])
        );
        assert_eq!(path_oriented(&[true, false]), g(3, &[(1, 2), (3, 2)]));
    }

    #[test]
    fn tree_enumeration_counts() {
        // Unlabeled trees: 1, 1, 1, 2, 3, 6, 11 for n = 1..7.
        let expected = [1usize, 1, 1, 2, 3, 6, 11];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(undirected_trees(i + 1).len(), want, "n = {}", i + 1);
        }
        assert_eq!(oriented_trees(2), vec![g(2, &[(1, 2)])]);
        // The three orientation classes of the 3-vertex path: directed path,
        // two sources, two sinks.
        assert_eq!(oriented_trees(3).len(), 3);
    }

    /// Independent route: enumerate naturally labeled connected DAGs and
    /// deduplicate by pairwise isomorphism over all vertex permutations.
    fn connected_dag_classes_by_pairwise_iso(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        let mut reps: Vec<OrientedGraph> = Vec::new();
        'subsets: for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let gr = OrientedGraph::new(n, edges).unwrap();
            if !gr.is_connected() {
                continue;
            }
            for rep in &reps {
                if are_isomorphic(rep, &gr) {
                    continue 'subsets;
                }
            }
            reps.push(gr);
        }
        reps.len()
    }

    fn are_isomorphic(a: &OrientedGraph, b: &OrientedGraph) -> bool {
        if a.n() != b.n() || a.num_edges() != b.num_edges() {
            return false;
        }
        let mut perm: Vec<usize> = (1..=a.n()).collect();
        loop {
            if &a.relabel(&perm) == b {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    #[test]
    fn connected_dag_classes_match_independent_route() {
        for n in 1..=4 {
            let fast = all_connected_dags(n).unwrap();
            assert_eq!(
                fast.len(),
                connected_dag_classes_by_pairwise_iso(n),
                "n = {n}"
            );
            // Canonical forms are pairwise distinct and idempotent.
            for gr in &fast {
                assert_eq!(&gr.canonical_form(), gr);
                assert!(gr.is_connected());
            }
        }
        assert_eq!(all_connected_dags(1).unwrap().len(), 1);
        assert_eq!(all_connected_dags(2).unwrap().len(), 1);
        assert_eq!(all_connected_dags(3).unwrap().len(), 4);
        assert!(matches!(
            all_connected_dags(8),
            Err(FamilyError::SizeGuard(_))
        ));
    }

    #[test]
    fn cycle_orientation_classes() {
        // All six acyclic orientations of the triangle are isomorphic; the
        // 4-cycle splits into natural, opposite-poles, and two-source
        // classes.
        assert_eq!(cycle_acyclic_orientations(3).len(), 1);
        assert_eq!(cycle_acyclic_orientations(4).len(), 3);
        for n in 3..=6 {
            let classes = cycle_acyclic_orientations(n);
            assert!(classes.contains(&natural_cycle(n).canonical_form()));
        }
    }
}
