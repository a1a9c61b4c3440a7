//! Cross-module sweeps: identities that tie the graph structure, the
//! coloring engine, and the algebra together on exhaustive small cases.

use cqf::bijections::{
    colored_subgraph_components, verify_l_automorphism, verify_psi, DEFAULT_MAX_COLORINGS,
};
use cqf::composition::Composition;
use cqf::engine::{self, enumerate_weight_colorings};
use cqf::families::{self, all_connected_dags, mixed_mountain, mountain, CliqueKind, MountainSpec};
use cqf::graph::OrientedGraph;
use cqf::qsym;

/// All naturally labeled DAGs on `n` vertices.
fn natural_dags(n: usize) -> impl Iterator<Item = OrientedGraph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    (0u32..(1 << pairs.len())).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        OrientedGraph::new(n, edges).expect("natural labelings are acyclic")
    })
}

#[test]
fn dilworth_equality_and_source_sink_covers_up_to_six_vertices() {
    for n in 1..=6 {
        for g in natural_dags(n) {
            let antichain = g.max_antichain();
            let cover = g.min_chain_cover();
            assert_eq!(cover.len(), antichain.len(), "{g:?}");
            // The reported antichain really is one.
            let closure = g.poset_closure();
            for &u in &antichain {
                for &v in &antichain {
                    assert!(u == v || !closure.comparable(u, v), "{g:?}");
                }
            }
            // Qualifying graphs admit a one-source-one-sink-per-chain cover.
            let (sources, sinks) = g.sources_and_sinks();
            if g.is_connected() && sources.len() == sinks.len() && sources.len() == antichain.len()
            {
                let cover = g.source_sink_chain_cover().expect("cover must exist");
                for chain in &cover.chains {
                    assert_eq!(chain.iter().filter(|v| sources.contains(v)).count(), 1);
                    assert_eq!(chain.iter().filter(|v| sinks.contains(v)).count(), 1);
                }
            }
        }
    }
}

#[test]
fn reversal_swaps_sources_and_sinks_on_all_small_connected_dags() {
    for n in 1..=5 {
        for g in all_connected_dags(n).unwrap() {
            let (s, t) = g.sources_and_sinks();
            let (rs, rt) = g.reverse().sources_and_sinks();
            assert_eq!((rs, rt), (t, s), "{g:?}");
            assert_eq!(g.reverse().reverse(), g);
        }
    }
}

#[test]
fn disconnected_graphs_are_symmetric_iff_every_component_is() {
    // All two- and three-component unions with at most 6 vertices total.
    let mut parts: Vec<OrientedGraph> = Vec::new();
    for n in 1..=4 {
        parts.extend(all_connected_dags(n).unwrap());
    }
    let shift = |g: &OrientedGraph, by: usize| -> Vec<(usize, usize)> {
        g.edges().iter().map(|&(u, v)| (u + by, v + by)).collect()
    };
    let mut checked = 0usize;
    for a in &parts {
        for b in &parts {
            let total = a.n() + b.n();
            if total > 6 {
                continue;
            }
            let mut edges = a.edges().to_vec();
            edges.extend(shift(b, a.n()));
            let union = OrientedGraph::new(total, edges).unwrap();
            let union_symmetric = qsym::is_symmetric(&engine::cqf(&union));
            let parts_symmetric =
                qsym::is_symmetric(&engine::cqf(a)) && qsym::is_symmetric(&engine::cqf(b));
            assert_eq!(union_symmetric, parts_symmetric, "{a:?} + {b:?}");
            checked += 1;
            // A third single-vertex component changes nothing.
            if total < 6 {
                let edges = union.edges().to_vec();
                let with_isolated = OrientedGraph::new(total + 1, edges).unwrap();
                assert_eq!(
                    qsym::is_symmetric(&engine::cqf(&with_isolated)),
                    parts_symmetric,
                    "{a:?} + {b:?} + point"
                );
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn union_cqf_is_the_product_of_component_cqfs() {
    for n in 2..=5 {
        for g in natural_dags(n).step_by(3) {
            let components = g.connected_components();
            assert_eq!(
                engine::cqf_disjoint_union(&components),
                engine::cqf(&g),
                "{g:?}"
            );
        }
    }
}

#[test]
fn colored_subgraph_components_are_paths_or_the_lower_cycle() {
    // Every packed proper coloring of the small mountains, every adjacent
    // color pair: components always land in the two allowed shapes.
    for (p, k) in [(2, 3), (3, 2), (2, 2)] {
        let (g, geom) = mountain(p, k).unwrap();
        let mut checked = 0usize;
        for alpha in Composition::all_of(g.n()) {
            for kappa in enumerate_weight_colorings(&g, &alpha) {
                for a in 1..=alpha.len() {
                    colored_subgraph_components(&g, &geom, &kappa, a)
                        .unwrap_or_else(|e| panic!("({p},{k}) {kappa:?} a={a}: {e}"));
                    checked += 1;
                }
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn bijections_certify_the_symmetry_the_engine_computes() {
    // The avoids-class involution plus the covers-class automorphism pair
    // every weight class with its adjacent-transposed class, which forces
    // the coefficient equalities behind the direct symmetry verdict.
    let (g, geom) = mountain(2, 3).unwrap();
    let psi_report = verify_psi(&geom, None, DEFAULT_MAX_COLORINGS).unwrap();
    let lauto_report = verify_l_automorphism(&geom, None, DEFAULT_MAX_COLORINGS).unwrap();
    assert!(psi_report.passed() && psi_report.surjective);
    assert!(lauto_report.passed() && lauto_report.surjective);
    assert!(qsym::is_symmetric(&engine::cqf(&g)));
}

#[test]
fn mixed_mountain_construction_invariants() {
    // Natural labeling, connectivity, and the vertex-count formula for
    // every spec with at most 8 vertices.
    let mut checked = 0usize;
    for n in 3..=8 {
        for k in 2..=n {
            for spec in specs_with(k, n) {
                let (g, geom) = mixed_mountain(&spec);
                assert_eq!(g.n(), n);
                assert!(g.is_naturally_labeled(), "{spec:?}");
                assert!(g.is_connected(), "{spec:?}");
                assert_eq!(geom.lowers().len(), spec.p() + 1);
                assert_eq!(geom.bottom_edge(), (1, n));
                checked += 1;
            }
        }
    }
    // One triangle chain per count, the k >= 3 shapes from five vertices up.
    assert_eq!(checked, 17);
}

fn specs_with(k: usize, n: usize) -> Vec<MountainSpec> {
    let mut out = Vec::new();
    let mut kinds = Vec::new();
    fn rec(
        k: usize,
        n: usize,
        used: usize,
        kinds: &mut Vec<CliqueKind>,
        out: &mut Vec<MountainSpec>,
    ) {
        if used == n && kinds.len() >= 2 {
            out.push(MountainSpec::new(k, kinds.clone()).unwrap());
        }
        if used >= n {
            return;
        }
        for kind in [CliqueKind::Full, CliqueKind::Bottomless] {
            if kind == CliqueKind::Bottomless && k < 3 {
                continue;
            }
            let step = match kind {
                CliqueKind::Full => k - 1,
                CliqueKind::Bottomless => k,
            };
            if used + step > n {
                continue;
            }
            kinds.push(kind);
            rec(k, n, used + step, kinds, out);
            kinds.pop();
        }
    }
    rec(k, n, 1, &mut kinds, &mut out);
    out
}

#[test]
fn families_feeding_the_classifier_are_deterministic() {
    let first = all_connected_dags(4).unwrap();
    let second = all_connected_dags(4).unwrap();
    assert_eq!(first, second);
    let trees = families::oriented_trees(5);
    assert_eq!(trees, families::oriented_trees(5));
}
