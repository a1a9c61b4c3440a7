//! Machine-checked verdicts for the statements the tool can test
//! exhaustively at desk scale: the reversal identity, the nonsymmetry
//! conditions for multi-source DAGs, the tree and cycle characterizations,
//! symmetry and e-positivity of the mountain families, invariance of the
//! CQF under clique swaps, symmetry of products, and coefficient
//! palindromicity.

use anyhow::{anyhow, Result};
use cqf::engine;
use cqf::families::{
    self, all_connected_dags, bottomless_mountain, mixed_mountain, mountain, natural_cycle,
    swap_graph, MountainGeometry, MountainSpec,
};
use cqf::graph::OrientedGraph;
use cqf::qsym::{self, quasi_shuffle, QSymElement};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: String,
    pub pass: bool,
    pub checked: usize,
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<String>,
}

impl CheckOutcome {
    fn new(id: &str) -> Self {
        CheckOutcome {
            id: id.into(),
            pass: true,
            checked: 0,
            detail: String::new(),
            counterexamples: Vec::new(),
        }
    }

    fn fail(&mut self, message: String) {
        self.pass = false;
        if self.counterexamples.len() < 20 {
            self.counterexamples.push(message);
        }
    }
}

/// Reversal identity: the CQF of the edge-reversed graph equals the CQF
/// with every coefficient mirrored over the edge-count window.
pub fn lemma_rev(max_n: usize) -> Result<CheckOutcome> {
    let mut outcome = CheckOutcome::new("lemma-rev");
    for n in 1..=max_n {
        for g in all_connected_dags(n).map_err(|e| anyhow!("{e}"))? {
            outcome.checked += 1;
            if !engine::reversal_identity_check(&g) {
                outcome.fail(format!("{g:?}"));
            }
        }
    }
    outcome.detail = format!("reversal identity on {} connected DAGs", outcome.checked);
    Ok(outcome)
}

/// One pass over all connected DAG classes up to `max_n`, recording the
/// sweep used by several checks: CQF symmetry plus source, sink, and
/// antichain statistics.
pub struct DagSweep {
    pub entries: Vec<DagEntry>,
}

pub struct DagEntry {
    pub graph: OrientedGraph,
    pub cqf: QSymElement,
    pub symmetric: bool,
    pub sources: usize,
    pub sinks: usize,
    pub antichain: usize,
}

pub fn sweep_connected_dags(max_n: usize) -> Result<DagSweep> {
    let mut graphs = Vec::new();
    for n in 1..=max_n {
        graphs.extend(all_connected_dags(n).map_err(|e| anyhow!("{e}"))?);
    }
    let entries: Vec<DagEntry> = graphs
        .into_par_iter()
        .map(|graph| {
            let x = engine::cqf(&graph);
            let symmetric = qsym::is_symmetric(&x);
            let (sources, sinks) = graph.sources_and_sinks();
            let antichain = graph.max_antichain().len();
            DagEntry {
                graph,
                symmetric,
                sources: sources.len(),
                sinks: sinks.len(),
                antichain,
                cqf: x,
            }
        })
        .collect();
    Ok(DagSweep { entries })
}

/// Unequal source and sink counts force a nonsymmetric CQF.
pub fn lemma_source_sink(sweep: &DagSweep) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("lemma-source-sink");
    for e in &sweep.entries {
        if e.sources != e.sinks {
            outcome.checked += 1;
            if e.symmetric {
                outcome.fail(format!("{:?}", e.graph));
            }
        }
    }
    outcome.detail = format!("{} graphs with unequal source/sink counts", outcome.checked);
    outcome
}

/// An antichain beating the source count forces a nonsymmetric CQF.
pub fn lemma_antichain(sweep: &DagSweep) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("lemma-antichain");
    for e in &sweep.entries {
        if e.antichain > e.sources {
            outcome.checked += 1;
            if e.symmetric {
                outcome.fail(format!("{:?}", e.graph));
            }
        }
    }
    outcome.detail = format!(
        "{} graphs whose antichain beats the source count",
        outcome.checked
    );
    outcome
}

/// Two or more sources force a nonsymmetric CQF (and by reversal, two or
/// more sinks); together with the antichain condition this pins symmetric
/// connected DAGs down to one source, one sink, and antichain one.
pub fn thm_dag(sweep: &DagSweep) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("thm-dag");
    for e in &sweep.entries {
        if e.sources >= 2 || e.sources != e.sinks || e.antichain > e.sources {
            outcome.checked += 1;
            if e.symmetric {
                outcome.fail(format!("{:?}", e.graph));
            }
        }
    }
    outcome.detail = format!(
        "{} graphs flagged by the source/sink/antichain conditions",
        outcome.checked
    );
    outcome
}

/// Every symmetric CQF in the sweep has all coefficients palindromic over
/// the edge-count window.
pub fn palindromicity(sweep: &DagSweep) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("palindromic");
    for e in &sweep.entries {
        if e.symmetric {
            outcome.checked += 1;
            if !qsym::is_palindromic(&e.cqf, e.graph.num_edges()) {
                outcome.fail(format!("{:?}", e.graph));
            }
        }
    }
    outcome.detail = format!("{} symmetric CQFs checked", outcome.checked);
    outcome
}

/// Products of CQFs of connected graphs: the product is symmetric exactly
/// when both factors are.
pub fn thm_product(max_each: usize) -> Result<CheckOutcome> {
    let mut outcome = CheckOutcome::new("thm-product");
    let mut graphs = Vec::new();
    for n in 1..=max_each {
        graphs.extend(all_connected_dags(n).map_err(|e| anyhow!("{e}"))?);
    }
    let cqfs: Vec<(OrientedGraph, QSymElement, bool)> = graphs
        .into_iter()
        .map(|g| {
            let x = engine::cqf(&g);
            let s = qsym::is_symmetric(&x);
            (g, x, s)
        })
        .collect();
    for (ga, xa, sa) in &cqfs {
        for (gb, xb, sb) in &cqfs {
            outcome.checked += 1;
            let product_symmetric = qsym::is_symmetric(&quasi_shuffle(xa, xb));
            if product_symmetric != (*sa && *sb) {
                outcome.fail(format!("{ga:?} x {gb:?}"));
            }
        }
    }
    outcome.detail = format!("{} products of connected CQFs", outcome.checked);
    Ok(outcome)
}

/// Oriented trees: the CQF is symmetric exactly for directed paths.
pub fn cor_trees(max_n: usize) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("cor-trees");
    for n in 1..=max_n {
        let directed_path =
            families::path_oriented(&vec![true; n.saturating_sub(1)]).canonical_form();
        for tree in families::oriented_trees(n) {
            outcome.checked += 1;
            let symmetric = qsym::is_symmetric(&engine::cqf(&tree));
            let is_path = tree == directed_path;
            if symmetric != is_path {
                outcome.fail(format!("{tree:?} (symmetric: {symmetric})"));
            }
        }
    }
    outcome.detail = format!("{} oriented trees", outcome.checked);
    outcome
}

/// Acyclic orientations of cycles: symmetric exactly for the natural one.
pub fn cor_cycles(max_n: usize) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("cor-cycles");
    for n in 3..=max_n {
        let natural = natural_cycle(n).canonical_form();
        for cycle in families::cycle_acyclic_orientations(n) {
            outcome.checked += 1;
            let symmetric = qsym::is_symmetric(&engine::cqf(&cycle));
            if symmetric != (cycle == natural) {
                outcome.fail(format!("{cycle:?} (symmetric: {symmetric})"));
            }
        }
    }
    outcome.detail = format!("{} oriented cycles", outcome.checked);
    outcome
}

fn check_symmetric_and_e_positive(outcome: &mut CheckOutcome, label: &str, graph: &OrientedGraph) {
    outcome.checked += 1;
    let x = engine::cqf(graph);
    match qsym::is_e_positive(&x) {
        Err(err) => outcome.fail(format!("{label}: {err}")),
        Ok(false) => outcome.fail(format!("{label}: symmetric but not e-positive")),
        Ok(true) => {}
    }
}

/// All mountain graphs within the vertex budget are symmetric and
/// e-positive.
pub fn thm_mountain(max_vertices: usize) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("thm-mountain");
    for (p, k, geom) in mountain_instances(max_vertices) {
        check_symmetric_and_e_positive(&mut outcome, &format!("mountain({p},{k})"), &geom.graph());
    }
    outcome.detail = format!("{} mountain graphs", outcome.checked);
    outcome
}

/// All bottomless mountain graphs within the vertex budget are symmetric
/// and e-positive.
pub fn thm_bottomless(max_vertices: usize) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("thm-bottomless");
    for (p, k, geom) in bottomless_instances(max_vertices) {
        check_symmetric_and_e_positive(
            &mut outcome,
            &format!("bottomless({p},{k})"),
            &geom.graph(),
        );
    }
    outcome.detail = format!("{} bottomless mountain graphs", outcome.checked);
    outcome
}

/// All mixed mountain graphs within the vertex budget are symmetric and
/// e-positive.
pub fn thm_mixed(max_vertices: usize) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("thm-mixed");
    let specs = mixed_instances(max_vertices);
    let failures: Vec<Option<String>> = specs
        .par_iter()
        .map(|spec| {
            let (graph, _) = mixed_mountain(spec);
            let x = engine::cqf(&graph);
            match qsym::is_e_positive(&x) {
                Err(err) => Some(format!("{spec:?}: {err}")),
                Ok(false) => Some(format!("{spec:?}: symmetric but not e-positive")),
                Ok(true) => None,
            }
        })
        .collect();
    outcome.checked = specs.len();
    for failure in failures.into_iter().flatten() {
        outcome.fail(failure);
    }
    outcome.detail = format!("{} mixed mountain specs", outcome.checked);
    outcome
}

/// The CQF is invariant under every valid clique swap.
pub fn thm_swap_all(max_vertices: usize) -> CheckOutcome {
    let mut outcome = CheckOutcome::new("thm-swap");
    let mut cache: HashMap<OrientedGraph, QSymElement> = HashMap::new();
    for spec in mixed_instances(max_vertices) {
        let (graph, geom) = mixed_mountain(&spec);
        for site in 0..spec.p().saturating_sub(1) {
            let Ok((swapped, _)) = swap_graph(&geom, site) else {
                continue;
            };
            outcome.checked += 1;
            let left = cache
                .entry(graph.clone())
                .or_insert_with(|| engine::cqf(&graph))
                .clone();
            let right = cache
                .entry(swapped.clone())
                .or_insert_with(|| engine::cqf(&swapped))
                .clone();
            if left != right {
                outcome.fail(format!("{spec:?} at site {site}"));
            }
        }
    }
    outcome.detail = format!("{} swap sites", outcome.checked);
    outcome
}

/// CQF invariance under one specific swap site.
pub fn thm_swap_spec(spec: &MountainSpec, site: usize) -> Result<CheckOutcome> {
    let mut outcome = CheckOutcome::new("thm-swap");
    let (graph, geom) = mixed_mountain(spec);
    let (swapped, _) = swap_graph(&geom, site).map_err(|e| anyhow!("{e}"))?;
    outcome.checked = 1;
    if engine::cqf(&graph) != engine::cqf(&swapped) {
        outcome.fail(format!("{spec:?} at site {site}"));
    }
    outcome.detail = format!("swap at site {site} of {spec:?}");
    Ok(outcome)
}

/// All `(p, k)` mountains with at most `max_vertices` vertices.
pub fn mountain_instances(max_vertices: usize) -> Vec<(usize, usize, MountainGeometry)> {
    let mut out = Vec::new();
    for k in 2..=max_vertices {
        for p in 2..=max_vertices {
            if p * (k - 1) + 1 > max_vertices {
                break;
            }
            let (_, geom) = mountain(p, k).expect("parameters in range");
            out.push((p, k, geom));
        }
    }
    out
}

/// All `(p, k)` bottomless mountains with at most `max_vertices` vertices.
pub fn bottomless_instances(max_vertices: usize) -> Vec<(usize, usize, MountainGeometry)> {
    let mut out = Vec::new();
    for k in 3..=max_vertices {
        for p in 2..=max_vertices {
            if 1 + p * k > max_vertices {
                break;
            }
            let (_, geom) = bottomless_mountain(p, k).expect("parameters in range");
            out.push((p, k, geom));
        }
    }
    out
}

/// All mixed mountain specs (including the pure ones) with at most
/// `max_vertices` vertices.
pub fn mixed_instances(max_vertices: usize) -> Vec<MountainSpec> {
    let mut out = Vec::new();
    for n in 3..=max_vertices {
        out.extend(crate::classify::all_mountain_specs(n));
    }
    out
}
