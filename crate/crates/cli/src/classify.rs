//! Exhaustive classification of small connected DAGs by CQF symmetry, with
//! family tagging and a content-addressed on-disk result cache.
//!
//! One record per isomorphism class, keyed by the canonical graph. A class
//! is tagged `unit-interval-relabeling` when it is digraph-isomorphic to a
//! natural unit interval graph, `mixed-mountain` when isomorphic to a mixed
//! mountain graph, and `other` when neither. Cache entries are one JSON
//! record per file, named by the SHA-256 of the canonical graph JSON and
//! grouped by vertex count; a cache hit must be byte-identical to
//! recomputation, which `recheck` mode enforces.

use anyhow::{bail, Context, Result};
use cqf::composition::Composition;
use cqf::engine;
use cqf::families::{
    self, all_connected_dags, all_connected_dags_large, CliqueKind, MountainSpec,
    CONNECTED_DAG_GUARD, CONNECTED_DAG_HARD_LIMIT,
};
use cqf::graph::OrientedGraph;
use cqf::qsym;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

pub const TAG_UNIT_INTERVAL: &str = "unit-interval-relabeling";
pub const TAG_MIXED_MOUNTAIN: &str = "mixed-mountain";
pub const TAG_OTHER: &str = "other";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub graph: OrientedGraph,
    pub n: usize,
    pub num_edges: usize,
    pub symmetric: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<(Composition, Composition)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub e_positive: Option<bool>,
    pub family: Vec<String>,
}

/// Canonical forms of the family candidates at one vertex count.
pub struct FamilyIndex {
    unit_interval: HashSet<OrientedGraph>,
    mixed_mountain: HashSet<OrientedGraph>,
}

impl FamilyIndex {
    pub fn for_vertex_count(n: usize) -> Self {
        let unit_interval = families::connected_step_functions(n)
            .iter()
            .map(|h| {
                families::natural_unit_interval(h)
                    .expect("step functions are valid")
                    .canonical_form()
            })
            .collect();
        let mixed_mountain = all_mountain_specs(n)
            .iter()
            .map(|spec| families::mixed_mountain(spec).0.canonical_form())
            .collect();
        FamilyIndex {
            unit_interval,
            mixed_mountain,
        }
    }

    pub fn tags(&self, canonical: &OrientedGraph) -> Vec<String> {
        let mut tags = Vec::new();
        if self.unit_interval.contains(canonical) {
            tags.push(TAG_UNIT_INTERVAL.to_string());
        }
        if self.mixed_mountain.contains(canonical) {
            tags.push(TAG_MIXED_MOUNTAIN.to_string());
        }
        if tags.is_empty() {
            tags.push(TAG_OTHER.to_string());
        }
        tags
    }
}

/// Every mountain spec (clique size and kind sequence) with exactly `n`
/// vertices.
pub fn all_mountain_specs(n: usize) -> Vec<MountainSpec> {
    let mut out = Vec::new();
    for k in 2..=n {
        let mut kinds = Vec::new();
        extend_specs(k, n, 1, &mut kinds, &mut out);
    }
    out
}

fn extend_specs(
    k: usize,
    n: usize,
    used: usize,
    kinds: &mut Vec<CliqueKind>,
    out: &mut Vec<MountainSpec>,
) {
    if used == n && kinds.len() >= 2 {
        out.push(MountainSpec::new(k, kinds.clone()).expect("constructed within bounds"));
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
        extend_specs(k, n, used + step, kinds, out);
        kinds.pop();
    }
}

/// Classifies one canonical connected DAG.
pub fn classify_graph(canonical: &OrientedGraph, index: &FamilyIndex) -> ClassificationRecord {
    let x = engine::cqf(canonical);
    let witness = qsym::nonsymmetry_witness(&x);
    let symmetric = witness.is_none();
    let e_positive = if symmetric {
        Some(qsym::is_e_positive(&x).expect("symmetric by the witness check"))
    } else {
        None
    };
    ClassificationRecord {
        graph: canonical.clone(),
        n: canonical.n(),
        num_edges: canonical.num_edges(),
        symmetric,
        witness,
        e_positive,
        family: index.tags(canonical),
    }
}

pub struct ClassifyOptions {
    pub max_n: usize,
    pub cache_dir: Option<PathBuf>,
    pub recheck: bool,
    pub allow_large: bool,
}

#[derive(Debug)]
pub struct ClassifyOutput {
    pub records: Vec<ClassificationRecord>,
    pub cache_hits: usize,
    pub rechecked: usize,
}

/// Runs the classifier for every vertex count up to `max_n`, resuming from
/// the cache when one is configured. Records come back in a deterministic
/// order (vertex count, then canonical graph order).
pub fn classify(options: &ClassifyOptions) -> Result<ClassifyOutput> {
    if options.max_n > CONNECTED_DAG_HARD_LIMIT {
        bail!(
            "size guard: classification is hard-limited at n <= {}",
            CONNECTED_DAG_HARD_LIMIT
        );
    }
    if options.max_n > CONNECTED_DAG_GUARD && !options.allow_large {
        bail!(
            "size guard: classification beyond n = {} requires the long-running flag",
            CONNECTED_DAG_GUARD
        );
    }
    let mut records = Vec::new();
    let mut cache_hits = 0usize;
    let mut rechecked = 0usize;
    for n in 1..=options.max_n {
        let graphs = if n > CONNECTED_DAG_GUARD {
            all_connected_dags_large(n)
        } else {
            all_connected_dags(n)
        }
        .map_err(|e| anyhow::anyhow!("{e}"))?;
        let index = FamilyIndex::for_vertex_count(n);

        // Split into cached and fresh work before fanning out.
        let mut fresh = Vec::new();
        let mut cached: Vec<(usize, ClassificationRecord)> = Vec::new();
        for (slot, graph) in graphs.iter().enumerate() {
            match read_cached(options.cache_dir.as_deref(), graph)? {
                Some(record) if !options.recheck => {
                    cache_hits += 1;
                    cached.push((slot, record));
                }
                Some(record) => {
                    cache_hits += 1;
                    rechecked += 1;
                    let fresh_record = classify_graph(graph, &index);
                    let old = serde_json::to_string(&record)?;
                    let new = serde_json::to_string(&fresh_record)?;
                    if old != new {
                        bail!(
                            "cache mismatch for {}: cached {old} vs recomputed {new}",
                            cache_key(graph)
                        );
                    }
                    cached.push((slot, record));
                }
                None => fresh.push((slot, graph.clone())),
            }
        }
        let computed: Vec<(usize, ClassificationRecord)> = fresh
            .into_par_iter()
            .map(|(slot, graph)| (slot, classify_graph(&graph, &index)))
            .collect();
        for (_, record) in &computed {
            write_cached(options.cache_dir.as_deref(), record)?;
        }
        let mut level: Vec<(usize, ClassificationRecord)> = cached;
        level.extend(computed);
        level.sort_by_key(|(slot, _)| *slot);
        records.extend(level.into_iter().map(|(_, r)| r));
    }
    Ok(ClassifyOutput {
        records,
        cache_hits,
        rechecked,
    })
}

pub fn cache_key(canonical: &OrientedGraph) -> String {
    let json = serde_json::to_string(canonical).expect("graph serializes");
    let mut hasher = Sha256::new();
    hasher.update(json.as_bytes());
    format!("{:x}", hasher.finalize())
}

fn cache_path(dir: &Path, graph: &OrientedGraph) -> PathBuf {
    dir.join(format!("n{}", graph.n()))
        .join(format!("{}.json", cache_key(graph)))
}

fn read_cached(dir: Option<&Path>, graph: &OrientedGraph) -> Result<Option<ClassificationRecord>> {
    let Some(dir) = dir else { return Ok(None) };
    let path = cache_path(dir, graph);
    if !path.exists() {
        return Ok(None);
    }
    let text = fs::read_to_string(&path)
        .with_context(|| format!("reading cache entry {}", path.display()))?;
    let record: ClassificationRecord = serde_json::from_str(&text)
        .with_context(|| format!("parsing cache entry {}", path.display()))?;
    Ok(Some(record))
}

/// Atomic single-record write: temp file in the same directory, then rename.
fn write_cached(dir: Option<&Path>, record: &ClassificationRecord) -> Result<()> {
    let Some(dir) = dir else { return Ok(()) };
    let path = cache_path(dir, &record.graph);
    let parent = path.parent().expect("cache entries live in a subdirectory");
    fs::create_dir_all(parent)?;
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_string(record)?)?;
    fs::rename(&tmp, &path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mountain_specs_at_small_counts() {
        // n = 3: only the triangle (k = 2, two full cliques).
        let specs = all_mountain_specs(3);
        assert_eq!(specs.len(), 1);
        assert_eq!(specs[0].k, 2);
        // n = 5: the 4-cycle... n = p + 1 for k = 2 gives the 5-cycle at
        // p = 4, and k = 3 gives the double triangle.
        let specs = all_mountain_specs(5);
        assert_eq!(specs.len(), 2);
    }

    #[test]
    fn family_tags_at_three_vertices() {
        let index = FamilyIndex::for_vertex_count(3);
        let triangle = OrientedGraph::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap();
        let tags = index.tags(&triangle.canonical_form());
        assert!(tags.contains(&TAG_UNIT_INTERVAL.to_string()));
        assert!(tags.contains(&TAG_MIXED_MOUNTAIN.to_string()));
        let join = OrientedGraph::new(3, vec![(1, 3), (2, 3)]).unwrap();
        assert_eq!(index.tags(&join.canonical_form()), vec![TAG_OTHER]);
    }

    #[test]
    fn classification_at_three_vertices() {
        let options = ClassifyOptions {
            max_n: 3,
            cache_dir: None,
            recheck: false,
            allow_large: false,
        };
        let output = classify(&options).unwrap();
        // 1 + 1 + 4 classes.
        assert_eq!(output.records.len(), 6);
        let symmetric: Vec<_> = output.records.iter().filter(|r| r.symmetric).collect();
        // Single vertex, edge, directed path, triangle.
        assert_eq!(symmetric.len(), 4);
        for record in &output.records {
            assert_eq!(record.symmetric, record.e_positive.is_some());
            assert_eq!(record.symmetric, record.witness.is_none());
            if record.symmetric {
                assert_ne!(record.family, vec![TAG_OTHER]);
                assert_eq!(record.e_positive, Some(true));
            }
        }
    }

    #[test]
    fn cache_round_trip_and_recheck() {
        let dir = tempfile::tempdir().unwrap();
        let options = ClassifyOptions {
            max_n: 3,
            cache_dir: Some(dir.path().to_path_buf()),
            recheck: false,
            allow_large: false,
        };
        let first = classify(&options).unwrap();
        assert_eq!(first.cache_hits, 0);
        let second = classify(&options).unwrap();
        assert_eq!(second.cache_hits, first.records.len());
        assert_eq!(first.records, second.records);
        // Recheck recomputes every hit and verifies byte equality.
        let recheck = ClassifyOptions {
            recheck: true,
            cache_dir: Some(dir.path().to_path_buf()),
            ..options
        };
        let third = classify(&recheck).unwrap();
        assert_eq!(third.rechecked, first.records.len());
        assert_eq!(third.records, first.records);
    }

    #[test]
    fn size_guards() {
        let options = ClassifyOptions {
            max_n: 8,
            cache_dir: None,
            recheck: false,
            allow_large: false,
        };
        assert!(classify(&options)
            .unwrap_err()
            .to_string()
            .contains("size guard"));
        let options = ClassifyOptions {
            max_n: 9,
            cache_dir: None,
            recheck: false,
            allow_large: true,
        };
        assert!(classify(&options)
            .unwrap_err()
            .to_string()
            .contains("size guard"));
    }
}
