//! The compute pipeline: CQF of a graph together with its symmetry,
//! e-positivity, and palindromicity report.

use cqf::composition::Composition;
use cqf::engine;
use cqf::graph::OrientedGraph;
use cqf::qsym::{self, QSymElement, SymExpansion};
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PalindromeCenter {
    /// Coefficients mirrored over the window `[0, |E|]`.
    Edges,
    /// Each coefficient mirrored about its own support midpoint.
    Own,
}

#[derive(Serialize)]
pub struct ComputeReport {
    pub graph: OrientedGraph,
    pub num_edges: usize,
    pub cqf: QSymElement,
    pub symmetric: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(Composition, Composition)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_positive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_expansion: Option<SymExpansion>,
    pub palindrome_center: PalindromeCenter,
    pub palindromic: bool,
}

pub fn compute(graph: &OrientedGraph, center: PalindromeCenter) -> ComputeReport {
    let x = engine::cqf(graph);
    let witness = qsym::nonsymmetry_witness(&x);
    let symmetric = witness.is_none();
    let (e_positive, e_expansion) = if symmetric {
        let expansion = qsym::e_expand(&x).expect("symmetric by the witness check");
        let positive = expansion.terms().all(|(_, p)| p.is_nonnegative());
        (Some(positive), Some(expansion))
    } else {
        (None, None)
    };
    let palindromic = match center {
        PalindromeCenter::Edges => qsym::is_palindromic(&x, graph.num_edges()),
        PalindromeCenter::Own => qsym::is_palindromic_own_center(&x),
    };
    ComputeReport {
        graph: graph.clone(),
        num_edges: graph.num_edges(),
        cqf: x,
        symmetric,
        witness,
        e_positive,
        e_expansion,
        palindrome_center: center,
        palindromic,
    }
}

impl ComputeReport {
    pub fn human_readable(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "graph: n = {}, {} edges\n",
            self.graph.n(),
            self.num_edges
        ));
        out.push_str("cqf (monomial basis):\n");
        for (alpha, poly) in self.cqf.terms() {
            out.push_str(&format!("  M{alpha:?}: {poly}\n"));
        }
        match &self.witness {
            None => out.push_str("symmetric: yes\n"),
            Some((a, b)) => {
                out.push_str(&format!(
                    "symmetric: no (coefficients of {a:?} and {b:?} differ)\n"
                ));
            }
        }
        if let Some(expansion) = &self.e_expansion {
            out.push_str("elementary basis:\n");
            for (lambda, poly) in expansion.terms() {
                out.push_str(&format!("  e{lambda:?}: {poly}\n"));
            }
            out.push_str(&format!(
                "e-positive: {}\n",
                if self.e_positive == Some(true) {
                    "yes"
                } else {
                    "no"
                }
            ));
        }
        let center = match self.palindrome_center {
            PalindromeCenter::Edges => "|E|/2".to_string(),
            PalindromeCenter::Own => "own support midpoint".to_string(),
        };
        out.push_str(&format!(
            "palindromic about {center}: {}\n",
            if self.palindromic { "yes" } else { "no" }
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use cqf::qpoly::QPoly;

    #[test]
    fn compute_report_on_the_single_edge() {
        let g = OrientedGraph::new(2, vec![(1, 2)]).unwrap();
        let report = compute(&g, PalindromeCenter::Edges);
        assert!(report.symmetric);
        assert_eq!(report.e_positive, Some(true));
        assert!(report.palindromic);
        assert_eq!(
            report.cqf.coeff(&Composition::new(vec![1, 1])),
            QPoly::from_i64s(&[1, 1])
        );
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["num_edges"], 2 - 1);
        assert_eq!(json["cqf"]["terms"][0]["poly"][1], 1);
        assert!(json.get("witness").is_none());
    }

    #[test]
    fn compute_report_on_the_two_source_join() {
        let g = OrientedGraph::new(3, vec![(1, 3), (2, 3)]).unwrap();
        let report = compute(&g, PalindromeCenter::Edges);
        assert!(!report.symmetric);
        let (a, b) = report.witness.clone().unwrap();
        assert_eq!(a, Composition::new(vec![2, 1]));
        assert_eq!(b, Composition::new(vec![1, 2]));
        assert_eq!(report.e_positive, None);
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains(r#""witness":[[2,1],[1,2]]"#));
    }
}
