//! Compositions and partitions of a nonnegative integer. Compositions index
//! the monomial quasisymmetric basis; partitions index the monomial and
//! elementary symmetric bases.

use serde::{Deserialize, Deserializer, Serialize};
use std::fmt;

/// A finite sequence of strictly positive parts. The empty composition (of 0)
/// indexes the unit of the algebra.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "parts must be positive");
        Composition { parts }
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The underlying partition: parts sorted weakly decreasing.
    pub fn partition(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The composition `(k*a_1, ..., k*a_m)`.
    pub fn scaled(&self, k: usize) -> Composition {
        assert!(k >= 1);
        Composition {
            parts: self.parts.iter().map(|p| p * k).collect(),
        }
    }

    /// Swaps parts `a` and `a+1` (1-based positions); both must exist.
    pub fn with_adjacent_parts_swapped(&self, a: usize) -> Composition {
        assert!(a >= 1 && a < self.parts.len());
        let mut parts = self.parts.clone();
        parts.swap(a - 1, a);
        Composition { parts }
    }

    /// Whether the word is strictly lexicographically smaller than all of its
    /// nontrivial cyclic rotations.
    pub fn is_lyndon(&self) -> bool {
        let w = &self.parts;
        for i in 1..w.len() {
            let rotation = w[i..].iter().chain(w[..i].iter());
            if !(w.iter().lt(rotation)) {
                return false;
            }
        }
        true
    }

    /// All compositions of `n` in lexicographic order. `n = 0` gives the
    /// empty composition.
    pub fn all_of(n: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if remaining == 0 {
                out.push(Composition {
                    parts: current.clone(),
                });
                return;
            }
            for first in 1..=remaining {
                current.push(first);
                rec(remaining - first, current, out);
                current.pop();
            }
        }
        rec(n, &mut current, &mut out);
        out
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        if parts.contains(&0) {
            return Err(serde::de::Error::custom("composition parts must be >= 1"));
        }
        Ok(Composition { parts })
    }
}

/// A weakly decreasing sequence of strictly positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "parts must be positive");
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn as_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
        }
    }

    /// The conjugate partition (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// All distinct rearrangements of the parts, in lexicographic order.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut remaining = self.parts.clone();
        let mut current = Vec::new();
        fn rec(remaining: &mut Vec<usize>, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if remaining.is_empty() {
                out.push(Composition {
                    parts: current.clone(),
                });
                return;
            }
            let mut tried = Vec::new();
            for i in 0..remaining.len() {
                let part = remaining[i];
                if tried.contains(&part) {
                    continue;
                }
                tried.push(part);
                remaining.remove(i);
                current.push(part);
                rec(remaining, current, out);
                current.pop();
                remaining.insert(i, part);
            }
        }
        rec(&mut remaining, &mut current, &mut out);
        out.sort();
        out
    }

    /// All partitions of `n` in lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: current.clone(),
                });
                return;
            }
            for first in (1..=remaining.min(max)).rev() {
                current.push(first);
                rec(remaining - first, first, current, out);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out);
        out.sort();
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join(&self.parts))
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(serde::de::Error::custom(
                "partition parts must be positive and weakly decreasing",
            ));
        }
        Ok(Partition { parts })
    }
}

fn join(parts: &[usize]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn compositions_of_small_n() {
        assert_eq!(Composition::all_of(0), vec![Composition::empty()]);
        assert_eq!(
            Composition::all_of(3),
            vec![c(&[1, 1, 1]), c(&[1, 2]), c(&[2, 1]), c(&[3])]
        );
        assert_eq!(Composition::all_of(6).len(), 32);
    }

    #[test]
    fn partitions_and_conjugates() {
        let parts = Partition::all_of(4);
        assert_eq!(parts.len(), 5);
        assert_eq!(
            Partition::new(vec![3, 1]).conjugate(),
            Partition::new(vec![2, 1, 1])
        );
        for p in Partition::all_of(6) {
            assert_eq!(p.conjugate().conjugate(), p);
            assert_eq!(p.conjugate().weight(), 6);
        }
    }

    #[test]
    fn rearrangement_classes() {
        let p = Partition::new(vec![2, 1]);
        assert_eq!(p.rearrangements(), vec![c(&[1, 2]), c(&[2, 1])]);
        let p = Partition::new(vec![1, 1, 1]);
        assert_eq!(p.rearrangements(), vec![c(&[1, 1, 1])]);
        // Every composition of 5 appears in exactly one rearrangement class.
        let mut seen = Vec::new();
        for lambda in Partition::all_of(5) {
            seen.extend(lambda.rearrangements());
        }
        seen.sort();
        assert_eq!(seen, Composition::all_of(5));
    }

    #[test]
    fn lyndon_predicate() {
        assert!(c(&[1]).is_lyndon());
        assert!(c(&[2]).is_lyndon());
        assert!(!c(&[1, 1]).is_lyndon());
        assert!(c(&[1, 2]).is_lyndon());
        assert!(!c(&[2, 1]).is_lyndon());
        assert!(!c(&[1, 1, 1]).is_lyndon());
        assert!(c(&[1, 1, 2]).is_lyndon());
    }

    #[test]
    fn lex_order_matches_vec_order() {
        assert!(c(&[1, 2]) < c(&[2]));
        assert!(c(&[1, 2]) < c(&[1, 2, 1]));
        assert!(c(&[2, 1]) > c(&[1, 2]));
    }
}
