//! Homogeneous quasisymmetric and symmetric functions with `QPoly`
//! coefficients, stored exactly in the monomial quasisymmetric basis.
//!
//! A degree-n element is a finite map from compositions of n to nonzero
//! coefficient polynomials. Since a composition of n has at most n parts,
//! this representation is exact for elements of the full algebra in
//! infinitely many variables; no variable truncation is involved anywhere.

use crate::composition::{Composition, Partition};
use crate::qpoly::QPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QsymError {
    #[error("element is not symmetric: coefficients of {0:?} and {1:?} differ")]
    NotSymmetric(Composition, Composition),
    #[error("determinant coefficients are not divisible by {0}!")]
    NonIntegralDivision(usize),
}

/// A homogeneous element of the quasisymmetric function algebra in the
/// monomial basis. Absent compositions have coefficient zero. Degree 0 is
/// the scalar line (unit = empty composition).
#[derive(Clone, PartialEq, Eq)]
pub struct QSymElement {
    degree: usize,
    terms: BTreeMap<Composition, QPoly>,
}

impl QSymElement {
    pub fn zero(degree: usize) -> Self {
        QSymElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative unit (degree 0).
    pub fn unit() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Composition::empty(), QPoly::one());
        QSymElement { degree: 0, terms }
    }

    /// The monomial basis element indexed by `alpha`.
    pub fn monomial(alpha: Composition) -> Self {
        Self::single_term(alpha, QPoly::one())
    }

    pub fn single_term(alpha: Composition, coeff: QPoly) -> Self {
        let degree = alpha.weight();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(alpha, coeff);
        }
        QSymElement { degree, terms }
    }

    pub fn from_terms(
        degree: usize,
        terms: impl IntoIterator<Item = (Composition, QPoly)>,
    ) -> Self {
        let mut out = Self::zero(degree);
        for (alpha, coeff) in terms {
            out.add_term(&alpha, &coeff);
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &Composition) -> QPoly {
        self.terms.get(alpha).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &QPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, alpha: &Composition, coeff: &QPoly) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(alpha.weight(), self.degree, "homogeneity violated");
        let entry = self.terms.entry(alpha.clone()).or_insert_with(QPoly::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(alpha);
        }
    }

    pub fn add(&self, other: &QSymElement) -> QSymElement {
        assert_eq!(self.degree, other.degree, "degrees must match");
        let mut out = self.clone();
        for (alpha, coeff) in &other.terms {
            out.add_term(alpha, coeff);
        }
        out
    }

    pub fn sub(&self, other: &QSymElement) -> QSymElement {
        self.add(&other.scale_int(&BigInt::from(-1)))
    }

    pub fn scale(&self, factor: &QPoly) -> QSymElement {
        let mut out = QSymElement::zero(self.degree);
        if factor.is_zero() {
            return out;
        }
        for (alpha, coeff) in &self.terms {
            out.terms.insert(alpha.clone(), coeff * factor);
        }
        out
    }

    pub fn scale_int(&self, factor: &BigInt) -> QSymElement {
        self.scale(&QPoly::constant(factor.clone()))
    }

    /// Evaluates every coefficient at `q = 1`.
    pub fn eval_one(&self) -> BTreeMap<Composition, BigInt> {
        self.terms
            .iter()
            .map(|(a, p)| (a.clone(), p.eval_one()))
            .collect()
    }
}

impl fmt::Debug for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (degree {})", self.degree);
        }
        let body = self
            .terms
            .iter()
            .map(|(a, p)| format!("({p})*M{a:?}"))
            .collect::<Vec<_>>()
            .join(" + ");
        write!(f, "{body}")
    }
}

/// An expansion over partitions of `degree` (used for both the monomial
/// symmetric and elementary symmetric coordinates).
#[derive(Clone, PartialEq, Eq)]
pub struct SymExpansion {
    degree: usize,
    terms: BTreeMap<Partition, QPoly>,
}

impl SymExpansion {
    pub fn zero(degree: usize) -> Self {
        SymExpansion {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, QPoly)>) -> Self {
        let mut out = Self::zero(degree);
        for (lambda, coeff) in terms {
            out.add_term(&lambda, &coeff);
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> QPoly {
        self.terms.get(lambda).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, lambda: &Partition, coeff: &QPoly) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(lambda.weight(), self.degree, "homogeneity violated");
        let entry = self.terms.entry(lambda.clone()).or_insert_with(QPoly::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(lambda);
        }
    }
}

impl fmt::Debug for SymExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (degree {})", self.degree);
        }
        let body = self
            .terms
            .iter()
            .map(|(l, p)| format!("({p})*{l:?}"))
            .collect::<Vec<_>>()
            .join(" + ");
        write!(f, "{body}")
    }
}

/// Overlapping-shuffle expansion of a product of two monomial basis
/// elements: interleave the two part sequences, optionally merging one part
/// from each side by addition at any meeting point.
fn shuffle_parts(a: &[usize], b: &[usize]) -> HashMap<Vec<usize>, BigInt> {
    fn rec(
        a: &[usize],
        b: &[usize],
        acc: &mut HashMap<Vec<usize>, BigInt>,
        prefix: &mut Vec<usize>,
    ) {
        if a.is_empty() {
            let mut word = prefix.clone();
            word.extend_from_slice(b);
            *acc.entry(word).or_insert_with(BigInt::zero) += 1;
            return;
        }
        if b.is_empty() {
            let mut word = prefix.clone();
            word.extend_from_slice(a);
            *acc.entry(word).or_insert_with(BigInt::zero) += 1;
            return;
        }
        prefix.push(a[0]);
        rec(&a[1..], b, acc, prefix);
        prefix.pop();
        prefix.push(b[0]);
        rec(a, &b[1..], acc, prefix);
        prefix.pop();
        prefix.push(a[0] + b[0]);
        rec(&a[1..], &b[1..], acc, prefix);
        prefix.pop();
    }
    let mut acc = HashMap::new();
    rec(a, b, &mut acc, &mut Vec::new());
    acc
}

/// The product of two homogeneous elements, of degree `deg a + deg b`.
pub fn quasi_shuffle(a: &QSymElement, b: &QSymElement) -> QSymElement {
    let mut out = QSymElement::zero(a.degree() + b.degree());
    for (alpha, p) in a.terms() {
        for (beta, r) in b.terms() {
            let pr = p * r;
            for (word, mult) in shuffle_parts(alpha.parts(), beta.parts()) {
                out.add_term(&Composition::new(word), &pr.scale(&mult));
            }
        }
    }
    out
}

/// If `f` is not symmetric, returns a pair of compositions with the same
/// underlying partition but different coefficients (lexicographically larger
/// composition first); otherwise `None`.
pub fn nonsymmetry_witness(f: &QSymElement) -> Option<(Composition, Composition)> {
    let mut checked: Vec<Partition> = Vec::new();
    for (alpha, coeff) in f.terms() {
        let lambda = alpha.partition();
        if checked.contains(&lambda) {
            continue;
        }
        checked.push(lambda.clone());
        for gamma in lambda.rearrangements() {
            if f.coeff(&gamma) != *coeff {
                return if *alpha > gamma {
                    Some((alpha.clone(), gamma))
                } else {
                    Some((gamma, alpha.clone()))
                };
            }
        }
    }
    None
}

/// Whether all compositions in each rearrangement class carry equal
/// coefficients (absent keys count as zero).
pub fn is_symmetric(f: &QSymElement) -> bool {
    nonsymmetry_witness(f).is_none()
}

/// Collapses a symmetric element to monomial symmetric coordinates: each
/// partition maps to the common coefficient of its rearrangement class.
pub fn collapse_to_monomial_symmetric(f: &QSymElement) -> Result<SymExpansion, QsymError> {
    if let Some((a, b)) = nonsymmetry_witness(f) {
        return Err(QsymError::NotSymmetric(a, b));
    }
    let mut out = SymExpansion::zero(f.degree());
    for (alpha, coeff) in f.terms() {
        let lambda = alpha.partition();
        if out.terms.contains_key(&lambda) {
            continue;
        }
        out.terms.insert(lambda, coeff.clone());
    }
    Ok(out)
}

/// Re-expands monomial symmetric coordinates into the monomial
/// quasisymmetric basis.
pub fn monomial_symmetric_to_qsym(m: &SymExpansion) -> QSymElement {
    let mut out = QSymElement::zero(m.degree());
    for (lambda, coeff) in m.terms() {
        for alpha in lambda.rearrangements() {
            out.add_term(&alpha, coeff);
        }
    }
    out
}

/// The elementary symmetric function `e_lambda` expanded in the monomial
/// quasisymmetric basis, computed as the quasi-shuffle product of the
/// column factors `e_k = M_{(1^k)}`.
pub fn elementary_in_monomial(lambda: &Partition) -> QSymElement {
    let mut out = QSymElement::unit();
    for &part in lambda.parts() {
        let e_k = QSymElement::monomial(Composition::new(vec![1; part]));
        out = quasi_shuffle(&out, &e_k);
    }
    out
}

fn elementary_in_monomial_symmetric(lambda: &Partition) -> SymExpansion {
    collapse_to_monomial_symmetric(&elementary_in_monomial(lambda))
        .expect("a product of elementary symmetric functions is symmetric")
}

/// The unique expansion of a symmetric element over the elementary basis,
/// found by exact back-substitution in monomial symmetric coordinates. The
/// transition matrix from `e_lambda` to `m_mu` is unitriangular (the leading
/// term of `e_lambda` is `m_{lambda'}`), so no division is needed.
pub fn e_expand(f: &QSymElement) -> Result<SymExpansion, QsymError> {
    let mut residue = collapse_to_monomial_symmetric(f)?;
    let mut out = SymExpansion::zero(f.degree());
    let mut e_cache: HashMap<Partition, SymExpansion> = HashMap::new();
    while let Some(mu) = residue.terms.keys().next_back().cloned() {
        let coeff = residue.coeff(&mu);
        let lambda = mu.conjugate();
        let e_rows = e_cache
            .entry(lambda.clone())
            .or_insert_with(|| elementary_in_monomial_symmetric(&lambda));
        for (nu, k) in e_rows.terms() {
            assert!(
                *nu <= mu,
                "internal consistency failure: back-substitution is not triangular"
            );
            residue.add_term(nu, &(&(-&coeff) * k));
        }
        assert!(
            residue.coeff(&mu).is_zero(),
            "internal consistency failure: leading term did not cancel"
        );
        out.add_term(&lambda, &coeff);
    }
    Ok(out)
}

/// Whether a symmetric element has all nonnegative coefficients over the
/// elementary basis.
pub fn is_e_positive(f: &QSymElement) -> Result<bool, QsymError> {
    Ok(e_expand(f)?.terms().all(|(_, p)| p.is_nonnegative()))
}

/// Whether every coefficient polynomial satisfies
/// `p(q) = q^num_edges * p(1/q)`.
pub fn is_palindromic(f: &QSymElement, num_edges: usize) -> bool {
    f.terms()
        .all(|(_, p)| p.is_palindromic_in_window(num_edges))
}

/// Exploratory variant: palindromicity of each coefficient about the
/// midpoint of its own support.
pub fn is_palindromic_own_center(f: &QSymElement) -> bool {
    f.terms().all(|(_, p)| p.is_palindromic_own_center())
}

/// All Lyndon compositions of the given weight, in lexicographic order.
pub fn lyndon_words(weight: usize) -> Vec<Composition> {
    assert!(weight >= 1);
    Composition::all_of(weight)
        .into_iter()
        .filter(Composition::is_lyndon)
        .collect()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// The degree `n * |alpha|` polynomial generator attached to a Lyndon word
/// `alpha`: the n-by-n lower-Hessenberg determinant with `M_{k*alpha}` bands
/// and the integers 1..n-1 on the superdiagonal, divided exactly by n!.
///
/// The determinant is evaluated by cofactor expansion along the last row;
/// the minors repeat the same band pattern, so the expansion reduces to the
/// recurrence `D_i = sum_k (-1)^{k-1} (i-1)!/(i-k)! M_{k*alpha} D_{i-k}`.
pub fn hazewinkel_lambda(n: usize, alpha: &Composition) -> Result<QSymElement, QsymError> {
    assert!(n >= 1);
    assert!(alpha.is_lyndon(), "index must be a Lyndon word");
    let mut dets: Vec<QSymElement> = vec![QSymElement::unit()];
    for i in 1..=n {
        let mut det_i = QSymElement::zero(i * alpha.weight());
        for k in 1..=i {
            // (i-1)! / (i-k)! with alternating sign.
            let mut factor = (i - k + 1..i).fold(BigInt::one(), |acc, j| acc * BigInt::from(j));
            if k % 2 == 0 {
                factor = -factor;
            }
            let band = QSymElement::monomial(alpha.scaled(k));
            det_i = det_i.add(&quasi_shuffle(&band, &dets[i - k]).scale_int(&factor));
        }
        dets.push(det_i);
    }
    let n_fact = factorial(n);
    let mut out = QSymElement::zero(n * alpha.weight());
    for (comp, coeff) in dets[n].terms() {
        let divided = coeff
            .div_exact(&n_fact)
            .ok_or(QsymError::NonIntegralDivision(n))?;
        out.add_term(comp, &divided);
    }
    Ok(out)
}

// JSON form shared by `QSymElement` and `SymExpansion`:
//   {"degree": n, "terms": [{"index": [parts...], "poly": [c0, c1, ...]}, ...]}
// with terms sorted lexicographically by index.

#[derive(Serialize, Deserialize)]
struct TermRecord {
    index: Vec<usize>,
    poly: QPoly,
}

fn serialize_terms<S, K>(
    degree: usize,
    terms: &BTreeMap<K, QPoly>,
    key_parts: impl Fn(&K) -> Vec<usize>,
    serializer: S,
) -> Result<S::Ok, S::Error>
where
    S: Serializer,
{
    let records: Vec<TermRecord> = terms
        .iter()
        .map(|(k, p)| TermRecord {
            index: key_parts(k),
            poly: p.clone(),
        })
        .collect();
    let mut s = serializer.serialize_struct("QSymElement", 2)?;
    s.serialize_field("degree", &degree)?;
    s.serialize_field("terms", &records)?;
    s.end()
}

impl Serialize for QSymElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_terms(self.degree, &self.terms, |c| c.parts().to_vec(), serializer)
    }
}

impl Serialize for SymExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_terms(self.degree, &self.terms, |p| p.parts().to_vec(), serializer)
    }
}

#[derive(Deserialize)]
struct ElementRecord {
    degree: usize,
    terms: Vec<TermRecord>,
}

impl<'de> Deserialize<'de> for QSymElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let record = ElementRecord::deserialize(deserializer)?;
        let mut out = QSymElement::zero(record.degree);
        for term in record.terms {
            let comp = Composition::new(term.index);
            if comp.weight() != record.degree {
                return Err(serde::de::Error::custom(format!(
                    "index {comp:?} does not have weight {}",
                    record.degree
                )));
            }
            out.add_term(&comp, &term.poly);
        }
        Ok(out)
    }
}

impl<'de> Deserialize<'de> for SymExpansion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let record = ElementRecord::deserialize(deserializer)?;
        let mut out = SymExpansion::zero(record.degree);
        for term in record.terms {
            let mut parts = term.index;
            if parts.windows(2).any(|w| w[0] < w[1]) {
                return Err(serde::de::Error::custom("index is not a partition"));
            }
            parts.retain(|&p| p > 0);
            let lambda = Partition::new(parts);
            if lambda.weight() != record.degree {
                return Err(serde::de::Error::custom(format!(
                    "index {lambda:?} does not have weight {}",
                    record.degree
                )));
            }
            out.add_term(&lambda, &term.poly);
        }
        Ok(out)
    }
}
