//! The tensor algebra `T(g)` and the supersymmetric algebra `S(g)`.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::liealg::{AlgebraSpec, LieElement};
use crate::signs::{gamma_exponent, Permutation};
use crate::superlinalg::accumulate;

/// Default cap on the degree of elements handled by the symmetric maps.
pub const DEFAULT_MAX_DEGREE: usize = 8;

/// A word of generator ids.
pub type Word = Vec<usize>;

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

fn word_parities(alg: &AlgebraSpec, w: &[usize]) -> Vec<u8> {
    w.iter().map(|&g| alg.gen_parity(g)).collect()
}

pub(crate) fn word_parity(alg: &AlgebraSpec, w: &[usize]) -> u8 {
    w.iter().fold(0, |a, &g| a ^ alg.gen_parity(g))
}

/// Sparse element of `T(g)`; mixed degrees allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorAlgebraElement(BTreeMap<Word, Scalar>);

impl TensorAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut m = BTreeMap::new();
        for (w, c) in terms {
            accumulate(&mut m, w, c);
        }
        Self(m)
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::from_terms([(Vec::new(), c)])
    }

    pub fn from_lie(x: &LieElement) -> Self {
        Self::from_terms(x.terms().iter().map(|(g, c)| (vec![*g], c.clone())))
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut m = self.0.clone();
        for (w, c) in &other.0 {
            accumulate(&mut m, w.clone(), c.clone());
        }
        Self(m)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_terms(self.0.iter().map(|(w, c)| (w.clone(), c * s)))
    }

    /// Concatenation product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut m = BTreeMap::new();
        for (a, ca) in &self.0 {
            for (b, cb) in &other.0 {
                let mut w = a.clone();
                w.extend_from_slice(b);
                accumulate(&mut m, w, ca * cb);
            }
        }
        Self(m)
    }

    pub fn max_degree(&self) -> usize {
        self.0.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn to_json(&self, alg: &AlgebraSpec) -> Value {
        monomials_json(alg, &self.0)
    }
}

/// Sparse element of `S(g)` over sorted monomials; odd generators appear at most once.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymElement(BTreeMap<Word, Scalar>);

impl SymElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        let mut m = BTreeMap::new();
        accumulate(&mut m, Vec::new(), c);
        Self(m)
    }

    /// Builds from arbitrary words, normalizing each.
    pub fn from_words(alg: &AlgebraSpec, terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut m = BTreeMap::new();
        for (w, c) in terms {
            if let Some((odd, sorted)) = sort_supersymmetric(alg, w) {
                accumulate(&mut m, sorted, if odd { -c } else { c });
            }
        }
        Self(m)
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut m = self.0.clone();
        for (w, c) in &other.0 {
            accumulate(&mut m, w.clone(), c.clone());
        }
        Self(m)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut m = BTreeMap::new();
        for (w, c) in &self.0 {
            accumulate(&mut m, w.clone(), c * s);
        }
        Self(m)
    }

    pub fn mul(&self, alg: &AlgebraSpec, other: &Self) -> Self {
        let mut words = Vec::new();
        for (a, ca) in &self.0 {
            for (b, cb) in &other.0 {
                let mut w = a.clone();
                w.extend_from_slice(b);
                words.push((w, ca * cb));
            }
        }
        Self::from_words(alg, words)
    }

    pub fn max_degree(&self) -> usize {
        self.0.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// The homogeneous degree, if all monomials share one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.0.keys().map(Vec::len);
        let first = it.next().unwrap_or(0);
        it.all(|d| d == first).then_some(first)
    }

    pub fn to_json(&self, alg: &AlgebraSpec) -> Value {
        monomials_json(alg, &self.0)
    }
}

/// Monomials sorted graded-lex, rendered with generator names.
pub(crate) fn monomials_json(alg: &AlgebraSpec, terms: &BTreeMap<Word, Scalar>) -> Value {
    let mut items: Vec<(&Word, &Scalar)> = terms.iter().collect();
    items.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
    let list: Vec<Value> = items
        .into_iter()
        .map(|(w, c)| {
            let gens: Vec<&str> = w.iter().map(|&g| alg.generator(g).name.as_str()).collect();
            json!({"gens": gens, "coeff": c})
        })
        .collect();
    Value::Array(list)
}

/// Bubble-sorts a word into the global order, tracking the Koszul sign.
/// Returns `None` when an odd generator repeats.
fn sort_supersymmetric(alg: &AlgebraSpec, mut w: Word) -> Option<(bool, Word)> {
    let mut odd = false;
    let n = w.len();
    for i in 0..n {
        for j in 0..n - 1 - i {
            if w[j] > w[j + 1] {
                if alg.gen_parity(w[j]) & alg.gen_parity(w[j + 1]) == 1 {
                    odd = !odd;
                }
                w.swap(j, j + 1);
            }
        }
    }
    if w.windows(2).any(|p| p[0] == p[1] && alg.gen_parity(p[0]) == 1) {
        return None;
    }
    Some((odd, w))
}

/// The projection `eta: T(g) -> S(g)`.
pub fn eta(alg: &AlgebraSpec, t: &TensorAlgebraElement) -> SymElement {
    SymElement::from_words(alg, t.0.iter().map(|(w, c)| (w.clone(), c.clone())))
}

/// Checks `degree <= cap`.
pub fn check_degree(degree: usize, cap: usize) -> Result<()> {
    if degree > cap {
        return Err(Error::DegreeCapExceeded { degree, cap });
    }
    Ok(())
}

/// Symmetrized words `(1/k!) sum_sigma gamma(x,sigma) x_sigma(1) .. x_sigma(k)` of one monomial.
pub(crate) fn symmetrize_word(alg: &AlgebraSpec, w: &[usize]) -> Vec<(Word, Scalar)> {
    let k = w.len();
    let par = word_parities(alg, w);
    let weight = Scalar::ratio(1, factorial(k));
    Permutation::all(k)
        .map(|sigma| {
            let word: Word = sigma.images().iter().map(|&i| w[i]).collect();
            let c = if gamma_exponent(&par, &sigma) == 1 {
                -&weight
            } else {
                weight.clone()
            };
            (word, c)
        })
        .collect()
}

/// The section `omega_k: S^k(g) -> T^k(g)`.
pub fn omega_k(alg: &AlgebraSpec, s: &SymElement, k: usize, max_degree: usize) -> Result<TensorAlgebraElement> {
    check_degree(k, max_degree)?;
    if s.terms().keys().any(|w| w.len() != k) {
        return Err(Error::NotHomogeneous(k));
    }
    let mut m = BTreeMap::new();
    for (w, c) in s.terms() {
        for (word, wc) in symmetrize_word(alg, w) {
            accumulate(&mut m, word, &wc * c);
        }
    }
    Ok(TensorAlgebraElement(m))
}

/// Adjoint action of `a` on a single word, as a derivation with Koszul signs.
fn act_on_word(alg: &AlgebraSpec, a: usize, w: &[usize], out: &mut BTreeMap<Word, Scalar>, coeff: &Scalar) {
    let pa = alg.gen_parity(a);
    let mut prefix = 0u8;
    for i in 0..w.len() {
        let br = alg.bracket_gens(a, w[i]);
        if !br.is_zero() {
            let sign = if pa & prefix == 1 { -coeff } else { coeff.clone() };
            for (g, c) in br.terms() {
                let mut nw = w.to_vec();
                nw[i] = *g;
                accumulate(out, nw, &sign * c);
            }
        }
        prefix ^= alg.gen_parity(w[i]);
    }
}

/// `a . t` on `T(g)`.
pub fn adjoint_act_tensor(alg: &AlgebraSpec, a: &LieElement, t: &TensorAlgebraElement) -> TensorAlgebraElement {
    let mut out = BTreeMap::new();
    for (g, ca) in a.terms() {
        for (w, c) in &t.0 {
            act_on_word(alg, *g, w, &mut out, &(ca * c));
        }
    }
    TensorAlgebraElement(out)
}

/// `a . s` on `S(g)`.
pub fn adjoint_act_sym(alg: &AlgebraSpec, a: &LieElement, s: &SymElement) -> SymElement {
    let mut out = BTreeMap::new();
    for (g, ca) in a.terms() {
        for (w, c) in &s.0 {
            act_on_word(alg, *g, w, &mut out, &(ca * c));
        }
    }
    SymElement::from_words(alg, out)
}

/// `true` iff every generator annihilates `t`.
pub fn is_invariant_tensor(alg: &AlgebraSpec, t: &TensorAlgebraElement) -> bool {
    (0..alg.dim()).all(|g| adjoint_act_tensor(alg, &LieElement::generator(g), t).is_zero())
}

pub fn is_invariant_sym(alg: &AlgebraSpec, s: &SymElement) -> bool {
    (0..alg.dim()).all(|g| adjoint_act_sym(alg, &LieElement::generator(g), s).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superlinalg::Family;

    fn gl11() -> AlgebraSpec {
        AlgebraSpec::build(Family::Gl, 1, 1).unwrap()
    }

    #[test]
    fn eta_examples() {
        let alg = gl11();
        let e12 = alg.by_labels(1, 2).unwrap();
        let e21 = alg.by_labels(2, 1).unwrap();
        let t = TensorAlgebraElement::from_terms([
            (vec![e12, e21], Scalar::one()),
            (vec![e21, e12], Scalar::one()),
        ]);
        assert!(eta(&alg, &t).is_zero());
        let sq = TensorAlgebraElement::from_terms([(vec![e12, e12], Scalar::one())]);
        assert!(eta(&alg, &sq).is_zero());
        let x = TensorAlgebraElement::from_terms([(vec![e21], Scalar::ratio(3, 2))]);
        assert_eq!(eta(&alg, &x).terms(), x.terms());
    }

    #[test]
    fn omega_two_even() {
        let alg = gl11();
        let e11 = alg.by_labels(1, 1).unwrap();
        let e22 = alg.by_labels(2, 2).unwrap();
        let s = SymElement::from_words(&alg, [(vec![e11, e22], Scalar::one())]);
        let t = omega_k(&alg, &s, 2, DEFAULT_MAX_DEGREE).unwrap();
        let half = Scalar::ratio(1, 2);
        let expect = TensorAlgebraElement::from_terms([
            (vec![e11, e22], half.clone()),
            (vec![e22, e11], half),
        ]);
        assert_eq!(t, expect);
        assert_eq!(eta(&alg, &t), s);
        assert!(omega_k(&alg, &s, 9, DEFAULT_MAX_DEGREE).is_err());
    }

    #[test]
    fn adjoint_examples() {
        let alg = gl11();
        let e11 = LieElement::generator(alg.by_labels(1, 1).unwrap());
        let e12 = alg.by_labels(1, 2).unwrap();
        assert!(adjoint_act_tensor(&alg, &e11, &TensorAlgebraElement::scalar(Scalar::one())).is_zero());
        let t = TensorAlgebraElement::from_terms([(vec![e12], Scalar::one())]);
        assert_eq!(adjoint_act_tensor(&alg, &e11, &t), t);
        assert!(!is_invariant_tensor(&alg, &t));
        assert!(is_invariant_tensor(&alg, &TensorAlgebraElement::scalar(Scalar::from_int(5))));
    }
}
