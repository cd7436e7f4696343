//! Combinatorics of `(k,k)`-Brauer diagrams attached to permutations of `S_{2k}`.
//!
//! Dots are numbered `1..2k` (0-based internally); column `s` holds the dots
//! `2s-1` (top) and `2s` (bottom), so `d_sigma` pairs `sigma(2s-1)` with `sigma(2s)`.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::signs::Permutation;

/// Largest `k` accepted by the exhaustive enumerations.
pub const MAX_ENUMERATION_K: usize = 8;

fn check_bound(k: usize, bound: usize) -> Result<()> {
    if k > bound {
        return Err(Error::BoundExceeded(format!("k = {k} exceeds the bound {bound}")));
    }
    Ok(())
}

fn half(sigma: &Permutation) -> Result<usize> {
    if sigma.len() % 2 == 1 {
        return Err(Error::InvalidParameters(format!(
            "permutation of odd degree {} is not in S_2k",
            sigma.len()
        )));
    }
    Ok(sigma.len() / 2)
}

/// `g-bar(2s-1) = 2g(s)-1`, `g-bar(2s) = 2g(s)`.
pub fn overline_embed(g: &Permutation) -> Permutation {
    let images = (0..2 * g.len()).map(|i| 2 * g.apply(i / 2) + i % 2).collect();
    Permutation::from_images(images).expect("block permutation")
}

/// An element `tau . g-bar` of the hyperoctahedral group `H = K . S_k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HElement {
    /// `swaps[s]` is set when `tau` contains the transposition `(2s+1, 2s+2)`.
    pub swaps: Vec<bool>,
    pub g: Permutation,
}

impl HElement {
    pub fn k(&self) -> usize {
        self.g.len()
    }

    pub fn tau(&self) -> Permutation {
        let images = (0..2 * self.k())
            .map(|i| if self.swaps[i / 2] { i ^ 1 } else { i })
            .collect();
        Permutation::from_images(images).expect("product of disjoint swaps")
    }

    pub fn to_permutation(&self) -> Permutation {
        self.tau().compose(&overline_embed(&self.g))
    }

    /// `sgn(tau)`, as `true` when odd.
    pub fn tau_odd(&self) -> bool {
        self.swaps.iter().filter(|&&b| b).count() % 2 == 1
    }

    /// The character `sgn(tau) sgn(g)`, as `true` when it equals `-1`.
    pub fn chi_odd(&self) -> bool {
        self.tau_odd() ^ self.g.is_odd()
    }

    /// All `2^k k!` elements, ordered by `g` (lex) then by the swap mask.
    pub fn all(k: usize) -> Vec<HElement> {
        let mut out = Vec::with_capacity((1 << k) * (1..=k).product::<usize>());
        for g in Permutation::all(k) {
            for mask in 0..(1usize << k) {
                let swaps = (0..k).map(|s| mask >> s & 1 == 1).collect();
                out.push(HElement { swaps, g: g.clone() });
            }
        }
        out
    }
}

/// Writes `h = tau . g-bar` when `h` lies in `H`.
pub fn factor_h(h: &Permutation) -> Option<HElement> {
    if h.len() % 2 == 1 {
        return None;
    }
    let k = h.len() / 2;
    let mut g = Vec::with_capacity(k);
    let mut swaps = vec![false; k];
    for s in 0..k {
        let (a, b) = (h.apply(2 * s), h.apply(2 * s + 1));
        if a / 2 != b / 2 {
            return None;
        }
        g.push(a / 2);
        swaps[a / 2] = a % 2 == 1;
    }
    let g = Permutation::from_images(g).ok()?;
    Some(HElement { swaps, g })
}

/// A perfect matching on the dots `0..2k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BrauerDiagram {
    k: usize,
    pairs: Vec<(usize, usize)>,
}

impl BrauerDiagram {
    /// Builds a diagram from 0-based pairs, checking that they form a perfect matching.
    pub fn from_pairs(k: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = vec![false; 2 * k];
        let mut out = Vec::with_capacity(k);
        for (a, b) in pairs {
            let (a, b) = (a.min(b), a.max(b));
            if b >= 2 * k || a == b || seen[a] || seen[b] {
                return Err(Error::InvalidParameters("not a perfect matching".into()));
            }
            seen[a] = true;
            seen[b] = true;
            out.push((a, b));
        }
        if out.len() != k {
            return Err(Error::InvalidParameters("not a perfect matching".into()));
        }
        out.sort_unstable();
        Ok(Self { k, pairs: out })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Sorted 0-based pairs.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn partner(&self, dot: usize) -> usize {
        self.pairs
            .iter()
            .find_map(|&(a, b)| {
                if a == dot {
                    Some(b)
                } else if b == dot {
                    Some(a)
                } else {
                    None
                }
            })
            .expect("dot in range")
    }

    /// Lexicographically least permutation with this diagram.
    pub fn representative(&self) -> Permutation {
        let images = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        Permutation::from_images(images).expect("matching covers all dots")
    }

    /// 1-based sorted pairs.
    pub fn to_json(&self) -> Value {
        let pairs: Vec<[usize; 2]> = self.pairs.iter().map(|&(a, b)| [a + 1, b + 1]).collect();
        json!({"k": self.k, "pairs": pairs})
    }
}

/// The diagram `d_sigma`, pairing `sigma(2s-1)` with `sigma(2s)`.
pub fn diagram_from_perm(sigma: &Permutation) -> Result<BrauerDiagram> {
    let k = half(sigma)?;
    BrauerDiagram::from_pairs(k, (0..k).map(|s| (sigma.apply(2 * s), sigma.apply(2 * s + 1))))
}

/// Canonical left-coset representative `r` of `sigma H` and the `h` with `sigma = r h`.
pub fn coset_decompose(sigma: &Permutation) -> Result<(Permutation, HElement)> {
    let rep = diagram_from_perm(sigma)?.representative();
    let h = rep.inverse().compose(sigma);
    let h = factor_h(&h).expect("sigma and its representative share a coset");
    Ok((rep, h))
}

/// Multiplicities `lambda_l` of circle lengths `l`.
pub type TypeVector = BTreeMap<usize, usize>;

pub fn type_string(t: &TypeVector) -> String {
    let parts: Vec<String> = t.iter().map(|(l, m)| format!("{l}^{m}")).collect();
    parts.join(" ")
}

/// Circles of the closure diagram and their type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureAnalysis {
    /// Each circle as an oriented dot sequence (0-based): starts at its least dot,
    /// first step along the diagram edge, then alternating with the column edges.
    pub circles: Vec<Vec<usize>>,
    pub type_vector: TypeVector,
}

impl ClosureAnalysis {
    pub fn to_json(&self) -> Value {
        let circles: Vec<Vec<usize>> = self
            .circles
            .iter()
            .map(|c| {
                let mut dots: Vec<usize> = c.iter().map(|d| d + 1).collect();
                dots.sort_unstable();
                dots
            })
            .collect();
        let ty: BTreeMap<String, usize> = self.type_vector.iter().map(|(l, m)| (l.to_string(), *m)).collect();
        json!({"circles": circles, "type": ty, "type_string": type_string(&self.type_vector)})
    }
}

/// Closure of `d` by the column edges `{2s-1, 2s}`.
pub fn closure_type(d: &BrauerDiagram) -> ClosureAnalysis {
    let n = 2 * d.k;
    let mut partner = vec![0; n];
    for &(a, b) in &d.pairs {
        partner[a] = b;
        partner[b] = a;
    }
    let mut seen = vec![false; n];
    let mut circles = Vec::new();
    let mut type_vector = TypeVector::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut circle = Vec::new();
        let mut cur = start;
        loop {
            seen[cur] = true;
            circle.push(cur);
            let next = partner[cur];
            seen[next] = true;
            circle.push(next);
            cur = next ^ 1;
            if cur == start {
                break;
            }
        }
        *type_vector.entry(circle.len() / 2).or_default() += 1;
        circles.push(circle);
    }
    ClosureAnalysis { circles, type_vector }
}

/// Type of `d_sigma`.
pub fn perm_type(sigma: &Permutation) -> Result<TypeVector> {
    Ok(closure_type(&diagram_from_perm(sigma)?).type_vector)
}

/// All perfect matchings of `0..2k` in lexicographic order of their sorted pairs.
pub fn all_diagrams(k: usize) -> Vec<BrauerDiagram> {
    fn rec(free: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, k: usize, out: &mut Vec<BrauerDiagram>) {
        if free.is_empty() {
            out.push(BrauerDiagram {
                k,
                pairs: cur.clone(),
            });
            return;
        }
        let a = free.remove(0);
        for idx in 0..free.len() {
            let b = free.remove(idx);
            cur.push((a, b));
            rec(free, cur, k, out);
            cur.pop();
            free.insert(idx, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    rec(&mut (0..2 * k).collect(), &mut Vec::new(), k, &mut out);
    out
}

/// Lexicographically least representatives of `S_{2k}/H`, one per diagram.
pub fn coset_reps(k: usize) -> Result<Vec<Permutation>> {
    check_bound(k, MAX_ENUMERATION_K)?;
    let mut reps: Vec<Permutation> = all_diagrams(k).iter().map(BrauerDiagram::representative).collect();
    reps.sort();
    Ok(reps)
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// `prod_i (2i)^{lambda_i} lambda_i!`, the order of `H` intersected with its conjugate.
pub fn stabilizer_order(t: &TypeVector) -> u128 {
    t.iter()
        .map(|(&l, &m)| (2 * l as u128).pow(m as u32) * factorial(m))
        .product()
}

/// `2^k k! / prod_i (2i)^{lambda_i} lambda_i!`.
pub fn type_count_formula(k: usize, t: &TypeVector) -> u128 {
    (1u128 << k) * factorial(k) / stabilizer_order(t)
}

/// `(2k-1)!!`.
pub fn double_factorial_odd(k: usize) -> u128 {
    (1..=k as u128).map(|i| 2 * i - 1).product()
}

/// All partitions of `k`, as type vectors, in reverse lexicographic order of parts.
pub fn partitions(k: usize) -> Vec<TypeVector> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<TypeVector>) {
        if rest == 0 {
            let mut t = TypeVector::new();
            for &p in cur.iter() {
                *t.entry(p).or_default() += 1;
            }
            out.push(t);
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

/// Per-type diagram counts compared to the closed formula.
#[derive(Clone, Debug, Serialize)]
pub struct TypeCountReport {
    pub k: usize,
    pub rows: Vec<TypeCountRow>,
    pub total: u128,
    pub expected_total: u128,
    pub all_match: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TypeCountRow {
    #[serde(rename = "type")]
    pub type_string: String,
    pub count: u128,
    pub formula: u128,
}

pub fn count_by_type(k: usize) -> Result<TypeCountReport> {
    check_bound(k, MAX_ENUMERATION_K)?;
    let mut counts: BTreeMap<String, u128> = BTreeMap::new();
    let mut total = 0;
    for d in all_diagrams(k) {
        *counts.entry(type_string(&closure_type(&d).type_vector)).or_default() += 1;
        total += 1;
    }
    let mut rows = Vec::new();
    let mut all_match = true;
    for t in partitions(k) {
        let key = type_string(&t);
        let count = counts.remove(&key).unwrap_or(0);
        let formula = type_count_formula(k, &t);
        all_match &= count == formula;
        rows.push(TypeCountRow {
            type_string: key,
            count,
            formula,
        });
    }
    all_match &= counts.is_empty();
    let expected_total = double_factorial_odd(k);
    all_match &= total == expected_total;
    Ok(TypeCountReport {
        k,
        rows,
        total,
        expected_total,
        all_match,
    })
}

/// Double-coset sizes `|H sigma H|` by orbit enumeration, one row per type.
#[derive(Clone, Debug, Serialize)]
pub struct DoubleCosetReport {
    pub k: usize,
    pub rows: Vec<DoubleCosetRow>,
    /// Every permutation of `S_2k` lies in the double coset of its type.
    pub types_separate: bool,
    pub sizes_sum: u128,
    pub all_match: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DoubleCosetRow {
    #[serde(rename = "type")]
    pub type_string: String,
    pub representative: Permutation,
    pub size: u128,
    pub formula: u128,
}

/// A permutation in `S_2k` whose diagram has the given type: consecutive
/// blocks of columns, each closed into one circle.
pub fn type_representative(k: usize, t: &TypeVector) -> Permutation {
    let mut pairs = Vec::with_capacity(k);
    let mut col = 0;
    for (&l, &m) in t {
        for _ in 0..m {
            // Columns col..col+l form one circle: top of each column pairs with
            // the bottom of the next one, the last top with the first bottom.
            for j in 0..l {
                let top = 2 * (col + j);
                let bottom = 2 * (col + (j + 1) % l) + 1;
                pairs.push((top, bottom));
            }
            col += l;
        }
    }
    BrauerDiagram::from_pairs(k, pairs)
        .expect("valid matching")
        .representative()
}

pub fn double_cosets(k: usize) -> Result<DoubleCosetReport> {
    check_bound(k, 4)?;
    let h: Vec<Permutation> = HElement::all(k).iter().map(HElement::to_permutation).collect();
    let mut rows = Vec::new();
    let mut all_match = true;
    let mut sizes_sum = 0;
    let mut types_separate = true;
    for t in partitions(k) {
        let rep = type_representative(k, &t);
        let orbit: BTreeSet<Permutation> = h
            .par_iter()
            .flat_map_iter(|a| {
                let left = a.compose(&rep);
                h.iter().map(move |b| left.compose(b))
            })
            .collect();
        types_separate &= orbit.iter().all(|p| perm_type(p).map(|pt| pt == t).unwrap_or(false));
        let size = orbit.len() as u128;
        let formula = (1u128 << k).pow(2) * factorial(k).pow(2) / stabilizer_order(&t);
        all_match &= size == formula;
        sizes_sum += size;
        rows.push(DoubleCosetRow {
            type_string: type_string(&t),
            representative: rep,
            size,
            formula,
        });
    }
    all_match &= sizes_sum == factorial(2 * k) && types_separate;
    Ok(DoubleCosetReport {
        k,
        rows,
        types_separate,
        sizes_sum,
        all_match,
    })
}

/// A solution of `sigma tau g-bar sigma^-1 = tau1 g1-bar` with
/// `sgn(tau1) sgn(g) sgn(g1) = -1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub h: HElement,
    pub h1: HElement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSource {
    OrientedCircle,
    Exhaustive,
}

impl Witness {
    pub fn sign_product_negative(&self) -> bool {
        self.h1.tau_odd() ^ self.h.g.is_odd() ^ self.h1.g.is_odd()
    }

    /// Checks both defining conditions against `sigma`.
    pub fn verify(&self, sigma: &Permutation) -> bool {
        let lhs = sigma
            .compose(&self.h.to_permutation())
            .compose(&sigma.inverse());
        lhs == self.h1.to_permutation() && self.sign_product_negative()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "tau": self.h.tau().cycle_string(),
            "g": self.h.g.cycle_string(),
            "tau1": self.h1.tau().cycle_string(),
            "g1": self.h1.g.cycle_string(),
            "sign_product": if self.sign_product_negative() { -1 } else { 1 },
        })
    }
}

/// Builds the witness for `x = tau1 g1-bar`, if `x` lies in `H` and `sigma^-1 x sigma` too.
fn witness_from_conjugate(sigma: &Permutation, x: &Permutation) -> Option<Witness> {
    let h1 = factor_h(x)?;
    let h = factor_h(&sigma.inverse().compose(x).compose(sigma))?;
    let w = Witness { h, h1 };
    w.sign_product_negative().then_some(w)
}

/// Reflections of one closure circle that keep its edge colours, fixing every other dot.
///
/// For the oriented circle `i_1 -> .. -> i_2l`, the reflection `i_j -> i_{s+1-j}` with `s`
/// even; candidates are produced for `s = 2l, 2l-2, .., 2`.
pub fn circle_reflections(n: usize, circle: &[usize]) -> Vec<Permutation> {
    let len = circle.len();
    (1..=len / 2)
        .rev()
        .map(|half_s| {
            let s = 2 * half_s;
            let mut images: Vec<usize> = (0..n).collect();
            for j in 0..len {
                images[circle[j]] = circle[(s + len - 1 - j) % len];
            }
            Permutation::from_images(images).expect("circle reflection")
        })
        .collect()
}

/// Witness via the oriented-circle construction, trying circles in order.
pub fn oriented_circle_witness(sigma: &Permutation) -> Result<Option<Witness>> {
    let d = diagram_from_perm(sigma)?;
    let closure = closure_type(&d);
    for circle in &closure.circles {
        for x in circle_reflections(sigma.len(), circle) {
            if let Some(w) = witness_from_conjugate(sigma, &x) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Witness by scanning `H` in the order of [`HElement::all`].
pub fn exhaustive_witness(sigma: &Permutation) -> Result<Option<Witness>> {
    let k = half(sigma)?;
    let inv = sigma.inverse();
    for h in HElement::all(k) {
        let x = sigma.compose(&h.to_permutation()).compose(&inv);
        if let Some(h1) = factor_h(&x) {
            let w = Witness { h, h1 };
            if w.sign_product_negative() {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Oriented-circle construction first, exhaustive scan as fallback.
pub fn key_lemma_witness(sigma: &Permutation) -> Result<(Witness, WitnessSource)> {
    if let Some(w) = oriented_circle_witness(sigma)? {
        return Ok((w, WitnessSource::OrientedCircle));
    }
    match exhaustive_witness(sigma)? {
        Some(w) => Ok((w, WitnessSource::Exhaustive)),
        None => Err(Error::InvalidParameters(format!("no witness for {sigma}"))),
    }
}

/// `H` intersected with `sigma H sigma^-1`, split into `A_1` (elements `tau1 g1-bar` of
/// witnesses) and its complement `A_0`.
#[derive(Clone, Debug)]
pub struct Partition {
    pub a0: BTreeSet<Permutation>,
    pub a1: BTreeSet<Permutation>,
}

impl Partition {
    fn products(a: &BTreeSet<Permutation>, b: &BTreeSet<Permutation>) -> BTreeSet<Permutation> {
        a.iter()
            .flat_map(|x| b.iter().map(move |y| x.compose(y)))
            .collect()
    }

    pub fn is_subgroup(set: &BTreeSet<Permutation>) -> bool {
        let Some(first) = set.iter().next() else {
            return false;
        };
        set.contains(&Permutation::identity(first.len())) && Self::products(set, set).is_subset(set)
    }

    /// `A0 A1 = A1 A0 = A1` and `A1 A1 = A0`.
    pub fn closure_laws_hold(&self) -> bool {
        Self::products(&self.a0, &self.a1) == self.a1
            && Self::products(&self.a1, &self.a0) == self.a1
            && Self::products(&self.a1, &self.a1) == self.a0
    }

    pub fn to_json(&self, expected_half: u128) -> Value {
        let list = |s: &BTreeSet<Permutation>| -> Vec<Vec<usize>> { s.iter().map(Permutation::one_line).collect() };
        json!({
            "A0": list(&self.a0),
            "A1": list(&self.a1),
            "A0_size": self.a0.len(),
            "A1_size": self.a1.len(),
            "expected_half": expected_half,
            "closure_laws": self.closure_laws_hold(),
            "A0_is_subgroup": Self::is_subgroup(&self.a0),
            "A1_is_subgroup": Self::is_subgroup(&self.a1),
        })
    }
}

pub fn partition_a0_a1(sigma: &Permutation) -> Result<Partition> {
    let k = half(sigma)?;
    check_bound(k, 4)?;
    let inv = sigma.inverse();
    let mut a0 = BTreeSet::new();
    let mut a1 = BTreeSet::new();
    for h in HElement::all(k) {
        let x = sigma.compose(&h.to_permutation()).compose(&inv);
        if let Some(h1) = factor_h(&x) {
            let w = Witness { h, h1 };
            if w.sign_product_negative() {
                a1.insert(x);
            } else {
                a0.insert(x);
            }
        }
    }
    Ok(Partition { a0, a1 })
}
