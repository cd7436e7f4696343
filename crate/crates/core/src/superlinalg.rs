//! Superspaces and sparse tensors over `End(V)^{(x)k}`.
//!
//! Indices are 0-based positions internally. Labels shown to users are the
//! 1-based indices, or signed indices `±1..±n` for the `q` family, where
//! position `p < n` is label `p+1` and position `n+p` is label `-(p+1)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::signs::p_exponent;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Gl,
    Osp,
    Q,
    P,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Gl => "gl",
            Family::Osp => "osp",
            Family::Q => "q",
            Family::P => "p",
        }
    }

    /// Letter used for generator names.
    pub fn letter(self) -> char {
        match self {
            Family::Gl => 'E',
            Family::Osp => 'F',
            Family::P => 'G',
            Family::Q => 'H',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(Family::Gl),
            "osp" => Ok(Family::Osp),
            "q" => Ok(Family::Q),
            "p" => Ok(Family::P),
            other => Err(Error::InvalidParameters(format!("unknown family `{other}`"))),
        }
    }
}

/// The natural representation `V` of one of the four families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperSpace {
    family: Family,
    m: usize,
    n: usize,
    parity: Vec<u8>,
    prime: Option<Vec<usize>>,
    epsilon: Option<Vec<i8>>,
}

impl SuperSpace {
    /// `gl(m|n)`: `C^{m|n}`; `osp(m|2n)`: `C^{m|2n}`; `q(n)`, `p(n)`: `C^{n|n}`.
    pub fn new(family: Family, m: usize, n: usize) -> Result<Self> {
        match family {
            Family::Gl => {
                if m + n == 0 {
                    return Err(Error::InvalidParameters("gl needs m+n >= 1".into()));
                }
                let parity = (0..m + n).map(|i| u8::from(i >= m)).collect();
                Ok(Self {
                    family,
                    m,
                    n,
                    parity,
                    prime: None,
                    epsilon: None,
                })
            }
            Family::Osp => {
                let dim = m + 2 * n;
                if dim == 0 {
                    return Err(Error::InvalidParameters("osp needs m+2n >= 1".into()));
                }
                let parity = (0..dim).map(|i| u8::from(i < n || i >= m + n)).collect();
                let prime = (0..dim).map(|i| dim - 1 - i).collect();
                let epsilon = (0..dim).map(|i| if i < m + n { 1 } else { -1 }).collect();
                Ok(Self {
                    family,
                    m,
                    n,
                    parity,
                    prime: Some(prime),
                    epsilon: Some(epsilon),
                })
            }
            Family::Q | Family::P => {
                if n == 0 {
                    return Err(Error::InvalidParameters(format!(
                        "{} needs n >= 1",
                        family.name()
                    )));
                }
                if m != 0 && m != n {
                    return Err(Error::InvalidParameters(format!(
                        "{} takes only n (got m = {m})",
                        family.name()
                    )));
                }
                let parity = (0..2 * n).map(|i| u8::from(i >= n)).collect();
                let prime = (0..2 * n).map(|i| if i < n { i + n } else { i - n }).collect();
                Ok(Self {
                    family,
                    m: 0,
                    n,
                    parity,
                    prime: Some(prime),
                    epsilon: None,
                })
            }
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.parity[i]
    }

    pub fn parities(&self) -> &[u8] {
        &self.parity
    }

    /// `i'`; the identity where no involution is defined.
    pub fn prime(&self, i: usize) -> usize {
        self.prime.as_ref().map_or(i, |p| p[i])
    }

    /// `epsilon_i`, `+1` outside the orthosymplectic family.
    pub fn epsilon(&self, i: usize) -> i8 {
        self.epsilon.as_ref().map_or(1, |e| e[i])
    }

    /// User-facing index of position `i`.
    pub fn label(&self, i: usize) -> i64 {
        match self.family {
            Family::Q if i >= self.n => -((i - self.n + 1) as i64),
            _ => i as i64 + 1,
        }
    }

    pub fn position(&self, label: i64) -> Result<usize> {
        let dim = self.dim() as i64;
        match self.family {
            Family::Q => {
                let n = self.n as i64;
                if (1..=n).contains(&label) {
                    Ok(label as usize - 1)
                } else if (-n..=-1).contains(&label) {
                    Ok((n - label - 1) as usize)
                } else {
                    Err(Error::InvalidIndex(label))
                }
            }
            _ if (1..=dim).contains(&label) => Ok(label as usize - 1),
            _ => Err(Error::InvalidIndex(label)),
        }
    }

    /// Parity of the matrix unit `e_{rc}`.
    pub fn unit_parity(&self, r: usize, c: usize) -> u8 {
        self.parity[r] ^ self.parity[c]
    }

    /// `m - n` for `C^{m|n}`, the supertrace of the identity.
    pub fn superdimension(&self) -> i64 {
        self.parity
            .iter()
            .map(|&p| if p == 0 { 1 } else { -1 })
            .sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family.name(),
            "m": self.m,
            "n": self.n,
            "dim": self.dim(),
            "parity": self.parity,
        })
    }
}

/// Key of a matrix-unit word `e_{r1 c1} (x) ... (x) e_{rk ck}`.
pub type UnitWord = Vec<(usize, usize)>;

fn word_parities(space: &SuperSpace, word: &[(usize, usize)]) -> Vec<u8> {
    word.iter().map(|&(r, c)| space.unit_parity(r, c)).collect()
}

fn add_entry<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, coeff: Scalar) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += &coeff;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, coeff: Scalar) {
    add_entry(map, key, coeff)
}

/// Sparse element of `End(V)^{(x)k}` with the tensor-superalgebra product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    k: usize,
    space: Arc<SuperSpace>,
    entries: BTreeMap<UnitWord, Scalar>,
}

impl Tensor {
    pub fn zero(space: Arc<SuperSpace>, k: usize) -> Self {
        Self {
            k,
            space,
            entries: BTreeMap::new(),
        }
    }

    /// The unit of `End(V)^{(x)k}`.
    pub fn identity(space: Arc<SuperSpace>, k: usize) -> Self {
        let dim = space.dim();
        let mut entries = BTreeMap::new();
        for word in all_words(dim, k) {
            entries.insert(word.iter().map(|&i| (i, i)).collect(), Scalar::one());
        }
        Self { k, space, entries }
    }

    pub fn unit(space: Arc<SuperSpace>, word: UnitWord) -> Self {
        let k = word.len();
        let mut entries = BTreeMap::new();
        entries.insert(word, Scalar::one());
        Self { k, space, entries }
    }

    pub fn from_entries(
        space: Arc<SuperSpace>,
        k: usize,
        items: impl IntoIterator<Item = (UnitWord, Scalar)>,
    ) -> Result<Self> {
        let dim = space.dim();
        let mut entries = BTreeMap::new();
        for (word, coeff) in items {
            if word.len() != k {
                return Err(Error::DegreeMismatch {
                    expected: k,
                    found: word.len(),
                });
            }
            if word.iter().any(|&(r, c)| r >= dim || c >= dim) {
                return Err(Error::InvalidIndex(dim as i64 + 1));
            }
            add_entry(&mut entries, word, coeff);
        }
        Ok(Self { k, space, entries })
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn space(&self) -> &Arc<SuperSpace> {
        &self.space
    }

    pub fn entries(&self) -> &BTreeMap<UnitWord, Scalar> {
        &self.entries
    }

    pub fn coeff(&self, word: &[(usize, usize)]) -> Scalar {
        self.entries.get(word).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn key_parity(&self, word: &[(usize, usize)]) -> u8 {
        word.iter()
            .fold(0, |acc, &(r, c)| acc ^ self.space.unit_parity(r, c))
    }

    /// The common parity of all entries, or `None` if mixed. The zero tensor is even.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.entries.keys().map(|w| self.key_parity(w));
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.parity().is_some()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        if self.k != other.k {
            return Err(Error::DegreeMismatch {
                expected: self.k,
                found: other.k,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.entries {
            add_entry(&mut out.entries, w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let entries = if s.is_zero() {
            BTreeMap::new()
        } else {
            self.entries
                .iter()
                .map(|(w, c)| (w.clone(), c * s))
                .collect()
        };
        Self {
            k: self.k,
            space: self.space.clone(),
            entries,
        }
    }

    /// Product in the tensor superalgebra `End(V)^{(x)k}`, i.e. operator composition
    /// `self o other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut by_rows: HashMap<Vec<usize>, Vec<(&UnitWord, &Scalar)>> = HashMap::new();
        for (w, c) in &other.entries {
            by_rows
                .entry(w.iter().map(|&(r, _)| r).collect())
                .or_default()
                .push((w, c));
        }
        let mut entries = BTreeMap::new();
        for (a, ca) in &self.entries {
            let cols: Vec<usize> = a.iter().map(|&(_, c)| c).collect();
            let Some(matches) = by_rows.get(&cols) else {
                continue;
            };
            let pa = word_parities(&self.space, a);
            for (b, cb) in matches {
                let pb = word_parities(&self.space, b);
                let word: UnitWord = a.iter().zip(b.iter()).map(|(x, y)| (x.0, y.1)).collect();
                let mut coeff = ca * cb;
                if p_exponent(&pa, &pb) == 1 {
                    coeff.negate();
                }
                add_entry(&mut entries, word, coeff);
            }
        }
        Ok(Self {
            k: self.k,
            space: self.space.clone(),
            entries,
        })
    }

    /// `self o other - (-1)^{|self||other|} other o self` for homogeneous operands.
    pub fn supercommutator(&self, other: &Self) -> Result<Self> {
        let (Some(pa), Some(pb)) = (self.parity(), other.parity()) else {
            return Err(Error::InvalidParameters(
                "supercommutator needs homogeneous operands".into(),
            ));
        };
        let ab = self.compose(other)?;
        let ba = other.compose(self)?;
        if pa & pb == 1 {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        }
    }

    /// Action on `V^{(x)k}`; the Koszul sign is `prod_{s>t} (-1)^{|a_s||v_t|}`.
    pub fn apply(&self, v: &VectorTensor) -> Result<VectorTensor> {
        if self.space != v.space {
            return Err(Error::SpaceMismatch);
        }
        if self.k != v.k {
            return Err(Error::DegreeMismatch {
                expected: self.k,
                found: v.k,
            });
        }
        let mut by_cols: HashMap<Vec<usize>, Vec<(&UnitWord, &Scalar)>> = HashMap::new();
        for (w, c) in &self.entries {
            by_cols
                .entry(w.iter().map(|&(_, c)| c).collect())
                .or_default()
                .push((w, c));
        }
        let mut entries = BTreeMap::new();
        for (word, cv) in &v.entries {
            let Some(matches) = by_cols.get(word) else {
                continue;
            };
            let pv: Vec<u8> = word.iter().map(|&i| self.space.parity(i)).collect();
            for (a, ca) in matches {
                let pa = word_parities(&self.space, a);
                let mut coeff = *ca * cv;
                if p_exponent(&pa, &pv) == 1 {
                    coeff.negate();
                }
                add_entry(&mut entries, a.iter().map(|&(r, _)| r).collect(), coeff);
            }
        }
        Ok(VectorTensor {
            k: self.k,
            space: self.space.clone(),
            entries,
        })
    }

    /// `Str(e_ij) = (-1)^{|i|} delta_ij` for `k = 1`.
    pub fn supertrace(&self) -> Result<Scalar> {
        if self.k != 1 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                found: self.k,
            });
        }
        Ok(self.full_supertrace())
    }

    /// `Str_{1..k}`, the product of the supertraces of all factors.
    pub fn full_supertrace(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, c) in &self.entries {
            if w.iter().all(|&(r, c)| r == c) {
                let odd = w.iter().fold(0, |a, &(r, _)| a ^ self.space.parity(r));
                if odd == 1 {
                    acc -= c;
                } else {
                    acc += c;
                }
            }
        }
        acc
    }

    /// `Str_a` on the 1-based position `a`.
    pub fn partial_supertrace(&self, a: usize) -> Result<Self> {
        if a == 0 || a > self.k {
            return Err(Error::PositionOutOfRange {
                position: a,
                max: self.k,
            });
        }
        let mut entries = BTreeMap::new();
        for (w, c) in &self.entries {
            let (r, col) = w[a - 1];
            if r != col {
                continue;
            }
            let mut rest = w.clone();
            rest.remove(a - 1);
            let coeff = if self.space.parity(r) == 1 { -c } else { c.clone() };
            add_entry(&mut entries, rest, coeff);
        }
        Ok(Self {
            k: self.k - 1,
            space: self.space.clone(),
            entries,
        })
    }

    /// Factorwise `e_ij^{st} = (-1)^{(|i|+|j|)|i|} e_ji`.
    pub fn supertranspose(&self) -> Self {
        let mut entries = BTreeMap::new();
        for (w, c) in &self.entries {
            let mut odd = 0;
            let word: UnitWord = w
                .iter()
                .map(|&(i, j)| {
                    odd ^= self.space.unit_parity(i, j) & self.space.parity(i);
                    (j, i)
                })
                .collect();
            let coeff = if odd == 1 { -c } else { c.clone() };
            add_entry(&mut entries, word, coeff);
        }
        Self {
            k: self.k,
            space: self.space.clone(),
            entries,
        }
    }

    /// Concatenation `self (x) other` in `End(V)^{(x)(k+l)}`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        let mut entries = BTreeMap::new();
        for (a, ca) in &self.entries {
            for (b, cb) in &other.entries {
                let mut w = a.clone();
                w.extend_from_slice(b);
                add_entry(&mut entries, w, ca * cb);
            }
        }
        Ok(Self {
            k: self.k + other.k,
            space: self.space.clone(),
            entries,
        })
    }

    /// Places a degree-`l` tensor at 1-based positions `a..a+l` of a degree-`k`
    /// tensor, with identities elsewhere.
    pub fn embed_at(&self, a: usize, k: usize) -> Result<Self> {
        if a == 0 || a + self.k - 1 > k {
            return Err(Error::PositionOutOfRange { position: a, max: k });
        }
        let left = Tensor::identity(self.space.clone(), a - 1);
        let right = Tensor::identity(self.space.clone(), k + 1 - a - self.k);
        left.tensor(self)?.tensor(&right)
    }

    /// The plain matrix of this tensor as an operator on `V^{(x)k}` (inverse of `Omega`).
    pub fn to_operator(&self) -> Operator {
        let mut entries = BTreeMap::new();
        for (w, c) in &self.entries {
            let rows: Vec<usize> = w.iter().map(|&(r, _)| r).collect();
            let cols: Vec<usize> = w.iter().map(|&(_, c)| c).collect();
            let coeff = if omega_sign(&self.space, &rows, &cols) {
                -c
            } else {
                c.clone()
            };
            entries.insert((rows, cols), coeff);
        }
        Operator {
            k: self.k,
            space: self.space.clone(),
            entries,
        }
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|(w, c)| {
                let key: Vec<[i64; 2]> = w
                    .iter()
                    .map(|&(r, c)| [self.space.label(r), self.space.label(c)])
                    .collect();
                json!({"key": key, "coeff": c})
            })
            .collect();
        json!({"k": self.k, "space": self.space.to_json(), "entries": entries})
    }
}

/// Sign of `p(I+J, I) = p(I,I) p(J,I)` for rows `J` and columns `I`.
fn omega_sign(space: &SuperSpace, rows: &[usize], cols: &[usize]) -> bool {
    let pi: Vec<u8> = cols.iter().map(|&i| space.parity(i)).collect();
    let pj: Vec<u8> = rows.iter().map(|&j| space.parity(j)).collect();
    (p_exponent(&pi, &pi) ^ p_exponent(&pj, &pi)) == 1
}

/// All words of length `k` over `0..dim`, lexicographically.
pub fn all_words(dim: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(k)];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * dim);
        for w in &out {
            for i in 0..dim {
                let mut v = w.clone();
                v.push(i);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Sparse vector in `V^{(x)k}` keyed by basis words `e_{i1} (x) ... (x) e_{ik}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorTensor {
    k: usize,
    space: Arc<SuperSpace>,
    entries: BTreeMap<Vec<usize>, Scalar>,
}

impl VectorTensor {
    pub fn zero(space: Arc<SuperSpace>, k: usize) -> Self {
        Self {
            k,
            space,
            entries: BTreeMap::new(),
        }
    }

    pub fn basis(space: Arc<SuperSpace>, word: Vec<usize>) -> Self {
        let k = word.len();
        let mut entries = BTreeMap::new();
        entries.insert(word, Scalar::one());
        Self { k, space, entries }
    }

    pub fn from_entries(
        space: Arc<SuperSpace>,
        k: usize,
        items: impl IntoIterator<Item = (Vec<usize>, Scalar)>,
    ) -> Self {
        let mut entries = BTreeMap::new();
        for (w, c) in items {
            debug_assert_eq!(w.len(), k);
            add_entry(&mut entries, w, c);
        }
        Self { k, space, entries }
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn space(&self) -> &Arc<SuperSpace> {
        &self.space
    }

    pub fn entries(&self) -> &BTreeMap<Vec<usize>, Scalar> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.entries {
            add_entry(&mut out.entries, w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_entries(
            self.space.clone(),
            self.k,
            self.entries.iter().map(|(w, c)| (w.clone(), c * s)),
        )
    }
}

/// Plain matrix `f(e_I) = sum_J a^J_I e_J` of an operator on `V^{(x)k}`, keyed `(J, I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operator {
    k: usize,
    space: Arc<SuperSpace>,
    entries: BTreeMap<(Vec<usize>, Vec<usize>), Scalar>,
}

impl Operator {
    pub fn zero(space: Arc<SuperSpace>, k: usize) -> Self {
        Self {
            k,
            space,
            entries: BTreeMap::new(),
        }
    }

    /// Builds the operator from its values on basis words.
    pub fn from_basis_images(
        space: Arc<SuperSpace>,
        k: usize,
        mut image: impl FnMut(&[usize]) -> VectorTensor,
    ) -> Self {
        let mut entries = BTreeMap::new();
        for cols in all_words(space.dim(), k) {
            let v = image(&cols);
            for (rows, c) in v.entries {
                add_entry(&mut entries, (rows, cols.clone()), c);
            }
        }
        Self { k, space, entries }
    }

    pub fn entries(&self) -> &BTreeMap<(Vec<usize>, Vec<usize>), Scalar> {
        &self.entries
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        let mut by_rows: HashMap<&Vec<usize>, Vec<(&Vec<usize>, &Scalar)>> = HashMap::new();
        for ((j, i), c) in &other.entries {
            by_rows.entry(j).or_default().push((i, c));
        }
        let mut entries = BTreeMap::new();
        for ((j, mid), ca) in &self.entries {
            if let Some(list) = by_rows.get(mid) {
                for (i, cb) in list {
                    add_entry(&mut entries, (j.clone(), (*i).clone()), ca * cb);
                }
            }
        }
        Ok(Self {
            k: self.k,
            space: self.space.clone(),
            entries,
        })
    }

    pub fn apply(&self, v: &VectorTensor) -> VectorTensor {
        let mut entries = BTreeMap::new();
        for ((j, i), c) in &self.entries {
            if let Some(cv) = v.entries.get(i) {
                add_entry(&mut entries, j.clone(), c * cv);
            }
        }
        VectorTensor {
            k: self.k,
            space: self.space.clone(),
            entries,
        }
    }

    /// `Omega_k`: the element `sum p(I+J, I) a^J_I e_{j1 i1} (x) ... (x) e_{jk ik}`.
    pub fn omega(&self) -> Tensor {
        let mut entries = BTreeMap::new();
        for ((rows, cols), c) in &self.entries {
            let word: UnitWord = rows.iter().copied().zip(cols.iter().copied()).collect();
            let coeff = if omega_sign(&self.space, rows, cols) {
                -c
            } else {
                c.clone()
            };
            entries.insert(word, coeff);
        }
        Tensor {
            k: self.k,
            space: self.space.clone(),
            entries,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl11() -> Arc<SuperSpace> {
        Arc::new(SuperSpace::new(Family::Gl, 1, 1).unwrap())
    }

    #[test]
    fn compose_matrix_units() {
        let s = gl11();
        let a = Tensor::unit(s.clone(), vec![(0, 0)]);
        let b = Tensor::unit(s.clone(), vec![(0, 1)]);
        assert_eq!(a.compose(&b).unwrap(), b);
    }

    #[test]
    fn compose_odd_pair() {
        let s = gl11();
        let a = Tensor::unit(s.clone(), vec![(0, 1), (1, 0)]);
        let b = Tensor::unit(s.clone(), vec![(1, 0), (0, 1)]);
        let expect = Tensor::unit(s.clone(), vec![(0, 0), (1, 1)]).scale(&Scalar::from_int(-1));
        assert_eq!(a.compose(&b).unwrap(), expect);
        // Cross-check on every basis vector.
        for w in all_words(2, 2) {
            let v = VectorTensor::basis(s.clone(), w);
            let lhs = a.compose(&b).unwrap().apply(&v).unwrap();
            let rhs = a.apply(&b.apply(&v).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn apply_examples() {
        let s = gl11();
        let v = VectorTensor::basis(s.clone(), vec![0, 1]);
        assert_eq!(Tensor::identity(s.clone(), 2).apply(&v).unwrap(), v);
        let a = Tensor::unit(s.clone(), vec![(0, 1)]).embed_at(2, 2).unwrap();
        assert_eq!(
            a.apply(&v).unwrap(),
            VectorTensor::basis(s.clone(), vec![0, 0])
        );
        assert!(Tensor::zero(s.clone(), 2).apply(&v).unwrap().is_zero());
    }

    #[test]
    fn supertrace_examples() {
        let s = gl11();
        assert!(Tensor::unit(s.clone(), vec![(0, 0)]).supertrace().unwrap().is_one());
        assert_eq!(
            Tensor::unit(s.clone(), vec![(1, 1)]).supertrace().unwrap(),
            Scalar::from_int(-1)
        );
        let s21 = Arc::new(SuperSpace::new(Family::Gl, 2, 1).unwrap());
        assert_eq!(
            Tensor::identity(s21, 1).supertrace().unwrap(),
            Scalar::from_int(1)
        );
    }

    #[test]
    fn partial_supertrace_examples() {
        let s = gl11();
        let t = Tensor::unit(s.clone(), vec![(0, 0), (0, 0)]);
        assert_eq!(
            t.partial_supertrace(2).unwrap(),
            Tensor::unit(s.clone(), vec![(0, 0)])
        );
        let t = Tensor::unit(s.clone(), vec![(1, 1), (0, 1)]);
        assert_eq!(
            t.partial_supertrace(1).unwrap(),
            Tensor::unit(s.clone(), vec![(0, 1)]).scale(&Scalar::from_int(-1))
        );
        assert!(t.partial_supertrace(3).is_err());
    }

    #[test]
    fn supertranspose_examples() {
        let s = gl11();
        assert_eq!(
            Tensor::unit(s.clone(), vec![(0, 1)]).supertranspose(),
            Tensor::unit(s.clone(), vec![(1, 0)])
        );
        assert_eq!(
            Tensor::unit(s.clone(), vec![(1, 0)]).supertranspose(),
            Tensor::unit(s.clone(), vec![(0, 1)]).scale(&Scalar::from_int(-1))
        );
        let id = Tensor::identity(s, 2);
        assert_eq!(id.supertranspose(), id);
    }

    #[test]
    fn omega_round_trip() {
        let s = gl11();
        let t = Tensor::unit(s.clone(), vec![(0, 1), (1, 1), (1, 0)]);
        assert_eq!(t.to_operator().omega(), t);
    }

    #[test]
    fn q_labels() {
        let s = SuperSpace::new(Family::Q, 0, 2).unwrap();
        assert_eq!(s.label(0), 1);
        assert_eq!(s.label(3), -2);
        assert_eq!(s.position(-1).unwrap(), 2);
        assert_eq!(s.prime(1), 3);
        assert!(s.position(0).is_err());
    }
}
