//! `U(g)` in PBW normal form, the maps `psi` and `eta'`, centrality, and the
//! Harish-Chandra projection with its polynomial predicates.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::rc::Rc;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{Rational, Scalar};
use crate::freealg::{monomials_json, symmetrize_word, word_parity, SymElement, TensorAlgebraElement, Word};
use crate::liealg::{AlgebraSpec, LieElement};
use crate::superlinalg::{accumulate, Family};

/// Element of `U(g)` over normally ordered monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PbwElement(BTreeMap<Word, Scalar>);

impl PbwElement {
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

    pub fn generator(id: usize) -> Self {
        let mut m = BTreeMap::new();
        m.insert(vec![id], Scalar::one());
        Self(m)
    }

    pub fn from_lie(x: &LieElement) -> Self {
        let mut m = BTreeMap::new();
        for (g, c) in x.terms() {
            accumulate(&mut m, vec![*g], c.clone());
        }
        Self(m)
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `true` when only the empty monomial (or nothing) is present.
    pub fn is_scalar(&self) -> bool {
        self.0.keys().all(Vec::is_empty)
    }

    pub fn constant_term(&self) -> Scalar {
        self.0.get(&Vec::new()).cloned().unwrap_or_default()
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

    pub fn max_degree(&self) -> usize {
        self.0.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Splits into even and odd parts.
    pub fn parity_parts(&self, alg: &AlgebraSpec) -> [PbwElement; 2] {
        let mut parts = [BTreeMap::new(), BTreeMap::new()];
        for (w, c) in &self.0 {
            parts[word_parity(alg, w) as usize].insert(w.clone(), c.clone());
        }
        let [a, b] = parts;
        [PbwElement(a), PbwElement(b)]
    }

    pub fn to_json(&self, alg: &AlgebraSpec) -> Value {
        monomials_json(alg, &self.0)
    }
}

/// Which out-of-order adjacent pair gets rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

type Normal = Rc<BTreeMap<Word, Scalar>>;

/// PBW rewriting with a memo of normal forms of words.
pub struct Normalizer<'a> {
    alg: &'a AlgebraSpec,
    strategy: Strategy,
    memo: HashMap<Word, Normal>,
}

impl<'a> Normalizer<'a> {
    pub fn new(alg: &'a AlgebraSpec) -> Self {
        Self::with_strategy(alg, Strategy::Leftmost)
    }

    pub fn with_strategy(alg: &'a AlgebraSpec, strategy: Strategy) -> Self {
        Self {
            alg,
            strategy,
            memo: HashMap::new(),
        }
    }

    fn is_violation(&self, x: usize, y: usize) -> bool {
        x > y || (x == y && self.alg.gen_parity(x) == 1)
    }

    fn violation(&self, w: &[usize]) -> Option<usize> {
        let mut positions = (0..w.len().saturating_sub(1)).filter(|&i| self.is_violation(w[i], w[i + 1]));
        match self.strategy {
            Strategy::Leftmost => positions.next(),
            Strategy::Rightmost => positions.next_back(),
        }
    }

    fn nf(&mut self, w: &[usize]) -> Normal {
        if let Some(r) = self.memo.get(w) {
            return r.clone();
        }
        let mut acc = BTreeMap::new();
        match self.violation(w) {
            None => {
                acc.insert(w.to_vec(), Scalar::one());
            }
            Some(i) => {
                let (x, y) = (w[i], w[i + 1]);
                let alg = self.alg;
                let replace = |g: usize| {
                    let mut nw = Vec::with_capacity(w.len() - 1);
                    nw.extend_from_slice(&w[..i]);
                    nw.push(g);
                    nw.extend_from_slice(&w[i + 2..]);
                    nw
                };
                if x == y {
                    let half = Scalar::ratio(1, 2);
                    for (g, c) in alg.bracket_gens(x, y).terms() {
                        let sub = self.nf(&replace(*g));
                        let f = c * &half;
                        for (k, v) in sub.iter() {
                            accumulate(&mut acc, k.clone(), &f * v);
                        }
                    }
                } else {
                    let mut swapped = w.to_vec();
                    swapped.swap(i, i + 1);
                    let odd = alg.gen_parity(x) & alg.gen_parity(y) == 1;
                    let sub = self.nf(&swapped);
                    for (k, v) in sub.iter() {
                        accumulate(&mut acc, k.clone(), if odd { -v } else { v.clone() });
                    }
                    for (g, c) in alg.bracket_gens(x, y).terms() {
                        let sub = self.nf(&replace(*g));
                        for (k, v) in sub.iter() {
                            accumulate(&mut acc, k.clone(), c * v);
                        }
                    }
                }
            }
        }
        let r = Rc::new(acc);
        self.memo.insert(w.to_vec(), r.clone());
        r
    }

    /// Normal form of `coeff * word`.
    pub fn normalize_word(&mut self, word: &[usize], coeff: &Scalar) -> PbwElement {
        self.normalize_terms([(word.to_vec(), coeff.clone())])
    }

    /// Normal form of a linear combination of arbitrary words.
    pub fn normalize_terms(&mut self, terms: impl IntoIterator<Item = (Word, Scalar)>) -> PbwElement {
        let mut acc = BTreeMap::new();
        for (w, c) in terms {
            if c.is_zero() {
                continue;
            }
            let n = self.nf(&w);
            for (k, v) in n.iter() {
                accumulate(&mut acc, k.clone(), &c * v);
            }
        }
        PbwElement(acc)
    }

    pub fn multiply(&mut self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        let mut words = Vec::with_capacity(a.0.len() * b.0.len());
        for (x, cx) in &a.0 {
            for (y, cy) in &b.0 {
                let mut w = x.clone();
                w.extend_from_slice(y);
                words.push((w, cx * cy));
            }
        }
        self.normalize_terms(words)
    }

    /// `u x - (-1)^{|u||x|} x u` for a homogeneous `u` of parity `pu`.
    fn supercommutator_gen(&mut self, u: &PbwElement, pu: u8, x: usize) -> PbwElement {
        let px = self.alg.gen_parity(x);
        let mut words = Vec::with_capacity(2 * u.0.len());
        for (w, c) in &u.0 {
            let mut right = w.clone();
            right.push(x);
            words.push((right, c.clone()));
            let mut left = Vec::with_capacity(w.len() + 1);
            left.push(x);
            left.extend_from_slice(w);
            words.push((left, if pu & px == 1 { c.clone() } else { -c }));
        }
        self.normalize_terms(words)
    }
}

/// Normal form of `coeff * word`.
pub fn pbw_normalize(alg: &AlgebraSpec, word: &[usize], coeff: &Scalar) -> PbwElement {
    Normalizer::new(alg).normalize_word(word, coeff)
}

pub fn u_multiply(alg: &AlgebraSpec, a: &PbwElement, b: &PbwElement) -> PbwElement {
    Normalizer::new(alg).multiply(a, b)
}

/// Supersymmetrization `psi: S(g) -> U(g)`.
pub fn psi_map(alg: &AlgebraSpec, s: &SymElement) -> PbwElement {
    let mut norm = Normalizer::new(alg);
    let mut words = Vec::new();
    for (w, c) in s.terms() {
        for (word, wc) in symmetrize_word(alg, w) {
            words.push((word, &wc * c));
        }
    }
    norm.normalize_terms(words)
}

/// The canonical algebra map `eta': T(g) -> U(g)`.
pub fn eta_prime(alg: &AlgebraSpec, t: &TensorAlgebraElement) -> PbwElement {
    Normalizer::new(alg).normalize_terms(t.terms().iter().map(|(w, c)| (w.clone(), c.clone())))
}

/// Adjoint action `a . u = a u - (-1)^{|a||u|} u a`, componentwise in parity.
pub fn adjoint_act_u(alg: &AlgebraSpec, a: &LieElement, u: &PbwElement) -> PbwElement {
    let mut norm = Normalizer::new(alg);
    let mut acc = PbwElement::zero();
    for (pu, part) in u.parity_parts(alg).iter().enumerate() {
        if part.is_zero() {
            continue;
        }
        for (g, c) in a.terms() {
            // x u - (-1)^{|x||u|} u x = -(-1)^{|x||u|} (u x - (-1)^{|x||u|} x u)
            let comm = norm.supercommutator_gen(part, pu as u8, *g);
            let sign = if (pu as u8) & alg.gen_parity(*g) == 1 {
                c.clone()
            } else {
                -c
            };
            acc = acc.add(&comm.scale(&sign));
        }
    }
    acc
}

/// `true` iff `u` supercommutes with every generator.
pub fn is_central(alg: &AlgebraSpec, u: &PbwElement) -> bool {
    let parts = u.parity_parts(alg);
    (0..alg.dim()).into_par_iter().all(|x| {
        let mut norm = Normalizer::new(alg);
        parts
            .iter()
            .enumerate()
            .all(|(pu, part)| part.is_zero() || norm.supercommutator_gen(part, pu as u8, x).is_zero())
    })
}

/// Polynomial in the Cartan variables `h1.., h'1..`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanPolynomial {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl CartanPolynomial {
    pub fn zero(vars: Vec<String>) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vec<String>, c: Scalar) -> Self {
        let mut p = Self::zero(vars);
        let n = p.vars.len();
        accumulate(&mut p.terms, vec![0; n], c);
        p
    }

    pub fn var(vars: Vec<String>, i: usize) -> Self {
        let mut p = Self::zero(vars);
        let mut e = vec![0; p.vars.len()];
        e[i] = 1;
        p.terms.insert(e, Scalar::one());
        p
    }

    /// Variables `h1..hm, h'1..h'n`.
    pub fn standard_vars(m: usize, n: usize) -> Vec<String> {
        (1..=m)
            .map(|i| format!("h{i}"))
            .chain((1..=n).map(|j| format!("h'{j}")))
            .collect()
    }

    pub fn from_terms(vars: Vec<String>, terms: impl IntoIterator<Item = (Vec<u32>, Scalar)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent length");
            accumulate(&mut p.terms, e, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn top_degree_part(&self) -> Self {
        let d = self.degree();
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in &other.terms {
            accumulate(&mut p.terms, e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_terms(self.vars.clone(), self.terms.iter().map(|(e, c)| (e.clone(), c * s)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut p = Self::zero(self.vars.clone());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                accumulate(&mut p.terms, e, ca * cb);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.vars.clone(), Scalar::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes `var_i -> images[i]`; the images share the variable list `vars`.
    pub fn substitute(&self, images: &[CartanPolynomial], vars: Vec<String>) -> Self {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let mut acc = Self::zero(vars.clone());
        for (e, c) in &self.terms {
            let mut term = Self::constant(vars.clone(), c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term.mul(&images[i].pow(k));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Exchanges variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        Self::from_terms(
            self.vars.clone(),
            self.terms.iter().map(|(e, c)| {
                let mut e = e.clone();
                e.swap(i, j);
                (e, c.clone())
            }),
        )
    }

    /// `var_i -> -var_i`.
    pub fn flip_sign(&self, i: usize) -> Self {
        Self::from_terms(
            self.vars.clone(),
            self.terms
                .iter()
                .map(|(e, c)| (e.clone(), if e[i] % 2 == 1 { -c } else { c.clone() })),
        )
    }

    fn symmetric_in(&self, range: std::ops::Range<usize>) -> bool {
        let (a, b) = (range.start, range.end);
        (a..b.saturating_sub(1)).all(|i| self.swap_vars(i, i + 1) == *self)
    }

    /// `true` iff substituting `var_i -> t`, `var_j -> s t` leaves no dependence on `t`.
    fn cancels(&self, i: usize, j: usize, sign: i64) -> bool {
        let n = self.vars.len();
        let mut vars = self.vars.clone();
        vars.push("t".into());
        let images: Vec<CartanPolynomial> = (0..n)
            .map(|v| {
                if v == i {
                    Self::var(vars.clone(), n)
                } else if v == j {
                    Self::var(vars.clone(), n).scale(&Scalar::from_int(sign))
                } else {
                    Self::var(vars.clone(), v)
                }
            })
            .collect();
        let sub = self.substitute(&images, vars);
        sub.terms.keys().all(|e| e[n] == 0)
    }

    /// Human readable form such as `h1+h'1`.
    pub fn to_display(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut items: Vec<(&Vec<u32>, &Scalar)> = self.terms.iter().collect();
        items.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        let mut out = String::new();
        for (idx, (e, c)) in items.into_iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{k}", self.vars[i])
                    }
                })
                .collect();
            let negative = c.is_real() && c.re() < &Rational::from_integer(0.into());
            let mag = if negative { -c } else { c.clone() };
            if negative {
                out.push('-');
            } else if idx > 0 {
                out.push('+');
            }
            let coeff_text = if mag.is_real() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            if mono.is_empty() {
                out.push_str(&coeff_text);
            } else {
                if !mag.is_one() {
                    let _ = write!(out, "{coeff_text}*");
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| json!({"exp": e, "coeff": c}))
            .collect();
        json!({"vars": self.vars, "terms": terms})
    }
}

fn hc_family(alg: &AlgebraSpec) -> Result<()> {
    match alg.family() {
        Family::Gl | Family::Osp => Ok(()),
        f => Err(Error::Unsupported {
            family: f.name(),
            what: "Harish-Chandra projection".into(),
        }),
    }
}

/// `zeta`: keeps the monomials made only of Cartan generators.
pub fn zeta_project(alg: &AlgebraSpec, u: &PbwElement) -> Result<CartanPolynomial> {
    hc_family(alg)?;
    let vars: Vec<String> = alg.cartan_vars().iter().map(|c| c.name.clone()).collect();
    let mut p = CartanPolynomial::zero(vars);
    let n = p.vars.len();
    'mono: for (w, c) in u.terms() {
        let mut e = vec![0u32; n];
        for &g in w {
            match alg.cartan_var_of(g) {
                Some(v) => e[v] += 1,
                None => continue 'mono,
            }
        }
        accumulate(&mut p.terms, e, c.clone());
    }
    Ok(p)
}

/// `h -> h - rho(h)` for every Cartan variable.
pub fn rho_shift(alg: &AlgebraSpec, p: &CartanPolynomial) -> Result<CartanPolynomial> {
    hc_family(alg)?;
    let rho = alg.rho()?;
    let vars = p.vars.clone();
    let images: Vec<CartanPolynomial> = rho
        .iter()
        .enumerate()
        .map(|(i, r)| {
            CartanPolynomial::var(vars.clone(), i)
                .sub(&CartanPolynomial::constant(vars.clone(), Scalar::from_rational(r.clone())))
        })
        .collect();
    Ok(p.substitute(&images, vars))
}

/// The shifted Harish-Chandra image `gamma_{-rho}(zeta(u))`.
pub fn harish_chandra(alg: &AlgebraSpec, u: &PbwElement) -> Result<CartanPolynomial> {
    rho_shift(alg, &zeta_project(alg, u)?)
}

/// Symmetric in `h1..hm` and in `h'1..h'n`, and free of `t` after `h_m = t`, `h'_n = -t`.
pub fn is_supersymmetric(p: &CartanPolynomial, m: usize, n: usize) -> bool {
    assert_eq!(p.vars.len(), m + n, "variable count");
    if !p.symmetric_in(0..m) || !p.symmetric_in(m..m + n) {
        return false;
    }
    m == 0 || n == 0 || p.cancels(m - 1, m + n - 1, -1)
}

/// Invariant under each sign flip and supersymmetric; equivalently a supersymmetric
/// polynomial in the squares with the substitution `h_m^2 = h'_n^2`.
pub fn is_j_poly(p: &CartanPolynomial, m: usize, n: usize) -> bool {
    (0..m + n).all(|i| p.flip_sign(i) == *p) && is_supersymmetric(p, m, n)
}

/// Symmetric and free of `t` after `x_1 = t`, `x_2 = -t`.
pub fn is_q_poly(p: &CartanPolynomial, n: usize) -> bool {
    assert_eq!(p.vars.len(), n, "variable count");
    p.symmetric_in(0..n) && (n < 2 || p.cancels(0, 1, -1))
}
