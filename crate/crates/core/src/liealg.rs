//! Matrix realizations of `gl(m|n)`, `osp(m|2n)`, `p(n)` and `q(n)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{Rational, Scalar};
use crate::superlinalg::{accumulate, Family, SuperSpace, Tensor};

/// Triangular class of a generator; also the coarse PBW order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TriClass {
    Lower,
    Cartan,
    Upper,
}

type Matrix = BTreeMap<(usize, usize), Scalar>;

#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    /// Canonical index pair (positions).
    pub row: usize,
    pub col: usize,
    pub parity: u8,
    pub class: TriClass,
    matrix: Matrix,
}

impl Generator {
    /// The matrix `iota(x)`.
    pub fn matrix(&self) -> &BTreeMap<(usize, usize), Scalar> {
        &self.matrix
    }
}

/// A Cartan variable of the Harish-Chandra polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanVar {
    pub generator: usize,
    pub name: String,
    pub primed: bool,
}

/// Sparse linear combination of generators, keyed by generator id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieElement(BTreeMap<usize, Scalar>);

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(id: usize) -> Self {
        let mut m = BTreeMap::new();
        m.insert(id, Scalar::one());
        Self(m)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut m = BTreeMap::new();
        for (g, c) in terms {
            accumulate(&mut m, g, c);
        }
        Self(m)
    }

    pub fn terms(&self) -> &BTreeMap<usize, Scalar> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, g: usize) -> Scalar {
        self.0.get(&g).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut m = self.0.clone();
        for (g, c) in &other.0 {
            accumulate(&mut m, *g, c.clone());
        }
        Self(m)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_terms(self.0.iter().map(|(g, c)| (*g, c * s)))
    }

    /// Common parity of the terms; `None` when mixed. Zero counts as even.
    pub fn parity(&self, alg: &AlgebraSpec) -> Option<u8> {
        let mut it = self.0.keys().map(|&g| alg.gens[g].parity);
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }

    pub fn display(&self, alg: &AlgebraSpec) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(g, c)| format!("({c}){}", alg.gens[*g].name))
            .collect();
        parts.join(" + ")
    }
}

/// A realized classical Lie superalgebra with precomputed structure data.
pub struct AlgebraSpec {
    space: Arc<SuperSpace>,
    gens: Vec<Generator>,
    bracket: Vec<Vec<LieElement>>,
    projection: Vec<Vec<LieElement>>,
    cartan: Vec<CartanVar>,
    cartan_index: Vec<Option<usize>>,
    rho: Option<Vec<Rational>>,
}

impl fmt::Debug for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraSpec({})", self.label())
    }
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = BTreeMap::new();
    for (&(i, j), x) in a {
        for (&(j2, l), y) in b.range((j, 0)..(j + 1, 0)) {
            debug_assert_eq!(j, j2);
            accumulate(&mut out, (i, l), x * y);
        }
    }
    out
}

fn mat_add(a: &Matrix, b: &Matrix, s: &Scalar) -> Matrix {
    let mut out = a.clone();
    for (k, v) in b {
        accumulate(&mut out, *k, v * s);
    }
    out
}

/// `e_ab + s e_cd` as a sparse matrix.
fn two_units(a: (usize, usize), c: (usize, usize), s: Scalar) -> Matrix {
    let mut m = BTreeMap::new();
    accumulate(&mut m, a, Scalar::one());
    accumulate(&mut m, c, s);
    m
}

impl AlgebraSpec {
    /// Builds `gl(m|n)`, `osp(m|2n)`, `q(n)` or `p(n)`.
    pub fn build(family: Family, m: usize, n: usize) -> Result<Self> {
        let space = Arc::new(SuperSpace::new(family, m, n)?);
        let dim = space.dim();
        let mut gens = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let matrix = match family {
                    Family::Gl => two_units((i, j), (i, j), Scalar::zero()),
                    Family::Osp | Family::P => {
                        let partner = (space.prime(j), space.prime(i));
                        if partner < (i, j) {
                            continue;
                        }
                        two_units((i, j), partner, -Self::relation_sign(&space, i, j))
                    }
                    Family::Q => {
                        if space.label(i) < 0 {
                            continue;
                        }
                        two_units((i, j), (space.prime(i), space.prime(j)), Scalar::one())
                    }
                };
                if matrix.is_empty() {
                    continue;
                }
                let class = Self::classify(&space, i, j);
                gens.push(Generator {
                    name: format!(
                        "{}[{},{}]",
                        family.letter(),
                        space.label(i),
                        space.label(j)
                    ),
                    row: i,
                    col: j,
                    parity: space.unit_parity(i, j),
                    class,
                    matrix,
                });
            }
        }
        gens.sort_by_key(|g| (g.class, g.row, g.col));

        // Each canonical pair is a pivot: no other generator touches it.
        for (a, g) in gens.iter().enumerate() {
            for (b, h) in gens.iter().enumerate() {
                if a != b && h.matrix.contains_key(&(g.row, g.col)) {
                    return Err(Error::InvalidParameters(format!(
                        "generators {} and {} share a pivot",
                        g.name, h.name
                    )));
                }
            }
        }

        let mut alg = AlgebraSpec {
            space,
            gens,
            bracket: Vec::new(),
            projection: Vec::new(),
            cartan: Vec::new(),
            cartan_index: Vec::new(),
            rho: None,
        };
        let count = alg.gens.len();
        let mut bracket = vec![vec![LieElement::zero(); count]; count];
        for a in 0..count {
            for b in 0..count {
                let x = &alg.gens[a].matrix;
                let y = &alg.gens[b].matrix;
                let sign = Scalar::sign(alg.gens[a].parity & alg.gens[b].parity == 0);
                let comm = mat_add(&mat_mul(x, y), &mat_mul(y, x), &sign);
                bracket[a][b] = alg.decompose(&comm)?;
            }
        }
        alg.bracket = bracket;

        let half = Scalar::ratio(1, 2);
        let mut projection = vec![vec![LieElement::zero(); dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                let s = &alg.space;
                let target = match family {
                    Family::Gl => two_units((a, b), (a, b), Scalar::zero()),
                    Family::Osp | Family::P => {
                        let m = two_units(
                            (a, b),
                            (s.prime(b), s.prime(a)),
                            -Self::relation_sign(s, a, b),
                        );
                        m.into_iter().map(|(k, v)| (k, &v * &half)).collect()
                    }
                    Family::Q => {
                        let m = two_units((a, b), (s.prime(a), s.prime(b)), Scalar::one());
                        m.into_iter().map(|(k, v)| (k, &v * &half)).collect()
                    }
                };
                projection[a][b] = alg.decompose(&target)?;
            }
        }
        alg.projection = projection;
        alg.setup_cartan()?;
        Ok(alg)
    }

    /// `(-1)^{|j|(|i|+|j|)} epsilon_i epsilon_j`, the sign relating `e_ij` and `e_{j'i'}`.
    fn relation_sign(space: &SuperSpace, i: usize, j: usize) -> Scalar {
        let odd = space.parity(j) & space.unit_parity(i, j) == 1;
        let eps = space.epsilon(i) * space.epsilon(j);
        Scalar::sign(odd ^ (eps < 0))
    }

    fn classify(space: &SuperSpace, i: usize, j: usize) -> TriClass {
        let (a, b) = match space.family() {
            Family::Q => (space.label(i).abs(), space.label(j).abs()),
            _ => (i as i64, j as i64),
        };
        match a.cmp(&b) {
            std::cmp::Ordering::Less => TriClass::Upper,
            std::cmp::Ordering::Equal => TriClass::Cartan,
            std::cmp::Ordering::Greater => TriClass::Lower,
        }
    }

    fn setup_cartan(&mut self) -> Result<()> {
        let s = self.space.clone();
        let (m, n) = (s.m(), s.n());
        let mut vars = Vec::new();
        match s.family() {
            Family::Gl => {
                for i in 0..m {
                    vars.push((i, format!("h{}", i + 1), false));
                }
                for j in 0..n {
                    vars.push((m + j, format!("h'{}", j + 1), true));
                }
            }
            Family::Osp => {
                for i in 0..m / 2 {
                    vars.push((n + i, format!("h{}", i + 1), false));
                }
                for j in 0..n {
                    vars.push((j, format!("h'{}", j + 1), true));
                }
            }
            Family::Q | Family::P => {}
        }
        for (pos, name, primed) in vars {
            let generator = self
                .gens
                .iter()
                .position(|g| g.row == pos && g.col == pos)
                .ok_or_else(|| Error::InvalidParameters(format!("missing Cartan {name}")))?;
            self.cartan.push(CartanVar {
                generator,
                name,
                primed,
            });
        }
        self.cartan_index = vec![None; self.gens.len()];
        for (v, c) in self.cartan.iter().enumerate() {
            self.cartan_index[c.generator] = Some(v);
        }
        if matches!(s.family(), Family::Gl | Family::Osp) {
            let half = Rational::new(1.into(), 2.into());
            let mut rho = vec![Rational::zero(); self.cartan.len()];
            for (x, g) in self.gens.iter().enumerate() {
                if g.class != TriClass::Upper {
                    continue;
                }
                for (v, var) in self.cartan.iter().enumerate() {
                    let br = &self.bracket[var.generator][x];
                    let alpha = br.coeff(x);
                    if br.terms().len() > usize::from(!alpha.is_zero()) || !alpha.is_real() {
                        return Err(Error::InvalidParameters(format!(
                            "{} is not a root vector",
                            g.name
                        )));
                    }
                    let contrib = alpha.re() * &half;
                    if g.parity == 0 {
                        rho[v] += contrib;
                    } else {
                        rho[v] -= contrib;
                    }
                }
            }
            self.rho = Some(rho);
        }
        Ok(())
    }

    /// Expresses a matrix in the generator basis.
    pub fn decompose(&self, matrix: &BTreeMap<(usize, usize), Scalar>) -> Result<LieElement> {
        let mut terms = Vec::new();
        for (id, g) in self.gens.iter().enumerate() {
            if let Some(v) = matrix.get(&(g.row, g.col)) {
                let pivot = &g.matrix[&(g.row, g.col)];
                terms.push((id, v.checked_div(pivot)?));
            }
        }
        let elem = LieElement::from_terms(terms);
        if &self.matrix_of(&elem) != matrix {
            return Err(Error::NotInSpan);
        }
        Ok(elem)
    }

    /// `iota(x)` for a general element.
    pub fn matrix_of(&self, x: &LieElement) -> BTreeMap<(usize, usize), Scalar> {
        let mut out = BTreeMap::new();
        for (g, c) in x.terms() {
            for (k, v) in &self.gens[*g].matrix {
                accumulate(&mut out, *k, c * v);
            }
        }
        out
    }

    pub fn space(&self) -> &Arc<SuperSpace> {
        &self.space
    }

    pub fn family(&self) -> Family {
        self.space.family()
    }

    pub fn label(&self) -> String {
        let s = &self.space;
        match s.family() {
            Family::Gl => format!("gl({}|{})", s.m(), s.n()),
            Family::Osp => format!("osp({}|{})", s.m(), 2 * s.n()),
            Family::Q => format!("q({})", s.n()),
            Family::P => format!("p({})", s.n()),
        }
    }

    pub fn dim(&self) -> usize {
        self.gens.len()
    }

    /// Dimension predicted by the closed formula for the family.
    pub fn expected_dim(&self) -> usize {
        let (m, n) = (self.space.m(), self.space.n());
        match self.family() {
            Family::Gl => (m + n) * (m + n),
            Family::Osp => m * m.saturating_sub(1) / 2 + n * (2 * n + 1) + 2 * m * n,
            Family::Q | Family::P => 2 * n * n,
        }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn generator(&self, id: usize) -> &Generator {
        &self.gens[id]
    }

    pub fn gen_parity(&self, id: usize) -> u8 {
        self.gens[id].parity
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    /// Generator id by canonical 1-based (or signed) labels.
    pub fn by_labels(&self, i: i64, j: i64) -> Result<usize> {
        let (a, b) = (self.space.position(i)?, self.space.position(j)?);
        self.gens
            .iter()
            .position(|g| g.row == a && g.col == b)
            .ok_or(Error::InvalidIndex(i))
    }

    /// Table entry `[x_a, x_b]`.
    pub fn bracket_gens(&self, a: usize, b: usize) -> &LieElement {
        &self.bracket[a][b]
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> LieElement {
        let mut out = BTreeMap::new();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let coeff = ca * cb;
                for (g, c) in self.bracket[*a][*b].terms() {
                    accumulate(&mut out, *g, &coeff * c);
                }
            }
        }
        LieElement(out)
    }

    /// `pi~(e_ab)` for 0-based positions.
    pub fn pi_tilde(&self, a: usize, b: usize) -> Result<&LieElement> {
        let dim = self.space.dim();
        if a >= dim || b >= dim {
            return Err(Error::InvalidIndex(a.max(b) as i64 + 1));
        }
        Ok(&self.projection[a][b])
    }

    /// The family's matrix-presentation entry `X_ij` (`E_ij`, `F_ij`, `G_ij`, `H_ij`)
    /// for any index pair, canonical or not.
    pub fn family_element(&self, a: usize, b: usize) -> Result<LieElement> {
        let p = self.pi_tilde(a, b)?;
        Ok(match self.family() {
            Family::Gl => p.clone(),
            _ => p.scale(&Scalar::from_int(2)),
        })
    }

    /// `Phi_k(x) = sum_a 1 (x) .. (x) iota(x) (x) .. (x) 1`.
    pub fn phi_k(&self, x: &LieElement, k: usize) -> Result<Tensor> {
        if k == 0 {
            return Err(Error::InvalidParameters("Phi_k needs k >= 1".into()));
        }
        let single = Tensor::from_entries(
            self.space.clone(),
            1,
            self.matrix_of(x).into_iter().map(|(k, v)| (vec![k], v)),
        )?;
        let mut acc = Tensor::zero(self.space.clone(), k);
        for a in 1..=k {
            acc = acc.add(&single.embed_at(a, k)?)?;
        }
        Ok(acc)
    }

    pub fn cartan_vars(&self) -> &[CartanVar] {
        &self.cartan
    }

    /// Variable index of a Cartan generator in the Harish-Chandra ring.
    pub fn cartan_var_of(&self, id: usize) -> Option<usize> {
        self.cartan_index.get(id).copied().flatten()
    }

    /// Number of unprimed and primed Cartan variables.
    pub fn cartan_split(&self) -> (usize, usize) {
        let primed = self.cartan.iter().filter(|c| c.primed).count();
        (self.cartan.len() - primed, primed)
    }

    /// Coordinates of the Weyl vector in the basis dual to the Cartan variables.
    pub fn rho(&self) -> Result<Vec<Rational>> {
        match self.family() {
            Family::Q => Ok(vec![Rational::zero(); self.space.n()]),
            Family::P => Err(Error::Unsupported {
                family: "p",
                what: "Weyl vector".into(),
            }),
            _ => Ok(self.rho.clone().unwrap_or_default()),
        }
    }
}
