//! Sign calculus on parity words and the signed place-permutation action.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::Scalar;

/// Parities of a tensor word, each entry 0 or 1.
pub type ParityWord = [u8];

fn check_len(x: &ParityWord, y: usize) -> Result<()> {
    if x.len() != y {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y,
        });
    }
    Ok(())
}

/// Exponent of `p(x, y) = prod_{i>j} (-1)^{x_i y_j}` modulo 2.
pub fn p_exponent(x: &ParityWord, y: &ParityWord) -> u8 {
    let mut acc = 0u8;
    let mut prefix = 0u8;
    for (xi, yi) in x.iter().zip(y) {
        acc ^= xi & prefix;
        prefix ^= yi;
    }
    acc
}

pub fn p_sign(x: &ParityWord, y: &ParityWord) -> Result<Scalar> {
    check_len(x, y.len())?;
    Ok(Scalar::sign(p_exponent(x, y) == 1))
}

/// Exponent of `gamma(x, sigma) = prod_{i<j, sigma(i)>sigma(j)} (-1)^{x_sigma(i) x_sigma(j)}`.
pub fn gamma_exponent(x: &ParityWord, sigma: &Permutation) -> u8 {
    let s = &sigma.0;
    let mut acc = 0u8;
    for i in 0..s.len() {
        let xi = x[s[i]];
        if xi == 0 {
            continue;
        }
        for j in i + 1..s.len() {
            if s[i] > s[j] {
                acc ^= x[s[j]];
            }
        }
    }
    acc
}

pub fn gamma_sign(x: &ParityWord, sigma: &Permutation) -> Result<Scalar> {
    check_len(x, sigma.len())?;
    Ok(Scalar::sign(gamma_exponent(x, sigma) == 1))
}

/// Signed place permutation `sigma . (v_1 (x) ... (x) v_k)`.
///
/// Returns whether the sign is negative together with the permuted word
/// `(v_{sigma^-1(1)}, ..., v_{sigma^-1(k)})`.
pub fn permute_word<T: Clone>(
    sigma: &Permutation,
    word: &[T],
    parity: impl Fn(&T) -> u8,
) -> Result<(bool, Vec<T>)> {
    if word.len() != sigma.len() {
        return Err(Error::DegreeMismatch {
            expected: sigma.len(),
            found: word.len(),
        });
    }
    let inv = sigma.inverse();
    let parities: Vec<u8> = word.iter().map(&parity).collect();
    let odd = gamma_exponent(&parities, &inv) == 1;
    let out = inv.0.iter().map(|&j| word[j].clone()).collect();
    Ok((odd, out))
}

/// A permutation of `{0, .., k-1}` stored by its images; serialized 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Self((0..k).collect())
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &v in &images {
            if v >= k || seen[v] {
                return Err(Error::InvalidParameters(format!(
                    "not a permutation: {images:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(Self(images))
    }

    /// From 1-based images, as in the one-line notation `[1,3,2]`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidParameters("one-line images are 1-based".into()));
        }
        Self::from_images(images.iter().map(|v| v - 1).collect())
    }

    /// Parses cycle notation `"(2 3)(4 5)"` (rightmost cycle applied first, `"()"` is the
    /// identity) or one-line notation `"[1,3,2]"`, both 1-based, as an element of `S_k`.
    pub fn parse(text: &str, k: usize) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::Parse(format!("cannot read permutation {text:?}"));
        let numbers = |body: &str| -> Result<Vec<usize>> {
            body.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        if let Some(body) = text.strip_prefix('[') {
            let body = body.strip_suffix(']').ok_or_else(bad)?;
            let images = numbers(body)?;
            if images.len() != k {
                return Err(Error::InvalidParameters(format!(
                    "one-line permutation has length {}, expected {k}",
                    images.len()
                )));
            }
            return Self::from_one_line(&images);
        }
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let inner = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = inner.find(')').ok_or_else(bad)?;
            let cycle = numbers(&inner[..close])?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = inner[close + 1..].trim_start();
        }
        Self::from_cycles(k, &cycles)
    }

    /// Product of 1-based cycles on `{1..k}`, the rightmost cycle applied first.
    pub fn from_cycles(k: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Self::identity(k);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<usize> = (0..k).collect();
            let mut seen = std::collections::BTreeSet::new();
            for (pos, &a) in cycle.iter().enumerate() {
                if a == 0 || a > k || !seen.insert(a) {
                    return Err(Error::InvalidParameters(format!("bad cycle {cycle:?}")));
                }
                let b = cycle[(pos + 1) % cycle.len()];
                images[a - 1] = b - 1;
            }
            acc = Self(images).compose(&acc);
        }
        Ok(acc)
    }

    pub fn transposition(k: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..k).collect();
        images.swap(a, b);
        Self(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self o other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "permutation sizes differ");
        Self(other.0.iter().map(|&j| self.0[j]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Self(inv)
    }

    pub fn is_odd(&self) -> bool {
        let mut seen = vec![false; self.len()];
        let mut odd = false;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            if len % 2 == 0 {
                odd = !odd;
            }
        }
        odd
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i32 {
        if self.is_odd() {
            -1
        } else {
            1
        }
    }

    /// Disjoint cycles (0-based), fixed points included, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            out.push(cycle);
        }
        out
    }

    /// The cycle `(1 2 .. k)` sending `i` to `i+1`.
    pub fn long_cycle(k: usize) -> Self {
        Self((0..k).map(|i| (i + 1) % k.max(1)).collect())
    }

    /// Next permutation in lexicographic order of the one-line form.
    pub fn next_lex(&self) -> Option<Self> {
        let mut v = self.0.clone();
        let n = v.len();
        if n < 2 {
            return None;
        }
        let mut i = n - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        let mut j = n - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        Some(Self(v))
    }

    /// All of `S_k` in lexicographic order.
    pub fn all(k: usize) -> AllPermutations {
        AllPermutations {
            next: Some(Self::identity(k)),
        }
    }

    /// Cycle notation with 1-based points, fixed points omitted.
    pub fn cycle_string(&self) -> String {
        let parts: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|v| (v + 1).to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect();
        if parts.is_empty() {
            "()".into()
        } else {
            parts.concat()
        }
    }
}

pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;
    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        self.next = cur.next_lex();
        Some(cur)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_notations() {
        let a = Permutation::parse("(2 3)(4 5)", 6).unwrap();
        assert_eq!(a.one_line(), vec![1, 3, 2, 5, 4, 6]);
        assert_eq!(Permutation::parse("[1,3,2,5,4,6]", 6).unwrap(), a);
        assert!(Permutation::parse("()", 3).unwrap().is_identity());
        assert_eq!(Permutation::parse("(1 2)(2 3)", 3).unwrap().one_line(), vec![2, 3, 1]);
        assert!(Permutation::parse("(1 4)", 3).is_err());
        assert!(Permutation::parse("[1,2]", 3).is_err());
        assert!(Permutation::parse("1 2", 3).is_err());
    }

    #[test]
    fn p_examples() {
        assert!(p_sign(&[0, 0], &[1, 1]).unwrap().is_one());
        assert_eq!(p_sign(&[1, 1], &[1, 1]).unwrap(), Scalar::from_int(-1));
        assert!(p_sign(&[], &[]).unwrap().is_one());
        assert!(p_sign(&[1], &[1, 0]).is_err());
    }

    #[test]
    fn gamma_examples() {
        let swap = Permutation::transposition(2, 0, 1);
        assert_eq!(gamma_sign(&[1, 1], &swap).unwrap(), Scalar::from_int(-1));
        assert!(gamma_sign(&[0, 1], &swap).unwrap().is_one());
        assert!(gamma_sign(&[1, 1, 0], &Permutation::identity(3)).unwrap().is_one());
    }

    #[test]
    fn permute_examples() {
        let swap = Permutation::transposition(2, 0, 1);
        let par = |v: &usize| u8::from(*v == 2);
        assert_eq!(permute_word(&swap, &[1, 2], par).unwrap(), (false, vec![2, 1]));
        assert_eq!(permute_word(&swap, &[2, 2], par).unwrap(), (true, vec![2, 2]));
    }

    #[test]
    fn cycles_compose_right_to_left() {
        let tau1 = Permutation::from_cycles(6, &[vec![1, 2]]).unwrap();
        let g1bar = Permutation::from_cycles(6, &[vec![3, 5], vec![4, 6]]).unwrap();
        assert_eq!(tau1.compose(&g1bar).one_line(), vec![2, 1, 5, 6, 3, 4]);
        let c = Permutation::from_cycles(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(c.one_line(), vec![2, 3, 1]);
    }

    #[test]
    fn enumeration_and_sign() {
        let all: Vec<_> = Permutation::all(4).collect();
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().filter(|p| p.is_odd()).count(), 12);
        assert_eq!(Permutation::long_cycle(3).one_line(), vec![2, 3, 1]);
        assert_eq!(Permutation::long_cycle(3).cycle_string(), "(1 2 3)");
    }
}
