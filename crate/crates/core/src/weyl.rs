//! Simply-laced Weyl groups acting on the root lattice.
//!
//! Vertex labels: `A_n` is the path `1 - 2 - ... - n`. `D_n` and `E_n`
//! follow Bourbaki: in `D_n` the branch vertex is `n-2`, joined to both
//! `n-1` and `n`; in `E_n` the chain is `1 - 3 - 4 - 5 - ... - n` with `2`
//! attached to `4`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the size of an enumerated group.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    pub fn new(family: char, rank: usize) -> Result<Self> {
        let t = match family.to_ascii_uppercase() {
            'A' if rank >= 1 => DynkinType::A(rank),
            'D' if rank >= 4 => DynkinType::D(rank),
            'E' if (6..=8).contains(&rank) => DynkinType::E(rank),
            _ => return Err(Error::InvalidType(format!("{family}{rank}"))),
        };
        Ok(t)
    }

    pub fn rank(&self) -> usize {
        match *self {
            DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
        }
    }

    /// Edges of the Dynkin diagram as 1-based pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        match *self {
            DynkinType::A(n) => (1..n).map(|i| (i, i + 1)).collect(),
            DynkinType::D(n) => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
                e.push((n - 2, n));
                e
            }
            DynkinType::E(n) => {
                let mut e = vec![(1, 3), (2, 4)];
                e.extend((3..n).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// Symmetric Cartan matrix, row-major, 0-based.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in self.edges() {
            c[i - 1][j - 1] = -1;
            c[j - 1][i - 1] = -1;
        }
        c
    }

    /// Order of the Weyl group.
    pub fn group_order(&self) -> u64 {
        let fact = |n: u64| (1..=n).product::<u64>();
        match *self {
            DynkinType::A(n) => fact(n as u64 + 1),
            DynkinType::D(n) => (1u64 << (n - 1)) * fact(n as u64),
            DynkinType::E(6) => 51_840,
            DynkinType::E(7) => 2_903_040,
            DynkinType::E(_) => 696_729_600,
        }
    }

    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars.next().ok_or_else(|| Error::InvalidType(s.into()))?;
        let rank: usize = chars.as_str().parse().map_err(|_| Error::InvalidType(s.into()))?;
        DynkinType::new(family, rank)
    }
}

/// Element of a Weyl group, stored as its matrix on the root lattice in the
/// basis of simple roots (columns are images of simple roots).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    ty: DynkinType,
    mat: Vec<i64>,
}

impl WeylElement {
    pub fn dynkin_type(&self) -> DynkinType {
        self.ty
    }

    pub fn matrix(&self) -> &[i64] {
        &self.mat
    }

    fn n(&self) -> usize {
        self.ty.rank()
    }

    fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n();
        (0..n).map(|i| (0..n).map(|j| self.mat[i * n + j] * v[j]).sum()).collect()
    }

    /// Product `self * other` (apply `other` first).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ty != other.ty {
            return Err(Error::TypeMismatch);
        }
        let n = self.n();
        let mut mat = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.mat[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    mat[i * n + j] += a * other.mat[k * n + j];
                }
            }
        }
        Ok(WeylElement { ty: self.ty, mat })
    }

    pub fn is_identity(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| self.mat[i * n + j] == i64::from(i == j)))
    }
}

/// A Weyl group with its positive roots precomputed.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    ty: DynkinType,
    simple: Vec<WeylElement>,
    positive_roots: Vec<Vec<i64>>,
}

impl WeylGroup {
    pub fn new(ty: DynkinType) -> Self {
        let n = ty.rank();
        let cartan = ty.cartan();
        // s_i(b) = b - <b, a_i> a_i, so row i of the matrix is e_i - cartan row i
        let simple: Vec<WeylElement> = (0..n)
            .map(|i| {
                let mut mat = vec![0i64; n * n];
                for r in 0..n {
                    mat[r * n + r] = 1;
                }
                for j in 0..n {
                    mat[i * n + j] -= cartan[i][j];
                }
                WeylElement { ty, mat }
            })
            .collect();
        let mut positive_roots: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        let mut frontier = positive_roots.clone();
        while let Some(root) = frontier.pop() {
            for s in &simple {
                let image = s.apply(&root);
                if image.iter().all(|&c| c >= 0) && !positive_roots.contains(&image) {
                    positive_roots.push(image.clone());
                    frontier.push(image);
                }
            }
        }
        positive_roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        WeylGroup { ty, simple, positive_roots }
    }

    pub fn dynkin_type(&self) -> DynkinType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn identity(&self) -> WeylElement {
        let n = self.rank();
        let mut mat = vec![0i64; n * n];
        for i in 0..n {
            mat[i * n + i] = 1;
        }
        WeylElement { ty: self.ty, mat }
    }

    /// Simple reflection `s_i`, 1-based.
    pub fn simple(&self, i: usize) -> Result<&WeylElement> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange { index: i, max: self.rank() });
        }
        Ok(&self.simple[i - 1])
    }

    fn check(&self, w: &WeylElement) -> Result<()> {
        if w.ty != self.ty {
            return Err(Error::TypeMismatch);
        }
        Ok(())
    }

    /// Product `s_{i_1} s_{i_2} ... s_{i_k}` for the word `[i_1, ..., i_k]`.
    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut w = self.identity();
        for &i in word {
            w = w.mul(self.simple(i)?)?;
        }
        Ok(w)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots.iter().filter(|r| w.apply(r).iter().any(|&c| c < 0)).count()
    }

    pub fn mul(&self, a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
        self.check(a)?;
        a.mul(b)
    }

    /// Reduced word built greedily from the smallest left descent.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        let mut len = self.length(&cur);
        while len > 0 {
            let (i, next) = (1..=self.rank())
                .find_map(|i| {
                    let next = self.simple[i - 1].mul(&cur).expect("same type");
                    (self.length(&next) < len).then_some((i, next))
                })
                .expect("a non-identity element has a left descent");
            word.push(i);
            cur = next;
            len -= 1;
        }
        word
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut word = self.reduced_word(w);
        word.reverse();
        self.element_from_word(&word).expect("indices from a reduced word are valid")
    }

    /// Whether `w = v' v` with `l(w) = l(v') + l(v)`.
    pub fn condition_p(&self, v: &WeylElement, w: &WeylElement) -> Result<bool> {
        self.check(v)?;
        self.check(w)?;
        let v_prime = w.mul(&self.inverse(v))?;
        Ok(self.length(&v_prime) + self.length(v) == self.length(w))
    }

    /// The cofactor `v' = w v^{-1}`.
    pub fn left_cofactor(&self, v: &WeylElement, w: &WeylElement) -> Result<WeylElement> {
        self.check(v)?;
        self.check(w)?;
        w.mul(&self.inverse(v))
    }

    /// The longest element.
    pub fn longest(&self) -> WeylElement {
        let mut w = self.identity();
        let mut len = 0;
        loop {
            let step = self.simple.iter().find_map(|s| {
                let next = w.mul(s).expect("same type");
                (self.length(&next) > len).then_some(next)
            });
            match step {
                Some(next) => {
                    w = next;
                    len += 1;
                }
                None => return w,
            }
        }
    }

    /// Demazure product `u * v`, where `s * x = s x` if that is longer and `x` otherwise.
    pub fn demazure(&self, u: &WeylElement, v: &WeylElement) -> Result<WeylElement> {
        self.check(u)?;
        self.check(v)?;
        let mut acc = v.clone();
        for i in self.reduced_word(u).into_iter().rev() {
            let next = self.simple[i - 1].mul(&acc)?;
            if self.length(&next) > self.length(&acc) {
                acc = next;
            }
        }
        Ok(acc)
    }

    /// All elements, ordered by length and then by reduced word.
    pub fn enumerate(&self, bound: u64) -> Result<Vec<WeylElement>> {
        let order = self.ty.group_order();
        if order > bound {
            return Err(Error::EnumerationBound { order, bound });
        }
        let mut seen = std::collections::HashSet::new();
        let mut all = vec![self.identity()];
        seen.insert(self.identity());
        let mut frontier = vec![self.identity()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for s in &self.simple {
                    let x = w.mul(s)?;
                    if seen.insert(x.clone()) {
                        all.push(x.clone());
                        next.push(x);
                    }
                }
            }
            frontier = next;
        }
        let mut keyed: Vec<_> = all.into_iter().map(|w| ((self.length(&w), self.reduced_word(&w)), w)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(keyed.into_iter().map(|(_, w)| w).collect())
    }

    pub fn format_word(&self, w: &WeylElement) -> String {
        format_word(&self.reduced_word(w))
    }

    pub fn parse_element(&self, s: &str) -> Result<WeylElement> {
        self.element_from_word(&parse_word(s)?)
    }
}

/// Comma-separated indices; the empty word is written `e`.
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad reflection index `{t}` in word `{s}`")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> WeylGroup {
        WeylGroup::new(DynkinType::A(n))
    }

    /// Inversion count on permutations of 1..=n+1, the classical model of W(A_n).
    fn permutation_of_word(n: usize, word: &[usize]) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..=n).collect();
        for &i in word {
            perm.swap(i - 1, i);
        }
        perm
    }

    fn inversions(perm: &[usize]) -> usize {
        let mut c = 0;
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if perm[i] > perm[j] {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn words_and_lengths() {
        let g = a(3);
        let e = g.element_from_word(&[]).unwrap();
        assert!(e.is_identity());
        assert_eq!(g.length(&e), 0);
        assert!(g.element_from_word(&[1, 1]).unwrap().is_identity());
        let w = g.element_from_word(&[1, 3, 2, 1, 3]).unwrap();
        assert_eq!(g.length(&w), inversions(&permutation_of_word(3, &[1, 3, 2, 1, 3])));
        assert_eq!(g.length(&w), 5);
        assert!(matches!(g.element_from_word(&[4]), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn reduced_words() {
        let g = a(3);
        assert!(g.reduced_word(&g.identity()).is_empty());
        assert_eq!(g.reduced_word(g.simple(2).unwrap()), vec![2]);
        assert_eq!(g.reduced_word(&g.longest()).len(), 6);
    }

    #[test]
    fn condition_p_cases() {
        let g = a(3);
        let e = g.identity();
        let v = g.element_from_word(&[2]).unwrap();
        assert!(g.condition_p(&v, &v).unwrap());
        assert!(!g.condition_p(&v, &e).unwrap());
        let w = g.element_from_word(&[1, 3, 2, 1, 3]).unwrap();
        // brute force: some v' with v' v = w and additive lengths
        let all = g.enumerate(DEFAULT_ENUMERATION_BOUND).unwrap();
        let brute = all.iter().any(|vp| vp.mul(&v).unwrap() == w && g.length(vp) + g.length(&v) == g.length(&w));
        assert_eq!(g.condition_p(&v, &w).unwrap(), brute);
    }

    #[test]
    fn group_orders() {
        assert_eq!(a(1).enumerate(100).unwrap().len(), 2);
        assert_eq!(a(3).enumerate(100).unwrap().len(), 24);
        let g = a(2);
        let all = g.enumerate(100).unwrap();
        assert_eq!(all.len(), 6);
        for w in &all {
            assert_eq!(&g.element_from_word(&g.reduced_word(w)).unwrap(), w);
        }
        let d4 = WeylGroup::new(DynkinType::D(4));
        assert_eq!(d4.enumerate(1000).unwrap().len(), 192);
        assert_eq!(d4.positive_roots().len(), 12);
        assert_eq!(WeylGroup::new(DynkinType::E(6)).positive_roots().len(), 36);
        assert!(matches!(
            WeylGroup::new(DynkinType::E(7)).enumerate(DEFAULT_ENUMERATION_BOUND),
            Err(Error::EnumerationBound { .. })
        ));
    }

    #[test]
    fn group_invariants_exhaustive() {
        for n in 2..=3 {
            let g = a(n);
            let all = g.enumerate(1000).unwrap();
            let w0 = g.longest();
            let l0 = g.length(&w0);
            for w in &all {
                assert_eq!(g.length(w), g.length(&g.inverse(w)));
                assert_eq!(g.length(&w0.mul(w).unwrap()), l0 - g.length(w));
                assert_eq!(g.element_from_word(&g.reduced_word(w)).unwrap(), *w);
                for v in &all {
                    if g.condition_p(v, w).unwrap() {
                        assert!(g.condition_p(&g.identity(), w).unwrap());
                        assert!(g.condition_p(w, w).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn demazure_of_simple() {
        let g = a(2);
        let s1 = g.simple(1).unwrap().clone();
        assert_eq!(g.demazure(&s1, &s1).unwrap(), s1);
        let s2 = g.simple(2).unwrap().clone();
        assert_eq!(g.demazure(&s1, &s2).unwrap(), s1.mul(&s2).unwrap());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_word("1,3,2,1,3").unwrap(), vec![1, 3, 2, 1, 3]);
        assert_eq!(parse_word("e").unwrap(), Vec::<usize>::new());
        assert_eq!(format_word(&[]), "e");
        assert_eq!("D5".parse::<DynkinType>().unwrap(), DynkinType::D(5));
        assert!("D3".parse::<DynkinType>().is_err());
    }
}
