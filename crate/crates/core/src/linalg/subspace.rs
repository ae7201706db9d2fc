//! Linear subspaces of `k^n` in canonical reduced row echelon form.

use super::field::Field;
use super::matrix::{axpy, is_zero_vec, Matrix};
use crate::error::{Error, Result};

/// A subspace of `k^n`. The basis is the reduced row echelon form of any
/// spanning set with zero rows removed, so equal subspaces have identical
/// representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    pub fn span(field: &F, ambient: usize, vectors: &[Vec<F::Elem>]) -> Self {
        let mut e = Echelon::new(field, ambient);
        for v in vectors {
            e.insert(v.clone());
        }
        e.into_subspace()
    }

    pub fn from_rows(m: &Matrix<F>) -> Self {
        let (basis, pivots) = m.rref();
        Subspace { ambient: m.cols(), basis, pivots }
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }
    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }
    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }
    pub fn basis_vecs(&self) -> Vec<Vec<F::Elem>> {
        self.basis.row_vecs()
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots; the unit vectors there span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Remainder of `v` after reduction against the basis.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        let mut v = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            let c = v[p].clone();
            if !f.is_zero(&c) {
                axpy(f, &mut v, &f.neg(&c), self.basis.row(k));
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        is_zero_vec(self.field(), &self.reduce(v))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Coordinates without the membership check; only valid for members.
    pub fn coords_unchecked(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Vector with the given coordinates.
    pub fn combine(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        let mut v = vec![f.zero(); self.ambient];
        for (k, c) in coords.iter().enumerate() {
            axpy(f, &mut v, c, self.basis.row(k));
        }
        v
    }

    /// Coordinates of the class of `v` in the quotient `k^n / self`, taken
    /// against the unit vectors at the free columns.
    pub fn quotient_coords(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let r = self.reduce(v);
        self.free_columns().into_iter().map(|c| r[c].clone()).collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field().spec().to_string(), other.field().spec().to_string()));
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut e = Echelon::from_subspace(self);
        for v in other.basis_vecs() {
            e.insert(v);
        }
        Ok(e.into_subspace())
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let f = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(f, self.ambient));
        }
        // (a, b) with a U + b V = 0 gives a U in both spans.
        let stacked = self.basis.vstack(&other.basis);
        let kernel = stacked.left_nullspace();
        let vecs: Vec<Vec<F::Elem>> = kernel
            .iter()
            .map(|y| {
                let mut v = vec![f.zero(); self.ambient];
                for (k, c) in y.iter().enumerate().take(self.dim()) {
                    axpy(f, &mut v, c, self.basis.row(k));
                }
                v
            })
            .collect();
        Ok(Self::span(f, self.ambient, &vecs))
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self.dim() <= other.dim()
            && (0..self.dim()).all(|k| other.contains(self.basis.row(k)))
    }

    /// Image of the subspace under a linear map given as a matrix acting on columns.
    pub fn image_under(&self, m: &Matrix<F>) -> Self {
        let vecs: Vec<_> = (0..self.dim()).map(|k| m.mul_vec(self.basis.row(k))).collect();
        Self::span(self.field(), m.rows(), &vecs)
    }
}

/// Incrementally grown echelon basis. Rows stay fully reduced against each
/// other, so membership tests are a single pass.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, ambient: usize) -> Self {
        Echelon { field: field.clone(), ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_subspace(s: &Subspace<F>) -> Self {
        Echelon { field: s.field().clone(), ambient: s.ambient, rows: s.basis_vecs(), pivots: s.pivots.clone() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn reduce(&self, v: &mut [F::Elem]) {
        let f = &self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if !f.is_zero(&c) {
                axpy(f, v, &f.neg(&c), row);
            }
        }
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero_vec(&self.field, &w)
    }

    /// Adds `v` to the span. Returns `true` when the dimension grew.
    pub fn insert(&mut self, mut v: Vec<F::Elem>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        let f = self.field.clone();
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[p]);
        for x in v.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[p].clone();
            if !f.is_zero(&c) {
                axpy(&f, row, &f.neg(&c), &v);
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn into_subspace(self) -> Subspace<F> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let pivots: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        let mut rows = self.rows;
        let sorted: Vec<Vec<F::Elem>> = order.iter().map(|&i| std::mem::take(&mut rows[i])).collect();
        Subspace { ambient: self.ambient, basis: Matrix::from_rows(&self.field, self.ambient, sorted), pivots }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    fn vecs(f: &PrimeField, rows: &[&[i64]]) -> Vec<Vec<u64>> {
        rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect()
    }

    /// All vectors of F_3^n lying in the span, by enumerating coefficient tuples.
    fn enumerate_span(f: &PrimeField, n: usize, gens: &[Vec<u64>]) -> std::collections::HashSet<Vec<u64>> {
        let mut out = std::collections::HashSet::new();
        let total = 3usize.pow(gens.len() as u32);
        for mut code in 0..total {
            let mut v = vec![0u64; n];
            for g in gens {
                let c = (code % 3) as u64;
                code /= 3;
                axpy(f, &mut v, &c, g);
            }
            out.insert(v);
        }
        out
    }

    #[test]
    fn intersect_identity_and_complementary() {
        let f = f3();
        let full = Subspace::full(&f, 2);
        assert_eq!(full.intersect(&full).unwrap(), full);
        let u = Subspace::span(&f, 2, &vecs(&f, &[&[1, 0]]));
        let v = Subspace::span(&f, 2, &vecs(&f, &[&[0, 1]]));
        assert!(u.intersect(&v).unwrap().is_zero());
    }

    #[test]
    fn intersect_matches_enumeration_over_f3() {
        let f = f3();
        let ug = vecs(&f, &[&[1, 1, 0], &[0, 0, 1]]);
        let vg = vecs(&f, &[&[1, 1, 1]]);
        let u = Subspace::span(&f, 3, &ug);
        let v = Subspace::span(&f, 3, &vg);
        let both: Vec<_> = enumerate_span(&f, 3, &ug).intersection(&enumerate_span(&f, 3, &vg)).cloned().collect();
        // 3^dim points in the intersection
        let mut points = both.len();
        let mut expected_dim = 0;
        while points > 1 {
            assert_eq!(points % 3, 0);
            points /= 3;
            expected_dim += 1;
        }
        assert_eq!(expected_dim, 1);
        let w = u.intersect(&v).unwrap();
        assert_eq!(w.dim(), expected_dim);
        for x in &both {
            assert!(w.contains(x));
        }
        let s = u.sum(&v).unwrap();
        assert_eq!(s.dim() + w.dim(), u.dim() + v.dim());
    }

    #[test]
    fn mismatched_ambient_is_rejected() {
        let f = f3();
        let a = Subspace::full(&f, 2);
        let b = Subspace::full(&f, 3);
        assert!(matches!(a.intersect(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn canonical_over_rationals() {
        let q = Rationals;
        let a = Subspace::span(
            &q,
            3,
            &[vec![q.from_i64(1), q.from_i64(2), q.from_i64(3)], vec![q.from_i64(0), q.from_i64(1), q.from_i64(1)]],
        );
        let b = Subspace::span(
            &q,
            3,
            &[vec![q.from_i64(1), q.from_i64(3), q.from_i64(4)], vec![q.from_i64(2), q.from_i64(2), q.from_i64(4)]],
        );
        assert_eq!(a, b);
    }

    fn arb_vectors(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-3i64..4, n), 0..5)
    }

    proptest! {
        #[test]
        fn dimension_formula(a in arb_vectors(5), b in arb_vectors(5)) {
            let f = PrimeField::new(7).unwrap();
            let conv = |rows: &Vec<Vec<i64>>| -> Vec<Vec<u64>> {
                rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect()
            };
            let u = Subspace::span(&f, 5, &conv(&a));
            let v = Subspace::span(&f, 5, &conv(&b));
            let s = u.sum(&v).unwrap();
            let i = u.intersect(&v).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
            prop_assert!(i.is_subspace_of(&u) && i.is_subspace_of(&v));
        }

        #[test]
        fn canonical_under_respanning(a in arb_vectors(4), seed in 0i64..50) {
            let f = PrimeField::new(11).unwrap();
            let rows: Vec<Vec<u64>> = a.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
            let u = Subspace::span(&f, 4, &rows);
            // a different spanning set: mix the rows and reverse their order
            let mut mixed: Vec<Vec<u64>> = Vec::new();
            for (k, r) in rows.iter().enumerate().rev() {
                let mut v = r.clone();
                if let Some(prev) = rows.get(k + 1) {
                    axpy(&f, &mut v, &f.from_i64(seed + 1), prev);
                }
                mixed.push(v);
            }
            if let Some(first) = rows.first() { mixed.push(first.clone()); }
            let w = Subspace::span(&f, 4, &mixed);
            prop_assert_eq!(u, w);
        }
    }
}
