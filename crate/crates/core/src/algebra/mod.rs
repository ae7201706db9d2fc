//! Finite-dimensional associative unital algebras given by structure
//! constants, their ideals, quotients, radicals and idempotents.
//!
//! Elements are coordinate vectors in the basis `b_0, ..., b_{d-1}`. The
//! table stores `b_i * b_j` at index `i * d + j`.

mod idempotent;
mod path;
mod present;
mod serial;

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::matrix::{axpy, is_zero_vec, unit_vec};
use crate::linalg::{Echelon, Field, Matrix, Subspace};

pub use idempotent::{corner_dim, primitive_idempotents};
pub use path::{path_algebra_mod_relations, Arrow, PathQuotient, Quiver, Relation, DEFAULT_DEGREE_CAP};
pub use present::{present_as_quiver, QuiverPresentation, DEFAULT_PRESENTATION_CAP};
pub use serial::AlgebraJson;

/// A finite-dimensional algebra. Cloning is cheap; the data is shared.
#[derive(Clone)]
pub struct Algebra<F: Field> {
    inner: Arc<Inner<F>>,
}

struct Inner<F: Field> {
    field: F,
    dim: usize,
    labels: Vec<String>,
    table: Vec<Vec<F::Elem>>,
    left: Vec<Matrix<F>>,
    unit: Vec<F::Elem>,
    idempotents: Vec<Vec<F::Elem>>,
    idempotent_labels: Vec<String>,
    radical: OnceLock<Result<Subspace<F>>>,
}

impl<F: Field> std::fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra")
            .field("field", &self.field().spec())
            .field("dim", &self.dim())
            .field("idempotents", &self.inner.idempotent_labels)
            .finish()
    }
}

impl<F: Field> Algebra<F> {
    /// Builds an algebra and checks associativity, the unit laws and the
    /// distinguished idempotents.
    pub fn new(
        field: &F,
        labels: Vec<String>,
        table: Vec<Vec<F::Elem>>,
        unit: Vec<F::Elem>,
        idempotents: Vec<Vec<F::Elem>>,
        idempotent_labels: Vec<String>,
    ) -> Result<Self> {
        let dim = labels.len();
        if table.len() != dim * dim || table.iter().any(|v| v.len() != dim) || unit.len() != dim {
            return Err(Error::InvalidAlgebra("table shape".into()));
        }
        if idempotents.len() != idempotent_labels.len() || idempotents.iter().any(|e| e.len() != dim) {
            return Err(Error::InvalidAlgebra("idempotent shape".into()));
        }
        let left = (0..dim)
            .map(|i| {
                let cols: Vec<Vec<F::Elem>> = (0..dim).map(|j| table[i * dim + j].clone()).collect();
                Matrix::from_cols(field, dim, &cols)
            })
            .collect();
        let a = Algebra {
            inner: Arc::new(Inner {
                field: field.clone(),
                dim,
                labels,
                table,
                left,
                unit,
                idempotents,
                idempotent_labels,
                radical: OnceLock::new(),
            }),
        };
        a.validate()?;
        Ok(a)
    }

    fn validate(&self) -> Result<()> {
        let f = self.field();
        let d = self.dim();
        for i in 0..d {
            let bi = unit_vec(f, d, i);
            if self.mul(&self.inner.unit, &bi) != bi || self.mul(&bi, &self.inner.unit) != bi {
                return Err(Error::InvalidAlgebra("unit law".into()));
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = &self.inner.table[i * d + j];
                for k in 0..d {
                    let jk = &self.inner.table[j * d + k];
                    let mut lhs = vec![f.zero(); d];
                    for (l, c) in ij.iter().enumerate() {
                        if !f.is_zero(c) {
                            axpy(f, &mut lhs, c, &self.inner.table[l * d + k]);
                        }
                    }
                    let mut rhs = vec![f.zero(); d];
                    for (l, c) in jk.iter().enumerate() {
                        if !f.is_zero(c) {
                            axpy(f, &mut rhs, c, &self.inner.table[i * d + l]);
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::InvalidAlgebra(format!("associativity at ({i},{j},{k})")));
                    }
                }
            }
        }
        let idems = &self.inner.idempotents;
        if !idems.is_empty() {
            let mut sum = vec![f.zero(); d];
            for (a, e) in idems.iter().enumerate() {
                axpy(f, &mut sum, &f.one(), e);
                for (b, e2) in idems.iter().enumerate() {
                    let p = self.mul(e, e2);
                    let expected = if a == b { e.clone() } else { vec![f.zero(); d] };
                    if p != expected || is_zero_vec(f, e) {
                        return Err(Error::InvalidAlgebra("idempotents".into()));
                    }
                }
            }
            if sum != self.inner.unit {
                return Err(Error::InvalidAlgebra("idempotents do not sum to 1".into()));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &F {
        &self.inner.field
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn unit(&self) -> &[F::Elem] {
        &self.inner.unit
    }

    /// Product of basis elements `b_i b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.inner.table[i * self.dim() + j]
    }

    pub fn idempotents(&self) -> &[Vec<F::Elem>] {
        &self.inner.idempotents
    }

    pub fn idempotent_labels(&self) -> &[String] {
        &self.inner.idempotent_labels
    }

    /// Left multiplication by `b_i`.
    pub fn left_basis(&self, i: usize) -> &Matrix<F> {
        &self.inner.left[i]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<F::Elem> {
        unit_vec(self.field(), self.dim(), i)
    }

    pub fn zero(&self) -> Vec<F::Elem> {
        vec![self.field().zero(); self.dim()]
    }

    /// Whether both handles describe the same structure constants.
    pub fn same_as(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.field() == other.field()
                && self.dim() == other.dim()
                && self.inner.unit == other.inner.unit
                && self.inner.table == other.inner.table)
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        let d = self.dim();
        let mut out = vec![f.zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                axpy(f, &mut out, &c, &self.inner.table[i * d + j]);
            }
        }
        out
    }

    /// Matrix of `y -> x y`.
    pub fn left_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let f = self.field();
        let d = self.dim();
        let mut m = Matrix::zeros(f, d, d);
        for (i, xi) in x.iter().enumerate() {
            if !f.is_zero(xi) {
                m.add_scaled(&self.inner.left[i], xi);
            }
        }
        m
    }

    /// Matrix of `y -> y x`.
    pub fn right_matrix(&self, x: &[F::Elem]) -> Matrix<F> {
        let f = self.field();
        let d = self.dim();
        let cols: Vec<Vec<F::Elem>> = (0..d).map(|i| self.mul(&unit_vec(f, d, i), x)).collect();
        Matrix::from_cols(f, d, &cols)
    }

    /// The opposite algebra on the same basis.
    pub fn opposite(&self) -> Self {
        let d = self.dim();
        let table = (0..d * d).map(|k| self.inner.table[(k % d) * d + k / d].clone()).collect();
        Algebra::new(
            self.field(),
            self.inner.labels.clone(),
            table,
            self.inner.unit.clone(),
            self.inner.idempotents.clone(),
            self.inner.idempotent_labels.clone(),
        )
        .expect("opposite of a valid algebra is valid")
    }

    /// Same algebra with a new list of distinguished idempotents.
    pub fn with_idempotents(&self, idempotents: Vec<Vec<F::Elem>>, labels: Vec<String>) -> Result<Self> {
        Algebra::new(
            self.field(),
            self.inner.labels.clone(),
            self.inner.table.clone(),
            self.inner.unit.clone(),
            idempotents,
            labels,
        )
    }

    /// Whether the distinguished idempotents are primitive and pairwise
    /// non-isomorphic, i.e. the algebra is basic with these vertices.
    pub fn is_basic(&self) -> Result<bool> {
        let rad = self.radical()?;
        let e = self.idempotents();
        if e.is_empty() {
            return Ok(false);
        }
        for a in 0..e.len() {
            for b in 0..e.len() {
                let top = self.corner_dim(&e[a], &e[b]) - corner_subspace_dim(self, &e[a], &e[b], rad.carrier());
                if top != usize::from(a == b) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `dim e A f`.
    pub fn corner_dim(&self, e: &[F::Elem], f: &[F::Elem]) -> usize {
        corner_dim(self, e, f)
    }

    /// Integer matrix with entry `(i, j) = dim e_i A e_j` for the distinguished idempotents.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let e = self.idempotents();
        e.iter().map(|ei| e.iter().map(|ej| self.corner_dim(ei, ej)).collect()).collect()
    }

    pub fn whole(&self) -> Ideal<F> {
        Ideal { algebra: self.clone(), carrier: Subspace::full(self.field(), self.dim()) }
    }

    pub fn zero_ideal(&self) -> Ideal<F> {
        Ideal { algebra: self.clone(), carrier: Subspace::zero(self.field(), self.dim()) }
    }

    /// Two-sided ideal generated by the given elements.
    pub fn ideal_generated(&self, gens: &[Vec<F::Elem>]) -> Ideal<F> {
        let f = self.field();
        let d = self.dim();
        let mut ech = Echelon::new(f, d);
        let mut queue: Vec<Vec<F::Elem>> = gens.to_vec();
        while let Some(x) = queue.pop() {
            if !ech.insert(x.clone()) {
                continue;
            }
            for i in 0..d {
                let bi = unit_vec(f, d, i);
                queue.push(self.mul(&bi, &x));
                queue.push(self.mul(&x, &bi));
            }
        }
        Ideal { algebra: self.clone(), carrier: ech.into_subspace() }
    }

    /// Jacobson radical as the kernel of the trace form `(x, y) -> tr(L_{xy})`.
    pub fn radical(&self) -> Result<Ideal<F>> {
        let carrier = self
            .inner
            .radical
            .get_or_init(|| {
                let f = self.field();
                let d = self.dim();
                let p = f.characteristic();
                if p != 0 && p <= d as u64 {
                    return Err(Error::SmallCharacteristic { p, dim: d });
                }
                let traces: Vec<F::Elem> = self.inner.left.iter().map(|l| l.trace()).collect();
                let mut form = Matrix::zeros(f, d, d);
                for i in 0..d {
                    for j in 0..d {
                        let t = crate::linalg::matrix::dot(f, &self.inner.table[i * d + j], &traces);
                        form.set(i, j, t);
                    }
                }
                Ok(Subspace::span(f, d, &form.nullspace()))
            })
            .clone()?;
        Ok(Ideal { algebra: self.clone(), carrier })
    }

    /// Dimensions of `rad^k` for `k = 0..=max_k` (with `rad^0 = A`).
    pub fn radical_power_dims(&self, max_k: usize) -> Result<Vec<usize>> {
        let rad = self.radical()?;
        let mut out = vec![self.dim()];
        let mut cur = self.whole();
        for _ in 0..max_k {
            cur = cur.product(&rad)?;
            out.push(cur.dim());
        }
        Ok(out)
    }

    /// Smallest `L` with `rad^L = 0`.
    pub fn loewy_length(&self) -> Result<usize> {
        let rad = self.radical()?;
        let mut cur = self.whole();
        let mut l = 0;
        while !cur.carrier.is_zero() {
            cur = cur.product(&rad)?;
            l += 1;
        }
        Ok(l)
    }

    /// Quotient `A / I` with the projection matrix.
    pub fn quotient(&self, ideal: &Ideal<F>) -> Result<(Algebra<F>, Matrix<F>)> {
        self.check_same(&ideal.algebra)?;
        if ideal.carrier.contains(self.unit()) {
            return Err(Error::ImproperIdeal);
        }
        let f = self.field();
        let d = self.dim();
        let free = ideal.carrier.free_columns();
        let q = |v: &[F::Elem]| ideal.carrier.quotient_coords(v);
        let labels = free.iter().map(|&c| self.inner.labels[c].clone()).collect();
        let mut table = Vec::with_capacity(free.len() * free.len());
        for &a in &free {
            for &b in &free {
                table.push(q(&self.inner.table[a * d + b]));
            }
        }
        let mut idempotents = Vec::new();
        let mut idem_labels = Vec::new();
        for (e, l) in self.inner.idempotents.iter().zip(&self.inner.idempotent_labels) {
            let qe = q(e);
            if !is_zero_vec(f, &qe) {
                idempotents.push(qe);
                idem_labels.push(l.clone());
            }
        }
        let proj_cols: Vec<Vec<F::Elem>> = (0..d).map(|i| q(&unit_vec(f, d, i))).collect();
        let proj = Matrix::from_cols(f, free.len(), &proj_cols);
        let alg = Algebra::new(f, labels, table, q(self.unit()), idempotents, idem_labels)?;
        Ok((alg, proj))
    }
}

fn corner_subspace_dim<F: Field>(a: &Algebra<F>, e: &[F::Elem], f: &[F::Elem], sub: &Subspace<F>) -> usize {
    let vecs: Vec<_> = sub.basis_vecs().iter().map(|x| a.mul(&a.mul(e, x), f)).collect();
    Subspace::span(a.field(), a.dim(), &vecs).dim()
}

/// A two-sided ideal, stored as a canonical subspace of the algebra.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    algebra: Algebra<F>,
    carrier: Subspace<F>,
}

impl<F: Field> Ideal<F> {
    /// Wraps a subspace after checking closure under both multiplications.
    pub fn from_subspace(algebra: &Algebra<F>, carrier: Subspace<F>) -> Result<Self> {
        let d = algebra.dim();
        if carrier.ambient() != d {
            return Err(Error::DimensionMismatch { expected: d, found: carrier.ambient() });
        }
        for x in carrier.basis_vecs() {
            for i in 0..d {
                let bi = algebra.basis_vec(i);
                if !carrier.contains(&algebra.mul(&bi, &x)) || !carrier.contains(&algebra.mul(&x, &bi)) {
                    return Err(Error::NotAnIdeal);
                }
            }
        }
        Ok(Ideal { algebra: algebra.clone(), carrier })
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn carrier(&self) -> &Subspace<F> {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn contains(&self, x: &[F::Elem]) -> bool {
        self.carrier.contains(x)
    }

    /// Span of all products `x y`; an ideal whenever both factors are.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.algebra.check_same(&other.algebra)?;
        let a = &self.algebra;
        let mut ech = Echelon::new(a.field(), a.dim());
        let ys = other.carrier.basis_vecs();
        for x in self.carrier.basis_vecs() {
            for y in &ys {
                ech.insert(a.mul(&x, y));
                if ech.dim() == a.dim() {
                    break;
                }
            }
        }
        Ok(Ideal { algebra: a.clone(), carrier: ech.into_subspace() })
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.algebra.check_same(&other.algebra)?;
        Ok(Ideal { algebra: self.algebra.clone(), carrier: self.carrier.sum(&other.carrier)? })
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.algebra.check_same(&other.algebra)?;
        Ok(Ideal { algebra: self.algebra.clone(), carrier: self.carrier.intersect(&other.carrier)? })
    }

    pub fn is_subideal_of(&self, other: &Self) -> bool {
        self.carrier.is_subspace_of(&other.carrier)
    }
}

impl<F: Field> PartialEq for Ideal<F> {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_as(&other.algebra) && self.carrier == other.carrier
    }
}

/// Span of all `x y` for `x` in `i` and `y` in `j`.
pub fn ideal_product<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    i.product(j)
}

/// `A / I` together with the projection.
pub fn quotient_algebra<F: Field>(a: &Algebra<F>, i: &Ideal<F>) -> Result<(Algebra<F>, Matrix<F>)> {
    a.quotient(i)
}

/// The field itself as a one-dimensional algebra.
pub fn base_field_algebra<F: Field>(field: &F) -> Algebra<F> {
    Algebra::new(
        field,
        vec!["1".into()],
        vec![vec![field.one()]],
        vec![field.one()],
        vec![vec![field.one()]],
        vec!["1".into()],
    )
    .expect("base field is a valid algebra")
}

/// Full matrix algebra `M_n(k)` with matrix units as basis; `E_ij` sits at `i * n + j`.
pub fn matrix_algebra<F: Field>(field: &F, n: usize) -> Algebra<F> {
    let d = n * n;
    let mut table = Vec::with_capacity(d * d);
    for a in 0..d {
        for b in 0..d {
            let (i, j) = (a / n, a % n);
            let (k, l) = (b / n, b % n);
            let mut v = vec![field.zero(); d];
            if j == k {
                v[i * n + l] = field.one();
            }
            table.push(v);
        }
    }
    let mut unit = vec![field.zero(); d];
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    let labels = (0..d).map(|a| format!("E{}{}", a / n + 1, a % n + 1)).collect();
    Algebra::new(field, labels, table, unit, vec![], vec![]).expect("matrix algebra is valid")
}

/// Product algebra `k^n` with the coordinate idempotents.
pub fn product_of_fields<F: Field>(field: &F, n: usize) -> Algebra<F> {
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let mut v = vec![field.zero(); n];
            if a == b {
                v[a] = field.one();
            }
            table.push(v);
        }
    }
    let idems: Vec<_> = (0..n).map(|i| unit_vec(field, n, i)).collect();
    let labels: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    Algebra::new(field, labels.clone(), table, vec![field.one(); n], idems, labels).expect("valid")
}
