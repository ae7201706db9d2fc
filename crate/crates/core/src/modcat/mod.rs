//! Finite-dimensional left modules over an [`Algebra`].
//!
//! A module stores one action matrix per basis element of its algebra.
//! Maps are matrices from source to target coordinates.

mod decompose;
mod hom;
mod resolution;
mod serial;

use std::sync::{Arc, OnceLock};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::matrix::unit_vec;
use crate::linalg::{Echelon, Field, Matrix, Subspace};

pub use decompose::{
    decompose, find_isomorphism, indecomposables_iso, is_isomorphic, iso_classes, same_summands, Summand,
};
pub use hom::{endomorphism_algebra, hom_space, Cover, HomSpace};
pub use resolution::{ext, projective_dimension, syzygy, HomDim, Resolution, DEFAULT_CUTOFF};
pub use serial::ModuleJson;

/// A left module; cloning shares the data.
#[derive(Clone)]
pub struct Module<F: Field> {
    inner: Arc<Inner<F>>,
}

struct Inner<F: Field> {
    algebra: Algebra<F>,
    dim: usize,
    action: Vec<Matrix<F>>,
    cover: OnceLock<Result<Cover<F>>>,
}

impl<F: Field> std::fmt::Debug for Module<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Module").field("dim", &self.dim()).field("dimension_vector", &self.dimension_vector()).finish()
    }
}

impl<F: Field> Module<F> {
    /// Builds a module and checks that the action is a unital homomorphism.
    pub fn new(algebra: &Algebra<F>, action: Vec<Matrix<F>>) -> Result<Self> {
        let d = algebra.dim();
        if action.len() != d {
            return Err(Error::InvalidModule("one matrix per basis element".into()));
        }
        let m = action.first().map_or(0, |a| a.rows());
        if action.iter().any(|a| a.rows() != m || a.cols() != m) {
            return Err(Error::InvalidModule("square matrices of equal size".into()));
        }
        let module = Self::from_parts(algebra, m, action);
        if !module.act(algebra.unit()).is_identity() {
            return Err(Error::InvalidModule("unit acts as identity".into()));
        }
        for i in 0..d {
            for j in 0..d {
                let lhs = module.action(i).mul(module.action(j));
                if lhs != module.act(algebra.basis_product(i, j)) {
                    return Err(Error::InvalidModule(format!("multiplicativity at ({i},{j})")));
                }
            }
        }
        Ok(module)
    }

    pub(crate) fn from_parts(algebra: &Algebra<F>, dim: usize, action: Vec<Matrix<F>>) -> Self {
        Module { inner: Arc::new(Inner { algebra: algebra.clone(), dim, action, cover: OnceLock::new() }) }
    }

    pub fn zero(algebra: &Algebra<F>) -> Self {
        let f = algebra.field();
        Self::from_parts(algebra, 0, vec![Matrix::zeros(f, 0, 0); algebra.dim()])
    }

    /// `A` acting on itself by left multiplication.
    pub fn regular(algebra: &Algebra<F>) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.left_basis(i).clone()).collect();
        Self::from_parts(algebra, algebra.dim(), action)
    }

    /// The projective `A e_j` for the `j`-th distinguished idempotent.
    pub fn projective(algebra: &Algebra<F>, j: usize) -> Self {
        let e = &algebra.idempotents()[j];
        let span = projective_span(algebra, e);
        Self::regular(algebra).submodule_unchecked(&span).0
    }

    /// The simple top of the `j`-th indecomposable projective.
    pub fn simple(algebra: &Algebra<F>, j: usize) -> Self {
        let p = Self::projective(algebra, j);
        let rad = p.radical_submodule();
        p.quotient_unchecked(&rad).0
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.inner.algebra
    }

    pub fn field(&self) -> &F {
        self.inner.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn is_zero(&self) -> bool {
        self.inner.dim == 0
    }

    /// Action of the basis element `b_i`.
    pub fn action(&self, i: usize) -> &Matrix<F> {
        &self.inner.action[i]
    }

    pub fn actions(&self) -> &[Matrix<F>] {
        &self.inner.action
    }

    /// Action of an arbitrary algebra element.
    pub fn act(&self, x: &[F::Elem]) -> Matrix<F> {
        let f = self.field();
        let mut m = Matrix::zeros(f, self.dim(), self.dim());
        for (i, c) in x.iter().enumerate() {
            if !f.is_zero(c) {
                m.add_scaled(&self.inner.action[i], c);
            }
        }
        m
    }

    pub(crate) fn cover_cell(&self) -> &OnceLock<Result<Cover<F>>> {
        &self.inner.cover
    }

    /// Ranks of the distinguished idempotents.
    pub fn dimension_vector(&self) -> Vec<usize> {
        self.algebra().idempotents().iter().map(|e| self.act(e).rank()).collect()
    }

    pub fn is_submodule(&self, u: &Subspace<F>) -> bool {
        u.ambient() == self.dim()
            && u.basis_vecs().iter().all(|v| self.inner.action.iter().all(|a| u.contains(&a.mul_vec(v))))
    }

    /// Submodule on a stable subspace, with the inclusion matrix.
    pub fn submodule(&self, u: &Subspace<F>) -> Result<(Module<F>, Matrix<F>)> {
        if !self.is_submodule(u) {
            return Err(Error::InvalidModule("subspace is not stable".into()));
        }
        Ok(self.submodule_unchecked(u))
    }

    pub(crate) fn submodule_unchecked(&self, u: &Subspace<F>) -> (Module<F>, Matrix<F>) {
        let f = self.field();
        let k = u.dim();
        let basis = u.basis_vecs();
        let action = self
            .inner
            .action
            .iter()
            .map(|a| {
                let cols: Vec<Vec<F::Elem>> = basis.iter().map(|v| u.coords_unchecked(&a.mul_vec(v))).collect();
                Matrix::from_cols(f, k, &cols)
            })
            .collect();
        let incl = Matrix::from_cols(f, self.dim(), &basis);
        (Self::from_parts(self.algebra(), k, action), incl)
    }

    /// Quotient by a stable subspace, with the projection matrix.
    pub fn quotient(&self, u: &Subspace<F>) -> Result<(Module<F>, Matrix<F>)> {
        if !self.is_submodule(u) {
            return Err(Error::InvalidModule("subspace is not stable".into()));
        }
        Ok(self.quotient_unchecked(u))
    }

    pub(crate) fn quotient_unchecked(&self, u: &Subspace<F>) -> (Module<F>, Matrix<F>) {
        let f = self.field();
        let m = self.dim();
        let free = u.free_columns();
        let q = free.len();
        let action = self
            .inner
            .action
            .iter()
            .map(|a| {
                let cols: Vec<Vec<F::Elem>> = free.iter().map(|&c| u.quotient_coords(&a.col(c))).collect();
                Matrix::from_cols(f, q, &cols)
            })
            .collect();
        let proj_cols: Vec<Vec<F::Elem>> = (0..m).map(|i| u.quotient_coords(&unit_vec(f, m, i))).collect();
        let proj = Matrix::from_cols(f, q, &proj_cols);
        (Self::from_parts(self.algebra(), q, action), proj)
    }

    /// Smallest submodule containing the given vectors.
    pub fn generated_submodule(&self, vectors: &[Vec<F::Elem>]) -> Subspace<F> {
        let mut ech = Echelon::new(self.field(), self.dim());
        let mut queue = vectors.to_vec();
        while let Some(v) = queue.pop() {
            if !ech.insert(v.clone()) {
                continue;
            }
            for a in &self.inner.action {
                queue.push(a.mul_vec(&v));
            }
        }
        ech.into_subspace()
    }

    /// `x M` for the elements of a subspace of the algebra.
    pub fn ideal_image(&self, elements: &Subspace<F>) -> Subspace<F> {
        let mut ech = Echelon::new(self.field(), self.dim());
        for x in elements.basis_vecs() {
            let a = self.act(&x);
            for c in 0..self.dim() {
                ech.insert(a.col(c));
                if ech.dim() == self.dim() {
                    return ech.into_subspace();
                }
            }
        }
        ech.into_subspace()
    }

    /// `rad(A) M`.
    pub fn radical_submodule(&self) -> Subspace<F> {
        let rad = self.algebra().radical().expect("radical of module algebra");
        self.ideal_image(rad.carrier())
    }

    /// `M / rad(A) M`.
    pub fn top(&self) -> Module<F> {
        self.quotient_unchecked(&self.radical_submodule()).0
    }

    /// Direct sum with block-diagonal actions, in the order given.
    pub fn direct_sum(algebra: &Algebra<F>, parts: &[Module<F>]) -> Result<Module<F>> {
        for p in parts {
            algebra.check_same(p.algebra())?;
        }
        let f = algebra.field();
        let dim = parts.iter().map(|p| p.dim()).sum();
        let action = (0..algebra.dim())
            .map(|i| {
                let blocks: Vec<&Matrix<F>> = parts.iter().map(|p| p.action(i)).collect();
                Matrix::block_diagonal(f, &blocks)
            })
            .collect();
        Ok(Self::from_parts(algebra, dim, action))
    }

    /// `M^k`.
    pub fn power(&self, k: usize) -> Module<F> {
        Self::direct_sum(self.algebra(), &vec![self.clone(); k]).expect("same algebra")
    }

    /// Same action, reinterpreted over an algebra with identical structure constants.
    pub fn over(&self, algebra: &Algebra<F>) -> Result<Module<F>> {
        self.algebra().check_same(algebra)?;
        Ok(Self::from_parts(algebra, self.dim(), self.inner.action.clone()))
    }

    /// Module over `B` obtained by restricting along an algebra map
    /// `B -> A` given as a matrix on coordinates.
    pub fn restrict(&self, b: &Algebra<F>, map: &Matrix<F>) -> Module<F> {
        let action = (0..b.dim()).map(|i| self.act(&map.col(i))).collect();
        Self::from_parts(b, self.dim(), action)
    }

    /// Whether the module is projective, tested by comparing with the
    /// dimension of its projective cover.
    pub fn is_projective(&self) -> Result<bool> {
        Ok(self.cover()?.projective.dim() == self.dim())
    }
}

/// Basis of `A e` as a subspace of `A`.
pub(crate) fn projective_span<F: Field>(a: &Algebra<F>, e: &[F::Elem]) -> Subspace<F> {
    let vecs: Vec<_> = (0..a.dim()).map(|i| a.mul(&a.basis_vec(i), e)).collect();
    Subspace::span(a.field(), a.dim(), &vecs)
}

/// A module homomorphism.
#[derive(Clone, Debug)]
pub struct ModuleMap<F: Field> {
    pub source: Module<F>,
    pub target: Module<F>,
    pub matrix: Matrix<F>,
}

impl<F: Field> ModuleMap<F> {
    /// Checks that the matrix intertwines every basis action.
    pub fn new(source: &Module<F>, target: &Module<F>, matrix: Matrix<F>) -> Result<Self> {
        source.algebra().check_same(target.algebra())?;
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim() * source.dim(),
                found: matrix.rows() * matrix.cols(),
            });
        }
        for i in 0..source.algebra().dim() {
            if matrix.mul(source.action(i)) != target.action(i).mul(&matrix) {
                return Err(Error::NotAModuleMap);
            }
        }
        Ok(ModuleMap { source: source.clone(), target: target.clone(), matrix })
    }

    pub fn identity(m: &Module<F>) -> Self {
        ModuleMap { source: m.clone(), target: m.clone(), matrix: Matrix::identity(m.field(), m.dim()) }
    }

    pub fn zero(source: &Module<F>, target: &Module<F>) -> Self {
        ModuleMap {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::zeros(source.field(), target.dim(), source.dim()),
        }
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.source.dim() != other.target.dim() {
            return Err(Error::DimensionMismatch { expected: self.source.dim(), found: other.target.dim() });
        }
        Ok(ModuleMap {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&other.matrix),
        })
    }

    pub fn kernel(&self) -> Subspace<F> {
        Subspace::span(self.source.field(), self.source.dim(), &self.matrix.nullspace())
    }

    pub fn image(&self) -> Subspace<F> {
        Subspace::span(self.source.field(), self.target.dim(), &self.matrix.col_vecs())
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }
}

/// Sum of the images of all homomorphisms from the generators into `x`.
pub fn trace_radical<F: Field>(generators: &[Module<F>], x: &Module<F>) -> Result<Subspace<F>> {
    let mut ech = Echelon::new(x.field(), x.dim());
    for g in generators {
        for h in hom_space(g, x)?.basis() {
            for c in h.col_vecs() {
                ech.insert(c);
            }
        }
    }
    Ok(ech.into_subspace())
}

/// `D M = Hom_k(M, k)` over the opposite algebra: the action of `b` is
/// the transpose of its action on `M`.
pub fn dual_module<F: Field>(m: &Module<F>, opposite: &Algebra<F>) -> Result<Module<F>> {
    let a = m.algebra();
    if opposite.dim() != a.dim() {
        return Err(Error::AlgebraMismatch);
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            if opposite.basis_product(i, j) != a.basis_product(j, i) {
                return Err(Error::AlgebraMismatch);
            }
        }
    }
    let action = m.actions().iter().map(|x| x.transpose()).collect();
    Ok(Module::from_parts(opposite, m.dim(), action))
}

#[cfg(test)]
mod tests;
