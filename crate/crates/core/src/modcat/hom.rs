//! Projective covers and Hom spaces.
//!
//! `Hom(M, N)` is computed from a projective presentation of `M`: a map is
//! fixed by the images `n_k in e_{j_k} N` of the top generators `m_k`, subject
//! to the kernel of the cover vanishing.

use rand::RngCore;

use super::{projective_span, Module, ModuleMap};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::matrix::axpy;
use crate::linalg::{Echelon, Field, Matrix, Subspace};

/// Minimal projective cover `P -> M` built on a basis of the top.
#[derive(Clone, Debug)]
pub struct Cover<F: Field> {
    /// Vertex and vector of each top generator `m_k in e_{j_k} M`.
    pub generators: Vec<(usize, Vec<F::Elem>)>,
    /// `P = (+)_k A e_{j_k}`.
    pub projective: Module<F>,
    /// `P -> M`.
    pub map: Matrix<F>,
    /// A linear right inverse of `map`.
    pub section: Matrix<F>,
    /// Kernel of `map`, inside `P`.
    pub kernel: Subspace<F>,
    /// Basis vector `t` of `P` is `slot_elems[t] * m_{slot_of[t]}`.
    pub(crate) slot_of: Vec<usize>,
    pub(crate) slot_elems: Vec<Vec<F::Elem>>,
}

/// Distinguished idempotents, or the unit when there are none.
pub(crate) fn vertex_idempotents<F: Field>(a: &Algebra<F>) -> Vec<Vec<F::Elem>> {
    if a.idempotents().is_empty() {
        vec![a.unit().to_vec()]
    } else {
        a.idempotents().to_vec()
    }
}

/// Basis of `e N`.
fn corner_basis<F: Field>(n: &Module<F>, e: &[F::Elem]) -> Vec<Vec<F::Elem>> {
    Subspace::span(n.field(), n.dim(), &n.act(e).col_vecs()).basis_vecs()
}

impl<F: Field> Module<F> {
    pub fn cover(&self) -> Result<&Cover<F>> {
        self.cover_cell().get_or_init(|| build_cover(self)).as_ref().map_err(Clone::clone)
    }

    /// `dim Hom(A e_j, M) = dim e_j M`, summed over the cover.
    pub(crate) fn hom_from_cover_dim(&self, other: &Module<F>) -> Result<usize> {
        let idems = vertex_idempotents(self.algebra());
        Ok(self.cover()?.generators.iter().map(|(j, _)| other.act(&idems[*j]).rank()).sum())
    }
}

fn build_cover<F: Field>(m: &Module<F>) -> Result<Cover<F>> {
    let a = m.algebra();
    let f = a.field();
    let idems = vertex_idempotents(a);
    let rad = if a.idempotents().is_empty() { Subspace::zero(f, m.dim()) } else { m.radical_submodule() };
    let mut ech = Echelon::from_subspace(&rad);
    let mut generators = Vec::new();
    for (j, e) in idems.iter().enumerate() {
        for v in m.act(e).col_vecs() {
            if ech.dim() == m.dim() {
                break;
            }
            if !ech.contains(&v) {
                ech.insert(v.clone());
                generators.push((j, v));
            }
        }
    }
    if ech.dim() != m.dim() {
        return Err(Error::InvalidModule("idempotents do not generate the module".into()));
    }
    let spans: Vec<Vec<Vec<F::Elem>>> = idems.iter().map(|e| projective_span(a, e).basis_vecs()).collect();
    let mut parts = Vec::new();
    let mut slot_of = Vec::new();
    let mut slot_elems = Vec::new();
    let mut cols = Vec::new();
    for (k, (j, v)) in generators.iter().enumerate() {
        parts.push(Module::projective_from_span(a, &spans[*j]));
        let moved: Vec<Vec<F::Elem>> = m.actions().iter().map(|x| x.mul_vec(v)).collect();
        for alpha in &spans[*j] {
            let mut col = vec![f.zero(); m.dim()];
            for (i, c) in alpha.iter().enumerate() {
                if !f.is_zero(c) {
                    axpy(f, &mut col, c, &moved[i]);
                }
            }
            cols.push(col);
            slot_of.push(k);
            slot_elems.push(alpha.clone());
        }
    }
    let projective = Module::direct_sum(a, &parts)?;
    let map = Matrix::from_cols(f, m.dim(), &cols);
    let section = map.right_inverse().ok_or_else(|| Error::InvalidModule("cover is not surjective".into()))?;
    let kernel = Subspace::span(f, projective.dim(), &map.nullspace());
    Ok(Cover { generators, projective, map, section, kernel, slot_of, slot_elems })
}

impl<F: Field> Module<F> {
    /// `A e` on a given basis of `A e`.
    pub(crate) fn projective_from_span(a: &Algebra<F>, basis: &[Vec<F::Elem>]) -> Module<F> {
        let span = Subspace::span(a.field(), a.dim(), basis);
        Module::regular(a).submodule_unchecked(&span).0
    }
}

/// A Hom space with a canonical basis (reduced echelon form of the
/// row-major flattened matrices).
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    pub source: Module<F>,
    pub target: Module<F>,
    space: Subspace<F>,
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    fn unflatten(&self, v: Vec<F::Elem>) -> Matrix<F> {
        Matrix::from_flat(self.source.field(), self.target.dim(), self.source.dim(), v)
    }

    pub fn basis(&self) -> Vec<Matrix<F>> {
        self.space.basis_vecs().into_iter().map(|v| self.unflatten(v)).collect()
    }

    pub fn map(&self, i: usize) -> ModuleMap<F> {
        ModuleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.unflatten(self.space.basis().row(i).to_vec()),
        }
    }

    pub fn combination(&self, coeffs: &[F::Elem]) -> Matrix<F> {
        self.unflatten(self.space.combine(coeffs))
    }

    pub fn random(&self, rng: &mut dyn RngCore) -> Matrix<F> {
        let f = self.source.field();
        let c: Vec<F::Elem> = (0..self.dim()).map(|_| f.random(rng)).collect();
        self.combination(&c)
    }

    /// Coordinates of a matrix in the basis, if it is a homomorphism.
    pub fn coords(&self, m: &Matrix<F>) -> Option<Vec<F::Elem>> {
        self.space.coords(m.data())
    }

    pub fn contains(&self, m: &Matrix<F>) -> bool {
        self.space.contains(m.data())
    }
}

/// All homomorphisms `M -> N`.
pub fn hom_space<F: Field>(m: &Module<F>, n: &Module<F>) -> Result<HomSpace<F>> {
    m.algebra().check_same(n.algebra())?;
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let flat = dm * dn;
    let empty = || HomSpace { source: m.clone(), target: n.clone(), space: Subspace::zero(f, flat) };
    if dm == 0 || dn == 0 {
        return Ok(empty());
    }
    let cover = m.cover()?;
    let idems = vertex_idempotents(m.algebra());
    let d = m.algebra().dim();
    // unknowns: y_k in the coordinates of e_{j_k} N
    let corners: Vec<Vec<Vec<F::Elem>>> = idems.iter().map(|e| corner_basis(n, e)).collect();
    let mut offsets = Vec::new();
    let mut width = 0;
    for (j, _) in &cover.generators {
        offsets.push(width);
        width += corners[*j].len();
    }
    if width == 0 {
        return Ok(empty());
    }
    // w[k][i] = act_N(b_i) E_k, kept as columns
    let w: Vec<Vec<Matrix<F>>> = cover
        .generators
        .iter()
        .map(|(j, _)| {
            let ek = Matrix::from_cols(f, dn, &corners[*j]);
            n.actions().iter().map(|x| x.mul(&ek)).collect()
        })
        .collect();
    // n x width block of the linear map y -> image of the P-vector v
    let image_of = |v: &[F::Elem]| -> Matrix<F> {
        let mut out = Matrix::zeros(f, dn, width);
        for (t, c) in v.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let k = cover.slot_of[t];
            let alpha = &cover.slot_elems[t];
            for i in 0..d {
                if f.is_zero(&alpha[i]) {
                    continue;
                }
                let coeff = f.mul(c, &alpha[i]);
                let wi = &w[k][i];
                for r in 0..dn {
                    for s in 0..wi.cols() {
                        let cur = out.get(r, offsets[k] + s).clone();
                        let mut acc = cur;
                        f.add_mul(&mut acc, &coeff, wi.get(r, s));
                        out.set(r, offsets[k] + s, acc);
                    }
                }
            }
        }
        out
    };
    let mut constraints: Vec<Vec<F::Elem>> = Vec::new();
    for kv in cover.kernel.basis_vecs() {
        constraints.extend(image_of(&kv).row_vecs());
    }
    let solutions = if constraints.is_empty() {
        (0..width).map(|i| crate::linalg::matrix::unit_vec(f, width, i)).collect()
    } else {
        Matrix::from_rows(f, width, constraints).nullspace()
    };
    if solutions.is_empty() {
        return Ok(empty());
    }
    // phi(x_c) = image of section(x_c)
    let blocks: Vec<Matrix<F>> = (0..dm).map(|c| image_of(&cover.section.col(c))).collect();
    let mut maps = Vec::with_capacity(solutions.len());
    for y in &solutions {
        let mut data = vec![f.zero(); flat];
        for (c, b) in blocks.iter().enumerate() {
            let col = b.mul_vec(y);
            for (r, x) in col.into_iter().enumerate() {
                data[r * dm + c] = x;
            }
        }
        maps.push(data);
    }
    Ok(HomSpace { source: m.clone(), target: n.clone(), space: Subspace::span(f, flat, &maps) })
}

/// `End(M)` with multiplication `phi * psi = phi after psi`, together with
/// the basis it is written in. No idempotents are distinguished.
pub fn endomorphism_algebra<F: Field>(m: &Module<F>) -> Result<(Algebra<F>, HomSpace<F>)> {
    let hs = hom_space(m, m)?;
    let f = m.field();
    let basis = hs.basis();
    let r = basis.len();
    let mut table = Vec::with_capacity(r * r);
    for x in &basis {
        for y in &basis {
            table.push(hs.coords(&x.mul(y)).ok_or(Error::NotAModuleMap)?);
        }
    }
    let unit = hs.coords(&Matrix::identity(f, m.dim())).ok_or(Error::NotAModuleMap)?;
    let labels = (0..r).map(|i| format!("h{i}")).collect();
    let alg = Algebra::new(f, labels, table, unit, vec![], vec![])?;
    Ok((alg, hs))
}
