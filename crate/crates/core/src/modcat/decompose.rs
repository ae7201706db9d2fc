//! Krull-Schmidt decomposition and isomorphism testing.

use rand::RngCore;

use super::{endomorphism_algebra, hom_space, Module};
use crate::algebra::primitive_idempotents;
use crate::error::{Error, Result};
use crate::linalg::{Factor, Field, Matrix, Subspace};

/// An indecomposable summand with `projection * inclusion = 1`.
#[derive(Clone, Debug)]
pub struct Summand<F: Field> {
    pub module: Module<F>,
    pub inclusion: Matrix<F>,
    pub projection: Matrix<F>,
}

/// Splits `M` along a complete set of primitive idempotents of `End(M)`.
/// The inclusions and projections sum to the identity.
pub fn decompose<F: Factor>(m: &Module<F>, rng: &mut dyn RngCore) -> Result<Vec<Summand<F>>> {
    if m.is_zero() {
        return Ok(vec![]);
    }
    let f = m.field();
    let (end, hs) = endomorphism_algebra(m)?;
    let idems = primitive_idempotents(&end, rng)?;
    let mut out = Vec::with_capacity(idems.len());
    for e in idems {
        let eps = hs.combination(&e);
        let image = Subspace::span(f, m.dim(), &eps.col_vecs());
        let (module, inclusion) = m.submodule_unchecked(&image);
        let cols: Vec<Vec<F::Elem>> = eps.col_vecs().iter().map(|c| image.coords_unchecked(c)).collect();
        let projection = Matrix::from_cols(f, image.dim(), &cols);
        out.push(Summand { module, inclusion, projection });
    }
    Ok(out)
}

/// Isomorphism of indecomposables: some `g f` with `f: X -> Y`, `g: Y -> X`
/// basis maps is invertible. Non-invertible endomorphisms form the radical,
/// a subspace, so testing basis products suffices.
pub fn indecomposables_iso<F: Field>(x: &Module<F>, y: &Module<F>) -> Result<bool> {
    if x.is_zero() && y.is_zero() {
        return Ok(true);
    }
    Ok(indecomposable_isomorphism(x, y)?.is_some())
}

/// Whether two lists of indecomposables agree as multisets up to isomorphism.
pub fn same_summands<F: Field>(xs: &[Module<F>], ys: &[Module<F>]) -> Result<bool> {
    if xs.len() != ys.len() {
        return Ok(false);
    }
    let mut used = vec![false; ys.len()];
    'outer: for x in xs {
        for (j, y) in ys.iter().enumerate() {
            if !used[j] && indecomposables_iso(x, y)? {
                used[j] = true;
                continue 'outer;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Representatives of the isomorphism classes among indecomposables, with
/// multiplicities, in order of first appearance.
pub fn iso_classes<F: Field>(xs: &[Module<F>]) -> Result<Vec<(Module<F>, usize)>> {
    let mut classes: Vec<(Module<F>, usize)> = Vec::new();
    'outer: for x in xs {
        for (rep, mult) in classes.iter_mut() {
            if indecomposables_iso(rep, x)? {
                *mult += 1;
                continue 'outer;
            }
        }
        classes.push((x.clone(), 1));
    }
    Ok(classes)
}

/// An explicit isomorphism `M -> N`, or `None` when none exists.
/// Random elements of `Hom(M, N)` are tried first (32 draws); afterwards
/// indecomposable summands are matched and the matching isomorphisms
/// assembled.
pub fn find_isomorphism<F: Factor>(m: &Module<F>, n: &Module<F>, rng: &mut dyn RngCore) -> Result<Option<Matrix<F>>> {
    m.algebra().check_same(n.algebra())?;
    if m.dim() != n.dim() || m.dimension_vector() != n.dimension_vector() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(Matrix::zeros(m.field(), 0, 0)));
    }
    let hs = hom_space(m, n)?;
    if hs.is_zero() {
        return Ok(None);
    }
    for _ in 0..32 {
        let x = hs.random(rng);
        if x.is_invertible() {
            return Ok(Some(x));
        }
    }
    let xs = decompose(m, rng).map_err(|_| Error::IsoNotVerified)?;
    let ys = decompose(n, rng).map_err(|_| Error::IsoNotVerified)?;
    if xs.len() != ys.len() {
        return Ok(None);
    }
    let mut theta = Matrix::zeros(m.field(), n.dim(), m.dim());
    let mut used = vec![false; ys.len()];
    'outer: for x in &xs {
        for (j, y) in ys.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(iso) = indecomposable_isomorphism(&x.module, &y.module)? {
                used[j] = true;
                theta = theta.add(&y.inclusion.mul(&iso).mul(&x.projection));
                continue 'outer;
            }
        }
        return Ok(None);
    }
    Ok(Some(theta))
}

/// For indecomposables, `f` is an isomorphism as soon as some `g f` is.
fn indecomposable_isomorphism<F: Field>(x: &Module<F>, y: &Module<F>) -> Result<Option<Matrix<F>>> {
    if x.dim() != y.dim() || x.dimension_vector() != y.dimension_vector() {
        return Ok(None);
    }
    let fs = hom_space(x, y)?.basis();
    let gs = hom_space(y, x)?.basis();
    for f in fs {
        if f.is_invertible() || gs.iter().any(|g| g.mul(&f).is_invertible()) {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// Whether `M` and `N` are isomorphic; see [`find_isomorphism`].
pub fn is_isomorphic<F: Factor>(m: &Module<F>, n: &Module<F>, rng: &mut dyn RngCore) -> Result<bool> {
    Ok(find_isomorphism(m, n, rng)?.is_some())
}
