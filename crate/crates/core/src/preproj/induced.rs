//! The ring maps `phi_2: End(t_w Pi) -> End(P_{v,w})` and
//! `tau_1: End(f_v Pi) -> End(P_{v,w})`.
//!
//! Both are computed on full endomorphism rings, in the canonical Hom bases.

use rand::RngCore;

use super::{Generator, Preprojective};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Factor, Field, Matrix, Subspace};
use crate::modcat::{hom_space, HomSpace};
use crate::weyl::WeylElement;

/// A linear map between endomorphism rings and its checked properties.
#[derive(Clone, Debug)]
pub struct InducedMap<F: Field> {
    /// Columns are images of the source basis, in target coordinates.
    pub matrix: Matrix<F>,
    pub source_dim: usize,
    pub target_dim: usize,
    pub kernel: Subspace<F>,
    /// Maps factoring over the relevant object, in source coordinates.
    pub factoring: Subspace<F>,
    pub multiplicative: bool,
    pub unital: bool,
}

impl<F: Field> InducedMap<F> {
    pub fn rank(&self) -> usize {
        self.source_dim - self.kernel.dim()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel.is_zero()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target_dim
    }

    pub fn coker_dim(&self) -> usize {
        self.target_dim - self.rank()
    }

    pub fn kernel_is_factoring(&self) -> bool {
        self.kernel == self.factoring
    }

    pub fn is_algebra_map(&self) -> bool {
        self.multiplicative && self.unital
    }
}

#[derive(Clone, Debug)]
pub struct InducedMaps<F: Field> {
    pub phi2: InducedMap<F>,
    pub tau1: InducedMap<F>,
}

fn build<F: Field>(
    source: &HomSpace<F>,
    target: &HomSpace<F>,
    apply: impl Fn(&Matrix<F>) -> Matrix<F>,
    factoring: Subspace<F>,
) -> Result<InducedMap<F>> {
    let f = source.source.field();
    let basis = source.basis();
    let images: Vec<Matrix<F>> = basis.iter().map(&apply).collect();
    let cols = images.iter().map(|m| target.coords(m).ok_or(Error::NotAModuleMap)).collect::<Result<Vec<_>>>()?;
    let matrix = Matrix::from_cols(f, target.dim(), &cols);
    let kernel = Subspace::span(f, source.dim(), &matrix.nullspace());
    let mut multiplicative = true;
    'outer: for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            if apply(&x.mul(y)) != images[i].mul(&images[j]) {
                multiplicative = false;
                break 'outer;
            }
        }
    }
    let unital = apply(&Matrix::identity(f, source.source.dim())).is_identity();
    Ok(InducedMap {
        matrix,
        source_dim: source.dim(),
        target_dim: target.dim(),
        kernel,
        factoring,
        multiplicative,
        unital,
    })
}

/// Span of the given endomorphisms, in the coordinates of `hs`.
fn span_in<F: Field>(hs: &HomSpace<F>, maps: impl IntoIterator<Item = Matrix<F>>) -> Result<Subspace<F>> {
    let mut ech = Echelon::new(hs.source.field(), hs.dim());
    for m in maps {
        ech.insert(hs.coords(&m).ok_or(Error::NotAModuleMap)?);
    }
    Ok(ech.into_subspace())
}

/// `phi_2` and `tau_1` for the pair `(v, w)`.
pub fn induced_maps<F: Factor>(
    pi: &Preprojective<F>,
    v: &WeylElement,
    w: &WeylElement,
    rng: &mut dyn RngCore,
) -> Result<InducedMaps<F>> {
    let gen = pi.pvw(v, w, rng)?;
    Ok(InducedMaps { phi2: phi2(pi, &gen)?, tau1: tau1(pi, &gen)? })
}

/// `g` on `T = t_w Pi` descends to `P = T / t_v T`.
pub fn phi2<F: Factor>(pi: &Preprojective<F>, gen: &Generator<F>) -> Result<InducedMap<F>> {
    let t = &gen.torsion_part;
    let p = &gen.module;
    let source = hom_space(t, t)?;
    let target = hom_space(p, p)?;
    let proj = &gen.projection;
    let section = proj.right_inverse().ok_or(Error::NotAModuleMap)?;
    let (tv, incl) = pi.torsion(&gen.v, t)?;
    let through = hom_space(t, &tv)?.basis().into_iter().map(|h| incl.mul(&h));
    let factoring = span_in(&source, through)?;
    build(&source, &target, |g| proj.mul(g).mul(&section), factoring)
}

/// `g` on `U = f_v Pi` restricts to `t_w U`, then moves to `P` along the
/// commutation isomorphism. Fails with `IsoNotVerified` when there is none.
pub fn tau1<F: Factor>(pi: &Preprojective<F>, gen: &Generator<F>) -> Result<InducedMap<F>> {
    let theta = gen.commutation_iso.as_ref().ok_or(Error::IsoNotVerified)?;
    let theta_inv = theta.inverse().ok_or(Error::IsoNotVerified)?;
    let (u, _) = pi.torsion_free(&gen.v, &pi.regular())?;
    let (sub, incl) = pi.torsion(&gen.w, &u)?;
    if sub.actions() != gen.commuted.actions() {
        return Err(Error::InvalidModule("torsion part rebuilt differently".into()));
    }
    let p = &gen.module;
    let source = hom_space(&u, &u)?;
    let target = hom_space(p, p)?;
    let retract = incl.left_inverse().ok_or(Error::NotAModuleMap)?;
    let (fw, proj) = pi.torsion_free(&gen.w, &u)?;
    let through = hom_space(&fw, &u)?.basis().into_iter().map(|h| h.mul(&proj));
    let factoring = span_in(&source, through)?;
    build(&source, &target, |g| theta.mul(&retract).mul(g).mul(&incl).mul(&theta_inv), factoring)
}
