//! The functor `F = Hom(P_{v,w}, -)` from `C_{v,w}` to modules over
//! `Pi_{v,w}`, checked against the Gorenstein projective description.
//!
//! `End(P)` multiplies by composition, so `Hom(P, X)` is a right module. It is
//! handled as a left module over the opposite algebra.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{gp_membership, virtual_dimension};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Factor, Field, Matrix, Subspace};
use crate::modcat::{hom_space, HomSpace, Module, DEFAULT_CUTOFF};
use crate::preproj::{is_member, random_member, BasicEnd, Preprojective};
use crate::weyl::WeylElement;

/// `A^k / U` with `U` generated by `gens` random vectors.
pub fn random_module<F: Field>(a: &Algebra<F>, k: usize, gens: usize, rng: &mut dyn RngCore) -> Result<Module<F>> {
    let free = Module::regular(a).power(k);
    let f = a.field();
    let vecs: Vec<Vec<F::Elem>> = (0..gens).map(|_| (0..free.dim()).map(|_| f.random(rng)).collect()).collect();
    Ok(free.quotient(&free.generated_submodule(&vecs))?.0)
}

/// `Hom(P, X)` over `ring = End(P)^op`, with `r` acting by `h -> h r`.
pub fn hom_functor<F: Field>(end: &BasicEnd<F>, ring: &Algebra<F>, x: &Module<F>) -> Result<(Module<F>, HomSpace<F>)> {
    let hs = hom_space(&end.module, x)?;
    let basis = hs.basis();
    let mut action = Vec::new();
    for r in end.hom.basis() {
        let cols =
            basis.iter().map(|h| hs.coords(&h.mul(&r)).ok_or(Error::NotAModuleMap)).collect::<Result<Vec<_>>>()?;
        action.push(Matrix::from_cols(x.field(), hs.dim(), &cols));
    }
    Ok((Module::new(ring, action)?, hs))
}

/// `F(u)` for `u: X -> Y`, in the bases of the two Hom spaces.
fn apply<F: Field>(u: &Matrix<F>, from: &HomSpace<F>, to: &HomSpace<F>) -> Result<Matrix<F>> {
    let cols =
        from.basis().iter().map(|h| to.coords(&u.mul(h)).ok_or(Error::NotAModuleMap)).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_cols(u.field(), to.dim(), &cols))
}

/// Outcome of [`gp_equivalence_check`]. Failure entries name the sample seed.
#[derive(Clone, Debug, Default, Serialize)]
pub struct GpReport {
    pub samples: usize,
    pub virdim: usize,
    pub gp_failures: Vec<u64>,
    pub hom_failures: Vec<u64>,
    pub exact_failures: Vec<u64>,
    /// Sequences with both end terms nonzero.
    pub nontrivial_sequences: usize,
}

impl GpReport {
    pub fn passed(&self) -> bool {
        self.gp_failures.is_empty() && self.hom_failures.is_empty() && self.exact_failures.is_empty()
    }
}

/// Seeds of the individual samples.
pub fn sample_seed(seed: u64, k: usize) -> u64 {
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add((k as u64).wrapping_add(1))
}

/// For seeded `X, Y` in `C_{v,w}`: `F X` is Gorenstein projective, `F` is
/// bijective on `Hom(X, Y)`, and `F` keeps a sequence `0 -> S -> X -> X/S -> 0`
/// in `C_{v,w}` exact.
pub fn gp_equivalence_check<F: Factor>(
    pi: &Preprojective<F>,
    v: &WeylElement,
    w: &WeylElement,
    samples: usize,
    seed: u64,
) -> Result<GpReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gen = pi.pvw(v, w, &mut rng)?;
    let end = gen.basic()?;
    let ring = end.algebra.opposite();
    let virdim = virtual_dimension(&ring, DEFAULT_CUTOFF)?;
    let mut report = GpReport { samples, virdim, ..GpReport::default() };
    for k in 0..samples {
        let s = sample_seed(seed, k);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let x = random_member(pi, v, w, 1 + k % 2, 1 + k % 3, &mut rng)?;
        let y = random_member(pi, v, w, 1, k % 2, &mut rng)?;
        let (fx, hx) = hom_functor(&end, &ring, &x)?;
        let (fy, hy) = hom_functor(&end, &ring, &y)?;
        if !gp_membership(&fx, virdim)? {
            report.gp_failures.push(s);
        }
        let hom_c = hom_space(&x, &y)?;
        let hom_r = hom_space(&fx, &fy)?;
        let mut images = Vec::new();
        let mut inside = true;
        for g in hom_c.basis() {
            let image = apply(&g, &hx, &hy)?;
            match hom_r.coords(&image) {
                Some(c) => images.push(c),
                None => inside = false,
            }
        }
        let rank = if images.is_empty() { 0 } else { Matrix::from_cols(x.field(), hom_r.dim(), &images).rank() };
        if !inside || hom_c.dim() != hom_r.dim() || rank != hom_c.dim() {
            report.hom_failures.push(s);
        }
        if !sequence_exact(pi, v, w, &end, &ring, &x, &mut rng, &mut report.nontrivial_sequences)? {
            report.exact_failures.push(s);
        }
    }
    Ok(report)
}

/// Picks `S = t_w(<m>)` for a random `m` in `X`. Sequences whose quotient
/// leaves `C_{v,w}` are not sequences of the category and pass vacuously.
#[allow(clippy::too_many_arguments)]
fn sequence_exact<F: Factor>(
    pi: &Preprojective<F>,
    v: &WeylElement,
    w: &WeylElement,
    end: &BasicEnd<F>,
    ring: &Algebra<F>,
    x: &Module<F>,
    rng: &mut dyn RngCore,
    nontrivial: &mut usize,
) -> Result<bool> {
    if x.is_zero() {
        return Ok(true);
    }
    let f = x.field();
    let m: Vec<F::Elem> = (0..x.dim()).map(|_| f.random(rng)).collect();
    let (gen, gen_incl) = x.submodule(&x.generated_submodule(&[m]))?;
    let (s, t_incl) = pi.torsion(w, &gen)?;
    let incl = gen_incl.mul(&t_incl);
    let (q, proj) = x.quotient(&Subspace::span(f, x.dim(), &incl.col_vecs()))?;
    if !is_member(pi, v, w, &q)? {
        return Ok(true);
    }
    if !s.is_zero() && !q.is_zero() {
        *nontrivial += 1;
    }
    let (fs, hs) = hom_functor(end, ring, &s)?;
    let (fx, hx) = hom_functor(end, ring, x)?;
    let (fq, hq) = hom_functor(end, ring, &q)?;
    let a = apply(&incl, &hs, &hx)?;
    let b = apply(&proj, &hx, &hq)?;
    Ok(b.mul(&a).is_zero() && a.rank() == fs.dim() && b.rank() == fq.dim() && fx.dim() == fs.dim() + fq.dim())
}
