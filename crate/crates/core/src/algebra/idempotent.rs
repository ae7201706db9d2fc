//! Splitting the unit into primitive orthogonal idempotents.
//!
//! A corner `eAe` is split by the minimal polynomial of an element `y` of
//! the corner: a factorization `mu = g^m h` with `gcd(g, h) = 1` yields the
//! exact idempotent `(s g^m)(y)` where `s g^m + t h = 1`. The idempotents
//! are exact, so no lifting through the radical is needed.

use rand::RngCore;

use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::matrix::axpy;
use crate::linalg::{factor_polynomial, Factor, Field, Matrix, Poly, Subspace};

const RANDOM_ATTEMPTS: usize = 64;

/// `dim e A f`.
pub fn corner_dim<F: Field>(a: &Algebra<F>, e: &[F::Elem], f: &[F::Elem]) -> usize {
    let vecs: Vec<_> = (0..a.dim()).map(|i| a.mul(&a.mul(e, &a.basis_vec(i)), f)).collect();
    Subspace::span(a.field(), a.dim(), &vecs).dim()
}

fn corner_radical_dim<F: Field>(a: &Algebra<F>, e: &[F::Elem], rad: &Subspace<F>) -> usize {
    let vecs: Vec<_> = rad.basis_vecs().iter().map(|x| a.mul(&a.mul(e, x), e)).collect();
    Subspace::span(a.field(), a.dim(), &vecs).dim()
}

/// Evaluates `p(y)` inside the corner with unit `e`.
fn eval_in_corner<F: Field>(a: &Algebra<F>, p: &Poly<F>, y: &[F::Elem], e: &[F::Elem]) -> Vec<F::Elem> {
    let f = a.field();
    let mut acc = a.zero();
    for c in p.coeffs().iter().rev() {
        acc = a.mul(&acc, y);
        axpy(f, &mut acc, c, e);
    }
    acc
}

/// Minimal polynomial of `y` in the corner with unit `e`.
fn minimal_polynomial<F: Field>(a: &Algebra<F>, y: &[F::Elem], e: &[F::Elem]) -> Poly<F> {
    let f = a.field();
    let mut powers = vec![e.to_vec()];
    loop {
        let next = a.mul(powers.last().unwrap(), y);
        let m = Matrix::from_cols(f, a.dim(), &powers);
        if let Some(c) = m.solve(&next) {
            let mut coeffs: Vec<F::Elem> = c.iter().map(|x| f.neg(x)).collect();
            coeffs.push(f.one());
            return Poly::new(f, coeffs);
        }
        powers.push(next);
    }
}

fn candidates<F: Field>(a: &Algebra<F>, e: &[F::Elem], rng: &mut dyn RngCore) -> Vec<Vec<F::Elem>> {
    let f = a.field();
    let d = a.dim();
    let sandwich = |x: &[F::Elem]| a.mul(&a.mul(e, x), e);
    let mut out: Vec<Vec<F::Elem>> = (0..RANDOM_ATTEMPTS)
        .map(|_| {
            let x: Vec<F::Elem> = (0..d).map(|_| f.random(rng)).collect();
            sandwich(&x)
        })
        .collect();
    // Deterministic fallbacks matter over the rationals, where random
    // elements of a matrix block rarely have a split minimal polynomial.
    for i in 0..d {
        out.push(sandwich(&a.basis_vec(i)));
    }
    for i in 0..d {
        for j in i + 1..d {
            let mut x = a.basis_vec(i);
            x[j] = f.one();
            out.push(sandwich(&x));
        }
    }
    out
}

fn split<F: Factor>(
    a: &Algebra<F>,
    e: Vec<F::Elem>,
    rad: &Subspace<F>,
    rng: &mut dyn RngCore,
    out: &mut Vec<Vec<F::Elem>>,
) -> Result<()> {
    let top = corner_dim(a, &e, &e) - corner_radical_dim(a, &e, rad);
    if top <= 1 {
        out.push(e);
        return Ok(());
    }
    for y in candidates(a, &e, rng) {
        let mu = minimal_polynomial(a, &y, &e);
        let factors = match factor_polynomial(&mu) {
            Ok(fs) => fs,
            Err(Error::RationalsFactorLimit) => continue,
            Err(err) => return Err(err),
        };
        if factors.len() < 2 {
            continue;
        }
        let g = factors[0].0.pow(factors[0].1);
        let (h, _) = mu.divrem(&g);
        let (_, s, _) = g.ext_gcd(&h);
        let poly = s.mul(&g).rem(&mu);
        let idem = eval_in_corner(a, &poly, &y, &e);
        let f = a.field();
        let rest: Vec<F::Elem> = e.iter().zip(&idem).map(|(x, z)| f.sub(x, z)).collect();
        split(a, idem, rad, rng, out)?;
        split(a, rest, rad, rng, out)?;
        return Ok(());
    }
    Err(Error::NonSplit)
}

/// A complete set of primitive orthogonal idempotents. Distinguished
/// idempotents, when present, are refined rather than discarded.
pub fn primitive_idempotents<F: Factor>(a: &Algebra<F>, rng: &mut dyn RngCore) -> Result<Vec<Vec<F::Elem>>> {
    let rad = a.radical()?;
    let start: Vec<Vec<F::Elem>> =
        if a.idempotents().is_empty() { vec![a.unit().to_vec()] } else { a.idempotents().to_vec() };
    let mut out = Vec::new();
    for e in start {
        split(a, e, rad.carrier(), rng, &mut out)?;
    }
    Ok(out)
}
