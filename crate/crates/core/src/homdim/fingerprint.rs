//! Invariants of the basic algebra Morita equivalent to a given one.
//!
//! Agreement of fingerprints is evidence for Morita equivalence, not a proof.

use itertools::Itertools;
use serde::Serialize;

use super::{basic_algebra, vertices};
use crate::algebra::Algebra;
use crate::error::Result;
use crate::linalg::{Factor, Field, Matrix};

/// Highest radical power recorded.
pub const RADICAL_DEPTH: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub simples: usize,
    pub dim: usize,
    /// Lexicographically least Cartan matrix over simultaneous row and
    /// column permutations.
    pub cartan: Vec<Vec<usize>>,
    /// `dim rad^k` for `k = 0..=4`.
    pub radical_dims: Vec<usize>,
}

/// `dim e X f` for `X` spanned by `basis`.
fn corner_of<F: Field>(a: &Algebra<F>, e: &[F::Elem], f: &[F::Elem], basis: &[Vec<F::Elem>]) -> usize {
    if basis.is_empty() {
        return 0;
    }
    let cols: Vec<Vec<F::Elem>> = basis.iter().map(|x| a.mul(&a.mul(e, x), f)).collect();
    Matrix::from_cols(a.field(), a.dim(), &cols).rank()
}

/// Fingerprint of the basic algebra `e A e`, where `e` sums one primitive
/// idempotent per simple.
pub fn fingerprint<F: Factor>(a: &Algebra<F>) -> Result<Fingerprint> {
    let a = &basic_algebra(a)?;
    let idems: Vec<Vec<F::Elem>> = vertices(a)?.into_iter().map(|v| v.idempotent).collect();
    let n = idems.len();
    let rad = a.radical()?;
    let mut powers = vec![a.whole()];
    for k in 1..=RADICAL_DEPTH {
        let next = powers[k - 1].product(&rad)?;
        powers.push(next);
    }
    let block = |basis: &[Vec<F::Elem>]| -> Vec<Vec<usize>> {
        idems.iter().map(|e| idems.iter().map(|f| corner_of(a, e, f, basis)).collect()).collect()
    };
    let radical_dims: Vec<usize> =
        powers.iter().map(|p| block(&p.carrier().basis_vecs()).iter().flatten().sum()).collect();
    let raw = block(&powers[0].carrier().basis_vecs());
    let cartan = (0..n)
        .permutations(n)
        .map(|perm| perm.iter().map(|&i| perm.iter().map(|&j| raw[i][j]).collect::<Vec<_>>()).collect::<Vec<_>>())
        .min()
        .unwrap_or_default();
    Ok(Fingerprint { simples: n, dim: radical_dims[0], cartan, radical_dims })
}
