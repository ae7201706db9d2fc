//! Minimal projective resolutions, syzygies, Ext and projective dimension.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{hom_space, is_isomorphic, Module};
use crate::error::Result;
use crate::linalg::{Factor, Field};

/// Default bound on resolution length.
pub const DEFAULT_CUTOFF: usize = 12;

/// A homological dimension, or the marker that it exceeds the cutoff.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum HomDim {
    Finite(usize),
    AboveCutoff,
}

impl HomDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            HomDim::Finite(n) => Some(n),
            HomDim::AboveCutoff => None,
        }
    }
}

impl fmt::Display for HomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomDim::Finite(n) => write!(f, "{n}"),
            HomDim::AboveCutoff => f.write_str("AboveCutoff"),
        }
    }
}

/// Syzygies `Omega^0 = M, Omega^1, ...`, computed on demand.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    syzygies: Vec<Module<F>>,
}

impl<F: Field> Resolution<F> {
    pub fn new(m: &Module<F>) -> Self {
        Resolution { syzygies: vec![m.clone()] }
    }

    pub fn syzygy(&mut self, i: usize) -> Result<&Module<F>> {
        while self.syzygies.len() <= i {
            let last = self.syzygies.last().expect("nonempty");
            let cover = last.cover()?;
            let next = cover.projective.submodule_unchecked(&cover.kernel).0;
            self.syzygies.push(next);
        }
        Ok(&self.syzygies[i])
    }

    /// `dim Ext^i(M, N)` from `0 -> Hom(Om^{i-1}, N) -> Hom(P_{i-1}, N) -> Hom(Om^i, N) -> Ext^i -> 0`.
    pub fn ext_dim(&mut self, i: usize, n: &Module<F>) -> Result<usize> {
        if i == 0 {
            return Ok(hom_space(self.syzygy(0)?, n)?.dim());
        }
        let prev = self.syzygy(i - 1)?.clone();
        let cur = self.syzygy(i)?.clone();
        let hp = prev.hom_from_cover_dim(n)?;
        let a = hom_space(&cur, n)?.dim();
        let b = hom_space(&prev, n)?.dim();
        Ok(a + b - hp)
    }
}

/// `Omega^i M`.
pub fn syzygy<F: Field>(m: &Module<F>, i: usize) -> Result<Module<F>> {
    Ok(Resolution::new(m).syzygy(i)?.clone())
}

/// `dim Ext^i(M, N)`.
pub fn ext<F: Field>(m: &Module<F>, n: &Module<F>, i: usize) -> Result<usize> {
    m.algebra().check_same(n.algebra())?;
    Resolution::new(m).ext_dim(i, n)
}

/// Projective dimension. Returns `AboveCutoff` past the cutoff or when a
/// syzygy repeats up to isomorphism, which forces an infinite resolution.
pub fn projective_dimension<F: Factor>(m: &Module<F>, cutoff: usize) -> Result<HomDim> {
    let mut res = Resolution::new(m);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..=cutoff {
        let om = res.syzygy(i)?.clone();
        if om.is_projective()? {
            return Ok(HomDim::Finite(i));
        }
        for j in 1..i {
            let earlier = res.syzygy(j)?.clone();
            if earlier.dim() == om.dim() && is_isomorphic(&earlier, &om, &mut rng)? {
                return Ok(HomDim::AboveCutoff);
            }
        }
    }
    Ok(HomDim::AboveCutoff)
}
