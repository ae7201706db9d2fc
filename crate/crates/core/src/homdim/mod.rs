//! Injective, global and virtual dimension; Gorenstein projective modules;
//! Morita-type fingerprints of basic algebras.

mod fingerprint;
mod gp;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{primitive_idempotents, Algebra};
use crate::error::{Error, Result};
use crate::linalg::{Factor, Field, Subspace};
use crate::modcat::{dual_module, hom_space, projective_dimension, projective_span, HomDim, Module, Resolution};

pub use fingerprint::{fingerprint, Fingerprint};
pub use gp::{gp_equivalence_check, hom_functor, random_module, sample_seed, GpReport};

/// Side of the regular module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Fixed seed for the idempotent splitting; results do not depend on it.
const SPLIT_SEED: u64 = 0x1d3e;

/// A primitive idempotent with its projective `A e` and simple top.
#[derive(Clone, Debug)]
pub struct Vertex<F: Field> {
    pub idempotent: Vec<F::Elem>,
    pub projective: Module<F>,
    pub simple: Module<F>,
}

/// One vertex per isomorphism class of simple modules.
pub fn vertices<F: Factor>(a: &Algebra<F>) -> Result<Vec<Vertex<F>>> {
    if a.dim() == 0 {
        return Ok(vec![]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let reg = Module::regular(a);
    let mut out: Vec<Vertex<F>> = Vec::new();
    for e in primitive_idempotents(a, &mut rng)? {
        let projective = reg.submodule_unchecked(&projective_span(a, &e)).0;
        let simple = projective.quotient_unchecked(&projective.radical_submodule()).0;
        let mut seen = false;
        for v in &out {
            if !hom_space(&simple, &v.simple)?.is_zero() {
                seen = true;
                break;
            }
        }
        if !seen {
            out.push(Vertex { idempotent: e, projective, simple });
        }
    }
    Ok(out)
}

/// Whether the distinguished idempotents are primitive, pairwise
/// non-isomorphic and sum to one. Covers and resolutions need this.
fn has_basic_vertices<F: Field>(a: &Algebra<F>) -> Result<bool> {
    let f = a.field();
    let mut sum = a.zero();
    for e in a.idempotents() {
        for (s, x) in sum.iter_mut().zip(e) {
            *s = f.add(s, x);
        }
    }
    Ok(sum == a.unit() && a.is_basic()?)
}

/// The basic algebra `e A e`, with `e` a sum of one primitive idempotent per
/// simple. Returns `A` itself when its vertices are already basic.
pub fn basic_algebra<F: Factor>(a: &Algebra<F>) -> Result<Algebra<F>> {
    if a.dim() == 0 || has_basic_vertices(a)? {
        return Ok(a.clone());
    }
    let bare = a.with_idempotents(vec![], vec![])?;
    let idems: Vec<Vec<F::Elem>> = vertices(&bare)?.into_iter().map(|v| v.idempotent).collect();
    let f = a.field();
    let mut e = a.zero();
    for x in &idems {
        for (s, y) in e.iter_mut().zip(x) {
            *s = f.add(s, y);
        }
    }
    let corner: Vec<Vec<F::Elem>> = (0..a.dim()).map(|i| a.mul(&a.mul(&e, &a.basis_vec(i)), &e)).collect();
    let sub = Subspace::span(f, a.dim(), &corner);
    let basis = sub.basis_vecs();
    let coords = |x: &[F::Elem]| sub.coords(x).ok_or_else(|| Error::InvalidAlgebra("corner not closed".into()));
    let mut table = Vec::with_capacity(basis.len() * basis.len());
    for x in &basis {
        for y in &basis {
            table.push(coords(&a.mul(x, y))?);
        }
    }
    let labels = (0..basis.len()).map(|k| format!("b{k}")).collect();
    let vertex_labels = (1..=idems.len()).map(|k| format!("e{k}")).collect();
    let vertex_coords = idems.iter().map(|x| coords(x)).collect::<Result<Vec<_>>>()?;
    Algebra::new(f, labels, table, coords(&e)?, vertex_coords, vertex_labels)
}

/// Simple modules up to isomorphism.
pub fn simples<F: Factor>(a: &Algebra<F>) -> Result<Vec<Module<F>>> {
    Ok(vertices(a)?.into_iter().map(|v| v.simple).collect())
}

/// `injdim` of the regular module on one side, by two routes that must agree:
/// the least `d` with `Ext^{d+1}(S, A) = 0` for every simple `S`, and
/// `pd D(A)` over the opposite algebra.
pub fn injective_dimension<F: Factor>(a: &Algebra<F>, side: Side, cutoff: usize) -> Result<HomDim> {
    let a = match side {
        Side::Left => basic_algebra(a)?,
        Side::Right => basic_algebra(&a.opposite())?,
    };
    if a.dim() == 0 {
        return Ok(HomDim::Finite(0));
    }
    let by_ext = injdim_by_ext(&a, cutoff)?;
    let op = a.opposite();
    let dual = dual_module(&Module::regular(&a), &op)?;
    let by_dual = projective_dimension(&dual, cutoff)?;
    if by_ext != by_dual {
        return Err(Error::InvalidAlgebra(format!("injective dimension routes disagree ({by_ext} vs {by_dual})")));
    }
    Ok(by_ext)
}

fn injdim_by_ext<F: Factor>(a: &Algebra<F>, cutoff: usize) -> Result<HomDim> {
    let reg = Module::regular(a);
    let mut resolutions: Vec<Resolution<F>> = simples(a)?.iter().map(Resolution::new).collect();
    for d in 0..=cutoff {
        let mut vanish = true;
        for r in resolutions.iter_mut() {
            if r.ext_dim(d + 1, &reg)? != 0 {
                vanish = false;
                break;
            }
        }
        if vanish {
            return Ok(HomDim::Finite(d));
        }
    }
    Ok(HomDim::AboveCutoff)
}

/// Largest projective dimension of a simple module.
pub fn global_dimension<F: Factor>(a: &Algebra<F>, cutoff: usize) -> Result<HomDim> {
    let a = basic_algebra(a)?;
    let mut best = 0;
    for s in simples(&a)? {
        match projective_dimension(&s, cutoff)? {
            HomDim::Finite(n) => best = best.max(n),
            HomDim::AboveCutoff => return Ok(HomDim::AboveCutoff),
        }
    }
    Ok(HomDim::Finite(best))
}

/// The common value of both injective dimensions of `A`.
pub fn virtual_dimension<F: Factor>(a: &Algebra<F>, cutoff: usize) -> Result<usize> {
    dimension_report(a, cutoff)?.virtual_dimension()
}

/// Homological dimensions of one algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub left_injdim: HomDim,
    pub right_injdim: HomDim,
    pub gldim: HomDim,
    pub cutoff: usize,
}

impl DimensionReport {
    /// Both injective dimensions finite and equal.
    pub fn virtual_dimension(&self) -> Result<usize> {
        match (self.left_injdim, self.right_injdim) {
            (HomDim::Finite(l), HomDim::Finite(r)) if l == r => Ok(l),
            _ => Err(Error::NotGorensteinWithinCutoff(self.cutoff)),
        }
    }

    /// Finite injective dimensions on both sides that differ. Never expected.
    pub fn is_anomalous(&self) -> bool {
        matches!((self.left_injdim, self.right_injdim), (HomDim::Finite(l), HomDim::Finite(r)) if l != r)
    }
}

pub fn dimension_report<F: Factor>(a: &Algebra<F>, cutoff: usize) -> Result<DimensionReport> {
    Ok(DimensionReport {
        left_injdim: injective_dimension(a, Side::Left, cutoff)?,
        right_injdim: injective_dimension(a, Side::Right, cutoff)?,
        gldim: global_dimension(a, cutoff)?,
        cutoff,
    })
}

/// `Ext^i(M, A) = 0` for `1 <= i <= d`, where `d` is the virtual dimension.
/// Higher `Ext` into `A` vanishes automatically past `injdim A`.
pub fn gp_membership<F: Field>(m: &Module<F>, d: usize) -> Result<bool> {
    let reg = Module::regular(m.algebra());
    let mut res = Resolution::new(m);
    for i in 1..=d {
        if res.ext_dim(i, &reg)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;
