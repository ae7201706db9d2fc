//! The generator `P_{v,w} = f_v t_w (Pi)` and the endomorphism rings built from it.

use rand::RngCore;

use super::Preprojective;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Factor, Field, Matrix};
use crate::modcat::{decompose, endomorphism_algebra, find_isomorphism, iso_classes, same_summands, HomSpace, Module};
use crate::weyl::WeylElement;

/// `P_{v,w} = f_v t_w (Pi)` with the data it was built from.
#[derive(Clone, Debug)]
pub struct Generator<F: Field> {
    pub v: WeylElement,
    pub w: WeylElement,
    /// `T = t_w(Pi)`.
    pub torsion_part: Module<F>,
    pub torsion_inclusion: Matrix<F>,
    /// `P = f_v(T)`.
    pub module: Module<F>,
    /// `T -> P`.
    pub projection: Matrix<F>,
    /// `t_w(f_v(Pi))`.
    pub commuted: Module<F>,
    /// Isomorphism `t_w(f_v(Pi)) -> P`. Absent when the two orders differ,
    /// which happens only off `v <= w` in Bruhat order.
    pub commutation_iso: Option<Matrix<F>>,
    /// Whether both orders have the same indecomposable summands.
    pub same_additive_hull: bool,
    /// Isomorphism classes of indecomposable summands with multiplicities.
    pub summands: Vec<(Module<F>, usize)>,
}

/// A basic endomorphism algebra: `End` of one copy of each indecomposable,
/// with the summand identities as distinguished idempotents.
#[derive(Clone, Debug)]
pub struct BasicEnd<F: Field> {
    pub algebra: Algebra<F>,
    pub module: Module<F>,
    pub hom: HomSpace<F>,
    pub summands: Vec<Module<F>>,
}

/// `End(X_1 + ... + X_n)` for pairwise non-isomorphic indecomposables.
pub fn basic_endomorphism_algebra<F: Field>(algebra: &Algebra<F>, reps: &[Module<F>]) -> Result<BasicEnd<F>> {
    let module = Module::direct_sum(algebra, reps)?;
    let (end, hom) = endomorphism_algebra(&module)?;
    let f = algebra.field();
    let mut idems = Vec::with_capacity(reps.len());
    let mut offset = 0;
    for r in reps {
        let mut e = Matrix::zeros(f, module.dim(), module.dim());
        for i in offset..offset + r.dim() {
            e.set(i, i, f.one());
        }
        offset += r.dim();
        idems.push(hom.coords(&e).ok_or(Error::NotAModuleMap)?);
    }
    let labels = (1..=reps.len()).map(|k| format!("P{k}")).collect();
    let algebra = end.with_idempotents(idems, labels)?;
    Ok(BasicEnd { algebra, module, hom, summands: reps.to_vec() })
}

/// Indecomposable summands of `M` up to isomorphism, with multiplicities.
pub fn summand_classes<F: Factor>(m: &Module<F>, rng: &mut dyn RngCore) -> Result<Vec<(Module<F>, usize)>> {
    let parts: Vec<Module<F>> = decompose(m, rng)?.into_iter().map(|s| s.module).collect();
    iso_classes(&parts)
}

impl<F: Field> Generator<F> {
    pub fn summand_count(&self) -> usize {
        self.summands.len()
    }

    pub fn representatives(&self) -> Vec<Module<F>> {
        self.summands.iter().map(|(m, _)| m.clone()).collect()
    }

    /// `Pi_{v,w}`.
    pub fn basic(&self) -> Result<BasicEnd<F>> {
        basic_endomorphism_algebra(self.module.algebra(), &self.representatives())
    }
}

impl<F: Factor> Preprojective<F> {
    /// Builds `P_{v,w}` and compares it with `t_w f_v(Pi)`.
    pub fn pvw(&self, v: &WeylElement, w: &WeylElement, rng: &mut dyn RngCore) -> Result<Generator<F>> {
        let reg = self.regular();
        let (torsion_part, torsion_inclusion) = self.torsion(w, &reg)?;
        let (module, projection) = self.torsion_free(v, &torsion_part)?;
        let (fv, _) = self.torsion_free(v, &reg)?;
        let (commuted, _) = self.torsion(w, &fv)?;
        let commutation_iso = find_isomorphism(&commuted, &module, rng)?;
        let summands = summand_classes(&module, rng)?;
        let same_additive_hull = commutation_iso.is_some() || {
            let other: Vec<_> = summand_classes(&commuted, rng)?.into_iter().map(|(m, _)| m).collect();
            let mine: Vec<_> = summands.iter().map(|(m, _)| m.clone()).collect();
            same_summands(&mine, &other)?
        };
        Ok(Generator {
            v: v.clone(),
            w: w.clone(),
            torsion_part,
            torsion_inclusion,
            module,
            projection,
            commuted,
            commutation_iso,
            same_additive_hull,
            summands,
        })
    }

    /// Whether `f_v t_w(Pi)` and `t_w f_v(Pi)` are isomorphic.
    pub fn commutes(&self, v: &WeylElement, w: &WeylElement, rng: &mut dyn RngCore) -> Result<bool> {
        let reg = self.regular();
        let (t, _) = self.torsion(w, &reg)?;
        let (ft, _) = self.torsion_free(v, &t)?;
        let (f, _) = self.torsion_free(v, &reg)?;
        let (tf, _) = self.torsion(w, &f)?;
        Ok(find_isomorphism(&ft, &tf, rng)?.is_some())
    }

    /// `Pi_{v,w}`, basic.
    pub fn pi_vw(&self, v: &WeylElement, w: &WeylElement, rng: &mut dyn RngCore) -> Result<Algebra<F>> {
        Ok(self.pvw(v, w, rng)?.basic()?.algebra)
    }

    /// `Pi_w = End(t_w Pi)`, basic.
    pub fn pi_w(&self, w: &WeylElement, rng: &mut dyn RngCore) -> Result<BasicEnd<F>> {
        let (t, _) = self.torsion(w, &self.regular())?;
        let reps: Vec<_> = summand_classes(&t, rng)?.into_iter().map(|(m, _)| m).collect();
        basic_endomorphism_algebra(self.algebra(), &reps)
    }

    /// `Pi^v = End(f_v Pi)`, basic.
    pub fn pi_upper_v(&self, v: &WeylElement, rng: &mut dyn RngCore) -> Result<BasicEnd<F>> {
        let (f, _) = self.torsion_free(v, &self.regular())?;
        let reps: Vec<_> = summand_classes(&f, rng)?.into_iter().map(|(m, _)| m).collect();
        basic_endomorphism_algebra(self.algebra(), &reps)
    }
}
