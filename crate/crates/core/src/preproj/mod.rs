//! Preprojective algebras of Dynkin quivers, their torsion ideals and the
//! functors `t_u`, `f_u`.
//!
//! Edge `k = (i, j)` with `i < j` gives arrows `2k: i -> j` and `2k + 1: j -> i`.
//! The relation at `v` is the sum over edges of `a a* - a* a` with signs by
//! orientation. Paths are stored in traversal order, so `a a*` is `[a*, a]`.

mod category;
mod generator;
mod induced;
mod u2;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::algebra::{
    ideal_product, path_algebra_mod_relations, quotient_algebra, Algebra, Arrow, Ideal, PathQuotient, Quiver, Relation,
    DEFAULT_DEGREE_CAP,
};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Subspace};
use crate::modcat::{hom_space, trace_radical, Module};
use crate::weyl::{DynkinType, WeylElement, WeylGroup};

pub use category::{duality_phi, injectives_of_c, is_member, kernel_cokernel_in_c, random_member, KernelCokernel};
pub use generator::{basic_endomorphism_algebra, summand_classes, BasicEnd, Generator};
pub use induced::{induced_maps, phi2, tau1, InducedMap, InducedMaps};
pub use u2::{u2_counterexample, upper_triangular, U2Counterexample};

/// `Pi(Q)` with its Weyl group and a cache of torsion ideals.
pub struct Preprojective<F: Field> {
    ty: DynkinType,
    group: WeylGroup,
    w0: WeylElement,
    quotient: PathQuotient<F>,
    psi: Matrix<F>,
    opposite: Algebra<F>,
    simple_ideals: Vec<Ideal<F>>,
    ideals: Mutex<HashMap<WeylElement, Ideal<F>>>,
    ideal_modules: Mutex<HashMap<WeylElement, Module<F>>>,
}

impl<F: Field> std::fmt::Debug for Preprojective<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Preprojective").field("type", &self.ty).field("dim", &self.algebra().dim()).finish()
    }
}

/// The starred partner of an arrow.
pub fn star(arrow: usize) -> usize {
    arrow ^ 1
}

/// Doubled quiver of the Dynkin diagram and the relation at each vertex.
fn doubled_quiver<F: Field>(f: &F, ty: DynkinType) -> (Quiver, Vec<Relation<F>>) {
    let n = ty.rank();
    let mut arrows = Vec::new();
    let mut rels: Vec<Relation<F>> = vec![Vec::new(); n];
    for (k, (i, j)) in ty.edges().into_iter().enumerate() {
        let (i, j) = (i - 1, j - 1);
        arrows.push(Arrow { source: i, target: j, label: format!("a{}", k + 1) });
        arrows.push(Arrow { source: j, target: i, label: format!("a{}*", k + 1) });
        let (a, s) = (2 * k, 2 * k + 1);
        rels[j].push((f.one(), vec![s, a]));
        rels[i].push((f.neg(&f.one()), vec![a, s]));
    }
    (Quiver::new(n, arrows), rels)
}

impl<F: Field> Preprojective<F> {
    pub fn new(ty: DynkinType, field: &F) -> Result<Self> {
        let (quiver, rels) = doubled_quiver(field, ty);
        let nonempty: Vec<_> = rels.iter().filter(|r| !r.is_empty()).cloned().collect();
        let quotient = path_algebra_mod_relations(field, &quiver, &nonempty, DEFAULT_DEGREE_CAP)?;
        for r in &rels {
            if !r.is_empty() && quotient.combination(r).iter().any(|x| !field.is_zero(x)) {
                return Err(Error::InvalidAlgebra("vertex relation does not vanish".into()));
            }
        }
        let a = quotient.algebra().clone();
        let psi = build_psi(&quotient)?;
        let opposite = a.opposite();
        let simple_ideals = a
            .idempotents()
            .iter()
            .map(|e| {
                let mut comp = a.unit().to_vec();
                for (c, x) in comp.iter_mut().zip(e) {
                    *c = field.sub(c, x);
                }
                a.ideal_generated(&[comp])
            })
            .collect();
        let group = WeylGroup::new(ty);
        let w0 = group.longest();
        Ok(Preprojective {
            ty,
            group,
            w0,
            quotient,
            psi,
            opposite,
            simple_ideals,
            ideals: Mutex::new(HashMap::new()),
            ideal_modules: Mutex::new(HashMap::new()),
        })
    }

    pub fn shared(ty: DynkinType, field: &F) -> Result<Arc<Self>> {
        Ok(Arc::new(Self::new(ty, field)?))
    }

    pub fn dynkin_type(&self) -> DynkinType {
        self.ty
    }

    pub fn algebra(&self) -> &Algebra<F> {
        self.quotient.algebra()
    }

    pub fn field(&self) -> &F {
        self.algebra().field()
    }

    pub fn path_quotient(&self) -> &PathQuotient<F> {
        &self.quotient
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn longest(&self) -> &WeylElement {
        &self.w0
    }

    pub fn opposite(&self) -> &Algebra<F> {
        &self.opposite
    }

    pub fn regular(&self) -> Module<F> {
        Module::regular(self.algebra())
    }

    /// Matrix of the anti-involution `psi`.
    pub fn psi_matrix(&self) -> &Matrix<F> {
        &self.psi
    }

    pub fn psi(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        self.psi.mul_vec(x)
    }

    /// `Pi (1 - e_i) Pi` for the 1-based vertex `i`.
    pub fn simple_ideal(&self, i: usize) -> &Ideal<F> {
        &self.simple_ideals[i - 1]
    }

    /// Product `I_{i_1} ... I_{i_k}` along a word.
    pub fn word_ideal(&self, word: &[usize]) -> Result<Ideal<F>> {
        let mut acc = self.algebra().whole();
        for &i in word {
            acc = ideal_product(&acc, self.simple_ideal(i))?;
        }
        Ok(acc)
    }

    /// `I_x` along the reduced word of `x`; `I_e = Pi`. Cached.
    pub fn ideal(&self, x: &WeylElement) -> Result<Ideal<F>> {
        if let Some(i) = self.ideals.lock().expect("ideal cache").get(x) {
            return Ok(i.clone());
        }
        let ideal = self.word_ideal(&self.group.reduced_word(x))?;
        self.ideals.lock().expect("ideal cache").insert(x.clone(), ideal.clone());
        Ok(ideal)
    }

    /// The index of the ideal cutting out the torsion pair labelled `u`.
    ///
    /// Pinned convention: the pair labelled `u` is `(Fac I, I^perp)` with
    /// `I = I_{u^-1 w0}`, so `u = e` gives `(0, mod Pi)` and `u = w0` gives
    /// `(mod Pi, 0)`. This is the only place the labelling enters.
    pub fn ideal_index(&self, u: &WeylElement) -> Result<WeylElement> {
        self.group.mul(&self.group.inverse(u), &self.w0)
    }

    /// The ideal of the torsion pair labelled `u`.
    pub fn class_ideal(&self, u: &WeylElement) -> Result<Ideal<F>> {
        self.ideal(&self.ideal_index(u)?)
    }

    /// `I_x` as a left submodule of `Pi`. Cached.
    pub fn ideal_module(&self, x: &WeylElement) -> Result<Module<F>> {
        if let Some(m) = self.ideal_modules.lock().expect("module cache").get(x) {
            return Ok(m.clone());
        }
        let reg = self.regular();
        let m = reg.submodule_unchecked(self.ideal(x)?.carrier()).0;
        self.ideal_modules.lock().expect("module cache").insert(x.clone(), m.clone());
        Ok(m)
    }

    /// The torsion submodule of `M` for the pair labelled `u`: the trace of
    /// `I` in `M`. It contains `I M`, with equality when `I` is idempotent.
    pub fn torsion_subspace(&self, u: &WeylElement, m: &Module<F>) -> Result<Subspace<F>> {
        let gen = self.ideal_module(&self.ideal_index(u)?)?;
        if gen.is_zero() {
            return Ok(Subspace::zero(self.field(), m.dim()));
        }
        trace_radical(&[gen], m)
    }

    /// `t_u(M)` as a submodule, with its inclusion.
    pub fn torsion(&self, u: &WeylElement, m: &Module<F>) -> Result<(Module<F>, Matrix<F>)> {
        let sub = self.torsion_subspace(u, m)?;
        Ok(m.submodule_unchecked(&sub))
    }

    /// `f_u(M) = M / t_u(M)`, with the projection.
    pub fn torsion_free(&self, u: &WeylElement, m: &Module<F>) -> Result<(Module<F>, Matrix<F>)> {
        let sub = self.torsion_subspace(u, m)?;
        Ok(m.quotient_unchecked(&sub))
    }

    /// `(t_u M, f_u M)` together with the inclusion and projection.
    pub fn torsion_apply(&self, u: &WeylElement, m: &Module<F>) -> Result<TorsionParts<F>> {
        let sub = self.torsion_subspace(u, m)?;
        let (t, inclusion) = m.submodule_unchecked(&sub);
        let (f, projection) = m.quotient_unchecked(&sub);
        Ok(TorsionParts { t, inclusion, f, projection })
    }

    /// Whether `X` lies in `Fac(I)`.
    pub fn in_torsion_class(&self, u: &WeylElement, x: &Module<F>) -> Result<bool> {
        Ok(self.torsion_subspace(u, x)?.dim() == x.dim())
    }

    /// Whether `Hom(I, Y) = 0`.
    pub fn in_torsion_free_class(&self, u: &WeylElement, y: &Module<F>) -> Result<bool> {
        Ok(self.torsion_subspace(u, y)?.is_zero())
    }

    /// Whether the torsion class labelled `v` sits inside the one labelled
    /// `w`, tested on the generator `I` of the first class.
    pub fn class_contained(&self, v: &WeylElement, w: &WeylElement) -> Result<bool> {
        let gen = self.ideal_module(&self.ideal_index(v)?)?;
        self.in_torsion_class(w, &gen)
    }

    /// The torsion-pair axioms for the pair labelled `u`, on `M` and with
    /// `N` as a test object for `Hom(t M, f N) = 0`.
    pub fn check_torsion_pair(&self, u: &WeylElement, m: &Module<F>, n: &Module<F>) -> Result<TorsionCheck> {
        let parts = self.torsion_apply(u, m)?;
        let (fn_, _) = self.torsion_free(u, n)?;
        let ideal = self.class_ideal(u)?;
        let image = m.ideal_image(ideal.carrier());
        let trace = self.torsion_subspace(u, m)?;
        let idempotent = ideal.product(&ideal)? == ideal;
        Ok(TorsionCheck {
            classes: self.in_torsion_class(u, &parts.t)? && self.in_torsion_free_class(u, &parts.f)?,
            exact: parts.t.dim() + parts.f.dim() == m.dim()
                && parts.projection.mul(&parts.inclusion).is_zero()
                && parts.inclusion.rank() == parts.t.dim()
                && parts.projection.rank() == parts.f.dim(),
            radical_idempotent: self.torsion(u, &parts.t)?.0.dim() == parts.t.dim()
                && self.torsion(u, &parts.f)?.0.is_zero(),
            hom_vanishes: hom_space(&parts.t, &fn_)?.is_zero(),
            ideal_image_inside: image.is_subspace_of(&trace),
            ideal_image_is_trace: image == trace,
            ideal_idempotent: idempotent,
        })
    }

    /// `Lambda_x = Pi / I_x` with the literal ideal `I_x`.
    pub fn lambda(&self, x: &WeylElement) -> Result<Algebra<F>> {
        Ok(quotient_algebra(self.algebra(), &self.ideal(x)?)?.0)
    }

    /// Every reduced word of `x`, capped at `limit` words.
    pub fn reduced_words(&self, x: &WeylElement, limit: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.collect_words(x, &mut Vec::new(), &mut out, limit);
        out
    }

    fn collect_words(&self, x: &WeylElement, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        let len = self.group.length(x);
        if len == 0 {
            out.push(prefix.clone());
            return;
        }
        for i in 1..=self.group.rank() {
            let s = self.group.simple(i).expect("valid index");
            let next = s.mul(x).expect("same type");
            if self.group.length(&next) < len {
                prefix.push(i);
                self.collect_words(&next, prefix, out, limit);
                prefix.pop();
            }
        }
    }

    /// Cross-checks the ideal of `x` along up to `limit` reduced words.
    pub fn ideal_word_independent(&self, x: &WeylElement, limit: usize) -> Result<bool> {
        let reference = self.ideal(x)?;
        for w in self.reduced_words(x, limit) {
            if self.word_ideal(&w)?.carrier() != reference.carrier() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `D(Pi)` as a left module.
    pub fn dual_regular(&self) -> Result<Module<F>> {
        self.dual_of_quotient(&self.algebra().zero_ideal())
    }

    /// `D(Lambda)` for `Lambda = Pi / J` viewed as a right module, made a
    /// left `Pi`-module: `b` acts by the transpose of right multiplication.
    pub fn dual_of_quotient(&self, j: &Ideal<F>) -> Result<Module<F>> {
        let (lam, proj) = quotient_algebra(self.algebra(), j)?;
        let action = (0..self.algebra().dim()).map(|i| lam.right_matrix(&proj.col(i)).transpose()).collect();
        Module::new(self.algebra(), action)
    }

    /// `Phi(M)`: `b` acts by the transpose of the action of `psi(b)`.
    pub fn phi(&self, m: &Module<F>) -> Result<Module<F>> {
        self.algebra().check_same(m.algebra())?;
        let action = (0..self.algebra().dim()).map(|i| m.act(&self.psi.col(i)).transpose()).collect();
        Ok(Module::new(self.algebra(), action).expect("psi is an anti-automorphism"))
    }

    /// Modules over the quotient `Pi / I_x` pulled back along the projection.
    pub fn inflate(&self, lam: &Algebra<F>, proj: &Matrix<F>, m: &Module<F>) -> Result<Module<F>> {
        lam.check_same(m.algebra())?;
        Ok(m.restrict(self.algebra(), proj))
    }

    /// `e_i` for the 1-based vertex `i`.
    pub fn vertex(&self, i: usize) -> Vec<F::Elem> {
        self.quotient.vertex_element(i - 1)
    }

    pub fn subspace_of(&self, vecs: &[Vec<F::Elem>]) -> Subspace<F> {
        Subspace::span(self.field(), self.algebra().dim(), vecs)
    }
}

/// Outcome of [`Preprojective::check_torsion_pair`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionCheck {
    /// `t M` in the torsion class and `f M` in the torsion-free class.
    pub classes: bool,
    /// `0 -> t M -> M -> f M -> 0` is exact.
    pub exact: bool,
    /// `t t M = t M` and `t f M = 0`.
    pub radical_idempotent: bool,
    /// `Hom(t M, f N) = 0`.
    pub hom_vanishes: bool,
    /// `I M` lies in the trace of `I`.
    pub ideal_image_inside: bool,
    /// `I M` equals the trace of `I`; expected exactly when `I^2 = I`.
    pub ideal_image_is_trace: bool,
    pub ideal_idempotent: bool,
}

impl TorsionCheck {
    /// Every axiom, with `I M = t M` required only for idempotent `I`.
    pub fn axioms_hold(&self) -> bool {
        self.classes
            && self.exact
            && self.radical_idempotent
            && self.hom_vanishes
            && self.ideal_image_inside
            && (!self.ideal_idempotent || self.ideal_image_is_trace)
    }
}

/// Result of [`Preprojective::torsion_apply`].
#[derive(Clone, Debug)]
pub struct TorsionParts<F: Field> {
    pub t: Module<F>,
    pub inclusion: Matrix<F>,
    pub f: Module<F>,
    pub projection: Matrix<F>,
}

/// Reverses paths and swaps each arrow with its partner; no signs are
/// needed with the relation above, and the result is checked.
fn build_psi<F: Field>(q: &PathQuotient<F>) -> Result<Matrix<F>> {
    let a = q.algebra();
    let f = a.field();
    let d = a.dim();
    let cols: Vec<Vec<F::Elem>> = q
        .basis_paths()
        .iter()
        .map(|(start, path)| {
            if path.is_empty() {
                return q.vertex_element(*start);
            }
            let end = q.quiver().endpoints(path).expect("basis path composes").1;
            let rev: Vec<usize> = path.iter().rev().map(|&x| star(x)).collect();
            q.path_element(end, &rev)
        })
        .collect();
    let psi = Matrix::from_cols(f, d, &cols);
    if !psi.mul(&psi).is_identity() {
        return Err(Error::AntiInvolution);
    }
    for i in 0..d {
        for j in 0..d {
            let lhs = psi.mul_vec(a.basis_product(i, j));
            let rhs = a.mul(&psi.col(j), &psi.col(i));
            if lhs != rhs {
                return Err(Error::AntiInvolution);
            }
        }
    }
    Ok(psi)
}
