//! Suites for the duality, the commutativity of torsion radicals, the
//! quotients `Pi / I_w` and the rank-four example.

use anyhow::Result;

use super::{Assertion, Context, Suite, Tally};
use frobcat::homdim::{dimension_report, fingerprint};
use frobcat::linalg::Factor;
use frobcat::modcat::{is_isomorphic, HomDim, Module, DEFAULT_CUTOFF};
use frobcat::preproj::{basic_endomorphism_algebra, phi2, u2_counterexample, Preprojective};
use frobcat::weyl::DynkinType;

pub struct Duality;

impl<F: Factor> Suite<F> for Duality {
    fn name(&self) -> &'static str {
        "duality"
    }

    fn claim(&self) -> &'static str {
        "Phi = psi_* D sends P_{v,w} to P_{w0^-1 w, w0 v}, so Pi_{v,w} is anti-isomorphic to Pi_{w0^-1 w, w0 v}"
    }

    fn run(&self, ctx: &Context<F>) -> Result<Vec<Assertion>> {
        let pi = &ctx.pi;
        let g = ctx.group();
        let w0 = g.longest();
        let pairs = ctx.all_pairs()?;
        let rows = ctx.par_map(&pairs, |k, (v, w)| {
            let mut rng = ctx.rng(k);
            let v2 = g.mul(&g.inverse(&w0), w)?;
            let w2 = g.mul(&w0, v)?;
            let gen = pi.pvw(v, w, &mut rng)?;
            let other = pi.pvw(&v2, &w2, &mut rng)?;
            let dual = pi.phi(&gen.module)?;
            let stated = is_isomorphic(&dual, &other.module, &mut rng)?;
            let swapped = is_isomorphic(&dual, &other.commuted, &mut rng)?;
            let ring = gen.basic()?.algebra;
            let other_ring = other.basic()?.algebra;
            let anti = fingerprint(&ring)? == fingerprint(&other_ring.opposite())?;
            Ok((stated, swapped, anti))
        })?;
        let mut stated = Tally::new("Phi(f_v t_w Pi) = f_{w0 v} t_{w0^-1 w} Pi");
        let mut swapped = Tally::new("Phi(f_v t_w Pi) = t_{w0^-1 w} f_{w0 v} Pi");
        let mut anti = Tally::new("fingerprint(Pi_{v,w}) = fingerprint(Pi_{w0^-1 w, w0 v}^op)");
        for ((v, w), (a, b, c)) in pairs.iter().zip(rows) {
            stated.check(a, ctx.case(v, w, None));
            swapped.check(b, ctx.case(v, w, None));
            anti.check(c, ctx.case(v, w, None));
        }
        Ok(vec![stated.finish(), swapped.finish(), anti.finish()])
    }
}

pub struct Commutativity;

impl<F: Factor> Suite<F> for Commutativity {
    fn name(&self) -> &'static str {
        "commutativity"
    }

    fn claim(&self) -> &'static str {
        "f_v t_w(Pi) is isomorphic to t_w f_v(Pi) for every pair"
    }

    fn run(&self, ctx: &Context<F>) -> Result<Vec<Assertion>> {
        let pairs = ctx.all_pairs()?;
        let rows = ctx.par_map(&pairs, |k, (v, w)| {
            let gen = ctx.pi.pvw(v, w, &mut ctx.rng(k))?;
            Ok((gen.commutation_iso.is_some(), gen.same_additive_hull))
        })?;
        let mut iso = Tally::new("f_v t_w(Pi) = t_w f_v(Pi)");
        let mut hull = Tally::new("add f_v t_w(Pi) = add t_w f_v(Pi)");
        for ((v, w), (a, b)) in pairs.iter().zip(rows) {
            iso.check(a, ctx.case(v, w, None));
            hull.check(b, ctx.case(v, w, None));
        }
        Ok(vec![iso.finish(), hull.finish()])
    }
}

pub struct U2Counterexample;

impl<F: Factor> Suite<F> for U2Counterexample {
    fn name(&self) -> &'static str {
        "u2-counterexample"
    }

    fn claim(&self) -> &'static str {
        "over the path algebra of 1 -> 2 two torsion radicals fail to commute"
    }

    fn run(&self, ctx: &Context<F>) -> Result<Vec<Assertion>> {
        let found = u2_counterexample(ctx.pi.field(), &mut ctx.rng(0))?;
        let mut t = Tally::new("a torsion class pair and a module with f_1 t_2 M not isomorphic to t_2 f_1 M");
        t.check(found.is_some(), super::Case { at: "upper triangular 2x2".into(), seed: Some(ctx.seed(0)) });
        let t = match &found {
            Some(c) => t.detail(format!(
                "{} torsion classes; f from {:?}, t from {:?}, M = {}, dims {} vs {}",
                c.torsion_classes.len(),
                c.first,
                c.second,
                c.module,
                c.dims.0,
                c.dims.1
            )),
            None => t,
        };
        Ok(vec![t.finish()])
    }
}

pub struct Birs;

impl<F: Factor> Suite<F> for Birs {
    fn name(&self) -> &'static str {
        "birs"
    }

    fn claim(&self) -> &'static str {
        "Lambda_w = Pi / I_w agrees with Pi^{w0 w^-1} and Pi_{w^-1}^op (fingerprint level, rings End_A(A) = A)"
    }

    fn run(&self, ctx: &Context<F>) -> Result<Vec<Assertion>> {
        let pi = &ctx.pi;
        let g = ctx.group();
        let w0 = g.longest();
        let elements: Vec<_> = ctx.elements()?.into_iter().filter(|x| !x.is_identity()).collect();
        // Endomorphism rings here multiply by composition, End_A(A) = A^op,
        // so each ring below carries one op fewer than in the other convention.
        let rows = ctx.par_map(&elements, |k, w| {
            let mut rng = ctx.rng(k);
            let wi = g.inverse(w);
            let lam = fingerprint(&pi.lambda(w)?)?;
            let upper = pi.pi_upper_v(&g.mul(&w0, &wi)?, &mut rng)?.algebra;
            let lower = pi.pi_w(&wi, &mut rng)?.algebra;
            Ok((lam == fingerprint(&upper.opposite())?, lam == fingerprint(&lower)?))
        })?;
        let mut upper = Tally::new("fingerprint(Lambda_w) = fingerprint(Pi^{w0 w^-1})");
        let mut lower = Tally::new("fingerprint(Lambda_w) = fingerprint(Pi_{w^-1}^op)");
        for (w, (a, b)) in elements.iter().zip(rows) {
            upper.check(a, ctx.element_case(w, None));
            lower.check(b, ctx.element_case(w, None));
        }
        Ok(vec![upper.finish(), lower.finish()])
    }
}

/// `End(P1 + P2 + S1 + S2)` over `Pi(A2)`.
pub fn auslander_algebra_a2<F: Factor>(f: &F) -> Result<frobcat::algebra::Algebra<F>> {
    let p = Preprojective::new(DynkinType::A(2), f)?;
    let a = p.algebra();
    let reps = [Module::projective(a, 0), Module::projective(a, 1), Module::simple(a, 0), Module::simple(a, 1)];
    Ok(basic_endomorphism_algebra(a, &reps)?.algebra)
}

pub struct RankFourExample;

impl<F: Factor> Suite<F> for RankFourExample {
    fn name(&self) -> &'static str {
        "example-leclerc"
    }

    fn claim(&self) -> &'static str {
        "type A3, v = s2, w = s1 s3 s2 s1 s3: four summands, phi_2 injective with one-dimensional cokernel, Pi_{v,w} the Auslander algebra of Pi(A2)"
    }

    fn run(&self, ctx: &Context<F>) -> Result<Vec<Assertion>> {
        let f = ctx.pi.field();
        let pi = Preprojective::new(DynkinType::A(3), f)?;
        let g = pi.group();
        let v = g.element_from_word(&[2])?;
        let w = g.element_from_word(&[1, 3, 2, 1, 3])?;
        let gen = pi.pvw(&v, &w, &mut ctx.rng(0))?;
        let map = phi2(&pi, &gen)?;
        let ring = gen.basic()?.algebra;
        let report = dimension_report(&ring, DEFAULT_CUTOFF)?;
        let aus = auslander_algebra_a2(f)?;
        let case = || super::Case { at: "v=2 w=1,3,2,1,3".into(), seed: None };
        let single = |name: &str, ok: bool, detail: String| {
            let mut t = Tally::new(name);
            t.check(ok, case());
            t.detail(detail).finish()
        };
        let mults: Vec<usize> = gen.summands.iter().map(|s| s.1).collect();
        Ok(vec![
            single(
                "P_{v,w} has 4 pairwise non-isomorphic indecomposable summands",
                gen.summand_count() == 4,
                format!("dim P = {}, multiplicities {:?}", gen.module.dim(), mults),
            ),
            single("phi_2 is injective", map.is_injective(), format!("{} -> {}", map.source_dim, map.target_dim)),
            single("coker phi_2 is one-dimensional", map.coker_dim() == 1, format!("coker dim {}", map.coker_dim())),
            single(
                "gldim Pi_{v,w} = virdim Pi_{v,w} = 2",
                report.gldim == HomDim::Finite(2) && report.virtual_dimension().ok() == Some(2),
                format!("gldim {}, injdim {} / {}", report.gldim, report.left_injdim, report.right_injdim),
            ),
            single(
                "fingerprint(Pi_{v,w}) = fingerprint(Auslander algebra of Pi(A2))",
                fingerprint(&ring)? == fingerprint(&aus)?,
                format!("{:?}", fingerprint(&ring)?),
            ),
        ])
    }
}
