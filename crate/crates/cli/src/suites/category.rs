//! Suites on the category `C_{v,w}` itself: torsion pairs, projectives and
//! injectives, kernels and cokernels, kernels of the induced ring maps.

use anyhow::Result;

use super::{Assertion, Context, Suite, Tally};
use frobcat::homdim::random_module;
use frobcat::linalg::{Factor, Matrix};
use frobcat::modcat::{ext, hom_space, same_summands, Module, ModuleMap};
use frobcat::preproj::{injectives_of_c, is_member, kernel_cokernel_in_c, phi2, random_member, summand_classes, tau1};

/// Samples per pair for the Ext checks.
const EXT_SAMPLES: usize = 2;

/// Rank of `g -> post g pre` on the basis `maps`.
fn rank_of_composites<F: Factor>(maps: &[Matrix<F>], post: Option<&Matrix<F>>, pre: Option<&Matrix<F>>) -> usize {
    let cols: Vec<_> = maps
        .iter()
        .map(|g| {
            let left = post.map_or_else(|| g.clone(), |p| p.mul(g));
            pre.map_or(left.clone(), |q| left.mul(q)).into_data()
        })
        .collect();
    match cols.first() {
        Some(c) => Matrix::from_cols(maps[0].field(), c.len(), &cols).rank(),
        None => 0,
    }
}

pub struct Frobenius;

impl<F: Factor> Suite<F> for Frobenius {
    fn name(&self) -> &'static str {
        "frobenius"
    }

    fn claim(&self) -> &'static str {
        "C_{v,w} is Frobenius with proj = add f_v t_w(Pi) = add t_w f_v(Pi)"
    }

    fn run(&self, ctx: &Context<F>) -> Result<Vec<Assertion>> {
        let pairs = ctx.all_pairs()?;
        let pi = &ctx.pi;
        let rows = ctx.par_map(&pairs, |k, (v, w)| {
            let mut rng = ctx.rng(k);
            let gen = pi.pvw(v, w, &mut rng)?;
            let member = is_member(pi, v, w, &gen.module)?;
            let mut ext_zero = true;
            for _ in 0..EXT_SAMPLES {
                let x = random_member(pi, v, w, 1, 1, &mut rng)?;
                ext_zero &= ext(&gen.module, &x, 1)? == 0 && ext(&x, &gen.module, 1)? == 0;
            }
            Ok((gen.same_additive_hull, member, ext_zero))
        })?;
        let mut hull = Tally::new("add f_v t_w(Pi) = add t_w f_v(Pi)");
        let mut member = Tally::new("P_{v,w} lies in C_{v,w}");
        let mut proj_inj = Tally::new("Ext^1(P, X) = Ext^1(X, P) = 0 for sampled X in C_{v,w}");
        for (k, ((v, w), (h, m, e))) in pairs.iter().zip(rows).enumerate() {
            hull.check(h, ctx.case(v, w, None));
            member.check(m, ctx.case(v, w, None));
            proj_inj.check(e, ctx.case(v, w, Some(ctx.seed(k))));
        }
        Ok(vec![hull.finish(), member.finish(), proj_inj.finish()])
    }
}

pub struct EnoughInjectives;

impl<F: Factor> Suite<F> for EnoughInjectives {
    fn name(&self) -> &'static str {
        "enough-injectives"
    }

    fn claim(&self) -> &'static str {
        "the Ext-injectives of C_{v,w} are add t_w f_v(D Pi), they embed every object, and they agree with the projectives"
    }

    fn run(&self, ctx: &Context<F>) -> Result<Vec<Assertion>> {
        let pairs = ctx.all_pairs()?;
        let pi = &ctx.pi;
        let rows = ctx.par_map(&pairs, |k, (v, w)| {
            let mut rng = ctx.rng(k);
            let inj = injectives_of_c(pi, v, w)?;
            let member = is_member(pi, v, w, &inj)?;
            let mut ext_zero = true;
            let mut embeds = true;
            for _ in 0..EXT_SAMPLES {
                let x = random_member(pi, v, w, 1, 1, &mut rng)?;
                ext_zero &= ext(&x, &inj, 1)? == 0;
                // X -> I^n through a basis of Hom(X, I) is injective.
                let hs = hom_space(&x, &inj)?;
                let stacked = hs.basis().iter().fold(Matrix::zeros(x.field(), 0, x.dim()), |acc, g| acc.vstack(g));
                embeds &= stacked.rank() == x.dim();
            }
            let gen = pi.pvw(v, w, &mut rng)?;
            let classes: Vec<Module<F>> = summand_classes(&inj, &mut rng)?.into_iter().map(|(m, _)| m).collect();
            let frobenius = same_summands(&gen.representatives(), &classes)?;
            Ok((member, ext_zero, embeds, frobenius))
        })?;
        let mut member = Tally::new("t_w f_v(D Pi) lies in C_{v,w}");
        let mut ext_zero = Tally::new("Ext^1(X, t_w f_v(D Pi)) = 0 for sampled X in C_{v,w}");
        let mut embeds = Tally::new("sampled X embed into a sum of copies of t_w f_v(D Pi)");
        let mut frob = Tally::new("add P_{v,w} = add t_w f_v(D Pi)");
        for (k, ((v, w), (m, e, b, f))) in pairs.iter().zip(rows).enumerate() {
            member.check(m, ctx.case(v, w, None));
            ext_zero.check(e, ctx.case(v, w, Some(ctx.seed(k))));
            embeds.check(b, ctx.case(v, w, Some(ctx.seed(k))));
            frob.check(f, ctx.case(v, w, None));
        }
        Ok(vec![member.finish(), ext_zero.finish(), embeds.finish(), frob.finish()])
    }
}

pub struct Kernels;

/// Pairs sampled for the kernel checks.
const KERNEL_PAIRS: usize = 12;

impl<F: Factor> Suite<F> for Kernels {
    fn name(&self) -> &'static str {
        "kernels"
    }

    fn claim(&self) -> &'static str {
        "t_w(ker f) and f_v(coker f) are a kernel and a cokernel of f in C_{v,w}"
    }

    fn run(&self, ctx: &Context<F>) -> Result<Vec<Assertion>> {
        let pairs = ctx.sampled_pairs(KERNEL_PAIRS)?;
        let pi = &ctx.pi;
        let rows = ctx.par_map(&pairs, |k, (v, w)| {
            let mut rng = ctx.rng(k);
            let x = random_member(pi, v, w, 2, 1, &mut rng)?;
            let y = random_member(pi, v, w, 1, 1, &mut rng)?;
            let z = random_member(pi, v, w, 1, 0, &mut rng)?;
            let f = ModuleMap::new(&x, &y, hom_space(&x, &y)?.random(&mut rng))?;
            let kc = kernel_cokernel_in_c(pi, v, w, &f)?;
            let members = is_member(pi, v, w, &kc.kernel)? && is_member(pi, v, w, &kc.cokernel)?;
            let zero = f.matrix.mul(&kc.kernel_inclusion).is_zero() && kc.cokernel_projection.mul(&f.matrix).is_zero();
            // Hom(Z, K) = {g : Z -> X, f g = 0} and Hom(Q, Z) = {h : Y -> Z, h f = 0}.
            let zx = hom_space(&z, &x)?.basis();
            let zk = hom_space(&z, &kc.kernel)?.dim();
            let kernel_ok = zk == zx.len() - rank_of_composites(&zx, Some(&f.matrix), None)
                && rank_of_composites(&hom_space(&z, &kc.kernel)?.basis(), Some(&kc.kernel_inclusion), None) == zk;
            let yz = hom_space(&y, &z)?.basis();
            let qz = hom_space(&kc.cokernel, &z)?.dim();
            let cokernel_ok = qz == yz.len() - rank_of_composites(&yz, None, Some(&f.matrix))
                && rank_of_composites(&hom_space(&kc.cokernel, &z)?.basis(), None, Some(&kc.cokernel_projection)) == qz;
            Ok((members, zero, kernel_ok, cokernel_ok))
        })?;
        let mut members = Tally::new("kernel and cokernel lie in C_{v,w}");
        let mut zero = Tally::new("f composed with the kernel inclusion and cokernel projection vanishes");
        let mut kernel = Tally::new("Hom(Z, t_w ker f) = {g : Z -> X | f g = 0} for sampled Z");
        let mut cokernel = Tally::new("Hom(f_v coker f, Z) = {h : Y -> Z | h f = 0} for sampled Z");
        for (k, ((v, w), (m, z, a, b))) in pairs.iter().zip(rows).enumerate() {
            let case = ctx.case(v, w, Some(ctx.seed(k)));
            members.check(m, case.clone());
            zero.check(z, case.clone());
            kernel.check(a, case.clone());
            cokernel.check(b, case);
        }
        Ok(vec![members.finish(), zero.finish(), kernel.finish(), cokernel.finish()])
    }
}

pub struct FactoringKernels;

impl<F: Factor> Suite<F> for FactoringKernels {
    fn name(&self) -> &'static str {
        "factoring-kernels"
    }

    fn claim(&self) -> &'static str {
        "ker phi_2 consists of the maps factoring over t_v(t_w Pi) and ker tau_1 of those factoring over f_w(f_v Pi)"
    }

    fn run(&self, ctx: &Context<F>) -> Result<Vec<Assertion>> {
        let pairs = ctx.all_pairs()?;
        let pi = &ctx.pi;
        let rows = ctx.par_map(&pairs, |k, (v, w)| {
            let gen = pi.pvw(v, w, &mut ctx.rng(k))?;
            let p = phi2(pi, &gen)?.kernel_is_factoring();
            let t = match gen.commutation_iso {
                Some(_) => Some(tau1(pi, &gen)?.kernel_is_factoring()),
                None => None,
            };
            Ok((p, t))
        })?;
        let mut phi = Tally::new("ker phi_2 = maps factoring over t_v(t_w Pi)");
        let mut tau = Tally::new("ker tau_1 = maps factoring over f_w(f_v Pi)");
        let mut undefined = 0;
        for ((v, w), (p, t)) in pairs.iter().zip(rows) {
            phi.check(p, ctx.case(v, w, None));
            match t {
                Some(t) => tau.check(t, ctx.case(v, w, None)),
                None => undefined += 1,
            }
        }
        let tau = tau.detail(format!("{undefined} pairs skipped: tau_1 needs t_w f_v(Pi) isomorphic to P_{{v,w}}"));
        Ok(vec![phi.finish(), tau.finish()])
    }
}

pub struct Torsion;

impl<F: Factor> Suite<F> for Torsion {
    fn name(&self) -> &'static str {
        "torsion"
    }

    fn claim(&self) -> &'static str {
        "I_w is independent of the reduced word and idempotent, and (Fac I, I^perp) is a torsion pair with radical I M"
    }

    fn run(&self, ctx: &Context<F>) -> Result<Vec<Assertion>> {
        let pi = &ctx.pi;
        let elements = ctx.elements()?;
        let mut words = Tally::new("I_w does not depend on the reduced word");
        let mut idem = Tally::new("I_w is idempotent");
        for x in &elements {
            words.check(pi.ideal_word_independent(x, 64)?, ctx.element_case(x, None));
            let i = pi.ideal(x)?;
            idem.check(i.product(&i)? == i, ctx.element_case(x, None));
        }
        let a = pi.algebra();
        let mut modules: Vec<(Option<u64>, Module<F>)> = Vec::new();
        if pi.dynkin_type().rank() <= 2 {
            for j in 0..pi.dynkin_type().rank() {
                modules.push((None, Module::projective(a, j)));
                modules.push((None, Module::simple(a, j)));
            }
        }
        let samples = if pi.dynkin_type().rank() <= 2 { 12 } else { 50 };
        for k in 0..samples {
            let mut rng = ctx.rng(k);
            modules.push((Some(ctx.seed(k)), random_module(a, 1 + k % 2, 1 + k % 3, &mut rng)?));
        }
        let checks = ctx.par_map(&elements, |_, u| {
            modules
                .iter()
                .zip(modules.iter().rev())
                .map(|((_, m), (_, n))| Ok(pi.check_torsion_pair(u, m, n)?))
                .collect::<Result<Vec<_>>>()
        })?;
        let mut axioms = Tally::new(
            "torsion-pair axioms for the trace radical: classes, exactness, t t = t, t f = 0, Hom(t M, f N) = 0",
        );
        let mut image = Tally::new("t_w(M) = I_w M equals the trace of I_w in M");
        for (u, row) in elements.iter().zip(checks) {
            let case = |k: usize| ctx.element_case(u, modules[k].0);
            for (k, c) in row.iter().enumerate() {
                axioms.check(c.axioms_hold(), case(k));
                image.check(c.ideal_image_is_trace, case(k));
            }
        }
        let axioms = axioms.detail(format!("{} modules per label", modules.len()));
        Ok(vec![words.finish(), idem.finish(), axioms.finish(), image.finish()])
    }
}
