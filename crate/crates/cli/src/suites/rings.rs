//! Suites on the rings `Pi_{v,w}`, `Pi_w`, `Pi^v` and the maps between them.

use anyhow::Result;

use super::{Assertion, Context, Suite, Tally};
use frobcat::homdim::{
    dimension_report, fingerprint, gp_equivalence_check, gp_membership, random_module, virtual_dimension,
};
use frobcat::linalg::Factor;
use frobcat::modcat::syzygy;
use frobcat::preproj::{phi2, tau1};
use frobcat::weyl::WeylElement;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Pairs for the sampled suites, the rank-four pair included.
const SAMPLED_PAIRS: usize = 6;
/// Objects or modules drawn per pair.
const SAMPLES_PER_PAIR: usize = 20;

pub struct GpEquivalence;

impl<F: Factor> Suite<F> for GpEquivalence {
    fn name(&self) -> &'static str {
        "gp-equivalence"
    }

    fn claim(&self) -> &'static str {
        "Hom(P_{v,w}, -) is an exact equivalence from C_{v,w} onto GP(Pi_{v,w})"
    }

    fn run(&self, ctx: &Context<F>) -> Result<Vec<Assertion>> {
        let pairs = ctx.sampled_pairs(SAMPLED_PAIRS)?;
        let reports =
            ctx.par_map(&pairs, |k, (v, w)| Ok(gp_equivalence_check(&ctx.pi, v, w, SAMPLES_PER_PAIR, ctx.seed(k))?))?;
        let mut gp = Tally::new("Hom(P, X) is Gorenstein projective");
        let mut hom = Tally::new("Hom(P, -) is bijective on Hom(X, Y)");
        let mut exact = Tally::new("Hom(P, -) keeps short exact sequences of C_{v,w} exact");
        let mut nontrivial = 0;
        for ((v, w), r) in pairs.iter().zip(&reports) {
            record(&mut gp, ctx, v, w, r.samples, &r.gp_failures);
            record(&mut hom, ctx, v, w, r.samples, &r.hom_failures);
            record(&mut exact, ctx, v, w, r.samples, &r.exact_failures);
            nontrivial += r.nontrivial_sequences;
        }
        let exact = exact.detail(format!("{nontrivial} sequences with both end terms nonzero"));
        Ok(vec![gp.finish(), hom.finish(), exact.finish()])
    }
}

/// Counts `samples` cases for one pair, failing the listed seeds.
fn record<F: Factor>(
    t: &mut Tally,
    ctx: &Context<F>,
    v: &WeylElement,
    w: &WeylElement,
    samples: usize,
    failed: &[u64],
) {
    for _ in failed.len()..samples {
        t.check(true, ctx.case(v, w, None));
    }
    for &s in failed {
        t.check(false, ctx.case(v, w, Some(s)));
    }
}

pub struct SecondSyzygies;

impl<F: Factor> Suite<F> for SecondSyzygies {
    fn name(&self) -> &'static str {
        "second-syzygies"
    }

    fn claim(&self) -> &'static str {
        "second syzygies of finite dimensional Pi_{v,w}-modules are Gorenstein projective"
    }

    fn run(&self, ctx: &Context<F>) -> Result<Vec<Assertion>> {
        let pairs = ctx.sampled_pairs(SAMPLED_PAIRS)?;
        let pi = &ctx.pi;
        let rows = ctx.par_map(&pairs, |k, (v, w)| {
            let mut rng = ctx.rng(k);
            let ring = pi.pi_vw(v, w, &mut rng)?;
            let d = virtual_dimension(&ring, ctx.cfg.cutoff)?;
            let mut failed = Vec::new();
            for j in 0..SAMPLES_PER_PAIR {
                let seed = frobcat::homdim::sample_seed(ctx.seed(k), j);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let m = random_module(&ring, 1 + j % 2, j % 3, &mut rng)?;
                if !gp_membership(&syzygy(&m, 2)?, d)? {
                    failed.push(seed);
                }
            }
            Ok(failed)
        })?;
        let mut t = Tally::new("Omega^2 M lies in GP(Pi_{v,w}) for seeded M");
        for ((v, w), failed) in pairs.iter().zip(rows) {
            record(&mut t, ctx, v, w, SAMPLES_PER_PAIR, &failed);
        }
        Ok(vec![t.finish()])
    }
}

pub struct RingMaps;

impl<F: Factor> Suite<F> for RingMaps {
    fn name(&self) -> &'static str {
        "ring-maps"
    }

    fn claim(&self) -> &'static str {
        "f_v and t_w induce ring maps Pi_w -> Pi_{v,w} and Pi^v -> Pi_{v,w}, surjective when C_v is inside C_w, which is condition (P)"
    }

    fn run(&self, ctx: &Context<F>) -> Result<Vec<Assertion>> {
        let pairs = ctx.all_pairs()?;
        let pi = &ctx.pi;
        let g = ctx.group();
        let rows = ctx.par_map(&pairs, |k, (v, w)| {
            let gen = pi.pvw(v, w, &mut ctx.rng(k))?;
            let p = phi2(pi, &gen)?;
            let t = match gen.commutation_iso {
                Some(_) => Some(tau1(pi, &gen)?),
                None => None,
            };
            let cond = g.condition_p(v, w)?;
            Ok((
                p.is_algebra_map(),
                t.as_ref().map(|t| t.is_algebra_map()),
                cond == pi.class_contained(v, w)?,
                cond,
                p.is_surjective(),
                t.as_ref().map(|t| t.is_surjective()),
            ))
        })?;
        let mut phi_alg = Tally::new("phi_2 is a unital ring map");
        let mut tau_alg = Tally::new("tau_1 is a unital ring map");
        let mut contain = Tally::new("C_v inside C_w exactly under condition (P)");
        let mut phi_onto = Tally::new("phi_2 is surjective under condition (P)");
        let mut tau_onto = Tally::new("tau_1 is surjective under condition (P)");
        let mut undefined = 0;
        for ((v, w), (pa, ta, c, cond, ps, ts)) in pairs.iter().zip(rows) {
            let case = ctx.case(v, w, None);
            phi_alg.check(pa, case.clone());
            contain.check(c, case.clone());
            match ta {
                Some(ta) => tau_alg.check(ta, case.clone()),
                None => undefined += 1,
            }
            if cond {
                phi_onto.check(ps, case.clone());
                tau_onto.check(ts == Some(true), case);
            }
        }
        let tau_alg =
            tau_alg.detail(format!("{undefined} pairs skipped: tau_1 needs t_w f_v(Pi) isomorphic to P_{{v,w}}"));
        Ok(vec![phi_alg.finish(), tau_alg.finish(), contain.finish(), phi_onto.finish(), tau_onto.finish()])
    }
}

pub struct Morita;

impl<F: Factor> Suite<F> for Morita {
    fn name(&self) -> &'static str {
        "morita"
    }

    fn claim(&self) -> &'static str {
        "under condition (P), w = v'v, Pi_{v,w} is Morita equivalent to Pi_{v'} (fingerprint level) and has virtual dimension at most 1"
    }

    fn run(&self, ctx: &Context<F>) -> Result<Vec<Assertion>> {
        let g = ctx.group();
        let pairs: Vec<_> =
            ctx.all_pairs()?.into_iter().filter(|(v, w)| g.condition_p(v, w).unwrap_or(false)).collect();
        let pi = &ctx.pi;
        let rows = ctx.par_map(&pairs, |k, (v, w)| {
            let mut rng = ctx.rng(k);
            let a = pi.pi_vw(v, w, &mut rng)?;
            let b = pi.pi_w(&g.left_cofactor(v, w)?, &mut rng)?.algebra;
            let da = virtual_dimension(&a, ctx.cfg.cutoff)?;
            let db = virtual_dimension(&b, ctx.cfg.cutoff)?;
            Ok((fingerprint(&a)? == fingerprint(&b)?, da == db && da <= 1))
        })?;
        let mut fp = Tally::new("fingerprint(Pi_{v,w}) = fingerprint(Pi_{v'})");
        let mut vd = Tally::new("virdim Pi_{v,w} = virdim Pi_{v'} <= 1");
        for ((v, w), (a, b)) in pairs.iter().zip(rows) {
            fp.check(a, ctx.case(v, w, None));
            vd.check(b, ctx.case(v, w, None));
        }
        Ok(vec![fp.finish(), vd.finish()])
    }
}

pub struct Virdim;

impl<F: Factor> Suite<F> for Virdim {
    fn name(&self) -> &'static str {
        "virdim"
    }

    fn claim(&self) -> &'static str {
        "Pi_{v,w} is Iwanaga-Gorenstein of virtual dimension at most 2, and Pi_w, Pi^v of virtual dimension at most 1"
    }

    fn run(&self, ctx: &Context<F>) -> Result<Vec<Assertion>> {
        let pi = &ctx.pi;
        let cutoff = ctx.cfg.cutoff;
        let pairs = ctx.all_pairs()?;
        let rows = ctx.par_map(&pairs, |k, (v, w)| {
            let r = dimension_report(&pi.pi_vw(v, w, &mut ctx.rng(k))?, cutoff)?;
            Ok((r.virtual_dimension().map(|d| d <= 2).unwrap_or(false), !r.is_anomalous()))
        })?;
        let mut bound = Tally::new("virdim Pi_{v,w} <= 2");
        let mut sides = Tally::new("left and right injective dimensions agree");
        for ((v, w), (b, s)) in pairs.iter().zip(rows) {
            bound.check(b, ctx.case(v, w, None));
            sides.check(s, ctx.case(v, w, None));
        }
        let elements = ctx.elements()?;
        let rows = ctx.par_map(&elements, |k, x| {
            let mut rng = ctx.rng(k);
            let lower = dimension_report(&pi.pi_w(x, &mut rng)?.algebra, cutoff)?;
            let upper = dimension_report(&pi.pi_upper_v(x, &mut rng)?.algebra, cutoff)?;
            let ok = |r: &frobcat::homdim::DimensionReport| r.virtual_dimension().map(|d| d <= 1).unwrap_or(false);
            Ok((ok(&lower), ok(&upper), !lower.is_anomalous() && !upper.is_anomalous()))
        })?;
        let mut lower = Tally::new("virdim Pi_w <= 1");
        let mut upper = Tally::new("virdim Pi^v <= 1");
        for (x, (l, u, s)) in elements.iter().zip(rows) {
            lower.check(l, ctx.element_case(x, None));
            upper.check(u, ctx.element_case(x, None));
            sides.check(s, ctx.element_case(x, None));
        }
        Ok(vec![bound.finish(), lower.finish(), upper.finish(), sides.finish()])
    }
}
