//! Verification suites, registered by name and run through one trait.
//!
//! A suite returns assertions; each assertion counts the cases it checked
//! and keeps a reproducer for every failing case.

mod category;
mod structure;
mod rings;

use std::sync::Arc;

use anyhow::Result;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::Config;
use frobcat::homdim::sample_seed;
use frobcat::linalg::{Factor, PrimeField};
use frobcat::preproj::Preprojective;
use frobcat::weyl::{DynkinType, WeylElement, WeylGroup};

/// A failing case: where it failed (`v=.. w=..` or `u=..`), and the sample
/// seed when one was drawn.
#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub at: String,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<Case>,
    pub detail: Option<String>,
}

/// Accumulates one assertion.
#[derive(Clone, Debug)]
pub struct Tally {
    name: String,
    checked: usize,
    failures: Vec<Case>,
    detail: Option<String>,
}

impl Tally {
    pub fn new(name: impl Into<String>) -> Self {
        Tally { name: name.into(), checked: 0, failures: Vec::new(), detail: None }
    }

    pub fn check(&mut self, ok: bool, case: Case) {
        self.checked += 1;
        if !ok {
            self.failures.push(case);
        }
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn finish(self) -> Assertion {
        Assertion {
            passed: self.failures.is_empty() && self.checked > 0,
            name: self.name,
            checked: self.checked,
            failures: self.failures,
            detail: self.detail,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub claim: String,
    #[serde(rename = "type")]
    pub ty: String,
    pub field: String,
    pub seed: u64,
    pub passed: bool,
    pub assertions: Vec<Assertion>,
}

/// Shared state for one suite run.
pub struct Context<F: Factor> {
    pub pi: Arc<Preprojective<F>>,
    pub cfg: Config,
}

impl<F: Factor> Context<F> {
    pub fn new(pi: Arc<Preprojective<F>>, cfg: Config) -> Self {
        Context { pi, cfg }
    }

    pub fn group(&self) -> &WeylGroup {
        self.pi.group()
    }

    pub fn case(&self, v: &WeylElement, w: &WeylElement, seed: Option<u64>) -> Case {
        Case { at: format!("v={} w={}", self.group().format_word(v), self.group().format_word(w)), seed }
    }

    pub fn element_case(&self, u: &WeylElement, seed: Option<u64>) -> Case {
        Case { at: format!("u={}", self.group().format_word(u)), seed }
    }

    pub fn elements(&self) -> Result<Vec<WeylElement>> {
        Ok(self.group().enumerate(crate::ENUMERATION_BOUND)?)
    }

    pub fn all_pairs(&self) -> Result<Vec<(WeylElement, WeylElement)>> {
        crate::survey::pairs(&self.pi)
    }

    /// Seed of the `k`-th sample.
    pub fn seed(&self, k: usize) -> u64 {
        sample_seed(self.cfg.seed, k)
    }

    pub fn rng(&self, k: usize) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed(k))
    }

    /// `f(k, item)` over all items on the worker pool, in item order.
    pub fn par_map<I: Sync, T: Send>(
        &self,
        items: &[I],
        f: impl Fn(usize, &I) -> Result<T> + Sync + Send,
    ) -> Result<Vec<T>> {
        self.cfg.install(|| items.par_iter().enumerate().map(|(k, x)| f(k, x)).collect::<Result<Vec<_>>>())?
    }

    /// The rank-four pair `v = s2, w = s1 s3 s2 s1 s3` of type `A3`.
    pub fn rank_four_pair(&self) -> Result<Option<(WeylElement, WeylElement)>> {
        if self.pi.dynkin_type() != DynkinType::A(3) {
            return Ok(None);
        }
        let g = self.group();
        Ok(Some((g.element_from_word(&[2])?, g.element_from_word(&[1, 3, 2, 1, 3])?)))
    }

    /// The rank-four pair when the type is `A3`, then seeded pairs with
    /// `P_{v,w} != 0` up to `count` pairs in all.
    pub fn sampled_pairs(&self, count: usize) -> Result<Vec<(WeylElement, WeylElement)>> {
        let fixed = self.rank_four_pair()?;
        let mut rng = self.rng(usize::MAX);
        let mut candidates = Vec::new();
        for (v, w) in self.all_pairs()? {
            if Some((v.clone(), w.clone())) == fixed {
                continue;
            }
            let reg = self.pi.regular();
            let (t, _) = self.pi.torsion(&w, &reg)?;
            if !self.pi.torsion_free(&v, &t)?.0.is_zero() {
                candidates.push((v, w));
            }
        }
        let mut out: Vec<_> = fixed.into_iter().collect();
        let want = count.saturating_sub(out.len()).min(candidates.len());
        let mut picks = sample(&mut rng, candidates.len(), want).into_vec();
        picks.sort_unstable();
        out.extend(picks.into_iter().map(|i| candidates[i].clone()));
        Ok(out)
    }
}

pub trait Suite<F: Factor>: Send + Sync {
    fn name(&self) -> &'static str;
    /// One line naming the property under test.
    fn claim(&self) -> &'static str;
    fn run(&self, ctx: &Context<F>) -> Result<Vec<Assertion>>;
}

/// Every suite, in a fixed order.
pub fn registry<F: Factor>() -> Vec<Box<dyn Suite<F>>> {
    vec![
        Box::new(category::Frobenius),
        Box::new(rings::GpEquivalence),
        Box::new(rings::SecondSyzygies),
        Box::new(rings::RingMaps),
        Box::new(rings::Morita),
        Box::new(category::Kernels),
        Box::new(category::EnoughInjectives),
        Box::new(category::FactoringKernels),
        Box::new(structure::Duality),
        Box::new(structure::Commutativity),
        Box::new(structure::U2Counterexample),
        Box::new(structure::Birs),
        Box::new(structure::RankFourExample),
        Box::new(rings::Virdim),
        Box::new(category::Torsion),
    ]
}

pub fn suite_names() -> Vec<&'static str> {
    registry::<PrimeField>().iter().map(|s| s.name()).collect()
}

pub fn find<F: Factor>(name: &str) -> Result<Box<dyn Suite<F>>> {
    registry()
        .into_iter()
        .find(|s| s.name() == name)
        .ok_or_else(|| frobcat::Error::UnknownSuite(name.to_string()).into())
}

pub fn run_suite<F: Factor>(suite: &dyn Suite<F>, ctx: &Context<F>) -> Result<SuiteReport> {
    let assertions = suite.run(ctx)?;
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        claim: suite.claim().to_string(),
        ty: ctx.pi.dynkin_type().label(),
        field: ctx.cfg.field.to_string(),
        seed: ctx.cfg.seed,
        passed: assertions.iter().all(|a| a.passed),
        assertions,
    })
}
