//! Front end for `frobcat`: the survey table, verification suites and
//! quiver presentations.
//!
//! Every command is generic over the base field; [`Config::field`] picks the
//! instance once, at the top.

pub mod present;
pub mod suites;
pub mod survey;

use std::sync::Arc;

use anyhow::Result;
use frobcat::algebra::DEFAULT_PRESENTATION_CAP;
use frobcat::linalg::FieldSpec;
use frobcat::modcat::DEFAULT_CUTOFF;
use frobcat::preproj::Preprojective;
use frobcat::weyl::DynkinType;

/// Bound on `|W|` for the exhaustive commands.
pub const ENUMERATION_BOUND: u64 = 50_000;

#[derive(Clone, Debug)]
pub struct Config {
    pub ty: DynkinType,
    pub field: FieldSpec,
    pub seed: u64,
    pub workers: usize,
    pub cutoff: usize,
    pub degree_cap: usize,
}

impl Config {
    pub fn new(ty: DynkinType) -> Self {
        Config {
            ty,
            field: FieldSpec::default(),
            seed: 0,
            workers: 1,
            cutoff: DEFAULT_CUTOFF,
            degree_cap: DEFAULT_PRESENTATION_CAP,
        }
    }

    /// Runs `f` on a pool of `workers` threads.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(self.workers.max(1)).build()?;
        Ok(pool.install(f))
    }
}

/// Instantiates `$body` with `$pi: Arc<Preprojective<F>>` for the configured field.
#[macro_export]
macro_rules! with_field {
    ($cfg:expr, $pi:ident => $body:expr) => {
        match $cfg.field {
            frobcat::linalg::FieldSpec::Prime(p) => {
                let $pi = $crate::preprojective(&$cfg, &frobcat::linalg::PrimeField::new(p)?)?;
                $body
            }
            frobcat::linalg::FieldSpec::Rationals => {
                let $pi = $crate::preprojective(&$cfg, &frobcat::linalg::Rationals)?;
                $body
            }
        }
    };
}

pub fn preprojective<F: frobcat::linalg::Field>(cfg: &Config, f: &F) -> Result<Arc<Preprojective<F>>> {
    Ok(Preprojective::shared(cfg.ty, f)?)
}
