//! One row per pair `(v, w)`: the generator `P_{v,w}`, its endomorphism
//! ring and the ring map `phi_2`.

use std::collections::BTreeMap;
use std::io::Write;

use anyhow::{anyhow, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::Config;
use frobcat::homdim::{dimension_report, sample_seed};
use frobcat::linalg::Factor;
use frobcat::modcat::{same_summands, HomDim};
use frobcat::preproj::{injectives_of_c, phi2, summand_classes, Preprojective};
use frobcat::weyl::WeylElement;

/// Column names, in field order.
pub const HEADER: [&str; 16] = [
    "type",
    "v",
    "w",
    "l(v)",
    "l(w)",
    "condition_P",
    "dim_P",
    "summands",
    "dim_Pi_vw",
    "virdim",
    "gldim",
    "frobenius_ok",
    "commutativity_ok",
    "phi2_injective",
    "phi2_surjective",
    "phi2_coker",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    #[serde(rename = "type")]
    pub ty: String,
    pub v: String,
    pub w: String,
    pub len_v: usize,
    pub len_w: usize,
    pub condition_p: bool,
    pub dim_p: usize,
    pub summands: usize,
    pub dim_ring: usize,
    pub virdim: usize,
    pub gldim: HomDim,
    /// `add P_{v,w} = add t_w f_v (D Pi)`.
    pub frobenius_ok: bool,
    /// `f_v t_w Pi` isomorphic to `t_w f_v Pi`.
    pub commutativity_ok: bool,
    pub phi2_injective: bool,
    pub phi2_surjective: bool,
    pub phi2_coker: usize,
}

impl SurveyRow {
    pub fn tsv(&self) -> String {
        [
            self.ty.clone(),
            self.v.clone(),
            self.w.clone(),
            self.len_v.to_string(),
            self.len_w.to_string(),
            self.condition_p.to_string(),
            self.dim_p.to_string(),
            self.summands.to_string(),
            self.dim_ring.to_string(),
            self.virdim.to_string(),
            self.gldim.to_string(),
            self.frobenius_ok.to_string(),
            self.commutativity_ok.to_string(),
            self.phi2_injective.to_string(),
            self.phi2_surjective.to_string(),
            self.phi2_coker.to_string(),
        ]
        .join("\t")
    }

    /// Row-level invariants: `virdim <= 2` and both flags set.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.virdim > 2 {
            out.push("virdim");
        }
        if !self.frobenius_ok {
            out.push("frobenius_ok");
        }
        if !self.commutativity_ok {
            out.push("commutativity_ok");
        }
        out
    }
}

pub fn survey_row<F: Factor>(
    pi: &Preprojective<F>,
    v: &WeylElement,
    w: &WeylElement,
    cutoff: usize,
    seed: u64,
) -> Result<SurveyRow> {
    let g = pi.group();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gen = pi.pvw(v, w, &mut rng)?;
    let ring = gen.basic()?.algebra;
    let report = dimension_report(&ring, cutoff)?;
    let injectives: Vec<_> =
        summand_classes(&injectives_of_c(pi, v, w)?, &mut rng)?.into_iter().map(|(m, _)| m).collect();
    let map = phi2(pi, &gen)?;
    Ok(SurveyRow {
        ty: pi.dynkin_type().label(),
        v: g.format_word(v),
        w: g.format_word(w),
        len_v: g.length(v),
        len_w: g.length(w),
        condition_p: g.condition_p(v, w)?,
        dim_p: gen.module.dim(),
        summands: gen.summand_count(),
        dim_ring: ring.dim(),
        virdim: report.virtual_dimension()?,
        gldim: report.gldim,
        frobenius_ok: same_summands(&gen.representatives(), &injectives)?,
        commutativity_ok: gen.commutation_iso.is_some(),
        phi2_injective: map.is_injective(),
        phi2_surjective: map.is_surjective(),
        phi2_coker: map.coker_dim(),
    })
}

/// Pairs in enumeration order, `v` outer.
pub fn pairs<F: Factor>(pi: &Preprojective<F>) -> Result<Vec<(WeylElement, WeylElement)>> {
    let all = pi.group().enumerate(crate::ENUMERATION_BOUND)?;
    Ok(all.iter().flat_map(|v| all.iter().map(move |w| (v.clone(), w.clone()))).collect())
}

/// Every row, computed in parallel and returned in pair order. The first
/// failing pair aborts the survey.
pub fn survey_rows<F: Factor>(pi: &Preprojective<F>, cfg: &Config) -> Result<Vec<SurveyRow>> {
    let pairs = pairs(pi)?;
    let g = pi.group();
    cfg.install(|| {
        pairs
            .par_iter()
            .enumerate()
            .map(|(k, (v, w))| {
                survey_row(pi, v, w, cfg.cutoff, sample_seed(cfg.seed, k))
                    .map_err(|e| anyhow!("pair v={} w={}: {e}", g.format_word(v), g.format_word(w)))
            })
            .collect::<Result<Vec<_>>>()
    })?
}

/// Multiplicity of each virtual dimension.
pub fn virdim_multiset(rows: &[SurveyRow]) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for r in rows {
        *out.entry(r.virdim).or_insert(0) += 1;
    }
    out
}

/// Writes the table and footer. Returns whether every row invariant holds;
/// violations go to `err` with a reproducing command.
pub fn write_survey(rows: &[SurveyRow], cfg: &Config, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool> {
    writeln!(out, "{}", HEADER.join("\t"))?;
    let mut ok = true;
    for r in rows {
        writeln!(out, "{}", r.tsv())?;
        let bad = r.violations();
        if !bad.is_empty() {
            ok = false;
            writeln!(
                err,
                "violation {}: type {} v={} w={}; reproduce with `frobcat present --type {} --field {} --v {} --w {}`",
                bad.join(","),
                r.ty,
                r.v,
                r.w,
                r.ty,
                cfg.field,
                r.v,
                r.w
            )?;
        }
    }
    let multiset: Vec<String> = virdim_multiset(rows).iter().map(|(d, n)| format!("{d}:{n}")).collect();
    writeln!(out, "# rows\t{}", rows.len())?;
    writeln!(out, "# virdim\t{}", multiset.join(" "))?;
    Ok(ok)
}
