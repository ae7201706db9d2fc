//! `Pi_{v,w}` as a quiver with relations, with its fingerprint.

use anyhow::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::Config;
use frobcat::algebra::present_as_quiver;
use frobcat::homdim::fingerprint;
use frobcat::linalg::Factor;
use frobcat::preproj::Preprojective;
use frobcat::weyl::WeylElement;

/// Keys are sorted on output because `serde_json` maps are ordered.
pub fn present<F: Factor>(pi: &Preprojective<F>, v: &WeylElement, w: &WeylElement, cfg: &Config) -> Result<Value> {
    let g = pi.group();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let gen = pi.pvw(v, w, &mut rng)?;
    let ring = gen.basic()?.algebra;
    let presentation = if ring.dim() == 0 {
        json!({
            "arrows": [],
            "degree_cap": cfg.degree_cap,
            "field": cfg.field.to_string(),
            "relations": [],
            "vertices": [],
        })
    } else {
        present_as_quiver(&ring, cfg.degree_cap)?.to_json()
    };
    Ok(json!({
        "type": pi.dynkin_type().label(),
        "field": cfg.field.to_string(),
        "v": g.format_word(v),
        "w": g.format_word(w),
        "dim_P": gen.module.dim(),
        "summand_dimension_vectors": gen.summands.iter().map(|(m, k)| json!({"dimension_vector": m.dimension_vector(), "multiplicity": k})).collect::<Vec<_>>(),
        "presentation": presentation,
        "fingerprint": serde_json::to_value(fingerprint(&ring)?)?,
    }))
}
