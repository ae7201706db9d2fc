//! Quiver-with-relations presentations of basic algebras.

use serde_json::{json, Value};

use super::path::{path_algebra_mod_relations, Arrow, Quiver, Relation, Truncated};
use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Field, FieldSpec, Matrix, Subspace};

/// Default degree cap for presentation extraction.
pub const DEFAULT_PRESENTATION_CAP: usize = 10;

/// Vertices are the distinguished idempotents; arrows from `i` to `j`
/// are lifts of a basis of `e_j (rad / rad^2) e_i`.
#[derive(Clone, Debug)]
pub struct QuiverPresentation<F: Field> {
    pub field: FieldSpec,
    pub quiver: Quiver,
    pub relations: Vec<Relation<F>>,
    pub degree_cap: usize,
    pub vertex_labels: Vec<String>,
    field_value: F,
}

impl<F: Field> QuiverPresentation<F> {
    /// `{arrows: [[src, tgt, label]], degree_cap, field, relations: [[[coeff, [arrow, ...]], ...]], vertices}`
    /// with 1-based vertices and 0-based arrow indices.
    pub fn to_json(&self) -> Value {
        let f = &self.field_value;
        let arrows: Vec<Value> =
            self.quiver.arrows.iter().map(|a| json!([a.source + 1, a.target + 1, a.label])).collect();
        let relations: Vec<Value> = self
            .relations
            .iter()
            .map(|r| Value::Array(r.iter().map(|(c, p)| json!([f.format(c), p])).collect()))
            .collect();
        json!({
            "field": self.field.to_string(),
            "vertices": self.vertex_labels,
            "arrows": arrows,
            "relations": relations,
            "degree_cap": self.degree_cap,
        })
    }

    /// Rebuilds the presented algebra.
    pub fn rebuild(&self) -> Result<Algebra<F>> {
        Ok(path_algebra_mod_relations(&self.field_value, &self.quiver, &self.relations, self.degree_cap)?
            .algebra()
            .clone())
    }
}

fn sandwich_span<F: Field>(a: &Algebra<F>, ej: &[F::Elem], ei: &[F::Elem], sub: &Subspace<F>) -> Subspace<F> {
    let vecs: Vec<_> = sub.basis_vecs().iter().map(|x| a.mul(&a.mul(ej, x), ei)).collect();
    Subspace::span(a.field(), a.dim(), &vecs)
}

/// Extracts a presentation and checks that it rebuilds an algebra with
/// the same dimension and Cartan matrix.
pub fn present_as_quiver<F: Field>(a: &Algebra<F>, degree_cap: usize) -> Result<QuiverPresentation<F>> {
    if !a.is_basic()? {
        return Err(Error::NotBasic);
    }
    let f = a.field();
    let d = a.dim();
    let e = a.idempotents().to_vec();
    let n = e.len();
    let rad = a.radical()?;
    let rad2 = rad.product(&rad)?;
    let mut arrows = Vec::new();
    let mut arrow_elems = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let x = sandwich_span(a, &e[j], &e[i], rad.carrier());
            let y = sandwich_span(a, &e[j], &e[i], rad2.carrier());
            let mut ech = Echelon::from_subspace(&y);
            for v in x.basis_vecs() {
                if ech.insert(v.clone()) {
                    arrows.push(Arrow { source: i, target: j, label: format!("x{}", arrows.len() + 1) });
                    arrow_elems.push(v);
                }
            }
        }
    }
    let quiver = Quiver::new(n, arrows);
    let loewy = a.loewy_length()?;
    if loewy > degree_cap {
        return Err(Error::PresentationCapExceeded(degree_cap));
    }
    let t: Truncated<'_, F> = Truncated::new(f, &quiver, loewy);
    let evaluate = |key: &(usize, Vec<usize>)| -> Vec<F::Elem> {
        let mut acc = e[key.0].clone();
        for &arrow in &key.1 {
            acc = a.mul(&arrow_elems[arrow], &acc);
        }
        acc
    };
    let images: Vec<Vec<F::Elem>> = t.paths.iter().map(evaluate).collect();
    let eval = Matrix::from_cols(f, d, &images);
    let mut relations: Vec<Relation<F>> = Vec::new();
    let mut closure = Subspace::zero(f, t.len());
    for deg in 2..=loewy {
        let cols: Vec<usize> = (0..t.len()).filter(|&c| t.paths[c].1.len() <= deg).collect();
        let kernel = eval.select_cols(&cols).nullspace();
        let embedded: Vec<Vec<F::Elem>> = kernel
            .iter()
            .map(|k| {
                let mut v = vec![f.zero(); t.len()];
                for (c, x) in cols.iter().zip(k) {
                    v[*c] = x.clone();
                }
                v
            })
            .collect();
        let kd = Subspace::span(f, t.len(), &embedded);
        for i in 0..n {
            for j in 0..n {
                // restrict to paths from i to j
                let block: Vec<Vec<F::Elem>> = kd
                    .basis_vecs()
                    .iter()
                    .map(|v| {
                        v.iter()
                            .enumerate()
                            .map(|(c, x)| {
                                let key = &t.paths[c];
                                if key.0 == i && quiver.end_of(key) == j {
                                    x.clone()
                                } else {
                                    f.zero()
                                }
                            })
                            .collect()
                    })
                    .collect();
                let block = Subspace::span(f, t.len(), &block);
                for v in block.basis_vecs() {
                    if closure.contains(&v) {
                        continue;
                    }
                    let rel: Relation<F> = v
                        .iter()
                        .enumerate()
                        .filter(|(_, x)| !f.is_zero(x))
                        .map(|(c, x)| (x.clone(), t.paths[c].1.clone()))
                        .collect();
                    relations.push(rel);
                    closure = t.ideal(&relations);
                }
            }
        }
    }
    let presentation = QuiverPresentation {
        field: f.spec(),
        quiver,
        relations,
        degree_cap,
        vertex_labels: a.idempotent_labels().to_vec(),
        field_value: f.clone(),
    };
    let rebuilt = presentation.rebuild().map_err(|_| Error::PresentationCapExceeded(degree_cap))?;
    if rebuilt.dim() != d || rebuilt.cartan_matrix() != a.cartan_matrix() {
        return Err(Error::PresentationCapExceeded(degree_cap));
    }
    Ok(presentation)
}
