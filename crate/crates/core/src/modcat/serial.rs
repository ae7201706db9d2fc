use serde::{Deserialize, Serialize};

use super::Module;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::matrix::unit_vec;
use crate::linalg::{Echelon, Field, Matrix};

/// JSON form of a module: the action of a generating set of the algebra as
/// sparse triples `[row, col, coeff]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub field: String,
    pub algebra_hash: String,
    pub dimension: usize,
    pub generators: Vec<Vec<String>>,
    pub actions: Vec<Vec<(usize, usize, String)>>,
}

/// Idempotents and lifts of a basis of `rad / rad^2`, if they generate;
/// otherwise the whole basis.
fn algebra_generators<F: Field>(a: &Algebra<F>) -> Vec<Vec<F::Elem>> {
    let f = a.field();
    let all = || (0..a.dim()).map(|i| unit_vec(f, a.dim(), i)).collect();
    let Ok(rad) = a.radical() else { return all() };
    let Ok(rad2) = rad.product(&rad) else { return all() };
    let mut gens: Vec<Vec<F::Elem>> = a.idempotents().to_vec();
    let mut ech = Echelon::from_subspace(rad2.carrier());
    for v in rad.carrier().basis_vecs() {
        if ech.insert(v.clone()) {
            gens.push(v);
        }
    }
    if spanning_products(a, &gens).is_some() {
        gens
    } else {
        all()
    }
}

/// An algebra element with the generator word producing it.
type WordProduct<F> = (Vec<<F as Field>::Elem>, Vec<usize>);

/// Products of generators spanning `A`, as `(element, word)` with the word
/// read right to left. `None` if they do not span.
fn spanning_products<F: Field>(a: &Algebra<F>, gens: &[Vec<F::Elem>]) -> Option<Vec<WordProduct<F>>> {
    let mut ech = Echelon::new(a.field(), a.dim());
    let mut out = vec![(a.unit().to_vec(), vec![])];
    ech.insert(a.unit().to_vec());
    let mut frontier = 0;
    while frontier < out.len() && ech.dim() < a.dim() {
        let (x, word) = out[frontier].clone();
        frontier += 1;
        for (g, gv) in gens.iter().enumerate() {
            let y = a.mul(gv, &x);
            if ech.insert(y.clone()) {
                let mut w = word.clone();
                w.push(g);
                out.push((y, w));
            }
        }
    }
    (ech.dim() == a.dim()).then_some(out)
}

impl<F: Field> Module<F> {
    pub fn to_json(&self) -> ModuleJson {
        let a = self.algebra();
        let f = self.field();
        let gens = algebra_generators(a);
        let actions = gens
            .iter()
            .map(|g| {
                let m = self.act(g);
                let mut triples = Vec::new();
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        if !f.is_zero(m.get(r, c)) {
                            triples.push((r, c, f.format(m.get(r, c))));
                        }
                    }
                }
                triples
            })
            .collect();
        ModuleJson {
            field: f.spec().to_string(),
            algebra_hash: a.hash_hex(),
            dimension: self.dim(),
            generators: gens.iter().map(|g| g.iter().map(|x| f.format(x)).collect()).collect(),
            actions,
        }
    }

    /// Rebuilds the full action from the generators and validates it.
    pub fn from_json(a: &Algebra<F>, json: &ModuleJson) -> Result<Module<F>> {
        let f = a.field();
        if json.field != f.spec().to_string() {
            return Err(Error::FieldMismatch(json.field.clone(), f.spec().to_string()));
        }
        if json.algebra_hash != a.hash_hex() {
            return Err(Error::AlgebraMismatch);
        }
        if json.generators.len() != json.actions.len() {
            return Err(Error::Parse("one action per generator".into()));
        }
        let n = json.dimension;
        let gens = json
            .generators
            .iter()
            .map(|g| {
                if g.len() != a.dim() {
                    return Err(Error::DimensionMismatch { expected: a.dim(), found: g.len() });
                }
                g.iter().map(|s| f.parse(s)).collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut mats = Vec::with_capacity(gens.len());
        for triples in &json.actions {
            let mut m = Matrix::zeros(f, n, n);
            for (r, c, x) in triples {
                if *r >= n || *c >= n {
                    return Err(Error::Parse(format!("entry ({r},{c}) out of range")));
                }
                m.set(*r, *c, f.parse(x)?);
            }
            mats.push(m);
        }
        let products =
            spanning_products(a, &gens).ok_or_else(|| Error::InvalidModule("generators do not span".into()))?;
        let word_action = |w: &[usize]| w.iter().fold(Matrix::identity(f, n), |acc, &g| mats[g].mul(&acc));
        let elems: Vec<Vec<F::Elem>> = products.iter().map(|(x, _)| x.clone()).collect();
        let inv = Matrix::from_cols(f, a.dim(), &elems)
            .inverse()
            .ok_or_else(|| Error::InvalidModule("generators do not span".into()))?;
        let word_mats: Vec<Matrix<F>> = products.iter().map(|(_, w)| word_action(w)).collect();
        let action = (0..a.dim())
            .map(|i| {
                let mut m = Matrix::zeros(f, n, n);
                for (k, wm) in word_mats.iter().enumerate() {
                    let c = inv.get(k, i);
                    if !f.is_zero(c) {
                        m.add_scaled(wm, c);
                    }
                }
                m
            })
            .collect();
        Module::new(a, action)
    }
}
