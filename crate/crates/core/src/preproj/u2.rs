//! Two torsion pairs over upper triangular 2x2 matrices whose radicals do
//! not commute.

use rand::RngCore;

use crate::algebra::{path_algebra_mod_relations, Algebra, Arrow, Quiver};
use crate::error::Result;
use crate::linalg::{Factor, Field};
use crate::modcat::{hom_space, is_isomorphic, trace_radical, Module};

/// Names of the indecomposables, in the order used for bitmasks.
const NAMES: [&str; 3] = ["S1", "S2", "P1"];

#[derive(Clone, Debug)]
pub struct U2Counterexample {
    /// Every torsion class, as lists of indecomposable names.
    pub torsion_classes: Vec<Vec<String>>,
    /// Class defining `f_1`.
    pub first: Vec<String>,
    /// Class defining `t_2`.
    pub second: Vec<String>,
    pub module: String,
    /// `dim f_1 t_2 (M)` and `dim t_2 f_1 (M)`.
    pub dims: (usize, usize),
}

/// The path algebra of `1 -> 2`.
pub fn upper_triangular<F: Field>(f: &F) -> Result<Algebra<F>> {
    let q = Quiver::new(2, vec![Arrow { source: 0, target: 1, label: "a".into() }]);
    Ok(path_algebra_mod_relations(f, &q, &[], 4)?.algebra().clone())
}

fn names(mask: usize) -> Vec<String> {
    (0..3).filter(|i| mask & (1 << i) != 0).map(|i| NAMES[i].to_string()).collect()
}

/// Enumerates torsion classes as subsets `S` with `S = ⊥(S^⊥)`, then
/// searches pairs of classes and small modules for `f_1 t_2 M ≇ t_2 f_1 M`.
pub fn u2_counterexample<F: Factor>(f: &F, rng: &mut dyn RngCore) -> Result<Option<U2Counterexample>> {
    let a = upper_triangular(f)?;
    let ind = [Module::simple(&a, 0), Module::simple(&a, 1), Module::projective(&a, 0)];
    let mut hom = [[0usize; 3]; 3];
    for x in 0..3 {
        for y in 0..3 {
            hom[x][y] = hom_space(&ind[x], &ind[y])?.dim();
        }
    }
    let perp =
        |s: usize| (0..3).filter(|&y| (0..3).all(|x| s & (1 << x) == 0 || hom[x][y] == 0)).fold(0, |m, y| m | (1 << y));
    let lperp =
        |t: usize| (0..3).filter(|&x| (0..3).all(|y| t & (1 << y) == 0 || hom[x][y] == 0)).fold(0, |m, x| m | (1 << x));
    let classes: Vec<usize> = (0..8).filter(|&s| lperp(perp(s)) == s).collect();
    let members =
        |mask: usize| -> Vec<Module<F>> { (0..3).filter(|i| mask & (1 << i) != 0).map(|i| ind[i].clone()).collect() };
    let radical = |mask: usize, m: &Module<F>| -> Result<(Module<F>, Module<F>)> {
        let t = trace_radical(&members(mask), m)?;
        Ok((m.submodule(&t)?.0, m.quotient(&t)?.0))
    };
    let mut tests: Vec<(String, Module<F>)> = NAMES.iter().zip(&ind).map(|(n, m)| (n.to_string(), m.clone())).collect();
    for i in 0..3 {
        for j in i..3 {
            let sum = Module::direct_sum(&a, &[ind[i].clone(), ind[j].clone()])?;
            tests.push((format!("{}+{}", NAMES[i], NAMES[j]), sum));
        }
    }
    for &c1 in &classes {
        for &c2 in &classes {
            for (name, m) in &tests {
                let (t2, _) = radical(c2, m)?;
                let (_, ft) = radical(c1, &t2)?;
                let (_, f1) = radical(c1, m)?;
                let (tf, _) = radical(c2, &f1)?;
                if !is_isomorphic(&ft, &tf, rng)? {
                    return Ok(Some(U2Counterexample {
                        torsion_classes: classes.iter().map(|&c| names(c)).collect(),
                        first: names(c1),
                        second: names(c2),
                        module: name.clone(),
                        dims: (ft.dim(), tf.dim()),
                    }));
                }
            }
        }
    }
    Ok(None)
}
