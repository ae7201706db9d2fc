use proptest::prelude::*;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebra::{path_algebra_mod_relations, Arrow, Quiver};
use crate::linalg::{PrimeField, Rationals};

fn fp() -> PrimeField {
    PrimeField::default()
}

fn quiver_algebra<F: Field>(
    f: &F,
    n: usize,
    arrows: &[(usize, usize)],
    rels: Vec<Vec<(F::Elem, Vec<usize>)>>,
) -> Algebra<F> {
    let arrows =
        arrows.iter().enumerate().map(|(i, &(s, t))| Arrow { source: s, target: t, label: format!("a{i}") }).collect();
    path_algebra_mod_relations(f, &Quiver::new(n, arrows), &rels, 12).unwrap().algebra().clone()
}

/// `1 -> 2`.
fn a2_path<F: Field>(f: &F) -> Algebra<F> {
    quiver_algebra(f, 2, &[(0, 1)], vec![])
}

/// Doubled `A_2` modulo both length-two paths.
fn pi_a2<F: Field>(f: &F) -> Algebra<F> {
    quiver_algebra(f, 2, &[(0, 1), (1, 0)], vec![vec![(f.one(), vec![0, 1])], vec![(f.one(), vec![1, 0])]])
}

/// Doubled `A_3` with the mesh relations.
fn pi_a3(f: &PrimeField) -> Algebra<PrimeField> {
    // arrows: 0: 1->2, 1: 2->1, 2: 2->3, 3: 3->2
    let m1 = f.neg(&f.one());
    quiver_algebra(
        f,
        3,
        &[(0, 1), (1, 0), (1, 2), (2, 1)],
        vec![vec![(f.one(), vec![0, 1])], vec![(f.one(), vec![1, 0]), (m1, vec![2, 3])], vec![(f.one(), vec![3, 2])]],
    )
}

/// Oracle: solve `X act_M(b) = act_N(b) X` for all basis elements directly.
fn brute_hom_dim<F: Field>(m: &Module<F>, n: &Module<F>) -> usize {
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    if dm == 0 || dn == 0 {
        return 0;
    }
    let mut rows = Vec::new();
    for i in 0..m.algebra().dim() {
        let am = m.action(i);
        let an = n.action(i);
        for r in 0..dn {
            for c in 0..dm {
                // (X am - an X)[r][c] in the unknowns X[p][q] at p * dm + q
                let mut row = vec![f.zero(); dn * dm];
                for q in 0..dm {
                    let v = f.add(&row[r * dm + q], am.get(q, c));
                    row[r * dm + q] = v;
                }
                for p in 0..dn {
                    let v = f.sub(&row[p * dm + c], an.get(r, p));
                    row[p * dm + c] = v;
                }
                rows.push(row);
            }
        }
    }
    dn * dm - Matrix::from_rows(f, dn * dm, rows).rank()
}

fn random_module<F: Field>(a: &Algebra<F>, k: usize, gens: usize, rng: &mut dyn RngCore) -> Module<F> {
    let f = a.field();
    let free = Module::regular(a).power(k);
    let vecs: Vec<Vec<F::Elem>> = (0..gens).map(|_| (0..free.dim()).map(|_| f.random(rng)).collect()).collect();
    let sub = free.generated_submodule(&vecs);
    free.quotient_unchecked(&sub).0
}

#[test]
fn hom_between_simples() {
    let f = fp();
    let a = a2_path(&f);
    let s1 = Module::simple(&a, 0);
    let s2 = Module::simple(&a, 1);
    assert_eq!((s1.dim(), s2.dim()), (1, 1));
    assert_eq!(hom_space(&s1, &s2).unwrap().dim(), 0);
    assert_eq!(hom_space(&s1, &s1).unwrap().dim(), 1);
    let p1 = Module::projective(&a, 0);
    assert_eq!(p1.dimension_vector(), vec![1, 1]);
    assert_eq!(hom_space(&s2, &p1).unwrap().dim(), 1);
    assert_eq!(hom_space(&p1, &s2).unwrap().dim(), 0);
}

#[test]
fn hom_from_regular_is_module() {
    let f = fp();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for a in [pi_a2(&f), pi_a3(&f), a2_path(&f)] {
        let reg = Module::regular(&a);
        for k in 1..3 {
            let m = random_module(&a, k, 2, &mut rng);
            assert_eq!(hom_space(&reg, &m).unwrap().dim(), m.dim());
            assert_eq!(brute_hom_dim(&reg, &m), m.dim());
        }
    }
}

#[test]
fn validated_constructor_rejects_bad_actions() {
    let f = fp();
    let a = a2_path(&f);
    let reg = Module::regular(&a);
    assert!(Module::new(&a, reg.actions().to_vec()).is_ok());
    let mut bad = reg.actions().to_vec();
    bad[2] = Matrix::identity(&f, 3);
    assert!(Module::new(&a, bad).is_err());
    let id = Matrix::identity(&f, 3);
    let rot = Matrix::from_i64(&f, 3, 3, &[0, 1, 0, 0, 0, 1, 1, 0, 0]);
    assert!(ModuleMap::new(&reg, &reg, id).is_ok());
    assert_eq!(ModuleMap::new(&reg, &reg, rot).unwrap_err(), Error::NotAModuleMap);
}

#[test]
fn decompose_regular_preprojective_a2() {
    let f = fp();
    let a = pi_a2(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let parts = decompose(&Module::regular(&a), &mut rng).unwrap();
    assert_eq!(parts.len(), 2);
    assert!(parts.iter().all(|p| p.module.dim() == 2));
    assert!(!indecomposables_iso(&parts[0].module, &parts[1].module).unwrap());
    let mut sum = Matrix::zeros(&f, 4, 4);
    for p in &parts {
        assert!(p.projection.mul(&p.inclusion).is_identity());
        sum = sum.add(&p.inclusion.mul(&p.projection));
    }
    assert!(sum.is_identity());
}

#[test]
fn ext_over_path_algebra() {
    let f = fp();
    let a = a2_path(&f);
    let s1 = Module::simple(&a, 0);
    let s2 = Module::simple(&a, 1);
    assert_eq!(ext(&s1, &s2, 1).unwrap(), 1);
    assert_eq!(ext(&s2, &s1, 1).unwrap(), 0);
    assert_eq!(ext(&s1, &s2, 2).unwrap(), 0);
    assert_eq!(projective_dimension(&s1, 12).unwrap(), HomDim::Finite(1));
    assert_eq!(projective_dimension(&s2, 12).unwrap(), HomDim::Finite(0));
}

#[test]
fn syzygies_over_preprojective_a2() {
    let f = fp();
    let a = pi_a2(&f);
    let s1 = Module::simple(&a, 0);
    let s2 = Module::simple(&a, 1);
    let om = syzygy(&s1, 1).unwrap();
    assert_eq!(om.dim(), 1);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    assert!(is_isomorphic(&om, &s2, &mut rng).unwrap());
    assert_eq!(projective_dimension(&s1, 12).unwrap(), HomDim::AboveCutoff);
    assert_eq!(ext(&s1, &s2, 1).unwrap(), 1);
    assert_eq!(ext(&s1, &s1, 2).unwrap(), 1);
    assert_eq!(ext(&s1, &s1, 1).unwrap(), 0);
}

#[test]
fn endomorphisms() {
    let f = fp();
    let a = pi_a2(&f);
    let s = Module::simple(&a, 0);
    let ss = Module::direct_sum(&a, &[s.clone(), s]).unwrap();
    let (end, _) = endomorphism_algebra(&ss).unwrap();
    assert_eq!(end.dim(), 4);
    // End(A) consists of right multiplications and is anti-isomorphic to A
    for alg in [pi_a3(&f), a2_path(&f)] {
        let reg = Module::regular(&alg);
        let hs = hom_space(&reg, &reg).unwrap();
        assert_eq!(hs.dim(), alg.dim());
        for i in 0..alg.dim() {
            let ri = alg.right_matrix(&alg.basis_vec(i));
            assert!(hs.contains(&ri));
            for j in 0..alg.dim() {
                let rj = alg.right_matrix(&alg.basis_vec(j));
                let rji = alg.right_matrix(&alg.mul(&alg.basis_vec(j), &alg.basis_vec(i)));
                assert_eq!(ri.mul(&rj), rji);
            }
        }
        let (end, _) = endomorphism_algebra(&reg).unwrap();
        assert_eq!(end.dim(), alg.dim());
    }
}

#[test]
fn isomorphism_under_base_change() {
    let f = fp();
    let a = pi_a3(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let m = random_module(&a, 2, 2, &mut rng);
    let n = m.dim();
    let g = loop {
        let c: Vec<u64> = (0..n * n).map(|_| f.random(&mut rng)).collect();
        let g = Matrix::from_flat(&f, n, n, c);
        if g.is_invertible() {
            break g;
        }
    };
    let gi = g.inverse().unwrap();
    let moved = Module::new(&a, m.actions().iter().map(|x| g.mul(x).mul(&gi)).collect()).unwrap();
    assert!(is_isomorphic(&m, &moved, &mut rng).unwrap());
    assert!(ModuleMap::new(&m, &moved, g).is_ok());
    let p = Module::projective(&a, 0);
    let q = Module::projective(&a, 2);
    assert!(!is_isomorphic(&p, &q, &mut rng).unwrap());
}

#[test]
fn duals_and_traces() {
    let f = fp();
    let a = a2_path(&f);
    let op = a.opposite();
    let p1 = Module::projective(&a, 0);
    let d = dual_module(&p1, &op).unwrap();
    assert_eq!(d.dim(), 2);
    assert!(Module::new(&op, d.actions().to_vec()).is_ok());
    let s2 = Module::simple(&a, 1);
    let tr = trace_radical(&[s2], &p1).unwrap();
    assert_eq!(tr.dim(), 1);
    assert_eq!(trace_radical(&[Module::regular(&a)], &p1).unwrap().dim(), 2);
}

#[test]
fn json_round_trip() {
    let f = fp();
    let a = pi_a3(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let m = random_module(&a, 1, 1, &mut rng);
    let text = serde_json::to_string(&m.to_json()).unwrap();
    let back = Module::from_json(&a, &serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(back.actions(), m.actions());
}

#[test]
fn rationals_hom() {
    let q = Rationals;
    let a = pi_a2(&q);
    let reg = Module::regular(&a);
    assert_eq!(hom_space(&reg, &reg).unwrap().dim(), 4);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    assert_eq!(decompose(&reg, &mut rng).unwrap().len(), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn hom_matches_oracle(seed in any::<u64>(), k in 1usize..3, g in 1usize..3) {
        let f = fp();
        let a = pi_a3(&f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&a, k, g, &mut rng);
        let n = random_module(&a, 1, 1, &mut rng);
        let hs = hom_space(&m, &n).unwrap();
        prop_assert_eq!(hs.dim(), brute_hom_dim(&m, &n));
        for x in hs.basis() {
            prop_assert!(ModuleMap::new(&m, &n, x).is_ok());
        }
    }

    #[test]
    fn krull_schmidt(seed in any::<u64>()) {
        let f = fp();
        let a = pi_a3(&f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&a, 1, 1, &mut rng);
        let n = random_module(&a, 1, 2, &mut rng);
        let sum = Module::direct_sum(&a, &[m.clone(), n.clone()]).unwrap();
        let whole: Vec<_> = decompose(&sum, &mut rng).unwrap().into_iter().map(|s| s.module).collect();
        let mut parts: Vec<_> = decompose(&m, &mut rng).unwrap().into_iter().map(|s| s.module).collect();
        parts.extend(decompose(&n, &mut rng).unwrap().into_iter().map(|s| s.module));
        prop_assert!(same_summands(&whole, &parts).unwrap());
        prop_assert_eq!(whole.iter().map(|x| x.dim()).sum::<usize>(), sum.dim());
    }

    #[test]
    fn ext1_symmetric_over_preprojective(seed in any::<u64>()) {
        let f = fp();
        let a = pi_a3(&f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&a, 1, 1, &mut rng);
        let n = random_module(&a, 1, 2, &mut rng);
        prop_assert_eq!(ext(&m, &n, 1).unwrap(), ext(&n, &m, 1).unwrap());
    }

    #[test]
    fn ext_dimension_shift(seed in any::<u64>(), i in 1usize..3) {
        let f = fp();
        let a = pi_a3(&f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_module(&a, 1, 1, &mut rng);
        let n = random_module(&a, 1, 1, &mut rng);
        let om = syzygy(&m, 1).unwrap();
        prop_assert_eq!(ext(&m, &n, i + 1).unwrap(), ext(&om, &n, i).unwrap());
    }

    #[test]
    fn trace_is_idempotent(seed in any::<u64>()) {
        let f = fp();
        let a = pi_a3(&f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_module(&a, 1, 2, &mut rng);
        let x = random_module(&a, 2, 1, &mut rng);
        let t = trace_radical(std::slice::from_ref(&g), &x).unwrap();
        prop_assert!(x.is_submodule(&t));
        let (sub, _) = x.submodule(&t).unwrap();
        prop_assert_eq!(trace_radical(&[g], &sub).unwrap().dim(), sub.dim());
    }
}
