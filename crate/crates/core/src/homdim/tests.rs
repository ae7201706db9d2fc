use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::algebra::{base_field_algebra, matrix_algebra, product_of_fields};
use crate::linalg::{PrimeField, Rationals};
use crate::modcat::{syzygy, DEFAULT_CUTOFF};
use crate::preproj::{basic_endomorphism_algebra, upper_triangular, Preprojective};
use crate::weyl::{DynkinType, WeylElement};

fn fp() -> PrimeField {
    PrimeField::default()
}

fn pi(n: usize) -> Preprojective<PrimeField> {
    Preprojective::new(DynkinType::new('A', n).unwrap(), &fp()).unwrap()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn word(p: &Preprojective<PrimeField>, w: &[usize]) -> WeylElement {
    p.group().element_from_word(w).unwrap()
}

fn example_ring(p: &Preprojective<PrimeField>) -> Algebra<PrimeField> {
    p.pi_vw(&word(p, &[2]), &word(p, &[1, 3, 2, 1, 3]), &mut rng(7)).unwrap()
}

/// End of `P1 + P2 + S1 + S2` over `Pi(A2)`, built directly from the four
/// indecomposables.
fn auslander_a2() -> Algebra<PrimeField> {
    let p = pi(2);
    let a = p.algebra();
    let reps = [Module::projective(a, 0), Module::projective(a, 1), Module::simple(a, 0), Module::simple(a, 1)];
    basic_endomorphism_algebra(a, &reps).unwrap().algebra
}

#[test]
fn semisimple_algebras_have_dimension_zero() {
    let f = fp();
    for a in [base_field_algebra(&f), product_of_fields(&f, 3), matrix_algebra(&f, 2)] {
        let r = dimension_report(&a, 4).unwrap();
        assert_eq!(r.left_injdim, HomDim::Finite(0));
        assert_eq!(r.right_injdim, HomDim::Finite(0));
        assert_eq!(r.gldim, HomDim::Finite(0));
    }
    let m2 = matrix_algebra(&f, 2);
    assert_eq!(fingerprint(&m2).unwrap(), fingerprint(&base_field_algebra(&f)).unwrap());
    assert_eq!(basic_algebra(&m2).unwrap().dim(), 1);
}

#[test]
fn zero_algebra_is_trivial() {
    let f = fp();
    let z = Algebra::new(&f, vec![], vec![], vec![], vec![], vec![]).unwrap();
    assert_eq!(virtual_dimension(&z, 4).unwrap(), 0);
    assert_eq!(fingerprint(&z).unwrap().simples, 0);
}

#[test]
fn hereditary_path_algebra() {
    let a = upper_triangular(&fp()).unwrap();
    let r = dimension_report(&a, 4).unwrap();
    assert_eq!(r.gldim, HomDim::Finite(1));
    assert_eq!(r.virtual_dimension().unwrap(), 1);
    let fpr = fingerprint(&a).unwrap();
    assert_eq!(fpr.simples, 2);
    assert_eq!(fpr.cartan, vec![vec![1, 0], vec![1, 1]]);
    assert_eq!(fpr.radical_dims, vec![3, 1, 0, 0, 0]);
}

#[test]
fn preprojective_is_selfinjective_of_infinite_gldim() {
    for n in [2, 3] {
        let p = pi(n);
        let r = dimension_report(p.algebra(), 6).unwrap();
        assert_eq!(r.gldim, HomDim::AboveCutoff);
        assert_eq!(r.virtual_dimension().unwrap(), 0);
    }
}

#[test]
fn dimensions_agree_over_the_rationals() {
    let q = Preprojective::new(DynkinType::new('A', 2).unwrap(), &Rationals).unwrap();
    let p = pi(2);
    let mut r = rng(3);
    for x in q.group().enumerate(10).unwrap() {
        let wq = q.pi_w(&x, &mut r).unwrap().algebra;
        let wp = p.pi_w(&x, &mut r).unwrap().algebra;
        assert_eq!(fingerprint(&wq).unwrap(), fingerprint(&wp).unwrap());
        assert_eq!(virtual_dimension(&wq, 6).unwrap(), virtual_dimension(&wp, 6).unwrap());
    }
}

#[test]
fn rank_four_ring_is_the_auslander_algebra() {
    let p = pi(3);
    let a = example_ring(&p);
    let r = dimension_report(&a, DEFAULT_CUTOFF).unwrap();
    assert_eq!(r.gldim, HomDim::Finite(2));
    assert_eq!(r.virtual_dimension().unwrap(), 2);
    let aus = auslander_a2();
    assert_eq!(global_dimension(&aus, 6).unwrap(), HomDim::Finite(2));
    let fa = fingerprint(&a).unwrap();
    assert_eq!(fa, fingerprint(&aus).unwrap());
    assert_eq!(fa.simples, 4);
    assert_eq!(fa.dim, 10);
}

#[test]
fn injective_dimensions_agree_on_both_sides() {
    for n in [2, 3] {
        let p = pi(n);
        let g = p.group();
        let all = g.enumerate(100).unwrap();
        let mut r = rng(11);
        for x in &all {
            for a in [p.pi_w(x, &mut r).unwrap().algebra, p.pi_upper_v(x, &mut r).unwrap().algebra] {
                let rep = dimension_report(&a, 6).unwrap();
                assert!(rep.virtual_dimension().unwrap() <= 1);
            }
            if !x.is_identity() {
                let rep = dimension_report(&p.lambda(x).unwrap(), 6).unwrap();
                assert!(!rep.is_anomalous());
                assert!(rep.virtual_dimension().unwrap() <= 1);
            }
        }
    }
}

#[test]
fn a2_pairs_have_virdim_at_most_two() {
    let p = pi(2);
    let all = p.group().enumerate(10).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    let mut r = rng(5);
    for v in &all {
        for w in &all {
            let a = p.pi_vw(v, w, &mut r).unwrap();
            let rep = dimension_report(&a, 6).unwrap();
            let d = rep.virtual_dimension().unwrap();
            assert!(d <= 2);
            if let HomDim::Finite(gl) = rep.gldim {
                assert_eq!(gl, d);
            }
            seen.insert(d);
        }
    }
    assert_eq!(seen.into_iter().collect::<Vec<_>>(), vec![0, 1]);
}

/// Endomorphisms multiply by composition, so `End_A(A) = A^op` here. In the
/// convention `End_A(A) = A` the rings below carry an extra `op`.
#[test]
fn quotient_by_torsion_ideal_matches_endomorphism_rings() {
    for n in [2, 3] {
        let p = pi(n);
        let g = p.group();
        let w0 = g.longest();
        let mut r = rng(13);
        for w in g.enumerate(100).unwrap().into_iter().skip(1) {
            let wi = g.inverse(&w);
            let lam = fingerprint(&p.lambda(&w).unwrap()).unwrap();
            let lower = p.pi_w(&wi, &mut r).unwrap().algebra;
            let upper = p.pi_upper_v(&g.mul(&w0, &wi).unwrap(), &mut r).unwrap().algebra;
            assert_eq!(lam, fingerprint(&lower).unwrap());
            assert_eq!(lam, fingerprint(&upper.opposite()).unwrap());
        }
    }
}

#[test]
fn condition_p_rings_match_cofactor_rings() {
    let p = pi(3);
    let g = p.group();
    let all = g.enumerate(100).unwrap();
    let mut r = rng(17);
    let mut count = 0;
    for v in &all {
        for w in &all {
            if !g.condition_p(v, w).unwrap() {
                continue;
            }
            count += 1;
            let a = p.pi_vw(v, w, &mut r).unwrap();
            let vp = g.left_cofactor(v, w).unwrap();
            let b = p.pi_w(&vp, &mut r).unwrap().algebra;
            assert_eq!(fingerprint(&a).unwrap(), fingerprint(&b).unwrap());
            assert!(virtual_dimension(&a, 6).unwrap() <= 1);
        }
    }
    assert_eq!(count, 151);
}

#[test]
fn projectives_and_second_syzygies_are_gorenstein_projective() {
    let p = pi(3);
    let a = example_ring(&p);
    let d = virtual_dimension(&a, 6).unwrap();
    assert!(gp_membership(&Module::regular(&a), d).unwrap());
    let mut r = rng(19);
    for k in 0..8 {
        let m = random_module(&a, 2, 1 + k % 2, &mut r).unwrap();
        assert!(gp_membership(&syzygy(&m, 2).unwrap(), d).unwrap());
    }
    let reg = Module::regular(&a);
    let mut nonprojective = 0;
    for s in simples(&a).unwrap() {
        assert!(gp_membership(&syzygy(&s, 2).unwrap(), d).unwrap());
        let mut res = Resolution::new(&s);
        assert_eq!(res.ext_dim(d + 1, &reg).unwrap(), 0);
        assert_eq!(res.ext_dim(d + 2, &reg).unwrap(), 0);
        if !gp_membership(&s, d).unwrap() {
            nonprojective += 1;
        }
    }
    assert!(nonprojective > 0);
}

#[test]
fn rank_four_pair_passes_the_equivalence_check() {
    let p = pi(3);
    let report = gp_equivalence_check(&p, &word(&p, &[2]), &word(&p, &[1, 3, 2, 1, 3]), 6, 23).unwrap();
    assert!(report.passed(), "{report:?}");
    assert_eq!(report.virdim, 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn gp_is_closed_under_sums(seed in any::<u64>()) {
        let p = pi(3);
        let a = example_ring(&p);
        let mut r = rng(seed);
        let m = random_module(&a, 1, 1, &mut r).unwrap();
        let n = random_module(&a, 1, 2, &mut r).unwrap();
        let sum = Module::direct_sum(&a, &[m.clone(), n.clone()]).unwrap();
        prop_assert_eq!(
            gp_membership(&sum, 2).unwrap(),
            gp_membership(&m, 2).unwrap() && gp_membership(&n, 2).unwrap()
        );
    }

    #[test]
    fn fingerprints_ignore_the_field(n in 2usize..4, pick in any::<prop::sample::Index>()) {
        let p = pi(n);
        let q = Preprojective::new(DynkinType::new('A', n).unwrap(), &PrimeField::new(101).unwrap()).unwrap();
        let all = p.group().enumerate(100).unwrap();
        let x = pick.get(&all);
        let mut r = rng(29);
        let a = p.pi_upper_v(x, &mut r).unwrap().algebra;
        let b = q.pi_upper_v(x, &mut r).unwrap().algebra;
        prop_assert_eq!(fingerprint(&a).unwrap(), fingerprint(&b).unwrap());
    }
}
