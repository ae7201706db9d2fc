//! Univariate polynomials and their factorization.
//!
//! Over prime fields the factorization is complete (square-free
//! decomposition, distinct-degree and equal-degree splitting). Over the
//! rationals only linear and quadratic irreducible factors are found; a
//! factor of higher degree raises [`Error::RationalsFactorLimit`].

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{Field, PrimeField, Rationals};
use crate::error::{Error, Result};

/// Polynomial with coefficients listed from the constant term upwards.
/// Trailing zeros are always trimmed, so the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn new(field: &F, coeffs: Vec<F::Elem>) -> Self {
        let mut p = Poly { field: field.clone(), coeffs };
        p.trim();
        p
    }

    pub fn from_i64(field: &F, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &F) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    pub fn one(field: &F) -> Self {
        Self::constant(field, field.one())
    }

    /// The monomial `x`.
    pub fn x(field: &F) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }
    pub fn lead(&self) -> F::Elem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }
    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(&self.lead());
        self.scale(&inv)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = f.zero();
        Self::new(
            f,
            (0..n).map(|i| f.add(self.coeffs.get(i).unwrap_or(&z), other.coeffs.get(i).unwrap_or(&z))).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = f.zero();
        Self::new(
            f,
            (0..n).map(|i| f.sub(self.coeffs.get(i).unwrap_or(&z), other.coeffs.get(i).unwrap_or(&z))).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                f.add_mul(&mut out[i + j], a, b);
            }
        }
        Self::new(f, out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(&self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let f = &self.field;
        let mut r = self.coeffs.clone();
        let dd = d.deg();
        if r.len() < d.coeffs.len() {
            return (Self::zero(f), self.clone());
        }
        let inv = f.inv(&d.lead());
        let mut q = vec![f.zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = f.mul(&r[i + dd], &inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                let t = f.mul(&c, b);
                r[i + j] = f.sub(&r[i + j], &t);
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(f, q), Self::new(f, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `g = s*self + t*other` and `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(&r0.lead());
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().enumerate().skip(1).map(|(i, c)| f.mul(c, &f.from_i64(i as i64))).collect())
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(&self.field).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn format(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = &self.field;
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if f.is_zero(c) {
                continue;
            }
            let cs = f.format(c);
            terms.push(match i {
                0 => cs,
                1 => format!("{cs}*x"),
                _ => format!("{cs}*x^{i}"),
            });
        }
        terms.join(" + ")
    }
}

/// Product of factors with multiplicities.
pub fn expand<F: Field>(field: &F, factors: &[(Poly<F>, usize)]) -> Poly<F> {
    factors.iter().fold(Poly::one(field), |acc, (g, m)| acc.mul(&g.pow(*m)))
}

/// Fields over which polynomials can be factored.
pub trait Factor: Field {
    /// Monic irreducible factors with multiplicities; the product equals
    /// `f` up to its leading coefficient.
    fn factor(&self, f: &Poly<Self>) -> Result<Vec<(Poly<Self>, usize)>>;
}

/// Factor a nonzero polynomial into monic irreducibles with multiplicities.
pub fn factor_polynomial<F: Factor>(f: &Poly<F>) -> Result<Vec<(Poly<F>, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = f.field().factor(f)?;
    out.sort_by(|a, b| {
        a.0.deg().cmp(&b.0.deg()).then_with(|| format!("{:?}", a.0.coeffs).cmp(&format!("{:?}", b.0.coeffs)))
    });
    Ok(out)
}

fn merge_factors<F: Field>(list: Vec<(Poly<F>, usize)>) -> Vec<(Poly<F>, usize)> {
    let mut out: Vec<(Poly<F>, usize)> = Vec::new();
    for (g, m) in list {
        if let Some(e) = out.iter_mut().find(|(h, _)| *h == g) {
            e.1 += m;
        } else {
            out.push((g, m));
        }
    }
    out
}

// ----- prime fields -------------------------------------------------------

impl Factor for PrimeField {
    fn factor(&self, f: &Poly<Self>) -> Result<Vec<(Poly<Self>, usize)>> {
        let f = f.monic();
        if f.is_constant() {
            return Ok(Vec::new());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x00fa_c70e);
        let mut out = Vec::new();
        for (sq, m) in squarefree_fp(self, &f) {
            for (g, d) in distinct_degree(self, &sq) {
                for h in equal_degree(self, &g, d, &mut rng) {
                    out.push((h, m));
                }
            }
        }
        Ok(merge_factors(out))
    }
}

/// `g(x)` with `g(x)^p = f(x)`, valid when `f` only has exponents divisible by `p`.
fn pth_root(field: &PrimeField, f: &Poly<PrimeField>) -> Poly<PrimeField> {
    let p = field.modulus() as usize;
    Poly::new(field, f.coeffs.iter().step_by(p).cloned().collect())
}

/// Square-free decomposition over `F_p`: pairs of square-free monic parts and multiplicities.
fn squarefree_fp(field: &PrimeField, f: &Poly<PrimeField>) -> Vec<(Poly<PrimeField>, usize)> {
    let p = field.modulus() as usize;
    let f = f.monic();
    if f.is_constant() {
        return Vec::new();
    }
    let df = f.derivative();
    if df.is_zero() {
        return squarefree_fp(field, &pth_root(field, &f)).into_iter().map(|(g, m)| (g, m * p)).collect();
    }
    let mut out = Vec::new();
    let mut c = f.gcd(&df);
    let mut w = f.divrem(&c).0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.divrem(&y).0;
        if !fac.is_constant() {
            out.push((fac.monic(), i));
        }
        i += 1;
        w = y;
        c = c.divrem(&w).0;
    }
    if !c.is_constant() {
        for (g, m) in squarefree_fp(field, &pth_root(field, &c)) {
            out.push((g, m * p));
        }
    }
    out
}

/// Splits a square-free monic polynomial into products of irreducibles of equal degree.
fn distinct_degree(field: &PrimeField, f: &Poly<PrimeField>) -> Vec<(Poly<PrimeField>, usize)> {
    let p = BigUint::from(field.modulus());
    let x = Poly::x(field);
    let mut out = Vec::new();
    let mut g = f.clone();
    let mut h = x.rem(&g);
    let mut i = 1;
    while g.deg() >= 2 * i {
        h = h.pow_mod(&p, &g);
        let d = g.gcd(&h.sub(&x));
        if !d.is_one() {
            g = g.divrem(&d).0;
            h = h.rem(&g);
            out.push((d, i));
        }
        i += 1;
    }
    if !g.is_constant() {
        let d = g.deg();
        out.push((g.monic(), d));
    }
    out
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of degree `d`.
fn equal_degree(field: &PrimeField, f: &Poly<PrimeField>, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly<PrimeField>> {
    let n = f.deg();
    if n == d {
        return vec![f.monic()];
    }
    let p = field.modulus();
    loop {
        let a = Poly::new(field, (0..n).map(|_| field.random(rng)).collect());
        if a.is_constant() {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            a.pow_mod(&e, f).sub(&Poly::one(field))
        };
        let g = f.gcd(&b);
        if !g.is_one() && g.deg() < n {
            let h = f.divrem(&g).0;
            let mut out = equal_degree(field, &g, d, rng);
            out.extend(equal_degree(field, &h, d, rng));
            return out;
        }
    }
}

// ----- rationals ----------------------------------------------------------

const TRIAL_DIVISION_BOUND: u64 = 1_000_000;
const KRONECKER_BUDGET: usize = 200_000;

impl Factor for Rationals {
    fn factor(&self, f: &Poly<Self>) -> Result<Vec<(Poly<Self>, usize)>> {
        let f = f.monic();
        if f.is_constant() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for (sq, m) in squarefree_q(&f) {
            for g in split_squarefree_q(&sq)? {
                out.push((g, m));
            }
        }
        Ok(merge_factors(out))
    }
}

/// Yun's square-free decomposition in characteristic zero.
fn squarefree_q(f: &Poly<Rationals>) -> Vec<(Poly<Rationals>, usize)> {
    let mut out = Vec::new();
    let df = f.derivative();
    let a = f.gcd(&df);
    let mut b = f.divrem(&a).0;
    let mut c = df.divrem(&a).0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while !b.is_constant() {
        let g = b.gcd(&d);
        if !g.is_constant() {
            out.push((g.monic(), i));
        }
        b = b.divrem(&g).0;
        c = d.divrem(&g).0;
        d = c.sub(&b.derivative());
        i += 1;
    }
    out
}

/// Scales to a primitive integer polynomial.
fn to_integer_poly(f: &Poly<Rationals>) -> Vec<BigInt> {
    let lcm = f.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> =
        f.coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

/// Positive divisors of `n`, or `None` when trial division cannot finish.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut n = n.abs();
    if n.is_zero() {
        return None;
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_BOUND {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        let mut e = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            primes.push((bd, e));
        }
        d += 1;
    }
    if !n.is_one() {
        let bound = BigInt::from(TRIAL_DIVISION_BOUND);
        if n > &bound * &bound {
            return None;
        }
        primes.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for dv in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(dv * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

fn rational_poly(ints: &[BigInt]) -> Poly<Rationals> {
    Poly::new(&Rationals, ints.iter().map(|c| BigRational::from_integer(c.clone())).collect())
}

fn split_squarefree_q(f: &Poly<Rationals>) -> Result<Vec<Poly<Rationals>>> {
    let q = Rationals;
    let mut out = Vec::new();
    let mut rest = f.monic();
    // rational roots
    if rest.deg() >= 1 && rest.coeffs[0].is_zero() {
        out.push(Poly::x(&q));
        rest = rest.divrem(&Poly::x(&q)).0;
    }
    if rest.deg() >= 2 {
        let ints = to_integer_poly(&rest);
        let nums = divisors(&ints[0]).ok_or(Error::RationalsFactorLimit)?;
        let dens = divisors(ints.last().unwrap()).ok_or(Error::RationalsFactorLimit)?;
        let mut candidates = BTreeSet::new();
        for a in &nums {
            for b in &dens {
                let r = BigRational::new(a.clone(), b.clone());
                candidates.insert(r.clone());
                candidates.insert(-r);
            }
        }
        for r in candidates {
            if rest.deg() < 2 {
                break;
            }
            if rest.eval(&r).is_zero() {
                let lin = Poly::new(&q, vec![-r.clone(), BigRational::one()]);
                rest = rest.divrem(&lin).0;
                out.push(lin);
            }
        }
    }
    while rest.deg() >= 3 {
        if rest.deg() == 3 {
            return Err(Error::RationalsFactorLimit);
        }
        let quad = find_quadratic_factor(&rest)?.ok_or(Error::RationalsFactorLimit)?;
        rest = rest.divrem(&quad).0.monic();
        out.push(quad);
    }
    if !rest.is_constant() {
        out.push(rest.monic());
    }
    Ok(out)
}

/// Kronecker search for a monic quadratic factor of a polynomial without rational roots.
fn find_quadratic_factor(f: &Poly<Rationals>) -> Result<Option<Poly<Rationals>>> {
    let q = Rationals;
    let ints = to_integer_poly(f);
    let g = rational_poly(&ints);
    let v0 = g.eval(&q.from_i64(0)).to_integer();
    let v1 = g.eval(&q.from_i64(1)).to_integer();
    let vm = g.eval(&q.from_i64(-1)).to_integer();
    let d0 = divisors(&v0).ok_or(Error::RationalsFactorLimit)?;
    let d1 = divisors(&v1).ok_or(Error::RationalsFactorLimit)?;
    let dm = divisors(&vm).ok_or(Error::RationalsFactorLimit)?;
    if d0.len() * d1.len() * dm.len() * 4 > KRONECKER_BUDGET {
        return Err(Error::RationalsFactorLimit);
    }
    let two = BigInt::from(2);
    for c in d0.iter().flat_map(|d| [d.clone(), -d.clone()]) {
        for s1 in d1.iter().flat_map(|d| [d.clone(), -d.clone()]) {
            for sm in dm.iter() {
                for sm in [sm.clone(), -sm.clone()] {
                    let sum = &s1 + &sm;
                    let diff = &s1 - &sm;
                    if !sum.is_even() || !diff.is_even() {
                        continue;
                    }
                    let a = &sum / &two - &c;
                    let b = &diff / &two;
                    if !a.is_positive() {
                        continue;
                    }
                    let cand = rational_poly(&[c.clone(), b, a]);
                    if g.rem(&cand).is_zero() {
                        return Ok(Some(cand.monic()));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn difference_of_squares_over_f7() {
        let f = fp(7);
        let poly = Poly::from_i64(&f, &[-1, 0, 1]);
        let fac = factor_polynomial(&poly).unwrap();
        assert_eq!(fac.len(), 2);
        assert!(fac.iter().all(|(g, m)| g.degree() == Some(1) && *m == 1));
        assert_eq!(expand(&f, &fac), poly.monic());
    }

    #[test]
    fn x_is_irreducible() {
        let f = fp(32003);
        let fac = factor_polynomial(&Poly::x(&f)).unwrap();
        assert_eq!(fac, vec![(Poly::x(&f), 1)]);
        let fac_q = factor_polynomial(&Poly::x(&Rationals)).unwrap();
        assert_eq!(fac_q, vec![(Poly::x(&Rationals), 1)]);
    }

    /// Root counts by evaluating at every field element.
    fn root_count(f: &PrimeField, poly: &Poly<PrimeField>) -> usize {
        f.elements().unwrap().iter().filter(|x| f.is_zero(&poly.eval(x))).count()
    }

    #[test]
    fn cyclotomic_cubic_over_f5_and_f7() {
        let f5 = fp(5);
        let f7 = fp(7);
        let p5 = Poly::from_i64(&f5, &[1, 1, 1]);
        let p7 = Poly::from_i64(&f7, &[1, 1, 1]);
        assert_eq!(root_count(&f5, &p5), 0);
        assert_eq!(root_count(&f7, &p7), 2);
        let fac5 = factor_polynomial(&p5).unwrap();
        assert_eq!(fac5, vec![(p5.clone(), 1)]);
        let fac7 = factor_polynomial(&p7).unwrap();
        assert_eq!(fac7.len(), 2);
        assert_eq!(expand(&f7, &fac7), p7);
    }

    #[test]
    fn multiplicities_and_pth_powers() {
        let f = fp(3);
        // (x+1)^3 (x^2+1)^2 over F_3
        let a = Poly::from_i64(&f, &[1, 1]).pow(3);
        let b = Poly::from_i64(&f, &[1, 0, 1]).pow(2);
        let poly = a.mul(&b);
        let fac = factor_polynomial(&poly).unwrap();
        assert_eq!(expand(&f, &fac), poly.monic());
        assert!(fac.contains(&(Poly::from_i64(&f, &[1, 1]), 3)));
        assert!(fac.contains(&(Poly::from_i64(&f, &[1, 0, 1]), 2)));
    }

    #[test]
    fn rational_linear_and_quadratic_factors() {
        let q = Rationals;
        // (2x - 1)(x^2 + 1)(x^2 - 2)(x + 3)^2
        let poly = Poly::from_i64(&q, &[-1, 2])
            .mul(&Poly::from_i64(&q, &[1, 0, 1]))
            .mul(&Poly::from_i64(&q, &[-2, 0, 1]))
            .mul(&Poly::from_i64(&q, &[3, 1]).pow(2));
        let fac = factor_polynomial(&poly).unwrap();
        assert_eq!(expand(&q, &fac), poly.monic());
        assert_eq!(fac.iter().filter(|(g, _)| g.degree() == Some(2)).count(), 2);
        assert!(fac.iter().any(|(g, m)| g.degree() == Some(1) && *m == 2));
    }

    #[test]
    fn rational_cubic_hits_limit() {
        let q = Rationals;
        let poly = Poly::from_i64(&q, &[-2, 0, 0, 1]);
        assert_eq!(factor_polynomial(&poly), Err(Error::RationalsFactorLimit));
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(factor_polynomial(&Poly::zero(&fp(7))), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn ext_gcd_identity() {
        let f = fp(101);
        let a = Poly::from_i64(&f, &[1, 2, 3, 4]);
        let b = Poly::from_i64(&f, &[5, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    use proptest::prelude::*;
    proptest! {
        #[test]
        fn factorization_multiplies_back(coeffs in prop::collection::vec(-20i64..20, 1..9)) {
            let f = fp(13);
            let poly = Poly::from_i64(&f, &coeffs);
            prop_assume!(!poly.is_zero());
            let fac = factor_polynomial(&poly).unwrap();
            prop_assert_eq!(expand(&f, &fac), poly.monic());
            for (g, _) in &fac {
                // irreducible: no proper factor found again
                prop_assert_eq!(factor_polynomial(g).unwrap(), vec![(g.clone(), 1)]);
            }
        }
    }
}
