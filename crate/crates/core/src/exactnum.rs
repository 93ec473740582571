//! Exact rational and cyclotomic-field arithmetic.
//!
//! A [`Cyclotomic`] is an element of the field Q(zeta_n), stored in the power
//! basis {zeta_n^i : 0 <= i < phi(n)} after reduction modulo the n-th
//! cyclotomic polynomial. Mixed-order arithmetic embeds both operands into the
//! compositum Q(zeta_lcm). Galois actions zeta_n -> zeta_n^k (gcd(k, n) = 1)
//! provide the root-of-unity substitutions needed for Adams operations on
//! character values; complex conjugation is the k = -1 case.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational p/q.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactNumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent {k} is not invertible modulo {order}")]
    NotAGaloisIndex { k: i64, order: u64 },
    #[error("cyclotomic value is not rational")]
    NotRational,
    #[error("cannot parse rational literal {0:?}")]
    BadRationalLiteral(String),
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut ds: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    ds.sort_unstable();
    ds
}

/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
///
/// Computed by dividing x^n - 1 by Phi_d for every proper divisor d of n.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    // x^n - 1
    let mut num = vec![BigInt::zero(); (n + 1) as usize];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        num = int_poly_div_exact(&num, &cyclotomic_polynomial(d));
    }
    num
}

/// Exact division of integer polynomials; the divisor must be monic and
/// divide the dividend exactly.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one());
    let mut rem: Vec<BigInt> = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for i in (0..=dn - dd).rev() {
        let c = rem[i + dd].clone();
        quot[i] = c.clone();
        for j in 0..=dd {
            rem[i + j] -= &c * &den[j];
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

fn trim(poly: &mut Vec<Rational>) {
    while poly.last().is_some_and(|c| c.is_zero()) {
        poly.pop();
    }
}

/// Remainder of `poly` modulo the monic integer polynomial `modulus`.
fn poly_rem(poly: &[Rational], modulus: &[BigInt]) -> Vec<Rational> {
    let dd = modulus.len() - 1;
    let mut rem: Vec<Rational> = poly.to_vec();
    trim(&mut rem);
    while rem.len() > dd {
        let top = rem.len() - 1;
        let c = rem[top].clone();
        for j in 0..=dd {
            let m = Rational::from_integer(modulus[j].clone()) * &c;
            rem[top - dd + j] -= m;
        }
        trim(&mut rem);
    }
    rem
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    out
}

/// Inverse of `a` modulo the monic irreducible polynomial `modulus`, via the
/// extended Euclidean algorithm over Q[x].
fn poly_inverse(a: &[Rational], modulus: &[BigInt]) -> Vec<Rational> {
    let modulus_q: Vec<Rational> = modulus
        .iter()
        .map(|c| Rational::from_integer(c.clone()))
        .collect();
    // Invariants: r0 = s0*a mod modulus, r1 = s1*a mod modulus.
    let mut r0 = modulus_q;
    let mut r1: Vec<Rational> = a.to_vec();
    trim(&mut r1);
    let mut s0: Vec<Rational> = vec![];
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let qs1 = poly_mul(&q, &s1);
        let mut s2 = s0.clone();
        if s2.len() < qs1.len() {
            s2.resize(qs1.len(), Rational::zero());
        }
        for (i, c) in qs1.iter().enumerate() {
            s2[i] -= c;
        }
        trim(&mut s2);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    // r0 is the gcd, a nonzero constant since the modulus is irreducible.
    assert_eq!(r0.len(), 1, "inverse modulo reducible or shared factor");
    let inv_gcd = r0[0].recip();
    s0.iter().map(|c| c * &inv_gcd).collect()
}

fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem: Vec<Rational> = num.to_vec();
    trim(&mut rem);
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    if rem.len() <= dd {
        return (vec![], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    while rem.len() > dd {
        let top = rem.len() - 1;
        let c = &rem[top] / &lead;
        quot[top - dd] = c.clone();
        for j in 0..=dd {
            let m = &den[j] * &c;
            rem[top - dd + j] -= m;
        }
        trim(&mut rem);
    }
    (quot, rem)
}

/// Exact element of Q(zeta_n) in the power basis modulo Phi_n.
#[derive(Debug, Clone)]
pub struct Cyclotomic {
    order: u64,
    /// Length phi(order); coefficient of zeta^i at index i.
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclotomic::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Cyclotomic::from_rational(rat(n))
    }

    /// zeta_n^k.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1);
        let k = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![Rational::zero(); k + 1];
        poly[k] = Rational::one();
        Cyclotomic::from_poly(n, poly)
    }

    /// Reduce a polynomial in zeta_n (low degree first) into the power basis.
    fn from_poly(order: u64, poly: Vec<Rational>) -> Self {
        let phi = euler_phi(order) as usize;
        let modulus = cyclotomic_polynomial(order);
        let mut coeffs = poly_rem(&poly, &modulus);
        coeffs.resize(phi, Rational::zero());
        Cyclotomic { order, coeffs }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Re-express in Q(zeta_target); requires order | target.
    pub fn embed(&self, target: u64) -> Cyclotomic {
        assert!(target % self.order == 0);
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        let mut poly = vec![Rational::zero(); (self.order as usize - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Cyclotomic::from_poly(target, poly)
    }

    fn common_order(&self, other: &Cyclotomic) -> u64 {
        self.order.lcm(&other.order)
    }

    pub fn add_ref(&self, other: &Cyclotomic) -> Cyclotomic {
        let n = self.common_order(other);
        let a = self.embed(n);
        let b = other.embed(n);
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| x + y)
            .collect();
        Cyclotomic { order: n, coeffs }
    }

    pub fn sub_ref(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul_ref(&self, other: &Cyclotomic) -> Cyclotomic {
        let n = self.common_order(other);
        let a = self.embed(n);
        let b = other.embed(n);
        Cyclotomic::from_poly(n, poly_mul(&a.coeffs, &b.coeffs))
    }

    pub fn scale(&self, q: &Rational) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn inverse(&self) -> Result<Cyclotomic, ExactNumError> {
        if self.is_zero() {
            return Err(ExactNumError::DivisionByZero);
        }
        let modulus = cyclotomic_polynomial(self.order);
        let mut inv = poly_inverse(&self.coeffs, &modulus);
        inv.resize(euler_phi(self.order) as usize, Rational::zero());
        Ok(Cyclotomic {
            order: self.order,
            coeffs: inv,
        })
    }

    pub fn div_ref(&self, other: &Cyclotomic) -> Result<Cyclotomic, ExactNumError> {
        let n = self.common_order(other);
        let a = self.embed(n);
        let b = other.embed(n);
        Ok(a.mul_ref(&b.inverse()?))
    }

    /// Apply zeta_n -> zeta_n^k; requires gcd(k, n) = 1.
    pub fn galois(&self, k: i64) -> Result<Cyclotomic, ExactNumError> {
        let n = self.order;
        let kk = k.rem_euclid(n as i64) as u64;
        if kk.gcd(&n) != 1 {
            return Err(ExactNumError::NotAGaloisIndex { k, order: n });
        }
        let mut poly = vec![Rational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = (i as u64 * kk % n) as usize;
            poly[e] += c;
        }
        Ok(Cyclotomic::from_poly(n, poly))
    }

    /// Complex conjugation, i.e. zeta -> zeta^{-1}.
    pub fn conj(&self) -> Cyclotomic {
        self.galois(-1).expect("-1 is always a Galois index")
    }

    pub fn as_rational(&self) -> Result<Rational, ExactNumError> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Ok(self.coeffs[0].clone())
        } else {
            Err(ExactNumError::NotRational)
        }
    }

    pub fn as_integer(&self) -> Result<BigInt, ExactNumError> {
        let q = self.as_rational()?;
        if q.is_integer() {
            Ok(q.to_integer())
        } else {
            Err(ExactNumError::NotRational)
        }
    }

    /// The file/report representation: a sum of coeff * zeta_order^exp terms.
    pub fn to_terms(&self) -> Vec<CycTerm> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| CycTerm {
                coeff: format_rational(c),
                zeta_order: self.order,
                zeta_exp: i as u64,
            })
            .collect()
    }

    pub fn from_terms(terms: &[CycTerm]) -> Result<Cyclotomic, ExactNumError> {
        let mut acc = Cyclotomic::zero();
        for t in terms {
            let q = parse_rational(&t.coeff)?;
            let root = Cyclotomic::root_of_unity(t.zeta_order.max(1), t.zeta_exp as i64);
            acc = acc.add_ref(&root.scale(&q));
        }
        Ok(acc)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.sub_ref(other).is_zero()
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.to_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = terms
            .iter()
            .map(|t| {
                if t.zeta_exp == 0 || t.zeta_order == 1 {
                    t.coeff.clone()
                } else {
                    format!("{}*z{}^{}", t.coeff, t.zeta_order, t.zeta_exp)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$inner(rhs)
            }
        }
        impl $trait for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Div for &Cyclotomic {
    type Output = Cyclotomic;
    fn div(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.div_ref(rhs).expect("division by zero")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.neg_ref()
    }
}

/// One term of the cyclotomic literal syntax used in table files and reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycTerm {
    pub coeff: String,
    pub zeta_order: u64,
    pub zeta_exp: u64,
}

/// A cyclotomic literal: either an abbreviated rational string ("3", "-1/2")
/// or a list of terms.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CycLiteral {
    Rational(String),
    Terms(Vec<CycTerm>),
}

impl CycLiteral {
    pub fn to_cyclotomic(&self) -> Result<Cyclotomic, ExactNumError> {
        match self {
            CycLiteral::Rational(s) => Ok(Cyclotomic::from_rational(parse_rational(s)?)),
            CycLiteral::Terms(ts) => Cyclotomic::from_terms(ts),
        }
    }
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, ExactNumError> {
    let bad = || ExactNumError::BadRationalLiteral(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.trim().parse().map_err(|_| bad())?;
    let d: BigInt = den.trim().parse().map_err(|_| bad())?;
    if d.is_zero() || d.is_negative() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Serialize a rational as its canonical "p/q" string.
pub mod serde_rational {
    use super::{format_rational, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }
}

/// Serialize an optional rational as an optional "p/q" string.
pub mod serde_opt_rational {
    use super::{format_rational, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match q {
            Some(v) => s.serialize_some(&format_rational(v)),
            None => s.serialize_none(),
        }
    }
}

/// Generalized binomial coefficient C(x, n) = x(x-1)...(x-n+1)/n! for
/// rational x, so e.g. C(-1, n) = (-1)^n.
pub fn binomial(x: &Rational, n: u32) -> Rational {
    let mut acc = rat(1);
    for i in 0..n {
        acc *= x - rat(i as i64);
        acc /= rat(i as i64 + 1);
    }
    acc
}

/// kappa = 2*zeta_3 + 1, a square root of -3.
pub fn kappa() -> Cyclotomic {
    Cyclotomic::root_of_unity(3, 1).scale(&rat(2)) + Cyclotomic::one()
}
