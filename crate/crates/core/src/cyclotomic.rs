//! Exact arithmetic in cyclotomic fields `ℚ(ζₙ)`.
//!
//! A [`Cyclotomic`] stores coefficients in the power basis
//! `1, ζₙ, …, ζₙ^{φ(n)−1}` after reduction modulo the cyclotomic polynomial
//! `Φₙ`. For a fixed conductor this form is canonical, so derived equality
//! and ordering are exact. Values of different conductors are compared by
//! embedding both into the lcm conductor first (see [`Cyclotomic::same_value`]).

use std::borrow::Cow;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision rational with an inline fast path for values whose
/// numerator and denominator fit in `i64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    // Reduced, denominator > 0.
    Small(i64, i64),
    // Only used when the value does not fit `Small`.
    Big(BigRational),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    pub fn integer(n: i64) -> Self {
        Rational(Repr::Small(n, 1))
    }

    /// `num / den`; panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        let neg = (num < 0) != (den < 0);
        let (n, d) = (num.unsigned_abs(), den.unsigned_abs());
        let g = gcd_u128(n, d).max(1);
        let (n, d) = (n / g, d / g);
        if n <= i64::MAX as u128 && d <= i64::MAX as u128 {
            let n = n as i64;
            Rational(Repr::Small(if neg { -n } else { n }, d as i64))
        } else {
            let n = BigInt::from(n);
            Self::from_big(BigRational::new(if neg { -n } else { n }, BigInt::from(d)))
        }
    }

    pub fn from_big(value: BigRational) -> Self {
        match (value.numer().to_i64(), value.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(value)),
        }
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::from_big(BigRational::new(num, den)))
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => b.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    /// The value as an `i64`, if it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        match self.0 {
            Repr::Small(n, 1) => Some(n),
            _ => None,
        }
    }

    pub fn signum(&self) -> Ordering {
        match &self.0 {
            Repr::Small(n, _) => n.cmp(&0),
            Repr::Big(b) => b.numer().sign().cmp(&num_bigint::Sign::NoSign),
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Option<Self> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(n, d) => Some(Self::from_i128(*d as i128, *n as i128)),
            Repr::Big(b) => Some(Self::from_big(b.recip())),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, 1), Repr::Small(c, 1)) => match a.checked_add(*c) {
                Some(s) => Rational::integer(s),
                None => Rational::from_i128(*a as i128 + *c as i128, 1),
            },
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rational::from_i128(a * d + c * b, b * d)
            }
            _ => Rational::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self + &(-rhs)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, 1), Repr::Small(c, 1)) => match a.checked_mul(*c) {
                Some(p) => Rational::integer(p),
                None => Rational::from_i128(*a as i128 * *c as i128, 1),
            },
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational(Repr::Small(m, *d)),
                None => Rational::from_i128(-(*n as i128), *d as i128),
            },
            Repr::Big(b) => Rational::from_big(-b),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Φₙ = x^φ + Σ low_terms`, with only the nonzero low terms stored.
#[derive(Debug)]
pub struct CyclotomicPolynomial {
    pub n: u32,
    pub degree: usize,
    pub coeffs: Vec<i64>,
    low_terms: Vec<(usize, i64)>,
}

fn poly_cache() -> &'static RwLock<HashMap<u32, Arc<CyclotomicPolynomial>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CyclotomicPolynomial>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The n-th cyclotomic polynomial, computed by dividing `xⁿ − 1` by `Φ_d`
/// for every proper divisor `d` and cached.
pub fn cyclotomic_polynomial(n: u32) -> Arc<CyclotomicPolynomial> {
    assert!(n >= 1, "conductor must be positive");
    if let Some(p) = poly_cache().read().expect("cache poisoned").get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let divisor = cyclotomic_polynomial(d);
        num = divide_exact(&num, &divisor.coeffs);
    }
    let degree = num.len() - 1;
    let low_terms = num[..degree]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| (j, c))
        .collect();
    let poly = Arc::new(CyclotomicPolynomial {
        n,
        degree,
        coeffs: num,
        low_terms,
    });
    poly_cache()
        .write()
        .expect("cache poisoned")
        .entry(n)
        .or_insert(poly)
        .clone()
}

// Exact division by a monic polynomial; coefficients low to high.
fn divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

pub fn euler_phi(n: u32) -> usize {
    let mut result = n as u64;
    let mut m = n as u64;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result as usize
}

// Reduces a polynomial in ζₙ (any length) to the power basis, over i128.
// Returns None on overflow.
fn reduce_i128(n: u32, mut v: Vec<i128>) -> Option<Vec<i128>> {
    let n = n as usize;
    if v.len() > n {
        for j in n..v.len() {
            v[j % n] = v[j % n].checked_add(v[j])?;
        }
        v.truncate(n);
    }
    let poly = cyclotomic_polynomial(n as u32);
    let phi = poly.degree;
    for deg in (phi..v.len()).rev() {
        let c = std::mem::take(&mut v[deg]);
        if c != 0 {
            for &(j, a) in &poly.low_terms {
                let t = c.checked_mul(a as i128)?;
                let slot = &mut v[deg - phi + j];
                *slot = slot.checked_sub(t)?;
            }
        }
    }
    v.resize(phi, 0);
    Some(v)
}

fn reduce_rational(n: u32, mut v: Vec<Rational>) -> Vec<Rational> {
    let n = n as usize;
    if v.len() > n {
        for j in n..v.len() {
            if !v[j].is_zero() {
                v[j % n] = &v[j % n] + &v[j];
            }
        }
        v.truncate(n);
    }
    let poly = cyclotomic_polynomial(n as u32);
    let phi = poly.degree;
    for deg in (phi..v.len()).rev() {
        let c = std::mem::replace(&mut v[deg], Rational::zero());
        if !c.is_zero() {
            for &(j, a) in &poly.low_terms {
                let t = &c * &Rational::integer(a);
                v[deg - phi + j] = &v[deg - phi + j] - &t;
            }
        }
    }
    v.resize(phi, Rational::zero());
    v
}

fn small_integers(v: &[Rational]) -> Option<Vec<i128>> {
    v.iter().map(|c| c.to_i64().map(i128::from)).collect()
}

fn from_i128_vec(v: Vec<i128>) -> Vec<Rational> {
    v.into_iter()
        .map(|c| match i64::try_from(c) {
            Ok(s) => Rational::integer(s),
            Err(_) => Rational::from_i128(c, 1),
        })
        .collect()
}

fn reduce(n: u32, v: Vec<Rational>) -> Vec<Rational> {
    if let Some(ints) = small_integers(&v) {
        if let Some(r) = reduce_i128(n, ints) {
            return from_i128_vec(r);
        }
    }
    reduce_rational(n, v)
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// An element of `ℚ(ζₙ)` in reduced power-basis form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

/// Result of [`Cyclotomic::classify`].
#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub is_rational: bool,
    pub is_integer: bool,
    pub rational_value: Option<Rational>,
    /// Double-precision estimate `(re, im)`; never used for equality.
    pub approx: (f64, f64),
}

impl Cyclotomic {
    /// Builds `Σ coeffs[j]·ζₙ^j` from an unreduced coefficient list of any
    /// length (exponents are taken modulo `n`).
    pub fn from_coeffs(n: u32, coeffs: Vec<Rational>) -> Self {
        assert!(n >= 1, "conductor must be positive");
        Self {
            conductor: n,
            coeffs: reduce(n, coeffs),
        }
    }

    /// `Σ c·ζₙ^e` over `(e, c)` pairs.
    pub fn from_exponents(n: u32, terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut v = vec![0i128; n as usize];
        for (e, c) in terms {
            v[e.rem_euclid(n as i64) as usize] += c as i128;
        }
        Self {
            conductor: n,
            coeffs: from_i128_vec(reduce_i128(n, v).expect("small exponent sums fit i128")),
        }
    }

    pub fn from_rational(q: Rational, n: u32) -> Self {
        let mut coeffs = vec![Rational::zero(); euler_phi(n)];
        coeffs[0] = q;
        Self {
            conductor: n,
            coeffs,
        }
    }

    pub fn integer(k: i64, n: u32) -> Self {
        Self::from_rational(Rational::integer(k), n)
    }

    pub fn zero(n: u32) -> Self {
        Self::integer(0, n)
    }

    pub fn one(n: u32) -> Self {
        Self::integer(1, n)
    }

    /// `ζₙ^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        Self::from_exponents(n, [(k, 1)])
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Rational::is_zero)
    }

    pub fn rational_value(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn to_integer(&self) -> Option<i64> {
        self.rational_value().and_then(|q| q.to_i64())
    }

    /// Rewrites the value over `ζ_m` using `ζₙ = ζ_m^{m/n}`.
    pub fn embed(&self, m: u32) -> Result<Self> {
        if m == 0 || !m.is_multiple_of(self.conductor) {
            return Err(Error::ConductorMismatch {
                from: self.conductor,
                to: m,
            });
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        let step = (m / self.conductor) as usize;
        let mut v = vec![Rational::zero(); m as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            v[j * step] = c.clone();
        }
        Ok(Self::from_coeffs(m, v))
    }

    fn aligned<'a>(a: &'a Self, b: &'a Self) -> (Cow<'a, Self>, Cow<'a, Self>, u32) {
        if a.conductor == b.conductor {
            return (Cow::Borrowed(a), Cow::Borrowed(b), a.conductor);
        }
        let n = lcm(a.conductor, b.conductor);
        let lift = |x: &'a Self| -> Cow<'a, Self> {
            if x.conductor == n {
                Cow::Borrowed(x)
            } else {
                Cow::Owned(x.embed(n).expect("lcm is a multiple"))
            }
        };
        (lift(a), lift(b), n)
    }

    /// Field equality across conductors.
    pub fn same_value(&self, other: &Self) -> bool {
        let (a, b, _) = Self::aligned(self, other);
        a.coeffs == b.coeffs
    }

    /// Image under the automorphism `ζₙ ↦ ζₙ^k`, `gcd(k, n) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor as i64;
        let mut v = vec![Rational::zero(); n as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            let idx = (j as i64 * k).rem_euclid(n) as usize;
            v[idx] = &v[idx] + c;
        }
        Self::from_coeffs(self.conductor, v)
    }

    /// Complex conjugate, `ζₙ ↦ ζₙ⁻¹`.
    pub fn conjugate(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold((0.0, 0.0), |(re, im), (j, c)| {
                let theta = std::f64::consts::TAU * j as f64 / n;
                let x = c.to_f64();
                (re + x * theta.cos(), im + x * theta.sin())
            })
    }

    pub fn classify(&self) -> Classification {
        let rational_value = self.rational_value();
        Classification {
            is_rational: rational_value.is_some(),
            is_integer: rational_value.as_ref().is_some_and(Rational::is_integer),
            rational_value,
            approx: self.to_complex(),
        }
    }

    /// Sign of the real part, decided exactly when rational and otherwise
    /// from a floating-point estimate with a certified error margin.
    /// Returns `None` if the estimate is too close to zero to decide.
    pub fn real_part_sign(&self) -> Option<Ordering> {
        let twice_re = self + &self.conjugate();
        if let Some(q) = twice_re.rational_value() {
            return Some(q.signum());
        }
        let (re, _) = twice_re.to_complex();
        let weight: f64 = twice_re.coeffs.iter().map(|c| c.abs().to_f64()).sum();
        let margin = weight * (twice_re.coeffs.len() as f64 + 4.0) * 1e-14;
        if re.abs() > margin {
            Some(re.partial_cmp(&0.0).expect("finite"))
        } else {
            None
        }
    }

    fn mul_fast(a: &[Rational], b: &[Rational], n: u32) -> Option<Vec<i128>> {
        let a = small_integers(a)?;
        let b = small_integers(b)?;
        let bound = a.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0)
            * b.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0);
        if bound > (1u128 << 90) {
            return None;
        }
        let mut v = vec![0i128; (a.len() + b.len()).saturating_sub(1).max(1)];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                v[i + j] += x * y;
            }
        }
        reduce_i128(n, v)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b, n) = Cyclotomic::aligned(self, rhs);
        Cyclotomic {
            conductor: n,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b, n) = Cyclotomic::aligned(self, rhs);
        Cyclotomic {
            conductor: n,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b, n) = Cyclotomic::aligned(self, rhs);
        if let Some(v) = Cyclotomic::mul_fast(&a.coeffs, &b.coeffs, n) {
            return Cyclotomic {
                conductor: n,
                coeffs: from_i128_vec(v),
            };
        }
        let mut v = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] = &v[i + j] + &(x * y);
                }
            }
        }
        Cyclotomic::from_coeffs(n, v)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_cyclo {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_cyclo!(Add, add);
forward_cyclo!(Sub, sub);
forward_cyclo!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Display for Cyclotomic {
    /// Prints a ζ-polynomial such as `1 + 2*z5^2 - z5^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.rational_value() {
            return write!(f, "{q}");
        }
        let n = self.conductor;
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.signum() == Ordering::Less;
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag == Rational::one();
            match (j, unit) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z{n}")?,
                (_, false) => write!(f, "{mag}*z{n}")?,
            }
            if j > 1 {
                write!(f, "^{j}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[{}]({self})", self.conductor)
    }
}

/// Serialized form: conductor plus `[numerator, denominator]` string pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicRepr {
    pub conductor: u32,
    pub coeffs: Vec<[String; 2]>,
}

impl From<&Cyclotomic> for CyclotomicRepr {
    fn from(c: &Cyclotomic) -> Self {
        Self {
            conductor: c.conductor,
            coeffs: c
                .coeffs
                .iter()
                .map(|q| [q.numer().to_string(), q.denom().to_string()])
                .collect(),
        }
    }
}

impl TryFrom<&CyclotomicRepr> for Cyclotomic {
    type Error = Error;
    fn try_from(r: &CyclotomicRepr) -> Result<Self> {
        let bad = |m: &str| Error::InvalidSpec(format!("serialized cyclotomic: {m}"));
        if r.conductor == 0 {
            return Err(bad("conductor must be positive"));
        }
        if r.coeffs.len() != euler_phi(r.conductor) {
            return Err(bad("coefficient count differs from φ(n)"));
        }
        let coeffs = r
            .coeffs
            .iter()
            .map(|[n, d]| {
                let n: BigInt = n.parse().map_err(|_| bad("numerator"))?;
                let d: BigInt = d.parse().map_err(|_| bad("denominator"))?;
                Rational::from_bigints(n, d).ok_or_else(|| bad("zero denominator"))
            })
            .collect::<Result<Vec<_>>>()?;
        // Re-reduce so that a hand-edited file still lands in canonical form.
        Ok(Self::from_coeffs(r.conductor, coeffs))
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CyclotomicRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CyclotomicRepr::deserialize(d)?;
        Cyclotomic::try_from(&repr).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).coeffs, vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2).coeffs, vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(6).coeffs, vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12).coeffs, vec![1, 0, -1, 0, 1]);
        // Φ₁₀₅ is the first with a coefficient of absolute value 2.
        assert!(cyclotomic_polynomial(105).coeffs.contains(&-2));
        for n in 1..200 {
            assert_eq!(cyclotomic_polynomial(n).degree, euler_phi(n));
        }
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(z(1, 0), Cyclotomic::one(1));
        assert_eq!(z(2, 1), Cyclotomic::integer(-1, 2));
        assert_eq!(&z(3, 1) + &z(3, 2), Cyclotomic::integer(-1, 3));
        assert_eq!(z(7, 7), Cyclotomic::one(7));
        assert_eq!(z(5, -1), z(5, 4));
    }

    #[test]
    fn rational_arithmetic() {
        let a = Rational::new(6, -4);
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!(&a + &Rational::new(3, 2), Rational::zero());
        assert_eq!(&a * &Rational::new(-2, 3), Rational::one());
        assert!(Rational::new(1, 3) < Rational::new(1, 2));
        let big = Rational::integer(i64::MAX);
        let sq = &big * &big;
        assert!(!matches!(sq.0, Repr::Small(..)));
        assert_eq!(&sq * &big.recip().unwrap(), big);
    }

    #[test]
    fn field_arithmetic_examples() {
        let s = &z(5, 1) + &z(5, 4);
        assert_eq!(s.conjugate(), s);
        // golden ratio τ = -(ζ₅² + ζ₅³) satisfies τ² = τ + 1
        let tau = -(&z(5, 2) + &z(5, 3));
        assert_eq!(&tau * &tau, &tau + &Cyclotomic::one(5));
        assert!((tau.to_complex().0 - 1.618_033_988_7).abs() < 1e-9);
        assert!(Cyclotomic::integer(1, 4).same_value(&Cyclotomic::integer(1, 9)));
        assert!((&Cyclotomic::one(1) + &Cyclotomic::integer(-1, 1)).is_zero());
    }

    #[test]
    fn embedding() {
        let m1 = Cyclotomic::integer(-1, 2);
        assert_eq!(m1.embed(6).unwrap(), Cyclotomic::integer(-1, 6));
        assert_eq!(z(3, 1).embed(6).unwrap(), z(6, 2));
        let s = &z(5, 1) + &z(5, 4);
        assert_eq!(s.embed(30).unwrap(), &z(30, 6) + &z(30, 24));
        assert_eq!(
            z(4, 1).embed(6).unwrap_err(),
            Error::ConductorMismatch { from: 4, to: 6 }
        );
    }

    #[test]
    fn classification() {
        let c = Cyclotomic::zero(7).classify();
        assert!(c.is_integer && c.rational_value == Some(Rational::zero()));
        let s = (&z(5, 1) + &z(5, 4)).classify();
        assert!(!s.is_rational);
        let expected = 2.0 * (std::f64::consts::TAU / 5.0).cos();
        assert!((s.approx.0 - expected).abs() < 1e-12 && s.approx.1.abs() < 1e-12);
    }

    #[test]
    fn real_part_sign() {
        assert_eq!(z(3, 1).real_part_sign(), Some(Ordering::Less));
        assert_eq!(z(4, 1).real_part_sign(), Some(Ordering::Equal));
        assert_eq!((&z(5, 2) + &z(5, 3)).real_part_sign(), Some(Ordering::Less));
        assert_eq!(
            (&z(5, 1) + &z(5, 4)).real_part_sign(),
            Some(Ordering::Greater)
        );
    }

    #[test]
    fn display() {
        assert_eq!(Cyclotomic::integer(-3, 5).to_string(), "-3");
        assert_eq!(z(5, 1).to_string(), "z5");
        assert_eq!((&z(5, 2) + &z(5, 2)).to_string(), "2*z5^2");
        // ζ₅⁴ = -1 - ζ₅ - ζ₅² - ζ₅³
        assert_eq!(z(5, 4).to_string(), "-1 - z5 - z5^2 - z5^3");
    }

    #[test]
    fn serde_round_trip() {
        let x = &z(12, 5).scale(&Rational::new(-7, 3)) + &Cyclotomic::integer(2, 12);
        let json = serde_json::to_string(&x).unwrap();
        let back: Cyclotomic = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }
}
