//! Exact arithmetic in the eighth cyclotomic field.
//!
//! Every entry of the Pauli matrices, the Hadamard, phase and controlled-Z
//! gates, and all of their products lies in the subring `Z[ζ, 1/2]` where
//! `ζ = e^{iπ/4}`. Elements are stored over the basis `{1, ζ, ζ², ζ³}` with
//! dyadic rational coefficients, reduced eagerly with `ζ⁴ = −1`, so two
//! values are equal exactly when their coefficient vectors are equal.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Arbitrary precision integer with an inline fast path.
///
/// Canonical: the `Small` variant is used whenever the value fits in an
/// `i64`, so derived equality and hashing agree with numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
enum Int {
    Small(i64),
    Big(Box<BigInt>),
}

impl Int {
    const ZERO: Int = Int::Small(0);

    fn from_i128(v: i128) -> Int {
        match i64::try_from(v) {
            Ok(s) => Int::Small(s),
            Err(_) => Int::Big(Box::new(BigInt::from(v))),
        }
    }

    fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(s) => Int::Small(s),
            None => Int::Big(Box::new(b)),
        }
    }

    fn to_big(&self) -> BigInt {
        match self {
            Int::Small(s) => BigInt::from(*s),
            Int::Big(b) => (**b).clone(),
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    fn signum(&self) -> i32 {
        match self {
            Int::Small(s) => s.signum() as i32,
            Int::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    /// Trailing zero bits; `u32::MAX` for zero.
    fn trailing_zeros(&self) -> u32 {
        match self {
            Int::Small(0) => u32::MAX,
            Int::Small(s) => s.trailing_zeros(),
            Int::Big(b) => b.trailing_zeros().map_or(u32::MAX, |t| t as u32),
        }
    }

    fn shl(&self, k: u32) -> Int {
        if k == 0 {
            return self.clone();
        }
        if let Int::Small(s) = self {
            let bits = 64 - s.unsigned_abs().leading_zeros();
            if bits + k < 126 {
                return Int::from_i128((*s as i128) << k);
            }
        }
        Int::from_big(self.to_big() << k as usize)
    }

    /// Exact division by `2^k`; caller guarantees divisibility.
    fn shr_exact(&self, k: u32) -> Int {
        match self {
            Int::Small(s) => Int::Small(s >> k),
            Int::Big(b) => Int::from_big(&**b >> k as usize),
        }
    }

    fn add(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => Int::from_i128(*a as i128 + *b as i128),
            _ => Int::from_big(self.to_big() + other.to_big()),
        }
    }

    fn mul(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => Int::from_i128(*a as i128 * *b as i128),
            _ => Int::from_big(self.to_big() * other.to_big()),
        }
    }

    fn neg(&self) -> Int {
        match self {
            Int::Small(s) => Int::from_i128(-(*s as i128)),
            Int::Big(b) => Int::from_big(-(**b).clone()),
        }
    }

    /// Value as `i64` if it has at most `bits` significant bits.
    fn small_within(&self, bits: u32) -> Option<i64> {
        match self {
            Int::Small(s) if 64 - s.unsigned_abs().leading_zeros() <= bits => Some(*s),
            _ => None,
        }
    }

    fn to_f64(&self) -> f64 {
        match self {
            Int::Small(s) => *s as f64,
            Int::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(s) => write!(f, "{s}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

/// A rational number `numerator / 2^exponent`.
///
/// Canonical form: when the exponent is positive the numerator is odd, and
/// zero is stored as `0 / 2^0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: Int,
    exp: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: Int::ZERO, exp: 0 };

    fn from_parts(num: Int, exp: u32) -> Dyadic {
        if num.is_zero() {
            return Dyadic::ZERO;
        }
        let tz = num.trailing_zeros().min(exp);
        if tz == 0 {
            Dyadic { num, exp }
        } else {
            Dyadic { num: num.shr_exact(tz), exp: exp - tz }
        }
    }

    fn from_i128(v: i128, exp: u32) -> Dyadic {
        if v == 0 {
            return Dyadic::ZERO;
        }
        let tz = v.trailing_zeros().min(exp);
        Dyadic { num: Int::from_i128(v >> tz), exp: exp - tz }
    }

    pub fn from_int(v: i64) -> Dyadic {
        Dyadic { num: Int::Small(v), exp: 0 }
    }

    /// `numerator / 2^exponent`, canonicalized.
    pub fn new(numerator: i64, exponent: u32) -> Dyadic {
        Dyadic::from_parts(Int::Small(numerator), exponent)
    }

    pub fn from_bigint(numerator: BigInt, exponent: u32) -> Dyadic {
        Dyadic::from_parts(Int::from_big(numerator), exponent)
    }

    pub fn numerator(&self) -> BigInt {
        self.num.to_big()
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when re-canonicalizing would leave the value unchanged.
    pub fn is_canonical(&self) -> bool {
        if self.num.is_zero() {
            return self.exp == 0;
        }
        let small_ok = match &self.num {
            Int::Small(_) => true,
            Int::Big(b) => b.to_i64().is_none(),
        };
        small_ok && (self.exp == 0 || self.num.trailing_zeros() == 0)
    }

    pub fn half(&self) -> Dyadic {
        Dyadic::from_parts(self.num.clone(), self.exp + 1)
    }

    pub fn to_f64(&self) -> f64 {
        self.num.to_f64() / 2f64.powi(self.exp as i32)
    }

    fn aligned_sum(&self, other: &Dyadic, negate_other: bool) -> Dyadic {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate_other { -other } else { other.clone() };
        }
        let e = self.exp.max(other.exp);
        let a = self.num.shl(e - self.exp);
        let mut b = other.num.shl(e - other.exp);
        if negate_other {
            b = b.neg();
        }
        Dyadic::from_parts(a.add(&b), e)
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Dyadic> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid dyadic rational {s:?}"));
        let (num, exp) = match s.split_once('/') {
            Some((n, d)) => {
                let e = d.trim().strip_prefix("2^").ok_or_else(bad)?;
                (n.trim(), e.parse::<u32>().map_err(|_| bad())?)
            }
            None => (s, 0),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        Ok(Dyadic::from_bigint(num, exp))
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        self.aligned_sum(rhs, false)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self.aligned_sum(rhs, true)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() || rhs.is_zero() {
            return Dyadic::ZERO;
        }
        // product of canonical values: only an even integer factor can
        // leave trailing zeros, from_parts strips them.
        Dyadic::from_parts(self.num.mul(&rhs.num), self.exp + rhs.exp)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { num: self.num.neg(), exp: self.exp }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Dyadic) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Dyadic) -> Ordering {
        (self - other).num.signum().cmp(&0)
    }
}

/// An element `c0 + c1·ζ + c2·ζ² + c3·ζ³` of `Q(ζ₈)` with dyadic coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclo8 {
    c: [Dyadic; 4],
}

impl Hash for Cyclo8 {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for d in &self.c {
            d.hash(state);
        }
    }
}

/// Coefficients above this many bits leave the `i128` fast path.
pub(crate) const FAST_BITS: u32 = 58;

impl Cyclo8 {
    pub fn zero() -> Cyclo8 {
        Cyclo8 { c: [Dyadic::ZERO, Dyadic::ZERO, Dyadic::ZERO, Dyadic::ZERO] }
    }

    pub fn one() -> Cyclo8 {
        Cyclo8::from_int(1)
    }

    pub fn from_int(v: i64) -> Cyclo8 {
        Cyclo8::from_coeffs([Dyadic::from_int(v), Dyadic::ZERO, Dyadic::ZERO, Dyadic::ZERO])
    }

    pub fn from_dyadic(d: Dyadic) -> Cyclo8 {
        Cyclo8::from_coeffs([d, Dyadic::ZERO, Dyadic::ZERO, Dyadic::ZERO])
    }

    pub fn from_coeffs(c: [Dyadic; 4]) -> Cyclo8 {
        Cyclo8 { c }
    }

    /// Build from integer numerators sharing one power-of-two denominator.
    pub fn from_ints(c: [i64; 4], exponent: u32) -> Cyclo8 {
        Cyclo8 { c: c.map(|v| Dyadic::new(v, exponent)) }
    }

    pub fn coeffs(&self) -> &[Dyadic; 4] {
        &self.c
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Cyclo8 {
        let k = k.rem_euclid(8) as usize;
        let mut c = [0i64; 4];
        if k < 4 {
            c[k] = 1;
        } else {
            c[k - 4] = -1;
        }
        Cyclo8::from_ints(c, 0)
    }

    pub fn i() -> Cyclo8 {
        Cyclo8::zeta_pow(2)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Dyadic::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Cyclo8::one()
    }

    pub fn is_canonical(&self) -> bool {
        self.c.iter().all(Dyadic::is_canonical)
    }

    /// The rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Dyadic> {
        self.c[1..].iter().all(Dyadic::is_zero).then_some(&self.c[0])
    }

    /// Complex conjugation, `ζ ↦ ζ⁻¹ = −ζ³`.
    pub fn conjugate(&self) -> Cyclo8 {
        Cyclo8 { c: [self.c[0].clone(), -&self.c[3], -&self.c[2], -&self.c[1]] }
    }

    pub fn half(&self) -> Cyclo8 {
        Cyclo8 { c: [self.c[0].half(), self.c[1].half(), self.c[2].half(), self.c[3].half()] }
    }

    pub fn pow(&self, mut e: u32) -> Cyclo8 {
        let mut base = self.clone();
        let mut acc = Cyclo8::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Injective byte encoding of the canonical form.
    pub fn hash_key(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(32);
        for d in &self.c {
            out.extend_from_slice(&d.exp.to_le_bytes());
            let (sign, mag) = d.num.to_big().to_bytes_le();
            out.push(match sign {
                num_bigint::Sign::Minus => 0,
                num_bigint::Sign::NoSign => 1,
                num_bigint::Sign::Plus => 2,
            });
            out.extend_from_slice(&(mag.len() as u32).to_le_bytes());
            out.extend_from_slice(&mag);
        }
        out
    }

    /// Floating point approximation `(re, im)`, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let basis = [(1.0, 0.0), (h, h), (0.0, 1.0), (-h, h)];
        self.c.iter().zip(basis).fold((0.0, 0.0), |(re, im), (d, (br, bi))| {
            let v = d.to_f64();
            (re + v * br, im + v * bi)
        })
    }

    /// Common-denominator integer form: `(E, n)` with `c_k = n_k / 2^E`.
    /// `None` when a coefficient leaves the fast-path bit budget.
    pub(crate) fn scaled_parts<'a, I>(items: I) -> Option<(u32, Vec<[i64; 4]>)>
    where
        I: IntoIterator<Item = &'a Cyclo8> + Clone,
    {
        let e = items.clone().into_iter().flat_map(|x| x.c.iter().map(|d| d.exp)).max().unwrap_or(0);
        let mut out = Vec::new();
        for x in items {
            let mut row = [0i64; 4];
            for (slot, d) in row.iter_mut().zip(&x.c) {
                let v = d.num.small_within(FAST_BITS)?;
                let shift = e - d.exp;
                if v != 0 && 64 - v.unsigned_abs().leading_zeros() + shift > FAST_BITS {
                    return None;
                }
                *slot = v << shift;
            }
            out.push(row);
        }
        Some((e, out))
    }

    pub(crate) fn from_scaled(sums: [i128; 4], exp: u32) -> Cyclo8 {
        Cyclo8 { c: sums.map(|v| Dyadic::from_i128(v, exp)) }
    }

    /// Accumulate `a·b` into `acc` with `ζ⁴ = −1` reduction.
    #[inline]
    pub(crate) fn mul_acc(acc: &mut [i128; 4], a: &[i64; 4], b: &[i64; 4]) {
        for i in 0..4 {
            if a[i] == 0 {
                continue;
            }
            let ai = a[i] as i128;
            for j in 0..4 {
                let p = ai * b[j] as i128;
                let k = i + j;
                if k < 4 {
                    acc[k] += p;
                } else {
                    acc[k - 4] -= p;
                }
            }
        }
    }

    fn mul_slow(&self, rhs: &Cyclo8) -> Cyclo8 {
        let mut out = Cyclo8::zero();
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                let p = &self.c[i] * &rhs.c[j];
                let k = i + j;
                if k < 4 {
                    out.c[k] = &out.c[k] + &p;
                } else {
                    out.c[k - 4] = &out.c[k - 4] - &p;
                }
            }
        }
        out
    }
}

/// Primitive `k`-th root of unity for `k ∈ {1, 2, 4, 8}`.
pub fn root_of_unity(k: u32) -> Result<Cyclo8> {
    match k {
        1 => Ok(Cyclo8::one()),
        2 => Ok(Cyclo8::from_int(-1)),
        4 => Ok(Cyclo8::zeta_pow(2)),
        8 => Ok(Cyclo8::zeta_pow(1)),
        _ => Err(Error::InvalidRootOrder(k)),
    }
}

/// `√2 = ζ − ζ³`.
pub fn sqrt2() -> Cyclo8 {
    Cyclo8::from_ints([0, 1, 0, -1], 0)
}

/// `1/√2 = (ζ − ζ³)/2`.
pub fn inv_sqrt2() -> Cyclo8 {
    Cyclo8::from_ints([0, 1, 0, -1], 1)
}

impl Add for &Cyclo8 {
    type Output = Cyclo8;
    fn add(self, rhs: &Cyclo8) -> Cyclo8 {
        Cyclo8 {
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
                &self.c[3] + &rhs.c[3],
            ],
        }
    }
}

impl Sub for &Cyclo8 {
    type Output = Cyclo8;
    fn sub(self, rhs: &Cyclo8) -> Cyclo8 {
        Cyclo8 {
            c: [
                &self.c[0] - &rhs.c[0],
                &self.c[1] - &rhs.c[1],
                &self.c[2] - &rhs.c[2],
                &self.c[3] - &rhs.c[3],
            ],
        }
    }
}

impl Neg for &Cyclo8 {
    type Output = Cyclo8;
    fn neg(self) -> Cyclo8 {
        Cyclo8 { c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]] }
    }
}

impl Mul for &Cyclo8 {
    type Output = Cyclo8;
    fn mul(self, rhs: &Cyclo8) -> Cyclo8 {
        if let Some((e, parts)) = Cyclo8::scaled_parts([self, rhs]) {
            let mut acc = [0i128; 4];
            Cyclo8::mul_acc(&mut acc, &parts[0], &parts[1]);
            return Cyclo8::from_scaled(acc, 2 * e);
        }
        self.mul_slow(rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $t:ty) => {
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add, Cyclo8);
forward_owned!(Sub, sub, Cyclo8);
forward_owned!(Mul, mul, Cyclo8);
forward_owned!(Add, add, Dyadic);
forward_owned!(Sub, sub, Dyadic);
forward_owned!(Mul, mul, Dyadic);

impl Neg for Cyclo8 {
    type Output = Cyclo8;
    fn neg(self) -> Cyclo8 {
        -&self
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        -&self
    }
}

impl fmt::Display for Cyclo8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·ζ + {}·ζ² + {}·ζ³", self.c[0], self.c[1], self.c[2], self.c[3])
    }
}

impl fmt::Debug for Cyclo8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Cyclo8 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Cyclo8> {
        let terms: Vec<&str> = s.split(" + ").collect();
        if terms.len() != 4 {
            return Err(Error::Parse(format!("expected 4 terms in {s:?}")));
        }
        let suffixes = ["", "·ζ", "·ζ²", "·ζ³"];
        let mut c = [Dyadic::ZERO, Dyadic::ZERO, Dyadic::ZERO, Dyadic::ZERO];
        for (k, (term, suffix)) in terms.iter().zip(suffixes).enumerate() {
            let body = if suffix.is_empty() {
                *term
            } else {
                term.strip_suffix(suffix)
                    .ok_or_else(|| Error::Parse(format!("term {term:?} lacks {suffix:?}")))?
            };
            c[k] = body.parse()?;
        }
        Ok(Cyclo8 { c })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(n: i64, e: u32) -> Dyadic {
        Dyadic::new(n, e)
    }

    #[test]
    fn dyadic_canonical_form() {
        assert_eq!(d(4, 2), d(1, 0));
        assert_eq!(d(6, 1), d(3, 0));
        assert_eq!(d(0, 5), Dyadic::ZERO);
        assert_eq!(d(2, 0).exponent(), 0);
        assert!(d(12, 3).is_canonical());
        assert_eq!(d(12, 3).exponent(), 1);
        assert_eq!(&d(1, 1) + &d(1, 1), d(1, 0));
        assert_eq!(&d(3, 2) - &d(3, 2), Dyadic::ZERO);
    }

    #[test]
    fn sqrt2_squares_to_two() {
        // (ζ − ζ³)² = ζ² − 2ζ⁴ + ζ⁶ = ζ² + 2 − ζ² = 2
        assert_eq!(sqrt2().coeffs(), Cyclo8::from_ints([0, 1, 0, -1], 0).coeffs());
        assert_eq!(&sqrt2() * &sqrt2(), Cyclo8::from_int(2));
        assert_eq!(&inv_sqrt2() * &sqrt2(), Cyclo8::one());
        assert_eq!(sqrt2().conjugate(), sqrt2());
    }

    #[test]
    fn zeta_fourth_power_is_minus_one() {
        let z = root_of_unity(8).unwrap();
        let z4 = &(&(&z * &z) * &z) * &z;
        assert_eq!(z4, Cyclo8::from_int(-1));
        assert_eq!(z.pow(8), Cyclo8::one());
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(root_of_unity(2).unwrap(), Cyclo8::from_int(-1));
        assert_eq!(root_of_unity(4).unwrap(), Cyclo8::from_ints([0, 0, 1, 0], 0));
        assert_eq!(root_of_unity(1).unwrap(), Cyclo8::one());
        for k in [1u32, 2, 4, 8] {
            let r = root_of_unity(k).unwrap();
            let order = (1..=8).find(|&m| r.pow(m).is_one()).unwrap();
            assert_eq!(order, k);
        }
        for k in [0u32, 3, 5, 16] {
            assert_eq!(root_of_unity(k), Err(Error::InvalidRootOrder(k)));
        }
    }

    #[test]
    fn additive_inverse() {
        let x = Cyclo8::from_coeffs([d(3, 1), d(1, 0), Dyadic::ZERO, Dyadic::ZERO]);
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn conjugation() {
        let i = Cyclo8::i();
        assert_eq!(i.conjugate(), -&i);
        // ζ̄ = −ζ³ and ζ·(−ζ³) = 1
        let z = Cyclo8::zeta_pow(1);
        assert_eq!(z.conjugate(), -&Cyclo8::zeta_pow(3));
        assert_eq!(&z * &z.conjugate(), Cyclo8::one());
        let q = Cyclo8::from_dyadic(d(5, 2));
        assert_eq!(q.conjugate(), q);
    }

    #[test]
    fn hash_keys() {
        assert_eq!(Cyclo8::zero().hash_key(), Cyclo8::zero().hash_key());
        assert_eq!(Cyclo8::zero().hash_key(), Cyclo8::from_ints([0, 0, 0, 0], 7).hash_key());
        let a = &Cyclo8::one() + &Cyclo8::zeta_pow(1);
        let b = &Cyclo8::one() - &Cyclo8::zeta_pow(1);
        assert_ne!(a.hash_key(), b.hash_key());
    }

    #[test]
    fn display_round_trip() {
        let x = Cyclo8::from_coeffs([d(-3, 2), d(1, 0), Dyadic::ZERO, d(5, 7)]);
        let s = x.to_string();
        assert_eq!(s, "-3/2^2 + 1·ζ + 0·ζ² + 5/2^7·ζ³");
        assert_eq!(s.parse::<Cyclo8>().unwrap(), x);
    }

    #[test]
    fn big_numerators_stay_exact() {
        let x = Cyclo8::from_ints([1 << 40, 3, 0, -(1 << 50)], 0);
        let y = x.pow(5);
        let z = x.pow(4);
        assert_eq!(&z * &x, y);
        assert!(y.is_canonical());
        let back: Cyclo8 = y.to_string().parse().unwrap();
        assert_eq!(back, y);
    }

    #[test]
    fn complex_rendering() {
        let (re, im) = inv_sqrt2().to_complex();
        assert!((re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert!(im.abs() < 1e-12);
    }

    /// Elements of the subring generated by 1, i and 1/√2 with small words.
    fn ring_element() -> impl Strategy<Value = Cyclo8> {
        (-4i64..=4, -4i64..=4, 0u32..4, 0u32..4).prop_map(|(a, b, s, t)| {
            let part = &Cyclo8::from_int(a) + &(&Cyclo8::from_int(b) * &Cyclo8::i());
            &part * &(&inv_sqrt2().pow(s) + &Cyclo8::i().pow(t))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms(x in ring_element(), y in ring_element(), z in ring_element()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x + &y, &y + &x);
            let prod = &x * &y;
            prop_assert!(prod.is_canonical());
            prop_assert_eq!(x.mul_slow(&y), prod);
            prop_assert_eq!(x.conjugate().conjugate(), x.clone());
            prop_assert_eq!((&x * &y).conjugate(), &x.conjugate() * &y.conjugate());
            let norm = &x * &x.conjugate();
            prop_assert_eq!(norm.conjugate(), norm);
        }
    }
}
