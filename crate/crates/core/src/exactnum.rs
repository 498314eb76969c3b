//! Exact arithmetic in a single real quadratic field `Q(sqrt(n))`.
//!
//! A [`Scalar`] is `p + q*sqrt(n)` with `p, q` arbitrary-precision rationals and
//! `n` square-free. Rationals carry `n = 0`. Mixing two different radicands in
//! one operation is an error: every computation in this crate lives in one
//! field (rationals plus at most one of `sqrt(14)`, `sqrt(23)`, ...).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Trial-division bound used when reducing a radicand to square-free form.
const TRIAL_BOUND: u64 = 1_000_000;

/// An exact element `p + q*sqrt(n)` of a real quadratic field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    p: BigRational,
    q: BigRational,
    n: u64,
}

impl Scalar {
    /// Builds `p + q*sqrt(n)`, reducing `n` to square-free form.
    pub fn new(p: BigRational, q: BigRational, n: u64) -> Result<Scalar> {
        if q.is_zero() || n == 0 {
            return Ok(Scalar::rational(p));
        }
        let (s, m) = squarefree_split(&BigUint::from(n))?;
        let q = q * BigRational::from_integer(BigInt::from(s));
        if m == 1 {
            return Ok(Scalar::rational(p + q));
        }
        Ok(Scalar { p, q, n: m })
    }

    pub fn rational(p: BigRational) -> Scalar {
        Scalar {
            p,
            q: BigRational::zero(),
            n: 0,
        }
    }

    pub fn int(v: i64) -> Scalar {
        Scalar::rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// The rational `num/den`. Panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Scalar {
        Scalar::rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero() -> Scalar {
        Scalar::int(0)
    }

    pub fn one() -> Scalar {
        Scalar::int(1)
    }

    /// `sqrt(n)` for a non-negative integer `n`.
    pub fn sqrt_int(n: u64) -> Result<Scalar> {
        Scalar::new(BigRational::zero(), BigRational::one(), n)
    }

    /// Exact square root of a non-negative rational scalar.
    pub fn sqrt_rational(x: &Scalar) -> Result<Scalar> {
        if !x.is_rational() {
            return Err(Error::Unsupported("square root of an irrational scalar".into()));
        }
        if x.p.is_negative() {
            return Err(Error::NegativeSqrt);
        }
        if x.p.is_zero() {
            return Ok(Scalar::zero());
        }
        // sqrt(u/v) = sqrt(u*v)/v
        let u = x.p.numer().magnitude().clone();
        let v = x.p.denom().magnitude().clone();
        let (s, m) = squarefree_split(&(u * &v))?;
        let coeff = BigRational::new(BigInt::from(s), BigInt::from(v));
        if m == 1 {
            Ok(Scalar::rational(coeff))
        } else {
            Ok(Scalar {
                p: BigRational::zero(),
                q: coeff,
                n: m,
            })
        }
    }

    pub fn p(&self) -> &BigRational {
        &self.p
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    /// Square-free radicand, `0` for rationals.
    pub fn radicand(&self) -> u64 {
        self.n
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.p.is_integer()
    }

    fn common_radicand(&self, other: &Scalar) -> Result<u64> {
        match (self.n, other.n) {
            (0, m) | (m, 0) => Ok(m),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(Error::IncompatibleRadicand(a, b)),
        }
    }

    fn build(p: BigRational, q: BigRational, n: u64) -> Scalar {
        if q.is_zero() {
            Scalar::rational(p)
        } else {
            Scalar { p, q, n }
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        let n = self.common_radicand(other)?;
        match (self.is_rational(), other.is_rational()) {
            (true, true) => Ok(Scalar::rational(&self.p + &other.p)),
            (true, false) => Ok(Scalar::build(&self.p + &other.p, other.q.clone(), n)),
            (false, true) => Ok(Scalar::build(&self.p + &other.p, self.q.clone(), n)),
            (false, false) => Ok(Scalar::build(&self.p + &other.p, &self.q + &other.q, n)),
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        let n = self.common_radicand(other)?;
        match (self.is_rational(), other.is_rational()) {
            (true, true) => Ok(Scalar::rational(&self.p - &other.p)),
            (true, false) => Ok(Scalar::build(&self.p - &other.p, -other.q.clone(), n)),
            (false, true) => Ok(Scalar::build(&self.p - &other.p, self.q.clone(), n)),
            (false, false) => Ok(Scalar::build(&self.p - &other.p, &self.q - &other.q, n)),
        }
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        let n = self.common_radicand(other)?;
        match (self.is_rational(), other.is_rational()) {
            (true, true) => return Ok(Scalar::rational(&self.p * &other.p)),
            (true, false) => return Ok(Scalar::build(&self.p * &other.p, &self.p * &other.q, n)),
            (false, true) => return Ok(Scalar::build(&self.p * &other.p, &self.q * &other.p, n)),
            (false, false) => {}
        }
        let nn = BigRational::from_integer(BigInt::from(n));
        let p = &self.p * &other.p + &self.q * &other.q * nn;
        let q = &self.p * &other.q + &self.q * &other.p;
        Ok(Scalar::build(p, q, n))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        if other.is_rational() {
            if other.p.is_zero() {
                return Err(Error::DivisionByZero);
            }
            self.common_radicand(other)?;
            return Ok(Scalar::build(&self.p / &other.p, &self.q / &other.p, self.n));
        }
        let inv = other.recip()?;
        self.try_mul(&inv)
    }

    /// Multiplicative inverse.
    pub fn recip(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Scalar::rational(self.p.recip()));
        }
        // 1/(p + q s) = (p - q s)/(p^2 - q^2 n); the norm is non-zero since n is no square.
        let nn = BigRational::from_integer(BigInt::from(self.n));
        let norm = &self.p * &self.p - &self.q * &self.q * nn;
        Ok(Scalar::build(&self.p / &norm, -(&self.q / &norm), self.n))
    }

    /// Galois conjugate `p - q*sqrt(n)`.
    pub fn conj(&self) -> Scalar {
        Scalar::build(self.p.clone(), -self.q.clone(), self.n)
    }

    /// Sign of the scalar, decided exactly.
    pub fn signum(&self) -> Ordering {
        let sp = sign_of(&self.p);
        let sq = sign_of(&self.q);
        match (sp, sq) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (a, b) if a == b => a,
            (a, _) => {
                // p and q*sqrt(n) have opposite signs: compare p^2 with q^2 n.
                let nn = BigRational::from_integer(BigInt::from(self.n));
                let lhs = &self.p * &self.p;
                let rhs = &self.q * &self.q * nn;
                match lhs.cmp(&rhs) {
                    Ordering::Greater => a,
                    Ordering::Less => a.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn try_cmp(&self, other: &Scalar) -> Result<Ordering> {
        if self.is_rational() && other.is_rational() {
            return Ok(self.p.cmp(&other.p));
        }
        Ok(self.try_sub(other)?.signum())
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut out = Scalar::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Largest integer not exceeding the scalar.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.p.floor().to_integer();
        }
        // Float estimate, then exact correction.
        let est = self.to_f64().floor();
        let mut k = BigInt::from(est as i64);
        loop {
            let ks = Scalar::rational(BigRational::from_integer(k.clone()));
            if ks > *self {
                k -= 1;
                continue;
            }
            let k1 = Scalar::rational(BigRational::from_integer(&k + 1));
            if k1 <= *self {
                k += 1;
                continue;
            }
            return k;
        }
    }

    /// Fractional part `x - floor(x)`.
    pub fn fract(&self) -> Scalar {
        self - &Scalar::rational(BigRational::from_integer(self.floor()))
    }

    pub fn to_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        if self.q.is_zero() {
            return p;
        }
        p + self.q.to_f64().unwrap_or(f64::NAN) * (self.n as f64).sqrt()
    }

    /// The rational part, if the scalar is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.p)
    }
}

fn sign_of(x: &BigRational) -> Ordering {
    if x.is_positive() {
        Ordering::Greater
    } else if x.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

/// Writes `x = s^2 * m` with `m` square-free.
///
/// Trial division up to [`TRIAL_BOUND`]; a cofactor below the cube of the bound
/// is either 1, a prime, a square of a prime, or a product of two distinct
/// primes, so its square-free part is decided exactly.
fn squarefree_split(x: &BigUint) -> Result<(BigUint, u64)> {
    if x.is_zero() {
        return Ok((BigUint::zero(), 0));
    }
    let mut rest = x.clone();
    let mut s = BigUint::one();
    let mut m = BigUint::one();
    let mut d: u64 = 2;
    while d <= TRIAL_BOUND {
        let dd = BigUint::from(d);
        if &dd * &dd > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % &dd).is_zero() {
            rest /= &dd;
            e += 1;
        }
        s *= dd.pow(e / 2);
        if e % 2 == 1 {
            m *= &dd;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        let bound = BigUint::from(TRIAL_BOUND);
        let r = rest.sqrt();
        if &r * &r == rest {
            s *= r;
        } else if rest < &bound * &bound * &bound {
            m *= rest;
        } else {
            return Err(Error::RadicandTooLarge);
        }
    }
    let m = m.to_u64().ok_or(Error::RadicandTooLarge)?;
    Ok((s, m))
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    /// Exact comparison. Panics when the radicands differ; use
    /// [`Scalar::try_cmp`] where that can happen.
    fn cmp(&self, other: &Self) -> Ordering {
        self.try_cmp(other).expect("comparison across incompatible radicands")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect(concat!("Scalar::", stringify!($method)))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::build(-self.p.clone(), -self.q.clone(), self.n)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Scalar {
        Scalar::int(v)
    }
}

impl From<BigInt> for Scalar {
    fn from(v: BigInt) -> Scalar {
        Scalar::rational(BigRational::from_integer(v))
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Scalar {
        Scalar::rational(v)
    }
}

fn fmt_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for Scalar {
    /// `a/b`, or `a/b+c/d*sqrt(n)`; parsed back by [`FromStr`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return f.write_str(&fmt_rational(&self.p));
        }
        let mut out = String::new();
        if !self.p.is_zero() {
            out.push_str(&fmt_rational(&self.p));
            if self.q.is_positive() {
                out.push('+');
            }
        }
        if self.q.is_one() {
            out.push_str(&format!("sqrt({})", self.n));
        } else if (-self.q.clone()).is_one() {
            out.push_str(&format!("-sqrt({})", self.n));
        } else {
            out.push_str(&format!("{}*sqrt({})", fmt_rational(&self.q), self.n));
        }
        f.write_str(&out)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((a, b)) => {
            let a = BigInt::from_str(a.trim()).ok()?;
            let b = BigInt::from_str(b.trim()).ok()?;
            if b.is_zero() {
                return None;
            }
            Some(BigRational::new(a, b))
        }
        None => Some(BigRational::from_integer(BigInt::from_str(s).ok()?)),
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `a`, `a/b`, `[a/b](+|-)[c/d*]sqrt(n)` and `[c/d*]sqrt(n)`.
    fn from_str(s: &str) -> Result<Scalar> {
        let err = || Error::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(idx) = t.find("sqrt(") else {
            return parse_rational(&t).map(Scalar::rational).ok_or_else(err);
        };
        let close = t[idx..].find(')').ok_or_else(err)? + idx;
        if close + 1 != t.len() {
            return Err(err());
        }
        let n: u64 = t[idx + 5..close].parse().map_err(|_| err())?;
        let head = &t[..idx];
        // Split the head into a rational part and the surd coefficient.
        let head = head.strip_suffix('*').unwrap_or(head);
        let split = head
            .char_indices()
            .rev()
            .find(|&(i, c)| (c == '+' || c == '-') && i > 0)
            .map(|(i, _)| i);
        let (rat, coeff) = match split {
            Some(i) => (&head[..i], &head[i..]),
            None => ("", head),
        };
        let p = if rat.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(rat).ok_or_else(err)?
        };
        let coeff = coeff.strip_prefix('+').unwrap_or(coeff);
        let q = match coeff {
            "" => BigRational::one(),
            "-" => -BigRational::one(),
            c => parse_rational(c).ok_or_else(err)?,
        };
        Scalar::new(p, q, n)
    }
}

impl Serialize for Scalar {
    /// The exact display string, e.g. `"-3/16"` or `"2-1/2*sqrt(14)"`.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Scalar, D::Error> {
        use serde::de::Error as _;
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(D::Error::custom)
    }
}

/// Shorthand used throughout the crate: parse a literal scalar.
///
/// Panics on malformed input, so only use it with literals.
pub fn s(text: &str) -> Scalar {
    text.parse().unwrap_or_else(|e| panic!("bad scalar literal {text:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sqrt14_over_two_below_two() {
        let x = s("1/2*sqrt(14)");
        assert!(x < Scalar::int(2));
        assert!(x > s("187/100"));
    }

    #[test]
    fn squarefree_reduction() {
        assert_eq!(Scalar::sqrt_int(8).unwrap(), s("2*sqrt(2)"));
        assert_eq!(Scalar::sqrt_int(16).unwrap(), Scalar::int(4));
        assert_eq!(Scalar::sqrt_rational(&s("7/2")).unwrap(), s("1/2*sqrt(14)"));
    }

    #[test]
    fn mixed_radicands_rejected() {
        let a = s("sqrt(14)");
        let b = s("sqrt(23)");
        assert_eq!(a.try_add(&b), Err(Error::IncompatibleRadicand(14, 23)));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(Scalar::one().try_div(&Scalar::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_display_roundtrip() {
        for t in ["3", "-3/7", "2-1/2*sqrt(14)", "sqrt(23)", "-sqrt(2)", "1/2+3/4*sqrt(5)"] {
            let x = s(t);
            assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x, "{t}");
        }
        assert_eq!(s("1/2+1/2*sqrt(23)").to_string(), "1/2+1/2*sqrt(23)");
    }

    #[test]
    fn floor_of_surds() {
        assert_eq!(s("2-1/2*sqrt(14)").floor(), BigInt::from(0));
        assert_eq!(s("-1/2*sqrt(14)").floor(), BigInt::from(-2));
        assert_eq!(s("-7/2").floor(), BigInt::from(-4));
    }

    #[test]
    fn serde_string_form() {
        let x = s("1/2+3*sqrt(8)");
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#""1/2+6*sqrt(2)""#);
        assert_eq!(serde_json::to_string(&s("-3/16")).unwrap(), r#""-3/16""#);
        let back: Scalar = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(a, b, c, d)| {
            Scalar::new(
                BigRational::new(a.into(), b.into()),
                BigRational::new(c.into(), d.into()),
                14,
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a.clone());
            }
        }

        #[test]
        fn order_matches_float(a in arb_scalar(), b in arb_scalar()) {
            let (fa, fb) = (a.to_f64(), b.to_f64());
            if (fa - fb).abs() > 1e-9 {
                prop_assert_eq!(a < b, fa < fb);
            }
            prop_assert_eq!(a == b, a.cmp(&b) == Ordering::Equal);
        }

        #[test]
        fn order_is_compatible_with_addition(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(a < b, &a + &c < &b + &c);
        }
    }
}
