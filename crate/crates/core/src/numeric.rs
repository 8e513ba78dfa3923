//! Exact arithmetic over `Q` and the real quadratic field `Q(sqrt(D))`.
//!
//! Every irrational quantity that shows up in the region geometry lives in a
//! single field `Q(sqrt(D))` with `D = bc(bc - 4)`. [`QuadNum`] stores
//! `a + b*sqrt(D)` with rational `a`, `b` and the raw radicand `D`; signs and
//! comparisons are decided exactly by comparing `a^2` against `b^2 D`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The radicand `D` of `Q(sqrt(D))`: zero, or a positive non-square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Discriminant(u64);

impl Discriminant {
    /// `D = 0`: the field collapses to the rationals.
    pub const RATIONAL: Discriminant = Discriminant(0);

    pub fn new(value: u64) -> Result<Self> {
        if value != 0 {
            let r = value.sqrt();
            if r * r == value {
                return Err(Error::InvalidDiscriminant(value));
            }
        }
        Ok(Discriminant(value))
    }

    pub fn value(&self) -> u64 {
        self.0
    }

    pub fn is_rational(&self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Discriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sgn {
    Negative,
    Zero,
    Positive,
}

impl Sgn {
    pub fn of<T: Signed>(x: &T) -> Sgn {
        if x.is_zero() {
            Sgn::Zero
        } else if x.is_positive() {
            Sgn::Positive
        } else {
            Sgn::Negative
        }
    }

    pub fn to_ordering(self) -> Ordering {
        match self {
            Sgn::Negative => Ordering::Less,
            Sgn::Zero => Ordering::Equal,
            Sgn::Positive => Ordering::Greater,
        }
    }
}

/// An element `rat + coef * sqrt(disc)` of `Q(sqrt(disc))`.
///
/// When `disc` is zero the coefficient is always zero, so degenerate values
/// are plain rationals and compare structurally.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "QuadNumRepr", into = "QuadNumRepr")]
pub struct QuadNum {
    rat: Rational,
    coef: Rational,
    disc: Discriminant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl QuadNum {
    pub fn new(rat: Rational, coef: Rational, disc: Discriminant) -> Self {
        let coef = if disc.is_rational() { Rational::zero() } else { coef };
        QuadNum { rat, coef, disc }
    }

    pub fn from_rational(rat: Rational, disc: Discriminant) -> Self {
        QuadNum { rat, coef: Rational::zero(), disc }
    }

    pub fn from_int(n: i64, disc: Discriminant) -> Self {
        Self::from_rational(int(n), disc)
    }

    pub fn from_bigint(n: &BigInt, disc: Discriminant) -> Self {
        Self::from_rational(Rational::from_integer(n.clone()), disc)
    }

    pub fn zero(disc: Discriminant) -> Self {
        Self::from_int(0, disc)
    }

    pub fn one(disc: Discriminant) -> Self {
        Self::from_int(1, disc)
    }

    /// `sqrt(D)` itself (zero in the degenerate field).
    pub fn sqrt_disc(disc: Discriminant) -> Self {
        Self::new(Rational::zero(), Rational::one(), disc)
    }

    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    pub fn coef(&self) -> &Rational {
        &self.coef
    }

    pub fn disc(&self) -> Discriminant {
        self.disc
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.coef.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.coef.is_zero()
    }

    /// The rational value, if the `sqrt(D)` part vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.rat)
    }

    /// Galois conjugate `rat - coef * sqrt(D)`.
    pub fn conjugate(&self) -> Self {
        QuadNum { rat: self.rat.clone(), coef: -&self.coef, disc: self.disc }
    }

    /// Field norm `rat^2 - coef^2 D`.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - &self.coef * &self.coef * self.d_rat()
    }

    fn d_rat(&self) -> Rational {
        Rational::from_integer(BigInt::from(self.disc.0))
    }

    fn check(&self, other: &QuadNum) -> Result<()> {
        if self.disc != other.disc {
            Err(Error::DiscriminantMismatch(self.disc.0, other.disc.0))
        } else {
            Ok(())
        }
    }

    /// Exact field arithmetic with the discriminant and zero-divisor checks surfaced.
    pub fn try_binop(op: BinOp, x: &QuadNum, y: &QuadNum) -> Result<QuadNum> {
        x.check(y)?;
        let disc = x.disc;
        Ok(match op {
            BinOp::Add => QuadNum::new(&x.rat + &y.rat, &x.coef + &y.coef, disc),
            BinOp::Sub => QuadNum::new(&x.rat - &y.rat, &x.coef - &y.coef, disc),
            BinOp::Mul => {
                let d = x.d_rat();
                QuadNum::new(
                    &x.rat * &y.rat + &x.coef * &y.coef * d,
                    &x.rat * &y.coef + &x.coef * &y.rat,
                    disc,
                )
            }
            BinOp::Div => {
                if y.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let n = y.norm();
                let num = Self::try_binop(BinOp::Mul, x, &y.conjugate())?;
                QuadNum::new(num.rat / &n, num.coef / n, disc)
            }
        })
    }

    pub fn scale(&self, r: &Rational) -> QuadNum {
        QuadNum::new(&self.rat * r, &self.coef * r, self.disc)
    }

    pub fn scale_int(&self, k: i64) -> QuadNum {
        self.scale(&int(k))
    }

    pub fn add_rational(&self, r: &Rational) -> QuadNum {
        QuadNum { rat: &self.rat + r, coef: self.coef.clone(), disc: self.disc }
    }

    /// Exact sign, decided without floating point.
    pub fn sign(&self) -> Sgn {
        let sa = Sgn::of(&self.rat);
        let sb = Sgn::of(&self.coef);
        match (sa, sb) {
            (_, Sgn::Zero) => sa,
            (Sgn::Zero, _) => sb,
            (Sgn::Positive, Sgn::Positive) => Sgn::Positive,
            (Sgn::Negative, Sgn::Negative) => Sgn::Negative,
            (Sgn::Positive, Sgn::Negative) => {
                // a > 0 > b: sign of a^2 - b^2 D
                Sgn::of(&self.norm())
            }
            (Sgn::Negative, Sgn::Positive) => Sgn::of(&-self.norm()),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sgn::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sgn::Negative
    }

    pub fn abs(&self) -> QuadNum {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Largest integer `n <= self`.
    pub fn floor(&self) -> BigInt {
        let mut n = self.rat.floor().to_integer() + self.irrational_floor_estimate();
        loop {
            let nq = QuadNum::from_bigint(&n, self.disc);
            if (self - &nq).is_negative() {
                n -= 1;
                continue;
            }
            let next = QuadNum::from_bigint(&(&n + 1), self.disc);
            if !(self - &next).is_negative() {
                n += 1;
                continue;
            }
            return n;
        }
    }

    /// Smallest integer `n >= self`.
    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    // floor(coef * sqrt(D)) up to an error of a couple of units
    fn irrational_floor_estimate(&self) -> BigInt {
        if self.coef.is_zero() {
            return BigInt::zero();
        }
        let p = self.coef.numer();
        let q = self.coef.denom();
        let radicand: BigUint = (p * p).magnitude() * BigUint::from(self.disc.0);
        let root = BigInt::from(radicand.sqrt());
        let signed = if p.is_negative() { -root } else { root };
        signed.div_floor(q)
    }

    /// Decimal string with `digits` places after the point, rounded half-to-even.
    pub fn approx(&self, digits: usize) -> String {
        let scale = Rational::from_integer(BigInt::from(10u32).pow(digits as u32));
        let scaled = self.scale(&scale);
        let fl = scaled.floor();
        let frac = &scaled - &QuadNum::from_bigint(&fl, self.disc);
        let half = QuadNum::from_rational(rat(1, 2), self.disc);
        let rounded = match (&frac - &half).sign() {
            Sgn::Positive => fl + 1,
            Sgn::Negative => fl,
            Sgn::Zero => {
                if fl.is_odd() {
                    fl + 1
                } else {
                    fl
                }
            }
        };
        format_fixed(&rounded, digits)
    }

    /// Nearest `f64`, via a 20-digit decimal expansion.
    pub fn to_f64(&self) -> f64 {
        self.approx(20).parse().expect("decimal expansion parses as f64")
    }
}

fn format_fixed(n: &BigInt, digits: usize) -> String {
    let neg = n.is_negative();
    let mut s = n.magnitude().to_string();
    if digits > 0 {
        if s.len() <= digits {
            s = "0".repeat(digits + 1 - s.len()) + &s;
        }
        s.insert(s.len() - digits, '.');
    }
    if neg {
        s.insert(0, '-');
    }
    s
}

impl PartialOrd for QuadNum {
    /// `None` when the discriminants differ.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.disc != other.disc {
            return None;
        }
        Some((self - other).sign().to_ordering())
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coef.is_zero() {
            return write!(f, "{}", self.rat);
        }
        let root = format!("sqrt({})", self.disc.0);
        let coef_abs = self.coef.abs();
        let tail = if coef_abs.is_one() { root } else { format!("{}*{}", coef_abs, root) };
        if self.rat.is_zero() {
            if self.coef.is_negative() {
                write!(f, "-{}", tail)
            } else {
                write!(f, "{}", tail)
            }
        } else {
            let op = if self.coef.is_negative() { '-' } else { '+' };
            write!(f, "{} {} {}", self.rat, op, tail)
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $op:expr) => {
        impl<'a> $tr<&'a QuadNum> for &'a QuadNum {
            type Output = QuadNum;
            /// Panics if the discriminants differ (or on division by zero).
            fn $method(self, rhs: &'a QuadNum) -> QuadNum {
                match QuadNum::try_binop($op, self, rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("QuadNum arithmetic: {}", e),
                }
            }
        }
        impl $tr<QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: QuadNum) -> QuadNum {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: &'a QuadNum) -> QuadNum {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<QuadNum> for &'a QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: QuadNum) -> QuadNum {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, BinOp::Add);
forward_binop!(Sub, sub, BinOp::Sub);
forward_binop!(Mul, mul, BinOp::Mul);
forward_binop!(Div, div, BinOp::Div);

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum { rat: -&self.rat, coef: -&self.coef, disc: self.disc }
    }
}

impl Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct QuadNumRepr {
    rat: [String; 2],
    coef: [String; 2],
    disc: String,
}

fn rational_parts(r: &Rational) -> [String; 2] {
    [r.numer().to_string(), r.denom().to_string()]
}

fn parse_rational(parts: &[String; 2]) -> Result<Rational> {
    let n: BigInt = parts[0].parse().map_err(|e| Error::Parse(format!("{}: {:?}", parts[0], e)))?;
    let d: BigInt = parts[1].parse().map_err(|e| Error::Parse(format!("{}: {:?}", parts[1], e)))?;
    if !d.is_positive() {
        return Err(Error::Parse(format!("denominator {} is not positive", d)));
    }
    Ok(Rational::new(n, d))
}

impl From<QuadNum> for QuadNumRepr {
    fn from(q: QuadNum) -> Self {
        QuadNumRepr {
            rat: rational_parts(&q.rat),
            coef: rational_parts(&q.coef),
            disc: q.disc.0.to_string(),
        }
    }
}

impl TryFrom<QuadNumRepr> for QuadNum {
    type Error = Error;

    fn try_from(r: QuadNumRepr) -> Result<Self> {
        let disc: u64 = r.disc.parse().map_err(|_| Error::Parse(format!("discriminant {}", r.disc)))?;
        let disc = Discriminant::new(disc)?;
        let coef = parse_rational(&r.coef)?;
        if disc.is_rational() && !coef.is_zero() {
            return Err(Error::Parse("nonzero sqrt coefficient with zero discriminant".into()));
        }
        Ok(QuadNum::new(parse_rational(&r.rat)?, coef, disc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d12() -> Discriminant {
        Discriminant::new(12).unwrap()
    }

    fn q(a: i64, b: i64) -> QuadNum {
        QuadNum::new(int(a), int(b), d12())
    }

    #[test]
    fn binop_examples() {
        assert_eq!(q(1, 1) + q(2, -1), q(3, 0));
        assert_eq!(q(1, 1) * q(1, -1), q(-11, 0));
        let half = QuadNum::new(int(3), rat(1, 2), d12());
        assert_eq!(q(6, 1) / q(2, 0), half);
    }

    #[test]
    fn binop_errors() {
        let other = QuadNum::from_int(1, Discriminant::new(5).unwrap());
        assert_eq!(
            QuadNum::try_binop(BinOp::Add, &q(1, 0), &other),
            Err(Error::DiscriminantMismatch(12, 5))
        );
        assert_eq!(QuadNum::try_binop(BinOp::Div, &q(1, 0), &q(0, 0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(q(6, -1).sign(), Sgn::Positive);
        assert_eq!(q(2, -1).sign(), Sgn::Negative);
        assert_eq!(q(0, 0).sign(), Sgn::Zero);
        assert_eq!(q(-4, 1).sign(), Sgn::Negative);
        assert_eq!(q(-3, 1).sign(), Sgn::Positive);
    }

    #[test]
    fn approx_examples() {
        assert_eq!(QuadNum::sqrt_disc(d12()).approx(6), "3.464102");
        assert_eq!(QuadNum::from_rational(rat(1, 3), d12()).approx(4), "0.3333");
        assert_eq!((q(6, 1) / q(4, 0)).approx(6), "2.366025");
        assert_eq!(q(-6, 1).approx(3), "-2.536");
        assert_eq!(QuadNum::from_rational(rat(-1, 1000), d12()).approx(2), "0.00");
        assert_eq!(QuadNum::from_rational(rat(-3, 100), d12()).approx(1), "0.0");
        assert_eq!(QuadNum::from_rational(rat(-7, 100), d12()).approx(1), "-0.1");
        assert_eq!(q(7, 0).approx(0), "7");
    }

    #[test]
    fn approx_rounds_half_to_even() {
        let d = Discriminant::RATIONAL;
        assert_eq!(QuadNum::from_rational(rat(5, 2), d).approx(0), "2");
        assert_eq!(QuadNum::from_rational(rat(7, 2), d).approx(0), "4");
        assert_eq!(QuadNum::from_rational(rat(1, 8), d).approx(2), "0.12");
        assert_eq!(QuadNum::from_rational(rat(3, 8), d).approx(2), "0.38");
        assert_eq!(QuadNum::from_rational(rat(-5, 2), d).approx(0), "-2");
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(q(0, 1).floor(), BigInt::from(3));
        assert_eq!(q(0, -1).floor(), BigInt::from(-4));
        assert_eq!(q(0, -1).ceil(), BigInt::from(-3));
        assert_eq!(q(5, 0).floor(), BigInt::from(5));
        assert_eq!(q(5, 0).ceil(), BigInt::from(5));
        let big = QuadNum::new(rat(1, 7), rat(-1000001, 3), d12());
        let f = big.to_f64();
        assert_eq!(big.floor(), BigInt::from(f.floor() as i64));
    }

    #[test]
    fn degenerate_discriminant_collapses() {
        let z = QuadNum::new(int(1), int(5), Discriminant::RATIONAL);
        assert!(z.is_rational());
        assert_eq!(z, QuadNum::from_int(1, Discriminant::RATIONAL));
    }

    #[test]
    fn discriminant_rejects_squares() {
        assert!(Discriminant::new(16).is_err());
        assert!(Discriminant::new(0).is_ok());
        assert!(Discriminant::new(12).is_ok());
    }

    #[test]
    fn bc_above_four_never_gives_square_discriminant() {
        for bc in 5u64..2000 {
            assert!(Discriminant::new(bc * (bc - 4)).is_ok(), "bc = {}", bc);
        }
    }

    #[test]
    fn json_shape() {
        let x = QuadNum::new(rat(-3, 2), rat(1, 4), d12());
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"rat":["-3","2"],"coef":["1","4"],"disc":"12"}"#);
        let back: QuadNum = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<QuadNum>(r#"{"rat":["1","0"],"coef":["0","1"],"disc":"12"}"#).is_err());
        assert!(serde_json::from_str::<QuadNum>(r#"{"rat":["1","1"],"coef":["1","1"],"disc":"0"}"#).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(q(1, -1).to_string(), "1 - sqrt(12)");
        assert_eq!(QuadNum::new(int(0), rat(3, 2), d12()).to_string(), "3/2*sqrt(12)");
        assert_eq!(q(-2, 0).to_string(), "-2");
    }

    fn arb_quad() -> impl Strategy<Value = QuadNum> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20)
            .prop_map(|(a, da, b, db)| QuadNum::new(rat(a, da), rat(b, db), Discriminant::new(45).unwrap()))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_quad(), y in arb_quad(), z in arb_quad()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            if !y.is_zero() {
                prop_assert_eq!(&(&x / &y) * &y, x.clone());
            }
        }

        #[test]
        fn order_is_compatible(x in arb_quad(), y in arb_quad(), z in arb_quad()) {
            if x < y {
                prop_assert!(&x + &z < &y + &z);
                if z.is_positive() {
                    prop_assert!(&x * &z < &y * &z);
                }
                if y < z {
                    prop_assert!(x < z);
                }
            }
        }

        #[test]
        fn sign_matches_decimal(x in arb_quad()) {
            let s = x.approx(30);
            let expected = if x.is_zero() { Sgn::Zero } else if s.starts_with('-') { Sgn::Negative } else { Sgn::Positive };
            prop_assert_eq!(x.sign(), expected);
        }
    }
}
