//! Sparse Laurent polynomials in `x0, x1`, cluster variables and g-vectors.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::numeric::Rational;
use crate::{AlgebraParams, Error, Result};

/// Default bound on the number of terms an expansion may reach.
pub const DEFAULT_TERM_CAP: usize = 1_000_000;

/// Coefficient rings usable in [`LaurentPoly`].
pub trait Coefficient:
    Clone + Eq + fmt::Debug + fmt::Display + FromStr + Zero + One + Signed
{
    /// `self / other` when the quotient stays in the ring.
    fn div_exact(&self, other: &Self) -> Option<Self>;
}

impl Coefficient for BigInt {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(other);
        r.is_zero().then_some(q)
    }
}

impl Coefficient for Rational {
    fn div_exact(&self, other: &Self) -> Option<Self> {
        (!other.is_zero()).then(|| self / other)
    }
}

/// An exponent pair `(e0, e1)`, ordered graded-lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExponentVector {
    pub e0: i64,
    pub e1: i64,
}

impl ExponentVector {
    pub const ZERO: ExponentVector = ExponentVector { e0: 0, e1: 0 };

    pub fn new(e0: i64, e1: i64) -> Self {
        ExponentVector { e0, e1 }
    }

    fn key(&self) -> (i64, i64, i64) {
        (self.e0 + self.e1, self.e0, self.e1)
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for ExponentVector {
    type Output = ExponentVector;
    fn add(self, o: ExponentVector) -> ExponentVector {
        ExponentVector::new(self.e0 + o.e0, self.e1 + o.e1)
    }
}

impl Sub for ExponentVector {
    type Output = ExponentVector;
    fn sub(self, o: ExponentVector) -> ExponentVector {
        ExponentVector::new(self.e0 - o.e0, self.e1 - o.e1)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.e0, self.e1)
    }
}

/// A g-vector `(g0, g1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(i64, i64)", into = "(i64, i64)")]
pub struct GVector {
    pub g0: i64,
    pub g1: i64,
}

impl GVector {
    pub fn new(g0: i64, g1: i64) -> Self {
        GVector { g0, g1 }
    }

    pub fn is_zero(&self) -> bool {
        self.g0 == 0 && self.g1 == 0
    }
}

impl From<(i64, i64)> for GVector {
    fn from((g0, g1): (i64, i64)) -> Self {
        GVector { g0, g1 }
    }
}

impl From<GVector> for (i64, i64) {
    fn from(g: GVector) -> Self {
        (g.g0, g.g1)
    }
}

impl From<ExponentVector> for GVector {
    fn from(e: ExponentVector) -> Self {
        GVector::new(e.e0, e.e1)
    }
}

impl From<GVector> for ExponentVector {
    fn from(g: GVector) -> Self {
        ExponentVector::new(g.g0, g.g1)
    }
}

impl Add for GVector {
    type Output = GVector;
    fn add(self, o: GVector) -> GVector {
        GVector::new(self.g0 + o.g0, self.g1 + o.g1)
    }
}

impl fmt::Display for GVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.g0, self.g1)
    }
}

impl FromStr for GVector {
    type Err = Error;

    /// Accepts `a,b`, with or without surrounding parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t);
        let parts: Vec<&str> = t.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("expected two comma-separated integers, got {:?}", s)));
        }
        let parse = |p: &str| p.parse::<i64>().map_err(|e| Error::Parse(format!("{:?}: {}", p, e)));
        Ok(GVector::new(parse(parts[0])?, parse(parts[1])?))
    }
}

/// A Laurent polynomial with coefficients in `T`; no zero coefficient is ever stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly<T = BigInt> {
    terms: BTreeMap<ExponentVector, T>,
}

pub type RationalLaurent = LaurentPoly<Rational>;

impl<T: Coefficient> Default for LaurentPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Coefficient> LaurentPoly<T> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, T::one())
    }

    pub fn monomial(e0: i64, e1: i64, coef: T) -> Self {
        let mut p = Self::zero();
        p.add_term(ExponentVector::new(e0, e1), coef);
        p
    }

    pub fn x0() -> Self {
        Self::monomial(1, 0, T::one())
    }

    pub fn x1() -> Self {
        Self::monomial(0, 1, T::one())
    }

    /// Builds a polynomial from `(e0, e1, coef)` triples, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64, T)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e0, e1, c) in terms {
            p.add_term(ExponentVector::new(e0, e1), c);
        }
        p
    }

    fn add_term(&mut self, e: ExponentVector, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (graded-lexicographic ascending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &T)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e0: i64, e1: i64) -> T {
        self.terms.get(&ExponentVector::new(e0, e1)).cloned().unwrap_or_else(T::zero)
    }

    pub fn support(&self) -> BTreeSet<ExponentVector> {
        self.terms.keys().copied().collect()
    }

    pub fn scale(&self, k: &T) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.clone() * k.clone())).collect() }
    }

    /// Multiplication by `x0^e0 x1^e1`.
    pub fn shift(&self, e: ExponentVector) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (*k + e, c.clone())).collect() }
    }

    /// Product, refusing results with more than `cap` terms.
    pub fn checked_mul(&self, other: &Self, cap: usize) -> Result<Self> {
        let mut acc: HashMap<ExponentVector, T> = HashMap::with_capacity(self.len().max(other.len()));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = *ea + *eb;
                let prod = ca.clone() * cb.clone();
                match acc.get_mut(&e) {
                    Some(v) => *v = v.clone() + prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
            if acc.len() > cap {
                return Err(Error::TermCapExceeded { count: acc.len(), cap });
            }
        }
        let terms: BTreeMap<_, _> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if terms.len() > cap {
            return Err(Error::TermCapExceeded { count: terms.len(), cap });
        }
        Ok(LaurentPoly { terms })
    }

    pub fn checked_pow(&self, n: u32, cap: usize) -> Result<Self> {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.checked_mul(&base, cap)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.checked_mul(&base, cap)?;
            }
        }
        Ok(result)
    }

    pub fn pow(&self, n: u32) -> Self {
        self.checked_pow(n, usize::MAX).expect("uncapped power")
    }

    /// Componentwise minimum and maximum exponents.
    pub fn exponent_box(&self) -> Option<(ExponentVector, ExponentVector)> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        let (mut lo, mut hi) = (first, first);
        for e in it {
            lo = ExponentVector::new(lo.e0.min(e.e0), lo.e1.min(e.e1));
            hi = ExponentVector::new(hi.e0.max(e.e0), hi.e1.max(e.e1));
        }
        Some((lo, hi))
    }

    /// Exact quotient `self / q`, or [`Error::NotDivisible`].
    ///
    /// Peels leading terms in the graded-lex order. Every quotient exponent must
    /// stay within the box allowed by the Newton polygons, which bounds the loop.
    pub fn div_exact(&self, q: &Self) -> Result<Self> {
        let (&lead_q, lead_c) = q.terms.iter().next_back().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if q.len() == 1 {
            let mut terms = BTreeMap::new();
            for (e, c) in &self.terms {
                terms.insert(*e - lead_q, c.div_exact(lead_c).ok_or(Error::NotDivisible)?);
            }
            return Ok(LaurentPoly { terms });
        }
        let (plo, phi) = self.exponent_box().expect("nonzero");
        let (qlo, qhi) = q.exponent_box().expect("nonzero");
        let (lo, hi) = (plo - qlo, phi - qhi);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&e, c)) = rem.terms.iter().next_back() {
            let t = e - lead_q;
            if t.e0 < lo.e0 || t.e0 > hi.e0 || t.e1 < lo.e1 || t.e1 > hi.e1 {
                return Err(Error::NotDivisible);
            }
            let coef = c.div_exact(lead_c).ok_or(Error::NotDivisible)?;
            for (qe, qc) in &q.terms {
                rem.add_term(*qe + t, -(coef.clone() * qc.clone()));
            }
            quot.add_term(t, coef);
        }
        Ok(quot)
    }

    pub fn map_coefficients<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> LaurentPoly<U> {
        let mut p = LaurentPoly::zero();
        for (e, c) in &self.terms {
            p.add_term(*e, f(c));
        }
        p
    }
}

impl LaurentPoly<BigInt> {
    pub fn to_rational(&self) -> RationalLaurent {
        self.map_coefficients(|c| Rational::from_integer(c.clone()))
    }
}

impl<T: Coefficient> Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, o: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(*e, c.clone());
        }
        p
    }
}

impl<T: Coefficient> Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, o: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(*e, -c.clone());
        }
        p
    }
}

impl<T: Coefficient> Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, o: &LaurentPoly<T>) -> LaurentPoly<T> {
        self.checked_mul(o, usize::MAX).expect("uncapped product")
    }
}

impl<T: Coefficient> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<T: Coefficient> $tr for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $m(self, o: LaurentPoly<T>) -> LaurentPoly<T> {
                (&self).$m(&o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &ExponentVector) -> fmt::Result {
    let mut factors = Vec::new();
    for (name, exp) in [("x0", e.e0), ("x1", e.e1)] {
        match exp {
            0 => {}
            1 => factors.push(name.to_string()),
            _ => factors.push(format!("{}^{}", name, exp)),
        }
    }
    write!(f, "{}", factors.join("*"))
}

impl<T: Coefficient> fmt::Display for LaurentPoly<T> {
    /// E.g. `x0^-1 + x0^-1*x1^2`, terms in canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if *e == ExponentVector::ZERO {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write_monomial(f, e)?;
            } else {
                write!(f, "{}*", mag)?;
                write_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

impl<T: Coefficient> Serialize for LaurentPoly<T> {
    /// A list of `[e0, e1, "coefficient"]` triples in canonical order.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let triples: Vec<(i64, i64, String)> =
            self.terms.iter().map(|(e, c)| (e.e0, e.e1, c.to_string())).collect();
        triples.serialize(s)
    }
}

impl<'de, T: Coefficient> Deserialize<'de> for LaurentPoly<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let triples: Vec<(i64, i64, String)> = Vec::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for (e0, e1, c) in triples {
            let e = ExponentVector::new(e0, e1);
            if p.terms.contains_key(&e) {
                return Err(D::Error::custom(format!("repeated exponent {}", e)));
            }
            let coef = c.parse::<T>().map_err(|_| D::Error::custom(format!("bad coefficient {:?}", c)))?;
            if coef.is_zero() {
                return Err(D::Error::custom("zero coefficient"));
            }
            p.terms.insert(e, coef);
        }
        Ok(p)
    }
}

/// The g-vector of `p` in the pointed normal form, or [`Error::NotPointed`].
///
/// `lambda = (max e0, min e1)` must carry coefficient 1 and every other
/// exponent must be `lambda + (-b a0, c a1)` with `a0, a1 >= 0`.
pub fn g_vector<T: Coefficient>(params: &AlgebraParams, p: &LaurentPoly<T>) -> Result<GVector> {
    let (lo, hi) = p.exponent_box().ok_or_else(|| Error::NotPointed("zero polynomial".into()))?;
    let lambda = ExponentVector::new(hi.e0, lo.e1);
    match p.terms.get(&lambda) {
        Some(c) if c.is_one() => {}
        Some(c) => return Err(Error::NotPointed(format!("leading coefficient {} at {}", c, lambda))),
        None => return Err(Error::NotPointed(format!("{} is not in the support", lambda))),
    }
    for e in p.terms.keys() {
        let d = *e - lambda;
        if d.e0.rem_euclid(params.b()) != 0 || d.e1.rem_euclid(params.c()) != 0 {
            return Err(Error::NotPointed(format!("exponent {} is off the lattice of {}", e, lambda)));
        }
    }
    Ok(lambda.into())
}

/// Cluster variables and monomials of `A(b, c)`, expanded in the initial cluster.
///
/// Expansions are memoized; the cache is shared behind a mutex.
#[derive(Debug)]
pub struct ClusterAlgebra {
    params: AlgebraParams,
    term_cap: usize,
    cache: Mutex<HashMap<i64, Arc<LaurentPoly>>>,
}

impl ClusterAlgebra {
    pub fn new(params: AlgebraParams) -> Self {
        Self::with_term_cap(params, DEFAULT_TERM_CAP)
    }

    pub fn with_term_cap(params: AlgebraParams, term_cap: usize) -> Self {
        let mut cache = HashMap::new();
        cache.insert(0, Arc::new(LaurentPoly::x0()));
        cache.insert(1, Arc::new(LaurentPoly::x1()));
        ClusterAlgebra { params, term_cap, cache: Mutex::new(cache) }
    }

    pub fn params(&self) -> AlgebraParams {
        self.params
    }

    pub fn term_cap(&self) -> usize {
        self.term_cap
    }

    fn cached(&self, m: i64) -> Option<Arc<LaurentPoly>> {
        self.cache.lock().expect("cache lock poisoned").get(&m).cloned()
    }

    /// `(x_j^e + 1) / x_other` where `e` is the exchange exponent at `j`.
    fn exchange(&self, j: i64, xj: &LaurentPoly, other: &LaurentPoly) -> Result<LaurentPoly> {
        let e = self.params.exchange_exponent(j) as u32;
        let num = &xj.checked_pow(e, self.term_cap)? + &LaurentPoly::one();
        let q = num.div_exact(other)?;
        if q.len() > self.term_cap {
            return Err(Error::TermCapExceeded { count: q.len(), cap: self.term_cap });
        }
        Ok(q)
    }

    /// The Laurent expansion of `x_m`.
    pub fn variable(&self, m: i64) -> Result<Arc<LaurentPoly>> {
        if let Some(v) = self.cached(m) {
            return Ok(v);
        }
        let step: i64 = if m > 1 { 1 } else { -1 };
        // walk from the nearest cached pair towards m
        let mut j = if step == 1 { 1 } else { 0 };
        while self.cached(j + step).is_some() {
            j += step;
        }
        while j != m {
            let xj = self.cached(j).expect("walk stays inside the cache");
            let prev = self.cached(j - step).expect("walk stays inside the cache");
            let next = Arc::new(self.exchange(j, &xj, &prev)?);
            self.cache.lock().expect("cache lock poisoned").insert(j + step, next);
            j += step;
        }
        Ok(self.cached(m).expect("just computed"))
    }

    /// `x_k^a * x_{k+1}^a2`.
    pub fn monomial(&self, k: i64, a: u32, a2: u32) -> Result<LaurentPoly> {
        let left = self.variable(k)?.checked_pow(a, self.term_cap)?;
        let right = self.variable(k + 1)?.checked_pow(a2, self.term_cap)?;
        left.checked_mul(&right, self.term_cap)
    }
}

/// Uncached expansion of the cluster variable `x_m`.
pub fn cluster_variable(params: &AlgebraParams, m: i64) -> Result<LaurentPoly> {
    Ok(ClusterAlgebra::new(*params).variable(m)?.as_ref().clone())
}

/// Uncached expansion of `x_k^a * x_{k+1}^a2`.
pub fn cluster_monomial(params: &AlgebraParams, k: i64, a: u32, a2: u32) -> Result<LaurentPoly> {
    ClusterAlgebra::new(*params).monomial(k, a, a2)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly;

    fn p(terms: &[(i64, i64, i64)]) -> P {
        P::from_terms(terms.iter().map(|&(a, b, c)| (a, b, BigInt::from(c))))
    }

    fn params(b: i64, c: i64) -> AlgebraParams {
        AlgebraParams::new(b, c).unwrap()
    }

    #[test]
    fn ring_examples() {
        let x0p1 = p(&[(1, 0, 1), (0, 0, 1)]);
        let x0m1 = p(&[(1, 0, 1), (0, 0, -1)]);
        assert_eq!(&x0p1 * &x0m1, p(&[(2, 0, 1), (0, 0, -1)]));
        assert_eq!(&x0p1 + &P::zero(), x0p1);
        let x1sq = p(&[(0, 2, 1), (0, 0, 1)]);
        assert_eq!(x1sq.pow(2), p(&[(0, 4, 1), (0, 2, 2), (0, 0, 1)]));
        assert!((&x0p1 - &x0p1).is_zero());
    }

    #[test]
    fn division_examples() {
        let num = p(&[(0, 2, 1), (0, 0, 1)]);
        assert_eq!(num.div_exact(&P::x0()).unwrap(), p(&[(-1, 2, 1), (-1, 0, 1)]));
        let x0sq_m1 = p(&[(2, 0, 1), (0, 0, -1)]);
        assert_eq!(x0sq_m1.div_exact(&p(&[(1, 0, 1), (0, 0, -1)])).unwrap(), p(&[(1, 0, 1), (0, 0, 1)]));
        let bad = p(&[(2, 0, 1), (0, 1, 1)]);
        assert_eq!(bad.div_exact(&p(&[(1, 0, 1), (0, 0, 1)])), Err(Error::NotDivisible));
        assert_eq!(p(&[(1, 0, 3)]).div_exact(&p(&[(0, 0, 2)])), Err(Error::NotDivisible));
        assert_eq!(num.div_exact(&P::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = p(&[(3, -1, 2), (0, 2, -1), (-2, -2, 5), (1, 1, 1)]);
        let b = p(&[(1, 0, 1), (-1, 3, 4), (0, 0, -7)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        let off = &prod + &P::one();
        assert_eq!(off.div_exact(&b), Err(Error::NotDivisible));
    }

    #[test]
    fn cluster_variables_affine() {
        let pr = params(2, 2);
        assert_eq!(cluster_variable(&pr, 0).unwrap(), P::x0());
        assert_eq!(cluster_variable(&pr, 1).unwrap(), P::x1());
        assert_eq!(cluster_variable(&pr, 2).unwrap(), p(&[(-1, 2, 1), (-1, 0, 1)]));
        assert_eq!(
            cluster_variable(&pr, 3).unwrap(),
            p(&[(-2, 3, 1), (-2, 1, 2), (-2, -1, 1), (0, -1, 1)])
        );
        assert_eq!(cluster_variable(&pr, -1).unwrap(), p(&[(2, -1, 1), (0, -1, 1)]));
    }

    #[test]
    fn monomial_examples() {
        let pr = params(2, 2);
        assert_eq!(cluster_monomial(&pr, 0, 2, 1).unwrap(), p(&[(2, 1, 1)]));
        let x2 = cluster_variable(&pr, 2).unwrap();
        assert_eq!(cluster_monomial(&pr, 1, 1, 1).unwrap(), &P::x1() * &x2);
        assert_eq!(cluster_monomial(&pr, 5, 0, 0).unwrap(), P::one());
    }

    #[test]
    fn g_vectors() {
        let pr = params(2, 2);
        let g = |m| g_vector(&pr, &cluster_variable(&pr, m).unwrap()).unwrap();
        assert_eq!(g(2), GVector::new(-1, 0));
        assert_eq!(g(3), GVector::new(0, -1));
        assert_eq!(g_vector(&pr, &p(&[(2, 1, 1)])).unwrap(), GVector::new(2, 1));
        assert!(g_vector(&pr, &p(&[(1, 0, 1), (0, 1, 1)])).is_err());
        assert!(g_vector(&pr, &p(&[(1, 0, 2)])).is_err());
        assert!(g_vector(&pr, &P::zero()).is_err());
    }

    #[test]
    fn finite_type_periods() {
        for (b, c, period) in [(1, 1, 5), (1, 2, 6), (1, 3, 8), (2, 1, 6), (3, 1, 8)] {
            let alg = ClusterAlgebra::new(params(b, c));
            for m in -2..=10 {
                assert_eq!(alg.variable(m).unwrap(), alg.variable(m + period).unwrap(), "({},{}) m={}", b, c, m);
            }
        }
    }

    #[test]
    fn laurent_phenomenon_and_positivity() {
        // wild types blow up quickly, so the range shrinks with bc
        for (b, c, reach) in [(2, 2, 12), (2, 3, 7), (3, 2, 7), (1, 4, 12), (4, 1, 12), (3, 3, 5), (1, 1, 12), (1, 2, 12), (1, 3, 12)] {
            let alg = ClusterAlgebra::new(params(b, c));
            for m in -reach..=reach {
                let x = alg.variable(m).unwrap();
                assert!(x.terms().all(|(_, c)| c.is_positive()), "({},{}) x_{}", b, c, m);
            }
        }
    }

    #[test]
    fn monomials_are_pointed() {
        for (b, c) in [(2, 2), (2, 3), (3, 2), (1, 4)] {
            let pr = params(b, c);
            let alg = ClusterAlgebra::new(pr);
            for k in -6..=6 {
                for a in 0..=3 {
                    for a2 in 0..=3 {
                        let m = alg.monomial(k, a, a2).unwrap();
                        assert!(g_vector(&pr, &m).is_ok(), "({},{}) k={} a={} a2={}", b, c, k, a, a2);
                    }
                }
            }
        }
    }

    #[test]
    fn term_cap_is_enforced() {
        let alg = ClusterAlgebra::with_term_cap(params(3, 3), 20);
        assert!(matches!(alg.variable(6), Err(Error::TermCapExceeded { .. })));
    }

    #[test]
    fn text_and_json() {
        let x3 = cluster_variable(&params(2, 2), 3).unwrap();
        assert_eq!(x3.to_string(), "x0^-2*x1^-1 + 2*x0^-2*x1 + x1^-1 + x0^-2*x1^3");
        let json = serde_json::to_string(&x3).unwrap();
        assert_eq!(json, r#"[[-2,-1,"1"],[-2,1,"2"],[0,-1,"1"],[-2,3,"1"]]"#);
        let back: P = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x3);
        assert!(serde_json::from_str::<P>(r#"[[0,0,"0"]]"#).is_err());
        assert_eq!(p(&[(0, 0, -3), (1, 0, -1)]).to_string(), "-3 - x0");
        let r = RationalLaurent::monomial(1, -1, Rational::new(3.into(), 2.into()));
        assert_eq!(r.to_string(), "3/2*x0*x1^-1");
    }

    #[test]
    fn gvector_parsing() {
        assert_eq!("3,-3".parse::<GVector>().unwrap(), GVector::new(3, -3));
        assert_eq!(" (4, -3) ".parse::<GVector>().unwrap(), GVector::new(4, -3));
        assert!("1,2,3".parse::<GVector>().is_err());
        assert!("a,b".parse::<GVector>().is_err());
    }
}
