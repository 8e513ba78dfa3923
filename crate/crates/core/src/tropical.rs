//! Piecewise-linear g-vector mutations.
//!
//! `phi_1` and `phi_{-1}` are the basic two-branch maps. Longer composites are
//! `phi_{2j} = phi_2^j` and `phi_{2j+1} = phi_1 phi_2^j` for every integer `j`,
//! where `phi_2 = phi_{-1}^{-1} phi_1`. With this convention `phi_{-1}` is the
//! basic map itself and `phi_{-2} = phi_2^{-1}`, and every orbit can be walked
//! one basic step at a time in either direction (see [`Orbit`]).

use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use crate::chebyshev::{ChebyshevTable, Eps};
use crate::geometry::{HalfPlane, Point2, QPoint};
use crate::numeric::{QuadNum, Rational, Sgn};
use crate::{AlgebraParams, Error, Result};

/// Scalars the maps can act on: exact ordered rings.
pub trait Coord: Clone + PartialEq + Add<Output = Self> + Sub<Output = Self> + Neg<Output = Self> {
    fn times(&self, k: i64) -> Self;
    fn sgn(&self) -> Sgn;
}

impl Coord for BigInt {
    fn times(&self, k: i64) -> Self {
        self * k
    }

    fn sgn(&self) -> Sgn {
        Sgn::of(self)
    }
}

impl Coord for Rational {
    fn times(&self, k: i64) -> Self {
        self * BigInt::from(k)
    }

    fn sgn(&self) -> Sgn {
        Sgn::of(self)
    }
}

impl Coord for QuadNum {
    fn times(&self, k: i64) -> Self {
        self.scale_int(k)
    }

    fn sgn(&self) -> Sgn {
        self.sign()
    }
}

fn nonneg<T: Coord>(x: &T) -> bool {
    x.sgn() != Sgn::Negative
}

fn nonpos<T: Coord>(x: &T) -> bool {
    x.sgn() != Sgn::Positive
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

/// `phi_1` (forward) or `phi_{-1}` (backward).
pub fn phi_one<T: Coord>(params: &AlgebraParams, p: &Point2<T>, direction: Direction) -> Point2<T> {
    let (b, c) = (params.b(), params.c());
    let (l0, l1) = (p.x0.clone(), p.x1.clone());
    match direction {
        Direction::Forward => {
            if nonneg(&l0) {
                Point2::new(-l0.clone(), l0.times(c) + l1)
            } else {
                Point2::new(-l0, l1)
            }
        }
        Direction::Backward => {
            if nonneg(&l1) {
                Point2::new(l0, -l1)
            } else {
                Point2::new(l0 + l1.times(b), -l1)
            }
        }
    }
}

/// Inverse of `phi_1`.
pub fn phi_one_inverse<T: Coord>(params: &AlgebraParams, m: &Point2<T>) -> Point2<T> {
    let (m0, m1) = (m.x0.clone(), m.x1.clone());
    if nonpos(&m0) {
        Point2::new(-m0.clone(), m1 + m0.times(params.c()))
    } else {
        Point2::new(-m0, m1)
    }
}

/// Inverse of `phi_{-1}`.
pub fn phi_minus_one_inverse<T: Coord>(params: &AlgebraParams, m: &Point2<T>) -> Point2<T> {
    let (m0, m1) = (m.x0.clone(), m.x1.clone());
    if nonpos(&m1) {
        Point2::new(m0, -m1)
    } else {
        Point2::new(m0 + m1.times(params.b()), -m1)
    }
}

/// Walks `phi_k(p)` for `k = 0, 1, 2, ...` (forward) or `k = 0, -1, -2, ...` (backward).
#[derive(Debug, Clone)]
pub struct Orbit<T> {
    params: AlgebraParams,
    current: Point2<T>,
    k: i64,
    direction: Direction,
}

impl<T: Coord> Orbit<T> {
    pub fn new(params: AlgebraParams, start: Point2<T>, direction: Direction) -> Self {
        Self::starting_at(params, start, 0, direction)
    }

    /// An orbit whose current point is taken to be `phi_k` of something.
    pub fn starting_at(params: AlgebraParams, current: Point2<T>, k: i64, direction: Direction) -> Self {
        Orbit { params, current, k, direction }
    }

    /// The current index `k` and `phi_k(start)`.
    pub fn current(&self) -> (i64, &Point2<T>) {
        (self.k, &self.current)
    }

    /// Advances one index in the walking direction.
    pub fn step(&mut self) {
        let p = &self.params;
        self.current = match self.direction {
            // phi_{k+1} = phi_1 phi_k for k even, phi_{-1}^{-1} phi_k for k odd
            Direction::Forward if self.k.rem_euclid(2) == 0 => phi_one(p, &self.current, Direction::Forward),
            Direction::Forward => phi_minus_one_inverse(p, &self.current),
            // phi_{k-1} = phi_{-1} phi_k for k even, phi_1^{-1} phi_k for k odd
            Direction::Backward if self.k.rem_euclid(2) == 0 => phi_one(p, &self.current, Direction::Backward),
            Direction::Backward => phi_one_inverse(p, &self.current),
        };
        self.k += match self.direction {
            Direction::Forward => 1,
            Direction::Backward => -1,
        };
    }
}

impl<T: Coord> Iterator for Orbit<T> {
    type Item = (i64, Point2<T>);

    /// Yields `(0, p)` first, then successive indices.
    fn next(&mut self) -> Option<Self::Item> {
        let out = (self.k, self.current.clone());
        self.step();
        Some(out)
    }
}

/// The composite `phi_k` for any integer `k`.
pub fn phi_k<T: Coord>(params: &AlgebraParams, p: &Point2<T>, k: i64) -> Point2<T> {
    let direction = if k >= 0 { Direction::Forward } else { Direction::Backward };
    let mut orbit = Orbit::new(*params, p.clone(), direction);
    for _ in 0..k.unsigned_abs() {
        orbit.step();
    }
    orbit.current
}

/// `phi_k^{-1}`, by walking the orbit from index `k` back to 0.
///
/// For even `k` this is `phi_{-k}`; for odd `k` it is not, since `phi_{-1}` is
/// not the inverse of `phi_1`.
pub fn phi_k_inverse<T: Coord>(params: &AlgebraParams, p: &Point2<T>, k: i64) -> Point2<T> {
    let direction = if k >= 0 { Direction::Backward } else { Direction::Forward };
    let mut orbit = Orbit::starting_at(*params, p.clone(), k, direction);
    for _ in 0..k.unsigned_abs() {
        orbit.step();
    }
    orbit.current
}

/// The explicit four-branch formulas for `phi_2` (forward) and `phi_{-2}` (backward).
pub fn phi_two_closed<T: Coord>(params: &AlgebraParams, p: &Point2<T>, direction: Direction) -> Point2<T> {
    let (b, c, bc) = (params.b(), params.c(), params.bc());
    let (l0, l1) = (p.x0.clone(), p.x1.clone());
    match direction {
        Direction::Forward => {
            let s = l0.times(c) + l1.clone();
            if nonneg(&l0) && nonneg(&s) {
                Point2::new(l0.times(bc - 1) + l1.times(b), -s)
            } else if nonneg(&l0) {
                Point2::new(-l0, -s)
            } else if nonneg(&l1) {
                Point2::new(-l0 + l1.times(b), -l1)
            } else {
                Point2::new(-l0, -l1)
            }
        }
        Direction::Backward => {
            let s = l0.clone() + l1.times(b);
            if nonpos(&l1) && nonpos(&s) {
                Point2::new(-s, l0.times(c) + l1.times(bc - 1))
            } else if nonpos(&l1) {
                Point2::new(-s, -l1)
            } else if nonpos(&l0) {
                Point2::new(-l0.clone(), l0.times(c) - l1)
            } else {
                Point2::new(-l0, -l1)
            }
        }
    }
}

/// Membership in the closed imaginary cone spanned by `(2b, -bc ± sqrt(D))`.
///
/// The cone is `x0 >= 0`, `2b x1 + (bc + sqrt D) x0 >= 0`, `2b x1 + (bc - sqrt D) x0 <= 0`;
/// for `bc = 4` it is the ray through `(b, -2)`. The origin belongs to it.
pub fn in_imaginary_cone(params: &AlgebraParams, p: &QPoint) -> Result<bool> {
    let disc = params.discriminant()?;
    if p.x0.disc() != disc || p.x1.disc() != disc {
        return Err(Error::DiscriminantMismatch(disc.value(), p.disc().value()));
    }
    let root = QuadNum::sqrt_disc(disc);
    let bc = QuadNum::from_int(params.bc(), disc);
    let y = p.x1.scale_int(2 * params.b());
    let upper = &y + &(&bc + &root) * &p.x0;
    let lower = &y + &(&bc - &root) * &p.x0;
    Ok(!p.x0.is_negative() && !upper.is_negative() && !lower.is_positive())
}

/// Integer version of [`in_imaginary_cone`] that avoids building quadratic numbers.
///
/// With `x0 >= 0` and `t = 2b x1 + bc x0`, membership is `|t| <= sqrt(D) x0`, i.e. `t^2 <= D x0^2`.
pub fn in_imaginary_cone_int(params: &AlgebraParams, p: &Point2<BigInt>) -> Result<bool> {
    let disc = params.discriminant()?;
    if p.x0.is_negative() {
        return Ok(false);
    }
    let t: BigInt = &p.x1 * (2 * params.b()) + &p.x0 * params.bc();
    Ok(&t * &t <= &p.x0 * &p.x0 * disc.value())
}

/// The cone `C_k(base)` as two closed half-planes.
///
/// Even `k`: `mu0 <= base0`, `mu1 >= base1`. Odd `k`: `mu0 >= base0`, `mu1 <= base1`.
pub fn cone_ck(base: &QPoint, k: i64) -> [HalfPlane; 2] {
    let disc = base.disc();
    let one = QuadNum::one(disc);
    let zero = QuadNum::zero(disc);
    if k.rem_euclid(2) == 0 {
        [HalfPlane::closed(one.clone(), zero.clone(), base.x0.clone()), HalfPlane::closed(zero, -one, -&base.x1)]
    } else {
        [HalfPlane::closed(-&one, zero.clone(), -&base.x0), HalfPlane::closed(zero, one, base.x1.clone())]
    }
}

/// Membership of `mu` in `C_k(base)` for integer points.
pub fn in_cone_ck<T: Coord>(base: &Point2<T>, mu: &Point2<T>, k: i64) -> bool {
    let d0 = mu.x0.clone() - base.x0.clone();
    let d1 = mu.x1.clone() - base.x1.clone();
    if k.rem_euclid(2) == 0 {
        nonpos(&d0) && nonneg(&d1)
    } else {
        nonneg(&d0) && nonpos(&d1)
    }
}

/// The two eigenrays of `phi_2` with their eigenvalues:
/// `(2b, -bc + sqrt D)` with `(bc - 2 + sqrt D)/2` and `(2b, -bc - sqrt D)` with `(bc - 2 - sqrt D)/2`.
pub fn phi2_eigenvectors(params: &AlgebraParams) -> Result<[(QPoint, QuadNum); 2]> {
    let disc = params.discriminant()?;
    let root = QuadNum::sqrt_disc(disc);
    let two_b = QuadNum::from_int(2 * params.b(), disc);
    let bc = QuadNum::from_int(params.bc(), disc);
    let half = QuadNum::from_rational(Rational::new(1.into(), 2.into()), disc);
    let shift = QuadNum::from_int(params.bc() - 2, disc);
    let plus = (Point2::new(two_b.clone(), -&bc + &root), (&shift + &root) * &half);
    let minus = (Point2::new(two_b, -&bc - &root), (&shift - &root) * &half);
    Ok([plus, minus])
}

/// Closed form of `phi_k` on the imaginary cone, linear with Chebyshev coefficients.
///
/// For `k = 2j`: `(u_{2j+1}^- l0 + u_{2j}^+ l1, -u_{2j}^- l0 - u_{2j-1}^+ l1)`;
/// for `k = 2j+1`: `(-u_{2j+1}^- l0 - u_{2j}^+ l1, u_{2j+2}^- l0 + u_{2j+1}^+ l1)`.
pub fn phi_k_on_imaginary(table: &ChebyshevTable, p: &QPoint, k: i64) -> Result<QPoint> {
    let params = table.params();
    if !in_imaginary_cone(&params, p)? {
        return Err(Error::NotImaginary(p.to_string()));
    }
    let u = |i: i64, e: Eps| QuadNum::from_bigint(&table.get(i, e), p.disc());
    let j2 = 2 * k.div_euclid(2);
    let (a0, a1) = (u(j2 + 1, Eps::Minus) * &p.x0 + u(j2, Eps::Plus) * &p.x1, u(j2, Eps::Minus) * &p.x0 + u(j2 - 1, Eps::Plus) * &p.x1);
    if k.rem_euclid(2) == 0 {
        Ok(Point2::new(a0, -a1))
    } else {
        let second = u(j2 + 2, Eps::Minus) * &p.x0 + u(j2 + 1, Eps::Plus) * &p.x1;
        Ok(Point2::new(-a0, second))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Discriminant;
    use num_traits::Zero;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn params(b: i64, c: i64) -> AlgebraParams {
        AlgebraParams::new(b, c).unwrap()
    }

    fn ip(a: i64, b: i64) -> Point2<BigInt> {
        Point2::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn basic_maps() {
        let p22 = params(2, 2);
        assert_eq!(phi_one(&p22, &ip(1, 0), Direction::Forward), ip(-1, 2));
        assert_eq!(phi_one(&p22, &ip(-1, 2), Direction::Forward), ip(1, 2));
        assert_eq!(phi_one(&p22, &ip(0, -1), Direction::Backward), ip(-2, 1));
    }

    #[test]
    fn basic_inverses_round_trip() {
        let pr = params(3, 2);
        for a in -5..=5 {
            for b in -5..=5 {
                let p = ip(a, b);
                assert_eq!(phi_one_inverse(&pr, &phi_one(&pr, &p, Direction::Forward)), p);
                assert_eq!(phi_minus_one_inverse(&pr, &phi_one(&pr, &p, Direction::Backward)), p);
            }
        }
    }

    #[test]
    fn composite_examples() {
        let pr = params(3, 2);
        assert_eq!(phi_k(&pr, &ip(4, -3), 2), ip(11, -5));
        assert_eq!(phi_k(&pr, &ip(4, -3), 0), ip(4, -3));
        assert_eq!(phi_k(&pr, &phi_k(&pr, &ip(4, -3), 2), -2), ip(4, -3));
        assert_eq!(phi_k(&pr, &ip(7, 1), -1), phi_one(&pr, &ip(7, 1), Direction::Backward));
    }

    #[test]
    fn closed_two_step_examples() {
        let pr = params(3, 2);
        assert_eq!(phi_two_closed(&pr, &ip(4, -3), Direction::Forward), ip(11, -5));
        assert_eq!(phi_two_closed(&pr, &ip(-1, -1), Direction::Forward), ip(1, 1));
        // (1, -1) spans the eigenray of the affine case, so it is fixed
        let p22 = params(2, 2);
        assert_eq!(phi_two_closed(&p22, &ip(1, -1), Direction::Backward), ip(1, -1));
        assert_eq!(phi_k(&p22, &ip(1, -1), -2), ip(1, -1));
    }

    #[test]
    fn closed_forms_match_composites_randomly() {
        let mut rng = StdRng::seed_from_u64(7);
        for (b, c) in [(2, 2), (3, 2), (2, 3), (1, 4), (3, 3), (1, 5)] {
            let pr = params(b, c);
            for _ in 0..300 {
                let p = Point2::new(
                    Rational::new(rng.gen_range(-60..=60).into(), rng.gen_range(1..=4).into()),
                    Rational::new(rng.gen_range(-60..=60).into(), rng.gen_range(1..=4).into()),
                );
                assert_eq!(phi_two_closed(&pr, &p, Direction::Forward), phi_k(&pr, &p, 2));
                assert_eq!(phi_two_closed(&pr, &p, Direction::Backward), phi_k(&pr, &p, -2));
            }
        }
    }

    #[test]
    fn branches_agree_on_boundaries() {
        // on the axes both branches of each basic map give the same value
        let pr = params(3, 2);
        for t in -6..=6 {
            let on_x1_axis = ip(0, t);
            let fwd = phi_one(&pr, &on_x1_axis, Direction::Forward);
            assert_eq!(fwd, Point2::new(BigInt::zero(), BigInt::from(t)));
            let on_x0_axis = ip(t, 0);
            assert_eq!(phi_one(&pr, &on_x0_axis, Direction::Backward), ip(t, 0));
        }
    }

    #[test]
    fn round_trips() {
        let mut rng = StdRng::seed_from_u64(11);
        for (b, c) in [(2, 2), (3, 2), (2, 3), (1, 4)] {
            let pr = params(b, c);
            for _ in 0..50 {
                let p = Point2::new(
                    Rational::new(rng.gen_range(-40..=40).into(), rng.gen_range(1..=5).into()),
                    Rational::new(rng.gen_range(-40..=40).into(), rng.gen_range(1..=5).into()),
                );
                for k in -8..=8 {
                    assert_eq!(phi_k_inverse(&pr, &phi_k(&pr, &p, k), k), p);
                    assert_eq!(phi_k(&pr, &phi_k_inverse(&pr, &p, k), k), p);
                    if k % 2 == 0 {
                        assert_eq!(phi_k(&pr, &phi_k(&pr, &p, k), -k), p);
                    }
                }
            }
        }
    }

    #[test]
    fn odd_negative_index_is_not_an_inverse() {
        let pr = params(2, 2);
        let p = ip(1, 0);
        assert_eq!(phi_k(&pr, &p, 1), ip(-1, 2));
        assert_eq!(phi_k(&pr, &ip(-1, 2), -1), ip(-1, -2));
        assert_eq!(phi_k_inverse(&pr, &ip(-1, 2), 1), p);
    }

    #[test]
    fn orbit_matches_phi_k() {
        let pr = params(2, 3);
        let p = ip(5, -4);
        let fwd: Vec<_> = Orbit::new(pr, p.clone(), Direction::Forward).take(9).collect();
        let bwd: Vec<_> = Orbit::new(pr, p.clone(), Direction::Backward).take(9).collect();
        for (k, v) in fwd.into_iter().chain(bwd) {
            assert_eq!(v, phi_k(&pr, &p, k));
        }
    }

    #[test]
    fn imaginary_cone_examples() {
        let pr = params(3, 2);
        let d = pr.discriminant().unwrap();
        assert!(in_imaginary_cone(&pr, &QPoint::from_ints(4, -3, d)).unwrap());
        assert!(!in_imaginary_cone(&pr, &QPoint::from_ints(1, 0, d)).unwrap());
        assert!(in_imaginary_cone(&pr, &QPoint::from_ints(0, 0, d)).unwrap());
        let p22 = params(2, 2);
        let q = Discriminant::RATIONAL;
        assert!(in_imaginary_cone(&p22, &QPoint::from_ints(3, -3, q)).unwrap());
        assert!(!in_imaginary_cone(&p22, &QPoint::from_ints(3, -2, q)).unwrap());
        assert!(in_imaginary_cone(&params(1, 3), &QPoint::from_ints(1, -1, q)).is_err());
    }

    #[test]
    fn integer_cone_test_agrees() {
        for (b, c) in [(2, 2), (3, 2), (2, 3), (1, 4), (3, 3), (1, 5)] {
            let pr = params(b, c);
            let d = pr.discriminant().unwrap();
            for x in -8..=8 {
                for y in -20..=8 {
                    let exact = in_imaginary_cone(&pr, &QPoint::from_ints(x, y, d)).unwrap();
                    assert_eq!(exact, in_imaginary_cone_int(&pr, &ip(x, y)).unwrap(), "({},{}) ({},{})", b, c, x, y);
                }
            }
        }
    }

    #[test]
    fn cones() {
        let q = Discriminant::RATIONAL;
        let [h0, h1] = cone_ck(&QPoint::from_ints(0, 0, q), 0);
        assert_eq!(h0, HalfPlane::int(1, 0, 0, q));
        assert_eq!(h1, HalfPlane::int(0, -1, 0, q));
        let [g0, g1] = cone_ck(&QPoint::from_ints(2, 5, q), 1);
        assert_eq!(g0, HalfPlane::int(-1, 0, -2, q));
        assert_eq!(g1, HalfPlane::int(0, 1, 5, q));
        assert_eq!(cone_ck(&QPoint::from_ints(2, 5, q), -2), cone_ck(&QPoint::from_ints(2, 5, q), 0));
        assert!(in_cone_ck(&ip(2, 5), &ip(1, 6), 0));
        assert!(!in_cone_ck(&ip(2, 5), &ip(1, 6), 1));
    }

    #[test]
    fn eigenvectors() {
        for b in 1..=20 {
            for c in 1..=20 {
                if b * c < 4 || b * c > 20 {
                    continue;
                }
                let pr = params(b, c);
                for (v, ev) in phi2_eigenvectors(&pr).unwrap() {
                    assert_eq!(phi_two_closed(&pr, &v, Direction::Forward), v.scale(&ev), "({},{})", b, c);
                }
            }
        }
        let [(v, ev), _] = phi2_eigenvectors(&params(3, 2)).unwrap();
        assert_eq!(ev.approx(6), "3.732051");
        assert_eq!(v.x1.approx(6), "-2.535898");
        let [(v, ev), (w, _)] = phi2_eigenvectors(&params(1, 4)).unwrap();
        assert_eq!(v, w);
        assert_eq!(v, QPoint::from_ints(2, -4, Discriminant::RATIONAL));
        assert!(ev.as_rational().unwrap() == &Rational::from_integer(1.into()));
    }

    #[test]
    fn closed_forms_on_imaginary_cone() {
        for (b, c) in [(3, 2), (2, 3), (2, 2), (1, 5), (3, 3)] {
            let pr = params(b, c);
            let d = pr.discriminant().unwrap();
            let table = ChebyshevTable::new(pr);
            for x in 0..=6 {
                for y in -30..=0 {
                    let p = QPoint::from_ints(x, y, d);
                    if !in_imaginary_cone(&pr, &p).unwrap() {
                        continue;
                    }
                    for k in -17..=17 {
                        assert_eq!(phi_k_on_imaginary(&table, &p, k).unwrap(), phi_k(&pr, &p, k), "({},{}) {} k={}", b, c, p, k);
                    }
                    // cone stability under even steps
                    for j in -8..=8 {
                        assert!(in_imaginary_cone(&pr, &phi_k(&pr, &p, 2 * j)).unwrap());
                    }
                }
            }
        }
        let t = ChebyshevTable::new(params(3, 2));
        let d = params(3, 2).discriminant().unwrap();
        assert!(phi_k_on_imaginary(&t, &QPoint::from_ints(1, 0, d), 2).is_err());
    }
}
