//! Dominance regions, maximal support regions and the objects built from them.
//!
//! Every region here is an exact [`Region`] over `Q(sqrt D)` with `D = bc(bc - 4)`,
//! so all constructions require `bc >= 4`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::chebyshev::{ChebyshevTable, Eps};
use crate::geometry::{Exclusion, HalfPlane, IntPoint, Point2, QPoint, Region};
use crate::laurent::GVector;
use crate::numeric::{Discriminant, QuadNum, Rational};
use crate::tropical::{cone_ck, in_cone_ck, in_imaginary_cone, Direction, Orbit};
use crate::{AlgebraParams, Error, Result};

/// Default truncation depth for the brute-force dominance oracle.
pub const DEFAULT_ORACLE_DEPTH: u32 = 40;

/// The slopes `(bc ± sqrt D)/(2b)`, `(bc ± sqrt D)/(2c)` and the scale `(bc + sqrt D)/(2 sqrt D)`.
#[derive(Debug, Clone)]
pub struct Slopes {
    pub disc: Discriminant,
    pub sb_plus: QuadNum,
    pub sb_minus: QuadNum,
    pub sc_plus: QuadNum,
    pub sc_minus: QuadNum,
    /// Undefined when `bc = 4`.
    pub kappa: Option<QuadNum>,
}

impl Slopes {
    pub fn new(params: &AlgebraParams) -> Result<Slopes> {
        let disc = params.discriminant()?;
        let root = QuadNum::sqrt_disc(disc);
        let bc = QuadNum::from_int(params.bc(), disc);
        let over = |n: i64| Rational::new(BigInt::from(1), BigInt::from(n));
        let (plus, minus) = (&bc + &root, &bc - &root);
        // 1/(2 sqrt D) = sqrt D / (2D)
        let kappa = (disc.value() > 0).then(|| &plus * &root.scale(&over(2 * disc.value() as i64)));
        Ok(Slopes {
            disc,
            sb_plus: plus.scale(&over(2 * params.b())),
            sb_minus: minus.scale(&over(2 * params.b())),
            sc_plus: plus.scale(&over(2 * params.c())),
            sc_minus: minus.scale(&over(2 * params.c())),
            kappa,
        })
    }

    fn int(&self, n: i64) -> QuadNum {
        QuadNum::from_int(n, self.disc)
    }
}

fn qpoint(g: GVector, disc: Discriminant) -> QPoint {
    QPoint::from_gvector(g, disc)
}

fn is_imaginary(params: &AlgebraParams, g: GVector) -> Result<bool> {
    in_imaginary_cone(params, &qpoint(g, params.discriminant()?))
}

/// The closed band `0 <= a0 (mu0 - l0) + a1 (mu1 - l1) <= hi`.
fn band(l: &QPoint, a0: QuadNum, a1: QuadNum, hi: QuadNum) -> [HalfPlane; 2] {
    let shift = &(&a0 * &l.x0) + &(&a1 * &l.x1);
    HalfPlane::two_sided(&a0, &a1, &shift, &(&shift + &hi))
}

/// The eight closed inequalities bounding the dominance polygon of an imaginary `lambda`.
pub fn dominance_halfplanes(params: &AlgebraParams, lambda: GVector) -> Result<Vec<HalfPlane>> {
    let s = Slopes::new(params)?;
    let l = qpoint(lambda, s.disc);
    let (b, c) = (params.b(), params.c());
    let one = s.int(1);
    let (l0, l1) = (&l.x0, &l.x1);
    let rows = [
        band(&l, s.sb_minus.clone(), one.clone(), &(-&l0.scale_int(c)) - &(&s.sb_plus * &l1.scale_int(b))),
        band(&l, -&s.sb_minus, one.clone(), l0.scale_int(c)),
        band(&l, -&one, -&s.sc_minus, &(&s.sc_plus * &l0.scale_int(c)) + &l1.scale_int(b)),
        band(&l, -&one, s.sc_minus.clone(), -&l1.scale_int(b)),
    ];
    Ok(rows.into_iter().flatten().collect())
}

/// The dominance region of `lambda`: the point itself outside the imaginary
/// cone, and the polygon cut out by [`dominance_halfplanes`] inside it.
pub fn dominance_region(params: &AlgebraParams, lambda: GVector) -> Result<Region> {
    let disc = params.discriminant()?;
    if !is_imaginary(params, lambda)? {
        return Ok(Region::point(qpoint(lambda, disc)));
    }
    Region::from_halfplanes(dominance_halfplanes(params, lambda)?)
}

/// One of the six shapes a dominance polygon can take, with its explicit vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominanceClass {
    pub class: u8,
    pub vertices: Vec<QPoint>,
}

impl DominanceClass {
    pub fn shape(&self) -> &'static str {
        match self.class {
            1 => "point",
            2 | 6 => "trapezoid",
            3 | 5 => "triangle",
            _ => "kite",
        }
    }
}

/// Which class `lambda` falls in; the origin and non-imaginary vectors are class 1.
pub fn class_of(params: &AlgebraParams, lambda: GVector) -> Result<u8> {
    if lambda.is_zero() || !is_imaginary(params, lambda)? {
        return Ok(1);
    }
    let (b, c) = (params.b(), params.c());
    let (l0, l1) = (lambda.g0, lambda.g1);
    // for bc = 4 both separating rays coincide with the whole cone
    let below_first = c * l0 + 2 * l1;
    let above_second = 2 * l0 + b * l1;
    Ok(if below_first == 0 {
        3
    } else if below_first < 0 {
        2
    } else if above_second == 0 {
        5
    } else if above_second > 0 {
        6
    } else {
        4
    })
}

/// Evaluates the vertex formulas of `class` at `lambda`, whether or not `lambda` belongs to it.
pub fn class_vertices(params: &AlgebraParams, lambda: GVector, class: u8) -> Result<Vec<QPoint>> {
    let s = Slopes::new(params)?;
    let (b, c, bc) = (params.b(), params.c(), params.bc());
    let l = qpoint(lambda, s.disc);
    let q = |n: i64| s.int(n);
    let zero = q(0);
    let (l0, l1) = (lambda.g0, lambda.g1);
    let kappa = || s.kappa.clone().ok_or(Error::DivisionByZero);
    let left = Point2::new(zero.clone(), &(&s.sb_plus * &q(l0)) + &q(l1));
    let bottom = Point2::new(&q(l0) + &(&s.sc_plus * &q(l1)), zero.clone());
    let vertices = match class {
        1 => vec![l],
        2 => {
            let k = kappa()?;
            let third = Point2::new(-&(&s.sc_plus * &left.x1), zero);
            let fourth = Point2::new(q(-(bc - 2) * l0 - b * l1), q(c * l0 + 2 * l1)).scale(&k);
            vec![l, left, third, fourth]
        }
        3 | 5 => vec![l, left, bottom],
        4 => {
            let k = kappa()?;
            let tip = Point2::new(q(2 * l0 + b * l1), q(c * l0 + 2 * l1)).scale(&k);
            vec![l, left, tip, bottom]
        }
        6 => {
            let k = kappa()?;
            let second = Point2::new(q(2 * l0 + b * l1), q(-c * l0 - (bc - 2) * l1)).scale(&k);
            let third = Point2::new(zero, -&(&s.sb_plus * &bottom.x0));
            vec![l, second, third, bottom]
        }
        other => return Err(Error::Parse(format!("no dominance class {other}"))),
    };
    Ok(vertices)
}

/// The class of `lambda` and its vertices, in the order of the explicit formulas.
pub fn classify(params: &AlgebraParams, lambda: GVector) -> Result<DominanceClass> {
    let class = class_of(params, lambda)?;
    Ok(DominanceClass { class, vertices: class_vertices(params, lambda, class)? })
}

/// The g-vectors `lambda + (b a0, c a1)` lying in the dominance region, sorted.
pub fn dominated_lattice_points(params: &AlgebraParams, lambda: GVector) -> Result<Vec<GVector>> {
    Ok(dominance_region(params, lambda)?.lattice_points(lambda, params))
}

fn int_point(g: GVector) -> IntPoint {
    IntPoint::from_gvector(g)
}

/// The first index `k` (by `|k|`, forward before backward) with
/// `phi_k(mu)` outside `C_k(phi_k(lambda))`, scanning `|k| <= depth`.
pub fn oracle_first_failure(params: &AlgebraParams, lambda: GVector, mu: GVector, depth: u32) -> Option<i64> {
    let mut walks: Vec<(Orbit<BigInt>, Orbit<BigInt>)> = [Direction::Forward, Direction::Backward]
        .into_iter()
        .map(|d| (Orbit::new(*params, int_point(lambda), d), Orbit::new(*params, int_point(mu), d)))
        .collect();
    for step in 0..=depth {
        for (lo, mo) in walks.iter_mut() {
            if step > 0 {
                lo.step();
                mo.step();
            }
            let (k, base) = lo.current();
            if !in_cone_ck(base, mo.current().1, k) {
                return Some(k);
            }
        }
    }
    None
}

/// Brute-force dominance: `phi_k(mu)` lies in `C_k(phi_k(lambda))` for every `|k| <= depth`.
pub fn dominance_oracle_membership(params: &AlgebraParams, lambda: GVector, mu: GVector, depth: u32) -> bool {
    oracle_first_failure(params, lambda, mu, depth).is_none()
}

/// Membership for a single index `k`.
pub fn oracle_single_k(params: &AlgebraParams, lambda: GVector, mu: GVector, k: i64) -> bool {
    let (l, m) = (int_point(lambda), int_point(mu));
    let (pl, pm) = (crate::tropical::phi_k(params, &l, k), crate::tropical::phi_k(params, &m, k));
    in_cone_ck(&pl, &pm, k)
}

/// Candidates for the oracle comparison: the coset `lambda + bZ x cZ` inside the
/// bounding box of the dominance region, widened by two steps on every side.
pub fn oracle_window(params: &AlgebraParams, lambda: GVector) -> Result<Vec<GVector>> {
    let region = dominance_region(params, lambda)?;
    let (lo0, hi0, lo1, hi1) = region.bounding_box();
    let (b, c) = (params.b(), params.c());
    let first = |lo: i64, a: i64, s: i64| a - s * (a - lo).div_euclid(s);
    let mut out = Vec::new();
    let mut x0 = first(lo0 - 2 * b, lambda.g0, b);
    while x0 <= hi0 + 2 * b {
        let mut x1 = first(lo1 - 2 * c, lambda.g1, c);
        while x1 <= hi1 + 2 * c {
            out.push(GVector::new(x0, x1));
            x1 += c;
        }
        x0 += b;
    }
    Ok(out)
}

/// The points of [`oracle_window`] accepted by the oracle, sorted.
pub fn oracle_lattice_points(params: &AlgebraParams, lambda: GVector, depth: u32) -> Result<Vec<GVector>> {
    Ok(oracle_window(params, lambda)?
        .into_iter()
        .filter(|&mu| dominance_oracle_membership(params, lambda, mu, depth))
        .collect())
}

/// The four half-planes describing `phi_k^{-1} C_k(phi_k lambda)` for imaginary `lambda`.
pub fn pullback_cone_inequalities(table: &ChebyshevTable, lambda: GVector, k: i64) -> Result<Vec<HalfPlane>> {
    let params = table.params();
    if k == 0 {
        return Err(Error::ZeroMutationIndex);
    }
    if !is_imaginary(&params, lambda)? {
        return Err(Error::NotImaginary(lambda.to_string()));
    }
    let disc = params.discriminant()?;
    let u = |i: i64, e: Eps| QuadNum::from_bigint(&table.get(i, e), disc);
    let (m, p) = (Eps::Minus, Eps::Plus);
    let l = qpoint(lambda, disc);
    let level = |a0: &QuadNum, a1: &QuadNum| &(a0 * &l.x0) + &(a1 * &l.x1);
    let rows: Vec<(QuadNum, QuadNum, QuadNum)> = if k > 0 {
        let first = level(&u(k, m), &u(k - 1, p));
        let second = level(&u(k + 1, m), &u(k, p));
        vec![
            (u(k, m), u(k - 1, p), first),
            (u(k + 1, m), u(k, p), second.clone()),
            (-&u(k - 1, m), u(k, p), second.clone()),
            (-&u(k - 1, m), -&u(k - 2, p), second),
        ]
    } else {
        let first = level(&u(k + 1, m), &u(k, p));
        let second = level(&u(k, m), &u(k - 1, p));
        vec![
            (u(k + 1, m), u(k, p), first),
            (u(k, m), u(k - 1, p), second.clone()),
            (u(k, m), -&u(k + 1, p), second.clone()),
            (-&u(k + 2, m), -&u(k + 1, p), second),
        ]
    };
    rows.into_iter().map(|(a0, a1, t)| HalfPlane::new(a0, a1, t, true)).collect()
}

/// `C_0(lambda)` together with the pullback inequalities for `1 <= |k| <= depth`.
pub fn truncated_dominance_halfplanes(table: &ChebyshevTable, lambda: GVector, depth: u32) -> Result<Vec<HalfPlane>> {
    let disc = table.params().discriminant()?;
    let mut hs: Vec<HalfPlane> = cone_ck(&qpoint(lambda, disc), 0).to_vec();
    for j in 1..=depth as i64 {
        hs.extend(pullback_cone_inequalities(table, lambda, j)?);
        hs.extend(pullback_cone_inequalities(table, lambda, -j)?);
    }
    Ok(hs)
}

/// Vertices of the truncated intersection, found by clipping a square of the given half width.
pub fn truncated_dominance_vertices(table: &ChebyshevTable, lambda: GVector, depth: u32, half_width: i64) -> Result<Vec<QPoint>> {
    crate::geometry::intersect_by_clipping(&truncated_dominance_halfplanes(table, lambda, depth)?, half_width)
}

/// The cases of the support region construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SupportCase {
    #[serde(rename = "1.a")]
    Positive,
    #[serde(rename = "1.b")]
    HorizontalSegment,
    #[serde(rename = "1.c")]
    VerticalSegment,
    #[serde(rename = "1.d")]
    Negative,
    #[serde(rename = "1.e")]
    Steep,
    #[serde(rename = "1.f")]
    Punctured,
    #[serde(rename = "2")]
    Imaginary,
}

impl SupportCase {
    pub fn label(&self) -> &'static str {
        match self {
            SupportCase::Positive => "1.a",
            SupportCase::HorizontalSegment => "1.b",
            SupportCase::VerticalSegment => "1.c",
            SupportCase::Negative => "1.d",
            SupportCase::Steep => "1.e",
            SupportCase::Punctured => "1.f",
            SupportCase::Imaginary => "2",
        }
    }
}

impl std::fmt::Display for SupportCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Which case governs `lambda`. The boundary `lambda0 = 0 > lambda1` is treated as 1.d.
pub fn support_case(params: &AlgebraParams, lambda: GVector) -> Result<SupportCase> {
    let (b, c, bc) = (params.b(), params.c(), params.bc());
    let (l0, l1) = (lambda.g0, lambda.g1);
    if l0 >= 0 && l1 >= 0 {
        return Ok(SupportCase::Positive);
    }
    if is_imaginary(params, lambda)? {
        return Ok(SupportCase::Imaginary);
    }
    Ok(if l1 < 0 && l0 + b * l1 >= 0 {
        SupportCase::HorizontalSegment
    } else if l0 < 0 && l1 >= 0 {
        SupportCase::VerticalSegment
    } else if l0 <= 0 {
        SupportCase::Negative
    } else if -c * l0 - (bc - 1) * l1 <= 0 {
        SupportCase::Steep
    } else {
        SupportCase::Punctured
    })
}

/// The maximal support region of an element pointed at `lambda`.
pub fn support_region(params: &AlgebraParams, lambda: GVector) -> Result<Region> {
    let disc = params.discriminant()?;
    let case = support_case(params, lambda)?;
    let (b, c, bc) = (params.b(), params.c(), params.bc());
    let (l0, l1) = (lambda.g0, lambda.g1);
    let p = |x0: i64, x1: i64| QPoint::from_ints(x0, x1, disc);
    let l = p(l0, l1);
    let across = p(l0 + b * l1, l1);
    let up = p(l0 + b * l1, -c * l0 - (bc - 1) * l1);
    let region = match case {
        SupportCase::Positive => Region::point(l),
        SupportCase::HorizontalSegment => Region::from_vertices(&[l, across])?,
        SupportCase::VerticalSegment => Region::from_vertices(&[l, p(l0, -c * l0 + l1)])?,
        SupportCase::Negative => Region::from_vertices(&[l, across, up, p(l0, -c * l0 + l1)])?,
        SupportCase::Steep => {
            let far = p((bc + 1) * l0 + b * b * c * l1, -c * l0 - (bc - 1) * l1);
            Region::from_vertices(&[l, across, up, far])?
        }
        SupportCase::Punctured => {
            let origin = QPoint::origin(disc);
            let excluded = vec![
                Exclusion::Point(origin.clone()),
                Exclusion::OpenSegment(origin.clone(), l.clone()),
                Exclusion::OpenSegment(origin.clone(), up.clone()),
            ];
            Region::from_vertices(&[l, across, up, origin])?.with_exclusions(excluded)
        }
        SupportCase::Imaginary => match Slopes::new(params)?.kappa {
            Some(k) => {
                let tip = p(2 * l0 + b * l1, -c * l0 - (bc - 2) * l1).scale(&k);
                Region::from_vertices(&[l, across, up, tip])?
            }
            None => Region::from_vertices(&[l, across, up])?,
        },
    };
    Ok(region)
}

/// The g-vector of the same element read with the two initial variables exchanged.
pub fn opposite_gvector(params: &AlgebraParams, lambda: GVector) -> GVector {
    let (b, c, bc) = (params.b(), params.c(), params.bc());
    let (l0, l1) = (lambda.g0, lambda.g1);
    if l0 >= 0 && l1 >= 0 {
        lambda
    } else if l1 >= 0 {
        GVector::new(l0, -c * l0 + l1)
    } else if l0 > 0 && l0 + b * l1 > 0 {
        GVector::new(l0 + b * l1, l1)
    } else {
        GVector::new(l0 + b * l1, -c * l0 - (bc - 1) * l1)
    }
}

/// The dominance polygon seen from the opposite g-vector, for imaginary `lambda`.
///
/// Obtained from the dominance polygon of `A(c, b)` at the swapped opposite
/// g-vector, mirrored back, with `mu0 >= lambda'0` and `mu1 <= lambda'1` added.
pub fn opposite_dominance_region(params: &AlgebraParams, lambda: GVector) -> Result<Region> {
    if !is_imaginary(params, lambda)? {
        return Err(Error::NotImaginary(lambda.to_string()));
    }
    let opp = opposite_gvector(params, lambda);
    let mirrored = GVector::new(opp.g1, opp.g0);
    let mut hs: Vec<HalfPlane> = dominance_halfplanes(&params.swapped(), mirrored)?.iter().map(HalfPlane::swapped).collect();
    let disc = params.discriminant()?;
    hs.extend(cone_ck(&qpoint(opp, disc), 1));
    Region::from_halfplanes(hs)
}

/// Closure of `{lambda, lambda'}` under joining to the coordinatewise minimum and
/// scaling towards the origin; this is the hull of those two points, the corner and the origin.
pub fn corner_closure_region(params: &AlgebraParams, lambda: GVector) -> Result<Region> {
    let disc = params.coordinate_field();
    let opp = opposite_gvector(params, lambda);
    let corner = GVector::new(lambda.g0.min(opp.g0), lambda.g1.min(opp.g1));
    let pts: Vec<QPoint> = [lambda, opp, corner, GVector::new(0, 0)].into_iter().map(|g| qpoint(g, disc)).collect();
    Region::from_vertices(&pts)
}

/// `{mu0 >= 0, lambda0 mu1 - lambda1 mu0 >= 0}`, the part of the support region
/// already inside the dominance polygon.
///
/// The second constraint is vacuous, and omitted, when `lambda = 0`.
pub fn region_r(params: &AlgebraParams, lambda: GVector) -> Result<Vec<HalfPlane>> {
    let disc = params.discriminant()?;
    wedge(disc, (-1, 0), (lambda.g1, -lambda.g0))
}

fn wedge(disc: Discriminant, first: (i64, i64), second: (i64, i64)) -> Result<Vec<HalfPlane>> {
    let q = |n: i64| QuadNum::from_int(n, disc);
    let mut hs = vec![HalfPlane::new(q(first.0), q(first.1), q(0), true)?];
    if second != (0, 0) {
        hs.push(HalfPlane::new(q(second.0), q(second.1), q(0), true)?);
    }
    Ok(hs)
}

/// `{mu1 >= 0, lambda'1 mu0 - lambda'0 mu1 >= 0}` for the opposite g-vector `lambda'`.
pub fn region_r_prime(params: &AlgebraParams, lambda: GVector) -> Result<Vec<HalfPlane>> {
    let disc = params.discriminant()?;
    let opp = opposite_gvector(params, lambda);
    wedge(disc, (0, -1), (-opp.g1, opp.g0))
}

/// Intersection of a region with extra closed half-planes; exclusions are dropped.
pub fn restrict(region: &Region, extra: &[HalfPlane]) -> Result<Region> {
    let mut hs = region.halfplanes().to_vec();
    hs.extend_from_slice(extra);
    Region::from_halfplanes(hs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(b: i64, c: i64) -> AlgebraParams {
        AlgebraParams::new(b, c).unwrap()
    }

    fn g(a: i64, b: i64) -> GVector {
        GVector::new(a, b)
    }

    fn gs(v: &[(i64, i64)]) -> Vec<GVector> {
        v.iter().map(|&(a, b)| g(a, b)).collect()
    }

    fn approx(pts: &[QPoint]) -> Vec<[String; 2]> {
        pts.iter().map(|p| p.approx(3)).collect()
    }

    #[test]
    fn affine_segment() {
        let p = params(2, 2);
        let r = dominance_region(&p, g(3, -3)).unwrap();
        assert_eq!(r.kind(), crate::geometry::RegionKind::Segment);
        assert_eq!(approx(r.vertices()), vec![["0.000", "0.000"], ["3.000", "-3.000"]]);
        assert_eq!(dominated_lattice_points(&p, g(3, -3)).unwrap(), gs(&[(1, -1), (3, -3)]));
        assert_eq!(dominated_lattice_points(&p, g(4, -4)).unwrap(), gs(&[(0, 0), (2, -2), (4, -4)]));
    }

    #[test]
    fn real_vectors_dominate_only_themselves() {
        let p = params(3, 2);
        assert_eq!(dominance_region(&p, g(1, 0)).unwrap().kind(), crate::geometry::RegionKind::Point);
        assert_eq!(dominated_lattice_points(&p, g(1, 1)).unwrap(), gs(&[(1, 1)]));
        assert!(dominance_region(&params(1, 3), g(1, 0)).is_err());
    }

    #[test]
    fn kite_for_3_2() {
        let p = params(3, 2);
        let class = classify(&p, g(4, -3)).unwrap();
        assert_eq!(class.class, 4);
        assert_eq!(class.shape(), "kite");
        assert_eq!(approx(&class.vertices), vec![["4.000", "-3.000"], ["0.000", "3.309"], ["-1.366", "2.732"], ["-3.098", "0.000"]]);
        let region = dominance_region(&p, g(4, -3)).unwrap();
        let as_region = Region::from_vertices(&class.vertices).unwrap();
        assert!(region.same_vertices(&as_region));
        assert!(region.contains(&QPoint::from_ints(0, 0, p.discriminant().unwrap())));
    }

    #[test]
    fn class_examples() {
        let p = params(3, 2);
        assert_eq!(classify(&p, g(2, -2)).unwrap().class, 3);
        assert_eq!(classify(&p, g(0, 1)).unwrap().class, 1);
        assert_eq!(classify(&p, g(0, 0)).unwrap().class, 1);
        assert_eq!(classify(&p, g(3, -2)).unwrap().class, 5);
        assert_eq!(classify(&params(2, 2), g(1, -1)).unwrap().class, 3);
    }

    #[test]
    fn class_vertices_are_region_vertices() {
        for (b, c) in [(2, 2), (3, 2), (2, 3), (1, 4), (3, 3), (1, 5), (4, 1)] {
            let p = params(b, c);
            for l0 in 0..=8 {
                for l1 in -12..=2 {
                    let l = g(l0, l1);
                    let class = classify(&p, l).unwrap();
                    let region = dominance_region(&p, l).unwrap();
                    let mut dedup: Vec<QPoint> = Vec::new();
                    for v in &class.vertices {
                        if !dedup.contains(v) {
                            dedup.push(v.clone());
                        }
                    }
                    let mine = Region::from_vertices(&dedup).unwrap();
                    assert!(region.same_vertices(&mine), "({b},{c}) {l} class {}", class.class);
                    if class.class > 1 {
                        let hs = dominance_halfplanes(&p, l).unwrap();
                        for v in &class.vertices {
                            assert!(hs.iter().all(|h| h.contains(v)));
                            assert!(hs.iter().filter(|h| h.is_tight(v)).count() >= 2);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn neighbouring_classes_agree_on_rays() {
        let dedup = |v: Vec<QPoint>| Region::from_vertices(&v).unwrap();
        for (b, c) in [(3, 2), (2, 3), (1, 5), (3, 3)] {
            let p = params(b, c);
            for t in 1..=3 {
                let on_first = g(2 * t, -c * t);
                assert!(dedup(class_vertices(&p, on_first, 2).unwrap()).same_vertices(&dedup(class_vertices(&p, on_first, 3).unwrap())));
                let on_second = g(b * t, -2 * t);
                assert!(dedup(class_vertices(&p, on_second, 6).unwrap()).same_vertices(&dedup(class_vertices(&p, on_second, 5).unwrap())));
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let p = params(3, 2);
        assert!(dominance_oracle_membership(&p, g(1, 1), g(1, 1), 7));
        assert!(!dominance_oracle_membership(&p, g(1, 0), g(0, 1), 2));
        assert!(dominance_oracle_membership(&params(2, 2), g(3, -3), g(1, -1), 20));
    }

    #[test]
    fn oracle_matches_closed_form_small_sweep() {
        for (b, c) in [(2, 2), (3, 2), (1, 4)] {
            let p = params(b, c);
            for l0 in -3..=4 {
                for l1 in -4..=3 {
                    let l = g(l0, l1);
                    assert_eq!(oracle_lattice_points(&p, l, 24).unwrap(), dominated_lattice_points(&p, l).unwrap(), "({b},{c}) {l}");
                }
            }
        }
    }

    #[test]
    fn oracle_failures_persist() {
        let p = params(2, 3);
        for mu in [g(0, 0), g(2, -3), g(-2, 3), g(4, -6)] {
            let first = oracle_first_failure(&p, g(4, -3), mu, 30);
            for depth in 0..12 {
                let member = dominance_oracle_membership(&p, g(4, -3), mu, depth);
                assert_eq!(member, first.is_none_or(|k| k.unsigned_abs() > depth as u64));
            }
        }
    }

    #[test]
    fn pullback_for_k_one() {
        let p = params(3, 2);
        let table = ChebyshevTable::new(p);
        let hs = pullback_cone_inequalities(&table, g(4, -3), 1).unwrap();
        let d = p.discriminant().unwrap();
        let expect = [HalfPlane::int(1, 0, 4, d), HalfPlane::int(2, 1, 5, d), HalfPlane::int(0, 1, 5, d), HalfPlane::int(0, 1, 5, d)];
        for (h, e) in hs.iter().zip(expect.iter()) {
            assert!(h.equivalent(e), "{h} vs {e}");
        }
        assert!(pullback_cone_inequalities(&table, g(1, 0), 1).is_err());
        assert!(pullback_cone_inequalities(&table, g(4, -3), 0).is_err());
    }

    #[test]
    fn pullback_matches_single_index() {
        for (b, c, l) in [(3, 2, g(4, -3)), (2, 3, g(4, -3)), (2, 2, g(2, -2)), (1, 4, g(1, -2))] {
            let p = params(b, c);
            let table = ChebyshevTable::new(p);
            let d = p.discriminant().unwrap();
            for k in [-4, -3, -2, -1, 1, 2, 3, 4] {
                let hs = pullback_cone_inequalities(&table, l, k).unwrap();
                for m0 in -20..=20 {
                    for m1 in -20..=20 {
                        let mu = g(m0, m1);
                        let q = QPoint::from_ints(m0, m1, d);
                        assert_eq!(hs.iter().all(|h| h.contains(&q)), oracle_single_k(&p, l, mu, k), "({b},{c}) {l} k={k} {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn truncation_approaches_polygon() {
        let p = params(2, 3);
        let table = ChebyshevTable::new(p);
        let l = g(4, -3);
        let polygon = dominance_region(&p, l).unwrap().vertices_f64();
        let coarse = truncated_dominance_vertices(&table, l, 4, 1_000).unwrap();
        let fine = truncated_dominance_vertices(&table, l, 16, 1_000).unwrap();
        let f64s = |v: &[QPoint]| v.iter().map(QPoint::to_f64).collect::<Vec<_>>();
        let (dc, df) = (
            crate::geometry::hausdorff_distance(&f64s(&coarse), &polygon),
            crate::geometry::hausdorff_distance(&f64s(&fine), &polygon),
        );
        assert!(df <= dc);
        assert!(df < 1e-4, "{df}");
    }

    #[test]
    fn support_examples() {
        let p = params(2, 2);
        assert_eq!(support_case(&p, g(2, 1)).unwrap(), SupportCase::Positive);
        assert_eq!(support_region(&p, g(2, 1)).unwrap().lattice_points(g(2, 1), &p), gs(&[(2, 1)]));
        let s = support_region(&p, g(0, -1)).unwrap();
        assert_eq!(s.lattice_points(g(0, -1), &p), gs(&[(-2, -1), (-2, 1), (-2, 3), (0, -1)]));
        let s = support_region(&p, g(2, -2)).unwrap();
        assert_eq!(support_case(&p, g(2, -2)).unwrap(), SupportCase::Imaginary);
        assert_eq!(approx(s.vertices()), vec![["-2.000", "-2.000"], ["2.000", "-2.000"], ["-2.000", "2.000"]]);
    }

    fn sorted_support(poly: &crate::laurent::LaurentPoly) -> Vec<GVector> {
        let mut v: Vec<GVector> = poly.support().iter().map(|e| g(e.e0, e.e1)).collect();
        v.sort();
        v
    }

    #[test]
    fn support_matches_cluster_monomials() {
        for (b, c) in [(2, 2), (3, 2), (2, 3), (1, 4)] {
            let p = params(b, c);
            let algebra = crate::laurent::ClusterAlgebra::new(p);
            for k in -4..=4 {
                for (a, a2) in [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2), (3, 0)] {
                    let poly = algebra.monomial(k, a, a2).unwrap();
                    let lambda = crate::laurent::g_vector(&p, &poly).unwrap();
                    let support = sorted_support(&poly);
                    let region = support_region(&p, lambda).unwrap();
                    let case = support_case(&p, lambda).unwrap();
                    let points = region.lattice_points(lambda, &p);
                    if case == SupportCase::Punctured {
                        assert!(support.iter().all(|m| points.contains(m)), "({b},{c}) k={k} {lambda}");
                        for v in region.vertices() {
                            if let Some(gv) = v.to_gvector().filter(|gv| !gv.is_zero()) {
                                assert!(support.contains(&gv), "({b},{c}) k={k} {lambda} vertex {gv}");
                            }
                        }
                    } else {
                        assert_eq!(points, support, "({b},{c}) k={k} a=({a},{a2}) {lambda} {case}");
                    }
                }
            }
        }
    }

    // x3 x4^3 in A(2,2): all coefficients are positive, so its support is the
    // Minkowski sum of the factors' supports, and (-1, 1) is not reachable.
    #[test]
    fn punctured_polygon_can_hold_extra_points() {
        let p = params(2, 2);
        let poly = crate::laurent::cluster_monomial(&p, 3, 1, 3).unwrap();
        let lambda = crate::laurent::g_vector(&p, &poly).unwrap();
        assert_eq!(lambda, g(3, -7));
        assert_eq!(support_case(&p, lambda).unwrap(), SupportCase::Punctured);
        let points = support_region(&p, lambda).unwrap().lattice_points(lambda, &p);
        let support = sorted_support(&poly);
        let extra: Vec<GVector> = points.into_iter().filter(|m| !support.contains(m)).collect();
        assert_eq!(extra, vec![g(-1, 1)]);
    }

    #[test]
    fn punctured_case_excludes_origin() {
        let p = params(3, 2);
        let l = g(1, -2);
        assert_eq!(support_case(&p, l).unwrap(), SupportCase::Punctured);
        let s = support_region(&p, l).unwrap();
        let d = p.discriminant().unwrap();
        assert!(!s.contains(&QPoint::origin(d)));
        assert!(s.closure_contains(&QPoint::origin(d)));
        assert!(s.contains(&QPoint::from_ints(1, -2, d)));
        assert!(!s.contains(&QPoint::from_ints(-1, 2, d)));
    }

    #[test]
    fn opposite_examples() {
        assert_eq!(opposite_gvector(&params(2, 2), g(2, 1)), g(2, 1));
        assert_eq!(opposite_gvector(&params(3, 2), g(-1, 2)), g(-1, 4));
        assert_eq!(opposite_gvector(&params(2, 2), g(1, -1)), g(-1, 1));
    }

    #[test]
    fn opposite_region_examples() {
        let p = params(2, 2);
        let r = opposite_dominance_region(&p, g(2, -2)).unwrap();
        assert_eq!(approx(r.vertices()), vec![["-2.000", "2.000"], ["0.000", "0.000"]]);
        let p = params(3, 2);
        let r = opposite_dominance_region(&p, g(4, -3)).unwrap();
        let mut got = approx(r.vertices());
        got.sort();
        let mut want = vec![["-5.000", "7.000"], ["-1.366", "5.464"], ["2.098", "0.000"], ["0.000", "-0.887"]]
            .into_iter()
            .map(|[a, b]| [a.to_string(), b.to_string()])
            .collect::<Vec<_>>();
        want.sort();
        assert_eq!(got, want);
        let d = p.discriminant().unwrap();
        assert!(r.contains(&QPoint::from_ints(-5, 7, d)));
        assert!(opposite_dominance_region(&p, g(1, 0)).is_err());
    }

    #[test]
    fn corner_closure_examples() {
        let p = params(2, 2);
        let r = corner_closure_region(&p, g(1, -1)).unwrap();
        assert_eq!(approx(r.vertices()), vec![["-1.000", "-1.000"], ["1.000", "-1.000"], ["-1.000", "1.000"]]);
        let r = corner_closure_region(&p, g(2, 1)).unwrap();
        assert_eq!(approx(r.vertices()), vec![["0.000", "0.000"], ["2.000", "1.000"]]);
        let r = corner_closure_region(&p, g(3, -3)).unwrap();
        assert_eq!(r.vertices().len(), 3);
    }

    #[test]
    fn containments_and_r_regions() {
        for (b, c) in [(2, 2), (3, 2), (2, 3), (1, 4)] {
            let p = params(b, c);
            for l0 in 0..=6 {
                for l1 in -14..=0 {
                    let l = g(l0, l1);
                    if !is_imaginary(&p, l).unwrap() {
                        continue;
                    }
                    let s = support_region(&p, l).unwrap();
                    let dom = dominance_region(&p, l).unwrap();
                    let opp = opposite_dominance_region(&p, l).unwrap();
                    assert!(s.closure_contains_region(&dom) && s.closure_contains_region(&opp), "({b},{c}) {l}");
                    for mu in dominated_lattice_points(&p, l).unwrap() {
                        assert!(s.closure_contains_region(&corner_closure_region(&p, mu).unwrap()));
                    }
                    let in_r = restrict(&s, &region_r(&p, l).unwrap()).unwrap_or_else(|e| panic!("({b},{c}) {l} {e}"));
                    for mu in in_r.lattice_points(l, &p) {
                        assert!(dom.contains_gvector(mu), "({b},{c}) {l} {mu}");
                    }
                    let in_r2 = restrict(&s, &region_r_prime(&p, l).unwrap()).unwrap();
                    for mu in in_r2.lattice_points(l, &p) {
                        assert!(opp.contains_gvector(mu), "({b},{c}) {l} {mu} (opposite)");
                    }
                }
            }
        }
    }
}
