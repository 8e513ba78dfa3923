//! Exact planar geometry over `Q(sqrt(D))`.
//!
//! Regions are conjunctions of half-planes `alpha . mu <= bound` (strict when
//! not closed), optionally minus a few boundary pieces. Every region built
//! here is nonempty and bounded, and carries its vertex list.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::laurent::GVector;
use crate::numeric::{Discriminant, QuadNum, Rational, Sgn};
use crate::{AlgebraParams, Error, Result};

/// Decimal digits used for the `vertices_preview` field of region JSON.
pub const DEFAULT_PREVIEW_DIGITS: usize = 6;

/// A point of the plane with coordinates in some ordered ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point2<T> {
    pub x0: T,
    pub x1: T,
}

pub type QPoint = Point2<QuadNum>;
pub type IntPoint = Point2<BigInt>;

impl<T> Point2<T> {
    pub fn new(x0: T, x1: T) -> Self {
        Point2 { x0, x1 }
    }

    pub fn swapped(self) -> Self {
        Point2 { x0: self.x1, x1: self.x0 }
    }
}

impl<T: Serialize> Serialize for Point2<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (&self.x0, &self.x1).serialize(s)
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Point2<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (x0, x1) = <(T, T)>::deserialize(d)?;
        Ok(Point2 { x0, x1 })
    }
}

impl<T: fmt::Display> fmt::Display for Point2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x0, self.x1)
    }
}

impl IntPoint {
    pub fn from_gvector(g: GVector) -> Self {
        Point2::new(BigInt::from(g.g0), BigInt::from(g.g1))
    }
}

impl QPoint {
    pub fn from_ints(x0: i64, x1: i64, disc: Discriminant) -> Self {
        Point2::new(QuadNum::from_int(x0, disc), QuadNum::from_int(x1, disc))
    }

    pub fn from_gvector(g: GVector, disc: Discriminant) -> Self {
        Self::from_ints(g.g0, g.g1, disc)
    }

    pub fn from_int_point(p: &IntPoint, disc: Discriminant) -> Self {
        Point2::new(QuadNum::from_bigint(&p.x0, disc), QuadNum::from_bigint(&p.x1, disc))
    }

    pub fn origin(disc: Discriminant) -> Self {
        Self::from_ints(0, 0, disc)
    }

    pub fn disc(&self) -> Discriminant {
        self.x0.disc()
    }

    /// The lattice point this is, if both coordinates are integers.
    pub fn to_gvector(&self) -> Option<GVector> {
        let c0 = self.x0.as_rational()?;
        let c1 = self.x1.as_rational()?;
        if !c0.is_integer() || !c1.is_integer() {
            return None;
        }
        Some(GVector::new(c0.to_integer().to_i64()?, c1.to_integer().to_i64()?))
    }

    pub fn add(&self, o: &QPoint) -> QPoint {
        Point2::new(&self.x0 + &o.x0, &self.x1 + &o.x1)
    }

    pub fn sub(&self, o: &QPoint) -> QPoint {
        Point2::new(&self.x0 - &o.x0, &self.x1 - &o.x1)
    }

    pub fn scale(&self, k: &QuadNum) -> QPoint {
        Point2::new(&self.x0 * k, &self.x1 * k)
    }

    pub fn dot(&self, o: &QPoint) -> QuadNum {
        &self.x0 * &o.x0 + &self.x1 * &o.x1
    }

    /// `self.x0 * o.x1 - self.x1 * o.x0`.
    pub fn cross(&self, o: &QPoint) -> QuadNum {
        &self.x0 * &o.x1 - &self.x1 * &o.x0
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x0.to_f64(), self.x1.to_f64())
    }

    pub fn approx(&self, digits: usize) -> [String; 2] {
        [self.x0.approx(digits), self.x1.approx(digits)]
    }
}

/// Exact comparison of two numbers from the same field.
pub fn cmp_q(a: &QuadNum, b: &QuadNum) -> Ordering {
    (a - b).sign().to_ordering()
}

fn cmp_lex(p: &QPoint, q: &QPoint) -> Ordering {
    cmp_q(&p.x0, &q.x0).then_with(|| cmp_q(&p.x1, &q.x1))
}

/// `{mu : alpha . mu <= bound}`, or `<` when `closed` is false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfPlane {
    alpha0: QuadNum,
    alpha1: QuadNum,
    bound: QuadNum,
    closed: bool,
}

impl HalfPlane {
    pub fn new(alpha0: QuadNum, alpha1: QuadNum, bound: QuadNum, closed: bool) -> Result<Self> {
        if alpha0.disc() != alpha1.disc() {
            return Err(Error::DiscriminantMismatch(alpha0.disc().value(), alpha1.disc().value()));
        }
        if alpha0.disc() != bound.disc() {
            return Err(Error::DiscriminantMismatch(alpha0.disc().value(), bound.disc().value()));
        }
        if alpha0.is_zero() && alpha1.is_zero() {
            return Err(Error::Parse("half-plane normal must be nonzero".into()));
        }
        Ok(HalfPlane { alpha0, alpha1, bound, closed })
    }

    /// Closed half-plane; panics on a zero normal, which callers rule out by construction.
    pub fn closed(alpha0: QuadNum, alpha1: QuadNum, bound: QuadNum) -> Self {
        Self::new(alpha0, alpha1, bound, true).expect("half-plane normal is nonzero")
    }

    /// Closed half-plane with integer data.
    pub fn int(alpha0: i64, alpha1: i64, bound: i64, disc: Discriminant) -> Self {
        Self::closed(QuadNum::from_int(alpha0, disc), QuadNum::from_int(alpha1, disc), QuadNum::from_int(bound, disc))
    }

    /// `lo <= alpha . mu <= hi` as two closed half-planes.
    pub fn two_sided(alpha0: &QuadNum, alpha1: &QuadNum, lo: &QuadNum, hi: &QuadNum) -> [HalfPlane; 2] {
        [Self::closed(-alpha0, -alpha1, -lo), Self::closed(alpha0.clone(), alpha1.clone(), hi.clone())]
    }

    pub fn alpha0(&self) -> &QuadNum {
        &self.alpha0
    }

    pub fn alpha1(&self) -> &QuadNum {
        &self.alpha1
    }

    pub fn alpha(&self) -> QPoint {
        Point2::new(self.alpha0.clone(), self.alpha1.clone())
    }

    pub fn bound(&self) -> &QuadNum {
        &self.bound
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn disc(&self) -> Discriminant {
        self.alpha0.disc()
    }

    /// `alpha . mu - bound`, nonpositive inside.
    pub fn slack(&self, mu: &QPoint) -> QuadNum {
        &self.alpha0 * &mu.x0 + &self.alpha1 * &mu.x1 - &self.bound
    }

    pub fn contains(&self, mu: &QPoint) -> bool {
        match self.slack(mu).sign() {
            Sgn::Negative => true,
            Sgn::Zero => self.closed,
            Sgn::Positive => false,
        }
    }

    pub fn is_tight(&self, mu: &QPoint) -> bool {
        self.slack(mu).is_zero()
    }

    pub fn swapped(&self) -> HalfPlane {
        HalfPlane { alpha0: self.alpha1.clone(), alpha1: self.alpha0.clone(), bound: self.bound.clone(), closed: self.closed }
    }

    /// The same half-plane with the normal divided by a positive scalar.
    pub fn normalized_by(&self, k: &QuadNum) -> HalfPlane {
        debug_assert!(k.is_positive());
        HalfPlane { alpha0: &self.alpha0 / k, alpha1: &self.alpha1 / k, bound: &self.bound / k, closed: self.closed }
    }

    /// Whether two half-planes describe the same set.
    pub fn equivalent(&self, other: &HalfPlane) -> bool {
        if self.closed != other.closed {
            return false;
        }
        // proportional with a positive factor
        let cross = &self.alpha0 * &other.alpha1 - &self.alpha1 * &other.alpha0;
        if !cross.is_zero() {
            return false;
        }
        let same_dir = (&self.alpha0 * &other.alpha0 + &self.alpha1 * &other.alpha1).is_positive();
        if !same_dir {
            return false;
        }
        let (a, b) = if self.alpha0.is_zero() { (&self.alpha1, &other.alpha1) } else { (&self.alpha0, &other.alpha0) };
        (&self.bound * b - &other.bound * a).is_zero()
    }
}

impl fmt::Display for HalfPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.closed { "<=" } else { "<" };
        write!(f, "({})*mu0 + ({})*mu1 {} {}", self.alpha0, self.alpha1, op, self.bound)
    }
}

#[derive(Serialize, Deserialize)]
struct HalfPlaneRepr {
    alpha: [QuadNum; 2],
    bound: QuadNum,
    closed: bool,
}

impl Serialize for HalfPlane {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HalfPlaneRepr { alpha: [self.alpha0.clone(), self.alpha1.clone()], bound: self.bound.clone(), closed: self.closed }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HalfPlane {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = HalfPlaneRepr::deserialize(d)?;
        let [a0, a1] = r.alpha;
        HalfPlane::new(a0, a1, r.bound, r.closed).map_err(D::Error::custom)
    }
}

/// A 2x2 rational matrix acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix2 {
    pub m: [[Rational; 2]; 2],
}

impl Matrix2 {
    pub fn new(m: [[Rational; 2]; 2]) -> Self {
        Matrix2 { m }
    }

    pub fn from_ints(m: [[i64; 2]; 2]) -> Self {
        let r = |v: i64| Rational::from_integer(BigInt::from(v));
        Matrix2 { m: [[r(m[0][0]), r(m[0][1])], [r(m[1][0]), r(m[1][1])]] }
    }

    pub fn identity() -> Self {
        Self::from_ints([[1, 0], [0, 1]])
    }

    pub fn det(&self) -> Rational {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn inverse(&self) -> Result<Matrix2> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let m = &self.m;
        Ok(Matrix2 {
            m: [[&m[1][1] / &det, -&m[0][1] / &det], [-&m[1][0] / &det, &m[0][0] / &det]],
        })
    }

    pub fn transpose(&self) -> Matrix2 {
        let m = &self.m;
        Matrix2 { m: [[m[0][0].clone(), m[1][0].clone()], [m[0][1].clone(), m[1][1].clone()]] }
    }

    pub fn apply(&self, p: &QPoint) -> QPoint {
        let m = &self.m;
        Point2::new(p.x0.scale(&m[0][0]) + p.x1.scale(&m[0][1]), p.x0.scale(&m[1][0]) + p.x1.scale(&m[1][1]))
    }
}

/// Image of a half-plane under `mu -> M mu`: the normal becomes `M^{-T} alpha`, the bound is unchanged.
pub fn transform_halfplane(m: &Matrix2, h: &HalfPlane) -> Result<HalfPlane> {
    let inv_t = m.inverse()?.transpose();
    let alpha = inv_t.apply(&h.alpha());
    HalfPlane::new(alpha.x0, alpha.x1, h.bound.clone(), h.closed)
}

/// A boundary piece removed from a region.
#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exclusion {
    Point(QPoint),
    /// The segment between the two points, endpoints not included.
    OpenSegment(QPoint, QPoint),
}

impl Exclusion {
    pub fn covers(&self, x: &QPoint) -> bool {
        match self {
            Exclusion::Point(p) => p == x,
            Exclusion::OpenSegment(p, q) => {
                let d = q.sub(p);
                let v = x.sub(p);
                d.cross(&v).is_zero() && d.dot(&v).is_positive() && x.sub(q).dot(&p.sub(q)).is_positive()
            }
        }
    }

    fn swapped(&self) -> Exclusion {
        match self {
            Exclusion::Point(p) => Exclusion::Point(p.clone().swapped()),
            Exclusion::OpenSegment(p, q) => Exclusion::OpenSegment(p.clone().swapped(), q.clone().swapped()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionKind {
    Point,
    Segment,
    Polygon,
}

impl fmt::Display for RegionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegionKind::Point => "point",
            RegionKind::Segment => "segment",
            RegionKind::Polygon => "polygon",
        })
    }
}

/// A nonempty bounded convex region, possibly with boundary pieces removed.
///
/// Polygon vertices are stored counterclockwise; a segment stores its two
/// endpoints in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    halfplanes: Vec<HalfPlane>,
    excluded: Vec<Exclusion>,
    kind: RegionKind,
    vertices: Vec<QPoint>,
}

impl Region {
    /// Intersects closed versions of the half-planes by pairwise line intersection.
    ///
    /// Open half-planes keep their flag for membership tests, but vertices are
    /// computed for the closure.
    pub fn from_halfplanes(halfplanes: Vec<HalfPlane>) -> Result<Region> {
        let disc = halfplanes.first().ok_or(Error::Unbounded)?.disc();
        if let Some(h) = halfplanes.iter().find(|h| h.disc() != disc) {
            return Err(Error::DiscriminantMismatch(disc.value(), h.disc().value()));
        }
        if recession_direction(&halfplanes).is_some() {
            return Err(Error::Unbounded);
        }
        let mut pts: Vec<QPoint> = Vec::new();
        for i in 0..halfplanes.len() {
            for j in i + 1..halfplanes.len() {
                let Some(p) = line_intersection(&halfplanes[i], &halfplanes[j]) else { continue };
                if halfplanes.iter().all(|h| !h.slack(&p).is_positive()) && !pts.contains(&p) {
                    pts.push(p);
                }
            }
        }
        if pts.is_empty() {
            return Err(Error::EmptyRegion);
        }
        let (kind, vertices) = order_extreme_points(pts);
        Ok(Region { halfplanes, excluded: Vec::new(), kind, vertices })
    }

    /// Convex hull of the given points, with one half-plane per edge.
    pub fn from_vertices(points: &[QPoint]) -> Result<Region> {
        let first = points.first().ok_or(Error::EmptyRegion)?;
        let disc = first.disc();
        let hull = convex_hull(points);
        let zero = QuadNum::zero(disc);
        let one = QuadNum::one(disc);
        let (kind, halfplanes) = match hull.len() {
            1 => {
                let p = &hull[0];
                let mut hs = Vec::new();
                hs.extend(HalfPlane::two_sided(&one, &zero, &p.x0, &p.x0));
                hs.extend(HalfPlane::two_sided(&zero, &one, &p.x1, &p.x1));
                (RegionKind::Point, hs)
            }
            2 => {
                let (p, q) = (&hull[0], &hull[1]);
                let e = q.sub(p);
                let normal = Point2::new(e.x1.clone(), -&e.x0);
                let level = normal.dot(p);
                let mut hs = Vec::new();
                hs.extend(HalfPlane::two_sided(&normal.x0, &normal.x1, &level, &level));
                hs.extend(HalfPlane::two_sided(&e.x0, &e.x1, &e.dot(p), &e.dot(q)));
                (RegionKind::Segment, hs)
            }
            n => {
                let hs = (0..n)
                    .map(|i| {
                        let (p, q) = (&hull[i], &hull[(i + 1) % n]);
                        let e = q.sub(p);
                        let normal = Point2::new(e.x1.clone(), -&e.x0);
                        let level = normal.dot(p);
                        HalfPlane::closed(normal.x0, normal.x1, level)
                    })
                    .collect();
                (RegionKind::Polygon, hs)
            }
        };
        Ok(Region { halfplanes, excluded: Vec::new(), kind, vertices: hull })
    }

    pub fn point(p: QPoint) -> Region {
        Self::from_vertices(&[p]).expect("a single point is a region")
    }

    pub fn with_exclusions(mut self, excluded: Vec<Exclusion>) -> Region {
        self.excluded = excluded;
        self
    }

    pub fn kind(&self) -> RegionKind {
        self.kind
    }

    pub fn vertices(&self) -> &[QPoint] {
        &self.vertices
    }

    pub fn halfplanes(&self) -> &[HalfPlane] {
        &self.halfplanes
    }

    pub fn excluded(&self) -> &[Exclusion] {
        &self.excluded
    }

    pub fn disc(&self) -> Discriminant {
        self.vertices[0].disc()
    }

    /// Exact membership, honouring strict half-planes and exclusions.
    pub fn contains(&self, p: &QPoint) -> bool {
        self.halfplanes.iter().all(|h| h.contains(p)) && !self.excluded.iter().any(|e| e.covers(p))
    }

    /// Membership in the closure (all half-planes taken closed, no exclusions).
    pub fn closure_contains(&self, p: &QPoint) -> bool {
        self.halfplanes.iter().all(|h| !h.slack(p).is_positive())
    }

    pub fn contains_gvector(&self, g: GVector) -> bool {
        self.contains(&QPoint::from_gvector(g, self.disc()))
    }

    /// Whether every vertex of `other` lies in the closure of `self`; by convexity
    /// this is containment of closures.
    pub fn closure_contains_region(&self, other: &Region) -> bool {
        other.vertices.iter().all(|v| self.closure_contains(v))
    }

    /// Integer box `[lo0, hi0] x [lo1, hi1]` containing the region.
    pub fn bounding_box(&self) -> (i64, i64, i64, i64) {
        let to = |v: BigInt| v.to_i64().expect("bounding box exceeds i64");
        let lo0 = self.vertices.iter().map(|v| v.x0.floor()).min().unwrap();
        let hi0 = self.vertices.iter().map(|v| v.x0.ceil()).max().unwrap();
        let lo1 = self.vertices.iter().map(|v| v.x1.floor()).min().unwrap();
        let hi1 = self.vertices.iter().map(|v| v.x1.ceil()).max().unwrap();
        (to(lo0), to(hi0), to(lo1), to(hi1))
    }

    /// Points of `anchor + bZ x cZ` inside the region, sorted lexicographically.
    pub fn lattice_points(&self, anchor: GVector, params: &AlgebraParams) -> Vec<GVector> {
        self.coset_points(anchor, params.b(), params.c())
    }

    /// Points of `anchor + step0 Z x step1 Z` inside the region, sorted lexicographically.
    pub fn coset_points(&self, anchor: GVector, step0: i64, step1: i64) -> Vec<GVector> {
        let (lo0, hi0, lo1, hi1) = self.bounding_box();
        let first = |lo: i64, a: i64, s: i64| a + s * (lo - a).div_euclid(s) + if (lo - a).rem_euclid(s) == 0 { 0 } else { s };
        let disc = self.disc();
        let mut out = Vec::new();
        let mut x0 = first(lo0, anchor.g0, step0);
        while x0 <= hi0 {
            let mut x1 = first(lo1, anchor.g1, step1);
            while x1 <= hi1 {
                if self.contains(&QPoint::from_ints(x0, x1, disc)) {
                    out.push(GVector::new(x0, x1));
                }
                x1 += step1;
            }
            x0 += step0;
        }
        out
    }

    /// Mirror image under `(mu0, mu1) -> (mu1, mu0)`.
    pub fn swapped(&self) -> Region {
        let mut vertices: Vec<QPoint> = self.vertices.iter().map(|v| v.clone().swapped()).collect();
        match self.kind {
            RegionKind::Polygon => {
                vertices.reverse();
                let n = vertices.len();
                // restart at the lexicographically smallest vertex so the order is canonical
                let start = (0..n).min_by(|&i, &j| cmp_lex(&vertices[i], &vertices[j])).unwrap();
                vertices.rotate_left(start);
            }
            RegionKind::Segment => vertices.sort_by(cmp_lex),
            RegionKind::Point => {}
        }
        Region {
            halfplanes: self.halfplanes.iter().map(HalfPlane::swapped).collect(),
            excluded: self.excluded.iter().map(Exclusion::swapped).collect(),
            kind: self.kind,
            vertices,
        }
    }

    /// Same vertex set (as sets), ignoring half-plane presentation.
    pub fn same_vertices(&self, other: &Region) -> bool {
        self.vertices.len() == other.vertices.len() && self.vertices.iter().all(|v| other.vertices.contains(v))
    }

    pub fn vertices_preview(&self, digits: usize) -> Vec<[String; 2]> {
        self.vertices.iter().map(|v| v.approx(digits)).collect()
    }

    pub fn vertices_f64(&self) -> Vec<(f64, f64)> {
        self.vertices.iter().map(QPoint::to_f64).collect()
    }

    pub fn to_document(&self, digits: usize) -> RegionDocument<'_> {
        RegionDocument {
            kind: self.kind,
            halfplanes: &self.halfplanes,
            vertices: &self.vertices,
            excluded: &self.excluded,
            vertices_preview: self.vertices_preview(digits),
        }
    }
}

/// The JSON shape of a region, with a decimal preview at a chosen precision.
#[derive(Debug, Serialize)]
pub struct RegionDocument<'a> {
    pub kind: RegionKind,
    pub halfplanes: &'a [HalfPlane],
    pub vertices: &'a [QPoint],
    pub excluded: &'a [Exclusion],
    pub vertices_preview: Vec<[String; 2]>,
}

impl Serialize for Region {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_document(DEFAULT_PREVIEW_DIGITS).serialize(s)
    }
}

#[derive(Deserialize)]
struct RegionOwned {
    kind: RegionKind,
    halfplanes: Vec<HalfPlane>,
    vertices: Vec<QPoint>,
    #[serde(default)]
    excluded: Vec<Exclusion>,
}

impl<'de> Deserialize<'de> for Region {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RegionOwned::deserialize(d)?;
        let expected = match r.vertices.len() {
            0 => return Err(D::Error::custom("region without vertices")),
            1 => RegionKind::Point,
            2 => RegionKind::Segment,
            _ => RegionKind::Polygon,
        };
        if expected != r.kind {
            return Err(D::Error::custom(format!("kind {} does not match {} vertices", r.kind, r.vertices.len())));
        }
        if r.halfplanes.is_empty() {
            return Err(D::Error::custom("region without half-planes"));
        }
        let disc = r.vertices[0].disc();
        let consistent = r.vertices.iter().all(|v| v.x0.disc() == disc && v.x1.disc() == disc)
            && r.halfplanes.iter().all(|h| h.disc() == disc);
        if !consistent {
            return Err(D::Error::custom("mixed discriminants in region"));
        }
        Ok(Region { halfplanes: r.halfplanes, excluded: r.excluded, kind: r.kind, vertices: r.vertices })
    }
}

fn line_intersection(h: &HalfPlane, g: &HalfPlane) -> Option<QPoint> {
    let det = &h.alpha0 * &g.alpha1 - &h.alpha1 * &g.alpha0;
    if det.is_zero() {
        return None;
    }
    let x0 = (&h.bound * &g.alpha1 - &g.bound * &h.alpha1) / &det;
    let x1 = (&h.alpha0 * &g.bound - &g.alpha0 * &h.bound) / &det;
    Some(Point2::new(x0, x1))
}

/// A nonzero direction `d` with `alpha . d <= 0` for every half-plane, if any.
///
/// Such a recession direction, when it exists, can be taken along the boundary
/// of one of the half-planes, so those are the only candidates checked.
fn recession_direction(halfplanes: &[HalfPlane]) -> Option<QPoint> {
    for h in halfplanes {
        let along = Point2::new(-&h.alpha1, h.alpha0.clone());
        for d in [along.clone(), Point2::new(-&along.x0, -&along.x1)] {
            if halfplanes.iter().all(|g| !g.alpha().dot(&d).is_positive()) {
                return Some(d);
            }
        }
    }
    None
}

/// Orders distinct extreme points: one point, two sorted endpoints, or a
/// counterclockwise cycle sorted by angle about the centroid.
fn order_extreme_points(mut pts: Vec<QPoint>) -> (RegionKind, Vec<QPoint>) {
    match pts.len() {
        1 => (RegionKind::Point, pts),
        2 => {
            pts.sort_by(cmp_lex);
            (RegionKind::Segment, pts)
        }
        n => {
            let disc = pts[0].disc();
            let inv_n = QuadNum::from_rational(Rational::new(BigInt::one(), BigInt::from(n)), disc);
            let sum = pts.iter().skip(1).fold(pts[0].clone(), |acc, p| acc.add(p));
            let centre = sum.scale(&inv_n);
            let upper = |d: &QPoint| d.x1.is_positive() || (d.x1.is_zero() && d.x0.is_positive());
            pts.sort_by(|p, q| {
                let (dp, dq) = (p.sub(&centre), q.sub(&centre));
                match (upper(&dp), upper(&dq)) {
                    (true, false) => Ordering::Less,
                    (false, true) => Ordering::Greater,
                    _ => dq.cross(&dp).sign().to_ordering(),
                }
            });
            let start = (0..n).min_by(|&i, &j| cmp_lex(&pts[i], &pts[j])).unwrap();
            pts.rotate_left(start);
            (RegionKind::Polygon, pts)
        }
    }
}

/// Exact monotone-chain hull, counterclockwise from the lexicographically
/// smallest point, without collinear points. Degenerate inputs give one or two points.
pub fn convex_hull(points: &[QPoint]) -> Vec<QPoint> {
    let mut pts: Vec<QPoint> = Vec::new();
    for p in points {
        if !pts.contains(p) {
            pts.push(p.clone());
        }
    }
    pts.sort_by(cmp_lex);
    if pts.len() <= 2 {
        return pts;
    }
    let turn = |o: &QPoint, a: &QPoint, b: &QPoint| a.sub(o).cross(&b.sub(o)).sign();
    let mut lower: Vec<QPoint> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p) != Sgn::Positive {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<QPoint> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p) != Sgn::Positive {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.truncate(1);
    }
    lower
}

/// Clips a convex polygon (counterclockwise vertex list) by a closed half-plane.
pub fn clip_polygon(poly: &[QPoint], h: &HalfPlane) -> Vec<QPoint> {
    let n = poly.len();
    let mut out = Vec::new();
    for i in 0..n {
        let (p, q) = (&poly[i], &poly[(i + 1) % n]);
        let (sp, sq) = (h.slack(p), h.slack(q));
        let p_in = !sp.is_positive();
        if p_in {
            out.push(p.clone());
        }
        let crosses = (sp.is_negative() && sq.is_positive()) || (sp.is_positive() && sq.is_negative());
        if crosses {
            let t = &sp / &(&sp - &sq);
            out.push(p.add(&q.sub(p).scale(&t)));
        }
    }
    let mut dedup: Vec<QPoint> = Vec::new();
    for p in out {
        if dedup.last() != Some(&p) {
            dedup.push(p);
        }
    }
    while dedup.len() > 1 && dedup.first() == dedup.last() {
        dedup.pop();
    }
    dedup
}

/// Intersection of many half-planes by successive clipping of a large square.
///
/// Cheaper than the pairwise construction for long lists; reports
/// [`Error::Unbounded`] when the result still touches the starting square.
pub fn intersect_by_clipping(halfplanes: &[HalfPlane], half_width: i64) -> Result<Vec<QPoint>> {
    let disc = halfplanes.first().ok_or(Error::Unbounded)?.disc();
    let w = half_width;
    let square = [(-w, -w), (w, -w), (w, w), (-w, w)];
    let mut poly: Vec<QPoint> = square.iter().map(|&(a, b)| QPoint::from_ints(a, b, disc)).collect();
    for h in halfplanes {
        poly = clip_polygon(&poly, h);
        if poly.is_empty() {
            return Err(Error::EmptyRegion);
        }
    }
    let edge = QuadNum::from_int(w, disc);
    let touches = poly.iter().any(|p| p.x0.abs() == edge || p.x1.abs() == edge);
    if touches {
        return Err(Error::Unbounded);
    }
    Ok(convex_hull(&poly))
}

fn dist_point_segment(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 { 0.0 } else { (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0) };
    let (qx, qy) = (a.0 + t * dx, a.1 + t * dy);
    ((p.0 - qx).powi(2) + (p.1 - qy).powi(2)).sqrt()
}

/// Distance from a point to a convex polygon given by counterclockwise vertices.
fn dist_point_convex(p: (f64, f64), poly: &[(f64, f64)]) -> f64 {
    let n = poly.len();
    if n >= 3 {
        let inside = (0..n).all(|i| {
            let (a, b) = (poly[i], poly[(i + 1) % n]);
            (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0) >= 0.0
        });
        if inside {
            return 0.0;
        }
    }
    if n == 1 {
        return dist_point_segment(p, poly[0], poly[0]);
    }
    (0..n).map(|i| dist_point_segment(p, poly[i], poly[(i + 1) % n])).fold(f64::INFINITY, f64::min)
}

/// Hausdorff distance between two convex polygons given by ordered vertices.
///
/// For convex sets the supremum is attained at vertices, so vertex checks suffice.
pub fn hausdorff_distance(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let one_way = |x: &[(f64, f64)], y: &[(f64, f64)]| x.iter().map(|&p| dist_point_convex(p, y)).fold(0.0, f64::max);
    one_way(a, b).max(one_way(b, a))
}

/// Largest `|coordinate|` distance from each vertex of `a` to the nearest vertex of `b`.
pub fn vertex_gap(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    a.iter()
        .map(|p| b.iter().map(|q| ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt()).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max)
}
