//! Verification suites: every check compares two independently computed answers.
//!
//! The suite functions take their sweep sizes as arguments so that the
//! acceptance target and the `verify` command share one implementation.

use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rank2_cluster::affine::{
    expand_pointed, generic_element, minor_element, monomial_in_elementary, monomial_symmetric, s_coefficient, s_jacobian_rank,
    ParameterPoint,
};
use rank2_cluster::chebyshev::{limit_slope, ChebyshevTable, Eps, LimitSlope};
use rank2_cluster::geometry::{hausdorff_distance, Point2, QPoint, Region};
use rank2_cluster::laurent::{g_vector, ClusterAlgebra, GVector, RationalLaurent};
use rank2_cluster::numeric::{QuadNum, Rational};
use rank2_cluster::regions::{
    class_vertices, classify, corner_closure_region, dominance_halfplanes, dominance_region, dominated_lattice_points,
    opposite_dominance_region, oracle_lattice_points, region_r, region_r_prime, restrict, support_case, support_region,
    truncated_dominance_vertices,
};
use rank2_cluster::tropical::{
    in_imaginary_cone, in_imaginary_cone_int, phi2_eigenvectors, phi_k, phi_k_inverse, phi_k_on_imaginary, phi_two_closed,
    Direction,
};
use rank2_cluster::AlgebraParams;

use crate::args::Suite;
use crate::report::{run_cases, Failure, VerificationReport};

pub const CHEBYSHEV_PAIRS: [(i64, i64); 9] = [(1, 4), (4, 1), (2, 2), (1, 5), (2, 3), (3, 2), (3, 3), (2, 4), (4, 4)];
pub const LIMIT_PAIRS: [(i64, i64); 3] = [(2, 3), (1, 5), (3, 3)];
pub const TROPICAL_PAIRS: [(i64, i64); 6] = [(2, 2), (3, 2), (2, 3), (1, 4), (3, 3), (1, 5)];
pub const DOMINANCE_PAIRS: [(i64, i64); 5] = [(2, 2), (3, 2), (2, 3), (1, 5), (3, 3)];
pub const SUPPORT_PAIRS: [(i64, i64); 4] = [(2, 2), (3, 2), (2, 3), (1, 4)];
pub const CONTAINMENT_PAIRS: [(i64, i64); 6] = [(2, 2), (3, 2), (2, 3), (1, 4), (1, 5), (3, 3)];

/// Settings the command line can change.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub depth: u32,
    pub term_cap: usize,
}

fn params(b: i64, c: i64) -> AlgebraParams {
    AlgebraParams::new(b, c).expect("suite parameters are positive")
}

fn g(a: i64, b: i64) -> GVector {
    GVector::new(a, b)
}

fn key(b: i64, c: i64, rest: impl std::fmt::Display) -> String {
    format!("({b},{c}) {rest}")
}

fn check(fails: &mut Vec<Failure>, ok: bool, case: impl FnOnce() -> Failure) {
    if !ok {
        fails.push(case());
    }
}

fn show_points(v: &[GVector]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

pub fn run_suite(suite: Suite, opts: VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let report = match suite {
        Suite::Chebyshev => VerificationReport::merged(
            "chebyshev",
            [chebyshev_identities(&CHEBYSHEV_PAIRS, 12), chebyshev_limits(&LIMIT_PAIRS, 40)],
        ),
        Suite::Tropical => VerificationReport::merged(
            "tropical",
            [
                tropical_two_step(&TROPICAL_PAIRS, 500, 2024),
                tropical_eigenvectors(20),
                tropical_imaginary(&TROPICAL_PAIRS, 17),
                tropical_round_trips(&TROPICAL_PAIRS, 8),
            ],
        ),
        Suite::Dominance => VerificationReport::merged(
            "dominance",
            [
                dominance_oracle(&DOMINANCE_PAIRS, 6, opts.depth),
                dominance_classes(&DOMINANCE_PAIRS, 8, 12),
                truncation_gap(opts.depth),
            ],
        ),
        Suite::Support => VerificationReport::merged(
            "support",
            [support_cluster_monomials(&SUPPORT_PAIRS, 5, 3, opts.term_cap), containments(&CONTAINMENT_PAIRS, 6)],
        ),
        Suite::Affine => VerificationReport::merged(
            "affine",
            [affine_minors(8, 5, 31), affine_gamma(10), affine_monomial_ratio(6, 37), affine_jacobian(8, 41)],
        ),
        Suite::All => {
            let parts = [Suite::Chebyshev, Suite::Tropical, Suite::Dominance, Suite::Support, Suite::Affine]
                .into_iter()
                .map(|s| run_suite(s, opts));
            return VerificationReport::merged("all", parts.collect::<Vec<_>>()).with_time(start.elapsed());
        }
    };
    report.with_time(start.elapsed())
}

/// The long recursion for all `i, l` in `[-range, range]` and both signs, plus
/// `u_{-i} = -u_i` and `u_{2j+1}^+ = u_{2j+1}^-` on the same range.
pub fn chebyshev_identities(pairs: &[(i64, i64)], range: i64) -> VerificationReport {
    let items: Vec<(i64, i64, Eps)> = pairs.iter().flat_map(|&(b, c)| [(b, c, Eps::Plus), (b, c, Eps::Minus)]).collect();
    run_cases("identities", items, |(b, c, eps)| {
        let t = ChebyshevTable::new(params(b, c));
        let mut fails = Vec::new();
        for i in -range..=range {
            for l in -range..=range {
                check(&mut fails, t.check_long_recursion(i, l, eps), || {
                    Failure::new(key(b, c, "long recursion"), format!("i={i} l={l} {eps:?}"), "identity", "mismatch")
                });
            }
            check(&mut fails, t.get(-i, eps) == -t.get(i, eps), || {
                Failure::new(key(b, c, "odd symmetry"), format!("i={i} {eps:?}"), -t.get(i, eps), t.get(-i, eps))
            });
            if i.rem_euclid(2) == 1 {
                check(&mut fails, t.get(i, Eps::Plus) == t.get(i, Eps::Minus), || {
                    Failure::new(key(b, c, "odd parity"), format!("i={i}"), t.get(i, Eps::Plus), t.get(i, Eps::Minus))
                });
            }
        }
        fails
    })
}

fn ratio(t: &ChebyshevTable, i: i64, ei: Eps, j: i64, ej: Eps) -> Rational {
    Rational::new(t.get(i, ei), t.get(j, ej))
}

/// Monotone convergence of `u_i^-/u_{i-1}^+` from above and `u_{i-1}^-/u_i^+`
/// from below, the mirrored limits over `2c`, the negative-index limits, the
/// interlacing inequality, and a `1e-9` gap at `i = depth`.
pub fn chebyshev_limits(pairs: &[(i64, i64)], depth: i64) -> VerificationReport {
    run_cases("limits", pairs.to_vec(), |(b, c)| {
        let p = params(b, c);
        let t = ChebyshevTable::new(p);
        let mut fails = Vec::new();
        let tol = Rational::new(BigInt::one(), BigInt::from(10u64.pow(9)));
        let setups = [
            // (name, limit, sequence, from above)
            ("u_i^-/u_(i-1)^+", LimitSlope::PlusOverB, (Eps::Minus, 0, Eps::Plus, -1), true),
            ("u_(i-1)^-/u_i^+", LimitSlope::MinusOverB, (Eps::Minus, -1, Eps::Plus, 0), false),
            ("u_i^+/u_(i-1)^-", LimitSlope::PlusOverC, (Eps::Plus, 0, Eps::Minus, -1), true),
            ("u_(i-1)^+/u_i^-", LimitSlope::MinusOverC, (Eps::Plus, -1, Eps::Minus, 0), false),
        ];
        for (name, which, (en, dn, ed, dd), above) in setups {
            let limit = limit_slope(&p, which).expect("bc >= 4");
            let term = |i: i64| ratio(&t, i + dn, en, i + dd, ed);
            let mut prev: Option<Rational> = None;
            for i in 2..=depth {
                let r = term(i);
                let diff = &QuadNum::from_rational(r.clone(), limit.disc()) - &limit;
                let side_ok = if above { diff.is_positive() } else { diff.is_negative() };
                check(&mut fails, side_ok, || {
                    Failure::new(key(b, c, name), format!("i={i}"), if above { "above limit" } else { "below limit" }, r.to_string())
                });
                if let Some(q) = &prev {
                    let mono = if above { &r < q } else { &r > q };
                    check(&mut fails, mono, || Failure::new(key(b, c, name), format!("i={i}"), "strictly monotone", format!("{q} then {r}")));
                }
                if i == depth {
                    let gap = diff.abs();
                    let small = (&gap - &QuadNum::from_rational(tol.clone(), limit.disc())).is_negative();
                    check(&mut fails, small, || Failure::new(key(b, c, name), format!("i={i}"), "gap < 1e-9", gap.approx(12)));
                }
                prev = Some(r);
            }
            // the i -> -infinity limits swap the two index shifts
            let neg = |i: i64| ratio(&t, i + dd, en, i + dn, ed);
            for i in 2..=depth {
                check(&mut fails, neg(-i) == term(i + 1), || {
                    Failure::new(key(b, c, name), format!("i=-{i}"), term(i + 1), neg(-i))
                });
            }
        }
        for eps in [Eps::Plus, Eps::Minus] {
            for i in 1..=20 {
                let lhs = t.get(i + 1, eps.flip()) * t.get(i - 1, eps);
                let rhs = t.get(i, eps.flip()) * t.get(i, eps);
                check(&mut fails, lhs < rhs, || Failure::new(key(b, c, "interlacing"), format!("i={i} {eps:?}"), format!("< {rhs}"), lhs.clone()));
            }
        }
        fails
    })
}

type IntPoint = Point2<BigInt>;

fn ip(a: i64, b: i64) -> IntPoint {
    Point2::new(BigInt::from(a), BigInt::from(b))
}

/// The four-branch two-step maps against composites of one-step maps at random integer points.
pub fn tropical_two_step(pairs: &[(i64, i64)], samples: usize, seed: u64) -> VerificationReport {
    run_cases("two-step", pairs.to_vec(), |(b, c)| {
        let p = params(b, c);
        let mut rng = StdRng::seed_from_u64(seed ^ ((b as u64) << 8) ^ c as u64);
        let mut fails = Vec::new();
        for _ in 0..samples {
            let x = ip(rng.gen_range(-60..=60), rng.gen_range(-60..=60));
            for (dir, k) in [(Direction::Forward, 2), (Direction::Backward, -2)] {
                let (closed, composite) = (phi_two_closed(&p, &x, dir), phi_k(&p, &x, k));
                check(&mut fails, closed == composite, || Failure::new(key(b, c, format!("phi_{k}")), x.to_string(), &composite, &closed));
            }
        }
        fails
    })
}

/// `phi_2 v = lambda v` for both eigenrays whenever `4 <= bc <= max_bc`.
pub fn tropical_eigenvectors(max_bc: i64) -> VerificationReport {
    let items: Vec<(i64, i64)> = (1..=max_bc).flat_map(|b| (1..=max_bc).map(move |c| (b, c))).filter(|(b, c)| (4..=max_bc).contains(&(b * c))).collect();
    run_cases("eigenvectors", items, |(b, c)| {
        let p = params(b, c);
        let mut fails = Vec::new();
        for (v, ev) in phi2_eigenvectors(&p).expect("bc >= 4") {
            let image = phi_two_closed(&p, &v, Direction::Forward);
            let want = v.scale(&ev);
            check(&mut fails, image == want, || Failure::new(key(b, c, "eigenvector"), v.to_string(), &want, &image));
        }
        fails
    })
}

/// Imaginary-cone samples: closed Chebyshev forms of `phi_k` for `|k| <= reach`, and stability of the cone.
pub fn tropical_imaginary(pairs: &[(i64, i64)], reach: i64) -> VerificationReport {
    run_cases("imaginary", pairs.to_vec(), |(b, c)| {
        let p = params(b, c);
        let d = p.discriminant().expect("bc >= 4");
        let table = ChebyshevTable::new(p);
        let mut fails = Vec::new();
        for x in 0..=6 {
            for y in -5 * x - 2..=0 {
                let pt = QPoint::from_ints(x, y, d);
                if !in_imaginary_cone(&p, &pt).expect("same field") {
                    continue;
                }
                for k in -reach..=reach {
                    let closed = phi_k_on_imaginary(&table, &pt, k).expect("point is in the cone");
                    let composite = phi_k(&p, &pt, k);
                    check(&mut fails, closed == composite, || Failure::new(key(b, c, format!("k={k}")), pt.to_string(), &composite, &closed));
                    if k % 2 == 0 {
                        let stays = in_imaginary_cone(&p, &composite).expect("same field");
                        check(&mut fails, stays, || Failure::new(key(b, c, format!("cone k={k}")), pt.to_string(), "in cone", &composite));
                    }
                }
            }
        }
        fails
    })
}

/// `phi_k^{-1} phi_k = id` for `|k| <= reach`, and `phi_{-k} phi_k = id` for even `k`.
pub fn tropical_round_trips(pairs: &[(i64, i64)], reach: i64) -> VerificationReport {
    run_cases("round-trip", pairs.to_vec(), |(b, c)| {
        let p = params(b, c);
        let mut fails = Vec::new();
        for x in -8..=8 {
            for y in -8..=8 {
                let pt = ip(x, y);
                for k in -reach..=reach {
                    let image = phi_k(&p, &pt, k);
                    let back = phi_k_inverse(&p, &image, k);
                    check(&mut fails, back == pt, || Failure::new(key(b, c, format!("inverse k={k}")), pt.to_string(), &pt, &back));
                    if k % 2 == 0 {
                        let other = phi_k(&p, &image, -k);
                        check(&mut fails, other == pt, || Failure::new(key(b, c, format!("phi_-k k={k}")), pt.to_string(), &pt, &other));
                    }
                }
            }
        }
        fails
    })
}

fn imaginary(p: &AlgebraParams, l: GVector) -> bool {
    in_imaginary_cone_int(p, &ip(l.g0, l.g1)).expect("bc >= 4")
}

/// Lattice-level agreement of the closed-form polygon with the truncated
/// intersection of pulled-back cones, for all `|l0|, |l1| <= range`.
/// Outside the imaginary cone the oracle must return exactly `{lambda}`.
pub fn dominance_oracle(pairs: &[(i64, i64)], range: i64, depth: u32) -> VerificationReport {
    let items: Vec<(i64, i64, GVector)> = pairs
        .iter()
        .flat_map(|&(b, c)| (-range..=range).flat_map(move |x| (-range..=range).map(move |y| (b, c, g(x, y)))))
        .collect();
    run_cases("oracle", items, |(b, c, l)| {
        let p = params(b, c);
        let mut fails = Vec::new();
        let oracle = oracle_lattice_points(&p, l, depth).expect("bc >= 4");
        let closed = dominated_lattice_points(&p, l).expect("bc >= 4");
        check(&mut fails, oracle == closed, || Failure::new(key(b, c, l), format!("K={depth}"), show_points(&closed), show_points(&oracle)));
        if !imaginary(&p, l) {
            check(&mut fails, oracle == vec![l], || Failure::new(key(b, c, l), "outside the cone", show_points(&[l]), show_points(&oracle)));
        }
        fails
    })
}

fn hull(points: Vec<QPoint>) -> Region {
    let mut dedup: Vec<QPoint> = Vec::new();
    for v in points {
        if !dedup.contains(&v) {
            dedup.push(v);
        }
    }
    Region::from_vertices(&dedup).expect("nonempty")
}

/// Class vertex formulas: each vertex satisfies every polygon inequality,
/// is tight on at least two, and together they span the polygon; on the two
/// separating rays the neighbouring class formulas coincide.
pub fn dominance_classes(pairs: &[(i64, i64)], max_l0: i64, depth_l1: i64) -> VerificationReport {
    let mut items: Vec<(i64, i64, GVector, bool)> = Vec::new();
    for &(b, c) in pairs {
        for x in 0..=max_l0 {
            for y in -depth_l1..=2 {
                items.push((b, c, g(x, y), false));
            }
        }
        // at bc = 4 the separating rays are the cone boundary and classes 2, 6 are empty
        if b * c > 4 {
            for t in 1..=4 {
                items.push((b, c, g(t, 0), true));
            }
        }
    }
    run_cases("classes", items, |(b, c, l, ray)| {
        let p = params(b, c);
        let mut fails = Vec::new();
        if ray {
            let t = l.g0;
            for (first, a, bb) in [(g(2 * t, -c * t), 2, 3), (g(b * t, -2 * t), 6, 5)] {
                let va = hull(class_vertices(&p, first, a).expect("valid class"));
                let vb = hull(class_vertices(&p, first, bb).expect("valid class"));
                check(&mut fails, va.same_vertices(&vb), || {
                    Failure::new(key(b, c, format!("ray {first}")), format!("classes {a}/{bb}"), format!("{:?}", vb.vertices_preview(6)), format!("{:?}", va.vertices_preview(6)))
                });
            }
            return fails;
        }
        let class = classify(&p, l).expect("bc >= 4");
        let region = dominance_region(&p, l).expect("bc >= 4");
        let mine = hull(class.vertices.clone());
        check(&mut fails, region.same_vertices(&mine), || {
            Failure::new(key(b, c, l), format!("class {}", class.class), format!("{:?}", region.vertices_preview(6)), format!("{:?}", mine.vertices_preview(6)))
        });
        if class.class > 1 {
            let hs = dominance_halfplanes(&p, l).expect("bc >= 4");
            for v in &class.vertices {
                let inside = hs.iter().all(|h| h.contains(v));
                let tight = hs.iter().filter(|h| h.is_tight(v)).count();
                check(&mut fails, inside && tight >= 2, || {
                    Failure::new(key(b, c, l), format!("vertex {v}"), "feasible, >= 2 tight", format!("feasible={inside}, tight={tight}"))
                });
            }
        }
        fails
    })
}

/// Hausdorff distance between the depth-`K` truncated intersection and the polygon.
pub fn truncation_gap(depth: u32) -> VerificationReport {
    let samples = [(2, 3, g(4, -3)), (3, 2, g(4, -5)), (1, 5, g(2, -7)), (3, 3, g(3, -5)), (2, 2, g(3, -3))];
    let gaps: Vec<(String, f64)> = {
        use rayon::prelude::*;
        samples
            .par_iter()
            .map(|&(b, c, l)| {
                let p = params(b, c);
                let table = ChebyshevTable::new(p);
                let polygon = dominance_region(&p, l).expect("bc >= 4").vertices_f64();
                let cut = truncated_dominance_vertices(&table, l, depth, 1_000).expect("bounded");
                let cut: Vec<(f64, f64)> = cut.iter().map(QPoint::to_f64).collect();
                (key(b, c, l), hausdorff_distance(&cut, &polygon))
            })
            .collect()
    };
    let mut report = VerificationReport::empty("truncation");
    report.cases = gaps.len();
    let worst = gaps.iter().map(|(_, d)| *d).fold(0.0, f64::max);
    if depth >= 40 {
        for (k, d) in &gaps {
            if *d >= 1e-6 {
                report.failures.push(Failure::new(k.clone(), format!("K={depth}"), "gap < 1e-6", format!("{d:.3e}")));
            }
        }
    }
    report.metric("max_hausdorff_gap", format!("{worst:.3e}")).metric("K", depth)
}

/// Support of every cluster monomial `x_k^a x_{k+1}^a'` (`|k| <= reach`,
/// `a, a' <= max_exp`) against the lattice points of its support region.
pub fn support_cluster_monomials(pairs: &[(i64, i64)], reach: i64, max_exp: u32, term_cap: usize) -> VerificationReport {
    let algebras: Vec<Arc<ClusterAlgebra>> = pairs.iter().map(|&(b, c)| Arc::new(ClusterAlgebra::with_term_cap(params(b, c), term_cap))).collect();
    let mut items = Vec::new();
    for alg in &algebras {
        for k in -reach..=reach {
            for a in 0..=max_exp {
                for a2 in 0..=max_exp {
                    if a + a2 > 0 {
                        items.push((alg.clone(), k, a, a2));
                    }
                }
            }
        }
    }
    run_cases("monomials", items, |(alg, k, a, a2)| {
        let p = alg.params();
        let (b, c) = (p.b(), p.c());
        let case = format!("x_{k}^{a} x_{}^{a2}", k + 1);
        let poly = match alg.monomial(k, a, a2) {
            Ok(x) => x,
            Err(e) => return vec![Failure::new(key(b, c, &case), "expansion", "a polynomial", e)],
        };
        let lambda = g_vector(&p, &poly).expect("cluster monomials are pointed");
        let mut support: Vec<GVector> = poly.support().into_iter().map(GVector::from).collect();
        support.sort();
        let region = support_region(&p, lambda).expect("bc >= 4");
        let points = region.lattice_points(lambda, &p);
        if support == points {
            return vec![];
        }
        let label = support_case(&p, lambda).expect("bc >= 4");
        let extra: Vec<GVector> = points.iter().filter(|x| !support.contains(x)).copied().collect();
        let missing: Vec<GVector> = support.iter().filter(|x| !points.contains(x)).copied().collect();
        vec![Failure::new(
            key(b, c, &case),
            format!("g = {lambda}, case {label}"),
            format!("{} region points", points.len()),
            format!("{} support points; region-only {}, support-only {}", support.len(), show_points(&extra), show_points(&missing)),
        )]
    })
}

/// Containments among the regions of imaginary g-vectors with `0 <= l0 <= max_l0`.
pub fn containments(pairs: &[(i64, i64)], max_l0: i64) -> VerificationReport {
    let mut items = Vec::new();
    for &(b, c) in pairs {
        let p = params(b, c);
        for x in 0..=max_l0 {
            for y in -(p.bc() * x) - 1..=0 {
                if imaginary(&p, g(x, y)) {
                    items.push((b, c, g(x, y)));
                }
            }
        }
    }
    run_cases("containments", items, |(b, c, l)| {
        let p = params(b, c);
        let mut fails = Vec::new();
        let s = support_region(&p, l).expect("bc >= 4");
        let dom = dominance_region(&p, l).expect("bc >= 4");
        let opp = opposite_dominance_region(&p, l).expect("imaginary");
        check(&mut fails, s.closure_contains_region(&dom), || Failure::new(key(b, c, l), "P in S", true, false));
        check(&mut fails, s.closure_contains_region(&opp), || Failure::new(key(b, c, l), "P' in S", true, false));
        for mu in dominated_lattice_points(&p, l).expect("bc >= 4") {
            let gbar = corner_closure_region(&p, mu).expect("valid g-vector");
            check(&mut fails, s.closure_contains_region(&gbar), || Failure::new(key(b, c, l), format!("G-bar of {mu} in S"), true, false));
        }
        for (name, extra, target) in [("S cap R in P", region_r(&p, l), &dom), ("S cap R' in P'", region_r_prime(&p, l), &opp)] {
            let cut = restrict(&s, &extra.expect("bc >= 4")).expect("contains lambda");
            let stray: Vec<GVector> = cut.lattice_points(l, &p).into_iter().filter(|mu| !target.contains_gvector(*mu)).collect();
            check(&mut fails, stray.is_empty(), || Failure::new(key(b, c, l), name, "[]", show_points(&stray)));
        }
        fails
    })
}

fn random_point(rng: &mut StdRng, n: usize) -> ParameterPoint {
    let entries = (0..n)
        .map(|_| {
            let num = loop {
                let v: i64 = rng.gen_range(-9..=9);
                if v != 0 {
                    break v;
                }
            };
            Rational::new(num.into(), rng.gen_range(1i64..=5).into())
        })
        .collect();
    ParameterPoint::new(entries).expect("entries are nonzero")
}

/// Minors against the generic-element combination with `S_{a,r}` weights,
/// and the pointed expansion of each minor against the same weights.
pub fn affine_minors(max_n: u32, per_n: usize, seed: u64) -> VerificationReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let items: Vec<(u32, usize, ParameterPoint)> =
        (0..=max_n).flat_map(|n| (0..per_n).map(move |i| (n, i))).map(|(n, i)| (n, i, random_point(&mut rng, n as usize))).collect();
    run_cases("minors", items, |(n, i, a)| {
        let mut fails = Vec::new();
        let case = format!("n={n} #{i}");
        let minor = match minor_element(n, &a) {
            Ok(m) => m,
            Err(e) => return vec![Failure::new(case, format!("{a:?}"), "minor", e)],
        };
        let mut sum = RationalLaurent::zero();
        let mut want = std::collections::BTreeMap::new();
        for r in 0..=n / 2 {
            let s = s_coefficient(&a, r as usize);
            let m = (n - 2 * r) as i64;
            sum = &sum + &generic_element(n - 2 * r).to_rational().scale(&s);
            if !s.is_zero() {
                want.insert(g(m, -m), s);
            }
        }
        check(&mut fails, minor == sum, || Failure::new(case.clone(), format!("{a:?}"), &sum, &minor));
        match expand_pointed(&minor) {
            Ok(e) => check(&mut fails, e.coefficients == want, || Failure::new(case.clone(), "pointed expansion", format!("{want:?}"), format!("{:?}", e.coefficients))),
            Err(err) => fails.push(Failure::new(case, "pointed expansion", "an expansion", err)),
        }
        fails
    })
}

/// The top coefficient of the monomial symmetric function in elementary ones is 1.
pub fn affine_gamma(max_n: usize) -> VerificationReport {
    let items: Vec<(usize, usize)> = (1..=max_n).flat_map(|n| (0..=n / 2).map(move |r| (n, r))).collect();
    run_cases("gamma", items, |(n, r)| match monomial_in_elementary(n, r) {
        Ok(coefs) if coefs.last() == Some(&Rational::one()) => vec![],
        Ok(coefs) => vec![Failure::new(format!("n={n} r={r}"), "leading coefficient", 1, format!("{:?}", coefs.last()))],
        Err(e) => vec![Failure::new(format!("n={n} r={r}"), "solve", "coefficients", e)],
    })
}

/// `S_{a,r} = m_{2^r 1^(n-2r)}(a) / m_{1^n}(a)` at random points.
pub fn affine_monomial_ratio(max_n: usize, seed: u64) -> VerificationReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let items: Vec<(usize, ParameterPoint)> = (1..=max_n).map(|n| (n, random_point(&mut rng, n))).collect();
    run_cases("monomial-ratio", items, |(n, a)| {
        let prod = a.entries().iter().fold(Rational::one(), |acc, x| acc * x);
        let mut fails = Vec::new();
        for r in 0..=n / 2 {
            let (s, ratio) = (s_coefficient(&a, r), monomial_symmetric(a.entries(), r) / &prod);
            check(&mut fails, s == ratio, || Failure::new(format!("n={n} r={r}"), format!("{a:?}"), &ratio, &s));
        }
        fails
    })
}

/// The map `a -> (S_{a,1}, ..., S_{a,n/2})` has full rank at random points.
pub fn affine_jacobian(max_n: usize, seed: u64) -> VerificationReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let items: Vec<(usize, ParameterPoint)> = (2..=max_n).map(|n| (n, random_point(&mut rng, n))).collect();
    run_cases("jacobian", items, |(n, a)| {
        let rank = s_jacobian_rank(&a);
        if rank == n / 2 {
            vec![]
        } else {
            vec![Failure::new(format!("n={n}"), format!("{a:?}"), n / 2, rank)]
        }
    })
}
