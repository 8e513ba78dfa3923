//! The region and expansion commands, each rendered as JSON, SVG or text.

use std::fmt::Write;

use rank2_cluster::affine::{expand_pointed, generic_element, minor_element, ParameterPoint, PointedExpansion};
use rank2_cluster::geometry::{Exclusion, Region, RegionDocument};
use rank2_cluster::laurent::{g_vector, ClusterAlgebra, GVector, RationalLaurent};
use rank2_cluster::regions::{
    classify, dominance_region, dominated_lattice_points, opposite_dominance_region, support_case, support_region, SupportCase,
};
use rank2_cluster::svg::{Figure, Style};
use rank2_cluster::AlgebraParams;
use serde::Serialize;

use crate::args::{ExpandArgs, Format};
use crate::CliError;

#[derive(Serialize)]
struct DominanceView<'a> {
    b: i64,
    c: i64,
    lambda: GVector,
    class: u8,
    shape: &'static str,
    region: RegionDocument<'a>,
    lattice_points: &'a [GVector],
}

#[derive(Serialize)]
struct SupportView<'a> {
    b: i64,
    c: i64,
    lambda: GVector,
    case: SupportCase,
    region: RegionDocument<'a>,
    lattice_points: &'a [GVector],
}

#[derive(Serialize)]
struct ExpandView<'a> {
    b: i64,
    c: i64,
    element: &'a str,
    terms: usize,
    g_vector: Option<GVector>,
    polynomial: &'a RationalLaurent,
    support: &'a [GVector],
    expansion: Option<&'a PointedExpansion>,
}

fn json<T: Serialize>(v: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn header(params: &AlgebraParams, lambda: GVector) -> String {
    format!("A({},{}), lambda = {}\n", params.b(), params.c(), lambda)
}

fn describe_region(out: &mut String, region: &Region, precision: usize) {
    let _ = writeln!(out, "{} with vertices:", region.kind());
    for [x, y] in region.vertices_preview(precision) {
        let _ = writeln!(out, "  ({x}, {y})");
    }
    for ex in region.excluded() {
        match ex {
            Exclusion::Point(p) => {
                let [x, y] = p.approx(precision);
                let _ = writeln!(out, "excluding the point ({x}, {y})");
            }
            Exclusion::OpenSegment(p, q) => {
                let ([x0, y0], [x1, y1]) = (p.approx(precision), q.approx(precision));
                let _ = writeln!(out, "excluding the open segment ({x0}, {y0}) -- ({x1}, {y1})");
            }
        }
    }
}

fn list_points(out: &mut String, title: &str, points: &[GVector]) {
    let _ = writeln!(out, "{title} ({}):", points.len());
    for g in points {
        let _ = writeln!(out, "  {g}");
    }
}

pub fn dominance(params: &AlgebraParams, lambda: GVector, format: Format, precision: usize) -> Result<String, CliError> {
    params.require_infinite_type()?;
    let region = dominance_region(params, lambda)?;
    let class = classify(params, lambda)?;
    let points = dominated_lattice_points(params, lambda)?;
    match format {
        Format::Json => json(&DominanceView {
            b: params.b(),
            c: params.c(),
            lambda,
            class: class.class,
            shape: class.shape(),
            region: region.to_document(precision),
            lattice_points: &points,
        }),
        Format::Text => {
            let mut out = header(params, lambda);
            let _ = writeln!(out, "class {} ({})", class.class, class.shape());
            describe_region(&mut out, &region, precision);
            list_points(&mut out, "dominated lattice points", &points);
            Ok(out)
        }
        Format::Svg => {
            let title = format!("dominance region of {} in A({},{})", lambda, params.b(), params.c());
            let mut fig = Figure::new(*params, title).region(support_region(params, lambda)?, Style::Support);
            if let Ok(opposite) = opposite_dominance_region(params, lambda) {
                fig = fig.region(opposite, Style::Opposite);
            }
            Ok(fig.region(region, Style::Dominance).dots(points).mark(lambda).render())
        }
    }
}

pub fn support(params: &AlgebraParams, lambda: GVector, format: Format, precision: usize) -> Result<String, CliError> {
    params.require_infinite_type()?;
    let case = support_case(params, lambda)?;
    let region = support_region(params, lambda)?;
    let points = region.lattice_points(lambda, params);
    match format {
        Format::Json => json(&SupportView {
            b: params.b(),
            c: params.c(),
            lambda,
            case,
            region: region.to_document(precision),
            lattice_points: &points,
        }),
        Format::Text => {
            let mut out = header(params, lambda);
            let _ = writeln!(out, "case {case}");
            describe_region(&mut out, &region, precision);
            list_points(&mut out, "lattice points", &points);
            Ok(out)
        }
        Format::Svg => {
            let title = format!("support region of {} in A({},{}), case {}", lambda, params.b(), params.c(), case);
            Ok(Figure::new(*params, title).region(region, Style::Support).dots(points).mark(lambda).render())
        }
    }
}

fn require_affine(params: &AlgebraParams, what: &str) -> Result<(), CliError> {
    if (params.b(), params.c()) != (2, 2) {
        return Err(CliError::Usage(format!("{what} is only defined for b = c = 2")));
    }
    Ok(())
}

pub fn expand(params: &AlgebraParams, args: &ExpandArgs, format: Format, term_cap: usize) -> Result<String, CliError> {
    let algebra = ClusterAlgebra::with_term_cap(*params, term_cap);
    let (element, poly): (String, RationalLaurent) = if let Some(m) = args.var {
        (format!("x_{m}"), algebra.variable(m)?.to_rational())
    } else if let Some((k, a, a2)) = args.monomial {
        (format!("x_{k}^{a} x_{}^{a2}", k + 1), algebra.monomial(k, a, a2)?.to_rational())
    } else if let Some(n) = args.generic {
        require_affine(params, "--generic")?;
        (format!("generic element of degree {n}"), generic_element(n).to_rational())
    } else if let Some(n) = args.minor {
        require_affine(params, "--minor")?;
        let a = args.a.clone().unwrap_or_else(|| ParameterPoint::new(Vec::new()).expect("empty point is valid"));
        let label: Vec<String> = a.entries().iter().map(ToString::to_string).collect();
        (format!("minor of degree {n} at ({})", label.join(",")), minor_element(n, &a)?)
    } else {
        return Err(CliError::Usage("expand needs one of --var, --monomial, --generic, --minor".into()));
    };
    if poly.len() > term_cap {
        return Err(rank2_cluster::Error::TermCapExceeded { count: poly.len(), cap: term_cap }.into());
    }
    let expansion = if args.in_generic {
        require_affine(params, "--in-generic")?;
        Some(expand_pointed(&poly)?)
    } else {
        None
    };
    let lambda = g_vector(params, &poly).ok();
    let support: Vec<GVector> = poly.support().into_iter().map(GVector::from).collect();
    match format {
        Format::Json => json(&ExpandView {
            b: params.b(),
            c: params.c(),
            element: &element,
            terms: poly.len(),
            g_vector: lambda,
            polynomial: &poly,
            support: &sorted(support),
            expansion: expansion.as_ref(),
        }),
        Format::Text => {
            let mut out = format!("{element} in A({},{})\n{poly}\n", params.b(), params.c());
            let _ = writeln!(out, "terms: {}", poly.len());
            match lambda {
                Some(g) => {
                    let _ = writeln!(out, "g-vector: {g}");
                }
                None => out.push_str("g-vector: none (not pointed)\n"),
            }
            if let Some(e) = &expansion {
                let parts: Vec<String> = e.coefficients.iter().rev().map(|(g, q)| format!("{g}: {q}")).collect();
                let _ = writeln!(out, "pointed expansion: {{{}}}", parts.join(", "));
            }
            Ok(out)
        }
        Format::Svg => {
            let g = lambda.ok_or_else(|| CliError::Usage("svg output needs a pointed element".into()))?;
            params.require_infinite_type()?;
            let title = format!("support of {element} in A({},{})", params.b(), params.c());
            Ok(Figure::new(*params, title).region(support_region(params, g)?, Style::Support).dots(support).mark(g).render())
        }
    }
}

fn sorted(mut v: Vec<GVector>) -> Vec<GVector> {
    v.sort();
    v
}
