//! WebAssembly bindings used by `www/index.html`.
//!
//! Each export takes plain numbers and strings and returns a string (SVG or
//! text), reporting bad input as a JavaScript exception.

use rank2_cluster::affine::{expand_pointed, minor_element, ParameterPoint};
use rank2_cluster::laurent::{g_vector, ClusterAlgebra, GVector};
use rank2_cluster::regions::{classify, dominance_region, dominated_lattice_points, opposite_dominance_region, support_case, support_region};
use rank2_cluster::svg::{Figure, Style};
use rank2_cluster::AlgebraParams;
use wasm_bindgen::prelude::*;

/// Cap on Laurent terms so a careless input cannot freeze the page.
const TERM_CAP: usize = 20_000;

fn setup(b: i32, c: i32, lambda: &str) -> Result<(AlgebraParams, GVector), String> {
    let p = AlgebraParams::new(b.into(), c.into()).map_err(|e| e.to_string())?;
    p.require_infinite_type().map_err(|e| e.to_string())?;
    let l: GVector = lambda.parse().map_err(|e: rank2_cluster::Error| e.to_string())?;
    Ok((p, l))
}

pub fn dominance_picture(b: i32, c: i32, lambda: &str) -> Result<String, String> {
    let (p, l) = setup(b, c, lambda)?;
    let err = |e: rank2_cluster::Error| e.to_string();
    let class = classify(&p, l).map_err(err)?;
    let title = format!("class {} ({}) for {} in A({},{})", class.class, class.shape(), l, b, c);
    let mut fig = Figure::new(p, title).region(support_region(&p, l).map_err(err)?, Style::Support);
    if let Ok(opposite) = opposite_dominance_region(&p, l) {
        fig = fig.region(opposite, Style::Opposite);
    }
    let fig = fig.region(dominance_region(&p, l).map_err(err)?, Style::Dominance).dots(dominated_lattice_points(&p, l).map_err(err)?);
    Ok(fig.mark(l).render())
}

pub fn support_picture(b: i32, c: i32, lambda: &str) -> Result<String, String> {
    let (p, l) = setup(b, c, lambda)?;
    let err = |e: rank2_cluster::Error| e.to_string();
    let region = support_region(&p, l).map_err(err)?;
    let title = format!("support region of {} in A({},{}), case {}", l, b, c, support_case(&p, l).map_err(err)?);
    let points = region.lattice_points(l, &p);
    Ok(Figure::new(p, title).region(region, Style::Support).dots(points).mark(l).render())
}

/// `what` is `x<m>` for a cluster variable or `minor:<a1,a2,...>` for a `b = c = 2` minor.
pub fn expansion_text(b: i32, c: i32, what: &str) -> Result<String, String> {
    let p = AlgebraParams::new(b.into(), c.into()).map_err(|e| e.to_string())?;
    let err = |e: rank2_cluster::Error| e.to_string();
    let what = what.trim();
    let (label, poly) = if let Some(m) = what.strip_prefix('x') {
        let m: i64 = m.trim().parse().map_err(|_| format!("bad index {m:?}"))?;
        let alg = ClusterAlgebra::with_term_cap(p, TERM_CAP);
        (format!("x_{m}"), alg.variable(m).map_err(err)?.to_rational())
    } else if let Some(a) = what.strip_prefix("minor:") {
        if (b, c) != (2, 2) {
            return Err("minors need b = c = 2".into());
        }
        let a: ParameterPoint = a.parse().map_err(err)?;
        (format!("minor at ({})", a.entries().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")), minor_element(a.len() as u32, &a).map_err(err)?)
    } else {
        return Err("expected x<m> or minor:<a1,...>".into());
    };
    let mut out = format!("{label} = {poly}\nterms: {}\n", poly.len());
    if let Ok(g) = g_vector(&p, &poly) {
        out.push_str(&format!("g-vector: {g}\n"));
    }
    if (b, c) == (2, 2) {
        if let Ok(e) = expand_pointed(&poly) {
            let parts: Vec<String> = e.coefficients.iter().rev().map(|(g, q)| format!("{g}: {q}")).collect();
            out.push_str(&format!("pointed expansion: {{{}}}\n", parts.join(", ")));
        }
    }
    Ok(out)
}

#[wasm_bindgen]
pub fn dominance_svg(b: i32, c: i32, lambda: &str) -> Result<String, JsError> {
    dominance_picture(b, c, lambda).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn support_svg(b: i32, c: i32, lambda: &str) -> Result<String, JsError> {
    support_picture(b, c, lambda).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn expand(b: i32, c: i32, what: &str) -> Result<String, JsError> {
    expansion_text(b, c, what).map_err(|e| JsError::new(&e))
}
