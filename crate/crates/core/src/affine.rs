//! The affine algebra `A(2, 2)`: generic elements, the generalized-minor family
//! and the change of basis between them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::laurent::{ClusterAlgebra, ExponentVector, GVector, LaurentPoly, RationalLaurent};
use crate::numeric::Rational;
use crate::{AlgebraParams, Error, Result};

/// A point `(a_1, ..., a_n)` with nonzero rational entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct ParameterPoint(Vec<Rational>);

impl ParameterPoint {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.iter().any(Zero::is_zero) {
            return Err(Error::ZeroParameter);
        }
        Ok(ParameterPoint(entries))
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&a| Rational::from_integer(a.into())).collect())
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn parse_rational(t: &str) -> Result<Rational> {
    t.trim().parse::<Rational>().map_err(|_| Error::Parse(format!("bad rational {:?}", t.trim())))
}

impl TryFrom<Vec<String>> for ParameterPoint {
    type Error = Error;

    fn try_from(v: Vec<String>) -> Result<Self> {
        ParameterPoint::new(v.iter().map(|t| parse_rational(t)).collect::<Result<_>>()?)
    }
}

impl From<ParameterPoint> for Vec<String> {
    fn from(p: ParameterPoint) -> Self {
        p.0.iter().map(ToString::to_string).collect()
    }
}

impl std::str::FromStr for ParameterPoint {
    type Err = Error;

    /// Comma separated rationals, e.g. `1,2/3,-5`; parentheses are optional.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Ok(ParameterPoint(Vec::new()));
        }
        let entries = inner.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        ParameterPoint::new(entries)
    }
}

fn affine_params() -> AlgebraParams {
    AlgebraParams::new(2, 2).expect("(2, 2) is valid")
}

/// `(x0 x1^-1 + x0^-1 x1^-1 + x0^-1 x1)^n`, pointed at `(n, -n)`.
pub fn generic_element(n: u32) -> LaurentPoly {
    let one = BigInt::one();
    let base = LaurentPoly::from_terms([(1, -1, one.clone()), (-1, -1, one.clone()), (-1, 1, one)]);
    base.pow(n)
}

/// Sum over ordered pairs of disjoint `r`-subsets `I, J` of `prod_I a_i / prod_J a_j`.
///
/// Computed as the coefficient of `x^r y^r` in `prod_i (1 + a_i x + a_i^-1 y)`.
pub fn s_coefficient(a: &ParameterPoint, r: usize) -> Rational {
    let n = a.len();
    if 2 * r > n {
        return Rational::zero();
    }
    // table[p][q]: coefficient of x^p y^q
    let mut table = vec![vec![Rational::zero(); r + 1]; r + 1];
    table[0][0] = Rational::one();
    for ai in a.entries() {
        let inv = ai.recip();
        for p in (0..=r).rev() {
            for q in (0..=r).rev() {
                let mut add = Rational::zero();
                if p > 0 {
                    add += &table[p - 1][q] * ai;
                }
                if q > 0 {
                    add += &table[p][q - 1] * &inv;
                }
                table[p][q] += add;
            }
        }
    }
    table[r][r].clone()
}

/// `C(m, k)`, zero unless `0 <= k <= m`.
pub fn binomial(m: i64, k: i64) -> BigInt {
    if m < 0 || k < 0 || k > m {
        return BigInt::zero();
    }
    let k = k.min(m - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (m - i) / (i + 1))
}

/// The generalized-minor element pointed at `(n, -n)` for the parameter point `a` of length `n`.
pub fn minor_element(n: u32, a: &ParameterPoint) -> Result<RationalLaurent> {
    if a.len() != n as usize {
        return Err(Error::LengthMismatch { expected: n as usize, got: a.len() });
    }
    let n = n as i64;
    let s: Vec<Rational> = (0..=n / 2).map(|r| s_coefficient(a, r as usize)).collect();
    let mut terms: BTreeMap<(i64, i64), Rational> = BTreeMap::new();
    for l in 0..=n {
        for k in 0..=l {
            let mut coef = Rational::zero();
            for (r, sr) in s.iter().enumerate().take(l as usize + 1) {
                let r = r as i64;
                let weight = binomial(l - r, k) * binomial(n - 2 * r, l - r);
                if !weight.is_zero() {
                    coef += sr * Rational::from_integer(weight);
                }
            }
            if !coef.is_zero() {
                *terms.entry((2 * (l - k) - n, 2 * (n - l) - n)).or_insert_with(Rational::zero) += coef;
            }
        }
    }
    Ok(LaurentPoly::from_terms(terms.into_iter().map(|((e0, e1), c)| (e0, e1, c))))
}

/// Coefficients of an element of `A(2, 2)` in the reference pointed basis:
/// cluster monomials off the imaginary ray and generic elements on it.
///
/// JSON: `{"leading":[g0,g1],"coefficients":[[g0,g1,"q"],...]}`, keys ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ExpansionRepr", into = "ExpansionRepr")]
pub struct PointedExpansion {
    pub leading: GVector,
    pub coefficients: BTreeMap<GVector, Rational>,
}

impl PointedExpansion {
    pub fn coefficient(&self, g: GVector) -> Rational {
        self.coefficients.get(&g).cloned().unwrap_or_else(Rational::zero)
    }
}

#[derive(Serialize, Deserialize)]
struct ExpansionRepr {
    leading: (i64, i64),
    coefficients: Vec<(i64, i64, String)>,
}

impl From<PointedExpansion> for ExpansionRepr {
    fn from(e: PointedExpansion) -> Self {
        ExpansionRepr {
            leading: (e.leading.g0, e.leading.g1),
            coefficients: e.coefficients.iter().map(|(g, q)| (g.g0, g.g1, q.to_string())).collect(),
        }
    }
}

impl TryFrom<ExpansionRepr> for PointedExpansion {
    type Error = Error;

    fn try_from(r: ExpansionRepr) -> Result<Self> {
        let mut coefficients = BTreeMap::new();
        for (g0, g1, q) in r.coefficients {
            if coefficients.insert(GVector::new(g0, g1), parse_rational(&q)?).is_some() {
                return Err(Error::Parse(format!("repeated key ({g0}, {g1})")));
            }
        }
        Ok(PointedExpansion { leading: GVector::new(r.leading.0, r.leading.1), coefficients })
    }
}

/// The corner `(max e0, min e1)`, required to be in the support with every
/// exponent in its coset of `2Z x 2Z`.
fn leading_term(p: &RationalLaurent) -> Result<(GVector, Rational)> {
    let (lo, hi) = p.exponent_box().ok_or_else(|| Error::NotPointed("zero polynomial".into()))?;
    let corner = ExponentVector::new(hi.e0, lo.e1);
    let coef = p.coefficient(corner.e0, corner.e1);
    if coef.is_zero() {
        return Err(Error::NotPointed(format!("{} is not in the support", corner)));
    }
    if let Some((e, _)) = p.terms().find(|(e, _)| (e.e0 - corner.e0).rem_euclid(2) != 0 || (e.e1 - corner.e1).rem_euclid(2) != 0) {
        return Err(Error::NotPointed(format!("exponent {} is off the lattice of {}", e, corner)));
    }
    Ok((GVector::new(corner.e0, corner.e1), coef))
}

/// The cluster monomial `x_k^a x_{k+1}^a'` with the given g-vector, searching `|k| <= reach`.
///
/// g-vectors add under products, so this solves `lambda = a g(x_k) + a' g(x_{k+1})`.
pub fn cluster_monomial_with_gvector(algebra: &ClusterAlgebra, lambda: GVector, reach: i64) -> Result<LaurentPoly> {
    let params = algebra.params();
    let g = |m: i64| -> Result<GVector> { crate::laurent::g_vector(&params, algebra.variable(m)?.as_ref()) };
    for k in -reach..=reach {
        let (u, v) = (g(k)?, g(k + 1)?);
        let det = u.g0 * v.g1 - u.g1 * v.g0;
        if det == 0 {
            continue;
        }
        let num_a = lambda.g0 * v.g1 - lambda.g1 * v.g0;
        let num_b = u.g0 * lambda.g1 - u.g1 * lambda.g0;
        if num_a % det != 0 || num_b % det != 0 {
            continue;
        }
        let (a, b) = (num_a / det, num_b / det);
        if a >= 0 && b >= 0 {
            return algebra.monomial(k, a as u32, b as u32);
        }
    }
    Err(Error::NoClusterMonomial(lambda.to_string()))
}

fn reference_element(algebra: &ClusterAlgebra, lambda: GVector) -> Result<RationalLaurent> {
    if lambda.g0 >= 0 && lambda.g0 == -lambda.g1 {
        return Ok(generic_element(lambda.g0 as u32).to_rational());
    }
    let reach = lambda.g0.abs().max(lambda.g1.abs()) + 3;
    Ok(cluster_monomial_with_gvector(algebra, lambda, reach)?.to_rational())
}

/// Peels off leading pointed terms until nothing is left.
pub fn expand_pointed(p: &RationalLaurent) -> Result<PointedExpansion> {
    let algebra = ClusterAlgebra::new(affine_params());
    let (leading, _) = leading_term(p)?;
    let mut coefficients = BTreeMap::new();
    let mut rest = p.clone();
    while !rest.is_zero() {
        let (lambda, q) = leading_term(&rest)?;
        if coefficients.contains_key(&lambda) {
            return Err(Error::NonzeroRemainder(rest.to_string()));
        }
        let reference = reference_element(&algebra, lambda)?;
        rest = &rest - &reference.scale(&q);
        coefficients.insert(lambda, q);
    }
    Ok(PointedExpansion { leading, coefficients })
}

fn elementary(a: &[Rational], k: usize) -> Rational {
    let mut e = vec![Rational::zero(); k + 1];
    e[0] = Rational::one();
    for x in a {
        for j in (1..=k).rev() {
            let add = &e[j - 1] * x;
            e[j] += add;
        }
    }
    e[k].clone()
}

/// `m_{2^r 1^(n-2r)}` at `a`: sum over disjoint `I, K` with `|I| = r`, `|K| = n - 2r`
/// of `prod_I a_i^2 prod_K a_k`.
pub fn monomial_symmetric(a: &[Rational], r: usize) -> Rational {
    let n = a.len();
    if 2 * r > n {
        return Rational::zero();
    }
    fn walk(a: &[Rational], i: usize, squares: usize, singles: usize, acc: Rational, out: &mut Rational) {
        if squares == 0 && singles == 0 {
            *out += acc;
            return;
        }
        if i == a.len() || a.len() - i < squares + singles {
            return;
        }
        if squares > 0 {
            walk(a, i + 1, squares - 1, singles, &acc * &a[i] * &a[i], out);
        }
        if singles > 0 {
            walk(a, i + 1, squares, singles - 1, &acc * &a[i], out);
        }
        walk(a, i + 1, squares, singles, acc, out);
    }
    let mut out = Rational::zero();
    walk(a, 0, r, n - 2 * r, Rational::one(), &mut out);
    out
}

fn solve(mut m: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Result<Vec<Rational>> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[col][col];
                let pivot_row = m[col].clone();
                for (x, p) in m[r][col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &f * p;
                }
                let sub = &f * &rhs[col];
                rhs[r] -= sub;
            }
        }
    }
    Ok((0..n).map(|i| &rhs[i] / &m[i][i]).collect())
}

fn sample_point(n: usize, seed: usize) -> Vec<Rational> {
    // shifted runs of consecutive integers; scalar multiples would give proportional rows
    (0..n).map(|i| Rational::from_integer(BigInt::from(1 + i + seed))).collect()
}

/// Coefficients `gamma_0..gamma_r` with `m_{2^r 1^(n-2r)} = sum_i gamma_i e_{n-i} e_i` in `n` variables.
///
/// Solved from evaluations at `r + 1` points and confirmed at two further points.
pub fn monomial_in_elementary(n: usize, r: usize) -> Result<Vec<Rational>> {
    if n == 0 || 2 * r > n {
        return Err(Error::InvalidShape { n, r });
    }
    let row = |a: &[Rational]| -> Vec<Rational> { (0..=r).map(|i| elementary(a, n - i) * elementary(a, i)).collect() };
    for offset in 0..8 {
        let points: Vec<Vec<Rational>> = (0..=r).map(|j| sample_point(n, offset + j)).collect();
        let matrix: Vec<Vec<Rational>> = points.iter().map(|a| row(a)).collect();
        let rhs: Vec<Rational> = points.iter().map(|a| monomial_symmetric(a, r)).collect();
        let Ok(gamma) = solve(matrix, rhs) else { continue };
        let confirmed = (r + 1..r + 3).all(|j| {
            let a = sample_point(n, offset + j);
            row(&a).iter().zip(&gamma).fold(Rational::zero(), |acc, (x, g)| acc + x * g) == monomial_symmetric(&a, r)
        });
        if confirmed {
            return Ok(gamma);
        }
    }
    Err(Error::SingularMatrix)
}

/// Rank of the Jacobian of `(S_1, ..., S_{n/2})` with respect to `a`, computed exactly.
pub fn s_jacobian_rank(a: &ParameterPoint) -> usize {
    let n = a.len();
    let rows: Vec<Vec<Rational>> = (1..=n / 2).map(|r| (0..n).map(|i| s_partial(a, r, i)).collect()).collect();
    rank(rows)
}

/// `dS_r / da_i`: each term `prod_I a / prod_J a` contributes `+term/a_i` when `i` is in `I`
/// and `-term/a_i` when `i` is in `J`.
fn s_partial(a: &ParameterPoint, r: usize, i: usize) -> Rational {
    let ai = &a.entries()[i];
    let others: Vec<Rational> = a.entries().iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x.clone()).collect();
    let rest = ParameterPoint(others);
    // i in I: a_i * (pairs of sizes r-1, r on the rest); i in J: a_i^-1 * (sizes r, r-1)
    let (with_i, against_i) = (s_pairs(&rest, r - 1, r), s_pairs(&rest, r, r - 1));
    with_i - against_i * ai.recip() * ai.recip()
}

/// Sum over disjoint `I, J` with `|I| = p`, `|J| = q` of `prod_I a / prod_J a`.
fn s_pairs(a: &ParameterPoint, p: usize, q: usize) -> Rational {
    let mut table = vec![vec![Rational::zero(); q + 1]; p + 1];
    table[0][0] = Rational::one();
    for ai in a.entries() {
        let inv = ai.recip();
        for x in (0..=p).rev() {
            for y in (0..=q).rev() {
                let mut add = Rational::zero();
                if x > 0 {
                    add += &table[x - 1][y] * ai;
                }
                if y > 0 {
                    add += &table[x][y - 1] * &inv;
                }
                table[x][y] += add;
            }
        }
    }
    table[p][q].clone()
}

fn rank(mut m: Vec<Vec<Rational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, pivot);
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[rank][col];
                let pivot_row = m[rank].clone();
                for (x, p) in m[r][col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Whether every coefficient is positive; used by callers checking positivity of expansions.
pub fn all_positive(p: &RationalLaurent) -> bool {
    p.terms().all(|(_, c)| c.is_positive())
}
