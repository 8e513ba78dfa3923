//! Exact computations for the rank-2 cluster algebras `A(b, c)`.
//!
//! The crate covers the whole chain needed to describe dominance between
//! g-vectors explicitly:
//!
//! * [`numeric`]: big rationals and the real quadratic field `Q(sqrt(D))`
//!   with `D = bc(bc - 4)`, with exact signs.
//! * [`chebyshev`]: the two-parameter Chebyshev sequences `u_i^±`.
//! * [`laurent`]: sparse Laurent polynomials, cluster variables and monomials,
//!   supports and g-vectors.
//! * [`tropical`]: the piecewise-linear g-vector mutations `phi_k`.
//! * [`geometry`] and [`regions`]: exact convex regions, dominance polygons,
//!   maximal support regions and their lattice points.
//! * [`affine`]: the `b = c = 2` case with generic and generalized-minor bases.
//! * [`svg`]: deterministic SVG pictures of regions.
//!
//! g-vectors follow the pointed normal form
//! `x0^l0 x1^l1 * sum rho[a0, a1] x0^(-b a0) x1^(c a1)`, so the g-vector of a
//! Laurent polynomial is `(max e0, min e1)` over its support. This differs
//! from some references by a change of sign convention.

pub mod affine;
pub mod chebyshev;
pub mod error;
pub mod geometry;
pub mod laurent;
pub mod numeric;
pub mod params;
pub mod regions;
pub mod svg;
pub mod tropical;

pub use error::{Error, Result};
pub use params::AlgebraParams;
