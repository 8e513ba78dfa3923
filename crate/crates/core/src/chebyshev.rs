//! Two-parameter Chebyshev sequences.
//!
//! `u_0 = 0`, `u_1 = 1`, and
//! `u_{i+1}^+ = b u_i^- - u_{i-1}^+`, `u_{i+1}^- = c u_i^+ - u_{i-1}^-`,
//! extended to negative indices by `u_{-i} = -u_i`.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::numeric::{int, QuadNum, Rational};
use crate::{AlgebraParams, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Eps {
    Plus,
    Minus,
}

impl Eps {
    pub fn flip(self) -> Eps {
        match self {
            Eps::Plus => Eps::Minus,
            Eps::Minus => Eps::Plus,
        }
    }

    fn slot(self) -> usize {
        match self {
            Eps::Plus => 0,
            Eps::Minus => 1,
        }
    }
}

/// Memoized values `u_i^eps` for one `(b, c)`.
///
/// The table only grows; lookups take a read lock and extensions a write lock.
#[derive(Debug)]
pub struct ChebyshevTable {
    params: AlgebraParams,
    values: RwLock<Vec<[BigInt; 2]>>,
}

impl ChebyshevTable {
    pub fn new(params: AlgebraParams) -> Self {
        let seed = vec![[BigInt::zero(), BigInt::zero()], [BigInt::one(), BigInt::one()]];
        ChebyshevTable { params, values: RwLock::new(seed) }
    }

    pub fn params(&self) -> AlgebraParams {
        self.params
    }

    /// `u_i^eps` for any integer `i`.
    pub fn get(&self, i: i64, eps: Eps) -> BigInt {
        if i < 0 {
            return -self.get(-i, eps);
        }
        let idx = i as usize;
        {
            let values = self.values.read().expect("chebyshev table lock poisoned");
            if let Some(v) = values.get(idx) {
                return v[eps.slot()].clone();
            }
        }
        let mut values = self.values.write().expect("chebyshev table lock poisoned");
        let (b, c) = (BigInt::from(self.params.b()), BigInt::from(self.params.c()));
        while values.len() <= idx {
            let n = values.len();
            let (prev, cur) = (&values[n - 2], &values[n - 1]);
            let plus = &b * &cur[1] - &prev[0];
            let minus = &c * &cur[0] - &prev[1];
            values.push([plus, minus]);
        }
        values[idx][eps.slot()].clone()
    }

    pub fn get_i64(&self, i: i64, eps: Eps) -> i64 {
        i64::try_from(self.get(i, eps)).expect("chebyshev value exceeds i64")
    }

    /// Checks the long recursion expressing `u_{i+l}` through `u_{l+1}`, `u_l`, `u_i`, `u_{i-1}`.
    pub fn check_long_recursion(&self, i: i64, l: i64, eps: Eps) -> bool {
        let lhs = self.get(i + l, eps);
        let rhs = if l.rem_euclid(2) == 1 {
            self.get(l + 1, eps) * self.get(i, eps.flip()) - self.get(l, eps.flip()) * self.get(i - 1, eps)
        } else {
            self.get(l + 1, eps.flip()) * self.get(i, eps) - self.get(l, eps) * self.get(i - 1, eps.flip())
        };
        lhs == rhs
    }

    /// The rational number `u_i^eps / u_j^eps'`; `None` when the denominator vanishes.
    pub fn ratio(&self, i: i64, eps_i: Eps, j: i64, eps_j: Eps) -> Option<Rational> {
        let den = self.get(j, eps_j);
        if den.is_zero() {
            None
        } else {
            Some(Rational::new(self.get(i, eps_i), den))
        }
    }
}

/// Which of the four limits `(bc ± sqrt(D)) / (2b)` or `(bc ± sqrt(D)) / (2c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LimitSlope {
    PlusOverB,
    MinusOverB,
    PlusOverC,
    MinusOverC,
}

/// The exact limit slope; requires `bc >= 4`.
pub fn limit_slope(params: &AlgebraParams, which: LimitSlope) -> Result<QuadNum> {
    let disc = params.discriminant()?;
    let root = QuadNum::sqrt_disc(disc);
    let bc = QuadNum::from_int(params.bc(), disc);
    let (num, den) = match which {
        LimitSlope::PlusOverB => (&bc + &root, 2 * params.b()),
        LimitSlope::MinusOverB => (&bc - &root, 2 * params.b()),
        LimitSlope::PlusOverC => (&bc + &root, 2 * params.c()),
        LimitSlope::MinusOverC => (&bc - &root, 2 * params.c()),
    };
    Ok(num.scale(&(Rational::one() / int(den))))
}
