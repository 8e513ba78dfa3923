use serde::{Deserialize, Serialize};

use crate::numeric::Discriminant;
use crate::{Error, Result};

/// The exchange exponents `(b, c)` of the cluster algebra `A(b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(i64, i64)", into = "(i64, i64)")]
pub struct AlgebraParams {
    b: i64,
    c: i64,
}

impl AlgebraParams {
    pub fn new(b: i64, c: i64) -> Result<Self> {
        if b < 1 || c < 1 {
            return Err(Error::InvalidParams { b, c });
        }
        Ok(AlgebraParams { b, c })
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn bc(&self) -> i64 {
        self.b * self.c
    }

    /// `A(c, b)`, the algebra with the roles of the two initial variables exchanged.
    pub fn swapped(&self) -> AlgebraParams {
        AlgebraParams { b: self.c, c: self.b }
    }

    /// Fails unless `bc >= 4`, the range where the imaginary cone is nonempty.
    pub fn require_infinite_type(&self) -> Result<()> {
        if self.bc() < 4 {
            Err(Error::FiniteType { b: self.b, c: self.c })
        } else {
            Ok(())
        }
    }

    /// The discriminant `bc(bc - 4)`; requires `bc >= 4`.
    pub fn discriminant(&self) -> Result<Discriminant> {
        self.require_infinite_type()?;
        let bc = self.bc() as u64;
        Discriminant::new(bc * (bc - 4))
    }

    /// The discriminant when `bc >= 4`, and the rational field otherwise.
    ///
    /// Used by the tropical maps, which make sense for every `(b, c)`.
    pub fn coordinate_field(&self) -> Discriminant {
        self.discriminant().unwrap_or(Discriminant::RATIONAL)
    }

    /// Exchange exponent used when mutating at position `m`: `b` for even `m`, `c` for odd.
    pub fn exchange_exponent(&self, m: i64) -> i64 {
        if m.rem_euclid(2) == 0 {
            self.b
        } else {
            self.c
        }
    }
}

impl TryFrom<(i64, i64)> for AlgebraParams {
    type Error = Error;

    fn try_from((b, c): (i64, i64)) -> Result<Self> {
        AlgebraParams::new(b, c)
    }
}

impl From<AlgebraParams> for (i64, i64) {
    fn from(p: AlgebraParams) -> Self {
        (p.b, p.c)
    }
}

impl std::fmt::Display for AlgebraParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "A({}, {})", self.b, self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_nonpositive() {
        assert!(AlgebraParams::new(0, 3).is_err());
        assert!(AlgebraParams::new(2, -1).is_err());
    }

    #[test]
    fn discriminant_requires_bc_at_least_four() {
        let p = AlgebraParams::new(1, 3).unwrap();
        assert_eq!(p.discriminant(), Err(Error::FiniteType { b: 1, c: 3 }));
        assert_eq!(AlgebraParams::new(2, 3).unwrap().discriminant().unwrap().value(), 12);
        assert_eq!(AlgebraParams::new(2, 2).unwrap().discriminant().unwrap().value(), 0);
    }

    #[test]
    fn exchange_exponent_alternates() {
        let p = AlgebraParams::new(2, 5).unwrap();
        assert_eq!(p.exchange_exponent(0), 2);
        assert_eq!(p.exchange_exponent(1), 5);
        assert_eq!(p.exchange_exponent(-1), 5);
        assert_eq!(p.exchange_exponent(-2), 2);
    }
}
