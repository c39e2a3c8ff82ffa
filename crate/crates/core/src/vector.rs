use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A point of d-dimensional Euclidean space.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(pub Vec<Scalar>);

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyInput("vector with no coordinates"));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Vector(coords))
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn from_ratios(coords: &[(i64, i64)]) -> Self {
        Vector(coords.iter().map(|&(n, d)| Scalar::ratio(n, d)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Vector(vec![Scalar::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() != dim {
            Err(Error::DimensionMismatch {
                expected: dim,
                found: self.dim(),
            })
        } else {
            Ok(())
        }
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, alpha: &Scalar) -> Vector {
        Vector(self.0.iter().map(|a| a * alpha).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }

    pub fn norm_sq(&self) -> Scalar {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().to_f64().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.sign() == 0)
    }

    /// Exact lexicographic order (tolerance-aware in double mode).
    pub fn lex_cmp(&self, other: &Vector) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            match a.cmp_val(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    pub fn approx_eq(&self, other: &Vector) -> bool {
        self.dim() == other.dim() && self.lex_cmp(other) == Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_and_norm() {
        let a = Vector::from_ints(&[3, 4]);
        assert_eq!(a.norm_sq(), Scalar::from_int(25));
        assert_eq!(a.dot(&Vector::from_ints(&[1, 1])), Scalar::from_int(7));
    }

    #[test]
    fn rejects_empty_and_nonfinite() {
        assert!(Vector::new(vec![]).is_err());
        assert!(Vector::new(vec![Scalar::f64(f64::NAN)]).is_err());
    }
}
