//! Scalar arithmetic in two modes: exact rationals (default) and IEEE doubles.
//!
//! Rational comparisons are exact; double comparisons use the fixed
//! tolerance [`F64_TOL`]. Mixed-mode arithmetic coerces to doubles.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{FromPrimitive, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Comparison tolerance in double mode.
pub const F64_TOL: f64 = 1e-9;

/// Global arithmetic mode, selected per scenario.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arithmetic {
    Rational,
    Double,
}

#[derive(Clone)]
pub enum Scalar {
    Rat(BigRational),
    F64(f64),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn rat(r: BigRational) -> Self {
        Scalar::Rat(r)
    }

    /// Exact rational with the same value as the given double.
    pub fn rat_from_f64(x: f64) -> Self {
        Scalar::Rat(BigRational::from_f64(x).expect("finite float"))
    }

    pub fn f64(x: f64) -> Self {
        Scalar::F64(x)
    }

    /// An integer or ratio in the requested mode.
    pub fn in_mode(num: i64, den: i64, mode: Arithmetic) -> Self {
        match mode {
            Arithmetic::Rational => Scalar::ratio(num, den),
            Arithmetic::Double => Scalar::F64(num as f64 / den as f64),
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Scalar::Rat(_) => true,
            Scalar::F64(x) => x.is_finite(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rat(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::F64(x) => *x,
        }
    }

    pub fn as_rational(&self) -> BigRational {
        match self {
            Scalar::Rat(r) => r.clone(),
            Scalar::F64(x) => BigRational::from_f64(*x).expect("finite float"),
        }
    }

    /// Sign of the value: -1, 0 or 1. Doubles within [`F64_TOL`] of zero
    /// count as zero.
    pub fn sign(&self) -> i8 {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    0
                } else if r.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Scalar::F64(x) => {
                if x.abs() <= F64_TOL {
                    0
                } else if *x > 0.0 {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn cmp_val(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            _ => {
                let d = self.to_f64() - other.to_f64();
                if d.abs() <= F64_TOL {
                    Ordering::Equal
                } else if d > 0.0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    pub fn approx_eq(&self, other: &Scalar) -> bool {
        self.cmp_val(other) == Ordering::Equal
    }

    pub fn min_val(self, other: Scalar) -> Scalar {
        if self.cmp_val(&other) == Ordering::Greater {
            other
        } else {
            self
        }
    }

    pub fn max_val(self, other: Scalar) -> Scalar {
        if self.cmp_val(&other) == Ordering::Less {
            other
        } else {
            self
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.abs()),
            Scalar::F64(x) => Scalar::F64(x.abs()),
        }
    }

    pub fn recip(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::F64(x) => Scalar::F64(1.0 / x),
        }
    }

    /// Parse a JSON-facing representation: "p/q", "n" or a decimal string.
    pub fn parse_rational(s: &str) -> Option<Scalar> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let num: BigInt = p.trim().parse().ok()?;
            let den: BigInt = q.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Scalar::Rat(BigRational::new(num, den)))
        } else {
            let n: BigInt = s.parse().ok()?;
            Some(Scalar::Rat(BigRational::from_integer(n)))
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", r),
            Scalar::F64(x) => write!(f, "{}", x),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a $op b),
                    _ => Scalar::F64(self.to_f64() $op rhs.to_f64()),
                }
            }
        }
        impl std::ops::$trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self) $op (&rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::F64(x) => Scalar::F64(-x),
        }
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Rat(r) => {
                if r.denom() == &BigInt::from(1) {
                    serializer.serialize_str(&r.numer().to_string())
                } else {
                    serializer.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
                }
            }
            Scalar::F64(x) => serializer.serialize_f64(*x),
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(f64),
            Str(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Num(x) => {
                if !x.is_finite() {
                    return Err(D::Error::custom("non-finite number"));
                }
                Ok(Scalar::F64(x))
            }
            Repr::Str(s) => {
                Scalar::parse_rational(&s).ok_or_else(|| D::Error::custom(format!("bad rational: {s:?}")))
            }
        }
    }
}

/// Exact test of `sqrt(a_sq) <= sqrt(b_sq) + sqrt(c_sq)` for nonnegative
/// rational squared values.
pub fn sqrt_leq_sqrt_sum(a_sq: &Scalar, b_sq: &Scalar, c_sq: &Scalar) -> bool {
    // a <= b + c  <=>  a^2 <= b^2 + c^2 + 2bc  <=>  a^2 - b^2 - c^2 <= 2bc.
    let lhs = &(a_sq - b_sq) - c_sq;
    if lhs.sign() <= 0 {
        return true;
    }
    let rhs = Scalar::from_int(4) * b_sq.clone() * c_sq.clone();
    (&lhs * &lhs).cmp_val(&rhs) != Ordering::Greater
}
