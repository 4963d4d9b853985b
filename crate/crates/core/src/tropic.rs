//! Exact arithmetic in the Boolean semifield `B`, the tropical integers
//! `F = Z_max` and its perfection `Q_max`.
//!
//! Elements are written multiplicatively: a nonzero element of `Z_max` is a
//! power `u^e` of the generator and is stored as its exponent. Addition is the
//! supremum of exponents, multiplication adds exponents, and the zero element
//! (`-inf` in max-plus notation) is a separate variant.

use std::fmt;
use std::ops::{Add, Mul};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Element of the Boolean semifield `B = {0, 1}` with `1 + 1 = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BElem {
    Zero,
    One,
}

impl BElem {
    pub fn from_bool(b: bool) -> Self {
        if b {
            BElem::One
        } else {
            BElem::Zero
        }
    }

    pub fn is_one(self) -> bool {
        self == BElem::One
    }
}

impl Add for BElem {
    type Output = BElem;

    fn add(self, rhs: BElem) -> BElem {
        self.max(rhs)
    }
}

impl Mul for BElem {
    type Output = BElem;

    fn mul(self, rhs: BElem) -> BElem {
        self.min(rhs)
    }
}

impl fmt::Display for BElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BElem::Zero => f.write_str("0"),
            BElem::One => f.write_str("1"),
        }
    }
}

/// Element of `Z_max`: either zero or `u^e` for an integer exponent `e`.
///
/// The derived order puts `Zero` below every power, and powers are ordered by
/// exponent, which is exactly the canonical order of the idempotent semifield.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TropElem {
    Zero,
    Pow(i64),
}

impl TropElem {
    pub const ONE: TropElem = TropElem::Pow(0);

    /// The generator `u`.
    pub const U: TropElem = TropElem::Pow(1);

    pub fn exponent(self) -> Option<i64> {
        match self {
            TropElem::Zero => None,
            TropElem::Pow(e) => Some(e),
        }
    }

    pub fn is_zero(self) -> bool {
        self == TropElem::Zero
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inverse(self) -> Option<TropElem> {
        self.exponent().map(|e| TropElem::Pow(-e))
    }
}

/// `u^n + u^m = u^max(n,m)`, with zero neutral.
pub fn trop_add(a: TropElem, b: TropElem) -> TropElem {
    a.max(b)
}

/// `u^n * u^m = u^(n+m)`, with zero absorbing.
pub fn trop_mul(a: TropElem, b: TropElem) -> TropElem {
    match (a, b) {
        (TropElem::Pow(x), TropElem::Pow(y)) => TropElem::Pow(x + y),
        _ => TropElem::Zero,
    }
}

impl Add for TropElem {
    type Output = TropElem;

    fn add(self, rhs: TropElem) -> TropElem {
        trop_add(self, rhs)
    }
}

impl Mul for TropElem {
    type Output = TropElem;

    fn mul(self, rhs: TropElem) -> TropElem {
        trop_mul(self, rhs)
    }
}

impl fmt::Display for TropElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropElem::Zero => f.write_str("0"),
            TropElem::Pow(e) => write!(f, "u^{e}"),
        }
    }
}

/// Frobenius endomorphism `Fr_n(x) = x^n` of `Z_max`.
///
/// Only `n >= 1` gives a semifield endomorphism; `n = 0` would send every
/// nonzero element to `1` and is rejected.
pub fn frobenius(n: i64, x: TropElem) -> Result<TropElem> {
    if n < 1 {
        return Err(Error::arg("n", format!("Frobenius index must be >= 1, got {n}")));
    }
    Ok(match x {
        TropElem::Zero => TropElem::Zero,
        TropElem::Pow(e) => TropElem::Pow(n * e),
    })
}

/// Whether `x` lies in `Fr_m(F)`, i.e. is zero or a power `u^e` with `m | e`.
pub fn in_frobenius_image(x: TropElem, m: i64) -> Result<bool> {
    if m < 1 {
        return Err(Error::arg("m", format!("Frobenius index must be >= 1, got {m}")));
    }
    Ok(match x {
        TropElem::Zero => true,
        TropElem::Pow(e) => e % m == 0,
    })
}

/// Element of the perfection `Q_max`: zero or `u^a` for a rational exponent.
///
/// Exponents are kept reduced with a positive denominator by `Ratio`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropRatElem {
    Zero,
    Pow(Ratio<i64>),
}

impl TropRatElem {
    pub fn pow(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::arg("denom", "zero denominator"));
        }
        Ok(TropRatElem::Pow(Ratio::new(numer, denom)))
    }

    pub fn exponent(self) -> Option<Ratio<i64>> {
        match self {
            TropRatElem::Zero => None,
            TropRatElem::Pow(e) => Some(e),
        }
    }

    /// `Fr_alpha` for a positive rational `alpha`; an automorphism of `Q_max`.
    pub fn frobenius(self, alpha: Ratio<i64>) -> Result<Self> {
        if alpha <= Ratio::from_integer(0) {
            return Err(Error::arg("alpha", format!("Frobenius index must be positive, got {alpha}")));
        }
        Ok(match self {
            TropRatElem::Zero => TropRatElem::Zero,
            TropRatElem::Pow(e) => TropRatElem::Pow(e * alpha),
        })
    }
}

impl From<TropElem> for TropRatElem {
    fn from(x: TropElem) -> Self {
        match x {
            TropElem::Zero => TropRatElem::Zero,
            TropElem::Pow(e) => TropRatElem::Pow(Ratio::from_integer(e)),
        }
    }
}

impl Add for TropRatElem {
    type Output = TropRatElem;

    fn add(self, rhs: TropRatElem) -> TropRatElem {
        self.max(rhs)
    }
}

impl Mul for TropRatElem {
    type Output = TropRatElem;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: TropRatElem) -> TropRatElem {
        match (self, rhs) {
            (TropRatElem::Pow(x), TropRatElem::Pow(y)) => TropRatElem::Pow(x + y),
            _ => TropRatElem::Zero,
        }
    }
}

impl fmt::Display for TropRatElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropRatElem::Zero => f.write_str("0"),
            TropRatElem::Pow(e) => write!(f, "u^({e})"),
        }
    }
}

/// Membership in `Fr_n^{-1}(F) = Fr_{1/n}(F)`, the subfield of `Q_max` whose
/// exponents lie in `(1/n)Z`.
pub fn in_subfield(x: TropRatElem, n: i64) -> Result<bool> {
    if n < 1 {
        return Err(Error::arg("n", format!("subfield index must be >= 1, got {n}")));
    }
    Ok(match x {
        TropRatElem::Zero => true,
        TropRatElem::Pow(e) => (e * Ratio::from_integer(n)).is_integer(),
    })
}
