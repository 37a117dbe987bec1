//! Discrete ±1 signs (μ, ν, fold index, Ω parameters).
//!
//! Keeping these as an enum instead of `f64` makes the sign laws of the
//! coadjoint actions exact by construction: no rounding can creep into
//! `q' = νq`-style identities.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub const fn is_minus(self) -> bool {
        matches!(self, Sign::Minus)
    }

    /// Exact sign application: negation only, never a multiply.
    pub fn apply(self, x: f64) -> f64 {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }

    /// Sign of a nonzero float. Zero maps to `Plus`.
    pub fn of(x: f64) -> Sign {
        if x < 0.0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// Accepts exactly ±1 (as written in the wire format).
    pub fn try_from_f64(x: f64) -> Result<Sign> {
        if x == 1.0 {
            Ok(Sign::Plus)
        } else if x == -1.0 {
            Ok(Sign::Minus)
        } else {
            Err(Error::InvalidSign(x))
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:+}", self.as_i8())
    }
}

impl serde::Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.as_i8())
    }
}

impl<'de> serde::Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let x = f64::deserialize(d)?;
        Sign::try_from_f64(x).map_err(serde::de::Error::custom)
    }
}
