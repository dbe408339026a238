use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A nonnegative exact rational, always kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactScalar(Ratio<BigUint>);

impl ExactScalar {
    pub fn new(numer: BigUint, denom: BigUint) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::Range("zero denominator".into()));
        }
        Ok(ExactScalar(Ratio::new(numer, denom)))
    }

    pub fn integer(value: BigUint) -> Self {
        ExactScalar(Ratio::from_integer(value))
    }

    pub fn numer(&self) -> &BigUint {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigUint {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.denom().is_one()
    }

    pub fn to_integer(&self) -> Option<BigUint> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn floor(&self) -> BigUint {
        self.0.numer().div_floor(self.0.denom())
    }
}

impl From<BigUint> for ExactScalar {
    fn from(value: BigUint) -> Self {
        ExactScalar::integer(value)
    }
}

impl From<u64> for ExactScalar {
    fn from(value: u64) -> Self {
        ExactScalar::integer(BigUint::from(value))
    }
}

/// `n` or `n/d`.
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}
