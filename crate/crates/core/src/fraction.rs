use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, ParseError};

/// A positive rational number in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    numerator: BigUint,
    denominator: BigUint,
}

impl Fraction {
    /// Builds `numerator/denominator` reduced to lowest terms.
    pub fn new(numerator: BigUint, denominator: BigUint) -> Result<Self, Error> {
        if numerator.is_zero() {
            return Err(Error::NotPositive(numerator.to_string()));
        }
        if denominator.is_zero() {
            return Err(Error::NotPositive(denominator.to_string()));
        }
        let g = numerator.gcd(&denominator);
        Ok(Fraction {
            numerator: numerator / &g,
            denominator: denominator / &g,
        })
    }

    pub fn from_u64(numerator: u64, denominator: u64) -> Result<Self, Error> {
        Fraction::new(BigUint::from(numerator), BigUint::from(denominator))
    }

    pub fn one() -> Self {
        Fraction {
            numerator: BigUint::one(),
            denominator: BigUint::one(),
        }
    }

    pub fn numerator(&self) -> &BigUint {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigUint {
        &self.denominator
    }

    pub fn is_one(&self) -> bool {
        self.numerator.is_one() && self.denominator.is_one()
    }

    pub fn recip(&self) -> Self {
        Fraction {
            numerator: self.denominator.clone(),
            denominator: self.numerator.clone(),
        }
    }

    /// Approximate decimal value. Only for display.
    pub fn to_f64(&self) -> f64 {
        let n = self.numerator.to_f64().unwrap_or(f64::INFINITY);
        let d = self.denominator.to_f64().unwrap_or(f64::INFINITY);
        n / d
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `n` or `n/d` with positive decimal integers.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (num_text, den_text, den_offset) = match s.find('/') {
            Some(slash) => (&s[..slash], &s[slash + 1..], slash + 1),
            None => (s, "1", s.len()),
        };
        let parse_part = |text: &str, offset: usize| -> Result<BigUint, Error> {
            if text.is_empty() {
                return Err(ParseError::new(s, offset, "expected a positive integer").into());
            }
            if let Some(bad) = text.find(|c: char| !c.is_ascii_digit()) {
                return Err(ParseError::new(s, offset + bad, "expected a decimal digit").into());
            }
            let value: BigUint = text
                .parse()
                .map_err(|_| ParseError::new(s, offset, "invalid integer"))?;
            if value.is_zero() {
                return Err(ParseError::new(s, offset, "zero is not allowed").into());
            }
            Ok(value)
        };
        let num = parse_part(num_text, 0)?;
        let den = parse_part(den_text, den_offset)?;
        Fraction::new(num, den)
    }
}
