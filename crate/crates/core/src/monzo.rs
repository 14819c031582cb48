//! Positive rationals stored as prime-exponent vectors.
//!
//! A [`Monzo`] keeps its factors sorted by prime with zero exponents removed,
//! so structural equality is numeric equality and iteration order is fixed.

use std::fmt;
use std::ops::{Div, Mul};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fraction::Fraction;

/// Default cap on the size of integers handed to the trial-division factorizer.
pub const DEFAULT_MAX_DIGITS: usize = 64;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monzo {
    factors: Vec<(u64, i64)>,
}

/// Size and complexity measures of a rational.
#[derive(Clone, Debug, PartialEq)]
pub struct Measures {
    /// Numerator times denominator of the reduced fraction (Benedetti height).
    pub complexity: BigUint,
    /// `log2` of `complexity` (Tenney height).
    pub log_complexity: f64,
    /// Distance from 1/1 in octaves, `|log2 value|`.
    pub abs_octaves: f64,
    /// `abs_octaves * log_complexity`; lower means a better comma.
    pub comma_measure: f64,
}

impl Monzo {
    /// The monzo of 1/1.
    pub fn unity() -> Self {
        Monzo::default()
    }

    /// Builds a monzo from `(prime, exponent)` pairs in any order. Repeated
    /// primes are summed and zero exponents dropped.
    pub fn from_factors<I>(factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, i64)>,
    {
        let mut v: Vec<(u64, i64)> = Vec::new();
        for (p, e) in factors {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            v.push((p, e));
        }
        Ok(Monzo::normalize(v))
    }

    /// Caller guarantees every key is prime.
    pub(crate) fn from_prime_factors(factors: Vec<(u64, i64)>) -> Self {
        Monzo::normalize(factors)
    }

    fn normalize(mut v: Vec<(u64, i64)>) -> Self {
        v.sort_unstable_by_key(|&(p, _)| p);
        let mut out: Vec<(u64, i64)> = Vec::with_capacity(v.len());
        for (p, e) in v {
            match out.last_mut() {
                Some((q, acc)) if *q == p => *acc += e,
                _ => out.push((p, e)),
            }
        }
        out.retain(|&(_, e)| e != 0);
        Monzo { factors: out }
    }

    /// A single prime power `p^e`.
    pub fn prime_power(p: u64, e: i64) -> Result<Self> {
        Monzo::from_factors([(p, e)])
    }

    /// Factorizes `numerator/denominator`.
    pub fn from_ratio(numerator: &BigUint, denominator: &BigUint) -> Result<Self> {
        Monzo::from_ratio_with_limit(numerator, denominator, DEFAULT_MAX_DIGITS)
    }

    pub fn from_ratio_with_limit(
        numerator: &BigUint,
        denominator: &BigUint,
        max_digits: usize,
    ) -> Result<Self> {
        if numerator.is_zero() {
            return Err(Error::NotPositive(numerator.to_string()));
        }
        if denominator.is_zero() {
            return Err(Error::NotPositive(denominator.to_string()));
        }
        let mut factors = factorize(numerator, max_digits)?;
        factors.extend(
            factorize(denominator, max_digits)?
                .into_iter()
                .map(|(p, e)| (p, -e)),
        );
        Ok(Monzo::normalize(factors))
    }

    pub fn from_u64(numerator: u64, denominator: u64) -> Result<Self> {
        Monzo::from_ratio(&BigUint::from(numerator), &BigUint::from(denominator))
    }

    pub fn from_fraction(f: &Fraction) -> Result<Self> {
        Monzo::from_ratio(f.numerator(), f.denominator())
    }

    /// Multiplies positive exponents into the numerator and negative ones
    /// into the denominator.
    pub fn to_fraction(&self) -> Fraction {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for &(p, e) in &self.factors {
            let power = BigUint::from(p).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num *= power;
            } else {
                den *= power;
            }
        }
        Fraction::new(num, den).expect("monzo factors are nonzero")
    }

    pub fn factors(&self) -> &[(u64, i64)] {
        &self.factors
    }

    pub fn exponent(&self, p: u64) -> i64 {
        self.factors
            .binary_search_by_key(&p, |&(q, _)| q)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn is_unity(&self) -> bool {
        self.factors.is_empty()
    }

    /// Only primes 2 and 3 present.
    pub fn is_three_limit(&self) -> bool {
        self.factors.iter().all(|&(p, _)| p <= 3)
    }

    /// No factor of 2 or 3.
    pub fn is_five_rough(&self) -> bool {
        self.factors.iter().all(|&(p, _)| p >= 5)
    }

    pub fn recip(&self) -> Monzo {
        Monzo {
            factors: self.factors.iter().map(|&(p, e)| (p, -e)).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Monzo {
        if n == 0 {
            return Monzo::unity();
        }
        Monzo {
            factors: self.factors.iter().map(|&(p, e)| (p, e * n)).collect(),
        }
    }

    /// Splits into the {2,3} part and the part built from primes 5 and up.
    /// Their product is `self`.
    pub fn split_rough(&self) -> (Monzo, Monzo) {
        let (smooth, rough): (Vec<_>, Vec<_>) = self.factors.iter().partition(|&&(p, _)| p <= 3);
        (Monzo { factors: smooth }, Monzo { factors: rough })
    }

    pub fn log2(&self) -> f64 {
        self.factors
            .iter()
            .map(|&(p, e)| e as f64 * (p as f64).log2())
            .sum()
    }

    pub fn cents(&self) -> f64 {
        1200.0 * self.log2()
    }

    pub fn measures(&self) -> Measures {
        let complexity = self.factors.iter().fold(BigUint::one(), |acc, &(p, e)| {
            acc * BigUint::from(p).pow(e.unsigned_abs() as u32)
        });
        let log_complexity: f64 = self
            .factors
            .iter()
            .map(|&(p, e)| e.unsigned_abs() as f64 * (p as f64).log2())
            .sum();
        let abs_octaves = self.log2().abs();
        Measures {
            complexity,
            log_complexity,
            abs_octaves,
            comma_measure: abs_octaves * log_complexity,
        }
    }
}

impl Mul for &Monzo {
    type Output = Monzo;

    fn mul(self, rhs: &Monzo) -> Monzo {
        // merge two sorted sequences
        let (a, b) = (&self.factors, &rhs.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let next = match (a.get(i), b.get(j)) {
                (Some(&(p, e)), Some(&(q, f))) if p == q => {
                    i += 1;
                    j += 1;
                    (p, e + f)
                }
                (Some(&x), Some(&y)) if x.0 < y.0 => {
                    i += 1;
                    x
                }
                (Some(_), Some(&y)) => {
                    j += 1;
                    y
                }
                (Some(&x), None) => {
                    i += 1;
                    x
                }
                (None, Some(&y)) => {
                    j += 1;
                    y
                }
                (None, None) => unreachable!(),
            };
            if next.1 != 0 {
                out.push(next);
            }
        }
        Monzo { factors: out }
    }
}

impl Mul for Monzo {
    type Output = Monzo;

    fn mul(self, rhs: Monzo) -> Monzo {
        &self * &rhs
    }
}

impl Div for &Monzo {
    type Output = Monzo;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Monzo) -> Monzo {
        self * &rhs.recip()
    }
}

impl Div for Monzo {
    type Output = Monzo;

    fn div(self, rhs: Monzo) -> Monzo {
        &self / &rhs
    }
}

impl std::iter::Product for Monzo {
    fn product<I: Iterator<Item = Monzo>>(iter: I) -> Monzo {
        iter.fold(Monzo::unity(), |acc, m| &acc * &m)
    }
}

impl fmt::Display for Monzo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}:{e}")?;
        }
        f.write_str("}")
    }
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mul_mod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow_mod = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul_mod(acc, base);
            }
            base = mul_mod(base, base);
            exp >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Trial-division factorization of a positive integer.
fn factorize(n: &BigUint, max_digits: usize) -> Result<Vec<(u64, i64)>> {
    let digits = n.to_str_radix(10).len();
    if digits > max_digits {
        return Err(Error::TooManyDigits {
            digits,
            limit: max_digits,
        });
    }
    let mut factors = Vec::new();
    let mut rest = n.clone();
    let mut d: u64 = 2;
    // Peel small factors off in big-integer arithmetic until the cofactor
    // fits in a u128.
    while rest.to_u128().is_none() {
        if BigUint::from(d) * BigUint::from(d) > rest {
            return Err(Error::PrimeFactorTooLarge(n.to_string()));
        }
        let big_d = BigUint::from(d);
        let mut e = 0;
        while (&rest % &big_d).is_zero() {
            rest /= &big_d;
            e += 1;
        }
        if e > 0 {
            factors.push((d, e));
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    let mut rest = rest.to_u128().expect("checked above");
    let mut check_prime = true;
    while rest > 1 {
        if check_prime {
            if let Ok(small) = u64::try_from(rest) {
                if is_prime(small) {
                    factors.push((small, 1));
                    break;
                }
            }
            check_prime = false;
        }
        if (d as u128) * (d as u128) > rest {
            let p = u64::try_from(rest).map_err(|_| Error::PrimeFactorTooLarge(n.to_string()))?;
            factors.push((p, 1));
            break;
        }
        let mut e = 0;
        while rest.is_multiple_of(d as u128) {
            rest /= d as u128;
            e += 1;
        }
        if e > 0 {
            factors.push((d, e));
            check_prime = true;
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    Ok(factors)
}
