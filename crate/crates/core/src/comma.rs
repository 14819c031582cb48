//! Rational commas: 5-rough labels `[x/y]`, the per-prime comma table that
//! gives them microtonal values, and the comma-measure search that picks a
//! comma for each prime.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::monzo::{is_prime, Measures, Monzo};

/// Default half-width of the 3-exponent window searched for a prime comma.
pub const DEFAULT_SEARCH_BOUND: u32 = 7;

/// Commas a table starts out with, as `(prime, numerator, denominator)`.
pub const SEED_COMMAS: [(u64, u64, u64); 7] = [
    (5, 80, 81),
    (7, 63, 64),
    (11, 33, 32),
    (13, 26, 27),
    (17, 2176, 2187),
    (19, 513, 512),
    (23, 736, 729),
];

/// A comma label `[x/y]`: a positive rational whose prime factors are all 5
/// or greater. The label is not the comma's value; see [`CommaTable::value`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Comma(Monzo);

impl Comma {
    pub fn unity() -> Self {
        Comma(Monzo::unity())
    }

    pub fn from_monzo(m: Monzo) -> Result<Self> {
        if !m.is_five_rough() {
            return Err(Error::NotFiveRough(m.to_fraction().to_string()));
        }
        Ok(Comma(m))
    }

    pub fn from_fraction(f: &Fraction) -> Result<Self> {
        Comma::from_monzo(Monzo::from_fraction(f)?)
    }

    pub fn from_u64(x: u64, y: u64) -> Result<Self> {
        Comma::from_monzo(Monzo::from_u64(x, y)?)
    }

    /// `[p]` for a single prime, or `[1/p]` when `exponent` is negative.
    pub(crate) fn prime_power(p: u64, exponent: i64) -> Result<Self> {
        Comma::from_monzo(Monzo::prime_power(p, exponent)?)
    }

    pub fn as_monzo(&self) -> &Monzo {
        &self.0
    }

    pub fn to_fraction(&self) -> Fraction {
        self.0.to_fraction()
    }

    pub fn is_unity(&self) -> bool {
        self.0.is_unity()
    }

    pub fn recip(&self) -> Comma {
        Comma(self.0.recip())
    }

    pub fn mul(&self, other: &Comma) -> Comma {
        Comma(&self.0 * &other.0)
    }

    pub fn exponent(&self, p: u64) -> i64 {
        self.0.exponent(p)
    }

    /// Label with the factor of 5 removed, and the removed exponent.
    pub fn split_fives(&self) -> (i64, Comma) {
        let fives = self.0.exponent(5);
        let rest = &self.0 * &Monzo::from_prime_factors(vec![(5, -fives)]);
        (fives, Comma(rest))
    }
}

impl fmt::Display for Comma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let frac = self.to_fraction();
        if frac.denominator() == &BigUint::from(1u32) {
            write!(f, "[{}]", frac.numerator())
        } else {
            write!(f, "[{}/{}]", frac.numerator(), frac.denominator())
        }
    }
}

/// Prime commas keyed by prime, with lazy extension by [`select_prime_comma`].
///
/// Lookups take a read lock; a missing prime is computed outside the lock
/// and inserted under the write lock, so concurrent callers agree on the
/// stored value.
#[derive(Debug)]
pub struct CommaTable {
    entries: RwLock<BTreeMap<u64, Monzo>>,
    search_bound: u32,
}

impl Default for CommaTable {
    fn default() -> Self {
        CommaTable::new()
    }
}

impl Clone for CommaTable {
    fn clone(&self) -> Self {
        CommaTable {
            entries: RwLock::new(self.read().clone()),
            search_bound: self.search_bound,
        }
    }
}

impl CommaTable {
    /// Table seeded with [`SEED_COMMAS`] and the default search bound.
    pub fn new() -> Self {
        CommaTable::with_search_bound(DEFAULT_SEARCH_BOUND)
    }

    pub fn with_search_bound(search_bound: u32) -> Self {
        let table = CommaTable::unseeded(search_bound);
        {
            let mut entries = table.write();
            for (p, n, d) in SEED_COMMAS {
                entries.insert(p, Monzo::from_u64(n, d).expect("seed commas are valid"));
            }
        }
        table
    }

    /// Empty table: every prime comma comes from the search.
    pub fn unseeded(search_bound: u32) -> Self {
        CommaTable {
            entries: RwLock::new(BTreeMap::new()),
            search_bound: search_bound.max(1),
        }
    }

    pub fn search_bound(&self) -> u32 {
        self.search_bound
    }

    fn read(&self) -> std::sync::RwLockReadGuard<'_, BTreeMap<u64, Monzo>> {
        self.entries.read().unwrap_or_else(|e| e.into_inner())
    }

    fn write(&self) -> std::sync::RwLockWriteGuard<'_, BTreeMap<u64, Monzo>> {
        self.entries.write().unwrap_or_else(|e| e.into_inner())
    }

    /// Stores a comma for `prime` after checking it has the shape of a prime
    /// comma. Replaces any previous entry.
    pub fn insert(&self, prime: u64, comma: Monzo) -> Result<()> {
        validate_prime_comma(prime, &comma)?;
        self.write().insert(prime, comma);
        Ok(())
    }

    /// The comma `[p]`, computing and memoizing it if the table lacks it.
    pub fn prime_comma(&self, p: u64) -> Result<Monzo> {
        check_comma_prime(p)?;
        if let Some(m) = self.read().get(&p) {
            return Ok(m.clone());
        }
        let computed = select_prime_comma(p, self.search_bound)?;
        Ok(self.write().entry(p).or_insert(computed).clone())
    }

    /// Microtonal value of a comma label: the product of its prime commas
    /// raised to their exponents.
    pub fn value(&self, comma: &Comma) -> Monzo {
        comma
            .as_monzo()
            .factors()
            .iter()
            .map(|&(p, e)| {
                self.prime_comma(p)
                    .expect("comma labels only hold primes >= 5")
                    .pow(e)
            })
            .product()
    }

    /// Value of the label `[x/y]` given as a fraction.
    pub fn label_value(&self, label: &Fraction) -> Result<Monzo> {
        Ok(self.value(&Comma::from_fraction(label)?))
    }

    /// Confirms every stored comma is what the search would produce.
    pub fn self_check(&self) -> Result<()> {
        for (p, stored) in self.entries() {
            let computed = select_prime_comma(p, self.search_bound)?;
            if computed != stored {
                return Err(Error::SelfCheck {
                    prime: p,
                    stored: stored.to_fraction().to_string(),
                    computed: computed.to_fraction().to_string(),
                });
            }
        }
        Ok(())
    }

    /// Snapshot of the stored entries in prime order.
    pub fn entries(&self) -> Vec<(u64, Monzo)> {
        self.read().iter().map(|(p, m)| (*p, m.clone())).collect()
    }

    /// Prime commas for every prime from 5 to `max_prime` inclusive.
    pub fn commas_up_to(&self, max_prime: u64) -> Vec<(u64, Monzo)> {
        (5..=max_prime)
            .filter(|&p| is_prime(p))
            .map(|p| (p, self.prime_comma(p).expect("p is a prime >= 5")))
            .collect()
    }
}

fn check_comma_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::PrimeTooSmall(p));
    }
    Ok(())
}

fn validate_prime_comma(p: u64, comma: &Monzo) -> Result<()> {
    check_comma_prime(p)?;
    let bad = |reason: &str| {
        Err(Error::InvalidCommaEntry {
            prime: p,
            reason: reason.to_string(),
        })
    };
    if comma.exponent(p) != 1 {
        return bad("exponent of the prime must be exactly +1");
    }
    if comma.factors().iter().any(|&(q, _)| q != p && q > 3) {
        return bad("only 2 and 3 may appear besides the prime");
    }
    if comma.cents().abs() >= 100.0 {
        return bad("comma must be smaller than a semitone");
    }
    Ok(())
}

/// Chooses the comma for prime `p` among `2^a * 3^b * p`, `|b| <= bound`,
/// with `a` putting the candidate within half an octave of 1/1. The winner
/// minimizes the comma measure; ties go to smaller complexity, then smaller
/// `|b|`.
pub fn select_prime_comma(p: u64, bound: u32) -> Result<Monzo> {
    check_comma_prime(p)?;
    let bound = i64::from(bound.max(1));
    let mut best: Option<(f64, BigUint, i64, Monzo)> = None;
    for b in -bound..=bound {
        let candidate = centred_candidate(p, b);
        let Measures {
            complexity,
            comma_measure,
            ..
        } = candidate.measures();
        let better = match &best {
            None => true,
            Some((cm, cy, best_b, _)) => {
                (comma_measure, &complexity, b.abs()) < (*cm, cy, best_b.abs())
            }
        };
        if better {
            best = Some((comma_measure, complexity, b, candidate));
        }
    }
    Ok(best.expect("window is nonempty").3)
}

/// `3^b * p` shifted by octaves so that `1/sqrt(2) < value < sqrt(2)`.
fn centred_candidate(p: u64, b: i64) -> Monzo {
    let base = Monzo::from_prime_factors(vec![(3, b), (p, 1)]);
    let mut a = -base.log2().round() as i64;
    // settle the octave exactly: compare squares against 2 and 1/2
    loop {
        let c = &base * &Monzo::from_prime_factors(vec![(2, a)]);
        let f = c.to_fraction();
        let (n2, d2) = (f.numerator().pow(2), f.denominator().pow(2));
        if n2 > &d2 * 2u32 {
            a -= 1;
        } else if &n2 * 2u32 < d2 {
            a += 1;
        } else {
            return c;
        }
    }
}

/// One candidate for a comma of prime 3, of the form `2^a * 3`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThreeCandidate {
    pub two_exponent: i64,
    pub value: Monzo,
    pub fraction: Fraction,
    pub decimal: f64,
    pub measures: Measures,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ThreeCandidateAnalysis {
    /// Candidates in ascending order of value.
    pub rows: Vec<ThreeCandidate>,
    /// Index into `rows` of the comma-measure minimizer.
    pub best: Option<usize>,
}

/// Measures every `2^a * 3` for `a` in `min_two_exponent..=max_two_exponent`.
pub fn analyze_three_candidates(
    min_two_exponent: i64,
    max_two_exponent: i64,
) -> ThreeCandidateAnalysis {
    let rows: Vec<ThreeCandidate> = (min_two_exponent..=max_two_exponent)
        .map(|a| {
            let value = Monzo::from_prime_factors(vec![(2, a), (3, 1)]);
            let fraction = value.to_fraction();
            ThreeCandidate {
                two_exponent: a,
                decimal: fraction.to_f64(),
                measures: value.measures(),
                fraction,
                value,
            }
        })
        .collect();
    let best = rows
        .iter()
        .enumerate()
        .min_by(|(_, x), (_, y)| {
            x.measures
                .comma_measure
                .total_cmp(&y.measures.comma_measure)
        })
        .map(|(i, _)| i);
    ThreeCandidateAnalysis { rows, best }
}
