//! Flat result rows shared by the command line and the browser demo.

use serde::{Deserialize, Serialize};

use crate::monzo::Monzo;

/// A named value in every exact and approximate form at once.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub notation: String,
    /// `num/den` in lowest terms.
    pub fraction: String,
    /// `(prime, exponent)` pairs in prime order.
    pub monzo: Vec<(u64, i64)>,
    /// Rounded to two decimals, half away from zero.
    pub cents: f64,
}

impl OutputRecord {
    pub fn new(notation: impl Into<String>, value: &Monzo) -> Self {
        OutputRecord {
            notation: notation.into(),
            fraction: value.to_fraction().to_string(),
            monzo: value.factors().to_vec(),
            cents: round_cents(value.cents()),
        }
    }

    /// Cents with exactly two decimals, e.g. `-2786.31`.
    pub fn cents_text(&self) -> String {
        format!("{:.2}", self.cents)
    }
}

/// Rounds half away from zero to two decimals and clears negative zero.
pub fn round_cents(cents: f64) -> f64 {
    let r = (cents * 100.0).round() / 100.0;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_fields_agree() {
        let v = Monzo::from_u64(1, 5).unwrap();
        let r = OutputRecord::new("Ab1[1/5]", &v);
        assert_eq!(r.fraction, "1/5");
        assert_eq!(r.monzo, vec![(5, -1)]);
        assert_eq!(r.cents_text(), "-2786.31");
    }

    #[test]
    fn rounding() {
        assert_eq!(round_cents(701.955), 701.96);
        assert_eq!(round_cents(-21.506), -21.51);
        assert_eq!(round_cents(-0.001).to_string(), "0");
        assert_eq!(round_cents(0.125), 0.13);
        assert_eq!(round_cents(-0.125), -0.13);
    }
}
