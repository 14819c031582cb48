//! Sequences of notations: transposition, intervals and common-comma factoring.

use std::collections::BTreeMap;

use crate::comma::{Comma, CommaTable};
use crate::error::{Error, Result};
use crate::monzo::Monzo;
use crate::notation::Notation;
use crate::text::{parse_comma, parse_notation, print_notation, NotationStyle};

/// An ordered run of notes, optionally with a comma factored out of all of
/// them. `(E4 F#4[17] Ab.4[19])[23]` is three notes with common comma `[23]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Melody {
    pub notes: Vec<Notation>,
    /// Multiplies every note's comma on expansion. Unity when absent.
    pub common_comma: Comma,
}

impl Melody {
    pub fn new(notes: Vec<Notation>) -> Self {
        Melody {
            notes,
            common_comma: Comma::unity(),
        }
    }

    pub fn with_common_comma(notes: Vec<Notation>, common_comma: Comma) -> Self {
        Melody {
            notes,
            common_comma,
        }
    }

    pub fn len(&self) -> usize {
        self.notes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.notes.is_empty()
    }

    /// Folds the common comma back into every note.
    pub fn expand(&self) -> Melody {
        let notes = self
            .notes
            .iter()
            .map(|n| Notation {
                comma: n.comma.mul(&self.common_comma),
                ..n.clone()
            })
            .collect();
        Melody::new(notes)
    }

    pub fn transpose_up(&self, by: &Notation) -> Melody {
        Melody {
            notes: self.notes.iter().map(|n| n.mul(by)).collect(),
            common_comma: self.common_comma.clone(),
        }
    }

    pub fn transpose_down(&self, by: &Notation) -> Melody {
        self.transpose_up(&by.inv())
    }

    /// Exact values of the expanded notes.
    pub fn values(&self, table: &CommaTable) -> Vec<Monzo> {
        self.expand().notes.iter().map(|n| n.eval(table)).collect()
    }

    /// Ratio of each note to the one before it. Empty for fewer than two notes.
    pub fn intervals(&self, table: &CommaTable) -> Vec<Monzo> {
        self.values(table)
            .windows(2)
            .map(|w| &w[1] / &w[0])
            .collect()
    }

    /// Pulls the largest shared comma out of the notes.
    ///
    /// For each prime in the expanded commas, the shared exponent is the one
    /// of smallest magnitude when every note carries that prime with the same
    /// sign, and zero otherwise.
    pub fn factor_common_comma(&self) -> Melody {
        let expanded = self.expand();
        let Some(first) = expanded.notes.first() else {
            return expanded;
        };
        let mut shared: BTreeMap<u64, i64> =
            first.comma.as_monzo().factors().iter().copied().collect();
        for note in &expanded.notes[1..] {
            shared.retain(|&p, e| {
                let f = note.comma.exponent(p);
                if f.signum() != e.signum() {
                    return false;
                }
                if f.abs() < e.abs() {
                    *e = f;
                }
                true
            });
        }
        let common = Comma::from_monzo(Monzo::from_prime_factors(shared.into_iter().collect()))
            .expect("subset of 5-rough factors");
        let divisor = common.recip();
        let notes = expanded
            .notes
            .into_iter()
            .map(|n| Notation {
                comma: n.comma.mul(&divisor),
                ..n
            })
            .collect();
        Melody::with_common_comma(notes, common)
    }

    /// Reads the melody file format: whitespace-separated notations, `;`
    /// comment lines, and an optional final comma-group token that becomes
    /// the common comma.
    pub fn parse(text: &str) -> Result<Melody> {
        let mut notes = Vec::new();
        let mut common: Option<(usize, Comma)> = None;
        for (index, line) in text.lines().enumerate() {
            let line_no = index + 1;
            if line.trim_start().starts_with(';') {
                continue;
            }
            for token in line.split_whitespace() {
                if let Some((at, _)) = &common {
                    return Err(Error::MisplacedCommonComma { line: *at });
                }
                if token.starts_with('[') {
                    let comma = parse_comma(token).map_err(|source| Error::MelodyLine {
                        line: line_no,
                        source,
                    })?;
                    common = Some((line_no, comma));
                } else {
                    let note = parse_notation(token).map_err(|source| Error::MelodyLine {
                        line: line_no,
                        source,
                    })?;
                    notes.push(note);
                }
            }
        }
        Ok(Melody::with_common_comma(
            notes,
            common.map(|(_, c)| c).unwrap_or_default(),
        ))
    }

    /// Writes the melody file format on one line.
    pub fn to_text(&self, style: NotationStyle) -> String {
        let mut tokens: Vec<String> = self
            .notes
            .iter()
            .map(|n| print_notation(n, style))
            .collect();
        if !self.common_comma.is_unity() {
            tokens.push(self.common_comma.to_string());
        }
        tokens.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn melody(text: &str) -> Melody {
        Melody::parse(text).unwrap()
    }

    fn spelled(m: &Melody) -> String {
        m.to_text(NotationStyle::shorthand())
    }

    #[test]
    fn identity_transposition() {
        let m = melody("C4 D4 E'4 F4 G4 A'4 Bb4[7]");
        assert_eq!(m.transpose_up(&Notation::identity()), m);
    }

    #[test]
    fn parses_comments_and_common_comma() {
        let m = melody("; a comment\nE4  F#4[17]\n  ; indented comment\nAb.4[19] [23]\n");
        assert_eq!(m.len(), 3);
        assert_eq!(m.common_comma, Comma::from_u64(23, 1).unwrap());
        assert_eq!(spelled(&m), "E4 F#4[17] Ab.4[19] [23]");
    }

    #[test]
    fn parse_errors_carry_line() {
        let err = Melody::parse("C4\nD4 Eb#4").unwrap_err();
        assert!(matches!(err, Error::MelodyLine { line: 2, .. }));
        assert!(err.to_string().contains("position 2"));
        let err = Melody::parse("C4 [5] D4").unwrap_err();
        assert!(matches!(err, Error::MisplacedCommonComma { line: 1 }));
        assert!(Melody::parse("C4 [6]").is_err());
    }

    #[test]
    fn empty_melody() {
        let m = melody("; nothing here\n\n");
        assert!(m.is_empty());
        assert!(m.intervals(&CommaTable::new()).is_empty());
        assert_eq!(m.factor_common_comma(), m);
    }

    #[test]
    fn interval_examples() {
        let t = CommaTable::new();
        let iv = melody("Db.4 Eb.4").intervals(&t);
        assert_eq!(iv, [Monzo::from_u64(9, 8).unwrap()]);
        let iv = melody("C4 C4").intervals(&t);
        assert_eq!(iv, [Monzo::unity()]);
        let iv = melody("Eb.4 Ab.3").intervals(&t);
        assert_eq!(iv, [Monzo::from_u64(2, 3).unwrap()]);
        assert!(melody("C4").intervals(&t).is_empty());
    }

    #[test]
    fn factor_examples() {
        let m = melody("E4[23] F#4[391] Ab.4[437]").factor_common_comma();
        assert_eq!(m.common_comma, Comma::from_u64(23, 1).unwrap());
        assert_eq!(spelled(&m), "E4 F#4[17] Ab.4[19] [23]");

        let m = melody("C4 G4[7]").factor_common_comma();
        assert!(m.common_comma.is_unity());
        assert_eq!(spelled(&m), "C4 G4[7]");

        let m = melody("C4[25] G4[5]").factor_common_comma();
        assert_eq!(m.common_comma, Comma::from_u64(5, 1).unwrap());
        assert_eq!(m.to_text(NotationStyle::default()), "C4[5] G4 [5]");
    }

    #[test]
    fn factor_respects_sign() {
        // 7 appears with mixed signs, 1/11 shared with smallest magnitude 1
        let m = melody("C4[7/121] D4[1/77]").factor_common_comma();
        assert_eq!(m.common_comma, Comma::from_u64(1, 11).unwrap());
        assert_eq!(m.expand(), melody("C4[7/121] D4[1/77]"));
    }

    #[test]
    fn transposing_keeps_common_comma() {
        let m = melody("E4 F#4[17] [23]");
        let by: Notation = "G4".parse().unwrap();
        let up = m.transpose_up(&by);
        assert_eq!(up.common_comma, m.common_comma);
        assert_eq!(up.expand(), m.expand().transpose_up(&by));
        assert_eq!(up.transpose_down(&by), m);
    }
}
