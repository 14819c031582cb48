//! The `L[x/y]_z` notation and its arithmetic.
//!
//! A notation factors into four components: an octave shift `2^(z-4)`, a
//! Pythagorean scale note in octave 4, `k` sharps of `2187/2048` each, and a
//! comma label. Multiplication and inversion work per component; only the
//! scale-note step can carry into the sharp count and the octave.

use crate::comma::{Comma, CommaTable};
use crate::error::{Error, Result};
use crate::monzo::Monzo;

/// Diatonic note label. Discriminants are positions on the chain of fifths
/// with C at 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    F = -1,
    C = 0,
    G = 1,
    D = 2,
    A = 3,
    E = 4,
    B = 5,
}

impl Letter {
    /// Chain-of-fifths order, F to B.
    pub const FIFTHS: [Letter; 7] = [
        Letter::F,
        Letter::C,
        Letter::G,
        Letter::D,
        Letter::A,
        Letter::E,
        Letter::B,
    ];

    /// Ascending pitch order within an octave, C to B.
    pub const PITCH: [Letter; 7] = [
        Letter::C,
        Letter::D,
        Letter::E,
        Letter::F,
        Letter::G,
        Letter::A,
        Letter::B,
    ];

    /// Exponent of 3 in the octave-4 scale note.
    pub fn fifths(self) -> i64 {
        self as i64
    }

    pub fn from_fifths(m: i64) -> Option<Letter> {
        Letter::FIFTHS.get(usize::try_from(m + 1).ok()?).copied()
    }

    /// Exponent of 2 in the octave-4 scale note.
    pub fn two_exponent(self) -> i64 {
        match self {
            Letter::F => 2,
            Letter::C => 0,
            Letter::G => -1,
            Letter::D => -3,
            Letter::A => -4,
            Letter::E => -6,
            Letter::B => -7,
        }
    }

    /// The scale note in octave 4 (4/3, 1/1, 3/2, 9/8, 27/16, 81/64, 243/128).
    pub fn scale_note(self) -> Monzo {
        Monzo::from_prime_factors(vec![(2, self.two_exponent()), (3, self.fifths())])
    }

    pub fn symbol(self) -> char {
        match self {
            Letter::F => 'F',
            Letter::C => 'C',
            Letter::G => 'G',
            Letter::D => 'D',
            Letter::A => 'A',
            Letter::E => 'E',
            Letter::B => 'B',
        }
    }

    pub fn from_symbol(c: char) -> Option<Letter> {
        Letter::FIFTHS.into_iter().find(|l| l.symbol() == c)
    }
}

/// Sharp: 2187/2048.
fn sharp_factor(k: i64) -> Monzo {
    Monzo::from_prime_factors(vec![(2, -11 * k), (3, 7 * k)])
}

/// Label, sharps and octave of a 3-limit value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PythagoreanNote {
    pub letter: Letter,
    pub sharps: i64,
    pub octave: i64,
}

/// Spells a 3-limit value as a letter, sharp count and octave number.
///
/// With `3^b * 2^a`, the sharp count is the `k` that puts `b - 7k` in
/// `-1..=5`; the octave absorbs whatever power of 2 remains.
pub fn pythagorean_decompose(m3: &Monzo) -> Result<PythagoreanNote> {
    if !m3.is_three_limit() {
        return Err(Error::NotThreeLimit(m3.to_fraction().to_string()));
    }
    let a = m3.exponent(2);
    let b = m3.exponent(3);
    let sharps = (b + 1).div_euclid(7);
    let letter = Letter::from_fifths(b - 7 * sharps).expect("reduced into -1..=5");
    let octave = 4 + a - letter.two_exponent() + 11 * sharps;
    Ok(PythagoreanNote {
        letter,
        sharps,
        octave,
    })
}

/// A frequency notation `L[x/y]_z` relative to C4 = 1/1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Notation {
    pub letter: Letter,
    /// Positive for sharps, negative for flats.
    pub sharps: i64,
    pub octave: i64,
    pub comma: Comma,
}

/// A notation without octave, `L[x/y]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PitchClass {
    pub letter: Letter,
    pub sharps: i64,
    pub comma: Comma,
}

impl PitchClass {
    pub fn new(letter: Letter, sharps: i64, comma: Comma) -> Self {
        PitchClass {
            letter,
            sharps,
            comma,
        }
    }

    pub fn at_octave(&self, octave: i64) -> Notation {
        Notation::new(self.letter, self.sharps, octave, self.comma.clone())
    }
}

impl Notation {
    pub fn new(letter: Letter, sharps: i64, octave: i64, comma: Comma) -> Self {
        Notation {
            letter,
            sharps,
            octave,
            comma,
        }
    }

    /// A notation with no comma.
    pub fn pythagorean(letter: Letter, sharps: i64, octave: i64) -> Self {
        Notation::new(letter, sharps, octave, Comma::unity())
    }

    /// C4, the notation of 1/1.
    pub fn identity() -> Self {
        Notation::pythagorean(Letter::C, 0, 4)
    }

    pub fn pitch_class(&self) -> PitchClass {
        PitchClass::new(self.letter, self.sharps, self.comma.clone())
    }

    /// The value without its comma: `2^(z-4) * N4 * S_k`.
    pub fn pythagorean_value(&self) -> Monzo {
        let octave = Monzo::from_prime_factors(vec![(2, self.octave - 4)]);
        let note = self.letter.scale_note();
        &(&octave * &note) * &sharp_factor(self.sharps)
    }

    /// The exact frequency ratio this notation names.
    pub fn eval(&self, table: &CommaTable) -> Monzo {
        &self.pythagorean_value() * &table.value(&self.comma)
    }

    /// The notation of `value`. Its comma label is the 5-rough part of
    /// `value`; dividing out the comma's value leaves a 3-limit remainder
    /// that fixes letter, sharps and octave.
    pub fn notate(value: &Monzo, table: &CommaTable) -> Notation {
        let (_, rough) = value.split_rough();
        let comma = Comma::from_monzo(rough).expect("split_rough gives a 5-rough part");
        let remainder = value / &table.value(&comma);
        let p = pythagorean_decompose(&remainder).expect("prime commas are p times 3-limit");
        Notation::new(p.letter, p.sharps, p.octave, comma)
    }

    /// Product computed one component at a time: octaves add (less 4), sharps
    /// add, comma labels multiply, and the two scale notes multiply through
    /// the 3-limit spelling, which may carry a sharp and an octave.
    pub fn mul(&self, other: &Notation) -> Notation {
        let note_product = &self.letter.scale_note() * &other.letter.scale_note();
        let carry = pythagorean_decompose(&note_product).expect("scale notes are 3-limit");
        Notation {
            letter: carry.letter,
            sharps: self.sharps + other.sharps + carry.sharps,
            octave: (self.octave + other.octave - 4) + (carry.octave - 4),
            comma: self.comma.mul(&other.comma),
        }
    }

    /// Inverse computed one component at a time: octave `z` maps to `8 - z`,
    /// sharps negate, the comma label turns upside down, and the scale note
    /// inverts through the 3-limit spelling.
    pub fn inv(&self) -> Notation {
        let carry = pythagorean_decompose(&self.letter.scale_note().recip())
            .expect("scale notes are 3-limit");
        Notation {
            letter: carry.letter,
            sharps: -self.sharps + carry.sharps,
            octave: (8 - self.octave) + (carry.octave - 4),
            comma: self.comma.recip(),
        }
    }

    pub fn div(&self, other: &Notation) -> Notation {
        self.mul(&other.inv())
    }
}

/// Ordering of the rows and columns of a scale-note table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableOrder {
    /// F C G D A E B
    Fifths,
    /// C D E F G A B
    Pitch,
}

impl TableOrder {
    pub fn letters(self) -> [Letter; 7] {
        match self {
            TableOrder::Fifths => Letter::FIFTHS,
            TableOrder::Pitch => Letter::PITCH,
        }
    }
}

/// Products of the seven octave-4 scale notes.
#[derive(Clone, Debug, PartialEq)]
pub struct MulTable {
    pub headers: Vec<Notation>,
    /// `cells[row][col] = headers[row] * headers[col]`.
    pub cells: Vec<Vec<Notation>>,
}

pub fn mul_table(order: TableOrder) -> MulTable {
    let headers: Vec<Notation> = order
        .letters()
        .iter()
        .map(|&l| Notation::pythagorean(l, 0, 4))
        .collect();
    let cells = headers
        .iter()
        .map(|row| headers.iter().map(|col| row.mul(col)).collect())
        .collect();
    MulTable { headers, cells }
}

/// `(note, inverse)` for the seven octave-4 scale notes in pitch order.
pub fn inv_table() -> Vec<(Notation, Notation)> {
    Letter::PITCH
        .iter()
        .map(|&l| {
            let n = Notation::pythagorean(l, 0, 4);
            let i = n.inv();
            (n, i)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pyth(l: Letter, k: i64, z: i64) -> Notation {
        Notation::pythagorean(l, k, z)
    }

    fn value(n: &Notation) -> String {
        n.eval(&CommaTable::new()).to_fraction().to_string()
    }

    #[test]
    fn scale_notes() {
        let got: Vec<String> = Letter::PITCH
            .iter()
            .map(|&l| l.scale_note().to_fraction().to_string())
            .collect();
        assert_eq!(
            got,
            ["1/1", "9/8", "81/64", "4/3", "3/2", "27/16", "243/128"]
        );
    }

    #[test]
    fn letter_round_trip() {
        for l in Letter::FIFTHS {
            assert_eq!(Letter::from_fifths(l.fifths()), Some(l));
            assert_eq!(Letter::from_symbol(l.symbol()), Some(l));
        }
        assert_eq!(Letter::from_fifths(6), None);
        assert_eq!(Letter::from_fifths(-2), None);
        assert_eq!(Letter::from_symbol('H'), None);
    }

    #[test]
    fn decompose_examples() {
        let d = pythagorean_decompose(&Monzo::from_u64(8, 9).unwrap()).unwrap();
        assert_eq!((d.letter, d.sharps, d.octave), (Letter::B, -1, 3));
        let d = pythagorean_decompose(&Monzo::unity()).unwrap();
        assert_eq!((d.letter, d.sharps, d.octave), (Letter::C, 0, 4));
        let d = pythagorean_decompose(&Monzo::from_u64(6561, 2048).unwrap()).unwrap();
        assert_eq!((d.letter, d.sharps, d.octave), (Letter::G, 1, 5));
    }

    #[test]
    fn decompose_rejects_higher_primes() {
        assert!(matches!(
            pythagorean_decompose(&Monzo::from_u64(5, 4).unwrap()),
            Err(Error::NotThreeLimit(_))
        ));
    }

    #[test]
    fn decompose_reconstructs() {
        for a in -30..30 {
            for b in -30..30 {
                let m = Monzo::from_prime_factors(vec![(2, a), (3, b)]);
                let d = pythagorean_decompose(&m).unwrap();
                assert_eq!(pyth(d.letter, d.sharps, d.octave).pythagorean_value(), m);
            }
        }
    }

    #[test]
    fn eval_examples() {
        assert_eq!(value(&Notation::identity()), "1/1");
        let e5 = Notation::new(Letter::E, 0, 4, Comma::from_u64(5, 1).unwrap());
        assert_eq!(value(&e5), "5/4");
        let fbb = Notation::new(Letter::F, -2, 3, Comma::from_u64(7, 25).unwrap());
        assert_eq!(value(&fbb), "3584/6075");
        let ab = Notation::new(Letter::A, -1, 1, Comma::from_u64(1, 5).unwrap());
        assert_eq!(value(&ab), "1/5");
    }

    #[test]
    fn notate_examples() {
        let t = CommaTable::new();
        let a7 = Notation::notate(&Monzo::from_u64(27, 2).unwrap(), &t);
        assert_eq!(a7, pyth(Letter::A, 0, 7));
        let e6 = Notation::notate(&Monzo::from_u64(5, 1).unwrap(), &t);
        assert_eq!(
            e6,
            Notation::new(Letter::E, 0, 6, Comma::from_u64(5, 1).unwrap())
        );
        let f3 = Notation::notate(&Monzo::from_u64(13, 20).unwrap(), &t);
        assert_eq!(
            f3,
            Notation::new(Letter::F, 0, 3, Comma::from_u64(13, 5).unwrap())
        );
    }

    #[test]
    fn identity_is_neutral() {
        let n = Notation::new(Letter::A, 3, -5, Comma::from_u64(77, 13).unwrap());
        assert_eq!(n.mul(&Notation::identity()), n);
        assert_eq!(Notation::identity().mul(&n), n);
        assert_eq!(Notation::identity().inv(), Notation::identity());
    }

    #[test]
    fn simple_products() {
        assert_eq!(
            pyth(Letter::D, 0, 4).mul(&pyth(Letter::G, 0, 4)),
            pyth(Letter::A, 0, 4)
        );
        assert_eq!(
            pyth(Letter::F, 0, 4).mul(&pyth(Letter::F, 0, 4)),
            pyth(Letter::B, -1, 4)
        );
        assert_eq!(
            pyth(Letter::D, 0, 4).mul(&pyth(Letter::E, 0, 4)),
            pyth(Letter::F, 1, 4)
        );
        assert_eq!(
            pyth(Letter::G, 0, 4).mul(&pyth(Letter::A, 0, 4)),
            pyth(Letter::E, 0, 5)
        );
    }

    #[test]
    fn opposites() {
        assert_eq!(pyth(Letter::F, 0, 4).inv(), pyth(Letter::G, 0, 3));
        assert_eq!(pyth(Letter::G, 0, 4).inv(), pyth(Letter::F, 0, 3));
        assert_eq!(pyth(Letter::D, 0, 4).inv(), pyth(Letter::B, -1, 3));
        assert_eq!(pyth(Letter::F, 1, 4).inv(), pyth(Letter::G, -1, 3));
        assert_eq!(pyth(Letter::G, 0, 5).inv(), pyth(Letter::F, 0, 2));
    }

    #[test]
    fn division() {
        let g = pyth(Letter::G, 0, 4);
        assert_eq!(g.div(&g), Notation::identity());
    }

    #[test]
    fn table_corners() {
        let t = mul_table(TableOrder::Fifths);
        assert_eq!(t.cells[0][6], pyth(Letter::E, 0, 5));
        assert_eq!(t.cells[6][6], pyth(Letter::A, 1, 5));
        let t = mul_table(TableOrder::Pitch);
        assert_eq!(t.cells[0][0], Notation::identity());
        let inv = inv_table();
        assert_eq!(inv[2].1, pyth(Letter::A, -1, 3));
    }
}
