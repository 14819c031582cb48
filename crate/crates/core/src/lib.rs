//! Exact arithmetic for free Just Intonation notations `L[x/y]_z`.
//!
//! Every notation names one positive rational: a Pythagorean note `L_z`
//! (letter, sharps or flats, octave number, with C4 = 1/1) times a rational
//! comma `[x/y]` that carries the primes 5 and above. This crate parses and
//! prints notations, converts them to and from exact prime-exponent vectors,
//! and multiplies, divides and inverts them for transposition.
//!
//! ```
//! use ji_notation::{CommaTable, Notation};
//!
//! let table = CommaTable::new();
//! let a: Notation = "F#5[5]".parse().unwrap();
//! let b: Notation = "Eb6[1/5]".parse().unwrap();
//! let product = a.mul(&b);
//! assert_eq!(product.to_string(), "A7");
//! assert_eq!(product.eval(&table).to_fraction().to_string(), "27/2");
//! ```

pub mod comma;
pub mod error;
pub mod fraction;
pub mod melody;
pub mod monzo;
pub mod notation;
pub mod record;
pub mod text;

pub use comma::{
    analyze_three_candidates, select_prime_comma, Comma, CommaTable, ThreeCandidate,
    ThreeCandidateAnalysis, DEFAULT_SEARCH_BOUND,
};
pub use error::{Error, ParseError, Result};
pub use fraction::Fraction;
pub use melody::Melody;
pub use monzo::{Measures, Monzo};
pub use notation::{
    inv_table, mul_table, pythagorean_decompose, Letter, MulTable, Notation, PitchClass,
    PythagoreanNote, TableOrder,
};
pub use record::{round_cents, OutputRecord};
pub use text::{
    parse_comma, parse_notation, parse_pitch_class, print_notation, Form, NotationStyle,
};
