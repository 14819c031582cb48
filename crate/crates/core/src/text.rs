//! ASCII notation syntax.
//!
//! ```text
//! notation    := LETTER accidentals marks (group | octave)*      one octave, required
//! pitch-class := LETTER accidentals marks (group | '~' INT | '_' INT)*
//! accidentals := '#'* | 'b'*
//! marks       := "'"* | '.'*          each ' is [5], each . is [1/5]
//! group       := '[' INT ('/' INT)? ']'
//! octave      := ('+' | '-')? DIGITS | '(' ('+' | '-')? DIGITS ')'
//! ```
//!
//! Letters are upper case and `b` is a flat, so the syntax is case sensitive.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::comma::Comma;
use crate::error::{Error, ParseError};
use crate::fraction::Fraction;
use crate::notation::{Letter, Notation, PitchClass};

/// Where the octave number goes relative to the comma.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Form {
    /// `Lz[x/y]`, the recommended ASCII form.
    #[default]
    OctaveThenComma,
    /// `L[x/y]z`
    CommaThenOctave,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NotationStyle {
    pub form: Form,
    /// Write the power of 5 in the comma as `'` or `.` marks.
    pub shorthand_fives: bool,
}

impl NotationStyle {
    pub fn shorthand() -> Self {
        NotationStyle {
            shorthand_fives: true,
            ..Default::default()
        }
    }
}

pub fn print_notation(n: &Notation, style: NotationStyle) -> String {
    let (head, comma) = head_and_comma(&n.pitch_class(), style);
    let octave = if n.octave < 0 {
        format!("({})", n.octave)
    } else {
        n.octave.to_string()
    };
    match style.form {
        Form::OctaveThenComma => format!("{head}{octave}{comma}"),
        Form::CommaThenOctave => format!("{head}{comma}{octave}"),
    }
}

pub fn print_pitch_class(pc: &PitchClass, style: NotationStyle) -> String {
    let (head, comma) = head_and_comma(pc, style);
    format!("{head}{comma}")
}

fn head_and_comma(pc: &PitchClass, style: NotationStyle) -> (String, String) {
    let mut head = String::new();
    head.push(pc.letter.symbol());
    let accidental = if pc.sharps > 0 { "#" } else { "b" };
    head.push_str(&accidental.repeat(pc.sharps.unsigned_abs() as usize));
    let comma = if style.shorthand_fives {
        let (fives, rest) = pc.comma.split_fives();
        let mark = if fives > 0 { "'" } else { "." };
        head.push_str(&mark.repeat(fives.unsigned_abs() as usize));
        rest
    } else {
        pc.comma.clone()
    };
    let comma = if comma.is_unity() {
        String::new()
    } else {
        comma.to_string()
    };
    (head, comma)
}

impl fmt::Display for Notation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_notation(self, NotationStyle::default()))
    }
}

impl fmt::Display for PitchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_pitch_class(self, NotationStyle::default()))
    }
}

impl FromStr for Notation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_notation(s)
    }
}

impl FromStr for PitchClass {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pitch_class(s)
    }
}

pub fn parse_notation(s: &str) -> Result<Notation, ParseError> {
    let mut p = Parser::new(s);
    let (letter, sharps, mut comma) = p.head()?;
    let mut octave: Option<i64> = None;
    while let Some(c) = p.peek() {
        match c {
            b'[' => comma = comma.mul(&p.group()?),
            b'0'..=b'9' | b'+' | b'-' | b'(' => {
                if octave.is_some() {
                    return Err(p.error("octave number given twice"));
                }
                octave = Some(p.octave()?);
            }
            b'~' | b'_' => {
                return Err(p.error("'~' and '_' shorthands are only allowed in pitch classes"))
            }
            _ => return Err(p.error("unexpected character")),
        }
    }
    let octave = octave.ok_or_else(|| p.error("missing octave number"))?;
    Ok(Notation::new(letter, sharps, octave, comma))
}

pub fn parse_pitch_class(s: &str) -> Result<PitchClass, ParseError> {
    let mut p = Parser::new(s);
    let (letter, sharps, mut comma) = p.head()?;
    while let Some(c) = p.peek() {
        match c {
            b'[' => comma = comma.mul(&p.group()?),
            b'~' | b'_' => {
                let start = p.pos;
                p.pos += 1;
                let n = p.integer()?;
                let label = if c == b'~' {
                    Fraction::new(n, BigUint::from(1u32))
                } else {
                    Fraction::new(BigUint::from(1u32), n)
                };
                comma = comma.mul(&p.comma_from(label, start)?);
            }
            b'0'..=b'9' | b'+' | b'-' | b'(' => return Err(p.error("pitch class has no octave")),
            _ => return Err(p.error("unexpected character")),
        }
    }
    Ok(PitchClass::new(letter, sharps, comma))
}

/// One or more adjacent comma groups, e.g. `[23]` or `[5][1/7]`.
pub fn parse_comma(s: &str) -> Result<Comma, ParseError> {
    let mut p = Parser::new(s);
    if p.peek() != Some(b'[') {
        return Err(p.error("expected '['"));
    }
    let mut comma = Comma::unity();
    while p.peek().is_some() {
        comma = comma.mul(&p.group()?);
    }
    Ok(comma)
}

struct Parser<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            input,
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, message: &str) -> ParseError {
        self.error_at(self.pos, message)
    }

    fn error_at(&self, pos: usize, message: &str) -> ParseError {
        ParseError::new(self.input, pos, message)
    }

    /// Letter, accidentals and shorthand marks.
    fn head(&mut self) -> Result<(Letter, i64, Comma), ParseError> {
        let letter = self
            .peek()
            .and_then(|c| Letter::from_symbol(c as char))
            .ok_or_else(|| self.error("expected a note letter A-G"))?;
        self.pos += 1;

        let mut sharps = 0i64;
        while let Some(c @ (b'#' | b'b')) = self.peek() {
            let step = if c == b'#' { 1 } else { -1 };
            if sharps != 0 && sharps.signum() != step {
                return Err(self.error("cannot mix sharps and flats"));
            }
            sharps += step;
            self.pos += 1;
        }

        let mut fives = 0i64;
        while let Some(c @ (b'\'' | b'.')) = self.peek() {
            let step = if c == b'\'' { 1 } else { -1 };
            if fives != 0 && fives.signum() != step {
                return Err(self.error("cannot mix ' and . marks"));
            }
            fives += step;
            self.pos += 1;
        }
        let comma = if fives == 0 {
            Comma::unity()
        } else {
            Comma::prime_power(5, fives).expect("5 is prime")
        };
        Ok((letter, sharps, comma))
    }

    fn integer(&mut self) -> Result<BigUint, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(self.input[start..self.pos].parse().expect("ascii digits"))
    }

    fn expect(&mut self, byte: u8, message: &str) -> Result<(), ParseError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(message))
        }
    }

    fn group(&mut self) -> Result<Comma, ParseError> {
        let start = self.pos;
        self.expect(b'[', "expected '['")?;
        let num = self.integer()?;
        let den = if self.peek() == Some(b'/') {
            self.pos += 1;
            self.integer()?
        } else {
            BigUint::from(1u32)
        };
        self.expect(b']', "expected ']' to close the comma")?;
        self.comma_from(Fraction::new(num, den), start)
    }

    fn comma_from(
        &self,
        label: Result<Fraction, Error>,
        start: usize,
    ) -> Result<Comma, ParseError> {
        label
            .and_then(|f| Comma::from_fraction(&f))
            .map_err(|e| match e {
                Error::NotFiveRough(_) => {
                    self.error_at(start, "comma must be 5-rough (no factors of 2 or 3)")
                }
                Error::NotPositive(_) => self.error_at(start, "comma numbers must be positive"),
                other => self.error_at(start, &other.to_string()),
            })
    }

    fn octave(&mut self) -> Result<i64, ParseError> {
        let bracketed = self.peek() == Some(b'(');
        if bracketed {
            self.pos += 1;
        }
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let digits_start = self.pos;
        let magnitude = self.integer()?;
        let magnitude: i64 = magnitude
            .try_into()
            .map_err(|_| self.error_at(digits_start, "octave number out of range"))?;
        if bracketed {
            self.expect(b')', "expected ')' after the octave number")?;
        }
        Ok(if negative { -magnitude } else { magnitude })
    }
}
