//! WebAssembly entry points for the calculator page in `www/`.
//!
//! Each operation has a plain Rust form returning a JSON string (tested
//! natively) and a `#[wasm_bindgen]` wrapper that turns the error into a
//! JavaScript exception.

use ji_notation::{
    mul_table, print_notation, CommaTable, Fraction, Melody, Monzo, Notation, NotationStyle,
    OutputRecord, TableOrder,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct Binary {
    left: OutputRecord,
    right: OutputRecord,
    result: OutputRecord,
}

#[derive(Serialize)]
struct Transposed {
    notes: Vec<OutputRecord>,
    /// The transposed melody in file format, with any shared comma pulled out.
    factored: String,
}

#[derive(Serialize)]
struct Table {
    headers: Vec<String>,
    cells: Vec<Vec<OutputRecord>>,
}

fn style(shorthand: bool) -> NotationStyle {
    if shorthand {
        NotationStyle::shorthand()
    } else {
        NotationStyle::default()
    }
}

fn record(n: &Notation, table: &CommaTable, shorthand: bool) -> OutputRecord {
    OutputRecord::new(print_notation(n, style(shorthand)), &n.eval(table))
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn is_fraction(input: &str) -> bool {
    !input.is_empty() && input.chars().all(|c| c.is_ascii_digit() || c == '/')
}

/// Accepts a notation such as `Bb4[7]` or a fraction such as `7/4`.
pub fn evaluate_json(input: &str, shorthand: bool) -> Result<String, String> {
    let input = input.trim();
    let table = CommaTable::new();
    let n = if is_fraction(input) {
        let f: Fraction = input.parse().map_err(|e| format!("{e}"))?;
        let v = Monzo::from_fraction(&f).map_err(|e| e.to_string())?;
        Notation::notate(&v, &table)
    } else {
        input.parse::<Notation>().map_err(|e| e.to_string())?
    };
    Ok(json(&record(&n, &table, shorthand)))
}

/// `op` is `"mul"` or `"div"`.
pub fn combine_json(a: &str, b: &str, op: &str, shorthand: bool) -> Result<String, String> {
    let table = CommaTable::new();
    let x = a.trim().parse::<Notation>().map_err(|e| e.to_string())?;
    let y = b.trim().parse::<Notation>().map_err(|e| e.to_string())?;
    let r = match op {
        "mul" => x.mul(&y),
        "div" => x.div(&y),
        other => return Err(format!("unknown operation {other:?}")),
    };
    Ok(json(&Binary {
        left: record(&x, &table, shorthand),
        right: record(&y, &table, shorthand),
        result: record(&r, &table, shorthand),
    }))
}

/// Transposes a melody written in the melody file format.
pub fn transpose_json(
    melody: &str,
    by: &str,
    down: bool,
    shorthand: bool,
) -> Result<String, String> {
    let table = CommaTable::new();
    let m = Melody::parse(melody).map_err(|e| e.to_string())?;
    let t = by.trim().parse::<Notation>().map_err(|e| e.to_string())?;
    let moved = if down {
        m.transpose_down(&t)
    } else {
        m.transpose_up(&t)
    };
    let notes = moved
        .expand()
        .notes
        .iter()
        .map(|n| record(n, &table, shorthand))
        .collect();
    Ok(json(&Transposed {
        notes,
        factored: moved.factor_common_comma().to_text(style(shorthand)),
    }))
}

/// `order` is `"fifths"` or `"pitch"`.
pub fn table_json(order: &str) -> Result<String, String> {
    let order = match order {
        "fifths" => TableOrder::Fifths,
        "pitch" => TableOrder::Pitch,
        other => return Err(format!("unknown order {other:?}")),
    };
    let table = CommaTable::new();
    let t = mul_table(order);
    Ok(json(&Table {
        headers: t.headers.iter().map(ToString::to_string).collect(),
        cells: t
            .cells
            .iter()
            .map(|row| row.iter().map(|n| record(n, &table, false)).collect())
            .collect(),
    }))
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn evaluate(input: &str, shorthand: bool) -> Result<String, JsError> {
    js(evaluate_json(input, shorthand))
}

#[wasm_bindgen]
pub fn combine(a: &str, b: &str, op: &str, shorthand: bool) -> Result<String, JsError> {
    js(combine_json(a, b, op, shorthand))
}

#[wasm_bindgen]
pub fn transpose(melody: &str, by: &str, down: bool, shorthand: bool) -> Result<String, JsError> {
    js(transpose_json(melody, by, down, shorthand))
}

#[wasm_bindgen]
pub fn multiplication_table(order: &str) -> Result<String, JsError> {
    js(table_json(order))
}
