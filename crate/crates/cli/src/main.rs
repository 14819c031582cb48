mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ji_notation::{
    analyze_three_candidates, inv_table, mul_table, parse_comma, print_notation, Comma, CommaTable,
    Fraction, Melody, Monzo, Notation, NotationStyle, OutputRecord, TableOrder,
};
use serde_json::{json, Value};

use render::{
    analysis_json, analysis_rows, csv, grid, record_json, records_json, records_text, to_json,
};

/// Exact calculator for Just Intonation notations such as `F#5[5]` or `Ab.4[437]`.
///
/// C4 is 1/1. Quote notations that contain `#` or brackets.
#[derive(Parser, Debug)]
#[command(name = "jinote", version)]
struct Cli {
    /// Print one JSON document instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    /// Write powers of 5 as ' and . marks (e.g. E'4 rather than E4[5]).
    #[arg(long, global = true)]
    shorthand5: bool,
    /// Print only the cents of each result.
    #[arg(long, global = true)]
    cents_only: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact value of a notation.
    Eval { notation: String },
    /// Notation for a positive fraction `x/y`.
    Notate { fraction: String },
    /// Product of two notations.
    Mul { a: String, b: String },
    /// Quotient of two notations.
    Div { a: String, b: String },
    /// Reciprocal of a notation.
    Inv { a: String },
    /// Multiply (or divide, with --down) every note of a melody file.
    Transpose {
        #[arg(long)]
        by: String,
        #[arg(long)]
        down: bool,
        file: PathBuf,
    },
    /// Ratios between successive notes of a melody file.
    Intervals { file: PathBuf },
    /// Pull the largest shared comma out of a melody file.
    Factor { file: PathBuf },
    /// Reference tables.
    Table {
        #[command(subcommand)]
        which: TableCommand,
    },
    /// The comma `[P]` for a prime P >= 5.
    Comma { prime: u64 },
    /// Value of a rational comma label `x/y` or `[x/y]`.
    CommaLabel { label: String },
    /// Measures of the candidates 2^a * 3 for a comma of prime 3.
    Analyze3 {
        #[arg(long, default_value_t = -4, allow_negative_numbers = true)]
        min: i64,
        #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
        max: i64,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Subcommand, Debug)]
enum TableCommand {
    /// Products of the octave-4 scale notes.
    Mul {
        #[arg(long, value_enum, default_value_t = Order::Fifths)]
        order: Order,
        #[arg(long)]
        csv: bool,
    },
    /// Reciprocals of the octave-4 scale notes.
    Inv {
        #[arg(long)]
        csv: bool,
    },
    /// Prime commas up to a bound.
    Commas {
        #[arg(long, default_value_t = 23)]
        max_prime: u64,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Order {
    Fifths,
    Pitch,
}

#[derive(Debug)]
enum Failure {
    /// Bad notation, fraction or other domain input.
    Input(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Io(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Io(m) => m,
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

struct Session {
    table: CommaTable,
    json: bool,
    cents_only: bool,
    shorthand5: bool,
}

impl Session {
    /// Shorthand output is used when asked for, or when the input already uses it.
    fn style(&self, inputs: &[&str]) -> NotationStyle {
        if self.shorthand5 || inputs.iter().any(|s| s.contains(['\'', '.'])) {
            NotationStyle::shorthand()
        } else {
            NotationStyle::default()
        }
    }

    fn record(&self, n: &Notation, style: NotationStyle) -> OutputRecord {
        OutputRecord::new(print_notation(n, style), &n.eval(&self.table))
    }

    fn one(&self, r: OutputRecord) -> String {
        if self.json {
            to_json(&record_json(&r, self.cents_only))
        } else {
            records_text(&[r], self.cents_only)
        }
    }

    fn many(&self, rs: &[OutputRecord]) -> String {
        if self.json {
            to_json(&records_json(rs, self.cents_only))
        } else {
            records_text(rs, self.cents_only)
        }
    }

    fn run(&self, command: &Command) -> Result<String, Failure> {
        match command {
            Command::Eval { notation } => {
                let n = notation.parse::<Notation>().map_err(input)?;
                Ok(self.one(self.record(&n, self.style(&[notation]))))
            }
            Command::Notate { fraction } => {
                let f: Fraction = fraction.parse().map_err(input)?;
                let v = Monzo::from_fraction(&f).map_err(input)?;
                let n = Notation::notate(&v, &self.table);
                Ok(self.one(self.record(&n, self.style(&[]))))
            }
            Command::Mul { a, b } | Command::Div { a, b } => {
                let x = a.parse::<Notation>().map_err(input)?;
                let y = b.parse::<Notation>().map_err(input)?;
                let n = if matches!(command, Command::Mul { .. }) {
                    x.mul(&y)
                } else {
                    x.div(&y)
                };
                Ok(self.one(self.record(&n, self.style(&[a, b]))))
            }
            Command::Inv { a } => {
                let n = a.parse::<Notation>().map_err(input)?;
                Ok(self.one(self.record(&n.inv(), self.style(&[a]))))
            }
            Command::Transpose { by, down, file } => {
                let (text, melody) = read_melody(file)?;
                let t = by.parse::<Notation>().map_err(input)?;
                let moved = if *down {
                    melody.transpose_down(&t)
                } else {
                    melody.transpose_up(&t)
                };
                let style = self.style(&[&text, by]);
                let rs: Vec<_> = moved
                    .expand()
                    .notes
                    .iter()
                    .map(|n| self.record(n, style))
                    .collect();
                Ok(self.many(&rs))
            }
            Command::Intervals { file } => {
                let (text, melody) = read_melody(file)?;
                let style = self.style(&[&text]);
                let rs: Vec<_> = melody
                    .intervals(&self.table)
                    .iter()
                    .map(|v| self.record(&Notation::notate(v, &self.table), style))
                    .collect();
                Ok(self.many(&rs))
            }
            Command::Factor { file } => {
                let (text, melody) = read_melody(file)?;
                let style = self.style(&[&text]);
                let factored = melody.factor_common_comma();
                let notes: Vec<_> = factored
                    .notes
                    .iter()
                    .map(|n| self.record(n, style))
                    .collect();
                let common = comma_record(&factored.common_comma, &self.table);
                if self.json {
                    let doc = json!({
                        "notes": records_json(&notes, self.cents_only),
                        "common_comma": record_json(&common, self.cents_only),
                    });
                    return Ok(to_json(&doc));
                }
                let mut all = notes;
                all.push(common);
                Ok(records_text(&all, self.cents_only))
            }
            Command::Table { which } => self.table_command(which),
            Command::Comma { prime } => {
                let v = self.table.prime_comma(*prime).map_err(input)?;
                Ok(self.one(OutputRecord::new(format!("[{prime}]"), &v)))
            }
            Command::CommaLabel { label } => {
                let c = if label.starts_with('[') {
                    parse_comma(label).map_err(input)?
                } else {
                    let f: Fraction = label.parse().map_err(input)?;
                    Comma::from_fraction(&f).map_err(input)?
                };
                Ok(self.one(comma_record(&c, &self.table)))
            }
            Command::Analyze3 {
                min,
                max,
                csv: as_csv,
            } => {
                if min > max {
                    return Err(Failure::Input(format!(
                        "--min {min} is greater than --max {max}"
                    )));
                }
                let a = analyze_three_candidates(*min, *max);
                Ok(if self.json {
                    to_json(&analysis_json(&a))
                } else if *as_csv {
                    csv(&analysis_rows(&a))
                } else {
                    grid(&analysis_rows(&a))
                })
            }
        }
    }

    fn table_command(&self, which: &TableCommand) -> Result<String, Failure> {
        let style = self.style(&[]);
        match which {
            TableCommand::Mul { order, csv: as_csv } => {
                let order = match order {
                    Order::Fifths => TableOrder::Fifths,
                    Order::Pitch => TableOrder::Pitch,
                };
                let t = mul_table(order);
                let mut cells = Vec::new();
                for (row, products) in t.headers.iter().zip(&t.cells) {
                    for (col, p) in t.headers.iter().zip(products) {
                        cells.push((row.to_string(), col.to_string(), self.record(p, style)));
                    }
                }
                if self.json {
                    let doc: Vec<Value> = cells
                        .iter()
                        .map(|(row, col, r)| flat_cell(&[("row", row), ("column", col)], r))
                        .collect();
                    return Ok(to_json(&json!(doc)));
                }
                if *as_csv {
                    let mut rows =
                        vec![header(&["row", "column", "notation", "fraction", "cents"])];
                    rows.extend(cells.into_iter().map(|(row, col, r)| {
                        vec![
                            row,
                            col,
                            r.notation.clone(),
                            r.fraction.clone(),
                            r.cents_text(),
                        ]
                    }));
                    return Ok(csv(&rows));
                }
                let mut rows = vec![std::iter::once("x".to_string())
                    .chain(t.headers.iter().map(ToString::to_string))
                    .collect::<Vec<_>>()];
                for (row, products) in t.headers.iter().zip(&t.cells) {
                    rows.push(
                        std::iter::once(row.to_string())
                            .chain(products.iter().map(|p| print_notation(p, style)))
                            .collect(),
                    );
                }
                Ok(grid(&rows))
            }
            TableCommand::Inv { csv: as_csv } => {
                let pairs: Vec<(String, OutputRecord)> = inv_table()
                    .iter()
                    .map(|(n, i)| (n.to_string(), self.record(i, style)))
                    .collect();
                if self.json {
                    let doc: Vec<Value> = pairs
                        .iter()
                        .map(|(n, r)| flat_cell(&[("note", n)], r))
                        .collect();
                    return Ok(to_json(&json!(doc)));
                }
                let mut rows = vec![header(&["note", "inverse", "fraction", "cents"])];
                rows.extend(
                    pairs.into_iter().map(|(n, r)| {
                        vec![n, r.notation.clone(), r.fraction.clone(), r.cents_text()]
                    }),
                );
                Ok(if *as_csv { csv(&rows) } else { grid(&rows) })
            }
            TableCommand::Commas {
                max_prime,
                csv: as_csv,
            } => {
                let entries = self.table.commas_up_to(*max_prime);
                if self.json {
                    let doc: Vec<Value> = entries
                        .iter()
                        .map(|(p, v)| {
                            let r = OutputRecord::new(format!("[{p}]"), v);
                            flat_cell(&[("prime", &p.to_string())], &r)
                        })
                        .collect();
                    return Ok(to_json(&json!(doc)));
                }
                let mut rows = vec![header(&["prime", "comma", "fraction", "cents"])];
                rows.extend(entries.iter().map(|(p, v)| {
                    let r = OutputRecord::new(format!("[{p}]"), v);
                    vec![
                        p.to_string(),
                        r.notation.clone(),
                        r.fraction.clone(),
                        r.cents_text(),
                    ]
                }));
                Ok(if *as_csv { csv(&rows) } else { grid(&rows) })
            }
        }
    }
}

fn header(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// A record's fields preceded by some labelling fields, as one flat object.
fn flat_cell(labels: &[(&str, &String)], r: &OutputRecord) -> Value {
    let mut obj = serde_json::Map::new();
    for (k, v) in labels {
        obj.insert(k.to_string(), json!(v));
    }
    if let Value::Object(fields) = json!(r) {
        obj.extend(fields);
    }
    Value::Object(obj)
}

fn comma_record(c: &Comma, table: &CommaTable) -> OutputRecord {
    OutputRecord::new(c.to_string(), &table.value(c))
}

/// Melody text without its comment lines, and the parsed melody.
fn read_melody(path: &Path) -> Result<(String, Melody), Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let melody =
        Melody::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let body: Vec<&str> = text
        .lines()
        .filter(|l| !l.trim_start().starts_with(';'))
        .collect();
    Ok((body.join("\n"), melody))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let session = Session {
        table: CommaTable::new(),
        json: cli.json,
        cents_only: cli.cents_only,
        shorthand5: cli.shorthand5,
    };
    if let Err(e) = session.table.self_check() {
        eprintln!("jinote: {e}");
        return ExitCode::from(1);
    }
    match session.run(&cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("jinote: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
