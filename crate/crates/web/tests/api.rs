use ji_web::{combine_json, evaluate_json, table_json, transpose_json};
use serde_json::Value;

fn parse(s: Result<String, String>) -> Value {
    serde_json::from_str(&s.unwrap()).unwrap()
}

#[test]
fn evaluates_notations_and_fractions() {
    let v = parse(evaluate_json("Bb4[7]", false));
    assert_eq!(v["fraction"], "7/4");
    assert_eq!(v["cents"], 968.83);

    let v = parse(evaluate_json(" 5/3 ", true));
    assert_eq!(v["notation"], "A'4");
    let v = parse(evaluate_json("5/3", false));
    assert_eq!(v["notation"], "A4[5]");

    let err = evaluate_json("Eb#4", false).unwrap_err();
    assert!(err.contains("position 2"), "{err}");
    assert!(evaluate_json("0/3", false).is_err());
}

#[test]
fn multiplies_and_divides() {
    let v = parse(combine_json("F#5[5]", "Eb6[1/5]", "mul", false));
    assert_eq!(v["result"]["notation"], "A7");
    assert_eq!(v["result"]["fraction"], "27/2");
    assert_eq!(v["left"]["fraction"], "45/16");

    let v = parse(combine_json("A7", "Eb6[1/5]", "div", false));
    assert_eq!(v["result"]["notation"], "F#5[5]");
    assert!(combine_json("C4", "C4", "pow", false).is_err());
}

#[test]
fn transposes_melodies() {
    let v = parse(transpose_json("C4 Db.4 Eb.4 Ab.3", "A3[13]", false, true));
    let notes: Vec<&str> = v["notes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["notation"].as_str().unwrap())
        .collect();
    assert_eq!(notes, ["A3[13]", "Bb.3[13]", "C.4[13]", "F.3[13]"]);
    assert_eq!(v["factored"], "A3 Bb.3 C.4 F.3 [13]");

    let v = parse(transpose_json(
        "Bb5 C.6[17] Ebb.6[19]",
        "F#2[23]",
        false,
        true,
    ));
    assert_eq!(v["factored"], "E4 F#.4[17] Ab.4[19] [23]");
    let back = parse(transpose_json("E4[23]", "F#2[23]", true, false));
    assert_eq!(back["notes"][0]["notation"], "Bb5");

    let err = transpose_json("C4\nD4 Eb#4", "G4", false, false).unwrap_err();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn multiplication_table() {
    let v = parse(table_json("pitch"));
    assert_eq!(v["headers"][0], "C4");
    assert_eq!(v["cells"][6][6]["notation"], "A#5");
    assert_eq!(v["cells"][6][6]["fraction"], "59049/16384");
    assert!(table_json("random").is_err());
}
