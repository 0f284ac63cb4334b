//! Serialized twisting tables and reports compared byte for byte with the
//! files under `tests/golden`. Set `ENBAR_BLESS=1` to rewrite them.

use std::path::PathBuf;

use enbar::barcx::build_gamma;
use enbar::evalhom::{bar_eval_report, bar_module_report, en_report, AlgebraDatum, OperadChoice};
use enbar::exactlin::Ring;
use enbar::lifting::{lift_level, restrict_to_en};

fn golden(name: &str, text: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var("ENBAR_BLESS").is_ok_and(|v| v == "1") {
        std::fs::write(&path, text).unwrap();
    }
    let stored = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(stored, text, "{name} changed");
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

#[test]
fn commutative_tables() {
    golden("gamma_n1_r3.json", &pretty(&build_gamma(1, 3, Ring::Integers).to_json()));
    golden("gamma_n2_r3.json", &pretty(&build_gamma(2, 3, Ring::Integers).to_json()));
}

#[test]
fn lifted_tables() {
    golden("alpha_n1_r3.json", &pretty(&lift_level(1, 3, Ring::Integers).to_json()));
    let en = restrict_to_en(lift_level(2, 3, Ring::Integers), 2).unwrap();
    golden("alpha_e2_n2_r3.json", &pretty(&en.to_json()));
}

#[test]
fn homology_reports() {
    let z = Ring::Integers;
    golden("bar_module_e2_n2.json", &(bar_module_report(2, &[1, 2, 3], OperadChoice::En, z).unwrap().to_json() + "\n"));
    golden("en_operad_n2.json", &(en_report(2, &[1, 2, 3], z).unwrap().to_json() + "\n"));
    golden("bar_eval_trivial_n2.csv", &bar_eval_report(2, AlgebraDatum::Trivial, 4, z).unwrap().to_csv());
}

#[test]
fn golden_arity_two_values() {
    // the level-1 table at arity 2 can be checked by hand: d(sa ⊗ sb) =
    // (-1)^|sa| s(ab) with |sa| = 1, so (1)(2) goes to -(12)
    let text = std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/gamma_n1_r3.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let row = v["table"].as_array().unwrap().iter().find(|r| r["generator"] == "(1)(2)").unwrap();
    assert_eq!(row["degree"], 2);
    assert_eq!(row["terms"].as_array().unwrap().len(), 1);
    assert_eq!(row["terms"][0]["coeff"], -1);
    assert_eq!(row["terms"][0]["term"], "(12)");
}
