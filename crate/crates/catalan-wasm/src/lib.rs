//! Browser bindings: a thin wasm layer over the core crate driving the
//! static demo page in `www/`. All real logic lives in `catalan-core`; this
//! crate only parses strings from the page and renders strings back, so it
//! compiles and tests on the host as well.

use num_traits::Zero;
use wasm_bindgen::prelude::*;

use catalan_core::bijections::{phi_forward, PhiInput};
use catalan_core::exact::{Int, Rat};
use catalan_core::identities::{self, VerifyOptions};
use catalan_core::paths::{enumerate_motzkin, r_visible_up_steps, LatticePath};
use catalan_core::render::{render_table, Format};
use catalan_core::transforms::{AnyTable, DerivedKind};
use catalan_core::triangles::Triangle;

// The page runs on one thread with no progress reporting, so every entry
// point clamps its arguments to sizes that return promptly.
const MAX_ROWS: u32 = 64;
const MAX_BOX: u32 = 12;
const MAX_PHI: u32 = 3;

fn parse_rat(flag: &str, text: &str) -> Result<Rat, String> {
    let err = || format!("{flag}: expected an integer or p/q fraction, got {text:?}");
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: Int = num.trim().parse().map_err(|_| err())?;
    let den: Int = den.trim().parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(format!("{flag}: zero denominator in {text:?}"));
    }
    Ok(Rat::new(num, den))
}

fn parse_format(text: &str) -> Result<Format, String> {
    match text {
        "ascii" => Ok(Format::Ascii),
        "csv" => Ok(Format::Csv),
        "json" => Ok(Format::Json),
        other => Err(format!("unknown format {other:?}, expected ascii, csv or json")),
    }
}

pub fn table_text(letter: &str, rows: u32, format: &str, x: &str, y: &str) -> Result<String, String> {
    if rows > MAX_ROWS {
        return Err(format!("at most {MAX_ROWS} rows in the browser demo"));
    }
    let format = parse_format(format)?;
    let table = match letter {
        "C" => AnyTable::Base(Triangle::Ballot),
        "B" => AnyTable::Base(Triangle::Shapiro),
        "A" => AnyTable::Base(Triangle::Admissible),
        "X" => AnyTable::Derived(DerivedKind::X),
        "Y" => AnyTable::Derived(DerivedKind::Y),
        "Z" => AnyTable::Derived(DerivedKind::Z),
        "W" => AnyTable::Derived(DerivedKind::W),
        "M" => AnyTable::Base(Triangle::motzkin(parse_rat("x", x)?, parse_rat("y", y)?)),
        other => return Err(format!("unknown triangle {other:?}")),
    };
    if letter != "M" && (!x.is_empty() || !y.is_empty()) {
        return Err("x and y only apply to triangle M".into());
    }
    Ok(render_table(&table, rows as i64, format))
}

pub fn identity_catalog() -> String {
    let entries: Vec<serde_json::Value> = identities::registry()
        .iter()
        .map(|d| serde_json::json!({ "id": d.id, "summary": d.summary }))
        .collect();
    serde_json::to_string_pretty(&entries).expect("catalog serializes")
}

pub fn verify_text(id: &str, n_max: u32, m_max: u32) -> Result<String, String> {
    if n_max > MAX_BOX || m_max > MAX_BOX {
        return Err(format!("boxes are capped at {MAX_BOX} in the browser demo"));
    }
    let opts = VerifyOptions {
        n_max: n_max as i64,
        m_max: m_max as i64,
        p_min: -3,
        p_max: 3,
        r_min: -3,
        r_max: 3,
        grid_radius: 2,
        ..VerifyOptions::default()
    };
    let report = identities::verify(id, &opts).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string_pretty(&report).expect("report serializes"))
}

fn show_path(p: &LatticePath) -> String {
    if p.is_empty() {
        "-".into()
    } else {
        p.to_string()
    }
}

pub fn phi_text(n: u32, m: u32, r: u32) -> Result<String, String> {
    if n > MAX_PHI || m > MAX_PHI || r > MAX_PHI {
        return Err(format!("phi sizes are capped at {MAX_PHI} in the browser demo"));
    }
    let (n, m, r) = (n as i64, m as i64, r as i64);
    let mut lines = Vec::new();
    let mut excluded = 0u64;
    let mut push = |input: PhiInput| -> Result<(), String> {
        let target = phi_forward(&input, n, m, r).map_err(|e| e.to_string())?;
        let (side, p, q) = match &input {
            PhiInput::LiftedFirst { p, q } => ("first-lifted ", p, q),
            PhiInput::LiftedSecond { p, q } => ("second-lifted", p, q),
        };
        lines.push(format!("{side} ({}, {}) -> {}", show_path(p), show_path(q), show_path(&target)));
        Ok(())
    };
    for k in 0.. {
        if k + 1 > n + r || k > m {
            break;
        }
        for p in enumerate_motzkin(n + r, k + 1) {
            for q in enumerate_motzkin(m, k) {
                push(PhiInput::LiftedFirst { p: p.clone(), q })?;
            }
        }
    }
    for k in 0.. {
        if k > n || k + 1 > m + r {
            break;
        }
        for p in enumerate_motzkin(n, k) {
            for q in enumerate_motzkin(m + r, k + 1) {
                if (*r_visible_up_steps(&q).last().expect("ends above the axis") as i64) >= r {
                    push(PhiInput::LiftedSecond { p: p.clone(), q })?;
                } else {
                    excluded += 1;
                }
            }
        }
    }
    let targets = enumerate_motzkin(n + m + r, 1).len();
    let mut out = lines.join("\n");
    if !out.is_empty() {
        out.push('\n');
    }
    out.push_str(&format!(
        "{} pairs <-> {targets} target paths, {excluded} excluded, at (n, m, r) = ({n}, {m}, {r})",
        lines.len()
    ));
    Ok(out)
}

#[wasm_bindgen]
pub fn render_triangle(letter: &str, rows: u32, format: &str, x: &str, y: &str) -> Result<String, JsValue> {
    table_text(letter, rows, format, x, y).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn list_identities() -> String {
    identity_catalog()
}

#[wasm_bindgen]
pub fn verify_identity(id: &str, n_max: u32, m_max: u32) -> Result<String, JsValue> {
    verify_text(id, n_max, m_max).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn phi_pairing(n: u32, m: u32, r: u32) -> Result<String, JsValue> {
    phi_text(n, m, r).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_render_for_every_letter() {
        for letter in ["C", "B", "A", "X", "Y", "Z", "W"] {
            let text = table_text(letter, 5, "ascii", "", "").unwrap();
            assert!(text.starts_with("n\\k"), "{letter} table missing header:\n{text}");
        }
        let weighted = table_text("M", 5, "ascii", "1", "2").unwrap();
        let plain = table_text("A", 5, "ascii", "", "").unwrap();
        assert_eq!(weighted, plain);
    }

    #[test]
    fn table_arguments_are_validated() {
        assert!(table_text("Q", 3, "ascii", "", "").is_err());
        assert!(table_text("C", 3, "ascii", "1", "").is_err());
        assert!(table_text("M", 3, "ascii", "1", "").is_err());
        assert!(table_text("M", 3, "ascii", "1", "2/0").is_err());
        assert!(table_text("C", 3, "html", "", "").is_err());
        assert!(table_text("C", MAX_ROWS + 1, "ascii", "", "").is_err());
    }

    #[test]
    fn catalog_lists_every_identity() {
        let parsed: serde_json::Value = serde_json::from_str(&identity_catalog()).unwrap();
        assert_eq!(parsed.as_array().unwrap().len(), 28);
        assert_eq!(parsed[0]["id"], "row_sum_B");
    }

    #[test]
    fn verification_runs_in_the_capped_box() {
        let text = verify_text("shapiro_convolution", 10, 10).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed["pass"], true);
        assert_eq!(parsed["cases"], 121);
        assert!(verify_text("nope", 5, 5).is_err());
        assert!(verify_text("eplett", MAX_BOX + 1, 5).is_err());
    }

    #[test]
    fn phi_listing_matches_the_target_count() {
        let text = phi_text(1, 1, 1).unwrap();
        assert!(text.contains("5 pairs <-> 5 target paths, 1 excluded"), "{text}");
        assert_eq!(text.lines().count(), 6);
        assert!(phi_text(MAX_PHI + 1, 0, 0).is_err());
    }
}
