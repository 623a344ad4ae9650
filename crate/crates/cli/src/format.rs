use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde_json::Value;

pub use ruukin::algebra::fmt_exact as exact;
use ruukin::model::Design;

/// Shortest representation that reads back to the same `f64` (at most 17
/// significant digits); scientific notation outside `[1e-5, 1e16)`.
pub fn num(x: f64) -> String {
    let x = clean(x);
    let a = x.abs();
    if x == 0.0 || (1e-5..1e16).contains(&a) || !x.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// Maps `-0.0` to `0.0`.
pub fn clean(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

pub fn csv_row(fields: &[String]) -> String {
    let mut s = fields.join(",");
    s.push('\n');
    s
}

fn design_fields(design: &Design) -> [(&'static str, String); 4] {
    [
        ("a1", exact(design.a1())),
        ("a3", exact(design.a3())),
        ("r0", exact(design.r0())),
        ("r1", exact(design.r1())),
    ]
}

pub fn header(design: &Design, what: &str) -> String {
    let label: Vec<String> = design_fields(design)
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    let mut s = String::new();
    let _ = writeln!(s, "# design={}; {what}", label.join(" "));
    s
}

pub fn design_json(design: &Design) -> Value {
    Value::Object(
        design_fields(design)
            .into_iter()
            .map(|(k, v)| (k.to_string(), Value::String(v)))
            .collect(),
    )
}

pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Writes `text` to `out` or stdout.
pub fn emit(out: Option<&Path>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}
