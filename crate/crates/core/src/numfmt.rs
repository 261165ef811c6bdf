//! Deterministic number formatting for CSV and report output.
//!
//! Every float is rendered with 15 significant digits in scientific
//! notation, with `.` as the decimal separator, so identical inputs always
//! produce byte-identical text.

/// Formats a float with 15 significant digits.
pub fn float(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    format!("{:.14e}", x)
}

/// Formats a bool as `true`/`false`.
pub fn boolean(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}
