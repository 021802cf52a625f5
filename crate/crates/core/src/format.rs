//! Locale-independent numeric formatting for CSV and report output.

/// Shortest decimal string that parses back to exactly `x`.
///
/// Plain positional notation in `[1e-4, 1e15)`, scientific notation outside
/// it so tiny values do not expand into hundreds of zeros.
pub fn float(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let a = x.abs();
    if (1e-4..1e15).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}
