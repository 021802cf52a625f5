//! `--g` and `--renyi` value lists.

/// Largest number of points a `min:max:step` grid may expand to.
const MAX_POINTS: usize = 10_000_000;

/// A single number or an inclusive `min:max:step` grid.
///
/// Point `i` is `min + i·step`, kept while it lies less than half a step
/// beyond `max`.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |s: &str| -> Result<f64, String> {
        let v: f64 = s.trim().parse().map_err(|_| format!("not a number: {s:?} in {spec:?}"))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("non-finite value in {spec:?}"))
        }
    };
    match parts.as_slice() {
        [v] => Ok(vec![num(v)?]),
        [lo, hi, step] => {
            let (lo, hi, step) = (num(lo)?, num(hi)?, num(step)?);
            if step <= 0.0 {
                return Err(format!("grid step must be positive, got {step}"));
            }
            if hi < lo {
                return Err(format!("grid maximum {hi} is below minimum {lo}"));
            }
            let count = ((hi - lo) / step + 0.5).ceil();
            if count > MAX_POINTS as f64 {
                return Err(format!("grid {spec:?} has more than {MAX_POINTS} points"));
            }
            Ok((0..count as usize).map(|i| lo + i as f64 * step).collect())
        }
        _ => Err(format!("expected a number or min:max:step, got {spec:?}")),
    }
}

/// Comma-separated list of numbers.
pub fn parse_list(spec: &str) -> Result<Vec<f64>, String> {
    let out: Vec<f64> = spec
        .split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|_| format!("not a number: {s:?}")))
        .collect::<Result<_, _>>()?;
    if out.is_empty() {
        return Err("empty list".into());
    }
    Ok(out)
}

/// Inclusive `min:max` range of system sizes, doubling from `min`.
pub fn parse_doubling(spec: &str) -> Result<Vec<usize>, String> {
    let (lo, hi) = spec.split_once(':').ok_or_else(|| format!("expected min:max, got {spec:?}"))?;
    let lo: usize = lo.trim().parse().map_err(|_| format!("not a size: {lo:?}"))?;
    let hi: usize = hi.trim().parse().map_err(|_| format!("not a size: {hi:?}"))?;
    if lo == 0 || hi < lo {
        return Err(format!("invalid size range {spec:?}"));
    }
    Ok(std::iter::successors(Some(lo), |&n| n.checked_mul(2)).take_while(|&n| n <= hi).collect())
}
