//! Distances between distributions of Pauli magnitudes.
//!
//! Distributions are weighted atoms `(x, w)` on `x ∈ [0, 1]`. Kolmogorov–
//! Smirnov distances are invariant under the monotone map `x ↦ −ln x`, so
//! they are computed directly in `x`.

/// Atoms from raw samples, each of weight `1/len`.
pub fn empirical_atoms(values: &[f64]) -> Vec<(f64, f64)> {
    let w = 1.0 / values.len() as f64;
    values.iter().map(|&x| (x, w)).collect()
}

/// `sup_x |F_a(x) − F_b(x)|` for two finite atomic distributions.
///
/// Both inputs are normalized internally.
pub fn ks_distance(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let sorted = |v: &[(f64, f64)]| {
        let mut v = v.to_vec();
        v.sort_by(|p, q| p.0.total_cmp(&q.0));
        let total: f64 = v.iter().map(|p| p.1).sum();
        (v, total)
    };
    let (a, ta) = sorted(a);
    let (b, tb) = sorted(b);
    let (mut i, mut j) = (0, 0);
    let (mut fa, mut fb) = (0.0, 0.0);
    let mut best: f64 = 0.0;
    while i < a.len() || j < b.len() {
        let x = match (a.get(i), b.get(j)) {
            (Some(p), Some(q)) => p.0.min(q.0),
            (Some(p), None) => p.0,
            (None, Some(q)) => q.0,
            (None, None) => unreachable!(),
        };
        while i < a.len() && a[i].0 == x {
            fa += a[i].1;
            i += 1;
        }
        while j < b.len() && b[j].0 == x {
            fb += b[j].1;
            j += 1;
        }
        best = best.max((fa / ta - fb / tb).abs());
    }
    best
}

/// Mass of the atoms lying within `reach` of any edge.
///
/// If every atom is displaced by less than `reach`, the total-variation
/// distance between the two binnings on `edges` is at most this mass.
pub fn edge_mass(atoms: &[(f64, f64)], edges: &[f64], reach: f64) -> f64 {
    let mut edges = edges.to_vec();
    edges.sort_by(f64::total_cmp);
    atoms
        .iter()
        .filter(|(pos, _)| {
            let i = edges.partition_point(|e| e < pos);
            let near_right = edges.get(i).is_some_and(|e| e - pos < reach);
            let near_left = i > 0 && pos - edges[i - 1] < reach;
            near_left || near_right
        })
        .map(|p| p.1)
        .sum()
}

/// Ordinary least squares `y = a + b x`; returns `(b, a, stderr(b))`.
pub fn linear_fit(x: &[f64], y: &[f64]) -> (f64, f64, f64) {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|v| (v - mx).powi(2)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse: f64 = x.iter().zip(y).map(|(a, b)| (b - intercept - slope * a).powi(2)).sum();
    let stderr = if x.len() > 2 { (sse / (n - 2.0) / sxx).sqrt() } else { f64::NAN };
    (slope, intercept, stderr)
}
