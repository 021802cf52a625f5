use crate::model::ModelParams;

use super::table::channel_tables;

/// `1 − max |⟨Σ⟩|` over strings whose magnitude is not one.
///
/// Every channel offers a unit magnitude, so the largest non-unit product
/// keeps all channels at one except a single channel at its largest non-unit
/// magnitude. Zero magnitudes take part as candidates; when they are the only
/// candidates the gap is one.
pub fn magic_gap(params: &ModelParams) -> f64 {
    let best = channel_tables(params)
        .iter()
        .flat_map(|t| t.magnitudes[1..].iter().copied())
        .filter(|&m| m != 1.0)
        .fold(0.0, f64::max);
    1.0 - best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::{enumerate_spectrum, is_unit};

    #[test]
    fn bell_channel_has_unit_gap() {
        assert_eq!(magic_gap(&ModelParams::new(2, 0.0).unwrap()), 1.0);
    }

    #[test]
    fn agrees_with_enumeration() {
        for n in [2, 4, 6, 8, 10] {
            for g in [0.0, 0.4, 1.0, 1.5, 3.0] {
                let p = ModelParams::new(n, g).unwrap();
                let brute = enumerate_spectrum(&p)
                    .unwrap()
                    .magnitudes()
                    .iter()
                    .copied()
                    .filter(|&x| !is_unit(x))
                    .fold(0.0, f64::max);
                assert!((magic_gap(&p) - (1.0 - brute)).abs() < 1e-15, "N={n} g={g}");
            }
        }
    }

    #[test]
    fn gap_closes_with_size() {
        let mut prev = f64::INFINITY;
        let mut n = 8;
        while n <= 2048 {
            let gap = magic_gap(&ModelParams::new(n, 0.5).unwrap());
            assert!(gap < prev, "N={n}");
            prev = gap;
            n *= 2;
        }
        assert!(magic_gap(&ModelParams::new(2000, 0.5).unwrap()) < 1e-4);
    }
}
