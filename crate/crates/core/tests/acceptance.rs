//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use tfim_magic::entropy::{derivative_scan, ferro_m2_density, magic_m2, thermo_density, SystemSize};
use tfim_magic::model::{channel_amplitudes, ModelParams};
use tfim_magic::oracle::{
    channel_hamiltonian_check, free_fermion_energy, realspace_ground_state, realspace_m2, run_oracle,
};
use tfim_magic::spectrum::stats::{edge_mass, empirical_atoms, ks_distance};
use tfim_magic::spectrum::{
    default_tail_window, enumerate_spectrum, fit_exponential_tail, histogram_convolution,
    magic_gap, sample_spectrum, scaling_exponent, BinSpec, PauliHistogram, XHistogram,
    UNIT_TOLERANCE,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: String) -> Outcome {
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn p(n: usize, g: f64) -> ModelParams {
    ModelParams::new(n, g).unwrap()
}

fn ferro_constant() -> Outcome {
    let target = ferro_m2_density();
    let mut worst_finite: f64 = 0.0;
    for g in [0.2, 0.5, 0.8] {
        worst_finite = worst_finite.max((magic_m2(&p(2000, g)).per_site - target).abs());
    }
    let mut worst_thermo: f64 = 0.0;
    for i in 0..=90 {
        let g = 0.01 * i as f64;
        let t = thermo_density(g, 2.0).map_err(|e| e.to_string())?;
        worst_thermo = worst_thermo.max((t.per_site - target).abs());
    }
    ensure(
        worst_finite < 1e-3 && worst_thermo < 1e-8,
        format!("N=2000 max dev {worst_finite:.2e} (<1e-3), thermo max dev on [0,0.9] {worst_thermo:.2e} (<1e-8)"),
    )
}

fn derivative_jump() -> Outcome {
    let jump = 2.0 - 3f64.sqrt();
    let mut parts = Vec::new();
    let mut ok = true;
    for (label, size) in [("thermo", SystemSize::Thermodynamic), ("N=1e5", SystemSize::Finite(100_000))] {
        let r = derivative_scan(size, 1.0, 0.01).map_err(|e| e.to_string())?;
        ok &= (r.right_extrap - jump).abs() < 1e-2 && r.left_extrap.abs() < 1e-2;
        parts.push(format!("{label}: right {:.5} left {:.5}", r.right_extrap, r.left_extrap));
    }
    ensure(ok, format!("{} (target right {jump:.5}, left 0, tol 1e-2)", parts.join("; ")))
}

fn stabilizer_limit() -> Outcome {
    let coeff = |g: f64| magic_m2(&p(2000, g)).value * 4.0 * g * g / 2000.0;
    let c: Vec<f64> = [1e2, 1e3, 1e4].iter().map(|&g| coeff(g)).collect();
    let converging = (c[2] - 1.0).abs() <= (c[1] - 1.0).abs() && (c[1] - 1.0).abs() <= (c[0] - 1.0).abs();
    ensure(
        (0.99..=1.01).contains(&c[0]) && converging,
        format!("M2*4g^2/N at g=1e2,1e3,1e4: {:.6}, {:.6}, {:.6}", c[0], c[1], c[2]),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut worst_mag: f64 = 0.0;
    let mut worst_m2: f64 = 0.0;
    for n in [2, 4, 6, 8] {
        for g in [0.0, 0.5, 1.0, 1.3, 5.0] {
            let r = run_oracle(&p(n, g)).map_err(|e| e.to_string())?;
            if r.counts != r.expected_counts {
                return Err(format!("N={n} g={g}: counts {:?} vs {:?}", r.counts, r.expected_counts));
            }
            worst_mag = worst_mag.max(r.max_abs_deviation);
            worst_m2 = worst_m2.max((r.m2_bruteforce - r.m2_closed_form).abs());
        }
    }
    ensure(
        worst_mag <= 1e-12 && worst_m2 <= 1e-10,
        format!("20 cases; counts exact; max |mag dev| {worst_mag:.1e} (<=1e-12); max |M2 dev| {worst_m2:.1e} (<=1e-10)"),
    )
}

fn ground_state_validation() -> Outcome {
    let mut worst_channel: f64 = 0.0;
    let mut channels = 0;
    for n in [2, 8, 12, 64, 2000] {
        for g in [0.0, 0.5, 1.0, 1.3, 5.0] {
            for c in channel_amplitudes(&p(n, g)) {
                let chk = channel_hamiltonian_check(g, c.momentum, 1.0).map_err(|e| e.to_string())?;
                let dev = (chk.energy - chk.expected_energy)
                    .abs()
                    .max(chk.residual)
                    .max((chk.energy - chk.eigenvalues[0]).abs());
                worst_channel = worst_channel.max(dev);
                channels += 1;
            }
        }
    }
    let mut worst_ed: f64 = 0.0;
    for n in [8, 12] {
        for g in [0.5, 1.0, 2.0] {
            let gs = realspace_ground_state(&p(n, g)).map_err(|e| e.to_string())?;
            worst_ed = worst_ed.max((gs.energy - free_fermion_energy(&p(n, g))).abs());
        }
    }
    ensure(
        worst_channel < 1e-12 && worst_ed < 1e-10,
        format!("{channels} channel blocks, worst {worst_channel:.1e} (<1e-12); ED N=8,12 worst {worst_ed:.1e} (<1e-10)"),
    )
}

fn figure_one() -> Outcome {
    const SAMPLES: u64 = 1_000_000;
    const X_BINS: usize = 200;
    let xh = |g: f64| XHistogram::from_magnitudes(&sample_spectrum(&p(40, g), SAMPLES, 0).unwrap(), X_BINS);
    let ks = xh(0.4).ks_distance(&xh(1.0));
    let h2 = histogram_convolution(&p(40, 2.0), BinSpec::default_for(40)).map_err(|e| e.to_string())?;
    let x2 = h2.x_histogram(50);
    let maxima = x2.local_maxima();
    let centers = x2.centers();
    let near_zero = maxima.contains(&0);
    let upper: Vec<f64> = maxima.iter().map(|&i| centers[i]).filter(|&x| x >= 0.4).collect();
    ensure(
        ks < 0.01 && near_zero && !upper.is_empty(),
        format!("KS(g=0.4, g=1) on {X_BINS} x-bins = {ks:.5} (<0.01); g=2 maxima at x = {:?}",
            maxima.iter().map(|&i| format!("{:.2}", centers[i])).collect::<Vec<_>>()),
    )
}

fn tail_scaling() -> Outcome {
    let mut points = Vec::new();
    for n in [20, 40, 80] {
        let h = histogram_convolution(&p(n, 0.5), BinSpec::default_for(n)).map_err(|e| e.to_string())?;
        let fit = fit_exponential_tail(&h, default_tail_window(n)).map_err(|e| e.to_string())?;
        points.push((n, fit.slope));
    }
    let a = scaling_exponent(&points).map_err(|e| e.to_string())?;
    ensure(
        (1.1..=1.6).contains(&a),
        format!("slopes {:?}; exponent {a:.3} in [1.1, 1.6]",
            points.iter().map(|(n, s)| format!("N={n}: {s:.2}")).collect::<Vec<_>>()),
    )
}

fn magic_gap_vanishes() -> Outcome {
    let gaps: Vec<f64> = (3..=11).map(|e| magic_gap(&p(1 << e, 0.5))).collect();
    let decreasing = gaps.windows(2).all(|w| w[1] < w[0]);
    let g2000 = magic_gap(&p(2000, 0.5));
    let edge = magic_gap(&p(2, 0.0));
    ensure(
        decreasing && g2000 < 1e-4 && edge == 1.0,
        format!("N=8..2048 strictly decreasing: {decreasing}; gap(N=2000) = {g2000:.2e}; gap(N=2, g=0) = {edge}"),
    )
}

fn real_vs_momentum() -> Outcome {
    let real = |g: f64| realspace_m2(&realspace_ground_state(&p(8, g)).unwrap().state).unwrap();
    let (r1, m1) = (real(1.0), magic_m2(&p(8, 1.0)).per_site);
    let (r0, m0) = (real(0.0), magic_m2(&p(8, 0.0)).per_site);
    ensure(
        r1 > m1 && r0.abs() < 1e-12 && (m0 - ferro_m2_density()).abs() < 5e-3,
        format!("g=1: real {r1:.5} > momentum {m1:.5}; g=0: real {r0:.1e}, momentum {m0:.5}"),
    )
}

fn method_agreement() -> Outcome {
    const SAMPLES: u64 = 1_000_000;
    const COARSE: usize = 100;
    let bins = BinSpec::new(30.0, 1e-3).unwrap();
    let mut lines = Vec::new();
    let mut ok = true;
    for g in [0.5, 2.0] {
        let params = p(12, g);
        let exact = enumerate_spectrum(&params).map_err(|e| e.to_string())?;
        let samples = sample_spectrum(&params, SAMPLES, 0).map_err(|e| e.to_string())?;
        let he = PauliHistogram::from_magnitudes(12, exact.magnitudes(), bins).unwrap();
        let hc = histogram_convolution(&params, bins).unwrap();
        let hs = PauliHistogram::from_magnitudes(12, &samples, bins).unwrap();
        let (ce, cc, cs) = (he.coarsen(COARSE), hc.coarsen(COARSE), hs.coarsen(COARSE));

        // convolution displaces each atom by less than (N/2 + 1)δ
        let atoms: Vec<(f64, f64)> = exact
            .magnitudes()
            .iter()
            .filter(|&&x| x != 0.0 && (x - 1.0).abs() > UNIT_TOLERANCE)
            .map(|&x| (-x.ln(), 1.0 / exact.len() as f64))
            .collect();
        let reach = (params.n_channels() + 1) as f64 * bins.delta;
        let binning = edge_mass(&atoms, &cc.edges(), reach);
        // sampling: three standard deviations of |p̂ − p| summed over bins
        let mut probs: Vec<f64> = ce.weights().to_vec();
        probs.extend([ce.unit_weight(), ce.overflow(), ce.zero_weight()]);
        let statistical = 0.5 * 3.0 * probs.iter().map(|q| (q * (1.0 - q) / SAMPLES as f64).sqrt()).sum::<f64>();

        let tv_ec = ce.tv_distance(&cc).unwrap();
        let tv_es = ce.tv_distance(&cs).unwrap();
        let tv_cs = cc.tv_distance(&cs).unwrap();
        let exact_atoms = empirical_atoms(exact.magnitudes());
        let sample_atoms = empirical_atoms(&samples);
        let ks_ec = hc.ks_distance_to(&exact_atoms);
        let ks_es = ks_distance(&exact_atoms, &sample_atoms);
        let ks_cs = hc.ks_distance_to(&sample_atoms);
        ok &= tv_ec <= binning && tv_es <= statistical && tv_cs <= binning + statistical;
        ok &= ks_ec < 5e-3 && ks_es < 5e-3 && ks_cs < 5e-3;
        lines.push(format!(
            "g={g}: TV e/c {tv_ec:.4} (<= {binning:.4}), e/s {tv_es:.4} (<= {statistical:.4}), c/s {tv_cs:.4}; KS {ks_ec:.4}, {ks_es:.4}, {ks_cs:.4}"
        ));
    }
    ensure(ok, lines.join("; "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("ferro-phase constant", ferro_constant),
        ("derivative jump at g=1", derivative_jump),
        ("stabilizer limit 1/(4g^2)", stabilizer_limit),
        ("oracle equivalence", oracle_equivalence),
        ("ground-state validation", ground_state_validation),
        ("Pauli spectrum shape at N=40", figure_one),
        ("tail scaling exponent", tail_scaling),
        ("magic gap vanishes", magic_gap_vanishes),
        ("real vs momentum magic", real_vs_momentum),
        ("method agreement at N=12", method_agreement),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failures += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} [{:>2}] {name}: {detail} ({secs:.1}s)", i + 1);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
