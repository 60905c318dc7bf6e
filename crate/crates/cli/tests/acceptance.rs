//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Timing criteria run one after another in this process with a single
//! worker thread, so they do not compete with each other for cores.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use warmgray_cli::bench::time_method;
use warmgray_cli::codec::read_rgb;
use warmgray_cli::report::write_csv;
use warmgray_core::metrics::{aggregate_mean_escore, evaluate, MetricReport, PairSampleConfig};
use warmgray_core::{
    apply_local_lhe, decolor_image, decolor_pixel, lab_lightness, luma_weighted, reinstate_color,
    with_threads, DecolorParams, LocalHistogramGrid, Method, PixelKind, PlanarImage, RgbPixel,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: &[Criterion] = &[
        ("gray-axis fixpoint", gray_axis_fixpoint),
        ("positive homogeneity", homogeneity),
        ("pure-hue fixtures", pure_hue_fixtures),
        ("warm over Y", warm_over_y),
        ("metric oracle equivalence", metric_oracle_equivalence),
        ("metric boundary conventions", metric_boundary_conventions),
        ("mini-corpus E-score", mini_corpus_escore),
        ("benchmark relative to CIELAB L", bench_relative),
        (
            "per-pixel cost scale independence",
            bench_scale_independence,
        ),
        ("tone-map pipeline determinism", pipeline_determinism),
        ("green darkening regression", green_limitation),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let Outcome { pass, detail } = check();
        let tag = if pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {name}: {detail} ({:.2?})", start.elapsed());
        failed += usize::from(!pass);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_params(rng: &mut ChaCha8Rng) -> DecolorParams {
    loop {
        let (r, k) = (rng.random_range(0.5..1.0), rng.random_range(0.5..1.0));
        if let Ok(p) = DecolorParams::new(r, k) {
            return p;
        }
    }
}

fn random_pixel(rng: &mut ChaCha8Rng) -> RgbPixel {
    RgbPixel::new(
        rng.random_range(0.0..=1.0),
        rng.random_range(0.0..=1.0),
        rng.random_range(0.0..=1.0),
    )
}

fn gray_axis_fixpoint() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(1);
    let params: Vec<DecolorParams> = (0..100).map(|_| random_params(&mut rng)).collect();
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let v: f64 = rng.random_range(0.0..=1.0);
        for p in &params {
            worst = worst.max((decolor_pixel(RgbPixel::gray(v), p) - v).abs());
        }
    }
    let elapsed = start.elapsed();
    outcome(
        worst <= 1e-9 && elapsed < Duration::from_secs(1),
        format!("max |L(v,v,v) - v| = {worst:.2e} (tol 1e-9), {elapsed:.2?} (< 1 s)"),
    )
}

fn homogeneity() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(2);
    let params = DecolorParams::default();
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let p = random_pixel(&mut rng);
        let s: f64 = rng.random_range(0.0..=1.0);
        let err = (decolor_pixel(p.scaled(s), &params) - s * decolor_pixel(p, &params)).abs();
        worst = worst.max(err);
    }
    let elapsed = start.elapsed();
    outcome(
        worst <= 1e-7 && elapsed < Duration::from_secs(1),
        format!("max error {worst:.2e} (tol 1e-7), {elapsed:.2?} (< 1 s)"),
    )
}

fn pure_hue_fixtures() -> Outcome {
    let params = DecolorParams::default();
    // Hand evaluation with beta_r = 0.55, beta_k = 0.8:
    //   red:   ratio_r = 1, L_warm = sqrt(0.55), L_cool = 0 -> sqrt(0.8 * 0.55)
    //   blue:  L_warm = L_white = 1/sqrt(3), L_cool = L_white -> 1/sqrt(3)
    //   green: L_warm = 1/sqrt(3), L_cool = 0 -> sqrt(0.8) / sqrt(3)
    let oracle = [
        (
            "red",
            RgbPixel::new(1.0, 0.0, 0.0),
            (0.8f64 * 0.55).sqrt(),
            0.66332,
        ),
        (
            "blue",
            RgbPixel::new(0.0, 0.0, 1.0),
            1.0 / 3f64.sqrt(),
            0.57735,
        ),
        (
            "green",
            RgbPixel::new(0.0, 1.0, 0.0),
            (0.8f64 / 3.0).sqrt(),
            0.51640,
        ),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    let mut values = Vec::new();
    for (name, px, hand, quoted) in oracle {
        let l = decolor_pixel(px, &params);
        pass &= (l - hand).abs() <= 1e-5 && (l - quoted).abs() <= 1e-5;
        parts.push(format!("{name}={l:.5}"));
        values.push(l);
    }
    pass &= values[0] > values[1] && values[1] > values[2];
    outcome(
        pass,
        format!("{} (tol 1e-5, red > blue > green)", parts.join(" ")),
    )
}

fn warm_over_y() -> Outcome {
    let red = RgbPixel::new(1.0, 0.0, 0.0);
    let ours = decolor_pixel(red, &DecolorParams::default());
    let y = luma_weighted(red);
    outcome(ours > y, format!("L(red) = {ours:.5} > Y(red) = {y:.4}"))
}

fn metric_oracle_equivalence() -> Outcome {
    let params = DecolorParams::default();
    let mut exact = 0;
    for seed in 0..20 {
        let img = PlanarImage::random_rgb(8, 8, 100 + seed);
        let gray = decolor_image(&img, &params).unwrap();
        let all_pairs = 64 * 63 / 2;
        let sampled = evaluate(&img, &gray, &PairSampleConfig::sampled(all_pairs, seed)).unwrap();
        let brute = evaluate(&img, &gray, &PairSampleConfig::exhaustive()).unwrap();
        exact += usize::from(sampled == brute);
    }

    let mut worst = 0.0f64;
    for seed in 0..10 {
        let img = PlanarImage::random_rgb(32, 32, 200 + seed);
        let gray = decolor_image(&img, &params).unwrap();
        let sampled = evaluate(&img, &gray, &PairSampleConfig::sampled(50_000, seed)).unwrap();
        let brute = evaluate(&img, &gray, &PairSampleConfig::exhaustive()).unwrap();
        for (s, b) in sampled.per_tau.iter().zip(&brute.per_tau) {
            worst = worst
                .max((s.ccpr - b.ccpr).abs())
                .max((s.ccfr - b.ccfr).abs())
                .max((s.escore - b.escore).abs());
        }
    }
    outcome(
        exact == 20 && worst <= 0.02,
        format!("8x8 exact matches {exact}/20; 32x32 max |sampled - exhaustive| = {worst:.4} (tol 0.02)"),
    )
}

fn metric_boundary_conventions() -> Outcome {
    let mut rng = rng(3);
    let px: Vec<RgbPixel> = (0..24 * 24)
        .map(|_| RgbPixel::gray(f64::from(rng.random_range(0u8..=255)) / 255.0))
        .collect();
    let img = PlanarImage::from_pixels(24, 24, &px).unwrap();
    let lightness = Method::Lab.luminance(&img).unwrap();
    let report = evaluate(&img, &lightness, &PairSampleConfig::default()).unwrap();
    let ones = report.per_tau.iter().filter(|r| r.escore == 1.0).count();
    let taus_ok = report
        .per_tau
        .iter()
        .map(|r| r.tau)
        .eq((1..=15).map(f64::from));
    outcome(
        ones == 15 && taus_ok,
        format!("E-score = 1 at {ones}/15 thresholds (tau = 1..15)"),
    )
}

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/corpus")
}

fn mini_corpus_escore() -> Outcome {
    let mut paths: Vec<PathBuf> = fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "png"))
        .collect();
    paths.sort();
    let cfg = PairSampleConfig::default();
    let params = DecolorParams::default();
    let mut ours: Vec<(String, MetricReport)> = Vec::new();
    let mut constant = Vec::new();
    for path in &paths {
        let img = read_rgb(path).unwrap();
        let gray = decolor_image(&img, &params).unwrap();
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        ours.push((name, evaluate(&img, &gray, &cfg).unwrap()));
        let flat = PlanarImage::filled(img.width(), img.height(), PixelKind::Luminance, 0.5);
        constant.push(evaluate(&img, &flat, &cfg).unwrap());
    }
    let csv_path = Path::new(env!("CARGO_TARGET_TMPDIR")).join("mini_corpus_ours.csv");
    write_csv(fs::File::create(&csv_path).unwrap(), &ours).unwrap();

    let reports: Vec<MetricReport> = ours.iter().map(|(_, r)| r.clone()).collect();
    let mean = aggregate_mean_escore(&reports);
    let floor = aggregate_mean_escore(&constant);
    outcome(
        paths.len() == 10 && mean >= 0.90 && mean >= floor,
        format!(
            "{} images, mean E-score {mean:.4} (need >= 0.90), constant-image bound {floor:.4}; sweep CSV at {}",
            paths.len(),
            csv_path.display()
        ),
    )
}

fn per_pixel_ns(img: &PlanarImage, method: &Method, repeats: usize) -> f64 {
    with_threads(1, || time_method(img, method, repeats, 2.7).unwrap())
        .unwrap()
        .per_pixel_ns
}

fn bench_relative() -> Outcome {
    let start = Instant::now();
    let img = PlanarImage::random_rgb(800, 600, 42);
    let ours_m = Method::Ours(DecolorParams::default());
    let ours = per_pixel_ns(&img, &ours_m, 11);
    let lab = per_pixel_ns(&img, &Method::Lab, 11);
    let ratio = ours / lab;
    let elapsed = start.elapsed();
    outcome(
        ratio <= 1.0 && elapsed < Duration::from_secs(30),
        format!(
            "800x600: ours {ours:.2} ns/px, CIELAB L {lab:.2} ns/px, ratio {ratio:.3} (<= 1.0), {elapsed:.2?} (< 30 s)"
        ),
    )
}

fn bench_scale_independence() -> Outcome {
    let ours = Method::Ours(DecolorParams::default());
    let small = per_pixel_ns(&PlanarImage::random_rgb(800, 600, 42), &ours, 11);
    let large = per_pixel_ns(&PlanarImage::random_rgb(3008, 2008, 42), &ours, 5);
    let ratio = large / small;
    outcome(
        (0.5..=2.0).contains(&ratio),
        format!(
            "3008x2008 {large:.2} ns/px vs 800x600 {small:.2} ns/px, ratio {ratio:.3} (within 2x)"
        ),
    )
}

fn pipeline_determinism() -> Outcome {
    let img = PlanarImage::random_rgb(512, 512, 7);
    let run = |threads: usize| {
        with_threads(threads, || {
            let params = DecolorParams::default();
            let l_in = decolor_image(&img, &params).unwrap();
            let grid = LocalHistogramGrid::default_for(512, 512);
            let l_out = apply_local_lhe(&l_in, &grid).unwrap();
            reinstate_color(&img, &l_in, &l_out).unwrap()
        })
        .unwrap()
    };
    let one = run(1);
    let identical: Vec<bool> = [2, 8].iter().map(|&t| run(t) == one).collect();
    outcome(
        identical.iter().all(|&b| b),
        format!(
            "threads 2 identical: {}, threads 8 identical: {}",
            identical[0], identical[1]
        ),
    )
}

fn green_limitation() -> Outcome {
    let p = DecolorParams::default();
    let g = decolor_pixel(RgbPixel::new(0.0, 1.0, 0.0), &p);
    let b = decolor_pixel(RgbPixel::new(0.0, 0.0, 1.0), &p);
    let r = decolor_pixel(RgbPixel::new(1.0, 0.0, 0.0), &p);
    let lab_green = lab_lightness(RgbPixel::new(0.0, 1.0, 0.0));
    outcome(
        g < b && b < r,
        format!("green {g:.5} < blue {b:.5} < red {r:.5} (CIELAB L of green {lab_green:.3})"),
    )
}
