//! Per-pixel timing of luminance kernels.
//!
//! Each method runs end to end on an in-memory image (no decode or encode).
//! The median wall time over the repeats is divided by the pixel count and
//! scaled to a 2.7 GHz reference clock:
//! `normalized_us = per_pixel_ns * (cpu_ghz / 2.7) / 1000`.

use std::fmt::Write as _;
use std::hint::black_box;
use std::time::Instant;

use warmgray_core::{Method, PixelKind, PlanarImage};

use crate::error::{CliError, Result};

pub const REFERENCE_GHZ: f64 = 2.7;
pub const MIN_REPEATS: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchResult {
    pub method: String,
    pub width: usize,
    pub height: usize,
    /// Median over repeats.
    pub wall_ns: f64,
    pub per_pixel_ns: f64,
    pub normalized_us: f64,
}

impl BenchResult {
    fn from_samples(
        method: &Method,
        width: usize,
        height: usize,
        samples: &mut [f64],
        cpu_ghz: f64,
    ) -> Self {
        let wall_ns = median(samples).max(1.0);
        let per_pixel_ns = wall_ns / (width * height) as f64;
        Self {
            method: method.name().to_owned(),
            width,
            height,
            wall_ns,
            per_pixel_ns,
            normalized_us: per_pixel_ns * (cpu_ghz / REFERENCE_GHZ) / 1000.0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub width: usize,
    pub height: usize,
    pub methods: Vec<Method>,
    pub repeats: usize,
    pub cpu_ghz: f64,
    pub seed: u64,
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.width == 0 || self.height == 0 {
            return Err(CliError::Usage(
                "bench dimensions must be at least 1x1".into(),
            ));
        }
        if self.repeats < MIN_REPEATS {
            return Err(CliError::Usage(format!(
                "repeats must be at least {MIN_REPEATS}, got {}",
                self.repeats
            )));
        }
        if !(self.cpu_ghz > 0.0 && self.cpu_ghz.is_finite()) {
            return Err(CliError::Usage(format!(
                "cpu-ghz must be positive, got {}",
                self.cpu_ghz
            )));
        }
        if self.methods.is_empty() {
            return Err(CliError::Usage("no methods selected".into()));
        }
        Ok(())
    }
}

pub fn median(samples: &mut [f64]) -> f64 {
    samples.sort_by(f64::total_cmp);
    let n = samples.len();
    match n {
        0 => 0.0,
        _ if n % 2 == 1 => samples[n / 2],
        _ => 0.5 * (samples[n / 2 - 1] + samples[n / 2]),
    }
}

/// Times one method on `img`.
///
/// The output buffer is allocated once and reused, so repeats measure the
/// conversion rather than page faults on fresh allocations. One untimed
/// warm-up run precedes the repeats.
pub fn time_method(
    img: &PlanarImage,
    method: &Method,
    repeats: usize,
    cpu_ghz: f64,
) -> Result<BenchResult> {
    let mut out = PlanarImage::filled(img.width(), img.height(), PixelKind::Luminance, 0.0);
    method.luminance_into(black_box(img), &mut out)?;
    let mut samples = Vec::with_capacity(repeats);
    for _ in 0..repeats {
        let start = Instant::now();
        method.luminance_into(black_box(img), black_box(&mut out))?;
        samples.push(start.elapsed().as_nanos() as f64);
    }
    black_box(&out);
    Ok(BenchResult::from_samples(
        method,
        img.width(),
        img.height(),
        &mut samples,
        cpu_ghz,
    ))
}

/// Synthesizes the seeded random image and times every method on it.
pub fn run(cfg: &BenchConfig) -> Result<Vec<BenchResult>> {
    cfg.validate()?;
    let img = PlanarImage::random_rgb(cfg.width, cfg.height, cfg.seed);
    cfg.methods
        .iter()
        .map(|m| time_method(&img, m, cfg.repeats, cfg.cpu_ghz))
        .collect()
}

pub fn format_tsv(results: &[BenchResult]) -> String {
    let mut s = String::from("method\twidth\theight\twall_ns\tper_pixel_ns\tnormalized_us\n");
    for r in results {
        let _ = writeln!(
            s,
            "{}\t{}\t{}\t{:.0}\t{:.4}\t{:.6}",
            r.method, r.width, r.height, r.wall_ns, r.per_pixel_ns, r.normalized_us
        );
    }
    s
}
