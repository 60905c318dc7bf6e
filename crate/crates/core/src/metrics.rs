//! Contrast-preservation metrics for decolorization.
//!
//! For a color image and its grayscale rendition, pixel pairs are compared on
//! two scales that share units: the CIE76 difference of their Lab colors and
//! the absolute difference of their gray values times 100.
//!
//! * CCPR: among pairs whose color difference reaches `tau`, the fraction
//!   whose gray difference also reaches `tau`.
//! * CCFR: among pairs whose gray difference reaches `tau`, one minus the
//!   fraction whose color difference stays below `tau`.
//! * E-score: harmonic mean of the two.
//!
//! Empty pair sets score 1. Pairs are either enumerated exhaustively or drawn
//! uniformly at random from a seeded generator; a sample budget that covers
//! every pair falls back to exhaustive enumeration.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colorspaces::{delta_e76, rgb_to_lab, LabColor};
use crate::error::{Error, Result};
use crate::raster::{PixelKind, PlanarImage};

/// Thresholds of the standard sweep.
pub const STANDARD_TAUS: [f64; 15] = [
    1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 11.0, 12.0, 13.0, 14.0, 15.0,
];

/// Gray values are compared on the 0..100 Lab lightness scale.
const GRAY_SCALE: f64 = 100.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairSampleConfig {
    pub pair_count: usize,
    pub seed: u64,
    pub exhaustive: bool,
}

impl PairSampleConfig {
    pub const DEFAULT_PAIRS: usize = 50_000;
    pub const DEFAULT_SEED: u64 = 42;

    pub fn sampled(pair_count: usize, seed: u64) -> Self {
        Self {
            pair_count,
            seed,
            exhaustive: false,
        }
    }

    pub fn exhaustive() -> Self {
        Self {
            exhaustive: true,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if !self.exhaustive && self.pair_count == 0 {
            Err(Error::InvalidPairCount)
        } else {
            Ok(())
        }
    }
}

impl Default for PairSampleConfig {
    fn default() -> Self {
        Self::sampled(Self::DEFAULT_PAIRS, Self::DEFAULT_SEED)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TauRecord {
    pub tau: f64,
    pub ccpr: f64,
    pub ccfr: f64,
    pub escore: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricReport {
    pub per_tau: Vec<TauRecord>,
    pub mean_escore: f64,
}

impl MetricReport {
    pub fn mean_ccpr(&self) -> f64 {
        mean(self.per_tau.iter().map(|r| r.ccpr))
    }

    pub fn mean_ccfr(&self) -> f64 {
        mean(self.per_tau.iter().map(|r| r.ccfr))
    }
}

fn mean(values: impl ExactSizeIterator<Item = f64>) -> f64 {
    let n = values.len();
    if n == 0 {
        return 0.0;
    }
    values.sum::<f64>() / n as f64
}

/// Dataset-level score: the average of per-image mean E-scores.
pub fn aggregate_mean_escore(reports: &[MetricReport]) -> f64 {
    mean(reports.iter().map(|r| r.mean_escore))
}

/// Harmonic mean of CCPR and CCFR; 0 when both are 0.
pub fn escore(ccpr_v: f64, ccfr_v: f64) -> f64 {
    if ccpr_v == ccfr_v {
        return ccpr_v;
    }
    let sum = ccpr_v + ccfr_v;
    if sum <= 0.0 {
        return 0.0;
    }
    let lo = ccpr_v.min(ccfr_v);
    let hi = ccpr_v.max(ccfr_v);
    (2.0 * ccpr_v * ccfr_v / sum).clamp(lo, hi)
}

pub fn ccpr(
    color: &PlanarImage,
    gray: &PlanarImage,
    tau: f64,
    cfg: &PairSampleConfig,
) -> Result<f64> {
    check_tau(tau)?;
    let counts = count_pairs(color, gray, &[tau], cfg)?;
    Ok(counts[0].ccpr())
}

pub fn ccfr(
    color: &PlanarImage,
    gray: &PlanarImage,
    tau: f64,
    cfg: &PairSampleConfig,
) -> Result<f64> {
    check_tau(tau)?;
    let counts = count_pairs(color, gray, &[tau], cfg)?;
    Ok(counts[0].ccfr())
}

/// Runs the standard `tau = 1..=15` sweep over one shared pair set.
pub fn evaluate(
    color: &PlanarImage,
    gray: &PlanarImage,
    cfg: &PairSampleConfig,
) -> Result<MetricReport> {
    evaluate_taus(color, gray, &STANDARD_TAUS, cfg)
}

pub fn evaluate_taus(
    color: &PlanarImage,
    gray: &PlanarImage,
    taus: &[f64],
    cfg: &PairSampleConfig,
) -> Result<MetricReport> {
    for &tau in taus {
        check_tau(tau)?;
    }
    let counts = count_pairs(color, gray, taus, cfg)?;
    let per_tau: Vec<TauRecord> = taus
        .iter()
        .zip(&counts)
        .map(|(&tau, c)| {
            let (ccpr, ccfr) = (c.ccpr(), c.ccfr());
            TauRecord {
                tau,
                ccpr,
                ccfr,
                escore: escore(ccpr, ccfr),
            }
        })
        .collect();
    let mean_escore = mean(per_tau.iter().map(|r| r.escore));
    Ok(MetricReport {
        per_tau,
        mean_escore,
    })
}

fn check_tau(tau: f64) -> Result<()> {
    if tau > 0.0 && tau.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidTau(tau))
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct TauCounts {
    /// Pairs whose color difference reaches tau.
    color_contrast: u64,
    /// ... of which the gray difference also reaches tau.
    preserved: u64,
    /// Pairs whose gray difference reaches tau.
    gray_contrast: u64,
    /// ... of which the color difference stays below tau.
    fabricated: u64,
}

impl TauCounts {
    fn ccpr(&self) -> f64 {
        if self.color_contrast == 0 {
            1.0
        } else {
            self.preserved as f64 / self.color_contrast as f64
        }
    }

    fn ccfr(&self) -> f64 {
        if self.gray_contrast == 0 {
            1.0
        } else {
            1.0 - self.fabricated as f64 / self.gray_contrast as f64
        }
    }
}

fn count_pairs(
    color: &PlanarImage,
    gray: &PlanarImage,
    taus: &[f64],
    cfg: &PairSampleConfig,
) -> Result<Vec<TauCounts>> {
    cfg.validate()?;
    color.expect_kind(PixelKind::Rgb)?;
    gray.expect_kind(PixelKind::Luminance)?;
    color.expect_same_dims(gray)?;

    let labs: Vec<LabColor> = color.pixels().map(rgb_to_lab).collect();
    let grays: Vec<f64> = gray.data().iter().map(|g| g * GRAY_SCALE).collect();
    let mut counts = vec![TauCounts::default(); taus.len()];
    let mut tally = |i: usize, j: usize| {
        let de = delta_e76(labs[i], labs[j]);
        let dg = (grays[i] - grays[j]).abs();
        for (c, &tau) in counts.iter_mut().zip(taus) {
            let color_hit = de >= tau;
            let gray_hit = dg >= tau;
            if color_hit {
                c.color_contrast += 1;
                c.preserved += u64::from(gray_hit);
            }
            if gray_hit {
                c.gray_contrast += 1;
                c.fabricated += u64::from(!color_hit);
            }
        }
    };

    let n = labs.len();
    let total_pairs = n.saturating_sub(1) as u128 * n as u128 / 2;
    if cfg.exhaustive || cfg.pair_count as u128 >= total_pairs {
        for i in 0..n {
            for j in i + 1..n {
                tally(i, j);
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for _ in 0..cfg.pair_count {
            let i = rng.random_range(0..n);
            let mut j = rng.random_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            tally(i, j);
        }
    }
    Ok(counts)
}
