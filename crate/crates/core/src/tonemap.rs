//! Tone mapping on a luminance channel.
//!
//! Two operators are provided:
//!
//! * a global centered sigmoid, renormalized so `0 -> 0`, `midpoint -> 0.5`
//!   and `1 -> 1`;
//! * a smoothed local histogram equalization: every tile gets a tone curve
//!   from its cumulative histogram, and each pixel is mapped through the
//!   bilinear blend of the four nearest tile curves. Per-pixel cost is four
//!   curve lookups regardless of image or tile size.
//!
//! [`reinstate_color`] puts color back by scaling each RGB channel with the
//! ratio of output to input luminance.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::raster::{clamp_unit, PixelKind, PlanarImage};

/// Guard against division by near-zero input luminance.
pub const REINSTATE_EPSILON: f64 = 1e-6;

/// Logistic tone curve centered on `midpoint`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmoidCurve {
    midpoint: f64,
    slope: f64,
    lo: f64,
    mid: f64,
    hi: f64,
}

impl SigmoidCurve {
    pub const DEFAULT_MIDPOINT: f64 = 0.5;
    pub const DEFAULT_SLOPE: f64 = 6.0;

    pub fn new(midpoint: f64, slope: f64) -> Result<Self> {
        if !(slope > 0.0 && slope.is_finite()) {
            return Err(Error::InvalidSlope(slope));
        }
        if !(midpoint > 0.0 && midpoint < 1.0) {
            return Err(Error::InvalidMidpoint(midpoint));
        }
        let raw = |x: f64| (0.5 * slope * (x - midpoint)).tanh();
        Ok(Self {
            midpoint,
            slope,
            lo: raw(0.0),
            mid: raw(midpoint),
            hi: raw(1.0),
        })
    }

    pub fn midpoint(&self) -> f64 {
        self.midpoint
    }

    pub fn slope(&self) -> f64 {
        self.slope
    }

    /// Maps one luminance value. Strictly increasing on `[0, 1]`.
    pub fn map(&self, v: f64) -> f64 {
        // tanh(k(x - m)/2) is the logistic curve up to an affine map; each
        // half is stretched so the curve passes through (m, 0.5).
        let t = (0.5 * self.slope * (v - self.midpoint)).tanh();
        let out = if v < self.midpoint {
            0.5 * (t - self.lo) / (self.mid - self.lo)
        } else {
            0.5 + 0.5 * (t - self.mid) / (self.hi - self.mid)
        };
        clamp_unit(out)
    }
}

impl Default for SigmoidCurve {
    fn default() -> Self {
        Self::new(Self::DEFAULT_MIDPOINT, Self::DEFAULT_SLOPE).expect("valid defaults")
    }
}

pub fn apply_sigmoid(img: &PlanarImage, curve: &SigmoidCurve) -> Result<PlanarImage> {
    img.map_luminance(|v| curve.map(v))
}

/// Tile layout and blending for [`apply_local_lhe`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalHistogramGrid {
    pub tile_w: usize,
    pub tile_h: usize,
    pub bins: usize,
    pub strength: f64,
}

impl LocalHistogramGrid {
    pub const DEFAULT_TILES: usize = 8;
    pub const DEFAULT_BINS: usize = 256;
    pub const DEFAULT_STRENGTH: f64 = 0.7;

    pub fn new(tile_w: usize, tile_h: usize, bins: usize, strength: f64) -> Result<Self> {
        if tile_w == 0 || tile_h == 0 {
            return Err(Error::InvalidTile(tile_w, tile_h));
        }
        if bins < 2 {
            return Err(Error::InvalidBins(bins));
        }
        if !(0.0..=1.0).contains(&strength) {
            return Err(Error::InvalidStrength(strength));
        }
        Ok(Self {
            tile_w,
            tile_h,
            bins,
            strength,
        })
    }

    /// Splits a `width x height` image into `tiles_x x tiles_y` tiles.
    pub fn with_tile_count(
        width: usize,
        height: usize,
        tiles_x: usize,
        tiles_y: usize,
        bins: usize,
        strength: f64,
    ) -> Result<Self> {
        if tiles_x == 0 || tiles_y == 0 {
            return Err(Error::InvalidTile(tiles_x, tiles_y));
        }
        Self::new(
            width.div_ceil(tiles_x).max(1),
            height.div_ceil(tiles_y).max(1),
            bins,
            strength,
        )
    }

    /// 8x8 tiles, 256 bins, strength 0.7.
    pub fn default_for(width: usize, height: usize) -> Self {
        Self::with_tile_count(
            width,
            height,
            Self::DEFAULT_TILES,
            Self::DEFAULT_TILES,
            Self::DEFAULT_BINS,
            Self::DEFAULT_STRENGTH,
        )
        .expect("valid defaults")
    }

    fn validate(&self) -> Result<()> {
        Self::new(self.tile_w, self.tile_h, self.bins, self.strength).map(|_| ())
    }
}

/// Piecewise-linear equalization curve of one tile.
///
/// `knots[k]` is the fraction of tile pixels below bin edge `k / bins`. A
/// tile whose pixels all fall into one bin has no spread to equalize and maps
/// through the identity.
#[derive(Debug, Clone)]
struct TileCurve {
    knots: Option<Vec<f64>>,
}

impl TileCurve {
    fn from_histogram(hist: &[u64]) -> Self {
        let occupied = hist.iter().filter(|&&c| c > 0).count();
        if occupied <= 1 {
            return Self { knots: None };
        }
        let total: u64 = hist.iter().sum();
        let mut knots = Vec::with_capacity(hist.len() + 1);
        let mut acc = 0u64;
        knots.push(0.0);
        for &c in hist {
            acc += c;
            knots.push(acc as f64 / total as f64);
        }
        Self { knots: Some(knots) }
    }

    #[inline]
    fn eval(&self, v: f64) -> f64 {
        match &self.knots {
            None => v,
            Some(knots) => {
                let bins = knots.len() - 1;
                let x = v * bins as f64;
                let k = (x as usize).min(bins - 1);
                let t = x - k as f64;
                knots[k] + t * (knots[k + 1] - knots[k])
            }
        }
    }
}

#[inline]
fn bin_of(v: f64, bins: usize) -> usize {
    ((v * bins as f64) as usize).min(bins - 1)
}

/// Interpolation anchors along one axis: for each coordinate the two
/// neighbouring tile indices and the weight of the second.
fn axis_weights(len: usize, tile: usize) -> Vec<(usize, usize, f64)> {
    let tiles = len.div_ceil(tile);
    let centers: Vec<f64> = (0..tiles)
        .map(|i| {
            let start = i * tile;
            let end = (start + tile).min(len);
            0.5 * (start + end) as f64
        })
        .collect();
    (0..len)
        .map(|x| {
            let pos = x as f64 + 0.5;
            if pos <= centers[0] {
                return (0, 0, 0.0);
            }
            if pos >= centers[tiles - 1] {
                return (tiles - 1, tiles - 1, 0.0);
            }
            let i = (x / tile).min(tiles - 1);
            let i0 = if pos >= centers[i] { i } else { i - 1 };
            let w = (pos - centers[i0]) / (centers[i0 + 1] - centers[i0]);
            (i0, i0 + 1, w)
        })
        .collect()
}

/// Smoothed local histogram equalization blended with the identity.
///
/// Tiles larger than the image are clamped to the image size. With
/// `strength == 0` the input is returned unchanged.
pub fn apply_local_lhe(img: &PlanarImage, grid: &LocalHistogramGrid) -> Result<PlanarImage> {
    img.expect_kind(PixelKind::Luminance)?;
    grid.validate()?;
    let (width, height) = (img.width(), img.height());
    if grid.strength == 0.0 || img.is_empty() {
        return Ok(img.clone());
    }
    let tile_w = grid.tile_w.min(width);
    let tile_h = grid.tile_h.min(height);
    let tiles_x = width.div_ceil(tile_w);
    let tiles_y = height.div_ceil(tile_h);
    let data = img.data();
    let bins = grid.bins;

    let curves: Vec<TileCurve> = (0..tiles_x * tiles_y)
        .into_par_iter()
        .map(|t| {
            let (tx, ty) = (t % tiles_x, t / tiles_x);
            let x0 = tx * tile_w;
            let x1 = (x0 + tile_w).min(width);
            let mut hist = vec![0u64; bins];
            for y in ty * tile_h..((ty + 1) * tile_h).min(height) {
                for &v in &data[y * width + x0..y * width + x1] {
                    hist[bin_of(v, bins)] += 1;
                }
            }
            TileCurve::from_histogram(&hist)
        })
        .collect();

    let cols = axis_weights(width, tile_w);
    let rows = axis_weights(height, tile_h);
    let strength = grid.strength;
    let mut out = vec![0.0; data.len()];
    out.par_chunks_mut(width)
        .zip(data.par_chunks(width))
        .zip(rows.par_iter())
        .for_each(|((dst, src), &(j0, j1, wy))| {
            let top = &curves[j0 * tiles_x..(j0 + 1) * tiles_x];
            let bottom = &curves[j1 * tiles_x..(j1 + 1) * tiles_x];
            for ((o, &v), &(i0, i1, wx)) in dst.iter_mut().zip(src).zip(&cols) {
                let upper = (1.0 - wx) * top[i0].eval(v) + wx * top[i1].eval(v);
                let lower = (1.0 - wx) * bottom[i0].eval(v) + wx * bottom[i1].eval(v);
                let equalized = (1.0 - wy) * upper + wy * lower;
                *o = clamp_unit((1.0 - strength) * v + strength * equalized);
            }
        });
    Ok(PlanarImage::from_parts_unchecked(
        width,
        height,
        PixelKind::Luminance,
        out,
    ))
}

/// Scales each RGB channel by `l_out / max(l_in, eps)`, clamped to `[0, 1]`.
/// Pixels with zero input luminance come out black.
pub fn reinstate_color(
    rgb: &PlanarImage,
    l_in: &PlanarImage,
    l_out: &PlanarImage,
) -> Result<PlanarImage> {
    rgb.expect_kind(PixelKind::Rgb)?;
    l_in.expect_kind(PixelKind::Luminance)?;
    l_out.expect_kind(PixelKind::Luminance)?;
    rgb.expect_same_dims(l_in)?;
    rgb.expect_same_dims(l_out)?;
    let width = rgb.width();
    let mut out = vec![0.0; rgb.data().len()];
    if width > 0 {
        out.par_chunks_mut(width * 3)
            .zip(rgb.data().par_chunks(width * 3))
            .zip(l_in.data().par_chunks(width))
            .zip(l_out.data().par_chunks(width))
            .for_each(|(((dst, src), lin), lout)| {
                for (((d, s), &li), &lo) in dst
                    .chunks_exact_mut(3)
                    .zip(src.chunks_exact(3))
                    .zip(lin)
                    .zip(lout)
                {
                    if li <= 0.0 {
                        d.fill(0.0);
                        continue;
                    }
                    let ratio = lo / li.max(REINSTATE_EPSILON);
                    for (dc, &sc) in d.iter_mut().zip(s) {
                        *dc = clamp_unit(sc * ratio);
                    }
                }
            });
    }
    Ok(PlanarImage::from_parts_unchecked(
        rgb.width(),
        rgb.height(),
        PixelKind::Rgb,
        out,
    ))
}
