//! Pixels and row-major planar rasters.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// A color sample with channels normalized to `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RgbPixel {
    pub r: f64,
    pub g: f64,
    pub b: f64,
}

impl RgbPixel {
    pub const BLACK: RgbPixel = RgbPixel::new(0.0, 0.0, 0.0);
    pub const WHITE: RgbPixel = RgbPixel::new(1.0, 1.0, 1.0);

    pub const fn new(r: f64, g: f64, b: f64) -> Self {
        Self { r, g, b }
    }

    pub const fn gray(v: f64) -> Self {
        Self::new(v, v, v)
    }

    /// Clamps every channel into `[0, 1]`; NaN becomes 0.
    pub fn clamped(self) -> Self {
        Self::new(clamp_unit(self.r), clamp_unit(self.g), clamp_unit(self.b))
    }

    pub fn from_rgb8(rgb: [u8; 3]) -> Self {
        Self::new(
            f64::from(rgb[0]) / 255.0,
            f64::from(rgb[1]) / 255.0,
            f64::from(rgb[2]) / 255.0,
        )
    }

    pub fn scaled(self, s: f64) -> Self {
        Self::new(self.r * s, self.g * s, self.b * s)
    }

    pub fn is_valid(&self) -> bool {
        [self.r, self.g, self.b]
            .iter()
            .all(|c| (0.0..=1.0).contains(c))
    }
}

#[inline]
pub(crate) fn clamp_unit(v: f64) -> f64 {
    if v.is_nan() {
        0.0
    } else {
        v.clamp(0.0, 1.0)
    }
}

/// Quantizes a normalized sample to 8 bits, rounding half up after clamping.
#[inline]
pub fn quantize_u8(v: f64) -> u8 {
    (clamp_unit(v) * 255.0 + 0.5).floor() as u8
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PixelKind {
    Rgb,
    Luminance,
}

impl PixelKind {
    pub const fn channels(self) -> usize {
        match self {
            PixelKind::Rgb => 3,
            PixelKind::Luminance => 1,
        }
    }
}

impl fmt::Display for PixelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PixelKind::Rgb => "rgb",
            PixelKind::Luminance => "luminance",
        })
    }
}

/// A `width x height` raster stored row-major, interleaved for RGB.
///
/// Samples are always within `[0, 1]`; out-of-range input is either rejected
/// ([`PlanarImage::new`]) or clamped once at ingestion
/// ([`PlanarImage::from_clamped`]).
#[derive(Debug, Clone, PartialEq)]
pub struct PlanarImage {
    width: usize,
    height: usize,
    kind: PixelKind,
    data: Vec<f64>,
}

impl PlanarImage {
    pub fn new(width: usize, height: usize, kind: PixelKind, data: Vec<f64>) -> Result<Self> {
        check_len(width, height, kind, data.len())?;
        if let Some((index, &value)) = data
            .iter()
            .enumerate()
            .find(|(_, v)| !(0.0..=1.0).contains(*v))
        {
            return Err(Error::SampleOutOfRange { index, value });
        }
        Ok(Self {
            width,
            height,
            kind,
            data,
        })
    }

    pub fn from_clamped(
        width: usize,
        height: usize,
        kind: PixelKind,
        mut data: Vec<f64>,
    ) -> Result<Self> {
        check_len(width, height, kind, data.len())?;
        data.iter_mut().for_each(|v| *v = clamp_unit(*v));
        Ok(Self {
            width,
            height,
            kind,
            data,
        })
    }

    pub fn from_u8(width: usize, height: usize, kind: PixelKind, bytes: &[u8]) -> Result<Self> {
        check_len(width, height, kind, bytes.len())?;
        let data = bytes.iter().map(|&b| f64::from(b) / 255.0).collect();
        Ok(Self {
            width,
            height,
            kind,
            data,
        })
    }

    pub fn from_pixels(width: usize, height: usize, pixels: &[RgbPixel]) -> Result<Self> {
        let data = pixels.iter().flat_map(|p| [p.r, p.g, p.b]).collect();
        Self::new(width, height, PixelKind::Rgb, data)
    }

    pub fn filled(width: usize, height: usize, kind: PixelKind, value: f64) -> Self {
        let value = clamp_unit(value);
        Self {
            width,
            height,
            kind,
            data: vec![value; width * height * kind.channels()],
        }
    }

    /// Uniformly random RGB image, reproducible for a given seed.
    pub fn random_rgb(width: usize, height: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let data = (0..width * height * 3)
            .map(|_| rng.random_range(0.0..=1.0))
            .collect();
        Self {
            width,
            height,
            kind: PixelKind::Rgb,
            data,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn kind(&self) -> PixelKind {
        self.kind
    }

    pub fn channels(&self) -> usize {
        self.kind.channels()
    }

    pub fn pixel_count(&self) -> usize {
        self.width * self.height
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    pub fn same_dims(&self, other: &PlanarImage) -> bool {
        self.width == other.width && self.height == other.height
    }

    pub(crate) fn expect_kind(&self, expected: PixelKind) -> Result<()> {
        if self.kind == expected {
            Ok(())
        } else {
            Err(Error::WrongKind {
                expected,
                actual: self.kind,
            })
        }
    }

    pub(crate) fn expect_same_dims(&self, other: &PlanarImage) -> Result<()> {
        if self.same_dims(other) {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left_width: self.width,
                left_height: self.height,
                right_width: other.width,
                right_height: other.height,
            })
        }
    }

    /// Pixel at linear index `i`; luminance images report a gray pixel.
    pub fn pixel(&self, i: usize) -> RgbPixel {
        match self.kind {
            PixelKind::Rgb => {
                let s = &self.data[3 * i..3 * i + 3];
                RgbPixel::new(s[0], s[1], s[2])
            }
            PixelKind::Luminance => RgbPixel::gray(self.data[i]),
        }
    }

    pub fn pixels(&self) -> impl ExactSizeIterator<Item = RgbPixel> + '_ {
        (0..self.pixel_count()).map(move |i| self.pixel(i))
    }

    pub fn to_u8(&self) -> Vec<u8> {
        self.data.iter().map(|&v| quantize_u8(v)).collect()
    }

    /// Applies `f` to every RGB pixel, producing a luminance image.
    ///
    /// Rows are distributed over the ambient rayon pool; each output sample
    /// depends only on its own input pixel, so the result does not depend on
    /// the worker count.
    pub fn map_to_luminance<F>(&self, f: F) -> Result<PlanarImage>
    where
        F: Fn(f64, f64, f64) -> f64 + Sync,
    {
        let mut out = PlanarImage::filled(self.width, self.height, PixelKind::Luminance, 0.0);
        self.map_to_luminance_into(f, &mut out)?;
        Ok(out)
    }

    /// Like [`map_to_luminance`](Self::map_to_luminance), writing into an
    /// existing luminance image of the same dimensions.
    pub fn map_to_luminance_into<F>(&self, f: F, out: &mut PlanarImage) -> Result<()>
    where
        F: Fn(f64, f64, f64) -> f64 + Sync,
    {
        self.expect_kind(PixelKind::Rgb)?;
        out.expect_kind(PixelKind::Luminance)?;
        self.expect_same_dims(out)?;
        if self.width > 0 {
            out.data
                .par_chunks_mut(self.width)
                .zip(self.data.par_chunks(self.width * 3))
                .for_each(|(dst, src)| {
                    for (o, px) in dst.iter_mut().zip(src.chunks_exact(3)) {
                        *o = f(px[0], px[1], px[2]);
                    }
                });
        }
        Ok(())
    }

    /// Applies a per-sample map to a luminance image.
    pub fn map_luminance<F>(&self, f: F) -> Result<PlanarImage>
    where
        F: Fn(f64) -> f64 + Sync,
    {
        self.expect_kind(PixelKind::Luminance)?;
        let mut out = vec![0.0; self.data.len()];
        if self.width > 0 {
            out.par_chunks_mut(self.width)
                .zip(self.data.par_chunks(self.width))
                .for_each(|(dst, src)| {
                    for (o, &v) in dst.iter_mut().zip(src) {
                        *o = clamp_unit(f(v));
                    }
                });
        }
        Ok(PlanarImage {
            width: self.width,
            height: self.height,
            kind: PixelKind::Luminance,
            data: out,
        })
    }

    pub(crate) fn from_parts_unchecked(
        width: usize,
        height: usize,
        kind: PixelKind,
        data: Vec<f64>,
    ) -> Self {
        debug_assert_eq!(data.len(), width * height * kind.channels());
        Self {
            width,
            height,
            kind,
            data,
        }
    }
}

fn check_len(width: usize, height: usize, kind: PixelKind, len: usize) -> Result<()> {
    let expected = width * height * kind.channels();
    if len == expected {
        Ok(())
    } else {
        Err(Error::DataLength {
            expected,
            actual: len,
        })
    }
}
