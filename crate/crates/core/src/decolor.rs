//! Warm/cool luminance model.
//!
//! Each pixel is reduced to a single luminance by blending three terms:
//!
//! * a white-axis term, the RMS of the three channels,
//! * a warm term, the `beta_r` weighted Euclidean norm of red and green,
//! * a cool term, the blue channel itself.
//!
//! The warm luminance mixes the warm term into the white term by the red
//! chromaticity `r / (r + g + b)`; the cool luminance mixes the white term
//! into the blue channel by the blue chromaticity. The final luminance is the
//! `beta_k` weighted quadratic mean of the warm and cool luminances.
//!
//! All functions are degree-1 homogeneous and map the gray axis onto itself.
//! Black is defined to have zero chromaticity, so it maps to zero.

use crate::error::{Error, Result};
use crate::raster::{PlanarImage, RgbPixel};

/// Blending weights of the warm/cool model.
///
/// Both weights live in the open interval `(0.5, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecolorParams {
    beta_r: f64,
    beta_k: f64,
}

impl DecolorParams {
    pub const DEFAULT_BETA_R: f64 = 0.55;
    pub const DEFAULT_BETA_K: f64 = 0.8;

    pub fn new(beta_r: f64, beta_k: f64) -> Result<Self> {
        if !in_open_weight_range(beta_r) {
            return Err(Error::InvalidBetaR(beta_r));
        }
        if !in_open_weight_range(beta_k) {
            return Err(Error::InvalidBetaK(beta_k));
        }
        Ok(Self { beta_r, beta_k })
    }

    /// Red bias of the warm term. Higher values favour red over green.
    pub fn beta_r(&self) -> f64 {
        self.beta_r
    }

    /// Weight of the warm luminance against the cool luminance.
    pub fn beta_k(&self) -> f64 {
        self.beta_k
    }
}

impl Default for DecolorParams {
    fn default() -> Self {
        Self {
            beta_r: Self::DEFAULT_BETA_R,
            beta_k: Self::DEFAULT_BETA_K,
        }
    }
}

fn in_open_weight_range(v: f64) -> bool {
    v > 0.5 && v < 1.0
}

/// RMS of the three channels.
#[inline]
pub fn l_white(p: RgbPixel) -> f64 {
    ((p.r * p.r + p.g * p.g + p.b * p.b) / 3.0).sqrt()
}

#[inline]
pub fn l_blue(p: RgbPixel) -> f64 {
    p.b
}

/// `beta_r` weighted Euclidean norm of red and green.
#[inline]
pub fn l_gr(p: RgbPixel, params: &DecolorParams) -> f64 {
    let br = params.beta_r;
    (br * p.r * p.r + (1.0 - br) * p.g * p.g).sqrt()
}

/// Chromaticities `(r/s, b/s)` with `s = r + g + b`; zero for black.
#[inline]
fn red_blue_ratios(p: RgbPixel) -> (f64, f64) {
    let s = p.r + p.g + p.b;
    if s > 0.0 {
        (p.r / s, p.b / s)
    } else {
        (0.0, 0.0)
    }
}

#[inline]
pub fn l_warm(p: RgbPixel, params: &DecolorParams) -> f64 {
    let (red, _) = red_blue_ratios(p);
    red * l_gr(p, params) + (1.0 - red) * l_white(p)
}

#[inline]
pub fn l_cool(p: RgbPixel) -> f64 {
    let (_, blue) = red_blue_ratios(p);
    (1.0 - blue) * l_blue(p) + blue * l_white(p)
}

/// Luminance of one pixel under the warm/cool model.
#[inline]
pub fn decolor_pixel(p: RgbPixel, params: &DecolorParams) -> f64 {
    let warm = l_warm(p, params);
    let cool = l_cool(p);
    let bk = params.beta_k;
    (bk * warm * warm + (1.0 - bk) * cool * cool)
        .sqrt()
        .min(1.0)
}

/// Fused form of [`decolor_pixel`] used by the image driver: squares are
/// shared between terms and the chromaticities take one division.
#[inline(always)]
pub(crate) fn decolor_kernel(r: f64, g: f64, b: f64, beta_r: f64, beta_k: f64) -> f64 {
    const THIRD: f64 = 1.0 / 3.0;
    let (rr, gg, bb) = (r * r, g * g, b * b);
    let white = ((rr + gg + bb) * THIRD).sqrt();
    let gr = (beta_r * rr + (1.0 - beta_r) * gg).sqrt();
    let s = r + g + b;
    let (red, blue) = if s > 0.0 {
        let inv = 1.0 / s;
        (r * inv, b * inv)
    } else {
        (0.0, 0.0)
    };
    let warm = white + red * (gr - white);
    let cool = b + blue * (white - b);
    (beta_k * warm * warm + (1.0 - beta_k) * cool * cool)
        .sqrt()
        .min(1.0)
}

/// Decolorizes an RGB image pixel by pixel.
///
/// Rows are spread over the ambient rayon pool (see
/// [`with_threads`](crate::with_threads)); the output does not depend on the
/// number of workers. Zero-sized images yield an empty luminance image.
pub fn decolor_image(img: &PlanarImage, params: &DecolorParams) -> Result<PlanarImage> {
    let (br, bk) = (params.beta_r, params.beta_k);
    img.map_to_luminance(move |r, g, b| decolor_kernel(r, g, b, br, bk))
}

/// [`decolor_image`] writing into a preallocated luminance image.
pub fn decolor_image_into(
    img: &PlanarImage,
    params: &DecolorParams,
    out: &mut PlanarImage,
) -> Result<()> {
    let (br, bk) = (params.beta_r, params.beta_k);
    img.map_to_luminance_into(move |r, g, b| decolor_kernel(r, g, b, br, bk), out)
}
