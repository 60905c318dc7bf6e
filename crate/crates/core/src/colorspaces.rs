//! Baseline luminance extractors and CIELAB.
//!
//! CIELAB assumes sRGB input (IEC 61966-2-1 transfer curve, D65 white,
//! 2 degree observer). Color differences use CIE76.

use crate::raster::RgbPixel;

pub const LUMA_R: f64 = 0.2989;
pub const LUMA_G: f64 = 0.5870;
pub const LUMA_B: f64 = 0.1140;

/// BT.601 weighted sum, also used as "Y of YCbCr".
#[inline]
pub fn luma_weighted(p: RgbPixel) -> f64 {
    LUMA_R * p.r + LUMA_G * p.g + LUMA_B * p.b
}

/// V of HSV.
#[inline]
pub fn hsv_v(p: RgbPixel) -> f64 {
    p.r.max(p.g).max(p.b)
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LabColor {
    pub l_star: f64,
    pub a_star: f64,
    pub b_star: f64,
}

impl LabColor {
    pub const fn new(l_star: f64, a_star: f64, b_star: f64) -> Self {
        Self {
            l_star,
            a_star,
            b_star,
        }
    }
}

// sRGB primaries to XYZ, D65.
const RGB_TO_XYZ: [[f64; 3]; 3] = [
    [0.412_456_4, 0.357_576_1, 0.180_437_5],
    [0.212_672_9, 0.715_152_2, 0.072_175_0],
    [0.019_333_9, 0.119_192_0, 0.950_304_1],
];

// Reference white is the image of (1, 1, 1) so white has exactly zero chroma.
const WHITE_X: f64 = RGB_TO_XYZ[0][0] + RGB_TO_XYZ[0][1] + RGB_TO_XYZ[0][2];
const WHITE_Y: f64 = RGB_TO_XYZ[1][0] + RGB_TO_XYZ[1][1] + RGB_TO_XYZ[1][2];
const WHITE_Z: f64 = RGB_TO_XYZ[2][0] + RGB_TO_XYZ[2][1] + RGB_TO_XYZ[2][2];

const LAB_EPSILON: f64 = 216.0 / 24389.0;
const LAB_KAPPA: f64 = 24389.0 / 27.0;

/// sRGB electro-optical transfer function.
#[inline]
pub fn srgb_to_linear(c: f64) -> f64 {
    if c <= 0.040_45 {
        c / 12.92
    } else {
        ((c + 0.055) / 1.055).powf(2.4)
    }
}

#[inline]
fn lab_f(t: f64) -> f64 {
    if t > LAB_EPSILON {
        t.cbrt()
    } else {
        (LAB_KAPPA * t + 16.0) / 116.0
    }
}

#[inline]
fn relative_luminance(rl: f64, gl: f64, bl: f64) -> f64 {
    let m = &RGB_TO_XYZ[1];
    (m[0] * rl + m[1] * gl + m[2] * bl) / WHITE_Y
}

/// Relative XYZ (each component divided by the reference white).
pub fn rgb_to_xyz_relative(p: RgbPixel) -> [f64; 3] {
    let (rl, gl, bl) = (
        srgb_to_linear(p.r),
        srgb_to_linear(p.g),
        srgb_to_linear(p.b),
    );
    let x = RGB_TO_XYZ[0];
    let z = RGB_TO_XYZ[2];
    [
        (x[0] * rl + x[1] * gl + x[2] * bl) / WHITE_X,
        relative_luminance(rl, gl, bl),
        (z[0] * rl + z[1] * gl + z[2] * bl) / WHITE_Z,
    ]
}

pub fn rgb_to_lab(p: RgbPixel) -> LabColor {
    let [x, y, z] = rgb_to_xyz_relative(p);
    let (fx, fy, fz) = (lab_f(x), lab_f(y), lab_f(z));
    LabColor::new(116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz))
}

/// CIELAB lightness rescaled to `[0, 1]`.
///
/// Only the Y row is evaluated; the result is bit-identical to
/// `rgb_to_lab(p).l_star / 100`.
#[inline]
pub fn lab_lightness(p: RgbPixel) -> f64 {
    let y = relative_luminance(
        srgb_to_linear(p.r),
        srgb_to_linear(p.g),
        srgb_to_linear(p.b),
    );
    ((116.0 * lab_f(y) - 16.0) / 100.0).clamp(0.0, 1.0)
}

/// CIE76 color difference.
#[inline]
pub fn delta_e76(a: LabColor, b: LabColor) -> f64 {
    let dl = a.l_star - b.l_star;
    let da = a.a_star - b.a_star;
    let db = a.b_star - b.b_star;
    (dl * dl + da * da + db * db).sqrt()
}
