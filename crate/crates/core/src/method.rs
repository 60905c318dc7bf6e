//! Selectable luminance extractors.

use std::fmt;
use std::str::FromStr;

use crate::colorspaces::{hsv_v, lab_lightness, luma_weighted};
use crate::decolor::{decolor_image, decolor_image_into, DecolorParams};
use crate::error::Result;
use crate::raster::{PixelKind, PlanarImage, RgbPixel};

/// A color-to-gray mapping that can be applied to a whole image.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Method {
    /// Warm/cool model.
    Ours(DecolorParams),
    /// Y of YCbCr.
    Y,
    /// V of HSV.
    V,
    /// CIELAB lightness.
    Lab,
    /// BT.601 weighted sum (same weights as [`Method::Y`]).
    Weighted,
}

impl Method {
    pub const NAMES: [&'static str; 5] = ["ours", "y", "v", "lab", "weighted"];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Ours(_) => "ours",
            Method::Y => "y",
            Method::V => "v",
            Method::Lab => "lab",
            Method::Weighted => "weighted",
        }
    }

    /// Replaces the warm/cool parameters; other methods are unaffected.
    pub fn with_params(self, params: DecolorParams) -> Self {
        match self {
            Method::Ours(_) => Method::Ours(params),
            other => other,
        }
    }

    pub fn pixel(&self, p: RgbPixel) -> f64 {
        match self {
            Method::Ours(params) => crate::decolor::decolor_pixel(p, params),
            Method::Y | Method::Weighted => luma_weighted(p),
            Method::V => hsv_v(p),
            Method::Lab => lab_lightness(p),
        }
    }

    pub fn luminance(&self, img: &PlanarImage) -> Result<PlanarImage> {
        match self {
            Method::Ours(params) => decolor_image(img, params),
            _ => {
                let mut out =
                    PlanarImage::filled(img.width(), img.height(), PixelKind::Luminance, 0.0);
                self.luminance_into(img, &mut out)?;
                Ok(out)
            }
        }
    }

    /// Writes the luminance of `img` into `out`, which must be a luminance
    /// image of the same dimensions.
    pub fn luminance_into(&self, img: &PlanarImage, out: &mut PlanarImage) -> Result<()> {
        match self {
            Method::Ours(params) => decolor_image_into(img, params, out),
            Method::Y | Method::Weighted => {
                img.map_to_luminance_into(|r, g, b| luma_weighted(RgbPixel::new(r, g, b)), out)
            }
            Method::V => img.map_to_luminance_into(|r, g, b| hsv_v(RgbPixel::new(r, g, b)), out),
            Method::Lab => {
                img.map_to_luminance_into(|r, g, b| lab_lightness(RgbPixel::new(r, g, b)), out)
            }
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown method `{0}` (expected one of: ours, y, v, lab, weighted)")]
pub struct UnknownMethod(pub String);

impl FromStr for Method {
    type Err = UnknownMethod;

    /// Parses a method name; `ours` gets default parameters.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ours" => Ok(Method::Ours(DecolorParams::default())),
            "y" => Ok(Method::Y),
            "v" => Ok(Method::V),
            "lab" => Ok(Method::Lab),
            "weighted" => Ok(Method::Weighted),
            _ => Err(UnknownMethod(s.to_owned())),
        }
    }
}
