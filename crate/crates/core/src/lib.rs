//! Color-temperature based decolorization.
//!
//! Warm hues (dominated by red) are rendered lighter and cool hues darker by
//! blending a white-axis luminance with a red/green warm term and a blue cool
//! term, one pixel at a time. Besides the model itself the crate carries the
//! baseline luminance extractors it is usually compared against, the
//! CCPR/CCFR/E-score contrast metrics, and global/local tone mapping that
//! runs on any luminance channel.
//!
//! ```
//! use warmgray_core::{decolor_pixel, DecolorParams, RgbPixel};
//!
//! let red = RgbPixel::new(1.0, 0.0, 0.0);
//! let l = decolor_pixel(red, &DecolorParams::default());
//! assert!((l - 0.66332).abs() < 1e-5);
//! ```

pub mod colorspaces;
pub mod decolor;
mod error;
pub mod method;
pub mod metrics;
pub mod parallel;
pub mod raster;
pub mod tonemap;

pub use colorspaces::{delta_e76, hsv_v, lab_lightness, luma_weighted, rgb_to_lab, LabColor};
pub use decolor::{
    decolor_image, decolor_image_into, decolor_pixel, l_blue, l_cool, l_gr, l_warm, l_white,
    DecolorParams,
};
pub use error::{Error, Result};
pub use method::Method;
pub use metrics::{ccfr, ccpr, escore, evaluate, MetricReport, PairSampleConfig, TauRecord};
pub use parallel::with_threads;
pub use raster::{PixelKind, PlanarImage, RgbPixel};
pub use tonemap::{
    apply_local_lhe, apply_sigmoid, reinstate_color, LocalHistogramGrid, SigmoidCurve,
};
