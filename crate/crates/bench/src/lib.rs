//! Shared inputs for the criterion benchmarks in `benches/`.

use warmgray_core::PlanarImage;

/// Image sizes used by the per-pixel timing table.
pub const SIZES: [(usize, usize); 2] = [(800, 600), (3008, 2008)];

pub fn random_image(width: usize, height: usize) -> PlanarImage {
    PlanarImage::random_rgb(width, height, 42)
}
