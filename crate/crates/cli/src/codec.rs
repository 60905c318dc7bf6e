//! 8-bit PNG and binary PNM input/output.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use image::codecs::png::PngEncoder;
use image::codecs::pnm::{PnmEncoder, PnmSubtype, SampleEncoding};
use image::{ExtendedColorType, ImageEncoder, ImageReader};
use warmgray_core::{PixelKind, PlanarImage};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Png,
    Pnm,
}

impl OutputFormat {
    pub fn from_path(path: &Path) -> Result<Self> {
        let ext = path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase);
        match ext.as_deref() {
            Some("png") => Ok(OutputFormat::Png),
            Some("ppm" | "pgm" | "pnm") => Ok(OutputFormat::Pnm),
            _ => Err(CliError::Codec {
                path: path.to_owned(),
                message: "unsupported output format (expected .png, .ppm, .pgm or .pnm)".into(),
            }),
        }
    }
}

fn codec_err(path: &Path, e: impl ToString) -> CliError {
    CliError::Codec {
        path: path.to_owned(),
        message: e.to_string(),
    }
}

/// Decodes PNG or PNM (detected from content) into a normalized RGB image.
pub fn read_rgb(path: &Path) -> Result<PlanarImage> {
    let reader = ImageReader::open(path)
        .map_err(|e| CliError::io(path, e))?
        .with_guessed_format()
        .map_err(|e| CliError::io(path, e))?;
    let decoded = reader.decode().map_err(|e| codec_err(path, e))?;
    let rgb = decoded.to_rgb8();
    let (w, h) = (rgb.width() as usize, rgb.height() as usize);
    Ok(PlanarImage::from_u8(w, h, PixelKind::Rgb, rgb.as_raw())?)
}

/// Decodes any supported image and keeps a single gray channel.
pub fn read_gray(path: &Path) -> Result<PlanarImage> {
    let reader = ImageReader::open(path)
        .map_err(|e| CliError::io(path, e))?
        .with_guessed_format()
        .map_err(|e| CliError::io(path, e))?;
    let decoded = reader.decode().map_err(|e| codec_err(path, e))?;
    let gray = decoded.to_luma8();
    let (w, h) = (gray.width() as usize, gray.height() as usize);
    Ok(PlanarImage::from_u8(
        w,
        h,
        PixelKind::Luminance,
        gray.as_raw(),
    )?)
}

/// Encodes an image as 8-bit PNG or binary PPM/PGM, chosen by extension.
pub fn write_image(path: &Path, img: &PlanarImage) -> Result<()> {
    let format = OutputFormat::from_path(path)?;
    let bytes = encode(img, format).map_err(|e| codec_err(path, e))?;
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let mut out = BufWriter::new(file);
    out.write_all(&bytes)
        .and_then(|_| out.flush())
        .map_err(|e| CliError::io(path, e))
}

pub fn encode(img: &PlanarImage, format: OutputFormat) -> image::ImageResult<Vec<u8>> {
    let samples = img.to_u8();
    let (w, h) = (img.width() as u32, img.height() as u32);
    let color = match img.kind() {
        PixelKind::Rgb => ExtendedColorType::Rgb8,
        PixelKind::Luminance => ExtendedColorType::L8,
    };
    let mut buf = Vec::new();
    match format {
        OutputFormat::Png => PngEncoder::new(&mut buf).write_image(&samples, w, h, color)?,
        OutputFormat::Pnm => {
            let subtype = match img.kind() {
                PixelKind::Rgb => PnmSubtype::Pixmap(SampleEncoding::Binary),
                PixelKind::Luminance => PnmSubtype::Graymap(SampleEncoding::Binary),
            };
            PnmEncoder::new(&mut buf)
                .with_subtype(subtype)
                .write_image(&samples, w, h, color)?
        }
    }
    Ok(buf)
}
