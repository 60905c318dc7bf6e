use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use warmgray_core::{
    apply_local_lhe, apply_sigmoid, decolor_image, evaluate, reinstate_color, with_threads,
    DecolorParams, LocalHistogramGrid, Method, MetricReport, PairSampleConfig, PlanarImage,
    SigmoidCurve,
};

use crate::bench::{self, BenchConfig};
use crate::codec::{read_gray, read_rgb, write_image};
use crate::error::{CliError, Result};
use crate::report;

#[derive(Debug, Parser)]
#[command(
    name = "warmgray",
    version,
    about = "Color-temperature based decolorization"
)]
pub struct Cli {
    /// Worker threads for the image drivers (0 = all cores). `bench` defaults to 1.
    #[arg(long, global = true, env = "WARMGRAY_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert a color image to 8-bit grayscale.
    Decolor(DecolorArgs),
    /// Score decolorizations with CCPR/CCFR/E-score over tau = 1..15.
    Metrics(MetricsArgs),
    /// Decolorize, tone map the luminance and put the color back.
    Tonemap(TonemapArgs),
    /// Time luminance kernels per pixel on a synthetic image.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long, default_value_t = DecolorParams::DEFAULT_BETA_R)]
    pub beta_r: f64,
    #[arg(long, default_value_t = DecolorParams::DEFAULT_BETA_K)]
    pub beta_k: f64,
}

impl ParamArgs {
    fn params(&self) -> Result<DecolorParams> {
        Ok(DecolorParams::new(self.beta_r, self.beta_k)?)
    }

    fn method(&self, name: &str) -> Result<Method> {
        let method: Method = name.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
        Ok(method.with_params(self.params()?))
    }
}

#[derive(Debug, Args)]
pub struct DecolorArgs {
    pub input: PathBuf,
    /// Output path; `.png` or `.pgm`.
    pub output: PathBuf,
    /// One of ours, y, v, lab, weighted.
    #[arg(long, default_value = "ours")]
    pub method: String,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Args)]
pub struct MetricsArgs {
    /// Color images to score.
    #[arg(required = true)]
    pub color: Vec<PathBuf>,
    /// Precomputed grayscale rendition (single color image only).
    #[arg(long, conflicts_with = "method")]
    pub gray: Option<PathBuf>,
    /// Decolorize in memory with this method instead of reading `--gray`.
    #[arg(long)]
    pub method: Option<String>,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = PairSampleConfig::DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = PairSampleConfig::DEFAULT_PAIRS)]
    pub pairs: usize,
    /// Evaluate every pixel pair instead of sampling.
    #[arg(long)]
    pub exhaustive: bool,
    /// CSV destination; standard output when omitted.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ToneMode {
    Global,
    Local,
}

#[derive(Debug, Args)]
pub struct TonemapArgs {
    pub input: PathBuf,
    pub output: PathBuf,
    #[arg(long, value_enum, default_value_t = ToneMode::Local)]
    pub mode: ToneMode,
    #[arg(long, default_value_t = SigmoidCurve::DEFAULT_MIDPOINT)]
    pub midpoint: f64,
    #[arg(long, default_value_t = SigmoidCurve::DEFAULT_SLOPE)]
    pub slope: f64,
    /// Tiles per axis when `--tile-w`/`--tile-h` are not given.
    #[arg(long, default_value_t = LocalHistogramGrid::DEFAULT_TILES)]
    pub tiles: usize,
    #[arg(long)]
    pub tile_w: Option<usize>,
    #[arg(long)]
    pub tile_h: Option<usize>,
    #[arg(long, default_value_t = LocalHistogramGrid::DEFAULT_BINS)]
    pub bins: usize,
    #[arg(long, default_value_t = LocalHistogramGrid::DEFAULT_STRENGTH)]
    pub strength: f64,
    /// Also write the tone-mapped luminance.
    #[arg(long)]
    pub gray_out: Option<PathBuf>,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 800)]
    pub width: usize,
    #[arg(long, default_value_t = 600)]
    pub height: usize,
    /// Comma-separated method names.
    #[arg(long, value_delimiter = ',', default_value = "ours,lab")]
    pub methods: Vec<String>,
    #[arg(long, default_value_t = bench::MIN_REPEATS)]
    pub repeats: usize,
    /// Nominal clock of this machine, used for normalization to 2.7 GHz.
    #[arg(long, default_value_t = bench::REFERENCE_GHZ)]
    pub cpu_ghz: f64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[command(flatten)]
    pub params: ParamArgs,
}

impl Cli {
    pub fn run(self) -> Result<()> {
        let threads = self.threads;
        match self.command {
            Command::Decolor(args) => pooled(threads.unwrap_or(0), || cmd_decolor(&args)),
            Command::Metrics(args) => pooled(threads.unwrap_or(0), || cmd_metrics(&args)),
            Command::Tonemap(args) => pooled(threads.unwrap_or(0), || cmd_tonemap(&args)),
            Command::Bench(args) => pooled(threads.unwrap_or(1), || cmd_bench(&args)),
        }
    }
}

fn pooled<F>(threads: usize, f: F) -> Result<()>
where
    F: FnOnce() -> Result<()> + Send,
{
    with_threads(threads, f).map_err(CliError::from)?
}

pub fn cmd_decolor(args: &DecolorArgs) -> Result<()> {
    let method = args.params.method(&args.method)?;
    let img = read_rgb(&args.input)?;
    let gray = method.luminance(&img)?;
    write_image(&args.output, &gray)
}

fn display_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

pub fn cmd_metrics(args: &MetricsArgs) -> Result<()> {
    if args.gray.is_some() && args.color.len() != 1 {
        return Err(CliError::Usage(
            "--gray pairs with exactly one color image".into(),
        ));
    }
    let cfg = PairSampleConfig {
        pair_count: args.pairs,
        seed: args.seed,
        exhaustive: args.exhaustive,
    };
    let method = args
        .params
        .method(args.method.as_deref().unwrap_or("ours"))?;
    let mut reports: Vec<(String, MetricReport)> = Vec::with_capacity(args.color.len());
    for path in &args.color {
        let color = read_rgb(path)?;
        let gray = match &args.gray {
            Some(g) => read_gray(g)?,
            None => method.luminance(&color)?,
        };
        reports.push((display_name(path), evaluate(&color, &gray, &cfg)?));
    }
    let mean = if reports.len() == 1 {
        reports[0].1.mean_escore
    } else {
        let all: Vec<MetricReport> = reports.iter().map(|(_, r)| r.clone()).collect();
        warmgray_core::metrics::aggregate_mean_escore(&all)
    };
    match &args.output {
        Some(path) => {
            let file = File::create(path).map_err(|e| CliError::io(path, e))?;
            report::write_csv(io::BufWriter::new(file), &reports)?;
            println!("mean_escore\t{mean:.6}");
        }
        None => {
            report::write_csv(io::stdout().lock(), &reports)?;
            eprintln!("mean_escore\t{mean:.6}");
        }
    }
    Ok(())
}

/// Decolorize, tone map and reinstate color; returns `(rgb, tone-mapped luminance)`.
pub fn tonemap_pipeline(
    img: &PlanarImage,
    params: &DecolorParams,
    args: &TonemapArgs,
) -> Result<(PlanarImage, PlanarImage)> {
    let l_in = decolor_image(img, params)?;
    let l_out = match args.mode {
        ToneMode::Global => apply_sigmoid(&l_in, &SigmoidCurve::new(args.midpoint, args.slope)?)?,
        ToneMode::Local => {
            let grid = match (args.tile_w, args.tile_h) {
                (None, None) => LocalHistogramGrid::with_tile_count(
                    img.width(),
                    img.height(),
                    args.tiles,
                    args.tiles,
                    args.bins,
                    args.strength,
                )?,
                (w, h) => LocalHistogramGrid::new(
                    w.unwrap_or_else(|| img.width().div_ceil(args.tiles.max(1)).max(1)),
                    h.unwrap_or_else(|| img.height().div_ceil(args.tiles.max(1)).max(1)),
                    args.bins,
                    args.strength,
                )?,
            };
            apply_local_lhe(&l_in, &grid)?
        }
    };
    let rgb = reinstate_color(img, &l_in, &l_out)?;
    Ok((rgb, l_out))
}

pub fn cmd_tonemap(args: &TonemapArgs) -> Result<()> {
    let params = args.params.params()?;
    // Validate curve/grid parameters before touching the file system.
    SigmoidCurve::new(args.midpoint, args.slope)?;
    LocalHistogramGrid::new(1, 1, args.bins, args.strength)?;
    if args.tiles == 0 {
        return Err(CliError::Usage("--tiles must be at least 1".into()));
    }
    let img = read_rgb(&args.input)?;
    let (rgb, l_out) = tonemap_pipeline(&img, &params, args)?;
    write_image(&args.output, &rgb)?;
    if let Some(path) = &args.gray_out {
        write_image(path, &l_out)?;
    }
    Ok(())
}

pub fn cmd_bench(args: &BenchArgs) -> Result<()> {
    let methods = args
        .methods
        .iter()
        .map(|m| args.params.method(m.trim()))
        .collect::<Result<Vec<_>>>()?;
    let cfg = BenchConfig {
        width: args.width,
        height: args.height,
        methods,
        repeats: args.repeats,
        cpu_ghz: args.cpu_ghz,
        seed: args.seed,
    };
    let results = bench::run(&cfg)?;
    let mut out = io::stdout().lock();
    out.write_all(bench::format_tsv(&results).as_bytes())
        .map_err(|e| CliError::io("<stdout>", e))
}
