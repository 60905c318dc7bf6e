use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use warmgray_bench::{random_image, SIZES};
use warmgray_core::metrics::{evaluate, PairSampleConfig};
use warmgray_core::{
    apply_local_lhe, apply_sigmoid, decolor_image, DecolorParams, LocalHistogramGrid, Method,
    PixelKind, PlanarImage, SigmoidCurve,
};

fn luminance(c: &mut Criterion) {
    let mut group = c.benchmark_group("luminance");
    for (w, h) in SIZES {
        let img = random_image(w, h);
        let mut out = PlanarImage::filled(w, h, PixelKind::Luminance, 0.0);
        group.throughput(Throughput::Elements((w * h) as u64));
        for name in Method::NAMES {
            let method: Method = name.parse().unwrap();
            group.bench_with_input(
                BenchmarkId::new(name, format!("{w}x{h}")),
                &img,
                |b, img| b.iter(|| method.luminance_into(img, &mut out).unwrap()),
            );
        }
    }
    group.finish();
}

fn tonemap(c: &mut Criterion) {
    let (w, h) = SIZES[0];
    let l = decolor_image(&random_image(w, h), &DecolorParams::default()).unwrap();
    let mut group = c.benchmark_group("tonemap");
    group.throughput(Throughput::Elements((w * h) as u64));
    let grid = LocalHistogramGrid::default_for(w, h);
    group.bench_function("local_lhe", |b| {
        b.iter(|| apply_local_lhe(&l, &grid).unwrap())
    });
    let curve = SigmoidCurve::default();
    group.bench_function("sigmoid", |b| b.iter(|| apply_sigmoid(&l, &curve).unwrap()));
    group.finish();
}

fn metrics(c: &mut Criterion) {
    let img = random_image(128, 96);
    let gray = decolor_image(&img, &DecolorParams::default()).unwrap();
    let cfg = PairSampleConfig::default();
    c.bench_function("metrics/evaluate_50k_pairs", |b| {
        b.iter(|| evaluate(&img, &gray, &cfg).unwrap())
    });
}

criterion_group!(benches, luminance, tonemap, metrics);
criterion_main!(benches);
