//! CSV emission for metric sweeps.
//!
//! Columns are `image,tau,ccpr,ccfr,escore`. Each image contributes one row
//! per threshold and a summary row with `tau = mean`; runs over more than one
//! image end with an `all` row averaging the per-image means.

use std::io::Write;

use warmgray_core::metrics::aggregate_mean_escore;
use warmgray_core::MetricReport;

use crate::error::Result;

pub const HEADER: [&str; 5] = ["image", "tau", "ccpr", "ccfr", "escore"];
pub const AGGREGATE_NAME: &str = "all";

fn fmt(v: f64) -> String {
    format!("{v:.6}")
}

pub fn write_csv<W: Write>(out: W, reports: &[(String, MetricReport)]) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(out);
    wtr.write_record(HEADER)?;
    for (name, report) in reports {
        for rec in &report.per_tau {
            wtr.write_record([
                name.as_str(),
                &format!("{}", rec.tau),
                &fmt(rec.ccpr),
                &fmt(rec.ccfr),
                &fmt(rec.escore),
            ])?;
        }
        wtr.write_record([
            name.as_str(),
            "mean",
            &fmt(report.mean_ccpr()),
            &fmt(report.mean_ccfr()),
            &fmt(report.mean_escore),
        ])?;
    }
    if reports.len() > 1 {
        let all: Vec<MetricReport> = reports.iter().map(|(_, r)| r.clone()).collect();
        let n = all.len() as f64;
        wtr.write_record([
            AGGREGATE_NAME,
            "mean",
            &fmt(all.iter().map(|r| r.mean_ccpr()).sum::<f64>() / n),
            &fmt(all.iter().map(|r| r.mean_ccfr()).sum::<f64>() / n),
            &fmt(aggregate_mean_escore(&all)),
        ])?;
    }
    wtr.flush().map_err(csv::Error::from)?;
    Ok(())
}
