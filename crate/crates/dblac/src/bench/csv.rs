//! CSV emission for raw records and summaries. Runtimes are printed with
//! six fractional digits; fields containing commas or quotes are quoted
//! RFC-4180 style (instance names are the only free-form field).

use super::{BenchRecord, SummaryRow};

pub fn write_summary_csv(rows: &[SummaryRow]) -> String {
    let mut out = String::from("instance,algorithm,mean_colors,mean_runtime_s,min_runtime_s,repetitions\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{:.6},{:.6},{}\n",
            escape(&r.instance),
            r.algorithm,
            format_mean_colors(r.mean_colors),
            r.mean_runtime_s,
            r.min_runtime_s,
            r.repetitions
        ));
    }
    out
}

pub fn write_records_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("instance,algorithm,repetition,colors,runtime_s\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{:.6}\n",
            escape(&r.instance),
            r.algorithm,
            r.repetition,
            r.colors,
            r.runtime_seconds
        ));
    }
    out
}

/// Colors are deterministic so means are almost always integral; print
/// integral means without a trailing fraction, fractional ones with two
/// digits (Table-style "19.50").
fn format_mean_colors(mean: f64) -> String {
    if mean.fract() == 0.0 {
        format!("{}", mean as u64)
    } else {
        format!("{mean:.2}")
    }
}

fn escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}
