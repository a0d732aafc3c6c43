//! Standalone SVG grouped bar charts for benchmark summaries: one chart of
//! mean colors (linear axis) and one of mean runtime (log axis). No
//! external assets; every bar is a `<rect class="bar">`.

use super::SummaryRow;
use crate::algo::AlgorithmId;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PlotError {
    #[error("no summary rows to plot")]
    NoRows,
    #[error("writing {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

const CHART_HEIGHT: f64 = 360.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 120.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 70.0;
const BAR_WIDTH: f64 = 22.0;
const BAR_GAP: f64 = 4.0;
const GROUP_GAP: f64 = 30.0;

fn algorithm_color(id: AlgorithmId) -> &'static str {
    match id {
        AlgorithmId::Dblac => "#4285f4",
        AlgorithmId::Ldf => "#fbbc05",
        AlgorithmId::Dsatur => "#34a853",
        AlgorithmId::Rlf => "#ea4335",
    }
}

/// Writes `colors.svg` and `runtime.svg` into `out_dir`; returns the two
/// paths in that order.
pub fn emit_plots(rows: &[SummaryRow], out_dir: &Path) -> Result<[std::path::PathBuf; 2], PlotError> {
    if rows.is_empty() {
        return Err(PlotError::NoRows);
    }
    let colors_svg = render_chart(rows, ChartKind::Colors);
    let runtime_svg = render_chart(rows, ChartKind::Runtime);
    let colors_path = out_dir.join("colors.svg");
    let runtime_path = out_dir.join("runtime.svg");
    for (path, body) in [(&colors_path, &colors_svg), (&runtime_path, &runtime_svg)] {
        std::fs::write(path, body).map_err(|source| PlotError::Io {
            path: path.display().to_string(),
            source,
        })?;
    }
    Ok([colors_path, runtime_path])
}

#[derive(Clone, Copy)]
enum ChartKind {
    Colors,
    Runtime,
}

impl ChartKind {
    fn title(self) -> &'static str {
        match self {
            ChartKind::Colors => "Mean colors used",
            ChartKind::Runtime => "Mean runtime (seconds, log scale)",
        }
    }

    fn value(self, row: &SummaryRow) -> f64 {
        match self {
            ChartKind::Colors => row.mean_colors,
            // Clamp so a sub-microsecond reading still lands on the chart.
            ChartKind::Runtime => row.mean_runtime_s.max(1e-7),
        }
    }
}

fn render_chart(rows: &[SummaryRow], kind: ChartKind) -> String {
    let mut instances: Vec<&str> = Vec::new();
    let mut algorithms: Vec<AlgorithmId> = Vec::new();
    for r in rows {
        if !instances.contains(&r.instance.as_str()) {
            instances.push(&r.instance);
        }
        if !algorithms.contains(&r.algorithm) {
            algorithms.push(r.algorithm);
        }
    }
    algorithms.sort();

    let group_width = algorithms.len() as f64 * (BAR_WIDTH + BAR_GAP) + GROUP_GAP;
    let plot_width = instances.len() as f64 * group_width;
    let width = MARGIN_LEFT + plot_width + MARGIN_RIGHT;
    let plot_height = CHART_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let baseline = MARGIN_TOP + plot_height;

    // Axis range.
    let values: Vec<f64> = rows.iter().map(|r| kind.value(r)).collect();
    let (scale_min, scale_max) = match kind {
        ChartKind::Colors => {
            let max = values.iter().cloned().fold(0.0_f64, f64::max);
            (0.0, (max * 1.1).max(1.0))
        }
        ChartKind::Runtime => {
            let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
            let max = values.iter().cloned().fold(0.0_f64, f64::max);
            let lo = min.log10().floor();
            let hi = max.log10().ceil().max(lo + 1.0);
            (lo, hi)
        }
    };
    let y_of = |v: f64| -> f64 {
        let t = match kind {
            ChartKind::Colors => v / scale_max,
            ChartKind::Runtime => (v.log10() - scale_min) / (scale_max - scale_min),
        };
        baseline - t.clamp(0.0, 1.0) * plot_height
    };

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.0}\" height=\"{CHART_HEIGHT:.0}\" viewBox=\"0 0 {width:.0} {CHART_HEIGHT:.0}\" font-family=\"sans-serif\" font-size=\"12\">\n"
    ));
    svg.push_str(&format!(
        "  <text x=\"{:.1}\" y=\"18\" font-size=\"15\" text-anchor=\"middle\">{}</text>\n",
        MARGIN_LEFT + plot_width / 2.0,
        kind.title()
    ));

    // Y axis with ticks and gridlines.
    svg.push_str(&format!(
        "  <line x1=\"{MARGIN_LEFT}\" y1=\"{MARGIN_TOP}\" x2=\"{MARGIN_LEFT}\" y2=\"{baseline}\" stroke=\"black\"/>\n"
    ));
    match kind {
        ChartKind::Colors => {
            let step = nice_step(scale_max);
            let mut v = 0.0;
            while v <= scale_max + 1e-9 {
                let y = y_of(v);
                svg.push_str(&format!(
                    "  <line x1=\"{:.1}\" y1=\"{y:.1}\" x2=\"{:.1}\" y2=\"{y:.1}\" stroke=\"#ddd\"/>\n",
                    MARGIN_LEFT,
                    MARGIN_LEFT + plot_width
                ));
                svg.push_str(&format!(
                    "  <text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\">{v:.0}</text>\n",
                    MARGIN_LEFT - 6.0,
                    y + 4.0
                ));
                v += step;
            }
        }
        ChartKind::Runtime => {
            let mut exp = scale_min as i32;
            while (exp as f64) <= scale_max {
                let v = 10f64.powi(exp);
                let y = y_of(v);
                svg.push_str(&format!(
                    "  <line x1=\"{:.1}\" y1=\"{y:.1}\" x2=\"{:.1}\" y2=\"{y:.1}\" stroke=\"#ddd\"/>\n",
                    MARGIN_LEFT,
                    MARGIN_LEFT + plot_width
                ));
                svg.push_str(&format!(
                    "  <text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\">1e{exp}</text>\n",
                    MARGIN_LEFT - 6.0,
                    y + 4.0
                ));
                exp += 1;
            }
        }
    }
    let axis_label = match kind {
        ChartKind::Colors => "colors",
        ChartKind::Runtime => "seconds",
    };
    svg.push_str(&format!(
        "  <text x=\"16\" y=\"{:.1}\" transform=\"rotate(-90 16 {:.1})\" text-anchor=\"middle\">{axis_label}</text>\n",
        MARGIN_TOP + plot_height / 2.0,
        MARGIN_TOP + plot_height / 2.0
    ));

    // Bars, grouped per instance.
    for (gi, instance) in instances.iter().enumerate() {
        let group_x = MARGIN_LEFT + gi as f64 * group_width + GROUP_GAP / 2.0;
        for (ai, &algorithm) in algorithms.iter().enumerate() {
            let Some(row) = rows
                .iter()
                .find(|r| r.instance == *instance && r.algorithm == algorithm)
            else {
                continue;
            };
            let v = kind.value(row);
            let y = y_of(v);
            let x = group_x + ai as f64 * (BAR_WIDTH + BAR_GAP);
            svg.push_str(&format!(
                "  <rect class=\"bar\" x=\"{x:.1}\" y=\"{y:.1}\" width=\"{BAR_WIDTH}\" height=\"{:.1}\" fill=\"{}\"><title>{} {}: {v}</title></rect>\n",
                baseline - y,
                algorithm_color(algorithm),
                escape_text(instance),
                algorithm
            ));
        }
        svg.push_str(&format!(
            "  <text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{}</text>\n",
            group_x + (algorithms.len() as f64 * (BAR_WIDTH + BAR_GAP) - BAR_GAP) / 2.0,
            baseline + 18.0,
            escape_text(instance)
        ));
    }
    svg.push_str(&format!(
        "  <line x1=\"{MARGIN_LEFT}\" y1=\"{baseline}\" x2=\"{:.1}\" y2=\"{baseline}\" stroke=\"black\"/>\n",
        MARGIN_LEFT + plot_width
    ));

    // Legend.
    for (ai, &algorithm) in algorithms.iter().enumerate() {
        let y = MARGIN_TOP + ai as f64 * 20.0;
        let x = MARGIN_LEFT + plot_width + 16.0;
        svg.push_str(&format!(
            "  <rect x=\"{x:.1}\" y=\"{y:.1}\" width=\"14\" height=\"14\" fill=\"{}\"/>\n",
            algorithm_color(algorithm)
        ));
        svg.push_str(&format!(
            "  <text x=\"{:.1}\" y=\"{:.1}\">{}</text>\n",
            x + 20.0,
            y + 11.0,
            algorithm.name().to_uppercase()
        ));
    }

    svg.push_str("</svg>\n");
    svg
}

fn nice_step(max: f64) -> f64 {
    let raw = max / 8.0;
    let mag = 10f64.powf(raw.log10().floor());
    for mult in [1.0, 2.0, 5.0, 10.0] {
        if mag * mult >= raw {
            return mag * mult;
        }
    }
    mag * 10.0
}

fn escape_text(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algo::AlgorithmId;
    use tempfile::tempdir;

    fn rows_1x3() -> Vec<SummaryRow> {
        [AlgorithmId::Dblac, AlgorithmId::Dsatur, AlgorithmId::Rlf]
            .into_iter()
            .map(|algorithm| SummaryRow {
                instance: "g1".into(),
                algorithm,
                mean_colors: 4.0,
                mean_runtime_s: 0.001,
                min_runtime_s: 0.001,
                repetitions: 1,
            })
            .collect()
    }

    #[test]
    fn bar_count_matches_rows() {
        let svg = render_chart(&rows_1x3(), ChartKind::Colors);
        assert_eq!(svg.matches("class=\"bar\"").count(), 3);
    }

    #[test]
    fn axis_labels() {
        assert!(render_chart(&rows_1x3(), ChartKind::Colors).contains(">colors<"));
        assert!(render_chart(&rows_1x3(), ChartKind::Runtime).contains(">seconds<"));
    }

    #[test]
    fn emits_two_files() {
        let dir = tempdir().unwrap();
        let paths = emit_plots(&rows_1x3(), dir.path()).unwrap();
        for p in &paths {
            let body = std::fs::read_to_string(p).unwrap();
            assert!(body.starts_with("<svg"));
            assert!(body.ends_with("</svg>\n"));
        }
    }

    #[test]
    fn empty_rows_error() {
        let dir = tempdir().unwrap();
        assert!(matches!(emit_plots(&[], dir.path()), Err(PlotError::NoRows)));
    }

    #[test]
    fn unwritable_directory_error() {
        assert!(matches!(
            emit_plots(&rows_1x3(), Path::new("/nonexistent/dir")),
            Err(PlotError::Io { .. })
        ));
    }

    #[test]
    fn zero_runtime_is_clamped_not_dropped() {
        let mut rows = rows_1x3();
        rows[0].mean_runtime_s = 0.0;
        let svg = render_chart(&rows, ChartKind::Runtime);
        assert_eq!(svg.matches("class=\"bar\"").count(), 3);
    }
}
