//! Dependency-free static SVG line charts.
//!
//! Plots are a visual convenience; the CSV artifacts are the contract. All
//! coordinates are formatted at fixed precision so output is byte-stable.

use crate::output::Meta;

pub struct Series<'a> {
    pub label: &'a str,
    pub color: &'a str,
    pub width: f64,
    /// (x, y) in data coordinates.
    pub points: Vec<(f64, f64)>,
}

struct Bounds {
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
}

fn bounds(series: &[Series<'_>]) -> Bounds {
    let mut b = Bounds {
        x_min: f64::INFINITY,
        x_max: f64::NEG_INFINITY,
        y_min: f64::INFINITY,
        y_max: f64::NEG_INFINITY,
    };
    for s in series {
        for &(x, y) in &s.points {
            b.x_min = b.x_min.min(x);
            b.x_max = b.x_max.max(x);
            b.y_min = b.y_min.min(y);
            b.y_max = b.y_max.max(y);
        }
    }
    if !b.x_min.is_finite() {
        b = Bounds {
            x_min: 0.0,
            x_max: 1.0,
            y_min: 0.0,
            y_max: 1.0,
        };
    }
    if b.x_max == b.x_min {
        b.x_max += 1.0;
    }
    if b.y_max == b.y_min {
        b.y_max += 1.0;
        b.y_min -= 1.0;
    }
    b
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

const W: f64 = 900.0;
const PANEL_H: f64 = 260.0;
const ML: f64 = 70.0;
const MR: f64 = 20.0;
const MT: f64 = 34.0;
const MB: f64 = 36.0;

fn panel(
    out: &mut String,
    y_offset: f64,
    title: &str,
    x_label: &str,
    series: &[Series<'_>],
) {
    let b = bounds(series);
    let plot_w = W - ML - MR;
    let plot_h = PANEL_H - MT - MB;
    let px = |x: f64| ML + (x - b.x_min) / (b.x_max - b.x_min) * plot_w;
    let py = |y: f64| y_offset + MT + (1.0 - (y - b.y_min) / (b.y_max - b.y_min)) * plot_h;

    out.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"14\" font-family=\"sans-serif\">{}</text>\n",
        ML,
        y_offset + 18.0,
        esc(title)
    ));
    // frame
    out.push_str(&format!(
        "<rect x=\"{:.1}\" y=\"{:.1}\" width=\"{:.1}\" height=\"{:.1}\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n",
        ML,
        y_offset + MT,
        plot_w,
        plot_h
    ));
    // y ticks at min, 0 (if inside), max
    let mut ticks = vec![b.y_min, b.y_max];
    if b.y_min < 0.0 && b.y_max > 0.0 {
        ticks.push(0.0);
    }
    ticks.sort_by(f64::total_cmp);
    for t in ticks {
        let y = py(t);
        out.push_str(&format!(
            "<line x1=\"{:.1}\" y1=\"{y:.1}\" x2=\"{:.1}\" y2=\"{y:.1}\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n",
            ML,
            ML + plot_w
        ));
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"end\">{:.2}</text>\n",
            ML - 6.0,
            y + 4.0,
            t
        ));
    }
    // x ticks at quarters
    for i in 0..=4 {
        let x = b.x_min + (b.x_max - b.x_min) * i as f64 / 4.0;
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"middle\">{:.0}</text>\n",
            px(x),
            y_offset + MT + plot_h + 16.0,
            x
        ));
    }
    out.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"middle\">{}</text>\n",
        ML + plot_w / 2.0,
        y_offset + MT + plot_h + 30.0,
        esc(x_label)
    ));
    // legend
    let mut lx = ML + plot_w - 10.0;
    for s in series.iter().rev() {
        let label_w = 8.0 * s.label.len() as f64 + 26.0;
        lx -= label_w;
        out.push_str(&format!(
            "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"{}\" stroke-width=\"2\"/>\n",
            lx,
            y_offset + MT + 12.0,
            lx + 18.0,
            y_offset + MT + 12.0,
            s.color
        ));
        out.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"11\" font-family=\"sans-serif\">{}</text>\n",
            lx + 22.0,
            y_offset + MT + 16.0,
            esc(s.label)
        ));
    }
    // polylines
    for s in series {
        if s.points.is_empty() {
            continue;
        }
        let mut d = String::new();
        for &(x, y) in &s.points {
            if !d.is_empty() {
                d.push(' ');
            }
            d.push_str(&format!("{:.2},{:.2}", px(x), py(y)));
        }
        out.push_str(&format!(
            "<polyline points=\"{d}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{:.1}\"/>\n",
            s.color, s.width
        ));
    }
}

/// One or more stacked panels sharing the document width.
pub fn chart(meta: &Meta, panels: &[(&str, &str, Vec<Series<'_>>)]) -> String {
    let height = PANEL_H * panels.len() as f64;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&meta.xml_comment());
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {W:.0} {height:.0}\">\n"
    ));
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    for (i, (title, x_label, series)) in panels.iter().enumerate() {
        panel(&mut out, PANEL_H * i as f64, title, x_label, series);
    }
    out.push_str("</svg>\n");
    out
}
