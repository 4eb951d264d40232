//! Barcode plots as standalone SVG.
//!
//! One row per bar, grouped by dimension. Infinite bars run to the right
//! edge and end in an arrowhead.

use std::fmt::Write;

pub struct Bar {
    pub dim: usize,
    pub birth: f64,
    pub death: Option<f64>,
}

const WIDTH: f64 = 640.0;
const LEFT: f64 = 56.0;
const RIGHT: f64 = 24.0;
const TOP: f64 = 16.0;
const ROW: f64 = 12.0;
const GAP: f64 = 18.0;
const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

pub fn render(bars: &[Bar]) -> String {
    let lo = bars.iter().map(|b| b.birth).fold(f64::INFINITY, f64::min);
    let hi = bars
        .iter()
        .flat_map(|b| [Some(b.birth), b.death])
        .flatten()
        .fold(f64::NEG_INFINITY, f64::max);
    let (lo, hi) = if lo.is_finite() { (lo, hi.max(lo + 1.0)) } else { (0.0, 1.0) };
    // Finite bars use the plot width minus room for the arrowheads.
    let span = WIDTH - LEFT - RIGHT - 20.0;
    let x = |v: f64| LEFT + (v - lo) / (hi - lo) * span;
    let right_edge = WIDTH - RIGHT;

    let mut body = String::new();
    let mut y = TOP;
    let mut dims: Vec<usize> = bars.iter().map(|b| b.dim).collect();
    dims.sort_unstable();
    dims.dedup();
    for dim in dims {
        let color = COLORS[dim % COLORS.len()];
        writeln!(body, r#"<text x="8" y="{:.1}" font-size="11">H{dim}</text>"#, y + ROW - 2.0).unwrap();
        for b in bars.iter().filter(|b| b.dim == dim) {
            let yc = y + ROW / 2.0;
            let x0 = x(b.birth);
            match b.death {
                Some(d) => {
                    writeln!(
                        body,
                        r#"<line x1="{x0:.1}" y1="{yc:.1}" x2="{:.1}" y2="{yc:.1}" stroke="{color}" stroke-width="4"/>"#,
                        x(d).max(x0 + 1.0)
                    )
                    .unwrap();
                }
                None => {
                    let tip = right_edge;
                    writeln!(
                        body,
                        r#"<line x1="{x0:.1}" y1="{yc:.1}" x2="{:.1}" y2="{yc:.1}" stroke="{color}" stroke-width="4"/>"#,
                        tip - 8.0
                    )
                    .unwrap();
                    writeln!(
                        body,
                        r#"<polygon points="{:.1},{:.1} {tip:.1},{yc:.1} {:.1},{:.1}" fill="{color}"/>"#,
                        tip - 8.0,
                        yc - 5.0,
                        tip - 8.0,
                        yc + 5.0
                    )
                    .unwrap();
                }
            }
            y += ROW;
        }
        y += GAP;
    }
    let axis = y;
    let height = axis + 24.0;
    writeln!(
        body,
        r##"<line x1="{LEFT:.1}" y1="{axis:.1}" x2="{right_edge:.1}" y2="{axis:.1}" stroke="#444"/>"##
    )
    .unwrap();
    for v in [lo, hi] {
        writeln!(body, r#"<text x="{:.1}" y="{:.1}" font-size="10" text-anchor="middle">{v}</text>"#, x(v), axis + 14.0).unwrap();
    }
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{height:.0}\" viewBox=\"0 0 {WIDTH} {height:.0}\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{body}</svg>\n"
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinite_bars_get_an_arrowhead() {
        let s = render(&[
            Bar { dim: 0, birth: 1.0, death: None },
            Bar { dim: 0, birth: 2.0, death: Some(4.0) },
            Bar { dim: 1, birth: 6.0, death: Some(7.0) },
        ]);
        assert_eq!(s.matches("<polygon").count(), 1);
        assert_eq!(s.matches("<line").count(), 4);
        assert!(s.contains(">H1<"));
    }

    #[test]
    fn empty_barcode_is_still_a_document() {
        let s = render(&[]);
        assert!(s.starts_with("<svg") && s.ends_with("</svg>\n"));
    }
}
