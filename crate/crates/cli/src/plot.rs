//! Plot specifications rendered either as SVG (float coordinates) or as
//! exact CSV samples.

use std::fmt::Write;

use tiltstab_core::bounds::{grid, PiecewiseCurve, Poly};
use tiltstab_core::walls::PlanarLine;
use tiltstab_core::{Error, Result, Scalar};

const PANEL_W: f64 = 640.0;
const PANEL_H: f64 = 480.0;
const MARGIN: f64 = 32.0;

/// Exact data behind one plotted series.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Source {
    Curve(PiecewiseCurve),
    Line(PlanarLine),
    /// A polynomial restricted to `[lo, hi]`.
    Poly { poly: Poly, lo: Scalar, hi: Scalar },
}

#[derive(Clone, Debug)]
pub struct Series {
    pub name: String,
    pub source: Source,
    pub color: &'static str,
    pub width: f64,
    pub dashed: bool,
}

impl Series {
    pub fn new(name: &str, source: Source, color: &'static str) -> Series {
        Series { name: name.to_string(), source, color, width: 1.0, dashed: false }
    }

    pub fn thick(mut self) -> Series {
        self.width = 2.0;
        self
    }

    pub fn dashed(mut self) -> Series {
        self.dashed = true;
        self
    }
}

/// Axis-aligned window `[x0, x1] x [y0, y1]`.
#[derive(Clone, Debug)]
pub struct Window {
    pub x0: Scalar,
    pub x1: Scalar,
    pub y0: Scalar,
    pub y1: Scalar,
}

impl Window {
    pub fn new(x0: &str, x1: &str, y0: &str, y1: &str) -> Window {
        let p = |t: &str| t.parse::<Scalar>().expect("static window");
        Window { x0: p(x0), x1: p(x1), y0: p(y0), y1: p(y1) }
    }
}

#[derive(Clone, Debug)]
pub struct Panel {
    pub title: String,
    pub window: Window,
    pub series: Vec<Series>,
}

#[derive(Clone, Debug)]
pub struct PlotSpec {
    pub name: String,
    pub panels: Vec<Panel>,
    pub samples_per_unit: u32,
}

impl PlotSpec {
    pub fn validate(&self) -> Result<()> {
        if self.samples_per_unit < 8 {
            return Err(Error::Domain("samples_per_unit must be at least 8".into()));
        }
        for p in &self.panels {
            if p.window.x0 >= p.window.x1 || p.window.y0 >= p.window.y1 {
                return Err(Error::Domain(format!("empty window in panel {:?}", p.title)));
            }
        }
        Ok(())
    }
}

/// Fixed-precision float formatting with trailing zeros trimmed.
pub fn fmt_f(v: f64) -> String {
    let s = format!("{v:.9}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn poly_f64(p: &Poly, x: f64) -> f64 {
    let c: Vec<f64> = p.c.iter().map(Scalar::to_f64).collect();
    (c[2] * x + c[1]) * x + c[0]
}

/// Sub-interval of `[lo, hi]` inside `[wlo, whi]`.
fn clamp(lo: &Scalar, hi: &Scalar, wlo: &Scalar, whi: &Scalar) -> Option<(Scalar, Scalar)> {
    let a = lo.clone().max(wlo.clone());
    let b = hi.clone().min(whi.clone());
    (a < b).then_some((a, b))
}

fn sample_poly(p: &Poly, lo: &Scalar, hi: &Scalar, spu: u32) -> Vec<(f64, f64)> {
    let (a, b) = (lo.to_f64(), hi.to_f64());
    let n = (((b - a) * spu as f64).ceil() as usize).max(1);
    (0..=n)
        .map(|i| {
            let x = a + (b - a) * i as f64 / n as f64;
            (x, poly_f64(p, x))
        })
        .collect()
}

type Polyline = Vec<(f64, f64)>;

/// Float polylines and isolated points of a series inside the window.
fn geometry(s: &Series, w: &Window, spu: u32) -> (Vec<Polyline>, Polyline) {
    match &s.source {
        Source::Curve(c) => {
            let mut lines = Vec::new();
            for piece in &c.pieces {
                if let Some((a, b)) = clamp(&piece.lo.x, &piece.hi.x, &w.x0, &w.x1) {
                    lines.push(sample_poly(&piece.poly, &a, &b, spu));
                }
            }
            let points = c
                .overrides
                .iter()
                .filter(|(x, _)| *x >= w.x0 && *x <= w.x1)
                .map(|(x, y)| (x.to_f64(), y.to_f64()))
                .collect();
            (lines, points)
        }
        Source::Line(l) => {
            let p = Poly::linear(l.slope.clone(), l.intercept.clone());
            (vec![sample_poly(&p, &w.x0, &w.x1, spu)], Vec::new())
        }
        Source::Poly { poly, lo, hi } => match clamp(lo, hi, &w.x0, &w.x1) {
            Some((a, b)) => (vec![sample_poly(poly, &a, &b, spu)], Vec::new()),
            None => (Vec::new(), Vec::new()),
        },
    }
}

struct Frame {
    ox: f64,
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        self.ox + MARGIN + (x - self.x0) / (self.x1 - self.x0) * (PANEL_W - 2.0 * MARGIN)
    }

    fn py(&self, y: f64) -> f64 {
        PANEL_H - MARGIN - (y - self.y0) / (self.y1 - self.y0) * (PANEL_H - 2.0 * MARGIN)
    }
}

pub fn render_svg(spec: &PlotSpec, header: &str) -> Result<String> {
    spec.validate()?;
    let width = PANEL_W * spec.panels.len() as f64;
    let mut out = String::new();
    let _ = writeln!(out, "<!-- {header} -->");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {} {}" width="{}" height="{}">"#,
        fmt_f(width),
        fmt_f(PANEL_H),
        fmt_f(width),
        fmt_f(PANEL_H)
    );
    let _ = writeln!(out, "<title>{}</title>", spec.name);
    for (i, panel) in spec.panels.iter().enumerate() {
        let w = &panel.window;
        let f = Frame { ox: PANEL_W * i as f64, x0: w.x0.to_f64(), x1: w.x1.to_f64(), y0: w.y0.to_f64(), y1: w.y1.to_f64() };
        let (l, t) = (f.px(f.x0), f.py(f.y1));
        let (r, b) = (f.px(f.x1), f.py(f.y0));
        let _ = writeln!(out, r#"<g id="panel{i}">"#);
        let _ = writeln!(
            out,
            r#"<clipPath id="clip{i}"><rect x="{}" y="{}" width="{}" height="{}"/></clipPath>"#,
            fmt_f(l),
            fmt_f(t),
            fmt_f(r - l),
            fmt_f(b - t)
        );
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="14" text-anchor="middle">{}</text>"#,
            fmt_f((l + r) / 2.0),
            fmt_f(MARGIN / 2.0 + 4.0),
            panel.title
        );
        // Axes through the origin when it is visible, else along the window edges.
        let ax = if f.x0 <= 0.0 && 0.0 <= f.x1 { f.px(0.0) } else { l };
        let ay = if f.y0 <= 0.0 && 0.0 <= f.y1 { f.py(0.0) } else { b };
        let _ = writeln!(
            out,
            r#"<path d="M{} {} L{} {} M{} {} L{} {}" stroke="gray" stroke-width="0.75" fill="none"/>"#,
            fmt_f(l),
            fmt_f(ay),
            fmt_f(r),
            fmt_f(ay),
            fmt_f(ax),
            fmt_f(b),
            fmt_f(ax),
            fmt_f(t)
        );
        let _ = writeln!(out, r#"<g clip-path="url(#clip{i})">"#);
        for s in &panel.series {
            let (lines, points) = geometry(s, w, spec.samples_per_unit);
            let dash = if s.dashed { r#" stroke-dasharray="6 4""# } else { "" };
            for line in lines {
                let mut d = String::new();
                for (k, (x, y)) in line.iter().enumerate() {
                    let _ = write!(d, "{}{} {}", if k == 0 { "M" } else { " L" }, fmt_f(f.px(*x)), fmt_f(f.py(*y)));
                }
                let _ = writeln!(
                    out,
                    r#"<path class="{}" d="{d}" stroke="{}" stroke-width="{}" fill="none"{dash}/>"#,
                    s.name,
                    s.color,
                    fmt_f(s.width)
                );
            }
            for (x, y) in points {
                let _ = writeln!(
                    out,
                    r#"<circle class="{}" cx="{}" cy="{}" r="2.5" fill="{}"/>"#,
                    s.name,
                    fmt_f(f.px(x)),
                    fmt_f(f.py(y)),
                    s.color
                );
            }
        }
        let _ = writeln!(out, "</g>\n</g>");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Exact samples `panel,series,x,y` on the grid of step `1 / samples_per_unit`.
pub fn render_csv(spec: &PlotSpec, header: &str) -> Result<String> {
    spec.validate()?;
    let step = Scalar::frac(1, spec.samples_per_unit as i64);
    let mut out = format!("# {header}\npanel,series,x,y\n");
    for (i, panel) in spec.panels.iter().enumerate() {
        let w = &panel.window;
        for s in &panel.series {
            let (lo, hi) = match &s.source {
                Source::Curve(c) => {
                    let (a, b) = c.domain();
                    (a.x, b.x)
                }
                Source::Line(_) => (w.x0.clone(), w.x1.clone()),
                Source::Poly { lo, hi, .. } => (lo.clone(), hi.clone()),
            };
            let Some((lo, hi)) = clamp(&lo, &hi, &w.x0, &w.x1) else { continue };
            for x in grid(&lo, &hi, &step) {
                let y = match &s.source {
                    Source::Curve(c) => match c.eval(&x) {
                        Ok(y) => y,
                        Err(_) => continue,
                    },
                    Source::Line(l) => l.eval(&x),
                    Source::Poly { poly, .. } => poly.eval(&x),
                };
                let _ = writeln!(out, "{i},{},{x},{y}", s.name);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tiltstab_core::s;

    #[test]
    fn float_format() {
        assert_eq!(fmt_f(1.5), "1.5");
        assert_eq!(fmt_f(-0.0000000001), "0");
        assert_eq!(fmt_f(2.0), "2");
        assert_eq!(fmt_f(1.0 / 3.0), "0.333333333");
    }

    #[test]
    fn csv_is_exact() {
        let spec = PlotSpec {
            name: "t".into(),
            panels: vec![Panel {
                title: "p".into(),
                window: Window::new("0", "1", "-1", "1"),
                series: vec![Series::new(
                    "half",
                    Source::Poly { poly: Poly::new(s("0"), s("0"), s("1/2")), lo: s("0"), hi: s("1") },
                    "black",
                )],
            }],
            samples_per_unit: 8,
        };
        let csv = render_csv(&spec, "h").unwrap();
        assert!(csv.contains("0,half,1/8,1/128\n"));
        assert_eq!(csv.lines().count(), 2 + 9);
    }

    #[test]
    fn rejects_coarse_sampling() {
        let spec = PlotSpec { name: "t".into(), panels: vec![], samples_per_unit: 4 };
        assert!(render_svg(&spec, "h").is_err());
    }
}
