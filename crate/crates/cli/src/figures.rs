//! The five standard figures as plot specifications.

use std::str::FromStr;

use tiltstab_core::bounds::{make_upsilon, make_upsilon_tilde, make_xi, Endpoint, Piece, PiecewiseCurve, Poly};
use tiltstab_core::chern::GeometryData;
use tiltstab_core::clifford::clifford_curve;
use tiltstab_core::walls::first_wall;
use tiltstab_core::{s, Error, Result, Scalar};

use crate::plot::{Panel, PlotSpec, Series, Source, Window};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure {
    /// The strong BG curve on the threefold, mirrored to `[-1, 1]`.
    Fig1,
    /// Clifford-type bounds on the curve, two panels.
    Fig2,
    /// First wall at `t = 3/2` over `Upsilon`.
    Fig3,
    /// `Upsilon` and `Upsilon~` on the quadric.
    Fig4,
    /// First wall at a chosen `t` (default `23/12`).
    Fig5,
}

impl FromStr for Figure {
    type Err = String;
    fn from_str(v: &str) -> std::result::Result<Figure, String> {
        match v {
            "fig1" => Ok(Figure::Fig1),
            "fig2" => Ok(Figure::Fig2),
            "fig3" => Ok(Figure::Fig3),
            "fig4" => Ok(Figure::Fig4),
            "fig5" => Ok(Figure::Fig5),
            _ => Err(format!("unknown figure {v:?} (expected fig1..fig5)")),
        }
    }
}

fn parabola(lo: &str, hi: &str) -> Source {
    Source::Poly { poly: Poly::new(s("0"), s("0"), s("1/2")), lo: s(lo), hi: s(hi) }
}

/// `x -> f(-x)` on the mirrored domain.
fn mirror(c: &PiecewiseCurve) -> Result<PiecewiseCurve> {
    let pieces = c
        .pieces
        .iter()
        .rev()
        .map(|p| Piece {
            lo: Endpoint { x: -&p.hi.x, closed: p.hi.closed },
            hi: Endpoint { x: -&p.lo.x, closed: p.lo.closed },
            poly: p.poly.reflect(&Scalar::zero()),
        })
        .collect();
    let overrides = c.overrides.iter().map(|(x, y)| (-x, y.clone())).collect();
    PiecewiseCurve::new(pieces, overrides)
}

/// `Xi(|x|)` on `[-1, 1]`.
pub fn xi_mirrored() -> Result<PiecewiseCurve> {
    let xi = make_xi();
    let mut left = mirror(&xi)?;
    // Xi(0) = 0 is attained by both halves; keep it on the right one.
    if let Some(last) = left.pieces.last_mut() {
        last.hi.closed = false;
    }
    let mut pieces = left.pieces;
    pieces.extend(xi.pieces.iter().cloned());
    let mut overrides = left.overrides;
    overrides.extend(xi.overrides.iter().cloned());
    PiecewiseCurve::new(pieces, overrides)
}

/// Wall panel at `t`: `Upsilon` in red, the wall in green, `alpha = beta^2 / 2` in black.
pub fn wall_panel(t: &Scalar, geom: &GeometryData) -> Result<Panel> {
    let wall = first_wall(t, geom)?;
    Ok(Panel {
        title: format!("first wall, t = {t}"),
        window: Window::new("-6", "3", "-1", "13"),
        series: vec![
            Series::new("upsilon", Source::Curve(make_upsilon(&s("-6"), &s("3"))?), "red").thick(),
            Series::new("parabola", parabola("-6", "3"), "black"),
            Series::new("wall", Source::Line(wall.line), "green"),
        ],
    })
}

/// Window around a piecewise-linear curve, padded to half-integers.
fn fit_window(c: &PiecewiseCurve) -> Window {
    let (lo, hi) = c.domain();
    let mut ys: Vec<Scalar> = c.pieces.iter().flat_map(|p| [p.poly.eval(&p.lo.x), p.poly.eval(&p.hi.x)]).collect();
    ys.extend(c.overrides.iter().map(|(_, y)| y.clone()));
    let ymin = ys.iter().min().expect("nonempty curve").clone();
    let ymax = ys.iter().max().expect("nonempty curve").clone();
    let two = Scalar::int(2);
    let y0 = &Scalar::from((&(&ymin * &two) - &Scalar::one()).floor()) / &two;
    let y1 = &Scalar::from((&(&ymax * &two) + &Scalar::one()).floor() + 1) / &two;
    Window { x0: lo.x, x1: hi.x, y0, y1 }
}

pub fn clifford_panels(geom: &GeometryData) -> Result<Vec<Panel>> {
    let mut panels = Vec::new();
    for upper in [false, true] {
        let curve = clifford_curve(geom, upper)?;
        let window = fit_window(&curve);
        panels.push(Panel {
            title: format!("Clifford bound, {} cover, t in [{}, {}]", geom.variety, window.x0, window.x1),
            window,
            series: vec![Series::new("clifford", Source::Curve(curve), "black").thick()],
        });
    }
    Ok(panels)
}

pub fn figure(fig: Figure, geom: &GeometryData, t: Option<&Scalar>, samples_per_unit: u32) -> Result<PlotSpec> {
    let panels = match fig {
        Figure::Fig1 => vec![Panel {
            title: "strong BG inequality on the threefold".into(),
            window: Window::new("-1", "1", "-1/2", "1"),
            series: vec![
                Series::new("xi", Source::Curve(xi_mirrored()?), "red").thick(),
                Series::new("parabola", parabola("-1", "1"), "black"),
            ],
        }],
        Figure::Fig2 => clifford_panels(geom)?,
        Figure::Fig3 => vec![wall_panel(t.unwrap_or(&s("3/2")), geom)?],
        Figure::Fig4 => {
            let tilde = make_upsilon_tilde(&s("-3"), &s("3"))?;
            vec![Panel {
                title: "strong BG inequality on the quadric".into(),
                window: Window::new("-3", "3", "-1", "9/2"),
                series: vec![
                    Series::new("upsilon", Source::Curve(make_upsilon(&s("-3"), &s("3"))?), "red").thick(),
                    Series::new("upsilon_tilde", Source::Curve(tilde), "blue").dashed(),
                    Series::new("parabola", parabola("-3", "3"), "black"),
                ],
            }]
        }
        Figure::Fig5 => vec![wall_panel(t.unwrap_or(&s("23/12")), geom)?],
    };
    if panels.is_empty() {
        return Err(Error::Domain("figure has no panels".into()));
    }
    let name = format!("{fig:?}").to_lowercase();
    Ok(PlotSpec { name, panels, samples_per_unit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use tiltstab_core::chern::Variety;

    #[test]
    fn mirrored_xi_is_even() {
        let c = xi_mirrored().unwrap();
        for x in ["1/8", "1/3", "5/8", "9/10", "1"] {
            assert_eq!(c.eval(&s(x)).unwrap(), c.eval(&-&s(x)).unwrap());
        }
        assert_eq!(c.eval(&s("0")).unwrap(), s("0"));
    }

    #[test]
    fn fig3_wall_line() {
        let spec = figure(Figure::Fig3, &Variety::Triple.geometry(), None, 16).unwrap();
        let wall = spec.panels[0].series.iter().find(|x| x.name == "wall").unwrap();
        match &wall.source {
            Source::Line(l) => {
                assert_eq!(l.slope, s("-3/2"));
                assert_eq!(l.intercept, s("13/4"));
            }
            _ => panic!("wall is a line"),
        }
    }

    #[test]
    fn fig5_wall_line() {
        let spec = figure(Figure::Fig5, &Variety::Triple.geometry(), None, 16).unwrap();
        let wall = spec.panels[0].series.iter().find(|x| x.name == "wall").unwrap();
        match &wall.source {
            Source::Line(l) => {
                assert_eq!(l.slope, s("-13/12"));
                assert_eq!(l.intercept, s("11/3"));
            }
            _ => panic!("wall is a line"),
        }
    }
}
