//! First-possible-wall geometry in the `(beta, alpha)`-plane over the quadric
//! surface, and the Brill-Noether slope bounds read off its endpoints.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::bounds::{make_upsilon, make_upsilon_tilde, upsilon, PiecewiseCurve};
use crate::chern::{GeometryData, Variety};
use crate::error::{Error, Result};
use crate::exactnum::{s, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarPoint {
    pub x: Scalar,
    pub y: Scalar,
}

impl PlanarPoint {
    pub fn new(x: Scalar, y: Scalar) -> PlanarPoint {
        PlanarPoint { x, y }
    }
}

/// Non-vertical line `y = slope * x + intercept`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarLine {
    pub slope: Scalar,
    pub intercept: Scalar,
}

impl PlanarLine {
    pub fn new(slope: Scalar, intercept: Scalar) -> PlanarLine {
        PlanarLine { slope, intercept }
    }

    /// Line of the given slope through `p`.
    pub fn through(p: &PlanarPoint, slope: Scalar) -> PlanarLine {
        let intercept = &p.y - &(&slope * &p.x);
        PlanarLine { slope, intercept }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        &(&self.slope * x) + &self.intercept
    }
}

/// The open vertical segment `L_n = {(n, y) : (n^2-1)/2 < y < n^2/2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JumpSegment {
    pub n: i64,
}

impl JumpSegment {
    pub fn lo(&self) -> Scalar {
        Scalar::frac(self.n * self.n - 1, 2)
    }

    pub fn hi(&self) -> Scalar {
        Scalar::frac(self.n * self.n, 2)
    }

    pub fn contains(&self, p: &PlanarPoint) -> bool {
        p.x == Scalar::int(self.n) && p.y > self.lo() && p.y < self.hi()
    }
}

/// Where an intersection point sits on the closure of a curve's graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Location {
    /// On the graph (or the closure of a piece).
    Curve,
    /// Strictly inside the vertical jump at an integer.
    Jump { n: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Intersection {
    pub point: PlanarPoint,
    pub location: Location,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WallType {
    /// Both endpoints on the curve.
    TypeA,
    /// At least one endpoint on a jump segment.
    TypeB,
}

/// The first possible wall for `iota_* F` and the slope bounds it implies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallEstimate {
    pub t: Scalar,
    pub line: PlanarLine,
    /// Which printed candidate dominated: `"through_t"` or `"pivot"`.
    pub candidate: String,
    pub beta_max: Scalar,
    pub alpha_max: Scalar,
    pub beta_min: Scalar,
    pub alpha_min: Scalar,
    pub max_location: Location,
    pub min_location: Location,
    pub wall_type: WallType,
    pub bn_upper: Option<Scalar>,
    pub bn_lower: Option<Scalar>,
    pub bn_stable: bool,
}

const WINDOW: i64 = 12;
/// Walls end close to the origin; most are resolved in this smaller window.
const NEAR_WINDOW: i64 = 4;

fn upsilon_tilde_window() -> &'static PiecewiseCurve {
    static CURVE: OnceLock<PiecewiseCurve> = OnceLock::new();
    CURVE.get_or_init(|| make_upsilon_tilde(&Scalar::int(-WINDOW), &Scalar::int(WINDOW)).expect("static window"))
}

fn upsilon_tilde_near() -> &'static PiecewiseCurve {
    static CURVE: OnceLock<PiecewiseCurve> = OnceLock::new();
    CURVE.get_or_init(|| make_upsilon_tilde(&Scalar::int(-NEAR_WINDOW), &Scalar::int(NEAR_WINDOW)).expect("static window"))
}

/// Nearest hits of `line` on either side of `x = 0` (right falls back to `x = 0`).
fn wall_endpoints(line: &PlanarLine, curve: &PiecewiseCurve) -> Result<(Option<Intersection>, Option<Intersection>)> {
    let hits = line_intersections_with(line, curve)?;
    // At t = 0 the wall meets the curve only on the vertical closure at x = 0.
    let right = hits
        .iter()
        .find(|h| h.point.x.is_positive())
        .or_else(|| hits.iter().find(|h| h.point.x.is_zero()))
        .cloned();
    let left = hits.iter().rev().find(|h| h.point.x.is_negative()).cloned();
    Ok((left, right))
}

/// Intersections of a line with the closure of the graph of `curve`
/// (pieces plus vertical segments at discontinuities), sorted by `x`.
/// A piece lying on the line is reported by its two closure endpoints.
pub fn line_intersections_with(line: &PlanarLine, curve: &PiecewiseCurve) -> Result<Vec<Intersection>> {
    let mut out: Vec<Intersection> = Vec::new();
    let breaks = curve.breakpoints();
    for (i, u) in breaks.iter().enumerate() {
        let ly = line.eval(u);
        let mut ys: Vec<Scalar> = [curve.left_limit(u), curve.right_limit(u), curve.eval(u).ok()]
            .into_iter()
            .flatten()
            .collect();
        ys.sort();
        if let (Some(lo), Some(hi)) = (ys.first(), ys.last()) {
            if ly >= *lo && ly <= *hi {
                let location = if ys.contains(&ly) || !u.is_integer() {
                    Location::Curve
                } else {
                    let n = u.floor().try_into().map_err(|_| Error::Domain("integer overflow".into()))?;
                    Location::Jump { n }
                };
                out.push(Intersection { point: PlanarPoint::new(u.clone(), ly), location });
            }
        }
        if let Some(v) = breaks.get(i + 1) {
            let mid = &(u + v) / &Scalar::int(2);
            let k = curve.pieces.partition_point(|p| p.hi.x <= mid);
            let Some(piece) = curve.pieces.get(k).filter(|p| p.lo.x < mid) else {
                continue;
            };
            let h = crate::bounds::Poly::linear(line.slope.clone(), line.intercept.clone()).sub(&piece.poly);
            for x in h.roots_in(u, v)? {
                let y = line.eval(&x);
                out.push(Intersection { point: PlanarPoint::new(x, y), location: Location::Curve });
            }
        }
    }
    out.sort_by(|a, b| a.point.x.cmp(&b.point.x));
    out.dedup_by(|a, b| a.point.x == b.point.x);
    Ok(out)
}

/// Intersections of a line with `Upsilon` and the jump segments `L_n` on `[lo, hi]`.
pub fn line_curve_intersections(line: &PlanarLine, lo: &Scalar, hi: &Scalar) -> Result<Vec<PlanarPoint>> {
    let curve = make_upsilon(lo, hi)?;
    Ok(line_intersections_with(line, &curve)?.into_iter().map(|i| i.point).collect())
}

fn check_t(t: &Scalar) -> Result<()> {
    let ok = (!t.is_negative() && *t <= s("1/2")) || (*t >= s("3/2") && *t <= Scalar::int(2));
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(format!("t = {t} outside [0,1/2] u [3/2,2]")))
    }
}

/// The candidate first-wall lines: through `(t, Upsilon(t))`, and for
/// `t >= 3/2` also through the pivot `(-(w-2), Upsilon(-(w-2)))`.
pub fn first_wall_candidates(t: &Scalar, geom: &GeometryData) -> Result<Vec<(String, PlanarLine)>> {
    check_t(t)?;
    let slope = t - &geom.bn_offset;
    let mut out = vec![(
        "through_t".to_string(),
        PlanarLine::through(&PlanarPoint::new(t.clone(), t - &s("1/2")), slope.clone()),
    )];
    if *t >= s("3/2") {
        let px = &Scalar::int(2) - &geom.wall_width;
        let py = upsilon(&px);
        out.push(("pivot".to_string(), PlanarLine::through(&PlanarPoint::new(px, py), slope)));
    }
    Ok(out)
}

/// First possible wall: the dominating candidate and its endpoints on `Upsilon~`.
pub fn first_wall(t: &Scalar, geom: &GeometryData) -> Result<WallEstimate> {
    let cands = first_wall_candidates(t, geom)?;
    let (candidate, line) = cands
        .into_iter()
        .reduce(|a, b| if b.1.intercept > a.1.intercept { b } else { a })
        .expect("at least one candidate");
    // Hits strictly inside the near window agree with the full window.
    let edge = Scalar::int(NEAR_WINDOW);
    let inside = |h: &Option<Intersection>| h.as_ref().is_some_and(|h| h.point.x.abs() < edge);
    let (mut left, mut right) = wall_endpoints(&line, upsilon_tilde_near())?;
    if !inside(&left) || !inside(&right) {
        (left, right) = wall_endpoints(&line, upsilon_tilde_window())?;
    }
    let right = right.ok_or_else(|| Error::Domain("no right endpoint in window".into()))?;
    let left = left.ok_or_else(|| Error::Domain("no left endpoint in window".into()))?;
    let bn_stable = !line.intercept.is_positive();
    let wall_type = if right.location == Location::Curve && left.location == Location::Curve {
        WallType::TypeA
    } else {
        WallType::TypeB
    };
    let (bn_upper, bn_lower) = if bn_stable {
        (None, None)
    } else {
        (Some(&right.point.y / &right.point.x), Some(&left.point.y / &left.point.x))
    };
    Ok(WallEstimate {
        t: t.clone(),
        line,
        candidate,
        beta_max: right.point.x.clone(),
        alpha_max: right.point.y.clone(),
        beta_min: left.point.x.clone(),
        alpha_min: left.point.y.clone(),
        max_location: right.location.clone(),
        min_location: left.location.clone(),
        wall_type,
        bn_upper,
        bn_lower,
        bn_stable,
    })
}

/// Right end of the BN-stable range: `2 - sqrt(14)/2` or `(5 - sqrt(23))/2`.
pub fn bn_stable_limit(geom: &GeometryData) -> Scalar {
    match geom.variety {
        Variety::Triple => s("2-1/2*sqrt(14)"),
        Variety::Double => s("5/2-1/2*sqrt(23)"),
    }
}

/// Branch points `(upper_1, upper_2, lower)`: `sqrt(14)/2, 23/12, 11/6` or
/// `(sqrt(23)-1)/2, 31/16, 15/8`.
pub fn bn_junctions(geom: &GeometryData) -> (Scalar, Scalar, Scalar) {
    match geom.variety {
        Variety::Triple => (s("1/2*sqrt(14)"), s("23/12"), s("11/6")),
        Variety::Double => (s("-1/2+1/2*sqrt(23)"), s("31/16"), s("15/8")),
    }
}

/// Printed upper bound on `nu^+_BN(iota_* F)`; `None` on the BN-stable range.
pub fn bn_upper_bound(t: &Scalar, geom: &GeometryData) -> Result<Option<Scalar>> {
    check_t(t)?;
    if *t <= bn_stable_limit(geom) {
        return Ok(None);
    }
    let (j1, j2, _) = bn_junctions(geom);
    let one = Scalar::one();
    let v = if *t <= j1 {
        &one - &(&one / &(&Scalar::int(2) * t))
    } else if *t <= j2 {
        // (-9t+11)/(-8t+7) or (-13t+16)/(-12t+11)
        let (a, b, c, d) = match geom.variety {
            Variety::Triple => (-9, 11, -8, 7),
            Variety::Double => (-13, 16, -12, 11),
        };
        &(&(&Scalar::int(a) * t) + &Scalar::int(b)) / &(&(&Scalar::int(c) * t) + &Scalar::int(d))
    } else {
        // 3t - 5 or 4t - 7
        let (a, b) = match geom.variety {
            Variety::Triple => (3, -5),
            Variety::Double => (4, -7),
        };
        &(&Scalar::int(a) * t) + &Scalar::int(b)
    };
    Ok(Some(v))
}

/// Printed lower bound on `nu^-_BN(iota_* F)`; `None` on the BN-stable range.
pub fn bn_lower_bound(t: &Scalar, geom: &GeometryData) -> Result<Option<Scalar>> {
    check_t(t)?;
    if *t <= bn_stable_limit(geom) {
        return Ok(None);
    }
    let (_, _, j) = bn_junctions(geom);
    // -k(2t - k - 2) / (2(t - 2k + ... )): -5(2t-7)/(2(t-6)) or -7(2t-9)/(2(t-8))
    let (k, c, m, floor) = match geom.variety {
        Variety::Triple => (5, 7, 6, -2),
        Variety::Double => (7, 9, 8, -3),
    };
    let v = if *t <= j {
        let num = &Scalar::int(-k) * &(&(&Scalar::int(2) * t) - &Scalar::int(c));
        let den = &Scalar::int(2) * &(t - &Scalar::int(m));
        &num / &den
    } else {
        Scalar::int(floor)
    };
    Ok(Some(v))
}

/// `beta2 - beta1 <= wall_width` for a wall with `beta1 < 0 < beta2`.
pub fn wall_width_check(beta1: &Scalar, beta2: &Scalar, geom: &GeometryData) -> Result<bool> {
    if !(beta1.is_negative() && beta2.is_positive()) {
        return Err(Error::Domain("need beta1 < 0 < beta2".into()));
    }
    Ok(beta2 - beta1 <= geom.wall_width)
}
