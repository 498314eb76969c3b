//! Exact piecewise-polynomial curves (degree at most two) and the named bound
//! functions: the strong BG curve `Xi`, the quadric-surface curve `Upsilon`,
//! its star-shaped hull `Upsilon~`, and the section bound `Omega`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// `c[0] + c[1] x + c[2] x^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poly {
    pub c: [Scalar; 3],
}

impl Poly {
    pub fn new(c0: Scalar, c1: Scalar, c2: Scalar) -> Poly {
        Poly { c: [c0, c1, c2] }
    }

    pub fn constant(c0: Scalar) -> Poly {
        Poly::new(c0, Scalar::zero(), Scalar::zero())
    }

    /// `slope * x + intercept`.
    pub fn linear(slope: Scalar, intercept: Scalar) -> Poly {
        Poly::new(intercept, slope, Scalar::zero())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        &(&(&self.c[2] * x) + &self.c[1]) * x + &self.c[0]
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        Poly::new(&self.c[0] - &o.c[0], &self.c[1] - &o.c[1], &self.c[2] - &o.c[2])
    }

    pub fn add(&self, o: &Poly) -> Poly {
        Poly::new(&self.c[0] + &o.c[0], &self.c[1] + &o.c[1], &self.c[2] + &o.c[2])
    }

    pub fn scale(&self, k: &Scalar) -> Poly {
        Poly::new(k * &self.c[0], k * &self.c[1], k * &self.c[2])
    }

    /// `p(k - x)` as a polynomial in `x`.
    pub fn reflect(&self, k: &Scalar) -> Poly {
        // c0 + c1 (k - x) + c2 (k - x)^2
        let c2 = self.c[2].clone();
        let c1 = &(-&self.c[1]) - &(&(&Scalar::int(2) * k) * &self.c[2]);
        let c0 = &(&self.c[0] + &(&self.c[1] * k)) + &(&self.c[2] * &(k * k));
        Poly::new(c0, c1, c2)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    /// Real roots in the open interval `(lo, hi)`, sorted.
    pub fn roots_in(&self, lo: &Scalar, hi: &Scalar) -> Result<Vec<Scalar>> {
        let [c0, c1, c2] = &self.c;
        let mut roots = Vec::new();
        if c2.is_zero() {
            if !c1.is_zero() {
                roots.push(&(-c0) / c1);
            }
        } else {
            let disc = &(c1 * c1) - &(&Scalar::int(4) * &(c0 * c2));
            if !disc.is_negative() {
                let sq = Scalar::sqrt_rational(&disc)?;
                let two_a = &Scalar::int(2) * c2;
                let r1 = &(&(-c1) - &sq) / &two_a;
                let r2 = &(&(-c1) + &sq) / &two_a;
                roots.push(r1);
                if !sq.is_zero() {
                    roots.push(r2);
                }
            }
        }
        let mut roots: Vec<Scalar> = roots.into_iter().filter(|r| r > lo && r < hi).collect();
        roots.sort();
        Ok(roots)
    }
}

/// An interval endpoint with its open/closed flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Endpoint {
    pub x: Scalar,
    pub closed: bool,
}

impl Endpoint {
    pub fn closed(x: Scalar) -> Endpoint {
        Endpoint { x, closed: true }
    }

    pub fn open(x: Scalar) -> Endpoint {
        Endpoint { x, closed: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Piece {
    pub lo: Endpoint,
    pub hi: Endpoint,
    pub poly: Poly,
}

impl Piece {
    pub fn contains(&self, x: &Scalar) -> bool {
        let above = match x.cmp(&self.lo.x) {
            Ordering::Greater => true,
            Ordering::Equal => self.lo.closed,
            Ordering::Less => false,
        };
        let below = match x.cmp(&self.hi.x) {
            Ordering::Less => true,
            Ordering::Equal => self.hi.closed,
            Ordering::Greater => false,
        };
        above && below
    }
}

/// Piecewise polynomial function with isolated point values.
///
/// Pieces are consecutive and disjoint; a junction point belongs to exactly
/// one adjacent piece or carries an override.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiecewiseCurve {
    pub pieces: Vec<Piece>,
    pub overrides: Vec<(Scalar, Scalar)>,
}

impl PiecewiseCurve {
    /// Validates consecutiveness and disjointness.
    pub fn new(pieces: Vec<Piece>, mut overrides: Vec<(Scalar, Scalar)>) -> Result<PiecewiseCurve> {
        if pieces.is_empty() {
            return Err(Error::Domain("empty curve".into()));
        }
        for p in &pieces {
            if p.lo.x > p.hi.x || (p.lo.x == p.hi.x && !(p.lo.closed && p.hi.closed)) {
                return Err(Error::Domain(format!("degenerate piece at {}", p.lo.x)));
            }
        }
        for w in pieces.windows(2) {
            if w[0].hi.x != w[1].lo.x {
                return Err(Error::Domain(format!("gap between {} and {}", w[0].hi.x, w[1].lo.x)));
            }
            if w[0].hi.closed && w[1].lo.closed {
                return Err(Error::Domain(format!("overlapping pieces at {}", w[0].hi.x)));
            }
        }
        overrides.sort_by(|a, b| a.0.cmp(&b.0));
        let curve = PiecewiseCurve { pieces, overrides };
        for w in curve.pieces.windows(2) {
            let x = &w[0].hi.x;
            if !w[0].hi.closed && !w[1].lo.closed && curve.override_at(x).is_none() {
                return Err(Error::Domain(format!("point {x} not covered")));
            }
        }
        Ok(curve)
    }

    /// Builds a curve from sorted breakpoints, one polynomial per open cell and
    /// a value per breakpoint (`None` = excluded domain end), then normalizes:
    /// point values that match a one-sided limit close that piece, equal
    /// adjacent pieces merge, and only genuine isolated values stay overrides.
    pub fn from_cells(
        breaks: Vec<Scalar>,
        polys: Vec<Poly>,
        values: Vec<Option<Scalar>>,
    ) -> Result<PiecewiseCurve> {
        if breaks.len() < 2 || polys.len() + 1 != breaks.len() || values.len() != breaks.len() {
            return Err(Error::Domain("inconsistent cell data".into()));
        }
        let k = polys.len();
        let mut lo_closed = vec![false; k];
        let mut hi_closed = vec![false; k];
        let mut overrides = Vec::new();
        for (i, v) in values.iter().enumerate() {
            let Some(v) = v else { continue };
            let x = &breaks[i];
            if i > 0 && polys[i - 1].eval(x) == *v {
                hi_closed[i - 1] = true;
            } else if i < k && polys[i].eval(x) == *v {
                lo_closed[i] = true;
            } else {
                overrides.push((x.clone(), v.clone()));
            }
        }
        // Merge adjacent cells with equal polynomials joined continuously.
        let mut pieces: Vec<Piece> = Vec::new();
        for i in 0..k {
            let piece = Piece {
                lo: Endpoint { x: breaks[i].clone(), closed: lo_closed[i] },
                hi: Endpoint { x: breaks[i + 1].clone(), closed: hi_closed[i] },
                poly: polys[i].clone(),
            };
            if let Some(last) = pieces.last_mut() {
                if last.poly == piece.poly && (last.hi.closed || piece.lo.closed) {
                    last.hi = piece.hi;
                    continue;
                }
            }
            pieces.push(piece);
        }
        PiecewiseCurve::new(pieces, overrides)
    }

    /// Tabulates a function given cell-wise by polynomials and pointwise by `value`.
    pub fn from_fn_cells(
        breaks: Vec<Scalar>,
        cell_poly: impl Fn(&Scalar) -> Poly,
        value: impl Fn(&Scalar) -> Option<Scalar>,
    ) -> Result<PiecewiseCurve> {
        let two = Scalar::int(2);
        let polys = breaks.windows(2).map(|w| cell_poly(&(&(&w[0] + &w[1]) / &two))).collect();
        let values = breaks.iter().map(&value).collect();
        PiecewiseCurve::from_cells(breaks, polys, values)
    }

    pub fn domain(&self) -> (Endpoint, Endpoint) {
        let lo = self.pieces[0].lo.clone();
        let hi = self.pieces[self.pieces.len() - 1].hi.clone();
        let lo_closed = lo.closed || self.override_at(&lo.x).is_some();
        let hi_closed = hi.closed || self.override_at(&hi.x).is_some();
        (Endpoint { x: lo.x, closed: lo_closed }, Endpoint { x: hi.x, closed: hi_closed })
    }

    fn override_at(&self, x: &Scalar) -> Option<&Scalar> {
        self.overrides
            .binary_search_by(|(k, _)| k.cmp(x))
            .ok()
            .map(|i| &self.overrides[i].1)
    }

    /// Exact value at `x`, honouring isolated point values.
    pub fn eval(&self, x: &Scalar) -> Result<Scalar> {
        if let Some(v) = self.override_at(x) {
            return Ok(v.clone());
        }
        let idx = self.pieces.partition_point(|p| p.hi.x < *x);
        for p in self.pieces[idx..].iter().take(2) {
            if p.contains(x) {
                return Ok(p.poly.eval(x));
            }
        }
        Err(Error::Domain(format!("{x} outside the curve domain")))
    }

    /// Limit from the left at `x` (requires a piece ending at or beyond `x`).
    pub fn left_limit(&self, x: &Scalar) -> Option<Scalar> {
        let k = self.pieces.partition_point(|p| p.hi.x < *x);
        self.pieces.get(k).filter(|p| p.lo.x < *x).map(|p| p.poly.eval(x))
    }

    pub fn right_limit(&self, x: &Scalar) -> Option<Scalar> {
        let k = self.pieces.partition_point(|p| p.hi.x <= *x);
        self.pieces.get(k).filter(|p| p.lo.x <= *x).map(|p| p.poly.eval(x))
    }

    /// All piece endpoints and override points, sorted and deduplicated.
    pub fn breakpoints(&self) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = self
            .pieces
            .iter()
            .flat_map(|p| [p.lo.x.clone(), p.hi.x.clone()])
            .chain(self.overrides.iter().map(|(x, _)| x.clone()))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// The polynomial valid on an open cell containing `mid`.
    fn poly_at(&self, mid: &Scalar) -> Option<&Poly> {
        let k = self.pieces.partition_point(|p| p.hi.x <= *mid);
        self.pieces.get(k).filter(|p| p.lo.x < *mid).map(|p| &p.poly)
    }

    /// Pointwise maximum of two curves on their common domain.
    ///
    /// Crossings inside a cell must be expressible in the current number
    /// field (always the case for the linear pieces used here).
    pub fn pointwise_max(&self, other: &PiecewiseCurve) -> Result<PiecewiseCurve> {
        let (grid, lo, hi) = common_grid(self, other)?;
        let two = Scalar::int(2);
        let mut breaks = Vec::new();
        let mut polys = Vec::new();
        for w in grid.windows(2) {
            let mid = &(&w[0] + &w[1]) / &two;
            let f = self.poly_at(&mid).expect("cell inside domain");
            let g = other.poly_at(&mid).expect("cell inside domain");
            let h = f.sub(g);
            let mut cuts = vec![w[0].clone()];
            cuts.extend(h.roots_in(&w[0], &w[1])?);
            cuts.push(w[1].clone());
            for c in cuts.windows(2) {
                let m = &(&c[0] + &c[1]) / &two;
                breaks.push(c[0].clone());
                polys.push(if h.eval(&m).is_negative() { g.clone() } else { f.clone() });
            }
        }
        breaks.push(grid[grid.len() - 1].clone());
        let values = breaks
            .iter()
            .map(|x| {
                let at_end_excluded = (x == &lo.x && !lo.closed) || (x == &hi.x && !hi.closed);
                if at_end_excluded {
                    return None;
                }
                match (self.eval(x), other.eval(x)) {
                    (Ok(a), Ok(b)) => Some(a.max(b)),
                    _ => None,
                }
            })
            .collect();
        PiecewiseCurve::from_cells(breaks, polys, values)
    }
}

fn common_grid(f: &PiecewiseCurve, g: &PiecewiseCurve) -> Result<(Vec<Scalar>, Endpoint, Endpoint)> {
    let (flo, fhi) = f.domain();
    let (glo, ghi) = g.domain();
    let lo = match flo.x.cmp(&glo.x) {
        Ordering::Greater => flo,
        Ordering::Less => glo,
        Ordering::Equal => Endpoint { x: flo.x, closed: flo.closed && glo.closed },
    };
    let hi = match fhi.x.cmp(&ghi.x) {
        Ordering::Less => fhi,
        Ordering::Greater => ghi,
        Ordering::Equal => Endpoint { x: fhi.x, closed: fhi.closed && ghi.closed },
    };
    if lo.x >= hi.x {
        return Err(Error::Domain("curves have no common domain".into()));
    }
    let mut grid: Vec<Scalar> = f
        .breakpoints()
        .into_iter()
        .chain(g.breakpoints())
        .filter(|x| *x >= lo.x && *x <= hi.x)
        .collect();
    grid.push(lo.x.clone());
    grid.push(hi.x.clone());
    grid.sort();
    grid.dedup();
    Ok((grid, lo, hi))
}

/// Outcome of an exact comparison `f <= g` over a domain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dominance {
    /// `f(x) <= g(x)` for every `x` in the domain.
    pub leq: bool,
    /// Some `x` with `f(x) > g(x)`.
    pub witness: Option<Scalar>,
    /// Some `x` with `f(x) = g(x)`; absent iff the inequality is strict.
    pub touch: Option<Scalar>,
}

impl Dominance {
    pub fn strict(&self) -> bool {
        self.leq && self.touch.is_none()
    }
}

/// Exact decision of `f <= g` on the common domain.
pub fn curve_leq(f: &PiecewiseCurve, g: &PiecewiseCurve) -> Result<Dominance> {
    let (_, lo, hi) = common_grid(f, g)?;
    curve_leq_on(f, g, &lo, &hi)
}

/// Exact decision of `f <= g` on the interval between `lo` and `hi`
/// (endpoint flags respected), by quadratic sign analysis on each cell of
/// the common refinement plus exact comparison at every breakpoint.
pub fn curve_leq_on(f: &PiecewiseCurve, g: &PiecewiseCurve, lo: &Endpoint, hi: &Endpoint) -> Result<Dominance> {
    let (grid, _, _) = common_grid(f, g)?;
    let mut grid: Vec<Scalar> = grid.into_iter().filter(|x| *x >= lo.x && *x <= hi.x).collect();
    grid.push(lo.x.clone());
    grid.push(hi.x.clone());
    grid.sort();
    grid.dedup();
    let two = Scalar::int(2);
    let mut touch = None;
    for w in grid.windows(2) {
        let (u, v) = (&w[0], &w[1]);
        let mid = &(u + v) / &two;
        let (Some(fp), Some(gp)) = (f.poly_at(&mid), g.poly_at(&mid)) else {
            return Err(Error::Domain(format!("cell ({u}, {v}) outside a curve domain")));
        };
        let h = fp.sub(gp);
        if h.is_zero() {
            touch.get_or_insert(mid);
            continue;
        }
        let hu = h.eval(u);
        let hv = h.eval(v);
        let vertex = if h.c[2].is_negative() {
            let xv = &(-&h.c[1]) / &(&two * &h.c[2]);
            (xv > *u && xv < *v).then_some(xv)
        } else {
            None
        };
        if let Some(xv) = &vertex {
            let hx = h.eval(xv);
            if hx.is_positive() {
                return Ok(Dominance { leq: false, witness: Some(xv.clone()), touch: None });
            }
            if hx.is_zero() {
                touch.get_or_insert(xv.clone());
            }
        }
        if hu.is_positive() || hv.is_positive() {
            // A one-sided limit is positive; walk towards that end.
            let (end, mut x) = if hu.is_positive() { (u, mid.clone()) } else { (v, mid.clone()) };
            while !h.eval(&x).is_positive() {
                x = &(&x + end) / &two;
            }
            return Ok(Dominance { leq: false, witness: Some(x), touch: None });
        }
    }
    for x in &grid {
        let inside = (x > &lo.x || lo.closed) && (x < &hi.x || hi.closed);
        if !inside {
            continue;
        }
        let fx = f.eval(x)?;
        let gx = g.eval(x)?;
        match fx.cmp(&gx) {
            Ordering::Greater => return Ok(Dominance { leq: false, witness: Some(x.clone()), touch: None }),
            Ordering::Equal => {
                touch.get_or_insert(x.clone());
            }
            Ordering::Less => {}
        }
    }
    Ok(Dominance { leq: true, witness: None, touch })
}

/// The strong BG curve on `[0, 1]`.
pub fn make_xi() -> PiecewiseCurve {
    let f = Scalar::frac;
    let breaks = vec![f(0, 1), f(1, 4), f(1, 2), f(3, 4), f(1, 1)];
    let polys = vec![
        Poly::new(f(0, 1), f(-1, 1), f(1, 1)),
        Poly::linear(f(3, 4), f(-3, 8)),
        Poly::linear(f(1, 4), f(-1, 8)),
        Poly::new(f(-1, 2), f(0, 1), f(1, 1)),
    ];
    for (i, x) in breaks.iter().enumerate().take(4).skip(1) {
        assert_eq!(polys[i - 1].eval(x), polys[i].eval(x), "Xi must be continuous at {x}");
    }
    let values = breaks
        .iter()
        .enumerate()
        .map(|(i, x)| Some(polys[i.min(3)].eval(x)))
        .collect();
    PiecewiseCurve::from_cells(breaks, polys, values).expect("Xi is well formed")
}

/// `Xi(t)` evaluated directly.
pub fn xi(t: &Scalar) -> Result<Scalar> {
    make_xi().eval(t)
}

/// `Upsilon(x)` evaluated directly from its definition.
pub fn upsilon(x: &Scalar) -> Scalar {
    let half = Scalar::frac(1, 2);
    let fr = x.fract();
    let x2 = &(x * x) * &half;
    if fr.is_zero() {
        x2
    } else if fr <= half {
        let u = &Scalar::one() - &fr;
        &x2 - &(&(&u * &u) * &half)
    } else {
        &x2 - &(&(&fr * &fr) * &half)
    }
}

/// `Upsilon~(x) = Upsilon(x)` for `|x| <= 1`, else `max(Upsilon(x), floor(|x|) |x| / 2)`.
pub fn upsilon_tilde(x: &Scalar) -> Scalar {
    let ax = x.abs();
    let u = upsilon(x);
    if ax <= Scalar::one() {
        return u;
    }
    let star = &(&Scalar::from(ax.floor()) * &ax) / &Scalar::int(2);
    u.max(star)
}

fn half_integer_breaks(lo: &Scalar, hi: &Scalar) -> Result<Vec<Scalar>> {
    if lo >= hi {
        return Err(Error::Domain("empty window".into()));
    }
    let two = Scalar::int(2);
    let start: num_bigint::BigInt = (&two * lo).floor() + 1;
    let mut out = vec![lo.clone()];
    let mut k = start;
    loop {
        let x = &Scalar::from(k.clone()) / &two;
        if x >= *hi {
            break;
        }
        out.push(x);
        k += 1;
    }
    out.push(hi.clone());
    Ok(out)
}

/// Polynomial of `Upsilon` on the open cell containing `mid` (between half-integers).
fn upsilon_cell(mid: &Scalar) -> Poly {
    let k = Scalar::from(mid.floor());
    let half = Scalar::frac(1, 2);
    if mid.fract() < half {
        // (k+1) x - (k+1)^2 / 2
        let k1 = &k + &Scalar::one();
        Poly::linear(k1.clone(), -(&(&k1 * &k1) * &half))
    } else {
        Poly::linear(k.clone(), -(&(&k * &k) * &half))
    }
}

/// `Upsilon` materialized on the closed window `[lo, hi]`.
pub fn make_upsilon(lo: &Scalar, hi: &Scalar) -> Result<PiecewiseCurve> {
    PiecewiseCurve::from_fn_cells(half_integer_breaks(lo, hi)?, upsilon_cell, |x| Some(upsilon(x)))
}

/// `Upsilon~` materialized on the closed window `[lo, hi]`.
pub fn make_upsilon_tilde(lo: &Scalar, hi: &Scalar) -> Result<PiecewiseCurve> {
    let ups = make_upsilon(lo, hi)?;
    let one = Scalar::one();
    let star = PiecewiseCurve::from_fn_cells(
        half_integer_breaks(lo, hi)?,
        |mid| {
            if mid.abs() < one {
                upsilon_cell(mid)
            } else {
                let k = Scalar::from(mid.abs().floor());
                let sign = if mid.is_negative() { Scalar::int(-1) } else { Scalar::one() };
                Poly::linear(&(&k * &sign) / &Scalar::int(2), Scalar::zero())
            }
        },
        |x| Some(upsilon_tilde(x)),
    )?;
    ups.pointwise_max(&star)
}

/// The section bound `Omega(x, y)` of a vector `(ch2, H ch1) = (x, y)`, `y > 0`.
///
/// Keyed by `nu = x / y`: `y + x` for `nu > -1`; `y/(2n+1) + x/(2n+1)^2` for
/// `nu` in `(-n-1, -n)`; `y/(4n)` at `nu = -n`. The rank term is omitted: it
/// telescopes to `ch0(i_* F) = 0` along a polygon.
pub fn omega(x: &Scalar, y: &Scalar) -> Result<Scalar> {
    if !y.is_positive() {
        return Err(Error::Domain("Omega needs y > 0".into()));
    }
    let nu = x / y;
    if nu > Scalar::int(-1) {
        return Ok(x + y);
    }
    let m = -&nu;
    let n = Scalar::from(m.floor());
    if m.is_integer() || m == n {
        return Ok(y / &(&Scalar::int(4) * &n));
    }
    let k = &(&Scalar::int(2) * &n) + &Scalar::one();
    Ok(&(y / &k) + &(x / &(&k * &k)))
}

/// A violation of star-shapedness: the chord from `(beta, f(beta))` to
/// `(0, alpha)` passes below the graph at `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarWitness {
    pub beta: Scalar,
    pub alpha: Scalar,
    pub x: Scalar,
}

/// Grid-sampled star-shapedness with respect to the points `(0, alpha)`.
///
/// Raising `alpha` raises every chord, so the smallest positive `alpha` in
/// `alphas` is the binding one and is the only one checked.
pub fn is_star_shaped(curve: &PiecewiseCurve, grid: &[Scalar], alphas: &[Scalar]) -> Result<Option<StarWitness>> {
    let Some(alpha) = alphas.iter().filter(|a| a.is_positive()).min().cloned() else {
        return Err(Error::Domain("no positive alpha".into()));
    };
    let values: Vec<Scalar> = grid.iter().map(|x| curve.eval(x)).collect::<Result<_>>()?;
    for (beta, fb) in grid.iter().zip(&values) {
        if beta.is_zero() {
            continue;
        }
        for (x, fx) in grid.iter().zip(&values) {
            let between = if beta.is_positive() {
                x.is_positive() && x < beta
            } else {
                x.is_negative() && x > beta
            };
            if !between {
                continue;
            }
            // chord(x) = f(beta) + (alpha - f(beta)) (beta - x) / beta
            let chord = fb + &(&(&alpha - fb) * &(&(beta - x) / beta));
            if *fx > chord {
                return Ok(Some(StarWitness { beta: beta.clone(), alpha, x: x.clone() }));
            }
        }
    }
    Ok(None)
}

/// Rational grid `lo, lo + step, ..., hi`.
pub fn grid(lo: &Scalar, hi: &Scalar, step: &Scalar) -> Vec<Scalar> {
    let mut out = Vec::new();
    let mut x = lo.clone();
    while x <= *hi {
        out.push(x.clone());
        x = &x + step;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::s;
    use proptest::prelude::*;

    #[test]
    fn xi_values() {
        let c = make_xi();
        assert_eq!(c.eval(&s("1/4")).unwrap(), s("-3/16"));
        assert_eq!(c.eval(&s("1")).unwrap(), s("1/2"));
        assert_eq!(c.eval(&s("0")).unwrap(), s("0"));
        assert_eq!(c.eval(&s("1/2")).unwrap(), s("0"));
        assert_eq!(c.eval(&s("3/4")).unwrap(), s("1/16"));
        assert!(c.eval(&s("5/4")).is_err());
        assert_eq!(c.pieces.len(), 4);
        assert!(c.overrides.is_empty());
    }

    #[test]
    fn upsilon_values() {
        assert_eq!(upsilon(&s("1")), s("1/2"));
        assert_eq!(upsilon(&s("1/2")), s("0"));
        assert_eq!(upsilon(&s("-1/4")), s("-1/4"));
        assert_eq!(upsilon(&s("-4")), s("8"));
        assert_eq!(upsilon_tilde(&s("4/3")), s("2/3"));
        assert_eq!(upsilon_tilde(&s("-6/5")), s("3/5"));
        let c = make_upsilon(&s("-3"), &s("3")).unwrap();
        for k in -3..=3 {
            let x = Scalar::int(k);
            assert_eq!(c.eval(&x).unwrap(), upsilon(&x));
        }
        assert_eq!(c.eval(&s("1/3")).unwrap(), upsilon(&s("1/3")));
    }

    #[test]
    fn upsilon_tilde_curve_matches_pointwise() {
        let c = make_upsilon_tilde(&s("-5"), &s("5")).unwrap();
        for x in grid(&s("-5"), &s("5"), &s("1/12")) {
            assert_eq!(c.eval(&x).unwrap(), upsilon_tilde(&x), "at {x}");
        }
    }

    #[test]
    fn omega_cases() {
        assert_eq!(omega(&s("-3"), &s("1")).unwrap(), s("1/12"));
        assert_eq!(omega(&s("1"), &s("1")).unwrap(), s("2"));
        assert_eq!(omega(&s("-5/2"), &s("1")).unwrap(), s("1/10"));
        assert_eq!(omega(&s("-1/2"), &s("1")).unwrap(), s("1/2"));
        assert_eq!(omega(&s("-1"), &s("1")).unwrap(), s("1/4"));
        assert!(omega(&s("1"), &s("0")).is_err());
    }

    #[test]
    fn omega_is_upper_semicontinuous_at_jumps() {
        let eps = s("1/1000000");
        for n in 1..6 {
            let nu = Scalar::int(-n);
            let at = omega(&nu, &Scalar::one()).unwrap();
            let above = omega(&(&nu + &eps), &Scalar::one()).unwrap();
            let below = omega(&(&nu - &eps), &Scalar::one()).unwrap();
            assert!(at > above && at > below, "n = {n}");
        }
    }

    #[test]
    fn dominance_examples() {
        let lo = s("-3");
        let hi = s("3");
        let ups = make_upsilon(&lo, &hi).unwrap();
        let ut = make_upsilon_tilde(&lo, &hi).unwrap();
        assert!(curve_leq(&ups, &ut).unwrap().leq);
        let xi = make_xi();
        let par = PiecewiseCurve::from_cells(
            vec![s("0"), s("1")],
            vec![Poly::new(s("0"), s("0"), s("1/2"))],
            vec![Some(s("0")), Some(s("1/2"))],
        )
        .unwrap();
        let d = curve_leq(&xi, &par).unwrap();
        assert!(d.leq);
        assert!(d.touch.is_some());
        assert!(curve_leq(&xi, &xi).unwrap().leq);
        let d = curve_leq(&par, &xi).unwrap();
        assert!(!d.leq);
    }

    #[test]
    fn star_shaped_examples() {
        let g = grid(&s("-3"), &s("3"), &s("1/24"));
        let alphas = vec![s("1/24")];
        let ut = make_upsilon_tilde(&s("-3"), &s("3")).unwrap();
        assert_eq!(is_star_shaped(&ut, &g, &alphas).unwrap(), None);
        let par = PiecewiseCurve::from_cells(
            vec![s("-3"), s("3")],
            vec![Poly::new(s("1"), s("0"), s("1"))],
            vec![Some(s("10")), Some(s("10"))],
        )
        .unwrap();
        assert!(is_star_shaped(&par, &g, &alphas).unwrap().is_some());
        let lin = PiecewiseCurve::from_cells(
            vec![s("-3"), s("3")],
            vec![Poly::linear(s("2"), s("0"))],
            vec![Some(s("-6")), Some(s("6"))],
        )
        .unwrap();
        assert_eq!(is_star_shaped(&lin, &g, &alphas).unwrap(), None);
        // The literal max{Upsilon, floor(|x|) x / 2} is not star-shaped on the negative side.
        let ups = make_upsilon(&s("-3"), &s("3")).unwrap();
        assert!(is_star_shaped(&ups, &g, &alphas).unwrap().is_some());
    }

    fn arb_q() -> impl Strategy<Value = Scalar> {
        (-400i64..400, 1i64..30).prop_map(|(a, b)| Scalar::frac(a, b))
    }

    proptest! {
        #[test]
        fn upsilon_translation_and_parity(x in arb_q()) {
            let x1 = &x + &Scalar::one();
            prop_assert_eq!(upsilon(&x1), &(&upsilon(&x) + &x) + &s("1/2"));
            prop_assert_eq!(upsilon(&-&x), upsilon(&x));
            prop_assert!(upsilon(&x) <= upsilon_tilde(&x));
        }

        #[test]
        fn omega_homogeneous(x in arb_q(), y in 1i64..50, l in 1i64..20, m in 1i64..20) {
            let y = Scalar::int(y);
            let lam = Scalar::frac(l, m);
            prop_assert_eq!(
                omega(&(&lam * &x), &(&lam * &y)).unwrap(),
                &lam * &omega(&x, &y).unwrap()
            );
        }
    }
}
