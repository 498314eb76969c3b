//! Clifford-type section bounds for bundles on the curve `C`, obtained by
//! optimizing the Harder-Narasimhan polygon of `iota_* F` over the triangle
//! `OPQ`, and the restriction bound on the surface `T` built from them.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::bounds::{curve_leq_on, make_xi, omega, Dominance, Endpoint, PiecewiseCurve, Poly};
use crate::chern::{GeometryData, Variety};
use crate::error::{Error, Result};
use crate::exactnum::{s, Scalar};
use crate::par::Exec;
use crate::walls::{bn_lower_bound, bn_upper_bound, PlanarPoint};

/// How a candidate break point `P_1` of a two-step polygon `O -> P_1 -> P` arises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CandidateKind {
    /// No break point: the one-step polygon `O -> P`.
    Direct,
    /// `P_1 = Q`.
    Q,
    /// `P_1` on `OQ` with `nu(P_1 P) = -n`.
    OnOQ { n: u32 },
    /// `P_1` on `PQ` with `nu(O P_1) = -n`.
    OnPQ { n: u32 },
    /// `nu(O P_1) = -m` and `nu(P_1 P) = -n`, inside the triangle.
    Crossing { m: u32, n: u32 },
}

impl fmt::Display for CandidateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CandidateKind::Direct => write!(f, "OP"),
            CandidateKind::Q => write!(f, "Q"),
            CandidateKind::OnOQ { n } => write!(f, "OQ|P{n}"),
            CandidateKind::OnPQ { n } => write!(f, "PQ|O{n}"),
            CandidateKind::Crossing { m, n } => write!(f, "O{m}xP{n}"),
        }
    }
}

/// Affine function `slope * t + intercept`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Affine {
    pub slope: Scalar,
    pub intercept: Scalar,
}

impl Affine {
    pub fn new(slope: &str, intercept: &str) -> Affine {
        Affine { slope: s(slope), intercept: s(intercept) }
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        &(&self.slope * t) + &self.intercept
    }

    pub fn poly(&self) -> Poly {
        Poly::linear(self.slope.clone(), self.intercept.clone())
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})t + ({})", self.slope, self.intercept)
    }
}

/// One case of the closed-form Clifford bound: an interval in `t`, the
/// printed bound as a max of affine terms, and the affine majorants the
/// case argument substitutes for specific candidates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordCase {
    pub id: u8,
    pub lo: Endpoint,
    pub hi: Endpoint,
    pub printed: Vec<Affine>,
    /// Printed terms with known misprints repaired.
    pub corrected: Vec<Affine>,
    pub majorants: Vec<(Vec<CandidateKind>, Affine)>,
}

impl CliffordCase {
    pub fn contains(&self, t: &Scalar) -> bool {
        let above = match t.cmp(&self.lo.x) {
            Ordering::Greater => true,
            Ordering::Equal => self.lo.closed,
            Ordering::Less => false,
        };
        let below = match t.cmp(&self.hi.x) {
            Ordering::Less => true,
            Ordering::Equal => self.hi.closed,
            Ordering::Greater => false,
        };
        above && below
    }

    pub fn printed_value(&self, t: &Scalar) -> Scalar {
        self.printed.iter().map(|a| a.eval(t)).max().expect("nonempty")
    }

    pub fn corrected_value(&self, t: &Scalar) -> Scalar {
        self.corrected.iter().map(|a| a.eval(t)).max().expect("nonempty")
    }

    fn majorant_for(&self, kind: &CandidateKind) -> Option<&Affine> {
        self.majorants.iter().find(|(ks, _)| ks.contains(kind)).map(|(_, a)| a)
    }
}

fn ep(x: &str, closed: bool) -> Endpoint {
    Endpoint { x: s(x), closed }
}

/// The case table of the closed-form bounds for a variety.
pub fn clifford_cases(variety: Variety) -> Vec<CliffordCase> {
    use CandidateKind::*;
    let a = Affine::new;
    let case = |id, lo, hi, printed: Vec<Affine>, majorants| CliffordCase {
        id,
        lo,
        hi,
        corrected: printed.clone(),
        printed,
        majorants,
    };
    match variety {
        Variety::Triple => vec![
            case(1, ep("0", true), ep("1/6", false), vec![a("12/25", "24/25")], vec![]),
            case(
                2,
                ep("1/6", true),
                ep("1/4", false),
                vec![a("8/9", "8/9"), a("10/19", "145/152")],
                vec![(vec![OnPQ { n: 2 }], a("10/19", "145/152"))],
            ),
            case(
                3,
                ep("1/4", true),
                ep("1/2", true),
                vec![a("4", "0"), a("33/38", "69/76")],
                vec![(vec![OnPQ { n: 2 }, OnPQ { n: 1 }], a("33/38", "69/76"))],
            ),
            case(
                4,
                ep("3/2", true),
                ep("11/6", true),
                vec![a("4", "0"), a("231/32", "-375/64")],
                vec![(vec![OnOQ { n: 2 }, Crossing { m: 1, n: 2 }], a("231/32", "-375/64"))],
            ),
            case(
                5,
                ep("11/6", false),
                ep("1/2*sqrt(14)", true),
                vec![a("233/32", "-191/32")],
                vec![(vec![OnOQ { n: 2 }, Crossing { m: 1, n: 2 }, Q], a("233/32", "-191/32"))],
            ),
            case(6, ep("1/2*sqrt(14)", true), ep("23/12", true), vec![a("192/25", "-168/25")], vec![]),
            case(7, ep("23/12", true), ep("2", true), vec![a("12", "-15")], vec![]),
        ],
        Variety::Double => {
            let mut cases = vec![
                case(1, ep("0", true), ep("1/8", false), vec![a("16/49", "48/49")], vec![]),
                case(
                    2,
                    ep("1/8", true),
                    ep("1/6", false),
                    vec![a("12/25", "24/25"), a("85/246", "481/492")],
                    vec![(vec![OnPQ { n: 3 }], a("85/246", "481/492"))],
                ),
                case(
                    3,
                    ep("1/6", true),
                    ep("1/4", false),
                    vec![a("8/9", "8/9"), a("17/38", "147/152")],
                    vec![(vec![OnPQ { n: 3 }, OnPQ { n: 2 }], a("17/38", "147/152"))],
                ),
                case(
                    4,
                    ep("1/4", true),
                    ep("1/2", true),
                    vec![a("4", "0"), a("63/82", "153/164")],
                    vec![(vec![OnPQ { n: 3 }, OnPQ { n: 2 }, OnPQ { n: 1 }], a("63/82", "153/164"))],
                ),
                case(5, ep("3/2", true), ep("15/8", true), vec![a("4", "0")], vec![]),
                case(
                    6,
                    ep("15/8", false),
                    ep("-1/2+1/2*sqrt(23)", true),
                    vec![a("133/18", "-19/3")],
                    vec![(vec![OnOQ { n: 3 }, Q], a("133/18", "-19/3"))],
                ),
                case(7, ep("-1/2+1/2*sqrt(23)", true), ep("31/16", true), vec![a("236/49", "-148/21")], vec![]),
                case(8, ep("31/16", true), ep("2", true), vec![a("16", "-23")], vec![]),
            ];
            // Misprinted constant term; the optimizer's value is continuous
            // with the neighbouring cases.
            cases[6].corrected = vec![a("384/49", "-352/49")];
            cases
        }
    }
}

/// Name a candidate carries in the written case analysis, if any.
pub fn case_label(variety: Variety, case: u8, kind: &CandidateKind) -> Option<&'static str> {
    use CandidateKind::*;
    match (variety, case, kind) {
        (_, _, Q) => Some("Q"),
        (Variety::Triple, 2 | 3, OnPQ { n: 2 }) => Some("A"),
        (Variety::Triple, 3, OnPQ { n: 1 }) => Some("B"),
        (Variety::Triple, 4..=7, OnPQ { n: 1 }) => Some("A"),
        (Variety::Triple, 4 | 5, OnOQ { n: 2 }) => Some("B"),
        (Variety::Triple, 4 | 5, Crossing { m: 1, n: 2 }) => Some("C"),
        (Variety::Double, 2..=4, OnPQ { n: 3 }) => Some("A"),
        (Variety::Double, 3..=5, OnPQ { n: 2 }) => Some("B"),
        (Variety::Double, 4 | 5, OnPQ { n: 1 }) => Some("C"),
        (Variety::Double, 5..=8, OnOQ { n: 3 }) => Some("D"),
        (Variety::Double, 5..=8, Crossing { m: 2, n: 3 }) => Some("E"),
        (Variety::Double, 5..=8, Crossing { m: 1, n: 3 }) => Some("F"),
        _ => None,
    }
}

fn check_t(t: &Scalar) -> Result<()> {
    let ok = (!t.is_negative() && *t <= s("1/2")) || (*t >= s("3/2") && *t <= Scalar::int(2));
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(format!("t = {t} outside [0,1/2] u [3/2,2]")))
    }
}

/// A candidate polygon `O -> P_1 -> P` with its exact section bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub kind: CandidateKind,
    pub label: String,
    pub point: PlanarPoint,
    /// `Omega(O P_1) + Omega(P_1 P)` per unit rank.
    pub value: Scalar,
}

/// Polygon data per unit rank: `P = (ch2, H ch1)(iota_* F)`, `Q` from the
/// BN slope bounds (absent when `iota_* F` is BN stable), and all candidates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonInstance {
    pub t: Scalar,
    pub p: PlanarPoint,
    pub q: Option<PlanarPoint>,
    pub candidates: Vec<Candidate>,
}

fn cross(a: &PlanarPoint, b: &PlanarPoint) -> Scalar {
    &(&a.x * &b.y) - &(&a.y * &b.x)
}

fn sub(a: &PlanarPoint, b: &PlanarPoint) -> PlanarPoint {
    PlanarPoint::new(&a.x - &b.x, &a.y - &b.y)
}

fn in_triangle(x: &PlanarPoint, p: &PlanarPoint, q: &PlanarPoint) -> bool {
    let o = PlanarPoint::new(Scalar::zero(), Scalar::zero());
    let s1 = cross(&sub(p, &o), &sub(x, &o)).signum();
    let s2 = cross(&sub(q, p), &sub(x, p)).signum();
    let s3 = cross(&sub(&o, q), &sub(x, q)).signum();
    let signs = [s1, s2, s3];
    !signs.contains(&Ordering::Less) || !signs.contains(&Ordering::Greater)
}

/// `Omega(O P_1) + Omega(P_1 P)` if both steps have positive `H ch1` and the
/// slopes decrease (a convex polygon).
fn two_step_value(p1: &PlanarPoint, p: &PlanarPoint) -> Result<Option<Scalar>> {
    let d = sub(p, p1);
    if !p1.y.is_positive() || !d.y.is_positive() {
        return Ok(None);
    }
    if cross(p1, &d).is_negative() {
        return Ok(None);
    }
    Ok(Some(&omega(&p1.x, &p1.y)? + &omega(&d.x, &d.y)?))
}

/// Largest `n` tried for the slopes `-n` of polygon edges.
const MAX_N: u32 = 16;

pub fn polygon_p(t: &Scalar, geom: &GeometryData) -> PlanarPoint {
    let sc = geom.polygon_scale();
    PlanarPoint::new(&sc * &(t - &geom.bn_offset), sc)
}

/// `P`, `Q` and every break-point candidate for the parameter `t`.
pub fn candidate_points(t: &Scalar, geom: &GeometryData) -> Result<PolygonInstance> {
    check_t(t)?;
    let p = polygon_p(t, geom);
    let mut candidates = Vec::new();
    let mut push = |kind: CandidateKind, point: PlanarPoint, value: Scalar| {
        candidates.push(Candidate { kind, label: kind.to_string(), point, value });
    };
    push(CandidateKind::Direct, p.clone(), omega(&p.x, &p.y)?);
    let (Some(up), Some(lo)) = (bn_upper_bound(t, geom)?, bn_lower_bound(t, geom)?) else {
        return Ok(PolygonInstance { t: t.clone(), p, q: None, candidates });
    };
    let yq = &(&p.x - &(&lo * &p.y)) / &(&up - &lo);
    let q = PlanarPoint::new(&up * &yq, yq);
    if let Some(v) = two_step_value(&q, &p)? {
        push(CandidateKind::Q, q.clone(), v);
    }
    let o = PlanarPoint::new(Scalar::zero(), Scalar::zero());
    let mut consider = |kind: CandidateKind, x: PlanarPoint| -> Result<()> {
        // Both steps need positive H ch1; cheap to test before the triangle.
        if !x.y.is_positive() || x.y >= p.y || x == q || x == o || !in_triangle(&x, &p, &q) {
            return Ok(());
        }
        if let Some(v) = two_step_value(&x, &p)? {
            push(kind, x, v);
        }
        Ok(())
    };
    for n in 1..=MAX_N {
        let nn = Scalar::from(n as i64);
        // On OQ: P_1 = lambda Q with nu(P - P_1) = -n.
        let den = &q.x + &(&nn * &q.y);
        if !den.is_zero() {
            let lam = &(&p.x + &(&nn * &p.y)) / &den;
            if lam.is_positive() && lam <= Scalar::one() {
                consider(CandidateKind::OnOQ { n }, PlanarPoint::new(&lam * &q.x, &lam * &q.y))?;
            }
        }
        // On PQ: P_1 = P + m (Q - P) with nu(P_1) = -n.
        let d = sub(&q, &p);
        let den = &d.x + &(&nn * &d.y);
        if !den.is_zero() {
            let m = -(&(&p.x + &(&nn * &p.y)) / &den);
            if !m.is_negative() && m <= Scalar::one() {
                consider(CandidateKind::OnPQ { n }, PlanarPoint::new(&p.x + &(&m * &d.x), &p.y + &(&m * &d.y)))?;
            }
        }
        for m in 1..n {
            let mm = Scalar::from(m as i64);
            let y1 = &(&p.x + &(&nn * &p.y)) / &(&nn - &mm);
            consider(CandidateKind::Crossing { m, n }, PlanarPoint::new(-(&mm * &y1), y1))?;
        }
    }
    Ok(PolygonInstance { t: t.clone(), p, q: Some(q), candidates })
}

/// A candidate's contribution within one case: its exact value and the
/// affine majorant the case argument uses for it, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateBound {
    pub label: String,
    pub case_label: Option<String>,
    pub point: PlanarPoint,
    pub exact: Scalar,
    pub majorant: Option<Scalar>,
}

impl CandidateBound {
    pub fn used(&self) -> &Scalar {
        self.majorant.as_ref().unwrap_or(&self.exact)
    }
}

/// The Clifford-type bound `h^0(F)/r <= bound` at `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordBound {
    pub t: Scalar,
    /// Case whose argument gives `bound`.
    pub case: u8,
    /// All cases whose interval contains `t`.
    pub cases: Vec<u8>,
    /// The certified bound: per case the max of candidates (majorants where
    /// the case argument relaxes), minimized over applicable cases.
    pub bound: Scalar,
    /// Max of the exact candidate values (no relaxation).
    pub exact: Scalar,
    pub argmax_label: String,
    pub candidates: Vec<CandidateBound>,
}

pub fn clifford_bound(t: &Scalar, geom: &GeometryData) -> Result<CliffordBound> {
    let inst = candidate_points(t, geom)?;
    let cases: Vec<CliffordCase> = clifford_cases(geom.variety).into_iter().filter(|c| c.contains(t)).collect();
    if cases.is_empty() {
        return Err(Error::Domain(format!("no case covers t = {t}")));
    }
    let exact = inst.candidates.iter().map(|c| c.value.clone()).max().expect("direct candidate");
    let mut best: Option<(Scalar, u8, Vec<CandidateBound>)> = None;
    for case in &cases {
        let mut rows = Vec::new();
        for c in &inst.candidates {
            let majorant = match case.majorant_for(&c.kind) {
                Some(a) => {
                    let m = a.eval(t);
                    if m < c.value {
                        return Err(Error::RelaxationViolated(format!(
                            "case ({}) majorant {a} below candidate {} at t = {t}",
                            case.id, c.label
                        )));
                    }
                    Some(m)
                }
                None => None,
            };
            rows.push(CandidateBound {
                label: c.label.clone(),
                case_label: case_label(geom.variety, case.id, &c.kind).map(str::to_string),
                point: c.point.clone(),
                exact: c.value.clone(),
                majorant,
            });
        }
        let v = rows.iter().map(|r| r.used().clone()).max().expect("nonempty");
        if best.as_ref().is_none_or(|(b, _, _)| v < *b) {
            best = Some((v, case.id, rows));
        }
    }
    let (bound, case, candidates) = best.expect("at least one case");
    let arg = candidates.iter().find(|c| *c.used() == bound).expect("max attained");
    let argmax_label = match &arg.case_label {
        Some(p) => format!("{p} ({})", arg.label),
        None => arg.label.clone(),
    };
    Ok(CliffordBound {
        t: t.clone(),
        case,
        cases: cases.iter().map(|c| c.id).collect(),
        bound,
        exact,
        argmax_label,
        candidates,
    })
}

/// Value of the printed closed form at `t` (min over cases claiming `t`).
pub fn printed_clifford(t: &Scalar, geom: &GeometryData) -> Result<Scalar> {
    clifford_cases(geom.variety)
        .iter()
        .filter(|c| c.contains(t))
        .map(|c| c.printed_value(t))
        .min()
        .ok_or_else(|| Error::Domain(format!("no case covers t = {t}")))
}

/// Exact value of the double-cover candidate `D` (on `OQ`, `nu(DP) = -3`)
/// in the range `[3/2, 2]`: `4(46t^2 - 50t + 11) / (3(8t - 1))`.
pub fn double_candidate_d(t: &Scalar) -> Scalar {
    let num = &Scalar::int(4) * &(&(&(&Scalar::int(46) * &(t * t)) - &(&Scalar::int(50) * t)) + &Scalar::int(11));
    let den = &Scalar::int(3) * &(&(&Scalar::int(8) * t) - &Scalar::one());
    &num / &den
}

/// Rational left end of the chord that majorizes `D` on the right part of
/// double case (5); `D <= 4t` to its left.
pub const DOUBLE_CASE5_CHORD_START: &str = "747/400";

fn double_case5_chord() -> Affine {
    let a = s(DOUBLE_CASE5_CHORD_START);
    let b = s("15/8");
    let (da, db) = (double_candidate_d(&a), double_candidate_d(&b));
    let slope = &(&db - &da) / &(&b - &a);
    let intercept = &da - &(&slope * &a);
    Affine { slope, intercept }
}

/// Affine terms whose max is a certified bound on case `c`: the corrected
/// printed terms, plus for double case (5) a chord of the convex candidate `D`.
fn certified_terms(variety: Variety, c: &CliffordCase) -> Vec<Affine> {
    let mut terms = c.corrected.clone();
    if variety == Variety::Double && c.id == 5 {
        terms.push(double_case5_chord());
    }
    terms
}

/// Closed-form majorant of the Clifford bound on `[0, 1/2]` (`upper = false`)
/// or `[3/2, 2]` (`upper = true`) as an exact piecewise-linear curve.
///
/// Agrees with `clifford_bound(t).bound` except on the right part of double
/// case (5), where a chord replaces the rational candidate `D`.
pub fn clifford_curve(geom: &GeometryData, upper: bool) -> Result<PiecewiseCurve> {
    let cases: Vec<CliffordCase> = clifford_cases(geom.variety)
        .into_iter()
        .filter(|c| (c.lo.x >= s("3/2")) == upper)
        .collect();
    let two = Scalar::int(2);
    let mut breaks = Vec::new();
    let mut polys = Vec::new();
    for c in &cases {
        let terms = certified_terms(geom.variety, c);
        let mut cuts = vec![c.lo.x.clone(), c.hi.x.clone()];
        for (i, a) in terms.iter().enumerate() {
            for b in &terms[i + 1..] {
                cuts.extend(a.poly().sub(&b.poly()).roots_in(&c.lo.x, &c.hi.x)?);
            }
        }
        cuts.sort();
        cuts.dedup();
        for w in cuts.windows(2) {
            let mid = &(&w[0] + &w[1]) / &two;
            let top = terms.iter().max_by(|a, b| a.eval(&mid).cmp(&b.eval(&mid))).expect("nonempty");
            breaks.push(w[0].clone());
            polys.push(top.poly());
        }
    }
    breaks.push(cases.last().expect("nonempty").hi.x.clone());
    let values = breaks
        .iter()
        .map(|t| {
            if t.is_zero() {
                // nu(OP) = -bn_offset sits on a jump of Omega.
                return candidate_points(t, geom).ok().map(|i| i.candidates[0].value.clone());
            }
            cases
                .iter()
                .filter(|c| c.contains(t))
                .map(|c| certified_terms(geom.variety, c).iter().map(|a| a.eval(t)).max().expect("nonempty"))
                .min()
        })
        .collect();
    PiecewiseCurve::from_cells(breaks, polys, values)
}

fn check_mu(mu: &Scalar) -> Result<()> {
    if mu.is_positive() && *mu <= s("1/2") {
        Ok(())
    } else {
        Err(Error::Domain(format!("mu = {mu} outside (0, 1/2]")))
    }
}

/// Upper bound for `ch2(F) / H^2 ch0(F)` on `T` from Riemann-Roch and the
/// Clifford bound applied to `F|_C` (parameter `mu`) and `F^v(2H)|_C` (`2 - mu`).
pub fn restriction_bound(mu: &Scalar, geom: &GeometryData) -> Result<Scalar> {
    check_mu(mu)?;
    let c1 = clifford_bound(mu, geom)?.bound;
    let c2 = clifford_bound(&(&Scalar::int(2) - mu), geom)?.bound;
    Ok(&(mu - &(&geom.chi_const / &geom.ht_sq)) + &(&(&c1 + &c2) / &geom.ht_sq))
}

/// One line of the printed restriction-bound table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionLine {
    pub lo: Scalar,
    pub hi: Scalar,
    pub line: Affine,
}

/// The printed piecewise-linear restriction bound on `(0, 1/2]`.
pub fn printed_restriction_table(variety: Variety) -> Vec<RestrictionLine> {
    let row = |lo: &str, hi: &str, a: &str, b: &str| RestrictionLine { lo: s(lo), hi: s(hi), line: Affine::new(a, b) };
    match variety {
        Variety::Triple => vec![
            row("0", "1/12", "-23/25", "-13/75"),
            row("1/12", "2-1/2*sqrt(14)", "-1/5", "-7/30"),
            row("2-1/2*sqrt(14)", "1/6", "-641/4800", "-1157/4800"),
            row("1/6", "89/496", "-421/3648", "-595/2432"),
            row("89/496", "37/206", "-95/1728", "-883/3456"),
            row("37/206", "1/4", "13/27", "-19/54"),
            row("1/4", "69/238", "109/228", "-53/152"),
            row("69/238", "1/2", "1", "-1/2"),
        ],
        Variety::Double => vec![
            row("0", "1/16", "-143/49", "-23/98"),
            row("1/16", "5/2-1/2*sqrt(23)", "-6/49", "-1081/588"),
            row("5/2-1/2*sqrt(23)", "1/8", "-2701/3528", "-127/882"),
            row("1/8", "217/1654", "85/984", "-503/1968"),
            row("217/1654", "1/6", "3/25", "-13/50"),
            row("1/6", "107/604", "17/152", "-157/608"),
            row("107/604", "1/4", "2/9", "-5/18"),
            row("1/4", "153/530", "63/328", "-175/656"),
            row("153/530", "1/2", "1", "-1/2"),
        ],
    }
}

/// Exact piecewise-linear majorant of `restriction_bound` on `(0, 1/2]`,
/// assembled from [`clifford_curve`].
pub fn restriction_curve(geom: &GeometryData) -> Result<PiecewiseCurve> {
    let low = clifford_curve(geom, false)?;
    let high = clifford_curve(geom, true)?;
    let two = Scalar::int(2);
    let half = s("1/2");
    let mut breaks: Vec<Scalar> = low
        .breakpoints()
        .into_iter()
        .chain(high.breakpoints().iter().map(|x| &two - x))
        .filter(|x| !x.is_negative() && *x <= half)
        .collect();
    breaks.sort();
    breaks.dedup();
    let base = Poly::linear(Scalar::one(), -(&geom.chi_const / &geom.ht_sq));
    let inv = &Scalar::one() / &geom.ht_sq;
    let mut polys = Vec::new();
    for w in breaks.windows(2) {
        let mid = &(&w[0] + &w[1]) / &two;
        let find = |c: &PiecewiseCurve, x: &Scalar| {
            c.pieces.iter().find(|p| p.lo.x < *x && *x < p.hi.x).map(|p| p.poly.clone()).expect("inside")
        };
        let pl = find(&low, &mid);
        let ph = find(&high, &(&two - &mid)).reflect(&two);
        polys.push(base.add(&pl.add(&ph).scale(&inv)));
    }
    let values = breaks
        .iter()
        .map(|mu| {
            if mu.is_zero() {
                return None;
            }
            let a = low.eval(mu).ok()?;
            let b = high.eval(&(&two - mu)).ok()?;
            Some(&base.eval(mu) + &(&(&a + &b) * &inv))
        })
        .collect();
    PiecewiseCurve::from_cells(breaks, polys, values)
}

/// Exact check of `restriction_curve <= Xi` on `(0, 1/2]`, with touch points.
pub fn restriction_vs_xi(geom: &GeometryData) -> Result<Dominance> {
    let r = restriction_curve(geom)?;
    curve_leq_on(&r, &make_xi(), &Endpoint::open(Scalar::zero()), &Endpoint::closed(s("1/2")))
}

/// Outcome of the strong BG inequality `ch2/ch0 <= Xi(|mu|)` (in `H`-degrees).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongBgReport {
    pub mu: Scalar,
    pub ratio: Scalar,
    pub xi: Scalar,
    pub holds: bool,
    /// `Xi(|mu|) - ratio`.
    pub margin: Scalar,
}

/// Checks `ratio <= Xi(|mu|)` for `mu = a / r`, `ratio = b / r`, where
/// `(r, a, b)` are the first three `H`-degree Chern coordinates.
pub fn strong_bg_check(r: &Scalar, a: &Scalar, b: &Scalar) -> Result<StrongBgReport> {
    if r.is_zero() {
        return Err(Error::Domain("rank zero".into()));
    }
    let mu = a / r;
    if mu.abs() > Scalar::one() {
        return Err(Error::Domain(format!("slope {mu} outside [-1, 1]")));
    }
    let ratio = b / r;
    let xi = make_xi().eval(&mu.abs())?;
    let margin = &xi - &ratio;
    Ok(StrongBgReport { mu, ratio, xi, holds: !margin.is_negative(), margin })
}

/// Result of the brute-force polygon search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteForce {
    pub t: Scalar,
    pub grid_n: u32,
    pub value: Scalar,
    /// Vertices of a maximizing polygon, from `O` to `P`.
    pub path: Vec<PlanarPoint>,
}

/// Exact class of `Omega` on an integer vector `(x, y)`, `y > 0`.
/// `Omega` is linear on each class, which is a convex cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum OmegaClass {
    Linear,
    Open(i128),
    Jump(i128),
}

fn omega_class(x: i128, y: i128) -> OmegaClass {
    if x > -y {
        return OmegaClass::Linear;
    }
    let m = -x;
    if m % y == 0 {
        OmegaClass::Jump(m / y)
    } else {
        OmegaClass::Open(m / y)
    }
}

fn omega_f64(x: i128, y: i128) -> f64 {
    let (xf, yf) = (x as f64, y as f64);
    match omega_class(x, y) {
        OmegaClass::Linear => xf + yf,
        OmegaClass::Open(n) => {
            let k = (2 * n + 1) as f64;
            yf / k + xf / (k * k)
        }
        OmegaClass::Jump(n) => yf / (4 * n) as f64,
    }
}

fn to_i128(x: &BigInt) -> Result<i128> {
    x.to_i128().ok_or_else(|| Error::Unsupported("coordinates too large for the lattice search".into()))
}

/// Maximum of `sum Omega` over all convex lattice polygons `O -> ... -> P`
/// with at most three steps and vertices in `{(iQ + jP)/n : i, j >= 0, i + j <= n}`.
///
/// Slopes are classified exactly in integer arithmetic, a float pass finds
/// the near-maximal polygons, and those are re-evaluated exactly.
pub fn clifford_bound_bruteforce(t: &Scalar, geom: &GeometryData, grid_n: u32, exec: Exec) -> Result<BruteForce> {
    if grid_n < 8 {
        return Err(Error::Domain("grid_n must be at least 8".into()));
    }
    let inst = candidate_points(t, geom)?;
    let p = inst.p.clone();
    let Some(q) = inst.q.clone() else {
        let value = omega(&p.x, &p.y)?;
        let o = PlanarPoint::new(Scalar::zero(), Scalar::zero());
        return Ok(BruteForce { t: t.clone(), grid_n, value, path: vec![o, p] });
    };
    let coords = [&q.x, &q.y, &p.x, &p.y];
    let mut rats = Vec::new();
    for c in coords {
        rats.push(c.as_rational().cloned().ok_or_else(|| Error::Unsupported("brute force needs rational t".into()))?);
    }
    let l = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<i128> = rats.iter().map(|r| to_i128(&(r.numer() * (&l / r.denom())))).collect::<Result<_>>()?;
    let (xq, yq, xp, yp) = (ints[0], ints[1], ints[2], ints[3]);
    let n = grid_n as i64;
    let w = (2 * n + 1) as usize;
    // Omega of (di Q + dj P) in units of 1/L, NaN-free: None when H ch1 <= 0.
    let mut table = vec![f64::NEG_INFINITY; w * w];
    for di in -n..=n {
        for dj in -n..=n {
            let x = di as i128 * xq + dj as i128 * xp;
            let y = di as i128 * yq + dj as i128 * yp;
            if y > 0 {
                table[(di + n) as usize * w + (dj + n) as usize] = omega_f64(x, y);
            }
        }
    }
    let idx = |di: i64, dj: i64| (di + n) as usize * w + (dj + n) as usize;
    let cq = {
        let c = xq * yp - yq * xp;
        c.signum() as i64
    };
    let convex = |a: (i64, i64), b: (i64, i64)| (a.0 * b.1 - a.1 * b.0) * cq >= 0;
    let verts: Vec<(i64, i64)> = (0..=n)
        .flat_map(|i| (0..=n - i).map(move |j| (i, j)))
        .filter(|&v| v != (0, 0) && v != (0, n))
        .collect();
    let pt = (0i64, n);
    let best_from = |v1: &(i64, i64), keep: Option<f64>| -> (f64, Vec<Vec<(i64, i64)>>) {
        let mut best = f64::NEG_INFINITY;
        let mut hits = Vec::new();
        let s1 = *v1;
        let o1 = table[idx(s1.0, s1.1)];
        if o1 == f64::NEG_INFINITY {
            return (best, hits);
        }
        let mut note = |val: f64, path: Vec<(i64, i64)>| {
            if val > best {
                best = val;
            }
            if let Some(th) = keep {
                if val >= th {
                    hits.push(path);
                }
            }
        };
        let s2 = (pt.0 - v1.0, pt.1 - v1.1);
        let o2 = table[idx(s2.0, s2.1)];
        if o2 != f64::NEG_INFINITY && convex(s1, s2) {
            note(o1 + o2, vec![*v1]);
        }
        for v2 in &verts {
            let a = (v2.0 - v1.0, v2.1 - v1.1);
            let b = (pt.0 - v2.0, pt.1 - v2.1);
            let (oa, ob) = (table[idx(a.0, a.1)], table[idx(b.0, b.1)]);
            if oa == f64::NEG_INFINITY || ob == f64::NEG_INFINITY || !convex(s1, a) || !convex(a, b) {
                continue;
            }
            note(o1 + oa + ob, vec![*v1, *v2]);
        }
        (best, hits)
    };
    let direct = table[idx(0, n)];
    let pass1 = exec.map(&verts, |v| best_from(v, None).0);
    let fmax = pass1.into_iter().fold(direct, f64::max);
    let threshold = fmax - 1e-9 * fmax.abs().max(1.0);
    // Merge consecutive steps of equal class: same value, fewer distinct polygons.
    let step_class = |a: (i64, i64), b: (i64, i64)| {
        let (di, dj) = ((b.0 - a.0) as i128, (b.1 - a.1) as i128);
        omega_class(di * xq + dj * xp, di * yq + dj * yp)
    };
    let canonical = |path: Vec<(i64, i64)>| -> Vec<(i64, i64)> {
        let mut pts = vec![(0i64, 0i64)];
        pts.extend(path);
        pts.push(pt);
        let mut out: Vec<(i64, i64)> = vec![pts[0]];
        for w2 in pts.windows(2).skip(1) {
            let prev = *out.last().expect("nonempty");
            if step_class(prev, w2[0]) != step_class(w2[0], w2[1]) {
                out.push(w2[0]);
            }
        }
        out.remove(0);
        out
    };
    let pass2 = exec.map(&verts, |v| {
        let set: BTreeSet<Vec<(i64, i64)>> = best_from(v, Some(threshold)).1.into_iter().map(canonical).collect();
        set
    });
    let pass2: BTreeSet<Vec<(i64, i64)>> = pass2.into_iter().flatten().collect();
    let lattice = |v: (i64, i64)| {
        let (i, j) = (Scalar::int(v.0), Scalar::int(v.1));
        let nn = Scalar::int(n);
        PlanarPoint::new(&(&(&i * &q.x) + &(&j * &p.x)) / &nn, &(&(&i * &q.y) + &(&j * &p.y)) / &nn)
    };
    let o = PlanarPoint::new(Scalar::zero(), Scalar::zero());
    let mut best_val = omega(&p.x, &p.y)?;
    let mut best_path = vec![o.clone(), p.clone()];
    for path in pass2 {
        let mut pts = vec![o.clone()];
        pts.extend(path.into_iter().map(lattice));
        pts.push(p.clone());
        let mut val = Scalar::zero();
        for w2 in pts.windows(2) {
            let d = sub(&w2[1], &w2[0]);
            val = &val + &omega(&d.x, &d.y)?;
        }
        if val > best_val {
            best_val = val;
            best_path = pts;
        }
    }
    Ok(BruteForce { t: t.clone(), grid_n, value: best_val, path: best_path })
}

/// Sample `count` rational points of `[lo, hi]`, endpoints included.
pub fn rational_samples(lo: &Scalar, hi: &Scalar, count: usize) -> Vec<Scalar> {
    // Rationalize surd endpoints from inside, then sample uniformly.
    let inner = |x: &Scalar, up: bool| -> Scalar {
        if x.is_rational() {
            return x.clone();
        }
        let den = BigInt::from(1_000_000i64);
        let f = Scalar::from(&x.floor() * &den);
        let scaled = &(x * &Scalar::from(den.clone())) - &f;
        let k = scaled.floor();
        let k = if up { k + 1 } else { k };
        &Scalar::from(&(&x.floor() * &den) + &k) / &Scalar::from(den)
    };
    let a = inner(lo, true);
    let b = inner(hi, false);
    if count < 2 {
        return vec![a];
    }
    let step = &(&b - &a) / &Scalar::int(count as i64 - 1);
    (0..count).map(|i| &a + &(&step * &Scalar::int(i as i64))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: Variety) -> GeometryData {
        v.geometry()
    }

    #[test]
    fn printed_coordinates() {
        let geom = g(Variety::Triple);
        let t = s("3/8");
        let inst = candidate_points(&t, &geom).unwrap();
        let b = inst.candidates.iter().find(|c| c.kind == CandidateKind::OnPQ { n: 1 }).unwrap();
        // B = (-12(2t^2-8t+1)/(8t-23), 12(2t^2-8t+1)/(8t-23))
        let k = &(&Scalar::int(12) * &(&(&(&Scalar::int(2) * &(&t * &t)) - &(&Scalar::int(8) * &t)) + &Scalar::one()))
            / &(&(&Scalar::int(8) * &t) - &Scalar::int(23));
        assert_eq!(b.point, PlanarPoint::new(-&k, k));
        let geom = g(Variety::Double);
        let t = s("13/8");
        let inst = candidate_points(&t, &geom).unwrap();
        let f = inst.candidates.iter().find(|c| c.kind == CandidateKind::Crossing { m: 1, n: 3 }).unwrap();
        let v = &(&Scalar::int(8) * &t) - &Scalar::int(8);
        assert_eq!(f.point, PlanarPoint::new(-&v, v));
        let t = s("7/4");
        let geom = g(Variety::Triple);
        let inst = candidate_points(&t, &geom).unwrap();
        let c = inst.candidates.iter().find(|c| c.kind == CandidateKind::Crossing { m: 1, n: 2 }).unwrap();
        let v = &(&Scalar::int(12) * &t) - &Scalar::int(12);
        assert_eq!(c.point, PlanarPoint::new(-&v, v));
    }

    #[test]
    fn anchors() {
        let tr = g(Variety::Triple);
        assert_eq!(clifford_bound(&s("1/2"), &tr).unwrap().bound, s("2"));
        assert_eq!(clifford_bound(&s("2"), &tr).unwrap().bound, s("9"));
        assert_eq!(clifford_bound(&s("2"), &g(Variety::Double)).unwrap().bound, s("9"));
        assert_eq!(clifford_bound(&s("1/12"), &tr).unwrap().bound, s("1"));
        // At t = 0 the direct path sits on the jump nu = -3 of Omega.
        assert_eq!(clifford_bound(&s("0"), &tr).unwrap().bound, s("1"));
    }

    #[test]
    fn case_three_label() {
        let b = clifford_bound(&s("3/8"), &g(Variety::Triple)).unwrap();
        assert_eq!(b.case, 3);
        assert_eq!(b.bound, s("3/2"));
        assert!(b.argmax_label.starts_with('Q'));
    }

    #[test]
    fn majorants_dominate_and_match_printed() {
        for v in Variety::ALL {
            let geom = g(v);
            for case in clifford_cases(v) {
                for t in rational_samples(&case.lo.x, &case.hi.x, 13) {
                    if !case.contains(&t) || t.is_zero() {
                        continue;
                    }
                    let b = clifford_bound(&t, &geom).unwrap();
                    assert!(b.bound >= b.exact);
                    if !(v == Variety::Double && case.id >= 5 && case.id <= 7) {
                        assert_eq!(b.bound, case.printed_value(&t), "{v} case {} t = {t}", case.id);
                    }
                }
            }
        }
    }

    #[test]
    fn double_case5_exceeds_printed_near_right_end() {
        let geom = g(Variety::Double);
        let t = s("15/8");
        let b = clifford_bound(&t, &geom).unwrap();
        assert_eq!(b.bound, s("361/48"));
        assert_eq!(double_candidate_d(&t), s("361/48"));
        assert!(b.bound > s("15/2"));
        assert_eq!(clifford_bound(&s("7/4"), &geom).unwrap().bound, s("7"));
    }

    #[test]
    fn curve_majorizes_bound() {
        for v in Variety::ALL {
            let geom = g(v);
            for upper in [false, true] {
                let c = clifford_curve(&geom, upper).unwrap();
                let (lo, hi) = if upper { (s("3/2"), s("2")) } else { (s("0"), s("1/2")) };
                for t in rational_samples(&lo, &hi, 61) {
                    let b = clifford_bound(&t, &geom).unwrap().bound;
                    let cv = c.eval(&t).unwrap();
                    assert!(cv >= b, "{v} t = {t}");
                    let in_chord = v == Variety::Double && t > s(DOUBLE_CASE5_CHORD_START) && t <= s("15/8");
                    if !in_chord {
                        assert_eq!(cv, b, "{v} t = {t}");
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let tr = g(Variety::Triple);
        assert_eq!(restriction_bound(&s("1/24"), &tr).unwrap(), &(&s("-23/25") * &s("1/24")) - &s("13/75"));
        assert_eq!(restriction_bound(&s("2/5"), &tr).unwrap(), s("2/5") - s("1/2"));
        let db = g(Variety::Double);
        assert_eq!(restriction_bound(&s("2/5"), &db).unwrap(), s("2/5") - s("1/2"));
        assert!(restriction_bound(&s("0"), &tr).is_err());
    }

    #[test]
    fn restriction_touches_xi_only_at_half() {
        for v in Variety::ALL {
            let d = restriction_vs_xi(&g(v)).unwrap();
            assert!(d.leq, "{v}: {:?}", d.witness);
            assert_eq!(d.touch, Some(s("1/2")));
        }
    }

    #[test]
    fn strong_bg_examples() {
        let r = strong_bg_check(&s("3"), &s("3"), &s("3/2")).unwrap();
        assert!(r.holds && r.margin.is_zero());
        assert!(!strong_bg_check(&s("3"), &s("0"), &s("1")).unwrap().holds);
        assert!(strong_bg_check(&s("3"), &s("0"), &s("-1")).unwrap().holds);
        assert!(strong_bg_check(&s("0"), &s("0"), &s("1")).is_err());
    }

    #[test]
    fn bruteforce_small_grid() {
        for v in Variety::ALL {
            let geom = g(v);
            for t in ["1/3", "7/4", "1/5"] {
                let t = s(t);
                let bf = clifford_bound_bruteforce(&t, &geom, 16, Exec::default()).unwrap();
                let b = clifford_bound(&t, &geom).unwrap();
                assert!(bf.value <= b.bound, "{v} t = {t}: {} > {}", bf.value, b.bound);
                let seq = clifford_bound_bruteforce(&t, &geom, 16, Exec::Sequential).unwrap();
                assert_eq!(seq.value, bf.value);
            }
        }
    }
}
