//! Threefold-level Bogomolov-Gieseker machinery: the quadratic form
//! `Q^Gamma_{alpha,beta}`, the constants `delta_X` and `gamma`, the
//! parameter region of the reduction to small beta, a certificate checker for the
//! `ch2`-`ch3` inequality chain, and the weighted-hypersurface enumeration.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::chern::{ChernVector3, GeometryData};
use crate::error::{Error, Result};
use crate::exactnum::{s, Scalar};

/// Parameters of `Q^Gamma_{alpha,beta}` for a cycle `Gamma = gamma H^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QGammaParams {
    pub alpha: Scalar,
    pub beta: Scalar,
    /// `Gamma . H = gamma d`.
    pub gamma_h: Scalar,
    pub gamma: Scalar,
}

impl QGammaParams {
    pub fn new(alpha: Scalar, beta: Scalar, gamma: Scalar, geom: &GeometryData) -> Result<QGammaParams> {
        if gamma.is_negative() {
            return Err(Error::Domain("Gamma . H must be nonnegative".into()));
        }
        let gamma_h = &gamma * &geom.d;
        Ok(QGammaParams { alpha, beta, gamma_h, gamma })
    }
}

/// `Q^Gamma_{alpha,beta}(v)` on `H`-degree coordinates `(r, a, b, c)`:
///
/// `(2 alpha - beta^2)(a'^2 - 2 r' b' + 3 gamma r'^2) + 2 b'(2 b' - 3 gamma r') - 6 a'(c' - gamma a')`
/// with primes denoting the `beta`-twist.
pub fn q_gamma(v: &ChernVector3, p: &QGammaParams) -> Scalar {
    let w = v.twist(&p.beta);
    let g = &p.gamma;
    let lead = &(&Scalar::int(2) * &p.alpha) - &(&p.beta * &p.beta);
    let disc = &(&(&w.a * &w.a) - &(&Scalar::int(2) * &(&w.r * &w.b))) + &(&(&Scalar::int(3) * g) * &(&w.r * &w.r));
    let t2 = &(&Scalar::int(2) * &w.b) * &(&(&Scalar::int(2) * &w.b) - &(&(&Scalar::int(3) * g) * &w.r));
    let t3 = &(&Scalar::int(6) * &w.a) * &(&w.c - &(g * &w.a));
    &(&(&lead * &disc) + &t2) - &t3
}

/// `alpha > beta^2/2 + (beta - floor beta)(floor beta + 1 - beta)/2` (strict).
pub fn reduction_region(alpha: &Scalar, beta: &Scalar) -> bool {
    let fl = Scalar::from(beta.floor());
    let half = s("1/2");
    let bound = &(&(&half * beta) * beta) + &(&half * &(&(beta - &fl) * &(&(&fl + &Scalar::one()) - beta)));
    *alpha > bound
}

/// Basis of the kernel of `Zbar = H^2 ch1^beta + i(H ch2 - alpha H^3 ch0)`.
pub fn zbar_kernel_basis(alpha: &Scalar, beta: &Scalar) -> [ChernVector3; 2] {
    [
        ChernVector3::new(Scalar::one(), beta.clone(), alpha.clone(), Scalar::zero()),
        ChernVector3::new(Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::one()),
    ]
}

/// Restriction of a quadratic form to a 2-dimensional subspace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelCheck {
    /// Gram matrix in the given basis (by polarization).
    pub gram: [[Scalar; 2]; 2],
    pub seminegative: bool,
    /// A kernel vector with positive value, if semi-negativity fails.
    pub witness: Option<ChernVector3>,
}

/// Decides semi-negativity of `form` on `span(basis)` exactly via the Gram matrix.
pub fn form_seminegative_on(form: impl Fn(&ChernVector3) -> Scalar, basis: &[ChernVector3; 2]) -> KernelCheck {
    let [k1, k2] = basis;
    let m11 = form(k1);
    let m22 = form(k2);
    let m12 = &(&(&form(&k1.add(k2)) - &m11) - &m22) / &Scalar::int(2);
    let det = &(&m11 * &m22) - &(&m12 * &m12);
    let comb = |x: &Scalar, y: &Scalar| k1.scale(x).add(&k2.scale(y));
    let witness = if m11.is_positive() {
        Some(k1.clone())
    } else if m22.is_positive() {
        Some(k2.clone())
    } else if det.is_negative() {
        if m22.is_negative() {
            Some(comb(&Scalar::one(), &(&(-&m12) / &m22)))
        } else if m11.is_negative() {
            Some(comb(&(&(-&m12) / &m11), &Scalar::one()))
        } else {
            // m11 = m22 = 0, m12 != 0: the form is 2 m12 x y.
            Some(comb(&Scalar::one(), &m12))
        }
    } else {
        None
    };
    KernelCheck { gram: [[m11, m12.clone()], [m12, m22]], seminegative: witness.is_none(), witness }
}

/// Semi-negativity of `Q^Gamma_{alpha,beta}` on `ker Zbar_{alpha,beta}`.
pub fn q_kernel_seminegativity(p: &QGammaParams) -> Result<KernelCheck> {
    if p.alpha <= &(&p.beta * &p.beta) / &Scalar::int(2) {
        return Err(Error::Domain("need alpha > beta^2 / 2".into()));
    }
    Ok(form_seminegative_on(|v| q_gamma(v, p), &zbar_kernel_basis(&p.alpha, &p.beta)))
}

/// `delta_X`: the stated value, the literal max formula, and its terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaReport {
    pub stated: Scalar,
    pub literal: Scalar,
    /// `4/d, e/d, 26/(3d) - e/d - 1/3, (57 - 7e)/(13d), (16 - 3e)/d`.
    pub terms: Vec<Scalar>,
    pub discrepancy: bool,
}

pub fn delta_x(geom: &GeometryData) -> DeltaReport {
    let (d, e) = (&geom.d, &geom.e);
    let i = Scalar::int;
    let terms = vec![
        &i(4) / d,
        e / d,
        &(&(&i(26) / &(&i(3) * d)) - &(e / d)) - &s("1/3"),
        &(&i(57) - &(&i(7) * e)) / &(&i(13) * d),
        &(&i(16) - &(&i(3) * e)) / d,
    ];
    let literal = terms.iter().max().expect("nonempty").clone();
    let stated = geom.delta_stated.clone();
    DeltaReport { discrepancy: literal != stated, stated, literal, terms }
}

/// The stated `delta_X`, or the literal max formula.
pub fn delta_value(geom: &GeometryData, use_stated: bool) -> Scalar {
    let rep = delta_x(geom);
    if use_stated {
        rep.stated
    } else {
        rep.literal
    }
}

/// `gamma = delta_X - td2_coeff`, with the stated `delta_X`.
pub fn gamma_from_delta(geom: &GeometryData) -> Scalar {
    &geom.delta_stated - &geom.td2_coeff
}

/// Slope regime of the `ch2`-`ch3` argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Ch2Ch3Case {
    /// `mu_H` outside `[1/2, 1]`: `r < a`.
    MuOutside,
    /// `mu_H` in `[1/2, 3/4]`: `-r >= -2a + 8b`.
    MuHalfToThreeQuarters,
    /// `mu_H` in `[3/4, 1]`: `-5r >= -7a + 4b`.
    MuThreeQuartersToOne,
    /// `nu_BN = 0`: `b = 0`, with `ch3 + td2 ch1 <= (4/d) a`.
    NuZero,
}

impl Ch2Ch3Case {
    pub const ALL: [Ch2Ch3Case; 4] =
        [Ch2Ch3Case::MuOutside, Ch2Ch3Case::MuHalfToThreeQuarters, Ch2Ch3Case::MuThreeQuartersToOne, Ch2Ch3Case::NuZero];
}

impl std::str::FromStr for Ch2Ch3Case {
    type Err = Error;
    fn from_str(text: &str) -> Result<Ch2Ch3Case> {
        match text {
            "mu_outside" | "1" => Ok(Ch2Ch3Case::MuOutside),
            "mu_half_to_three_quarters" | "2" => Ok(Ch2Ch3Case::MuHalfToThreeQuarters),
            "mu_three_quarters_to_one" | "3" => Ok(Ch2Ch3Case::MuThreeQuartersToOne),
            "nu_zero" | "4" => Ok(Ch2Ch3Case::NuZero),
            _ => Err(Error::Parse(text.to_string())),
        }
    }
}

/// Coefficients of `A a^2 - B ab + C b^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadCoeffs {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

impl QuadCoeffs {
    fn eval(&self, a: &Scalar, b: &Scalar) -> Scalar {
        &(&(&self.a * &(a * a)) - &(&self.b * &(a * b))) + &(&self.c * &(b * b))
    }

    /// `(a - 2b)(A a + (2A - B) b) + (4A - 2B + C) b^2`.
    fn factored(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let two = Scalar::int(2);
        let lin = &(&self.a * a) + &(&(&(&two * &self.a) - &self.b) * b);
        let rest = &(&(&(&Scalar::int(4) * &self.a) - &(&two * &self.b)) + &self.c) * &(b * b);
        &(&(a - &(&two * b)) * &lin) + &rest
    }
}

/// Step-by-step evaluation of the `ch2`-`ch3` chain on one vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ch2Ch3Report {
    pub case: Ch2Ch3Case,
    pub delta: Scalar,
    pub gamma: Scalar,
    pub v: ChernVector3,
    /// Upper bound on `ch3` from the section estimates.
    pub ch3_bound: Scalar,
    pub q_gamma: Scalar,
    /// `4b^2 - (16/d)ab + 6(delta - 2/d)a^2 - 6(delta - e/d)rb - (6/d)ra`.
    pub chain_lower: Scalar,
    /// Quadratic form in `(a, b)` after the case's slope substitution.
    pub coeffs: QuadCoeffs,
    /// The same coefficients as written in the case argument (if they differ).
    pub printed_coeffs: Option<QuadCoeffs>,
    pub case_lower: Scalar,
    pub factored: Scalar,
    /// `q_gamma >= chain_lower >= case_lower`, factorization identity, `case_lower >= 0`.
    pub steps: Vec<(String, bool)>,
    pub holds: bool,
}

/// Certificate for `Q^Gamma(v) >= 0` along the case's inequality chain.
///
/// Requires `a >= 0`, `0 <= 2b <= a`, the case's slope constraint, and
/// `ch3` at most the section bound; violations are errors.
pub fn ch2ch3_certificate(v: &ChernVector3, geom: &GeometryData, case: Ch2Ch3Case) -> Result<Ch2Ch3Report> {
    let (r, a, b, c) = (&v.r, &v.a, &v.b, &v.c);
    let (d, e) = (&geom.d, &geom.e);
    let i = Scalar::int;
    if a.is_negative() || b.is_negative() || &(&i(2) * b) > a {
        return Err(Error::Domain("need a >= 0 and 0 <= 2b <= a".into()));
    }
    let ok = match case {
        Ch2Ch3Case::MuOutside => r < a,
        Ch2Ch3Case::MuHalfToThreeQuarters => -r >= &(&i(-2) * a) + &(&i(8) * b),
        Ch2Ch3Case::MuThreeQuartersToOne => &i(-5) * r >= &(&i(-7) * a) + &(&i(4) * b),
        Ch2Ch3Case::NuZero => b.is_zero(),
    };
    if !ok {
        return Err(Error::Domain(format!("slope constraint of case {case:?} violated")));
    }
    let delta = geom.delta_stated.clone();
    let dd = &delta - &(e / d);
    let gamma = dd.clone();
    let ch3_bound = match case {
        Ch2Ch3Case::NuZero => &(&(&i(4) - e) * a) / d,
        _ => &(&(&(r + &(&i(2) * a)) + &(&(&i(8) * b) / &i(3))) / d) - &(&(e / d) * a),
    };
    if c > &ch3_bound {
        return Err(Error::Domain(format!("ch3 = {c} exceeds the section bound {ch3_bound}")));
    }
    let params = QGammaParams::new(Scalar::zero(), Scalar::zero(), gamma.clone(), geom)?;
    let q = q_gamma(v, &params);
    let chain_lower = match case {
        Ch2Ch3Case::NuZero => &(&i(6) * &(a * a)) * &(&delta - &(&i(4) / d)),
        _ => {
            let t1 = &(&i(4) * &(b * b)) - &(&(&i(16) / d) * &(a * b));
            let t2 = &(&i(6) * &(&delta - &(&i(2) / d))) * &(a * a);
            let t3 = &(&i(6) * &dd) * &(r * b);
            let t4 = &(&i(6) / d) * &(r * a);
            &(&(&t1 + &t2) - &t3) - &t4
        }
    };
    let (coeffs, printed_coeffs) = match case {
        Ch2Ch3Case::MuOutside => {
            let a1 = &i(6) * &(&delta - &(&i(3) / d));
            let b1 = &(&i(6) * &dd) + &(&i(16) / d);
            (QuadCoeffs { a: a1, b: b1, c: i(4) }, None)
        }
        Ch2Ch3Case::MuHalfToThreeQuarters => {
            let c2 = &i(4) + &(&i(48) * &dd);
            let b2 = &(&i(12) * &dd) - &(&i(32) / d);
            let a2 = &(&i(6) * &delta) - &(&i(24) / d);
            let printed = QuadCoeffs { a: &i(6) * &dd, b: b2.clone(), c: c2.clone() };
            (QuadCoeffs { a: a2, b: b2, c: c2 }, Some(printed))
        }
        Ch2Ch3Case::MuThreeQuartersToOne => {
            // Coefficients of 5 Q, divided by 5.
            let five = i(5);
            let c3 = &(&i(20) + &(&i(24) * &dd)) / &five;
            let b3 = &(&(&i(42) * &dd) + &(&i(56) / d)) / &five;
            let a3 = &(&(&i(30) * &delta) - &(&i(102) / d)) / &five;
            let printed = QuadCoeffs { a: a3.clone(), b: &(&(&i(42) * &dd) - &(&i(66) / d)) / &five, c: c3.clone() };
            (QuadCoeffs { a: a3, b: b3, c: c3 }, Some(printed))
        }
        Ch2Ch3Case::NuZero => (QuadCoeffs { a: &i(6) * &(&delta - &(&i(4) / d)), b: i(0), c: i(0) }, None),
    };
    let case_lower = coeffs.eval(a, b);
    let factored = coeffs.factored(a, b);
    let steps = vec![
        ("q_gamma >= chain_lower".to_string(), q >= chain_lower),
        ("chain_lower >= case_lower".to_string(), chain_lower >= case_lower),
        ("factorization identity".to_string(), factored == case_lower),
        ("case_lower >= 0".to_string(), !case_lower.is_negative()),
    ];
    let holds = steps.iter().all(|(_, ok)| *ok) && !q.is_negative();
    Ok(Ch2Ch3Report {
        case,
        delta,
        gamma,
        v: v.clone(),
        ch3_bound,
        q_gamma: q,
        chain_lower,
        coeffs,
        printed_coeffs,
        case_lower,
        factored,
        steps,
        holds,
    })
}

/// The certificate at the extreme `ch3` allowed by the section bound.
pub fn ch2ch3_certificate_extreme(
    r: &Scalar,
    a: &Scalar,
    b: &Scalar,
    geom: &GeometryData,
    case: Ch2Ch3Case,
) -> Result<Ch2Ch3Report> {
    let i = Scalar::int;
    let (d, e) = (&geom.d, &geom.e);
    let c = match case {
        Ch2Ch3Case::NuZero => &(&(&i(4) - e) * a) / d,
        _ => &(&(&(r + &(&i(2) * a)) + &(&(&i(8) * b) / &i(3))) / d) - &(&(e / d) * a),
    };
    ch2ch3_certificate(&ChernVector3::new(r.clone(), a.clone(), b.clone(), c), geom, case)
}

/// Sorted weights `a_1 <= ... <= a_5` of a weighted projective 4-space
/// whose degree-`sum a_i` hypersurface is a candidate Calabi-Yau threefold.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightTuple {
    pub weights: [u64; 5],
    /// `sum a_i = m * lcm(a_i)`.
    pub m: u64,
}

/// All sorted 5-tuples with entries `<= max_weight` such that `sum = m lcm`
/// with `m >= 2`, and no `a_i > 1` divides another entry `a_j` (`j != i`).
pub fn enumerate_weight_tuples(max_weight: u64) -> Result<Vec<WeightTuple>> {
    if max_weight < 4 {
        return Err(Error::Domain("max_weight must be at least 4".into()));
    }
    let mut out = Vec::new();
    let mut w = [0u64; 5];
    fn admissible(prefix: &[u64], x: u64) -> bool {
        prefix.iter().all(|&y| (y == 1 || !x.is_multiple_of(y)) && (x == 1 || y % x != 0))
    }
    fn rec(k: usize, lo: u64, max: u64, w: &mut [u64; 5], out: &mut Vec<WeightTuple>) {
        if k == 5 {
            let sum: u64 = w.iter().sum();
            let l = w.iter().fold(1u64, |acc, &x| acc.lcm(&x));
            if sum.is_multiple_of(l) && sum / l >= 2 {
                out.push(WeightTuple { weights: *w, m: sum / l });
            }
            return;
        }
        for x in lo..=max {
            if !admissible(&w[..k], x) {
                continue;
            }
            w[k] = x;
            // sum = m lcm with m >= 2, and the remaining entries are at most `max`.
            let l = w[..=k].iter().fold(1u64, |acc, &y| acc.lcm(&y));
            let reachable: u64 = w[..=k].iter().sum::<u64>() + (4 - k as u64) * max;
            if 2 * l <= reachable {
                rec(k + 1, x, max, w, out);
            }
        }
    }
    rec(0, 1, max_weight, &mut w, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::Variety;
    use proptest::prelude::*;

    fn tr() -> GeometryData {
        Variety::Triple.geometry()
    }

    fn v(r: &str, a: &str, b: &str, c: &str) -> ChernVector3 {
        ChernVector3::new(s(r), s(a), s(b), s(c))
    }

    #[test]
    fn q_gamma_examples() {
        let p = QGammaParams::new(s("0"), s("0"), s("2/9"), &tr()).unwrap();
        assert_eq!(q_gamma(&v("3", "0", "0", "0"), &p), s("0"));
        assert_eq!(q_gamma(&v("3", "3", "3/2", "1/2"), &p), s("6"));
        assert_eq!(p.gamma_h, s("2/3"));
        assert!(QGammaParams::new(s("0"), s("0"), s("-1"), &tr()).is_err());
    }

    #[test]
    fn reduction_examples() {
        assert!(reduction_region(&s("26/100"), &s("1/2")));
        assert!(reduction_region(&s("1/10"), &s("0")));
        assert!(!reduction_region(&s("1/4"), &s("1/2")));
    }

    #[test]
    fn kernel_examples() {
        let p = QGammaParams::new(s("1"), s("0"), s("2/9"), &tr()).unwrap();
        assert!(q_kernel_seminegativity(&p).unwrap().seminegative);
        let p0 = QGammaParams::new(s("3/7"), s("-2/5"), s("0"), &tr()).unwrap();
        assert!(q_kernel_seminegativity(&p0).unwrap().seminegative);
        // Corrupt the discriminant term's sign: positive on the kernel.
        let alpha = s("2");
        let beta = s("0");
        let bad = |w: &ChernVector3| {
            let good = q_gamma(w, &p);
            let lead = &(&Scalar::int(2) * &alpha) - &(&beta * &beta);
            let disc = &(&(&w.a * &w.a) - &(&Scalar::int(2) * &(&w.r * &w.b))) + &(&s("2/3") * &(&w.r * &w.r));
            &good - &(&(&Scalar::int(2) * &lead) * &disc)
        };
        let p2 = QGammaParams::new(alpha.clone(), beta.clone(), s("2/9"), &tr()).unwrap();
        let check = form_seminegative_on(
            |w| {
                let _ = &p2;
                bad(w)
            },
            &zbar_kernel_basis(&alpha, &beta),
        );
        assert!(!check.seminegative);
        let wit = check.witness.unwrap();
        assert!(bad(&wit).is_positive());
    }

    #[test]
    fn delta_and_gamma() {
        let t = delta_x(&tr());
        assert_eq!(t.stated, s("25/18"));
        assert_eq!(t.literal, s("11/6"));
        assert!(t.discrepancy);
        let dbl = Variety::Double.geometry();
        let d = delta_x(&dbl);
        assert_eq!(d.stated, s("13/6"));
        assert_eq!(d.literal, s("5/2"));
        assert_eq!(gamma_from_delta(&tr()), s("2/9"));
        assert_eq!(gamma_from_delta(&dbl), s("1/3"));
    }

    #[test]
    fn certificate_examples() {
        let rep = ch2ch3_certificate_extreme(&s("1"), &s("2"), &s("1"), &tr(), Ch2Ch3Case::MuOutside).unwrap();
        assert!(rep.holds, "{rep:?}");
        let a1 = &rep.coeffs.a;
        let b1 = &rep.coeffs.b;
        let tail = &(&(&Scalar::int(4) * a1) - &(&Scalar::int(2) * b1)) + &Scalar::int(4);
        assert_eq!(rep.case_lower, tail);
        let zero = ch2ch3_certificate(&ChernVector3::zero(), &tr(), Ch2Ch3Case::NuZero).unwrap();
        assert_eq!(zero.q_gamma, s("0"));
        assert!(zero.holds);
        assert!(ch2ch3_certificate_extreme(&s("3"), &s("2"), &s("1"), &tr(), Ch2Ch3Case::MuOutside).is_err());
        assert!(ch2ch3_certificate_extreme(&s("1"), &s("2"), &s("3/2"), &tr(), Ch2Ch3Case::MuOutside).is_err());
    }

    #[test]
    fn weights_thirty() {
        let w = enumerate_weight_tuples(30).unwrap();
        let ws: Vec<[u64; 5]> = w.iter().map(|t| t.weights).collect();
        assert_eq!(ws, vec![[1, 1, 1, 1, 1], [1, 1, 1, 1, 2], [1, 1, 1, 1, 4]]);
        assert_eq!(w[1].m, 3);
        assert_eq!(w[2].m, 2);
    }

    fn arb_q() -> impl Strategy<Value = Scalar> {
        (-60i64..60, 1i64..12).prop_map(|(a, b)| Scalar::frac(a, b))
    }

    proptest! {
        #[test]
        fn q_gamma_is_quadratic(r in arb_q(), a in arb_q(), b in arb_q(), c in arb_q(),
                                al in arb_q(), be in arb_q(), l in arb_q()) {
            let p = QGammaParams::new(al, be, s("1/3"), &tr()).unwrap();
            let w = ChernVector3::new(r, a, b, c);
            prop_assert_eq!(q_gamma(&w.scale(&l), &p), &(&l * &l) * &q_gamma(&w, &p));
        }

        #[test]
        fn q_gamma_baseline_expansion(r in arb_q(), a in arb_q(), b in arb_q(), c in arb_q()) {
            let p = QGammaParams::new(s("0"), s("0"), s("0"), &tr()).unwrap();
            let w = ChernVector3::new(r, a.clone(), b.clone(), c.clone());
            let hand = &(&Scalar::int(4) * &(&b * &b)) - &(&Scalar::int(6) * &(&a * &c));
            prop_assert_eq!(q_gamma(&w, &p), hand);
        }

        #[test]
        fn kernel_seminegative_in_region(al in 1i64..200, be in -40i64..40) {
            let alpha = Scalar::frac(al, 20);
            let beta = Scalar::frac(be, 10);
            prop_assume!(reduction_region(&alpha, &beta));
            for variety in Variety::ALL {
                let geom = variety.geometry();
                let p = QGammaParams::new(alpha.clone(), beta.clone(), geom.gamma.clone(), &geom).unwrap();
                prop_assert!(q_kernel_seminegativity(&p).unwrap().seminegative);
            }
        }
    }
}
