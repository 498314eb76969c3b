//! Numerical layer of the stability conditions `(Z^{a,b}_{beta,alpha}, A^{beta,alpha})`:
//! the central charge, the parameter set `U_gamma`, and the support-property
//! quadratic form `K Delta + Nabla` restricted to `ker Z`.

use serde::{Deserialize, Serialize};

use crate::chern::ChernVector3;
use crate::error::{Error, Result};
use crate::exactnum::{s, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabParams {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub a: Scalar,
    pub b: Scalar,
    pub gamma: Scalar,
}

impl StabParams {
    pub fn new(alpha: Scalar, beta: Scalar, a: Scalar, b: Scalar, gamma: Scalar) -> StabParams {
        StabParams { alpha, beta, a, b, gamma }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralChargeValue {
    pub re: Scalar,
    pub im: Scalar,
}

/// `Z = -ch3' + b Hch2' + a H^2ch1' + i (Hch2' - alpha^2/2 H^3ch0')` with primes the `beta`-twist.
pub fn central_charge(v: &ChernVector3, p: &StabParams) -> CentralChargeValue {
    let w = v.twist(&p.beta);
    let re = &(&(&p.b * &w.b) + &(&p.a * &w.a)) - &w.c;
    let im = &w.b - &(&(&s("1/2") * &(&p.alpha * &p.alpha)) * &w.r);
    CentralChargeValue { re, im }
}

/// `alpha > 0`, `alpha^2 + (beta - floor beta - 1/2)^2 > 1/4`, `a > alpha^2/6 + |b| alpha/2 + gamma`.
pub fn in_u_gamma(p: &StabParams) -> bool {
    if !p.alpha.is_positive() {
        return false;
    }
    let frac = &(&p.beta - &Scalar::from(p.beta.floor())) - &s("1/2");
    let disc = &(&p.alpha * &p.alpha) + &(&frac * &frac);
    let bound = &(&(&(&p.alpha * &p.alpha) / &Scalar::int(6)) + &(&(&p.b.abs() * &p.alpha) / &Scalar::int(2))) + &p.gamma;
    disc > s("1/4") && p.a > bound
}

/// Basis of `ker Z` in `beta`-twisted coordinates: `(1, 0, alpha^2/2, b alpha^2/2)` and `(0, 1, 0, a)`.
pub fn kernel_basis(p: &StabParams) -> [ChernVector3; 2] {
    let half_a2 = &s("1/2") * &(&p.alpha * &p.alpha);
    [
        ChernVector3::new(Scalar::one(), Scalar::zero(), half_a2.clone(), &p.b * &half_a2),
        ChernVector3::new(Scalar::zero(), Scalar::one(), Scalar::zero(), p.a.clone()),
    ]
}

/// A matrix entry `constant + k_coeff * K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearInK {
    pub constant: Scalar,
    pub k_coeff: Scalar,
}

impl LinearInK {
    pub fn eval(&self, k: &Scalar) -> Scalar {
        &self.constant + &(&self.k_coeff * k)
    }
}

/// `[[-alpha^2 K + alpha^4, -(3/2) b alpha^2], [-(3/2) b alpha^2, K - 6(a - gamma)]]`:
/// the form `K Delta + Nabla` in the basis of [`kernel_basis`].
pub fn kernel_matrix(p: &StabParams) -> [[LinearInK; 2]; 2] {
    let a2 = &p.alpha * &p.alpha;
    let off = LinearInK { constant: &(&s("-3/2") * &p.b) * &a2, k_coeff: Scalar::zero() };
    [
        [LinearInK { constant: &a2 * &a2, k_coeff: -&a2 }, off.clone()],
        [off, LinearInK { constant: &Scalar::int(-6) * &(&p.a - &p.gamma), k_coeff: Scalar::one() }],
    ]
}

/// `kernel_matrix` at a concrete `K`.
pub fn kernel_matrix_at(p: &StabParams, k: &Scalar) -> [[Scalar; 2]; 2] {
    let m = kernel_matrix(p);
    [[m[0][0].eval(k), m[0][1].eval(k)], [m[1][0].eval(k), m[1][1].eval(k)]]
}

/// Leading-minor test: top-left `< 0` and determinant `> 0`.
pub fn negative_definite(m: &[[Scalar; 2]; 2]) -> bool {
    let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
    m[0][0].is_negative() && det.is_positive()
}

pub fn determinant(m: &[[Scalar; 2]; 2]) -> Scalar {
    &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
}

/// Open interval of `K` on which the kernel matrix is negative definite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportInterval {
    #[serde(rename = "K_lo")]
    pub k_lo: Scalar,
    #[serde(rename = "K_hi")]
    pub k_hi: Scalar,
    pub verified_midpoint: bool,
}

/// Roots of `-K^2 + (6A + alpha^2) K - 6A alpha^2 - (9/4) b^2 alpha^2` with `A = a - gamma`.
pub fn support_interval(p: &StabParams) -> Result<SupportInterval> {
    if !in_u_gamma(p) {
        return Err(Error::Domain("parameters are not in U_gamma".into()));
    }
    let a2 = &p.alpha * &p.alpha;
    let big_a = &Scalar::int(6) * &(&p.a - &p.gamma);
    // (6A + alpha^2)^2 - 4(6A alpha^2 + 9/4 b^2 alpha^2) = (6A - alpha^2)^2 - 9 b^2 alpha^2
    let diff = &big_a - &a2;
    let disc = &(&diff * &diff) - &(&(&Scalar::int(9) * &(&p.b * &p.b)) * &a2);
    if !disc.is_positive() {
        return Err(Error::Domain("empty support interval".into()));
    }
    if !disc.is_rational() {
        return Err(Error::Unsupported("irrational parameters under a square root".into()));
    }
    let root = Scalar::sqrt_rational(&disc)?;
    let sum = &big_a + &a2;
    let half = s("1/2");
    let k_lo = &half * &(&sum - &root);
    let k_hi = &half * &(&sum + &root);
    let mid = &half * &(&k_lo + &k_hi);
    let verified_midpoint = negative_definite(&kernel_matrix_at(p, &mid));
    Ok(SupportInterval { k_lo, k_hi, verified_midpoint })
}

/// `Nabla = 3 gamma alpha^2 r'^2 + 2 b'(2 b' - 3 gamma r') - 6 a'(c' - gamma a')`.
pub fn nabla_bar(v: &ChernVector3, p: &StabParams) -> Scalar {
    let w = v.twist(&p.beta);
    let g = &p.gamma;
    let i = Scalar::int;
    let t1 = &(&(&i(3) * g) * &(&p.alpha * &p.alpha)) * &(&w.r * &w.r);
    let t2 = &(&i(2) * &w.b) * &(&(&i(2) * &w.b) - &(&(&i(3) * g) * &w.r));
    let t3 = &(&i(6) * &w.a) * &(&w.c - &(g * &w.a));
    &(&t1 + &t2) - &t3
}

/// `K Delta(v') + Nabla(v')`.
pub fn q_k_form(v: &ChernVector3, k: &Scalar, p: &StabParams) -> Scalar {
    let w = v.twist(&p.beta);
    let disc = &(&w.a * &w.a) - &(&Scalar::int(2) * &(&w.r * &w.b));
    &(k * &disc) + &nabla_bar(v, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bg3::{q_gamma, QGammaParams};
    use crate::chern::Variety;
    use proptest::prelude::*;

    fn p(alpha: &str, beta: &str, a: &str, b: &str, gamma: &str) -> StabParams {
        StabParams::new(s(alpha), s(beta), s(a), s(b), s(gamma))
    }

    fn v(r: &str, a: &str, b: &str, c: &str) -> ChernVector3 {
        ChernVector3::new(s(r), s(a), s(b), s(c))
    }

    #[test]
    fn central_charge_examples() {
        let q = p("1", "0", "1", "0", "2/9");
        assert_eq!(central_charge(&v("0", "0", "0", "1"), &q), CentralChargeValue { re: s("-1"), im: s("0") });
        assert_eq!(central_charge(&v("3", "0", "0", "0"), &q), CentralChargeValue { re: s("0"), im: s("-3/2") });
    }

    #[test]
    fn u_gamma_examples() {
        assert!(in_u_gamma(&p("1", "0", "1", "0", "2/9")));
        assert!(!in_u_gamma(&p("1/4", "1/2", "5", "0", "2/9")));
        assert!(!in_u_gamma(&p("0", "0", "5", "0", "2/9")));
    }

    #[test]
    fn interval_examples() {
        let i1 = support_interval(&p("1", "0", "1", "0", "2/9")).unwrap();
        assert_eq!((i1.k_lo, i1.k_hi), (s("1"), s("14/3")));
        let i2 = support_interval(&p("1", "0", "11/9", "0", "2/9")).unwrap();
        assert_eq!((i2.k_lo, i2.k_hi), (s("1"), s("6")));
        let q = p("1", "0", "2", "1/2", "2/9");
        let i3 = support_interval(&q).unwrap();
        assert!(i3.verified_midpoint);
        assert!(!i3.k_lo.is_rational());
        for k in [&i3.k_lo, &i3.k_hi] {
            assert!(determinant(&kernel_matrix_at(&q, k)).is_zero());
        }
        assert!(support_interval(&p("1/4", "1/2", "5", "0", "2/9")).is_err());
    }

    #[test]
    fn basis_annihilates_z() {
        let q = p("3/2", "0", "2", "1/3", "2/9");
        for k in kernel_basis(&q) {
            let z = central_charge(&k, &q);
            assert!(z.re.is_zero() && z.im.is_zero());
        }
        assert!(q_k_form(&v("0", "0", "0", "1"), &s("3"), &q).is_zero());
    }

    fn arb_q() -> impl Strategy<Value = Scalar> {
        (-40i64..40, 1i64..9).prop_map(|(a, b)| Scalar::frac(a, b))
    }

    fn arb_params() -> impl Strategy<Value = StabParams> {
        (1i64..40, -30i64..30, 0i64..200, -30i64..30, prop::bool::ANY).prop_map(|(al, be, a, b, dbl)| {
            let gamma = if dbl { Variety::Double.geometry().gamma } else { Variety::Triple.geometry().gamma };
            StabParams::new(Scalar::frac(al, 10), Scalar::frac(be, 7), Scalar::frac(a, 10), Scalar::frac(b, 10), gamma)
        })
    }

    proptest! {
        #[test]
        fn matrix_matches_polarized_form(q in arb_params(), k in arb_q()) {
            // Independent oracle: Gram matrix of q_k_form on the basis, untwisted back.
            let beta = q.beta.clone();
            let untwist = |w: &ChernVector3| w.twist(&-&beta);
            let [k1, k2] = kernel_basis(&q);
            let (u1, u2) = (untwist(&k1), untwist(&k2));
            let f = |w: &ChernVector3| q_k_form(w, &k, &q);
            let m11 = f(&u1);
            let m22 = f(&u2);
            let m12 = &(&(&f(&u1.add(&u2)) - &m11) - &m22) / &Scalar::int(2);
            let m = kernel_matrix_at(&q, &k);
            prop_assert_eq!(&m[0][0], &m11);
            prop_assert_eq!(&m[1][1], &m22);
            prop_assert_eq!(&m[0][1], &m12);
            prop_assert!(central_charge(&u1, &q).re.is_zero() && central_charge(&u2, &q).im.is_zero());
        }

        #[test]
        fn interval_in_u_gamma(q in arb_params(), x in -20i64..20, y in -20i64..20) {
            prop_assume!(in_u_gamma(&q));
            let iv = support_interval(&q).unwrap();
            prop_assert!(iv.k_lo < iv.k_hi);
            prop_assert!(iv.verified_midpoint);
            for k in [&iv.k_lo, &iv.k_hi] {
                prop_assert!(determinant(&kernel_matrix_at(&q, k)).is_zero());
            }
            prop_assume!(x != 0 || y != 0);
            let mid = &s("1/2") * &(&iv.k_lo + &iv.k_hi);
            let [k1, k2] = kernel_basis(&q);
            let w = k1.scale(&Scalar::int(x)).add(&k2.scale(&Scalar::int(y))).twist(&-&q.beta);
            prop_assert!(q_k_form(&w, &mid, &q).is_negative());
        }

        #[test]
        fn nabla_matches_q_gamma_at_origin(r in arb_q(), a in arb_q(), b in arb_q(), c in arb_q()) {
            let geom = Variety::Triple.geometry();
            let w = ChernVector3::new(r, a, b, c);
            let sp = StabParams::new(Scalar::zero(), Scalar::zero(), s("1"), s("0"), geom.gamma.clone());
            let qp = QGammaParams::new(Scalar::zero(), Scalar::zero(), geom.gamma.clone(), &geom).unwrap();
            prop_assert_eq!(nabla_bar(&w, &sp), q_gamma(&w, &qp));
        }

        #[test]
        fn central_charge_additive_and_twist(q in arb_params(), r in arb_q(), a in arb_q(), b in arb_q(), c in arb_q()) {
            let w1 = ChernVector3::new(r.clone(), a.clone(), b.clone(), c.clone());
            let w2 = ChernVector3::new(c, b, a, r);
            let z = central_charge(&w1.add(&w2), &q);
            let (z1, z2) = (central_charge(&w1, &q), central_charge(&w2, &q));
            prop_assert_eq!(z.re, &z1.re + &z2.re);
            prop_assert_eq!(z.im, &z1.im + &z2.im);
            let q0 = StabParams { beta: Scalar::zero(), ..q.clone() };
            prop_assert_eq!(central_charge(&w1.twist(&q.beta), &q0), z1);
        }
    }
}
