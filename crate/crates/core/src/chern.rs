//! Chern characters in H-degree coordinates and the geometry registry.
//!
//! Threefold classes are `(H^3 ch0, H^2 ch1, H ch2, ch3)`, classes on the
//! surfaces are `(H^2 ch0, H ch1, ch2)` and classes on the curve are
//! `(rank, degree)`. Raw Chern classes are never stored.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// The two Calabi-Yau threefolds treated by the engine.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variety {
    /// Triple cover of P^3: sextic in P(1,1,1,1,2).
    Triple,
    /// Double cover of P^3: octic in P(1,1,1,1,4).
    Double,
}

impl Variety {
    pub const ALL: [Variety; 2] = [Variety::Triple, Variety::Double];

    pub fn geometry(self) -> GeometryData {
        GeometryData::new(self)
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variety::Triple => "triple",
            Variety::Double => "double",
        })
    }
}

impl FromStr for Variety {
    type Err = Error;
    fn from_str(s: &str) -> Result<Variety> {
        match s {
            "triple" | "triple_cover" => Ok(Variety::Triple),
            "double" | "double_cover" => Ok(Variety::Double),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

/// Numerical constants of a variety `X`, its surface `T`, the quadric `S`
/// and the curve `C = T ∩ S`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometryData {
    pub variety: Variety,
    /// `H^3` on `X`.
    pub d: Scalar,
    /// `H . td_2(X)`.
    pub e: Scalar,
    /// `td_2(X) = td2_coeff * H^2`.
    pub td2_coeff: Scalar,
    /// `H_T^2` on the surface `T`.
    pub ht_sq: Scalar,
    /// `K_T = kt_coeff * H_T`.
    pub kt_coeff: Scalar,
    /// Constant term of Riemann-Roch on `T`: `chi = ch2 - H ch1 + chi_const ch0`.
    pub chi_const: Scalar,
    /// `deg(F|_C) = restriction_mult * H_T ch1(F)`.
    pub restriction_mult: Scalar,
    /// `H_S^2` on the quadric surface `S`.
    pub hs_sq: Scalar,
    pub genus: u32,
    /// `t = mu / t_scale` for bundles on `C`.
    pub t_scale: Scalar,
    /// `ch1(i_* F) = pushforward_c1 * r * H_S`.
    pub pushforward_c1: Scalar,
    /// `ch2(i_* F) = r (mu - pushforward_shift)`.
    pub pushforward_shift: Scalar,
    /// Maximal width of the first wall.
    pub wall_width: Scalar,
    /// `nu_BN(i_* F) = t - bn_offset`.
    pub bn_offset: Scalar,
    /// Coefficient of the correction cycle `Gamma = gamma H^2`.
    pub gamma: Scalar,
    /// The stated value of `delta_X`.
    pub delta_stated: Scalar,
}

impl GeometryData {
    pub fn new(variety: Variety) -> GeometryData {
        let f = Scalar::frac;
        let i = Scalar::int;
        match variety {
            Variety::Triple => GeometryData {
                variety,
                d: i(3),
                e: f(7, 2),
                td2_coeff: f(7, 6),
                ht_sq: i(6),
                kt_coeff: i(2),
                chi_const: i(11),
                restriction_mult: i(2),
                hs_sq: i(2),
                genus: 25,
                t_scale: i(12),
                pushforward_c1: i(6),
                pushforward_shift: i(36),
                wall_width: i(6),
                bn_offset: i(3),
                gamma: f(2, 9),
                delta_stated: f(25, 18),
            },
            Variety::Double => GeometryData {
                variety,
                d: i(2),
                e: f(11, 3),
                td2_coeff: f(11, 6),
                ht_sq: i(4),
                kt_coeff: i(2),
                chi_const: i(10),
                restriction_mult: i(4),
                hs_sq: i(2),
                genus: 49,
                t_scale: i(16),
                pushforward_c1: i(8),
                pushforward_shift: i(64),
                wall_width: i(8),
                bn_offset: i(4),
                gamma: f(1, 3),
                delta_stated: f(13, 6),
            },
        }
    }

    /// Scale of the polygon plane: `H_S . ch1(i_* F)` per unit rank.
    pub fn polygon_scale(&self) -> Scalar {
        &self.hs_sq * &self.pushforward_c1
    }
}

/// A slope value: finite, or `+infinity` when the denominator vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Slope {
    Finite(Scalar),
    Infinite,
}

impl Slope {
    pub fn finite(&self) -> Option<&Scalar> {
        match self {
            Slope::Finite(x) => Some(x),
            Slope::Infinite => None,
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(x) => write!(f, "{x}"),
            Slope::Infinite => f.write_str("+inf"),
        }
    }
}

fn ratio(num: &Scalar, den: &Scalar) -> Slope {
    if den.is_zero() {
        Slope::Infinite
    } else {
        Slope::Finite(num / den)
    }
}

/// `(H^3 ch0, H^2 ch1, H ch2, ch3)` on the threefold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernVector3 {
    pub r: Scalar,
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

impl ChernVector3 {
    pub fn new(r: Scalar, a: Scalar, b: Scalar, c: Scalar) -> ChernVector3 {
        ChernVector3 { r, a, b, c }
    }

    pub fn zero() -> ChernVector3 {
        ChernVector3::new(Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::zero())
    }

    /// `ch^beta = e^{-beta H} ch`.
    pub fn twist(&self, beta: &Scalar) -> ChernVector3 {
        let b2 = &(beta * beta) / &Scalar::int(2);
        let b3 = &(&b2 * beta) / &Scalar::int(3);
        ChernVector3 {
            r: self.r.clone(),
            a: &self.a - &(beta * &self.r),
            b: &(&self.b - &(beta * &self.a)) + &(&b2 * &self.r),
            c: &(&(&self.c - &(beta * &self.b)) + &(&b2 * &self.a)) - &(&b3 * &self.r),
        }
    }

    pub fn mu(&self) -> Slope {
        ratio(&self.a, &self.r)
    }

    pub fn nu_bn(&self) -> Slope {
        ratio(&self.b, &self.a)
    }

    /// `(H^2 ch1)^2 - 2 (H^3 ch0)(H ch2)`.
    pub fn discriminant(&self) -> Scalar {
        &(&self.a * &self.a) - &(&Scalar::int(2) * &(&self.r * &self.b))
    }

    pub fn scale(&self, k: &Scalar) -> ChernVector3 {
        ChernVector3::new(k * &self.r, k * &self.a, k * &self.b, k * &self.c)
    }

    pub fn add(&self, o: &ChernVector3) -> ChernVector3 {
        ChernVector3::new(&self.r + &o.r, &self.a + &o.a, &self.b + &o.b, &self.c + &o.c)
    }

    pub fn to_array(&self) -> [Scalar; 4] {
        [self.r.clone(), self.a.clone(), self.b.clone(), self.c.clone()]
    }

    pub fn from_array(v: [Scalar; 4]) -> ChernVector3 {
        let [r, a, b, c] = v;
        ChernVector3 { r, a, b, c }
    }
}

/// `(H^2 ch0, H ch1, ch2)` on a surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernVector2 {
    pub r: Scalar,
    pub a: Scalar,
    pub b: Scalar,
}

impl ChernVector2 {
    pub fn new(r: Scalar, a: Scalar, b: Scalar) -> ChernVector2 {
        ChernVector2 { r, a, b }
    }

    pub fn twist(&self, beta: &Scalar) -> ChernVector2 {
        let b2 = &(beta * beta) / &Scalar::int(2);
        ChernVector2 {
            r: self.r.clone(),
            a: &self.a - &(beta * &self.r),
            b: &(&self.b - &(beta * &self.a)) + &(&b2 * &self.r),
        }
    }

    pub fn mu(&self) -> Slope {
        ratio(&self.a, &self.r)
    }

    pub fn nu_bn(&self) -> Slope {
        ratio(&self.b, &self.a)
    }

    pub fn discriminant(&self) -> Scalar {
        &(&self.a * &self.a) - &(&Scalar::int(2) * &(&self.r * &self.b))
    }
}

/// `(rank, degree)` on the curve `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernVector1 {
    pub r: Scalar,
    pub d: Scalar,
}

impl ChernVector1 {
    pub fn new(r: Scalar, d: Scalar) -> ChernVector1 {
        ChernVector1 { r, d }
    }

    pub fn mu(&self) -> Slope {
        ratio(&self.d, &self.r)
    }

    /// Normalized slope `t = mu / t_scale`.
    pub fn t(&self, geom: &GeometryData) -> Result<Scalar> {
        match self.mu() {
            Slope::Finite(mu) => Ok(&mu / &geom.t_scale),
            Slope::Infinite => Err(Error::Domain("zero rank on the curve".into())),
        }
    }
}

/// `ch(i_* F)` on the quadric `S` for a bundle `F` on `C`, in H-degree
/// coordinates: `(0, H_S^2 * pushforward_c1 * r, r (mu - pushforward_shift))`.
pub fn grr_pushforward(f: &ChernVector1, geom: &GeometryData) -> Result<ChernVector2> {
    if !f.r.is_positive() {
        return Err(Error::Domain("pushforward needs positive rank".into()));
    }
    let mu = &f.d / &f.r;
    Ok(ChernVector2 {
        r: Scalar::zero(),
        a: &geom.polygon_scale() * &f.r,
        b: &f.r * &(&mu - &geom.pushforward_shift),
    })
}

/// Restriction of a class on `T` (given as `(H_T^2 ch0, H_T ch1, ch2)`) to `C`.
///
/// Plain: `(ch0, m H ch1)`. Dual (`F^v(2H_T)|_C`): `(ch0, 2m H^2 ch0 - m H ch1)`
/// with `m = restriction_mult`; the rank is `r / H_T^2`.
pub fn restrict_to_curve(f: &ChernVector2, geom: &GeometryData, dualize: bool) -> ChernVector1 {
    let rank = &f.r / &geom.ht_sq;
    let m = &geom.restriction_mult;
    let deg = if dualize {
        &(&(&Scalar::int(2) * m) * &f.r) - &(m * &f.a)
    } else {
        m * &f.a
    };
    ChernVector1::new(rank, deg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::s;
    use proptest::prelude::*;

    fn v3(x: [&str; 4]) -> ChernVector3 {
        ChernVector3::new(s(x[0]), s(x[1]), s(x[2]), s(x[3]))
    }

    #[test]
    fn twist_structure_sheaf() {
        let o = v3(["3", "0", "0", "0"]);
        assert_eq!(o.twist(&Scalar::one()), v3(["3", "-3", "3/2", "-1/2"]));
        assert_eq!(o.twist(&Scalar::zero()), o);
    }

    #[test]
    fn twist2_examples() {
        let o = ChernVector2::new(s("8"), s("0"), s("0"));
        assert_eq!(o.twist(&Scalar::one()), ChernVector2::new(s("8"), s("-8"), s("4")));
        let tor = ChernVector2::new(s("0"), s("5"), s("7"));
        assert_eq!(tor.twist(&s("2")), ChernVector2::new(s("0"), s("5"), s("-3")));
    }

    #[test]
    fn slopes_and_discriminant() {
        let oh = v3(["3", "3", "3/2", "1/2"]);
        assert_eq!(oh.mu(), Slope::Finite(s("1")));
        assert_eq!(oh.discriminant(), Scalar::zero());
        assert_eq!(v3(["3", "0", "0", "0"]).discriminant(), Scalar::zero());
        assert_eq!(ChernVector2::new(s("0"), s("6"), s("-18")).nu_bn(), Slope::Finite(s("-3")));
        assert_eq!(ChernVector2::new(s("0"), s("1"), s("0")).nu_bn(), Slope::Finite(s("0")));
        assert_eq!(ChernVector2::new(s("0"), s("0"), s("1")).nu_bn(), Slope::Infinite);
    }

    #[test]
    fn pushforward_examples() {
        let tri = Variety::Triple.geometry();
        let dbl = Variety::Double.geometry();
        // r = 2, mu = 6: ch1 = 12 H_S, i.e. H_S.ch1 = 24 in H-degree.
        let f = ChernVector1::new(s("2"), s("12"));
        assert_eq!(grr_pushforward(&f, &tri).unwrap(), ChernVector2::new(s("0"), s("24"), s("-60")));
        let f = ChernVector1::new(s("1"), s("64"));
        assert_eq!(grr_pushforward(&f, &dbl).unwrap(), ChernVector2::new(s("0"), s("16"), s("0")));
        let f = ChernVector1::new(s("1"), s("36"));
        assert_eq!(grr_pushforward(&f, &tri).unwrap(), ChernVector2::new(s("0"), s("12"), s("0")));
        assert!(grr_pushforward(&ChernVector1::new(s("0"), s("1")), &tri).is_err());
    }

    #[test]
    fn restriction_examples() {
        let tri = Variety::Triple.geometry();
        let f = ChernVector2::new(s("6"), s("3"), s("0"));
        assert_eq!(restrict_to_curve(&f, &tri, false), ChernVector1::new(s("1"), s("6")));
        assert_eq!(restrict_to_curve(&f, &tri, true), ChernVector1::new(s("1"), s("18")));
    }

    fn arb_q() -> impl Strategy<Value = Scalar> {
        (-40i64..40, 1i64..12).prop_map(|(a, b)| Scalar::frac(a, b))
    }

    fn arb_v3() -> impl Strategy<Value = ChernVector3> {
        (arb_q(), arb_q(), arb_q(), arb_q()).prop_map(|(r, a, b, c)| ChernVector3::new(r, a, b, c))
    }

    proptest! {
        #[test]
        fn twist_group_law(v in arb_v3(), b1 in arb_q(), b2 in arb_q()) {
            prop_assert_eq!(v.twist(&b1).twist(&b2), v.twist(&(&b1 + &b2)));
        }

        #[test]
        fn twist2_group_law(r in arb_q(), a in arb_q(), b in arb_q(), b1 in arb_q(), b2 in arb_q()) {
            let v = ChernVector2::new(r, a, b);
            prop_assert_eq!(v.twist(&b1).twist(&b2), v.twist(&(&b1 + &b2)));
            prop_assert_eq!(v.twist(&b1).discriminant(), v.discriminant());
        }

        #[test]
        fn discriminant_twist_invariant(v in arb_v3(), beta in arb_q()) {
            prop_assert_eq!(v.twist(&beta).discriminant(), v.discriminant());
        }

        #[test]
        fn pushforward_nu_bn_is_t_minus_offset(r in 1i64..9, d in -200i64..200, tri in any::<bool>()) {
            let geom = if tri { Variety::Triple.geometry() } else { Variety::Double.geometry() };
            let f = ChernVector1::new(Scalar::int(r), Scalar::int(d));
            let p = grr_pushforward(&f, &geom).unwrap();
            prop_assert!(p.r.is_zero() && p.a.is_positive());
            let t = f.t(&geom).unwrap();
            prop_assert_eq!(p.nu_bn(), Slope::Finite(&t - &geom.bn_offset));
        }

        #[test]
        fn restriction_preserves_t(r in 1i64..9, a in -40i64..40, tri in any::<bool>()) {
            let geom = if tri { Variety::Triple.geometry() } else { Variety::Double.geometry() };
            let f = ChernVector2::new(&Scalar::int(r) * &geom.ht_sq, Scalar::int(a), Scalar::zero());
            let mu_t = &f.a / &f.r;
            let plain = restrict_to_curve(&f, &geom, false);
            let dual = restrict_to_curve(&f, &geom, true);
            prop_assert_eq!(plain.t(&geom).unwrap(), mu_t.clone());
            prop_assert_eq!(dual.t(&geom).unwrap(), &Scalar::int(2) - &mu_t);
        }
    }
}
