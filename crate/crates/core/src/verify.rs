//! Named consistency checks over one geometry registry entry; the
//! single-command reproduction entry point behind `tiltstab verify-all`.

use serde::{Deserialize, Serialize};

use crate::bg3::{
    ch2ch3_certificate_extreme, delta_x, enumerate_weight_tuples, gamma_from_delta, q_kernel_seminegativity,
    reduction_region, Ch2Ch3Case, QGammaParams,
};
use crate::bounds::{grid, is_star_shaped, make_upsilon_tilde, make_xi, upsilon, upsilon_tilde};
use crate::chern::GeometryData;
use crate::clifford::{
    clifford_bound, clifford_cases, printed_clifford, printed_restriction_table, rational_samples, restriction_bound,
    restriction_vs_xi,
};
use crate::error::Result;
use crate::exactnum::{s, Scalar};
use crate::par::Exec;
use crate::stab::{determinant, in_u_gamma, kernel_matrix_at, support_interval, StabParams};
use crate::walls::{bn_lower_bound, bn_upper_bound, first_wall};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// First few failures, empty on success.
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub variety: String,
    pub samples: usize,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
    pub all_pass: bool,
}

const MAX_REPORTED: usize = 5;

struct Collector {
    failures: Vec<String>,
}

impl Collector {
    fn new() -> Collector {
        Collector { failures: Vec::new() }
    }

    fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }

    /// Records an error as a failure and returns the success value.
    fn ok<T>(&mut self, r: Result<T>, ctx: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.failures.push(format!("{}: {e}", ctx()));
                None
            }
        }
    }

    fn finish(mut self, name: &str) -> Check {
        let pass = self.failures.is_empty();
        let extra = self.failures.len().saturating_sub(MAX_REPORTED);
        self.failures.truncate(MAX_REPORTED);
        if extra > 0 {
            self.failures.push(format!("... and {extra} more"));
        }
        Check { name: name.to_string(), pass, failures: self.failures }
    }
}

fn check_xi() -> Check {
    let mut c = Collector::new();
    let xi = make_xi();
    for p in ["1/4", "1/2", "3/4"] {
        let x = s(p);
        let v = xi.eval(&x).ok();
        c.expect(xi.left_limit(&x) == v && xi.right_limit(&x) == v, || format!("discontinuous at {p}"));
    }
    c.expect(xi.eval(&s("0")).ok() == Some(s("0")), || "Xi(0) != 0".into());
    c.expect(xi.eval(&s("1")).ok() == Some(s("1/2")), || "Xi(1) != 1/2".into());
    c.finish("xi_identities")
}

fn check_upsilon(samples: usize) -> Check {
    let mut c = Collector::new();
    for k in 0..=4 * samples {
        let x = &Scalar::frac(k as i64, samples as i64) - &Scalar::int(2);
        c.expect(upsilon(&(&x + &Scalar::one())) == &(&upsilon(&x) + &x) + &s("1/2"), || format!("shift at {x}"));
        c.expect(upsilon(&-&x) == upsilon(&x), || format!("not even at {x}"));
        c.expect(upsilon(&x) <= upsilon_tilde(&x), || format!("Upsilon > Upsilon~ at {x}"));
    }
    c.finish("upsilon_identities")
}

fn check_star(samples: usize) -> Check {
    let mut c = Collector::new();
    let step = Scalar::frac(1, samples as i64);
    if let Some(curve) = c.ok(make_upsilon_tilde(&s("-3"), &s("3")), || "Upsilon~".into()) {
        let g = grid(&s("-3"), &s("3"), &step);
        if let Some(w) = c.ok(is_star_shaped(&curve, &g, std::slice::from_ref(&step)), || "star test".into()) {
            c.expect(w.is_none(), || format!("witness {w:?}"));
        }
    }
    c.finish("upsilon_tilde_star_shaped")
}

fn check_constants(geom: &GeometryData, warnings: &mut Vec<String>) -> Check {
    let mut c = Collector::new();
    let g = gamma_from_delta(geom);
    c.expect(g == geom.gamma, || format!("delta - td2 = {g} but registry gamma = {}", geom.gamma));
    c.expect(!g.is_negative(), || "gamma negative".into());
    let d = delta_x(geom);
    if d.discrepancy {
        warnings.push(format!("delta_x: literal max formula gives {}, stated value {} is used", d.literal, d.stated));
    }
    c.finish("gamma_constants")
}

fn check_walls(geom: &GeometryData, samples: usize) -> Check {
    let mut c = Collector::new();
    let mut ts = rational_samples(&s("0"), &s("1/2"), samples);
    ts.extend(rational_samples(&s("3/2"), &s("2"), samples));
    for t in ts {
        let Some(w) = c.ok(first_wall(&t, geom), || format!("t={t}")) else { continue };
        let up = c.ok(bn_upper_bound(&t, geom), || format!("t={t}"));
        let lo = c.ok(bn_lower_bound(&t, geom), || format!("t={t}"));
        c.expect(up.as_ref() == Some(&w.bn_upper), || format!("upper branch at t={t}: wall {:?}", w.bn_upper));
        c.expect(lo.as_ref() == Some(&w.bn_lower), || format!("lower branch at t={t}: wall {:?}", w.bn_lower));
    }
    c.finish("bn_bounds_match_walls")
}

fn check_clifford(geom: &GeometryData, samples: usize) -> Check {
    let mut c = Collector::new();
    for case in clifford_cases(geom.variety) {
        for t in rational_samples(&case.lo.x, &case.hi.x, samples) {
            if !case.contains(&t) {
                continue;
            }
            if let Some(b) = c.ok(clifford_bound(&t, geom), || format!("case ({}) t={t}", case.id)) {
                let p = case.printed_value(&t);
                c.expect(b.bound == p, || format!("case ({}) t={t}: {} vs printed {p}", case.id, b.bound));
            }
        }
    }
    c.finish("clifford_closed_forms")
}

fn check_restriction(geom: &GeometryData, samples: usize) -> Vec<Check> {
    let mut c = Collector::new();
    for line in printed_restriction_table(geom.variety) {
        for mu in rational_samples(&line.lo, &line.hi, samples) {
            if mu.is_zero() {
                continue;
            }
            if let Some(v) = c.ok(restriction_bound(&mu, geom), || format!("mu={mu}")) {
                let want = line.line.eval(&mu);
                c.expect(v == want, || format!("mu={mu}: {v} vs printed {want}"));
            }
        }
    }
    let table = c.finish("restriction_table");
    let mut d = Collector::new();
    if let Some(dom) = d.ok(restriction_vs_xi(geom), || "dominance".into()) {
        d.expect(dom.strict(), || match (&dom.witness, &dom.touch) {
            (Some(x), _) => format!("bound exceeds Xi at mu={x}"),
            (None, Some(x)) => format!("bound touches Xi at mu={x}"),
            (None, None) => "not dominated".into(),
        });
    }
    vec![table, d.finish("restriction_strictly_below_xi")]
}

fn check_ch2ch3(geom: &GeometryData, samples: usize) -> Check {
    let mut c = Collector::new();
    let n = samples as i64;
    for case in Ch2Ch3Case::ALL {
        for i in 0..=n {
            for j in 0..=n {
                let a = Scalar::frac(2 * n + i, n);
                let b = match case {
                    Ch2Ch3Case::NuZero => Scalar::zero(),
                    _ => &(&a * &Scalar::frac(j, n)) / &Scalar::int(2),
                };
                // The largest r allowed by the case's slope constraint, minus an offset.
                let slack = Scalar::frac(i * j, n * n);
                let r = match case {
                    Ch2Ch3Case::MuOutside => &a - &(&slack + &Scalar::frac(1, n)),
                    Ch2Ch3Case::MuHalfToThreeQuarters => &(&(&Scalar::int(2) * &a) - &(&Scalar::int(8) * &b)) - &slack,
                    Ch2Ch3Case::MuThreeQuartersToOne => {
                        &(&(&(&Scalar::int(7) * &a) - &(&Scalar::int(4) * &b)) / &Scalar::int(5)) - &slack
                    }
                    Ch2Ch3Case::NuZero => slack.clone(),
                };
                let ctx = || format!("{case:?} (r,a,b)=({r},{a},{b})");
                if let Some(rep) = c.ok(ch2ch3_certificate_extreme(&r, &a, &b, geom, case), ctx) {
                    c.expect(rep.holds, || format!("{case:?} (r,a,b)=({r},{a},{b}): {:?}", rep.steps));
                }
            }
        }
    }
    c.finish("ch2ch3_certificate")
}

fn check_support(geom: &GeometryData, samples: usize) -> Check {
    let mut c = Collector::new();
    let n = samples as i64;
    for i in 1..=n {
        for j in -2..=2 {
            let alpha = Scalar::frac(3 * i, n);
            let b = Scalar::frac(j, 2);
            let bound = &(&(&(&alpha * &alpha) / &Scalar::int(6)) + &(&(&b.abs() * &alpha) / &Scalar::int(2))) + &geom.gamma;
            let a = &bound + &Scalar::frac(i, n);
            let p = StabParams::new(alpha, Scalar::frac(j, 3), a, b, geom.gamma.clone());
            if !in_u_gamma(&p) {
                continue;
            }
            let Some(iv) = c.ok(support_interval(&p), || format!("{p:?}")) else { continue };
            let ends_singular = determinant(&kernel_matrix_at(&p, &iv.k_lo)).is_zero()
                && determinant(&kernel_matrix_at(&p, &iv.k_hi)).is_zero();
            c.expect(iv.k_lo < iv.k_hi && iv.verified_midpoint && ends_singular, || format!("{p:?}: {iv:?}"));
        }
    }
    c.finish("support_property")
}

fn check_kernel(geom: &GeometryData, samples: usize) -> Check {
    let mut c = Collector::new();
    let n = samples as i64;
    for i in 1..=2 * n {
        for j in -n..=n {
            let (alpha, beta) = (Scalar::frac(i, n), Scalar::frac(3 * j, 2 * n));
            if !reduction_region(&alpha, &beta) {
                continue;
            }
            let r = QGammaParams::new(alpha, beta, geom.gamma.clone(), geom).and_then(|p| q_kernel_seminegativity(&p));
            if let Some(k) = c.ok(r, || format!("alpha={}, beta={}", Scalar::frac(i, n), Scalar::frac(3 * j, 2 * n))) {
                c.expect(k.seminegative, || format!("witness {:?}", k.witness));
            }
        }
    }
    c.finish("kernel_seminegativity")
}

fn check_weights() -> Check {
    let mut c = Collector::new();
    let want: Vec<[u64; 5]> = vec![[1, 1, 1, 1, 1], [1, 1, 1, 1, 2], [1, 1, 1, 1, 4]];
    if let Some(ws) = c.ok(enumerate_weight_tuples(30), || "max 30".into()) {
        let got: Vec<[u64; 5]> = ws.iter().map(|w| w.weights).collect();
        c.expect(got == want, || format!("{got:?}"));
    }
    c.finish("weight_tuples")
}

fn check_anchors(geom: &GeometryData) -> Check {
    let mut c = Collector::new();
    for t in ["0", "1/2", "2"] {
        let t = s(t);
        let b = c.ok(clifford_bound(&t, geom), || format!("t={t}"));
        let p = c.ok(printed_clifford(&t, geom), || format!("t={t}"));
        if let (Some(b), Some(p)) = (b, p) {
            c.expect(b.bound == p, || format!("t={t}: {} (via {}) vs printed {p}", b.bound, b.argmax_label));
        }
    }
    c.finish("clifford_anchors")
}

/// Runs every named check against `geom`; `samples` sets grid densities.
pub fn verify_all(geom: &GeometryData, samples: usize, exec: Exec) -> VerifyReport {
    let samples = samples.max(4);
    let mut warnings = Vec::new();
    let constants = check_constants(geom, &mut warnings);
    type Job<'a> = Box<dyn Fn() -> Vec<Check> + Send + Sync + 'a>;
    let jobs: Vec<Job> = vec![
        Box::new(|| vec![check_xi()]),
        Box::new(|| vec![check_upsilon(samples)]),
        Box::new(|| vec![check_star(samples)]),
        Box::new(|| vec![check_walls(geom, samples)]),
        Box::new(|| vec![check_anchors(geom)]),
        Box::new(|| vec![check_clifford(geom, samples)]),
        Box::new(|| check_restriction(geom, samples)),
        Box::new(|| vec![check_ch2ch3(geom, samples.min(8))]),
        Box::new(|| vec![check_support(geom, samples)]),
        Box::new(|| vec![check_kernel(geom, samples)]),
        Box::new(|| vec![check_weights()]),
    ];
    let mut checks = vec![constants];
    checks.extend(exec.map(&jobs, |f| f()).into_iter().flatten());
    let all_pass = checks.iter().all(|c| c.pass);
    VerifyReport { variety: geom.variety.to_string(), samples, checks, warnings, all_pass }
}
