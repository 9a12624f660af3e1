//! Grid verification: sweeps of the closed forms against the independent
//! oracles, reported as pass/fail counts with a first counterexample.
//!
//! Three suites cover the three layers of the computation: `gauss` checks
//! the closed quadratic Gauss form against exact and numeric summation plus
//! the coefficient-exact algebraic identities; `lambda` checks the
//! assembled lambda values against the definitional epsilon-factor paths
//! and their invariances; `trace` checks the residue formula for
//! Tr_{F/F_0}(p c) against the mod p^2 symbolic model.
//!
//! Grids are walked in ascending (p, f, e) order, so reports are
//! deterministic for fixed bounds.

use crate::cyclotomic::CycElem;
use crate::finite_field::{build_field, is_prime};
use crate::gauss::{epsilon_tame, gauss_closed_quadratic, gauss_sum_direct, ResidueChar, TameMultChar};
use crate::cyclotomic::Mu4;
use crate::lambda::{
    delta_c_prime, lambda_psi_minus_one, lambda_tame_quadratic, lambda_twist, QuadExt,
};
use crate::local_field::TameField;
use crate::oracle::{gauss_numeric, lambda_direct_path, SymbolicTameModel};

/// Grid bounds for a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyBounds {
    pub pmax: u64,
    pub emax: u32,
    pub fmax: u32,
}

impl Default for VerifyBounds {
    fn default() -> VerifyBounds {
        VerifyBounds {
            pmax: 23,
            emax: 6,
            fmax: 2,
        }
    }
}

/// Outcome of one suite: every individual assertion is a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub points: u64,
    pub passed: u64,
    pub failed: u64,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    fn new(suite: &'static str) -> SuiteReport {
        SuiteReport {
            suite,
            points: 0,
            passed: 0,
            failed: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, failure: impl FnOnce() -> String) {
        self.points += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(failure());
            }
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Which suites to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Gauss,
    Lambda,
    Trace,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Suite, String> {
        match s {
            "gauss" => Ok(Suite::Gauss),
            "lambda" => Ok(Suite::Lambda),
            "trace" => Ok(Suite::Trace),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite {other:?}; expected gauss, lambda, trace, or all"
            )),
        }
    }
}

pub fn run_suites(suite: Suite, bounds: &VerifyBounds) -> Vec<SuiteReport> {
    match suite {
        Suite::Gauss => vec![gauss_suite(bounds)],
        Suite::Lambda => vec![lambda_suite(bounds)],
        Suite::Trace => vec![trace_suite(bounds)],
        Suite::All => vec![
            gauss_suite(bounds),
            lambda_suite(bounds),
            trace_suite(bounds),
        ],
    }
}

fn primes_upto(pmax: u64) -> impl Iterator<Item = u64> {
    (2..=pmax).filter(|&p| is_prime(p))
}

/// Closed quadratic Gauss form vs exact summation, numeric summation, and
/// the coefficient-exact identities G conj(G) = q and G^2 = eta(-1) q.
pub fn gauss_suite(bounds: &VerifyBounds) -> SuiteReport {
    let mut report = SuiteReport::new("gauss");
    for p in primes_upto(bounds.pmax).filter(|&p| p != 2) {
        for s in 1..=bounds.fmax.max(1) {
            let field = match build_field(p, s) {
                Ok(f) => f,
                Err(_) => continue,
            };
            let q = field.q();
            let closed = gauss_closed_quadratic(p, s).unwrap();
            let scale = (p as f64).powf(s as f64 / 2.0);
            let tol = 1e-6 * scale;

            let exact = gauss_sum_direct(&field, ResidueChar::Quadratic, &field.one()).unwrap();
            let d_exact = (exact.embed() - closed.embed(p)).norm();
            report.check(d_exact < tol, || {
                format!("p={p} s={s}: exact sum off closed form by {d_exact:e}")
            });

            let numeric = gauss_numeric(&field, ResidueChar::Quadratic, &field.one()).unwrap();
            let d_num = (numeric - closed.embed(p)).norm();
            report.check(d_num < tol, || {
                format!("p={p} s={s}: numeric sum off closed form by {d_num:e}")
            });

            report.check(
                exact.mul(&exact.conj()) == CycElem::scalar(q as i64),
                || format!("p={p} s={s}: G conj(G) != q"),
            );
            let sign = if (q - 1) / 2 % 2 == 0 { 1 } else { -1 };
            report.check(
                exact.mul(&exact) == CycElem::scalar(sign * q as i64),
                || format!("p={p} s={s}: G^2 != eta(-1) q"),
            );
        }
    }
    report
}

fn w_sample(field_q: u64) -> impl Iterator<Item = u64> {
    1..=(field_q - 1).min(4)
}

/// Assembled lambda values: factorization, independence of the admissible
/// c, twist coherence, the direct numeric path, and the exact
/// epsilon-factor path.
pub fn lambda_suite(bounds: &VerifyBounds) -> SuiteReport {
    let mut report = SuiteReport::new("lambda");
    for p in primes_upto(bounds.pmax).filter(|&p| p != 2) {
        for f in 1..=bounds.fmax {
            let k = match build_field(p, f) {
                Ok(k) => k,
                Err(_) => continue,
            };
            let q = k.q();
            for e in 1..=bounds.emax {
                if (e as u64).is_multiple_of(p) {
                    continue;
                }
                for wi in w_sample(q) {
                    let field = TameField::new(p, f, e, k.element_from_index(wi)).unwrap();
                    let ext = QuadExt::ramified(field.clone()).unwrap();
                    let tag = || format!("p={p} f={f} e={e} w#{wi}");

                    let result = lambda_tame_quadratic(&ext, None).unwrap();
                    report.check(
                        result.value == result.delta_factor * result.gauss_factor,
                        || format!("{}: value does not factor", tag()),
                    );

                    let closed = lambda_psi_minus_one(&field).unwrap().embed();
                    let direct = lambda_direct_path(&field).unwrap();
                    let dev = (closed - direct).norm();
                    report.check(dev < 1e-6, || {
                        format!("{}: psi_-1 closed form off direct path by {dev:e}", tag())
                    });

                    let chi = TameMultChar::new(ResidueChar::Quadratic, Mu4::ONE);
                    let eps = epsilon_tame(&chi, &field.canonical_psi_spec(), &field).unwrap();
                    report.check(result.value == eps.exact, || {
                        format!("{}: closed path disagrees with epsilon path", tag())
                    });

                    let sweep_all = q <= 121;
                    let units: Vec<_> = if sweep_all {
                        field.residue_field().units().collect()
                    } else {
                        (1..=5).map(|i| k.element_from_index(i)).collect()
                    };
                    for u in units {
                        let c = field.admissible_c(u).unwrap();
                        let r = lambda_tame_quadratic(&ext, Some(&c)).unwrap();
                        report.check(r.value == result.value, || {
                            format!("{}: value depends on the admissible c", tag())
                        });
                        let cp = field.c_prime(&c).unwrap();
                        let lam = lambda_psi_minus_one(&field).unwrap();
                        let twisted = lambda_twist(lam, &ext, &cp).unwrap();
                        report.check(twisted == r.value, || {
                            format!("{}: twist rule does not recover the value", tag())
                        });
                        let delta = delta_c_prime(&field, &c).unwrap();
                        report.check(delta.as_sign().is_some(), || {
                            format!("{}: delta left the sign group", tag())
                        });
                    }
                }
            }
        }
    }
    report
}

/// Residue formula for Tr_{F/F_0}(p c): normalization of c', independence
/// of the unit part, and exact agreement with the symbolic mod p^2 model.
pub fn trace_suite(bounds: &VerifyBounds) -> SuiteReport {
    let mut report = SuiteReport::new("trace");
    for p in primes_upto(bounds.pmax) {
        for f in 1..=bounds.fmax {
            let k = match build_field(p, f) {
                Ok(k) => k,
                Err(_) => continue,
            };
            let q = k.q();
            for e in 1..=bounds.emax {
                if (e as u64).is_multiple_of(p) {
                    continue;
                }
                for wi in w_sample(q) {
                    let field = TameField::new(p, f, e, k.element_from_index(wi)).unwrap();
                    let model = SymbolicTameModel::new(&field).unwrap();
                    let tag = || format!("p={p} f={f} e={e} w#{wi}");
                    let perturbations = [
                        model.element(&[]),
                        model.element(&[&[1]]),
                        model.element(&[&[p - 1], &[1, 1]]),
                        model.element(&[&[], &[], &[], &[], &[], &[2]]),
                    ];

                    let baseline = field.c_prime(&field.default_c()).unwrap();
                    let units: Vec<_> = if q <= 121 {
                        field.residue_field().units().collect()
                    } else {
                        (1..=5).map(|i| k.element_from_index(i)).collect()
                    };
                    for u in units {
                        let c = field.admissible_c(u.clone()).unwrap();
                        let cp = field.c_prime(&c).unwrap();
                        report.check(
                            field.trace_residue_pc(&cp).unwrap().is_one(),
                            || format!("{}: c' does not normalize the trace to 1", tag()),
                        );
                        report.check(cp == baseline, || {
                            format!("{}: c' depends on the unit part of c", tag())
                        });
                        let predicted = field.trace_residue_pc(&c).unwrap();
                        for r in &perturbations {
                            let symbolic = model.trace_residue_pc(&u, r).unwrap();
                            report.check(symbolic == predicted, || {
                                format!("{}: symbolic trace disagrees", tag())
                            });
                        }
                    }
                }
            }
        }
    }
    report
}
