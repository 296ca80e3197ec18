//! Exact checks of the differentiation recurrences on the ray and of the
//! identities built from them.
//!
//! Every check returns the residual (left side minus right side) as a
//! polynomial; an identity holds iff the residual is the zero polynomial.
//! Fractions `1/n`, `1/(n+1)` are cleared by multiplying through by `n(n+1)`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::jacobi::{jacobi_with_params, recurrence_coeffs, require_positive, FamilyParams, RecurrenceCoeffs};
use crate::poly::Poly;
use crate::rational::{int, Rational};
use crate::turan::{build_delta, certify_whole_line, DeterminantFactors, SignCertificate};

pub const DERIVATIVE_RECURRENCE_LOWER: &str = "derivative-recurrence-lower";
pub const DERIVATIVE_RECURRENCE_UPPER: &str = "derivative-recurrence-upper";
pub const E_N_IDENTITY: &str = "e-n-identity";
pub const DELTA_TO_DERIVATIVE: &str = "delta-to-derivative";
pub const WRONSKIAN_POSITIVE: &str = "wronskian-positive";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub name: String,
    pub n: u32,
    pub fam: FamilyParams,
    pub holds: bool,
    #[serde(with = "crate::exact_serde::poly")]
    pub residual: Poly,
}

impl IdentityReport {
    fn new(name: &str, n: u32, fam: &FamilyParams, residual: Poly) -> Self {
        IdentityReport {
            name: name.to_string(),
            n,
            fam: fam.clone(),
            holds: residual.is_zero(),
            residual,
        }
    }
}

fn one_minus_x2() -> Poly {
    Poly::from_ints(&[1, 0, -1])
}

fn r(n: u32) -> Rational {
    int(n as i64)
}

/// `(1-x²) P_n' = n A P_n + n B P_{n-1}` at parameters `(an, bn)`.
pub fn check_derivative_recurrence_lower(n: u32, fam: &FamilyParams) -> Result<IdentityReport> {
    check_derivative_recurrence_lower_with(n, fam, &recurrence_coeffs(fam))
}

pub fn check_derivative_recurrence_lower_with(
    n: u32,
    fam: &FamilyParams,
    rc: &RecurrenceCoeffs,
) -> Result<IdentityReport> {
    require_positive(n)?;
    let p = jacobi_with_params(n, fam, n);
    let p_lower = jacobi_with_params(n - 1, fam, n);
    let lhs = &one_minus_x2() * &p.derivative();
    let rhs = &(&rc.a_poly * &p).scale(&r(n)) + &p_lower.scale(&(&rc.b * r(n)));
    Ok(IdentityReport::new(DERIVATIVE_RECURRENCE_LOWER, n, fam, &lhs - &rhs))
}

/// `(1-x²) P_n' = (n+1) C P_n + (n+1) D P_{n+1}` at parameters `(a(n+1), b(n+1))`.
pub fn check_derivative_recurrence_upper(n: u32, fam: &FamilyParams) -> Result<IdentityReport> {
    check_derivative_recurrence_upper_with(n, fam, &recurrence_coeffs(fam))
}

pub fn check_derivative_recurrence_upper_with(
    n: u32,
    fam: &FamilyParams,
    rc: &RecurrenceCoeffs,
) -> Result<IdentityReport> {
    require_positive(n)?;
    let p = jacobi_with_params(n, fam, n + 1);
    let p_upper = jacobi_with_params(n + 1, fam, n + 1);
    let n1 = r(n + 1);
    let lhs = &one_minus_x2() * &p.derivative();
    let rhs = &(&rc.c_poly * &p).scale(&n1) + &p_upper.scale(&(&rc.d * &n1));
    Ok(IdentityReport::new(DERIVATIVE_RECURRENCE_UPPER, n, fam, &lhs - &rhs))
}

/// `W_n = P_n P_{n+1}' - P_{n+1} P_n'`, both at the fixed parameters
/// `(a(n+1), b(n+1))`.
pub fn wronskian(n: u32, fam: &FamilyParams) -> Result<Poly> {
    require_positive(n)?;
    let p = jacobi_with_params(n, fam, n + 1);
    let q = jacobi_with_params(n + 1, fam, n + 1);
    Ok(&(&p * &q.derivative()) - &(&q * &p.derivative()))
}

/// Certifies `W_n(x) > 0` for every real `x`: no real roots and `W_n(0) > 0`.
pub fn check_wronskian_positive(n: u32, fam: &FamilyParams) -> Result<SignCertificate> {
    certify_whole_line(&wronskian(n, fam)?, &int(0))
}

/// With `E_n = (n+1) A + n C`:
///
/// ```text
/// E_n Δ_n + (x²-1) Δ_n' = (x²-1) [ P_n^(an,bn) P_n^(a(n+1),b(n+1))' / (n+1)
///                                 - P_n^(an,bn)' P_n^(a(n+1),b(n+1)) / n ]
/// ```
pub fn check_e_n_identity(n: u32, fam: &FamilyParams) -> Result<IdentityReport> {
    check_e_n_identity_with(n, fam, &recurrence_coeffs(fam))
}

pub fn check_e_n_identity_with(
    n: u32,
    fam: &FamilyParams,
    rc: &RecurrenceCoeffs,
) -> Result<IdentityReport> {
    require_positive(n)?;
    let f = DeterminantFactors::new(n, fam)?;
    let delta = f.delta();
    let x2_minus_1 = -one_minus_x2();
    let e = rc.e_n(n);
    let clear = r(n) * r(n + 1);

    let lhs = (&(&e * &delta) + &(&x2_minus_1 * &delta.derivative())).scale(&clear);
    let bracket = &(&f.same_n * &f.shifted_n.derivative()).scale(&r(n))
        - &(&f.same_n.derivative() * &f.shifted_n).scale(&r(n + 1));
    let rhs = &x2_minus_1 * &bracket;
    Ok(IdentityReport::new(E_N_IDENTITY, n, fam, &lhs - &rhs))
}

/// ```text
/// B Δ_n = (1-x²) [ P_n^(an,bn) P_{n+1}^(a(n+1),b(n+1))' / (n+1)
///                 - P_{n+1}^(a(n+1),b(n+1)) P_n^(an,bn)' / n ]
/// ```
pub fn check_delta_to_derivative(n: u32, fam: &FamilyParams) -> Result<IdentityReport> {
    check_delta_to_derivative_with(n, fam, &recurrence_coeffs(fam))
}

pub fn check_delta_to_derivative_with(
    n: u32,
    fam: &FamilyParams,
    rc: &RecurrenceCoeffs,
) -> Result<IdentityReport> {
    require_positive(n)?;
    let f = DeterminantFactors::new(n, fam)?;
    let delta = build_delta(n, fam)?.delta;
    let clear = r(n) * r(n + 1);
    let lhs = delta.scale(&(&rc.b * &clear));
    let bracket = &(&f.same_n * &f.upper.derivative()).scale(&r(n))
        - &(&f.upper * &f.same_n.derivative()).scale(&r(n + 1));
    let rhs = &one_minus_x2() * &bracket;
    Ok(IdentityReport::new(DELTA_TO_DERIVATIVE, n, fam, &lhs - &rhs))
}

/// The four polynomial identities for one `(n, fam)`, in a fixed order.
pub fn check_all_identities(n: u32, fam: &FamilyParams) -> Result<Vec<IdentityReport>> {
    let rc = recurrence_coeffs(fam);
    Ok(vec![
        check_derivative_recurrence_lower_with(n, fam, &rc)?,
        check_derivative_recurrence_upper_with(n, fam, &rc)?,
        check_e_n_identity_with(n, fam, &rc)?,
        check_delta_to_derivative_with(n, fam, &rc)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{parse_rational, ratio};
    use crate::turan::Verdict;

    fn fam(a: &str, b: &str) -> FamilyParams {
        FamilyParams::new(parse_rational(a).unwrap(), parse_rational(b).unwrap()).unwrap()
    }

    #[test]
    fn lower_recurrence_examples() {
        for (n, a, b) in [(1, "0", "0"), (2, "0", "0"), (1, "1", "0")] {
            let rep = check_derivative_recurrence_lower(n, &fam(a, b)).unwrap();
            assert!(rep.holds, "{rep:?}");
            assert!(rep.residual.is_zero());
        }
    }

    #[test]
    fn upper_recurrence_examples() {
        for (n, a, b) in [(1, "0", "0"), (2, "0", "0"), (1, "1", "1")] {
            assert!(check_derivative_recurrence_upper(n, &fam(a, b)).unwrap().holds);
        }
    }

    #[test]
    fn wronskian_examples() {
        let w = wronskian(1, &fam("0", "0")).unwrap();
        assert_eq!(w, Poly::new(vec![ratio(1, 2), int(0), ratio(3, 2)]));
        assert_eq!(w.eval(&int(0)), ratio(1, 2));
        for n in 1..=6 {
            assert_eq!(wronskian(n, &fam("0", "0")).unwrap().degree(), Some(2 * n as usize));
        }
        let cert = check_wronskian_positive(1, &fam("0", "0")).unwrap();
        assert_eq!(cert.verdict, Verdict::CertifiedPositive);
    }

    #[test]
    fn e_n_identity_examples() {
        for (n, a, b) in [(1, "0", "0"), (2, "0", "0"), (1, "1", "2")] {
            assert!(check_e_n_identity(n, &fam(a, b)).unwrap().holds);
        }
    }

    #[test]
    fn delta_to_derivative_examples() {
        for (n, a, b) in [(1, "0", "0"), (2, "0", "0"), (1, "2", "0")] {
            assert!(check_delta_to_derivative(n, &fam(a, b)).unwrap().holds);
        }
    }

    #[test]
    fn n_zero_is_rejected() {
        let f = fam("0", "0");
        assert!(check_derivative_recurrence_lower(0, &f).is_err());
        assert!(check_e_n_identity(0, &f).is_err());
        assert!(wronskian(0, &f).is_err());
    }

    #[test]
    fn perturbed_coefficients_are_caught() {
        let f = fam("1/2", "2");
        let good = recurrence_coeffs(&f);
        let nudge = Poly::constant(ratio(1, 7));

        let mut bad_a = good.clone();
        bad_a.a_poly = &bad_a.a_poly + &nudge;
        let mut bad_c = good.clone();
        bad_c.c_poly = &bad_c.c_poly + &nudge;
        let mut bad_b = good.clone();
        bad_b.b += ratio(1, 7);

        for n in 1..=4 {
            let lower = check_derivative_recurrence_lower_with(n, &f, &bad_a).unwrap();
            let lemma = check_e_n_identity_with(n, &f, &bad_a).unwrap();
            assert!(!lower.holds);
            assert!(!lemma.holds);

            let upper = check_derivative_recurrence_upper_with(n, &f, &bad_c).unwrap();
            let lemma = check_e_n_identity_with(n, &f, &bad_c).unwrap();
            assert!(!upper.holds);
            assert!(!lemma.holds);

            assert!(!check_derivative_recurrence_lower_with(n, &f, &bad_b).unwrap().holds);
            assert!(!check_delta_to_derivative_with(n, &f, &bad_b).unwrap().holds);
        }
    }
}
