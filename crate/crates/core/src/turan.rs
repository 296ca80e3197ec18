//! The Turán-type determinant
//!
//! ```text
//! Δ_n(x) = P_n^(an,bn) P_n^(a(n+1),b(n+1)) - P_{n-1}^(an,bn) P_{n+1}^(a(n+1),b(n+1))
//! ```
//!
//! its anchor values, and exact sign certificates built from Sturm counts.

use num::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jacobi::{gen_binomial, jacobi_with_params, leading_coeff, require_positive, FamilyParams};
use crate::poly::Poly;
use crate::rational::{int, sign, Rational};
use crate::sturm::{count_real_roots_detailed, Bound};

/// The four factors of `Δ_n`, named by degree and ray index.
#[derive(Debug, Clone)]
pub struct DeterminantFactors {
    /// `P_n^(an,bn)`
    pub same_n: Poly,
    /// `P_{n-1}^(an,bn)`
    pub lower: Poly,
    /// `P_n^(a(n+1),b(n+1))`
    pub shifted_n: Poly,
    /// `P_{n+1}^(a(n+1),b(n+1))`
    pub upper: Poly,
}

impl DeterminantFactors {
    pub fn new(n: u32, fam: &FamilyParams) -> Result<Self> {
        require_positive(n)?;
        Ok(DeterminantFactors {
            same_n: jacobi_with_params(n, fam, n),
            lower: jacobi_with_params(n - 1, fam, n),
            shifted_n: jacobi_with_params(n, fam, n + 1),
            upper: jacobi_with_params(n + 1, fam, n + 1),
        })
    }

    pub fn delta(&self) -> Poly {
        &(&self.same_n * &self.shifted_n) - &(&self.lower * &self.upper)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuranDeterminant {
    pub n: u32,
    pub fam: FamilyParams,
    pub delta: Poly,
}

pub fn build_delta(n: u32, fam: &FamilyParams) -> Result<TuranDeterminant> {
    let factors = DeterminantFactors::new(n, fam)?;
    Ok(TuranDeterminant {
        n,
        fam: fam.clone(),
        delta: factors.delta(),
    })
}

/// `Δ_n(1)` by evaluation, cross-checked against the binomial formula
/// `C(n+an, n) C(n+a(n+1), n) - C(n-1+an, n-1) C(n+1+a(n+1), n+1)`.
///
/// Panics if the two routes disagree, which would mean a construction bug.
pub fn delta_at_one(n: u32, fam: &FamilyParams) -> Result<Rational> {
    let det = build_delta(n, fam)?;
    let by_eval = det.delta.eval(&Rational::one());
    let by_binomials = delta_at_one_binomial(n, fam)?;
    assert_eq!(
        by_eval, by_binomials,
        "Delta_n(1) routes disagree for n = {n}, fam = {fam:?}"
    );
    Ok(by_eval)
}

/// Only the `α` slope enters `Δ_n(1)`, since `P_m^(α,β)(1) = C(m+α, m)`.
pub fn delta_at_one_binomial(n: u32, fam: &FamilyParams) -> Result<Rational> {
    require_positive(n)?;
    let nr = int(n as i64);
    let alpha_n = fam.a() * &nr;
    let alpha_next = fam.a() * (&nr + int(1));
    Ok(gen_binomial(&(&nr + &alpha_n), n) * gen_binomial(&(&nr + &alpha_next), n)
        - gen_binomial(&(&nr - int(1) + &alpha_n), n - 1)
            * gen_binomial(&(&nr + int(1) + &alpha_next), n + 1))
}

/// Closed form of the `x^{2n}` coefficient of `Δ_n`.
///
/// Factors out `K_n = k_{n-1}(s) k_n(s') / 2`, where `k_m(σ) = 2^-m C(2m+σ, m)`
/// is the leading coefficient of a degree-`m` Jacobi polynomial with
/// `α + β = σ`, `s = (a+b) n` and `s' = (a+b)(n+1)`. What remains is
///
/// ```text
/// (2n+s)(2n+s-1) / (n(n+s)) - (2n+s'+2)(2n+s'+1) / ((n+1)(n+s'+1))
///   = -(2+a+b) / ((1+a+b) n (n+1))
/// ```
///
/// which is negative for every `a, b >= 0`.
pub fn leading_coeff_closed_form(n: u32, fam: &FamilyParams) -> Result<Rational> {
    require_positive(n)?;
    Ok(leading_prefactor(n, fam) * leading_bracket(n, fam))
}

pub fn leading_prefactor(n: u32, fam: &FamilyParams) -> Rational {
    let slope = fam.a() + fam.b();
    let s = &slope * int(n as i64);
    let s_next = &slope * int(n as i64 + 1);
    leading_coeff(n - 1, &s) * leading_coeff(n, &s_next) / int(2)
}

/// The bracket as the difference of the two ratios of consecutive leading
/// coefficients, before simplification.
pub fn leading_bracket(n: u32, fam: &FamilyParams) -> Rational {
    let slope = fam.a() + fam.b();
    let nr = int(n as i64);
    let n1 = &nr + int(1);
    let s = &slope * &nr;
    let s1 = &slope * &n1;
    let two_n = int(2) * &nr;
    let first = (&two_n + &s) * (&two_n + &s - int(1)) / (&nr * (&nr + &s));
    let second = (&two_n + &s1 + int(2)) * (&two_n + &s1 + int(1)) / (&n1 * (&nr + &s1 + int(1)));
    first - second
}

/// The simplified ray form `-(2+a+b) / ((1+a+b) n (n+1))` of [`leading_bracket`].
pub fn leading_bracket_simplified(n: u32, fam: &FamilyParams) -> Rational {
    let nr = int(n as i64);
    -(int(2) + fam.a() + fam.b()) / ((int(1) + fam.a() + fam.b()) * &nr * (&nr + int(1)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CertInterval {
    OpenRightOf {
        #[serde(with = "crate::exact_serde::rational")]
        point: Rational,
    },
    WholeLine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CertifiedNegative,
    CertifiedPositive,
    NotCertified,
}

/// Record that a polynomial keeps one strict sign on an interval.
///
/// For `open-right-of(c)`: `target = (x - c)^m q` with `q(c) != 0`; the
/// variation counts are those of the Sturm chain of the square-free part of
/// `q` at `c` and `+inf`. For `whole-line` they are taken at `-inf` and `+inf`
/// on the square-free part of the target itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignCertificate {
    #[serde(with = "crate::exact_serde::poly")]
    pub target: Poly,
    pub interval: CertInterval,
    #[serde(with = "crate::exact_serde::rational")]
    pub base_point: Rational,
    pub multiplicity_at_base: u32,
    pub left_variations: usize,
    pub right_variations: usize,
    pub root_count_inside: usize,
    #[serde(with = "crate::exact_serde::rational")]
    pub sample_point: Rational,
    pub sample_sign: i8,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl SignCertificate {
    /// Checks the recorded counts against each other and against the verdict:
    /// a certified sign needs zero roots inside and a matching sample sign.
    pub fn is_consistent(&self) -> bool {
        let counts_agree = self.left_variations >= self.right_variations
            && self.left_variations - self.right_variations == self.root_count_inside;
        let verdict_supported = match self.verdict {
            Verdict::CertifiedNegative => self.root_count_inside == 0 && self.sample_sign == -1,
            Verdict::CertifiedPositive => self.root_count_inside == 0 && self.sample_sign == 1,
            Verdict::NotCertified => true,
        };
        counts_agree && verdict_supported
    }
}

/// Certifies the sign of `p` on `(base, +inf)`.
///
/// `require_root_at_base` additionally demands `p(base) = 0`; without a root
/// there `multiplicity_at_base` is simply 0.
pub fn certify_right_of(
    p: &Poly,
    base: &Rational,
    sample: &Rational,
    require_root_at_base: bool,
) -> Result<SignCertificate> {
    if sample <= base {
        return Err(Error::EmptyInterval);
    }
    let (multiplicity, cofactor) = p.deflate(base)?;
    let square_free = cofactor.square_free_part()?;
    let counts = count_real_roots_detailed(
        &square_free,
        &Bound::Finite(base.clone()),
        &Bound::PosInfinity,
    )?;
    let sample_sign = sign(&cofactor.eval(sample));
    let roots = counts.roots();

    let mut problems = Vec::new();
    if roots != 0 {
        problems.push(format!("{roots} real root(s) right of {base}"));
    }
    if require_root_at_base && multiplicity == 0 {
        problems.push(format!("no root at {base}"));
    }
    if sample_sign == 0 {
        problems.push(format!("cofactor vanishes at sample point {sample}"));
    }
    let verdict = match (problems.is_empty(), sample_sign) {
        (true, -1) => Verdict::CertifiedNegative,
        (true, 1) => Verdict::CertifiedPositive,
        _ => Verdict::NotCertified,
    };
    Ok(SignCertificate {
        target: p.clone(),
        interval: CertInterval::OpenRightOf { point: base.clone() },
        base_point: base.clone(),
        multiplicity_at_base: multiplicity,
        left_variations: counts.left_variations,
        right_variations: counts.right_variations,
        root_count_inside: roots,
        sample_point: sample.clone(),
        sample_sign,
        verdict,
        diagnostic: (!problems.is_empty()).then(|| problems.join("; ")),
    })
}

/// Certifies that `p` has no real root and reports its sign at `sample`.
pub fn certify_whole_line(p: &Poly, sample: &Rational) -> Result<SignCertificate> {
    let square_free = p.square_free_part()?;
    let counts = count_real_roots_detailed(&square_free, &Bound::NegInfinity, &Bound::PosInfinity)?;
    let roots = counts.roots();
    let sample_sign = sign(&p.eval(sample));
    let verdict = match (roots, sample_sign) {
        (0, 1) => Verdict::CertifiedPositive,
        (0, -1) => Verdict::CertifiedNegative,
        _ => Verdict::NotCertified,
    };
    Ok(SignCertificate {
        target: p.clone(),
        interval: CertInterval::WholeLine,
        base_point: sample.clone(),
        multiplicity_at_base: 0,
        left_variations: counts.left_variations,
        right_variations: counts.right_variations,
        root_count_inside: roots,
        sample_point: sample.clone(),
        sample_sign,
        verdict,
        diagnostic: (roots != 0).then(|| format!("{roots} real root(s) on the whole line")),
    })
}

/// Certifies `Δ_n(1) = 0` and `Δ_n(x) < 0` for every `x > 1`.
pub fn certify_theorem(n: u32, fam: &FamilyParams) -> Result<SignCertificate> {
    let det = build_delta(n, fam)?;
    let mut cert = certify_right_of(&det.delta, &Rational::one(), &int(2), true)?;
    if cert.verdict == Verdict::CertifiedPositive {
        cert.verdict = Verdict::NotCertified;
        cert.diagnostic = Some("Delta_n is positive right of 1".into());
    }
    if let Some(lc) = det.delta.leading_coeff() {
        if !lc.is_negative() && cert.verdict == Verdict::CertifiedNegative {
            // cannot happen if the Sturm count is right; keep the record honest
            cert.verdict = Verdict::NotCertified;
            cert.diagnostic = Some("leading coefficient is not negative".into());
        }
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{parse_rational, ratio};

    fn fam(a: &str, b: &str) -> FamilyParams {
        FamilyParams::new(parse_rational(a).unwrap(), parse_rational(b).unwrap()).unwrap()
    }

    #[test]
    fn delta_one_zero_zero() {
        let det = build_delta(1, &fam("0", "0")).unwrap();
        assert_eq!(det.delta, Poly::new(vec![ratio(1, 2), int(0), ratio(-1, 2)]));
        assert_eq!(det.delta.eval(&int(1)), int(0));
        assert_eq!(det.delta.eval(&int(2)), ratio(-3, 2));
        assert_eq!(build_delta(0, &fam("0", "0")), Err(Error::DegreeTooSmall { n: 0, min: 1 }));
    }

    #[test]
    fn degree_bound() {
        for f in FamilyParams::default_grid() {
            for n in 1..=5 {
                let det = build_delta(n, &f).unwrap();
                assert!(det.delta.degree().unwrap() <= 2 * n as usize);
                assert!(!det.delta.is_zero());
            }
        }
    }

    #[test]
    fn delta_at_one_examples() {
        assert_eq!(delta_at_one(3, &fam("0", "7/2")).unwrap(), int(0));
        // C(4,2)C(5,2) - C(3,1)C(6,3) = 60 - 60
        let f = fam("1", "0");
        assert_eq!(gen_binomial(&int(4), 2) * gen_binomial(&int(5), 2), int(60));
        assert_eq!(gen_binomial(&int(3), 1) * gen_binomial(&int(6), 3), int(60));
        assert_eq!(delta_at_one_binomial(2, &f).unwrap(), int(0));
        assert_eq!(delta_at_one(2, &f).unwrap(), int(0));
    }

    #[test]
    fn leading_coefficient_small_case() {
        let f = fam("0", "0");
        assert_eq!(leading_prefactor(1, &f), ratio(1, 2));
        assert_eq!(leading_bracket(1, &f), int(-1));
        assert_eq!(leading_coeff_closed_form(1, &f).unwrap(), ratio(-1, 2));
    }

    #[test]
    fn bracket_simplifies() {
        for f in FamilyParams::default_grid() {
            for n in 1..=10 {
                assert_eq!(leading_bracket(n, &f), leading_bracket_simplified(n, &f));
            }
        }
    }

    #[test]
    fn certificate_small_case() {
        let cert = certify_theorem(1, &fam("0", "0")).unwrap();
        assert_eq!(cert.multiplicity_at_base, 1);
        assert_eq!(cert.root_count_inside, 0);
        assert_eq!(cert.sample_sign, -1);
        assert_eq!(cert.verdict, Verdict::CertifiedNegative);
        assert!(cert.is_consistent());
        assert!(cert.diagnostic.is_none());
    }

    #[test]
    fn certificate_rejects_wrong_sign_and_roots() {
        // (x-1)(x-3): root inside (1, inf)
        let p = Poly::from_ints(&[3, -4, 1]);
        let cert = certify_right_of(&p, &int(1), &int(2), true).unwrap();
        assert_eq!(cert.verdict, Verdict::NotCertified);
        assert_eq!(cert.root_count_inside, 1);
        assert!(cert.is_consistent());
        // 1 - x^2 is negative right of 1, but x^2 - 1 is positive
        let p = Poly::from_ints(&[-1, 0, 1]);
        let cert = certify_right_of(&p, &int(1), &int(2), true).unwrap();
        assert_eq!(cert.verdict, Verdict::CertifiedPositive);
        // no root at the base
        let p = Poly::from_ints(&[-5, 0, -1]);
        let cert = certify_right_of(&p, &int(1), &int(2), true).unwrap();
        assert_eq!(cert.verdict, Verdict::NotCertified);
        assert_eq!(cert.multiplicity_at_base, 0);
    }

    #[test]
    fn whole_line_certificates() {
        let cert = certify_whole_line(&Poly::from_ints(&[1, 0, 3]), &int(0)).unwrap();
        assert_eq!(cert.verdict, Verdict::CertifiedPositive);
        assert!(cert.is_consistent());
        let cert = certify_whole_line(&Poly::from_ints(&[-1, 0, 3]), &int(0)).unwrap();
        assert_eq!(cert.verdict, Verdict::NotCertified);
        assert_eq!(cert.root_count_inside, 2);
        // repeated roots are counted once
        let cert = certify_whole_line(&Poly::from_ints(&[1, 2, 1]), &int(0)).unwrap();
        assert_eq!(cert.root_count_inside, 1);
    }

    #[test]
    fn certificate_json_round_trip() {
        let cert = certify_theorem(2, &fam("1/2", "5/2")).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        let back: SignCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
        assert!(json.contains("\"kind\":\"open-right-of\""));
        assert!(json.contains("\"verdict\":\"certified-negative\""));
    }

    #[test]
    fn tampered_certificate_is_inconsistent() {
        let mut cert = certify_theorem(2, &fam("1", "2")).unwrap();
        cert.root_count_inside = 1;
        assert!(!cert.is_consistent());
    }
}
