//! Exact Jacobi polynomials from the binomial sum
//!
//! ```text
//! P_n^(α,β)(x) = Σ_t C(n+α, n-t) C(n+β, t) ((x-1)/2)^t ((x+1)/2)^(n-t)
//! ```
//!
//! and the coefficient algebra of the differentiation recurrences on the ray
//! `α_n = a n`, `β_n = b n`.

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{format_rational, int, ratio, Rational};

/// Slopes of the parameter ray `α_n = a n`, `β_n = b n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyParams {
    a: Rational,
    b: Rational,
}

impl FamilyParams {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a.is_negative() || b.is_negative() {
            return Err(Error::NegativeSlope {
                a: format_rational(&a),
                b: format_rational(&b),
            });
        }
        Ok(FamilyParams { a, b })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// `(a m, b m)`, the parameter pair at ray index `m`.
    pub fn at(&self, m: u32) -> (Rational, Rational) {
        let m = int(m as i64);
        (&self.a * &m, &self.b * &m)
    }

    /// The default slope grid `{0, 1/2, 1, 2, 5/2}²` in lexicographic order.
    pub fn default_grid() -> Vec<FamilyParams> {
        let slopes = default_slopes();
        let mut grid = Vec::with_capacity(slopes.len() * slopes.len());
        for a in &slopes {
            for b in &slopes {
                grid.push(FamilyParams {
                    a: a.clone(),
                    b: b.clone(),
                });
            }
        }
        grid
    }
}

pub fn default_slopes() -> Vec<Rational> {
    vec![int(0), ratio(1, 2), int(1), int(2), ratio(5, 2)]
}

impl Serialize for FamilyParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FamilyParams", 2)?;
        st.serialize_field("a", &format_rational(&self.a))?;
        st.serialize_field("b", &format_rational(&self.b))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for FamilyParams {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            a: String,
            b: String,
        }
        let raw = Raw::deserialize(d)?;
        let parse = |s: &str| crate::rational::parse_rational(s).map_err(serde::de::Error::custom);
        FamilyParams::new(parse(&raw.a)?, parse(&raw.b)?).map_err(serde::de::Error::custom)
    }
}

/// Degree and parameter pair of a single Jacobi polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JacobiIndex {
    n: u32,
    alpha: Rational,
    beta: Rational,
}

impl JacobiIndex {
    pub fn new(n: u32, alpha: Rational, beta: Rational) -> Result<Self> {
        let minus_one = -Rational::one();
        if alpha <= minus_one || beta <= minus_one {
            return Err(Error::ParameterOutOfRange {
                alpha: format_rational(&alpha),
                beta: format_rational(&beta),
            });
        }
        Ok(JacobiIndex { n, alpha, beta })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }
}

/// Generalized binomial coefficient `C(z, k) = Π_{i=1..k} (z - k + i) / i`.
pub fn gen_binomial(z: &Rational, k: u32) -> Rational {
    let k_r = int(k as i64);
    (1..=k).fold(Rational::one(), |acc, i| {
        let i = int(i as i64);
        acc * (z - &k_r + &i) / i
    })
}

/// Exact `P_n^(α,β)` in the monomial basis.
pub fn jacobi_poly(idx: &JacobiIndex) -> Poly {
    let n = idx.n;
    let half = ratio(1, 2);
    // (x-1)/2 and (x+1)/2
    let down = Poly::linear(-half.clone(), half.clone());
    let up = Poly::linear(half.clone(), half);

    let mut down_pows = Vec::with_capacity(n as usize + 1);
    let mut up_pows = Vec::with_capacity(n as usize + 1);
    down_pows.push(Poly::one());
    up_pows.push(Poly::one());
    for i in 1..=n as usize {
        down_pows.push(&down_pows[i - 1] * &down);
        up_pows.push(&up_pows[i - 1] * &up);
    }

    let top_alpha = int(n as i64) + &idx.alpha;
    let top_beta = int(n as i64) + &idx.beta;
    let mut sum = Poly::zero();
    for t in 0..=n {
        let c = gen_binomial(&top_alpha, n - t) * gen_binomial(&top_beta, t);
        if c.is_zero() {
            continue;
        }
        let term = &down_pows[t as usize] * &up_pows[(n - t) as usize];
        sum = &sum + &term.scale(&c);
    }
    sum
}

/// `P_n^(a n, b n)`.
pub fn jacobi_on_ray(n: u32, fam: &FamilyParams) -> Poly {
    jacobi_with_params(n, fam, n)
}

/// `P_degree^(a m, b m)`: degree and ray index chosen independently, as the
/// mixed-index products in the determinant require.
pub fn jacobi_with_params(degree: u32, fam: &FamilyParams, ray_index: u32) -> Poly {
    let (alpha, beta) = fam.at(ray_index);
    let idx = JacobiIndex::new(degree, alpha, beta).expect("nonnegative slopes keep alpha, beta >= 0");
    jacobi_poly(&idx)
}

/// Leading coefficient `2^-n C(2n + α + β, n)` of `P_n^(α,β)`.
pub fn leading_coeff(n: u32, alpha_plus_beta: &Rational) -> Rational {
    let top = int(2 * n as i64) + alpha_plus_beta;
    gen_binomial(&top, n) / Rational::from_integer(num::BigInt::one() << n as usize)
}

/// The coefficients A(x), B, C(x), D of the ray-substituted differentiation
/// recurrences
///
/// ```text
/// (1-x²) d/dx P_n^(an,bn)        = n A P_n^(an,bn) + n B P_{n-1}^(an,bn)
/// (1-x²) d/dx P_n^(a(n+1),b(n+1)) = (n+1) C P_n^(..) + (n+1) D P_{n+1}^(..)
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceCoeffs {
    pub a_poly: Poly,
    pub b: Rational,
    pub c_poly: Poly,
    pub d: Rational,
}

pub fn recurrence_coeffs(fam: &FamilyParams) -> RecurrenceCoeffs {
    let (a, b) = (fam.a(), fam.b());
    let one = Rational::one();
    let two = int(2);
    let sum2 = &two + a + b;
    let sum1 = &one + a + b;
    let shift = (b - a) / &sum2;
    RecurrenceCoeffs {
        a_poly: Poly::linear(-shift.clone(), -one.clone()),
        b: &two * (&one + a) * (&one + b) / &sum2,
        c_poly: Poly::linear(-(&sum1 * &shift), sum1.clone()),
        d: -(&two * &sum1) / &sum2,
    }
}

impl RecurrenceCoeffs {
    /// `(n+1) A + n C`.
    pub fn e_n(&self, n: u32) -> Poly {
        let n_r = int(n as i64);
        &self.a_poly.scale(&(&n_r + Rational::one())) + &self.c_poly.scale(&n_r)
    }
}

/// `E_n(x) = (n+1) A(x) + n C(x)`; its x-coefficient is `an + bn - 1`.
pub fn e_n(n: u32, fam: &FamilyParams) -> Result<Poly> {
    require_positive(n)?;
    Ok(recurrence_coeffs(fam).e_n(n))
}

/// Constants with `r (x+1) + s (x-1) = E_n(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsConstants {
    pub r: Rational,
    pub s: Rational,
}

impl RsConstants {
    /// `r (x+1) + s (x-1)`.
    pub fn combination(&self) -> Poly {
        Poly::linear(&self.r - &self.s, &self.r + &self.s)
    }
}

pub fn rs_constants(n: u32, fam: &FamilyParams) -> Result<RsConstants> {
    let e = e_n(n, fam)?;
    let slope = e.coeff(1);
    let intercept = e.coeff(0);
    let half = ratio(1, 2);
    Ok(RsConstants {
        r: (&slope + &intercept) * &half,
        s: (&slope - &intercept) * &half,
    })
}

pub(crate) fn require_positive(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::DegreeTooSmall { n, min: 1 })
    } else {
        Ok(())
    }
}
