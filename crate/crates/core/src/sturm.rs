//! Sturm sequences and exact real-root counting.

use std::fmt;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{format_rational, parse_rational, sign, Rational};

/// Interval endpoint, possibly infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInfinity => f.write_str("-inf"),
            Bound::Finite(r) => f.write_str(&format_rational(r)),
            Bound::PosInfinity => f.write_str("+inf"),
        }
    }
}

impl Serialize for Bound {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Bound {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Ok(match s.as_str() {
            "-inf" => Bound::NegInfinity,
            "+inf" => Bound::PosInfinity,
            other => Bound::Finite(parse_rational(other).map_err(serde::de::Error::custom)?),
        })
    }
}

/// Canonical Sturm sequence `p, p', -rem(p_{k-1}, p_k), ...` ending at a
/// nonzero constant. Requires a square-free `p`.
pub fn sturm_chain(p: &Poly) -> Result<Vec<Poly>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut chain = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        chain.push(next);
        let k = chain.len();
        next = -chain[k - 2].div_rem(&chain[k - 1])?.1;
    }
    if chain.last().and_then(Poly::degree) != Some(0) {
        return Err(Error::NotSquareFree);
    }
    Ok(chain)
}

fn sign_at(p: &Poly, at: &Bound) -> i8 {
    match (at, p.leading_coeff()) {
        (_, None) => 0,
        (Bound::Finite(x), _) => sign(&p.eval(x)),
        (Bound::PosInfinity, Some(lc)) => sign(lc),
        (Bound::NegInfinity, Some(lc)) => {
            let s = sign(lc);
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

/// Sign changes along the chain at `at`, zeros skipped.
pub fn variations(chain: &[Poly], at: &Bound) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|p| sign_at(p, at))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Variation counts at both endpoints, kept for re-verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCount {
    pub left_variations: usize,
    pub right_variations: usize,
}

impl RootCount {
    pub fn roots(&self) -> usize {
        self.left_variations - self.right_variations
    }
}

/// Distinct real roots of a square-free `p` in `(left, right]`.
pub fn count_real_roots(p: &Poly, left: &Bound, right: &Bound) -> Result<usize> {
    count_real_roots_detailed(p, left, right).map(|c| c.roots())
}

pub fn count_real_roots_detailed(p: &Poly, left: &Bound, right: &Bound) -> Result<RootCount> {
    let ordered = match (left, right) {
        (Bound::PosInfinity, _) | (_, Bound::NegInfinity) => false,
        (Bound::Finite(l), Bound::Finite(r)) => l < r,
        _ => true,
    };
    if !ordered {
        return Err(Error::EmptyInterval);
    }
    let chain = sturm_chain(p)?;
    if let Bound::Finite(l) = left {
        if p.eval(l).is_zero() {
            return Err(Error::RootAtLeftEndpoint(format_rational(l)));
        }
    }
    Ok(RootCount {
        left_variations: variations(&chain, left),
        right_variations: variations(&chain, right),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn fin(v: i64) -> Bound {
        Bound::Finite(int(v))
    }

    #[test]
    fn chain_examples() {
        assert_eq!(
            sturm_chain(&p(&[-1, 0, 1])).unwrap(),
            vec![p(&[-1, 0, 1]), p(&[0, 2]), p(&[1])]
        );
        assert_eq!(sturm_chain(&p(&[0, 1])).unwrap(), vec![p(&[0, 1]), p(&[1])]);
        assert_eq!(sturm_chain(&p(&[-4])).unwrap(), vec![p(&[-4])]);
        assert_eq!(sturm_chain(&Poly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(sturm_chain(&p(&[1, 2, 1])), Err(Error::NotSquareFree));
    }

    #[test]
    fn count_examples() {
        let whole = (Bound::NegInfinity, Bound::PosInfinity);
        assert_eq!(count_real_roots(&p(&[-1, 0, 1]), &whole.0, &whole.1).unwrap(), 2);
        assert_eq!(count_real_roots(&p(&[1, 0, 1]), &whole.0, &whole.1).unwrap(), 0);
        // x^2 - 1 vanishes at 1; the cofactor x + 1 has nothing right of 1
        assert_eq!(
            count_real_roots(&p(&[-1, 0, 1]), &fin(1), &Bound::PosInfinity),
            Err(Error::RootAtLeftEndpoint("1".into()))
        );
        assert_eq!(count_real_roots(&p(&[1, 1]), &fin(1), &Bound::PosInfinity).unwrap(), 0);
        // right endpoint root is included
        assert_eq!(count_real_roots(&p(&[-1, 0, 1]), &fin(0), &fin(1)).unwrap(), 1);
        assert_eq!(count_real_roots(&p(&[1, 1]), &fin(2), &fin(1)), Err(Error::EmptyInterval));
    }

    #[test]
    fn bound_serde() {
        for b in [Bound::NegInfinity, Bound::PosInfinity, Bound::Finite(ratio(-3, 7))] {
            let s = serde_json::to_string(&b).unwrap();
            assert_eq!(serde_json::from_str::<Bound>(&s).unwrap(), b);
        }
    }

    proptest! {
        #[test]
        fn counts_known_roots(
            roots in prop::collection::btree_set((-40i64..40, 1i64..4), 1..7),
            lo in (-50i64..50, 1i64..5),
            width in (1i64..100, 1i64..5),
            lead in prop_oneof![Just(-3i64), Just(1i64), Just(2i64)],
        ) {
            let roots: Vec<Rational> = {
                let mut v: Vec<Rational> = roots.iter().map(|&(n, d)| ratio(n, d)).collect();
                v.sort();
                v.dedup();
                v
            };
            let poly = roots.iter().fold(Poly::constant(int(lead)), |acc, r| {
                &acc * &Poly::linear(-r.clone(), int(1))
            });
            let left = ratio(lo.0, lo.1);
            let right = &left + ratio(width.0, width.1);
            prop_assume!(!roots.contains(&left));
            let expected = roots.iter().filter(|r| **r > left && **r <= right).count();
            let got = count_real_roots(&poly, &Bound::Finite(left.clone()), &Bound::Finite(right)).unwrap();
            prop_assert_eq!(got, expected);
            let total = count_real_roots(&poly, &Bound::NegInfinity, &Bound::PosInfinity).unwrap();
            prop_assert_eq!(total, roots.len());
            let above = count_real_roots(&poly, &Bound::Finite(left.clone()), &Bound::PosInfinity).unwrap();
            prop_assert_eq!(above, roots.iter().filter(|r| **r > left).count());
        }
    }
}
