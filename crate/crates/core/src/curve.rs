//! Closed forms for `n = 1`: `f_d = Π_j l_j^{α_j}` with distinct linear forms.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::hodge::{HodgeTable, TableKind};
use crate::local::LocalModel;
use crate::rational::Rational;
use crate::root::RootLabel;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSpec {
    multiplicities: Vec<i64>,
}

impl CurveSpec {
    pub fn new(multiplicities: Vec<i64>) -> Result<Self> {
        if multiplicities.is_empty() {
            return Err(Error::validation(
                "multiplicities",
                "need at least one linear factor",
            ));
        }
        if let Some((i, a)) = multiplicities.iter().enumerate().find(|(_, a)| **a < 1) {
            return Err(Error::validation(
                format!("multiplicities[{i}]"),
                format!("multiplicity {a} must be >= 1"),
            ));
        }
        let d: i64 = multiplicities.iter().sum();
        if d < 2 {
            return Err(Error::validation("multiplicities", "degree must be >= 2"));
        }
        Ok(CurveSpec { multiplicities })
    }

    pub fn multiplicities(&self) -> &[i64] {
        &self.multiplicities
    }

    pub fn degree(&self) -> i64 {
        self.multiplicities.iter().sum()
    }

    pub fn gcd(&self) -> i64 {
        self.multiplicities.iter().fold(0, |g, a| g.gcd(a))
    }

    pub fn factors(&self) -> i64 {
        self.multiplicities.len() as i64
    }

    /// The points of `X^∞` as one-variable germs `u^{α_j}` (smooth points omitted).
    pub fn local_models(&self) -> Vec<LocalModel> {
        self.multiplicities
            .iter()
            .filter(|a| **a >= 2)
            .map(|a| LocalModel::brieskorn_pham(&[*a]))
            .collect()
    }
}

fn delta(x: &Rational) -> i64 {
    i64::from(x.is_integer())
}

fn nonneg(clause: &'static str, value: i64) -> Result<i64> {
    if value < 0 {
        Err(Error::NegativeFormula { clause, value })
    } else {
        Ok(value)
    }
}

/// `h^{1,1}(P^2(X'_0)_{e(s/d)}) = δ(sα/d)`, all other numbers zero.
pub fn curve_cover_h11(c: &CurveSpec, s: i64) -> i64 {
    assert!(0 < s && s < c.degree(), "sector {s} outside 0 < s < d");
    delta(&Rational::new(s * c.gcd(), c.degree()))
}

/// Primitive table at infinity (level 1).
pub fn curve_primitives(c: &CurveSpec) -> Result<HodgeTable> {
    let d = c.degree();
    let alpha = c.gcd();
    let mults = c.multiplicities();
    let mut prim = HodgeTable::new(TableKind::Primitive, 1);

    prim.add(RootLabel::one(), 1, 1, c.factors() - 1);

    // ξ = e(-s/d)
    for s in 1..d {
        let lambda = RootLabel::frac(-s, d);
        let cover = delta(&Rational::new(s * alpha, d));
        let parts: Vec<Rational> = mults.iter().map(|a| Rational::new(s * a, d)).collect();
        let p11 = -cover + parts.iter().map(delta).sum::<i64>();
        let p01 = -s - 1 + cover + parts.iter().map(Rational::ceil_i64).sum::<i64>();
        let p10 = s - 1 + cover - parts.iter().map(Rational::floor_i64).sum::<i64>();
        prim.add(lambda.clone(), 1, 1, nonneg("p^{1,1} at a d-th root", p11)?);
        prim.add(lambda.clone(), 0, 1, nonneg("p^{0,1} at a d-th root", p01)?);
        prim.add(lambda, 1, 0, nonneg("p^{1,0} at a d-th root", p10)?);
    }

    // ξ = e(-β) with ξ^d ≠ 1: nonzero only if ξ^{(d-1)α_j} = 1 for some j
    let candidates: BTreeSet<Rational> = mults
        .iter()
        .flat_map(|a| {
            let order = (d - 1) * a;
            (1..order).map(move |k| Rational::new(k, order))
        })
        .collect();
    for beta in candidates {
        if beta.mul_int(d).is_integer() || beta.mul_int(d - 1).is_integer() {
            continue;
        }
        let count = mults
            .iter()
            .filter(|a| beta.mul_int((d - 1) * **a).is_integer())
            .count() as i64;
        let gamma = beta.mul_int(d - 1).fract();
        let lambda = RootLabel::from_neg_exponent(&beta);
        if &beta + &gamma < 1 {
            prim.add(lambda, 0, 1, count);
        } else {
            prim.add(lambda, 1, 0, count);
        }
    }
    Ok(prim)
}
