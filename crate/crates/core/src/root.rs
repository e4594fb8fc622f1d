//! Roots of unity `e(q) = exp(2πi q)` stored by their label `q ∈ [0, 1)`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootLabel(Rational);

impl RootLabel {
    /// The root `e(x)` for an arbitrary rational `x`.
    pub fn of(x: &Rational) -> Self {
        RootLabel(x.fract())
    }

    /// The root `e(-beta)`.
    pub fn from_neg_exponent(beta: &Rational) -> Self {
        RootLabel((-beta).fract())
    }

    pub fn one() -> Self {
        RootLabel(Rational::zero())
    }

    /// `e(numer / denom)`.
    pub fn frac(numer: i64, denom: i64) -> Self {
        RootLabel::of(&Rational::new(numer, denom))
    }

    pub fn label(&self) -> &Rational {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        RootLabel::of(&-&self.0)
    }

    pub fn pow(&self, k: i64) -> Self {
        RootLabel::of(&self.0.mul_int(k))
    }

    /// `λ^k = 1`.
    pub fn is_root_of_unity_of_order_dividing(&self, k: i64) -> bool {
        self.0.mul_int(k).is_integer()
    }

    /// The exponent `β ∈ [0, 1)` with `λ = e(-β)`.
    pub fn beta(&self) -> Rational {
        (-&self.0).fract()
    }

    /// `e(-β)` rendering used in reports.
    pub fn neg_convention(&self) -> String {
        if self.is_one() {
            "1".to_string()
        } else {
            format!("e(-{})", self.beta())
        }
    }
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({})", self.0)
    }
}

impl fmt::Debug for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for RootLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RootLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let q = Rational::deserialize(deserializer)?;
        if q.is_negative() || q >= 1 {
            return Err(serde::de::Error::custom(Error::Parse(format!(
                "root label {q} outside [0, 1)"
            ))));
        }
        Ok(RootLabel(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn conjugate_and_powers() {
        let l = RootLabel::frac(1, 6);
        assert_eq!(l.conjugate(), RootLabel::frac(5, 6));
        assert_eq!(l.pow(6), RootLabel::one());
        assert_eq!(l.pow(-5), RootLabel::frac(1, 6));
        assert_eq!(RootLabel::one().conjugate(), RootLabel::one());
    }

    #[test]
    fn negative_convention() {
        let l = RootLabel::frac(5, 6);
        assert_eq!(l.beta(), q(1, 6));
        assert_eq!(RootLabel::from_neg_exponent(&q(1, 6)), l);
        assert_eq!(RootLabel::one().beta(), Rational::zero());
        assert_eq!(l.neg_convention(), "e(-1/6)");
        assert_eq!(RootLabel::frac(-1, 2), RootLabel::frac(1, 2));
    }

    #[test]
    fn order_test() {
        let l = RootLabel::frac(1, 30);
        assert!(l.is_root_of_unity_of_order_dividing(30));
        assert!(!l.is_root_of_unity_of_order_dividing(6));
    }
}
