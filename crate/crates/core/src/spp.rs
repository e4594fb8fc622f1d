//! Spectral pairs and the signed multiset calculus `Z[Q × N]`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpectralPair {
    pub alpha: Rational,
    pub omega: i64,
}

impl SpectralPair {
    pub fn new(alpha: Rational, omega: i64) -> Self {
        SpectralPair { alpha, omega }
    }

    /// `(α, ω) ∗ (α', ω') = (α + α' + 1, ω + ω' + 1)`.
    pub fn join(&self, other: &SpectralPair) -> SpectralPair {
        SpectralPair {
            alpha: (&self.alpha + &other.alpha).add_int(1),
            omega: self.omega + other.omega + 1,
        }
    }
}

impl fmt::Debug for SpectralPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.omega)
    }
}

/// Signed multiset of spectral pairs. Zero multiplicities are never stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SppSet {
    pairs: BTreeMap<SpectralPair, i64>,
}

impl SppSet {
    pub fn new() -> Self {
        SppSet::default()
    }

    pub fn singleton(alpha: Rational, omega: i64) -> Self {
        let mut s = SppSet::new();
        s.add(SpectralPair::new(alpha, omega), 1);
        s
    }

    pub fn add(&mut self, pair: SpectralPair, mult: i64) {
        if mult == 0 {
            return;
        }
        match self.pairs.entry(pair) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += mult;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(mult);
            }
        }
    }

    pub fn add_all(&mut self, other: &SppSet) {
        for (p, m) in other.iter() {
            self.add(p.clone(), m);
        }
    }

    pub fn multiplicity(&self, pair: &SpectralPair) -> i64 {
        self.pairs.get(pair).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SpectralPair, i64)> {
        self.pairs.iter().map(|(p, m)| (p, *m))
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Total multiplicity `Σ m`.
    pub fn cardinality(&self) -> i64 {
        self.pairs.values().sum()
    }

    /// A set is final when every multiplicity and every weight is non-negative.
    pub fn is_final(&self) -> bool {
        self.pairs.iter().all(|(p, m)| *m >= 0 && p.omega >= 0)
    }

    pub fn ensure_final(&self) -> Result<()> {
        for (p, m) in &self.pairs {
            if *m < 0 || p.omega < 0 {
                return Err(Error::NegativeMultiplicity {
                    at: format!("{p:?}"),
                    mult: if *m < 0 { *m } else { p.omega },
                });
            }
        }
        Ok(())
    }

    /// Bilinear extension of the pair join.
    pub fn join(&self, other: &SppSet) -> SppSet {
        let mut out = SppSet::new();
        for (a, m) in self.iter() {
            for (b, k) in other.iter() {
                out.add(a.join(b), m * k);
            }
        }
        out
    }

    /// `T(a, b)(α, ω) = (α + a, ω + a + b)`; `a` must be an integer.
    pub fn shift(&self, a: &Rational, b: i64) -> Result<SppSet> {
        let a_int = a
            .to_i64()
            .ok_or_else(|| Error::NonIntegralShift(a.to_string()))?;
        let mut out = SppSet::new();
        for (p, m) in self.iter() {
            out.add(SpectralPair::new(&p.alpha + a, p.omega + a_int + b), m);
        }
        Ok(out)
    }

    /// Spectrum: the first projection, as a multiset of rationals.
    pub fn spectrum(&self) -> BTreeMap<Rational, i64> {
        let mut sp = BTreeMap::new();
        for (p, m) in self.iter() {
            *sp.entry(p.alpha.clone()).or_insert(0) += m;
        }
        sp.retain(|_, m| *m != 0);
        sp
    }

    /// Count of spectral numbers (with multiplicity) satisfying `pred`.
    pub fn count_alpha(&self, pred: impl Fn(&Rational) -> bool) -> i64 {
        self.iter()
            .filter(|(p, _)| pred(&p.alpha))
            .map(|(_, m)| m)
            .sum()
    }

    pub fn map_pairs(&self, f: impl Fn(&SpectralPair) -> SpectralPair) -> SppSet {
        let mut out = SppSet::new();
        for (p, m) in self.iter() {
            out.add(f(p), m);
        }
        out
    }

    /// `self - other` as a signed set.
    pub fn difference(&self, other: &SppSet) -> SppSet {
        let mut out = self.clone();
        for (p, m) in other.iter() {
            out.add(p.clone(), -m);
        }
        out
    }
}

impl fmt::Debug for SppSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.pairs.iter()).finish()
    }
}

impl FromIterator<(SpectralPair, i64)> for SppSet {
    fn from_iter<I: IntoIterator<Item = (SpectralPair, i64)>>(iter: I) -> Self {
        let mut s = SppSet::new();
        for (p, m) in iter {
            s.add(p, m);
        }
        s
    }
}

#[derive(Serialize, Deserialize)]
struct SppEntry {
    alpha: Rational,
    omega: i64,
    mult: i64,
}

impl Serialize for SppSet {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|(p, m)| SppEntry {
            alpha: p.alpha.clone(),
            omega: p.omega,
            mult: m,
        }))
    }
}

impl<'de> Deserialize<'de> for SppSet {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<SppEntry>::deserialize(deserializer)?;
        Ok(entries
            .into_iter()
            .map(|e| (SpectralPair::new(e.alpha, e.omega), e.mult))
            .collect())
    }
}

/// `S_d = Σ_{0<s<d} (-s/d, 0)`.
pub fn sd_set(d: i64) -> Result<SppSet> {
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    Ok((1..d)
        .map(|s| (SpectralPair::new(Rational::new(-s, d), 0), 1))
        .collect())
}
