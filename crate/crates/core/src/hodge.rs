//! Equivariant Hodge tables `(λ, p, q) → multiplicity` and the bridges to
//! spectral pairs.
//!
//! A table has a level `N` (the cohomological degree it lives in) and the
//! monodromy weight filtration at eigenvalue `λ` is centered at
//! `N + 1` for `λ = 1` and at `N` otherwise.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::root::RootLabel;
use crate::spp::{SpectralPair, SppSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    Full,
    Primitive,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HodgeKey {
    pub lambda: RootLabel,
    pub p: i64,
    pub q: i64,
}

impl HodgeKey {
    pub fn new(lambda: RootLabel, p: i64, q: i64) -> Self {
        HodgeKey { lambda, p, q }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeTable {
    kind: TableKind,
    level: i64,
    entries: BTreeMap<HodgeKey, i64>,
}

impl HodgeTable {
    pub fn new(kind: TableKind, level: i64) -> Self {
        HodgeTable {
            kind,
            level,
            entries: BTreeMap::new(),
        }
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    /// Center of the weight filtration at `λ`.
    pub fn center(&self, lambda: &RootLabel) -> i64 {
        center(self.level, lambda)
    }

    /// Adds `mult` units at `(λ, p, q)`.
    ///
    /// Panics on a negative multiplicity or, for primitive tables, on an entry
    /// below the center; callers validate signed data before inserting.
    pub fn add(&mut self, lambda: RootLabel, p: i64, q: i64, mult: i64) {
        assert!(
            mult >= 0,
            "negative multiplicity {mult} at ({lambda}, {p}, {q})"
        );
        if self.kind == TableKind::Primitive {
            assert!(
                p + q >= self.center(&lambda),
                "primitive entry ({lambda}, {p}, {q}) below center"
            );
        }
        if mult == 0 {
            return;
        }
        *self.entries.entry(HodgeKey::new(lambda, p, q)).or_insert(0) += mult;
    }

    pub fn get(&self, lambda: &RootLabel, p: i64, q: i64) -> i64 {
        self.entries
            .get(&HodgeKey::new(lambda.clone(), p, q))
            .copied()
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&HodgeKey, i64)> {
        self.entries.iter().map(|(k, m)| (k, *m))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.entries.values().sum()
    }

    /// Distinct eigenvalues present, ascending by label.
    pub fn eigenvalues(&self) -> Vec<RootLabel> {
        let mut v: Vec<RootLabel> = self.entries.keys().map(|k| k.lambda.clone()).collect();
        v.dedup();
        v
    }

    /// Entries at a single eigenvalue, as `(p, q) → mult`.
    pub fn at(&self, lambda: &RootLabel) -> BTreeMap<(i64, i64), i64> {
        self.entries
            .iter()
            .filter(|(k, _)| &k.lambda == lambda)
            .map(|(k, m)| ((k.p, k.q), *m))
            .collect()
    }

    /// Sub-table of the entries whose eigenvalue satisfies `pred`.
    pub fn filter(&self, pred: impl Fn(&RootLabel) -> bool) -> HodgeTable {
        HodgeTable {
            kind: self.kind,
            level: self.level,
            entries: self
                .entries
                .iter()
                .filter(|(k, _)| pred(&k.lambda))
                .map(|(k, m)| (k.clone(), *m))
                .collect(),
        }
    }

    /// Count of units with first Hodge index `p` over all eigenvalues.
    pub fn count_with_p(&self, p: i64) -> i64 {
        self.entries
            .iter()
            .filter(|(k, _)| k.p == p)
            .map(|(_, m)| *m)
            .sum()
    }

    pub fn merge(&mut self, other: &HodgeTable) {
        assert_eq!(self.kind, other.kind);
        assert_eq!(self.level, other.level);
        for (k, m) in other.iter() {
            self.add(k.lambda.clone(), k.p, k.q, m);
        }
    }
}

pub(crate) fn center(level: i64, lambda: &RootLabel) -> i64 {
    if lambda.is_one() {
        level + 1
    } else {
        level
    }
}

/// Spectral pair carried by one unit of `h^{p,q}_λ` at level `N`.
pub fn pair_of(lambda: &RootLabel, p: i64, q: i64, level: i64) -> SpectralPair {
    let beta = lambda.beta();
    if beta.is_zero() {
        SpectralPair::new(Rational::from_int(level - p), p + q - 1)
    } else {
        SpectralPair::new(beta.add_int(level - p - 1), p + q)
    }
}

/// Inverse of [`pair_of`]: the eigenvalue and Hodge type of a spectral pair.
pub fn type_of(pair: &SpectralPair, level: i64) -> (RootLabel, i64, i64) {
    let alpha = &pair.alpha;
    let lambda = RootLabel::from_neg_exponent(alpha);
    if alpha.is_integer() {
        let p = level - alpha.floor_i64();
        (lambda, p, pair.omega + 1 - p)
    } else {
        // α = N - p - 1 + β with β = {α}
        let p = level - 1 - alpha.floor_i64();
        (lambda, p, pair.omega - p)
    }
}

pub fn encode_spp(table: &HodgeTable) -> SppSet {
    assert_eq!(
        table.kind,
        TableKind::Full,
        "encode_spp expects a full table"
    );
    table
        .iter()
        .map(|(k, m)| (pair_of(&k.lambda, k.p, k.q, table.level), m))
        .collect()
}

pub fn decode_spp(set: &SppSet, level: i64) -> Result<HodgeTable> {
    set.ensure_final()?;
    let mut table = HodgeTable::new(TableKind::Full, level);
    for (pair, m) in set.iter() {
        let (lambda, p, q) = type_of(pair, level);
        table.add(lambda, p, q, m);
    }
    Ok(table)
}

/// `h^{a,b}_λ = Σ_{ℓ≥0} p^{a+ℓ,b+ℓ}_λ` above the center, reflected below it.
pub fn full_from_primitive(prim: &HodgeTable) -> HodgeTable {
    assert_eq!(prim.kind, TableKind::Primitive);
    let mut full = HodgeTable::new(TableKind::Full, prim.level);
    for (k, m) in prim.iter() {
        let r = k.p + k.q - prim.center(&k.lambda);
        for l in 0..=r {
            full.add(k.lambda.clone(), k.p - l, k.q - l, m);
        }
    }
    full
}

/// `p^{a,b}_λ = h^{a,b}_λ - h^{a+1,b+1}_λ` for `a + b ≥ c(λ)`.
pub fn primitive_from_full(full: &HodgeTable) -> Result<HodgeTable> {
    assert_eq!(full.kind, TableKind::Full);
    let mut prim = HodgeTable::new(TableKind::Primitive, full.level);
    for (k, m) in full.iter() {
        if k.p + k.q < full.center(&k.lambda) {
            continue;
        }
        let v = m - full.get(&k.lambda, k.p + 1, k.q + 1);
        if v < 0 {
            return Err(Error::NotWeightMonotone {
                at: format!("({}, {}, {})", k.lambda, k.p, k.q),
            });
        }
        prim.add(k.lambda.clone(), k.p, k.q, v);
    }
    Ok(prim)
}

#[derive(Serialize, Deserialize)]
struct TableEntry {
    lambda: RootLabel,
    eigenvalue: String,
    p: i64,
    q: i64,
    mult: i64,
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    kind: TableKind,
    level: i64,
    entries: Vec<TableEntry>,
}

impl Serialize for HodgeTable {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        TableRepr {
            kind: self.kind,
            level: self.level,
            entries: self
                .iter()
                .map(|(k, m)| TableEntry {
                    lambda: k.lambda.clone(),
                    eigenvalue: k.lambda.neg_convention(),
                    p: k.p,
                    q: k.q,
                    mult: m,
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HodgeTable {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = TableRepr::deserialize(deserializer)?;
        let mut table = HodgeTable::new(repr.kind, repr.level);
        for e in repr.entries {
            if e.mult < 0 {
                return Err(D::Error::custom("negative multiplicity in table"));
            }
            if repr.kind == TableKind::Primitive && e.p + e.q < center(repr.level, &e.lambda) {
                return Err(D::Error::custom("primitive entry below center"));
            }
            table.add(e.lambda, e.p, e.q, e.mult);
        }
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use proptest::prelude::*;

    fn one() -> RootLabel {
        RootLabel::one()
    }

    #[test]
    fn encode_examples() {
        let mut t = HodgeTable::new(TableKind::Full, 1);
        t.add(one(), 1, 1, 1);
        assert_eq!(encode_spp(&t), SppSet::singleton(q(0, 1), 1));

        let mut t = HodgeTable::new(TableKind::Full, 1);
        t.add(RootLabel::frac(5, 6), 0, 1, 1);
        assert_eq!(encode_spp(&t), SppSet::singleton(q(1, 6), 1));

        let mut t = HodgeTable::new(TableKind::Full, 1);
        t.add(RootLabel::frac(1, 2), 1, 1, 1);
        assert_eq!(encode_spp(&t), SppSet::singleton(q(-1, 2), 2));
    }

    #[test]
    fn decode_cusp() {
        let cusp: SppSet = [
            (SpectralPair::new(q(-1, 6), 1), 1),
            (SpectralPair::new(q(1, 6), 1), 1),
        ]
        .into_iter()
        .collect();
        let t = decode_spp(&cusp, 1).unwrap();
        assert_eq!(t.get(&RootLabel::frac(1, 6), 1, 0), 1);
        assert_eq!(t.get(&RootLabel::frac(-1, 6), 0, 1), 1);
        assert_eq!(t.total(), 2);
        assert!(decode_spp(&SppSet::new(), 1).unwrap().is_empty());

        let mut bad = SppSet::new();
        bad.add(SpectralPair::new(q(0, 1), 0), -1);
        assert!(matches!(
            decode_spp(&bad, 1),
            Err(Error::NegativeMultiplicity { .. })
        ));
    }

    #[test]
    fn full_from_primitive_examples() {
        let minus_one = RootLabel::frac(1, 2);
        let mut p = HodgeTable::new(TableKind::Primitive, 1);
        p.add(minus_one.clone(), 1, 1, 1);
        let h = full_from_primitive(&p);
        assert_eq!(h.get(&minus_one, 1, 1), 1);
        assert_eq!(h.get(&minus_one, 0, 0), 1);
        assert_eq!(h.total(), 2);
        assert_eq!(primitive_from_full(&h).unwrap(), p);

        let mut p = HodgeTable::new(TableKind::Primitive, 1);
        p.add(one(), 1, 1, 1);
        let h = full_from_primitive(&p);
        assert_eq!(h.total(), 1);
        assert_eq!(h.get(&one(), 1, 1), 1);

        let empty = HodgeTable::new(TableKind::Primitive, 2);
        assert!(full_from_primitive(&empty).is_empty());
    }

    #[test]
    fn primitive_from_full_examples() {
        // single entry on the center line
        let mut h = HodgeTable::new(TableKind::Full, 2);
        h.add(RootLabel::frac(1, 3), 1, 1, 1);
        let p = primitive_from_full(&h).unwrap();
        assert_eq!(p.get(&RootLabel::frac(1, 3), 1, 1), 1);
        assert_eq!(p.total(), 1);

        // h^{2,2} = h^{1,1} = 1 at center 2
        let lam = RootLabel::frac(1, 3);
        let mut h = HodgeTable::new(TableKind::Full, 2);
        h.add(lam.clone(), 2, 2, 1);
        h.add(lam.clone(), 1, 1, 1);
        let p = primitive_from_full(&h).unwrap();
        assert_eq!(p.get(&lam, 2, 2), 1);
        assert_eq!(p.get(&lam, 1, 1), 0);

        // h^{1,1} < h^{2,2} is not a weight filtration
        let mut h = HodgeTable::new(TableKind::Full, 2);
        h.add(lam.clone(), 2, 2, 2);
        h.add(lam, 1, 1, 1);
        assert!(matches!(
            primitive_from_full(&h),
            Err(Error::NotWeightMonotone { .. })
        ));
    }

    fn arb_primitive(level: i64) -> impl Strategy<Value = HodgeTable> {
        prop::collection::vec((0i64..6, 1i64..7, 0i64..3, 0i64..3, 1i64..4), 0..6).prop_map(
            move |v| {
                let mut t = HodgeTable::new(TableKind::Primitive, level);
                for (n, d, a, r, m) in v {
                    let lam = RootLabel::frac(n, d);
                    let c = center(level, &lam);
                    // a + b = c + r
                    t.add(lam, a, c + r - a, m);
                }
                t
            },
        )
    }

    proptest! {
        #[test]
        fn primitive_full_round_trip(p in arb_primitive(2)) {
            let h = full_from_primitive(&p);
            prop_assert_eq!(primitive_from_full(&h).unwrap(), p);
        }

        #[test]
        fn encode_decode_bijective(p in arb_primitive(3)) {
            let h = full_from_primitive(&p);
            let s = encode_spp(&h);
            prop_assert_eq!(s.cardinality(), h.total());
            prop_assert_eq!(decode_spp(&s, 3).unwrap(), h);
        }
    }

    #[test]
    fn serde_round_trip() {
        let mut t = HodgeTable::new(TableKind::Primitive, 1);
        t.add(RootLabel::frac(5, 6), 0, 1, 2);
        t.add(one(), 1, 1, 1);
        let js = serde_json::to_string(&t).unwrap();
        assert!(js.contains("e(-1/6)"));
        let back: HodgeTable = serde_json::from_str(&js).unwrap();
        assert_eq!(back, t);
    }
}
