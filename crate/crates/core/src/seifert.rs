//! Real Seifert form of the generic fiber: decomposition into indecomposable
//! blocks `W^k_λ(±1)`, equivariant signatures, and the mod-2 spectral-pair
//! projection, which carries the same information.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hodge::HodgeTable;
use crate::rational::Rational;
use crate::root::RootLabel;
use crate::spp::SppSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VariationBlock {
    pub lambda: RootLabel,
    pub size: i64,
    pub sign: i8,
}

impl fmt::Display for VariationBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign > 0 { "+1" } else { "-1" };
        write!(f, "W^{}_{}({s})", self.size, self.lambda.neg_convention())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SeifertDecomposition {
    blocks: BTreeMap<VariationBlock, i64>,
}

impl SeifertDecomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, block: VariationBlock, count: i64) {
        assert!(count >= 0, "negative block count");
        if count > 0 {
            *self.blocks.entry(block).or_insert(0) += count;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VariationBlock, i64)> {
        self.blocks.iter().map(|(b, c)| (b, *c))
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `Σ size · count`, the rank of the lattice.
    pub fn mass(&self) -> i64 {
        self.blocks.iter().map(|(b, c)| b.size * c).sum()
    }
}

fn sign_of(b: i64) -> i8 {
    if b.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// One block `W^{r+1}_λ((-1)^b)` per unit of `p^{a,b}_λ`, `r = a + b - n - [λ = 1]`.
pub fn seifert_decomposition(prim: &HodgeTable, n: i64) -> SeifertDecomposition {
    let mut out = SeifertDecomposition::new();
    for (key, m) in prim.iter() {
        let s = i64::from(key.lambda.is_one());
        let r = key.p + key.q - n - s;
        let block = VariationBlock {
            lambda: key.lambda.clone(),
            size: r + 1,
            sign: sign_of(key.q),
        };
        out.add(block, m);
    }
    out
}

/// `σ_λ = Σ (-1)^b p^{a,b}_λ` over `a + b - n` even.
pub fn equivariant_signature(prim: &HodgeTable, n: i64) -> BTreeMap<RootLabel, i64> {
    let mut out = BTreeMap::new();
    for (key, m) in prim.iter() {
        let entry = out.entry(key.lambda.clone()).or_insert(0);
        if (key.p + key.q - n).rem_euclid(2) == 0 {
            *entry += i64::from(sign_of(key.q)) * m;
        }
    }
    out
}

/// Signature read off the blocks: `W^k_λ(ε)` contributes `ε` when `k` is odd
/// for `λ ≠ 1` and when `k` is even for `λ = 1`.
pub fn signature_from_blocks(dec: &SeifertDecomposition) -> BTreeMap<RootLabel, i64> {
    let mut out = BTreeMap::new();
    for (block, c) in dec.iter() {
        let entry = out.entry(block.lambda.clone()).or_insert(0);
        let parity = if block.lambda.is_one() { 0 } else { 1 };
        if block.size.rem_euclid(2) == parity {
            *entry += i64::from(block.sign) * c;
        }
    }
    out
}

/// Spectral pairs with `α` reduced into `[0, 2)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SppMod2 {
    #[serde(with = "mod2_serde")]
    pairs: BTreeMap<(Rational, i64), i64>,
}

impl SppMod2 {
    pub fn add(&mut self, residue: &Rational, omega: i64, mult: i64) {
        let key = (residue.rem_euclid(2), omega);
        let e = self.pairs.entry(key.clone()).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.pairs.remove(&key);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Rational, i64), i64)> {
        self.pairs.iter().map(|(k, m)| (k, *m))
    }

    pub fn cardinality(&self) -> i64 {
        self.pairs.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

mod mod2_serde {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        residue: Rational,
        omega: i64,
        mult: i64,
    }

    pub fn serialize<S: Serializer>(
        m: &BTreeMap<(Rational, i64), i64>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<Entry> = m
            .iter()
            .map(|((r, w), c)| Entry {
                residue: r.clone(),
                omega: *w,
                mult: *c,
            })
            .collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BTreeMap<(Rational, i64), i64>, D::Error> {
        let v = Vec::<Entry>::deserialize(d)?;
        Ok(v.into_iter()
            .map(|e| ((e.residue, e.omega), e.mult))
            .collect())
    }
}

pub fn spp_mod2(set: &SppSet) -> SppMod2 {
    let mut out = SppMod2::default();
    for (pair, m) in set.iter() {
        out.add(&pair.alpha, pair.omega, m);
    }
    out
}

/// Inverse of `spp_mod2 ∘ spp_at_infinity ∘ full_from_primitive` on the level of
/// Seifert blocks.
///
/// A primitive unit `p^{a,b}_λ` of rank `r` becomes the chain of pairs
/// `(α_0 + ℓ, n + r - 2ℓ)`, `ℓ = 0..=r`. The pair with the largest `ω` left is
/// always the top of a chain, so chains are peeled off from the top. The parity
/// of `a` is read from `α_0` and fixes the sign `(-1)^b`.
pub fn seifert_from_mod2(set: &SppMod2, n: i64) -> Result<SeifertDecomposition> {
    let mut rest = set.pairs.clone();
    let mut out = SeifertDecomposition::new();
    while let Some(((alpha0, omega), _)) = rest
        .iter()
        .max_by_key(|((_, w), _)| *w)
        .map(|(k, m)| (k.clone(), *m))
    {
        let r = omega - n;
        if r < 0 {
            return Err(Error::AmbiguousResidue(format!(
                "pair ({alpha0}, {omega}) mod 2 is not the top of any weight chain"
            )));
        }
        for l in 0..=r {
            let key = (alpha0.add_int(l).rem_euclid(2), n + r - 2 * l);
            match rest.get_mut(&key) {
                Some(m) if *m > 0 => {
                    *m -= 1;
                    if *m == 0 {
                        rest.remove(&key);
                    }
                }
                _ => {
                    return Err(Error::AmbiguousResidue(format!(
                        "chain from ({alpha0}, {omega}) misses ({}, {}) mod 2",
                        key.0, key.1
                    )))
                }
            }
        }
        let lambda = RootLabel::of(&-&alpha0);
        let s = i64::from(lambda.is_one());
        let a = if lambda.is_one() {
            n - alpha0.floor_i64()
        } else {
            n - 1 - alpha0.floor_i64()
        };
        let b = n + s + r - a;
        out.add(
            VariationBlock {
                lambda,
                size: r + 1,
                sign: sign_of(b),
            },
            1,
        );
    }
    Ok(out)
}
