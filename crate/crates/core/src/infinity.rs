//! Equivariant primitive and full Hodge numbers of the mixed Hodge structure
//! at infinity of a (*)-polynomial in `n + 1 ≥ 3` variables, assembled from
//! the hypersurface at infinity, its cyclic cover and the local singularities.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::global::{cover_hodge, CoverHodge, GlobalPositionData};
use crate::hodge::{encode_spp, full_from_primitive, HodgeTable, TableKind};
use crate::local::{local_primitive_table, local_spectral_pairs, LocalModel, LocalSpectrum};
use crate::root::RootLabel;
use crate::spp::SppSet;

/// Top-degree data of a (*)-polynomial: `n`, `d`, the singular points of
/// `X^∞` (each a germ in `n` variables) and the position-dependent numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarPolynomialSpec {
    pub n: i64,
    pub d: i64,
    pub locals: Vec<LocalModel>,
    pub global: GlobalPositionData,
}

impl StarPolynomialSpec {
    pub fn smooth(n: i64, d: i64) -> Self {
        StarPolynomialSpec {
            n,
            d,
            locals: Vec::new(),
            global: GlobalPositionData::zero(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::validation(
                "n",
                "need n >= 2 (use the curve form for n = 1)",
            ));
        }
        if self.d < 2 {
            return Err(Error::validation("d", "need d >= 2"));
        }
        for (j, m) in self.locals.iter().enumerate() {
            if m.variables() != self.n {
                return Err(Error::validation(
                    format!("singularities[{j}]"),
                    format!(
                        "germ has {} variables, expected n = {}",
                        m.variables(),
                        self.n
                    ),
                ));
            }
        }
        self.global.validate(self.n, self.d)
    }

    pub fn local_spectra(&self) -> Result<Vec<LocalSpectrum>> {
        self.locals.iter().map(local_spectral_pairs).collect()
    }

    /// Total Milnor number of the singularities at infinity.
    pub fn milnor_sum(&self) -> Result<i64> {
        Ok(self.local_spectra()?.iter().map(|l| l.milnor_number).sum())
    }
}

/// Jordan blocks of the monodromy at infinity: `(λ, size) → count`.
pub type JordanStructure = BTreeMap<(RootLabel, i64), i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityHodge {
    pub primitive: HodgeTable,
    pub full: HodgeTable,
    pub jordan: JordanStructure,
    pub rank: i64,
}

impl InfinityHodge {
    pub fn from_primitive(primitive: HodgeTable, n: i64) -> Self {
        let full = full_at_infinity(&primitive);
        let jordan = jordan_structure(&primitive, n);
        let rank = full.total();
        InfinityHodge {
            primitive,
            full,
            jordan,
            rank,
        }
    }

    pub fn spectral_pairs(&self) -> SppSet {
        spp_at_infinity(&self.full)
    }

    pub fn max_jordan_block(&self) -> Option<(RootLabel, i64)> {
        self.jordan.keys().max_by_key(|(_, size)| *size).cloned()
    }
}

/// Primitive numbers at eigenvalues `λ` with `λ^d ≠ 1`, which depend only on
/// the local singularity types.
pub fn primitives_off_roots(locals: &[LocalSpectrum], n: i64, d: i64) -> Result<HodgeTable> {
    let mut out = HodgeTable::new(TableKind::Primitive, n);
    for l in locals {
        let prim = local_primitive_table(l)?;
        for (key, m) in prim.iter() {
            // λ = e(-β) with λ^{1-d} = μ, i.e. {(d-1)β} = label(μ) = γ
            let gamma = key.lambda.label();
            let delta = i64::from(!gamma.is_zero());
            for k in 0..=d - 2 {
                let beta = gamma.add_int(k).div_int(d - 1);
                if beta.is_zero() || beta.mul_int(d).is_integer() {
                    continue;
                }
                // local type (p - [β+γ], q - δ + [β+γ]) sits at global (p, q)
                let shift = (&beta + gamma).floor_i64();
                out.add(
                    RootLabel::from_neg_exponent(&beta),
                    key.p + shift,
                    key.q + delta - shift,
                    m,
                );
            }
        }
    }
    Ok(out)
}

/// Primitive table of the MHS at infinity (level `n`, centers `n + 1` at
/// `λ = 1` and `n` elsewhere).
pub fn primitives_at_infinity(spec: &StarPolynomialSpec) -> Result<HodgeTable> {
    Ok(primitives_with_cover(spec)?.0)
}

pub(crate) fn primitives_with_cover(spec: &StarPolynomialSpec) -> Result<(HodgeTable, CoverHodge)> {
    spec.validate()?;
    let (n, d) = (spec.n, spec.d);
    let locals = spec.local_spectra()?;
    let ch = cover_hodge(&locals, &spec.global, n, d)?;
    let mut prim = HodgeTable::new(TableKind::Primitive, n);
    for ((i, j), m) in &ch.xinf {
        prim.add(RootLabel::one(), n - j, n - i, *m);
    }
    for (s, table) in &ch.cover {
        for ((i, j), m) in table {
            prim.add(RootLabel::frac(*s, d), n - j, n - i, *m);
        }
    }
    prim.merge(&primitives_off_roots(&locals, n, d)?);
    Ok((prim, ch))
}

pub fn full_at_infinity(prim: &HodgeTable) -> HodgeTable {
    full_from_primitive(prim)
}

/// Each `p^{a,b}_λ` contributes that many blocks of size `a + b - n - [λ = 1] + 1`.
pub fn jordan_structure(prim: &HodgeTable, n: i64) -> JordanStructure {
    let mut out = JordanStructure::new();
    for (key, m) in prim.iter() {
        let s = i64::from(key.lambda.is_one());
        let r = key.p + key.q - n - s;
        *out.entry((key.lambda.clone(), r + 1)).or_insert(0) += m;
    }
    out
}

pub fn spp_at_infinity(full: &HodgeTable) -> SppSet {
    encode_spp(full)
}

pub fn infinity_hodge(spec: &StarPolynomialSpec) -> Result<InfinityHodge> {
    Ok(InfinityHodge::from_primitive(
        primitives_at_infinity(spec)?,
        spec.n,
    ))
}

/// Serializable form of a Jordan structure entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanEntry {
    pub lambda: RootLabel,
    pub eigenvalue: String,
    pub size: i64,
    pub count: i64,
}

pub fn jordan_entries(j: &JordanStructure) -> Vec<JordanEntry> {
    j.iter()
        .map(|((lambda, size), count)| JordanEntry {
            lambda: lambda.clone(),
            eigenvalue: lambda.neg_convention(),
            size: *size,
            count: *count,
        })
        .collect()
}
