//! Spectral-pair identities at infinity: the two involutions, the global
//! Thom-Sebastiani identity, the twisted-suspension aggregate and spectral
//! semicontinuity.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::global::GlobalPositionData;
use crate::hodge::{HodgeTable, TableKind};
use crate::infinity::{
    full_at_infinity, primitives_at_infinity, spp_at_infinity, StarPolynomialSpec,
};
use crate::local::{twisted_suspension, LocalSpectrum};
use crate::rational::Rational;
use crate::root::RootLabel;
use crate::spp::{sd_set, SpectralPair, SppSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub sym1: bool,
    pub sym2: bool,
    pub spectrum_symmetric: bool,
}

impl SymmetryReport {
    pub fn all(&self) -> bool {
        self.sym1 && self.sym2 && self.spectrum_symmetric
    }
}

/// `(α, n+k) ↔ (α+k, n-k)`, `(α, n+k) ↔ (n-1-α, n-k)` and `α ↔ n-1-α` on the spectrum.
pub fn check_spp_symmetry(set: &SppSet, n: i64) -> SymmetryReport {
    let sym1 = set.map_pairs(|p| {
        let k = p.omega - n;
        SpectralPair::new(p.alpha.add_int(k), n - k)
    });
    let sym2 = set
        .map_pairs(|p| SpectralPair::new(&Rational::from_int(n - 1) - &p.alpha, 2 * n - p.omega));
    let spectrum = set.spectrum();
    let spectrum_symmetric = spectrum
        .iter()
        .all(|(a, m)| spectrum.get(&(&Rational::from_int(n - 1) - a)) == Some(m));
    SymmetryReport {
        sym1: &sym1 == set,
        sym2: &sym2 == set,
        spectrum_symmetric,
    }
}

/// `h^{a,b}_λ = h^{b,a}_{λ̄}` for every entry.
pub fn conjugation_symmetric(full: &HodgeTable) -> bool {
    full.iter()
        .all(|(k, m)| full.get(&k.lambda.conjugate(), k.q, k.p) == m)
}

/// Input data of `f + x_{n+2}^d`: every germ is suspended by `u^d`, the new
/// middle cohomology of `X^∞` is the non-invariant part of the old cover, and
/// the new cover comes from the double cover.
pub fn suspended_spec(spec: &StarPolynomialSpec) -> StarPolynomialSpec {
    let (n, d) = (spec.n, spec.d);
    let mut pn_xinf = BTreeMap::new();
    for entries in spec.global.pn1_cover.values() {
        for (p, m) in entries {
            *pn_xinf.entry(*p).or_insert(0) += m;
        }
    }
    pn_xinf.retain(|_, m| *m != 0);
    let cover = crate::global::lift_double_cover(
        &spec.global.xinf_numbers(n),
        &spec.global.cover_numbers(n, d),
        d,
    );
    let pn1_cover = GlobalPositionData::from_numbers(&BTreeMap::new(), &cover).pn1_cover;
    StarPolynomialSpec {
        n: n + 1,
        d,
        locals: spec.locals.iter().map(|m| m.suspend(d)).collect(),
        global: GlobalPositionData { pn_xinf, pn1_cover },
    }
}

pub fn spec_spp(spec: &StarPolynomialSpec) -> Result<SppSet> {
    Ok(spp_at_infinity(&full_at_infinity(&primitives_at_infinity(
        spec,
    )?)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StCheck {
    pub lhs: SppSet,
    pub rhs: SppSet,
    pub equal: bool,
}

/// `Spp(f + x^d)` through the pipeline versus `Spp(f) ∗ S_d`.
pub fn global_st_check(spec: &StarPolynomialSpec) -> Result<StCheck> {
    let lhs = spec_spp(&suspended_spec(spec))?;
    let rhs = spec_spp(spec)?.join(&sd_set(spec.d)?);
    let equal = lhs == rhs;
    Ok(StCheck { lhs, rhs, equal })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AggregateCheck {
    /// Full multiplicities at `λ^d ≠ 1`, regrouped by `(λ^d)^{-1}`.
    pub lhs: HodgeTable,
    /// `Σ_j` twisted suspensions of the local germs.
    pub rhs: HodgeTable,
    pub equal: bool,
}

/// For every `η ≠ 1`: the `λ^d = η` part of the full table at infinity equals
/// the `η^{-1}` part of the summed twisted suspensions.
pub fn aggregate_twisted_check(
    full: &HodgeTable,
    locals: &[LocalSpectrum],
    d: i64,
) -> Result<AggregateCheck> {
    let level = full.level();
    let mut lhs = HodgeTable::new(TableKind::Full, level);
    for (key, m) in full.iter() {
        if key.lambda.is_root_of_unity_of_order_dividing(d) {
            continue;
        }
        lhs.add(key.lambda.pow(d).conjugate(), key.p, key.q, m);
    }
    let mut rhs = HodgeTable::new(TableKind::Full, level);
    for l in locals {
        rhs.merge(&twisted_suspension(l, d)?);
    }
    let equal = lhs == rhs;
    Ok(AggregateCheck { lhs, rhs, equal })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntervalKind {
    /// `(t, t + 1]`
    LeftOpen,
    /// `[t, t + 1)`
    RightOpen,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalRow {
    pub kind: IntervalKind,
    pub lower: Rational,
    pub s_f: i64,
    pub s_def: i64,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemicontinuityReport {
    pub d: i64,
    /// `(k/d, k/d + 1]` for every `k` meeting either spectrum.
    pub rows: Vec<IntervalRow>,
    /// Other unit intervals; reported, not asserted.
    pub informational: Vec<IntervalRow>,
    pub ok: bool,
}

fn count_in(spectrum: &BTreeMap<Rational, i64>, lower: &Rational, kind: IntervalKind) -> i64 {
    let upper = lower.add_int(1);
    spectrum
        .iter()
        .filter(|(a, _)| match kind {
            IntervalKind::LeftOpen => *a > lower && **a <= upper,
            IntervalKind::RightOpen => *a >= lower && **a < upper,
        })
        .map(|(_, m)| *m)
        .sum()
}

fn row(
    f: &BTreeMap<Rational, i64>,
    def: &BTreeMap<Rational, i64>,
    lower: Rational,
    kind: IntervalKind,
) -> IntervalRow {
    let s_f = count_in(f, &lower, kind);
    let s_def = count_in(def, &lower, kind);
    IntervalRow {
        kind,
        lower,
        s_f,
        s_def,
        ok: s_def >= s_f,
    }
}

/// Compares spectral numbers of `f` and of a deformation `f_def` of the same
/// degree `d` on the intervals `(k/d, k/d + 1]`.
pub fn semicontinuity_report(spp_f: &SppSet, spp_def: &SppSet, d: i64) -> SemicontinuityReport {
    let f = spp_f.spectrum();
    let def = spp_def.spectrum();
    let numbers: BTreeSet<Rational> = f.keys().chain(def.keys()).cloned().collect();

    let mut rows = Vec::new();
    if let (Some(lo), Some(hi)) = (numbers.first(), numbers.last()) {
        // (k/d, k/d + 1] meets [lo, hi] iff k/d < hi and k/d + 1 >= lo
        let k_min = lo.add_int(-1).mul_int(d).floor_i64();
        let k_max = hi.mul_int(d).ceil_i64();
        for k in k_min..=k_max {
            let r = row(&f, &def, Rational::new(k, d), IntervalKind::LeftOpen);
            if r.s_f != 0 || r.s_def != 0 {
                rows.push(r);
            }
        }
    }

    let mut points: BTreeSet<Rational> = numbers
        .iter()
        .flat_map(|a| [a.clone(), a.add_int(-1)])
        .collect();
    let sorted: Vec<Rational> = points.iter().cloned().collect();
    for w in sorted.windows(2) {
        points.insert((&w[0] + &w[1]).div_int(2));
    }
    let mut informational = Vec::new();
    for t in &points {
        for kind in [IntervalKind::LeftOpen, IntervalKind::RightOpen] {
            let r = row(&f, &def, t.clone(), kind);
            if r.s_f != 0 || r.s_def != 0 {
                informational.push(r);
            }
        }
    }

    let ok = rows.iter().all(|r| r.ok);
    SemicontinuityReport {
        d,
        rows,
        informational,
        ok,
    }
}

/// `η` labels of the twisted-suspension eigenvalues, for reporting.
pub fn aggregate_eigenvalues(check: &AggregateCheck) -> Vec<RootLabel> {
    let mut v = check.lhs.eigenvalues();
    v.extend(check.rhs.eigenvalues());
    v.sort();
    v.dedup();
    v
}
