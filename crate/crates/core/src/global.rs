//! Hodge numbers of the hypersurface at infinity `X^∞ = {f_d = 0} ⊂ P^n` and of
//! the Galois eigenspaces of its cyclic cover `X'_0 = {f_d + z^d = 0} ⊂ P^{n+1}`.
//!
//! The position-dependent inputs (the pure top-degree pieces) are supplied by
//! the caller; everything else is assembled from the local singularities and
//! the Jacobian-ring constants.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hodge::decode_spp;
use crate::jconst::j;
use crate::local::{galois_suspension, primitive_table, LocalSpectrum};
use crate::spp::SppSet;

/// Hodge numbers of a single graded piece, `(p, q) → h^{p,q}`.
pub type HodgeNumbers = BTreeMap<(i64, i64), i64>;

/// Position-dependent global data of a degree-`d` form in `n + 1` variables.
///
/// `pn_xinf[p] = h^{p,n-p}(P^n(X^∞))` and
/// `pn1_cover[s][p] = h^{p,n+1-p}(P^{n+1}(X'_0)_{e(s/d)})`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalPositionData {
    pub pn_xinf: BTreeMap<i64, i64>,
    pub pn1_cover: BTreeMap<i64, BTreeMap<i64, i64>>,
}

impl GlobalPositionData {
    pub fn zero() -> Self {
        GlobalPositionData::default()
    }

    pub fn xinf(&self, p: i64) -> i64 {
        self.pn_xinf.get(&p).copied().unwrap_or(0)
    }

    pub fn cover(&self, s: i64, p: i64) -> i64 {
        self.pn1_cover
            .get(&s)
            .and_then(|m| m.get(&p))
            .copied()
            .unwrap_or(0)
    }

    pub fn validate(&self, n: i64, d: i64) -> Result<()> {
        for (p, m) in &self.pn_xinf {
            if *m < 0 {
                return Err(Error::validation(
                    format!("global.pn_xinf[{p}]"),
                    "negative multiplicity",
                ));
            }
            if !(0..=n).contains(p) {
                return Err(Error::validation(
                    format!("global.pn_xinf[{p}]"),
                    format!("Hodge index outside 0..={n}"),
                ));
            }
            if self.xinf(n - p) != *m {
                return Err(Error::validation(
                    format!("global.pn_xinf[{p}]"),
                    "Hodge symmetry h^{p,q} = h^{q,p} violated",
                ));
            }
        }
        for (s, entries) in &self.pn1_cover {
            if !(1..d).contains(s) {
                return Err(Error::validation(
                    format!("global.pn1_cover[{s}]"),
                    format!("sector outside 1..{d}"),
                ));
            }
            for (p, m) in entries {
                let path = format!("global.pn1_cover[{s}][{p}]");
                if *m < 0 {
                    return Err(Error::validation(path, "negative multiplicity"));
                }
                if !(0..=n + 1).contains(p) {
                    return Err(Error::validation(
                        path,
                        format!("Hodge index outside 0..={}", n + 1),
                    ));
                }
                if self.cover(d - s, n + 1 - p) != *m {
                    return Err(Error::validation(
                        path,
                        format!(
                            "sector {s} at ({p},{}) differs from sector {} at ({},{p})",
                            n + 1 - p,
                            d - s,
                            n + 1 - p
                        ),
                    ));
                }
            }
        }
        Ok(())
    }

    /// `P^n(X^∞)` as a pure table of weight `n`.
    pub fn xinf_numbers(&self, n: i64) -> HodgeNumbers {
        self.pn_xinf
            .iter()
            .filter(|(_, m)| **m != 0)
            .map(|(p, m)| ((*p, n - p), *m))
            .collect()
    }

    /// `P^{n+1}(X'_0)_{e(s/d)}` as pure tables of weight `n + 1`.
    pub fn cover_numbers(&self, n: i64, d: i64) -> BTreeMap<i64, HodgeNumbers> {
        (1..d)
            .map(|s| {
                let t = self
                    .pn1_cover
                    .get(&s)
                    .map(|m| {
                        m.iter()
                            .filter(|(_, v)| **v != 0)
                            .map(|(p, v)| ((*p, n + 1 - p), *v))
                            .collect()
                    })
                    .unwrap_or_default();
                (s, t)
            })
            .collect()
    }

    /// Inverse of [`cover_numbers`](Self::cover_numbers) / [`xinf_numbers`](Self::xinf_numbers):
    /// keep only the first Hodge index of pure tables.
    pub fn from_numbers(xinf: &HodgeNumbers, cover: &BTreeMap<i64, HodgeNumbers>) -> Self {
        let pn_xinf = xinf
            .iter()
            .filter(|(_, m)| **m != 0)
            .map(|((p, _), m)| (*p, *m))
            .collect();
        let pn1_cover = cover
            .iter()
            .filter(|(_, t)| t.values().any(|m| *m != 0))
            .map(|(s, t)| {
                (
                    *s,
                    t.iter()
                        .filter(|(_, m)| **m != 0)
                        .map(|((p, _), m)| (*p, *m))
                        .collect(),
                )
            })
            .collect();
        GlobalPositionData { pn_xinf, pn1_cover }
    }
}

/// `P^{n-1}(X^∞)` and `P^n(X'_0)_ξ` for `ξ = e(s/d)`, `0 < s < d`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoverHodge {
    pub xinf: HodgeNumbers,
    pub cover: BTreeMap<i64, HodgeNumbers>,
}

impl CoverHodge {
    pub fn total(&self) -> i64 {
        self.xinf.values().sum::<i64>() + self.cover.values().flat_map(|t| t.values()).sum::<i64>()
    }
}

/// Local contributions of one batch of germs: eigenvalue-1 primitive numbers
/// and `dim Gr_F^p` of the vanishing cohomology.
#[derive(Default)]
struct LocalTerms {
    p1: BTreeMap<(i64, i64), i64>,
    gr: BTreeMap<i64, i64>,
}

impl LocalTerms {
    fn add(&mut self, pairs: &SppSet, variables: i64) -> Result<()> {
        let prim = primitive_table(pairs, variables)?;
        for (k, m) in prim.iter().filter(|(k, _)| k.lambda.is_one()) {
            *self.p1.entry((k.p, k.q)).or_insert(0) += m;
        }
        let full = decode_spp(pairs, variables - 1)?;
        for (k, m) in full.iter() {
            *self.gr.entry(k.p).or_insert(0) += m;
        }
        Ok(())
    }

    fn p1(&self, p: i64, q: i64) -> i64 {
        self.p1.get(&(p, q)).copied().unwrap_or(0)
    }

    fn gr(&self, p: i64) -> i64 {
        self.gr.get(&p).copied().unwrap_or(0)
    }

    /// `Σ_{q > i} p_1^{q, b}`
    fn p1_above(&self, i: i64, b: i64) -> i64 {
        self.p1
            .iter()
            .filter(|((p, q), _)| *p > i && *q == b)
            .map(|(_, m)| *m)
            .sum()
    }
}

fn check_nonnegative(table: &HodgeNumbers, clause: &'static str) -> Result<()> {
    match table.iter().find(|(_, m)| **m < 0) {
        Some(((p, q), m)) => Err(Error::InconsistentGlobalData {
            clause,
            at: format!("h^{{{p},{q}}}"),
            value: *m,
        }),
        None => Ok(()),
    }
}

fn ensure_local_dims(locals: &[LocalSpectrum], variables: i64) -> Result<()> {
    for (j, l) in locals.iter().enumerate() {
        if l.variables != variables {
            return Err(Error::validation(
                format!("singularities[{j}]"),
                format!("germ has {} variables, expected {variables}", l.variables),
            ));
        }
    }
    Ok(())
}

/// Hodge numbers of `P^{n-1}(X^∞)` (weights `≤ n - 1`).
pub fn hodge_x_infinity(
    locals: &[LocalSpectrum],
    global: &GlobalPositionData,
    n: i64,
    d: i64,
) -> Result<HodgeNumbers> {
    ensure_local_dims(locals, n)?;
    let mut terms = LocalTerms::default();
    for l in locals {
        terms.add(&l.pairs, l.variables)?;
    }
    let mut h = HodgeNumbers::new();
    let mut low = HodgeNumbers::new();
    for k in 3..=n {
        for i in 0..=n - k {
            low.insert((i, n - k - i), terms.p1(k + i - 1, n - 1 - i));
        }
    }
    check_nonnegative(&low, "weight <= n-3 part of P^{n-1}(X^inf)")?;
    h.extend(low);

    let mut w2 = HodgeNumbers::new();
    for i in 0..=n - 2 {
        w2.insert(
            (i, n - 2 - i),
            terms.p1(i + 1, n - 1 - i) - global.xinf(i + 1),
        );
    }
    check_nonnegative(&w2, "weight n-2 part of P^{n-1}(X^inf)")?;
    h.extend(w2);

    let mut w1 = HodgeNumbers::new();
    for i in 0..=n - 1 {
        let v = j(n, d, i, 0) - terms.gr(i) - terms.p1_above(i, n - 1 - i)
            + global.xinf(i)
            + global.xinf(i + 1);
        w1.insert((i, n - 1 - i), v);
    }
    check_nonnegative(&w1, "weight n-1 part of P^{n-1}(X^inf)")?;
    h.extend(w1);

    h.retain(|_, m| *m != 0);
    Ok(h)
}

/// Hodge numbers of `P^n(X'_0)_{e(s/d)}` for every sector `0 < s < d`.
pub fn hodge_cover(
    locals: &[LocalSpectrum],
    global: &GlobalPositionData,
    n: i64,
    d: i64,
) -> Result<BTreeMap<i64, HodgeNumbers>> {
    ensure_local_dims(locals, n)?;
    let graded = locals
        .iter()
        .map(|l| galois_suspension(l, d))
        .collect::<Result<Vec<_>>>()?;
    let mut out = BTreeMap::new();
    for s in 1..d {
        let mut terms = LocalTerms::default();
        for g in &graded {
            terms.add(g.sector(s), g.variables)?;
        }
        let cov = |p: i64| global.cover(s, p);
        let mut h = HodgeNumbers::new();

        let mut low = HodgeNumbers::new();
        for k in 3..=n + 1 {
            for i in 0..=n + 1 - k {
                low.insert((i, n + 1 - k - i), terms.p1(k + i - 1, n - i));
            }
        }
        check_nonnegative(&low, "weight <= n-2 part of P^n(X'_0)_xi")?;
        h.extend(low);

        let mut w1 = HodgeNumbers::new();
        for i in 0..=n - 1 {
            w1.insert((i, n - 1 - i), terms.p1(i + 1, n - i) - cov(i + 1));
        }
        check_nonnegative(&w1, "weight n-1 part of P^n(X'_0)_xi")?;
        h.extend(w1);

        let mut w0 = HodgeNumbers::new();
        for i in 0..=n {
            let v =
                j(n, d, n - i, s) - terms.gr(i) - terms.p1_above(i, n - i) + cov(i) + cov(i + 1);
            w0.insert((i, n - i), v);
        }
        check_nonnegative(&w0, "weight n part of P^n(X'_0)_xi")?;
        h.extend(w0);

        h.retain(|_, m| *m != 0);
        out.insert(s, h);
    }
    Ok(out)
}

pub fn cover_hodge(
    locals: &[LocalSpectrum],
    global: &GlobalPositionData,
    n: i64,
    d: i64,
) -> Result<CoverHodge> {
    Ok(CoverHodge {
        xinf: hodge_x_infinity(locals, global, n, d)?,
        cover: hodge_cover(locals, global, n, d)?,
    })
}

/// Hodge numbers of `P^{k+2}(X''_0)_ξ` from those of `P^k(X^∞)` and
/// `P^{k+1}(X'_0)_{e(t/d)}`, for every sector `ξ = e(s/d)`.
pub fn lift_double_cover(
    xinf: &HodgeNumbers,
    cover: &BTreeMap<i64, HodgeNumbers>,
    d: i64,
) -> BTreeMap<i64, HodgeNumbers> {
    let mut out = BTreeMap::new();
    for s in 1..d {
        let mut h = HodgeNumbers::new();
        for ((p, q), m) in xinf {
            *h.entry((p + 1, q + 1)).or_insert(0) += m;
        }
        for t in (1..d).filter(|t| t + s != d) {
            let f = (s + t) / d;
            let u = (s + t) % d;
            if let Some(src) = cover.get(&u) {
                // src at (p + f, q + 1 - f) lands at (p + 1, q + 1)
                for ((a, b), m) in src {
                    *h.entry((a - f + 1, b + f)).or_insert(0) += m;
                }
            }
        }
        h.retain(|_, m| *m != 0);
        out.insert(s, h);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::{local_spectral_pairs, LocalModel};

    fn cusps(k: usize) -> Vec<LocalSpectrum> {
        vec![local_spectral_pairs(&LocalModel::cusp()).unwrap(); k]
    }

    fn zariski(case_i: bool) -> GlobalPositionData {
        let mut g = GlobalPositionData::zero();
        if case_i {
            g.pn1_cover.insert(1, [(2, 1)].into());
            g.pn1_cover.insert(5, [(1, 1)].into());
        }
        g
    }

    #[test]
    fn zariski_x_infinity() {
        let h = hodge_x_infinity(&cusps(6), &zariski(true), 2, 6).unwrap();
        assert_eq!(h, [((0, 1), 4), ((1, 0), 4)].into());
    }

    #[test]
    fn smooth_x_infinity() {
        for n in 2..4 {
            for d in 2..6 {
                let h = hodge_x_infinity(&[], &GlobalPositionData::zero(), n, d).unwrap();
                for ((i, jj), m) in &h {
                    assert_eq!(i + jj, n - 1);
                    assert_eq!(*m, j(n, d, *i, 0));
                }
            }
        }
    }

    #[test]
    fn inflated_global_input_is_inconsistent() {
        let mut g = GlobalPositionData::zero();
        g.pn_xinf.insert(1, 5);
        let err = hodge_x_infinity(&cusps(6), &g, 2, 6).unwrap_err();
        assert!(
            matches!(err, Error::InconsistentGlobalData { clause, .. } if clause.contains("n-2"))
        );
    }

    #[test]
    fn zariski_cover_rows() {
        let c = hodge_cover(&cusps(6), &zariski(true), 2, 6).unwrap();
        assert_eq!(c[&1], [((1, 1), 4), ((2, 0), 1), ((1, 0), 5)].into());
        assert_eq!(c[&2], [((1, 1), 6), ((2, 0), 3)].into());
        let c = hodge_cover(&cusps(6), &zariski(false), 2, 6).unwrap();
        assert_eq!(c[&1], [((1, 1), 3), ((1, 0), 6)].into());
        assert_eq!(c[&2], [((1, 1), 6), ((2, 0), 3)].into());
        assert_eq!(c[&2].get(&(0, 2)), None);
    }

    #[test]
    fn validation_rules() {
        let mut g = GlobalPositionData::zero();
        g.pn1_cover.insert(1, [(2, 1)].into());
        // missing conjugate sector
        assert!(matches!(g.validate(2, 6), Err(Error::Validation { .. })));
        g.pn1_cover.insert(5, [(1, 1)].into());
        assert!(g.validate(2, 6).is_ok());
        g.pn1_cover.insert(6, [(1, 1)].into());
        assert!(g.validate(2, 6).is_err());

        let mut g = GlobalPositionData::zero();
        g.pn_xinf.insert(0, -1);
        assert!(g.validate(2, 6).is_err());
    }

    #[test]
    fn lift_of_zeros() {
        let out = lift_double_cover(&HodgeNumbers::new(), &BTreeMap::new(), 5);
        assert!(out.values().all(|t| t.is_empty()));
        assert_eq!(out.len(), 4);
    }

    #[test]
    fn lift_of_smooth_matches_fermat_pieces() {
        // smooth X^∞: P^n(X^∞) vanishes and P^{n+1}(X'_0)_ξ as well, so the
        // lift at k = n is zero; at k = n - 1 it must equal the cover Hodge
        // numbers of the suspended smooth form.
        for (n, d) in [(2, 3), (2, 4), (3, 3)] {
            let ch = cover_hodge(&[], &GlobalPositionData::zero(), n, d).unwrap();
            let lifted = lift_double_cover(&ch.xinf, &ch.cover, d);
            let direct = hodge_cover(&[], &GlobalPositionData::zero(), n + 1, d).unwrap();
            assert_eq!(lifted, direct);
        }
    }

    #[test]
    fn lift_at_lower_degree_matches_direct_cover() {
        for case_i in [true, false] {
            let g = zariski(case_i);
            let ch = cover_hodge(&cusps(6), &g, 2, 6).unwrap();
            let lifted = lift_double_cover(&ch.xinf, &ch.cover, 6);
            // the suspended polynomial's cover data
            let top = lift_double_cover(&g.xinf_numbers(2), &g.cover_numbers(2, 6), 6);
            let g2 = GlobalPositionData::from_numbers(&BTreeMap::new(), &top);
            let locals: Vec<LocalSpectrum> = (0..6)
                .map(|_| local_spectral_pairs(&LocalModel::cusp().suspend(6)).unwrap())
                .collect();
            let direct = hodge_cover(&locals, &g2, 3, 6).unwrap();
            assert_eq!(lifted, direct);
        }
    }

    #[test]
    fn curve_point_count_cross_check() {
        // n = 1: h^{0,0}(P^0(X^∞)) = m - 1 for the points of f_d = Π l_j^{a_j}
        for mults in [vec![2, 2], vec![3, 1], vec![1, 1, 1, 1], vec![2, 1, 1]] {
            let d: i64 = mults.iter().sum();
            let locals: Vec<LocalSpectrum> = mults
                .iter()
                .filter(|a| **a >= 2)
                .map(|a| local_spectral_pairs(&LocalModel::brieskorn_pham(&[*a])).unwrap())
                .collect();
            let h = hodge_x_infinity(&locals, &GlobalPositionData::zero(), 1, d).unwrap();
            assert_eq!(h.get(&(0, 0)).copied().unwrap_or(0), mults.len() as i64 - 1);
        }
    }
}
