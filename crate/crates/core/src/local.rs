//! Isolated hypersurface germs, their spectral pairs, and the suspension
//! operators `g ↦ g + x^d` with and without the Galois grading.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hodge::{decode_spp, primitive_from_full, HodgeTable, TableKind};
use crate::rational::Rational;
use crate::root::RootLabel;
use crate::spp::{SpectralPair, SppSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case")]
pub enum LocalModel {
    /// `x_1^{a_1} + … + x_k^{a_k}`
    BrieskornPham { exponents: Vec<i64> },
    /// Quasihomogeneous isolated germ with the given weights.
    Quasihomogeneous { weights: Vec<Rational> },
    /// Spectral pairs supplied directly.
    SpectralPairs { pairs: SppSet, variables: i64 },
    /// Sebastiani-Thom sum of two germs in separate variables.
    Join {
        left: Box<LocalModel>,
        right: Box<LocalModel>,
    },
}

impl LocalModel {
    pub fn brieskorn_pham(exponents: &[i64]) -> Self {
        LocalModel::BrieskornPham {
            exponents: exponents.to_vec(),
        }
    }

    /// The cusp `x^2 + y^3`.
    pub fn cusp() -> Self {
        LocalModel::brieskorn_pham(&[2, 3])
    }

    pub fn variables(&self) -> i64 {
        match self {
            LocalModel::BrieskornPham { exponents } => exponents.len() as i64,
            LocalModel::Quasihomogeneous { weights } => weights.len() as i64,
            LocalModel::SpectralPairs { variables, .. } => *variables,
            LocalModel::Join { left, right } => left.variables() + right.variables(),
        }
    }

    /// `g + x^d` in one more variable.
    pub fn suspend(&self, d: i64) -> LocalModel {
        LocalModel::Join {
            left: Box::new(self.clone()),
            right: Box::new(LocalModel::brieskorn_pham(&[d])),
        }
    }
}

/// Spectral pairs of an isolated germ in `variables` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSpectrum {
    pub pairs: SppSet,
    pub variables: i64,
    pub milnor_number: i64,
}

impl LocalSpectrum {
    pub fn new(pairs: SppSet, variables: i64) -> Result<Self> {
        if variables < 1 {
            return Err(Error::NonIsolated(format!("{variables} variables")));
        }
        pairs
            .ensure_final()
            .map_err(|e| Error::NonIsolated(e.to_string()))?;
        for (p, _) in pairs.iter() {
            if p.alpha <= -1 || p.alpha >= variables - 1 {
                return Err(Error::NonIsolated(format!(
                    "spectral number {} outside (-1, {})",
                    p.alpha,
                    variables - 1
                )));
            }
            if p.omega > 2 * (variables - 1) {
                return Err(Error::NonIsolated(format!(
                    "weight {} exceeds {}",
                    p.omega,
                    2 * (variables - 1)
                )));
            }
        }
        // the pairs must come from a monodromy weight filtration
        let full = decode_spp(&pairs, variables - 1)?;
        primitive_from_full(&full)?;
        let milnor_number = pairs.cardinality();
        Ok(LocalSpectrum {
            pairs,
            variables,
            milnor_number,
        })
    }

    /// Join of two spectra in disjoint variables.
    pub fn join(&self, other: &LocalSpectrum) -> LocalSpectrum {
        LocalSpectrum {
            pairs: self.pairs.join(&other.pairs),
            variables: self.variables + other.variables,
            milnor_number: self.milnor_number * other.milnor_number,
        }
    }
}

pub fn local_spectral_pairs(model: &LocalModel) -> Result<LocalSpectrum> {
    match model {
        LocalModel::BrieskornPham { exponents } => brieskorn_pham(exponents),
        LocalModel::Quasihomogeneous { weights } => quasihomogeneous(weights),
        LocalModel::SpectralPairs { pairs, variables } => {
            LocalSpectrum::new(pairs.clone(), *variables)
        }
        LocalModel::Join { left, right } => {
            let l = local_spectral_pairs(left)?;
            let r = local_spectral_pairs(right)?;
            Ok(l.join(&r))
        }
    }
}

fn brieskorn_pham(exponents: &[i64]) -> Result<LocalSpectrum> {
    if exponents.is_empty() {
        return Err(Error::NonIsolated("no variables".into()));
    }
    if let Some(a) = exponents.iter().find(|a| **a < 2) {
        return Err(Error::NonIsolated(format!("exponent {a} < 2")));
    }
    let k = exponents.len() as i64;
    // running sums Σ (l_i + 1)/a_i over the product of index ranges
    let mut sums = vec![Rational::zero()];
    for &a in exponents {
        sums = sums
            .iter()
            .flat_map(|s| (1..a).map(move |l| s + &Rational::new(l, a)))
            .collect();
    }
    let pairs = sums
        .into_iter()
        .map(|s| (SpectralPair::new(s.add_int(-1), k - 1), 1))
        .collect();
    LocalSpectrum::new(pairs, k)
}

/// Spectrum from the Poincaré series `Π (t^{w_i} - t) / (1 - t^{w_i})`.
fn quasihomogeneous(weights: &[Rational]) -> Result<LocalSpectrum> {
    if weights.is_empty() {
        return Err(Error::NonIsolated("no variables".into()));
    }
    for w in weights {
        if *w <= 0 || *w >= 1 {
            return Err(Error::NonIsolated(format!("weight {w} outside (0, 1)")));
        }
    }
    let mu = weights.iter().fold(Rational::one(), |acc, w| {
        &acc * &(&Rational::one() / w).add_int(-1)
    });
    let mu = mu.to_i64().filter(|m| *m > 0).ok_or_else(|| {
        Error::NonIsolated(format!("Milnor number {mu} is not a positive integer"))
    })?;

    // work in x = t^{1/D}
    let denom = weights.iter().fold(1i64, |acc, w| {
        let d = i64::try_from(w.denom()).expect("weight denominator too large");
        acc.lcm(&d)
    });
    let scaled: Vec<usize> = weights
        .iter()
        .map(|w| w.mul_int(denom).to_i64().unwrap() as usize)
        .collect();
    let d = denom as usize;

    let mut numer = vec![1i64];
    let mut divisor = vec![1i64];
    for &w in &scaled {
        // x^w - x^D
        let mut f = vec![0i64; d + 1];
        f[w] += 1;
        f[d] -= 1;
        numer = poly_mul(&numer, &f);
        // 1 - x^w
        let mut g = vec![0i64; w + 1];
        g[0] = 1;
        g[w] -= 1;
        divisor = poly_mul(&divisor, &g);
    }
    let quotient = poly_div_exact(&numer, &divisor).ok_or_else(|| {
        Error::NonIsolated("weights do not define an isolated quasihomogeneous germ".into())
    })?;

    let k = weights.len() as i64;
    let mut pairs = SppSet::new();
    for (e, c) in quotient.iter().enumerate() {
        if *c < 0 {
            return Err(Error::NonIsolated("negative Poincaré coefficient".into()));
        }
        if *c > 0 {
            let alpha = Rational::new(e as i64, denom).add_int(-1);
            pairs.add(SpectralPair::new(alpha, k - 1), *c);
        }
    }
    if pairs.cardinality() != mu {
        return Err(Error::NonIsolated(format!(
            "Poincaré series has {} terms, expected μ = {mu}",
            pairs.cardinality()
        )));
    }
    LocalSpectrum::new(pairs, k)
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a polynomial with constant term 1; `None` if a remainder is left.
fn poly_div_exact(numer: &[i64], divisor: &[i64]) -> Option<Vec<i64>> {
    debug_assert_eq!(divisor[0], 1);
    let mut rem = numer.to_vec();
    let dl = divisor.len();
    if rem.len() < dl {
        return rem.iter().all(|c| *c == 0).then(Vec::new);
    }
    let ql = rem.len() - dl + 1;
    let mut quot = vec![0i64; ql];
    // divide from the low end: x-adic division is exact iff the remainder vanishes
    for i in 0..ql {
        let c = rem[i];
        quot[i] = c;
        if c != 0 {
            for (j, g) in divisor.iter().enumerate() {
                rem[i + j] -= c * g;
            }
        }
    }
    rem.iter().all(|c| *c == 0).then_some(quot)
}

/// Spectral pairs of `g + x^d` split by Galois character `e(s/d)` of `x ↦ e(1/d)x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLocalData {
    pub degree: i64,
    /// Variables of the suspended germ.
    pub variables: i64,
    pub sectors: BTreeMap<i64, SppSet>,
}

impl GradedLocalData {
    pub fn sector(&self, s: i64) -> &SppSet {
        let s = s.rem_euclid(self.degree);
        &self.sectors[&s]
    }

    pub fn total(&self) -> i64 {
        self.sectors.values().map(SppSet::cardinality).sum()
    }

    /// Primitive table of one sector, as a germ in `variables` variables.
    pub fn sector_primitives(&self, s: i64) -> Result<HodgeTable> {
        primitive_table(self.sector(s), self.variables)
    }
}

pub fn galois_suspension(spec: &LocalSpectrum, d: i64) -> Result<GradedLocalData> {
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    let sectors = (1..d)
        .map(|s| {
            let factor = SppSet::singleton(Rational::new(s, d).add_int(-1), 0);
            (s, spec.pairs.join(&factor))
        })
        .collect();
    Ok(GradedLocalData {
        degree: d,
        variables: spec.variables + 1,
        sectors,
    })
}

/// Primitive Hodge numbers of a germ in `variables` variables from its pairs.
pub fn primitive_table(pairs: &SppSet, variables: i64) -> Result<HodgeTable> {
    let full = decode_spp(pairs, variables - 1)?;
    primitive_from_full(&full)
}

pub fn local_primitive_table(spec: &LocalSpectrum) -> Result<HodgeTable> {
    primitive_table(&spec.pairs, spec.variables)
}

/// Eigenvalue `≠ 1` part of the monodromy of the twisted suspension
/// `g(y) + t·y_0 - y_0^d`, as a full table at level `n` (the germ `g` lives in
/// `n` variables). One unit per eigenvector.
pub fn twisted_suspension(spec: &LocalSpectrum, d: i64) -> Result<HodgeTable> {
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    let n = spec.variables;
    let source = decode_spp(&spec.pairs, n - 1)?;
    let mut out = HodgeTable::new(TableKind::Full, n);
    for (key, m) in source.iter() {
        let (p, q) = (key.p, key.q);
        let gamma = key.lambda.label();
        if key.lambda.is_one() {
            for k in 1..=d - 2 {
                out.add(RootLabel::frac(k, d - 1), p, q, m);
            }
        } else if gamma.mul_int(d).is_integer() {
            let i = gamma.mul_int(d).to_i64().unwrap();
            for k in (0..=d - 2).filter(|k| *k != d - 1 - i) {
                let x = Rational::new(k + i, d - 1);
                let f = x.floor_i64();
                out.add(RootLabel::of(&x), p + f, q + 1 - f, m);
            }
        } else {
            for k in 0..=d - 2 {
                let x = gamma + &(gamma.add_int(k)).div_int(d - 1);
                let f = x.floor_i64();
                out.add(RootLabel::of(&x), p + f, q + 1 - f, m);
            }
        }
    }
    Ok(out)
}

/// Primitive numbers of `g'' = g + x^d + y^d`, per Galois sector of `y`, from
/// those of `g` and of the graded `g' = g + x^d`.
///
/// `g_primitives` is the primitive table of `g` (level `k - 1`), `g_sus` the
/// graded data of `g'`. The result has level `k + 1`.
pub fn double_suspension_primitives(
    g_primitives: &HodgeTable,
    g_sus: &GradedLocalData,
    d: i64,
) -> Result<BTreeMap<i64, HodgeTable>> {
    let level = g_sus.variables;
    let sector_prims: BTreeMap<i64, HodgeTable> = (1..d)
        .map(|u| Ok((u, g_sus.sector_primitives(u)?)))
        .collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for s in 1..d {
        let mut table = HodgeTable::new(TableKind::Primitive, level);
        for t in (1..d).filter(|t| t + s != d) {
            let f = (t + s) / d;
            let u = (t + s) % d;
            for (key, m) in sector_prims[&u].iter() {
                // key = (p + f, q + 1 - f); output at (p + 1, q + 1)
                table.add(key.lambda.clone(), key.p - f + 1, key.q + f, m);
            }
        }
        for (key, m) in g_primitives.iter() {
            table.add(key.lambda.clone(), key.p + 1, key.q + 1, m);
        }
        out.insert(s, table);
    }
    Ok(out)
}
