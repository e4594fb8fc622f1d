//! Dimensions of the graded pieces of the Jacobian ring of a smooth degree-`d`
//! hypersurface in `P^n`, which do not depend on the hypersurface.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct JConstantKey {
    pub n: i64,
    pub d: i64,
    pub k: i64,
    pub s: i64,
}

impl JConstantKey {
    pub fn new(n: i64, d: i64, k: i64, s: i64) -> Self {
        assert!(
            n >= 1 && d >= 2 && k >= 0 && (0..d).contains(&s),
            "invalid j-constant key {n} {d} {k} {s}"
        );
        JConstantKey { n, d, k, s }
    }

    pub fn try_new(n: i64, d: i64, k: i64, s: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::validation("n", "need n >= 1"));
        }
        if d < 2 {
            return Err(Error::DegreeTooSmall(d));
        }
        if k < 0 {
            return Err(Error::validation("k", "need k >= 0"));
        }
        if !(0..d).contains(&s) {
            return Err(Error::validation("s", format!("need 0 <= s < {d}")));
        }
        Ok(JConstantKey { n, d, k, s })
    }

    /// Degree `(k+1)d - (n+1) - s` of the graded piece.
    pub fn degree(&self) -> i64 {
        (self.k + 1) * self.d - (self.n + 1) - self.s
    }
}

type Cache = HashMap<(i64, i64), Arc<Vec<u64>>>;

/// Coefficients of `((1 - t^{d-1}) / (1 - t))^{n+1}`.
fn hilbert_coefficients(n: i64, d: i64) -> Arc<Vec<u64>> {
    static CACHE: OnceLock<RwLock<Cache>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.read().unwrap().get(&(n, d)) {
        return c.clone();
    }
    let block = (d - 1) as usize;
    let mut coeffs = vec![1u64];
    for _ in 0..=n {
        let mut next = vec![0u64; coeffs.len() + block - 1];
        for (i, c) in coeffs.iter().enumerate() {
            for slot in &mut next[i..i + block] {
                *slot += c;
            }
        }
        coeffs = next;
    }
    let coeffs = Arc::new(coeffs);
    cache
        .write()
        .unwrap()
        .entry((n, d))
        .or_insert_with(|| coeffs.clone())
        .clone()
}

/// Dimension of the Jacobian ring in degree `ell` (0 outside `[0, (n+1)(d-2)]`).
pub fn jacobian_dimension(n: i64, d: i64, ell: i64) -> u64 {
    if ell < 0 {
        return 0;
    }
    let c = hilbert_coefficients(n, d);
    c.get(ell as usize).copied().unwrap_or(0)
}

pub fn j_constant(key: JConstantKey) -> u64 {
    jacobian_dimension(key.n, key.d, key.degree())
}

/// Shorthand for `j^{n,d}_{k,s}` as a signed integer.
pub(crate) fn j(n: i64, d: i64, k: i64, s: i64) -> i64 {
    j_constant(JConstantKey::new(n, d, k, s)) as i64
}

/// Brute-force count of the monomials `z^v` with `0 ≤ v_i ≤ d - 2`, `Σ v_i = ell`:
/// the monomial basis of the Fermat Jacobian ring `C[z]/(z_i^{d-1})`.
pub fn fermat_oracle(n: i64, d: i64, ell: i64) -> u64 {
    fn count(vars: i64, max: i64, remaining: i64) -> u64 {
        if vars == 0 {
            return u64::from(remaining == 0);
        }
        (0..=max.min(remaining))
            .map(|v| count(vars - 1, max, remaining - v))
            .sum()
    }
    if ell < 0 {
        return 0;
    }
    count(n + 1, d - 2, ell)
}
