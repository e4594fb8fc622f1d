//! Equivariant Hodge theory at infinity of (*)-polynomials.
//!
//! Given the top-degree form `f_d` of a polynomial `f: C^{n+1} → C` whose
//! noncritical fibers have nonsingular projective closure (described by the
//! singularities of `X^∞ = {f_d = 0}` and a few global Hodge numbers), this
//! crate computes exactly:
//!
//! - the primitive and full equivariant Hodge numbers of the mixed Hodge
//!   structure at infinity ([`infinity`], [`curve`] for `n = 1`),
//! - the Jordan structure of the monodromy at infinity,
//! - the spectral pairs and spectrum, with their symmetries, the
//!   Sebastiani-Thom identity and semicontinuity ([`spectra`]),
//! - the decomposition of the real Seifert form at infinity and the
//!   equivariant signatures ([`seifert`]).
//!
//! All arithmetic is exact.

pub mod curve;
pub mod error;
pub mod global;
pub mod hodge;
pub mod infinity;
pub mod io;
pub mod jconst;
pub mod local;
pub mod rational;
pub mod root;
pub mod seifert;
pub mod spectra;
pub mod spp;

pub use error::{Error, Result};
pub use hodge::{HodgeKey, HodgeTable, TableKind};
pub use infinity::{InfinityHodge, StarPolynomialSpec};
pub use local::{LocalModel, LocalSpectrum};
pub use rational::Rational;
pub use root::RootLabel;
pub use spp::{SpectralPair, SppSet};
