//! Splitting fields of integer polynomials and the mod-p splitting criterion.
//!
//! Given a nonconstant `φ ∈ ℤ[X]`, the toolkit computes a primitive element `β`
//! of the splitting field of `φ` together with its minimal polynomial `P`, and
//! checks over ranges of primes that `φ` splits into linear factors mod `p`
//! exactly when `P` has a root mod `p` (and that `P` then splits too).
//!
//! Modules:
//! - [`zpoly`]: exact integer polynomials, gcd, resultants, root scaling.
//! - [`zfactor`]: factorization over ℚ (Zassenhaus with Hensel lifting).
//! - [`fpoly`]: polynomials over prime fields, root counting and splitting tests.
//! - [`splitfield`]: certified root isolation and the primitive element loop.
//! - [`criterion`]: bad-prime bound, prime scans, Schur prime search.

pub mod criterion;
pub mod dyadic;
mod error;
pub mod fpoly;
pub mod primes;
pub mod splitfield;
pub mod zfactor;
pub mod zpoly;

pub use error::{Error, Result};
pub use fpoly::ModPoly;
pub use splitfield::{PrimitiveElement, RootApprox};
pub use zfactor::Factorization;
pub use zpoly::{IntPoly, RatPoly, RatScalar};
