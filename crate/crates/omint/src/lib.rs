//! Computation of p-integral bases of separable extensions of F_q(t).
//!
//! The base ring is `A = F_q[t]`. For a monic separable `f` in `A[x]` and a
//! monic irreducible prime `p` of `A`, the library decomposes `p` in the
//! integral closure of `A` in `K[x]/(f)` (OM representations of the primes),
//! improves the attached approximations on demand, and assembles a p-integral
//! basis from divisor polynomials and simple multipliers. A verification
//! module re-checks the construction with independent machinery.
//!
//! Modules follow the pipeline:
//!
//! * [`gf`]: finite fields, residue-field towers, polynomial factorization
//! * [`polyring`]: arithmetic in `A`, `A[x]`, valuations, prime data
//! * [`newton`]: Newton polygons of weighted points
//! * [`omtypes`]: OM types, residual polynomial operators, representatives
//! * [`montes`]: decomposition of a prime into OM representations
//! * [`sfl`]: single-factor lifting of Okutsu approximations
//! * [`okutsu`]: divisor polynomials and local sets
//! * [`pbasis`]: multipliers, basis assembly, triangularization, CRT merge
//! * [`verify`]: independent correctness checks

pub mod gf;
pub mod newton;
pub mod polyring;
pub mod rat;

pub mod omtypes;

pub mod montes;
pub mod okutsu;
pub mod sfl;

pub mod pbasis;
pub mod verify;

pub mod parse;

use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not separable (gcd(f, f') is nonconstant)")]
    NotSeparable,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("modulus is reducible: {witness}")]
    ReducibleModulus { witness: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("polynomial is not irreducible over F_q: {witness}")]
    NotIrreducible { witness: String },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("degree cap exceeded: needed {needed}, cap {cap}; supply primes explicitly")]
    DegreeCap { needed: usize, cap: usize },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
