//! Exact arithmetic in finite fields and residue-field towers.
//!
//! Fields are built recursively: a prime field `F_p`, or a quotient
//! `F[y]/(psi)` of a previously built field by a monic irreducible modulus.
//! Elements store only their coordinates; every operation takes the field
//! context explicitly. This keeps elements lean and makes the generators of
//! each tower level directly available, which the residual-polynomial
//! machinery needs.

mod elem;
mod factor;
mod field;
mod fpoly;
mod tower;

pub use elem::Elem;
pub use factor::{factor, is_irreducible};
pub use field::FiniteField;
pub use fpoly::FPoly;
pub use tower::{FieldTower, TowerElem, TowerOp};
