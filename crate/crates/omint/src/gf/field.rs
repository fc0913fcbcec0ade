//! Field contexts: prime fields and iterated extensions.

use std::fmt;
use std::rc::Rc;

use num_bigint::BigUint;

use super::factor::{factor, is_irreducible};
use super::{Elem, FPoly};
use crate::{Error, Result};

#[derive(Debug)]
pub(crate) enum Repr {
    Prime { p: u64 },
    Ext { base: FiniteField, modulus: FPoly },
}

/// A finite field, either `F_p` or an extension `F[y]/(psi)` of another
/// [`FiniteField`]. Cheap to clone (shared pointer). Immutable.
#[derive(Clone)]
pub struct FiniteField(pub(crate) Rc<Repr>);

impl fmt::Debug for FiniteField {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(w, "GF({})", self.cardinality())
    }
}

impl PartialEq for FiniteField {
    /// Identity of contexts, not isomorphism.
    fn eq(&self, other: &Self) -> bool {
        Rc::ptr_eq(&self.0, &other.0)
    }
}
impl Eq for FiniteField {}

fn is_small_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FiniteField {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<FiniteField> {
        if !is_small_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FiniteField(Rc::new(Repr::Prime { p })))
    }

    /// The field with `q` elements, `q = p^k` a prime power. For `k > 1` the
    /// field is built as `F_p[y]/(m)` with `m` the smallest monic irreducible
    /// of degree `k` in the coefficient-lexicographic order, so the
    /// construction is deterministic.
    pub fn with_cardinality(q: u64) -> Result<FiniteField> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        let mut p = 2u64;
        while p * p <= q {
            if q % p == 0 {
                let mut k = 0u32;
                let mut m = q;
                while m % p == 0 {
                    m /= p;
                    k += 1;
                }
                if m != 1 {
                    return Err(Error::NotPrimePower(q));
                }
                let base = FiniteField::prime(p)?;
                if k == 1 {
                    return Ok(base);
                }
                let modulus = find_irreducible(&base, k as usize);
                return base.extension(modulus);
            }
            p += 1;
        }
        // q itself is prime
        FiniteField::prime(q)
    }

    /// Extension by a monic irreducible `modulus` over `self`. Irreducibility
    /// is certified by factorization; a reducible modulus is rejected with a
    /// witness factor.
    pub fn extension(&self, modulus: FPoly) -> Result<FiniteField> {
        if modulus.degree() < 1 {
            return Err(Error::OutOfRange("modulus must have degree >= 1".into()));
        }
        if !modulus.is_monic(self) {
            return Err(Error::NotMonic);
        }
        let factors = factor(&modulus, self)?;
        if factors.len() != 1 || factors[0].1 != 1 {
            let witness = factors
                .iter()
                .map(|(g, m)| format!("({})^{}", g.display(self, "y"), m))
                .collect::<Vec<_>>()
                .join(" * ");
            return Err(Error::ReducibleModulus { witness });
        }
        Ok(self.extension_unchecked(modulus))
    }

    /// Extension without the irreducibility certificate (for internal use
    /// where the modulus is known irreducible by construction).
    pub(crate) fn extension_unchecked(&self, modulus: FPoly) -> FiniteField {
        FiniteField(Rc::new(Repr::Ext {
            base: self.clone(),
            modulus,
        }))
    }

    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            Repr::Prime { p } => *p,
            Repr::Ext { base, .. } => base.characteristic(),
        }
    }

    /// Degree of this field over its immediate base (1 for prime fields).
    pub fn ext_degree(&self) -> usize {
        match &*self.0 {
            Repr::Prime { .. } => 1,
            Repr::Ext { modulus, .. } => modulus.degree() as usize,
        }
    }

    /// Degree over the prime field.
    pub fn abs_degree(&self) -> usize {
        match &*self.0 {
            Repr::Prime { .. } => 1,
            Repr::Ext { base, modulus } => base.abs_degree() * modulus.degree() as usize,
        }
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::from(self.characteristic()).pow(self.abs_degree() as u32)
    }

    /// Cardinality as u64 if it fits.
    pub fn cardinality_u64(&self) -> Option<u64> {
        let c = self.cardinality();
        u64::try_from(&c).ok()
    }

    pub fn base(&self) -> Option<&FiniteField> {
        match &*self.0 {
            Repr::Prime { .. } => None,
            Repr::Ext { base, .. } => Some(base),
        }
    }

    pub fn modulus(&self) -> Option<&FPoly> {
        match &*self.0 {
            Repr::Prime { .. } => None,
            Repr::Ext { modulus, .. } => Some(modulus),
        }
    }

    pub fn zero(&self) -> Elem {
        match &*self.0 {
            Repr::Prime { .. } => Elem::P(0),
            Repr::Ext { .. } => Elem::E(Vec::new()),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_u64(1)
    }

    pub fn from_u64(&self, n: u64) -> Elem {
        match &*self.0 {
            Repr::Prime { p } => Elem::P(n % p),
            Repr::Ext { base, .. } => {
                let c = base.from_u64(n);
                if c.is_zero() {
                    self.zero()
                } else {
                    Elem::E(vec![c])
                }
            }
        }
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        let p = self.characteristic();
        let r = n.rem_euclid(p as i64) as u64;
        self.from_u64(r)
    }

    /// The class of `y` in `F[y]/(psi)`: the generator of this extension.
    pub fn gen(&self) -> Elem {
        match &*self.0 {
            Repr::Prime { .. } => panic!("prime field has no extension generator"),
            Repr::Ext { base, modulus } => {
                if modulus.degree() == 1 {
                    // y = -c mod (y + c)
                    self.embed(&base.neg(modulus.coeff(0)))
                } else {
                    Elem::E(vec![base.zero(), base.one()])
                }
            }
        }
    }

    /// Embeds an element of the immediate base field.
    pub fn embed(&self, x: &Elem) -> Elem {
        match &*self.0 {
            Repr::Prime { .. } => panic!("prime field has no base"),
            Repr::Ext { .. } => {
                if x.is_zero() {
                    self.zero()
                } else {
                    Elem::E(vec![x.clone()])
                }
            }
        }
    }

    /// All field elements, in a fixed order. Only for small fields (tests).
    pub fn enumerate(&self) -> Vec<Elem> {
        match &*self.0 {
            Repr::Prime { p } => (0..*p).map(Elem::P).collect(),
            Repr::Ext { base, modulus } => {
                let d = modulus.degree() as usize;
                let lower = base.enumerate();
                let mut out = vec![self.zero()];
                // all coefficient vectors of length <= d, highest coeff nonzero
                let mut stack: Vec<Vec<Elem>> = vec![Vec::new()];
                for _ in 0..d {
                    let mut next = Vec::new();
                    for v in &stack {
                        for c in &lower {
                            let mut w = v.clone();
                            w.push(c.clone());
                            if !c.is_zero() {
                                out.push(Elem::E(w.clone()));
                            }
                            next.push(w);
                        }
                    }
                    stack = next;
                }
                out
            }
        }
    }
}

/// Smallest (degree-lex on coefficients) monic irreducible of degree `d`.
pub(crate) fn find_irreducible(field: &FiniteField, d: usize) -> FPoly {
    let card = field
        .cardinality_u64()
        .expect("irreducible search only for small fields");
    let elems = field.enumerate();
    assert_eq!(elems.len() as u64, card);
    // enumerate tails in lexicographic order, low coefficient fastest
    let mut counters = vec![0usize; d];
    loop {
        let mut coeffs: Vec<Elem> = counters.iter().map(|&i| elems[i].clone()).collect();
        coeffs.push(field.one());
        let cand = FPoly::new(coeffs, field);
        if is_irreducible(&cand, field) {
            return cand;
        }
        let mut k = 0;
        loop {
            counters[k] += 1;
            if counters[k] < elems.len() {
                break;
            }
            counters[k] = 0;
            k += 1;
            assert!(k < d, "no irreducible of degree {d} found");
        }
    }
}
