//! Residue-field towers `F_0 < F_1 < ...` built by successive irreducible
//! quotients, with generators kept explicit.

use num_bigint::BigUint;

use super::factor::factor;
use super::{Elem, FPoly, FiniteField};
use crate::{Error, Result};

/// A chain of finite fields where level `i+1` is `F_i[y]/(psi_i)`. Immutable
/// after construction: extension returns a new tower sharing lower levels.
#[derive(Clone, Debug)]
pub struct FieldTower {
    levels: Vec<FiniteField>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TowerOp {
    Add,
    Mul,
    Inv,
    Pow(u64),
}

/// An element tagged with its tower level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerElem {
    pub level: usize,
    pub value: Elem,
}

impl FieldTower {
    /// A tower whose ground level is the given field (our `F_0`).
    pub fn new(ground: FiniteField) -> FieldTower {
        FieldTower {
            levels: vec![ground],
        }
    }

    pub fn height(&self) -> usize {
        self.levels.len()
    }

    pub fn level(&self, i: usize) -> &FiniteField {
        &self.levels[i]
    }

    pub fn top(&self) -> &FiniteField {
        self.levels.last().unwrap()
    }

    /// Extends the tower by a monic polynomial over the top level, certifying
    /// irreducibility. Returns the extended tower.
    pub fn extend(&self, psi: FPoly) -> Result<FieldTower> {
        let next = self.top().extension(psi)?;
        let mut levels = self.levels.clone();
        levels.push(next);
        Ok(FieldTower { levels })
    }

    /// Extension that skips the (already known) irreducibility certificate.
    pub(crate) fn extend_unchecked(&self, psi: FPoly) -> FieldTower {
        let next = self.top().extension_unchecked(psi);
        let mut levels = self.levels.clone();
        levels.push(next);
        FieldTower { levels }
    }

    /// Generator `z_i` of level `i+1` over level `i`.
    pub fn generator(&self, i: usize) -> TowerElem {
        assert!(i + 1 < self.levels.len(), "no generator above the top");
        TowerElem {
            level: i + 1,
            value: self.levels[i + 1].gen(),
        }
    }

    /// Factors a polynomial over the given level.
    pub fn factor_over_level(&self, level: usize, g: &FPoly) -> Result<Vec<(FPoly, usize)>> {
        factor(g, &self.levels[level])
    }

    /// Cardinality of a level.
    pub fn cardinality(&self, level: usize) -> BigUint {
        self.levels[level].cardinality()
    }

    /// Degree of level `i` over level 0.
    pub fn degree_over_ground(&self, i: usize) -> usize {
        self.levels[..=i]
            .iter()
            .skip(1)
            .map(FiniteField::ext_degree)
            .product()
    }

    /// Embeds an element into a higher level.
    pub fn lift_to(&self, e: &TowerElem, level: usize) -> TowerElem {
        assert!(level >= e.level && level < self.levels.len());
        let mut v = e.value.clone();
        for l in e.level..level {
            v = self.levels[l + 1].embed(&v);
        }
        TowerElem { level, value: v }
    }

    pub fn arith(&self, a: &TowerElem, b: &TowerElem, op: TowerOp) -> Result<TowerElem> {
        if a.level != b.level {
            return Err(Error::OutOfRange(
                "tower elements at different levels".into(),
            ));
        }
        let f = &self.levels[a.level];
        let value = match op {
            TowerOp::Add => f.add(&a.value, &b.value),
            TowerOp::Mul => f.mul(&a.value, &b.value),
            TowerOp::Inv => f.inv(&a.value)?,
            TowerOp::Pow(n) => f.pow(&a.value, n),
        };
        Ok(TowerElem {
            level: a.level,
            value,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_one_extension_keeps_cardinality() {
        // F_7, psi = y + 1: level 1 is isomorphic to F_7 with z_0 = -1
        let f7 = FiniteField::prime(7).unwrap();
        let tower = FieldTower::new(f7.clone());
        let psi = FPoly::from_i64_coeffs(&f7, &[1, 1]);
        let t2 = tower.extend(psi).unwrap();
        assert_eq!(t2.cardinality(1), t2.cardinality(0));
        let z0 = t2.generator(0);
        assert_eq!(z0.value, t2.level(1).from_i64(-1));
    }

    #[test]
    fn quadratic_extension_of_f7() {
        let f7 = FiniteField::prime(7).unwrap();
        let tower = FieldTower::new(f7.clone());
        let psi = FPoly::from_i64_coeffs(&f7, &[1, 0, 1]);
        let t2 = tower.extend(psi).unwrap();
        assert_eq!(t2.cardinality(1), BigUint::from(49u32));
        // defining relation z0^2 = -1
        let z0 = t2.generator(0);
        let sq = t2.arith(&z0, &z0, TowerOp::Mul).unwrap();
        assert_eq!(sq.value, t2.level(1).from_i64(-1));
        // reducible modulus rejected with witness
        let f49 = t2.level(1);
        let bad = FPoly::from_i64_coeffs(f49, &[-1, 0, 1]);
        match t2.extend(bad) {
            Err(Error::ReducibleModulus { witness }) => {
                assert!(witness.contains('('), "witness: {witness}")
            }
            other => panic!("expected reducible rejection, got {other:?}"),
        }
    }

    #[test]
    fn two_step_dimension() {
        // F_3 extended by degree 2 then degree 3: dim over F_3 is 6
        let f3 = FiniteField::prime(3).unwrap();
        let tower = FieldTower::new(f3.clone());
        let psi0 = super::super::field::find_irreducible(&f3, 2);
        let t1 = tower.extend(psi0).unwrap();
        let psi1 = super::super::field::find_irreducible(t1.level(1), 3);
        let t2 = t1.extend(psi1).unwrap();
        assert_eq!(t2.degree_over_ground(2), 6);
        assert_eq!(t2.cardinality(2), BigUint::from(3u32).pow(6));
    }

    #[test]
    fn fermat_on_levels() {
        use rand::SeedableRng;
        let f3 = FiniteField::prime(3).unwrap();
        let tower = FieldTower::new(f3.clone());
        let psi0 = super::super::field::find_irreducible(&f3, 2);
        let t1 = tower.extend(psi0).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let card = t1.level(1).cardinality_u64().unwrap();
        for _ in 0..20 {
            let mut v = t1.level(1).random(&mut rng);
            while v.is_zero() {
                v = t1.level(1).random(&mut rng);
            }
            let e = TowerElem { level: 1, value: v };
            let p = t1.arith(&e, &e, TowerOp::Pow(card - 1)).unwrap();
            assert_eq!(p.value, t1.level(1).one());
        }
    }
}
