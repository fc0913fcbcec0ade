//! Dense univariate polynomials over a [`FiniteField`].
//!
//! The same type serves polynomials over residue fields (variable `y`) and
//! elements of the base ring `A = F_q[t]` (variable `t`); the variable is a
//! display concern only.

use std::cmp::Ordering;

use num_bigint::BigUint;

use super::{Elem, FiniteField};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FPoly {
    c: Vec<Elem>,
}

impl FPoly {
    pub fn new(mut c: Vec<Elem>, _field: &FiniteField) -> FPoly {
        while c.last().map_or(false, Elem::is_zero) {
            c.pop();
        }
        FPoly { c }
    }

    pub fn zero() -> FPoly {
        FPoly { c: Vec::new() }
    }

    pub fn one(field: &FiniteField) -> FPoly {
        FPoly {
            c: vec![field.one()],
        }
    }

    pub fn constant(e: Elem) -> FPoly {
        if e.is_zero() {
            FPoly::zero()
        } else {
            FPoly { c: vec![e] }
        }
    }

    /// `y^n`
    pub fn monomial(field: &FiniteField, n: usize) -> FPoly {
        let mut c = vec![field.zero(); n + 1];
        c[n] = field.one();
        FPoly { c }
    }

    pub fn from_i64_coeffs(field: &FiniteField, coeffs: &[i64]) -> FPoly {
        FPoly::new(coeffs.iter().map(|&a| field.from_i64(a)).collect(), field)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn coeff(&self, i: i64) -> &Elem {
        static ZERO_P: Elem = Elem::P(0);
        if i < 0 || i as usize >= self.c.len() {
            // shape-correct zero only matters for prime fields here; callers
            // that need an exact-shape zero go through coeff_in
            &ZERO_P
        } else {
            &self.c[i as usize]
        }
    }

    /// Coefficient with the right element shape for `field`.
    pub fn coeff_in(&self, i: i64, field: &FiniteField) -> Elem {
        if i < 0 || i as usize >= self.c.len() {
            field.zero()
        } else {
            self.c[i as usize].clone()
        }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<Elem> {
        self.c
    }

    pub fn lead(&self) -> &Elem {
        self.c.last().expect("leading coefficient of zero polynomial")
    }

    pub fn is_monic(&self, field: &FiniteField) -> bool {
        !self.is_zero() && *self.lead() == field.one()
    }

    pub fn add(&self, o: &FPoly, field: &FiniteField) -> FPoly {
        let n = self.c.len().max(o.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeff_in(i as i64, field);
            let b = o.coeff_in(i as i64, field);
            out.push(field.add(&a, &b));
        }
        FPoly::new(out, field)
    }

    pub fn neg(&self, field: &FiniteField) -> FPoly {
        FPoly {
            c: self.c.iter().map(|a| field.neg(a)).collect(),
        }
    }

    pub fn sub(&self, o: &FPoly, field: &FiniteField) -> FPoly {
        self.add(&o.neg(field), field)
    }

    pub fn scale(&self, k: &Elem, field: &FiniteField) -> FPoly {
        if k.is_zero() {
            return FPoly::zero();
        }
        FPoly {
            c: self.c.iter().map(|a| field.mul(a, k)).collect(),
        }
    }

    /// Multiply by `y^n`.
    pub fn shift(&self, n: usize, field: &FiniteField) -> FPoly {
        if self.is_zero() {
            return FPoly::zero();
        }
        let mut c = vec![field.zero(); n];
        c.extend(self.c.iter().cloned());
        FPoly { c }
    }

    pub fn mul(&self, o: &FPoly, field: &FiniteField) -> FPoly {
        if self.is_zero() || o.is_zero() {
            return FPoly::zero();
        }
        if self.c.len().min(o.c.len()) >= 32 {
            return self.mul_karatsuba(o, field);
        }
        self.mul_schoolbook(o, field)
    }

    fn mul_schoolbook(&self, o: &FPoly, field: &FiniteField) -> FPoly {
        let mut out = vec![field.zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = field.add(&out[i + j], &field.mul(a, b));
            }
        }
        FPoly::new(out, field)
    }

    fn mul_karatsuba(&self, o: &FPoly, field: &FiniteField) -> FPoly {
        let n = self.c.len().max(o.c.len());
        let h = n / 2;
        let split = |p: &FPoly| -> (FPoly, FPoly) {
            if p.c.len() <= h {
                (p.clone(), FPoly::zero())
            } else {
                (
                    FPoly::new(p.c[..h].to_vec(), field),
                    FPoly::new(p.c[h..].to_vec(), field),
                )
            }
        };
        let (a0, a1) = split(self);
        let (b0, b1) = split(o);
        let z0 = a0.mul(&b0, field);
        let z2 = a1.mul(&b1, field);
        let z1 = a0
            .add(&a1, field)
            .mul(&b0.add(&b1, field), field)
            .sub(&z0, field)
            .sub(&z2, field);
        z0.add(&z1.shift(h, field), field)
            .add(&z2.shift(2 * h, field), field)
    }

    /// Euclidean division; the divisor may have any nonzero leading
    /// coefficient (we invert it in the field).
    pub fn divrem(&self, d: &FPoly, field: &FiniteField) -> (FPoly, FPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.degree() < d.degree() {
            return (FPoly::zero(), self.clone());
        }
        let lc_inv = field.inv(d.lead()).expect("nonzero lead");
        let mut rem = self.c.clone();
        let dd = d.degree() as usize;
        let mut quot = vec![field.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = field.mul(&rem[k], &lc_inv);
            quot[k - dd] = q.clone();
            for i in 0..=dd {
                let m = field.mul(&q, &d.coeff_in(i as i64, field));
                rem[k - dd + i] = field.sub(&rem[k - dd + i], &m);
            }
        }
        (FPoly::new(quot, field), FPoly::new(rem, field))
    }

    pub fn rem(&self, d: &FPoly, field: &FiniteField) -> FPoly {
        self.divrem(d, field).1
    }

    pub fn gcd(&self, o: &FPoly, field: &FiniteField) -> FPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b, field);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let inv = field.inv(a.lead()).unwrap();
        a.scale(&inv, field)
    }

    pub fn derivative(&self, field: &FiniteField) -> FPoly {
        if self.c.len() <= 1 {
            return FPoly::zero();
        }
        let p = field.characteristic();
        let mut out = Vec::with_capacity(self.c.len() - 1);
        for (i, a) in self.c.iter().enumerate().skip(1) {
            let k = field.from_u64((i as u64) % p);
            out.push(field.mul(&k, a));
        }
        FPoly::new(out, field)
    }

    pub fn eval(&self, x: &Elem, field: &FiniteField) -> Elem {
        let mut acc = field.zero();
        for a in self.c.iter().rev() {
            acc = field.add(&field.mul(&acc, x), a);
        }
        acc
    }

    pub fn pow_mod(&self, e: &BigUint, m: &FPoly, field: &FiniteField) -> FPoly {
        let mut acc = FPoly::one(field);
        let base = self.rem(m, field);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc, field).rem(m, field);
            if e.bit(i) {
                acc = acc.mul(&base, field).rem(m, field);
            }
        }
        acc
    }

    /// The q-th power map `sum a_i y^i -> sum a_i^{sigma} y^{i q}` where `q`
    /// is the field cardinality and `sigma` fixes the field (Fermat), so this
    /// is plain coefficient spreading. Used to speed up Frobenius powering.
    pub fn qth_power_spread(&self, field: &FiniteField) -> FPoly {
        let q = field
            .cardinality_u64()
            .expect("spread only used for small fields") as usize;
        if self.is_zero() {
            return FPoly::zero();
        }
        let mut out = vec![field.zero(); (self.c.len() - 1) * q + 1];
        for (i, a) in self.c.iter().enumerate() {
            out[i * q] = a.clone();
        }
        FPoly::new(out, field)
    }

    /// Canonical order: by degree, then coefficients from the top.
    pub fn cmp_canonical(&self, o: &FPoly) -> Ordering {
        self.c.len().cmp(&o.c.len()).then_with(|| {
            for i in (0..self.c.len()).rev() {
                let c = self.c[i].cmp_canonical(&o.c[i]);
                if c != Ordering::Equal {
                    return c;
                }
            }
            Ordering::Equal
        })
    }

    /// Default generator names: `u` for the first extension step (the residue
    /// field `F_0` of a prime of `F_q[t]` with `q` prime), then `z0, z1, ...`
    /// for tower levels. Callers with a non-prime ground field should use
    /// [`FPoly::display_with`].
    pub const GEN_NAMES: [&'static str; 12] = [
        "u", "z0", "z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "z9", "z10",
    ];

    pub fn display(&self, field: &FiniteField, var: &str) -> String {
        self.display_with(field, var, &Self::GEN_NAMES)
    }

    pub fn display_with(&self, field: &FiniteField, var: &str, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let cs = field.render(a, names);
            let wrapped = if cs.contains('+') || cs.contains('*') {
                format!("({cs})")
            } else {
                cs.clone()
            };
            let term = match i {
                0 => cs,
                1 if cs == "1" => var.to_string(),
                1 => format!("{wrapped}*{var}"),
                _ if cs == "1" => format!("{var}^{i}"),
                _ => format!("{wrapped}*{var}^{i}"),
            };
            parts.push(term);
        }
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_roundtrip() {
        let f5 = FiniteField::prime(5).unwrap();
        let a = FPoly::from_i64_coeffs(&f5, &[1, 2, 0, 3, 4]);
        let b = FPoly::from_i64_coeffs(&f5, &[2, 1, 1]);
        let (q, r) = a.divrem(&b, &f5);
        let back = q.mul(&b, &f5).add(&r, &f5);
        assert_eq!(back, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        let f3 = FiniteField::prime(3).unwrap();
        let coeffs: Vec<i64> = (0..100).map(|i| (i * 7 + 1) % 3).collect();
        let a = FPoly::from_i64_coeffs(&f3, &coeffs);
        let coeffs2: Vec<i64> = (0..77).map(|i| (i * 5 + 2) % 3).collect();
        let b = FPoly::from_i64_coeffs(&f3, &coeffs2);
        assert_eq!(a.mul_karatsuba(&b, &f3), a.mul_schoolbook(&b, &f3));
    }

    #[test]
    fn spread_is_qth_power() {
        let f3 = FiniteField::prime(3).unwrap();
        let a = FPoly::from_i64_coeffs(&f3, &[1, 2, 1, 0, 2]);
        let cubed = a.mul(&a, &f3).mul(&a, &f3);
        assert_eq!(a.qth_power_spread(&f3), cubed);
    }
}
