//! Field elements and their arithmetic, parameterized by a field context.

use std::cmp::Ordering;

use num_bigint::BigUint;

use super::field::Repr;
use super::{FPoly, FiniteField};
use crate::{Error, Result};

/// An element of a [`FiniteField`]. `P` for prime fields, `E` for extensions
/// (coordinates over the base, trailing zeros stripped, length at most the
/// extension degree). The shape always matches the field the element lives in.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Elem {
    P(u64),
    E(Vec<Elem>),
}

impl Elem {
    pub fn is_zero(&self) -> bool {
        match self {
            Elem::P(a) => *a == 0,
            Elem::E(v) => v.is_empty(),
        }
    }

    /// Coordinates over the base field, padded to length `d`.
    pub fn coords(&self, d: usize, base: &FiniteField) -> Vec<Elem> {
        match self {
            Elem::P(_) => panic!("prime-field element has no coordinates"),
            Elem::E(v) => {
                let mut out = v.clone();
                while out.len() < d {
                    out.push(base.zero());
                }
                out
            }
        }
    }

    /// A canonical total order used to fix iteration order of factors.
    pub fn cmp_canonical(&self, other: &Elem) -> Ordering {
        match (self, other) {
            (Elem::P(a), Elem::P(b)) => a.cmp(b),
            (Elem::E(a), Elem::E(b)) => {
                a.len().cmp(&b.len()).then_with(|| {
                    for i in (0..a.len()).rev() {
                        let c = a[i].cmp_canonical(&b[i]);
                        if c != Ordering::Equal {
                            return c;
                        }
                    }
                    Ordering::Equal
                })
            }
            (Elem::P(_), Elem::E(_)) => Ordering::Less,
            (Elem::E(_), Elem::P(_)) => Ordering::Greater,
        }
    }
}

fn trim(mut v: Vec<Elem>) -> Elem {
    while v.last().map_or(false, Elem::is_zero) {
        v.pop();
    }
    Elem::E(v)
}

impl FiniteField {
    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (Repr::Prime { p }, Elem::P(x), Elem::P(y)) => Elem::P((x + y) % p),
            (Repr::Ext { base, .. }, Elem::E(x), Elem::E(y)) => {
                let n = x.len().max(y.len());
                let mut out = Vec::with_capacity(n);
                for i in 0..n {
                    let xi = x.get(i).cloned().unwrap_or_else(|| base.zero());
                    let yi = y.get(i).cloned().unwrap_or_else(|| base.zero());
                    out.push(base.add(&xi, &yi));
                }
                trim(out)
            }
            _ => panic!("element shape does not match field"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (&*self.0, a) {
            (Repr::Prime { p }, Elem::P(x)) => Elem::P((p - x) % p),
            (Repr::Ext { base, .. }, Elem::E(v)) => {
                Elem::E(v.iter().map(|c| base.neg(c)).collect())
            }
            _ => panic!("element shape does not match field"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.0, a, b) {
            (Repr::Prime { p }, Elem::P(x), Elem::P(y)) => {
                Elem::P(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (Repr::Ext { base, modulus }, Elem::E(x), Elem::E(y)) => {
                if x.is_empty() || y.is_empty() {
                    return self.zero();
                }
                let mut prod = vec![base.zero(); x.len() + y.len() - 1];
                for (i, xi) in x.iter().enumerate() {
                    if xi.is_zero() {
                        continue;
                    }
                    for (j, yj) in y.iter().enumerate() {
                        if yj.is_zero() {
                            continue;
                        }
                        prod[i + j] = base.add(&prod[i + j], &base.mul(xi, yj));
                    }
                }
                self.reduce_vec(prod, base, modulus)
            }
            _ => panic!("element shape does not match field"),
        }
    }

    /// Reduces a coefficient vector modulo the extension modulus.
    fn reduce_vec(&self, mut v: Vec<Elem>, base: &FiniteField, modulus: &FPoly) -> Elem {
        let d = modulus.degree() as usize;
        while v.len() > d {
            let lead = v.pop().unwrap();
            if lead.is_zero() {
                continue;
            }
            let k = v.len() - d;
            for i in 0..d {
                let m = base.mul(&lead, modulus.coeff(i as i64));
                v[k + i] = base.sub(&v[k + i], &m);
            }
        }
        trim(v)
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (&*self.0, a) {
            (Repr::Prime { p }, Elem::P(x)) => {
                // Fermat: x^(p-2)
                Ok(Elem::P(pow_mod_u64(*x, p - 2, *p)))
            }
            (Repr::Ext { base, modulus }, _) => {
                // extended Euclid over the base field
                let ap = FPoly::new(a.coords(modulus.degree() as usize, base), base);
                let (g, s) = ext_gcd_with_modulus(&ap, modulus, base);
                assert_eq!(g.degree(), 0, "modulus not irreducible?");
                let c = base.inv(g.coeff(0))?;
                let s = s.scale(&c, base);
                let mut v = s.into_coeffs();
                v.truncate(modulus.degree() as usize);
                Ok(trim(v))
            }
            _ => panic!("element shape does not match field"),
        }
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Elem, mut n: u64) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    pub fn pow_big(&self, a: &Elem, n: &BigUint) -> Elem {
        let mut acc = self.one();
        let bits = n.bits();
        for i in (0..bits).rev() {
            acc = self.mul(&acc, &acc);
            if n.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// Signed power: negative exponents go through the inverse.
    pub fn pow_i64(&self, a: &Elem, n: i64) -> Elem {
        if n >= 0 {
            self.pow(a, n as u64)
        } else {
            let inv = self.inv(a).expect("negative power of zero");
            self.pow(&inv, (-n) as u64)
        }
    }

    /// Frobenius x -> x^p over the prime field.
    pub fn frobenius(&self, a: &Elem) -> Elem {
        self.pow(a, self.characteristic())
    }

    /// Inverse of Frobenius: the unique p-th root.
    pub fn pth_root(&self, a: &Elem) -> Elem {
        // x -> x^(q/p) inverts x -> x^p on a field with q elements
        let q = self.cardinality();
        let e = q / self.characteristic();
        self.pow_big(a, &e)
    }

    pub fn random<R: rand::Rng>(&self, rng: &mut R) -> Elem {
        match &*self.0 {
            Repr::Prime { p } => Elem::P(rng.gen_range(0..*p)),
            Repr::Ext { base, modulus } => {
                let d = modulus.degree() as usize;
                trim((0..d).map(|_| base.random(rng)).collect())
            }
        }
    }
}

impl FiniteField {
    /// Number of extension steps above the prime field.
    pub fn ext_depth(&self) -> usize {
        match &*self.0 {
            Repr::Prime { .. } => 0,
            Repr::Ext { base, .. } => 1 + base.ext_depth(),
        }
    }

    /// Renders an element in terms of generator names, innermost first:
    /// `names[k]` names the generator of the (k+1)-th extension step above
    /// the prime field, e.g. `["u", "z0", "z1"]`.
    pub fn render(&self, e: &Elem, names: &[&str]) -> String {
        match (&*self.0, e) {
            (Repr::Prime { .. }, Elem::P(a)) => format!("{a}"),
            (Repr::Ext { base, .. }, Elem::E(v)) => {
                let name = names[self.ext_depth() - 1];
                if v.is_empty() {
                    return "0".into();
                }
                let terms: Vec<String> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| {
                        let cs = base.render(c, names);
                        let wrapped = if cs.contains('+') || cs.contains('*') {
                            format!("({cs})")
                        } else {
                            cs.clone()
                        };
                        match i {
                            0 => cs,
                            1 if cs == "1" => name.to_string(),
                            1 => format!("{wrapped}*{name}"),
                            _ if cs == "1" => format!("{name}^{i}"),
                            _ => format!("{wrapped}*{name}^{i}"),
                        }
                    })
                    .collect();
                terms.join(" + ")
            }
            _ => panic!("element shape does not match field"),
        }
    }
}

pub(crate) fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Returns `(g, s)` with `g = gcd(a, m)` and `s*a = g mod m`.
fn ext_gcd_with_modulus(a: &FPoly, m: &FPoly, field: &FiniteField) -> (FPoly, FPoly) {
    let mut r0 = m.clone();
    let mut r1 = a.clone();
    let mut s0 = FPoly::zero();
    let mut s1 = FPoly::one(field);
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1, field);
        let s = s0.sub(&q.mul(&s1, field), field);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    (r0, s0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn extension_field_arithmetic() {
        // F_49 = F_7[y]/(y^2+1)
        let f7 = FiniteField::prime(7).unwrap();
        let psi = FPoly::new(vec![Elem::P(1), Elem::P(0), Elem::P(1)], &f7);
        let f49 = f7.extension(psi).unwrap();
        let i = f49.gen();
        // i^2 = -1
        assert_eq!(f49.mul(&i, &i), f49.from_i64(-1));
        let a = f49.add(&i, &f49.from_u64(3)); // 3 + i
        let ai = f49.inv(&a).unwrap();
        assert_eq!(f49.mul(&a, &ai), f49.one());
        // Fermat on the full field
        assert_eq!(f49.pow(&a, 48), f49.one());
    }

    #[test]
    fn field_axioms_random_tower() {
        // F_9 over F_3, then a cubic extension on top (F_729)
        let f9 = FiniteField::with_cardinality(9).unwrap();
        let m = super::super::field::find_irreducible(&f9, 3);
        let top = f9.extension(m).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let a = top.random(&mut rng);
            let b = top.random(&mut rng);
            let c = top.random(&mut rng);
            let ab_c = top.mul(&top.mul(&a, &b), &c);
            let a_bc = top.mul(&a, &top.mul(&b, &c));
            assert_eq!(ab_c, a_bc);
            let d = top.mul(&a, &top.add(&b, &c));
            let d2 = top.add(&top.mul(&a, &b), &top.mul(&a, &c));
            assert_eq!(d, d2);
            if !a.is_zero() {
                assert_eq!(top.mul(&a, &top.inv(&a).unwrap()), top.one());
            }
        }
    }

    #[test]
    fn frobenius_fixes_exactly_prime_subfield() {
        // Frobenius x -> x^3 on F_27 fixes exactly F_3
        let f27 = FiniteField::with_cardinality(27).unwrap();
        let mut fixed = 0;
        for a in f27.enumerate() {
            if f27.frobenius(&a) == a {
                fixed += 1;
            }
        }
        assert_eq!(fixed, 3);
    }
}
