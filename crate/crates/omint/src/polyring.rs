//! Arithmetic in `A = F_q[t]`, `K = F_q(t)`, and `A[x]`: p-adic valuations,
//! phi-adic expansions, reduction to the residue field `F_0 = A/(p)`, and
//! exact resultants.
//!
//! Elements of `A` reuse the finite-field polynomial type in the variable
//! `t`; polynomials in `x` over `A` get their own dense type [`XPoly`].

use crate::gf::{Elem, FPoly, FiniteField};
use crate::rat::{Rat, Val};
use crate::{Error, Result};

/// An element of `A = F_q[t]`.
pub type BasePoly = FPoly;

/// A monic irreducible prime `p` of `A` together with its residue field
/// `F_0 = F_q[t]/(p)`, realized as the extension `F_q[u]/(p(u))` so that
/// reduction is coefficient evaluation at the class `u` of `t`.
#[derive(Clone, Debug)]
pub struct PrimeSpec {
    fq: FiniteField,
    p: BasePoly,
    f0: FiniteField,
}

impl PartialEq for PrimeSpec {
    fn eq(&self, other: &Self) -> bool {
        self.fq == other.fq && self.p == other.p
    }
}

impl PrimeSpec {
    pub fn new(fq: &FiniteField, p: BasePoly) -> Result<PrimeSpec> {
        if !p.is_monic(fq) {
            return Err(Error::NotMonic);
        }
        if !crate::gf::is_irreducible(&p, fq) {
            let witness = crate::gf::factor(&p, fq)?
                .iter()
                .map(|(g, m)| format!("({})^{}", g.display(fq, "t"), m))
                .collect::<Vec<_>>()
                .join(" * ");
            return Err(Error::NotIrreducible { witness });
        }
        let f0 = fq.extension_unchecked(p.clone());
        Ok(PrimeSpec {
            fq: fq.clone(),
            p,
            f0,
        })
    }

    pub fn ground(&self) -> &FiniteField {
        &self.fq
    }

    pub fn prime(&self) -> &BasePoly {
        &self.p
    }

    pub fn degree(&self) -> usize {
        self.p.degree() as usize
    }

    /// The residue field `F_0 = A/(p)`.
    pub fn residue_field(&self) -> &FiniteField {
        &self.f0
    }

    /// Generator names for rendering residue-tower elements.
    pub fn gen_names(&self) -> &'static [&'static str] {
        const PRIME_GROUND: [&str; 12] = [
            "u", "z0", "z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "z9", "z10",
        ];
        const EXT_GROUND: [&str; 12] = [
            "w", "u", "z0", "z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "z9",
        ];
        if self.fq.ext_depth() == 0 {
            &PRIME_GROUND
        } else {
            &EXT_GROUND
        }
    }

    /// Exact p-adic valuation on `A`; `vp(0) = infinity`.
    pub fn vp(&self, a: &BasePoly) -> Val {
        if a.is_zero() {
            return Val::Inf;
        }
        let mut v = 0i64;
        let mut cur = a.clone();
        loop {
            let (q, r) = cur.divrem(&self.p, &self.fq);
            if r.is_zero() {
                v += 1;
                cur = q;
                if cur.is_zero() {
                    // cannot happen for nonzero input
                    unreachable!("vp of nonzero element ran to zero");
                }
            } else {
                return Val::int(v);
            }
        }
    }

    /// `a / p^k`, which must be exact.
    pub fn divide_out(&self, a: &BasePoly, k: i64) -> BasePoly {
        let mut cur = a.clone();
        for _ in 0..k {
            let (q, r) = cur.divrem(&self.p, &self.fq);
            assert!(r.is_zero(), "inexact division by prime power");
            cur = q;
        }
        cur
    }

    /// Reduction `A -> F_0`.
    pub fn reduce(&self, a: &BasePoly) -> Elem {
        let r = a.rem(&self.p, &self.fq);
        let coeffs = r.into_coeffs();
        if coeffs.is_empty() {
            self.f0.zero()
        } else {
            // coefficients over F_q are exactly the coordinates over the base
            let mut v = coeffs;
            while v.last().map_or(false, Elem::is_zero) {
                v.pop();
            }
            if v.is_empty() {
                self.f0.zero()
            } else {
                Elem::E(v)
            }
        }
    }

    /// Canonical lift `F_0 -> A` (degree below `deg p`).
    pub fn lift(&self, e: &Elem) -> BasePoly {
        match e {
            Elem::E(v) => FPoly::new(v.clone(), &self.fq),
            Elem::P(_) => panic!("residue element has wrong shape"),
        }
    }

    /// `p^k` as an element of `A`.
    pub fn prime_power(&self, k: i64) -> BasePoly {
        assert!(k >= 0);
        let mut acc = FPoly::one(&self.fq);
        for _ in 0..k {
            acc = acc.mul(&self.p, &self.fq);
        }
        acc
    }
}

/// A dense polynomial in `x` with coefficients in `A`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XPoly {
    c: Vec<BasePoly>,
}

impl XPoly {
    pub fn new(mut c: Vec<BasePoly>) -> XPoly {
        while c.last().map_or(false, FPoly::is_zero) {
            c.pop();
        }
        XPoly { c }
    }

    pub fn zero() -> XPoly {
        XPoly { c: Vec::new() }
    }

    pub fn one(fq: &FiniteField) -> XPoly {
        XPoly {
            c: vec![FPoly::one(fq)],
        }
    }

    pub fn constant(a: BasePoly) -> XPoly {
        if a.is_zero() {
            XPoly::zero()
        } else {
            XPoly { c: vec![a] }
        }
    }

    /// `x^n`
    pub fn monomial_x(fq: &FiniteField, n: usize) -> XPoly {
        let mut c = vec![FPoly::zero(); n];
        c.push(FPoly::one(fq));
        XPoly { c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn coeff(&self, i: i64) -> BasePoly {
        if i < 0 || i as usize >= self.c.len() {
            FPoly::zero()
        } else {
            self.c[i as usize].clone()
        }
    }

    pub fn coeffs(&self) -> &[BasePoly] {
        &self.c
    }

    pub fn lead(&self) -> &BasePoly {
        self.c.last().expect("leading coefficient of zero polynomial")
    }

    pub fn is_monic(&self, fq: &FiniteField) -> bool {
        !self.is_zero() && self.lead().is_monic(fq) && self.lead().degree() == 0
    }

    pub fn add(&self, o: &XPoly, fq: &FiniteField) -> XPoly {
        let n = self.c.len().max(o.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i as i64).add(&o.coeff(i as i64), fq));
        }
        XPoly::new(out)
    }

    pub fn neg(&self, fq: &FiniteField) -> XPoly {
        XPoly {
            c: self.c.iter().map(|a| a.neg(fq)).collect(),
        }
    }

    pub fn sub(&self, o: &XPoly, fq: &FiniteField) -> XPoly {
        self.add(&o.neg(fq), fq)
    }

    pub fn mul(&self, o: &XPoly, fq: &FiniteField) -> XPoly {
        if self.is_zero() || o.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![FPoly::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b, fq), fq);
            }
        }
        XPoly::new(out)
    }

    pub fn scale(&self, a: &BasePoly, fq: &FiniteField) -> XPoly {
        if a.is_zero() {
            return XPoly::zero();
        }
        XPoly {
            c: self.c.iter().map(|x| x.mul(a, fq)).collect(),
        }
    }

    /// Multiply by `x^n`.
    pub fn shift_x(&self, n: usize) -> XPoly {
        if self.is_zero() {
            return XPoly::zero();
        }
        let mut c = vec![FPoly::zero(); n];
        c.extend(self.c.iter().cloned());
        XPoly { c }
    }

    pub fn pow(&self, mut n: u64, fq: &FiniteField) -> XPoly {
        let mut base = self.clone();
        let mut acc = XPoly::one(fq);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base, fq);
            }
            base = base.mul(&base, fq);
            n >>= 1;
        }
        acc
    }

    /// Euclidean division by a divisor whose leading coefficient is a unit of
    /// `A` (a nonzero constant); monic is the common case.
    pub fn divrem(&self, d: &XPoly, fq: &FiniteField) -> (XPoly, XPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let lc = d.lead();
        assert!(
            lc.degree() == 0,
            "XPoly division needs a unit leading coefficient"
        );
        let lc_inv = FPoly::constant(fq.inv(lc.coeff(0)).unwrap());
        if self.degree() < d.degree() {
            return (XPoly::zero(), self.clone());
        }
        let dd = d.degree() as usize;
        let mut rem = self.c.clone();
        let mut quot = vec![FPoly::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = rem[k].mul(&lc_inv, fq);
            for i in 0..=dd {
                let m = q.mul(&d.coeff(i as i64), fq);
                rem[k - dd + i] = rem[k - dd + i].sub(&m, fq);
            }
            quot[k - dd] = q;
        }
        (XPoly::new(quot), XPoly::new(rem))
    }

    pub fn rem(&self, d: &XPoly, fq: &FiniteField) -> XPoly {
        self.divrem(d, fq).1
    }

    pub fn mul_mod(&self, o: &XPoly, m: &XPoly, fq: &FiniteField) -> XPoly {
        self.mul(o, fq).rem(m, fq)
    }

    /// Derivative with respect to `x`.
    pub fn derivative_x(&self, fq: &FiniteField) -> XPoly {
        if self.c.len() <= 1 {
            return XPoly::zero();
        }
        let p = fq.characteristic();
        let mut out = Vec::with_capacity(self.c.len() - 1);
        for (i, a) in self.c.iter().enumerate().skip(1) {
            let k = FPoly::constant(fq.from_u64(i as u64 % p));
            out.push(a.mul(&k, fq));
        }
        XPoly::new(out)
    }

    /// phi-adic development: returns `a_0, a_1, ...` with
    /// `self = sum a_s phi^s` and `deg a_s < deg phi`.
    pub fn phi_expand(&self, phi: &XPoly, fq: &FiniteField) -> Result<Vec<XPoly>> {
        if !phi.is_monic(fq) {
            return Err(Error::NotMonic);
        }
        if phi.degree() < 1 {
            return Err(Error::OutOfRange("phi must have degree >= 1".into()));
        }
        let mut out = Vec::new();
        let mut cur = self.clone();
        while !cur.is_zero() {
            let (q, r) = cur.divrem(phi, fq);
            out.push(r);
            cur = q;
        }
        if out.is_empty() {
            out.push(XPoly::zero());
        }
        Ok(out)
    }

    /// Horner reconstruction from a phi-adic development.
    pub fn phi_assemble(dev: &[XPoly], phi: &XPoly, fq: &FiniteField) -> XPoly {
        let mut acc = XPoly::zero();
        for a in dev.iter().rev() {
            acc = acc.mul(phi, fq).add(a, fq);
        }
        acc
    }

    /// Content: gcd of the coefficients in `A` (monic normalization).
    pub fn content(&self, fq: &FiniteField) -> BasePoly {
        let mut g = FPoly::zero();
        for a in &self.c {
            g = g.gcd(a, fq);
        }
        g
    }

    /// Exact division of every coefficient by `d` in `A`.
    pub fn divide_coeffs(&self, d: &BasePoly, fq: &FiniteField) -> XPoly {
        XPoly {
            c: self
                .c
                .iter()
                .map(|a| {
                    let (q, r) = a.divrem(d, fq);
                    assert!(r.is_zero(), "inexact content division");
                    q
                })
                .collect(),
        }
    }
}

/// Minimum of `vp` over the coefficients (the Gauss valuation `v_0`).
pub fn v0(g: &XPoly, ps: &PrimeSpec) -> Val {
    let mut m = Val::Inf;
    for a in g.coeffs() {
        m = m.min(ps.vp(a));
    }
    m
}

/// The operator `R_0`: reduction of `g / p^{v_0(g)}` to `F_0[y]`.
pub fn r0(g: &XPoly, ps: &PrimeSpec) -> Result<FPoly> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let v = match v0(g, ps) {
        Val::Fin(r) => r.as_int(),
        Val::Inf => unreachable!(),
    };
    let coeffs: Vec<Elem> = g
        .coeffs()
        .iter()
        .map(|a| {
            if a.is_zero() {
                ps.residue_field().zero()
            } else {
                ps.reduce(&ps.divide_out(a, v))
            }
        })
        .collect();
    Ok(FPoly::new(coeffs, ps.residue_field()))
}

/// gcd in `K[x]` via the primitive PRS; the result is primitive in `A[x]`
/// with monic content convention. Used for the separability guard.
pub fn gcd_kx(f: &XPoly, g: &XPoly, fq: &FiniteField) -> XPoly {
    let mut a = primitive_part(f, fq);
    let mut b = primitive_part(g, fq);
    if a.is_zero() {
        return b;
    }
    while !b.is_zero() {
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let r = pseudo_rem_fixed(&a, &b, fq);
        a = b;
        b = primitive_part(&r, fq);
    }
    // normalize: make the leading coefficient monic in t
    let lc = a.lead().clone();
    let unit = lc.lead().clone();
    a.scale(&FPoly::constant(fq.inv(&unit).unwrap()), fq)
}

fn primitive_part(g: &XPoly, fq: &FiniteField) -> XPoly {
    if g.is_zero() {
        return XPoly::zero();
    }
    let c = g.content(fq);
    g.divide_coeffs(&c, fq)
}

/// Resultant of `g` and `h` in `A`, up to a sign. Subresultant PRS, exact.
pub fn resultant_up_to_sign(g: &XPoly, h: &XPoly, fq: &FiniteField) -> BasePoly {
    subres_resultant(g, h, fq)
}

fn subres_resultant(a0: &XPoly, b0: &XPoly, fq: &FiniteField) -> BasePoly {
    if a0.is_zero() || b0.is_zero() {
        return FPoly::zero();
    }
    if a0.degree() == 0 && b0.degree() == 0 {
        return FPoly::one(fq);
    }
    if a0.degree() < b0.degree() {
        return subres_resultant(b0, a0, fq);
    }
    if b0.degree() == 0 {
        // Res(a, c) = c^(deg a)
        let mut acc = FPoly::one(fq);
        for _ in 0..a0.degree() {
            acc = acc.mul(b0.lead(), fq);
        }
        return acc;
    }
    let mut a = a0.clone();
    let mut b = b0.clone();
    let mut g = FPoly::one(fq);
    let mut h = FPoly::one(fq);
    loop {
        let d = a.degree() - b.degree();
        let r = pseudo_rem_fixed(&a, &b, fq);
        if r.is_zero() {
            return FPoly::zero();
        }
        // divisor g*h^d
        let mut div = g.clone();
        for _ in 0..d {
            div = div.mul(&h, fq);
        }
        let nb = r.divide_coeffs(&div, fq);
        a = b;
        b = nb;
        g = a.lead().clone();
        // h = g^d * h^(1-d)
        h = if d == 0 {
            h
        } else {
            let mut num = FPoly::one(fq);
            for _ in 0..d {
                num = num.mul(&g, fq);
            }
            let mut den = FPoly::one(fq);
            for _ in 0..d - 1 {
                den = den.mul(&h, fq);
            }
            let (q, rr) = num.divrem(&den, fq);
            assert!(rr.is_zero(), "subresultant h-update not exact");
            q
        };
        if b.degree() == 0 {
            // res = lc(b)^(deg a) * h^(1 - deg a)
            let da = a.degree();
            let mut num = FPoly::one(fq);
            for _ in 0..da {
                num = num.mul(b.lead(), fq);
            }
            let mut den = FPoly::one(fq);
            for _ in 0..da - 1 {
                den = den.mul(&h, fq);
            }
            let (q, rr) = num.divrem(&den, fq);
            assert!(rr.is_zero(), "subresultant final division not exact");
            return q;
        }
    }
}

/// Pseudo-remainder `prem(a, b)`: the remainder of `lc(b)^(da-db+1) a` by `b`.
fn pseudo_rem_fixed(a: &XPoly, b: &XPoly, fq: &FiniteField) -> XPoly {
    let da = a.degree();
    let db = b.degree();
    assert!(db >= 0 && da >= db);
    let lc = b.lead().clone();
    let mut rem = a.clone();
    let mut scale_count = 0i64;
    while !rem.is_zero() && rem.degree() >= db {
        let rd = rem.degree();
        let c = rem.coeff(rd);
        rem = rem.scale(&lc, fq);
        scale_count += 1;
        let sub = b.shift_x((rd - db) as usize).scale(&c, fq);
        rem = rem.sub(&sub, fq);
        debug_assert!(rem.degree() < rd);
    }
    // pad remaining scalings so the total is exactly da - db + 1
    for _ in scale_count..(da - db + 1) {
        rem = rem.scale(&lc, fq);
    }
    rem
}

/// `vp` of the resultant, computed exactly.
pub fn resultant_valuation(g: &XPoly, h: &XPoly, ps: &PrimeSpec) -> Val {
    if g.is_zero() || h.is_zero() {
        return Val::Inf;
    }
    let r = resultant_up_to_sign(g, h, ps.ground());
    if r.is_zero() {
        return Val::Inf;
    }
    ps.vp(&r)
}

/// `vp(Disc f)` for monic `f` (sign dropped, which cannot change `vp`).
pub fn disc_valuation(f: &XPoly, ps: &PrimeSpec) -> Val {
    resultant_valuation(f, &f.derivative_x(ps.ground()), ps)
}

/// An element of `K[x]` of the shape `num / p^den`; denominators are always
/// powers of the active prime. `canonical` strips common `p`-powers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KElem {
    pub num: XPoly,
    pub den: i64,
}

impl KElem {
    pub fn integral(num: XPoly) -> KElem {
        KElem { num, den: 0 }
    }

    pub fn canonicalize(&self, ps: &PrimeSpec) -> KElem {
        if self.num.is_zero() {
            return KElem {
                num: XPoly::zero(),
                den: 0,
            };
        }
        let v = match v0(&self.num, ps) {
            Val::Fin(r) => r.as_int(),
            Val::Inf => unreachable!(),
        };
        let k = v.min(self.den);
        if k <= 0 {
            return self.clone();
        }
        let num = XPoly {
            c: self
                .num
                .coeffs()
                .iter()
                .map(|a| {
                    if a.is_zero() {
                        FPoly::zero()
                    } else {
                        ps.divide_out(a, k)
                    }
                })
                .collect(),
        };
        KElem {
            num,
            den: self.den - k,
        }
    }
}

/// Rational value helper: `Val` as a `Rat` after dividing by `e`.
pub fn val_div(v: Val, e: i64) -> Val {
    match v {
        Val::Fin(r) => Val::Fin(r.div(&Rat::int(e))),
        Val::Inf => Val::Inf,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (FiniteField, PrimeSpec) {
        let f7 = FiniteField::prime(7).unwrap();
        let t = FPoly::from_i64_coeffs(&f7, &[0, 1]);
        let ps = PrimeSpec::new(&f7, t).unwrap();
        (f7, ps)
    }

    fn xp(fq: &FiniteField, coeffs: &[&[i64]]) -> XPoly {
        XPoly::new(
            coeffs
                .iter()
                .map(|c| FPoly::from_i64_coeffs(fq, c))
                .collect(),
        )
    }

    #[test]
    fn vp_examples() {
        let (f7, ps) = setup();
        // t^3 + 2 at p = t: valuation 0
        let a = FPoly::from_i64_coeffs(&f7, &[2, 0, 0, 1]);
        assert_eq!(ps.vp(&a), Val::int(0));
        // t^2 (t + 1) at p = t: valuation 2
        let b = FPoly::from_i64_coeffs(&f7, &[0, 0, 1, 1]);
        assert_eq!(ps.vp(&b), Val::int(2));
        assert_eq!(ps.vp(&FPoly::zero()), Val::Inf);
    }

    #[test]
    fn vp_higher_degree_prime() {
        let f7 = FiniteField::prime(7).unwrap();
        // p = t^3 + 2
        let p = FPoly::from_i64_coeffs(&f7, &[2, 0, 0, 1]);
        let ps = PrimeSpec::new(&f7, p.clone()).unwrap();
        // (t^3+2)^5 * u with vp(u) = 0
        let u = FPoly::from_i64_coeffs(&f7, &[1, 1]);
        let mut a = u.clone();
        for _ in 0..5 {
            a = a.mul(&p, &f7);
        }
        assert_eq!(ps.vp(&a), Val::int(5));
        // oracle: repeated exact division
        let mut count = 0;
        let mut cur = a;
        loop {
            let (q, r) = cur.divrem(&p, &f7);
            if !r.is_zero() {
                break;
            }
            count += 1;
            cur = q;
        }
        assert_eq!(count, 5);
    }

    #[test]
    fn v0_and_gauss_property() {
        let (f7, ps) = setup();
        // t^2 x + t^3 -> 2
        let g = xp(&f7, &[&[0, 0, 0, 1], &[0, 0, 1]]);
        assert_eq!(v0(&g, &ps), Val::int(2));
        // x^2 - t -> 0
        let h = xp(&f7, &[&[0, -1], &[], &[1]]);
        assert_eq!(v0(&h, &ps), Val::int(0));
        // multiplicativity on random inputs
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                let dx = rng.gen_range(0..4usize);
                XPoly::new(
                    (0..=dx)
                        .map(|_| {
                            let dt = rng.gen_range(0..4usize);
                            FPoly::new(
                                (0..=dt).map(|_| f7.random(rng)).collect(),
                                &f7,
                            )
                        })
                        .collect(),
                )
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let lhs = v0(&a.mul(&b, &f7), &ps);
            let rhs = v0(&a, &ps).add(&v0(&b, &ps));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn phi_expand_examples() {
        let (f7, ps) = setup();
        let _ = ps;
        // g = x^2 - t, phi = x
        let g = xp(&f7, &[&[0, -1], &[], &[1]]);
        let phi = XPoly::monomial_x(&f7, 1);
        let dev = g.phi_expand(&phi, &f7).unwrap();
        assert_eq!(dev.len(), 3);
        assert_eq!(dev[0], xp(&f7, &[&[0, -1]]));
        assert!(dev[1].is_zero());
        assert_eq!(dev[2], XPoly::one(&f7));
        // g = phi^3
        let phi2 = xp(&f7, &[&[1, 1], &[3], &[1]]); // x^2 + 3x + (t+1)
        let g2 = phi2.pow(3, &f7);
        let dev2 = g2.phi_expand(&phi2, &f7).unwrap();
        assert_eq!(dev2.len(), 4);
        for s in 0..3 {
            assert!(dev2[s].is_zero());
        }
        assert_eq!(dev2[3], XPoly::one(&f7));
        // reconstruction is exact
        assert_eq!(XPoly::phi_assemble(&dev2, &phi2, &f7), g2);
    }

    #[test]
    fn r0_examples() {
        let (f7, ps) = setup();
        // x^2 - t -> y^2
        let g = xp(&f7, &[&[0, -1], &[], &[1]]);
        let r = r0(&g, &ps).unwrap();
        assert_eq!(r, FPoly::monomial(ps.residue_field(), 2));
        // x^2 - t^2(t+1) -> y^2
        let g2 = xp(&f7, &[&[0, 0, -1, -1], &[], &[1]]);
        assert_eq!(r0(&g2, &ps).unwrap(), FPoly::monomial(ps.residue_field(), 2));
        // t x + t^2 -> y (after dividing by p once)
        let g3 = xp(&f7, &[&[0, 0, 1], &[0, 1]]);
        assert_eq!(r0(&g3, &ps).unwrap(), FPoly::monomial(ps.residue_field(), 1));
        // zero rejected
        assert!(r0(&XPoly::zero(), &ps).is_err());
    }

    #[test]
    fn resultant_valuations() {
        let (f7, ps) = setup();
        // Res(x, x - t) = +-t -> vp 1
        let a = XPoly::monomial_x(&f7, 1);
        let b = xp(&f7, &[&[0, -1], &[1]]);
        assert_eq!(resultant_valuation(&a, &b, &ps), Val::int(1));
        // Res(x^2 - t, x) = -t -> vp 1
        let c = xp(&f7, &[&[0, -1], &[], &[1]]);
        assert_eq!(resultant_valuation(&c, &a, &ps), Val::int(1));
        // disc of x^2 - t is -4t -> vp 1
        assert_eq!(disc_valuation(&c, &ps), Val::int(1));
    }

    #[test]
    fn gcd_separability() {
        let (f7, _ps) = setup();
        let f = xp(&f7, &[&[0, -1], &[], &[1]]); // x^2 - t separable
        let g = gcd_kx(&f, &f.derivative_x(&f7), &f7);
        assert_eq!(g.degree(), 0);
        // (x - t)^2 is not separable
        let h = xp(&f7, &[&[0, -1], &[1]]).pow(2, &f7);
        let g2 = gcd_kx(&h, &h.derivative_x(&f7), &f7);
        assert!(g2.degree() > 0);
    }
}
