//! Univariate factorization over finite fields: squarefree decomposition,
//! distinct-degree splitting, and Cantor-Zassenhaus equal-degree splitting
//! (trace variant in characteristic 2). Output order is canonical so that
//! everything downstream is reproducible.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{FPoly, FiniteField};
use crate::{Error, Result};

/// Factors a nonzero polynomial into monic irreducibles with multiplicities,
/// sorted by (degree, coefficient order). The leading unit is dropped.
pub fn factor(g: &FPoly, field: &FiniteField) -> Result<Vec<(FPoly, usize)>> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if g.degree() == 0 {
        return Ok(Vec::new());
    }
    let lc_inv = field.inv(g.lead())?;
    let monic = g.scale(&lc_inv, field);
    let mut rng = ChaCha8Rng::seed_from_u64(0x0f2c);
    let mut out = Vec::new();
    for (sf, mult) in squarefree_parts(&monic, field) {
        for (h, d) in distinct_degree(&sf, field) {
            for irr in equal_degree(&h, d, field, &mut rng) {
                out.push((irr, mult));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp_canonical(&b.0));
    Ok(out)
}

/// Rabin irreducibility test.
pub fn is_irreducible(f: &FPoly, field: &FiniteField) -> bool {
    let n = f.degree();
    if n <= 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let n = n as usize;
    // h_k = y^(Q^k) mod f, computed by iterated Q-th powering
    let mut h = FPoly::monomial(field, 1);
    let mut hs = Vec::with_capacity(n);
    for _ in 0..n {
        h = qth_power_mod(&h, f, field);
        hs.push(h.clone());
    }
    let y = FPoly::monomial(field, 1);
    if hs[n - 1] != y.rem(f, field) {
        return false;
    }
    for l in prime_divisors(n) {
        let g = hs[n / l - 1].sub(&y, field).gcd(f, field);
        if g.degree() > 0 {
            return false;
        }
    }
    true
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `g^Q mod f` where `Q` is the field cardinality.
fn qth_power_mod(g: &FPoly, f: &FPoly, field: &FiniteField) -> FPoly {
    match field.cardinality_u64() {
        Some(q) if q <= 16 => g.qth_power_spread(field).rem(f, field),
        _ => g.pow_mod(&field.cardinality(), f, field),
    }
}

/// Squarefree decomposition of a monic polynomial: returns pairs
/// `(monic squarefree part, multiplicity)` whose weighted product is the
/// input. Handles vanishing derivatives via p-th roots.
fn squarefree_parts(f: &FPoly, field: &FiniteField) -> Vec<(FPoly, usize)> {
    squarefree_scaled(f, field, 1)
}

fn squarefree_scaled(f: &FPoly, field: &FiniteField, scale: usize) -> Vec<(FPoly, usize)> {
    if f.degree() == 0 {
        return Vec::new();
    }
    let df = f.derivative(field);
    if df.is_zero() {
        return squarefree_scaled(
            &pth_root_poly(f, field),
            field,
            scale * field.characteristic() as usize,
        );
    }
    let mut out = Vec::new();
    let mut c = f.gcd(&df, field);
    let mut w = f.divrem(&c, field).0;
    let mut i = 1usize;
    while w.degree() > 0 {
        let z = w.gcd(&c, field);
        let part = w.divrem(&z, field).0;
        if part.degree() > 0 {
            out.push((part, i * scale));
        }
        c = c.divrem(&z, field).0;
        w = z;
        i += 1;
    }
    if c.degree() > 0 {
        // leftover p-th power
        for (h, m) in squarefree_scaled(
            &pth_root_poly(&c, field),
            field,
            scale * field.characteristic() as usize,
        ) {
            out.push((h, m));
        }
    }
    out
}

/// p-th root of a polynomial whose derivative vanishes: `f(y) = g(y^p)`.
fn pth_root_poly(f: &FPoly, field: &FiniteField) -> FPoly {
    let p = field.characteristic() as usize;
    let mut out = Vec::new();
    for (i, a) in f.coeffs().iter().enumerate() {
        if i % p == 0 {
            out.push(field.pth_root(a));
        } else {
            assert!(a.is_zero(), "derivative was nonzero after all");
        }
    }
    FPoly::new(out, field)
}

/// Distinct-degree split of a monic squarefree polynomial: pairs
/// `(product of all irreducible factors of degree d, d)`.
fn distinct_degree(f: &FPoly, field: &FiniteField) -> Vec<(FPoly, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let y = FPoly::monomial(field, 1);
    let mut h = y.clone();
    let mut d = 0usize;
    while f.degree() > 0 {
        d += 1;
        if 2 * d as i64 > f.degree() {
            let deg = f.degree() as usize;
            out.push((f, deg));
            break;
        }
        h = qth_power_mod(&h, &f, field);
        let g = h.sub(&y, field).gcd(&f, field);
        if g.degree() > 0 {
            out.push((g.clone(), d));
            f = f.divrem(&g, field).0;
            h = h.rem(&f, field);
        }
    }
    out
}

/// Equal-degree split: factors a monic squarefree product of irreducibles of
/// the common degree `d` into the irreducibles themselves.
fn equal_degree(f: &FPoly, d: usize, field: &FiniteField, rng: &mut ChaCha8Rng) -> Vec<FPoly> {
    let mut out = Vec::new();
    split_rec(f, d, field, rng, &mut out);
    out
}

fn split_rec(f: &FPoly, d: usize, field: &FiniteField, rng: &mut ChaCha8Rng, out: &mut Vec<FPoly>) {
    if f.degree() as usize == d {
        out.push(f.clone());
        return;
    }
    let n = f.degree() as usize;
    loop {
        let mut coeffs = Vec::with_capacity(n);
        for _ in 0..n {
            coeffs.push(field.random(rng));
        }
        let u = FPoly::new(coeffs, field);
        if u.degree() < 1 {
            continue;
        }
        let g = u.gcd(f, field);
        if g.degree() > 0 && g.degree() < f.degree() {
            // lucky split via a common factor
            split_two(f, &g, d, field, rng, out);
            return;
        }
        let v = if field.characteristic() == 2 {
            // trace map over F_2: u + u^2 + u^4 + ... (kd - 1 squarings)
            let steps = field.abs_degree() * d;
            let mut acc = u.clone();
            let mut sq = u.clone();
            for _ in 1..steps {
                sq = sq.mul(&sq, field).rem(f, field);
                acc = acc.add(&sq, field);
            }
            acc
        } else {
            // u^((Q^d - 1)/2) - 1
            let e = (field.cardinality().pow(d as u32) - 1u32) / 2u32;
            let w = u.pow_mod(&e, f, field);
            w.sub(&FPoly::one(field), field)
        };
        let g = v.gcd(f, field);
        if g.degree() > 0 && g.degree() < f.degree() {
            split_two(f, &g, d, field, rng, out);
            return;
        }
    }
}

fn split_two(
    f: &FPoly,
    g: &FPoly,
    d: usize,
    field: &FiniteField,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<FPoly>,
) {
    let h = f.divrem(g, field).0;
    split_rec(g, d, field, rng, out);
    split_rec(&h, d, field, rng, out);
}
