//! Exact rational numbers on machine integers, with overflow detection.
//!
//! Slopes and normalized values are rationals with denominators bounded by
//! products of ramification indices, so `i64` is plenty; every operation goes
//! through checked arithmetic and panics on overflow rather than wrapping.

use std::cmp::Ordering;
use std::fmt;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn ck_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("rational overflow (add)")
}

fn ck_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("rational overflow (mul)")
}

/// An exact rational `num/den`, always in lowest terms with `den > 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rat {
    num: i64,
    den: i64,
}

impl Rat {
    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        Rat {
            num: s * (num / g),
            den: s * (den / g),
        }
    }

    pub const ZERO: Rat = Rat { num: 0, den: 1 };
    pub const ONE: Rat = Rat { num: 1, den: 1 };

    pub fn int(n: i64) -> Rat {
        Rat { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// Panics unless the value is an integer.
    pub fn as_int(&self) -> i64 {
        assert!(self.den == 1, "expected integer, got {self}");
        self.num
    }

    pub fn floor(&self) -> i64 {
        self.num.div_euclid(self.den)
    }

    pub fn ceil(&self) -> i64 {
        -(-*self).floor()
    }

    pub fn add(&self, o: &Rat) -> Rat {
        Rat::new(
            ck_add(ck_mul(self.num, o.den), ck_mul(o.num, self.den)),
            ck_mul(self.den, o.den),
        )
    }

    pub fn sub(&self, o: &Rat) -> Rat {
        self.add(&-*o)
    }

    pub fn mul(&self, o: &Rat) -> Rat {
        Rat::new(ck_mul(self.num, o.num), ck_mul(self.den, o.den))
    }

    pub fn div(&self, o: &Rat) -> Rat {
        assert!(o.num != 0, "division by zero rational");
        Rat::new(ck_mul(self.num, o.den), ck_mul(self.den, o.num))
    }

    pub fn mul_int(&self, n: i64) -> Rat {
        Rat::new(ck_mul(self.num, n), self.den)
    }
}

impl std::ops::Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat {
            num: -self.num,
            den: self.den,
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        ck_mul(self.num, other.den).cmp(&ck_mul(other.num, self.den))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(w, "{}", self.num)
        } else {
            write!(w, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, w)
    }
}

/// A rational value extended with `+infinity` (the value of 0).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Val {
    Fin(Rat),
    Inf,
}

impl Val {
    pub fn int(n: i64) -> Val {
        Val::Fin(Rat::int(n))
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, Val::Inf)
    }

    pub fn finite(&self) -> Option<Rat> {
        match self {
            Val::Fin(r) => Some(*r),
            Val::Inf => None,
        }
    }

    /// Panics on infinity.
    pub fn unwrap(&self) -> Rat {
        self.finite().expect("unexpected infinite value")
    }

    pub fn add(&self, o: &Val) -> Val {
        match (self, o) {
            (Val::Fin(a), Val::Fin(b)) => Val::Fin(a.add(b)),
            _ => Val::Inf,
        }
    }
}

impl PartialOrd for Val {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Val {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Val::Inf, Val::Inf) => Ordering::Equal,
            (Val::Inf, _) => Ordering::Greater,
            (_, Val::Inf) => Ordering::Less,
            (Val::Fin(a), Val::Fin(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Val {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Fin(r) => write!(w, "{r}"),
            Val::Inf => write!(w, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_floor() {
        let a = Rat::new(3, 2);
        let b = Rat::new(-1, 3);
        assert_eq!(a.add(&b), Rat::new(7, 6));
        assert_eq!(a.mul(&b), Rat::new(-1, 2));
        assert_eq!(Rat::new(-3, 2).floor(), -2);
        assert_eq!(Rat::new(3, 2).floor(), 1);
        assert_eq!(Rat::new(4, 2), Rat::int(2));
        assert!(Rat::new(1, 3) < Rat::new(1, 2));
    }

    #[test]
    fn values_order() {
        assert!(Val::int(5) < Val::Inf);
        assert_eq!(Val::Inf.min(Val::int(2)), Val::int(2));
        assert_eq!(Val::int(1).add(&Val::Inf), Val::Inf);
    }
}
