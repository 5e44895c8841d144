//! Exact arithmetic in Z[sqrt 2].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// The number `a + b * sqrt(2)` with integer `a`, `b`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct QuadInt {
    /// Rational part.
    pub a: i64,
    /// Coefficient of sqrt 2.
    pub b: i64,
}

impl QuadInt {
    /// Builds `a + b * sqrt(2)`.
    pub const fn new(a: i64, b: i64) -> Self {
        QuadInt { a, b }
    }

    /// Zero.
    pub const fn zero() -> Self {
        QuadInt { a: 0, b: 0 }
    }

    /// One.
    pub const fn one() -> Self {
        QuadInt { a: 1, b: 0 }
    }

    /// True for zero.
    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Exact sign of the real number.
    pub fn signum(self) -> Ordering {
        let sa = self.a.cmp(&0);
        let sb = self.b.cmp(&0);
        if sa == sb || sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal {
            return sb;
        }
        // Opposite signs: compare a^2 with 2 b^2.
        let a2 = (self.a as i128) * (self.a as i128);
        let b2 = 2 * (self.b as i128) * (self.b as i128);
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    /// Floating point approximation.
    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * std::f64::consts::SQRT_2
    }
}

impl Add for QuadInt {
    type Output = QuadInt;
    fn add(self, o: QuadInt) -> QuadInt {
        QuadInt::new(self.a + o.a, self.b + o.b)
    }
}

impl AddAssign for QuadInt {
    fn add_assign(&mut self, o: QuadInt) {
        self.a += o.a;
        self.b += o.b;
    }
}

impl Sub for QuadInt {
    type Output = QuadInt;
    fn sub(self, o: QuadInt) -> QuadInt {
        QuadInt::new(self.a - o.a, self.b - o.b)
    }
}

impl SubAssign for QuadInt {
    fn sub_assign(&mut self, o: QuadInt) {
        self.a -= o.a;
        self.b -= o.b;
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt::new(-self.a, -self.b)
    }
}

impl Mul for QuadInt {
    type Output = QuadInt;
    fn mul(self, o: QuadInt) -> QuadInt {
        QuadInt::new(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}*r2"),
            (a, b) => write!(f, "{a}{b:+}*r2"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sqrt2_squared() {
        let r = QuadInt::new(0, 1);
        assert_eq!(r * r, QuadInt::new(2, 0));
    }

    #[test]
    fn signs() {
        assert_eq!(QuadInt::new(1, -1).signum(), Ordering::Less);
        assert_eq!(QuadInt::new(2, -1).signum(), Ordering::Greater);
        assert_eq!(QuadInt::new(-3, 2).signum(), Ordering::Less);
        assert_eq!(QuadInt::new(-2, 2).signum(), Ordering::Greater);
        assert_eq!(QuadInt::zero().signum(), Ordering::Equal);
    }

    proptest! {
        #[test]
        fn sign_matches_float(a in -1000i64..1000, b in -1000i64..1000) {
            let x = QuadInt::new(a, b);
            let f = x.to_f64();
            let expected = if f > 0.0 { Ordering::Greater } else if f < 0.0 { Ordering::Less } else { Ordering::Equal };
            prop_assert_eq!(x.signum(), expected);
        }

        #[test]
        fn ring_laws(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50, e in -50i64..50, g in -50i64..50) {
            let x = QuadInt::new(a, b);
            let y = QuadInt::new(c, d);
            let z = QuadInt::new(e, g);
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x * (y + z), x * y + x * z);
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!(x - x, QuadInt::zero());
        }
    }
}
