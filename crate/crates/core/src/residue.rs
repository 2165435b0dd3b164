use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An element of the cyclic group of integers modulo `modulus`.
///
/// The stored value is always the canonical representative in `[0, modulus)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    /// Reduces an arbitrary signed integer modulo `modulus`.
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        let m = modulus as i128;
        let value = (value as i128).rem_euclid(m) as u64;
        Residue { value, modulus }
    }

    pub fn from_canonical(value: u64, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        Residue {
            value: value % modulus,
            modulus,
        }
    }

    pub fn zero(modulus: u64) -> Self {
        Residue::from_canonical(0, modulus)
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Representative in `(-v/2, v/2]`.
    pub fn signed(self) -> i64 {
        if 2 * self.value > self.modulus {
            self.value as i64 - self.modulus as i64
        } else {
            self.value as i64
        }
    }

    /// Least positive `l` with `l * self == 0`, i.e. `v / gcd(x, v)`.
    pub fn additive_order(self) -> u64 {
        self.modulus / gcd(self.value, self.modulus)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Add for Residue {
    type Output = Residue;

    fn add(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let mut value = self.value + rhs.value;
        if value >= self.modulus {
            value -= self.modulus;
        }
        Residue {
            value,
            modulus: self.modulus,
        }
    }
}

impl AddAssign for Residue {
    fn add_assign(&mut self, rhs: Residue) {
        *self = *self + rhs;
    }
}

impl Neg for Residue {
    type Output = Residue;

    fn neg(self) -> Residue {
        Residue::from_canonical(self.modulus - self.value, self.modulus)
    }
}

impl Sub for Residue {
    type Output = Residue;

    fn sub(self, rhs: Residue) -> Residue {
        self + (-rhs)
    }
}

impl Mul<u64> for Residue {
    type Output = Residue;

    fn mul(self, rhs: u64) -> Residue {
        let value = ((self.value as u128 * rhs as u128) % self.modulus as u128) as u64;
        Residue {
            value,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed())
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.signed(), self.modulus)
    }
}

/// Computes the least positive `l` with `l * x == 0` by iterating multiples.
pub fn additive_order(x: Residue) -> u64 {
    x.additive_order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn order_by_iteration(x: Residue) -> u64 {
        let mut acc = x;
        let mut l = 1;
        while !acc.is_zero() {
            acc += x;
            l += 1;
        }
        l
    }

    #[test]
    fn order_examples() {
        assert_eq!(Residue::new(0, 25).additive_order(), 1);
        assert_eq!(Residue::new(2, 25).additive_order(), 25);
        assert_eq!(Residue::new(5, 25).additive_order(), 5);
    }

    #[test]
    fn signed_range_even_modulus() {
        assert_eq!(Residue::new(13, 26).signed(), 13);
        assert_eq!(Residue::new(14, 26).signed(), -12);
        assert_eq!(Residue::new(-11, 25).value(), 14);
        assert_eq!(Residue::new(14, 25).signed(), -11);
    }

    #[test]
    fn arithmetic() {
        let a = Residue::new(20, 25);
        let b = Residue::new(9, 25);
        assert_eq!((a + b).value(), 4);
        assert_eq!((b - a).signed(), -11);
        assert_eq!((-a).value(), 5);
        assert_eq!((a * 3).value(), 10);
        assert!((Residue::new(5, 25) * 5).is_zero());
    }

    proptest! {
        #[test]
        fn signed_round_trip(v in 1u64..5000, x in 0u64..5000) {
            let r = Residue::from_canonical(x, v);
            let s = r.signed();
            prop_assert!(2 * s > -(v as i64) && 2 * s <= v as i64);
            prop_assert_eq!(Residue::new(s, v), r);
        }

        #[test]
        fn order_is_minimal(v in 1u64..400, x in 0u64..400) {
            let r = Residue::from_canonical(x, v);
            let l = r.additive_order();
            prop_assert!((r * l).is_zero());
            prop_assert_eq!(l, order_by_iteration(r));
        }
    }
}
