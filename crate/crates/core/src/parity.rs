//! ℤ₂ parity of homogeneous elements and maps.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

/// Parity of a homogeneous element: all Koszul signs in the library are
/// computed from parities alone.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn from_u8(v: u8) -> Option<Parity> {
        match v {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn as_u8(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Sign (−1)^{|a||b|} incurred when `a` and `b` pass each other.
    pub fn koszul_sign(self, other: Parity) -> i8 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }

    /// Sign of an adjacent transposition in a skew bracket or wedge:
    /// −(−1)^{|a||b|}, so odd-odd swaps carry +1.
    pub fn swap_sign(self, other: Parity) -> i8 {
        -self.koszul_sign(other)
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl std::iter::Sum for Parity {
    fn sum<I: Iterator<Item = Parity>>(iter: I) -> Parity {
        iter.fold(Parity::Even, Add::add)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// (−1)^e for a parity-valued exponent.
pub fn pow_sign(e: Parity) -> i8 {
    if e.is_odd() {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        assert_eq!(Parity::Odd + Parity::Odd, Parity::Even);
        assert_eq!(Parity::Odd + Parity::Even, Parity::Odd);
        assert_eq!(Parity::Odd.koszul_sign(Parity::Odd), -1);
        assert_eq!(Parity::Odd.swap_sign(Parity::Odd), 1);
        assert_eq!(Parity::Even.swap_sign(Parity::Odd), -1);
    }
}
