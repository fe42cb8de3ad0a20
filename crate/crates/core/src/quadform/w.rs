use std::fmt;
use std::ops::{Add, Mul};

/// An element `a + b t` of the ring `(Z/2)[t] / (t^2)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WElem {
    pub a: u8,
    pub b: u8,
}

impl WElem {
    pub const ZERO: WElem = WElem { a: 0, b: 0 };
    pub const ONE: WElem = WElem { a: 1, b: 0 };
    pub const T: WElem = WElem { a: 0, b: 1 };

    pub fn new(a: u8, b: u8) -> Self {
        WElem { a: a & 1, b: b & 1 }
    }

    pub fn is_zero(self) -> bool {
        self == WElem::ZERO
    }

    /// Multiplication by a scalar in GF(2).
    pub fn scale(self, bit: u8) -> Self {
        WElem::new(self.a & bit, self.b & bit)
    }

    pub fn all() -> [WElem; 4] {
        [WElem::ZERO, WElem::ONE, WElem::T, WElem::new(1, 1)]
    }
}

impl Add for WElem {
    type Output = WElem;

    fn add(self, rhs: WElem) -> WElem {
        WElem::new(self.a ^ rhs.a, self.b ^ rhs.b)
    }
}

impl Mul for WElem {
    type Output = WElem;

    fn mul(self, rhs: WElem) -> WElem {
        // t^2 = 0
        WElem::new(self.a & rhs.a, (self.a & rhs.b) ^ (self.b & rhs.a))
    }
}

impl fmt::Display for WElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => f.write_str("0"),
            (1, 0) => f.write_str("1"),
            (0, 1) => f.write_str("t"),
            _ => f.write_str("1+t"),
        }
    }
}
