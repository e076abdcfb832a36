use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub};

/// An element of GF(4) = {0, 1, w, w^2} with w^2 = w + 1.
///
/// Stored as two bits `b0 + b1*w`, so 0, 1, w, w^2 are 0, 1, 2, 3.
/// Addition is XOR of the encodings.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F4(u8);

const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    pub const W: F4 = F4(2);
    pub const W2: F4 = F4(3);
    pub const ALL: [F4; 4] = [F4::ZERO, F4::ONE, F4::W, F4::W2];
    pub const NONZERO: [F4; 3] = [F4::ONE, F4::W, F4::W2];

    /// Builds from the two-bit encoding; panics outside 0..4.
    pub fn from_bits(bits: u8) -> F4 {
        assert!(bits < 4, "GF(4) encoding out of range: {bits}");
        F4(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Conjugation x -> x^2, the nontrivial field automorphism.
    pub fn conj(self) -> F4 {
        self * self
    }

    pub fn inv(self) -> Option<F4> {
        match self.0 {
            0 => None,
            1 => Some(F4::ONE),
            2 => Some(F4::W2),
            _ => Some(F4::W),
        }
    }

    pub fn pow(self, e: u64) -> F4 {
        if self.is_zero() {
            return if e == 0 { F4::ONE } else { F4::ZERO };
        }
        // nonzero elements have order dividing 3; w = 2, w^2 = 3
        let log = match self.0 {
            1 => 0,
            2 => 1,
            _ => 2,
        };
        match (log * (e % 3)) % 3 {
            0 => F4::ONE,
            1 => F4::W,
            _ => F4::W2,
        }
    }
}

impl Add for F4 {
    type Output = F4;
    fn add(self, rhs: F4) -> F4 {
        F4(self.0 ^ rhs.0)
    }
}

impl AddAssign for F4 {
    fn add_assign(&mut self, rhs: F4) {
        self.0 ^= rhs.0;
    }
}

impl Sub for F4 {
    type Output = F4;
    fn sub(self, rhs: F4) -> F4 {
        F4(self.0 ^ rhs.0)
    }
}

impl Neg for F4 {
    type Output = F4;
    fn neg(self) -> F4 {
        self
    }
}

impl Mul for F4 {
    type Output = F4;
    fn mul(self, rhs: F4) -> F4 {
        F4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl MulAssign for F4 {
    fn mul_assign(&mut self, rhs: F4) {
        *self = *self * rhs;
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "0",
            1 => "1",
            2 => "w",
            _ => "w2",
        })
    }
}

/// Hermitian form `sum x_i * y_i^2`.
pub fn hermitian(x: &[F4], y: &[F4]) -> F4 {
    assert_eq!(x.len(), y.len());
    x.iter().zip(y).fold(F4::ZERO, |acc, (&a, &b)| acc + a * b.conj())
}
