use super::f4::F4;
use super::poly::Poly;
use crate::arith::prime_factors_four_pow_minus_one;
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Element of GF(4^z) as a polynomial over GF(4) of degree < z, bit-sliced:
/// coefficient `i` is `bit_i(lo) + bit_i(hi) * w`.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExtElem {
    pub lo: u64,
    pub hi: u64,
}

impl ExtElem {
    pub const ZERO: ExtElem = ExtElem { lo: 0, hi: 0 };

    pub fn from_base(c: F4) -> ExtElem {
        ExtElem { lo: (c.bits() & 1) as u64, hi: (c.bits() >> 1) as u64 }
    }

    /// The GF(4) value if this element lies in the base field.
    pub fn as_base(self) -> Option<F4> {
        if self.lo >> 1 == 0 && self.hi >> 1 == 0 {
            Some(F4::from_bits((self.lo | (self.hi << 1)) as u8))
        } else {
            None
        }
    }

    pub fn is_zero(self) -> bool {
        self.lo == 0 && self.hi == 0
    }

    pub fn add(self, o: ExtElem) -> ExtElem {
        ExtElem { lo: self.lo ^ o.lo, hi: self.hi ^ o.hi }
    }
}

fn clmul(a: u64, b: u64) -> u128 {
    let a = a as u128;
    let mut acc = 0u128;
    let mut b = b;
    while b != 0 {
        let i = b.trailing_zeros();
        acc ^= a << i;
        b &= b - 1;
    }
    acc
}

/// GF(4^z) = GF(4)[x] / (m(x)) for a monic primitive `m` of degree `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    degree: u32,
    modulus: Poly,
    m_lo: u128,
    m_hi: u128,
}

impl ExtField {
    fn with_modulus(modulus: Poly) -> ExtField {
        let degree = modulus.degree().expect("nonzero modulus") as u32;
        let (mut m_lo, mut m_hi) = (0u128, 0u128);
        for (i, c) in modulus.coeffs().iter().enumerate() {
            m_lo |= ((c.bits() & 1) as u128) << i;
            m_hi |= ((c.bits() >> 1) as u128) << i;
        }
        ExtField { degree, modulus, m_lo, m_hi }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// `4^z - 1`, the order of the multiplicative group.
    pub fn group_order(&self) -> u128 {
        if self.degree == 64 {
            u128::MAX
        } else {
            (1u128 << (2 * self.degree)) - 1
        }
    }

    /// The class of `x`, a primitive element.
    pub fn generator(&self) -> ExtElem {
        if self.degree == 1 {
            // x = -m_0 in GF(4)[x]/(x + m_0)
            self.reduce(1 << 1, 0)
        } else {
            ExtElem { lo: 2, hi: 0 }
        }
    }

    pub fn one(&self) -> ExtElem {
        ExtElem { lo: 1, hi: 0 }
    }

    fn reduce(&self, mut lo: u128, mut hi: u128) -> ExtElem {
        let z = self.degree;
        let top = 127 - (lo | hi).leading_zeros().min(127);
        let mut d = top;
        while d >= z {
            let c = (((lo >> d) & 1) | (((hi >> d) & 1) << 1)) as u8;
            if c != 0 {
                let (ml, mh) = match c {
                    1 => (self.m_lo, self.m_hi),
                    2 => (self.m_hi, self.m_lo ^ self.m_hi),
                    _ => (self.m_lo ^ self.m_hi, self.m_lo),
                };
                let s = d - z;
                lo ^= ml << s;
                hi ^= mh << s;
            }
            if d == 0 {
                break;
            }
            d -= 1;
        }
        ExtElem { lo: lo as u64, hi: hi as u64 }
    }

    pub fn mul(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        // (a0 + w a1)(b0 + w b1) = (a0b0 + a1b1) + w((a0+a1)(b0+b1) + a0b0)
        let p00 = clmul(a.lo, b.lo);
        let p11 = clmul(a.hi, b.hi);
        let pmid = clmul(a.lo ^ a.hi, b.lo ^ b.hi);
        self.reduce(p00 ^ p11, pmid ^ p00)
    }

    pub fn pow(&self, a: ExtElem, mut e: u128) -> ExtElem {
        let mut acc = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Order of a nonzero element (divides `4^z - 1`).
    pub fn order(&self, a: ExtElem) -> u128 {
        let mut ord = self.group_order();
        for p in prime_factors_four_pow_minus_one(self.degree) {
            let p = p as u128;
            while ord % p == 0 && self.pow(a, ord / p) == self.one() {
                ord /= p;
            }
        }
        ord
    }

    fn is_primitive(&self) -> bool {
        let x = self.generator();
        if x.is_zero() || self.pow(x, self.group_order()) != self.one() {
            return false;
        }
        let n = self.group_order();
        prime_factors_four_pow_minus_one(self.degree)
            .into_iter()
            .all(|p| self.pow(x, n / p as u128) != self.one())
    }
}

/// The extension GF(4^z) with the lexicographically smallest monic
/// primitive modulus, coefficients compared from the constant term upward
/// in the order 0 < 1 < w < w^2. Results are memoised per degree.
pub fn build_extension(z: u32) -> Result<Arc<ExtField>> {
    if z == 0 || z > 64 {
        return Err(Error::ExtensionTooLarge(z));
    }
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<ExtField>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&z) {
        return Ok(f.clone());
    }
    let field = Arc::new(search_primitive(z));
    cache.lock().unwrap().insert(z, field.clone());
    Ok(field)
}

fn search_primitive(z: u32) -> ExtField {
    // digits (c_0, ..., c_{z-1}) with c_0 most significant. The constant
    // term of a primitive polynomial is the norm of a generator of the
    // multiplicative group, so it has order 3: c_0 in {w, w^2}.
    let mut digits = vec![0u8; z as usize];
    digits[0] = 2;
    loop {
        let mut coeffs: Vec<F4> = digits.iter().map(|&d| F4::from_bits(d)).collect();
        coeffs.push(F4::ONE);
        let field = ExtField::with_modulus(Poly::new(coeffs));
        if field.is_primitive() {
            return field;
        }
        let mut i = z as usize - 1;
        loop {
            if digits[i] < 3 {
                digits[i] += 1;
                break;
            }
            digits[i] = 0;
            assert!(i > 0, "no primitive polynomial of degree {z}");
            i -= 1;
        }
    }
}

/// Multiply a polynomial with `ExtElem` coefficients by `(x - beta)`.
pub(crate) fn mul_linear(field: &ExtField, p: &[ExtElem], beta: ExtElem) -> Vec<ExtElem> {
    let mut out = vec![ExtElem::ZERO; p.len() + 1];
    for (i, &c) in p.iter().enumerate() {
        out[i + 1] = out[i + 1].add(c);
        out[i] = out[i].add(field.mul(c, beta));
    }
    out
}
