use crate::field::F4;
use std::ops::BitXor;

/// A GF(4) vector of length at most 128 in two bit planes; symbol `i` is
/// `bit_i(lo) + bit_i(hi) * w`. Weight is `popcount(lo | hi)`.
#[derive(Debug, Copy, Clone, Default, PartialEq, Eq, Hash)]
pub struct Packed {
    pub lo: u128,
    pub hi: u128,
}

impl Packed {
    pub fn from_symbols(v: &[F4]) -> Packed {
        assert!(v.len() <= 128);
        let mut p = Packed::default();
        for (i, c) in v.iter().enumerate() {
            p.lo |= ((c.bits() & 1) as u128) << i;
            p.hi |= ((c.bits() >> 1) as u128) << i;
        }
        p
    }

    pub fn unit(i: usize) -> Packed {
        Packed { lo: 1 << i, hi: 0 }
    }

    pub fn to_symbols(self, n: usize) -> Vec<F4> {
        (0..n).map(|i| self.get(i)).collect()
    }

    #[inline]
    pub fn support(self) -> u128 {
        self.lo | self.hi
    }

    #[inline]
    pub fn weight(self) -> u32 {
        self.support().count_ones()
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.support() == 0
    }

    pub fn get(self, i: usize) -> F4 {
        F4::from_bits((((self.lo >> i) & 1) | (((self.hi >> i) & 1) << 1)) as u8)
    }

    /// Multiply every symbol by `c`.
    #[inline]
    pub fn scale(self, c: F4) -> Packed {
        let (l, h) = (self.lo, self.hi);
        match c.bits() {
            0 => Packed::default(),
            1 => self,
            2 => Packed { lo: h, hi: l ^ h },
            _ => Packed { lo: l ^ h, hi: l },
        }
    }
}

impl BitXor for Packed {
    type Output = Packed;
    #[inline]
    fn bitxor(self, o: Packed) -> Packed {
        Packed { lo: self.lo ^ o.lo, hi: self.hi ^ o.hi }
    }
}

/// A generator row with a tag recording its coordinates on the basis
/// vectors that complete the inner code; a combination is outside the
/// inner code iff its tag is nonzero.
#[derive(Debug, Copy, Clone, Default, PartialEq, Eq)]
pub struct Row {
    pub word: Packed,
    pub tag: Packed,
}

impl Row {
    #[inline]
    pub fn scale(self, c: F4) -> Row {
        Row { word: self.word.scale(c), tag: self.tag.scale(c) }
    }
}

impl BitXor for Row {
    type Output = Row;
    #[inline]
    fn bitxor(self, o: Row) -> Row {
        Row { word: self.word ^ o.word, tag: self.tag ^ o.tag }
    }
}

/// Reduce `rows` to systematic form, choosing pivot columns in the given
/// preference order. Returns the pivot columns, one per row.
pub fn systematize(rows: &mut [Row], order: &[usize]) -> Vec<usize> {
    let k = rows.len();
    let mut pivots = Vec::with_capacity(k);
    for &col in order {
        let r = pivots.len();
        if r == k {
            break;
        }
        let Some(p) = (r..k).find(|&i| !rows[i].word.get(col).is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r].word.get(col).inv().unwrap();
        rows[r] = rows[r].scale(inv);
        let pivot = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let c = row.word.get(col);
            if !c.is_zero() {
                *row = *row ^ pivot.scale(c);
            }
        }
        pivots.push(col);
    }
    pivots
}
