//! Index sets, 4-cyclotomic cosets and multipliers for `x^n - a`.
//!
//! For shift constant `a` of order `t` the roots of `x^n - a` are
//! `alpha^s` with `s` in the index set `{kt + 1 mod tn : 0 <= k < n}`.

use crate::arith::{gcd, mult_order, pow_mod};
use crate::error::{Error, Result};
use crate::field::F4;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Shift constant of the constacyclic ring.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shift {
    #[serde(rename = "1")]
    One,
    Omega,
    Omega2,
}

impl Shift {
    pub fn value(self) -> F4 {
        match self {
            Shift::One => F4::ONE,
            Shift::Omega => F4::W,
            Shift::Omega2 => F4::W2,
        }
    }

    /// Multiplicative order of the shift constant.
    pub fn order(self) -> u32 {
        match self {
            Shift::One => 1,
            _ => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Shift::One => "1",
            Shift::Omega => "omega",
            Shift::Omega2 => "omega2",
        }
    }
}

impl fmt::Display for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Shift {
    type Err = Error;
    fn from_str(s: &str) -> Result<Shift> {
        match s.trim().to_ascii_lowercase().as_str() {
            "1" | "one" | "cyclic" => Ok(Shift::One),
            "omega" | "w" => Ok(Shift::Omega),
            "omega2" | "w2" | "omega^2" | "w^2" => Ok(Shift::Omega2),
            other => Err(Error::Parse(format!("unknown shift constant `{other}` (use 1, omega, omega2)"))),
        }
    }
}

/// The ring `GF(4)[x]/(x^n - a)` seen through its index set.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash)]
pub struct Ambient {
    n: u32,
    shift: Shift,
    modulus: u32,
    r: u32,
}

impl Ambient {
    pub fn new(n: u32, shift: Shift) -> Result<Ambient> {
        if n == 0 || n % 2 == 0 {
            return Err(Error::EvenLength(n));
        }
        let modulus = shift.order() * n;
        let r = mult_order(4, modulus as u64).unwrap() as u32;
        Ok(Ambient { n, shift, modulus, r })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn shift(&self) -> Shift {
        self.shift
    }

    pub fn t(&self) -> u32 {
        self.shift.order()
    }

    /// `tn`, the modulus of the index arithmetic.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// `ord_{tn}(4)`, the degree of the splitting field over GF(4).
    pub fn ext_degree(&self) -> u32 {
        self.r
    }

    pub fn contains(&self, s: u32) -> bool {
        s < self.modulus && s % self.t() == 1 % self.t()
    }

    pub fn reduce(&self, s: i64) -> u32 {
        s.rem_euclid(self.modulus as i64) as u32
    }

    /// The multiplier `-2` normalised to `tn - 2`.
    pub fn minus_two(&self) -> u32 {
        self.reduce(-2)
    }
}

/// A union of 4-cyclotomic cosets inside the index set, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CosetSet {
    amb: Ambient,
    members: Vec<u32>,
}

impl CosetSet {
    pub fn empty(amb: Ambient) -> CosetSet {
        CosetSet { amb, members: Vec::new() }
    }

    /// Checked constructor: every residue must lie in the index set and the
    /// set must be closed under multiplication by 4.
    pub fn new(amb: Ambient, mut members: Vec<u32>) -> Result<CosetSet> {
        members.sort_unstable();
        members.dedup();
        for &s in &members {
            if !amb.contains(s) {
                return Err(Error::NotInIndexSet(s));
            }
        }
        let set = CosetSet { amb, members };
        for &s in &set.members {
            if !set.contains(((4 * s as u64) % amb.modulus as u64) as u32) {
                return Err(Error::NotCosetClosed(s));
            }
        }
        Ok(set)
    }

    /// Union of the cosets of the given representatives.
    pub fn from_leaders(amb: Ambient, reps: &[u32]) -> Result<CosetSet> {
        let mut acc = CosetSet::empty(amb);
        for &s in reps {
            acc = acc.union(&coset(amb, s)?);
        }
        Ok(acc)
    }

    pub fn ambient(&self) -> Ambient {
        self.amb
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: u32) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter().copied()
    }

    /// Smallest element; the coset leader when the set is a single coset.
    pub fn leader(&self) -> Option<u32> {
        self.members.first().copied()
    }

    fn merge(&self, other: &CosetSet, keep: impl Fn(bool, bool) -> bool) -> CosetSet {
        assert_eq!(self.amb, other.amb, "coset sets from different ambients");
        let (a, b) = (&self.members, &other.members);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        while i < a.len() || j < b.len() {
            let (x, in_a, in_b) = match (a.get(i), b.get(j)) {
                (Some(&x), Some(&y)) if x == y => {
                    i += 1;
                    j += 1;
                    (x, true, true)
                }
                (Some(&x), Some(&y)) if x < y => {
                    i += 1;
                    (x, true, false)
                }
                (Some(&x), None) => {
                    i += 1;
                    (x, true, false)
                }
                (_, Some(&y)) => {
                    j += 1;
                    (y, false, true)
                }
                (None, None) => unreachable!(),
            };
            if keep(in_a, in_b) {
                out.push(x);
            }
        }
        CosetSet { amb: self.amb, members: out }
    }

    pub fn union(&self, other: &CosetSet) -> CosetSet {
        self.merge(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &CosetSet) -> CosetSet {
        self.merge(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &CosetSet) -> CosetSet {
        self.merge(other, |a, b| a && !b)
    }

    pub fn is_disjoint(&self, other: &CosetSet) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn is_subset(&self, other: &CosetSet) -> bool {
        self.difference(other).is_empty()
    }

    /// Split into the constituent cosets, ordered by leader.
    pub fn cosets(&self) -> Vec<CosetSet> {
        let mut seen = vec![false; self.amb.modulus as usize];
        let mut out = Vec::new();
        for &s in &self.members {
            if seen[s as usize] {
                continue;
            }
            let c = coset_unchecked(self.amb, s);
            for &m in &c.members {
                seen[m as usize] = true;
            }
            out.push(c);
        }
        out
    }

    pub fn leaders(&self) -> Vec<u32> {
        self.cosets().iter().map(|c| c.members[0]).collect()
    }
}

impl fmt::Display for CosetSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let leaders = self.leaders();
        if leaders.is_empty() {
            return f.write_str("{}");
        }
        let parts: Vec<String> = leaders.iter().map(|l| format!("Z({l})")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The full index set.
pub fn omega_set(amb: Ambient) -> CosetSet {
    let t = amb.t();
    CosetSet { amb, members: (0..amb.n).map(|k| k * t + 1 % t).collect() }
}

fn coset_unchecked(amb: Ambient, s: u32) -> CosetSet {
    let m = amb.modulus as u64;
    let mut members = vec![s];
    let mut x = (4 * s as u64 % m) as u32;
    while x != s {
        members.push(x);
        x = (4 * x as u64 % m) as u32;
    }
    members.sort_unstable();
    CosetSet { amb, members }
}

/// The coset `Z(s) = {s 4^j mod tn}`.
pub fn coset(amb: Ambient, s: u32) -> Result<CosetSet> {
    if !amb.contains(s) {
        return Err(Error::NotInIndexSet(s));
    }
    Ok(coset_unchecked(amb, s))
}

/// All cosets of the index set, ordered by leader.
pub fn coset_partition(amb: Ambient) -> Vec<CosetSet> {
    omega_set(amb).cosets()
}

/// Image of `set` under `mu_b : s -> bs mod tn`.
pub fn multiplier(b: i64, set: &CosetSet) -> Result<CosetSet> {
    let amb = set.amb;
    let bm = amb.reduce(b);
    if gcd(bm as u64, amb.modulus as u64) != 1 {
        return Err(Error::NotAUnit { b, modulus: amb.modulus });
    }
    let mut members: Vec<u32> = set.members.iter().map(|&s| ((s as u64 * bm as u64) % amb.modulus as u64) as u32).collect();
    members.sort_unstable();
    if members.iter().any(|&s| !amb.contains(s)) {
        return Err(Error::Precondition(format!("multiplier {b} does not preserve the index set")));
    }
    Ok(CosetSet { amb, members })
}

/// Image under `mu_{-2}`; always defined since `tn` is odd and `-2 = 1 mod 3`.
pub fn minus_two(set: &CosetSet) -> CosetSet {
    multiplier(set.amb.minus_two() as i64, set).expect("-2 is a unit preserving the index set")
}

/// True when every coset is fixed by `mu_{-2}`, i.e. no splitting exists:
/// `tn | 2^(2j-1) + 1` for some `1 <= j <= ord_{tn}(4)`.
pub fn no_splitting_exists(amb: Ambient) -> bool {
    divides_some_odd_power_plus_one(amb.modulus as u64, amb.r)
}

fn divides_some_odd_power_plus_one(m: u64, r: u32) -> bool {
    (1..=r as u64).any(|j| (pow_mod(2, 2 * j - 1, m) + 1) % m == 0)
}

/// Whether `mu_{-2}` fixes `Z(s)`: with `m = gcd(n, s)`,
/// iff `tn/m | 2^(2j-1) + 1` for some `1 <= j <= ord_{tn}(4)`.
pub fn coset_fixed(amb: Ambient, s: u32) -> bool {
    let m = gcd(amb.n as u64, s as u64);
    divides_some_odd_power_plus_one(amb.modulus as u64 / m, amb.r)
}

/// Direct check of `mu_{-2}(Z(s)) = Z(s)` by comparing the sets.
pub fn coset_fixed_direct(amb: Ambient, s: u32) -> bool {
    let z = coset_unchecked(amb, s);
    minus_two(&z) == z
}
