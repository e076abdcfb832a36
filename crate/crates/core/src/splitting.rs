//! Splittings `(X, S1, S2)` of the index set, their enumeration, the
//! canonical family for lengths `3^i * n1`, and the extension of a splitting
//! of length `n1` by one of length `n2`.

use crate::arith::{gcd, mult_order, pow_mod};
use crate::cyclotomic::{
    coset, coset_fixed, coset_partition, minus_two, multiplier, no_splitting_exists, omega_set, Ambient, CosetSet,
    Shift,
};
use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;

/// Enumeration refuses to materialise more than `2^MAX_PAIRS` splittings.
pub const MAX_PAIRS: u32 = 20;

/// A splitting `(X, S1, S2)` given by the multiplier `mu_{-2}`.
///
/// `S1` and `S2` are swapped by `mu_{-2}`, every coset in `X` is fixed by
/// it, and the three parts partition the index set. The trivial splitting
/// `(Omega, {}, {})` is only accepted where no other one exists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Splitting {
    pub x: CosetSet,
    pub s1: CosetSet,
    pub s2: CosetSet,
}

impl Splitting {
    /// Checked constructor; see [`validate`].
    pub fn new(x: CosetSet, s1: CosetSet, s2: CosetSet) -> Result<Splitting> {
        let sp = Splitting { x, s1, s2 };
        validate(&sp)?;
        Ok(sp)
    }

    pub fn ambient(&self) -> Ambient {
        self.x.ambient()
    }

    pub fn is_trivial(&self) -> bool {
        self.s1.is_empty() && self.s2.is_empty()
    }

    /// The splitting `(Omega, {}, {})`; errors when a proper one exists.
    pub fn trivial(amb: Ambient) -> Result<Splitting> {
        Splitting::new(omega_set(amb), CosetSet::empty(amb), CosetSet::empty(amb))
    }

    /// Rebuild from the odd-like defining set `S1` alone:
    /// `S2 = mu_{-2}(S1)` and `X` is the rest.
    pub fn from_odd_set(s1: CosetSet) -> Result<Splitting> {
        let amb = s1.ambient();
        let s2 = minus_two(&s1);
        let x = omega_set(amb).difference(&s1.union(&s2));
        Splitting::new(x, s1, s2)
    }

    /// The same splitting with `S1` and `S2` exchanged.
    pub fn swapped(&self) -> Splitting {
        Splitting { x: self.x.clone(), s1: self.s2.clone(), s2: self.s1.clone() }
    }
}

impl fmt::Display for Splitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X = {}; S1 = {}; S2 = {}", self.x, self.s1, self.s2)
    }
}

/// Check every splitting invariant, naming the first that fails.
pub fn validate(sp: &Splitting) -> Result<()> {
    let amb = sp.x.ambient();
    if sp.s1.ambient() != amb || sp.s2.ambient() != amb {
        return Err(Error::AmbientMismatch("splitting parts live in different rings".into()));
    }
    let bad = |m: &str| Err(Error::InvalidSplitting(m.to_string()));
    for (name, part) in [("X", &sp.x), ("S1", &sp.s1), ("S2", &sp.s2)] {
        if CosetSet::new(amb, part.members().to_vec()).is_err() {
            return bad(&format!("{name} is not a union of cosets"));
        }
    }
    if !sp.x.is_disjoint(&sp.s1) || !sp.x.is_disjoint(&sp.s2) || !sp.s1.is_disjoint(&sp.s2) {
        return bad("parts are not disjoint");
    }
    if sp.x.union(&sp.s1).union(&sp.s2) != omega_set(amb) {
        return bad("parts do not cover the index set");
    }
    if sp.is_trivial() {
        if !no_splitting_exists(amb) {
            return bad("trivial splitting used where a proper splitting exists");
        }
        return Ok(());
    }
    if sp.x.is_empty() || sp.s1.is_empty() || sp.s2.is_empty() {
        return bad("a part is empty");
    }
    if minus_two(&sp.s1) != sp.s2 {
        return bad("mu_{-2} does not map S1 onto S2");
    }
    for c in sp.x.cosets() {
        if minus_two(&c) != c {
            return bad(&format!("coset Z({}) in X is not fixed by mu_{{-2}}", c.leader().unwrap()));
        }
    }
    Ok(())
}

/// Streaming enumeration of all splittings of an ambient ring.
///
/// The fixed cosets form `X`; the other cosets pair up as `Z(b_i)` and
/// `Z(-2 b_i)` with `b_i` ascending. Splitting number `m` puts `Z(b_i)` in
/// `S1` when bit `i` of `m` (counting from the most significant of `k`
/// bits) is clear, so index 0 is the splitting with all `Z(b_i)` in `S1`.
#[derive(Debug, Clone)]
pub struct Splittings {
    amb: Ambient,
    x: CosetSet,
    pairs: Vec<(CosetSet, CosetSet)>,
    next: u64,
    end: u64,
}

impl Splittings {
    pub fn pair_count(&self) -> u32 {
        self.pairs.len() as u32
    }

    /// Total number of splittings: `2^k`, or 0 when every coset is fixed.
    pub fn total(&self) -> u128 {
        if self.pairs.is_empty() {
            0
        } else {
            1u128 << self.pairs.len()
        }
    }

    /// The splitting with the given enumeration index.
    pub fn get(&self, index: u128) -> Option<Splitting> {
        if index >= self.total() {
            return None;
        }
        let k = self.pairs.len();
        let mut s1 = CosetSet::empty(self.amb);
        let mut s2 = CosetSet::empty(self.amb);
        for (i, (b, c)) in self.pairs.iter().enumerate() {
            if (index >> (k - 1 - i)) & 1 == 0 {
                s1 = s1.union(b);
                s2 = s2.union(c);
            } else {
                s1 = s1.union(c);
                s2 = s2.union(b);
            }
        }
        Some(Splitting { x: self.x.clone(), s1, s2 })
    }
}

impl Iterator for Splittings {
    type Item = Splitting;
    fn next(&mut self) -> Option<Splitting> {
        if self.next >= self.end {
            return None;
        }
        let sp = self.get(self.next as u128);
        self.next += 1;
        sp
    }
}

/// Streaming enumerator over all non-trivial splittings; empty when every
/// coset is fixed by `-2` (use [`Splitting::trivial`] there).
pub fn splittings(amb: Ambient) -> Splittings {
    let mut x = CosetSet::empty(amb);
    let mut pairs = Vec::new();
    let mut used = CosetSet::empty(amb);
    for c in coset_partition(amb) {
        let b = c.leader().unwrap();
        if coset_fixed(amb, b) {
            x = x.union(&c);
            continue;
        }
        if used.contains(b) {
            continue;
        }
        let partner = minus_two(&c);
        used = used.union(&c).union(&partner);
        pairs.push((c, partner));
    }
    let end = match pairs.len() {
        0 => 0,
        k if k >= 64 => u64::MAX,
        k => 1u64 << k,
    };
    Splittings { amb, x, pairs, next: 0, end }
}

/// All splittings as a vector; refuses more than `2^MAX_PAIRS` of them.
pub fn enumerate(amb: Ambient) -> Result<Vec<Splitting>> {
    let it = splittings(amb);
    if it.pair_count() > MAX_PAIRS {
        return Err(Error::TooManySplittings(it.pair_count()));
    }
    Ok(it.collect())
}

/// `n1` is admissible when `gcd(n1, 2^(2j-1) + 1) = 1` for all
/// `1 <= j <= ord_{t n1}(4)`.
pub fn admissible(n1: u32, shift: Shift) -> bool {
    admissibility_witness(n1, shift).is_none()
}

/// The first `j` (with exponent and gcd) breaking admissibility.
fn admissibility_witness(n1: u32, shift: Shift) -> Option<(u32, u32, u64)> {
    let m = shift.order() as u64 * n1 as u64;
    let r = mult_order(4, m)? as u32;
    (1..=r).find_map(|j| {
        let e = 2 * j - 1;
        let v = (pow_mod(2, e as u64, n1 as u64) + 1) % n1 as u64;
        let g = gcd(v, n1 as u64);
        (g != 1).then_some((j, e, g))
    })
}

fn check_admissible(n1: u32, shift: Shift) -> Result<()> {
    match admissibility_witness(n1, shift) {
        None => Ok(()),
        Some((j, e, g)) => Err(Error::NotAdmissible { n1, j, e, g }),
    }
}

/// Write `n = 3^i * n1` with `3 !| n1`.
pub fn three_part(n: u32) -> (u32, u32) {
    let (mut i, mut n1) = (0, n);
    while n1 % 3 == 0 && n1 > 0 {
        n1 /= 3;
        i += 1;
    }
    (i, n1)
}

/// The canonical splitting for `n = 3^i * n1` with admissible `n1 > 1`.
///
/// For `a = w` the fixed part is the single coset `Z(n1)` or `Z(2 n1)`
/// (whichever lies in the index set); for `a = 1` it is the set of
/// multiples of `n1`. Either way `|X| = 3^i`.
pub fn canonical(amb: Ambient) -> Result<Splitting> {
    let n = amb.n();
    let (i, n1) = three_part(n);
    if n1 <= 1 {
        return Err(Error::NoCanonicalSplitting { n });
    }
    check_admissible(n1, amb.shift())?;
    let x = match amb.shift() {
        Shift::One => {
            let mults: Vec<u32> = (0..n).filter(|s| s % n1 == 0).collect();
            CosetSet::new(amb, mults)?
        }
        _ => {
            let lead = if n1 % 3 == 1 { n1 } else { 2 * n1 };
            coset(amb, lead)?
        }
    };
    debug_assert_eq!(x.len() as u32, 3u32.pow(i));
    let sp = splittings(amb).get(0).expect("at least one splitting");
    if sp.x != x {
        return Err(Error::InvalidSplitting(format!("fixed part {} differs from the expected {}", sp.x, x)));
    }
    Ok(sp)
}

fn map_part(part: &CosetSet, f: impl Fn(u32) -> Vec<u32>) -> Vec<u32> {
    part.iter().flat_map(f).collect()
}

/// Extend a splitting `T` of length `n1` by a splitting `U` of length `n2`
/// (same shift constant) to a splitting of length `n1 n2`.
///
/// `S_k = {c * i : i in T_k} + {i + j t n2 : i in U_k, 0 <= j < n1}` with
/// `c = n2` when `a = 1` or `n2 = 1 mod 3`, and `c = 2 n2` otherwise; `S_0`
/// takes only the `T_0` part. Requires `n2` admissible.
pub fn extend(t: &Splitting, u: &Splitting) -> Result<Splitting> {
    let (at, au) = (t.ambient(), u.ambient());
    if at.shift() != au.shift() {
        return Err(Error::AmbientMismatch("splittings use different shift constants".into()));
    }
    let shift = at.shift();
    let (n1, n2, tt) = (at.n(), au.n(), at.t());
    check_admissible(n2, shift)?;
    let amb = Ambient::new(n1 * n2, shift)?;
    let m = amb.modulus() as u64;
    let c = if shift == Shift::One || n2 % 3 == 1 { n2 as u64 } else { 2 * n2 as u64 };
    let t_part = |i: u32| vec![((c * i as u64) % m) as u32];
    let u_part = |i: u32| (0..n1).map(|j| ((i as u64 + j as u64 * (tt * n2) as u64) % m) as u32).collect::<Vec<_>>();
    let x = CosetSet::new(amb, map_part(&t.x, t_part))?;
    let mut s1 = map_part(&t.s1, t_part);
    s1.extend(map_part(&u.s1, u_part));
    let mut s2 = map_part(&t.s2, t_part);
    s2.extend(map_part(&u.s2, u_part));
    Splitting::new(x, CosetSet::new(amb, s1)?, CosetSet::new(amb, s2)?)
}

/// Lift a splitting `U` of length `n2` to length `m * n2` over the trivial
/// splitting of length `m`: every part becomes `{i + j t n2 : 0 <= j < m}`.
///
/// When `n2` is admissible this agrees with [`extend`] applied to the
/// trivial splitting; it also covers lengths like `n2 = 21` where the
/// multiplier part of [`extend`] would leave the index set.
pub fn lift(m: u32, u: &Splitting) -> Result<Splitting> {
    let au = u.ambient();
    let shift = au.shift();
    let tm = Ambient::new(m, shift)?;
    if !no_splitting_exists(tm) {
        return Err(Error::Precondition(format!(
            "{}*{m} does not divide 2^(2j-1)+1 for any j, so {m} has proper splittings",
            shift.order()
        )));
    }
    let n2 = au.n();
    let amb = Ambient::new(m * n2, shift)?;
    let md = amb.modulus() as u64;
    let step = (au.t() * n2) as u64;
    let up = |part: &CosetSet| {
        let v: Vec<u32> = part.iter().flat_map(|i| (0..m).map(move |j| ((i as u64 + j as u64 * step) % md) as u32)).collect();
        CosetSet::new(amb, v)
    };
    Splitting::new(up(&u.x)?, up(&u.s1)?, up(&u.s2)?)
}

/// Transport a splitting of a cyclic length `n` with `3 !| n` to the
/// `w`-constacyclic ring of the same length via the residue correspondence
/// `s <-> s'` with `s' = 1 mod 3`, `s' = s mod n`. The resulting codes are
/// monomially equivalent to the cyclic ones.
pub fn cyclic_to_omega(sp: &Splitting) -> Result<Splitting> {
    let amb = sp.ambient();
    let n = amb.n();
    if amb.shift() != Shift::One || n % 3 == 0 {
        return Err(Error::Precondition("needs a cyclic splitting of a length prime to 3".into()));
    }
    let target = Ambient::new(n, Shift::Omega)?;
    let map = |part: &CosetSet| {
        let v: Vec<u32> = part.iter().map(|s| (0..3).map(|q| s + q * n).find(|v| v % 3 == 1).unwrap()).collect();
        CosetSet::new(target, v)
    };
    Splitting::new(map(&sp.x)?, map(&sp.s1)?, map(&sp.s2)?)
}

/// Inverse of [`cyclic_to_omega`].
pub fn omega_to_cyclic(sp: &Splitting) -> Result<Splitting> {
    let amb = sp.ambient();
    let n = amb.n();
    if amb.shift() == Shift::One || n % 3 == 0 {
        return Err(Error::Precondition("needs a constacyclic splitting of a length prime to 3".into()));
    }
    let target = Ambient::new(n, Shift::One)?;
    let map = |part: &CosetSet| CosetSet::new(target, part.iter().map(|s| s % n).collect());
    Splitting::new(map(&sp.x)?, map(&sp.s1)?, map(&sp.s2)?)
}

/// Which of the two length families a generated length belongs to.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LengthKind {
    /// `3^i * n1` with admissible `n1 > 1`; carries the quantum dimension `3^i`.
    Duadic { dimension: u32 },
    /// `m` with `t m | 2^(2j-1) + 1`: no splitting, usable as a multiplier.
    Multiplier,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LengthRecord {
    pub n: u32,
    pub kind: LengthKind,
}

/// Lengths up to `limit` from both families, ascending (duadic first on ties).
pub fn generate_lengths(limit: u32, shift: Shift) -> Vec<LengthRecord> {
    let mut out = Vec::new();
    for n in (3..=limit).step_by(2) {
        let (i, n1) = three_part(n);
        if n1 > 1 && admissible(n1, shift) {
            out.push(LengthRecord { n, kind: LengthKind::Duadic { dimension: 3u32.pow(i) } });
        }
        if no_splitting_exists(Ambient::new(n, shift).unwrap()) {
            out.push(LengthRecord { n, kind: LengthKind::Multiplier });
        }
    }
    out
}

/// Multiplier-family lengths only.
pub fn multiplier_lengths(limit: u32, shift: Shift) -> Vec<u32> {
    generate_lengths(limit, shift).into_iter().filter(|r| r.kind == LengthKind::Multiplier).map(|r| r.n).collect()
}

/// Image of a coset set under a unit multiplier congruent to 1 mod `t`.
pub fn apply_multiplier(b: i64, sp: &Splitting) -> Result<Splitting> {
    Splitting::new(multiplier(b, &sp.x)?, multiplier(b, &sp.s1)?, multiplier(b, &sp.s2)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn amb(n: u32, s: Shift) -> Ambient {
        Ambient::new(n, s).unwrap()
    }

    #[test]
    fn length_five_omega() {
        let all = enumerate(amb(5, Shift::Omega)).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].x.members(), &[10]);
        assert_eq!(all[0].s1.members(), &[1, 4]);
        assert_eq!(all[0].s2.members(), &[7, 13]);
        assert_eq!(all[1], all[0].swapped());
    }

    #[test]
    fn length_fifteen_cyclic_first_splitting() {
        let sp = splittings(amb(15, Shift::One)).get(0).unwrap();
        assert_eq!(sp.s1.leaders(), vec![1, 2, 3]);
        assert_eq!(sp.x.leaders(), vec![0, 5, 10]);
    }

    #[test]
    fn no_splitting_lengths_enumerate_nothing() {
        for n in [9, 27, 81] {
            let a = amb(n, Shift::Omega);
            assert!(enumerate(a).unwrap().is_empty());
            assert!(Splitting::trivial(a).unwrap().is_trivial());
        }
        assert!(Splitting::trivial(amb(5, Shift::Omega)).is_err());
    }

    #[test]
    fn admissibility() {
        assert!(admissible(5, Shift::Omega));
        assert!(admissible(5, Shift::One));
        assert!(!admissible(11, Shift::Omega));
        assert!(!admissible(3, Shift::One));
        match check_admissible(11, Shift::Omega) {
            Err(Error::NotAdmissible { j, e, g, .. }) => {
                assert_eq!((j, e, g), (3, 5, 11));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn canonical_sizes() {
        for &(n, sh) in &[(15, Shift::Omega), (45, Shift::Omega), (15, Shift::One), (35, Shift::One), (5, Shift::Omega)] {
            let sp = canonical(amb(n, sh)).unwrap();
            let (i, n1) = three_part(n);
            assert_eq!(sp.x.len() as u32, 3u32.pow(i));
            assert_eq!(sp.s1.len() as u32, 3u32.pow(i) * (n1 - 1) / 2);
        }
        assert!(matches!(canonical(amb(33, Shift::Omega)), Err(Error::NotAdmissible { .. })));
        assert!(matches!(canonical(amb(27, Shift::Omega)), Err(Error::NoCanonicalSplitting { .. })));
    }

    #[test]
    fn extension_of_trivial_nine_by_five() {
        let t = Splitting::trivial(amb(3, Shift::Omega)).unwrap();
        let u = enumerate(amb(5, Shift::Omega)).unwrap().remove(0);
        let s = extend(&t, &u).unwrap();
        assert_eq!(s.ambient().n(), 15);
        assert_eq!(s.x.len(), 3);
        assert_eq!(s, lift(3, &u).unwrap());
    }

    #[test]
    fn extension_five_by_five_cyclic() {
        let t = splittings(amb(5, Shift::One)).get(0).unwrap();
        let s = extend(&t, &t).unwrap();
        assert_eq!(s.s1.leaders(), vec![1, 5]);
        assert_eq!(s.x.len(), 1);
    }

    #[test]
    fn lift_of_21_by_3() {
        let u = Splitting::from_odd_set(CosetSet::from_leaders(amb(21, Shift::Omega), &[1, 10, 13]).unwrap()).unwrap();
        let s = lift(3, &u).unwrap();
        assert_eq!(s.ambient().n(), 63);
        assert_eq!(s.x.len(), 9);
        assert!(extend(&Splitting::trivial(amb(3, Shift::Omega)).unwrap(), &u).is_err());
    }

    #[test]
    fn lengths_up_to_100() {
        let m = multiplier_lengths(100, Shift::One);
        assert_eq!(m, vec![3, 9, 11, 19, 27, 33, 43, 57, 59, 67, 81, 83, 99]);
        assert_eq!(multiplier_lengths(100, Shift::Omega), m);
        let dim_one: Vec<u32> = generate_lengths(50, Shift::One)
            .into_iter()
            .filter(|r| r.kind == LengthKind::Duadic { dimension: 1 })
            .map(|r| r.n)
            .collect();
        for n in [5, 7, 13, 17, 23, 25, 29, 35, 37, 41, 47, 49] {
            assert!(dim_one.contains(&n), "{n}");
        }
        assert!(!dim_one.contains(&11));
    }

    #[test]
    fn omega_transport_roundtrip() {
        for n in [5u32, 7, 13, 17, 25, 35] {
            for sp in splittings(amb(n, Shift::One)) {
                let w = cyclic_to_omega(&sp).unwrap();
                assert_eq!(omega_to_cyclic(&w).unwrap(), sp);
            }
        }
    }
}
