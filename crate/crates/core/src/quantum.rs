//! Binary stabilizer code parameters `[[n, k, d]]` from classical witnesses.
//!
//! Distances that are not certified are carried as bound pairs. A code is
//! marked degenerate only when a stabilizer-side codeword lighter than the
//! certified lower bound on `d` has actually been found, or when a product
//! law guarantees one.

use crate::code::{bch_bound, build, duadic_pair, hermitian_dual_set, is_dual_containing, ConstaCode, DuadicPair, Side};
use crate::cyclotomic::{minus_two, Ambient, CosetSet, Shift};
use crate::error::{Error, Result};
use crate::splitting::{admissible, cyclic_to_omega, extend, lift, Splitting};
use crate::weights::{nested_search, sqrt_bound, Distance, Method, SearchConfig, WeightReport};
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Deserialize)]
#[serde(from = "Option<bool>")]
pub enum Degeneracy {
    Yes,
    No,
    Unknown,
}

impl From<Option<bool>> for Degeneracy {
    fn from(v: Option<bool>) -> Self {
        match v {
            Some(true) => Degeneracy::Yes,
            Some(false) => Degeneracy::No,
            None => Degeneracy::Unknown,
        }
    }
}

impl Degeneracy {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Degeneracy::Yes => Some(true),
            Degeneracy::No => Some(false),
            Degeneracy::Unknown => None,
        }
    }
}

impl Serialize for Degeneracy {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_bool().serialize(s)
    }
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Degeneracy::Yes => "yes",
            Degeneracy::No => "no",
            Degeneracy::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    DualContaining,
    SelfDual,
    LisonekExtension,
    Duadic,
    #[serde(rename = "product_rule_1")]
    ProductRule1,
    #[serde(rename = "product_rule_2")]
    ProductRule2,
    BchFamily,
}

impl Construction {
    pub const ALL: [Construction; 7] = [
        Construction::DualContaining,
        Construction::SelfDual,
        Construction::LisonekExtension,
        Construction::Duadic,
        Construction::ProductRule1,
        Construction::ProductRule2,
        Construction::BchFamily,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Construction::DualContaining => "dual_containing",
            Construction::SelfDual => "self_dual",
            Construction::LisonekExtension => "lisonek_extension",
            Construction::Duadic => "duadic",
            Construction::ProductRule1 => "product_rule_1",
            Construction::ProductRule2 => "product_rule_2",
            Construction::BchFamily => "bch_family",
        }
    }
}

impl std::str::FromStr for Construction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Construction::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown construction `{s}`")))
    }
}

/// How the reported distance was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certification {
    Exhaustive,
    LowWeightSearch,
    BoundOnly,
    /// Derived from the factors by a product law, without search.
    Composition,
}

impl Certification {
    fn of(r: &WeightReport) -> Certification {
        match r.method {
            Method::Exhaustive => Certification::Exhaustive,
            Method::LowWeightSearch { .. } => Certification::LowWeightSearch,
            Method::BoundOnly => Certification::BoundOnly,
        }
    }
}

/// Parameters of a stabilizer code and the classical code behind them.
///
/// `leaders` are the coset leaders of the witness code's defining set in the
/// ring of length `witness_n`; for duadic constructions that is `S1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumParams {
    pub n: u32,
    pub k: u32,
    pub d: Distance,
    pub degenerate: Degeneracy,
    pub construction: Construction,
    pub shift: Shift,
    pub witness_n: u32,
    pub leaders: Vec<u32>,
    pub splitting: Option<Splitting>,
    pub method: Certification,
    pub notes: Vec<String>,
}

impl QuantumParams {
    pub fn is_certified(&self) -> bool {
        self.d.is_exact()
    }

    /// `[[n,k,d]]`, with `d` as `lo..hi` or `>=lo` when not certified.
    pub fn bracket(&self) -> String {
        format!("[[{},{},{}]]", self.n, self.k, self.d)
    }
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} degenerate={} via {}", self.bracket(), self.degenerate, self.construction.as_str())
    }
}

fn params(n: u32, k: u32, d: Distance, construction: Construction, code_set: &CosetSet, method: Certification) -> QuantumParams {
    let amb = code_set.ambient();
    QuantumParams {
        n,
        k,
        d,
        degenerate: Degeneracy::Unknown,
        construction,
        shift: amb.shift(),
        witness_n: amb.n(),
        leaders: code_set.leaders(),
        splitting: None,
        method,
        notes: Vec::new(),
    }
}

/// Degeneracy of a quantum code whose distance is the minimum weight of
/// `C \ D` (`d`), given a search over `C` that also tracked `D`.
fn degeneracy(r: &WeightReport, d: Distance) -> Degeneracy {
    if r.min_inner_found.is_some_and(|w| w < d.lower()) {
        return Degeneracy::Yes;
    }
    match (r.d, d.upper()) {
        (Some(dc), Some(u)) if dc.lower() >= u => Degeneracy::No,
        (None, _) => Degeneracy::No,
        _ => Degeneracy::Unknown,
    }
}

/// Search that falls back to the BCH bound when the length is beyond the
/// packed kernel.
fn search_or_bch(outer: &ConstaCode, inner: Option<&ConstaCode>, cfg: &SearchConfig) -> Result<WeightReport> {
    match nested_search(outer, inner, None, cfg) {
        Err(Error::LengthTooLarge(_)) => {
            let floor = Distance::Bounds { lower: bch_bound(outer.defining_set()), upper: None };
            Ok(WeightReport {
                d: (outer.dimension() > 0).then_some(floor),
                d_odd: inner.map(|_| floor),
                min_inner_found: None,
                method: Method::BoundOnly,
                enumerated: 0,
                weight_counts: Default::default(),
                counts_complete_through: None,
                certified: false,
            })
        }
        r => r,
    }
}

fn stabilizer_from(c: &ConstaCode, d: &ConstaCode, construction: Construction, cfg: &SearchConfig) -> Result<QuantumParams> {
    let n = c.n();
    let k = 2 * c.dimension() - n;
    let strict = c.defining_set() != d.defining_set();
    let r = search_or_bch(c, strict.then_some(d), cfg)?;
    let dist = if strict { r.d_odd } else { r.d }.unwrap_or(Distance::Exact(n + 1));
    let mut q = params(n, k, dist, construction, c.defining_set(), Certification::of(&r));
    q.degenerate = if strict { degeneracy(&r, dist) } else if dist.is_exact() { Degeneracy::No } else { Degeneracy::Unknown };
    Ok(q)
}

/// `[[n, 2 dim - n, d]]` from a Hermitian dual-containing code, with `d` the
/// minimum weight of `C \ C^perp_h` (or `d(C)` when `C` is self-dual).
pub fn from_dual_containing(c: &ConstaCode, cfg: &SearchConfig) -> Result<QuantumParams> {
    if !is_dual_containing(c.defining_set()) {
        return Err(Error::NotDualContaining);
    }
    let dual = build(c.ambient(), &hermitian_dual_set(c.defining_set()))?;
    stabilizer_from(c, &dual, Construction::DualContaining, cfg)
}

/// `[[n, |X|, d_o(C)]]` from the odd-like code of a splitting, with the
/// square-root floor attached.
pub fn duadic_quantum(sp: &Splitting, cfg: &SearchConfig) -> Result<QuantumParams> {
    let pair = duadic_pair(sp, Side::S1)?;
    let mut q = stabilizer_from(&pair.odd, &pair.even, Construction::Duadic, cfg)?;
    q.d = q.d.with_floor(sqrt_bound(sp));
    q.splitting = Some(sp.clone());
    Ok(q)
}

/// `[[n + |X|, 0, d]]` from the even-like code, `d` even and at least
/// `min{d(D), d(C) + 1}`. The value is exact only when both terms are
/// certified and equal.
pub fn self_dual_from_even(pair: &DuadicPair, cfg: &SearchConfig) -> Result<QuantumParams> {
    let sp = &pair.splitting;
    let n = sp.ambient().n();
    let dd = search_or_bch(&pair.even, None, cfg)?;
    let dc = search_or_bch(&pair.odd, None, cfg)?;
    let full = Distance::Exact(n + 1);
    let (dd, dc) = (dd.d.unwrap_or(full), dc.d.unwrap_or(full));
    let even_up = |v: u32| v + (v & 1);
    let lower = even_up(dd.lower().min(dc.lower() + 1));
    let d = match (dd.exact(), dc.exact()) {
        (Some(a), Some(b)) if a == b + 1 => Distance::Exact(a),
        _ => Distance::Bounds { lower, upper: None },
    };
    let method = if d.is_exact() { Certification::Exhaustive } else { Certification::BoundOnly };
    let mut q = params(n + sp.x.len() as u32, 0, d, Construction::SelfDual, pair.odd.defining_set(), method);
    q.degenerate = if d.is_exact() { Degeneracy::No } else { Degeneracy::Unknown };
    q.splitting = Some(sp.clone());
    Ok(q)
}

/// `[[n + e, 2 dim - n + e, d]]` with `e = |A /\ -2A|` and
/// `d >= min{d(C), d(C + C^perp_h) + 1}`.
pub fn lisonek_extension(c: &ConstaCode, cfg: &SearchConfig) -> Result<QuantumParams> {
    let a = c.defining_set();
    let e = a.intersection(&minus_two(a)).len() as u32;
    if e == 0 {
        let mut q = from_dual_containing(c, cfg)?;
        q.construction = Construction::LisonekExtension;
        return Ok(q);
    }
    let n = c.n();
    let sum_set = a.difference(&minus_two(a));
    let sum = build(c.ambient(), &sum_set)?;
    let rc = search_or_bch(c, None, cfg)?;
    let rs = search_or_bch(&sum, None, cfg)?;
    let full = Distance::Exact(n + 1);
    let dc = rc.d.unwrap_or(full).with_floor(bch_bound(a));
    let ds = rs.d.unwrap_or(full).with_floor(bch_bound(&sum_set));
    let lower = dc.lower().min(ds.lower() + 1);
    let k = (2 * c.dimension() + e).checked_sub(n).ok_or_else(|| Error::Precondition("code too small for a nonnegative dimension".into()))?;
    let mut q = params(n + e, k, Distance::Bounds { lower, upper: None }, Construction::LisonekExtension, a, Certification::BoundOnly);
    let rel = |d: Distance| if d.is_exact() { format!("= {d}") } else { format!("in {d}") };
    q.notes.push(format!("e = {e}; d(C) {}; d(C + C^perp_h) {}", rel(dc), rel(ds)));
    Ok(q)
}

/// The cyclic code of length `5 * 3^i` used by the BCH family, with its
/// defining set `{l + 15 j : l in Z(1) u Z(2) u Z(3) mod 15, j < 3^(i-1)} u {0}`.
pub fn bch_family_code(i: u32) -> Result<ConstaCode> {
    if i == 0 {
        return Err(Error::Precondition("family index must be at least 1".into()));
    }
    let reps = 3u32.checked_pow(i - 1).filter(|&r| r <= 3u32.pow(9)).ok_or(Error::LengthTooLarge(u32::MAX))?;
    let n = 15 * reps;
    let amb = Ambient::new(n, Shift::One)?;
    let base = [1u32, 4, 2, 8, 3, 12];
    let mut set: Vec<u32> = (0..reps).flat_map(|j| base.iter().map(move |&l| l + 15 * j)).collect();
    set.push(0);
    build(amb, &CosetSet::new(amb, set)?)
}

/// `[[5 * 3^i + 1, 3^i - 1, >= 6]]` by extending the family code.
pub fn bch_family(i: u32, cfg: &SearchConfig) -> Result<QuantumParams> {
    let c = bch_family_code(i)?;
    let mut q = lisonek_extension(&c, cfg)?;
    q.construction = Construction::BchFamily;
    Ok(q)
}

fn same_shift(left: &Splitting, right: &Splitting) -> Result<(Splitting, Splitting, Option<String>)> {
    let (a1, a2) = (left.ambient(), right.ambient());
    if a1.shift() == a2.shift() {
        return Ok((left.clone(), right.clone(), None));
    }
    match (a1.shift(), a2.shift()) {
        (Shift::Omega, Shift::One) if a2.n() % 3 != 0 => {
            Ok((left.clone(), cyclic_to_omega(right)?, Some(format!("length {} carried to the omega ring", a2.n()))))
        }
        (Shift::One, Shift::Omega) if a1.n() % 3 != 0 => {
            Ok((cyclic_to_omega(left)?, right.clone(), Some(format!("length {} carried to the omega ring", a1.n()))))
        }
        _ => Err(Error::AmbientMismatch(format!("cannot combine shifts {} and {}", a1.shift(), a2.shift()))),
    }
}

fn need_splitting(q: &QuantumParams) -> Result<&Splitting> {
    q.splitting.as_ref().ok_or_else(|| Error::Precondition(format!("{} carries no splitting", q.bracket())))
}

fn mul_distance(a: Distance, b: Distance) -> Distance {
    match (a, b) {
        (Distance::Exact(x), Distance::Exact(y)) => Distance::Exact(x * y),
        _ => Distance::Bounds { lower: a.lower() * b.lower(), upper: a.upper().zip(b.upper()).map(|(x, y)| x * y) },
    }
}

/// Product of a duadic code `Q1` with a non-degenerate one-dimensional
/// duadic code `Q2` of admissible length: `[[n1 n2, k1, d1 d2]]`, built on
/// the extended splitting. Degenerate whenever `n2 <= d1 d2`, since the
/// extended even-like code then has a word of weight below `n2`.
pub fn product_rule(q1: &QuantumParams, q2: &QuantumParams) -> Result<QuantumParams> {
    if q2.k != 1 {
        return Err(Error::Precondition(format!("right factor {} must have dimension 1", q2.bracket())));
    }
    if q2.degenerate != Degeneracy::No || !q2.d.is_exact() {
        return Err(Error::Precondition(format!("right factor {} must be certified non-degenerate", q2.bracket())));
    }
    let (t, u, note) = same_shift(need_splitting(q1)?, need_splitting(q2)?)?;
    let n2 = u.ambient().n();
    if !admissible(n2, u.ambient().shift()) {
        return Err(Error::Precondition(format!("right length {n2} is not admissible for extension")));
    }
    let sp = extend(&t, &u)?;
    let k = sp.x.len() as u32;
    if k != q1.k {
        return Err(Error::Precondition(format!("extended splitting has |S0| = {k}, expected {}", q1.k)));
    }
    let d = mul_distance(q1.d, q2.d);
    let mut q = params(sp.ambient().n(), k, d, Construction::ProductRule1, &sp.s1, Certification::Composition);
    q.degenerate = if n2 <= d.lower() { Degeneracy::Yes } else { Degeneracy::Unknown };
    q.splitting = Some(sp);
    q.notes.push(format!("{} x {}", q1.bracket(), q2.bracket()));
    q.notes.extend(note);
    if !q1.is_certified() || !q2.is_certified() {
        q.notes.push("factor distances not certified here".into());
    }
    Ok(q)
}

/// Lift of a duadic code `Q2` over the trivial splitting of a multiplier
/// length `m`: `[[m n2, m k2, d2]]`, degeneracy inherited from `Q2`.
pub fn multiplier_product(m: u32, q2: &QuantumParams) -> Result<QuantumParams> {
    let u = need_splitting(q2)?;
    let sp = lift(m, u)?;
    let k = sp.x.len() as u32;
    let mut q = params(sp.ambient().n(), k, q2.d, Construction::ProductRule2, &sp.s1, Certification::Composition);
    q.degenerate = q2.degenerate;
    q.splitting = Some(sp);
    q.notes.push(format!("{m} x {}", q2.bracket()));
    Ok(q)
}

/// A factor whose parameters are taken as given (for example from a
/// catalog), attached to its splitting.
pub fn catalogued(sp: &Splitting, d: Distance, degenerate: Degeneracy) -> Result<QuantumParams> {
    if sp.is_trivial() {
        return Err(Error::Precondition("the trivial splitting defines no duadic code".into()));
    }
    let mut q = params(sp.ambient().n(), sp.x.len() as u32, d, Construction::Duadic, &sp.s1, Certification::Composition);
    q.degenerate = degenerate;
    q.splitting = Some(sp.clone());
    Ok(q)
}
