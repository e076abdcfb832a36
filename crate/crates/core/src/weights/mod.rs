//! Minimum distances, odd-like minimum weights and weight counts.
//!
//! Codes of dimension `k` with `4^k` within budget are scanned exhaustively.
//! Larger ones use an information-set search: messages of increasing weight
//! are enumerated on several systematic generator matrices until the
//! lightest word found meets the lower bound implied by what has been
//! enumerated, or the budget runs out. Uncertified results are reported as
//! bound pairs, never as exact values.

mod packed;
mod par;
mod search;

pub use packed::{systematize, Packed, Row};
pub use par::default_workers;

use crate::arith::ceil_sqrt;
use crate::code::{bch_bound, ConstaCode, DuadicPair};
use crate::cyclotomic::omega_set;
use crate::error::{Error, Result};
use crate::field::{Poly, F4};
use crate::splitting::Splitting;
use search::{exhaustive, InfoSets, Tally};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Default number of codeword visits before a search gives up.
pub const DEFAULT_BUDGET: u64 = 1 << 28;

/// A distance that is either certified or known only within bounds.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Distance {
    Exact(u32),
    Bounds { lower: u32, upper: Option<u32> },
}

impl Distance {
    pub fn lower(&self) -> u32 {
        match *self {
            Distance::Exact(d) => d,
            Distance::Bounds { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> Option<u32> {
        match *self {
            Distance::Exact(d) => Some(d),
            Distance::Bounds { upper, .. } => upper,
        }
    }

    pub fn exact(&self) -> Option<u32> {
        match *self {
            Distance::Exact(d) => Some(d),
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Distance::Exact(_))
    }

    /// Combine with an extra certified lower bound.
    pub fn with_floor(self, floor: u32) -> Distance {
        match self {
            Distance::Exact(d) => Distance::Exact(d),
            Distance::Bounds { lower, upper } => {
                let lower = lower.max(floor);
                match upper {
                    Some(u) if u <= lower => Distance::Exact(u),
                    _ => Distance::Bounds { lower, upper },
                }
            }
        }
    }

    /// Whether `d` is consistent with these bounds.
    pub fn admits(&self, d: u32) -> bool {
        d >= self.lower() && self.upper().map_or(true, |u| d <= u)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Distance::Exact(d) => write!(f, "{d}"),
            Distance::Bounds { lower, upper: Some(u) } => write!(f, "{lower}..{u}"),
            Distance::Bounds { lower, upper: None } => write!(f, ">={lower}"),
        }
    }
}

/// How a search is carried out.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    /// Exhaustive when `4^k` fits the budget, information sets otherwise.
    #[default]
    Auto,
    Exhaustive,
    InformationSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub budget: u64,
    pub workers: usize,
    pub strategy: Strategy,
    pub info_sets: usize,
    pub max_message_weight: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: DEFAULT_BUDGET,
            workers: default_workers(),
            strategy: Strategy::Auto,
            info_sets: 4,
            max_message_weight: 6,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(budget: u64) -> Self {
        SearchConfig { budget, ..Default::default() }
    }

    pub fn workers(mut self, w: usize) -> Self {
        self.workers = w.max(1);
        self
    }

    pub fn strategy(mut self, s: Strategy) -> Self {
        self.strategy = s;
        self
    }
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    LowWeightSearch { sets: u32, message_weight: u32 },
    BoundOnly,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Exhaustive => f.write_str("exhaustive"),
            Method::LowWeightSearch { sets, message_weight } => {
                write!(f, "low-weight search ({sets} information sets, message weight <= {message_weight})")
            }
            Method::BoundOnly => f.write_str("bound only"),
        }
    }
}

/// Outcome of a distance search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightReport {
    /// Minimum weight of nonzero codewords; `None` for the zero code.
    pub d: Option<Distance>,
    /// Minimum weight outside the inner code, when one was given.
    pub d_odd: Option<Distance>,
    /// Lightest nonzero inner-code word seen (a certified witness).
    pub min_inner_found: Option<u32>,
    pub method: Method,
    pub enumerated: u64,
    /// Exact counts for every weight up to `counts_complete_through`.
    pub weight_counts: BTreeMap<u32, u64>,
    pub counts_complete_through: Option<u32>,
    pub certified: bool,
}

fn packed_rows(polys: &[(Poly, Option<usize>)], n: usize, tags: usize) -> Result<Vec<Row>> {
    if tags > 128 {
        return Err(Error::Precondition(format!("{tags} complement rows exceed the tag width of 128")));
    }
    Ok(polys
        .iter()
        .map(|(p, tag)| Row {
            word: Packed::from_symbols(&p.to_vec(n)),
            tag: tag.map(Packed::unit).unwrap_or_default(),
        })
        .collect())
}

/// Basis of `outer`: first the rows `x^i g_inner` spanning `inner`, then
/// `x^j g_outer` for `j < deg(g_inner / g_outer)`, tagged.
fn nested_basis(outer: &ConstaCode, inner: Option<&ConstaCode>) -> Result<(Vec<Row>, usize)> {
    let n = outer.n() as usize;
    let mut polys = Vec::new();
    let tags = match inner {
        None => {
            for i in 0..outer.dimension() as usize {
                polys.push((&Poly::monomial(i) * outer.generator(), None));
            }
            0
        }
        Some(inner) => {
            let (h, r) = inner.generator().div_rem(outer.generator());
            if !r.is_zero() || !outer.defining_set().is_subset(inner.defining_set()) {
                return Err(Error::Precondition("inner code is not contained in the outer code".into()));
            }
            let q = h.degree().unwrap();
            for i in 0..inner.dimension() as usize {
                polys.push((&Poly::monomial(i) * inner.generator(), None));
            }
            for j in 0..q {
                polys.push((&Poly::monomial(j) * outer.generator(), Some(j)));
            }
            q
        }
    };
    Ok((packed_rows(&polys, n, tags)?, tags))
}

fn as_opt(v: u32) -> Option<u32> {
    (v != u32::MAX).then_some(v)
}

fn resolve(found: Option<u32>, lower: u32) -> Distance {
    match found {
        Some(u) if u <= lower => Distance::Exact(u),
        Some(u) => Distance::Bounds { lower, upper: Some(u) },
        None => Distance::Bounds { lower, upper: None },
    }
}

/// Search `outer`, tracking the minimum outside `inner` when given, and
/// counting words of weight up to `census`.
pub fn nested_search(outer: &ConstaCode, inner: Option<&ConstaCode>, census: Option<u32>, cfg: &SearchConfig) -> Result<WeightReport> {
    let n = outer.n() as usize;
    if n > 128 {
        return Err(Error::LengthTooLarge(n as u32));
    }
    let (rows, tags) = nested_basis(outer, inner)?;
    let k = rows.len();
    let tracked = inner.is_some();
    if k == 0 {
        return Ok(WeightReport {
            d: None,
            d_odd: None,
            min_inner_found: None,
            method: Method::Exhaustive,
            enumerated: 0,
            weight_counts: BTreeMap::new(),
            counts_complete_through: Some(n as u32),
            certified: true,
        });
    }
    let full: Option<u128> = (k < 64).then(|| 1u128 << (2 * k));
    let fits = full.is_some_and(|f| f - 1 <= cfg.budget as u128);
    let go_exhaustive = match cfg.strategy {
        Strategy::Exhaustive => {
            if !fits {
                return Err(Error::Precondition(format!("exhaustive scan of 4^{k} words exceeds the budget of {}", cfg.budget)));
            }
            true
        }
        Strategy::Auto => fits,
        Strategy::InformationSet => false,
    };
    let bch = bch_bound(outer.defining_set());
    if go_exhaustive {
        let t = exhaustive(&rows, n, cfg.workers);
        let cap = census.unwrap_or(n as u32).min(n as u32);
        return Ok(WeightReport {
            d: Some(Distance::Exact(t.min_all)),
            d_odd: tracked.then(|| match as_opt(t.min_odd) {
                Some(u) => Distance::Exact(u),
                None => Distance::Bounds { lower: n as u32 + 1, upper: None },
            }),
            min_inner_found: as_opt(t.min_even).filter(|_| tracked),
            method: Method::Exhaustive,
            enumerated: t.visited,
            weight_counts: counts_map(&t.counts, cap),
            counts_complete_through: Some(cap),
            certified: true,
        });
    }
    let sets = InfoSets::build(&rows, n, cfg.info_sets);
    let mut total = Tally::new(n);
    let mut reached = 0usize;
    let mut lb = 1u32;
    let mut exhausted_messages = false;
    let max_w = cfg.max_message_weight.min(k);
    for w in 1..=max_w {
        let cost = sets.level_cost(w);
        if total.visited as u128 + cost > cfg.budget as u128 {
            break;
        }
        total = total.merge(sets.level(w, n, census, cfg.workers));
        reached = w;
        lb = sets.lower_bound(w).max(1);
        if w == k {
            exhausted_messages = true;
        }
        let floor = lb.max(bch);
        let all_done = as_opt(total.min_all).is_some_and(|u| u <= floor);
        let odd_done = !tracked || tags == 0 || as_opt(total.min_odd).is_some_and(|u| u <= floor);
        let census_done = census.map_or(true, |c| lb > c);
        if exhausted_messages || (all_done && odd_done && census_done) {
            break;
        }
    }
    if exhausted_messages {
        lb = n as u32 + 1;
    }
    let floor = lb.max(bch);
    let d = resolve(as_opt(total.min_all), floor);
    let d_odd = tracked.then(|| if tags == 0 { Distance::Bounds { lower: n as u32 + 1, upper: None } } else { resolve(as_opt(total.min_odd), floor) });
    let complete = census.map(|c| c.min(lb.saturating_sub(1)).min(n as u32));
    let certified = d.is_exact() && d_odd.map_or(true, |x| x.is_exact()) && census.map_or(true, |c| complete == Some(c.min(n as u32)));
    Ok(WeightReport {
        d: Some(d),
        d_odd,
        min_inner_found: as_opt(total.min_even).filter(|_| tracked),
        method: if reached == 0 { Method::BoundOnly } else { Method::LowWeightSearch { sets: sets.count() as u32, message_weight: reached as u32 } },
        enumerated: total.visited,
        weight_counts: complete.map(|c| counts_map(&total.counts, c)).unwrap_or_default(),
        counts_complete_through: complete,
        certified,
    })
}

fn counts_map(counts: &[u64], cap: u32) -> BTreeMap<u32, u64> {
    counts.iter().enumerate().take(cap as usize + 1).filter(|(_, &c)| c > 0).map(|(w, &c)| (w as u32, c)).collect()
}

/// Minimum distance of a code.
pub fn min_distance(code: &ConstaCode, cfg: &SearchConfig) -> Result<WeightReport> {
    nested_search(code, None, None, cfg)
}

/// Minimum weight of the odd-like words `C \ D` of a duadic pair, along
/// with `d(C)`.
pub fn min_odd_like_weight(pair: &DuadicPair, cfg: &SearchConfig) -> Result<WeightReport> {
    nested_search(&pair.odd, Some(&pair.even), None, cfg)
}

/// Number of codewords of each weight up to `up_to`.
pub fn weight_census(code: &ConstaCode, up_to: u32, cfg: &SearchConfig) -> Result<WeightReport> {
    nested_search(code, None, Some(up_to), cfg)
}

/// `ceil(sqrt(delta))` with `delta` the BCH bound of the code with defining
/// set `Omega \ X`; a certified floor on the odd-like minimum weight.
pub fn sqrt_bound(sp: &Splitting) -> u32 {
    let e = omega_set(sp.ambient()).difference(&sp.x);
    ceil_sqrt(bch_bound(&e) as u64) as u32
}

/// Weight of a GF(4) vector.
pub fn weight(v: &[F4]) -> u32 {
    v.iter().filter(|c| !c.is_zero()).count() as u32
}
