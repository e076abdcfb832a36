use super::packed::{systematize, Row};
use super::par::map_reduce;
use crate::arith::binomial;
use crate::field::F4;

/// Running minima and weight counts over visited codewords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(super) struct Tally {
    pub min_all: u32,
    pub min_odd: u32,
    pub min_even: u32,
    pub counts: Vec<u64>,
    pub visited: u64,
}

impl Tally {
    pub fn new(n: usize) -> Tally {
        Tally { min_all: u32::MAX, min_odd: u32::MAX, min_even: u32::MAX, counts: vec![0; n + 1], visited: 0 }
    }

    #[inline]
    fn see(&mut self, r: Row) -> u32 {
        let w = r.word.weight();
        self.visited += 1;
        self.min_all = self.min_all.min(w);
        if r.tag.is_zero() {
            self.min_even = self.min_even.min(w);
        } else {
            self.min_odd = self.min_odd.min(w);
        }
        w
    }

    pub fn merge(mut self, o: Tally) -> Tally {
        self.min_all = self.min_all.min(o.min_all);
        self.min_odd = self.min_odd.min(o.min_odd);
        self.min_even = self.min_even.min(o.min_even);
        for (a, b) in self.counts.iter_mut().zip(o.counts) {
            *a += b;
        }
        self.visited += o.visited;
        self
    }
}

/// Visit all `4^k - 1` nonzero combinations of `rows` in Gray-code order:
/// each step adds one row or `w` times one row. The top bits of the
/// binary message index select a chunk; chunks are the unit of parallelism.
pub(super) fn exhaustive(rows: &[Row], n: usize, workers: usize) -> Tally {
    let steps: Vec<Row> = rows.iter().flat_map(|r| [*r, r.scale(F4::W)]).collect();
    let bits = steps.len();
    let top = if bits > 16 { (bits - 12).min(10) } else { 0 };
    let low = bits - top;
    let chunks: Vec<u64> = (0..1u64 << top).collect();
    map_reduce(
        chunks,
        workers,
        |c| {
            let mut t = Tally::new(n);
            let mut cur = Row::default();
            for b in 0..top {
                if (c >> b) & 1 == 1 {
                    cur = cur ^ steps[low + b];
                }
            }
            if c != 0 {
                let w = t.see(cur);
                t.counts[w as usize] += 1;
            }
            for s in 1..1u64 << low {
                cur = cur ^ steps[s.trailing_zeros() as usize];
                let w = t.see(cur);
                t.counts[w as usize] += 1;
            }
            t
        },
        Tally::merge,
        || Tally::new(n),
    )
}

/// Systematic generator matrices on greedily chosen information sets.
#[derive(Debug, Clone)]
pub(super) struct InfoSets {
    /// For each matrix, each row with its three nonzero multiples.
    mats: Vec<Vec<[Row; 3]>>,
    masks: Vec<u128>,
    /// Number of pivot columns not used by earlier matrices.
    pub new_ranks: Vec<u32>,
    k: usize,
}

impl InfoSets {
    pub fn build(rows: &[Row], n: usize, max_sets: usize) -> InfoSets {
        let k = rows.len();
        let mut used = 0u128;
        let (mut mats, mut masks, mut new_ranks) = (Vec::new(), Vec::new(), Vec::new());
        for _ in 0..max_sets.max(1) {
            let order: Vec<usize> = (0..n).filter(|&c| used >> c & 1 == 0).chain((0..n).filter(|&c| used >> c & 1 == 1)).collect();
            let mut m = rows.to_vec();
            let piv = systematize(&mut m, &order);
            assert_eq!(piv.len(), k, "generator rows must be independent");
            let mask = piv.iter().fold(0u128, |a, &c| a | 1 << c);
            let fresh = (mask & !used).count_ones();
            if fresh == 0 {
                break;
            }
            used |= mask;
            mats.push(m.iter().map(|r| [*r, r.scale(F4::W), r.scale(F4::W2)]).collect());
            masks.push(mask);
            new_ranks.push(fresh);
        }
        InfoSets { mats, masks, new_ranks, k }
    }

    pub fn count(&self) -> usize {
        self.mats.len()
    }

    /// Every codeword of weight below this has been seen once all messages
    /// of weight up to `w` were enumerated on every matrix.
    pub fn lower_bound(&self, w: usize) -> u32 {
        self.new_ranks
            .iter()
            .map(|&r| (w as i64 + 1 - (self.k as i64 - r as i64)).max(0) as u32)
            .sum()
    }

    pub fn level_cost(&self, w: usize) -> u128 {
        self.mats.len() as u128 * binomial(self.k as u64, w as u64) * 3u128.pow(w as u32)
    }

    /// Enumerate all messages of weight exactly `w` on every matrix.
    /// Codewords of weight at most `census` are counted once, at the first
    /// (level, matrix) where they appear.
    pub fn level(&self, w: usize, n: usize, census: Option<u32>, workers: usize) -> Tally {
        let tasks: Vec<(usize, usize)> = (0..self.mats.len()).flat_map(|j| (0..self.k).map(move |i| (j, i))).collect();
        map_reduce(
            tasks,
            workers,
            |(j, i0)| {
                let mut ctx = Level { rows: &self.mats[j], masks: &self.masks, j, w: w as u32, cap: census, tally: Tally::new(n) };
                if i0 + w <= self.k {
                    for c in 0..3 {
                        ctx.dfs(i0 + 1, w - 1, self.mats[j][i0][c]);
                    }
                }
                ctx.tally
            },
            Tally::merge,
            || Tally::new(n),
        )
    }
}

struct Level<'a> {
    rows: &'a [[Row; 3]],
    masks: &'a [u128],
    j: usize,
    w: u32,
    cap: Option<u32>,
    tally: Tally,
}

impl Level<'_> {
    fn dfs(&mut self, start: usize, depth: usize, acc: Row) {
        if depth == 0 {
            let wt = self.tally.see(acc);
            if self.cap.is_some_and(|c| wt <= c) && self.owns(acc) {
                self.tally.counts[wt as usize] += 1;
            }
            return;
        }
        let k = self.rows.len();
        for i in start..=k - depth {
            let r = &self.rows[i];
            self.dfs(i + 1, depth - 1, acc ^ r[0]);
            self.dfs(i + 1, depth - 1, acc ^ r[1]);
            self.dfs(i + 1, depth - 1, acc ^ r[2]);
        }
    }

    fn owns(&self, r: Row) -> bool {
        let s = r.word.support();
        self.masks.iter().enumerate().all(|(i, m)| {
            let a = (s & m).count_ones();
            if i < self.j {
                a > self.w
            } else {
                a >= self.w
            }
        })
    }
}
