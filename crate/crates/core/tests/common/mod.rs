//! Brute-force oracles shared by the integration tests. They use only GF(4)
//! scalar arithmetic and share no code with the search kernel.
#![allow(dead_code)]

use duadic::code::ConstaCode;
use duadic::field::F4;

/// Naive product of coefficient vectors.
pub fn mul(a: &[F4], b: &[F4]) -> Vec<F4> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![F4::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Whether the monic `g` divides `f`, by schoolbook long division.
pub fn divides(g: &[F4], f: &[F4]) -> bool {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while let Some(top) = r.iter().rposition(|c| !c.is_zero()) {
        if top < dg {
            return false;
        }
        let c = r[top];
        for (i, &gi) in g.iter().enumerate() {
            r[top - dg + i] += c * gi;
        }
    }
    true
}

pub fn weight(v: &[F4]) -> u32 {
    v.iter().filter(|c| !c.is_zero()).count() as u32
}

pub struct Brute {
    pub d: Option<u32>,
    pub d_odd: Option<u32>,
    pub min_even: Option<u32>,
    pub counts: Vec<u64>,
}

/// Enumerate every message of `outer`, classifying a word as inside
/// `inner` when the inner generator divides it.
pub fn brute(outer: &ConstaCode, inner: Option<&ConstaCode>) -> Brute {
    let n = outer.n() as usize;
    let k = outer.dimension() as usize;
    assert!(k <= 11, "brute force limited to dimension 11");
    let g = outer.generator().coeffs().to_vec();
    let gi = inner.map(|c| c.generator().coeffs().to_vec());
    let mut res = Brute { d: None, d_odd: None, min_even: None, counts: vec![0; n + 1] };
    let upd = |slot: &mut Option<u32>, w: u32| *slot = Some(slot.map_or(w, |m: u32| m.min(w)));
    for idx in 1..4u64.pow(k as u32) {
        let msg: Vec<F4> = (0..k).map(|i| F4::from_bits(((idx >> (2 * i)) & 3) as u8)).collect();
        let mut word = mul(&msg, &g);
        word.resize(n, F4::ZERO);
        let w = weight(&word);
        res.counts[w as usize] += 1;
        upd(&mut res.d, w);
        if let Some(gi) = &gi {
            if divides(gi, &word) {
                upd(&mut res.min_even, w);
            } else {
                upd(&mut res.d_odd, w);
            }
        }
    }
    res
}

/// Row-reduce over GF(4); returns the rank and reduced rows.
pub fn row_reduce(mut m: Vec<Vec<F4>>) -> (usize, Vec<Vec<F4>>) {
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].inv().unwrap();
        for x in m[rank].iter_mut() {
            *x = *x * inv;
        }
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = m[i][c];
                let pivot = m[rank].clone();
                for (x, y) in m[i].iter_mut().zip(pivot) {
                    *x += f * y;
                }
            }
        }
        rank += 1;
    }
    m.truncate(rank);
    (rank, m)
}

/// Basis of the Hermitian dual `{y : sum x_i y_i^2 = 0 for all rows x}`,
/// as the nullspace of the conjugated generator matrix.
pub fn hermitian_dual_basis(rows: &[Vec<F4>], n: usize) -> Vec<Vec<F4>> {
    let conj: Vec<Vec<F4>> = rows.iter().map(|r| r.iter().map(|c| c.conj()).collect()).collect();
    let (rank, red) = if conj.is_empty() { (0, Vec::new()) } else { row_reduce(conj) };
    let mut pivots = Vec::new();
    for r in &red {
        pivots.push(r.iter().position(|c| !c.is_zero()).unwrap());
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    assert_eq!(free.len(), n - rank);
    free.iter()
        .map(|&f| {
            let mut v = vec![F4::ZERO; n];
            v[f] = F4::ONE;
            for (r, &p) in red.iter().zip(&pivots) {
                // r[p] = 1, so v[p] = -r[f] = r[f].
                v[p] = r[f];
            }
            v
        })
        .collect()
}
