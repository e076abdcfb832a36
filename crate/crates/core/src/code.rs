//! Constacyclic codes `C_A` from defining sets, Hermitian duals, the BCH
//! bound, and duadic pairs.

use crate::cyclotomic::{minus_two, omega_set, Ambient, CosetSet, Shift};
use crate::error::{Error, Result};
use crate::field::{fix_root_of_unity, mul_linear, ExtElem, Poly, RootOfUnity, F4};
use crate::splitting::Splitting;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Per-ring data shared by every code of one length and shift constant:
/// the root of unity and the minimal polynomial of each coset.
#[derive(Debug)]
pub struct CodeFamily {
    amb: Ambient,
    root: RootOfUnity,
    cosets: Vec<CosetSet>,
    coset_of: Vec<u32>,
    min_polys: Vec<Poly>,
}

impl CodeFamily {
    fn new(amb: Ambient) -> Result<CodeFamily> {
        let root = fix_root_of_unity(amb.n(), amb.shift().value())?;
        let cosets = omega_set(amb).cosets();
        let mut coset_of = vec![u32::MAX; amb.modulus() as usize];
        let mut min_polys = Vec::with_capacity(cosets.len());
        for (idx, c) in cosets.iter().enumerate() {
            let mut acc = vec![ExtElem::from_base(F4::ONE)];
            for s in c.iter() {
                coset_of[s as usize] = idx as u32;
                acc = mul_linear(root.field(), &acc, root.pow(s as i64));
            }
            let coeffs = acc.iter().map(|e| e.as_base().ok_or(Error::GeneratorNotOverBase)).collect::<Result<Vec<_>>>()?;
            min_polys.push(Poly::new(coeffs));
        }
        Ok(CodeFamily { amb, root, cosets, coset_of, min_polys })
    }

    /// Shared, memoised family for `(n, shift)`.
    pub fn get(amb: Ambient) -> Result<Arc<CodeFamily>> {
        static CACHE: OnceLock<Mutex<HashMap<(u32, Shift), Arc<CodeFamily>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let key = (amb.n(), amb.shift());
        if let Some(f) = cache.lock().unwrap().get(&key) {
            return Ok(f.clone());
        }
        let fam = Arc::new(CodeFamily::new(amb)?);
        cache.lock().unwrap().insert(key, fam.clone());
        Ok(fam)
    }

    pub fn ambient(&self) -> Ambient {
        self.amb
    }

    pub fn root(&self) -> &RootOfUnity {
        &self.root
    }

    /// Minimal polynomial over GF(4) of `alpha^s`.
    pub fn min_poly(&self, s: u32) -> Result<&Poly> {
        match self.coset_of.get(s as usize) {
            Some(&i) if i != u32::MAX => Ok(&self.min_polys[i as usize]),
            _ => Err(Error::NotInIndexSet(s)),
        }
    }

    /// `prod_{s in A} (x - alpha^s)`, as a product of minimal polynomials.
    pub fn product_over(&self, set: &CosetSet) -> Poly {
        let mut g = Poly::one();
        for c in set.cosets() {
            let i = self.coset_of[c.leader().unwrap() as usize] as usize;
            g = &g * &self.min_polys[i];
        }
        g
    }

    pub fn cosets(&self) -> &[CosetSet] {
        &self.cosets
    }
}

/// The `a`-constacyclic code with defining set `A`: generator
/// `g = prod_{s in A} (x - alpha^s)`, dimension `n - |A|`.
#[derive(Debug, Clone)]
pub struct ConstaCode {
    family: Arc<CodeFamily>,
    defining_set: CosetSet,
    generator: Poly,
}

impl ConstaCode {
    pub fn ambient(&self) -> Ambient {
        self.family.amb
    }

    pub fn family(&self) -> &Arc<CodeFamily> {
        &self.family
    }

    pub fn n(&self) -> u32 {
        self.family.amb.n()
    }

    pub fn defining_set(&self) -> &CosetSet {
        &self.defining_set
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    pub fn dimension(&self) -> u32 {
        self.n() - self.defining_set.len() as u32
    }

    /// Codeword `m(x) g(x)` for a message of length at most `dim`.
    pub fn encode(&self, message: &[F4]) -> Result<Vec<F4>> {
        if message.len() > self.dimension() as usize {
            return Err(Error::Precondition(format!(
                "message length {} exceeds dimension {}",
                message.len(),
                self.dimension()
            )));
        }
        let c = &Poly::new(message.to_vec()) * &self.generator;
        Ok(c.to_vec(self.n() as usize))
    }

    /// Membership test: `g` divides the word polynomial.
    pub fn contains(&self, word: &[F4]) -> bool {
        word.len() == self.n() as usize && self.generator.divides(&Poly::new(word.to_vec()))
    }

    /// Rows `x^i g(x)` for `0 <= i < dim`.
    pub fn generator_rows(&self) -> Vec<Vec<F4>> {
        (0..self.dimension() as usize)
            .map(|i| (&Poly::monomial(i) * &self.generator).to_vec(self.n() as usize))
            .collect()
    }
}

/// Build `C_A`; `A` must be a union of cosets in the index set.
pub fn build(amb: Ambient, defining_set: &CosetSet) -> Result<ConstaCode> {
    if defining_set.ambient() != amb {
        return Err(Error::AmbientMismatch("defining set belongs to another ring".into()));
    }
    let set = CosetSet::new(amb, defining_set.members().to_vec())?;
    let family = CodeFamily::get(amb)?;
    let generator = family.product_over(&set);
    debug_assert_eq!(generator.degree(), Some(set.len()));
    Ok(ConstaCode { family, defining_set: set, generator })
}

/// Defining set of the Hermitian dual: `Omega \ mu_{-2}(A)`.
pub fn hermitian_dual_set(a: &CosetSet) -> CosetSet {
    omega_set(a.ambient()).difference(&minus_two(a))
}

/// `C_A` contains its Hermitian dual iff `A` and `-2A` are disjoint.
pub fn is_dual_containing(a: &CosetSet) -> bool {
    a.is_disjoint(&minus_two(a))
}

/// BCH bound for `C_A`: the largest `delta` such that `A` contains
/// `delta - 1` consecutive elements `l, l + t, ..., l + (delta - 2) t`
/// modulo `tn`. Empty `A` gives 1; `A = Omega` gives `n + 1`.
pub fn bch_bound(a: &CosetSet) -> u32 {
    let amb = a.ambient();
    if a.is_empty() {
        return 1;
    }
    if a.len() as u32 == amb.n() {
        return amb.n() + 1;
    }
    let (m, t) = (amb.modulus(), amb.t());
    let mut best = 0;
    for s in a.iter() {
        if a.contains((s + m - t) % m) {
            continue;
        }
        let mut len = 1;
        let mut x = (s + t) % m;
        while a.contains(x) {
            len += 1;
            x = (x + t) % m;
        }
        best = best.max(len);
    }
    best + 1
}

/// Defining set of `C_{A1} + C_{A2}`.
pub fn sum_set(a1: &CosetSet, a2: &CosetSet) -> CosetSet {
    a1.intersection(a2)
}

/// Defining set of `C_{A1} /\ C_{A2}`.
pub fn intersection_set(a1: &CosetSet, a2: &CosetSet) -> CosetSet {
    a1.union(a2)
}

/// Which of `S1`, `S2` defines the odd-like code.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash)]
pub enum Side {
    S1,
    S2,
}

/// Odd-like code `C` (defining set `S`) and even-like code `D` (defining
/// set `S + X`), with `D = C^{perp_h}` and `g_D = g_C h_X`.
#[derive(Debug, Clone)]
pub struct DuadicPair {
    pub odd: ConstaCode,
    pub even: ConstaCode,
    pub h_x: Poly,
    pub splitting: Splitting,
    pub side: Side,
}

impl DuadicPair {
    /// Codewords `m g_C` with `h_X !| m` are exactly `C \ D`.
    pub fn is_odd_like_message(&self, message: &[F4]) -> bool {
        !self.h_x.divides(&Poly::new(message.to_vec()))
    }
}

pub fn duadic_pair(sp: &Splitting, side: Side) -> Result<DuadicPair> {
    if sp.is_trivial() {
        return Err(Error::Precondition("the trivial splitting defines no duadic pair".into()));
    }
    let amb = sp.ambient();
    let s = match side {
        Side::S1 => &sp.s1,
        Side::S2 => &sp.s2,
    };
    let odd = build(amb, s)?;
    let even = build(amb, &s.union(&sp.x))?;
    let h_x = odd.family.product_over(&sp.x);
    debug_assert_eq!(&odd.generator * &h_x, even.generator);
    debug_assert_eq!(hermitian_dual_set(s), *even.defining_set());
    Ok(DuadicPair { odd, even, h_x, splitting: sp.clone(), side })
}
