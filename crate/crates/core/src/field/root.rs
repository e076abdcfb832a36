use super::ext::{build_extension, ExtElem, ExtField};
use super::f4::F4;
use crate::arith::mult_order;
use crate::error::{Error, Result};
use std::sync::Arc;

/// A fixed primitive `tn`-th root of unity `alpha` with `alpha^n = a`.
#[derive(Debug, Clone)]
pub struct RootOfUnity {
    field: Arc<ExtField>,
    alpha: ExtElem,
    n: u32,
    a: F4,
    t: u32,
    powers: Vec<ExtElem>,
}

impl RootOfUnity {
    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn alpha(&self) -> ExtElem {
        self.alpha
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn shift(&self) -> F4 {
        self.a
    }

    pub fn order(&self) -> u32 {
        self.t * self.n
    }

    /// `alpha^s` for any integer exponent, reduced mod `tn`.
    pub fn pow(&self, s: i64) -> ExtElem {
        let m = self.order() as i64;
        self.powers[s.rem_euclid(m) as usize]
    }
}

/// Fix the root of unity for length `n` and shift constant `a`.
///
/// With `z = ord_{tn}(4)` and `gamma` the class of `x`, take
/// `alpha0 = gamma^((4^z - 1)/(tn))` and then `alpha = alpha0^i` for the
/// least `i` with `alpha0^(in) = a`.
pub fn fix_root_of_unity(n: u32, a: F4) -> Result<RootOfUnity> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::EvenLength(n));
    }
    let t = match a {
        F4::ONE => 1,
        F4::W | F4::W2 => 3,
        _ => return Err(Error::Precondition("shift constant must be nonzero".into())),
    };
    let m = t * n;
    let z = mult_order(4, m as u64).expect("4 is a unit mod an odd modulus") as u32;
    let field = build_extension(z)?;
    let alpha0 = field.pow(field.generator(), field.group_order() / m as u128);
    let target = ExtElem::from_base(a);
    let alpha = (1..t.max(2))
        .map(|i| field.pow(alpha0, i as u128))
        .find(|&c| field.pow(c, n as u128) == target)
        .expect("alpha0^n has order t, so some power hits a");
    let mut powers = Vec::with_capacity(m as usize);
    let mut x = field.one();
    for _ in 0..m {
        powers.push(x);
        x = field.mul(x, alpha);
    }
    debug_assert_eq!(x, field.one());
    Ok(RootOfUnity { field, alpha, n, a, t, powers })
}
