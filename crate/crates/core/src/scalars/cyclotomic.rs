use std::sync::Arc;

use num::{BigInt, One, Zero};

use super::laurent::{poly_divrem, poly_ext_gcd, poly_mul, trim, LaurentPoly, Q};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
///
/// Uses `x^n - 1 = prod_{d | n} Phi_d(x)`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    let to_q = |v: &[i64]| -> Vec<Q> { v.iter().map(|&c| Q::from_integer(c.into())).collect() };
    let mut num = vec![Q::zero(); n as usize + 1];
    num[0] = -Q::one();
    num[n as usize] = Q::one();
    for d in (1..n).filter(|d| n % d == 0) {
        let phi = to_q(&cyclotomic_polynomial(d));
        let (quot, rem) = poly_divrem(&num, &phi);
        debug_assert!(rem.is_empty());
        num = quot;
    }
    num.iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            i64::try_from(c.to_integer()).expect("cyclotomic coefficient overflow")
        })
        .collect()
}

/// Shared data for arithmetic in `Q(zeta)`, `zeta` a primitive `4r`-th root of unity.
#[derive(Debug)]
pub struct CycloCtx {
    r: u32,
    modulus: Vec<Q>,
    /// `powers[e]` is the residue of `a^e` for `0 <= e < 4r`.
    powers: Vec<Vec<Q>>,
}

impl CycloCtx {
    pub fn new(r: u32) -> Result<Arc<Self>> {
        if r < 3 {
            return Err(Error::InvalidMode(format!("root:{r} (need r >= 3)")));
        }
        let order = 4 * r;
        let modulus: Vec<Q> = cyclotomic_polynomial(order)
            .into_iter()
            .map(|c| Q::from_integer(BigInt::from(c)))
            .collect();
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![Q::one()];
        for _ in 0..order {
            powers.push(cur.clone());
            let mut next = vec![Q::zero()];
            next.extend(cur);
            cur = reduce(next, &modulus);
        }
        Ok(Arc::new(CycloCtx { r, modulus, powers }))
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn order(&self) -> u32 {
        4 * self.r
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[Q] {
        &self.modulus
    }

    fn a_pow(&self, e: i64) -> &[Q] {
        &self.powers[e.rem_euclid(self.order() as i64) as usize]
    }
}

fn reduce(v: Vec<Q>, modulus: &[Q]) -> Vec<Q> {
    let mut v = v;
    trim(&mut v);
    if v.len() < modulus.len() {
        return v;
    }
    poly_divrem(&v, modulus).1
}

/// An element of `Q(zeta_{4r})`, stored as its residue modulo `Phi_{4r}`.
#[derive(Clone)]
pub struct CycloElem {
    ctx: Arc<CycloCtx>,
    residue: Vec<Q>,
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.order() == other.ctx.order() && self.residue == other.residue
    }
}

impl Eq for CycloElem {}

impl std::hash::Hash for CycloElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ctx.order().hash(state);
        self.residue.hash(state);
    }
}

impl CycloElem {
    pub fn zero(ctx: &Arc<CycloCtx>) -> Self {
        CycloElem {
            ctx: ctx.clone(),
            residue: Vec::new(),
        }
    }

    pub fn ctx(&self) -> &Arc<CycloCtx> {
        &self.ctx
    }

    /// Coefficients of the reduced representative, lowest degree first.
    pub fn residue(&self) -> &[Q] {
        &self.residue
    }

    pub fn root_order(&self) -> u32 {
        self.ctx.order()
    }

    /// The reduced representative as a polynomial in `a`.
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_dense(0, self.residue.clone())
    }

    pub fn from_laurent(ctx: &Arc<CycloCtx>, p: &LaurentPoly) -> Self {
        let mut acc = vec![Q::zero(); ctx.degree()];
        for (e, c) in p.terms() {
            for (slot, x) in acc.iter_mut().zip(ctx.a_pow(e)) {
                if !x.is_zero() {
                    *slot += c * x;
                }
            }
        }
        trim(&mut acc);
        CycloElem {
            ctx: ctx.clone(),
            residue: acc,
        }
    }

    /// Substitutes `a = zeta_{4r}`; fails when the denominator vanishes there.
    pub fn specialize(ctx: &Arc<CycloCtx>, x: &RatFunc) -> Result<Self> {
        let num = Self::from_laurent(ctx, x.numerator());
        if x.denominator().is_one() {
            return Ok(num);
        }
        let den = Self::from_laurent(ctx, x.denominator());
        if den.is_zero() {
            return Err(Error::Pole {
                order: ctx.order(),
                what: format!("denominator {} vanishes", x.denominator()),
            });
        }
        Ok(num.mul(&den.inv()?))
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.residue.len() == 1 && self.residue[0].is_one()
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(
            self.ctx.order(),
            rhs.ctx.order(),
            "mixing cyclotomic fields of different order"
        );
    }

    fn with(&self, residue: Vec<Q>) -> Self {
        CycloElem {
            ctx: self.ctx.clone(),
            residue,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let n = self.residue.len().max(rhs.residue.len());
        let mut out = vec![Q::zero(); n];
        for (i, c) in self.residue.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.residue.iter().enumerate() {
            out[i] += c;
        }
        trim(&mut out);
        self.with(out)
    }

    pub fn neg(&self) -> Self {
        self.with(self.residue.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        if self.is_zero() || rhs.is_zero() {
            return self.with(Vec::new());
        }
        self.with(reduce(
            poly_mul(&self.residue, &rhs.residue),
            &self.ctx.modulus,
        ))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s) = poly_ext_gcd(&self.residue, &self.ctx.modulus);
        debug_assert_eq!(g, vec![Q::one()]);
        Ok(self.with(reduce(s, &self.ctx.modulus)))
    }
}

impl std::fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CycloElem[{}]({})", self.ctx.order(), self.to_laurent())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(20), vec![1, 0, -1, 0, 1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(105).len(), 49);
    }

    #[test]
    fn zeta_has_exact_order() {
        let ctx = CycloCtx::new(3).unwrap();
        let a = CycloElem::from_laurent(&ctx, &LaurentPoly::a_pow(1));
        let mut p = a.clone();
        for k in 1..12 {
            assert!(!p.is_one(), "a^{k} = 1");
            p = p.mul(&a);
        }
        assert!(p.is_one());
        assert!(a.mul(&a.inv().unwrap()).is_one());
    }

    #[test]
    fn rejects_small_r() {
        assert!(CycloCtx::new(2).is_err());
    }
}
