//! Laurent polynomials in the indeterminate `a` with rational coefficients,
//! plus the dense univariate helpers (division, gcd) shared by the
//! rational-function and cyclotomic layers.

use num::{BigInt, BigRational, One, Zero};

pub type Q = BigRational;

/// A Laurent polynomial `sum c_e a^e`.
///
/// Stored densely from the lowest exponent. Invariant: `coeffs` is empty
/// (the zero polynomial, with `low == 0`) or its first and last entries are
/// nonzero, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<Q>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Q::one(), 0)
    }

    pub fn integer(n: i64) -> Self {
        Self::monomial(Q::from_integer(BigInt::from(n)), 0)
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Q, e: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: e,
            coeffs: vec![c],
        }
    }

    /// The monomial `a^e`.
    pub fn a_pow(e: i64) -> Self {
        Self::monomial(Q::one(), e)
    }

    /// The monomial `q^e = a^(2e)`.
    pub fn q_pow(e: i64) -> Self {
        Self::a_pow(2 * e)
    }

    /// Sums the given `(exponent, coefficient)` pairs.
    pub fn from_terms<I: IntoIterator<Item = (i64, Q)>>(terms: I) -> Self {
        let terms: Vec<(i64, Q)> = terms.into_iter().collect();
        let Some(low) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![Q::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    pub(crate) fn from_dense(low: i64, mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        LaurentPoly {
            low: low + lead as i64,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> Q {
        let i = e - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            Q::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Q)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Dense coefficients starting at `low_exponent()`.
    pub(crate) fn dense(&self) -> &[Q] {
        &self.coeffs
    }

    /// Multiplies by `a^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.add_scaled(rhs, false)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add_scaled(rhs, true)
    }

    fn add_scaled(&self, rhs: &Self, negate: bool) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { rhs.neg() } else { rhs.clone() };
        }
        let low = self.low.min(rhs.low);
        let high = self
            .high_exponent()
            .unwrap()
            .max(rhs.high_exponent().unwrap());
        let mut coeffs = vec![Q::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(rhs.low - low) as usize + i];
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        Self::from_dense(low, coeffs)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::from_dense(self.low + rhs.low, poly_mul(&self.coeffs, &rhs.coeffs))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// The quantum integer `[n]_q = (q^n - q^-n)/(q - q^-1)` with `q = a^2`,
    /// i.e. `q^(n-1) + q^(n-3) + ... + q^(1-n)`.
    pub fn quantum_int(n: u32) -> Self {
        let n = n as i64;
        Self::from_terms((0..n).map(|i| (2 * (n - 1 - 2 * i), Q::one())))
    }

    /// `[n]_q! = [n]_q [n-1]_q ... [1]_q`, with `[0]! = 1`.
    pub fn quantum_factorial(n: u32) -> Self {
        (1..=n).fold(Self::one(), |acc, k| acc.mul(&Self::quantum_int(k)))
    }
}

impl std::fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

pub(crate) fn trim(v: &mut Vec<Q>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub(crate) fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Euclidean division of dense polynomials; `b` must be nonzero and trimmed.
pub(crate) fn poly_divrem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let db = b.len() - 1;
    let mut rem: Vec<Q> = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let inv_lead = b[db].recip();
    let mut quot = vec![Q::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = &rem[i] * &inv_lead;
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                let t = &c * bj;
                rem[i - db + j] -= t;
            }
        }
        quot[i - db] = c;
    }
    rem.truncate(db);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn make_monic(mut v: Vec<Q>) -> Vec<Q> {
    if let Some(lead) = v.last().cloned() {
        if !lead.is_one() {
            let inv = lead.recip();
            for c in v.iter_mut() {
                *c *= &inv;
            }
        }
    }
    v
}

/// Monic gcd of two dense polynomials (the gcd of zero and zero is zero).
pub(crate) fn poly_gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = make_monic(r);
    }
    make_monic(x)
}

/// Exact quotient; panics in debug builds if the division leaves a remainder.
pub(crate) fn poly_exact_div(a: &[Q], b: &[Q]) -> Vec<Q> {
    let (q, r) = poly_divrem(a, b);
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q
}

/// Extended Euclid: returns `(g, s)` with `s * a == g (mod m)`, `g` monic.
pub(crate) fn poly_ext_gcd(a: &[Q], m: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (Vec<Q>, Vec<Q>) = (Vec::new(), vec![Q::one()]);
    while !r1.is_empty() {
        let (quot, rem) = poly_divrem(&r0, &r1);
        let mut s2 = s0.clone();
        let qs = poly_mul(&quot, &s1);
        if s2.len() < qs.len() {
            s2.resize(qs.len(), Q::zero());
        }
        for (i, c) in qs.into_iter().enumerate() {
            s2[i] -= c;
        }
        trim(&mut s2);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
    }
    let lead = r0.last().cloned().unwrap_or_else(Q::one);
    let inv = lead.recip();
    let g = r0.iter().map(|c| c * &inv).collect();
    let s = s0.iter().map(|c| c * &inv).collect();
    (g, s)
}
