use num::{One, Zero};

use super::laurent::{poly_exact_div, poly_gcd, poly_mul, LaurentPoly, Q};
use crate::error::{Error, Result};

/// An element of the rational function field `Q(a)`.
///
/// Canonical form: `den` is a monic polynomial in `a` with nonzero constant
/// term, `num` and `den` are coprime, and zero is `0 / 1`. Structural equality
/// is therefore value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self::from_laurent(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(num: LaurentPoly) -> Self {
        RatFunc {
            num,
            den: LaurentPoly::one(),
        }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// `Some` when the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let dlow = den.low_exponent().unwrap();
        let nlow = num.low_exponent().unwrap();
        // num = a^nlow N(a), den = a^dlow D(a) with N(0), D(0) nonzero.
        let (mut n, mut d) = (num.dense().to_vec(), den.dense().to_vec());
        if d.len() > 1 {
            let g = poly_gcd(&n, &d);
            if g.len() > 1 {
                n = poly_exact_div(&n, &g);
                d = poly_exact_div(&d, &g);
            }
        }
        let lead = d.last().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            n.iter_mut().for_each(|c| *c *= &inv);
            d.iter_mut().for_each(|c| *c *= &inv);
        }
        RatFunc {
            num: LaurentPoly::from_dense(nlow - dlow, n),
            den: LaurentPoly::from_dense(0, d),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = self.num.add(&rhs.num);
            if self.den.is_one() {
                return Self::from_laurent(num);
            }
            return Self::canonical(num, self.den.clone());
        }
        // Henrici: only the common part of the denominators can cancel.
        let g = poly_gcd(self.den.dense(), rhs.den.dense());
        if g.len() == 1 {
            return RatFunc {
                num: self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
                den: self.den.mul(&rhs.den),
            };
        }
        let d1 = poly_exact_div(self.den.dense(), &g);
        let d2 = poly_exact_div(rhs.den.dense(), &g);
        let t = self
            .num
            .mul(&LaurentPoly::from_dense(0, d2.clone()))
            .add(&rhs.num.mul(&LaurentPoly::from_dense(0, d1.clone())));
        if t.is_zero() {
            return Self::zero();
        }
        let g2 = poly_gcd(t.dense(), &g);
        let low = t.low_exponent().unwrap();
        let (num, g_rest) = if g2.len() > 1 {
            (poly_exact_div(t.dense(), &g2), poly_exact_div(&g, &g2))
        } else {
            (t.dense().to_vec(), g)
        };
        let den = poly_mul(&poly_mul(&d1, &d2), &g_rest);
        RatFunc {
            num: LaurentPoly::from_dense(low, num),
            den: LaurentPoly::from_dense(0, den),
        }
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_laurent(self.num.mul(&rhs.num));
        }
        if rhs.num.is_monomial() && rhs.den.is_one() {
            let (e, c) = rhs.num.terms().next().unwrap();
            return RatFunc {
                num: self.num.shift(e).scale(c),
                den: self.den.clone(),
            };
        }
        if self.num.is_monomial() && self.den.is_one() {
            return rhs.mul(self);
        }
        // cross-cancel: num_1 against den_2 and num_2 against den_1
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        let lead = den.leading_coeff().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// `Σ x_i y_i`, summing numerators over a shared denominator before
    /// reducing, so that only one gcd is taken per distinct denominator.
    pub fn sum_of_products(pairs: &[(&Self, &Self)]) -> Self {
        let mut groups: Vec<(LaurentPoly, LaurentPoly)> = Vec::new();
        for (x, y) in pairs {
            if x.is_zero() || y.is_zero() {
                continue;
            }
            let den = x.den.mul(&y.den);
            let num = x.num.mul(&y.num);
            match groups.iter_mut().find(|(d, _)| *d == den) {
                Some((_, n)) => *n = n.add(&num),
                None => groups.push((den, num)),
            }
        }
        groups
            .into_iter()
            .map(|(d, n)| {
                if d.is_one() {
                    Self::from_laurent(n)
                } else {
                    Self::canonical(n, d)
                }
            })
            .fold(Self::zero(), |acc, x| acc.add(&x))
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

/// Divides `num` and the polynomial `den` by their gcd.
fn cancel(num: &LaurentPoly, den: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    if den.is_one() || num.is_monomial() {
        return (num.clone(), den.clone());
    }
    let g = poly_gcd(num.dense(), den.dense());
    if g.len() == 1 {
        return (num.clone(), den.clone());
    }
    let low = num.low_exponent().unwrap();
    (
        LaurentPoly::from_dense(low, poly_exact_div(num.dense(), &g)),
        LaurentPoly::from_dense(0, poly_exact_div(den.dense(), &g)),
    )
}

impl std::fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}
