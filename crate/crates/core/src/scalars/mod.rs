//! Exact coefficient fields: `Q(a)` for generic `a`, and `Q(zeta_{4r})` for
//! `a` a primitive `4r`-th root of unity. Throughout, `q = a^2` and
//! `q^{1/2} = a`.

mod cyclotomic;
mod laurent;
mod ratfunc;
mod text;

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::Arc;

pub use cyclotomic::{cyclotomic_polynomial, CycloCtx, CycloElem};
pub use laurent::{LaurentPoly, Q};
pub use ratfunc::RatFunc;
pub use text::parse_ratfunc;

use crate::error::{Error, Result};

/// Field element operations shared by both coefficient modes.
pub trait Scalar:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// `Σ x_i y_i` over a nonempty list.
    fn sum_of_products(pairs: &[(&Self, &Self)]) -> Self {
        let (x, y) = pairs[0];
        pairs[1..]
            .iter()
            .fold(x.mul(y), |acc, (x, y)| acc.add(&x.mul(y)))
    }
}

impl Scalar for RatFunc {
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        RatFunc::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        RatFunc::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        RatFunc::mul(self, rhs)
    }
    fn inv(&self) -> Result<Self> {
        RatFunc::inv(self)
    }
    fn sum_of_products(pairs: &[(&Self, &Self)]) -> Self {
        RatFunc::sum_of_products(pairs)
    }
}

impl Scalar for CycloElem {
    fn is_zero(&self) -> bool {
        CycloElem::is_zero(self)
    }
    fn is_one(&self) -> bool {
        CycloElem::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        CycloElem::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        CycloElem::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        CycloElem::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        CycloElem::mul(self, rhs)
    }
    fn inv(&self) -> Result<Self> {
        CycloElem::inv(self)
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

/// Coefficient mode: generic `a`, or `a` a primitive `4r`-th root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Generic,
    Root(u32),
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Generic => write!(f, "generic"),
            Mode::Root(r) => write!(f, "root:{r}"),
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "generic" {
            return Ok(Mode::Generic);
        }
        let r = s
            .strip_prefix("root:")
            .and_then(|r| r.trim().parse::<u32>().ok())
            .ok_or_else(|| Error::InvalidMode(s.to_string()))?;
        if r < 3 {
            return Err(Error::InvalidMode(format!("{s} (need r >= 3)")));
        }
        Ok(Mode::Root(r))
    }
}

impl serde::Serialize for Mode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Mode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A coefficient field together with the embedding of `Z[a, a^-1]`.
pub trait Field: Clone + Send + Sync + 'static {
    type Elem: Scalar;

    fn mode(&self) -> Mode;
    fn from_laurent(&self, p: &LaurentPoly) -> Self::Elem;
    /// Fails with a pole error when the denominator vanishes in this field.
    fn from_ratfunc(&self, x: &RatFunc) -> Result<Self::Elem>;

    fn parse(&self, s: &str) -> Result<Self::Elem> {
        self.from_ratfunc(&parse_ratfunc(s)?)
    }

    fn zero(&self) -> Self::Elem {
        self.from_laurent(&LaurentPoly::zero())
    }

    fn one(&self) -> Self::Elem {
        self.from_laurent(&LaurentPoly::one())
    }

    fn integer(&self, n: i64) -> Self::Elem {
        self.from_laurent(&LaurentPoly::integer(n))
    }

    fn a_pow(&self, e: i64) -> Self::Elem {
        self.from_laurent(&LaurentPoly::a_pow(e))
    }

    fn q_pow(&self, e: i64) -> Self::Elem {
        self.from_laurent(&LaurentPoly::q_pow(e))
    }

    /// The loop value `-(a^2 + a^-2)`.
    fn delta(&self) -> Self::Elem {
        self.from_laurent(&delta_poly())
    }

    fn quantum_int(&self, n: u32) -> Self::Elem {
        self.from_laurent(&LaurentPoly::quantum_int(n))
    }

    fn quantum_factorial(&self, n: u32) -> Self::Elem {
        self.from_laurent(&LaurentPoly::quantum_factorial(n))
    }

    fn sum<I: IntoIterator<Item = Self::Elem>>(&self, it: I) -> Self::Elem {
        it.into_iter().fold(self.zero(), |acc, x| acc.add(&x))
    }
}

pub fn delta_poly() -> LaurentPoly {
    LaurentPoly::from_terms([
        (2, -Q::from_integer(1.into())),
        (-2, -Q::from_integer(1.into())),
    ])
}

/// `Q(a)` with `a` transcendental.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GenericField;

impl Field for GenericField {
    type Elem = RatFunc;

    fn mode(&self) -> Mode {
        Mode::Generic
    }

    fn from_laurent(&self, p: &LaurentPoly) -> RatFunc {
        RatFunc::from_laurent(p.clone())
    }

    fn from_ratfunc(&self, x: &RatFunc) -> Result<RatFunc> {
        Ok(x.clone())
    }
}

/// `Q(zeta_{4r})` with `a = zeta_{4r}`, so `q` is a primitive `2r`-th root of unity.
#[derive(Debug, Clone)]
pub struct RootOfUnity {
    ctx: Arc<CycloCtx>,
}

impl RootOfUnity {
    pub fn new(r: u32) -> Result<Self> {
        Ok(RootOfUnity {
            ctx: CycloCtx::new(r)?,
        })
    }

    pub fn r(&self) -> u32 {
        self.ctx.r()
    }

    pub fn ctx(&self) -> &Arc<CycloCtx> {
        &self.ctx
    }
}

impl Field for RootOfUnity {
    type Elem = CycloElem;

    fn mode(&self) -> Mode {
        Mode::Root(self.ctx.r())
    }

    fn from_laurent(&self, p: &LaurentPoly) -> CycloElem {
        CycloElem::from_laurent(&self.ctx, p)
    }

    fn from_ratfunc(&self, x: &RatFunc) -> Result<CycloElem> {
        CycloElem::specialize(&self.ctx, x)
    }
}

/// Specializes a generic scalar at `a = zeta_{4r}`.
pub fn specialize(x: &RatFunc, r: u32) -> Result<CycloElem> {
    RootOfUnity::new(r)?.from_ratfunc(x)
}

/// Runs `$body` with `$f` bound to the field of the given [`Mode`].
///
/// The mode expression must evaluate to a `Mode`; the macro yields
/// `Result<T>` where `$body: Result<T>`.
#[macro_export]
macro_rules! with_field {
    ($mode:expr, $f:ident => $body:expr) => {
        match $mode {
            $crate::scalars::Mode::Generic => {
                let $f = $crate::scalars::GenericField;
                $body
            }
            $crate::scalars::Mode::Root(r) => match $crate::scalars::RootOfUnity::new(r) {
                Ok($f) => $body,
                Err(e) => Err(e.into()),
            },
        }
    };
}
