//! The category whose objects are color sequences and whose morphisms are
//! diagrams sandwiched between Jones-Wenzl tensors.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::tl_category::{Morph, TlCategory};
use crate::{enumerate_simple, SimpleDiagram, TlMorphism};
use tlsl2_core::error::{Error, Result};
use tlsl2_core::linalg::{self, Matrix};
use tlsl2_core::scalars::{Field, Mode, Scalar};

/// A finite sequence of colors; color 0 stands for the unit and is dropped.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ObjectSeq(Vec<u32>);

impl ObjectSeq {
    pub fn new(colors: impl IntoIterator<Item = u32>) -> Self {
        ObjectSeq(colors.into_iter().filter(|&c| c != 0).collect())
    }

    pub fn unit() -> Self {
        ObjectSeq(Vec::new())
    }

    /// Checks that every color lies in `J` for the mode (`1..=r-2` at a root).
    pub fn validate(&self, mode: Mode) -> Result<()> {
        if let Mode::Root(r) = mode {
            if let Some(&c) = self.0.iter().find(|&&c| c + 2 > r) {
                return Err(Error::InvalidColor { color: c, mode });
            }
        }
        Ok(())
    }

    pub fn colors(&self) -> &[u32] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// `|s|`, the number of strands.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum()
    }

    pub fn dual(&self) -> Self {
        ObjectSeq(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, rhs: &Self) -> Self {
        ObjectSeq(self.0.iter().chain(&rhs.0).copied().collect())
    }

    /// Block index of each strand.
    pub fn block_of(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(b, &c)| std::iter::repeat(b).take(c as usize))
            .collect()
    }
}

impl fmt::Display for ObjectSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for ObjectSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ObjectSeq {
    type Err = Error;

    /// Accepts `1,2`, `(1,2)`, `()`, `0` or the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(inner)
            .trim();
        if inner.is_empty() {
            return Ok(Self::unit());
        }
        let colors = inner
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::parse(1, format!("bad color '{}' in '{s}'", c.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(colors))
    }
}

impl serde::Serialize for ObjectSeq {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for ObjectSeq {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Self::new(Vec::<u32>::deserialize(d)?))
    }
}

/// No arc joins two points of one input block or of one output block.
pub fn is_good_type(d: &SimpleDiagram, s: &ObjectSeq, t: &ObjectSeq) -> bool {
    let k = d.inputs();
    let (bs, bt) = (s.block_of(), t.block_of());
    d.arcs().all(|(p, q)| {
        if q < k {
            bs[p] != bs[q]
        } else if p >= k {
            bt[p - k] != bt[q - k]
        } else {
            true
        }
    })
}

pub fn good_type_diagrams(s: &ObjectSeq, t: &ObjectSeq) -> Vec<SimpleDiagram> {
    enumerate_simple(s.size(), t.size())
        .into_iter()
        .filter(|d| is_good_type(d, s, t))
        .collect()
}

/// `D_{n,m,j}`: `j` nested caps joining the last `j` strands of the first
/// block to the first `j` strands of the second.
pub fn d_nmj(n: usize, m: usize, j: usize) -> Result<SimpleDiagram> {
    if j > n.min(m) {
        return Err(Error::OutOfRange(format!("D_{{{n},{m},{j}}}")));
    }
    Ok(SimpleDiagram::identity(n - j)
        .tensor(&SimpleDiagram::nested_caps(j))
        .tensor(&SimpleDiagram::identity(m - j)))
}

/// A morphism `s -> t` absorbed by the Jones-Wenzl tensors on both sides.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HattedMorphism<S: Scalar> {
    pub source: ObjectSeq,
    pub target: ObjectSeq,
    pub value: TlMorphism<S>,
}

/// Hatted structural morphisms.
pub struct RibbonData<S> {
    /// `c_{s,t}: s ⊗ t -> t ⊗ s`
    pub braiding: TlMorphism<S>,
    /// `theta_s`
    pub twist: TlMorphism<S>,
    /// `b_s: () -> s ⊗ s*`
    pub coev: TlMorphism<S>,
    /// `d_s: s* ⊗ s -> ()`
    pub ev: TlMorphism<S>,
}

impl<F: Field> TlCategory<F> {
    fn check_objects(&self, s: &ObjectSeq, t: &ObjectSeq) -> Result<()> {
        s.validate(self.mode())?;
        t.validate(self.mode())
    }

    /// `f_t ∘ g ∘ f_s`.
    pub fn hat(
        &self,
        g: &Morph<F>,
        s: &ObjectSeq,
        t: &ObjectSeq,
    ) -> Result<HattedMorphism<F::Elem>> {
        if g.inputs() != s.size() || g.outputs() != t.size() {
            return Err(Error::Arity(format!(
                "a ({},{}) morphism between {s} and {t}",
                g.inputs(),
                g.outputs()
            )));
        }
        let fs = self.jw_tensor(s.colors())?;
        let ft = self.jw_tensor(t.colors())?;
        let value = self.compose_all(&[&ft, g, &fs])?;
        Ok(HattedMorphism {
            source: s.clone(),
            target: t.clone(),
            value,
        })
    }

    pub fn hom_basis(&self, s: &ObjectSeq, t: &ObjectSeq) -> Result<Vec<HattedMorphism<F::Elem>>> {
        self.check_objects(s, t)?;
        good_type_diagrams(s, t)
            .into_iter()
            .map(|d| self.hat(&TlMorphism::from_diagram(self.field(), d), s, t))
            .collect()
    }

    pub fn ribbon_data(&self, s: &ObjectSeq, t: &ObjectSeq) -> Result<RibbonData<F::Elem>> {
        self.check_objects(s, t)?;
        let (fs, ft) = (self.jw_tensor(s.colors())?, self.jw_tensor(t.colors())?);
        let fsd = self.jw_tensor(s.dual().colors())?;
        let (n, m) = (s.size(), t.size());
        let braiding =
            self.compose_all(&[&ft.tensor(&fs), &*self.braiding(n, m)?, &fs.tensor(&ft)])?;
        let twist = self.compose(&*self.twist(n)?, &fs)?;
        let coev = self.compose(&fs.tensor(&fsd), &self.coev(n))?;
        let ev = self.compose(&self.ev(n), &fsd.tensor(&fs))?;
        Ok(RibbonData {
            braiding,
            twist,
            coev,
            ev,
        })
    }

    /// Trace of `g ∘ h` where `g: s -> t`, `h: t -> s`, evaluated on the
    /// smaller side.
    pub fn pairing(&self, g: &Morph<F>, h: &Morph<F>) -> Result<F::Elem> {
        if g.inputs() <= g.outputs() {
            self.closure_trace(&self.compose(h, g)?)
        } else {
            self.closure_trace(&self.compose(g, h)?)
        }
    }

    /// `M[i][j] = tr(basis_i(s -> t) ∘ basis_j(t -> s))`.
    pub fn gram_matrix(&self, s: &ObjectSeq, t: &ObjectSeq) -> Result<Matrix<F::Elem>> {
        let left = self.hom_basis(s, t)?;
        let right = self.hom_basis(t, s)?;
        left.par_iter()
            .map(|g| {
                right
                    .iter()
                    .map(|h| self.pairing(&g.value, &h.value))
                    .collect::<Result<Vec<_>>>()
            })
            .collect()
    }

    /// Dimension of the hom space modulo negligible morphisms.
    pub fn purified_hom_dim(&self, s: &ObjectSeq, t: &ObjectSeq) -> Result<usize> {
        Ok(linalg::rank(self.field(), &self.gram_matrix(s, t)?))
    }

    /// JSON report of the hom basis and Gram matrix.
    pub fn gram_report(&self, s: &ObjectSeq, t: &ObjectSeq) -> Result<Value> {
        let gram = self.gram_matrix(s, t)?;
        let rank = linalg::rank(self.field(), &gram);
        let basis = |a: &ObjectSeq, b: &ObjectSeq| -> Vec<Vec<usize>> {
            good_type_diagrams(a, b)
                .iter()
                .map(|d| d.one_based())
                .collect()
        };
        let entries: Vec<Vec<String>> = gram
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        Ok(json!({
            "source": s,
            "target": t,
            "mode": self.mode(),
            "basis": basis(s, t),
            "dual_basis": basis(t, s),
            "gram": entries,
            "rank": rank,
        }))
    }
}
