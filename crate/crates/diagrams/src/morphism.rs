use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::simple::SimpleDiagram;
use tlsl2_core::error::{Error, Result};
use tlsl2_core::scalars::{Field, Scalar};

/// A linear combination of simple `(k, l)` diagrams; an element of `E_{k,l}`.
#[derive(Clone, PartialEq, Eq)]
pub struct TlMorphism<S> {
    k: usize,
    l: usize,
    terms: BTreeMap<SimpleDiagram, S>,
}

impl<S: Scalar> TlMorphism<S> {
    pub fn zero(k: usize, l: usize) -> Self {
        TlMorphism {
            k,
            l,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram<F: Field<Elem = S>>(field: &F, d: SimpleDiagram) -> Self {
        Self::term(d, field.one())
    }

    pub fn term(d: SimpleDiagram, c: S) -> Self {
        let mut m = Self::zero(d.inputs(), d.outputs());
        m.add_term(d, c);
        m
    }

    pub fn identity<F: Field<Elem = S>>(field: &F, n: usize) -> Self {
        Self::from_diagram(field, SimpleDiagram::identity(n))
    }

    pub fn from_terms<I: IntoIterator<Item = (SimpleDiagram, S)>>(
        k: usize,
        l: usize,
        terms: I,
    ) -> Result<Self> {
        let mut m = Self::zero(k, l);
        for (d, c) in terms {
            if d.inputs() != k || d.outputs() != l {
                return Err(Error::Arity(format!("term {d:?} in a ({k},{l}) morphism")));
            }
            m.add_term(d, c);
        }
        Ok(m)
    }

    pub fn inputs(&self) -> usize {
        self.k
    }

    pub fn outputs(&self) -> usize {
        self.l
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical diagram order.
    pub fn terms(&self) -> impl Iterator<Item = (&SimpleDiagram, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &SimpleDiagram) -> Option<&S> {
        self.terms.get(d)
    }

    pub(crate) fn add_term(&mut self, d: SimpleDiagram, c: S) {
        debug_assert_eq!((d.inputs(), d.outputs()), (self.k, self.l));
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_same(&self, rhs: &Self) -> Result<()> {
        if (self.k, self.l) != (rhs.k, rhs.l) {
            return Err(Error::Arity(format!(
                "adding ({},{}) and ({},{}) morphisms",
                self.k, self.l, rhs.k, rhs.l
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        TlMorphism {
            k: self.k,
            l: self.l,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (d.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero(self.k, self.l);
        }
        TlMorphism {
            k: self.k,
            l: self.l,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (d.clone(), c.mul(s)))
                .collect(),
        }
    }

    /// `self ∘ rhs`: stacks `self` on top of `rhs`, each closed loop giving `delta`.
    pub fn compose<F: Field<Elem = S>>(&self, field: &F, rhs: &Self) -> Result<Self> {
        if self.k != rhs.l {
            return Err(Error::Arity(format!(
                "composing ({},{}) after ({},{})",
                self.k, self.l, rhs.k, rhs.l
            )));
        }
        let delta = field.delta();
        let mut powers = vec![field.one()];
        // Group products by (diagram, loops) so each delta power is applied once.
        let mut groups: BTreeMap<(SimpleDiagram, usize), Vec<(&S, &S)>> = BTreeMap::new();
        for (dt, ct) in &self.terms {
            for (db, cb) in &rhs.terms {
                let key = SimpleDiagram::compose(dt, db)?;
                groups.entry(key).or_default().push((ct, cb));
            }
        }
        let acc = groups
            .into_iter()
            .map(|(key, pairs)| (key, S::sum_of_products(&pairs)));
        let mut out = Self::zero(rhs.k, self.l);
        for ((d, loops), c) in acc {
            while powers.len() <= loops {
                let next = powers.last().unwrap().mul(&delta);
                powers.push(next);
            }
            out.add_term(d, c.mul(&powers[loops]));
        }
        Ok(out)
    }

    /// Juxtaposition, `self` on the left.
    pub fn tensor(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.k + rhs.k, self.l + rhs.l);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &rhs.terms {
                out.add_term(d1.tensor(d2), c1.mul(c2));
            }
        }
        out
    }

    /// Coefficient of the empty diagram of a closed `(0,0)` morphism.
    pub fn scalar<F: Field<Elem = S>>(&self, field: &F) -> Result<S> {
        if self.k != 0 || self.l != 0 {
            return Err(Error::NotClosed(format!(
                "({},{}) morphism",
                self.k, self.l
            )));
        }
        Ok(self
            .terms
            .get(&SimpleDiagram::empty())
            .cloned()
            .unwrap_or_else(|| field.zero()))
    }

    /// Applies a scalar map to every coefficient.
    pub fn map<T: Scalar>(&self, mut f: impl FnMut(&S) -> Result<T>) -> Result<TlMorphism<T>> {
        let mut out = TlMorphism::zero(self.k, self.l);
        for (d, c) in &self.terms {
            out.add_term(d.clone(), f(c)?);
        }
        Ok(out)
    }

    /// `{"inputs", "outputs", "terms": [{"matching": [1-based], "coeff": text}]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(d, c)| json!({ "matching": d.one_based(), "coeff": c.to_string() }))
            .collect();
        json!({ "inputs": self.k, "outputs": self.l, "terms": terms })
    }

    pub fn from_json<F: Field<Elem = S>>(field: &F, v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::parse(1, format!("morphism json: {m}"));
        let k = v["inputs"].as_u64().ok_or_else(|| bad("inputs"))? as usize;
        let l = v["outputs"].as_u64().ok_or_else(|| bad("outputs"))? as usize;
        let mut out = Self::zero(k, l);
        for t in v["terms"].as_array().ok_or_else(|| bad("terms"))? {
            let m: Vec<usize> = t["matching"]
                .as_array()
                .ok_or_else(|| bad("matching"))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|x| x as usize)
                        .ok_or_else(|| bad("matching"))
                })
                .collect::<Result<_>>()?;
            let c = field.parse(t["coeff"].as_str().ok_or_else(|| bad("coeff"))?)?;
            out.add_term(SimpleDiagram::from_one_based(k, l, &m)?, c);
        }
        Ok(out)
    }
}

impl<S: Scalar> std::fmt::Debug for TlMorphism<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TlMorphism({},{})", self.k, self.l)?;
        f.debug_map()
            .entries(
                self.terms
                    .iter()
                    .map(|(d, c)| (d.to_string(), c.to_string())),
            )
            .finish()
    }
}
