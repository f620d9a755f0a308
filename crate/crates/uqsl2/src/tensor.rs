use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use tlsl2_core::error::{Error, Result};
use tlsl2_core::scalars::{Field, Scalar};

/// Bitstring label of a basis index of `V^{⊗n}`; the first factor is the
/// most significant bit and `v_0` is bit 0.
pub fn bits(x: usize, n: usize) -> String {
    (0..n)
        .map(|i| {
            if (x >> (n - 1 - i)) & 1 == 1 {
                '1'
            } else {
                '0'
            }
        })
        .collect()
}

/// Weight `#0 - #1` of a basis index.
pub fn weight(x: usize, n: usize) -> i64 {
    n as i64 - 2 * x.count_ones() as i64
}

/// A vector in `V^{⊗n}` with sparse components.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorVector<S> {
    n: usize,
    comps: BTreeMap<usize, S>,
}

impl<S: Scalar> TensorVector<S> {
    pub fn zero(n: usize) -> Self {
        TensorVector {
            n,
            comps: BTreeMap::new(),
        }
    }

    /// The basis vector `v_{x_1} ⊗ ... ⊗ v_{x_n}`.
    pub fn basis<F: Field<Elem = S>>(f: &F, n: usize, x: usize) -> Self {
        let mut v = Self::zero(n);
        v.add_at(x, f.one());
        v
    }

    /// `v_0^{⊗n}`.
    pub fn top<F: Field<Elem = S>>(f: &F, n: usize) -> Self {
        Self::basis(f, n, 0)
    }

    pub fn from_dense(n: usize, v: &[S]) -> Self {
        let mut out = Self::zero(n);
        for (x, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.comps.insert(x, c.clone());
            }
        }
        out
    }

    pub fn to_dense<F: Field<Elem = S>>(&self, f: &F) -> Vec<S> {
        let mut v = vec![f.zero(); 1 << self.n];
        for (x, c) in &self.comps {
            v[*x] = c.clone();
        }
        v
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn get(&self, x: usize) -> Option<&S> {
        self.comps.get(&x)
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &S)> {
        self.comps.iter().map(|(x, c)| (*x, c))
    }

    pub fn add_at(&mut self, x: usize, c: S) {
        debug_assert!(x < 1 << self.n);
        if c.is_zero() {
            return;
        }
        match self.comps.entry(x) {
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

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "adding vectors of different rank");
        let mut out = self.clone();
        for (x, c) in &rhs.comps {
            out.add_at(*x, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        TensorVector {
            n: self.n,
            comps: self.comps.iter().map(|(x, c)| (*x, c.mul(s))).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TensorVector {
            n: self.n,
            comps: self.comps.iter().map(|(x, c)| (*x, c.neg())).collect(),
        }
    }

    /// `self ⊗ rhs`.
    pub fn tensor(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.n + rhs.n);
        for (x, c) in &self.comps {
            for (y, d) in &rhs.comps {
                out.comps.insert((x << rhs.n) | y, c.mul(d));
            }
        }
        out
    }

    /// Weight if `self` is a nonzero weight vector.
    pub fn weight(&self) -> Option<i64> {
        let mut ws = self.comps.keys().map(|&x| weight(x, self.n));
        let w = ws.next()?;
        ws.all(|v| v == w).then_some(w)
    }

    /// `{"rank": n, "components": {"0101": "scalar"}}`.
    pub fn to_json(&self) -> Value {
        let comps: serde_json::Map<String, Value> = self
            .comps
            .iter()
            .map(|(x, c)| (bits(*x, self.n), Value::String(c.to_string())))
            .collect();
        json!({ "rank": self.n, "components": comps })
    }
}

impl<S: Scalar> fmt::Debug for TensorVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .comps
            .iter()
            .map(|(x, c)| format!("({c})v{}", bits(*x, self.n)))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A linear map `V^{⊗k} -> V^{⊗l}` as a dense `2^l × 2^k` matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct RepMap<S> {
    k: usize,
    l: usize,
    data: Vec<S>,
}

impl<S: Scalar> RepMap<S> {
    pub fn zero<F: Field<Elem = S>>(f: &F, k: usize, l: usize) -> Self {
        RepMap {
            k,
            l,
            data: vec![f.zero(); 1 << (k + l)],
        }
    }

    pub fn identity<F: Field<Elem = S>>(f: &F, n: usize) -> Self {
        let mut m = Self::zero(f, n, n);
        for x in 0..1 << n {
            m.set(x, x, f.one());
        }
        m
    }

    /// Builds from rows of length `2^k`.
    pub fn from_rows(k: usize, l: usize, rows: Vec<Vec<S>>) -> Result<Self> {
        if rows.len() != 1 << l || rows.iter().any(|r| r.len() != 1 << k) {
            return Err(Error::Arity(format!("matrix shape for a ({k},{l}) map")));
        }
        Ok(RepMap {
            k,
            l,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds from the images of the basis vectors.
    pub fn from_columns<F: Field<Elem = S>>(
        f: &F,
        k: usize,
        l: usize,
        cols: &[TensorVector<S>],
    ) -> Self {
        let mut m = Self::zero(f, k, l);
        for (x, v) in cols.iter().enumerate() {
            for (y, c) in v.components() {
                m.set(y, x, c.clone());
            }
        }
        m
    }

    pub fn source(&self) -> usize {
        self.k
    }

    pub fn target(&self) -> usize {
        self.l
    }

    pub fn rows(&self) -> usize {
        1 << self.l
    }

    pub fn cols(&self) -> usize {
        1 << self.k
    }

    pub fn get(&self, y: usize, x: usize) -> &S {
        &self.data[y * self.cols() + x]
    }

    pub fn set(&mut self, y: usize, x: usize, c: S) {
        let cols = self.cols();
        self.data[y * cols + x] = c;
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn row_vecs(&self) -> Vec<Vec<S>> {
        self.data.chunks(self.cols()).map(<[S]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn column(&self, x: usize) -> TensorVector<S> {
        let mut v = TensorVector::zero(self.l);
        for y in 0..self.rows() {
            v.add_at(y, self.get(y, x).clone());
        }
        v
    }

    pub fn apply(&self, v: &TensorVector<S>) -> Result<TensorVector<S>> {
        if v.rank() != self.k {
            return Err(Error::Arity(format!(
                "applying a ({},{}) map to a rank {} vector",
                self.k,
                self.l,
                v.rank()
            )));
        }
        let mut out = TensorVector::zero(self.l);
        for (x, c) in v.components() {
            for y in 0..self.rows() {
                let e = self.get(y, x);
                if !e.is_zero() {
                    out.add_at(y, e.mul(c));
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let data = (0..self.cols())
            .flat_map(|x| (0..self.rows()).map(move |y| (y, x)))
            .map(|(y, x)| self.get(y, x).clone())
            .collect();
        RepMap {
            k: self.l,
            l: self.k,
            data,
        }
    }

    /// Applies `id_{pos} ⊗ self ⊗ id` to a vector of rank `n`.
    pub fn apply_at(&self, v: &TensorVector<S>, pos: usize) -> Result<TensorVector<S>> {
        let n = v.rank();
        if pos + self.k > n {
            return Err(Error::Arity(format!(
                "a ({},{}) map at position {pos} of rank {n}",
                self.k, self.l
            )));
        }
        let rb = n - pos - self.k;
        let mask = (1 << self.k) - 1;
        let mut out = TensorVector::zero(n - self.k + self.l);
        for (x, c) in v.components() {
            let mid = (x >> rb) & mask;
            let left = x >> (rb + self.k);
            let right = x & ((1 << rb) - 1);
            for y in 0..self.rows() {
                let e = self.get(y, mid);
                if !e.is_zero() {
                    out.add_at((((left << self.l) | y) << rb) | right, e.mul(c));
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ rhs`.
    pub fn compose<F: Field<Elem = S>>(&self, f: &F, rhs: &Self) -> Result<Self> {
        if self.k != rhs.l {
            return Err(Error::Arity(format!(
                "composing ({},{}) after ({},{})",
                self.k, self.l, rhs.k, rhs.l
            )));
        }
        let mut out = Self::zero(f, rhs.k, self.l);
        for y in 0..self.rows() {
            for m in 0..self.cols() {
                let a = self.get(y, m);
                if a.is_zero() {
                    continue;
                }
                for x in 0..rhs.cols() {
                    let b = rhs.get(m, x);
                    if !b.is_zero() {
                        let s = out.get(y, x).add(&a.mul(b));
                        out.set(y, x, s);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product, `self` on the left (more significant factors).
    pub fn tensor<F: Field<Elem = S>>(&self, f: &F, rhs: &Self) -> Self {
        let mut out = Self::zero(f, self.k + rhs.k, self.l + rhs.l);
        for y1 in 0..self.rows() {
            for x1 in 0..self.cols() {
                let a = self.get(y1, x1);
                if a.is_zero() {
                    continue;
                }
                for y2 in 0..rhs.rows() {
                    for x2 in 0..rhs.cols() {
                        let b = rhs.get(y2, x2);
                        if !b.is_zero() {
                            out.set((y1 << rhs.l) | y2, (x1 << rhs.k) | x2, a.mul(b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if (self.k, self.l) != (rhs.k, rhs.l) {
            return Err(Error::Arity("adding maps of different shape".into()));
        }
        Ok(RepMap {
            k: self.k,
            l: self.l,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(S::neg)
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|x| x.mul(s))
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        RepMap {
            k: self.k,
            l: self.l,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Ordinary matrix trace of an endomorphism.
    pub fn matrix_trace<F: Field<Elem = S>>(&self, f: &F) -> S {
        (0..self.rows().min(self.cols())).fold(f.zero(), |acc, i| acc.add(self.get(i, i)))
    }

    /// `{"source", "target", "entries": {"row_bits|col_bits": "scalar"}}`,
    /// listing nonzero entries only.
    pub fn to_json(&self) -> Value {
        let mut entries = serde_json::Map::new();
        for y in 0..self.rows() {
            for x in 0..self.cols() {
                let e = self.get(y, x);
                if !e.is_zero() {
                    entries.insert(
                        format!("{}|{}", bits(y, self.l), bits(x, self.k)),
                        Value::String(e.to_string()),
                    );
                }
            }
        }
        json!({ "source": self.k, "target": self.l, "entries": entries })
    }
}

impl<S: Scalar> fmt::Debug for RepMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RepMap({} -> {})", self.k, self.l)?;
        for y in 0..self.rows() {
            let row: Vec<String> = (0..self.cols())
                .map(|x| self.get(y, x).to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
