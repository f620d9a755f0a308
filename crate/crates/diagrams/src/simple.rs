use std::fmt;

use tlsl2_core::error::{Error, Result};

/// A planar perfect matching of `k` input and `l` output boundary points.
///
/// Points `0..k` are the inputs (bottom, left to right) and `k..k+l` the
/// outputs (top, left to right). `matching[p]` is the partner of `p`.
/// Diagrams of equal arity are ordered lexicographically on `matching`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleDiagram {
    k: usize,
    l: usize,
    matching: Vec<usize>,
}

impl SimpleDiagram {
    /// Validates that `matching` is a fixed-point-free involution and planar.
    pub fn new(k: usize, l: usize, matching: Vec<usize>) -> Result<Self> {
        let n = k + l;
        if matching.len() != n {
            return Err(Error::InvalidDiagram(format!(
                "expected {n} entries, got {}",
                matching.len()
            )));
        }
        for (p, &q) in matching.iter().enumerate() {
            if q >= n || q == p || matching[q] != p {
                return Err(Error::InvalidDiagram(format!(
                    "{:?} is not a fixed-point-free involution",
                    matching
                )));
            }
        }
        let d = SimpleDiagram { k, l, matching };
        if !d.is_planar() {
            return Err(Error::InvalidDiagram(format!("{d} has crossing arcs")));
        }
        Ok(d)
    }

    /// Builds from a 1-based involution array, as used in text output.
    pub fn from_one_based(k: usize, l: usize, matching: &[usize]) -> Result<Self> {
        if matching.contains(&0) {
            return Err(Error::InvalidDiagram("points are numbered from 1".into()));
        }
        Self::new(k, l, matching.iter().map(|p| p - 1).collect())
    }

    pub(crate) fn from_raw(k: usize, l: usize, matching: Vec<usize>) -> Self {
        debug_assert!(Self::new(k, l, matching.clone()).is_ok());
        SimpleDiagram { k, l, matching }
    }

    pub fn empty() -> Self {
        SimpleDiagram {
            k: 0,
            l: 0,
            matching: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let matching = (0..2 * n)
            .map(|p| if p < n { p + n } else { p - n })
            .collect();
        SimpleDiagram {
            k: n,
            l: n,
            matching,
        }
    }

    /// The cup `0 -> 2`.
    pub fn cup() -> Self {
        SimpleDiagram::from_raw(0, 2, vec![1, 0])
    }

    /// The cap `2 -> 0`.
    pub fn cap() -> Self {
        SimpleDiagram::from_raw(2, 0, vec![1, 0])
    }

    /// The generator `e_i` of `E_k`, `1 <= i <= k-1`.
    pub fn e(i: usize, k: usize) -> Result<Self> {
        if i == 0 || i >= k {
            return Err(Error::OutOfRange(format!("e_{i} in E_{k}")));
        }
        let mut m = Self::identity(k).matching;
        let (b, t) = (i - 1, k + i - 1);
        m[b] = b + 1;
        m[b + 1] = b;
        m[t] = t + 1;
        m[t + 1] = t;
        Ok(SimpleDiagram::from_raw(k, k, m))
    }

    /// Nested cups `0 -> 2n`: output `i` joined to output `2n+1-i`.
    pub fn nested_cups(n: usize) -> Self {
        SimpleDiagram::from_raw(0, 2 * n, (0..2 * n).map(|p| 2 * n - 1 - p).collect())
    }

    /// Nested caps `2n -> 0`.
    pub fn nested_caps(n: usize) -> Self {
        SimpleDiagram::from_raw(2 * n, 0, (0..2 * n).map(|p| 2 * n - 1 - p).collect())
    }

    pub fn inputs(&self) -> usize {
        self.k
    }

    pub fn outputs(&self) -> usize {
        self.l
    }

    pub fn matching(&self) -> &[usize] {
        &self.matching
    }

    pub fn partner(&self, p: usize) -> usize {
        self.matching[p]
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.matching.iter().map(|p| p + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.k == self.l && *self == Self::identity(self.k)
    }

    /// Arcs as `(p, q)` with `p < q`, in order of `p`.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.matching
            .iter()
            .enumerate()
            .filter(|(p, q)| p < *q)
            .map(|(p, &q)| (p, q))
    }

    /// Position of point `p` on the boundary circle: inputs left to right,
    /// then outputs right to left.
    fn circular(&self, p: usize) -> usize {
        if p < self.k {
            p
        } else {
            self.k + (self.l - 1 - (p - self.k))
        }
    }

    fn is_planar(&self) -> bool {
        let n = self.k + self.l;
        let mut at = vec![0; n];
        for p in 0..n {
            at[self.circular(p)] = p;
        }
        let mut stack: Vec<usize> = Vec::new();
        for &p in &at {
            if stack.last() == Some(&self.matching[p]) {
                stack.pop();
            } else {
                stack.push(p);
            }
        }
        stack.is_empty()
    }

    /// Stacks `top` on `bottom`; returns the diagram and the number of closed loops.
    pub fn compose(top: &Self, bottom: &Self) -> Result<(Self, usize)> {
        if top.k != bottom.l {
            return Err(Error::Arity(format!(
                "cannot stack a ({},{}) diagram on a ({},{}) diagram",
                top.k, top.l, bottom.k, bottom.l
            )));
        }
        let (k, mid, m) = (bottom.k, bottom.l, top.l);
        let mut out = vec![usize::MAX; k + m];
        let mut seen = vec![false; mid];
        // Walk from an outer endpoint; `in_bottom` says which diagram we are in.
        let walk = |start_bottom: bool, p: usize, seen: &mut Vec<bool>| -> usize {
            let (mut in_bottom, mut p) = (start_bottom, p);
            loop {
                if in_bottom {
                    let q = bottom.matching[p];
                    if q < k {
                        return q;
                    }
                    seen[q - k] = true;
                    in_bottom = false;
                    p = q - k;
                } else {
                    let q = top.matching[p];
                    if q >= mid {
                        return k + (q - mid);
                    }
                    seen[q] = true;
                    in_bottom = true;
                    p = k + q;
                }
            }
        };
        for i in 0..k {
            if out[i] == usize::MAX {
                let j = walk(true, i, &mut seen);
                out[i] = j;
                out[j] = i;
            }
        }
        for o in 0..m {
            if out[k + o] == usize::MAX {
                let j = walk(false, mid + o, &mut seen);
                out[k + o] = j;
                out[j] = k + o;
            }
        }
        let mut loops = 0;
        for s in 0..mid {
            if seen[s] {
                continue;
            }
            loops += 1;
            let mut p = s;
            loop {
                seen[p] = true;
                let q = top.matching[p];
                seen[q] = true;
                p = bottom.matching[k + q] - k;
                if seen[p] {
                    break;
                }
            }
        }
        Ok((SimpleDiagram::from_raw(k, m, out), loops))
    }

    /// Juxtaposition with `self` on the left.
    pub fn tensor(&self, rhs: &Self) -> Self {
        let (k1, l1, k2, l2) = (self.k, self.l, rhs.k, rhs.l);
        let k = k1 + k2;
        let mf = |p: usize| if p < k1 { p } else { k + (p - k1) };
        let mg = |p: usize| if p < k2 { k1 + p } else { k + l1 + (p - k2) };
        let mut m = vec![0; k + l1 + l2];
        for (p, &q) in self.matching.iter().enumerate() {
            m[mf(p)] = mf(q);
        }
        for (p, &q) in rhs.matching.iter().enumerate() {
            m[mg(p)] = mg(q);
        }
        SimpleDiagram::from_raw(k, l1 + l2, m)
    }

    /// Planar mirror image turning `(k,l)` into `(l,k)`.
    pub fn flip(&self) -> Self {
        let f = |p: usize| if p < self.k { self.l + p } else { p - self.k };
        let mut m = vec![0; self.k + self.l];
        for (p, &q) in self.matching.iter().enumerate() {
            m[f(p)] = f(q);
        }
        SimpleDiagram::from_raw(self.l, self.k, m)
    }
}

impl fmt::Display for SimpleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.matching.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", p + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SimpleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({},{}){}", self.k, self.l, self)
    }
}

/// All simple `(k, l)` diagrams in canonical order.
pub fn enumerate_simple(k: usize, l: usize) -> Vec<SimpleDiagram> {
    let n = k + l;
    if n % 2 == 1 {
        return Vec::new();
    }
    let shape = SimpleDiagram {
        k,
        l,
        matching: Vec::new(),
    };
    let mut at = vec![0; n];
    for p in 0..n {
        at[shape.circular(p)] = p;
    }
    let mut out: Vec<SimpleDiagram> = noncrossing(0, n)
        .into_iter()
        .map(|arcs| {
            let mut m = vec![0; n];
            for (i, j) in arcs {
                m[at[i]] = at[j];
                m[at[j]] = at[i];
            }
            SimpleDiagram { k, l, matching: m }
        })
        .collect();
    out.sort();
    out
}

/// Noncrossing perfect matchings of the positions `lo..hi` on a line.
fn noncrossing(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if lo == hi {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for j in (lo + 1..hi).step_by(2) {
        let inside = noncrossing(lo + 1, j);
        let outside = noncrossing(j + 1, hi);
        for a in &inside {
            for b in &outside {
                let mut arcs = Vec::with_capacity(a.len() + b.len() + 1);
                arcs.push((lo, j));
                arcs.extend_from_slice(a);
                arcs.extend_from_slice(b);
                out.push(arcs);
            }
        }
    }
    out
}
