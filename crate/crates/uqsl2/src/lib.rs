//! The fundamental `U_q(sl_2)` module `V` and its tensor powers: generator
//! actions, highest-weight vectors, Clebsch-Gordan data and the elementary
//! intertwiners.

mod tensor;

pub use tensor::{bits, weight, RepMap, TensorVector};

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use tlsl2_core::cache::{cached, Cache};
use tlsl2_core::error::{Error, Result};
use tlsl2_core::linalg::{self, Matrix};
use tlsl2_core::scalars::{Field, Mode, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    K,
    KInv,
    X,
    Y,
}

/// A highest-weight vector together with its weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HwVector<S: Scalar> {
    pub vector: TensorVector<S>,
    pub weight: i64,
}

/// The five elementary intertwiners.
#[derive(Debug, Clone)]
pub struct Elementary<S: Scalar> {
    pub b: RepMap<S>,
    pub d: RepMap<S>,
    pub alpha: RepMap<S>,
    pub c: RepMap<S>,
    pub theta: RepMap<S>,
}

/// Clebsch-Gordan decomposition of `V_n ⊗ V_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CgDims {
    pub multiplicities: BTreeMap<u32, usize>,
    pub negligible: bool,
}

pub fn cg_dims(n: u32, m: u32, mode: Mode) -> Result<CgDims> {
    let top = match mode {
        Mode::Generic => n + m,
        Mode::Root(r) => {
            for c in [n, m] {
                if c + 2 > r {
                    return Err(Error::InvalidColor { color: c, mode });
                }
            }
            (n + m).min((2 * r - 4).saturating_sub(n + m))
        }
    };
    let low = n.abs_diff(m);
    let multiplicities = (low..=top).step_by(2).map(|k| (k, 1)).collect();
    let negligible = matches!(mode, Mode::Root(r) if n + m + 2 > r);
    Ok(CgDims {
        multiplicities,
        negligible,
    })
}

/// Action of a generator on one basis vector of `V^{⊗n}`, as `(index, coefficient)` pairs.
fn act_basis<F: Field>(f: &F, g: Generator, n: usize, x: usize) -> Vec<(usize, F::Elem)> {
    match g {
        Generator::K => vec![(x, f.q_pow(weight(x, n)))],
        Generator::KInv => vec![(x, f.q_pow(-weight(x, n)))],
        Generator::X | Generator::Y => {
            let mut out = Vec::new();
            for i in 0..n {
                let bit = n - 1 - i;
                let set = (x >> bit) & 1 == 1;
                let right = x & ((1 << bit) - 1);
                let left = x >> (bit + 1);
                match g {
                    // 1 ⊗ ... ⊗ X ⊗ K ⊗ ... ⊗ K
                    Generator::X if set => {
                        out.push((x ^ (1 << bit), f.q_pow(weight(right, bit))));
                    }
                    // K^-1 ⊗ ... ⊗ K^-1 ⊗ Y ⊗ 1 ⊗ ... ⊗ 1
                    Generator::Y if !set => {
                        out.push((x | (1 << bit), f.q_pow(-weight(left, i))));
                    }
                    _ => {}
                }
            }
            out
        }
    }
}

/// Iterated-coproduct action of a generator on `V^{⊗n}`.
pub fn act<F: Field>(f: &F, g: Generator, v: &TensorVector<F::Elem>) -> TensorVector<F::Elem> {
    let n = v.rank();
    let mut out = TensorVector::zero(n);
    for (x, c) in v.components() {
        for (y, e) in act_basis(f, g, n, x) {
            out.add_at(y, e.mul(c));
        }
    }
    out
}

/// `Y^i v` by repeated application.
pub fn y_power<F: Field>(f: &F, i: u32, v: &TensorVector<F::Elem>) -> TensorVector<F::Elem> {
    (0..i).fold(v.clone(), |acc, _| act(f, Generator::Y, &acc))
}

/// `Y^i` on `W ⊗ W'` with `W = V^{⊗split}`, through the closed form of `Δ(Y^i)`.
pub fn act_y_power<F: Field>(
    f: &F,
    i: u32,
    v: &TensorVector<F::Elem>,
    split: usize,
) -> Result<TensorVector<F::Elem>> {
    let n = v.rank();
    if split > n {
        return Err(Error::Arity(format!("split {split} of a rank {n} vector")));
    }
    let rb = n - split;
    let mut out = TensorVector::zero(n);
    for (x, c) in v.components() {
        let left = TensorVector::basis(f, split, x >> rb);
        let right = TensorVector::basis(f, rb, x & ((1 << rb) - 1));
        for s in 0..=i {
            let binom = f
                .quantum_factorial(i)
                .div(&f.quantum_factorial(s).mul(&f.quantum_factorial(i - s)))?;
            let (s64, i64_) = (s as i64, i as i64);
            let kpow = f.q_pow((s64 - i64_) * weight(x >> rb, split));
            let coeff = f.q_pow(s64 * (i64_ - s64)).mul(&binom).mul(&kpow).mul(c);
            let l = y_power(f, s, &left);
            let r = y_power(f, i - s, &right);
            out = out.add(&l.tensor(&r).scale(&coeff));
        }
    }
    Ok(out)
}

/// Matrix of a generator on `V^{⊗n}`.
pub fn generator_matrix<F: Field>(f: &F, g: Generator, n: usize) -> RepMap<F::Elem> {
    let cols: Vec<_> = (0..1 << n)
        .map(|x| act(f, g, &TensorVector::basis(f, n, x)))
        .collect();
    RepMap::from_columns(f, n, n, &cols)
}

pub fn elementary<F: Field>(f: &F) -> Elementary<F::Elem> {
    let (one, zero) = (f.one(), f.zero());
    let q = f.q_pow(1);
    let qi = f.q_pow(-1);
    let (a, ai) = (f.a_pow(1), f.a_pow(-1));
    let b = RepMap::from_rows(
        0,
        2,
        vec![
            vec![zero.clone()],
            vec![q.neg()],
            vec![one.clone()],
            vec![zero.clone()],
        ],
    )
    .expect("shape");
    let d = RepMap::from_rows(
        2,
        0,
        vec![vec![zero.clone(), one.clone(), qi.neg(), zero.clone()]],
    )
    .expect("shape");
    let alpha = RepMap::from_rows(
        1,
        1,
        vec![
            vec![zero.clone(), qi.neg()],
            vec![one.clone(), zero.clone()],
        ],
    )
    .expect("shape");
    let mut c = RepMap::zero(f, 2, 2);
    c.set(0b00, 0b00, a.clone());
    c.set(0b10, 0b01, ai.clone());
    c.set(0b11, 0b11, a);
    c.set(0b01, 0b10, ai.clone());
    c.set(0b10, 0b10, ai.mul(&q.sub(&qi)));
    let theta = RepMap::identity(f, 1).scale(&f.a_pow(3));
    Elementary {
        b,
        d,
        alpha,
        c,
        theta,
    }
}

/// Highest-weight vector of weight `n + m - 2p` in `W ⊗ W'`, where `w`, `w'`
/// have weights `n`, `m`.
pub fn cg_vector<F: Field>(
    f: &F,
    w: &HwVector<F::Elem>,
    w2: &HwVector<F::Elem>,
    p: u32,
) -> Result<HwVector<F::Elem>> {
    if w.weight < 0 || w2.weight < 0 {
        return Err(Error::OutOfRange("negative highest weight".into()));
    }
    let (n, m) = (w.weight as u32, w2.weight as u32);
    if p > n.min(m) {
        return Err(Error::OutOfRange(format!("p = {p} > min({n}, {m})")));
    }
    let fac = |k: u32| f.quantum_factorial(k);
    let denom_fixed = fac(m - p).mul(&fac(n));
    let mut out = TensorVector::zero(w.vector.rank() + w2.vector.rank());
    for i in 0..=p {
        let num = fac(m - p + i).mul(&fac(n - i));
        let den = fac(i).mul(&fac(p - i)).mul(&denom_fixed);
        let (ii, pp, mm) = (i as i64, p as i64, m as i64);
        let mut coeff = num.div(&den)?.mul(&f.q_pow(-ii * (mm - 2 * pp + ii + 1)));
        if i % 2 == 1 {
            coeff = coeff.neg();
        }
        let left = y_power(f, i, &w.vector);
        let right = y_power(f, p - i, &w2.vector);
        out = out.add(&left.tensor(&right).scale(&coeff));
    }
    Ok(HwVector {
        vector: out,
        weight: (n + m - 2 * p) as i64,
    })
}

/// Representation-side context over a fixed field, with memo tables.
pub struct Uq<F: Field> {
    field: F,
    elementary: Elementary<F::Elem>,
    hw: Cache<(usize, usize), Vec<HwVector<F::Elem>>>,
    homs: Cache<(usize, usize), Vec<RepMap<F::Elem>>>,
    projectors: Cache<usize, RepMap<F::Elem>>,
    generators: Cache<(Generator, usize), RepMap<F::Elem>>,
}

impl<F: Field> Uq<F> {
    pub fn new(field: F) -> Self {
        let elementary = elementary(&field);
        Uq {
            field,
            elementary,
            hw: Mutex::default(),
            homs: Mutex::default(),
            projectors: Mutex::default(),
            generators: Mutex::default(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn elementary(&self) -> &Elementary<F::Elem> {
        &self.elementary
    }

    pub fn generator(&self, g: Generator, n: usize) -> Arc<RepMap<F::Elem>> {
        cached(&self.generators, &(g, n), || {
            Ok(generator_matrix(&self.field, g, n))
        })
        .expect("infallible")
    }

    /// Basis of `{v ∈ V^{⊗n} : Xv = 0, Kv = q^k v}` by kernel extraction on the weight slice.
    pub fn highest_weight_basis(&self, n: usize, k: usize) -> Result<Arc<Vec<HwVector<F::Elem>>>> {
        if k > n || (n - k) % 2 == 1 {
            return Err(Error::OutOfRange(format!("weight {k} in V^{n}")));
        }
        cached(&self.hw, &(n, k), || {
            let f = &self.field;
            let ones = ((n - k) / 2) as u32;
            let slice: Vec<usize> = (0..1usize << n)
                .filter(|x| x.count_ones() == ones)
                .collect();
            // rows indexed by the weight k+2 slice
            let mut rows: BTreeMap<usize, Vec<F::Elem>> = BTreeMap::new();
            for (j, &x) in slice.iter().enumerate() {
                for (y, c) in act_basis(f, Generator::X, n, x) {
                    let row = rows.entry(y).or_insert_with(|| vec![f.zero(); slice.len()]);
                    row[j] = row[j].add(&c);
                }
            }
            let m: Matrix<F::Elem> = rows.into_values().collect();
            let kernel = if m.is_empty() {
                linalg::identity(f, slice.len())
            } else {
                linalg::nullspace(f, &m, slice.len())
            };
            Ok(kernel
                .into_iter()
                .map(|v| {
                    let mut t = TensorVector::zero(n);
                    for (j, c) in v.into_iter().enumerate() {
                        t.add_at(slice[j], c);
                    }
                    HwVector {
                        vector: t,
                        weight: k as i64,
                    }
                })
                .collect())
        })
    }

    /// Basis of `Hom_{U_q}(V^{⊗k}, V^{⊗l})` from the intertwiner equations for `K`, `X`, `Y`.
    pub fn rep_hom_basis(&self, k: usize, l: usize) -> Result<Arc<Vec<RepMap<F::Elem>>>> {
        cached(&self.homs, &(k, l), || {
            let f = &self.field;
            // K-equivariance: only entries between equal K-eigenvalues
            let mut unknowns: Vec<(usize, usize)> = Vec::new();
            for y in 0..1usize << l {
                for x in 0..1usize << k {
                    if f.q_pow(weight(y, l)) == f.q_pow(weight(x, k)) {
                        unknowns.push((y, x));
                    }
                }
            }
            let index: HashMap<(usize, usize), usize> =
                unknowns.iter().enumerate().map(|(i, &p)| (p, i)).collect();
            let mut rows: Vec<Vec<F::Elem>> = Vec::new();
            for g in [Generator::X, Generator::Y] {
                // (g_l M - M g_k)[y'][x] = 0
                let mut eqs: BTreeMap<(usize, usize), BTreeMap<usize, F::Elem>> = BTreeMap::new();
                for &(y, x) in &unknowns {
                    let u = index[&(y, x)];
                    for (y2, c) in act_basis(f, g, l, y) {
                        let e = eqs
                            .entry((y2, x))
                            .or_default()
                            .entry(u)
                            .or_insert_with(|| f.zero());
                        *e = e.add(&c);
                    }
                }
                for x in 0..1usize << k {
                    for (x2, c) in act_basis(f, g, k, x) {
                        // M[y'][x2] * g[x2][x]
                        for y in 0..1usize << l {
                            if let Some(&u) = index.get(&(y, x2)) {
                                let e = eqs
                                    .entry((y, x))
                                    .or_default()
                                    .entry(u)
                                    .or_insert_with(|| f.zero());
                                *e = e.sub(&c);
                            }
                        }
                    }
                }
                for (_, eq) in eqs {
                    if eq.values().all(Scalar::is_zero) {
                        continue;
                    }
                    let mut row = vec![f.zero(); unknowns.len()];
                    for (u, c) in eq {
                        row[u] = c;
                    }
                    rows.push(row);
                }
            }
            let kernel = if rows.is_empty() {
                linalg::identity(f, unknowns.len())
            } else {
                linalg::nullspace(f, &rows, unknowns.len())
            };
            Ok(kernel
                .into_iter()
                .map(|v| {
                    let mut m = RepMap::zero(f, k, l);
                    for (u, c) in v.into_iter().enumerate() {
                        let (y, x) = unknowns[u];
                        m.set(y, x, c);
                    }
                    m
                })
                .collect())
        })
    }

    /// The idempotent onto the `V_n`-isotypic part of `V^{⊗n}`, built from the
    /// `Y`-orbits of highest-weight vectors.
    pub fn hw_projector(&self, n: usize) -> Result<Arc<RepMap<F::Elem>>> {
        cached(&self.projectors, &n, || {
            let f = &self.field;
            let dim = 1usize << n;
            let mut columns: Vec<Vec<F::Elem>> = Vec::with_capacity(dim);
            let mut top = 0;
            for k in (n % 2..=n).rev().step_by(2) {
                for u in self.highest_weight_basis(n, k)?.iter() {
                    for i in 0..=k as u32 {
                        columns.push(y_power(f, i, &u.vector).to_dense(f));
                    }
                }
                if k == n {
                    top = columns.len();
                }
            }
            if columns.len() != dim {
                return Err(Error::Verification(format!(
                    "Y-orbits of highest-weight vectors span {} of {dim} dimensions",
                    columns.len()
                )));
            }
            let basis = linalg::transpose(&columns, dim);
            let inv = linalg::inverse(f, &basis)?;
            let left: Matrix<F::Elem> = basis.iter().map(|r| r[..top].to_vec()).collect();
            let p = linalg::mat_mul(f, &left, &inv[..top].to_vec());
            RepMap::from_rows(n, n, p)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tlsl2_core::scalars::{GenericField, RootOfUnity};

    const G: GenericField = GenericField;

    fn vec(n: usize, terms: &[(usize, &str)]) -> TensorVector<tlsl2_core::scalars::RatFunc> {
        let mut v = TensorVector::zero(n);
        for (x, c) in terms {
            v.add_at(*x, G.parse(c).unwrap());
        }
        v
    }

    #[test]
    fn generator_actions() {
        let v01 = TensorVector::basis(&G, 2, 0b01);
        assert_eq!(act(&G, Generator::K, &v01), v01);
        assert_eq!(
            act(&G, Generator::X, &TensorVector::basis(&G, 1, 1)),
            TensorVector::basis(&G, 1, 0)
        );
        assert_eq!(
            act(&G, Generator::X, &TensorVector::basis(&G, 2, 0b10)),
            vec(2, &[(0b00, "a^2")])
        );
    }

    #[test]
    fn y_powers() {
        let v00 = TensorVector::top(&G, 2);
        assert_eq!(act_y_power(&G, 0, &v00, 1).unwrap(), v00);
        assert_eq!(
            act_y_power(&G, 1, &v00, 1).unwrap(),
            vec(2, &[(0b01, "a^-2"), (0b10, "1")])
        );
        assert!(act_y_power(&G, 2, &TensorVector::top(&G, 1), 1)
            .unwrap()
            .is_zero());
        for n in 1..=4 {
            for x in 0..1 << n {
                let v = TensorVector::basis(&G, n, x);
                for split in 0..=n {
                    for i in 0..=3 {
                        assert_eq!(act_y_power(&G, i, &v, split).unwrap(), y_power(&G, i, &v));
                    }
                }
            }
        }
    }

    #[test]
    fn hopf_relations() {
        let f = G;
        for n in 1..=4 {
            let k = generator_matrix(&f, Generator::K, n);
            let ki = generator_matrix(&f, Generator::KInv, n);
            let x = generator_matrix(&f, Generator::X, n);
            let y = generator_matrix(&f, Generator::Y, n);
            let kxk = k.compose(&f, &x).unwrap().compose(&f, &ki).unwrap();
            assert_eq!(kxk, x.scale(&f.q_pow(2)));
            let kyk = k.compose(&f, &y).unwrap().compose(&f, &ki).unwrap();
            assert_eq!(kyk, y.scale(&f.q_pow(-2)));
            let comm = x
                .compose(&f, &y)
                .unwrap()
                .sub(&y.compose(&f, &x).unwrap())
                .unwrap();
            let rhs = k
                .sub(&ki)
                .unwrap()
                .scale(&f.q_pow(1).sub(&f.q_pow(-1)).inv().unwrap());
            assert_eq!(comm, rhs);
        }
    }

    #[test]
    fn elementary_maps() {
        let e = elementary(&G);
        assert_eq!(e.d.get(0, 0b10), &G.parse("-a^-2").unwrap());
        let db = e.d.compose(&G, &e.b).unwrap();
        assert_eq!(db.get(0, 0), &G.quantum_int(2).neg());
        let bd = e.b.compose(&G, &e.d).unwrap();
        let expect = RepMap::identity(&G, 2)
            .scale(&G.a_pow(1))
            .add(&bd.scale(&G.a_pow(-1)))
            .unwrap();
        assert_eq!(e.c, expect);
        // b and d are intertwiners
        for g in [Generator::K, Generator::X, Generator::Y] {
            let g2 = generator_matrix(&G, g, 2);
            let g0 = generator_matrix(&G, g, 0);
            assert_eq!(g2.compose(&G, &e.b).unwrap(), e.b.compose(&G, &g0).unwrap());
            assert_eq!(e.d.compose(&G, &g2).unwrap(), g0.compose(&G, &e.d).unwrap());
        }
    }

    #[test]
    fn highest_weight_spaces() {
        let uq = Uq::new(G);
        let hw = uq.highest_weight_basis(1, 1).unwrap();
        assert_eq!(hw[0].vector, TensorVector::top(&G, 1));
        let hw = uq.highest_weight_basis(2, 0).unwrap();
        assert_eq!(hw.len(), 1);
        assert_eq!(hw[0].vector, vec(2, &[(0b01, "1"), (0b10, "-a^-2")]));
        assert_eq!(uq.highest_weight_basis(4, 0).unwrap().len(), 2);
        // multiplicities from iterated Clebsch-Gordan
        let mut mult: BTreeMap<u32, usize> = BTreeMap::from([(0, 1)]);
        for n in 1..=6usize {
            let mut next = BTreeMap::new();
            for (&k, &c) in &mult {
                for (&j, _) in &cg_dims(k, 1, Mode::Generic).unwrap().multiplicities {
                    *next.entry(j).or_insert(0) += c;
                }
            }
            mult = next;
            for (&k, &c) in &mult {
                let hw = uq.highest_weight_basis(n, k as usize).unwrap();
                assert_eq!(hw.len(), c, "n={n} k={k}");
                for h in hw.iter() {
                    assert!(act(&G, Generator::X, &h.vector).is_zero());
                    assert_eq!(h.vector.weight(), Some(k as i64));
                }
            }
        }
    }

    #[test]
    fn clebsch_gordan_vectors() {
        let v0 = HwVector {
            vector: TensorVector::top(&G, 1),
            weight: 1,
        };
        assert_eq!(
            cg_vector(&G, &v0, &v0, 0).unwrap().vector,
            TensorVector::top(&G, 2)
        );
        let v = cg_vector(&G, &v0, &v0, 1).unwrap();
        assert_eq!(v.vector, vec(2, &[(0b01, "1"), (0b10, "-a^-2")]));
        for n in 1..=4 {
            for m in 1..=4 {
                let w = HwVector {
                    vector: TensorVector::top(&G, n),
                    weight: n as i64,
                };
                let w2 = HwVector {
                    vector: TensorVector::top(&G, m),
                    weight: m as i64,
                };
                for p in 0..=n.min(m) as u32 {
                    let v = cg_vector(&G, &w, &w2, p).unwrap();
                    assert!(!v.vector.is_zero());
                    assert!(act(&G, Generator::X, &v.vector).is_zero());
                    assert_eq!(v.vector.weight(), Some(v.weight));
                }
            }
        }
    }

    #[test]
    fn cg_dimension_tables() {
        let d = cg_dims(1, 1, Mode::Generic).unwrap();
        assert_eq!(d.multiplicities, BTreeMap::from([(0, 1), (2, 1)]));
        assert!(!d.negligible);
        let d = cg_dims(1, 1, Mode::Root(3)).unwrap();
        assert_eq!(d.multiplicities, BTreeMap::from([(0, 1)]));
        assert!(d.negligible);
        let d = cg_dims(2, 3, Mode::Generic).unwrap();
        assert_eq!(d.multiplicities, BTreeMap::from([(1, 1), (3, 1), (5, 1)]));
        assert!(cg_dims(2, 1, Mode::Root(3)).is_err());
    }

    #[test]
    fn intertwiner_spaces() {
        let uq = Uq::new(G);
        assert_eq!(
            *uq.rep_hom_basis(1, 1).unwrap(),
            vec![RepMap::identity(&G, 1)]
        );
        let h = uq.rep_hom_basis(2, 0).unwrap();
        assert_eq!(h.len(), 1);
        let d = &uq.elementary().d;
        assert_eq!(h[0], *d);
        assert_eq!(uq.rep_hom_basis(0, 2).unwrap().len(), 1);
        assert_eq!(uq.rep_hom_basis(2, 2).unwrap().len(), 2);
        assert_eq!(uq.rep_hom_basis(3, 3).unwrap().len(), 5);
        assert_eq!(uq.rep_hom_basis(1, 2).unwrap().len(), 0);
    }

    #[test]
    fn projectors() {
        let uq = Uq::new(G);
        assert_eq!(*uq.hw_projector(1).unwrap(), RepMap::identity(&G, 1));
        let p2 = uq.hw_projector(2).unwrap();
        let v0 = HwVector {
            vector: TensorVector::top(&G, 1),
            weight: 1,
        };
        let cg = cg_vector(&G, &v0, &v0, 1).unwrap();
        assert!(p2.apply(&cg.vector).unwrap().is_zero());
        let top = TensorVector::top(&G, 2);
        assert_eq!(p2.apply(&top).unwrap(), top);
        for n in 1..=4 {
            let p = uq.hw_projector(n).unwrap();
            assert_eq!(p.compose(&G, &p).unwrap(), *p);
            for g in [Generator::K, Generator::X, Generator::Y] {
                let m = generator_matrix(&G, g, n);
                assert_eq!(m.compose(&G, &p).unwrap(), p.compose(&G, &m).unwrap());
            }
        }
    }

    #[test]
    fn root_of_unity_context() {
        let f = RootOfUnity::new(4).unwrap();
        let uq = Uq::new(f.clone());
        assert_eq!(uq.rep_hom_basis(2, 2).unwrap().len(), 2);
        assert_eq!(uq.highest_weight_basis(2, 0).unwrap().len(), 1);
        let p = uq.hw_projector(2).unwrap();
        assert_eq!(p.compose(&f, &p).unwrap(), *p);
    }
}
