//! The functor from diagrams to `U_q(sl_2)`-modules: cups go to `b`, caps to
//! `d`, crossings to `c_{V,V}`. Also the representation-side ribbon data and
//! quantum trace, and the full-faithfulness checks.

mod verify;

pub use verify::{verify_batch, verify_equivalence, FunctorReport, Verdict};

use std::sync::{Arc, Mutex};

use tlsl2_core::cache::{cached, Cache};
use tlsl2_core::error::{Error, Result};
use tlsl2_core::linalg::{self, Matrix};
use tlsl2_core::scalars::{Field, Scalar};
use tlsl2_diagrams::tl_category::{braid_word, TlCategory};
use tlsl2_diagrams::turaev::ObjectSeq;
use tlsl2_diagrams::{GeneratorWord, Layer, LayerKind, SimpleDiagram, TlMorphism};
use tlsl2_uqsl2::{RepMap, TensorVector, Uq};

fn bit(x: usize, n: usize, p: usize) -> usize {
    (x >> (n - 1 - p)) & 1
}

/// Applies the image of a simple diagram to a vector. Each arc contributes one
/// factor: `d` for a cap, `b` for a cup, and a Kronecker delta for a through strand.
pub fn apply_simple<F: Field>(
    f: &F,
    d: &SimpleDiagram,
    v: &TensorVector<F::Elem>,
) -> Result<TensorVector<F::Elem>> {
    let (k, l) = (d.inputs(), d.outputs());
    if v.rank() != k {
        return Err(Error::Arity(format!(
            "a ({k},{l}) diagram on a rank {} vector",
            v.rank()
        )));
    }
    let mut caps = Vec::new();
    let mut cups = Vec::new();
    let mut through = Vec::new();
    for (p, q) in d.arcs() {
        match (p < k, q < k) {
            (true, true) => caps.push((p, q)),
            (false, false) => cups.push((p - k, q - k)),
            _ => through.push((p, q - k)),
        }
    }
    let cap_values = [f.zero(), f.one(), f.q_pow(-1).neg(), f.zero()];
    let (cup_10, cup_01) = (f.one(), f.q_pow(1).neg());
    let mut out = TensorVector::zero(l);
    for (x, c) in v.components() {
        let mut coeff = c.clone();
        for &(p, q) in &caps {
            coeff = coeff.mul(&cap_values[2 * bit(x, k, p) + bit(x, k, q)]);
        }
        if coeff.is_zero() {
            continue;
        }
        let mut base = 0usize;
        for &(p, q) in &through {
            base |= bit(x, k, p) << (l - 1 - q);
        }
        for choice in 0..1usize << cups.len() {
            let mut y = base;
            let mut e = coeff.clone();
            for (i, &(p, q)) in cups.iter().enumerate() {
                if (choice >> i) & 1 == 0 {
                    y |= 1 << (l - 1 - p);
                    e = e.mul(&cup_10);
                } else {
                    y |= 1 << (l - 1 - q);
                    e = e.mul(&cup_01);
                }
            }
            out.add_at(y, e);
        }
    }
    Ok(out)
}

pub fn f_simple<F: Field>(f: &F, d: &SimpleDiagram) -> RepMap<F::Elem> {
    let cols: Vec<_> = (0..1usize << d.inputs())
        .map(|x| apply_simple(f, d, &TensorVector::basis(f, d.inputs(), x)).expect("arity"))
        .collect();
    RepMap::from_columns(f, d.inputs(), d.outputs(), &cols)
}

pub fn apply_morphism<F: Field>(
    f: &F,
    m: &TlMorphism<F::Elem>,
    v: &TensorVector<F::Elem>,
) -> Result<TensorVector<F::Elem>> {
    let mut out = TensorVector::zero(m.outputs());
    for (d, c) in m.terms() {
        out = out.add(&apply_simple(f, d, v)?.scale(c));
    }
    Ok(out)
}

/// The image of a linear combination of diagrams.
pub fn f_diagram<F: Field>(f: &F, m: &TlMorphism<F::Elem>) -> RepMap<F::Elem> {
    let cols: Vec<_> = (0..1usize << m.inputs())
        .map(|x| apply_morphism(f, m, &TensorVector::basis(f, m.inputs(), x)).expect("arity"))
        .collect();
    RepMap::from_columns(f, m.inputs(), m.outputs(), &cols)
}

/// `c_{V,V}^{-1} = q^{-1/2} id + q^{1/2} bd`.
pub fn braiding_inverse<F: Field>(f: &F, uq: &Uq<F>) -> RepMap<F::Elem> {
    let e = uq.elementary();
    let bd = e.b.compose(f, &e.d).expect("arity");
    RepMap::identity(f, 2)
        .scale(&f.a_pow(-1))
        .add(&bd.scale(&f.a_pow(1)))
        .expect("shape")
}

/// Evaluates a generator word layer by layer with `b`, `d`, `c_{V,V}^{±1}`.
pub fn f_word<F: Field>(f: &F, uq: &Uq<F>, w: &GeneratorWord) -> Result<RepMap<F::Elem>> {
    let e = uq.elementary();
    let cinv = braiding_inverse(f, uq);
    let n = w.source();
    let mut cols: Vec<_> = (0..1usize << n)
        .map(|x| TensorVector::basis(f, n, x))
        .collect();
    for layer in w.layers() {
        let (map, pos) = match layer.kind {
            LayerKind::Id => continue,
            LayerKind::Cup(i) => (&e.b, i - 1),
            LayerKind::Cap(i) => (&e.d, i - 1),
            LayerKind::Over(i) => (&e.c, i - 1),
            LayerKind::Under(i) => (&cinv, i - 1),
        };
        cols = cols
            .iter()
            .map(|v| map.apply_at(v, pos))
            .collect::<Result<_>>()?;
    }
    Ok(RepMap::from_columns(f, n, w.target(), &cols))
}

/// Crossing part of the twist on `n` strands, unrolled from the recursion.
fn twist_word(n: usize) -> Result<GeneratorWord> {
    if n <= 1 {
        return GeneratorWord::new(vec![Layer::new(n, LayerKind::Id)?]);
    }
    twist_word(n - 1)?
        .pad(0, 1)
        .then(&braid_word(n - 1, 1))?
        .then(&braid_word(1, n - 1))
}

/// `v ∘ F(w)` for a covector `v` on the target of `w`, as a covector on its source.
fn pull_back<F: Field>(
    f: &F,
    uq: &Uq<F>,
    w: &GeneratorWord,
    mut v: TensorVector<F::Elem>,
) -> Result<TensorVector<F::Elem>> {
    let e = uq.elementary();
    let cinv = braiding_inverse(f, uq);
    for layer in w.layers().iter().rev() {
        let (map, pos) = match layer.kind {
            LayerKind::Id => continue,
            LayerKind::Cup(i) => (&e.b, i - 1),
            LayerKind::Cap(i) => (&e.d, i - 1),
            LayerKind::Over(i) => (&e.c, i - 1),
            LayerKind::Under(i) => (&cinv, i - 1),
        };
        v = map.transpose().apply_at(&v, pos)?;
    }
    Ok(v)
}

/// `α^{⊗n}: V^{⊗n} -> (V^*)^{⊗n}`, factorwise.
pub fn alpha_tensor<F: Field>(f: &F, uq: &Uq<F>, n: usize) -> RepMap<F::Elem> {
    (0..n).fold(RepMap::identity(f, 0), |acc, _| {
        acc.tensor(f, &uq.elementary().alpha)
    })
}

/// `b_{n,m,j} = q^{-m+j-1} [n+m-j+1] / [n]`.
pub fn coefficient_b<F: Field>(f: &F, n: u32, m: u32, j: u32) -> Result<F::Elem> {
    if n == 0 || m == 0 || j > n.min(m) {
        return Err(Error::OutOfRange(format!("b_{{{n},{m},{j}}}")));
    }
    let num = f
        .q_pow(j as i64 - m as i64 - 1)
        .mul(&f.quantum_int(n + m - j + 1));
    num.div(&f.quantum_int(n))
}

fn reverse_bits(x: usize, n: usize) -> usize {
    (0..n).fold(0, |acc, p| acc | (((x >> p) & 1) << (n - 1 - p)))
}

/// `f^♯ = (f ⊗ id_{V^*})(id_U ⊗ b_V)` for `f: U ⊗ V -> W`, where `V` is the
/// last `v` factors of the source. The dual factors of `(V^{⊗v})^*` come in
/// reverse order.
pub fn mate_sharp<F: Field>(f: &F, map: &RepMap<F::Elem>, v: usize) -> Result<RepMap<F::Elem>> {
    let (k, w) = (map.source(), map.target());
    if v > k {
        return Err(Error::Arity(format!(
            "mate over {v} factors of a rank {k} source"
        )));
    }
    let u = k - v;
    let mut out = RepMap::zero(f, u, w + v);
    for a in 0..1usize << u {
        for x in 0..1usize << v {
            for y in 0..1usize << w {
                let e = map.get(y, (a << v) | x);
                if !e.is_zero() {
                    out.set((y << v) | reverse_bits(x, v), a, e.clone());
                }
            }
        }
    }
    Ok(out)
}

/// `g^♭ = (id_W ⊗ d_V)(g ⊗ id_V)` for `g: U -> W ⊗ V^*`; inverse to [`mate_sharp`].
pub fn mate_flat<F: Field>(f: &F, map: &RepMap<F::Elem>, v: usize) -> Result<RepMap<F::Elem>> {
    let (u, l) = (map.source(), map.target());
    if v > l {
        return Err(Error::Arity(format!(
            "mate over {v} factors of a rank {l} target"
        )));
    }
    let w = l - v;
    let mut out = RepMap::zero(f, u + v, w);
    for a in 0..1usize << u {
        for x in 0..1usize << v {
            for y in 0..1usize << w {
                let e = map.get((y << v) | reverse_bits(x, v), a);
                if !e.is_zero() {
                    out.set(y, (a << v) | x, e.clone());
                }
            }
        }
    }
    Ok(out)
}

/// The image of an object: its projector and a basis of the image.
#[derive(Debug, Clone)]
pub struct RepObject<S: Scalar> {
    pub projector: RepMap<S>,
    pub basis: Vec<TensorVector<S>>,
}

/// Both categories over one field, with the functor between them.
pub struct Functor<F: Field> {
    tl: TlCategory<F>,
    uq: Uq<F>,
    color_projectors: Cache<u32, RepMap<F::Elem>>,
    braidings: Cache<(usize, usize), RepMap<F::Elem>>,
    twists: Cache<usize, RepMap<F::Elem>>,
    kernels: Cache<usize, Matrix<F::Elem>>,
    hw_blocks: Cache<(ObjectSeq, usize), Vec<TensorVector<F::Elem>>>,
}

impl<F: Field> Functor<F> {
    pub fn new(field: F) -> Self {
        Functor {
            tl: TlCategory::new(field.clone()),
            uq: Uq::new(field),
            color_projectors: Mutex::default(),
            braidings: Mutex::default(),
            twists: Mutex::default(),
            kernels: Mutex::default(),
            hw_blocks: Mutex::default(),
        }
    }

    pub fn field(&self) -> &F {
        self.tl.field()
    }

    pub fn tl(&self) -> &TlCategory<F> {
        &self.tl
    }

    pub fn uq(&self) -> &Uq<F> {
        &self.uq
    }

    pub fn f_diagram(&self, m: &TlMorphism<F::Elem>) -> RepMap<F::Elem> {
        f_diagram(self.field(), m)
    }

    pub fn f_word(&self, w: &GeneratorWord) -> Result<RepMap<F::Elem>> {
        f_word(self.field(), &self.uq, w)
    }

    /// `F(f_c)`.
    pub fn color_projector(&self, c: u32) -> Result<Arc<RepMap<F::Elem>>> {
        cached(&self.color_projectors, &c, || {
            Ok(self.f_diagram(&*self.tl.jones_wenzl(c as usize)?))
        })
    }

    /// `F(f_s) v`, block by block.
    pub fn apply_projector(
        &self,
        s: &ObjectSeq,
        v: &TensorVector<F::Elem>,
    ) -> Result<TensorVector<F::Elem>> {
        let mut out = v.clone();
        let mut pos = 0;
        for &c in s.colors() {
            if c > 1 {
                out = self.color_projector(c)?.apply_at(&out, pos)?;
            }
            pos += c as usize;
        }
        Ok(out)
    }

    pub fn projector(&self, s: &ObjectSeq) -> Result<RepMap<F::Elem>> {
        let f = self.field();
        let mut acc = RepMap::identity(f, 0);
        for &c in s.colors() {
            acc = acc.tensor(f, &*self.color_projector(c)?);
        }
        Ok(acc)
    }

    /// Projector of `F̂(s)` and the first independent columns as a basis of its image.
    pub fn object(&self, s: &ObjectSeq) -> Result<RepObject<F::Elem>> {
        s.validate(self.tl.mode())?;
        let f = self.field();
        let projector = self.projector(s)?;
        let cols: Vec<Vec<F::Elem>> = (0..projector.cols())
            .map(|x| projector.column(x).to_dense(f))
            .collect();
        let basis = linalg::independent_prefix(f, &cols)
            .into_iter()
            .map(|i| projector.column(i))
            .collect();
        Ok(RepObject { projector, basis })
    }

    /// `F̂(ĝ) = F(f_t) F(g) F(f_s)` as a matrix.
    pub fn f_hat(
        &self,
        g: &TlMorphism<F::Elem>,
        s: &ObjectSeq,
        t: &ObjectSeq,
    ) -> Result<RepMap<F::Elem>> {
        let f = self.field();
        self.projector(t)?
            .compose(f, &self.f_diagram(g))?
            .compose(f, &self.projector(s)?)
    }

    /// Rep-side braiding `c_{V^{⊗n}, V^{⊗m}}`.
    pub fn rep_braiding(&self, n: usize, m: usize) -> Result<Arc<RepMap<F::Elem>>> {
        cached(&self.braidings, &(n, m), || self.f_word(&braid_word(n, m)))
    }

    /// Rep-side twist on `V^{⊗n}` from `θ_V = q^{3/2}` and
    /// `θ_{U⊗V} = c_{V,U} c_{U,V} (θ_U ⊗ θ_V)`.
    pub fn rep_twist(&self, n: usize) -> Result<Arc<RepMap<F::Elem>>> {
        cached(&self.twists, &n, || {
            let scale = self.field().a_pow(3 * n as i64);
            Ok(self.f_word(&twist_word(n)?)?.scale(&scale))
        })
    }

    /// `M_n` with `tr_q(G) = Σ G[z][x] M[x][z]`, from
    /// `d_n ∘ c_{n,n} ∘ (θ_n ⊗ id_n)` and `b_n` on the representation side.
    fn trace_kernel(&self, n: usize) -> Result<Arc<Matrix<F::Elem>>> {
        cached(&self.kernels, &n, || {
            let f = self.field();
            let dn = f_simple(f, &SimpleDiagram::nested_caps(n));
            let row = TensorVector::from_dense(2 * n, dn.entries());
            let word = twist_word(n)?.pad(0, n).then(&braid_word(n, n))?;
            let psi = pull_back(f, &self.uq, &word, row)?.scale(&f.a_pow(3 * n as i64));
            let u = f_simple(f, &SimpleDiagram::nested_cups(n)).column(0);
            let dim = 1usize << n;
            let mut m = linalg::zeros(f, dim, dim);
            for (xy, a) in u.components() {
                let (x, y) = (xy >> n, xy & (dim - 1));
                for z in 0..dim {
                    if let Some(b) = psi.get((z << n) | y) {
                        m[x][z] = m[x][z].add(&a.mul(b));
                    }
                }
            }
            Ok(m)
        })
    }

    /// Quantum trace of an endomorphism of `V^{⊗n}`.
    pub fn quantum_trace_rep(&self, g: &RepMap<F::Elem>) -> Result<F::Elem> {
        let n = g.source();
        if g.target() != n {
            return Err(Error::Arity(format!("trace of a ({n},{}) map", g.target())));
        }
        let m = self.trace_kernel(n)?;
        let f = self.field();
        let mut acc = f.zero();
        for (x, row) in m.iter().enumerate() {
            for (z, e) in row.iter().enumerate() {
                let gz = g.get(z, x);
                if !e.is_zero() && !gz.is_zero() {
                    acc = acc.add(&gz.mul(e));
                }
            }
        }
        Ok(acc)
    }

    /// `tr_q(h ∘ g)` for `g: V^{⊗k} -> V^{⊗l}`, `h` back, on the smaller side.
    pub fn rep_pairing(&self, g: &RepMap<F::Elem>, h: &RepMap<F::Elem>) -> Result<F::Elem> {
        let f = self.field();
        if g.source() <= g.target() {
            self.quantum_trace_rep(&h.compose(f, g)?)
        } else {
            self.quantum_trace_rep(&g.compose(f, h)?)
        }
    }

    /// Basis of the highest-weight vectors of weight `k` in `F̂(s)`.
    pub fn hw_block(&self, s: &ObjectSeq, k: usize) -> Result<Arc<Vec<TensorVector<F::Elem>>>> {
        cached(&self.hw_blocks, &(s.clone(), k), || {
            let f = self.field();
            let n = s.size();
            if k > n || (n - k) % 2 == 1 {
                return Ok(Vec::new());
            }
            let images: Vec<TensorVector<F::Elem>> = self
                .uq
                .highest_weight_basis(n, k)?
                .iter()
                .map(|h| self.apply_projector(s, &h.vector))
                .collect::<Result<_>>()?;
            let dense: Vec<Vec<F::Elem>> = images.iter().map(|v| v.to_dense(f)).collect();
            Ok(linalg::independent_prefix(f, &dense)
                .into_iter()
                .map(|i| images[i].clone())
                .collect())
        })
    }

    /// Spanning set `{F(f_t) B F(f_s)}` of `Hom(F̂(s), F̂(t))`, with `B` running
    /// over the intertwiners of the underlying tensor powers.
    pub fn rep_hom_span(&self, s: &ObjectSeq, t: &ObjectSeq) -> Result<Vec<RepMap<F::Elem>>> {
        let f = self.field();
        let (ps, pt) = (self.projector(s)?, self.projector(t)?);
        self.uq
            .rep_hom_basis(s.size(), t.size())?
            .iter()
            .map(|b| pt.compose(f, b)?.compose(f, &ps))
            .collect()
    }
}

/// Coordinates of vectors in a fixed basis, via an invertible square minor.
struct Coordinates<S> {
    rows: Vec<usize>,
    inverse: Matrix<S>,
}

impl<S: Scalar> Coordinates<S> {
    fn new<F: Field<Elem = S>>(f: &F, basis: &[TensorVector<S>]) -> Result<Self> {
        if basis.is_empty() {
            return Ok(Coordinates {
                rows: Vec::new(),
                inverse: Vec::new(),
            });
        }
        let cols: Matrix<S> = basis.iter().map(|v| v.to_dense(f)).collect();
        let dim = cols[0].len();
        let rows_m = linalg::transpose(&cols, dim);
        let rows = linalg::independent_prefix(f, &rows_m);
        let square: Matrix<S> = rows.iter().map(|&r| rows_m[r].clone()).collect();
        Ok(Coordinates {
            rows,
            inverse: linalg::inverse(f, &square)?,
        })
    }

    fn of<F: Field<Elem = S>>(&self, f: &F, v: &TensorVector<S>) -> Vec<S> {
        let picked: Vec<S> = self
            .rows
            .iter()
            .map(|&r| v.get(r).cloned().unwrap_or_else(|| f.zero()))
            .collect();
        self.inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&picked)
                    .fold(f.zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }
}
