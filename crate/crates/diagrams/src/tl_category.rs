//! Ribbon structure of the diagram category: braidings `c_{n,m}`, twists
//! `theta_n`, (co)evaluations, Jones-Wenzl projectors and the closure trace.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, RwLock};

use crate::{GeneratorWord, Layer, LayerKind, SimpleDiagram, TlMorphism};
use tlsl2_core::cache::{cached, Cache};
use tlsl2_core::error::{Error, Result};
use tlsl2_core::scalars::{Field, Mode, Scalar};

/// Word for `c_{n,m}`: the left `n` strands pass over the right `m` strands.
pub fn braid_word(n: usize, m: usize) -> GeneratorWord {
    let mut layers = Vec::with_capacity(n * m);
    for i in (1..=n).rev() {
        for j in 0..m {
            layers.push(Layer {
                n: n + m,
                kind: LayerKind::Over(i + j),
            });
        }
    }
    if layers.is_empty() {
        layers.push(Layer {
            n: n + m,
            kind: LayerKind::Id,
        });
    }
    GeneratorWord::new(layers).expect("braid word is well formed")
}

/// Word for the positive curl `(id_n ⊗ d_n)(c_{n,n} ⊗ id_n)(id_n ⊗ b_n)` on `n` strands.
pub fn curl_word(n: usize) -> GeneratorWord {
    let mut layers = Vec::new();
    if n == 0 {
        return GeneratorWord::default();
    }
    for t in 0..n {
        layers.push(Layer {
            n: n + 2 * t,
            kind: LayerKind::Cup(n + 1 + t),
        });
    }
    layers.extend(braid_word(n, n).pad(0, n).layers().iter().copied());
    for t in 0..n {
        layers.push(Layer {
            n: 3 * n - 2 * t,
            kind: LayerKind::Cap(2 * n - t),
        });
    }
    GeneratorWord::new(layers).expect("curl word is well formed")
}

/// The diagram category over a fixed coefficient field, with memo tables.
///
/// All caches are internally synchronized, so a `TlCategory` can be shared
/// across threads.
pub struct TlCategory<F: Field> {
    field: F,
    jw: Mutex<Vec<Arc<TlMorphism<F::Elem>>>>,
    braid: Cache<(usize, usize), TlMorphism<F::Elem>>,
    twist: Cache<usize, TlMorphism<F::Elem>>,
    closer: Cache<usize, TlMorphism<F::Elem>>,
    diagram_traces: RwLock<HashMap<SimpleDiagram, F::Elem>>,
}

pub type Morph<F> = TlMorphism<<F as Field>::Elem>;

impl<F: Field> TlCategory<F> {
    pub fn new(field: F) -> Self {
        TlCategory {
            field,
            jw: Mutex::new(Vec::new()),
            braid: Mutex::default(),
            twist: Mutex::default(),
            closer: Mutex::default(),
            diagram_traces: RwLock::default(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn mode(&self) -> Mode {
        self.field.mode()
    }

    pub fn identity(&self, n: usize) -> Morph<F> {
        TlMorphism::identity(&self.field, n)
    }

    pub fn compose(&self, f: &Morph<F>, g: &Morph<F>) -> Result<Morph<F>> {
        f.compose(&self.field, g)
    }

    /// Composes a chain `fs[0] ∘ fs[1] ∘ ...`.
    pub fn compose_all(&self, fs: &[&Morph<F>]) -> Result<Morph<F>> {
        let (last, rest) = fs.split_last().expect("nonempty chain");
        let mut acc = (*last).clone();
        for f in rest.iter().rev() {
            acc = f.compose(&self.field, &acc)?;
        }
        Ok(acc)
    }

    pub fn resolve(&self, w: &GeneratorWord) -> Result<Morph<F>> {
        w.resolve(&self.field)
    }

    /// `c_{n,m}: n+m -> m+n`.
    pub fn braiding(&self, n: usize, m: usize) -> Result<Arc<Morph<F>>> {
        cached(&self.braid, &(n, m), || self.resolve(&braid_word(n, m)))
    }

    /// `theta_n = (-1)^n` times the positive curl.
    pub fn twist(&self, n: usize) -> Result<Arc<Morph<F>>> {
        cached(&self.twist, &n, || {
            let curl = self.resolve(&curl_word(n))?;
            Ok(if n % 2 == 1 { curl.neg() } else { curl })
        })
    }

    /// `b_n: 0 -> 2n`, nested cups.
    pub fn coev(&self, n: usize) -> Morph<F> {
        TlMorphism::from_diagram(&self.field, SimpleDiagram::nested_cups(n))
    }

    /// `d_n: 2n -> 0`, nested caps.
    pub fn ev(&self, n: usize) -> Morph<F> {
        TlMorphism::from_diagram(&self.field, SimpleDiagram::nested_caps(n))
    }

    /// The Jones-Wenzl projector `f_k`.
    pub fn jones_wenzl(&self, k: usize) -> Result<Arc<Morph<F>>> {
        let mut table = self.jw.lock().unwrap();
        if table.is_empty() {
            table.push(Arc::new(self.identity(0)));
            table.push(Arc::new(self.identity(1)));
        }
        // deltas[j] = Delta_j
        let f = &self.field;
        let mut deltas = vec![f.one(), f.delta()];
        while deltas.len() <= k.max(1) {
            let j = deltas.len() - 1;
            let next = f.delta().mul(&deltas[j]).sub(&deltas[j - 1]);
            deltas.push(next);
        }
        while table.len() <= k {
            let j = table.len() - 1;
            if deltas[j].is_zero() {
                let r = match f.mode() {
                    Mode::Root(r) => r,
                    Mode::Generic => 0,
                };
                return Err(Error::JonesWenzlPole {
                    k: j + 1,
                    r,
                    vanishing: j,
                });
            }
            let ratio = deltas[j - 1].div(&deltas[j])?;
            let fk1 = table[j].tensor(&self.identity(1));
            let e = TlMorphism::from_diagram(f, SimpleDiagram::e(j, j + 1)?);
            let sandwich = fk1.compose(f, &e)?.compose(f, &fk1)?;
            let next = fk1.sub(&sandwich.scale(&ratio))?;
            table.push(Arc::new(next));
        }
        Ok(table[k].clone())
    }

    /// `f_{n_1} ⊗ ... ⊗ f_{n_m}`.
    pub fn jw_tensor(&self, colors: &[u32]) -> Result<Morph<F>> {
        let mut acc = self.identity(0);
        for &c in colors {
            acc = acc.tensor(&*self.jones_wenzl(c as usize)?);
        }
        Ok(acc)
    }

    /// `Phi_n = d_n ∘ c_{n,n} ∘ (theta_n ⊗ id_n): 2n -> 0`.
    fn closer(&self, n: usize) -> Result<Arc<Morph<F>>> {
        cached(&self.closer, &n, || {
            let dc = self.ev(n).compose(&self.field, &*self.braiding(n, n)?)?;
            dc.compose(&self.field, &self.twist(n)?.tensor(&self.identity(n)))
        })
    }

    fn diagram_trace(&self, d: &SimpleDiagram) -> Result<F::Elem> {
        if let Some(v) = self.diagram_traces.read().unwrap().get(d) {
            return Ok(v.clone());
        }
        let n = d.inputs();
        let (w, _) = SimpleDiagram::compose(
            &d.tensor(&SimpleDiagram::identity(n)),
            &SimpleDiagram::nested_cups(n),
        )?;
        let phi = self.closer(n)?;
        let f = &self.field;
        let delta = f.delta();
        let mut acc = f.zero();
        for (e, c) in phi.terms() {
            let (_, loops) = SimpleDiagram::compose(e, &w)?;
            let mut t = c.clone();
            for _ in 0..loops {
                t = t.mul(&delta);
            }
            acc = acc.add(&t);
        }
        self.diagram_traces
            .write()
            .unwrap()
            .insert(d.clone(), acc.clone());
        Ok(acc)
    }

    /// `tr_q(f) = d_n ∘ c_{n,n} ∘ (theta_n f ⊗ id_n) ∘ b_n`.
    pub fn closure_trace(&self, f: &Morph<F>) -> Result<F::Elem> {
        if f.inputs() != f.outputs() {
            return Err(Error::Arity(format!(
                "trace of a ({},{}) morphism",
                f.inputs(),
                f.outputs()
            )));
        }
        let mut acc = self.field.zero();
        for (d, c) in f.terms() {
            acc = acc.add(&c.mul(&self.diagram_trace(d)?));
        }
        Ok(acc)
    }

    /// The same trace computed by literal composition, without caches.
    pub fn closure_trace_direct(&self, f: &Morph<F>) -> Result<F::Elem> {
        let n = f.inputs();
        let inner = self
            .twist(n)?
            .compose(&self.field, f)?
            .tensor(&self.identity(n));
        let m = self.compose_all(&[&self.ev(n), &*self.braiding(n, n)?, &inner, &self.coev(n)])?;
        m.scalar(&self.field)
    }
}
