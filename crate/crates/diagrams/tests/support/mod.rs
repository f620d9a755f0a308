//! Oracles and corpora shared by the integration tests. Nothing here calls the
//! diagram composition code.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tlsl2_core::scalars::{LaurentPoly, Q};
use tlsl2_diagrams::{GeneratorWord, Layer, LayerKind};

/// Integer Laurent polynomial in `a`.
pub type Poly = BTreeMap<i64, i64>;

fn poly_mul(x: &Poly, y: &Poly) -> Poly {
    let mut out = Poly::new();
    for (e, c) in x {
        for (f, d) in y {
            *out.entry(e + f).or_insert(0) += c * d;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn poly_add(x: &mut Poly, y: &Poly) {
    for (e, c) in y {
        *x.entry(*e).or_insert(0) += c;
    }
    x.retain(|_, c| *c != 0);
}

pub fn to_laurent(p: &Poly) -> LaurentPoly {
    LaurentPoly::from_terms(p.iter().map(|(e, c)| (*e, Q::from_integer((*c).into()))))
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn add(&mut self) -> usize {
        self.0.push(self.0.len());
        self.0.len() - 1
    }
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }
    fn union(&mut self, x: usize, y: usize) {
        let (a, b) = (self.find(x), self.find(y));
        self.0[a] = b;
    }
    fn components(&mut self) -> usize {
        (0..self.0.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// The Kauffman bracket of a closed word by summing over all `2^c` states.
/// Each state is smoothed and its loops counted with union-find over strand
/// segments.
pub fn state_sum_bracket(w: &GeneratorWord) -> Poly {
    assert_eq!((w.source(), w.target()), (0, 0), "closed words only");
    let crossings: Vec<usize> = (0..w.layers().len())
        .filter(|&i| w.layers()[i].is_crossing())
        .collect();
    let delta: Poly = [(2, -1), (-2, -1)].into_iter().collect();
    let mut total = Poly::new();
    for state in 0..1u64 << crossings.len() {
        let mut uf = UnionFind(Vec::new());
        let mut strands: Vec<usize> = Vec::new();
        let mut a_exp = 0i64;
        let mut ci = 0;
        for layer in w.layers() {
            // smoothing: `true` keeps the strands vertical
            let vertical = |positive: bool, bit: bool| if positive { !bit } else { bit };
            let mut cup_cap = |strands: &mut Vec<usize>, i: usize| {
                uf.union(strands[i - 1], strands[i]);
                let u = uf.add();
                let v = uf.add();
                uf.union(u, v);
                strands[i - 1] = u;
                strands[i] = v;
            };
            match layer.kind {
                LayerKind::Id => {}
                LayerKind::Cup(i) => {
                    let u = uf.add();
                    let v = uf.add();
                    uf.union(u, v);
                    strands.insert(i - 1, v);
                    strands.insert(i - 1, u);
                }
                LayerKind::Cap(i) => {
                    uf.union(strands[i - 1], strands[i]);
                    strands.drain(i - 1..=i);
                }
                LayerKind::Over(i) | LayerKind::Under(i) => {
                    let bit = (state >> ci) & 1 == 1;
                    ci += 1;
                    let positive = matches!(layer.kind, LayerKind::Over(_));
                    let v = vertical(positive, bit);
                    // the vertical smoothing of a positive crossing carries a, the other a^-1
                    a_exp += if v == positive { 1 } else { -1 };
                    if !v {
                        cup_cap(&mut strands, i);
                    }
                }
            }
        }
        let loops = uf.components();
        let mut term: Poly = [(a_exp, 1)].into_iter().collect();
        for _ in 0..loops {
            term = poly_mul(&term, &delta);
        }
        poly_add(&mut total, &term);
    }
    total
}

pub fn word(text: &str) -> GeneratorWord {
    GeneratorWord::parse(text).expect("valid word")
}

/// Closure of a braid word on `n` strands with nested return arcs on the right.
pub fn braid_closure(n: usize, gens: &[i32]) -> GeneratorWord {
    let mut layers = Vec::new();
    for t in 0..n {
        layers.push(Layer::new(2 * t, LayerKind::Cup(t + 1)).unwrap());
    }
    for &g in gens {
        let i = g.unsigned_abs() as usize;
        let kind = if g > 0 {
            LayerKind::Over(i)
        } else {
            LayerKind::Under(i)
        };
        layers.push(Layer::new(2 * n, kind).unwrap());
    }
    for t in (0..n).rev() {
        layers.push(Layer::new(2 * t + 2, LayerKind::Cap(t + 1)).unwrap());
    }
    GeneratorWord::new(layers).unwrap()
}

/// A random closed word with at most `max_crossings` crossings and at most
/// `max_strands` strands at any level.
pub fn random_closed_word(
    rng: &mut ChaCha8Rng,
    max_crossings: usize,
    max_strands: usize,
) -> GeneratorWord {
    let mut n = 0;
    let mut crossings = 0;
    let mut layers = Vec::new();
    let steps = rng.gen_range(2..=12);
    for _ in 0..steps {
        let kind = match rng.gen_range(0..4) {
            0 if n + 2 <= max_strands => LayerKind::Cup(rng.gen_range(1..=n + 1)),
            1 if n >= 2 => LayerKind::Cap(rng.gen_range(1..n)),
            2 | 3 if n >= 2 && crossings < max_crossings => {
                crossings += 1;
                let i = rng.gen_range(1..n);
                if rng.gen_bool(0.5) {
                    LayerKind::Over(i)
                } else {
                    LayerKind::Under(i)
                }
            }
            _ if n + 2 <= max_strands => LayerKind::Cup(rng.gen_range(1..=n + 1)),
            _ => LayerKind::Cap(rng.gen_range(1..n)),
        };
        let layer = Layer::new(n, kind).unwrap();
        n = layer.target();
        layers.push(layer);
    }
    while n > 0 {
        let layer = Layer::new(n, LayerKind::Cap(rng.gen_range(1..n))).unwrap();
        n = layer.target();
        layers.push(layer);
    }
    GeneratorWord::new(layers).unwrap()
}

/// A random word starting on `n0` strands, never above `max_strands`.
pub fn random_word(
    rng: &mut ChaCha8Rng,
    n0: usize,
    len: usize,
    max_strands: usize,
) -> GeneratorWord {
    let mut n = n0;
    let mut layers = Vec::new();
    for _ in 0..len {
        let kind = match rng.gen_range(0..4) {
            0 if n + 2 <= max_strands => LayerKind::Cup(rng.gen_range(1..=n + 1)),
            1 if n >= 2 => LayerKind::Cap(rng.gen_range(1..n)),
            2 if n >= 2 => LayerKind::Over(rng.gen_range(1..n)),
            3 if n >= 2 => LayerKind::Under(rng.gen_range(1..n)),
            _ => LayerKind::Id,
        };
        let layer = Layer::new(n, kind).unwrap();
        n = layer.target();
        layers.push(layer);
    }
    GeneratorWord::new(layers).unwrap()
}

/// Named closed words with at most six crossings.
pub fn knot_corpus() -> Vec<(String, GeneratorWord)> {
    let mut out = vec![
        ("empty".to_string(), GeneratorWord::default()),
        ("circle".to_string(), word("cup 1 of 0\ncap 1 of 2")),
        (
            "two circles".to_string(),
            word("cup 1 of 0\ncup 1 of 2\ncap 1 of 4\ncap 1 of 2"),
        ),
        (
            "kink".to_string(),
            word("cup 1 of 0\nx+ 1 of 2\ncap 1 of 2"),
        ),
        ("hopf".to_string(), braid_closure(2, &[1, 1])),
        ("trefoil".to_string(), braid_closure(2, &[1, 1, 1])),
        ("left trefoil".to_string(), braid_closure(2, &[-1, -1, -1])),
        (
            "figure eight".to_string(),
            braid_closure(3, &[1, -2, 1, -2]),
        ),
        ("cinquefoil".to_string(), braid_closure(2, &[1, 1, 1, 1, 1])),
        (
            "three twist".to_string(),
            braid_closure(3, &[1, 1, 1, 2, -1, 2]),
        ),
        (
            "borromean".to_string(),
            braid_closure(3, &[1, -2, 1, -2, 1, -2]),
        ),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..40 {
        out.push((format!("random {i}"), random_closed_word(&mut rng, 6, 6)));
    }
    out
}

fn splice(base: &GeneratorWord, at: usize, insert: &[Layer]) -> GeneratorWord {
    let mut layers = base.layers().to_vec();
    for (j, l) in insert.iter().enumerate() {
        layers.insert(at + j, *l);
    }
    GeneratorWord::new(layers).unwrap()
}

/// Twenty pairs of closed words related by one Reidemeister II or III move.
pub fn reidemeister_pairs() -> Vec<(GeneratorWord, GeneratorWord)> {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut out = Vec::new();
    while out.len() < 20 {
        let base = random_closed_word(&mut rng, 3, 6);
        let cuts: Vec<(usize, usize)> = (0..=base.layers().len())
            .map(|i| {
                let n = if i == base.layers().len() {
                    base.target()
                } else {
                    base.layers()[i].source()
                };
                (i, n)
            })
            .collect();
        let r3 = out.len() % 2 == 1;
        let need = if r3 { 3 } else { 2 };
        let options: Vec<_> = cuts.into_iter().filter(|&(_, n)| n >= need).collect();
        if options.is_empty() {
            continue;
        }
        let (at, n) = options[rng.gen_range(0..options.len())];
        let layer = |k| Layer::new(n, k).unwrap();
        if r3 {
            let i = rng.gen_range(1..n - 1);
            let (a, b) = if rng.gen_bool(0.5) {
                (LayerKind::Over(i), LayerKind::Over(i + 1))
            } else {
                (LayerKind::Under(i), LayerKind::Under(i + 1))
            };
            let left = splice(&base, at, &[layer(a), layer(b), layer(a)]);
            let right = splice(&base, at, &[layer(b), layer(a), layer(b)]);
            out.push((left, right));
        } else {
            let i = rng.gen_range(1..n);
            let (a, b) = if rng.gen_bool(0.5) {
                (LayerKind::Over(i), LayerKind::Under(i))
            } else {
                (LayerKind::Under(i), LayerKind::Over(i))
            };
            out.push((splice(&base, at, &[layer(a), layer(b)]), base));
        }
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
