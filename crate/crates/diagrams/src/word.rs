use std::fmt;

use super::morphism::TlMorphism;
use super::simple::SimpleDiagram;
use tlsl2_core::error::{Error, Result};
use tlsl2_core::scalars::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LayerKind {
    Id,
    /// Cup creating new strands at positions `i, i+1` (1-based, above).
    Cup(usize),
    /// Cap closing strands `i, i+1` (1-based, below).
    Cap(usize),
    /// Positive crossing of strands `i, i+1`.
    Over(usize),
    /// Negative crossing of strands `i, i+1`.
    Under(usize),
}

/// One horizontal slice of a diagram with `n` strands below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Layer {
    pub n: usize,
    pub kind: LayerKind,
}

impl Layer {
    pub fn new(n: usize, kind: LayerKind) -> Result<Self> {
        let ok = match kind {
            LayerKind::Id => true,
            LayerKind::Cup(i) => i >= 1 && i <= n + 1,
            LayerKind::Cap(i) | LayerKind::Over(i) | LayerKind::Under(i) => i >= 1 && i < n,
        };
        if !ok {
            return Err(Error::OutOfRange(format!(
                "{} is out of range",
                Layer { n, kind }
            )));
        }
        Ok(Layer { n, kind })
    }

    pub fn source(&self) -> usize {
        self.n
    }

    pub fn target(&self) -> usize {
        match self.kind {
            LayerKind::Cup(_) => self.n + 2,
            LayerKind::Cap(_) => self.n - 2,
            _ => self.n,
        }
    }

    pub fn is_crossing(&self) -> bool {
        matches!(self.kind, LayerKind::Over(_) | LayerKind::Under(_))
    }

    /// The crossing-free diagram of a cup, cap or identity layer.
    pub fn simple(&self) -> Option<SimpleDiagram> {
        let n = self.n;
        match self.kind {
            LayerKind::Id => Some(SimpleDiagram::identity(n)),
            LayerKind::Cup(i) => Some(
                SimpleDiagram::identity(i - 1)
                    .tensor(&SimpleDiagram::cup())
                    .tensor(&SimpleDiagram::identity(n + 1 - i)),
            ),
            LayerKind::Cap(i) => Some(
                SimpleDiagram::identity(i - 1)
                    .tensor(&SimpleDiagram::cap())
                    .tensor(&SimpleDiagram::identity(n - 1 - i)),
            ),
            _ => None,
        }
    }

    /// The two smoothings of a crossing layer: `(identity, e_i)`.
    pub fn smoothings(&self) -> Option<(SimpleDiagram, SimpleDiagram)> {
        match self.kind {
            LayerKind::Over(i) | LayerKind::Under(i) => Some((
                SimpleDiagram::identity(self.n),
                SimpleDiagram::e(i, self.n).ok()?,
            )),
            _ => None,
        }
    }

    /// Kauffman resolution of the layer.
    pub fn resolve<F: Field>(&self, field: &F) -> TlMorphism<F::Elem> {
        if let Some(d) = self.simple() {
            return TlMorphism::from_diagram(field, d);
        }
        let (id, e) = self.smoothings().unwrap();
        let (ci, ce) = match self.kind {
            LayerKind::Over(_) => (1, -1),
            _ => (-1, 1),
        };
        let mut m = TlMorphism::term(id, field.a_pow(ci));
        m.add_term(e, field.a_pow(ce));
        m
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        match self.kind {
            LayerKind::Id => write!(f, "id {n}"),
            LayerKind::Cup(i) => write!(f, "cup {i} of {n}"),
            LayerKind::Cap(i) => write!(f, "cap {i} of {n}"),
            LayerKind::Over(i) => write!(f, "x+ {i} of {n}"),
            LayerKind::Under(i) => write!(f, "x- {i} of {n}"),
        }
    }
}

/// A diagram given as a bottom-to-top sequence of layers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GeneratorWord {
    layers: Vec<Layer>,
}

impl GeneratorWord {
    /// Checks that consecutive layers have compatible strand counts.
    pub fn new(layers: Vec<Layer>) -> Result<Self> {
        for (i, w) in layers.windows(2).enumerate() {
            if w[0].target() != w[1].source() {
                return Err(Error::Arity(format!(
                    "layer {} ends with {} strands but layer {} starts with {}",
                    i + 1,
                    w[0].target(),
                    i + 2,
                    w[1].source()
                )));
            }
        }
        Ok(GeneratorWord { layers })
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn source(&self) -> usize {
        self.layers.first().map_or(0, Layer::source)
    }

    pub fn target(&self) -> usize {
        self.layers.last().map_or(0, Layer::target)
    }

    pub fn crossings(&self) -> usize {
        self.layers.iter().filter(|l| l.is_crossing()).count()
    }

    /// `self` followed by `rhs` (`rhs` stacked on top).
    pub fn then(&self, rhs: &Self) -> Result<Self> {
        let mut layers = self.layers.clone();
        layers.extend_from_slice(&rhs.layers);
        Self::new(layers)
    }

    /// Every layer widened by `left` strands on the left and `right` on the right.
    pub fn pad(&self, left: usize, right: usize) -> Self {
        let shift = |k: LayerKind| match k {
            LayerKind::Id => LayerKind::Id,
            LayerKind::Cup(i) => LayerKind::Cup(i + left),
            LayerKind::Cap(i) => LayerKind::Cap(i + left),
            LayerKind::Over(i) => LayerKind::Over(i + left),
            LayerKind::Under(i) => LayerKind::Under(i + left),
        };
        GeneratorWord {
            layers: self
                .layers
                .iter()
                .map(|l| Layer {
                    n: l.n + left + right,
                    kind: shift(l.kind),
                })
                .collect(),
        }
    }

    /// Parses the one-layer-per-line text format. Blank lines and `#`
    /// comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut layers: Vec<Layer> = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let lineno = no + 1;
            let layer = parse_layer(line).map_err(|m| Error::parse(lineno, m))?;
            if let Some(prev) = layers.last() {
                if prev.target() != layer.source() {
                    return Err(Error::parse(
                        lineno,
                        format!(
                            "layer expects {} strands below but the previous layer has {} above",
                            layer.source(),
                            prev.target()
                        ),
                    ));
                }
            }
            layers.push(layer);
        }
        Ok(GeneratorWord { layers })
    }

    /// Full Kauffman resolution as an element of `E_{source,target}`.
    pub fn resolve<F: Field>(&self, field: &F) -> Result<TlMorphism<F::Elem>> {
        let mut acc = TlMorphism::identity(field, self.source());
        for layer in &self.layers {
            acc = layer.resolve(field).compose(field, &acc)?;
        }
        Ok(acc)
    }

    /// Kauffman bracket of a closed word.
    pub fn bracket<F: Field>(&self, field: &F) -> Result<F::Elem> {
        if self.source() != 0 || self.target() != 0 {
            return Err(Error::NotClosed(format!(
                "word has {} strands below and {} above",
                self.source(),
                self.target()
            )));
        }
        self.resolve(field)?.scalar(field)
    }
}

fn parse_layer(line: &str) -> std::result::Result<Layer, String> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| format!("expected a non-negative integer, got '{s}'"))
    };
    let layer = match toks.as_slice() {
        ["id", n] => Layer::new(num(n)?, LayerKind::Id),
        [op, i, "of", n] => {
            let (i, n) = (num(i)?, num(n)?);
            let kind = match *op {
                "cup" => LayerKind::Cup(i),
                "cap" => LayerKind::Cap(i),
                "x+" => LayerKind::Over(i),
                "x-" => LayerKind::Under(i),
                _ => return Err(format!("unknown layer '{op}'")),
            };
            Layer::new(n, kind)
        }
        _ => return Err(format!("cannot parse layer '{line}'")),
    };
    layer.map_err(|e| e.to_string())
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.layers {
            writeln!(f, "{l}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for GeneratorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}
