//! Planar diagrams: simple diagrams, the spaces `E_{k,l}`, and Kauffman
//! resolution of words with crossings. [`tl_category`] adds the ribbon
//! structure and Jones-Wenzl projectors; [`turaev`] the colored category
//! built from them.

mod morphism;
mod simple;
mod word;

pub use morphism::TlMorphism;
pub use simple::{enumerate_simple, SimpleDiagram};
pub use word::{GeneratorWord, Layer, LayerKind};

pub mod tl_category;
pub mod turaev;

use tlsl2_core::error::Result;
use tlsl2_core::scalars::Field;

/// The loop value.
pub fn delta<F: Field>(field: &F) -> F::Elem {
    field.delta()
}

/// `e_i` in `E_k`.
pub fn e_generator<F: Field>(field: &F, i: usize, k: usize) -> Result<TlMorphism<F::Elem>> {
    Ok(TlMorphism::from_diagram(field, SimpleDiagram::e(i, k)?))
}

pub fn cup<F: Field>(field: &F) -> TlMorphism<F::Elem> {
    TlMorphism::from_diagram(field, SimpleDiagram::cup())
}

pub fn cap<F: Field>(field: &F) -> TlMorphism<F::Elem> {
    TlMorphism::from_diagram(field, SimpleDiagram::cap())
}
