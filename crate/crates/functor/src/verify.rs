use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{apply_simple, Coordinates, Functor};
use tlsl2_core::error::Result;
use tlsl2_core::linalg::{self, Matrix};
use tlsl2_core::scalars::{Field, GenericField, Mode, RootOfUnity};
use tlsl2_diagrams::turaev::{good_type_diagrams, ObjectSeq};
use tlsl2_diagrams::TlMorphism;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Iso,
    NotIso,
}

/// Outcome of comparing `Hom(s, t)` on both sides of the functor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorReport {
    pub source: ObjectSeq,
    pub target: ObjectSeq,
    pub mode: Mode,
    pub dim_diagram_side: usize,
    pub dim_rep_side: usize,
    pub matrix_rank: usize,
    pub verdict: Verdict,
}

impl<F: Field> Functor<F> {
    fn common_weights(&self, s: &ObjectSeq, t: &ObjectSeq) -> Vec<usize> {
        let (n, m) = (s.size(), t.size());
        if (n + m) % 2 == 1 {
            return Vec::new();
        }
        (n % 2..=n.min(m)).step_by(2).collect()
    }

    /// Dimension of `Hom(F̂(s), F̂(t))` from highest-weight multiplicities.
    /// Valid when the module category is semisimple.
    pub fn rep_hom_dim_semisimple(&self, s: &ObjectSeq, t: &ObjectSeq) -> Result<usize> {
        let mut dim = 0;
        for k in self.common_weights(s, t) {
            dim += self.hw_block(s, k)?.len() * self.hw_block(t, k)?.len();
        }
        Ok(dim)
    }

    /// The matrix of `F̂` on `Hom(s, t)`, one row per canonical basis element.
    ///
    /// Generically the columns are coordinates on highest-weight blocks:
    /// a module map is determined by where it sends highest-weight vectors.
    /// At a root of unity the columns are the pairings with a spanning set of
    /// `Hom(F̂(t), F̂(s))`.
    pub fn hom_matrix(&self, s: &ObjectSeq, t: &ObjectSeq) -> Result<Matrix<F::Elem>> {
        s.validate(self.tl.mode())?;
        t.validate(self.tl.mode())?;
        match self.tl.mode() {
            Mode::Generic => self.hom_matrix_blocks(s, t),
            Mode::Root(_) => self.hom_matrix_pairing(s, t),
        }
    }

    fn hom_matrix_blocks(&self, s: &ObjectSeq, t: &ObjectSeq) -> Result<Matrix<F::Elem>> {
        let f = self.field();
        let mut blocks = Vec::new();
        for k in self.common_weights(s, t) {
            let (src, tgt) = (self.hw_block(s, k)?, self.hw_block(t, k)?);
            if !src.is_empty() && !tgt.is_empty() {
                blocks.push((src, Coordinates::new(f, &tgt)?));
            }
        }
        good_type_diagrams(s, t)
            .par_iter()
            .map(|d| {
                let mut row = Vec::new();
                for (src, coords) in &blocks {
                    for u in src.iter() {
                        let w = self.apply_projector(t, &apply_simple(f, d, u)?)?;
                        row.extend(coords.of(f, &w));
                    }
                }
                Ok(row)
            })
            .collect()
    }

    fn hom_matrix_pairing(&self, s: &ObjectSeq, t: &ObjectSeq) -> Result<Matrix<F::Elem>> {
        let back = self.rep_hom_span(t, s)?;
        good_type_diagrams(s, t)
            .par_iter()
            .map(|d| {
                let g = self.f_hat(&TlMorphism::from_diagram(self.field(), d.clone()), s, t)?;
                back.iter().map(|h| self.rep_pairing(&g, h)).collect()
            })
            .collect()
    }

    /// Rank of the trace pairing between `Hom(F̂(s), F̂(t))` and `Hom(F̂(t), F̂(s))`.
    pub fn rep_gram_rank(&self, s: &ObjectSeq, t: &ObjectSeq) -> Result<usize> {
        let there = self.rep_hom_span(s, t)?;
        let back = self.rep_hom_span(t, s)?;
        let gram: Matrix<F::Elem> = there
            .par_iter()
            .map(|g| back.iter().map(|h| self.rep_pairing(g, h)).collect())
            .collect::<Result<_>>()?;
        Ok(linalg::rank(self.field(), &gram))
    }

    pub fn verify(&self, s: &ObjectSeq, t: &ObjectSeq) -> Result<FunctorReport> {
        let f = self.field();
        let matrix = self.hom_matrix(s, t)?;
        let matrix_rank = linalg::rank(f, &matrix);
        let (dim_diagram_side, dim_rep_side) = match self.tl.mode() {
            Mode::Generic => (
                good_type_diagrams(s, t).len(),
                self.rep_hom_dim_semisimple(s, t)?,
            ),
            Mode::Root(_) => (self.tl.purified_hom_dim(s, t)?, self.rep_gram_rank(s, t)?),
        };
        let iso = dim_diagram_side == dim_rep_side && dim_rep_side == matrix_rank;
        Ok(FunctorReport {
            source: s.clone(),
            target: t.clone(),
            mode: self.tl.mode(),
            dim_diagram_side,
            dim_rep_side,
            matrix_rank,
            verdict: if iso { Verdict::Iso } else { Verdict::NotIso },
        })
    }
}

pub fn verify_equivalence(s: &ObjectSeq, t: &ObjectSeq, mode: Mode) -> Result<FunctorReport> {
    s.validate(mode)?;
    t.validate(mode)?;
    tlsl2_core::with_field!(mode, f => Functor::new(f).verify(s, t))
}

/// Verifies many pairs, sharing one context per mode. Results are in input order.
pub fn verify_batch(items: &[(ObjectSeq, ObjectSeq, Mode)]) -> Vec<Result<FunctorReport>> {
    let generic = Functor::new(GenericField);
    let mut roots: BTreeMap<u32, Result<Functor<RootOfUnity>>> = BTreeMap::new();
    for (_, _, mode) in items {
        if let Mode::Root(r) = *mode {
            roots
                .entry(r)
                .or_insert_with(|| RootOfUnity::new(r).map(Functor::new));
        }
    }
    items
        .par_iter()
        .map(|(s, t, mode)| {
            s.validate(*mode)?;
            t.validate(*mode)?;
            match mode {
                Mode::Generic => generic.verify(s, t),
                Mode::Root(r) => match &roots[r] {
                    Ok(func) => func.verify(s, t),
                    Err(e) => Err(e.clone()),
                },
            }
        })
        .collect()
}
