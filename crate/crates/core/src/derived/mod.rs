//! The bounded derived category of a path algebra.
//!
//! Objects are kept in the formal normal form `⊕ M_s[s]`, which is complete
//! because the algebra is hereditary. Anything involving morphisms happens on
//! two-term projective resolutions, where every morphism is a genuine chain
//! map and homotopies are only quotiented out when a Hom space is extracted.
//! The term `(M, s)` means `M[s]`, whose resolution sits in degrees `-s-1, -s`.

mod complex;
mod hom;
mod triangle;

pub use complex::{cocone, cone, to_proj, ChainMap, Cocone, Cone, ProjComplex, RepComplex};
pub use hom::{hom_complexes, GradedHom};
pub use triangle::{les_check, Triangle};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exactlin::LinError;
use crate::quiver::{direct_sum, is_iso_module, IsoVerdict, Quiver, QuiverError, Rep, RepMap};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DerivedError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("d∘d ≠ 0 at degree {0}")]
    NotAComplex(i64),
    #[error("map does not commute with the differentials at degree {0}")]
    NotAChainMap(i64),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Lin(#[from] LinError),
}

/// `⊕ rep_i[shift_i]`, sorted by shift, one nonzero module per shift.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DObject {
    terms: Vec<(Rep, i64)>,
}

impl DObject {
    /// Normalizes: drops zero modules, merges equal shifts by direct sum.
    pub fn new(q: &Quiver, terms: Vec<(Rep, i64)>) -> Result<DObject, DerivedError> {
        let mut by_shift: BTreeMap<i64, Vec<Rep>> = BTreeMap::new();
        for (m, s) in terms {
            m.check(q)?;
            if !m.is_zero() {
                by_shift.entry(s).or_default().push(m);
            }
        }
        let terms = by_shift
            .into_iter()
            .map(|(s, ms)| {
                let m = if ms.len() == 1 {
                    ms.into_iter().next().unwrap()
                } else {
                    direct_sum(q, &ms)?
                };
                Ok((m, s))
            })
            .collect::<Result<_, DerivedError>>()?;
        Ok(DObject { terms })
    }

    pub fn zero() -> DObject {
        DObject::default()
    }

    pub fn module(q: &Quiver, m: Rep) -> Result<DObject, DerivedError> {
        Self::new(q, vec![(m, 0)])
    }

    pub fn terms(&self) -> &[(Rep, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn shift(&self, n: i64) -> DObject {
        DObject {
            terms: self.terms.iter().map(|(m, s)| (m.clone(), s + n)).collect(),
        }
    }

    pub fn sum(q: &Quiver, parts: &[&DObject]) -> Result<DObject, DerivedError> {
        Self::new(q, parts.iter().flat_map(|p| p.terms.iter().cloned()).collect())
    }

    /// Vector-space duality: `(M, s) ↦ (DM, -s)` over the opposite quiver.
    pub fn dual(&self, op: &Quiver) -> Result<DObject, DerivedError> {
        Self::new(op, self.terms.iter().map(|(m, s)| (m.dual(), -s)).collect())
    }

    /// Dimension vectors by shift.
    pub fn dim_vectors(&self) -> BTreeMap<i64, Vec<usize>> {
        self.terms.iter().map(|(m, s)| (*s, m.dims().to_vec())).collect()
    }

    /// `Σ_s (-1)^s dim(M_s)`, the class in the Grothendieck group.
    pub fn class(&self, q: &Quiver) -> Vec<i64> {
        let mut v = vec![0; q.num_vertices()];
        for (m, s) in &self.terms {
            let sg = if s.rem_euclid(2) == 0 { 1 } else { -1 };
            for (x, d) in v.iter_mut().zip(m.dims()) {
                *x += sg * *d as i64;
            }
        }
        v
    }
}

pub fn hom_graded(q: &Quiver, x: &DObject, y: &DObject) -> Result<GradedHom, DerivedError> {
    hom_complexes(q, &to_proj(q, x)?, &to_proj(q, y)?)
}

pub fn homology(q: &Quiver, c: &ProjComplex) -> Result<DObject, DerivedError> {
    c.homology(q)
}

/// Derived Nakayama functor.
pub fn serre(q: &Quiver, x: &DObject) -> Result<DObject, DerivedError> {
    serre_complex(q, &to_proj(q, x)?)
}

pub fn serre_complex(q: &Quiver, c: &ProjComplex) -> Result<DObject, DerivedError> {
    c.nakayama(q).homology(q)
}

/// `D ∘ S_{op} ∘ D`.
pub fn serre_inverse(q: &Quiver, y: &DObject) -> Result<DObject, DerivedError> {
    let op = q.opposite();
    let dy = y.dual(&op)?;
    serre(&op, &dy)?.dual(q)
}

/// Per-shift certificates of an isomorphism.
#[derive(Clone, Debug)]
pub enum DIso {
    Yes(Vec<(i64, RepMap)>),
    No(String),
    Inconclusive { seed: u64 },
}

impl DIso {
    pub fn is_yes(&self) -> bool {
        matches!(self, DIso::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, DIso::No(_))
    }
}

pub fn is_iso(q: &Quiver, x: &DObject, y: &DObject, seed: u64) -> Result<DIso, DerivedError> {
    if x.dim_vectors() != y.dim_vectors() {
        return Ok(DIso::No(format!(
            "dimension vectors by shift differ: {:?} vs {:?}",
            x.dim_vectors(),
            y.dim_vectors()
        )));
    }
    let mut certs = Vec::new();
    for ((m, s), (n, _)) in x.terms.iter().zip(&y.terms) {
        match is_iso_module(q, m, n, seed)? {
            IsoVerdict::Yes(f) => certs.push((*s, f)),
            IsoVerdict::No(why) => return Ok(DIso::No(format!("shift {s}: {why}"))),
            IsoVerdict::Inconclusive { seed } => return Ok(DIso::Inconclusive { seed }),
        }
    }
    Ok(DIso::Yes(certs))
}

/// `Σ (-1)^i dim Hom^i(x, y)`.
pub fn euler_pairing(q: &Quiver, x: &DObject, y: &DObject) -> Result<i64, DerivedError> {
    Ok(hom_graded(q, x, y)?.euler())
}

#[cfg(test)]
mod tests;
