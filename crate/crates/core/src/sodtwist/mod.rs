//! Exceptional sequences, mutations and the projection triangles of an
//! admissible embedding `F: ⟨E_1, …, E_r⟩ -> D`.
//!
//! The left twist is `T = L_{E_1} ∘ ⋯ ∘ L_{E_r}` and the right twist is
//! `T' = R_{E_r} ∘ ⋯ ∘ R_{E_1}`. Adjoints are image-realized: `FR(B)` is the
//! cocone of `B -> TB` and `FL(B)` the cone of `T'B -> B`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::derived::{cocone, cone, hom_complexes, serre, to_proj, ChainMap, DObject, DerivedError, ProjComplex};
use crate::quiver::Quiver;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SodError {
    #[error("object {index} is not exceptional: Hom^*(E, E) has dims {dims:?}")]
    NotExceptional { index: usize, dims: BTreeMap<i64, usize> },
    #[error("Hom^*(E_{later}, E_{earlier}) = {dims:?} is nonzero")]
    NotSemiorthogonal {
        later: usize,
        earlier: usize,
        dims: BTreeMap<i64, usize>,
    },
    #[error("object is not in the image of the embedding")]
    NotInImage,
    #[error("certification failed: {0}")]
    Certification(String),
    #[error(transparent)]
    Derived(#[from] DerivedError),
}

/// A complex together with its structure map from (left) or to (right) the input.
#[derive(Clone, Debug)]
pub struct Mutated {
    pub complex: ProjComplex,
    pub map: ChainMap,
}

/// Evaluation `⊕_n Hom^n(E, X) ⊗ E[-n] -> X`.
pub fn evaluation(q: &Quiver, e: &ProjComplex, x: &ProjComplex) -> Result<ChainMap, DerivedError> {
    let h = hom_complexes(q, e, x)?;
    let mut cols = Vec::new();
    for n in h.dims().into_keys() {
        let src = e.shift(-n);
        for i in 0..h.dim(n) {
            let comps = h.rep_components(q, n, i).into_iter().map(|(k, c)| (k + n, c)).collect();
            cols.push(ChainMap::from_parts_unchecked(src.clone(), x.clone(), comps));
        }
    }
    let ev = ChainMap::from_columns(q, &cols, x);
    ev.check(q)?;
    Ok(ev)
}

/// Coevaluation `X -> ⊕_n Hom^n(X, E)^∨ ⊗ E[n]`.
pub fn coevaluation(q: &Quiver, e: &ProjComplex, x: &ProjComplex) -> Result<ChainMap, DerivedError> {
    let h = hom_complexes(q, x, e)?;
    let rows: Vec<ChainMap> = h.dims().into_keys().flat_map(|n| h.reps(q, n)).collect();
    let coev = ChainMap::from_rows(q, x, &rows);
    coev.check(q)?;
    Ok(coev)
}

/// `cone(ev)` with the canonical map `X -> L_E X`.
pub fn left_mutation_chain(q: &Quiver, e: &ProjComplex, x: &ProjComplex) -> Result<Mutated, DerivedError> {
    let c = cone(q, &evaluation(q, e, x)?);
    Ok(Mutated {
        complex: c.complex,
        map: c.inclusion,
    })
}

/// `cocone(coev)` with the canonical map `R_E X -> X`.
pub fn right_mutation_chain(q: &Quiver, e: &ProjComplex, x: &ProjComplex) -> Result<Mutated, DerivedError> {
    let c = cocone(q, &coevaluation(q, e, x)?);
    Ok(Mutated {
        complex: c.complex,
        map: c.projection,
    })
}

/// Replaces a complex by the resolution of its homology.
pub fn minimize(q: &Quiver, c: &ProjComplex) -> Result<ProjComplex, DerivedError> {
    to_proj(q, &c.homology(q)?)
}

fn require_exceptional(q: &Quiver, e: &ProjComplex, index: usize) -> Result<(), SodError> {
    let dims = hom_complexes(q, e, e)?.dims();
    if dims != BTreeMap::from([(0, 1)]) {
        return Err(SodError::NotExceptional { index, dims });
    }
    Ok(())
}

pub fn left_mutation(q: &Quiver, e: &DObject, x: &DObject) -> Result<DObject, SodError> {
    let ec = to_proj(q, e)?;
    require_exceptional(q, &ec, 0)?;
    Ok(left_mutation_chain(q, &ec, &to_proj(q, x)?)?.complex.homology(q)?)
}

pub fn right_mutation(q: &Quiver, e: &DObject, x: &DObject) -> Result<DObject, SodError> {
    let ec = to_proj(q, e)?;
    require_exceptional(q, &ec, 0)?;
    Ok(right_mutation_chain(q, &ec, &to_proj(q, x)?)?.complex.homology(q)?)
}

/// `cone(Hom^*(a, x) ⊗ a -> x)` for an arbitrary object `a`.
pub fn twist_object(q: &Quiver, a: &DObject, x: &DObject) -> Result<DObject, DerivedError> {
    left_mutation_chain(q, &to_proj(q, a)?, &to_proj(q, x)?)?
        .complex
        .homology(q)
}

/// A validated exceptional sequence, read as the embedding of the
/// subcategory it generates.
#[derive(Clone, Debug)]
pub struct ExcEmbedding {
    sequence: Vec<DObject>,
    complexes: Vec<ProjComplex>,
}

pub fn validate_exc_sequence(q: &Quiver, seq: &[DObject]) -> Result<ExcEmbedding, SodError> {
    let complexes: Vec<ProjComplex> = seq.iter().map(|e| to_proj(q, e)).collect::<Result<_, _>>()?;
    for (i, e) in complexes.iter().enumerate() {
        require_exceptional(q, e, i)?;
    }
    for (j, ej) in complexes.iter().enumerate() {
        for (i, ei) in complexes.iter().enumerate().take(j) {
            let dims = hom_complexes(q, ej, ei)?.dims();
            if !dims.is_empty() {
                return Err(SodError::NotSemiorthogonal {
                    later: j,
                    earlier: i,
                    dims,
                });
            }
        }
    }
    Ok(ExcEmbedding {
        sequence: seq.to_vec(),
        complexes,
    })
}

/// Chain-level data of both projection triangles for one object.
#[derive(Clone, Debug)]
pub struct SodTriangles {
    pub b: ProjComplex,
    /// `FR B -> B -> T B`
    pub fr: ProjComplex,
    pub fr_map: ChainMap,
    pub t: ProjComplex,
    pub t_map: ChainMap,
    /// `T' B -> B -> FL B`
    pub tp: ProjComplex,
    pub tp_map: ChainMap,
    pub fl: ProjComplex,
    pub fl_map: ChainMap,
}

impl SodTriangles {
    pub fn objects(&self, q: &Quiver) -> Result<SodObjects, DerivedError> {
        Ok(SodObjects {
            fr: self.fr.homology(q)?,
            t: self.t.homology(q)?,
            tp: self.tp.homology(q)?,
            fl: self.fl.homology(q)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SodObjects {
    pub fr: DObject,
    pub t: DObject,
    pub tp: DObject,
    pub fl: DObject,
}

impl ExcEmbedding {
    pub fn sequence(&self) -> &[DObject] {
        &self.sequence
    }

    pub fn complexes(&self) -> &[ProjComplex] {
        &self.complexes
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// `B -> T B`.
    pub fn left_twist_chain(&self, q: &Quiver, b: &ProjComplex) -> Result<Mutated, DerivedError> {
        let mut cur = b.clone();
        let mut map = ChainMap::identity(q, b);
        for e in self.complexes.iter().rev() {
            let m = left_mutation_chain(q, e, &cur)?;
            map = m.map.after(q, &map);
            cur = m.complex;
        }
        Ok(Mutated { complex: cur, map })
    }

    /// `T' B -> B`.
    pub fn right_twist_chain(&self, q: &Quiver, b: &ProjComplex) -> Result<Mutated, DerivedError> {
        let mut cur = b.clone();
        let mut map = ChainMap::identity(q, b);
        for e in &self.complexes {
            let m = right_mutation_chain(q, e, &cur)?;
            map = map.after(q, &m.map);
            cur = m.complex;
        }
        Ok(Mutated { complex: cur, map })
    }

    pub fn left_twist(&self, q: &Quiver, b: &DObject) -> Result<DObject, DerivedError> {
        self.left_twist_chain(q, &to_proj(q, b)?)?.complex.homology(q)
    }

    pub fn right_twist(&self, q: &Quiver, b: &DObject) -> Result<DObject, DerivedError> {
        self.right_twist_chain(q, &to_proj(q, b)?)?.complex.homology(q)
    }

    /// `FR B -> B` as the cocone of `B -> T B`.
    pub fn fr_chain(&self, q: &Quiver, b: &ProjComplex) -> Result<Mutated, DerivedError> {
        let t = self.left_twist_chain(q, b)?;
        let c = cocone(q, &t.map);
        Ok(Mutated {
            complex: c.complex,
            map: c.projection,
        })
    }

    /// `B -> FL B` as the cone of `T' B -> B`.
    pub fn fl_chain(&self, q: &Quiver, b: &ProjComplex) -> Result<Mutated, DerivedError> {
        let t = self.right_twist_chain(q, b)?;
        let c = cone(q, &t.map);
        Ok(Mutated {
            complex: c.complex,
            map: c.inclusion,
        })
    }

    pub fn fr(&self, q: &Quiver, b: &DObject) -> Result<DObject, DerivedError> {
        self.fr_chain(q, &to_proj(q, b)?)?.complex.homology(q)
    }

    pub fn fl(&self, q: &Quiver, b: &DObject) -> Result<DObject, DerivedError> {
        self.fl_chain(q, &to_proj(q, b)?)?.complex.homology(q)
    }

    /// `hom(E_i, X) = 0` for all `i`.
    pub fn in_ker_r(&self, q: &Quiver, x: &ProjComplex) -> Result<bool, DerivedError> {
        for e in &self.complexes {
            if !hom_complexes(q, e, x)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `hom(X, E_i) = 0` for all `i`.
    pub fn in_ker_l(&self, q: &Quiver, x: &ProjComplex) -> Result<bool, DerivedError> {
        for e in &self.complexes {
            if !hom_complexes(q, x, e)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership in the image: the left twist annihilates exactly `im F`.
    pub fn in_image(&self, q: &Quiver, x: &ProjComplex) -> Result<bool, DerivedError> {
        Ok(self.left_twist_chain(q, x)?.complex.homology(q)?.is_zero())
    }

    fn require_image(&self, q: &Quiver, x: &ProjComplex) -> Result<(), SodError> {
        if self.in_image(q, x)? {
            Ok(())
        } else {
            Err(SodError::NotInImage)
        }
    }

    /// Both projection triangles, certified.
    pub fn sod_project(&self, q: &Quiver, b: &DObject) -> Result<SodTriangles, SodError> {
        let bc = to_proj(q, b)?;
        let t = self.left_twist_chain(q, &bc)?;
        let fr = cocone(q, &t.map);
        let tp = self.right_twist_chain(q, &bc)?;
        let fl = cone(q, &tp.map);

        let t_min = minimize(q, &t.complex)?;
        let tp_min = minimize(q, &tp.complex)?;
        if !self.in_ker_r(q, &t_min)? {
            return Err(SodError::Certification(
                "T B is not right orthogonal to the sequence".into(),
            ));
        }
        if !self.in_ker_l(q, &tp_min)? {
            return Err(SodError::Certification(
                "T' B is not left orthogonal to the sequence".into(),
            ));
        }
        let fr_min = minimize(q, &fr.complex)?;
        let fl_min = minimize(q, &fl.complex)?;
        if !self.in_image(q, &fr_min)? {
            return Err(SodError::Certification("FR B is not in the image".into()));
        }
        if !self.right_twist_chain(q, &fl_min)?.complex.homology(q)?.is_zero() {
            return Err(SodError::Certification("FL B is not in the image".into()));
        }
        Ok(SodTriangles {
            b: bc,
            fr: fr.complex,
            fr_map: fr.projection,
            t: t.complex,
            t_map: t.map,
            tp: tp.complex,
            tp_map: tp.map,
            fl: fl.complex,
            fl_map: fl.inclusion,
        })
    }

    /// `F R T' (b)`; zero exactly on the Frobenius codomain.
    pub fn p_operator(&self, q: &Quiver, b: &DObject) -> Result<DObject, DerivedError> {
        let tp = minimize(q, &self.right_twist_chain(q, &to_proj(q, b)?)?.complex)?;
        self.fr_chain(q, &tp)?.complex.homology(q)
    }

    /// Serre functor of the subcategory, image-realized: `FR(S_B a)`.
    pub fn serre_sub(&self, q: &Quiver, a: &DObject) -> Result<DObject, SodError> {
        self.require_image(q, &to_proj(q, a)?)?;
        Ok(self.fr(q, &serre(q, a)?)?)
    }

    /// Inverse Serre functor of the subcategory, image-realized: `FL(S_B^{-1} a)`.
    pub fn serre_sub_inverse(&self, q: &Quiver, a: &DObject) -> Result<DObject, SodError> {
        self.require_image(q, &to_proj(q, a)?)?;
        Ok(self.fl(q, &crate::derived::serre_inverse(q, a)?)?)
    }

    /// Errors with [`SodError::NotInImage`] unless `a` lies in the image.
    pub fn check_image(&self, q: &Quiver, a: &DObject) -> Result<(), SodError> {
        self.require_image(q, &to_proj(q, a)?)
    }
}

#[cfg(test)]
mod tests;
