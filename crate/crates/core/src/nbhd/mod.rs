//! Spherelike detection, asphericity triangles, and the Frobenius and
//! spherical neighbourhood membership oracles with their posets.
//!
//! Neighbourhoods are infinite, so they are represented by membership
//! oracles and evaluated on finite probe sets. Orders and lattices are
//! therefore relative to the probes used.

mod poset;

pub use poset::{poset_build, Flavor, NbhdPoset};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::derived::{
    cone, hom_complexes, hom_graded, is_iso, serre, to_proj, ChainMap, DIso, DObject, DerivedError, ProjComplex,
};
use crate::quiver::Quiver;
use crate::sodtwist::{minimize, ExcEmbedding, SodError};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum NbhdError {
    #[error("object is not {d}-spherelike: Hom^*(A, A) has dims {dims:?}")]
    NotSpherelike { d: i64, dims: BTreeMap<i64, usize> },
    #[error("object is not spherical inside the subcategory: {0}")]
    NotSpherical(String),
    #[error("object is not a member of the Frobenius codomain")]
    NotAMember,
    #[error("certification failed: {0}")]
    Certification(String),
    #[error("empty probe set")]
    NoProbes,
    #[error(transparent)]
    Sod(#[from] SodError),
    #[error(transparent)]
    Derived(#[from] DerivedError),
}

impl From<crate::quiver::QuiverError> for NbhdError {
    fn from(e: crate::quiver::QuiverError) -> Self {
        NbhdError::Derived(e.into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Exceptional,
    Spherelike(i64),
    Neither,
}

#[derive(Clone, Debug)]
pub struct SpherelikeProfile {
    pub object: DObject,
    pub kind: Kind,
    pub self_hom: BTreeMap<i64, usize>,
    pub cy_degree: Option<i64>,
}

impl SpherelikeProfile {
    pub fn is_spherical(&self) -> bool {
        matches!(self.kind, Kind::Spherelike(d) if self.cy_degree == Some(d))
    }
}

pub fn classify(self_hom: &BTreeMap<i64, usize>) -> Kind {
    let mut it = self_hom.iter();
    match (it.next(), it.next(), it.next()) {
        (Some((0, 1)), None, None) => Kind::Exceptional,
        (Some((0, 1)), Some((&b, 1)), None) => Kind::Spherelike(b),
        (Some((&a, 1)), Some((0, 1)), None) => Kind::Spherelike(a),
        _ => Kind::Neither,
    }
}

fn min_shift(x: &DObject) -> Option<i64> {
    x.terms().first().map(|(_, s)| *s)
}

/// Classifies by graded self-Homs; the Calabi-Yau degree is the only shift
/// that can match `serre(a)` termwise, and is recorded when certified.
pub fn detect(q: &Quiver, a: &DObject, seed: u64) -> Result<SpherelikeProfile, NbhdError> {
    let self_hom = hom_graded(q, a, a)?.dims();
    let kind = if a.is_zero() {
        Kind::Neither
    } else {
        classify(&self_hom)
    };
    let mut cy_degree = None;
    if !a.is_zero() {
        let sa = serre(q, a)?;
        if let (Some(s0), Some(a0)) = (min_shift(&sa), min_shift(a)) {
            let d = s0 - a0;
            if is_iso(q, &sa, &a.shift(d), seed)?.is_yes() {
                cy_degree = Some(d);
            }
        }
    }
    Ok(SpherelikeProfile {
        object: a.clone(),
        kind,
        self_hom,
        cy_degree,
    })
}

/// `A -w-> S A[-d] -> Q_A`.
#[derive(Clone, Debug)]
pub struct AsphericityData {
    pub object: DObject,
    pub degree: i64,
    pub serre_shifted: DObject,
    pub w: ChainMap,
    pub q_complex: ProjComplex,
    pub q_a: DObject,
}

pub fn asphericity(q: &Quiver, a: &DObject, d: i64) -> Result<AsphericityData, NbhdError> {
    let dims = hom_graded(q, a, a)?.dims();
    if a.is_zero() || classify(&dims) != Kind::Spherelike(d) {
        return Err(NbhdError::NotSpherelike { d, dims });
    }
    let target = serre(q, a)?.shift(-d);
    let (ac, tc) = (to_proj(q, a)?, to_proj(q, &target)?);
    let h = hom_complexes(q, &ac, &tc)?;
    if h.dim(0) != 1 {
        return Err(NbhdError::NotSpherelike { d, dims });
    }
    let w = h.rep(q, 0, 0);
    let c = cone(q, &w);
    let q_a = c.complex.homology(q)?;
    Ok(AsphericityData {
        object: a.clone(),
        degree: d,
        serre_shifted: target,
        w,
        q_complex: c.complex,
        q_a,
    })
}

/// `b ∈ ⊥Q_A`.
pub fn sph_subcat_member(q: &Quiver, b: &DObject, asp: &AsphericityData) -> Result<bool, NbhdError> {
    if asp.q_a.is_zero() {
        return Ok(true);
    }
    Ok(hom_graded(q, b, &asp.q_a)?.is_zero())
}

/// Adjunction route: `Hom^*(F A, T' B) = 0`.
pub fn frbo_member(q: &Quiver, emb: &ExcEmbedding, a_img: &DObject, b: &DObject) -> Result<bool, NbhdError> {
    if a_img.is_zero() {
        return Ok(true);
    }
    emb.check_image(q, a_img)?;
    let tpb = right_twist_min(q, emb, b)?;
    Ok(hom_complexes(q, &to_proj(q, a_img)?, &tpb)?.is_zero())
}

/// Serre route: `Hom^*(B, T S_B F A) = 0`.
pub fn frbo_member_serre(q: &Quiver, emb: &ExcEmbedding, a_img: &DObject, b: &DObject) -> Result<bool, NbhdError> {
    if a_img.is_zero() {
        return Ok(true);
    }
    emb.check_image(q, a_img)?;
    let tsa = emb.left_twist(q, &serre(q, a_img)?)?;
    Ok(hom_graded(q, b, &tsa)?.is_zero())
}

pub(crate) fn right_twist_min(q: &Quiver, emb: &ExcEmbedding, b: &DObject) -> Result<ProjComplex, NbhdError> {
    Ok(minimize(q, &emb.right_twist_chain(q, &to_proj(q, b)?)?.complex)?)
}

/// The source object used by the dual neighbourhood: `S_A^{-1} A`, image-realized
/// and certified by `serre_sub` returning `a_img`.
pub fn serre_sub_preimage(q: &Quiver, emb: &ExcEmbedding, a_img: &DObject, seed: u64) -> Result<DObject, NbhdError> {
    let pre = emb.serre_sub_inverse(q, a_img)?;
    let back = emb.serre_sub(q, &pre)?;
    match is_iso(q, &back, a_img, seed)? {
        DIso::Yes(_) => Ok(pre),
        other => Err(NbhdError::Certification(format!("serre_sub(S^-1 a) vs a: {other:?}"))),
    }
}

/// Dual neighbourhood via the inverse Serre functor of the subcategory.
pub fn frbod_member(
    q: &Quiver,
    emb: &ExcEmbedding,
    a_img: &DObject,
    b: &DObject,
    seed: u64,
) -> Result<bool, NbhdError> {
    if a_img.is_zero() {
        return Ok(true);
    }
    let pre = serre_sub_preimage(q, emb, a_img, seed)?;
    frbo_member(q, emb, &pre, b)
}

/// The dual neighbourhood read directly: `Hom^*(T B, F A) = 0`.
pub fn frbod_member_direct(q: &Quiver, emb: &ExcEmbedding, a_img: &DObject, b: &DObject) -> Result<bool, NbhdError> {
    if a_img.is_zero() {
        return Ok(true);
    }
    emb.check_image(q, a_img)?;
    let tb = minimize(q, &emb.left_twist_chain(q, &to_proj(q, b)?)?.complex)?;
    Ok(hom_complexes(q, &tb, &to_proj(q, a_img)?)?.is_zero())
}

pub fn frb_codomain_member(q: &Quiver, emb: &ExcEmbedding, b: &DObject) -> Result<bool, NbhdError> {
    Ok(emb.p_operator(q, b)?.is_zero())
}

/// `B ≅ FL B ⊕ T' B` with `T' B ∈ ker R ∩ ker L`, certified.
#[derive(Clone, Debug)]
pub struct FrbDecomposition {
    pub image_part: DObject,
    pub orthogonal_part: DObject,
}

pub fn frb_decompose(q: &Quiver, emb: &ExcEmbedding, b: &DObject, seed: u64) -> Result<FrbDecomposition, NbhdError> {
    if !frb_codomain_member(q, emb, b)? {
        return Err(NbhdError::NotAMember);
    }
    let tri = emb.sod_project(q, b)?;
    let objs = tri.objects(q)?;
    let tp = to_proj(q, &objs.tp)?;
    if !emb.in_ker_r(q, &tp)? || !emb.in_ker_l(q, &tp)? {
        return Err(NbhdError::Certification(
            "orthogonal part is not in ker R ∩ ker L".into(),
        ));
    }
    let sum = DObject::sum(q, &[&objs.fl, &objs.tp])?;
    if !is_iso(q, &sum, b, seed)?.is_yes() {
        return Err(NbhdError::Certification("B is not the sum of its parts".into()));
    }
    Ok(FrbDecomposition {
        image_part: objs.fl,
        orthogonal_part: objs.tp,
    })
}

/// Spherelike profile of an image object computed inside the subcategory.
#[derive(Clone, Debug)]
pub struct SubProfile {
    pub kind: Kind,
    pub self_hom: BTreeMap<i64, usize>,
    pub cy_degree: Option<i64>,
}

pub fn detect_in_subcategory(
    q: &Quiver,
    emb: &ExcEmbedding,
    a_img: &DObject,
    seed: u64,
) -> Result<SubProfile, NbhdError> {
    // F is fully faithful, so self-Homs agree with the ambient ones
    let self_hom = hom_graded(q, a_img, a_img)?.dims();
    let kind = if a_img.is_zero() {
        Kind::Neither
    } else {
        classify(&self_hom)
    };
    let mut cy_degree = None;
    if !a_img.is_zero() {
        let sa = emb.serre_sub(q, a_img)?;
        if let (Some(s0), Some(a0)) = (min_shift(&sa), min_shift(a_img)) {
            let d = s0 - a0;
            if is_iso(q, &sa, &a_img.shift(d), seed)?.is_yes() {
                cy_degree = Some(d);
            }
        }
    }
    Ok(SubProfile {
        kind,
        self_hom,
        cy_degree,
    })
}

/// Spherical neighbourhood of the composite `F ∘ F_A`, delegated to the
/// Frobenius neighbourhood of `F` at `A`.
pub fn spho_member(
    q: &Quiver,
    emb: &ExcEmbedding,
    a_img: &DObject,
    b: &DObject,
    v_nonzero: bool,
    seed: u64,
) -> Result<bool, NbhdError> {
    let p = detect_in_subcategory(q, emb, a_img, seed)?;
    match p.kind {
        Kind::Spherelike(d) if p.cy_degree == Some(d) => {}
        _ => {
            return Err(NbhdError::NotSpherical(format!(
                "self-Homs {:?}, Calabi-Yau degree {:?}",
                p.self_hom, p.cy_degree
            )))
        }
    }
    if !v_nonzero {
        return Ok(true);
    }
    frbo_member(q, emb, a_img, b)
}
