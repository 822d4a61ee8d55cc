//! Distinguished triangles and their long exact sequences.

use crate::exactlin::Matrix;
use crate::quiver::Quiver;

use super::{cone, hom_complexes, ChainMap, DObject, DerivedError, GradedHom, ProjComplex};

/// `X -f-> Y -g-> Z -h-> X[1]` at chain level.
#[derive(Clone, Debug)]
pub struct Triangle {
    pub x: ProjComplex,
    pub y: ProjComplex,
    pub z: ProjComplex,
    pub f: ChainMap,
    pub g: ChainMap,
    pub h: ChainMap,
}

impl Triangle {
    /// The standard triangle `X -> Y -> cone(f) -> X[1]`.
    pub fn from_map(q: &Quiver, f: &ChainMap) -> Triangle {
        let c = cone(q, f);
        Triangle {
            x: f.source().clone(),
            y: f.target().clone(),
            z: c.complex,
            f: f.clone(),
            g: c.inclusion,
            h: c.projection,
        }
    }

    /// `Y -> Z -> X[1] -> Y[1]`, with the usual sign on the last map.
    pub fn rotate(&self) -> Triangle {
        let f1 = self.f.shift(1).scale(&crate::exactlin::Scalar::from_int(-1));
        Triangle {
            x: self.y.clone(),
            y: self.z.clone(),
            z: self.x.shift(1),
            f: self.g.clone(),
            g: self.h.clone(),
            h: f1,
        }
    }

    pub fn objects(&self, q: &Quiver) -> Result<(DObject, DObject, DObject), DerivedError> {
        Ok((self.x.homology(q)?, self.y.homology(q)?, self.z.homology(q)?))
    }
}

fn rank_and_zero(a: &Matrix, b: &Matrix) -> (usize, usize, bool) {
    let zero = if a.cols() == 0 || b.rows() == 0 {
        true
    } else {
        (b * a).is_zero()
    };
    (a.rank(), b.rank(), zero)
}

/// Checks exactness of `Hom^*(W, -)` applied to the triangle at every spot
/// and the additivity of Euler pairings. Returns a description of the first
/// failure.
pub fn les_check(q: &Quiver, t: &Triangle, w: &ProjComplex) -> Result<Result<(), String>, DerivedError> {
    let x1 = t.x.shift(1);
    let y1 = t.y.shift(1);
    let hx = hom_complexes(q, w, &t.x)?;
    let hy = hom_complexes(q, w, &t.y)?;
    let hz = hom_complexes(q, w, &t.z)?;
    let hx1 = hom_complexes(q, w, &x1)?;
    let hy1 = hom_complexes(q, w, &y1)?;
    let f1 = t.f.shift(1);

    if hy.euler() != hx.euler() + hz.euler() {
        return Ok(Err(format!(
            "Euler pairings not additive: {} != {} + {}",
            hy.euler(),
            hx.euler(),
            hz.euler()
        )));
    }

    let degrees: Vec<i64> = [&hx, &hy, &hz, &hx1, &hy1]
        .iter()
        .flat_map(|h: &&GradedHom| h.dims().into_keys())
        .collect();
    let (Some(&lo), Some(&hi)) = (degrees.iter().min(), degrees.iter().max()) else {
        return Ok(Ok(()));
    };
    for n in lo..=hi {
        let fm = hx.post_compose(q, &hy, &t.f, n);
        let gm = hy.post_compose(q, &hz, &t.g, n);
        let hm = hz.post_compose(q, &hx1, &t.h, n);
        let f1m = hx1.post_compose(q, &hy1, &f1, n);
        let spots = [
            ("Y", &fm, &gm, hy.dim(n)),
            ("Z", &gm, &hm, hz.dim(n)),
            ("X[1]", &hm, &f1m, hx1.dim(n)),
        ];
        for (name, a, b, dim) in spots {
            let (ra, rb, zero) = rank_and_zero(a, b);
            if !zero {
                return Ok(Err(format!("composite through {name} nonzero in degree {n}")));
            }
            if ra + rb != dim {
                return Ok(Err(format!(
                    "not exact at {name} in degree {n}: ranks {ra} + {rb} != {dim}"
                )));
            }
        }
    }
    Ok(Ok(()))
}
