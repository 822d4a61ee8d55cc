//! Graded Hom between complexes of projectives.
//!
//! `Hom^n(P, Q) = ⊕_k Hom(P^k, Q^{k+n})` with `D f = d_Q f - (-1)^n f d_P`.
//! A cocycle of degree `n` is the same data as a chain map `P -> Q[n]`.

use std::collections::BTreeMap;

use crate::exactlin::{complement_basis, unit_vector, Coordinates, Matrix, Scalar, Vector};
use crate::quiver::{ProjMap, Quiver};

use super::{ChainMap, DerivedError, ProjComplex};

#[derive(Clone, Debug)]
struct Block {
    k: i64,
    offset: usize,
    len: usize,
}

fn layout(q: &Quiver, p: &ProjComplex, t: &ProjComplex, n: i64) -> (Vec<Block>, usize) {
    let mut blocks = Vec::new();
    let mut offset = 0;
    for (&k, src) in p.terms() {
        let len = ProjMap::hom_dim(q, src, t.term(k + n));
        if len > 0 {
            blocks.push(Block { k, offset, len });
            offset += len;
        }
    }
    (blocks, offset)
}

fn unflatten(
    q: &Quiver,
    p: &ProjComplex,
    t: &ProjComplex,
    n: i64,
    blocks: &[Block],
    v: &[Scalar],
) -> BTreeMap<i64, ProjMap> {
    blocks
        .iter()
        .map(|b| {
            let f = ProjMap::from_flat(q, p.term(b.k), t.term(b.k + n), &v[b.offset..b.offset + b.len]);
            (b.k, f)
        })
        .collect()
}

fn flatten(blocks: &[Block], total: usize, maps: &BTreeMap<i64, ProjMap>) -> Vector {
    let mut v = vec![Scalar::zero(); total];
    for b in blocks {
        if let Some(f) = maps.get(&b.k) {
            v[b.offset..b.offset + b.len].clone_from_slice(&f.flatten());
        }
    }
    v
}

/// Matrix of `D: Hom^n -> Hom^{n+1}`.
fn differential(q: &Quiver, p: &ProjComplex, t: &ProjComplex, n: i64) -> Matrix {
    let (src, ns) = layout(q, p, t, n);
    let (dst, nd) = layout(q, p, t, n + 1);
    let sgn = if n.rem_euclid(2) == 0 {
        Scalar::from_int(-1)
    } else {
        Scalar::one()
    };
    let mut cols = Vec::with_capacity(ns);
    for b in &src {
        let dq = t.diff_ref(b.k + n);
        let dp = p.diff_ref(b.k - 1);
        for i in 0..b.len {
            let f = ProjMap::from_flat(q, p.term(b.k), t.term(b.k + n), &unit_vector(b.len, i));
            let mut out = BTreeMap::new();
            if let Some(dq) = dq {
                out.insert(b.k, dq.after(q, &f));
            }
            if let Some(dp) = dp {
                out.insert(b.k - 1, f.after(q, dp).scale(&sgn));
            }
            cols.push(flatten(&dst, nd, &out));
        }
    }
    Matrix::from_columns(nd, &cols)
}

#[derive(Clone, Debug)]
struct HomDegree {
    blocks: Vec<Block>,
    total: usize,
    reps: Vec<Vector>,
    /// basis: coboundaries followed by `reps`
    coords: Coordinates,
}

/// Cohomology of the Hom complex, with chosen cocycle representatives.
#[derive(Clone, Debug)]
pub struct GradedHom {
    source: ProjComplex,
    target: ProjComplex,
    degrees: BTreeMap<i64, HomDegree>,
}

impl GradedHom {
    pub fn compute(q: &Quiver, p: &ProjComplex, t: &ProjComplex) -> Result<GradedHom, DerivedError> {
        let mut degrees = BTreeMap::new();
        if let (Some((p0, p1)), Some((t0, t1))) = (p.range(), t.range()) {
            let mut prev = differential(q, p, t, t0 - p1 - 1);
            for n in (t0 - p1)..=(t1 - p0) {
                let d = differential(q, p, t, n);
                let (blocks, total) = layout(q, p, t, n);
                if total > 0 {
                    let z = if d.rows() == 0 {
                        (0..total).map(|i| unit_vector(total, i)).collect()
                    } else {
                        d.kernel_basis()
                    };
                    let b = prev.image_basis();
                    let zc = Coordinates::new(total, &z)?;
                    let bz: Vec<Vector> = b
                        .iter()
                        .map(|x| zc.checked(x).ok_or(DerivedError::NotAComplex(n)))
                        .collect::<Result<_, _>>()?;
                    let comp = complement_basis(&bz, z.len())?;
                    let zm = Matrix::from_columns(total, &z);
                    let reps: Vec<Vector> = comp.iter().map(|c| zm.mul_vec(c)).collect();
                    let mut basis = b;
                    basis.extend(reps.iter().cloned());
                    let coords = Coordinates::new(total, &basis)?;
                    degrees.insert(
                        n,
                        HomDegree {
                            blocks,
                            total,
                            reps,
                            coords,
                        },
                    );
                }
                prev = d;
            }
        }
        Ok(GradedHom {
            source: p.clone(),
            target: t.clone(),
            degrees,
        })
    }

    pub fn source(&self) -> &ProjComplex {
        &self.source
    }

    pub fn target(&self) -> &ProjComplex {
        &self.target
    }

    pub fn dim(&self, n: i64) -> usize {
        self.degrees.get(&n).map_or(0, |d| d.reps.len())
    }

    /// Nonzero dimensions by degree.
    pub fn dims(&self) -> BTreeMap<i64, usize> {
        self.degrees
            .iter()
            .filter(|(_, d)| !d.reps.is_empty())
            .map(|(&n, d)| (n, d.reps.len()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.values().all(|d| d.reps.is_empty())
    }

    pub fn total_dim(&self) -> usize {
        self.degrees.values().map(|d| d.reps.len()).sum()
    }

    /// `Σ (-1)^n dim Hom^n`.
    pub fn euler(&self) -> i64 {
        self.dims()
            .iter()
            .map(|(&n, &d)| if n.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    /// Components of the `i`-th representative in degree `n`, keyed by source degree.
    pub fn rep_components(&self, q: &Quiver, n: i64, i: usize) -> BTreeMap<i64, ProjMap> {
        let d = &self.degrees[&n];
        unflatten(q, &self.source, &self.target, n, &d.blocks, &d.reps[i])
    }

    /// The `i`-th representative in degree `n` as a chain map `P -> Q[n]`.
    pub fn rep(&self, q: &Quiver, n: i64, i: usize) -> ChainMap {
        ChainMap::from_parts_unchecked(self.source.clone(), self.target.shift(n), self.rep_components(q, n, i))
    }

    /// All representatives in degree `n`.
    pub fn reps(&self, q: &Quiver, n: i64) -> Vec<ChainMap> {
        (0..self.dim(n)).map(|i| self.rep(q, n, i)).collect()
    }

    /// Class coordinates of a degree-`n` cocycle given by its components.
    /// `None` when the input is not a cocycle of the right shape.
    pub fn class_of(&self, n: i64, comps: &BTreeMap<i64, ProjMap>) -> Option<Vector> {
        let Some(d) = self.degrees.get(&n) else {
            return Some(Vec::new());
        };
        let v = flatten(&d.blocks, d.total, comps);
        let c = d.coords.checked(&v)?;
        Some(c[c.len() - d.reps.len()..].to_vec())
    }

    /// Matrix of `Hom^n(W, X) -> Hom^n(W, Y)`, `φ ↦ f ∘ φ`, on cohomology,
    /// where `self = Hom(W, X)` and `other = Hom(W, Y)`.
    pub fn post_compose(&self, q: &Quiver, other: &GradedHom, f: &ChainMap, n: i64) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim(n))
            .map(|i| {
                let phi = self.rep_components(q, n, i);
                let comps = phi.iter().map(|(&k, c)| (k, f.comp(q, k + n).after(q, c))).collect();
                other
                    .class_of(n, &comps)
                    .expect("composite of a cocycle with a chain map is a cocycle")
            })
            .collect();
        Matrix::from_columns(other.dim(n), &cols)
    }

    /// Matrix of `Hom^n(Y, W) -> Hom^n(X, W)`, `φ ↦ φ ∘ f`, on cohomology,
    /// where `self = Hom(Y, W)` and `other = Hom(X, W)`.
    pub fn pre_compose(&self, q: &Quiver, other: &GradedHom, f: &ChainMap, n: i64) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim(n))
            .map(|i| {
                let phi = self.rep_components(q, n, i);
                let comps = other
                    .source
                    .terms()
                    .keys()
                    .filter_map(|&k| phi.get(&k).map(|c| (k, c.after(q, &f.comp(q, k)))))
                    .collect();
                other
                    .class_of(n, &comps)
                    .expect("composite of a chain map with a cocycle is a cocycle")
            })
            .collect();
        Matrix::from_columns(other.dim(n), &cols)
    }
}

pub fn hom_complexes(q: &Quiver, p: &ProjComplex, t: &ProjComplex) -> Result<GradedHom, DerivedError> {
    GradedHom::compute(q, p, t)
}
