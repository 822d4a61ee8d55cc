//! Morphisms between finite direct sums of indecomposable projectives.
//!
//! `Hom(P(v), P(w)) = P(w)_v` is spanned by the paths `w -> v`, so a map
//! `⊕_i P(src_i) -> ⊕_j P(tgt_j)` is a matrix of path-algebra elements: block
//! `(j, i)` holds coefficients over `paths_between(tgt_j, src_i)`. Composition
//! is concatenation in the opposite order (`g ∘ f` takes `g`'s path first).
//!
//! The same coefficients describe the Nakayama image `⊕ I(src_i) -> ⊕ I(tgt_j)`,
//! which is how the derived Nakayama functor is evaluated on maps.

use crate::exactlin::{Matrix, Scalar, Vector};

use super::{Quiver, QuiverError, Rep, RepMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMap {
    src: Vec<usize>,
    tgt: Vec<usize>,
    /// blocks[j][i]
    blocks: Vec<Vec<Vector>>,
}

impl ProjMap {
    pub fn zero(q: &Quiver, src: &[usize], tgt: &[usize]) -> ProjMap {
        let blocks = tgt
            .iter()
            .map(|&w| src.iter().map(|&v| vec![Scalar::zero(); q.num_paths(w, v)]).collect())
            .collect();
        ProjMap {
            src: src.to_vec(),
            tgt: tgt.to_vec(),
            blocks,
        }
    }

    pub fn identity(q: &Quiver, sum: &[usize]) -> ProjMap {
        let mut m = Self::zero(q, sum, sum);
        for (i, &v) in sum.iter().enumerate() {
            m.blocks[i][i][q.slot(q.trivial_path(v))] = Scalar::one();
        }
        m
    }

    pub fn source(&self) -> &[usize] {
        &self.src
    }

    pub fn target(&self) -> &[usize] {
        &self.tgt
    }

    /// Coefficients of block `(j, i)` over `paths_between(tgt[j], src[i])`.
    pub fn block(&self, j: usize, i: usize) -> &[Scalar] {
        &self.blocks[j][i]
    }

    pub fn block_mut(&mut self, j: usize, i: usize) -> &mut Vector {
        &mut self.blocks[j][i]
    }

    /// Block lengths against the path counts of `q`.
    pub fn check(&self, q: &Quiver) -> Result<(), QuiverError> {
        if self.blocks.len() != self.tgt.len() {
            return Err(QuiverError::Shape("row count differs from target summands".into()));
        }
        for (j, &w) in self.tgt.iter().enumerate() {
            if self.blocks[j].len() != self.src.len() {
                return Err(QuiverError::Shape(format!("row {j} has wrong length")));
            }
            for (i, &v) in self.src.iter().enumerate() {
                if self.blocks[j][i].len() != q.num_paths(w, v) {
                    return Err(QuiverError::Shape(format!("block ({j},{i}) has wrong length")));
                }
            }
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().flatten().flatten().all(Scalar::is_zero)
    }

    /// Dimension of `Hom(⊕ P(src), ⊕ P(tgt))`.
    pub fn hom_dim(q: &Quiver, src: &[usize], tgt: &[usize]) -> usize {
        tgt.iter()
            .map(|&w| src.iter().map(|&v| q.num_paths(w, v)).sum::<usize>())
            .sum()
    }

    /// Coordinates in the basis ordered by target summand, source summand,
    /// then path slot.
    pub fn flatten(&self) -> Vector {
        self.blocks.iter().flatten().flatten().cloned().collect()
    }

    pub fn from_flat(q: &Quiver, src: &[usize], tgt: &[usize], flat: &[Scalar]) -> ProjMap {
        let mut m = Self::zero(q, src, tgt);
        let mut it = flat.iter();
        for row in &mut m.blocks {
            for blk in row {
                for c in blk {
                    *c = it.next().expect("flat vector too short").clone();
                }
            }
        }
        assert!(it.next().is_none(), "flat vector too long");
        m
    }

    /// `self ∘ f`
    pub fn after(&self, q: &Quiver, f: &ProjMap) -> ProjMap {
        assert_eq!(self.src, f.tgt, "composition of incompatible maps");
        let mut out = Self::zero(q, &f.src, &self.tgt);
        for (k, &w) in self.tgt.iter().enumerate() {
            for (i, &v) in f.src.iter().enumerate() {
                let paths = q.paths_between(w, v);
                let acc = &mut out.blocks[k][i];
                for (j, &m) in f.tgt.iter().enumerate() {
                    let gb = &self.blocks[k][j];
                    let fb = &f.blocks[j][i];
                    if gb.iter().all(Scalar::is_zero) || fb.iter().all(Scalar::is_zero) {
                        continue;
                    }
                    for (gs, gq) in q.paths_between(w, m).iter().enumerate() {
                        if gb[gs].is_zero() {
                            continue;
                        }
                        for (fs, fp) in q.paths_between(m, v).iter().enumerate() {
                            if fb[fs].is_zero() {
                                continue;
                            }
                            let r = q.concat(*gq, *fp).expect("composable paths");
                            let slot = q.slot(r);
                            debug_assert_eq!(paths[slot], r);
                            acc[slot] = &acc[slot] + &(&gb[gs] * &fb[fs]);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &ProjMap) -> ProjMap {
        assert!(
            self.src == other.src && self.tgt == other.tgt,
            "sum of maps with different ends"
        );
        let mut out = self.clone();
        for (ob, xb) in out.blocks.iter_mut().flatten().zip(other.blocks.iter().flatten()) {
            for (o, x) in ob.iter_mut().zip(xb) {
                *o = &*o + x;
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> ProjMap {
        let mut out = self.clone();
        for c in out.blocks.iter_mut().flatten().flatten() {
            *c = &*c * s;
        }
        out
    }

    /// Writes `m` into the summand positions starting at target summand
    /// `j0` and source summand `i0`.
    pub fn set_block_map(&mut self, j0: usize, i0: usize, m: &ProjMap) {
        for (j, row) in m.blocks.iter().enumerate() {
            assert_eq!(self.tgt[j0 + j], m.tgt[j], "target summand mismatch");
            for (i, blk) in row.iter().enumerate() {
                assert_eq!(self.src[i0 + i], m.src[i], "source summand mismatch");
                self.blocks[j0 + j][i0 + i] = blk.clone();
            }
        }
    }

    /// The sub-map between summand ranges.
    pub fn sub_map(&self, tgt: std::ops::Range<usize>, src: std::ops::Range<usize>) -> ProjMap {
        ProjMap {
            src: self.src[src.clone()].to_vec(),
            tgt: self.tgt[tgt.clone()].to_vec(),
            blocks: self.blocks[tgt].iter().map(|row| row[src.clone()].to_vec()).collect(),
        }
    }

    /// The concrete morphism of representations `proj_rep(src) -> proj_rep(tgt)`.
    pub fn to_rep_map(&self, q: &Quiver) -> RepMap {
        let source = proj_rep(q, &self.src);
        let target = proj_rep(q, &self.tgt);
        let comps = (0..q.num_vertices())
            .map(|u| {
                let col_off = offsets(self.src.iter().map(|&v| q.num_paths(v, u)));
                let row_off = offsets(self.tgt.iter().map(|&w| q.num_paths(w, u)));
                let mut m = Matrix::zeros(target.dims()[u], source.dims()[u]);
                for (j, &w) in self.tgt.iter().enumerate() {
                    for (i, &v) in self.src.iter().enumerate() {
                        for (qs, &qp) in q.paths_between(w, v).iter().enumerate() {
                            let c = &self.blocks[j][i][qs];
                            if c.is_zero() {
                                continue;
                            }
                            for (ps, &p) in q.paths_between(v, u).iter().enumerate() {
                                let r = q.concat(qp, p).expect("composable");
                                let row = row_off[j] + q.slot(r);
                                let col = col_off[i] + ps;
                                m.set(row, col, m.get(row, col) + c);
                            }
                        }
                    }
                }
                m
            })
            .collect();
        RepMap::from_parts(source, target, comps)
    }
}

fn offsets(sizes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut acc = 0;
    sizes
        .map(|s| {
            let o = acc;
            acc += s;
            o
        })
        .collect()
}

/// Concrete representation of `⊕_i P(sum_i)`; at vertex `u` the basis is the
/// concatenation over `i` of the paths `sum_i -> u`.
pub fn proj_rep(q: &Quiver, sum: &[usize]) -> Rep {
    let n = q.num_vertices();
    let dims: Vec<usize> = (0..n).map(|u| sum.iter().map(|&v| q.num_paths(v, u)).sum()).collect();
    let mats = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let ap = q.arrow_path(ai);
            let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
            let mut row0 = 0;
            let mut col0 = 0;
            for &v in sum {
                for (ps, &p) in q.paths_between(v, a.source).iter().enumerate() {
                    let r = q.concat(p, ap).expect("composable");
                    m.set(row0 + q.slot(r), col0 + ps, Scalar::one());
                }
                row0 += q.num_paths(v, a.target);
                col0 += q.num_paths(v, a.source);
            }
            m
        })
        .collect();
    Rep::from_parts(dims, mats)
}

/// `ν(⊕ P(v_i)) = ⊕ I(v_i)`; at vertex `u` the basis is dual to the paths
/// `u -> v_i`.
pub fn nakayama(q: &Quiver, sum: &[usize]) -> Rep {
    let n = q.num_vertices();
    let dims: Vec<usize> = (0..n).map(|u| sum.iter().map(|&v| q.num_paths(u, v)).sum()).collect();
    let mats = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            // s* ↦ t* whenever s = (arrow, then t)
            let ap = q.arrow_path(ai);
            let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
            let mut row0 = 0;
            let mut col0 = 0;
            for &v in sum {
                for (ts, &t) in q.paths_between(a.target, v).iter().enumerate() {
                    let s = q.concat(ap, t).expect("composable");
                    m.set(row0 + ts, col0 + q.slot(s), Scalar::one());
                }
                row0 += q.num_paths(a.target, v);
                col0 += q.num_paths(a.source, v);
            }
            m
        })
        .collect();
    Rep::from_parts(dims, mats)
}

/// The Nakayama functor on a map of projective sums.
pub fn nakayama_map(q: &Quiver, f: &ProjMap) -> RepMap {
    let source = nakayama(q, &f.src);
    let target = nakayama(q, &f.tgt);
    let comps = (0..q.num_vertices())
        .map(|u| {
            let col_off = offsets(f.src.iter().map(|&v| q.num_paths(u, v)));
            let row_off = offsets(f.tgt.iter().map(|&w| q.num_paths(u, w)));
            let mut m = Matrix::zeros(target.dims()[u], source.dims()[u]);
            for (j, &w) in f.tgt.iter().enumerate() {
                for (i, &v) in f.src.iter().enumerate() {
                    for (qs, &qp) in q.paths_between(w, v).iter().enumerate() {
                        let c = &f.blocks[j][i][qs];
                        if c.is_zero() {
                            continue;
                        }
                        // ν(q)(s*) = Σ_{r: r then q = s} r*
                        for (rs, &r) in q.paths_between(u, w).iter().enumerate() {
                            let s = q.concat(r, qp).expect("composable");
                            let row = row_off[j] + rs;
                            let col = col_off[i] + q.slot(s);
                            m.set(row, col, m.get(row, col) + c);
                        }
                    }
                }
            }
            m
        })
        .collect();
    RepMap::from_parts(source, target, comps)
}

#[cfg(test)]
mod tests {
    use super::super::{injective, is_iso_module, projective};
    use super::*;

    fn kronecker() -> Quiver {
        Quiver::from_indices(2, &[("a", 0, 1), ("b", 0, 1)]).unwrap()
    }

    fn tacked() -> Quiver {
        Quiver::from_indices(3, &[("a", 0, 1), ("b", 0, 1), ("c", 1, 2)]).unwrap()
    }

    #[test]
    fn concrete_projectives_match() {
        let q = tacked();
        for v in 0..3 {
            assert_eq!(proj_rep(&q, &[v]), projective(&q, v).unwrap());
            assert_eq!(nakayama(&q, &[v]), injective(&q, v).unwrap());
        }
    }

    #[test]
    fn hom_between_kronecker_projectives_is_two_dimensional() {
        let q = kronecker();
        assert_eq!(ProjMap::hom_dim(&q, &[1], &[0]), 2);
        assert_eq!(ProjMap::hom_dim(&q, &[0], &[1]), 0);
    }

    #[test]
    fn nakayama_is_functorial_on_kronecker() {
        let q = kronecker();
        let id = ProjMap::identity(&q, &[0, 1]);
        let nid = nakayama_map(&q, &id);
        assert!(nid.comps().iter().all(|m| *m == Matrix::identity(m.rows())));

        // basis of Hom(P(2), P(1)) maps to a 2-dimensional space of injective maps
        let basis: Vec<_> = (0..2)
            .map(|k| {
                let mut f = ProjMap::zero(&q, &[1], &[0]);
                f.block_mut(0, 0)[k] = Scalar::one();
                f
            })
            .collect();
        let images: Vec<Vector> = basis.iter().map(|f| nakayama_map(&q, f).flatten_components()).collect();
        assert_eq!(Matrix::from_columns(images[0].len(), &images).rank(), 2);
        for f in &basis {
            assert!(nakayama_map(&q, f).check().is_ok());
            assert!(f.to_rep_map(&q).check().is_ok());
        }
    }

    #[test]
    fn composition_matches_concrete_maps() {
        let q = tacked();
        // P(3) -> P(2) -> P(1): c then (2a - b)
        let mut f = ProjMap::zero(&q, &[2], &[1]);
        f.block_mut(0, 0)[0] = Scalar::one();
        let mut g = ProjMap::zero(&q, &[1], &[0]);
        g.block_mut(0, 0)[0] = Scalar::from_int(2);
        g.block_mut(0, 0)[1] = Scalar::from_int(-1);
        let gf = g.after(&q, &f);
        assert!(!gf.is_zero());
        let concrete = g.to_rep_map(&q).after(&f.to_rep_map(&q));
        assert_eq!(gf.to_rep_map(&q), concrete);
        let nak = nakayama_map(&q, &f).then(&nakayama_map(&q, &g));
        assert_eq!(nakayama_map(&q, &gf), nak);
    }

    #[test]
    fn identity_is_iso() {
        let q = tacked();
        let p = proj_rep(&q, &[0, 2]);
        assert!(matches!(
            is_iso_module(&q, &p, &p, 1).unwrap(),
            super::super::IsoVerdict::Yes(_)
        ));
    }
}
