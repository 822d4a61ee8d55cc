//! Representations, their morphisms, and module-level homological algebra.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{complement_basis, Coordinates, Matrix, Scalar, Vector};

use super::proj::{nakayama, proj_rep};
use super::{ProjMap, Quiver, QuiverError};

/// Randomized isomorphism trials before giving up.
pub const ISO_TRIALS: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    dims: Vec<usize>,
    mats: Vec<Matrix>,
}

impl Rep {
    pub fn new(q: &Quiver, dims: Vec<usize>, mats: Vec<Matrix>) -> Result<Rep, QuiverError> {
        let r = Rep { dims, mats };
        r.check(q)?;
        Ok(r)
    }

    pub(crate) fn from_parts(dims: Vec<usize>, mats: Vec<Matrix>) -> Rep {
        Rep { dims, mats }
    }

    pub fn zero(q: &Quiver) -> Rep {
        let dims = vec![0; q.num_vertices()];
        let mats = q.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Rep { dims, mats }
    }

    pub fn check(&self, q: &Quiver) -> Result<(), QuiverError> {
        if self.dims.len() != q.num_vertices() {
            return Err(QuiverError::Shape(format!(
                "{} dimensions for {} vertices",
                self.dims.len(),
                q.num_vertices()
            )));
        }
        if self.mats.len() != q.arrows().len() {
            return Err(QuiverError::Shape(format!(
                "{} matrices for {} arrows",
                self.mats.len(),
                q.arrows().len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&self.mats) {
            let want = (self.dims[a.target], self.dims[a.source]);
            if m.shape() != want {
                return Err(QuiverError::Shape(format!(
                    "arrow {} has a {}x{} matrix, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    want.0,
                    want.1
                )));
            }
        }
        Ok(())
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn mat(&self, arrow: usize) -> &Matrix {
        &self.mats[arrow]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    /// The linear map `M_start -> M_end` of a path.
    pub fn path_action(&self, q: &Quiver, p: usize) -> Matrix {
        let path = q.path(p);
        let mut acc = Matrix::identity(self.dims[path.start]);
        for &a in &path.arrows {
            acc = &self.mats[a] * &acc;
        }
        acc
    }

    /// The dual representation, living over the opposite quiver.
    pub fn dual(&self) -> Rep {
        Rep {
            dims: self.dims.clone(),
            mats: self.mats.iter().map(Matrix::transpose).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMap {
    source: Rep,
    target: Rep,
    comps: Vec<Matrix>,
}

impl RepMap {
    /// Checked constructor: shapes and intertwining are verified.
    pub fn new(q: &Quiver, source: Rep, target: Rep, comps: Vec<Matrix>) -> Result<RepMap, QuiverError> {
        let f = RepMap { source, target, comps };
        f.source.check(q)?;
        f.target.check(q)?;
        f.check_against(q)?;
        Ok(f)
    }

    pub(crate) fn from_parts(source: Rep, target: Rep, comps: Vec<Matrix>) -> RepMap {
        RepMap { source, target, comps }
    }

    pub fn zero(source: &Rep, target: &Rep) -> RepMap {
        let comps = source
            .dims
            .iter()
            .zip(&target.dims)
            .map(|(&s, &t)| Matrix::zeros(t, s))
            .collect();
        RepMap {
            source: source.clone(),
            target: target.clone(),
            comps,
        }
    }

    pub fn identity(m: &Rep) -> RepMap {
        let comps = m.dims.iter().map(|&d| Matrix::identity(d)).collect();
        RepMap {
            source: m.clone(),
            target: m.clone(),
            comps,
        }
    }

    pub fn source(&self) -> &Rep {
        &self.source
    }

    pub fn target(&self) -> &Rep {
        &self.target
    }

    pub fn comps(&self) -> &[Matrix] {
        &self.comps
    }

    pub fn comp(&self, v: usize) -> &Matrix {
        &self.comps[v]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    /// Component shapes against source and target dimensions.
    pub fn check(&self) -> Result<(), QuiverError> {
        for (v, c) in self.comps.iter().enumerate() {
            if c.shape() != (self.target.dims[v], self.source.dims[v]) {
                return Err(QuiverError::Shape(format!("component at vertex {v}")));
            }
        }
        Ok(())
    }

    /// Shapes plus the intertwining equations for every arrow of `q`.
    pub fn check_against(&self, q: &Quiver) -> Result<(), QuiverError> {
        self.check()?;
        for (ai, a) in q.arrows().iter().enumerate() {
            let lhs = &self.comps[a.target] * &self.source.mats[ai];
            let rhs = &self.target.mats[ai] * &self.comps[a.source];
            if lhs != rhs {
                return Err(QuiverError::NotIntertwining(a.name.clone()));
            }
        }
        Ok(())
    }

    /// `self ∘ f`
    pub fn after(&self, f: &RepMap) -> RepMap {
        let comps = self.comps.iter().zip(&f.comps).map(|(g, f)| g * f).collect();
        RepMap {
            source: f.source.clone(),
            target: self.target.clone(),
            comps,
        }
    }

    /// `g ∘ self`
    pub fn then(&self, g: &RepMap) -> RepMap {
        g.after(self)
    }

    pub fn add(&self, other: &RepMap) -> RepMap {
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect();
        RepMap {
            source: self.source.clone(),
            target: self.target.clone(),
            comps,
        }
    }

    pub fn scale(&self, s: &Scalar) -> RepMap {
        let comps = self.comps.iter().map(|c| c.scale(s)).collect();
        RepMap {
            source: self.source.clone(),
            target: self.target.clone(),
            comps,
        }
    }

    /// Entries of all components, vertex by vertex, row-major.
    pub fn flatten_components(&self) -> Vector {
        self.comps.iter().flat_map(|c| c.entries().cloned()).collect()
    }

    pub fn inverse(&self) -> Option<RepMap> {
        let comps = self.comps.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(RepMap {
            source: self.target.clone(),
            target: self.source.clone(),
            comps,
        })
    }

    pub fn is_iso(&self) -> bool {
        self.comps.iter().all(Matrix::is_invertible)
    }
}

fn same_quiver(q: &Quiver, ms: &[&Rep]) -> Result<(), QuiverError> {
    for m in ms {
        if m.dims.len() != q.num_vertices() || m.mats.len() != q.arrows().len() {
            return Err(QuiverError::QuiverMismatch);
        }
    }
    Ok(())
}

pub fn projective(q: &Quiver, v: usize) -> Result<Rep, QuiverError> {
    q.check_vertex(v)?;
    Ok(proj_rep(q, &[v]))
}

pub fn injective(q: &Quiver, v: usize) -> Result<Rep, QuiverError> {
    q.check_vertex(v)?;
    Ok(nakayama(q, &[v]))
}

pub fn simple(q: &Quiver, v: usize) -> Result<Rep, QuiverError> {
    q.check_vertex(v)?;
    let dims: Vec<usize> = (0..q.num_vertices()).map(|u| usize::from(u == v)).collect();
    let mats = q
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
        .collect();
    Ok(Rep { dims, mats })
}

pub fn direct_sum(q: &Quiver, ms: &[Rep]) -> Result<Rep, QuiverError> {
    same_quiver(q, &ms.iter().collect::<Vec<_>>())?;
    let dims = (0..q.num_vertices())
        .map(|v| ms.iter().map(|m| m.dims[v]).sum())
        .collect();
    let mats = (0..q.arrows().len())
        .map(|a| Matrix::block_diag(&ms.iter().map(|m| &m.mats[a]).collect::<Vec<_>>()))
        .collect();
    Ok(Rep { dims, mats })
}

/// Basis of `Hom(m, n)`: the kernel of `X_w M_a - N_a X_u = 0` over all arrows.
pub fn hom_module(q: &Quiver, m: &Rep, n: &Rep) -> Result<Vec<RepMap>, QuiverError> {
    same_quiver(q, &[m, n])?;
    let nv = q.num_vertices();
    // unknowns: X_v row-major, vertex after vertex
    let mut off = Vec::with_capacity(nv + 1);
    off.push(0);
    for v in 0..nv {
        off.push(off[v] + n.dims[v] * m.dims[v]);
    }
    let unknowns = off[nv];
    let mut rows: Vec<Vector> = Vec::new();
    for (ai, a) in q.arrows().iter().enumerate() {
        let (u, w) = (a.source, a.target);
        let (ma, na) = (&m.mats[ai], &n.mats[ai]);
        // entry (r, c) of X_w M_a - N_a X_u, r < n_w, c < m_u
        for r in 0..n.dims[w] {
            for c in 0..m.dims[u] {
                let mut row = vec![Scalar::zero(); unknowns];
                for k in 0..m.dims[w] {
                    let x = ma.get(k, c);
                    if !x.is_zero() {
                        let idx = off[w] + r * m.dims[w] + k;
                        row[idx] = &row[idx] + x;
                    }
                }
                for k in 0..n.dims[u] {
                    let x = na.get(r, k);
                    if !x.is_zero() {
                        let idx = off[u] + k * m.dims[u] + c;
                        row[idx] = &row[idx] - x;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..unknowns)
            .map(|i| crate::exactlin::unit_vector(unknowns, i))
            .collect()
    } else {
        Matrix::from_rows_with_cols(rows, unknowns)?.kernel_basis()
    };
    Ok(kernel
        .into_iter()
        .map(|x| {
            let comps = (0..nv)
                .map(|v| {
                    let (r, c) = (n.dims[v], m.dims[v]);
                    let mut mat = Matrix::zeros(r, c);
                    for i in 0..r {
                        for j in 0..c {
                            mat.set(i, j, x[off[v] + i * c + j].clone());
                        }
                    }
                    mat
                })
                .collect();
            RepMap {
                source: m.clone(),
                target: n.clone(),
                comps,
            }
        })
        .collect())
}

/// A minimal projective resolution `0 -> P1 -> P0 -> m -> 0`.
#[derive(Clone, Debug)]
pub struct Presentation {
    /// vertices of the indecomposable summands of `P1`
    pub p1: Vec<usize>,
    /// vertices of the indecomposable summands of `P0`
    pub p0: Vec<usize>,
    pub inclusion: ProjMap,
    /// `proj_rep(p0) -> m`
    pub surjection: RepMap,
}

/// Top generators: for each vertex, a complement of the radical (sum of
/// images of incoming arrows) inside the subspace spanned by `basis`.
fn top_generators(q: &Quiver, m: &Rep) -> Result<Vec<(usize, Vector)>, QuiverError> {
    let mut gens = Vec::new();
    for v in 0..q.num_vertices() {
        let mut rad: Vec<Vector> = Vec::new();
        for (ai, a) in q.arrows().iter().enumerate() {
            if a.target == v {
                rad.extend(m.mats[ai].image_basis());
            }
        }
        let rad = Matrix::from_columns(m.dims[v], &rad).image_basis();
        for g in complement_basis(&rad, m.dims[v])? {
            gens.push((v, g));
        }
    }
    Ok(gens)
}

/// The map `⊕ P(v_i) -> m` sending the idempotent of summand `i` to `gens[i]`.
fn generator_map(q: &Quiver, m: &Rep, gens: &[(usize, Vector)]) -> RepMap {
    let sum: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
    let source = proj_rep(q, &sum);
    let comps = (0..q.num_vertices())
        .map(|u| {
            let cols: Vec<Vector> = gens
                .iter()
                .flat_map(|(v, g)| {
                    q.paths_between(*v, u)
                        .iter()
                        .map(move |&p| m.path_action(q, p).mul_vec(g))
                })
                .collect();
            Matrix::from_columns(m.dims[u], &cols)
        })
        .collect();
    RepMap {
        source,
        target: m.clone(),
        comps,
    }
}

pub fn projective_presentation(q: &Quiver, m: &Rep) -> Result<Presentation, QuiverError> {
    same_quiver(q, &[m])?;
    let gens0 = top_generators(q, m)?;
    let surjection = generator_map(q, m, &gens0);
    let p0: Vec<usize> = gens0.iter().map(|(v, _)| *v).collect();
    let big = surjection.source.clone();

    // kernel as a subrepresentation of P0, in kernel-basis coordinates
    let bases: Vec<Vec<Vector>> = surjection.comps.iter().map(Matrix::kernel_basis).collect();
    let coords: Vec<Coordinates> = bases
        .iter()
        .zip(&big.dims)
        .map(|(b, &d)| Coordinates::new(d, b))
        .collect::<Result<_, _>>()?;
    let kdims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let kmats = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let cols: Vec<Vector> = bases[a.source]
                .iter()
                .map(|x| {
                    coords[a.target]
                        .checked(&big.mats[ai].mul_vec(x))
                        .expect("kernel is a subrepresentation")
                })
                .collect();
            Matrix::from_columns(kdims[a.target], &cols)
        })
        .collect();
    let kernel = Rep {
        dims: kdims,
        mats: kmats,
    };

    // the kernel is projective; its top generators give P1 -> P0
    let gens1 = top_generators(q, &kernel)?;
    let p1: Vec<usize> = gens1.iter().map(|(v, _)| *v).collect();
    let mut inclusion = ProjMap::zero(q, &p1, &p0);
    for (i, (v, g)) in gens1.iter().enumerate() {
        let in_p0 = Matrix::from_columns(big.dims[*v], &bases[*v]).mul_vec(g);
        let mut pos = 0;
        for (j, &w) in p0.iter().enumerate() {
            let len = q.num_paths(w, *v);
            *inclusion.block_mut(j, i) = in_p0[pos..pos + len].to_vec();
            pos += len;
        }
    }
    Ok(Presentation {
        p1,
        p0,
        inclusion,
        surjection,
    })
}

/// Extension classes as the cokernel of `Hom(P0, n) -> Hom(P1, n)`.
#[derive(Clone, Debug)]
pub struct Ext1 {
    pub presentation: Presentation,
    /// precomposition with the inclusion, in `⊕ n_{p0_j}` and `⊕ n_{p1_i}` coordinates
    pub restriction: Matrix,
    /// representatives in `Hom(P1, n)` of a basis of the cokernel
    pub basis: Vec<Vector>,
}

impl Ext1 {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn ext1(q: &Quiver, m: &Rep, n: &Rep) -> Result<Ext1, QuiverError> {
    same_quiver(q, &[m, n])?;
    let pres = projective_presentation(q, m)?;
    let off0: Vec<usize> = offsets(pres.p0.iter().map(|&v| n.dims[v]));
    let off1: Vec<usize> = offsets(pres.p1.iter().map(|&v| n.dims[v]));
    let d0: usize = pres.p0.iter().map(|&v| n.dims[v]).sum();
    let d1: usize = pres.p1.iter().map(|&v| n.dims[v]).sum();
    let mut r = Matrix::zeros(d1, d0);
    for (i, &v) in pres.p1.iter().enumerate() {
        for (j, &w) in pres.p0.iter().enumerate() {
            for (s, &p) in q.paths_between(w, v).iter().enumerate() {
                let c = &pres.inclusion.block(j, i)[s];
                if c.is_zero() {
                    continue;
                }
                let act = n.path_action(q, p).scale(c);
                for a in 0..act.rows() {
                    for b in 0..act.cols() {
                        let (row, col) = (off1[i] + a, off0[j] + b);
                        r.set(row, col, r.get(row, col) + act.get(a, b));
                    }
                }
            }
        }
    }
    let basis = complement_basis(&r.image_basis(), d1)?;
    Ok(Ext1 {
        presentation: pres,
        restriction: r,
        basis,
    })
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

#[derive(Clone, Debug)]
pub enum IsoVerdict {
    Yes(RepMap),
    No(String),
    Inconclusive { seed: u64 },
}

impl IsoVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoVerdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, IsoVerdict::No(_))
    }
}

/// Decides `m ≅ n`. A "yes" carries an exactly inverted certificate; a "no"
/// is backed by a dimension count; otherwise `ISO_TRIALS` random elements of
/// `Hom(m, n)` are tried before reporting inconclusive.
pub fn is_iso_module(q: &Quiver, m: &Rep, n: &Rep, seed: u64) -> Result<IsoVerdict, QuiverError> {
    same_quiver(q, &[m, n])?;
    if m.dims != n.dims {
        return Ok(IsoVerdict::No(format!(
            "dimension vectors differ: {:?} vs {:?}",
            m.dims, n.dims
        )));
    }
    if m.is_zero() {
        return Ok(IsoVerdict::Yes(RepMap::zero(m, n)));
    }
    if m == n {
        return Ok(IsoVerdict::Yes(RepMap::identity(m)));
    }
    let basis = hom_module(q, m, n)?;
    if basis.is_empty() {
        return Ok(IsoVerdict::No("Hom(m, n) = 0".into()));
    }
    let end_m = hom_module(q, m, m)?.len();
    if basis.len() != end_m {
        return Ok(IsoVerdict::No(format!(
            "dim Hom(m, n) = {} but dim End(m) = {end_m}",
            basis.len()
        )));
    }
    let back = hom_module(q, n, m)?.len();
    if back != end_m {
        return Ok(IsoVerdict::No(format!(
            "dim Hom(n, m) = {back} but dim End(m) = {end_m}"
        )));
    }
    if basis.len() == 1 && basis[0].is_iso() {
        return Ok(IsoVerdict::Yes(basis[0].clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ISO_TRIALS {
        let mut f = RepMap::zero(m, n);
        for b in &basis {
            let c = Scalar::from_int(rng.gen_range(-5..=5));
            if !c.is_zero() {
                f = f.add(&b.scale(&c));
            }
        }
        if f.is_iso() {
            return Ok(IsoVerdict::Yes(f));
        }
    }
    Ok(IsoVerdict::Inconclusive { seed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn kronecker() -> Quiver {
        Quiver::from_indices(2, &[("a", 0, 1), ("b", 0, 1)]).unwrap()
    }

    fn regular(q: &Quiver, lambda: i64) -> Rep {
        let one = Matrix::from_ints(&[&[1]]);
        Rep::new(q, vec![1, 1], vec![one, Matrix::from_ints(&[&[lambda]])]).unwrap()
    }

    #[test]
    fn standard_dimensions() {
        let q = kronecker();
        assert_eq!(projective(&q, 0).unwrap().dims(), &[1, 2]);
        assert_eq!(projective(&q, 1).unwrap().dims(), &[0, 1]);
        assert_eq!(injective(&q, 0).unwrap().dims(), &[1, 0]);
        assert_eq!(injective(&q, 1).unwrap().dims(), &[2, 1]);
        for v in 0..2 {
            assert_eq!(simple(&q, v).unwrap().total_dim(), 1);
        }
        assert!(projective(&q, 2).is_err());
    }

    #[test]
    fn hom_dimensions() {
        let q = kronecker();
        let p1 = projective(&q, 0).unwrap();
        assert_eq!(hom_module(&q, &p1, &p1).unwrap().len(), 1);
        let (s1, s2) = (simple(&q, 0).unwrap(), simple(&q, 1).unwrap());
        assert_eq!(hom_module(&q, &s1, &s2).unwrap().len(), 0);
        let r = regular(&q, 3);
        let rr = direct_sum(&q, &[r.clone(), r.clone()]).unwrap();
        assert_eq!(
            hom_module(&q, &r, &rr).unwrap().len(),
            2 * hom_module(&q, &r, &r).unwrap().len()
        );
        for f in hom_module(&q, &rr, &rr).unwrap() {
            assert!(f.check_against(&q).is_ok());
        }
    }

    #[test]
    fn ext_dimensions() {
        let q = kronecker();
        let (s1, s2) = (simple(&q, 0).unwrap(), simple(&q, 1).unwrap());
        assert_eq!(ext1(&q, &s1, &s2).unwrap().dim(), 2);
        let r = regular(&q, 2);
        assert_eq!(ext1(&q, &r, &r).unwrap().dim(), 1);
        for v in 0..2 {
            let p = projective(&q, v).unwrap();
            for n in [&s1, &s2, &r] {
                assert_eq!(ext1(&q, &p, n).unwrap().dim(), 0);
            }
        }
    }

    #[test]
    fn presentations() {
        let q = kronecker();
        assert!(direct_sum(&q, &[]).unwrap().is_zero());
        let p = projective(&q, 0).unwrap();
        let pres = projective_presentation(&q, &p).unwrap();
        assert!(pres.p1.is_empty());
        assert_eq!(pres.p0, vec![0]);
        assert!(pres.surjection.is_iso());

        let s1 = simple(&q, 0).unwrap();
        let pres = projective_presentation(&q, &s1).unwrap();
        assert_eq!(pres.p1, vec![1, 1]);
        assert_eq!(pres.p0, vec![0]);
        let comp = pres.surjection.after(&pres.inclusion.to_rep_map(&q));
        assert!(comp.is_zero());
        // injective inclusion
        let inc = pres.inclusion.to_rep_map(&q);
        for (v, c) in inc.comps().iter().enumerate() {
            assert_eq!(c.rank(), inc.source().dims()[v]);
        }
    }

    #[test]
    fn iso_verdicts() {
        let q = kronecker();
        let r = regular(&q, 1);
        assert!(matches!(is_iso_module(&q, &r, &r, 7).unwrap(), IsoVerdict::Yes(f) if f == RepMap::identity(&r)));
        let (s1, s2) = (simple(&q, 0).unwrap(), simple(&q, 1).unwrap());
        assert!(is_iso_module(&q, &s1, &s2, 7).unwrap().is_no());
        assert!(is_iso_module(&q, &regular(&q, 0), &r, 7).unwrap().is_no());
        // a change of basis of P(1)
        let p = projective(&q, 0).unwrap();
        let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        let p_swapped = Rep::new(&q, vec![1, 2], vec![&swap * p.mat(0), &swap * p.mat(1)]).unwrap();
        match is_iso_module(&q, &p, &p_swapped, 7).unwrap() {
            IsoVerdict::Yes(f) => {
                assert!(f.check_against(&q).is_ok());
                assert!(f.inverse().is_some());
            }
            other => panic!("expected an isomorphism, got {other:?}"),
        }
    }

    fn rep_strategy() -> impl Strategy<Value = (Vec<usize>, Vec<i64>)> {
        (0usize..3, 0usize..3)
            .prop_flat_map(|(d0, d1)| (Just(vec![d0, d1]), prop::collection::vec(-2i64..=2, 2 * d0 * d1)))
    }

    fn build(q: &Quiver, (dims, entries): (Vec<usize>, Vec<i64>)) -> Rep {
        let (d0, d1) = (dims[0], dims[1]);
        let mut it = entries.into_iter();
        let mats = (0..2)
            .map(|_| {
                let mut m = Matrix::zeros(d1, d0);
                for i in 0..d1 {
                    for j in 0..d0 {
                        m.set(i, j, Scalar::from_int(it.next().unwrap()));
                    }
                }
                m
            })
            .collect();
        Rep::new(q, dims, mats).unwrap()
    }

    proptest! {
        #[test]
        fn euler_form_identity(a in rep_strategy(), b in rep_strategy()) {
            let q = kronecker();
            let (m, n) = (build(&q, a), build(&q, b));
            let hom = hom_module(&q, &m, &n).unwrap().len() as i64;
            let ext = ext1(&q, &m, &n).unwrap().dim() as i64;
            prop_assert_eq!(hom - ext, q.euler_form(&m.dim_vector(), &n.dim_vector()));
        }

        #[test]
        fn presentation_is_exact(a in rep_strategy()) {
            let q = kronecker();
            let m = build(&q, a);
            let pres = projective_presentation(&q, &m).unwrap();
            let inc = pres.inclusion.to_rep_map(&q);
            prop_assert!(pres.surjection.after(&inc).is_zero());
            for v in 0..2 {
                let s = pres.surjection.comp(v);
                prop_assert_eq!(s.rank(), m.dims()[v]);
                prop_assert_eq!(inc.comp(v).rank(), inc.source().dims()[v]);
                prop_assert_eq!(inc.comp(v).rank() + s.rank(), s.cols());
            }
        }
    }
}
