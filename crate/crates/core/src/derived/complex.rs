//! Bounded complexes of projectives, chain maps, cones, and homology.
//!
//! Differentials raise degree. `C[m]` has terms `C^{k+m}` and differential
//! `(-1)^m d`; shifting a chain map needs no sign. The cone of `f: X -> Y` is
//! `Y^n ⊕ X^{n+1}` with `d(y, x) = (d y + f x, -d x)`, summands of `Y` first.

use std::collections::BTreeMap;

use crate::exactlin::{Coordinates, Matrix, Scalar, Vector};
use crate::quiver::{nakayama, nakayama_map, proj_rep, ProjMap, Quiver, Rep, RepMap};

use super::{DObject, DerivedError};

fn sign(m: i64) -> Scalar {
    if m.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    }
}

/// A bounded complex whose degree-`n` term is `⊕ P(terms[n][i])`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ProjComplex {
    terms: BTreeMap<i64, Vec<usize>>,
    /// `diffs[n]: terms[n] -> terms[n+1]`; absent means zero
    diffs: BTreeMap<i64, ProjMap>,
}

impl ProjComplex {
    /// Validates shapes and `d ∘ d = 0`.
    pub fn new(
        q: &Quiver,
        terms: BTreeMap<i64, Vec<usize>>,
        diffs: BTreeMap<i64, ProjMap>,
    ) -> Result<ProjComplex, DerivedError> {
        let c = Self::from_parts_unchecked(terms, diffs);
        c.check(q)?;
        Ok(c)
    }

    fn from_parts_unchecked(mut terms: BTreeMap<i64, Vec<usize>>, mut diffs: BTreeMap<i64, ProjMap>) -> ProjComplex {
        terms.retain(|_, t| !t.is_empty());
        diffs.retain(|n, d| terms.contains_key(n) && terms.contains_key(&(n + 1)) && !d.is_zero());
        ProjComplex { terms, diffs }
    }

    pub fn zero() -> ProjComplex {
        ProjComplex::default()
    }

    /// A single term in degree `deg` with no differential.
    pub fn concentrated(sum: Vec<usize>, deg: i64) -> ProjComplex {
        Self::from_parts_unchecked(BTreeMap::from([(deg, sum)]), BTreeMap::new())
    }

    pub fn check(&self, q: &Quiver) -> Result<(), DerivedError> {
        for (&n, d) in &self.diffs {
            if d.source() != self.term(n) || d.target() != self.term(n + 1) {
                return Err(DerivedError::Shape(format!("differential in degree {n}")));
            }
            d.check(q)?;
            if let Some(next) = self.diffs.get(&(n + 1)) {
                if !next.after(q, d).is_zero() {
                    return Err(DerivedError::NotAComplex(n));
                }
            }
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(&self, n: i64) -> &[usize] {
        self.terms.get(&n).map_or(&[], Vec::as_slice)
    }

    pub fn terms(&self) -> &BTreeMap<i64, Vec<usize>> {
        &self.terms
    }

    pub fn diff(&self, q: &Quiver, n: i64) -> ProjMap {
        match self.diffs.get(&n) {
            Some(d) => d.clone(),
            None => ProjMap::zero(q, self.term(n), self.term(n + 1)),
        }
    }

    pub fn diff_ref(&self, n: i64) -> Option<&ProjMap> {
        self.diffs.get(&n)
    }

    /// Smallest and largest nonzero degree.
    pub fn range(&self) -> Option<(i64, i64)> {
        Some((*self.terms.keys().next()?, *self.terms.keys().next_back()?))
    }

    pub fn num_summands(&self) -> usize {
        self.terms.values().map(Vec::len).sum()
    }

    pub fn shift(&self, m: i64) -> ProjComplex {
        let s = sign(m);
        ProjComplex {
            terms: self.terms.iter().map(|(&n, t)| (n - m, t.clone())).collect(),
            diffs: self.diffs.iter().map(|(&n, d)| (n - m, d.scale(&s))).collect(),
        }
    }

    pub fn direct_sum(q: &Quiver, parts: &[&ProjComplex]) -> ProjComplex {
        let mut terms: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for p in parts {
            for (&n, t) in &p.terms {
                terms.entry(n).or_default().extend(t);
            }
        }
        let mut diffs = BTreeMap::new();
        for &n in terms.keys() {
            if !terms.contains_key(&(n + 1)) {
                continue;
            }
            let mut d = ProjMap::zero(q, &terms[&n], &terms[&(n + 1)]);
            let (mut i0, mut j0) = (0, 0);
            for p in parts {
                if let Some(pd) = p.diffs.get(&n) {
                    d.set_block_map(j0, i0, pd);
                }
                i0 += p.term(n).len();
                j0 += p.term(n + 1).len();
            }
            diffs.insert(n, d);
        }
        Self::from_parts_unchecked(terms, diffs)
    }

    /// The complex of concrete representations.
    pub fn concretize(&self, q: &Quiver) -> RepComplex {
        RepComplex {
            terms: self.terms.iter().map(|(&n, t)| (n, proj_rep(q, t))).collect(),
            diffs: self.diffs.iter().map(|(&n, d)| (n, d.to_rep_map(q))).collect(),
        }
    }

    /// Termwise Nakayama functor: a complex of injectives.
    pub fn nakayama(&self, q: &Quiver) -> RepComplex {
        RepComplex {
            terms: self.terms.iter().map(|(&n, t)| (n, nakayama(q, t))).collect(),
            diffs: self.diffs.iter().map(|(&n, d)| (n, nakayama_map(q, d))).collect(),
        }
    }

    pub fn homology(&self, q: &Quiver) -> Result<DObject, DerivedError> {
        self.concretize(q).homology(q)
    }
}

/// A degree-0 chain map between complexes of projectives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: ProjComplex,
    target: ProjComplex,
    comps: BTreeMap<i64, ProjMap>,
}

impl ChainMap {
    /// Validates shapes and commutation with the differentials.
    pub fn new(
        q: &Quiver,
        source: ProjComplex,
        target: ProjComplex,
        comps: BTreeMap<i64, ProjMap>,
    ) -> Result<ChainMap, DerivedError> {
        let f = Self::from_parts_unchecked(source, target, comps);
        f.check(q)?;
        Ok(f)
    }

    pub(crate) fn from_parts_unchecked(
        source: ProjComplex,
        target: ProjComplex,
        mut comps: BTreeMap<i64, ProjMap>,
    ) -> ChainMap {
        comps.retain(|n, c| !source.term(*n).is_empty() && !target.term(*n).is_empty() && !c.is_zero());
        ChainMap { source, target, comps }
    }

    pub fn zero(source: &ProjComplex, target: &ProjComplex) -> ChainMap {
        ChainMap {
            source: source.clone(),
            target: target.clone(),
            comps: BTreeMap::new(),
        }
    }

    pub fn identity(q: &Quiver, c: &ProjComplex) -> ChainMap {
        let comps = c.terms.iter().map(|(&n, t)| (n, ProjMap::identity(q, t))).collect();
        ChainMap {
            source: c.clone(),
            target: c.clone(),
            comps,
        }
    }

    pub fn source(&self) -> &ProjComplex {
        &self.source
    }

    pub fn target(&self) -> &ProjComplex {
        &self.target
    }

    pub fn comp(&self, q: &Quiver, n: i64) -> ProjMap {
        match self.comps.get(&n) {
            Some(c) => c.clone(),
            None => ProjMap::zero(q, self.source.term(n), self.target.term(n)),
        }
    }

    pub fn comp_ref(&self, n: i64) -> Option<&ProjMap> {
        self.comps.get(&n)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn check(&self, q: &Quiver) -> Result<(), DerivedError> {
        for (&n, c) in &self.comps {
            if c.source() != self.source.term(n) || c.target() != self.target.term(n) {
                return Err(DerivedError::Shape(format!("chain map component in degree {n}")));
            }
            c.check(q)?;
        }
        let degrees: std::collections::BTreeSet<i64> = self
            .source
            .terms
            .keys()
            .chain(self.target.terms.keys())
            .copied()
            .collect();
        for n in degrees {
            let lhs = self.target.diff(q, n).after(q, &self.comp(q, n));
            let rhs = self.comp(q, n + 1).after(q, &self.source.diff(q, n));
            if lhs != rhs {
                return Err(DerivedError::NotAChainMap(n));
            }
        }
        Ok(())
    }

    /// `self ∘ f`
    pub fn after(&self, q: &Quiver, f: &ChainMap) -> ChainMap {
        let comps = f
            .comps
            .iter()
            .filter_map(|(&n, c)| self.comps.get(&n).map(|g| (n, g.after(q, c))))
            .collect();
        Self::from_parts_unchecked(f.source.clone(), self.target.clone(), comps)
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        let mut comps = self.comps.clone();
        for (&n, c) in &other.comps {
            let sum = match comps.get(&n) {
                Some(mine) => mine.add(c),
                None => c.clone(),
            };
            comps.insert(n, sum);
        }
        Self::from_parts_unchecked(self.source.clone(), self.target.clone(), comps)
    }

    pub fn scale(&self, s: &Scalar) -> ChainMap {
        let comps = self.comps.iter().map(|(&n, c)| (n, c.scale(s))).collect();
        Self::from_parts_unchecked(self.source.clone(), self.target.clone(), comps)
    }

    pub fn shift(&self, m: i64) -> ChainMap {
        ChainMap {
            source: self.source.shift(m),
            target: self.target.shift(m),
            comps: self.comps.iter().map(|(&n, c)| (n - m, c.clone())).collect(),
        }
    }

    /// The map `⊕ source(f_i) -> target` restricting to `f_i` on summand `i`.
    pub fn from_columns(q: &Quiver, maps: &[ChainMap], target: &ProjComplex) -> ChainMap {
        let sources: Vec<&ProjComplex> = maps.iter().map(|f| &f.source).collect();
        let source = ProjComplex::direct_sum(q, &sources);
        let mut comps = BTreeMap::new();
        for (&n, t) in &source.terms {
            let mut c = ProjMap::zero(q, t, target.term(n));
            let mut i0 = 0;
            for f in maps {
                debug_assert_eq!(&f.target, target);
                if let Some(fc) = f.comps.get(&n) {
                    c.set_block_map(0, i0, fc);
                }
                i0 += f.source.term(n).len();
            }
            comps.insert(n, c);
        }
        Self::from_parts_unchecked(source, target.clone(), comps)
    }

    /// The map `source -> ⊕ target(f_i)` with components `f_i`.
    pub fn from_rows(q: &Quiver, source: &ProjComplex, maps: &[ChainMap]) -> ChainMap {
        let targets: Vec<&ProjComplex> = maps.iter().map(|f| &f.target).collect();
        let target = ProjComplex::direct_sum(q, &targets);
        let mut comps = BTreeMap::new();
        for (&n, t) in &source.terms {
            let mut c = ProjMap::zero(q, t, target.term(n));
            let mut j0 = 0;
            for f in maps {
                debug_assert_eq!(&f.source, source);
                if let Some(fc) = f.comps.get(&n) {
                    c.set_block_map(j0, 0, fc);
                }
                j0 += f.target.term(n).len();
            }
            comps.insert(n, c);
        }
        Self::from_parts_unchecked(source.clone(), target, comps)
    }
}

/// `cone(f)` with its canonical maps `Y -> C -> X[1]`.
#[derive(Clone, Debug)]
pub struct Cone {
    pub complex: ProjComplex,
    pub inclusion: ChainMap,
    pub projection: ChainMap,
}

pub fn cone(q: &Quiver, f: &ChainMap) -> Cone {
    let (x, y) = (&f.source, &f.target);
    let x1 = x.shift(1);
    let terms: BTreeMap<i64, Vec<usize>> = {
        let mut t: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for n in y.terms.keys().chain(x1.terms.keys()) {
            t.entry(*n).or_insert_with(|| [y.term(*n), x1.term(*n)].concat());
        }
        t
    };
    let mut diffs = BTreeMap::new();
    for &n in terms.keys() {
        if !terms.contains_key(&(n + 1)) {
            continue;
        }
        let (ny, nx) = (y.term(n).len(), x1.term(n).len());
        let my = y.term(n + 1).len();
        let mut d = ProjMap::zero(q, &terms[&n], &terms[&(n + 1)]);
        if let Some(dy) = y.diffs.get(&n) {
            d.set_block_map(0, 0, dy);
        }
        if nx > 0 {
            if let Some(fc) = f.comps.get(&(n + 1)) {
                d.set_block_map(0, ny, fc);
            }
            if let Some(dx) = x1.diffs.get(&n) {
                d.set_block_map(my, ny, dx);
            }
        }
        diffs.insert(n, d);
    }
    let complex = ProjComplex::from_parts_unchecked(terms, diffs);
    let mut inc = BTreeMap::new();
    let mut proj = BTreeMap::new();
    for (&n, t) in &complex.terms {
        let ny = y.term(n).len();
        if ny > 0 {
            let mut c = ProjMap::zero(q, y.term(n), t);
            c.set_block_map(0, 0, &ProjMap::identity(q, y.term(n)));
            inc.insert(n, c);
        }
        if !x1.term(n).is_empty() {
            let mut c = ProjMap::zero(q, t, x1.term(n));
            c.set_block_map(0, ny, &ProjMap::identity(q, x1.term(n)));
            proj.insert(n, c);
        }
    }
    Cone {
        inclusion: ChainMap::from_parts_unchecked(y.clone(), complex.clone(), inc),
        projection: ChainMap::from_parts_unchecked(complex.clone(), x1, proj),
        complex,
    }
}

/// `cocone(f) = cone(f)[-1]` with its canonical map to the source of `f`.
#[derive(Clone, Debug)]
pub struct Cocone {
    pub complex: ProjComplex,
    pub projection: ChainMap,
}

pub fn cocone(q: &Quiver, f: &ChainMap) -> Cocone {
    let c = cone(q, f);
    let complex = c.complex.shift(-1);
    let comps = c.projection.comps.iter().map(|(&n, m)| (n + 1, m.clone())).collect();
    Cocone {
        projection: ChainMap::from_parts_unchecked(complex.clone(), f.source.clone(), comps),
        complex,
    }
}

/// A bounded complex of concrete representations.
#[derive(Clone, Debug)]
pub struct RepComplex {
    pub terms: BTreeMap<i64, Rep>,
    pub diffs: BTreeMap<i64, RepMap>,
}

impl RepComplex {
    /// Vertexwise `ker / im` with deterministic complements; the module
    /// `H^n` becomes the term of shift `-n`.
    pub fn homology(&self, q: &Quiver) -> Result<DObject, DerivedError> {
        let mut out = Vec::new();
        for (&n, m) in &self.terms {
            let h = subquotient(q, m, self.diffs.get(&n), self.diffs.get(&(n - 1)))?;
            if !h.is_zero() {
                out.push((h, -n));
            }
        }
        DObject::new(q, out)
    }
}

/// `ker(out) / im(inc)` as a representation.
fn subquotient(q: &Quiver, m: &Rep, out: Option<&RepMap>, inc: Option<&RepMap>) -> Result<Rep, DerivedError> {
    let nv = q.num_vertices();
    let mut kernels = Vec::with_capacity(nv);
    let mut kcoords = Vec::with_capacity(nv);
    let mut full = Vec::with_capacity(nv);
    let mut hcount = Vec::with_capacity(nv);
    for v in 0..nv {
        let d = m.dims()[v];
        let k: Vec<Vector> = match out {
            Some(f) => f.comp(v).kernel_basis(),
            None => (0..d).map(|i| crate::exactlin::unit_vector(d, i)).collect(),
        };
        let kc = Coordinates::new(d, &k)?;
        let img: Vec<Vector> = match inc {
            Some(g) => g
                .comp(v)
                .image_basis()
                .iter()
                .map(|x| kc.checked(x).ok_or(DerivedError::NotAComplex(0)))
                .collect::<Result<_, _>>()?,
            None => Vec::new(),
        };
        let img = Matrix::from_columns(k.len(), &img).image_basis();
        let comp = crate::exactlin::complement_basis(&img, k.len())?;
        hcount.push(comp.len());
        let mut basis = img;
        basis.extend(comp);
        full.push(Coordinates::new(k.len(), &basis)?);
        kernels.push(k);
        kcoords.push(kc);
    }
    let mats = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let (u, w) = (a.source, a.target);
            let skip_u = full[u].dim() - hcount[u];
            let skip_w = full[w].dim() - hcount[w];
            let cols: Vec<Vector> = (0..hcount[u])
                .map(|c| {
                    let kc = full[u].basis().column(skip_u + c);
                    let x = Matrix::from_columns(m.dims()[u], &kernels[u]).mul_vec(&kc);
                    let y = m.mat(ai).mul_vec(&x);
                    let yk = kcoords[w].checked(&y).expect("kernel is a subrepresentation");
                    full[w].of(&yk)[skip_w..].to_vec()
                })
                .collect();
            Matrix::from_columns(hcount[w], &cols)
        })
        .collect();
    Ok(Rep::new(q, hcount, mats)?)
}

/// Two-term projective resolution of `m[s]`, or of a whole object.
pub fn to_proj(q: &Quiver, x: &DObject) -> Result<ProjComplex, DerivedError> {
    let mut parts = Vec::new();
    for (m, s) in x.terms() {
        let pres = crate::quiver::projective_presentation(q, m)?;
        let deg = -s;
        let terms = BTreeMap::from([(deg - 1, pres.p1.clone()), (deg, pres.p0.clone())]);
        let diffs = BTreeMap::from([(deg - 1, pres.inclusion.clone())]);
        parts.push(ProjComplex::from_parts_unchecked(terms, diffs));
    }
    Ok(ProjComplex::direct_sum(q, &parts.iter().collect::<Vec<_>>()))
}
