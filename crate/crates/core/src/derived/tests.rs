use std::collections::BTreeMap;

use super::*;
use crate::exactlin::{Matrix, Scalar};
use crate::quiver::{injective, projective, simple, ProjMap};

fn kronecker() -> Quiver {
    Quiver::from_indices(2, &[("a", 0, 1), ("b", 0, 1)]).unwrap()
}

fn regular(q: &Quiver, a: i64, b: i64) -> DObject {
    let m = Rep::new(
        q,
        vec![1, 1],
        vec![Matrix::from_ints(&[&[a]]), Matrix::from_ints(&[&[b]])],
    )
    .unwrap();
    DObject::module(q, m).unwrap()
}

fn obj(q: &Quiver, m: Rep) -> DObject {
    DObject::module(q, m).unwrap()
}

/// `P(2) -> P(1)` along `x·a + y·b`, as a chain map between stalk complexes.
fn kronecker_map(q: &Quiver, x: i64, y: i64) -> ChainMap {
    let src = ProjComplex::concentrated(vec![1], 0);
    let tgt = ProjComplex::concentrated(vec![0], 0);
    let mut f = ProjMap::zero(q, &[1], &[0]);
    *f.block_mut(0, 0) = vec![Scalar::from_int(x), Scalar::from_int(y)];
    ChainMap::new(q, src, tgt, BTreeMap::from([(0, f)])).unwrap()
}

fn probes(q: &Quiver) -> Vec<DObject> {
    let p1 = obj(q, projective(q, 0).unwrap());
    let p2 = obj(q, projective(q, 1).unwrap());
    let i1 = obj(q, injective(q, 0).unwrap());
    let i2 = obj(q, injective(q, 1).unwrap());
    let s1 = obj(q, simple(q, 0).unwrap());
    let s2 = obj(q, simple(q, 1).unwrap());
    let sum = DObject::sum(q, &[&p1, &regular(q, 1, 2), &s1.shift(1)]).unwrap();
    vec![
        p1.clone(),
        p2,
        i1,
        i2,
        s1,
        s2.clone(),
        regular(q, 1, 0),
        regular(q, 1, 1),
        regular(q, 0, 1),
        regular(q, 1, 2),
        p1.shift(1),
        s2.shift(-2),
        sum,
    ]
}

#[test]
fn resolutions() {
    let q = kronecker();
    let p = to_proj(&q, &obj(&q, projective(&q, 0).unwrap())).unwrap();
    assert_eq!(p.terms(), &BTreeMap::from([(0, vec![0])]));
    let s = to_proj(&q, &obj(&q, simple(&q, 0).unwrap())).unwrap();
    assert_eq!(s.terms(), &BTreeMap::from([(-1, vec![1, 1]), (0, vec![0])]));
    assert!(to_proj(&q, &DObject::zero()).unwrap().is_zero());
}

#[test]
fn homology_examples() {
    let q = kronecker();
    let s1 = obj(&q, simple(&q, 0).unwrap());
    let back = to_proj(&q, &s1).unwrap().homology(&q).unwrap();
    assert!(is_iso(&q, &back, &s1, 1).unwrap().is_yes());

    let id = ChainMap::identity(&q, &ProjComplex::concentrated(vec![0], 0));
    assert!(cone(&q, &id).complex.homology(&q).unwrap().is_zero());

    let c = cone(&q, &kronecker_map(&q, 2, -1)).complex.homology(&q).unwrap();
    assert_eq!(c.dim_vectors(), BTreeMap::from([(0, vec![1, 1])]));
    assert!(is_iso(&q, &c, &regular(&q, 1, 2), 1).unwrap().is_yes());
    let c = cone(&q, &kronecker_map(&q, 1, 0)).complex.homology(&q).unwrap();
    assert!(is_iso(&q, &c, &regular(&q, 0, 1), 1).unwrap().is_yes());
}

#[test]
fn cone_of_zero_is_sum() {
    let q = kronecker();
    let x = to_proj(&q, &regular(&q, 1, 1)).unwrap();
    let y = to_proj(&q, &obj(&q, simple(&q, 1).unwrap())).unwrap();
    let c = cone(&q, &ChainMap::zero(&x, &y)).complex.homology(&q).unwrap();
    let expect = DObject::sum(&q, &[&y.homology(&q).unwrap(), &regular(&q, 1, 1).shift(1)]).unwrap();
    assert!(is_iso(&q, &c, &expect, 1).unwrap().is_yes());
}

#[test]
fn graded_hom_examples() {
    let q = kronecker();
    let r = regular(&q, 1, 3);
    let h = hom_graded(&q, &r, &r).unwrap();
    assert_eq!(h.dims(), BTreeMap::from([(0, 1), (1, 1)]));
    let h3 = hom_graded(&q, &r, &r.shift(3)).unwrap();
    assert_eq!(h3.dims(), BTreeMap::from([(-3, 1), (-2, 1)]));
    let hs = hom_graded(&q, &r.shift(1), &r).unwrap();
    assert_eq!(hs.dims(), BTreeMap::from([(1, 1), (2, 1)]));
    assert!(hom_graded(&q, &regular(&q, 1, 0), &regular(&q, 1, 1))
        .unwrap()
        .is_zero());
    assert_eq!(r.shift(3).shift(-3), r);
    assert_eq!(r.shift(0), r);
}

#[test]
fn graded_hom_agrees_with_modules() {
    let q = kronecker();
    let ms: Vec<Rep> = probes(&q)
        .into_iter()
        .filter(|x| x.terms().len() == 1 && x.terms()[0].1 == 0)
        .map(|x| x.terms()[0].0.clone())
        .collect();
    for m in &ms {
        for n in &ms {
            let h = hom_graded(&q, &obj(&q, m.clone()), &obj(&q, n.clone())).unwrap();
            let mut want = BTreeMap::new();
            let h0 = crate::quiver::hom_module(&q, m, n).unwrap().len();
            let e1 = crate::quiver::ext1(&q, m, n).unwrap().dim();
            if h0 > 0 {
                want.insert(0, h0);
            }
            if e1 > 0 {
                want.insert(1, e1);
            }
            assert_eq!(h.dims(), want);
        }
    }
}

#[test]
fn serre_examples() {
    let q = kronecker();
    for v in 0..2 {
        let p = obj(&q, projective(&q, v).unwrap());
        let i = obj(&q, injective(&q, v).unwrap());
        assert!(is_iso(&q, &serre(&q, &p).unwrap(), &i, 1).unwrap().is_yes());
        assert!(is_iso(&q, &serre_inverse(&q, &i).unwrap(), &p, 1).unwrap().is_yes());
    }
    let r = regular(&q, 1, 5);
    assert!(is_iso(&q, &serre(&q, &r).unwrap(), &r.shift(1), 1).unwrap().is_yes());
    let x = probes(&q).pop().unwrap();
    let sx = serre(&q, &x).unwrap();
    assert!(is_iso(&q, &serre(&q, &x.shift(2)).unwrap(), &sx.shift(2), 1)
        .unwrap()
        .is_yes());
    assert!(is_iso(&q, &serre_inverse(&q, &sx).unwrap(), &x, 1).unwrap().is_yes());
    assert!(is_iso(&q, &x, &x.shift(1), 1).unwrap().is_no());
}

#[test]
fn serre_duality_on_probes() {
    let q = kronecker();
    let ps = probes(&q);
    assert!(ps.len() >= 12);
    for x in &ps {
        let sx = serre(&q, x).unwrap();
        for y in &ps {
            let lhs = hom_graded(&q, x, y).unwrap().dims();
            let rhs = hom_graded(&q, y, &sx).unwrap().dims();
            let flipped: BTreeMap<i64, usize> = rhs.into_iter().map(|(n, d)| (-n, d)).collect();
            assert_eq!(lhs, flipped);
        }
    }
}

#[test]
fn euler_pairings() {
    let q = kronecker();
    let (s1, s2) = (obj(&q, simple(&q, 0).unwrap()), obj(&q, simple(&q, 1).unwrap()));
    assert_eq!(euler_pairing(&q, &s1, &s2).unwrap(), -2);
    for v in 0..2 {
        let p = obj(&q, projective(&q, v).unwrap());
        for w in 0..2 {
            let s = obj(&q, simple(&q, w).unwrap());
            assert_eq!(euler_pairing(&q, &p, &s).unwrap(), i64::from(v == w));
        }
    }
    let ps = probes(&q);
    for x in &ps {
        for y in &ps {
            let e = euler_pairing(&q, x, y).unwrap();
            assert_eq!(e, q.euler_form(&x.class(&q), &y.class(&q)));
            let z = &ps[7];
            let yz = DObject::sum(&q, &[y, z]).unwrap();
            assert_eq!(euler_pairing(&q, x, &yz).unwrap(), e + euler_pairing(&q, x, z).unwrap());
        }
    }
}

#[test]
fn triangles_have_exact_sequences() {
    let q = kronecker();
    let ps: Vec<ProjComplex> = probes(&q).iter().map(|x| to_proj(&q, x).unwrap()).collect();
    // the module maps P(2) -> P(1) and S(2) -> R, and an identity
    let r = to_proj(&q, &regular(&q, 1, 1)).unwrap();
    let s2 = to_proj(&q, &obj(&q, simple(&q, 1).unwrap())).unwrap();
    let h = hom_complexes(&q, &s2, &r).unwrap();
    assert_eq!(h.dim(0), 1);
    let maps = vec![kronecker_map(&q, 1, 1), h.rep(&q, 0, 0), ChainMap::identity(&q, &r)];
    for f in &maps {
        f.check(&q).unwrap();
        let t = Triangle::from_map(&q, f);
        t.z.check(&q).unwrap();
        t.g.check(&q).unwrap();
        t.h.check(&q).unwrap();
        for w in &ps {
            les_check(&q, &t, w).unwrap().unwrap();
            les_check(&q, &t.rotate(), w).unwrap().unwrap();
        }
    }
}
