use super::*;
use crate::derived::{hom_graded, is_iso, serre};
use crate::exactlin::Matrix;
use crate::quiver::{injective, projective, simple, Rep};

fn kronecker() -> Quiver {
    Quiver::from_indices(2, &[("a", 0, 1), ("b", 0, 1)]).unwrap()
}

fn tacked() -> Quiver {
    Quiver::from_indices(3, &[("a", 0, 1), ("b", 0, 1), ("c", 1, 2)]).unwrap()
}

fn obj(q: &Quiver, m: Rep) -> DObject {
    DObject::module(q, m).unwrap()
}

fn regular(q: &Quiver, a: i64, b: i64) -> DObject {
    let m = Rep::new(
        q,
        vec![1, 1],
        vec![Matrix::from_ints(&[&[a]]), Matrix::from_ints(&[&[b]])],
    )
    .unwrap();
    obj(q, m)
}

fn k2_probes(q: &Quiver) -> Vec<DObject> {
    let p1 = obj(q, projective(q, 0).unwrap());
    let s1 = obj(q, simple(q, 0).unwrap());
    vec![
        p1.clone(),
        obj(q, projective(q, 1).unwrap()),
        obj(q, injective(q, 0).unwrap()),
        obj(q, injective(q, 1).unwrap()),
        s1.clone(),
        regular(q, 1, 0),
        regular(q, 0, 1),
        regular(q, 1, 2),
        p1.shift(1),
        DObject::sum(q, &[&s1, &regular(q, 1, 1).shift(-1)]).unwrap(),
    ]
}

fn iso(q: &Quiver, x: &DObject, y: &DObject) -> bool {
    is_iso(q, x, y, 11).unwrap().is_yes()
}

#[test]
fn validation() {
    let q = kronecker();
    let (p1, p2) = (obj(&q, projective(&q, 0).unwrap()), obj(&q, projective(&q, 1).unwrap()));
    assert!(validate_exc_sequence(&q, std::slice::from_ref(&p1)).is_ok());
    assert!(validate_exc_sequence(&q, &[p2.clone(), p1.clone()]).is_ok());
    assert!(matches!(
        validate_exc_sequence(&q, &[p1.clone(), p2.clone()]),
        Err(SodError::NotSemiorthogonal {
            later: 1,
            earlier: 0,
            ..
        })
    ));
    let s1 = obj(&q, simple(&q, 0).unwrap());
    assert!(validate_exc_sequence(&q, &[s1.clone(), s1]).is_err());
    assert!(matches!(
        validate_exc_sequence(&q, &[regular(&q, 1, 1)]),
        Err(SodError::NotExceptional { index: 0, .. })
    ));
}

#[test]
fn mutation_basics() {
    let q = kronecker();
    let p1 = obj(&q, projective(&q, 0).unwrap());
    let p2 = obj(&q, projective(&q, 1).unwrap());
    assert!(left_mutation(&q, &p1, &p1).unwrap().is_zero());
    assert!(right_mutation(&q, &p2, &p2).unwrap().is_zero());
    // Hom^*(P(1), P(2)) = 0
    assert_eq!(left_mutation(&q, &p1, &p2).unwrap(), p2);
    // L_{P(2)} P(1) is the cone of P(2)^2 -> P(1), i.e. S(1)
    let s1 = obj(&q, simple(&q, 0).unwrap());
    assert!(iso(&q, &left_mutation(&q, &p2, &p1).unwrap(), &s1));
}

#[test]
fn mutation_round_trips() {
    let q = kronecker();
    let es = [
        obj(&q, projective(&q, 0).unwrap()),
        obj(&q, projective(&q, 1).unwrap()),
        obj(&q, simple(&q, 0).unwrap()),
    ];
    let mut identities = 0;
    for e in &es {
        for x in k2_probes(&q) {
            let l = left_mutation(&q, e, &x).unwrap();
            let r = right_mutation(&q, e, &x).unwrap();
            let rl = right_mutation(&q, e, &l).unwrap();
            let lr = left_mutation(&q, e, &r).unwrap();
            assert!(iso(&q, &rl, &r), "R L x != R x for {x:?}");
            assert!(iso(&q, &lr, &l), "L R x != L x for {x:?}");
            if hom_graded(&q, &x, e).unwrap().is_zero() {
                assert!(iso(&q, &rl, &x));
                identities += 1;
            }
            if hom_graded(&q, e, &x).unwrap().is_zero() {
                assert!(iso(&q, &lr, &x));
                identities += 1;
            }
        }
    }
    assert_eq!(identities, 7);
}

#[test]
fn twist_of_spherical_and_exceptional() {
    let q = kronecker();
    for (a, b) in [(1, 0), (0, 1), (1, 1), (1, 2)] {
        let r = regular(&q, a, b);
        assert!(iso(&q, &twist_object(&q, &r, &r).unwrap(), &r));
    }
    let p1 = obj(&q, projective(&q, 0).unwrap());
    assert!(twist_object(&q, &p1, &p1).unwrap().is_zero());
    let r0 = regular(&q, 1, 0);
    let r1 = regular(&q, 1, 1);
    assert_eq!(twist_object(&q, &r0, &r1).unwrap(), r1);
}

#[test]
fn full_sequence_projections() {
    let q = kronecker();
    let (p1, p2) = (obj(&q, projective(&q, 0).unwrap()), obj(&q, projective(&q, 1).unwrap()));
    let emb = validate_exc_sequence(&q, &[p2.clone(), p1.clone()]).unwrap();
    for b in k2_probes(&q) {
        let tri = emb.sod_project(&q, &b).unwrap().objects(&q).unwrap();
        assert!(tri.t.is_zero());
        assert!(tri.tp.is_zero());
        assert!(iso(&q, &tri.fr, &b));
        assert!(iso(&q, &tri.fl, &b));
        assert!(emb.p_operator(&q, &b).unwrap().is_zero());
        assert!(iso(&q, &emb.serre_sub(&q, &b).unwrap(), &serre(&q, &b).unwrap()));
    }
}

#[test]
fn singleton_projections() {
    let q = kronecker();
    let p1 = obj(&q, projective(&q, 0).unwrap());
    let emb = validate_exc_sequence(&q, std::slice::from_ref(&p1)).unwrap();
    let tri = emb.sod_project(&q, &p1).unwrap().objects(&q).unwrap();
    assert!(tri.t.is_zero());
    assert!(iso(&q, &tri.fr, &p1));
    assert!(iso(&q, &emb.serre_sub(&q, &p1).unwrap(), &p1));
    assert!(emb.p_operator(&q, &p1).unwrap().is_zero());
    // Hom^*(P(1), S(2)) = 0
    let s2 = obj(&q, simple(&q, 1).unwrap());
    let tri = emb.sod_project(&q, &s2).unwrap().objects(&q).unwrap();
    assert!(tri.fr.is_zero());
    assert!(iso(&q, &tri.t, &s2));
    assert!(matches!(emb.serre_sub(&q, &s2), Err(SodError::NotInImage)));
    for b in k2_probes(&q) {
        let t = emb.sod_project(&q, &b).unwrap().objects(&q).unwrap();
        assert!(iso(&q, &emb.fr(&q, &t.fr).unwrap(), &t.fr));
        assert!(iso(&q, &emb.left_twist(&q, &t.t).unwrap(), &t.t));
    }
}

/// `E_1, E_2` for the quiver `1 ⇉ 2 -> 3`.
fn tacked_embedding(q: &Quiver) -> ExcEmbedding {
    let e1 = obj(q, projective(q, 1).unwrap());
    let e2 = obj(q, projective(q, 0).unwrap());
    validate_exc_sequence(q, &[e1, e2]).unwrap()
}

#[test]
fn tacked_embedding_from_mutation() {
    let q = tacked();
    let s3 = obj(&q, simple(&q, 2).unwrap());
    // zero-extended Kronecker projectives
    let ext_p2 = obj(&q, simple(&q, 1).unwrap());
    let ext_p1 = Rep::new(
        &q,
        vec![1, 2, 0],
        vec![
            Matrix::from_ints(&[&[1], &[0]]),
            Matrix::from_ints(&[&[0], &[1]]),
            Matrix::zeros(0, 2),
        ],
    )
    .unwrap();
    let e1 = right_mutation(&q, &s3, &ext_p2).unwrap();
    let e2 = right_mutation(&q, &s3, &obj(&q, ext_p1)).unwrap();
    assert!(iso(&q, &e1, &obj(&q, projective(&q, 1).unwrap())));
    assert!(iso(&q, &e2, &obj(&q, projective(&q, 0).unwrap())));
    assert!(validate_exc_sequence(&q, &[s3, e1, e2]).is_ok());
}

#[test]
fn tacked_removed_simple_has_nonzero_p() {
    let q = tacked();
    let emb = tacked_embedding(&q);
    let s3 = obj(&q, simple(&q, 2).unwrap());
    let p = emb.p_operator(&q, &s3).unwrap();
    assert!(!p.is_zero());
    for e in emb.sequence() {
        assert!(emb.p_operator(&q, e).unwrap().is_zero());
    }
}
