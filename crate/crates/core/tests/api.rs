use proptest::prelude::*;
use sphere_forge_core::derived::{euler_pairing, hom_graded, is_iso, serre, serre_inverse, DObject};
use sphere_forge_core::exactlin::{Matrix, Scalar};
use sphere_forge_core::nbhd::{detect, Kind};
use sphere_forge_core::quiver::{projective, simple, Quiver, Rep};
use sphere_forge_core::sodtwist::{left_mutation, right_mutation, twist_object, validate_exc_sequence};

fn kronecker() -> Quiver {
    Quiver::from_indices(2, &[("a", 0, 1), ("b", 0, 1)]).unwrap()
}

fn a3() -> Quiver {
    Quiver::from_indices(3, &[("a", 0, 1), ("b", 1, 2)]).unwrap()
}

fn mat(rows: usize, cols: usize, xs: &[i64]) -> Matrix {
    let entries = (0..rows)
        .map(|i| (0..cols).map(|j| Scalar::from_int(xs[i * cols + j])).collect())
        .collect();
    Matrix::from_rows_with_cols(entries, cols).unwrap()
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

fn arb_module() -> impl Strategy<Value = (usize, usize, Vec<i64>, Vec<i64>, i64)> {
    (0usize..3, 0usize..3).prop_flat_map(|(d0, d1)| {
        let n = d0 * d1;
        (
            Just(d0),
            Just(d1),
            prop::collection::vec(-2i64..=2, n),
            prop::collection::vec(-2i64..=2, n),
            -1i64..=1,
        )
    })
}

fn build(q: &Quiver, (d0, d1, a, b, s): &(usize, usize, Vec<i64>, Vec<i64>, i64)) -> DObject {
    let r = Rep::new(q, vec![*d0, *d1], vec![mat(*d1, *d0, a), mat(*d1, *d0, b)]).unwrap();
    DObject::module(q, r).unwrap().shift(*s)
}

#[test]
fn a3_projectives_form_a_full_sequence() {
    let q = a3();
    let ps: Vec<DObject> = (0..3)
        .rev()
        .map(|v| DObject::module(&q, projective(&q, v).unwrap()).unwrap())
        .collect();
    let emb = validate_exc_sequence(&q, &ps).unwrap();
    for v in 0..3 {
        let s = DObject::module(&q, simple(&q, v).unwrap()).unwrap();
        assert!(emb.p_operator(&q, &s).unwrap().is_zero());
    }
}

#[test]
fn regular_modules_are_spherical_of_degree_one() {
    let q = kronecker();
    for (a, b) in [(1, 0), (0, 1), (1, 1), (1, -3)] {
        let r = regular(&q, a, b);
        let prof = detect(&q, &r, 5).unwrap();
        assert_eq!(prof.kind, Kind::Spherelike(1));
        assert_eq!(prof.cy_degree, Some(1));
        assert!(is_iso(&q, &twist_object(&q, &r, &r).unwrap(), &r, 5).unwrap().is_yes());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn serre_duality_dimensions(x in arb_module(), y in arb_module()) {
        let q = kronecker();
        let (x, y) = (build(&q, &x), build(&q, &y));
        let lhs = hom_graded(&q, &x, &y).unwrap();
        let rhs = hom_graded(&q, &y, &serre(&q, &x).unwrap()).unwrap();
        for (n, d) in lhs.dims() {
            prop_assert_eq!(rhs.dim(-n), d);
        }
        prop_assert_eq!(lhs.total_dim(), rhs.total_dim());
    }

    #[test]
    fn serre_inverse_undoes_serre(x in arb_module()) {
        let q = kronecker();
        let x = build(&q, &x);
        let back = serre_inverse(&q, &serre(&q, &x).unwrap()).unwrap();
        prop_assert!(is_iso(&q, &back, &x, 3).unwrap().is_yes());
    }

    #[test]
    fn euler_pairing_is_additive(x in arb_module(), y in arb_module(), z in arb_module()) {
        let q = kronecker();
        let (x, y, z) = (build(&q, &x), build(&q, &y), build(&q, &z));
        let xy = DObject::sum(&q, &[&x, &y]).unwrap();
        let lhs = euler_pairing(&q, &xy, &z).unwrap();
        prop_assert_eq!(lhs, euler_pairing(&q, &x, &z).unwrap() + euler_pairing(&q, &y, &z).unwrap());
        prop_assert_eq!(euler_pairing(&q, &x.shift(1), &z).unwrap(), -euler_pairing(&q, &x, &z).unwrap());
    }

    #[test]
    fn mutations_land_in_orthogonals(x in arb_module(), v in 0usize..2) {
        let q = kronecker();
        let x = build(&q, &x);
        let e = DObject::module(&q, projective(&q, v).unwrap()).unwrap();
        let l = left_mutation(&q, &e, &x).unwrap();
        let r = right_mutation(&q, &e, &x).unwrap();
        prop_assert!(hom_graded(&q, &e, &l).unwrap().is_zero());
        prop_assert!(hom_graded(&q, &r, &e).unwrap().is_zero());
        prop_assert!(is_iso(&q, &right_mutation(&q, &e, &l).unwrap(), &r, 7).unwrap().is_yes());
        prop_assert!(is_iso(&q, &left_mutation(&q, &e, &r).unwrap(), &l, 7).unwrap().is_yes());
    }
}
