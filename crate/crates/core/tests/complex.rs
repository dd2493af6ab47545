use hom_embed::cohomology::{
    cohomology, explicit_degree1_coboundary, same_class, Cochain, CochainComplex,
};
use hom_embed::deformation::{
    check_equivalence_witness, check_linear_deformation, deformations_same_class,
    infinitesimal_is_cocycle, search_witness,
};
use hom_embed::embedding::{check_et_hom, example_tensor};
use hom_embed::fixtures::{e1, e1_derivation, e1_line_tensor, e1_twisted};
use hom_embed::linalg::axpy;
use hom_embed::representation::adjoint_representation;
use hom_embed::{EmbeddingTensor, EtMorphism, ExampleKind, Matrix, Representation, Scalar, Tensor};
use proptest::prelude::*;

fn fixtures() -> Vec<EmbeddingTensor> {
    vec![
        example_tensor(&e1(), &ExampleKind::Identity).unwrap(),
        example_tensor(&e1(), &ExampleKind::Derivation(e1_derivation())).unwrap(),
        example_tensor(&e1_twisted(), &ExampleKind::Identity).unwrap(),
        e1_line_tensor(),
    ]
}

fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![-3i64..=-1, 1i64..=3]
}

/// The equivariant cochain with the given coordinates, cycled as needed.
fn cochain(cx: &CochainComplex, n: usize, coords: &[i64]) -> Cochain {
    let space = cx.space(n);
    let mut v = vec![Scalar::zero(); space.coefficient_count()];
    for k in 0..space.dim() {
        let c = Scalar::from_int(coords[k % coords.len()]);
        axpy(&mut v, &c, &space.basis_vector(k));
    }
    cx.cochain(n, Tensor::from_entries(&cx.shape(n), v).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coboundary_squares_to_zero(
        which in 0usize..4,
        coords in proptest::collection::vec(-2i64..=2, 1..12),
    ) {
        let et = &fixtures()[which];
        let cx = CochainComplex::of_tensor(et);
        let f = cochain(&cx, 1, &coords);
        let df = cx.coboundary(&f).unwrap();
        prop_assert!(cx.coboundary(&df).unwrap().is_zero());
    }

    #[test]
    fn coboundary_matrix_matches_direct_evaluation(
        which in 0usize..4,
        n in 1usize..=2,
        coords in proptest::collection::vec(-2i64..=2, 1..12),
    ) {
        let et = &fixtures()[which];
        let cx = CochainComplex::of_tensor(et);
        let f = cochain(&cx, n, &coords);
        let src = cx.space(n).coordinates(f.coefficients().entries()).unwrap();
        let df = cx.coboundary(&f).unwrap();
        let expected = cx.space(n + 1).coordinates(df.coefficients().entries());
        prop_assert_eq!(Some(cx.coboundary_matrix(n).unwrap().apply(&src)), expected);
    }

    #[test]
    fn explicit_degree_one_formula_matches(
        which in 0usize..4,
        coords in proptest::collection::vec(-2i64..=2, 1..12),
    ) {
        let et = &fixtures()[which];
        let cx = CochainComplex::of_tensor(et);
        let g = cochain(&cx, 1, &coords);
        let explicit = explicit_degree1_coboundary(et, &g.to_matrix()).unwrap();
        prop_assert_eq!(explicit, cx.coboundary(&g).unwrap());
    }

    #[test]
    fn cohomology_is_invariant_under_automorphisms(
        a in nonzero(), b in nonzero(), c in nonzero(), s in nonzero(),
    ) {
        let psi = Matrix::diagonal(&[a, b, c, a * b * c].map(Scalar::from_int));
        let inv = psi.inverse().unwrap();

        let rep = adjoint_representation(&e1()).unwrap();
        let dst = EmbeddingTensor::new(rep.clone(), e1_derivation()).unwrap();
        let src = EmbeddingTensor::new(rep, inv.mul(&e1_derivation()).mul(&psi)).unwrap();
        let hom = EtMorphism { psi_l: psi.clone(), psi_v: psi.clone() };
        prop_assert!(check_et_hom(&hom, &src, &dst).unwrap().passed());
        prop_assert_eq!(cohomology(&src, 1).unwrap().dim_h, cohomology(&dst, 1).unwrap().dim_h);

        let dst = e1_line_tensor();
        let sv = Matrix::from_ints(&[&[s]]);
        let src = EmbeddingTensor::new(dst.rep().clone(), inv.mul(dst.t()).mul(&sv)).unwrap();
        let hom = EtMorphism { psi_l: psi, psi_v: sv };
        prop_assert!(check_et_hom(&hom, &src, &dst).unwrap().passed());
        for n in 1..=2 {
            prop_assert_eq!(cohomology(&src, n).unwrap(), cohomology(&dst, n).unwrap());
        }
    }

    #[test]
    fn infinitesimals_of_linear_deformations_are_cocycles(
        j in proptest::collection::vec(-2i64..=2, 4),
    ) {
        let base = e1_line_tensor();
        let inf = Matrix::from_fn(4, 1, |i, _| Scalar::from_int(j[i]));
        prop_assert!(check_linear_deformation(&base, &inf).unwrap().passed());
        prop_assert!(infinitesimal_is_cocycle(&base, &inf).unwrap());
    }

    #[test]
    fn equivalent_deformations_share_a_class(
        j1 in proptest::collection::vec(-1i64..=1, 4),
        j2 in proptest::collection::vec(-1i64..=1, 4),
    ) {
        let base = e1_line_tensor();
        let m1 = Matrix::from_fn(4, 1, |i, _| Scalar::from_int(j1[i]));
        let m2 = Matrix::from_fn(4, 1, |i, _| Scalar::from_int(j2[i]));
        let same = deformations_same_class(&base, &m1, &m2).unwrap();
        prop_assert_eq!(
            same,
            same_class(&base, &Cochain::from_matrix(&m1), &Cochain::from_matrix(&m2)).unwrap()
        );
        if let Some(w) = search_witness(&base, &m1, &m2, 1).unwrap() {
            prop_assert!(check_equivalence_witness(&base, &m1, &m2, &w).unwrap().passed());
            prop_assert!(same);
        }
    }
}

#[test]
fn witness_exists_along_the_coboundary_direction() {
    let base = e1_line_tensor();
    let m1 = Matrix::from_ints(&[&[1], &[2], &[0], &[3]]);
    let m2 = Matrix::from_ints(&[&[1], &[2], &[0], &[2]]);
    assert!(deformations_same_class(&base, &m1, &m2).unwrap());
    let w = search_witness(&base, &m1, &m2, 2).unwrap().expect("witness in range");
    assert!(check_equivalence_witness(&base, &m1, &m2, &w).unwrap().passed());
}

#[test]
fn zero_representation_with_zero_tensor_has_full_cocycles() {
    let rep = Representation::new(e1(), 1, [], Matrix::identity(1)).unwrap();
    let et = EmbeddingTensor::new(rep, Matrix::zeros(4, 1)).unwrap();
    let h = cohomology(&et, 1).unwrap();
    assert_eq!(h.dim_cocycle, h.dim_cochain);
    assert_eq!(h.dim_coboundary, 0);
}
