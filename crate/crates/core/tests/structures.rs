use hom_embed::algebra::{check_3h_leibniz, check_3hl};
use hom_embed::embedding::{
    check_embedding_tensor, check_et_hom, example_tensor, graph_is_subalgebra, induced_leibniz,
    induced_representation,
};
use hom_embed::fixtures::{e1, e1_derivation, zero_algebra};
use hom_embed::representation::{
    adjoint_representation, check_leibniz_representation, check_representation,
    direct_sum_representation, hemisemidirect_product,
};
use hom_embed::{EmbeddingTensor, EtMorphism, ExampleKind, Matrix, Representation, Scalar};
use proptest::prelude::*;

fn small() -> impl Strategy<Value = i64> {
    prop_oneof![3 => Just(0i64), 1 => -2i64..=2]
}

fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![-3i64..=-1, 1i64..=3]
}

fn ints(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(small(), rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |i, j| Scalar::from_int(v[i * cols + j])))
}

/// A representation of `e1` on a line: one scalar per pair.
fn line_representation() -> impl Strategy<Value = Representation> {
    (proptest::collection::vec(small(), 6), prop_oneof![Just(1i64), Just(-1), Just(2)]).prop_map(
        |(rho, beta)| {
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let acts = pairs
                .into_iter()
                .zip(rho)
                .map(|(p, c)| (p, Matrix::from_ints(&[&[c]])));
            Representation::new(e1(), 1, acts, Matrix::from_ints(&[&[beta]])).unwrap()
        },
    )
}

fn assert_induced_structures(et: &EmbeddingTensor) {
    let leib = induced_leibniz(et);
    assert!(check_3h_leibniz(&leib).passed());
    let rep = induced_representation(et);
    assert!(check_leibniz_representation(&rep).unwrap().passed());
    assert!(graph_is_subalgebra(et.rep(), et.t()).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn representation_iff_hemisemidirect_is_leibniz(rep in line_representation()) {
        let direct = check_representation(&rep).unwrap().passed();
        let via_product = check_3h_leibniz(&hemisemidirect_product(&rep)).passed();
        prop_assert_eq!(direct, via_product);
    }

    #[test]
    fn graph_criterion_agrees_with_tensor_axioms(t in ints(4, 4)) {
        let rep = adjoint_representation(&e1()).unwrap();
        let axioms = check_embedding_tensor(&rep, &t).unwrap().passed();
        prop_assert_eq!(graph_is_subalgebra(&rep, &t).unwrap(), axioms);
    }

    #[test]
    fn graph_criterion_on_a_line(t in ints(4, 1), beta in nonzero()) {
        let rep = Representation::new(e1(), 1, [], Matrix::from_ints(&[&[beta]])).unwrap();
        let axioms = check_embedding_tensor(&rep, &t).unwrap().passed();
        prop_assert_eq!(graph_is_subalgebra(&rep, &t).unwrap(), axioms);
    }

    #[test]
    fn scaled_derivations_induce_leibniz_structures(c in nonzero()) {
        let d = e1_derivation().scale(&Scalar::from_int(c));
        let et = example_tensor(&e1(), &ExampleKind::Derivation(d)).unwrap();
        assert_induced_structures(&et);
    }

    #[test]
    fn automorphisms_give_tensor_morphisms(a in nonzero(), b in nonzero(), c in nonzero()) {
        let psi = Matrix::diagonal(&[a, b, c, a * b * c].map(Scalar::from_int));
        let rep = adjoint_representation(&e1()).unwrap();
        let dst = EmbeddingTensor::new(rep.clone(), e1_derivation()).unwrap();
        let t = psi.inverse().unwrap().mul(&e1_derivation()).mul(&psi);
        let src = EmbeddingTensor::new(rep, t).unwrap();
        let hom = EtMorphism { psi_l: psi.clone(), psi_v: psi };
        prop_assert!(check_et_hom(&hom, &src, &dst).unwrap().passed());
    }
}

#[test]
fn sums_and_projections_induce_leibniz_structures() {
    let l = e1();
    for copies in 1..=2 {
        assert_induced_structures(&example_tensor(&l, &ExampleKind::Sum(copies)).unwrap());
        for index in 0..copies {
            let proj = example_tensor(&l, &ExampleKind::Projection { copies, index }).unwrap();
            assert_induced_structures(&proj);
        }
    }
}

#[test]
fn standard_constructions_satisfy_their_axioms() {
    for l in [e1(), zero_algebra(3)] {
        assert!(check_3hl(&l).passed());
        let ad = adjoint_representation(&l).unwrap();
        assert!(check_representation(&ad).unwrap().passed());
        assert!(check_3h_leibniz(&hemisemidirect_product(&ad)).passed());
        let sum = direct_sum_representation(&l, 2).unwrap();
        assert!(check_representation(&sum).unwrap().passed());
        assert_induced_structures(&example_tensor(&l, &ExampleKind::Identity).unwrap());
    }
}

#[test]
fn non_derivations_are_rejected_as_parameters() {
    let err = example_tensor(&e1(), &ExampleKind::Derivation(Matrix::identity(4)));
    assert!(err.is_err());
    let err = example_tensor(&e1(), &ExampleKind::Projection { copies: 2, index: 2 });
    assert!(err.is_err());
    assert!(example_tensor(&e1(), &ExampleKind::Sum(0)).is_err());
}
