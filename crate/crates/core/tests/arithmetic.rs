use hom_embed::linalg::{kernel_basis, membership, quotient_dim, rank, solve, Matrix, SubspaceBasis};
use hom_embed::sparse::{from_dense, Echelon, SparseMatrix};
use hom_embed::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn big(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn ratio() -> impl Strategy<Value = (i64, i64)> {
    (any::<i64>(), prop_oneof![1i64..1000, Just(i64::MAX), -1000i64..-1])
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |i, j| Scalar::from_int(v[i * cols + j])))
}

proptest! {
    #[test]
    fn field_operations_match_big_rationals(a in ratio(), b in ratio()) {
        let (x, y) = (Scalar::ratio(a.0, a.1), Scalar::ratio(b.0, b.1));
        let (bx, by) = (big(a.0, a.1), big(b.0, b.1));
        prop_assert_eq!((&x + &y).to_big(), &bx + &by);
        prop_assert_eq!((&x - &y).to_big(), &bx - &by);
        prop_assert_eq!((&x * &y).to_big(), &bx * &by);
        if !y.is_zero() {
            prop_assert_eq!((&x / &y).to_big(), &bx / &by);
        }
    }

    #[test]
    fn display_parse_round_trip(a in ratio()) {
        let x = Scalar::ratio(a.0, a.1);
        let back: Scalar = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn equality_is_numeric(n in -50i64..50, d in 1i64..50, k in 1i64..50) {
        prop_assert_eq!(Scalar::ratio(n, d), Scalar::ratio(n * k, d * k));
    }

    #[test]
    fn rank_nullity(m in matrix(4, 5)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.dim(), 5);
        for v in k.vectors() {
            prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn sparse_echelon_matches_dense_rank(m in matrix(5, 4)) {
        let mut e = Echelon::new(4);
        for r in m.row_vectors() {
            e.insert(&from_dense(&r));
        }
        prop_assert_eq!(e.rank(), rank(&m));
        prop_assert_eq!(SparseMatrix::from_dense(&m).rank(), rank(&m));
    }

    #[test]
    fn sparse_products_match_dense(a in matrix(3, 4), b in matrix(4, 2)) {
        let p = SparseMatrix::from_dense(&a).mul(&SparseMatrix::from_dense(&b));
        prop_assert_eq!(p.to_dense(), a.mul(&b));
    }

    #[test]
    fn solutions_satisfy_the_system(m in matrix(3, 3), x in proptest::collection::vec(-3i64..=3, 3)) {
        let x: Vec<Scalar> = x.into_iter().map(Scalar::from_int).collect();
        let b = m.apply(&x);
        let y = solve(&m, &b).expect("consistent by construction");
        prop_assert_eq!(m.apply(&y), b);
    }

    #[test]
    fn membership_coordinates_reconstruct(m in matrix(4, 3)) {
        let cols: Vec<_> = (0..3).map(|j| m.column(j)).collect();
        let img = hom_embed::linalg::image_basis(&m);
        let target = hom_embed::linalg::add_vectors(&cols[0], &cols[2]);
        let c = membership(&target, &img).expect("in the image");
        let mut acc = vec![Scalar::zero(); 4];
        for (ci, v) in c.iter().zip(img.vectors()) {
            hom_embed::linalg::axpy(&mut acc, ci, v);
        }
        prop_assert_eq!(acc, target);
    }
}

#[test]
fn quotient_of_nested_spaces() {
    let z = SubspaceBasis::new(3, vec![vec![1.into(), 0.into(), 0.into()], vec![0.into(), 1.into(), 0.into()]]).unwrap();
    let b = SubspaceBasis::new(3, vec![vec![1.into(), 1.into(), 0.into()]]).unwrap();
    assert_eq!(quotient_dim(&z, &b).unwrap(), 1);
    let outside = SubspaceBasis::new(3, vec![vec![0.into(), 0.into(), 1.into()]]).unwrap();
    assert!(quotient_dim(&z, &outside).is_err());
}

#[test]
fn overflow_spills_without_loss() {
    let x = Scalar::ratio(i64::MAX, 3);
    let y = &(&x * &x) / &x;
    assert_eq!(y, x);
    assert_eq!((&x + &x).to_big(), big(i64::MAX, 3) * BigInt::from(2));
}
