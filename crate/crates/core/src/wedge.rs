//! Coordinates on the exterior square ∧²W with the basis
//! `{eᵢ∧eⱼ : i<j}` in lexicographic order.

use crate::linalg::{zero_vector, Matrix, Vector};
use crate::scalar::Scalar;

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of `eᵢ∧eⱼ` (`i < j < n`) in the lexicographic pair basis.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// All pairs `(i, j)` with `i < j < n`, in basis order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// All triples `i < j < k < n`, lexicographic.
pub fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// Coordinates of `u∧v`.
pub fn wedge(u: &[Scalar], v: &[Scalar]) -> Vector {
    let n = u.len();
    debug_assert_eq!(n, v.len());
    let mut out = zero_vector(pair_count(n));
    for i in 0..n {
        for j in i + 1..n {
            let c = &(&u[i] * &v[j]) - &(&u[j] * &v[i]);
            if !c.is_zero() {
                out[pair_index(n, i, j)] = c;
            }
        }
    }
    out
}

/// The induced map `eᵢ∧eⱼ ↦ m(eᵢ)∧m(eⱼ)` on the exterior square.
pub fn wedge_square(m: &Matrix) -> Matrix {
    assert!(m.is_square());
    let n = m.rows();
    let ps = pairs(n);
    let columns: Vec<Vector> = ps
        .iter()
        .map(|&(i, j)| wedge(&m.column(i), &m.column(j)))
        .collect();
    Matrix::from_columns(pair_count(n), &columns).expect("square columns")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;

    #[test]
    fn indexing_is_lexicographic() {
        let n = 5;
        for (k, &(i, j)) in pairs(n).iter().enumerate() {
            assert_eq!(pair_index(n, i, j), k);
        }
        assert_eq!(pairs(4).len(), 6);
        assert_eq!(triples(4).len(), 4);
    }

    #[test]
    fn wedge_is_alternating() {
        let e = |i| unit_vector(4, i);
        assert_eq!(wedge(&e(1), &e(3)), unit_vector(6, pair_index(4, 1, 3)));
        let back = wedge(&e(3), &e(1));
        assert_eq!(back[pair_index(4, 1, 3)], Scalar::from_int(-1));
        assert!(wedge(&e(2), &e(2)).iter().all(Scalar::is_zero));
    }
}
