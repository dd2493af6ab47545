//! Sparse vectors and an incrementally maintained reduced echelon basis.
//! Used where coefficient spaces grow large (cochain spaces).

use std::collections::BTreeMap;

use crate::linalg::{zero_vector, Matrix, Vector};
use crate::scalar::Scalar;

/// Sorted `(index, nonzero value)` pairs.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(v: &[(usize, Scalar)], n: usize) -> Vector {
    let mut out = zero_vector(n);
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

fn lookup(v: &[(usize, Scalar)], i: usize) -> Option<&Scalar> {
    v.binary_search_by_key(&i, |(k, _)| *k).ok().map(|p| &v[p].1)
}

/// `a + c·b`, merged in index order.
fn add_scaled(a: &[(usize, Scalar)], c: &Scalar, b: &[(usize, Scalar)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row space in fully reduced echelon form: every stored row has a leading 1
/// at its pivot and zeros at every other pivot column.
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Removes every pivot coordinate from `v`.
    pub fn reduce(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let mut out = v.to_vec();
        for (c, a) in v {
            if let Some(row) = self.rows.get(c) {
                // rows carry no other pivot columns, so one pass suffices
                out = add_scaled(&out, &-a, row);
            }
        }
        out
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: &[(usize, Scalar)]) -> bool {
        let r = self.reduce(v);
        let Some((p, lead)) = r.first().cloned() else {
            return false;
        };
        let inv = lead.recip().expect("nonzero lead");
        let r: SparseVec = r.into_iter().map(|(i, x)| (i, &x * &inv)).collect();
        for row in self.rows.values_mut() {
            if let Some(f) = lookup(row, p).cloned() {
                *row = add_scaled(row, &-f, &r);
            }
        }
        self.rows.insert(p, r);
        true
    }

    pub fn contains(&self, v: &[(usize, Scalar)]) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Null space of the stored rows: one vector per free column `f`, with a
    /// 1 at `f` and zeros at the other free columns. Returned with the list
    /// of free columns in ascending order.
    pub fn kernel(&self) -> (Vec<usize>, Vec<SparseVec>) {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.rows.contains_key(c)).collect();
        let slot: BTreeMap<usize, usize> = free.iter().enumerate().map(|(k, &f)| (f, k)).collect();
        let mut vecs: Vec<SparseVec> = free.iter().map(|&f| vec![(f, Scalar::one())]).collect();
        for (&p, row) in &self.rows {
            for (f, x) in row {
                if *f != p {
                    vecs[slot[f]].push((p, -x));
                }
            }
        }
        for v in &mut vecs {
            v.sort_by_key(|(i, _)| *i);
        }
        (free, vecs)
    }
}

/// A matrix stored as sparse columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    /// Each column must be sorted by index with indices below `rows`.
    pub fn new(rows: usize, columns: Vec<SparseVec>) -> Self {
        debug_assert!(columns
            .iter()
            .all(|c| c.windows(2).all(|w| w[0].0 < w[1].0) && c.last().is_none_or(|l| l.0 < rows)));
        SparseMatrix { rows, columns }
    }

    pub fn from_dense(m: &Matrix) -> Self {
        let columns = (0..m.cols()).map(|j| from_dense(&m.column(j))).collect();
        SparseMatrix { rows: m.rows(), columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.columns[j]
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        lookup(&self.columns[j], i).cloned().unwrap_or_default()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols(), "vector length");
        let mut out = zero_vector(self.rows);
        for (col, x) in self.columns.iter().zip(v) {
            if x.is_zero() {
                continue;
            }
            for (i, a) in col {
                out[*i] += &(a * x);
            }
        }
        out
    }

    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols(), rhs.rows, "inner dimensions");
        let columns = rhs
            .columns
            .iter()
            .map(|col| {
                col.iter()
                    .fold(Vec::new(), |acc, (k, c)| add_scaled(&acc, c, &self.columns[*k]))
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            columns,
        }
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.rows);
        for c in &self.columns {
            ech.insert(c);
        }
        ech.rank()
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols());
        for (j, col) in self.columns.iter().enumerate() {
            for (i, x) in col {
                m.set(*i, j, x.clone());
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int_vector, kernel_basis, rank};

    #[test]
    fn matches_dense_rank_and_kernel() {
        let m = Matrix::from_ints(&[&[1, 2, 0, -1], &[2, 4, 1, 0], &[3, 6, 1, -1]]);
        let mut e = Echelon::new(4);
        for row in m.row_vectors() {
            e.insert(&from_dense(&row));
        }
        assert_eq!(e.rank(), rank(&m));
        let (free, k) = e.kernel();
        assert_eq!(free.len(), kernel_basis(&m).dim());
        for v in &k {
            assert!(m.apply(&to_dense(v, 4)).iter().all(|x| x.is_zero()));
        }
        assert!(e.contains(&from_dense(&int_vector(&[5, 10, 1, -3]))));
        assert!(!e.contains(&from_dense(&int_vector(&[1, 0, 0, 0]))));
    }

    #[test]
    fn sparse_matrix_agrees_with_dense() {
        let a = Matrix::from_ints(&[&[1, 0, 2], &[0, -1, 0], &[3, 0, 6]]);
        let b = Matrix::from_ints(&[&[0, 1], &[2, 0], &[-1, 1]]);
        let (sa, sb) = (SparseMatrix::from_dense(&a), SparseMatrix::from_dense(&b));
        assert_eq!(sa.mul(&sb).to_dense(), a.mul(&b));
        assert_eq!(sa.rank(), rank(&a));
        assert_eq!(sa.apply(&int_vector(&[1, 1, 1])), a.apply(&int_vector(&[1, 1, 1])));
        assert_eq!(sa.get(2, 2), Scalar::from_int(6));
        assert_eq!(sa.nnz(), 5);
    }
}
