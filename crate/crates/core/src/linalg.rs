//! Dense exact linear algebra over the rationals.
//!
//! Vectors are coordinate arrays relative to the standard basis of whatever
//! space they live in. Matrices act on column vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

/// The `i`-th standard basis vector of length `n`.
pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn int_vector(entries: &[i64]) -> Vector {
    entries.iter().map(|&x| Scalar::from_int(x)).collect()
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// `acc += c * v`, skipping the work when `c` is zero.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

/// Indices of the nonzero coordinates.
pub fn support(v: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero())
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Builds a matrix from row vectors; all rows must share a length.
    pub fn from_rows(rows: Vec<Vector>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != ncols) {
            return Err(Error::Dimension(format!(
                "row {bad} has {} entries, expected {ncols}",
                rows[bad].len()
            )));
        }
        let nrows = rows.len();
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        if let Some(bad) = columns.iter().position(|c| c.len() != rows) {
            return Err(Error::Dimension(format!(
                "column {bad} has {} entries, expected {rows}",
                columns[bad].len()
            )));
        }
        Ok(Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone()))
    }

    /// Convenience constructor from integer rows. Panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| int_vector(r)).collect()).expect("ragged rows")
    }

    pub fn diagonal(diag: &[Scalar]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Matrix-vector product. Panics if `v.len() != cols`.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix/vector shape mismatch");
        let mut out = zero_vector(self.rows);
        for (j, x) in support(v) {
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    /// Matrix product. Panics on inner-dimension mismatch.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: add_vectors(&self.entries, &rhs.entries),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: sub_vectors(&self.entries, &rhs.entries),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: scale_vector(c, &self.entries),
        }
    }

    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square());
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Exact inverse, `None` when singular or non-square.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let (r, pivots) = rref(&aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && rank(self) == self.rows
    }

    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows);
        Matrix::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn block_diagonal(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "{}{:?}", if i == 0 { "" } else { ", " }, self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Dense multi-index array in lexicographic (row-major) order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tensor {
    shape: Vec<usize>,
    entries: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(shape: &[usize]) -> Self {
        let n = shape.iter().product();
        Tensor {
            shape: shape.to_vec(),
            entries: vec![Scalar::zero(); n],
        }
    }

    pub fn from_entries(shape: &[usize], entries: Vec<Scalar>) -> Result<Self> {
        let n: usize = shape.iter().product();
        if entries.len() != n {
            return Err(Error::Dimension(format!(
                "tensor of shape {shape:?} needs {n} entries, got {}",
                entries.len()
            )));
        }
        Ok(Tensor {
            shape: shape.to_vec(),
            entries,
        })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn offset(&self, index: &[usize]) -> usize {
        debug_assert_eq!(index.len(), self.shape.len());
        index
            .iter()
            .zip(&self.shape)
            .fold(0, |acc, (&i, &n)| {
                debug_assert!(i < n);
                acc * n + i
            })
    }

    pub fn get(&self, index: &[usize]) -> &Scalar {
        &self.entries[self.offset(index)]
    }

    pub fn set(&mut self, index: &[usize], v: Scalar) {
        let o = self.offset(index);
        self.entries[o] = v;
    }

    /// The trailing fibre at a prefix index: for a rank-4 tensor and a
    /// 3-index prefix this is the output vector of a trilinear map.
    pub fn fibre(&self, prefix: &[usize]) -> &[Scalar] {
        let tail: usize = self.shape[prefix.len()..].iter().product();
        let mut full = prefix.to_vec();
        full.extend(std::iter::repeat_n(0, self.shape.len() - prefix.len()));
        let o = self.offset(&full);
        &self.entries[o..o + tail]
    }

    pub fn fibre_mut(&mut self, prefix: &[usize]) -> &mut [Scalar] {
        let tail: usize = self.shape[prefix.len()..].iter().product();
        let mut full = prefix.to_vec();
        full.extend(std::iter::repeat_n(0, self.shape.len() - prefix.len()));
        let o = self.offset(&full);
        &mut self.entries[o..o + tail]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Evaluates a rank-4 tensor as the trilinear map
    /// `(x, y, z) ↦ Σ x_i y_j z_k t[i, j, k, :]`.
    pub fn trilinear(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        assert_eq!(self.shape.len(), 4, "trilinear evaluation needs a rank-4 tensor");
        let (n0, n1, n2, out) = (self.shape[0], self.shape[1], self.shape[2], self.shape[3]);
        assert!(x.len() == n0 && y.len() == n1 && z.len() == n2);
        let mut acc = zero_vector(out);
        for (i, xi) in support(x) {
            for (j, yj) in support(y) {
                let xy = xi * yj;
                for (k, zk) in support(z) {
                    let base = ((i * n1 + j) * n2 + k) * out;
                    let c = &xy * zk;
                    axpy(&mut acc, &c, &self.entries[base..base + out]);
                }
            }
        }
        acc
    }

    /// Evaluates a rank-3 tensor as the bilinear map `(x, y) ↦ Σ x_i y_j t[i, j, :]`.
    pub fn bilinear(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        assert_eq!(self.shape.len(), 3, "bilinear evaluation needs a rank-3 tensor");
        let (n0, n1, out) = (self.shape[0], self.shape[1], self.shape[2]);
        assert!(x.len() == n0 && y.len() == n1);
        let mut acc = zero_vector(out);
        for (i, xi) in support(x) {
            for (j, yj) in support(y) {
                let base = (i * n1 + j) * out;
                axpy(&mut acc, &(xi * yj), &self.entries[base..base + out]);
            }
        }
        acc
    }
}

/// A linearly independent family of vectors in a coordinate space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vector>,
}

impl SubspaceBasis {
    /// Validates lengths and linear independence.
    pub fn new(ambient_dim: usize, vectors: Vec<Vector>) -> Result<Self> {
        if let Some(bad) = vectors.iter().position(|v| v.len() != ambient_dim) {
            return Err(Error::Dimension(format!(
                "basis vector {bad} has length {}, ambient dimension is {ambient_dim}",
                vectors[bad].len()
            )));
        }
        let m = Matrix::from_columns(ambient_dim, &vectors)?;
        if rank(&m) != vectors.len() {
            return Err(Error::InvalidInput("basis vectors are linearly dependent".into()));
        }
        Ok(SubspaceBasis {
            ambient_dim,
            vectors,
        })
    }

    pub(crate) fn new_unchecked(ambient_dim: usize, vectors: Vec<Vector>) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors,
        }
    }

    pub fn empty(ambient_dim: usize) -> Self {
        Self::new_unchecked(ambient_dim, Vec::new())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_fn(self.ambient_dim, self.vectors.len(), |i, j| {
            self.vectors[j][i].clone()
        })
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        membership(v, self).is_some()
    }
}

/// Reduced row-echelon form by Gaussian elimination with first-nonzero
/// pivoting, together with the pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a.get(r, c).recip().expect("nonzero pivot");
        let nz: Vec<usize> = (c..cols).filter(|&j| !a.get(r, j).is_zero()).collect();
        for &j in &nz {
            let v = a.get(r, j) * &inv;
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for &j in &nz {
                let v = a.get(i, j) - &(&f * a.get(r, j));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Basis of `{v : m v = 0}`; one vector per free column, with a 1 in that
/// column and 0 in every other free column.
pub fn kernel_basis(m: &Matrix) -> SubspaceBasis {
    let (r, pivots) = rref(m);
    let cols = m.cols;
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut vectors = Vec::new();
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vector(cols);
        v[f] = Scalar::one();
        for (row, &p) in pivots.iter().enumerate() {
            let e = r.get(row, f);
            if !e.is_zero() {
                v[p] = -e;
            }
        }
        vectors.push(v);
    }
    SubspaceBasis::new_unchecked(cols, vectors)
}

/// Basis of the column space, given as the nonzero rows of `rref(mᵀ)`.
pub fn image_basis(m: &Matrix) -> SubspaceBasis {
    let (r, pivots) = rref(&m.transpose());
    let vectors = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
    SubspaceBasis::new_unchecked(m.rows, vectors)
}

/// Some solution of `m x = b`, or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Option<Vector> {
    assert_eq!(b.len(), m.rows, "right-hand side length must equal row count");
    let aug = m.hstack(&Matrix::from_columns(m.rows, &[b.to_vec()]).expect("column"));
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = zero_vector(m.cols);
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.get(row, m.cols).clone();
    }
    Some(x)
}

/// Coordinates of `v` in the basis `s`, if `v` lies in its span.
pub fn membership(v: &[Scalar], s: &SubspaceBasis) -> Option<Vector> {
    assert_eq!(v.len(), s.ambient_dim, "vector length must equal ambient dimension");
    if s.vectors.is_empty() {
        return is_zero_vector(v).then(Vec::new);
    }
    solve(&s.to_matrix(), v)
}

/// `dim z − dim b`, after confirming `span(b) ⊆ span(z)`.
pub fn quotient_dim(z: &SubspaceBasis, b: &SubspaceBasis) -> Result<usize> {
    if z.ambient_dim != b.ambient_dim {
        return Err(Error::Dimension(format!(
            "subspaces live in spaces of dimension {} and {}",
            z.ambient_dim, b.ambient_dim
        )));
    }
    if let Some(i) = b.vectors.iter().position(|v| !z.contains(v)) {
        return Err(Error::Inconsistent(format!(
            "vector {i} of the subspace is outside the containing space"
        )));
    }
    Ok(z.dim() - b.dim())
}
