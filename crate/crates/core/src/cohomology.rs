//! The cochain complex of a 3-Hom-Leibniz algebra with coefficients in a
//! Leibniz representation, its specialization to an embedding tensor, the
//! degree-0 map ℘ and exact cohomology dimensions.
//!
//! An `n`-cochain is stored as a tensor of shape `[P; n−1] × d × w` where
//! `P = C(d, 2)` counts basis pairs of the algebra, `d` is the algebra
//! dimension and `w` the dimension of the coefficient space. The flat
//! coefficient index is lexicographic over (pair slots, last slot, output).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::ThreeHomLeibnizAlgebra;
use crate::embedding::{induced_representation, EmbeddingTensor};
use crate::error::{Error, Result};
use crate::linalg::{
    axpy, image_basis, kernel_basis, membership, sub_vectors, unit_vector, zero_vector, Matrix,
    SubspaceBasis, Tensor, Vector,
};
use crate::representation::{check_leibniz_representation, LeibnizRepresentation};
use crate::scalar::Scalar;
use crate::sparse::{from_dense, Echelon, SparseMatrix, SparseVec};
use crate::wedge::{pair_count, pairs, wedge, wedge_square};

/// An `n`-cochain given by its coefficient tensor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    coeffs: Tensor,
}

impl Cochain {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> &Tensor {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// A 1-cochain read from a `w × d` matrix `g`, so that `f(e_c) = g e_c`.
    pub fn from_matrix(g: &Matrix) -> Self {
        let (w, d) = (g.rows(), g.cols());
        let mut coeffs = Tensor::zeros(&[d, w]);
        for c in 0..d {
            coeffs.fibre_mut(&[c]).clone_from_slice(&g.column(c));
        }
        Cochain { degree: 1, coeffs }
    }

    /// The `w × d` matrix of a 1-cochain.
    pub fn to_matrix(&self) -> Matrix {
        assert_eq!(self.degree, 1, "only 1-cochains are linear maps");
        let (d, w) = (self.coeffs.shape()[0], self.coeffs.shape()[1]);
        Matrix::from_fn(w, d, |o, c| self.coeffs.get(&[c, o]).clone())
    }

    fn out_dim(&self) -> usize {
        *self.coeffs.shape().last().expect("nonempty shape")
    }

    /// Adds `scale · f(pairs…, last)` to `acc`, with every argument sparse.
    fn eval_into(&self, acc: &mut [Scalar], scale: &Scalar, pairs: &[&SparseVec], last: &SparseVec) {
        let shape = self.coeffs.shape();
        let mut prefixes: Vec<(usize, Scalar)> = vec![(0, scale.clone())];
        for (slot, arg) in pairs.iter().enumerate() {
            let n = shape[slot];
            let mut next = Vec::with_capacity(prefixes.len() * arg.len());
            for (pre, c) in &prefixes {
                for (p, x) in arg.iter() {
                    next.push((pre * n + p, c * x));
                }
            }
            prefixes = next;
            if prefixes.is_empty() {
                return;
            }
        }
        let d = shape[shape.len() - 2];
        let w = self.out_dim();
        let entries = self.coeffs.entries();
        for (pre, c) in &prefixes {
            for (z, x) in last {
                let base = (pre * d + z) * w;
                axpy(acc, &(c * x), &entries[base..base + w]);
            }
        }
    }
}

/// A degree-0 cochain: a pair of `α`-fixed vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroCochain {
    a: Vector,
    b: Vector,
}

impl ZeroCochain {
    pub fn new(et: &EmbeddingTensor, a: Vector, b: Vector) -> Result<Self> {
        let n = et.ldim();
        for (name, v) in [("a", &a), ("b", &b)] {
            if v.len() != n {
                return Err(Error::Dimension(format!(
                    "{name} has length {}, expected {n}",
                    v.len()
                )));
            }
            if &et.alpha().apply(v) != v {
                return Err(Error::NotFixed(format!("{name} = {v:?}")));
            }
        }
        Ok(ZeroCochain { a, b })
    }

    pub fn a(&self) -> &[Scalar] {
        &self.a
    }

    pub fn b(&self) -> &[Scalar] {
        &self.b
    }
}

/// Dimensions of cochains, cocycles, coboundaries and cohomology in one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologySummary {
    pub degree: usize,
    pub dim_cochain: usize,
    pub dim_cocycle: usize,
    pub dim_coboundary: usize,
    pub dim_h: usize,
    pub warnings: Vec<String>,
}

/// The equivariant subspace of the full coefficient space in one degree,
/// presented by the free columns of the equivariance constraint. Basis
/// vector `k` has a 1 at `free[k]` and 0 at the other free columns, so the
/// coordinates of an equivariant vector are its values at `free`.
#[derive(Debug, Clone)]
pub struct CochainSpace {
    degree: usize,
    count: usize,
    free: Vec<usize>,
    basis: Vec<SparseVec>,
}

impl CochainSpace {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn coefficient_count(&self) -> usize {
        self.count
    }

    pub fn basis_vector(&self, k: usize) -> Vector {
        crate::sparse::to_dense(&self.basis[k], self.count)
    }

    fn reconstruct(&self, coords: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.count);
        for (c, k) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                for (i, x) in k {
                    out[*i] += &(c * x);
                }
            }
        }
        out
    }

    /// Coordinates of a raw coefficient vector, or `None` if it is not
    /// equivariant.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        let coords: Vector = self.free.iter().map(|&f| v[f].clone()).collect();
        (self.reconstruct(&coords) == v).then_some(coords)
    }

    pub fn to_subspace_basis(&self) -> SubspaceBasis {
        let vectors = (0..self.dim()).map(|k| self.basis_vector(k)).collect();
        SubspaceBasis::new_unchecked(self.count, vectors)
    }
}

/// Cochains of `(A, [·,·,·], σ)` with values in a representation `(W; l, m, r, τ)`.
#[derive(Debug, Clone)]
pub struct CochainComplex {
    rep: LeibnizRepresentation,
}

fn sparse_columns(m: &Matrix) -> Vec<SparseVec> {
    (0..m.cols()).map(|j| from_dense(&m.column(j))).collect()
}

fn flat_index(tuple: &[usize], shape: &[usize]) -> usize {
    tuple.iter().zip(shape).fold(0, |acc, (&i, &n)| acc * n + i)
}

/// Iterates over all index tuples of the given shape in lexicographic order.
fn for_each_tuple(shape: &[usize], mut f: impl FnMut(&[usize])) {
    if shape.contains(&0) {
        return;
    }
    let mut idx = vec![0; shape.len()];
    loop {
        f(&idx);
        let mut k = shape.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < shape[k] {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// One summand of `(δf)(t)`: `coeff · M · f(input)` with `M` the identity
/// when `map` is `None`.
struct Term {
    input: usize,
    coeff: Scalar,
    map: Option<usize>,
}

/// Data shared by every output tuple of `δ` in one degree.
struct Plan {
    n: usize,
    d: usize,
    w: usize,
    p: usize,
    ps: Vec<(usize, usize)>,
    sig_w: Vec<SparseVec>,
    sig: Vec<SparseVec>,
    unit_pairs: Vec<SparseVec>,
    units: Vec<SparseVec>,
    inserted: Vec<SparseVec>,
    bracket_z: Vec<SparseVec>,
    maps: Vec<Matrix>,
    l_maps: Vec<Option<usize>>,
    m_maps: Vec<Option<usize>>,
    r_maps: Vec<Option<usize>>,
}

impl Plan {
    fn new(cx: &CochainComplex, n: usize) -> Self {
        let d = cx.d();
        let w = cx.w();
        let alg = cx.algebra();
        let rep = &cx.rep;
        let sigma = alg.twist();
        let ps = pairs(d);
        let p = ps.len();
        let sig_cols: Vec<Vector> = (0..d).map(|i| sigma.column(i)).collect();
        let sig_pow = sigma.pow(n - 1);
        let pow_cols: Vec<Vector> = (0..d).map(|i| sig_pow.column(i)).collect();
        let br: Vec<Vector> = (0..d * d * d)
            .map(|i| alg.basis_bracket(i / (d * d), (i / d) % d, i % d))
            .collect();
        let bracket = |i: usize, j: usize, k: usize| &br[(i * d + j) * d + k];

        let mut inserted = Vec::with_capacity(p * p);
        for &(xj, yj) in &ps {
            for &(xk, yk) in &ps {
                let a = wedge(&sig_cols[xk], bracket(xj, yj, yk));
                let b = wedge(bracket(xj, yj, xk), &sig_cols[yk]);
                inserted.push(from_dense(&crate::linalg::add_vectors(&a, &b)));
            }
        }
        let mut bracket_z = Vec::with_capacity(p * d);
        for &(x, y) in &ps {
            for z in 0..d {
                bracket_z.push(from_dense(bracket(x, y, z)));
            }
        }

        let wunits: Vec<Vector> = (0..w).map(|u| unit_vector(w, u)).collect();
        let mut maps = Vec::new();
        let mut linear = |g: &dyn Fn(&[Scalar]) -> Vector| -> Option<usize> {
            let cols: Vec<Vector> = wunits.iter().map(|u| g(u)).collect();
            let m = Matrix::from_columns(w, &cols).expect("columns");
            if m.is_zero() {
                return None;
            }
            maps.push(m);
            Some(maps.len() - 1)
        };
        // u ↦ l(σ^{n−1}x, σ^{n−1}y, u) per pair; the m and r parts of the
        // last term per (pair, z)
        let l_maps: Vec<Option<usize>> = ps
            .iter()
            .map(|&(x, y)| linear(&|u| rep.l(&pow_cols[x], &pow_cols[y], u)))
            .collect();
        let mut m_maps = Vec::with_capacity(p * d);
        let mut r_maps = Vec::with_capacity(p * d);
        for &(x, y) in &ps {
            for z in 0..d {
                m_maps.push(linear(&|u| rep.m(&pow_cols[x], u, &pow_cols[z])));
                r_maps.push(linear(&|u| rep.r(u, &pow_cols[y], &pow_cols[z])));
            }
        }

        Plan {
            n,
            d,
            w,
            p,
            ps,
            sig_w: sparse_columns(&wedge_square(sigma)),
            sig: sparse_columns(sigma),
            unit_pairs: (0..p).map(|q| vec![(q, Scalar::one())]).collect(),
            units: (0..d).map(|i| vec![(i, Scalar::one())]).collect(),
            inserted,
            bracket_z,
            maps,
            l_maps,
            m_maps,
            r_maps,
        }
    }

    /// Expands `scale · f(pairs…, last)` into input-tuple indices.
    fn expand(&self, pairs: &[&SparseVec], last: &SparseVec, scale: &Scalar, map: Option<usize>, out: &mut Vec<Term>) {
        let mut prefixes: Vec<(usize, Scalar)> = vec![(0, scale.clone())];
        for arg in pairs {
            let mut next = Vec::with_capacity(prefixes.len() * arg.len());
            for (pre, c) in &prefixes {
                for (q, x) in arg.iter() {
                    next.push((pre * self.p + q, c * x));
                }
            }
            prefixes = next;
            if prefixes.is_empty() {
                return;
            }
        }
        for (pre, c) in &prefixes {
            for (z, x) in last {
                out.push(Term {
                    input: pre * self.d + z,
                    coeff: c * x,
                    map,
                });
            }
        }
    }

    /// The summands of `(δf)(t)` for an input tuple `t` of degree `n + 1`.
    fn terms(&self, t: &[usize], out: &mut Vec<Term>) {
        let n = self.n;
        let (p, d) = (self.p, self.d);
        let qs = &t[..n];
        let z = t[n];
        let one = Scalar::one();
        let neg = Scalar::from_int(-1);
        let sign = |k: usize| if k.is_multiple_of(2) { &one } else { &neg };
        // Term 1: j < k (0-based), sign (−1)^{j+1}
        for k in 0..n {
            for j in 0..k {
                let ins = &self.inserted[qs[j] * p + qs[k]];
                if ins.is_empty() {
                    continue;
                }
                let args: Vec<&SparseVec> = (0..n)
                    .filter(|&i| i != j)
                    .map(|i| if i == k { ins } else { &self.sig_w[qs[i]] })
                    .collect();
                self.expand(&args, &self.sig[z], sign(j + 1), None, out);
            }
        }
        // Term 2
        for j in 0..n {
            let bz = &self.bracket_z[qs[j] * d + z];
            if bz.is_empty() {
                continue;
            }
            let args: Vec<&SparseVec> = (0..n).filter(|&i| i != j).map(|i| &self.sig_w[qs[i]]).collect();
            self.expand(&args, bz, sign(j + 1), None, out);
        }
        // Term 3: sign (−1)^{j+2}
        for j in 0..n {
            if let Some(m) = self.l_maps[qs[j]] {
                let args: Vec<&SparseVec> =
                    (0..n).filter(|&i| i != j).map(|i| &self.unit_pairs[qs[i]]).collect();
                self.expand(&args, &self.units[z], sign(j), Some(m), out);
            }
        }
        // Term 4
        let (xn, yn) = self.ps[qs[n - 1]];
        let args: Vec<&SparseVec> = qs[..n - 1].iter().map(|&q| &self.unit_pairs[q]).collect();
        let slot = qs[n - 1] * d + z;
        if let Some(m) = self.m_maps[slot] {
            self.expand(&args, &self.units[yn], sign(n + 1), Some(m), out);
        }
        if let Some(m) = self.r_maps[slot] {
            self.expand(&args, &self.units[xn], sign(n + 1), Some(m), out);
        }
    }
}

fn unflatten(mut flat: usize, shape: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; shape.len()];
    for k in (0..shape.len()).rev() {
        idx[k] = flat % shape[k];
        flat /= shape[k];
    }
    idx
}

impl CochainComplex {
    /// Requires `rep` to pass the Leibniz representation checks.
    pub fn new(rep: LeibnizRepresentation) -> Result<Self> {
        let report = check_leibniz_representation(&rep)?;
        if !report.passed() {
            return Err(Error::precondition("input is not a Leibniz representation", report));
        }
        Ok(CochainComplex { rep })
    }

    /// The complex `δ_T` of an embedding tensor: the induced algebra on `V`
    /// with coefficients in the induced representation on `L`.
    pub fn of_tensor(et: &EmbeddingTensor) -> Self {
        CochainComplex {
            rep: induced_representation(et),
        }
    }

    pub fn algebra(&self) -> &ThreeHomLeibnizAlgebra {
        self.rep.algebra()
    }

    pub fn representation(&self) -> &LeibnizRepresentation {
        &self.rep
    }

    fn d(&self) -> usize {
        self.rep.algebra().dim()
    }

    fn w(&self) -> usize {
        self.rep.wdim()
    }

    pub fn shape(&self, n: usize) -> Vec<usize> {
        assert!(n >= 1, "cochain degrees start at 1");
        let mut shape = vec![pair_count(self.d()); n - 1];
        shape.push(self.d());
        shape.push(self.w());
        shape
    }

    pub fn coefficient_count(&self, n: usize) -> usize {
        coefficient_count(self.d(), self.w(), n)
    }

    /// Wraps a coefficient tensor after checking its shape and equivariance.
    pub fn cochain(&self, n: usize, coeffs: Tensor) -> Result<Cochain> {
        if n == 0 {
            return Err(Error::InvalidParameter("cochain degree must be at least 1".into()));
        }
        let shape = self.shape(n);
        if coeffs.shape() != shape {
            return Err(Error::Dimension(format!(
                "cochain tensor has shape {:?}, expected {shape:?}",
                coeffs.shape()
            )));
        }
        let f = Cochain { degree: n, coeffs };
        let report = self.equivariance_defect(&f);
        if let Some(i) = report {
            return Err(Error::NotCochain(format!(
                "equivariance fails at coefficient tuple {i:?}"
            )));
        }
        Ok(f)
    }

    /// First input tuple where `τ∘f ≠ f∘(σ̃^{⊗n−1}⊗σ)`, if any.
    fn equivariance_defect(&self, f: &Cochain) -> Option<Vec<usize>> {
        let n = f.degree;
        let sig_w = sparse_columns(&wedge_square(self.algebra().twist()));
        let sig = sparse_columns(self.algebra().twist());
        let tau = self.rep.beta();
        let shape = self.shape(n);
        let in_shape = &shape[..shape.len() - 1];
        let w = self.w();
        let mut bad = None;
        for_each_tuple(in_shape, |t| {
            if bad.is_some() {
                return;
            }
            let base = flat_index(t, in_shape) * w;
            let lhs = tau.apply(&f.coeffs.entries()[base..base + w]);
            let mut rhs = zero_vector(w);
            let args: Vec<&SparseVec> = t[..n - 1].iter().map(|&p| &sig_w[p]).collect();
            f.eval_into(&mut rhs, &Scalar::one(), &args, &sig[t[n - 1]]);
            if lhs != rhs {
                bad = Some(t.to_vec());
            }
        });
        bad
    }

    /// Solves the equivariance constraint in degree `n`.
    pub fn space(&self, n: usize) -> CochainSpace {
        let shape = self.shape(n);
        let count: usize = shape.iter().product();
        let in_shape = &shape[..shape.len() - 1];
        let w = self.w();
        let sig_w = sparse_columns(&wedge_square(self.algebra().twist()));
        let sig = sparse_columns(self.algebra().twist());
        let tau = self.rep.beta();
        let mut ech = Echelon::new(count);
        for_each_tuple(in_shape, |t| {
            // expansion of σ̃e_{p1} ⊗ … ⊗ σe_c as (flat input index, coefficient)
            let mut terms: Vec<(usize, Scalar)> = vec![(0, Scalar::one())];
            for (slot, &i) in t.iter().enumerate() {
                let col = if slot + 1 == t.len() { &sig[i] } else { &sig_w[i] };
                let size = in_shape[slot];
                let mut next = Vec::new();
                for (pre, c) in &terms {
                    for (j, x) in col {
                        next.push((pre * size + j, c * x));
                    }
                }
                terms = next;
            }
            let base = flat_index(t, in_shape);
            for o in 0..w {
                let mut row: BTreeMap<usize, Scalar> = BTreeMap::new();
                for o2 in 0..w {
                    let c = tau.get(o, o2);
                    if !c.is_zero() {
                        *row.entry(base * w + o2).or_default() += c;
                    }
                }
                for (idx, c) in &terms {
                    *row.entry(idx * w + o).or_default() -= c;
                }
                let row: SparseVec = row.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                if !row.is_empty() {
                    ech.insert(&row);
                }
            }
        });
        let (free, basis) = ech.kernel();
        CochainSpace {
            degree: n,
            count,
            free,
            basis,
        }
    }

    pub fn cochain_space_basis(&self, n: usize) -> SubspaceBasis {
        self.space(n).to_subspace_basis()
    }

    /// `δf`, computed from the four-part defining sum on basis tuples
    /// `(x₁∧y₁, …, xₙ∧yₙ, z)` with `xᵢ < yᵢ`.
    pub fn coboundary(&self, f: &Cochain) -> Result<Cochain> {
        if f.coeffs.shape() != self.shape(f.degree).as_slice() {
            return Err(Error::Dimension(format!(
                "cochain tensor has shape {:?}, expected {:?}",
                f.coeffs.shape(),
                self.shape(f.degree)
            )));
        }
        let out = self.coboundary_unchecked(f);
        if let Some(t) = self.equivariance_defect(&out) {
            if self.equivariance_defect(f).is_none() {
                return Err(Error::Inconsistent(format!(
                    "coboundary of an equivariant cochain fails equivariance at {t:?}"
                )));
            }
            return Err(Error::NotCochain("input is not equivariant".into()));
        }
        Ok(out)
    }

    fn coboundary_unchecked(&self, f: &Cochain) -> Cochain {
        let plan = Plan::new(self, f.degree);
        let w = plan.w;
        let entries = f.coeffs.entries();
        let out_shape = self.shape(f.degree + 1);
        let mut out = Tensor::zeros(&out_shape);
        let in_shape = out_shape[..out_shape.len() - 1].to_vec();
        let mut terms = Vec::new();
        for_each_tuple(&in_shape, |t| {
            terms.clear();
            plan.terms(t, &mut terms);
            let mut acc = zero_vector(w);
            for term in &terms {
                let value = &entries[term.input * w..(term.input + 1) * w];
                if crate::linalg::is_zero_vector(value) {
                    continue;
                }
                match term.map {
                    None => axpy(&mut acc, &term.coeff, value),
                    Some(m) => axpy(&mut acc, &term.coeff, &plan.maps[m].apply(value)),
                }
            }
            out.fibre_mut(t).clone_from_slice(&acc);
        });
        Cochain {
            degree: f.degree + 1,
            coeffs: out,
        }
    }

    /// Matrix of `δ` from basis coordinates of degree `n` to basis
    /// coordinates of degree `n + 1`.
    pub fn coboundary_matrix(&self, n: usize) -> Result<SparseMatrix> {
        let src = self.space(n);
        let dst = self.space(n + 1);
        self.coboundary_matrix_between(&src, &dst)
    }

    /// Only the output coefficients at the free columns of `dst` are
    /// evaluated, each as a linear functional on the input coefficients.
    fn coboundary_matrix_between(&self, src: &CochainSpace, dst: &CochainSpace) -> Result<SparseMatrix> {
        let n = src.degree;
        if dst.degree != n + 1 {
            return Err(Error::InvalidParameter(format!(
                "target degree {} does not follow source degree {n}",
                dst.degree
            )));
        }
        let plan = Plan::new(self, n);
        let w = plan.w;
        let mut raw_to_coord: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); src.count];
        for (k, b) in src.basis.iter().enumerate() {
            for (j, v) in b {
                raw_to_coord[*j].push((k, v.clone()));
            }
        }
        let out_shape = self.shape(n + 1);
        let in_shape = &out_shape[..out_shape.len() - 1];
        let mut columns: Vec<SparseVec> = vec![Vec::new(); src.dim()];
        let mut terms = Vec::new();
        let mut current = usize::MAX;
        for (i, &raw) in dst.free.iter().enumerate() {
            let (tuple, o) = (raw / w, raw % w);
            if tuple != current {
                current = tuple;
                terms.clear();
                plan.terms(&unflatten(tuple, in_shape), &mut terms);
            }
            let mut row: BTreeMap<usize, Scalar> = BTreeMap::new();
            for term in &terms {
                match term.map {
                    None => {
                        for (k, v) in &raw_to_coord[term.input * w + o] {
                            *row.entry(*k).or_default() += &(&term.coeff * v);
                        }
                    }
                    Some(m) => {
                        let map = &plan.maps[m];
                        for o2 in 0..w {
                            let x = map.get(o, o2);
                            if x.is_zero() {
                                continue;
                            }
                            let c = &term.coeff * x;
                            for (k, v) in &raw_to_coord[term.input * w + o2] {
                                *row.entry(*k).or_default() += &(&c * v);
                            }
                        }
                    }
                }
            }
            for (k, v) in row {
                if !v.is_zero() {
                    columns[k].push((i, v));
                }
            }
        }
        Ok(SparseMatrix::new(dst.dim(), columns))
    }
}

/// Number of raw coefficients of an `n`-cochain: `C(d,2)^(n−1)·d·w`.
/// Saturates at `usize::MAX`.
pub fn coefficient_count(d: usize, w: usize, n: usize) -> usize {
    let p = pair_count(d);
    let mut acc = d.saturating_mul(w);
    for _ in 1..n {
        acc = acc.saturating_mul(p);
    }
    acc
}

/// Coefficient count of `n`-cochains of an embedding tensor.
pub fn tensor_coefficient_count(et: &EmbeddingTensor, n: usize) -> usize {
    coefficient_count(et.vdim(), et.ldim(), n)
}

pub fn cochain_space_basis(et: &EmbeddingTensor, n: usize) -> Result<SubspaceBasis> {
    if n == 0 {
        return Err(Error::InvalidParameter("cochain degree must be at least 1".into()));
    }
    Ok(CochainComplex::of_tensor(et).cochain_space_basis(n))
}

/// `δf` for an arbitrary Leibniz representation.
pub fn general_coboundary(rep: &LeibnizRepresentation, f: &Cochain) -> Result<Cochain> {
    CochainComplex::new(rep.clone())?.coboundary(f)
}

pub fn coboundary_matrix(et: &EmbeddingTensor, n: usize) -> Result<SparseMatrix> {
    if n == 0 {
        return Err(Error::InvalidParameter("cochain degree must be at least 1".into()));
    }
    CochainComplex::of_tensor(et).coboundary_matrix(n)
}

/// `δ_T g` for a 1-cochain `g: V → L` evaluated directly from
/// `−g(ρ(Tu,Tv)w) + [Tu,Tv,gw] + [Tu,gv,Tw] − Tρ(Tu,gv)w + [gu,Tv,Tw] − Tρ(gu,Tv)w`.
pub fn explicit_degree1_coboundary(et: &EmbeddingTensor, g: &Matrix) -> Result<Cochain> {
    let (n, m) = (et.ldim(), et.vdim());
    if g.rows() != n || g.cols() != m {
        return Err(Error::Dimension(format!(
            "1-cochain is {}x{}, expected {n}x{m}",
            g.rows(),
            g.cols()
        )));
    }
    let l = et.algebra();
    let rep = et.rep();
    let t = et.t();
    let tc: Vec<Vector> = (0..m).map(|u| t.column(u)).collect();
    let gc: Vec<Vector> = (0..m).map(|u| g.column(u)).collect();
    let ev: Vec<Vector> = (0..m).map(|u| unit_vector(m, u)).collect();
    let mut coeffs = Tensor::zeros(&[pair_count(m), m, n]);
    for (p, &(u, v)) in pairs(m).iter().enumerate() {
        for w in 0..m {
            let mut acc = g.apply(&rep.act(&tc[u], &tc[v], &ev[w]));
            acc = sub_vectors(&l.bracket(&tc[u], &tc[v], &gc[w]), &acc);
            axpy(&mut acc, &Scalar::one(), &l.bracket(&tc[u], &gc[v], &tc[w]));
            acc = sub_vectors(&acc, &t.apply(&rep.act(&tc[u], &gc[v], &ev[w])));
            axpy(&mut acc, &Scalar::one(), &l.bracket(&gc[u], &tc[v], &tc[w]));
            acc = sub_vectors(&acc, &t.apply(&rep.act(&gc[u], &tc[v], &ev[w])));
            coeffs.fibre_mut(&[p, w]).clone_from_slice(&acc);
        }
    }
    Ok(Cochain { degree: 2, coeffs })
}

/// Basis of `Fix(α) ⊆ L`.
pub fn zero_cochain_space(et: &EmbeddingTensor) -> SubspaceBasis {
    let n = et.ldim();
    kernel_basis(&et.alpha().sub(&Matrix::identity(n)))
}

fn require_regular(et: &EmbeddingTensor) -> Result<Matrix> {
    if !et.alpha().is_invertible() {
        return Err(Error::NotRegular("alpha".into()));
    }
    et.beta()
        .inverse()
        .ok_or_else(|| Error::NotRegular("beta".into()))
}

fn wp_matrix(et: &EmbeddingTensor, a: &[Scalar], b: &[Scalar], beta_inv: &Matrix) -> Matrix {
    let n = et.ldim();
    let l = et.algebra();
    let ad = Matrix::from_fn(n, n, |r, c| l.bracket(a, b, &unit_vector(n, c))[r].clone());
    let t = et.t();
    t.mul(&et.rep().action(a, b))
        .sub(&ad.mul(t))
        .mul(beta_inv)
}

/// `℘(a,b)v = Tρ(a,b)β⁻¹v − [a,b,Tβ⁻¹v]`.
pub fn wp(et: &EmbeddingTensor, z: &ZeroCochain) -> Result<Cochain> {
    let beta_inv = require_regular(et)?;
    if et.alpha().apply(&z.a) != z.a || et.alpha().apply(&z.b) != z.b {
        return Err(Error::NotFixed("witness pair".into()));
    }
    Ok(Cochain::from_matrix(&wp_matrix(et, &z.a, &z.b, &beta_inv)))
}

/// Raw coefficient vectors of `℘(aᵢ, bⱼ)` over basis pairs `i < j` of
/// `Fix(α)`, or `None` in the non-regular case.
fn wp_images(et: &EmbeddingTensor) -> Option<Vec<Vector>> {
    let beta_inv = require_regular(et).ok()?;
    let fix = zero_cochain_space(et);
    let fv = fix.vectors();
    let mut out = Vec::new();
    for i in 0..fv.len() {
        for j in i + 1..fv.len() {
            let g = wp_matrix(et, &fv[i], &fv[j], &beta_inv);
            out.push(Cochain::from_matrix(&g).coeffs.into_entries());
        }
    }
    Some(out)
}

/// `B¹` as a subspace of the raw degree-1 coefficient space, with a warning
/// when the setup is not regular.
pub fn degree_one_coboundaries(et: &EmbeddingTensor) -> (SubspaceBasis, Option<String>) {
    let count = tensor_coefficient_count(et, 1);
    match wp_images(et) {
        Some(v) if !v.is_empty() => (image_basis(&Matrix::from_columns(count, &v).expect("columns")), None),
        Some(_) => (SubspaceBasis::empty(count), None),
        None => (
            SubspaceBasis::empty(count),
            Some("non-regular: ℘ undefined, B¹ taken as 0".to_string()),
        ),
    }
}

/// Dimensions of `Cⁿ_T`, `Zⁿ_T`, `Bⁿ_T` and `Hⁿ_T`, after confirming `Bⁿ ⊆ Zⁿ`.
pub fn cohomology(et: &EmbeddingTensor, n: usize) -> Result<CohomologySummary> {
    if n == 0 {
        return Err(Error::InvalidParameter("cohomology degree must be at least 1".into()));
    }
    let cx = CochainComplex::of_tensor(et);
    let here = cx.space(n);
    let next = cx.space(n + 1);
    let dn = cx.coboundary_matrix_between(&here, &next)?;
    let dim_cochain = here.dim();
    let dim_cocycle = dim_cochain - dn.rank();
    let mut warnings = Vec::new();
    let dim_coboundary = if n == 1 {
        let (b1, warning) = degree_one_coboundaries(et);
        warnings.extend(warning);
        for (k, v) in b1.vectors().iter().enumerate() {
            let coords = here.coordinates(v).ok_or_else(|| {
                Error::Inconsistent(format!("℘-span vector {k} is not equivariant"))
            })?;
            if !dn.apply(&coords).iter().all(Scalar::is_zero) {
                return Err(Error::Inconsistent(format!(
                    "℘-span vector {k} is not a cocycle"
                )));
            }
        }
        b1.dim()
    } else {
        let prev = cx.space(n - 1);
        let dprev = cx.coboundary_matrix_between(&prev, &here)?;
        if !dn.mul(&dprev).is_zero() {
            return Err(Error::Inconsistent(format!(
                "δ∘δ ≠ 0 from degree {} to degree {}",
                n - 1,
                n + 1
            )));
        }
        dprev.rank()
    };
    Ok(CohomologySummary {
        degree: n,
        dim_cochain,
        dim_cocycle,
        dim_coboundary,
        dim_h: dim_cocycle - dim_coboundary,
        warnings,
    })
}

/// Whether two 1-cocycles differ by an element of `B¹`.
pub fn same_class(et: &EmbeddingTensor, f: &Cochain, g: &Cochain) -> Result<bool> {
    let cx = CochainComplex::of_tensor(et);
    for (name, c) in [("first", f), ("second", g)] {
        if c.degree != 1 {
            return Err(Error::InvalidParameter(format!(
                "{name} cochain has degree {}, expected 1",
                c.degree
            )));
        }
        let img = cx.coboundary(c)?;
        if !img.is_zero() {
            return Err(Error::NotCocycle(format!("{name} cochain")));
        }
    }
    let diff = sub_vectors(g.coeffs.entries(), f.coeffs.entries());
    let (b1, _) = degree_one_coboundaries(et);
    Ok(membership(&diff, &b1).is_some())
}
