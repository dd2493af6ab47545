//! 3-Hom-Lie, Hom-Leibniz and 3-Hom-Leibniz algebras given by structure
//! constants, with exhaustive axiom checkers over basis tuples.
//!
//! Every checker enumerates basis tuples in lexicographic order, so reports
//! are deterministic. Multilinearity makes basis checks equivalent to checks
//! on arbitrary vectors.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{add_vectors, unit_vector, Matrix, Tensor, Vector};
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::wedge::{pair_count, pairs, triples, wedge, wedge_square};

pub const LAW_SKEW: &str = "skew-symmetry";
pub const LAW_MULTIPLICATIVE: &str = "multiplicativity";
pub const LAW_FILIPPOV: &str = "hom-filippov-jacobi";
pub const LAW_LEIBNIZ3: &str = "3-hom-leibniz";
pub const LAW_HOM_LEIBNIZ: &str = "hom-leibniz";
pub const LAW_HOM_LEIBNIZ_PRINTED: &str = "hom-leibniz (printed variant)";
pub const LAW_TWIST_INTERTWINING: &str = "twist-intertwining";
pub const LAW_BRACKET_PRESERVATION: &str = "bracket-preservation";

fn check_square(name: &str, m: &Matrix, dim: usize) -> Result<()> {
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::Dimension(format!(
            "{name} is {}x{}, expected {dim}x{dim}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// A finite-dimensional 3-Hom-Lie algebra `(L, [·,·,·], α)`.
///
/// Only brackets of strictly increasing basis triples are stored; all other
/// basis brackets follow by permutation sign, and any repeated index gives
/// zero. Skew-symmetry therefore holds by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeHomLieAlgebra {
    dim: usize,
    alpha: Matrix,
    constants: BTreeMap<(usize, usize, usize), Vector>,
    table: Tensor,
}

impl ThreeHomLieAlgebra {
    /// `entries` maps strictly increasing triples `(i, j, k)` (0-based) to the
    /// coordinate vector of `[eᵢ, eⱼ, e_k]`. Omitted triples bracket to zero.
    pub fn new(
        dim: usize,
        alpha: Matrix,
        entries: impl IntoIterator<Item = ((usize, usize, usize), Vector)>,
    ) -> Result<Self> {
        check_square("alpha", &alpha, dim)?;
        let mut constants = BTreeMap::new();
        for ((i, j, k), v) in entries {
            if !(i < j && j < k && k < dim) {
                return Err(Error::InvalidInput(format!(
                    "bracket key ({i}, {j}, {k}) is not a strictly increasing triple below {dim}"
                )));
            }
            if v.len() != dim {
                return Err(Error::Dimension(format!(
                    "bracket value for ({i}, {j}, {k}) has length {}, expected {dim}",
                    v.len()
                )));
            }
            if constants.insert((i, j, k), v).is_some() {
                return Err(Error::InvalidInput(format!(
                    "bracket key ({i}, {j}, {k}) given twice"
                )));
            }
        }
        constants.retain(|_, v: &mut Vector| v.iter().any(|x| !x.is_zero()));
        let mut table = Tensor::zeros(&[dim, dim, dim, dim]);
        for (&(i, j, k), v) in &constants {
            let neg: Vector = v.iter().map(|x| -x).collect();
            for (idx, odd) in [
                ([i, j, k], false),
                ([j, k, i], false),
                ([k, i, j], false),
                ([j, i, k], true),
                ([i, k, j], true),
                ([k, j, i], true),
            ] {
                table
                    .fibre_mut(&idx)
                    .clone_from_slice(if odd { &neg } else { v });
            }
        }
        Ok(ThreeHomLieAlgebra {
            dim,
            alpha,
            constants,
            table,
        })
    }

    pub fn abelian(dim: usize, alpha: Matrix) -> Result<Self> {
        Self::new(dim, alpha, [])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    /// Nonzero stored brackets, keyed by increasing triples.
    pub fn constants(&self) -> &BTreeMap<(usize, usize, usize), Vector> {
        &self.constants
    }

    /// The expanded `dim⁴` table of `[eᵢ, eⱼ, e_k]` coordinates.
    pub fn table(&self) -> &Tensor {
        &self.table
    }

    pub fn basis_bracket(&self, i: usize, j: usize, k: usize) -> Vector {
        self.table.fibre(&[i, j, k]).to_vec()
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        self.table.trilinear(x, y, z)
    }

    pub fn is_regular(&self) -> bool {
        self.alpha.is_invertible()
    }

    /// The same bracket viewed as an unconstrained ternary operation.
    pub fn to_leibniz(&self) -> ThreeHomLeibnizAlgebra {
        ThreeHomLeibnizAlgebra {
            dim: self.dim,
            twist: self.alpha.clone(),
            table: self.table.clone(),
        }
    }
}

/// A Hom-Leibniz algebra: binary bracket without symmetry, plus a twist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLeibnizAlgebra {
    dim: usize,
    twist: Matrix,
    table: Tensor,
}

impl HomLeibnizAlgebra {
    /// `table` has shape `[dim, dim, dim]`, entry `[i, j, l]` being the
    /// `l`-th coordinate of `[eᵢ, eⱼ]`.
    pub fn new(dim: usize, table: Tensor, twist: Matrix) -> Result<Self> {
        check_square("twist", &twist, dim)?;
        if table.shape() != [dim, dim, dim] {
            return Err(Error::Dimension(format!(
                "binary structure constants have shape {:?}, expected [{dim}, {dim}, {dim}]",
                table.shape()
            )));
        }
        Ok(HomLeibnizAlgebra { dim, twist, table })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn table(&self) -> &Tensor {
        &self.table
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.table.bilinear(x, y)
    }
}

/// A 3-Hom-Leibniz algebra: ternary bracket with no assumed symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeHomLeibnizAlgebra {
    dim: usize,
    twist: Matrix,
    table: Tensor,
}

impl ThreeHomLeibnizAlgebra {
    /// `table` has shape `[dim; 4]`, entry `[i, j, k, l]` being the `l`-th
    /// coordinate of `[eᵢ, eⱼ, e_k]`.
    pub fn new(dim: usize, table: Tensor, twist: Matrix) -> Result<Self> {
        check_square("twist", &twist, dim)?;
        if table.shape() != [dim, dim, dim, dim] {
            return Err(Error::Dimension(format!(
                "ternary structure constants have shape {:?}, expected [{dim}; 4]",
                table.shape()
            )));
        }
        Ok(ThreeHomLeibnizAlgebra { dim, twist, table })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn table(&self) -> &Tensor {
        &self.table
    }

    pub fn basis_bracket(&self, i: usize, j: usize, k: usize) -> Vector {
        self.table.fibre(&[i, j, k]).to_vec()
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        self.table.trilinear(x, y, z)
    }
}

fn basis(dim: usize) -> Vec<Vector> {
    (0..dim).map(|i| unit_vector(dim, i)).collect()
}

fn twist_columns(m: &Matrix) -> Vec<Vector> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

/// `[α a, α b, [x,y,z]] = [[a,b,x], α y, α z] + [α x, [a,b,y], α z] + [α x, α y, [a,b,z]]`
/// over all basis 5-tuples.
fn check_fundamental_identity(
    dim: usize,
    twist: &Matrix,
    table: &Tensor,
    law: &str,
    report: &mut CheckReport,
) {
    let tw = twist_columns(twist);
    let basic: Vec<Vector> = (0..dim * dim * dim)
        .map(|n| table.fibre(&[n / (dim * dim), (n / dim) % dim, n % dim]).to_vec())
        .collect();
    let zero: Vec<bool> = basic.iter().map(|v| v.iter().all(Scalar::is_zero)).collect();
    let br = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| table.trilinear(x, y, z);
    for a in 0..dim {
        for b in 0..dim {
            let base = (a * dim + b) * dim;
            let ab: Vec<&Vector> = (0..dim).map(|x| &basic[base + x]).collect();
            for x in 0..dim {
                for y in 0..dim {
                    for z in 0..dim {
                        let i = (x * dim + y) * dim + z;
                        if zero[i] && zero[base + x] && zero[base + y] && zero[base + z] {
                            continue;
                        }
                        let inner = &basic[i];
                        let lhs = br(&tw[a], &tw[b], inner);
                        let rhs = add_vectors(
                            &add_vectors(&br(ab[x], &tw[y], &tw[z]), &br(&tw[x], ab[y], &tw[z])),
                            &br(&tw[x], &tw[y], ab[z]),
                        );
                        report.expect_eq(law, &[a, b, x, y, z], lhs, rhs);
                    }
                }
            }
        }
    }
}

/// `twist([x,y,z]) = [twist x, twist y, twist z]` on the given triples.
fn check_multiplicative(
    twist: &Matrix,
    table: &Tensor,
    triples: impl IntoIterator<Item = (usize, usize, usize)>,
    report: &mut CheckReport,
) {
    let tw = twist_columns(twist);
    for (i, j, k) in triples {
        let lhs = twist.apply(table.fibre(&[i, j, k]));
        let rhs = table.trilinear(&tw[i], &tw[j], &tw[k]);
        report.expect_eq(LAW_MULTIPLICATIVE, &[i, j, k], lhs, rhs);
    }
}

fn all_triples(dim: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..dim * dim * dim).map(move |n| (n / (dim * dim), (n / dim) % dim, n % dim))
}

/// Checks skew-consistency of the expanded table, multiplicativity of α and
/// the Hom-Filippov-Jacobi identity.
pub fn check_3hl(l: &ThreeHomLieAlgebra) -> CheckReport {
    let mut report = CheckReport::new();
    let d = l.dim;
    for (i, j, k) in all_triples(d) {
        let stored = if i == j || j == k || i == k {
            vec![Scalar::zero(); d]
        } else {
            let mut idx = [i, j, k];
            let mut sign = 1;
            // bubble sort counting transpositions
            for p in 0..3 {
                for q in 0..2 - p {
                    if idx[q] > idx[q + 1] {
                        idx.swap(q, q + 1);
                        sign = -sign;
                    }
                }
            }
            let v = l
                .constants
                .get(&(idx[0], idx[1], idx[2]))
                .cloned()
                .unwrap_or_else(|| vec![Scalar::zero(); d]);
            if sign < 0 {
                v.iter().map(|x| -x).collect()
            } else {
                v
            }
        };
        report.expect_eq(LAW_SKEW, &[i, j, k], l.basis_bracket(i, j, k), stored);
    }
    check_multiplicative(&l.alpha, &l.table, triples(d), &mut report);
    check_fundamental_identity(d, &l.alpha, &l.table, LAW_FILIPPOV, &mut report);
    report
}

/// Checks twist multiplicativity and the ternary Leibniz identity on all
/// basis tuples.
pub fn check_3h_leibniz(a: &ThreeHomLeibnizAlgebra) -> CheckReport {
    let mut report = CheckReport::new();
    check_multiplicative(&a.twist, &a.table, all_triples(a.dim), &mut report);
    check_fundamental_identity(a.dim, &a.twist, &a.table, LAW_LEIBNIZ3, &mut report);
    report
}

fn check_ternary_hom(
    psi: &Matrix,
    src_twist: &Matrix,
    dst_twist: &Matrix,
    src: &Tensor,
    dst: &Tensor,
    triples: impl IntoIterator<Item = (usize, usize, usize)>,
) -> CheckReport {
    let mut report = CheckReport::new();
    let psi_alpha = psi.mul(src_twist);
    let alpha_psi = dst_twist.mul(psi);
    for j in 0..psi.cols() {
        report.expect_eq(
            LAW_TWIST_INTERTWINING,
            &[j],
            psi_alpha.column(j),
            alpha_psi.column(j),
        );
    }
    let cols = twist_columns(psi);
    for (i, j, k) in triples {
        let lhs = psi.apply(src.fibre(&[i, j, k]));
        let rhs = dst.trilinear(&cols[i], &cols[j], &cols[k]);
        report.expect_eq(LAW_BRACKET_PRESERVATION, &[i, j, k], lhs, rhs);
    }
    report
}

fn check_map_shape(psi: &Matrix, src_dim: usize, dst_dim: usize) -> Result<()> {
    if psi.rows() != dst_dim || psi.cols() != src_dim {
        return Err(Error::Dimension(format!(
            "map is {}x{}, expected {dst_dim}x{src_dim}",
            psi.rows(),
            psi.cols()
        )));
    }
    Ok(())
}

/// Checks `ψ∘α = α′∘ψ` and `ψ[x,y,z] = [ψx,ψy,ψz]′`.
pub fn check_3hl_hom(
    psi: &Matrix,
    src: &ThreeHomLieAlgebra,
    dst: &ThreeHomLieAlgebra,
) -> Result<CheckReport> {
    check_map_shape(psi, src.dim, dst.dim)?;
    Ok(check_ternary_hom(
        psi,
        &src.alpha,
        &dst.alpha,
        &src.table,
        &dst.table,
        triples(src.dim),
    ))
}

pub fn check_3h_leibniz_hom(
    psi: &Matrix,
    src: &ThreeHomLeibnizAlgebra,
    dst: &ThreeHomLeibnizAlgebra,
) -> Result<CheckReport> {
    check_map_shape(psi, src.dim, dst.dim)?;
    Ok(check_ternary_hom(
        psi,
        &src.twist,
        &dst.twist,
        &src.table,
        &dst.table,
        all_triples(src.dim),
    ))
}

/// The Hom-Leibniz algebra of fundamental objects on ∧²L:
/// `[x₁∧x₂, y₁∧y₂]′ = [x₁,x₂,y₁]∧α(y₂) + α(y₁)∧[x₁,x₂,y₂]`, twist `α∧α`.
pub fn fundamental_bracket(l: &ThreeHomLieAlgebra) -> Result<HomLeibnizAlgebra> {
    let report = check_3hl(l);
    if !report.passed() {
        return Err(Error::precondition("input is not a 3-Hom-Lie algebra", report));
    }
    let n = l.dim;
    let p = pair_count(n);
    let ps = pairs(n);
    let tw = twist_columns(&l.alpha);
    let mut table = Tensor::zeros(&[p, p, p]);
    for (xi, &(x1, x2)) in ps.iter().enumerate() {
        for (yi, &(y1, y2)) in ps.iter().enumerate() {
            let first = wedge(&l.basis_bracket(x1, x2, y1), &tw[y2]);
            let second = wedge(&tw[y1], &l.basis_bracket(x1, x2, y2));
            table
                .fibre_mut(&[xi, yi])
                .clone_from_slice(&add_vectors(&first, &second));
        }
    }
    HomLeibnizAlgebra::new(p, table, wedge_square(&l.alpha))
}

/// Checks twist multiplicativity and
/// `[α(x),[y,z]] = [[x,y],α(z)] + [α(y),[x,z]]` on all basis triples.
pub fn check_hom_leibniz(a: &HomLeibnizAlgebra) -> CheckReport {
    check_hom_leibniz_with(a, false)
}

/// As [`check_hom_leibniz`]; with `strict_printed` the variant whose last
/// term reads `[α(y),[x,y]]` is evaluated as an additional law.
pub fn check_hom_leibniz_with(a: &HomLeibnizAlgebra, strict_printed: bool) -> CheckReport {
    let mut report = CheckReport::new();
    let d = a.dim;
    let tw = twist_columns(&a.twist);
    let e = basis(d);
    for i in 0..d {
        for j in 0..d {
            let lhs = a.twist.apply(a.table.fibre(&[i, j]));
            let rhs = a.bracket(&tw[i], &tw[j]);
            report.expect_eq(LAW_MULTIPLICATIVE, &[i, j], lhs, rhs);
        }
    }
    for (x, y, z) in all_triples(d) {
        let yz = a.bracket(&e[y], &e[z]);
        let xy = a.bracket(&e[x], &e[y]);
        let lhs = a.bracket(&tw[x], &yz);
        let first = a.bracket(&xy, &tw[z]);
        let xz = a.bracket(&e[x], &e[z]);
        let rhs = add_vectors(&first, &a.bracket(&tw[y], &xz));
        report.expect_eq(LAW_HOM_LEIBNIZ, &[x, y, z], lhs.clone(), rhs);
        if strict_printed {
            let printed = add_vectors(&first, &a.bracket(&tw[y], &xy));
            report.expect_eq(LAW_HOM_LEIBNIZ_PRINTED, &[x, y, z], lhs, printed);
        }
    }
    if strict_printed {
        report.note("strict mode: the printed variant [α(y),[x,y]] was also evaluated");
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::e1;
    use crate::linalg::int_vector;
    use crate::wedge::pair_index;

    fn diag(d: &[i64]) -> Matrix {
        Matrix::diagonal(&int_vector(d))
    }

    #[test]
    fn e1_passes() {
        assert!(check_3hl(&e1()).passed());
    }

    #[test]
    fn zero_bracket_passes_with_any_twist() {
        let alpha = Matrix::from_ints(&[&[1, 2, 0], &[0, 3, 1], &[5, 0, 0]]);
        assert!(check_3hl(&ThreeHomLieAlgebra::abelian(3, alpha).unwrap()).passed());
    }

    #[test]
    fn twisted_e1_fails_multiplicativity_on_first_triple() {
        let l = ThreeHomLieAlgebra::new(4, diag(&[1, 1, 1, 2]), [((0, 1, 2), int_vector(&[0, 0, 0, 1]))])
            .unwrap();
        let r = check_3hl(&l);
        let failing: Vec<_> = r.failures_for(LAW_MULTIPLICATIVE).map(|f| f.tuple.clone()).collect();
        assert_eq!(failing, vec![vec![0, 1, 2]]);
        let f = r.failures_for(LAW_MULTIPLICATIVE).next().unwrap();
        assert_eq!(f.lhs, int_vector(&[0, 0, 0, 2]));
        assert_eq!(f.rhs, int_vector(&[0, 0, 0, 1]));
    }

    #[test]
    fn rejects_non_increasing_keys() {
        let r = ThreeHomLieAlgebra::new(4, Matrix::identity(4), [((1, 0, 2), int_vector(&[0, 0, 0, 1]))]);
        assert!(matches!(r, Err(Error::InvalidInput(_))));
        let r = ThreeHomLieAlgebra::new(4, Matrix::identity(4), [((0, 1, 2), int_vector(&[0, 1]))]);
        assert!(matches!(r, Err(Error::Dimension(_))));
    }

    #[test]
    fn homomorphism_examples() {
        let l = e1();
        assert!(check_3hl_hom(&Matrix::identity(4), &l, &l).unwrap().passed());
        assert!(check_3hl_hom(&Matrix::zeros(4, 4), &l, &l).unwrap().passed());
        for c in [-1, 0, 1, 2] {
            let psi = diag(&[1, 1, 1, c]);
            assert_eq!(check_3hl_hom(&psi, &l, &l).unwrap().passed(), c == 1, "c = {c}");
        }
        assert!(check_3hl_hom(&Matrix::identity(3), &l, &l).is_err());
    }

    #[test]
    fn fundamental_bracket_values() {
        let l = e1();
        let f = fundamental_bracket(&l).unwrap();
        assert_eq!(f.dim(), 6);
        let w = |i, j| unit_vector(6, pair_index(4, i, j));
        assert!(f.bracket(&w(0, 1), &w(2, 3)).iter().all(Scalar::is_zero));
        assert_eq!(f.bracket(&w(0, 1), &w(1, 2)), w(1, 3));
        assert!(check_hom_leibniz(&f).passed());

        let ab = fundamental_bracket(&ThreeHomLieAlgebra::abelian(3, Matrix::identity(3)).unwrap()).unwrap();
        assert!(ab.table().is_zero());
    }

    #[test]
    fn hom_leibniz_counterexample() {
        let mut t = Tensor::zeros(&[2, 2, 2]);
        t.set(&[0, 1, 0], Scalar::one());
        let a = HomLeibnizAlgebra::new(2, t, Matrix::identity(2)).unwrap();
        let r = check_hom_leibniz(&a);
        assert!(!r.passed());
        assert!(r.failures_for(LAW_HOM_LEIBNIZ).any(|f| f.tuple == vec![0, 1, 1]));
        let zero = HomLeibnizAlgebra::new(2, Tensor::zeros(&[2, 2, 2]), Matrix::identity(2)).unwrap();
        assert!(check_hom_leibniz(&zero).passed());
    }

    #[test]
    fn lie_algebra_as_leibniz() {
        assert!(check_3h_leibniz(&e1().to_leibniz()).passed());
        let z = ThreeHomLeibnizAlgebra::new(2, Tensor::zeros(&[2, 2, 2, 2]), Matrix::identity(2)).unwrap();
        assert!(check_3h_leibniz(&z).passed());
        let l = e1().to_leibniz();
        assert!(check_3h_leibniz_hom(&Matrix::identity(4), &l, &l).unwrap().passed());
        assert!(check_3h_leibniz_hom(&Matrix::zeros(4, 4), &l, &l).unwrap().passed());
    }
}
