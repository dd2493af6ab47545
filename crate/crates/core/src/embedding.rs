//! Embedding tensors on representations, the graph criterion, the induced
//! 3-Hom-Leibniz algebra and Leibniz representation, morphisms, and the
//! standard example constructions.

use crate::algebra::{check_3hl_hom, ThreeHomLeibnizAlgebra, ThreeHomLieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{sub_vectors, unit_vector, Matrix, SubspaceBasis, Tensor, Vector};
use crate::report::CheckReport;
use crate::representation::{
    adjoint_representation, check_representation, direct_sum_representation,
    hemisemidirect_product, LeibnizRepresentation, Representation,
};
use crate::scalar::Scalar;

pub const LAW_ET_TWIST: &str = "embedding-twist";
pub const LAW_ET_BRACKET: &str = "embedding-bracket";
pub const LAW_HOM_BETA: &str = "morphism-beta";
pub const LAW_HOM_T: &str = "morphism-tensor";
pub const LAW_HOM_ACTION: &str = "morphism-action";
pub const LAW_F_TWIST: &str = "f-twist";
pub const LAW_F_ACTION: &str = "f-action";
pub const LAW_DERIVATION: &str = "derivation";
pub const LAW_SQUARE_ZERO: &str = "square-zero";
pub const LAW_COMMUTES_ALPHA: &str = "commutes-with-alpha";

fn check_t_shape(rep: &Representation, t: &Matrix) -> Result<()> {
    if t.rows() != rep.ldim() || t.cols() != rep.vdim() {
        return Err(Error::Dimension(format!(
            "tensor is {}x{}, expected {}x{}",
            t.rows(),
            t.cols(),
            rep.ldim(),
            rep.vdim()
        )));
    }
    Ok(())
}

fn columns(m: &Matrix) -> Vec<Vector> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

fn check_matrix_eq(report: &mut CheckReport, law: &str, lhs: &Matrix, rhs: &Matrix) {
    for c in 0..lhs.cols() {
        report.expect_eq(law, &[c], lhs.column(c), rhs.column(c));
    }
}

fn require_rep(rep: &Representation) -> Result<()> {
    let r = check_representation(rep)?;
    if !r.passed() {
        return Err(Error::precondition("input is not a representation", r));
    }
    Ok(())
}

/// Checks `T∘β = α∘T` column by column and `[Tu,Tv,Tw] = Tρ(Tu,Tv)w` on
/// all basis triples of `V`.
pub fn check_embedding_tensor(rep: &Representation, t: &Matrix) -> Result<CheckReport> {
    check_t_shape(rep, t)?;
    require_rep(rep)?;
    Ok(embedding_report(rep, t))
}

fn embedding_report(rep: &Representation, t: &Matrix) -> CheckReport {
    let mut report = CheckReport::new();
    check_matrix_eq(&mut report, LAW_ET_TWIST, &t.mul(rep.beta()), &rep.alpha().mul(t));
    let tc = columns(t);
    let m = rep.vdim();
    let l = rep.algebra();
    for u in 0..m {
        for v in 0..m {
            let act = rep.action(&tc[u], &tc[v]);
            for w in 0..m {
                let lhs = l.bracket(&tc[u], &tc[v], &tc[w]);
                let rhs = t.apply(&act.column(w));
                report.expect_eq(LAW_ET_BRACKET, &[u, v, w], lhs, rhs);
            }
        }
    }
    report
}

/// Decides whether `{Tu + u}` is closed under the bracket and the twist of
/// the hemisemidirect product, by subspace membership in `L ⊕ V`.
pub fn graph_is_subalgebra(rep: &Representation, t: &Matrix) -> Result<bool> {
    check_t_shape(rep, t)?;
    let n = rep.ldim();
    let m = rep.vdim();
    let h = hemisemidirect_product(rep);
    let gens: Vec<Vector> = (0..m)
        .map(|u| {
            let mut g = t.column(u);
            g.extend(unit_vector(m, u));
            g
        })
        .collect();
    let graph = SubspaceBasis::new(n + m, gens.clone())?;
    for g in &gens {
        if !graph.contains(&h.twist().apply(g)) {
            return Ok(false);
        }
    }
    for a in &gens {
        for b in &gens {
            for c in &gens {
                if !graph.contains(&h.bracket(a, b, c)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// A validated embedding tensor `T: V → L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingTensor {
    rep: Representation,
    t: Matrix,
}

impl EmbeddingTensor {
    pub fn new(rep: Representation, t: Matrix) -> Result<Self> {
        let report = check_embedding_tensor(&rep, &t)?;
        if !report.passed() {
            return Err(Error::precondition("matrix is not an embedding tensor", report));
        }
        Ok(EmbeddingTensor { rep, t })
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn t(&self) -> &Matrix {
        &self.t
    }

    pub fn algebra(&self) -> &ThreeHomLieAlgebra {
        self.rep.algebra()
    }

    pub fn alpha(&self) -> &Matrix {
        self.rep.alpha()
    }

    pub fn beta(&self) -> &Matrix {
        self.rep.beta()
    }

    pub fn ldim(&self) -> usize {
        self.rep.ldim()
    }

    pub fn vdim(&self) -> usize {
        self.rep.vdim()
    }
}

/// `(V, [u,v,w]_T = ρ(Tu,Tv)w, β)`.
pub fn induced_leibniz(et: &EmbeddingTensor) -> ThreeHomLeibnizAlgebra {
    let m = et.vdim();
    let tc = columns(&et.t);
    let mut table = Tensor::zeros(&[m, m, m, m]);
    for u in 0..m {
        for v in 0..m {
            let act = et.rep.action(&tc[u], &tc[v]);
            for w in 0..m {
                table.fibre_mut(&[u, v, w]).clone_from_slice(&act.column(w));
            }
        }
    }
    ThreeHomLeibnizAlgebra::new(m, table, et.beta().clone()).expect("consistent shapes")
}

/// The representation of the induced algebra on `L` with twist `α`:
/// `l(u,v,x) = [Tu,Tv,x]`, `m(u,x,v) = [Tu,x,Tv] − Tρ(Tu,x)v`,
/// `r(x,u,v) = [x,Tu,Tv] − Tρ(x,Tu)v`.
pub fn induced_representation(et: &EmbeddingTensor) -> LeibnizRepresentation {
    let n = et.ldim();
    let m = et.vdim();
    let l = et.algebra();
    let tc = columns(&et.t);
    let e: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
    let mut lt = Tensor::zeros(&[m, m, n, n]);
    let mut mt = Tensor::zeros(&[m, n, m, n]);
    let mut rt = Tensor::zeros(&[n, m, m, n]);
    for u in 0..m {
        for v in 0..m {
            for x in 0..n {
                lt.fibre_mut(&[u, v, x])
                    .clone_from_slice(&l.bracket(&tc[u], &tc[v], &e[x]));
            }
        }
    }
    for u in 0..m {
        for x in 0..n {
            let act_ux = et.rep.action(&tc[u], &e[x]);
            let act_xu = et.rep.action(&e[x], &tc[u]);
            for v in 0..m {
                let val = sub_vectors(
                    &l.bracket(&tc[u], &e[x], &tc[v]),
                    &et.t.apply(&act_ux.column(v)),
                );
                mt.fibre_mut(&[u, x, v]).clone_from_slice(&val);
                let val = sub_vectors(
                    &l.bracket(&e[x], &tc[u], &tc[v]),
                    &et.t.apply(&act_xu.column(v)),
                );
                rt.fibre_mut(&[x, u, v]).clone_from_slice(&val);
            }
        }
    }
    LeibnizRepresentation::new(induced_leibniz(et), n, lt, mt, rt, et.alpha().clone())
        .expect("consistent shapes")
}

/// A pair `(ψ_L, ψ_V)` proposed as a morphism between embedding tensors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtMorphism {
    pub psi_l: Matrix,
    pub psi_v: Matrix,
}

/// Checks that `(ψ_L, ψ_V)` is a morphism from `src` (`T′`) to `dst` (`T`):
/// `ψ_L` is an algebra endomorphism, `β∘ψ_V = ψ_V∘β`, `T∘ψ_V = ψ_L∘T′` and
/// `ψ_V(ρ(x,y)u) = ρ(ψ_L x, ψ_L y)ψ_V(u)` on basis tuples `(x, y, u)`.
pub fn check_et_hom(
    hom: &EtMorphism,
    src: &EmbeddingTensor,
    dst: &EmbeddingTensor,
) -> Result<CheckReport> {
    if src.rep != dst.rep {
        return Err(Error::InvalidInput(
            "source and target tensors must share a representation".into(),
        ));
    }
    let rep = &dst.rep;
    let (n, m) = (rep.ldim(), rep.vdim());
    for (name, mat, d) in [("psi_L", &hom.psi_l, n), ("psi_V", &hom.psi_v, m)] {
        if mat.rows() != d || mat.cols() != d {
            return Err(Error::Dimension(format!(
                "{name} is {}x{}, expected {d}x{d}",
                mat.rows(),
                mat.cols()
            )));
        }
    }
    let mut report = check_3hl_hom(&hom.psi_l, rep.algebra(), rep.algebra())?;
    let beta = rep.beta();
    check_matrix_eq(&mut report, LAW_HOM_BETA, &beta.mul(&hom.psi_v), &hom.psi_v.mul(beta));
    check_matrix_eq(
        &mut report,
        LAW_HOM_T,
        &dst.t.mul(&hom.psi_v),
        &hom.psi_l.mul(&src.t),
    );
    let pl = columns(&hom.psi_l);
    for x in 0..n {
        for y in 0..n {
            let lhs = hom.psi_v.mul(&rep.basis_action(x, y));
            let rhs = rep.action(&pl[x], &pl[y]).mul(&hom.psi_v);
            for u in 0..m {
                report.expect_eq(LAW_HOM_ACTION, &[x, y, u], lhs.column(u), rhs.column(u));
            }
        }
    }
    Ok(report)
}

/// Which standard construction [`example_tensor`] should build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExampleKind {
    /// `T = Id` on the adjoint representation.
    Identity,
    /// A square-zero derivation commuting with `α`, on the adjoint representation.
    Derivation(Matrix),
    /// `T(x₁,…,xₙ) = x₁ + ⋯ + xₙ` on `⊕ⁿL`.
    Sum(usize),
    /// The projection onto summand `index` (0-based) of `⊕ⁿL`.
    Projection { copies: usize, index: usize },
    /// A map `f` with `α∘f = f∘α` and `f([x,f(u),v]) = [x,f(u),f(v)]`, on the
    /// adjoint representation.
    CustomF(Matrix),
}

fn parameter_error(what: &str, report: CheckReport) -> Error {
    Error::precondition(format!("parameter violates {what}"), report)
}

/// `D[x,y,z] = [Dx,y,z] + [x,Dy,z] + [x,y,Dz]` on basis triples.
pub fn check_derivation(l: &ThreeHomLieAlgebra, d: &Matrix) -> CheckReport {
    let n = l.dim();
    let dc = columns(d);
    let e: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
    let mut report = CheckReport::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = d.apply(&l.basis_bracket(x, y, z));
                let mut rhs = l.bracket(&dc[x], &e[y], &e[z]);
                crate::linalg::axpy(&mut rhs, &Scalar::one(), &l.bracket(&e[x], &dc[y], &e[z]));
                crate::linalg::axpy(&mut rhs, &Scalar::one(), &l.bracket(&e[x], &e[y], &dc[z]));
                report.expect_eq(LAW_DERIVATION, &[x, y, z], lhs, rhs);
            }
        }
    }
    report
}

/// The two conditions on `f` quantified over basis `x ∈ L` and `u, v ∈ V`.
pub fn check_custom_f(rep: &Representation, f: &Matrix) -> Result<CheckReport> {
    check_t_shape(rep, f)?;
    let mut report = CheckReport::new();
    check_matrix_eq(&mut report, LAW_F_TWIST, &rep.alpha().mul(f), &f.mul(rep.beta()));
    let n = rep.ldim();
    let m = rep.vdim();
    let fc = columns(f);
    let l = rep.algebra();
    for x in 0..n {
        let ex = unit_vector(n, x);
        for u in 0..m {
            let act = rep.action(&ex, &fc[u]);
            for v in 0..m {
                let lhs = f.apply(&act.column(v));
                let rhs = l.bracket(&ex, &fc[u], &fc[v]);
                report.expect_eq(LAW_F_ACTION, &[x, u, v], lhs, rhs);
            }
        }
    }
    Ok(report)
}

/// Builds the representation and matrix of a standard example and confirms
/// the result is an embedding tensor.
pub fn example_tensor(l: &ThreeHomLieAlgebra, kind: &ExampleKind) -> Result<EmbeddingTensor> {
    let n = l.dim();
    let square = |name: &str, d: &Matrix| -> Result<()> {
        if d.rows() != n || d.cols() != n {
            return Err(Error::Dimension(format!(
                "{name} is {}x{}, expected {n}x{n}",
                d.rows(),
                d.cols()
            )));
        }
        Ok(())
    };
    let (rep, t) = match kind {
        ExampleKind::Identity => (adjoint_representation(l)?, Matrix::identity(n)),
        ExampleKind::Derivation(d) => {
            square("derivation", d)?;
            let rep = adjoint_representation(l)?;
            let r = check_derivation(l, d);
            if !r.passed() {
                return Err(parameter_error("the derivation rule", r));
            }
            let mut r = CheckReport::new();
            check_matrix_eq(&mut r, LAW_SQUARE_ZERO, &d.mul(d), &Matrix::zeros(n, n));
            if !r.passed() {
                return Err(parameter_error("D² = 0", r));
            }
            let mut r = CheckReport::new();
            check_matrix_eq(&mut r, LAW_COMMUTES_ALPHA, &l.alpha().mul(d), &d.mul(l.alpha()));
            if !r.passed() {
                return Err(parameter_error("α∘D = D∘α", r));
            }
            (rep, d.clone())
        }
        ExampleKind::Sum(copies) => {
            let rep = direct_sum_representation(l, *copies)?;
            let t = (1..*copies).fold(Matrix::identity(n), |acc, _| acc.hstack(&Matrix::identity(n)));
            (rep, t)
        }
        ExampleKind::Projection { copies, index } => {
            if *index >= *copies {
                return Err(Error::InvalidParameter(format!(
                    "projection index {index} out of range for {copies} summands"
                )));
            }
            let rep = direct_sum_representation(l, *copies)?;
            let t = Matrix::from_fn(n, n * copies, |r, c| {
                if c == index * n + r {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            });
            (rep, t)
        }
        ExampleKind::CustomF(f) => {
            square("f", f)?;
            let rep = adjoint_representation(l)?;
            let r = check_custom_f(&rep, f)?;
            if !r.passed() {
                return Err(parameter_error("the conditions on f", r));
            }
            (rep, f.clone())
        }
    };
    let report = check_embedding_tensor(&rep, &t)?;
    if !report.passed() {
        return Err(Error::Inconsistent(format!(
            "example construction did not yield an embedding tensor ({} failures)",
            report.failures.len()
        )));
    }
    Ok(EmbeddingTensor { rep, t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_3h_leibniz, check_3h_leibniz_hom};
    use crate::fixtures::{e1, e1_derivation};
    use crate::linalg::int_vector;
    use crate::representation::check_leibniz_representation;

    #[test]
    fn zero_tensor() {
        let rep = adjoint_representation(&e1()).unwrap();
        let t = Matrix::zeros(4, 4);
        assert!(check_embedding_tensor(&rep, &t).unwrap().passed());
        assert!(graph_is_subalgebra(&rep, &t).unwrap());
        let et = EmbeddingTensor::new(rep, t).unwrap();
        assert!(induced_leibniz(&et).table().is_zero());
        let ir = induced_representation(&et);
        assert!(ir.l_tensor().is_zero() && ir.m_tensor().is_zero() && ir.r_tensor().is_zero());
    }

    #[test]
    fn identity_tensor() {
        let l = e1();
        let et = example_tensor(&l, &ExampleKind::Identity).unwrap();
        assert!(graph_is_subalgebra(et.rep(), et.t()).unwrap());
        let ind = induced_leibniz(&et);
        assert_eq!(ind.table(), l.table());
        assert!(check_3h_leibniz(&ind).passed());
        assert!(check_3h_leibniz_hom(et.t(), &ind, &l.to_leibniz()).unwrap().passed());
        let ir = induced_representation(&et);
        assert!(ir.m_tensor().is_zero());
        assert_eq!(ir.l_tensor().fibre(&[0, 1, 2]), &int_vector(&[0, 0, 0, 1])[..]);
        assert!(check_leibniz_representation(&ir).unwrap().passed());
    }

    #[test]
    fn derivation_tensor() {
        let l = e1();
        let et = example_tensor(&l, &ExampleKind::Derivation(e1_derivation())).unwrap();
        assert!(induced_leibniz(&et).table().is_zero());
        let bad = Matrix::identity(4);
        assert!(matches!(
            example_tensor(&l, &ExampleKind::Derivation(bad)),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn sum_and_projection() {
        let l = e1();
        let et = example_tensor(&l, &ExampleKind::Sum(2)).unwrap();
        assert_eq!(et.t(), &Matrix::identity(4).hstack(&Matrix::identity(4)));
        let et = example_tensor(&l, &ExampleKind::Projection { copies: 2, index: 0 }).unwrap();
        assert_eq!(et.t(), &Matrix::identity(4).hstack(&Matrix::zeros(4, 4)));
        assert!(example_tensor(&l, &ExampleKind::Projection { copies: 2, index: 2 }).is_err());
    }

    #[test]
    fn violating_tensor_rejected_by_both_criteria() {
        let rep = adjoint_representation(&e1()).unwrap();
        let mut t = Matrix::zeros(4, 4);
        t.set(0, 0, Scalar::one());
        t.set(1, 1, Scalar::one());
        t.set(2, 2, Scalar::one());
        let r = check_embedding_tensor(&rep, &t).unwrap();
        assert!(!r.passed());
        assert!(!graph_is_subalgebra(&rep, &t).unwrap());
        assert!(EmbeddingTensor::new(rep, t).is_err());
    }

    #[test]
    fn trivial_morphisms() {
        let et = example_tensor(&e1(), &ExampleKind::Identity).unwrap();
        let id = EtMorphism {
            psi_l: Matrix::identity(4),
            psi_v: Matrix::identity(4),
        };
        assert!(check_et_hom(&id, &et, &et).unwrap().passed());
        let zero = EtMorphism {
            psi_l: Matrix::zeros(4, 4),
            psi_v: Matrix::zeros(4, 4),
        };
        assert!(check_et_hom(&zero, &et, &et).unwrap().passed());
    }
}
