//! Linear deformations `T + t𝔍` of an embedding tensor, treated as exact
//! polynomial identities in the formal parameter `t`.

use crate::cohomology::{same_class, Cochain, CochainComplex};
use crate::embedding::EmbeddingTensor;
use crate::error::{Error, Result};
use crate::linalg::{add_vectors, unit_vector, Matrix, Vector};
use crate::report::CheckReport;
use crate::scalar::Scalar;

pub const LAW_DEF_TWIST: &str = "deformation-twist";
pub const LAW_DEF_T1: &str = "deformation-t1";
pub const LAW_DEF_T2: &str = "deformation-t2";
pub const LAW_DEF_T3: &str = "deformation-t3";

pub const LAW_W_HOM_TWIST: &str = "witness-hom-twist";
pub const LAW_W_HOM_T1: &str = "witness-hom-t1";
pub const LAW_W_HOM_T2: &str = "witness-hom-t2";
pub const LAW_W_HOM_T3: &str = "witness-hom-t3";
pub const LAW_W_BETA: &str = "witness-beta";
pub const LAW_W_TENSOR_T1: &str = "witness-tensor-t1";
pub const LAW_W_TENSOR_T2: &str = "witness-tensor-t2";
pub const LAW_W_ACTION_T1: &str = "witness-action-t1";
pub const LAW_W_ACTION_T2: &str = "witness-action-t2";
pub const LAW_W_ACTION_T3: &str = "witness-action-t3";

fn check_shape(base: &EmbeddingTensor, j: &Matrix) -> Result<()> {
    if j.rows() != base.ldim() || j.cols() != base.vdim() {
        return Err(Error::Dimension(format!(
            "infinitesimal is {}x{}, expected {}x{}",
            j.rows(),
            j.cols(),
            base.ldim(),
            base.vdim()
        )));
    }
    Ok(())
}

fn columns(m: &Matrix) -> Vec<Vector> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

fn sum(vs: impl IntoIterator<Item = Vector>, n: usize) -> Vector {
    vs.into_iter()
        .fold(vec![Scalar::zero(); n], |acc, v| add_vectors(&acc, &v))
}

/// Checks the coefficients of `t⁰…t³` in `T_t∘β = α∘T_t` and
/// `[T_tu,T_tv,T_tw] = T_tρ(T_tu,T_tv)w` on basis triples of `V`.
pub fn check_linear_deformation(base: &EmbeddingTensor, inf: &Matrix) -> Result<CheckReport> {
    check_shape(base, inf)?;
    let mut report = CheckReport::new();
    let lhs = inf.mul(base.beta());
    let rhs = base.alpha().mul(inf);
    for c in 0..inf.cols() {
        report.expect_eq(LAW_DEF_TWIST, &[c], lhs.column(c), rhs.column(c));
    }
    let l = base.algebra();
    let rep = base.rep();
    let n = base.ldim();
    let m = base.vdim();
    let t = columns(base.t());
    let j = columns(inf);
    let ev: Vec<Vector> = (0..m).map(|u| unit_vector(m, u)).collect();
    let tm = base.t();
    let br = |a: &Vector, b: &Vector, c: &Vector| l.bracket(a, b, c);
    let act = |a: &Vector, b: &Vector, w: usize| rep.act(a, b, &ev[w]);
    for u in 0..m {
        for v in 0..m {
            for w in 0..m {
                let (tu, tv, tw) = (&t[u], &t[v], &t[w]);
                let (ju, jv, jw) = (&j[u], &j[v], &j[w]);
                let lhs = sum([br(tu, tv, jw), br(tu, jv, tw), br(ju, tv, tw)], n);
                let rhs = sum(
                    [
                        inf.apply(&act(tu, tv, w)),
                        tm.apply(&act(tu, jv, w)),
                        tm.apply(&act(ju, tv, w)),
                    ],
                    n,
                );
                report.expect_eq(LAW_DEF_T1, &[u, v, w], lhs, rhs);

                let lhs = sum([br(tu, jv, jw), br(ju, tv, jw), br(ju, jv, tw)], n);
                let rhs = sum(
                    [
                        inf.apply(&act(tu, jv, w)),
                        inf.apply(&act(ju, tv, w)),
                        tm.apply(&act(ju, jv, w)),
                    ],
                    n,
                );
                report.expect_eq(LAW_DEF_T2, &[u, v, w], lhs, rhs);

                let lhs = br(ju, jv, jw);
                let rhs = inf.apply(&act(ju, jv, w));
                report.expect_eq(LAW_DEF_T3, &[u, v, w], lhs, rhs);
            }
        }
    }
    Ok(report)
}

/// A validated pair `(base, 𝔍)` generating a linear deformation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearDeformation {
    base: EmbeddingTensor,
    infinitesimal: Matrix,
}

impl LinearDeformation {
    pub fn new(base: EmbeddingTensor, infinitesimal: Matrix) -> Result<Self> {
        let report = check_linear_deformation(&base, &infinitesimal)?;
        if !report.passed() {
            return Err(Error::precondition("map does not generate a linear deformation", report));
        }
        Ok(LinearDeformation {
            base,
            infinitesimal,
        })
    }

    pub fn base(&self) -> &EmbeddingTensor {
        &self.base
    }

    pub fn infinitesimal(&self) -> &Matrix {
        &self.infinitesimal
    }
}

/// Whether `δ_T 𝔍 = 0`. Fails with a not-a-cochain error when
/// `𝔍∘β ≠ α∘𝔍`.
pub fn infinitesimal_is_cocycle(base: &EmbeddingTensor, inf: &Matrix) -> Result<bool> {
    check_shape(base, inf)?;
    if inf.mul(base.beta()) != base.alpha().mul(inf) {
        return Err(Error::NotCochain("infinitesimal does not intertwine the twists".into()));
    }
    let cx = CochainComplex::of_tensor(base);
    Ok(cx.coboundary(&Cochain::from_matrix(inf))?.is_zero())
}

/// Two `α`-fixed elements of `L` proposed as an equivalence witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceWitness {
    a: Vector,
    b: Vector,
}

impl EquivalenceWitness {
    pub fn new(base: &EmbeddingTensor, a: Vector, b: Vector) -> Result<Self> {
        let w = EquivalenceWitness { a, b };
        w.validate(base)?;
        Ok(w)
    }

    pub fn a(&self) -> &[Scalar] {
        &self.a
    }

    pub fn b(&self) -> &[Scalar] {
        &self.b
    }

    fn validate(&self, base: &EmbeddingTensor) -> Result<()> {
        let n = base.ldim();
        for (name, v) in [("a", &self.a), ("b", &self.b)] {
            if v.len() != n {
                return Err(Error::Dimension(format!(
                    "witness {name} has length {}, expected {n}",
                    v.len()
                )));
            }
            if &base.alpha().apply(v) != v {
                return Err(Error::NotFixed(format!("witness {name} = {v:?}")));
            }
        }
        Ok(())
    }
}

fn require_deformation(base: &EmbeddingTensor, inf: &Matrix, which: &str) -> Result<()> {
    let r = check_linear_deformation(base, inf)?;
    if !r.passed() {
        return Err(Error::precondition(
            format!("{which} infinitesimal does not generate a linear deformation"),
            r,
        ));
    }
    Ok(())
}

struct Inverses {
    alpha: Matrix,
    beta: Matrix,
}

fn inverses(base: &EmbeddingTensor) -> Result<Inverses> {
    let alpha = base
        .alpha()
        .inverse()
        .ok_or_else(|| Error::NotRegular("alpha".into()))?;
    let beta = base
        .beta()
        .inverse()
        .ok_or_else(|| Error::NotRegular("beta".into()))?;
    Ok(Inverses { alpha, beta })
}

/// `(A, B) = (α⁻¹ad(a,b), β⁻¹ρ(a,b))`.
fn witness_maps(base: &EmbeddingTensor, w: &EquivalenceWitness, inv: &Inverses) -> (Matrix, Matrix) {
    let n = base.ldim();
    let l = base.algebra();
    let ad = Matrix::from_fn(n, n, |r, c| l.bracket(&w.a, &w.b, &unit_vector(n, c))[r].clone());
    let a = inv.alpha.mul(&ad);
    let b = inv.beta.mul(&base.rep().action(&w.a, &w.b));
    (a, b)
}

fn record_columns(report: &mut CheckReport, law: &str, lhs: &Matrix, rhs: &Matrix) {
    for c in 0..lhs.cols() {
        report.expect_eq(law, &[c], lhs.column(c), rhs.column(c));
    }
}

/// Checks every `t`-coefficient of conditions (1)–(3) for the pair
/// `(Id + tA, Id + tB)` to be a morphism from `T + t𝔍₂` to `T + t𝔍₁`,
/// together with `β∘(Id + tB) = (Id + tB)∘β`.
pub fn check_equivalence_witness(
    base: &EmbeddingTensor,
    inf1: &Matrix,
    inf2: &Matrix,
    w: &EquivalenceWitness,
) -> Result<CheckReport> {
    let inv = inverses(base)?;
    w.validate(base)?;
    require_deformation(base, inf1, "first")?;
    require_deformation(base, inf2, "second")?;
    let (am, bm) = witness_maps(base, w, &inv);
    let l = base.algebra();
    let rep = base.rep();
    let n = base.ldim();
    let m = base.vdim();
    let alpha = base.alpha();
    let beta = base.beta();
    let t = base.t();
    let mut report = CheckReport::new();

    // (1) Id + tA is a homomorphism
    record_columns(&mut report, LAW_W_HOM_TWIST, &am.mul(alpha), &alpha.mul(&am));
    let e: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
    let ac = columns(&am);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (ex, ey, ez) = (&e[x], &e[y], &e[z]);
                let (ax, ay, az) = (&ac[x], &ac[y], &ac[z]);
                let lhs = am.apply(&l.basis_bracket(x, y, z));
                let rhs = sum(
                    [l.bracket(ax, ey, ez), l.bracket(ex, ay, ez), l.bracket(ex, ey, az)],
                    n,
                );
                report.expect_eq(LAW_W_HOM_T1, &[x, y, z], lhs, rhs);
                let lhs = sum(
                    [l.bracket(ax, ay, ez), l.bracket(ax, ey, az), l.bracket(ex, ay, az)],
                    n,
                );
                report.expect_eq(LAW_W_HOM_T2, &[x, y, z], lhs, vec![Scalar::zero(); n]);
                report.expect_eq(LAW_W_HOM_T3, &[x, y, z], l.bracket(ax, ay, az), vec![Scalar::zero(); n]);
            }
        }
    }
    record_columns(&mut report, LAW_W_BETA, &beta.mul(&bm), &bm.mul(beta));

    // (2) (T + t𝔍₁)(Id + tB) = (Id + tA)(T + t𝔍₂)
    record_columns(
        &mut report,
        LAW_W_TENSOR_T1,
        &inf2.sub(inf1),
        &t.mul(&bm).sub(&am.mul(t)),
    );
    record_columns(&mut report, LAW_W_TENSOR_T2, &inf1.mul(&bm), &am.mul(inf2));

    // (3) (Id + tB)ρ(x,y) = ρ(x + tAx, y + tAy)(Id + tB)
    let zero_m = Matrix::zeros(m, m);
    for x in 0..n {
        for y in 0..n {
            let (ex, ey, ax, ay) = (&e[x], &e[y], &ac[x], &ac[y]);
            let rho = rep.basis_action(x, y);
            let lhs = bm.mul(&rho);
            let rhs = rep
                .action(ax, ey)
                .add(&rep.action(ex, ay))
                .add(&rho.mul(&bm));
            for u in 0..m {
                report.expect_eq(LAW_W_ACTION_T1, &[x, y, u], lhs.column(u), rhs.column(u));
            }
            let lhs = rep
                .action(ax, ay)
                .add(&rep.action(ax, ey).mul(&bm))
                .add(&rep.action(ex, ay).mul(&bm));
            for u in 0..m {
                report.expect_eq(LAW_W_ACTION_T2, &[x, y, u], lhs.column(u), zero_m.column(u));
            }
            let lhs = rep.action(ax, ay).mul(&bm);
            for u in 0..m {
                report.expect_eq(LAW_W_ACTION_T3, &[x, y, u], lhs.column(u), zero_m.column(u));
            }
        }
    }
    Ok(report)
}

/// Whether `𝔍₂ − 𝔍₁` lies in `B¹`.
pub fn deformations_same_class(base: &EmbeddingTensor, inf1: &Matrix, inf2: &Matrix) -> Result<bool> {
    require_deformation(base, inf1, "first")?;
    require_deformation(base, inf2, "second")?;
    same_class(base, &Cochain::from_matrix(inf1), &Cochain::from_matrix(inf2))
}

/// Heuristic search for a witness whose coordinates in the basis of
/// `Fix(α)` are integers in `[−bound, bound]`. Candidates are visited in
/// lexicographic order of `(a, b)` coordinates and the first passing one is
/// returned.
pub fn search_witness(
    base: &EmbeddingTensor,
    inf1: &Matrix,
    inf2: &Matrix,
    bound: u32,
) -> Result<Option<EquivalenceWitness>> {
    let inv = inverses(base)?;
    require_deformation(base, inf1, "first")?;
    require_deformation(base, inf2, "second")?;
    let fix = crate::cohomology::zero_cochain_space(base);
    let k = fix.dim();
    let n = base.ldim();
    let b = i64::from(bound);
    let range: Vec<i64> = (-b..=b).collect();
    let combine = |coords: &[i64]| -> Vector {
        let mut v = vec![Scalar::zero(); n];
        for (c, f) in coords.iter().zip(fix.vectors()) {
            crate::linalg::axpy(&mut v, &Scalar::from_int(*c), f);
        }
        v
    };
    let target = inf2.sub(inf1);
    let t = base.t();
    let total = 2 * k;
    let mut idx = vec![0usize; total];
    if range.is_empty() {
        return Ok(None);
    }
    loop {
        let coords: Vec<i64> = idx.iter().map(|&i| range[i]).collect();
        let w = EquivalenceWitness {
            a: combine(&coords[..k]),
            b: combine(&coords[k..]),
        };
        let (am, bm) = witness_maps(base, &w, &inv);
        if t.mul(&bm).sub(&am.mul(t)) == target
            && check_equivalence_witness(base, inf1, inf2, &w)?.passed()
        {
            return Ok(Some(w));
        }
        let mut p = total;
        loop {
            if p == 0 {
                return Ok(None);
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < range.len() {
                break;
            }
            idx[p] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{check_embedding_tensor, example_tensor, ExampleKind};
    use crate::fixtures::{e1, e1_derivation, e1_line_tensor};
    use crate::linalg::int_vector;

    fn identity_tensor() -> EmbeddingTensor {
        example_tensor(&e1(), &ExampleKind::Identity).unwrap()
    }

    #[test]
    fn zero_and_self_are_deformations() {
        let et = identity_tensor();
        assert!(check_linear_deformation(&et, &Matrix::zeros(4, 4)).unwrap().passed());
        assert!(check_linear_deformation(&et, et.t()).unwrap().passed());
        assert!(infinitesimal_is_cocycle(&et, &Matrix::zeros(4, 4)).unwrap());
        assert!(infinitesimal_is_cocycle(&et, et.t()).unwrap());
    }

    #[test]
    fn derivation_deforms_identity() {
        let et = identity_tensor();
        let d = e1_derivation();
        let r = check_linear_deformation(&et, &d).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(check_embedding_tensor(et.rep(), &d).unwrap().passed());
        assert!(infinitesimal_is_cocycle(&et, &d).unwrap());
    }

    #[test]
    fn non_equivariant_infinitesimal_is_not_a_cochain() {
        let l = crate::fixtures::e1_twisted();
        let et = example_tensor(&l, &ExampleKind::Identity).unwrap();
        let mut j = Matrix::zeros(4, 4);
        j.set(2, 0, Scalar::one());
        assert!(matches!(
            infinitesimal_is_cocycle(&et, &j),
            Err(Error::NotCochain(_))
        ));
    }

    #[test]
    fn trivial_witness() {
        let et = identity_tensor();
        let z = int_vector(&[0, 0, 0, 0]);
        let w = EquivalenceWitness::new(&et, z.clone(), z).unwrap();
        let j = Matrix::zeros(4, 4);
        assert!(check_equivalence_witness(&et, &j, &j, &w).unwrap().passed());
    }

    #[test]
    fn witness_on_line_tensor() {
        let et = e1_line_tensor();
        let w = EquivalenceWitness::new(&et, unit_vector(4, 0), unit_vector(4, 1)).unwrap();
        let j1 = Matrix::from_ints(&[&[1], &[2], &[0], &[3]]);
        let j2 = Matrix::from_ints(&[&[1], &[2], &[0], &[2]]);
        let r = check_equivalence_witness(&et, &j1, &j2, &w).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(deformations_same_class(&et, &j1, &j2).unwrap());
        let found = search_witness(&et, &j1, &j2, 1).unwrap();
        assert!(found.is_some());
        let far = Matrix::from_ints(&[&[2], &[2], &[0], &[3]]);
        assert!(!deformations_same_class(&et, &j1, &far).unwrap());
    }

    #[test]
    fn witness_must_be_fixed() {
        let l = crate::fixtures::e1_twisted();
        let et = example_tensor(&l, &ExampleKind::Identity).unwrap();
        assert!(matches!(
            EquivalenceWitness::new(&et, unit_vector(4, 3), unit_vector(4, 0)),
            Err(Error::NotFixed(_))
        ));
    }
}
