//! Representations of 3-Hom-Lie algebras and of 3-Hom-Leibniz algebras,
//! the adjoint and direct-sum representations, and the hemisemidirect
//! product.

use crate::algebra::{check_3h_leibniz, check_3hl, ThreeHomLeibnizAlgebra, ThreeHomLieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{add_vectors, zero_vector, Matrix, Tensor, Vector};
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::wedge::{pair_count, pair_index, pairs};

pub const LAW_EQ_2_2: &str = "rep-twist-compatibility";
pub const LAW_EQ_2_3: &str = "rep-commutator";
pub const LAW_EQ_2_4: &str = "rep-bracket";

pub const LAW_L_EQUIVARIANT: &str = "l-equivariance";
pub const LAW_M_EQUIVARIANT: &str = "m-equivariance";
pub const LAW_R_EQUIVARIANT: &str = "r-equivariance";
pub const LAW_LL: &str = "leibniz-rep-l-l";
pub const LAW_LM: &str = "leibniz-rep-l-m";
pub const LAW_LR: &str = "leibniz-rep-l-r";
pub const LAW_MB: &str = "leibniz-rep-m-bracket";
pub const LAW_RB: &str = "leibniz-rep-r-bracket";

/// A representation `(V; ρ, β)` of a 3-Hom-Lie algebra. `ρ` is stored on
/// increasing basis pairs only; `ρ(eⱼ,eᵢ) = −ρ(eᵢ,eⱼ)` and `ρ(eᵢ,eᵢ) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: ThreeHomLieAlgebra,
    vdim: usize,
    rho: Vec<Matrix>,
    beta: Matrix,
}

impl Representation {
    /// `rho` maps increasing 0-based pairs `(i, j)` to `vdim × vdim` matrices;
    /// omitted pairs act by zero.
    pub fn new(
        algebra: ThreeHomLieAlgebra,
        vdim: usize,
        rho: impl IntoIterator<Item = ((usize, usize), Matrix)>,
        beta: Matrix,
    ) -> Result<Self> {
        let n = algebra.dim();
        if beta.rows() != vdim || beta.cols() != vdim {
            return Err(Error::Dimension(format!(
                "beta is {}x{}, expected {vdim}x{vdim}",
                beta.rows(),
                beta.cols()
            )));
        }
        let mut slots: Vec<Option<Matrix>> = vec![None; pair_count(n)];
        for ((i, j), m) in rho {
            if !(i < j && j < n) {
                return Err(Error::InvalidInput(format!(
                    "action key ({i}, {j}) is not an increasing pair below {n}"
                )));
            }
            if m.rows() != vdim || m.cols() != vdim {
                return Err(Error::Dimension(format!(
                    "action matrix for ({i}, {j}) is {}x{}, expected {vdim}x{vdim}",
                    m.rows(),
                    m.cols()
                )));
            }
            let slot = &mut slots[pair_index(n, i, j)];
            if slot.is_some() {
                return Err(Error::InvalidInput(format!("action key ({i}, {j}) given twice")));
            }
            *slot = Some(m);
        }
        let rho = slots
            .into_iter()
            .map(|m| m.unwrap_or_else(|| Matrix::zeros(vdim, vdim)))
            .collect();
        Ok(Representation {
            algebra,
            vdim,
            rho,
            beta,
        })
    }

    pub fn algebra(&self) -> &ThreeHomLieAlgebra {
        &self.algebra
    }

    pub fn ldim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn alpha(&self) -> &Matrix {
        self.algebra.alpha()
    }

    /// Stored action matrices, one per increasing pair in basis order.
    pub fn pair_actions(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn basis_action(&self, i: usize, j: usize) -> Matrix {
        let n = self.ldim();
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.rho[pair_index(n, i, j)].clone(),
            std::cmp::Ordering::Greater => self.rho[pair_index(n, j, i)].scale(&Scalar::from_int(-1)),
            std::cmp::Ordering::Equal => Matrix::zeros(self.vdim, self.vdim),
        }
    }

    /// `ρ(x, y)` for arbitrary vectors of `L`.
    pub fn action(&self, x: &[Scalar], y: &[Scalar]) -> Matrix {
        let n = self.ldim();
        let mut out = Matrix::zeros(self.vdim, self.vdim);
        for (p, &(i, j)) in pairs(n).iter().enumerate() {
            let c = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            if !c.is_zero() && !self.rho[p].is_zero() {
                out = out.add(&self.rho[p].scale(&c));
            }
        }
        out
    }

    /// `ρ(x, y)u`.
    pub fn act(&self, x: &[Scalar], y: &[Scalar], u: &[Scalar]) -> Vector {
        let n = self.ldim();
        let mut out = zero_vector(self.vdim);
        for (p, &(i, j)) in pairs(n).iter().enumerate() {
            let c = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            if !c.is_zero() {
                crate::linalg::axpy(&mut out, &c, &self.rho[p].apply(u));
            }
        }
        out
    }

    pub fn is_regular(&self) -> bool {
        self.beta.is_invertible()
    }
}

fn cols(m: &Matrix) -> Vec<Vector> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

fn record_matrix_eq(report: &mut CheckReport, law: &str, prefix: &[usize], lhs: &Matrix, rhs: &Matrix) {
    if lhs == rhs {
        return;
    }
    for u in 0..lhs.cols() {
        let mut t = prefix.to_vec();
        t.push(u);
        report.expect_eq(law, &t, lhs.column(u), rhs.column(u));
    }
}

/// Checks the twist compatibility on basis pairs and the two quadratic
/// identities on basis 4-tuples `(x, y, a, b)`, each applied to every basis
/// vector of `V`. Tuples are reported as `(x, y, u)` or `(x, y, a, b, u)`.
pub fn check_representation(rep: &Representation) -> Result<CheckReport> {
    let base = check_3hl(&rep.algebra);
    if !base.passed() {
        return Err(Error::precondition("underlying algebra is not a 3-Hom-Lie algebra", base));
    }
    let n = rep.ldim();
    let alpha = rep.alpha();
    let beta = &rep.beta;
    let tw = cols(alpha);
    let basic: Vec<Matrix> = (0..n * n).map(|p| rep.basis_action(p / n, p % n)).collect();
    let twisted: Vec<Matrix> = (0..n * n).map(|p| rep.action(&tw[p / n], &tw[p % n])).collect();
    let rho = |i: usize, j: usize| &basic[i * n + j];
    let rho_tw = |i: usize, j: usize| &twisted[i * n + j];

    let mut report = CheckReport::new();
    for x in 0..n {
        for y in 0..n {
            let lhs = rho_tw(x, y).mul(beta);
            let rhs = beta.mul(rho(x, y));
            record_matrix_eq(&mut report, LAW_EQ_2_2, &[x, y], &lhs, &rhs);
        }
    }
    for x in 0..n {
        for y in 0..n {
            for a in 0..n {
                let xya = rep.algebra.basis_bracket(x, y, a);
                for b in 0..n {
                    let xyb = rep.algebra.basis_bracket(x, y, b);
                    // ρ(αx,αy)ρ(a,b) − ρ(αa,αb)ρ(x,y) = (ρ([x,y,a],αb) − ρ([x,y,b],αa))∘β
                    let lhs = rho_tw(x, y).mul(rho(a, b)).sub(&rho_tw(a, b).mul(rho(x, y)));
                    let rhs = rep
                        .action(&xya, &tw[b])
                        .sub(&rep.action(&xyb, &tw[a]))
                        .mul(beta);
                    record_matrix_eq(&mut report, LAW_EQ_2_3, &[x, y, a, b], &lhs, &rhs);

                    // ρ([x,y,a],αb)∘β − ρ(αy,αa)ρ(x,b) = ρ(αa,αx)ρ(y,b) + ρ(αx,αy)ρ(a,b)
                    let lhs = rep
                        .action(&xya, &tw[b])
                        .mul(beta)
                        .sub(&rho_tw(y, a).mul(rho(x, b)));
                    let rhs = rho_tw(a, x).mul(rho(y, b)).add(&rho_tw(x, y).mul(rho(a, b)));
                    record_matrix_eq(&mut report, LAW_EQ_2_4, &[x, y, a, b], &lhs, &rhs);
                }
            }
        }
    }
    Ok(report)
}

/// `ad(x, y)z = [x, y, z]` on `V = L` with `β = α`.
pub fn adjoint_representation(l: &ThreeHomLieAlgebra) -> Result<Representation> {
    direct_sum_representation(l, 1)
}

/// `⊕ⁿL` with `ρ(x,y)(x₁,…,xₙ) = ([x,y,x₁],…,[x,y,xₙ])` and `β = ⊕ⁿα`.
pub fn direct_sum_representation(l: &ThreeHomLieAlgebra, copies: usize) -> Result<Representation> {
    if copies == 0 {
        return Err(Error::InvalidParameter("number of summands must be at least 1".into()));
    }
    let report = check_3hl(l);
    if !report.passed() {
        return Err(Error::precondition("input is not a 3-Hom-Lie algebra", report));
    }
    let n = l.dim();
    let rho: Vec<((usize, usize), Matrix)> = pairs(n)
        .into_iter()
        .map(|(i, j)| {
            let ad = Matrix::from_fn(n, n, |r, c| l.basis_bracket(i, j, c)[r].clone());
            let blocks = vec![&ad; copies];
            ((i, j), Matrix::block_diagonal(&blocks))
        })
        .collect();
    let alphas = vec![l.alpha(); copies];
    Representation::new(l.clone(), n * copies, rho, Matrix::block_diagonal(&alphas))
}

/// The ternary bracket `[x+u, y+v, z+w] = [x,y,z] + ρ(x,y)w` on `L ⊕ V`
/// with twist `α ⊕ β`. `L` coordinates come first. No representation axiom
/// is assumed, so the construction can be used to test them.
pub fn hemisemidirect_product(rep: &Representation) -> ThreeHomLeibnizAlgebra {
    let n = rep.ldim();
    let m = rep.vdim;
    let d = n + m;
    let mut table = Tensor::zeros(&[d, d, d, d]);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = rep.algebra.basis_bracket(i, j, k);
                table.fibre_mut(&[i, j, k])[..n].clone_from_slice(&v);
            }
            let act = rep.basis_action(i, j);
            for w in 0..m {
                let col = act.column(w);
                table.fibre_mut(&[i, j, n + w])[n..].clone_from_slice(&col);
            }
        }
    }
    let twist = Matrix::block_diagonal(&[rep.alpha(), &rep.beta]);
    ThreeHomLeibnizAlgebra::new(d, table, twist).expect("consistent shapes")
}

/// A representation `(W; l, m, r, β)` of a 3-Hom-Leibniz algebra.
///
/// Actions are full tensors: `l` has shape `[d, d, w, w]`, `m` has shape
/// `[d, w, d, w]` and `r` has shape `[w, d, d, w]`, the last axis being the
/// output coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizRepresentation {
    algebra: ThreeHomLeibnizAlgebra,
    wdim: usize,
    l: Tensor,
    m: Tensor,
    r: Tensor,
    beta: Matrix,
}

impl LeibnizRepresentation {
    pub fn new(
        algebra: ThreeHomLeibnizAlgebra,
        wdim: usize,
        l: Tensor,
        m: Tensor,
        r: Tensor,
        beta: Matrix,
    ) -> Result<Self> {
        let d = algebra.dim();
        let w = wdim;
        for (name, t, shape) in [
            ("l", &l, [d, d, w, w]),
            ("m", &m, [d, w, d, w]),
            ("r", &r, [w, d, d, w]),
        ] {
            if t.shape() != shape {
                return Err(Error::Dimension(format!(
                    "action {name} has shape {:?}, expected {shape:?}",
                    t.shape()
                )));
            }
        }
        if beta.rows() != w || beta.cols() != w {
            return Err(Error::Dimension(format!(
                "beta is {}x{}, expected {w}x{w}",
                beta.rows(),
                beta.cols()
            )));
        }
        Ok(LeibnizRepresentation {
            algebra,
            wdim,
            l,
            m,
            r,
            beta,
        })
    }

    /// The zero actions on a space of dimension `wdim`.
    pub fn trivial(algebra: ThreeHomLeibnizAlgebra, wdim: usize, beta: Matrix) -> Result<Self> {
        let d = algebra.dim();
        Self::new(
            algebra,
            wdim,
            Tensor::zeros(&[d, d, wdim, wdim]),
            Tensor::zeros(&[d, wdim, d, wdim]),
            Tensor::zeros(&[wdim, d, d, wdim]),
            beta,
        )
    }

    pub fn algebra(&self) -> &ThreeHomLeibnizAlgebra {
        &self.algebra
    }

    pub fn wdim(&self) -> usize {
        self.wdim
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn l_tensor(&self) -> &Tensor {
        &self.l
    }

    pub fn m_tensor(&self) -> &Tensor {
        &self.m
    }

    pub fn r_tensor(&self) -> &Tensor {
        &self.r
    }

    pub fn l(&self, x: &[Scalar], y: &[Scalar], u: &[Scalar]) -> Vector {
        self.l.trilinear(x, y, u)
    }

    pub fn m(&self, x: &[Scalar], u: &[Scalar], z: &[Scalar]) -> Vector {
        self.m.trilinear(x, u, z)
    }

    pub fn r(&self, u: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        self.r.trilinear(u, y, z)
    }
}

fn sum3(a: Vector, b: Vector, c: Vector) -> Vector {
    add_vectors(&add_vectors(&a, &b), &c)
}

/// Checks the three equivariance laws on basis triples and the five
/// compatibility identities on basis 5-tuples. Tuples are reported in the
/// argument order `(a, b, x, y, u)`, `(a, b, x, z, u)`, `(a, b, y, z, u)`,
/// `(a, u, x, y, z)` and `(u, b, x, y, z)` respectively.
pub fn check_leibniz_representation(rep: &LeibnizRepresentation) -> Result<CheckReport> {
    let base = check_3h_leibniz(&rep.algebra);
    if !base.passed() {
        return Err(Error::precondition("underlying algebra is not a 3-Hom-Leibniz algebra", base));
    }
    let d = rep.algebra.dim();
    let w = rep.wdim;
    let al = cols(rep.algebra.twist());
    let be = cols(&rep.beta);
    let br = |i: usize, j: usize, k: usize| rep.algebra.basis_bracket(i, j, k);
    let mut report = CheckReport::new();

    for x in 0..d {
        for y in 0..d {
            for u in 0..w {
                let lhs = rep.l(&al[x], &al[y], &be[u]);
                let rhs = rep.beta.apply(rep.l.fibre(&[x, y, u]));
                report.expect_eq(LAW_L_EQUIVARIANT, &[x, y, u], lhs, rhs);
                let lhs = rep.m(&al[x], &be[u], &al[y]);
                let rhs = rep.beta.apply(rep.m.fibre(&[x, u, y]));
                report.expect_eq(LAW_M_EQUIVARIANT, &[x, u, y], lhs, rhs);
                let lhs = rep.r(&be[u], &al[x], &al[y]);
                let rhs = rep.beta.apply(rep.r.fibre(&[u, x, y]));
                report.expect_eq(LAW_R_EQUIVARIANT, &[u, x, y], lhs, rhs);
            }
        }
    }

    for a in 0..d {
        for b in 0..d {
            let ab: Vec<Vector> = (0..d).map(|x| br(a, b, x)).collect();
            let l_ab: Vec<Vector> = (0..w).map(|u| rep.l.fibre(&[a, b, u]).to_vec()).collect();
            for x in 0..d {
                for y in 0..d {
                    for u in 0..w {
                        // l([a,b,x],αy,βu) + l(αx,[a,b,y],βu) + l(αx,αy,l(a,b,u)) = l(αa,αb,l(x,y,u))
                        let lhs = sum3(
                            rep.l(&ab[x], &al[y], &be[u]),
                            rep.l(&al[x], &ab[y], &be[u]),
                            rep.l(&al[x], &al[y], &l_ab[u]),
                        );
                        let rhs = rep.l(&al[a], &al[b], rep.l.fibre(&[x, y, u]));
                        report.expect_eq(LAW_LL, &[a, b, x, y, u], lhs, rhs);

                        // m([a,b,x],βu,αz) + m(αx,l(a,b,u),αz) + m(αx,βu,[a,b,z]) = l(αa,αb,m(x,u,z))
                        let z = y;
                        let lhs = sum3(
                            rep.m(&ab[x], &be[u], &al[z]),
                            rep.m(&al[x], &l_ab[u], &al[z]),
                            rep.m(&al[x], &be[u], &ab[z]),
                        );
                        let rhs = rep.l(&al[a], &al[b], rep.m.fibre(&[x, u, z]));
                        report.expect_eq(LAW_LM, &[a, b, x, z, u], lhs, rhs);

                        // r(l(a,b,u),αy,αz) + r(βu,[a,b,y],αz) + r(βu,αy,[a,b,z]) = l(αa,αb,r(u,y,z))
                        let (yy, zz) = (x, y);
                        let lhs = sum3(
                            rep.r(&l_ab[u], &al[yy], &al[zz]),
                            rep.r(&be[u], &ab[yy], &al[zz]),
                            rep.r(&be[u], &al[yy], &ab[zz]),
                        );
                        let rhs = rep.l(&al[a], &al[b], rep.r.fibre(&[u, yy, zz]));
                        report.expect_eq(LAW_LR, &[a, b, yy, zz, u], lhs, rhs);
                    }
                }
            }
        }
    }

    for u in 0..w {
        for s in 0..d {
            let m_su: Vec<Vector> = (0..d).map(|x| rep.m.fibre(&[s, u, x]).to_vec()).collect();
            let r_us: Vec<Vector> = (0..d).map(|x| rep.r.fibre(&[u, s, x]).to_vec()).collect();
            for x in 0..d {
                for y in 0..d {
                    for z in 0..d {
                        let xyz = br(x, y, z);
                        // r(m(a,u,x),αy,αz) + m(αx,m(a,u,y),αz) + l(αx,αy,m(a,u,z)) = m(αa,βu,[x,y,z])
                        let lhs = sum3(
                            rep.r(&m_su[x], &al[y], &al[z]),
                            rep.m(&al[x], &m_su[y], &al[z]),
                            rep.l(&al[x], &al[y], &m_su[z]),
                        );
                        let rhs = rep.m(&al[s], &be[u], &xyz);
                        report.expect_eq(LAW_MB, &[s, u, x, y, z], lhs, rhs);

                        // r(r(u,b,x),αy,αz) + m(αx,r(u,b,y),αz) + l(αx,αy,r(u,b,z)) = r(βu,αb,[x,y,z])
                        let lhs = sum3(
                            rep.r(&r_us[x], &al[y], &al[z]),
                            rep.m(&al[x], &r_us[y], &al[z]),
                            rep.l(&al[x], &al[y], &r_us[z]),
                        );
                        let rhs = rep.r(&be[u], &al[s], &xyz);
                        report.expect_eq(LAW_RB, &[u, s, x, y, z], lhs, rhs);
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_3h_leibniz;
    use crate::fixtures::e1;
    use crate::linalg::{int_vector, unit_vector};

    #[test]
    fn zero_action_is_a_representation() {
        let l = e1();
        let beta = Matrix::from_ints(&[&[2, 1], &[0, 3]]);
        let rep = Representation::new(l, 2, [], beta).unwrap();
        assert!(check_representation(&rep).unwrap().passed());
    }

    #[test]
    fn adjoint_of_e1() {
        let rep = adjoint_representation(&e1()).unwrap();
        assert!(check_representation(&rep).unwrap().passed());
        let e = |i| unit_vector(4, i);
        let ad12 = rep.basis_action(0, 1);
        assert_eq!(ad12.apply(&e(2)), e(3));
        for i in [0, 1, 3] {
            assert!(ad12.apply(&e(i)).iter().all(Scalar::is_zero));
        }
        assert!(rep.basis_action(2, 3).is_zero());
        let abelian = ThreeHomLieAlgebra::abelian(3, Matrix::identity(3)).unwrap();
        let ad = adjoint_representation(&abelian).unwrap();
        assert!(ad.pair_actions().iter().all(Matrix::is_zero));
    }

    #[test]
    fn wrong_beta_breaks_twist_compatibility() {
        let l = e1();
        let ad = adjoint_representation(&l).unwrap();
        let beta = Matrix::diagonal(&int_vector(&[1, 1, 1, 2]));
        let rho: Vec<_> = pairs(4)
            .into_iter()
            .map(|(i, j)| ((i, j), ad.basis_action(i, j)))
            .collect();
        let rep = Representation::new(l, 4, rho, beta).unwrap();
        let r = check_representation(&rep).unwrap();
        let f = r
            .failures_for(LAW_EQ_2_2)
            .find(|f| f.tuple == vec![0, 1, 2])
            .expect("failure at (e1, e2) applied to e3");
        assert_eq!(f.lhs, int_vector(&[0, 0, 0, 1]));
        assert_eq!(f.rhs, int_vector(&[0, 0, 0, 2]));
    }

    #[test]
    fn direct_sum_blocks() {
        let l = e1();
        let one = direct_sum_representation(&l, 1).unwrap();
        assert_eq!(one, adjoint_representation(&l).unwrap());
        let two = direct_sum_representation(&l, 2).unwrap();
        assert_eq!(two.vdim(), 8);
        let ad = one.basis_action(0, 1);
        assert_eq!(two.basis_action(0, 1), Matrix::block_diagonal(&[&ad, &ad]));
        assert!(check_representation(&two).unwrap().passed());
        assert!(direct_sum_representation(&l, 0).is_err());
    }

    #[test]
    fn hemisemidirect_of_adjoint() {
        let rep = adjoint_representation(&e1()).unwrap();
        let h = hemisemidirect_product(&rep);
        assert_eq!(h.dim(), 8);
        assert_eq!(h.basis_bracket(0, 1, 6), unit_vector(8, 7));
        assert!(check_3h_leibniz(&h).passed());
        let abelian = ThreeHomLieAlgebra::abelian(2, Matrix::identity(2)).unwrap();
        let h = hemisemidirect_product(&adjoint_representation(&abelian).unwrap());
        assert!(h.table().is_zero());
    }

    #[test]
    fn trivial_leibniz_rep_passes() {
        let rep = LeibnizRepresentation::trivial(e1().to_leibniz(), 3, Matrix::identity(3)).unwrap();
        assert!(check_leibniz_representation(&rep).unwrap().passed());
    }
}
