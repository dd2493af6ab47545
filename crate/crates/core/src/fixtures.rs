//! Small named structures used by tests, examples and the CLI.

use crate::algebra::ThreeHomLieAlgebra;
use crate::embedding::EmbeddingTensor;
use crate::linalg::{int_vector, Matrix};
use crate::representation::Representation;

/// The 4-dimensional algebra with `[e₁,e₂,e₃] = e₄` and `α = Id`.
pub fn e1() -> ThreeHomLieAlgebra {
    e1_with_alpha(Matrix::identity(4))
}

/// `[e₁,e₂,e₃] = e₄` with `α = diag(1, 1, −1, −1)`.
pub fn e1_twisted() -> ThreeHomLieAlgebra {
    e1_with_alpha(Matrix::diagonal(&int_vector(&[1, 1, -1, -1])))
}

fn e1_with_alpha(alpha: Matrix) -> ThreeHomLieAlgebra {
    ThreeHomLieAlgebra::new(4, alpha, [((0, 1, 2), int_vector(&[0, 0, 0, 1]))])
        .expect("valid constants")
}

/// `D(e₁) = e₄`, zero on the other basis vectors.
pub fn e1_derivation() -> Matrix {
    let mut d = Matrix::zeros(4, 4);
    d.set(3, 0, 1.into());
    d
}

/// The abelian algebra of dimension `dim` with `α = Id`.
pub fn zero_algebra(dim: usize) -> ThreeHomLieAlgebra {
    ThreeHomLieAlgebra::abelian(dim, Matrix::identity(dim)).expect("valid")
}

/// The zero representation of `e1()` on a line with `β = Id`, and `T(e) = e₃`.
pub fn e1_line_tensor() -> EmbeddingTensor {
    let rep = Representation::new(e1(), 1, [], Matrix::identity(1)).expect("valid");
    let t = Matrix::from_ints(&[&[0], &[0], &[1], &[0]]);
    EmbeddingTensor::new(rep, t).expect("embedding tensor")
}
