//! Exact scalars and dense multilinear algebra over `Q` and `Q[q]`.

pub mod linalg;
pub mod locus;
pub mod poly;
pub mod scalar;
pub mod tensor;

pub use locus::QLocus;
pub use poly::{int, rat, Poly, Rational};
pub use scalar::{Ring, Scalar};
pub use tensor::{BinOp, CoOp, LinMap, Tensor};
