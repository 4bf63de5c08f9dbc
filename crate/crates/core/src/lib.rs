//! Exact verification and construction engine for Novikov bialgebras,
//! differential ASI bialgebras and their Yang-Baxter machinery.
//!
//! Everything is computed over the rationals or over `Q[q]` with `q` kept
//! symbolic. There is no floating point and no tolerance anywhere: a residual
//! vanishes exactly when its coefficient lists are empty.

pub mod bialgebra;
pub mod constructions;
pub mod error;
pub mod exactcore;
pub mod fixtures;
pub mod liewindow;
pub mod pipeline;
pub mod structures;
pub mod ybe;

pub use error::{Error, Result};
pub use exactcore::{BinOp, CoOp, LinMap, Poly, QLocus, Rational, Ring, Scalar, Tensor};
pub use structures::{AxiomReport, Bundle, Presentation, Space, Verdict};
