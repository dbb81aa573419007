//! Hull dimensions of codes defined by q-polynomial operators over GF(q^m).
//!
//! The code of an operator `phi` is its image `C = phi(GF(q^m))`, an F_q-subspace,
//! with duality taken for the trace form `Tr(xy)`. Hulls are computed two ways:
//! as `rank(phi) - rank(G)` from the Gram matrix of `phi` ([`gram`]), and as
//! `dim(im phi ∩ ker phi†)` through the trace adjoint. [`oracle`] recomputes
//! them from the definition.

pub mod cli;
pub mod error;
pub mod field;
pub mod frob;
pub mod gram;
pub mod linalg;
pub mod linops;
pub mod oracle;
pub mod pencil;
pub mod poly;
pub mod rdhull;
pub mod render;
pub mod sweep;
pub mod util;

pub use error::{Error, Result};
pub use field::{Basis, Elem, FieldTower};
pub use linops::QPoly;
