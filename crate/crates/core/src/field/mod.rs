//! The tower GF(p) ⊂ GF(q) ⊂ GF(q^m).

pub mod basis;
pub mod embed;
pub mod gf;
pub mod tower;

pub use basis::Basis;
pub use embed::Embedding;
pub use gf::{Elem, Gf};
pub use tower::{FieldTower, Subfield, TowerId, DEFAULT_SIZE_CAP};
