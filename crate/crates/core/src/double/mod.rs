//! The Drinfeld double D(G): exact structure constants, the quadruple
//! description of its Hopf endomorphisms, and an independent oracle.

pub mod element;
pub mod linmap;
pub mod oracle;
pub mod pmap;
pub mod quadruple;

pub use element::{basis, unbasis, Double, DoubleElement, Tensor};
pub use linmap::LinearMap;
pub use oracle::{check_hopf_morphism, is_hopf_morphism, OracleMode};
pub use pmap::PMap;
pub use quadruple::{Compatibility, MorphQuadruple, Relation};
