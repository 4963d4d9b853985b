//! Simplicial, cyclic and epicyclic categories as projective geometry over
//! the tropical integers.
//!
//! Morphisms of the epicyclic category are handled concretely: an object is a
//! skeletal archimedean set `hat n = (Z, x -> x + n)` and a morphism is a
//! non-decreasing, quasi-periodic map `f(x + n) = f(x) + k m` up to shifts.

pub mod arc;
pub mod cli;
pub mod bmod;
pub mod dualtrans;
pub mod error;
pub mod hyper;
pub mod permgeom;
pub mod tropic;
pub mod verify;

pub use arc::{compose, normalize, ArcMorphism, ArcObject};
pub use error::{Error, Result};
pub use tropic::{BElem, TropElem, TropRatElem};
