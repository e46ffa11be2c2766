//! Generalized Cartan matrices, root systems, realizations and sub-root data.

mod datum;
mod matrix;
mod roots;

pub use datum::{
    affine_realization, affinization_subdatum, grading_from_subdatum, minimal_realization,
    node_deletion, GeneratorGrading, RootDatum, SubRootDatum,
};
pub use matrix::{CartanJson, CartanMatrix, Symmetrizer};
pub use roots::{affinize, height, highest_root, root_order, HighestRootData, RootSystem};
