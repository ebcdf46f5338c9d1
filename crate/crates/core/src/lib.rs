//! Finite-model workbench for ILO settings and their relatives:
//! Slominski settings, (hyper)subtractions, prequandles and quandles,
//! semi-direct indexes of split epimorphisms, and skew braces.
//!
//! Every carrier is `{0..n-1}` and every operation is an [`OpTable`]; all
//! identities are decided by exhaustive evaluation.

pub mod brace;
pub mod classes;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod identities;
pub mod internal;
pub mod iso;
pub mod json;
pub mod model;
pub mod points;
pub mod relations;
pub mod table;
pub mod theorems;

pub use classes::{classify, ClassSet, StructureClass};
pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use model::{adjoint, IloModel};
pub use table::{OpTable, TernaryTable};
