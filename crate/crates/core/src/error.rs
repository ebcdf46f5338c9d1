use thiserror::Error;

use crate::classes::StructureClass;

/// Errors raised by model construction and the checks built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table has {rows} rows but order {order}")]
    NotSquare { order: usize, rows: usize },
    #[error("order must be positive")]
    EmptyCarrier,
    #[error("entry {value} at ({row}, {col}) is outside the carrier of order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("element {element} is outside the carrier of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("translation z -> d(z, {0}) is not a permutation")]
    NonInvertibleTranslation(usize),
    #[error("model is not a Slominski setting")]
    NotSlominski,
    #[error("model is not a prequandle")]
    NotPrequandle,
    #[error("model is not latin")]
    NotLatin,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("map is not an automorphism of the group")]
    NotAutomorphism,
    #[error("table is not a group: {0}")]
    NotGroup(&'static str),
    #[error("operation is not internal to the ambient abelian group")]
    NotInternal,
    #[error("units differ: {left} vs {right}")]
    UnitMismatch { left: usize, right: usize },
    #[error("table is not a unitary magma")]
    NotUnitaryMagma,
    #[error("operation is not a hypersubtraction")]
    NotHypersubtraction,
    #[error("map is not a homomorphism: image of ({0}, {1}) disagrees")]
    NotHomomorphism(usize, usize),
    #[error("section does not split the retraction at {0}")]
    NotSection(usize),
    #[error("map has length {got}, expected {expected}")]
    MapLength { expected: usize, got: usize },
    #[error("map does not define a morphism of split epimorphisms")]
    NotMorphismOfSplitEpis,
    #[error("split epimorphisms do not share a base")]
    BaseMismatch,
    #[error("skew brace axiom fails at ({0}, {1}, {2})")]
    NotSkewBrace(usize, usize, usize),
    #[error("maps are not homomorphisms for both brace laws")]
    NotBihomomorphism,
    #[error("index value of {0} falls outside the kernel")]
    GammaOutsideKernel(usize),
    #[error("pair ({0}, {1}) violates the relation invariants")]
    InvalidRelation(usize, usize),
    #[error("order {order} exceeds the configured maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("class {0:?} is not a class of ILO settings")]
    NotIloClass(StructureClass),
    #[error("shard index {index} must be below shard count {count}")]
    BadShard { index: usize, count: usize },
    #[error("malformed document: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
