//! Exact sparse linear algebra over `FieldSpec` scalars: ranks, kernels,
//! quotients and the maps they induce.

mod echelon;
mod sparse;

pub use echelon::{
    induced_map, induced_map_fn, kernel_basis, mat_rank, quotient_space, solve_linear,
    NotWellDefined, QuotientSpace, Subquotient, Subspace,
};
pub use sparse::{apply_linear, Accumulator, SparseMatrix, SparseVec};

/// Default ceiling on any materialized ambient dimension.
pub const DEFAULT_DIM_CAP: usize = 200_000;
