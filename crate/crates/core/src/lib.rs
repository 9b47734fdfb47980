//! Exact diagonalization of the isotropic spin-1/2 Heisenberg ferromagnet,
//! organized around spin-wave sectors.
//!
//! The Hamiltonian `H = sum over edges (1 - I_ij)` conserves the number of up
//! spins, so it block-diagonalizes over the sectors spanned by basis states
//! with exactly `r` up spins. This crate builds those sector blocks as exact
//! integer sparse matrices, builds the subset-inclusion intertwiners between
//! sectors, verifies the intertwining relation in integer arithmetic, and
//! computes sector partition traces together with their kernel/range split
//! under the intertwiners. On top of that sits a falsifiable harness for the
//! magnetism criterion `Tr(V,beta,i) <= factor * Tr(V,beta,i-k)` and for the
//! open kernel-trace bound.

pub mod basis;
pub mod criterion;
pub mod error;
pub mod exact;
pub mod lattice;
pub mod operators;
pub mod sparse;
pub mod spectral;

pub use basis::{binomial, sector_dimension, SectorBasis, Subset};
pub use criterion::{
    evaluate_criterion, full_trace_consistency, probe_kernel_bound, CriterionConfig,
    CriterionReport, CriterionRow, FullTraceCheck, KernelBoundProbe,
};
pub use error::{Error, Result};
pub use lattice::{build_rectangular, Boundary, Lattice};
pub use operators::{
    apply_hamiltonian, apply_hamiltonian_int, assemble_hamiltonian, assemble_intertwiner,
    check_intertwining, check_intertwining_ops, compose_intertwiners, InclusionOperator,
    IntertwiningCheck, SectorOperator,
};
pub use sparse::SparseIntMatrix;
pub use spectral::{
    all_sector_spectra, check_range_trace_identity, eigendecompose, eigendecompose_with_vectors,
    kernel_split, sector_split, sector_trace, split_trace, trace_report, KernelSplit,
    LatticeSpectra, RangeTraceReport, SectorSplit, Spectrum, TraceReport, DEFAULT_DENSE_CAP,
};
