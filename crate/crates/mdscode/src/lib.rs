//! MDS codes from Fourier matrices over small finite fields.
//!
//! The crate builds GF(p^m) for q up to 2^16, constructs the Fourier
//! matrix of the multiplicative group and arithmetic-progression row
//! selections of it, extends those selections to maximum-length MDS
//! codes, certifies the MDS property by exhaustive (or seeded sampled)
//! minor checking, encodes and decodes against erasures and bounded
//! numbers of symbol errors, and searches dimension-3 parameter space
//! exhaustively at very small field orders.
//!
//! Entry points, roughly in dependency order:
//!
//! * [`field_build`] - deterministic field construction with exp/log tables
//! * [`FieldMatrix`] - exact linear algebra and minor scans
//! * [`fourier_matrix`], [`select_rows`] - the structured generators
//! * [`code_from_rows`], [`extend_two_columns`],
//!   [`extend_identity_columns_dim3`] - the code constructions
//! * [`certify_mds`], [`certify_mds_standard`] - MDS certification
//! * [`encode`], [`erasure_decode`], [`error_decode`] - the codec
//! * [`search_dim3`], [`max_length_dim3`] - exhaustive length search
//! * [`matfile`] - the shared on-disk matrix format

mod bounds;
mod codec;
mod codes;
mod comb;
mod error;
mod fourier;
mod galois;
mod linalg;
pub mod matfile;
#[cfg(test)]
mod test_oracles;

pub use bounds::{MAX_SEARCH_CANDIDATES, SearchOutcome, SearchReport, max_length_dim3, search_dim3};
pub use codec::{
    DecodeResult, Word, encode, erasure_decode, error_decode, min_distance_exhaustive, syndrome,
};
pub use codes::{
    CertifyMode, LinearCode, MdsCertificate, Provenance, certify_matrix, certify_mds,
    certify_mds_standard, certify_mds_standard_with_budget, certify_mds_with_budget,
    code_from_rows, dual_code, extend_identity_columns_dim3, extend_identity_columns_dim3_with,
    extend_two_columns, standard_form,
};
pub use error::{Error, Result};
pub use fourier::{RowSelection, check_first_three_rows_2x2, fourier_matrix, select_rows};
pub use galois::{
    FieldContext, FieldElement, FieldSpec, MAX_FIELD_ORDER, factor_prime_power, field_build,
    is_prime,
};
pub use linalg::{DEFAULT_MINOR_BUDGET, FieldMatrix};
