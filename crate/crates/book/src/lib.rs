//! The guide's chapters, compiled so that every listing runs as a doc-test.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/clifford-groups.md")]
pub mod clifford_groups {}

#[doc = include_str!("../../../book/src/permutation-groups.md")]
pub mod permutation_groups {}

#[doc = include_str!("../../../book/src/identification.md")]
pub mod identification {}

#[doc = include_str!("../../../book/src/pauli-geometry.md")]
pub mod pauli_geometry {}

#[doc = include_str!("../../../book/src/witt-designs.md")]
pub mod witt_designs {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
