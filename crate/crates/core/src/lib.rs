//! Exact computational group theory for the one- and two-qubit Clifford
//! groups, the generalized quadrangle of order two, the Witt designs and
//! the Mathieu group `M22`.
//!
//! ```
//! use clifford_atlas::clifford::InnerClifford;
//! use clifford_atlas::group::Subgroup;
//!
//! let c1 = InnerClifford::build(1)?;
//! let orders: Vec<usize> = c1.proper_normal_subgroups().iter().map(Subgroup::order).collect();
//! assert_eq!(orders, [4, 12]);
//! # Ok::<(), clifford_atlas::error::Error>(())
//! ```

pub mod clifford;
pub mod cyclotomic;
pub mod design;
pub mod error;
pub mod geometry;
pub mod group;
pub mod ident;
pub mod matrix;
pub mod perm;
pub mod structure;
