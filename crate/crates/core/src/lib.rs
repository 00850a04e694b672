//! Exact coadjoint orbit dimensions for orthogonal subsets of root systems.
//!
//! For an orthogonal subset `D` of positive roots with nonzero scalars `xi`,
//! the orbit of the canonical form `f = sum xi_b e_b^*` under the maximal
//! unipotent group has dimension equal to the rank of the skew matrix
//! `f([e_a, e_c])`. This crate builds root systems and Chevalley structure
//! constants, computes that rank over a prime field, and compares it with
//! `l(sigma_D) - |D|` for the involution `sigma_D = prod r_b`.
//!
//! ```
//! use std::sync::Arc;
//! use orbitkit::{ChevalleyTable, OrthoSubset, PrimeField, RootSystem};
//!
//! let rs = Arc::new(RootSystem::new("B3".parse().unwrap()));
//! let tbl = ChevalleyTable::new(rs.clone());
//! let d = vec![rs.is_root(&[2, 0, 0]).unwrap(), rs.is_root(&[0, 2, 2]).unwrap()];
//! let stats = orbitkit::weyl::involution_stats(&rs, &d).unwrap();
//! let d = OrthoSubset::with_unit_xi(&rs, d, PrimeField::default_for(&rs)).unwrap();
//! assert_eq!(tbl.orbit_dimension(&d).unwrap().dim, 4);
//! assert_eq!(stats.bound, 6);
//! ```

pub mod chevalley;
pub mod enumerate;
pub mod error;
pub mod expr;
pub mod form;
pub mod rootsys;
pub mod tables;
pub mod weyl;

pub use chevalley::{structure_constants, ChevalleyTable};
pub use enumerate::{
    enumerate_orthogonal_subsets, scan_non_admissible, verify_main_theorem, VerifyReport,
};
pub use error::{Error, Result};
pub use expr::{display_root, format_root, parse_root, parse_roots, RootExpr};
pub use form::{OrthoSubset, PrimeField};
pub use rootsys::{build_root_system, Family, Root, RootSystem, RootSystemId, SingularPair};
