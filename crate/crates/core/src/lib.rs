//! Gapsets of numerical semigroups and the machinery of gapset filtrations.
//!
//! A *gapset* is the finite complement of a numerical semigroup in the
//! positive integers. Slicing a gapset of multiplicity `m` into windows
//! `[im + 1, (i + 1)m - 1]` and shifting each window back to `[1, m - 1]`
//! yields a nonincreasing chain of residue sets, the gapset filtration. This
//! crate provides:
//!
//! - [`Gapset`] and [`NumericalSemigroup`] with their classical invariants,
//! - m-extensions and m-filtrations with the bijections [`phi`] and [`tau`],
//! - the run-length [`CompactForm`] `(sigma, e)` of a filtration, the residue
//!   formula for its semigroup and its Kunz coordinates,
//! - an exact admissibility test deciding when a compact form describes a
//!   gapset, with closed forms for multiplicities 3 and 4,
//! - two independent enumerators (semigroup tree and compact forms),
//! - the insertion maps and the genus-increasing injections for `m = 3, 4`.
//!
//! The crate is `no_std` and only needs `alloc`. IO, file formats beyond the
//! textual `Display`/`FromStr` forms, and parallel drivers live in the
//! companion CLI crate.
//!
//! ```
//! use gapset_core::{count_table, is_admissible, CompactForm, Gapset};
//!
//! let g: Gapset = "1,2,3,4,6,7,11".parse()?;
//! assert!(g.is_valid());
//! assert_eq!((g.multiplicity(), g.genus(), g.frobenius()), (5, 7, 11));
//!
//! let f = g.filtration().unwrap();
//! assert_eq!(f.to_string(), "1234|12|1");
//!
//! let c = CompactForm::new(5, vec![3, 4, 2, 1], vec![1, 0, 1, 1])?;
//! assert!(is_admissible(&c));
//!
//! let table = count_table(10, 11)?;
//! assert_eq!(table.n_g(10), 204);
//! # Ok::<(), gapset_core::Error>(())
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod admissibility;
pub mod compact;
pub mod enumeration;
mod error;
pub mod filtration;
pub mod gapset;
pub mod injection;
pub mod perm;
pub mod residue;

pub use admissibility::{is_admissible, is_admissible_m3, is_admissible_m4, M3Family};
pub use compact::{
    compact_form, expand, kunz_coordinates, kunz_of_semigroup, semigroup_of, CompactForm,
    KunzVector,
};
pub use enumeration::{
    count_table, enumerate_compact, enumerate_tree, CountTable, TreeEnumerator, TreeNode,
};
pub use error::{Error, Result};
pub use filtration::{
    filtration_invariants, is_gapset_filtration, is_m_extension, phi, tau, FiltrationInvariants,
    MExtension, MFiltration,
};
pub use gapset::{
    complement, is_gapset, minimal_generators, CanonicalPartition, Gapset, NumericalSemigroup,
};
pub use injection::{inject_m3, inject_m4, insert, verify_injection, InjectionReport};
pub use residue::ResidueSet;

/// Largest supported multiplicity. Residue sets are single `u64` words.
pub const MAX_MULTIPLICITY: u32 = 64;

/// Elements of gapsets and semigroups stay below this bound so that sums of
/// two elements never overflow a `u32`.
pub const MAX_ELEMENT: u32 = 1 << 30;

/// Default hard cap on genus for the exponential enumerators.
pub const DEFAULT_GENUS_CAP: u32 = 35;
