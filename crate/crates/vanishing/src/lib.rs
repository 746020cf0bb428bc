//! Exact-arithmetic toolkit for vanishing conjugacy classes of finite groups.
//!
//! A conjugacy class of a finite group `G` is *vanishing* if some irreducible
//! character of `G` is zero on it. This crate computes vanishing classes from
//! exact character-table data, checks the hypotheses of three solubility-type
//! criteria driven by the sizes of such classes, and constructively verifies
//! witness elements in alternating and sporadic simple groups.
//!
//! Everything is exact: class sizes and group orders are arbitrary-precision
//! integers, character values are elements of cyclotomic fields in canonical
//! form, and zero tests are algebraic, never numerical.
//!
//! The main entry points are:
//!
//! - [`tables`]: the character-table data model, JSON fixture format,
//!   validation, vanishing reports and defect-zero detection.
//! - [`symchar`]: characters and class data of `Sym(n)` (Murnaghan–Nakayama)
//!   and class data of `Alt(n)`.
//! - [`criteria`]: hypothesis checkers for the solubility, supersolubility
//!   and normal p-complement criteria.
//! - [`lemmaverify`]: constructive verification of the alternating and
//!   sporadic witness lemmas.
//! - [`bruteforce`]: an independent oracle that enumerates small permutation
//!   groups explicitly.
//!
//! Each major capability has a runnable example under `examples/`; the
//! `vanish` binary exposes the same operations as subcommands.

pub mod bruteforce;
pub mod cli;
pub mod criteria;
pub mod exactmath;
pub mod lemmaverify;
pub mod partitions;
pub mod symchar;
pub mod tables;

pub use exactmath::{Cyclotomic, Factorization, Natural};
pub use partitions::Partition;
pub use tables::CharacterTable;
