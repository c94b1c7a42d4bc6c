//! Exact-arithmetic kernels and verification suites for spin symmetric
//! groups, Clifford algebras, factor systems over `Z/q`, and the monoidal
//! supercategory structures built from them.
//!
//! Everything is computed over the cyclotomic field `Q(zeta_16)` with
//! arbitrary-precision rationals; there is no floating point anywhere.

pub mod scalars;

pub mod linalg;
pub mod supervec;

pub mod clifford;
pub mod spin_group;

pub mod factor_systems;

pub mod axioms;
pub mod queer;
pub mod species;
pub mod eversion;

pub mod qsym;

pub mod report;
pub mod suites;
