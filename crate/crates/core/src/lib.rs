//! Acceptable colorings of indexed hyperspaces at finite and countable scale.
//!
//! An *n-indexed hyperspace* is a set carrying `n` equivalence relations
//! `E_0, .., E_{n-1}`. A coloring `χ: A -> {0..n-1}` is *acceptable* when every
//! class `[a]_i` contains only finitely many points of color `i`.
//!
//! The crate is organized as:
//!
//! * [`hyperspace`]: finite hyperspaces stored as per-relation class labelings,
//!   colorings, and structural checks.
//! * [`setsystem`]: exact transversal number, depth, induced systems and the
//!   dandy-depth test for families of subsets of a small ground set.
//! * [`stream`]: countable hyperspaces given by an enumeration, the greedy
//!   acceptable coloring, and the acceptability audit.
//! * [`cubes`]: `S`-cubes, halfcubes, and the explicit parbedding of the
//!   `d`-cube into an `S`-cube.
//! * [`morphisms`]: verification and complete search for embeddings, weak
//!   embeddings and parbeddings, plus the bounded finite-cube-number estimate.
//! * [`spray`]: exact rational sphere relations and spray covers of `Q^m`.
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod cubes;
pub mod error;
pub mod hyperspace;
pub mod morphisms;
pub mod setsystem;
pub mod spray;
pub mod stream;

pub use error::{Error, Result};
pub use hyperspace::{Coloring, FiniteIndexedHyperspace};
pub use setsystem::{ExtendedNat, SetSystem, SetTuple};

/// Version of the JSON and text schemas emitted by the CLI.
pub const FORMAT_VERSION: &str = "1";
