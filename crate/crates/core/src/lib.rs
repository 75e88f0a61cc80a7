//! Ad-nilpotent ideals of type A_n.
//!
//! Ideals of the Borel subalgebra of `gl_{n+1}` contained in its nilradical
//! are upper order ideals of the positive roots, stored here as antichains of
//! minimal roots ([`RootIdeal`]). The crate provides
//!
//! - enumeration and the bijection with ballot sequences (Dyck words),
//! - basic, inner, and outer moves and their equivalence classes,
//! - Gerstenhaber's algorithm for the Jordan type `lambda_I` of the orbit
//!   attached to an ideal, with an independent random-matrix oracle,
//! - the enumerative tables (`N_lambda`, the joint index/valley table,
//!   Kreweras and Narayana counts),
//! - unit interval orders and brute-force poset/graph oracles,
//! - [`verify`], which runs every cross-module invariant for a rank.

pub mod ballot;
pub mod classes;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod ideal;
pub mod jordan;
pub mod moves;
pub mod partition;
pub mod root;
pub mod stats;
pub mod uio;
pub mod verify;

pub use ballot::{ballot_to_ideal, ideal_to_ballot, BallotSequence};
pub use classes::{equivalence_classes, ClassTable, EquivalenceClass};
pub use enumerate::{catalan, enumerate_ideals, ENUMERATION_LIMIT};
pub use error::{Error, Result};
pub use field::{PrimeField, ORACLE_PRIME};
pub use ideal::{minimal_roots, parabolic_ideal, RootIdeal};
pub use jordan::{
    characteristic_sequences, generic_orbit_partition, gerstenhaber_element, gerstenhaber_partition, jordan_type,
    kreweras_partition, CharacteristicSequences, SparseNilpotentMatrix,
};
pub use moves::{normalize_to_parabolic, Direction, Move, MoveKind, Side};
pub use partition::{dominance_leq, Composition, Partition};
pub use root::{root_leq, Rank, Root};
