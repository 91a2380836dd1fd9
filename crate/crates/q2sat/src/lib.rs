//! Solver and brute-force verifier for two-body frustration-free spin-½
//! Hamiltonians (Quantum 2-SAT on qubits).
//!
//! The solver reduces an instance by quantum unit propagation, rank-3
//! freezing, and rank-2 isometry merges, completes the remaining homogeneous
//! instance by the ε-contraction rule, and extracts a ground state that is a
//! product of single- or two-qubit blocks. Every verdict can be certified
//! independently by dense diagonalization in the oracle module.

pub mod error;
pub mod linalg;
pub mod instance;

pub use error::{Error, Result};
