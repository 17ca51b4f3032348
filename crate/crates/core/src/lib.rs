//! Exact engine for the Calogero-Sutherland, Laughlin and Halperin
//! Hamiltonians in bosonic and fermionic Fock spaces.
//!
//! Eigen-energies come in closed form, eigenstates (Jack and bi-Jack states)
//! come from a terminating resolvent series that exploits the dominance-order
//! triangularity of the interaction, and every result can be cross-checked
//! against brute-force oracles in [`oracle`].

pub mod boson_fock;
pub mod coeffield;
pub mod fermion_fock;
pub mod halperin;
pub mod matrix;
pub mod oracle;
pub mod partitions;
pub mod spectral_solver;
pub mod symfunc;
