//! Hardware-free VQE emulation toolkit.
//!
//! Ingests molecular integrals (FCIDUMP), maps them to qubit Hamiltonians
//! under Jordan-Wigner, parity, or Bravyi-Kitaev encodings, partitions the
//! result into qubit-wise commuting measurement groups, runs UCCS/UCCSD
//! variational optimization on an internal statevector simulator, and
//! evaluates a closed-form digital-error fidelity model for the compiled
//! circuits.
//!
//! All numeric kernels are generic over the scalar type ([`scalar::Real`],
//! i.e. `f32` or `f64`); the aliases below fix the `f64` instantiation that
//! the CLI and the tests use.

pub mod dense;
pub mod error;
pub mod pauli;
pub mod scalar;

pub use error::{Error, Result};

/// `f64` Pauli sum (qubit Hamiltonian).
pub type PauliSum64 = pauli::WeightedPauliSum<f64>;
/// `f64` dense matrix.
pub type DenseMatrix64 = dense::DenseMatrix<f64>;
