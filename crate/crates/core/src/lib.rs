//! Qubit particle-number projection operators in the Pauli basis.
//!
//! * [`kravchuk`]: exact generalised binomial coefficients `C(n, k, m)`,
//!   their recursions and identities.
//! * [`pauli`]: symplectic Pauli strings and weighted Pauli sums.
//! * [`projector`]: `P(n, k)`, the number operator and `P M P`.
//! * [`cliques`]: greedy commuting-clique partitions.
//! * [`hamio`]: text / JSON / CSV operator files.
//! * [`dense`] and [`verify`]: dense-matrix oracles for small qubit counts.
//!
//! ```
//! use numproj::projector::{build_projector, ProjectorSpec};
//!
//! let p = build_projector(ProjectorSpec::new(3, 1)?)?;
//! assert_eq!(p.len(), 8);
//! assert_eq!(p.coefficient_of("III")?.re, 0.375);
//! # Ok::<(), numproj::Error>(())
//! ```

pub mod cli;
pub mod cliques;
pub mod dense;
mod error;
pub mod hamio;
pub mod kravchuk;
pub mod pauli;
pub mod projector;
pub mod verify;

pub use error::{Error, Result};
pub use pauli::{PauliKey, PauliString, PauliSum};
pub use projector::ProjectorSpec;
