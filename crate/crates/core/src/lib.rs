//! Concurrence-based entanglement measures for N-qubit pure states and
//! numerical evaluation of generalized monogamy relations.
//!
//! * [`state`] and [`density`]: dense pure states, reduced density matrices,
//!   partial trace, linear entropy and Haar sampling.
//! * [`entanglement`]: pure-state concurrence, two-qubit concurrence and
//!   concurrence of assistance, the three-tangle, and a brute-force convex-roof
//!   oracle.
//! * [`monogamy`]: lower and upper bounds on bipartite concurrences of a pure
//!   state, W-class states, and the aggregated [`BoundReport`].

pub mod density;
pub mod entanglement;
mod error;
pub mod monogamy;
pub mod state;
pub mod state_file;
pub mod tolerance;

pub use density::DensityMatrix;
pub use error::{Error, Result};
pub use monogamy::report::{evaluate_all, BoundEntry, BoundReport};
pub use state::{Partition, PureState};

/// Largest register the dense representation supports (4096 amplitudes).
pub const MAX_QUBITS: usize = 12;
