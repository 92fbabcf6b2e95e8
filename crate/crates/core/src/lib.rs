//! Digital topology of the plane.
//!
//! Two classical models of the discrete plane live side by side here:
//!
//! * the **Rosenfeld grid** ([`rosenfeld`]): `Z^2` with the 4- and
//!   8-neighbor relations, paths, closed curves, and connected
//!   components — pure graph theory, no topology;
//! * the **Khalimsky plane** ([`khalimsky`]): `Z^2` carrying the product
//!   of the digital-line topology, where points are *pure* or *mixed*,
//!   connectivity is genuinely topological, and Jordan curves are defined
//!   by arcs.
//!
//! The [`slant`] module bridges the two worlds with the slant map
//! `(x, y) -> (x + y, y - x)` and its expansion operator, which carries
//! 8-adjacency structure onto the Khalimsky side. The [`jordan`] module
//! builds on the bridge: it decomposes Khalimsky Jordan-curve complements
//! through the grid-side Jordan curve theorem.
//!
//! Everything the library claims is machine-checked at desk scale: the
//! [`harness`] module enumerates every path, closed curve, and Jordan
//! curve in bounded windows and runs a registry of verification suites,
//! each asserting one statement exhaustively. Independent reference
//! implementations (flood fill, subspace-topology connectivity,
//! brute-force subset filters) live in [`oracle`] so that every suite
//! compares two genuinely different computations.

pub mod error;
pub mod harness;
pub mod jordan;
pub mod khalimsky;
pub mod oracle;
pub mod report;
pub mod rosenfeld;
pub mod slant;

mod dsu;
mod partition;

pub use error::{Error, Result};
pub use partition::ComponentPartition;
pub use report::{Counterexample, LabeledSet, Plane, VerificationReport};
