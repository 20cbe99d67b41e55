//! Exact reduction of 1-sharbly chains over real quadratic fields.
//!
//! The crate implements, entirely in exact rational arithmetic:
//!
//! * [`qfield`] — arithmetic in F = Q(sqrt d) and O = Z[sqrt d] for
//!   squarefree d = 2, 3 (mod 4), with canonical unit-orbit representatives
//!   and euclidean rounding;
//! * [`gl2of`] — vectors and 2x2 matrices over F, canonical primitive ray
//!   representatives, and the GL_2(O) normal form for lift matrices;
//! * [`voronoi`] — the cone geometry of pairs of binary quadratic forms:
//!   the map L, the trace pairing, exact minimal-vector enumeration, cone
//!   containment and minimal faces, with the Q(sqrt 2) top-cone data shipped;
//! * [`sharbly`] — the chain level: k-sharblies with their relations, the
//!   boundary map, sizes, Voronoi reducedness, and GL_2(O)-equivalence keys
//!   for 0-sharblies;
//! * [`reducer`] — the reduction algorithm: reducing points, inherited
//!   lifts, central points, the four subdivision cases, and the iteration
//!   driver that rewrites a 1-sharbly chain as a sum of Voronoi reduced ones.

pub mod error;
pub mod gl2of;
mod linalg;
pub mod qfield;
pub mod reducer;
pub mod sharbly;
pub mod voronoi;

pub use error::{Error, Result};
