//! Pairwise comparison matrices and interval pairwise comparison matrices
//! over real continuous Abelian linearly ordered groups.
//!
//! Preference intensities expressed on the multiplicative `(0, +∞)`,
//! additive `(−∞, +∞)`, or fuzzy `(0, 1)` scale all share one algebraic
//! structure; this crate implements that structure once and derives from it
//! interval arithmetic, reciprocity and consistency checking, a consistency
//! index, and an indeterminacy index that work uniformly on every scale.
//! Group isomorphisms transport matrices and index values between scales
//! losslessly, so matrices elicited on different scales can be compared on
//! a single pair of axes.
//!
//! Everything is immutable after construction and every operation is a pure
//! function, so values can be shared freely across threads.

pub mod analysis;
pub mod error;
pub mod group;
pub mod interval;
pub mod io;
pub mod ipcm;
pub mod pcm;

pub use error::{Error, Result};
pub use group::{AloGroup, GroupElement, IsoMap, ScaleId, Tolerance};
pub use interval::GInterval;
pub use io::MatrixFile;
pub use ipcm::{Ipcm, LrPair, TriadDistance, TriadDistances, DEFAULT_PERMUTATION_CAP};
pub use pcm::{Pcm, Permutation};
