//! Cylindric Young tableaux.
//!
//! This crate implements semistandard tableaux on the cylinder `C_{k,n}`
//! (the plane modulo the shift `(-k, n-k)`) together with:
//!
//! * forward and reverse internal insertion and multi-insertion, with
//!   bumping-route tracking ([`forward`], [`reverse`]);
//! * the cylindric Robinson–Schensted–Knuth correspondence and its inverse
//!   ([`crsk`]);
//! * exhaustive enumeration of shapes and tableaux, truncated Schur
//!   polynomials and exact checks of Cauchy-type identities ([`enumerate`]);
//! * the bijection between tableaux and marble-passing games ([`marble`]);
//! * cyclic Knuth moves on words and the word-transformation algorithm
//!   ([`knuth`]).
//!
//! Every value is immutable once built and every operation is a pure
//! function, so values can be shared freely across threads.

pub mod crsk;
pub mod enumerate;
pub mod forward;
pub mod geometry;
pub mod insertion;
pub mod knuth;
pub mod marble;
pub mod poly;
pub mod reverse;
pub mod tableau;

pub use crsk::{crsk, crsk_inverse, CrskError, CrskInput, CrskOutput};
pub use forward::{full_multi, internal_insert, one_step_multi, MultiInsertResult};
pub use geometry::{
    cyl_embed, flip_box, lift, partition_contains, project, CylBox, CylParams, CylPartition, GeometryError, Point,
    SkewShape,
};
pub use insertion::{BumpingRoute, InsertionError, InsertionQueue, InsertionState};
pub use reverse::{reverse_full_multi, reverse_insert, reverse_one_step_multi, ReverseMultiResult};
pub use tableau::{tableau_validate, CylTableau, Letter, TableauError, Weight};
