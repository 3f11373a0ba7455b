//! Harmonic analysis and frame theory on finite abelian groups.
//!
//! The crate builds up from group arithmetic to a tight-frame design tool:
//!
//! * [`group`] — groups as lists of cyclic moduli, elements, subgroups.
//! * [`characters`] — character evaluation, restriction, fibers, extensions.
//! * [`transform`] — DFT, convolution, involution, translation on `ℓ(G)`.
//! * [`sampling`] — subgroup sampling/upsampling and the fiber structure of
//!   the dual group.
//! * [`filterbank`] — analysis/synthesis/frame operators of convolutional
//!   systems `X_H = {T_h f_m}`, frame bounds, frame potential.
//! * [`modrep`] — the modulated filter representation: the per-character
//!   spectral blocks that block-diagonalize the synthesis operator.
//! * [`design`] — norm-constrained frame potential minimization and the
//!   structural verification of its minimizers.
//! * [`linalg`] — small dense complex matrices and a deterministic Hermitian
//!   eigensolver.
//! * [`json`] — file formats shared with the CLI.

pub mod characters;
pub mod design;
pub mod error;
pub mod filterbank;
pub mod group;
pub mod json;
pub mod linalg;
pub mod modrep;
pub mod sampling;
pub mod transform;

pub use error::{Error, Result};
pub use group::{GroupElement, GroupSpec, Subgroup};
