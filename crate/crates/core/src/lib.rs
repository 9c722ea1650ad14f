//! Exact representation-stability calculus for free VI-modules over `F_q`.
//!
//! The crate works entirely at the level of multiplicities: irreducible
//! representations of `GL_n(F_q)` are labels ([`irreps::IrrepLabel`]), a
//! representation is a formal integer combination of labels
//! ([`grothendieck::VirtualRep`]), and free VI-modules are decomposed level by
//! level ([`vi`]). Dimensions come from the hook-length formula in exact
//! arithmetic ([`qfunc`]). The [`oracles`] module holds brute-force checks that
//! share no code path with the rest.

pub mod cli;
pub mod error;
pub mod grothendieck;
pub mod irreps;
pub mod oracles;
pub mod par;
pub mod partition;
pub mod qfunc;
pub mod vi;

pub use error::{Error, Result};
