//! Duadic codes over finite fields and the quantum stabilizer codes built
//! from them.
//!
//! The crate is organised bottom-up:
//!
//! - [`galois`]: table-backed GF(p^m), table-less extensions and roots of unity.
//! - [`cyclic`]: cyclotomic cosets, defining sets, cyclic codes and their duals.
//! - [`duadic`]: splittings, duadic quartets, square-root bounds and
//!   degeneracy certificates.
//! - [`distance`]: exact and interval minimum-weight computation.
//! - [`stabilizer`]: CSS and Hermitian quantum code parameters.

pub mod arith;
pub mod galois;
pub mod linalg;
pub mod cyclic;
pub mod distance;
pub mod duadic;
pub mod stabilizer;
