//! Exact algebra for loops of Clifford circuits over prime qudits.
//!
//! The crate works over `F_p` (p an odd prime) and the Laurent rings
//! `F_p[x_1^±, …, x_d^±]` with the involution `x_i ↦ x_i^-1`.

pub mod error;
pub mod forms;
pub mod lgroups;
pub mod linalg;
pub mod pauli;
pub mod presets;
pub mod realmaslov;
pub mod ring;
pub mod sample;
pub mod sturm;
pub mod wire;

pub use error::{Error, Result};
