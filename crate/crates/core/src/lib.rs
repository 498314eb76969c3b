//! Exact verification engine for Bogomolov-Gieseker type inequalities and
//! Bridgeland stability conditions on triple and double cover Calabi-Yau
//! threefolds.

pub mod bg3;
pub mod bounds;
pub mod chern;
pub mod clifford;
pub mod error;
pub mod exactnum;
pub mod par;
pub mod stab;
pub mod verify;
pub mod walls;

pub use error::{Error, Result};
pub use exactnum::{s, Scalar};
