//! File formats, verification sweeps and the command-line front end for
//! [`superschur_core`].

pub mod format;
pub mod verify;

pub use superschur_core as core;
