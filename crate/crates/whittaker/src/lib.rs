//! File formats, graph output and the command-line front end for
//! [`whittaker_core`].

pub mod cli;
pub mod convention;
pub mod dot;
pub mod io;
pub mod verify;
