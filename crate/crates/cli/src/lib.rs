//! Command-line front end for the emperor solver: JSON document formats,
//! the solve/pset/pl/verify commands, and an interactive play mode. All
//! commands write to an injected sink so integration tests can run them
//! in-process.

pub mod commands;
pub mod instance;
pub mod play;
pub mod report;
