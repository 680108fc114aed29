//! Command-line front end for the credence model, with the validation suites
//! shared by `credence validate` and the acceptance test.

pub mod args;
pub mod commands;
pub mod config;
pub mod output;
pub mod suites;
