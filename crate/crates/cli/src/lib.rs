//! Support code for the `vcm` command-line tool: input documents and scripted scenarios.

pub mod golden;
pub mod input;
pub mod scenarios;
