//! Parsing, job files and subcommands.

pub mod commands;
pub mod job;
pub mod parse;

pub use commands::Outcome;
pub use job::JobFile;
pub use parse::{
    parse_polynomial, parse_polynomial_at, parse_rational, parse_rational_function_at,
};
