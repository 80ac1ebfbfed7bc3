//! Command-line front end for `lcm-core`: monoid selectors, word syntax,
//! text and JSON rendering, seeded property suites.

pub mod commands;
pub mod error;
pub mod frontend;
pub mod json;
pub mod sampler;
pub mod spec;
pub mod syntax;
pub mod verify;

pub use commands::{run, Command, FracOp, Options, Output};
pub use error::CliError;
pub use frontend::Frontend;
pub use spec::MonoidSpec;
