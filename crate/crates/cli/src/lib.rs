//! Session scripts, command dispatch and JSON reports for the `lindef`
//! binary.

pub mod commands;
pub mod corpus;
pub mod golden;
mod par;
pub mod report;
pub mod session;

pub use commands::{CommandError, CommandResult, Outcome, Params};
pub use report::Report;
pub use session::{ParseOptions, Session, SessionError};
