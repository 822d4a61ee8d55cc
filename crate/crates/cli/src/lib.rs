//! Workspace loading, command dispatch and verification suites behind the
//! `sphere-forge` binary.

pub mod commands;
pub mod render;
pub mod verify;
pub mod workspace;

pub use commands::{run, Command, CommandError, Format, Options, Outcome};
pub use workspace::{load, parse, Workspace, WorkspaceError};
