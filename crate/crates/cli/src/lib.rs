//! Library half of the `cqf` command-line tool: the compute pipeline, the
//! small-graph classifier with its on-disk result cache, and the
//! machine-checked statement verifiers that the `verify` subcommand
//! dispatches to.

pub mod classify;
pub mod compute;
pub mod verify;

/// Process exit codes shared by every subcommand.
pub mod exit_codes {
    pub const PASS: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const SIZE_GUARD: i32 = 3;
}
