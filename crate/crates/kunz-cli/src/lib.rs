//! Support library for the `kunz` binary.
//!
//! The binary's structured output lives here so integration tests can parse
//! a `--json` document back into the exact types that produced it.

pub mod output;
