//! Std companion to `carryless-core`: OEIS b-file parsing, caching and
//! fetching, and sequence comparison reporting. The `carryless` binary
//! lives in this crate as well.

pub mod oeis;
