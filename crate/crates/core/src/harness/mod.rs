//! Verify suites, randomized property checks, the result cache and graph expressions.

pub mod cache;
pub mod corpus;
pub mod expr;
pub mod props;
pub mod verify;
