//! Shared test support: random generators for valid and corrupted inputs,
//! an independent naive expansion of every catalog identity, and the
//! property suites run by both the core tests and the acceptance target.

pub mod controls;
pub mod gen;
pub mod naive;
pub mod suites;
pub mod world;

pub use world::World;
