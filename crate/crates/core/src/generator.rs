//! Random instance generator.
