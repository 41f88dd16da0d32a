//! Lower-bound instances.
