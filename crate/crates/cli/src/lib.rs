//! Bench harness, gzip measurement and report emission.
