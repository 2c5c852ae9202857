//! Brute-force reference implementations for tests.
