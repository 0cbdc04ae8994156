//! Benchmarks for the exact solvers live under `benches/`.
