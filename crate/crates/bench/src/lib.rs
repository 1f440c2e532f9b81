//! Benchmarks for the `kindep` solvers and generators live in `benches/`.
