//! Criterion benchmarks for `quivermod`; see the `benches/` directory.
