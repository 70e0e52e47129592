//! Criterion benchmarks for wdeg-core; see `benches/`.
