//! Criterion benchmarks for the series engine live under `benches/`.
