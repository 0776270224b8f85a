//! Criterion benchmarks for the ballcomp schemes live in `benches/`.
