//! Criterion benchmarks for numsemi-core; see `benches/`.
