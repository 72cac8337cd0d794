//! Benchmarks for vpq-core live under `benches/`.
