//! Benchmarks for the η routes live in `benches/`.
