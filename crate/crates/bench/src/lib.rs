//! Benchmarks and offline certification tools; see `benches/` and `examples/`.
