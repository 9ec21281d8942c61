//! Benchmark harness crate; the benches live in `benches/`.
