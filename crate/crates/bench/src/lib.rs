//! Criterion benchmarks for the lattice pipeline; see `benches/pipeline.rs`.
