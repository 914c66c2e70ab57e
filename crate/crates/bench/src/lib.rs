//! Criterion benchmarks for `eulerplex-core`; see `benches/complexes.rs`.
