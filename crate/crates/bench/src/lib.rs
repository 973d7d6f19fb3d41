//! Criterion benchmarks for the MacLaurin core kernels; see `benches/`.
