//! Parameter grids shared by the benchmarks under `benches/`.

/// Every `(p, j)` with `0 <= p <= 2m` and `0 <= j <= m`.
pub fn doubling_grid(m: i64) -> Vec<(i64, i64)> {
    (0..=2 * m).flat_map(|p| (0..=m).map(move |j| (p, j))).collect()
}

/// Every `(p, j)` with `0 <= p <= 2^r m` and `0 <= 2^s j <= 2^r m`.
pub fn chain_grid(m: i64, r: u32, s: u32) -> Vec<(i64, i64)> {
    let order = m << r;
    (0..=order)
        .flat_map(|p| (0..=order >> s).map(move |j| (p, j)))
        .collect()
}
