//! Fixed inputs shared by the criterion benchmarks.

use dcoal_core::{gen_family, gen_random, Family, Graph};

/// Families at the sizes the exact DC search handles in well under a second.
pub fn family_inputs() -> Vec<(String, Graph)> {
    [
        Family::Path(10),
        Family::Path(12),
        Family::Cycle(10),
        Family::Cycle(12),
        Family::CompleteBipartite(5, 5),
        Family::Complete(9),
    ]
    .into_iter()
    .map(|f| (f.tag(), gen_family(f).expect("valid family")))
    .collect()
}

/// Seeded `G(n, p)` graphs with no isolated vertex.
pub fn random_inputs(n: usize, p: f64, count: usize) -> Vec<Graph> {
    (0u64..)
        .map(|seed| gen_random(n, p, seed).expect("valid parameters"))
        .filter(|g| g.isolated_vertex().is_none())
        .take(count)
        .collect()
}
