//! Graph families, seeded random graphs and exhaustive labeled enumeration.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, N_MAX};

/// Largest order accepted by [`enumerate_labeled_graphs`].
pub const LABELED_ENUM_MAX_N: usize = 6;

/// A named graph family with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `P_n`: vertices `0..n` in order.
    Path(usize),
    /// `C_n`: the path closed by the edge `(n-1, 0)`.
    Cycle(usize),
    /// `K_n`.
    Complete(usize),
    /// `K_{r,s}` with parts `0..r` and `r..r+s`.
    CompleteBipartite(usize, usize),
    /// `K_{1,n-1}` on `n` vertices, centre `0`.
    Star(usize),
}

impl Family {
    pub fn order(&self) -> usize {
        match *self {
            Family::Path(n) | Family::Cycle(n) | Family::Complete(n) | Family::Star(n) => n,
            Family::CompleteBipartite(r, s) => r + s,
        }
    }

    /// Short identifier used in scan output, e.g. `P6`, `C5`, `K4`, `K3x3`, `S4`.
    pub fn tag(&self) -> String {
        self.to_string()
    }

    pub fn build(&self) -> Result<Graph> {
        gen_family(*self)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(n) => write!(f, "P{n}"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::Complete(n) => write!(f, "K{n}"),
            Family::CompleteBipartite(r, s) => write!(f, "K{r}x{s}"),
            Family::Star(n) => write!(f, "S{n}"),
        }
    }
}

pub fn gen_family(family: Family) -> Result<Graph> {
    let too_small = |what: &str, min: usize| {
        Err(Error::Input(format!("{what} requires at least {min} vertices")))
    };
    let edges: Vec<(usize, usize)> = match family {
        Family::Path(n) => {
            if n < 1 {
                return too_small("path", 1);
            }
            (1..n).map(|v| (v - 1, v)).collect()
        }
        Family::Cycle(n) => {
            if n < 3 {
                return too_small("cycle", 3);
            }
            (0..n).map(|v| (v, (v + 1) % n)).collect()
        }
        Family::Complete(n) => {
            if n < 1 {
                return too_small("complete graph", 1);
            }
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
        }
        Family::CompleteBipartite(r, s) => {
            if r < 1 || s < 1 {
                return Err(Error::Input(
                    "complete bipartite graph requires r >= 1 and s >= 1".into(),
                ));
            }
            (0..r).flat_map(|u| (r..r + s).map(move |v| (u, v))).collect()
        }
        Family::Star(n) => {
            if n < 1 {
                return too_small("star", 1);
            }
            (1..n).map(|v| (0, v)).collect()
        }
    };
    Graph::from_edge_list(family.order(), &edges)
}

/// SplitMix64 (Steele, Lea, Flood). The random-graph generator is defined in
/// terms of this exact sequence so corpora are reproducible in any language.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// Erdős–Rényi `G(n, p)` driven by [`SplitMix64`] seeded with `seed`.
///
/// Pairs are visited in graph6 order (`v = 1..n`, then `u = 0..v`); each pair
/// draws one word `x` and is an edge iff `x < floor(p * 2^64)`. `p = 1`
/// includes every pair.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Input(format!("edge probability {p} is outside [0, 1]")));
    }
    if n > N_MAX {
        return Err(Error::Input(format!("graph order {n} exceeds {N_MAX}")));
    }
    let threshold = (p * 18_446_744_073_709_551_616.0) as u64;
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            let x = rng.next_u64();
            if p >= 1.0 || x < threshold {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// All `2^(n(n-1)/2)` labeled graphs on `n <= 6` vertices.
///
/// Graph number `i` has pair `j` (in graph6 order) as an edge iff bit `j` of
/// `i` is set, so graphs come out in increasing edge-mask order.
pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    if n > LABELED_ENUM_MAX_N {
        return Err(Error::ResourceLimit(format!(
            "exhaustive labeled enumeration is limited to n <= {LABELED_ENUM_MAX_N}; \
             pipe a graph6 stream (e.g. from geng) into `dcoal scan --input -` instead"
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    Ok(LabeledGraphs {
        n,
        total: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    total: u64,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.total {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let mut adj = vec![0u64; self.n];
        for (j, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> j & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        Some(Graph::from_adjacency_unchecked(adj))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

#[cfg(test)]
mod tests {
    use super::*;

    fn textbook(family: Family) -> Graph {
        let n = family.order();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let adjacent = match family {
                    Family::Path(_) => v == u + 1,
                    Family::Cycle(_) => v == u + 1 || (u == 0 && v == n - 1),
                    Family::Complete(_) => true,
                    Family::CompleteBipartite(r, _) => u < r && v >= r,
                    Family::Star(_) => u == 0,
                };
                if adjacent {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn families_match_textbook_edge_sets() {
        for n in 1..=8 {
            for fam in [Family::Path(n), Family::Complete(n), Family::Star(n)] {
                assert_eq!(gen_family(fam).unwrap(), textbook(fam), "{fam}");
            }
            if n >= 3 {
                assert_eq!(gen_family(Family::Cycle(n)).unwrap(), textbook(Family::Cycle(n)));
            }
            for r in 1..n {
                let fam = Family::CompleteBipartite(r, n - r);
                assert_eq!(gen_family(fam).unwrap(), textbook(fam), "{fam}");
            }
        }
    }

    #[test]
    fn small_family_examples() {
        assert_eq!(gen_family(Family::Cycle(3)).unwrap(), gen_family(Family::Complete(3)).unwrap());
        let k33 = gen_family(Family::CompleteBipartite(3, 3)).unwrap();
        assert_eq!((k33.n(), k33.edge_count()), (6, 9));
        assert!((0..6).all(|v| k33.degree(v) == 3));
        assert_eq!(gen_family(Family::Path(2)).unwrap(), gen_family(Family::Complete(2)).unwrap());
        assert_eq!(Family::CompleteBipartite(3, 5).build().unwrap().degree_stats().unwrap().max_degree, 5);
    }

    #[test]
    fn family_minimums() {
        assert!(gen_family(Family::Cycle(2)).is_err());
        assert!(gen_family(Family::Path(0)).is_err());
        assert!(gen_family(Family::CompleteBipartite(0, 3)).is_err());
        assert!(gen_family(Family::Star(0)).is_err());
    }

    #[test]
    fn splitmix_reference_values() {
        // First outputs for seed 1234567, from the reference C implementation.
        let mut rng = SplitMix64::new(1234567);
        let got: Vec<u64> = (0..3).map(|_| rng.next_u64()).collect();
        assert_eq!(got, vec![6457827717110365317, 3203168211198807973, 9817491932198370423]);
    }

    #[test]
    fn random_extremes_and_determinism() {
        assert_eq!(gen_random(5, 0.0, 99).unwrap().edge_count(), 0);
        assert_eq!(gen_random(5, 1.0, 99).unwrap(), gen_family(Family::Complete(5)).unwrap());
        assert_eq!(gen_random(8, 0.5, 42).unwrap(), gen_random(8, 0.5, 42).unwrap());
        assert!(gen_random(5, 1.5, 0).is_err());
        assert!(gen_random(5, -0.1, 0).is_err());
        assert!(gen_random(5, f64::NAN, 0).is_err());
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(enumerate_labeled_graphs(0).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
        assert!(matches!(enumerate_labeled_graphs(7), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn labeled_graphs_are_distinct() {
        let all: std::collections::HashSet<Graph> = enumerate_labeled_graphs(4).unwrap().collect();
        assert_eq!(all.len(), 64);
    }
}
