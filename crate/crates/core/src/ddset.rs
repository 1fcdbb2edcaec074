//! Double (and k-tuple) dominating sets and the double domination number.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Which vertices are dominated at least once and at least twice by a set.
///
/// Adding a vertex `u` to the set ORs `N[u]` into the masks, so the union of
/// two sets' coverages can be combined without revisiting their members.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Coverage {
    pub once: u64,
    pub twice: u64,
}

impl Coverage {
    pub fn of(g: &Graph, s: VertexSet) -> Self {
        let closed = g.closed_masks();
        s.iter().fold(Coverage::default(), |c, u| c.cover(closed[u]))
    }

    #[inline]
    #[must_use]
    pub fn cover(self, closed_nbhd: u64) -> Self {
        Coverage {
            twice: self.twice | (self.once & closed_nbhd),
            once: self.once | closed_nbhd,
        }
    }

    /// Coverage of the disjoint union of the two underlying sets.
    #[inline]
    #[must_use]
    pub fn merge(self, other: Self) -> Self {
        Coverage {
            once: self.once | other.once,
            twice: self.twice | other.twice | (self.once & other.once),
        }
    }

    #[inline]
    pub fn is_double(self, full: u64) -> bool {
        self.twice == full
    }
}

/// `|N[v] ∩ s|`.
pub fn closed_coverage(g: &Graph, s: VertexSet, v: usize) -> usize {
    g.closed_neighborhood(v).intersection(s).len()
}

/// Every vertex has at least `k` members of `s` in its closed neighbourhood.
pub fn is_k_tuple_dominating(g: &Graph, s: VertexSet, k: usize) -> Result<bool> {
    if k < 1 {
        return Err(Error::Input("k-tuple domination needs k >= 1".into()));
    }
    if !g.contains_set(s) {
        return Err(Error::Input(format!("{s:?} is not a subset of V(G)")));
    }
    Ok((0..g.n()).all(|v| closed_coverage(g, s, v) >= k))
}

/// Double domination test (`k = 2`), via [`Coverage`].
pub fn is_double_dominating(g: &Graph, s: VertexSet) -> bool {
    Coverage::of(g, s).is_double(g.vertices().bits())
}

/// `s` is a DDS and no single-vertex deletion of `s` is.
///
/// Single deletions suffice: DDS membership is closed under supersets, so if
/// some proper subset were a DDS then so would be `s - v` for any `v` outside it.
pub fn is_minimal_dds(g: &Graph, s: VertexSet) -> bool {
    is_double_dominating(g, s) && s.iter().all(|v| !is_double_dominating(g, s.without(v)))
}

/// Greedily deletes the lowest-indexed deletable vertex until `s` is minimal.
///
/// One ascending pass is enough: a vertex that is not deletable stays
/// non-deletable once other vertices have been removed.
pub fn shrink_to_minimal(g: &Graph, s: VertexSet) -> Result<VertexSet> {
    if !g.contains_set(s) || !is_double_dominating(g, s) {
        return Err(Error::Contract(format!("{s:?} is not a double dominating set")));
    }
    let mut current = s;
    for v in s.iter() {
        let candidate = current.without(v);
        if is_double_dominating(g, candidate) {
            current = candidate;
        }
    }
    debug_assert!(is_minimal_dds(g, current));
    Ok(current)
}

/// Vertices that lie in every DDS: each degree-1 vertex and its neighbour
/// (their closed neighbourhood has exactly two vertices).
pub fn forced_vertices(g: &Graph) -> VertexSet {
    (0..g.n())
        .filter(|&v| g.degree(v) == 1)
        .fold(VertexSet::EMPTY, |acc, v| acc.union(g.closed_neighborhood(v)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
}

/// Exact double domination number `γ×2(G)` by branch and bound.
pub fn gamma_x2(g: &Graph) -> Result<GammaResult> {
    if let Some(vertex) = g.isolated_vertex() {
        return Err(Error::NoDds { vertex });
    }
    let n = g.n();
    let mut search = GammaSearch {
        closed: g.closed_masks(),
        n,
        gain_cap: g.max_degree() + 1,
        best: g.vertices(),
        nodes: 0,
    };
    let forced = forced_vertices(g);
    let excluded = VertexSet::EMPTY;
    search.branch(forced, excluded);
    let witness = search.best;
    debug_assert!(is_double_dominating(g, witness));
    Ok(GammaResult {
        value: witness.len(),
        witness,
        nodes_explored: search.nodes,
    })
}

struct GammaSearch<'a> {
    closed: &'a [u64],
    n: usize,
    gain_cap: usize,
    best: VertexSet,
    nodes: u64,
}

impl GammaSearch<'_> {
    fn branch(&mut self, chosen: VertexSet, excluded: VertexSet) {
        self.nodes += 1;
        if chosen.len() >= self.best.len() {
            return;
        }
        let free = VertexSet::full(self.n).difference(chosen.union(excluded)).bits();

        // Pick the most constrained vertex that still needs coverage.
        let mut total_deficit = 0;
        let mut pick: Option<(usize, u64, usize)> = None; // (options, candidates, deficit)
        for v in 0..self.n {
            let have = (self.closed[v] & chosen.bits()).count_ones() as usize;
            if have >= 2 {
                continue;
            }
            let deficit = 2 - have;
            let candidates = self.closed[v] & free;
            let options = candidates.count_ones() as usize;
            if options < deficit {
                return;
            }
            total_deficit += deficit;
            if pick.is_none_or(|(o, _, d)| options - deficit < o - d) {
                pick = Some((options, candidates, deficit));
            }
        }
        let Some((_, candidates, _)) = pick else {
            self.best = chosen;
            return;
        };
        // Each added vertex lowers the total deficit by at most |N[u]| <= Δ+1.
        let lower = chosen.len() + total_deficit.div_ceil(self.gain_cap);
        if lower >= self.best.len() {
            return;
        }
        // Branch u_1 in; u_1 out and u_2 in; ...
        let mut excluded = excluded;
        for u in VertexSet::from_bits(candidates) {
            self.branch(chosen.with(u), excluded);
            excluded.insert(u);
        }
    }
}
