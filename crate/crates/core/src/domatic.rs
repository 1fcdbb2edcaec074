//! The double domatic number: most parts in a partition of `V` into DDSs.

use crate::ddset::{is_double_dominating, Coverage};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomaticResult {
    pub value: usize,
    /// Parts sorted by smallest vertex.
    pub witness: Partition,
    pub nodes_explored: u64,
}

/// Structural check first, then every part must double-dominate.
pub fn is_domatic_partition_x2(g: &Graph, p: &Partition) -> Result<bool> {
    p.check_structure(g)?;
    Ok(p.parts().iter().all(|&part| is_double_dominating(g, part)))
}

/// Every part of a double domatic partition takes at least two slots of each
/// `N[v]`, so `d×2(G) <= (δ(G) + 1) / 2`. Used only for pruning.
pub fn counting_bound(g: &Graph) -> usize {
    g.min_degree().div_ceil(2)
}

/// Exact `d×2(G)`: tries part counts from [`counting_bound`] downwards and
/// returns the first feasible one.
pub fn d_x2(g: &Graph) -> Result<DomaticResult> {
    if let Some(vertex) = g.isolated_vertex() {
        return Err(Error::NoDds { vertex });
    }
    let mut nodes = 0;
    for k in (2..=counting_bound(g)).rev() {
        let mut search = DomaticSearch::new(g, k);
        let found = search.run();
        nodes += search.nodes;
        if let Some(witness) = found {
            return Ok(DomaticResult {
                value: k,
                witness,
                nodes_explored: nodes,
            });
        }
    }
    Ok(DomaticResult {
        value: 1,
        witness: Partition::new(vec![g.vertices()]),
        nodes_explored: nodes,
    })
}

struct DomaticSearch<'a> {
    closed: &'a [u64],
    n: usize,
    k: usize,
    full: u64,
    assignment: Vec<usize>,
    cover: Vec<Coverage>,
    nodes: u64,
}

impl<'a> DomaticSearch<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        DomaticSearch {
            closed: g.closed_masks(),
            n: g.n(),
            k,
            full: g.vertices().bits(),
            assignment: Vec::with_capacity(g.n()),
            cover: vec![Coverage::default(); k],
            nodes: 0,
        }
    }

    fn run(&mut self) -> Option<Partition> {
        self.place(0, 0).then(|| Partition::from_rgs(&self.assignment))
    }

    /// Unassigned vertices of `N[w]` can still fill the coverage each part owes `w`.
    fn feasible_at(&self, w: usize, unassigned: u64) -> bool {
        let bit = 1u64 << w;
        let owed: usize = self
            .cover
            .iter()
            .map(|c| 2 - usize::from(c.once & bit != 0) - usize::from(c.twice & bit != 0))
            .sum();
        owed <= (self.closed[w] & unassigned).count_ones() as usize
    }

    fn place(&mut self, v: usize, open: usize) -> bool {
        self.nodes += 1;
        if v == self.n {
            return open == self.k && self.cover.iter().all(|c| c.is_double(self.full));
        }
        if open + (self.n - v) < self.k {
            return false;
        }
        let unassigned = self.full & !((1u64 << v) | ((1u64 << v) - 1));
        let limit = (open + 1).min(self.k);
        for part in 0..limit {
            let saved = self.cover[part];
            self.cover[part] = saved.cover(self.closed[v]);
            self.assignment.push(part);
            let ok = VertexSet::from_bits(self.closed[v])
                .iter()
                .all(|w| self.feasible_at(w, unassigned));
            if ok && self.place(v + 1, open.max(part + 1)) {
                return true;
            }
            self.assignment.pop();
            self.cover[part] = saved;
        }
        false
    }
}
