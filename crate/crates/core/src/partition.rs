use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// An ordered list of vertex sets meant to partition `V(G)`.
///
/// Construction does not check anything; [`Partition::check_structure`] does.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<VertexSet>,
}

impl Partition {
    pub fn new(parts: Vec<VertexSet>) -> Self {
        Partition { parts }
    }

    pub fn from_vecs<I, P>(parts: I) -> Self
    where
        I: IntoIterator<Item = P>,
        P: IntoIterator<Item = usize>,
    {
        Partition::new(parts.into_iter().map(|p| p.into_iter().collect()).collect())
    }

    /// Decodes a restricted growth string: vertex `v` goes to block `rgs[v]`.
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let blocks = rgs.iter().max().map_or(0, |m| m + 1);
        let mut parts = vec![VertexSet::EMPTY; blocks];
        for (v, &b) in rgs.iter().enumerate() {
            parts[b].insert(v);
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Parts reordered by their smallest vertex.
    #[must_use]
    pub fn canonical(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.sort_by_key(|p| p.first());
        Partition { parts }
    }

    /// Nonempty, pairwise disjoint parts whose union is exactly `V(g)`.
    pub fn check_structure(&self, g: &Graph) -> Result<()> {
        let mut seen = VertexSet::EMPTY;
        for (i, &part) in self.parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::Structural(format!("part {i} is empty")));
            }
            if !g.contains_set(part) {
                return Err(Error::Structural(format!(
                    "part {i} contains a vertex outside 0..{}",
                    g.n()
                )));
            }
            if !seen.is_disjoint(part) {
                return Err(Error::Structural(format!(
                    "part {i} overlaps an earlier part at {:?}",
                    seen.intersection(part)
                )));
            }
            seen = seen.union(part);
        }
        if seen != g.vertices() {
            return Err(Error::Structural(format!(
                "parts do not cover vertices {:?}",
                g.vertices().difference(seen)
            )));
        }
        Ok(())
    }

    /// Parts as sorted vertex lists.
    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.parts.iter().map(|p| p.to_vec()).collect()
    }
}

/// On-disk form: `{"n": <int>, "parts": [[v, ...], ...]}` with 0-based vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub n: usize,
    pub parts: Vec<Vec<usize>>,
}

impl PartitionJson {
    pub fn from_partition(n: usize, p: &Partition) -> Self {
        PartitionJson {
            n,
            parts: p.to_vecs(),
        }
    }

    /// Converts to a [`Partition`] for `g`, checking `n` and that no vertex is
    /// listed twice (which a bitmask would silently absorb).
    pub fn to_partition(&self, g: &Graph) -> Result<Partition> {
        if self.n != g.n() {
            return Err(Error::Structural(format!(
                "partition is for n={} but the graph has n={}",
                self.n,
                g.n()
            )));
        }
        let mut seen = VertexSet::EMPTY;
        let mut parts = Vec::with_capacity(self.parts.len());
        for (i, part) in self.parts.iter().enumerate() {
            let mut set = VertexSet::EMPTY;
            for &v in part {
                if v >= g.n() {
                    return Err(Error::Structural(format!("part {i} lists vertex {v} >= n")));
                }
                if seen.contains(v) {
                    return Err(Error::Structural(format!("vertex {v} is listed more than once")));
                }
                seen.insert(v);
                set.insert(v);
            }
            parts.push(set);
        }
        let p = Partition::new(parts);
        p.check_structure(g)?;
        Ok(p)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            offset: byte_offset(text, e.line(), e.column()),
            message: e.to_string(),
        })
    }
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    text.split_inclusive('\n')
        .take(line.saturating_sub(1))
        .map(str::len)
        .sum::<usize>()
        + column.saturating_sub(1)
}
