//! Unpruned brute-force reference implementations, for tests only.
//!
//! Nothing here touches the solver code paths: sets are plain `Vec<bool>`,
//! adjacency is read through [`Graph::has_edge`], and every search is a full
//! enumeration.

use crate::graph::Graph;

/// `|N[v] ∩ S| >= 2` for every `v`, counted one vertex at a time.
pub fn is_dds(g: &Graph, member: &[bool]) -> bool {
    (0..g.n()).all(|v| {
        let count = (0..g.n()).filter(|&u| member[u] && (u == v || g.has_edge(u, v))).count();
        count >= 2
    })
}

/// Members have a neighbour in `S`; non-members have two.
pub fn is_dds_two_clause(g: &Graph, member: &[bool]) -> bool {
    (0..g.n()).all(|v| {
        let inside = (0..g.n()).filter(|&u| member[u] && g.has_edge(u, v)).count();
        if member[v] {
            inside >= 1
        } else {
            inside >= 2
        }
    })
}

pub fn subset(n: usize, mask: u64) -> Vec<bool> {
    (0..n).map(|v| mask >> v & 1 == 1).collect()
}

fn block_members(n: usize, rgs: &[usize], block: usize) -> Vec<bool> {
    (0..n).map(|v| rgs[v] == block).collect()
}

fn union(a: &[bool], b: &[bool]) -> Vec<bool> {
    a.iter().zip(b).map(|(x, y)| *x || *y).collect()
}

/// Minimum DDS size over all `2^n` subsets, or `None` if there is no DDS.
pub fn gamma_x2(g: &Graph) -> Option<usize> {
    let n = g.n();
    (0..1u64 << n)
        .filter(|&mask| is_dds(g, &subset(n, mask)))
        .map(|mask| mask.count_ones() as usize)
        .min()
}

/// Every set partition of `0..n` as a restricted growth string.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn extend(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let open = prefix.iter().map(|&b| b + 1).max().unwrap_or(0);
        for b in 0..=open {
            prefix.push(b);
            extend(n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut out);
    out
}

fn blocks(n: usize, rgs: &[usize]) -> Vec<Vec<bool>> {
    let k = rgs.iter().map(|&b| b + 1).max().unwrap_or(0);
    (0..k).map(|b| block_members(n, rgs, b)).collect()
}

/// Largest partition into DDSs, or `None` if `V` itself is not a DDS.
pub fn d_x2(g: &Graph) -> Option<usize> {
    let n = g.n();
    set_partitions(n)
        .iter()
        .map(|rgs| blocks(n, rgs))
        .filter(|parts| parts.iter().all(|p| is_dds(g, p)))
        .map(|parts| parts.len())
        .max()
}

/// Definition check for a dc-partition given as member vectors.
pub fn is_dc_partition(g: &Graph, parts: &[Vec<bool>]) -> bool {
    let dds: Vec<bool> = parts.iter().map(|p| is_dds(g, p)).collect();
    if dds.iter().any(|&d| d) {
        return false;
    }
    (0..parts.len()).all(|i| {
        (0..parts.len()).any(|j| j != i && is_dds(g, &union(&parts[i], &parts[j])))
    })
}

/// `DC(G)` by checking every set partition; 0 if none qualifies.
pub fn dc(g: &Graph) -> usize {
    let n = g.n();
    set_partitions(n)
        .iter()
        .map(|rgs| blocks(n, rgs))
        .filter(|parts| is_dc_partition(g, parts))
        .map(|parts| parts.len())
        .max()
        .unwrap_or(0)
}

/// Converts vertex lists to member vectors.
pub fn members(n: usize, parts: &[Vec<usize>]) -> Vec<Vec<bool>> {
    parts
        .iter()
        .map(|p| {
            let mut m = vec![false; n];
            for &v in p {
                m[v] = true;
            }
            m
        })
        .collect()
}

/// Bell numbers, for sanity checks of [`set_partitions`].
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}
