//! Double coalitions, dc-partitions and the double coalition number `DC(G)`.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::ddset::{is_double_dominating, is_minimal_dds, shrink_to_minimal, Coverage};
use crate::domatic::d_x2;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

/// Default largest order accepted by [`dc_number`]; Bell(13) ≈ 2.8e7.
pub const DEFAULT_LIMIT_N: usize = 13;

/// Environment variable overriding [`SearchLimits::max_n`].
pub const LIMIT_N_ENV: &str = "DCOAL_LIMIT_N";

/// How often (in search nodes) workers publish their counts and poll for abort.
const FLUSH_EVERY: u64 = 1024;

/// `a` and `b` are disjoint, neither is a DDS, and `a ∪ b` is.
pub fn forms_double_coalition(g: &Graph, a: VertexSet, b: VertexSet) -> Result<bool> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Input("double coalition sets must be nonempty".into()));
    }
    if !a.is_disjoint(b) {
        return Err(Error::Input(format!("{a:?} and {b:?} overlap")));
    }
    if !g.contains_set(a.union(b)) {
        return Err(Error::Input("sets must be subsets of V(G)".into()));
    }
    Ok(!is_double_dominating(g, a) && !is_double_dominating(g, b) && is_double_dominating(g, a.union(b)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DcReason {
    PartIsDds,
    PartHasNoPartner,
    Structural,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DcValidation {
    pub valid: bool,
    pub offending_part: Option<usize>,
    pub reason: Option<DcReason>,
    /// `partner_map[i]` lists the parts forming a double coalition with part `i`.
    pub partner_map: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Checks Definition-level dc-partition conditions, computing every partner pair.
pub fn validate_dc_partition(g: &Graph, p: &Partition) -> DcValidation {
    if let Err(e) = p.check_structure(g) {
        return DcValidation {
            valid: false,
            offending_part: None,
            reason: Some(DcReason::Structural),
            partner_map: Vec::new(),
            detail: Some(e.to_string()),
        };
    }
    let full = g.vertices().bits();
    let covers: Vec<Coverage> = p.parts().iter().map(|&s| Coverage::of(g, s)).collect();
    let is_dds: Vec<bool> = covers.iter().map(|c| c.is_double(full)).collect();
    let k = covers.len();
    let mut partner_map = vec![Vec::new(); k];
    for i in 0..k {
        for j in i + 1..k {
            if !is_dds[i] && !is_dds[j] && covers[i].merge(covers[j]).is_double(full) {
                partner_map[i].push(j);
                partner_map[j].push(i);
            }
        }
    }
    let mut offence = None;
    for i in 0..k {
        if is_dds[i] {
            offence = Some((i, DcReason::PartIsDds));
            break;
        }
        if partner_map[i].is_empty() && offence.is_none() {
            offence = Some((i, DcReason::PartHasNoPartner));
        }
    }
    DcValidation {
        valid: offence.is_none(),
        offending_part: offence.map(|o| o.0),
        reason: offence.map(|o| o.1),
        partner_map,
        detail: None,
    }
}

/// Most partners any single part has. Requires a valid dc-partition.
pub fn max_coalitions_per_part(g: &Graph, p: &Partition) -> Result<usize> {
    let v = validate_dc_partition(g, p);
    if !v.valid {
        return Err(Error::Input(format!(
            "not a dc-partition ({:?} at part {:?})",
            v.reason, v.offending_part
        )));
    }
    Ok(v.partner_map.iter().map(Vec::len).max().unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest order the exact search accepts.
    pub max_n: usize,
    /// Abort after roughly this many search nodes.
    pub node_budget: Option<u64>,
    /// Worker threads for prefix-sharded search; 1 is sequential and deterministic.
    pub jobs: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_n: DEFAULT_LIMIT_N,
            node_budget: None,
            jobs: 1,
        }
    }
}

impl SearchLimits {
    /// Defaults, with `max_n` taken from `DCOAL_LIMIT_N` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = SearchLimits::default();
        if let Ok(raw) = std::env::var(LIMIT_N_ENV) {
            limits.max_n = raw
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("{LIMIT_N_ENV}={raw:?} is not an integer")))?;
        }
        Ok(limits)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DcResult {
    pub value: usize,
    /// Absent exactly when `value == 0`.
    pub witness: Option<Partition>,
    pub nodes_explored: u64,
}

/// Exact `DC(G)`.
///
/// Enumerates set partitions as restricted growth strings over `0..n`. A
/// branch dies as soon as some part double-dominates (every superset would
/// too) or when the open parts plus unplaced vertices cannot beat the best
/// count so far. Leaves are checked for a partner for every part.
///
/// Sequential runs return the first optimal partition in restricted-growth
/// order. With `jobs > 1` the value is the same but the witness may differ.
pub fn dc_number(g: &Graph, limits: &SearchLimits) -> Result<DcResult> {
    if g.isolated_vertex().is_some() {
        return Ok(DcResult {
            value: 0,
            witness: None,
            nodes_explored: 0,
        });
    }
    if g.n() > limits.max_n {
        return Err(Error::ResourceLimit(format!(
            "DC search limited to n <= {} (got n = {}); raise {LIMIT_N_ENV} to go further",
            limits.max_n,
            g.n()
        )));
    }
    let shared = Shared {
        best: AtomicUsize::new(1),
        nodes: AtomicU64::new(0),
        abort: AtomicBool::new(false),
        budget: limits.node_budget,
    };

    let found = if limits.jobs <= 1 {
        let mut search = DcSearch::new(g, &shared);
        search.place(0, 0);
        search.flush();
        search.found
    } else {
        let prefixes = shard_prefixes(g, limits.jobs * 16);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(limits.jobs)
            .build()
            .map_err(|e| Error::ResourceLimit(format!("cannot start worker pool: {e}")))?;
        let results: Vec<Option<(usize, Vec<usize>)>> = pool.install(|| {
            prefixes
                .par_iter()
                .map(|prefix| {
                    let mut search = DcSearch::new(g, &shared);
                    search.resume(prefix);
                    search.flush();
                    search.found
                })
                .collect()
        });
        // Highest value; ties go to the earliest shard.
        results
            .into_iter()
            .flatten()
            .fold(None, |acc: Option<(usize, Vec<usize>)>, cand| match acc {
                Some(a) if a.0 >= cand.0 => Some(a),
                _ => Some(cand),
            })
    };

    let nodes_explored = shared.nodes.load(Ordering::Relaxed);
    if shared.abort.load(Ordering::Relaxed) {
        return Err(Error::ResourceLimit(format!(
            "DC search exceeded its budget of {} nodes",
            limits.node_budget.unwrap_or(0)
        )));
    }
    let witness = found.map(|(_, rgs)| Partition::from_rgs(&rgs));
    if let Some(w) = &witness {
        let check = validate_dc_partition(g, w);
        if !check.valid {
            return Err(Error::Contract(format!("search produced an invalid witness: {check:?}")));
        }
    }
    Ok(DcResult {
        value: witness.as_ref().map_or(0, Partition::len),
        witness,
        nodes_explored,
    })
}

struct Shared {
    best: AtomicUsize,
    nodes: AtomicU64,
    abort: AtomicBool,
    budget: Option<u64>,
}

struct DcSearch<'a> {
    closed: &'a [u64],
    n: usize,
    full: u64,
    rgs: Vec<usize>,
    cover: Vec<Coverage>,
    shared: &'a Shared,
    pending: u64,
    found: Option<(usize, Vec<usize>)>,
}

impl<'a> DcSearch<'a> {
    fn new(g: &'a Graph, shared: &'a Shared) -> Self {
        DcSearch {
            closed: g.closed_masks(),
            n: g.n(),
            full: g.vertices().bits(),
            rgs: Vec::with_capacity(g.n()),
            cover: vec![Coverage::default(); g.n()],
            shared,
            pending: 0,
            found: None,
        }
    }

    fn flush(&mut self) {
        let total = self.shared.nodes.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
        self.pending = 0;
        if self.shared.budget.is_some_and(|b| total > b) {
            self.shared.abort.store(true, Ordering::Relaxed);
        }
    }

    /// Replays a shard prefix and searches below it.
    fn resume(&mut self, prefix: &[usize]) {
        let mut open = 0;
        for (v, &part) in prefix.iter().enumerate() {
            self.cover[part] = self.cover[part].cover(self.closed[v]);
            self.rgs.push(part);
            open = open.max(part + 1);
        }
        self.place(prefix.len(), open);
    }

    fn place(&mut self, v: usize, open: usize) {
        self.pending += 1;
        if self.pending >= FLUSH_EVERY {
            self.flush();
        }
        if self.shared.abort.load(Ordering::Relaxed) {
            return;
        }
        let best = self.shared.best.load(Ordering::Relaxed);
        if v == self.n {
            if open > best && self.every_part_has_partner(open) {
                self.shared.best.fetch_max(open, Ordering::Relaxed);
                if self.found.as_ref().is_none_or(|f| open > f.0) {
                    self.found = Some((open, self.rgs.clone()));
                }
            }
            return;
        }
        if open + (self.n - v) <= best {
            return;
        }
        for part in 0..=open {
            let saved = self.cover[part];
            let grown = saved.cover(self.closed[v]);
            if grown.is_double(self.full) {
                continue;
            }
            self.cover[part] = grown;
            self.rgs.push(part);
            self.place(v + 1, open.max(part + 1));
            self.rgs.pop();
            self.cover[part] = saved;
        }
    }

    fn every_part_has_partner(&self, k: usize) -> bool {
        let parts = &self.cover[..k];
        parts.iter().enumerate().all(|(i, a)| {
            parts
                .iter()
                .enumerate()
                .any(|(j, b)| i != j && a.merge(*b).is_double(self.full))
        })
    }
}

/// Restricted-growth prefixes (with no double-dominating part) covering the
/// whole search space, deepened until there are at least `want` of them.
fn shard_prefixes(g: &Graph, want: usize) -> Vec<Vec<usize>> {
    let closed = g.closed_masks();
    let full = g.vertices().bits();
    let mut level: Vec<Vec<usize>> = vec![Vec::new()];
    for v in 0..g.n() {
        if level.len() >= want {
            break;
        }
        let mut next = Vec::new();
        for prefix in &level {
            let open = prefix.iter().max().map_or(0, |m| m + 1);
            for part in 0..=open {
                let cover = prefix
                    .iter()
                    .enumerate()
                    .filter(|&(_, &b)| b == part)
                    .fold(Coverage::default(), |c, (u, _)| c.cover(closed[u]))
                    .cover(closed[v]);
                if !cover.is_double(full) {
                    let mut p = prefix.clone();
                    p.push(part);
                    next.push(p);
                }
            }
        }
        level = next;
    }
    level
}

/// How the last domatic class was turned into dc-partition parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LastClassStep {
    /// The last class was already a minimal DDS and was split in two.
    SplitMinimal,
    /// The leftover set partnered with an existing part and was kept as its own part.
    RemainderAdded,
    /// The leftover set had no partner and was merged into the second half.
    RemainderMerged,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub partition: Partition,
    /// `d×2(G)` of the domatic partition the construction started from.
    pub domatic: usize,
    pub last_step: LastClassStep,
}

/// Splits a minimal DDS into its lowest vertex and the rest. Proper subsets of
/// a minimal DDS are never DDSs, so both halves are non-dominating.
fn split_minimal(s: VertexSet) -> Result<(VertexSet, VertexSet)> {
    let low = s
        .first()
        .filter(|_| s.len() >= 2)
        .ok_or_else(|| Error::Contract(format!("cannot split {s:?} into two nonempty sets")))?;
    Ok((VertexSet::singleton(low), s.without(low)))
}

/// Builds a dc-partition with at least `2·d×2(G)` parts from a maximum double
/// domatic partition `D_1, ..., D_k`:
///
/// 1. shrink `D_1..D_{k-1}` to minimal DDSs, moving the excess into `D_k`;
/// 2. split each of those into two parts;
/// 3. if `D_k` is minimal, split it too; otherwise split a minimal `D'_k ⊂ D_k`
///    and keep `D''_k = D_k − D'_k` as its own part when it has a partner,
///    else merge it into the second half of `D'_k`.
pub fn construct_dc_partition(g: &Graph) -> Result<Construction> {
    let domatic = d_x2(g)?;
    let mut classes: Vec<VertexSet> = domatic.witness.parts().to_vec();
    let k = classes.len();
    let last = k - 1;

    for i in 0..last {
        let minimal = shrink_to_minimal(g, classes[i])?;
        let excess = classes[i].difference(minimal);
        classes[i] = minimal;
        classes[last] = classes[last].union(excess);
    }

    let mut parts = Vec::with_capacity(2 * k + 1);
    for &class in &classes[..last] {
        let (a, b) = split_minimal(class)?;
        parts.push(a);
        parts.push(b);
    }

    let tail = classes[last];
    let last_step = if is_minimal_dds(g, tail) {
        let (a, b) = split_minimal(tail)?;
        parts.push(a);
        parts.push(b);
        LastClassStep::SplitMinimal
    } else {
        let core = shrink_to_minimal(g, tail)?;
        let (a, b) = split_minimal(core)?;
        parts.push(a);
        parts.push(b);
        let remainder = tail.difference(core);
        if is_double_dominating(g, remainder) {
            return Err(Error::Contract(format!(
                "leftover {remainder:?} is a DDS, so the domatic partition was not maximum"
            )));
        }
        let mut partnered = false;
        for &p in &parts {
            if forms_double_coalition(g, remainder, p)? {
                partnered = true;
                break;
            }
        }
        if partnered {
            parts.push(remainder);
            LastClassStep::RemainderAdded
        } else {
            let merged = b.union(remainder);
            if is_double_dominating(g, merged) {
                return Err(Error::Contract(format!(
                    "merged part {merged:?} double-dominates although {b:?} and {remainder:?} do not partner"
                )));
            }
            parts.pop();
            parts.push(merged);
            LastClassStep::RemainderMerged
        }
    };

    let partition = Partition::new(parts);
    let check = validate_dc_partition(g, &partition);
    if !check.valid {
        return Err(Error::Contract(format!("constructed partition is invalid: {check:?}")));
    }
    Ok(Construction {
        partition,
        domatic: k,
        last_step,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_family, Family};

    fn fam(f: Family) -> Graph {
        gen_family(f).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn dc(g: &Graph) -> usize {
        dc_number(g, &SearchLimits::default()).unwrap().value
    }

    #[test]
    fn coalition_examples() {
        let k3 = fam(Family::Complete(3));
        assert!(forms_double_coalition(&k3, set(&[0]), set(&[1])).unwrap());
        let p5 = fam(Family::Path(5));
        for b in [0, 1, 3, 4] {
            assert!(!forms_double_coalition(&p5, set(&[2]), set(&[b])).unwrap());
        }
        // First clause fails when a is already a DDS.
        assert!(!forms_double_coalition(&k3, set(&[0, 1]), set(&[2])).unwrap());
        assert!(forms_double_coalition(&k3, set(&[0]), set(&[0, 1])).is_err());
        assert!(forms_double_coalition(&k3, VertexSet::EMPTY, set(&[1])).is_err());
    }

    #[test]
    fn complete_graph_singletons_all_partner() {
        let k5 = fam(Family::Complete(5));
        let p = Partition::from_vecs((0..5).map(|v| vec![v]));
        let v = validate_dc_partition(&k5, &p);
        assert!(v.valid);
        for (i, partners) in v.partner_map.iter().enumerate() {
            assert_eq!(partners.len(), 4, "part {i}");
        }
    }

    #[test]
    fn path6_construction_from_the_literature() {
        let p6 = fam(Family::Path(6));
        let p = Partition::new(vec![set(&[0, 1, 4, 5]), set(&[2]), set(&[3])]);
        let v = validate_dc_partition(&p6, &p);
        assert!(v.valid, "{v:?}");
        assert_eq!(v.partner_map, vec![vec![1, 2], vec![0], vec![0]]);
        assert_eq!(max_coalitions_per_part(&p6, &p).unwrap(), 2);
    }

    #[test]
    fn invalid_partitions() {
        let c3 = fam(Family::Cycle(3));
        let v = validate_dc_partition(&c3, &Partition::new(vec![c3.vertices()]));
        assert!(!v.valid);
        assert_eq!(v.reason, Some(DcReason::PartIsDds));
        assert_eq!(v.offending_part, Some(0));

        let v = validate_dc_partition(&c3, &Partition::from_vecs([vec![0, 1], vec![1, 2]]));
        assert_eq!(v.reason, Some(DcReason::Structural));

        let p5 = fam(Family::Path(5));
        let v = validate_dc_partition(&p5, &Partition::from_vecs([vec![0, 1, 2], vec![3], vec![4]]));
        assert!(!v.valid);
        assert_eq!(v.reason, Some(DcReason::PartHasNoPartner));
        assert!(max_coalitions_per_part(&p5, &Partition::new(vec![p5.vertices()])).is_err());
    }

    #[test]
    fn partner_cap_examples() {
        let k4 = fam(Family::Complete(4));
        let singles = Partition::from_vecs((0..4).map(|v| vec![v]));
        assert_eq!(max_coalitions_per_part(&k4, &singles).unwrap(), 3);
        let c6 = fam(Family::Cycle(6));
        let p = Partition::new(vec![set(&[0, 1, 2, 3]), set(&[4]), set(&[5])]);
        assert_eq!(max_coalitions_per_part(&c6, &p).unwrap(), 2);
        assert_eq!(validate_dc_partition(&c6, &p).partner_map[1], vec![0]);
    }

    #[test]
    fn dc_of_small_families() {
        for n in 2..=5 {
            assert_eq!(dc(&fam(Family::Path(n))), 2, "P{n}");
        }
        for n in 6..=9 {
            assert_eq!(dc(&fam(Family::Path(n))), 3, "P{n}");
        }
        for n in 3..=9 {
            assert_eq!(dc(&fam(Family::Cycle(n))), 3, "C{n}");
        }
        assert_eq!(dc(&fam(Family::Star(4))), 2);
        assert_eq!(dc(&fam(Family::Complete(6))), 6);
    }

    #[test]
    fn isolated_vertex_gives_zero() {
        let r = dc_number(&Graph::empty(1).unwrap(), &SearchLimits::default()).unwrap();
        assert_eq!((r.value, r.witness), (0, None));
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(dc(&g), 0);
    }

    #[test]
    fn sequential_witness_is_first_in_rgs_order() {
        use crate::oracle;
        for g in [fam(Family::Path(6)), fam(Family::Cycle(5)), fam(Family::CompleteBipartite(3, 3))] {
            let n = g.n();
            let all = oracle::set_partitions(n);
            let best = oracle::dc(&g);
            let first = all
                .iter()
                .find(|rgs| {
                    let parts = Partition::from_rgs(rgs);
                    parts.len() == best && oracle::is_dc_partition(&g, &oracle::members(n, &parts.to_vecs()))
                })
                .unwrap();
            let r = dc_number(&g, &SearchLimits::default()).unwrap();
            assert_eq!(r.witness.unwrap(), Partition::from_rgs(first), "{g:?}");
        }
    }

    #[test]
    fn limits_are_enforced() {
        let g = fam(Family::Path(14));
        assert!(matches!(dc_number(&g, &SearchLimits::default()), Err(Error::ResourceLimit(_))));
        let tight = SearchLimits {
            node_budget: Some(10),
            ..SearchLimits::default()
        };
        assert!(matches!(dc_number(&fam(Family::Path(11)), &tight), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn parallel_matches_sequential() {
        let par = SearchLimits {
            jobs: 4,
            ..SearchLimits::default()
        };
        for g in [fam(Family::Path(9)), fam(Family::Cycle(8)), fam(Family::CompleteBipartite(4, 3))] {
            let a = dc_number(&g, &SearchLimits::default()).unwrap();
            let b = dc_number(&g, &par).unwrap();
            assert_eq!(a.value, b.value, "{g:?}");
            assert!(validate_dc_partition(&g, b.witness.as_ref().unwrap()).valid);
        }
    }

    #[test]
    fn construct_k2_and_c6() {
        let k2 = fam(Family::Complete(2));
        let c = construct_dc_partition(&k2).unwrap();
        assert_eq!(c.partition.to_vecs(), vec![vec![0], vec![1]]);
        assert_eq!(c.last_step, LastClassStep::SplitMinimal);

        // C6: d×2 = 1, V shrinks to {1,2,4,5}, halves {1} and {2,4,5}; the
        // leftover {0,3} partners with {2,4,5}.
        let c6 = fam(Family::Cycle(6));
        let c = construct_dc_partition(&c6).unwrap();
        assert_eq!(c.domatic, 1);
        assert_eq!(c.last_step, LastClassStep::RemainderAdded);
        assert_eq!(c.partition.to_vecs(), vec![vec![1], vec![2, 4, 5], vec![0, 3]]);
    }

    #[test]
    fn construct_k4_reaches_floor() {
        let k4 = fam(Family::Complete(4));
        let c = construct_dc_partition(&k4).unwrap();
        assert_eq!(c.domatic, 2);
        assert!(c.partition.len() >= 4);
    }

    #[test]
    fn construct_rejects_isolated() {
        assert!(matches!(construct_dc_partition(&Graph::empty(3).unwrap()), Err(Error::NoDds { .. })));
    }

    #[test]
    fn limits_from_env_default() {
        // Only checks parsing of the default path; the variable is not set in tests.
        if std::env::var(LIMIT_N_ENV).is_err() {
            assert_eq!(SearchLimits::from_env().unwrap(), SearchLimits::default());
        }
    }
}
