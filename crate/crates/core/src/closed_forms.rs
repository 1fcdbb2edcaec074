//! Closed-form values for the graph families with known answers, and the
//! general bounds every exact result must satisfy.

use serde::Serialize;

use crate::coalition::max_coalitions_per_part;
use crate::error::{Error, Result};
use crate::generators::Family;
use crate::graph::Graph;
use crate::partition::Partition;

/// Where a closed form comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// A stated, proven result.
    Theorem,
    /// An unnumbered remark (the tightness of `DC(G) <= n` on `K_n`).
    Remark,
}

fn not_applicable(family: Family, why: &str) -> Error {
    Error::NotApplicable(format!("{family}: {why}"))
}

/// `γ×2` for cycles (`⌈2n/3⌉`, `n >= 3`) and `K_{r,s}` (`4`, `r, s >= 3`).
pub fn gamma_x2_closed(family: Family) -> Result<usize> {
    match family {
        Family::Cycle(n) if n >= 3 => Ok((2 * n).div_ceil(3)),
        Family::CompleteBipartite(r, s) if r.min(s) >= 3 => Ok(4),
        Family::Cycle(_) | Family::CompleteBipartite(..) => Err(not_applicable(family, "parameters below the proven range")),
        _ => Err(not_applicable(family, "no closed form for this family")),
    }
}

/// `DC` for paths, cycles, `K_{r,s}` with `min(r, s) >= 3`, and `K_n`.
pub fn dc_closed(family: Family) -> Result<usize> {
    match family {
        Family::Path(n) if n >= 2 => Ok(if n <= 5 { 2 } else { 3 }),
        Family::Cycle(n) if n >= 3 => Ok(3),
        Family::CompleteBipartite(r, s) if r.min(s) >= 3 => Ok(r + s - 2),
        Family::Complete(n) if n >= 2 => Ok(n),
        Family::Star(_) => Err(not_applicable(family, "no closed form for this family")),
        _ => Err(not_applicable(family, "parameters below the proven range")),
    }
}

pub fn dc_closed_provenance(family: Family) -> Provenance {
    match family {
        Family::Complete(_) => Provenance::Remark,
        _ => Provenance::Theorem,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundId {
    /// `2 <= DC(G) <= n` for isolate-free `G`.
    DcRange,
    /// `DC(G) >= 2·d×2(G)`.
    DcGe2Domatic,
    /// `DC(G) <= Δ(G) + 1` when `δ(G) = 1`.
    DcLeDeltaPlus1,
    /// Each part of a maximum dc-partition has at most `Δ(G)` partners.
    LemmaPartnerCap,
    /// `DC(G) = 0` exactly when `G` has an isolated vertex.
    DcZeroIsolated,
}

impl BoundId {
    pub const ALL: [BoundId; 5] = [
        BoundId::DcRange,
        BoundId::DcGe2Domatic,
        BoundId::DcLeDeltaPlus1,
        BoundId::LemmaPartnerCap,
        BoundId::DcZeroIsolated,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::DcRange => "dc_range",
            BoundId::DcGe2Domatic => "dc_ge_2domatic",
            BoundId::DcLeDeltaPlus1 => "dc_le_delta_plus_1",
            BoundId::LemmaPartnerCap => "lemma_partner_cap",
            BoundId::DcZeroIsolated => "dc_zero_isolated",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub bound_id: BoundId,
    pub applicable: bool,
    /// `None` when not applicable.
    pub holds: Option<bool>,
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn get(&self, id: BoundId) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.bound_id == id)
    }

    /// Conjunction over applicable entries.
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds != Some(false))
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.holds == Some(false))
    }
}

/// Exact solver outputs for one graph.
#[derive(Clone, Debug, Default)]
pub struct SolvedInvariants<'a> {
    /// `None` when `G` has no DDS.
    pub gamma_x2: Option<usize>,
    pub d_x2: Option<usize>,
    pub dc: usize,
    /// An optimal dc-partition, when `dc > 0`.
    pub dc_witness: Option<&'a Partition>,
}

/// Evaluates every bound against the exact values; inapplicable bounds are
/// recorded as such.
pub fn check_bounds(g: &Graph, inv: &SolvedInvariants<'_>) -> BoundReport {
    let n = g.n();
    let isolated = g.isolated_vertex().is_some();
    let min_deg = g.min_degree();
    let max_deg = g.max_degree();
    let dc = inv.dc;

    let entry = |bound_id, applicable: bool, lhs, rhs, holds: bool| BoundEntry {
        bound_id,
        applicable,
        holds: applicable.then_some(holds),
        lhs,
        rhs,
    };

    let mut entries = Vec::with_capacity(5);
    entries.push(entry(BoundId::DcRange, !isolated && n > 0, dc, n, (2..=n).contains(&dc)));
    let floor = inv.d_x2.map_or(0, |d| 2 * d);
    entries.push(entry(
        BoundId::DcGe2Domatic,
        !isolated && inv.d_x2.is_some(),
        dc,
        floor,
        dc >= floor,
    ));
    entries.push(entry(
        BoundId::DcLeDeltaPlus1,
        n > 0 && min_deg == 1,
        dc,
        max_deg + 1,
        dc <= max_deg + 1,
    ));
    let cap = inv.dc_witness.map(|w| max_coalitions_per_part(g, w));
    entries.push(match cap {
        Some(Ok(c)) => entry(BoundId::LemmaPartnerCap, true, c, max_deg, c <= max_deg),
        // An invalid witness is itself a failure.
        Some(Err(_)) => entry(BoundId::LemmaPartnerCap, true, usize::MAX, max_deg, false),
        None => entry(BoundId::LemmaPartnerCap, false, 0, max_deg, true),
    });
    entries.push(entry(BoundId::DcZeroIsolated, true, dc, 0, isolated == (dc == 0)));
    BoundReport { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalition::{dc_number, SearchLimits};
    use crate::domatic::d_x2;
    use crate::generators::gen_family;

    #[test]
    fn gamma_formulas() {
        assert_eq!(gamma_x2_closed(Family::Cycle(6)).unwrap(), 4);
        assert_eq!(gamma_x2_closed(Family::Cycle(7)).unwrap(), 5);
        assert_eq!(gamma_x2_closed(Family::CompleteBipartite(3, 5)).unwrap(), 4);
        assert!(matches!(gamma_x2_closed(Family::CompleteBipartite(2, 5)), Err(Error::NotApplicable(_))));
        assert!(gamma_x2_closed(Family::Path(5)).is_err());
        assert!(gamma_x2_closed(Family::Cycle(2)).is_err());
    }

    #[test]
    fn dc_formulas() {
        assert_eq!(dc_closed(Family::Path(5)).unwrap(), 2);
        assert_eq!(dc_closed(Family::Path(6)).unwrap(), 3);
        assert_eq!(dc_closed(Family::CompleteBipartite(4, 3)).unwrap(), 5);
        assert_eq!(dc_closed(Family::Complete(7)).unwrap(), 7);
        assert_eq!(dc_closed(Family::Cycle(3)).unwrap(), 3);
        for bad in [
            Family::Path(1),
            Family::Complete(1),
            Family::CompleteBipartite(2, 4),
            Family::Star(5),
        ] {
            assert!(matches!(dc_closed(bad), Err(Error::NotApplicable(_))), "{bad}");
        }
        assert_eq!(dc_closed_provenance(Family::Complete(4)), Provenance::Remark);
        assert_eq!(dc_closed_provenance(Family::Cycle(4)), Provenance::Theorem);
    }

    fn report_for(f: Family) -> BoundReport {
        let g = gen_family(f).unwrap();
        let dc = dc_number(&g, &SearchLimits::default()).unwrap();
        let d = d_x2(&g).ok().map(|r| r.value);
        check_bounds(
            &g,
            &SolvedInvariants {
                gamma_x2: None,
                d_x2: d,
                dc: dc.value,
                dc_witness: dc.witness.as_ref(),
            },
        )
    }

    #[test]
    fn path6_is_tight_for_delta_bound() {
        let r = report_for(Family::Path(6));
        let e = r.get(BoundId::DcLeDeltaPlus1).unwrap();
        assert_eq!((e.applicable, e.holds, e.lhs, e.rhs), (true, Some(true), 3, 3));
        assert!(r.all_hold());
    }

    #[test]
    fn k4_is_tight_for_domatic_bound() {
        let r = report_for(Family::Complete(4));
        let e = r.get(BoundId::DcGe2Domatic).unwrap();
        assert_eq!((e.holds, e.lhs, e.rhs), (Some(true), 4, 4));
        assert!(!r.get(BoundId::DcLeDeltaPlus1).unwrap().applicable);
        assert_eq!(r.get(BoundId::DcLeDeltaPlus1).unwrap().holds, None);
    }

    #[test]
    fn k1_only_isolation_bound_applies() {
        let r = report_for(Family::Complete(1));
        let e = r.get(BoundId::DcZeroIsolated).unwrap();
        assert_eq!((e.applicable, e.holds), (true, Some(true)));
        for id in [BoundId::DcRange, BoundId::DcGe2Domatic, BoundId::LemmaPartnerCap] {
            assert!(!r.get(id).unwrap().applicable, "{}", id.name());
        }
    }

    #[test]
    fn violations_are_reported() {
        let g = gen_family(Family::Path(6)).unwrap();
        let r = check_bounds(&g, &SolvedInvariants { dc: 5, d_x2: Some(1), ..Default::default() });
        let bad: Vec<_> = r.violations().map(|e| e.bound_id).collect();
        assert_eq!(bad, vec![BoundId::DcLeDeltaPlus1]);
        let r = check_bounds(&g, &SolvedInvariants { dc: 0, d_x2: Some(1), ..Default::default() });
        assert!(r.violations().any(|e| e.bound_id == BoundId::DcZeroIsolated));
    }
}
