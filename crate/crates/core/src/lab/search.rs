//! Counterexample search: exhaustive scans over instance streams for
//! claims that are *hunted*, not asserted. A finding is serialized like
//! a suite failure; an empty report only says the searched range is
//! clean, never that no instance exists beyond it.

use super::suites::{l3_formula_mismatch, InstanceKind};
use super::{enumerate, Failure, FailureDetail, Prepared, SuiteReport, SuiteSpec};
use crate::conditions::{
    condition1, condition2, condition3, condition4, interval_equality_report, ConditionVerdict,
};
use crate::error::{Error, Result};
use crate::foundation::{Universe, MAX_EXHAUSTIVE};
use crate::nests::Nest;
use crate::relations::Relation;
use serde::{Deserialize, Serialize};
use std::time::Duration;

/// How a search run ended: the full range was scanned, or the time
/// budget ran out first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Exhausted,
    BudgetSpent,
}

/// Catalog entry for one searchable claim.
#[derive(Debug, Clone, Copy)]
pub struct ClaimInfo {
    pub id: &'static str,
    pub kind: InstanceKind,
    /// Largest `max_n` the scan accepts.
    pub cap: usize,
    pub summary: &'static str,
}

const CLAIMS: &[ClaimInfo] = &[
    ClaimInfo {
        id: "T4-converse",
        kind: InstanceKind::TransitiveRelation,
        cap: enumerate::MAX_RELATION_ENUMERATION,
        summary: "hunt for a transitive relation whose reflexive interval \
                  topology equals the order topology while some condition \
                  fails — the four conditions are sufficient, not known to \
                  be necessary",
    },
    ClaimInfo {
        id: "T4-forward",
        kind: InstanceKind::TransitiveRelation,
        cap: enumerate::MAX_RELATION_ENUMERATION,
        summary: "hunt for a transitive relation where all four conditions \
                  hold yet the topologies differ (a finding would mean an \
                  implementation defect, since the implication is proved)",
    },
    ClaimInfo {
        id: "L3-general",
        kind: InstanceKind::Nest,
        cap: MAX_EXHAUSTIVE,
        summary: "hunt for a nest that does not T0-separate and where a \
                  boundary-intersection formula diverges from the \
                  order-derived complement",
    },
];

/// The searchable claims, in documentation order.
pub fn list_claims() -> &'static [ClaimInfo] {
    CLAIMS
}

fn claim_info(id: &str) -> Result<&'static ClaimInfo> {
    CLAIMS
        .iter()
        .find(|claim| claim.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// Scans the claim's instance stream for sizes 0..=max_n, stopping early
/// if the optional wall-clock budget runs out. Findings are reported as
/// failures; the status records whether the scan was exhaustive.
pub fn search_counterexample(
    claim_id: &str,
    max_n: usize,
    budget: Option<Duration>,
) -> Result<SuiteReport> {
    let start = super::WallClock::start();
    let claim = claim_info(claim_id)?;
    if max_n > claim.cap {
        return Err(Error::Config(format!(
            "claim {} scans universes up to n = {}, got {}",
            claim.id, claim.cap, max_n
        )));
    }
    let mut instances_checked = 0u64;
    let mut failures = Vec::new();
    let mut status = SearchStatus::Exhausted;
    'scan: for n in 0..=max_n {
        for prepared in claim_stream(claim, n)? {
            if let Some(limit) = budget {
                if start.elapsed() >= limit {
                    status = SearchStatus::BudgetSpent;
                    break 'scan;
                }
            }
            instances_checked += 1;
            if let Some(found) = evaluate(claim, &prepared) {
                failures.push(Failure {
                    instance: prepared.to_instance(),
                    predicate: found.predicate,
                    detail: found.detail,
                });
            }
        }
    }
    Ok(SuiteReport {
        suite_id: claim.id.to_string(),
        config: SuiteSpec::exhaustive(claim.id, max_n),
        instances_checked,
        failures,
        wall_time_ms: start.elapsed_ms(),
        status: Some(status),
    })
}

fn claim_stream(claim: &ClaimInfo, n: usize) -> Result<Vec<Prepared>> {
    let u = Universe::alphabetic(n);
    Ok(match claim.kind {
        InstanceKind::TransitiveRelation => enumerate::enumerate_transitive_relations(&u)?
            .into_iter()
            .map(Prepared::Relation)
            .collect(),
        // L3's asserted half covers T0-separating nests; the search
        // scans exactly the remainder.
        InstanceKind::Nest => enumerate::enumerate_nests(&u)?
            .into_iter()
            .filter(|nest| !nest.is_t0_separating())
            .map(Prepared::Nest)
            .collect(),
        _ => unreachable!("claims scan relations or nests"),
    })
}

fn evaluate(claim: &ClaimInfo, instance: &Prepared) -> Option<FailureDetail> {
    match (claim.id, instance) {
        ("T4-converse", Prepared::Relation(relation)) => t4_converse_finding(relation),
        ("T4-forward", Prepared::Relation(relation)) => t4_forward_finding(relation),
        ("L3-general", Prepared::Nest(nest)) => l3_general_finding(nest),
        _ => unreachable!("claim streams match claim kinds"),
    }
}

/// Replay path for search findings, mirroring the suite replay contract.
pub(crate) fn check_single(id: &str, instance: &Prepared) -> Result<Option<FailureDetail>> {
    let claim = CLAIMS
        .iter()
        .find(|claim| claim.id == id)
        .ok_or_else(|| super::unknown_suite(id))?;
    let n = instance.size();
    if n > claim.cap {
        return Err(Error::Config(format!(
            "claim {} replays universes up to n = {}, got {n}",
            claim.id, claim.cap
        )));
    }
    match (claim.kind, instance) {
        (InstanceKind::TransitiveRelation, Prepared::Relation(relation)) => {
            if !relation.is_transitive() {
                return Err(Error::Precondition(format!(
                    "claim {} instances must be transitive relations",
                    claim.id
                )));
            }
            Ok(evaluate(claim, instance))
        }
        (InstanceKind::Nest, Prepared::Nest(_)) => Ok(evaluate(claim, instance)),
        _ => Err(Error::Config(format!(
            "claim {} expects {} instances",
            claim.id,
            claim.kind.name()
        ))),
    }
}

fn t4_converse_finding(relation: &Relation) -> Option<FailureDetail> {
    let report = interval_equality_report(relation).expect("scan yields transitive relations");
    if !report.equality_without_conditions {
        return None;
    }
    let checks: [fn(&Relation) -> Result<ConditionVerdict>; 4] =
        [condition1, condition2, condition3, condition4];
    let held = checks.map(|check| {
        check(relation)
            .expect("transitivity already verified")
            .holds
    });
    Some(FailureDetail {
        predicate: "equality-without-conditions".to_string(),
        detail: format!(
            "topologies agree while conditions hold: 1:{} 2:{} 3:{} 4:{}",
            held[0], held[1], held[2], held[3]
        ),
    })
}

fn t4_forward_finding(relation: &Relation) -> Option<FailureDetail> {
    let report = interval_equality_report(relation).expect("scan yields transitive relations");
    if report.implication_holds {
        return None;
    }
    Some(FailureDetail {
        predicate: "implication-violated".to_string(),
        detail: format!(
            "all four conditions hold yet the topologies differ, pairs {:?}",
            relation.label_pairs()
        ),
    })
}

fn l3_general_finding(nest: &Nest) -> Option<FailureDetail> {
    l3_formula_mismatch(nest)
}
