//! The named check suites: a catalog mapping suite ids to instance
//! streams and predicates. Each suite states one verified claim over
//! every instance in its stream; a passing run is evidence, a failing
//! instance is serialized for replay.
//!
//! All suites here restate proved facts, so a failure almost certainly
//! means an implementation or interpretation defect on this side, not a
//! refutation — report language and docs keep that framing.

use super::{CheckFn, FailureDetail, Harness, Prepared, SuiteMode, SuiteSpec, MAX_SAMPLED};
use crate::conditions::{condition1, interval_equality_report, ray_equality_report};
use crate::error::{Error, Result};
use crate::foundation::{SetFamily, Universe, MAX_EXHAUSTIVE};
use crate::lab::{enumerate, sample};
use crate::nests::{
    check_t1_union_criterion, interlocking_minmax_clauses, is_interlocking, t1_separation, Nest,
};
use crate::relations::Relation;
use crate::topology::{
    enumerate_topologies, famset_of, interval_topology, order_topology, Topology,
    MAX_TOPOLOGY_ENUMERATION,
};
use std::collections::HashSet;

/// Largest universe for exhaustive nest-pair suites: the pair count is
/// the squared nest count per size (90,000 pairs at the cap; the next
/// size would add 4.7 million).
const MAX_PAIR_EXHAUSTIVE: usize = 4;

/// What kind of object a suite's instance stream yields.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceKind {
    Nest,
    NestPair,
    TransitiveRelation,
    LinearOrder,
    Family,
    Topology,
}

impl InstanceKind {
    pub fn name(self) -> &'static str {
        match self {
            InstanceKind::Nest => "nest",
            InstanceKind::NestPair => "nest-pair",
            InstanceKind::TransitiveRelation => "transitive-relation",
            InstanceKind::LinearOrder => "linear-order",
            InstanceKind::Family => "family",
            InstanceKind::Topology => "topology",
        }
    }
}

/// Catalog entry for one named suite.
#[derive(Debug, Clone, Copy)]
pub struct SuiteInfo {
    pub id: &'static str,
    pub kind: InstanceKind,
    /// Largest `max_n` accepted in exhaustive mode.
    pub exhaustive_cap: usize,
    /// Whether the suite's instance kind has a sampler (sampled runs cap
    /// at [`MAX_SAMPLED`] instead).
    pub supports_sampling: bool,
    pub summary: &'static str,
}

const SUITES: &[SuiteInfo] = &[
    SuiteInfo {
        id: "NESTORD",
        kind: InstanceKind::Nest,
        exhaustive_cap: MAX_EXHAUSTIVE,
        supports_sampling: true,
        summary: "the order induced by a nest is a strict partial order, \
                  and linear exactly when the nest T0-separates",
    },
    SuiteInfo {
        id: "T1",
        kind: InstanceKind::NestPair,
        exhaustive_cap: MAX_PAIR_EXHAUSTIVE,
        supports_sampling: true,
        summary: "a pair's union T1-separates iff both nests T0-separate \
                  and their induced orders are mutual transposes",
    },
    SuiteInfo {
        id: "T2",
        kind: InstanceKind::Nest,
        exhaustive_cap: MAX_EXHAUSTIVE,
        supports_sampling: true,
        summary: "on T0-separating nests, interlocking agrees with both \
                  maximal/minimal-element clause forms",
    },
    SuiteInfo {
        id: "T3FIN",
        kind: InstanceKind::Topology,
        exhaustive_cap: MAX_TOPOLOGY_ENUMERATION,
        supports_sampling: false,
        summary: "a finite topology arises as a T0-separating nest's \
                  reflexive interval topology iff it is discrete",
    },
    SuiteInfo {
        id: "L1",
        kind: InstanceKind::NestPair,
        exhaustive_cap: MAX_PAIR_EXHAUSTIVE,
        supports_sampling: true,
        summary: "with a T1-separating union, the derived topologies chain \
                  order(<) = interval(⊴) ⊆ generated ⊆ interval(<) = order(⊴), \
                  and generated collapses onto order(<) when both nests interlock",
    },
    SuiteInfo {
        id: "L2",
        kind: InstanceKind::Nest,
        exhaustive_cap: MAX_EXHAUSTIVE,
        supports_sampling: true,
        summary: "set-product formulas reproduce the induced order and \
                  both order complements on every nest",
    },
    SuiteInfo {
        id: "L3",
        kind: InstanceKind::Nest,
        exhaustive_cap: MAX_EXHAUSTIVE,
        supports_sampling: true,
        summary: "boundary-intersection formulas match the order-derived \
                  up/down-set complements on T0-separating nests",
    },
    SuiteInfo {
        id: "L4",
        kind: InstanceKind::Nest,
        exhaustive_cap: MAX_EXHAUSTIVE,
        supports_sampling: true,
        summary: "member-union formulas reproduce both rays of the induced \
                  order on every nest",
    },
    SuiteInfo {
        id: "R1",
        kind: InstanceKind::Nest,
        exhaustive_cap: MAX_EXHAUSTIVE,
        supports_sampling: true,
        summary: "on T0-separating nests the reflexive interval topology \
                  equals the strict order topology, while the swapped \
                  readings are both discrete",
    },
    SuiteInfo {
        id: "P1",
        kind: InstanceKind::TransitiveRelation,
        exhaustive_cap: enumerate::MAX_RELATION_ENUMERATION,
        supports_sampling: true,
        summary: "each ray-topology equality holds iff its matching pair \
                  of conditions holds, on every transitive relation",
    },
    SuiteInfo {
        id: "T4",
        kind: InstanceKind::TransitiveRelation,
        exhaustive_cap: enumerate::MAX_RELATION_ENUMERATION,
        supports_sampling: true,
        summary: "all four conditions together force the reflexive interval \
                  topology to equal the order topology",
    },
    SuiteInfo {
        id: "R2",
        kind: InstanceKind::LinearOrder,
        exhaustive_cap: enumerate::MAX_ORDER_ENUMERATION,
        supports_sampling: false,
        summary: "every strict total order satisfies condition 1",
    },
    SuiteInfo {
        id: "MINTOP",
        kind: InstanceKind::Family,
        exhaustive_cap: enumerate::MAX_FAMILY_ENUMERATION,
        supports_sampling: false,
        summary: "the topology generated by a family is the least \
                  enumerated topology containing it",
    },
];

/// The full suite catalog, in documentation order.
pub fn list_suites() -> &'static [SuiteInfo] {
    SUITES
}

fn suite_info(id: &str) -> Result<&'static SuiteInfo> {
    SUITES
        .iter()
        .find(|info| info.id == id)
        .ok_or_else(|| super::unknown_suite(id))
}

pub(crate) fn prepare(spec: &SuiteSpec) -> Result<Harness> {
    let info = suite_info(&spec.suite_id)?;
    validate(info, spec)?;
    Ok(Harness {
        instances: build_instances(info.kind, spec)?,
        check: build_check(info.id, spec.max_n)?,
    })
}

fn validate(info: &SuiteInfo, spec: &SuiteSpec) -> Result<()> {
    match spec.mode {
        SuiteMode::Exhaustive => {
            if spec.samples.is_some() || spec.seed.is_some() {
                return Err(Error::Config(
                    "exhaustive runs take no samples or seed".into(),
                ));
            }
            if spec.max_n > info.exhaustive_cap {
                return Err(Error::Config(format!(
                    "suite {} caps exhaustive runs at max_n = {}, got {}",
                    info.id, info.exhaustive_cap, spec.max_n
                )));
            }
        }
        SuiteMode::Sampled => {
            if !info.supports_sampling {
                return Err(Error::Config(format!(
                    "suite {} runs exhaustively only",
                    info.id
                )));
            }
            if spec.samples.is_none_or(|count| count == 0) {
                return Err(Error::Config("sampled runs need samples ≥ 1".into()));
            }
            if spec.max_n > MAX_SAMPLED {
                return Err(Error::Config(format!(
                    "sampled runs cap at max_n = {MAX_SAMPLED}, got {}",
                    spec.max_n
                )));
            }
        }
    }
    Ok(())
}

/// Exhaustive streams cover every size 0..=max_n; sampled streams draw
/// at exactly max_n (smaller sizes are cheap to exhaust directly).
fn build_instances(kind: InstanceKind, spec: &SuiteSpec) -> Result<Vec<Prepared>> {
    match spec.mode {
        SuiteMode::Exhaustive => exhaustive_instances(kind, spec.max_n),
        SuiteMode::Sampled => sampled_instances(kind, spec),
    }
}

fn exhaustive_instances(kind: InstanceKind, max_n: usize) -> Result<Vec<Prepared>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let u = Universe::alphabetic(n);
        match kind {
            InstanceKind::Nest => {
                out.extend(
                    enumerate::enumerate_nests(&u)?
                        .into_iter()
                        .map(Prepared::Nest),
                );
            }
            InstanceKind::NestPair => {
                let nests = enumerate::enumerate_nests(&u)?;
                for left in &nests {
                    for right in &nests {
                        out.push(Prepared::NestPair(left.clone(), right.clone()));
                    }
                }
            }
            InstanceKind::TransitiveRelation => out.extend(
                enumerate::enumerate_transitive_relations(&u)?
                    .into_iter()
                    .map(Prepared::Relation),
            ),
            InstanceKind::LinearOrder => out.extend(
                enumerate::enumerate_linear_orders(&u)?
                    .into_iter()
                    .map(Prepared::Relation),
            ),
            InstanceKind::Family => out.extend(
                enumerate::enumerate_families(&u)?
                    .into_iter()
                    .map(Prepared::Family),
            ),
            InstanceKind::Topology => {
                out.extend(
                    enumerate_topologies(&u)?
                        .into_iter()
                        .map(Prepared::Topology),
                );
            }
        }
    }
    Ok(out)
}

fn sampled_instances(kind: InstanceKind, spec: &SuiteSpec) -> Result<Vec<Prepared>> {
    let u = Universe::alphabetic(spec.max_n);
    let count = spec.samples.expect("validated: sampled mode has a count");
    let seed = spec.seed.unwrap_or(0);
    Ok(match kind {
        InstanceKind::Nest => sample::sample_nests(&u, count, seed)
            .into_iter()
            .map(Prepared::Nest)
            .collect(),
        InstanceKind::NestPair => sample::sample_nest_pairs(&u, count, seed)
            .into_iter()
            .map(|(left, right)| Prepared::NestPair(left, right))
            .collect(),
        InstanceKind::TransitiveRelation => sample::sample_transitive_relations(&u, count, seed)?
            .into_iter()
            .map(Prepared::Relation)
            .collect(),
        _ => unreachable!("sampling was rejected for exhaustive-only suites"),
    })
}

fn build_check(id: &str, max_n: usize) -> Result<CheckFn> {
    Ok(match id {
        "NESTORD" => nest_check(nestord_failure),
        "T1" => pair_check(t1_failure),
        "T2" => nest_check(t2_failure),
        "T3FIN" => {
            let achieved = achieved_interval_famsets_upto(max_n)?;
            topology_check(move |t| t3fin_failure(t, &achieved[t.universe().size()]))
        }
        "L1" => pair_check(l1_failure),
        "L2" => nest_check(l2_failure),
        "L3" => nest_check(l3_failure),
        "L4" => nest_check(l4_failure),
        "R1" => nest_check(r1_failure),
        "P1" => relation_check(p1_failure),
        "T4" => relation_check(t4_failure),
        "R2" => relation_check(r2_failure),
        "MINTOP" => {
            let oracles = topology_famsets_upto(max_n)?;
            family_check(move |f| mintop_failure(f, &oracles[f.universe().size()]))
        }
        _ => unreachable!("the suite table covers every id"),
    })
}

/// Re-evaluates one prepared instance against one suite's predicate —
/// the replay path for serialized failures.
pub(crate) fn check_single(suite_id: &str, instance: &Prepared) -> Result<Option<FailureDetail>> {
    let info = suite_info(suite_id)?;
    let n = instance.size();
    let cap = if info.supports_sampling {
        info.exhaustive_cap.max(MAX_SAMPLED)
    } else {
        info.exhaustive_cap
    };
    if n > cap {
        return Err(Error::Config(format!(
            "suite {} replays universes up to n = {cap}, got {n}",
            info.id
        )));
    }
    match (info.id, instance) {
        ("NESTORD", Prepared::Nest(nest)) => Ok(nestord_failure(nest)),
        ("T1", Prepared::NestPair(left, right)) => Ok(t1_failure(left, right)),
        ("T2", Prepared::Nest(nest)) => Ok(t2_failure(nest)),
        ("T3FIN", Prepared::Topology(topology)) => {
            let achieved = achieved_interval_famsets_upto(n)?;
            Ok(t3fin_failure(topology, &achieved[n]))
        }
        ("L1", Prepared::NestPair(left, right)) => Ok(l1_failure(left, right)),
        ("L2", Prepared::Nest(nest)) => Ok(l2_failure(nest)),
        ("L3", Prepared::Nest(nest)) => Ok(l3_failure(nest)),
        ("L4", Prepared::Nest(nest)) => Ok(l4_failure(nest)),
        ("R1", Prepared::Nest(nest)) => Ok(r1_failure(nest)),
        ("P1", Prepared::Relation(relation)) => {
            require_transitive_instance(info.id, relation)?;
            Ok(p1_failure(relation))
        }
        ("T4", Prepared::Relation(relation)) => {
            require_transitive_instance(info.id, relation)?;
            Ok(t4_failure(relation))
        }
        ("R2", Prepared::Relation(relation)) => {
            if !(relation.is_transitive() && relation.is_irreflexive() && relation.is_linear()) {
                return Err(Error::Precondition(format!(
                    "suite {} instances must be strict total orders",
                    info.id
                )));
            }
            Ok(r2_failure(relation))
        }
        ("MINTOP", Prepared::Family(family)) => {
            let oracles = topology_famsets_upto(n)?;
            Ok(mintop_failure(family, &oracles[n]))
        }
        _ => Err(Error::Config(format!(
            "suite {} expects {} instances",
            info.id,
            info.kind.name()
        ))),
    }
}

fn require_transitive_instance(id: &str, relation: &Relation) -> Result<()> {
    if relation.is_transitive() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "suite {id} instances must be transitive relations"
        )))
    }
}

// ---- check-kind adapters ------------------------------------------------

fn nest_check<F>(f: F) -> CheckFn
where
    F: Fn(&Nest) -> Option<FailureDetail> + Send + Sync + 'static,
{
    Box::new(move |instance| match instance {
        Prepared::Nest(nest) => f(nest),
        _ => unreachable!("nest suites receive nest instances"),
    })
}

fn pair_check<F>(f: F) -> CheckFn
where
    F: Fn(&Nest, &Nest) -> Option<FailureDetail> + Send + Sync + 'static,
{
    Box::new(move |instance| match instance {
        Prepared::NestPair(left, right) => f(left, right),
        _ => unreachable!("pair suites receive nest-pair instances"),
    })
}

fn relation_check<F>(f: F) -> CheckFn
where
    F: Fn(&Relation) -> Option<FailureDetail> + Send + Sync + 'static,
{
    Box::new(move |instance| match instance {
        Prepared::Relation(relation) => f(relation),
        _ => unreachable!("relation suites receive relation instances"),
    })
}

fn family_check<F>(f: F) -> CheckFn
where
    F: Fn(&SetFamily) -> Option<FailureDetail> + Send + Sync + 'static,
{
    Box::new(move |instance| match instance {
        Prepared::Family(family) => f(family),
        _ => unreachable!("family suites receive family instances"),
    })
}

fn topology_check<F>(f: F) -> CheckFn
where
    F: Fn(&Topology) -> Option<FailureDetail> + Send + Sync + 'static,
{
    Box::new(move |instance| match instance {
        Prepared::Topology(topology) => f(topology),
        _ => unreachable!("topology suites receive topology instances"),
    })
}

// ---- oracle contexts ----------------------------------------------------

/// Family bitmaps of every topology per universe size 0..=max_n — the
/// universe the MINTOP meet is taken over.
fn topology_famsets_upto(max_n: usize) -> Result<Vec<Vec<u64>>> {
    (0..=max_n)
        .map(|n| {
            let u = Universe::alphabetic(n);
            Ok(enumerate_topologies(&u)?
                .iter()
                .map(Topology::famset)
                .collect())
        })
        .collect()
}

/// Family bitmaps of the reflexive interval topologies achieved by
/// T0-separating nests, per universe size 0..=max_n.
fn achieved_interval_famsets_upto(max_n: usize) -> Result<Vec<HashSet<u64>>> {
    (0..=max_n)
        .map(|n| {
            let u = Universe::alphabetic(n);
            let mut achieved = HashSet::new();
            for nest in enumerate::enumerate_nests(&u)? {
                if nest.is_t0_separating() {
                    achieved.insert(interval_topology(&nest.induced_order_reflexive())?.famset());
                }
            }
            Ok(achieved)
        })
        .collect()
}

// ---- suite predicates ---------------------------------------------------

fn fail(predicate: &str, detail: String) -> Option<FailureDetail> {
    Some(FailureDetail {
        predicate: predicate.to_string(),
        detail,
    })
}

fn nestord_failure(nest: &Nest) -> Option<FailureDetail> {
    let order = nest.induced_order();
    let broken_law = [
        ("irreflexive", order.is_irreflexive()),
        ("antisymmetric", order.is_antisymmetric()),
        ("transitive", order.is_transitive()),
    ]
    .into_iter()
    .find_map(|(law, holds)| (!holds).then_some(law));
    if let Some(law) = broken_law {
        return fail(
            "strict-partial-order",
            format!(
                "induced order is not {law}: pairs {:?}",
                order.label_pairs()
            ),
        );
    }
    if nest.is_t0_separating() && !order.is_linear() {
        return fail(
            "linear-when-separating",
            format!(
                "nest separates points yet leaves a pair incomparable: pairs {:?}",
                order.label_pairs()
            ),
        );
    }
    None
}

fn t1_failure(left: &Nest, right: &Nest) -> Option<FailureDetail> {
    let check = check_t1_union_criterion(left, right).expect("pair instances share a universe");
    if check.sides_agree() {
        return None;
    }
    fail(
        "union-separation-criterion",
        format!(
            "union T1-separates: {}, both T0-separate: {}, orders mutually transposed: {}",
            check.union_t1, check.both_t0, check.orders_opposed
        ),
    )
}

fn t2_failure(nest: &Nest) -> Option<FailureDetail> {
    if !nest.is_t0_separating() {
        return None;
    }
    let interlocking = is_interlocking(nest.family());
    let (max_implies_min, no_max_or_min) =
        interlocking_minmax_clauses(nest).expect("separation was just verified");
    if interlocking == max_implies_min && interlocking == no_max_or_min {
        return None;
    }
    fail(
        "interlocking-clause-agreement",
        format!(
            "interlocking: {interlocking}, member-max-implies-complement-min: \
             {max_implies_min}, no-max-or-complement-min: {no_max_or_min}"
        ),
    )
}

fn t3fin_failure(topology: &Topology, achieved: &HashSet<u64>) -> Option<FailureDetail> {
    let realizable = achieved.contains(&topology.famset());
    let discrete = topology.is_discrete();
    if realizable == discrete {
        return None;
    }
    fail(
        "discrete-characterization",
        format!(
            "realizable as a separating nest's interval topology: {realizable}, \
             discrete: {discrete}, opens {}",
            topology.opens().render()
        ),
    )
}

fn l1_failure(left: &Nest, right: &Nest) -> Option<FailureDetail> {
    let union = left
        .family()
        .union_with(right.family())
        .expect("pair instances share a universe");
    if !t1_separation(&union).t1 {
        return None;
    }
    let strict = left.induced_order();
    let reflexive = left.induced_order_reflexive();
    let cap = "suite caps keep topology construction in range";
    let order_strict = order_topology(&strict).expect(cap);
    let interval_reflexive = interval_topology(&reflexive).expect(cap);
    let generated = Topology::from_subbase(&union).expect(cap);
    let interval_strict = interval_topology(&strict).expect(cap);
    let order_reflexive = order_topology(&reflexive).expect(cap);

    let links = [
        ("order(<) = interval(⊴)", order_strict == interval_reflexive),
        (
            "interval(⊴) ⊆ generated",
            interval_reflexive
                .is_coarser_or_equal(&generated)
                .expect(cap),
        ),
        (
            "generated ⊆ interval(<)",
            generated.is_coarser_or_equal(&interval_strict).expect(cap),
        ),
        ("interval(<) = order(⊴)", interval_strict == order_reflexive),
    ];
    if let Some((link, _)) = links.iter().find(|(_, holds)| !holds) {
        return fail("topology-chain", format!("chain link failed: {link}"));
    }
    if is_interlocking(left.family())
        && is_interlocking(right.family())
        && generated != order_strict
    {
        return fail(
            "interlocking-collapse",
            "both nests interlock yet the generated topology is strictly finer \
             than the order topology"
                .to_string(),
        );
    }
    None
}

fn l2_failure(nest: &Nest) -> Option<FailureDetail> {
    let u = nest.universe();
    let strict = nest.induced_order();
    if nest.order_via_products() != strict {
        return fail(
            "order-product-formula",
            format!(
                "member-product union disagrees with the induced order on {}",
                nest.family().render()
            ),
        );
    }
    let strict_complement = Relation::from_fn(u.clone(), |x, y| !strict.holds(x, y));
    if nest.order_complement_via_products() != strict_complement {
        return fail(
            "strict-complement-formula",
            format!(
                "product-intersection form disagrees with the strict order \
                 complement on {}",
                nest.family().render()
            ),
        );
    }
    let reflexive = nest.induced_order_reflexive();
    let reflexive_complement = Relation::from_fn(u.clone(), |x, y| !reflexive.holds(x, y));
    if nest.reflexive_order_complement_via_products() != reflexive_complement {
        return fail(
            "reflexive-complement-formula",
            format!(
                "diagonal-trimmed product form disagrees with the reflexive \
                 order complement on {}",
                nest.family().render()
            ),
        );
    }
    None
}

/// Compares both boundary-complement formulas with complements computed
/// straight from the induced orders, at every point. Shared by the L3
/// suite (which asserts it on T0-separating nests) and the L3-general
/// search (which scans the remaining nests and only reports).
pub(crate) fn l3_formula_mismatch(nest: &Nest) -> Option<FailureDetail> {
    let u = nest.universe();
    let strict = nest.induced_order();
    let reflexive = nest.induced_order_reflexive();
    for x in 0..u.size() {
        let upper = nest.upper_complement_formula(x);
        let upper_direct = reflexive.right_ray(x).complement();
        if upper != upper_direct {
            return fail(
                "upper-boundary-formula",
                format!(
                    "at {}: member-intersection formula gives {}, up-set \
                     complement is {}",
                    u.label(x),
                    upper.render(u),
                    upper_direct.render(u)
                ),
            );
        }
        let lower = nest.lower_complement_formula(x);
        let lower_direct = strict.left_ray(x).complement();
        if lower != lower_direct {
            return fail(
                "lower-boundary-formula",
                format!(
                    "at {}: complement-intersection formula gives {}, down-set \
                     complement is {}",
                    u.label(x),
                    lower.render(u),
                    lower_direct.render(u)
                ),
            );
        }
    }
    None
}

fn l3_failure(nest: &Nest) -> Option<FailureDetail> {
    if !nest.is_t0_separating() {
        return None;
    }
    l3_formula_mismatch(nest)
}

fn l4_failure(nest: &Nest) -> Option<FailureDetail> {
    let u = nest.universe();
    let strict = nest.induced_order();
    for x in 0..u.size() {
        let left = nest.left_ray_via_members(x);
        let left_direct = strict.left_ray(x);
        if left != left_direct {
            return fail(
                "left-ray-formula",
                format!(
                    "at {}: union of members missing the point gives {}, the \
                     ray is {}",
                    u.label(x),
                    left.render(u),
                    left_direct.render(u)
                ),
            );
        }
        let right = nest.right_ray_via_members(x);
        let right_direct = strict.right_ray(x);
        if right != right_direct {
            return fail(
                "right-ray-formula",
                format!(
                    "at {}: union of member complements gives {}, the ray is {}",
                    u.label(x),
                    right.render(u),
                    right_direct.render(u)
                ),
            );
        }
    }
    None
}

fn r1_failure(nest: &Nest) -> Option<FailureDetail> {
    if !nest.is_t0_separating() {
        return None;
    }
    let strict = nest.induced_order();
    let reflexive = nest.induced_order_reflexive();
    let cap = "suite caps keep topology construction in range";
    let interval_reflexive = interval_topology(&reflexive).expect(cap);
    let order_strict = order_topology(&strict).expect(cap);
    if interval_reflexive != order_strict {
        return fail(
            "interval-equals-order",
            format!(
                "interval topology of ⊴ has {} opens, order topology of < has {}",
                interval_reflexive.open_count(),
                order_strict.open_count()
            ),
        );
    }
    let order_reflexive = order_topology(&reflexive).expect(cap);
    if !order_reflexive.is_discrete() {
        return fail(
            "reflexive-order-discrete",
            format!(
                "order topology of ⊴ has only {} opens on {} points",
                order_reflexive.open_count(),
                nest.universe().size()
            ),
        );
    }
    let interval_strict = interval_topology(&strict).expect(cap);
    if !interval_strict.is_discrete() {
        return fail(
            "strict-interval-discrete",
            format!(
                "interval topology of < has only {} opens on {} points",
                interval_strict.open_count(),
                nest.universe().size()
            ),
        );
    }
    None
}

fn p1_failure(relation: &Relation) -> Option<FailureDetail> {
    let report =
        ray_equality_report(relation).expect("instance streams yield transitive relations");
    if report.agrees() {
        return None;
    }
    fail(
        "ray-biconditional",
        serde_json::to_string(&report).expect("report serializes"),
    )
}

fn t4_failure(relation: &Relation) -> Option<FailureDetail> {
    let report =
        interval_equality_report(relation).expect("instance streams yield transitive relations");
    if report.implication_holds {
        return None;
    }
    fail(
        "conditions-imply-equality",
        format!(
            "all four conditions hold yet the topologies differ, pairs {:?}",
            relation.label_pairs()
        ),
    )
}

fn r2_failure(order: &Relation) -> Option<FailureDetail> {
    let verdict = condition1(order).expect("total orders are transitive");
    if verdict.holds {
        return None;
    }
    fail(
        "first-condition",
        format!("condition 1 fails at pair {:?}", verdict.failing_pair),
    )
}

/// The meet of every enumerated topology containing the family is the
/// least topology containing it; the generated topology must equal it.
fn mintop_failure(family: &SetFamily, oracle_famsets: &[u64]) -> Option<FailureDetail> {
    let generated = Topology::from_subbase(family).expect("family sizes stay within the cap");
    let target = famset_of(family);
    let mut meet = u64::MAX;
    for &candidate in oracle_famsets {
        if target & !candidate == 0 {
            meet &= candidate;
        }
    }
    if generated.famset() == meet {
        return None;
    }
    fail(
        "minimal-containing-topology",
        format!(
            "generated topology {} differs from the meet of all enumerated \
             topologies containing {}",
            generated.opens().render(),
            family.render()
        ),
    )
}
