//! One-shot analysis of a single family or relation: every derived
//! object the crate knows how to compute, bundled into one serializable
//! report. This is the shared backend for interactive surfaces (the CLI
//! `check`/`demo` subcommands and the browser demo).

use crate::conditions::{
    condition1, condition2, condition3, condition4, interval_equality_report, ray_equality_report,
    ConditionVerdict, IntervalEqualityReport, RayEqualityReport,
};
use crate::error::Result;
use crate::foundation::{SetFamily, Universe};
use crate::lab::Instance;
use crate::nests::{is_interlocking, t0_separation, t1_separation, Nest};
use crate::relations::Relation;
use crate::topology::{
    interval_topology, left_topology, lower_topology, order_topology, right_topology,
    upper_topology, Topology,
};

/// Everything derived from one family: nest-hood, separation,
/// interlocking, the topology it generates as a subbase, and — when the
/// family is a nest — its induced order and that order's topologies.
#[derive(Debug, Clone, serde::Serialize)]
pub struct FamilyAnalysis {
    pub universe: Vec<String>,
    pub sets: Vec<Vec<String>>,
    pub is_nest: bool,
    /// First ⊆-incomparable pair of members when the family is not a
    /// nest, rendered.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub incomparable_members: Option<(String, String)>,
    pub t0_separating: bool,
    pub t1_separating: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t0_failing_pair: Option<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t1_failing_pair: Option<(String, String)>,
    pub interlocking: bool,
    /// Opens generated by the family as a subbase; absent beyond the
    /// topology construction cap.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_topology: Option<Vec<Vec<String>>>,
    /// Present exactly when the family is a nest.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<NestOrderAnalysis>,
}

/// The order a nest induces, plus the four topologies derived from it.
#[derive(Debug, Clone, serde::Serialize)]
pub struct NestOrderAnalysis {
    pub strict_pairs: Vec<(String, String)>,
    pub linear: bool,
    /// Absent beyond the topology construction cap.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub topologies: Option<NestTopologies>,
}

/// Opens of the topologies a nest's induced order generates, under both
/// the strict (`<`) and reflexive (`⊴`) readings.
#[derive(Debug, Clone, serde::Serialize)]
pub struct NestTopologies {
    pub order_strict: Vec<Vec<String>>,
    pub interval_reflexive: Vec<Vec<String>>,
    pub interval_strict: Vec<Vec<String>>,
    pub order_reflexive: Vec<Vec<String>>,
}

/// Everything derived from one relation: the order-theoretic predicates,
/// the five derived topologies (computed on the relation exactly as
/// given), and — for transitive relations, read as the strict `<` — the
/// four condition verdicts with both equality reports.
#[derive(Debug, Clone, serde::Serialize)]
pub struct RelationAnalysis {
    pub universe: Vec<String>,
    pub pairs: Vec<(String, String)>,
    pub reflexive: bool,
    pub irreflexive: bool,
    pub transitive: bool,
    pub antisymmetric: bool,
    pub linear: bool,
    /// Absent beyond the topology construction cap.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub topologies: Option<RelationTopologies>,
    /// Present exactly when the relation is transitive.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conditions: Option<ConditionAnalysis>,
}

/// Opens of the five topologies a relation generates, plus the interval
/// topology of its reflexive closure (the reading the condition
/// machinery compares against).
#[derive(Debug, Clone, serde::Serialize)]
pub struct RelationTopologies {
    pub upper: Vec<Vec<String>>,
    pub lower: Vec<Vec<String>>,
    pub interval: Vec<Vec<String>>,
    pub left: Vec<Vec<String>>,
    pub right: Vec<Vec<String>>,
    pub order: Vec<Vec<String>>,
    pub interval_reflexive: Vec<Vec<String>>,
}

/// The four condition verdicts and the two topology-equality reports
/// they govern.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ConditionAnalysis {
    pub condition1: ConditionVerdict,
    pub condition2: ConditionVerdict,
    pub condition3: ConditionVerdict,
    pub condition4: ConditionVerdict,
    pub ray_equalities: RayEqualityReport,
    pub interval_equality: IntervalEqualityReport,
}

fn opens_of(topology: &Topology) -> Vec<Vec<String>> {
    topology.opens().member_label_lists()
}

pub fn analyze_family(family: &SetFamily) -> FamilyAnalysis {
    let t0 = t0_separation(family);
    let t1 = t1_separation(family);
    let nest = Nest::try_from(family.clone());
    let incomparable_members = match &nest {
        Ok(_) => None,
        Err(crate::error::Error::NotANest(a, b)) => Some((a.clone(), b.clone())),
        Err(_) => unreachable!("nest validation only reports incomparable pairs"),
    };
    FamilyAnalysis {
        universe: family.universe().labels().to_vec(),
        sets: family.member_label_lists(),
        is_nest: nest.is_ok(),
        incomparable_members,
        t0_separating: t0.t0,
        t1_separating: t1.t1,
        t0_failing_pair: t0.failing_pair,
        t1_failing_pair: t1.failing_pair,
        interlocking: is_interlocking(family),
        generated_topology: Topology::from_subbase(family).ok().map(|t| opens_of(&t)),
        order: nest.ok().map(|nest| analyze_nest_order(&nest)),
    }
}

fn analyze_nest_order(nest: &Nest) -> NestOrderAnalysis {
    let strict = nest.induced_order();
    let reflexive = nest.induced_order_reflexive();
    let topologies = match (
        order_topology(&strict),
        interval_topology(&reflexive),
        interval_topology(&strict),
        order_topology(&reflexive),
    ) {
        (Ok(a), Ok(b), Ok(c), Ok(d)) => Some(NestTopologies {
            order_strict: opens_of(&a),
            interval_reflexive: opens_of(&b),
            interval_strict: opens_of(&c),
            order_reflexive: opens_of(&d),
        }),
        _ => None,
    };
    NestOrderAnalysis {
        strict_pairs: strict.label_pairs(),
        linear: strict.is_linear(),
        topologies,
    }
}

pub fn analyze_relation(relation: &Relation) -> RelationAnalysis {
    let topologies = match (
        upper_topology(relation),
        lower_topology(relation),
        interval_topology(relation),
        left_topology(relation),
        right_topology(relation),
        order_topology(relation),
        interval_topology(&relation.reflexive_closure()),
    ) {
        (Ok(u), Ok(l), Ok(i), Ok(le), Ok(r), Ok(o), Ok(ir)) => Some(RelationTopologies {
            upper: opens_of(&u),
            lower: opens_of(&l),
            interval: opens_of(&i),
            left: opens_of(&le),
            right: opens_of(&r),
            order: opens_of(&o),
            interval_reflexive: opens_of(&ir),
        }),
        _ => None,
    };
    let conditions = relation.is_transitive().then(|| {
        let verdict = "transitivity was just checked";
        ConditionAnalysis {
            condition1: condition1(relation).expect(verdict),
            condition2: condition2(relation).expect(verdict),
            condition3: condition3(relation).expect(verdict),
            condition4: condition4(relation).expect(verdict),
            ray_equalities: ray_equality_report(relation).expect(verdict),
            interval_equality: interval_equality_report(relation).expect(verdict),
        }
    });
    RelationAnalysis {
        universe: relation.universe().labels().to_vec(),
        pairs: relation.label_pairs(),
        reflexive: relation.is_reflexive(),
        irreflexive: relation.is_irreflexive(),
        transitive: relation.is_transitive(),
        antisymmetric: relation.is_antisymmetric(),
        linear: relation.is_linear(),
        topologies,
        conditions,
    }
}

/// Analysis of a self-describing [`Instance`]: family-shaped kinds get a
/// [`FamilyAnalysis`], relation instances a [`RelationAnalysis`].
#[derive(Debug, Clone, serde::Serialize)]
#[serde(untagged)]
pub enum InstanceAnalysis {
    Family(Box<FamilyAnalysis>),
    Relation(Box<RelationAnalysis>),
}

/// Analyzes one instance of any kind. Family-shaped kinds (`nest`,
/// `family`, `topology`) are analyzed as the plain family of their sets
/// — a mislabeled `nest` instance reports `is_nest: false` rather than
/// erroring — and a `nest_pair` is analyzed as the union of its two
/// sides, the family the pair suites study.
pub fn analyze_instance(instance: &Instance) -> Result<InstanceAnalysis> {
    match instance {
        Instance::Nest { universe, sets }
        | Instance::Family { universe, sets }
        | Instance::Topology {
            universe,
            opens: sets,
        } => {
            let u = Universe::new(universe.iter().cloned())?;
            let family = SetFamily::from_label_lists(u, sets)?;
            Ok(InstanceAnalysis::Family(Box::new(analyze_family(&family))))
        }
        Instance::NestPair {
            universe,
            left,
            right,
        } => {
            let u = Universe::new(universe.iter().cloned())?;
            let l = SetFamily::from_label_lists(u.clone(), left)?;
            let r = SetFamily::from_label_lists(u, right)?;
            let union = l.union_with(&r)?;
            Ok(InstanceAnalysis::Family(Box::new(analyze_family(&union))))
        }
        Instance::Relation { universe, pairs } => {
            let u = Universe::new(universe.iter().cloned())?;
            let pairs: Vec<(&str, &str)> = pairs
                .iter()
                .map(|(x, y)| (x.as_str(), y.as_str()))
                .collect();
            let relation = Relation::from_label_pairs(u, &pairs)?;
            Ok(InstanceAnalysis::Relation(Box::new(analyze_relation(
                &relation,
            ))))
        }
    }
}

impl FamilyAnalysis {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("analysis serializes");
        s.push('\n');
        s
    }
}

impl InstanceAnalysis {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("analysis serializes");
        s.push('\n');
        s
    }
}

impl RelationAnalysis {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("analysis serializes");
        s.push('\n');
        s
    }
}
