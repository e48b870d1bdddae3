//! Finite topologies, stored as the full family of open sets.
//!
//! Everything is computed on a "family bitmap": a `u64` whose bit `s`
//! says whether the subset with characteristic mask `s` belongs to the
//! family. That representation caps topology work at universes of six
//! elements (2^6 = 64 candidate subsets — one machine word), which is
//! exactly the exhaustive-mode bound; materializing every open set is an
//! inherently exhaustive operation.

use crate::error::{Error, Result};
use crate::foundation::{SetFamily, Subset, Universe, MAX_EXHAUSTIVE};
use crate::relations::Relation;
use std::sync::Arc;

/// Largest universe for which all topologies can be enumerated.
pub const MAX_TOPOLOGY_ENUMERATION: usize = 4;

fn check_cap(op: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::SizeCap { op, cap, n })
    } else {
        Ok(())
    }
}

/// Bit `s` of the result marks membership of the subset with mask `s`.
pub(crate) fn famset_of(f: &SetFamily) -> u64 {
    let mut bits = 0u64;
    for m in f.members() {
        bits |= 1 << m.mask();
    }
    bits
}

fn family_of(u: &Arc<Universe>, famset: u64) -> SetFamily {
    let count = 1u64 << u.size();
    let sets = (0..count)
        .filter(|s| famset >> s & 1 == 1)
        .map(|s| Subset::from_mask(u, s));
    SetFamily::new(u.clone(), sets)
}

fn masks_of(famset: u64) -> Vec<u64> {
    (0..64).filter(|s| famset >> s & 1 == 1).collect()
}

fn close_under(mut fam: u64, op: impl Fn(u64, u64) -> u64) -> u64 {
    loop {
        let masks = masks_of(fam);
        let mut next = fam;
        for (i, &a) in masks.iter().enumerate() {
            for &b in &masks[..i] {
                next |= 1 << op(a, b);
            }
        }
        if next == fam {
            return fam;
        }
        fam = next;
    }
}

/// Smallest topology bitmap containing the given subbase bitmap: seed the
/// nullary intersection X, close under pairwise intersections (giving the
/// base), seed the nullary union ∅, close under pairwise unions.
fn close_topology(subbase: u64, full_mask: u64) -> u64 {
    let base = close_under(subbase | 1 << full_mask, |a, b| a & b);
    close_under(base | 1, |a, b| a | b)
}

fn is_closed_famset(famset: u64, full_mask: u64) -> bool {
    if famset & 1 == 0 || famset >> full_mask & 1 == 0 {
        return false;
    }
    let masks = masks_of(famset);
    for (i, &a) in masks.iter().enumerate() {
        for &b in &masks[..i] {
            if famset >> (a & b) & 1 == 0 || famset >> (a | b) & 1 == 0 {
                return false;
            }
        }
    }
    true
}

/// A topology on a universe, with every open set materialized and kept in
/// canonical family order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    opens: SetFamily,
}

impl Topology {
    /// Generates the smallest topology containing the given family.
    pub fn from_subbase(subbase: &SetFamily) -> Result<Topology> {
        let u = subbase.universe();
        check_cap("topology construction", u.size(), MAX_EXHAUSTIVE)?;
        let famset = close_topology(famset_of(subbase), u.full_mask());
        Ok(Topology {
            opens: family_of(u, famset),
        })
    }

    /// Wraps a family that is already a topology; validates closure under
    /// finite intersections and unions (∅ and X included).
    pub fn from_opens(opens: SetFamily) -> Result<Topology> {
        let u = opens.universe();
        check_cap("topology construction", u.size(), MAX_EXHAUSTIVE)?;
        if !is_closed_famset(famset_of(&opens), u.full_mask()) {
            return Err(Error::Precondition(
                "family is not a topology (missing ∅/X or not closed under ∩/∪)".into(),
            ));
        }
        Ok(Topology { opens })
    }

    pub fn opens(&self) -> &SetFamily {
        &self.opens
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.opens.universe()
    }

    pub fn open_count(&self) -> usize {
        self.opens.len()
    }

    pub fn contains_open(&self, s: &Subset) -> bool {
        self.opens.contains(s)
    }

    /// Discrete ⟺ every singleton is open (hence every set).
    pub fn is_discrete(&self) -> bool {
        let u = self.universe();
        let famset = famset_of(&self.opens);
        u.elements().all(|i| famset >> (1u64 << i) & 1 == 1)
    }

    /// Join: the smallest topology refining both operands.
    pub fn join(&self, other: &Topology) -> Result<Topology> {
        if self.universe() != other.universe() {
            return Err(Error::UniverseMismatch);
        }
        let u = self.universe();
        let famset = close_topology(
            famset_of(&self.opens) | famset_of(&other.opens),
            u.full_mask(),
        );
        Ok(Topology {
            opens: family_of(u, famset),
        })
    }

    /// Compares two topologies by inclusion of their open families.
    pub fn compare(&self, other: &Topology) -> Result<TopologyComparison> {
        if self.universe() != other.universe() {
            return Err(Error::UniverseMismatch);
        }
        let u = self.universe();
        let a = famset_of(&self.opens);
        let b = famset_of(&other.opens);
        let only_a = a & !b;
        let only_b = b & !a;
        let witness = |bits: u64| {
            family_of(u, bits)
                .members()
                .first()
                .copied()
                .expect("nonempty difference")
        };
        Ok(match (only_a == 0, only_b == 0) {
            (true, true) => TopologyComparison::Equal,
            (false, true) => TopologyComparison::StrictlyFiner {
                witness: witness(only_a),
            },
            (true, false) => TopologyComparison::StrictlyCoarser {
                witness: witness(only_b),
            },
            (false, false) => TopologyComparison::Incomparable {
                witness: witness(only_a),
            },
        })
    }

    /// Family bitmap of the opens (one word suffices at n ≤ 6).
    pub(crate) fn famset(&self) -> u64 {
        famset_of(&self.opens)
    }

    /// `self ⊆ other` as families of opens (other refines self).
    pub fn is_coarser_or_equal(&self, other: &Topology) -> Result<bool> {
        if self.universe() != other.universe() {
            return Err(Error::UniverseMismatch);
        }
        Ok(famset_of(&self.opens) & !famset_of(&other.opens) == 0)
    }
}

/// Outcome of comparing two topologies. The witness is an open set lying
/// in exactly one of the two (the canonically least such), present
/// whenever the topologies differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopologyComparison {
    Equal,
    /// Left strictly refines right; witness open only on the left.
    StrictlyFiner {
        witness: Subset,
    },
    /// Left strictly coarser than right; witness open only on the right.
    StrictlyCoarser {
        witness: Subset,
    },
    Incomparable {
        witness: Subset,
    },
}

impl TopologyComparison {
    pub fn tag(&self) -> &'static str {
        match self {
            TopologyComparison::Equal => "equal",
            TopologyComparison::StrictlyFiner { .. } => "strictly-finer",
            TopologyComparison::StrictlyCoarser { .. } => "strictly-coarser",
            TopologyComparison::Incomparable { .. } => "incomparable",
        }
    }

    pub fn witness(&self) -> Option<Subset> {
        match *self {
            TopologyComparison::Equal => None,
            TopologyComparison::StrictlyFiner { witness }
            | TopologyComparison::StrictlyCoarser { witness }
            | TopologyComparison::Incomparable { witness } => Some(witness),
        }
    }
}

/// Upper topology of a relation: subbase `{ X − ↓x : x ∈ X }`, the
/// relation taken exactly as handed in (strict vs reflexive is the
/// caller's choice).
pub fn upper_topology(r: &Relation) -> Result<Topology> {
    let u = r.universe();
    let subbase = SetFamily::new(
        u.clone(),
        u.elements()
            .map(|x| r.down_set(&Subset::singleton(u, x)).complement()),
    );
    Topology::from_subbase(&subbase)
}

/// Lower topology: subbase `{ X − ↑x : x ∈ X }`.
pub fn lower_topology(r: &Relation) -> Result<Topology> {
    let u = r.universe();
    let subbase = SetFamily::new(
        u.clone(),
        u.elements()
            .map(|x| r.up_set(&Subset::singleton(u, x)).complement()),
    );
    Topology::from_subbase(&subbase)
}

/// Interval topology: the join of the upper and the lower topology.
pub fn interval_topology(r: &Relation) -> Result<Topology> {
    upper_topology(r)?.join(&lower_topology(r)?)
}

/// Left-ray topology: subbase `{ (←, x) : x ∈ X }`.
pub fn left_topology(r: &Relation) -> Result<Topology> {
    let u = r.universe();
    let subbase = SetFamily::new(u.clone(), u.elements().map(|x| r.left_ray(x)));
    Topology::from_subbase(&subbase)
}

/// Right-ray topology: subbase `{ (x, →) : x ∈ X }`.
pub fn right_topology(r: &Relation) -> Result<Topology> {
    let u = r.universe();
    let subbase = SetFamily::new(u.clone(), u.elements().map(|x| r.right_ray(x)));
    Topology::from_subbase(&subbase)
}

/// Order topology: generated by both ray families together.
pub fn order_topology(r: &Relation) -> Result<Topology> {
    left_topology(r)?.join(&right_topology(r)?)
}

/// Every topology on the universe, ascending in the family-bitmap
/// encoding (deterministic). Exhaustive: capped at n ≤ 4 (16384 candidate
/// families at the cap).
pub fn enumerate_topologies(u: &Arc<Universe>) -> Result<Vec<Topology>> {
    let n = u.size();
    check_cap("topology enumeration", n, MAX_TOPOLOGY_ENUMERATION)?;
    let full = u.full_mask();
    if n == 0 {
        return Ok(vec![Topology {
            opens: family_of(u, 1),
        }]);
    }
    // ∅ and X are forced; freely choose the 2^n − 2 middle subsets.
    let middle: Vec<u64> = (1..full).collect();
    let forced = 1u64 | 1 << full;
    let mut out = Vec::new();
    for choice in 0u64..1 << middle.len() {
        let mut famset = forced;
        for (i, &s) in middle.iter().enumerate() {
            if choice >> i & 1 == 1 {
                famset |= 1 << s;
            }
        }
        if is_closed_famset(famset, full) {
            out.push(Topology {
                opens: family_of(u, famset),
            });
        }
    }
    Ok(out)
}
