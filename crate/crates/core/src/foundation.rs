//! Ground objects: labeled finite universes, subsets as bitmasks, and
//! deduplicated set families kept in a canonical order.
//!
//! A [`Universe`] fixes the element labels once; everything downstream
//! (subsets, families, relations, topologies) refers back to it so that
//! reports can speak in labels instead of indices. Subsets are 64-bit
//! characteristic masks, which caps universes at 64 elements and makes
//! the set algebra word-sized.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Hard cap on universe size: subsets are stored as `u64` masks.
pub const MAX_UNIVERSE: usize = 64;

/// Exhaustive-mode operations (anything that materializes `P(X)`-scale
/// data: all opens of a topology, all chains, ...) refuse universes
/// larger than this.
pub const MAX_EXHAUSTIVE: usize = 6;

/// A finite set of distinct element labels. Element order is the label
/// order given at construction and is used for every canonical ordering
/// downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    /// Builds a universe from distinct labels. Fails on duplicates and on
    /// more than [`MAX_UNIVERSE`] labels.
    pub fn new<I, S>(labels: I) -> Result<Arc<Universe>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(labels.len()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Arc::new(Universe { labels }))
    }

    /// Convenience universe `a, b, c, ...` used by enumerators and demos.
    /// Panics beyond 26 elements; enumeration caps are far below that.
    pub fn alphabetic(n: usize) -> Arc<Universe> {
        assert!(n <= 26, "alphabetic universes stop at 26 elements");
        let letters = (0..n).map(|i| ((b'a' + i as u8) as char).to_string());
        Universe::new(letters).expect("letters are distinct")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Characteristic mask of the whole universe (`0` when empty).
    pub fn full_mask(&self) -> u64 {
        if self.labels.is_empty() {
            0
        } else {
            u64::MAX >> (64 - self.labels.len())
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.labels.len()
    }
}

/// A subset of a universe, stored as a characteristic bitmask
/// (bit `i` = element `i` is a member). `Copy`, so set algebra is free of
/// allocation; label rendering needs the universe passed back in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: u64,
    n: u8,
}

impl Subset {
    pub fn empty(u: &Universe) -> Subset {
        Subset {
            bits: 0,
            n: u.size() as u8,
        }
    }

    pub fn full(u: &Universe) -> Subset {
        Subset {
            bits: u.full_mask(),
            n: u.size() as u8,
        }
    }

    pub fn singleton(u: &Universe, i: usize) -> Subset {
        debug_assert!(i < u.size());
        Subset {
            bits: 1 << i,
            n: u.size() as u8,
        }
    }

    /// Builds a subset from a raw mask; bits beyond the universe are
    /// rejected by debug assertion (internal constructors only pass valid
    /// masks).
    pub fn from_mask(u: &Universe, mask: u64) -> Subset {
        debug_assert_eq!(mask & !u.full_mask(), 0, "mask has bits outside universe");
        Subset {
            bits: mask,
            n: u.size() as u8,
        }
    }

    pub fn from_indices(u: &Universe, indices: &[usize]) -> Subset {
        let mut bits = 0;
        for &i in indices {
            debug_assert!(i < u.size());
            bits |= 1 << i;
        }
        Subset {
            bits,
            n: u.size() as u8,
        }
    }

    pub fn mask(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn card(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    fn check_same(&self, other: &Subset) {
        debug_assert_eq!(self.n, other.n, "subsets from different universes");
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.check_same(other);
        Subset {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        self.check_same(other);
        Subset {
            bits: self.bits & other.bits,
            n: self.n,
        }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        self.check_same(other);
        Subset {
            bits: self.bits & !other.bits,
            n: self.n,
        }
    }

    pub fn complement(&self) -> Subset {
        let full = if self.n == 0 {
            0
        } else {
            u64::MAX >> (64 - self.n as u32)
        };
        Subset {
            bits: full & !self.bits,
            n: self.n,
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.check_same(other);
        self.bits & !other.bits == 0
    }

    pub fn is_strict_subset_of(&self, other: &Subset) -> bool {
        self.is_subset_of(other) && self.bits != other.bits
    }

    /// Indices of the members, ascending.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.n as usize).filter(move |i| bits >> i & 1 == 1)
    }

    pub fn labels<'u>(&self, u: &'u Universe) -> Vec<&'u str> {
        self.iter().map(|i| u.label(i)).collect()
    }

    pub fn label_strings(&self, u: &Universe) -> Vec<String> {
        self.iter().map(|i| u.label(i).to_string()).collect()
    }

    /// Canonical subset order: cardinality first, then dictionary order on
    /// the characteristic vector read from the first element with
    /// "member" sorting before "non-member" — so `{a} < {b}` and
    /// `{a,b} < {a,c} < {b,c}`.
    pub fn canonical_cmp(&self, other: &Subset) -> Ordering {
        self.check_same(other);
        self.card().cmp(&other.card()).then_with(|| {
            for i in 0..self.n as usize {
                match (self.contains(i), other.contains(i)) {
                    (true, false) => return Ordering::Less,
                    (false, true) => return Ordering::Greater,
                    _ => {}
                }
            }
            Ordering::Equal
        })
    }

    /// Renders as `{a,b}` against the universe.
    pub fn render(&self, u: &Universe) -> String {
        format!("{{{}}}", self.labels(u).join(","))
    }
}

/// A deduplicated family of subsets over one shared universe, kept sorted
/// in canonical order so equal families compare equal and serialized
/// output is byte-stable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    universe: Arc<Universe>,
    members: Vec<Subset>,
}

impl SetFamily {
    /// Canonicalizes (sorts + dedups) whatever iterator it is given.
    pub fn new<I>(universe: Arc<Universe>, sets: I) -> SetFamily
    where
        I: IntoIterator<Item = Subset>,
    {
        let mut members: Vec<Subset> = sets.into_iter().collect();
        debug_assert!(members.iter().all(|s| s.n as usize == universe.size()));
        members.sort_by(Subset::canonical_cmp);
        members.dedup();
        SetFamily { universe, members }
    }

    pub fn empty(universe: Arc<Universe>) -> SetFamily {
        SetFamily {
            universe,
            members: Vec::new(),
        }
    }

    /// Builds a family from label lists, e.g. `[["a"], ["a","b"]]`.
    /// Unknown labels are rejected; duplicate sets collapse.
    pub fn from_label_lists<L, S>(universe: Arc<Universe>, lists: &[L]) -> Result<SetFamily>
    where
        L: AsRef<[S]>,
        S: AsRef<str>,
    {
        let mut sets = Vec::with_capacity(lists.len());
        for list in lists {
            let mut bits = 0u64;
            for label in list.as_ref() {
                let i = universe
                    .index_of(label.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(label.as_ref().to_string()))?;
                bits |= 1 << i;
            }
            sets.push(Subset::from_mask(&universe, bits));
        }
        Ok(SetFamily::new(universe, sets))
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.members.iter().any(|m| m == s)
    }

    /// Union of two families over the same universe (members dedup).
    pub fn union_with(&self, other: &SetFamily) -> Result<SetFamily> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        Ok(SetFamily::new(
            self.universe.clone(),
            self.members.iter().chain(other.members.iter()).copied(),
        ))
    }

    /// The family of complements (used by De Morgan checks and the
    /// complement-form order formulas).
    pub fn complements(&self) -> SetFamily {
        SetFamily::new(
            self.universe.clone(),
            self.members.iter().map(Subset::complement),
        )
    }

    pub fn member_label_lists(&self) -> Vec<Vec<String>> {
        self.members
            .iter()
            .map(|s| s.label_strings(&self.universe))
            .collect()
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .members
            .iter()
            .map(|s| s.render(&self.universe))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Wire format for families: `{"universe": ["a","b"], "sets": [["a"]]}`.
/// Unknown keys are rejected so typos fail loudly.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyJson {
    pub universe: Vec<String>,
    pub sets: Vec<Vec<String>>,
}

impl FamilyJson {
    pub fn into_family(self) -> Result<SetFamily> {
        let universe = Universe::new(self.universe)?;
        SetFamily::from_label_lists(universe, &self.sets)
    }

    pub fn from_family(f: &SetFamily) -> FamilyJson {
        FamilyJson {
            universe: f.universe().labels().to_vec(),
            sets: f.member_label_lists(),
        }
    }
}

/// Parses the family wire format.
pub fn family_from_json(text: &str) -> Result<SetFamily> {
    let parsed: FamilyJson = serde_json::from_str(text)?;
    parsed.into_family()
}

/// Serializes a family in canonical member order.
pub fn family_to_json(f: &SetFamily) -> String {
    serde_json::to_string_pretty(&FamilyJson::from_family(f)).expect("family serializes")
}
