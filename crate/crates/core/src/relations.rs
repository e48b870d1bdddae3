//! Binary relations on a universe, stored as n×n boolean matrices
//! (one `u64` row per element: bit `y` of `rows[x]` means `x r y`).
//!
//! Nothing here assumes the relation is an order; predicates like
//! [`Relation::is_transitive`] ask, they don't enforce. Operations that
//! need a transitive input (the ray-condition checks) validate at entry.

use crate::error::{Error, Result};
use crate::foundation::{Subset, Universe};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    universe: Arc<Universe>,
    rows: Vec<u64>,
}

impl Relation {
    pub fn empty(universe: Arc<Universe>) -> Relation {
        let n = universe.size();
        Relation {
            universe,
            rows: vec![0; n],
        }
    }

    /// The identity relation Δ = {(x,x)}.
    pub fn diagonal(universe: Arc<Universe>) -> Relation {
        let n = universe.size();
        Relation {
            universe,
            rows: (0..n).map(|x| 1u64 << x).collect(),
        }
    }

    /// Builds a relation by predicate — the workhorse for enumerators.
    pub fn from_fn<F: FnMut(usize, usize) -> bool>(
        universe: Arc<Universe>,
        mut holds: F,
    ) -> Relation {
        let n = universe.size();
        let rows = (0..n)
            .map(|x| {
                let mut row = 0u64;
                for y in 0..n {
                    if holds(x, y) {
                        row |= 1 << y;
                    }
                }
                row
            })
            .collect();
        Relation { universe, rows }
    }

    /// Decodes the `n²`-bit matrix mask used by the exhaustive relation
    /// enumerator (bit `x·n + y` set ⟺ `x r y`).
    pub fn from_matrix_mask(universe: Arc<Universe>, mask: u64) -> Relation {
        let n = universe.size();
        debug_assert!(n * n <= 64);
        Relation::from_fn(universe, |x, y| mask >> (x * n + y) & 1 == 1)
    }

    pub fn from_index_pairs(universe: Arc<Universe>, pairs: &[(usize, usize)]) -> Relation {
        let n = universe.size();
        let mut rows = vec![0u64; n];
        for &(x, y) in pairs {
            debug_assert!(x < n && y < n);
            rows[x] |= 1 << y;
        }
        Relation { universe, rows }
    }

    pub fn from_label_pairs<S: AsRef<str>>(
        universe: Arc<Universe>,
        pairs: &[(S, S)],
    ) -> Result<Relation> {
        let mut index_pairs = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let x = universe
                .index_of(a.as_ref())
                .ok_or_else(|| Error::UnknownLabel(a.as_ref().to_string()))?;
            let y = universe
                .index_of(b.as_ref())
                .ok_or_else(|| Error::UnknownLabel(b.as_ref().to_string()))?;
            index_pairs.push((x, y));
        }
        Ok(Relation::from_index_pairs(universe, &index_pairs))
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn holds(&self, x: usize, y: usize) -> bool {
        self.rows[x] >> y & 1 == 1
    }

    /// Row extraction: `{y : x r y}`, same thing as the right ray of `x`.
    pub fn slice(&self, x: usize) -> Subset {
        Subset::from_mask(&self.universe, self.rows[x])
    }

    /// `(x, →) = {y : x r y}`.
    pub fn right_ray(&self, x: usize) -> Subset {
        self.slice(x)
    }

    /// `(←, x) = {y : y r x}` — the column of `x`.
    pub fn left_ray(&self, x: usize) -> Subset {
        let mut bits = 0u64;
        for (y, row) in self.rows.iter().enumerate() {
            if row >> x & 1 == 1 {
                bits |= 1 << y;
            }
        }
        Subset::from_mask(&self.universe, bits)
    }

    /// `↑A = {x : ∃ y ∈ A, y r x}` — everything reachable from A in one
    /// step, with the relation taken exactly as given.
    pub fn up_set(&self, a: &Subset) -> Subset {
        let mut bits = 0u64;
        for y in a.iter() {
            bits |= self.rows[y];
        }
        Subset::from_mask(&self.universe, bits)
    }

    /// `↓A = {x : ∃ y ∈ A, x r y}`.
    pub fn down_set(&self, a: &Subset) -> Subset {
        let target = a.mask();
        let mut bits = 0u64;
        for (x, row) in self.rows.iter().enumerate() {
            if row & target != 0 {
                bits |= 1 << x;
            }
        }
        Subset::from_mask(&self.universe, bits)
    }

    pub fn is_transitive(&self) -> bool {
        for x in 0..self.size() {
            let row_x = self.rows[x];
            for y in 0..self.size() {
                if row_x >> y & 1 == 1 && self.rows[y] & !row_x != 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_reflexive(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(x, row)| row >> x & 1 == 1)
    }

    pub fn is_irreflexive(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(x, row)| row >> x & 1 == 0)
    }

    pub fn is_antisymmetric(&self) -> bool {
        for x in 0..self.size() {
            for y in 0..x {
                if self.holds(x, y) && self.holds(y, x) {
                    return false;
                }
            }
        }
        true
    }

    /// A *linear* relation here is a strict total order: irreflexive,
    /// transitive, antisymmetric, and any two distinct elements compare.
    pub fn is_linear(&self) -> bool {
        if !(self.is_irreflexive() && self.is_transitive() && self.is_antisymmetric()) {
            return false;
        }
        for x in 0..self.size() {
            for y in 0..x {
                if !self.holds(x, y) && !self.holds(y, x) {
                    return false;
                }
            }
        }
        true
    }

    /// Least reflexive relation containing this one: `r ∪ Δ`.
    pub fn reflexive_closure(&self) -> Relation {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(x, row)| row | 1 << x)
            .collect();
        Relation {
            universe: self.universe.clone(),
            rows,
        }
    }

    pub fn transpose(&self) -> Relation {
        Relation::from_fn(self.universe.clone(), |x, y| self.rows[y] >> x & 1 == 1)
    }

    /// All pairs in row-major order — deterministic, used for reports.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.size() {
            for y in 0..self.size() {
                if self.holds(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn label_pairs(&self) -> Vec<(String, String)> {
        self.pairs()
            .into_iter()
            .map(|(x, y)| {
                (
                    self.universe.label(x).to_string(),
                    self.universe.label(y).to_string(),
                )
            })
            .collect()
    }

    /// Matrix text format: one row per line, `0`/`1` per entry. Used for
    /// exhaustive-mode dumps and accepted back as input.
    pub fn to_matrix_text(&self) -> String {
        let n = self.size();
        let mut out = String::with_capacity(n * (n + 1));
        for x in 0..n {
            for y in 0..n {
                out.push(if self.holds(x, y) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// Parses the matrix text format against a given universe.
    pub fn from_matrix_text(universe: Arc<Universe>, text: &str) -> Result<Relation> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        let n = universe.size();
        if lines.len() != n {
            return Err(Error::Parse(format!(
                "matrix has {} rows, universe has {} elements",
                lines.len(),
                n
            )));
        }
        let mut rows = vec![0u64; n];
        for (x, line) in lines.iter().enumerate() {
            let line = line.trim();
            if line.chars().count() != n {
                return Err(Error::Parse(format!(
                    "matrix row {} has {} entries, expected {}",
                    x,
                    line.chars().count(),
                    n
                )));
            }
            for (y, c) in line.chars().enumerate() {
                match c {
                    '1' => rows[x] |= 1 << y,
                    '0' => {}
                    other => {
                        return Err(Error::Parse(format!(
                            "matrix entry ({x},{y}) is `{other}`, expected 0 or 1"
                        )))
                    }
                }
            }
        }
        Ok(Relation { universe, rows })
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .label_pairs()
            .into_iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        write!(f, "{{{}}}", pairs.join(", "))
    }
}

/// Wire format for relations:
/// `{"universe": ["a","b"], "pairs": [["a","b"]]}`. Unknown keys rejected.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationJson {
    pub universe: Vec<String>,
    pub pairs: Vec<(String, String)>,
}

impl RelationJson {
    pub fn into_relation(self) -> Result<Relation> {
        let universe = Universe::new(self.universe)?;
        Relation::from_label_pairs(universe, &self.pairs)
    }

    pub fn from_relation(r: &Relation) -> RelationJson {
        RelationJson {
            universe: r.universe().labels().to_vec(),
            pairs: r.label_pairs(),
        }
    }
}

pub fn relation_from_json(text: &str) -> Result<Relation> {
    let parsed: RelationJson = serde_json::from_str(text)?;
    parsed.into_relation()
}

pub fn relation_to_json(r: &Relation) -> String {
    serde_json::to_string_pretty(&RelationJson::from_relation(r)).expect("relation serializes")
}
