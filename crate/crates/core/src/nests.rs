//! Nests — families totally ordered by inclusion — and the strict order
//! `x ◁ y ⟺ ∃ member L with x ∈ L, y ∉ L` they induce, together with the
//! separation, interlocking, and boundary-formula machinery built on it.
//!
//! Several operations exist in two independently computed routes (a
//! definition-literal scan and a set-algebra formula); the verification
//! suites cross-check the routes against each other.

use crate::error::{Error, Result};
use crate::foundation::{SetFamily, Subset, Universe};
use crate::relations::Relation;
use serde::Serialize;
use std::sync::Arc;

/// True when every pair of members is ⊆-comparable.
pub fn is_nest(f: &SetFamily) -> bool {
    incomparable_pair(f).is_none()
}

fn incomparable_pair(f: &SetFamily) -> Option<(Subset, Subset)> {
    let m = f.members();
    for i in 0..m.len() {
        for j in 0..i {
            if !m[i].is_subset_of(&m[j]) && !m[j].is_subset_of(&m[i]) {
                return Some((m[j], m[i]));
            }
        }
    }
    None
}

/// A set family validated to be a chain under inclusion. Construction is
/// the only place the chain property is checked; everything downstream
/// may rely on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nest {
    family: SetFamily,
}

impl TryFrom<SetFamily> for Nest {
    type Error = Error;

    fn try_from(family: SetFamily) -> Result<Nest> {
        if let Some((a, b)) = incomparable_pair(&family) {
            let u = family.universe();
            return Err(Error::NotANest(
                a.labels(u).join(","),
                b.labels(u).join(","),
            ));
        }
        Ok(Nest { family })
    }
}

impl Nest {
    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.family.universe()
    }

    pub fn members(&self) -> &[Subset] {
        self.family.members()
    }

    pub fn is_t0_separating(&self) -> bool {
        t0_separation(&self.family).t0
    }

    /// The induced strict order, computed literally from the definition:
    /// for each pair `(x,y)` scan the members for a witness `L` with
    /// `x ∈ L`, `y ∉ L`.
    pub fn induced_order(&self) -> Relation {
        let members = self.members();
        Relation::from_fn(self.universe().clone(), |x, y| {
            members.iter().any(|l| l.contains(x) && !l.contains(y))
        })
    }

    /// The induced reflexive order `⊴` (strict order plus the diagonal).
    pub fn induced_order_reflexive(&self) -> Relation {
        self.induced_order().reflexive_closure()
    }

    /// Second route to the strict order: the union of boxes
    /// `⋃ { L × (X−L) : L a member }`, accumulated row-wise.
    pub fn order_via_products(&self) -> Relation {
        let u = self.universe();
        let n = u.size();
        let full = u.full_mask();
        let mut rows = vec![0u64; n];
        for l in self.members() {
            let outside = full & !l.mask();
            for x in l.iter() {
                rows[x] |= outside;
            }
        }
        Relation::from_fn(u.clone(), |x, y| rows[x] >> y & 1 == 1)
    }

    /// Complement form of the strict order: the pair `(x,y)` is *not*
    /// related exactly when every member satisfies `x ∉ L` or `y ∈ L`,
    /// i.e. `⋂ { ((X−L)×X) ∪ (X×L) }` with the nullary intersection
    /// equal to all of `X×X`.
    pub fn order_complement_via_products(&self) -> Relation {
        let u = self.universe();
        let n = u.size();
        let full = u.full_mask();
        let mut rows = vec![full; n];
        for l in self.members() {
            for x in l.iter() {
                // x ∈ L forces y ∈ L for the pair to stay in this factor.
                rows[x] &= l.mask();
            }
        }
        Relation::from_fn(u.clone(), |x, y| rows[x] >> y & 1 == 1)
    }

    /// Complement form of the reflexive order: the strict complement with
    /// the diagonal removed.
    pub fn reflexive_order_complement_via_products(&self) -> Relation {
        let strict_complement = self.order_complement_via_products();
        Relation::from_fn(self.universe().clone(), |x, y| {
            x != y && strict_complement.holds(x, y)
        })
    }

    /// Boundary formula `⋂{ L : x ∈ L } − {x}` (nullary intersection = X).
    /// Equals the complement of the *reflexive* up-set `↑⊴x` — for every
    /// family, membership unfolds to `y ≠ x ∧ ¬(x ◁ y)`.
    pub fn upper_complement_formula(&self, x: usize) -> Subset {
        let u = self.universe();
        let mut bits = u.full_mask();
        for l in self.members() {
            if l.contains(x) {
                bits &= l.mask();
            }
        }
        bits &= !(1 << x);
        Subset::from_mask(u, bits)
    }

    /// Boundary formula `⋂{ X−L : x ∈ X−L } ∪ {x}` (nullary intersection
    /// = X). Equals the complement of the *strict* down-set `↓◁x`:
    /// membership unfolds to `¬(y ◁ x)`, which already includes `x`.
    pub fn lower_complement_formula(&self, x: usize) -> Subset {
        let u = self.universe();
        let mut bits = u.full_mask();
        for l in self.members() {
            if !l.contains(x) {
                bits &= u.full_mask() & !l.mask();
            }
        }
        bits |= 1 << x;
        Subset::from_mask(u, bits)
    }

    /// Left ray of the induced order straight from the members:
    /// `(←, x) = ⋃{ L : x ∉ L }`.
    pub fn left_ray_via_members(&self, x: usize) -> Subset {
        let u = self.universe();
        let mut bits = 0u64;
        for l in self.members() {
            if !l.contains(x) {
                bits |= l.mask();
            }
        }
        Subset::from_mask(u, bits)
    }

    /// Right ray from the members: `(x, →) = ⋃{ X−L : x ∈ L }`.
    pub fn right_ray_via_members(&self, x: usize) -> Subset {
        let u = self.universe();
        let full = u.full_mask();
        let mut bits = 0u64;
        for l in self.members() {
            if l.contains(x) {
                bits |= full & !l.mask();
            }
        }
        Subset::from_mask(u, bits)
    }
}

/// Separation report for a family. Both flags are always computed
/// (`t1` implies `t0`); `failing_pair` names the first counterexample, in
/// scan order, to whichever property was queried.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparationReport {
    pub t0: bool,
    pub t1: bool,
    pub failing_pair: Option<(String, String)>,
}

fn separates(f: &SetFamily, x: usize, y: usize) -> bool {
    f.members().iter().any(|l| l.contains(x) && !l.contains(y))
}

/// First pair of element indices, in scan order, to fail a separation check.
type FailingPair = Option<(usize, usize)>;

fn separation_raw(f: &SetFamily) -> (FailingPair, FailingPair) {
    let n = f.universe().size();
    // T0: unordered pairs in index order, some member contains exactly one.
    let mut t0_fail = None;
    'outer_t0: for x in 0..n {
        for y in x + 1..n {
            if !separates(f, x, y) && !separates(f, y, x) {
                t0_fail = Some((x, y));
                break 'outer_t0;
            }
        }
    }
    // T1: ordered pairs row-major, a member contains x but not y.
    let mut t1_fail = None;
    'outer_t1: for x in 0..n {
        for y in 0..n {
            if x != y && !separates(f, x, y) {
                t1_fail = Some((x, y));
                break 'outer_t1;
            }
        }
    }
    (t0_fail, t1_fail)
}

fn labels_of(u: &Universe, pair: (usize, usize)) -> (String, String) {
    (u.label(pair.0).to_string(), u.label(pair.1).to_string())
}

/// Does the family T0-separate its universe? (Some member contains
/// exactly one element of every distinct pair.)
pub fn t0_separation(f: &SetFamily) -> SeparationReport {
    let (t0_fail, t1_fail) = separation_raw(f);
    SeparationReport {
        t0: t0_fail.is_none(),
        t1: t1_fail.is_none(),
        failing_pair: t0_fail.map(|p| labels_of(f.universe(), p)),
    }
}

/// Does the family T1-separate its universe? (Each ordered distinct pair
/// `(x,y)` has a member containing `x` but not `y`.)
pub fn t1_separation(f: &SetFamily) -> SeparationReport {
    let (t0_fail, t1_fail) = separation_raw(f);
    SeparationReport {
        t0: t0_fail.is_none(),
        t1: t1_fail.is_none(),
        failing_pair: t1_fail.map(|p| labels_of(f.universe(), p)),
    }
}

/// Interlocking, for arbitrary families: every member that equals the
/// intersection of its strict supersets (nullary = X) must also equal the
/// union of its strict subsets (nullary = ∅), supersets and subsets taken
/// within the family.
pub fn is_interlocking(f: &SetFamily) -> bool {
    let full = Subset::full(f.universe());
    for l in f.members() {
        let mut inter = full;
        for m in f.members() {
            if l.is_strict_subset_of(m) {
                inter = inter.intersection(m);
            }
        }
        if inter == *l {
            let mut uni = Subset::empty(f.universe());
            for m in f.members() {
                if m.is_strict_subset_of(l) {
                    uni = uni.union(m);
                }
            }
            if uni != *l {
                return false;
            }
        }
    }
    true
}

fn has_maximal(order: &Relation, s: &Subset) -> bool {
    // m is maximal in S when no s' ∈ S has m ◁ s'.
    s.iter().any(|m| order.slice(m).intersection(s).is_empty())
}

fn has_minimal(order: &Relation, s: &Subset) -> bool {
    s.iter().any(|m| s.iter().all(|x| !order.holds(x, m)))
}

/// The two endpoint-shaped clauses equivalent to interlocking on
/// T0-separating nests: for each member L, (2) if L has a ◁-maximal
/// element then X−L has a ◁-minimal one, and (3) either L has no
/// ◁-maximal element or X−L has a ◁-minimal one. The two clauses are
/// evaluated independently, exactly as stated.
///
/// Errors when the nest is not T0-separating (the equivalence is only
/// claimed under that hypothesis).
pub fn interlocking_minmax_clauses(nest: &Nest) -> Result<(bool, bool)> {
    if !nest.is_t0_separating() {
        return Err(Error::HypothesisNotMet(
            "the min/max interlocking clauses require a T0-separating nest".into(),
        ));
    }
    let order = nest.induced_order();
    let clause2 = nest.members().iter().all(|l| {
        if has_maximal(&order, l) {
            has_minimal(&order, &l.complement())
        } else {
            true
        }
    });
    let clause3 = nest
        .members()
        .iter()
        .all(|l| !has_maximal(&order, l) || has_minimal(&order, &l.complement()));
    Ok((clause2, clause3))
}

/// Both sides of the "T1-separating union" criterion for a pair of nests:
/// the union separates T1 exactly when both nests separate T0 and their
/// induced orders are mutual transposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UnionSeparationCheck {
    pub union_t1: bool,
    pub both_t0: bool,
    pub orders_opposed: bool,
}

impl UnionSeparationCheck {
    /// The conjunction side of the equivalence.
    pub fn conjunction(&self) -> bool {
        self.both_t0 && self.orders_opposed
    }

    /// Whether the two sides agree on this instance.
    pub fn sides_agree(&self) -> bool {
        self.union_t1 == self.conjunction()
    }
}

/// Evaluates both sides of the T1-union criterion on a pair of nests over
/// the same universe.
pub fn check_t1_union_criterion(left: &Nest, right: &Nest) -> Result<UnionSeparationCheck> {
    let union = left.family().union_with(right.family())?;
    let union_t1 = t1_separation(&union).t1;
    let both_t0 = left.is_t0_separating() && right.is_t0_separating();
    let orders_opposed = left.induced_order() == right.induced_order().transpose();
    Ok(UnionSeparationCheck {
        union_t1,
        both_t0,
        orders_opposed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::SetFamily;

    fn family(n: usize, lists: &[Vec<&str>]) -> SetFamily {
        SetFamily::from_label_lists(Universe::alphabetic(n), lists).unwrap()
    }

    fn nest(n: usize, lists: &[Vec<&str>]) -> Nest {
        Nest::try_from(family(n, lists)).unwrap()
    }

    #[test]
    fn nest_recognition() {
        assert!(is_nest(&family(3, &[vec!["a"], vec!["a", "b"]])));
        assert!(!is_nest(&family(3, &[vec!["a"], vec!["b"]])));
        assert!(is_nest(&family(3, &[]))); // the empty family is a nest
        assert!(is_nest(&family(2, &[vec![], vec!["a", "b"]]))); // ∅ and X
        let err = Nest::try_from(family(3, &[vec!["a"], vec!["b"]])).unwrap_err();
        assert!(matches!(err, Error::NotANest(_, _)));
    }

    #[test]
    fn separation_examples() {
        // {{a},{a,b}} on {a,b,c}: T0 but not T1 — nothing contains b without a.
        let f = family(3, &[vec!["a"], vec!["a", "b"]]);
        let rep0 = t0_separation(&f);
        assert!(rep0.t0 && !rep0.t1);
        assert_eq!(rep0.failing_pair, None);
        let rep1 = t1_separation(&f);
        assert_eq!(rep1.failing_pair, Some(("b".to_string(), "a".to_string())));

        // Adding the opposite chain makes the union T1-separating.
        let g = family(3, &[vec!["c"], vec!["b", "c"]]);
        let union = f.union_with(&g).unwrap();
        let rep = t1_separation(&union);
        assert!(rep.t0 && rep.t1 && rep.failing_pair.is_none());

        // Nothing separates the empty family on two points.
        let none = t0_separation(&family(2, &[]));
        assert!(!none.t0 && !none.t1);
        assert_eq!(none.failing_pair, Some(("a".to_string(), "b".to_string())));

        // Vacuous separation on tiny universes.
        assert!(t1_separation(&family(1, &[])).t1);
        assert!(t0_separation(&family(0, &[])).t0);
    }

    #[test]
    fn induced_order_examples() {
        // {{a},{a,b}} on {a,b,c} induces the full chain a ◁ b ◁ c.
        let n = nest(3, &[vec!["a"], vec!["a", "b"]]);
        let order = n.induced_order();
        assert_eq!(order.pairs(), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(order.is_linear());

        // Single member {a,b}: both a,b sit below c, a and b incomparable.
        let n = nest(3, &[vec!["a", "b"]]);
        assert_eq!(n.induced_order().pairs(), vec![(0, 2), (1, 2)]);

        // The reflexive order adds exactly the diagonal.
        let n = nest(3, &[vec!["a"], vec!["a", "b"]]);
        let refl = n.induced_order_reflexive();
        assert!(refl.is_reflexive());
        assert_eq!(
            refl.pairs(),
            vec![(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
        );
    }

    /// The per-pair definition scan and the union-of-boxes formula are
    /// independent routes to the same order; the complement forms must
    /// complement exactly. Exhaustive over every nest on n ≤ 4 happens in
    /// the L2 suite; here the frozen examples.
    #[test]
    fn product_formula_routes_agree_on_examples() {
        for lists in [
            vec![],
            vec![vec![]],
            vec![vec!["a"], vec!["a", "b"]],
            vec![vec![], vec!["b"], vec!["a", "b", "c"]],
        ] {
            let n = nest(3, &lists);
            let direct = n.induced_order();
            assert_eq!(direct, n.order_via_products());
            let comp = n.order_complement_via_products();
            for x in 0..3 {
                for y in 0..3 {
                    assert_eq!(comp.holds(x, y), !direct.holds(x, y));
                }
            }
            let refl_comp = n.reflexive_order_complement_via_products();
            let refl = n.induced_order_reflexive();
            for x in 0..3 {
                for y in 0..3 {
                    assert_eq!(refl_comp.holds(x, y), !refl.holds(x, y));
                }
            }
        }
    }

    #[test]
    fn empty_nest_complement_form_is_everything() {
        let n = nest(2, &[]);
        let comp = n.order_complement_via_products();
        assert_eq!(comp.pairs().len(), 4); // all of X×X
        assert_eq!(n.order_via_products().pairs(), vec![]);
    }

    #[test]
    fn boundary_formula_examples() {
        let n = nest(3, &[vec!["a"], vec!["a", "b"]]);
        let u = n.universe().clone();
        // Members containing b: {a,b}; intersect, drop b itself: {a}.
        assert_eq!(
            n.upper_complement_formula(1),
            Subset::from_indices(&u, &[0])
        );
        // c lies in no member: nullary intersection X, minus {c}.
        assert_eq!(
            n.upper_complement_formula(2),
            Subset::from_indices(&u, &[0, 1])
        );
        // Nest {∅}: x misses every member, and X−∅ = X, so the formula is X.
        let n0 = nest(2, &[vec![]]);
        assert_eq!(n0.lower_complement_formula(0), Subset::full(n0.universe()));
    }

    /// The boundary formulas match the ray complements of the induced
    /// orders: the upper formula against the reflexive order, the lower
    /// one against the strict order — identities that hold for every
    /// nest, separating or not.
    #[test]
    fn boundary_formulas_match_order_complements() {
        for lists in [
            vec![vec!["a"], vec!["a", "b"]],
            vec![vec!["b"]],
            vec![vec![], vec!["a", "c"]],
            vec![vec!["a", "b", "c"]],
        ] {
            let n = nest(3, &lists);
            let strict = n.induced_order();
            let refl = n.induced_order_reflexive();
            for x in 0..3 {
                let sx = Subset::singleton(n.universe(), x);
                assert_eq!(
                    n.upper_complement_formula(x),
                    refl.up_set(&sx).complement(),
                    "upper formula disagrees at {x} for {lists:?}"
                );
                assert_eq!(
                    n.lower_complement_formula(x),
                    strict.down_set(&sx).complement(),
                    "lower formula disagrees at {x} for {lists:?}"
                );
            }
        }
    }

    #[test]
    fn ray_formula_examples() {
        let n = nest(3, &[vec!["a"], vec!["a", "b"]]);
        let u = n.universe().clone();
        // (a,→) = ⋃{X−L : a ∈ L} = {b,c} ∪ {c} = {b,c}.
        assert_eq!(
            n.right_ray_via_members(0),
            Subset::from_indices(&u, &[1, 2])
        );
        // (←,c) = ⋃{L : c ∉ L} = {a} ∪ {a,b} = {a,b}.
        assert_eq!(n.left_ray_via_members(2), Subset::from_indices(&u, &[0, 1]));
        // c belongs to no member, so its right ray from the members is ∅.
        assert_eq!(n.right_ray_via_members(2), Subset::empty(&u));

        // And they agree with the rays of the induced order.
        let order = n.induced_order();
        for x in 0..3 {
            assert_eq!(n.left_ray_via_members(x), order.left_ray(x));
            assert_eq!(n.right_ray_via_members(x), order.right_ray(x));
        }
    }

    #[test]
    fn interlocking_examples() {
        // {{a,b}} over {a,b}: the member is X, equals the empty
        // intersection, but not the empty union — not interlocking.
        assert!(!is_interlocking(&family(2, &[vec!["a", "b"]])));
        // The same member over {a,b,c} is proper — interlocking.
        assert!(is_interlocking(&family(3, &[vec!["a", "b"]])));
        assert!(is_interlocking(&family(3, &[vec!["a"], vec!["a", "b"]])));
        // Empty family: vacuously interlocking.
        assert!(is_interlocking(&family(2, &[])));
        // Interlocking is defined for arbitrary families, not only nests.
        assert!(is_interlocking(&family(3, &[vec!["a"], vec!["b"]])));
    }

    #[test]
    fn minmax_clause_examples() {
        let n = nest(3, &[vec!["a"], vec!["a", "b"]]);
        assert_eq!(interlocking_minmax_clauses(&n).unwrap(), (true, true));
        assert!(is_interlocking(n.family()));

        // {∅,{a},{a,b},X} over {a,b}: X dedups into {a,b}; that member has
        // a maximal element while its complement ∅ has no minimal one, so
        // both clauses fail — in agreement with is_interlocking.
        let n = nest(2, &[vec![], vec!["a"], vec!["a", "b"]]);
        assert_eq!(interlocking_minmax_clauses(&n).unwrap(), (false, false));
        assert!(!is_interlocking(n.family()));
    }

    #[test]
    fn minmax_clauses_require_t0() {
        let n = nest(3, &[vec!["a"]]); // b,c never separated
        assert!(matches!(
            interlocking_minmax_clauses(&n),
            Err(Error::HypothesisNotMet(_))
        ));
    }

    #[test]
    fn t1_union_criterion_examples() {
        let l = nest(3, &[vec!["a"], vec!["a", "b"]]);
        let r = nest(3, &[vec!["c"], vec!["b", "c"]]);
        let check = check_t1_union_criterion(&l, &r).unwrap();
        assert!(check.union_t1 && check.both_t0 && check.orders_opposed);
        assert!(check.sides_agree());

        // An empty right nest separates nothing: both sides false, still agree.
        let empty = nest(3, &[]);
        let check = check_t1_union_criterion(&l, &empty).unwrap();
        assert!(!check.union_t1 && !check.conjunction());
        assert!(check.sides_agree());
    }
}
