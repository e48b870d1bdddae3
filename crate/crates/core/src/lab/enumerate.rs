//! Exhaustive, duplicate-free instance enumerators with frozen-count
//! self-tests. Orderings are deterministic so suite reports are stable.

use crate::error::{Error, Result};
use crate::foundation::{SetFamily, Subset, Universe, MAX_EXHAUSTIVE};
use crate::nests::Nest;
use crate::relations::Relation;
use std::sync::Arc;

/// Largest universe for exhaustive transitive-relation enumeration
/// (2^(n²) matrices are filtered; 65,536 at the cap).
pub const MAX_RELATION_ENUMERATION: usize = 4;

/// Largest universe for exhaustive linear-order enumeration (n! orders;
/// 5,040 at the cap).
pub const MAX_ORDER_ENUMERATION: usize = 7;

/// Largest universe for exhaustive family enumeration (2^(2^n) families;
/// 65,536 at the cap).
pub const MAX_FAMILY_ENUMERATION: usize = 4;

fn check_cap(op: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::SizeCap { op, cap, n })
    } else {
        Ok(())
    }
}

/// Number of nests on an n-element set, by inclusion–exclusion over
/// chain lengths: a weak chain of length k is a map X → {0,…,k}, and
/// strict chains of length k number Σ_j (−1)^j C(k−1,j)·(k+1−j)^n.
pub fn count_nests(n: usize) -> u64 {
    let mut total: i128 = 1; // the empty chain
    for k in 1..=n + 1 {
        for j in 0..k {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let term = binomial(k - 1, j) * (k + 1 - j).pow(n as u32) as i128;
            total += sign * term;
        }
    }
    total as u64
}

fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Every nest on the universe (the empty family included), exactly once:
/// the empty nest first, then depth-first over strict ⊂-chains with
/// members listed in ascending mask order. A strict superset always has
/// the larger mask, so scanning masks above the current top suffices.
pub fn enumerate_nests(u: &Arc<Universe>) -> Result<Vec<Nest>> {
    check_cap("nest enumeration", u.size(), MAX_EXHAUSTIVE)?;
    let full = u.full_mask();
    let mut out = Vec::with_capacity(count_nests(u.size()) as usize);
    let mut chain = Vec::new();
    out.push(nest_from_masks(u, &chain));
    extend_chain(u, full, &mut chain, &mut out);
    Ok(out)
}

fn extend_chain(u: &Arc<Universe>, full: u64, chain: &mut Vec<u64>, out: &mut Vec<Nest>) {
    let floor = chain.last().copied();
    let start = floor.map_or(0, |m| m + 1);
    for next in start..=full {
        if let Some(m) = floor {
            if next & m != m {
                continue;
            }
        }
        chain.push(next);
        out.push(nest_from_masks(u, chain));
        extend_chain(u, full, chain, out);
        chain.pop();
    }
}

fn nest_from_masks(u: &Arc<Universe>, masks: &[u64]) -> Nest {
    let family = SetFamily::new(u.clone(), masks.iter().map(|&m| Subset::from_mask(u, m)));
    Nest::try_from(family).expect("a ⊂-chain is a nest")
}

/// Every transitive relation on the universe, by ascending adjacency
/// mask: generate all 2^(n²) matrices and filter.
pub fn enumerate_transitive_relations(u: &Arc<Universe>) -> Result<Vec<Relation>> {
    let n = u.size();
    check_cap(
        "transitive-relation enumeration",
        n,
        MAX_RELATION_ENUMERATION,
    )?;
    Ok((0..1u64 << (n * n))
        .map(|mask| Relation::from_matrix_mask(u.clone(), mask))
        .filter(Relation::is_transitive)
        .collect())
}

/// The n! strict total orders, one per permutation, permutations in
/// lexicographic order (the permutation lists elements from least to
/// greatest).
pub fn enumerate_linear_orders(u: &Arc<Universe>) -> Result<Vec<Relation>> {
    let n = u.size();
    check_cap("linear-order enumeration", n, MAX_ORDER_ENUMERATION)?;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    place_next(u, &mut current, &mut used, &mut out);
    Ok(out)
}

fn place_next(
    u: &Arc<Universe>,
    current: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Relation>,
) {
    let n = used.len();
    if current.len() == n {
        let mut rank = vec![0usize; n];
        for (pos, &elem) in current.iter().enumerate() {
            rank[elem] = pos;
        }
        out.push(Relation::from_fn(u.clone(), |x, y| rank[x] < rank[y]));
        return;
    }
    for i in 0..n {
        if !used[i] {
            used[i] = true;
            current.push(i);
            place_next(u, current, used, out);
            current.pop();
            used[i] = false;
        }
    }
}

/// Every family of subsets of the universe, by ascending family bitmap
/// (bit s ⇔ the subset with mask s belongs to the family).
pub fn enumerate_families(u: &Arc<Universe>) -> Result<Vec<SetFamily>> {
    let n = u.size();
    check_cap("family enumeration", n, MAX_FAMILY_ENUMERATION)?;
    let subset_count = 1u32 << n;
    Ok((0..1u64 << subset_count)
        .map(|famset| {
            let members = (0..subset_count as u64)
                .filter(|s| famset >> s & 1 == 1)
                .map(|s| Subset::from_mask(u, s));
            SetFamily::new(u.clone(), members)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn nest_counts_match_closed_form() {
        let expected = [2u64, 4, 12, 52, 300, 2164, 18732];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(count_nests(n), want, "closed form at n={n}");
            let listed = enumerate_nests(&Universe::alphabetic(n)).unwrap();
            assert_eq!(listed.len() as u64, want, "enumeration at n={n}");
        }
        assert!(matches!(
            enumerate_nests(&Universe::new((0..7).map(|i| format!("x{i}"))).unwrap()),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn nests_on_one_point_are_the_known_four() {
        let listed: Vec<String> = enumerate_nests(&Universe::alphabetic(1))
            .unwrap()
            .iter()
            .map(|nest| nest.family().render())
            .collect();
        assert_eq!(listed, vec!["{}", "{{}}", "{{}, {a}}", "{{a}}"]);
    }

    #[test]
    fn nests_are_duplicate_free() {
        let u = Universe::alphabetic(4);
        let listed = enumerate_nests(&u).unwrap();
        let distinct: HashSet<Vec<u64>> = listed
            .iter()
            .map(|nest| nest.members().iter().map(Subset::mask).collect())
            .collect();
        assert_eq!(distinct.len(), listed.len());
    }

    #[test]
    fn transitive_relation_counts() {
        let expected = [1usize, 2, 13, 171, 3994];
        for (n, &want) in expected.iter().enumerate() {
            let listed = enumerate_transitive_relations(&Universe::alphabetic(n)).unwrap();
            assert_eq!(listed.len(), want, "count at n={n}");
            assert!(listed.iter().all(Relation::is_transitive));
        }
        assert!(matches!(
            enumerate_transitive_relations(&Universe::alphabetic(5)),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn linear_order_counts_and_shape() {
        let factorials = [1usize, 1, 2, 6, 24, 120, 720];
        for (n, &want) in factorials.iter().enumerate() {
            let listed = enumerate_linear_orders(&Universe::alphabetic(n)).unwrap();
            assert_eq!(listed.len(), want, "count at n={n}");
            assert!(listed.iter().all(Relation::is_linear));
        }
        // First order at n=3 comes from the identity permutation.
        let first = &enumerate_linear_orders(&Universe::alphabetic(3)).unwrap()[0];
        assert_eq!(first.pairs(), vec![(0, 1), (0, 2), (1, 2)]);
        let too_big = Universe::new((0..8).map(|i| format!("x{i}"))).unwrap();
        assert!(matches!(
            enumerate_linear_orders(&too_big),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn family_counts() {
        let expected = [2usize, 4, 16, 256];
        for (n, &want) in expected.iter().enumerate() {
            let listed = enumerate_families(&Universe::alphabetic(n)).unwrap();
            assert_eq!(listed.len(), want, "count at n={n}");
        }
        assert_eq!(
            enumerate_families(&Universe::alphabetic(4)).unwrap().len(),
            65536
        );
        assert!(matches!(
            enumerate_families(&Universe::alphabetic(5)),
            Err(Error::SizeCap { .. })
        ));
    }
}
