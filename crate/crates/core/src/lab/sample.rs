//! Seeded pseudo-random instance generation. Streams are pure functions
//! of (kind, universe, count, seed): the RNG is a fixed portable stream
//! cipher, so sampled suite runs reproduce bit-for-bit anywhere.

use crate::error::{Error, Result};
use crate::foundation::{SetFamily, Subset, Universe};
use crate::nests::Nest;
use crate::relations::Relation;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use std::str::FromStr;
use std::sync::Arc;

/// Largest universe for transitive-relation rejection sampling; beyond
/// this the acceptance rate makes rejection impractical.
pub const MAX_RELATION_SAMPLING: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleKind {
    Nest,
    TransitiveRelation,
    NestPair,
}

impl FromStr for SampleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<SampleKind> {
        match s {
            "nest" => Ok(SampleKind::Nest),
            "transitive-relation" => Ok(SampleKind::TransitiveRelation),
            "nest-pair" => Ok(SampleKind::NestPair),
            other => Err(Error::UnknownSampleKind(other.to_string())),
        }
    }
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    rng.next_u64() % bound
}

/// One random nest: shuffle the elements, then keep a random set of
/// prefixes of the shuffle as members (prefix sets of one ordering are
/// exactly the chains, so every nest is reachable).
fn random_nest(rng: &mut ChaCha8Rng, u: &Arc<Universe>) -> Nest {
    let n = u.size();
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, below(rng, i as u64 + 1) as usize);
    }
    let picks = rng.next_u64();
    let prefixes = order.iter().scan(0u64, |mask, &element| {
        *mask |= 1 << element;
        Some(*mask)
    });
    let members: Vec<Subset> = std::iter::once(0u64)
        .chain(prefixes)
        .enumerate()
        .filter(|&(p, _)| picks >> p & 1 == 1)
        .map(|(_, mask)| Subset::from_mask(u, mask))
        .collect();
    let family = SetFamily::new(u.clone(), members);
    Nest::try_from(family).expect("prefix chains are nests")
}

pub fn sample_nests(u: &Arc<Universe>, count: u64, seed: u64) -> Vec<Nest> {
    let mut rng = rng_for(seed);
    (0..count).map(|_| random_nest(&mut rng, u)).collect()
}

pub fn sample_nest_pairs(u: &Arc<Universe>, count: u64, seed: u64) -> Vec<(Nest, Nest)> {
    let mut rng = rng_for(seed);
    (0..count)
        .map(|_| (random_nest(&mut rng, u), random_nest(&mut rng, u)))
        .collect()
}

/// Random transitive relations by rejection: draw uniform adjacency
/// matrices and keep the transitive ones.
pub fn sample_transitive_relations(
    u: &Arc<Universe>,
    count: u64,
    seed: u64,
) -> Result<Vec<Relation>> {
    let n = u.size();
    if n > MAX_RELATION_SAMPLING {
        return Err(Error::SizeCap {
            op: "transitive-relation sampling",
            cap: MAX_RELATION_SAMPLING,
            n,
        });
    }
    let mut rng = rng_for(seed);
    let matrix_mask = if n == 0 { 0 } else { u64::MAX >> (64 - n * n) };
    let mut out = Vec::with_capacity(count as usize);
    while (out.len() as u64) < count {
        let r = Relation::from_matrix_mask(u.clone(), rng.next_u64() & matrix_mask);
        if r.is_transitive() {
            out.push(r);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nests::is_nest;

    #[test]
    fn sample_kind_parsing() {
        assert_eq!(SampleKind::from_str("nest").unwrap(), SampleKind::Nest);
        assert_eq!(
            SampleKind::from_str("transitive-relation").unwrap(),
            SampleKind::TransitiveRelation
        );
        assert_eq!(
            SampleKind::from_str("nest-pair").unwrap(),
            SampleKind::NestPair
        );
        assert!(matches!(
            SampleKind::from_str("poset"),
            Err(Error::UnknownSampleKind(_))
        ));
    }

    #[test]
    fn nest_samples_are_nests_and_reproducible() {
        let u = Universe::alphabetic(5);
        let a = sample_nests(&u, 200, 7);
        let b = sample_nests(&u, 200, 7);
        assert_eq!(a.len(), 200);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.family(), y.family());
            assert!(is_nest(x.family()));
        }
        let c = sample_nests(&u, 200, 8);
        assert!(
            a.iter().zip(&c).any(|(x, y)| x.family() != y.family()),
            "different seeds should differ somewhere"
        );
    }

    #[test]
    fn nest_samples_reach_varied_shapes() {
        let u = Universe::alphabetic(4);
        let samples = sample_nests(&u, 500, 42);
        let sizes: std::collections::HashSet<usize> =
            samples.iter().map(|nest| nest.members().len()).collect();
        // Lengths 0 through 5 are all reachable on four points.
        assert!(sizes.len() >= 4, "saw only sizes {sizes:?}");
    }

    #[test]
    fn relation_samples_are_transitive_and_reproducible() {
        let u = Universe::alphabetic(4);
        let a = sample_transitive_relations(&u, 100, 3).unwrap();
        let b = sample_transitive_relations(&u, 100, 3).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(Relation::is_transitive));
        let too_big = Universe::new((0..7).map(|i| format!("x{i}"))).unwrap();
        assert!(matches!(
            sample_transitive_relations(&too_big, 1, 0),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn pair_samples_share_the_universe_and_reproduce() {
        let u = Universe::alphabetic(3);
        let a = sample_nest_pairs(&u, 50, 11);
        let b = sample_nest_pairs(&u, 50, 11);
        for ((l1, r1), (l2, r2)) in a.iter().zip(&b) {
            assert_eq!(l1.family(), l2.family());
            assert_eq!(r1.family(), r2.family());
            assert_eq!(l1.universe(), r1.universe());
        }
    }

    #[test]
    fn empty_universe_sampling_degenerates_cleanly() {
        let u = Universe::alphabetic(0);
        let nests = sample_nests(&u, 10, 0);
        assert_eq!(nests.len(), 10);
        let rels = sample_transitive_relations(&u, 10, 0).unwrap();
        assert_eq!(rels.len(), 10);
    }
}
