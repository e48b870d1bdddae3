//! nestlab — a finite-model laboratory for nest-induced orders and the
//! topologies they generate.
//!
//! The crate works over small labeled universes (at most 64 elements;
//! exhaustive machinery caps at 6) and makes every object concrete:
//!
//! * [`foundation`] — universes, bitset subsets, canonical set families;
//! * [`relations`] — binary relations as adjacency bitmaps, with the
//!   order-theoretic predicates and up-/down-sets;
//! * [`nests`] — families totally ordered by inclusion, the strict order
//!   a nest induces, separation properties, interlocking, and the
//!   boundary/ray formulas that tie members to the induced order;
//! * [`topology`] — finite topologies with all opens materialized:
//!   upper/lower/interval topologies of a relation and the ray-generated
//!   left/right/order topologies, plus join, comparison, enumeration;
//! * [`conditions`] — the four witness-family conditions characterizing
//!   when ray topologies agree with upper/lower topologies, and the
//!   derived interval-equality implication;
//! * [`lab`] — enumerators, seeded samplers, verification suites over
//!   those instance streams, and counterexample search, with JSON
//!   reports suitable for replay;
//! * [`analysis`] — one-shot "derive everything" reports for a single
//!   family or relation, shared by the CLI and the browser demo.
//!
//! Everything is deterministic: families keep a canonical member order,
//! suite reports are reproducible bit-for-bit for a fixed seed, and
//! sampling uses an explicit, portable RNG.

pub mod analysis;
pub mod conditions;
pub mod error;
pub mod foundation;
pub mod lab;
pub mod nests;
pub mod relations;
pub mod topology;

pub use analysis::{
    analyze_family, analyze_instance, analyze_relation, FamilyAnalysis, InstanceAnalysis,
    RelationAnalysis,
};
pub use error::{Error, Result};
pub use foundation::{SetFamily, Subset, Universe};
pub use lab::{
    list_claims, list_suites, replay_failure, run_suite, search_counterexample, Failure, Instance,
    SuiteMode, SuiteReport, SuiteSpec,
};
pub use nests::Nest;
pub use relations::Relation;
pub use topology::Topology;
