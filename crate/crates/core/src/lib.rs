//! Exact order dimension for finite posets.
//!
//! The crate computes the dimension of a partial order by set cover over
//! its linear extensions, searches for Dushnik–Miller conjugates, and
//! builds and checks sequences of recursive partial-conjugates, whose
//! shortest length (the fold number) equals the dimension. Realizers and
//! sequences convert into each other constructively. A Pareto front end
//! reads the dimension as the smallest number of agents whose strict
//! preferences generate a dominance relation.

pub mod conjugate;
pub mod corpus;
pub mod dimension;
pub mod dot;
pub mod error;
pub mod fold;
mod matrix;
pub mod pareto;
pub mod relation;
pub mod text;

pub use conjugate::{conjugate_union, find_conjugate, is_conjugate, ConjugateReport};
pub use corpus::{enumerate_posets, run_corpus_checks, Check, CorpusOptions, CorpusReport};
pub use dimension::{
    dim_at_most_2, dimension, dimension_with, hiraguchi_bound, is_realizer, DimensionOptions,
    Realizer, RealizerCheck,
};
pub use dot::export_dot;
pub use error::{Error, Result};
pub use fold::{
    decompose_realizer, fold_number, fold_number_with, is_partial_conjugate, realize_sequence,
    verify_sequence, Condition, FoldOptions, PartialConjugateReport, PcSequence, SequenceCheck,
    SequenceFailure,
};
pub use pareto::{min_profile, pareto_relation, Profile};
pub use relation::{GroundSet, LinearOrder, OrderClass, PartialOrder, Relation, MAX_ELEMENTS};
