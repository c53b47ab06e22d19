//! Exhaustive enumeration of small labelled posets and the batch checks
//! run over them.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::conjugate::{conjugate_union, find_conjugate, is_conjugate};
use crate::dimension::{
    dim_at_most_2, dimension_with, hiraguchi_bound, is_realizer, DimensionOptions,
};
use crate::error::{Error, Result};
use crate::fold::{
    decompose_realizer, fold_number_with, is_partial_conjugate, realize_sequence, verify_sequence,
    FoldOptions,
};
use crate::matrix::Matrix;
use crate::relation::{GroundSet, PartialOrder};
use crate::text::write_poset;

/// Largest ground set [`enumerate_posets`] accepts by default.
pub const DEFAULT_CORPUS_CAP: usize = 5;

pub fn enumerate_posets(n: usize) -> Result<Vec<PartialOrder>> {
    enumerate_posets_capped(n, DEFAULT_CORPUS_CAP)
}

/// Every labelled partial order on `n` elements, exactly once, over the
/// ground set `a, b, c, ...`. Unordered pairs are decided in lexicographic
/// order as unrelated, `i > j` or `j > i`; each decision is checked against
/// the transitivity constraints it completes.
pub fn enumerate_posets_capped(n: usize, cap: usize) -> Result<Vec<PartialOrder>> {
    if n == 0 || n > cap {
        return Err(Error::CapExceeded { requested: n, cap });
    }
    let ground = GroundSet::letters(n)?;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut strict = Matrix::empty(n);
    let mut decided = Matrix::empty(n);
    enumerate_rec(&pairs, 0, &mut strict, &mut decided, &mut |m| {
        out.push(PartialOrder::from_matrix_unchecked(
            ground.clone(),
            m.with_diagonal(),
        ));
    });
    Ok(out)
}

fn enumerate_rec(
    pairs: &[(usize, usize)],
    t: usize,
    strict: &mut Matrix,
    decided: &mut Matrix,
    emit: &mut dyn FnMut(&Matrix),
) {
    if t == pairs.len() {
        debug_assert!(strict.with_diagonal().is_partial_order());
        emit(strict);
        return;
    }
    let (i, j) = pairs[t];
    decided.set(i, j);
    decided.set(j, i);
    let n = strict.len();
    // unrelated: no decided path of length two may join them
    let joined = (0..n)
        .any(|c| (strict.get(i, c) && strict.get(c, j)) || (strict.get(j, c) && strict.get(c, i)));
    if !joined {
        enumerate_rec(pairs, t + 1, strict, decided, emit);
    }
    for (a, b) in [(i, j), (j, i)] {
        let consistent = (0..n).all(|c| {
            let left = !strict.get(c, a) || !decided.get(c, b) || strict.get(c, b);
            let right = !strict.get(b, c) || !decided.get(a, c) || strict.get(a, c);
            left && right
        });
        if consistent {
            let saved = strict.row(a);
            strict.set(a, b);
            enumerate_rec(pairs, t + 1, strict, decided, emit);
            strict.set_row(a, saved);
        }
    }
    let clear = |m: &mut Matrix, r: usize, c: usize| m.set_row(r, m.row(r) & !(1u64 << c));
    clear(decided, i, j);
    clear(decided, j, i);
}

/// Properties checked on every corpus poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// Order dimension equals the fold number.
    DimensionEqualsFold,
    /// A conjugate exists exactly when the dimension is at most two.
    ConjugateIffDimAtMostTwo,
    /// A found conjugate passes verification and yields a realizer of size ≤ 2.
    ConjugateWitness,
    /// The union of conjugates, and of one with the other's dual, is linear.
    ConjugateUnionLinear,
    /// Dual poset has the same dimension.
    DualDimension,
    /// Dimension is at most the Hiraguchi bound.
    HiraguchiBound,
    /// The minimal fold witness is a valid sequence.
    FoldWitnessValid,
    /// Merging the first two parts of an n-part witness leaves an (n−1)-fold order.
    FoldDropOne,
    /// Adjacent later parts of a minimal witness never union to a partial order.
    AdjacentUnionNotOrder,
    /// Conditions (ii) and (iii) imply (i).
    PartialConjugateRedundancy,
    /// Being a partial-conjugate is symmetric.
    PartialConjugateSymmetry,
    /// Realizer → sequence → realizer round trip.
    RealizerRoundTrip,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::DimensionEqualsFold,
        Check::ConjugateIffDimAtMostTwo,
        Check::ConjugateWitness,
        Check::ConjugateUnionLinear,
        Check::DualDimension,
        Check::HiraguchiBound,
        Check::FoldWitnessValid,
        Check::FoldDropOne,
        Check::AdjacentUnionNotOrder,
        Check::PartialConjugateRedundancy,
        Check::PartialConjugateSymmetry,
        Check::RealizerRoundTrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::DimensionEqualsFold => "dimension-equals-fold",
            Check::ConjugateIffDimAtMostTwo => "conjugate-iff-dim-at-most-2",
            Check::ConjugateWitness => "conjugate-witness",
            Check::ConjugateUnionLinear => "conjugate-union-linear",
            Check::DualDimension => "dual-dimension",
            Check::HiraguchiBound => "hiraguchi-bound",
            Check::FoldWitnessValid => "fold-witness-valid",
            Check::FoldDropOne => "fold-drop-one",
            Check::AdjacentUnionNotOrder => "adjacent-union-not-order",
            Check::PartialConjugateRedundancy => "partial-conjugate-redundancy",
            Check::PartialConjugateSymmetry => "partial-conjugate-symmetry",
            Check::RealizerRoundTrip => "realizer-round-trip",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Tally {
    pub applicable: usize,
    pub passed: usize,
}

impl Tally {
    pub fn all_passed(&self) -> bool {
        self.applicable == self.passed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusReport {
    pub ground_size: usize,
    pub poset_count: usize,
    pub fold_checked: bool,
    pub dimension_histogram: BTreeMap<usize, usize>,
    pub checks: BTreeMap<Check, Tally>,
    /// First poset (in enumeration order) with a failed check.
    pub first_failure: Option<(String, Check)>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }

    pub fn tally(&self, check: Check) -> Tally {
        self.checks.get(&check).copied().unwrap_or_default()
    }
}

impl fmt::Display for CorpusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ground size: {}", self.ground_size)?;
        writeln!(f, "posets: {}", self.poset_count)?;
        writeln!(
            f,
            "fold search: {}",
            if self.fold_checked { "on" } else { "off" }
        )?;
        let hist: Vec<String> = self
            .dimension_histogram
            .iter()
            .map(|(d, c)| format!("{d}:{c}"))
            .collect();
        writeln!(f, "dimensions: {}", hist.join(" "))?;
        for (check, t) in &self.checks {
            let status = if t.all_passed() { "ok" } else { "FAIL" };
            writeln!(
                f,
                "{:<30} {:>6}/{:<6} {status}",
                check.name(),
                t.passed,
                t.applicable
            )?;
        }
        match &self.first_failure {
            None => writeln!(f, "result: pass"),
            Some((poset, check)) => {
                writeln!(f, "first failure: {check} on {poset}")?;
                writeln!(f, "result: FAIL")
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CorpusOptions {
    /// Run the fold search and the checks that need it.
    pub fold: bool,
    /// Worker threads; 1 runs on the calling thread.
    pub workers: usize,
    pub cap: usize,
    pub dimension: DimensionOptions,
    pub fold_search: FoldOptions,
}

impl CorpusOptions {
    /// Defaults for ground size `n`: fold search up to five elements.
    pub fn for_size(n: usize) -> Self {
        CorpusOptions {
            fold: n <= 5,
            workers: 1,
            cap: DEFAULT_CORPUS_CAP,
            dimension: DimensionOptions::default(),
            fold_search: FoldOptions::default(),
        }
    }
}

/// One poset in single-line form, for failure reports.
pub fn describe(p: &PartialOrder) -> String {
    write_poset(p).trim_end().replace('\n', "; ")
}

type Outcome = (usize, Vec<(Check, bool)>);

pub fn run_corpus_checks(n: usize, opts: &CorpusOptions) -> Result<CorpusReport> {
    let corpus = enumerate_posets_capped(n, opts.cap)?;
    let outcomes: Vec<Outcome> = if opts.workers <= 1 {
        corpus
            .iter()
            .enumerate()
            .map(|(i, p)| check_poset(&corpus, i, p, opts))
            .collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::ResourceCap(format!("cannot start workers: {e}")))?;
        pool.install(|| {
            corpus
                .par_iter()
                .enumerate()
                .map(|(i, p)| check_poset(&corpus, i, p, opts))
                .collect::<Result<_>>()
        })?
    };

    let mut report = CorpusReport {
        ground_size: n,
        poset_count: corpus.len(),
        fold_checked: opts.fold,
        dimension_histogram: BTreeMap::new(),
        checks: Check::ALL
            .iter()
            .filter(|c| opts.fold || !needs_fold(**c))
            .map(|&c| (c, Tally::default()))
            .collect(),
        first_failure: None,
    };
    for (p, (dim, results)) in corpus.iter().zip(outcomes) {
        *report.dimension_histogram.entry(dim).or_default() += 1;
        for (check, ok) in results {
            let t = report.checks.entry(check).or_default();
            t.applicable += 1;
            if ok {
                t.passed += 1;
            } else if report.first_failure.is_none() {
                report.first_failure = Some((describe(p), check));
            }
        }
    }
    Ok(report)
}

fn needs_fold(c: Check) -> bool {
    matches!(
        c,
        Check::DimensionEqualsFold
            | Check::FoldWitnessValid
            | Check::FoldDropOne
            | Check::AdjacentUnionNotOrder
    )
}

fn check_poset(
    corpus: &[PartialOrder],
    i: usize,
    p: &PartialOrder,
    opts: &CorpusOptions,
) -> Result<Outcome> {
    let tag = |e: Error| match e {
        Error::ResourceCap(msg) => Error::ResourceCap(format!("{msg} on poset {}", describe(p))),
        other => other,
    };
    let mut results = Vec::new();
    let (dim, realizer) = dimension_with(p, opts.dimension).map_err(tag)?;

    // conjugates
    let conjugate = find_conjugate(p);
    results.push((
        Check::ConjugateIffDimAtMostTwo,
        conjugate.is_some() == (dim <= 2),
    ));
    let mut partners: Vec<PartialOrder> = Vec::new();
    if let Some(q) = &conjugate {
        let verified = is_conjugate(p, q)?.is_conjugate;
        let sized = dim_at_most_2(p)
            .map(|(_, r)| r.len() <= 2 && is_realizer(p, r.extensions()).is_ok_and(|c| c.realizes))
            .unwrap_or(false);
        results.push((Check::ConjugateWitness, verified && sized));
        let linear = conjugate_union(p, q).is_ok() && conjugate_union(p, &q.dual()).is_ok();
        results.push((Check::ConjugateUnionLinear, linear));
        partners.push(q.clone());
    }

    let (dual_dim, _) = dimension_with(&p.dual(), opts.dimension).map_err(tag)?;
    results.push((Check::DualDimension, dual_dim == dim));
    results.push((Check::HiraguchiBound, dim <= hiraguchi_bound(p)));

    if opts.fold {
        let (fold, seq) = fold_number_with(p, opts.fold_search).map_err(tag)?;
        results.push((Check::DimensionEqualsFold, fold == dim));
        results.push((
            Check::FoldWitnessValid,
            seq.len() == fold && verify_sequence(&seq).valid,
        ));
        if fold >= 2 {
            let merged = seq.prefix_union(2);
            let ok = match merged {
                Some(m) => fold_number_with(&m, opts.fold_search).map_err(tag)?.0 == fold - 1,
                None => false,
            };
            results.push((Check::FoldDropOne, ok));
        }
        if fold >= 3 {
            let parts = seq.parts();
            let ok = (1..fold - 1).all(|k| {
                !parts[k]
                    .relation()
                    .union(parts[k + 1].relation())
                    .map(|u| u.classify().partial_order)
                    .unwrap_or(false)
            });
            results.push((Check::AdjacentUnionNotOrder, ok));
        }
        partners.extend(seq.parts()[1..].iter().cloned());
    }

    // sampled partners for the partial-conjugate laws
    let len = corpus.len();
    partners.push(p.dual());
    partners.push(corpus[(i + 1) % len].clone());
    partners.push(corpus[(7 * i + 3) % len].clone());
    for q in &partners {
        let pq = is_partial_conjugate(p, q)?;
        let qp = is_partial_conjugate(q, p)?;
        results.push((
            Check::PartialConjugateRedundancy,
            !(pq.cond_ii && pq.cond_iii) || pq.cond_i,
        ));
        results.push((Check::PartialConjugateSymmetry, pq.holds == qp.holds));
    }

    let seq = decompose_realizer(&realizer)?;
    let round_trip = seq.len() == dim
        && verify_sequence(&seq).valid
        && realize_sequence(&seq).is_ok_and(|r| {
            r.len() <= dim && is_realizer(p, r.extensions()).is_ok_and(|c| c.realizes)
        });
    results.push((Check::RealizerRoundTrip, round_trip));

    Ok((dim, results))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_posets(1).unwrap().len(), 1);
        assert_eq!(enumerate_posets(2).unwrap().len(), 3);
        assert_eq!(enumerate_posets(3).unwrap().len(), 19);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate_posets(6).unwrap_err(),
            Error::CapExceeded {
                requested: 6,
                cap: 5
            }
        );
        assert!(enumerate_posets(0).is_err());
    }

    #[test]
    fn two_element_corpus() {
        let report = run_corpus_checks(2, &CorpusOptions::for_size(2)).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.poset_count, 3);
        assert_eq!(report.dimension_histogram, BTreeMap::from([(1, 2), (2, 1)]));
        assert_eq!(report.tally(Check::ConjugateWitness).applicable, 3);
    }
}
