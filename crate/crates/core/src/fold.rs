//! Partial-conjugates and sequences of recursive partial-conjugates.
//!
//! `Q` is a partial-conjugate of `P` when
//!
//! 1. no pair of distinct elements is ordered by both,
//! 2. `P ∪ Q` is a partial order, and
//! 3. the transitive closure of `P ∪ Q^d` is a partial order.
//!
//! A sequence `P_1, …, P_n` is valid when every `P_k` with `1 < k < n` is a
//! partial-conjugate of the union of its predecessors and `P_n` is a
//! conjugate of the union of all the others. The fold number of `P` is the
//! length of the shortest valid sequence starting at `P`; it coincides with
//! the order dimension, and the two transforms here convert between the
//! witnesses.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::rc::Rc;

use crate::conjugate::{conjugate_violation, find_conjugate_matrix};
use crate::dimension::Realizer;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::relation::{GroundSet, LinearOrder, PartialOrder};

/// One of the three partial-conjugate conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// No distinct pair ordered by both.
    Disjoint,
    /// The union is a partial order.
    UnionIsOrder,
    /// The closure of the union with the dual is a partial order.
    DualClosureIsOrder,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Disjoint => "(i) disjoint strict parts",
            Condition::UnionIsOrder => "(ii) union is a partial order",
            Condition::DualClosureIsOrder => "(iii) closure of union with dual is a partial order",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialConjugateReport {
    pub cond_i: bool,
    pub cond_ii: bool,
    pub cond_iii: bool,
    pub holds: bool,
    /// First offending pair for each failed condition, in condition order.
    pub violations: Vec<(Condition, (String, String))>,
}

impl PartialConjugateReport {
    pub fn witness_violation(&self) -> Option<&(Condition, (String, String))> {
        self.violations.first()
    }
}

/// Offending pair for each condition, `None` when it holds.
pub(crate) fn partial_conjugate_violations(p: &Matrix, q: &Matrix) -> [Option<(usize, usize)>; 3] {
    let comparable = |m: &Matrix| m.union(&m.transpose()).strict();
    let cond_i = comparable(p).intersect(&comparable(q)).first_pair();

    let union = p.union(q);
    let cond_ii = order_violation(&union);

    let closed = p.union(&q.transpose()).transitive_closure();
    let cond_iii = order_violation(&closed);

    let out = [cond_i, cond_ii, cond_iii];
    // conditions (ii) and (iii) together force (i)
    assert!(
        !(out[1].is_none() && out[2].is_none() && out[0].is_some()),
        "partial-conjugate conditions (ii) and (iii) hold without (i)"
    );
    out
}

/// Least pair witnessing a failure of reflexivity, antisymmetry or transitivity.
fn order_violation(m: &Matrix) -> Option<(usize, usize)> {
    let refl = (0..m.len()).find(|&i| !m.get(i, i)).map(|i| (i, i));
    let anti = m.first_symmetric_pair();
    let trans = m.first_missing_transitive_pair();
    [refl, anti, trans].into_iter().flatten().min()
}

pub fn is_partial_conjugate(p: &PartialOrder, q: &PartialOrder) -> Result<PartialConjugateReport> {
    p.ground().check_same(q.ground())?;
    let found = partial_conjugate_violations(p.matrix(), q.matrix());
    let conditions = [
        Condition::Disjoint,
        Condition::UnionIsOrder,
        Condition::DualClosureIsOrder,
    ];
    let violations = conditions
        .iter()
        .zip(found)
        .filter_map(|(&c, v)| v.map(|ij| (c, p.ground().pair(ij))))
        .collect();
    Ok(PartialConjugateReport {
        cond_i: found[0].is_none(),
        cond_ii: found[1].is_none(),
        cond_iii: found[2].is_none(),
        holds: found.iter().all(Option::is_none),
        violations,
    })
}

/// A list of partial orders over one ground set, claimed to be a sequence of
/// recursive partial-conjugates. Validity is checked by [`verify_sequence`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcSequence {
    parts: Vec<PartialOrder>,
}

impl PcSequence {
    pub fn new(parts: Vec<PartialOrder>) -> Result<Self> {
        let first = parts.first().ok_or(Error::EmptyList("partial order"))?;
        for p in &parts[1..] {
            first.ground().check_same(p.ground())?;
        }
        Ok(PcSequence { parts })
    }

    pub fn parts(&self) -> &[PartialOrder] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn ground(&self) -> &GroundSet {
        self.parts[0].ground()
    }

    /// Union of the first `k` parts as a relation matrix.
    fn prefix(&self, k: usize) -> Matrix {
        self.parts[1..k]
            .iter()
            .fold(self.parts[0].matrix().clone(), |acc, p| {
                acc.union(p.matrix())
            })
    }

    /// Union of the first `k` parts, when it is a partial order.
    pub fn prefix_union(&self, k: usize) -> Option<PartialOrder> {
        assert!(1 <= k && k <= self.len());
        let m = self.prefix(k);
        m.is_partial_order()
            .then(|| PartialOrder::from_matrix_unchecked(self.ground().clone(), m))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceFailure {
    /// A one-part sequence whose only part is not linear.
    NotLinear { pair: (String, String) },
    /// Part `index` (1-based) is not a partial-conjugate of the preceding union.
    NotPartialConjugate {
        index: usize,
        condition: Condition,
        pair: (String, String),
    },
    /// The last part is not a conjugate of the preceding union.
    NotConjugate {
        index: usize,
        pair: (String, String),
    },
}

impl fmt::Display for SequenceFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceFailure::NotLinear { pair: (a, b) } => {
                write!(f, "single part is not linear: {a} and {b} are incomparable")
            }
            SequenceFailure::NotPartialConjugate {
                index,
                condition,
                pair: (a, b),
            } => write!(
                f,
                "part {index} is not a partial-conjugate of the preceding union: \
                 condition {condition} fails at ({a}, {b})"
            ),
            SequenceFailure::NotConjugate {
                index,
                pair: (a, b),
            } => write!(
                f,
                "part {index} is not a conjugate of the preceding union: \
                 {a} and {b} are ordered by both or by neither"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceCheck {
    pub valid: bool,
    pub failure: Option<SequenceFailure>,
}

/// Checks a sequence. A single-part sequence counts as valid exactly when
/// its part is a linear order.
pub fn verify_sequence(seq: &PcSequence) -> SequenceCheck {
    let failure = sequence_failure(seq);
    SequenceCheck {
        valid: failure.is_none(),
        failure,
    }
}

fn sequence_failure(seq: &PcSequence) -> Option<SequenceFailure> {
    let g = seq.ground();
    let n = seq.len();
    if n == 1 {
        let m = seq.parts[0].matrix();
        return m
            .incomparable_pairs()
            .first()
            .map(|&ij| SequenceFailure::NotLinear { pair: g.pair(ij) });
    }
    let mut union = seq.parts[0].matrix().clone();
    for (k, part) in seq.parts.iter().enumerate().skip(1) {
        let index = k + 1;
        if index < n {
            let found = partial_conjugate_violations(&union, part.matrix());
            let conditions = [
                Condition::Disjoint,
                Condition::UnionIsOrder,
                Condition::DualClosureIsOrder,
            ];
            if let Some((condition, ij)) = conditions
                .into_iter()
                .zip(found)
                .find_map(|(c, v)| v.map(|ij| (c, ij)))
            {
                return Some(SequenceFailure::NotPartialConjugate {
                    index,
                    condition,
                    pair: g.pair(ij),
                });
            }
            union = union.union(part.matrix());
        } else if let Some(ij) = conjugate_violation(&union, part.matrix()) {
            return Some(SequenceFailure::NotConjugate {
                index,
                pair: g.pair(ij),
            });
        }
    }
    None
}

/// Default limit on search nodes visited by [`fold_number`].
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug)]
pub struct FoldOptions {
    pub node_budget: u64,
}

impl Default for FoldOptions {
    fn default() -> Self {
        FoldOptions {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

pub fn fold_number(p: &PartialOrder) -> Result<(usize, PcSequence)> {
    fold_number_with(p, FoldOptions::default())
}

/// Shortest sequence of recursive partial-conjugates starting at `p`, by
/// iterative deepening on the sequence length. Candidates at each node are
/// tried smallest strict part first, then lexicographically.
pub fn fold_number_with(p: &PartialOrder, opts: FoldOptions) -> Result<(usize, PcSequence)> {
    let ground = p.ground().clone();
    let build = |mats: Vec<Matrix>| {
        let parts = std::iter::once(p.clone())
            .chain(
                mats.into_iter()
                    .map(|m| PartialOrder::from_matrix_unchecked(ground.clone(), m)),
            )
            .collect();
        PcSequence { parts }
    };
    if p.is_linear() {
        return Ok((1, build(Vec::new())));
    }
    let mut search = FoldSearch {
        budget: opts.node_budget,
        visited: 0,
        dead: HashSet::new(),
        candidates: HashMap::new(),
    };
    for steps in 1.. {
        if let Some(rest) = search.extend(p.matrix(), steps)? {
            let seq = build(rest);
            debug_assert!(verify_sequence(&seq).valid);
            return Ok((steps + 1, seq));
        }
    }
    unreachable!()
}

struct FoldSearch {
    budget: u64,
    visited: u64,
    /// `(union, steps)` states known to have no completion.
    dead: HashSet<(Matrix, usize)>,
    candidates: HashMap<Matrix, Rc<Vec<Matrix>>>,
}

impl FoldSearch {
    /// Parts completing a valid sequence from prefix union `u` in exactly
    /// `steps` further parts.
    fn extend(&mut self, u: &Matrix, steps: usize) -> Result<Option<Vec<Matrix>>> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::ResourceCap(format!(
                "fold search exceeded {} nodes",
                self.budget
            )));
        }
        if steps == 1 {
            return Ok(find_conjugate_matrix(u).map(|q| vec![q]));
        }
        let key = (u.clone(), steps);
        if self.dead.contains(&key) {
            return Ok(None);
        }
        let candidates = match self.candidates.get(u) {
            Some(c) => c.clone(),
            None => {
                let c = Rc::new(partial_conjugate_candidates(u));
                self.candidates.insert(u.clone(), c.clone());
                c
            }
        };
        for q in candidates.iter() {
            let next = u.union(q);
            if let Some(mut rest) = self.extend(&next, steps - 1)? {
                rest.insert(0, q.clone());
                return Ok(Some(rest));
            }
        }
        self.dead.insert(key);
        Ok(None)
    }
}

/// Every partial-conjugate of the partial order `u` other than the
/// antichain, sorted by strict size and then lexicographically by strict
/// pairs. Each is returned with the diagonal.
pub(crate) fn partial_conjugate_candidates(u: &Matrix) -> Vec<Matrix> {
    let pairs = u.incomparable_pairs();
    let mut gen = CandidateGen {
        u,
        u_strict: u.strict(),
        pairs: &pairs,
        out: Vec::new(),
    };
    let n = u.len();
    gen.walk(0, Matrix::empty(n), Matrix::empty(n));
    let mut out = gen.out;
    out.sort_by_cached_key(|q| (q.count(), q.pairs().collect::<Vec<_>>()));
    out.into_iter().map(|q| q.with_diagonal()).collect()
}

struct CandidateGen<'a> {
    u: &'a Matrix,
    u_strict: Matrix,
    pairs: &'a [(usize, usize)],
    out: Vec<Matrix>,
}

impl CandidateGen<'_> {
    /// Decides incomparable pair `t` as unordered or oriented either way.
    /// `q` is the strict part forced so far; `frozen` marks pairs decided
    /// as unordered (symmetric).
    fn walk(&mut self, t: usize, q: Matrix, frozen: Matrix) {
        if t == self.pairs.len() {
            if !q.is_zero() {
                self.out.push(q);
            }
            return;
        }
        let (i, j) = self.pairs[t];
        if q.comparable(i, j) {
            self.walk(t + 1, q, frozen);
            return;
        }
        let mut frozen_here = frozen.clone();
        frozen_here.set(i, j);
        frozen_here.set(j, i);
        self.walk(t + 1, q.clone(), frozen_here);
        for (a, b) in [(i, j), (j, i)] {
            if let Some(next) = self.orient(&q, &frozen, a, b) {
                self.walk(t + 1, next, frozen.clone());
            }
        }
    }

    /// Adds `a -> b` and everything the final union's transitivity forces.
    fn orient(&self, q: &Matrix, frozen: &Matrix, a: usize, b: usize) -> Option<Matrix> {
        let mut closed = self.u.union(q);
        closed.add_edge_closed(a, b);
        if !closed.is_antisymmetric() {
            return None;
        }
        let next = closed.strict().difference(&self.u_strict);
        if next.intersects(frozen) {
            return None;
        }
        // q must itself be transitive without borrowing pairs of u
        if next.transitive_closure().intersects(&self.u_strict) {
            return None;
        }
        let dual_closure = self.u.union(&next.transpose()).transitive_closure();
        if !dual_closure.is_antisymmetric() {
            return None;
        }
        Some(next)
    }
}

/// The sequence built from a realizer `L_1, …, L_n`:
/// `P_1 = L_1 ∩ ⋯ ∩ L_n` and, for `k ≥ 2`,
/// `P_k = L_1 ∩ ⋯ ∩ L_{n−k+1} ∩ (L_{n−k+2})^d`.
pub fn decompose_realizer(r: &Realizer) -> Result<PcSequence> {
    let ls = r.extensions();
    if ls.is_empty() {
        return Err(Error::NotARealizer("no linear orders".into()));
    }
    let n = ls.len();
    let ground = r.target().ground().clone();
    let mut parts = vec![r.target().clone()];
    for k in 2..=n {
        // keep L_1 .. L_{n-k+1}, reverse L_{n-k+2}
        let keep = n - k + 1;
        let m = ls[..keep]
            .iter()
            .fold(ls[keep].matrix().transpose(), |acc, l| {
                acc.intersect(l.matrix())
            });
        parts.push(PartialOrder::from_matrix_unchecked(ground.clone(), m));
    }
    Ok(PcSequence { parts })
}

/// Builds a realizer of at most `n` linear orders from a valid sequence of
/// length `n`: the last part and its dual complete the preceding union to
/// two linear orders, then each earlier part `P_k` contributes a linear
/// extension of the closure of `(P_1 ∪ ⋯ ∪ P_{k−1}) ∪ P_k^d`.
pub fn realize_sequence(seq: &PcSequence) -> Result<Realizer> {
    if let Some(f) = sequence_failure(seq) {
        return Err(Error::InvalidSequence(f.to_string()));
    }
    let ground = seq.ground().clone();
    let n = seq.len();
    let target = seq.parts[0].clone();
    if n == 1 {
        let l = LinearOrder::new(target.clone())?;
        return Realizer::new(target, vec![l]);
    }
    let mut orders: Vec<LinearOrder> = Vec::with_capacity(n);
    let mut push = |m: Matrix| {
        let l = LinearOrder::new(PartialOrder::from_matrix_unchecked(ground.clone(), m))
            .expect("construction yields a linear order");
        if !orders.contains(&l) {
            orders.push(l);
        }
    };
    let head = seq.prefix(n - 1);
    let last = seq.parts[n - 1].matrix();
    push(head.union(last));
    push(head.union(&last.transpose()));
    for k in (2..n).rev() {
        let before = seq.prefix(k - 1);
        let closed = before
            .union(&seq.parts[k - 1].matrix().transpose())
            .transitive_closure();
        let l = PartialOrder::from_matrix_unchecked(ground.clone(), closed).extend_to_linear();
        push(l.matrix().clone());
    }
    Realizer::new(target, orders)
}
