//! Ground sets, binary relations and the order classes built on them.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::{bit, Matrix};

/// Largest ground set a relation can be built over.
pub const MAX_ELEMENTS: usize = 64;

/// Ordered list of distinct element labels. Position in the list is the
/// element index used by every relation over this ground set.
#[derive(Clone, Debug)]
pub struct GroundSet {
    labels: Arc<[String]>,
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }
}

impl Eq for GroundSet {}

fn valid_label(label: &str) -> bool {
    !label.is_empty()
        && !label
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '>' | '#' | ':' | '='))
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::TooManyElements(labels.len()));
        }
        for (i, l) in labels.iter().enumerate() {
            if !valid_label(l) {
                return Err(Error::InvalidLabel(l.clone()));
            }
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet {
            labels: labels.into(),
        })
    }

    /// Ground set labelled `a`, `b`, `c`, ... (then `e26`, `e27`, ...).
    pub fn letters(n: usize) -> Result<Self> {
        GroundSet::new((0..n).map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("e{i}")
            }
        }))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub(crate) fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub(crate) fn pair(&self, (i, j): (usize, usize)) -> (String, String) {
        (self.labels[i].clone(), self.labels[j].clone())
    }

    pub(crate) fn check_same(&self, other: &GroundSet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::GroundSetMismatch)
        }
    }
}

/// A nonempty binary relation over a ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    ground: GroundSet,
    matrix: Matrix,
}

/// Order-theoretic properties of a relation, each evaluated directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct OrderClass {
    pub reflexive: bool,
    pub complete: bool,
    pub antisymmetric: bool,
    pub transitive: bool,
    pub quasi_order: bool,
    pub partial_order: bool,
    pub weak_order: bool,
    pub linear_order: bool,
}

impl Relation {
    /// Builds a relation from labelled pairs, optionally adding the diagonal.
    pub fn from_pairs<I, A, B>(ground: &GroundSet, pairs: I, diagonal: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut matrix = Matrix::empty(ground.len());
        for (a, b) in pairs {
            let i = ground.require(a.as_ref())?;
            let j = ground.require(b.as_ref())?;
            matrix.set(i, j);
        }
        if diagonal {
            matrix = matrix.with_diagonal();
        }
        Relation::from_matrix(ground.clone(), matrix)
    }

    pub fn diagonal(ground: &GroundSet) -> Self {
        Relation {
            ground: ground.clone(),
            matrix: Matrix::identity(ground.len()),
        }
    }

    pub(crate) fn from_matrix(ground: GroundSet, matrix: Matrix) -> Result<Self> {
        debug_assert_eq!(ground.len(), matrix.len());
        if matrix.is_zero() {
            return Err(Error::EmptyRelation);
        }
        Ok(Relation { ground, matrix })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `true` when element `i` is related to element `j`.
    pub fn holds(&self, i: usize, j: usize) -> bool {
        self.matrix.get(i, j)
    }

    /// Label-level membership test; unknown labels are never related.
    pub fn contains(&self, a: &str, b: &str) -> bool {
        match (self.ground.index_of(a), self.ground.index_of(b)) {
            (Some(i), Some(j)) => self.matrix.get(i, j),
            _ => false,
        }
    }

    /// All pairs in row-major order.
    pub fn pairs(&self) -> Vec<(String, String)> {
        self.matrix.pairs().map(|p| self.ground.pair(p)).collect()
    }

    /// Off-diagonal pairs in row-major order.
    pub fn strict_pairs(&self) -> Vec<(String, String)> {
        self.matrix
            .strict()
            .pairs()
            .map(|p| self.ground.pair(p))
            .collect()
    }

    pub fn strict_count(&self) -> usize {
        self.matrix.strict().count()
    }

    pub fn is_subset(&self, other: &Relation) -> Result<bool> {
        self.ground.check_same(&other.ground)?;
        Ok(self.matrix.is_subset(&other.matrix))
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.ground.check_same(&other.ground)?;
        Relation::from_matrix(self.ground.clone(), self.matrix.union(&other.matrix))
    }

    pub fn intersect(&self, other: &Relation) -> Result<Relation> {
        self.ground.check_same(&other.ground)?;
        Relation::from_matrix(self.ground.clone(), self.matrix.intersect(&other.matrix))
    }

    pub fn dual(&self) -> Relation {
        Relation {
            ground: self.ground.clone(),
            matrix: self.matrix.transpose(),
        }
    }

    pub fn transitive_closure(&self) -> Relation {
        Relation {
            ground: self.ground.clone(),
            matrix: self.matrix.transitive_closure(),
        }
    }

    pub fn with_diagonal(&self) -> Relation {
        Relation {
            ground: self.ground.clone(),
            matrix: self.matrix.with_diagonal(),
        }
    }

    pub fn classify(&self) -> OrderClass {
        let m = &self.matrix;
        let reflexive = m.is_reflexive();
        let complete = m.is_complete();
        let antisymmetric = m.is_antisymmetric();
        let transitive = m.is_transitive();
        OrderClass {
            reflexive,
            complete,
            antisymmetric,
            transitive,
            quasi_order: reflexive && transitive,
            partial_order: reflexive && transitive && antisymmetric,
            weak_order: complete && transitive,
            linear_order: complete && transitive && antisymmetric,
        }
    }

    /// Describes the least order-axiom violation, if any.
    pub(crate) fn partial_order_violation(&self) -> Option<String> {
        let m = &self.matrix;
        if let Some(i) = (0..m.len()).find(|&i| !m.get(i, i)) {
            return Some(format!(
                "missing reflexive pair ({0}, {0})",
                self.ground.label(i)
            ));
        }
        if let Some((i, j)) = m.first_symmetric_pair() {
            return Some(format!(
                "{} and {} are related in both directions",
                self.ground.label(i),
                self.ground.label(j)
            ));
        }
        if let Some((i, j)) = m.first_missing_transitive_pair() {
            return Some(format!(
                "transitivity requires ({}, {})",
                self.ground.label(i),
                self.ground.label(j)
            ));
        }
        None
    }
}

/// A reflexive, antisymmetric, transitive relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialOrder {
    rel: Relation,
}

impl PartialOrder {
    pub fn new(rel: Relation) -> Result<Self> {
        match rel.partial_order_violation() {
            None => Ok(PartialOrder { rel }),
            Some(why) => Err(Error::NotPartialOrder(why)),
        }
    }

    /// Adds the diagonal before validating, for strict (irreflexive) input.
    pub fn with_diagonal(rel: Relation) -> Result<Self> {
        PartialOrder::new(rel.with_diagonal())
    }

    /// Builds a partial order from strict labelled pairs `a > b`.
    pub fn from_strict_pairs<I, A, B>(ground: &GroundSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        PartialOrder::new(Relation::from_pairs(ground, pairs, true)?)
    }

    /// The antichain: only the diagonal.
    pub fn antichain(ground: &GroundSet) -> Self {
        PartialOrder {
            rel: Relation::diagonal(ground),
        }
    }

    pub(crate) fn from_matrix_unchecked(ground: GroundSet, matrix: Matrix) -> Self {
        debug_assert!(matrix.is_partial_order());
        PartialOrder {
            rel: Relation { ground, matrix },
        }
    }

    pub(crate) fn matrix(&self) -> &Matrix {
        &self.rel.matrix
    }

    pub fn relation(&self) -> &Relation {
        &self.rel
    }

    pub fn into_relation(self) -> Relation {
        self.rel
    }

    pub fn ground(&self) -> &GroundSet {
        &self.rel.ground
    }

    pub fn len(&self) -> usize {
        self.rel.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn holds(&self, i: usize, j: usize) -> bool {
        self.rel.holds(i, j)
    }

    pub fn contains(&self, a: &str, b: &str) -> bool {
        self.rel.contains(a, b)
    }

    pub fn is_linear(&self) -> bool {
        self.rel.matrix.is_complete()
    }

    pub fn dual(&self) -> PartialOrder {
        PartialOrder {
            rel: self.rel.dual(),
        }
    }

    /// Intersection of two partial orders is always a partial order.
    pub fn intersect(&self, other: &PartialOrder) -> Result<PartialOrder> {
        Ok(PartialOrder {
            rel: self.rel.intersect(&other.rel)?,
        })
    }

    /// Union, provided it is again a partial order.
    pub fn union(&self, other: &PartialOrder) -> Result<PartialOrder> {
        PartialOrder::new(self.rel.union(&other.rel)?)
    }

    /// Unordered pairs `{x, y}`, `x` before `y` in ground order, that are
    /// related in neither direction.
    pub fn incomparable_pairs(&self) -> Vec<(String, String)> {
        self.matrix()
            .incomparable_pairs()
            .into_iter()
            .map(|p| self.ground().pair(p))
            .collect()
    }

    /// Every linear order containing this one, lexicographically by the
    /// top-down permutation of element indices.
    pub fn linear_extensions(&self) -> LinearExtensions {
        LinearExtensions::new(self)
    }

    /// The first linear extension in canonical order.
    pub fn extend_to_linear(&self) -> LinearOrder {
        self.linear_extensions()
            .next()
            .expect("every finite partial order has a linear extension")
    }

    pub fn as_linear(&self) -> Option<LinearOrder> {
        LinearOrder::new(self.clone()).ok()
    }
}

/// A complete partial order, equivalently a ranking of the ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOrder {
    ord: PartialOrder,
}

impl LinearOrder {
    pub fn new(ord: PartialOrder) -> Result<Self> {
        if let Some((i, j)) = ord.matrix().incomparable_pairs().first() {
            return Err(Error::NotLinearOrder(format!(
                "{} and {} are incomparable",
                ord.ground().label(*i),
                ord.ground().label(*j)
            )));
        }
        Ok(LinearOrder { ord })
    }

    /// Builds a linear order from a ranking listed top (best) first.
    pub fn from_ranking<S: AsRef<str>>(ground: &GroundSet, ranking: &[S]) -> Result<Self> {
        let mut order = Vec::with_capacity(ranking.len());
        for label in ranking {
            let i = ground.require(label.as_ref())?;
            if order.contains(&i) {
                return Err(Error::NotLinearOrder(format!(
                    "{} appears twice in the ranking",
                    label.as_ref()
                )));
            }
            order.push(i);
        }
        if order.len() != ground.len() {
            let missing = (0..ground.len()).find(|i| !order.contains(i)).unwrap();
            return Err(Error::NotLinearOrder(format!(
                "{} is missing from the ranking",
                ground.label(missing)
            )));
        }
        Ok(LinearOrder::from_index_ranking(ground, &order))
    }

    pub(crate) fn from_index_ranking(ground: &GroundSet, order: &[usize]) -> Self {
        let mut matrix = Matrix::empty(ground.len());
        let mut below = 0u64;
        for &i in order.iter().rev() {
            below |= bit(i);
            matrix.set_row(i, below);
        }
        LinearOrder {
            ord: PartialOrder::from_matrix_unchecked(ground.clone(), matrix),
        }
    }

    /// Element indices from top to bottom.
    pub fn ranking_indices(&self) -> Vec<usize> {
        let m = self.ord.matrix();
        let mut idx: Vec<usize> = (0..m.len()).collect();
        // the top element is above everything, so row popcount decides rank
        idx.sort_by_key(|&i| std::cmp::Reverse(m.row(i).count_ones()));
        idx
    }

    /// Labels from top to bottom.
    pub fn ranking(&self) -> Vec<String> {
        self.ranking_indices()
            .into_iter()
            .map(|i| self.ground().label(i).to_string())
            .collect()
    }

    pub fn as_partial_order(&self) -> &PartialOrder {
        &self.ord
    }

    pub fn into_partial_order(self) -> PartialOrder {
        self.ord
    }

    pub fn relation(&self) -> &Relation {
        self.ord.relation()
    }

    pub(crate) fn matrix(&self) -> &Matrix {
        self.ord.matrix()
    }

    pub fn ground(&self) -> &GroundSet {
        self.ord.ground()
    }

    pub fn dual(&self) -> LinearOrder {
        LinearOrder {
            ord: self.ord.dual(),
        }
    }
}

impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ranking().join(" > "))
    }
}

/// Lazy enumeration of linear extensions by backtracking over maximal
/// elements, smallest index first.
pub struct LinearExtensions {
    ground: GroundSet,
    /// `above[x]`: elements strictly above `x`.
    above: Vec<u64>,
    stack: Vec<usize>,
    placed: u64,
    started: bool,
    done: bool,
}

impl LinearExtensions {
    fn new(p: &PartialOrder) -> Self {
        let m = p.matrix();
        let above = (0..m.len()).map(|x| m.column(x) & !bit(x)).collect();
        LinearExtensions {
            ground: p.ground().clone(),
            above,
            stack: Vec::with_capacity(m.len()),
            placed: 0,
            started: false,
            done: false,
        }
    }

    /// Extends the current prefix to a full ranking, trying candidates at
    /// the current depth starting from index `from`.
    fn advance(&mut self, mut from: usize) -> bool {
        let n = self.above.len();
        loop {
            if self.stack.len() == n {
                return true;
            }
            let next =
                (from..n).find(|&x| self.placed & bit(x) == 0 && self.above[x] & !self.placed == 0);
            match next {
                Some(x) => {
                    self.stack.push(x);
                    self.placed |= bit(x);
                    from = 0;
                }
                None => match self.stack.pop() {
                    Some(x) => {
                        self.placed &= !bit(x);
                        from = x + 1;
                    }
                    None => return false,
                },
            }
        }
    }
}

impl Iterator for LinearExtensions {
    type Item = LinearOrder;

    fn next(&mut self) -> Option<LinearOrder> {
        if self.done {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            self.advance(0)
        } else {
            match self.stack.pop() {
                Some(x) => {
                    self.placed &= !bit(x);
                    self.advance(x + 1)
                }
                None => false,
            }
        };
        if !found {
            self.done = true;
            return None;
        }
        Some(LinearOrder::from_index_ranking(&self.ground, &self.stack))
    }
}
