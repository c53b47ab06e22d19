//! Conjugate partial orders: two orders on one ground set such that every
//! pair of distinct elements is ordered by exactly one of them.

use crate::error::{Error, Result};
use crate::matrix::{bit, Matrix};
use crate::relation::{LinearOrder, PartialOrder};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugateReport {
    pub is_conjugate: bool,
    /// Least unordered pair ordered by both orders or by neither.
    pub violating_pair: Option<(String, String)>,
}

pub(crate) fn conjugate_violation(p: &Matrix, q: &Matrix) -> Option<(usize, usize)> {
    let n = p.len();
    for i in 0..n {
        for j in i + 1..n {
            if p.comparable(i, j) == q.comparable(i, j) {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn is_conjugate(p: &PartialOrder, q: &PartialOrder) -> Result<ConjugateReport> {
    p.ground().check_same(q.ground())?;
    let violating_pair = conjugate_violation(p.matrix(), q.matrix()).map(|ij| p.ground().pair(ij));
    Ok(ConjugateReport {
        is_conjugate: violating_pair.is_none(),
        violating_pair,
    })
}

/// Union of two conjugate partial orders, validated as a linear order.
///
/// Fails with [`Error::NotConjugate`] when the inputs are not conjugate.
/// A conjugate pair whose union is not linear would be a counterexample to
/// the Dushnik–Miller lemma; that case panics.
pub fn conjugate_union(p: &PartialOrder, q: &PartialOrder) -> Result<LinearOrder> {
    let report = is_conjugate(p, q)?;
    if let Some((a, b)) = report.violating_pair {
        return Err(Error::NotConjugate(format!(
            "{a} and {b} are ordered by both or by neither"
        )));
    }
    let union = p.matrix().union(q.matrix());
    assert!(
        union.is_linear_order(),
        "union of conjugate partial orders is not a linear order"
    );
    Ok(LinearOrder::new(PartialOrder::from_matrix_unchecked(
        p.ground().clone(),
        union,
    ))
    .expect("checked complete"))
}

/// Depth-first search for a transitive orientation of the incomparable
/// pairs of `p`, returned as a strict matrix.
pub(crate) fn find_conjugate_matrix(p: &Matrix) -> Option<Matrix> {
    let pairs = p.incomparable_pairs();
    let comparable: Vec<u64> = (0..p.len()).map(|i| p.row(i) | p.column(i)).collect();
    let mut q = Matrix::empty(p.len());
    if orient(&pairs, 0, &comparable, &mut q) {
        Some(q.with_diagonal())
    } else {
        None
    }
}

fn orient(pairs: &[(usize, usize)], t: usize, comparable: &[u64], q: &mut Matrix) -> bool {
    let Some(&(i, j)) = pairs[t..].iter().find(|&&(i, j)| !q.comparable(i, j)) else {
        return true;
    };
    let t = t + pairs[t..].iter().position(|&p| p == (i, j)).unwrap();
    for (a, b) in [(i, j), (j, i)] {
        if let Some(next) = try_orient(q, a, b, comparable) {
            let saved = std::mem::replace(q, next);
            if orient(pairs, t + 1, comparable, q) {
                return true;
            }
            *q = saved;
        }
    }
    false
}

/// Adds `a -> b` to the strict, transitively closed `q`. Fails when closure
/// reaches a pair comparable in `p` or closes a cycle.
fn try_orient(q: &Matrix, a: usize, b: usize, comparable: &[u64]) -> Option<Matrix> {
    let gain = q.row(b) | bit(b);
    let mut sources = q.column(a) | bit(a);
    let mut next = q.clone();
    while sources != 0 {
        let u = sources.trailing_zeros() as usize;
        sources &= sources - 1;
        let added = gain & !q.row(u);
        if added & (comparable[u] | bit(u) | q.column(u)) != 0 {
            return None;
        }
        next.set_row(u, q.row(u) | gain);
    }
    Some(next)
}

/// A conjugate of `p` if one exists. The search is exhaustive, so `None`
/// means no conjugate exists.
pub fn find_conjugate(p: &PartialOrder) -> Option<PartialOrder> {
    find_conjugate_matrix(p.matrix())
        .map(|q| PartialOrder::from_matrix_unchecked(p.ground().clone(), q))
}
