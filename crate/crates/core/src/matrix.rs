//! Square boolean matrices packed one row per machine word.
//!
//! Bit `j` of `rows[i]` is set when element `i` is related to element `j`.
//! Everything above the public relation types is expressed in terms of these
//! word-parallel operations.

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub(crate) struct Matrix {
    n: usize,
    rows: Vec<u64>,
}

#[inline]
pub(crate) fn bit(j: usize) -> u64 {
    1u64 << j
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

impl Matrix {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= 64);
        Matrix {
            n,
            rows: vec![0; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::empty(n);
        for i in 0..n {
            m.rows[i] = bit(i);
        }
        m
    }

    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] & bit(j) != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.rows[i] |= bit(j);
    }

    pub fn set_row(&mut self, i: usize, row: u64) {
        self.rows[i] = row;
    }

    #[inline]
    pub fn row(&self, i: usize) -> u64 {
        self.rows[i]
    }

    /// Column `j` as a bit mask over rows.
    pub fn column(&self, j: usize) -> u64 {
        let mut col = 0;
        for (i, r) in self.rows.iter().enumerate() {
            if r & bit(j) != 0 {
                col |= bit(i);
            }
        }
        col
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    pub fn union(&self, other: &Matrix) -> Matrix {
        Matrix {
            n: self.n,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersect(&self, other: &Matrix) -> Matrix {
        Matrix {
            n: self.n,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &Matrix) -> Matrix {
        Matrix {
            n: self.n,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &Matrix) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Matrix) -> bool {
        self.rows.iter().zip(&other.rows).any(|(a, b)| a & b != 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::empty(self.n);
        for i in 0..self.n {
            let mut r = self.rows[i];
            while r != 0 {
                let j = r.trailing_zeros() as usize;
                t.rows[j] |= bit(i);
                r &= r - 1;
            }
        }
        t
    }

    /// Off-diagonal part.
    pub fn strict(&self) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m.rows[i] &= !bit(i);
        }
        m
    }

    pub fn with_diagonal(&self) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m.rows[i] |= bit(i);
        }
        m
    }

    /// Smallest transitive superset. Rows are widened by the rows they reach
    /// until nothing changes; the pivot-outer sweep reaches that fixed point
    /// in a single pass.
    pub fn transitive_closure(&self) -> Matrix {
        let mut m = self.clone();
        for k in 0..self.n {
            let rk = m.rows[k];
            for i in 0..self.n {
                if m.rows[i] & bit(k) != 0 {
                    m.rows[i] |= rk;
                }
            }
        }
        m
    }

    /// Adds `a -> b` to a transitively closed matrix and restores closure.
    pub fn add_edge_closed(&mut self, a: usize, b: usize) {
        let gain = self.rows[b] | bit(b);
        let sources = self.column(a) | bit(a);
        let mut s = sources;
        while s != 0 {
            let u = s.trailing_zeros() as usize;
            self.rows[u] |= gain;
            s &= s - 1;
        }
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i))
    }

    pub fn is_complete(&self) -> bool {
        let full = full_mask(self.n);
        let t = self.transpose();
        (0..self.n).all(|i| (self.rows[i] | t.rows[i]) == full)
    }

    /// Least `(i, j)` with `i < j` related in both directions.
    pub fn first_symmetric_pair(&self) -> Option<(usize, usize)> {
        let t = self.transpose();
        for i in 0..self.n {
            let both = self.rows[i] & t.rows[i] & !full_mask(i + 1);
            if both != 0 {
                return Some((i, both.trailing_zeros() as usize));
            }
        }
        None
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.first_symmetric_pair().is_none()
    }

    /// Least pair forced by composition but absent from the matrix.
    pub fn first_missing_transitive_pair(&self) -> Option<(usize, usize)> {
        let closure = self.transitive_closure();
        let missing = closure.difference(self);
        missing.first_pair()
    }

    pub fn is_transitive(&self) -> bool {
        for i in 0..self.n {
            let mut r = self.rows[i];
            let mut reach = 0;
            while r != 0 {
                let j = r.trailing_zeros() as usize;
                reach |= self.rows[j];
                r &= r - 1;
            }
            if reach & !self.rows[i] != 0 {
                return false;
            }
        }
        true
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_reflexive() && self.is_antisymmetric() && self.is_transitive()
    }

    pub fn is_linear_order(&self) -> bool {
        self.is_partial_order() && self.is_complete()
    }

    /// Lexicographically least set entry.
    pub fn first_pair(&self) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find(|(_, &r)| r != 0)
            .map(|(i, &r)| (i, r.trailing_zeros() as usize))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, &r)| {
            let mut rest = r;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let j = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some((i, j))
                }
            })
        })
    }

    pub fn count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Unordered pairs `i < j` related in neither direction.
    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let t = self.transpose();
        let mut out = Vec::new();
        for i in 0..self.n {
            let free = !(self.rows[i] | t.rows[i]) & full_mask(self.n) & !full_mask(i + 1);
            let mut f = free;
            while f != 0 {
                let j = f.trailing_zeros() as usize;
                out.push((i, j));
                f &= f - 1;
            }
        }
        out
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.get(i, j) || self.get(j, i)
    }
}
