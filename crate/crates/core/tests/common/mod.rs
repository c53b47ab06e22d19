//! Fixtures and brute-force oracles shared by the integration tests. The
//! oracles work on plain `Vec<Vec<bool>>` matrices and permutations and do
//! not call into the crate's search code.

#![allow(dead_code)]

use posetdim::{GroundSet, LinearOrder, PartialOrder, Relation};

pub fn po(ground: &GroundSet, strict: &[(&str, &str)]) -> PartialOrder {
    PartialOrder::from_strict_pairs(ground, strict.iter().copied()).unwrap()
}

pub fn lin(ground: &GroundSet, ranking: &[&str]) -> LinearOrder {
    LinearOrder::from_ranking(ground, ranking).unwrap()
}

/// Three-element example: `P` orders only `x > y`; `Q` orders `x > z`, `y > z`.
pub struct ThreePoint {
    pub ground: GroundSet,
    pub p: PartialOrder,
    pub q: PartialOrder,
}

pub fn three_point() -> ThreePoint {
    let ground = GroundSet::new(["x", "y", "z"]).unwrap();
    let p = po(&ground, &[("x", "y")]);
    let q = po(&ground, &[("x", "z"), ("y", "z")]);
    ThreePoint { ground, p, q }
}

pub const SIX_LABELS: [&str; 6] = ["x", "y", "z", "a", "b", "c"];

pub const SIX_COORDS: [(&str, [i32; 3]); 6] = [
    ("x", [5, 3, 6]),
    ("y", [3, 6, 5]),
    ("z", [6, 5, 3]),
    ("a", [4, 2, 2]),
    ("b", [2, 1, 4]),
    ("c", [1, 4, 1]),
];

/// Strict pairs of the three six-element orders, row by row.
pub const SIX_P: [(&str, &str); 6] = [
    ("x", "a"),
    ("x", "b"),
    ("y", "b"),
    ("y", "c"),
    ("z", "a"),
    ("z", "c"),
];
pub const SIX_Q: [(&str, &str); 3] = [("z", "x"), ("z", "b"), ("a", "b")];
pub const SIX_R: [(&str, &str); 6] = [
    ("x", "y"),
    ("x", "c"),
    ("z", "y"),
    ("a", "y"),
    ("a", "c"),
    ("b", "c"),
];

pub struct SixPoint {
    pub ground: GroundSet,
    pub p: PartialOrder,
    pub q: PartialOrder,
    pub r: PartialOrder,
    /// One linear order per coordinate, larger value on top.
    pub axes: [LinearOrder; 3],
}

/// Strict pairs `u > v` where `sign[i] * (u_i - v_i) > 0` for every listed axis.
fn coordinate_order(ground: &GroundSet, signs: &[(usize, i32)]) -> PartialOrder {
    let mut pairs = Vec::new();
    for (u, cu) in SIX_COORDS {
        for (v, cv) in SIX_COORDS {
            if u != v && signs.iter().all(|&(i, s)| s * (cu[i] - cv[i]) > 0) {
                pairs.push((u, v));
            }
        }
    }
    po(ground, &pairs)
}

pub fn six_point() -> SixPoint {
    let ground = GroundSet::new(SIX_LABELS).unwrap();
    let p = po(&ground, &SIX_P);
    let q = po(&ground, &SIX_Q);
    let r = po(&ground, &SIX_R);
    let axes = [0, 1, 2].map(|i| {
        let mut labels: Vec<(&str, i32)> = SIX_COORDS.iter().map(|(l, c)| (*l, c[i])).collect();
        labels.sort_by_key(|&(_, v)| -v);
        let ranking: Vec<&str> = labels.into_iter().map(|(l, _)| l).collect();
        lin(&ground, &ranking)
    });
    SixPoint {
        ground,
        p,
        q,
        r,
        axes,
    }
}

/// The same three orders recomputed from the coordinate table.
pub fn six_point_from_coordinates() -> (PartialOrder, PartialOrder, PartialOrder) {
    let ground = GroundSet::new(SIX_LABELS).unwrap();
    (
        coordinate_order(&ground, &[(0, 1), (1, 1), (2, 1)]),
        coordinate_order(&ground, &[(0, 1), (1, 1), (2, -1)]),
        coordinate_order(&ground, &[(0, 1), (1, -1)]),
    )
}

// ---------------------------------------------------------------- oracles

pub type Bool2 = Vec<Vec<bool>>;

pub fn to_bool(rel: &Relation) -> Bool2 {
    let n = rel.len();
    (0..n)
        .map(|i| (0..n).map(|j| rel.holds(i, j)).collect())
        .collect()
}

pub fn brute_is_partial_order(m: &Bool2) -> bool {
    let n = m.len();
    for i in 0..n {
        if !m[i][i] {
            return false;
        }
        for j in 0..n {
            if i != j && m[i][j] && m[j][i] {
                return false;
            }
            for k in 0..n {
                if m[i][j] && m[j][k] && !m[i][k] {
                    return false;
                }
            }
        }
    }
    true
}

/// Pairs joined by a chain of one or more steps, by depth-first search.
pub fn brute_closure(m: &Bool2) -> Bool2 {
    let n = m.len();
    let mut out = vec![vec![false; n]; n];
    for s in 0..n {
        let mut stack: Vec<usize> = (0..n).filter(|&j| m[s][j]).collect();
        while let Some(v) = stack.pop() {
            if !out[s][v] {
                out[s][v] = true;
                stack.extend((0..n).filter(|&j| m[v][j]));
            }
        }
    }
    out
}

/// Number of reflexive, antisymmetric, transitive 0/1 matrices on `n` points.
pub fn brute_poset_count(n: usize) -> usize {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    let mut count = 0;
    for mask in 0u64..(1 << off.len()) {
        let mut m = vec![vec![false; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = true;
        }
        for (b, &(i, j)) in off.iter().enumerate() {
            if mask >> b & 1 == 1 {
                m[i][j] = true;
            }
        }
        if brute_is_partial_order(&m) {
            count += 1;
        }
    }
    count
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Matrix of the ranking `perm` (top first).
pub fn perm_matrix(perm: &[usize]) -> Bool2 {
    let n = perm.len();
    let mut m = vec![vec![false; n]; n];
    for (a, &i) in perm.iter().enumerate() {
        for &j in &perm[a..] {
            m[i][j] = true;
        }
    }
    m
}

/// Linear extensions by filtering every permutation.
pub fn brute_extensions(p: &Bool2) -> Vec<Vec<usize>> {
    let n = p.len();
    let mut exts: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .filter(|perm| {
            let m = perm_matrix(perm);
            (0..n).all(|i| (0..n).all(|j| !p[i][j] || m[i][j]))
        })
        .collect();
    exts.sort();
    exts
}

fn combinations(
    n: usize,
    k: usize,
    start: usize,
    cur: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if cur.len() == k {
        return f(cur);
    }
    for i in start..n {
        cur.push(i);
        if combinations(n, k, i + 1, cur, f) {
            return true;
        }
        cur.pop();
    }
    false
}

/// Smallest number of linear extensions intersecting to `p`, by trying
/// every subset in order of size.
pub fn brute_dimension(p: &Bool2) -> usize {
    let n = p.len();
    let exts: Vec<Bool2> = brute_extensions(p).iter().map(|e| perm_matrix(e)).collect();
    for k in 1..=exts.len() {
        let found = combinations(exts.len(), k, 0, &mut Vec::new(), &mut |idx| {
            (0..n).all(|i| (0..n).all(|j| idx.iter().all(|&e| exts[e][i][j]) == p[i][j]))
        });
        if found {
            return k;
        }
    }
    unreachable!()
}
