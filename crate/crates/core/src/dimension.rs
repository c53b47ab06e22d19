//! Exact order dimension.
//!
//! A family of linear extensions realizes `P` exactly when, for every ordered
//! incomparable pair `(a, b)`, some member puts `b` above `a`. The minimum
//! realizer is found by branch-and-bound set cover over the extension list.

use crate::conjugate::find_conjugate;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::relation::{LinearOrder, PartialOrder};

/// Default limit on the number of linear extensions materialized.
pub const DEFAULT_MAX_EXTENSIONS: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realizer {
    target: PartialOrder,
    extensions: Vec<LinearOrder>,
}

impl Realizer {
    pub fn new(target: PartialOrder, extensions: Vec<LinearOrder>) -> Result<Self> {
        let check = is_realizer(&target, &extensions)?;
        if let Some((a, b)) = check.discrepancy {
            return Err(Error::NotARealizer(format!(
                "intersection and target differ at ({a}, {b})"
            )));
        }
        Ok(Realizer { target, extensions })
    }

    pub fn target(&self) -> &PartialOrder {
        &self.target
    }

    pub fn extensions(&self) -> &[LinearOrder] {
        &self.extensions
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizerCheck {
    pub realizes: bool,
    /// Least pair in the symmetric difference of the intersection and the target.
    pub discrepancy: Option<(String, String)>,
}

pub fn is_realizer(p: &PartialOrder, orders: &[LinearOrder]) -> Result<RealizerCheck> {
    let first = orders.first().ok_or(Error::EmptyList("linear order"))?;
    let mut meet = first.matrix().clone();
    for l in orders {
        p.ground().check_same(l.ground())?;
        meet = meet.intersect(l.matrix());
    }
    let diff = meet
        .difference(p.matrix())
        .union(&p.matrix().difference(&meet));
    let discrepancy = diff.first_pair().map(|ij| p.ground().pair(ij));
    Ok(RealizerCheck {
        realizes: discrepancy.is_none(),
        discrepancy,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct DimensionOptions {
    pub max_extensions: usize,
}

impl Default for DimensionOptions {
    fn default() -> Self {
        DimensionOptions {
            max_extensions: DEFAULT_MAX_EXTENSIONS,
        }
    }
}

pub fn dimension(p: &PartialOrder) -> Result<(usize, Realizer)> {
    dimension_with(p, DimensionOptions::default())
}

pub fn dimension_with(p: &PartialOrder, opts: DimensionOptions) -> Result<(usize, Realizer)> {
    if let Some(l) = p.as_linear() {
        return Ok((
            1,
            Realizer {
                target: p.clone(),
                extensions: vec![l],
            },
        ));
    }

    let mut extensions = Vec::new();
    for l in p.linear_extensions() {
        if extensions.len() == opts.max_extensions {
            return Err(Error::ResourceCap(format!(
                "more than {} linear extensions",
                opts.max_extensions
            )));
        }
        extensions.push(l);
    }

    let cover = CoverInstance::new(p.matrix(), &extensions);
    let chosen = cover.solve();
    let members = chosen
        .into_iter()
        .map(|e| extensions[e].clone())
        .collect::<Vec<_>>();
    let k = members.len();
    debug_assert!(is_realizer(p, &members).unwrap().realizes);
    Ok((
        k,
        Realizer {
            target: p.clone(),
            extensions: members,
        },
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn minus(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }
    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }
}

/// Universe: ordered incomparable pairs. Extension `e` covers `(a, b)` when
/// it ranks `b` above `a`.
struct CoverInstance {
    universe: usize,
    covers: Vec<Bits>,
    /// Extensions covering each universe element, in canonical order.
    coverers: Vec<Vec<usize>>,
    max_cover: usize,
}

impl CoverInstance {
    fn new(p: &Matrix, extensions: &[LinearOrder]) -> Self {
        let mut pairs = Vec::new();
        for (a, b) in p.incomparable_pairs() {
            pairs.push((a, b));
            pairs.push((b, a));
        }
        pairs.sort_unstable();
        let universe = pairs.len();
        let mut covers = Vec::with_capacity(extensions.len());
        let mut coverers = vec![Vec::new(); universe];
        for (e, l) in extensions.iter().enumerate() {
            let m = l.matrix();
            let mut bits = Bits::new(universe);
            for (u, &(a, b)) in pairs.iter().enumerate() {
                if m.get(b, a) {
                    bits.set(u);
                    coverers[u].push(e);
                }
            }
            covers.push(bits);
        }
        let max_cover = covers.iter().map(Bits::count).max().unwrap_or(0);
        CoverInstance {
            universe,
            covers,
            coverers,
            max_cover,
        }
    }

    /// Minimum cover by iterative deepening; members sorted by extension index.
    fn solve(&self) -> Vec<usize> {
        let mut all = Bits::new(self.universe);
        for u in 0..self.universe {
            all.set(u);
        }
        for k in 1..=self.covers.len() {
            let mut chosen = Vec::with_capacity(k);
            if self.search(&all, k, &mut chosen) {
                chosen.sort_unstable();
                return chosen;
            }
        }
        unreachable!("the full extension list always realizes the order")
    }

    fn search(&self, uncovered: &Bits, k: usize, chosen: &mut Vec<usize>) -> bool {
        if uncovered.is_zero() {
            return true;
        }
        let left = k - chosen.len();
        if left == 0 || uncovered.count() > left * self.max_cover {
            return false;
        }
        // most constrained pair, lowest index on ties
        let pivot = uncovered
            .ones()
            .min_by_key(|&u| self.coverers[u].len())
            .expect("nonzero");
        for &e in &self.coverers[pivot] {
            if chosen.contains(&e) {
                continue;
            }
            chosen.push(e);
            if self.search(&uncovered.minus(&self.covers[e]), k, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// A conjugate of `p` together with the realizer `{P ∪ Q, P ∪ Q^d}`, if
/// `p` has dimension at most two. Duplicate members are dropped.
pub fn dim_at_most_2(p: &PartialOrder) -> Option<(PartialOrder, Realizer)> {
    let q = find_conjugate(p)?;
    let up = PartialOrder::from_matrix_unchecked(p.ground().clone(), p.matrix().union(q.matrix()));
    let down = PartialOrder::from_matrix_unchecked(
        p.ground().clone(),
        p.matrix().union(&q.matrix().transpose()),
    );
    let mut extensions = vec![LinearOrder::new(up).expect("union with a conjugate is linear")];
    let second = LinearOrder::new(down).expect("union with a dual conjugate is linear");
    if second != extensions[0] {
        extensions.push(second);
    }
    let realizer = Realizer::new(p.clone(), extensions).expect("conjugate yields a realizer");
    Some((q, realizer))
}

/// Upper bound on dimension: `⌊|X|/2⌋` for four or more elements, 2 for two
/// or three, 1 for a singleton.
pub fn hiraguchi_bound(p: &PartialOrder) -> usize {
    match p.len() {
        0 | 1 => 1,
        2 | 3 => 2,
        n => n / 2,
    }
}
