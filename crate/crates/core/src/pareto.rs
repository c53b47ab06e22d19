//! Pareto dominance of strict preference profiles.

use crate::dimension::dimension_with;
use crate::dimension::DimensionOptions;
use crate::error::{Error, Result};
use crate::relation::{GroundSet, LinearOrder, PartialOrder};

/// One strict ranking per agent over a shared ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    ground: GroundSet,
    agents: Vec<LinearOrder>,
}

impl Profile {
    pub fn new(ground: GroundSet, agents: Vec<LinearOrder>) -> Result<Self> {
        if agents.is_empty() {
            return Err(Error::EmptyList("agent"));
        }
        for a in &agents {
            ground.check_same(a.ground())?;
        }
        Ok(Profile { ground, agents })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn agents(&self) -> &[LinearOrder] {
        &self.agents
    }

    pub fn len(&self) -> usize {
        self.agents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.agents.is_empty()
    }

    /// The same profile with one more agent holding `order`.
    pub fn with_agent(&self, order: LinearOrder) -> Result<Profile> {
        let mut agents = self.agents.clone();
        agents.push(order);
        Profile::new(self.ground.clone(), agents)
    }
}

/// `x` dominates `y` when every agent ranks `x` above `y`; the diagonal is
/// kept, so the result is a partial order.
pub fn pareto_relation(profile: &Profile) -> PartialOrder {
    let mut m = profile.agents[0].matrix().clone();
    for a in &profile.agents[1..] {
        m = m.intersect(a.matrix());
    }
    PartialOrder::from_matrix_unchecked(profile.ground.clone(), m)
}

/// Fewest agents whose profile generates `p`, with one such profile.
pub fn min_profile(p: &PartialOrder) -> Result<(usize, Profile)> {
    min_profile_with(p, DimensionOptions::default())
}

pub fn min_profile_with(p: &PartialOrder, opts: DimensionOptions) -> Result<(usize, Profile)> {
    let (n, realizer) = dimension_with(p, opts)?;
    let profile = Profile::new(p.ground().clone(), realizer.extensions().to_vec())?;
    debug_assert_eq!(&pareto_relation(&profile), p);
    Ok((n, profile))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_agents_reproduce_their_order() {
        let g = GroundSet::new(["x", "y", "z"]).unwrap();
        let l = LinearOrder::from_ranking(&g, &["y", "z", "x"]).unwrap();
        let prof = Profile::new(g, vec![l.clone(), l.clone()]).unwrap();
        assert_eq!(&pareto_relation(&prof), l.as_partial_order());
    }

    #[test]
    fn opposed_agents_dominate_nothing() {
        let g = GroundSet::new(["x", "y", "z"]).unwrap();
        let l = LinearOrder::from_ranking(&g, &["y", "z", "x"]).unwrap();
        let prof = Profile::new(g.clone(), vec![l.clone(), l.dual()]).unwrap();
        assert_eq!(pareto_relation(&prof), PartialOrder::antichain(&g));
    }

    #[test]
    fn profile_validation() {
        let g = GroundSet::new(["x", "y"]).unwrap();
        assert_eq!(
            Profile::new(g.clone(), vec![]),
            Err(Error::EmptyList("agent"))
        );
        let other = GroundSet::new(["y", "x"]).unwrap();
        let l = LinearOrder::from_ranking(&other, &["x", "y"]).unwrap();
        assert_eq!(Profile::new(g, vec![l]), Err(Error::GroundSetMismatch));
    }

    #[test]
    fn chain_needs_one_agent() {
        let g = GroundSet::new(["x", "y", "z"]).unwrap();
        let l = LinearOrder::from_ranking(&g, &["z", "y", "x"]).unwrap();
        let (n, prof) = min_profile(l.as_partial_order()).unwrap();
        assert_eq!(n, 1);
        assert_eq!(prof.agents(), &[l]);
    }
}
