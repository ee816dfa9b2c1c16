//! Target sets for partial burning.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::ExplicitGraph;
use crate::grid::{check_height, GridSpec, HorizontalPath, Vertex};

/// The set of vertices that must burn.
///
/// `Paths` and `GridVertices` apply to grid hosts, `Vertices` to explicit
/// hosts, and `All` to either.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum TargetSet {
    All,
    Paths(Vec<HorizontalPath>),
    GridVertices(Vec<Vertex>),
    Vertices(Vec<usize>),
}

impl TargetSet {
    pub fn paths(heights: impl IntoIterator<Item = u64>) -> Self {
        TargetSet::Paths(heights.into_iter().map(HorizontalPath::new).collect())
    }

    pub fn validate_for_grid(&self, g: &GridSpec) -> Result<()> {
        match self {
            TargetSet::All => Ok(()),
            TargetSet::Paths(paths) => {
                if paths.is_empty() {
                    return Err(Error::InvalidInput("target set must be nonempty".into()));
                }
                paths.iter().try_for_each(|p| check_height(g, *p))
            }
            TargetSet::GridVertices(vs) => {
                if vs.is_empty() {
                    return Err(Error::InvalidInput("target set must be nonempty".into()));
                }
                vs.iter().try_for_each(|v| g.check_vertex(*v))
            }
            TargetSet::Vertices(_) => {
                Err(Error::InvalidInput("vertex-id target on an implicit grid host".into()))
            }
        }
    }

    pub fn validate_for_explicit(&self, graph: &ExplicitGraph) -> Result<()> {
        match self {
            TargetSet::All => Ok(()),
            TargetSet::Vertices(ids) => {
                if ids.is_empty() {
                    return Err(Error::InvalidInput("target set must be nonempty".into()));
                }
                if let Some(&bad) = ids.iter().find(|&&v| v >= graph.vertex_count()) {
                    return Err(Error::InvalidInput(format!("target vertex {bad} out of range")));
                }
                Ok(())
            }
            _ => Err(Error::InvalidInput("grid-shaped target on an explicit host".into())),
        }
    }

    /// Expands to sorted, deduplicated dense ids on a grid host.
    pub fn expand_grid_ids(&self, g: &GridSpec) -> Result<Vec<usize>> {
        self.validate_for_grid(g)?;
        let mut ids: Vec<usize> = match self {
            TargetSet::All => (0..g.vertex_count() as usize).collect(),
            TargetSet::Paths(paths) => paths
                .iter()
                .flat_map(|p| (1..=g.n()).map(|col| g.vertex_id(Vertex::new(p.height, col))))
                .collect(),
            TargetSet::GridVertices(vs) => vs.iter().map(|v| g.vertex_id(*v)).collect(),
            TargetSet::Vertices(_) => unreachable!(),
        };
        ids.sort_unstable();
        ids.dedup();
        Ok(ids)
    }

    /// Expands to sorted, deduplicated ids on an explicit host.
    pub fn expand_explicit_ids(&self, graph: &ExplicitGraph) -> Result<Vec<usize>> {
        self.validate_for_explicit(graph)?;
        let mut ids: Vec<usize> = match self {
            TargetSet::All => (0..graph.vertex_count()).collect(),
            TargetSet::Vertices(ids) => ids.clone(),
            _ => unreachable!(),
        };
        ids.sort_unstable();
        ids.dedup();
        Ok(ids)
    }

    /// Distinct path heights when the grid target is a union of rows; `All`
    /// counts as every row.
    pub fn grid_heights(&self, g: &GridSpec) -> Option<Vec<u64>> {
        match self {
            TargetSet::All => Some((1..=g.m()).collect()),
            TargetSet::Paths(paths) => {
                let mut hs: Vec<u64> = paths.iter().map(|p| p.height).collect();
                hs.sort_unstable();
                hs.dedup();
                Some(hs)
            }
            _ => None,
        }
    }

    /// Whether the target is invariant under the row flip `h -> m+1-h`.
    pub fn row_symmetric(&self, g: &GridSpec) -> bool {
        match self {
            TargetSet::All => true,
            TargetSet::Paths(_) => {
                let hs = self.grid_heights(g).unwrap();
                hs.iter().all(|&h| hs.binary_search(&(g.m() + 1 - h)).is_ok())
            }
            TargetSet::GridVertices(vs) => {
                let set: std::collections::BTreeSet<_> = vs.iter().copied().collect();
                set.iter().all(|v| set.contains(&Vertex::new(g.m() + 1 - v.row, v.col)))
            }
            TargetSet::Vertices(_) => false,
        }
    }

    /// Whether the target is invariant under the column flip `c -> n+1-c`.
    pub fn col_symmetric(&self, g: &GridSpec) -> bool {
        match self {
            TargetSet::All | TargetSet::Paths(_) => true,
            TargetSet::GridVertices(vs) => {
                let set: std::collections::BTreeSet<_> = vs.iter().copied().collect();
                set.iter().all(|v| set.contains(&Vertex::new(v.row, g.n() + 1 - v.col)))
            }
            TargetSet::Vertices(_) => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_expansion() {
        let g = GridSpec::new(4, 16).unwrap();
        let t = TargetSet::paths([1, 4]);
        let ids = t.expand_grid_ids(&g).unwrap();
        assert_eq!(ids.len(), 32);
        assert!(t.row_symmetric(&g));
        assert!(TargetSet::paths([1, 3]).validate_for_grid(&g).is_ok());
        assert!(!TargetSet::paths([1, 3]).row_symmetric(&g));
        assert!(TargetSet::paths([5]).validate_for_grid(&g).is_err());
        assert!(TargetSet::Paths(vec![]).validate_for_grid(&g).is_err());
    }

    #[test]
    fn explicit_expansion() {
        let graph = ExplicitGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let t = TargetSet::Vertices(vec![3, 1, 3]);
        assert_eq!(t.expand_explicit_ids(&graph).unwrap(), vec![1, 3]);
        assert!(TargetSet::Vertices(vec![4]).validate_for_explicit(&graph).is_err());
        assert!(TargetSet::All.expand_explicit_ids(&graph).unwrap().len() == 4);
    }
}
