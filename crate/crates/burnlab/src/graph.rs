//! Small explicit graphs with BFS distances.
//!
//! Used for subgraph experiments and as the host representation behind the
//! brute-force oracle. Grids stay implicit ([`crate::grid`]) unless a caller
//! opts into materialization, which is capped.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::grid::GridSpec;

/// Default cap on `m*n` when materializing a grid.
pub const DEFAULT_MATERIALIZE_CAP: u64 = 10_000;

/// An undirected simple graph over vertex ids `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: BTreeSet<(usize, usize)>,
}

impl ExplicitGraph {
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("graph must have at least one vertex".into()));
        }
        let mut edges = BTreeSet::new();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            let key = (u.min(v), u.max(v));
            if !edges.insert(key) {
                return Err(Error::InvalidInput(format!("duplicate edge ({u},{v})")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(ExplicitGraph { n, adj, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Materializes a grid; errors beyond `cap` vertices.
    pub fn from_grid(g: &GridSpec, cap: u64) -> Result<Self> {
        if g.vertex_count() > cap {
            return Err(Error::ResourceLimit(format!(
                "grid {g} has {} vertices, materialization cap is {cap}",
                g.vertex_count()
            )));
        }
        let (m, n) = (g.m(), g.n());
        let mut edge_list = Vec::new();
        for row in 1..=m {
            for col in 1..=n {
                let id = ((row - 1) * n + (col - 1)) as usize;
                if col < n {
                    edge_list.push((id, id + 1));
                }
                if row < m {
                    edge_list.push((id, id + n as usize));
                }
            }
        }
        ExplicitGraph::new((m * n) as usize, &edge_list)
    }

    /// Removes the given edges; each must be present.
    pub fn remove_edges(&self, remove: &[(usize, usize)]) -> Result<Self> {
        let mut edges = self.edges.clone();
        for &(u, v) in remove {
            if !edges.remove(&(u.min(v), u.max(v))) {
                return Err(Error::InvalidInput(format!("edge ({u},{v}) not present")));
            }
        }
        let list: Vec<_> = edges.into_iter().collect();
        ExplicitGraph::new(self.n, &list)
    }

    /// Removes vertices, compacting ids. Returns the new graph and a map
    /// from new id to old id.
    pub fn remove_vertices(&self, remove: &[usize]) -> Result<(Self, Vec<usize>)> {
        let drop: BTreeSet<usize> = remove.iter().copied().collect();
        if drop.iter().any(|&v| v >= self.n) {
            return Err(Error::InvalidInput("vertex to remove out of range".into()));
        }
        if drop.len() >= self.n {
            return Err(Error::InvalidInput("cannot remove every vertex".into()));
        }
        let keep: Vec<usize> = (0..self.n).filter(|v| !drop.contains(v)).collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &old) in keep.iter().enumerate() {
            new_id[old] = i;
        }
        let edge_list: Vec<_> = self
            .edges
            .iter()
            .filter(|(u, v)| !drop.contains(u) && !drop.contains(v))
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        Ok((ExplicitGraph::new(keep.len(), &edge_list)?, keep))
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<u64>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    /// Graph radius via all-pairs BFS; errors on disconnected graphs.
    pub fn radius(&self) -> Result<u64> {
        let mut best = u64::MAX;
        for v in 0..self.n {
            let dist = self.bfs_distances(v);
            let mut ecc = 0;
            for d in dist {
                match d {
                    Some(d) => ecc = ecc.max(d),
                    None => return Err(Error::Disconnected),
                }
            }
            best = best.min(ecc);
        }
        Ok(best)
    }

    /// Serializes to the plain edge-list format:
    /// first line `p <num_vertices>`, then one `e <u> <v>` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {}\n", self.n);
        for (u, v) in &self.edges {
            out.push_str(&format!("e {u} {v}\n"));
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut n = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = i + 1;
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            match parts.next() {
                Some("p") => {
                    if n.is_some() {
                        return Err(Error::Parse { line: lineno, msg: "duplicate p line".into() });
                    }
                    let count = parts
                        .next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or(Error::Parse { line: lineno, msg: "expected `p <count>`".into() })?;
                    n = Some(count);
                }
                Some("e") => {
                    if n.is_none() {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: "edge before p line".into(),
                        });
                    }
                    let mut next = || {
                        parts.next().and_then(|t| t.parse::<usize>().ok()).ok_or(Error::Parse {
                            line: lineno,
                            msg: "expected `e <u> <v>`".into(),
                        })
                    };
                    let u = next()?;
                    let v = next()?;
                    edges.push((u, v));
                }
                Some(other) => {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("unknown record `{other}`"),
                    });
                }
                None => {}
            }
        }
        let n = n.ok_or(Error::Parse { line: 0, msg: "missing p line".into() })?;
        ExplicitGraph::new(n, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{grid_distance, GridSpec, Vertex};

    #[test]
    fn grid_materialization() {
        let g = GridSpec::new(2, 2).unwrap();
        let eg = ExplicitGraph::from_grid(&g, DEFAULT_MATERIALIZE_CAP).unwrap();
        assert_eq!(eg.vertex_count(), 4);
        assert_eq!(eg.edge_count(), 4);

        // a 1xn grid is a path with n-1 edges
        let g = GridSpec::new(1, 7).unwrap();
        let eg = ExplicitGraph::from_grid(&g, DEFAULT_MATERIALIZE_CAP).unwrap();
        assert_eq!(eg.edge_count(), 6);

        let g = GridSpec::new(200, 200).unwrap();
        assert!(ExplicitGraph::from_grid(&g, DEFAULT_MATERIALIZE_CAP).is_err());
    }

    #[test]
    fn grid_distance_agrees_with_bfs() {
        for (m, n) in [(1, 1), (1, 9), (3, 5), (4, 16), (6, 6)] {
            let g = GridSpec::new(m, n).unwrap();
            let eg = ExplicitGraph::from_grid(&g, DEFAULT_MATERIALIZE_CAP).unwrap();
            for row in 1..=m {
                for col in 1..=n {
                    let v = Vertex::new(row, col);
                    let dist = eg.bfs_distances(g.vertex_id(v));
                    for row2 in 1..=m {
                        for col2 in 1..=n {
                            let w = Vertex::new(row2, col2);
                            assert_eq!(
                                dist[g.vertex_id(w)],
                                Some(grid_distance(&g, v, w).unwrap())
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn grid_radius_agrees_with_bfs() {
        for (m, n) in [(1, 1), (1, 8), (2, 2), (3, 7), (5, 5), (4, 16), (7, 9)] {
            let g = GridSpec::new(m, n).unwrap();
            let eg = ExplicitGraph::from_grid(&g, DEFAULT_MATERIALIZE_CAP).unwrap();
            assert_eq!(eg.radius().unwrap(), g.radius(), "grid {m}x{n}");
        }
    }

    #[test]
    fn path_forest_from_path() {
        // l * P_n built by deleting l-1 edges from P_{l*n}
        let (l, n) = (3usize, 4usize);
        let path = ExplicitGraph::from_grid(
            &GridSpec::new(1, (l * n) as u64).unwrap(),
            DEFAULT_MATERIALIZE_CAP,
        )
        .unwrap();
        let cuts: Vec<_> = (1..l).map(|i| (i * n - 1, i * n)).collect();
        let forest = path.remove_edges(&cuts).unwrap();
        assert_eq!(forest.edge_count(), path.edge_count() - (l - 1));
        assert!(forest.radius().is_err()); // disconnected
        assert!(!forest.is_connected());
    }

    #[test]
    fn vertex_removal_remaps() {
        let g = ExplicitGraph::from_grid(&GridSpec::new(2, 3).unwrap(), 100).unwrap();
        let (h, map) = g.remove_vertices(&[0]).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(map.len(), 5);
        // every surviving edge exists in the original under the map
        for (u, v) in h.edges() {
            assert!(g.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = ExplicitGraph::from_grid(&GridSpec::new(3, 3).unwrap(), 100).unwrap();
        let text = g.to_edge_list();
        assert!(text.starts_with("p 9\n"));
        let back = ExplicitGraph::parse_edge_list(&text).unwrap();
        assert_eq!(back, g);

        assert!(ExplicitGraph::parse_edge_list("e 0 1\n").is_err());
        assert!(ExplicitGraph::parse_edge_list("p 2\ne 0 5\n").is_err());
        assert!(ExplicitGraph::parse_edge_list("p 2\nq 1 2\n").is_err());
    }

    #[test]
    fn rejects_malformed_graphs() {
        assert!(ExplicitGraph::new(0, &[]).is_err());
        assert!(ExplicitGraph::new(3, &[(0, 0)]).is_err());
        assert!(ExplicitGraph::new(3, &[(0, 1), (1, 0)]).is_err());
        assert!(ExplicitGraph::new(3, &[(0, 3)]).is_err());
    }
}
