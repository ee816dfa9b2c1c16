//! Implicit grid geometry.
//!
//! An `m x n` grid (m rows, n columns) is never materialized: distances are
//! Manhattan, balls are diamonds clipped to the rectangle, and everything a
//! caller needs at large scale is expressed through per-row column intervals.
//!
//! Convention: a [`Vertex`] is `(row, col)` with `row` in `[1, m]` (the
//! "height") and `col` in `[1, n]`. Row 1 is the bottom path, row m the top.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dimensions of an implicit grid graph; `m` rows by `n` columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridSpec {
    m: u64,
    n: u64,
}

impl GridSpec {
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidInput(format!(
                "grid dimensions must be positive, got {m}x{n}"
            )));
        }
        Ok(GridSpec { m, n })
    }

    /// Number of rows (the height of the fence).
    pub fn m(&self) -> u64 {
        self.m
    }

    /// Number of columns (the width).
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn vertex_count(&self) -> u64 {
        self.m * self.n
    }

    /// The fence parameter `c = m / sqrt(n)`, derived for reporting only.
    pub fn fence_parameter(&self) -> f64 {
        self.m as f64 / (self.n as f64).sqrt()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (1..=self.m).contains(&v.row) && (1..=self.n).contains(&v.col)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { row: v.row, col: v.col, m: self.m, n: self.n })
        }
    }

    /// Row-major dense id, used by the simulator and the solver.
    pub fn vertex_id(&self, v: Vertex) -> usize {
        ((v.row - 1) * self.n + (v.col - 1)) as usize
    }

    pub fn vertex_from_id(&self, id: usize) -> Vertex {
        let id = id as u64;
        Vertex::new(id / self.n + 1, id % self.n + 1)
    }

    /// Graph radius of the grid: `ceil((m-1)/2) + ceil((n-1)/2)`.
    pub fn radius(&self) -> u64 {
        (self.m - 1).div_ceil(2) + (self.n - 1).div_ceil(2)
    }
}

impl std::fmt::Display for GridSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x{}", self.m, self.n)
    }
}

/// A grid vertex, 1-based `(row, col)`. Serializes as `[row, col]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(u64, u64)", into = "(u64, u64)")]
pub struct Vertex {
    pub row: u64,
    pub col: u64,
}

impl Vertex {
    pub fn new(row: u64, col: u64) -> Self {
        Vertex { row, col }
    }
}

impl From<(u64, u64)> for Vertex {
    fn from((row, col): (u64, u64)) -> Self {
        Vertex { row, col }
    }
}

impl From<Vertex> for (u64, u64) {
    fn from(v: Vertex) -> Self {
        (v.row, v.col)
    }
}

impl std::fmt::Display for Vertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The horizontal path at a given height: all of row `height`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HorizontalPath {
    pub height: u64,
}

impl HorizontalPath {
    pub fn new(height: u64) -> Self {
        HorizontalPath { height }
    }
}

/// Manhattan distance between two grid vertices.
pub fn grid_distance(g: &GridSpec, u: Vertex, v: Vertex) -> Result<u64> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(u.row.abs_diff(v.row) + u.col.abs_diff(v.col))
}

/// The ball of radius `r` around `center`, kept implicit.
#[derive(Debug, Clone, Copy)]
pub struct GridBall {
    grid: GridSpec,
    pub center: Vertex,
    pub radius: u64,
}

/// `ball(g, v, r)`: the set of vertices at distance at most `r` from `v`.
pub fn ball(g: &GridSpec, center: Vertex, radius: u64) -> Result<GridBall> {
    g.check_vertex(center)?;
    Ok(GridBall { grid: *g, center, radius })
}

impl GridBall {
    /// Columns of the ball on `row`, clipped to the grid, if any.
    pub fn row_interval(&self, row: u64) -> Option<(u64, u64)> {
        if row == 0 || row > self.grid.m {
            return None;
        }
        let rem = self.radius.checked_sub(self.center.row.abs_diff(row))?;
        let lo = self.center.col.saturating_sub(rem).max(1);
        let hi = (self.center.col + rem).min(self.grid.n);
        Some((lo, hi))
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.grid.contains(v)
            && v.row.abs_diff(self.center.row) + v.col.abs_diff(self.center.col) <= self.radius
    }

    pub fn size(&self) -> u64 {
        let lo_row = self.center.row.saturating_sub(self.radius).max(1);
        let hi_row = (self.center.row + self.radius).min(self.grid.m);
        (lo_row..=hi_row)
            .map(|row| self.row_interval(row).map_or(0, |(lo, hi)| hi - lo + 1))
            .sum()
    }

    /// Enumerates the ball, row-major. Only sensible on small grids.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        let lo_row = self.center.row.saturating_sub(self.radius).max(1);
        let hi_row = (self.center.row + self.radius).min(self.grid.m);
        (lo_row..=hi_row).flat_map(move |row| {
            let (lo, hi) = self.row_interval(row).unwrap_or((1, 0));
            (lo..=hi).map(move |col| Vertex::new(row, col))
        })
    }
}

/// `|B(v, r) ∩ P|` for a horizontal path `P`, in O(1).
pub fn ball_path_intersection_size(
    g: &GridSpec,
    v: Vertex,
    radius: u64,
    path: HorizontalPath,
) -> Result<u64> {
    g.check_vertex(v)?;
    check_height(g, path)?;
    let Some(rem) = radius.checked_sub(v.row.abs_diff(path.height)) else {
        return Ok(0);
    };
    let lo = v.col.saturating_sub(rem).max(1);
    let hi = (v.col + rem).min(g.n());
    Ok(hi - lo + 1)
}

pub(crate) fn check_height(g: &GridSpec, path: HorizontalPath) -> Result<()> {
    if path.height == 0 || path.height > g.m() {
        return Err(Error::InvalidInput(format!(
            "path height {} out of range for {g}",
            path.height
        )));
    }
    Ok(())
}

/// Integer square root (floor).
pub(crate) fn isqrt(x: u128) -> u128 {
    if x == 0 {
        return 0;
    }
    let mut r = (x as f64).sqrt() as u128;
    while r.saturating_mul(r) > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Smallest integer `s` with `s*s >= x`.
pub(crate) fn isqrt_ceil(x: u128) -> u128 {
    let r = isqrt(x);
    if r * r == x {
        r
    } else {
        r + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distance_examples() {
        let g = GridSpec::new(4, 16).unwrap();
        assert_eq!(grid_distance(&g, Vertex::new(1, 1), Vertex::new(1, 1)).unwrap(), 0);
        assert_eq!(grid_distance(&g, Vertex::new(1, 1), Vertex::new(3, 4)).unwrap(), 5);
        // frozen from BFS on the explicit 4x16 grid (cross-checked in graph.rs tests)
        assert_eq!(grid_distance(&g, Vertex::new(1, 1), Vertex::new(4, 16)).unwrap(), 18);
        assert!(grid_distance(&g, Vertex::new(5, 1), Vertex::new(1, 1)).is_err());
    }

    #[test]
    fn ball_examples() {
        let g = GridSpec::new(100, 100).unwrap();
        let b = ball(&g, Vertex::new(50, 50), 0).unwrap();
        assert_eq!(b.size(), 1);
        // interior vertex, r=2: 2r^2 + 2r + 1 = 13
        let b = ball(&g, Vertex::new(50, 50), 2).unwrap();
        assert_eq!(b.size(), 13);
        // corner of a 4x16 grid, r=2: enumeration gives 6
        let g = GridSpec::new(4, 16).unwrap();
        let b = ball(&g, Vertex::new(1, 1), 2).unwrap();
        assert_eq!(b.size(), 6);
        assert_eq!(b.vertices().count(), 6);
        // whole grid once r >= m+n-2
        let b = ball(&g, Vertex::new(2, 7), 18).unwrap();
        assert_eq!(b.size(), 64);
    }

    #[test]
    fn ball_size_matches_enumeration() {
        let g = GridSpec::new(5, 9).unwrap();
        for row in 1..=5 {
            for col in 1..=9 {
                for r in 0..=14 {
                    let b = ball(&g, Vertex::new(row, col), r).unwrap();
                    assert_eq!(b.size(), b.vertices().count() as u64);
                }
            }
        }
    }

    #[test]
    fn path_intersection_examples() {
        // on-path vertex far from both ends: 2t+1
        let g = GridSpec::new(4, 100).unwrap();
        let got =
            ball_path_intersection_size(&g, Vertex::new(2, 50), 5, HorizontalPath::new(2)).unwrap();
        assert_eq!(got, 11);
        // row gap larger than the radius: empty
        let got =
            ball_path_intersection_size(&g, Vertex::new(1, 50), 2, HorizontalPath::new(4)).unwrap();
        assert_eq!(got, 0);
        // corner clipping: (1,1), r=3, height 1 -> columns 1..4
        let g = GridSpec::new(4, 16).unwrap();
        let got =
            ball_path_intersection_size(&g, Vertex::new(1, 1), 3, HorizontalPath::new(1)).unwrap();
        assert_eq!(got, 4);
    }

    #[test]
    fn radius_formula() {
        assert_eq!(GridSpec::new(1, 1).unwrap().radius(), 0);
        // a path P_m as a 1xm grid
        for m in 1..=9u64 {
            assert_eq!(GridSpec::new(1, m).unwrap().radius(), (m - 1).div_ceil(2));
        }
        assert_eq!(GridSpec::new(4, 16).unwrap().radius(), 2 + 8);
    }

    #[test]
    fn vertex_ids_roundtrip() {
        let g = GridSpec::new(3, 7).unwrap();
        for id in 0..21 {
            assert_eq!(g.vertex_id(g.vertex_from_id(id)), id);
        }
    }

    #[test]
    fn isqrt_exact() {
        for x in 0..2000u128 {
            let r = isqrt(x);
            assert!(r * r <= x && (r + 1) * (r + 1) > x);
            let c = isqrt_ceil(x);
            assert!(c * c >= x && (c == 0 || (c - 1) * (c - 1) < x));
        }
    }
}
