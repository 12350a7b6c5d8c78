//! Polygon description and triangulations of the L-shaped domain.

use std::collections::{BTreeMap, HashMap};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::Point2;

/// Simple polygon with counterclockwise vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonDomain {
    pub vertices: Vec<Point2>,
}

impl PolygonDomain {
    /// `(−1, 1)²` minus `[0, 1] × [−1, 0]`, reentrant corner at the origin.
    pub fn lshape() -> Self {
        PolygonDomain {
            vertices: vec![
                [0.0, 0.0],
                [1.0, 0.0],
                [1.0, 1.0],
                [-1.0, 1.0],
                [-1.0, -1.0],
                [0.0, -1.0],
            ],
        }
    }

    /// Interior angle at vertex `i`, in (0, 2π).
    pub fn interior_angle(&self, i: usize) -> f64 {
        let n = self.vertices.len();
        let p = self.vertices[i];
        let prev = self.vertices[(i + n - 1) % n];
        let next = self.vertices[(i + 1) % n];
        let a = (next[1] - p[1]).atan2(next[0] - p[0]);
        let b = (prev[1] - p[1]).atan2(prev[0] - p[0]);
        (b - a).rem_euclid(2.0 * PI)
    }
}

/// Conforming triangulation with positively oriented triangles.
#[derive(Debug, Clone, PartialEq)]
pub struct TriMesh {
    pub nodes: Vec<Point2>,
    pub triangles: Vec<[usize; 3]>,
    /// Sorted indices of nodes on the domain boundary.
    pub boundary_nodes: Vec<usize>,
    pub level: u32,
}

fn signed_area(a: Point2, b: Point2, c: Point2) -> f64 {
    0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]))
}

fn length(a: Point2, b: Point2) -> f64 {
    (b[0] - a[0]).hypot(b[1] - a[1])
}

impl TriMesh {
    /// Orients triangles counterclockwise and marks nodes on edges that
    /// belong to exactly one triangle.
    pub fn new(nodes: Vec<Point2>, triangles: Vec<[usize; 3]>, level: u32) -> Self {
        let triangles: Vec<[usize; 3]> = triangles
            .into_iter()
            .map(|[a, b, c]| {
                if signed_area(nodes[a], nodes[b], nodes[c]) < 0.0 {
                    [a, c, b]
                } else {
                    [a, b, c]
                }
            })
            .collect();
        let mut use_count: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for t in &triangles {
            for k in 0..3 {
                let (a, b) = (t[k], t[(k + 1) % 3]);
                *use_count.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
        let mut on_boundary = vec![false; nodes.len()];
        for (&(a, b), &c) in &use_count {
            if c == 1 {
                on_boundary[a] = true;
                on_boundary[b] = true;
            }
        }
        let boundary_nodes = (0..nodes.len()).filter(|&i| on_boundary[i]).collect();
        TriMesh {
            nodes,
            triangles,
            boundary_nodes,
            level,
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn vertices_of(&self, t: usize) -> [Point2; 3] {
        self.triangles[t].map(|i| self.nodes[i])
    }

    pub fn area(&self, t: usize) -> f64 {
        let [a, b, c] = self.vertices_of(t);
        signed_area(a, b, c)
    }

    /// Unique undirected edges, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .triangles
            .iter()
            .flat_map(|t| (0..3).map(move |k| (t[k].min(t[(k + 1) % 3]), t[k].max(t[(k + 1) % 3]))))
            .collect();
        e.sort_unstable();
        e.dedup();
        e
    }

    /// Longest edge length.
    pub fn h(&self) -> f64 {
        self.edges()
            .iter()
            .map(|&(a, b)| length(self.nodes[a], self.nodes[b]))
            .fold(0.0, f64::max)
    }

    /// Smallest interior angle over all triangles, in radians.
    pub fn min_angle(&self) -> f64 {
        let mut worst = PI;
        for t in 0..self.triangles.len() {
            let v = self.vertices_of(t);
            for k in 0..3 {
                let (p, q, r) = (v[k], v[(k + 1) % 3], v[(k + 2) % 3]);
                let a = [q[0] - p[0], q[1] - p[1]];
                let b = [r[0] - p[0], r[1] - p[1]];
                let ang = (a[0] * b[1] - a[1] * b[0]).atan2(a[0] * b[0] + a[1] * b[1]);
                worst = worst.min(ang.abs());
            }
        }
        worst
    }

    /// Node sitting at `p`, if any.
    pub fn find_node(&self, p: Point2) -> Option<usize> {
        self.nodes
            .iter()
            .position(|q| (q[0] - p[0]).abs() < 1e-14 && (q[1] - p[1]).abs() < 1e-14)
    }

    /// Red refinement: every triangle is split into four through its edge
    /// midpoints.
    pub fn refine(&self) -> TriMesh {
        let mut nodes = self.nodes.clone();
        let mut mid: HashMap<(usize, usize), usize> = HashMap::new();
        let mut midpoint = |a: usize, b: usize, nodes: &mut Vec<Point2>| {
            *mid.entry((a.min(b), a.max(b))).or_insert_with(|| {
                let (p, q) = (nodes[a], nodes[b]);
                nodes.push([0.5 * (p[0] + q[0]), 0.5 * (p[1] + q[1])]);
                nodes.len() - 1
            })
        };
        let mut triangles = Vec::with_capacity(4 * self.triangles.len());
        for &[a, b, c] in &self.triangles {
            let ab = midpoint(a, b, &mut nodes);
            let bc = midpoint(b, c, &mut nodes);
            let ca = midpoint(c, a, &mut nodes);
            triangles.extend([[a, ab, ca], [ab, b, bc], [ca, bc, c], [ab, bc, ca]]);
        }
        TriMesh::new(nodes, triangles, self.level + 1)
    }
}

/// Criss-cross triangulation of the L-shape with `n` cells per unit length.
///
/// Each square cell is split into four triangles through its center, giving
/// `6n² + 4n + 1` nodes and `12n²` triangles. The reentrant corner is node 0.
pub fn build_lshape_mesh(n: usize) -> Result<TriMesh> {
    if n < 2 {
        return Err(Error::validation("n", format!("need at least 2 divisions, got {n}")));
    }
    let n_i = n as i64;
    // lattice coordinates in units of 1/(2n); centers sit at odd positions
    let inside_cell = |ci: i64, cj: i64| !(ci >= 0 && cj < 0);
    let scale = 1.0 / (2 * n) as f64;
    let mut index: HashMap<(i64, i64), usize> = HashMap::new();
    let mut nodes = Vec::new();
    let mut add = |i: i64, j: i64, nodes: &mut Vec<Point2>| {
        *index.entry((i, j)).or_insert_with(|| {
            nodes.push([i as f64 * scale, j as f64 * scale]);
            nodes.len() - 1
        })
    };
    add(0, 0, &mut nodes);
    let mut triangles = Vec::with_capacity(12 * n * n);
    for cj in -n_i..n_i {
        for ci in -n_i..n_i {
            if !inside_cell(ci, cj) {
                continue;
            }
            let (x0, y0) = (2 * ci, 2 * cj);
            let c = add(x0 + 1, y0 + 1, &mut nodes);
            let p00 = add(x0, y0, &mut nodes);
            let p10 = add(x0 + 2, y0, &mut nodes);
            let p11 = add(x0 + 2, y0 + 2, &mut nodes);
            let p01 = add(x0, y0 + 2, &mut nodes);
            triangles.extend([[p00, p10, c], [p10, p11, c], [p11, p01, c], [p01, p00, c]]);
        }
    }
    Ok(TriMesh::new(nodes, triangles, 0))
}
