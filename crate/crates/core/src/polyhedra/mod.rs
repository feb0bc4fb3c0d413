//! Combinatorial polyhedra as planar maps.
//!
//! A [`PlanarMap`] is given by a vertex count and a list of faces, each a
//! cyclic sequence of vertex ids. Edges are derived from consecutive pairs
//! on face boundaries. Generated maps list every face counterclockwise as
//! seen from outside the polyhedron.

mod build;
mod coloring;
mod format;
mod iso;
mod validate;

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::FRAC_PI_2;

pub use build::{build_lobell, build_tower};
pub use coloring::{
    four_color, verify_coloring, ColoringOutcome, FaceColoring, DEFAULT_NODE_BUDGET,
};
pub use format::{parse_poly, write_poly};
pub use iso::{canonical_code, find_isomorphism};
pub use validate::{validate, Check, CheckKind, ValidationReport};

use crate::error::{domain, Result};

/// An undirected edge `(a, b)` with `a < b`.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarMap {
    vertex_count: usize,
    faces: Vec<Vec<usize>>,
    /// Edge → indices of the faces whose boundary contains it, one entry per
    /// occurrence.
    edges: BTreeMap<Edge, Vec<usize>>,
}

fn edge(a: usize, b: usize) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Consecutive pairs of a cyclic boundary, closing the cycle.
pub(crate) fn boundary_pairs(face: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    face.iter()
        .zip(face.iter().cycle().skip(1))
        .map(|(&a, &b)| (a, b))
}

impl PlanarMap {
    /// Builds a map from its faces. Only structural well-formedness is
    /// checked here (ids in range, faces of length >= 3, no zero-length
    /// edges); the polyhedral invariants are the business of [`validate`].
    pub fn new(vertex_count: usize, faces: Vec<Vec<usize>>) -> Result<Self> {
        let mut edges: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
        for (fi, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(domain(format!("face {fi} has fewer than 3 vertices")));
            }
            if let Some(&v) = face.iter().find(|&&v| v >= vertex_count) {
                return Err(domain(format!(
                    "face {fi} references vertex {v}, but only {vertex_count} vertices exist"
                )));
            }
            for (a, b) in boundary_pairs(face) {
                if a == b {
                    return Err(domain(format!(
                        "face {fi} repeats vertex {a} consecutively"
                    )));
                }
                edges.entry(edge(a, b)).or_default().push(fi);
            }
        }
        Ok(PlanarMap {
            vertex_count,
            faces,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &[usize] {
        &self.faces[i]
    }

    /// Each edge with the faces that contain it.
    pub fn edges(&self) -> impl Iterator<Item = (Edge, &[usize])> + '_ {
        self.edges.iter().map(|(&e, f)| (e, f.as_slice()))
    }

    /// Distinct neighbours of every vertex.
    pub fn neighbours(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.vertex_count];
        for &(a, b) in self.edges.keys() {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj
    }

    /// Number of faces of each degree.
    pub fn face_degree_counts(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for f in &self.faces {
            *counts.entry(f.len()).or_insert(0) += 1;
        }
        counts
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Faces sharing at least one edge with face `i` (excluding `i`).
    pub fn face_adjacency(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.faces.len()];
        for fs in self.edges.values() {
            for &f in fs {
                for &g in fs {
                    if f != g {
                        adj[f].insert(g);
                    }
                }
            }
        }
        adj
    }

    /// True when the map is the dodecahedron: twelve pentagonal faces.
    pub fn is_dodecahedron(&self) -> bool {
        self.face_count() == 12 && self.faces.iter().all(|f| f.len() == 5)
    }

    /// The same map with every face boundary reversed.
    pub fn mirrored(&self) -> PlanarMap {
        let faces = self
            .faces
            .iter()
            .map(|f| f.iter().rev().copied().collect())
            .collect();
        PlanarMap::new(self.vertex_count, faces).expect("mirror of a well-formed map")
    }
}

/// Sum of the areas `(π/2)(deg f - 4)` of the faces realised as
/// right-angled hyperbolic polygons. Equals `π(F - 6)` on any trivalent
/// sphere.
pub fn total_face_area(p: &PlanarMap) -> f64 {
    p.faces()
        .iter()
        .map(|f| FRAC_PI_2 * (f.len() as f64 - 4.0))
        .sum()
}

/// Selects the Löbell polyhedron `R(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LobellDescriptor {
    n: u64,
}

impl LobellDescriptor {
    pub fn new(n: u64) -> Result<Self> {
        if n < 5 {
            return Err(domain(format!("R(n) requires n >= 5, got {n}")));
        }
        Ok(LobellDescriptor { n })
    }

    pub fn n(self) -> u64 {
        self.n
    }
}

/// Selects the tower `R_k(n)` of `k` stacked copies of `R(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TowerDescriptor {
    k: u64,
    n: u64,
}

impl TowerDescriptor {
    pub fn new(k: u64, n: u64) -> Result<Self> {
        if k < 1 {
            return Err(domain(format!("R_k(n) requires k >= 1, got {k}")));
        }
        if n < 5 {
            return Err(domain(format!("R_k(n) requires n >= 5, got {n}")));
        }
        Ok(TowerDescriptor { k, n })
    }

    pub fn k(self) -> u64 {
        self.k
    }

    pub fn n(self) -> u64 {
        self.n
    }

    /// `(2k + 2) n`
    pub fn vertex_count(self) -> u64 {
        (2 * self.k + 2) * self.n
    }

    /// `(k + 1) n + 2`
    pub fn face_count(self) -> u64 {
        (self.k + 1) * self.n + 2
    }

    pub fn edge_count(self) -> u64 {
        3 * self.vertex_count() / 2
    }
}

impl From<LobellDescriptor> for TowerDescriptor {
    fn from(d: LobellDescriptor) -> Self {
        TowerDescriptor { k: 1, n: d.n }
    }
}
