//! Proper four-colorings of polyhedron faces: adjacent faces (sharing an
//! edge) receive different colors.

use std::collections::HashMap;

use super::{boundary_pairs, Edge, PlanarMap};

/// Default search budget, in search-tree nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

const COLORS: u8 = 4;

/// Color (1..=4) of every face, indexed by face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceColoring {
    colors: Vec<u8>,
}

impl FaceColoring {
    pub fn new(colors: Vec<u8>) -> Self {
        FaceColoring { colors }
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, face: usize) -> u8 {
        self.colors[face]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringOutcome {
    Found {
        coloring: FaceColoring,
        nodes: u64,
    },
    /// The search was exhaustive and no coloring exists.
    NoColoring {
        nodes: u64,
    },
    /// The node budget ran out before the search finished.
    Inconclusive {
        nodes: u64,
    },
}

/// A monochromatic edge or a malformed assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringDefect {
    WrongLength {
        expected: usize,
        got: usize,
    },
    ColorOutOfRange {
        face: usize,
        color: u8,
    },
    Monochromatic {
        edge: Edge,
        faces: (usize, usize),
        color: u8,
    },
}

/// Re-checks a coloring by scanning every face boundary edge from scratch.
pub fn verify_coloring(p: &PlanarMap, coloring: &FaceColoring) -> Result<(), ColoringDefect> {
    let colors = coloring.colors();
    if colors.len() != p.face_count() {
        return Err(ColoringDefect::WrongLength {
            expected: p.face_count(),
            got: colors.len(),
        });
    }
    if let Some((face, &color)) = colors
        .iter()
        .enumerate()
        .find(|(_, &c)| !(1..=COLORS).contains(&c))
    {
        return Err(ColoringDefect::ColorOutOfRange { face, color });
    }
    let mut seen: HashMap<Edge, usize> = HashMap::new();
    for (fi, face) in p.faces().iter().enumerate() {
        for (a, b) in boundary_pairs(face) {
            let e = if a < b { (a, b) } else { (b, a) };
            match seen.get(&e) {
                Some(&other) if other != fi && colors[other] == colors[fi] => {
                    return Err(ColoringDefect::Monochromatic {
                        edge: e,
                        faces: (other, fi),
                        color: colors[fi],
                    });
                }
                Some(_) => {}
                None => {
                    seen.insert(e, fi);
                }
            }
        }
    }
    Ok(())
}

/// Backtracking search with forward checking. The next face is the
/// uncolored one with the fewest remaining colors, ties broken by larger
/// degree and then lower index.
///
/// Colors are tried in increasing order and a face may only open one new
/// color beyond those already used, which removes color permutations from
/// the search without losing completeness.
pub fn four_color(p: &PlanarMap, budget: u64) -> ColoringOutcome {
    let adjacency: Vec<Vec<usize>> = p
        .face_adjacency()
        .into_iter()
        .map(|s| s.into_iter().collect())
        .collect();
    let degrees: Vec<usize> = p.faces().iter().map(Vec::len).collect();

    let mut search = Search {
        adjacency: &adjacency,
        degrees: &degrees,
        domains: vec![(1u8 << COLORS) - 1; p.face_count()],
        colors: vec![0; p.face_count()],
        trail: Vec::new(),
        nodes: 0,
        budget,
    };
    match search.run() {
        Step::Done => {
            let coloring = FaceColoring::new(search.colors);
            debug_assert!(verify_coloring(p, &coloring).is_ok());
            ColoringOutcome::Found {
                coloring,
                nodes: search.nodes,
            }
        }
        Step::Dead => ColoringOutcome::NoColoring {
            nodes: search.nodes,
        },
        Step::OutOfBudget => ColoringOutcome::Inconclusive {
            nodes: search.nodes,
        },
    }
}

struct Frame {
    face: usize,
    next_color: u8,
    mark: usize,
    max_used: u8,
}

enum Step {
    Done,
    Dead,
    OutOfBudget,
}

struct Search<'a> {
    adjacency: &'a [Vec<usize>],
    degrees: &'a [usize],
    /// Bitmask of colors still allowed per face; bit `c - 1` for color `c`.
    domains: Vec<u8>,
    /// Assigned color, 0 if none.
    colors: Vec<u8>,
    /// Undo log of (face, previous domain).
    trail: Vec<(usize, u8)>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn select(&self) -> Option<usize> {
        (0..self.colors.len())
            .filter(|&f| self.colors[f] == 0)
            .min_by_key(|&f| {
                (
                    self.domains[f].count_ones(),
                    std::cmp::Reverse(self.degrees[f]),
                    f,
                )
            })
    }

    /// Depth-first search with an explicit stack of choice points.
    fn run(&mut self) -> Step {
        let mut frames: Vec<Frame> = Vec::new();
        let mut max_used = 0;
        loop {
            let Some(face) = self.select() else {
                return Step::Done;
            };
            frames.push(Frame {
                face,
                next_color: 1,
                mark: self.trail.len(),
                max_used,
            });
            // Advance the innermost choice point until one color survives
            // propagation, popping exhausted frames.
            loop {
                let Some(top) = frames.last_mut() else {
                    return Step::Dead;
                };
                self.undo(top.mark);
                self.colors[top.face] = 0;
                let limit = (top.max_used + 1).min(COLORS);
                let domain = self.domains[top.face];
                let Some(color) = (top.next_color..=limit).find(|c| domain & (1 << (c - 1)) != 0)
                else {
                    frames.pop();
                    continue;
                };
                if self.nodes >= self.budget {
                    return Step::OutOfBudget;
                }
                self.nodes += 1;
                top.next_color = color + 1;
                self.colors[top.face] = color;
                let (face, frame_max) = (top.face, top.max_used);
                if self.propagate(face, color) {
                    max_used = frame_max.max(color);
                    break;
                }
            }
        }
    }

    /// Removes `color` from every uncolored neighbour; false on a wipe-out.
    fn propagate(&mut self, face: usize, color: u8) -> bool {
        let bit = 1 << (color - 1);
        for &g in &self.adjacency[face] {
            if self.colors[g] != 0 || self.domains[g] & bit == 0 {
                continue;
            }
            self.trail.push((g, self.domains[g]));
            self.domains[g] &= !bit;
            if self.domains[g] == 0 {
                return false;
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (g, d) = self.trail.pop().expect("trail above mark");
            self.domains[g] = d;
        }
    }
}
