use std::fmt;

use super::{Edge, PlanarMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    /// Every edge lies on exactly two face boundaries.
    TwoFacesPerEdge,
    /// Every vertex has exactly three neighbours.
    Trivalent,
    /// `V - E + F = 2`.
    Euler,
    /// `V = 2F - 4`.
    VertexFaceRelation,
    /// `F >= 12`.
    MinimumFaces,
}

impl CheckKind {
    pub const ALL: [CheckKind; 5] = [
        CheckKind::TwoFacesPerEdge,
        CheckKind::Trivalent,
        CheckKind::Euler,
        CheckKind::VertexFaceRelation,
        CheckKind::MinimumFaces,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::TwoFacesPerEdge => "two-faces-per-edge",
            CheckKind::Trivalent => "trivalence",
            CheckKind::Euler => "euler",
            CheckKind::VertexFaceRelation => "V=2F-4",
            CheckKind::MinimumFaces => "F>=12",
        }
    }
}

/// An element responsible for a failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Offender {
    Vertex { id: usize, degree: usize },
    Edge { edge: Edge, faces: usize },
}

impl fmt::Display for Offender {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Offender::Vertex { id, degree } => write!(f, "vertex {id} (degree {degree})"),
            Offender::Edge { edge, faces } => {
                write!(f, "edge {}-{} (in {faces} faces)", edge.0, edge.1)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub kind: CheckKind,
    pub passed: bool,
    pub detail: String,
    pub offenders: Vec<Offender>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, kind: CheckKind) -> &Check {
        self.checks
            .iter()
            .find(|c| c.kind == kind)
            .expect("every check kind is reported")
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Runs every polyhedral invariant check. Failures are reported, never
/// raised.
pub fn validate(p: &PlanarMap) -> ValidationReport {
    let (v, e, f) = (p.vertex_count(), p.edge_count(), p.face_count());
    let (vi, ei, fi) = (v as i64, e as i64, f as i64);

    let edge_offenders: Vec<Offender> = p
        .edges()
        .filter(|(_, fs)| fs.len() != 2)
        .map(|(edge, fs)| Offender::Edge {
            edge,
            faces: fs.len(),
        })
        .collect();
    let vertex_offenders: Vec<Offender> = p
        .neighbours()
        .iter()
        .enumerate()
        .filter(|(_, nb)| nb.len() != 3)
        .map(|(id, nb)| Offender::Vertex {
            id,
            degree: nb.len(),
        })
        .collect();

    let checks = vec![
        offender_check(CheckKind::TwoFacesPerEdge, edge_offenders, "edges"),
        offender_check(CheckKind::Trivalent, vertex_offenders, "vertices"),
        equation_check(
            CheckKind::Euler,
            vi - ei + fi == 2,
            format!("V - E + F = {}", vi - ei + fi),
        ),
        equation_check(
            CheckKind::VertexFaceRelation,
            vi == 2 * fi - 4,
            format!("V = {v}, 2F - 4 = {}", 2 * fi - 4),
        ),
        equation_check(CheckKind::MinimumFaces, f >= 12, format!("F = {f}")),
    ];
    ValidationReport {
        vertices: v,
        edges: e,
        faces: f,
        checks,
    }
}

fn offender_check(kind: CheckKind, offenders: Vec<Offender>, what: &str) -> Check {
    let detail = if offenders.is_empty() {
        format!("all {what} ok")
    } else {
        let shown: Vec<String> = offenders.iter().take(8).map(Offender::to_string).collect();
        let more = offenders.len().saturating_sub(shown.len());
        let mut s = format!("{} bad {what}: {}", offenders.len(), shown.join(", "));
        if more > 0 {
            s.push_str(&format!(", ... ({more} more)"));
        }
        s
    };
    Check {
        kind,
        passed: offenders.is_empty(),
        detail,
        offenders,
    }
}

fn equation_check(kind: CheckKind, passed: bool, detail: String) -> Check {
    Check {
        kind,
        passed,
        detail,
        offenders: Vec::new(),
    }
}
