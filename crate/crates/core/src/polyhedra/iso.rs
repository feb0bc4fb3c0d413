//! Map isomorphism by canonical dart traversal.
//!
//! A dart is a directed edge on a face boundary, stored as
//! `(face, position)`. The face permutation sends a dart to the next one on
//! its face; the reversal sends it to the opposite dart on the neighbouring
//! face. A breadth-first traversal from a start dart, numbering darts as
//! they are discovered, yields a code that determines the map up to
//! orientation-preserving isomorphism.

use std::collections::{HashMap, VecDeque};

use super::PlanarMap;

type Dart = (usize, usize);

struct Darts {
    darts: Vec<Dart>,
    next: Vec<usize>,
    reverse: Vec<usize>,
    tail: Vec<usize>,
}

/// Dart structure, or `None` if the faces do not form a closed oriented
/// surface (some directed edge repeated or lacking its reverse).
fn darts(p: &PlanarMap) -> Option<Darts> {
    let mut darts = Vec::new();
    let mut by_edge: HashMap<(usize, usize), usize> = HashMap::new();
    let mut tail = Vec::new();
    for (fi, face) in p.faces().iter().enumerate() {
        for pos in 0..face.len() {
            let (a, b) = (face[pos], face[(pos + 1) % face.len()]);
            if by_edge.insert((a, b), darts.len()).is_some() {
                return None;
            }
            darts.push((fi, pos));
            tail.push(a);
        }
    }
    let index: HashMap<Dart, usize> = darts.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let next = darts
        .iter()
        .map(|&(f, pos)| index[&(f, (pos + 1) % p.face(f).len())])
        .collect();
    let mut reverse = Vec::with_capacity(darts.len());
    for &(f, pos) in &darts {
        let face = p.face(f);
        let (a, b) = (face[pos], face[(pos + 1) % face.len()]);
        reverse.push(*by_edge.get(&(b, a))?);
    }
    Some(Darts {
        darts,
        next,
        reverse,
        tail,
    })
}

/// Traversal code from `start`, plus the darts in discovery order.
/// `None` if the map is disconnected.
fn traverse(d: &Darts, start: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = d.darts.len();
    let mut label = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    label[start] = 0;
    order.push(start);
    queue.push_back(start);
    while let Some(x) = queue.pop_front() {
        for y in [d.next[x], d.reverse[x]] {
            if label[y] == usize::MAX {
                label[y] = order.len();
                order.push(y);
                queue.push_back(y);
            }
        }
    }
    if order.len() != n {
        return None;
    }
    let code = order
        .iter()
        .flat_map(|&x| [label[d.next[x]], label[d.reverse[x]]])
        .collect();
    Some((code, order))
}

/// Canonical form: the least traversal code over all start darts of the
/// map and of its mirror image. Equal codes mean isomorphic maps.
pub fn canonical_code(p: &PlanarMap) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for m in [p.clone(), p.mirrored()] {
        let d = darts(&m)?;
        for s in 0..d.darts.len() {
            let (code, _) = traverse(&d, s)?;
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
    }
    best
}

/// A vertex bijection `a → b` carrying faces of `a` onto faces of `b`,
/// allowing orientation reversal. The returned map is re-checked against
/// both edge sets before being returned.
pub fn find_isomorphism(a: &PlanarMap, b: &PlanarMap) -> Option<Vec<usize>> {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.face_count() != b.face_count()
    {
        return None;
    }
    let da = darts(a)?;
    if da.darts.is_empty() {
        return None;
    }
    let (code_a, order_a) = traverse(&da, 0)?;
    for m in [b.clone(), b.mirrored()] {
        let db = darts(&m)?;
        for s in 0..db.darts.len() {
            let (code_b, order_b) = traverse(&db, s)?;
            if code_b != code_a {
                continue;
            }
            let mut map = vec![usize::MAX; a.vertex_count()];
            for (&x, &y) in order_a.iter().zip(&order_b) {
                map[da.tail[x]] = db.tail[y];
            }
            if is_isomorphism(a, b, &map) {
                return Some(map);
            }
        }
    }
    None
}

fn is_isomorphism(a: &PlanarMap, b: &PlanarMap, map: &[usize]) -> bool {
    let mut hit = vec![false; b.vertex_count()];
    for &v in map {
        if v >= hit.len() || hit[v] {
            return false;
        }
        hit[v] = true;
    }
    let b_edges: std::collections::BTreeSet<_> = b.edges().map(|(e, _)| e).collect();
    a.edges().all(|((x, y), _)| {
        let (u, v) = (map[x], map[y]);
        b_edges.contains(&(u.min(v), u.max(v)))
    })
}
