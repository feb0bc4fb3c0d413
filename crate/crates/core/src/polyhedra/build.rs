use super::{LobellDescriptor, PlanarMap, TowerDescriptor};

/// The Löbell polyhedron `R(n)`: two `n`-gonal bases and a belt of `2n`
/// pentagons.
///
/// Vertices come in `n` columns of four: `b_i` on the bottom base, `a_i`
/// above it, `c_i` on the zigzag between the two pentagon rings and `t_i`
/// on the top base, with ids `4i, 4i+1, 4i+2, 4i+3`.
pub fn build_lobell(d: LobellDescriptor) -> PlanarMap {
    let n = d.n() as usize;
    let b = |i: usize| 4 * (i % n);
    let a = |i: usize| 4 * (i % n) + 1;
    let c = |i: usize| 4 * (i % n) + 2;
    let t = |i: usize| 4 * (i % n) + 3;

    let mut faces = Vec::with_capacity(2 * n + 2);
    faces.push((0..n).rev().map(b).collect());
    faces.push((0..n).map(t).collect());
    for i in 0..n {
        faces.push(vec![b(i), b(i + 1), a(i + 1), c(i), a(i)]);
    }
    for i in 0..n {
        faces.push(vec![c(i), a(i + 1), c(i + 1), t(i + 1), t(i)]);
    }
    PlanarMap::new(4 * n, faces).expect("Löbell construction is well-formed")
}

/// The tower `R_k(n)`, built as a layered drum.
///
/// Vertices sit in `2k + 2` rows of `n`, id `row * n + i`. Rows `0` and
/// `2k + 1` bound the bases. Rows `2j` and `2j + 1` are joined by vertical
/// edges at equal index; rows `2j + 1` and `2j + 2` by a zigzag joining
/// `(2j+1, i)` to `(2j+2, i-1)` and `(2j+2, i)`. Band `j` (between rows `2j`
/// and `2j + 1`) carries `n` faces: pentagons in the two outer bands,
/// hexagons in the `k - 1` inner ones.
pub fn build_tower(d: TowerDescriptor) -> PlanarMap {
    let n = d.n() as usize;
    let k = d.k() as usize;
    let top = 2 * k + 1;
    let v = |row: usize, i: usize| row * n + i % n;

    let mut faces = Vec::with_capacity((k + 1) * n + 2);
    faces.push((0..n).rev().map(|i| v(0, i)).collect());
    faces.push((0..n).map(|i| v(top, i)).collect());
    for j in 0..=k {
        let (lo, hi) = (2 * j, 2 * j + 1);
        for i in 0..n {
            let mut face = Vec::with_capacity(6);
            face.push(v(lo, i));
            if j > 0 {
                face.push(v(lo - 1, i + 1));
            }
            face.push(v(lo, i + 1));
            face.push(v(hi, i + 1));
            if j < k {
                face.push(v(hi + 1, i));
            }
            face.push(v(hi, i));
            faces.push(face);
        }
    }
    PlanarMap::new((top + 1) * n, faces).expect("tower construction is well-formed")
}
