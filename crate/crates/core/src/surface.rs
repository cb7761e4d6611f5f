//! Topology of the closure surface.
//!
//! Each boundary pair is glued orientation-reversingly with respect to the
//! counterclockwise walk: the start of edge `i` meets the end of edge `j` and
//! vice versa. The closure is then a closed orientable surface whose genus
//! follows from counting the boundary vertex classes `v` that survive the
//! gluing: `g = (1 − v + m + n) / 2`.

use serde::Serialize;

use crate::dsu::Dsu;
use crate::error::Result;
use crate::mosaic::Mosaic;
use crate::tiles::Side;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SurfaceReport {
    #[serde(rename = "v")]
    pub v_d: usize,
    pub genus: usize,
    pub virtual_crossings: usize,
}

/// Number of distinct vertices on the boundary of the closure.
pub fn boundary_vertices(mosaic: &Mosaic) -> Result<usize> {
    mosaic.ensure_valid()?;
    Ok(vertex_classes(mosaic))
}

pub(crate) fn vertex_classes(mosaic: &Mosaic) -> usize {
    let len = mosaic.boundary_len();
    let mut dsu = Dsu::new(len);
    for (i, j) in mosaic.pairs() {
        dsu.union(i, (j + 1) % len);
        dsu.union((i + 1) % len, j);
    }
    dsu.classes()
}

pub fn genus(mosaic: &Mosaic) -> Result<SurfaceReport> {
    mosaic.ensure_valid()?;
    Ok(report(mosaic))
}

/// The surface report of a mosaic already known to be valid.
pub(crate) fn report(mosaic: &Mosaic) -> SurfaceReport {
    let v_d = vertex_classes(mosaic);
    SurfaceReport {
        v_d,
        genus: genus_from_vertices(mosaic.rows(), mosaic.cols(), v_d),
        virtual_crossings: interlocking(mosaic),
    }
}

fn genus_from_vertices(m: usize, n: usize, v_d: usize) -> usize {
    let twice = 1 + m + n;
    assert!(
        v_d <= twice && (twice - v_d).is_multiple_of(2),
        "orientation-reversing gluing produced v = {v_d} on a {m}x{n} grid"
    );
    (twice - v_d) / 2
}

/// Genus computed from the whole cell structure of the closure.
///
/// Vertices are the `(m + 1)(n + 1)` lattice points, edges the unit grid
/// segments and faces the `m·n` cells, all taken modulo the boundary gluing.
/// Endpoints of each boundary segment are located geometrically rather than
/// through the corner numbering used by [`boundary_vertices`].
pub fn genus_oracle(mosaic: &Mosaic) -> Result<usize> {
    mosaic.ensure_valid()?;
    let (m, n) = (mosaic.rows(), mosaic.cols());
    let point = |r: usize, c: usize| r * (n + 1) + c;
    let mut dsu = Dsu::new((m + 1) * (n + 1));

    // Endpoints of a boundary segment in the direction of the counterclockwise walk.
    let ends = |k: usize| {
        let e = mosaic.edge(k);
        let (r, c) = (e.cell.row, e.cell.col);
        match e.side {
            Side::West => (point(r, 0), point(r + 1, 0)),
            Side::South => (point(m, c), point(m, c + 1)),
            Side::East => (point(r + 1, n), point(r, n)),
            Side::North => (point(0, c + 1), point(0, c)),
        }
    };
    for (i, j) in mosaic.pairs() {
        let (si, ei) = ends(i);
        let (sj, ej) = ends(j);
        dsu.union(si, ej);
        dsu.union(ei, sj);
    }

    let vertices = dsu.classes() as i64;
    let segments = ((m + 1) * n + m * (n + 1)) as i64;
    let edges = segments - (m + n) as i64;
    let faces = (m * n) as i64;
    let chi = vertices - edges + faces;
    assert!(chi <= 2 && chi % 2 == 0, "closure has Euler characteristic {chi}");
    Ok(((2 - chi) / 2) as usize)
}

/// Number of interleaving pairs among the arc-carrying boundary pairs.
pub fn count_interlocking(mosaic: &Mosaic) -> Result<usize> {
    mosaic.ensure_valid()?;
    Ok(interlocking(mosaic))
}

pub(crate) fn interlocking(mosaic: &Mosaic) -> usize {
    interlocked_pairs(mosaic).len()
}

/// The interleaving pairs themselves, as `((a, b), (c, d))` with `a < c`.
pub fn interlocked_pairs(mosaic: &Mosaic) -> Vec<((usize, usize), (usize, usize))> {
    let arcs: Vec<(usize, usize)> = mosaic
        .pairs()
        .into_iter()
        .filter(|&(a, _)| mosaic.edge_carries_arc(a))
        .collect();
    let mut out = Vec::new();
    for (x, &(a, b)) in arcs.iter().enumerate() {
        for &(c, d) in &arcs[x + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                out.push(((a, b), (c, d)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::tiles::Tile;

    fn blank(pairs: &[(usize, usize)]) -> Mosaic {
        Mosaic::new(1, 1, vec![Tile::T0], pairs).unwrap()
    }

    #[test]
    fn torus_and_sphere() {
        // opposite sides: left-right and bottom-top
        let torus = blank(&[(0, 2), (1, 3)]);
        assert_eq!(boundary_vertices(&torus), Ok(1));
        assert_eq!(genus(&torus).unwrap().genus, 1);
        assert_eq!(genus_oracle(&torus), Ok(1));

        let sphere = blank(&[(0, 1), (2, 3)]);
        assert_eq!(genus(&sphere).unwrap().genus, 0);
        assert_eq!(genus_oracle(&sphere), Ok(0));
    }

    #[test]
    fn seven_one_is_planar() {
        let m = Mosaic::parse(
            "1 7\nT9 T10 T9 T10 T9 T10 T9\ntop: e h h g g f f\nright: e\nbottom: b b c c d d a\nleft: a\n",
        )
        .unwrap();
        let r = genus(&m).unwrap();
        assert_eq!(r, SurfaceReport { v_d: 9, genus: 0, virtual_crossings: 0 });
        assert_eq!(genus_oracle(&m), Ok(0));
    }

    #[test]
    fn invalid_is_rejected() {
        let m = Mosaic::new(1, 1, vec![Tile::T5], &[(2, 3), (0, 1)]).unwrap();
        assert!(matches!(genus(&m), Err(Error::InvalidMosaic(_))));
        assert!(matches!(genus_oracle(&m), Err(Error::InvalidMosaic(_))));
    }

    #[test]
    fn report_json_keys() {
        let r = SurfaceReport { v_d: 3, genus: 1, virtual_crossings: 1 };
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"v":3,"genus":1,"virtual_crossings":1}"#
        );
    }
}
