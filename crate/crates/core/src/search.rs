//! Exhaustive enumeration of small mosaics, the census of the knots they
//! carry, and bounded searches for the tile and row numbers of a code.
//!
//! Tile grids are generated by backtracking in row-major order, abandoning a
//! partial grid as soon as two neighbouring tiles disagree on a shared edge.
//! For each grid the arc-carrying boundary edges are matched among
//! themselves. When only knots are wanted the matching is built while
//! walking the strand, so a loop that closes before using every boundary arc
//! is cut off at once; a target code prunes further by checking the crossing
//! passes against every rotation of the code. Blank boundary edges are paired
//! with their neighbours in boundary order, or in every possible way when
//! blank pairings are enumerated.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gauss::{GaussCode, Pass, Symbol};
use crate::mosaic::Mosaic;
use crate::surface;
use crate::tiles::{Side, Tile};
use crate::trace::{self, crossing_sign};

/// Largest number of cells searched unless the caller raises the guard.
pub const DEFAULT_GUARD: usize = 12;

const UNPAIRED: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Keep only mosaics whose surface has this genus.
    pub genus: Option<usize>,
    /// Keep only single-component diagrams.
    pub require_knot: bool,
    /// Keep only grids whose crossing count lies in this range.
    pub crossings: Option<RangeInclusive<usize>>,
    /// Try every pairing of blank boundary edges instead of the adjacent one.
    pub blank_pairings: bool,
    pub guard: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { genus: None, require_knot: false, crossings: None, blank_pairings: false, guard: DEFAULT_GUARD }
    }
}

impl SearchOptions {
    pub fn knots() -> Self {
        SearchOptions { require_knot: true, ..SearchOptions::default() }
    }
}

fn serialize_mosaic<S: Serializer>(m: &Mosaic, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&m.serialize())
}

fn serialize_code<S: Serializer>(c: &GaussCode, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_string())
}

/// One knot found by a census, with the first mosaic found carrying it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    #[serde(serialize_with = "serialize_code")]
    pub code: GaussCode,
    #[serde(serialize_with = "serialize_mosaic")]
    pub mosaic: Mosaic,
    pub genus: usize,
    pub crossings: usize,
    pub tiles: usize,
}

/// Runs `f` on a thread pool capped by `VMOSAIC_THREADS`, if set.
fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var("VMOSAIC_THREADS").ok().and_then(|v| v.parse::<usize>().ok());
    match threads {
        Some(n) if n > 0 => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        _ => f(),
    }
}

/// All edge-consistent tile grids with a crossing count in `crossings`.
fn grids(rows: usize, cols: usize, crossings: &RangeInclusive<usize>) -> Vec<Vec<Tile>> {
    fn go(
        rows: usize,
        cols: usize,
        crossings: &RangeInclusive<usize>,
        grid: &mut Vec<Tile>,
        count: usize,
        out: &mut Vec<Vec<Tile>>,
    ) {
        let k = grid.len();
        if k == rows * cols {
            if crossings.contains(&count) {
                out.push(grid.clone());
            }
            return;
        }
        let left_cells = rows * cols - k;
        if count + left_cells < *crossings.start() {
            return;
        }
        let (r, c) = (k / cols, k % cols);
        for t in Tile::ALL {
            if c > 0 && grid[k - 1].has_connection(Side::East) != t.has_connection(Side::West) {
                continue;
            }
            if r > 0 && grid[k - cols].has_connection(Side::South) != t.has_connection(Side::North) {
                continue;
            }
            let count = count + usize::from(t.is_crossing());
            if count > *crossings.end() {
                continue;
            }
            grid.push(t);
            go(rows, cols, crossings, grid, count, out);
            grid.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, crossings, &mut Vec::with_capacity(rows * cols), 0, &mut out);
    out
}

/// Every perfect matching of `edges`, pairing the first remaining edge first.
fn matchings(edges: &[usize]) -> Vec<Vec<(usize, usize)>> {
    fn go(rest: &mut Vec<usize>, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        let a = rest.remove(0);
        for i in 0..rest.len() {
            let b = rest.remove(i);
            acc.push((a, b));
            go(rest, acc, out);
            acc.pop();
            rest.insert(i, b);
        }
        rest.insert(0, a);
    }
    let mut out = Vec::new();
    go(&mut edges.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// A crossing pass along a boundary-to-boundary strand segment.
#[derive(Debug, Clone, Copy)]
struct SegmentPass {
    cell: usize,
    heading: Side,
    pass: Pass,
}

/// Segment entered from a boundary edge: where it leaves and what it crosses.
#[derive(Debug, Clone)]
struct Segment {
    exit: usize,
    passes: Vec<SegmentPass>,
}

/// Everything fixed for one tile grid.
struct GridContext<'a> {
    shell: Mosaic,
    arc_edges: Vec<usize>,
    segments: Vec<Option<Segment>>,
    /// Rotations (and reversals) of the target code, renumbered.
    targets: Option<&'a [Vec<Symbol>]>,
}

impl<'a> GridContext<'a> {
    fn new(rows: usize, cols: usize, tiles: Vec<Tile>, targets: Option<&'a [Vec<Symbol>]>) -> Self {
        let shell = Mosaic::from_partner(rows, cols, tiles, vec![UNPAIRED; 2 * (rows + cols)]);
        let arc_edges: Vec<usize> = (0..shell.boundary_len()).filter(|&k| shell.edge_carries_arc(k)).collect();
        let mut segments = vec![None; shell.boundary_len()];
        for &k in &arc_edges {
            segments[k] = Some(segment_from(&shell, k));
        }
        GridContext { shell, arc_edges, segments, targets }
    }
}

fn segment_from(m: &Mosaic, k: usize) -> Segment {
    let e = m.edge(k);
    let (mut cell, mut entry) = (e.cell, e.side);
    let mut passes = Vec::new();
    loop {
        let tile = m.tile(cell);
        let exit = tile.transit(entry).expect("arc edge enters a connection point");
        if tile.is_crossing() {
            let over = tile.is_over(exit.axis()).expect("crossing tile");
            passes.push(SegmentPass {
                cell: cell.row * m.cols() + cell.col,
                heading: exit,
                pass: if over { Pass::Over } else { Pass::Under },
            });
        }
        match m.neighbor(cell, exit) {
            Some(next) => (cell, entry) = (next, exit.opposite()),
            None => {
                let exit = m.edge_at(cell, exit).expect("boundary side");
                return Segment { exit, passes };
            }
        }
    }
}

/// Partial strand walk while the arc matching is being built.
#[derive(Clone)]
struct Walk {
    partner: Vec<usize>,
    id_of: Vec<usize>,
    heads: Vec<[Option<Side>; 2]>,
    length: usize,
    alive: Vec<usize>,
}

impl Walk {
    /// Records the passes of a segment; false when no target survives.
    fn absorb(&mut self, passes: &[SegmentPass], targets: Option<&[Vec<Symbol>]>) -> bool {
        for p in passes {
            let first = self.id_of[p.cell] == 0;
            if first {
                self.heads.push([None, None]);
                self.id_of[p.cell] = self.heads.len();
            }
            let id = self.id_of[p.cell];
            self.heads[id - 1][usize::from(p.pass == Pass::Under)] = Some(p.heading);
            let sign = match self.heads[id - 1] {
                [Some(o), Some(u)] => Some(crossing_sign(o, u)),
                _ => None,
            };
            let k = self.length;
            self.length += 1;
            if let Some(targets) = targets {
                self.alive.retain(|&t| {
                    let s = targets[t].get(k);
                    s.is_some_and(|s| s.pass == p.pass && s.id == id && sign.is_none_or(|x| x == s.sign))
                });
                if self.alive.is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Arc matchings of a grid that close the boundary arcs into one loop.
fn knot_matchings(ctx: &GridContext<'_>) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = ctx.shell.boundary_len();
    let Some(&start) = ctx.arc_edges.first() else {
        out.push(vec![UNPAIRED; n]);
        return out;
    };
    let alive = ctx.targets.map(|t| (0..t.len()).collect()).unwrap_or_default();
    let mut walk = Walk { partner: vec![UNPAIRED; n], id_of: vec![0; ctx.shell.area()], heads: Vec::new(), length: 0, alive };
    let seg = ctx.segments[start].as_ref().expect("arc edge");
    if walk.absorb(&seg.passes, ctx.targets) {
        extend(ctx, start, walk, seg.exit, ctx.arc_edges.len() - 1, &mut out);
    }
    out
}

/// Chooses the partner of the exit edge `exit`; `open` counts unpaired arc
/// edges, including `exit` and the start edge.
fn extend(ctx: &GridContext<'_>, start: usize, walk: Walk, exit: usize, open: usize, out: &mut Vec<Vec<usize>>) {
    if open == 1 {
        // only the start edge is left: close the loop
        let mut partner = walk.partner;
        partner[exit] = start;
        partner[start] = exit;
        let complete = ctx.targets.is_none_or(|t| walk.alive.iter().any(|&i| t[i].len() == walk.length));
        if complete {
            out.push(partner);
        }
        return;
    }
    for &f in &ctx.arc_edges {
        if f == exit || f == start || walk.partner[f] != UNPAIRED {
            continue;
        }
        let mut next = walk.clone();
        next.partner[exit] = f;
        next.partner[f] = exit;
        let seg = ctx.segments[f].as_ref().expect("arc edge");
        if next.absorb(&seg.passes, ctx.targets) {
            extend(ctx, start, next, seg.exit, open - 2, out);
        }
    }
}

/// Mosaics on one grid passing the filters, in a fixed order.
fn grid_mosaics(ctx: &GridContext<'_>, opts: &SearchOptions) -> Vec<Mosaic> {
    let n = ctx.shell.boundary_len();
    let arc_matchings: Vec<Vec<usize>> = if opts.require_knot || ctx.targets.is_some() {
        knot_matchings(ctx)
    } else {
        matchings(&ctx.arc_edges)
            .into_iter()
            .map(|pairs| {
                let mut p = vec![UNPAIRED; n];
                for (a, b) in pairs {
                    p[a] = b;
                    p[b] = a;
                }
                p
            })
            .collect()
    };
    let blanks: Vec<usize> = (0..n).filter(|&k| !ctx.shell.edge_carries_arc(k)).collect();
    let blank_matchings = if opts.blank_pairings {
        matchings(&blanks)
    } else {
        vec![blanks.chunks(2).map(|c| (c[0], c[1])).collect()]
    };
    let mut out = Vec::new();
    for arcs in &arc_matchings {
        for bl in &blank_matchings {
            let mut partner = arcs.clone();
            for &(a, b) in bl {
                partner[a] = b;
                partner[b] = a;
            }
            let m = Mosaic::from_partner(ctx.shell.rows(), ctx.shell.cols(), ctx.shell.tiles().to_vec(), partner);
            if opts.require_knot && trace::trace_valid(&m).components() != 1 {
                continue;
            }
            if opts.genus.is_some_and(|g| surface::report(&m).genus != g) {
                continue;
            }
            out.push(m);
        }
    }
    out
}

fn check_guard(rows: usize, cols: usize, guard: usize) -> Result<()> {
    let cells = rows * cols;
    if cells > guard {
        return Err(Error::SearchSpaceTooLarge { cells, guard });
    }
    if rows == 0 || cols == 0 {
        return Err(Error::BadDimensions(format!("{rows}x{cols}")));
    }
    Ok(())
}

/// Every valid `rows × cols` mosaic passing the filters, each exactly once,
/// in grid order.
pub fn enumerate_mosaics(rows: usize, cols: usize, opts: &SearchOptions) -> Result<Vec<Mosaic>> {
    check_guard(rows, cols, opts.guard)?;
    let range = opts.crossings.clone().unwrap_or(0..=rows * cols);
    let grids = grids(rows, cols, &range);
    let found = with_pool(|| {
        grids
            .into_par_iter()
            .filter(|g| !opts.require_knot || g.iter().any(|t| !t.is_blank()))
            .map(|g| grid_mosaics(&GridContext::new(rows, cols, g, None), opts))
            .collect::<Vec<_>>()
    });
    Ok(found.into_iter().flatten().collect())
}

/// Knots found on `rows × cols` mosaics, one entry per canonical code (with
/// reversal) and genus, sorted by crossings and then code.
pub fn census(rows: usize, cols: usize, opts: &SearchOptions) -> Result<Vec<CensusEntry>> {
    let opts = SearchOptions { require_knot: true, ..opts.clone() };
    let mut entries: BTreeMap<(usize, GaussCode, usize), CensusEntry> = BTreeMap::new();
    for m in enumerate_mosaics(rows, cols, &opts)? {
        let t = trace::trace_valid(&m);
        let code = t.gauss.expect("knot has a code").canonicalize(true);
        let genus = surface::report(&m).genus;
        let crossings = t.crossings.len();
        entries.entry((crossings, code.clone(), genus)).or_insert_with(|| CensusEntry {
            code,
            tiles: m.area(),
            mosaic: m,
            genus,
            crossings,
        });
    }
    Ok(entries.into_values().collect())
}

/// The rotations of a code, and of its reversal when allowed, renumbered.
fn target_words(code: &GaussCode, allow_reversal: bool) -> Vec<Vec<Symbol>> {
    let mut words: Vec<Vec<Symbol>> = Vec::new();
    let forms = if allow_reversal { vec![code.clone(), code.reversed()] } else { vec![code.clone()] };
    for form in forms {
        for k in 0..form.len() {
            words.push(form.rotated(k).symbols().to_vec());
        }
    }
    words.sort();
    words.dedup();
    words
}

/// First mosaic of the given shape whose traced code matches `code` up to
/// rotation and reversal.
pub fn find_mosaic(rows: usize, cols: usize, code: &GaussCode, guard: usize) -> Result<Option<Mosaic>> {
    check_guard(rows, cols, guard)?;
    let n = code.crossings();
    let targets = target_words(code, true);
    let wanted = code.canonicalize(true);
    let grids = grids(rows, cols, &(n..=n));
    let found = with_pool(|| {
        grids.into_par_iter().find_map_first(|g| {
            let ctx = GridContext::new(rows, cols, g, Some(&targets));
            grid_mosaics(&ctx, &SearchOptions::knots()).into_iter().find(|m| {
                trace::trace_valid(m).gauss.is_some_and(|c| c.canonicalize(true) == wanted)
            })
        })
    });
    Ok(found)
}

/// Least area, up to `max_area`, of a mosaic carrying `code`, with a witness.
/// Shapes of equal area are tried with fewer rows first.
pub fn tile_number_bound(code: &GaussCode, max_area: usize) -> Result<(usize, Mosaic)> {
    if max_area > DEFAULT_GUARD {
        return Err(Error::SearchSpaceTooLarge { cells: max_area, guard: DEFAULT_GUARD });
    }
    if code.is_empty() {
        return Err(Error::NotFoundWithinBound(max_area));
    }
    for area in code.crossings().max(1)..=max_area {
        for rows in (1..=area).filter(|r| area % r == 0) {
            if let Some(m) = find_mosaic(rows, area / rows, code, DEFAULT_GUARD)? {
                return Ok((area, m));
            }
        }
    }
    Err(Error::NotFoundWithinBound(max_area))
}

/// Least width, up to `max_width`, of a row mosaic carrying `code`.
pub fn row_number_bound(code: &GaussCode, max_width: usize) -> Result<(usize, Mosaic)> {
    if max_width > DEFAULT_GUARD {
        return Err(Error::SearchSpaceTooLarge { cells: max_width, guard: DEFAULT_GUARD });
    }
    if code.is_empty() {
        return Err(Error::NotFoundWithinBound(max_width));
    }
    for w in code.crossings().max(1)..=max_width {
        if let Some(m) = find_mosaic(1, w, code, DEFAULT_GUARD)? {
            return Ok((w, m));
        }
    }
    Err(Error::NotFoundWithinBound(max_width))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_tiles() {
        let all = enumerate_mosaics(1, 1, &SearchOptions::default()).unwrap();
        // blank: adjacent pairing only; arc tiles: 1 each; crossings: 3 matchings each
        assert_eq!(all.len(), 1 + 6 + 4 * 3);
        let every = SearchOptions { blank_pairings: true, ..SearchOptions::default() };
        assert_eq!(enumerate_mosaics(1, 1, &every).unwrap().len(), 3 + 6 + 4 * 3);
        assert!(all.iter().all(|m| m.validate().is_valid()));
        let knots = enumerate_mosaics(1, 1, &SearchOptions::knots()).unwrap();
        assert!(knots.iter().all(|m| trace::trace(m).unwrap().components() == 1));
        // six single-arc tiles, and two of the three gluings of each of T7 and T8
        assert_eq!(knots.iter().filter(|m| m.crossing_count() == 0).count(), 6 + 2 * 2);
    }

    #[test]
    fn matchings_count() {
        assert_eq!(matchings(&[]).len(), 1);
        assert_eq!(matchings(&[0, 1, 2, 3]).len(), 3);
        assert_eq!(matchings(&[0, 1, 2, 3, 4, 5]).len(), 15);
    }

    #[test]
    fn trefoil_on_a_row() {
        let opts = SearchOptions { genus: Some(0), crossings: Some(3..=3), ..SearchOptions::knots() };
        let trefoil: GaussCode = "O1+U2+O3+U1+O2+U3+".parse().unwrap();
        let found = census(1, 3, &opts).unwrap();
        assert!(found.iter().any(|e| e.code == trefoil.canonicalize(true)));
    }

    #[test]
    fn row_and_tile_numbers() {
        let trefoil: GaussCode = "O1+U2+O3+U1+O2+U3+".parse().unwrap();
        assert_eq!(tile_number_bound(&trefoil, 4).unwrap().0, 3);
        let virtual_trefoil: GaussCode = "O1+U2+U1+O2+".parse().unwrap();
        assert_eq!(row_number_bound(&virtual_trefoil, 3).unwrap().0, 2);
        assert_eq!(row_number_bound(&GaussCode::empty(), 3), Err(Error::NotFoundWithinBound(3)));
    }

    #[test]
    fn guard() {
        assert_eq!(
            enumerate_mosaics(4, 4, &SearchOptions::default()),
            Err(Error::SearchSpaceTooLarge { cells: 16, guard: 12 })
        );
    }
}
