//! Test-side oracles and generators, written independently of the library's
//! own algorithms.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;
use vmosaic_core::fixtures::{self, ManifestEntry};
use vmosaic_core::{GaussCode, Mosaic, Pass, Sign, Side, Symbol, Tile};

pub fn corpus() -> Vec<(ManifestEntry, Mosaic)> {
    let root = fixtures::default_root();
    fixtures::load_manifest(&root)
        .expect("manifest")
        .into_iter()
        .map(|e| {
            let m = fixtures::load_fixture(&root, &e).expect("fixture parses");
            (e, m)
        })
        .collect()
}

/// A uniformly chosen tile grid with consistent interior edges, arc edges
/// matched at random among themselves, and blank edges likewise.
pub fn random_mosaic(rng: &mut StdRng, rows: usize, cols: usize) -> Mosaic {
    let mut tiles: Vec<Tile> = Vec::with_capacity(rows * cols);
    for k in 0..rows * cols {
        let (r, c) = (k / cols, k % cols);
        let fits: Vec<Tile> = Tile::ALL
            .into_iter()
            .filter(|t| c == 0 || tiles[k - 1].has_connection(Side::East) == t.has_connection(Side::West))
            .filter(|t| r == 0 || tiles[k - cols].has_connection(Side::South) == t.has_connection(Side::North))
            .collect();
        tiles.push(*fits.choose(rng).expect("some tile always fits"));
    }
    // boundary edges in counterclockwise order: left, bottom, right, top
    let mut sides: Vec<(usize, Side)> = Vec::new();
    sides.extend((0..rows).map(|r| (r * cols, Side::West)));
    sides.extend((0..cols).map(|c| ((rows - 1) * cols + c, Side::South)));
    sides.extend((0..rows).rev().map(|r| (r * cols + cols - 1, Side::East)));
    sides.extend((0..cols).rev().map(|c| (c, Side::North)));
    let (mut arcs, mut blanks): (Vec<usize>, Vec<usize>) =
        (0..sides.len()).partition(|&k| tiles[sides[k].0].has_connection(sides[k].1));
    arcs.shuffle(rng);
    blanks.shuffle(rng);
    let pairs: Vec<(usize, usize)> = arcs.chunks(2).chain(blanks.chunks(2)).map(|p| (p[0], p[1])).collect();
    Mosaic::new(rows, cols, tiles, &pairs).expect("generated pairing is a perfect matching")
}

pub fn random_shape(rng: &mut StdRng, max_area: usize) -> (usize, usize) {
    loop {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=4);
        if rows * cols <= max_area {
            return (rows, cols);
        }
    }
}

/// A random well-formed code: each crossing passed once over and once under
/// in random order, with a random sign.
pub fn random_code(rng: &mut StdRng, crossings: usize) -> GaussCode {
    let mut word: Vec<(usize, bool)> = (1..=crossings).flat_map(|i| [(i, true), (i, false)]).collect();
    word.shuffle(rng);
    let signs: Vec<Sign> = (0..crossings).map(|_| if rng.gen() { Sign::Plus } else { Sign::Minus }).collect();
    let symbols = word
        .into_iter()
        .map(|(id, over)| Symbol::new(if over { Pass::Over } else { Pass::Under }, id, signs[id - 1]))
        .collect();
    GaussCode::new(symbols).expect("well formed")
}

/// Intersection index of every crossing from the Gauss code alone, by id.
///
/// Smoothing `d` splits the cycle at its two passes. The stretch strictly
/// between them is one component; it is component 1 exactly when the first
/// pass of `d` is under a positive crossing or over a negative one. Each other
/// crossing met once on that stretch joins the two components and
/// contributes its sign when component 1 is over there, minus its sign
/// otherwise.
pub fn chord_indices(code: &GaussCode) -> Vec<i64> {
    let s = code.symbols();
    let n = code.crossings();
    let mut out = vec![0; n];
    for d in 1..=n {
        let first = s.iter().position(|x| x.id == d).expect("present");
        let second = first + 1 + s[first + 1..].iter().position(|x| x.id == d).expect("twice");
        let between = &s[first + 1..second];
        let eps = s[first].sign.value();
        let stretch_is_one = (s[first].pass == Pass::Under && eps > 0) || (s[first].pass == Pass::Over && eps < 0);
        let mut total = 0;
        for x in 1..=n {
            let here: Vec<&Symbol> = between.iter().filter(|y| y.id == x).collect();
            if x == d || here.len() != 1 {
                continue;
            }
            let stretch_over = here[0].pass == Pass::Over;
            let one_over = stretch_over == stretch_is_one;
            let e = here[0].sign.value();
            total += if one_over { e } else { -e };
        }
        out[d - 1] = total;
    }
    out
}

/// Absolute value of the knot determinant from the Fox colouring matrix of a
/// classical Gauss code: arcs run from one under pass to the next, and each
/// crossing gives the row `2·over − under_in − under_out`.
pub fn determinant(code: &GaussCode) -> i64 {
    let s = code.symbols();
    let n = code.crossings();
    if n == 0 {
        return 1;
    }
    let unders: Vec<usize> = (0..s.len()).filter(|&i| s[i].pass == Pass::Under).collect();
    // arc k starts just after the k-th under pass
    let arc_at = |pos: usize| match unders.iter().rposition(|&u| u < pos) {
        Some(k) => k,
        None => unders.len() - 1,
    };
    let mut m = vec![vec![0i64; n]; n];
    for (row, id) in (1..=n).enumerate() {
        let over = (0..s.len()).find(|&i| s[i].id == id && s[i].pass == Pass::Over).expect("over pass");
        let under = unders.iter().position(|&u| s[u].id == id).expect("under pass");
        m[row][arc_at(over)] += 2;
        m[row][under] -= 1;
        m[row][(under + n - 1) % n] -= 1;
    }
    let minor: Vec<Vec<i64>> = m[1..].iter().map(|r| r[1..].to_vec()).collect();
    bareiss(minor).abs()
}

/// Exact integer determinant by fraction-free elimination.
fn bareiss(mut a: Vec<Vec<i64>>) -> i64 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i64;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Whether every chord is interlaced with another, so no crossing can be
/// undone by a twist.
pub fn is_reduced(code: &GaussCode) -> bool {
    let s = code.symbols();
    (1..=code.crossings()).all(|d| {
        let first = s.iter().position(|x| x.id == d).expect("present");
        let second = first + 1 + s[first + 1..].iter().position(|x| x.id == d).expect("twice");
        let between = &s[first + 1..second];
        between.iter().any(|x| between.iter().filter(|y| y.id == x.id).count() == 1)
    })
}

pub fn is_alternating(code: &GaussCode) -> bool {
    let s = code.symbols();
    (0..s.len()).all(|i| s[i].pass != s[(i + 1) % s.len()].pass)
}
