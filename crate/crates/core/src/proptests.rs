//! Randomized properties across modules.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::gauss::{GaussCode, Pass, Sign, Symbol};
use crate::mosaic::Mosaic;
use crate::moves::{eject, inject, InjectionSite};
use crate::tiles::{Side, Tile};
use crate::{render, rowbuild, surface, trace};

fn code_from_seed(seed: u64, crossings: usize) -> GaussCode {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut word: Vec<(usize, Pass)> = (1..=crossings).flat_map(|i| [(i, Pass::Over), (i, Pass::Under)]).collect();
    word.shuffle(&mut rng);
    let signs: Vec<Sign> = (0..crossings).map(|_| if rng.gen() { Sign::Plus } else { Sign::Minus }).collect();
    GaussCode::new(word.into_iter().map(|(id, pass)| Symbol::new(pass, id, signs[id - 1])).collect()).unwrap()
}

// tiles chosen to fit their left and upper neighbours, boundary paired at random
fn mosaic_from_seed(seed: u64, rows: usize, cols: usize) -> Mosaic {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut tiles: Vec<Tile> = Vec::new();
    for k in 0..rows * cols {
        let fits: Vec<Tile> = Tile::ALL
            .into_iter()
            .filter(|t| k % cols == 0 || tiles[k - 1].has_connection(Side::East) == t.has_connection(Side::West))
            .filter(|t| k < cols || tiles[k - cols].has_connection(Side::South) == t.has_connection(Side::North))
            .collect();
        tiles.push(*fits.choose(&mut rng).unwrap());
    }
    // boundary edges counterclockwise: left, bottom, right, top
    let mut sides: Vec<(usize, Side)> = (0..rows).map(|r| (r * cols, Side::West)).collect();
    sides.extend((0..cols).map(|c| ((rows - 1) * cols + c, Side::South)));
    sides.extend((0..rows).rev().map(|r| (r * cols + cols - 1, Side::East)));
    sides.extend((0..cols).rev().map(|c| (c, Side::North)));
    let (mut arcs, mut blanks): (Vec<usize>, Vec<usize>) =
        (0..sides.len()).partition(|&k| tiles[sides[k].0].has_connection(sides[k].1));
    arcs.shuffle(&mut rng);
    blanks.shuffle(&mut rng);
    let pairs: Vec<(usize, usize)> = arcs.chunks(2).chain(blanks.chunks(2)).map(|p| (p[0], p[1])).collect();
    Mosaic::new(rows, cols, tiles, &pairs).unwrap()
}

fn shape() -> impl Strategy<Value = (u64, usize, usize)> {
    (any::<u64>(), 1usize..=4, 1usize..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn code_text_round_trips(seed in any::<u64>(), n in 1usize..=9) {
        let c = code_from_seed(seed, n);
        prop_assert_eq!(c.to_string().parse::<GaussCode>().unwrap(), c);
    }

    #[test]
    fn canonical_form_ignores_rotation(seed in any::<u64>(), n in 1usize..=8, k in 0usize..16) {
        let c = code_from_seed(seed, n);
        let canon = c.canonicalize(false);
        prop_assert_eq!(c.rotated(k).canonicalize(false), canon.clone());
        prop_assert_eq!(canon.canonicalize(false), canon);
        prop_assert_eq!(c.reversed().canonicalize(true), c.canonicalize(true));
    }

    #[test]
    fn nonrepeating_run_ignores_rotation_and_reversal(seed in any::<u64>(), n in 1usize..=8, k in 0usize..16) {
        let c = code_from_seed(seed, n);
        let m = c.max_nonrepeating();
        prop_assert!(m >= 1 && m <= n);
        prop_assert_eq!(c.rotated(k).max_nonrepeating(), m);
        prop_assert_eq!(c.reversed().max_nonrepeating(), m);
    }

    // an unsigned word is planar iff some choice of signs gives a genus 0 Carter surface
    #[test]
    fn planarity_agrees_with_carter_genus(seed in any::<u64>(), n in 1usize..=5) {
        let c = code_from_seed(seed, n);
        let any_planar = (0u32..1 << n).any(|bits| {
            c.with_signs(|id| if bits >> (id - 1) & 1 == 1 { Sign::Minus } else { Sign::Plus }).surface_genus() == 0
        });
        prop_assert_eq!(c.is_realizable_planar(), any_planar);
    }

    #[test]
    fn row_builder_round_trips(seed in any::<u64>(), n in 1usize..=8) {
        let c = code_from_seed(seed, n);
        let m = rowbuild::build_row(&c).unwrap();
        prop_assert!(m.validate().is_valid());
        prop_assert_eq!(m.rows(), 1);
        prop_assert!(m.cols() >= n && m.cols() < 2 * n);
        prop_assert_eq!(m.crossing_count(), n);
        if c.max_nonrepeating() == n {
            prop_assert_eq!(m.cols(), n);
        }
        let traced = trace::trace(&m).unwrap().gauss.unwrap();
        prop_assert_eq!(traced.canonicalize(false), c.canonicalize(false));
    }

    #[test]
    fn mosaic_text_round_trips((seed, rows, cols) in shape()) {
        let m = mosaic_from_seed(seed, rows, cols);
        prop_assert_eq!(Mosaic::parse(&m.serialize()).unwrap(), m.clone());
        let grid: Vec<Vec<Tile>> = m.tiles().chunks(cols).map(<[Tile]>::to_vec).collect();
        prop_assert_eq!(render::parse_ascii(&render::render_ascii(&m)).unwrap(), grid);
    }

    #[test]
    fn genus_formula_matches_cell_count((seed, rows, cols) in shape()) {
        let m = mosaic_from_seed(seed, rows, cols);
        let r = surface::genus(&m).unwrap();
        prop_assert_eq!(r.genus, surface::genus_oracle(&m).unwrap());
        if r.virtual_crossings > 0 {
            prop_assert!(r.genus > 0);
        }
    }

    #[test]
    fn eject_undoes_inject((seed, rows, cols) in shape(), i in 0usize..5, j in 0usize..5, kind in 0u8..3) {
        let m = mosaic_from_seed(seed, rows, cols);
        let (i, j) = (i.min(rows), j.min(cols));
        let site = match kind {
            0 => InjectionSite::Row(i),
            1 => InjectionSite::Col(j),
            _ => InjectionSite::Square(i, j),
        };
        let bigger = inject(&m, site).unwrap();
        prop_assert!(bigger.validate().is_valid());
        prop_assert_eq!(bigger.crossing_count(), m.crossing_count());
        prop_assert_eq!(eject(&bigger, site).unwrap().serialize(), m.serialize());
    }
}
