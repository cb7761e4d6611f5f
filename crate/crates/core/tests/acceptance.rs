//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use vmosaic_core::fixtures::{self, ManifestEntry};
use vmosaic_core::{
    build_row, census, eject, indexpoly, inject, parse_code, surface, trace, GaussCode, InjectionSite, Mosaic,
    SearchOptions,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn fixture(name: &str) -> Mosaic {
    let root = fixtures::default_root();
    let text = std::fs::read_to_string(root.join(format!("figures/{name}.vmos"))).expect("fixture file");
    Mosaic::parse(&text).expect("fixture parses")
}

fn traced_code(m: &Mosaic) -> Result<GaussCode, String> {
    let t = trace::trace(m).map_err(|e| e.to_string())?;
    let components = t.components();
    t.gauss.ok_or_else(|| format!("{components} components"))
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    if spent > limit {
        return Err(format!("took {spent:.2?}, limit {limit:?}"));
    }
    Ok(())
}

fn a1() -> Check {
    let start = Instant::now();
    let m = fixture("fig2");
    let v = surface::boundary_vertices(&m).map_err(|e| e.to_string())?;
    let r = surface::genus(&m).map_err(|e| e.to_string())?;
    let k = surface::count_interlocking(&m).map_err(|e| e.to_string())?;
    within(start, Duration::from_secs(1))?;
    if (v, r.genus, k) != (3, 1, 1) {
        return Err(format!("v={v} genus={} interlocking={k}", r.genus));
    }
    Ok(format!("v=3 genus=1 interlocking=1 in {:.2?}", start.elapsed()))
}

fn a2() -> Check {
    let m = fixture("fig9");
    let t = trace::trace(&m).map_err(|e| e.to_string())?;
    if t.signs.iter().any(|s| s.value() != -1) {
        return Err(format!("signs {:?}", t.signs));
    }
    let r = indexpoly::index_report(&m).map_err(|e| e.to_string())?;
    let mut got = r.indices();
    got.sort();
    let mut flipped: Vec<i64> = got.iter().map(|i| -i).collect();
    flipped.sort();
    let want = vec![-1, -1, -1, 3];
    if got != want && flipped != want {
        return Err(format!("indices {:?}", r.indices()));
    }
    if r.polynomial.to_string() != "-t^3-3t+4" {
        return Err(format!("p_t = {}", r.polynomial));
    }
    Ok(format!("signs all -1, indices {:?}, p_t = {}", r.indices(), r.polynomial))
}

fn a3() -> Check {
    let mut parts = Vec::new();
    for name in ["fig13a", "fig13b"] {
        let r = indexpoly::index_report(&fixture(name)).map_err(|e| format!("{name}: {e}"))?;
        if !r.polynomial.is_zero() || r.indices().iter().any(|&i| i != 0) {
            return Err(format!("{name}: indices {:?}, p_t = {}", r.indices(), r.polynomial));
        }
        parts.push(format!("{name}: {} crossings of index 0", r.crossings.len()));
    }
    Ok(parts.join(", "))
}

fn round_trip(code: &GaussCode) -> Result<Mosaic, String> {
    let m = build_row(code).map_err(|e| format!("{code}: {e}"))?;
    if !m.validate().is_valid() {
        return Err(format!("{code}: invalid mosaic"));
    }
    let traced = traced_code(&m).map_err(|e| format!("{code}: {e}"))?;
    if traced.canonicalize(false) != code.canonicalize(false) {
        return Err(format!("{code}: traced {traced}"));
    }
    Ok(m)
}

fn a4() -> Check {
    let start = Instant::now();
    let six: GaussCode = "O1-U2+O3+U1-O4-U5+O2+U4-O6+U3+O5+U6+".parse().map_err(|e| format!("{e}"))?;
    let w6 = round_trip(&six)?.cols();
    if w6 != 7 {
        return Err(format!("six-crossing code built at width {w6}"));
    }
    let eight = parse_code("1-8+5-6+2-1+4-5+6-7+3-4+8-2+7-3").map_err(|e| e.to_string())?;
    let w8 = round_trip(&eight)?.cols();
    if w8 > 9 {
        return Err(format!("8_16 built at width {w8}"));
    }
    let mut rng = StdRng::seed_from_u64(4);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=8);
        round_trip(&common::random_code(&mut rng, n))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("widths {w6} and {w8}, 1000 random codes in {:.2?}", start.elapsed()))
}

fn a5() -> Check {
    let start = Instant::now();
    let report = fixtures::check_fixtures(&fixtures::default_root()).map_err(|e| e.to_string())?;
    let entries = fixtures::load_manifest(&fixtures::default_root()).map_err(|e| e.to_string())?;
    let genus_checked = entries.iter().filter(|e| e.genus.is_some()).count();
    within(start, Duration::from_secs(10))?;
    if !report.is_ok() {
        let problems: Vec<String> = report.problems.iter().map(|p| p.to_string()).collect();
        return Err(format!("{} of {} fixtures disagree: {}", problems.len(), report.checked, problems.join("; ")));
    }
    Ok(format!("{} fixtures, {genus_checked} genus values, in {:.2?}", report.checked, start.elapsed()))
}

fn a6() -> Check {
    let row = traced_code(&fixture("fig_10_88_row"))?;
    let grid = traced_code(&fixture("fig_10_88_2x5"))?;
    if row.canonicalize(true) != grid.canonicalize(true) {
        return Err(format!(
            "1x12 traces to {} crossings, 2x5 to {}: {} vs {}",
            row.crossings(),
            grid.crossings(),
            row.canonicalize(true),
            grid.canonicalize(true)
        ));
    }
    Ok(format!("both trace to {}", row.canonicalize(true)))
}

/// The classical knots a reduced alternating diagram on a 2×3 grid can show,
/// identified by crossing number and determinant.
const SMALL_KNOTS: [(usize, i64, &str); 4] = [(3, 3, "3_1"), (4, 5, "4_1"), (5, 7, "5_2"), (6, 13, "6_3")];

fn a7() -> Check {
    let start = Instant::now();
    let opts = SearchOptions { genus: Some(0), blank_pairings: true, ..SearchOptions::knots() };
    let entries = census(2, 3, &opts).map_err(|e| e.to_string())?;
    let found: BTreeSet<GaussCode> = entries.iter().map(|e| e.code.canonicalize(true)).collect();

    let root = fixtures::default_root();
    for &(_, _, name) in &SMALL_KNOTS {
        let m = fixtures::load_fixture(&root, &entry(&format!("table2/{name}"))?).map_err(|e| e.to_string())?;
        let code = traced_code(&m)?;
        for c in [code.clone(), code.mirrored()] {
            if !found.contains(&c.canonicalize(true)) {
                return Err(format!("{name} fixture code {c} missing from census"));
            }
        }
    }

    let most = entries.iter().map(|e| e.crossings).max().unwrap_or(0);
    if most > 6 {
        return Err(format!("an entry has {most} crossings"));
    }
    let mut seen = BTreeSet::new();
    for e in &entries {
        if e.crossings < 3 || !common::is_reduced(&e.code) || !common::is_alternating(&e.code) {
            continue;
        }
        let det = common::determinant(&e.code);
        match SMALL_KNOTS.iter().find(|k| k.0 == e.crossings && k.1 == det) {
            Some(k) => {
                seen.insert(k.2);
            }
            None => return Err(format!("{} ({} crossings) has determinant {det}", e.code, e.crossings)),
        }
    }
    if seen.len() != SMALL_KNOTS.len() {
        return Err(format!("reduced alternating entries only show {seen:?}"));
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!(
        "{} entries, at most {most} crossings, reduced alternating ones are {seen:?}, in {:.2?}",
        entries.len(),
        start.elapsed()
    ))
}

fn entry(name: &str) -> Result<ManifestEntry, String> {
    fixtures::load_manifest(&fixtures::default_root())
        .map_err(|e| e.to_string())?
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| format!("no fixture {name}"))
}

fn sites(m: &Mosaic) -> Vec<InjectionSite> {
    let mut out: Vec<InjectionSite> = (0..=m.rows()).map(InjectionSite::Row).collect();
    out.extend((0..=m.cols()).map(InjectionSite::Col));
    for i in 0..=m.rows() {
        out.extend((0..=m.cols()).map(|j| InjectionSite::Square(i, j)));
    }
    out
}

fn moves_hold(label: &str, m: &Mosaic) -> Result<usize, String> {
    let before = surface::genus(m).map_err(|e| e.to_string())?;
    let shape = |m: &Mosaic| -> Result<(usize, Option<GaussCode>), String> {
        if !m.has_arcs() {
            return Ok((0, None));
        }
        let t = trace::trace(m).map_err(|e| e.to_string())?;
        Ok((t.components(), t.gauss.map(|c| c.canonicalize(false))))
    };
    let (components, knot) = shape(m)?;
    let poly = knot.as_ref().map(|_| indexpoly::index_polynomial(m).map_err(|e| e.to_string())).transpose()?;
    let all = sites(m);
    for &site in &all {
        let bigger = inject(m, site).map_err(|e| format!("{label} {site}: {e}"))?;
        let after = surface::genus(&bigger).map_err(|e| e.to_string())?;
        let bands = if matches!(site, InjectionSite::Square(..)) { 2 } else { 1 };
        if after.genus != before.genus || after.v_d != before.v_d + 2 * bands {
            return Err(format!("{label} {site}: {before:?} became {after:?}"));
        }
        if shape(&bigger)? != (components, knot.clone()) {
            return Err(format!("{label} {site}: code changed"));
        }
        if let Some(p) = &poly {
            let q = indexpoly::index_polynomial(&bigger).map_err(|e| e.to_string())?;
            if &q != p {
                return Err(format!("{label} {site}: p_t {p} became {q}"));
            }
        }
        let back = eject(&bigger, site).map_err(|e| format!("{label} {site}: {e}"))?;
        if back.serialize() != m.serialize() {
            return Err(format!("{label} {site}: eject does not undo inject"));
        }
    }
    Ok(all.len())
}

fn a8() -> Check {
    let mut moves = 0;
    let corpus = common::corpus();
    for (e, m) in &corpus {
        moves += moves_hold(&e.name, m)?;
    }
    let mut rng = StdRng::seed_from_u64(8);
    for k in 0..200 {
        let (rows, cols) = common::random_shape(&mut rng, 12);
        let m = common::random_mosaic(&mut rng, rows, cols);
        moves += moves_hold(&format!("random #{k}"), &m)?;
    }
    Ok(format!("{} fixtures and 200 random mosaics, {moves} injections", corpus.len()))
}

fn a9() -> Check {
    let corpus = common::corpus();
    let mut rng = StdRng::seed_from_u64(9);
    let random: Vec<Mosaic> = (0..500)
        .map(|_| {
            let (rows, cols) = common::random_shape(&mut rng, 16);
            common::random_mosaic(&mut rng, rows, cols)
        })
        .collect();
    for (label, m) in corpus.iter().map(|(e, m)| (e.name.clone(), m)).chain(random.iter().enumerate().map(|(k, m)| (format!("random #{k}"), m))) {
        let g = surface::genus(m).map_err(|e| e.to_string())?.genus;
        let oracle = surface::genus_oracle(m).map_err(|e| e.to_string())?;
        if g != oracle {
            return Err(format!("{label}: genus {g}, oracle {oracle}"));
        }
    }
    let mut indices = 0;
    for (e, m) in &corpus {
        let t = trace::trace(m).map_err(|err| err.to_string())?;
        let code = t.gauss.as_ref().ok_or_else(|| format!("{}: not a knot", e.name))?;
        let want = common::chord_indices(code);
        let report = indexpoly::index_report(m).map_err(|err| err.to_string())?;
        for c in &report.crossings {
            let id = t.crossings.iter().position(|&x| x == c.cell).expect("traced crossing");
            if c.index != want[id] {
                return Err(format!("{}: crossing at {:?} has index {}, chord oracle {}", e.name, c.cell, c.index, want[id]));
            }
            indices += 1;
        }
    }
    Ok(format!("{} genera agree, {indices} indices agree", corpus.len() + random.len()))
}

fn a10() -> Check {
    let mut checked = 0;
    for (e, m) in common::corpus() {
        let r = surface::genus(&m).map_err(|err| err.to_string())?;
        if r.virtual_crossings != 0 || r.genus != 0 {
            continue;
        }
        let p = indexpoly::index_polynomial(&m).map_err(|err| err.to_string())?;
        if !p.is_zero() {
            return Err(format!("{}: p_t = {p}", e.name));
        }
        checked += 1;
    }
    Ok(format!("p_t = 0 on all {checked} planar fixtures"))
}

fn main() {
    let checks: [Criterion; 10] = [
        ("A1", a1),
        ("A2", a2),
        ("A3", a3),
        ("A4", a4),
        ("A5", a5),
        ("A6", a6),
        ("A7", a7),
        ("A8", a8),
        ("A9", a9),
        ("A10", a10),
    ];
    let mut failed = Vec::new();
    for (id, check) in checks {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("{id:<4} PASS  {detail}"),
            Err(detail) => {
                println!("{id:<4} FAIL  {detail}");
                failed.push(id);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
    } else {
        println!("acceptance: {} failing: {}", failed.len(), failed.join(" "));
        std::process::exit(1);
    }
}
