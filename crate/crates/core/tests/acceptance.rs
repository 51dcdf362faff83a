//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Time limits are wall-clock under the test profile.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use tromino_core::aztec::{
    embed_in_aztec, gen_aztec_diamond, gen_aztec_rectangle, has_l_cover, tile_aztec, tile_aztec_one_defect,
    AztecRectangleSpec,
};
use tromino_core::boxplus::{classify_and_tag, decompose, tile_boxplus, AdjacencyGraph};
use tromino_core::sample::{fixed_polyominoes, random_claw_free_region, random_polyomino, random_region, seeded_rng};
use tromino_core::solver::{count, max_packing, solve};
use tromino_core::tromino180::{
    decide_180_cover, detect_forbidden, find_claw, forbidden_catalog, mis_claw_free, mis_exact, IntersectionGraph,
};
use tromino_core::{Cell, Error, PieceSet, Region};

/// L-tromino tilings of the order-2 Aztec diamond, from a brute-force
/// enumeration over all placements.
const AD2_L_TILINGS: u32 = 3;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ar(a: u32, b: u32) -> Region {
    gen_aztec_rectangle(AztecRectangleSpec::new(a, b).expect("a ≤ b"))
}

fn covered(r: &Region, pieces: PieceSet) -> bool {
    solve(r, pieces).expect("within default budget").is_covered()
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        return Err(format!("took {t:.2?}, limit {limit:?}"));
    }
    Ok(())
}

/// 200 seeded regions of at most 18 cells with random defects.
fn random_corpus() -> Vec<Region> {
    let mut rng = seeded_rng(2024);
    (0..200).map(|_| random_region(&mut rng, 18, 0.15)).collect()
}

fn small_polyominoes() -> Vec<Region> {
    (1..=9)
        .flat_map(fixed_polyominoes)
        .map(|c| Region::new(c, BTreeSet::new()).expect("polyominoes are connected"))
        .collect()
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for a in 1..=8 {
        for b in a..=8 {
            if covered(&ar(a, b), PieceSet::ALL_L) != has_l_cover(a, b) {
                return Err(format!("AR({a},{b}) disagrees"));
            }
            checked += 1;
        }
    }
    for n in 1..=8u32 {
        let r = gen_aztec_diamond(n).expect("n ≥ 1");
        if covered(&r, PieceSet::ALL_L) != (n * (n + 1) % 3 == 0) {
            return Err(format!("AD({n}) disagrees"));
        }
        checked += 1;
    }
    within(Duration::from_secs(300), start)?;
    Ok(format!("{checked} instances in {:.2?}", start.elapsed()))
}

fn ac2() -> Outcome {
    let mut checked = 0;
    for a in 1..=12 {
        for b in a..=30 {
            if !has_l_cover(a, b) {
                continue;
            }
            let t = tile_aztec(a, b).map_err(|e| format!("AR({a},{b}): {e}"))?;
            t.validate(&ar(a, b)).map_err(|v| format!("AR({a},{b}): {v}"))?;
            let expected = (2 * a * b + a + b) / 3;
            if t.len() != expected as usize {
                return Err(format!("AR({a},{b}) has {} placements, expected {expected}", t.len()));
            }
            checked += 1;
        }
    }
    let start = Instant::now();
    let t = tile_aztec(50, 200).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    within(Duration::from_secs(1), start)?;
    t.validate(&ar(50, 200)).map_err(|v| format!("AR(50,200): {v}"))?;
    Ok(format!("{checked} rectangles validated; AR(50,200) in {elapsed:.2?}"))
}

fn ac3() -> Outcome {
    let mut checked = 0;
    for (a, b) in [(4, 4), (4, 7), (7, 7)] {
        let host = ar(a, b);
        for &d in host.cells() {
            let t = tile_aztec_one_defect(a, b, d).map_err(|e| format!("AR({a},{b}) defect {d}: {e}"))?;
            let r = host.with_defects([d]).expect("defect inside");
            t.validate(&r).map_err(|v| format!("AR({a},{b}) defect {d}: {v}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} defect positions, zero failures"))
}

fn ac4() -> Outcome {
    let start = Instant::now();
    let mut regions: Vec<(String, Region)> = Vec::new();
    for a in 1..=5 {
        for b in a..=5 {
            regions.push((format!("AR({a},{b})"), ar(a, b)));
        }
    }
    for n in 1..=4 {
        regions.push((format!("AD({n})"), gen_aztec_diamond(n).expect("n ≥ 1")));
    }
    let divisible = regions.iter().filter(|(_, r)| r.len() % 3 == 0).count();
    for (name, r) in &regions {
        for pieces in [PieceSet::RIGHT_180, PieceSet::LEFT_180] {
            if covered(r, pieces) {
                return Err(format!("{name} has a 180-cover"));
            }
        }
    }
    within(Duration::from_secs(600), start)?;
    Ok(format!(
        "{} regions × 2 orientations uncoverable ({divisible} with size divisible by 3) in {:.2?}",
        regions.len(),
        start.elapsed()
    ))
}

fn ac5() -> Outcome {
    let corpus = random_corpus();
    for (i, r) in corpus.iter().enumerate() {
        let ig = IntersectionGraph::from_region(r);
        let mis = mis_exact(&ig.graph).map_err(|e| e.to_string())?.len();
        let pack = max_packing(r, PieceSet::RIGHT_180)
            .map_err(|e| e.to_string())?
            .max_tiles;
        if mis != pack {
            return Err(format!("region {i}: MIS {mis} vs packing {pack}\n{}", r.to_text()));
        }
    }
    Ok(format!("{} regions, exact equality", corpus.len()))
}

fn ac6() -> Outcome {
    let polys = small_polyominoes();
    let corpus = random_corpus();
    let mut covered_count = 0;
    for (i, r) in polys.iter().chain(&corpus).enumerate() {
        let d = decide_180_cover(r).map_err(|e| e.to_string())?;
        let oracle = covered(r, PieceSet::RIGHT_180);
        if d.covered != oracle {
            return Err(format!(
                "instance {i}: pipeline {} vs oracle {oracle}\n{}",
                d.covered,
                r.to_text()
            ));
        }
        if let Some(t) = &d.tiling {
            t.validate(r).map_err(|v| format!("instance {i}: {v}"))?;
        }
        covered_count += usize::from(oracle);
    }
    Ok(format!(
        "{} polyominoes + {} random regions agree ({covered_count} coverable)",
        polys.len(),
        corpus.len()
    ))
}

fn ac7() -> Outcome {
    let classes = forbidden_catalog().len();
    if classes != 5 {
        return Err(format!("catalog has {classes} classes"));
    }
    let polys = small_polyominoes();
    let corpus = random_corpus();
    let mut with_claw = 0;
    for (i, r) in polys.iter().chain(&corpus).enumerate() {
        let claw = find_claw(&IntersectionGraph::from_region(r).graph).is_some();
        let forbidden = !detect_forbidden(r).is_empty();
        if claw != forbidden {
            return Err(format!(
                "instance {i}: claw {claw} vs forbidden {forbidden}\n{}",
                r.to_text()
            ));
        }
        with_claw += usize::from(claw);
    }
    let mut rng = seeded_rng(77);
    let mut slowest = Duration::ZERO;
    let mut largest = 0;
    let instances = 60;
    for i in 0..instances {
        let r = random_claw_free_region(&mut rng, 30 + i % 31);
        let g = IntersectionGraph::from_region(&r).graph;
        let start = Instant::now();
        let fast = mis_claw_free(&g).map_err(|e| format!("claw-free instance {i}: {e}"))?;
        let t = start.elapsed();
        slowest = slowest.max(t);
        largest = largest.max(r.len());
        if t > Duration::from_secs(1) {
            return Err(format!("claw-free instance {i} took {t:.2?}"));
        }
        let exact = mis_exact(&g).map_err(|e| e.to_string())?;
        if fast.len() != exact.len() || !g.is_independent(&fast) {
            return Err(format!(
                "claw-free instance {i}: {} vs exact {}",
                fast.len(),
                exact.len()
            ));
        }
    }
    Ok(format!(
        "5 classes; {} instances agree ({with_claw} with claws); {instances} claw-free regions up to {largest} cells, slowest {slowest:.2?}",
        polys.len() + corpus.len()
    ))
}

fn boxplus_case(cells: BTreeSet<Cell>) -> Result<(), String> {
    let r = Region::new(cells, BTreeSet::new()).expect("connected");
    let n = r.len();
    match tile_boxplus(&r) {
        Ok(t) if n.is_multiple_of(3) => {
            t.validate(&r.subdivide_boxplus())
                .map_err(|v| format!("{v}\n{}", r.to_text()))?;
            for leaf in decompose(&r).map_err(|e| e.to_string())?.leaves() {
                let g = AdjacencyGraph::from_cells(leaf);
                if !g.is_tree() {
                    return Err(format!("leaf is not a tree\n{}", r.to_text()));
                }
                let classes = classify_and_tag(&g).map_err(|e| format!("{e}\n{}", r.to_text()))?;
                if classes.values().flat_map(|c| &c.tags).any(|&(_, t)| t != 1 && t != 2) {
                    return Err(format!("tag outside {{1,2}}\n{}", r.to_text()));
                }
            }
            Ok(())
        }
        Err(Error::SizeNotDivisible(_)) if !n.is_multiple_of(3) => Ok(()),
        other => Err(format!(
            "n={n}: unexpected {:?}\n{}",
            other.map(|t| t.len()),
            r.to_text()
        )),
    }
}

fn ac8() -> Outcome {
    let mut checked = 0;
    for n in 1..=9 {
        for cells in fixed_polyominoes(n) {
            boxplus_case(cells)?;
            checked += 1;
        }
    }
    let mut rng = seeded_rng(8);
    for n in [12, 15] {
        for _ in 0..50 {
            boxplus_case(random_polyomino(&mut rng, n))?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} polyominoes (n ≤ 9 exhaustive, 50 each at 12 and 15)"
    ))
}

/// Connected union of up to four disjoint I-trominoes, each attached next to
/// the previous ones.
fn i_tiled_region<R: rand::Rng>(rng: &mut R) -> Region {
    let mut cells: BTreeSet<Cell> = [0, 1, 2].map(|x| Cell::new(x, 0)).into();
    let pieces = rng.gen_range(1..=4);
    for _ in 1..pieces {
        let options: Vec<BTreeSet<Cell>> = cells
            .iter()
            .flat_map(|c| c.neighbors())
            .filter(|c| !cells.contains(c))
            .flat_map(|c| {
                (0..3).flat_map(move |k| {
                    [
                        [0, 1, 2].map(|i| c.offset(i - k, 0)),
                        [0, 1, 2].map(|i| c.offset(0, i - k)),
                    ]
                })
            })
            .map(BTreeSet::from)
            .filter(|t| t.is_disjoint(&cells))
            .collect();
        let pick = &options[rng.gen_range(0..options.len())];
        cells.extend(pick);
    }
    Region::new(cells, BTreeSet::new()).expect("attached trominoes stay connected")
}

fn ac9() -> Outcome {
    let mut rng = seeded_rng(99);
    let sampled = 150;
    let grown = 100;
    let mut corpus: Vec<Region> = (0..sampled).map(|_| random_region(&mut rng, 12, 0.1)).collect();
    corpus.extend((0..grown).map(|_| i_tiled_region(&mut rng)));
    let mut antecedent = 0;
    for (i, r) in corpus.iter().enumerate() {
        if !covered(r, PieceSet::I) {
            continue;
        }
        antecedent += 1;
        if !covered(&r.subdivide_boxplus(), PieceSet::RIGHT_180) {
            return Err(format!(
                "region {i} is I-coverable but its subdivision has no 180-cover\n{}",
                r.to_text()
            ));
        }
    }
    if antecedent == 0 {
        return Err("no I-coverable region sampled".into());
    }
    Ok(format!(
        "{sampled} random + {grown} I-tiled regions, {antecedent} I-coverable, zero counterexamples"
    ))
}

fn ac10() -> Outcome {
    let mut rng = seeded_rng(10);
    let total = 120;
    let mut coverable = 0;
    for i in 0..total {
        let r = random_region(&mut rng, 15, 0.15);
        let (spec, host) = embed_in_aztec(&r);
        let before = covered(&r, PieceSet::ALL_L);
        let after = covered(&host, PieceSet::ALL_L);
        if before != after {
            return Err(format!(
                "region {i} in AR({},{}): {before} vs {after}\n{}",
                spec.a,
                spec.b,
                r.to_text()
            ));
        }
        coverable += usize::from(before);
    }
    Ok(format!("{total} regions agree ({coverable} coverable)"))
}

fn ac11() -> Outcome {
    let rect = count(&Region::rectangle(3, 2), PieceSet::ALL_L).map_err(|e| e.to_string())?;
    if rect != BigUint::from(2u32) {
        return Err(format!("count(2×3) = {rect}"));
    }
    let ad2 = gen_aztec_diamond(2).expect("n ≥ 1");
    let first = count(&ad2, PieceSet::ALL_L).map_err(|e| e.to_string())?;
    let second = count(&ad2, PieceSet::ALL_L).map_err(|e| e.to_string())?;
    if first != second || first != BigUint::from(AD2_L_TILINGS) {
        return Err(format!("count(AD(2)) = {first}, then {second}; frozen {AD2_L_TILINGS}"));
    }
    Ok(format!("count(2×3) = 2, count(AD(2)) = {first}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("Aztec coverability matches the divisibility rule", ac1),
        ("constructive Aztec tiler", ac2),
        ("one-defect Aztec tiler", ac3),
        ("Aztec shapes have no 180-cover", ac4),
        ("MIS of the intersection graph equals max 180-packing", ac5),
        ("180 pipeline agrees with the oracle", ac6),
        ("claws correspond to forbidden polyominoes", ac7),
        ("subdivided regions tile iff size divisible by 3", ac8),
        ("I-coverable implies subdivision 180-coverable", ac9),
        ("Aztec embedding preserves coverability", ac10),
        ("counting regression", ac11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("[PASS] AC{} {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] AC{} {name}: {detail} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
