//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use arcflip::arcs::{Arc, ArcModel};
use arcflip::cluster::{b_matrix, b_matrix_glued, exchange_check, mutate, Seed};
use arcflip::complexes::{
    ball, build_arc_complex, build_flip_graph, diameter, flip_closure, maximal_compatible_sets, SimplicialComplex,
};
use arcflip::symmetry::{distinguish, flipgraph_aut_check, rigidity_report, Certificate, SearchLimits};
use arcflip::{CiliatedSurface, ClassTag, Error, GluedTriangulation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn surf(text: &str) -> CiliatedSurface {
    text.parse().expect("valid descriptor")
}

fn polygon(n: u32) -> CiliatedSurface {
    CiliatedSurface::polygon(n).unwrap()
}

fn punctured(n: u32) -> CiliatedSurface {
    CiliatedSurface::punctured_polygon(n).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Triangulations of an n-gon, by the Catalan recursion.
fn catalan_count(n: u64) -> u64 {
    binomial(2 * (n - 2), n - 2) / (n - 1)
}

/// Triangulations of a once-punctured n-gon.
fn punctured_count(n: u64) -> u64 {
    binomial(2 * n - 1, n)
}

/// All finite-type surfaces with nonempty complex in the desk range.
fn finite_instances() -> Vec<CiliatedSurface> {
    (4..=9).map(polygon).chain((1..=6).map(punctured)).collect()
}

fn annulus_window() -> (CiliatedSurface, u32) {
    (CiliatedSurface::annulus_one_one(), 4)
}

fn one_skeleton_diameter(c: &SimplicialComplex) -> Option<usize> {
    diameter(&c.adjacency())
}

fn c1_low_dimensional() -> Check {
    for p in 1..=3 {
        let s = surf(&format!("0,1,0;{p}"));
        ensure(s.classify().tag == ClassTag::Empty, || format!("{s} not classified Empty"))?;
        let err = build_arc_complex(&s, None).err();
        ensure(matches!(err, Some(Error::EmptyComplex(_)) | Some(Error::NegativeCount { .. })), || {
            format!("{s} built a complex: {err:?}")
        })?;
    }
    let mono = build_arc_complex(&punctured(1), None).map_err(|e| e.to_string())?;
    ensure(mono.vertices().len() == 1 && mono.edges().is_empty(), || "monogon is not a single vertex".into())?;
    let square = build_arc_complex(&polygon(4), None).map_err(|e| e.to_string())?;
    ensure(square.vertices().len() == 2 && square.edges().is_empty(), || "square is not two disjoint vertices".into())?;
    let pent = build_arc_complex(&polygon(5), None).map_err(|e| e.to_string())?;
    ensure(one_skeleton_diameter(&pent) == Some(2), || format!("pentagon diameter {:?}", one_skeleton_diameter(&pent)))?;
    let digon = build_arc_complex(&punctured(2), None).map_err(|e| e.to_string())?;
    ensure(one_skeleton_diameter(&digon) == Some(3), || format!("digon diameter {:?}", one_skeleton_diameter(&digon)))?;
    let (ann, w) = annulus_window();
    let window = build_arc_complex(&ann, Some(w)).map_err(|e| e.to_string())?;
    let adj = window.adjacency();
    let expected: Vec<Arc> = (-(w as i64)..=w as i64).map(Arc::Winding).collect();
    ensure(window.vertices() == expected.as_slice(), || "annulus window vertices".into())?;
    for (i, nb) in adj.iter().enumerate() {
        let interior = i > 0 && i + 1 < adj.len();
        let want: BTreeSet<usize> = [i.checked_sub(1), Some(i + 1).filter(|&j| j < adj.len())].into_iter().flatten().collect();
        let got: BTreeSet<usize> = nb.iter().copied().collect();
        ensure(got == want && (!interior || nb.len() == 2), || format!("annulus vertex {i} neighbours {nb:?}"))?;
    }
    Ok(format!("empty p<=3, monogon 1 vertex, square 2 isolated, pentagon d=2, digon d=3, annulus path of {}", adj.len()))
}

fn c2_counting() -> Check {
    let mut total = 0;
    for s in finite_instances() {
        let n = s.arc_count().map_err(|e| e.to_string())?;
        let formula = 6 * s.genus() as i64 + 3 * s.boundary_count() as i64 + 3 * s.puncture_count() as i64
            + s.total_marked() as i64
            - 6;
        ensure(n as i64 == formula, || format!("{s}: arc_count {n} vs {formula}"))?;
        let closure = flip_closure(&ArcModel::new(&s, None).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        for t in &closure.triangulations {
            ensure(t.arcs().len() == n, || format!("{s}: triangulation {t} has {} arcs", t.arcs().len()))?;
        }
        let m = s.marked_points()[0] as u64;
        let expected = if s.puncture_count() == 0 { catalan_count(m) } else { punctured_count(m) };
        ensure(closure.triangulations.len() as u64 == expected, || {
            format!("{s}: {} triangulations, expected {expected}", closure.triangulations.len())
        })?;
        let c = build_arc_complex(&s, None).map_err(|e| e.to_string())?;
        ensure(c.dimension() == formula - 1 && s.complex_dim() == formula - 1, || format!("{s}: dimension {}", c.dimension()))?;
        total += closure.triangulations.len();
    }
    Ok(format!("{total} triangulations over {} surfaces", finite_instances().len()))
}

fn c3_euler() -> Check {
    for n in 5..=9 {
        let c = build_arc_complex(&polygon(n), None).map_err(|e| e.to_string())?;
        let want = 1 + if n % 2 == 0 { 1 } else { -1 };
        ensure(c.euler_characteristic() == want, || format!("{n}-gon chi {}", c.euler_characteristic()))?;
    }
    let hex = build_arc_complex(&polygon(6), None).map_err(|e| e.to_string())?;
    ensure(hex.f_vector() == vec![9, 21, 14], || format!("hexagon f-vector {:?}", hex.f_vector()))?;
    ensure(hex.euler_characteristic() == 2, || "hexagon chi".into())?;
    Ok("chi = 1+(-1)^n for n=5..9, hexagon (9,21,14)".into())
}

fn c4_structure() -> Check {
    let mut instances: Vec<(CiliatedSurface, Option<u32>)> = finite_instances().into_iter().map(|s| (s, None)).collect();
    let (ann, w) = annulus_window();
    instances.push((ann, Some(w)));
    let mut edges = 0;
    for (s, bound) in instances {
        let c = build_arc_complex(&s, bound).map_err(|e| e.to_string())?;
        ensure(c.is_pure(), || format!("{s}: not pure"))?;
        let worst = c.codim1_incidence().values().copied().max().unwrap_or(0);
        ensure(worst <= 2, || format!("{s}: codim-1 face in {worst} facets"))?;
        let g = build_flip_graph(&s, bound).map_err(|e| e.to_string())?;
        ensure(g.is_connected(), || format!("{s}: flip graph disconnected"))?;
        let model = ArcModel::new(&s, bound).map_err(|e| e.to_string())?;
        let closure = flip_closure(&model).map_err(|e| e.to_string())?;
        for &(i, j, a, b) in &closure.flips {
            let there = &closure.triangulations[i];
            let back = closure.triangulations[j].flip(&b).map_err(|e| e.to_string())?;
            ensure(&back == there, || format!("{s}: flipping {b} does not undo {a}"))?;
            let iota = model.iota(&a, &b).map_err(|e| e.to_string())?;
            ensure(iota == 1, || format!("{s}: iota({a},{b}) = {iota}"))?;
            edges += 1;
        }
    }
    Ok(format!("pure, codim-1 <= 2, connected, involutive, iota=1 on {edges} flip edges"))
}

fn c5_rigidity() -> Check {
    let mut lines = Vec::new();
    let cases = [polygon(6), polygon(7), polygon(8), punctured(3), punctured(4)];
    for s in cases {
        let start = Instant::now();
        let r = rigidity_report(&s, SearchLimits::default()).map_err(|e| format!("{s}: {e}"))?;
        let two_n = 2 * s.marked_points()[0] as usize;
        ensure(r.aut_a == two_n && r.mod_image == two_n && r.equal, || format!("{s}: {r:?}"))?;
        ensure(r.kernel_trivial && r.contained && r.simplicial, || format!("{s}: {r:?}"))?;
        ensure(start.elapsed() < Duration::from_secs(60), || format!("{s}: {:?}", start.elapsed()))?;
        lines.push(format!("{s} {two_n}"));
    }
    let pent = rigidity_report(&polygon(5), SearchLimits::default()).map_err(|e| e.to_string())?;
    ensure(pent.aut_a == 10 && pent.low_dimensional, || format!("pentagon: {pent:?}"))?;
    Ok(format!("|Aut| = |Mod image| = 2n for [{}], kernel trivial; pentagon |Aut| = 10 (dim 1)", lines.join(", ")))
}

fn c6_flip_graph_aut() -> Check {
    let mut out = Vec::new();
    for s in [polygon(5), polygon(6), punctured(3)] {
        let r = flipgraph_aut_check(&s, SearchLimits::default()).map_err(|e| format!("{s}: {e}"))?;
        ensure(r.equal, || format!("{s}: {r:?}"))?;
        out.push(format!("{s} {}", r.aut_f));
    }
    Ok(format!("|Aut F| = |Aut A| for [{}]", out.join(", ")))
}

fn c7_distinguish() -> Check {
    let lim = SearchLimits::default();
    let r = distinguish(&polygon(6), &punctured(3), lim).map_err(|e| e.to_string())?;
    ensure(!r.isomorphic && r.invariants_a.vertices == 9 && r.invariants_b.vertices == 9, || format!("{r:?}"))?;
    let small: Vec<CiliatedSurface> = finite_instances()
        .into_iter()
        .filter(|s| s.arc_count().map(|_| true).unwrap_or(false))
        .filter(|s| ArcModel::new(s, None).and_then(|m| m.arcs()).map(|a| a.len() <= 9).unwrap_or(false))
        .collect();
    let mut pairs = 0;
    for (i, a) in small.iter().enumerate() {
        for b in &small[i + 1..] {
            let r = distinguish(a, b, lim).map_err(|e| format!("{a} vs {b}: {e}"))?;
            ensure(!r.same_homeo_type && !r.isomorphic, || format!("{a} vs {b}: {r:?}"))?;
            ensure(matches!(r.certificate, Certificate::Invariants | Certificate::Search), || format!("{a} vs {b}"))?;
            pairs += 1;
        }
        let same = distinguish(a, a, lim).map_err(|e| e.to_string())?;
        ensure(same.isomorphic, || format!("{a} not isomorphic to itself"))?;
    }
    Ok(format!("hexagon vs punctured triangle certified ({:?}); {pairs} unequal pairs among {} surfaces", r.certificate, small.len()))
}

fn random_skew(rng: &mut ChaCha8Rng) -> Seed {
    let n = rng.random_range(1..=8);
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let x = rng.random_range(-3..=3);
            m[i][j] = x;
            m[j][i] = -x;
        }
    }
    Seed::new((0..n).map(|i| format!("x{i}")).collect(), m).expect("skew-symmetric by construction")
}

fn c8_cluster() -> Check {
    let mut seeds = 0;
    for n in 4..=9 {
        let closure = flip_closure(&ArcModel::new(&polygon(n), None).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        for t in &closure.triangulations {
            let b = b_matrix(t).map_err(|e| e.to_string())?;
            ensure(b.is_skew_symmetric() && b.max_abs_entry() <= 1, || format!("{t}: {b}"))?;
            seeds += 1;
        }
    }
    let annulus: GluedTriangulation =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/annulus21.tri"))
            .map_err(|e| e.to_string())?
            .parse()
            .map_err(|e: Error| e.to_string())?;
    for t in ball(&annulus, 3).map_err(|e| e.to_string())?.states {
        ensure(b_matrix_glued(&t).map_err(|e| e.to_string())?.is_skew_symmetric(), || format!("{t}"))?;
        seeds += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let s = random_skew(&mut rng);
        let k = rng.random_range(0..s.rank());
        let once = mutate(&s, k).map_err(|e| e.to_string())?;
        ensure(once.is_skew_symmetric(), || format!("mutation broke skew-symmetry of {s}"))?;
        ensure(mutate(&once, k).map_err(|e| e.to_string())?.matrix == s.matrix, || format!("not involutive at {k}: {s}"))?;
    }
    let mut edges = 0;
    for n in 4..=9 {
        let r = exchange_check(&polygon(n)).map_err(|e| e.to_string())?;
        ensure(r.all_verified(), || format!("{n}-gon: {}/{} {:?}", r.verified, r.edges, r.counterexample))?;
        edges += r.edges;
    }
    Ok(format!("{seeds} skew-symmetric seeds, 1000 involutive mutations, {edges}/{edges} flip edges match mutation"))
}

fn c9_oracles() -> Check {
    let mut instances: Vec<(CiliatedSurface, Option<u32>)> = finite_instances().into_iter().map(|s| (s, None)).collect();
    let (ann, w) = annulus_window();
    instances.push((ann, Some(w)));
    for (s, bound) in &instances {
        let model = ArcModel::new(s, *bound).map_err(|e| e.to_string())?;
        let by_flips: Vec<Vec<Arc>> =
            flip_closure(&model).map_err(|e| e.to_string())?.triangulations.iter().map(|t| t.arcs().to_vec()).collect();
        let direct = maximal_compatible_sets(&model).map_err(|e| e.to_string())?;
        ensure(by_flips == direct, || format!("{s}: {} facets by flips, {} by compatibility", by_flips.len(), direct.len()))?;
        build_arc_complex(s, *bound).map_err(|e| format!("{s}: {e}"))?;
    }
    Ok(format!("flip closure = compatibility cliques on {} instances", instances.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 low-dimensional table", c1_low_dimensional, Duration::from_secs(1)),
        ("2 counting formulas", c2_counting, Duration::from_secs(10)),
        ("3 sphere Euler characteristic", c3_euler, Duration::from_secs(10)),
        ("4 structural properties", c4_structure, Duration::from_secs(30)),
        ("5 rigidity at desk scale", c5_rigidity, Duration::from_secs(300)),
        ("6 flip graph automorphisms", c6_flip_graph_aut, Duration::from_secs(60)),
        ("7 complexes distinguish surfaces", c7_distinguish, Duration::from_secs(120)),
        ("8 cluster dictionary", c8_cluster, Duration::from_secs(30)),
        ("9 oracle agreement", c9_oracles, Duration::MAX),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({elapsed:.2?}): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name} ({elapsed:.2?}): {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
