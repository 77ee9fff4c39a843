//! Acceptance criteria 1 to 8. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.
//!
//! Tolerances: exact rational equality everywhere except the angle checks of
//! criterion 4, which use 1e-6 degrees per angle and 1e-9 on the angle sum.

use std::collections::BTreeSet;
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tetra::census::{run_census, samples, CensusConfig};
use tetra::classify::{classify, symmetry_chirality, Adjacency, ClassVerdict, TypeVector};
use tetra::extremal::{
    check_hypothesis1, check_hypothesis2, edge_lengths_on_line, extremal_set, ExtremalLabel,
};
use tetra::families::{
    gen_555_left, gen_anticirculant, gen_circulant, gen_gamma_delta, registry, REGISTRY_NAMES,
};
use tetra::line::{line_type, minors, tropical_line, LineType};
use tetra::matrix::{ProjectivePoint, PAIRS};
use tetra::oracle;
use tetra::polytrope::{alpha_degrees, angle_vector, beta_degrees, polytrope_of, Handedness, Shape};
use tetra::rational::r;
use tetra::{tdist, KleeneMatrix};

const ANGLE_TOL: f64 = 1e-6;
const SUM_TOL: f64 = 1e-9;
const CENSUS: CensusConfig = CensusConfig { samples: 10_000, range: 50, seed: 1, jobs: 4 };
const ORACLE_SAMPLES: usize = 1_000;
const PLUECKER_PAIRS: usize = 10_000;

/// Collects failed expectations for one criterion.
#[derive(Default)]
struct Check {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Check {
    fn ensure(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }

    fn run(f: impl FnOnce(&mut Check) -> tetra::Result<()>) -> Check {
        let mut c = Check::default();
        if let Err(e) = f(&mut c) {
            c.failures.push(format!("error: {e}"));
        }
        c
    }
}

fn label(s: &str) -> ExtremalLabel {
    s.parse().expect("valid label")
}

fn labels(items: &[&str]) -> BTreeSet<ExtremalLabel> {
    items.iter().map(|s| label(s)).collect()
}

fn right555() -> Shape {
    Shape::Triple555 { handedness: Handedness::Right }
}

fn left555() -> Shape {
    Shape::Triple555 { handedness: Handedness::Left }
}

fn shape_at(v: &ClassVerdict, at: &str) -> Option<Shape> {
    v.configuration(label(at)).map(|c| c.shape)
}

fn criterion1(c: &mut Check) -> tetra::Result<()> {
    let a = registry("drum")?;
    let p = polytrope_of(&a)?;
    let fv = p.f_vector;
    c.ensure((fv.vertices, fv.edges, fv.facets) == (8, 14, 8), format!("f-vector {fv}"));
    c.ensure(p.polygon_vector.0 == [4, 4, 0, 0], format!("polygon-vector {}", p.polygon_vector));
    let types = p.extremals.line_types();
    let expect = [
        LineType::Split13_24, // L12
        LineType::Split12_34, // L13
        LineType::Split12_34, // L14
        LineType::Split12_34, // L23
        LineType::Split12_34, // L24
        LineType::Split13_24, // L34
    ];
    c.ensure(types == expect, format!("line types {types:?}"));
    let h2 = check_hypothesis2(&a);
    c.ensure(!h2.passes(), "hypothesis 2 passes");
    c.ensure(h2.failing.iter().any(|w| w.to_string() == "adiff(13;12)=0"), "adiff(13;12) not reported");
    c.note(format!("f={fv} p={}", p.polygon_vector));
    Ok(())
}

fn criterion2(c: &mut Check) -> tetra::Result<()> {
    let a = gen_gamma_delta(r(1), r(1), r(2))?;
    c.ensure(check_hypothesis1(&a).passes() && check_hypothesis2(&a).passes(), "hypotheses fail");
    let v = classify(&a)?;
    c.ensure(v.class_id == 1, format!("class {}", v.class_id));
    c.ensure(v.type_vector == TypeVector([2, 2, 2]), format!("type-vector {}", v.type_vector));
    c.ensure(v.polygon_vector.0 == [0, 3, 6, 3], format!("polygon-vector {}", v.polygon_vector));
    c.ensure(shape_at(&v, "123") == Some(right555()), "123 is not (5.5.5) right");
    c.ensure(shape_at(&v, "4") == Some(right555()), "4 is not (5.5.5) right");
    let p = polytrope_of(&a)?;
    match p.facet_by_equation("X3 = -2") {
        Some(f) => c.ensure(
            f.label_set() == labels(&["4", "124", "14", "41", "42"]),
            format!("facet X3 = -2 has {:?}", f.cycle),
        ),
        None => c.ensure(false, "no facet X3 = -2"),
    }
    c.note(format!("class {} t={} p={}", v.class_id, v.type_vector, v.polygon_vector));
    Ok(())
}

fn criterion3(c: &mut Check) -> tetra::Result<()> {
    let a = gen_circulant(r(3), r(4), r(6))?;
    let v = classify(&a)?;
    c.ensure(v.class_id == 5, format!("circ(3,4,6) class {}", v.class_id));
    c.ensure(v.type_vector == TypeVector([1, 4, 1]), format!("circ(3,4,6) type-vector {}", v.type_vector));
    let set = extremal_set(&a)?;
    let v13 = set.get(label("13"));
    let v31 = set.get(label("31"));
    c.ensure(v13 == ProjectivePoint::from_ints([6, 3, 3, 0]), format!("13 = {v13}"));
    c.ensure(v31 == ProjectivePoint::from_ints([0, -3, 3, 0]), format!("31 = {v31}"));
    c.ensure(tdist(&v13, &v31) == r(6), "tdist(13,31) != 6");
    let g1 = set.get(label("1"));
    c.ensure(tdist(&g1, &v13) == r(1) && g1.euclidean_sq(&v13) == r(1), "dist(1,13) != 1");
    c.ensure(
        v.hexes.hexagon_count == 4 && v.hexes.adjacency == Adjacency::Cycle4,
        format!("hexagons {} {:?}", v.hexes.hexagon_count, v.hexes.adjacency),
    );

    let b = classify(&gen_circulant(r(3), r(5), r(6))?)?;
    c.ensure(b.class_id == 4, format!("circ(3,5,6) class {}", b.class_id));
    c.ensure(b.type_vector == TypeVector([3, 0, 3]), format!("circ(3,5,6) type-vector {}", b.type_vector));

    let anti = gen_anticirculant(r(3), r(4), r(6))?;
    let s = symmetry_chirality(&anti);
    let d = classify(&anti)?;
    c.ensure(d.class_id == 6, format!("anti(3,4,6) class {}", d.class_id));
    c.ensure(d.centrally_symmetric && s.centrally_symmetric, "anti(3,4,6) not centrally symmetric");
    c.note(format!("classes {}/{}/{}", v.class_id, b.class_id, d.class_id));
    Ok(())
}

/// Cyclic equality up to rotation and reflection, within `tol`.
fn cyclic_close(got: &[f64], want: &[f64], tol: f64) -> bool {
    let n = want.len();
    if got.len() != n {
        return false;
    }
    let rev: Vec<f64> = got.iter().rev().copied().collect();
    [got.to_vec(), rev].iter().any(|g| (0..n).any(|s| (0..n).all(|k| (g[(k + s) % n] - want[k]).abs() <= tol)))
}

fn criterion4(c: &mut Check) -> tetra::Result<()> {
    for name in ["b15", "b15-prime"] {
        let a = registry(name)?;
        let v = classify(&a)?;
        c.ensure(v.class_id == 3, format!("{name} class {}", v.class_id));
        c.ensure(v.polygon_vector.0 == [0, 2, 8, 2], format!("{name} polygon-vector {}", v.polygon_vector));
        c.ensure(
            v.hexes.hexagon_count == 2 && v.hexes.adjacency == Adjacency::OnePair,
            format!("{name} hexagons {} {:?}", v.hexes.hexagon_count, v.hexes.adjacency),
        );
    }

    let p = polytrope_of(&registry("b15")?)?;
    let hex: Vec<String> = p.hexagons().iter().map(|f| f.equation.clone()).collect();
    c.ensure(hex.len() == 2, format!("hexagons {hex:?}"));
    let h1 = p.facet_by_equation("X2 - X3 = 4");
    let h2 = p.facet_by_equation("X1 = -1");
    match (h1, h2) {
        (Some(f), Some(g)) => {
            c.ensure(f.label_set() == labels(&["2", "12", "21", "24", "42", "124"]), format!("X2 - X3 = 4: {:?}", f.cycle));
            c.ensure(g.label_set() == labels(&["4", "24", "34", "42", "43", "234"]), format!("X1 = -1: {:?}", g.cycle));
            let shared: BTreeSet<_> = f.edges().map(|(x, y)| (x.min(y), x.max(y))).collect();
            let common: Vec<_> = g.edges().map(|(x, y)| (x.min(y), x.max(y))).filter(|e| shared.contains(e)).collect();
            c.ensure(common == vec![(label("24"), label("42"))], format!("shared edges {common:?}"));

            let angles = angle_vector(&p, f);
            let (al, be) = (alpha_degrees(), beta_degrees());
            c.ensure((al - 125.2644).abs() < 1e-4 && (be - 144.7356).abs() < 1e-4, format!("alpha {al} beta {be}"));
            c.ensure(cyclic_close(&angles, &[90.0, al, be, 90.0, al, be], ANGLE_TOL), format!("angles {angles:?}"));
            let sum: f64 = angles.iter().sum();
            c.ensure((sum - 720.0).abs() <= SUM_TOL, format!("angle sum {sum}"));
        }
        _ => c.ensure(false, "hexagon planes missing"),
    }
    for eq in ["X1 - X2 = -7", "X3 = -7"] {
        c.ensure(p.facet_by_equation(eq).map(|f| f.gon) == Some(4), format!("{eq} is not a quadrangle"));
    }
    let mut sizes: Vec<usize> = p.facets_at(label("24")).iter().map(|f| f.gon).collect();
    sizes.sort_unstable();
    c.ensure(sizes == [4, 6, 6], format!("facet sizes at 24: {sizes:?}"));
    c.note(format!("hexagons on {}", hex.join(" and ")));
    Ok(())
}

fn criterion5(c: &mut Check) -> tetra::Result<()> {
    let v = classify(&registry("aa191")?)?;
    c.ensure(v.class_id == 2, format!("class {}", v.class_id));
    c.ensure(shape_at(&v, "123") == Some(left555()), "123 is not (5.5.5) left");
    let at4 = v.configuration(label("4")).map(ToString::to_string);
    c.ensure(at4.as_deref() == Some("(6.5.4)"), format!("4 is {at4:?}"));
    c.ensure(v.polygon_vector.0 == [0, 3, 6, 3], format!("polygon-vector {}", v.polygon_vector));
    c.note(format!("123 {}, 4 {}", v.configurations[0], at4.unwrap_or_default()));
    Ok(())
}

fn family_instances() -> tetra::Result<Vec<(String, KleeneMatrix)>> {
    let mut out: Vec<(String, KleeneMatrix)> =
        REGISTRY_NAMES.iter().map(|n| Ok((n.to_string(), registry(n)?))).collect::<tetra::Result<_>>()?;
    out.push(("gammadelta 1 1 2".into(), gen_gamma_delta(r(1), r(1), r(2))?));
    out.push(("gammadelta 1 2 3".into(), gen_gamma_delta(r(1), r(2), r(3))?));
    out.push(("circulant 3 4 6".into(), gen_circulant(r(3), r(4), r(6))?));
    out.push(("circulant 3 5 6".into(), gen_circulant(r(3), r(5), r(6))?));
    out.push(("anticirculant 3 4 6".into(), gen_anticirculant(r(3), r(4), r(6))?));
    out.push(("anticirculant 3 5 6".into(), gen_anticirculant(r(3), r(5), r(6))?));
    out.push(("555left".into(), gen_555_left([r(2); 3], [r(1); 3], r(6), r(6), r(6))?));
    Ok(out)
}

fn criterion6(c: &mut Check) -> tetra::Result<()> {
    let named = family_instances()?;
    for (name, a) in &named {
        let rep = oracle::cross_validate(a);
        c.ensure(rep.ok(), format!("{name}: {:?}", rep.mismatches));
    }
    let mut bad = 0;
    let mut maximal = 0;
    for a in samples(CENSUS.seed, CENSUS.range, ORACLE_SAMPLES) {
        if extremal_set(&a)?.maximal {
            maximal += 1;
        }
        if !oracle::cross_validate(&a).ok() {
            bad += 1;
        }
    }
    c.ensure(bad == 0, format!("{bad} random samples disagree"));
    // Negative control: a shifted vertex must be caught.
    let mut p = polytrope_of(&registry("b15")?)?;
    let l = label("124");
    let mut x = *p.extremals.points[&l].coords();
    x[1] += r(1);
    p.extremals.points.insert(l, ProjectivePoint::new(x));
    c.ensure(!oracle::compare(&p).ok(), "corrupted vertex not detected");
    c.note(format!("{} named + {ORACLE_SAMPLES} random ({maximal} maximal), 0 mismatches required", named.len()));
    Ok(())
}

fn criterion7(c: &mut Check) -> tetra::Result<()> {
    let rep = run_census(CENSUS)?;
    for v in rep.violations.iter().take(5) {
        c.ensure(false, format!("sample {}: {}", v.sample, v.problem));
    }
    c.ensure(rep.violations.is_empty(), format!("{} violations", rep.violations.len()));
    for pv in rep.polygon_vectors.keys() {
        c.ensure(["(0,2,8,2)", "(0,3,6,3)", "(0,4,4,4)"].contains(&pv.as_str()), format!("polygon-vector {pv}"));
    }
    for t in rep.type_multisets.keys() {
        c.ensure(["{2,2,2}", "{3,2,1}", "{3,3,0}", "{4,1,1}", "{4,2,0}"].contains(&t.as_str()), format!("type {t}"));
    }
    c.ensure(rep.all_classes_seen(), "not all six classes observed");
    let counts: Vec<String> = (1..=6).map(|k| format!("{k}:{}", rep.count(k))).collect();
    c.note(format!(
        "seed {} N {} R {} jobs {}: {} classified, classes {}; singular 3x3 minors {}",
        CENSUS.seed,
        CENSUS.samples,
        CENSUS.range,
        CENSUS.jobs,
        rep.classified,
        counts.join(" "),
        rep.minors3.singular_minors
    ));
    Ok(())
}

const PERMS: [[usize; 4]; 24] = {
    let mut out = [[0; 4]; 24];
    let mut n = 0;
    let mut a = 0;
    while a < 4 {
        let mut b = 0;
        while b < 4 {
            let mut d = 0;
            while d < 4 {
                if a != b && a != d && b != d {
                    out[n] = [a, b, d, 6 - a - b - d];
                    n += 1;
                }
                d += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
};

fn criterion8(c: &mut Check) -> tetra::Result<()> {
    // Pluecker relation and vertex membership on random pairs.
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checked = 0;
    while checked < PLUECKER_PAIRS {
        let p = ProjectivePoint::from_ints([rng.random_range(-20..=20), rng.random_range(-20..=20), rng.random_range(-20..=20), 0]);
        let q = ProjectivePoint::from_ints([rng.random_range(-20..=20), rng.random_range(-20..=20), rng.random_range(-20..=20), 0]);
        if p == q {
            continue;
        }
        checked += 1;
        let m = minors(&p, &q)?;
        let sums = m.pluecker_sums();
        let top = *sums.iter().max().unwrap();
        c.ensure(sums.iter().filter(|&&s| s == top).count() >= 2, format!("Pluecker fails for {p} {q}"));
        line_type(&m)?;
        let line = tropical_line(&p, &q)?;
        for x in line.vertices {
            c.ensure(oracle::rank2(&p, &q, &x), format!("vertex {x} of line {p} {q}"));
        }
    }

    let mut maximal: Vec<(String, KleeneMatrix)> = family_instances()?
        .into_iter()
        .filter(|(_, a)| check_hypothesis1(a).passes() && check_hypothesis2(a).passes())
        .collect();
    for (n, a) in samples(CENSUS.seed, CENSUS.range, 4_000).into_iter().enumerate() {
        if check_hypothesis1(&a).passes() && check_hypothesis2(&a).passes() {
            maximal.push((format!("sample {n}"), a));
        }
    }

    // Line vertices of every instance, and edge lengths from the adiffs.
    let mut segments = 0;
    for (name, a) in &maximal {
        let set = extremal_set(a)?;
        for (n, &(i, j)) in PAIRS.iter().enumerate() {
            let (p, q) = (a.generator(i), a.generator(j));
            for x in set.lines[n].vertices {
                c.ensure(oracle::rank2(&p, &q, &x), format!("{name}: L{}{} vertex {x}", i + 1, j + 1));
            }
            let e = edge_lengths_on_line(a, &set, i, j)?;
            c.ensure(e.agrees(), format!("{name}: L{}{} lengths {:?} vs {:?}", i + 1, j + 1, e.measured, e.predicted));
            c.ensure(e.euclidean_consistent(), format!("{name}: L{}{} Euclidean {:?}", i + 1, j + 1, e.euclidean_sq));
            segments += 3;
        }
    }

    // Relabeling and transposition invariance.
    let mut conjugates = 0;
    for (name, a) in family_instances()? {
        let base = classify(&a).ok().map(|v| v.class_id);
        for perm in PERMS {
            let got = classify(&a.conjugate(perm)).ok().map(|v| v.class_id);
            c.ensure(got == base, format!("{name} under {perm:?}: {got:?} vs {base:?}"));
            conjugates += 1;
        }
        let t = classify(&a.transpose()).ok().map(|v| v.class_id);
        c.ensure(t == base, format!("{name} transpose: {t:?} vs {base:?}"));
    }
    for (name, a) in &maximal {
        let base = classify(a)?.class_id;
        let t = classify(&a.transpose())?.class_id;
        c.ensure(t == base, format!("{name} transpose: {t} vs {base}"));
    }
    c.note(format!(
        "{PLUECKER_PAIRS} pairs, {} maximal instances, {segments} segments, {conjugates} conjugates",
        maximal.len()
    ));
    Ok(())
}

type Criterion = fn(&mut Check) -> tetra::Result<()>;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("drum", criterion1),
        ("gamma-delta (1,1,2)", criterion2),
        ("circulants", criterion3),
        ("B15 and A'", criterion4),
        ("AA191", criterion5),
        ("oracle equivalence", criterion6),
        ("census invariants", criterion7),
        ("property suites", criterion8),
    ];
    let mut all = true;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let c = Check::run(f);
        let ok = c.failures.is_empty();
        all &= ok;
        let detail = if ok { c.notes.join("; ") } else { c.failures.iter().take(5).cloned().collect::<Vec<_>>().join("; ") };
        println!(
            "criterion {}: {} [{name}] ({:.2}s) {detail}",
            n + 1,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
