//! Brute-force validators that share nothing with the engine beyond the
//! scalar, matrix and point types: classical vertex enumeration of the
//! twelve-inequality polytope, a residuation membership test and a rank-2
//! test built from 3×3 tropical determinants.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::Serialize;

use crate::matrix::{Matrix4, ProjectivePoint};
use crate::maxplus::trop_det;
use crate::polytrope::Polytrope;
use crate::rational::Rational;

/// `x_i - x_j >= a_ij` as `(coefficients in the chart, right-hand side)`.
fn halfspaces(a: &Matrix4) -> Vec<([Rational; 3], Rational, (usize, usize))> {
    let mut out = Vec::with_capacity(12);
    for i in 0..4 {
        for j in 0..4 {
            if i == j {
                continue;
            }
            let mut row = [Rational::ZERO; 3];
            if i < 3 {
                row[i] += Rational::ONE;
            }
            if j < 3 {
                row[j] -= Rational::ONE;
            }
            out.push((row, a[(i, j)], (i, j)));
        }
    }
    out
}

fn satisfies(a: &Matrix4, x: &[Rational; 3]) -> bool {
    halfspaces(a).iter().all(|(row, rhs, _)| dot(row, x) >= *rhs)
}

fn dot(u: &[Rational; 3], v: &[Rational; 3]) -> Rational {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

/// Gauss-Jordan elimination on a 3×3 system; `None` when singular.
fn solve3(mut m: [[Rational; 4]; 3]) -> Option<[Rational; 3]> {
    for c in 0..3 {
        let piv = (c..3).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, piv);
        let p = m[c][c];
        for x in m[c].iter_mut() {
            *x = *x / p;
        }
        let pivot_row = m[c];
        for (r, row) in m.iter_mut().enumerate() {
            if r != c && !row[c].is_zero() {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    Some([m[0][3], m[1][3], m[2][3]])
}

/// Every feasible intersection point of three of the twelve planes.
pub fn vertex_enum(a: &Matrix4) -> BTreeSet<ProjectivePoint> {
    let hs = halfspaces(a);
    let mut out = BTreeSet::new();
    for (p, q, r) in hs.iter().tuple_combinations() {
        let m = [
            [p.0[0], p.0[1], p.0[2], p.1],
            [q.0[0], q.0[1], q.0[2], q.1],
            [r.0[0], r.0[1], r.0[2], r.1],
        ];
        if let Some(x) = solve3(m) {
            if satisfies(a, &x) {
                out.insert(ProjectivePoint::from_chart(x));
            }
        }
    }
    out
}

/// Residuation: `λ_k = min_i (x_i - α_ik)` shifted so that `max λ = 0`; the
/// point is in the span iff the combination `max_k λ_k + α_ik` reproduces
/// it projectively.
pub fn span_membership(a: &Matrix4, x: &ProjectivePoint) -> bool {
    let alpha: [[Rational; 4]; 4] =
        std::array::from_fn(|i| std::array::from_fn(|k| a[(i, k)] - a[(3, k)]));
    let mut lambda: [Rational; 4] =
        std::array::from_fn(|k| (0..4).map(|i| x[i] - alpha[i][k]).min().unwrap());
    let top = *lambda.iter().max().unwrap();
    for l in lambda.iter_mut() {
        *l -= top;
    }
    let y: [Rational; 4] =
        std::array::from_fn(|i| (0..4).map(|k| lambda[k] + alpha[i][k]).max().unwrap());
    ProjectivePoint::new(y) == *x
}

/// `x` lies on the tropical line through `p` and `q` iff every 3×3 minor of
/// the 4×3 matrix `[p q x]` is tropically singular.
pub fn rank2(p: &ProjectivePoint, q: &ProjectivePoint, x: &ProjectivePoint) -> bool {
    (0..4).all(|o| {
        let rows: Vec<[Rational; 3]> = (0..4).filter(|&r| r != o).map(|r| [p[r], q[r], x[r]]).collect();
        trop_det(&rows).map(|d| d.attain_count >= 2).unwrap_or(false)
    })
}

/// Face lattice summary computed from the vertex set alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleFaces {
    pub vertices: BTreeSet<ProjectivePoint>,
    /// Tight vertex sets of the planes carrying at least three vertices,
    /// keyed by the ordered pair of the inequality.
    pub facets: BTreeMap<(usize, usize), BTreeSet<ProjectivePoint>>,
    pub edges: BTreeSet<(ProjectivePoint, ProjectivePoint)>,
    pub f_vector: (usize, usize, usize),
    pub polygon_vector: [usize; 4],
}

fn rank_of(rows: &[[Rational; 3]]) -> usize {
    // Small exact rank by elimination.
    let mut m: Vec<[Rational; 3]> = rows.to_vec();
    let mut rank = 0;
    for c in 0..3 {
        if let Some(piv) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) {
            m.swap(rank, piv);
            let pivot_row = m[rank];
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && !row[c].is_zero() {
                    let f = row[c] / pivot_row[c];
                    for (x, y) in row.iter_mut().zip(pivot_row) {
                        *x -= f * y;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

pub fn faces(a: &Matrix4) -> OracleFaces {
    let vertices = vertex_enum(a);
    let hs = halfspaces(a);
    let tight = |x: &ProjectivePoint| -> Vec<usize> {
        let c = x.chart();
        (0..hs.len()).filter(|&h| dot(&hs[h].0, &c) == hs[h].1).collect()
    };
    let tight_sets: BTreeMap<ProjectivePoint, Vec<usize>> = vertices.iter().map(|v| (*v, tight(v))).collect();

    let mut facets = BTreeMap::new();
    let mut seen: BTreeSet<BTreeSet<ProjectivePoint>> = BTreeSet::new();
    for (h, (_, _, key)) in hs.iter().enumerate() {
        let on: BTreeSet<ProjectivePoint> =
            vertices.iter().filter(|v| tight_sets[*v].contains(&h)).copied().collect();
        if on.len() >= 3 && seen.insert(on.clone()) {
            facets.insert(*key, on);
        }
    }
    let mut edges = BTreeSet::new();
    for (u, v) in vertices.iter().tuple_combinations() {
        let common: Vec<[Rational; 3]> =
            tight_sets[u].iter().filter(|h| tight_sets[v].contains(h)).map(|&h| hs[h].0).collect();
        if rank_of(&common) == 2 {
            edges.insert((*u, *v));
        }
    }
    let mut polygon_vector = [0; 4];
    for f in facets.values() {
        if (3..=6).contains(&f.len()) {
            polygon_vector[f.len() - 3] += 1;
        }
    }
    let f_vector = (vertices.len(), edges.len(), facets.len());
    OracleFaces { vertices, facets, edges, f_vector, polygon_vector }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossReport {
    pub mismatches: Vec<String>,
}

impl CrossReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares an engine result against the oracle: vertex sets, facet
/// tightness patterns, edges, f-vector, polygon-vector and the rank-2 test
/// for every line vertex.
pub fn compare(engine: &Polytrope) -> CrossReport {
    let a = engine.matrix.matrix();
    let o = faces(a);
    let mut mismatches = Vec::new();

    let candidates: BTreeSet<ProjectivePoint> = engine.extremals.points.values().copied().collect();
    if candidates != o.vertices {
        let extra: Vec<String> = candidates.difference(&o.vertices).map(ToString::to_string).collect();
        let missing: Vec<String> = o.vertices.difference(&candidates).map(ToString::to_string).collect();
        mismatches.push(format!(
            "vertex sets differ: engine-only [{}], oracle-only [{}]",
            extra.join(", "),
            missing.join(", ")
        ));
    }
    let engine_vertices: BTreeSet<ProjectivePoint> = engine.vertices.iter().map(|v| v.point).collect();
    if engine_vertices != candidates {
        mismatches.push("engine discarded some extremal candidates as non-vertices".into());
    }

    let engine_f = engine.f_vector;
    if (engine_f.vertices, engine_f.edges, engine_f.facets) != o.f_vector {
        mismatches.push(format!("f-vector engine {engine_f} oracle {:?}", o.f_vector));
    }
    if engine.polygon_vector.0 != o.polygon_vector {
        mismatches.push(format!("polygon-vector engine {} oracle {:?}", engine.polygon_vector, o.polygon_vector));
    }

    let engine_facets: BTreeSet<BTreeSet<ProjectivePoint>> = engine
        .facets
        .iter()
        .map(|f| f.cycle.iter().map(|&l| engine.point(l)).collect())
        .collect();
    let oracle_facets: BTreeSet<BTreeSet<ProjectivePoint>> = o.facets.values().cloned().collect();
    if engine_facets != oracle_facets {
        mismatches.push("facet tightness patterns differ".into());
    }
    for f in &engine.facets {
        if let Some(set) = o.facets.get(&(f.plane.i, f.plane.j)) {
            let mine: BTreeSet<ProjectivePoint> = f.cycle.iter().map(|&l| engine.point(l)).collect();
            if &mine != set {
                mismatches.push(format!("facet {} differs from the oracle", f.equation));
            }
        }
    }

    let engine_edges: BTreeSet<(ProjectivePoint, ProjectivePoint)> = engine
        .edges
        .iter()
        .map(|e| {
            let (p, q) = (engine.point(e.a), engine.point(e.b));
            (p.min(q), p.max(q))
        })
        .collect();
    if engine_edges != o.edges {
        mismatches.push(format!("edge sets differ ({} engine, {} oracle)", engine_edges.len(), o.edges.len()));
    }

    for (n, &(i, j)) in crate::matrix::PAIRS.iter().enumerate() {
        let p = a.column_point(i);
        let q = a.column_point(j);
        if p == q {
            continue;
        }
        for v in engine.extremals.lines[n].vertices {
            if !rank2(&p, &q, &v) {
                mismatches.push(format!("vertex {v} of L{}{} fails the oracle rank-2 test", i + 1, j + 1));
            }
        }
    }
    for v in &engine.vertices {
        if !span_membership(a, &v.point) {
            mismatches.push(format!("{} is not in the span", v.label));
        }
    }
    CrossReport { mismatches }
}

/// Runs the engine on `a` and compares.
pub fn cross_validate(a: &crate::maxplus::KleeneMatrix) -> CrossReport {
    match crate::polytrope::polytrope_of(a) {
        Ok(p) => compare(&p),
        Err(e) => CrossReport { mismatches: vec![format!("engine failed: {e}")] },
    }
}
