//! The span as a classical polytope cut out by twelve inequalities
//! `x_i - x_j >= a_ij` (with `x_4 = 0`): facets, edges, f-vector and
//! polygon-vector, and the configurations at oddly generated extremals.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TetraError};
use crate::extremal::{ExtremalLabel, ExtremalSet};
use crate::line::{Direction, LineType};
use crate::matrix::{pair_index, ProjectivePoint};
use crate::maxplus::{normalize_chart, tdist, KleeneMatrix};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PlaneKind {
    /// `X_i` bounded, `i` in 0..3.
    Coordinate { i: usize, bound: Bound },
    /// `X_i - X_j` bounded, `(i, j)` one of (1,2), (2,3), (3,1) 0-based.
    Difference { i: usize, j: usize, bound: Bound },
}

/// One of the twelve inequalities, stored as `x_i - x_j >= a_ij` over the
/// homogeneous coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SupportingPlane {
    pub i: usize,
    pub j: usize,
    pub bound_value: Rational,
    pub kind: PlaneKind,
    /// The right-hand side of the displayed equation.
    pub level: Rational,
}

const CANONICAL: [(usize, usize); 3] = [(0, 1), (1, 2), (2, 0)];

impl SupportingPlane {
    pub fn new(i: usize, j: usize, a_ij: Rational) -> Self {
        let (kind, level) = if j == 3 {
            (PlaneKind::Coordinate { i, bound: Bound::Lower }, a_ij)
        } else if i == 3 {
            (PlaneKind::Coordinate { i: j, bound: Bound::Upper }, -a_ij)
        } else if CANONICAL.contains(&(i, j)) {
            (PlaneKind::Difference { i, j, bound: Bound::Lower }, a_ij)
        } else {
            (PlaneKind::Difference { i: j, j: i, bound: Bound::Upper }, -a_ij)
        };
        SupportingPlane { i, j, bound_value: a_ij, kind, level }
    }

    pub fn value_at(&self, x: &ProjectivePoint) -> Rational {
        x[self.i] - x[self.j]
    }

    pub fn contains(&self, x: &ProjectivePoint) -> bool {
        self.value_at(x) >= self.bound_value
    }

    pub fn is_tight(&self, x: &ProjectivePoint) -> bool {
        self.value_at(x) == self.bound_value
    }

    /// Inward normal `e_i - e_j` in the chart.
    pub fn inward_normal(&self) -> [i64; 3] {
        let mut n = [0; 3];
        if self.i < 3 {
            n[self.i] += 1;
        }
        if self.j < 3 {
            n[self.j] -= 1;
        }
        n
    }

    pub fn equation(&self) -> String {
        match self.kind {
            PlaneKind::Coordinate { i, .. } => format!("X{} = {}", i + 1, self.level),
            PlaneKind::Difference { i, j, .. } => format!("X{} - X{} = {}", i + 1, j + 1, self.level),
        }
    }
}

impl fmt::Display for SupportingPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.equation())
    }
}

/// The twelve planes, in lexicographic order of the ordered pair `(i, j)`.
pub fn facet_planes(a: &KleeneMatrix) -> Vec<SupportingPlane> {
    let mut out = Vec::with_capacity(12);
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                out.push(SupportingPlane::new(i, j, a.get(i, j)));
            }
        }
    }
    out
}

/// Inequality test over the twelve planes.
pub fn membership(a: &KleeneMatrix, x: &ProjectivePoint) -> bool {
    facet_planes(a).iter().all(|p| p.contains(x))
}

/// Residuation test: with `λ_k = min_i (x_i - α_ik)`, `x` lies in the span
/// iff `max_k (λ_k + α_ik) = x_i` for every `i`.
pub fn membership_by_projection(a: &KleeneMatrix, x: &ProjectivePoint) -> bool {
    let alpha = normalize_chart(a.matrix());
    let lambda: [Rational; 4] =
        std::array::from_fn(|k| (0..4).map(|i| x[i] - alpha[(i, k)]).min().unwrap());
    (0..4).all(|i| (0..4).map(|k| lambda[k] + alpha[(i, k)]).max().unwrap() == x[i])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub label: ExtremalLabel,
    /// Every extremal label sitting on this point, `label` first.
    pub labels: Vec<ExtremalLabel>,
    pub point: ProjectivePoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    pub plane: SupportingPlane,
    pub equation: String,
    /// Counter-clockwise seen from outside.
    pub cycle: Vec<ExtremalLabel>,
    pub gon: usize,
}

impl Facet {
    pub fn contains(&self, label: ExtremalLabel) -> bool {
        self.cycle.contains(&label)
    }

    pub fn label_set(&self) -> BTreeSet<ExtremalLabel> {
        self.cycle.iter().copied().collect()
    }

    /// The cycle's edges as ordered pairs of consecutive labels.
    pub fn edges(&self) -> impl Iterator<Item = (ExtremalLabel, ExtremalLabel)> + '_ {
        let n = self.cycle.len();
        (0..n).map(move |k| (self.cycle[k], self.cycle[(k + 1) % n]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub a: ExtremalLabel,
    pub b: ExtremalLabel,
    pub tropical_length: Rational,
    pub euclidean_sq: Rational,
    /// Primitive direction from `a` to `b`.
    pub direction: Direction,
}

impl Edge {
    pub fn euclidean_length(&self) -> f64 {
        self.euclidean_sq.to_f64().sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FVector {
    pub vertices: usize,
    pub edges: usize,
    pub facets: usize,
}

impl FVector {
    pub fn euler(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.facets as i64
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.vertices, self.edges, self.facets)
    }
}

/// Numbers of triangles, quadrangles, pentagons and hexagons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PolygonVector(pub [usize; 4]);

impl PolygonVector {
    pub const ALLOWED: [PolygonVector; 3] =
        [PolygonVector([0, 2, 8, 2]), PolygonVector([0, 3, 6, 3]), PolygonVector([0, 4, 4, 4])];
    pub const FORBIDDEN: [PolygonVector; 2] = [PolygonVector([0, 0, 12, 0]), PolygonVector([0, 1, 10, 1])];

    pub fn hexagons(&self) -> usize {
        self.0[3]
    }
}

impl fmt::Display for PolygonVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polytrope {
    pub matrix: KleeneMatrix,
    pub extremals: ExtremalSet,
    pub vertices: Vec<Vertex>,
    pub facets: Vec<Facet>,
    pub edges: Vec<Edge>,
    pub f_vector: FVector,
    pub polygon_vector: PolygonVector,
}

/// Sign of the 2D cross product `u × v`.
fn cross2(u: (Rational, Rational), v: (Rational, Rational)) -> Rational {
    u.0 * v.1 - u.1 * v.0
}

fn cross3(u: [Rational; 3], v: [Rational; 3]) -> [Rational; 3] {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

fn dot_int(u: [Rational; 3], n: [i64; 3]) -> Rational {
    (0..3).map(|k| u[k] * Rational::from_int(n[k])).sum()
}

/// Orders the points of one facet around their centroid, exactly, and
/// orients the cycle counter-clockwise as seen from outside.
fn order_facet(
    plane: &SupportingPlane,
    members: &[(ExtremalLabel, ProjectivePoint)],
) -> Result<Vec<ExtremalLabel>> {
    let normal = plane.inward_normal();
    // Drop a coordinate along which the normal has a nonzero component.
    let drop = (0..3).find(|&k| normal[k] != 0).unwrap();
    let keep: Vec<usize> = (0..3).filter(|&k| k != drop).collect();
    let n = Rational::from_int(members.len() as i64);
    let centroid: Vec<Rational> =
        keep.iter().map(|&k| members.iter().map(|(_, p)| p[k]).sum::<Rational>() / n).collect();
    let rel = |p: &ProjectivePoint| (p[keep[0]] - centroid[0], p[keep[1]] - centroid[1]);
    let upper = |d: (Rational, Rational)| d.1.is_positive() || (d.1.is_zero() && d.0.is_positive());
    let mut sorted: Vec<(ExtremalLabel, ProjectivePoint)> = members.to_vec();
    sorted.sort_by(|(_, p), (_, q)| {
        let (dp, dq) = (rel(p), rel(q));
        match (upper(dp), upper(dq)) {
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => Rational::ZERO.cmp(&cross2(dp, dq)),
        }
    });
    // Orientation and strict convexity against the outward normal.
    let outward = normal.map(|x| -x);
    let m = sorted.len();
    let turn = |k: usize| {
        let a = sorted[k].1;
        let b = sorted[(k + 1) % m].1;
        let c = sorted[(k + 2) % m].1;
        dot_int(cross3(b.minus(&a), c.minus(&b)), outward).signum()
    };
    let signs: Vec<i32> = (0..m).map(turn).collect();
    if signs.contains(&0) || signs.iter().any(|&s| s != signs[0]) {
        return Err(TetraError::Construction(format!("facet {} is not strictly convex", plane.equation())));
    }
    let mut cycle: Vec<ExtremalLabel> = sorted.iter().map(|(l, _)| *l).collect();
    if signs[0] < 0 {
        cycle.reverse();
    }
    let start = cycle.iter().enumerate().min_by_key(|(_, l)| **l).map(|(k, _)| k).unwrap();
    cycle.rotate_left(start);
    Ok(cycle)
}

/// A candidate is a vertex when the normals of its tight planes span the
/// chart.
fn is_vertex(planes: &[SupportingPlane], x: &ProjectivePoint) -> bool {
    let normals: Vec<[Rational; 3]> = planes
        .iter()
        .filter(|p| p.is_tight(x))
        .map(|p| p.inward_normal().map(Rational::from_int))
        .collect();
    for (a, b, c) in itertools::Itertools::tuple_combinations(normals.iter()) {
        let det = cross3(*a, *b).iter().zip(c.iter()).map(|(x, y)| *x * *y).sum::<Rational>();
        if !det.is_zero() {
            return true;
        }
    }
    false
}

pub fn build_polytrope(a: &KleeneMatrix, extremals: ExtremalSet) -> Result<Polytrope> {
    let planes = facet_planes(a);
    let vertices: Vec<Vertex> = extremals
        .distinct()
        .into_iter()
        .filter(|(p, _)| is_vertex(&planes, p))
        .map(|(point, labels)| Vertex { label: labels[0], labels, point })
        .collect();

    let mut facets = Vec::new();
    for plane in &planes {
        let members: Vec<(ExtremalLabel, ProjectivePoint)> =
            vertices.iter().filter(|v| plane.is_tight(&v.point)).map(|v| (v.label, v.point)).collect();
        if members.len() < 3 {
            continue;
        }
        // A flat span lies on two opposite planes; keep the first.
        let set: BTreeSet<ExtremalLabel> = members.iter().map(|m| m.0).collect();
        if facets.iter().any(|f: &Facet| f.label_set() == set) {
            continue;
        }
        let cycle = order_facet(plane, &members)?;
        facets.push(Facet { plane: *plane, equation: plane.equation(), gon: cycle.len(), cycle });
    }

    let point_of: BTreeMap<ExtremalLabel, ProjectivePoint> =
        vertices.iter().map(|v| (v.label, v.point)).collect();
    let mut edge_keys = BTreeSet::new();
    for f in &facets {
        for (x, y) in f.edges() {
            edge_keys.insert((x.min(y), x.max(y)));
        }
    }
    let edges: Vec<Edge> = edge_keys
        .into_iter()
        .map(|(x, y)| {
            let (p, q) = (point_of[&x], point_of[&y]);
            let (direction, _) = Direction::from_vector(q.minus(&p)).expect("edge endpoints differ");
            Edge { a: x, b: y, tropical_length: tdist(&p, &q), euclidean_sq: p.euclidean_sq(&q), direction }
        })
        .collect();

    let mut pv = [0usize; 4];
    for f in &facets {
        match f.gon {
            3..=6 => pv[f.gon - 3] += 1,
            g => return Err(TetraError::Construction(format!("facet {} has {g} vertices", f.equation))),
        }
    }
    let f_vector = FVector { vertices: vertices.len(), edges: edges.len(), facets: facets.len() };
    let polytrope = Polytrope {
        matrix: a.clone(),
        extremals,
        vertices,
        facets,
        edges,
        f_vector,
        polygon_vector: PolygonVector(pv),
    };
    if polytrope.extremals.maximal {
        let problems = polytrope.invariant_violations();
        if !problems.is_empty() {
            return Err(TetraError::Inconsistent(problems.join("; ")));
        }
    }
    Ok(polytrope)
}

/// Extremals, then the polytrope.
pub fn polytrope_of(a: &KleeneMatrix) -> Result<Polytrope> {
    build_polytrope(a, crate::extremal::extremal_set(a)?)
}

/// Sizes of the three facets at an odd extremal and, for `(5.5.5)`, its
/// handedness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Handedness {
    Left,
    Right,
}

impl Handedness {
    pub fn flip(self) -> Handedness {
        match self {
            Handedness::Left => Handedness::Right,
            Handedness::Right => Handedness::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Shape {
    Triple555 { handedness: Handedness },
    TriplePqr { sizes: [usize; 3] },
}

/// The configuration at a generator or plane vertex. `sizes` lists the
/// incident facets by the other index `m` ascending: facet `x_l - x_m >=
/// a_lm` at the plane vertex omitting `l`, facet `x_m - x_l >= a_ml` at
/// generator `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Configuration {
    pub at: ExtremalLabel,
    pub sizes: [usize; 3],
    pub shape: Shape,
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, q, r] = self.sizes;
        write!(f, "({p}.{q}.{r})")?;
        if let Shape::Triple555 { handedness } = self.shape {
            write!(f, " {}", if handedness == Handedness::Left { "left" } else { "right" })?;
        }
        Ok(())
    }
}

fn is_even(perm: [usize; 4]) -> bool {
    let mut inversions = 0;
    for x in 0..4 {
        for y in x + 1..4 {
            if perm[x] > perm[y] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// Facet sizes and handedness predicted from the line types alone.
///
/// At the plane vertex omitting `l`, the line `L_ij` (both indices other
/// than `l`) adds one vertex to the facet indexed by the endpoint paired with
/// `l`. At generator `l`, the line `L_il` adds one to the facet indexed by
/// the partner of `l`. For `(5.5.5)` these choices form a 3-cycle `σ` on the
/// other indices, and the handedness is the parity of `(x, σx, σ²x, l)`:
/// even is right at a plane vertex, odd is right at a generator.
pub fn configuration_from_types(types: &[LineType; 6], at: ExtremalLabel) -> Result<Configuration> {
    let ty = |i: usize, j: usize| types[pair_index(i, j)];
    let (l, is_plane) = match at {
        ExtremalLabel::PlaneVertex { omit } => (omit, true),
        ExtremalLabel::Generator(l) => (l, false),
        ExtremalLabel::LineVertex { .. } => {
            return Err(TetraError::Index(format!("no configuration at line vertex {at}")))
        }
    };
    let others: Vec<usize> = (0..4).filter(|&m| m != l).collect();
    let mut sizes = [4usize; 3];
    let mut sigma = [usize::MAX; 4];
    let slot = |m: usize| others.iter().position(|&o| o == m).unwrap();
    if is_plane {
        for (x, &i) in others.iter().enumerate() {
            for &j in &others[x + 1..] {
                let picked = ty(i, j)
                    .partner(l)
                    .ok_or_else(|| TetraError::NonMaximal(format!("L{}{} is a tetrapod", i + 1, j + 1)))?;
                let unpicked = if picked == i { j } else { i };
                sizes[slot(picked)] += 1;
                sigma[picked] = unpicked;
            }
        }
    } else {
        for &i in &others {
            let m = ty(i, l)
                .partner(l)
                .ok_or_else(|| TetraError::NonMaximal(format!("L{}{} is a tetrapod", i.min(l) + 1, i.max(l) + 1)))?;
            sizes[slot(m)] += 1;
            sigma[i] = m;
        }
    }
    let shape = if sizes == [5, 5, 5] {
        let x = others[0];
        let seq = [x, sigma[x], sigma[sigma[x]], l];
        let right = is_even(seq) == is_plane;
        Shape::Triple555 { handedness: if right { Handedness::Right } else { Handedness::Left } }
    } else {
        Shape::TriplePqr { sizes }
    };
    Ok(Configuration { at, sizes, shape })
}

impl Polytrope {
    pub fn is_maximal(&self) -> bool {
        self.extremals.maximal
    }

    pub fn point(&self, label: ExtremalLabel) -> ProjectivePoint {
        self.extremals.get(label)
    }

    pub fn facet_on(&self, i: usize, j: usize) -> Option<&Facet> {
        self.facets.iter().find(|f| f.plane.i == i && f.plane.j == j)
    }

    pub fn facet_by_equation(&self, equation: &str) -> Option<&Facet> {
        self.facets.iter().find(|f| f.equation == equation)
    }

    pub fn facets_at(&self, label: ExtremalLabel) -> Vec<&Facet> {
        self.facets.iter().filter(|f| f.contains(label)).collect()
    }

    pub fn hexagons(&self) -> Vec<&Facet> {
        self.facets.iter().filter(|f| f.gon == 6).collect()
    }

    pub fn edge(&self, x: ExtremalLabel, y: ExtremalLabel) -> Option<&Edge> {
        let (a, b) = (x.min(y), x.max(y));
        self.edges.iter().find(|e| e.a == a && e.b == b)
    }

    /// Configuration read from the facet sizes, checked against the reading
    /// from the line types.
    pub fn configuration_at(&self, at: ExtremalLabel) -> Result<Configuration> {
        if !self.is_maximal() {
            return Err(TetraError::NonMaximal("configurations need a maximal span".into()));
        }
        let predicted = configuration_from_types(&self.extremals.line_types(), at)?;
        let (l, is_plane) = match at {
            ExtremalLabel::PlaneVertex { omit } => (omit, true),
            ExtremalLabel::Generator(l) => (l, false),
            ExtremalLabel::LineVertex { .. } => unreachable!("rejected above"),
        };
        let mut sizes = [0usize; 3];
        for (slot, m) in (0..4).filter(|&m| m != l).enumerate() {
            let (i, j) = if is_plane { (l, m) } else { (m, l) };
            let facet = self
                .facet_on(i, j)
                .ok_or_else(|| TetraError::Inconsistent(format!("no facet on x{} - x{}", i + 1, j + 1)))?;
            if !facet.contains(at) {
                return Err(TetraError::Inconsistent(format!("{at} is not on facet {}", facet.equation)));
            }
            sizes[slot] = facet.gon;
        }
        if sizes != predicted.sizes {
            return Err(TetraError::Inconsistent(format!(
                "configuration at {at}: facets give {sizes:?}, line types give {:?}",
                predicted.sizes
            )));
        }
        Ok(predicted)
    }

    /// Every check that must hold for a maximal span. Empty when all pass.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let fv = self.f_vector;
        if (fv.vertices, fv.edges, fv.facets) != (20, 30, 12) {
            out.push(format!("f-vector {fv}"));
        }
        if fv.euler() != 2 {
            out.push(format!("Euler characteristic {}", fv.euler()));
        }
        let pv = self.polygon_vector;
        if pv.0[0] != 0 || pv.0[1] != pv.0[3] || !PolygonVector::ALLOWED.contains(&pv) {
            out.push(format!("polygon-vector {pv}"));
        }
        for v in &self.vertices {
            let n = self.facets_at(v.label).len();
            if n != 3 {
                out.push(format!("{} lies on {n} facets", v.label));
            }
        }
        for e in &self.edges {
            let n = self.facets.iter().filter(|f| f.contains(e.a) && f.contains(e.b)).count();
            if n != 2 {
                out.push(format!("edge {}-{} lies on {n} facets", e.a, e.b));
            }
            if !e.direction.is_alcoved() {
                out.push(format!("edge {}-{} has direction {}", e.a, e.b, e.direction));
            }
        }
        for f in &self.facets {
            let gens = f.cycle.iter().filter(|l| matches!(l, ExtremalLabel::Generator(_))).count();
            let pvs = f.cycle.iter().filter(|l| matches!(l, ExtremalLabel::PlaneVertex { .. })).count();
            if gens != 1 || pvs != 1 {
                out.push(format!("facet {} has {gens} generators and {pvs} plane vertices", f.equation));
            }
        }
        for v in self.vertices.iter().filter(|v| v.label.is_odd()) {
            let hex = self.facets_at(v.label).iter().filter(|f| f.gon == 6).count();
            if hex > 1 {
                out.push(format!("{hex} hexagons meet at {}", v.label));
            }
        }
        out
    }
}

/// Interior angles of a facet in degrees, in cycle order starting at the
/// first vertex.
pub fn angle_vector(p: &Polytrope, f: &Facet) -> Vec<f64> {
    let pts: Vec<[f64; 3]> = f.cycle.iter().map(|&l| p.point(l).to_f64()).collect();
    let n = pts.len();
    (0..n)
        .map(|k| {
            let prev = pts[(k + n - 1) % n];
            let cur = pts[k];
            let next = pts[(k + 1) % n];
            let u: Vec<f64> = (0..3).map(|t| prev[t] - cur[t]).collect();
            let v: Vec<f64> = (0..3).map(|t| next[t] - cur[t]).collect();
            let dot: f64 = (0..3).map(|t| u[t] * v[t]).sum();
            let nu = u.iter().map(|x| x * x).sum::<f64>().sqrt();
            let nv = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            (dot / (nu * nv)).clamp(-1.0, 1.0).acos().to_degrees()
        })
        .collect()
}

/// `arccos(-1/√3)`, about 125.2644°.
pub fn alpha_degrees() -> f64 {
    (-1.0 / 3f64.sqrt()).acos().to_degrees()
}

/// `arccos(-√(2/3))`, about 144.7356°.
pub fn beta_degrees() -> f64 {
    (-(2.0f64 / 3.0).sqrt()).acos().to_degrees()
}
