//! The two general-position hypotheses and the 20 labeled extremals of a
//! maximal span: 4 generators, 4 vertices of the planes through three
//! generators, and 12 vertices of the lines through two.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ParseError, Result, TetraError};
use crate::line::{line_type, line_vertices, minors, LineType, TropLine};
use crate::matrix::{complement, pair_index, ProjectivePoint, PAIRS};
use crate::maxplus::{tdist, KleeneMatrix};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtremalLabel {
    /// Column `i`.
    Generator(usize),
    /// Vertex of the plane through the three generators other than `omit`.
    PlaneVertex { omit: usize },
    /// Vertex of the line through generators `near` and `far` lying on the
    /// side of `near`.
    LineVertex { near: usize, far: usize },
}

impl ExtremalLabel {
    /// All 20 labels: generators, plane vertices, then line vertices.
    pub fn all() -> Vec<ExtremalLabel> {
        let mut out: Vec<ExtremalLabel> = (0..4).map(ExtremalLabel::Generator).collect();
        out.extend((0..4).rev().map(|omit| ExtremalLabel::PlaneVertex { omit }));
        for near in 0..4 {
            for far in 0..4 {
                if near != far {
                    out.push(ExtremalLabel::LineVertex { near, far });
                }
            }
        }
        out
    }

    /// Generators and plane vertices are the oddly generated extremals.
    pub fn is_odd(&self) -> bool {
        !matches!(self, ExtremalLabel::LineVertex { .. })
    }
}

impl fmt::Display for ExtremalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ExtremalLabel::Generator(i) => write!(f, "{}", i + 1),
            ExtremalLabel::PlaneVertex { omit } => {
                for t in (0..4).filter(|&t| t != omit) {
                    write!(f, "{}", t + 1)?;
                }
                Ok(())
            }
            ExtremalLabel::LineVertex { near, far } => write!(f, "{}{}", near + 1, far + 1),
        }
    }
}

impl FromStr for ExtremalLabel {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bad = || ParseError::new(format!("invalid extremal label {s:?}"));
        let digits: Vec<usize> = s
            .trim()
            .chars()
            .map(|c| c.to_digit(10).filter(|d| (1..=4).contains(d)).map(|d| d as usize - 1))
            .collect::<Option<_>>()
            .ok_or_else(bad)?;
        let mut sorted = digits.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != digits.len() {
            return Err(bad());
        }
        match digits.as_slice() {
            [i] => Ok(ExtremalLabel::Generator(*i)),
            [near, far] => Ok(ExtremalLabel::LineVertex { near: *near, far: *far }),
            [_, _, _] => {
                let omit = (0..4).find(|t| !digits.contains(t)).unwrap();
                Ok(ExtremalLabel::PlaneVertex { omit })
            }
            _ => Err(bad()),
        }
    }
}

impl Serialize for ExtremalLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExtremalLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

/// The tropical linear form of the plane through the generators other than
/// `omit`, evaluated at generator `omit`. Its coefficients are row `omit` of
/// the matrix, so the terms are `a_{omit,t} + a_{t,omit}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlaneEvaluation {
    pub omit: usize,
    pub terms: [Rational; 4],
    pub max: Rational,
    pub attain_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis1 {
    pub evaluations: Vec<PlaneEvaluation>,
}

impl Hypothesis1 {
    pub fn passes(&self) -> bool {
        self.evaluations.iter().all(|e| e.attain_count == 1)
    }

    /// Generators lying on the plane spanned by the other three.
    pub fn failing(&self) -> Vec<usize> {
        self.evaluations.iter().filter(|e| e.attain_count > 1).map(|e| e.omit).collect()
    }
}

/// Four generators in general position: no generator lies on the tropical
/// plane through the other three.
pub fn check_hypothesis1(a: &KleeneMatrix) -> Hypothesis1 {
    let evaluations = (0..4)
        .map(|l| {
            let terms: [Rational; 4] = std::array::from_fn(|t| a.get(l, t) + a.get(t, l));
            let max = *terms.iter().max().unwrap();
            let attain_count = terms.iter().filter(|&&x| x == max).count();
            PlaneEvaluation { omit: l, terms, max, attain_count }
        })
        .collect();
    Hypothesis1 { evaluations }
}

/// A 2×2 minor on rows `{k, l}` and columns `{i, j}` (ascending pairs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MinorWitness {
    pub rows: (usize, usize),
    pub cols: (usize, usize),
    pub adiff: Rational,
}

impl fmt::Display for MinorWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "adiff({}{};{}{})={}",
            self.rows.0 + 1,
            self.rows.1 + 1,
            self.cols.0 + 1,
            self.cols.1 + 1,
            self.adiff
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis2 {
    pub failing: Vec<MinorWitness>,
}

impl Hypothesis2 {
    pub fn passes(&self) -> bool {
        self.failing.is_empty()
    }
}

/// The 30 minors whose row and column pairs involve at least three distinct
/// indices, as (rows, cols) pairs.
pub fn mixed_minors() -> impl Iterator<Item = ((usize, usize), (usize, usize))> {
    PAIRS.into_iter().flat_map(|r| PAIRS.into_iter().filter(move |&c| c != r).map(move |c| (r, c)))
}

/// Every 2×2 minor with three or four distinct indices is tropically regular.
pub fn check_hypothesis2(a: &KleeneMatrix) -> Hypothesis2 {
    let failing = mixed_minors()
        .filter_map(|((k, l), (i, j))| {
            let adiff = a.adiff(k, l, i, j);
            adiff.is_zero().then_some(MinorWitness { rows: (k, l), cols: (i, j), adiff })
        })
        .collect();
    Hypothesis2 { failing }
}

/// `|a_ki + a_lj - a_kj - a_li|`.
pub fn adiff(a: &KleeneMatrix, k: usize, l: usize, i: usize, j: usize) -> Rational {
    a.adiff(k, l, i, j)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalSet {
    pub points: BTreeMap<ExtremalLabel, ProjectivePoint>,
    /// Lines through pairs of generators, in [`PAIRS`] order.
    pub lines: Vec<TropLine>,
    pub maximal: bool,
}

impl ExtremalSet {
    pub fn get(&self, label: ExtremalLabel) -> ProjectivePoint {
        self.points[&label]
    }

    pub fn line(&self, i: usize, j: usize) -> &TropLine {
        &self.lines[pair_index(i, j)]
    }

    pub fn line_types(&self) -> [LineType; 6] {
        std::array::from_fn(|n| self.lines[n].line_type)
    }

    /// Distinct points, each with every label sitting on it.
    pub fn distinct(&self) -> BTreeMap<ProjectivePoint, Vec<ExtremalLabel>> {
        let mut out: BTreeMap<ProjectivePoint, Vec<ExtremalLabel>> = BTreeMap::new();
        for (&label, &p) in &self.points {
            out.entry(p).or_default().push(label);
        }
        out
    }
}

/// Vertex of the plane through all generators but `omit`: column `omit` of
/// `-Aᵗ`.
pub fn plane_vertex(a: &KleeneMatrix, omit: usize) -> ProjectivePoint {
    ProjectivePoint::new(std::array::from_fn(|t| -a.get(omit, t)))
}

/// The line through generators `i < j`. Coinciding generators (possible only
/// when hypothesis 1 fails) give a one-point line at the generator.
fn generator_line(a: &KleeneMatrix, i: usize, j: usize) -> Result<TropLine> {
    let p = a.generator(i);
    let q = a.generator(j);
    if p == q {
        return Ok(TropLine { line_type: LineType::Tetrapod, vertices: [p, p] });
    }
    let m = minors(&p, &q)?;
    line_vertices(&p, &q, &m, line_type(&m)?)
}

/// All extremal candidates. `LineVertex(ij)` is the vertex at which the ray
/// of index `i` attaches, which is the end of the bounded edge on the side of
/// generator `i`. When both hypotheses hold the 20 points are distinct and
/// are the vertices of the span; otherwise the set is returned with
/// `maximal = false` and may contain repeated points.
pub fn extremal_set(a: &KleeneMatrix) -> Result<ExtremalSet> {
    let maximal = check_hypothesis1(a).passes() && check_hypothesis2(a).passes();
    let mut points = BTreeMap::new();
    for i in 0..4 {
        points.insert(ExtremalLabel::Generator(i), a.generator(i));
        points.insert(ExtremalLabel::PlaneVertex { omit: i }, plane_vertex(a, i));
    }
    let mut lines = Vec::with_capacity(6);
    for &(i, j) in PAIRS.iter() {
        let line = generator_line(a, i, j)?;
        points.insert(ExtremalLabel::LineVertex { near: i, far: j }, line.vertex_with_ray(i));
        points.insert(ExtremalLabel::LineVertex { near: j, far: i }, line.vertex_with_ray(j));
        lines.push(line);
    }
    let set = ExtremalSet { points, lines, maximal };
    if maximal {
        check_maximal(a, &set)?;
    }
    Ok(set)
}

fn check_maximal(a: &KleeneMatrix, set: &ExtremalSet) -> Result<()> {
    if !a.trop_det().is_regular() {
        return Err(TetraError::Inconsistent("hypotheses hold but the matrix is tropically singular".into()));
    }
    for r in PAIRS {
        for c in PAIRS {
            if a.adiff(r.0, r.1, c.0, c.1).is_zero() {
                return Err(TetraError::Inconsistent(format!(
                    "hypotheses hold but minor ({}{};{}{}) is singular",
                    r.0 + 1,
                    r.1 + 1,
                    c.0 + 1,
                    c.1 + 1
                )));
            }
        }
    }
    if set.distinct().len() != 20 {
        return Err(TetraError::Inconsistent(format!(
            "hypotheses hold but only {} distinct extremals",
            set.distinct().len()
        )));
    }
    for &(i, j) in PAIRS.iter() {
        for (x, y) in [(i, j), (j, i)] {
            let g = set.get(ExtremalLabel::Generator(x));
            let near = tdist(&g, &set.get(ExtremalLabel::LineVertex { near: x, far: y }));
            let far = tdist(&g, &set.get(ExtremalLabel::LineVertex { near: y, far: x }));
            if near > far {
                return Err(TetraError::Inconsistent(format!(
                    "vertex {}{} is farther from generator {} than {}{}",
                    x + 1,
                    y + 1,
                    x + 1,
                    y + 1,
                    x + 1
                )));
            }
        }
    }
    Ok(())
}

/// Lengths of the three segments of the line through generators `i` and `j`:
/// generator `i` to `ij`, generator `j` to `ji`, and the bounded edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineEdgeLengths {
    pub i: usize,
    pub j: usize,
    pub line_type: LineType,
    /// From the adiffs: `adiff(jl;ij)`, `adiff(ik;ij)`, `adiff(kl;ij)` when
    /// the type is `[ik,jl]`.
    pub predicted: [Rational; 3],
    /// Tropical distances between the stored points.
    pub measured: [Rational; 3],
    /// Exact squared Euclidean lengths of the same segments.
    pub euclidean_sq: [Rational; 3],
    /// The single homogeneous coordinate moved along each of the first two
    /// segments, if there is exactly one.
    pub moved: [Option<usize>; 2],
}

impl LineEdgeLengths {
    pub fn agrees(&self) -> bool {
        self.predicted == self.measured
    }

    /// The first two segments move one homogeneous coordinate. In the chart
    /// `x4 = 0` that is a step along `e_m` for the first three coordinates and
    /// along `e123` for the last, so the squared Euclidean length is `d²` or
    /// `3d²` for tropical length `d`.
    pub fn euclidean_consistent(&self) -> bool {
        (0..2).all(|n| match self.moved[n] {
            Some(m) => {
                let d2 = self.measured[n] * self.measured[n];
                let w = if m == 3 { Rational::from_int(3) } else { Rational::ONE };
                self.euclidean_sq[n] == w * d2
            }
            None => false,
        })
    }
}

/// The one homogeneous coordinate in which `p` and `q` differ up to a common
/// shift, if any.
fn moved_coordinate(p: &ProjectivePoint, q: &ProjectivePoint) -> Option<usize> {
    let d = q.minus(p);
    let nz: Vec<usize> = (0..3).filter(|&m| !d[m].is_zero()).collect();
    match nz.as_slice() {
        [m] => Some(*m),
        [_, _, _] if d[0] == d[1] && d[1] == d[2] => Some(3),
        _ => None,
    }
}

pub fn edge_lengths_on_line(
    a: &KleeneMatrix,
    set: &ExtremalSet,
    i: usize,
    j: usize,
) -> Result<LineEdgeLengths> {
    if i == j || i > 3 || j > 3 {
        return Err(TetraError::Index(format!("need two distinct generators, got {} and {}", i + 1, j + 1)));
    }
    let line = set.line(i, j);
    let t = line.line_type;
    if t.is_tetrapod() {
        return Err(TetraError::NoEdge(format!("L{}{}", i.min(j) + 1, i.max(j) + 1)));
    }
    let k = t.partner(i).unwrap();
    let l = t.partner(j).unwrap();
    let gi = set.get(ExtremalLabel::Generator(i));
    let gj = set.get(ExtremalLabel::Generator(j));
    let vi = set.get(ExtremalLabel::LineVertex { near: i, far: j });
    let vj = set.get(ExtremalLabel::LineVertex { near: j, far: i });
    let predicted = [a.adiff(j, l, i, j), a.adiff(i, k, i, j), a.adiff(k, l, i, j)];
    let measured = [tdist(&gi, &vi), tdist(&gj, &vj), tdist(&vi, &vj)];
    let euclidean_sq = [gi.euclidean_sq(&vi), gj.euclidean_sq(&vj), vi.euclidean_sq(&vj)];
    let moved = [moved_coordinate(&gi, &vi), moved_coordinate(&gj, &vj)];
    debug_assert_eq!(complement(i, j), (k.min(l), k.max(l)));
    Ok(LineEdgeLengths { i, j, line_type: t, predicted, measured, euclidean_sq, moved })
}
