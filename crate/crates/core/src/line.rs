//! Tropical lines through two points of TP³.
//!
//! A line is determined by its six 2×2 minors `m_ij = max{p_i + q_j, p_j + q_i}`.
//! Its type says which of the four rays `-e1, -e2, -e3, e123` (one per
//! coordinate, the fourth being `-e4 = e123` in the chart) meet at each end of
//! the bounded edge.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ParseError, Result, TetraError};
use crate::matrix::{complement, pair_index, ProjectivePoint, PAIRS};
use crate::maxplus::KleeneMatrix;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineType {
    /// `[12,34]`
    Split12_34,
    /// `[13,24]`
    Split13_24,
    /// `[14,23]`
    Split14_23,
    /// `[1234]`: all four rays at one vertex.
    Tetrapod,
}

impl LineType {
    pub const SPLITS: [LineType; 3] = [LineType::Split12_34, LineType::Split13_24, LineType::Split14_23];

    /// The split whose halves separate `{i, j}` from the other two indices.
    pub fn with_half(i: usize, j: usize) -> LineType {
        match complement(i, j) {
            (2, 3) | (0, 1) => LineType::Split12_34,
            (1, 3) | (0, 2) => LineType::Split13_24,
            _ => LineType::Split14_23,
        }
    }

    /// Both halves, each ascending, in the order of the label.
    pub fn halves(self) -> Option<[(usize, usize); 2]> {
        match self {
            LineType::Split12_34 => Some([(0, 1), (2, 3)]),
            LineType::Split13_24 => Some([(0, 2), (1, 3)]),
            LineType::Split14_23 => Some([(0, 3), (1, 2)]),
            LineType::Tetrapod => None,
        }
    }

    /// The index sharing a half with `x`.
    pub fn partner(self, x: usize) -> Option<usize> {
        self.halves()?.into_iter().find_map(|(a, b)| {
            if a == x {
                Some(b)
            } else if b == x {
                Some(a)
            } else {
                None
            }
        })
    }

    /// The index `j in {1,2,3}` (0-based) for which the type reads `[4j, kl]`.
    pub fn partner_of_last(self) -> Option<usize> {
        self.partner(3)
    }

    pub fn is_tetrapod(self) -> bool {
        self == LineType::Tetrapod
    }
}

impl fmt::Display for LineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.halves() {
            Some([(a, b), (c, d)]) => write!(f, "[{}{},{}{}]", a + 1, b + 1, c + 1, d + 1),
            None => f.write_str("[1234]"),
        }
    }
}

impl FromStr for LineType {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        if t == "1234" {
            return Ok(LineType::Tetrapod);
        }
        let digits: Vec<usize> = t
            .chars()
            .filter(|c| *c != ',')
            .map(|c| c.to_digit(10).map(|d| d as usize).filter(|d| (1..=4).contains(d)))
            .collect::<Option<_>>()
            .ok_or_else(|| ParseError::new(format!("invalid line type {s:?}")))?;
        match digits.as_slice() {
            [a, b, c, d] if {
                let mut all = [*a, *b, *c, *d];
                all.sort_unstable();
                all == [1, 2, 3, 4]
            } =>
            {
                Ok(LineType::with_half(a - 1, b - 1))
            }
            _ => Err(ParseError::new(format!("invalid line type {s:?}"))),
        }
    }
}

impl Serialize for LineType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LineType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Which diagonal of `max{p_i + q_j, p_j + q_i}` attains the minor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Attainment {
    /// `p_i + q_j`
    First,
    /// `p_j + q_i`
    Second,
    Both,
}

/// The six minors `m12, m13, m14, m23, m24, m34`, in [`PAIRS`] order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorSextet {
    pub values: [Rational; 6],
    pub attainment: [Attainment; 6],
}

impl MinorSextet {
    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.values[pair_index(i, j)]
    }

    /// The Plücker sums `m12+m34`, `m13+m24`, `m14+m23`, in the order of
    /// [`LineType::SPLITS`].
    pub fn pluecker_sums(&self) -> [Rational; 3] {
        let m = &self.values;
        [m[0] + m[5], m[1] + m[4], m[2] + m[3]]
    }
}

pub fn minors(p: &ProjectivePoint, q: &ProjectivePoint) -> Result<MinorSextet> {
    if p == q {
        return Err(TetraError::DegenerateLine);
    }
    Ok(raw_minors(p, q))
}

fn raw_minors(p: &ProjectivePoint, q: &ProjectivePoint) -> MinorSextet {
    let mut values = [Rational::ZERO; 6];
    let mut attainment = [Attainment::Both; 6];
    for (n, &(i, j)) in PAIRS.iter().enumerate() {
        let first = p[i] + q[j];
        let second = p[j] + q[i];
        values[n] = first.max(second);
        attainment[n] = match first.cmp(&second) {
            std::cmp::Ordering::Greater => Attainment::First,
            std::cmp::Ordering::Less => Attainment::Second,
            std::cmp::Ordering::Equal => Attainment::Both,
        };
    }
    MinorSextet { values, attainment }
}

/// Reads the type off the Plücker sums: the split whose sum is strictly
/// smallest, or a tetrapod when all three agree.
pub fn line_type(m: &MinorSextet) -> Result<LineType> {
    let sums = m.pluecker_sums();
    let max = *sums.iter().max().unwrap();
    let at_max: Vec<usize> = (0..3).filter(|&n| sums[n] == max).collect();
    match at_max.len() {
        3 => Ok(LineType::Tetrapod),
        2 => {
            let low = (0..3).find(|n| !at_max.contains(n)).unwrap();
            Ok(LineType::SPLITS[low])
        }
        _ => Err(TetraError::Pluecker(format!(
            "sums {}, {}, {} attain their maximum once",
            sums[0], sums[1], sums[2]
        ))),
    }
}

/// Point at parameter `u` on the ray `r_i`: coordinate `i` is `-u` and
/// coordinate `j != i` is `-m_kl` with `{k, l}` the complement of `{i, j}`.
pub fn ray_point(m: &MinorSextet, i: usize, u: Rational) -> ProjectivePoint {
    ProjectivePoint::new(ray_point_raw(m, i, u))
}

fn ray_point_raw(m: &MinorSextet, i: usize, u: Rational) -> [Rational; 4] {
    std::array::from_fn(|j| {
        if j == i {
            -u
        } else {
            let (k, l) = complement(i, j);
            -m.get(k, l)
        }
    })
}

/// The point where rays `r_a` and `r_b` meet. The coordinates outside
/// `{a, b}` do not depend on the parameters, so projective equality forces
/// them to differ by one constant `d`; coordinate `a` then fixes `u`.
pub fn meet(m: &MinorSextet, a: usize, b: usize) -> Result<ProjectivePoint> {
    let base_a = ray_point_raw(m, a, Rational::ZERO);
    let base_b = ray_point_raw(m, b, Rational::ZERO);
    let (s, t) = complement(a, b);
    let d = base_a[s] - base_b[s];
    if base_a[t] - base_b[t] != d {
        return Err(TetraError::FormulaInconsistency(format!(
            "rays r{} and r{} do not meet",
            a + 1,
            b + 1
        )));
    }
    // x_a(u) = x_b(u') + d as homogeneous vectors; read off coordinate a.
    let u = -d - base_b[a];
    Ok(ray_point(m, a, u))
}

/// Each of the four 3×3 minors of `[p q x]` (one per omitted row) must
/// attain its maximum at least twice.
pub fn rank2_check(p: &ProjectivePoint, q: &ProjectivePoint, x: &ProjectivePoint) -> bool {
    let m = raw_minors(p, q);
    rank2_with(&m, x)
}

fn rank2_with(m: &MinorSextet, x: &ProjectivePoint) -> bool {
    (0..4).all(|o| {
        let terms: Vec<Rational> = (0..4)
            .filter(|&t| t != o)
            .map(|t| {
                let mut rest = (0..4).filter(|&s| s != o && s != t);
                let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
                x[t] + m.get(a, b)
            })
            .collect();
        let max = *terms.iter().max().unwrap();
        terms.iter().filter(|&&v| v == max).count() >= 2
    })
}

/// A tropical line: its type and the vertices at the two ends of the bounded
/// edge, in the order of the type's halves. A tetrapod repeats its single
/// vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TropLine {
    pub line_type: LineType,
    pub vertices: [ProjectivePoint; 2],
}

impl TropLine {
    /// The vertex where ray `r_i` attaches.
    pub fn vertex_with_ray(&self, i: usize) -> ProjectivePoint {
        match self.line_type.halves() {
            Some([(a, b), _]) if a == i || b == i => self.vertices[0],
            Some(_) => self.vertices[1],
            None => self.vertices[0],
        }
    }

    pub fn is_tetrapod(&self) -> bool {
        self.line_type.is_tetrapod()
    }
}

/// Vertices of the line of type `t` through `p` and `q`, each checked against
/// the rank-2 membership test.
pub fn line_vertices(
    p: &ProjectivePoint,
    q: &ProjectivePoint,
    m: &MinorSextet,
    t: LineType,
) -> Result<TropLine> {
    let vertices = match t.halves() {
        Some([(a, b), (c, d)]) => [meet(m, a, b)?, meet(m, c, d)?],
        None => {
            let v = meet(m, 0, 1)?;
            [v, v]
        }
    };
    for v in &vertices {
        if !rank2_with(m, v) {
            return Err(TetraError::FormulaInconsistency(format!(
                "vertex {v} of the {t} line through {p} and {q} fails the rank-2 test"
            )));
        }
    }
    Ok(TropLine { line_type: t, vertices })
}

/// Minors, type and vertices in one call.
pub fn tropical_line(p: &ProjectivePoint, q: &ProjectivePoint) -> Result<TropLine> {
    let m = minors(p, q)?;
    let t = line_type(&m)?;
    line_vertices(p, q, &m, t)
}

/// Closed-form vertex expressions, kept as independent cross-checks of the
/// ray-meeting computation. Each is valid only for lines of the matching
/// type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedForms {
    pub v12: ProjectivePoint,
    pub v34: ProjectivePoint,
    /// The textbook expression with `+m24` as first coordinate; it fails the
    /// rank-2 test in general and is kept only to document that.
    pub v13_as_printed: ProjectivePoint,
    pub v13: ProjectivePoint,
    pub v24: ProjectivePoint,
    pub v14: ProjectivePoint,
    pub v23: ProjectivePoint,
    pub v1234: ProjectivePoint,
}

pub fn closed_forms(m: &MinorSextet) -> ClosedForms {
    let g = |i: usize, j: usize| m.get(i - 1, j - 1);
    let pt = |c: [Rational; 4]| ProjectivePoint::new(c);
    ClosedForms {
        v12: pt([g(1, 3) - g(2, 3) - g(3, 4), -g(3, 4), -g(2, 4), -g(2, 3)]),
        v34: pt([-g(2, 4), -g(1, 4), g(1, 3) - g(1, 2) - g(1, 4), -g(1, 2)]),
        v13_as_printed: pt([g(2, 4), -g(1, 4), -g(2, 4) - g(1, 4) + g(3, 4), -g(1, 2)]),
        v13: pt([-g(2, 4), -g(1, 4), -g(2, 4) - g(1, 4) + g(3, 4), -g(1, 2)]),
        v24: pt([-g(2, 3), -g(1, 3), -g(1, 2), -g(1, 3) - g(1, 2) + g(1, 4)]),
        v14: pt([g(1, 3) - g(3, 4) - g(2, 3), -g(3, 4), -g(2, 4), -g(2, 3)]),
        v23: pt([-g(3, 4), g(2, 4) - g(3, 4) - g(1, 4), -g(1, 4), -g(1, 3)]),
        v1234: pt([g(1, 3) + g(1, 4) - g(3, 4), g(1, 2), g(1, 3), g(1, 4)]),
    }
}

impl ClosedForms {
    /// The closed-form vertices for type `t`, in the order of its halves.
    pub fn for_type(&self, t: LineType) -> [ProjectivePoint; 2] {
        match t {
            LineType::Split12_34 => [self.v12, self.v34],
            LineType::Split13_24 => [self.v13, self.v24],
            LineType::Split14_23 => [self.v14, self.v23],
            LineType::Tetrapod => [self.v1234, self.v1234],
        }
    }
}

/// Type of the line through generators `i` and `j` of a Kleene star, read
/// directly from the minor on the complementary rows: with `{k, l}` the
/// other indices, `a_ki + a_lj` larger gives `[ik, jl]`, `a_kj + a_li` larger
/// gives `[il, jk]`, and equality gives a tetrapod.
pub fn line_type_from_kleene(a: &KleeneMatrix, i: usize, j: usize) -> Result<LineType> {
    if i == j || i > 3 || j > 3 {
        return Err(TetraError::Index(format!("need two distinct generators, got {} and {}", i + 1, j + 1)));
    }
    let (k, l) = complement(i, j);
    let main = a.get(k, i) + a.get(l, j);
    let anti = a.get(k, j) + a.get(l, i);
    Ok(match main.cmp(&anti) {
        std::cmp::Ordering::Greater => LineType::with_half(i, k),
        std::cmp::Ordering::Less => LineType::with_half(i, l),
        std::cmp::Ordering::Equal => LineType::Tetrapod,
    })
}

/// A primitive integer direction in the chart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction(pub [i64; 3]);

impl Direction {
    /// Splits a nonzero vector into a primitive integer direction and its
    /// positive rational scale.
    pub fn from_vector(v: [Rational; 3]) -> Option<(Direction, Rational)> {
        if v.iter().all(Rational::is_zero) {
            return None;
        }
        // Scale to integers, then divide by the gcd.
        let lcm = v.iter().fold(1i128, |acc, x| num_integer::lcm(acc, x.denom()));
        let ints: Vec<i128> = v.iter().map(|x| x.numer() * (lcm / x.denom())).collect();
        let g = ints.iter().fold(0i128, |acc, &x| num_integer::gcd(acc, x));
        let dir = [ints[0] / g, ints[1] / g, ints[2] / g].map(|x| x as i64);
        Some((Direction(dir), Rational::new(g, lcm)))
    }

    /// Alcoved directions are `±e_i`, `±e_ij` and `±e123`: all nonzero entries
    /// equal to the same unit.
    pub fn is_alcoved(&self) -> bool {
        let nz: Vec<i64> = self.0.iter().copied().filter(|&x| x != 0).collect();
        !nz.is_empty() && (nz.iter().all(|&x| x == 1) || nz.iter().all(|&x| x == -1))
    }

    pub fn unit(indices: &[usize]) -> Direction {
        let mut v = [0; 3];
        for &i in indices {
            v[i] = 1;
        }
        Direction(v)
    }

}

impl std::ops::Neg for Direction {
    type Output = Direction;

    fn neg(self) -> Direction {
        Direction(self.0.map(|x| -x))
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_alcoved() {
            let sign = if self.0.iter().any(|&x| x < 0) { "-" } else { "" };
            let idx: String =
                (0..3).filter(|&i| self.0[i] != 0).map(|i| char::from(b'1' + i as u8)).collect();
            write!(f, "{sign}e{idx}")
        } else {
            write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
        }
    }
}

impl FromStr for Direction {
    type Err = ParseError;

    /// Inverse of `Display`: `e13`, `-e123` or `(1, -2, 0)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseError::new(format!("invalid direction {s:?}"));
        if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            let v: Vec<i64> = inner.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
            return <[i64; 3]>::try_from(v).map(Direction).map_err(|_| bad());
        }
        let (neg, rest) = match s.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, s),
        };
        let digits = rest.strip_prefix('e').ok_or_else(bad)?;
        let mut idx = Vec::new();
        for c in digits.chars() {
            match c {
                '1'..='3' if !idx.contains(&(c as usize - '1' as usize)) => idx.push(c as usize - '1' as usize),
                _ => return Err(bad()),
            }
        }
        if idx.is_empty() {
            return Err(bad());
        }
        let d = Direction::unit(&idx);
        Ok(if neg { -d } else { d })
    }
}

impl Serialize for Direction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Direction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
