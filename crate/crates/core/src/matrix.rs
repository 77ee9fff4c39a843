//! Dense 4×4 rational matrices and points of the tropical projective 3-space.
//!
//! Indices are 0-based throughout the crate; labels and reports print them
//! 1-based.

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::Rational;

/// The six unordered index pairs in lexicographic order: 12, 13, 14, 23, 24, 34.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Position of the unordered pair `{i, j}` in [`PAIRS`].
pub fn pair_index(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(a != b && b < 4);
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        _ => 5,
    }
}

/// The two indices of `[4]` outside `{i, j}`, ascending.
pub fn complement(i: usize, j: usize) -> (usize, usize) {
    let mut rest = (0..4).filter(|&t| t != i && t != j);
    (rest.next().unwrap(), rest.next().unwrap())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Matrix4(pub [[Rational; 4]; 4]);

impl Matrix4 {
    pub fn from_ints(rows: [[i64; 4]; 4]) -> Self {
        Matrix4(rows.map(|row| row.map(Rational::from_int)))
    }

    pub fn zero() -> Self {
        Matrix4::default()
    }

    pub fn rows(&self) -> &[[Rational; 4]; 4] {
        &self.0
    }

    pub fn transpose(&self) -> Self {
        let mut t = [[Rational::ZERO; 4]; 4];
        for (i, row) in self.0.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                t[j][i] = x;
            }
        }
        Matrix4(t)
    }

    pub fn column(&self, j: usize) -> [Rational; 4] {
        [self.0[0][j], self.0[1][j], self.0[2][j], self.0[3][j]]
    }

    pub fn column_point(&self, j: usize) -> ProjectivePoint {
        ProjectivePoint::new(self.column(j))
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn map(&self, f: impl Fn(Rational) -> Rational) -> Self {
        Matrix4(self.0.map(|row| row.map(&f)))
    }

    /// Simultaneous row and column relabeling: entry `(i, j)` moves to
    /// `(perm[i], perm[j])`. This relabels the generators by `perm`.
    pub fn conjugate(&self, perm: [usize; 4]) -> Self {
        let mut out = [[Rational::ZERO; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                out[perm[i]][perm[j]] = self.0[i][j];
            }
        }
        Matrix4(out)
    }
}

impl Index<(usize, usize)> for Matrix4 {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.0[i][j]
    }
}

impl fmt::Display for Matrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            self.0.iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (n, row) in cells.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl Serialize for Matrix4 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix4 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        <[[Rational; 4]; 4]>::deserialize(deserializer).map(Matrix4)
    }
}

/// A point of TP³ stored by its representative with last coordinate zero.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint([Rational; 4]);

impl ProjectivePoint {
    /// Normalizes any homogeneous representative into the chart `X4 = 0`.
    pub fn new(coords: [Rational; 4]) -> Self {
        let last = coords[3];
        ProjectivePoint(coords.map(|x| x - last))
    }

    pub fn from_chart(x: [Rational; 3]) -> Self {
        ProjectivePoint([x[0], x[1], x[2], Rational::ZERO])
    }

    pub fn from_ints(coords: [i64; 4]) -> Self {
        ProjectivePoint::new(coords.map(Rational::from_int))
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.0
    }

    pub fn chart(&self) -> [Rational; 3] {
        [self.0[0], self.0[1], self.0[2]]
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.0[0].to_f64(), self.0[1].to_f64(), self.0[2].to_f64()]
    }

    /// Classical difference `self - other` in the chart.
    pub fn minus(&self, other: &ProjectivePoint) -> [Rational; 3] {
        [self.0[0] - other.0[0], self.0[1] - other.0[1], self.0[2] - other.0[2]]
    }

    /// Squared Euclidean distance in the chart, exact.
    pub fn euclidean_sq(&self, other: &ProjectivePoint) -> Rational {
        self.minus(other).iter().map(|&d| d * d).sum()
    }

    /// Classical midpoint in the chart.
    pub fn midpoint(&self, other: &ProjectivePoint) -> ProjectivePoint {
        let half = Rational::new(1, 2);
        ProjectivePoint(std::array::from_fn(|i| (self.0[i] + other.0[i]) * half))
    }
}

impl Index<usize> for ProjectivePoint {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}]", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ProjectivePoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        <[Rational; 4]>::deserialize(deserializer).map(ProjectivePoint::new)
    }
}
