//! Max-plus kernel: tropical determinants, the Kleene star predicate and
//! closure, chart normalization and the tropical distance.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Result, TetraError};
use crate::matrix::{Matrix4, ProjectivePoint, PAIRS};
use crate::rational::Rational;

/// Value of a tropical determinant and how many permutations attain it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TropDet {
    pub value: Rational,
    pub attain_count: usize,
}

impl TropDet {
    pub fn is_regular(&self) -> bool {
        self.attain_count == 1
    }
}

/// Tropical determinant of a square matrix of side 2 to 4, by enumerating
/// every permutation.
pub fn trop_det<R: AsRef<[Rational]>>(rows: &[R]) -> Result<TropDet> {
    let n = rows.len();
    for row in rows {
        if row.as_ref().len() != n {
            return Err(TetraError::UnsupportedSize { rows: n, cols: row.as_ref().len() });
        }
    }
    if !(2..=4).contains(&n) {
        return Err(TetraError::UnsupportedSize { rows: n, cols: n });
    }
    let mut best: Option<Rational> = None;
    let mut count = 0;
    for perm in (0..n).permutations(n) {
        let s: Rational = perm.iter().enumerate().map(|(i, &j)| rows[i].as_ref()[j]).sum();
        match best {
            Some(b) if s < b => {}
            Some(b) if s == b => count += 1,
            _ => {
                best = Some(s);
                count = 1;
            }
        }
    }
    Ok(TropDet { value: best.expect("at least one permutation"), attain_count: count })
}

/// A failed Kleene condition, 1-based in its `Display` form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KleeneViolation {
    /// `a_ii != 0`.
    Diagonal { i: usize },
    /// `a_ik + a_kj > a_ij`.
    Triangle { i: usize, k: usize, j: usize },
}

impl fmt::Display for KleeneViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            KleeneViolation::Diagonal { i } => write!(f, "a{0}{0} != 0", i + 1),
            KleeneViolation::Triangle { i, k, j } => write!(
                f,
                "({},{},{}): a{}{} + a{}{} > a{}{}",
                i + 1,
                k + 1,
                j + 1,
                i + 1,
                k + 1,
                k + 1,
                j + 1,
                i + 1,
                j + 1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KleeneVerdict {
    pub violations: Vec<KleeneViolation>,
}

impl KleeneVerdict {
    pub fn is_kleene(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `a_ii = 0` and `a_ik + a_kj <= a_ij` over every index triple with at
/// least two distinct entries, listing each failure.
pub fn is_kleene_star(a: &Matrix4) -> KleeneVerdict {
    let mut violations = Vec::new();
    for i in 0..4 {
        if !a[(i, i)].is_zero() {
            violations.push(KleeneViolation::Diagonal { i });
        }
    }
    for i in 0..4 {
        for k in 0..4 {
            for j in 0..4 {
                if i == k && k == j {
                    continue;
                }
                if a[(i, k)] + a[(k, j)] > a[(i, j)] {
                    violations.push(KleeneViolation::Triangle { i, k, j });
                }
            }
        }
    }
    KleeneVerdict { violations }
}

/// Max-plus product `(A ⊙ B)_ij = max_k a_ik + b_kj`.
pub fn maxplus_product(a: &Matrix4, b: &Matrix4) -> Matrix4 {
    let mut out = [[Rational::ZERO; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..4).map(|k| a[(i, k)] + b[(k, j)]).max().unwrap();
        }
    }
    Matrix4(out)
}

/// `A ⊕ A² ⊕ A³` for a zero-diagonal matrix with nonpositive entries. With a
/// zero diagonal the powers are increasing, so two products suffice.
pub fn kleene_closure(a: &Matrix4) -> Result<KleeneMatrix> {
    for i in 0..4 {
        for j in 0..4 {
            let x = a[(i, j)];
            if i == j && !x.is_zero() {
                return Err(TetraError::Precondition(format!("a{0}{0} = {x}, expected 0", i + 1)));
            }
            if x.is_positive() {
                return Err(TetraError::Precondition(format!(
                    "a{}{} = {x} is positive",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let a2 = maxplus_product(a, a);
    let a3 = maxplus_product(&a2, a);
    KleeneMatrix::new(a3)
}

/// `α_ij = a_ij - a_4j`: every column moved into the chart `X4 = 0`.
pub fn normalize_chart(a: &Matrix4) -> Matrix4 {
    let mut out = a.0;
    for j in 0..4 {
        let last = a[(3, j)];
        for row in out.iter_mut() {
            row[j] -= last;
        }
    }
    Matrix4(out)
}

/// Tropical distance: the largest absolute chart-coordinate difference.
pub fn tdist(p: &ProjectivePoint, q: &ProjectivePoint) -> Rational {
    p.minus(q).iter().map(|d| d.abs()).max().unwrap()
}

/// A 2×2 tropical minor `|A(kl; ij)|` split into its two diagonal sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Minor2 {
    /// `a_ki + a_lj`
    pub main: Rational,
    /// `a_kj + a_li`
    pub anti: Rational,
}

impl Minor2 {
    pub fn of(a: &Matrix4, k: usize, l: usize, i: usize, j: usize) -> Self {
        Minor2 { main: a[(k, i)] + a[(l, j)], anti: a[(k, j)] + a[(l, i)] }
    }

    pub fn value(&self) -> Rational {
        self.main.max(self.anti)
    }

    pub fn attain_count(&self) -> usize {
        if self.main == self.anti {
            2
        } else {
            1
        }
    }

    pub fn is_regular(&self) -> bool {
        self.main != self.anti
    }

    pub fn adiff(&self) -> Rational {
        (self.main - self.anti).abs()
    }
}

/// A validated Kleene star with its 36 2×2 minors cached. Minors are indexed
/// by row pair and column pair, each an unordered pair from [`PAIRS`]
/// taken in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Matrix4", into = "Matrix4")]
pub struct KleeneMatrix {
    a: Matrix4,
    minors: [[Minor2; 6]; 6],
}

impl KleeneMatrix {
    pub fn new(a: Matrix4) -> Result<Self> {
        let verdict = is_kleene_star(&a);
        if !verdict.is_kleene() {
            let list = verdict.violations.iter().map(ToString::to_string).join("; ");
            return Err(TetraError::NotKleene(list));
        }
        let minors = std::array::from_fn(|r| {
            let (k, l) = PAIRS[r];
            std::array::from_fn(|c| {
                let (i, j) = PAIRS[c];
                Minor2::of(&a, k, l, i, j)
            })
        });
        Ok(KleeneMatrix { a, minors })
    }

    pub fn from_ints(rows: [[i64; 4]; 4]) -> Result<Self> {
        KleeneMatrix::new(Matrix4::from_ints(rows))
    }

    pub fn matrix(&self) -> &Matrix4 {
        &self.a
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.a[(i, j)]
    }

    /// Minor on rows `{k, l}` and columns `{i, j}` in ascending order within
    /// each pair.
    pub fn minor(&self, k: usize, l: usize, i: usize, j: usize) -> Minor2 {
        let flip = (k > l) != (i > j);
        let m = self.minors[crate::matrix::pair_index(k, l)][crate::matrix::pair_index(i, j)];
        // Swapping one pair exchanges the two diagonals; swapping both keeps them.
        if flip {
            Minor2 { main: m.anti, anti: m.main }
        } else {
            m
        }
    }

    /// `|a_ki + a_lj - a_kj - a_li|`, symmetric in swapping `k, l` or `i, j`.
    pub fn adiff(&self, k: usize, l: usize, i: usize, j: usize) -> Rational {
        self.minors[crate::matrix::pair_index(k, l)][crate::matrix::pair_index(i, j)].adiff()
    }

    pub fn transpose(&self) -> KleeneMatrix {
        KleeneMatrix::new(self.a.transpose()).expect("the transpose of a Kleene star is one")
    }

    pub fn conjugate(&self, perm: [usize; 4]) -> KleeneMatrix {
        KleeneMatrix::new(self.a.conjugate(perm)).expect("relabeling preserves the Kleene property")
    }

    pub fn normalized(&self) -> Matrix4 {
        normalize_chart(&self.a)
    }

    /// Generator `i`: column `i` in the chart.
    pub fn generator(&self, i: usize) -> ProjectivePoint {
        self.a.column_point(i)
    }

    pub fn trop_det(&self) -> TropDet {
        trop_det(&self.a.0).expect("4x4 is supported")
    }
}

impl TryFrom<Matrix4> for KleeneMatrix {
    type Error = TetraError;
    fn try_from(a: Matrix4) -> Result<Self> {
        KleeneMatrix::new(a)
    }
}

impl From<KleeneMatrix> for Matrix4 {
    fn from(k: KleeneMatrix) -> Matrix4 {
        k.a
    }
}

impl fmt::Display for KleeneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.a, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::r;
    use proptest::prelude::*;

    fn drum() -> Matrix4 {
        Matrix4::from_ints([[0, -4, -6, -10], [-4, 0, -10, -6], [-6, -10, 0, -4], [-10, -6, -4, 0]])
    }

    #[test]
    fn two_by_two_determinants() {
        let d = trop_det(&[[r(0), r(-4)], [r(-4), r(0)]]).unwrap();
        assert_eq!((d.value, d.attain_count), (r(0), 1));
        let d = trop_det(&[[r(0), r(0)], [r(0), r(0)]]).unwrap();
        assert_eq!((d.value, d.attain_count), (r(0), 2));
    }

    #[test]
    fn drum_minor_is_singular() {
        let a = drum();
        let sub = [[a[(0, 0)], a[(0, 1)]], [a[(2, 0)], a[(2, 1)]]];
        let d = trop_det(&sub).unwrap();
        // 0 + (-10) against (-4) + (-6).
        assert_eq!((d.value, d.attain_count), (r(-10), 2));
    }

    #[test]
    fn unsupported_sizes() {
        let one = [[r(1)]];
        assert!(matches!(trop_det(&one), Err(TetraError::UnsupportedSize { .. })));
        let ragged: Vec<Vec<Rational>> = vec![vec![r(0), r(0)], vec![r(0)]];
        assert!(trop_det(&ragged).is_err());
    }

    #[test]
    fn kleene_predicate() {
        assert!(is_kleene_star(&Matrix4::zero()).is_kleene());
        assert!(is_kleene_star(&drum()).is_kleene());
        let mut bad = Matrix4::zero();
        bad.0[0][1] = r(1);
        let v = is_kleene_star(&bad);
        assert!(v.violations.contains(&KleeneViolation::Triangle { i: 0, k: 1, j: 0 }));
        assert_eq!(KleeneViolation::Triangle { i: 0, k: 1, j: 0 }.to_string(), "(1,2,1): a12 + a21 > a11");
    }

    #[test]
    fn closure_examples() {
        assert_eq!(*kleene_closure(&Matrix4::zero()).unwrap().matrix(), Matrix4::zero());
        let mut a = Matrix4::from_ints([[0, -1, -1, -1], [-1, 0, -1, -1], [-1, -1, 0, -1], [-1, -1, -1, 0]]);
        a.0[0][2] = r(-10);
        a.0[0][1] = r(-2);
        a.0[1][2] = r(-2);
        // The path 1 -> 4 -> 3 of weight -2 beats 1 -> 2 -> 3.
        let c = kleene_closure(&a).unwrap();
        assert_eq!(c.get(0, 2), r(-2));
        let mut b = a.map(|x| if x.is_zero() { x } else { r(-3) });
        b.0[0][2] = r(-10);
        b.0[0][1] = r(-2);
        b.0[1][2] = r(-2);
        assert_eq!(kleene_closure(&b).unwrap().get(0, 2), r(-4));
        let d = kleene_closure(&drum()).unwrap();
        assert_eq!(*d.matrix(), drum());
        let mut pos = Matrix4::zero();
        pos.0[2][1] = r(3);
        assert!(matches!(kleene_closure(&pos), Err(TetraError::Precondition(_))));
    }

    #[test]
    fn chart_normalization() {
        let n = normalize_chart(&drum());
        assert_eq!(n.column(0), [r(10), r(6), r(4), r(0)]);
        for j in 0..4 {
            assert_eq!(n.column_point(j), drum().column_point(j));
        }
    }

    #[test]
    fn tdist_examples() {
        let p = ProjectivePoint::from_ints([6, 3, 3, 0]);
        let q = ProjectivePoint::from_ints([0, -3, 3, 0]);
        assert_eq!(tdist(&p, &q), r(6));
        assert_eq!(tdist(&p, &p), r(0));
        let s = ProjectivePoint::from_ints([6, 3, 1, 0]);
        assert_eq!(tdist(&p, &s), r(2));
        assert_eq!(p.euclidean_sq(&s), r(4));
    }

    #[test]
    fn minor_orientation() {
        let k = KleeneMatrix::new(drum()).unwrap();
        let m = k.minor(0, 2, 0, 1);
        assert_eq!((m.main, m.anti), (r(-10), r(-10)));
        let m = k.minor(2, 3, 0, 1);
        assert_eq!(m.main, r(-6 - 6));
        assert_eq!(k.minor(3, 2, 0, 1), Minor2 { main: m.anti, anti: m.main });
        assert_eq!(k.minor(3, 2, 1, 0), m);
        assert_eq!(k.adiff(0, 2, 0, 1), r(0));
    }

    #[test]
    fn serde_round_trip_validates() {
        let k = KleeneMatrix::new(drum()).unwrap();
        let s = serde_json::to_string(&k).unwrap();
        let back: KleeneMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, k);
        let bad = r#"[["0","1","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]]"#;
        assert!(serde_json::from_str::<KleeneMatrix>(bad).is_err());
    }

    fn random_matrix() -> impl Strategy<Value = Matrix4> {
        prop::array::uniform4(prop::array::uniform4(-30i64..=0)).prop_map(|mut rows| {
            for (i, row) in rows.iter_mut().enumerate() {
                row[i] = 0;
            }
            Matrix4::from_ints(rows)
        })
    }

    fn point() -> impl Strategy<Value = ProjectivePoint> {
        prop::array::uniform3((-40i64..=40, 1i64..=4)).prop_map(|c| {
            ProjectivePoint::from_chart(c.map(|(n, d)| Rational::new(n as i128, d as i128)))
        })
    }

    proptest! {
        #[test]
        fn closure_is_idempotent_kleene(a in random_matrix()) {
            let k = kleene_closure(&a).unwrap();
            prop_assert!(is_kleene_star(k.matrix()).is_kleene());
            prop_assert_eq!(maxplus_product(k.matrix(), k.matrix()), *k.matrix());
            prop_assert_eq!(kleene_closure(k.matrix()).unwrap(), k.clone());
            for i in 0..4 {
                for j in 0..4 {
                    prop_assert!(k.get(i, j) >= a[(i, j)]);
                }
            }
        }

        #[test]
        fn normalization_keeps_columns(a in random_matrix()) {
            let n = normalize_chart(&a);
            for j in 0..4 {
                prop_assert!(n[(3, j)].is_zero());
                let shift = n[(0, j)] - a[(0, j)];
                for i in 0..4 {
                    prop_assert_eq!(n[(i, j)] - a[(i, j)], shift);
                }
            }
        }

        #[test]
        fn tdist_is_a_metric(p in point(), q in point(), s in point()) {
            prop_assert!(!tdist(&p, &q).is_negative());
            prop_assert_eq!(tdist(&p, &q), tdist(&q, &p));
            prop_assert_eq!(tdist(&p, &q).is_zero(), p == q);
            prop_assert!(tdist(&p, &s) <= tdist(&p, &q) + tdist(&q, &s));
        }

        #[test]
        fn determinant_attained_at_least_once(a in random_matrix()) {
            let d = trop_det(&a.0).unwrap();
            prop_assert!(d.attain_count >= 1);
        }
    }
}
