//! Type-vector, hexagon structure and the six combinatorial classes of
//! maximal spans, plus the transpose (mirror) report.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Result, TetraError};
use crate::extremal::{check_hypothesis1, check_hypothesis2, ExtremalLabel};
use crate::line::LineType;
use crate::matrix::{complement, PAIRS};
use crate::maxplus::KleeneMatrix;
use crate::polytrope::{polytrope_of, Configuration, PolygonVector, Polytrope, Shape};

/// `t_j` counts the lines whose type reads `[4j, kl]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TypeVector(pub [usize; 3]);

impl TypeVector {
    pub const ALLOWED: [[usize; 3]; 5] = [[2, 2, 2], [3, 2, 1], [3, 3, 0], [4, 1, 1], [4, 2, 0]];

    /// Entries in decreasing order.
    pub fn multiset(&self) -> [usize; 3] {
        let mut m = self.0;
        m.sort_unstable_by(|a, b| b.cmp(a));
        m
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

pub fn type_vector_from_types(types: &[LineType; 6]) -> Result<TypeVector> {
    let mut t = [0; 3];
    for (n, ty) in types.iter().enumerate() {
        let j = ty.partner_of_last().ok_or_else(|| {
            let (a, b) = PAIRS[n];
            TetraError::NonMaximal(format!("L{}{} is a tetrapod", a + 1, b + 1))
        })?;
        t[j] += 1;
    }
    Ok(TypeVector(t))
}

pub fn type_vector(a: &KleeneMatrix) -> Result<TypeVector> {
    type_vector_from_types(&types_of(a)?)
}

fn types_of(a: &KleeneMatrix) -> Result<[LineType; 6]> {
    let mut out = [LineType::Tetrapod; 6];
    for (n, &(i, j)) in PAIRS.iter().enumerate() {
        out[n] = crate::line::line_type_from_kleene(a, i, j)?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Adjacency {
    None,
    OnePair,
    TwoPairs,
    Cycle4,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HexStructure {
    pub hexagon_count: usize,
    pub adjacency: Adjacency,
    /// Hexagonal facets as the ordered pairs `(l, m)` of `x_l - x_m >= a_lm`.
    pub hexagons: Vec<(usize, usize)>,
    pub adjacent_pairs: Vec<((usize, usize), (usize, usize))>,
}

/// Hexagons predicted from line types. The facet `x_l - x_m >= a_lm` is a
/// hexagon when both lines `L_mx` and `L_my` (with `{x, y}` the remaining
/// indices) pair `l` with `m`; two such hexagons are adjacent when they use a
/// common line.
pub fn hexagons_from_types(types: &[LineType; 6]) -> HexStructure {
    let ty = |i: usize, j: usize| types[crate::matrix::pair_index(i, j)];
    let mut hexagons = Vec::new();
    let mut used: Vec<BTreeSet<(usize, usize)>> = Vec::new();
    for l in 0..4 {
        for m in 0..4 {
            if l == m {
                continue;
            }
            let (x, y) = complement(l, m);
            let want = LineType::with_half(l, m);
            if ty(m, x) == want && ty(m, y) == want {
                hexagons.push((l, m));
                used.push([(m.min(x), m.max(x)), (m.min(y), m.max(y))].into_iter().collect());
            }
        }
    }
    let mut adjacent_pairs = Vec::new();
    for a in 0..hexagons.len() {
        for b in a + 1..hexagons.len() {
            if !used[a].is_disjoint(&used[b]) {
                adjacent_pairs.push((hexagons[a], hexagons[b]));
            }
        }
    }
    structure(hexagons, adjacent_pairs)
}

fn structure(hexagons: Vec<(usize, usize)>, adjacent_pairs: Vec<((usize, usize), (usize, usize))>) -> HexStructure {
    let adjacency = match (hexagons.len(), adjacent_pairs.len()) {
        (_, 0) => Adjacency::None,
        (_, 1) => Adjacency::OnePair,
        (4, 4) => Adjacency::Cycle4,
        _ => Adjacency::TwoPairs,
    };
    HexStructure { hexagon_count: hexagons.len(), adjacency, hexagons, adjacent_pairs }
}

/// Hexagons and their adjacency read from the facets: two facets are
/// adjacent when they share an edge.
pub fn hexagons_from_facets(p: &Polytrope) -> HexStructure {
    let hex: Vec<_> = p.hexagons();
    let hexagons: Vec<(usize, usize)> = hex.iter().map(|f| (f.plane.i, f.plane.j)).collect();
    let mut adjacent_pairs = Vec::new();
    for a in 0..hex.len() {
        for b in a + 1..hex.len() {
            let shared = hex[a].label_set().intersection(&hex[b].label_set()).count();
            if shared >= 2 {
                adjacent_pairs.push((hexagons[a], hexagons[b]));
            }
        }
    }
    structure(hexagons, adjacent_pairs)
}

/// Both derivations, required to agree.
pub fn hex_structure(p: &Polytrope) -> Result<HexStructure> {
    let from_types = hexagons_from_types(&p.extremals.line_types());
    let mut from_facets = hexagons_from_facets(p);
    let mut sorted = from_types.clone();
    sorted.hexagons.sort_unstable();
    from_facets.hexagons.sort_unstable();
    type Pair = ((usize, usize), (usize, usize));
    let norm = |v: &[Pair]| -> BTreeSet<Pair> {
        v.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect()
    };
    if sorted.hexagons != from_facets.hexagons
        || norm(&sorted.adjacent_pairs) != norm(&from_facets.adjacent_pairs)
    {
        return Err(TetraError::Inconsistent(format!(
            "hexagons from line types {:?} disagree with facets {:?}",
            sorted.hexagons, from_facets.hexagons
        )));
    }
    Ok(from_types)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub class_id: u8,
    pub type_vector: TypeVector,
    pub polygon_vector: PolygonVector,
    pub hexes: HexStructure,
    pub centrally_symmetric: bool,
    /// Some opposite pair (plane vertex omitting `l`, generator `l`) is
    /// `(5.5.5)` at both ends with one handedness, so the mirror image carries
    /// the other handedness.
    pub chiral_partner_distinct: bool,
    /// At 123, 124, 134, 234, then generators 1 to 4.
    pub configurations: Vec<Configuration>,
}

/// The odd extremals in report order.
pub fn odd_labels() -> [ExtremalLabel; 8] {
    [
        ExtremalLabel::PlaneVertex { omit: 3 },
        ExtremalLabel::PlaneVertex { omit: 2 },
        ExtremalLabel::PlaneVertex { omit: 1 },
        ExtremalLabel::PlaneVertex { omit: 0 },
        ExtremalLabel::Generator(0),
        ExtremalLabel::Generator(1),
        ExtremalLabel::Generator(2),
        ExtremalLabel::Generator(3),
    ]
}

/// Class from the type-vector and, for `{3,2,1}`, whether the two lines of
/// the doubly occurring type share an index.
pub fn class_from_types(types: &[LineType; 6]) -> Result<u8> {
    let tv = type_vector_from_types(types)?;
    Ok(match tv.multiset() {
        [2, 2, 2] => 1,
        [3, 2, 1] => {
            let j = (0..3).find(|&j| tv.0[j] == 2).unwrap();
            let split = LineType::with_half(3, j);
            let pairs: Vec<(usize, usize)> =
                PAIRS.iter().zip(types.iter()).filter(|(_, t)| **t == split).map(|(p, _)| *p).collect();
            let (p, q) = (pairs[0], pairs[1]);
            let shared = [p.0, p.1].iter().filter(|x| **x == q.0 || **x == q.1).count();
            if shared == 1 {
                2
            } else {
                3
            }
        }
        [3, 3, 0] => 4,
        [4, 1, 1] => 5,
        [4, 2, 0] => 6,
        other => return Err(TetraError::Inconsistent(format!("type-vector multiset {other:?}"))),
    })
}

pub fn expected_polygon_vector(class_id: u8) -> PolygonVector {
    match class_id {
        1 | 2 => PolygonVector([0, 3, 6, 3]),
        3 => PolygonVector([0, 2, 8, 2]),
        _ => PolygonVector([0, 4, 4, 4]),
    }
}

/// Refuses non-maximal inputs, naming the failing hypothesis.
pub fn require_hypotheses(a: &KleeneMatrix) -> Result<()> {
    let h1 = check_hypothesis1(a);
    let h2 = check_hypothesis2(a);
    let mut reasons = Vec::new();
    if !h1.passes() {
        let gens: Vec<String> = h1.failing().iter().map(|g| (g + 1).to_string()).collect();
        reasons.push(format!("hypothesis 1 fails at generator(s) {}", gens.join(", ")));
    }
    if !h2.passes() {
        let w: Vec<String> = h2.failing.iter().map(ToString::to_string).collect();
        reasons.push(format!("hypothesis 2 fails: {}", w.join(", ")));
    }
    if reasons.is_empty() {
        Ok(())
    } else {
        Err(TetraError::NonMaximal(reasons.join("; ")))
    }
}

pub fn classify_polytrope(p: &Polytrope) -> Result<ClassVerdict> {
    if !p.is_maximal() {
        require_hypotheses(&p.matrix)?;
    }
    let types = p.extremals.line_types();
    let type_vector = type_vector_from_types(&types)?;
    let class_id = class_from_types(&types)?;
    if expected_polygon_vector(class_id) != p.polygon_vector {
        return Err(TetraError::Inconsistent(format!(
            "class {class_id} with polygon-vector {}",
            p.polygon_vector
        )));
    }
    let hexes = hex_structure(p)?;
    let configurations = odd_labels().iter().map(|&l| p.configuration_at(l)).collect::<Result<Vec<_>>>()?;
    let chiral_partner_distinct = (0..4).any(|l| {
        let (pv, g) = (&configurations[3 - l], &configurations[4 + l]);
        matches!((pv.shape, g.shape), (Shape::Triple555 { handedness: x }, Shape::Triple555 { handedness: y }) if x == y)
    });
    Ok(ClassVerdict {
        class_id,
        type_vector,
        polygon_vector: p.polygon_vector,
        hexes,
        centrally_symmetric: p.matrix.matrix().is_symmetric(),
        chiral_partner_distinct,
        configurations,
    })
}

pub fn classify(a: &KleeneMatrix) -> Result<ClassVerdict> {
    require_hypotheses(a)?;
    classify_polytrope(&polytrope_of(a)?)
}

impl ClassVerdict {
    pub fn configuration(&self, at: ExtremalLabel) -> Option<&Configuration> {
        self.configurations.iter().find(|c| c.at == at)
    }

    /// `(plane vertex omitting l, generator l)` for each `l`.
    pub fn opposite_pairs(&self) -> Vec<(Configuration, Configuration)> {
        (0..4)
            .map(|l| {
                let pv = *self.configuration(ExtremalLabel::PlaneVertex { omit: l }).unwrap();
                let g = *self.configuration(ExtremalLabel::Generator(l)).unwrap();
                (pv, g)
            })
            .collect()
    }

    /// True when some opposite pair is `(5.5.5)` at both ends with opposite
    /// handedness, which no maximal span allows.
    pub fn has_left_right_pair(&self) -> bool {
        self.opposite_pairs().iter().any(|(a, b)| {
            matches!((a.shape, b.shape), (Shape::Triple555 { handedness: x }, Shape::Triple555 { handedness: y }) if x != y)
        })
    }
}

/// The solid and its mirror image: `span(Aᵗ)` is `-span(A)` up to the
/// labeling, so odd configurations swap between opposite extremals and
/// `(5.5.5)` handedness flips.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub centrally_symmetric: bool,
    pub verdict: Option<ClassVerdict>,
    pub transpose_verdict: Option<ClassVerdict>,
}

pub fn symmetry_chirality(a: &KleeneMatrix) -> SymmetryReport {
    SymmetryReport {
        centrally_symmetric: a.matrix().is_symmetric(),
        verdict: classify(a).ok(),
        transpose_verdict: classify(&a.transpose()).ok(),
    }
}
