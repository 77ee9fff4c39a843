//! Parametric example families and the named example matrices.

use std::fmt;

use serde::Serialize;

use crate::error::{Result, TetraError};
use crate::matrix::Matrix4;
use crate::maxplus::KleeneMatrix;
use crate::rational::Rational;

fn positive(name: &str, x: Rational) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(TetraError::Parameter(format!("{name} = {x} must be positive")))
    }
}

/// Class 1 family: needs `γ, δ, c > 0` and `2γ + δ < 2c`.
pub fn gen_gamma_delta(gamma: Rational, delta: Rational, c: Rational) -> Result<KleeneMatrix> {
    positive("gamma", gamma)?;
    positive("delta", delta)?;
    positive("c", c)?;
    let two = Rational::from_int(2);
    if two * gamma + delta >= two * c {
        return Err(TetraError::Parameter(format!("need 2*gamma + delta < 2*c, got {gamma}, {delta}, {c}")));
    }
    let (g, d) = (gamma, delta);
    let z = Rational::ZERO;
    KleeneMatrix::new(Matrix4([
        [z, -two * g - d, -g - d, -c],
        [-g - d, z, -two * g - d, -c],
        [-two * g - d, -g - d, z, -c],
        [-c, -c, -c, z],
    ]))
}

/// Circulant matrix of `p`: column `j` is `p` rotated down by `j`.
pub fn circulant_of(p: [Rational; 4]) -> Matrix4 {
    Matrix4(std::array::from_fn(|i| std::array::from_fn(|j| p[(i + 4 - j) % 4])))
}

/// Anticirculant symmetric matrix of `p`: entry `(i, j)` is `p[i xor j]`.
pub fn anticirculant_of(p: [Rational; 4]) -> Matrix4 {
    Matrix4(std::array::from_fn(|i| std::array::from_fn(|j| p[i ^ j])))
}

fn check_circulant_params(a: Rational, b: Rational, c: Rational) -> Result<[Rational; 4]> {
    positive("a", a)?;
    if !(a < b && b < c && c <= a + a) {
        return Err(TetraError::Parameter(format!("need 0 < a < b < c <= 2a, got {a}, {b}, {c}")));
    }
    if b + b == a + c {
        return Err(TetraError::Parameter(format!(
            "2b = a + c ({a}, {b}, {c}) is the boundary where the span is not maximal"
        )));
    }
    Ok([Rational::ZERO, -a, -b, -c])
}

/// `C(p)` for `p = [0, -a, -b, -c]`: class 4 or 5.
pub fn gen_circulant(a: Rational, b: Rational, c: Rational) -> Result<KleeneMatrix> {
    KleeneMatrix::new(circulant_of(check_circulant_params(a, b, c)?))
}

/// `A(p)` for `p = [0, -a, -b, -c]`: class 6.
pub fn gen_anticirculant(a: Rational, b: Rational, c: Rational) -> Result<KleeneMatrix> {
    KleeneMatrix::new(anticirculant_of(check_circulant_params(a, b, c)?))
}

/// The normalized matrix with plane vertex 123 at the origin and generator 4
/// at `[-a, -b, -c, 0]`, whose plane vertex 123 is `(5.5.5)` left when the
/// hypotheses hold. No sufficient parameter region is known, so the result
/// is only checked to be a Kleene star.
pub fn gen_555_left(gamma: [Rational; 3], delta: [Rational; 3], a: Rational, b: Rational, c: Rational) -> Result<KleeneMatrix> {
    for (n, x) in gamma.iter().enumerate() {
        positive(&format!("gamma{}", n + 1), *x)?;
    }
    for (n, x) in delta.iter().enumerate() {
        positive(&format!("delta{}", n + 1), *x)?;
    }
    positive("a", a)?;
    positive("b", b)?;
    positive("c", c)?;
    let [g1, g2, g3] = gamma;
    let [d1, d2, d3] = delta;
    let z = Rational::ZERO;
    KleeneMatrix::new(Matrix4([
        [z, -g2 - d2, -g3 - g2 - d2, -a],
        [-g1 - g3 - d3, z, -g3 - d3, -b],
        [-g1 - d1, -g2 - g1 - d1, z, -c],
        [z, z, z, z],
    ]))
}

pub const REGISTRY_NAMES: [&str; 4] = ["drum", "b15", "b15-prime", "aa191"];

/// The named example matrices, exactly as printed.
pub fn registry(name: &str) -> Result<KleeneMatrix> {
    let rows = match name {
        "drum" => [[0, -4, -6, -10], [-4, 0, -10, -6], [-6, -10, 0, -4], [-10, -6, -4, 0]],
        "b15" => [[0, -7, -5, -1], [-8, 0, -8, -7], [-7, -4, 0, -7], [-9, -9, -8, 0]],
        "b15-prime" => [[0, -6, -6, -4], [-4, 0, -9, -6], [-6, -8, 0, -7], [-10, -7, -6, 0]],
        "aa191" => [[0, -6, -10, -5], [-6, 0, -5, -3], [-3, -5, 0, -6], [-5, -3, -6, 0]],
        other => return Err(TetraError::UnknownMatrix(other.to_string())),
    };
    KleeneMatrix::from_ints(rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    GammaDelta { gamma: Rational, delta: Rational, c: Rational },
    Circulant { a: Rational, b: Rational, c: Rational },
    Anticirculant { a: Rational, b: Rational, c: Rational },
    Penta555Left { gamma: [Rational; 3], delta: [Rational; 3], a: Rational, b: Rational, c: Rational },
    Registry { name: String },
}

impl FamilySpec {
    /// Parses `gammadelta G D C`, `circulant A B C`, `anticirculant A B C`,
    /// `555left G1 G2 G3 D1 D2 D3 A B C` or `registry NAME`.
    pub fn parse(args: &[String]) -> Result<FamilySpec> {
        let (family, rest) =
            args.split_first().ok_or_else(|| TetraError::Parameter("missing family name".into()))?;
        let nums = |n: usize| -> Result<Vec<Rational>> {
            if rest.len() != n {
                return Err(TetraError::Parameter(format!("{family} takes {n} parameters, got {}", rest.len())));
            }
            rest.iter().map(|s| s.parse::<Rational>().map_err(TetraError::from)).collect()
        };
        Ok(match family.to_ascii_lowercase().as_str() {
            "gammadelta" | "gamma-delta" => {
                let v = nums(3)?;
                FamilySpec::GammaDelta { gamma: v[0], delta: v[1], c: v[2] }
            }
            "circulant" => {
                let v = nums(3)?;
                FamilySpec::Circulant { a: v[0], b: v[1], c: v[2] }
            }
            "anticirculant" => {
                let v = nums(3)?;
                FamilySpec::Anticirculant { a: v[0], b: v[1], c: v[2] }
            }
            "555left" | "penta555left" => {
                let v = nums(9)?;
                FamilySpec::Penta555Left {
                    gamma: [v[0], v[1], v[2]],
                    delta: [v[3], v[4], v[5]],
                    a: v[6],
                    b: v[7],
                    c: v[8],
                }
            }
            "registry" => match rest {
                [name] => FamilySpec::Registry { name: name.clone() },
                _ => return Err(TetraError::Parameter("registry takes one name".into())),
            },
            other => return Err(TetraError::Parameter(format!("unknown family {other:?}"))),
        })
    }

    pub fn build(&self) -> Result<KleeneMatrix> {
        match self {
            FamilySpec::GammaDelta { gamma, delta, c } => gen_gamma_delta(*gamma, *delta, *c),
            FamilySpec::Circulant { a, b, c } => gen_circulant(*a, *b, *c),
            FamilySpec::Anticirculant { a, b, c } => gen_anticirculant(*a, *b, *c),
            FamilySpec::Penta555Left { gamma, delta, a, b, c } => gen_555_left(*gamma, *delta, *a, *b, *c),
            FamilySpec::Registry { name } => registry(name),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::GammaDelta { gamma, delta, c } => write!(f, "gammadelta {gamma} {delta} {c}"),
            FamilySpec::Circulant { a, b, c } => write!(f, "circulant {a} {b} {c}"),
            FamilySpec::Anticirculant { a, b, c } => write!(f, "anticirculant {a} {b} {c}"),
            FamilySpec::Penta555Left { gamma, delta, a, b, c } => write!(
                f,
                "555left {} {} {} {} {} {} {a} {b} {c}",
                gamma[0], gamma[1], gamma[2], delta[0], delta[1], delta[2]
            ),
            FamilySpec::Registry { name } => write!(f, "registry {name}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::r;

    #[test]
    fn circulant_layouts() {
        let c = circulant_of([r(0), r(-3), r(-4), r(-6)]);
        assert_eq!(c.0[0], [r(0), r(-6), r(-4), r(-3)]);
        assert_eq!(c.0[1], [r(-3), r(0), r(-6), r(-4)]);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(c[(i, j)], c[((i + 1) % 4, (j + 1) % 4)]);
            }
        }
        let a = anticirculant_of([r(0), r(-6), r(-3), r(-5)]);
        assert!(a.is_symmetric());
        assert_eq!(a.0[2], [r(-3), r(-5), r(0), r(-6)]);
    }

    #[test]
    fn parameter_checks() {
        assert!(gen_gamma_delta(r(1), r(1), r(2)).is_ok());
        assert!(matches!(gen_gamma_delta(r(2), r(1), r(2)), Err(TetraError::Parameter(_))));
        assert!(matches!(gen_circulant(r(3), r(4), r(7)), Err(TetraError::Parameter(_))));
        assert!(matches!(gen_circulant(r(2), r(3), r(4)), Err(TetraError::Parameter(_))));
        assert!(gen_anticirculant(r(3), r(5), r(6)).is_ok());
        assert!(matches!(registry("nope"), Err(TetraError::UnknownMatrix(_))));
        assert!(gen_555_left([r(2); 3], [r(1); 3], r(0), r(6), r(6)).is_err());
    }

    #[test]
    fn family_arguments_parse() {
        let args: Vec<String> = ["circulant", "3", "4", "6"].iter().map(|s| s.to_string()).collect();
        let spec = FamilySpec::parse(&args).unwrap();
        assert_eq!(spec, FamilySpec::Circulant { a: r(3), b: r(4), c: r(6) });
        assert_eq!(spec.to_string(), "circulant 3 4 6");
        let bad: Vec<String> = ["circulant", "3"].iter().map(|s| s.to_string()).collect();
        assert!(FamilySpec::parse(&bad).is_err());
        let g: Vec<String> = ["gammadelta", "1", "1", "5/2"].iter().map(|s| s.to_string()).collect();
        assert!(FamilySpec::parse(&g).unwrap().build().is_ok());
    }

    #[test]
    fn registry_is_kleene() {
        for name in REGISTRY_NAMES {
            registry(name).unwrap();
        }
    }

    #[test]
    fn families_land_in_their_classes() {
        use crate::classify::classify;
        let v = classify(&gen_gamma_delta(r(1), r(1), r(2)).unwrap()).unwrap();
        assert_eq!(v.class_id, 1);
        let v = classify(&gen_circulant(r(3), r(4), r(6)).unwrap()).unwrap();
        assert_eq!((v.class_id, v.type_vector.0), (5, [1, 4, 1]));
        let v = classify(&gen_circulant(r(3), r(5), r(6)).unwrap()).unwrap();
        assert_eq!((v.class_id, v.type_vector.0), (4, [3, 0, 3]));
        let v = classify(&gen_anticirculant(r(3), r(4), r(6)).unwrap()).unwrap();
        assert_eq!(v.class_id, 6);
    }

    #[test]
    fn left_family_sample_is_left() {
        use crate::classify::classify;
        use crate::extremal::ExtremalLabel;
        use crate::polytrope::{Handedness, Shape};
        let a = gen_555_left([r(2); 3], [r(1); 3], r(6), r(6), r(6)).unwrap();
        let v = classify(&a).unwrap();
        let c = v.configuration(ExtremalLabel::PlaneVertex { omit: 3 }).unwrap();
        assert_eq!(c.shape, Shape::Triple555 { handedness: Handedness::Left });
    }
}
