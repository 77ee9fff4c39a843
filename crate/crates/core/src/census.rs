//! Random sampling of the space of 4×4 Kleene stars.
//!
//! Each sample draws integer off-diagonal entries uniformly from `[-R, 0]`,
//! closes the matrix, keeps it when both hypotheses hold and classifies it.
//! Work is split into `J` contiguous chunks, one per scoped thread, each with
//! its own ChaCha stream derived from the seed, so the report depends only on
//! `(N, R, seed, J)`.

use std::collections::BTreeMap;
use std::thread;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{classify_polytrope, ClassVerdict, TypeVector};
use crate::error::{Result, TetraError};
use crate::extremal::{check_hypothesis1, check_hypothesis2};
use crate::matrix::Matrix4;
use crate::maxplus::{kleene_closure, trop_det, KleeneMatrix};
use crate::polytrope::{polytrope_of, PolygonVector, Polytrope};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CensusConfig {
    pub samples: usize,
    pub range: i64,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig { samples: 10_000, range: 50, seed: 1, jobs: 1 }
    }
}

/// One failed check on one sample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleViolation {
    pub sample: usize,
    pub matrix: Matrix4,
    pub problem: String,
}

/// Singular 3×3 minors among samples that passed both hypotheses.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct MinorFindings {
    pub minors_checked: usize,
    pub singular_minors: usize,
    pub samples_with_singular: usize,
    /// At most five witnesses, as `(sample, rows, cols)` with 1-based indices.
    pub examples: Vec<(usize, String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub config: CensusConfig,
    pub classified: usize,
    pub refused_hypothesis1: usize,
    pub refused_hypothesis2: usize,
    pub class_counts: BTreeMap<u8, usize>,
    pub polygon_vectors: BTreeMap<String, usize>,
    pub type_multisets: BTreeMap<String, usize>,
    /// Samples where the odd configurations at opposite extremals are both
    /// `(5.5.5)` with one handedness.
    pub chiral_partner_distinct: usize,
    pub violations: Vec<SampleViolation>,
    pub minors3: MinorFindings,
}

impl CensusReport {
    pub fn all_classes_seen(&self) -> bool {
        (1..=6).all(|c| self.class_counts.get(&c).copied().unwrap_or(0) > 0)
    }

    pub fn count(&self, class_id: u8) -> usize {
        self.class_counts.get(&class_id).copied().unwrap_or(0)
    }

    /// Plain text frequency table.
    pub fn table(&self) -> String {
        let c = &self.config;
        let mut s = format!(
            "census: samples={} range={} seed={} jobs={}\n",
            c.samples, c.range, c.seed, c.jobs
        );
        s += &format!(
            "classified: {}  refused: hypothesis1={} hypothesis2={}\n",
            self.classified, self.refused_hypothesis1, self.refused_hypothesis2
        );
        s += "class  count\n";
        for id in 1..=6u8 {
            s += &format!("{id:>5}  {}\n", self.count(id));
        }
        s += "polygon-vectors:\n";
        for (k, v) in &self.polygon_vectors {
            s += &format!("  {k}  {v}\n");
        }
        s += "type-vector multisets:\n";
        for (k, v) in &self.type_multisets {
            s += &format!("  {k}  {v}\n");
        }
        let m = &self.minors3;
        s += &format!(
            "3x3 minors: {} checked, {} singular, in {} samples\n",
            m.minors_checked, m.singular_minors, m.samples_with_singular
        );
        for (n, rows, cols) in &m.examples {
            s += &format!("  sample {n}: rows {rows} cols {cols}\n");
        }
        s += &format!("samples with a chiral partner distinct: {}\n", self.chiral_partner_distinct);
        s += &format!("invariant violations: {}\n", self.violations.len());
        for v in &self.violations {
            s += &format!("  sample {}: {}\n", v.sample, v.problem);
        }
        s
    }
}

/// A uniform random integer matrix with zero diagonal and entries in `[-range, 0]`.
pub fn random_matrix<R: Rng>(rng: &mut R, range: i64) -> Matrix4 {
    let mut rows = [[0i64; 4]; 4];
    for (i, row) in rows.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            if i != j {
                *x = rng.random_range(-range..=0);
            }
        }
    }
    Matrix4::from_ints(rows)
}

/// The closed sample stream of worker `worker`.
pub fn worker_rng(seed: u64, worker: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(worker as u64);
    rng
}

/// The first `n` closed samples for a single worker, in order.
pub fn samples(seed: u64, range: i64, n: usize) -> Vec<KleeneMatrix> {
    let mut rng = worker_rng(seed, 0);
    (0..n)
        .map(|_| kleene_closure(&random_matrix(&mut rng, range)).expect("closure of a nonpositive matrix"))
        .collect()
}

enum Outcome {
    RefusedH1,
    RefusedH2,
    Classified { verdict: Box<ClassVerdict>, problems: Vec<String>, singular: Vec<(String, String)> },
    Failed(String),
}

fn singular_minors3(a: &Matrix4) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for rows in (0..4).combinations(3) {
        for cols in (0..4).combinations(3) {
            let m: Vec<[Rational; 3]> = rows.iter().map(|&r| [a[(r, cols[0])], a[(r, cols[1])], a[(r, cols[2])]]).collect();
            if !trop_det(&m).expect("3×3").is_regular() {
                let fmt = |v: &[usize]| v.iter().map(|x| (x + 1).to_string()).collect::<String>();
                out.push((fmt(&rows), fmt(&cols)));
            }
        }
    }
    out
}

/// Checks beyond those the builder already enforces.
fn sample_problems(p: &Polytrope, v: &ClassVerdict) -> Vec<String> {
    let mut out = p.invariant_violations();
    if PolygonVector::FORBIDDEN.contains(&v.polygon_vector) {
        out.push(format!("forbidden polygon-vector {}", v.polygon_vector));
    }
    if !TypeVector::ALLOWED.contains(&v.type_vector.multiset()) {
        out.push(format!("type-vector {}", v.type_vector));
    }
    if v.has_left_right_pair() {
        out.push("opposite odd extremals are (5.5.5) left and right".into());
    }
    out
}

fn run_one(a: &KleeneMatrix) -> Outcome {
    if !check_hypothesis1(a).passes() {
        return Outcome::RefusedH1;
    }
    if !check_hypothesis2(a).passes() {
        return Outcome::RefusedH2;
    }
    let result: Result<(Polytrope, ClassVerdict)> = polytrope_of(a).and_then(|p| {
        let v = classify_polytrope(&p)?;
        Ok((p, v))
    });
    match result {
        Ok((p, v)) => Outcome::Classified {
            problems: sample_problems(&p, &v),
            verdict: Box::new(v),
            singular: singular_minors3(a.matrix()),
        },
        Err(e) => Outcome::Failed(e.to_string()),
    }
}

fn chunk_bounds(samples: usize, jobs: usize, w: usize) -> (usize, usize) {
    let base = samples / jobs;
    let extra = samples % jobs;
    let start = w * base + w.min(extra);
    (start, start + base + usize::from(w < extra))
}

pub fn run_census(config: CensusConfig) -> Result<CensusReport> {
    if config.samples == 0 {
        return Err(TetraError::Parameter("census needs at least one sample".into()));
    }
    if config.range < 1 {
        return Err(TetraError::Parameter("census range must be at least 1".into()));
    }
    let jobs = config.jobs.clamp(1, config.samples);
    let per_worker: Vec<Vec<(usize, Matrix4, Outcome)>> = thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|w| {
                s.spawn(move || {
                    let (start, end) = chunk_bounds(config.samples, jobs, w);
                    let mut rng = worker_rng(config.seed, w);
                    (start..end)
                        .map(|n| {
                            let a = kleene_closure(&random_matrix(&mut rng, config.range))
                                .expect("closure of a nonpositive matrix");
                            let outcome = run_one(&a);
                            (n, *a.matrix(), outcome)
                        })
                        .collect()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("census worker panicked")).collect()
    });

    let mut report = CensusReport {
        config: CensusConfig { jobs, ..config },
        classified: 0,
        refused_hypothesis1: 0,
        refused_hypothesis2: 0,
        class_counts: BTreeMap::new(),
        polygon_vectors: BTreeMap::new(),
        type_multisets: BTreeMap::new(),
        chiral_partner_distinct: 0,
        violations: Vec::new(),
        minors3: MinorFindings::default(),
    };
    for (n, matrix, outcome) in per_worker.into_iter().flatten() {
        match outcome {
            Outcome::RefusedH1 => report.refused_hypothesis1 += 1,
            Outcome::RefusedH2 => report.refused_hypothesis2 += 1,
            Outcome::Failed(problem) => report.violations.push(SampleViolation { sample: n, matrix, problem }),
            Outcome::Classified { verdict, problems, singular } => {
                report.classified += 1;
                *report.class_counts.entry(verdict.class_id).or_default() += 1;
                *report.polygon_vectors.entry(verdict.polygon_vector.to_string()).or_default() += 1;
                let [x, y, z] = verdict.type_vector.multiset();
                *report.type_multisets.entry(format!("{{{x},{y},{z}}}")).or_default() += 1;
                if verdict.chiral_partner_distinct {
                    report.chiral_partner_distinct += 1;
                }
                for problem in problems {
                    report.violations.push(SampleViolation { sample: n, matrix, problem });
                }
                let m = &mut report.minors3;
                m.minors_checked += 16;
                m.singular_minors += singular.len();
                if !singular.is_empty() {
                    m.samples_with_singular += 1;
                }
                for (rows, cols) in singular {
                    if m.examples.len() < 5 {
                        m.examples.push((n, rows, cols));
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunks_cover_everything() {
        for (n, j) in [(10, 3), (7, 7), (100, 8)] {
            let mut next = 0;
            for w in 0..j {
                let (s, e) = chunk_bounds(n, j, w);
                assert_eq!(s, next);
                next = e;
            }
            assert_eq!(next, n);
        }
    }

    #[test]
    fn deterministic_for_fixed_seed_and_jobs() {
        let cfg = CensusConfig { samples: 400, range: 50, seed: 7, jobs: 3 };
        let a = run_census(cfg).unwrap();
        let b = run_census(cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.classified + a.refused_hypothesis1 + a.refused_hypothesis2 + a.violations.len(), 400);
    }

    #[test]
    fn samples_are_kleene_and_in_range() {
        for a in samples(3, 5, 50) {
            for i in 0..4 {
                for j in 0..4 {
                    let x = a.get(i, j);
                    assert!(x <= Rational::ZERO && x >= Rational::from_int(-15));
                }
            }
        }
    }

    #[test]
    fn refuses_empty_census() {
        assert!(run_census(CensusConfig { samples: 0, ..Default::default() }).is_err());
    }
}
