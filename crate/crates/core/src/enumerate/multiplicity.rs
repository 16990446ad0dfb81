use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::lattice::{Point, StepSet};

type Q = Ratio<i64>;

/// How many times each step (in step-list order) is used by a walk.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MultiplicityVector(pub Vec<u32>);

impl MultiplicityVector {
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn displacement(&self, steps: &StepSet) -> Point {
        self.0
            .iter()
            .zip(steps.steps())
            .fold(Point::ORIGIN, |acc, (&n, &s)| acc + s.scale(n as i64))
    }
}

/// The linear system `Σ nᵢ sᵢ = d`, `Σ nᵢ = t`, reduced once per step set.
///
/// Rows of the reduced echelon form are paired with the row operations that
/// produced them, so each right-hand side `(d, t)` costs one 3×3 product.
#[derive(Debug, Clone)]
pub struct MultiplicitySystem {
    columns: usize,
    rref: Vec<Vec<Q>>,
    transform: [[Q; 3]; 3],
    pivots: Vec<usize>,
}

impl MultiplicitySystem {
    pub fn new(steps: &StepSet) -> Self {
        let k = steps.len();
        let mut rows: Vec<Vec<Q>> = vec![
            steps.steps().iter().map(|s| Q::from(s.x)).collect(),
            steps.steps().iter().map(|s| Q::from(s.y)).collect(),
            vec![Q::one(); k],
        ];
        let mut transform = [[Q::zero(); 3]; 3];
        for (i, row) in transform.iter_mut().enumerate() {
            row[i] = Q::one();
        }
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..k {
            if r == 3 {
                break;
            }
            let Some(src) = (r..3).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(r, src);
            transform.swap(r, src);
            let inv = rows[r][col].recip();
            for v in rows[r].iter_mut() {
                *v *= inv;
            }
            for v in transform[r].iter_mut() {
                *v *= inv;
            }
            for i in 0..3 {
                if i == r || rows[i][col].is_zero() {
                    continue;
                }
                let f = rows[i][col];
                for j in 0..k {
                    let sub = rows[r][j] * f;
                    rows[i][j] -= sub;
                }
                for j in 0..3 {
                    let sub = transform[r][j] * f;
                    transform[i][j] -= sub;
                }
            }
            pivots.push(col);
            r += 1;
        }
        MultiplicitySystem {
            columns: k,
            rref: rows,
            transform,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Number of unconstrained multiplicities.
    pub fn free_parameters(&self) -> usize {
        self.columns - self.rank()
    }

    /// For a full-rank three-step system, the unique solution as affine
    /// functions of the endpoint: `nᵢ = r[i][0]·x + r[i][1]·y + r[i][2]·t`.
    pub fn parameter_functions(&self) -> Option<[[Q; 3]; 3]> {
        (self.columns == 3 && self.rank() == 3).then_some(self.transform)
    }

    fn reduced_rhs(&self, d: Point, t: u32) -> [Q; 3] {
        let v = [Q::from(d.x), Q::from(d.y), Q::from(t as i64)];
        let mut out = [Q::zero(); 3];
        for (i, row) in self.transform.iter().enumerate() {
            out[i] = row[0] * v[0] + row[1] * v[1] + row[2] * v[2];
        }
        out
    }

    /// Every nonnegative integer solution, sorted, without duplicates.
    pub fn solve(&self, d: Point, t: u32) -> Vec<MultiplicityVector> {
        let rhs = self.reduced_rhs(d, t);
        if (self.rank()..3).any(|r| !rhs[r].is_zero()) {
            return Vec::new();
        }
        let free: Vec<usize> = (0..self.columns)
            .filter(|c| !self.pivots.contains(c))
            .collect();
        let mut out = Vec::new();
        let mut assignment = vec![0u32; self.columns];
        self.enumerate_free(&free, 0, t, &rhs, &mut assignment, &mut out);
        out.sort();
        out
    }

    fn enumerate_free(
        &self,
        free: &[usize],
        depth: usize,
        budget: u32,
        rhs: &[Q; 3],
        assignment: &mut Vec<u32>,
        out: &mut Vec<MultiplicityVector>,
    ) {
        if depth == free.len() {
            for (r, &pc) in self.pivots.iter().enumerate() {
                let mut v = rhs[r];
                for &fc in free {
                    v -= self.rref[r][fc] * Q::from(assignment[fc] as i64);
                }
                if !v.is_integer() || v.is_negative() {
                    return;
                }
                match v.to_integer().to_u32() {
                    Some(n) => assignment[pc] = n,
                    None => return,
                }
            }
            out.push(MultiplicityVector(assignment.clone()));
            return;
        }
        for v in 0..=budget {
            assignment[free[depth]] = v;
            self.enumerate_free(free, depth + 1, budget - v, rhs, assignment, out);
        }
        assignment[free[depth]] = 0;
    }
}

/// All step-multiplicity vectors of `t`-step walks with displacement `d`.
pub fn step_multiplicities(steps: &StepSet, d: Point, t: u32) -> Vec<MultiplicityVector> {
    MultiplicitySystem::new(steps).solve(d, t)
}

/// `(n₁ + … + n_k)! / (n₁! ⋯ n_k!)`.
pub fn multinomial(n: &[u32]) -> BigUint {
    let mut acc = BigUint::one();
    let mut partial = 0u64;
    for &ni in n {
        partial += ni as u64;
        acc *= num_integer::binomial(BigUint::from(partial), BigUint::from(ni));
    }
    acc
}

/// Free walk count as a sum of multinomial coefficients.
pub fn free_count_multinomial(steps: &StepSet, a: Point, b: Point, t: u32) -> BigUint {
    step_multiplicities(steps, b - a, t)
        .iter()
        .map(|m| multinomial(&m.0))
        .sum()
}
