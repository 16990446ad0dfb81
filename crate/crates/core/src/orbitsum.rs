//! Signed orbit sums over a finite group and the exhaustive comparison
//! against confined DP counts.

use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::enumerate::{pascal_slice, walk_slices, CountTable, Region};
use crate::isometry::{GroupSource, IsometryGroup};
use crate::lattice::{LaurentPoly, ModelTag, Point, StepSet};
use crate::{Error, Result};

/// Inclusive box of lattice points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointRange {
    pub x: (i64, i64),
    pub y: (i64, i64),
}

impl PointRange {
    pub fn new(x: (i64, i64), y: (i64, i64)) -> Self {
        PointRange { x, y }
    }

    /// `[lo, hi]²`.
    pub fn square(lo: i64, hi: i64) -> Self {
        PointRange::new((lo, hi), (lo, hi))
    }

    /// Points in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (self.x.0..=self.x.1)
            .flat_map(move |x| (self.y.0..=self.y.1).map(move |y| Point::new(x, y)))
    }
}

impl Serialize for PointRange {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [[self.x.0, self.x.1], [self.y.0, self.y.1]].serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScanRanges {
    pub a: PointRange,
    pub b: PointRange,
    pub t: (u32, u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    EqualOnRange,
    Counterexample,
}

fn ser_big<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub t: u32,
    pub a: Point,
    pub b: Point,
    #[serde(serialize_with = "ser_big")]
    pub orbit_value: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub oracle_value: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualityReport {
    pub model: ModelTag,
    pub group: GroupSource,
    pub region: &'static str,
    pub region_bounds: String,
    pub ranges: ScanRanges,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub scanned_count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl EqualityReport {
    pub fn is_equal(&self) -> bool {
        self.verdict == Verdict::EqualOnRange
    }

    /// Drops the wall-clock field so reports compare byte for byte.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }
}

/// The group as it acts on slice `t`; it must be a finite closed set there.
fn slice_group(group: &IsometryGroup, t: u32) -> Result<IsometryGroup> {
    let g = if group.is_linear() {
        group.clone()
    } else {
        group.instantiate(t)
    };
    if g.is_finite() {
        Ok(g)
    } else {
        Err(Error::InfiniteGroup)
    }
}

fn signed_sum(group: &IsometryGroup, free: &CountTable, a: Point, b: Point, t: u32) -> BigInt {
    group
        .elements()
        .iter()
        .map(|g| {
            let c = BigInt::from(free.get(b - g.apply(a, t)));
            if g.sign() < 0 {
                -c
            } else {
                c
            }
        })
        .sum()
}

/// `Σ_g sign(g) · Free_t(g(a) → b)`.
pub fn orbit_sum_count(
    group: &IsometryGroup,
    steps: &StepSet,
    a: Point,
    b: Point,
    t: u32,
) -> Result<BigInt> {
    let g = slice_group(group, t)?;
    let free = pascal_slice(steps, Point::ORIGIN, t, &Region::Free);
    Ok(signed_sum(&g, &free, a, b, t))
}

/// The same sum for every endpoint at once, as a Laurent polynomial.
pub fn orbit_sum_slice(
    group: &IsometryGroup,
    steps: &StepSet,
    a: Point,
    t: u32,
) -> Result<LaurentPoly> {
    let g = slice_group(group, t)?;
    let base = steps.generating_function().pow(t);
    let mut out = LaurentPoly::zero();
    for h in g.elements() {
        let term = base.shift(h.apply(a, t));
        out = if h.sign() < 0 {
            &out - &term
        } else {
            &out + &term
        };
    }
    Ok(out)
}

/// Compares the orbit sum with the `region`-confined count for every start
/// `a` and end `b` in the ranges that the region admits, and `t = 0..=t_max`.
/// The reported counterexample is the least in `(t, a, b)` order.
pub fn compare_orbit_vs_oracle(
    group: &IsometryGroup,
    source: GroupSource,
    steps: &StepSet,
    region: &Region,
    a_range: PointRange,
    b_range: PointRange,
    t_max: u32,
) -> Result<EqualityReport> {
    let started = Instant::now();
    let groups = (0..=t_max)
        .map(|t| slice_group(group, t))
        .collect::<Result<Vec<_>>>()?;
    let free = walk_slices(steps, Point::ORIGIN, t_max, &Region::Free);
    let starts: Vec<Point> = a_range.points().filter(|&a| region.admits(a)).collect();
    let ends: Vec<Point> = b_range.points().filter(|&b| region.admits(b)).collect();

    let cells: Vec<(u32, Point)> = (0..=t_max)
        .flat_map(|t| starts.iter().map(move |&a| (t, a)))
        .collect();
    let oracle: Vec<Vec<CountTable>> = starts
        .par_iter()
        .map(|&a| walk_slices(steps, a, t_max, region))
        .collect();
    let first_failure = cells
        .par_iter()
        .enumerate()
        .filter_map(|(i, &(t, a))| {
            let slice = &oracle[i % starts.len()][t as usize];
            ends.iter().find_map(|&b| {
                let orbit = signed_sum(&groups[t as usize], &free[t as usize], a, b, t);
                let expected = BigInt::from(slice.get(b));
                (orbit != expected).then(|| Counterexample {
                    t,
                    a,
                    b,
                    orbit_value: orbit,
                    oracle_value: expected,
                })
            })
        })
        .min_by_key(|c| (c.t, c.a, c.b));

    Ok(EqualityReport {
        model: steps.model(),
        group: source,
        region: region.label(),
        region_bounds: region.describe(),
        ranges: ScanRanges {
            a: a_range,
            b: b_range,
            t: (0, t_max),
        },
        verdict: if first_failure.is_some() {
            Verdict::Counterexample
        } else {
            Verdict::EqualOnRange
        },
        counterexample: first_failure,
        scanned_count: (cells.len() * ends.len()) as u64,
        elapsed_ms: Some(started.elapsed().as_millis() as u64),
    })
}
