use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use super::Region;
use crate::lattice::{Point, StepSet};
use crate::{Error, Result};

/// Default ceiling on the number of step sequences a brute-force run may visit.
pub const DEFAULT_BRUTE_FORCE_CAP: u128 = 1_000_000;

/// One admitted walk: step indices into the step set, and the endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub steps: Vec<usize>,
    pub end: Point,
}

/// Explicit enumeration of all `|S|^t` step sequences, yielding those whose
/// partial sums stay in the region. This is the slow independent oracle for
/// the dynamic program.
#[derive(Debug, Clone)]
pub struct BruteForce<'a> {
    steps: &'a StepSet,
    start: Point,
    region: Region,
    odometer: Vec<usize>,
    done: bool,
}

impl<'a> BruteForce<'a> {
    pub fn new(steps: &'a StepSet, start: Point, t: u32, region: Region) -> Result<Self> {
        Self::with_cap(steps, start, t, region, DEFAULT_BRUTE_FORCE_CAP)
    }

    pub fn with_cap(
        steps: &'a StepSet,
        start: Point,
        t: u32,
        region: Region,
        cap: u128,
    ) -> Result<Self> {
        let requested = (steps.len() as u128).checked_pow(t).unwrap_or(u128::MAX);
        if requested > cap {
            return Err(Error::BruteForceCap { requested, cap });
        }
        Ok(BruteForce {
            steps,
            start,
            region,
            odometer: vec![0; t as usize],
            done: steps.is_empty() && t > 0,
        })
    }

    /// Admitted walks per endpoint.
    pub fn endpoint_counts(self) -> BTreeMap<Point, BigUint> {
        let mut out = BTreeMap::new();
        for path in self {
            *out.entry(path.end).or_insert_with(BigUint::default) += BigUint::one();
        }
        out
    }

    pub fn count(self) -> u64 {
        Iterator::count(self) as u64
    }

    fn walk(&self) -> Option<Point> {
        if !self.region.admits(self.start) {
            return None;
        }
        let mut p = self.start;
        for &i in &self.odometer {
            p = p + self.steps.steps()[i];
            if !self.region.admits(p) {
                return None;
            }
        }
        Some(p)
    }

    fn advance(&mut self) {
        let k = self.steps.len();
        for digit in self.odometer.iter_mut().rev() {
            *digit += 1;
            if *digit < k {
                return;
            }
            *digit = 0;
        }
        self.done = true;
    }
}

impl Iterator for BruteForce<'_> {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        while !self.done {
            let found = self.walk().map(|end| Path {
                steps: self.odometer.clone(),
                end,
            });
            self.advance();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ModelTag;

    #[test]
    fn brute_force_examples() {
        let kbar = StepSet::named(ModelTag::ReverseKreweras);
        assert_eq!(
            BruteForce::new(&kbar, Point::ORIGIN, 1, Region::Free)
                .unwrap()
                .count(),
            3
        );
        let inside: Vec<Path> = BruteForce::new(&kbar, Point::new(1, 1), 3, Region::OpenQuadrant)
            .unwrap()
            .filter(|p| p.end == Point::new(1, 1))
            .collect();
        assert_eq!(inside.len(), 2);
        assert!(inside.contains(&Path {
            steps: vec![0, 1, 2],
            end: Point::new(1, 1)
        }));
        assert!(inside.contains(&Path {
            steps: vec![1, 0, 2],
            end: Point::new(1, 1)
        }));

        let simple = StepSet::named(ModelTag::Simple);
        let back: Vec<Path> = BruteForce::new(&simple, Point::new(1, 1), 2, Region::OpenQuadrant)
            .unwrap()
            .filter(|p| p.end == Point::new(1, 1))
            .collect();
        // E then W, N then S
        assert_eq!(back.len(), 2);
    }

    #[test]
    fn zero_steps_and_rejected_start() {
        let s = StepSet::named(ModelTag::Gessel);
        let zero: Vec<Path> = BruteForce::new(&s, Point::new(4, 4), 0, Region::Free)
            .unwrap()
            .collect();
        assert_eq!(
            zero,
            vec![Path {
                steps: vec![],
                end: Point::new(4, 4)
            }]
        );
        assert_eq!(
            BruteForce::new(&s, Point::new(0, 4), 2, Region::OpenQuadrant)
                .unwrap()
                .count(),
            0
        );
    }

    #[test]
    fn cap_is_enforced() {
        let s = StepSet::named(ModelTag::Gessel);
        let err = BruteForce::new(&s, Point::ORIGIN, 11, Region::Free).unwrap_err();
        assert!(
            matches!(err, Error::BruteForceCap { requested, .. } if requested == 4u128.pow(11))
        );
        assert!(err.to_string().contains("dynamic-programming"));
        assert!(BruteForce::with_cap(&s, Point::ORIGIN, 3, Region::Free, 63).is_err());
    }
}
