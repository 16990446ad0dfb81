use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{CountTable, Region};
use crate::lattice::{Point, StepSet};

/// Dense grid covering every point reachable in `t` steps from `start`.
struct Grid {
    origin: Point,
    width: usize,
    height: usize,
    cells: Vec<BigUint>,
}

impl Grid {
    fn new(start: Point, t: u32, steps: &StepSet) -> Self {
        let (mx, my) = steps.max_step();
        let rx = mx * t as i64;
        let ry = my * t as i64;
        let width = (2 * rx + 1) as usize;
        let height = (2 * ry + 1) as usize;
        Grid {
            origin: Point::new(start.x - rx, start.y - ry),
            width,
            height,
            cells: vec![BigUint::zero(); width * height],
        }
    }

    fn index(&self, p: Point) -> Option<usize> {
        let dx = p.x - self.origin.x;
        let dy = p.y - self.origin.y;
        if dx < 0 || dy < 0 || dx as usize >= self.width || dy as usize >= self.height {
            None
        } else {
            Some(dy as usize * self.width + dx as usize)
        }
    }

    fn point(&self, idx: usize) -> Point {
        Point::new(
            self.origin.x + (idx % self.width) as i64,
            self.origin.y + (idx / self.width) as i64,
        )
    }

    fn blank(&self) -> Vec<BigUint> {
        vec![BigUint::zero(); self.cells.len()]
    }

    fn table(&self, t: u32, start: Point, region: &Region) -> CountTable {
        let counts: BTreeMap<Point, BigUint> = self
            .cells
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.point(i), c.clone()))
            .collect();
        CountTable::new(t, start, region.clone(), counts)
    }
}

/// Counts of `t`-step walks from `start` whose every partial sum lies in
/// `region`, keyed by endpoint. Non-free regions also require the start to
/// be admitted; otherwise the table is empty.
pub fn walk_slice(steps: &StepSet, start: Point, t: u32, region: &Region) -> CountTable {
    walk_slices(steps, start, t, region)
        .pop()
        .expect("at least the zero-length slice")
}

/// Slices `0..=t_max` from one run of the recurrence.
pub fn walk_slices(steps: &StepSet, start: Point, t_max: u32, region: &Region) -> Vec<CountTable> {
    let mut grid = Grid::new(start, t_max, steps);
    if region.admits(start) {
        let idx = grid.index(start).expect("start inside its own box");
        grid.cells[idx] = BigUint::one();
    }
    let mut out = Vec::with_capacity(t_max as usize + 1);
    for t in 0..=t_max {
        out.push(grid.table(t, start, region));
        if t == t_max {
            break;
        }
        let mut next = grid.blank();
        for (idx, count) in grid.cells.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            let p = grid.point(idx);
            for &s in steps.steps() {
                let q = p + s;
                if !region.admits(q) {
                    continue;
                }
                // reachable points never leave the box
                let j = grid
                    .index(q)
                    .expect("step stays inside the reachability box");
                next[j] += count;
            }
        }
        grid.cells = next;
    }
    out
}

pub fn pascal_slice(steps: &StepSet, start: Point, t: u32, region: &Region) -> CountTable {
    walk_slice(steps, start, t, region)
}

/// Number of free `t`-step walks `a → b`.
pub fn free_count(steps: &StepSet, a: Point, b: Point, t: u32) -> BigUint {
    walk_slice(steps, a, t, &Region::Free).get(b)
}

/// Number of `t`-step walks `a → b` staying in `region` at every partial sum.
/// Endpoints outside the region give zero.
pub fn region_count(steps: &StepSet, a: Point, b: Point, t: u32, region: &Region) -> BigUint {
    if !region.admits(b) {
        return BigUint::zero();
    }
    walk_slice(steps, a, t, region).get(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::HalfPlane;
    use crate::lattice::ModelTag;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn layered_slices_match_single_runs() {
        let s = StepSet::named(ModelTag::Gessel);
        let layers = walk_slices(&s, p(1, 2), 7, &Region::OpenQuadrant);
        assert_eq!(layers.len(), 8);
        for (t, layer) in layers.iter().enumerate() {
            assert_eq!(
                layer,
                &walk_slice(&s, p(1, 2), t as u32, &Region::OpenQuadrant)
            );
        }
    }

    fn big(n: u32) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn free_count_examples() {
        let kbar = StepSet::named(ModelTag::ReverseKreweras);
        let g = StepSet::named(ModelTag::Gessel);
        assert_eq!(free_count(&kbar, p(0, 0), p(0, 0), 3), big(6));
        assert_eq!(free_count(&kbar, p(0, 0), p(1, 0), 1), big(1));
        assert_eq!(free_count(&g, p(0, 0), p(0, 0), 2), big(4));
    }

    #[test]
    fn quarter_plane_examples() {
        let kbar = StepSet::named(ModelTag::ReverseKreweras);
        let qp = Region::OpenQuadrant;
        assert_eq!(region_count(&kbar, p(1, 1), p(1, 1), 3, &qp), big(2));
        assert_eq!(region_count(&kbar, p(1, 1), p(1, 1), 2, &qp), big(0));
        // boundary start or end is rejected
        assert_eq!(region_count(&kbar, p(0, 1), p(1, 1), 1, &qp), big(0));
        assert_eq!(region_count(&kbar, p(1, 1), p(2, 0), 5, &qp), big(0));
        for t in 0..5 {
            assert_eq!(
                region_count(&kbar, p(2, 1), p(1, 2), t, &Region::Free),
                free_count(&kbar, p(2, 1), p(1, 2), t)
            );
        }
    }

    #[test]
    fn closed_quadrant_allows_axes() {
        let kbar = StepSet::named(ModelTag::ReverseKreweras);
        let closed = Region::ClosedQuadrant;
        assert_eq!(region_count(&kbar, p(0, 0), p(0, 0), 3, &closed), big(2));
        assert_eq!(region_count(&kbar, p(0, 0), p(1, 0), 1, &closed), big(1));
    }

    #[test]
    fn sector_region() {
        // 0 < y < x for the simple walk: steps must keep x - y > 0 and y > 0
        let simple = StepSet::named(ModelTag::Simple);
        let wedge = Region::Sector(vec![
            HalfPlane::new(0, 1, 0.into()),
            HalfPlane::new(1, -1, 0.into()),
        ]);
        assert!(wedge.admits(p(2, 1)));
        assert!(!wedge.admits(p(1, 1)));
        // only E,W survives: W,E / N,S / S,N touch a wall first
        assert_eq!(region_count(&simple, p(2, 1), p(2, 1), 2, &wedge), big(1));
    }

    #[test]
    fn slice_symmetry_and_totals() {
        let kbar = StepSet::named(ModelTag::ReverseKreweras);
        let slice = pascal_slice(&kbar, p(0, 0), 6, &Region::Free);
        for (q, c) in slice.iter() {
            assert_eq!(&slice.get(p(q.y, q.x)), c);
        }
        assert_eq!(slice.total(), big(729));
        let mr = StepSet::named(ModelTag::MishnaRechnitzer);
        let one = pascal_slice(&mr, p(0, 0), 1, &Region::Free);
        let expected: Vec<(Point, BigUint)> =
            vec![(p(-1, 1), big(1)), (p(1, -1), big(1)), (p(1, 1), big(1))];
        assert_eq!(
            one.iter().map(|(q, c)| (q, c.clone())).collect::<Vec<_>>(),
            expected
        );
        let zero = pascal_slice(&mr, p(3, -2), 0, &Region::Free);
        assert_eq!(zero.support_len(), 1);
        assert_eq!(zero.get(p(3, -2)), big(1));
    }

    #[test]
    fn counts_exceed_machine_words() {
        let g = StepSet::named(ModelTag::Gessel);
        let slice = pascal_slice(&g, p(0, 0), 50, &Region::Free);
        assert_eq!(slice.total(), BigUint::from(4u32).pow(50));
        assert!(slice.get(p(0, 0)) > BigUint::from(u64::MAX));
    }
}
