use std::collections::HashMap;

use num_bigint::BigUint;

use super::{step_set_permutation, AffineIsometry, IsometryGroup, Matrix2};
use crate::enumerate::{pascal_slice, Region};
use crate::lattice::{Point, StepSet};

/// Entry ranges scanned by the isometry searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    /// Matrix entries range over `[-matrix_entry, matrix_entry]`.
    pub matrix_entry: i64,
    /// Per-`t` translation entries range over `[-tau_entry, tau_entry]`.
    pub tau_entry: i64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            matrix_entry: 3,
            tau_entry: 1,
        }
    }
}

fn unimodular_matrices(bound: i64) -> impl Iterator<Item = Matrix2> {
    let r = -bound..=bound;
    r.clone()
        .flat_map(move |a| {
            let r = r.clone();
            r.clone().flat_map(move |b| {
                let r = r.clone();
                r.clone()
                    .flat_map(move |c| r.clone().map(move |d| Matrix2::new(a, b, c, d)))
            })
        })
        .filter(|m| m.det().abs() == 1)
}

/// Every linear map with entries in `[-bound, bound]` that permutes the step
/// set. The result records whether the found set is closed.
pub fn search_linear_isometries(steps: &StepSet, bound: i64) -> IsometryGroup {
    let found = unimodular_matrices(bound.max(1))
        .map(|m| AffineIsometry::linear(m).expect("filtered to unimodular"))
        .filter(|g| step_set_permutation(g, steps).is_some());
    IsometryGroup::from_elements(found)
}

/// Every `p ↦ p·M + t·τ` within the bounds that leaves the free Pascal slice
/// of length `t` from the origin unchanged.
pub fn search_affine_isometries(steps: &StepSet, t: u32, bounds: SearchBounds) -> IsometryGroup {
    let slice = pascal_slice(steps, Point::ORIGIN, t, &Region::Free);
    let lookup: HashMap<Point, &BigUint> = slice.iter().collect();
    let tau = -bounds.tau_entry..=bounds.tau_entry;
    let mut found = Vec::new();
    for m in unimodular_matrices(bounds.matrix_entry.max(1)) {
        for u in tau.clone() {
            for v in tau.clone() {
                let g =
                    AffineIsometry::new(m, Point::ORIGIN, Point::new(u, v)).expect("unimodular");
                let invariant = lookup
                    .iter()
                    .all(|(&b, &c)| lookup.get(&g.apply(b, t)) == Some(&c));
                if invariant {
                    found.push(g);
                }
            }
        }
    }
    IsometryGroup::from_elements(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ModelTag;

    #[test]
    fn linear_search_counts() {
        let k = search_linear_isometries(&StepSet::named(ModelTag::Kreweras), 3);
        assert_eq!(k.order(), 6);
        assert!(k.is_finite());
        let g = search_linear_isometries(&StepSet::named(ModelTag::Gessel), 3);
        assert_eq!(g.order(), 8);
        let mr = search_linear_isometries(&StepSet::named(ModelTag::MishnaRechnitzer), 3);
        assert_eq!(mr.order(), 2);
        assert!(mr.contains(&AffineIsometry::from_rows(0, 1, 1, 0)));
    }

    #[test]
    fn affine_search_closes_at_slice_one() {
        let mr = search_affine_isometries(
            &StepSet::named(ModelTag::MishnaRechnitzer),
            1,
            SearchBounds::default(),
        );
        assert_eq!(mr.order(), 6);
        assert!(mr.is_finite());
        let k = search_affine_isometries(
            &StepSet::named(ModelTag::Kreweras),
            6,
            SearchBounds::default(),
        );
        assert_eq!(k.order(), 6);
        assert!(k.is_linear());
    }
}
