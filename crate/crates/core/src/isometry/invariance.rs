use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use super::AffineIsometry;
use crate::enumerate::{pascal_slice, CountTable, MultiplicitySystem, Region};
use crate::lattice::{Point, StepSet};
use crate::{Error, Result};

type Q = Ratio<i64>;

/// `images[i] = j` sends index `i` to index `j` (zero-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    pub images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &j in &images {
            if j >= images.len() || std::mem::replace(&mut seen[j], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Nontrivial cycles, one-based, e.g. `(1 3)`.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// The permutation `s ↦ s·M` of the step list, if `M` maps it onto itself.
/// Translations do not act on steps.
pub fn step_set_permutation(g: &AffineIsometry, steps: &StepSet) -> Option<Permutation> {
    let images = steps
        .steps()
        .iter()
        .map(|&s| steps.index_of(g.matrix().act(s)))
        .collect::<Option<Vec<usize>>>()?;
    Permutation::from_images(images)
}

/// Outcome of comparing Pascal slices with their images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvarianceCheck {
    pub invariant: bool,
    /// First failing `(t, b)` in `(t, x, y)` order.
    pub witness: Option<(u32, Point)>,
}

/// Free slices from the origin for `t = 1..=t_max`.
pub fn free_slices(steps: &StepSet, t_max: u32) -> Vec<CountTable> {
    (1..=t_max)
        .map(|t| pascal_slice(steps, Point::ORIGIN, t, &Region::Free))
        .collect()
}

/// Checks `F_t(b) = F_t(g(b))` on precomputed slices.
pub fn counts_invariance_check_on(g: &AffineIsometry, slices: &[CountTable]) -> InvarianceCheck {
    for slice in slices {
        for (b, count) in slice.iter() {
            if slice.get_ref(g.apply(b, slice.t)) != Some(count) {
                return InvarianceCheck {
                    invariant: false,
                    witness: Some((slice.t, b)),
                };
            }
        }
    }
    InvarianceCheck {
        invariant: true,
        witness: None,
    }
}

/// Whether `g` leaves every free Pascal slice `t = 1..=t_max` unchanged.
///
/// `g` is a bijection of the lattice, so mapping the finite support into
/// itself with equal counts is the same as invariance of the whole slice.
pub fn counts_invariance_check(g: &AffineIsometry, steps: &StepSet, t_max: u32) -> InvarianceCheck {
    counts_invariance_check_on(g, &free_slices(steps, t_max))
}

/// The permutation `π` with `nᵢ(g(p)) = n_π(i)(p)` for every endpoint `p`
/// of slice `t`, where `nᵢ` are the step multiplicities as affine functions
/// of the endpoint. Needs a full-rank three-step system.
pub fn param_permutation(
    g: &AffineIsometry,
    steps: &StepSet,
    t: u32,
) -> Result<Option<Permutation>> {
    let system = MultiplicitySystem::new(steps);
    let f = system.parameter_functions().ok_or(Error::RankDeficient {
        rank: system.rank(),
    })?;
    let m = g.matrix().0;
    let tr = g.translation_at(t);
    let tq = Q::from(t as i64);
    // nᵢ(p) as (coefficient of x, coefficient of y, constant) at this t
    let original: Vec<[Q; 3]> = f.iter().map(|r| [r[0], r[1], r[2] * tq]).collect();
    let substituted: Vec<[Q; 3]> = f
        .iter()
        .map(|r| {
            [
                r[0] * m[0][0] + r[1] * m[0][1],
                r[0] * m[1][0] + r[1] * m[1][1],
                r[0] * tr.x + r[1] * tr.y + r[2] * tq,
            ]
        })
        .collect();
    let images: Option<Vec<usize>> = substituted
        .iter()
        .map(|s| original.iter().position(|o| o == s))
        .collect();
    Ok(images.and_then(Permutation::from_images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ModelTag;

    #[test]
    fn step_permutations() {
        let k = StepSet::named(ModelTag::Kreweras);
        let kbar = StepSet::named(ModelTag::ReverseKreweras);
        let k1 = AffineIsometry::from_rows(-1, -1, 0, 1);
        let perm = step_set_permutation(&k1, &k).unwrap();
        assert_eq!(perm.images, vec![2, 1, 0]);
        assert_eq!(perm.to_string(), "(1 3)");
        let kbar1 = AffineIsometry::from_rows(-1, 1, 0, 1);
        assert_eq!(step_set_permutation(&kbar1, &kbar), None);
        for m in ModelTag::NAMED {
            let s = StepSet::named(m);
            assert!(step_set_permutation(&AffineIsometry::IDENTITY, &s)
                .unwrap()
                .is_identity());
        }
    }

    #[test]
    fn invariance_examples() {
        let k = StepSet::named(ModelTag::Kreweras);
        let kbar = StepSet::named(ModelTag::ReverseKreweras);
        let k1 = AffineIsometry::from_rows(-1, -1, 0, 1);
        assert!(counts_invariance_check(&k1, &k, 6).invariant);
        let kbar1 = AffineIsometry::from_rows(-1, 1, 0, 1);
        let check = counts_invariance_check(&kbar1, &kbar, 6);
        assert!(!check.invariant);
        let (t, b) = check.witness.unwrap();
        assert_eq!(t, 1);
        // lexicographically first failure; (1,0) ↦ (-1,1) fails as well
        assert_eq!(b, Point::new(-1, -1));
        let slice = pascal_slice(&kbar, Point::ORIGIN, 1, &Region::Free);
        assert_ne!(
            slice.get(Point::new(1, 0)),
            slice.get(kbar1.apply(Point::new(1, 0), 1))
        );
        assert!(counts_invariance_check(&AffineIsometry::IDENTITY, &kbar, 4).invariant);
    }

    #[test]
    fn parameter_permutations() {
        let k = StepSet::named(ModelTag::Kreweras);
        let g = AffineIsometry::from_rows(-1, -1, 0, 1);
        assert_eq!(
            param_permutation(&g, &k, 6).unwrap().unwrap().to_string(),
            "(1 3)"
        );
        let mr = StepSet::named(ModelTag::MishnaRechnitzer);
        let t321: AffineIsometry = "-1,0;-1,1+t*1,0".parse().unwrap();
        assert_eq!(
            param_permutation(&t321, &mr, 7)
                .unwrap()
                .unwrap()
                .to_string(),
            "(1 3)"
        );
        let t132: AffineIsometry = "1,-1;0,-1+t*0,1".parse().unwrap();
        assert_eq!(
            param_permutation(&t132, &mr, 7)
                .unwrap()
                .unwrap()
                .to_string(),
            "(2 3)"
        );
        assert!(param_permutation(&AffineIsometry::IDENTITY, &mr, 3)
            .unwrap()
            .unwrap()
            .is_identity());
        // linear part alone does not permute the MR parameters
        assert_eq!(
            param_permutation(&t132.instantiate(0), &mr, 7).unwrap(),
            None
        );
        let g_set = StepSet::named(ModelTag::Gessel);
        assert!(matches!(
            param_permutation(&AffineIsometry::IDENTITY, &g_set, 2),
            Err(Error::RankDeficient { .. })
        ));
    }
}
