//! Reflection-line arrangements and the chambers they cut out.
//!
//! All geometry is exact: lines carry integer normals and rational offsets,
//! and membership is decided by sign evaluations.

mod gz;
mod sectors;

pub use gz::{gz_precondition_report, GzReport, WallPairing};
pub use sectors::{
    classify_quarter_plane, quarter_plane_chamber, sector_image, sectors, ChamberCount,
    QuarterPlaneReport, Sector, SectorDecomposition,
};

pub use crate::isometry::Line as ReflectionLine;

use crate::isometry::IsometryGroup;

/// The lines of an arrangement, possibly depending on the slice length,
/// together with the slice at which they are evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    pub lines: Vec<ReflectionLine>,
    pub t: u32,
}

impl Arrangement {
    pub fn new(lines: Vec<ReflectionLine>, t: u32) -> Self {
        let mut uniq = Vec::new();
        for l in lines {
            if !uniq.contains(&l) {
                uniq.push(l);
            }
        }
        Arrangement { lines: uniq, t }
    }

    /// Lines with `t` substituted.
    pub fn at_slice(&self) -> Vec<ReflectionLine> {
        self.lines.iter().map(|l| l.at(self.t)).collect()
    }

    pub fn is_central(&self) -> bool {
        self.at_slice().iter().all(|l| l.is_central())
    }

    /// Some line moves with `t`: the slice is one of infinitely many.
    pub fn is_affine(&self) -> bool {
        self.lines.iter().any(|l| l.depends_on_t())
    }
}

/// Fixed lines of every reflection in the group, deduplicated, in element order.
pub fn reflection_arrangement(group: &IsometryGroup, t: u32) -> Arrangement {
    Arrangement::new(
        group.reflections().filter_map(|g| g.fixed_line()).collect(),
        t,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isometry::published_group;
    use crate::lattice::ModelTag;

    #[test]
    fn arrangements_of_published_groups() {
        let k = reflection_arrangement(&published_group(ModelTag::Kreweras).unwrap().group(), 0);
        let expected = [
            ReflectionLine::central(1, 0),
            ReflectionLine::central(0, 1),
            ReflectionLine::central(1, -1),
        ];
        assert_eq!(k.lines.len(), 3);
        for l in &expected {
            assert!(k.lines.contains(l), "{l}");
        }
        let g = reflection_arrangement(&published_group(ModelTag::Gessel).unwrap().group(), 0);
        let names: Vec<String> = g.lines.iter().map(|l| l.to_string()).collect();
        assert_eq!(names, ["y = 0", "x = 0", "2y = x", "y = x"]);
        let mr = reflection_arrangement(
            &published_group(ModelTag::MishnaRechnitzer).unwrap().group(),
            10,
        );
        let names: Vec<String> = mr.lines.iter().map(|l| l.to_string()).collect();
        assert_eq!(names, ["y = x", "x + 2y = t", "2x + y = t"]);
        assert!(mr.is_affine());
        assert!(!mr.is_central());
    }
}
