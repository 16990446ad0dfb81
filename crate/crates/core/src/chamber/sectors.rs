use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{Arrangement, ReflectionLine};
use crate::enumerate::{HalfPlane, Region};
use crate::isometry::AffineIsometry;
use crate::lattice::{Point, RationalPoint};
use crate::{Error, Result};

type Q = Ratio<i64>;

const MAX_AFFINE_LINES: usize = 8;

/// One open region of an arrangement's complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sector {
    /// Side of each line (`±1`), in line order.
    pub signs: Vec<i32>,
    /// Bounding rays in counterclockwise order (central arrangements only).
    pub rays: Option<[Point; 2]>,
    /// Indices of the lines that bound this region.
    pub walls: Vec<usize>,
    /// A point strictly inside.
    pub sample: RationalPoint,
}

/// The regions of an arrangement at a fixed slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorDecomposition {
    /// Lines as given, possibly depending on `t`.
    pub arrangement: Arrangement,
    /// Lines evaluated at `arrangement.t`.
    pub lines: Vec<ReflectionLine>,
    pub sectors: Vec<Sector>,
}

impl SectorDecomposition {
    pub fn t(&self) -> u32 {
        self.arrangement.t
    }

    pub fn len(&self) -> usize {
        self.sectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sectors.is_empty()
    }

    fn signs_of(&self, p: RationalPoint) -> Vec<i32> {
        self.lines.iter().map(|l| l.side_rational(p, 0)).collect()
    }

    /// Index of the sector containing `p`; `None` on a line.
    pub fn locate(&self, p: Point) -> Option<usize> {
        self.locate_rational(RationalPoint::new(p.x.into(), p.y.into()))
    }

    pub fn locate_rational(&self, p: RationalPoint) -> Option<usize> {
        let signs = self.signs_of(p);
        if signs.contains(&0) {
            return None;
        }
        self.sectors.iter().position(|s| s.signs == signs)
    }

    pub fn contains(&self, sector: usize, p: Point) -> bool {
        self.locate(p) == Some(sector)
    }

    /// Strict half-planes cutting out one sector.
    pub fn region(&self, sector: usize) -> Region {
        let s = &self.sectors[sector];
        let planes = s
            .walls
            .iter()
            .map(|&i| {
                let l = &self.lines[i];
                let sign = s.signs[i] as i64;
                let [a, b] = l.normal();
                HalfPlane::new(sign * a, sign * b, l.offset(0) * sign)
            })
            .collect();
        Region::Sector(planes)
    }

    pub fn walls(&self, sector: usize) -> Vec<ReflectionLine> {
        self.sectors[sector]
            .walls
            .iter()
            .map(|&i| self.arrangement.lines[i])
            .collect()
    }
}

fn angle_cmp(a: Point, b: Point) -> Ordering {
    let half = |p: Point| {
        if p.y > 0 || (p.y == 0 && p.x > 0) {
            0
        } else {
            1
        }
    };
    half(a)
        .cmp(&half(b))
        .then_with(|| 0.cmp(&(a.x * b.y - a.y * b.x)))
}

fn rq(p: Point) -> RationalPoint {
    RationalPoint::new(p.x.into(), p.y.into())
}

fn central_sectors(lines: &[ReflectionLine]) -> Vec<Sector> {
    let mut rays: Vec<Point> = lines
        .iter()
        .flat_map(|l| [l.direction(), -l.direction()])
        .collect();
    rays.sort_by(|a, b| angle_cmp(*a, *b));
    let n = rays.len();
    (0..n)
        .map(|i| {
            let (r0, r1) = (rays[i], rays[(i + 1) % n]);
            let sample = if r0.x * r1.y - r0.y * r1.x > 0 {
                r0 + r1
            } else {
                Point::new(-r0.y, r0.x)
            };
            let walls = lines
                .iter()
                .enumerate()
                .filter(|(_, l)| l.value(r0) == 0 || l.value(r1) == 0)
                .map(|(i, _)| i)
                .collect();
            Sector {
                signs: lines.iter().map(|l| l.side(sample, 0)).collect(),
                rays: Some([r0, r1]),
                walls,
                sample: rq(sample),
            }
        })
        .collect()
}

/// Regions found by stepping off every edge of every line. Each region
/// of a nonempty arrangement has at least one edge, so none is missed.
fn edge_sectors(lines: &[ReflectionLine]) -> Vec<Sector> {
    let mut found: BTreeMap<Vec<i32>, Sector> = BTreeMap::new();
    for (i, li) in lines.iter().enumerate() {
        let [a, b] = li.normal();
        let gamma = li.offset(0);
        let base = if a != 0 {
            RationalPoint::new(gamma / a, Q::zero())
        } else {
            RationalPoint::new(Q::zero(), gamma / b)
        };
        let dir = li.direction();
        let at = |s: Q| RationalPoint::new(base.x + s * dir.x, base.y + s * dir.y);
        let mut params: Vec<Q> = lines
            .iter()
            .filter(|lj| !lj.is_parallel(li))
            .map(|lj| {
                let [c, d] = lj.normal();
                (lj.offset(0) - (base.x * c + base.y * d)) / (c * dir.x + d * dir.y)
            })
            .collect();
        params.sort();
        params.dedup();
        let mut samples = Vec::new();
        match (params.first(), params.last()) {
            (Some(&lo), Some(&hi)) => {
                samples.push(lo - 1);
                samples.extend(params.windows(2).map(|w| (w[0] + w[1]) / 2));
                samples.push(hi + 1);
            }
            _ => samples.push(Q::zero()),
        }
        for s in samples {
            let q = at(s);
            // push off the line by less than the distance to any other line
            let mut eps = Q::from(1);
            for (j, lj) in lines.iter().enumerate() {
                if j == i {
                    continue;
                }
                let [c, d] = lj.normal();
                let gap = (q.x * c + q.y * d - lj.offset(0)).abs();
                let rate = Q::from((c * a + d * b).abs() + 1);
                let bound = gap / (rate * 2);
                if bound < eps {
                    eps = bound;
                }
            }
            for sign in [1i32, -1] {
                let e = eps * sign as i64;
                let p = RationalPoint::new(q.x + e * a, q.y + e * b);
                let signs: Vec<i32> = lines.iter().map(|l| l.side_rational(p, 0)).collect();
                debug_assert!(!signs.contains(&0));
                let entry = found.entry(signs.clone()).or_insert_with(|| Sector {
                    signs,
                    rays: None,
                    walls: Vec::new(),
                    sample: p,
                });
                if !entry.walls.contains(&i) {
                    entry.walls.push(i);
                }
            }
        }
    }
    let mut out: Vec<Sector> = found.into_values().collect();
    for s in &mut out {
        s.walls.sort();
    }
    out
}

/// Chambers of the arrangement at its slice. Central arrangements come back in
/// counterclockwise order starting at the positive x-axis; non-central ones
/// are limited to eight lines.
pub fn sectors(arrangement: &Arrangement) -> Result<SectorDecomposition> {
    let lines = arrangement.at_slice();
    let sectors = if lines.is_empty() {
        vec![Sector {
            signs: vec![],
            rays: None,
            walls: vec![],
            sample: rq(Point::ORIGIN),
        }]
    } else if lines.iter().all(|l| l.is_central()) {
        central_sectors(&lines)
    } else if lines.len() <= MAX_AFFINE_LINES {
        edge_sectors(&lines)
    } else {
        return Err(Error::Arrangement(format!(
            "{} non-central lines (at most {MAX_AFFINE_LINES} supported)",
            lines.len()
        )));
    };
    Ok(SectorDecomposition {
        arrangement: arrangement.clone(),
        lines,
        sectors,
    })
}

/// Sector containing the image of a sector's interior point under `g`.
pub fn sector_image(dec: &SectorDecomposition, g: &AffineIsometry, sector: usize) -> Option<usize> {
    let p = dec.sectors[sector].sample;
    let m = g.matrix().0;
    let tr = g.translation_at(dec.t());
    let image = RationalPoint::new(
        p.x * m[0][0] + p.y * m[1][0] + tr.x,
        p.x * m[0][1] + p.y * m[1][1] + tr.y,
    );
    dec.locate_rational(image)
}

/// The first sector, in decomposition order, meeting the open quadrant.
pub fn quarter_plane_chamber(dec: &SectorDecomposition) -> Option<usize> {
    classify_quarter_plane(dec)
        .sectors_in_quadrant
        .first()
        .copied()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChamberCount {
    Finite(usize),
    /// The lines move with `t`, so over all slices infinitely many chambers
    /// (alcoves) meet the quadrant.
    Infinite,
}

/// How the open quarter plane sits in an arrangement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuarterPlaneReport {
    pub chamber_count: ChamberCount,
    /// Sectors of this slice meeting the open quadrant.
    pub slice_chamber_count: usize,
    pub sectors_in_quadrant: Vec<usize>,
    /// Lines crossing the open quadrant, as given (possibly `t`-dependent).
    pub internal_walls: Vec<ReflectionLine>,
    /// The quadrant is exactly one chamber.
    pub exact_match: bool,
    pub affine: bool,
}

pub fn classify_quarter_plane(dec: &SectorDecomposition) -> QuarterPlaneReport {
    let axes = [ReflectionLine::central(1, 0), ReflectionLine::central(0, 1)];
    let mut refined = dec.lines.clone();
    for a in axes {
        if !refined.contains(&a) {
            refined.push(a);
        }
    }
    let refined_dec = sectors(&Arrangement::new(refined, 0)).or_else(|_| {
        // too many lines for the edge method: central refinement always works
        sectors(&Arrangement::new(axes.to_vec(), 0))
    });
    let mut inside: Vec<usize> = refined_dec
        .map(|rd| {
            rd.sectors
                .iter()
                .filter(|s| s.sample.x.is_positive() && s.sample.y.is_positive())
                .filter_map(|s| dec.locate_rational(s.sample))
                .collect()
        })
        .unwrap_or_default();
    inside.sort();
    inside.dedup();
    let internal_walls: Vec<ReflectionLine> = dec
        .arrangement
        .lines
        .iter()
        .zip(&dec.lines)
        .filter(|(_, at)| at.crosses_open_quadrant(0))
        .map(|(l, _)| *l)
        .collect();
    let affine = dec.arrangement.is_affine();
    let exact_match = !affine
        && inside.len() == 1
        && internal_walls.is_empty()
        && axes.iter().all(|a| dec.lines.contains(a));
    QuarterPlaneReport {
        chamber_count: if affine {
            ChamberCount::Infinite
        } else {
            ChamberCount::Finite(inside.len())
        },
        slice_chamber_count: inside.len(),
        sectors_in_quadrant: inside,
        internal_walls,
        exact_match,
        affine,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chamber::reflection_arrangement;
    use crate::isometry::published_group;
    use crate::lattice::ModelTag;

    fn central(lines: &[(i64, i64)]) -> Arrangement {
        Arrangement::new(
            lines
                .iter()
                .map(|&(a, b)| ReflectionLine::central(a, b))
                .collect(),
            0,
        )
    }

    #[test]
    fn axis_quadrants() {
        let dec = sectors(&central(&[(1, 0), (0, 1)])).unwrap();
        assert_eq!(dec.len(), 4);
        assert_eq!(
            dec.sectors[0].rays,
            Some([Point::new(1, 0), Point::new(0, 1)])
        );
        assert_eq!(dec.locate(Point::new(3, 5)), Some(0));
        assert_eq!(dec.locate(Point::new(-3, 5)), Some(1));
        assert_eq!(dec.locate(Point::new(0, 5)), None);
        let qp = classify_quarter_plane(&dec);
        assert_eq!(qp.chamber_count, ChamberCount::Finite(1));
        assert!(qp.exact_match);
    }

    #[test]
    fn published_reverse_kreweras_arrangement() {
        let dec = sectors(&central(&[(1, 0), (0, 1), (1, 1)])).unwrap();
        assert_eq!(dec.len(), 6);
        assert_eq!(
            dec.sectors[0].rays,
            Some([Point::new(1, 0), Point::new(0, 1)])
        );
        let qp = classify_quarter_plane(&dec);
        assert_eq!(qp.chamber_count, ChamberCount::Finite(1));
        assert!(qp.exact_match);
        assert!(qp.internal_walls.is_empty());
    }

    #[test]
    fn kreweras_and_gessel_split_the_quadrant() {
        let k = reflection_arrangement(&published_group(ModelTag::Kreweras).unwrap().group(), 0);
        let qp = classify_quarter_plane(&sectors(&k).unwrap());
        assert_eq!(qp.chamber_count, ChamberCount::Finite(2));
        assert_eq!(qp.internal_walls, vec![ReflectionLine::central(1, -1)]);
        assert!(!qp.exact_match);
        let g = reflection_arrangement(&published_group(ModelTag::Gessel).unwrap().group(), 0);
        let dec = sectors(&g).unwrap();
        assert_eq!(dec.len(), 8);
        let qp = classify_quarter_plane(&dec);
        assert_eq!(qp.chamber_count, ChamberCount::Finite(3));
        assert_eq!(
            qp.internal_walls,
            vec![
                ReflectionLine::central(1, -2),
                ReflectionLine::central(1, -1)
            ]
        );
    }

    #[test]
    fn single_line_and_empty() {
        let one = sectors(&central(&[(1, -1)])).unwrap();
        assert_eq!(one.len(), 2);
        assert_ne!(one.locate(Point::new(1, 0)), one.locate(Point::new(0, 1)));
        let none = sectors(&Arrangement::new(vec![], 0)).unwrap();
        assert_eq!(none.len(), 1);
        assert_eq!(none.locate(Point::new(5, -5)), Some(0));
    }

    #[test]
    fn affine_slice_arrangement() {
        let mr = reflection_arrangement(
            &published_group(ModelTag::MishnaRechnitzer).unwrap().group(),
            10,
        );
        let dec = sectors(&mr).unwrap();
        assert_eq!(dec.len(), 6);
        let qp = classify_quarter_plane(&dec);
        assert_eq!(qp.chamber_count, ChamberCount::Infinite);
        assert!(qp.affine);
        assert_eq!(qp.internal_walls.len(), 3);
        // parallel lines: a strip and two half-planes
        let strip = Arrangement::new(
            vec![
                ReflectionLine::new(1, 0, 0.into(), 0.into()),
                ReflectionLine::new(1, 0, 3.into(), 0.into()),
            ],
            0,
        );
        let dec = sectors(&strip).unwrap();
        assert_eq!(dec.len(), 3);
        assert_eq!(dec.locate(Point::new(1, 7)), dec.locate(Point::new(2, -7)));
        // a triangle: 7 regions
        let tri = Arrangement::new(
            vec![
                ReflectionLine::new(1, 0, 0.into(), 0.into()),
                ReflectionLine::new(0, 1, 0.into(), 0.into()),
                ReflectionLine::new(1, 1, 4.into(), 0.into()),
            ],
            0,
        );
        assert_eq!(sectors(&tri).unwrap().len(), 7);
        let many = Arrangement::new(
            (1..=9)
                .map(|k| ReflectionLine::new(1, 0, k.into(), 0.into()))
                .collect(),
            0,
        );
        assert!(sectors(&many).is_err());
    }

    fn published_decompositions() -> Vec<(
        ModelTag,
        SectorDecomposition,
        crate::isometry::IsometryGroup,
    )> {
        [
            ModelTag::ReverseKreweras,
            ModelTag::Kreweras,
            ModelTag::Gessel,
        ]
        .into_iter()
        .map(|m| {
            let g = published_group(m).unwrap().group();
            (m, sectors(&reflection_arrangement(&g, 0)).unwrap(), g)
        })
        .collect()
    }

    #[test]
    fn coverage() {
        let mut decs: Vec<SectorDecomposition> = published_decompositions()
            .into_iter()
            .map(|(_, d, _)| d)
            .collect();
        for t in [0, 7, 10, 30] {
            let g = published_group(ModelTag::MishnaRechnitzer).unwrap().group();
            decs.push(sectors(&reflection_arrangement(&g, t)).unwrap());
        }
        for dec in &decs {
            for x in -30..=30 {
                for y in -30..=30 {
                    let p = Point::new(x, y);
                    let on_line = dec.lines.iter().any(|l| l.contains(p, 0));
                    let hits = (0..dec.len()).filter(|&i| dec.contains(i, p)).count();
                    assert_eq!(hits, if on_line { 0 } else { 1 }, "{p}");
                    if let Some(i) = dec.locate(p) {
                        assert!(dec.region(i).admits(p));
                    }
                }
            }
        }
    }

    #[test]
    fn group_permutes_sectors_transitively() {
        for (m, dec, g) in published_decompositions() {
            for h in g.elements() {
                for i in 0..dec.len() {
                    let j = sector_image(&dec, h, i).expect("image off the lines");
                    for x in -12..=12 {
                        for y in -12..=12 {
                            let p = Point::new(x, y);
                            if dec.contains(i, p) {
                                assert!(dec.contains(j, h.apply(p, 0)), "{m:?} {h} {p}");
                            }
                        }
                    }
                }
            }
            let mut orbit: Vec<usize> = g
                .elements()
                .iter()
                .filter_map(|h| sector_image(&dec, h, 0))
                .collect();
            orbit.sort();
            orbit.dedup();
            assert_eq!(orbit.len(), dec.len(), "{m:?}");
            assert_eq!(dec.len(), g.order());
        }
    }

    #[test]
    fn mishna_rechnitzer_lines_concurrent() {
        let g = published_group(ModelTag::MishnaRechnitzer).unwrap().group();
        for t in 0..=30u32 {
            let arr = reflection_arrangement(&g, t);
            let lines = arr.at_slice();
            assert_eq!(lines.len(), 3);
            let third = Q::new(t as i64, 3);
            let meet = RationalPoint::new(third, third);
            for l in &lines {
                assert_eq!(l.side_rational(meet, 0), 0, "t={t} {l}");
            }
            assert_eq!(lines[0].intersection(&lines[1], 0), Some(meet));
        }
    }

    #[test]
    fn first_quadrant_chamber() {
        for (m, dec, _) in published_decompositions() {
            let i = quarter_plane_chamber(&dec).unwrap();
            assert_eq!(i, 0, "{m:?}");
            assert!(dec.contains(i, Point::new(5, 1)));
        }
    }
}
