use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use super::Region;
use crate::lattice::Point;

/// All walk counts at a fixed length: one Pascal slice. Only nonzero counts
/// are stored, in lexicographic point order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub t: u32,
    pub start: Point,
    pub region: Region,
    counts: BTreeMap<Point, BigUint>,
}

#[derive(Serialize)]
struct TableJson<'a> {
    t: u32,
    start: [i64; 2],
    region: &'a str,
    counts: Vec<(i64, i64, String)>,
}

impl CountTable {
    pub fn new(t: u32, start: Point, region: Region, counts: BTreeMap<Point, BigUint>) -> Self {
        let counts = counts.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        CountTable {
            t,
            start,
            region,
            counts,
        }
    }

    pub fn get(&self, p: Point) -> BigUint {
        self.counts.get(&p).cloned().unwrap_or_default()
    }

    pub fn get_ref(&self, p: Point) -> Option<&BigUint> {
        self.counts.get(&p)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Point, &BigUint)> {
        self.counts.iter().map(|(p, c)| (*p, c))
    }

    pub fn counts(&self) -> &BTreeMap<Point, BigUint> {
        &self.counts
    }

    pub fn support_len(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Smallest box `(min, max)` containing the support.
    pub fn bounding_box(&self) -> Option<(Point, Point)> {
        let mut it = self.counts.keys();
        let first = *it.next()?;
        Some(it.fold((first, first), |(lo, hi), p| {
            (
                Point::new(lo.x.min(p.x), lo.y.min(p.y)),
                Point::new(hi.x.max(p.x), hi.y.max(p.y)),
            )
        }))
    }

    /// `x,y,count` rows sorted by `(x, y)`, `\n` line endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,count\n");
        for (p, c) in &self.counts {
            out.push_str(&format!("{},{},{}\n", p.x, p.y, c));
        }
        out
    }

    /// Compact JSON with decimal-string counts, terminated by `\n`.
    pub fn to_json(&self) -> String {
        let doc = TableJson {
            t: self.t,
            start: self.start.into(),
            region: self.region.label(),
            counts: self
                .counts
                .iter()
                .map(|(p, c)| (p.x, p.y, c.to_string()))
                .collect(),
        };
        let mut s = serde_json::to_string(&doc).expect("count table serializes");
        s.push('\n');
        s
    }
}
