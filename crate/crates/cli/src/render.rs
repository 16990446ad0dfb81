use std::fmt::Write;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::Values;
use walkweyl::chamber::ReflectionLine;
use walkweyl::enumerate::CountTable;
use walkweyl::Point;

type Q = Ratio<i64>;

/// Counts laid out with `y` increasing upwards; `.` marks zero.
pub fn ascii(table: &CountTable) -> String {
    let Some((lo, hi)) = table.bounding_box() else {
        return "(empty)\n".into();
    };
    let width = table
        .iter()
        .map(|(_, c)| c.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for y in (lo.y..=hi.y).rev() {
        let row: Vec<String> = (lo.x..=hi.x)
            .map(|x| match table.get_ref(Point::new(x, y)) {
                Some(c) => format!("{c:>width$}"),
                None => format!("{:>width$}", "."),
            })
            .collect();
        writeln!(out, "{}", row.join(" ").trim_end()).unwrap();
    }
    out
}

fn shade(count: &BigUint, max: &BigUint, values: Values) -> f64 {
    if count.is_zero() || max.is_zero() {
        return 0.0;
    }
    match values {
        Values::Exact => count.to_f64().unwrap_or(f64::MAX) / max.to_f64().unwrap_or(f64::MAX),
        Values::LogBucket => {
            let bits = |v: &BigUint| v.bits() as f64;
            // ten buckets by binary magnitude
            ((bits(count) / bits(max).max(1.0)) * 10.0).ceil() / 10.0
        }
    }
}

/// Endpoints of a line clipped to the closed box `[x0, x1] × [y0, y1]`.
fn clip(line: &ReflectionLine, x0: Q, x1: Q, y0: Q, y1: Q) -> Option<((Q, Q), (Q, Q))> {
    let [a, b] = line.normal();
    let g = line.offset(0);
    let mut hits: Vec<(Q, Q)> = Vec::new();
    if b != 0 {
        for x in [x0, x1] {
            let y = (g - x * a) / b;
            if y >= y0 && y <= y1 {
                hits.push((x, y));
            }
        }
    }
    if a != 0 {
        for y in [y0, y1] {
            let x = (g - y * b) / a;
            if x >= x0 && x <= x1 {
                hits.push((x, y));
            }
        }
    }
    hits.sort();
    hits.dedup();
    match (hits.first(), hits.last()) {
        (Some(&p), Some(&q)) if p != q => Some((p, q)),
        _ => None,
    }
}

fn f6(q: Q) -> String {
    format!("{:.6}", *q.numer() as f64 / *q.denom() as f64)
}

/// Cells shaded by count, with the given reflection lines drawn on top.
pub fn svg(table: &CountTable, lines: &[ReflectionLine], scale: u32, values: Values) -> String {
    let (lo, hi) = table.bounding_box().unwrap_or((table.start, table.start));
    let cols = hi.x - lo.x + 1;
    let rows = hi.y - lo.y + 1;
    let s = scale as i64;
    let max = table
        .iter()
        .map(|(_, c)| c.clone())
        .max()
        .unwrap_or_default();
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        cols * s,
        rows * s,
        cols * s,
        rows * s
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for (p, c) in table.iter() {
        let level = shade(c, &max, values);
        let x = (p.x - lo.x) * s;
        let y = (hi.y - p.y) * s;
        writeln!(
            out,
            r#"<rect class="cell" x="{x}" y="{y}" width="{s}" height="{s}" fill="rgb(0,0,0)" fill-opacity="{level:.6}"><title>{} {c}</title></rect>"#,
            p
        )
        .unwrap();
    }
    // lattice coordinates of the drawing's outer edges
    let half = Q::new(1, 2);
    let (x0, x1) = (Q::from(lo.x) - half, Q::from(hi.x) + half);
    let (y0, y1) = (Q::from(lo.y) - half, Q::from(hi.y) + half);
    let to_px = |(x, y): (Q, Q)| ((x - x0) * s, (y1 - y) * s);
    for line in lines {
        if let Some((p, q)) = clip(line, x0, x1, y0, y1) {
            let (ax, ay) = to_px(p);
            let (bx, by) = to_px(q);
            writeln!(
                out,
                r#"<line class="reflection" x1="{}" y1="{}" x2="{}" y2="{}" stroke="blue" stroke-width="1"><title>{line}</title></line>"#,
                f6(ax),
                f6(ay),
                f6(bx),
                f6(by)
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clipping() {
        let l = ReflectionLine::central(1, -1);
        let (p, q) = clip(&l, Q::from(-2), Q::from(2), Q::from(-1), Q::from(3)).unwrap();
        assert_eq!(p, (Q::from(-1), Q::from(-1)));
        assert_eq!(q, (Q::from(2), Q::from(2)));
        assert!(clip(
            &ReflectionLine::central(1, 0),
            Q::from(1),
            Q::from(2),
            Q::from(0),
            Q::from(1)
        )
        .is_none());
    }
}
