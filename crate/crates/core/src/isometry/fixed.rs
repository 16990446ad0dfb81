use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{AffineIsometry, Matrix2};
use crate::lattice::{Point, RationalPoint};
use crate::{Error, Result};

type Q = Ratio<i64>;

/// The line `α·x + β·y = γ₀ + γ₁·t`, with `(α, β)` primitive and its first
/// nonzero entry positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    normal: [i64; 2],
    constant: Q,
    per_t: Q,
}

impl Line {
    pub fn new(alpha: i64, beta: i64, constant: Q, per_t: Q) -> Self {
        assert!(alpha != 0 || beta != 0, "line normal must be nonzero");
        let g = alpha.gcd(&beta);
        let flip = if alpha < 0 || (alpha == 0 && beta < 0) {
            -1
        } else {
            1
        };
        let s = g * flip;
        Line {
            normal: [alpha / s, beta / s],
            constant: constant / s,
            per_t: per_t / s,
        }
    }

    /// `α·x + β·y = γ`.
    pub fn central(alpha: i64, beta: i64) -> Self {
        Line::new(alpha, beta, Q::zero(), Q::zero())
    }

    pub fn normal(&self) -> [i64; 2] {
        self.normal
    }

    pub fn constant(&self) -> Q {
        self.constant
    }

    pub fn per_t(&self) -> Q {
        self.per_t
    }

    pub fn offset(&self, t: u32) -> Q {
        self.constant + self.per_t * Q::from(t as i64)
    }

    /// Passes through the origin at every `t`.
    pub fn is_central(&self) -> bool {
        self.constant.is_zero() && self.per_t.is_zero()
    }

    pub fn depends_on_t(&self) -> bool {
        !self.per_t.is_zero()
    }

    /// The same line with `t` fixed.
    pub fn at(&self, t: u32) -> Line {
        Line {
            normal: self.normal,
            constant: self.offset(t),
            per_t: Q::zero(),
        }
    }

    pub fn value(&self, p: Point) -> i64 {
        self.normal[0] * p.x + self.normal[1] * p.y
    }

    /// Sign of `α·x + β·y − γ(t)`.
    pub fn side(&self, p: Point, t: u32) -> i32 {
        let v = Q::from(self.value(p)) - self.offset(t);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn side_rational(&self, p: RationalPoint, t: u32) -> i32 {
        let v = p.x * self.normal[0] + p.y * self.normal[1] - self.offset(t);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn contains(&self, p: Point, t: u32) -> bool {
        self.side(p, t) == 0
    }

    /// Whether the line meets the open first quadrant at slice `t`.
    pub fn crosses_open_quadrant(&self, t: u32) -> bool {
        let [a, b] = self.normal;
        let g = self.offset(t);
        if g.is_zero() {
            a.signum() * b.signum() < 0
        } else if g.is_positive() {
            a > 0 || b > 0
        } else {
            a < 0 || b < 0
        }
    }

    /// Direction vector `(−β, α)`.
    pub fn direction(&self) -> Point {
        Point::new(-self.normal[1], self.normal[0])
    }

    pub fn is_parallel(&self, other: &Line) -> bool {
        self.normal == other.normal
    }

    /// Intersection point at slice `t`, if the lines are not parallel.
    pub fn intersection(&self, other: &Line, t: u32) -> Option<RationalPoint> {
        let [a1, b1] = self.normal;
        let [a2, b2] = other.normal;
        let det = a1 * b2 - a2 * b1;
        if det == 0 {
            return None;
        }
        let (g1, g2) = (self.offset(t), other.offset(t));
        let x = (g1 * b2 - g2 * b1) / det;
        let y = (g2 * a1 - g1 * a2) / det;
        Some(RationalPoint::new(x, y))
    }

    fn rhs_string(&self) -> String {
        let mut parts = Vec::new();
        if !self.per_t.is_zero() {
            let c = self.per_t;
            let body = match (c.numer().abs(), *c.denom()) {
                (1, 1) => "t".to_string(),
                (n, 1) => format!("{n}t"),
                (1, d) => format!("t/{d}"),
                (n, d) => format!("{n}t/{d}"),
            };
            parts.push((c.is_negative(), body));
        }
        if !self.constant.is_zero() {
            parts.push((self.constant.is_negative(), self.constant.abs().to_string()));
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (neg, body)) in parts.into_iter().enumerate() {
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }
}

fn term(coeff: i64, var: char) -> String {
    match coeff.abs() {
        1 => var.to_string(),
        n => format!("{n}{var}"),
    }
}

impl fmt::Display for Line {
    /// `x = 0`, `y = x`, `2y = x`, `x + 2y = 10`, `2x + y = t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.normal;
        if self.is_central() && a != 0 && b != 0 && a.signum() != b.signum() {
            return write!(f, "{} = {}", term(b, 'y'), term(a, 'x'));
        }
        let lhs = match (a, b) {
            (0, _) => term(b, 'y'),
            (_, 0) => term(a, 'x'),
            _ => format!(
                "{} {} {}",
                term(a, 'x'),
                if b < 0 { '-' } else { '+' },
                term(b, 'y')
            ),
        };
        write!(f, "{lhs} = {}", self.rhs_string())
    }
}

impl Serialize for Line {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Solution set of `p·M + c + t·τ = p` over the rational plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedSet {
    WholePlane,
    Line(Line),
    Point(RationalPoint),
    Empty,
}

impl fmt::Display for FixedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedSet::WholePlane => f.write_str("whole plane"),
            FixedSet::Line(l) => write!(f, "line {l}"),
            FixedSet::Point(p) => write!(f, "point {p}"),
            FixedSet::Empty => f.write_str("empty"),
        }
    }
}

impl Serialize for FixedSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn minus_identity(m: Matrix2, lambda: i64) -> [[i64; 2]; 2] {
    let mut a = m.0;
    a[0][0] -= lambda;
    a[1][1] -= lambda;
    a
}

/// Solves `p·A = r` where `r = r₀ + t·r₁`; gives the line when `A` has rank 1.
fn solve_rank_one(a: [[i64; 2]; 2], r0: Point, r1: Point) -> Option<Line> {
    let cols = [[a[0][0], a[1][0]], [a[0][1], a[1][1]]];
    let rhs0 = [r0.x, r0.y];
    let rhs1 = [r1.x, r1.y];
    let j = (0..2).find(|&j| cols[j] != [0, 0])?;
    let k = 1 - j;
    let i = if cols[j][0] != 0 { 0 } else { 1 };
    // col_k = λ·col_j with λ = col_k[i] / col_j[i]; equations agree iff r_k = λ·r_j
    let consistent = |rhs: [i64; 2]| rhs[k] * cols[j][i] == cols[k][i] * rhs[j];
    if !consistent(rhs0) || !consistent(rhs1) {
        return None;
    }
    Some(Line::new(
        cols[j][0],
        cols[j][1],
        Q::from(rhs0[j]),
        Q::from(rhs1[j]),
    ))
}

/// Fixed points of `g` at slice `t`.
pub fn fixed_set(g: &AffineIsometry, t: u32) -> FixedSet {
    let a = minus_identity(g.matrix(), 1);
    let r = -g.translation_at(t);
    let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if a == [[0, 0], [0, 0]] {
        return if r == Point::ORIGIN {
            FixedSet::WholePlane
        } else {
            FixedSet::Empty
        };
    }
    if det != 0 {
        let x = Q::new(r.x * a[1][1] - r.y * a[1][0], det);
        let y = Q::new(a[0][0] * r.y - a[0][1] * r.x, det);
        return FixedSet::Point(RationalPoint::new(x, y));
    }
    match solve_rank_one(a, r, Point::ORIGIN) {
        Some(line) => FixedSet::Line(line),
        None => FixedSet::Empty,
    }
}

impl AffineIsometry {
    /// The fixed line as a function of `t`, when it is a line at every `t`.
    pub fn fixed_line(&self) -> Option<Line> {
        let a = minus_identity(self.matrix(), 1);
        let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        if det != 0 || a == [[0, 0], [0, 0]] {
            return None;
        }
        solve_rank_one(a, -self.shift(), -self.per_t())
    }
}

fn normalize_direction(d: Point) -> Point {
    let g = d.x.gcd(&d.y);
    let d = Point::new(d.x / g, d.y / g);
    if d.y < 0 || (d.y == 0 && d.x < 0) {
        -d
    } else {
        d
    }
}

/// Primitive left eigenvector of the linear part for eigenvalue `±1`,
/// normalised to `y > 0` (or `y = 0`, `x > 0`). `None` unless the eigenspace
/// is exactly one-dimensional.
pub fn unit_eigenvector(g: &AffineIsometry, eigenvalue: i64) -> Option<Point> {
    let a = minus_identity(g.matrix(), eigenvalue);
    let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if det != 0 {
        return None;
    }
    let j = (0..2).find(|&j| a[0][j] != 0 || a[1][j] != 0)?;
    // d·col_j = 0
    Some(normalize_direction(Point::new(a[1][j], -a[0][j])))
}

/// Direction along which the reflection acts: `d·M = −d`.
pub fn reflection_direction(g: &AffineIsometry) -> Result<Point> {
    let m = g.matrix();
    if m.det() != -1 || m.mul(&m) != Matrix2::IDENTITY {
        return Err(Error::NotAReflection(format!(
            "linear part {m} is not an involution of determinant -1"
        )));
    }
    unit_eigenvector(g, -1).ok_or_else(|| Error::NotAReflection(m.to_string()))
}

/// Counterclockwise angle in `[0, π)` from a reflection's fixed line to its
/// reflection direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObliqueAngle {
    /// Primitive `(cos θ, sin θ)` up to a positive factor, `sin θ ≥ 0`.
    pub direction: Point,
    pub exact: String,
    /// Six decimals, for display only.
    pub approx: String,
}

fn arctan_text(num: i64, den: i64) -> String {
    let q = Q::new(num, den);
    format!("arctan({q})")
}

pub fn oblique_angle(g: &AffineIsometry) -> Option<ObliqueAngle> {
    let line = g.fixed_line()?;
    let d = reflection_direction(g).ok()?;
    let l = line.direction();
    let (mut c, mut s) = (l.x * d.x + l.y * d.y, l.x * d.y - l.y * d.x);
    if s < 0 || (s == 0 && c < 0) {
        c = -c;
        s = -s;
    }
    let k = c.gcd(&s).max(1);
    let (c, s) = (c / k, s / k);
    let exact = match (c, s) {
        (_, 0) => "0".to_string(),
        (0, _) => "π/2".to_string(),
        (1, 1) => "π/4".to_string(),
        (-1, 1) => "3π/4".to_string(),
        (c, s) if c > 0 => arctan_text(s, c),
        (c, s) => format!("π - {}", arctan_text(s, -c)),
    };
    Some(ObliqueAngle {
        direction: Point::new(c, s),
        exact,
        approx: format!("{:.6}", (s as f64).atan2(c as f64)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_of(g: &AffineIsometry, t: u32) -> Line {
        match fixed_set(g, t) {
            FixedSet::Line(l) => l,
            other => panic!("expected a line, got {other}"),
        }
    }

    #[test]
    fn fixed_line_examples() {
        let k1 = AffineIsometry::from_rows(-1, -1, 0, 1);
        assert_eq!(line_of(&k1, 0), Line::central(1, 0));
        assert_eq!(line_of(&k1, 0).to_string(), "x = 0");
        let g3 = AffineIsometry::from_rows(1, 1, 0, -1);
        assert_eq!(line_of(&g3, 0), Line::central(1, -2));
        assert_eq!(line_of(&g3, 0).to_string(), "2y = x");
        let t132: AffineIsometry = "1,-1;0,-1+t*0,1".parse().unwrap();
        let l = line_of(&t132, 10);
        assert_eq!(l, Line::new(1, 2, 10.into(), 0.into()));
        assert_eq!(l.to_string(), "x + 2y = 10");
        let sym = t132.fixed_line().unwrap();
        assert_eq!(sym.to_string(), "x + 2y = t");
        assert_eq!(sym.at(10), l);
    }

    #[test]
    fn other_fixed_sets() {
        assert_eq!(
            fixed_set(&AffineIsometry::IDENTITY, 3),
            FixedSet::WholePlane
        );
        let shift: AffineIsometry = "1,0;0,1+1,0".parse().unwrap();
        assert_eq!(fixed_set(&shift, 3), FixedSet::Empty);
        let rot = AffineIsometry::from_rows(0, -1, 1, -1);
        assert_eq!(
            fixed_set(&rot, 0),
            FixedSet::Point(RationalPoint::new(0.into(), 0.into()))
        );
        // glide reflection: swap then shift along the mirror
        let glide: AffineIsometry = "0,1;1,0+1,1".parse().unwrap();
        assert_eq!(fixed_set(&glide, 0), FixedSet::Empty);
        let off: AffineIsometry = "0,1;1,0+1,-1".parse().unwrap();
        assert_eq!(
            fixed_set(&off, 0),
            FixedSet::Line(Line::new(1, -1, 1.into(), 0.into()))
        );
    }

    #[test]
    fn reflection_directions() {
        let cases = [
            (AffineIsometry::from_rows(-1, 1, 0, 1), Point::new(-2, 1)),
            (AffineIsometry::from_rows(1, 0, 1, -1), Point::new(-1, 2)),
            (AffineIsometry::from_rows(-1, -1, 0, 1), Point::new(2, 1)),
            (AffineIsometry::from_rows(1, 0, -1, -1), Point::new(1, 2)),
        ];
        for (g, d) in cases {
            assert_eq!(reflection_direction(&g).unwrap(), d);
            assert_eq!(g.matrix().act(d), -d);
        }
        let rot = AffineIsometry::from_rows(0, -1, 1, -1);
        assert!(matches!(
            reflection_direction(&rot),
            Err(Error::NotAReflection(_))
        ));
    }

    #[test]
    fn line_geometry() {
        let l = Line::new(1, 2, 0.into(), 1.into());
        let m = Line::new(2, 1, 0.into(), 1.into());
        let third = Q::new(10, 3);
        assert_eq!(
            l.intersection(&m, 10),
            Some(RationalPoint::new(third, third))
        );
        assert!(l.crosses_open_quadrant(10));
        assert!(!Line::central(1, 1).crosses_open_quadrant(0));
        assert!(Line::central(1, -1).crosses_open_quadrant(0));
        assert!(!Line::central(1, 0).crosses_open_quadrant(0));
        assert_eq!(Line::central(-2, 4), Line::central(1, -2));
        assert_eq!(Line::central(1, 1).to_string(), "x + y = 0");
        assert_eq!(
            Line::new(2, 1, 0.into(), 1.into()).to_string(),
            "2x + y = t"
        );
        assert_eq!(
            Line::new(1, 0, Q::new(-1, 2), Q::new(2, 3)).to_string(),
            "x = 2t/3 - 1/2"
        );
    }

    #[test]
    fn gessel_oblique_angles() {
        let g3 = AffineIsometry::from_rows(1, 1, 0, -1);
        let a = oblique_angle(&g3).unwrap();
        assert_eq!(a.exact, "arctan(2)");
        assert_eq!(a.approx, "1.107149");
        let g1 = AffineIsometry::from_rows(1, 0, -2, -1);
        assert_eq!(oblique_angle(&g1).unwrap().exact, "π/4");
        let g4 = AffineIsometry::from_rows(-1, 0, 2, 1);
        assert_eq!(oblique_angle(&g4).unwrap().exact, "3π/4");
        let g2 = AffineIsometry::from_rows(-1, -1, 0, 1);
        assert_eq!(oblique_angle(&g2).unwrap().exact, "π - arctan(2)");
        assert!(oblique_angle(&AffineIsometry::from_rows(0, -1, 1, 0)).is_none());
        let perpendicular = AffineIsometry::from_rows(-1, 0, 0, 1);
        assert_eq!(oblique_angle(&perpendicular).unwrap().exact, "π/2");
    }
}
