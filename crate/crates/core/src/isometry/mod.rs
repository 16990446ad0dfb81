//! Integer affine isometries of the lattice.
//!
//! Points are row vectors and act on the left of the matrix: `p ↦ p·M + c + t·τ`,
//! where `t` is the walk length of the slice being acted on. Composition
//! `compose(g, h)` means "g first, then h" and has linear part `M_g·M_h`.

mod catalog;
mod fixed;
mod form;
mod group;
mod invariance;
mod search;

pub use catalog::{
    axis_reflection_group, published_group, GroupSource, LabelledElement, PublishedGroup,
};
pub use fixed::{
    fixed_set, oblique_angle, reflection_direction, unit_eigenvector, FixedSet, Line, ObliqueAngle,
};
pub use form::{
    invariant_bilinear_form, BilinearForm, FormFamily, FormOrientation, InvariantForms,
};
pub use group::{
    dihedral_presentation_check, generate_group, product_order, GroupCaps, IsometryGroup,
    ProductOrder, Truncation, TruncationReason,
};
pub use invariance::{
    counts_invariance_check, counts_invariance_check_on, free_slices, param_permutation,
    step_set_permutation, InvarianceCheck, Permutation,
};
pub use search::{search_affine_isometries, search_linear_isometries, SearchBounds};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::lattice::Point;
use crate::{Error, Result};

/// A 2×2 integer matrix acting on row vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Matrix2(pub [[i64; 2]; 2]);

impl Matrix2 {
    pub const IDENTITY: Matrix2 = Matrix2([[1, 0], [0, 1]]);

    pub const fn new(m11: i64, m12: i64, m21: i64, m22: i64) -> Self {
        Matrix2([[m11, m12], [m21, m22]])
    }

    pub fn det(&self) -> i64 {
        let [[a, b], [c, d]] = self.0;
        a * d - b * c
    }

    pub fn trace(&self) -> i64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn mul(&self, o: &Matrix2) -> Matrix2 {
        let a = self.0;
        let b = o.0;
        Matrix2([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }

    pub fn transpose(&self) -> Matrix2 {
        let [[a, b], [c, d]] = self.0;
        Matrix2([[a, c], [b, d]])
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse(&self) -> Option<Matrix2> {
        let det = self.det();
        if det.abs() != 1 {
            return None;
        }
        let [[a, b], [c, d]] = self.0;
        Some(Matrix2([[d * det, -b * det], [-c * det, a * det]]))
    }

    /// `p·M`.
    pub fn act(&self, p: Point) -> Point {
        let m = self.0;
        Point::new(p.x * m[0][0] + p.y * m[1][0], p.x * m[0][1] + p.y * m[1][1])
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.0.iter().flatten().map(|v| v.abs()).max().unwrap_or(0)
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.0;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

/// Whether repeated composition reaches the identity within a cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ElementOrder {
    Finite(u32),
    /// No power up to `cap` is the identity.
    Infinite {
        cap: u32,
    },
}

/// `p ↦ p·M + c + t·τ` with `det M = ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineIsometry {
    linear: Matrix2,
    shift: Point,
    per_t: Point,
}

impl AffineIsometry {
    pub const IDENTITY: AffineIsometry = AffineIsometry {
        linear: Matrix2::IDENTITY,
        shift: Point::ORIGIN,
        per_t: Point::ORIGIN,
    };

    pub fn new(linear: Matrix2, shift: Point, per_t: Point) -> Result<Self> {
        let det = linear.det();
        if det.abs() != 1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(AffineIsometry {
            linear,
            shift,
            per_t,
        })
    }

    pub fn linear(linear: Matrix2) -> Result<Self> {
        AffineIsometry::new(linear, Point::ORIGIN, Point::ORIGIN)
    }

    /// Shorthand for literal unimodular matrices; panics otherwise.
    pub fn from_rows(m11: i64, m12: i64, m21: i64, m22: i64) -> Self {
        AffineIsometry::linear(Matrix2::new(m11, m12, m21, m22)).expect("unimodular literal")
    }

    pub fn matrix(&self) -> Matrix2 {
        self.linear
    }

    pub fn shift(&self) -> Point {
        self.shift
    }

    pub fn per_t(&self) -> Point {
        self.per_t
    }

    pub fn is_linear(&self) -> bool {
        self.shift == Point::ORIGIN && self.per_t == Point::ORIGIN
    }

    pub fn is_identity(&self) -> bool {
        *self == AffineIsometry::IDENTITY
    }

    /// Translation at slice `t`: `c + t·τ`.
    pub fn translation_at(&self, t: u32) -> Point {
        self.shift + self.per_t.scale(t as i64)
    }

    /// Largest absolute translation entry, constant and per-`t` parts together.
    pub fn translation_norm(&self) -> i64 {
        self.shift.norm_inf().max(self.per_t.norm_inf())
    }

    pub fn apply(&self, p: Point, t: u32) -> Point {
        self.linear.act(p) + self.translation_at(t)
    }

    /// Folds the per-`t` translation into the constant one at a fixed `t`.
    pub fn instantiate(&self, t: u32) -> AffineIsometry {
        AffineIsometry {
            linear: self.linear,
            shift: self.translation_at(t),
            per_t: Point::ORIGIN,
        }
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &AffineIsometry) -> AffineIsometry {
        AffineIsometry {
            linear: self.linear.mul(&next.linear),
            shift: next.linear.act(self.shift) + next.shift,
            per_t: next.linear.act(self.per_t) + next.per_t,
        }
    }

    pub fn inverse(&self) -> AffineIsometry {
        let inv = self.linear.inverse().expect("isometries are unimodular");
        AffineIsometry {
            linear: inv,
            shift: -inv.act(self.shift),
            per_t: -inv.act(self.per_t),
        }
    }

    pub fn pow(&self, n: u32) -> AffineIsometry {
        (0..n).fold(AffineIsometry::IDENTITY, |acc, _| acc.then(self))
    }

    /// Determinant of the linear part; the parity of the word length for
    /// reflection groups.
    pub fn sign(&self) -> i64 {
        self.linear.det()
    }

    pub fn order(&self, cap: u32) -> ElementOrder {
        element_order(self, cap)
    }

    /// An involution with determinant `-1`.
    pub fn is_reflection(&self) -> bool {
        self.sign() == -1 && self.then(self).is_identity()
    }
}

/// `g` first, then `h`.
pub fn compose(g: &AffineIsometry, h: &AffineIsometry) -> AffineIsometry {
    g.then(h)
}

pub fn inverse(g: &AffineIsometry) -> AffineIsometry {
    g.inverse()
}

pub fn sign(g: &AffineIsometry) -> i64 {
    g.sign()
}

pub fn apply_isometry(g: &AffineIsometry, p: Point, t: u32) -> Point {
    g.apply(p, t)
}

/// Least `k ≤ cap` with `g^k = e`.
pub fn element_order(g: &AffineIsometry, cap: u32) -> ElementOrder {
    let mut acc = *g;
    for k in 1..=cap.max(1) {
        if acc.is_identity() {
            return ElementOrder::Finite(k);
        }
        acc = acc.then(g);
    }
    ElementOrder::Infinite { cap }
}

impl fmt::Display for AffineIsometry {
    /// Same syntax as [`FromStr`]: `m11,m12;m21,m22[+c1,c2][+t*u1,u2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.linear.0;
        write!(f, "{a},{b};{c},{d}")?;
        if self.shift != Point::ORIGIN {
            write!(f, "+{},{}", self.shift.x, self.shift.y)?;
        }
        if self.per_t != Point::ORIGIN {
            write!(f, "+t*{},{}", self.per_t.x, self.per_t.y)?;
        }
        Ok(())
    }
}

impl FromStr for AffineIsometry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |reason: String| Error::Parse {
            what: "isometry",
            input: s.to_string(),
            reason,
        };
        let mut parts = cleaned.split('+');
        let matrix = parts.next().unwrap_or_default();
        let rows: Vec<&str> = matrix.split(';').collect();
        if rows.len() != 2 {
            return Err(err("expected `m11,m12;m21,m22`".into()));
        }
        let r1: Point = rows[0]
            .parse()
            .map_err(|_| err(format!("bad matrix row `{}`", rows[0])))?;
        let r2: Point = rows[1]
            .parse()
            .map_err(|_| err(format!("bad matrix row `{}`", rows[1])))?;
        let mut shift = Point::ORIGIN;
        let mut per_t = Point::ORIGIN;
        let (mut seen_shift, mut seen_t) = (false, false);
        for part in parts {
            if let Some(rest) = part.strip_prefix("t*") {
                if seen_t {
                    return Err(err("per-t translation given twice".into()));
                }
                per_t = rest
                    .parse()
                    .map_err(|_| err(format!("bad per-t translation `{rest}`")))?;
                seen_t = true;
            } else {
                if seen_shift || seen_t {
                    return Err(err(
                        "constant translation must come first and only once".into()
                    ));
                }
                shift = part
                    .parse()
                    .map_err(|_| err(format!("bad translation `{part}`")))?;
                seen_shift = true;
            }
        }
        AffineIsometry::new(Matrix2::new(r1.x, r1.y, r2.x, r2.y), shift, per_t)
    }
}
