use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{IsometryGroup, Matrix2};

type Q = Ratio<i64>;

/// A symmetric 2×2 rational matrix `[[p, q], [q, r]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BilinearForm(pub [[Q; 2]; 2]);

impl BilinearForm {
    pub fn new(p: Q, q: Q, r: Q) -> Self {
        BilinearForm([[p, q], [q, r]])
    }

    pub fn euclidean() -> Self {
        BilinearForm::new(Q::one(), Q::zero(), Q::one())
    }

    pub fn is_positive_definite(&self) -> bool {
        let [[p, q], [_, r]] = self.0;
        p.is_positive() && (p * r - q * q).is_positive()
    }

    /// `⟨u, v⟩ = u·B·vᵀ`.
    pub fn pair(&self, u: [Q; 2], v: [Q; 2]) -> Q {
        let b = self.0;
        u[0] * (b[0][0] * v[0] + b[0][1] * v[1]) + u[1] * (b[1][0] * v[0] + b[1][1] * v[1])
    }

    /// Scaled so the top-left entry is 1 (unchanged if it is zero).
    pub fn normalized(&self) -> Self {
        let p = self.0[0][0];
        if p.is_zero() {
            return *self;
        }
        let [[a, b], [_, d]] = self.0;
        BilinearForm::new(a / p, b / p, d / p)
    }

    /// Equal up to a positive scalar.
    pub fn is_positive_multiple_of(&self, other: &BilinearForm) -> bool {
        let a = self.0;
        let b = other.0;
        let entries = [(a[0][0], b[0][0]), (a[0][1], b[0][1]), (a[1][1], b[1][1])];
        let Some(&(x, y)) = entries.iter().find(|(x, y)| !x.is_zero() || !y.is_zero()) else {
            return true;
        };
        if x.is_zero() || y.is_zero() {
            return false;
        }
        let k = x / y;
        k.is_positive() && entries.iter().all(|&(x, y)| x == y * k)
    }

    fn conjugate(&self, m: &Matrix2, orientation: FormOrientation) -> BilinearForm {
        let mq = m.0.map(|row| row.map(Q::from));
        let (left, right) = match orientation {
            FormOrientation::Row => (mq, transpose(mq)),
            FormOrientation::Column => (transpose(mq), mq),
        };
        BilinearForm(mul(mul(left, self.0), right))
    }

    fn add(&self, o: &BilinearForm) -> BilinearForm {
        let mut out = self.0;
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] += o.0[i][j];
            }
        }
        BilinearForm(out)
    }
}

impl Serialize for BilinearForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .0
            .iter()
            .map(|r| r.iter().map(Q::to_string).collect())
            .collect();
        rows.serialize(s)
    }
}

fn transpose(m: [[Q; 2]; 2]) -> [[Q; 2]; 2] {
    [[m[0][0], m[1][0]], [m[0][1], m[1][1]]]
}

fn mul(a: [[Q; 2]; 2], b: [[Q; 2]; 2]) -> [[Q; 2]; 2] {
    let mut out = [[Q::zero(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// Which invariance equation a form family solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormOrientation {
    /// `M·B·Mᵀ = B`, the form preserved by the row-vector action `p ↦ p·M`.
    Row,
    /// `Mᵀ·B·M = B`, the form preserved by `v ↦ M·v` on column vectors.
    Column,
}

/// All symmetric forms invariant under a set of matrices, in one orientation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormFamily {
    pub orientation: FormOrientation,
    /// Basis of the solution space.
    pub basis: Vec<BilinearForm>,
    /// Positive-definite member with top-left entry 1, when one exists.
    pub representative: Option<BilinearForm>,
}

impl FormFamily {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// The family is one-dimensional (unique up to scale).
    pub fn is_unique(&self) -> bool {
        self.basis.len() == 1
    }

    pub fn admits(&self, b: &BilinearForm, group: &IsometryGroup) -> bool {
        group
            .elements()
            .iter()
            .all(|g| b.conjugate(&g.matrix(), self.orientation) == *b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantForms {
    pub row: FormFamily,
    pub column: FormFamily,
}

impl InvariantForms {
    pub fn family(&self, orientation: FormOrientation) -> &FormFamily {
        match orientation {
            FormOrientation::Row => &self.row,
            FormOrientation::Column => &self.column,
        }
    }

    /// Orientations whose family contains a positive multiple of `b`.
    pub fn orientations_matching(
        &self,
        b: &BilinearForm,
        group: &IsometryGroup,
    ) -> Vec<FormOrientation> {
        [&self.row, &self.column]
            .into_iter()
            .filter(|f| f.admits(b, group))
            .map(|f| f.orientation)
            .collect()
    }
}

/// Null space of an `n × 3` rational system, as basis vectors.
fn null_space(mut rows: Vec<[Q; 3]>) -> Vec<[Q; 3]> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..3 {
        let Some(src) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, src);
        let inv = rows[r][col].recip();
        for v in rows[r].iter_mut() {
            *v *= inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col];
                for j in 0..3 {
                    let sub = rows[r][j] * f;
                    rows[i][j] -= sub;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    (0..3)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = [Q::zero(); 3];
            v[free] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[row][free];
            }
            v
        })
        .collect()
}

fn family(group: &IsometryGroup, orientation: FormOrientation) -> FormFamily {
    let unknowns = [
        BilinearForm::new(Q::one(), Q::zero(), Q::zero()),
        BilinearForm::new(Q::zero(), Q::one(), Q::zero()),
        BilinearForm::new(Q::zero(), Q::zero(), Q::one()),
    ];
    let mut rows = Vec::new();
    for g in group.elements() {
        let images: Vec<BilinearForm> = unknowns
            .iter()
            .map(|u| u.conjugate(&g.matrix(), orientation))
            .collect();
        for (i, j) in [(0, 0), (0, 1), (1, 1)] {
            rows.push([0, 1, 2].map(|k| images[k].0[i][j] - unknowns[k].0[i][j]));
        }
    }
    let basis: Vec<BilinearForm> = null_space(rows)
        .into_iter()
        .map(|[p, q, r]| BilinearForm::new(p, q, r))
        .collect();
    // group average of the Euclidean form; invariant whenever the set is a group
    let average = group.elements().iter().fold(
        BilinearForm::new(Q::zero(), Q::zero(), Q::zero()),
        |acc, g| acc.add(&BilinearForm::euclidean().conjugate(&g.matrix(), orientation)),
    );
    let mut fam = FormFamily {
        orientation,
        basis,
        representative: None,
    };
    let candidate = if fam.is_unique() {
        let b = fam.basis[0];
        let b = if b.0[0][0].is_negative() {
            BilinearForm::new(-b.0[0][0], -b.0[0][1], -b.0[1][1])
        } else {
            b
        };
        Some(b)
    } else {
        Some(average)
    };
    fam.representative = candidate
        .filter(|b| b.is_positive_definite() && fam.admits(b, group))
        .map(|b| b.normalized());
    fam
}

/// Symmetric forms preserved by every element's linear part, in both the
/// row (`M·B·Mᵀ = B`) and column (`Mᵀ·B·M = B`) orientations.
pub fn invariant_bilinear_form(group: &IsometryGroup) -> InvariantForms {
    InvariantForms {
        row: family(group, FormOrientation::Row),
        column: family(group, FormOrientation::Column),
    }
}
