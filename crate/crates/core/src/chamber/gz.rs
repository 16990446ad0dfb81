use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::ReflectionLine;
use crate::isometry::{invariant_bilinear_form, step_set_permutation, BilinearForm, IsometryGroup};
use crate::lattice::{Point, StepSet};

type Q = Ratio<i64>;

fn ser_q<S: Serializer>(q: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

fn ser_qs<S: Serializer>(qs: &[Q], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(|q| q.to_string()))
}

/// Pairings of one wall's root with every step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WallPairing {
    pub wall: ReflectionLine,
    /// Primitive integer vector `B`-orthogonal to the wall.
    pub root: Point,
    /// `⟨root, s⟩_B` in step order.
    #[serde(serialize_with = "ser_qs")]
    pub pairings: Vec<Q>,
    /// Largest absolute pairing.
    #[serde(serialize_with = "ser_q")]
    pub k: Q,
    /// Steps parallel to the wall.
    pub parallel_steps: Vec<Point>,
    /// Every pairing is `±k` or zero.
    pub holds: bool,
    /// Every pairing is exactly `±k`.
    pub holds_strict: bool,
}

/// Preconditions of the signed orbit-sum formula for one chamber.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GzReport {
    pub cond_i: bool,
    pub cond_i_note: &'static str,
    pub cond_ii: bool,
    /// First element that does not permute the steps.
    pub cond_ii_witness: Option<String>,
    pub form: BilinearForm,
    pub form_note: String,
    pub walls: Vec<WallPairing>,
    pub cond_iii: bool,
    pub cond_iii_strict: bool,
    pub all_conditions: bool,
}

/// `n·B⁻¹` scaled to a primitive integer vector.
fn b_normal(wall: &ReflectionLine, b: &BilinearForm) -> Point {
    let [[p, q], [_, r]] = b.0;
    let [a, c] = wall.normal();
    // adjugate of B; the determinant is positive and dropped
    let v = [
        Q::from(a) * r - Q::from(c) * q,
        Q::from(c) * p - Q::from(a) * q,
    ];
    let den = v[0].denom().lcm(v[1].denom());
    let (x, y) = ((v[0] * den).to_integer(), (v[1] * den).to_integer());
    let g = x.gcd(&y).max(1);
    Point::new(x / g, y / g)
}

fn wall_pairing(wall: &ReflectionLine, steps: &StepSet, b: &BilinearForm) -> WallPairing {
    let root = b_normal(wall, b);
    let rq = [Q::from(root.x), Q::from(root.y)];
    let pairings: Vec<Q> = steps
        .steps()
        .iter()
        .map(|s| b.pair(rq, [Q::from(s.x), Q::from(s.y)]))
        .collect();
    let k = pairings
        .iter()
        .map(|v| v.abs())
        .max()
        .unwrap_or_else(Q::zero);
    let parallel_steps = steps
        .steps()
        .iter()
        .zip(&pairings)
        .filter(|(_, v)| v.is_zero())
        .map(|(s, _)| *s)
        .collect();
    let holds = k.is_positive() && pairings.iter().all(|v| v.is_zero() || v.abs() == k);
    let holds_strict = k.is_positive() && pairings.iter().all(|v| v.abs() == k);
    WallPairing {
        wall: *wall,
        root,
        pairings,
        k,
        parallel_steps,
        holds,
        holds_strict,
    }
}

/// Checks lattice invariance, step-set invariance and the constant-pairing
/// condition for the chamber bounded by `walls`. Without an explicit form the
/// group's invariant form is used when it is unique, the Euclidean one otherwise.
pub fn gz_precondition_report(
    group: &IsometryGroup,
    steps: &StepSet,
    form: Option<&BilinearForm>,
    walls: &[ReflectionLine],
) -> GzReport {
    let (form, form_note) = match form {
        Some(b) => (*b, "given".to_string()),
        None => {
            let row = invariant_bilinear_form(group).row;
            match row.representative {
                Some(b) if row.is_unique() => (b, "unique invariant form".to_string()),
                _ => (
                    BilinearForm::euclidean(),
                    format!(
                        "invariant forms span {} dimensions; Euclidean form used",
                        row.dimension()
                    ),
                ),
            }
        }
    };
    let cond_ii_witness = group
        .elements()
        .iter()
        .find(|g| step_set_permutation(g, steps).is_none())
        .map(|g| g.to_string());
    let walls: Vec<WallPairing> = walls
        .iter()
        .map(|w| wall_pairing(w, steps, &form))
        .collect();
    let cond_iii = walls.iter().all(|w| w.holds);
    let cond_iii_strict = walls.iter().all(|w| w.holds_strict);
    let cond_ii = cond_ii_witness.is_none();
    GzReport {
        cond_i: true,
        cond_i_note: "unimodular integer maps with integer translations permute the lattice",
        cond_ii,
        cond_ii_witness,
        form,
        form_note,
        walls,
        cond_iii,
        cond_iii_strict,
        all_conditions: cond_ii && cond_iii,
    }
}
