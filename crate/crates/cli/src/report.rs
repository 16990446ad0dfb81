use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use crate::Show;
use walkweyl::chamber::reflection_arrangement;
use walkweyl::isometry::{
    invariant_bilinear_form, oblique_angle, unit_eigenvector, AffineIsometry, ElementOrder,
    InvariantForms, IsometryGroup, ObliqueAngle, PublishedGroup,
};
use walkweyl::{Point, RationalPoint};

#[derive(Serialize)]
pub struct MatrixRow {
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<&'static str>,
    element: String,
    matrix: [[i64; 2]; 2],
    shift: Point,
    per_t: Point,
    sign: i64,
}

#[derive(Serialize)]
pub struct LineRow {
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<&'static str>,
    element: String,
    line: String,
    at_t: String,
}

#[derive(Serialize)]
pub struct EigenRow {
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<&'static str>,
    element: String,
    minus: Option<Point>,
    plus: Option<Point>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oblique_angle: Option<ObliqueAngle>,
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum Body {
    Matrices {
        elements: Vec<MatrixRow>,
    },
    Orders {
        orders: BTreeMap<u32, usize>,
        infinite_order: usize,
    },
    Lines {
        t: u32,
        lines: Vec<LineRow>,
        meet: Option<String>,
    },
    Eigenvectors {
        elements: Vec<EigenRow>,
    },
    Form {
        forms: InvariantForms,
    },
}

#[derive(Serialize)]
pub struct GroupView {
    order: usize,
    finite: bool,
    #[serde(flatten)]
    body: Body,
}

fn rational_point(p: RationalPoint) -> String {
    format!("({}, {})", p.x, p.y)
}

pub fn group_view(
    group: &IsometryGroup,
    labels: Option<&PublishedGroup>,
    show: Show,
    t: u32,
) -> GroupView {
    let label = |g: &AffineIsometry| {
        labels.and_then(|p| {
            p.elements
                .iter()
                .find(|e| e.element == *g || e.element.instantiate(t) == *g)
                .map(|e| e.label)
        })
    };
    let body = match show {
        Show::Matrices => Body::Matrices {
            elements: group
                .elements()
                .iter()
                .map(|g| MatrixRow {
                    label: label(g),
                    element: g.to_string(),
                    matrix: g.matrix().0,
                    shift: g.shift(),
                    per_t: g.per_t(),
                    sign: g.sign(),
                })
                .collect(),
        },
        Show::Orders => {
            let mut orders = BTreeMap::new();
            let mut infinite_order = 0;
            for g in group.elements() {
                match g.order(64) {
                    ElementOrder::Finite(n) => *orders.entry(n).or_insert(0) += 1,
                    ElementOrder::Infinite { .. } => infinite_order += 1,
                }
            }
            Body::Orders {
                orders,
                infinite_order,
            }
        }
        Show::Lines => {
            let lines: Vec<LineRow> = group
                .reflections()
                .filter_map(|g| {
                    let l = g.fixed_line()?;
                    Some(LineRow {
                        label: label(g),
                        element: g.to_string(),
                        line: l.to_string(),
                        at_t: l.at(t).to_string(),
                    })
                })
                .collect();
            let at = reflection_arrangement(group, t).at_slice();
            let meet = at
                .iter()
                .enumerate()
                .find_map(|(i, a)| at[i + 1..].iter().find_map(|b| a.intersection(b, 0)))
                .filter(|p| at.iter().all(|l| l.side_rational(*p, 0) == 0))
                .map(rational_point);
            Body::Lines { t, lines, meet }
        }
        Show::Eigenvectors => Body::Eigenvectors {
            elements: group
                .elements()
                .iter()
                .filter(|g| !g.is_identity())
                .map(|g| EigenRow {
                    label: label(g),
                    element: g.to_string(),
                    minus: unit_eigenvector(g, -1),
                    plus: unit_eigenvector(g, 1),
                    oblique_angle: oblique_angle(g),
                })
                .collect(),
        },
        Show::Form => Body::Form {
            forms: invariant_bilinear_form(group),
        },
    };
    GroupView {
        order: group.order(),
        finite: group.is_finite(),
        body,
    }
}

fn opt_point(p: Option<Point>) -> String {
    p.map(|p| p.to_string()).unwrap_or_else(|| "-".into())
}

/// Plain-text rendering of a group view.
pub fn table(view: &GroupView) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "order {}{}",
        view.order,
        if view.finite { "" } else { " (truncated)" }
    )
    .unwrap();
    let name = |l: Option<&str>, e: &str| match l {
        Some(l) => format!("{l:<5} {e}"),
        None => e.to_string(),
    };
    match &view.body {
        Body::Matrices { elements } => {
            for r in elements {
                writeln!(out, "{}  det {}", name(r.label, &r.element), r.sign).unwrap();
            }
        }
        Body::Orders {
            orders,
            infinite_order,
        } => {
            for (k, v) in orders {
                writeln!(out, "order {k}: {v}").unwrap();
            }
            if *infinite_order > 0 {
                writeln!(out, "infinite: {infinite_order}").unwrap();
            }
        }
        Body::Lines { t, lines, meet } => {
            for r in lines {
                writeln!(
                    out,
                    "{}  {}  (t={t}: {})",
                    name(r.label, &r.element),
                    r.line,
                    r.at_t
                )
                .unwrap();
            }
            if let Some(m) = meet {
                writeln!(out, "meet at {m}").unwrap();
            }
        }
        Body::Eigenvectors { elements } => {
            for r in elements {
                let angle = r
                    .oblique_angle
                    .as_ref()
                    .map(|a| format!("  angle {} = {}", a.exact, a.approx))
                    .unwrap_or_default();
                writeln!(
                    out,
                    "{}  -1: {}  +1: {}{angle}",
                    name(r.label, &r.element),
                    opt_point(r.minus),
                    opt_point(r.plus)
                )
                .unwrap();
            }
        }
        Body::Form { forms } => {
            for f in [&forms.row, &forms.column] {
                let rep = f
                    .representative
                    .map(|b| serde_json::to_string(&b).unwrap())
                    .unwrap_or_else(|| "none".into());
                writeln!(
                    out,
                    "{:?}: dimension {}, representative {rep}",
                    f.orientation,
                    f.dimension()
                )
                .unwrap();
            }
        }
    }
    out
}
