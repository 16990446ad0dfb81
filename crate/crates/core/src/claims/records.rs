use std::collections::BTreeMap;

use serde::Serialize;

use super::VerifyOptions;
use crate::chamber::{
    classify_quarter_plane, gz_precondition_report, quarter_plane_chamber, reflection_arrangement,
    sectors, GzReport, QuarterPlaneReport, ReflectionLine,
};
use crate::enumerate::{CountTable, Region};
use crate::isometry::{
    axis_reflection_group, counts_invariance_check_on, dihedral_presentation_check, fixed_set,
    free_slices, generate_group, invariant_bilinear_form, published_group, reflection_direction,
    search_affine_isometries, search_linear_isometries, step_set_permutation, unit_eigenvector,
    AffineIsometry, ElementOrder, GroupCaps, GroupSource, InvarianceCheck, InvariantForms,
    IsometryGroup, SearchBounds,
};
use crate::lattice::{ModelTag, StepSet};
use crate::orbitsum::{compare_orbit_vs_oracle, EqualityReport, PointRange};

/// Slice at which the affine search is run.
const AFFINE_SEARCH_SLICE: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<&'static str>,
    pub element: String,
    pub sign: i64,
    pub order: Option<u32>,
    pub fixed: String,
    pub reflection_direction: Option<crate::lattice::Point>,
    pub eigenvector_minus: Option<crate::lattice::Point>,
    pub eigenvector_plus: Option<crate::lattice::Point>,
    pub step_permutation: Option<String>,
    pub count_invariance: InvarianceCheck,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresentationRecord {
    pub r1: String,
    pub r2: String,
    pub n: u32,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupRecord {
    pub source: GroupSource,
    pub order: usize,
    pub finite: bool,
    pub elements: Vec<ElementRecord>,
    pub orders: BTreeMap<u32, usize>,
    pub presentation: Option<PresentationRecord>,
    pub invariant_forms: InvariantForms,
    pub reflection_lines: Vec<ReflectionLine>,
    pub sector_count: Option<usize>,
    pub quarter_plane: Option<QuarterPlaneReport>,
    /// The chamber used for the preconditions: the first sector meeting the
    /// quadrant, counterclockwise from the positive x-axis when the lines are central.
    pub chamber: Option<String>,
    pub preconditions: Option<GzReport>,
    pub orbit_sum: Option<EqualityReport>,
    pub chamber_orbit_sum: Option<EqualityReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelRecord {
    pub model: ModelTag,
    pub steps: String,
    pub generating_function: String,
    pub barycenter: String,
    pub groups: Vec<GroupRecord>,
}

impl ModelRecord {
    pub fn group(&self, source: GroupSource) -> Option<&GroupRecord> {
        self.groups.iter().find(|g| g.source == source)
    }
}

fn element_record(
    g: &AffineIsometry,
    label: Option<&'static str>,
    steps: &StepSet,
    slices: &[CountTable],
    t: u32,
) -> ElementRecord {
    let fixed = match g.fixed_line() {
        Some(l) => l.to_string(),
        None if g.is_linear() => fixed_set(g, 0).to_string(),
        None => format!("{} at t={t}", fixed_set(g, t)),
    };
    ElementRecord {
        label,
        element: g.to_string(),
        sign: g.sign(),
        order: match g.order(64) {
            ElementOrder::Finite(n) => Some(n),
            ElementOrder::Infinite { .. } => None,
        },
        fixed,
        reflection_direction: reflection_direction(g).ok(),
        eigenvector_minus: unit_eigenvector(g, -1),
        eigenvector_plus: unit_eigenvector(g, 1),
        step_permutation: step_set_permutation(g, steps).map(|p| p.to_string()),
        count_invariance: counts_invariance_check_on(g, slices),
    }
}

fn presentation(
    group: &IsometryGroup,
    name: &dyn Fn(&AffineIsometry) -> String,
) -> Option<PresentationRecord> {
    let n = (group.order() / 2) as u32;
    let refl: Vec<&AffineIsometry> = group.reflections().collect();
    for (i, r1) in refl.iter().enumerate() {
        for r2 in &refl[i + 1..] {
            if r1.then(r2).order(n.max(2)) == ElementOrder::Finite(n)
                && generate_group(&[**r1, **r2], GroupCaps::default()).order() == group.order()
            {
                return Some(PresentationRecord {
                    r1: name(r1),
                    r2: name(r2),
                    n,
                    holds: dihedral_presentation_check(r1, r2, n),
                });
            }
        }
    }
    None
}

fn group_record(
    source: GroupSource,
    group: &IsometryGroup,
    labels: &[(&'static str, AffineIsometry)],
    steps: &StepSet,
    slices: &[CountTable],
    opts: &VerifyOptions,
) -> GroupRecord {
    let t = opts.t_max;
    let label_of = |g: &AffineIsometry| {
        labels
            .iter()
            .find(|(_, e)| e == g || e.instantiate(t) == *g)
            .map(|(l, _)| *l)
    };
    let name = |g: &AffineIsometry| {
        label_of(g)
            .map(str::to_string)
            .unwrap_or_else(|| g.to_string())
    };
    let at_slice = if group.is_linear() {
        group.clone()
    } else {
        group.instantiate(t)
    };
    let elements: Vec<ElementRecord> = group
        .elements()
        .iter()
        .map(|g| element_record(g, label_of(g), steps, slices, t))
        .collect();
    let mut orders = BTreeMap::new();
    for e in &elements {
        if let Some(n) = e.order {
            *orders.entry(n).or_insert(0) += 1;
        }
    }
    let arrangement = reflection_arrangement(group, t);
    let dec = sectors(&arrangement).ok();
    let quarter_plane = dec.as_ref().map(classify_quarter_plane);
    let chamber = dec
        .as_ref()
        .and_then(|d| quarter_plane_chamber(d).map(|c| (d, c)));
    let preconditions =
        chamber.map(|(d, c)| gz_precondition_report(group, steps, None, &d.walls(c)));
    let orbit_sum = compare_orbit_vs_oracle(
        group,
        source,
        steps,
        &Region::OpenQuadrant,
        opts.orbit_range,
        opts.orbit_range,
        t,
    )
    .ok()
    .map(EqualityReport::without_timing);
    let wide = PointRange::new((0, opts.orbit_range.x.1 + 2), (0, opts.orbit_range.y.1 + 2));
    let chamber_orbit_sum = match (&chamber, &preconditions) {
        (Some((d, c)), Some(gz)) if gz.all_conditions && group.is_linear() => {
            compare_orbit_vs_oracle(group, source, steps, &d.region(*c), wide, wide, t)
                .ok()
                .map(EqualityReport::without_timing)
        }
        _ => None,
    };
    GroupRecord {
        source,
        order: group.order(),
        finite: at_slice.is_finite(),
        elements,
        orders,
        presentation: presentation(&at_slice, &name),
        invariant_forms: invariant_bilinear_form(group),
        reflection_lines: arrangement.lines.clone(),
        sector_count: dec.as_ref().map(|d| d.len()),
        chamber: chamber.map(|(d, c)| d.region(c).describe()),
        quarter_plane,
        preconditions,
        orbit_sum,
        chamber_orbit_sum,
    }
}

pub(super) fn model_records(opts: &VerifyOptions) -> Vec<ModelRecord> {
    ModelTag::NAMED
        .into_iter()
        .map(|m| {
            let steps = StepSet::named(m);
            let slices = free_slices(&steps, opts.t_max);
            let mut groups = Vec::new();
            if let Ok(p) = published_group(m) {
                let labels: Vec<(&'static str, AffineIsometry)> =
                    p.elements.iter().map(|e| (e.label, e.element)).collect();
                groups.push(group_record(
                    GroupSource::Published,
                    &p.group(),
                    &labels,
                    &steps,
                    &slices,
                    opts,
                ));
            }
            let searched = if m == ModelTag::MishnaRechnitzer {
                search_affine_isometries(&steps, AFFINE_SEARCH_SLICE, SearchBounds::default())
            } else {
                search_linear_isometries(&steps, SearchBounds::default().matrix_entry)
            };
            groups.push(group_record(
                GroupSource::Search,
                &searched,
                &[],
                &steps,
                &slices,
                opts,
            ));
            if m == ModelTag::Simple {
                groups.push(group_record(
                    GroupSource::Custom,
                    &axis_reflection_group(),
                    &[],
                    &steps,
                    &slices,
                    opts,
                ));
            }
            ModelRecord {
                model: m,
                steps: steps.to_string(),
                generating_function: steps.generating_function().to_string(),
                barycenter: steps
                    .barycenter()
                    .map(|b| format!("({}, {})", b.x, b.y))
                    .unwrap_or_default(),
                groups,
            }
        })
        .collect()
}
