use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use super::{AffineIsometry, ElementOrder};

/// Limits for closure runs; exceeding either marks the group infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupCaps {
    pub max_elements: usize,
    pub max_translation: i64,
}

impl GroupCaps {
    /// 10,000 elements, translation norm at most `100·t` (`t ≥ 1`).
    pub fn for_slice(t: u32) -> Self {
        GroupCaps {
            max_elements: 10_000,
            max_translation: 100 * t.max(1) as i64,
        }
    }
}

impl Default for GroupCaps {
    fn default() -> Self {
        GroupCaps::for_slice(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TruncationReason {
    ElementCap,
    TranslationCap,
}

/// Why and where a closure run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Truncation {
    pub reason: TruncationReason,
    pub witness: AffineIsometry,
    pub elements_seen: usize,
}

/// A finite list of isometries with the identity first.
///
/// `finite` means the list is a complete, closed group (or a set the caller
/// designated as the finite slice of an infinite group and that is closed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometryGroup {
    elements: Vec<AffineIsometry>,
    generators: Vec<AffineIsometry>,
    truncation: Option<Truncation>,
    closed: bool,
}

impl IsometryGroup {
    /// Wraps a given element set. The identity is moved to the front and
    /// duplicates dropped; closure under composition is checked, not assumed.
    pub fn from_elements(elements: impl IntoIterator<Item = AffineIsometry>) -> Self {
        let mut seen = HashSet::new();
        let mut list = vec![AffineIsometry::IDENTITY];
        seen.insert(AffineIsometry::IDENTITY);
        for e in elements {
            if seen.insert(e) {
                list.push(e);
            }
        }
        let closed = list
            .iter()
            .all(|g| list.iter().all(|h| seen.contains(&g.then(h))));
        IsometryGroup {
            generators: list[1..].to_vec(),
            elements: list,
            truncation: None,
            closed,
        }
    }

    pub fn trivial() -> Self {
        IsometryGroup::from_elements([])
    }

    pub fn elements(&self) -> &[AffineIsometry] {
        &self.elements
    }

    pub fn generators(&self) -> &[AffineIsometry] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_finite(&self) -> bool {
        self.truncation.is_none() && self.closed
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn truncation(&self) -> Option<&Truncation> {
        self.truncation.as_ref()
    }

    pub fn contains(&self, g: &AffineIsometry) -> bool {
        self.elements.contains(g)
    }

    pub fn is_linear(&self) -> bool {
        self.elements.iter().all(AffineIsometry::is_linear)
    }

    /// Reflections (involutions of determinant −1), in element order.
    pub fn reflections(&self) -> impl Iterator<Item = &AffineIsometry> {
        self.elements.iter().filter(|g| g.is_reflection())
    }

    /// Every element instantiated at slice `t`.
    pub fn instantiate(&self, t: u32) -> IsometryGroup {
        IsometryGroup::from_elements(self.elements.iter().map(|g| g.instantiate(t)))
    }
}

/// Breadth-first closure of `generators` under composition.
pub fn generate_group(generators: &[AffineIsometry], caps: GroupCaps) -> IsometryGroup {
    let mut elements = vec![AffineIsometry::IDENTITY];
    let mut seen: HashSet<AffineIsometry> = elements.iter().copied().collect();
    let mut queue: VecDeque<AffineIsometry> = elements.iter().copied().collect();
    let mut truncation = None;
    'bfs: while let Some(e) = queue.pop_front() {
        for g in generators {
            let next = e.then(g);
            if seen.contains(&next) {
                continue;
            }
            let reason = if next.translation_norm() > caps.max_translation {
                Some(TruncationReason::TranslationCap)
            } else if elements.len() >= caps.max_elements {
                Some(TruncationReason::ElementCap)
            } else {
                None
            };
            if let Some(reason) = reason {
                truncation = Some(Truncation {
                    reason,
                    witness: next,
                    elements_seen: elements.len(),
                });
                break 'bfs;
            }
            seen.insert(next);
            elements.push(next);
            queue.push_back(next);
        }
    }
    IsometryGroup {
        elements,
        generators: generators.to_vec(),
        closed: truncation.is_none(),
        truncation,
    }
}

/// `r1² = e`, `r2² = e`, and `r1·r2` has order exactly `n`.
pub fn dihedral_presentation_check(r1: &AffineIsometry, r2: &AffineIsometry, n: u32) -> bool {
    if n < 2 {
        return false;
    }
    r1.then(r1).is_identity()
        && r2.then(r2).is_identity()
        && r1.then(r2).order(n) == ElementOrder::Finite(n)
}

/// Which multiplication order turns the pair `(a, b)` into `expected`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductOrder {
    /// `a` first, then `b` (`M_a·M_b`).
    AThenB,
    /// `b` first, then `a` (`M_b·M_a`).
    BThenA,
    Both,
    Neither,
}

pub fn product_order(
    a: &AffineIsometry,
    b: &AffineIsometry,
    expected: &AffineIsometry,
) -> ProductOrder {
    match (a.then(b) == *expected, b.then(a) == *expected) {
        (true, true) => ProductOrder::Both,
        (true, false) => ProductOrder::AThenB,
        (false, true) => ProductOrder::BThenA,
        (false, false) => ProductOrder::Neither,
    }
}
