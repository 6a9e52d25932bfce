//! Absolute order and the noncrossing interval `[id, cox]`.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

use super::group::GroupElement;
use super::root_system::RootSystem;

impl RootSystem {
    pub fn absolute_length(&self, w: &GroupElement) -> usize {
        w.absolute_length()
    }

    /// `u ≤ w` in absolute order, decided by `l(u) + l(u^{-1} w) = l(w)`.
    pub fn leq_absolute(&self, u: &GroupElement, w: &GroupElement) -> bool {
        let quotient = self.inverse(u).compose(w);
        u.absolute_length() + quotient.absolute_length() == w.absolute_length()
    }

    /// Membership in `[id, cox]`.
    pub fn in_nc(&self, w: &GroupElement) -> bool {
        self.leq_absolute(w, self.coxeter_element())
    }

    /// Breadth-first enumeration of `[id, cox]`, layered by absolute length.
    pub fn enumerate_nc(&self) -> NcInterval {
        let n = self.rank();
        let cox = self.coxeter_element();
        let id = GroupElement::identity(n);
        // track w^{-1} cox alongside w so each step costs two rank computations
        let mut layer: Vec<(GroupElement, GroupElement)> = vec![(id, cox.clone())];
        let mut elements = vec![layer[0].0.clone()];
        for depth in 0..n {
            let mut seen: HashSet<GroupElement> = HashSet::new();
            let mut next = Vec::new();
            for (w, rest) in &layer {
                for t in self.reflections() {
                    let wt = w.compose(t);
                    if seen.contains(&wt) {
                        continue;
                    }
                    let rest_t = t.compose(rest);
                    if wt.absolute_length() == depth + 1 && rest_t.absolute_length() == n - depth - 1 {
                        seen.insert(wt.clone());
                        next.push((wt, rest_t));
                    }
                }
            }
            next.sort_by(|a, b| a.0.cmp(&b.0));
            elements.extend(next.iter().map(|(w, _)| w.clone()));
            layer = next;
        }
        NcInterval::new(elements)
    }

    /// Positive roots `β` whose reflection lies below `w`.
    pub fn roots_below(&self, w: &GroupElement) -> Result<Vec<usize>> {
        if !self.in_nc(w) {
            return Err(Error::NotInInterval);
        }
        Ok(self.roots_below_unchecked(w))
    }

    pub(crate) fn roots_below_unchecked(&self, w: &GroupElement) -> Vec<usize> {
        let lw = w.absolute_length();
        if lw == 0 {
            return Vec::new();
        }
        self.reflections()
            .iter()
            .enumerate()
            .filter(|(_, t)| t.compose(w).absolute_length() + 1 == lw)
            .map(|(i, _)| i)
            .collect()
    }
}

/// The elements of `[id, cox]`, ordered by absolute length and then by matrix.
#[derive(Debug, Clone)]
pub struct NcInterval {
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
}

impl NcInterval {
    fn new(elements: Vec<GroupElement>) -> Self {
        let index = elements.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Self { elements, index }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = &GroupElement> {
        self.elements.iter()
    }

    pub fn contains(&self, w: &GroupElement) -> bool {
        self.index.contains_key(w)
    }

    pub fn position(&self, w: &GroupElement) -> Option<usize> {
        self.index.get(w).copied()
    }
}
