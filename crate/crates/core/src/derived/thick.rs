//! Thick subcategories of the derived category as marked vertex sets.

use serde::Serialize;

use crate::classifier::CategoryType;
use crate::error::Result;
use crate::root_coxeter::{GroupElement, GroupElementJson, RootSystem};

use super::labels::LabelWalk;
use super::quiver::{Vertex, VertexMap};

/// A thick subcategory: the interval element `w`, the positive roots
/// below it, and the vertices of `ZΔ` whose root lies in that set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThickDescriptor {
    nc: GroupElement,
    roots: Vec<usize>,
    marked: Vec<bool>,
}

impl ThickDescriptor {
    pub(crate) fn from_parts(rs: &RootSystem, nc: GroupElement, roots: Vec<usize>) -> Self {
        let mut marked = vec![false; rs.positives().len()];
        for &i in &roots {
            marked[i] = true;
        }
        Self { nc, roots, marked }
    }

    pub fn nc_element(&self) -> &GroupElement {
        &self.nc
    }

    /// Indices into `RootSystem::positives`, ascending.
    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.marked.iter().all(|&b| b)
    }

    pub fn contains_root(&self, root: usize) -> bool {
        self.marked[root]
    }

    pub fn is_marked(&self, walk: &LabelWalk, v: Vertex) -> bool {
        self.marked[walk.root(v)]
    }

    pub fn marked_vertices(&self, walk: &LabelWalk, m0: i64, m1: i64) -> Vec<Vertex> {
        walk.window(m0, m1).filter(|&v| self.is_marked(walk, v)).collect()
    }

    /// Vertices over the fundamental window `0 ≤ m < 2h`.
    pub fn to_json(&self, rs: &RootSystem, walk: &LabelWalk, ct: Option<CategoryType>) -> ThickDescriptorJson {
        let h = walk.coxeter_number() as i64;
        ThickDescriptorJson {
            category: ct,
            nc: rs.element_to_json(&self.nc),
            roots: self.roots.iter().map(|&i| rs.positives()[i].clone()).collect(),
            marked_vertices: self.marked_vertices(walk, 0, 2 * h).into_iter().map(|(m, q)| (m, q + 1)).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ThickDescriptorJson {
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub category: Option<CategoryType>,
    pub nc: GroupElementJson,
    pub roots: Vec<Vec<i64>>,
    /// `(m, q)` with 1-based `q`.
    pub marked_vertices: Vec<(i64, usize)>,
}

/// The descriptor of `w ∈ [id, cox]`.
pub fn thick_from_nc(rs: &RootSystem, w: &GroupElement) -> Result<ThickDescriptor> {
    let roots = rs.roots_below(w)?;
    Ok(ThickDescriptor::from_parts(rs, w.clone(), roots))
}

/// Whether `g` maps the marked vertex set onto itself. Marked sets are
/// `τ^h`-periodic and `g` commutes with `τ`, so a window of width `2h`
/// decides it.
pub fn is_invariant_vertex_set(walk: &LabelWalk, desc: &ThickDescriptor, g: &VertexMap) -> bool {
    let h = walk.coxeter_number() as i64;
    walk.window(0, 2 * h).all(|v| desc.is_marked(walk, v) == desc.is_marked(walk, g.apply(v)))
}

/// Root set of the image `g(X)` when it is again determined by roots alone.
pub fn image_roots(walk: &LabelWalk, desc: &ThickDescriptor, g: &VertexMap) -> Option<Vec<usize>> {
    let h = walk.coxeter_number() as i64;
    let inv = g.inverse();
    let mut in_image = vec![None; desc.marked.len()];
    for v in walk.window(0, 2 * h) {
        let here = desc.is_marked(walk, inv.apply(v));
        let slot = &mut in_image[walk.root(v)];
        match *slot {
            Some(prev) if prev != here => return None,
            _ => *slot = Some(here),
        }
    }
    Some(in_image.iter().enumerate().filter(|(_, b)| **b == Some(true)).map(|(i, _)| i).collect())
}
