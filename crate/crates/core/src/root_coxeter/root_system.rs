use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

use super::dynkin::DynkinType;
use super::group::GroupElement;

/// Positive roots and Weyl group data for a Dynkin quiver with its fixed
/// orientation.
#[derive(Debug, Clone)]
pub struct RootSystem {
    delta: DynkinType,
    euler: IntMatrix,
    sym: IntMatrix,
    sym_adj: IntMatrix,
    sym_det: i64,
    positives: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
    simple_reflections: Vec<GroupElement>,
    reflections: Vec<GroupElement>,
    cox: GroupElement,
    cox_inv: GroupElement,
}

impl RootSystem {
    pub fn new(delta: DynkinType) -> Self {
        let n = delta.rank();
        let mut euler = IntMatrix::identity(n);
        for (a, b) in delta.arrows() {
            euler[(a, b)] -= 1;
        }
        let sym = {
            let t = euler.transpose();
            let mut s = euler.clone();
            for i in 0..n {
                for j in 0..n {
                    s[(i, j)] += t[(i, j)];
                }
            }
            s
        };
        let sym_det = sym.det();
        let sym_adj = sym.adjugate();

        let simple_reflections: Vec<GroupElement> =
            (0..n).map(|i| reflection_matrix(&sym, &unit(n, i))).collect();
        let positives = close_positive_roots(n, &simple_reflections);
        let root_index = positives.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let reflections = positives.iter().map(|v| reflection_matrix(&sym, v)).collect();

        let order = delta.source_order();
        let cox = order
            .iter()
            .fold(GroupElement::identity(n), |acc, &i| acc.compose(&simple_reflections[i]));
        let cox_inv = order
            .iter()
            .rev()
            .fold(GroupElement::identity(n), |acc, &i| acc.compose(&simple_reflections[i]));

        Self {
            delta,
            euler,
            sym,
            sym_adj,
            sym_det,
            positives,
            root_index,
            simple_reflections,
            reflections,
            cox,
            cox_inv,
        }
    }

    pub fn delta(&self) -> DynkinType {
        self.delta
    }

    pub fn rank(&self) -> usize {
        self.delta.rank()
    }

    pub fn coxeter_number(&self) -> usize {
        self.delta.coxeter_number()
    }

    /// Euler form `<x, y> = x^T E y` of the oriented quiver.
    pub fn euler_form(&self) -> &IntMatrix {
        &self.euler
    }

    /// Symmetrised form `(x, y) = <x, y> + <y, x>` (the Cartan matrix).
    pub fn sym_form(&self) -> &IntMatrix {
        &self.sym
    }

    pub fn pairing(&self, v: &[i64], w: &[i64]) -> i64 {
        let bw = self.sym.mul_vec(w);
        v.iter().zip(&bw).map(|(a, b)| a * b).sum()
    }

    pub fn euler_pairing(&self, v: &[i64], w: &[i64]) -> i64 {
        let ew = self.euler.mul_vec(w);
        v.iter().zip(&ew).map(|(a, b)| a * b).sum()
    }

    pub fn simples(&self) -> Vec<Vec<i64>> {
        (0..self.rank()).map(|i| unit(self.rank(), i)).collect()
    }

    /// Positive roots in lexicographic order of their coordinate vectors.
    pub fn positives(&self) -> &[Vec<i64>] {
        &self.positives
    }

    pub fn root_index(&self, v: &[i64]) -> Option<usize> {
        self.root_index.get(v).copied()
    }

    /// Index of `v` or `-v` among the positive roots.
    pub fn root_index_up_to_sign(&self, v: &[i64]) -> Option<usize> {
        self.root_index(v).or_else(|| {
            let neg: Vec<i64> = v.iter().map(|x| -x).collect();
            self.root_index(&neg)
        })
    }

    pub fn simple_reflection(&self, i: usize) -> &GroupElement {
        &self.simple_reflections[i]
    }

    /// Reflections indexed like [`positives`](Self::positives).
    pub fn reflections(&self) -> &[GroupElement] {
        &self.reflections
    }

    /// The reflection `s_v(w) = w - (v, w) v`.
    pub fn reflection(&self, v: &[i64]) -> Result<GroupElement> {
        self.root_index(v)
            .map(|i| self.reflections[i].clone())
            .ok_or_else(|| Error::NotARoot(v.to_vec()))
    }

    /// Product of the simple reflections in a source-first order of the
    /// orientation, so that `cox(dim P(i)) = -dim I(i)`.
    pub fn coxeter_element(&self) -> &GroupElement {
        &self.cox
    }

    pub fn coxeter_inverse(&self) -> &GroupElement {
        &self.cox_inv
    }

    /// Inverse of a form-preserving element: `w^{-1} = B^{-1} w^T B`.
    pub fn inverse(&self, w: &GroupElement) -> GroupElement {
        let t = w.matrix().transpose();
        let num = &(&self.sym_adj * &t) * &self.sym;
        GroupElement::from_matrix(num.div_exact(self.sym_det).expect("element preserves the form"))
    }

    pub fn conjugate_by_cox(&self, w: &GroupElement, power: i64) -> GroupElement {
        let (c, ci) = if power >= 0 { (&self.cox, &self.cox_inv) } else { (&self.cox_inv, &self.cox) };
        let k = power.unsigned_abs() as usize;
        c.pow(k).compose(w).compose(&ci.pow(k))
    }

    /// Whether `w` preserves the form and permutes the roots.
    pub fn is_group_element(&self, w: &GroupElement) -> bool {
        if w.rank() != self.rank() {
            return false;
        }
        let m = w.matrix();
        if &(&m.transpose() * &self.sym) * m != self.sym {
            return false;
        }
        self.positives.iter().all(|v| self.root_index_up_to_sign(&w.apply(v)).is_some())
    }

    /// Dimension vector of the indecomposable projective at vertex `i`:
    /// the vertices reachable from `i` along arrows.
    pub fn projective(&self, i: usize) -> Vec<i64> {
        self.reach(i, false)
    }

    /// Dimension vector of the indecomposable injective at vertex `i`.
    pub fn injective(&self, i: usize) -> Vec<i64> {
        self.reach(i, true)
    }

    fn reach(&self, start: usize, backwards: bool) -> Vec<i64> {
        let arrows = self.delta.arrows();
        let mut seen = vec![0i64; self.rank()];
        let mut stack = vec![start];
        seen[start] = 1;
        while let Some(v) = stack.pop() {
            for &(a, b) in &arrows {
                let (from, to) = if backwards { (b, a) } else { (a, b) };
                if from == v && seen[to] == 0 {
                    seen[to] = 1;
                    stack.push(to);
                }
            }
        }
        seen
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn reflection_matrix(sym: &IntMatrix, v: &[i64]) -> GroupElement {
    let n = v.len();
    let bv = sym.mul_vec(v);
    let columns: Vec<Vec<i64>> = (0..n)
        .map(|j| {
            let mut col = unit(n, j);
            for (c, vi) in col.iter_mut().zip(v) {
                *c -= bv[j] * vi;
            }
            col
        })
        .collect();
    GroupElement::from_matrix(IntMatrix::from_columns(&columns))
}

/// Orbit closure of the simple roots under the simple reflections, keeping
/// the nonnegative vectors.
fn close_positive_roots(n: usize, simple: &[GroupElement]) -> Vec<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut frontier: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
    seen.extend(frontier.iter().cloned());
    while let Some(v) = frontier.pop() {
        for s in simple {
            let w = s.apply(&v);
            if w.iter().all(|&x| x >= 0) && seen.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}
