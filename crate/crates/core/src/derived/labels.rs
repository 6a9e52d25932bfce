//! Labelling of `ZΔ` by (positive root, shift).

use std::collections::HashMap;

use serde::Serialize;

use crate::root_coxeter::RootSystem;

use super::quiver::{MapKind, Vertex, VertexMap};

/// The indecomposable at `(m, q)` is `S^shift` of the module with
/// dimension vector `positives[root]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct VertexLabel {
    pub m: i64,
    pub q: usize,
    pub root: usize,
    pub shift: i64,
}

/// One period of the walk in every column, extended by periodicity.
///
/// Column `q` is seeded with the projective `P(q)` at `m = seed[q]`;
/// stepping `m → m+1` applies `cox⁻¹`, and a negative result is negated
/// with the shift incremented.
#[derive(Debug, Clone)]
pub struct LabelWalk {
    h: i64,
    seed: Vec<i64>,
    table: Vec<Vec<(usize, i64)>>,
    period_shift: Vec<i64>,
    positions: HashMap<usize, Vec<(usize, i64, i64)>>,
}

fn is_negative(v: &[i64]) -> bool {
    v.iter().all(|&x| x <= 0)
}

impl LabelWalk {
    pub fn new(rs: &RootSystem) -> Self {
        let delta = rs.delta();
        let n = rs.rank();
        let h = rs.coxeter_number() as i64;

        // a_x = a_y + 1 along x → y
        let arrows = delta.arrows();
        let mut seed: Vec<Option<i64>> = vec![None; n];
        seed[0] = Some(0);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &(x, y) in &arrows {
                let (other, val) = match (x == v, y == v) {
                    (true, _) => (y, seed[x].unwrap() - 1),
                    (_, true) => (x, seed[y].unwrap() + 1),
                    _ => continue,
                };
                if seed[other].is_none() {
                    seed[other] = Some(val);
                    stack.push(other);
                }
            }
        }
        let min = seed.iter().flatten().min().copied().unwrap_or(0);
        let seed: Vec<i64> = seed.into_iter().map(|a| a.expect("Dynkin diagrams are connected") - min).collect();

        let inv = rs.coxeter_inverse();
        let mut table = Vec::with_capacity(n);
        let mut period_shift = Vec::with_capacity(n);
        for q in 0..n {
            let mut v = rs.projective(q);
            let mut shift = 0i64;
            let mut col = Vec::with_capacity(h as usize);
            for _ in 0..h {
                col.push((rs.root_index(&v).expect("walk stays on positive roots"), shift));
                v = inv.apply(&v);
                if is_negative(&v) {
                    v.iter_mut().for_each(|x| *x = -*x);
                    shift += 1;
                }
            }
            assert_eq!(v, rs.projective(q), "cox has order h");
            table.push(col);
            period_shift.push(shift);
        }

        let mut positions: HashMap<usize, Vec<(usize, i64, i64)>> = HashMap::new();
        for (q, col) in table.iter().enumerate() {
            for (j, &(root, shift)) in col.iter().enumerate() {
                positions.entry(root).or_default().push((q, j as i64, shift));
            }
        }
        Self { h, seed, table, period_shift, positions }
    }

    pub fn rank(&self) -> usize {
        self.seed.len()
    }

    pub fn coxeter_number(&self) -> usize {
        self.h as usize
    }

    /// Column position of the projective slice.
    pub fn seed(&self) -> &[i64] {
        &self.seed
    }

    /// Shift gained by walking `h` steps along a column.
    pub fn period_shift(&self, q: usize) -> i64 {
        self.period_shift[q]
    }

    pub fn label(&self, (m, q): Vertex) -> VertexLabel {
        let k = m - self.seed[q];
        let (d, j) = (k.div_euclid(self.h), k.rem_euclid(self.h));
        let (root, shift) = self.table[q][j as usize];
        VertexLabel { m, q, root, shift: shift + d * self.period_shift[q] }
    }

    pub fn root(&self, v: Vertex) -> usize {
        let (m, q) = v;
        let k = m - self.seed[q];
        self.table[q][k.rem_euclid(self.h) as usize].0
    }

    /// The unique vertex carrying `(root, shift)`.
    pub fn position(&self, root: usize, shift: i64) -> Option<Vertex> {
        for &(q, j, s) in self.positions.get(&root)? {
            let per = self.period_shift[q];
            if (shift - s).rem_euclid(per) == 0 {
                let d = (shift - s) / per;
                return Some((self.seed[q] + j + d * self.h, q));
            }
        }
        None
    }

    /// The vertices `(m, q)` with `m0 ≤ m < m1`, column-major in `m`.
    pub fn window(&self, m0: i64, m1: i64) -> impl Iterator<Item = Vertex> + '_ {
        (m0..m1).flat_map(move |m| (0..self.rank()).map(move |q| (m, q)))
    }

    /// The suspension as a vertex map: same root, shift plus one.
    pub fn suspension(&self) -> VertexMap {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut offset = vec![0; n];
        for q in 0..n {
            let l = self.label((self.seed[q], q));
            let (m, q2) = self.position(l.root, l.shift + 1).expect("every layer holds every root");
            perm[q] = q2;
            offset[q] = m - self.seed[q];
        }
        VertexMap::new(MapKind::Composite, perm, offset)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derived::quiver::suspension_composite;
    use crate::root_coxeter::DynkinType;
    use std::collections::HashSet;

    fn small_types() -> Vec<DynkinType> {
        let mut v: Vec<DynkinType> = (1..=6).map(DynkinType::a).collect();
        v.extend((4..=6).map(DynkinType::d));
        v.push(DynkinType::e(6));
        v
    }

    fn class(rs: &RootSystem, l: VertexLabel) -> Vec<i64> {
        let sign = if l.shift % 2 == 0 { 1 } else { -1 };
        rs.positives()[l.root].iter().map(|x| sign * x).collect()
    }

    #[test]
    fn a2_first_step() {
        let rs = RootSystem::new(DynkinType::a(2));
        let walk = LabelWalk::new(&rs);
        let start = walk.label((walk.seed()[0], 0));
        assert_eq!(rs.positives()[start.root], rs.projective(0));
        let next = walk.label((walk.seed()[0] + 1, 0));
        let expected = rs.coxeter_inverse().apply(&rs.projective(0));
        assert_eq!(class(&rs, next), expected);
    }

    #[test]
    fn period_shift_is_two() {
        for d in small_types() {
            let walk = LabelWalk::new(&RootSystem::new(d));
            for q in 0..d.rank() {
                assert_eq!(walk.period_shift(q), 2, "{d} column {q}");
            }
        }
    }

    #[test]
    fn layers_biject_with_positive_roots() {
        for d in small_types() {
            let rs = RootSystem::new(d);
            let walk = LabelWalk::new(&rs);
            let h = d.coxeter_number() as i64;
            for k in -2..3 {
                let layer: Vec<usize> =
                    walk.window(-3 * h, 3 * h).map(|v| walk.label(v)).filter(|l| l.shift == k).map(|l| l.root).collect();
                assert_eq!(layer.len(), rs.positives().len(), "{d} shift {k}");
                assert_eq!(layer.iter().collect::<HashSet<_>>().len(), layer.len());
            }
        }
    }

    #[test]
    fn mesh_relations_hold() {
        // class(τv) + class(v) = sum over the middle of the mesh
        for d in small_types() {
            let rs = RootSystem::new(d);
            let walk = LabelWalk::new(&rs);
            let arrows = d.arrows();
            let h = d.coxeter_number() as i64;
            for (m, q) in walk.window(-h, h) {
                let mut lhs = class(&rs, walk.label((m - 1, q)));
                for (x, c) in lhs.iter_mut().zip(class(&rs, walk.label((m, q)))) {
                    *x += c;
                }
                let mut rhs = vec![0i64; d.rank()];
                for &(x, y) in &arrows {
                    let mid = if y == q {
                        Some((m, x))
                    } else if x == q {
                        Some((m - 1, y))
                    } else {
                        None
                    };
                    if let Some(v) = mid {
                        for (r, c) in rhs.iter_mut().zip(class(&rs, walk.label(v))) {
                            *r += c;
                        }
                    }
                }
                assert_eq!(lhs, rhs, "{d} at {:?}", (m, q));
            }
        }
    }

    #[test]
    fn position_inverts_label() {
        for d in small_types() {
            let walk = LabelWalk::new(&RootSystem::new(d));
            let h = d.coxeter_number() as i64;
            for v in walk.window(-h, 2 * h) {
                let l = walk.label(v);
                assert_eq!(walk.position(l.root, l.shift), Some(v));
            }
        }
    }

    #[test]
    fn suspension_matches_composite() {
        let mut types = small_types();
        types.extend([DynkinType::e(7), DynkinType::e(8)]);
        for d in types {
            let walk = LabelWalk::new(&RootSystem::new(d));
            let s = walk.suspension();
            assert!(s.same_action(&suspension_composite(&d)), "{d}: {s:?}");
            let h = d.coxeter_number() as i64;
            assert!(s.pow(2).same_action(&VertexMap::tau_pow(d.rank(), -h)), "{d}");
        }
    }

    #[test]
    fn suspension_raises_shift() {
        for d in small_types() {
            let walk = LabelWalk::new(&RootSystem::new(d));
            let s = walk.suspension();
            let h = d.coxeter_number() as i64;
            assert!(s.is_automorphism(&d));
            for v in walk.window(-h, h) {
                let (a, b) = (walk.label(v), walk.label(s.apply(v)));
                assert_eq!((a.root, a.shift + 1), (b.root, b.shift));
            }
        }
    }
}
