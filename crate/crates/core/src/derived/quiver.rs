//! The repetition quiver `ZΔ` and its translation-quiver automorphisms.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::root_coxeter::{DynkinType, Series};

/// A vertex `(m, q)` of `ZΔ`; `q` is 0-based.
pub type Vertex = (i64, usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MapKind {
    TauPower,
    Phi,
    Composite,
}

/// An automorphism `(m, q) ↦ (m + offset[q], perm[q])` of `ZΔ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexMap {
    kind: MapKind,
    perm: Vec<usize>,
    offset: Vec<i64>,
}

impl VertexMap {
    pub fn identity(rank: usize) -> Self {
        Self::tau_pow(rank, 0)
    }

    /// `τ^r`, with `τ(m, q) = (m - 1, q)`.
    pub fn tau_pow(rank: usize, r: i64) -> Self {
        Self { kind: MapKind::TauPower, perm: (0..rank).collect(), offset: vec![-r; rank] }
    }

    pub fn new(kind: MapKind, perm: Vec<usize>, offset: Vec<i64>) -> Self {
        assert_eq!(perm.len(), offset.len());
        Self { kind, perm, offset }
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn offset(&self) -> &[i64] {
        &self.offset
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn apply(&self, (m, q): Vertex) -> Vertex {
        (m + self.offset[q], self.perm[q])
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.rank();
        let perm = (0..n).map(|q| self.perm[other.perm[q]]).collect();
        let offset = (0..n).map(|q| other.offset[q] + self.offset[other.perm[q]]).collect();
        let kind = if self.kind == MapKind::TauPower && other.kind == MapKind::TauPower {
            MapKind::TauPower
        } else {
            MapKind::Composite
        };
        Self { kind, perm, offset }
    }

    pub fn inverse(&self) -> Self {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut offset = vec![0; n];
        for q in 0..n {
            perm[self.perm[q]] = q;
            offset[self.perm[q]] = -self.offset[q];
        }
        Self { kind: self.kind, perm, offset }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.rank());
        for _ in 0..k.unsigned_abs() {
            acc = base.compose(&acc);
        }
        if k == 0 {
            return acc;
        }
        acc.kind = if self.kind == MapKind::TauPower { MapKind::TauPower } else { MapKind::Composite };
        acc
    }

    /// Same action on vertices, ignoring the provenance tag.
    pub fn same_action(&self, other: &Self) -> bool {
        self.perm == other.perm && self.offset == other.offset
    }

    /// Commutes with `τ` (by construction) and maps arrows to arrows.
    pub fn is_automorphism(&self, delta: &DynkinType) -> bool {
        let mut arrows = std::collections::HashSet::new();
        for (x, y) in delta.arrows() {
            arrows.insert(((0i64, x), (0i64, y)));
            arrows.insert(((-1i64, y), (0i64, x)));
        }
        let normalise = |(a, b): (Vertex, Vertex)| ((0, a.1), (b.0 - a.0, b.1));
        let normalised: std::collections::HashSet<_> = arrows.iter().map(|&e| normalise(e)).collect();
        arrows.iter().all(|&(a, b)| normalised.contains(&normalise((self.apply(a), self.apply(b)))))
            && self.perm.iter().collect::<std::collections::HashSet<_>>().len() == self.rank()
    }
}

impl fmt::Debug for VertexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            (0..self.rank()).map(|q| format!("{}->{}{:+}", q + 1, self.perm[q] + 1, self.offset[q])).collect();
        write!(f, "{:?}[{}]", self.kind, parts.join(" "))
    }
}

/// Lifts a graph automorphism `π` of `Δ` to `ZΔ`. Offsets are fixed by
/// the orientation (`c_y = c_x` if `π` keeps the arrow `x → y`,
/// `c_y = c_x + 1` if it reverses it) and the anchor `c[anchor] = value`.
pub fn lift_graph_automorphism(delta: &DynkinType, pi: &[usize], anchor: usize, value: i64) -> Option<VertexMap> {
    let n = delta.rank();
    let arrows = delta.arrows();
    let has = |a: usize, b: usize| arrows.contains(&(a, b));
    let mut c: Vec<Option<i64>> = vec![None; n];
    c[anchor] = Some(value);
    let mut queue = VecDeque::from([anchor]);
    while let Some(v) = queue.pop_front() {
        for &(x, y) in &arrows {
            let (known, other) = if x == v { (x, y) } else if y == v { (y, x) } else { continue };
            let (px, py) = (pi[x], pi[y]);
            let delta_xy = if has(px, py) {
                0
            } else if has(py, px) {
                1
            } else {
                return None;
            };
            // c_y - c_x = delta_xy
            let val = if known == x { c[x]? + delta_xy } else { c[y]? - delta_xy };
            match c[other] {
                Some(existing) if existing != val => return None,
                Some(_) => {}
                None => {
                    c[other] = Some(val);
                    queue.push_back(other);
                }
            }
        }
    }
    let offset: Option<Vec<i64>> = c.into_iter().collect();
    Some(VertexMap::new(MapKind::Phi, pi.to_vec(), offset?))
}

/// The non-trivial automorphism `φ` used in the type `(Δ, r, t)` for `t > 1`,
/// or `None` when the series has none.
///
/// * `A_n`, `n` odd: the reflection `q ↦ n+1-q`, central column fixed.
/// * `A_n`, `n` even: `φ(p, q) = (p + q - n/2 - 1, n+1-q)`, so `φ² = τ`.
/// * `D_n`: exchanges columns `n-1` and `n`.
/// * `E_6`: the reflection fixing columns 3 and 4.
pub fn phi(delta: &DynkinType) -> Option<VertexMap> {
    let n = delta.rank();
    match delta.series() {
        Series::A if n == 1 => None,
        Series::A if n % 2 == 1 => {
            let pi: Vec<usize> = (0..n).map(|q| n - 1 - q).collect();
            lift_graph_automorphism(delta, &pi, n / 2, 0)
        }
        Series::A => {
            let pi: Vec<usize> = (0..n).map(|q| n - 1 - q).collect();
            // 1-based column q has offset q - n/2 - 1
            lift_graph_automorphism(delta, &pi, 0, -(n as i64) / 2)
        }
        Series::D => {
            let mut pi: Vec<usize> = (0..n).collect();
            pi.swap(n - 2, n - 1);
            lift_graph_automorphism(delta, &pi, 0, 0)
        }
        Series::E if n == 6 => lift_graph_automorphism(delta, &[5, 4, 2, 3, 1, 0], 2, 0),
        Series::E => None,
    }
}

/// The order-3 automorphism of `ZD_4` rotating the three outer columns
/// `1 → 3 → 4 → 1`, with the central column fixed.
pub fn phi_triality() -> VertexMap {
    lift_graph_automorphism(&DynkinType::d(4), &[2, 1, 3, 0], 1, 0).expect("triality lifts to ZD_4")
}

/// The suspension written through `τ` and `φ`, with `τ(m, q) = (m - 1, q)`
/// and the suspension moving towards larger `m`:
///
/// * `φτ^{-h/2}` for `A_n` (`n ≥ 3` odd), `D_n` (`n` odd), `E_6`;
/// * `τ^{-h/2}` for `A_1`, `D_n` (`n` even), `E_7`, `E_8`;
/// * `φ⁻¹τ^{-m/2}` for `A_n` (`n` even), which equals `φ^{-h}`.
pub fn suspension_composite(delta: &DynkinType) -> VertexMap {
    let n = delta.rank();
    let h = delta.coxeter_number() as i64;
    let half = VertexMap::tau_pow(n, -h / 2);
    let map = match (delta.series(), n % 2) {
        (Series::A, 0) => phi(delta).expect("A_even has phi").inverse().compose(&VertexMap::tau_pow(n, -(h - 1) / 2)),
        (Series::A, _) if n >= 3 => phi(delta).expect("A_odd has phi").compose(&half),
        (Series::D, 1) => phi(delta).expect("D has phi").compose(&half),
        (Series::E, _) if n == 6 => phi(delta).expect("E_6 has phi").compose(&half),
        _ => half,
    };
    VertexMap::new(MapKind::Composite, map.perm().to_vec(), map.offset().to_vec())
}
