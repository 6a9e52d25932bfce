//! Permutation models of the Weyl groups of types A and D.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

use super::dynkin::Series;
use super::group::{GroupElement, GroupElementJson};
use super::root_system::RootSystem;

/// A permutation of `1..=n`, stored as the image of each point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n).collect() }
    }

    /// Builds a permutation from the images of `1..=n`; `None` if not bijective.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Self { images })
    }

    /// Product of cycles, each applied as written (rightmost first).
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Self {
        let mut p = Self::identity(n);
        for cyc in cycles.iter().rev() {
            let mut c = Self::identity(n);
            for (k, &x) in cyc.iter().enumerate() {
                c.images[x - 1] = cyc[(k + 1) % cyc.len()];
            }
            p = c.compose(&p);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self { images: other.images.iter().map(|&x| self.images[x - 1]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Self { images: inv }
    }

    /// Disjoint cycles (fixed points included), each starting at its minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n() + 1];
        let mut out = Vec::new();
        for start in 1..=self.n() {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let moved: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if moved.is_empty() {
            return write!(f, "()");
        }
        for c in moved {
            let s: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", s.join(","))?;
        }
        Ok(())
    }
}

/// A signed permutation of `±1..=±n` commuting with negation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n as i32).collect() }
    }

    /// Builds from the images of `1..=n`; `None` unless `|images|` is a permutation.
    pub fn from_images(images: Vec<i32>) -> Option<Self> {
        let abs: Vec<usize> = images.iter().map(|x| x.unsigned_abs() as usize).collect();
        Permutation::from_images(abs)?;
        Some(Self { images })
    }

    /// Builds from disjoint cycles on signed points. A paired cycle determines
    /// its mirror, so listing both halves or just one gives the same element.
    pub fn from_cycles(n: usize, cycles: &[Vec<i32>]) -> Self {
        let mut p = Self::identity(n);
        for cyc in cycles {
            for (k, &x) in cyc.iter().enumerate() {
                p.set(x, cyc[(k + 1) % cyc.len()]);
            }
        }
        p
    }

    fn set(&mut self, x: i32, y: i32) {
        if x > 0 {
            self.images[x as usize - 1] = y;
        } else {
            self.images[(-x) as usize - 1] = -y;
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: i32) -> i32 {
        if x > 0 {
            self.images[x as usize - 1]
        } else {
            -self.images[(-x) as usize - 1]
        }
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self { images: other.images.iter().map(|&x| self.apply(x)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            let v = i as i32 + 1;
            if x > 0 {
                inv[x as usize - 1] = v;
            } else {
                inv[(-x) as usize - 1] = -v;
            }
        }
        Self { images: inv }
    }

    /// Number of points `i > 0` sent to negative points.
    pub fn negations(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }

    /// Cycles on `[±n]` including fixed points, visiting starts in the order
    /// `1, …, n, -1, …, -n`.
    pub fn cycles(&self) -> Vec<Vec<i32>> {
        let n = self.n() as i32;
        let starts = (1..=n).chain((1..=n).map(|i| -i));
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for start in starts {
            if seen.contains(&start) {
                continue;
            }
            let mut cyc = vec![start];
            seen.insert(start);
            let mut x = self.apply(start);
            while x != start {
                seen.insert(x);
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let moved: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if moved.is_empty() {
            return write!(f, "()");
        }
        for c in moved {
            let s: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", s.join(","))?;
        }
        Ok(())
    }
}

// Coordinates: type A uses alpha_i = e_i - e_{i+1} in R^{n+1}; type D uses
// alpha_i = e_i - e_{i+1} (i < n) and alpha_n = e_{n-1} + e_n in R^n.

fn a_alpha_to_e(c: &[i64]) -> Vec<i64> {
    let n = c.len();
    (0..=n)
        .map(|k| {
            let cur = if k < n { c[k] } else { 0 };
            let prev = if k > 0 { c[k - 1] } else { 0 };
            cur - prev
        })
        .collect()
}

fn a_e_to_alpha(x: &[i64]) -> Vec<i64> {
    x[..x.len() - 1]
        .iter()
        .scan(0, |acc, &v| {
            *acc += v;
            Some(*acc)
        })
        .collect()
}

fn d_alpha_to_e(c: &[i64]) -> Vec<i64> {
    let n = c.len();
    let mut x = vec![0; n];
    for k in 0..n - 2 {
        x[k] = c[k] - if k > 0 { c[k - 1] } else { 0 };
    }
    x[n - 2] = c[n - 2] - c[n - 3] + c[n - 1];
    x[n - 1] = c[n - 1] - c[n - 2];
    x
}

fn d_e_to_alpha(x: &[i64]) -> Vec<i64> {
    let n = x.len();
    let mut c = vec![0; n];
    let mut acc = 0;
    for k in 0..n - 2 {
        acc += x[k];
        c[k] = acc;
    }
    let s: i64 = x[..n - 1].iter().sum();
    c[n - 2] = (s - x[n - 1]) / 2;
    c[n - 1] = (s + x[n - 1]) / 2;
    c
}

fn signed_unit_index(x: &[i64]) -> Option<i32> {
    let nz: Vec<_> = x.iter().enumerate().filter(|(_, &v)| v != 0).collect();
    match nz.as_slice() {
        [(k, &1)] => Some(*k as i32 + 1),
        [(k, &-1)] => Some(-(*k as i32 + 1)),
        _ => None,
    }
}

fn check_series(rs: &RootSystem, expected: Series) -> Result<()> {
    let actual = rs.delta().series();
    if actual == expected {
        Ok(())
    } else {
        Err(Error::WrongSeries { expected: expected.letter(), actual: actual.letter() })
    }
}

impl RootSystem {
    /// The image of `w` in `S_{n+1}` under `s_i ↦ (i, i+1)`.
    pub fn type_a_as_permutation(&self, w: &GroupElement) -> Result<Permutation> {
        check_series(self, Series::A)?;
        let n = self.rank();
        let mut images = vec![0usize; n + 1];
        for i in 0..n {
            // e_i - e_{n+1}
            let mut x = vec![0i64; n + 1];
            x[i] = 1;
            x[n] = -1;
            let y = a_alpha_to_e(&w.apply(&a_e_to_alpha(&x)));
            for (k, &v) in y.iter().enumerate() {
                if v == 1 {
                    images[i] = k + 1;
                } else if v == -1 {
                    images[n] = k + 1;
                }
            }
        }
        Ok(Permutation::from_images(images).expect("type-A image is a permutation"))
    }

    pub fn permutation_to_type_a(&self, p: &Permutation) -> Result<GroupElement> {
        check_series(self, Series::A)?;
        let n = self.rank();
        if p.n() != n + 1 {
            return Err(Error::InvalidPartition(format!("permutation of {} points, expected {}", p.n(), n + 1)));
        }
        let cols: Vec<Vec<i64>> = (1..=n)
            .map(|j| {
                let mut x = vec![0i64; n + 1];
                x[p.apply(j) - 1] += 1;
                x[p.apply(j + 1) - 1] -= 1;
                a_e_to_alpha(&x)
            })
            .collect();
        Ok(GroupElement::from_matrix(IntMatrix::from_columns(&cols)))
    }

    /// The image of `w` in the even-signed permutation group under
    /// `s_i ↦ ((i, i+1))` for `i < n` and `s_n ↦ ((-(n-1), n))`.
    pub fn type_d_as_signed_permutation(&self, w: &GroupElement) -> Result<SignedPermutation> {
        check_series(self, Series::D)?;
        let n = self.rank();
        let images = (0..n)
            .map(|i| {
                let j = if i == 0 { 1 } else { 0 };
                let mut minus = vec![0i64; n];
                minus[i] = 1;
                minus[j] = -1;
                let mut plus = vec![0i64; n];
                plus[i] = 1;
                plus[j] = 1;
                let a = d_alpha_to_e(&w.apply(&d_e_to_alpha(&minus)));
                let b = d_alpha_to_e(&w.apply(&d_e_to_alpha(&plus)));
                let e: Vec<i64> = a.iter().zip(&b).map(|(x, y)| (x + y) / 2).collect();
                signed_unit_index(&e).expect("type-D image is a signed permutation")
            })
            .collect();
        Ok(SignedPermutation { images })
    }

    pub fn signed_permutation_to_type_d(&self, p: &SignedPermutation) -> Result<GroupElement> {
        check_series(self, Series::D)?;
        let n = self.rank();
        if p.n() != n || p.negations() % 2 != 0 {
            return Err(Error::InvalidPartition("not an even signed permutation of the right size".into()));
        }
        let unit = |x: i32| {
            let mut v = vec![0i64; n];
            v[x.unsigned_abs() as usize - 1] = x.signum() as i64;
            v
        };
        let cols: Vec<Vec<i64>> = (1..=n as i32)
            .map(|j| {
                let (a, b) = if j < n as i32 {
                    (unit(p.apply(j)), unit(-p.apply(j + 1)))
                } else {
                    (unit(p.apply(j - 1)), unit(p.apply(j)))
                };
                let x: Vec<i64> = a.iter().zip(&b).map(|(u, v)| u + v).collect();
                d_e_to_alpha(&x)
            })
            .collect();
        Ok(GroupElement::from_matrix(IntMatrix::from_columns(&cols)))
    }

    /// JSON form of `w`, with a `cycles` field for series A and D.
    pub fn element_to_json(&self, w: &GroupElement) -> GroupElementJson {
        let cycles = match self.delta().series() {
            Series::A => self.type_a_as_permutation(w).ok().map(|p| {
                p.cycles()
                    .into_iter()
                    .filter(|c| c.len() > 1)
                    .map(|c| c.into_iter().map(|x| x as i32).collect())
                    .collect()
            }),
            Series::D => self
                .type_d_as_signed_permutation(w)
                .ok()
                .map(|p| p.cycles().into_iter().filter(|c| c.len() > 1).collect()),
            Series::E => None,
        };
        GroupElementJson {
            series: self.delta().series().letter().to_string(),
            rank: self.rank(),
            matrix: w.matrix().to_rows(),
            cycles,
        }
    }

    /// Parses a JSON group element, checking series, rank and group membership.
    pub fn element_from_json(&self, json: &GroupElementJson) -> Result<GroupElement> {
        let series = self.delta().series().letter().to_string();
        if json.series != series {
            return Err(Error::WrongSeries {
                expected: self.delta().series().letter(),
                actual: json.series.chars().next().unwrap_or('?'),
            });
        }
        let n = self.rank();
        if json.rank != n || json.matrix.len() != n || json.matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidDynkin { series: self.delta().series().letter(), rank: json.rank });
        }
        let w = GroupElement::from_matrix(IntMatrix::from_rows(&json.matrix));
        if !self.is_group_element(&w) {
            return Err(Error::NotInInterval);
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_coxeter::DynkinType;
    use rand::{Rng, SeedableRng};

    fn random_word(rs: &RootSystem, rng: &mut impl Rng, len: usize) -> GroupElement {
        (0..len).fold(GroupElement::identity(rs.rank()), |acc, _| {
            acc.compose(rs.simple_reflection(rng.gen_range(0..rs.rank())))
        })
    }

    #[test]
    fn simple_reflections_are_adjacent_transpositions() {
        let rs = RootSystem::new(DynkinType::a(2));
        let p = rs.type_a_as_permutation(rs.simple_reflection(0)).unwrap();
        assert_eq!(p, Permutation::from_cycles(3, &[vec![1, 2]]));
        let rs = RootSystem::new(DynkinType::a(5));
        for i in 0..5 {
            let p = rs.type_a_as_permutation(rs.simple_reflection(i)).unwrap();
            assert_eq!(p, Permutation::from_cycles(6, &[vec![i + 1, i + 2]]));
        }
    }

    #[test]
    fn type_a_coxeter_is_long_cycle() {
        for n in 1..=7 {
            let rs = RootSystem::new(DynkinType::a(n));
            let p = rs.type_a_as_permutation(rs.coxeter_element()).unwrap();
            let cyc: Vec<usize> = (1..=n + 1).collect();
            assert_eq!(p, Permutation::from_cycles(n + 1, &[cyc]));
        }
    }

    #[test]
    fn type_d_simple_reflections() {
        for n in 4..=6 {
            let rs = RootSystem::new(DynkinType::d(n));
            let ni = n as i32;
            for i in 1..n as i32 {
                let p = rs.type_d_as_signed_permutation(rs.simple_reflection(i as usize - 1)).unwrap();
                assert_eq!(p, SignedPermutation::from_cycles(n, &[vec![i, i + 1], vec![-i, -i - 1]]));
            }
            let p = rs.type_d_as_signed_permutation(rs.simple_reflection(n - 1)).unwrap();
            assert_eq!(p, SignedPermutation::from_cycles(n, &[vec![-(ni - 1), ni], vec![ni - 1, -ni]]));
        }
    }

    #[test]
    fn type_d_coxeter_element() {
        for n in 4..=7 {
            let rs = RootSystem::new(DynkinType::d(n));
            let ni = n as i32;
            let mut big: Vec<i32> = (1..ni).collect();
            big.extend((1..ni).map(|i| -i));
            let expected = SignedPermutation::from_cycles(n, &[big, vec![ni, -ni]]);
            assert_eq!(rs.type_d_as_signed_permutation(rs.coxeter_element()).unwrap(), expected);
        }
    }

    #[test]
    fn wrong_series_is_rejected() {
        let rs = RootSystem::new(DynkinType::d(4));
        assert!(matches!(
            rs.type_a_as_permutation(rs.coxeter_element()),
            Err(Error::WrongSeries { expected: 'A', actual: 'D' })
        ));
        let rs = RootSystem::new(DynkinType::e(6));
        assert!(rs.type_d_as_signed_permutation(rs.coxeter_element()).is_err());
    }

    #[test]
    fn homomorphism_on_random_pairs() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let ra = RootSystem::new(DynkinType::a(5));
        let rd = RootSystem::new(DynkinType::d(5));
        for _ in 0..100 {
            let (u, v) = (random_word(&ra, &mut rng, 12), random_word(&ra, &mut rng, 12));
            let lhs = ra.type_a_as_permutation(&u.compose(&v)).unwrap();
            let rhs = ra.type_a_as_permutation(&u).unwrap().compose(&ra.type_a_as_permutation(&v).unwrap());
            assert_eq!(lhs, rhs);
            assert_eq!(ra.permutation_to_type_a(&lhs).unwrap(), u.compose(&v));

            let (u, v) = (random_word(&rd, &mut rng, 12), random_word(&rd, &mut rng, 12));
            let lhs = rd.type_d_as_signed_permutation(&u.compose(&v)).unwrap();
            let rhs = rd
                .type_d_as_signed_permutation(&u)
                .unwrap()
                .compose(&rd.type_d_as_signed_permutation(&v).unwrap());
            assert_eq!(lhs, rhs);
            assert_eq!(lhs.negations() % 2, 0);
            assert_eq!(rd.signed_permutation_to_type_d(&lhs).unwrap(), u.compose(&v));
        }
    }

    #[test]
    fn json_cycles() {
        let rs = RootSystem::new(DynkinType::d(4));
        let w = rs.simple_reflection(0).clone();
        let json = rs.element_to_json(&w);
        assert_eq!(json.cycles, Some(vec![vec![1, 2], vec![-1, -2]]));
        let text = serde_json::to_string(&json).unwrap();
        let back: GroupElementJson = serde_json::from_str(&text).unwrap();
        assert_eq!(rs.element_from_json(&back).unwrap(), w);
        let e6 = RootSystem::new(DynkinType::e(6));
        assert!(e6.element_to_json(e6.coxeter_element()).cycles.is_none());
    }

    #[test]
    fn signed_cycles_and_inverse() {
        let p = SignedPermutation::from_cycles(3, &[vec![1, -2], vec![-1, 2]]);
        assert_eq!(p.apply(1), -2);
        assert_eq!(p.apply(-2), 1);
        assert_eq!(p.apply(2), -1);
        assert_eq!(p.compose(&p.inverse()), SignedPermutation::identity(3));
        let q = Permutation::from_cycles(4, &[vec![1, 3, 4]]);
        assert_eq!(q.compose(&q.inverse()), Permutation::identity(4));
        assert_eq!(q.cycles(), vec![vec![1, 3, 4], vec![2]]);
    }
}
