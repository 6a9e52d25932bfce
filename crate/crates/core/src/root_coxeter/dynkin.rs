use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    D,
    E,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::D => 'D',
            Series::E => 'E',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'A' => Some(Series::A),
            'D' => Some(Series::D),
            'E' => Some(Series::E),
            _ => None,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simply-laced Dynkin diagram `A_n` (n ≥ 1), `D_n` (n ≥ 4) or `E_6`, `E_7`, `E_8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawDynkin")]
pub struct DynkinType {
    series: Series,
    rank: usize,
}

#[derive(Deserialize)]
struct RawDynkin {
    series: Series,
    rank: usize,
}

impl TryFrom<RawDynkin> for DynkinType {
    type Error = Error;
    fn try_from(raw: RawDynkin) -> Result<Self> {
        DynkinType::new(raw.series, raw.rank)
    }
}

impl DynkinType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(Self { series, rank })
        } else {
            Err(Error::InvalidDynkin { series: series.letter(), rank })
        }
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Series::A, rank).expect("A_n needs n >= 1")
    }

    pub fn d(rank: usize) -> Self {
        Self::new(Series::D, rank).expect("D_n needs n >= 4")
    }

    pub fn e(rank: usize) -> Self {
        Self::new(Series::E, rank).expect("E_n needs n in 6..=8")
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Coxeter number `h`, the order of a Coxeter element.
    pub fn coxeter_number(&self) -> usize {
        match (self.series, self.rank) {
            (Series::A, n) => n + 1,
            (Series::D, n) => 2 * n - 2,
            (Series::E, 6) => 12,
            (Series::E, 7) => 18,
            (Series::E, _) => 30,
        }
    }

    /// `m = h - 1`.
    pub fn m(&self) -> usize {
        self.coxeter_number() - 1
    }

    pub fn num_positive_roots(&self) -> usize {
        self.rank * self.coxeter_number() / 2
    }

    /// Arrows of the fixed orientation, 0-based `(tail, head)`.
    ///
    /// `A_n`: 1 → 2 → … → n. `D_n`: 1 → … → n-2 with n-2 → n-1 and n-2 → n.
    /// `E_n`: 2 → 1, 3 → 2, 3 → 4, 3 → 5 → 6 → 7 → 8.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.series {
            Series::A => (0..n - 1).map(|i| (i, i + 1)).collect(),
            Series::D => {
                let mut a: Vec<_> = (0..n - 3).map(|i| (i, i + 1)).collect();
                a.push((n - 3, n - 2));
                a.push((n - 3, n - 1));
                a
            }
            Series::E => {
                let mut a = vec![(1, 0), (2, 1), (2, 3), (2, 4)];
                a.extend((4..n - 1).map(|i| (i, i + 1)));
                a
            }
        }
    }

    /// Undirected neighbours of each vertex.
    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.rank];
        for (a, b) in self.arrows() {
            adj[a].push(b);
            adj[b].push(a);
        }
        for v in &mut adj {
            v.sort_unstable();
        }
        adj
    }

    /// A linear extension of the orientation with sources first (ties by index).
    pub fn source_order(&self) -> Vec<usize> {
        let n = self.rank;
        let arrows = self.arrows();
        let mut indeg = vec![0usize; n];
        for &(_, b) in &arrows {
            indeg[b] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut done = vec![false; n];
        while order.len() < n {
            let v = (0..n).find(|&v| !done[v] && indeg[v] == 0).expect("orientation is acyclic");
            done[v] = true;
            order.push(v);
            for &(a, b) in &arrows {
                if a == v {
                    indeg[b] -= 1;
                }
            }
        }
        order
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}
