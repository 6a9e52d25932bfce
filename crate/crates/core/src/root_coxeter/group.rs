use std::fmt;

use serde::{Deserialize, Serialize};

use crate::matrix::IntMatrix;

/// An element of the Weyl group, as an integer matrix acting on column
/// vectors written in the simple-root basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(IntMatrix);

impl GroupElement {
    pub fn identity(rank: usize) -> Self {
        Self(IntMatrix::identity(rank))
    }

    pub fn from_matrix(m: IntMatrix) -> Self {
        assert!(m.is_square(), "group elements are square matrices");
        Self(m)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.rows()
    }

    pub fn is_identity(&self) -> bool {
        self.0 == IntMatrix::identity(self.rank())
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.0.mul_vec(v)
    }

    /// Group product `self · other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::identity(self.rank());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order, or `None` if it exceeds `limit`.
    pub fn order(&self, limit: usize) -> Option<usize> {
        let id = Self::identity(self.rank());
        let mut acc = self.clone();
        for k in 1..=limit {
            if acc == id {
                return Some(k);
            }
            acc = acc.compose(self);
        }
        None
    }

    /// Reflection length: the rank of `w - I`.
    pub fn absolute_length(&self) -> usize {
        (&self.0 - &IntMatrix::identity(self.rank())).rank()
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement({:?})", self.0)
    }
}

/// JSON shape of a group element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupElementJson {
    pub series: String,
    pub rank: usize,
    pub matrix: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cycles: Option<Vec<Vec<i32>>>,
}
