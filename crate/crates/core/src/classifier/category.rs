use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::root_coxeter::{DynkinType, Series};

/// Order `t` of the automorphism `φ` in the generator `φτ^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    One,
    Two,
    Three,
    Infinite,
}

impl Order {
    pub fn as_u32(self) -> Option<u32> {
        match self {
            Order::One => Some(1),
            Order::Two => Some(2),
            Order::Three => Some(3),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_u32() {
            Some(t) => write!(f, "{t}"),
            None => write!(f, "inf"),
        }
    }
}

impl FromStr for Order {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "1" => Ok(Order::One),
            "2" => Ok(Order::Two),
            "3" => Ok(Order::Three),
            "inf" | "infinity" | "∞" => Ok(Order::Infinite),
            other => Err(Error::InvalidType(format!("t must be 1, 2, 3 or inf, got {other:?}"))),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.as_u32() {
            Some(t) => s.serialize_u32(t),
            None => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Order {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(n) => n.to_string().parse(),
            Raw::Text(s) => s.parse(),
        }
        .map_err(serde::de::Error::custom)
    }
}

/// The type `(Δ, r, t)` of a finite triangulated category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawCategoryType", into = "RawCategoryType")]
pub struct CategoryType {
    delta: DynkinType,
    r: u64,
    t: Order,
}

#[derive(Serialize, Deserialize)]
struct RawCategoryType {
    series: Series,
    rank: usize,
    r: u64,
    t: Order,
}

impl TryFrom<RawCategoryType> for CategoryType {
    type Error = Error;
    fn try_from(raw: RawCategoryType) -> Result<Self> {
        CategoryType::new(DynkinType::new(raw.series, raw.rank)?, raw.r, raw.t)
    }
}

impl From<CategoryType> for RawCategoryType {
    fn from(ct: CategoryType) -> Self {
        Self { series: ct.delta.series(), rank: ct.delta.rank(), r: ct.r, t: ct.t }
    }
}

impl CategoryType {
    /// Validates against the admissible list: `(A_n,r,1)`, `(A_{2n+1},r,2)`,
    /// `(A_{2n},r,∞)`, `(D_n,r,1)`, `(D_n,r,2)`, `(D_4,r,3)`, `(E_n,r,1)`, `(E_6,r,2)`.
    pub fn new(delta: DynkinType, r: u64, t: Order) -> Result<Self> {
        let n = delta.rank();
        let ok = r >= 1
            && match (delta.series(), t) {
                (_, Order::One) => true,
                (Series::A, Order::Two) => n % 2 == 1 && n >= 3,
                (Series::A, Order::Infinite) => n % 2 == 0,
                (Series::D, Order::Two) => true,
                (Series::D, Order::Three) => n == 4,
                (Series::E, Order::Two) => n == 6,
                _ => false,
            };
        if ok {
            Ok(Self { delta, r, t })
        } else {
            Err(Error::InvalidType(format!("({delta}, {r}, {t})")))
        }
    }

    pub fn delta(&self) -> DynkinType {
        self.delta
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn t(&self) -> Order {
        self.t
    }

    /// Every admissible type of rank at most `max_rank` (series A, D, E)
    /// with `1 ≤ r ≤ r_max(Δ)`.
    pub fn admissible(max_rank: usize, r_max: impl Fn(DynkinType) -> u64) -> Vec<CategoryType> {
        let mut deltas: Vec<DynkinType> = (1..=max_rank).map(DynkinType::a).collect();
        deltas.extend((4..=max_rank).map(DynkinType::d));
        deltas.extend((6..=max_rank.min(8)).map(DynkinType::e));
        let mut out = Vec::new();
        for d in deltas {
            for t in [Order::One, Order::Two, Order::Three, Order::Infinite] {
                for r in 1..=r_max(d) {
                    if let Ok(ct) = CategoryType::new(d, r, t) {
                        out.push(ct);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for CategoryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.delta, self.r, self.t)
    }
}
