use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::root_coxeter::{DynkinType, Series};

use super::category::{CategoryType, Order};

/// Whether `(Δ, f, t)` is the type of a standard representation-finite
/// self-injective algebra.
pub fn is_standard_algebra_type(delta: DynkinType, f: Ratio<u64>, t: Order) -> bool {
    if f <= Ratio::from_integer(0) {
        return false;
    }
    let n = delta.rank() as u64;
    let integral = f.is_integer();
    match (delta.series(), t) {
        (Series::A, Order::One) => (f * n).is_integer(),
        (Series::A, Order::Two) => n % 2 == 1 && n >= 3 && integral,
        (Series::D, Order::One) => {
            integral || (n % 3 == 0 && n >= 6 && *f.denom() == 3)
        }
        (Series::D, Order::Two) => integral,
        (Series::D, Order::Three) => n == 4 && integral,
        (Series::E, Order::One) => integral,
        (Series::E, Order::Two) => n == 6 && integral,
        _ => false,
    }
}

/// `(Δ, f, t) ↦ (Δ, f·m_Δ, t)` for the stable module category.
pub fn algebra_type_to_category_type(delta: DynkinType, f: Ratio<u64>, t: Order) -> Result<CategoryType> {
    let label = || format!("({delta}, {f}, {t})");
    if !is_standard_algebra_type(delta, f, t) {
        return Err(Error::NotAsashibaType(label()));
    }
    let r = f * delta.m() as u64;
    if !r.is_integer() {
        return Err(Error::NotAsashibaType(label()));
    }
    CategoryType::new(delta, r.to_integer(), t)
}
