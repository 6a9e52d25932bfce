//! From the type of a self-injective algebra to the type of its stable
//! module category.

use num_rational::Ratio;
use thicket::classifier::{algebra_type_to_category_type, count_thick_formula, Order};
use thicket::root_coxeter::DynkinType;

fn main() {
    let cases = [
        (DynkinType::a(5), Ratio::new(2, 1), Order::Two),
        (DynkinType::a(3), Ratio::new(1, 3), Order::One),
        (DynkinType::d(5), Ratio::new(2, 1), Order::Two),
        (DynkinType::d(6), Ratio::new(2, 3), Order::One),
        (DynkinType::d(4), Ratio::new(1, 1), Order::Three),
        (DynkinType::e(6), Ratio::new(1, 2), Order::One),
    ];
    for (delta, f, t) in cases {
        match algebra_type_to_category_type(delta, f, t) {
            Ok(ct) => println!("({delta}, {f}, {t}) -> {ct}, {:?} thick subcategories", count_thick_formula(&ct).ok()),
            Err(e) => println!("({delta}, {f}, {t}): {e}"),
        }
    }
}
