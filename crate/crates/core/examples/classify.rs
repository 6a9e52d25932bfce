//! Thick subcategories of a few orbit categories, by the noncrossing
//! criterion and by brute force.

use thicket::classifier::{classification_report, enumerate_thick, CategoryType, Order};
use thicket::derived::DerivedModel;
use thicket::root_coxeter::DynkinType;

fn main() {
    let types = [
        CategoryType::new(DynkinType::a(5), 4, Order::One).unwrap(),
        CategoryType::new(DynkinType::d(5), 14, Order::Two).unwrap(),
        CategoryType::new(DynkinType::d(4), 3, Order::Three).unwrap(),
        CategoryType::new(DynkinType::e(6), 6, Order::One).unwrap(),
    ];
    for ct in types {
        let rep = classification_report(&ct).unwrap();
        println!(
            "{ct}: {} s = {}, formula {:?}, enumerated {}, brute force {}",
            rep.criterion, rep.s, rep.count_formula, rep.count_enumerated, rep.count_brute_force
        );
    }

    let ct = types[0];
    let model = DerivedModel::shared(ct.delta());
    println!("\n{ct}:");
    for d in enumerate_thick(&ct).unwrap() {
        let roots: Vec<&Vec<i64>> = d.roots().iter().map(|&i| &model.root_system().positives()[i]).collect();
        println!("  {roots:?}");
    }
}
