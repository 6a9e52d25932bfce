//! Root systems, Coxeter elements and the noncrossing interval [id, cox].

use thicket::root_coxeter::{DynkinType, RootSystem};

fn main() {
    for delta in [DynkinType::a(3), DynkinType::d(4), DynkinType::e(6)] {
        let rs = RootSystem::new(delta);
        let cox = rs.coxeter_element();
        let nc = rs.enumerate_nc();
        println!(
            "{delta}: {} positive roots, h = {}, order(cox) = {:?}, |NC| = {}",
            rs.positives().len(),
            rs.coxeter_number(),
            cox.order(64),
            nc.len()
        );
    }

    let rs = RootSystem::new(DynkinType::a(3));
    let nc = rs.enumerate_nc();
    println!("\nA3 interval by absolute length:");
    for k in 0..=3 {
        let count = nc.iter().filter(|w| rs.absolute_length(w) == k).count();
        println!("  length {k}: {count}");
    }
    let w = &nc.elements()[5];
    println!("\nelement {:?}", rs.element_to_json(w));
    println!("roots below it: {:?}", rs.roots_below(w).unwrap().iter().map(|&i| &rs.positives()[i]).collect::<Vec<_>>());
}
