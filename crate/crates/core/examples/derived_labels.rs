//! Labels of the repetition quiver by (root, shift), the suspension and
//! the automorphism phi.

use thicket::derived::{phi, DerivedModel, VertexMap};
use thicket::root_coxeter::DynkinType;

fn main() {
    let delta = DynkinType::a(3);
    let model = DerivedModel::new(delta);
    let rs = model.root_system();
    let walk = model.walk();
    println!("ZA3, seed slice {:?}", walk.seed());
    for m in 0..6 {
        let row: Vec<String> = (0..3)
            .map(|q| {
                let l = walk.label((m, q));
                format!("S^{} {:?}", l.shift, rs.positives()[l.root])
            })
            .collect();
        println!("m = {m}: {}", row.join("  "));
    }

    let s = walk.suspension();
    println!("\nsuspension: {s:?}");
    let h = delta.coxeter_number() as i64;
    println!("S^2 = tau^{}", if s.pow(2).same_action(&VertexMap::tau_pow(3, -h)) { -h } else { h });

    let p = phi(&DynkinType::a(4)).unwrap();
    println!("A4: phi^2 = tau is {}", p.pow(2).same_action(&VertexMap::tau_pow(4, 1)));
}
