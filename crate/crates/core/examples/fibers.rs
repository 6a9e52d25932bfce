//! Rotation-invariant partitions of [s x] as fibers over NC^A(s).

use thicket::ncp::{binomial, construct_fiber, enumerate_nc_a, project_f};

fn main() {
    let (s, x) = (3, 2);
    let mut total = 0;
    for w in enumerate_nc_a(s) {
        let fiber = construct_fiber(&w, x).unwrap();
        println!("over {:?}:", w.blocks());
        for p in &fiber {
            assert_eq!(project_f(p, s).unwrap(), w);
            println!("    {:?}", p.blocks());
        }
        total += fiber.len();
    }
    println!("total {total} = binom({}, {s}) = {}", 2 * s, binomial(2 * s, s));
}
