//! Interval elements as noncrossing partitions, and Coxeter conjugation as
//! rotation.

use thicket::ncp::{ar_bijection_f, ar_bijection_g, brady_f, brady_g, coxeter_conjugation_is_sigma_rho, rotate_a};
use thicket::root_coxeter::{DynkinType, RootSystem};

fn main() {
    let rs = RootSystem::new(DynkinType::a(3));
    for w in rs.enumerate_nc().iter().take(6) {
        let p = brady_f(&rs, w).unwrap();
        let conj = brady_f(&rs, &rs.conjugate_by_cox(w, 1)).unwrap();
        assert_eq!(&brady_g(&rs, &p).unwrap(), w);
        assert_eq!(conj, rotate_a(&p, 1));
        println!("A3: {:?} -> conjugate {:?}", p.blocks(), conj.blocks());
    }

    let rs = RootSystem::new(DynkinType::d(4));
    for w in rs.enumerate_nc().iter().skip(10).take(5) {
        let p = ar_bijection_f(&rs, w).unwrap();
        assert_eq!(&ar_bijection_g(&rs, &p).unwrap(), w);
        println!("D4: {:?}", p.blocks());
    }
    let report = coxeter_conjugation_is_sigma_rho(&rs).unwrap();
    println!("{}: {} cases, passed = {}", report.name, report.checked, report.passed());
}
