//! Noncrossing partitions of types A, B and D and the actions on them.

use thicket::ncp::{enumerate_nc_a, enumerate_nc_b, kreweras_alpha, rho, rotate_a, sigma, DPartition, SetPartitionA};

fn main() {
    for n in 1..=8 {
        println!("|NC^A({n})| = {}", enumerate_nc_a(n).len());
    }

    let p = SetPartitionA::new(6, vec![vec![1, 3, 5], vec![2], vec![4], vec![6]]).unwrap();
    println!("\np = {:?}", p.blocks());
    println!("rotated by 1: {:?}", rotate_a(&p, 1).blocks());
    println!("rotated by 2: {:?}", rotate_a(&p, 2).blocks());
    println!("Kreweras complement: {:?}", kreweras_alpha(&p).unwrap().blocks());

    let invariant = enumerate_nc_a(6).into_iter().filter(|q| rotate_a(q, 2) == *q).count();
    println!("\nNC^A(6) partitions fixed by rotation through 2 steps: {invariant}");

    println!("|NC^B(3)| = {}", enumerate_nc_b(3).len());

    let d = DPartition::new(5, vec![vec![1, 2], vec![-1, -2], vec![3, 4], vec![-3, -4], vec![5], vec![-5]]).unwrap();
    println!("\nD-partition {:?}", d.blocks());
    println!("rho:   {:?}", rho(&d).blocks());
    println!("sigma: {:?}", sigma(&d).blocks());
}
