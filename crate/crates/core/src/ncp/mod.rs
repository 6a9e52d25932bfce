//! Circular noncrossing partition models of types A, B and D.

mod bijections;
mod json;
mod partition_a;
mod signed;

pub use bijections::{
    ar_bijection_f, ar_bijection_g, ar_bijection_g_unchecked, brady_f, brady_g, coxeter_conjugation_is_sigma_rho,
    enumerate_nc_d, is_noncrossing_d,
};
pub use json::{PartitionJson, SignedBlockJson};
pub use partition_a::{
    binomial, catalan, construct_fiber, enumerate_nc_a, is_noncrossing_a, kreweras_alpha, kreweras_alpha_inv,
    project_f, rotate_a, SetPartitionA,
};
pub use signed::{
    boundary_noncrossing_d, count_nc_b, enumerate_nc_b, rho, rho_point, rho_pow, sigma, sigma_pow, BPartition,
    DPartition,
};
