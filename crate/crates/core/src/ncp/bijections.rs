//! Group elements of `[id, cox]` as noncrossing partitions.

use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::root_coxeter::{GroupElement, RootSystem, SignedPermutation};

use super::partition_a::{is_noncrossing_a, SetPartitionA};
use super::signed::{rho, sigma, DPartition};

/// Type A: the blocks are the cycle supports of `w` as a permutation of `[n+1]`.
pub fn brady_f(rs: &RootSystem, w: &GroupElement) -> Result<SetPartitionA> {
    let p = rs.type_a_as_permutation(w)?;
    if !rs.in_nc(w) {
        return Err(Error::NotInInterval);
    }
    Ok(SetPartitionA::from_permutation(&p))
}

/// Inverse of [`brady_f`]: blocks become increasing cycles.
pub fn brady_g(rs: &RootSystem, p: &SetPartitionA) -> Result<GroupElement> {
    if p.n() != rs.rank() + 1 {
        return Err(Error::InvalidPartition(format!("expected a partition of [{}]", rs.rank() + 1)));
    }
    if !is_noncrossing_a(p) {
        return Err(Error::NotInInterval);
    }
    rs.permutation_to_type_a(&p.to_permutation())
}

fn signed_to_partition(n: usize, p: &SignedPermutation) -> DPartition {
    let mut blocks = Vec::new();
    let mut zero = Vec::new();
    for c in p.cycles() {
        if c.iter().any(|x| c.contains(&-x)) {
            zero.extend(c);
        } else {
            blocks.push(c);
        }
    }
    if !zero.is_empty() {
        blocks.push(zero);
    }
    DPartition::new(n, blocks).expect("cycle supports of an interval element form a D-partition")
}

/// Type D: paired cycles give mirror block pairs, balanced cycles merge
/// into the zero block.
pub fn ar_bijection_f(rs: &RootSystem, w: &GroupElement) -> Result<DPartition> {
    let p = rs.type_d_as_signed_permutation(w)?;
    if !rs.in_nc(w) {
        return Err(Error::NotInInterval);
    }
    Ok(signed_to_partition(rs.rank(), &p))
}

/// Cycle of a block: boundary points in clockwise order around the
/// `(2n-2)`-gon, with a centroid point `±n` inserted across the widest gap.
fn block_cycle(block: &[i32], n: usize) -> Vec<i32> {
    let ni = n as i32;
    let m = 2 * (n - 1);
    let pos = |x: i32| if x > 0 { x as usize - 1 } else { n - 2 + x.unsigned_abs() as usize };
    let mut boundary: Vec<i32> = block.iter().copied().filter(|x| x.abs() != ni).collect();
    boundary.sort_by_key(|&x| pos(x));
    let centre: Vec<i32> = block.iter().copied().filter(|x| x.abs() == ni).collect();
    if centre.is_empty() || boundary.len() < 2 {
        boundary.extend(centre);
        return boundary;
    }
    let k = boundary.len();
    let gap = |i: usize| (pos(boundary[(i + 1) % k]) + m - pos(boundary[i])) % m;
    let widest = (0..k).max_by_key(|&i| (gap(i), std::cmp::Reverse(i))).expect("nonempty");
    boundary.rotate_left((widest + 1) % k);
    boundary.extend(centre);
    boundary
}

/// The group element attached to a `D_n`-partition, without checking
/// that it lies in `[id, cox]`.
pub fn ar_bijection_g_unchecked(rs: &RootSystem, p: &DPartition) -> Result<GroupElement> {
    let n = rs.rank();
    if p.n() != n {
        return Err(Error::InvalidPartition(format!("expected a D-partition of [±{n}]")));
    }
    let ni = n as i32;
    let mut cycles: Vec<Vec<i32>> = Vec::new();
    for b in p.blocks() {
        if DPartition::is_zero_block(b) {
            if !b.contains(&ni) {
                return Err(Error::NotInInterval);
            }
            cycles.push(vec![ni, -ni]);
            let rest: Vec<i32> = b.iter().copied().filter(|x| x.abs() != ni).collect();
            cycles.push(block_cycle(&rest, n));
        } else if b.len() > 1 {
            cycles.push(block_cycle(b, n));
        }
    }
    let perm = SignedPermutation::from_cycles(n, &cycles);
    rs.signed_permutation_to_type_d(&perm)
}

/// Inverse of [`ar_bijection_f`]; fails unless the partition is noncrossing.
pub fn ar_bijection_g(rs: &RootSystem, p: &DPartition) -> Result<GroupElement> {
    let w = ar_bijection_g_unchecked(rs, p)?;
    if rs.in_nc(&w) {
        Ok(w)
    } else {
        Err(Error::NotInInterval)
    }
}

/// The authoritative type-D noncrossing predicate: `g(p) ∈ [id, cox]`.
pub fn is_noncrossing_d(rs: &RootSystem, p: &DPartition) -> bool {
    ar_bijection_g(rs, p).is_ok()
}

/// All noncrossing `D_n`-partitions, as images of the interval.
pub fn enumerate_nc_d(rs: &RootSystem) -> Result<Vec<DPartition>> {
    let mut out = rs
        .enumerate_nc()
        .iter()
        .map(|w| ar_bijection_f(rs, w))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Checks `f(cox · w · cox⁻¹) = σρ(f(w))` for every `w` in the type-D interval.
pub fn coxeter_conjugation_is_sigma_rho(rs: &RootSystem) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("{}: conjugation by cox equals sigma rho", rs.delta()));
    for w in rs.enumerate_nc().iter() {
        let lhs = ar_bijection_f(rs, &rs.conjugate_by_cox(w, 1))?;
        let base = ar_bijection_f(rs, w)?;
        let rhs = sigma(&rho(&base));
        report.record(lhs == rhs, || format!("{base:?}: conjugate {lhs:?}, sigma rho {rhs:?}"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncp::partition_a::{enumerate_nc_a, rotate_a};
    use crate::ncp::signed::boundary_noncrossing_d;
    use crate::root_coxeter::DynkinType;
    use std::collections::HashSet;

    #[test]
    fn brady_endpoints() {
        for n in 1..=5 {
            let rs = RootSystem::new(DynkinType::a(n));
            assert_eq!(brady_f(&rs, &GroupElement::identity(n)).unwrap(), SetPartitionA::singletons(n + 1));
            assert_eq!(brady_f(&rs, rs.coxeter_element()).unwrap(), SetPartitionA::full(n + 1));
        }
    }

    #[test]
    fn brady_is_a_bijection() {
        for n in 1..=5 {
            let rs = RootSystem::new(DynkinType::a(n));
            let nc = rs.enumerate_nc();
            let images: HashSet<_> = nc.iter().map(|w| brady_f(&rs, w).unwrap()).collect();
            let expected: HashSet<_> = enumerate_nc_a(n + 1).into_iter().collect();
            assert_eq!(images, expected);
            for w in nc.iter() {
                assert_eq!(&brady_g(&rs, &brady_f(&rs, w).unwrap()).unwrap(), w);
            }
        }
    }

    #[test]
    fn brady_rejects_outside_interval() {
        let rs = RootSystem::new(DynkinType::a(3));
        assert_eq!(brady_f(&rs, &rs.coxeter_element().pow(2)), Err(Error::NotInInterval));
        let crossing = SetPartitionA::new(4, vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(brady_g(&rs, &crossing), Err(Error::NotInInterval));
    }

    #[test]
    fn conjugation_is_rotation_in_type_a() {
        for n in 1..=5 {
            let rs = RootSystem::new(DynkinType::a(n));
            for w in rs.enumerate_nc().iter() {
                let lhs = brady_f(&rs, &rs.conjugate_by_cox(w, 1)).unwrap();
                assert_eq!(lhs, rotate_a(&brady_f(&rs, w).unwrap(), 1));
            }
        }
    }

    #[test]
    fn ar_endpoints() {
        for n in 4..=6 {
            let rs = RootSystem::new(DynkinType::d(n));
            assert_eq!(ar_bijection_f(&rs, &GroupElement::identity(n)).unwrap(), DPartition::singletons(n));
            assert_eq!(ar_bijection_f(&rs, rs.coxeter_element()).unwrap(), DPartition::full(n));
            assert_eq!(&ar_bijection_g(&rs, &DPartition::full(n)).unwrap(), rs.coxeter_element());
        }
    }

    #[test]
    fn ar_roundtrip_and_boundary_sanity() {
        for n in [4, 5, 6] {
            let rs = RootSystem::new(DynkinType::d(n));
            let nc = rs.enumerate_nc();
            let parts = enumerate_nc_d(&rs).unwrap();
            assert_eq!(parts.len(), nc.len());
            assert_eq!(parts.iter().collect::<HashSet<_>>().len(), parts.len());
            for w in nc.iter() {
                let p = ar_bijection_f(&rs, w).unwrap();
                assert!(boundary_noncrossing_d(&p), "{p:?}");
                assert_eq!(ar_bijection_g(&rs, &p).as_ref(), Ok(w), "{p:?}");
            }
        }
    }

    #[test]
    fn ar_rejects_crossing_partitions() {
        let rs = RootSystem::new(DynkinType::d(4));
        let crossing = DPartition::new(4, vec![vec![1, 3], vec![-1, -3], vec![2, -4], vec![-2, 4]]).unwrap();
        assert_eq!(ar_bijection_g(&rs, &crossing), Err(Error::NotInInterval));
        assert!(!is_noncrossing_d(&rs, &crossing));
    }

    #[test]
    fn conjugation_is_sigma_rho_in_type_d() {
        for n in [4, 5] {
            let report = coxeter_conjugation_is_sigma_rho(&RootSystem::new(DynkinType::d(n))).unwrap();
            assert!(report.passed(), "{:?}", report.failures);
        }
        let report = coxeter_conjugation_is_sigma_rho(&RootSystem::new(DynkinType::d(4))).unwrap();
        assert_eq!(report.checked, 50);
    }
}
