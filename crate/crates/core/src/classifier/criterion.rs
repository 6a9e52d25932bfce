use serde::Serialize;

use crate::derived::{DerivedModel, ThickDescriptor, VertexMap, phi_triality};
use crate::error::{Error, Result};
use crate::ncp::{ar_bijection_f, binomial, catalan, rho_pow, sigma_pow};
use crate::root_coxeter::{GroupElement, RootSystem, Series};

use super::category::{CategoryType, Order};

/// How invariance of an interval element is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "mode", content = "s", rename_all = "snake_case")]
pub enum InvarianceCriterion {
    /// `cox^s · w · cox^{-s} = w`.
    CoxConjugation(u64),
    /// `σ^{s+1} ρ^s` fixes the D-partition of `w`.
    SigmaRhoPower(u64),
    /// Invariance under the triality composed with `τ^s`, decided on `ZD_4`.
    D4Triality(u64),
}

impl InvarianceCriterion {
    pub fn name(&self) -> &'static str {
        match self {
            InvarianceCriterion::CoxConjugation(_) => "cox_conjugation",
            InvarianceCriterion::SigmaRhoPower(_) => "sigma_rho_power",
            InvarianceCriterion::D4Triality(_) => "d4_triality",
        }
    }

    pub fn s(&self) -> u64 {
        match *self {
            InvarianceCriterion::CoxConjugation(s)
            | InvarianceCriterion::SigmaRhoPower(s)
            | InvarianceCriterion::D4Triality(s) => s,
        }
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn is_excluded(ct: &CategoryType) -> bool {
    let d = ct.delta();
    (d.series() == Series::D && d.rank() % 2 == 0 && ct.t() == Order::Two) || ct.t() == Order::Three
}

/// `p = r` for `t = 1`, `h/2 + r` for `(A_odd, r, 2)`, `(D_odd, r, 2)`,
/// `(E_6, r, 2)`, and `m/2 + r` for `(A_even, r, ∞)`.
pub fn parameter_p(ct: &CategoryType) -> Result<u64> {
    if is_excluded(ct) {
        return Err(Error::ExcludedType(ct.to_string()));
    }
    let d = ct.delta();
    let (h, m) = (d.coxeter_number() as u64, d.m() as u64);
    Ok(match ct.t() {
        Order::One => ct.r(),
        Order::Two => h / 2 + ct.r(),
        Order::Infinite => m / 2 + ct.r(),
        Order::Three => unreachable!("excluded above"),
    })
}

pub fn reduce_criterion(ct: &CategoryType) -> InvarianceCriterion {
    let h = ct.delta().coxeter_number() as u64;
    match parameter_p(ct) {
        Ok(p) => InvarianceCriterion::CoxConjugation(gcd(h, p)),
        Err(_) if ct.t() == Order::Three => InvarianceCriterion::D4Triality(ct.r() % 3),
        Err(_) => InvarianceCriterion::SigmaRhoPower(ct.r() % h),
    }
}

/// Decides invariance of `w ∈ [id, cox]` under `crit`.
pub fn is_invariant_nc(rs: &RootSystem, w: &GroupElement, crit: InvarianceCriterion) -> Result<bool> {
    if !rs.in_nc(w) {
        return Err(Error::NotInInterval);
    }
    match crit {
        InvarianceCriterion::CoxConjugation(s) => Ok(&rs.conjugate_by_cox(w, s as i64) == w),
        InvarianceCriterion::SigmaRhoPower(s) => {
            let p = ar_bijection_f(rs, w)?;
            Ok(sigma_pow(&rho_pow(&p, s as i64), s as i64 + 1) == p)
        }
        InvarianceCriterion::D4Triality(s) => {
            if rs.delta().series() != Series::D || rs.rank() != 4 {
                return Err(Error::WrongSeries { expected: 'D', actual: rs.delta().series().letter() });
            }
            let model = DerivedModel::shared(rs.delta());
            let g = phi_triality().compose(&VertexMap::tau_pow(4, s as i64));
            let i = model.interval().position(w).ok_or(Error::NotInInterval)?;
            Ok(model.image_index(i, &g) == Some(i))
        }
    }
}

/// Interval positions selected by the NC-level criterion of `ct`.
pub fn enumerate_thick_indices(ct: &CategoryType) -> Result<Vec<usize>> {
    let model = DerivedModel::shared(ct.delta());
    let crit = reduce_criterion(ct);
    let rs = model.root_system();
    let mut out = Vec::new();
    for (i, w) in model.interval().iter().enumerate() {
        if is_invariant_nc(rs, w, crit)? {
            out.push(i);
        }
    }
    Ok(out)
}

/// Thick subcategories of a category of type `ct`, found at the level of
/// noncrossing partitions.
pub fn enumerate_thick(ct: &CategoryType) -> Result<Vec<ThickDescriptor>> {
    let model = DerivedModel::shared(ct.delta());
    Ok(enumerate_thick_indices(ct)?.into_iter().map(|i| model.descriptors()[i].clone()).collect())
}

/// `|NC_{D_n}| = binom(2n, n) - binom(2n-2, n-1)`.
pub fn catalan_d(n: usize) -> u128 {
    binomial(2 * n, n) - binomial(2 * n - 2, n - 1)
}

fn central_binomial(p: u64) -> u128 {
    binomial(2 * p as usize, p as usize)
}

/// Closed-form count, including the zero and the whole category.
pub fn count_thick_formula(ct: &CategoryType) -> Result<u128> {
    let d = ct.delta();
    let n = d.rank() as u64;
    let h = d.coxeter_number() as u64;
    match (d.series(), reduce_criterion(ct)) {
        (Series::E, _) => Err(Error::NoClosedForm('E')),
        (Series::A, InvarianceCriterion::CoxConjugation(s)) => {
            Ok(if s == h { catalan(s as usize) } else { central_binomial(s) })
        }
        (Series::D, InvarianceCriterion::CoxConjugation(s)) => {
            let p = gcd(n - 1, s);
            Ok(match ct.t() {
                Order::One if s == h || (s == n - 1 && s % 2 == 1) => catalan_d(n as usize),
                Order::One if s == n - 1 => catalan_d(n as usize - 1),
                Order::Two if s == h => catalan_d(n as usize),
                Order::Two if s == n - 1 => catalan_d(n as usize - 1),
                _ => central_binomial(p),
            })
        }
        (Series::D, InvarianceCriterion::SigmaRhoPower(s)) => {
            Ok(if s == 0 || s == n - 1 { catalan_d(n as usize - 1) } else { central_binomial(gcd(n - 1, s)) })
        }
        (Series::D, InvarianceCriterion::D4Triality(s)) => Ok(if s == 0 { 8 } else { 2 }),
        (series, crit) => unreachable!("{series:?} with {crit:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_coxeter::DynkinType;

    fn ct(delta: DynkinType, r: u64, t: Order) -> CategoryType {
        CategoryType::new(delta, r, t).unwrap()
    }

    #[test]
    fn parameter_examples() {
        assert_eq!(parameter_p(&ct(DynkinType::a(5), 4, Order::One)), Ok(4));
        assert_eq!(parameter_p(&ct(DynkinType::d(5), 14, Order::Two)), Ok(18));
        assert_eq!(parameter_p(&ct(DynkinType::a(4), 3, Order::Infinite)), Ok(5));
        assert!(matches!(parameter_p(&ct(DynkinType::d(6), 7, Order::Two)), Err(Error::ExcludedType(_))));
        assert!(matches!(parameter_p(&ct(DynkinType::d(4), 1, Order::Three)), Err(Error::ExcludedType(_))));
    }

    #[test]
    fn criterion_examples() {
        assert_eq!(reduce_criterion(&ct(DynkinType::a(5), 4, Order::One)), InvarianceCriterion::CoxConjugation(2));
        assert_eq!(reduce_criterion(&ct(DynkinType::d(6), 7, Order::Two)), InvarianceCriterion::SigmaRhoPower(7));
        assert_eq!(reduce_criterion(&ct(DynkinType::d(4), 6, Order::Three)), InvarianceCriterion::D4Triality(0));
        assert_eq!(reduce_criterion(&ct(DynkinType::e(6), 6, Order::Two)), InvarianceCriterion::CoxConjugation(12));
    }

    #[test]
    fn criterion_json() {
        let json = serde_json::to_string(&InvarianceCriterion::CoxConjugation(2)).unwrap();
        assert_eq!(json, r#"{"mode":"cox_conjugation","s":2}"#);
    }

    #[test]
    fn trivial_elements_always_invariant() {
        let rs = RootSystem::new(DynkinType::a(4));
        for s in 0..5 {
            let c = InvarianceCriterion::CoxConjugation(s);
            assert_eq!(is_invariant_nc(&rs, &GroupElement::identity(4), c), Ok(true));
            assert_eq!(is_invariant_nc(&rs, rs.coxeter_element(), c), Ok(true));
        }
        let outside = rs.coxeter_element().pow(2);
        assert_eq!(is_invariant_nc(&rs, &outside, InvarianceCriterion::CoxConjugation(1)), Err(Error::NotInInterval));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_thick(&ct(DynkinType::a(5), 4, Order::One)).unwrap().len(), 6);
        assert_eq!(enumerate_thick(&ct(DynkinType::d(5), 14, Order::Two)).unwrap().len(), 6);
        assert_eq!(enumerate_thick(&ct(DynkinType::e(6), 1, Order::One)).unwrap().len(), 2);
    }

    #[test]
    fn formula_examples() {
        assert_eq!(count_thick_formula(&ct(DynkinType::a(5), 4, Order::One)), Ok(6));
        assert_eq!(count_thick_formula(&ct(DynkinType::d(5), 14, Order::Two)), Ok(6));
        assert_eq!(count_thick_formula(&ct(DynkinType::d(4), 8, Order::One)), Ok(2));
        assert_eq!(count_thick_formula(&ct(DynkinType::d(4), 3, Order::Three)), Ok(8));
        assert_eq!(count_thick_formula(&ct(DynkinType::e(6), 3, Order::One)), Err(Error::NoClosedForm('E')));
        assert_eq!(catalan_d(4), 50);
        assert_eq!(catalan_d(5), 182);
        assert_eq!(catalan_d(6), 672);
    }

    #[test]
    fn coprime_collapse() {
        for n in 1..=5 {
            let h = n as u64 + 1;
            for r in (1..=2 * h).filter(|&r| gcd(h, r) == 1) {
                assert_eq!(enumerate_thick(&ct(DynkinType::a(n), r, Order::One)).unwrap().len(), 2);
            }
        }
    }
}
