//! The cross-check battery behind `thicket verify`.

use crate::classifier::{classification_report, CategoryType};
use crate::derived::{phi, phi_triality, DerivedModel, VertexMap};
use crate::error::Result;
use crate::ncp::{
    ar_bijection_f, ar_bijection_g, binomial, brady_f, brady_g, catalan, construct_fiber, coxeter_conjugation_is_sigma_rho,
    enumerate_nc_a, kreweras_alpha, project_f, rotate_a,
};
use crate::render::{circle_geometry_a, render_circle_a, CircleStyle};
use crate::report::CheckReport;
use crate::root_coxeter::{DynkinType, RootSystem, Series};

/// Degrees of the basic invariants.
pub fn degrees(delta: DynkinType) -> Vec<u64> {
    let n = delta.rank() as u64;
    match delta.series() {
        Series::A => (2..=n + 1).collect(),
        Series::D => (1..n).map(|k| 2 * k).chain([n]).collect(),
        Series::E => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
    }
}

/// `∏ (h + d_i) / d_i`, the size of the noncrossing interval.
pub fn coxeter_catalan(delta: DynkinType) -> u128 {
    let h = delta.coxeter_number() as u128;
    let ds = degrees(delta);
    let num: u128 = ds.iter().map(|&d| h + d as u128).product();
    let den: u128 = ds.iter().map(|&d| d as u128).product();
    num / den
}

/// Dynkin types of rank at most `max_rank`; E types only up to `e_cap`.
pub fn dynkin_types(max_rank: usize, e_cap: usize) -> Vec<DynkinType> {
    let mut v: Vec<DynkinType> = (1..=max_rank).map(DynkinType::a).collect();
    v.extend((4..=max_rank).map(DynkinType::d));
    v.extend((6..=max_rank.min(e_cap).min(8)).map(DynkinType::e));
    v
}

fn root_checks(delta: DynkinType, out: &mut Vec<CheckReport>) {
    let rs = RootSystem::new(delta);
    let nc = rs.enumerate_nc();
    let mut r = CheckReport::new(format!("{delta}: interval size and cox order"));
    r.record(nc.len() as u128 == coxeter_catalan(delta), || format!("|NC| = {}", nc.len()));
    r.record(rs.coxeter_element().order(64) == Some(delta.coxeter_number()), || "order of cox".into());
    for w in nc.iter() {
        let c = rs.conjugate_by_cox(w, 1);
        r.record(nc.contains(&c), || format!("{w:?} conjugate leaves the interval"));
    }
    out.push(r);
}

fn partition_checks(max_rank: usize, out: &mut Vec<CheckReport>) {
    let top = (max_rank + 1).min(10);
    let mut r = CheckReport::new("rotation-invariant noncrossing partitions");
    for h in 1..=top {
        let all = enumerate_nc_a(h);
        r.record(all.len() as u128 == catalan(h), || format!("|NC^A({h})| = {}", all.len()));
        for s in 1..h {
            if h % s == 0 {
                let count = all.iter().filter(|p| rotate_a(p, s as i64) == **p).count() as u128;
                r.record(count == binomial(2 * s, s), || format!("h = {h}, s = {s}: {count}"));
            }
        }
    }
    out.push(r);

    let mut r = CheckReport::new("Kreweras complement");
    for n in 1..=top.min(7) {
        for p in enumerate_nc_a(n) {
            let ok = kreweras_alpha(&p).map(|a| a.num_blocks() == n + 1 - p.num_blocks()).unwrap_or(false);
            r.record(ok, || format!("{p:?}"));
        }
    }
    out.push(r);

    let mut r = CheckReport::new("fibers over rotation quotients");
    for (s, x) in [(2, 2), (2, 3), (3, 2), (4, 2)] {
        if s * x > top + 2 {
            continue;
        }
        let mut union = Vec::new();
        for w in enumerate_nc_a(s) {
            let fiber = construct_fiber(&w, x).unwrap_or_default();
            r.record(fiber.len() == s + 1, || format!("s = {s}, x = {x}: fiber of size {}", fiber.len()));
            for p in &fiber {
                r.record(project_f(p, s).ok().as_ref() == Some(&w), || format!("{p:?} projects elsewhere"));
            }
            union.extend(fiber);
        }
        let mut invariant: Vec<_> = enumerate_nc_a(s * x).into_iter().filter(|p| rotate_a(p, s as i64) == *p).collect();
        union.sort_by_key(|p| format!("{p:?}"));
        invariant.sort_by_key(|p| format!("{p:?}"));
        r.record(union == invariant, || format!("s = {s}, x = {x}: union differs"));
    }
    out.push(r);
}

fn bijection_checks(delta: DynkinType, out: &mut Vec<CheckReport>) -> Result<()> {
    let rs = RootSystem::new(delta);
    match delta.series() {
        Series::A => {
            let mut r = CheckReport::new(format!("{delta}: Brady bijection and rotation"));
            for w in rs.enumerate_nc().iter() {
                let p = brady_f(&rs, w)?;
                r.record(&brady_g(&rs, &p)? == w, || format!("{p:?}"));
                let conj = brady_f(&rs, &rs.conjugate_by_cox(w, 1))?;
                r.record(conj == rotate_a(&p, 1), || format!("{p:?}: conjugation is not rotation"));
            }
            out.push(r);
        }
        Series::D if delta.rank() <= 5 => {
            let mut r = CheckReport::new(format!("{delta}: Athanasiadis-Reiner bijection"));
            for w in rs.enumerate_nc().iter() {
                let p = ar_bijection_f(&rs, w)?;
                r.record(&ar_bijection_g(&rs, &p)? == w, || format!("{p:?}"));
            }
            out.push(r);
            out.push(coxeter_conjugation_is_sigma_rho(&rs)?);
            out.push(DerivedModel::shared(delta).phi_fixes_sigma_on_nc()?);
        }
        _ => {}
    }
    Ok(())
}

fn derived_checks(delta: DynkinType, out: &mut Vec<CheckReport>) {
    let model = DerivedModel::shared(delta);
    let walk = model.walk();
    let rs = model.root_system();
    let h = delta.coxeter_number() as i64;
    let n = delta.rank();

    let mut r = CheckReport::new(format!("{delta}: label layers"));
    for k in -2..3 {
        let mut layer: Vec<usize> =
            walk.window(-3 * h, 3 * h).map(|v| walk.label(v)).filter(|l| l.shift == k).map(|l| l.root).collect();
        layer.sort_unstable();
        r.record(layer == (0..rs.positives().len()).collect::<Vec<_>>(), || format!("shift {k}"));
    }
    out.push(r);

    let mut r = CheckReport::new(format!("{delta}: S^2 = tau^h"));
    let s2 = walk.suspension().pow(2);
    r.record(s2.same_action(&VertexMap::tau_pow(n, h)), || {
        let opposite = s2.same_action(&VertexMap::tau_pow(n, -h));
        format!("S^2 = tau^{} instead", if opposite { -h } else { 0 })
    });
    out.push(r);

    let mut r = CheckReport::new(format!("{delta}: order of phi"));
    let id = VertexMap::identity(n);
    match (delta.series(), phi(&delta)) {
        (Series::A, Some(p)) if n % 2 == 0 => r.record(p.pow(2).same_action(&VertexMap::tau_pow(n, 1)), || "phi^2".into()),
        (_, Some(p)) if n > 1 => r.record(p.pow(2).same_action(&id) && !p.same_action(&id), || "phi^2".into()),
        _ => {}
    }
    if delta == DynkinType::d(4) {
        let t = phi_triality();
        r.record(t.pow(3).same_action(&id) && !t.same_action(&id), || "triality^3".into());
    }
    if r.checked > 0 {
        out.push(r);
    }

    if n <= 4 {
        out.push(model.tau_equivariance());
    }
    for m in [1, 2] {
        out.push(model.cluster_category_check(m));
    }
}

fn classification_checks(max_rank: usize, e_cap: usize, out: &mut Vec<CheckReport>) -> Result<()> {
    let mut grid = CheckReport::new("classification: formula, NC criterion and brute force agree");
    let mut coprime = CheckReport::new("classification: coprime collapse");
    let types = CategoryType::admissible(max_rank, |d| 2 * d.coxeter_number() as u64);
    for ct in types.into_iter().filter(|ct| ct.delta().series() != Series::E || ct.delta().rank() <= e_cap) {
        let rep = match classification_report(&ct) {
            Ok(rep) => rep,
            // excluded from the criterion
            Err(_) => continue,
        };
        grid.record(rep.agree, || {
            format!(
                "{ct}: formula {:?}, enumerated {}, brute force {}, same set {}",
                rep.count_formula, rep.count_enumerated, rep.count_brute_force, rep.same_set
            )
        });
        if rep.s == 1 && rep.criterion == "cox_conjugation" {
            coprime.record(rep.count_brute_force == 2, || format!("{ct}: {}", rep.count_brute_force));
        }
    }
    out.push(grid);
    out.push(coprime);
    Ok(())
}

fn render_checks(out: &mut Vec<CheckReport>) {
    let style = CircleStyle::default();
    let mut r = CheckReport::new("render: deterministic and rotation-equivariant");
    for p in enumerate_nc_a(5) {
        r.record(render_circle_a(&p, &style) == render_circle_a(&p, &style), || format!("{p:?}"));
        let a = circle_geometry_a(&rotate_a(&p, 1), &style);
        let b = circle_geometry_a(&p, &style);
        r.record(a.chords.len() == b.chords.len() && a.polygons.len() == b.polygons.len(), || format!("{p:?}"));
    }
    out.push(r);
}

/// Runs every check for Dynkin types of rank at most `max_rank`, with E
/// types capped at rank `e_cap`.
pub fn run_battery(max_rank: usize, e_cap: usize) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for delta in dynkin_types(max_rank, e_cap) {
        root_checks(delta, &mut out);
        bijection_checks(delta, &mut out)?;
        derived_checks(delta, &mut out);
    }
    partition_checks(max_rank, &mut out);
    classification_checks(max_rank, e_cap, &mut out)?;
    render_checks(&mut out);
    Ok(out)
}
