use serde::Serialize;

use crate::derived::DerivedModel;
use crate::error::Result;

use super::category::CategoryType;
use super::criterion::{count_thick_formula, enumerate_thick_indices, reduce_criterion};

/// One row of the overview of classifications.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    #[serde(rename = "type")]
    pub type_name: &'static str,
    pub condition: &'static str,
    pub classifying: &'static str,
    pub alternative: &'static str,
    pub count: &'static str,
}

const fn row(
    type_name: &'static str,
    condition: &'static str,
    classifying: &'static str,
    alternative: &'static str,
    count: &'static str,
) -> TableRow {
    TableRow { type_name, condition, classifying, alternative, count }
}

const COUNT_A: &str = "C_s if s = n+1; binom(2s,s) else";

pub fn overview_table() -> Vec<TableRow> {
    vec![
        row("(A_n,r,1)", "", "w in NC(A_n) with w = cox(A_n)^s w cox(A_n)^-s, s = gcd(n+1,r)",
            "elements of NC^A(n+1) invariant under rotation by s*2pi/(n+1), s = gcd(n+1,r)", COUNT_A),
        row("(A_n,r,2)", "n >= 3 odd", "w in NC(A_n) with w = cox(A_n)^s w cox(A_n)^-s, s = gcd(n+1,(n+1)/2+r)",
            "elements of NC^A(n+1) invariant under rotation by s*2pi/(n+1), s = gcd(n+1,(n+1)/2+r)", COUNT_A),
        row("(A_n,r,inf)", "n even", "w in NC(A_n) with w = cox(A_n)^s w cox(A_n)^-s, s = gcd(n+1,n/2+r)",
            "elements of NC^A(n+1) invariant under rotation by s*2pi/(n+1), s = gcd(n+1,n/2+r)", COUNT_A),
        row("(D_n,r,1)", "", "w in NC(D_n) with w = cox(D_n)^s w cox(D_n)^-s, s = gcd(2n-2,r)",
            "elements of NC^D(n) invariant under (sigma rho)^s, s = gcd(2n-2,r)",
            "Cat(D_n) if s = 2n-2 or s = n-1 odd; Cat(D_{n-1}) if s = n-1 even; binom(2p,p) else where p = gcd(n-1,s)"),
        row("(D_n,r,2)", "n odd", "w in NC(D_n) with w = cox(D_n)^s w cox(D_n)^-s, s = gcd(2n-2,(2n-2)/2+r)",
            "elements of NC^D(n) invariant under (sigma rho)^s, s = gcd(2n-2,(2n-2)/2+r)",
            "Cat(D_n) if s = 2n-2; Cat(D_{n-1}) if s = n-1; binom(2p,p) else where p = gcd(n-1,s)"),
        row("(D_n,r,2)", "n even", "",
            "elements of NC^D(n) invariant under sigma^(s+1) rho^s, s = r mod (2n-2)",
            "Cat(D_{n-1}) if s = 0 or s = n-1; binom(2p,p) else where p = gcd(n-1,s)"),
        row("(D_4,r,3)", "", "",
            "s = r mod 3; s = 0: six distinguished proper thick subcategories; s = 1,2: no proper ones",
            "8 if s = 0; 2 if s = 1,2"),
        row("(E_n,r,1)", "n = 6,7,8", "w in NC(E_n) with w = cox(E_n)^s w cox(E_n)^-s, s = gcd(h(E_n),r)", "", ""),
        row("(E_6,r,2)", "", "w in NC(E_6) with w = cox(E_6)^s w cox(E_6)^-s, s = gcd(12,r+6)", "", ""),
    ]
}

fn escape(cell: &str) -> String {
    cell.replace('|', "\\|")
}

/// The overview as a Markdown table.
pub fn overview_markdown() -> String {
    let mut out = String::from("| type | condition | classifying partitions | alternative description | number of partitions |\n");
    out.push_str("|---|---|---|---|---|\n");
    for r in overview_table() {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            r.type_name,
            r.condition,
            escape(r.classifying),
            escape(r.alternative),
            escape(r.count)
        ));
    }
    out
}

/// Closed-form, NC-level and brute-force counts for one type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    #[serde(rename = "type")]
    pub category: CategoryType,
    pub criterion: &'static str,
    pub s: u64,
    pub count_formula: Option<u128>,
    pub count_enumerated: usize,
    pub count_brute_force: usize,
    pub same_set: bool,
    pub agree: bool,
}

pub fn classification_report(ct: &CategoryType) -> Result<ClassificationReport> {
    let crit = reduce_criterion(ct);
    let enumerated = enumerate_thick_indices(ct)?;
    let brute = DerivedModel::shared(ct.delta()).brute_force_indices(ct)?;
    let formula = count_thick_formula(ct).ok();
    let same_set = enumerated == brute;
    let agree = same_set && formula.map_or(true, |f| f == brute.len() as u128);
    Ok(ClassificationReport {
        category: *ct,
        criterion: crit.name(),
        s: crit.s(),
        count_formula: formula,
        count_enumerated: enumerated.len(),
        count_brute_force: brute.len(),
        same_set,
        agree,
    })
}

/// Evaluates every admissible type on the grid `rank ≤ max_rank`,
/// `r ≤ 2h`.
pub fn evaluate_grid(max_rank: usize) -> Result<Vec<ClassificationReport>> {
    CategoryType::admissible(max_rank, |d| 2 * d.coxeter_number() as u64)
        .iter()
        .map(classification_report)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::Order;
    use crate::root_coxeter::DynkinType;

    #[test]
    fn table_cells() {
        let t = overview_table();
        assert_eq!(t.len(), 9);
        assert!(t[0].classifying.ends_with("s = gcd(n+1,r)"));
        assert!(t[8].classifying.ends_with("s = gcd(12,r+6)"));
        assert!(t[6].count.starts_with("8 if s = 0"));
        assert_eq!(overview_markdown().lines().count(), 11);
    }

    #[test]
    fn report_json() {
        let ct = CategoryType::new(DynkinType::a(5), 4, Order::One).unwrap();
        let rep = classification_report(&ct).unwrap();
        assert!(rep.agree);
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["criterion"], "cox_conjugation");
        assert_eq!(json["s"], 2);
        assert_eq!(json["count_brute_force"], 6);
        assert_eq!(json["type"]["rank"], 5);
    }
}
