//! Report structs with a fixed serialization schema, plus the text / JSON /
//! CSV renderers for the count and terms commands.
//!
//! JSON key order follows the struct field order below and every value is
//! an exact integer, so parse + re-serialize round-trips byte for byte.

use serde::{Deserialize, Serialize};
use sixfold_core::{
    build_basis, class_count, composite_breakdown, count_summary, enumerate_terms, gamma,
    index_bounds, ResidueSide, Result, SieveTerm,
};

/// Output format selector shared by the rendering commands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LevelRow {
    pub side: String,
    pub q: u32,
    pub terms: u64,
    pub sum: u64,
    pub sign: i8,
}

/// The count command's payload: bounds, the five totals, level breakdown.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CountReport {
    pub m: u64,
    pub nu: u64,
    pub k: u64,
    pub r: u64,
    pub nu0: u64,
    pub k0: u64,
    pub p_plus: u64,
    pub pi_plus: u64,
    pub p_minus: u64,
    pub pi_minus: u64,
    pub pi_total: u64,
    pub levels: Vec<LevelRow>,
}

pub fn build_count_report(m: u64) -> Result<CountReport> {
    let bounds = index_bounds(m)?;
    let basis_plus = build_basis(m, ResidueSide::PlusOne)?;
    let summary = count_summary(m)?;
    let mut levels = Vec::new();
    for (side, rows) in [
        ("plus", &summary.levels_plus),
        ("minus", &summary.levels_minus),
    ] {
        for l in rows {
            levels.push(LevelRow {
                side: side.to_string(),
                q: l.q,
                terms: l.terms,
                sum: l.count_sum,
                sign: l.sign,
            });
        }
    }
    Ok(CountReport {
        m,
        nu: bounds.nu,
        k: bounds.k,
        r: bounds.r,
        nu0: basis_plus.nu0(),
        k0: basis_plus.k0(),
        p_plus: summary.p_plus,
        pi_plus: summary.pi_plus,
        p_minus: summary.p_minus,
        pi_minus: summary.pi_minus,
        pi_total: summary.pi_total,
        levels,
    })
}

pub fn render_count(report: &CountReport, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "m = {}: nu = {}, k = {}, r = {}, nu0 = {}, k0 = {}\n",
                report.m, report.nu, report.k, report.r, report.nu0, report.k0
            ));
            out.push_str(&format!(
                "P+ = {}, pi+ = {}, P- = {}, pi- = {}, pi = {}\n",
                report.p_plus, report.pi_plus, report.p_minus, report.pi_minus, report.pi_total
            ));
            out
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("count report serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out =
                String::from("m,nu,k,r,nu0,k0,p_plus,pi_plus,p_minus,pi_minus,pi_total\n");
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{}\n",
                report.m,
                report.nu,
                report.k,
                report.r,
                report.nu0,
                report.k0,
                report.p_plus,
                report.pi_plus,
                report.p_minus,
                report.pi_minus,
                report.pi_total
            ));
            out
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermRow {
    pub factors: Vec<u64>,
    pub d: u64,
    pub q: u32,
    pub s: u32,
    pub residue: i8,
    pub sign: i8,
    pub count: u64,
}

/// Per-level tally: enumerated class sizes against the binomial formulas.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LevelTallyRow {
    pub q: u32,
    pub gamma_minus: u64,
    pub gamma_plus: u64,
    pub gamma_minus_formula: u64,
    pub gamma_plus_formula: u64,
    pub sign: i8,
    pub subtotal: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermsReport {
    pub m: u64,
    pub side: String,
    pub limit: u64,
    pub max_q: Option<u32>,
    pub terms: Vec<TermRow>,
    pub levels: Vec<LevelTallyRow>,
    pub note: Option<String>,
}

pub fn build_terms_report(m: u64, side: ResidueSide, max_q: Option<u32>) -> Result<TermsReport> {
    let basis = build_basis(m, side)?;
    let breakdown = composite_breakdown(m, side)?;
    let mut terms: Vec<SieveTerm> = enumerate_terms(&basis);

    // Display order: by level, minus class before plus class, heavier
    // minus-prime content first, then lexicographic factors.
    terms.sort_by(|a, b| {
        (a.q, a.residue() == 1, std::cmp::Reverse(a.s), &a.factors).cmp(&(
            b.q,
            b.residue() == 1,
            std::cmp::Reverse(b.s),
            &b.factors,
        ))
    });

    let mut rows = Vec::new();
    for t in &terms {
        if max_q.is_some_and(|cap| t.q > cap) {
            continue;
        }
        let count = class_count(t.d, t.q, side, m)?;
        rows.push(TermRow {
            factors: t.factors.clone(),
            d: t.d,
            q: t.q,
            s: t.s,
            residue: t.residue(),
            sign: t.sign(),
            count,
        });
    }

    let mut levels = Vec::new();
    for l in &breakdown.levels {
        if max_q.is_some_and(|cap| l.q > cap) {
            continue;
        }
        let enumerated_minus = terms
            .iter()
            .filter(|t| t.q == l.q && t.residue() == -1)
            .count();
        let enumerated_plus = terms
            .iter()
            .filter(|t| t.q == l.q && t.residue() == 1)
            .count();
        let (gm, gp) = gamma(l.q, basis.nu0(), basis.k0())?;
        levels.push(LevelTallyRow {
            q: l.q,
            gamma_minus: enumerated_minus as u64,
            gamma_plus: enumerated_plus as u64,
            gamma_minus_formula: gm,
            gamma_plus_formula: gp,
            sign: l.sign,
            subtotal: l.count_sum,
        });
    }

    let note = basis.is_empty().then(|| "empty basis".to_string());
    Ok(TermsReport {
        m,
        side: side.to_string(),
        limit: basis.limit(),
        max_q,
        terms: rows,
        levels,
        note,
    })
}

fn joined_factors(row: &TermRow) -> String {
    row.factors
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

pub fn render_terms(report: &TermsReport, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = format!(
                "terms: m = {}, side = {}, limit = {} ({} terms)\n",
                report.m,
                report.side,
                report.limit,
                report.terms.len()
            );
            if let Some(note) = &report.note {
                out.push_str(&format!("note: {note}\n"));
            }
            if !report.terms.is_empty() {
                out.push_str(&format!(
                    "{:<18} {:>8} {:>3} {:>3} {:>4} {:>5} {:>8}\n",
                    "factors", "d", "q", "s", "res", "sign", "count"
                ));
                for row in &report.terms {
                    out.push_str(&format!(
                        "{:<18} {:>8} {:>3} {:>3} {:>4} {:>+5} {:>8}\n",
                        joined_factors(row),
                        row.d,
                        row.q,
                        row.s,
                        row.residue,
                        row.sign,
                        row.count
                    ));
                }
            }
            for l in &report.levels {
                out.push_str(&format!(
                    "q={}: gamma- {}/{}, gamma+ {}/{}, sign {:+}, subtotal {}\n",
                    l.q,
                    l.gamma_minus,
                    l.gamma_minus_formula,
                    l.gamma_plus,
                    l.gamma_plus_formula,
                    l.sign,
                    l.subtotal
                ));
            }
            out
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("terms report serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from("factors,d,q,s,residue,sign,count\n");
            for row in &report.terms {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    joined_factors(row),
                    row.d,
                    row.q,
                    row.s,
                    row.residue,
                    row.sign,
                    row.count
                ));
            }
            for l in &report.levels {
                out.push_str(&format!(
                    "gamma-={}/{};gamma+={}/{},,{},,,{},{}\n",
                    l.gamma_minus,
                    l.gamma_minus_formula,
                    l.gamma_plus,
                    l.gamma_plus_formula,
                    l.q,
                    l.sign,
                    l.subtotal
                ));
            }
            out
        }
    }
}
