//! Text and structured (JSON) reports.
//!
//! Structured schema, one document per run:
//!
//! ```text
//! { "schema": "lifts-report/1",
//!   "groups": [ { "name", "order",
//!     "primes": [ { "prime", "tier",
//!       "blocks": [ { "id", "irr", "ibr", "defect", "defect_group_order",
//!                     "defect_group_abelian", "defect_group_normal",
//!                     "v_order", "normalizer_order", "chain",
//!                     "phis": [ { "phi", "degree", "lifts", "irr_over",
//!                                 "c1", "c2", "c3", "c4", "witnesses" } ],
//!                     "verdicts", "potential_counterexample",
//!                     "failures", "notes" } ] } ] } ] }
//! ```
//!
//! Verdicts are `"pass"`, `"fail"` or `"not-applicable"`. A block with a
//! null `id` stands for a `(group, prime)` that failed or was skipped
//! before blocks existed; prime `0` marks a group that could not be built.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::record::{BlockOutcome, Tier, Verdict, VerificationRecord};
use crate::error::{Error, Result};

pub const SCHEMA: &str = "lifts-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub groups: Vec<GroupNode>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupNode {
    pub name: String,
    pub order: usize,
    pub primes: Vec<PrimeNode>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrimeNode {
    pub prime: u64,
    pub tier: Tier,
    pub blocks: Vec<BlockOutcome>,
}

impl Report {
    pub fn from_records(records: &[VerificationRecord]) -> Report {
        let mut groups: Vec<GroupNode> = Vec::new();
        for r in records {
            if groups.last().map(|g| (&g.name, g.order)) != Some((&r.group, r.order)) {
                groups.push(GroupNode { name: r.group.clone(), order: r.order, primes: Vec::new() });
            }
            let g = groups.last_mut().expect("group node");
            if g.primes.last().map(|p| (p.prime, p.tier)) != Some((r.prime, r.tier)) {
                g.primes.push(PrimeNode { prime: r.prime, tier: r.tier, blocks: Vec::new() });
            }
            g.primes.last_mut().expect("prime node").blocks.push(r.block.clone());
        }
        Report { schema: SCHEMA.into(), groups }
    }

    pub fn records(&self) -> Vec<VerificationRecord> {
        let mut out = Vec::new();
        for g in &self.groups {
            for p in &g.primes {
                for b in &p.blocks {
                    out.push(VerificationRecord {
                        group: g.name.clone(),
                        order: g.order,
                        prime: p.prime,
                        tier: p.tier,
                        block: b.clone(),
                    });
                }
            }
        }
        out
    }
}

pub fn render_structured(records: &[VerificationRecord]) -> String {
    let mut s = serde_json::to_string_pretty(&Report::from_records(records)).expect("report serializes");
    s.push('\n');
    s
}

pub fn parse_report(text: &str) -> Result<Vec<VerificationRecord>> {
    let report: Report = serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
    if report.schema != SCHEMA {
        return Err(Error::Parse { line: 1, msg: format!("unknown schema {:?}", report.schema) });
    }
    Ok(report.records())
}

fn flag(b: bool) -> char {
    if b {
        'T'
    } else {
        'F'
    }
}

fn approx(values: &[(f64, f64)]) -> String {
    values
        .iter()
        .map(|&(re, im)| {
            let re = if re.abs() < 5e-4 { 0.0 } else { re };
            if im.abs() < 5e-4 {
                format!("{:.3}", re)
            } else {
                format!("{:.3}{:+.3}i", re, im)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_text(records: &[VerificationRecord]) -> String {
    let mut s = String::new();
    for r in records {
        let b = &r.block;
        let _ = write!(s, "{} |G|={} p={} [{}] ", r.group, r.order, r.prime, r.tier.label());
        match b.id {
            None => {
                let _ = writeln!(s, "no blocks");
            }
            Some(id) => {
                let _ = writeln!(
                    s,
                    "block {}: |Irr|={} |IBr|={} defect={} |D|={}{}{} |V|={} |N_V(D)|={}",
                    id,
                    b.irr.len(),
                    b.ibr.len(),
                    b.defect,
                    b.defect_group_order,
                    if b.defect_group_abelian { " abelian" } else { " non-abelian" },
                    if b.defect_group_normal { " normal" } else { "" },
                    b.v_order,
                    b.normalizer_order,
                );
                let chain: Vec<String> = b
                    .chain
                    .iter()
                    .map(|st| format!("|T|={} alpha(1)={} index={}", st.group_order, st.alpha_degree, st.group_order / st.stabilizer_order))
                    .collect();
                let _ = writeln!(s, "  chain: {}", chain.join(" -> "));
                for f in &b.phis {
                    let _ = writeln!(
                        s,
                        "  phi{} deg={} |L|={} |Irr(G:phi)|={} C1={} C2={} C3={} C4={}  values: {}",
                        f.phi,
                        f.degree,
                        f.lifts,
                        f.irr_over,
                        flag(f.c1),
                        flag(f.c2),
                        flag(f.c3),
                        flag(f.c4),
                        approx(&f.approx)
                    );
                }
            }
        }
        let verdicts: Vec<String> = b.verdicts.named().iter().map(|(n, v)| format!("{}={}", n, v.label())).collect();
        let _ = writeln!(s, "  verdicts: {}", verdicts.join(" "));
        if b.potential_counterexample {
            let _ = writeln!(s, "  potential-counterexample");
        }
        for f in &b.failures {
            let _ = writeln!(s, "  failure: {}", f);
        }
        for n in &b.notes {
            let _ = writeln!(s, "  note: {}", n);
        }
    }
    let fails: usize = records.iter().map(VerificationRecord::fail_count).sum();
    let potential = records.iter().filter(|r| r.block.potential_counterexample).count();
    let applicable = records
        .iter()
        .flat_map(|r| r.block.verdicts.named())
        .filter(|(_, v)| *v != Verdict::NotApplicable)
        .count();
    let _ = writeln!(
        s,
        "summary: {} records, {} applicable verdicts, {} fail, {} potential-counterexample",
        records.len(),
        applicable,
        fails,
        potential
    );
    s
}

pub fn emit_report(records: &[VerificationRecord], path: impl AsRef<Path>, format: Format) -> Result<()> {
    let body = match format {
        Format::Text => render_text(records),
        Format::Structured => render_structured(records),
    };
    std::fs::write(path, body)?;
    Ok(())
}
