//! Corpus ingestion, per-block theorem evaluation, reports and the
//! order-273 demonstration.

mod corpus;
mod demo;
mod record;
mod report;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use rayon::prelude::*;

pub use corpus::{load_corpus, parse_corpus, CorpusEntry};
pub use demo::{demo273, demo273_group, Demo273, F273_MULTIPLIER, F273_ROTATION};
pub use record::{verify_block, BlockOutcome, PhiFlags, Tier, Verdict, Verdicts, VerificationRecord};
pub use report::{emit_report, parse_report, render_structured, render_text, Format, Report, SCHEMA};

use crate::blocks::block_partition;
use crate::error::Error;
use crate::perm::{prime_factors, PermGroup, DEFAULT_ORDER_CAP};
use crate::session::Session;

#[derive(Debug, Clone)]
pub struct Options {
    /// Restrict every group to this prime.
    pub prime: Option<u64>,
    pub max_order: usize,
    pub jobs: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { prime: None, max_order: DEFAULT_ORDER_CAP, jobs: 1 }
    }
}

fn primes_for(entry: &CorpusEntry, order: usize, only: Option<u64>) -> Vec<u64> {
    let mut primes = match only {
        Some(p) => vec![p],
        None if entry.primes.is_empty() => prime_factors(order as u64),
        None => entry.primes.clone(),
    };
    primes.retain(|&p| (order as u64).is_multiple_of(p));
    primes.sort_unstable();
    primes
}

fn record(entry: &CorpusEntry, g: &PermGroup, p: u64, tier: Tier, block: BlockOutcome) -> VerificationRecord {
    VerificationRecord { group: entry.name.clone(), order: g.order(), prime: p, tier, block }
}

fn panic_message(e: Box<dyn std::any::Any + Send>) -> String {
    e.downcast_ref::<String>()
        .cloned()
        .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "panic".into())
}

/// All records for one group at one prime.
pub fn verify_prime(entry: &CorpusEntry, g: &Arc<PermGroup>, p: u64) -> Vec<VerificationRecord> {
    let tier = Tier::of(g, p);
    if tier == Tier::NotPSolvable {
        return vec![record(entry, g, p, tier, BlockOutcome::skipped(format!("not {}-solvable", p)))];
    }
    let run = || -> crate::Result<Vec<VerificationRecord>> {
        let session = Session::new();
        let g = session.intern_arc(g);
        let bs = session.brauer(&g, p)?;
        Ok(block_partition(&bs)
            .iter()
            .enumerate()
            .map(|(i, b)| record(entry, &g, p, tier, verify_block(&session, &bs, b, i, tier)))
            .collect())
    };
    match catch_unwind(AssertUnwindSafe(run)) {
        Ok(Ok(records)) => records,
        Ok(Err(e)) => vec![record(entry, g, p, tier, BlockOutcome::failed(e.to_string()))],
        Err(e) => vec![record(entry, g, p, tier, BlockOutcome::failed(format!("panic: {}", panic_message(e))))],
    }
}

fn build(entry: &CorpusEntry, opts: &Options) -> std::result::Result<Arc<PermGroup>, Box<VerificationRecord>> {
    match entry.build(opts.max_order) {
        Ok(g) => Ok(Arc::new(g)),
        Err(e) => {
            let block = match e {
                Error::OrderCapExceeded { .. } => BlockOutcome::skipped(e.to_string()),
                _ => BlockOutcome::failed(e.to_string()),
            };
            Err(Box::new(VerificationRecord { group: entry.name.clone(), order: 0, prime: 0, tier: Tier::NotPSolvable, block }))
        }
    }
}

/// Records for one corpus entry in canonical order: prime, then block.
pub fn verify_group(entry: &CorpusEntry, opts: &Options) -> Vec<VerificationRecord> {
    match build(entry, opts) {
        Ok(g) => primes_for(entry, g.order(), opts.prime).into_iter().flat_map(|p| verify_prime(entry, &g, p)).collect(),
        Err(r) => vec![*r],
    }
}

/// Verifies every entry. `(group, prime)` tasks run on `opts.jobs`
/// threads; the output order does not depend on scheduling.
pub fn verify_corpus(entries: &[CorpusEntry], opts: &Options) -> Vec<VerificationRecord> {
    let groups: Vec<_> = entries.iter().map(|e| (e, build(e, opts))).collect();
    let mut tasks = Vec::new();
    let mut early: Vec<(usize, VerificationRecord)> = Vec::new();
    for (i, (entry, g)) in groups.iter().enumerate() {
        match g {
            Ok(g) => tasks.extend(primes_for(entry, g.order(), opts.prime).into_iter().map(|p| (i, *entry, g.clone(), p))),
            Err(r) => early.push((i, (**r).clone())),
        }
    }
    let run = || -> Vec<(usize, Vec<VerificationRecord>)> {
        tasks.par_iter().map(|(i, e, g, p)| (*i, verify_prime(e, g, *p))).collect()
    };
    let done = match rayon::ThreadPoolBuilder::new().num_threads(opts.jobs.max(1)).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    let mut by_entry: Vec<Vec<VerificationRecord>> = vec![Vec::new(); entries.len()];
    for (i, r) in early {
        by_entry[i].push(r);
    }
    for (i, rs) in done {
        by_entry[i].extend(rs);
    }
    by_entry.into_iter().flatten().collect()
}

pub fn fail_count(records: &[VerificationRecord]) -> usize {
    records.iter().map(VerificationRecord::fail_count).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(name: &str, degree: usize, gens: &[&str]) -> CorpusEntry {
        CorpusEntry { name: name.into(), degree, generators: gens.iter().map(|s| s.to_string()).collect(), primes: vec![] }
    }

    #[test]
    fn trivial_group_has_no_records() {
        assert!(verify_group(&entry("1", 3, &[]), &Options::default()).is_empty());
    }

    #[test]
    fn s3_records() {
        let rs = verify_group(&entry("S3", 3, &["(1 2 3)", "(1 2)"]), &Options::default());
        let shape: Vec<(u64, Option<usize>)> = rs.iter().map(|r| (r.prime, r.block.id)).collect();
        assert_eq!(shape, vec![(2, Some(0)), (2, Some(1)), (3, Some(0))]);
        assert!(rs.iter().all(|r| r.block.defect_group_abelian && r.tier == Tier::Solvable));
        assert_eq!(fail_count(&rs), 0, "{:#?}", rs);
    }

    #[test]
    fn c4_all_flags_true() {
        let rs = verify_group(&entry("C4", 4, &["(1 2 3 4)"]), &Options::default());
        assert_eq!(rs.len(), 1);
        let f = &rs[0].block.phis[0];
        assert_eq!((f.lifts, f.irr_over), (4, 4));
        assert!(f.c1 && f.c2 && f.c3 && f.c4);
        assert_eq!(rs[0].block.verdicts.orbit_counts, Verdict::Pass);
        assert_eq!(rs[0].block.verdicts.unique_brauer, Verdict::Pass);
    }

    #[test]
    fn f21_nonprincipal_flags_false() {
        let rs = verify_group(&entry("F21", 7, &["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"]), &Options { prime: Some(7), ..Default::default() });
        assert_eq!(rs.len(), 1);
        let b = &rs[0].block;
        let nontrivial_linear: Vec<_> = b.phis.iter().filter(|f| f.degree == 1 && f.phi != 0).collect();
        assert!(!nontrivial_linear.is_empty());
        for f in nontrivial_linear {
            assert_eq!((f.lifts, f.irr_over), (1, 3));
            assert!(!f.c1 && !f.c2 && !f.c3 && !f.c4);
        }
        assert_eq!(fail_count(&rs), 0);
    }

    #[test]
    fn cap_and_prime_filter() {
        let e = entry("S4", 4, &["(1 2 3 4)", "(1 2)"]);
        let rs = verify_group(&e, &Options { max_order: 10, ..Default::default() });
        assert_eq!(rs.len(), 1);
        assert_eq!(rs[0].block.verdicts.kb_bound, Verdict::NotApplicable);
        assert!(verify_group(&e, &Options { prime: Some(5), ..Default::default() }).is_empty());
    }

    #[test]
    fn non_p_solvable_prime_is_not_applicable() {
        let e = entry("A5", 5, &["(1 2 3 4 5)", "(1 2 3)"]);
        let rs = verify_group(&e, &Options { prime: Some(2), ..Default::default() });
        assert_eq!(rs.len(), 1);
        assert_eq!(rs[0].tier, Tier::NotPSolvable);
        assert_eq!(fail_count(&rs), 0);
    }

    #[test]
    fn parallel_matches_serial() {
        let es = vec![entry("S3", 3, &["(1 2 3)", "(1 2)"]), entry("D8", 4, &["(1 2 3 4)", "(1 3)"])];
        let a = verify_corpus(&es, &Options::default());
        let b = verify_corpus(&es, &Options { jobs: 4, ..Default::default() });
        assert_eq!(a, b);
    }
}
