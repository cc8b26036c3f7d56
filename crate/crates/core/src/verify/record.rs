//! Verification records and the per-block evaluation.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::blocks::{irr_orbit, Block, Restriction};
use crate::brauer::BrauerSystem;
use crate::chartab::inertia_group;
use crate::error::{Error, Result};
use crate::fong::{fong_pair, induction_bijection_check, FongPair, FongStep};
use crate::glauberman::normalizer_transfer_check;
use crate::perm::{PermGroup, Solvability};
use crate::session::Session;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "n/a",
        }
    }
}

/// Solvability of `G` relative to the prime under study.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tier {
    Solvable,
    PSolvable,
    NotPSolvable,
}

impl Tier {
    pub fn of(g: &PermGroup, p: u64) -> Tier {
        match g.solvability() {
            Solvability::Solvable => Tier::Solvable,
            s if s.is_p_solvable_for(p, g.order()) => Tier::PSolvable,
            _ => Tier::NotPSolvable,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Tier::Solvable => "solvable",
            Tier::PSolvable => "p-solvable",
            Tier::NotPSolvable => "not-p-solvable",
        }
    }
}

/// Theorem checks for one block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    /// `C1 = C2 = C3` for every `phi`.
    pub lift_count_equivalence: Verdict,
    /// `C1 <=> C4` in solvable groups, `C4 => C1` otherwise.
    pub central_criterion: Verdict,
    /// `C4`, or `C3` with abelian `D`, forces `IBr(B) = {phi}` and
    /// `Irr(B) = L_phi`.
    pub unique_brauer: Verdict,
    /// `|Irr(B)| <= |D|`.
    pub kb_bound: Verdict,
    /// `|L_phi ∩ Irr(G|delta)| = |G:G_delta|` for normal abelian `D`.
    pub orbit_counts: Verdict,
    pub induction_bijection: Verdict,
    pub normalizer_transfer: Verdict,
}

impl Verdicts {
    pub fn all(v: Verdict) -> Self {
        Verdicts {
            lift_count_equivalence: v,
            central_criterion: v,
            unique_brauer: v,
            kb_bound: v,
            orbit_counts: v,
            induction_bijection: v,
            normalizer_transfer: v,
        }
    }

    pub fn named(&self) -> [(&'static str, Verdict); 7] {
        [
            ("lift-count-equivalence", self.lift_count_equivalence),
            ("central-criterion", self.central_criterion),
            ("unique-brauer", self.unique_brauer),
            ("kb-bound", self.kb_bound),
            ("orbit-counts", self.orbit_counts),
            ("induction-bijection", self.induction_bijection),
            ("normalizer-transfer", self.normalizer_transfer),
        ]
    }

    pub fn fail_count(&self) -> usize {
        self.named().iter().filter(|(_, v)| *v == Verdict::Fail).count()
    }
}

/// Flags for one irreducible Brauer character.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhiFlags {
    pub phi: usize,
    pub degree: u64,
    pub lifts: usize,
    pub irr_over: usize,
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
    pub c4: bool,
    /// Witnesses in `IBr(N_V(D))` from the normalizer transfer.
    pub witnesses: Vec<usize>,
    /// Values on p-regular classes, for text reports only.
    #[serde(skip)]
    pub approx: Vec<(f64, f64)>,
}

/// Outcome for one block, or for a whole `(group, prime)` when `id` is
/// `None` and the computation failed before blocks existed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockOutcome {
    pub id: Option<usize>,
    pub irr: Vec<usize>,
    pub ibr: Vec<usize>,
    pub defect: u32,
    pub defect_group_order: usize,
    pub defect_group_abelian: bool,
    pub defect_group_normal: bool,
    pub v_order: usize,
    pub normalizer_order: usize,
    pub chain: Vec<FongStep>,
    pub phis: Vec<PhiFlags>,
    pub verdicts: Verdicts,
    pub potential_counterexample: bool,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl BlockOutcome {
    pub fn failed(msg: String) -> Self {
        Self::empty(Verdicts::all(Verdict::Fail), vec![msg], Vec::new())
    }

    pub fn skipped(note: String) -> Self {
        Self::empty(Verdicts::all(Verdict::NotApplicable), Vec::new(), vec![note])
    }

    fn empty(verdicts: Verdicts, failures: Vec<String>, notes: Vec<String>) -> Self {
        BlockOutcome {
            id: None,
            irr: Vec::new(),
            ibr: Vec::new(),
            defect: 0,
            defect_group_order: 0,
            defect_group_abelian: false,
            defect_group_normal: false,
            v_order: 0,
            normalizer_order: 0,
            chain: Vec::new(),
            phis: Vec::new(),
            verdicts,
            potential_counterexample: false,
            failures,
            notes,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub group: String,
    pub order: usize,
    pub prime: u64,
    pub tier: Tier,
    pub block: BlockOutcome,
}

impl VerificationRecord {
    pub fn fail_count(&self) -> usize {
        self.block.verdicts.fail_count()
    }
}

fn is_central_in(d: &PermGroup, h: &PermGroup) -> bool {
    d.generators().iter().all(|x| h.generators().iter().all(|y| x.compose(y) == y.compose(x)))
}

/// `|L_phi ∩ Irr(G|delta)| = |G:G_delta|` for one representative per
/// `G`-orbit on `Irr(D)`.
fn orbit_counts_hold(session: &Session, bs: &BrauerSystem, d: &Arc<PermGroup>, phi: usize) -> Result<bool> {
    let g = bs.group();
    let td = session.table(d)?;
    let res = Restriction::compute(bs.table(), &td)?;
    let lifts = bs.lifts_of(phi);
    let mut seen = BTreeSet::new();
    for delta in 0..td.len() {
        if seen.contains(&delta) {
            continue;
        }
        seen.extend(irr_orbit(g, &td, delta)?);
        let stab = inertia_group(g, d, &td.character(delta))?;
        let over = lifts.iter().filter(|&&chi| res.lies_over(chi, delta)).count();
        if over != g.order() / stab.order() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs every check on one block. Errors from any stage are recorded in
/// the outcome and never propagate.
pub fn verify_block(session: &Session, bs: &Arc<BrauerSystem>, block: &Block, id: usize, tier: Tier) -> BlockOutcome {
    let mut out = BlockOutcome::empty(Verdicts::all(Verdict::NotApplicable), Vec::new(), Vec::new());
    out.id = Some(id);
    out.irr = block.irr.clone();
    out.ibr = block.ibr.clone();
    out.defect = block.defect;
    let fp = match fong_pair(session, bs, block) {
        Ok(fp) => fp,
        Err(e) => {
            out.verdicts = Verdicts::all(Verdict::Fail);
            out.failures.push(format!("fong pair: {}", e));
            return out;
        }
    };
    fill(session, bs, block, &fp, tier, &mut out);
    out
}

fn fill(session: &Session, bs: &Arc<BrauerSystem>, block: &Block, fp: &FongPair, tier: Tier, out: &mut BlockOutcome) {
    let g = bs.group();
    let d = &fp.d;
    out.chain = fp.chain.clone();
    out.v_order = fp.v.order();
    out.defect_group_order = d.order();
    out.defect_group_abelian = d.is_abelian();
    out.defect_group_normal = d.is_normal_in(g);
    let nvd = match fp.v.normalizer(d) {
        Ok(n) => n,
        Err(e) => {
            out.verdicts = Verdicts::all(Verdict::Fail);
            out.failures.push(format!("normalizer: {}", e));
            return;
        }
    };
    out.normalizer_order = nvd.order();
    let c4 = is_central_in(d, &nvd);
    let order_d = d.order();
    for &phi in &block.ibr {
        let lifts = bs.lifts_of(phi);
        let over = bs.irr_over(phi);
        out.phis.push(PhiFlags {
            phi,
            degree: bs.ibr_degree(phi),
            lifts: lifts.len(),
            irr_over: over.len(),
            c1: lifts.len() == order_d,
            c2: lifts == over,
            c3: over.len() == order_d,
            c4,
            witnesses: Vec::new(),
            approx: bs.ibr()[phi].iter().map(|v| { let z = v.to_complex(); (z.re, z.im) }).collect(),
        });
    }

    let maps = match induction_bijection_check(bs, block, fp) {
        Ok(m) => {
            out.verdicts.induction_bijection = Verdict::Pass;
            Some(m)
        }
        Err(e) => {
            out.verdicts.induction_bijection = Verdict::Fail;
            out.failures.push(format!("induction bijection: {}", e));
            None
        }
    };

    // C4 forces D abelian, so this check is independent of the tier.
    let forcing = c4 || (out.defect_group_abelian && tier != Tier::NotPSolvable && out.phis.iter().any(|f| f.c3));
    if forcing {
        let all_lifts = out.phis.iter().all(|f| f.c1 && f.c2);
        let unique = block.ibr.len() == 1 && bs.lifts_of(block.ibr[0]) == block.irr.as_slice();
        out.verdicts.unique_brauer = Verdict::from_bool(all_lifts && unique);
        if out.verdicts.unique_brauer != Verdict::Pass {
            out.failures.push("the block is not a single Brauer character with every member a lift".into());
        }
    }

    if !out.defect_group_abelian {
        out.notes.push("non-abelian defect group".into());
        return;
    }
    if tier == Tier::NotPSolvable {
        out.notes.push("group is not p-solvable".into());
        return;
    }

    let equivalent = out.phis.iter().all(|f| f.c1 == f.c2 && f.c2 == f.c3);
    out.verdicts.lift_count_equivalence = Verdict::from_bool(equivalent);
    if !equivalent {
        out.failures.push("C1, C2, C3 disagree".into());
    }

    let forward = out.phis.iter().all(|f| !f.c4 || f.c1);
    let backward = out.phis.iter().all(|f| !f.c1 || f.c4);
    out.verdicts.central_criterion = match tier {
        Tier::Solvable => Verdict::from_bool(forward && backward),
        _ => {
            if !backward {
                out.potential_counterexample = true;
                out.notes.push("C1 holds without C4 in a p-solvable, non-solvable group".into());
            }
            Verdict::from_bool(forward)
        }
    };
    if out.verdicts.central_criterion == Verdict::Fail {
        out.failures.push("C1 and C4 disagree".into());
    }

    out.verdicts.kb_bound = Verdict::from_bool(block.irr.len() <= order_d);
    if out.verdicts.kb_bound == Verdict::Fail {
        out.failures.push(format!("|Irr(B)| = {} exceeds |D| = {}", block.irr.len(), order_d));
    }

    if out.defect_group_normal && out.phis.iter().any(|f| f.c1) {
        let mut ok = true;
        for f in out.phis.iter().filter(|f| f.c1) {
            match orbit_counts_hold(session, bs, d, f.phi) {
                Ok(true) => {}
                Ok(false) => {
                    ok = false;
                    out.failures.push(format!("orbit counts fail for Brauer character {}", f.phi));
                }
                Err(e) => {
                    ok = false;
                    out.failures.push(format!("orbit counts: {}", e));
                }
            }
        }
        out.verdicts.orbit_counts = Verdict::from_bool(ok);
    }

    let Some(maps) = maps else {
        out.verdicts.normalizer_transfer = Verdict::Fail;
        out.failures.push("normalizer transfer: no induction bijection".into());
        return;
    };
    let mut ok = true;
    for i in 0..out.phis.len() {
        let phi = out.phis[i].phi;
        match normalizer_transfer_check(session, bs, block, phi, fp, &maps) {
            Ok(t) => {
                if t.ambiguous() {
                    out.notes.push(format!("ambiguous witness for {}: {:?}", phi, t.witnesses));
                }
                out.phis[i].witnesses = t.witnesses;
            }
            Err(e) => {
                ok = false;
                let tag = if matches!(e, Error::NoWitness(_)) { "no witness" } else { "error" };
                out.failures.push(format!("normalizer transfer ({}) for {}: {}", tag, phi, e));
            }
        }
    }
    out.verdicts.normalizer_transfer = Verdict::from_bool(ok);
}
