//! Fong reduction of a block down to a pair `(V, B_V)` in which the chosen
//! covered character of `O_p'(V)` is invariant.
//!
//! At each level `M = O_p'(current)` and `alpha` is a constituent of the
//! restriction of the first character of the current block. If `alpha` is
//! not invariant the recursion passes to its stabilizer `T` and to the
//! unique block of `T` over `alpha` whose characters induce bijectively
//! onto the current block.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::blocks::{block_partition, blocks_covering, Block, Restriction};
use crate::brauer::{induce_brauer, BrauerSystem};
use crate::chartab::inertia_group;
use crate::error::{Error, Result};
use crate::perm::{class_fusion, PermGroup};
use crate::session::Session;

/// One level of the reduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FongStep {
    pub group_order: usize,
    pub m_order: usize,
    pub alpha: usize,
    pub alpha_degree: u64,
    pub stabilizer_order: usize,
}

#[derive(Clone)]
pub struct FongPair {
    pub chain: Vec<FongStep>,
    pub v: Arc<PermGroup>,
    pub v_system: Arc<BrauerSystem>,
    pub v_block: Block,
    pub d: Arc<PermGroup>,
}

impl std::fmt::Debug for FongPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FongPair")
            .field("chain", &self.chain)
            .field("v", &self.v.order())
            .field("v_block", &self.v_block)
            .field("d", &self.d.order())
            .finish()
    }
}

/// Which covered character to follow at the first level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AlphaChoice {
    #[default]
    Canonical,
    /// Use this `Irr(O_p'(G))` index at the first level.
    First(usize),
}

/// Bijections realised by induction from `B_V` to `B`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InductionMaps {
    pub irr: Vec<(usize, usize)>,
    pub ibr: Vec<(usize, usize)>,
}

impl InductionMaps {
    pub fn ibr_image(&self, phi_v: usize) -> Option<usize> {
        self.ibr.iter().find(|m| m.0 == phi_v).map(|m| m.1)
    }

    pub fn ibr_preimage(&self, phi: usize) -> Option<usize> {
        self.ibr.iter().find(|m| m.1 == phi).map(|m| m.0)
    }

    pub fn irr_image(&self, chi_v: usize) -> Option<usize> {
        self.irr.iter().find(|m| m.0 == chi_v).map(|m| m.1)
    }
}

/// Induces every member of `b1` (a block of `small`) into `big` and checks
/// that both maps are bijections onto the members of `b`.
fn induce_block(small: &BrauerSystem, b1: &Block, big: &BrauerSystem, b: &Block) -> Result<std::result::Result<InductionMaps, String>> {
    let h = small.group();
    let g = big.group();
    let fusion = class_fusion(h, g)?;
    let mut maps = InductionMaps::default();
    if b1.irr.len() != b.irr.len() {
        return Ok(Err(format!("{} ordinary characters against {}", b1.irr.len(), b.irr.len())));
    }
    if b1.ibr.len() != b.ibr.len() {
        return Ok(Err(format!("{} Brauer characters against {}", b1.ibr.len(), b.ibr.len())));
    }
    let mut seen = BTreeSet::new();
    for &chi1 in &b1.irr {
        let ind = small.table().character(chi1).induce_with_fusion(g, &fusion);
        match big.table().index_of(&ind) {
            Some(chi) if b.contains_irr(chi) && seen.insert(chi) => maps.irr.push((chi1, chi)),
            Some(chi) => return Ok(Err(format!("ordinary character {} induces to {} outside the bijection", chi1, chi))),
            None => return Ok(Err(format!("ordinary character {} induces reducibly", chi1))),
        }
    }
    let mut seen = BTreeSet::new();
    for &phi1 in &b1.ibr {
        let ind = induce_brauer(
            &small.ibr()[phi1],
            h,
            small.p_regular_classes(),
            g,
            big.p_regular_classes(),
            &fusion,
        );
        match big.index_of(&ind) {
            Some(phi) if b.contains_ibr(phi) && seen.insert(phi) => maps.ibr.push((phi1, phi)),
            Some(phi) => return Ok(Err(format!("Brauer character {} induces to {} outside the bijection", phi1, phi))),
            None => return Ok(Err(format!("Brauer character {} induces reducibly", phi1))),
        }
    }
    Ok(Ok(maps))
}

pub fn fong_pair(session: &Session, bs: &Arc<BrauerSystem>, block: &Block) -> Result<FongPair> {
    fong_pair_with(session, bs, block, AlphaChoice::Canonical)
}

pub fn fong_pair_with(session: &Session, bs: &Arc<BrauerSystem>, block: &Block, choice: AlphaChoice) -> Result<FongPair> {
    let p = bs.prime();
    let mut cur = bs.clone();
    let mut cur_block = block.clone();
    let mut chain = Vec::new();
    loop {
        let g = cur.group().clone();
        let m = session.intern(g.o_p_prime(p));
        let tm = session.table(&m)?;
        let res = Restriction::compute(cur.table(), &tm)?;
        let covered = res.covered(cur_block.irr[0]);
        let alpha = match (choice, chain.is_empty()) {
            (AlphaChoice::First(a), true) => {
                let orbit_ok = cur_block.irr.iter().any(|&chi| res.lies_over(chi, a));
                if !orbit_ok {
                    return Err(Error::CheckFailed(format!("character {} of O_p' is not covered by the block", a)));
                }
                a
            }
            _ => covered[0],
        };
        let t = session.intern(inertia_group(&g, &m, &tm.character(alpha))?);
        let step = FongStep {
            group_order: g.order(),
            m_order: m.order(),
            alpha,
            alpha_degree: tm.degree(alpha),
            stabilizer_order: t.order(),
        };
        chain.push(step);
        if t.order() == g.order() {
            break;
        }
        let bt = session.brauer(&t, p)?;
        let blocks_t = block_partition(&bt);
        let res_t = Restriction::compute(bt.table(), &tm)?;
        let mut survivors = Vec::new();
        let mut reasons = Vec::new();
        for i in blocks_covering(&blocks_t, &res_t, alpha) {
            match induce_block(&bt, &blocks_t[i], &cur, &cur_block)? {
                Ok(_) => survivors.push(i),
                Err(why) => reasons.push(why),
            }
        }
        match survivors.len() {
            0 => {
                return Err(Error::InductionNotIrreducible(format!(
                    "no block of the stabilizer of order {} induces onto the block: {}",
                    t.order(),
                    reasons.join("; ")
                )))
            }
            1 => {}
            _ => return Err(Error::FongReynoldsAmbiguity),
        }
        cur_block = blocks_t[survivors[0]].clone();
        cur = bt;
    }
    let v = cur.group().clone();
    let d = session.intern(v.sylow_subgroup(p));
    let expected = (p as usize).pow(block.defect);
    if d.order() != expected {
        return Err(Error::DefectMismatch { sylow: d.order(), expected });
    }
    Ok(FongPair { chain, v, v_system: cur, v_block: cur_block, d })
}

/// `D`, a Sylow p-subgroup of `V`.
pub fn defect_group(fp: &FongPair) -> &Arc<PermGroup> {
    &fp.d
}

/// Checks that induction from `V` is a bijection `Irr(B_V) -> Irr(B)` and
/// `IBr(B_V) -> IBr(B)` preserving decomposition numbers, lift sets and
/// the sets `Irr(. : phi)`.
pub fn induction_bijection_check(bs: &BrauerSystem, block: &Block, fp: &FongPair) -> Result<InductionMaps> {
    let vs = &fp.v_system;
    let maps = match induce_block(vs, &fp.v_block, bs, block)? {
        Ok(m) => m,
        Err(why) => return Err(Error::CheckFailed(format!("bijection: {}", why))),
    };
    for &(chi1, chi) in &maps.irr {
        for &(phi1, phi) in &maps.ibr {
            let (a, b) = (vs.decomposition_number(chi1, phi1), bs.decomposition_number(chi, phi));
            if a != b {
                return Err(Error::CheckFailed(format!(
                    "decomposition numbers: d({}, {}) = {} in V but {} in G",
                    chi1, phi1, a, b
                )));
            }
        }
    }
    let image = |set: &[usize]| -> Option<BTreeSet<usize>> { set.iter().map(|&c| maps.irr_image(c)).collect() };
    for &(phi1, phi) in &maps.ibr {
        let lifts: BTreeSet<usize> = bs.lifts_of(phi).iter().copied().collect();
        if image(vs.lifts_of(phi1)) != Some(lifts) {
            return Err(Error::CheckFailed(format!("lift sets of {} and {} do not correspond", phi1, phi)));
        }
        let over: BTreeSet<usize> = bs.irr_over(phi).iter().copied().collect();
        if image(vs.irr_over(phi1)) != Some(over) {
            return Err(Error::CheckFailed(format!("Irr(. : {}) and Irr(. : {}) do not correspond", phi1, phi)));
        }
    }
    Ok(maps)
}
