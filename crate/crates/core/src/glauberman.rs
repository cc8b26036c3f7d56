//! Glauberman correspondence for a p-group acting coprimely, and the
//! count-level transfer from `(G, phi)` to the normalizer `N_V(D)`.

use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::blocks::{irr_action, Block};
use crate::brauer::BrauerSystem;
use crate::chartab::{CharacterTable, ClassFunction};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::fong::{FongPair, InductionMaps};
use crate::perm::{class_fusion, PermGroup};
use crate::session::Session;

/// A p-group `actor` normalizing a p'-group `target`.
pub struct CoprimeAction {
    pub actor: Arc<PermGroup>,
    pub target: Arc<PermGroup>,
    pub fixed_points: Arc<PermGroup>,
    pub p: u64,
    target_table: Arc<CharacterTable>,
    fixed_table: Arc<CharacterTable>,
    actions: Vec<Vec<usize>>,
}

impl CoprimeAction {
    pub fn new(session: &Session, actor: &Arc<PermGroup>, target: &Arc<PermGroup>, p: u64) -> Result<Self> {
        if (actor.order() as u64).gcd(&(target.order() as u64)) != 1 {
            return Err(Error::CheckFailed("actor and target orders are not coprime".into()));
        }
        if crate::perm::p_part(actor.order(), p as usize) != actor.order() {
            return Err(Error::CheckFailed(format!("actor is not a {}-group", p)));
        }
        for x in actor.generators() {
            if !target.generators().iter().all(|k| target.contains(&k.conjugate_by(x))) {
                return Err(Error::NotNormal);
            }
        }
        let gens = actor.generators().to_vec();
        let fixed_points = session.intern(target.filtered(|k| gens.iter().all(|x| x.compose(k) == k.compose(x))));
        let target_table = session.table(target)?;
        let fixed_table = session.table(&fixed_points)?;
        let actions = gens.iter().map(|x| irr_action(&target_table, x)).collect::<Result<_>>()?;
        Ok(CoprimeAction { actor: actor.clone(), target: target.clone(), fixed_points, p, target_table, fixed_table, actions })
    }

    pub fn target_table(&self) -> &Arc<CharacterTable> {
        &self.target_table
    }

    pub fn fixed_table(&self) -> &Arc<CharacterTable> {
        &self.fixed_table
    }

    pub fn is_invariant(&self, theta: usize) -> bool {
        self.actions.iter().all(|a| a[theta] == theta)
    }

    pub fn invariant_characters(&self) -> Vec<usize> {
        (0..self.target_table.len()).filter(|&t| self.is_invariant(t)).collect()
    }

    /// The unique constituent of `theta` restricted to `C_K(D)` whose
    /// multiplicity is prime to `p`.
    pub fn correspondent(&self, theta: usize) -> Result<usize> {
        if !self.is_invariant(theta) {
            return Err(Error::NotInvariant);
        }
        let res = self.target_table.character(theta).restrict(&self.fixed_points)?;
        let hits: Vec<usize> = self
            .fixed_table
            .constituents(&res)?
            .into_iter()
            .filter(|&(_, m)| m % self.p != 0)
            .map(|(c, _)| c)
            .collect();
        match hits.as_slice() {
            [c] => Ok(*c),
            _ => Err(Error::UniquenessFailure(hits.len())),
        }
    }
}

/// Outcome of the normalizer transfer for one Brauer character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferRecord {
    pub v_order: usize,
    pub n_order: usize,
    pub normalizer_order: usize,
    pub fixed_order: usize,
    pub phi_hat: usize,
    pub alpha: usize,
    pub alpha_multiplicity: u64,
    pub beta: usize,
    pub witnesses: Vec<usize>,
    pub irr_count: usize,
    pub lift_count: usize,
    pub witness_lift_counts: Vec<usize>,
}

impl TransferRecord {
    pub fn ambiguous(&self) -> bool {
        self.witnesses.len() > 1
    }
}

/// Restriction of a Brauer character of `big` to a p'-subgroup `small`.
fn restrict_brauer(
    values: &[Cyclotomic],
    big: &BrauerSystem,
    small: &Arc<PermGroup>,
) -> Result<ClassFunction> {
    let fusion = class_fusion(small, big.group())?;
    let regular = big.p_regular_classes();
    let vals = fusion
        .iter()
        .map(|c| {
            regular
                .binary_search(c)
                .map(|i| values[i].clone())
                .map_err(|_| Error::CheckFailed("p'-subgroup class fuses to a p-singular class".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::new(small.clone(), vals)
}

fn ratio_multiset(bs: &BrauerSystem, phi: usize) -> Vec<(u64, u64)> {
    let d = bs.ibr_degree(phi);
    let mut out: Vec<(u64, u64)> = bs
        .irr_over(phi)
        .iter()
        .map(|&chi| {
            let n = bs.table().degree(chi);
            let g = n.gcd(&d);
            (n / g, d / g)
        })
        .collect();
    out.sort();
    out
}

/// Searches `IBr(N_V(D))` for a character over the Glauberman correspondent
/// of the constituent of `phi_hat` on `O_p'(V)` with the same counts and
/// degree ratios as `phi`.
pub fn normalizer_transfer_check(
    session: &Session,
    bs: &BrauerSystem,
    _block: &Block,
    phi: usize,
    fp: &FongPair,
    maps: &InductionMaps,
) -> Result<TransferRecord> {
    let p = bs.prime();
    let vs = &fp.v_system;
    let v = &fp.v;
    let phi_hat = maps
        .ibr_preimage(phi)
        .ok_or_else(|| Error::CheckFailed(format!("no Brauer character of V induces to {}", phi)))?;
    let n = session.intern(v.o_p_prime(p));
    let tn = session.table(&n)?;
    let res = restrict_brauer(&vs.ibr()[phi_hat], vs, &n)?;
    let cons = tn.constituents(&res)?;
    let (alpha, alpha_multiplicity) = match cons.as_slice() {
        [(a, m)] => (*a, *m),
        _ => {
            return Err(Error::CheckFailed(format!(
                "restriction of the Fong character to O_p'(V) is not homogeneous ({} constituents)",
                cons.len()
            )))
        }
    };
    let ca = CoprimeAction::new(session, &fp.d, &n, p)?;
    let beta = ca.correspondent(alpha)?;
    let nvd = session.intern(v.normalizer(&fp.d)?);
    let bn = session.brauer(&nvd, p)?;
    let c = &ca.fixed_points;
    if !c.is_normal_in(&nvd) {
        return Err(Error::CheckFailed("C_N(D) is not normal in N_V(D)".into()));
    }
    let target_ratios = ratio_multiset(bs, phi);
    let irr_count = bs.irr_over(phi).len();
    let lift_count = bs.lifts_of(phi).len();
    let mut witnesses = Vec::new();
    let mut witness_lift_counts = Vec::new();
    for cand in 0..bn.ibr_count() {
        let r = restrict_brauer(&bn.ibr()[cand], &bn, c)?;
        let over = ca.fixed_table().constituents(&r)?;
        if over.len() != 1 || over[0].0 != beta {
            continue;
        }
        if bn.irr_over(cand).len() != irr_count || ratio_multiset(&bn, cand) != target_ratios {
            continue;
        }
        witnesses.push(cand);
        witness_lift_counts.push(bn.lifts_of(cand).len());
    }
    if witnesses.is_empty() {
        return Err(Error::NoWitness(format!(
            "no Brauer character of N_V(D) (order {}) over the correspondent matches |Irr(G:phi)| = {}",
            nvd.order(),
            irr_count
        )));
    }
    Ok(TransferRecord {
        v_order: v.order(),
        n_order: n.order(),
        normalizer_order: nvd.order(),
        fixed_order: c.order(),
        phi_hat,
        alpha,
        alpha_multiplicity,
        beta,
        witnesses,
        irr_count,
        lift_count,
        witness_lift_counts,
    })
}
