//! p-blocks as linkage classes of the decomposition matrix.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::brauer::BrauerSystem;
use crate::chartab::{class_action, CharacterTable};
use crate::error::{Error, Result};
use crate::perm::{class_fusion, p_valuation, PermGroup};

/// A p-block: ordinary and Brauer members with the defect from degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub irr: Vec<usize>,
    pub ibr: Vec<usize>,
    pub defect: u32,
}

impl Block {
    pub fn is_principal(&self) -> bool {
        self.irr.first() == Some(&0)
    }

    pub fn contains_irr(&self, chi: usize) -> bool {
        self.irr.binary_search(&chi).is_ok()
    }

    pub fn contains_ibr(&self, phi: usize) -> bool {
        self.ibr.binary_search(&phi).is_ok()
    }
}

/// Connected components of the graph joining `chi` and `phi` when
/// `d[chi][phi] != 0`, ordered by smallest ordinary member.
pub fn block_partition(bs: &BrauerSystem) -> Vec<Block> {
    let nchi = bs.table().len();
    let nphi = bs.ibr_count();
    let mut parent: Vec<usize> = (0..nchi + nphi).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for chi in 0..nchi {
        for phi in 0..nphi {
            if bs.decomposition_number(chi, phi) != 0 {
                let (a, b) = (find(&mut parent, chi), find(&mut parent, nchi + phi));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut blocks: Vec<Block> = Vec::new();
    let mut root_of_block: Vec<usize> = Vec::new();
    for chi in 0..nchi {
        let r = find(&mut parent, chi);
        match root_of_block.iter().position(|&x| x == r) {
            Some(i) => blocks[i].irr.push(chi),
            None => {
                root_of_block.push(r);
                blocks.push(Block { irr: vec![chi], ibr: Vec::new(), defect: 0 });
            }
        }
    }
    for phi in 0..nphi {
        let r = find(&mut parent, nchi + phi);
        let i = root_of_block.iter().position(|&x| x == r).expect("every phi has a lift");
        blocks[i].ibr.push(phi);
    }
    let g = bs.group();
    for b in blocks.iter_mut() {
        b.defect = block_defect(b, bs.table(), g.order(), bs.prime());
    }
    blocks
}

/// `d(B) = nu_p |G| - min_{chi in B} nu_p chi(1)`.
pub fn block_defect(block: &Block, table: &CharacterTable, order: usize, p: u64) -> u32 {
    let full = p_valuation(order as u64, p);
    let min = block.irr.iter().map(|&chi| p_valuation(table.degree(chi), p)).min().unwrap_or(full);
    full - min
}

/// Index of the block containing `chi`.
pub fn block_of(blocks: &[Block], chi: usize) -> usize {
    blocks.iter().position(|b| b.contains_irr(chi)).expect("blocks partition Irr")
}

/// Permutation of `Irr(M)` induced by conjugation with `x`, for `x`
/// normalizing `M`: entry `i` is the index of `theta_i^x`.
pub fn irr_action(tm: &CharacterTable, x: &crate::perm::Permutation) -> Result<Vec<usize>> {
    let m = tm.group();
    let action = class_action(m, x)?;
    (0..tm.len())
        .map(|i| {
            let row: Vec<_> = action.iter().map(|&c| tm.value(i, c).clone()).collect();
            tm.rows()
                .iter()
                .position(|r| *r == row)
                .ok_or_else(|| Error::CheckFailed("conjugate of an irreducible is not irreducible".into()))
        })
        .collect()
}

/// Orbit of `theta` under the generators of `g` acting on `Irr(M)`.
pub fn irr_orbit(g: &PermGroup, tm: &CharacterTable, theta: usize) -> Result<BTreeSet<usize>> {
    let actions: Vec<Vec<usize>> = g.generators().iter().map(|x| irr_action(tm, x)).collect::<Result<_>>()?;
    let mut orbit = BTreeSet::from([theta]);
    let mut frontier = vec![theta];
    while let Some(t) = frontier.pop() {
        for a in &actions {
            if orbit.insert(a[t]) {
                frontier.push(a[t]);
            }
        }
    }
    Ok(orbit)
}

/// Restriction data from `G` to a normal subgroup `M`.
pub struct Restriction {
    /// Constituents of `chi_M` with multiplicities, per row of `G`.
    pub constituents: Vec<Vec<(usize, u64)>>,
}

impl Restriction {
    pub fn compute(tg: &CharacterTable, tm: &CharacterTable) -> Result<Self> {
        let g = tg.group();
        let m = tm.group();
        if !m.is_normal_in(g) {
            return Err(Error::NotNormal);
        }
        let fusion = class_fusion(m, g)?;
        let constituents = (0..tg.len())
            .map(|chi| tm.constituents(&tg.character(chi).restrict_with_fusion(m, &fusion)))
            .collect::<Result<_>>()?;
        Ok(Restriction { constituents })
    }

    pub fn covered(&self, chi: usize) -> Vec<usize> {
        self.constituents[chi].iter().map(|&(t, _)| t).collect()
    }

    pub fn lies_over(&self, chi: usize, alpha: usize) -> bool {
        self.constituents[chi].iter().any(|&(t, _)| t == alpha)
    }
}

/// Irreducible constituents of `chi_M`; they form one `G`-orbit.
pub fn covered_constituents(tg: &CharacterTable, chi: usize, tm: &CharacterTable) -> Result<Vec<usize>> {
    let g = tg.group();
    let m = tm.group();
    if !m.is_normal_in(g) {
        return Err(Error::NotNormal);
    }
    let res = tg.character(chi).restrict(m)?;
    let cons: Vec<usize> = tm.constituents(&res)?.into_iter().map(|(t, _)| t).collect();
    let orbit = irr_orbit(g, tm, cons[0])?;
    if orbit.into_iter().collect::<Vec<_>>() != cons {
        return Err(Error::CheckFailed("restriction constituents are not a single orbit".into()));
    }
    Ok(cons)
}

/// Blocks of `G` containing a character lying over `alpha` in `Irr(M)`.
pub fn blocks_covering(blocks: &[Block], res: &Restriction, alpha: usize) -> Vec<usize> {
    blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| b.irr.iter().any(|&chi| res.lies_over(chi, alpha)))
        .map(|(i, _)| i)
        .collect()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::perm::group_from_cycles;

    fn setup(degree: usize, gens: &[&str], p: u64) -> (Arc<CharacterTable>, BrauerSystem) {
        let g = Arc::new(group_from_cycles(degree, gens).unwrap());
        let t = Arc::new(CharacterTable::compute(g).unwrap());
        let b = BrauerSystem::compute(t.clone(), p).unwrap();
        (t, b)
    }

    #[test]
    fn coprime_blocks_have_defect_zero() {
        let (t, b) = setup(3, &["(1 2 3)", "(1 2)"], 5);
        let blocks = block_partition(&b);
        assert_eq!(blocks.len(), t.len());
        assert!(blocks.iter().all(|bl| bl.defect == 0 && bl.irr.len() == 1 && bl.ibr.len() == 1));
    }

    #[test]
    fn s3_blocks() {
        let (_, b3) = setup(3, &["(1 2 3)", "(1 2)"], 3);
        let blocks = block_partition(&b3);
        assert_eq!(blocks, vec![Block { irr: vec![0, 1, 2], ibr: vec![0, 1], defect: 1 }]);
        let (_, b2) = setup(3, &["(1 2 3)", "(1 2)"], 2);
        let blocks = block_partition(&b2);
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].irr, vec![0, 1]);
        assert_eq!(blocks[0].defect, 1);
        assert_eq!(blocks[1].irr, vec![2]);
        assert_eq!(blocks[1].defect, 0);
        assert!(blocks[0].is_principal());
    }

    #[test]
    fn covering() {
        let g = Arc::new(group_from_cycles(3, &["(1 2 3)", "(1 2)"]).unwrap());
        let t = CharacterTable::compute(g.clone()).unwrap();
        let c3 = Arc::new(g.o_p(3));
        let tm = CharacterTable::compute(c3).unwrap();
        assert_eq!(covered_constituents(&t, 2, &tm).unwrap(), vec![1, 2]);
        assert_eq!(covered_constituents(&t, 0, &tm).unwrap(), vec![0]);
        let trivial = Arc::new(PermGroup::trivial(3));
        let tt = CharacterTable::compute(trivial).unwrap();
        assert_eq!(covered_constituents(&t, 2, &tt).unwrap(), vec![0]);
        let res = Restriction::compute(&t, &tm).unwrap();
        let b = BrauerSystem::compute(Arc::new(t.clone()), 2).unwrap();
        let blocks = block_partition(&b);
        assert_eq!(blocks_covering(&blocks, &res, 0), vec![0]);
        assert_eq!(blocks_covering(&blocks, &res, 1), vec![1]);
    }
}
