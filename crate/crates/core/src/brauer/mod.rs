//! Irreducible Brauer characters of p-solvable groups.
//!
//! By the Fong–Swan theorem every irreducible Brauer character of a
//! p-solvable group is the restriction `chi°` of some ordinary irreducible
//! character to the p-regular classes. The distinct restrictions are
//! scanned in non-decreasing degree and a restriction is kept exactly when
//! it is not a non-negative integer combination of those kept before it.
//! A reducible restriction has all constituents of strictly smaller degree,
//! and the kept characters are linearly independent, so this selects IBr.

mod exact;

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::chartab::CharacterTable;
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::modp;
use crate::perm::PermGroup;

/// A class function on the p-regular classes, indexed like
/// [`BrauerSystem::p_regular_classes`].
pub type BrauerCharacter = Vec<Cyclotomic>;

/// Brauer characters, decomposition numbers and lift sets for one prime.
#[derive(Clone)]
pub struct BrauerSystem {
    table: Arc<CharacterTable>,
    p: u64,
    p_regular: Vec<usize>,
    ibr: Vec<BrauerCharacter>,
    ibr_degrees: Vec<u64>,
    decomposition: Vec<Vec<u64>>,
    lifts: Vec<Vec<usize>>,
    irr_over: Vec<Vec<usize>>,
}

/// `chi°`: drops classes whose elements have order divisible by `p`.
pub fn p_regular_restriction(table: &CharacterTable, chi: usize, p: u64) -> BrauerCharacter {
    table.classes().p_regular(p).into_iter().map(|c| table.value(chi, c).clone()).collect()
}

struct Solver<'a> {
    table: &'a CharacterTable,
    p_regular: &'a [usize],
    ell: u64,
}

impl Solver<'_> {
    fn residues(&self, chi: usize) -> Vec<u64> {
        let r = self.table.residues(chi);
        self.p_regular.iter().map(|&c| r[c]).collect()
    }

    /// Non-negative integer coefficients expressing `target` (the
    /// restriction of row `chi`) over `basis`, or `None`.
    fn cone_coefficients(&self, basis: &[(usize, BrauerCharacter)], chi: usize) -> Result<Option<Vec<u64>>> {
        let target: BrauerCharacter = self.p_regular.iter().map(|&c| self.table.value(chi, c).clone()).collect();
        if basis.is_empty() {
            return Ok(None);
        }
        let rows: Vec<Vec<u64>> = basis.iter().map(|(src, _)| self.residues(*src)).collect();
        let b = self.residues(chi);
        let degree = self.table.degree(chi);
        let candidate = match modp::solve_left(&rows, &b, self.ell) {
            None => return Ok(None),
            Some((x, true)) => {
                let mut coeffs = Vec::with_capacity(x.len());
                for (xi, (src, _)) in x.iter().zip(basis) {
                    if *xi > degree / self.table.degree(*src) {
                        return Ok(None);
                    }
                    coeffs.push(*xi);
                }
                coeffs
            }
            Some((_, false)) => match self.exact_coefficients(basis, &target)? {
                Some(c) => c,
                None => return Ok(None),
            },
        };
        let mut sum = vec![Cyclotomic::zero(); target.len()];
        for (m, (_, phi)) in candidate.iter().zip(basis) {
            if *m == 0 {
                continue;
            }
            for (s, v) in sum.iter_mut().zip(phi) {
                *s = &*s + &v.scale_int(*m as i64);
            }
        }
        Ok(if sum == target { Some(candidate) } else { None })
    }

    fn exact_coefficients(&self, basis: &[(usize, BrauerCharacter)], target: &[Cyclotomic]) -> Result<Option<Vec<u64>>> {
        let e = self.table.group().exponent() as u32;
        let rows: Vec<_> = basis.iter().map(|(_, phi)| exact::coordinates(phi, e)).collect();
        let b = exact::coordinates(target, e);
        let Some(x) = exact::solve_left(&rows, &b) else { return Ok(None) };
        let mut out = Vec::with_capacity(x.len());
        for v in x {
            if !v.is_integer() || v.is_negative() {
                return Ok(None);
            }
            out.push(v.to_integer().to_u64().ok_or_else(|| Error::DecompositionFailed("coefficient overflow".into()))?);
        }
        Ok(Some(out))
    }
}

impl BrauerSystem {
    pub fn compute(table: Arc<CharacterTable>, p: u64) -> Result<Self> {
        let group = table.group().clone();
        if !group.is_p_solvable(p) {
            return Err(Error::NotPSolvable { p });
        }
        let p_regular = table.classes().p_regular(p);
        let solver = Solver { table: &table, p_regular: &p_regular, ell: table.field().ell };
        let restrictions: Vec<BrauerCharacter> =
            (0..table.len()).map(|chi| p_regular.iter().map(|&c| table.value(chi, c).clone()).collect()).collect();

        // distinct restrictions with their first source, by degree then index
        let mut candidates: Vec<usize> = Vec::new();
        for chi in 0..table.len() {
            if !candidates.iter().any(|&c| restrictions[c] == restrictions[chi]) {
                candidates.push(chi);
            }
        }
        candidates.sort_by_key(|&chi| (table.degree(chi), chi));

        let mut accepted: Vec<(usize, BrauerCharacter)> = Vec::new();
        for chi in candidates {
            if solver.cone_coefficients(&accepted, chi)?.is_none() {
                accepted.push((chi, restrictions[chi].clone()));
            }
        }
        if accepted.len() != p_regular.len() {
            return Err(Error::DecompositionFailed(format!(
                "found {} Brauer characters for {} p-regular classes",
                accepted.len(),
                p_regular.len()
            )));
        }

        let mut decomposition = Vec::with_capacity(table.len());
        for chi in 0..table.len() {
            let row = solver.cone_coefficients(&accepted, chi)?.ok_or_else(|| {
                Error::DecompositionFailed(format!("restriction of row {} does not decompose", chi))
            })?;
            decomposition.push(row);
        }
        let nphi = accepted.len();
        let lifts: Vec<Vec<usize>> = (0..nphi)
            .map(|phi| (0..table.len()).filter(|&chi| restrictions[chi] == accepted[phi].1).collect())
            .collect();
        let irr_over: Vec<Vec<usize>> =
            (0..nphi).map(|phi| (0..table.len()).filter(|&chi| decomposition[chi][phi] != 0).collect()).collect();
        if let Some(phi) = lifts.iter().position(Vec::is_empty) {
            return Err(Error::DecompositionFailed(format!("Brauer character {} has no lift", phi)));
        }
        let ibr_degrees = accepted.iter().map(|(src, _)| table.degree(*src)).collect();
        let ibr = accepted.into_iter().map(|(_, phi)| phi).collect();
        Ok(BrauerSystem { table, p, p_regular, ibr, ibr_degrees, decomposition, lifts, irr_over })
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        self.table.group()
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn p_regular_classes(&self) -> &[usize] {
        &self.p_regular
    }

    pub fn ibr(&self) -> &[BrauerCharacter] {
        &self.ibr
    }

    pub fn ibr_count(&self) -> usize {
        self.ibr.len()
    }

    pub fn ibr_degree(&self, phi: usize) -> u64 {
        self.ibr_degrees[phi]
    }

    pub fn ibr_degrees(&self) -> &[u64] {
        &self.ibr_degrees
    }

    /// `d[chi][phi]`.
    pub fn decomposition(&self) -> &[Vec<u64>] {
        &self.decomposition
    }

    pub fn decomposition_number(&self, chi: usize, phi: usize) -> u64 {
        self.decomposition[chi][phi]
    }

    /// `L_phi = { chi : chi° = phi }`.
    pub fn lifts_of(&self, phi: usize) -> &[usize] {
        &self.lifts[phi]
    }

    /// `Irr(G : phi) = { chi : d[chi][phi] != 0 }`.
    pub fn irr_over(&self, phi: usize) -> &[usize] {
        &self.irr_over[phi]
    }

    /// The restriction `chi°`.
    pub fn restriction(&self, chi: usize) -> BrauerCharacter {
        self.p_regular.iter().map(|&c| self.table.value(chi, c).clone()).collect()
    }

    /// Index of a Brauer character given by its values, if irreducible.
    pub fn index_of(&self, values: &[Cyclotomic]) -> Option<usize> {
        self.ibr.iter().position(|phi| phi.as_slice() == values)
    }

    /// Exact check of `chi° = sum_phi d[chi][phi] phi` for every row.
    pub fn check_decomposition(&self) -> Result<()> {
        for chi in 0..self.table.len() {
            let mut sum = vec![Cyclotomic::zero(); self.p_regular.len()];
            for (phi, &d) in self.decomposition[chi].iter().enumerate() {
                if d == 0 {
                    continue;
                }
                for (s, v) in sum.iter_mut().zip(&self.ibr[phi]) {
                    *s = &*s + &v.scale_int(d as i64);
                }
            }
            if sum != self.restriction(chi) {
                return Err(Error::CheckFailed(format!("decomposition of row {} is not exact", chi)));
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for BrauerSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BrauerSystem")
            .field("p", &self.p)
            .field("ibr_degrees", &self.ibr_degrees)
            .field("decomposition", &self.decomposition)
            .finish()
    }
}

/// Brauer character induction along a class fusion on p-regular classes.
///
/// `h_regular`/`g_regular` list the p-regular classes of the subgroup and
/// the overgroup, and `fusion` is the full class fusion.
pub fn induce_brauer(
    phi: &[Cyclotomic],
    h: &PermGroup,
    h_regular: &[usize],
    g: &PermGroup,
    g_regular: &[usize],
    fusion: &[usize],
) -> BrauerCharacter {
    let hc = h.classes();
    let gc = g.classes();
    let index = (g.order() / h.order()) as i64;
    let mut pos = vec![usize::MAX; gc.count()];
    for (i, &c) in g_regular.iter().enumerate() {
        pos[c] = i;
    }
    let mut sums = vec![Cyclotomic::zero(); g_regular.len()];
    for (i, &d) in h_regular.iter().enumerate() {
        if phi[i].is_zero() {
            continue;
        }
        let slot = pos[fusion[d]];
        sums[slot] = &sums[slot] + &phi[i].scale_int(hc.size(d) as i64);
    }
    sums.into_iter()
        .enumerate()
        .map(|(i, s)| {
            let f = num_rational::BigRational::new(BigInt::from(index), BigInt::from(gc.size(g_regular[i]) as i64));
            if s.is_zero() {
                s
            } else {
                s.scale(&f)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::group_from_cycles;

    fn system(degree: usize, gens: &[&str], p: u64) -> BrauerSystem {
        let g = Arc::new(group_from_cycles(degree, gens).unwrap());
        BrauerSystem::compute(Arc::new(CharacterTable::compute(g).unwrap()), p).unwrap()
    }

    #[test]
    fn coprime_prime_gives_identity() {
        let b = system(3, &["(1 2 3)", "(1 2)"], 5);
        assert_eq!(b.decomposition(), &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        for phi in 0..3 {
            assert_eq!(b.lifts_of(phi), &[phi]);
            assert_eq!(b.irr_over(phi), &[phi]);
        }
    }

    #[test]
    fn s3_mod_3() {
        let b = system(3, &["(1 2 3)", "(1 2)"], 3);
        assert_eq!(b.p_regular_classes(), &[0, 2]);
        assert_eq!(b.ibr_count(), 2);
        assert_eq!(b.decomposition(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(b.restriction(2), vec![Cyclotomic::from_integer(2), Cyclotomic::zero()]);
        assert_eq!(b.lifts_of(0), &[0]);
        b.check_decomposition().unwrap();
    }

    #[test]
    fn p_group_has_only_trivial_brauer_character() {
        let b = system(4, &["(1 2 3 4)", "(1 3)"], 2);
        assert_eq!(b.ibr_count(), 1);
        assert_eq!(b.lifts_of(0).len(), 4);
        assert_eq!(b.irr_over(0).len(), 5);
    }

    #[test]
    fn frobenius_21_mod_7() {
        let b = system(7, &["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"], 7);
        assert_eq!(b.ibr_count(), 3);
        assert!(b.ibr_degrees().iter().all(|&d| d == 1));
        for chi in 3..5 {
            assert_eq!(b.decomposition()[chi], vec![1, 1, 1]);
        }
        assert_eq!(b.lifts_of(1), &[1]);
        assert_eq!(b.irr_over(1), &[1, 3, 4]);
    }

    #[test]
    fn non_p_solvable_is_rejected() {
        let g = Arc::new(group_from_cycles(5, &["(1 2 3 4 5)", "(1 2 3)"]).unwrap());
        let t = Arc::new(CharacterTable::compute(g).unwrap());
        assert_eq!(BrauerSystem::compute(t, 2).unwrap_err(), Error::NotPSolvable { p: 2 });
    }
}
