//! Ordinary character tables by the Dixon–Schneider method.
//!
//! Central characters are found as common eigenvectors of the class
//! matrices over a prime field `F_ell` with `ell = 1 (mod exp G)` and
//! `ell > 2|G|`, then lifted to exact cyclotomic values through the power
//! maps. Rows are sorted by degree with the trivial character first and
//! ties broken by the canonical order of value tuples.

mod classfn;
mod dixon;

use std::cmp::Ordering;
use std::sync::Arc;

pub use classfn::{class_action, inertia_group, inner_product, ClassFunction};
pub use dixon::{dixon_prime, ClassAlgebra};

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::modp::ModField;
use crate::perm::{ConjugacyClassData, PermGroup};

/// Irreducible ordinary characters of a permutation group.
#[derive(Clone)]
pub struct CharacterTable {
    group: Arc<PermGroup>,
    field: ModField,
    degrees: Vec<u64>,
    values: Vec<Vec<Cyclotomic>>,
    residues: Vec<Vec<u64>>,
}

impl CharacterTable {
    pub fn compute(group: Arc<PermGroup>) -> Result<Self> {
        let ell = dixon_prime(&group);
        let field = ModField::new(ell, group.exponent() as u64);
        let alg = ClassAlgebra::compute(&group);
        let omegas = dixon::central_characters(&alg, ell)?;
        let mut rows: Vec<(u64, Vec<Cyclotomic>, Vec<u64>)> = Vec::with_capacity(omegas.len());
        for omega in &omegas {
            let (d, residues) = dixon::values_mod(&group, omega, ell)?;
            let values = dixon::lift(&group, d, &residues, &field)?;
            rows.push((d, values, residues));
        }
        let square_sum: u64 = rows.iter().map(|r| r.0 * r.0).sum();
        if square_sum != group.order() as u64 {
            return Err(Error::TableFailed(format!(
                "squared degrees sum to {} instead of {}",
                square_sum,
                group.order()
            )));
        }
        rows.sort_by(|a, b| row_order(&a.0, &a.1, &b.0, &b.1));
        if !rows[0].1.iter().all(Cyclotomic::is_one) {
            return Err(Error::TableFailed("trivial character missing".into()));
        }
        let mut degrees = Vec::with_capacity(rows.len());
        let mut values = Vec::with_capacity(rows.len());
        let mut residues = Vec::with_capacity(rows.len());
        for (d, v, r) in rows {
            degrees.push(d);
            values.push(v);
            residues.push(r);
        }
        Ok(CharacterTable { group, field, degrees, values, residues })
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyClassData {
        self.group.classes()
    }

    /// Number of irreducible characters.
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn degree(&self, chi: usize) -> u64 {
        self.degrees[chi]
    }

    pub fn row(&self, chi: usize) -> &[Cyclotomic] {
        &self.values[chi]
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.values
    }

    pub fn value(&self, chi: usize, class: usize) -> &Cyclotomic {
        &self.values[chi][class]
    }

    pub fn character(&self, chi: usize) -> ClassFunction {
        ClassFunction::new(self.group.clone(), self.values[chi].clone()).expect("row length matches")
    }

    /// Prime field used for the construction.
    pub fn field(&self) -> &ModField {
        &self.field
    }

    /// Values of a row reduced modulo the Dixon prime.
    pub fn residues(&self, chi: usize) -> &[u64] {
        &self.residues[chi]
    }

    pub fn linear_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 1).count()
    }

    /// `[f, chi]` for every irreducible `chi`, using `chi(g^-1) = conj chi(g)`.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<Cyclotomic>> {
        if !f.group().same_as(&self.group) {
            return Err(Error::GroupMismatch);
        }
        let cd = self.classes();
        let order = num_rational::BigRational::from_integer((self.group.order() as i64).into());
        let inv_order = num_traits::Inv::inv(order);
        Ok((0..self.len())
            .map(|chi| {
                let mut acc = Cyclotomic::zero();
                for (c, v) in f.values().iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    let w = &self.values[chi][cd.inverse_class(c)];
                    if w.is_zero() {
                        continue;
                    }
                    acc = &acc + &(v * w).scale_int(cd.size(c) as i64);
                }
                acc.scale(&inv_order)
            })
            .collect())
    }

    /// Irreducible constituents of a character with their multiplicities.
    pub fn constituents(&self, f: &ClassFunction) -> Result<Vec<(usize, u64)>> {
        if !f.group().same_as(&self.group) {
            return Err(Error::GroupMismatch);
        }
        if let Some(out) = self.constituents_mod(f) {
            return Ok(out);
        }
        let mut out = Vec::new();
        for (chi, m) in self.decompose(f)?.into_iter().enumerate() {
            match m.to_i64() {
                Some(0) => {}
                Some(v) if v > 0 => out.push((chi, v as u64)),
                _ => {
                    return Err(Error::CheckFailed(format!(
                        "class function is not a character: multiplicity {} at row {}",
                        m, chi
                    )))
                }
            }
        }
        Ok(out)
    }

    /// Multiplicities from inner products over `F_ell`, accepted only if
    /// they recompose `f` exactly.
    fn constituents_mod(&self, f: &ClassFunction) -> Option<Vec<(usize, u64)>> {
        use crate::modp::{add, inv, mul};
        let ModField { ell, zpow, .. } = &self.field;
        let ell = *ell;
        let cd = self.classes();
        let res: Vec<u64> = f.values().iter().map(|v| v.residue(ell, zpow)).collect::<Option<_>>()?;
        let bound = u64::try_from(f.values()[0].to_i64()?).ok()?;
        let inv_order = inv(self.group.order() as u64 % ell, ell);
        let mut out = Vec::new();
        for chi in 0..self.len() {
            let mut acc = 0;
            for (c, &r) in res.iter().enumerate() {
                let w = self.residues[chi][cd.inverse_class(c)];
                acc = add(acc, mul(mul(r, w, ell), cd.size(c) as u64 % ell, ell), ell);
            }
            let m = mul(acc, inv_order, ell);
            if m > bound {
                return None;
            }
            if m > 0 {
                out.push((chi, m));
            }
        }
        for (c, v) in f.values().iter().enumerate() {
            let sum: Cyclotomic = out.iter().map(|&(chi, m)| self.values[chi][c].scale_int(m as i64)).sum();
            if &sum != v {
                return None;
            }
        }
        Some(out)
    }

    /// Index of the row equal to `f`, if `f` is irreducible.
    pub fn index_of(&self, f: &ClassFunction) -> Option<usize> {
        if !f.group().same_as(&self.group) {
            return None;
        }
        self.values.iter().position(|row| row.as_slice() == f.values())
    }

    /// Exact check of both orthogonality relations.
    pub fn check_orthogonality(&self) -> Result<()> {
        let cd = self.classes();
        let k = self.len();
        let order = self.group.order() as i64;
        for i in 0..k {
            for j in i..k {
                let mut acc = Cyclotomic::zero();
                for c in 0..k {
                    let a = &self.values[i][c];
                    let b = &self.values[j][cd.inverse_class(c)];
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b).scale_int(cd.size(c) as i64);
                    }
                }
                let expected = if i == j { order } else { 0 };
                if acc != Cyclotomic::from_integer(expected) {
                    return Err(Error::CheckFailed(format!("row orthogonality fails for rows {} and {}", i, j)));
                }
            }
        }
        for c in 0..k {
            for d in c..k {
                let mut acc = Cyclotomic::zero();
                let dbar = cd.inverse_class(d);
                for row in &self.values {
                    let (a, b) = (&row[c], &row[dbar]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                let expected = if c == d { order / cd.size(c) as i64 } else { 0 };
                if acc != Cyclotomic::from_integer(expected) {
                    return Err(Error::CheckFailed(format!("column orthogonality fails for classes {} and {}", c, d)));
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CharacterTable")
            .field("order", &self.group.order())
            .field("degrees", &self.degrees)
            .finish()
    }
}

fn row_order(da: &u64, va: &[Cyclotomic], db: &u64, vb: &[Cyclotomic]) -> Ordering {
    let trivial_a = va.iter().all(Cyclotomic::is_one);
    let trivial_b = vb.iter().all(Cyclotomic::is_one);
    da.cmp(db)
        .then_with(|| trivial_b.cmp(&trivial_a))
        .then_with(|| va.iter().zip(vb).map(|(x, y)| x.canonical_cmp(y)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal))
}
