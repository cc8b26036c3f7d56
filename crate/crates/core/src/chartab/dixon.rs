//! Class-algebra eigenvectors over `F_ell` and their exact lift.

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::modp::{self, ModField};
use crate::perm::PermGroup;

/// Structure constants of the class algebra.
///
/// `get(i, j, k)` is the number of pairs `(x, y)` with `x` in class `i`,
/// `y` in class `j` and `xy = rep(k)`, so that `C_i C_j = sum_k a_ijk C_k`
/// for the class sums `C_i`.
#[derive(Debug, Clone)]
pub struct ClassAlgebra {
    k: usize,
    data: Vec<u32>,
}

impl ClassAlgebra {
    pub fn compute(g: &PermGroup) -> Self {
        let cd = g.classes();
        let k = cd.count();
        let mut data = vec![0u32; k * k * k];
        let els = g.elements();
        let inverses: Vec<usize> =
            els.iter().map(|x| g.index_of(&x.inverse()).expect("group is closed")).collect();
        for c in 0..k {
            let r = cd.rep(c);
            for xi in 0..els.len() {
                let i = cd.class_of_index(xi);
                // y = x^-1 r
                let y = els[inverses[xi]].compose(r);
                let j = cd.class_of_index(g.index_of(&y).expect("group is closed"));
                data[(i * k + j) * k + c] += 1;
            }
        }
        ClassAlgebra { k, data }
    }

    pub fn class_count(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.data[(i * self.k + j) * self.k + k]
    }

    /// Matrix `A_i` with `A_i[j][k] = a_ijk`, reduced modulo `ell`.
    fn matrix_mod(&self, i: usize, ell: u64) -> Vec<Vec<u64>> {
        (0..self.k).map(|j| (0..self.k).map(|k| self.get(i, j, k) as u64 % ell).collect()).collect()
    }
}

/// Smallest prime `ell = 1 (mod exponent)` with `ell > 2|G|`.
pub fn dixon_prime(g: &PermGroup) -> u64 {
    modp::prime_congruent_one(g.exponent() as u64, 2 * g.order() as u64)
}

/// Splits `F_ell^k` into the common one-dimensional eigenspaces of all
/// `A_i`, processing classes in order. Returns normalized central
/// character vectors with first entry 1.
pub(super) fn central_characters(alg: &ClassAlgebra, ell: u64) -> Result<Vec<Vec<u64>>> {
    let k = alg.class_count();
    let identity: Vec<Vec<u64>> =
        (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![identity];
    for i in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let a = alg.matrix_mod(i, ell);
        let mut next = Vec::with_capacity(spaces.len());
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            next.extend(split(&a, space, ell)?);
        }
        spaces = next;
    }
    if let Some(s) = spaces.iter().find(|s| s.len() > 1) {
        return Err(Error::TableFailed(format!("eigenspace of dimension {} did not split", s.len())));
    }
    spaces
        .into_iter()
        .map(|s| {
            let v = &s[0];
            if v[0] == 0 {
                return Err(Error::TableFailed("eigenvector vanishes at the identity class".into()));
            }
            let iv = modp::inv(v[0], ell);
            Ok(v.iter().map(|&x| modp::mul(x, iv, ell)).collect())
        })
        .collect()
}

/// Splits an `A`-invariant subspace, given by row-reduced basis vectors,
/// into eigenspaces of `A` ordered by eigenvalue.
fn split(a: &[Vec<u64>], basis: Vec<Vec<u64>>, ell: u64) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = basis.len();
    let k = a.len();
    let pivots: Vec<usize> =
        basis.iter().map(|w| w.iter().position(|&x| x != 0).expect("basis vector is nonzero")).collect();
    // column j of the restricted matrix holds the coordinates of A w_j
    let mut restricted = vec![vec![0u64; d]; d];
    for (j, w) in basis.iter().enumerate() {
        for (r, &pr) in pivots.iter().enumerate() {
            let mut s = 0u64;
            for (t, &wt) in w.iter().enumerate() {
                if wt != 0 && a[pr][t] != 0 {
                    s = modp::add(s, modp::mul(a[pr][t], wt, ell), ell);
                }
            }
            restricted[r][j] = s;
        }
    }
    let poly = modp::char_poly(&restricted, ell);
    let eigenvalues = modp::roots(&poly, ell);
    if eigenvalues.len() == 1 {
        return Ok(vec![basis]);
    }
    let mut out = Vec::with_capacity(eigenvalues.len());
    let mut total = 0;
    for lambda in eigenvalues {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| if r == c { modp::sub(restricted[r][c], lambda, ell) } else { restricted[r][c] })
                    .collect()
            })
            .collect();
        let null = modp::nullspace(&shifted, d, ell);
        let mut vecs: Vec<Vec<u64>> = null
            .iter()
            .map(|y| {
                let mut v = vec![0u64; k];
                for (j, &yj) in y.iter().enumerate() {
                    if yj == 0 {
                        continue;
                    }
                    for (t, &wt) in basis[j].iter().enumerate() {
                        v[t] = modp::add(v[t], modp::mul(yj, wt, ell), ell);
                    }
                }
                v
            })
            .collect();
        modp::rref(&mut vecs, ell);
        total += vecs.len();
        out.push(vecs);
    }
    if total != d {
        return Err(Error::TableFailed("class matrix is not diagonalizable modulo the Dixon prime".into()));
    }
    Ok(out)
}

/// Degree and mod-`ell` values of the character with central character
/// `omega`.
pub(super) fn values_mod(g: &PermGroup, omega: &[u64], ell: u64) -> Result<(u64, Vec<u64>)> {
    let cd = g.classes();
    let order = g.order() as u64;
    let mut s = 0u64;
    for (c, &w) in omega.iter().enumerate() {
        let h = cd.size(c) as u64;
        let t = modp::mul(w, omega[cd.inverse_class(c)], ell);
        s = modp::add(s, modp::mul(t, modp::inv(h % ell, ell), ell), ell);
    }
    if s == 0 {
        return Err(Error::TableFailed("degenerate central character".into()));
    }
    let d2 = modp::mul(order % ell, modp::inv(s, ell), ell);
    let d = (1..=order)
        .take_while(|d| d * d <= order)
        .find(|d| d * d % ell == d2)
        .ok_or_else(|| Error::TableFailed("degree does not lift to an integer".into()))?;
    if !order.is_multiple_of(d) {
        return Err(Error::TableFailed(format!("degree {} does not divide the group order", d)));
    }
    let values = omega
        .iter()
        .enumerate()
        .map(|(c, &w)| modp::mul(modp::mul(d, w, ell), modp::inv(cd.size(c) as u64 % ell, ell), ell))
        .collect();
    Ok((d, values))
}

/// Lifts a character given modulo `ell` to exact cyclotomic values.
///
/// On a class of element order `o` the value is `sum_t m_t zeta_o^t` with
/// `m_t = o^-1 sum_s chi(g^s) z_o^(-ts)`.
pub(super) fn lift(g: &PermGroup, degree: u64, values: &[u64], field: &ModField) -> Result<Vec<Cyclotomic>> {
    let cd = g.classes();
    let ell = field.ell;
    (0..cd.count())
        .map(|c| {
            let o = cd.rep_order(c) as i64;
            let step = field.e as i64 / o;
            let inv_o = modp::inv(o as u64 % ell, ell);
            let mut mults = Vec::with_capacity(o as usize);
            let mut total = 0u64;
            for t in 0..o {
                let mut acc = 0u64;
                for s in 0..o {
                    let v = values[cd.power_class(c, s)];
                    if v != 0 {
                        acc = modp::add(acc, modp::mul(v, field.root_pow(-t * s * step), ell), ell);
                    }
                }
                let m = modp::mul(acc, inv_o, ell);
                if m > degree {
                    return Err(Error::TableFailed(format!(
                        "eigenvalue multiplicity {} exceeds degree {} on class {}",
                        m, degree, c
                    )));
                }
                total += m;
                mults.push(m as i64);
            }
            if total != degree {
                return Err(Error::TableFailed(format!("multiplicities on class {} sum to {} not {}", c, total, degree)));
            }
            Ok(Cyclotomic::from_root_multiplicities(o as u32, &mults))
        })
        .collect()
}
