//! Linear algebra over prime fields `F_ell` with `ell < 2^32`.

use crate::perm::is_prime;

#[inline]
pub fn mul(a: u64, b: u64, ell: u64) -> u64 {
    ((a as u128 * b as u128) % ell as u128) as u64
}

#[inline]
pub fn add(a: u64, b: u64, ell: u64) -> u64 {
    let s = a + b;
    if s >= ell {
        s - ell
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64, ell: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + ell - b
    }
}

pub fn pow(mut a: u64, mut e: u64, ell: u64) -> u64 {
    let mut r = 1 % ell;
    a %= ell;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, ell);
        }
        a = mul(a, a, ell);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue.
pub fn inv(a: u64, ell: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(ell));
    pow(a, ell - 2, ell)
}

/// Reduces a signed integer.
pub fn reduce(v: i64, ell: u64) -> u64 {
    v.rem_euclid(ell as i64) as u64
}

/// Smallest prime `ell` with `ell = 1 (mod e)` and `ell > bound`.
pub fn prime_congruent_one(e: u64, bound: u64) -> u64 {
    let mut ell = (bound / e) * e + 1;
    if ell <= bound {
        ell += e;
    }
    while !is_prime(ell) {
        ell += e;
    }
    ell
}

/// Smallest primitive root modulo the prime `ell`.
pub fn primitive_root(ell: u64) -> u64 {
    if ell == 2 {
        return 1;
    }
    let factors = crate::perm::prime_factors(ell - 1);
    (2..ell)
        .find(|&g| factors.iter().all(|&q| pow(g, (ell - 1) / q, ell) != 1))
        .expect("prime field has a primitive root")
}

/// `F_ell` together with a fixed primitive `e`-th root of unity.
#[derive(Debug, Clone)]
pub struct ModField {
    pub ell: u64,
    pub e: u64,
    pub z: u64,
    /// `zpow[j] = z^j` for `0 <= j < e`.
    pub zpow: Vec<u64>,
}

impl ModField {
    /// `ell` must be prime with `e | ell - 1`. The root is
    /// `g^((ell-1)/e)` for the smallest primitive root `g`.
    pub fn new(ell: u64, e: u64) -> Self {
        assert!(is_prime(ell) && (ell - 1).is_multiple_of(e));
        let z = pow(primitive_root(ell), (ell - 1) / e, ell);
        let mut zpow = Vec::with_capacity(e as usize);
        let mut x = 1;
        for _ in 0..e {
            zpow.push(x);
            x = mul(x, z, ell);
        }
        ModField { ell, e, z, zpow }
    }

    /// `z^j` for any integer `j`.
    pub fn root_pow(&self, j: i64) -> u64 {
        self.zpow[j.rem_euclid(self.e as i64) as usize]
    }
}

/// Dense matrix over `F_ell`, row major.
pub type Matrix = Vec<Vec<u64>>;

/// In-place reduced row echelon form; returns pivot columns.
pub fn rref(m: &mut Matrix, ell: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let iv = inv(m[r][c], ell);
        for x in m[r].iter_mut() {
            *x = mul(*x, iv, ell);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    if y != 0 {
                        *x = sub(*x, mul(f, y, ell), ell);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix, ell: u64) -> usize {
    let mut a = m.clone();
    rref(&mut a, ell).len()
}

/// Basis of the right null space `{ x : m x = 0 }`.
pub fn nullspace(m: &Matrix, cols: usize, ell: u64) -> Vec<Vec<u64>> {
    let mut a = m.clone();
    let pivots = rref(&mut a, ell);
    let mut is_pivot = vec![None; cols];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    let mut out = Vec::new();
    for free in 0..cols {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = sub(0, a[r][free], ell);
        }
        out.push(v);
    }
    out
}

/// Solves `x A = b` for a row vector `x`, where `A` has the given rows.
/// Returns `None` when inconsistent; when the solution is not unique
/// the second component is `false`.
pub fn solve_left(rows: &[Vec<u64>], b: &[u64], ell: u64) -> Option<(Vec<u64>, bool)> {
    let n = rows.len();
    let cols = b.len();
    // Transpose into the system A^T x = b.
    let mut aug: Matrix = (0..cols)
        .map(|j| {
            let mut r: Vec<u64> = rows.iter().map(|row| row[j]).collect();
            r.push(b[j]);
            r
        })
        .collect();
    let pivots = rref(&mut aug, ell);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![0u64; n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][n];
    }
    Some((x, pivots.len() == n))
}

/// Characteristic polynomial `det(xI - A)`, coefficients from the constant
/// term upward, via reduction to upper Hessenberg form.
pub fn char_poly(a: &Matrix, ell: u64) -> Vec<u64> {
    let n = a.len();
    let mut h = a.clone();
    for c in 0..n.saturating_sub(2) {
        let Some(p) = (c + 1..n).find(|&i| h[i][c] != 0) else { continue };
        if p != c + 1 {
            h.swap(p, c + 1);
            for row in h.iter_mut() {
                row.swap(p, c + 1);
            }
        }
        let iv = inv(h[c + 1][c], ell);
        for i in c + 2..n {
            let f = mul(h[i][c], iv, ell);
            if f == 0 {
                continue;
            }
            // row_i -= f * row_{c+1}; col_{c+1} += f * col_i
            let (top, bottom) = h.split_at_mut(i);
            for (x, &y) in bottom[0].iter_mut().zip(&top[c + 1]) {
                *x = sub(*x, mul(f, y, ell), ell);
            }
            for row in h.iter_mut() {
                let t = mul(f, row[i], ell);
                row[c + 1] = add(row[c + 1], t, ell);
            }
        }
    }
    // p_k = char poly of leading k x k block.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        // p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik * prod_{j=i+1..k} h_{j,j-1} * p_i
        let mut next = vec![0u64; k + 2];
        for (d, &c) in polys[k].iter().enumerate() {
            next[d + 1] = add(next[d + 1], c, ell);
            next[d] = sub(next[d], mul(h[k][k], c, ell), ell);
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = mul(prod, h[i + 1][i], ell);
            if prod == 0 {
                break;
            }
            let f = mul(h[i][k], prod, ell);
            if f == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = sub(next[d], mul(f, c, ell), ell);
            }
        }
        polys.push(next);
    }
    polys.pop().expect("nonempty")
}

pub fn eval_poly(p: &[u64], x: u64, ell: u64) -> u64 {
    p.iter().rev().fold(0, |acc, &c| add(mul(acc, x, ell), c, ell))
}

/// Distinct roots of `p` in `F_ell`, found by exhaustive evaluation.
pub fn roots(p: &[u64], ell: u64) -> Vec<u64> {
    (0..ell).filter(|&x| eval_poly(p, x, ell) == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dixon_style_primes() {
        assert_eq!(prime_congruent_one(2, 4), 5);
        assert_eq!(prime_congruent_one(6, 12), 13);
        assert_eq!(prime_congruent_one(1, 1), 2);
    }

    #[test]
    fn field_roots() {
        let f = ModField::new(13, 6);
        assert_eq!(pow(f.z, 6, 13), 1);
        assert_eq!(pow(f.z, 3, 13), 12);
        assert_eq!(f.root_pow(-1), f.zpow[5]);
        assert_eq!(primitive_root(13), 2);
    }

    #[test]
    fn nullspace_and_solve() {
        let ell = 7;
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = nullspace(&m, 3, ell);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m {
                let s = row.iter().zip(v).fold(0, |a, (&x, &y)| add(a, mul(x, y, ell), ell));
                assert_eq!(s, 0);
            }
        }
        let rows = vec![vec![1, 0, 1], vec![0, 1, 1]];
        let (x, unique) = solve_left(&rows, &[3, 4, 0], ell).unwrap();
        assert!(unique);
        assert_eq!(x, vec![3, 4]);
        assert!(solve_left(&rows, &[1, 1, 1], ell).is_none());
    }

    #[test]
    fn characteristic_polynomial() {
        let ell = 101;
        // companion-like matrix with eigenvalues 2, 3, 5
        let a = vec![vec![2, 1, 0], vec![0, 3, 7], vec![0, 0, 5]];
        let p = char_poly(&a, ell);
        assert_eq!(roots(&p, ell), vec![2, 3, 5]);
        let perm = vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]];
        let q = char_poly(&perm, ell);
        // x^3 - 1
        assert_eq!(q, vec![100, 0, 0, 1]);
        let dense = vec![vec![4, 9, 2, 1], vec![3, 5, 7, 8], vec![8, 1, 6, 2], vec![5, 5, 0, 3]];
        let c = char_poly(&dense, ell);
        for x in 0..ell {
            // det(xI - A) by cofactor oracle
            let m: Vec<Vec<i64>> = (0..4)
                .map(|i| (0..4).map(|j| (if i == j { x as i64 } else { 0 }) - dense[i][j] as i64).collect())
                .collect();
            assert_eq!(eval_poly(&c, x, ell), reduce(det(&m), ell));
        }
    }

    fn det(m: &[Vec<i64>]) -> i64 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, &v)| v).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum()
    }
}
