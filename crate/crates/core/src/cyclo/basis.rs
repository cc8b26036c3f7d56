//! Root-of-unity bases of `Q(zeta_n)`.
//!
//! `zeta_n^k` factors as a product of prime-power roots `zeta_{q^e}^{a_q}`.
//! The basis keeps, for every prime power `q^e || n`, the exponents whose
//! top base-`q` digit `a_q div q^(e-1)` is nonzero (odd `q`) or zero
//! (`q = 2`). The defining relations
//!
//! * `sum_{i<q} zeta_{q^e}^(a + i q^(e-1)) = 0` for odd `q`,
//! * `zeta_{2^e}^(a + 2^(e-1)) = -zeta_{2^e}^a`,
//!
//! rewrite every other root as a signed sum of basis roots. Roots of unity
//! stay sparse in this basis and subfields `Q(zeta_m)` sit inside it in a
//! way that can be read off the exponents.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;

#[derive(Debug, Clone, Copy)]
pub(crate) struct PrimePart {
    pub p: u32,
    pub e: u32,
    /// `p^e`
    pub pe: u32,
    /// `n / p^e`
    pub cofactor: u32,
    /// inverse of the cofactor modulo `p^e`
    pub inv: u32,
}

#[derive(Debug)]
pub(crate) struct Basis {
    pub n: u32,
    pub parts: Vec<PrimePart>,
    offsets: Vec<u32>,
    expansions: Vec<(u32, i8)>,
    /// Basis exponents in increasing order.
    pub exponents: Vec<u32>,
}

impl Basis {
    fn build(n: u32) -> Basis {
        assert!(n >= 1 && n % 4 != 2, "conductor {} is not normalized", n);
        let mut parts = Vec::new();
        let mut m = n;
        let mut p = 2;
        while m > 1 {
            if m.is_multiple_of(p) {
                let mut e = 0;
                let mut pe = 1;
                while m.is_multiple_of(p) {
                    m /= p;
                    e += 1;
                    pe *= p;
                }
                let cofactor = n / pe;
                let inv = mod_inverse(cofactor % pe, pe);
                parts.push(PrimePart { p, e, pe, cofactor, inv });
            }
            p += 1;
        }
        let mut offsets = Vec::with_capacity(n as usize + 1);
        let mut expansions = Vec::new();
        let mut exponents = Vec::new();
        for k in 0..n {
            offsets.push(expansions.len() as u32);
            let comps: Vec<u32> = parts.iter().map(|pp| ((k % pp.pe) as u64 * pp.inv as u64 % pp.pe as u64) as u32).collect();
            let mut partial: Vec<(Vec<u32>, i8)> = vec![(comps, 1)];
            for (qi, pp) in parts.iter().enumerate() {
                let top = pp.pe / pp.p;
                let mut next = Vec::with_capacity(partial.len());
                for (c, s) in partial {
                    let digit = c[qi] / top;
                    if pp.p == 2 {
                        if digit == 1 {
                            let mut c2 = c.clone();
                            c2[qi] -= top;
                            next.push((c2, -s));
                        } else {
                            next.push((c, s));
                        }
                    } else if digit == 0 {
                        for i in 1..pp.p {
                            let mut c2 = c.clone();
                            c2[qi] += i * top;
                            next.push((c2, -s));
                        }
                    } else {
                        next.push((c, s));
                    }
                }
                partial = next;
            }
            let is_basis = partial.len() == 1 && partial[0].1 == 1 && {
                let kk = compose(&parts, &partial[0].0, n);
                kk == k
            };
            if is_basis {
                exponents.push(k);
            }
            for (c, s) in partial {
                expansions.push((compose(&parts, &c, n), s));
            }
        }
        offsets.push(expansions.len() as u32);
        Basis { n, parts, offsets, expansions, exponents }
    }

    /// `zeta_n^k` as a signed sum of basis exponents.
    pub fn expand(&self, k: u32) -> &[(u32, i8)] {
        let k = k as usize;
        &self.expansions[self.offsets[k] as usize..self.offsets[k + 1] as usize]
    }

    #[cfg(test)]
    pub fn dimension(&self) -> usize {
        self.exponents.len()
    }

    /// Component `a_q` of exponent `k` at prime part `qi`.
    pub fn component(&self, k: u32, qi: usize) -> u32 {
        let pp = &self.parts[qi];
        ((k % pp.pe) as u64 * pp.inv as u64 % pp.pe as u64) as u32
    }
}

fn compose(parts: &[PrimePart], comps: &[u32], n: u32) -> u32 {
    let mut k: u64 = 0;
    for (pp, &a) in parts.iter().zip(comps) {
        k = (k + a as u64 * pp.cofactor as u64) % n as u64;
    }
    k as u32
}

pub(crate) fn mod_inverse(a: u32, m: u32) -> u32 {
    if m == 1 {
        return 0;
    }
    let g = (a as i64).extended_gcd(&(m as i64));
    debug_assert_eq!(g.gcd, 1);
    g.x.rem_euclid(m as i64) as u32
}

pub(crate) fn basis(n: u32) -> Arc<Basis> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Basis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(b) = cache.read().expect("basis cache poisoned").get(&n) {
        return b.clone();
    }
    let b = Arc::new(Basis::build(n));
    cache.write().expect("basis cache poisoned").entry(n).or_insert(b).clone()
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_match_totient() {
        for n in 1..200u32 {
            if n % 4 == 2 {
                continue;
            }
            let b = basis(n);
            assert_eq!(b.dimension() as u32, euler_phi(n), "n = {}", n);
        }
    }

    #[test]
    fn expansions_sum_to_root() {
        // Check numerically that every expansion reproduces its root.
        for n in [1u32, 3, 4, 5, 8, 9, 12, 15, 21, 36, 91] {
            let b = basis(n);
            for k in 0..n {
                let target = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                let (mut re, mut im) = (0.0, 0.0);
                for &(j, s) in b.expand(k) {
                    let a = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
                    re += s as f64 * a.cos();
                    im += s as f64 * a.sin();
                }
                assert!((re - target.cos()).abs() < 1e-9 && (im - target.sin()).abs() < 1e-9, "n={} k={}", n, k);
            }
        }
    }
}
