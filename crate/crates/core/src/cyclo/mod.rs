//! Exact arithmetic in cyclotomic fields `Q(zeta_n)`.
//!
//! A [`Cyclotomic`] is a sparse rational combination of basis roots of
//! unity of its conductor (see [`basis`]). Every operation returns its
//! result in the smallest cyclotomic field containing it, so structural
//! equality is field equality.

mod basis;
mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use basis::euler_phi;
pub(crate) use basis::basis as field_basis;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// An element of `Q(zeta_n)` for its minimal conductor `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    /// Basis exponents in increasing order with nonzero coefficients.
    terms: Vec<(u32, Rational)>,
}

/// Conductors are never `2 (mod 4)`, since `Q(zeta_2m) = Q(zeta_m)` for odd `m`.
fn normalized_order(n: u32) -> u32 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { order: 1, terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(r: Rational) -> Self {
        if r.is_zero() {
            Self::zero()
        } else {
            Cyclotomic { order: 1, terms: vec![(0, r)] }
        }
    }

    /// `zeta_n^k` with `zeta_n = exp(2 pi i / n)`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "root of unity order must be positive");
        let (m, exp, sign) = if n % 4 == 2 {
            // zeta_2m = -zeta_m^((m+1)/2) for odd m
            let m = n / 2;
            let k = k.rem_euclid(n as i64);
            let e = (k * ((m as i64 + 1) / 2)).rem_euclid(m as i64);
            (m, e as u32, if k % 2 == 0 { 1 } else { -1 })
        } else {
            (n, k.rem_euclid(n as i64) as u32, 1)
        };
        let b = field_basis(m);
        let mut acc = vec![0i128; m as usize];
        for &(j, s) in b.expand(exp) {
            acc[j as usize] += (s as i128) * sign;
        }
        Self::from_dense_int(m, &acc)
    }

    /// `sum_t mults[t] * zeta_n^t`.
    pub fn from_root_multiplicities(n: u32, mults: &[i64]) -> Self {
        let m = normalized_order(n);
        let mut acc = vec![0i128; m as usize];
        let b = field_basis(m);
        for (t, &c) in mults.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (exp, sign) = if m != n {
                let k = t as i64;
                let e = (k * ((m as i64 + 1) / 2)).rem_euclid(m as i64);
                (e as u32, if k % 2 == 0 { 1i128 } else { -1 })
            } else {
                (t as u32 % m, 1i128)
            };
            for &(j, s) in b.expand(exp) {
                acc[j as usize] += sign * s as i128 * c as i128;
            }
        }
        Self::from_dense_int(m, &acc)
    }

    /// Conductor of the smallest cyclotomic field containing `self`.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Basis exponents of the conductor with their coefficients.
    pub fn terms(&self) -> &[(u32, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.order == 1 && self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.order != 1 {
            return None;
        }
        Some(self.terms.first().map(|t| t.1.clone()).unwrap_or_else(Rational::zero))
    }

    /// Integer value, if `self` is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|v| v.to_i64())
    }

    /// True when every coefficient is an integer, i.e. `self` is an
    /// algebraic integer (the basis roots span `Z[zeta_n]`).
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    fn from_dense_int(n: u32, acc: &[i128]) -> Self {
        let terms = acc
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k as u32, Rational::from_integer(BigInt::from(c))))
            .collect();
        Self::normalize(n, terms)
    }

    fn from_dense(n: u32, acc: Vec<Rational>) -> Self {
        let terms = acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k as u32, c)).collect();
        Self::normalize(n, terms)
    }

    /// Descends to the minimal conductor. `terms` must be sorted basis
    /// terms of `Q(zeta_n)` with nonzero coefficients.
    fn normalize(mut n: u32, mut terms: Vec<(u32, Rational)>) -> Self {
        'descend: loop {
            if terms.is_empty() {
                return Self::zero();
            }
            if n == 1 {
                break;
            }
            let b = field_basis(n);
            for (qi, pp) in b.parts.iter().enumerate() {
                if pp.p == 2 || pp.e >= 2 {
                    let step = if pp.p == 2 && pp.e == 2 { 4 } else { pp.p };
                    if terms.iter().all(|(k, _)| k % step == 0) {
                        n /= step;
                        for t in terms.iter_mut() {
                            t.0 /= step;
                        }
                        terms.sort_by_key(|t| t.0);
                        continue 'descend;
                    }
                } else if let Some(sub) = Self::descend_squarefree(&b, qi, &terms) {
                    n /= pp.p;
                    terms = sub;
                    continue 'descend;
                }
            }
            break;
        }
        Cyclotomic { order: n, terms }
    }

    /// For a prime `q` exactly dividing `n`: an element lies in
    /// `Q(zeta_{n/q})` iff its terms come in complete blocks over the `q`
    /// nonzero digits with equal coefficients.
    fn descend_squarefree(
        b: &basis::Basis,
        qi: usize,
        terms: &[(u32, Rational)],
    ) -> Option<Vec<(u32, Rational)>> {
        let pp = b.parts[qi];
        let q = pp.p;
        if !terms.len().is_multiple_of(q as usize - 1) {
            return None;
        }
        let mut groups: std::collections::BTreeMap<u32, (usize, &Rational)> = Default::default();
        for (k, c) in terms {
            let a = b.component(*k, qi);
            let base = ((*k as u64 + b.n as u64 * q as u64 - a as u64 * pp.cofactor as u64) % b.n as u64) as u32;
            match groups.get_mut(&base) {
                Some(entry) => {
                    if entry.1 != c {
                        return None;
                    }
                    entry.0 += 1;
                }
                None => {
                    groups.insert(base, (1, c));
                }
            }
        }
        if groups.values().any(|(count, _)| *count != q as usize - 1) {
            return None;
        }
        Some(groups.into_iter().map(|(base, (_, c))| (base / q, -c.clone())).collect())
    }

    /// Coefficients of `self` on the basis of `Q(zeta_n)`, where the
    /// conductor of `self` must divide `n`.
    fn lift_into(&self, n: u32, acc: &mut [Rational]) {
        debug_assert_eq!(n % self.order, 0);
        let b = field_basis(n);
        let scale = n / self.order;
        for (k, c) in &self.terms {
            for &(j, s) in b.expand(k * scale) {
                if s > 0 {
                    acc[j as usize] += c;
                } else {
                    acc[j as usize] -= c;
                }
            }
        }
    }

    /// Dense coordinate vector on the basis of `Q(zeta_n)`; the conductor
    /// of `self` must divide `n` (with `n` not `2 mod 4`).
    pub fn coordinates(&self, n: u32) -> Vec<Rational> {
        let n = normalized_order(n);
        assert_eq!(n % self.order, 0, "conductor {} does not divide {}", self.order, n);
        let mut acc = vec![Rational::zero(); n as usize];
        self.lift_into(n, &mut acc);
        let b = field_basis(n);
        b.exponents.iter().map(|&k| std::mem::take(&mut acc[k as usize])).collect()
    }

    fn common_order(&self, other: &Self) -> u32 {
        self.order.lcm(&other.order)
    }

    fn small_int_terms(&self) -> Option<Vec<(u32, i64)>> {
        self.terms
            .iter()
            .map(|(k, c)| if c.is_integer() { c.numer().to_i64().map(|v| (*k, v)) } else { None })
            .collect()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic { order: self.order, terms: self.terms.iter().map(|(k, c)| (*k, c * r)).collect() }
    }

    pub fn scale_int(&self, v: i64) -> Self {
        self.scale(&Rational::from_integer(BigInt::from(v)))
    }

    /// Image under the Galois automorphism `zeta_n -> zeta_n^t`, with `t`
    /// coprime to the conductor.
    pub fn galois(&self, t: i64) -> Self {
        let n = self.order;
        if n == 1 {
            return self.clone();
        }
        assert_eq!(t.rem_euclid(n as i64).gcd(&(n as i64)), 1, "Galois exponent must be a unit");
        let b = field_basis(n);
        let mut acc = vec![Rational::zero(); n as usize];
        for (k, c) in &self.terms {
            let kk = ((*k as i64 * t).rem_euclid(n as i64)) as u32;
            for &(j, s) in b.expand(kk) {
                if s > 0 {
                    acc[j as usize] += c;
                } else {
                    acc[j as usize] -= c;
                }
            }
        }
        Self::from_dense(n, acc)
    }

    /// Complex conjugate, `zeta -> zeta^-1`.
    pub fn conjugate(&self) -> Self {
        self.galois(-1)
    }

    /// Sum of all Galois conjugates over `Q`; always rational.
    pub fn trace(&self) -> Rational {
        let n = self.order as i64;
        let mut acc = Cyclotomic::zero();
        for t in 1..=n {
            if t.gcd(&n) == 1 {
                acc = &acc + &self.galois(t);
            }
        }
        acc.to_rational().expect("trace of a cyclotomic is rational")
    }

    /// Multiplicative inverse via the norm: `x^-1 = prod_{s != 1} s(x) / N(x)`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        let n = self.order as i64;
        let mut others = Cyclotomic::one();
        for t in 2..n {
            if t.gcd(&n) == 1 {
                others = &others * &self.galois(t);
            }
        }
        let norm = (self * &others).to_rational().expect("norm is rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// Approximate value under `zeta_n -> exp(2 pi i / n)`. Rendering only.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        let mut z = Complex64::new(0.0, 0.0);
        for (k, c) in &self.terms {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let angle = 2.0 * std::f64::consts::PI * (*k as f64) / n;
            z += Complex64::from_polar(v, angle);
        }
        z
    }

    /// Image in `F_ell` under `zeta_n -> z^(e/n)`, where `zpow[j] = z^j` for
    /// a primitive `e`-th root `z` modulo `ell`. `None` when the conductor
    /// does not divide `e` or a denominator vanishes modulo `ell`.
    pub fn residue(&self, ell: u64, zpow: &[u64]) -> Option<u64> {
        let e = zpow.len() as u32;
        if !e.is_multiple_of(self.order) {
            return None;
        }
        let scale = (e / self.order) as u64;
        let ellb = BigInt::from(ell);
        let mut acc: u64 = 0;
        for (k, c) in &self.terms {
            let num = c.numer().mod_floor(&ellb).to_u64()?;
            let den = c.denom().mod_floor(&ellb).to_u64()?;
            if den == 0 {
                return None;
            }
            let v = crate::modp::mul(num, crate::modp::inv(den, ell), ell);
            let root = zpow[((*k as u64 * scale) % e as u64) as usize];
            acc = (acc + crate::modp::mul(v, root, ell)) % ell;
        }
        Some(acc)
    }

    /// Deterministic total order used for canonical sorting; not an
    /// ordering of the field.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&other.order).then_with(|| self.terms.cmp(&other.terms))
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, other: &Cyclotomic) -> Cyclotomic {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.order == other.order {
            let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
            let (mut i, mut j) = (0, 0);
            while i < self.terms.len() || j < other.terms.len() {
                let take = match (self.terms.get(i), other.terms.get(j)) {
                    (Some(a), Some(b)) => a.0.cmp(&b.0),
                    (Some(_), None) => Ordering::Less,
                    _ => Ordering::Greater,
                };
                match take {
                    Ordering::Less => {
                        out.push(self.terms[i].clone());
                        i += 1;
                    }
                    Ordering::Greater => {
                        out.push(other.terms[j].clone());
                        j += 1;
                    }
                    Ordering::Equal => {
                        let c = &self.terms[i].1 + &other.terms[j].1;
                        if !c.is_zero() {
                            out.push((self.terms[i].0, c));
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
            return Cyclotomic::normalize(self.order, out);
        }
        let n = self.common_order(other);
        let mut acc = vec![Rational::zero(); n as usize];
        self.lift_into(n, &mut acc);
        other.lift_into(n, &mut acc);
        Cyclotomic::from_dense(n, acc)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, other: &Cyclotomic) -> Cyclotomic {
        self + &(-other)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, other: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero();
        }
        if let Some(r) = other.to_rational() {
            return self.scale(&r);
        }
        if let Some(r) = self.to_rational() {
            return other.scale(&r);
        }
        let n = self.common_order(other);
        let b = field_basis(n);
        let (sa, sb) = (n / self.order, n / other.order);
        if let (Some(x), Some(y)) = (self.small_int_terms(), other.small_int_terms()) {
            let mut acc = vec![0i128; n as usize];
            for &(ka, ca) in &x {
                for &(kb, cb) in &y {
                    let k = ((ka as u64 * sa as u64 + kb as u64 * sb as u64) % n as u64) as u32;
                    let v = ca as i128 * cb as i128;
                    for &(j, s) in b.expand(k) {
                        acc[j as usize] += s as i128 * v;
                    }
                }
            }
            return Cyclotomic::from_dense_int(n, &acc);
        }
        let mut acc = vec![Rational::zero(); n as usize];
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let k = ((*ka as u64 * sa as u64 + *kb as u64 * sb as u64) % n as u64) as u32;
                let v = ca * cb;
                for &(j, s) in b.expand(k) {
                    if s > 0 {
                        acc[j as usize] += &v;
                    } else {
                        acc[j as usize] -= &v;
                    }
                }
            }
        }
        Cyclotomic::from_dense(n, acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, other: Cyclotomic) -> Cyclotomic {
                (&self).$m(&other)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, other: &Cyclotomic) -> Cyclotomic {
                (&self).$m(other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Cyclotomic {
        iter.fold(Cyclotomic::zero(), |a, b| &a + &b)
    }
}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Cyclotomic::from_integer(v)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(r)
    }
}

impl fmt::Display for Cyclotomic {
    /// `a0 + a1*z(n)^k + ...` over basis exponents; `z(n)` is
    /// `exp(2 pi i / n)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            if *k == 0 {
                write!(f, "{}", mag)?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{}*", mag)?;
            }
            if *k == 1 {
                write!(f, "z({})", self.order)?;
            } else {
                write!(f, "z({})^{}", self.order, k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl std::str::FromStr for Cyclotomic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse_cyclotomic(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn roots_of_unity_basics() {
        assert!(z(1, 0).is_one());
        assert_eq!(z(2, 1), Cyclotomic::from_integer(-1));
        assert_eq!(&z(3, 1) + &z(3, 2), Cyclotomic::from_integer(-1));
        assert_eq!(z(4, 2), Cyclotomic::from_integer(-1));
        assert_eq!(z(6, 2), z(3, 1));
        assert_eq!(z(6, 1), -z(3, 2));
        assert_eq!(z(12, 4), z(3, 1));
        assert_eq!(z(7, 7), Cyclotomic::one());
        assert_eq!(z(5, -1), z(5, 4));
    }

    #[test]
    fn golden_ratio_identity() {
        // (z + z^4)(z^2 + z^3) = z + z^2 + z^3 + z^4 = -1 in Q(zeta_5)
        let a = &z(5, 1) + &z(5, 4);
        let b = &z(5, 2) + &z(5, 3);
        assert_eq!(&a * &b, Cyclotomic::from_integer(-1));
        // a = (sqrt5 - 1)/2 satisfies a^2 + a - 1 = 0
        let lhs = &(&(&a * &a) + &a) - &Cyclotomic::one();
        assert!(lhs.is_zero());
        assert_eq!(a.order(), 5);
    }

    #[test]
    fn minimal_conductor() {
        // sqrt(-3) = z3 - z3^2 lives in Q(zeta_3) even when built in Q(zeta_12)
        let s = &z(12, 4) - &z(12, 8);
        assert_eq!(s.order(), 3);
        // i = zeta_4 built from zeta_8
        assert_eq!(z(8, 2).order(), 4);
        // sqrt2 = z8 + z8^7
        let r2 = &z(8, 1) + &z(8, 7);
        assert_eq!(r2.order(), 8);
        assert_eq!(&r2 * &r2, Cyclotomic::from_integer(2));
        // Gaussian period of order 7 has conductor 7
        let eta = &(&z(7, 1) + &z(7, 2)) + &z(7, 4);
        assert_eq!(eta.order(), 7);
        // a value of conductor 91 drops to 13 when the 7-part cancels
        let x = &z(91, 7) + &z(91, 14);
        assert_eq!(x.order(), 13);
    }

    #[test]
    fn division() {
        let a = &z(8, 1) - &z(8, 3);
        assert!(a.checked_div(&a).unwrap().is_one());
        assert_eq!(Cyclotomic::zero().inverse().unwrap_err(), Error::DivisionByZero);
        let b = &(&z(7, 1) + &z(7, 3)) + &Cyclotomic::from_integer(2);
        let inv = b.inverse().unwrap();
        assert!((&b * &inv).is_one());
    }

    #[test]
    fn conjugation() {
        let r = Cyclotomic::from_rational(Rational::new(3.into(), 4.into()));
        assert_eq!(r.conjugate(), r);
        assert_eq!(z(3, 1).conjugate(), z(3, 2));
        let a = &z(12, 1) + &z(12, 5).scale_int(3);
        assert_eq!(a.conjugate().conjugate(), a);
    }

    #[test]
    fn float_embedding() {
        let one = Cyclotomic::one().to_complex();
        assert!((one.re - 1.0).abs() < 1e-12 && one.im.abs() < 1e-12);
        let i = z(4, 1).to_complex();
        assert!(i.re.abs() < 1e-12 && (i.im - 1.0).abs() < 1e-12);
        let eta = (&(&z(7, 1) + &z(7, 2)) + &z(7, 4)).to_complex();
        // numeric oracle: direct summation of exp(2 pi i k / 7)
        let direct: Complex64 = [1.0, 2.0, 4.0]
            .iter()
            .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k / 7.0))
            .sum();
        assert!((eta - direct).norm() < 1e-12);
        assert!((eta.re + 0.5).abs() < 1e-12 && (eta.im - 1.3228756555322954).abs() < 1e-12);
    }

    #[test]
    fn trace_is_rational() {
        let a = &z(9, 2) + &z(9, 1).scale_int(5);
        assert_eq!(a.trace(), Rational::zero());
        assert_eq!(Cyclotomic::one().trace(), Rational::one());
        assert_eq!(z(5, 1).trace(), Rational::from_integer((-1).into()));
    }

    #[test]
    fn multiplicities() {
        // 2 + 0*z + 1*z^2 in Q(zeta_3) -> 2 + z3^2
        let v = Cyclotomic::from_root_multiplicities(3, &[2, 0, 1]);
        assert_eq!(v, &Cyclotomic::from_integer(2) + &z(3, 2));
        let w = Cyclotomic::from_root_multiplicities(6, &[0, 1, 0, 0, 0, 1]);
        assert_eq!(w, Cyclotomic::one());
    }

    #[test]
    fn residues() {
        // ell = 13, e = 6, z = 4 is a primitive 6th root mod 13 (4^3 = 64 = 12 = -1)
        let ell = 13;
        let zpow: Vec<u64> = (0..6).scan(1u64, |acc, _| {
            let v = *acc;
            *acc = *acc * 4 % ell;
            Some(v)
        }).collect();
        assert_eq!(z(3, 1).residue(ell, &zpow), Some(16 % 13));
        assert_eq!(Cyclotomic::from_integer(-1).residue(ell, &zpow), Some(12));
        assert_eq!(z(5, 1).residue(ell, &zpow), None);
    }

    #[test]
    fn render() {
        assert_eq!(Cyclotomic::zero().to_string(), "0");
        assert_eq!(Cyclotomic::from_integer(-3).to_string(), "-3");
        assert_eq!(z(4, 1).to_string(), "z(4)");
        let x = &z(4, 1).scale_int(-2) + &Cyclotomic::from_rational(Rational::new(1.into(), 2.into()));
        assert_eq!(x.to_string(), "1/2 - 2*z(4)");
        assert_eq!(z(3, 1).to_string(), "z(3)");
        assert_eq!(Cyclotomic::one().scale_int(-1).to_string(), "-1");
    }
}
