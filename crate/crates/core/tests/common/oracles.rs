//! Independent reference computations used to cross-check the library.

use std::collections::BTreeSet;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lifts_core::chartab::CharacterTable;
use lifts_core::perm::{PermGroup, Permutation};

const TOL: f64 = 1e-6;

/// Conjugacy classes by orbit closure over all elements, as sorted element
/// index sets.
pub fn classes_by_orbits(g: &PermGroup) -> Vec<BTreeSet<usize>> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for i in 0..g.order() {
        if seen[i] {
            continue;
        }
        let x = g.element(i);
        let cls: BTreeSet<usize> = g.elements().iter().map(|y| g.index_of(&x.conjugate_by(y)).unwrap()).collect();
        for &j in &cls {
            seen[j] = true;
        }
        out.push(cls);
    }
    out
}

/// `a[j][i][l] = #{(x, y) in C_j x C_i : xy = g_l}` over the library's
/// class numbering.
#[allow(clippy::needless_range_loop)]
pub fn structure_constants(g: &PermGroup) -> Vec<Vec<Vec<u64>>> {
    let cd = g.classes();
    let k = cd.count();
    let class_of: Vec<usize> = (0..g.order()).map(|i| cd.class_of_index(i)).collect();
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for l in 0..k {
        let gl = cd.rep(l);
        for x in g.elements() {
            let y = x.inverse().compose(gl);
            let (j, i) = (class_of[g.index_of(x).unwrap()], class_of[g.index_of(&y).unwrap()]);
            a[j][i][l] += 1;
        }
    }
    a
}

/// Character table from floating-point eigenvectors of a random
/// combination of class matrices.
pub fn burnside_table(g: &PermGroup) -> Vec<Vec<Complex64>> {
    let cd = g.classes();
    let k = cd.count();
    let a = structure_constants(g);
    for seed in 0..20u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r: Vec<f64> = (0..k).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let m = DMatrix::from_fn(k, k, |i, l| (0..k).map(|j| r[j] * a[j][i][l] as f64).sum::<f64>());
        let eig = m.complex_eigenvalues();
        let lambdas: Vec<Complex64> = eig.iter().copied().collect();
        let distinct = (0..k).all(|i| (0..i).all(|j| (lambdas[i] - lambdas[j]).norm() > 1e-5));
        if !distinct {
            continue;
        }
        let mc: DMatrix<Complex64> = m.map(|x| Complex64::new(x, 0.0));
        let mut rows = Vec::new();
        for lambda in lambdas {
            let shifted = &mc - DMatrix::from_diagonal_element(k, k, lambda);
            let svd = shifted.svd(false, true);
            let vt = svd.v_t.unwrap();
            let idx = svd.singular_values.iamin();
            let mut w: Vec<Complex64> = (0..k).map(|c| vt[(idx, c)].conj()).collect();
            let w0 = w[0];
            for x in w.iter_mut() {
                *x /= w0;
            }
            let norm: f64 = (0..k).map(|c| w[c].norm_sqr() / cd.size(c) as f64).sum();
            let degree = (g.order() as f64 / norm).sqrt();
            rows.push((0..k).map(|c| w[c] * degree / cd.size(c) as f64).collect());
        }
        return rows;
    }
    panic!("no separating combination found");
}

pub fn close(a: &[Complex64], b: &[Complex64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() < TOL)
}

/// Whether every row of `a` matches exactly one row of `b`.
pub fn same_rows(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    for row in a {
        match (0..b.len()).find(|&j| !used[j] && close(row, &b[j])) {
            Some(j) => used[j] = true,
            None => return false,
        }
    }
    true
}

pub fn table_floats(t: &CharacterTable) -> Vec<Vec<Complex64>> {
    t.rows().iter().map(|r| r.iter().map(|v| v.to_complex()).collect()).collect()
}

pub fn p_regular(g: &PermGroup, p: u64) -> Vec<usize> {
    let cd = g.classes();
    (0..cd.count()).filter(|&c| !(cd.rep_order(c) as u64).is_multiple_of(p)).collect()
}

/// Coefficients of `x` in the rows of `basis`, if `x` lies in their span.
fn coefficients(basis: &[&Vec<Complex64>], x: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = x.len();
    let l = basis.len();
    let a = DMatrix::from_fn(n, l, |r, c| basis[c][r]);
    let b = DVector::from_column_slice(x);
    let svd = a.clone().svd(true, true);
    if svd.singular_values.min() < 1e-8 {
        return None;
    }
    let c = svd.solve(&b, 1e-12).ok()?;
    if (&a * &c - b).norm() > TOL {
        return None;
    }
    Some(c.iter().copied().collect())
}

fn choose(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        if n - i < k - cur.len() {
            break;
        }
        cur.push(i);
        choose(n, k, i + 1, cur, out);
        cur.pop();
    }
}

/// The unique set of reductions `chi°` that is linearly independent of
/// full size and spans every `chi°` with non-negative integer
/// coefficients.
pub fn exhaustive_ibr(t: &CharacterTable, p: u64) -> Vec<Vec<Complex64>> {
    let reg = p_regular(t.group(), p);
    let floats = table_floats(t);
    let mut reductions: Vec<Vec<Complex64>> = Vec::new();
    for row in &floats {
        let r: Vec<Complex64> = reg.iter().map(|&c| row[c]).collect();
        if !reductions.iter().any(|x| close(x, &r)) {
            reductions.push(r);
        }
    }
    let mut subsets = Vec::new();
    choose(reductions.len(), reg.len(), 0, &mut Vec::new(), &mut subsets);
    let mut found = Vec::new();
    'subset: for s in subsets {
        let basis: Vec<&Vec<Complex64>> = s.iter().map(|&i| &reductions[i]).collect();
        for x in &reductions {
            let Some(c) = coefficients(&basis, x) else { continue 'subset };
            for z in c {
                if z.im.abs() > TOL || (z.re - z.re.round()).abs() > TOL || z.re.round() < 0.0 {
                    continue 'subset;
                }
            }
        }
        found.push(s);
    }
    assert_eq!(found.len(), 1, "subset oracle is not unique");
    found[0].iter().map(|&i| reductions[i].clone()).collect()
}

fn key(g: &PermGroup) -> Vec<Permutation> {
    g.elements().to_vec()
}

/// All normal subgroups, as joins of normal closures of single classes.
pub fn normal_subgroups(g: &PermGroup) -> Vec<PermGroup> {
    let cd = g.classes();
    let mut out = vec![PermGroup::trivial(g.degree())];
    let mut keys = BTreeSet::from([key(&out[0])]);
    let mut i = 0;
    while i < out.len() {
        for c in 0..cd.count() {
            let mut gens = out[i].generators().to_vec();
            gens.push(cd.rep(c).clone());
            let n = g.normal_closure(&gens).unwrap();
            if keys.insert(key(&n)) {
                out.push(n);
            }
        }
        i += 1;
    }
    out
}

/// Largest normal subgroup of order prime to `p`, by enumeration.
pub fn o_p_prime(g: &PermGroup, p: u64) -> PermGroup {
    normal_subgroups(g)
        .into_iter()
        .filter(|n| !(n.order() as u64).is_multiple_of(p))
        .max_by_key(|n| n.order())
        .unwrap()
}

/// Characters whose values on p-regular classes equal `phi`.
pub fn lifts(t: &CharacterTable, reg: &[usize], phi: &[lifts_core::Cyclotomic]) -> Vec<usize> {
    (0..t.len()).filter(|&chi| reg.iter().zip(phi).all(|(&c, v)| t.value(chi, c) == v)).collect()
}

/// Elementwise test that `d` commutes with all of `h`.
pub fn central_in(d: &PermGroup, h: &PermGroup) -> bool {
    d.elements().iter().all(|x| h.elements().iter().all(|y| x.compose(y) == y.compose(x)))
}

/// `N_V(D)` by scanning the elements of `V`.
pub fn normalizer(v: &PermGroup, d: &PermGroup) -> Vec<Permutation> {
    v.elements().iter().filter(|x| d.elements().iter().all(|y| d.contains(&y.conjugate_by(x)))).cloned().collect()
}

/// `|D|` from degrees: `p^(nu_p|G| - min nu_p chi(1))`.
pub fn defect_order(t: &CharacterTable, irr: &[usize], p: u64) -> usize {
    let nu = |mut n: u64| {
        let mut k = 0u32;
        while n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        k
    };
    let full = nu(t.group().order() as u64);
    let min = irr.iter().map(|&chi| nu(t.degree(chi))).min().unwrap();
    (p as usize).pow(full - min)
}
