use std::collections::VecDeque;

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};

/// Conjugacy classes of a [`PermGroup`].
///
/// Classes are ordered identity first, then by size, element order and
/// canonical representative. The representative of each class is its
/// smallest element in canonical order.
#[derive(Debug, Clone)]
pub struct ConjugacyClassData {
    reps: Vec<Permutation>,
    rep_index: Vec<usize>,
    sizes: Vec<usize>,
    rep_orders: Vec<usize>,
    class_of: Vec<u32>,
    inverse: Vec<usize>,
    /// `powers[c][m]` is the class of `rep(c)^m` for `0 <= m < rep_order(c)`.
    powers: Vec<Vec<u32>>,
}

impl ConjugacyClassData {
    pub(crate) fn compute(g: &PermGroup) -> Self {
        let n = g.order();
        let mut raw_class = vec![u32::MAX; n];
        let mut raw: Vec<(usize, usize, usize)> = Vec::new(); // (size, order, first index)
        for start in 0..n {
            if raw_class[start] != u32::MAX {
                continue;
            }
            let id = raw.len() as u32;
            raw_class[start] = id;
            let mut size = 1;
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for s in g.generators() {
                    let j = g.index_of(&g.element(i).conjugate_by(s)).expect("group is closed");
                    if raw_class[j] == u32::MAX {
                        raw_class[j] = id;
                        size += 1;
                        queue.push_back(j);
                    }
                }
            }
            raw.push((size, g.element(start).order(), start));
        }
        // Elements are scanned in canonical order, so `start` is the minimum
        // of its class and the identity (index 0) sorts first.
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by_key(|&c| raw[c]);
        let mut relabel = vec![0u32; raw.len()];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new as u32;
        }
        let class_of: Vec<u32> = raw_class.iter().map(|&c| relabel[c as usize]).collect();
        let rep_index: Vec<usize> = order.iter().map(|&c| raw[c].2).collect();
        let reps: Vec<Permutation> = rep_index.iter().map(|&i| g.element(i).clone()).collect();
        let sizes: Vec<usize> = order.iter().map(|&c| raw[c].0).collect();
        let rep_orders: Vec<usize> = order.iter().map(|&c| raw[c].1).collect();

        let mut powers = Vec::with_capacity(reps.len());
        for (c, rep) in reps.iter().enumerate() {
            let mut row = Vec::with_capacity(rep_orders[c]);
            let mut x = g.identity();
            for _ in 0..rep_orders[c] {
                row.push(class_of[g.index_of(&x).expect("closed")]);
                x = x.compose(rep);
            }
            powers.push(row);
        }
        let inverse: Vec<usize> = (0..reps.len())
            .map(|c| {
                let o = rep_orders[c];
                powers[c][(o - 1) % o] as usize
            })
            .collect();
        ConjugacyClassData { reps, rep_index, sizes, rep_orders, class_of, inverse, powers }
    }

    pub fn count(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn rep(&self, c: usize) -> &Permutation {
        &self.reps[c]
    }

    /// Index of the representative in the group's element list.
    pub fn rep_element_index(&self, c: usize) -> usize {
        self.rep_index[c]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn size(&self, c: usize) -> usize {
        self.sizes[c]
    }

    pub fn rep_orders(&self) -> &[usize] {
        &self.rep_orders
    }

    pub fn rep_order(&self, c: usize) -> usize {
        self.rep_orders[c]
    }

    /// Class of the element with the given element index.
    pub fn class_of_index(&self, element: usize) -> usize {
        self.class_of[element] as usize
    }

    pub fn class_of(&self, g: &PermGroup, x: &Permutation) -> Result<usize> {
        g.index_of(x).map(|i| self.class_of[i] as usize).ok_or(Error::ElementNotInGroup)
    }

    /// Class containing the inverses of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse[c]
    }

    /// Class of `rep(c)^m`; `m` may be any integer.
    pub fn power_class(&self, c: usize, m: i64) -> usize {
        let o = self.rep_orders[c] as i64;
        self.powers[c][m.rem_euclid(o) as usize] as usize
    }

    /// The power map `c -> class(rep(c)^m)` for every class.
    pub fn power_map(&self, m: i64) -> Vec<usize> {
        (0..self.count()).map(|c| self.power_class(c, m)).collect()
    }

    /// Classes whose elements have order prime to `p`.
    pub fn p_regular(&self, p: u64) -> Vec<usize> {
        (0..self.count()).filter(|&c| !(self.rep_orders[c] as u64).is_multiple_of(p)).collect()
    }
}

/// Class fusion of a subgroup `h` into `g`: the `g`-class of each `h`-class.
pub fn class_fusion(h: &PermGroup, g: &PermGroup) -> Result<Vec<usize>> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotASubgroup);
    }
    let gc = g.classes();
    h.classes().reps().iter().map(|r| gc.class_of(g, r)).collect()
}
