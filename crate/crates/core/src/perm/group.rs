use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;

use super::classes::ConjugacyClassData;
use super::Permutation;
use crate::error::{Error, Result};

/// Default bound on the order of any group the engine will enumerate.
pub const DEFAULT_ORDER_CAP: usize = 5000;

/// A finite permutation group with all elements enumerated.
///
/// Elements are kept in canonical (lexicographic image) order, so element
/// indices are stable across runs. Class data is computed on first use and
/// cached; the group is otherwise immutable.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    classes: OnceLock<ConjugacyClassData>,
}

impl PermGroup {
    /// Closure of `generators` with breadth-first multiplication.
    pub fn generate(generators: &[Permutation], cap: usize) -> Result<PermGroup> {
        let degree = match generators.first() {
            Some(g) => g.degree(),
            None => return Err(Error::InvalidPermutation("at least one generator is required".into())),
        };
        Self::generate_with_degree(degree, generators, cap)
    }

    pub(crate) fn generate_with_degree(
        degree: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<PermGroup> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let id = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = x.compose(g);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let gens: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        Ok(Self::assemble(degree, gens, seen.into_iter().collect()))
    }

    /// Builds a group from a set that is already known to be closed.
    /// A small generating set is chosen greedily in canonical order.
    pub(crate) fn from_closed_set(degree: usize, elements: Vec<Permutation>) -> PermGroup {
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut span: HashSet<Permutation> = HashSet::new();
        span.insert(Permutation::identity(degree));
        for x in &elements {
            if span.contains(x) {
                continue;
            }
            gens.push(x.clone());
            // extend the span: multiply everything by all generators until stable
            let mut queue: VecDeque<Permutation> = span.iter().cloned().collect();
            while let Some(y) = queue.pop_front() {
                for g in &gens {
                    let z = y.compose(g);
                    if span.insert(z.clone()) {
                        queue.push_back(z);
                    }
                }
            }
            if span.len() == elements.len() {
                break;
            }
        }
        debug_assert_eq!(span.len(), elements.len(), "element set is not closed");
        Self::assemble(degree, gens, elements)
    }

    fn assemble(degree: usize, generators: Vec<Permutation>, mut elements: Vec<Permutation>) -> PermGroup {
        elements.sort();
        let index = elements.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        PermGroup { degree, generators, elements, index, classes: OnceLock::new() }
    }

    pub fn trivial(degree: usize) -> PermGroup {
        Self::assemble(degree, Vec::new(), vec![Permutation::identity(degree)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.index.contains_key(p)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|a| g.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Two handles describe the same group when their element sets agree.
    pub fn same_as(&self, other: &PermGroup) -> bool {
        std::ptr::eq(self, other)
            || (self.degree == other.degree && self.elements == other.elements)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order() <= other.order()
            && other.order().is_multiple_of(self.order())
            && self.generators.iter().all(|g| other.contains(g))
    }

    /// True when `self` is normalized by every element of `ambient`.
    pub fn is_normal_in(&self, ambient: &PermGroup) -> bool {
        self.is_subgroup_of(ambient)
            && ambient
                .generators
                .iter()
                .all(|g| self.generators.iter().all(|h| self.contains(&h.conjugate_by(g))))
    }

    pub fn exponent(&self) -> usize {
        self.classes().rep_orders().iter().fold(1usize, |acc, &o| acc.lcm(&o))
    }

    /// Conjugacy class data, computed on first call.
    pub fn classes(&self) -> &ConjugacyClassData {
        self.classes.get_or_init(|| ConjugacyClassData::compute(self))
    }

    /// Subgroup generated by `gens`, which must lie in `self`.
    pub fn subgroup(&self, gens: &[Permutation]) -> Result<PermGroup> {
        for g in gens {
            if !self.contains(g) {
                return Err(Error::ElementNotInGroup);
            }
        }
        Self::generate_with_degree(self.degree, gens, self.order())
    }

    /// Subgroup of elements satisfying `keep`; the caller guarantees closure.
    pub(crate) fn filtered(&self, keep: impl Fn(&Permutation) -> bool) -> PermGroup {
        let els: Vec<Permutation> = self.elements.iter().filter(|x| keep(x)).cloned().collect();
        Self::from_closed_set(self.degree, els)
    }

    /// Smallest normal subgroup containing `set`.
    pub fn normal_closure(&self, set: &[Permutation]) -> Result<PermGroup> {
        let mut gens: Vec<Permutation> = set.iter().filter(|x| !x.is_identity()).cloned().collect();
        let mut k = self.subgroup(&gens)?;
        'outer: loop {
            for h in k.generators.clone() {
                for g in &self.generators {
                    let c = h.conjugate_by(g);
                    if !k.contains(&c) {
                        gens.push(c);
                        k = self.subgroup(&gens)?;
                        continue 'outer;
                    }
                }
            }
            return Ok(k);
        }
    }

    /// Centralizer of a set of elements of `self`.
    pub fn centralizer(&self, set: &[Permutation]) -> Result<PermGroup> {
        for s in set {
            if !self.contains(s) {
                return Err(Error::ElementNotInGroup);
            }
        }
        let set: Vec<&Permutation> = set.iter().filter(|s| !s.is_identity()).collect();
        Ok(self.filtered(|g| set.iter().all(|s| g.compose(s) == s.compose(g))))
    }

    /// Centralizer of a subgroup, using its generators.
    pub fn centralizer_of(&self, h: &PermGroup) -> Result<PermGroup> {
        if !h.is_subgroup_of(self) {
            return Err(Error::NotASubgroup);
        }
        self.centralizer(h.generators())
    }

    pub fn center(&self) -> PermGroup {
        self.centralizer(&self.generators.clone()).expect("generators lie in the group")
    }

    /// `{g : H^g = H}`.
    pub fn normalizer(&self, h: &PermGroup) -> Result<PermGroup> {
        if !h.is_subgroup_of(self) {
            return Err(Error::NotASubgroup);
        }
        Ok(self.filtered(|g| h.generators.iter().all(|x| h.contains(&x.conjugate_by(g)))))
    }

    /// A Sylow `p`-subgroup, grown one factor of `p` at a time inside
    /// successive normalizers. Returns the trivial group when `p` does not
    /// divide the order.
    pub fn sylow_subgroup(&self, p: u64) -> PermGroup {
        let p = p as usize;
        let target = p_part(self.order(), p);
        let mut sub = PermGroup::trivial(self.degree);
        while sub.order() < target {
            let norm = self.normalizer(&sub).expect("p-subgroup lies in the group");
            let g = norm
                .elements()
                .iter()
                .find(|g| !sub.contains(g) && sub.contains(&g.pow(p as i64)))
                .expect("a non-Sylow p-subgroup has p dividing its normalizer index")
                .clone();
            let mut gens = sub.generators.clone();
            gens.push(g);
            sub = self.subgroup(&gens).expect("elements lie in the group");
        }
        sub
    }

    /// Largest normal subgroup whose order satisfies `pred`, built as the
    /// join of the normal closures of classes whose closure qualifies.
    fn largest_normal_with(&self, pred: impl Fn(usize) -> bool) -> PermGroup {
        let cd = self.classes();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = PermGroup::trivial(self.degree);
        for c in 1..cd.count() {
            let rep = cd.rep(c);
            if !pred(cd.rep_order(c)) || current.contains(rep) {
                continue;
            }
            let closure = self.normal_closure(std::slice::from_ref(rep)).expect("rep lies in group");
            if pred(closure.order()) {
                gens.extend(closure.generators().iter().cloned());
                current = self.subgroup(&gens).expect("elements lie in the group");
            }
        }
        current
    }

    /// `O_{p'}(G)`, the largest normal subgroup of order prime to `p`.
    pub fn o_p_prime(&self, p: u64) -> PermGroup {
        let p = p as usize;
        self.largest_normal_with(|n| n % p != 0)
    }

    /// `O_p(G)`, the largest normal `p`-subgroup.
    pub fn o_p(&self, p: u64) -> PermGroup {
        let p = p as usize;
        self.largest_normal_with(|n| p_part(n, p) == n)
    }

    /// Commutator subgroup.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms).expect("commutators lie in the group")
    }

    /// Permutation action of `G/N` on the right cosets of a normal subgroup.
    pub fn quotient(&self, n: &PermGroup) -> Result<PermGroup> {
        if !n.is_normal_in(self) {
            return Err(Error::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut reps: Vec<usize> = Vec::new();
        for i in 0..self.order() {
            if coset_of[i] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(i);
            let g = &self.elements[i];
            for x in n.elements() {
                let j = self.index_of(&x.compose(g)).expect("closed");
                coset_of[j] = id;
            }
        }
        let k = reps.len();
        if k == 1 {
            return Ok(PermGroup::trivial(1));
        }
        let mut gens = Vec::new();
        for g in &self.generators {
            let images: Vec<u32> = reps
                .iter()
                .map(|&r| {
                    let j = self.index_of(&self.elements[r].compose(g)).expect("closed");
                    coset_of[j] as u32
                })
                .collect();
            gens.push(Permutation::from_images(images)?);
        }
        Self::generate_with_degree(k, &gens, self.order())
    }

    /// Solvability tier: solvable, `p`-solvable for some primes dividing the
    /// order, or neither.
    pub fn solvability(&self) -> Solvability {
        let mut h = self.derived_subgroup();
        let mut prev = self.order();
        while !h.is_trivial() && h.order() < prev {
            prev = h.order();
            h = h.derived_subgroup();
        }
        if h.is_trivial() {
            return Solvability::Solvable;
        }
        let primes: Vec<u64> =
            prime_factors(self.order() as u64).into_iter().filter(|&p| self.is_p_solvable(p)).collect();
        if primes.is_empty() {
            Solvability::Neither
        } else {
            Solvability::PSolvable(primes)
        }
    }

    pub fn is_solvable(&self) -> bool {
        matches!(self.solvability(), Solvability::Solvable)
    }

    /// `G` is `p`-solvable iff it is trivial or one of `O_{p'}(G)`,
    /// `O_p(G)` is nontrivial with `p`-solvable quotient.
    pub fn is_p_solvable(&self, p: u64) -> bool {
        if self.is_trivial() {
            return true;
        }
        if !self.order().is_multiple_of(p as usize) {
            return true;
        }
        let k = self.o_p_prime(p);
        let k = if k.is_trivial() { self.o_p(p) } else { k };
        if k.is_trivial() {
            return false;
        }
        self.quotient(&k).map(|q| q.is_p_solvable(p)).unwrap_or(false)
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Result of [`PermGroup::solvability`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solvability {
    Solvable,
    /// Not solvable, but `p`-solvable for these primes dividing the order.
    PSolvable(Vec<u64>),
    Neither,
}

impl Solvability {
    pub fn is_p_solvable_for(&self, p: u64, order: usize) -> bool {
        match self {
            Solvability::Solvable => true,
            Solvability::PSolvable(ps) => ps.contains(&p) || !order.is_multiple_of(p as usize),
            Solvability::Neither => !order.is_multiple_of(p as usize),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Solvability::Solvable => "solvable",
            Solvability::PSolvable(_) => "p-solvable",
            Solvability::Neither => "neither",
        }
    }
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut out = 1;
    while n.is_multiple_of(p) && n > 0 {
        n /= p;
        out *= p;
    }
    out
}

/// Exponent of `p` in `n`.
pub fn p_valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// Distinct prime divisors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
