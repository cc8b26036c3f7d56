use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::{class_fusion, PermGroup, Permutation};

/// A class function on a permutation group, valued in cyclotomics.
#[derive(Clone)]
pub struct ClassFunction {
    group: Arc<PermGroup>,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(group: Arc<PermGroup>, values: Vec<Cyclotomic>) -> Result<Self> {
        let k = group.classes().count();
        if values.len() != k {
            return Err(Error::DegreeMismatch { expected: k, found: values.len() });
        }
        Ok(ClassFunction { group, values })
    }

    pub fn trivial(group: Arc<PermGroup>) -> Self {
        let k = group.classes().count();
        ClassFunction { group, values: vec![Cyclotomic::one(); k] }
    }

    /// The regular character: `|G|` at the identity, zero elsewhere.
    pub fn regular(group: Arc<PermGroup>) -> Self {
        let k = group.classes().count();
        let mut values = vec![Cyclotomic::zero(); k];
        values[0] = Cyclotomic::from_integer(group.order() as i64);
        ClassFunction { group, values }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at the identity.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    /// Value at an arbitrary group element.
    pub fn at(&self, x: &Permutation) -> Result<&Cyclotomic> {
        let c = self.group.classes().class_of(&self.group, x)?;
        Ok(&self.values[c])
    }

    fn check_same_group(&self, other: &ClassFunction) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) || self.group.same_as(&other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same_group(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(ClassFunction { group: self.group.clone(), values })
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_same_group(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Ok(ClassFunction { group: self.group.clone(), values })
    }

    pub fn scale_int(&self, m: i64) -> ClassFunction {
        ClassFunction { group: self.group.clone(), values: self.values.iter().map(|v| v.scale_int(m)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }

    /// Restriction to a subgroup.
    pub fn restrict(&self, h: &Arc<PermGroup>) -> Result<ClassFunction> {
        let fusion = class_fusion(h, &self.group)?;
        Ok(self.restrict_with_fusion(h, &fusion))
    }

    pub(crate) fn restrict_with_fusion(&self, h: &Arc<PermGroup>, fusion: &[usize]) -> ClassFunction {
        ClassFunction { group: h.clone(), values: fusion.iter().map(|&c| self.values[c].clone()).collect() }
    }

    /// Induction to an overgroup.
    pub fn induce(&self, g: &Arc<PermGroup>) -> Result<ClassFunction> {
        let fusion = class_fusion(&self.group, g)?;
        Ok(self.induce_with_fusion(g, &fusion))
    }

    /// `theta^G(g_c) = |G:H| / |c| * sum_{d -> c} |d| theta(d)`.
    pub(crate) fn induce_with_fusion(&self, g: &Arc<PermGroup>, fusion: &[usize]) -> ClassFunction {
        let gc = g.classes();
        let hc = self.group.classes();
        let index = (g.order() / self.group.order()) as i64;
        let mut sums = vec![Cyclotomic::zero(); gc.count()];
        for (d, &c) in fusion.iter().enumerate() {
            if !self.values[d].is_zero() {
                sums[c] = &sums[c] + &self.values[d].scale_int(hc.size(d) as i64);
            }
        }
        let values = sums
            .into_iter()
            .enumerate()
            .map(|(c, s)| {
                let f = BigRational::new(BigInt::from(index), BigInt::from(gc.size(c) as i64));
                s.scale(&f)
            })
            .collect();
        ClassFunction { group: g.clone(), values }
    }

    /// `alpha^x(y) = alpha(x y x^-1)` for `x` normalizing the group.
    pub fn conjugate_by(&self, x: &Permutation) -> Result<ClassFunction> {
        let action = class_action(&self.group, x)?;
        Ok(ClassFunction {
            group: self.group.clone(),
            values: action.iter().map(|&c| self.values[c].clone()).collect(),
        })
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.check_same_group(other).is_ok() && self.values == other.values
    }
}

impl Eq for ClassFunction {}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.values.iter()).finish()
    }
}

/// `[a, b] = |G|^-1 sum_c |c| a(c) conj(b(c))`.
pub fn inner_product(a: &ClassFunction, b: &ClassFunction) -> Result<Cyclotomic> {
    a.check_same_group(b)?;
    let cd = a.group.classes();
    let mut acc = Cyclotomic::zero();
    for (c, (x, y)) in a.values.iter().zip(&b.values).enumerate() {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        acc = &acc + &(x * &y.conjugate()).scale_int(cd.size(c) as i64);
    }
    Ok(acc.scale(&BigRational::new(BigInt::from(1), BigInt::from(a.group.order() as i64))))
}

/// Image of each class of `n` under `y -> x y x^-1`; `x` must normalize `n`.
pub fn class_action(n: &PermGroup, x: &Permutation) -> Result<Vec<usize>> {
    let cd = n.classes();
    let xinv = x.inverse();
    cd.reps().iter().map(|r| cd.class_of(n, &r.conjugate_by(&xinv)).map_err(|_| Error::NotNormal)).collect()
}

/// Stabilizer in `g` of the class function `alpha` on the normal subgroup `n`.
pub fn inertia_group(g: &PermGroup, n: &PermGroup, alpha: &ClassFunction) -> Result<PermGroup> {
    if !n.is_normal_in(g) {
        return Err(Error::NotNormal);
    }
    if !alpha.group().same_as(n) {
        return Err(Error::GroupMismatch);
    }
    let values = alpha.values();
    let cd = n.classes();
    Ok(g.filtered(|x| {
        let xinv = x.inverse();
        cd.reps().iter().enumerate().all(|(c, r)| {
            let d = cd.class_of(n, &r.conjugate_by(&xinv)).expect("n is normal");
            values[d] == values[c]
        })
    }))
}
