//! Permutation groups with full element enumeration.

mod classes;
mod group;
mod permutation;

pub use classes::{class_fusion, ConjugacyClassData};
pub use group::{
    is_prime, p_part, p_valuation, prime_factors, PermGroup, Solvability, DEFAULT_ORDER_CAP,
};
pub use permutation::Permutation;

/// Generates a group from generators given in 1-based cycle notation.
pub fn group_from_cycles(degree: usize, gens: &[&str]) -> crate::Result<PermGroup> {
    let perms = gens
        .iter()
        .map(|s| Permutation::parse_cycles(s, degree))
        .collect::<crate::Result<Vec<_>>>()?;
    if perms.is_empty() {
        return Ok(PermGroup::trivial(degree));
    }
    PermGroup::generate(&perms, DEFAULT_ORDER_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn s3() -> PermGroup {
        group_from_cycles(3, &["(1 2 3)", "(1 2)"]).unwrap()
    }

    #[test]
    fn generate_orders() {
        assert_eq!(group_from_cycles(3, &["()"]).unwrap().order(), 1);
        assert_eq!(s3().order(), 6);
        let a = Permutation::parse_cycles("(1 2 3)", 3).unwrap();
        let b = Permutation::parse_cycles("(1 2)", 4).unwrap();
        assert!(matches!(PermGroup::generate(&[a, b], 10), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn cap_is_enforced() {
        let gens = ["(1 2 3 4 5 6)", "(1 2)"]
            .iter()
            .map(|s| Permutation::parse_cycles(s, 6).unwrap())
            .collect::<Vec<_>>();
        assert_eq!(PermGroup::generate(&gens, 100).unwrap_err(), Error::OrderCapExceeded { cap: 100 });
        assert_eq!(PermGroup::generate(&gens, 720).unwrap().order(), 720);
    }

    #[test]
    fn generation_is_deterministic() {
        let a = s3();
        let b = group_from_cycles(3, &["(1 2)", "(1 2 3)"]).unwrap();
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn s3_classes() {
        let g = s3();
        let cd = g.classes();
        assert_eq!(cd.count(), 3);
        let mut sizes = cd.sizes().to_vec();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        // identity, then by size: 3-cycles (2) before transpositions (3)
        assert_eq!(cd.sizes(), &[1, 2, 3]);
        assert_eq!(cd.rep_orders(), &[1, 3, 2]);
        assert!(cd.rep(0).is_identity());
        assert_eq!(cd.power_class(1, 2), 1);
        assert_eq!(cd.power_class(1, 3), 0);
        assert_eq!(cd.power_class(2, 2), 0);
        assert_eq!(cd.inverse_class(1), 1);
        assert_eq!(cd.p_regular(3), vec![0, 2]);
    }

    #[test]
    fn centralizer_and_normalizer() {
        let g = s3();
        let c3 = Permutation::parse_cycles("(1 2 3)", 3).unwrap();
        let cent = g.centralizer(std::slice::from_ref(&c3)).unwrap();
        assert_eq!(cent.order(), 3);
        assert_eq!(g.normalizer(&cent).unwrap().order(), 6);
        assert_eq!(g.normalizer(&g).unwrap().order(), 6);
        assert!(g.center().is_trivial());
        let outside = Permutation::parse_cycles("(1 2)", 4).unwrap();
        assert_eq!(g.centralizer(&[outside]).unwrap_err(), Error::ElementNotInGroup);
        let c4 = group_from_cycles(4, &["(1 2 3 4)"]).unwrap();
        assert_eq!(c4.centralizer(c4.generators()).unwrap().order(), 4);
        let t = group_from_cycles(3, &["(1 2)"]).unwrap();
        assert_eq!(g.normalizer(&t).unwrap().order(), 2);
        let foreign = group_from_cycles(4, &["(1 2)"]).unwrap();
        assert_eq!(g.normalizer(&foreign).unwrap_err(), Error::NotASubgroup);
    }

    #[test]
    fn sylow_and_o_p_prime() {
        let g = s3();
        assert_eq!(g.sylow_subgroup(3).order(), 3);
        assert_eq!(g.sylow_subgroup(2).order(), 2);
        assert!(g.sylow_subgroup(5).is_trivial());
        assert_eq!(g.o_p_prime(2).order(), 3);
        assert!(g.o_p_prime(3).is_trivial());
        let c9 = group_from_cycles(9, &["(1 2 3 4 5 6 7 8 9)"]).unwrap();
        assert!(c9.o_p_prime(3).is_trivial());
        assert_eq!(c9.o_p(3).order(), 9);
    }

    #[test]
    fn solvability() {
        assert_eq!(s3().solvability(), Solvability::Solvable);
        let a5 = group_from_cycles(5, &["(1 2 3 4 5)", "(1 2 3)"]).unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(a5.derived_subgroup().order(), 60);
        assert_eq!(a5.solvability(), Solvability::Neither);
        assert!(!a5.is_p_solvable(2));
        assert!(a5.is_p_solvable(7));
        let a5c7 = group_from_cycles(12, &["(1 2 3 4 5)", "(1 2 3)", "(6 7 8 9 10 11 12)"]).unwrap();
        assert_eq!(a5c7.solvability(), Solvability::PSolvable(vec![7]));
    }

    #[test]
    fn fusion() {
        let g = s3();
        let c3 = g.subgroup(&[Permutation::parse_cycles("(1 2 3)", 3).unwrap()]).unwrap();
        let f = class_fusion(&c3, &g).unwrap();
        assert_eq!(f, vec![0, 1, 1]);
        assert_eq!(class_fusion(&g, &g).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn quotient_by_normal_subgroup() {
        let s4 = group_from_cycles(4, &["(1 2 3 4)", "(1 2)"]).unwrap();
        let v4 = s4.o_p(2);
        assert_eq!(v4.order(), 4);
        let q = s4.quotient(&v4).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());
        let t = group_from_cycles(4, &["(1 2)"]).unwrap();
        assert_eq!(s4.quotient(&t).unwrap_err(), Error::NotNormal);
    }
}
