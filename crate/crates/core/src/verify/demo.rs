//! The Frobenius group of order 273 at `p = 7`: a block whose Brauer
//! character has `|D|` lifts although `D` is not central in `N_G(D)`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::record::{verify_block, Tier, VerificationRecord};
use crate::blocks::block_partition;
use crate::error::{Error, Result};
use crate::fong::{fong_pair, induction_bijection_check};
use crate::perm::{group_from_cycles, PermGroup};
use crate::session::Session;

/// `C_91` acting regularly on 91 points.
pub const F273_ROTATION: &str = "(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30 31 32 33 34 35 36 37 38 39 40 41 42 43 44 45 46 47 48 49 50 51 52 53 54 55 56 57 58 59 60 61 62 63 64 65 66 67 68 69 70 71 72 73 74 75 76 77 78 79 80 81 82 83 84 85 86 87 88 89 90 91)";
/// Multiplication by 9 modulo 91, a fixed-point-free automorphism of order 3.
pub const F273_MULTIPLIER: &str = "(2 10 82)(3 19 72)(4 28 62)(5 37 52)(6 46 42)(7 55 32)(8 64 22)(9 73 12)(11 91 83)(13 18 63)(14 27 53)(15 36 43)(16 45 33)(17 54 23)(20 81 84)(21 90 74)(24 26 44)(25 35 34)(29 71 85)(30 80 75)(31 89 65)(38 61 86)(39 70 76)(40 79 66)(41 88 56)(47 51 87)(48 60 77)(49 69 67)(50 78 57)(58 59 68)";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Demo273 {
    pub order: usize,
    pub class_count: usize,
    pub linear_count: usize,
    pub degree_three_count: usize,
    pub o_p_prime_order: usize,
    pub phi: usize,
    pub lifts: Vec<usize>,
    /// `(chi, alpha, delta)`: `chi = (alpha x delta)^G` with `alpha` in
    /// `Irr(O_7'(V))` and `delta` in `Irr(D)`.
    pub lift_sources: Vec<(usize, usize, usize)>,
    pub d_order: usize,
    pub alpha_stabilizer_order: usize,
    pub v_order: usize,
    pub normalizer_in_v_order: usize,
    pub d_central_in_normalizer_in_v: bool,
    pub normalizer_in_g_order: usize,
    pub d_central_in_normalizer_in_g: bool,
    pub record: VerificationRecord,
    pub narrative: String,
}

pub fn demo273_group() -> Result<PermGroup> {
    group_from_cycles(91, &[F273_ROTATION, F273_MULTIPLIER])
}

fn central(d: &PermGroup, h: &PermGroup) -> bool {
    d.generators().iter().all(|x| h.generators().iter().all(|y| x.compose(y) == y.compose(x)))
}

pub fn demo273() -> Result<Demo273> {
    let p = 7;
    let session = Session::new();
    let g = session.intern(demo273_group()?);
    let table = session.table(&g)?;
    let bs = session.brauer(&g, p)?;
    let blocks = block_partition(&bs);
    let (id, block) = blocks
        .iter()
        .enumerate()
        .find(|(_, b)| !b.is_principal())
        .ok_or_else(|| Error::CheckFailed("no non-principal 7-block".into()))?;
    let phi = block.ibr[0];
    let fp = fong_pair(&session, &bs, block)?;
    let maps = induction_bijection_check(&bs, block, &fp)?;
    let v = &fp.v;
    let d = &fp.d;
    let nvd = v.normalizer(d)?;
    let ngd = g.normalizer(d)?;

    let m = session.intern(v.o_p_prime(p));
    let tv = fp.v_system.table();
    let tm = session.table(&m)?;
    let td = session.table(d)?;
    let split = |chi_v: usize| -> Result<(usize, usize)> {
        let a = tm.constituents(&tv.character(chi_v).restrict(&m)?)?;
        let b = td.constituents(&tv.character(chi_v).restrict(d)?)?;
        match (a.as_slice(), b.as_slice()) {
            ([(alpha, 1)], [(delta, 1)]) => Ok((*alpha, *delta)),
            _ => Err(Error::CheckFailed("lift of V is not a product of linear characters".into())),
        }
    };
    let mut lift_sources = Vec::new();
    for &(chi_v, chi) in &maps.irr {
        if bs.lifts_of(phi).contains(&chi) {
            let (alpha, delta) = split(chi_v)?;
            lift_sources.push((chi, alpha, delta));
        }
    }
    lift_sources.sort_unstable();

    let record = VerificationRecord {
        group: "F273".into(),
        order: g.order(),
        prime: p,
        tier: Tier::of(&g, p),
        block: verify_block(&session, &bs, block, id, Tier::of(&g, p)),
    };
    let mut demo = Demo273 {
        order: g.order(),
        class_count: table.len(),
        linear_count: table.linear_count(),
        degree_three_count: table.degrees().iter().filter(|&&d| d == 3).count(),
        o_p_prime_order: g.o_p_prime(p).order(),
        phi,
        lifts: bs.lifts_of(phi).to_vec(),
        lift_sources,
        d_order: d.order(),
        alpha_stabilizer_order: fp.chain[0].stabilizer_order,
        v_order: v.order(),
        normalizer_in_v_order: nvd.order(),
        d_central_in_normalizer_in_v: central(d, &nvd),
        normalizer_in_g_order: ngd.order(),
        d_central_in_normalizer_in_g: central(d, &ngd),
        record,
        narrative: String::new(),
    };
    demo.narrative = narrate(&demo);
    Ok(demo)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn narrate(d: &Demo273) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "G = C91 x| C3, |G| = {}, p = 7", d.order);
    let _ = writeln!(
        s,
        "Irr(G): {} characters, {} linear, {} of degree 3",
        d.class_count, d.linear_count, d.degree_three_count
    );
    let _ = writeln!(s, "O_7'(G) = B, |B| = {}", d.o_p_prime_order);
    let _ = writeln!(s, "block {} with Brauer character phi{}", d.record.block.id.unwrap_or(0), d.phi);
    let _ = writeln!(s, "stabilizer of alpha_0 in G: order {}", d.alpha_stabilizer_order);
    let _ = writeln!(s, "Fong subgroup V = C, |V| = {}", d.v_order);
    let _ = writeln!(s, "defect group D, |D| = {}", d.d_order);
    let _ = writeln!(s, "lifts of phi{}: {} characters", d.phi, d.lifts.len());
    for &(chi, alpha, delta) in &d.lift_sources {
        let _ = writeln!(s, "  chi{} = (alpha{} x delta{})^G", chi, alpha, delta);
    }
    let _ = writeln!(
        s,
        "N_V(D) has order {}; D central in N_V(D): {}",
        d.normalizer_in_v_order,
        yes_no(d.d_central_in_normalizer_in_v)
    );
    let _ = writeln!(
        s,
        "N_G(D) has order {}; D central in N_G(D): {}",
        d.normalizer_in_g_order,
        yes_no(d.d_central_in_normalizer_in_g)
    );
    let _ = writeln!(s, "so the criterion must use N_V(D), not N_G(D)");
    s
}
