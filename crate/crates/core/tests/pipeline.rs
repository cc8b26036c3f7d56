mod common;

use std::sync::Arc;

use lifts_core::blocks::{block_partition, irr_orbit, Restriction};
use lifts_core::chartab::{inner_product, CharacterTable};
use lifts_core::fong::{fong_pair, fong_pair_with, AlphaChoice};
use lifts_core::perm::PermGroup;
use lifts_core::session::Session;
use lifts_core::verify::{self, parse_report, render_structured, render_text, Options, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn shipped_corpus_contents() {
    let c = verify::load_corpus(common::corpus_path()).unwrap();
    assert!(c.len() >= 12);
    let f = c.iter().find(|e| e.name == "F273").unwrap();
    assert_eq!(f.degree, 91);
    assert_eq!(f.build(5000).unwrap().order(), 273);
    let solvable = c.iter().filter(|e| e.build(5000).unwrap().is_solvable()).count();
    assert!(solvable >= 12);
}

#[test]
fn order_273_blocks_at_7() {
    let s = Session::new();
    let g = s.intern_arc(&common::f273());
    let bs = s.brauer(&g, 7).unwrap();
    let blocks = block_partition(&bs);
    assert_eq!(blocks.len(), 5);
    let principal = &blocks[0];
    assert_eq!((principal.irr.len(), principal.ibr.len()), (5, 3));
    let fp = fong_pair(&s, &bs, principal).unwrap();
    assert_eq!(fp.v.order(), 273);
    for b in &blocks[1..] {
        assert_eq!((b.irr.len(), b.ibr.len(), b.defect), (7, 1, 1));
        assert_eq!(bs.lifts_of(b.ibr[0]), b.irr.as_slice());
        let fp = fong_pair(&s, &bs, b).unwrap();
        assert_eq!((fp.v.order(), fp.d.order()), (91, 7));
        assert!(fp.d.is_normal_in(&g));
        assert!(!fp.d.generators().iter().all(|x| g.generators().iter().all(|y| x.compose(y) == y.compose(x))));
    }
    let records = verify::verify_prime(&verify::parse_corpus(&format!(
        "group F\ndegree 91\ngens {}, {}\nend\n",
        common::F273_ROTATION,
        common::F273_MULTIPLIER
    ))
    .unwrap()[0], &g, 7);
    assert!(records[0].block.phis.iter().all(|f| !f.c4 && !f.c1));
    assert!(records[1..].iter().all(|r| r.block.phis.iter().all(|f| f.c1 && f.c2 && f.c3 && f.c4)));
}

#[test]
fn demo_record_round_trips() {
    let d = verify::demo273().unwrap();
    let text = render_structured(std::slice::from_ref(&d.record));
    let back = parse_report(&text).unwrap();
    assert_eq!(back.len(), 1);
    assert_eq!(back[0].block.verdicts, d.record.block.verdicts);
    assert_eq!(back[0].group, d.record.group);
    let flags: Vec<_> = back[0].block.phis.iter().map(|f| (f.c1, f.c2, f.c3, f.c4)).collect();
    assert_eq!(flags, vec![(true, true, true, true)]);
    assert!(d.narrative.contains("33 characters, 3 linear, 30 of degree 3"));
    assert!(render_text(&[d.record]).contains("summary: 1 records"));
}

#[test]
fn corpus_report_round_trips() {
    let c = verify::load_corpus(common::corpus_path()).unwrap();
    let small: Vec<_> = c.into_iter().filter(|e| e.build(5000).unwrap().order() <= 100).collect();
    let records = verify::verify_corpus(&small, &Options::default());
    let text = render_structured(&records);
    let back = parse_report(&text).unwrap();
    let strip = |rs: &[verify::VerificationRecord]| -> Vec<_> {
        rs.iter().map(|r| (r.group.clone(), r.prime, r.block.id, r.block.verdicts)).collect()
    };
    assert_eq!(strip(&back), strip(&records));
    assert_eq!(render_structured(&back), text);
    assert!(!text.contains("\"fail\""));
    assert!(records.iter().all(|r| !r.block.potential_counterexample));
}

#[test]
fn other_covered_characters_give_the_same_verdicts() {
    let c = verify::load_corpus(common::corpus_path()).unwrap();
    for e in c.iter().filter(|e| e.name != "S4wrC2") {
        let s = Session::new();
        let g = s.intern(e.build(5000).unwrap());
        let primes = if e.primes.is_empty() { lifts_core::perm::prime_factors(g.order() as u64) } else { e.primes.clone() };
        for p in primes {
            let bs = s.brauer(&g, p).unwrap();
            let m = s.intern(g.o_p_prime(p));
            let tm = s.table(&m).unwrap();
            let res = Restriction::compute(bs.table(), &tm).unwrap();
            for b in block_partition(&bs) {
                let base = fong_pair(&s, &bs, &b).unwrap();
                let central = |fp: &lifts_core::fong::FongPair| {
                    let n = fp.v.normalizer(&fp.d).unwrap();
                    fp.d.generators().iter().all(|x| n.generators().iter().all(|y| x.compose(y) == y.compose(x)))
                };
                let orbit = irr_orbit(&g, &tm, res.covered(b.irr[0])[0]).unwrap();
                for alpha in orbit {
                    let fp = fong_pair_with(&s, &bs, &b, AlphaChoice::First(alpha)).unwrap();
                    assert_eq!(fp.v.order(), base.v.order(), "{} p={}", e.name, p);
                    assert_eq!(fp.d.order(), base.d.order());
                    assert_eq!(central(&fp), central(&base), "{} p={} alpha={}", e.name, p, alpha);
                }
            }
        }
    }
}

fn random_subgroup(g: &PermGroup, rng: &mut ChaCha8Rng) -> PermGroup {
    let n = rng.gen_range(1..=2);
    let gens: Vec<_> = (0..n).map(|_| g.element(rng.gen_range(0..g.order())).clone()).collect();
    g.subgroup(&gens).unwrap()
}

#[test]
fn frobenius_reciprocity_on_random_pairs() {
    let c = verify::load_corpus(common::corpus_path()).unwrap();
    let groups: Vec<Arc<PermGroup>> = c
        .iter()
        .map(|e| Arc::new(e.build(5000).unwrap()))
        .filter(|g| g.order() > 1 && g.order() <= 300)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let g = &groups[rng.gen_range(0..groups.len())];
        let h = Arc::new(random_subgroup(g, &mut rng));
        let tg = CharacterTable::compute(g.clone()).unwrap();
        let th = CharacterTable::compute(h.clone()).unwrap();
        let theta = th.character(rng.gen_range(0..th.len()));
        let chi = tg.character(rng.gen_range(0..tg.len()));
        let lhs = inner_product(&theta.induce(g).unwrap(), &chi).unwrap();
        let rhs = inner_product(&theta, &chi.restrict(&h).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert!(lhs.is_integral());
    }
}

#[test]
fn crash_isolation_keeps_other_groups() {
    let text = "group A\ndegree 4\ngens (1 2 3 4), (1 2)\nend\ngroup Big\ndegree 8\ngens (1 2 3 4 5 6 7 8), (1 2)\nend\ngroup B\ndegree 3\ngens (1 2 3)\nend\n";
    let c = verify::parse_corpus(text).unwrap();
    let rs = verify::verify_corpus(&c, &Options { max_order: 100, ..Default::default() });
    assert!(rs.iter().any(|r| r.group == "A"));
    assert!(rs.iter().any(|r| r.group == "B"));
    let big: Vec<_> = rs.iter().filter(|r| r.group == "Big").collect();
    assert_eq!(big.len(), 1);
    assert!(big[0].block.id.is_none());
    assert_eq!(big[0].block.verdicts.kb_bound, Verdict::NotApplicable);
}
