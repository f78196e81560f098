//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test --test acceptance -- --nocapture` to see them.

use std::collections::BTreeSet;

use cyclic_shuffle::bijections::{max_removal, max_removal_inv, split, swap_map};
use cyclic_shuffle::compatibility::{
    check_cyclic_compat, check_cyclic_compat_with, check_lifting_a, check_lifting_b,
    check_linear_compat, LiftVerdict, SearchStrategy, ShuffleUniverse, Verdict,
};
use cyclic_shuffle::patterns::{avoidance_poly, avoiders, PatternSet};
use cyclic_shuffle::perm_core::{interval, shifted_interval};
use cyclic_shuffle::shuffles::{
    cyclic_shuffle_count, cyclic_shuffles, cyclic_shuffles_at, linear_shuffles, maj_shuffle_poly,
};
use cyclic_shuffle::statistics::{
    cdes_set_linear, cpk_set_linear, cyclic_stat, linear_stat, word_distribution,
};
use cyclic_shuffle::{
    q_binomial, shift_mod, Cycle, Distribution, IndexSet, QPoly, StatValue, StatisticId, Word,
};

fn w(entries: &[u32]) -> Word {
    Word::new(entries.to_vec()).unwrap()
}

fn c(entries: &[u32]) -> Cycle {
    Cycle::from_entries(entries.to_vec()).unwrap()
}

fn set(xs: &[u32]) -> IndexSet {
    xs.iter().copied().collect()
}

fn words(m: u32) -> Vec<Word> {
    Word::universe(&interval(m))
}

fn upper_words(n: u32, m: u32) -> Vec<Word> {
    Word::universe(&shifted_interval(n, m))
}

fn cycles(m: u32) -> Vec<Cycle> {
    Cycle::universe(&interval(m))
}

fn upper_cycles(n: u32, m: u32) -> Vec<Cycle> {
    Cycle::universe(&shifted_interval(n, m))
}

#[test]
fn criterion_01_worked_example_suite() {
    // Eq. (1): 25 sh 73
    let eq1: BTreeSet<Word> = [
        w(&[2, 5, 7, 3]),
        w(&[2, 7, 5, 3]),
        w(&[2, 7, 3, 5]),
        w(&[7, 2, 5, 3]),
        w(&[7, 2, 3, 5]),
        w(&[7, 3, 2, 5]),
    ]
    .into_iter()
    .collect();
    assert_eq!(linear_shuffles(&w(&[2, 5]), &w(&[7, 3])).unwrap(), eq1);

    // Eq. (2): [13] sh [24]
    let eq2: BTreeSet<Cycle> = [
        c(&[1, 3, 2, 4]),
        c(&[1, 3, 4, 2]),
        c(&[1, 2, 3, 4]),
        c(&[1, 4, 3, 2]),
        c(&[1, 2, 4, 3]),
        c(&[1, 4, 2, 3]),
    ]
    .into_iter()
    .collect();
    assert_eq!(cyclic_shuffles(&c(&[1, 3]), &c(&[2, 4])).unwrap(), eq2);

    // statistics of 4218596
    let pi = w(&[4, 2, 1, 8, 5, 9, 6]);
    assert_eq!(
        linear_stat(StatisticId::Des, &pi).unwrap(),
        StatValue::Positions(set(&[1, 2, 4, 6]))
    );
    assert_eq!(linear_stat(StatisticId::DesNum, &pi).unwrap(), StatValue::Int(4));
    assert_eq!(
        linear_stat(StatisticId::Pk, &pi).unwrap(),
        StatValue::Positions(set(&[4, 6]))
    );
    assert_eq!(linear_stat(StatisticId::PkNum, &pi).unwrap(), StatValue::Int(2));
    assert_eq!(cdes_set_linear(&pi).unwrap(), set(&[1, 2, 4, 6, 7]));

    // statistics of 4218593
    let pi = w(&[4, 2, 1, 8, 5, 9, 3]);
    assert_eq!(cpk_set_linear(&pi).unwrap(), set(&[1, 4, 6]));
    assert_eq!(cpk_set_linear(&pi).unwrap().len(), 3);

    // cDes[3725] and cdes[3725]
    let c3725 = c(&[3, 7, 2, 5]);
    assert_eq!(
        cyclic_stat(StatisticId::CDes, &c3725).unwrap(),
        StatValue::multiset(vec![set(&[1, 3]), set(&[1, 3]), set(&[2, 4]), set(&[2, 4])])
    );
    assert_eq!(cyclic_stat(StatisticId::CDesNum, &c3725).unwrap(), StatValue::Int(2));

    // des distributions
    let quad = [w(&[1, 2, 3]), w(&[1, 3, 2]), w(&[3, 1, 2]), w(&[3, 2, 1])];
    let expected: Distribution = [0u64, 1, 1, 2].map(StatValue::Int).into_iter().collect();
    assert_eq!(
        word_distribution(StatisticId::DesNum, quad.iter()).unwrap(),
        expected
    );
    let sh = linear_shuffles(&w(&[2, 5]), &w(&[7, 3])).unwrap();
    let expected: Distribution = [1u64, 1, 1, 2, 2, 2].map(StatValue::Int).into_iter().collect();
    assert_eq!(
        word_distribution(StatisticId::DesNum, sh.iter()).unwrap(),
        expected
    );

    // standardization
    assert_eq!(
        w(&[4, 7, 6, 2]).standardize(&set(&[1, 3, 8, 9])).unwrap(),
        w(&[3, 9, 8, 1])
    );
    assert_eq!(
        c(&[7, 9, 2, 5, 4]).standardize(&interval(5)).unwrap(),
        c(&[4, 5, 1, 3, 2])
    );

    // mod-m set shift
    assert_eq!(shift_mod(&set(&[2, 4, 5]), 3, 6).unwrap(), set(&[1, 2, 5]));

    // splitting and maximum removal
    let c45132 = c(&[4, 5, 1, 3, 2]);
    assert_eq!(split(&c45132, 3).unwrap(), w(&[3, 2, 4, 5, 1]));
    assert_eq!(max_removal(&c45132), w(&[1, 3, 2, 4]));
    assert_eq!(max_removal(&c(&[6, 7, 3, 5, 4])), w(&[3, 5, 4, 6]));

    // the swap map
    assert_eq!(swap_map(&c(&[1, 3, 2, 4]), 3).unwrap(), c(&[1, 3, 2, 4]));
    assert_eq!(swap_map(&c(&[1, 3, 4, 2]), 3).unwrap(), c(&[1, 2, 4, 3]));
    assert_eq!(
        cyclic_stat(StatisticId::CDes, &c(&[1, 2, 4, 3])).unwrap(),
        StatValue::multiset(vec![set(&[1, 2]), set(&[2, 3]), set(&[3, 4]), set(&[1, 4])])
    );

    // indexed decomposition of [12] sh [34]
    let p = c(&[1, 2]);
    let s = c(&[3, 4]);
    let cell1: BTreeSet<Cycle> = [c(&[1, 2, 3, 4]), c(&[1, 2, 4, 3]), c(&[1, 3, 2, 4])]
        .into_iter()
        .collect();
    let cell2: BTreeSet<Cycle> = [c(&[1, 4, 2, 3]), c(&[1, 3, 4, 2]), c(&[1, 4, 3, 2])]
        .into_iter()
        .collect();
    assert_eq!(cyclic_shuffles_at(&p, 1, &s).unwrap(), cell1);
    assert_eq!(cyclic_shuffles_at(&p, 2, &s).unwrap(), cell2);

    // biruns
    assert_eq!(
        linear_stat(StatisticId::Bru, &w(&[1, 2, 5, 3, 4, 6])).unwrap(),
        StatValue::Int(3)
    );
    assert_eq!(
        cyclic_stat(StatisticId::CBru, &c(&[1, 2, 5, 3, 4, 6])).unwrap(),
        StatValue::Int(4)
    );

    println!("ACCEPTANCE 1 (worked-example suite): pass");
}

#[test]
fn criterion_02_linear_compatibility_bound_7() {
    for id in [StatisticId::Des, StatisticId::DesNum, StatisticId::Pk, StatisticId::PkNum] {
        let report = check_linear_compat(id, 7).unwrap();
        assert_eq!(report.verdict, Verdict::Compatible, "{id} at bound 7");
    }
    println!("ACCEPTANCE 2 (Des, des, Pk, pk linearly shuffle compatible, bound 7): pass");
}

#[test]
fn criterion_03_cyclic_compatibility() {
    for id in [
        StatisticId::CDes,
        StatisticId::CDesNum,
        StatisticId::CPk,
        StatisticId::CPkNum,
    ] {
        let report = check_cyclic_compat(id, 7).unwrap();
        assert_eq!(report.verdict, Verdict::Compatible, "{id} at bound 7");
    }
    let report = check_cyclic_compat(StatisticId::CBru, 6).unwrap();
    assert_eq!(report.verdict, Verdict::Compatible, "cbru at bound 6");
    println!("ACCEPTANCE 3 (cDes, cdes, cPk, cpk bound 7; cbru bound 6): pass");
}

#[test]
fn criterion_04_bru_negative_control() {
    let report = check_linear_compat(StatisticId::Bru, 6).unwrap();
    assert_eq!(report.verdict, Verdict::Counterexample);
    assert!(report.replay_counterexample().unwrap());
    println!("ACCEPTANCE 4 (bru counterexample at bound 6, replayed): pass");
}

#[test]
fn criterion_05_lifting_hypotheses_bound_6() {
    let pairs = [
        (StatisticId::CDes, StatisticId::Des),
        (StatisticId::CDesNum, StatisticId::DesNum),
        (StatisticId::CPk, StatisticId::Pk),
        (StatisticId::CPkNum, StatisticId::PkNum),
    ];
    for (cid, lid) in pairs {
        let a = check_lifting_a(cid, lid, 6).unwrap();
        assert_eq!(a.verdict, LiftVerdict::Holds, "(a) for ({cid}, {lid})");
        let b = check_lifting_b(cid, lid, 6).unwrap();
        assert_eq!(b.verdict, LiftVerdict::Holds, "(b) for ({cid}, {lid})");
    }
    println!("ACCEPTANCE 5 (lifting hypotheses (a) and (b) at bound 6): pass");
}

#[test]
fn criterion_06_cyclic_shuffle_cardinality_bound_8() {
    for total in 2..=8u32 {
        for m in 1..total {
            let n = total - m;
            let expected = cyclic_shuffle_count(m, n).unwrap();
            for p in cycles(m) {
                for s in upper_cycles(n, m) {
                    let sh = cyclic_shuffles(&p, &s).unwrap();
                    assert_eq!(sh.len() as u64, expected, "{p} sh {s}");
                }
            }
        }
    }
    println!("ACCEPTANCE 6 (cyclic shuffle cardinality (m+n-1)C(m+n-2,m-1), bound 8): pass");
}

#[test]
fn criterion_07_maj_identity_bound_7() {
    for total in 2..=7u32 {
        for m in 1..total {
            let n = total - m;
            let gauss = q_binomial(total, m).unwrap();
            for p in words(m) {
                let maj_p = match linear_stat(StatisticId::Maj, &p).unwrap() {
                    StatValue::Int(v) => v,
                    _ => unreachable!(),
                };
                for s in upper_words(n, m) {
                    let maj_s = match linear_stat(StatisticId::Maj, &s).unwrap() {
                        StatValue::Int(v) => v,
                        _ => unreachable!(),
                    };
                    let lhs = maj_shuffle_poly(&p, &s).unwrap();
                    let rhs = &QPoly::monomial((maj_p + maj_s) as usize, 1) * &gauss;
                    assert_eq!(lhs, rhs, "maj identity for {p} sh {s}");
                }
            }
        }
    }
    println!("ACCEPTANCE 7 (maj shuffle identity, bound 7): pass");
}

#[test]
fn criterion_08_cbru_equals_twice_cpk() {
    for n in 3..=8u32 {
        for cyc in cycles(n) {
            let cbru = cyclic_stat(StatisticId::CBru, &cyc).unwrap();
            let cpk = match cyclic_stat(StatisticId::CPkNum, &cyc).unwrap() {
                StatValue::Int(v) => v,
                _ => unreachable!(),
            };
            assert_eq!(cbru, StatValue::Int(2 * cpk), "cbru = 2 cpk on {cyc}");
        }
    }
    println!("ACCEPTANCE 8 (cbru = 2*cpk, lengths 3..=8): pass");
}

#[test]
fn criterion_09_invariant_suites() {
    // rotation-orbit structure of cDes, bound 7
    for n in 1..=7u32 {
        for cyc in cycles(n) {
            let sets = match cyclic_stat(StatisticId::CDes, &cyc).unwrap() {
                StatValue::PositionsMultiset(sets) => sets,
                _ => unreachable!(),
            };
            let base = sets[0].clone();
            let orbit =
                StatValue::multiset((1..=n).map(|i| shift_mod(&base, i, n).unwrap()).collect());
            assert_eq!(StatValue::PositionsMultiset(sets), orbit, "orbit of {cyc}");
        }
    }

    // well-definedness of cdes and cpk across rotations, bound 7
    for n in 1..=7u32 {
        for word in words(n) {
            let cdes = cdes_set_linear(&word).unwrap().len();
            let cpk = cpk_set_linear(&word).unwrap().len();
            for r in word.rotations() {
                assert_eq!(cdes_set_linear(&r).unwrap().len(), cdes);
                assert_eq!(cpk_set_linear(&r).unwrap().len(), cpk);
            }
        }
    }

    // M bijectivity, bound 7
    for n in 1..=7u32 {
        for cyc in cycles(n) {
            assert_eq!(max_removal_inv(&max_removal(&cyc), n).unwrap(), cyc);
        }
        for word in if n > 1 { words(n - 1) } else { vec![Word::empty()] } {
            assert_eq!(max_removal(&max_removal_inv(&word, n).unwrap()), word);
        }
    }

    // T_i preserves cDes, bound 7
    for n in 2..=7u32 {
        for cyc in cycles(n) {
            let cdes = cyclic_stat(StatisticId::CDes, &cyc).unwrap();
            for i in 2..=n {
                let image = swap_map(&cyc, i).unwrap();
                assert_eq!(cyclic_stat(StatisticId::CDes, &image).unwrap(), cdes);
            }
        }
    }

    // three-way verdict agreement, bound 5
    for id in [
        StatisticId::CDes,
        StatisticId::CDesNum,
        StatisticId::CPk,
        StatisticId::CPkNum,
        StatisticId::CBru,
    ] {
        let verdicts: Vec<Verdict> = [
            SearchStrategy::FullQuadruple,
            SearchStrategy::PairsLeftOnly,
            SearchStrategy::PairsRightOnly,
        ]
        .into_iter()
        .map(|strat| check_cyclic_compat_with(id, 5, strat).unwrap().verdict)
        .collect();
        assert!(
            verdicts.windows(2).all(|v| v[0] == v[1]),
            "verdicts disagree for {id}: {verdicts:?}"
        );
    }

    println!("ACCEPTANCE 9 (invariant suites): pass");
}

#[test]
fn criterion_10_pattern_module() {
    fn factorial(k: u64) -> u64 {
        (1..=k).product::<u64>().max(1)
    }
    for n in 1..=7u32 {
        assert_eq!(
            avoiders(n, &PatternSet::empty()).unwrap().len() as u64,
            factorial(n as u64 - 1),
            "|C[{n}]|"
        );
    }
    let mut single_patterns: Vec<Cycle> = cycles(3);
    single_patterns.extend(cycles(4));
    for pattern in single_patterns {
        let ps = PatternSet::new([pattern.clone()]).unwrap();
        for n in 1..=6u32 {
            let count = avoiders(n, &ps).unwrap().len() as i64;
            let poly = avoidance_poly(n, &ps).unwrap();
            assert_eq!(poly.eval_at_one(), count, "D_{n} at q=1 for pattern {pattern}");
        }
    }
    println!("ACCEPTANCE 10 (pattern avoidance properties): pass");
}
