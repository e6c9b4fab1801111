//! Seminormal modules, characters and coinvariants against classical
//! character theory and the horizontal-strip rule.

use std::collections::BTreeMap;

use hstab_core::hecke::regular_representation;
use hstab_core::partitions::{pad, partitions_of, pieri_add, syt_count, syt_enumerate, Partition};
use hstab_core::specht::{
    branching_check, character, character_table, coinvariants, decompose, specht_module, trace_along_word,
    CoinvariantMode, Decomposer, Decomposition,
};
use hstab_core::symgroup::Permutation;
use hstab_core::Scalar;
use num_rational::BigRational;
use proptest::prelude::*;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Classical character value by rim-hook removal on beta-numbers.
fn murnaghan_nakayama(lambda: &[usize], mu: &[usize]) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return if lambda.iter().all(|&x| x == 0) { 1 } else { 0 };
    };
    let len = lambda.len();
    let beta: Vec<i64> = lambda
        .iter()
        .enumerate()
        .map(|(i, &x)| (x + len - 1 - i) as i64)
        .collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        let nb = b - k as i64;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let between = beta.iter().filter(|&&x| nb < x && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut next = beta.clone();
        next[i] = nb;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let shape: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(j, &x)| (x - (len - 1 - j) as i64) as usize)
            .collect();
        total += sign * murnaghan_nakayama(&shape, rest);
    }
    total
}

#[test]
fn seminormal_modules_satisfy_relations() {
    for n in 0..=6 {
        for lambda in partitions_of(n) {
            let s = specht_module(&lambda).unwrap();
            assert!(s.presentation.relation_violations().is_empty(), "{lambda:?}");
            assert_eq!(s.presentation.dim() as u64, syt_count(&lambda));
        }
    }
}

#[test]
fn hook_lengths_match_enumeration() {
    for n in 0..=7 {
        for lambda in partitions_of(n) {
            let tableaux = syt_enumerate(&lambda).unwrap();
            assert!(tableaux.iter().all(|t| t.is_standard() && t.shape() == lambda));
            assert_eq!(tableaux.len() as u64, syt_count(&lambda));
        }
    }
}

#[test]
fn character_tables_at_one_are_classical() {
    let one = BigRational::from_integer(1.into());
    for n in 1..=5 {
        let table = character_table(n).unwrap();
        let values = table.specialize(&one).unwrap();
        for (r, lambda) in table.rows.iter().enumerate() {
            for (c, (mu, _)) in table.classes.iter().enumerate() {
                let expected = murnaghan_nakayama(lambda.parts(), mu.parts());
                assert_eq!(
                    values[r][c],
                    BigRational::from_integer(expected.into()),
                    "{lambda:?} at {mu:?}"
                );
            }
        }
    }
}

#[test]
fn identity_column_holds_dimensions() {
    let table = character_table(3).unwrap();
    let dims: Vec<Scalar> = table
        .rows
        .iter()
        .map(|l| table.value(l, &p("1,1,1")).unwrap())
        .collect();
    assert_eq!(
        dims,
        vec![Scalar::from_int(1), Scalar::from_int(2), Scalar::from_int(1)]
    );
}

#[test]
fn character_examples() {
    let sign = specht_module(&p("1,1")).unwrap();
    assert_eq!(
        character(&sign.presentation, &Permutation::simple(2, 1)).unwrap(),
        Scalar::from_int(-1)
    );
    let r3 = regular_representation(3).unwrap();
    assert_eq!(character(&r3, &Permutation::identity(3)).unwrap(), Scalar::from_int(6));
    // sum of dim(lambda) * chi_lambda(T_1) = q + 2(q - 1) - 1
    let expected = &(&Scalar::q() * &Scalar::from_int(3)) - &Scalar::from_int(3);
    assert_eq!(character(&r3, &Permutation::simple(3, 1)).unwrap(), expected);
    let table = character_table(3).unwrap();
    let s1 = &table.classes.iter().find(|(mu, _)| *mu == p("2,1")).unwrap().1;
    let weighted = table.rows.iter().fold(Scalar::zero(), |acc, l| {
        &acc + &(&table.value(l, &p("2,1")).unwrap() * &Scalar::from_int(syt_count(l) as i64))
    });
    assert_eq!(character(&r3, s1).unwrap(), weighted);
}

#[test]
fn regular_modules_decompose_by_dimension() {
    for n in 1..=4 {
        let got = decompose(&regular_representation(n).unwrap()).unwrap();
        let expected: BTreeMap<Partition, u64> = partitions_of(n)
            .into_iter()
            .map(|l| {
                let d = syt_count(&l);
                (l, d)
            })
            .collect();
        assert_eq!(got, expected);
    }
}

#[test]
fn decomposition_is_additive() {
    let dec = Decomposer::new();
    let a = specht_module(&p("2,1")).unwrap().presentation;
    let b = regular_representation(3).unwrap();
    let sum = dec.decompose(&a.direct_sum(&b).unwrap()).unwrap();
    let mut expected = dec.decompose(&b).unwrap();
    *expected.get_mut(&p("2,1")).unwrap() += 1;
    assert_eq!(sum, expected);
}

/// `S(lambda)_n / Q_{n-a}` for every valid `n <= 6`.
#[test]
fn coinvariant_quotients() {
    let dec = Decomposer::new();
    for size in 0..=3 {
        for lambda in partitions_of(size) {
            let mut by_a: BTreeMap<usize, Vec<(usize, Decomposition)>> = BTreeMap::new();
            for n in 0..=6 {
                let Ok(big) = pad(&lambda, n) else { continue };
                let s = specht_module(&big).unwrap();
                for a in 0..=n {
                    let c = coinvariants(&s.presentation, a, CoinvariantMode::Twisted).unwrap();
                    assert_eq!(c.dim() == 0, a < size, "lambda = {lambda:?}, n = {n}, a = {a}");
                    let d = dec.decompose(&c.presentation).unwrap();
                    if a == size {
                        assert_eq!(d, [(lambda.clone(), 1)].into_iter().collect());
                    }
                    if n >= a + size {
                        by_a.entry(a).or_default().push((n, d));
                    }
                }
            }
            for (a, runs) in by_a {
                assert!(
                    runs.windows(2).all(|w| w[0].1 == w[1].1),
                    "lambda = {lambda:?}, a = {a}"
                );
            }
        }
    }
}

#[test]
fn literal_coinvariants_vanish() {
    for lambda in partitions_of(4) {
        let s = specht_module(&lambda).unwrap();
        for a in 0..=2 {
            let c = coinvariants(&s.presentation, a, CoinvariantMode::Literal).unwrap();
            assert_eq!(c.dim(), 0);
        }
    }
}

#[test]
fn branching_matches_horizontal_strips() {
    for n in 1..=5 {
        for lambda in partitions_of(n) {
            for m in 0..=n {
                let report = branching_check(&lambda, m).unwrap();
                assert!(report.matches, "{lambda:?}, m = {m}: {report:?}");
            }
        }
    }
    let r = branching_check(&p("3"), 2).unwrap();
    assert_eq!(r.observed, [(p("1"), 1)].into_iter().collect());
    assert!(pieri_add(&p("1,1"), 2).iter().all(|mu| *mu != p("2,2")));
}

/// A reduced word chosen by taking a random left descent at each step.
fn random_reduced_word(w: &Permutation, choices: &[usize]) -> Vec<usize> {
    let mut word = Vec::new();
    let mut cur = w.clone();
    let mut k = 0;
    loop {
        let descents: Vec<usize> = (1..cur.n()).filter(|&i| cur.has_left_descent(i)).collect();
        if descents.is_empty() {
            return word;
        }
        let i = descents[choices[k % choices.len()] % descents.len()];
        k += 1;
        word.push(i);
        cur = cur.mul_simple_left(i);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn character_ignores_reduced_word(
        one_line in Just((1..=5usize).collect::<Vec<_>>()).prop_shuffle(),
        choices in prop::collection::vec(0usize..8, 1..6),
        which in 0usize..7,
    ) {
        let w = Permutation::from_one_line(&one_line).unwrap();
        let word = random_reduced_word(&w, &choices);
        prop_assert_eq!(word.len(), w.length());
        let lambda = partitions_of(5)[which].clone();
        let s = specht_module(&lambda).unwrap();
        prop_assert_eq!(trace_along_word(&s.presentation, &word), character(&s.presentation, &w).unwrap());
    }
}
