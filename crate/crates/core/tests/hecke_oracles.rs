//! Hecke algebra arithmetic against an independent right-multiplication
//! implementation, the group algebra at `q = 1`, and the Pieri rule.

use std::collections::BTreeMap;

use hstab_core::hecke::{induce_pair, one_dim_rep, regular_representation, HeckeElement, OneDimKind};
use hstab_core::partitions::{partitions_of, pieri_add, syt_count, Partition};
use hstab_core::specht::{decompose, specht_module};
use hstab_core::symgroup::Permutation;
use hstab_core::Scalar;
use num_rational::BigRational;
use proptest::prelude::*;

type Terms = BTreeMap<Permutation, Scalar>;

fn q_minus_one() -> Scalar {
    &Scalar::q() - &Scalar::one()
}

/// `x * T_{s_i}` by the rule `T_w T_s = T_{ws}` or `q T_{ws} + (q-1) T_w`.
fn mul_generator_right(x: &Terms, i: usize) -> Terms {
    let mut out: Terms = BTreeMap::new();
    let mut add = |w: Permutation, c: Scalar| {
        let e = out.entry(w).or_insert_with(Scalar::zero);
        *e = &*e + &c;
    };
    for (w, c) in x {
        let ws = w.mul_simple_right(i);
        if w.has_right_descent(i) {
            add(ws, c * &Scalar::q());
            add(w.clone(), c * &q_minus_one());
        } else {
            add(ws, c.clone());
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `x * y` folding the reduced word of each `T_v` in `y` on the right.
fn oracle_mult(x: &HeckeElement, y: &HeckeElement) -> Terms {
    let start: Terms = x.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
    let mut out: Terms = BTreeMap::new();
    for (v, c) in y.terms() {
        let mut part = start.clone();
        for &i in &v.reduced_word() {
            part = mul_generator_right(&part, i);
        }
        for (w, x) in part {
            let e = out.entry(w).or_insert_with(Scalar::zero);
            *e = &*e + &(&x * c);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn terms(x: &HeckeElement) -> Terms {
    x.terms().map(|(w, c)| (w.clone(), c.clone())).collect()
}

#[test]
fn basis_products_match_right_multiplication() {
    for n in 1..=4 {
        let all = Permutation::all(n);
        for u in &all {
            for v in &all {
                let x = HeckeElement::basis(u.clone());
                let y = HeckeElement::basis(v.clone());
                assert_eq!(terms(&x.mult(&y).unwrap()), oracle_mult(&x, &y), "{u:?} * {v:?}");
            }
        }
    }
}

#[test]
fn associativity_on_basis_triples() {
    for n in 1..=3 {
        let all = Permutation::all(n);
        for u in &all {
            for v in &all {
                for w in &all {
                    let (a, b, c) = (
                        HeckeElement::basis(u.clone()),
                        HeckeElement::basis(v.clone()),
                        HeckeElement::basis(w.clone()),
                    );
                    let left = a.mult(&b).unwrap().mult(&c).unwrap();
                    let right = a.mult(&b.mult(&c).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }
}

#[test]
fn associativity_on_sampled_triples_in_rank_four() {
    let all = Permutation::all(4);
    for (k, u) in all.iter().enumerate() {
        let v = &all[(7 * k + 3) % 24];
        let w = &all[(11 * k + 5) % 24];
        let (a, b, c) = (
            HeckeElement::basis(u.clone()),
            HeckeElement::basis(v.clone()),
            HeckeElement::basis(w.clone()),
        );
        assert_eq!(
            a.mult(&b).unwrap().mult(&c).unwrap(),
            a.mult(&b.mult(&c).unwrap()).unwrap()
        );
    }
}

#[test]
fn specialization_at_one_is_the_group_algebra() {
    let one = BigRational::from_integer(1.into());
    for n in 1..=4 {
        let all = Permutation::all(n);
        for u in &all {
            for v in &all {
                let p = HeckeElement::basis(u.clone())
                    .mult(&HeckeElement::basis(v.clone()))
                    .unwrap();
                let at_one = p.specialize(&one).unwrap();
                let expected: BTreeMap<Permutation, BigRational> = [(u.compose(v), one.clone())].into_iter().collect();
                assert_eq!(at_one, expected);
            }
        }
    }
}

#[test]
fn regular_modules_satisfy_relations() {
    for n in 0..=4 {
        let r = regular_representation(n).unwrap();
        assert_eq!(r.dim(), (1..=n).product::<usize>());
        assert!(r.relation_violations().is_empty(), "n = {n}");
    }
}

#[test]
fn regular_module_acts_by_left_multiplication() {
    let r = regular_representation(3).unwrap();
    let basis = Permutation::all(3);
    let x = HeckeElement::from_word(3, &[2, 1]).unwrap();
    let m = r.act(&x).unwrap();
    for (j, w) in basis.iter().enumerate() {
        let product = x.mult(&HeckeElement::basis(w.clone())).unwrap();
        for (i, u) in basis.iter().enumerate() {
            assert_eq!(m.get(i, j), product.coeff(u));
        }
    }
}

#[test]
fn induced_dimension_formula() {
    let v = regular_representation(2).unwrap();
    for k in 0..=3 {
        let w = regular_representation(k).unwrap();
        let ind = induce_pair(&v, &w).unwrap();
        let binom = (1..=2 + k).product::<usize>() / (2 * (1..=k).product::<usize>());
        assert_eq!(ind.presentation.dim(), binom * v.dim() * w.dim());
        assert!(ind.presentation.relation_violations().is_empty());
    }
}

#[test]
fn induction_from_index_follows_pieri() {
    for m in 0..=3 {
        for lambda in partitions_of(m) {
            let s = specht_module(&lambda).unwrap();
            for k in 0..=(5 - m).min(2) {
                let ind = induce_pair(&s.presentation, &one_dim_rep(k, OneDimKind::Index)).unwrap();
                let got = decompose(&ind.presentation).unwrap();
                let expected: BTreeMap<Partition, u64> = pieri_add(&lambda, k).into_iter().map(|mu| (mu, 1)).collect();
                assert_eq!(got, expected, "lambda = {lambda:?}, k = {k}");
            }
        }
    }
}

#[test]
fn small_induction_examples() {
    let s1 = specht_module(&"1".parse().unwrap()).unwrap();
    let index1 = one_dim_rep(1, OneDimKind::Index);
    let ind = induce_pair(&s1.presentation, &index1).unwrap();
    assert_eq!(ind.presentation.dim(), 2);
    let d = decompose(&ind.presentation).unwrap();
    assert_eq!(d.len(), 2);
    let s11 = specht_module(&"1,1".parse().unwrap()).unwrap();
    let d = decompose(&induce_pair(&s11.presentation, &index1).unwrap().presentation).unwrap();
    let keys: Vec<String> = d.keys().map(|p| p.to_string()).collect();
    assert_eq!(keys, vec!["1,1,1", "2,1"]);
    let total: u64 = d.iter().map(|(p, c)| c * syt_count(p)).sum();
    assert_eq!(total, 3);
}

#[test]
fn restriction_keeps_eigenvalues() {
    let s = specht_module(&"2,1".parse().unwrap()).unwrap();
    let pair = s.presentation.restrict(1).unwrap();
    let g = pair.first.gen(1);
    // eigenvalues q and -1: trace q - 1, and (G - q)(G + 1) = 0 with G not scalar
    assert_eq!(g.trace(), q_minus_one());
    assert!(pair.second.gens().is_empty());
}

fn element_strategy(n: usize) -> impl Strategy<Value = HeckeElement> {
    let perms = Permutation::all(n);
    prop::collection::vec((0..perms.len(), -3i64..=3, 0usize..=2), 1..4).prop_map(move |entries| {
        let terms = entries
            .into_iter()
            .map(|(k, c, e)| (perms[k].clone(), &Scalar::from_int(c) * &Scalar::q_pow(e as i64)));
        HeckeElement::from_terms(n, terms).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tau_is_multiplicative(x in element_strategy(3), y in element_strategy(3)) {
        prop_assert_eq!(x.mult(&y).unwrap().tau(), x.tau().mult(&y.tau()).unwrap());
    }

    #[test]
    fn products_agree_with_oracle(x in element_strategy(4), y in element_strategy(4)) {
        prop_assert_eq!(terms(&x.mult(&y).unwrap()), oracle_mult(&x, &y));
    }

    #[test]
    fn random_triples_associate(x in element_strategy(5), y in element_strategy(5), z in element_strategy(5)) {
        prop_assert_eq!(
            x.mult(&y).unwrap().mult(&z).unwrap(),
            x.mult(&y.mult(&z).unwrap()).unwrap()
        );
    }
}
