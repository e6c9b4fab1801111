//! Consistent sequences: construction, spans, covers, coinvariant maps,
//! degrees, weight, multiplicities and the stability verdict.

use std::collections::BTreeMap;

use hstab_core::arith::{rank, RankMode};
use hstab_core::fi::*;
use hstab_core::hecke::{one_dim_rep, regular_representation, OneDimKind};
use hstab_core::partitions::{pad, stable_multiplicity_oracle, syt_count, Partition};
use hstab_core::specht::{specht_module, CoinvariantMode, Decomposer};
use hstab_core::{Error, Scalar, SparseVec};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn free_sequences_have_expected_dimensions() {
    let index = build_free(&BTreeMap::from([(0, one_dim_rep(0, OneDimKind::Index))]), 5, "M(0)").unwrap();
    assert_eq!(index.sequence.dims(), vec![1; 6]);
    for m in 0..=3 {
        let v = build_m(m, 6).unwrap().sequence;
        for n in 0..=6 {
            let expected = if n >= m { factorial(n) / factorial(n - m) } else { 0 };
            assert_eq!(v.dim(n), expected, "M({m})_{n}");
        }
        assert!(check_consistency(&v).passed());
        assert!(v.modules().iter().all(|x| x.relation_violations().is_empty()));
    }
    let s1 = build_m_specht(&p("1"), 3).unwrap().sequence;
    assert_eq!(s1.dim(3), 3);
    let s21 = build_m_specht(&p("2,1"), 5).unwrap().sequence;
    assert_eq!(s21.dim(5), binomial(5, 3) * 2);
    let empty = build_m_specht(&Partition::empty(), 4).unwrap().sequence;
    assert_eq!(empty.dims(), vec![1; 5]);
}

#[test]
fn corrupted_connector_is_located() {
    let v = build_m(1, 4).unwrap().sequence;
    let mut connectors = v.connectors().to_vec();
    let phi = &mut connectors[3];
    phi.set(0, 0, Scalar::from_int(2));
    let bad = ConsistentSequence::new("bad", v.modules().to_vec(), connectors).unwrap();
    let verdict = check_consistency(&bad);
    assert!(!verdict.passed());
    assert!(verdict.violations.iter().all(|&(n, _)| n == 3));
    assert!(check_consistency(&ConsistentSequence::zero(4)).passed());
}

#[test]
fn shape_errors_are_rejected() {
    let v = build_m(1, 3).unwrap().sequence;
    let mut connectors = v.connectors().to_vec();
    connectors.pop();
    assert!(matches!(
        ConsistentSequence::new("short", v.modules().to_vec(), connectors),
        Err(Error::Shape(_))
    ));
}

#[test]
fn span_examples() {
    let m1 = build_m(1, 5).unwrap().sequence;
    let full: Vec<(usize, SparseVec)> = (0..=5)
        .flat_map(|n| (0..m1.dim(n)).map(move |i| (n, SparseVec::unit(i))))
        .collect();
    let all = span(&m1, &full).unwrap();
    assert_eq!(all.dims(), m1.dims());
    assert_eq!(all.generation_degree, GenerationDegree::Degree(1));
    let one = span(&m1, &[(1, SparseVec::unit(0))]).unwrap();
    assert_eq!(one.dims(), m1.dims());
    assert_eq!(one.generation_degree, GenerationDegree::Degree(1));
    let none = span(&m1, &[]).unwrap();
    assert!(none.sequence.is_zero());
    assert_eq!(none.generation_degree, GenerationDegree::Degree(0));
}

#[test]
fn generation_degrees_of_free_sequences() {
    for m in 0..=3 {
        let v = build_m(m, 6).unwrap().sequence;
        assert_eq!(generation_degree(&v), GenerationDegree::Degree(m));
    }
    let u = unbounded_sequence(5).unwrap().sequence;
    assert_eq!(generation_degree(&u), GenerationDegree::ExceedsTruncation);
}

#[test]
fn free_cover_examples() {
    let m1 = build_m(1, 5).unwrap().sequence;
    let cover = free_cover(&m1, 1).unwrap();
    assert!(cover.morphism.is_epi());
    let k = kernel(&cover.morphism).unwrap();
    assert!(k.is_zero());

    let zero = ConsistentSequence::zero(4);
    let cover = free_cover(&zero, 0).unwrap();
    assert!(cover.morphism.is_epi() && cover.source.sequence.is_zero());

    // V_0 = V_1 = 0, so the cover is M(S^(1,1)) itself
    let v = build_m_specht(&p("1,1"), 5).unwrap().sequence;
    let cover = free_cover(&v, 2).unwrap();
    assert!(cover.morphism.is_epi());
    assert_eq!(cover.source.sequence.dims(), v.dims());
    assert!(kernel(&cover.morphism).unwrap().is_zero());

    assert!(matches!(
        free_cover(&build_m(2, 5).unwrap().sequence, 1),
        Err(Error::InsufficientDegree(1))
    ));
}

#[test]
fn cover_of_sum_has_rank_nullity_kernel() {
    // V = M(S^(1)) + M(0): generated in degree 1, cover is M(V_0) + M(V_1)
    let v = direct_sum(
        &build_m_specht(&p("1"), 5).unwrap().sequence,
        &build_m(0, 5).unwrap().sequence,
    )
    .unwrap();
    let cover = free_cover(&v, 1).unwrap();
    let k = kernel(&cover.morphism).unwrap();
    for n in 0..=5 {
        let f = cover.morphism.component(n);
        assert_eq!(k.dim(n), f.ncols() - rank(f));
        assert_eq!(k.dim(n), cover.source.sequence.dim(n) - v.dim(n));
    }
    assert!(check_consistency(&k).passed());
    assert!(cokernel(&cover.morphism).unwrap().is_zero());
}

#[test]
fn pointwise_operations() {
    let v = build_m(1, 4).unwrap().sequence;
    let sum = direct_sum(&v, &ConsistentSequence::zero(4)).unwrap();
    for (a, b) in sum.modules().iter().zip(v.modules()) {
        assert_eq!(a.gens(), b.gens());
    }
    assert_eq!(sum.connectors(), v.connectors());
    let id = SequenceMorphism::identity(&v);
    assert!(kernel(&id).unwrap().is_zero());
    assert!(cokernel(&id).unwrap().is_zero());
    assert!(tensor(&v, &ConsistentSequence::zero(4)).unwrap().is_zero());
    assert!(matches!(tensor(&v, &v), Err(Error::Relation(_))));
    assert!(direct_sum(&v, &ConsistentSequence::zero(3)).is_err());
}

#[test]
fn phi_a_examples() {
    let m0 = build_m(0, 5).unwrap().sequence;
    for a in 0..=5 {
        let phi = phi_a(&m0, a, CoinvariantMode::Twisted).unwrap();
        assert!(phi.dims().iter().all(|&d| d == 1));
        assert!(phi.maps.iter().all(|t| *t == hstab_core::ExactMatrix::identity(1)));
        assert!(phi.well_defined);
    }
    let top = phi_a(&m0, 5, CoinvariantMode::Twisted).unwrap();
    assert_eq!((top.quotients.len(), top.maps.len()), (1, 0));

    let s1 = build_m_specht(&p("1"), 6).unwrap().sequence;
    let phi = phi_a(&s1, 1, CoinvariantMode::Twisted).unwrap();
    assert_eq!(phi.dims(), vec![1, 2, 2, 2, 2, 2]);
}

#[test]
fn degrees_of_free_sequences() {
    for m in 0..=3 {
        let v = build_m(m, 6).unwrap().sequence;
        let d = degrees(&v, 2, RankMode::Exact).unwrap();
        assert_eq!(d.injective_degree, Some(0), "M({m})");
        assert_eq!(d.surjective_degree, Some(m), "M({m})");
        assert!(d.monotonicity_violations.is_empty() && d.well_defined);
    }
}

#[test]
fn stability_degree_is_first_row() {
    for lambda in ["1", "2", "1,1", "2,1", "3"] {
        let lambda = p(lambda);
        let v = build_m_specht(&lambda, 6).unwrap().sequence;
        let d = degrees(&v, 2, RankMode::Exact).unwrap();
        assert_eq!(d.stability_degree, Some(lambda.first()), "{lambda:?}");
        assert_eq!(d.injective_degree, Some(0));
    }
}

#[test]
fn specialized_rank_agrees_on_degrees() {
    let v = build_m_specht(&p("2,1"), 6).unwrap().sequence;
    let exact = degrees(&v, 2, RankMode::Exact).unwrap();
    let special = degrees(&v, 2, RankMode::Specialized { count: 3, seed: 7 }).unwrap();
    assert_eq!(exact.verdicts, special.verdicts);
}

#[test]
fn weights() {
    let dec = Decomposer::new();
    for lambda in ["1", "2", "1,1", "2,1", "3"] {
        let lambda = p(lambda);
        let v = build_m_specht(&lambda, 6).unwrap().sequence;
        assert_eq!(weight(&v, &dec).unwrap(), lambda.size());
    }
    assert_eq!(weight(&ConsistentSequence::zero(4), &dec).unwrap(), 0);
    assert_eq!(weight(&build_m(1, 5).unwrap().sequence, &dec).unwrap(), 1);
}

#[test]
fn multiplicity_tables_follow_pieri() {
    let dec = Decomposer::new();
    for lambda in ["1", "2", "1,1", "2,1", "3"] {
        let lambda = p(lambda);
        let v = build_m_specht(&lambda, 7).unwrap().sequence;
        let table = multiplicity_table(&v, &dec).unwrap();
        for n in lambda.size()..=7 {
            let oracle = stable_multiplicity_oracle(&lambda, n).unwrap();
            for (mu, c) in &oracle {
                let label = hstab_core::partitions::unpad(mu);
                assert_eq!(pad(&label, n).unwrap(), *mu);
                assert_eq!(table.get(&label, n), *c as u64);
            }
            let total: u64 = table.rows.values().map(|r| r[n]).sum();
            assert_eq!(total, oracle.len() as u64);
        }
        let onset = lambda.first() + lambda.size();
        for n in onset..7 {
            assert!(table.constant_between(n), "{lambda:?} at {n}");
        }
    }
    let m0 = multiplicity_table(&build_m(0, 5).unwrap().sequence, &dec).unwrap();
    assert_eq!(m0.rows.len(), 1);
    assert_eq!(m0.rows[&Partition::empty()], vec![1; 6]);
}

#[test]
fn stability_verdicts() {
    let dec = Decomposer::new();
    for lambda in ["1", "2", "1,1", "2,1", "3"] {
        let lambda = p(lambda);
        let v = build_m_specht(&lambda, 7).unwrap().sequence;
        let verdict = is_uniformly_stable(&v, Some(2), RankMode::Exact, &dec).unwrap();
        assert!(verdict.stable, "{lambda:?}");
        assert!(verdict.onset <= lambda.first() + lambda.size());
        assert_eq!(verdict.within_bound, Some(true));
    }
    let zero = is_uniformly_stable(&ConsistentSequence::zero(4), Some(1), RankMode::Exact, &dec).unwrap();
    assert!(zero.stable && zero.onset == 0);

    let m2 = build_m(2, 6).unwrap().sequence;
    let verdict = is_uniformly_stable(&m2, Some(2), RankMode::Exact, &dec).unwrap();
    assert!(verdict.stable && verdict.onset <= 4);
    let sum = direct_sum(
        &build_m_specht(&p("2"), 6).unwrap().sequence,
        &build_m_specht(&p("1,1"), 6).unwrap().sequence,
    )
    .unwrap();
    assert_eq!(sum.dims(), m2.dims());
    assert_eq!(multiplicity_table(&sum, &dec).unwrap(), verdict.table);
    for n in 2..=6 {
        assert_eq!(m2.dim(n), binomial(n, 2) * 2);
    }
}

#[test]
fn unbounded_sequence_never_stabilizes() {
    let dec = Decomposer::new();
    let u = unbounded_sequence(6).unwrap().sequence;
    let verdict = is_uniformly_stable(&u, None, RankMode::Exact, &dec).unwrap();
    assert!(!verdict.stable);
    assert!(verdict.transitions.iter().all(|t| !t.multiplicities_equal));
    let trivial = verdict.table.rows[&Partition::empty()].clone();
    assert_eq!(trivial, (1..=7).collect::<Vec<u64>>());
}

#[test]
fn shift_examples() {
    let m1 = build_m(1, 6).unwrap().sequence;
    assert_eq!(shift(&m1, 0).unwrap(), m1.clone().with_label("S+0(M(1))"));
    let s1 = shift(&m1, 1).unwrap();
    assert_eq!(s1.dims(), (1..=6).collect::<Vec<_>>());
    assert!(check_consistency(&s1).passed());
    let twice = shift(&s1, 1).unwrap();
    let direct = shift(&m1, 2).unwrap();
    assert_eq!(twice.modules(), direct.modules());
    assert_eq!(twice.connectors(), direct.connectors());
}

#[test]
fn shift_decompositions() {
    let r = shift_decompose_mm(1, 1, 6).unwrap();
    assert!(r.passed());
    assert_eq!(r.complement_dims, vec![1; 6]);
    assert_eq!(r.complement_generation_degree, GenerationDegree::Degree(0));
    let r = shift_decompose_mm(1, 0, 6).unwrap();
    assert!(r.passed() && r.complement_dims.iter().all(|&d| d == 0));
    for m in 0..=3 {
        for a in 0..=2 {
            let r = shift_decompose_mm(m, a, 6).unwrap();
            assert!(r.passed(), "m = {m}, a = {a}: {r:?}");
            for (n, (&t, &f)) in r.shifted_dims.iter().zip(&r.free_dims).enumerate() {
                assert_eq!(
                    t,
                    factorial(a + n) / factorial((a + n).saturating_sub(m)) * usize::from(a + n >= m)
                );
                assert_eq!(f, if n >= m { factorial(n) / factorial(n - m) } else { 0 });
            }
        }
    }
}

#[test]
fn noetherian_sampling() {
    let r = noetherian_experiment(2, 6, 42, 6).unwrap();
    assert!(r.all_finitely_generated && r.all_stable);
    assert!(r.max_generation_degree.is_some_and(|d| d <= 6));
    let again = noetherian_experiment(2, 6, 42, 6).unwrap();
    assert_eq!(r, again);

    let dec = Decomposer::new();
    let m2 = build_m(2, 6).unwrap().sequence;
    let full: Vec<(usize, SparseVec)> = (0..m2.dim(2)).map(|i| (2, SparseVec::unit(i))).collect();
    let trial = run_trial(&m2, full, &dec).unwrap();
    assert_eq!(trial.generation_degree, GenerationDegree::Degree(2));
    assert_eq!(trial.dims, m2.dims());
    let empty = run_trial(&m2, vec![], &dec).unwrap();
    assert!(empty.dims.iter().all(|&d| d == 0));
    assert_eq!(empty.generation_degree, GenerationDegree::Degree(0));
}

#[test]
fn regular_and_specht_inputs_are_valid_presentations() {
    let w = BTreeMap::from([
        (1, specht_module(&p("1")).unwrap().presentation),
        (2, regular_representation(2).unwrap()),
    ]);
    let v = build_free(&w, 5, "mixed").unwrap();
    assert!(check_consistency(&v.sequence).passed());
    for n in 0..=5 {
        let expected: usize = w
            .iter()
            .filter(|(m, _)| **m <= n)
            .map(|(m, x)| binomial(n, *m) * x.dim())
            .sum();
        assert_eq!(v.sequence.dim(n), expected);
    }
    let s = specht_module(&p("2,1")).unwrap();
    assert_eq!(s.presentation.dim() as u64, syt_count(&p("2,1")));
}

#[test]
fn stability_degree_is_bounded_by_generation_degree() {
    let mut cases: Vec<ConsistentSequence> = (0..=3).map(|m| build_m(m, 6).unwrap().sequence).collect();
    for lambda in ["1", "2", "1,1", "2,1", "3"] {
        cases.push(build_m_specht(&p(lambda), 6).unwrap().sequence);
    }
    for v in &cases {
        let g = generation_degree(v).degree().unwrap();
        let s = degrees(v, 2, RankMode::Exact).unwrap().stability_degree.unwrap();
        assert!(s <= g, "{}: stability {s}, generation {g}", v.label());
    }
    // equality occurs: M(2) has both degrees equal to 2
    let m2 = &cases[2];
    assert_eq!(generation_degree(m2), GenerationDegree::Degree(2));
    assert_eq!(degrees(m2, 2, RankMode::Exact).unwrap().stability_degree, Some(2));
}
