use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{ExactMatrix, SparseVec};
use crate::hecke::{induce_pair, one_dim_rep, regular_representation, ModulePresentation, OneDimKind};
use crate::partitions::Partition;
use crate::specht::specht_module;
use crate::symgroup::Permutation;
use crate::Error;

use super::sequence::{ConsistentSequence, SequenceMorphism};
use super::span::{generation_degree, GenerationDegree};

/// Where the block `H_n (x) W_m` sits inside `M(W)_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub m: usize,
    pub offset: usize,
    /// Distinguished representatives of `S_n / (S_m x S_{n-m})`.
    pub reps: Vec<Permutation>,
    pub fiber_dim: usize,
}

impl Summand {
    pub fn dim(&self) -> usize {
        self.reps.len() * self.fiber_dim
    }

    /// Index of `T_{reps[d]} (x) w_i` in `M(W)_n`.
    pub fn index(&self, d: usize, i: usize) -> usize {
        self.offset + d * self.fiber_dim + i
    }
}

/// `M(W)` together with the block layout of each degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeSequence {
    pub sequence: ConsistentSequence,
    pub layouts: Vec<Vec<Summand>>,
}

/// `M(W)_n = sum over m <= n of H_n (x)_{H_m (x) H_{n-m}} (W_m (x) index)`,
/// with `phi_n(T_d (x) w) = T_d (x) w` for `d` viewed inside `S_{n+1}`.
/// `w` maps degree `m` to a module over `H_m`.
pub fn build_free(
    w: &BTreeMap<usize, ModulePresentation>,
    n_max: usize,
    label: impl Into<String>,
) -> Result<FreeSequence, Error> {
    if let Some((m, v)) = w.iter().find(|(m, v)| v.rank() != **m) {
        return Err(Error::Shape(format!("W_{m} is a module over H_{}", v.rank())));
    }
    let mut modules = Vec::with_capacity(n_max + 1);
    let mut layouts: Vec<Vec<Summand>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut module = ModulePresentation::zero(n);
        let mut layout = Vec::new();
        for (&m, wm) in w.range(..=n) {
            if wm.dim() == 0 {
                continue;
            }
            let ind = induce_pair(wm, &one_dim_rep(n - m, OneDimKind::Index))?;
            layout.push(Summand {
                m,
                offset: module.dim(),
                reps: ind.reps.clone(),
                fiber_dim: ind.fiber_dim(),
            });
            module = module.direct_sum(&ind.presentation)?;
        }
        modules.push(module);
        layouts.push(layout);
    }
    let mut connectors = Vec::with_capacity(n_max);
    for n in 0..n_max {
        let (src, dst) = (&layouts[n], &layouts[n + 1]);
        let mut cols = Vec::with_capacity(modules[n].dim());
        for s in src {
            let t = dst.iter().find(|t| t.m == s.m).expect("summand persists");
            for d in &s.reps {
                let target = t
                    .reps
                    .binary_search(&d.embed(n + 1))
                    .expect("embedded representative stays distinguished");
                for i in 0..s.fiber_dim {
                    cols.push(SparseVec::unit(t.index(target, i)));
                }
            }
        }
        connectors.push(ExactMatrix::from_columns(modules[n + 1].dim(), cols)?);
    }
    let modules = modules
        .into_iter()
        .enumerate()
        .map(|(n, v)| v.with_label(format!("degree {n}")))
        .collect();
    Ok(FreeSequence {
        sequence: ConsistentSequence::new(label, modules, connectors)?,
        layouts,
    })
}

/// `M(m)`: `W` is the regular module of `H_m` in degree `m`.
pub fn build_m(m: usize, n_max: usize) -> Result<FreeSequence, Error> {
    let w = BTreeMap::from([(m, regular_representation(m)?)]);
    build_free(&w, n_max, format!("M({m})"))
}

/// `M(S^lambda)`.
pub fn build_m_specht(lambda: &Partition, n_max: usize) -> Result<FreeSequence, Error> {
    if lambda.size() > n_max {
        return Err(Error::Range(format!(
            "|lambda| = {} exceeds n_max = {n_max}",
            lambda.size()
        )));
    }
    let w = BTreeMap::from([(lambda.size(), specht_module(lambda)?.presentation)]);
    build_free(&w, n_max, format!("M(S^({lambda}))"))
}

/// A sequence that is not finitely generated: the sum of `M(S^(k))` over
/// `k <= n_max`, so a new summand starts in every degree.
pub fn unbounded_sequence(n_max: usize) -> Result<FreeSequence, Error> {
    let w = (0..=n_max)
        .map(|k| Ok((k, specht_module(&Partition::row(k))?.presentation)))
        .collect::<Result<BTreeMap<_, _>, Error>>()?;
    build_free(&w, n_max, format!("sum of M(S^(k)), k <= {n_max}"))
}

/// The epimorphism `sum_{i <= d} M(V_i) -> V`.
#[derive(Clone, Debug)]
pub struct FreeCover {
    pub source: FreeSequence,
    pub morphism: SequenceMorphism,
}

/// Sends `T_x (x) v` in the block of `M(V_i)` to `T_x phi_{n-1,i}(v)`.
pub fn free_cover(v: &ConsistentSequence, d: usize) -> Result<FreeCover, Error> {
    let n_max = v.n_max();
    if d > n_max {
        return Err(Error::Range(format!("d = {d} exceeds n_max = {n_max}")));
    }
    match generation_degree(v) {
        GenerationDegree::Degree(g) if g <= d => {}
        GenerationDegree::ExceedsTruncation if d >= n_max => {}
        _ => return Err(Error::InsufficientDegree(d)),
    }
    let w: BTreeMap<usize, ModulePresentation> = (0..=d)
        .filter(|&i| v.dim(i) > 0)
        .map(|i| (i, v.module(i).clone()))
        .collect();
    let source = build_free(&w, n_max, format!("cover of {}", v.label()))?;
    let mut components = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut cols = Vec::with_capacity(source.sequence.dim(n));
        for s in &source.layouts[n] {
            for x in &s.reps {
                let word = x.reduced_word();
                for i in 0..s.fiber_dim {
                    let pushed = v.push(&SparseVec::unit(i), s.m, n);
                    cols.push(v.module(n).apply_word(&word, &pushed));
                }
            }
        }
        components.push(ExactMatrix::from_columns(v.dim(n), cols)?);
    }
    let morphism = SequenceMorphism::new(source.sequence.clone(), v.clone(), components)?;
    Ok(FreeCover { source, morphism })
}
