use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{EchelonBasis, ExactMatrix, RankMode, Scalar, SparseVec};
use crate::specht::Decomposer;
use crate::symgroup::Permutation;
use crate::Error;

use super::free::{build_m, FreeSequence};
use super::sequence::{check_consistency, shift, ConsistentSequence};
use super::span::{generation_degree, span, GenerationDegree};
use super::stability::{is_uniformly_stable, MultiplicityTable};

/// Splitting of `S_{+a} M(m)` into the block isomorphic to `M(m)` and a
/// complement `C_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftDecomposition {
    pub m: usize,
    pub a: usize,
    pub n_max: usize,
    pub shifted_dims: Vec<usize>,
    pub free_dims: Vec<usize>,
    pub complement_dims: Vec<usize>,
    /// Both blocks are stable under the action and the connectors.
    pub direct_sum: bool,
    /// The free block has exactly the matrices of `M(m)` after relabelling.
    pub free_block_is_m: bool,
    pub complement_consistent: bool,
    pub complement_generation_degree: GenerationDegree,
    /// Generation degree of `C_a` is at most `m - 1`.
    pub complement_degree_ok: bool,
}

impl ShiftDecomposition {
    pub fn passed(&self) -> bool {
        self.direct_sum && self.free_block_is_m && self.complement_consistent && self.complement_degree_ok
    }
}

/// For a representative `d` of `M(m)_{a+n}`, the matching representative of
/// `M(m)_n` when `d` moves `1..m` into the last `n` letters.
fn free_partner(d: &Permutation, m: usize, a: usize, n: usize) -> Option<Permutation> {
    let head: Vec<usize> = (1..=m).map(|k| d.apply(k)).collect();
    if head.iter().any(|&x| x <= a) {
        return None;
    }
    let mut line: Vec<usize> = head.iter().map(|x| x - a).collect();
    let used: BTreeSet<usize> = line.iter().copied().collect();
    line.extend((1..=n).filter(|x| !used.contains(x)));
    Some(Permutation::from_one_line(&line).expect("valid relabelling"))
}

/// Checks `S_{+a} M(m) = M(m) + C_a` with `C_a` generated in degree `< m`.
pub fn shift_decompose_mm(m: usize, a: usize, n_max: usize) -> Result<ShiftDecomposition, Error> {
    if a > n_max {
        return Err(Error::Range(alloc::format!(
            "need a <= n_max, got a = {a}, n_max = {n_max}"
        )));
    }
    let big = build_m(m, n_max)?;
    let reference = build_m(m, n_max - a)?;
    let shifted = shift(&big.sequence, a)?;
    let top = n_max - a;
    // per degree n: for each index of V_{a+n}, Some(index in M(m)_n) on the free block
    let mut partners: Vec<Vec<Option<usize>>> = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut map = alloc::vec![None; shifted.dim(n)];
        if let (Some(s), Some(r)) = (big.layouts[a + n].first(), reference.layouts[n].first()) {
            for (di, d) in s.reps.iter().enumerate() {
                if let Some(p) = free_partner(d, m, a, n) {
                    let pi = r.reps.binary_search(&p).expect("partner is distinguished");
                    for i in 0..s.fiber_dim {
                        map[s.index(di, i)] = Some(r.index(pi, i));
                    }
                }
            }
        }
        partners.push(map);
    }
    let blocks_preserved = |mat: &ExactMatrix, src: &[Option<usize>], dst: &[Option<usize>]| {
        mat.columns()
            .iter()
            .enumerate()
            .all(|(j, col)| col.indices().all(|i| dst[i].is_some() == src[j].is_some()))
    };
    let mut direct_sum = true;
    let mut free_block_is_m = true;
    for n in 0..=top {
        let p = &partners[n];
        for i in 1..n {
            let g = shifted.module(n).gen(i);
            direct_sum &= blocks_preserved(g, p, p);
            free_block_is_m &= same_on_block(g, p, p, reference.sequence.module(n).gen(i));
        }
        free_block_is_m &= p.iter().flatten().count() == reference.sequence.dim(n);
        if n < top {
            let phi = shifted.connector(n);
            direct_sum &= blocks_preserved(phi, p, &partners[n + 1]);
            free_block_is_m &= same_on_block(phi, p, &partners[n + 1], reference.sequence.connector(n));
        }
    }
    let spaces: Vec<EchelonBasis> = partners
        .iter()
        .map(|p| {
            let units: Vec<SparseVec> = (0..p.len()).filter(|&k| p[k].is_none()).map(SparseVec::unit).collect();
            EchelonBasis::from_vectors(p.len(), &units)
        })
        .collect();
    let (complement_consistent, complement_generation_degree) = match shifted.subsequence(&spaces) {
        Ok(c) => (check_consistency(&c).passed(), generation_degree(&c)),
        Err(_) => (false, GenerationDegree::ExceedsTruncation),
    };
    let free_dims: Vec<usize> = partners.iter().map(|p| p.iter().flatten().count()).collect();
    // the zero complement is generated by the empty set, which covers m = 0
    let complement_zero = shifted.dims() == free_dims;
    let complement_degree_ok = complement_zero || complement_generation_degree.degree().is_some_and(|d| d < m);
    Ok(ShiftDecomposition {
        m,
        a,
        n_max,
        shifted_dims: shifted.dims(),
        complement_dims: shifted.dims().iter().zip(&free_dims).map(|(t, f)| t - f).collect(),
        free_dims,
        direct_sum,
        free_block_is_m,
        complement_consistent,
        complement_generation_degree,
        complement_degree_ok,
    })
}

/// `mat` restricted to the free block equals `reference` under the partner
/// relabelling.
fn same_on_block(mat: &ExactMatrix, src: &[Option<usize>], dst: &[Option<usize>], reference: &ExactMatrix) -> bool {
    src.iter().enumerate().all(|(j, pj)| match pj {
        None => true,
        Some(rj) => {
            let col = mat.column(j);
            let relabelled: Option<SparseVec> = col.iter().map(|(i, c)| dst[i].map(|ri| (ri, c.clone()))).collect();
            relabelled.as_ref() == Some(reference.column(*rj))
        }
    })
}

/// One random sub-object of `M(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoetherianTrial {
    pub seeds: Vec<(usize, SparseVec)>,
    pub dims: Vec<usize>,
    pub generation_degree: GenerationDegree,
    pub stable: bool,
    pub onset: usize,
    pub table: MultiplicityTable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoetherianReport {
    pub m: usize,
    pub seed: u64,
    pub n_max: usize,
    pub trials: Vec<NoetherianTrial>,
    /// `None` if some trial needed generators in the top degree.
    pub max_generation_degree: Option<usize>,
    pub all_finitely_generated: bool,
    pub all_stable: bool,
}

fn random_coefficient(rng: &mut ChaCha8Rng) -> Scalar {
    let c: i64 = [-2, -1, 1, 2][rng.random_range(0..4)];
    let base = Scalar::from_int(c);
    if rng.random_bool(0.5) {
        &base * &Scalar::q()
    } else {
        base
    }
}

/// Draws 1 or 2 sparse seed vectors per trial in degrees between `m` and
/// `n_max - 2`, and records what they generate inside `M(m)`.
pub fn noetherian_experiment(m: usize, trials: usize, seed: u64, n_max: usize) -> Result<NoetherianReport, Error> {
    if m > n_max {
        return Err(Error::Range(alloc::format!("m = {m} exceeds n_max = {n_max}")));
    }
    let ambient: FreeSequence = build_m(m, n_max)?;
    let v = &ambient.sequence;
    let dec = Decomposer::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hi = n_max.saturating_sub(2).max(m);
    let mut out = Vec::with_capacity(trials);
    for _ in 0..trials {
        let count = rng.random_range(1..=2);
        let mut seeds = Vec::with_capacity(count);
        for _ in 0..count {
            let degree = rng.random_range(m..=hi);
            let dim = v.dim(degree);
            let nnz = rng.random_range(1..=3usize.min(dim));
            let vector: SparseVec = (0..nnz)
                .map(|_| (rng.random_range(0..dim), random_coefficient(&mut rng)))
                .collect();
            seeds.push((degree, vector));
        }
        out.push(run_trial(v, seeds, &dec)?);
    }
    let all_finitely_generated = out
        .iter()
        .all(|t| t.generation_degree != GenerationDegree::ExceedsTruncation);
    Ok(NoetherianReport {
        m,
        seed,
        n_max,
        max_generation_degree: if all_finitely_generated {
            Some(
                out.iter()
                    .filter_map(|t| t.generation_degree.degree())
                    .max()
                    .unwrap_or(0),
            )
        } else {
            None
        },
        all_finitely_generated,
        all_stable: out.iter().all(|t| t.stable),
        trials: out,
    })
}

/// Generates the sub-object of `v` spanned by `seeds` and checks it.
pub fn run_trial(
    v: &ConsistentSequence,
    seeds: Vec<(usize, SparseVec)>,
    dec: &Decomposer,
) -> Result<NoetherianTrial, Error> {
    let generated = span(v, &seeds)?;
    let verdict = is_uniformly_stable(&generated.sequence, None, RankMode::Exact, dec)?;
    Ok(NoetherianTrial {
        dims: generated.dims(),
        generation_degree: generated.generation_degree,
        stable: verdict.stable,
        onset: verdict.onset,
        table: verdict.table,
        seeds,
    })
}
