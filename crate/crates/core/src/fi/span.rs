use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::arith::{EchelonBasis, SparseVec};
use crate::hecke::ModulePresentation;
use crate::Error;

use super::sequence::ConsistentSequence;

/// Least degree from which a sub-object is generated, qualified by the
/// truncation: needing generators in the top degree `n_max > 0` means the
/// data cannot bound the degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenerationDegree {
    Degree(usize),
    ExceedsTruncation,
}

impl GenerationDegree {
    pub fn degree(self) -> Option<usize> {
        match self {
            GenerationDegree::Degree(d) => Some(d),
            GenerationDegree::ExceedsTruncation => None,
        }
    }
}

/// Adds `start` to `basis` and closes under the generator action.
pub fn close_under(module: &ModulePresentation, basis: &mut EchelonBasis, start: impl IntoIterator<Item = SparseVec>) {
    let mut queue: VecDeque<SparseVec> = VecDeque::new();
    for v in start {
        if basis.insert(v.clone()) {
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        if basis.is_full() {
            break;
        }
        for g in module.gens() {
            let w = g.mul_vec(&v);
            if basis.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
}

/// The subspaces `span(S)_n`: the `H_n`-submodule generated by the seeds of
/// degree `n` and the image of `span(S)_{n-1}`.
pub fn span_spaces(v: &ConsistentSequence, seeds: &[(usize, SparseVec)]) -> Result<Vec<EchelonBasis>, Error> {
    if let Some((n, s)) = seeds
        .iter()
        .find(|(n, s)| *n > v.n_max() || s.max_index().is_some_and(|i| i >= v.dim(*n)))
    {
        return Err(Error::Range(alloc::format!(
            "seed of length {} does not live in degree {n}",
            s.max_index().map_or(0, |i| i + 1)
        )));
    }
    let mut spaces: Vec<EchelonBasis> = Vec::with_capacity(v.n_max() + 1);
    for n in 0..=v.n_max() {
        let mut basis = EchelonBasis::new(v.dim(n));
        let mut start: Vec<SparseVec> = Vec::new();
        if n > 0 {
            start.extend(spaces[n - 1].vectors().map(|b| v.connector(n - 1).mul_vec(b)));
        }
        start.extend(seeds.iter().filter(|(d, _)| *d == n).map(|(_, s)| s.clone()));
        close_under(v.module(n), &mut basis, start);
        spaces.push(basis);
    }
    Ok(spaces)
}

/// Result of [`span`].
#[derive(Clone, Debug)]
pub struct SpanResult {
    pub spaces: Vec<EchelonBasis>,
    pub sequence: ConsistentSequence,
    pub generation_degree: GenerationDegree,
}

impl SpanResult {
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(EchelonBasis::rank).collect()
    }
}

/// The subsequence generated by `seeds`, with its generation degree: the
/// least `d` such that the seeds of degree at most `d` already generate it.
pub fn span(v: &ConsistentSequence, seeds: &[(usize, SparseVec)]) -> Result<SpanResult, Error> {
    let spaces = span_spaces(v, seeds)?;
    let full: Vec<usize> = spaces.iter().map(EchelonBasis::rank).collect();
    let mut seed_degrees: Vec<usize> = seeds.iter().map(|(n, _)| *n).collect();
    seed_degrees.sort_unstable();
    seed_degrees.dedup();
    let mut degree = 0;
    for d in seed_degrees {
        let partial: Vec<(usize, SparseVec)> = seeds.iter().filter(|(n, _)| *n <= d).cloned().collect();
        let ranks: Vec<usize> = span_spaces(v, &partial)?.iter().map(EchelonBasis::rank).collect();
        if ranks == full {
            degree = d;
            break;
        }
    }
    let sequence = v.subsequence(&spaces)?;
    Ok(SpanResult {
        spaces,
        sequence,
        generation_degree: qualify(degree, v.n_max()),
    })
}

fn qualify(degree: usize, n_max: usize) -> GenerationDegree {
    if degree == n_max && n_max > 0 {
        GenerationDegree::ExceedsTruncation
    } else {
        GenerationDegree::Degree(degree)
    }
}

/// Least `d` such that the full bases of `V_0, ..., V_d` generate `V`.
pub fn generation_degree(v: &ConsistentSequence) -> GenerationDegree {
    let dims = v.dims();
    let image_ranks: Vec<usize> = (0..=v.n_max())
        .map(|n| {
            let mut basis = EchelonBasis::new(dims[n]);
            if n > 0 {
                close_under(v.module(n), &mut basis, v.connector(n - 1).columns().iter().cloned());
            }
            basis.rank()
        })
        .collect();
    // degree n needs a new generator iff the image of the full V_{n-1} does not generate V_n
    let last_needed = (0..=v.n_max()).filter(|&n| image_ranks[n] < dims[n]).max().unwrap_or(0);
    qualify(last_needed, v.n_max())
}
