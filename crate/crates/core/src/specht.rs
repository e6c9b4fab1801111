//! Irreducible `H_n`-modules in seminormal form, characters, decomposition
//! into irreducibles, and coinvariant quotients.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::cell::RefCell;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::arith::{quotient_structure, rank, solve, ExactMatrix, Quotient, Scalar, SparseVec};
use crate::hecke::{q_minus_one, ModulePresentation};
use crate::partitions::{partitions_of, pieri_add, syt_count, syt_enumerate_bounded, Partition, StandardTableau};
use crate::symgroup::{conjugacy_min_reps, Permutation};
use crate::Error;

/// Largest `|lambda|` accepted by [`specht_module`] and [`character_table`].
pub const SPECHT_BOUND: usize = 7;

/// `S^lambda` on the basis of standard tableaux.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpechtModule {
    pub lambda: Partition,
    pub presentation: ModulePresentation,
    pub basis: Vec<StandardTableau>,
}

/// Diagonal entry `(q-1) q^r / (q^r - 1)` for axial distance `r`.
fn diagonal(r: i64) -> Scalar {
    let qr = Scalar::q_pow(r);
    let den = &qr - &Scalar::one();
    (&q_minus_one() * &qr)
        .checked_div(&den)
        .expect("axial distance is nonzero")
}

pub fn specht_module(lambda: &Partition) -> Result<SpechtModule, Error> {
    specht_module_bounded(lambda, SPECHT_BOUND)
}

pub fn specht_module_bounded(lambda: &Partition, bound: usize) -> Result<SpechtModule, Error> {
    if lambda.size() > bound {
        return Err(Error::SizeBound {
            size: lambda.size(),
            bound,
        });
    }
    let n = lambda.size();
    let basis = syt_enumerate_bounded(lambda, bound)?;
    let index: BTreeMap<&StandardTableau, usize> = basis.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let q = Scalar::q();
    let minus_one = Scalar::from_int(-1);
    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let cols = basis
            .iter()
            .map(|t| {
                let r = t.content(i + 1).expect("entry present") - t.content(i).expect("entry present");
                match r {
                    1 => SparseVec::unit(index[t]).scale(&q),
                    -1 => SparseVec::unit(index[t]).scale(&minus_one),
                    _ => {
                        let a = diagonal(r);
                        let off = if r < 0 {
                            Scalar::one()
                        } else {
                            &(&a * &diagonal(-r)) + &q
                        };
                        let partner = index[&t.swapped(i)];
                        SparseVec::from_entries([(index[t], a), (partner, off)])
                    }
                }
            })
            .collect();
        gens.push(ExactMatrix::from_columns(basis.len(), cols)?);
    }
    let presentation = ModulePresentation::new(n, basis.len(), gens, Some(format!("S^({lambda})")))?;
    Ok(SpechtModule {
        lambda: lambda.clone(),
        presentation,
        basis,
    })
}

/// Trace of `T_w` on `V`, computed along the reduced word of `w`.
pub fn character(v: &ModulePresentation, w: &Permutation) -> Result<Scalar, Error> {
    if w.n() != v.rank() {
        return Err(Error::RankMismatch {
            left: v.rank(),
            right: w.n(),
        });
    }
    Ok(trace_along_word(v, &w.reduced_word()))
}

/// Trace of `T_{s_{w_1}} ... T_{s_{w_k}}` on `V` for any word.
pub fn trace_along_word(v: &ModulePresentation, word: &[usize]) -> Scalar {
    let mut tr = Scalar::zero();
    for j in 0..v.dim() {
        let image = v.apply_word(word, &SparseVec::unit(j));
        if let Some(c) = image.get(j) {
            tr += c;
        }
    }
    tr
}

/// Values `chi_lambda(T_{w_mu})`: rows are partitions in decreasing
/// lexicographic order, columns are cycle types in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub rows: Vec<Partition>,
    pub classes: Vec<(Partition, Permutation)>,
    pub values: ExactMatrix,
}

impl CharacterTable {
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Option<Scalar> {
        let r = self.rows.iter().position(|x| x == lambda)?;
        let c = self.classes.iter().position(|(x, _)| x == mu)?;
        Some(self.values.get(r, c))
    }

    /// Entries evaluated at `q = q0`, row by row.
    pub fn specialize(&self, q0: &BigRational) -> Result<Vec<Vec<BigRational>>, Error> {
        (0..self.values.nrows())
            .map(|r| {
                (0..self.values.ncols())
                    .map(|c| self.values.get(r, c).specialize(q0))
                    .collect()
            })
            .collect()
    }
}

pub fn character_table(n: usize) -> Result<CharacterTable, Error> {
    if n > SPECHT_BOUND {
        return Err(Error::SizeBound {
            size: n,
            bound: SPECHT_BOUND,
        });
    }
    let rows = partitions_of(n);
    let classes: Vec<(Partition, Permutation)> = conjugacy_min_reps(n).into_iter().collect();
    let mut values = ExactMatrix::zeros(rows.len(), classes.len());
    for (r, lambda) in rows.iter().enumerate() {
        let s = specht_module(lambda)?;
        for (c, (_, w)) in classes.iter().enumerate() {
            values.set(r, c, character(&s.presentation, w)?);
        }
    }
    if rank(&values) != rows.len() {
        return Err(Error::DegenerateCharacterTable);
    }
    Ok(CharacterTable {
        n,
        rows,
        classes,
        values,
    })
}

/// Multiplicities of irreducible constituents, zero entries omitted.
pub type Decomposition = BTreeMap<Partition, u64>;

/// Decomposes modules into irreducibles, caching one character table per rank.
///
/// The cache uses interior mutability and is not shared between threads;
/// give each thread its own `Decomposer`.
#[derive(Default)]
pub struct Decomposer {
    tables: RefCell<BTreeMap<usize, CharacterTable>>,
}

impl Decomposer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn table(&self, n: usize) -> Result<CharacterTable, Error> {
        if let Some(t) = self.tables.borrow().get(&n) {
            return Ok(t.clone());
        }
        let t = character_table(n)?;
        self.tables.borrow_mut().insert(n, t.clone());
        Ok(t)
    }

    pub fn decompose(&self, v: &ModulePresentation) -> Result<Decomposition, Error> {
        let n = v.rank();
        if v.dim() == 0 {
            return Ok(Decomposition::new());
        }
        let table = self.table(n)?;
        let chi: Vec<Scalar> = table
            .classes
            .iter()
            .map(|(_, w)| character(v, w))
            .collect::<Result<_, _>>()?;
        let system = table.values.transpose();
        let solution = solve(&system, &chi)?
            .ok_or_else(|| Error::NotAModule("character is not a combination of irreducibles".into()))?;
        let mut out = Decomposition::new();
        let mut total = 0u64;
        for (lambda, m) in table.rows.iter().zip(solution) {
            let value = m
                .as_rational()
                .filter(|r| r.is_integer() && !r.is_negative())
                .and_then(|r| r.to_integer().to_u64())
                .ok_or_else(|| Error::NotAModule(format!("multiplicity of ({lambda}) is {m}")))?;
            if value > 0 {
                total += value * syt_count(lambda);
                out.insert(lambda.clone(), value);
            }
        }
        if total != v.dim() as u64 {
            return Err(Error::NotAModule(format!(
                "constituents have total dimension {total}, module has {}",
                v.dim()
            )));
        }
        Ok(out)
    }
}

/// One-shot decomposition with a fresh cache.
pub fn decompose(v: &ModulePresentation) -> Result<Decomposition, Error> {
    Decomposer::new().decompose(v)
}

/// Which eigenvalue of `T_s` defines the coinvariant relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CoinvariantMode {
    /// Relations `(T_s - q) v`: the quotient is the index-isotypic part.
    #[default]
    Twisted,
    /// Relations `(T_s - 1) v`; at generic `q` this kills everything.
    Literal,
}

impl CoinvariantMode {
    fn eigenvalue(self) -> Scalar {
        match self {
            CoinvariantMode::Twisted => Scalar::q(),
            CoinvariantMode::Literal => Scalar::one(),
        }
    }
}

/// `V / Q` where `Q` is spanned by the relations of the tail generators.
#[derive(Clone, Debug)]
pub struct Coinvariants {
    /// Retained action of `T_{s_1}, ..., T_{s_{a-1}}`.
    pub presentation: ModulePresentation,
    pub quotient: Quotient,
    pub projection: ExactMatrix,
}

impl Coinvariants {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }
}

/// The span of `(T_{s_i} - c) e_j` for the tail generators `a+1 <= i < rank`.
pub fn coinvariant_relations(v: &ModulePresentation, a: usize, mode: CoinvariantMode) -> Vec<SparseVec> {
    let c = mode.eigenvalue();
    let mut out = Vec::new();
    for i in a + 1..v.rank() {
        let g = v.gen(i);
        for j in 0..v.dim() {
            let mut col = g.column(j).clone();
            col.add_at(j, &-&c);
            if !col.is_zero() {
                out.push(col);
            }
        }
    }
    out
}

/// Quotient of a module over `H_{a+n}` by the relations of the last `n`
/// letters, as a module over `H_a`.
pub fn coinvariants(v: &ModulePresentation, a: usize, mode: CoinvariantMode) -> Result<Coinvariants, Error> {
    if a > v.rank() {
        return Err(Error::Range(format!("a = {a} exceeds rank {}", v.rank())));
    }
    let relations = coinvariant_relations(v, a, mode);
    let kept: Vec<ExactMatrix> = (1..a).map(|i| v.gen(i).clone()).collect();
    let qs = quotient_structure(v.dim(), &relations, &kept)?;
    let presentation = ModulePresentation::new(
        a,
        qs.quotient.dim(),
        qs.induced_maps,
        v.label().map(|l| format!("coinv_{a}({l})")),
    )?;
    Ok(Coinvariants {
        presentation,
        quotient: qs.quotient,
        projection: qs.projection,
    })
}

/// Outcome of comparing restriction-then-coinvariants of `S^lambda` with
/// the horizontal-strip prediction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingReport {
    pub lambda: Partition,
    pub m: usize,
    pub observed: Decomposition,
    pub expected: Decomposition,
    pub matches: bool,
}

pub fn branching_check(lambda: &Partition, m: usize) -> Result<BranchingReport, Error> {
    let n = lambda.size();
    if m > n {
        return Err(Error::Range(format!("m = {m} exceeds |lambda| = {n}")));
    }
    let s = specht_module(lambda)?;
    let quotient = coinvariants(&s.presentation, n - m, CoinvariantMode::Twisted)?;
    let observed = decompose(&quotient.presentation)?;
    let expected: Decomposition = partitions_of(n - m)
        .into_iter()
        .filter(|mu| pieri_add(mu, m).contains(lambda))
        .map(|mu| (mu, 1))
        .collect();
    Ok(BranchingReport {
        lambda: lambda.clone(),
        m,
        matches: observed == expected,
        observed,
        expected,
    })
}
