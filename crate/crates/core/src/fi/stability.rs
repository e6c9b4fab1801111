use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::arith::{rank_with, EchelonBasis, ExactMatrix, Quotient, RankMode};
use crate::hecke::ModulePresentation;
use crate::partitions::{unpad, Partition};
use crate::specht::{coinvariant_relations, CoinvariantMode, Decomposer, Decomposition};
use crate::Error;

use super::sequence::ConsistentSequence;
use super::span::close_under;

/// `Phi_a(V)_n = V_{a+n} / Q_n` for `0 <= n <= n_max - a`, with the maps
/// `T: [v] -> [phi_{a+n}(v)]`.
#[derive(Clone, Debug)]
pub struct PhiA {
    pub a: usize,
    pub quotients: Vec<Quotient>,
    /// `H_a`-action on each quotient.
    pub modules: Vec<ModulePresentation>,
    pub maps: Vec<ExactMatrix>,
    /// Whether each connector carries `Q_n` into `Q_{n+1}`.
    pub well_defined: bool,
}

impl PhiA {
    pub fn dims(&self) -> Vec<usize> {
        self.quotients.iter().map(Quotient::dim).collect()
    }
}

pub fn phi_a(v: &ConsistentSequence, a: usize, mode: CoinvariantMode) -> Result<PhiA, Error> {
    if a > v.n_max() {
        return Err(Error::Range(format!("a = {a} exceeds n_max = {}", v.n_max())));
    }
    let mut quotients = Vec::new();
    let mut modules = Vec::new();
    for n in 0..=v.n_max() - a {
        let module = v.module(a + n);
        let quotient = Quotient::from_vectors(module.dim(), &coinvariant_relations(module, a, mode));
        let gens = (1..a)
            .map(|i| {
                let g = module.gen(i);
                if quotient.maps_subspace_into(g, &quotient) {
                    Ok(quotient.induced_into(g, &quotient))
                } else {
                    Err(Error::NotInvariant)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        modules.push(ModulePresentation::unchecked(a, quotient.dim(), gens, None)?);
        quotients.push(quotient);
    }
    let mut maps = Vec::new();
    let mut well_defined = true;
    for n in 0..quotients.len().saturating_sub(1) {
        let phi = v.connector(a + n);
        well_defined &= quotients[n].maps_subspace_into(phi, &quotients[n + 1]);
        maps.push(quotients[n].induced_into(phi, &quotients[n + 1]));
    }
    Ok(PhiA {
        a,
        quotients,
        modules,
        maps,
        well_defined,
    })
}

/// Injectivity and surjectivity of one map `T: Phi_a(V)_n -> Phi_a(V)_{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapVerdict {
    pub a: usize,
    pub n: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub injective: bool,
    pub surjective: bool,
}

/// Observed degrees of `V`, all qualified by the probe window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub a_max: usize,
    pub n_max: usize,
    pub verdicts: Vec<MapVerdict>,
    /// `None` when the property still fails at the last probed map for
    /// some `a`.
    pub injective_degree: Option<usize>,
    pub surjective_degree: Option<usize>,
    pub stability_degree: Option<usize>,
    /// `(a, n, property)` where a property held at `n` but failed later.
    pub monotonicity_violations: Vec<(usize, usize, &'static str)>,
    pub well_defined: bool,
}

type MapProperty = fn(&MapVerdict) -> bool;

/// Probes `T` for every `a <= a_max` and every `n` with `a + n < n_max`.
pub fn degrees(v: &ConsistentSequence, a_max: usize, mode: RankMode) -> Result<DegreeReport, Error> {
    if v.n_max() == 0 {
        return Ok(DegreeReport {
            a_max: 0,
            n_max: 0,
            verdicts: Vec::new(),
            injective_degree: Some(0),
            surjective_degree: Some(0),
            stability_degree: Some(0),
            monotonicity_violations: Vec::new(),
            well_defined: true,
        });
    }
    if a_max >= v.n_max() {
        return Err(Error::Range(format!(
            "a_max = {a_max} leaves no map to probe below n_max = {}",
            v.n_max()
        )));
    }
    let mut verdicts = Vec::new();
    let mut well_defined = true;
    for a in 0..=a_max {
        let phi = phi_a(v, a, CoinvariantMode::Twisted)?;
        well_defined &= phi.well_defined;
        for (n, t) in phi.maps.iter().enumerate() {
            let r = rank_with(t, mode)?;
            verdicts.push(MapVerdict {
                a,
                n,
                source_dim: t.ncols(),
                target_dim: t.nrows(),
                rank: r,
                injective: r == t.ncols(),
                surjective: r == t.nrows(),
            });
        }
    }
    let windows: Vec<usize> = (0..=a_max).map(|a| v.n_max() - a - 1).collect();
    let horizon = *windows.iter().min().expect("a_max >= 0");
    let observed = |prop: fn(&MapVerdict) -> bool| -> Option<usize> {
        let s = verdicts.iter().filter(|m| !prop(m)).map(|m| m.n + 1).max().unwrap_or(0);
        (s <= horizon).then_some(s)
    };
    let injective_degree = observed(|m| m.injective);
    let surjective_degree = observed(|m| m.surjective);
    let stability_degree = observed(|m| m.injective && m.surjective);
    let mut monotonicity_violations = Vec::new();
    let props: [(&'static str, MapProperty); 2] = [("injective", |m| m.injective), ("surjective", |m| m.surjective)];
    for a in 0..=a_max {
        let row: Vec<&MapVerdict> = verdicts.iter().filter(|m| m.a == a).collect();
        for (name, prop) in props {
            // maps between zero spaces satisfy both properties vacuously
            if let Some(first) = row.iter().position(|m| prop(m) && m.source_dim + m.target_dim > 0) {
                if let Some(bad) = row[first..].iter().find(|m| !prop(m)) {
                    monotonicity_violations.push((a, bad.n, name));
                }
            }
        }
    }
    Ok(DegreeReport {
        a_max,
        n_max: v.n_max(),
        verdicts,
        injective_degree,
        surjective_degree,
        stability_degree,
        monotonicity_violations,
        well_defined,
    })
}

/// Decompositions of every `V_n`.
pub fn decompositions(v: &ConsistentSequence, dec: &Decomposer) -> Result<Vec<Decomposition>, Error> {
    v.modules().iter().map(|m| dec.decompose(m)).collect()
}

/// Largest `|lambda|` over the stable labels `lambda` of all constituents
/// `S^{lambda[n]}`; zero for the zero sequence.
pub fn weight(v: &ConsistentSequence, dec: &Decomposer) -> Result<usize, Error> {
    Ok(decompositions(v, dec)?
        .iter()
        .flat_map(|d| d.keys())
        .map(|mu| unpad(mu).size())
        .max()
        .unwrap_or(0))
}

/// `c_{lambda,n}`: multiplicity of `S^{lambda[n]}` in `V_n`, rows keyed by the
/// stable label `lambda`.
///
/// Every partition `mu` of `n` is `lambda[n]` for `lambda = unpad(mu)`, so
/// every constituent has a stable label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub n_max: usize,
    pub rows: BTreeMap<Partition, Vec<u64>>,
}

impl MultiplicityTable {
    pub fn get(&self, lambda: &Partition, n: usize) -> u64 {
        self.rows.get(lambda).map_or(0, |r| r[n])
    }

    /// Whether `c_{lambda,n} = c_{lambda,n+1}` for every `lambda`.
    pub fn constant_between(&self, n: usize) -> bool {
        self.rows.values().all(|r| r[n] == r[n + 1])
    }
}

pub fn multiplicity_table(v: &ConsistentSequence, dec: &Decomposer) -> Result<MultiplicityTable, Error> {
    let mut rows: BTreeMap<Partition, Vec<u64>> = BTreeMap::new();
    for (n, d) in decompositions(v, dec)?.into_iter().enumerate() {
        for (mu, c) in d {
            rows.entry(unpad(&mu)).or_insert_with(|| alloc::vec![0; v.n_max() + 1])[n] = c;
        }
    }
    Ok(MultiplicityTable { n_max: v.n_max(), rows })
}

/// Per-transition clauses of uniform representation stability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionCheck {
    pub n: usize,
    pub injective: bool,
    pub generates: bool,
    pub multiplicities_equal: bool,
}

impl TransitionCheck {
    pub fn holds(&self) -> bool {
        self.injective && self.generates && self.multiplicities_equal
    }
}

/// Verdict of [`is_uniformly_stable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityVerdict {
    pub transitions: Vec<TransitionCheck>,
    /// Least `N` such that every transition `n -> n+1` with `N <= n < n_max`
    /// satisfies all three clauses.
    pub onset: usize,
    /// `onset < n_max`: at least one transition confirms stability.
    pub stable: bool,
    pub table: MultiplicityTable,
    pub weight: usize,
    /// Present when a probe range was requested.
    pub degrees: Option<DegreeReport>,
    /// `s + m` from the observed stability degree and the weight.
    pub predicted_bound: Option<usize>,
    pub within_bound: Option<bool>,
}

/// Checks injectivity of `phi_n`, generation of `V_{n+1}` by its image, and
/// constancy of `c_{lambda,n}`, and compares the onset with `s + m`.
pub fn is_uniformly_stable(
    v: &ConsistentSequence,
    a_max: Option<usize>,
    mode: RankMode,
    dec: &Decomposer,
) -> Result<StabilityVerdict, Error> {
    let table = multiplicity_table(v, dec)?;
    let mut transitions = Vec::with_capacity(v.n_max());
    for n in 0..v.n_max() {
        let phi = v.connector(n);
        let injective = rank_with(phi, mode)? == phi.ncols();
        let mut span = EchelonBasis::new(v.dim(n + 1));
        close_under(v.module(n + 1), &mut span, phi.columns().iter().cloned());
        transitions.push(TransitionCheck {
            n,
            injective,
            generates: span.rank() == v.dim(n + 1),
            multiplicities_equal: table.constant_between(n),
        });
    }
    let onset = transitions
        .iter()
        .filter(|t| !t.holds())
        .map(|t| t.n + 1)
        .max()
        .unwrap_or(0);
    let weight = weight(v, dec)?;
    let degrees = a_max
        .map(|a| degrees(v, a.min(v.n_max().saturating_sub(1)), mode))
        .transpose()?;
    let predicted_bound = degrees.as_ref().and_then(|d| d.stability_degree).map(|s| s + weight);
    Ok(StabilityVerdict {
        stable: onset < v.n_max(),
        within_bound: predicted_bound.map(|b| onset <= b),
        onset,
        transitions,
        table,
        weight,
        degrees,
        predicted_bound,
    })
}
