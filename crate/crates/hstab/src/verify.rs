//! The acceptance suite: twelve exact checks at desk scale.
//!
//! Each check returns a verdict plus a short deterministic summary; wall
//! time is measured alongside but kept out of the serialized report so
//! identical configurations yield identical bytes.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use hstab_core::arith::RankMode;
use hstab_core::fi::{
    build_m, build_m_specht, degrees, generation_degree, is_uniformly_stable, noetherian_experiment,
    shift_decompose_mm, unbounded_sequence, weight, GenerationDegree,
};
use hstab_core::hecke::{induce_pair, one_dim_rep, regular_representation, OneDimKind};
use hstab_core::partitions::{
    pad, partitions_of, pieri_add, stable_multiplicity_oracle, syt_count, syt_enumerate, unpad, Partition,
};
use hstab_core::specht::{coinvariants, specht_module, CoinvariantMode, Decomposer};
use hstab_core::symgroup::double_coset_stabilization;
use hstab_core::Error;
use serde::Serialize;

use crate::format::SCHEMA;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    /// Truncation for the degree, weight, shift, coset and probe checks.
    pub n_max: usize,
    /// Truncation for the stability pipeline.
    pub stable_n_max: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 6,
            stable_n_max: 7,
            trials: 20,
            seed: 42,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    #[serde(rename = "type")]
    pub kind: &'static str,
    pub config: VerifyConfig,
    pub passed: bool,
    pub criteria: Vec<CriterionResult>,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

type Check = fn(&VerifyConfig, &Decomposer) -> Result<(bool, String), Error>;

pub const CRITERIA: [(&str, Check); 11] = [
    ("regular representation relations", relation_suite),
    ("seminormal Specht modules", seminormal_suite),
    ("decomposition oracle", decomposition_oracle),
    ("coinvariant quotients", coinvariant_quotients),
    ("injective, surjective and stability degrees", degree_checks),
    ("weight", weights),
    ("uniform stability pipeline", stability_pipeline),
    ("shift decomposition", shift_decomposition),
    ("double coset stabilization", double_cosets),
    ("noetherian sampling", noetherian_evidence),
    ("non-finitely-generated probe", converse_probe),
];

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn relation_suite(_: &VerifyConfig, _: &Decomposer) -> Result<(bool, String), Error> {
    let mut bad = Vec::new();
    for n in 0..=5 {
        let r = regular_representation(n)?;
        if r.dim() != factorial(n) || !r.relation_violations().is_empty() {
            bad.push(n);
        }
    }
    Ok((bad.is_empty(), format!("n = 0..5, failing ranks {bad:?}")))
}

fn seminormal_suite(_: &VerifyConfig, _: &Decomposer) -> Result<(bool, String), Error> {
    let mut modules = 0;
    let mut bad = Vec::new();
    for n in 0..=6 {
        for lambda in partitions_of(n) {
            let s = specht_module(&lambda)?;
            modules += 1;
            if s.presentation.dim() as u64 != syt_count(&lambda) || !s.presentation.relation_violations().is_empty() {
                bad.push(lambda.to_string());
            }
        }
    }
    let mut shapes = 0;
    for n in 0..=7 {
        for lambda in partitions_of(n) {
            shapes += 1;
            if syt_enumerate(&lambda)?.len() as u64 != syt_count(&lambda) {
                bad.push(format!("hook {lambda}"));
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("{modules} modules, {shapes} hook-length shapes, failures {bad:?}"),
    ))
}

fn decomposition_oracle(_: &VerifyConfig, dec: &Decomposer) -> Result<(bool, String), Error> {
    let mut bad = Vec::new();
    for n in 1..=4 {
        let expected: BTreeMap<Partition, u64> = partitions_of(n)
            .into_iter()
            .map(|l| {
                let d = syt_count(&l);
                (l, d)
            })
            .collect();
        if dec.decompose(&regular_representation(n)?)? != expected {
            bad.push(format!("regular {n}"));
        }
    }
    let mut pairs = 0;
    for m in 0..=4 {
        for lambda in partitions_of(m) {
            let s = specht_module(&lambda)?;
            for k in 0..=6 - m {
                let ind = induce_pair(&s.presentation, &one_dim_rep(k, OneDimKind::Index))?;
                let expected: BTreeMap<Partition, u64> = pieri_add(&lambda, k).into_iter().map(|mu| (mu, 1)).collect();
                pairs += 1;
                if dec.decompose(&ind.presentation)? != expected {
                    bad.push(format!("({lambda}) + {k}"));
                }
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("4 regular modules, {pairs} induced pairs, failures {bad:?}"),
    ))
}

fn coinvariant_quotients(_: &VerifyConfig, dec: &Decomposer) -> Result<(bool, String), Error> {
    let mut bad = Vec::new();
    let mut quotients = 0;
    for size in 0..=3 {
        for lambda in partitions_of(size) {
            let mut stable_runs: BTreeMap<usize, Vec<BTreeMap<Partition, u64>>> = BTreeMap::new();
            for n in 0..=6 {
                let Ok(big) = pad(&lambda, n) else { continue };
                let s = specht_module(&big)?;
                for a in 0..=n {
                    let c = coinvariants(&s.presentation, a, CoinvariantMode::Twisted)?;
                    quotients += 1;
                    if (c.dim() == 0) != (a < size) {
                        bad.push(format!("vanishing ({lambda}) n={n} a={a}"));
                    }
                    let d = dec.decompose(&c.presentation)?;
                    if a == size && d != BTreeMap::from([(lambda.clone(), 1)]) {
                        bad.push(format!("bottom ({lambda}) n={n}"));
                    }
                    if n >= a + size {
                        stable_runs.entry(a).or_default().push(d);
                    }
                }
            }
            for (a, runs) in stable_runs {
                if runs.windows(2).any(|w| w[0] != w[1]) {
                    bad.push(format!("n-dependence ({lambda}) a={a}"));
                }
            }
        }
    }
    Ok((bad.is_empty(), format!("{quotients} quotients, failures {bad:?}")))
}

fn probe_shapes() -> Vec<Partition> {
    ["1", "2", "1,1", "2,1", "3"]
        .iter()
        .map(|s| s.parse().expect("valid shape"))
        .collect()
}

fn degree_checks(cfg: &VerifyConfig, _: &Decomposer) -> Result<(bool, String), Error> {
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for m in 0..=3 {
        let d = degrees(&build_m(m, cfg.n_max)?.sequence, 2, RankMode::Exact)?;
        seen.push(format!("M({m}): {:?}/{:?}", d.injective_degree, d.surjective_degree));
        if d.injective_degree != Some(0) || d.surjective_degree != Some(m) || !d.well_defined {
            bad.push(format!("M({m})"));
        }
    }
    for lambda in probe_shapes() {
        let d = degrees(&build_m_specht(&lambda, cfg.n_max)?.sequence, 2, RankMode::Exact)?;
        seen.push(format!("M(S^({lambda})): {:?}", d.stability_degree));
        if d.stability_degree != Some(lambda.first()) || !d.well_defined {
            bad.push(format!("M(S^({lambda}))"));
        }
    }
    Ok((bad.is_empty(), format!("{}; failures {bad:?}", seen.join(", "))))
}

fn weights(cfg: &VerifyConfig, dec: &Decomposer) -> Result<(bool, String), Error> {
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for lambda in probe_shapes() {
        let w = weight(&build_m_specht(&lambda, cfg.n_max)?.sequence, dec)?;
        seen.push(format!("({lambda}): {w}"));
        if w != lambda.size() {
            bad.push(lambda.to_string());
        }
    }
    Ok((bad.is_empty(), format!("{}; failures {bad:?}", seen.join(", "))))
}

fn stability_pipeline(cfg: &VerifyConfig, dec: &Decomposer) -> Result<(bool, String), Error> {
    let n_max = cfg.stable_n_max;
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for lambda in probe_shapes() {
        let v = build_m_specht(&lambda, n_max)?.sequence;
        let verdict = is_uniformly_stable(&v, Some(2.min(n_max.saturating_sub(1))), RankMode::Exact, dec)?;
        let bound = lambda.first() + lambda.size();
        seen.push(format!("({lambda}): onset {} bound {bound}", verdict.onset));
        if !verdict.stable || verdict.onset > bound {
            bad.push(format!("verdict ({lambda})"));
        }
        for n in 0..=n_max {
            let expected: BTreeMap<Partition, u64> = if n < lambda.size() {
                BTreeMap::new()
            } else {
                stable_multiplicity_oracle(&lambda, n)?
                    .into_iter()
                    .map(|(mu, c)| (unpad(&mu), c as u64))
                    .collect()
            };
            let observed: BTreeMap<Partition, u64> = verdict
                .table
                .rows
                .iter()
                .filter(|(_, counts)| counts[n] > 0)
                .map(|(l, counts)| (l.clone(), counts[n]))
                .collect();
            if observed != expected {
                bad.push(format!("table ({lambda}) n={n}"));
            }
        }
    }
    Ok((
        bad.is_empty(),
        format!("n_max {n_max}; {}; failures {bad:?}", seen.join(", ")),
    ))
}

fn shift_decomposition(cfg: &VerifyConfig, _: &Decomposer) -> Result<(bool, String), Error> {
    let mut bad = Vec::new();
    for m in 0..=3 {
        for a in 0..=2 {
            let r = shift_decompose_mm(m, a, cfg.n_max)?;
            if !r.passed() {
                bad.push(format!("m={m} a={a}"));
            }
        }
    }
    Ok((bad.is_empty(), format!("m = 0..3, a = 0..2, failures {bad:?}")))
}

fn double_cosets(cfg: &VerifyConfig, _: &Decomposer) -> Result<(bool, String), Error> {
    let mut bad = Vec::new();
    for a in 0..=2 {
        for m in 0..=3 {
            let r = double_coset_stabilization(a, m, cfg.n_max)?;
            if !(r.inclusions_hold && r.counts_match_tableaux && r.stabilizes_by_m) {
                bad.push(format!("a={a} m={m}"));
            }
        }
    }
    Ok((bad.is_empty(), format!("a = 0..2, m = 0..3, failures {bad:?}")))
}

fn noetherian_evidence(cfg: &VerifyConfig, _: &Decomposer) -> Result<(bool, String), Error> {
    let r = noetherian_experiment(2, cfg.trials, cfg.seed, cfg.n_max)?;
    Ok((
        r.all_finitely_generated && r.all_stable,
        format!(
            "{} trials, finitely generated {}, stable {}, max generation degree {:?}",
            r.trials.len(),
            r.all_finitely_generated,
            r.all_stable,
            r.max_generation_degree
        ),
    ))
}

fn converse_probe(cfg: &VerifyConfig, dec: &Decomposer) -> Result<(bool, String), Error> {
    let u = unbounded_sequence(cfg.n_max)?.sequence;
    let verdict = is_uniformly_stable(&u, None, RankMode::Exact, dec)?;
    let last_differs = verdict.transitions.last().is_some_and(|t| !t.multiplicities_equal);
    let g = generation_degree(&u);
    Ok((
        !verdict.stable && last_differs && g == GenerationDegree::ExceedsTruncation,
        format!(
            "stable {}, multiplicities still changing at n_max {last_differs}, generation {g:?}",
            verdict.stable
        ),
    ))
}

/// Runs checks 1 to 11 in order. Errors count as failures.
pub fn run_checks(cfg: &VerifyConfig, mut progress: impl FnMut(&CriterionResult)) -> Vec<CriterionResult> {
    let dec = Decomposer::new();
    CRITERIA
        .iter()
        .enumerate()
        .map(|(i, (name, check))| {
            let start = Instant::now();
            let (passed, detail) = check(cfg, &dec).unwrap_or_else(|e| (false, format!("error: {e}")));
            let r = CriterionResult {
                id: i + 1,
                name,
                passed,
                detail,
                elapsed: start.elapsed(),
            };
            progress(&r);
            r
        })
        .collect()
}

fn checks_json(results: &[CriterionResult]) -> String {
    serde_json::to_string(results).expect("results serialize")
}

/// Checks 1 to 11, then a second full pass whose serialized results must
/// match the first byte for byte.
pub fn run_all(cfg: &VerifyConfig, mut progress: impl FnMut(&CriterionResult)) -> VerifyReport {
    let mut criteria = run_checks(cfg, &mut progress);
    let start = Instant::now();
    let again = run_checks(cfg, |_| {});
    let (a, b) = (checks_json(&criteria), checks_json(&again));
    let det = CriterionResult {
        id: 12,
        name: "determinism",
        passed: a == b,
        detail: format!("two passes, {} and {} bytes, identical {}", a.len(), b.len(), a == b),
        elapsed: start.elapsed(),
    };
    progress(&det);
    criteria.push(det);
    VerifyReport {
        schema: SCHEMA,
        kind: "verify",
        config: cfg.clone(),
        passed: criteria.iter().all(|c| c.passed),
        criteria,
    }
}
