//! On-disk formats: versioned JSON for sequences and reports, CSV for
//! multiplicity tables.
//!
//! A scalar is stored as `[numerator, denominator]`, each a list of rational
//! coefficient strings from degree 0 upward. Since scalars are kept in
//! reduced form with a monic denominator, the encoding is canonical and a
//! write/read/write cycle reproduces the same bytes.

use std::path::Path;

use hstab_core::fi::{check_consistency, ConsistentSequence, MultiplicityTable};
use hstab_core::{ExactMatrix, ModulePresentation, Partition, Poly, Scalar};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const SCHEMA: &str = "hecke-stab/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarRepr(pub Vec<String>, pub Vec<String>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRepr {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, ScalarRepr)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleRepr {
    pub n: usize,
    pub dim: usize,
    pub gens: Vec<MatrixRepr>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceFile {
    pub schema: String,
    #[serde(rename = "type")]
    pub kind: String,
    pub label: String,
    pub n_max: usize,
    pub modules: Vec<ModuleRepr>,
    pub connectors: Vec<MatrixRepr>,
}

fn poly_repr(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn poly_parse(coeffs: &[String]) -> Result<Poly, CliError> {
    let parsed = coeffs
        .iter()
        .map(|c| {
            c.parse::<BigRational>()
                .map_err(|_| CliError::Input(format!("bad coefficient {c:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::from_coeffs(parsed))
}

pub fn scalar_repr(c: &Scalar) -> ScalarRepr {
    ScalarRepr(poly_repr(c.numer()), poly_repr(c.denom()))
}

/// Parses and checks that the stored form is already reduced, so that
/// reading never silently changes a file's meaning or its bytes.
pub fn scalar_parse(r: &ScalarRepr) -> Result<Scalar, CliError> {
    let c = Scalar::new(poly_parse(&r.0)?, poly_parse(&r.1)?)?;
    if scalar_repr(&c) != *r {
        return Err(CliError::Input(format!("scalar {r:?} is not in reduced form")));
    }
    Ok(c)
}

pub fn matrix_repr(m: &ExactMatrix) -> MatrixRepr {
    MatrixRepr {
        rows: m.nrows(),
        cols: m.ncols(),
        entries: m.triplets().iter().map(|(i, j, c)| (*i, *j, scalar_repr(c))).collect(),
    }
}

pub fn matrix_parse(r: &MatrixRepr) -> Result<ExactMatrix, CliError> {
    let entries = r
        .entries
        .iter()
        .map(|(i, j, c)| Ok((*i, *j, scalar_parse(c)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let m = ExactMatrix::from_triplets(r.rows, r.cols, entries)?;
    if matrix_repr(&m) != *r {
        return Err(CliError::Input(
            "matrix entries are repeated, zero or out of order".into(),
        ));
    }
    Ok(m)
}

pub fn sequence_repr(v: &ConsistentSequence) -> SequenceFile {
    SequenceFile {
        schema: SCHEMA.into(),
        kind: "sequence".into(),
        label: v.label().into(),
        n_max: v.n_max(),
        modules: v
            .modules()
            .iter()
            .map(|m| ModuleRepr {
                n: m.rank(),
                dim: m.dim(),
                gens: m.gens().iter().map(matrix_repr).collect(),
            })
            .collect(),
        connectors: v.connectors().iter().map(matrix_repr).collect(),
    }
}

/// Rebuilds a sequence, re-checking the Hecke relations in every degree and
/// the intertwining property of every connector.
pub fn sequence_parse(f: &SequenceFile) -> Result<ConsistentSequence, CliError> {
    if f.schema != SCHEMA {
        return Err(CliError::Input(format!("unsupported schema {:?}", f.schema)));
    }
    if f.kind != "sequence" {
        return Err(CliError::Input(format!("expected a sequence file, found {:?}", f.kind)));
    }
    if f.modules.len() != f.n_max + 1 {
        return Err(CliError::Input(format!(
            "{} modules for n_max = {}",
            f.modules.len(),
            f.n_max
        )));
    }
    let modules = f
        .modules
        .iter()
        .map(|m| {
            let gens = m.gens.iter().map(matrix_parse).collect::<Result<Vec<_>, _>>()?;
            Ok(ModulePresentation::new(m.n, m.dim, gens, None)?)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let connectors = f.connectors.iter().map(matrix_parse).collect::<Result<Vec<_>, _>>()?;
    let v = ConsistentSequence::new(f.label.clone(), modules, connectors)?;
    let verdict = check_consistency(&v);
    if !verdict.passed() {
        return Err(CliError::Input(format!(
            "connectors fail to intertwine at (n, generator) {:?}",
            verdict.violations
        )));
    }
    Ok(v)
}

pub fn sequence_to_string(v: &ConsistentSequence) -> String {
    let mut s = serde_json::to_string_pretty(&sequence_repr(v)).expect("sequence serializes");
    s.push('\n');
    s
}

pub fn sequence_from_str(s: &str) -> Result<ConsistentSequence, CliError> {
    let f: SequenceFile =
        serde_json::from_str(s).map_err(|e| CliError::Input(format!("malformed sequence file: {e}")))?;
    sequence_parse(&f)
}

pub fn read_sequence(path: &Path) -> Result<ConsistentSequence, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    sequence_from_str(&text)
}

/// Row label of a multiplicity table: the unpadded partition, `∅` when empty.
pub fn partition_label(p: &Partition) -> String {
    if p.is_empty() {
        "∅".into()
    } else {
        p.to_string()
    }
}

/// CSV with header `lambda,n=0,...,n=N` and one row per unpadded label.
pub fn multiplicity_csv(table: &MultiplicityTable) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = std::iter::once("lambda".to_string()).chain((0..=table.n_max).map(|n| format!("n={n}")));
    w.write_record(header).expect("in-memory write");
    for (lambda, counts) in &table.rows {
        let row = std::iter::once(partition_label(lambda)).chain(counts.iter().map(|c| c.to_string()));
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}
