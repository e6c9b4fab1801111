//! The Iwahori-Hecke algebra `H_n` in the `T_w` basis, its finite-dimensional
//! modules given by generator matrices, and parabolic induction.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;

use crate::arith::{ExactMatrix, Scalar, SparseVec};
use crate::partitions::Composition;
use crate::symgroup::{coset_min_reps, Permutation, YoungSubgroup};
use crate::Error;

/// Largest rank accepted by [`regular_representation`].
pub const REGULAR_BOUND: usize = 6;

/// `q - 1`.
pub(crate) fn q_minus_one() -> Scalar {
    &Scalar::q() - &Scalar::one()
}

/// Label of a basis element by its smallest reduced word: `T_e`, `T_1`, `T_1,2`.
pub fn basis_label(w: &Permutation) -> String {
    let word = w.reduced_word();
    if word.is_empty() {
        return String::from("T_e");
    }
    let parts: Vec<String> = word.iter().map(|i| format!("{i}")).collect();
    format!("T_{}", parts.join(","))
}

/// A finitely supported combination of basis elements `T_w`, `w` in `S_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    coeffs: BTreeMap<Permutation, Scalar>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    pub fn basis(w: Permutation) -> Self {
        let mut coeffs = BTreeMap::new();
        let n = w.n();
        coeffs.insert(w, Scalar::one());
        HeckeElement { n, coeffs }
    }

    /// `T_{s_i}`.
    pub fn generator(n: usize, i: usize) -> Self {
        Self::basis(Permutation::simple(n, i))
    }

    /// `T_{s_{w_1}} T_{s_{w_2}} ... T_{s_{w_k}}` for an arbitrary word.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self, Error> {
        if let Some(&bad) = word.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::Range(format!("generator s_{bad} not in S_{n}")));
        }
        let mut x = Self::one(n);
        for &i in word.iter().rev() {
            x = x.mul_generator_left(i);
        }
        Ok(x)
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, Scalar)>) -> Result<Self, Error> {
        let mut x = Self::zero(n);
        for (w, c) in terms {
            if w.n() != n {
                return Err(Error::RankMismatch { left: n, right: w.n() });
            }
            x.add_term(w, &c);
        }
        Ok(x)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, w: &Permutation) -> Scalar {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, w: Permutation, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(w).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &HeckeElement) -> Result<HeckeElement, Error> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> HeckeElement {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        HeckeElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    fn check_rank(&self, other: &HeckeElement) -> Result<(), Error> {
        if self.n != other.n {
            return Err(Error::RankMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// `T_{s_i} * self`.
    pub fn mul_generator_left(&self, i: usize) -> HeckeElement {
        let mut out = Self::zero(self.n);
        let qm1 = q_minus_one();
        let q = Scalar::q();
        for (w, c) in &self.coeffs {
            let sw = w.mul_simple_left(i);
            if w.has_left_descent(i) {
                out.add_term(sw, &(c * &q));
                out.add_term(w.clone(), &(c * &qm1));
            } else {
                out.add_term(sw, c);
            }
        }
        out
    }

    /// The product `self * other`, folding each `T_u` of `self` over a
    /// reduced word of `u`.
    pub fn mult(&self, other: &HeckeElement) -> Result<HeckeElement, Error> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.n);
        for (u, c) in &self.coeffs {
            let mut part = other.clone();
            for &i in u.reduced_word().iter().rev() {
                part = part.mul_generator_left(i);
            }
            for (w, x) in part.coeffs {
                out.add_term(w, &(&x * c));
            }
        }
        Ok(out)
    }

    /// The embedding `H_n -> H_{n+1}` with `T_{s_i} -> T_{s_i}`.
    pub fn tau(&self) -> HeckeElement {
        HeckeElement {
            n: self.n + 1,
            coeffs: self
                .coeffs
                .iter()
                .map(|(w, c)| (w.embed(self.n + 1), c.clone()))
                .collect(),
        }
    }

    /// Coefficients evaluated at `q = q0`.
    pub fn specialize(&self, q0: &BigRational) -> Result<BTreeMap<Permutation, BigRational>, Error> {
        let mut out = BTreeMap::new();
        for (w, c) in &self.coeffs {
            let v = c.specialize(q0)?;
            if v != BigRational::from_integer(0.into()) {
                out.insert(w.clone(), v);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{}", basis_label(w))?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{}[{self}]", self.n)
    }
}

/// A module over `H_n` given by the matrices of `T_{s_1}, ..., T_{s_{n-1}}`.
///
/// The constructor checks the quadratic, commutation and braid relations
/// exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModulePresentation {
    n: usize,
    dim: usize,
    gens: Vec<ExactMatrix>,
    label: Option<String>,
}

/// One-dimensional modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OneDimKind {
    /// Every `T_{s_i}` acts by `q`.
    Index,
    /// Every `T_{s_i}` acts by `-1`.
    Sign,
}

impl ModulePresentation {
    pub fn new(n: usize, dim: usize, gens: Vec<ExactMatrix>, label: Option<String>) -> Result<Self, Error> {
        let p = Self::unchecked(n, dim, gens, label)?;
        if let Some(v) = p.relation_violations().into_iter().next() {
            return Err(Error::Relation(v));
        }
        Ok(p)
    }

    /// Shape checks only; for constructions whose relations hold by design.
    pub(crate) fn unchecked(
        n: usize,
        dim: usize,
        gens: Vec<ExactMatrix>,
        label: Option<String>,
    ) -> Result<Self, Error> {
        let expected = n.saturating_sub(1);
        if gens.len() != expected {
            return Err(Error::Shape(format!(
                "H_{n} needs {expected} generator matrices, got {}",
                gens.len()
            )));
        }
        if let Some(g) = gens.iter().find(|g| g.nrows() != dim || g.ncols() != dim) {
            return Err(Error::Shape(format!(
                "generator is {}x{}, module has dim {dim}",
                g.nrows(),
                g.ncols()
            )));
        }
        Ok(ModulePresentation { n, dim, gens, label })
    }

    /// The zero module over `H_n`.
    pub fn zero(n: usize) -> Self {
        ModulePresentation {
            n,
            dim: 0,
            gens: (1..n).map(|_| ExactMatrix::zeros(0, 0)).collect(),
            label: Some(String::from("zero")),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix of `T_{s_i}`, `1 <= i < n`.
    pub fn gen(&self, i: usize) -> &ExactMatrix {
        &self.gens[i - 1]
    }

    pub fn gens(&self) -> &[ExactMatrix] {
        &self.gens
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Human-readable descriptions of every failed relation.
    pub fn relation_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let q = Scalar::q();
        let qm1 = q_minus_one();
        let id = ExactMatrix::identity(self.dim);
        let prod = |a: &ExactMatrix, b: &ExactMatrix| a.mul(b).expect("square of equal size");
        for (k, g) in self.gens.iter().enumerate() {
            let lhs = prod(g, g);
            let rhs = g.scale(&qm1).add(&id.scale(&q)).expect("same shape");
            if lhs != rhs {
                out.push(format!("quadratic relation fails for T_{}", k + 1));
            }
        }
        for i in 0..self.gens.len() {
            for j in i + 1..self.gens.len() {
                let (a, b) = (&self.gens[i], &self.gens[j]);
                if j == i + 1 {
                    if prod(&prod(a, b), a) != prod(&prod(b, a), b) {
                        out.push(format!("braid relation fails for T_{}, T_{}", i + 1, j + 1));
                    }
                } else if prod(a, b) != prod(b, a) {
                    out.push(format!("commutation fails for T_{}, T_{}", i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn check_relations(&self) -> Result<(), Error> {
        match self.relation_violations().into_iter().next() {
            Some(v) => Err(Error::Relation(v)),
            None => Ok(()),
        }
    }

    /// `T_{s_{w_1}} ... T_{s_{w_k}} v`.
    pub fn apply_word(&self, word: &[usize], v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for &i in word.iter().rev() {
            out = self.gens[i - 1].mul_vec(&out);
        }
        out
    }

    /// Matrix of `T_w`.
    pub fn action(&self, w: &Permutation) -> Result<ExactMatrix, Error> {
        if w.n() != self.n {
            return Err(Error::RankMismatch {
                left: self.n,
                right: w.n(),
            });
        }
        let mut m = ExactMatrix::identity(self.dim);
        for &i in w.reduced_word().iter().rev() {
            m = self.gens[i - 1].mul(&m)?;
        }
        Ok(m)
    }

    /// Matrix of an arbitrary element.
    pub fn act(&self, x: &HeckeElement) -> Result<ExactMatrix, Error> {
        if x.rank() != self.n {
            return Err(Error::RankMismatch {
                left: self.n,
                right: x.rank(),
            });
        }
        let mut out = ExactMatrix::zeros(self.dim, self.dim);
        for (w, c) in x.terms() {
            out = out.add(&self.action(w)?.scale(c))?;
        }
        Ok(out)
    }

    /// The generators `T_{s_{offset+1}}, ..., T_{s_{offset+rank-1}}`, as a
    /// module over `H_rank`.
    pub fn sub_presentation(&self, offset: usize, rank: usize) -> Result<ModulePresentation, Error> {
        if offset + rank > self.n {
            return Err(Error::Range(format!(
                "letters {}..{} are not inside 1..{}",
                offset + 1,
                offset + rank,
                self.n
            )));
        }
        let gens = (1..rank).map(|i| self.gens[offset + i - 1].clone()).collect();
        Ok(ModulePresentation {
            n: rank,
            dim: self.dim,
            gens,
            label: self.label.clone(),
        })
    }

    /// Restriction to `H_{n-m} (x) H_m`: the first factor keeps `T_{s_i}` for
    /// `i < n-m`, the second keeps `T_{s_i}` for `i > n-m`, renumbered from 1.
    pub fn restrict(&self, m: usize) -> Result<PairAction, Error> {
        if m > self.n {
            return Err(Error::Range(format!(
                "split ({}, {m}) of {}",
                self.n as i64 - m as i64,
                self.n
            )));
        }
        Ok(PairAction {
            first: self.sub_presentation(0, self.n - m)?,
            second: self.sub_presentation(self.n - m, m)?,
        })
    }

    pub fn direct_sum(&self, other: &ModulePresentation) -> Result<ModulePresentation, Error> {
        if self.n != other.n {
            return Err(Error::RankMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        Ok(ModulePresentation {
            n: self.n,
            dim: self.dim + other.dim,
            gens,
            label: None,
        })
    }

    /// Whether `f: self -> target` commutes with every generator.
    pub fn is_intertwiner(&self, f: &ExactMatrix, target: &ModulePresentation) -> bool {
        f.nrows() == target.dim
            && f.ncols() == self.dim
            && self.n == target.n
            && self
                .gens
                .iter()
                .zip(&target.gens)
                .all(|(g, h)| f.mul(g).ok() == h.mul(f).ok())
    }
}

/// A module for `H_{n-m} (x) H_m` on one underlying space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairAction {
    pub first: ModulePresentation,
    pub second: ModulePresentation,
}

impl PairAction {
    pub fn dim(&self) -> usize {
        self.first.dim()
    }
}

/// The left regular module on the basis `T_w`, `w` in lexicographic order.
pub fn regular_representation(n: usize) -> Result<ModulePresentation, Error> {
    regular_representation_bounded(n, REGULAR_BOUND)
}

pub fn regular_representation_bounded(n: usize, bound: usize) -> Result<ModulePresentation, Error> {
    if n > bound {
        return Err(Error::SizeBound { size: n, bound });
    }
    let basis = Permutation::all(n);
    let index: BTreeMap<&Permutation, usize> = basis.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let gens = (1..n)
        .map(|i| {
            let cols = basis
                .iter()
                .map(|w| {
                    HeckeElement::basis(w.clone())
                        .mul_generator_left(i)
                        .terms()
                        .map(|(u, c)| (index[u], c.clone()))
                        .collect()
                })
                .collect();
            ExactMatrix::from_columns(basis.len(), cols).expect("square")
        })
        .collect();
    ModulePresentation::new(n, basis.len(), gens, Some(format!("regular H_{n}")))
}

pub fn one_dim_rep(n: usize, kind: OneDimKind) -> ModulePresentation {
    let (c, name) = match kind {
        OneDimKind::Index => (Scalar::q(), "index"),
        OneDimKind::Sign => (Scalar::from_int(-1), "sign"),
    };
    ModulePresentation {
        n,
        dim: 1,
        gens: (1..n).map(|_| ExactMatrix::scalar(1, &c)).collect(),
        label: Some(format!("{name} H_{n}")),
    }
}

/// `H_{m+k} (x)_{H_m (x) H_k} (V (x) W)` on the basis `T_d (x) v_i (x) w_j`,
/// `d` a distinguished coset representative, indexed by
/// `(d_index * dim V + i) * dim W + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedModule {
    pub presentation: ModulePresentation,
    pub reps: Vec<Permutation>,
    pub dim_v: usize,
    pub dim_w: usize,
}

impl InducedModule {
    pub fn fiber_dim(&self) -> usize {
        self.dim_v * self.dim_w
    }

    pub fn index(&self, d: usize, i: usize, j: usize) -> usize {
        (d * self.dim_v + i) * self.dim_w + j
    }
}

/// Induction from the Young subalgebra `H_m (x) H_k` to `H_{m+k}`.
pub fn induce_pair(v: &ModulePresentation, w: &ModulePresentation) -> Result<InducedModule, Error> {
    let (m, k) = (v.rank(), w.rank());
    let n = m + k;
    let reps = coset_min_reps(n, &Composition::new(alloc::vec![m, k]))?;
    let young = YoungSubgroup::new(Composition::new(alloc::vec![m, k]));
    let (dv, dw) = (v.dim(), w.dim());
    let fiber = dv * dw;
    let dim = reps.len() * fiber;
    let qm1 = q_minus_one();
    let q = Scalar::q();
    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    for s in 1..n {
        let mut cols = Vec::with_capacity(dim);
        for (di, d) in reps.iter().enumerate() {
            let sd = d.mul_simple_left(s);
            if d.has_left_descent(s) {
                let target = reps.binary_search(&sd).expect("shorter element stays distinguished");
                for x in 0..fiber {
                    let mut col = SparseVec::new();
                    col.set(target * fiber + x, q.clone());
                    col.set(di * fiber + x, qm1.clone());
                    cols.push(col);
                }
            } else if let Ok(target) = reps.binary_search(&sd) {
                for x in 0..fiber {
                    cols.push(SparseVec::unit(target * fiber + x));
                }
            } else {
                // s d = d s' with s' a simple reflection of the Young subgroup
                let p = d.inverse().apply(s).min(d.inverse().apply(s + 1));
                debug_assert!(young.contains_generator(p));
                for i in 0..dv {
                    for j in 0..dw {
                        let image = if p < m {
                            v.gen(p)
                                .column(i)
                                .iter()
                                .map(|(i2, c)| ((di * dv + i2) * dw + j, c.clone()))
                                .collect()
                        } else {
                            w.gen(p - m)
                                .column(j)
                                .iter()
                                .map(|(j2, c)| ((di * dv + i) * dw + j2, c.clone()))
                                .collect()
                        };
                        cols.push(image);
                    }
                }
            }
        }
        gens.push(ExactMatrix::from_columns(dim, cols)?);
    }
    let label = match (v.label(), w.label()) {
        (Some(a), Some(b)) => Some(format!("Ind({a} # {b})")),
        _ => None,
    };
    let presentation = ModulePresentation::unchecked(n, dim, gens, label)?;
    Ok(InducedModule {
        presentation,
        reps,
        dim_v: dv,
        dim_w: dw,
    })
}
