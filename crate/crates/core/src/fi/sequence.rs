use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{kernel_basis, EchelonBasis, ExactMatrix, Quotient, SparseVec};
use crate::hecke::ModulePresentation;
use crate::Error;

/// A truncated consistent sequence `(V_n, phi_n)`, `0 <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistentSequence {
    label: String,
    modules: Vec<ModulePresentation>,
    connectors: Vec<ExactMatrix>,
}

impl ConsistentSequence {
    /// Checks ranks and shapes; intertwining is reported by
    /// [`check_consistency`].
    pub fn new(
        label: impl Into<String>,
        modules: Vec<ModulePresentation>,
        connectors: Vec<ExactMatrix>,
    ) -> Result<Self, Error> {
        if modules.is_empty() {
            return Err(Error::Shape("a sequence needs degree 0".into()));
        }
        if let Some((n, v)) = modules.iter().enumerate().find(|(n, v)| v.rank() != *n) {
            return Err(Error::Shape(format!("degree {n} carries a module over H_{}", v.rank())));
        }
        if connectors.len() + 1 != modules.len() {
            return Err(Error::Shape(format!(
                "{} connectors for {} degrees",
                connectors.len(),
                modules.len()
            )));
        }
        for (n, phi) in connectors.iter().enumerate() {
            if phi.ncols() != modules[n].dim() || phi.nrows() != modules[n + 1].dim() {
                return Err(Error::Shape(format!(
                    "phi_{n} is {}x{}, expected {}x{}",
                    phi.nrows(),
                    phi.ncols(),
                    modules[n + 1].dim(),
                    modules[n].dim()
                )));
            }
        }
        Ok(ConsistentSequence {
            label: label.into(),
            modules,
            connectors,
        })
    }

    pub fn zero(n_max: usize) -> Self {
        ConsistentSequence {
            label: String::from("zero"),
            modules: (0..=n_max).map(ModulePresentation::zero).collect(),
            connectors: (0..n_max).map(|_| ExactMatrix::zeros(0, 0)).collect(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn n_max(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn module(&self, n: usize) -> &ModulePresentation {
        &self.modules[n]
    }

    pub fn modules(&self) -> &[ModulePresentation] {
        &self.modules
    }

    pub fn connector(&self, n: usize) -> &ExactMatrix {
        &self.connectors[n]
    }

    pub fn connectors(&self) -> &[ExactMatrix] {
        &self.connectors
    }

    pub fn dim(&self, n: usize) -> usize {
        self.modules[n].dim()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.modules.iter().map(ModulePresentation::dim).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.modules.iter().all(|v| v.dim() == 0)
    }

    /// `phi_{to-1} ... phi_from (v)`.
    pub fn push(&self, v: &SparseVec, from: usize, to: usize) -> SparseVec {
        let mut out = v.clone();
        for n in from..to {
            out = self.connectors[n].mul_vec(&out);
        }
        out
    }

    /// The same data cut off at a smaller `n_max`.
    pub fn truncate(&self, n_max: usize) -> ConsistentSequence {
        let n_max = n_max.min(self.n_max());
        ConsistentSequence {
            label: self.label.clone(),
            modules: self.modules[..=n_max].to_vec(),
            connectors: self.connectors[..n_max].to_vec(),
        }
    }

    /// The subsequence spanned by the given subspaces, in the coordinates of
    /// their echelon bases. Fails if a subspace is not stable under the
    /// action or not carried into the next one.
    pub fn subsequence(&self, spaces: &[EchelonBasis]) -> Result<ConsistentSequence, Error> {
        if spaces.len() != self.modules.len() {
            return Err(Error::Shape("one subspace per degree".into()));
        }
        let bases: Vec<Vec<SparseVec>> = spaces.iter().map(|s| s.vectors().cloned().collect()).collect();
        let mut modules = Vec::with_capacity(spaces.len());
        for (n, (v, space)) in self.modules.iter().zip(spaces).enumerate() {
            let mut gens = Vec::with_capacity(n.saturating_sub(1));
            for g in v.gens() {
                let cols = bases[n]
                    .iter()
                    .map(|b| space.coordinates(&g.mul_vec(b)).ok_or(Error::NotInvariant))
                    .collect::<Result<Vec<_>, _>>()?;
                gens.push(ExactMatrix::from_columns(space.rank(), cols)?);
            }
            modules.push(ModulePresentation::unchecked(
                n,
                space.rank(),
                gens,
                v.label().map(String::from),
            )?);
        }
        let mut connectors = Vec::with_capacity(self.connectors.len());
        for (n, phi) in self.connectors.iter().enumerate() {
            let cols = bases[n]
                .iter()
                .map(|b| spaces[n + 1].coordinates(&phi.mul_vec(b)).ok_or(Error::NotInvariant))
                .collect::<Result<Vec<_>, _>>()?;
            connectors.push(ExactMatrix::from_columns(spaces[n + 1].rank(), cols)?);
        }
        ConsistentSequence::new(format!("sub({})", self.label), modules, connectors)
    }

    /// The matrices `V'_n -> V_n` of a subsequence built by
    /// [`ConsistentSequence::subsequence`].
    pub fn inclusions(spaces: &[EchelonBasis]) -> Vec<ExactMatrix> {
        spaces.iter().map(EchelonBasis::to_matrix).collect()
    }
}

/// Outcome of [`check_consistency`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyVerdict {
    /// `(n, i)` with `phi_n T_{s_i} != T_{s_i} phi_n`.
    pub violations: Vec<(usize, usize)>,
}

impl ConsistencyVerdict {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every connector intertwines the generators of `H_n`.
pub fn check_consistency(v: &ConsistentSequence) -> ConsistencyVerdict {
    let mut violations = Vec::new();
    for (n, phi) in v.connectors.iter().enumerate() {
        for i in 1..n {
            let lhs = phi.mul(v.modules[n].gen(i)).expect("shapes checked");
            let rhs = v.modules[n + 1].gen(i).mul(phi).expect("shapes checked");
            if lhs != rhs {
                violations.push((n, i));
            }
        }
    }
    ConsistencyVerdict { violations }
}

/// A morphism of consistent sequences, checked at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceMorphism {
    source: ConsistentSequence,
    target: ConsistentSequence,
    components: Vec<ExactMatrix>,
}

impl SequenceMorphism {
    pub fn new(
        source: ConsistentSequence,
        target: ConsistentSequence,
        components: Vec<ExactMatrix>,
    ) -> Result<Self, Error> {
        if source.n_max() != target.n_max() || components.len() != source.modules.len() {
            return Err(Error::NotAMorphism("truncations differ".into()));
        }
        for (n, f) in components.iter().enumerate() {
            if f.ncols() != source.dim(n) || f.nrows() != target.dim(n) {
                return Err(Error::NotAMorphism(format!("f_{n} has the wrong shape")));
            }
            if !source.module(n).is_intertwiner(f, target.module(n)) {
                return Err(Error::NotAMorphism(format!("f_{n} is not H_{n}-linear")));
            }
        }
        for n in 0..source.n_max() {
            let lhs = components[n + 1].mul(source.connector(n))?;
            let rhs = target.connector(n).mul(&components[n])?;
            if lhs != rhs {
                return Err(Error::NotAMorphism(format!("square at degree {n} does not commute")));
            }
        }
        Ok(SequenceMorphism {
            source,
            target,
            components,
        })
    }

    pub fn identity(v: &ConsistentSequence) -> Self {
        SequenceMorphism {
            source: v.clone(),
            target: v.clone(),
            components: v.dims().into_iter().map(ExactMatrix::identity).collect(),
        }
    }

    pub fn source(&self) -> &ConsistentSequence {
        &self.source
    }

    pub fn target(&self) -> &ConsistentSequence {
        &self.target
    }

    pub fn component(&self, n: usize) -> &ExactMatrix {
        &self.components[n]
    }

    pub fn components(&self) -> &[ExactMatrix] {
        &self.components
    }

    /// Whether every component has full row rank.
    pub fn is_epi(&self) -> bool {
        self.components.iter().all(|f| crate::arith::rank(f) == f.nrows())
    }
}

/// Degreewise direct sum.
pub fn direct_sum(v: &ConsistentSequence, w: &ConsistentSequence) -> Result<ConsistentSequence, Error> {
    if v.n_max() != w.n_max() {
        return Err(Error::Shape(format!(
            "truncations {} and {} differ",
            v.n_max(),
            w.n_max()
        )));
    }
    let modules = v
        .modules
        .iter()
        .zip(&w.modules)
        .map(|(a, b)| a.direct_sum(b))
        .collect::<Result<Vec<_>, _>>()?;
    let connectors = v
        .connectors
        .iter()
        .zip(&w.connectors)
        .map(|(a, b)| a.direct_sum(b))
        .collect();
    ConsistentSequence::new(format!("{} + {}", v.label, w.label), modules, connectors)
}

/// Degreewise tensor product with the diagonal action `T_s -> T_s (x) T_s`.
///
/// The diagonal action satisfies the quadratic relation only when one factor
/// is zero, so any other input is rejected with a relation error.
pub fn tensor(v: &ConsistentSequence, w: &ConsistentSequence) -> Result<ConsistentSequence, Error> {
    if v.n_max() != w.n_max() {
        return Err(Error::Shape(format!(
            "truncations {} and {} differ",
            v.n_max(),
            w.n_max()
        )));
    }
    let mut modules = Vec::with_capacity(v.modules.len());
    for (n, (a, b)) in v.modules.iter().zip(&w.modules).enumerate() {
        let gens = a.gens().iter().zip(b.gens()).map(|(x, y)| x.kron(y)).collect();
        modules.push(ModulePresentation::new(n, a.dim() * b.dim(), gens, None)?);
    }
    let connectors = v.connectors.iter().zip(&w.connectors).map(|(a, b)| a.kron(b)).collect();
    ConsistentSequence::new(format!("{} * {}", v.label, w.label), modules, connectors)
}

/// Degreewise kernel, in the coordinates of an echelon basis of each `ker f_n`.
pub fn kernel(f: &SequenceMorphism) -> Result<ConsistentSequence, Error> {
    let spaces: Vec<EchelonBasis> = f
        .components
        .iter()
        .zip(f.source.modules())
        .map(|(c, v)| EchelonBasis::from_vectors(v.dim(), &kernel_basis(c)))
        .collect();
    Ok(f.source
        .subsequence(&spaces)?
        .with_label(format!("ker -> {}", f.target.label)))
}

/// Degreewise cokernel `W_n / im f_n`.
pub fn cokernel(f: &SequenceMorphism) -> Result<ConsistentSequence, Error> {
    let quotients: Vec<Quotient> = f
        .components
        .iter()
        .zip(f.target.modules())
        .map(|(c, w)| Quotient::from_vectors(w.dim(), c.columns()))
        .collect();
    let mut modules = Vec::with_capacity(quotients.len());
    for (n, (w, qn)) in f.target.modules().iter().zip(&quotients).enumerate() {
        let mut gens = Vec::new();
        for g in w.gens() {
            if !qn.maps_subspace_into(g, qn) {
                return Err(Error::NotInvariant);
            }
            gens.push(qn.induced_into(g, qn));
        }
        modules.push(ModulePresentation::unchecked(n, qn.dim(), gens, None)?);
    }
    let mut connectors = Vec::new();
    for (n, psi) in f.target.connectors().iter().enumerate() {
        if !quotients[n].maps_subspace_into(psi, &quotients[n + 1]) {
            return Err(Error::NotInvariant);
        }
        connectors.push(quotients[n].induced_into(psi, &quotients[n + 1]));
    }
    ConsistentSequence::new(format!("coker -> {}", f.target.label), modules, connectors)
}

/// `(S_{+a} V)_n = V_{a+n}` with `H_n` acting through the generators
/// `T_{s_{a+1}}, ..., T_{s_{a+n-1}}` on the last `n` letters.
pub fn shift(v: &ConsistentSequence, a: usize) -> Result<ConsistentSequence, Error> {
    if a > v.n_max() {
        return Err(Error::Range(format!("shift by {a} exceeds n_max = {}", v.n_max())));
    }
    let modules = (0..=v.n_max() - a)
        .map(|n| v.modules[a + n].sub_presentation(a, n))
        .collect::<Result<Vec<_>, _>>()?;
    let connectors = v.connectors[a..].to_vec();
    ConsistentSequence::new(format!("S+{a}({})", v.label), modules, connectors)
}
