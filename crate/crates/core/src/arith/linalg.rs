//! Exact linear algebra over `Q(q)`: incremental echelon bases, rank, kernels,
//! linear solves and quotient spaces.
//!
//! Elimination works on sparse vectors with full back-reduction, so every
//! stored row has a unit entry at its pivot and zeros at all other pivots.
//! Pivots are picked by the simplest entry (lowest degree, fewest terms) rather
//! than by column order, which keeps entries small on the very sparse,
//! monomial-heavy matrices produced by Hecke actions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ExactMatrix, Scalar, SparseVec};
use crate::Error;

/// Reduced row-echelon basis of a subspace of `Q(q)^dim`.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    dim: usize,
    /// pivot column -> row with a 1 there and 0 at every other pivot.
    rows: BTreeMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis {
            dim,
            rows: BTreeMap::new(),
        }
    }

    pub fn full(dim: usize) -> Self {
        EchelonBasis {
            dim,
            rows: (0..dim).map(|i| (i, SparseVec::unit(i))).collect(),
        }
    }

    pub fn from_vectors<'a>(dim: usize, vectors: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut b = Self::new(dim);
        for v in vectors {
            b.insert(v.clone());
        }
        b
    }

    /// Ambient dimension.
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Basis vectors ordered by pivot column.
    pub fn vectors(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    /// Columns that are not pivots; they index a complement of the subspace.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.dim).filter(|c| !self.rows.contains_key(c)).collect()
    }

    /// Subtracts the subspace component at every pivot. The result is zero iff
    /// `v` lies in the subspace, and depends only on the coset `v + U`.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        let hits: Vec<(usize, Scalar)> = v
            .iter()
            .filter(|(i, _)| self.rows.contains_key(i))
            .map(|(i, c)| (i, c.clone()))
            .collect();
        for (p, c) in hits {
            out.axpy(&(-&c), &self.rows[&p]);
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` with respect to [`Self::vectors`], or `None` if `v`
    /// is outside the subspace.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        if !self.contains(v) {
            return None;
        }
        Some(
            self.rows
                .keys()
                .enumerate()
                .filter_map(|(k, &p)| v.get(p).map(|c| (k, c.clone())))
                .collect(),
        )
    }

    /// Inserts `v`, returning whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        self.insert_with(v, |_| true)
    }

    /// Inserts `v`, choosing the pivot only among columns accepted by `allowed`.
    /// A reduced vector with no allowed nonzero column is rejected.
    pub fn insert_with(&mut self, v: SparseVec, allowed: impl Fn(usize) -> bool) -> bool {
        let r = self.reduce(&v);
        let Some(pivot) = r
            .iter()
            .filter(|(i, _)| allowed(*i))
            .min_by_key(|(i, c)| (c.complexity(), *i))
            .map(|(i, _)| i)
        else {
            return false;
        };
        let inv = r.entry(pivot).inv().expect("pivot is nonzero");
        let row = r.scale(&inv);
        for other in self.rows.values_mut() {
            if let Some(c) = other.get(pivot).cloned() {
                other.axpy(&(-&c), &row);
            }
        }
        self.rows.insert(pivot, row);
        true
    }

    /// The basis vectors as the columns of a `dim x rank` matrix.
    pub fn to_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_columns(self.dim, self.rows.values().cloned().collect())
            .expect("rows live in the ambient space")
    }
}

/// How [`rank_with`] decides the rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMode {
    /// Elimination over `Q(q)`.
    Exact,
    /// Elimination over `Q` at `count` seeded random points `q0`.
    Specialized { count: usize, seed: u64 },
}

/// Exact rank over `Q(q)`.
pub fn rank(m: &ExactMatrix) -> usize {
    EchelonBasis::from_vectors(m.nrows(), m.columns()).rank()
}

pub fn rank_with(m: &ExactMatrix, mode: RankMode) -> Result<usize, Error> {
    match mode {
        RankMode::Exact => Ok(rank(m)),
        RankMode::Specialized { count, seed } => specialized_rank(m, count, seed),
    }
}

fn random_point(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let num: i64 = rng.random_range(-97..=97);
        let den: i64 = rng.random_range(1..=31);
        let x = BigRational::new(BigInt::from(num), BigInt::from(den));
        if !x.is_zero() && !x.is_one() && x != -BigRational::one() {
            return x;
        }
    }
}

fn rational_rank(rows: usize, cols: &[Vec<(usize, BigRational)>]) -> usize {
    let mut pivots: BTreeMap<usize, Vec<BigRational>> = BTreeMap::new();
    for col in cols {
        let mut v = alloc::vec![BigRational::zero(); rows];
        for (i, c) in col {
            v[*i] = c.clone();
        }
        for (&p, row) in &pivots {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &c * r;
                    }
                }
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[p].recip();
            for x in v.iter_mut() {
                *x *= &inv;
            }
            for row in pivots.values_mut() {
                if !row[p].is_zero() {
                    let c = row[p].clone();
                    for (x, r) in row.iter_mut().zip(&v) {
                        if !r.is_zero() {
                            *x -= &c * r;
                        }
                    }
                }
            }
            pivots.insert(p, v);
        }
    }
    pivots.len()
}

fn rank_at(m: &ExactMatrix, q0: &BigRational) -> Result<usize, Error> {
    let cols = m
        .columns()
        .iter()
        .map(|col| {
            col.iter()
                .map(|(i, c)| c.specialize(q0).map(|x| (i, x)))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(rational_rank(m.nrows(), &cols))
}

/// Rank at `count` random specializations. Specialization can only lower the
/// rank, so the maximum is reported; if a batch disagrees, a second batch is
/// drawn and must agree with the maximum seen so far.
pub fn specialized_rank(m: &ExactMatrix, count: usize, seed: u64) -> Result<usize, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let batch = |rng: &mut ChaCha8Rng| -> Vec<usize> {
        let mut ranks = Vec::with_capacity(count.max(1));
        while ranks.len() < count.max(1) {
            let q0 = random_point(rng);
            // poles are skipped: redraw
            if let Ok(r) = rank_at(m, &q0) {
                ranks.push(r);
            }
        }
        ranks
    };
    let first = batch(&mut rng);
    let best = *first.iter().max().expect("nonempty batch");
    if first.iter().all(|&r| r == best) {
        return Ok(best);
    }
    let second = batch(&mut rng);
    if second.iter().all(|&r| r == best) {
        Ok(best)
    } else {
        Err(Error::UnstableSpecialization)
    }
}

/// Basis of the right null space `{v : M v = 0}`.
pub fn kernel_basis(m: &ExactMatrix) -> Vec<SparseVec> {
    let rows = EchelonBasis::from_vectors(m.ncols(), m.rows().iter());
    rows.free_columns()
        .into_iter()
        .map(|f| {
            let mut v = SparseVec::unit(f);
            for (p, row) in rows.rows.iter() {
                if let Some(c) = row.get(f) {
                    v.set(*p, -c);
                }
            }
            v
        })
        .collect()
}

/// Solves `A x = b`; `Ok(None)` if the system is inconsistent. Free variables
/// are set to zero.
pub fn solve(a: &ExactMatrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, Error> {
    if b.len() != a.nrows() {
        return Err(Error::Shape("right-hand side length".into()));
    }
    let n = a.ncols();
    let mut basis = EchelonBasis::new(n + 1);
    for (row, rhs) in a.rows().into_iter().zip(b) {
        let mut aug = row;
        aug.set(n, rhs.clone());
        let r = basis.reduce(&aug);
        if r.iter().all(|(i, _)| i == n) {
            if !r.is_zero() {
                return Ok(None);
            }
            continue;
        }
        basis.insert_with(r, |i| i < n);
    }
    let mut x = alloc::vec![Scalar::zero(); n];
    for (&p, row) in &basis.rows {
        x[p] = row.entry(n);
    }
    Ok(Some(x))
}

/// A quotient `Q(q)^dim / U` with coordinates given by the free columns of an
/// echelon basis of `U`.
#[derive(Clone, Debug)]
pub struct Quotient {
    sub: EchelonBasis,
    free: Vec<usize>,
}

impl Quotient {
    pub fn new(sub: EchelonBasis) -> Self {
        let free = sub.free_columns();
        Quotient { sub, free }
    }

    pub fn from_vectors<'a>(dim: usize, vectors: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        Self::new(EchelonBasis::from_vectors(dim, vectors))
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.sub.ambient_dim()
    }

    pub fn subspace(&self) -> &EchelonBasis {
        &self.sub
    }

    /// Quotient coordinates of the class of `v`.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        let r = self.sub.reduce(v);
        self.free
            .iter()
            .enumerate()
            .filter_map(|(k, &c)| r.get(c).map(|x| (k, x.clone())))
            .collect()
    }

    /// A representative of the `k`-th quotient basis vector.
    pub fn lift(&self, k: usize) -> SparseVec {
        SparseVec::unit(self.free[k])
    }

    /// The `dim(V/U) x dim(V)` projection matrix.
    pub fn projection(&self) -> ExactMatrix {
        let cols = (0..self.ambient_dim())
            .map(|j| self.project(&SparseVec::unit(j)))
            .collect();
        ExactMatrix::from_columns(self.dim(), cols).expect("projection fits")
    }

    /// The map `V/U -> target` induced by `map: V -> target`; `map` must
    /// already vanish on `U` modulo the target's own quotient.
    pub fn induced_into(&self, map: &ExactMatrix, target: &Quotient) -> ExactMatrix {
        let cols = (0..self.dim())
            .map(|k| target.project(&map.mul_vec(&self.lift(k))))
            .collect();
        ExactMatrix::from_columns(target.dim(), cols).expect("induced map fits")
    }

    /// Whether `map` sends `U` into `target`'s subspace.
    pub fn maps_subspace_into(&self, map: &ExactMatrix, target: &Quotient) -> bool {
        self.sub.vectors().all(|u| target.sub.contains(&map.mul_vec(u)))
    }
}

/// Result of [`quotient_structure`].
#[derive(Clone, Debug)]
pub struct QuotientStructure {
    pub quotient: Quotient,
    pub projection: ExactMatrix,
    pub induced_maps: Vec<ExactMatrix>,
}

/// Quotient of `Q(q)^space_dim` by the span of `subspace`, with the maps
/// induced by endomorphisms that preserve it.
pub fn quotient_structure(
    space_dim: usize,
    subspace: &[SparseVec],
    maps: &[ExactMatrix],
) -> Result<QuotientStructure, Error> {
    let quotient = Quotient::from_vectors(space_dim, subspace);
    let mut induced_maps = Vec::with_capacity(maps.len());
    for m in maps {
        if m.nrows() != space_dim || m.ncols() != space_dim {
            return Err(Error::Shape("quotient map must be square on the space".into()));
        }
        if !quotient.maps_subspace_into(m, &quotient) {
            return Err(Error::NotInvariant);
        }
        induced_maps.push(quotient.induced_into(m, &quotient));
    }
    let projection = quotient.projection();
    Ok(QuotientStructure {
        quotient,
        projection,
        induced_maps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Poly;
    use alloc::vec;

    fn int(c: i64) -> Scalar {
        Scalar::from_int(c)
    }

    fn q() -> Scalar {
        Scalar::q()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&ExactMatrix::identity(2)), 2);
        let m = ExactMatrix::from_dense(&[vec![q(), &q() * &q()], vec![int(1), q()]]).unwrap();
        assert_eq!(rank(&m), 1);
        assert_eq!(rank(&ExactMatrix::zeros(0, 0)), 0);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&ExactMatrix::identity(3)).is_empty());
        let m = ExactMatrix::from_dense(&[vec![q(), &q() * &q()]]).unwrap();
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        // proportional to (q, -1)
        let v = &k[0];
        let ratio = v.entry(0).checked_div(&v.entry(1)).unwrap();
        assert_eq!(ratio, -q());
        assert_eq!(kernel_basis(&ExactMatrix::zeros(2, 3)).len(), 3);
    }

    #[test]
    fn quotient_examples() {
        let id = ExactMatrix::identity(2);
        let qs = quotient_structure(2, &[], core::slice::from_ref(&id)).unwrap();
        assert_eq!(qs.projection, ExactMatrix::identity(2));
        assert_eq!(qs.induced_maps[0], id);

        let all = [SparseVec::unit(0), SparseVec::unit(1)];
        let qs = quotient_structure(2, &all, core::slice::from_ref(&id)).unwrap();
        assert_eq!((qs.projection.nrows(), qs.projection.ncols()), (0, 2));
        assert_eq!((qs.induced_maps[0].nrows(), qs.induced_maps[0].ncols()), (0, 0));

        let map = ExactMatrix::from_dense(&[vec![q(), int(1)], vec![int(0), int(1)]]).unwrap();
        let qs = quotient_structure(2, &[SparseVec::unit(0)], &[map]).unwrap();
        assert_eq!(qs.quotient.dim(), 1);
        assert_eq!(qs.induced_maps[0], ExactMatrix::identity(1));
        assert_eq!(qs.projection.get(0, 1), int(1));
        assert_eq!(qs.projection.get(0, 0), int(0));
    }

    #[test]
    fn non_invariant_subspace_is_rejected() {
        let swap = ExactMatrix::from_dense(&[vec![int(0), int(1)], vec![int(1), int(0)]]).unwrap();
        assert!(matches!(
            quotient_structure(2, &[SparseVec::unit(0)], &[swap]),
            Err(Error::NotInvariant)
        ));
    }

    #[test]
    fn solve_small_system() {
        let a = ExactMatrix::from_dense(&[vec![int(1), int(1)], vec![int(1), q()]]).unwrap();
        let b = [int(2), Scalar::from_poly(Poly::from_int_coeffs(&[1, 1]))];
        let x = solve(&a, &b).unwrap().unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        let singular = ExactMatrix::from_dense(&[vec![int(1), int(1)], vec![int(1), int(1)]]).unwrap();
        assert_eq!(solve(&singular, &[int(1), int(2)]).unwrap(), None);
    }

    #[test]
    fn specialized_rank_agrees_on_generic_matrix() {
        let m = ExactMatrix::from_dense(&[
            vec![q(), int(1), int(0)],
            vec![int(1), q(), int(1)],
            vec![int(0), int(1), q()],
        ])
        .unwrap();
        assert_eq!(specialized_rank(&m, 3, 7).unwrap(), rank(&m));
    }
}
