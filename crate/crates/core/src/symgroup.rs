//! Permutations in one-line form, lengths, reduced words, Young subgroups and
//! minimal-length (double) coset representatives.
//!
//! Products compose right to left: `(u * v)(x) = u(v(x))`, so
//! `s_1 * s_2` has one-line form `[2, 3, 1]`. Left multiplication by `s_i`
//! swaps the values `i, i+1`; right multiplication swaps positions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::partitions::{partitions_of, row_standard_tableaux, Composition, Partition};
use crate::Error;

/// A permutation of `{1, ..., n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// From a 1-based one-line array `[sigma(1), ..., sigma(n)]`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self, Error> {
        let n = one_line.len();
        let mut seen = alloc::vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &x in one_line {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation);
            }
            seen[x - 1] = true;
            images.push((x - 1) as u8);
        }
        Ok(Permutation { images })
    }

    /// The simple transposition `s_i` (1-based, `1 <= i < n`).
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} is not a generator of S_{n}");
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// `s_{w_1} s_{w_2} ... s_{w_k}` in `S_n`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self, Error> {
        let mut p = Self::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::Range(alloc::format!("generator s_{i} not in S_{n}")));
            }
            p = p.mul_simple_right(i);
        }
        Ok(p)
    }

    /// Rank `n`.
    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// `sigma(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self * other`, i.e. `x -> self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "rank mismatch");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0u8; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Permutation { images }
    }

    /// Inversion count, equal to the length of any reduced word.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `s_i * self`.
    pub fn mul_simple_left(&self, i: usize) -> Permutation {
        let (a, b) = ((i - 1) as u8, i as u8);
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| {
                    if x == a {
                        b
                    } else if x == b {
                        a
                    } else {
                        x
                    }
                })
                .collect(),
        }
    }

    /// `self * s_i`.
    pub fn mul_simple_right(&self, i: usize) -> Permutation {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    /// `l(s_i * self) < l(self)`: the value `i + 1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.position_of(i);
        inv > self.position_of(i + 1)
    }

    /// `l(self * s_i) < l(self)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    fn position_of(&self, value: usize) -> usize {
        self.images
            .iter()
            .position(|&x| x as usize + 1 == value)
            .expect("value in range")
    }

    /// The lexicographically smallest reduced word, found by repeatedly
    /// stripping the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(i) = (1..w.n()).find(|&i| w.has_left_descent(i)) {
            word.push(i);
            w = w.mul_simple_left(i);
        }
        word
    }

    /// Image under `S_n -> S_{n+k}`, fixing the new letters.
    pub fn embed(&self, n: usize) -> Permutation {
        assert!(n >= self.n());
        let mut images = self.images.clone();
        images.extend(self.n() as u8..n as u8);
        Permutation { images }
    }

    /// If `self` fixes every letter above `n`, its restriction to `S_n`.
    pub fn truncate(&self, n: usize) -> Option<Permutation> {
        if self.images[n..].iter().enumerate().any(|(k, &x)| x as usize != n + k) {
            return None;
        }
        Some(Permutation {
            images: self.images[..n].to_vec(),
        })
    }

    /// Cycle lengths as a partition.
    pub fn cycle_type(&self) -> Partition {
        let mut seen = alloc::vec![false; self.n()];
        let mut lens = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens).expect("sorted cycle lengths")
    }

    /// All of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

/// The standard Young subgroup `S_lambda` of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungSubgroup {
    composition: Composition,
    blocks: Vec<core::ops::Range<usize>>,
}

impl YoungSubgroup {
    pub fn new(composition: Composition) -> Self {
        let blocks = composition.blocks();
        YoungSubgroup { composition, blocks }
    }

    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    /// Consecutive 0-based index runs of sizes `lambda_1, lambda_2, ...`.
    pub fn blocks(&self) -> &[core::ops::Range<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.composition.size()
    }

    /// 1-based indices `i` with `s_i` in the subgroup.
    pub fn generators(&self) -> Vec<usize> {
        self.blocks.iter().flat_map(|b| b.start + 1..b.end).collect()
    }

    pub fn contains_generator(&self, i: usize) -> bool {
        self.blocks.iter().any(|b| b.start < i && i < b.end)
    }

    /// Whether `w` preserves every block.
    pub fn contains(&self, w: &Permutation) -> bool {
        self.blocks
            .iter()
            .all(|b| b.clone().all(|x| b.contains(&(w.images[x] as usize))))
    }
}

fn check_size(n: usize, c: &Composition) -> Result<(), Error> {
    if c.size() != n {
        return Err(Error::CompositionSize {
            expected: n,
            got: c.size(),
        });
    }
    Ok(())
}

/// Whether `d` is increasing on each block of `lambda`, i.e. has no right
/// descent in `S_lambda`.
pub fn is_left_coset_min(d: &Permutation, lambda: &YoungSubgroup) -> bool {
    lambda.generators().into_iter().all(|i| !d.has_right_descent(i))
}

/// The distinguished (minimal-length) representatives of the left cosets
/// `d S_lambda`, sorted by one-line form (identity first).
pub fn coset_min_reps(n: usize, lambda: &Composition) -> Result<Vec<Permutation>, Error> {
    check_size(n, lambda)?;
    // choose which values land in each block, then sort within blocks
    fn go(value: usize, n: usize, remaining: &mut Vec<usize>, label: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if value == n {
            out.push(label.clone());
            return;
        }
        for b in 0..remaining.len() {
            if remaining[b] > 0 {
                remaining[b] -= 1;
                label.push(b);
                go(value + 1, n, remaining, label, out);
                label.pop();
                remaining[b] += 1;
            }
        }
    }
    let mut labels = Vec::new();
    go(0, n, &mut lambda.parts().to_vec(), &mut Vec::new(), &mut labels);
    let blocks = lambda.blocks();
    let mut reps: Vec<Permutation> = labels
        .into_iter()
        .map(|label| {
            let mut images = alloc::vec![0u8; n];
            let mut next: Vec<usize> = blocks.iter().map(|b| b.start).collect();
            for (value, &b) in label.iter().enumerate() {
                images[next[b]] = value as u8;
                next[b] += 1;
            }
            Permutation { images }
        })
        .collect();
    reps.sort();
    Ok(reps)
}

/// Minimal-length representatives of the double cosets `S_mu d S_lambda`:
/// no left descent in `S_mu` and no right descent in `S_lambda`.
pub fn double_coset_min_reps(n: usize, mu: &Composition, lambda: &Composition) -> Result<Vec<Permutation>, Error> {
    check_size(n, mu)?;
    let left = YoungSubgroup::new(mu.clone());
    Ok(coset_min_reps(n, lambda)?
        .into_iter()
        .filter(|d| left.generators().into_iter().all(|i| !d.has_left_descent(i)))
        .collect())
}

/// One step of the chain `D_{mu_n, lambda_n}` for `mu_n = (1^a, n)`,
/// `lambda_n = (m, a + n - m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCosetStep {
    pub n: usize,
    pub reps: Vec<Permutation>,
    pub row_standard_count: usize,
    /// Whether every rep, embedded into `S_{a+n+1}`, is a rep at step `n + 1`.
    pub included_in_next: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCosetReport {
    pub a: usize,
    pub m: usize,
    pub steps: Vec<DoubleCosetStep>,
    pub inclusions_hold: bool,
    pub counts_match_tableaux: bool,
    /// Least probed `n` from which the set no longer grows.
    pub stable_from: usize,
    pub stable_size: usize,
    /// `stable_from <= m`.
    pub stabilizes_by_m: bool,
}

/// Tracks the double-coset representative sets for `n` from the least valid
/// value (`a + n >= m`) up to `n_max`.
pub fn double_coset_stabilization(a: usize, m: usize, n_max: usize) -> Result<DoubleCosetReport, Error> {
    let start = m.saturating_sub(a);
    if start > n_max {
        return Err(Error::Range(alloc::format!("no n <= {n_max} with a + n >= m = {m}")));
    }
    let sets = (start..=n_max)
        .map(|n| {
            let total = a + n;
            let lambda = Composition::new(alloc::vec![m, total - m]);
            let mu = Composition::ones_then(a, n);
            let reps = double_coset_min_reps(total, &mu, &lambda)?;
            let count = row_standard_tableaux(&lambda, &mu)?.len();
            Ok((n, reps, count))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let mut steps = Vec::with_capacity(sets.len());
    for (k, (n, reps, count)) in sets.iter().enumerate() {
        let included = sets
            .get(k + 1)
            .map(|(_, next, _)| reps.iter().all(|d| next.binary_search(&d.embed(a + n + 1)).is_ok()));
        steps.push(DoubleCosetStep {
            n: *n,
            reps: reps.clone(),
            row_standard_count: *count,
            included_in_next: included,
        });
    }
    let sizes: Vec<usize> = steps.iter().map(|s| s.reps.len()).collect();
    let last = *sizes.last().expect("at least one step");
    let stable_idx = sizes.iter().rposition(|&s| s != last).map_or(0, |i| i + 1);
    let stable_from = steps[stable_idx].n;
    Ok(DoubleCosetReport {
        a,
        m,
        inclusions_hold: steps.iter().all(|s| s.included_in_next != Some(false)),
        counts_match_tableaux: steps.iter().all(|s| s.reps.len() == s.row_standard_count),
        stable_from,
        stable_size: last,
        stabilizes_by_m: stable_from <= m,
        steps,
    })
}

/// Minimal-length element of each conjugacy class of `S_n`, keyed by cycle
/// type: a product of cycles on consecutive letters, longest cycle first.
pub fn conjugacy_min_reps(n: usize) -> BTreeMap<Partition, Permutation> {
    partitions_of(n)
        .into_iter()
        .map(|mu| {
            let mut word = Vec::new();
            let mut start = 1;
            for &len in mu.parts() {
                word.extend(start..start + len - 1);
                start += len;
            }
            let w = Permutation::from_word(n, &word).expect("word inside S_n");
            (mu, w)
        })
        .collect()
}
