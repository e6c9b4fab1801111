//! Partitions, compositions, padded partitions, tableaux and the Pieri
//! (horizontal strip) rule.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::Error;

/// Default bound on `|lambda|` for tableau enumeration.
pub const SYT_BOUND: usize = 8;

/// A weakly decreasing sequence of positive integers. The empty partition has
/// `|lambda| = 0` and `lambda_1 = 0`.
///
/// The derived order is lexicographic on parts, so `(1,1,1) < (2,1) < (3)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`, empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Partition {
            parts: if n == 0 { vec![] } else { vec![n] },
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|lambda|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `lambda_i` (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        i.checked_sub(1).and_then(|k| self.parts.get(k)).copied().unwrap_or(0)
    }

    /// `lambda_1`.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        Partition {
            parts: (1..=cols)
                .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
                .collect(),
        }
    }

    /// Hook length of the cell at 0-based `(row, col)`.
    pub fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.parts[row] - col - 1;
        let leg = self.parts[row + 1..].iter().filter(|&&p| p > col).count();
        arm + leg + 1
    }

    /// Rows (0-based) whose last cell can be removed leaving a partition,
    /// top to bottom.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&r| r + 1 == self.len() || self.parts[r] > self.parts[r + 1])
            .collect()
    }

    fn remove_from_row(&self, r: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[r] -= 1;
        if parts[r] == 0 {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn as_composition(&self) -> Composition {
        Composition::new(self.parts.clone())
    }
}

/// Comma-separated parts, e.g. `2,1`; the empty partition is the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidPartition))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// A finite sequence of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `(1^a, n)`.
    pub fn ones_then(a: usize, n: usize) -> Self {
        let mut parts = vec![1; a];
        parts.push(n);
        Composition { parts }
    }

    /// 0-based half-open index ranges of the consecutive blocks.
    pub fn blocks(&self) -> Vec<core::ops::Range<usize>> {
        let mut start = 0;
        self.parts
            .iter()
            .map(|&p| {
                let r = start..start + p;
                start += p;
                r
            })
            .collect()
    }
}

impl From<Vec<usize>> for Composition {
    fn from(parts: Vec<usize>) -> Self {
        Composition::new(parts)
    }
}

/// All partitions of `n`, from `(n)` down to `(1^n)` (reverse lexicographic).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `lambda[n] = (n - |lambda|, lambda_1, lambda_2, ...)`.
pub fn pad(lambda: &Partition, n: usize) -> Result<Partition, Error> {
    let min = lambda.size() + lambda.first();
    if n < min {
        return Err(Error::PadRange { n, min });
    }
    let mut parts = Vec::with_capacity(lambda.len() + 1);
    parts.push(n - lambda.size());
    parts.extend_from_slice(&lambda.parts);
    Partition::new(parts)
}

/// The tail `(mu_2, mu_3, ...)`.
pub fn unpad(mu: &Partition) -> Partition {
    Partition {
        parts: mu.parts.iter().skip(1).copied().collect(),
    }
}

/// All `mu` obtained from `lambda` by adding `m` boxes, no two in one column.
/// Returned in reverse lexicographic order.
pub fn pieri_add(lambda: &Partition, m: usize) -> Vec<Partition> {
    // row i may grow up to lambda_{i-1}; row 1 is unbounded; one new row allowed
    fn go(lambda: &[usize], row: usize, rest: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let base = lambda.get(row).copied().unwrap_or(0);
        if row > lambda.len() {
            if rest == 0 {
                out.push(Partition::new(acc.clone()).expect("horizontal strip is a partition"));
            }
            return;
        }
        let cap = if row == 0 {
            rest
        } else {
            (lambda[row - 1] - base).min(rest)
        };
        for add in (0..=cap).rev() {
            acc.push(base + add);
            go(lambda, row + 1, rest - add, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(&lambda.parts, 0, m, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

/// Number of standard Young tableaux of shape `lambda` (hook length formula).
pub fn syt_count(lambda: &Partition) -> u64 {
    let n = lambda.size() as u128;
    let mut num: u128 = (1..=n).product();
    for (r, &len) in lambda.parts.iter().enumerate() {
        for c in 0..len {
            num /= lambda.hook(r, c) as u128;
        }
    }
    num as u64
}

/// A standard Young tableau, stored by rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(Vec::len).collect(),
        }
    }

    /// 0-based `(row, col)` of entry `k`.
    pub fn position(&self, k: usize) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&x| x == k).map(|c| (r, c)))
    }

    /// Content `col - row` of entry `k`.
    pub fn content(&self, k: usize) -> Option<i64> {
        self.position(k).map(|(r, c)| c as i64 - r as i64)
    }

    /// The filling with `i` and `i + 1` exchanged (may not be standard).
    pub fn swapped(&self, i: usize) -> StandardTableau {
        StandardTableau {
            rows: self
                .rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&x| {
                            if x == i {
                                i + 1
                            } else if x == i + 1 {
                                i
                            } else {
                                x
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|pair| pair[1].iter().zip(&pair[0]).all(|(below, above)| above < below));
        rows_ok && cols_ok
    }
}

/// All standard tableaux of shape `lambda`: recursively place the largest
/// entry in each removable corner, corners taken top to bottom.
pub fn syt_enumerate(lambda: &Partition) -> Result<Vec<StandardTableau>, Error> {
    syt_enumerate_bounded(lambda, SYT_BOUND)
}

pub fn syt_enumerate_bounded(lambda: &Partition, bound: usize) -> Result<Vec<StandardTableau>, Error> {
    if lambda.size() > bound {
        return Err(Error::SizeBound {
            size: lambda.size(),
            bound,
        });
    }
    fn go(shape: &Partition) -> Vec<StandardTableau> {
        let n = shape.size();
        if n == 0 {
            return vec![StandardTableau { rows: Vec::new() }];
        }
        let mut out = Vec::new();
        for r in shape.removable_rows() {
            for mut t in go(&shape.remove_from_row(r)) {
                if t.rows.len() <= r {
                    t.rows.push(Vec::new());
                }
                t.rows[r].push(n);
                out.push(t);
            }
        }
        out
    }
    Ok(go(lambda))
}

/// Predicted decomposition of the module induced from `S^lambda (x) index`
/// up to rank `n`: multiplicity one on each horizontal-strip extension.
pub fn stable_multiplicity_oracle(lambda: &Partition, n: usize) -> Result<BTreeMap<Partition, usize>, Error> {
    let m = n
        .checked_sub(lambda.size())
        .ok_or_else(|| Error::Range(alloc::format!("n = {n} < |lambda| = {}", lambda.size())))?;
    Ok(pieri_add(lambda, m).into_iter().map(|mu| (mu, 1)).collect())
}

/// A row-standard filling: row `i` has `lambda_i` weakly increasing entries,
/// and value `j` (1-based) occurs `mu_j` times in total.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RowStandardTableau {
    pub rows: Vec<Vec<usize>>,
}

/// All row-standard `lambda`-tableaux of type `mu`; these correspond to
/// nonnegative integer matrices with row sums `lambda` and column sums `mu`.
pub fn row_standard_tableaux(lambda: &Composition, mu: &Composition) -> Result<Vec<RowStandardTableau>, Error> {
    if lambda.size() != mu.size() {
        return Err(Error::CompositionSize {
            expected: lambda.size(),
            got: mu.size(),
        });
    }
    fn fill_row(
        row_len: usize,
        value: usize,
        remaining: &mut Vec<usize>,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == row_len {
            out.push(current.clone());
            return;
        }
        for v in value..remaining.len() {
            if remaining[v] == 0 {
                continue;
            }
            remaining[v] -= 1;
            current.push(v + 1);
            fill_row(row_len, v, remaining, current, out);
            current.pop();
            remaining[v] += 1;
        }
    }
    fn go(lambda: &[usize], remaining: &mut Vec<usize>, rows: &mut Vec<Vec<usize>>, out: &mut Vec<RowStandardTableau>) {
        let Some((&len, rest)) = lambda.split_first() else {
            out.push(RowStandardTableau { rows: rows.clone() });
            return;
        };
        let mut choices = Vec::new();
        fill_row(len, 0, remaining, &mut Vec::new(), &mut choices);
        for row in choices {
            for &v in &row {
                remaining[v - 1] -= 1;
            }
            rows.push(row.clone());
            go(rest, remaining, rows, out);
            rows.pop();
            for &v in &row {
                remaining[v - 1] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&lambda.parts, &mut mu.parts.clone(), &mut Vec::new(), &mut out);
    Ok(out)
}

/// Parses a space- or comma-separated list of indices such as `"1 2 1"`.
pub fn parse_word(s: &str) -> Result<Vec<usize>, Error> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Range(alloc::format!("bad index {t:?}")))
        })
        .collect()
}

/// The set of partitions appearing as keys, for quick membership tests.
pub fn key_set<V>(m: &BTreeMap<Partition, V>) -> BTreeSet<Partition> {
    m.keys().cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn pad_examples() {
        assert_eq!(pad(&Partition::empty(), 5).unwrap(), p(&[5]));
        assert_eq!(pad(&p(&[2, 1]), 6).unwrap(), p(&[3, 2, 1]));
        assert_eq!(pad(&p(&[2]), 3), Err(Error::PadRange { n: 3, min: 4 }));
    }

    #[test]
    fn unpad_examples() {
        assert_eq!(unpad(&p(&[5])), Partition::empty());
        assert_eq!(unpad(&p(&[3, 2, 1])), p(&[2, 1]));
        assert_eq!(unpad(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_add(&p(&[1]), 2), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(pieri_add(&p(&[3, 1]), 0), vec![p(&[3, 1])]);
        assert_eq!(pieri_add(&p(&[1, 1]), 1), vec![p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn syt_examples() {
        assert_eq!(syt_count(&p(&[5])), 1);
        assert_eq!(syt_count(&p(&[2, 1])), 2);
        assert_eq!(syt_count(&p(&[2, 2])), 2);
        assert_eq!(syt_enumerate(&p(&[1, 1, 1])).unwrap().len(), 1);
        assert_eq!(syt_enumerate(&p(&[2, 1])).unwrap().len(), 2);
        assert_eq!(syt_enumerate(&p(&[2, 2])).unwrap().len(), 2);
        assert!(matches!(syt_enumerate(&p(&[9])), Err(Error::SizeBound { .. })));
    }

    #[test]
    fn syt_order_is_corner_recursive() {
        let ts = syt_enumerate(&p(&[2, 1])).unwrap();
        // first corner (row 0) holds 3 in the first tableau
        assert_eq!(ts[0].rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(ts[1].rows(), &[vec![1, 2], vec![3]]);
        assert!(ts.iter().all(StandardTableau::is_standard));
    }

    #[test]
    fn oracle_examples() {
        let o = stable_multiplicity_oracle(&p(&[1]), 4).unwrap();
        assert_eq!(o.len(), 2);
        assert_eq!(o[&p(&[4])], 1);
        assert_eq!(o[&p(&[3, 1])], 1);
        assert_eq!(
            key_set(&stable_multiplicity_oracle(&Partition::empty(), 3).unwrap()),
            [p(&[3])].into_iter().collect()
        );
        let o = stable_multiplicity_oracle(&p(&[2, 1]), 6).unwrap();
        let expected: BTreeSet<_> = [p(&[5, 1]), p(&[4, 2]), p(&[4, 1, 1]), p(&[3, 2, 1])]
            .into_iter()
            .collect();
        assert_eq!(key_set(&o), expected);
        assert!(stable_multiplicity_oracle(&p(&[2]), 1).is_err());
    }

    #[test]
    fn row_standard_examples() {
        let c = |v: &[usize]| Composition::new(v.to_vec());
        assert_eq!(row_standard_tableaux(&c(&[3]), &c(&[3])).unwrap().len(), 1);
        assert_eq!(row_standard_tableaux(&c(&[2, 1]), &c(&[2, 1])).unwrap().len(), 2);
        assert_eq!(row_standard_tableaux(&c(&[1, 1]), &c(&[1, 1])).unwrap().len(), 2);
        assert!(row_standard_tableaux(&c(&[2]), &c(&[1])).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 1]).to_string(), "3,1");
        assert_eq!(parse_word("1 2,1").unwrap(), vec![1, 2, 1]);
    }

    #[test]
    fn partitions_of_four() {
        let ps = partitions_of(4);
        assert_eq!(ps.len(), 5);
        assert_eq!(ps[0], p(&[4]));
        assert_eq!(ps[4], p(&[1, 1, 1, 1]));
    }
}
