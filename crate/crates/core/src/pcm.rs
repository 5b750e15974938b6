//! Real-valued pairwise comparison matrices over a scale: reciprocity,
//! consistency, the consistency index, and row/column permutation.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::group::{AloGroup, GroupElement, Tolerance};

/// A bijection on `{0, …, n−1}` used to relabel the compared alternatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            map: (0..n).collect(),
        }
    }

    /// Builds a permutation from its zero-based image vector, rejecting
    /// anything that is not a bijection.
    pub fn new(map: Vec<usize>) -> Result<Permutation> {
        let mut seen = vec![false; map.len()];
        for &target in &map {
            if target >= map.len() || seen[target] {
                return Err(Error::InvalidArgument(format!(
                    "{map:?} is not a permutation of 0..{}",
                    map.len()
                )));
            }
            seen[target] = true;
        }
        Ok(Permutation { map })
    }

    /// Builds a permutation from one-based indices, the convention used in
    /// files and command-line output.
    pub fn from_one_based(indices: &[usize]) -> Result<Permutation> {
        let map = indices
            .iter()
            .map(|&i| {
                i.checked_sub(1)
                    .ok_or_else(|| Error::InvalidArgument("one-based permutation index 0".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(map)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// The image of index `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.map.iter().map(|&i| i + 1).collect()
    }

    /// All permutations of `{0, …, n−1}` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(|map| Permutation { map })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in &self.map {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{}", i + 1)?;
            first = false;
        }
        Ok(())
    }
}

/// A square matrix of preference intensities over one scale, with identity
/// diagonal.
///
/// Reciprocity is a checkable predicate, not a construction invariant:
/// non-reciprocal matrices are valid values so that they can be loaded,
/// inspected, and reported on.
#[derive(Clone, Debug)]
pub struct Pcm {
    group: AloGroup,
    n: usize,
    entries: Vec<GroupElement>,
}

impl Pcm {
    /// Builds a PCM from row-major raw values.
    ///
    /// The matrix must be square of order at least 2, every value must lie
    /// in the open domain, and each diagonal entry must equal the identity
    /// within `tol` (it is then stored as the exact identity).
    pub fn from_rows(group: &AloGroup, rows: &[Vec<f64>], tol: Tolerance) -> Result<Pcm> {
        let n = rows.len();
        let mut elements = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::InvalidArgument(format!(
                    "matrix is not square: {n} rows but a row of length {}",
                    row.len()
                )));
            }
            for &value in row {
                elements.push(group.element(value)?);
            }
        }
        Pcm::from_elements(group.clone(), n, elements, tol)
    }

    /// Builds a PCM from already-tagged elements in row-major order.
    pub fn from_elements(
        group: AloGroup,
        n: usize,
        mut entries: Vec<GroupElement>,
        tol: Tolerance,
    ) -> Result<Pcm> {
        if n < 2 {
            return Err(Error::OrderTooSmall { n, min: 2 });
        }
        if entries.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries for an order-{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        let identity = group.identity();
        for (idx, entry) in entries.iter_mut().enumerate() {
            group.to_additive(*entry)?;
            if idx / n == idx % n {
                if !group.eq_within(*entry, identity, tol)? {
                    return Err(Error::InvalidArgument(format!(
                        "diagonal entry ({i}, {i}) = {} is not the identity {}",
                        entry.value(),
                        identity.value(),
                        i = idx / n + 1,
                    )));
                }
                *entry = identity;
            }
        }
        Ok(Pcm { group, n, entries })
    }

    pub fn group(&self) -> &AloGroup {
        &self.group
    }

    /// The order `n` of the matrix.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> GroupElement {
        self.entries[i * self.n + j]
    }

    /// Row-major raw values, used for serialization.
    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j).value()).collect())
            .collect()
    }

    fn coord(&self, i: usize, j: usize) -> f64 {
        // Entries are validated at construction, so the tag check cannot fail.
        self.group
            .to_additive(self.entry(i, j))
            .expect("entry tagged with the matrix scale")
    }

    /// Whether `a_ji = a_ij^(−1)` within `tol` for every pair.
    pub fn is_reciprocal(&self, tol: Tolerance) -> bool {
        (0..self.n)
            .tuple_combinations()
            .all(|(i, j)| (self.coord(i, j) + self.coord(j, i)).abs() <= tol.value())
    }

    fn require_reciprocal(&self, tol: Tolerance) -> Result<()> {
        if self.is_reciprocal(tol) {
            Ok(())
        } else {
            Err(Error::NotReciprocal)
        }
    }

    /// Whether `a_ik = a_ij ⊙ a_jk` for every triad. Requires reciprocity,
    /// which reduces the check to `i < j < k`.
    pub fn is_consistent(&self, tol: Tolerance) -> Result<bool> {
        self.require_reciprocal(tol)?;
        Ok((0..self.n).tuple_combinations().all(|(i, j, k)| {
            (self.coord(i, k) - self.coord(i, j) - self.coord(j, k)).abs() <= tol.value()
        }))
    }

    /// The consistency index: the group mean, over the `n(n−1)(n−2)/6`
    /// triads `i < j < k`, of the distance between `a_ik` and `a_ij ⊙ a_jk`.
    /// Equals the identity exactly for consistent matrices and exceeds it
    /// otherwise.
    pub fn consistency_index(&self, tol: Tolerance) -> Result<GroupElement> {
        self.require_reciprocal(tol)?;
        if self.n < 3 {
            return Err(Error::OrderTooSmall { n: self.n, min: 3 });
        }
        let mut distances = Vec::new();
        for (i, j, k) in (0..self.n).tuple_combinations() {
            let chained = self.group.op(self.entry(i, j), self.entry(j, k))?;
            distances.push(self.group.distance(self.entry(i, k), chained)?);
        }
        self.group.mean(&distances)
    }

    /// The relabelled matrix with entries `b_ij = a_{σ(i)σ(j)}`.
    pub fn permute(&self, sigma: &Permutation) -> Result<Pcm> {
        if sigma.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "permutation of length {} applied to an order-{} matrix",
                sigma.len(),
                self.n
            )));
        }
        let entries = (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .map(|(i, j)| self.entry(sigma.apply(i), sigma.apply(j)))
            .collect();
        Ok(Pcm {
            group: self.group.clone(),
            n: self.n,
            entries,
        })
    }
}
