//! Interval pairwise comparison matrices: reciprocity, the three consistency
//! conditions and their inclusion relations, the consistency index, and the
//! indeterminacy index.
//!
//! The three consistency conditions, from strongest to weakest:
//!
//! * **Liu consistency** — the two boundary matrices `L` (lower endpoints
//!   above the diagonal) and `R` (upper endpoints above the diagonal) are
//!   both consistent PCMs. Depends on how the alternatives are labelled.
//! * **Approximate consistency** — some relabelling of the alternatives
//!   makes the matrix Liu-consistent.
//! * **Full consistency** — the triple products `ã_ij ⊙ ã_jk ⊙ ã_ki` and
//!   `ã_ik ⊙ ã_kj ⊙ ã_ji` coincide for every index triple. Invariant under
//!   relabelling, and the only one of the three that does not force
//!   reciprocity.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::group::{AloGroup, GroupElement, IsoMap, Tolerance};
use crate::interval::GInterval;
use crate::pcm::{Pcm, Permutation};

/// Default cap on the order accepted by the exhaustive witness search in
/// [`Ipcm::approx_consistency`].
pub const DEFAULT_PERMUTATION_CAP: usize = 8;

/// A square matrix of intervals over one scale, with point-identity diagonal.
///
/// As with [`Pcm`], reciprocity is a predicate rather than a construction
/// invariant, so consistent-but-not-reciprocal matrices are representable.
#[derive(Clone, Debug)]
pub struct Ipcm {
    group: AloGroup,
    n: usize,
    entries: Vec<GInterval>,
}

/// The boundary matrices of an interval matrix: `l` carries lower endpoints
/// above the diagonal and upper endpoints below it; `r` the reverse. Both
/// are reciprocal PCMs whenever the source matrix is reciprocal.
#[derive(Clone, Debug)]
pub struct LrPair {
    pub l: Pcm,
    pub r: Pcm,
}

/// The two cycle products and their distance for one index triple `i < j < k`.
#[derive(Clone, Copy, Debug)]
pub struct TriadDistance {
    /// Zero-based indices, `i < j < k`.
    pub indices: (usize, usize, usize),
    /// `ã_ij ⊙ ã_jk ⊙ ã_ki` — the product around the cycle i → j → k → i.
    pub forward: GInterval,
    /// `ã_ik ⊙ ã_kj ⊙ ã_ji` — the product around the reversed cycle.
    pub reverse: GInterval,
    /// Interval distance between the two products; identity iff the triple
    /// satisfies the full-consistency condition.
    pub distance: GroupElement,
}

/// Per-triad distances for a whole matrix.
#[derive(Clone, Debug)]
pub struct TriadDistances {
    triads: Vec<TriadDistance>,
}

impl TriadDistances {
    pub fn as_slice(&self) -> &[TriadDistance] {
        &self.triads
    }

    pub fn len(&self) -> usize {
        self.triads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triads.is_empty()
    }

    /// The distance recorded for the triple `(i, j, k)`, if present.
    pub fn get(&self, i: usize, j: usize, k: usize) -> Option<&TriadDistance> {
        self.triads.iter().find(|t| t.indices == (i, j, k))
    }
}

impl Ipcm {
    /// Builds an interval matrix from row-major `[lo, hi]` raw values.
    ///
    /// The matrix must be square of order at least 2; every endpoint must be
    /// in the open domain with `lo ≤ hi` (up to `tol`); each diagonal entry
    /// must be a point interval at the identity within `tol` (it is then
    /// stored as exactly `[e, e]`).
    pub fn from_rows(group: &AloGroup, rows: &[Vec<[f64; 2]>], tol: Tolerance) -> Result<Ipcm> {
        let n = rows.len();
        let mut intervals = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::InvalidArgument(format!(
                    "matrix is not square: {n} rows but a row of length {}",
                    row.len()
                )));
            }
            for &[lo, hi] in row {
                intervals.push(GInterval::from_values(group, lo, hi, tol)?);
            }
        }
        Ipcm::from_intervals(group.clone(), n, intervals, tol)
    }

    /// Builds an interval matrix from already-constructed intervals in
    /// row-major order.
    pub fn from_intervals(
        group: AloGroup,
        n: usize,
        mut entries: Vec<GInterval>,
        tol: Tolerance,
    ) -> Result<Ipcm> {
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
        let identity = GInterval::point(group.identity());
        for (idx, entry) in entries.iter_mut().enumerate() {
            group.to_additive(entry.lo())?;
            if idx / n == idx % n {
                if !entry.eq_within(&group, &identity, tol)? {
                    return Err(Error::InvalidArgument(format!(
                        "diagonal entry ({i}, {i}) = [{}, {}] is not the identity point",
                        entry.lo().value(),
                        entry.hi().value(),
                        i = idx / n + 1,
                    )));
                }
                *entry = identity;
            }
        }
        Ok(Ipcm { group, n, entries })
    }

    /// Embeds a PCM as the matrix of its point intervals.
    pub fn from_pcm(pcm: &Pcm) -> Ipcm {
        let n = pcm.order();
        let entries = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| GInterval::point(pcm.entry(i, j)))
            .collect();
        Ipcm {
            group: pcm.group().clone(),
            n,
            entries,
        }
    }

    pub fn group(&self) -> &AloGroup {
        &self.group
    }

    /// The order `n` of the matrix.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> GInterval {
        self.entries[i * self.n + j]
    }

    /// Row-major raw `[lo, hi]` values, used for serialization.
    pub fn rows(&self) -> Vec<Vec<[f64; 2]>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let e = self.entry(i, j);
                        [e.lo().value(), e.hi().value()]
                    })
                    .collect()
            })
            .collect()
    }

    /// Additive coordinates of an entry's endpoints.
    fn coords(&self, i: usize, j: usize) -> (f64, f64) {
        let e = self.entry(i, j);
        let lo = self
            .group
            .to_additive(e.lo())
            .expect("entry tagged with the matrix scale");
        let hi = self
            .group
            .to_additive(e.hi())
            .expect("entry tagged with the matrix scale");
        (lo, hi)
    }

    /// Whether `ã_ji` is the reciprocal interval of `ã_ij` within `tol` for
    /// every pair; equivalently `a_ij⁻ ⊙ a_ji⁺ = a_ij⁺ ⊙ a_ji⁻ = e`.
    pub fn is_reciprocal(&self, tol: Tolerance) -> bool {
        (0..self.n).tuple_combinations().all(|(i, j)| {
            let (lo_ij, hi_ij) = self.coords(i, j);
            let (lo_ji, hi_ji) = self.coords(j, i);
            (lo_ij + hi_ji).abs() <= tol.value() && (hi_ij + lo_ji).abs() <= tol.value()
        })
    }

    fn require_reciprocal(&self, tol: Tolerance) -> Result<()> {
        if self.is_reciprocal(tol) {
            Ok(())
        } else {
            Err(Error::NotReciprocal)
        }
    }

    /// If every entry is a point interval, the PCM the matrix degenerates
    /// to; `None` otherwise. Requires reciprocity.
    pub fn degenerate_pcm(&self, tol: Tolerance) -> Result<Option<Pcm>> {
        self.require_reciprocal(tol)?;
        for entry in &self.entries {
            if !entry.is_point(&self.group, tol)? {
                return Ok(None);
            }
        }
        let values = self.entries.iter().map(|e| e.lo()).collect();
        Pcm::from_elements(self.group.clone(), self.n, values, tol).map(Some)
    }

    /// The relabelled matrix with entries `b̃_ij = ã_{σ(i)σ(j)}`. Preserves
    /// reciprocity.
    pub fn permute(&self, sigma: &Permutation) -> Result<Ipcm> {
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
        Ok(Ipcm {
            group: self.group.clone(),
            n: self.n,
            entries,
        })
    }

    /// The boundary matrices of the matrix relabelled by `sigma` (identity
    /// when `None`). Requires reciprocity.
    pub fn lr(&self, sigma: Option<&Permutation>, tol: Tolerance) -> Result<LrPair> {
        self.require_reciprocal(tol)?;
        let identity = Permutation::identity(self.n);
        let sigma = sigma.unwrap_or(&identity);
        let permuted = self.permute(sigma)?;
        let e = self.group.identity();
        let mut l = Vec::with_capacity(self.n * self.n);
        let mut r = Vec::with_capacity(self.n * self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let entry = permuted.entry(i, j);
                match i.cmp(&j) {
                    std::cmp::Ordering::Less => {
                        l.push(entry.lo());
                        r.push(entry.hi());
                    }
                    std::cmp::Ordering::Equal => {
                        l.push(e);
                        r.push(e);
                    }
                    std::cmp::Ordering::Greater => {
                        l.push(entry.hi());
                        r.push(entry.lo());
                    }
                }
            }
        }
        Ok(LrPair {
            l: Pcm::from_elements(self.group.clone(), self.n, l, tol)?,
            r: Pcm::from_elements(self.group.clone(), self.n, r, tol)?,
        })
    }

    /// Liu consistency: both boundary matrices (under the identity
    /// labelling) are consistent PCMs. Not invariant under relabelling.
    pub fn is_liu_consistent(&self, tol: Tolerance) -> Result<bool> {
        let pair = self.lr(None, tol)?;
        Ok(pair.l.is_consistent(tol)? && pair.r.is_consistent(tol)?)
    }

    /// Searches all `n!` relabellings in lexicographic order for one that
    /// makes the matrix Liu-consistent, returning the first witness found.
    ///
    /// Refuses to search above `cap` (see [`DEFAULT_PERMUTATION_CAP`]):
    /// above it the factorial blow-up makes exhaustive search unreasonable,
    /// and no heuristic replacement is offered.
    pub fn approx_consistency(&self, tol: Tolerance, cap: usize) -> Result<Option<Permutation>> {
        self.require_reciprocal(tol)?;
        if self.n > cap {
            return Err(Error::OrderTooLargeForSearch { n: self.n, cap });
        }
        for sigma in Permutation::all(self.n) {
            let pair = self.lr(Some(&sigma), tol)?;
            if pair.l.is_consistent(tol)? && pair.r.is_consistent(tol)? {
                return Ok(Some(sigma));
            }
        }
        Ok(None)
    }

    /// Full consistency checked straight from its definition: the two cycle
    /// products agree, endpoint by endpoint, for every ordered index triple.
    /// Makes no reciprocity assumption.
    pub fn full_consistent_all_triples(&self, tol: Tolerance) -> bool {
        let idx = 0..self.n;
        idx.clone()
            .cartesian_product(idx.clone())
            .cartesian_product(idx)
            .all(|((i, j), k)| {
                let (lo_ij, hi_ij) = self.coords(i, j);
                let (lo_jk, hi_jk) = self.coords(j, k);
                let (lo_ki, hi_ki) = self.coords(k, i);
                let (lo_ik, hi_ik) = self.coords(i, k);
                let (lo_kj, hi_kj) = self.coords(k, j);
                let (lo_ji, hi_ji) = self.coords(j, i);
                let lo_gap = (lo_ij + lo_jk + lo_ki) - (lo_ik + lo_kj + lo_ji);
                let hi_gap = (hi_ij + hi_jk + hi_ki) - (hi_ik + hi_kj + hi_ji);
                lo_gap.abs() <= tol.value() && hi_gap.abs() <= tol.value()
            })
    }

    /// Full consistency. For reciprocal matrices this uses the equivalent
    /// endpoint-product condition `a_ik⁻ ⊙ a_ik⁺ = a_ij⁻ ⊙ a_ij⁺ ⊙ a_jk⁻ ⊙
    /// a_jk⁺` over `i < j < k`; for non-reciprocal matrices it falls back to
    /// [`Ipcm::full_consistent_all_triples`].
    pub fn is_full_consistent(&self, tol: Tolerance) -> bool {
        if !self.is_reciprocal(tol) {
            return self.full_consistent_all_triples(tol);
        }
        (0..self.n).tuple_combinations().all(|(i, j, k)| {
            let sum = |i: usize, j: usize| {
                let (lo, hi) = self.coords(i, j);
                lo + hi
            };
            (sum(i, k) - sum(i, j) - sum(j, k)).abs() <= tol.value()
        })
    }

    /// The cycle products and their distances for every triple `i < j < k`.
    /// Requires reciprocity.
    pub fn triads(&self, tol: Tolerance) -> Result<TriadDistances> {
        self.require_reciprocal(tol)?;
        let mut triads = Vec::new();
        for (i, j, k) in (0..self.n).tuple_combinations() {
            let forward = self
                .entry(i, j)
                .mul(&self.group, &self.entry(j, k))?
                .mul(&self.group, &self.entry(k, i))?;
            let reverse = self
                .entry(i, k)
                .mul(&self.group, &self.entry(k, j))?
                .mul(&self.group, &self.entry(j, i))?;
            let distance = forward.distance_to(&self.group, &reverse)?;
            triads.push(TriadDistance {
                indices: (i, j, k),
                forward,
                reverse,
                distance,
            });
        }
        Ok(TriadDistances { triads })
    }

    /// The consistency index: the group mean of the per-triad distances.
    /// At least the identity, with equality iff the matrix is fully
    /// consistent. Requires reciprocity and order at least 3.
    pub fn consistency_index(&self, tol: Tolerance) -> Result<GroupElement> {
        if self.n < 3 {
            return Err(Error::OrderTooSmall { n: self.n, min: 3 });
        }
        let triads = self.triads(tol)?;
        let distances: Vec<GroupElement> = triads.as_slice().iter().map(|t| t.distance).collect();
        self.group.mean(&distances)
    }

    /// The indeterminacy value of one entry: the distance between its
    /// endpoints, `a_ij⁺ ÷ a_ij⁻` for a true interval.
    pub fn entry_indeterminacy(&self, i: usize, j: usize) -> GroupElement {
        let e = self.entry(i, j);
        self.group
            .distance(e.lo(), e.hi())
            .expect("entry tagged with the matrix scale")
    }

    /// The indeterminacy index: the group mean of the `n(n−1)` off-diagonal
    /// indeterminacy values. Reciprocity makes `δ(ã_ij) = δ(ã_ji)`, so the
    /// index is computed from the upper triangle, each value counted twice.
    /// At least the identity, with equality iff every entry is a point.
    pub fn indeterminacy_index(&self, tol: Tolerance) -> Result<GroupElement> {
        self.require_reciprocal(tol)?;
        let mut deltas = Vec::with_capacity(self.n * (self.n - 1));
        for (i, j) in (0..self.n).tuple_combinations() {
            let delta = self.entry_indeterminacy(i, j);
            deltas.push(delta);
            deltas.push(delta);
        }
        self.group.mean(&deltas)
    }

    /// Maps every endpoint through the isomorphism, producing the matrix on
    /// the target scale. Preserves reciprocity and all three consistency
    /// verdicts; both indices commute with the map.
    pub fn transport(&self, iso: &IsoMap) -> Result<Ipcm> {
        if iso.source().id() != self.group.id() {
            return Err(Error::ScaleMismatch {
                expected: iso.source().id(),
                found: self.group.id(),
            });
        }
        let target = iso.target().clone();
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            let lo = iso.apply(e.lo())?;
            let hi = iso.apply(e.hi())?;
            entries.push(GInterval::new(&target, lo, hi, Tolerance::DEFAULT)?);
        }
        Ipcm::from_intervals(target, self.n, entries, Tolerance::DEFAULT)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance::DEFAULT
    }

    /// 3x3 multiplicative matrix with the wide (1,3) entry.
    fn mult_3x3() -> Ipcm {
        Ipcm::from_rows(
            &AloGroup::multiplicative(),
            &[
                vec![[1.0, 1.0], [0.25, 0.5], [6.0, 7.0]],
                vec![[2.0, 4.0], [1.0, 1.0], [3.0, 5.0]],
                vec![[1.0 / 7.0, 1.0 / 6.0], [0.2, 1.0 / 3.0], [1.0, 1.0]],
            ],
            tol(),
        )
        .unwrap()
    }

    /// 3x3 additive matrix that is approximately but not Liu consistent.
    fn additive_3x3() -> Ipcm {
        Ipcm::from_rows(
            &AloGroup::additive(),
            &[
                vec![[0.0, 0.0], [4.0, 7.0], [2.0, 4.0]],
                vec![[-7.0, -4.0], [0.0, 0.0], [-3.0, -2.0]],
                vec![[-4.0, -2.0], [2.0, 3.0], [0.0, 0.0]],
            ],
            tol(),
        )
        .unwrap()
    }

    /// 3x3 fuzzy matrix.
    fn fuzzy_3x3() -> Ipcm {
        Ipcm::from_rows(
            &AloGroup::fuzzy(),
            &[
                vec![[0.5, 0.5], [0.6, 0.7], [0.7, 0.8]],
                vec![[0.3, 0.4], [0.5, 0.5], [0.6, 0.8]],
                vec![[0.2, 0.3], [0.2, 0.4], [0.5, 0.5]],
            ],
            tol(),
        )
        .unwrap()
    }

    /// The Liu-consistent additive matrix and its swap-relabelled variant.
    fn liu_pair() -> (Ipcm, Ipcm) {
        let a = Ipcm::from_rows(
            &AloGroup::additive(),
            &[
                vec![[0.0, 0.0], [2.0, 4.0], [4.0, 7.0]],
                vec![[-4.0, -2.0], [0.0, 0.0], [2.0, 3.0]],
                vec![[-7.0, -4.0], [-3.0, -2.0], [0.0, 0.0]],
            ],
            tol(),
        )
        .unwrap();
        let sigma = Permutation::from_one_based(&[2, 1, 3]).unwrap();
        let permuted = a.permute(&sigma).unwrap();
        (a, permuted)
    }

    /// Multiplicative matrix that is fully consistent but not reciprocal.
    fn nonreciprocal_consistent() -> Ipcm {
        Ipcm::from_rows(
            &AloGroup::multiplicative(),
            &[
                vec![[1.0, 1.0], [2.0, 10.0], [6.0, 40.0]],
                vec![[0.2, 0.5], [1.0, 1.0], [3.0, 4.0]],
                vec![[0.025, 1.0 / 6.0], [0.125, 1.0 / 3.0], [1.0, 1.0]],
            ],
            tol(),
        )
        .unwrap()
    }

    /// Additive matrix that is fully consistent but not approximately so.
    fn wide_additive() -> Ipcm {
        Ipcm::from_rows(
            &AloGroup::additive(),
            &[
                vec![[0.0, 0.0], [0.0, 1.0], [0.0, 1.0]],
                vec![[-1.0, 0.0], [0.0, 0.0], [-2.0, 2.0]],
                vec![[-1.0, 0.0], [-2.0, 2.0], [0.0, 0.0]],
            ],
            tol(),
        )
        .unwrap()
    }

    #[test]
    fn reciprocity_examples() {
        assert!(mult_3x3().is_reciprocal(tol()));
        assert!(fuzzy_3x3().is_reciprocal(tol()));
        assert!(!nonreciprocal_consistent().is_reciprocal(tol()));
    }

    #[test]
    fn degeneration_examples() {
        let g = AloGroup::additive();
        let point = Ipcm::from_rows(
            &g,
            &[
                vec![[0.0, 0.0], [2.0, 2.0], [4.0, 4.0]],
                vec![[-2.0, -2.0], [0.0, 0.0], [2.0, 2.0]],
                vec![[-4.0, -4.0], [-2.0, -2.0], [0.0, 0.0]],
            ],
            tol(),
        )
        .unwrap();
        let pcm = point.degenerate_pcm(tol()).unwrap().unwrap();
        assert!(pcm.is_consistent(tol()).unwrap());

        assert!(additive_3x3().degenerate_pcm(tol()).unwrap().is_none());

        let identity_only = Ipcm::from_rows(
            &g,
            &[vec![[0.0, 0.0], [0.0, 0.0]], vec![[0.0, 0.0], [0.0, 0.0]]],
            tol(),
        )
        .unwrap();
        let pcm = identity_only.degenerate_pcm(tol()).unwrap().unwrap();
        assert_eq!(pcm.entry(0, 1).value(), 0.0);
    }

    #[test]
    fn degeneration_matches_product_condition() {
        // A reciprocal matrix degenerates exactly when every entry times its
        // mirror gives the identity point interval.
        let g = AloGroup::additive();
        let identity = GInterval::point(g.identity());
        for matrix in [additive_3x3(), liu_pair().0, wide_additive()] {
            let degenerates = matrix.degenerate_pcm(tol()).unwrap().is_some();
            let product_identity = (0..matrix.order())
                .flat_map(|i| (0..matrix.order()).map(move |j| (i, j)))
                .all(|(i, j)| {
                    matrix
                        .entry(i, j)
                        .mul(&g, &matrix.entry(j, i))
                        .unwrap()
                        .eq_within(&g, &identity, tol())
                        .unwrap()
                });
            assert_eq!(degenerates, product_identity);
        }
    }

    #[test]
    fn permute_examples() {
        let a = additive_3x3();
        let id = Permutation::identity(3);
        let same = a.permute(&id).unwrap();
        assert_eq!(same.entry(0, 1).lo().value(), 4.0);

        // Relabelling with {1,3,2} swaps the wide and narrow entries.
        let sigma = Permutation::from_one_based(&[1, 3, 2]).unwrap();
        let b = a.permute(&sigma).unwrap();
        assert_eq!(b.entry(0, 1).lo().value(), 2.0);
        assert_eq!(b.entry(0, 1).hi().value(), 4.0);
        assert_eq!(b.entry(0, 2).lo().value(), 4.0);
        assert_eq!(b.entry(0, 2).hi().value(), 7.0);
        assert_eq!(b.entry(1, 2).lo().value(), 2.0);
        assert_eq!(b.entry(1, 2).hi().value(), 3.0);
        assert!(b.is_reciprocal(tol()));

        // The swap relabelling of the Liu matrix produces the documented rows.
        let (_, swapped) = liu_pair();
        assert_eq!(swapped.entry(0, 1).lo().value(), -4.0);
        assert_eq!(swapped.entry(0, 1).hi().value(), -2.0);
        assert_eq!(swapped.entry(0, 2).lo().value(), 2.0);
        assert_eq!(swapped.entry(1, 2).lo().value(), 4.0);
    }

    #[test]
    fn lr_examples() {
        let a = mult_3x3();
        let pair = a.lr(None, tol()).unwrap();
        assert_eq!(pair.l.entry(0, 1).value(), 0.25);
        assert_eq!(pair.l.entry(0, 2).value(), 6.0);
        assert_eq!(pair.l.entry(1, 0).value(), 4.0);
        assert_eq!(pair.l.entry(1, 2).value(), 3.0);
        assert_eq!(pair.r.entry(0, 1).value(), 0.5);
        assert_eq!(pair.r.entry(0, 2).value(), 7.0);
        assert_eq!(pair.r.entry(1, 0).value(), 2.0);
        assert_eq!(pair.r.entry(1, 2).value(), 5.0);
        assert!(pair.l.is_reciprocal(tol()));
        assert!(pair.r.is_reciprocal(tol()));

        let sigma = Permutation::from_one_based(&[1, 3, 2]).unwrap();
        let pair = a.lr(Some(&sigma), tol()).unwrap();
        assert_eq!(pair.l.entry(0, 1).value(), 6.0);
        assert_eq!(pair.l.entry(0, 2).value(), 0.25);
        assert_eq!(pair.l.entry(1, 2).value(), 0.2);
        assert_eq!(pair.l.entry(2, 0).value(), 4.0);
        assert_eq!(pair.l.entry(2, 1).value(), 5.0);
        assert_eq!(pair.r.entry(0, 1).value(), 7.0);
        assert_eq!(pair.r.entry(1, 2).value(), 1.0 / 3.0);
        assert_eq!(pair.r.entry(2, 0).value(), 2.0);
        assert_eq!(pair.r.entry(2, 1).value(), 3.0);

        // A point matrix has l = r = the degenerate PCM.
        let g = AloGroup::additive();
        let point = Ipcm::from_rows(
            &g,
            &[vec![[0.0, 0.0], [1.0, 1.0]], vec![[-1.0, -1.0], [0.0, 0.0]]],
            tol(),
        )
        .unwrap();
        let pair = point.lr(None, tol()).unwrap();
        assert_eq!(pair.l.entry(0, 1).value(), pair.r.entry(0, 1).value());
    }

    #[test]
    fn liu_consistency_depends_on_labelling() {
        let (a, permuted) = liu_pair();
        assert!(a.is_liu_consistent(tol()).unwrap());
        assert!(!permuted.is_liu_consistent(tol()).unwrap());

        // The relabelled matrix is still approximately consistent, with the
        // swap itself as the first lexicographic witness.
        let witness = permuted
            .approx_consistency(tol(), DEFAULT_PERMUTATION_CAP)
            .unwrap()
            .unwrap();
        assert_eq!(witness.one_based(), vec![2, 1, 3]);
    }

    #[test]
    fn approx_consistency_examples() {
        let a = additive_3x3();
        assert!(!a.is_liu_consistent(tol()).unwrap());
        let witness = a
            .approx_consistency(tol(), DEFAULT_PERMUTATION_CAP)
            .unwrap()
            .unwrap();
        assert_eq!(witness.one_based(), vec![1, 3, 2]);
        assert!(a
            .permute(&witness)
            .unwrap()
            .is_liu_consistent(tol())
            .unwrap());

        assert!(wide_additive()
            .approx_consistency(tol(), DEFAULT_PERMUTATION_CAP)
            .unwrap()
            .is_none());
    }

    #[test]
    fn approx_consistency_respects_cap() {
        let a = additive_3x3();
        assert!(matches!(
            a.approx_consistency(tol(), 2),
            Err(Error::OrderTooLargeForSearch { n: 3, cap: 2 })
        ));
    }

    #[test]
    fn full_consistency_examples() {
        let counterexample = nonreciprocal_consistent();
        assert!(counterexample.is_full_consistent(tol()));
        assert!(counterexample.full_consistent_all_triples(tol()));
        assert!(!counterexample.is_reciprocal(tol()));

        let wide = wide_additive();
        assert!(wide.is_full_consistent(tol()));
        assert!(wide.full_consistent_all_triples(tol()));

        // The wide-interval 4x4 multiplicative matrix is not consistent.
        let a1 = Ipcm::from_rows(
            &AloGroup::multiplicative(),
            &[
                vec![[1.0, 1.0], [2.0, 5.0], [2.0, 4.0], [1.0, 3.0]],
                vec![[0.2, 0.5], [1.0, 1.0], [1.0, 3.0], [1.0, 2.0]],
                vec![[0.25, 0.5], [1.0 / 3.0, 1.0], [1.0, 1.0], [0.5, 1.0]],
                vec![[1.0 / 3.0, 1.0], [0.5, 1.0], [1.0, 2.0], [1.0, 1.0]],
            ],
            tol(),
        )
        .unwrap();
        assert!(!a1.is_full_consistent(tol()));
    }

    #[test]
    fn triad_examples() {
        let a = mult_3x3();
        let triads = a.triads(tol()).unwrap();
        assert_eq!(triads.len(), 1);
        let t = triads.get(0, 1, 2).unwrap();
        assert!((t.distance.value() - 22.4).abs() < 1e-9);
        assert!((t.forward.lo().value() - 3.0 / 28.0).abs() < 1e-12);
        assert!((t.reverse.lo().value() - 12.0 / 5.0).abs() < 1e-12);

        // Additive Liu matrix: both cycle products are [-3, 3].
        let (liu, _) = liu_pair();
        let t = liu.triads(tol()).unwrap();
        let t = t.get(0, 1, 2).unwrap();
        assert_eq!(t.forward.lo().value(), -3.0);
        assert_eq!(t.forward.hi().value(), 3.0);
        assert_eq!(t.distance.value(), 0.0);

        // Fully consistent matrices have identity distance on every triad.
        let wide = wide_additive();
        for t in wide.triads(tol()).unwrap().as_slice() {
            assert!(t.distance.value().abs() <= 1e-12);
        }
    }

    #[test]
    fn triad_distance_matches_simplified_forms() {
        // For reciprocal matrices the distance equals the norm of the ratio
        // of either pair of matching endpoints.
        let g = AloGroup::multiplicative();
        let a = mult_3x3();
        let t = a.triads(tol()).unwrap();
        let t = t.get(0, 1, 2).unwrap();
        let by_lo = g.distance(t.forward.lo(), t.reverse.lo()).unwrap().value();
        let by_hi = g.distance(t.forward.hi(), t.reverse.hi()).unwrap().value();
        assert!((t.distance.value() - by_lo).abs() < 1e-12);
        assert!((t.distance.value() - by_hi).abs() < 1e-9);
    }

    #[test]
    fn consistency_index_examples() {
        let mult = AloGroup::multiplicative();
        let a1 = Ipcm::from_rows(
            &mult,
            &[
                vec![[1.0, 1.0], [2.0, 5.0], [2.0, 4.0], [1.0, 3.0]],
                vec![[0.2, 0.5], [1.0, 1.0], [1.0, 3.0], [1.0, 2.0]],
                vec![[0.25, 0.5], [1.0 / 3.0, 1.0], [1.0, 1.0], [0.5, 1.0]],
                vec![[1.0 / 3.0, 1.0], [0.5, 1.0], [1.0, 2.0], [1.0, 1.0]],
            ],
            tol(),
        )
        .unwrap();
        let idx = a1.consistency_index(tol()).unwrap();
        assert!((idx.value() - 2.58199).abs() < 1e-4);
        // Exact closed form of the same mean: (400/9)^(1/4).
        assert!((idx.value() - (400.0f64 / 9.0).powf(0.25)).abs() < 1e-12);
    }

    #[test]
    fn consistency_index_requires_order_three() {
        let g = AloGroup::additive();
        let two = Ipcm::from_rows(
            &g,
            &[vec![[0.0, 0.0], [1.0, 2.0]], vec![[-2.0, -1.0], [0.0, 0.0]]],
            tol(),
        )
        .unwrap();
        assert!(matches!(
            two.consistency_index(tol()),
            Err(Error::OrderTooSmall { n: 2, min: 3 })
        ));
        // The indeterminacy index is still defined for order 2.
        let delta = two.indeterminacy_index(tol()).unwrap();
        assert!((delta.value() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn indeterminacy_examples() {
        let mult = AloGroup::multiplicative();
        let a = Ipcm::from_rows(
            &mult,
            &[vec![[1.0, 1.0], [2.0, 5.0]], vec![[0.2, 0.5], [1.0, 1.0]]],
            tol(),
        )
        .unwrap();
        assert!((a.entry_indeterminacy(0, 1).value() - 2.5).abs() < 1e-12);
        assert!((a.entry_indeterminacy(0, 0).value() - 1.0).abs() < 1e-12);

        let add = AloGroup::additive();
        let b = Ipcm::from_rows(
            &add,
            &[vec![[0.0, 0.0], [4.0, 7.0]], vec![[-7.0, -4.0], [0.0, 0.0]]],
            tol(),
        )
        .unwrap();
        assert_eq!(b.entry_indeterminacy(0, 1).value(), 3.0);
    }

    #[test]
    fn indeterminacy_index_examples() {
        let mult = AloGroup::multiplicative();
        let a1 = Ipcm::from_rows(
            &mult,
            &[
                vec![[1.0, 1.0], [2.0, 5.0], [2.0, 4.0], [1.0, 3.0]],
                vec![[0.2, 0.5], [1.0, 1.0], [1.0, 3.0], [1.0, 2.0]],
                vec![[0.25, 0.5], [1.0 / 3.0, 1.0], [1.0, 1.0], [0.5, 1.0]],
                vec![[1.0 / 3.0, 1.0], [0.5, 1.0], [1.0, 2.0], [1.0, 1.0]],
            ],
            tol(),
        )
        .unwrap();
        let delta = a1.indeterminacy_index(tol()).unwrap();
        assert!((delta.value() - 180.0f64.powf(1.0 / 6.0)).abs() < 1e-9);
    }

    #[test]
    fn transport_example() {
        let mult = AloGroup::multiplicative();
        let fuzzy = AloGroup::fuzzy();
        let a = mult_3x3();
        let iso = IsoMap::between(&mult, &fuzzy);
        let mapped = a.transport(&iso).unwrap();
        assert_eq!(mapped.group().id(), fuzzy.id());
        assert!(mapped.is_reciprocal(tol()));
        // 6 maps to 6/7 under x/(1+x).
        assert!((mapped.entry(0, 2).lo().value() - 6.0 / 7.0).abs() < 1e-12);

        // Transporting with a map whose source does not match is rejected.
        let add = AloGroup::additive();
        let wrong = IsoMap::between(&add, &fuzzy);
        assert!(matches!(
            a.transport(&wrong),
            Err(Error::ScaleMismatch { .. })
        ));
    }

    #[test]
    fn diagonal_validation() {
        let g = AloGroup::additive();
        assert!(Ipcm::from_rows(
            &g,
            &[vec![[0.0, 0.5], [1.0, 2.0]], vec![[-2.0, -1.0], [0.0, 0.0]],],
            tol(),
        )
        .is_err());
    }
}
