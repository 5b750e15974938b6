//! Shared helpers for the integration suites: the built-in groups and
//! seeded random matrix generators.
//!
//! All sampling happens in additive coordinates, which is scale-neutral:
//! the same coordinate range exercises comparable regions of every scale.

// Each test binary compiles this module separately and uses a subset of it.
#![allow(dead_code)]
// Triangular fills read more clearly with indices than with iterators.
#![allow(clippy::needless_range_loop)]

use alo_ipcm::{AloGroup, GInterval, GroupElement, Ipcm, Pcm, Permutation, Tolerance};
use rand::Rng;

/// Coordinate range for sampled elements; `exp(±4.5)` spans roughly
/// `[0.011, 90]` on the multiplicative scale and `[0.011, 0.989]` on the
/// fuzzy one. The cap keeps chained products below coordinate ~14, where one
/// unit in the last place of a fuzzy value still stays within the default
/// tolerance in log-odds coordinates.
pub const COORD_RANGE: f64 = 4.5;

pub fn tol() -> Tolerance {
    Tolerance::DEFAULT
}

pub fn groups() -> Vec<AloGroup> {
    vec![
        AloGroup::multiplicative(),
        AloGroup::additive(),
        AloGroup::fuzzy(),
    ]
}

pub fn random_element(group: &AloGroup, rng: &mut impl Rng) -> GroupElement {
    group
        .from_additive(rng.gen_range(-COORD_RANGE..COORD_RANGE))
        .unwrap()
}

fn pcm_from_coords(group: &AloGroup, coords: &[Vec<f64>]) -> Pcm {
    let n = coords.len();
    let entries = coords
        .iter()
        .flatten()
        .map(|&c| group.from_additive(c).unwrap())
        .collect();
    Pcm::from_elements(group.clone(), n, entries, tol()).unwrap()
}

fn ipcm_from_coords(group: &AloGroup, coords: &[Vec<[f64; 2]>]) -> Ipcm {
    let n = coords.len();
    let entries = coords
        .iter()
        .flatten()
        .map(|&[lo, hi]| {
            GInterval::new(
                group,
                group.from_additive(lo).unwrap(),
                group.from_additive(hi).unwrap(),
                tol(),
            )
            .unwrap()
        })
        .collect();
    Ipcm::from_intervals(group.clone(), n, entries, tol()).unwrap()
}

/// Reciprocal PCM with upper-triangle coordinates uniform on
/// `[-range, range]`, mirrored by inversion.
pub fn random_reciprocal_pcm(group: &AloGroup, n: usize, range: f64, rng: &mut impl Rng) -> Pcm {
    let mut coords = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let c = rng.gen_range(-range..range);
            coords[i][j] = c;
            coords[j][i] = -c;
        }
    }
    pcm_from_coords(group, &coords)
}

/// Consistent PCM built from a weight vector: entry coordinates are weight
/// differences.
pub fn random_consistent_pcm(group: &AloGroup, n: usize, range: f64, rng: &mut impl Rng) -> Pcm {
    let weights: Vec<f64> = (0..n)
        .map(|_| rng.gen_range(-range / 2.0..range / 2.0))
        .collect();
    let mut coords = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            coords[i][j] = weights[i] - weights[j];
        }
    }
    pcm_from_coords(group, &coords)
}

/// Reciprocal IPCM: a random reciprocal PCM widened by independent
/// non-negative half-widths in the upper triangle, mirrored by interval
/// reciprocity.
pub fn random_reciprocal_ipcm(
    group: &AloGroup,
    n: usize,
    range: f64,
    max_halfwidth: f64,
    rng: &mut impl Rng,
) -> Ipcm {
    let mut coords = vec![vec![[0.0, 0.0]; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let mid = rng.gen_range(-range..range);
            let h = rng.gen_range(0.0..max_halfwidth);
            coords[i][j] = [mid - h, mid + h];
            coords[j][i] = [-(mid + h), -(mid - h)];
        }
    }
    ipcm_from_coords(group, &coords)
}

/// Liu-consistent IPCM: lower endpoints come from one weight vector, upper
/// endpoints from another, with the difference of the two vectors
/// nondecreasing so that `lo ≤ hi` above the diagonal.
pub fn random_liu_consistent_ipcm(
    group: &AloGroup,
    n: usize,
    range: f64,
    rng: &mut impl Rng,
) -> Ipcm {
    let v: Vec<f64> = (0..n)
        .map(|_| rng.gen_range(-range / 2.0..range / 2.0))
        .collect();
    let mut gaps: Vec<f64> = vec![0.0; n];
    for i in 1..n {
        gaps[i] = gaps[i - 1] + rng.gen_range(0.0..0.5);
    }
    let u: Vec<f64> = v.iter().zip(&gaps).map(|(vi, wi)| vi + wi).collect();
    let mut coords = vec![vec![[0.0, 0.0]; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let lo = u[i] - u[j];
            let hi = v[i] - v[j];
            coords[i][j] = [lo, hi];
            coords[j][i] = [-hi, -lo];
        }
    }
    ipcm_from_coords(group, &coords)
}

/// Fully consistent IPCM: endpoint-sum coordinates come from a weight
/// vector, widths are free.
pub fn random_full_consistent_ipcm(
    group: &AloGroup,
    n: usize,
    range: f64,
    max_halfwidth: f64,
    rng: &mut impl Rng,
) -> Ipcm {
    let weights: Vec<f64> = (0..n)
        .map(|_| rng.gen_range(-range / 2.0..range / 2.0))
        .collect();
    let mut coords = vec![vec![[0.0, 0.0]; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let mid = (weights[i] - weights[j]) / 2.0;
            let h = rng.gen_range(0.0..max_halfwidth);
            coords[i][j] = [mid - h, mid + h];
            coords[j][i] = [-(mid + h), -(mid - h)];
        }
    }
    ipcm_from_coords(group, &coords)
}

pub fn random_permutation(n: usize, rng: &mut impl Rng) -> Permutation {
    let mut map: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        map.swap(i, rng.gen_range(0..=i));
    }
    Permutation::new(map).unwrap()
}
