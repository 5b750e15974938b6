//! Joint interpretation of the consistency and indeterminacy indices:
//! threshold acceptance, quadrant dominance between matrices possibly
//! expressed on different scales, and plot-data emission.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{AloGroup, GroupElement, IsoMap, Tolerance};
use crate::ipcm::Ipcm;

/// The two index values of a matrix, both expressed on one reference scale.
#[derive(Clone, Debug)]
pub struct IndexPoint {
    pub label: String,
    /// Consistency index on the reference scale.
    pub consistency: GroupElement,
    /// Indeterminacy index on the reference scale.
    pub indeterminacy: GroupElement,
}

/// Acceptance thresholds for the two indices, on a chosen reference scale.
/// Both must be at least the identity of that scale.
#[derive(Clone, Copy, Debug)]
pub struct Thresholds {
    pub consistency: GroupElement,
    pub indeterminacy: GroupElement,
}

impl Thresholds {
    pub fn new(
        group: &AloGroup,
        consistency: GroupElement,
        indeterminacy: GroupElement,
        tol: Tolerance,
    ) -> Result<Thresholds> {
        for t in [consistency, indeterminacy] {
            if !group.le_within(group.identity(), t, tol)? {
                return Err(Error::InvalidArgument(format!(
                    "threshold {} is below the identity {} of scale {}",
                    t.value(),
                    group.identity().value(),
                    group.id()
                )));
            }
        }
        Ok(Thresholds {
            consistency,
            indeterminacy,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Accept => "accept",
            Verdict::Reject => "reject",
        })
    }
}

/// Quadrant relation between two index points on the same scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    /// The first point is no worse on both axes and strictly better on one.
    FirstDominates,
    SecondDominates,
    /// Both coordinates coincide within tolerance.
    Equal,
    /// One coordinate is strictly greater and the other strictly smaller.
    Incomparable,
}

/// Computes both indices of a matrix on its native scale, then maps them to
/// the reference scale. Requires a reciprocal matrix of order at least 3.
pub fn evaluate(
    matrix: &Ipcm,
    label: impl Into<String>,
    reference: &AloGroup,
    tol: Tolerance,
) -> Result<IndexPoint> {
    let consistency = matrix.consistency_index(tol)?;
    let indeterminacy = matrix.indeterminacy_index(tol)?;
    let iso = IsoMap::between(matrix.group(), reference);
    Ok(IndexPoint {
        label: label.into(),
        consistency: iso.apply(consistency)?,
        indeterminacy: iso.apply(indeterminacy)?,
    })
}

/// Accepts a point exactly when both of its indices are at or below the
/// thresholds (boundary points accept).
pub fn classify(
    point: &IndexPoint,
    thresholds: &Thresholds,
    group: &AloGroup,
    tol: Tolerance,
) -> Result<Verdict> {
    let within_i = group.le_within(point.consistency, thresholds.consistency, tol)?;
    let within_d = group.le_within(point.indeterminacy, thresholds.indeterminacy, tol)?;
    Ok(if within_i && within_d {
        Verdict::Accept
    } else {
        Verdict::Reject
    })
}

/// Orders two points by quadrant dominance: coordinates equal within `tol`
/// count as ties, and strictness requires exceeding `tol`.
pub fn dominance(
    p: &IndexPoint,
    q: &IndexPoint,
    group: &AloGroup,
    tol: Tolerance,
) -> Result<Dominance> {
    let eq_i = group.eq_within(p.consistency, q.consistency, tol)?;
    let eq_d = group.eq_within(p.indeterminacy, q.indeterminacy, tol)?;
    if eq_i && eq_d {
        return Ok(Dominance::Equal);
    }
    let p_le_i = group.le_within(p.consistency, q.consistency, tol)?;
    let p_le_d = group.le_within(p.indeterminacy, q.indeterminacy, tol)?;
    let q_le_i = group.le_within(q.consistency, p.consistency, tol)?;
    let q_le_d = group.le_within(q.indeterminacy, p.indeterminacy, tol)?;
    if p_le_i && p_le_d {
        Ok(Dominance::FirstDominates)
    } else if q_le_i && q_le_d {
        Ok(Dominance::SecondDominates)
    } else {
        Ok(Dominance::Incomparable)
    }
}

/// Formats `x` with the given number of significant digits, in plain decimal
/// notation.
pub fn format_significant(x: f64, digits: u32) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x:.*}", digits.saturating_sub(1) as usize);
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Renders points as tab-separated rows `label, I, delta[, verdict]`, sorted
/// by label, with six significant digits. The verdict column appears only
/// when thresholds are given.
pub fn plot_data(
    points: &[IndexPoint],
    group: &AloGroup,
    thresholds: Option<&Thresholds>,
    tol: Tolerance,
) -> Result<String> {
    let mut sorted: Vec<&IndexPoint> = points.iter().collect();
    sorted.sort_by(|a, b| a.label.cmp(&b.label));

    let mut out = String::from("label\tI\tdelta");
    if thresholds.is_some() {
        out.push_str("\tverdict");
    }
    out.push('\n');
    for point in sorted {
        // Surfaces a scale mismatch before anything is printed for the row.
        group.to_additive(point.consistency)?;
        group.to_additive(point.indeterminacy)?;
        out.push_str(&point.label);
        out.push('\t');
        out.push_str(&format_significant(point.consistency.value(), 6));
        out.push('\t');
        out.push_str(&format_significant(point.indeterminacy.value(), 6));
        if let Some(t) = thresholds {
            out.push('\t');
            out.push_str(&classify(point, t, group, tol)?.to_string());
        }
        out.push('\n');
    }
    Ok(out)
}
