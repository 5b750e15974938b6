//! Closed intervals over an Alo-group: construction, reciprocal, closed-form
//! arithmetic, the strict partial order, norm, and distance.
//!
//! Because ⊙ is continuous and monotone increasing in both arguments, the
//! set image `{x ⊙ y : x ∈ ã, y ∈ b̃}` of two intervals is itself the
//! interval `[a⁻ ⊙ b⁻, a⁺ ⊙ b⁺]`; multiplication and division below use
//! those closed forms directly.

use crate::error::{Error, Result};
use crate::group::{AloGroup, GroupElement, Tolerance};

/// A closed interval `[lo, hi]` of group elements on a single scale.
///
/// Point intervals (`lo = hi`) embed the underlying group; non-point
/// intervals have no inverse under interval multiplication.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GInterval {
    lo: GroupElement,
    hi: GroupElement,
}

impl GInterval {
    /// Builds `[lo, hi]`, rejecting endpoints on different scales and
    /// endpoints out of order by more than `tol`. Endpoints that differ by
    /// less than `tol` are stored as given, never collapsed.
    pub fn new(
        group: &AloGroup,
        lo: GroupElement,
        hi: GroupElement,
        tol: Tolerance,
    ) -> Result<GInterval> {
        let c_lo = group.to_additive(lo)?;
        let c_hi = group.to_additive(hi)?;
        if c_lo > c_hi + tol.value() {
            return Err(Error::OrderViolation {
                lo: lo.value(),
                hi: hi.value(),
            });
        }
        Ok(GInterval { lo, hi })
    }

    /// Convenience constructor from raw values.
    pub fn from_values(group: &AloGroup, lo: f64, hi: f64, tol: Tolerance) -> Result<GInterval> {
        GInterval::new(group, group.element(lo)?, group.element(hi)?, tol)
    }

    /// The degenerate interval `[a, a]`.
    pub fn point(a: GroupElement) -> GInterval {
        GInterval { lo: a, hi: a }
    }

    pub fn lo(&self) -> GroupElement {
        self.lo
    }

    pub fn hi(&self) -> GroupElement {
        self.hi
    }

    /// Whether the endpoints coincide within `tol` (in additive coordinates).
    pub fn is_point(&self, group: &AloGroup, tol: Tolerance) -> Result<bool> {
        group.eq_within(self.lo, self.hi, tol)
    }

    /// The reciprocal interval `[hi^(−1), lo^(−1)]`.
    pub fn recip(&self, group: &AloGroup) -> Result<GInterval> {
        Ok(GInterval {
            lo: group.inv(self.hi)?,
            hi: group.inv(self.lo)?,
        })
    }

    /// Interval multiplication: `[a⁻ ⊙ b⁻, a⁺ ⊙ b⁺]`.
    pub fn mul(&self, group: &AloGroup, rhs: &GInterval) -> Result<GInterval> {
        Ok(GInterval {
            lo: group.op(self.lo, rhs.lo)?,
            hi: group.op(self.hi, rhs.hi)?,
        })
    }

    /// Interval division: `a ⊙ b^(−1) = [a⁻ ÷ b⁺, a⁺ ÷ b⁻]`.
    pub fn div(&self, group: &AloGroup, rhs: &GInterval) -> Result<GInterval> {
        self.mul(group, &rhs.recip(group)?)
    }

    /// Endpoint-wise equality within `tol`.
    pub fn eq_within(&self, group: &AloGroup, rhs: &GInterval, tol: Tolerance) -> Result<bool> {
        Ok(group.eq_within(self.lo, rhs.lo, tol)? && group.eq_within(self.hi, rhs.hi, tol)?)
    }

    /// The strict partial order: `self < rhs` iff `self.hi < rhs.lo`.
    /// Overlapping, non-equal intervals are incomparable (both directions
    /// return false).
    pub fn lt(&self, group: &AloGroup, rhs: &GInterval) -> Result<bool> {
        Ok(group.to_additive(self.hi)? < group.to_additive(rhs.lo)?)
    }

    /// `self ≤ rhs`: equal within `tol`, or strictly below.
    pub fn le(&self, group: &AloGroup, rhs: &GInterval, tol: Tolerance) -> Result<bool> {
        Ok(self.eq_within(group, rhs, tol)? || self.lt(group, rhs)?)
    }

    /// The interval norm `max{‖lo‖, ‖hi‖}` — a point of the group, not an
    /// interval.
    pub fn norm(&self, group: &AloGroup) -> Result<GroupElement> {
        let n_lo = group.norm(self.lo)?;
        let n_hi = group.norm(self.hi)?;
        Ok(if n_lo.value() >= n_hi.value() {
            n_lo
        } else {
            n_hi
        })
    }

    /// The interval distance `max{d(a⁻, b⁻), d(a⁺, b⁺)}`.
    pub fn distance_to(&self, group: &AloGroup, rhs: &GInterval) -> Result<GroupElement> {
        let d_lo = group.distance(self.lo, rhs.lo)?;
        let d_hi = group.distance(self.hi, rhs.hi)?;
        Ok(if d_lo.value() >= d_hi.value() {
            d_lo
        } else {
            d_hi
        })
    }
}
