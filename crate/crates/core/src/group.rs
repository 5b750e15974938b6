//! Real continuous Abelian linearly ordered groups.
//!
//! Every other module is generic over a group `(G, ⊙, ≤)` where `G` is an
//! open real interval, `⊙` is commutative, associative, continuous, and
//! translation-monotone (`a ≤ b` implies `a ⊙ c ≤ b ⊙ c`). Three scales are
//! built in:
//!
//! * multiplicative — `(0, +∞)` under multiplication, identity 1;
//! * additive — `(−∞, +∞)` under addition, identity 0;
//! * fuzzy — `(0, 1)` under `a ⊗ b = ab / (ab + (1−a)(1−b))`, identity 0.5.
//!
//! Each group carries a canonical pair of mutually inverse strictly
//! increasing maps to and from the additive group (`ln`/`exp` for the
//! multiplicative scale, `logit`/`logistic` for the fuzzy scale). Roots,
//! means, and every equality comparison are evaluated in those additive
//! coordinates, which gives uniform tolerance semantics across scales and
//! keeps long folds stable near the domain boundaries.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Identifies the representation scale an element belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScaleId {
    Multiplicative,
    Additive,
    Fuzzy,
    /// A user-defined scale; the payload distinguishes distinct custom groups.
    Custom(u32),
}

impl ScaleId {
    /// Lowercase name used in files and command-line flags.
    pub fn name(self) -> &'static str {
        match self {
            ScaleId::Multiplicative => "multiplicative",
            ScaleId::Additive => "additive",
            ScaleId::Fuzzy => "fuzzy",
            ScaleId::Custom(_) => "custom",
        }
    }
}

impl fmt::Display for ScaleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScaleId::Custom(id) => write!(f, "custom#{id}"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for ScaleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "multiplicative" => Ok(ScaleId::Multiplicative),
            "additive" => Ok(ScaleId::Additive),
            "fuzzy" => Ok(ScaleId::Fuzzy),
            other => Err(Error::InvalidArgument(format!(
                "unknown scale {other:?}; expected multiplicative, additive, or fuzzy"
            ))),
        }
    }
}

/// Absolute comparison tolerance, expressed in additive coordinates.
///
/// Two elements count as equal when their additive coordinates differ by at
/// most this much; on the multiplicative scale that is a log-ratio bound, on
/// the fuzzy scale a log-odds bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance(f64);

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance(1e-9);

    pub fn new(value: f64) -> Result<Tolerance> {
        if value.is_finite() && value >= 0.0 {
            Ok(Tolerance(value))
        } else {
            Err(Error::InvalidArgument(format!(
                "tolerance must be finite and non-negative, got {value}"
            )))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::DEFAULT
    }
}

/// A real value tagged with the scale it lives on.
///
/// Elements can only be obtained from an [`AloGroup`], which guarantees the
/// value lies strictly inside the open domain of its scale.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GroupElement {
    value: f64,
    scale: ScaleId,
}

impl GroupElement {
    pub fn value(self) -> f64 {
        self.value
    }

    pub fn scale(self) -> ScaleId {
        self.scale
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

type RealMap = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Clone)]
enum Repr {
    Multiplicative,
    Additive,
    Fuzzy,
    Custom {
        to_additive: RealMap,
        from_additive: RealMap,
    },
}

static NEXT_CUSTOM_ID: AtomicU32 = AtomicU32::new(0);

/// A real continuous Abelian linearly ordered group over an open interval.
#[derive(Clone)]
pub struct AloGroup {
    id: ScaleId,
    domain: (f64, f64),
    identity: f64,
    repr: Repr,
}

impl fmt::Debug for AloGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AloGroup")
            .field("id", &self.id)
            .field("domain", &self.domain)
            .finish()
    }
}

impl AloGroup {
    /// `(0, +∞)` under multiplication.
    pub fn multiplicative() -> AloGroup {
        AloGroup {
            id: ScaleId::Multiplicative,
            domain: (0.0, f64::INFINITY),
            identity: 1.0,
            repr: Repr::Multiplicative,
        }
    }

    /// `(−∞, +∞)` under addition.
    pub fn additive() -> AloGroup {
        AloGroup {
            id: ScaleId::Additive,
            domain: (f64::NEG_INFINITY, f64::INFINITY),
            identity: 0.0,
            repr: Repr::Additive,
        }
    }

    /// `(0, 1)` under the uninorm restriction `a ⊗ b = ab/(ab + (1−a)(1−b))`.
    pub fn fuzzy() -> AloGroup {
        AloGroup {
            id: ScaleId::Fuzzy,
            domain: (0.0, 1.0),
            identity: 0.5,
            repr: Repr::Fuzzy,
        }
    }

    /// The built-in group with the given id, if it is one.
    pub fn builtin(id: ScaleId) -> Option<AloGroup> {
        match id {
            ScaleId::Multiplicative => Some(AloGroup::multiplicative()),
            ScaleId::Additive => Some(AloGroup::additive()),
            ScaleId::Fuzzy => Some(AloGroup::fuzzy()),
            ScaleId::Custom(_) => None,
        }
    }

    /// A user-defined scale over the open interval `(domain_lo, domain_hi)`.
    ///
    /// Only the coordinate maps are supplied; the group operation, inverse,
    /// roots, mean, norm, and distance are all derived by transport through
    /// the additive group. `to_additive` must be a strictly increasing
    /// bijection from the domain onto the reals and `from_additive` its
    /// inverse.
    pub fn custom(
        domain_lo: f64,
        domain_hi: f64,
        to_additive: impl Fn(f64) -> f64 + Send + Sync + 'static,
        from_additive: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<AloGroup> {
        if domain_lo.is_nan() || domain_hi.is_nan() || domain_lo >= domain_hi {
            return Err(Error::InvalidArgument(format!(
                "custom domain bounds must satisfy lo < hi, got ({domain_lo}, {domain_hi})"
            )));
        }
        let identity = from_additive(0.0);
        if !identity.is_finite() || identity <= domain_lo || identity >= domain_hi {
            return Err(Error::InvalidArgument(format!(
                "from_additive(0) = {identity} is not inside the domain ({domain_lo}, {domain_hi})"
            )));
        }
        let id = ScaleId::Custom(NEXT_CUSTOM_ID.fetch_add(1, Ordering::Relaxed));
        Ok(AloGroup {
            id,
            domain: (domain_lo, domain_hi),
            identity,
            repr: Repr::Custom {
                to_additive: Arc::new(to_additive),
                from_additive: Arc::new(from_additive),
            },
        })
    }

    pub fn id(&self) -> ScaleId {
        self.id
    }

    /// The open-interval bounds of the domain (the bounds themselves are
    /// excluded).
    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            value: self.identity,
            scale: self.id,
        }
    }

    /// Whether `value` lies strictly inside the open domain.
    pub fn contains(&self, value: f64) -> bool {
        value.is_finite() && value > self.domain.0 && value < self.domain.1
    }

    /// Tags a raw value with this scale, rejecting anything outside the open
    /// domain (boundary values included).
    pub fn element(&self, value: f64) -> Result<GroupElement> {
        if self.contains(value) {
            Ok(GroupElement {
                value,
                scale: self.id,
            })
        } else {
            Err(Error::Domain {
                value,
                lo: self.domain.0,
                hi: self.domain.1,
                scale: self.id,
            })
        }
    }

    /// Checks the tag of `a` and returns its raw value.
    fn raw(&self, a: GroupElement) -> Result<f64> {
        if a.scale == self.id {
            Ok(a.value)
        } else {
            Err(Error::ScaleMismatch {
                expected: self.id,
                found: a.scale,
            })
        }
    }

    fn coord_of(&self, value: f64) -> f64 {
        match &self.repr {
            Repr::Multiplicative => value.ln(),
            Repr::Additive => value,
            Repr::Fuzzy => (value / (1.0 - value)).ln(),
            Repr::Custom { to_additive, .. } => to_additive(value),
        }
    }

    fn value_of(&self, coord: f64) -> f64 {
        match &self.repr {
            Repr::Multiplicative => coord.exp(),
            Repr::Additive => coord,
            Repr::Fuzzy => 1.0 / (1.0 + (-coord).exp()),
            Repr::Custom { from_additive, .. } => from_additive(coord),
        }
    }

    /// The canonical additive coordinate of `a`.
    pub fn to_additive(&self, a: GroupElement) -> Result<f64> {
        Ok(self.coord_of(self.raw(a)?))
    }

    /// The element with the given additive coordinate.
    ///
    /// Fails when the coordinate maps onto (or beyond) a domain boundary in
    /// double precision, e.g. a fuzzy coordinate so large that the logistic
    /// rounds to 1.0.
    pub fn from_additive(&self, coord: f64) -> Result<GroupElement> {
        self.element(self.value_of(coord))
    }

    /// The group operation ⊙.
    pub fn op(&self, a: GroupElement, b: GroupElement) -> Result<GroupElement> {
        let (x, y) = (self.raw(a)?, self.raw(b)?);
        let value = match &self.repr {
            Repr::Multiplicative => x * y,
            Repr::Additive => x + y,
            Repr::Fuzzy => {
                let p = x * y;
                p / (p + (1.0 - x) * (1.0 - y))
            }
            Repr::Custom { .. } => self.value_of(self.coord_of(x) + self.coord_of(y)),
        };
        self.element(value)
    }

    /// The inverse `a^(−1)` with respect to ⊙.
    pub fn inv(&self, a: GroupElement) -> Result<GroupElement> {
        let x = self.raw(a)?;
        let value = match &self.repr {
            Repr::Multiplicative => 1.0 / x,
            Repr::Additive => -x,
            Repr::Fuzzy => 1.0 - x,
            Repr::Custom { .. } => self.value_of(-self.coord_of(x)),
        };
        self.element(value)
    }

    /// `a ÷ b = a ⊙ b^(−1)`.
    pub fn div(&self, a: GroupElement, b: GroupElement) -> Result<GroupElement> {
        self.op(a, self.inv(b)?)
    }

    /// The integer power `a^(z)`: iterated ⊙ for `z ≥ 0`, the inverse of the
    /// `|z|`-power for `z < 0`.
    pub fn int_pow(&self, a: GroupElement, z: i32) -> Result<GroupElement> {
        self.raw(a)?;
        let mut acc = self.identity();
        for _ in 0..z.unsigned_abs() {
            acc = self.op(acc, a)?;
        }
        if z < 0 {
            self.inv(acc)
        } else {
            Ok(acc)
        }
    }

    /// The unique solution of `x^(n) = a`, for `n ≥ 1`.
    pub fn nth_root(&self, a: GroupElement, n: u32) -> Result<GroupElement> {
        if n < 1 {
            return Err(Error::InvalidArgument(
                "root index must be at least 1".into(),
            ));
        }
        let coord = self.to_additive(a)?;
        self.from_additive(coord / f64::from(n))
    }

    /// The rational power `a^(m/n) = (a^(m))^(1/n)`, for `n ≥ 1`.
    pub fn rational_pow(&self, a: GroupElement, m: i32, n: u32) -> Result<GroupElement> {
        self.nth_root(self.int_pow(a, m)?, n)
    }

    /// The mean of a non-empty list: the element itself for one value, else
    /// the n-th root of the ⊙-fold (geometric mean on the multiplicative
    /// scale, arithmetic mean on the additive one).
    pub fn mean(&self, elements: &[GroupElement]) -> Result<GroupElement> {
        match elements {
            [] => Err(Error::EmptyInput),
            [single] => {
                self.raw(*single)?;
                Ok(*single)
            }
            _ => {
                let mut sum = 0.0;
                for &e in elements {
                    sum += self.to_additive(e)?;
                }
                self.from_additive(sum / elements.len() as f64)
            }
        }
    }

    /// The norm `max{a, a^(−1)}`.
    pub fn norm(&self, a: GroupElement) -> Result<GroupElement> {
        let inv = self.inv(a)?;
        Ok(if a.value >= inv.value { a } else { inv })
    }

    /// The distance `‖a ÷ b‖`: the absolute difference on the additive
    /// scale, `max{a/b, b/a}` on the multiplicative one.
    pub fn distance(&self, a: GroupElement, b: GroupElement) -> Result<GroupElement> {
        self.norm(self.div(a, b)?)
    }

    /// Equality within `tol`, compared in additive coordinates.
    pub fn eq_within(&self, a: GroupElement, b: GroupElement, tol: Tolerance) -> Result<bool> {
        Ok((self.to_additive(a)? - self.to_additive(b)?).abs() <= tol.value())
    }

    /// `a ≤ b` up to `tol`, compared in additive coordinates.
    pub fn le_within(&self, a: GroupElement, b: GroupElement, tol: Tolerance) -> Result<bool> {
        Ok(self.to_additive(a)? <= self.to_additive(b)? + tol.value())
    }
}

/// An order- and operation-preserving bijection between two groups.
///
/// Built from the canonical additive coordinates of both sides, so it exists
/// for every pair of groups handled by this crate. Between the built-in
/// scales this recovers the familiar closed forms: multiplicative → fuzzy is
/// `x ↦ x/(1+x)`, additive → fuzzy is `x ↦ eˣ/(1+eˣ)`, and multiplicative →
/// additive is `ln`.
#[derive(Clone, Debug)]
pub struct IsoMap {
    source: AloGroup,
    target: AloGroup,
}

impl IsoMap {
    pub fn between(source: &AloGroup, target: &AloGroup) -> IsoMap {
        IsoMap {
            source: source.clone(),
            target: target.clone(),
        }
    }

    pub fn source(&self) -> &AloGroup {
        &self.source
    }

    pub fn target(&self) -> &AloGroup {
        &self.target
    }

    /// The map with source and target swapped.
    pub fn inverse(&self) -> IsoMap {
        IsoMap {
            source: self.target.clone(),
            target: self.source.clone(),
        }
    }

    /// Applies the forward map to an element of the source group.
    pub fn apply(&self, a: GroupElement) -> Result<GroupElement> {
        self.target.from_additive(self.source.to_additive(a)?)
    }

    /// Applies the backward map to an element of the target group.
    pub fn apply_inverse(&self, b: GroupElement) -> Result<GroupElement> {
        self.source.from_additive(self.target.to_additive(b)?)
    }
}
