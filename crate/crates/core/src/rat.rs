//! Exact rational arithmetic used for every invariant ratio and bound value.
//!
//! All quantities compared anywhere in the crate (σ̄, π, ρ, bound formulas, slack)
//! are [`Rat`] values in lowest terms. Floating point appears only in display-side
//! conveniences and never in a comparison.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

/// Reduced rational with `i64` numerator and denominator.
///
/// Desk-scale orders (n ≤ a few hundred) keep every numerator far below `i64`
/// range: the largest integers handled are status values σ(v) < n², and bound
/// formulas only combine a handful of such terms over denominators like 4κ(n−1).
pub type Rat = Rational64;

/// Shorthand constructor for a reduced rational.
///
/// # Panics
///
/// Panics if `den == 0`.
///
/// # Examples
///
/// ```
/// use plandist::rat::rat;
/// assert_eq!(rat(6, 4), rat(3, 2));
/// assert_eq!(rat(5, 1).to_string(), "5");
/// ```
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num, den)
}

/// JSON-facing form of a rational: the exact numerator/denominator pair plus
/// a display-only `decimal` convenience field. The decimal is derived from
/// the pair at serialization time — never stored, compared, or read back —
/// so round-tripping a report through JSON cannot drift it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub struct RatJson {
    pub num: i64,
    pub den: i64,
}

impl RatJson {
    /// Approximate decimal value; display convenience only.
    pub fn decimal(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Serialize for RatJson {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("RatJson", 3)?;
        s.serialize_field("num", &self.num)?;
        s.serialize_field("den", &self.den)?;
        s.serialize_field("decimal", &self.decimal())?;
        s.end()
    }
}

impl From<Rat> for RatJson {
    fn from(r: Rat) -> Self {
        RatJson {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

impl From<RatJson> for Rat {
    fn from(r: RatJson) -> Self {
        Rat::new(r.num, r.den)
    }
}
