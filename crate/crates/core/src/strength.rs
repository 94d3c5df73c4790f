//! Edge strength and its partial order.

use std::cmp::Ordering;
use std::fmt;

use crate::value::BipolarValue;

/// The strength of an edge or class: the largest positive membership paired with the
/// negative membership closest to zero, taken over positively (resp. negatively)
/// supported vertices. A component with no supported vertex is 0.
///
/// Strengths are partially ordered: `a >= b` iff `a.p >= b.p` and `a.n >= b.n`.
/// [`PartialOrd`] returns `None` for incomparable pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Strength(BipolarValue);

impl Strength {
    /// Strength of a collection of memberships.
    pub fn of(values: impl IntoIterator<Item = BipolarValue>) -> Strength {
        let mut p = 0;
        let mut n: Option<i32> = None;
        for v in values {
            p = p.max(v.p_micros());
            if v.is_negative() {
                n = Some(n.map_or(v.n_micros(), |m| m.max(v.n_micros())));
            }
        }
        Strength(BipolarValue::from_micros(p, n.unwrap_or(0)).expect("components come from valid values"))
    }

    pub fn value(self) -> BipolarValue {
        self.0
    }

    pub fn p(self) -> f64 {
        self.0.p()
    }

    pub fn n(self) -> f64 {
        self.0.n()
    }

    /// Total order used for rankings: stronger first, by `p` then by `n`.
    /// Callers break remaining ties by name.
    pub fn rank_cmp(self, other: Strength) -> Ordering {
        other
            .0
            .p_micros()
            .cmp(&self.0.p_micros())
            .then(other.0.n_micros().cmp(&self.0.n_micros()))
    }
}

impl From<BipolarValue> for Strength {
    fn from(value: BipolarValue) -> Self {
        Strength(value)
    }
}

impl PartialOrd for Strength {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let p = self.0.p_micros().cmp(&other.0.p_micros());
        let n = self.0.n_micros().cmp(&other.0.n_micros());
        match (p, n) {
            (Ordering::Equal, o) | (o, Ordering::Equal) => Some(o),
            (a, b) if a == b => Some(a),
            _ => None,
        }
    }
}

impl fmt::Display for Strength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
