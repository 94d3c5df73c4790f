//! Membership values and labels.
//!
//! A [`BipolarValue`] is the pair `(p, n)` with `p` in `[0, 1]` measuring how far an
//! element satisfies a property and `n` in `[-1, 0]` measuring how far it satisfies the
//! counter-property. `(0, 0)` is the neutral value: the element is irrelevant.
//!
//! Values live on a fixed grid of `10^-6`. Parsed decimals with at most six fractional
//! digits are represented exactly, so threshold comparisons and sums never depend on
//! binary floating-point rounding.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Number of grid steps in one unit of membership.
pub const SCALE: i32 = 1_000_000;

/// Maximum number of fractional digits accepted when parsing a decimal.
pub const MAX_DECIMALS: usize = 6;

/// A bipolar membership pair `(p, n)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct BipolarValue {
    p: i32,
    n: i32,
}

impl BipolarValue {
    /// The neutral value `(0, 0)`.
    pub const NEUTRAL: BipolarValue = BipolarValue { p: 0, n: 0 };
    /// The extremal value `(1, -1)`.
    pub const EXTREME: BipolarValue = BipolarValue { p: SCALE, n: -SCALE };

    /// Builds a value from floating-point components, rounding each to the `10^-6` grid.
    pub fn new(p: f64, n: f64) -> Result<Self> {
        if !p.is_finite() || !n.is_finite() || !(0.0..=1.0).contains(&p) || !(-1.0..=0.0).contains(&n)
        {
            return Err(Error::ValueOutOfRange { p, n });
        }
        let p = (p * SCALE as f64).round() as i32;
        let n = (n * SCALE as f64).round() as i32;
        Self::from_micros(p, n)
    }

    /// Builds a value from grid units (`SCALE` units per 1).
    pub fn from_micros(p: i32, n: i32) -> Result<Self> {
        if !(0..=SCALE).contains(&p) || !(-SCALE..=0).contains(&n) {
            return Err(Error::ValueOutOfRange {
                p: p as f64 / SCALE as f64,
                n: n as f64 / SCALE as f64,
            });
        }
        Ok(BipolarValue { p, n })
    }

    pub fn p(self) -> f64 {
        self.p as f64 / SCALE as f64
    }

    pub fn n(self) -> f64 {
        self.n as f64 / SCALE as f64
    }

    pub fn p_micros(self) -> i32 {
        self.p
    }

    pub fn n_micros(self) -> i32 {
        self.n
    }

    pub fn is_neutral(self) -> bool {
        self.p == 0 && self.n == 0
    }

    /// True when `p > 0`.
    pub fn is_positive(self) -> bool {
        self.p > 0
    }

    /// True when `n < 0`.
    pub fn is_negative(self) -> bool {
        self.n < 0
    }

    /// Bipolar dominance: `self.p <= other.p` and `self.n >= other.n`.
    pub fn dominated_by(self, other: BipolarValue) -> bool {
        self.p <= other.p && self.n >= other.n
    }

    /// Greatest lower bound under dominance: `(min p, max n)`.
    pub fn meet(self, other: BipolarValue) -> BipolarValue {
        BipolarValue {
            p: self.p.min(other.p),
            n: self.n.max(other.n),
        }
    }

    /// Least upper bound under dominance: `(max p, min n)`.
    pub fn join(self, other: BipolarValue) -> BipolarValue {
        BipolarValue {
            p: self.p.max(other.p),
            n: self.n.min(other.n),
        }
    }

    /// Whether the two values are ordered by dominance one way or the other.
    pub fn comparable(self, other: BipolarValue) -> bool {
        self.dominated_by(other) || other.dominated_by(self)
    }

    /// The level order used to sweep thresholds: larger `p` first, ties broken by the more
    /// negative `n`. It is a linear extension of dominance (stronger values come first).
    pub fn level_cmp(self, other: BipolarValue) -> Ordering {
        other.p.cmp(&self.p).then(self.n.cmp(&other.n))
    }

    /// `self` is at least as strong as `threshold` in the level order.
    pub fn reaches_level(self, threshold: BipolarValue) -> bool {
        self.level_cmp(threshold) != Ordering::Greater
    }
}

impl fmt::Display for BipolarValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", format_micros(self.p), format_micros(self.n))
    }
}

impl FromStr for BipolarValue {
    type Err = ValueParseError;

    /// Parses `(p,n)`; whitespace around the components is allowed.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or(ValueParseError::Syntax)?;
        let (p, n) = inner.split_once(',').ok_or(ValueParseError::Syntax)?;
        let p = parse_micros(p.trim())?;
        let n = parse_micros(n.trim())?;
        BipolarValue::from_micros(p, n).map_err(|_| ValueParseError::Range)
    }
}

/// Why a cell or decimal failed to parse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum ValueParseError {
    #[error("expected a pair `(p,n)`")]
    Syntax,
    #[error("malformed decimal")]
    Decimal,
    #[error("more than {MAX_DECIMALS} fractional digits")]
    Precision,
    #[error("component outside [0,1] x [-1,0]")]
    Range,
}

/// Parses a plain decimal (`0.25`, `-1`, `-0.05`) into grid units.
pub fn parse_micros(s: &str) -> std::result::Result<i32, ValueParseError> {
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() || !int_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ValueParseError::Decimal);
    }
    if body.contains('.') && frac_part.is_empty() {
        return Err(ValueParseError::Decimal);
    }
    if !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ValueParseError::Decimal);
    }
    if frac_part.len() > MAX_DECIMALS {
        return Err(ValueParseError::Precision);
    }
    // anything above 1 is out of range; short-circuit before overflow
    let int_value: i64 = if int_part.len() > 2 {
        return Err(ValueParseError::Range);
    } else {
        int_part.parse().map_err(|_| ValueParseError::Decimal)?
    };
    let mut frac_value: i64 = 0;
    for (i, digit) in frac_part.bytes().enumerate() {
        frac_value += i64::from(digit - b'0') * 10_i64.pow((MAX_DECIMALS - 1 - i) as u32);
    }
    let magnitude = int_value * i64::from(SCALE) + frac_value;
    if magnitude > i64::from(SCALE) {
        return Err(ValueParseError::Range);
    }
    let value = if negative { -magnitude } else { magnitude };
    Ok(value as i32)
}

/// Shortest decimal rendering of a grid value: `0.2`, `-0.05`, `1`, `0`.
pub fn format_micros(value: i32) -> String {
    let sign = if value < 0 { "-" } else { "" };
    let magnitude = value.unsigned_abs();
    let scale = SCALE as u32;
    let int_part = magnitude / scale;
    let frac = magnitude % scale;
    if frac == 0 {
        return format!("{sign}{int_part}");
    }
    let digits = format!("{frac:06}");
    format!("{sign}{int_part}.{}", digits.trim_end_matches('0'))
}

/// A vertex or edge label.
///
/// Labels are nonempty tokens without whitespace, parentheses or commas, not starting
/// with `#`, and different from the neutral-cell marker `-`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(String);

/// Vertices are identified by their label.
pub type VertexId = Label;

impl Label {
    pub fn new(s: impl Into<String>) -> Result<Self> {
        let s = s.into();
        let valid = !s.is_empty()
            && s != "-"
            && !s.starts_with('#')
            && !s
                .chars()
                .any(|c| c.is_whitespace() || matches!(c, '(' | ')' | ','));
        if valid {
            Ok(Label(s))
        } else {
            Err(Error::InvalidLabel(s))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Label::new(s)
    }
}

impl TryFrom<&str> for Label {
    type Error = Error;

    fn try_from(s: &str) -> Result<Self> {
        Label::new(s)
    }
}

impl AsRef<str> for Label {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// Builds labels from strings, failing on the first invalid one.
pub fn labels<I, S>(items: I) -> Result<Vec<Label>>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    items.into_iter().map(|s| Label::new(s.as_ref())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["(0.2,-0.3)", "(1,-1)", "(0,0)", "(0.05,-0.95)", "(0.123456,-0.000001)"] {
            let value: BipolarValue = text.parse().unwrap();
            assert_eq!(value.to_string(), text);
        }
        let spaced: BipolarValue = "( 0.2 , -0.3 )".parse().unwrap();
        assert_eq!(spaced, BipolarValue::new(0.2, -0.3).unwrap());
        let padded: BipolarValue = "(0.50,-0.0)".parse().unwrap();
        assert_eq!(padded.to_string(), "(0.5,0)");
    }

    #[test]
    fn parse_rejections() {
        assert_eq!("(1.2,-0.1)".parse::<BipolarValue>(), Err(ValueParseError::Range));
        assert_eq!("(0.2,0.1)".parse::<BipolarValue>(), Err(ValueParseError::Range));
        assert_eq!("(-0.2,-0.1)".parse::<BipolarValue>(), Err(ValueParseError::Range));
        assert_eq!("(0.1234567,0)".parse::<BipolarValue>(), Err(ValueParseError::Precision));
        assert_eq!("(0.2;-0.1)".parse::<BipolarValue>(), Err(ValueParseError::Syntax));
        assert_eq!("(.2,-0.1)".parse::<BipolarValue>(), Err(ValueParseError::Decimal));
        assert_eq!("(2.,-0.1)".parse::<BipolarValue>(), Err(ValueParseError::Decimal));
        assert_eq!("(1e-3,0)".parse::<BipolarValue>(), Err(ValueParseError::Decimal));
        assert_eq!("(99999999999,0)".parse::<BipolarValue>(), Err(ValueParseError::Range));
        assert_eq!("0.2,-0.1".parse::<BipolarValue>(), Err(ValueParseError::Syntax));
    }

    #[test]
    fn construction_enforces_range() {
        assert!(BipolarValue::new(1.0, -1.0).is_ok());
        assert!(BipolarValue::new(1.01, 0.0).is_err());
        assert!(BipolarValue::new(0.5, 0.1).is_err());
        assert!(BipolarValue::new(f64::NAN, 0.0).is_err());
        assert!(BipolarValue::from_micros(SCALE + 1, 0).is_err());
        // 1/3 lands on the nearest grid point
        let third = BipolarValue::new(1.0 / 3.0, -2.0 / 3.0).unwrap();
        assert_eq!(third.to_string(), "(0.333333,-0.666667)");
    }

    #[test]
    fn lattice_operations() {
        let a = BipolarValue::new(0.5, -0.2).unwrap();
        let b = BipolarValue::new(0.3, -0.6).unwrap();
        assert!(!a.comparable(b));
        assert_eq!(a.meet(b), BipolarValue::new(0.3, -0.2).unwrap());
        assert_eq!(a.join(b), BipolarValue::new(0.5, -0.6).unwrap());
        assert!(a.meet(b).dominated_by(a) && a.dominated_by(a.join(b)));
    }

    #[test]
    fn level_order_extends_dominance() {
        let strong = BipolarValue::new(0.5, -0.6).unwrap();
        let weak = BipolarValue::new(0.5, -0.3).unwrap();
        assert_eq!(strong.level_cmp(weak), Ordering::Less);
        assert!(strong.reaches_level(weak));
        assert!(!weak.reaches_level(strong));
        let high_p = BipolarValue::new(0.9, -0.2).unwrap();
        let deep_n = BipolarValue::new(0.4, -0.3).unwrap();
        assert!(high_p.reaches_level(deep_n));
    }

    #[test]
    fn label_validation() {
        assert!(Label::new("x_1").is_ok());
        assert!(Label::new("A_t").is_ok());
        for bad in ["", "-", "#x", "a b", "(a", "a,b"] {
            assert!(Label::new(bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn micros_formatting() {
        assert_eq!(format_micros(0), "0");
        assert_eq!(format_micros(SCALE), "1");
        assert_eq!(format_micros(-SCALE), "-1");
        assert_eq!(format_micros(-30_000), "-0.03");
        assert_eq!(format_micros(450_000), "0.45");
    }
}
