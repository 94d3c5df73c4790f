//! Bipolar fuzzy sets over a finite, ordered universe.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::value::{BipolarValue, Label, SCALE};

/// A set of vertices, as indices into the owning structure's vertex list.
pub type VertexSet = BTreeSet<usize>;

/// Checks that labels are pairwise distinct, reporting the first repeat.
pub(crate) fn ensure_unique(labels: &[Label], duplicate: fn(Label) -> Error) -> Result<()> {
    let mut seen = HashSet::with_capacity(labels.len());
    for label in labels {
        if !seen.insert(label) {
            return Err(duplicate(label.clone()));
        }
    }
    Ok(())
}

/// A bipolar fuzzy set: every vertex of the universe carries a [`BipolarValue`].
///
/// Vertices that were never assigned read as the neutral value `(0, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipolarFuzzySet {
    universe: Arc<[Label]>,
    values: Vec<BipolarValue>,
}

impl BipolarFuzzySet {
    /// Builds a set from one value per universe vertex, in universe order.
    pub fn new(universe: Vec<Label>, values: Vec<BipolarValue>) -> Result<Self> {
        ensure_unique(&universe, Error::DuplicateVertex)?;
        Self::from_shared(universe.into(), values)
    }

    pub(crate) fn from_shared(universe: Arc<[Label]>, values: Vec<BipolarValue>) -> Result<Self> {
        if universe.len() != values.len() {
            return Err(Error::DimensionMismatch {
                context: "bipolar fuzzy set".into(),
                expected: universe.len(),
                found: values.len(),
            });
        }
        Ok(BipolarFuzzySet { universe, values })
    }

    /// Builds a set from `(label, value)` pairs; unlisted vertices are neutral.
    pub fn from_pairs<I, S>(universe: Vec<Label>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, BipolarValue)>,
        S: AsRef<str>,
    {
        ensure_unique(&universe, Error::DuplicateVertex)?;
        let mut values = vec![BipolarValue::NEUTRAL; universe.len()];
        for (label, value) in pairs {
            let label = label.as_ref();
            let index = universe
                .iter()
                .position(|v| v.as_str() == label)
                .ok_or_else(|| Error::UnknownVertex(label.to_owned()))?;
            values[index] = value;
        }
        Ok(BipolarFuzzySet {
            universe: universe.into(),
            values,
        })
    }

    pub fn universe(&self) -> &[Label] {
        &self.universe
    }

    pub fn values(&self) -> &[BipolarValue] {
        &self.values
    }

    /// Membership of the vertex at `index`.
    pub fn value(&self, index: usize) -> BipolarValue {
        self.values[index]
    }

    /// Membership of a labelled vertex, or `None` if the label is not in the universe.
    pub fn get(&self, label: &str) -> Option<BipolarValue> {
        self.universe
            .iter()
            .position(|v| v.as_str() == label)
            .map(|i| self.values[i])
    }

    fn select(&self, keep: impl Fn(BipolarValue) -> bool) -> VertexSet {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| keep(**v))
            .map(|(i, _)| i)
            .collect()
    }

    /// Vertices with `p > 0`.
    pub fn positive_support(&self) -> VertexSet {
        self.select(BipolarValue::is_positive)
    }

    /// Vertices with `n < 0`.
    pub fn negative_support(&self) -> VertexSet {
        self.select(BipolarValue::is_negative)
    }

    /// Union of the positive and negative supports.
    pub fn support(&self) -> VertexSet {
        self.select(|v| !v.is_neutral())
    }

    pub fn is_nontrivial(&self) -> bool {
        self.values.iter().any(|v| !v.is_neutral())
    }

    fn check_alpha(alpha: f64) -> Result<i32> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::ParameterOutOfRange {
                name: "alpha",
                value: alpha,
                range: "[0, 1]",
            });
        }
        Ok((alpha * SCALE as f64).round() as i32)
    }

    /// Vertices with `p >= alpha`.
    pub fn positive_cut(&self, alpha: f64) -> Result<VertexSet> {
        let alpha = Self::check_alpha(alpha)?;
        Ok(self.select(|v| v.p_micros() >= alpha))
    }

    /// Vertices with `n <= -alpha`.
    pub fn negative_cut(&self, alpha: f64) -> Result<VertexSet> {
        let alpha = Self::check_alpha(alpha)?;
        Ok(self.select(|v| v.n_micros() <= -alpha))
    }

    /// The alpha-cut: union of the positive and negative cuts.
    pub fn alpha_cut(&self, alpha: f64) -> Result<VertexSet> {
        let mut cut = self.positive_cut(alpha)?;
        cut.extend(self.negative_cut(alpha)?);
        Ok(cut)
    }

    /// Largest positive membership over the universe.
    pub fn height(&self) -> Result<f64> {
        self.values
            .iter()
            .map(|v| v.p_micros())
            .max()
            .map(|p| p as f64 / SCALE as f64)
            .ok_or(Error::EmptyUniverse)
    }

    /// Smallest negative membership over the universe.
    pub fn depth(&self) -> Result<f64> {
        self.values
            .iter()
            .map(|v| v.n_micros())
            .min()
            .map(|n| n as f64 / SCALE as f64)
            .ok_or(Error::EmptyUniverse)
    }

    /// Normal when some vertex has `p = 1` or some vertex has `n = -1`.
    pub fn is_normal(&self) -> Result<bool> {
        if self.values.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        Ok(self
            .values
            .iter()
            .any(|v| v.p_micros() == SCALE || v.n_micros() == -SCALE))
    }

    /// Single valued on its support.
    pub fn is_elementary(&self) -> bool {
        let mut on_support = self.values.iter().filter(|v| !v.is_neutral());
        match on_support.next() {
            Some(first) => on_support.all(|v| v == first),
            None => true,
        }
    }

    /// Labels of the vertices in `set`, in universe order.
    pub fn labels_of<'a>(&'a self, set: &VertexSet) -> Vec<&'a Label> {
        set.iter().map(|&i| &self.universe[i]).collect()
    }
}
