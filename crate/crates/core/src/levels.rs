//! Fundamental sequences: the threshold levels at which the cut structure of a bipolar
//! fuzzy hypergraph changes, and the core hypergraphs between them.
//!
//! Thresholds are swept in the level order of [`BipolarValue::level_cmp`]: larger `p`
//! first, and for equal `p` the more negative `n` first. At level `t` an edge keeps the
//! vertices whose membership reaches `t` in that order. When all negative memberships
//! agree this is the ordinary positive alpha-cut.

use std::collections::{BTreeSet, HashSet};

use crate::crisp::{strictly_absorbs, CrispHypergraph, HypergraphSequence};
use crate::error::{Error, Result};
use crate::fuzzy_set::VertexSet;
use crate::hypergraph::BFHypergraph;
use crate::value::BipolarValue;

/// A threshold pair `(s, r)`.
pub type LevelPair = BipolarValue;

/// Levels in sweep order (strongest first) with the core hypergraph at each level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalSequence {
    levels: Vec<LevelPair>,
    cores: Vec<CrispHypergraph>,
}

impl FundamentalSequence {
    pub fn levels(&self) -> &[LevelPair] {
        &self.levels
    }

    pub fn cores(&self) -> &[CrispHypergraph] {
        &self.cores
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Index of the band containing `threshold`: the last level not stronger than it.
    /// `None` when `threshold` is stronger than every level.
    pub fn band_of(&self, threshold: BipolarValue) -> Option<usize> {
        self.levels
            .iter()
            .rposition(|level| level.reaches_level(threshold))
    }

    /// The cores as a sequence, strongest level first.
    pub fn as_sequence(&self) -> Option<HypergraphSequence> {
        HypergraphSequence::new(self.cores.clone()).ok()
    }
}

impl BFHypergraph {
    /// The core hypergraph at `threshold`: each edge cut to the vertices whose membership
    /// reaches `threshold` in the level order, deduplicated, over the union of the cuts.
    pub fn level_core(&self, threshold: LevelPair) -> CrispHypergraph {
        self.collect_cuts(|v| !v.is_neutral() && v.reaches_level(threshold))
    }

    /// The distinct nonneutral memberships, strongest first in the level order.
    pub fn level_candidates(&self) -> Vec<LevelPair> {
        let mut values: Vec<LevelPair> = self
            .membership_values()
            .into_iter()
            .map(|(p, n)| BipolarValue::from_micros(p, n).expect("stored values are valid"))
            .collect();
        values.sort_by(|a, b| a.level_cmp(*b));
        values
    }

    /// Sweeps the candidate levels and records one level per change of the core edge
    /// family. Consecutive cores must form a strict absorb chain.
    pub fn fundamental_sequence(&self) -> Result<FundamentalSequence> {
        let mut levels = Vec::new();
        let mut cores: Vec<CrispHypergraph> = Vec::new();
        let mut last_family: Option<BTreeSet<VertexSet>> = None;
        for level in self.level_candidates() {
            let core = self.level_core(level);
            let family = global_family(self, &core);
            if last_family.as_ref() != Some(&family) {
                levels.push(level);
                cores.push(core);
                last_family = Some(family);
            }
        }
        for (i, pair) in cores.windows(2).enumerate() {
            let coarse = label_family(&pair[0]);
            let fine = label_family(&pair[1]);
            if !strictly_absorbs(&coarse, &fine) {
                return Err(Error::Structural(format!(
                    "core at level {} is not strictly absorbed by the core at level {}",
                    levels[i],
                    levels[i + 1]
                )));
            }
        }
        Ok(FundamentalSequence { levels, cores })
    }

    /// Every membership occurring in an edge is itself a fundamental level, so no edge
    /// changes inside a band.
    pub fn is_sectionally_elementary(&self) -> Result<bool> {
        let sequence = self.fundamental_sequence()?;
        let levels: HashSet<&LevelPair> = sequence.levels.iter().collect();
        Ok(self
            .edges()
            .iter()
            .flat_map(|e| e.values())
            .filter(|v| !v.is_neutral())
            .all(|v| levels.contains(v)))
    }

    /// The cores form an ordered sequence.
    pub fn is_ordered(&self) -> Result<bool> {
        let sequence = self.fundamental_sequence()?;
        Ok(sequence.as_sequence().is_none_or(|s| s.is_ordered()))
    }

    /// The cores form a simply ordered sequence.
    pub fn is_simply_ordered(&self) -> Result<bool> {
        let sequence = self.fundamental_sequence()?;
        Ok(sequence.as_sequence().is_none_or(|s| s.is_simply_ordered()))
    }
}

/// Edge family of a core in terms of the hypergraph's own vertex indices.
fn global_family(h: &BFHypergraph, core: &CrispHypergraph) -> BTreeSet<VertexSet> {
    core.edges()
        .iter()
        .map(|edge| {
            edge.iter()
                .map(|&i| {
                    let label = &core.vertices()[i];
                    h.vertices().iter().position(|v| v == label).expect("core vertex in H")
                })
                .collect()
        })
        .collect()
}

fn label_family(h: &CrispHypergraph) -> Vec<BTreeSet<String>> {
    (0..h.edge_count())
        .map(|j| h.edge_labels(j).into_iter().map(|l| l.to_string()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const NIL: (f64, f64) = (0.0, 0.0);

    fn table2() -> BFHypergraph {
        BFHypergraph::from_table(
            &["a", "b", "c", "d"],
            &["E1", "E2", "E3", "E4", "E5"],
            &[
                &[(0.7, -0.2), (0.9, -0.2), NIL, NIL, (0.4, -0.3)],
                &[(0.7, -0.2), (0.9, -0.2), (0.9, -0.2), (0.7, -0.2), NIL],
                &[NIL, NIL, (0.9, -0.2), (0.7, -0.2), (0.4, -0.3)],
                &[NIL, (0.4, -0.3), NIL, (0.4, -0.3), (0.4, -0.3)],
            ],
        )
        .unwrap()
    }

    fn bv(p: f64, n: f64) -> BipolarValue {
        BipolarValue::new(p, n).unwrap()
    }

    fn family(h: &CrispHypergraph) -> BTreeSet<BTreeSet<String>> {
        label_family(h).into_iter().collect()
    }

    fn fam(sets: &[&[&str]]) -> BTreeSet<BTreeSet<String>> {
        sets.iter()
            .map(|s| s.iter().map(|x| x.to_string()).collect())
            .collect()
    }

    #[test]
    fn two_level_sequence() {
        let h = table2();
        let fs = h.fundamental_sequence().unwrap();
        assert_eq!(fs.levels(), [bv(0.9, -0.2), bv(0.4, -0.3)]);
        assert_eq!(family(&fs.cores()[0]), fam(&[&["a", "b"], &["b", "c"]]));
        assert_eq!(
            family(&fs.cores()[1]),
            fam(&[&["a", "b"], &["a", "b", "d"], &["b", "c"], &["b", "c", "d"], &["a", "c", "d"]])
        );
        assert!(!h.is_sectionally_elementary().unwrap());
        assert!(h.is_ordered().unwrap());
        assert!(h.is_simply_ordered().unwrap());
        assert_eq!(h.height(), bv(0.9, -0.3));
    }

    #[test]
    fn or_level_hypergraph_examples() {
        let h = table2();
        assert_eq!(family(&h.level_hypergraph(bv(0.7, -0.2))).len(), 5);
        assert_eq!(
            family(&h.level_hypergraph(bv(0.7, -0.3))),
            fam(&[&["a", "b"], &["a", "b", "d"], &["b", "c"], &["b", "c", "d"], &["a", "c", "d"]])
        );
    }

    #[test]
    fn single_constant_edge() {
        let h = BFHypergraph::from_table(&["a", "b"], &["E1"], &[&[(0.6, -0.1)], &[(0.6, -0.1)]]).unwrap();
        let fs = h.fundamental_sequence().unwrap();
        assert_eq!(fs.levels(), [bv(0.6, -0.1)]);
        assert_eq!(fs.cores()[0].edge(0).len(), 2);
        assert!(h.is_sectionally_elementary().unwrap());
        assert!(h.is_simply_ordered().unwrap());
    }

    #[test]
    fn sectional_elementarity_of_a_two_valued_edge() {
        let h = BFHypergraph::from_table(&["a", "b"], &["E1"], &[&[(0.5, -0.5)], &[(0.3, -0.2)]]).unwrap();
        let fs = h.fundamental_sequence().unwrap();
        assert_eq!(fs.levels(), [bv(0.5, -0.5), bv(0.3, -0.2)]);
        assert!(h.is_sectionally_elementary().unwrap());
    }

    #[test]
    fn bands() {
        let fs = table2().fundamental_sequence().unwrap();
        assert_eq!(fs.band_of(BipolarValue::EXTREME), None);
        assert_eq!(fs.band_of(bv(0.9, -0.2)), Some(0));
        assert_eq!(fs.band_of(bv(0.8, -0.1)), Some(0));
        assert_eq!(fs.band_of(bv(0.4, -0.3)), Some(1));
        assert_eq!(fs.band_of(BipolarValue::NEUTRAL), Some(1));
    }
}
