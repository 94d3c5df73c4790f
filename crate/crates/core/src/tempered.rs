//! Tempered hypergraphs: edges built from a crisp hypergraph and a vertex weighting by
//! taking, per crisp edge, the weakest weight of its vertices.

use crate::crisp::CrispHypergraph;
use crate::error::{Error, Result};
use crate::fuzzy_set::{BipolarFuzzySet, VertexSet};
use crate::hypergraph::{BFHypergraph, BipolarMatrix};
use crate::value::{labels, BipolarValue, Label, SCALE};

/// Default bound on `n` for [`gen_elementary_simple_full`].
pub const DEFAULT_FULL_BOUND: usize = 10;

/// A crisp base hypergraph together with a vertex weighting over the same vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemperingWitness {
    base: CrispHypergraph,
    weights: BipolarFuzzySet,
}

impl TemperingWitness {
    pub fn new(base: CrispHypergraph, weights: BipolarFuzzySet) -> Result<Self> {
        if base.vertices() != weights.universe() {
            return Err(Error::Structural(
                "weights and base hypergraph must share the vertex list".into(),
            ));
        }
        Ok(TemperingWitness { base, weights })
    }

    pub fn base(&self) -> &CrispHypergraph {
        &self.base
    }

    pub fn weights(&self) -> &BipolarFuzzySet {
        &self.weights
    }

    /// The value every vertex of `edge` receives: `(min p, max n)` of the weights on it.
    pub fn edge_value(&self, edge: &VertexSet) -> BipolarValue {
        edge.iter()
            .map(|&i| self.weights.value(i))
            .reduce(BipolarValue::meet)
            .unwrap_or(BipolarValue::NEUTRAL)
    }
}

/// Builds the tempered hypergraph: one edge per base edge `F`, constant on `F` with the
/// meet of the weights over `F`, and `(0, 0)` elsewhere.
///
/// The off-edge negative membership written as `-1` in the textbook formula is available
/// through [`tempered_membership`]; storing it would put every vertex in every support.
pub fn temper(witness: &TemperingWitness) -> Result<BFHypergraph> {
    let base = witness.base();
    let mut columns = Vec::with_capacity(base.edge_count());
    for (name, edge) in base.edge_names().iter().zip(base.edges()) {
        let value = witness.edge_value(edge);
        if value.is_neutral() {
            return Err(Error::TrivialEdge(name.clone()));
        }
        columns.push(
            (0..base.order())
                .map(|i| if edge.contains(&i) { value } else { BipolarValue::NEUTRAL })
                .collect(),
        );
    }
    let matrix = BipolarMatrix::from_columns(base.vertices().to_vec(), base.edge_names().to_vec(), columns)?;
    BFHypergraph::from_matrix(matrix)
}

/// The tempered membership of `vertex` in base edge `edge` exactly as the defining
/// formula states: off the edge it is `(0, -1)`.
pub fn tempered_membership(witness: &TemperingWitness, edge: usize, vertex: usize) -> BipolarValue {
    let members = witness.base().edge(edge);
    if members.contains(&vertex) {
        witness.edge_value(members)
    } else {
        BipolarValue::from_micros(0, -SCALE).expect("(0,-1) is a valid value")
    }
}

/// Decides whether `h` is tempered and returns a witness if it is.
///
/// `h` must be elementary with pairwise distinct supports. The candidate weighting gives
/// each vertex the join of the values of the edges containing it; any weighting that
/// tempers `h` dominates this one on every edge, so `h` is tempered exactly when the
/// candidate reproduces every edge value.
pub fn is_tempered(h: &BFHypergraph) -> Option<TemperingWitness> {
    if !h.is_elementary() || !h.is_strongly_support_simple() {
        return None;
    }
    let base = h.support_hypergraph();
    let edge_values: Vec<BipolarValue> = h.edges().iter().map(edge_constant).collect();
    let weights: Vec<BipolarValue> = (0..h.order())
        .map(|i| {
            base.edges()
                .iter()
                .zip(&edge_values)
                .filter(|(edge, _)| edge.contains(&i))
                .map(|(_, v)| *v)
                .fold(BipolarValue::NEUTRAL, BipolarValue::join)
        })
        .collect();
    let weights = BipolarFuzzySet::new(h.vertices().to_vec(), weights).ok()?;
    let witness = TemperingWitness::new(base, weights).ok()?;
    let reproduces = witness
        .base()
        .edges()
        .iter()
        .zip(&edge_values)
        .all(|(edge, v)| witness.edge_value(edge) == *v);
    reproduces.then_some(witness)
}

fn edge_constant(edge: &BipolarFuzzySet) -> BipolarValue {
    edge.values()
        .iter()
        .copied()
        .find(|v| !v.is_neutral())
        .unwrap_or(BipolarValue::NEUTRAL)
}

/// The three structural conditions of the classical characterization of tempered
/// hypergraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TemperingConditions {
    pub elementary: bool,
    pub support_simple: bool,
    pub simply_ordered: bool,
}

impl TemperingConditions {
    pub fn all(self) -> bool {
        self.elementary && self.support_simple && self.simply_ordered
    }
}

pub fn tempering_conditions(h: &BFHypergraph) -> Result<TemperingConditions> {
    Ok(TemperingConditions {
        elementary: h.is_elementary(),
        support_simple: h.is_support_simple(),
        simply_ordered: h.is_simply_ordered()?,
    })
}

/// Witness built from the fundamental sequence: a vertex first appearing in the core at
/// level `t_i` gets weight `t_i`, and the base is the support hypergraph.
///
/// Returns `Ok(None)` when the three conditions do not all hold, and a structural error
/// when they hold but the construction fails to reproduce `h`. The construction is exact
/// when all memberships of `h` are mutually comparable; [`is_tempered`] is the general
/// decision procedure.
pub fn theorem_witness(h: &BFHypergraph) -> Result<Option<TemperingWitness>> {
    if !tempering_conditions(h)?.all() {
        return Ok(None);
    }
    let sequence = h.fundamental_sequence()?;
    let mut weights = vec![BipolarValue::NEUTRAL; h.order()];
    let mut assigned = vec![false; h.order()];
    for (level, core) in sequence.levels().iter().zip(sequence.cores()) {
        for label in core.vertices() {
            let i = h.vertices().iter().position(|v| v == label).expect("core vertex in H");
            if !assigned[i] {
                weights[i] = *level;
                assigned[i] = true;
            }
        }
    }
    let weights = BipolarFuzzySet::new(h.vertices().to_vec(), weights)?;
    let witness = TemperingWitness::new(h.support_hypergraph(), weights)?;
    match temper(&witness) {
        Ok(rebuilt) if rebuilt == *h => Ok(Some(witness)),
        Ok(_) | Err(_) => Err(Error::Structural(
            "level-based weighting does not reproduce the hypergraph".into(),
        )),
    }
}

/// `N` pairwise incomparable edges on two vertices: edge `i` has membership
/// `(1/(i+1), -1 + 1/(i+1))` at both vertices. The result is simple.
pub fn gen_unbounded_simple(n: usize) -> Result<BFHypergraph> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "N",
            value: 0.0,
            range: ">= 1",
        });
    }
    let names = (1..=n)
        .map(|i| Label::new(format!("E{i}")))
        .collect::<Result<Vec<_>>>()?;
    let columns = (1..=n)
        .map(|i| {
            let p = reciprocal_micros(i + 1);
            let value = BipolarValue::from_micros(p, p - SCALE)?;
            Ok(vec![value; 2])
        })
        .collect::<Result<Vec<_>>>()?;
    BFHypergraph::from_matrix(BipolarMatrix::from_columns(labels(["x", "y"])?, names, columns)?)
}

/// One edge per nonempty `W` of an `n`-vertex set, constant `(1/|W|, -1 + 1/|W|)` on `W`.
/// Edges are listed in binary-counter order of `W`. The result is elementary and simple
/// with `2^n - 1` edges.
pub fn gen_elementary_simple_full(n: usize) -> Result<BFHypergraph> {
    gen_elementary_simple_full_within(n, DEFAULT_FULL_BOUND)
}

pub fn gen_elementary_simple_full_within(n: usize, bound: usize) -> Result<BFHypergraph> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "n",
            value: 0.0,
            range: ">= 1",
        });
    }
    if n > bound {
        return Err(Error::Capacity {
            what: "full elementary generator vertex count",
            bound,
            actual: n,
        });
    }
    let vertices = (1..=n)
        .map(|i| Label::new(format!("v{i}")))
        .collect::<Result<Vec<_>>>()?;
    let mut names = Vec::new();
    let mut columns = Vec::new();
    for mask in 1usize..(1 << n) {
        let size = mask.count_ones() as usize;
        let p = reciprocal_micros(size);
        let value = BipolarValue::from_micros(p, p - SCALE)?;
        names.push(Label::new(format!("E{mask}"))?);
        columns.push(
            (0..n)
                .map(|i| if mask >> i & 1 == 1 { value } else { BipolarValue::NEUTRAL })
                .collect(),
        );
    }
    BFHypergraph::from_matrix(BipolarMatrix::from_columns(vertices, names, columns)?)
}

/// `1/k` on the membership grid, rounded to nearest.
fn reciprocal_micros(k: usize) -> i32 {
    let k = k as i64;
    ((i64::from(SCALE) + k / 2) / k) as i32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(p: f64, n: f64) -> BipolarValue {
        BipolarValue::new(p, n).unwrap()
    }

    fn weights(values: &[(&str, f64, f64)]) -> BipolarFuzzySet {
        BipolarFuzzySet::new(
            labels(values.iter().map(|v| v.0)).unwrap(),
            values.iter().map(|&(_, p, n)| bv(p, n)).collect(),
        )
        .unwrap()
    }

    fn example_witness() -> TemperingWitness {
        let base = CrispHypergraph::from_labels(
            &["a", "b", "c", "d"],
            [("E1", vec!["a", "b"]), ("E2", vec!["b", "d"]), ("E3", vec!["b", "c"]), ("E4", vec!["a", "c"])],
        )
        .unwrap();
        let a = weights(&[("a", 0.2, -0.7), ("b", 0.0, -0.9), ("c", 0.0, -0.9), ("d", 0.3, -0.4)]);
        TemperingWitness::new(base, a).unwrap()
    }

    #[test]
    fn temper_applies_meet() {
        let w = example_witness();
        let h = temper(&w).unwrap();
        assert_eq!(h.edge(0).get("a"), Some(bv(0.0, -0.7)));
        assert_eq!(h.edge(0).get("b"), Some(bv(0.0, -0.7)));
        assert_eq!(h.edge(0).get("c"), Some(BipolarValue::NEUTRAL));
        assert_eq!(tempered_membership(&w, 0, 2), bv(0.0, -1.0));
        assert_eq!(tempered_membership(&w, 0, 0), bv(0.0, -0.7));
        assert_eq!(h.edge(1).get("b"), Some(bv(0.0, -0.4)));
        assert_eq!(h.edge(2).get("c"), Some(bv(0.0, -0.9)));
        assert_eq!(h.edge(3).get("c"), Some(bv(0.0, -0.7)));
        assert!(h.is_elementary());
        assert!(is_tempered(&h).is_some());
    }

    #[test]
    fn constant_weights_give_constant_edges() {
        let base = CrispHypergraph::from_labels(&["a", "b", "c"], [("E1", vec!["a", "b"]), ("E2", vec!["b", "c"])])
            .unwrap();
        let a = weights(&[("a", 0.4, -0.6), ("b", 0.4, -0.6), ("c", 0.4, -0.6)]);
        let h = temper(&TemperingWitness::new(base, a).unwrap()).unwrap();
        assert!(h.edges().iter().flat_map(|e| e.values()).all(|v| v.is_neutral() || *v == bv(0.4, -0.6)));
    }

    #[test]
    fn singleton_edge_takes_the_weight() {
        let base = CrispHypergraph::from_labels(&["a"], [("E1", vec!["a"])]).unwrap();
        let a = weights(&[("a", 0.3, -0.8)]);
        let h = temper(&TemperingWitness::new(base, a).unwrap()).unwrap();
        assert_eq!(h.cell(0, 0), bv(0.3, -0.8));
        let w = is_tempered(&h).unwrap();
        assert_eq!(w.weights().value(0), bv(0.3, -0.8));
        assert_eq!(theorem_witness(&h).unwrap().unwrap().weights().value(0), bv(0.3, -0.8));
    }

    #[test]
    fn trivial_meet_is_rejected() {
        let base = CrispHypergraph::from_labels(&["a", "b"], [("E1", vec!["a", "b"])]).unwrap();
        let a = weights(&[("a", 0.3, 0.0), ("b", 0.0, -0.3)]);
        assert!(matches!(temper(&TemperingWitness::new(base, a).unwrap()), Err(Error::TrivialEdge(_))));
    }

    #[test]
    fn non_elementary_is_not_tempered() {
        let h = BFHypergraph::from_table(&["a", "b"], &["E1"], &[&[(0.5, -0.5)], &[(0.3, -0.2)]]).unwrap();
        assert!(is_tempered(&h).is_none());
        assert_eq!(theorem_witness(&h).unwrap(), None);
    }

    #[test]
    fn characterization_fails_for_incomparable_values() {
        // tempered by A(a) = (0.5,-0.2), A(b) = (0.3,-0.6) but not simply ordered
        let base =
            CrispHypergraph::from_labels(&["a", "b"], [("E1", vec!["a"]), ("E2", vec!["b"]), ("E3", vec!["a", "b"])])
                .unwrap();
        let a = weights(&[("a", 0.5, -0.2), ("b", 0.3, -0.6)]);
        let h = temper(&TemperingWitness::new(base, a).unwrap()).unwrap();
        assert!(is_tempered(&h).is_some());
        assert!(!tempering_conditions(&h).unwrap().simply_ordered);

        // conditions hold but no weighting works
        let h = BFHypergraph::from_table(&["a", "b"], &["E1", "E2"], &[&[(0.5, -0.2), (0.3, -0.6)], &[(0.0, 0.0), (0.3, -0.6)]])
            .unwrap();
        assert!(tempering_conditions(&h).unwrap().all());
        assert!(is_tempered(&h).is_none());
        assert!(matches!(theorem_witness(&h), Err(Error::Structural(_))));
    }

    #[test]
    fn generators() {
        let h = gen_unbounded_simple(1).unwrap();
        assert_eq!(h.size(), 1);
        assert_eq!(h.cell(0, 0), bv(0.5, -0.5));
        assert_eq!(h.cell(1, 0), bv(0.5, -0.5));
        let h = gen_unbounded_simple(2).unwrap();
        assert_eq!(h.cell(0, 1).to_string(), "(0.333333,-0.666667)");
        assert!(gen_unbounded_simple(3).unwrap().is_simple());
        assert!(gen_unbounded_simple(0).is_err());

        let full = gen_elementary_simple_full(2).unwrap();
        assert_eq!(full.size(), 3);
        assert_eq!(full.cell(0, 0), bv(1.0, 0.0));
        assert_eq!(full.cell(0, 2), bv(0.5, -0.5));
        let one = gen_elementary_simple_full(1).unwrap();
        assert_eq!((one.order(), one.size()), (1, 1));
        let three = gen_elementary_simple_full(3).unwrap();
        assert_eq!(three.size(), 7);
        assert!(three.is_simple() && three.is_elementary());
        assert!(matches!(gen_elementary_simple_full(11), Err(Error::Capacity { bound: 10, .. })));
    }
}
