//! Random instance generators and brute-force oracles shared by the integration tests.
//!
//! The oracles work from raw matrix cells with their own loops; they do not call the
//! library operation they are checking.

#![allow(dead_code)]

use std::collections::BTreeSet;

use bipolar_hypergraph::{BFHypergraph, BipolarFuzzySet, BipolarMatrix, BipolarValue, CrispHypergraph, Label, TemperingWitness};
use proptest::prelude::*;
use rand::Rng;

pub type Family = BTreeSet<BTreeSet<String>>;

pub fn bv(p: f64, n: f64) -> BipolarValue {
    BipolarValue::new(p, n).unwrap()
}

/// A value on the 0.1 grid, possibly neutral.
pub fn grid_value(rng: &mut impl Rng) -> BipolarValue {
    BipolarValue::from_micros(rng.random_range(0..=10) * 100_000, -rng.random_range(0..=10) * 100_000).unwrap()
}

/// A nonneutral value on the 0.1 grid.
pub fn nonneutral_grid_value(rng: &mut impl Rng) -> BipolarValue {
    loop {
        let v = grid_value(rng);
        if !v.is_neutral() {
            return v;
        }
    }
}

/// A value with `p >= 0.2` and `n <= -0.2`.
pub fn strong_grid_value(rng: &mut impl Rng) -> BipolarValue {
    BipolarValue::from_micros(rng.random_range(2..=10) * 100_000, -rng.random_range(2..=10) * 100_000).unwrap()
}

pub fn names(prefix: &str, count: usize) -> Vec<Label> {
    (1..=count).map(|i| Label::new(format!("{prefix}{i}")).unwrap()).collect()
}

/// Makes every column nontrivial and every row covered by filling fixed cells.
pub fn repair(columns: &mut [Vec<BipolarValue>], fill: BipolarValue) {
    let rows = columns.first().map_or(0, Vec::len);
    let width = columns.len();
    for (j, column) in columns.iter_mut().enumerate() {
        if column.iter().all(|v| v.is_neutral()) {
            column[j % rows] = fill;
        }
    }
    for i in 0..rows {
        if columns.iter().all(|c| c[i].is_neutral()) {
            columns[i % width][i] = fill;
        }
    }
}

pub fn from_columns(columns: Vec<Vec<BipolarValue>>) -> BFHypergraph {
    let rows = columns[0].len();
    let width = columns.len();
    BFHypergraph::from_matrix(BipolarMatrix::from_columns(names("v", rows), names("E", width), columns).unwrap()).unwrap()
}

/// A random valid hypergraph: each cell neutral with probability one half, otherwise on
/// the 0.1 grid.
pub fn random_hypergraph(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> BFHypergraph {
    let rows = rng.random_range(1..=max_vertices);
    let width = rng.random_range(1..=max_edges);
    let mut columns: Vec<Vec<BipolarValue>> = (0..width)
        .map(|_| {
            (0..rows)
                .map(|_| if rng.random_bool(0.5) { BipolarValue::NEUTRAL } else { nonneutral_grid_value(rng) })
                .collect()
        })
        .collect();
    let fill = nonneutral_grid_value(rng);
    repair(&mut columns, fill);
    from_columns(columns)
}

/// A random elementary hypergraph: random supports, one random value per edge.
pub fn random_elementary(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> BFHypergraph {
    let rows = rng.random_range(1..=max_vertices);
    let width = rng.random_range(1..=max_edges);
    let mut columns: Vec<Vec<BipolarValue>> = Vec::new();
    for _ in 0..width {
        let value = nonneutral_grid_value(rng);
        let mut column: Vec<BipolarValue> =
            (0..rows).map(|_| if rng.random_bool(0.5) { value } else { BipolarValue::NEUTRAL }).collect();
        if column.iter().all(|v| v.is_neutral()) {
            column[rng.random_range(0..rows)] = value;
        }
        columns.push(column);
    }
    for i in 0..rows {
        if columns.iter().all(|c| c[i].is_neutral()) {
            let j = rng.random_range(0..width);
            let value = *columns[j].iter().find(|v| !v.is_neutral()).unwrap();
            columns[j][i] = value;
        }
    }
    from_columns(columns)
}

/// A random weighting and crisp base: at most `max_vertices` vertices, at most
/// `max_edges` distinct base edges covering the vertices, weights from `value`, every
/// base edge with a nonneutral meet.
pub fn random_witness(
    rng: &mut impl Rng,
    max_vertices: usize,
    max_edges: usize,
    mut value: impl FnMut(&mut dyn rand::RngCore) -> BipolarValue,
) -> TemperingWitness {
    loop {
        let n = rng.random_range(1..=max_vertices);
        let m = rng.random_range(1..=max_edges);
        let mut masks = BTreeSet::new();
        for _ in 0..m {
            masks.insert(rng.random_range(1u32..(1 << n)));
        }
        let used: u32 = masks.iter().fold(0, |a, b| a | b);
        let kept: Vec<usize> = (0..n).filter(|i| used >> i & 1 == 1).collect();
        let vertices: Vec<Label> = kept.iter().map(|i| Label::new(format!("v{}", i + 1)).unwrap()).collect();
        let edges: Vec<(Label, BTreeSet<usize>)> = masks
            .iter()
            .enumerate()
            .map(|(j, mask)| {
                let members = kept.iter().enumerate().filter(|(_, &i)| mask >> i & 1 == 1).map(|(k, _)| k).collect();
                (Label::new(format!("F{}", j + 1)).unwrap(), members)
            })
            .collect();
        let weights: Vec<BipolarValue> = (0..vertices.len()).map(|_| value(rng)).collect();
        let base = CrispHypergraph::new(vertices.clone(), edges).unwrap();
        let witness = TemperingWitness::new(base, BipolarFuzzySet::new(vertices, weights).unwrap()).unwrap();
        if witness.base().edges().iter().all(|e| !witness.edge_value(e).is_neutral()) {
            return witness;
        }
    }
}

/// Cell matrix as rows of raw `(p, n)` grid units.
pub fn cells(h: &BFHypergraph) -> Vec<Vec<(i32, i32)>> {
    (0..h.order())
        .map(|i| (0..h.size()).map(|j| (h.cell(i, j).p_micros(), h.cell(i, j).n_micros())).collect())
        .collect()
}

/// Brute-force fundamental sequence: for every distinct nonneutral pair `t` (sorted by
/// `p` descending then `n` ascending), cut each edge to the vertices with a larger `p`, or
/// an equal `p` and an `n` at most `t.n`; drop empty cuts; keep a level whenever the
/// family differs from the previous one.
pub fn oracle_fundamental(h: &BFHypergraph) -> Vec<((i32, i32), Family)> {
    let m = cells(h);
    let mut pairs: Vec<(i32, i32)> = m.iter().flatten().copied().filter(|&c| c != (0, 0)).collect();
    pairs.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    pairs.dedup();
    let mut out: Vec<((i32, i32), Family)> = Vec::new();
    for t in pairs {
        let mut family = Family::new();
        for j in 0..h.size() {
            let cut: BTreeSet<String> = m
                .iter()
                .enumerate()
                .filter(|(_, row)| {
                    let (p, n) = row[j];
                    (p, n) != (0, 0) && (p > t.0 || (p == t.0 && n <= t.1))
                })
                .map(|(i, _)| h.vertices()[i].to_string())
                .collect();
            if !cut.is_empty() {
                family.insert(cut);
            }
        }
        if out.last().map(|(_, f)| f) != Some(&family) {
            out.push((t, family));
        }
    }
    out
}

pub fn family_of(h: &CrispHypergraph) -> Family {
    (0..h.edge_count())
        .map(|j| h.edge_labels(j).into_iter().map(|l| l.to_string()).collect())
        .collect()
}

/// Pointwise dominance of column `a` by column `b`, from raw cells.
pub fn oracle_dominated(m: &[Vec<(i32, i32)>], a: usize, b: usize) -> bool {
    m.iter().all(|row| row[a].0 <= row[b].0 && row[a].1 >= row[b].1)
}

pub fn oracle_support(m: &[Vec<(i32, i32)>], j: usize) -> BTreeSet<usize> {
    (0..m.len()).filter(|&i| m[i][j] != (0, 0)).collect()
}

pub fn oracle_simple(h: &BFHypergraph) -> bool {
    let m = cells(h);
    let w = h.size();
    (0..w).all(|a| (0..w).all(|b| a == b || !oracle_dominated(&m, a, b)))
}

/// Proptest strategy for valid hypergraphs with up to `max_vertices` x `max_edges` cells
/// on the 0.1 grid.
pub fn arb_hypergraph(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = BFHypergraph> {
    (1..=max_vertices, 1..=max_edges).prop_flat_map(|(rows, width)| {
        let cell = prop_oneof![
            Just(BipolarValue::NEUTRAL),
            (0..=10i32, 0..=10i32).prop_map(|(p, n)| BipolarValue::from_micros(p * 100_000, -n * 100_000).unwrap()),
        ];
        prop::collection::vec(prop::collection::vec(cell, rows), width).prop_map(|mut columns| {
            repair(&mut columns, bv(0.5, -0.5));
            from_columns(columns)
        })
    })
}

/// Proptest strategy for a raw value.
pub fn arb_value() -> impl Strategy<Value = BipolarValue> {
    (0..=1_000_000i32, 0..=1_000_000i32).prop_map(|(p, n)| BipolarValue::from_micros(p, -n).unwrap())
}
