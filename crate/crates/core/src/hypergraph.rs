//! Bipolar fuzzy hypergraphs and the raw incidence matrices underneath them.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::crisp::CrispHypergraph;
use crate::error::{Error, Result};
use crate::fuzzy_set::{ensure_unique, BipolarFuzzySet, VertexSet};
use crate::strength::Strength;
use crate::value::{BipolarValue, Label};

/// A labelled `|V| x |E|` matrix of memberships with no structural requirements beyond
/// unique labels. Columns are the edges (or classes), rows the vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipolarMatrix {
    vertices: Arc<[Label]>,
    names: Vec<Label>,
    columns: Vec<BipolarFuzzySet>,
}

impl BipolarMatrix {
    /// Builds a matrix from rows: `rows[i][j]` is the membership of vertex `i` in edge `j`.
    pub fn from_rows(
        vertices: Vec<Label>,
        names: Vec<Label>,
        rows: Vec<Vec<BipolarValue>>,
    ) -> Result<Self> {
        if rows.len() != vertices.len() {
            return Err(Error::DimensionMismatch {
                context: "incidence matrix rows".into(),
                expected: vertices.len(),
                found: rows.len(),
            });
        }
        for (vertex, row) in vertices.iter().zip(&rows) {
            if row.len() != names.len() {
                return Err(Error::DimensionMismatch {
                    context: format!("incidence matrix row `{vertex}`"),
                    expected: names.len(),
                    found: row.len(),
                });
            }
        }
        let columns = (0..names.len())
            .map(|j| rows.iter().map(|row| row[j]).collect())
            .collect();
        Self::from_columns(vertices, names, columns)
    }

    /// Builds a matrix from columns: `columns[j][i]` is the membership of vertex `i` in
    /// edge `j`.
    pub fn from_columns(
        vertices: Vec<Label>,
        names: Vec<Label>,
        columns: Vec<Vec<BipolarValue>>,
    ) -> Result<Self> {
        ensure_unique(&vertices, Error::DuplicateVertex)?;
        ensure_unique(&names, Error::DuplicateEdge)?;
        if columns.len() != names.len() {
            return Err(Error::DimensionMismatch {
                context: "incidence matrix columns".into(),
                expected: names.len(),
                found: columns.len(),
            });
        }
        let universe: Arc<[Label]> = vertices.into();
        let columns = columns
            .into_iter()
            .map(|values| BipolarFuzzySet::from_shared(universe.clone(), values))
            .collect::<Result<_>>()?;
        Ok(BipolarMatrix {
            vertices: universe,
            names,
            columns,
        })
    }

    /// Builds a matrix from named bipolar fuzzy sets over one universe.
    pub fn from_sets(vertices: Vec<Label>, edges: Vec<(Label, BipolarFuzzySet)>) -> Result<Self> {
        let mut names = Vec::with_capacity(edges.len());
        let mut columns = Vec::with_capacity(edges.len());
        for (name, set) in edges {
            if set.universe() != vertices.as_slice() {
                return Err(Error::Structural(format!(
                    "edge `{name}` is defined over a different universe"
                )));
            }
            names.push(name);
            columns.push(set.values().to_vec());
        }
        Self::from_columns(vertices, names, columns)
    }

    pub fn vertices(&self) -> &[Label] {
        &self.vertices
    }

    pub fn names(&self) -> &[Label] {
        &self.names
    }

    pub fn columns(&self) -> &[BipolarFuzzySet] {
        &self.columns
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn width(&self) -> usize {
        self.names.len()
    }

    /// Membership of vertex `i` in column `j`.
    pub fn cell(&self, i: usize, j: usize) -> BipolarValue {
        self.columns[j].value(i)
    }

    /// Row `i` of the matrix.
    pub fn row(&self, i: usize) -> Vec<BipolarValue> {
        self.columns.iter().map(|c| c.value(i)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<BipolarValue>> {
        (0..self.order()).map(|i| self.row(i)).collect()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.as_str() == label)
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|v| v.as_str() == name)
    }

    /// The transposed matrix: rows become columns and labels swap roles.
    pub fn transpose(&self) -> BipolarMatrix {
        let columns = (0..self.order()).map(|i| self.row(i)).collect();
        Self::from_columns(self.names.clone(), self.vertices.to_vec(), columns)
            .expect("labels of a valid matrix stay unique")
    }

    /// Keeps the listed rows and columns, in their original order.
    pub fn restrict(&self, rows: &VertexSet, columns: &BTreeSet<usize>) -> BipolarMatrix {
        let vertices = rows.iter().map(|&i| self.vertices[i].clone()).collect();
        let names = columns.iter().map(|&j| self.names[j].clone()).collect();
        let cells = columns
            .iter()
            .map(|&j| rows.iter().map(|&i| self.cell(i, j)).collect())
            .collect();
        Self::from_columns(vertices, names, cells).expect("restriction keeps labels unique")
    }

    /// Cut with AND semantics: column `j` keeps vertices with `p >= alpha` and `n <= beta`.
    /// Vertices left out of every nonempty cut form one extra remainder edge.
    ///
    /// The remainder is named `E{m+1}` (primes appended on collision), empty cuts are
    /// dropped and the vertex set is the whole row set.
    pub fn and_cut(&self, threshold: BipolarValue) -> CrispHypergraph {
        let mut edges: Vec<(Label, VertexSet)> = self
            .names
            .iter()
            .zip(&self.columns)
            .map(|(name, column)| {
                let cut = column
                    .values()
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| {
                        v.p_micros() >= threshold.p_micros() && v.n_micros() <= threshold.n_micros()
                    })
                    .map(|(i, _)| i)
                    .collect::<VertexSet>();
                (name.clone(), cut)
            })
            .filter(|(_, cut)| !cut.is_empty())
            .collect();
        let covered: VertexSet = edges.iter().flat_map(|(_, e)| e.iter().copied()).collect();
        let remainder: VertexSet = (0..self.order()).filter(|i| !covered.contains(i)).collect();
        if !remainder.is_empty() {
            edges.push((self.remainder_name(), remainder));
        }
        CrispHypergraph::new(self.vertices.to_vec(), edges).expect("cut edges are nonempty and named uniquely")
    }

    /// Name given to the remainder edge of an AND cut.
    pub fn remainder_name(&self) -> Label {
        let mut name = format!("E{}", self.width() + 1);
        while self.names.iter().any(|n| n.as_str() == name) {
            name.push('\'');
        }
        Label::new(name).expect("generated label is valid")
    }
}

/// A bipolar fuzzy hypergraph: every edge is a nontrivial bipolar fuzzy set over `V` and
/// the edge supports cover `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFHypergraph {
    matrix: BipolarMatrix,
}

impl BFHypergraph {
    /// Builds a hypergraph from its incidence matrix, given row by row.
    pub fn from_incidence(
        vertices: Vec<Label>,
        names: Vec<Label>,
        rows: Vec<Vec<BipolarValue>>,
    ) -> Result<Self> {
        Self::from_matrix(BipolarMatrix::from_rows(vertices, names, rows)?)
    }

    /// Convenience constructor from string labels and `(p, n)` pairs.
    pub fn from_table(vertices: &[&str], names: &[&str], rows: &[&[(f64, f64)]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|&(p, n)| BipolarValue::new(p, n)).collect())
            .collect::<Result<_>>()?;
        Self::from_incidence(crate::value::labels(vertices)?, crate::value::labels(names)?, rows)
    }

    /// Validates a raw matrix: no trivial edge, supports cover every vertex.
    pub fn from_matrix(matrix: BipolarMatrix) -> Result<Self> {
        if let Some(j) = matrix.columns.iter().position(|c| !c.is_nontrivial()) {
            return Err(Error::TrivialEdge(matrix.names[j].clone()));
        }
        if let Some(i) =
            (0..matrix.order()).find(|&i| matrix.columns.iter().all(|c| c.value(i).is_neutral()))
        {
            return Err(Error::UncoveredVertex(matrix.vertices[i].clone()));
        }
        Ok(BFHypergraph { matrix })
    }

    /// The 2-uniform hypergraph of a bipolar fuzzy graph: edge `(name, u, v, value)` has
    /// membership `value` at both endpoints.
    pub fn from_graph_edges<I, S>(vertices: &[&str], edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, S, S, BipolarValue)>,
        S: AsRef<str>,
    {
        let vertex_labels = crate::value::labels(vertices)?;
        let mut names = Vec::new();
        let mut columns = Vec::new();
        for (name, u, v, value) in edges {
            let name = Label::new(name.as_ref())?;
            let position = |x: &str| {
                vertices
                    .iter()
                    .position(|w| *w == x)
                    .ok_or_else(|| Error::UnknownVertex(x.to_owned()))
            };
            let (u, v) = (position(u.as_ref())?, position(v.as_ref())?);
            if u == v || value.is_neutral() {
                return Err(Error::Structural(format!(
                    "graph edge `{name}` needs two distinct endpoints and a nonneutral value"
                )));
            }
            let mut column = vec![BipolarValue::NEUTRAL; vertices.len()];
            column[u] = value;
            column[v] = value;
            names.push(name);
            columns.push(column);
        }
        Self::from_matrix(BipolarMatrix::from_columns(vertex_labels, names, columns)?)
    }

    pub fn matrix(&self) -> &BipolarMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> BipolarMatrix {
        self.matrix
    }

    pub fn vertices(&self) -> &[Label] {
        self.matrix.vertices()
    }

    pub fn edge_names(&self) -> &[Label] {
        self.matrix.names()
    }

    pub fn edges(&self) -> &[BipolarFuzzySet] {
        self.matrix.columns()
    }

    pub fn edge(&self, j: usize) -> &BipolarFuzzySet {
        &self.matrix.columns[j]
    }

    /// Looks an edge up by name.
    pub fn edge_by_name(&self, name: &str) -> Result<&BipolarFuzzySet> {
        self.matrix
            .column_index(name)
            .map(|j| self.edge(j))
            .ok_or_else(|| Error::UnknownEdge(name.to_owned()))
    }

    pub fn cell(&self, i: usize, j: usize) -> BipolarValue {
        self.matrix.cell(i, j)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.matrix.width()
    }

    /// The support of every edge, keeping edge names.
    pub fn support_hypergraph(&self) -> CrispHypergraph {
        let edges = self
            .edge_names()
            .iter()
            .cloned()
            .zip(self.edges().iter().map(BipolarFuzzySet::support))
            .collect();
        CrispHypergraph::new(self.vertices().to_vec(), edges).expect("supports are nonempty")
    }

    /// Distinct nonneutral membership values occurring anywhere in the matrix.
    pub fn membership_values(&self) -> BTreeSet<(i32, i32)> {
        self.edges()
            .iter()
            .flat_map(|e| e.values().iter())
            .filter(|v| !v.is_neutral())
            .map(|v| (v.p_micros(), v.n_micros()))
            .collect()
    }

    /// `(max p, min n)` over every cell.
    pub fn height(&self) -> BipolarValue {
        self.edges()
            .iter()
            .flat_map(|e| e.values().iter().copied())
            .fold(BipolarValue::NEUTRAL, BipolarValue::join)
    }

    /// Every edge is constant on its support.
    pub fn is_elementary(&self) -> bool {
        self.edges().iter().all(BipolarFuzzySet::is_elementary)
    }

    fn dominated(a: &BipolarFuzzySet, b: &BipolarFuzzySet) -> bool {
        a.values().iter().zip(b.values()).all(|(x, y)| x.dominated_by(*y))
    }

    fn any_pair(&self, violates: impl Fn(&BipolarFuzzySet, &BipolarFuzzySet) -> bool) -> bool {
        let edges = self.edges();
        (0..edges.len()).any(|i| (0..edges.len()).any(|j| i != j && violates(&edges[i], &edges[j])))
    }

    /// No edge is dominated pointwise by a different edge (repeated edges count as a
    /// violation).
    pub fn is_simple(&self) -> bool {
        !self.any_pair(Self::dominated)
    }

    /// Like [`is_simple`](Self::is_simple) but only edges with equal supports are compared.
    pub fn is_support_simple(&self) -> bool {
        !self.any_pair(|a, b| a.support() == b.support() && Self::dominated(a, b))
    }

    /// No two edges share a support.
    pub fn is_strongly_support_simple(&self) -> bool {
        !self.any_pair(|a, b| a.support() == b.support())
    }

    /// Every support has exactly two vertices, so the hypergraph is a bipolar fuzzy graph.
    pub fn is_bipolar_fuzzy_graph(&self) -> bool {
        self.edges().iter().all(|e| e.support().len() == 2)
    }

    /// Level hypergraph with OR semantics: edge `A` becomes
    /// `{x | p_A(x) >= s or n_A(x) <= r}` for `threshold = (s, r)`.
    ///
    /// Empty cuts are dropped, repeated cuts kept once (under the first edge's name), and
    /// the vertex set is the union of the remaining cuts.
    pub fn level_hypergraph(&self, threshold: BipolarValue) -> CrispHypergraph {
        self.collect_cuts(|v| {
            v.p_micros() >= threshold.p_micros() || v.n_micros() <= threshold.n_micros()
        })
    }

    /// Builds the crisp hypergraph of per-edge cuts given by `keep`, deduplicated, over the
    /// union of the cuts.
    pub(crate) fn collect_cuts(&self, keep: impl Fn(BipolarValue) -> bool) -> CrispHypergraph {
        let mut seen = BTreeSet::new();
        let mut cuts = Vec::new();
        for (name, edge) in self.edge_names().iter().zip(self.edges()) {
            let cut: VertexSet = edge
                .values()
                .iter()
                .enumerate()
                .filter(|(_, v)| keep(**v))
                .map(|(i, _)| i)
                .collect();
            if !cut.is_empty() && seen.insert(cut.clone()) {
                cuts.push((name.clone(), cut));
            }
        }
        let used: VertexSet = cuts.iter().flat_map(|(_, c)| c.iter().copied()).collect();
        let renumber: Vec<Option<usize>> = {
            let mut next = 0;
            (0..self.order())
                .map(|i| {
                    used.contains(&i).then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        };
        let vertices = used.iter().map(|&i| self.vertices()[i].clone()).collect();
        let edges = cuts
            .into_iter()
            .map(|(name, cut)| (name, cut.iter().map(|&i| renumber[i].expect("used vertex")).collect()))
            .collect();
        CrispHypergraph::new(vertices, edges).expect("cuts are nonempty and uniquely named")
    }

    /// Cut with AND semantics plus a remainder edge; see [`BipolarMatrix::and_cut`].
    pub fn partition_cut(&self, threshold: BipolarValue) -> CrispHypergraph {
        self.matrix.and_cut(threshold)
    }

    /// The dual hypergraph: incidence matrix transposed, dual vertices named after the
    /// edges and dual edges after the vertices.
    pub fn dual(&self) -> Result<BFHypergraph> {
        let transposed = self.matrix.transpose();
        Self::from_matrix(transposed).map_err(|e| match e {
            Error::TrivialEdge(vertex) => Error::IsolatedVertex(vertex),
            other => other,
        })
    }

    /// Strength of the named edge over all of its vertices.
    pub fn strength(&self, name: &str) -> Result<Strength> {
        Ok(Strength::of(self.edge_by_name(name)?.values().iter().copied()))
    }

    /// Strength of the named edge restricted to `members`.
    pub fn strength_over(&self, name: &str, members: &VertexSet) -> Result<Strength> {
        let edge = self.edge_by_name(name)?;
        Ok(Strength::of(members.iter().map(|&i| edge.value(i))))
    }
}
