//! Classical hypergraphs: the targets of cuts and the substrate of tempering.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::fuzzy_set::{ensure_unique, VertexSet};
use crate::value::Label;

/// Default vertex bound for the exhaustive symmetry search.
pub const DEFAULT_SYMMETRY_BOUND: usize = 8;

/// A crisp hypergraph: an ordered vertex list and an ordered list of named, nonempty
/// vertex subsets.
///
/// Repeated edges are representable and reported by [`CrispHypergraph::is_simple`].
/// Hypergraphs produced by cuts need not cover their vertex set; see
/// [`CrispHypergraph::covers`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrispHypergraph {
    vertices: Vec<Label>,
    names: Vec<Label>,
    edges: Vec<VertexSet>,
}

impl CrispHypergraph {
    /// Builds a hypergraph from edges given as vertex indices.
    pub fn new(vertices: Vec<Label>, edges: Vec<(Label, VertexSet)>) -> Result<Self> {
        ensure_unique(&vertices, Error::DuplicateVertex)?;
        let (names, edges): (Vec<_>, Vec<_>) = edges.into_iter().unzip();
        ensure_unique(&names, Error::DuplicateEdge)?;
        for (name, edge) in names.iter().zip(&edges) {
            if edge.is_empty() {
                return Err(Error::EmptyEdge(name.clone()));
            }
            if let Some(&bad) = edge.iter().find(|&&i| i >= vertices.len()) {
                return Err(Error::UnknownVertex(format!("#{bad} in edge {name}")));
            }
        }
        Ok(CrispHypergraph {
            vertices,
            names,
            edges,
        })
    }

    /// Builds a hypergraph from edges given as vertex labels.
    pub fn from_labels<I, E, S>(vertices: &[&str], edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, E)>,
        E: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let vertex_labels = crate::value::labels(vertices)?;
        let mut built = Vec::new();
        for (name, members) in edges {
            let mut set = VertexSet::new();
            for member in members {
                let member = member.as_ref();
                let index = vertices
                    .iter()
                    .position(|v| *v == member)
                    .ok_or_else(|| Error::UnknownVertex(member.to_owned()))?;
                set.insert(index);
            }
            built.push((Label::new(name.as_ref())?, set));
        }
        Self::new(vertex_labels, built)
    }

    /// The hypergraph with no vertices and no edges.
    pub fn empty() -> Self {
        CrispHypergraph {
            vertices: Vec::new(),
            names: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[Label] {
        &self.vertices
    }

    pub fn edge_names(&self) -> &[Label] {
        &self.names
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &VertexSet {
        &self.edges[index]
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Whether every vertex lies in at least one edge.
    pub fn covers(&self) -> bool {
        let covered: VertexSet = self.edges.iter().flatten().copied().collect();
        covered.len() == self.vertices.len()
    }

    /// Labels of one edge.
    pub fn edge_labels(&self, index: usize) -> BTreeSet<&Label> {
        self.edges[index].iter().map(|&i| &self.vertices[i]).collect()
    }

    /// The edge family as a set of label sets (names and multiplicities dropped).
    pub fn edge_family(&self) -> BTreeSet<BTreeSet<&Label>> {
        (0..self.edges.len()).map(|j| self.edge_labels(j)).collect()
    }

    /// Incidence matrix, one row per vertex and one column per edge.
    pub fn incidence(&self) -> Vec<Vec<bool>> {
        (0..self.vertices.len())
            .map(|i| self.edges.iter().map(|e| e.contains(&i)).collect())
            .collect()
    }

    fn edge_sizes(&self) -> Result<impl Iterator<Item = usize> + '_> {
        if self.edges.is_empty() {
            return Err(Error::Edgeless);
        }
        Ok(self.edges.iter().map(BTreeSet::len))
    }

    /// Largest edge size.
    pub fn rank(&self) -> Result<usize> {
        Ok(self.edge_sizes()?.max().unwrap_or(0))
    }

    /// Smallest edge size.
    pub fn anti_rank(&self) -> Result<usize> {
        Ok(self.edge_sizes()?.min().unwrap_or(0))
    }

    pub fn is_uniform(&self) -> Result<bool> {
        Ok(self.rank()? == self.anti_rank()?)
    }

    pub fn is_k_uniform(&self, k: usize) -> Result<bool> {
        Ok(self.is_uniform()? && self.rank()? == k)
    }

    /// No repeated edges and no edge properly contained in another.
    pub fn is_simple(&self) -> bool {
        self.edges.iter().enumerate().all(|(i, a)| {
            self.edges
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !a.is_subset(b))
        })
    }

    /// The dual hypergraph: vertices are this hypergraph's edges (keeping their names) and
    /// vertex `v` becomes the edge of all edges containing `v`. The incidence matrix is
    /// transposed.
    pub fn dual(&self) -> Result<CrispHypergraph> {
        let mut dual_edges = Vec::with_capacity(self.vertices.len());
        for (i, vertex) in self.vertices.iter().enumerate() {
            let containing: VertexSet = self
                .edges
                .iter()
                .enumerate()
                .filter(|(_, e)| e.contains(&i))
                .map(|(j, _)| j)
                .collect();
            if containing.is_empty() {
                return Err(Error::IsolatedVertex(vertex.clone()));
            }
            dual_edges.push((vertex.clone(), containing));
        }
        CrispHypergraph::new(self.names.clone(), dual_edges)
    }

    /// Whether this hypergraph is a sub-hypergraph of `other`: vertex labels and edge
    /// label-sets are contained.
    pub fn is_subhypergraph_of(&self, other: &CrispHypergraph) -> bool {
        let other_vertices: BTreeSet<&Label> = other.vertices.iter().collect();
        let other_family = other.edge_family();
        self.vertices.iter().all(|v| other_vertices.contains(v))
            && self.edge_family().is_subset(&other_family)
    }

    /// All vertex permutations (as image vectors) mapping the edge multiset onto itself.
    pub fn automorphisms(&self, bound: usize) -> Result<Vec<Vec<usize>>> {
        let n = self.vertices.len();
        if n > bound {
            return Err(Error::Capacity {
                what: "symmetry search vertex count",
                bound,
                actual: n,
            });
        }
        let mut sorted_edges: Vec<&VertexSet> = self.edges.iter().collect();
        sorted_edges.sort();
        let autos = (0..n)
            .permutations(n)
            .filter(|perm| {
                let mut mapped: Vec<VertexSet> = self
                    .edges
                    .iter()
                    .map(|e| e.iter().map(|&v| perm[v]).collect())
                    .collect();
                mapped.sort();
                mapped.iter().eq(sorted_edges.iter().copied())
            })
            .collect();
        Ok(autos)
    }

    pub fn is_vertex_symmetric(&self) -> Result<bool> {
        self.is_vertex_symmetric_within(DEFAULT_SYMMETRY_BOUND)
    }

    /// Every vertex can be mapped to every other vertex by some automorphism.
    pub fn is_vertex_symmetric_within(&self, bound: usize) -> Result<bool> {
        let autos = self.automorphisms(bound)?;
        let n = self.vertices.len();
        Ok((0..n).all(|v| {
            let orbit: BTreeSet<usize> = autos.iter().map(|perm| perm[v]).collect();
            orbit.len() == n
        }))
    }

    pub fn is_edge_symmetric(&self) -> Result<bool> {
        self.is_edge_symmetric_within(DEFAULT_SYMMETRY_BOUND)
    }

    /// Every edge can be mapped onto every other edge by some automorphism.
    pub fn is_edge_symmetric_within(&self, bound: usize) -> Result<bool> {
        let autos = self.automorphisms(bound)?;
        Ok(self.edges.iter().all(|source| {
            self.edges.iter().all(|target| {
                autos.iter().any(|perm| {
                    let image: VertexSet = source.iter().map(|&v| perm[v]).collect();
                    &image == target
                })
            })
        }))
    }
}

/// `y` absorbs `x` when every member of `x` lies inside some member of `y`.
pub fn absorbs<T: Ord>(x: &[BTreeSet<T>], y: &[BTreeSet<T>]) -> bool {
    x.iter().all(|a| y.iter().any(|b| a.is_subset(b)))
}

/// Absorption with the two families different as sets of sets.
pub fn strictly_absorbs<T: Ord>(x: &[BTreeSet<T>], y: &[BTreeSet<T>]) -> bool {
    let xs: BTreeSet<&BTreeSet<T>> = x.iter().collect();
    let ys: BTreeSet<&BTreeSet<T>> = y.iter().collect();
    absorbs(x, y) && xs != ys
}

/// A nonempty sequence of crisp hypergraphs over a common label space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergraphSequence {
    items: Vec<CrispHypergraph>,
}

impl HypergraphSequence {
    pub fn new(items: Vec<CrispHypergraph>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::Structural("hypergraph sequence must be nonempty".into()));
        }
        Ok(HypergraphSequence { items })
    }

    pub fn items(&self) -> &[CrispHypergraph] {
        &self.items
    }

    /// Each hypergraph is a sub-hypergraph of the next.
    pub fn is_ordered(&self) -> bool {
        self.items
            .windows(2)
            .all(|pair| pair[0].is_subhypergraph_of(&pair[1]))
    }

    /// Ordered, and every edge new at step `i+1` has a vertex outside `V_i`.
    pub fn is_simply_ordered(&self) -> bool {
        self.is_ordered()
            && self.items.windows(2).all(|pair| {
                let (previous, next) = (&pair[0], &pair[1]);
                let old_vertices: BTreeSet<&Label> = previous.vertices.iter().collect();
                let old_family = previous.edge_family();
                next.edge_family()
                    .iter()
                    .filter(|edge| !old_family.contains(*edge))
                    .all(|edge| !edge.is_subset(&old_vertices))
            })
    }
}
