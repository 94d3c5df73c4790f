//! Bipolar fuzzy partitions and coverings, strength-ranked classes at a cut, and the
//! iterative removal of the strongest class.

use std::collections::BTreeSet;

use crate::crisp::CrispHypergraph;
use crate::error::{Error, Result};
use crate::fuzzy_set::VertexSet;
use crate::hypergraph::BipolarMatrix;
use crate::strength::Strength;
use crate::value::{BipolarValue, Label, SCALE};

/// Default tolerance on per-vertex membership sums.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// How a class matrix relates to the partition conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionKind {
    /// Nontrivial classes whose supports cover every vertex, positive sums 1 and negative
    /// sums -1.
    Partition,
    /// Nontrivial covering classes whose sums stay within `[0, 1]` and `[-1, 0]`.
    Covering,
    /// Anything else.
    Invalid,
}

impl std::fmt::Display for PartitionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PartitionKind::Partition => "partition",
            PartitionKind::Covering => "covering",
            PartitionKind::Invalid => "invalid",
        })
    }
}

/// Per-vertex sums of a class matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSums {
    pub vertex: Label,
    /// Sum of positive memberships, in grid units.
    pub positive_micros: i64,
    /// Sum of negative memberships, in grid units.
    pub negative_micros: i64,
    /// The vertex lies in the support of some class.
    pub covered: bool,
}

impl VertexSums {
    /// `sum p - 1`.
    pub fn positive_residual(&self) -> f64 {
        (self.positive_micros - i64::from(SCALE)) as f64 / f64::from(SCALE)
    }

    /// `sum n + 1`.
    pub fn negative_residual(&self) -> f64 {
        (self.negative_micros + i64::from(SCALE)) as f64 / f64::from(SCALE)
    }
}

/// A class matrix together with its classification.
#[derive(Clone, Debug, PartialEq)]
pub struct BipolarPartition {
    matrix: BipolarMatrix,
    tolerance: f64,
    kind: PartitionKind,
    sums: Vec<VertexSums>,
    trivial_classes: Vec<Label>,
    classical: bool,
}

/// Classifies a class matrix. Violations are recorded, never raised.
///
/// When every negative membership is zero the negative-sum condition is waived, which
/// reduces the test to the classical fuzzy partition test.
pub fn classify(matrix: &BipolarMatrix, tolerance: f64) -> Result<BipolarPartition> {
    if !(tolerance >= 0.0 && tolerance.is_finite()) {
        return Err(Error::ParameterOutOfRange {
            name: "tolerance",
            value: tolerance,
            range: "[0, inf)",
        });
    }
    let sums: Vec<VertexSums> = (0..matrix.order())
        .map(|i| {
            let row = matrix.row(i);
            VertexSums {
                vertex: matrix.vertices()[i].clone(),
                positive_micros: row.iter().map(|v| i64::from(v.p_micros())).sum(),
                negative_micros: row.iter().map(|v| i64::from(v.n_micros())).sum(),
                covered: row.iter().any(|v| !v.is_neutral()),
            }
        })
        .collect();
    let trivial_classes: Vec<Label> = matrix
        .names()
        .iter()
        .zip(matrix.columns())
        .filter(|(_, c)| !c.is_nontrivial())
        .map(|(n, _)| n.clone())
        .collect();
    let classical = matrix.columns().iter().all(|c| !c.values().iter().any(|v| v.is_negative()));
    let slack = tolerance * f64::from(SCALE);
    let within = |residual_micros: i64| (residual_micros.abs() as f64) <= slack;
    let structural = trivial_classes.is_empty() && sums.iter().all(|s| s.covered);
    let one = i64::from(SCALE);
    let exact = sums.iter().all(|s| {
        within(s.positive_micros - one) && (classical || within(s.negative_micros + one))
    });
    let bounded = sums.iter().all(|s| {
        (s.positive_micros - one) as f64 <= slack && (classical || (-(s.negative_micros + one)) as f64 <= slack)
    });
    let kind = match (structural, exact, bounded) {
        (true, true, _) => PartitionKind::Partition,
        (true, false, true) => PartitionKind::Covering,
        _ => PartitionKind::Invalid,
    };
    Ok(BipolarPartition {
        matrix: matrix.clone(),
        tolerance,
        kind,
        sums,
        trivial_classes,
        classical,
    })
}

/// One ranked class at a cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub class: Label,
    /// Members of the class cut, as row indices of the partition matrix.
    pub members: VertexSet,
    pub strength: Strength,
    /// 1 for the strongest class.
    pub rank: usize,
}

/// Ranked classes, plus the classes whose cut was empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassStrengths {
    pub ranked: Vec<ClassReport>,
    pub empty: Vec<Label>,
}

/// One removal of [`BipolarPartition::decompose`].
#[derive(Clone, Debug, PartialEq)]
pub struct DecompositionStep {
    pub report: ClassReport,
    /// Labels of the removed vertices.
    pub removed: Vec<Label>,
    /// The partition left over after the removal.
    pub remaining: BipolarPartition,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub steps: Vec<DecompositionStep>,
    /// Why the process stopped before using every round, if it did.
    pub stopped_early: Option<String>,
}

impl BipolarPartition {
    pub fn matrix(&self) -> &BipolarMatrix {
        &self.matrix
    }

    pub fn kind(&self) -> PartitionKind {
        self.kind
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn sums(&self) -> &[VertexSums] {
        &self.sums
    }

    pub fn trivial_classes(&self) -> &[Label] {
        &self.trivial_classes
    }

    /// True when the matrix has no negative membership and the negative-sum test was
    /// skipped.
    pub fn is_classical(&self) -> bool {
        self.classical
    }

    /// Vertices breaking a partition condition: uncovered, or with a sum off by more than
    /// the tolerance.
    pub fn violations(&self) -> Vec<&VertexSums> {
        let slack = self.tolerance * f64::from(SCALE);
        let one = i64::from(SCALE);
        self.sums
            .iter()
            .filter(|s| {
                !s.covered
                    || ((s.positive_micros - one).abs() as f64) > slack
                    || (!self.classical && ((s.negative_micros + one).abs() as f64) > slack)
            })
            .collect()
    }

    /// The cut with AND semantics; the remainder edge collects unclassified vertices.
    pub fn cut(&self, threshold: BipolarValue) -> CrispHypergraph {
        self.matrix.and_cut(threshold)
    }

    /// Strength of each class over its cut members (original memberships), strongest
    /// first. Ties in the partial order are broken by `p`, then `n`, then name.
    pub fn class_strengths(&self, threshold: BipolarValue) -> ClassStrengths {
        let cut = self.cut(threshold);
        let mut ranked = Vec::new();
        let mut empty = Vec::new();
        for (j, name) in self.matrix.names().iter().enumerate() {
            let members: Option<&VertexSet> = cut
                .edge_names()
                .iter()
                .position(|n| n == name)
                .map(|k| cut.edge(k));
            match members {
                Some(members) => ranked.push(ClassReport {
                    class: name.clone(),
                    members: members.clone(),
                    strength: Strength::of(members.iter().map(|&i| self.matrix.cell(i, j))),
                    rank: 0,
                }),
                None => empty.push(name.clone()),
            }
        }
        ranked.sort_by(|a, b| a.strength.rank_cmp(b.strength).then_with(|| a.class.cmp(&b.class)));
        for (i, report) in ranked.iter_mut().enumerate() {
            report.rank = i + 1;
        }
        ClassStrengths { ranked, empty }
    }

    /// Repeatedly removes the strongest class and its cut members, for up to `rounds`
    /// rounds. Classes left trivial on the shrunken universe are dropped.
    ///
    /// A partition that starts with at most one class is returned untouched; afterwards
    /// the process continues while classes, vertices and a ranked class remain.
    pub fn decompose(&self, threshold: BipolarValue, rounds: usize) -> Result<Decomposition> {
        if rounds == 0 {
            return Err(Error::ParameterOutOfRange {
                name: "rounds",
                value: 0.0,
                range: ">= 1",
            });
        }
        let mut steps = Vec::new();
        if self.matrix.width() <= 1 {
            return Ok(Decomposition {
                steps,
                stopped_early: Some("at most one class to begin with".into()),
            });
        }
        let mut current = self.clone();
        let mut stopped_early = None;
        for _ in 0..rounds {
            if current.matrix.width() == 0 || current.matrix.order() == 0 {
                stopped_early = Some("no classes or vertices left".into());
                break;
            }
            let Some(strongest) = current.class_strengths(threshold).ranked.into_iter().next() else {
                stopped_early = Some("no class has a nonempty cut".into());
                break;
            };
            let j = current
                .matrix
                .column_index(strongest.class.as_str())
                .expect("ranked class exists");
            let rows: VertexSet = (0..current.matrix.order())
                .filter(|i| !strongest.members.contains(i))
                .collect();
            let columns: BTreeSet<usize> = (0..current.matrix.width())
                .filter(|&k| k != j && rows.iter().any(|&i| !current.matrix.cell(i, k).is_neutral()))
                .collect();
            let removed = strongest
                .members
                .iter()
                .map(|&i| current.matrix.vertices()[i].clone())
                .collect();
            let remaining = classify(&current.matrix.restrict(&rows, &columns), current.tolerance)?;
            steps.push(DecompositionStep {
                report: strongest,
                removed,
                remaining: remaining.clone(),
            });
            current = remaining;
        }
        Ok(Decomposition { steps, stopped_early })
    }
}
