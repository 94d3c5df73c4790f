//! Published reference examples, built in so reports can recognise them and tests and
//! documentation can use them directly.

use crate::hypergraph::{BFHypergraph, BipolarMatrix};
use crate::value::{labels, BipolarValue};

const NIL: (f64, f64) = (0.0, 0.0);

fn matrix(vertices: &[&str], names: &[&str], rows: &[&[(f64, f64)]]) -> BipolarMatrix {
    let rows = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|&(p, n)| BipolarValue::new(p, n).expect("reference values are in range"))
                .collect()
        })
        .collect();
    BipolarMatrix::from_rows(
        labels(vertices).expect("reference labels are valid"),
        labels(names).expect("reference labels are valid"),
        rows,
    )
    .expect("reference matrices are well formed")
}

fn hypergraph(vertices: &[&str], names: &[&str], rows: &[&[(f64, f64)]]) -> BFHypergraph {
    BFHypergraph::from_matrix(matrix(vertices, names, rows)).expect("reference hypergraphs are valid")
}

/// Four vertices, three two-vertex edges; not elementary.
pub fn table1() -> BFHypergraph {
    hypergraph(
        &["a", "b", "c", "d"],
        &["E1", "E2", "E3"],
        &[
            &[(0.2, -0.3), NIL, (0.2, -0.3)],
            &[(0.4, -0.5), (0.4, -0.5), NIL],
            &[NIL, (0.5, -0.2), NIL],
            &[NIL, NIL, (0.2, -0.4)],
        ],
    )
}

/// Five edges with a two-level fundamental sequence; support simple but not simple.
pub fn table2() -> BFHypergraph {
    hypergraph(
        &["a", "b", "c", "d"],
        &["E1", "E2", "E3", "E4", "E5"],
        &[
            &[(0.7, -0.2), (0.9, -0.2), NIL, NIL, (0.4, -0.3)],
            &[(0.7, -0.2), (0.9, -0.2), (0.9, -0.2), (0.7, -0.2), NIL],
            &[NIL, NIL, (0.9, -0.2), (0.7, -0.2), (0.4, -0.3)],
            &[NIL, (0.4, -0.3), NIL, (0.4, -0.3), (0.4, -0.3)],
        ],
    )
}

/// Four vertices on a cycle of four edges; used for duality.
pub fn table3() -> BFHypergraph {
    hypergraph(
        &["x1", "x2", "x3", "x4"],
        &["E1", "E2", "E3", "E4"],
        &[
            &[(0.5, -0.3), NIL, NIL, (0.5, -0.3)],
            &[(0.4, -0.2), (0.4, -0.2), NIL, NIL],
            &[NIL, (0.3, -0.6), (0.3, -0.6), NIL],
            &[NIL, NIL, (0.5, -0.1), (0.5, -0.1)],
        ],
    )
}

/// Three vertices, two edges; used for the cut with remainder.
pub fn table5() -> BFHypergraph {
    hypergraph(
        &["x", "y", "z"],
        &["E1", "E2"],
        &[&[(0.4, -0.2), NIL], &[(0.5, -0.3), (0.6, -0.2)], &[NIL, (0.2, -0.05)]],
    )
}

/// The elementary hypergraph of the tempering example.
pub fn tempered_example() -> BFHypergraph {
    hypergraph(
        &["a", "b", "c", "d"],
        &["E1", "E2", "E3", "E4"],
        &[
            &[(0.2, -0.7), NIL, NIL, (0.2, -0.7)],
            &[(0.2, -0.7), (0.3, -0.4), (0.0, -0.9), NIL],
            &[NIL, NIL, (0.0, -0.9), (0.2, -0.7)],
            &[NIL, (0.3, -0.4), NIL, NIL],
        ],
    )
}

/// The two-class (tank / house) membership matrix of the clustering example.
pub fn table7() -> BipolarMatrix {
    matrix(
        &["x1", "x2", "x3", "x4", "x5"],
        &["A_t", "B_h"],
        &[
            &[(0.96, -0.04), (0.04, -0.96)],
            &[(0.95, -0.5), (0.5, -0.95)],
            &[(0.61, -0.39), (0.39, -0.61)],
            &[(0.05, -0.95), (0.95, -0.05)],
            &[(0.03, -0.97), (0.97, -0.03)],
        ],
    )
}

/// The cut level used in the clustering example.
pub fn clustering_level() -> BipolarValue {
    BipolarValue::new(0.61, -0.03).expect("valid level")
}

/// Whether two matrices hold the same cells, ignoring labels.
pub fn same_cells(a: &BipolarMatrix, b: &BipolarMatrix) -> bool {
    a.order() == b.order() && a.width() == b.width() && a.rows() == b.rows()
}
