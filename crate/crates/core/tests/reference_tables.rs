mod common;

use bipolar_hypergraph::format::{parse, Document, Structure};
use bipolar_hypergraph::partition::{classify, PartitionKind};
use bipolar_hypergraph::reference;
use bipolar_hypergraph::report::{cluster_report, fseq_report, info_report, partition_report, tempered_report};
use bipolar_hypergraph::{is_tempered, temper, BFHypergraph, BipolarPartition, TemperingWitness};
use common::*;

macro_rules! data {
    ($name:literal) => {
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/", $name))
    };
}

fn bipolar(text: &str) -> (Document, BFHypergraph) {
    let doc = parse(text).unwrap();
    let Structure::Bipolar(h) = doc.structure().clone() else { panic!("expected a bipolar document") };
    (doc, h)
}

fn partition(text: &str, tolerance: f64) -> (Document, BipolarPartition) {
    let doc = parse(text).unwrap();
    let Structure::Partition(p) = doc.structure() else { panic!("expected a partition document") };
    let p = classify(p.matrix(), tolerance).unwrap();
    (doc, p)
}

#[test]
fn data_files_match_the_reference_fixtures() {
    assert_eq!(bipolar(data!("table1.bfh")).1, reference::table1());
    assert_eq!(bipolar(data!("table2.bfh")).1, reference::table2());
    assert_eq!(bipolar(data!("table3.bfh")).1, reference::table3());
    assert_eq!(bipolar(data!("table5.bfh")).1, reference::table5());
    assert_eq!(bipolar(data!("tempered_example.bfh")).1, reference::tempered_example());
    assert_eq!(partition(data!("table7.bfh"), 1e-9).1.matrix(), &reference::table7());
}

#[test]
fn data_files_are_canonical() {
    for text in [
        data!("table1.bfh"),
        data!("table2.bfh"),
        data!("table3.bfh"),
        data!("table5.bfh"),
        data!("table7.bfh"),
        data!("complementary.bfh"),
        data!("tempered_example.bfh"),
        data!("tempered_weights.bfh"),
        data!("tempered_base.bfh"),
        data!("golden/table4.bfh"),
        data!("golden/table6.bfh"),
        data!("golden/table8.bfh"),
        data!("golden/table9.bfh"),
    ] {
        assert_eq!(parse(text).unwrap().emit(), text);
    }
}

#[test]
fn dual_of_table3_is_table4() {
    let (doc, h) = bipolar(data!("table3.bfh"));
    assert_eq!(doc.derive(Structure::Bipolar(h.dual().unwrap())).emit(), data!("golden/table4.bfh"));
}

#[test]
fn and_cut_of_table5_is_table6() {
    let (doc, h) = bipolar(data!("table5.bfh"));
    let cut = h.partition_cut(bv(0.3, -0.1));
    assert_eq!(doc.derive(Structure::Crisp(cut)).emit(), data!("golden/table6.bfh"));
}

#[test]
fn table7_cut_and_its_dual_are_tables_8_and_9() {
    let (doc, p) = partition(data!("table7.bfh"), 1e-9);
    let cut = p.cut(reference::clustering_level());
    assert_eq!(doc.derive(Structure::Crisp(cut.clone())).emit(), data!("golden/table8.bfh"));
    assert_eq!(doc.derive(Structure::Crisp(cut.dual().unwrap())).emit(), data!("golden/table9.bfh"));
}

#[test]
fn table7_class_strengths() {
    let (_, p) = partition(data!("table7.bfh"), 1e-9);
    let strengths = p.class_strengths(reference::clustering_level());
    let ranked: Vec<(String, String, usize)> = strengths
        .ranked
        .iter()
        .map(|c| (c.class.to_string(), c.strength.to_string(), c.rank))
        .collect();
    assert_eq!(
        ranked,
        [("B_h".into(), "(0.97,-0.03)".into(), 1), ("A_t".into(), "(0.96,-0.04)".into(), 2)]
    );
    assert!(cluster_report(&p, reference::clustering_level(), 2).unwrap().has_deviation("DEV-4"));
}

#[test]
fn table7_fails_exact_validation_at_x2_only() {
    let (_, p) = partition(data!("table7.bfh"), 0.0);
    assert_eq!(p.kind(), PartitionKind::Invalid);
    let violations = p.violations();
    assert_eq!(violations.len(), 1);
    assert_eq!(violations[0].vertex.as_str(), "x2");
    assert_eq!(violations[0].positive_residual(), 0.45);
    assert_eq!(violations[0].negative_residual(), -0.45);
    let report = partition_report(&p);
    assert!(report.has_deviation("DEV-3"));
    assert!(report.to_string().contains("violation: x2 positive sum 1.45 (residual +0.45) negative sum -1.45 (residual -0.45)"));
}

#[test]
fn complementary_matrix_is_a_partition() {
    let (_, p) = partition(data!("complementary.bfh"), 0.0);
    assert_eq!(p.kind(), PartitionKind::Partition);
    assert!(!partition_report(&p).has_deviation("DEV-3"));
}

#[test]
fn table2_fundamental_sequence_report() {
    let (_, h) = bipolar(data!("table2.bfh"));
    let text = fseq_report(&h).unwrap().to_string();
    assert!(text.contains("level 1: (0.9,-0.2) vertices={a,b,c} edges: E2={a,b} E3={b,c}"));
    assert!(text.contains("DEV-1"));
    let info = info_report(&h).unwrap().to_string();
    for line in ["support simple: true", "simple: false", "sectionally elementary: false", "simply ordered: true"] {
        assert!(info.lines().any(|l| l == line), "missing {line:?} in\n{info}");
    }
}

#[test]
fn fundamental_sequence_oracle_on_reference_tables() {
    for h in [reference::table1(), reference::table2(), reference::table3(), reference::table5(), reference::tempered_example()] {
        let sequence = h.fundamental_sequence().unwrap();
        let oracle = oracle_fundamental(&h);
        let ours: Vec<((i32, i32), Family)> = sequence
            .levels()
            .iter()
            .zip(sequence.cores())
            .map(|(l, c)| ((l.p_micros(), l.n_micros()), family_of(c)))
            .collect();
        assert_eq!(ours, oracle);
    }
}

#[test]
fn tempered_example_from_its_weighting() {
    let (_, weights) = bipolar(data!("tempered_weights.bfh"));
    let Structure::Crisp(base) = parse(data!("tempered_base.bfh")).unwrap().into_structure() else { panic!() };
    let witness = TemperingWitness::new(base, weights.edges()[0].clone()).unwrap();
    let h = temper(&witness).unwrap();
    // edge {a,b} takes the meet of (0.2,-0.7) and (0,-0.9)
    assert_eq!(h.cell(0, 0), bv(0.0, -0.7));
    assert!(is_tempered(&h).is_some());
    let published = reference::tempered_example();
    assert!(is_tempered(&published).is_none());
    assert!(tempered_report(&published).unwrap().has_deviation("DEV-2"));
}
