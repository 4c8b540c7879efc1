//! Acceptance gate: one test per release criterion, each printing its
//! pass/fail line. Run with `--nocapture` to see the lines for passing
//! criteria as well.

use std::sync::OnceLock;

use ecomdet::corpus::CorpusRecord;
use ecomdet::gen::full_corpus;
use ecomdet::suite::{
    criterion_conjecture_scan, criterion_engine_agreement, criterion_property_suite,
    criterion_reference_determinants, criterion_scan_determinism, criterion_star_pipeline,
    CriterionReport,
};
use ecomdet::DEFAULT_SEED;

fn corpus() -> &'static [CorpusRecord] {
    static CORPUS: OnceLock<Vec<CorpusRecord>> = OnceLock::new();
    CORPUS.get_or_init(|| full_corpus(DEFAULT_SEED))
}

fn gate(report: CriterionReport) {
    println!("{}", report.line());
    assert!(report.passed, "{}", report.line());
}

#[test]
fn criterion_1_reference_determinants() {
    gate(criterion_reference_determinants());
}

#[test]
fn criterion_2_star_pipeline() {
    gate(criterion_star_pipeline());
}

#[test]
fn criterion_3_property_suite() {
    gate(criterion_property_suite(corpus()));
}

#[test]
fn criterion_4_conjecture_scan() {
    gate(criterion_conjecture_scan(corpus()));
}

#[test]
fn criterion_5_engine_agreement() {
    gate(criterion_engine_agreement(corpus()));
}

#[test]
fn criterion_6_scan_determinism() {
    gate(criterion_scan_determinism(corpus()));
}
