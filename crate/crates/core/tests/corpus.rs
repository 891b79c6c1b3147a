mod common;

use std::io::Write;

use parity_rna::graph::{enumerate_connected_labeled, read_graph6};
use parity_rna::verify::{run_corpus, Check, CorpusSource, JsonRecord};
use parity_rna::Error;

#[test]
fn corpus_sizes() {
    let counts: Vec<usize> = (1..=common::CORPUS_MAX_N)
        .map(|n| common::corpus(n).len())
        .collect();
    assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853, 11117]);
    for n in 1..=common::CORPUS_MAX_N {
        assert!(common::corpus(n)
            .iter()
            .all(|(_, g)| g.order() == n && g.is_connected()));
    }
}

#[test]
fn labeled_counts() {
    let counts: Vec<usize> = (1..=7)
        .map(|n| enumerate_connected_labeled(n).unwrap().count())
        .collect();
    assert_eq!(counts, [1, 1, 4, 38, 728, 26704, 1866256]);
    assert!(matches!(
        enumerate_connected_labeled(8),
        Err(Error::EnumerationTooLarge { n: 8, max: 7 })
    ));
}

#[test]
fn every_check_passes_on_the_small_corpus() {
    for n in 1..=7 {
        let report = run_corpus(
            &CorpusSource::File(common::corpus_path(n)),
            &Check::ALL,
            None,
            None,
        )
        .unwrap();
        assert!(report.passed(), "n={n}\n{}", report.render_table());
    }
}

#[test]
fn max_n_skips_larger_graphs() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    for n in 4..=6 {
        for (line, _) in common::corpus(n) {
            writeln!(f, "{line}").unwrap();
        }
    }
    let report = run_corpus(
        &CorpusSource::File(f.path().into()),
        &[Check::Conjecture2],
        Some(5),
        None,
    )
    .unwrap();
    assert_eq!(report.skipped_too_large, 112);
    assert_eq!(report.reports[0].graphs_tested, 6 + 21);
}

#[test]
fn json_records_follow_input_order() {
    let path = common::corpus_path(5);
    let lines: Vec<String> = common::corpus(5).into_iter().map(|(l, _)| l).collect();
    let mut records = Vec::new();
    let mut sink = |r: &JsonRecord| records.push(serde_json::to_string(r).unwrap());
    let checks = [Check::TrivialBound, Check::Complement];
    run_corpus(&CorpusSource::File(path), &checks, None, Some(&mut sink)).unwrap();
    let parsed: Vec<JsonRecord> = records
        .iter()
        .map(|r| serde_json::from_str(r).unwrap())
        .collect();
    assert_eq!(parsed.len(), 2 * lines.len());
    for (i, r) in parsed.iter().enumerate() {
        assert_eq!(r.graph6, lines[i / 2]);
        assert_eq!(r.check, checks[i % 2]);
        assert_eq!(r.pass, Some(true));
        assert!(r.witness.is_some());
    }
}

#[test]
fn reports_are_deterministic() {
    let src = CorpusSource::File(common::corpus_path(6));
    let a = run_corpus(&src, &Check::ALL, None, None).unwrap();
    let b = run_corpus(&src, &Check::ALL, None, None).unwrap();
    assert_eq!(a.render_table(), b.render_table());
    let strip = |mut r: parity_rna::verify::CorpusReport| {
        r.elapsed = Default::default();
        for v in &mut r.reports {
            v.elapsed = Default::default();
        }
        r
    };
    assert_eq!(strip(a), strip(b));
}

#[test]
fn reader_accepts_header_and_blank_lines() {
    let text = ">>graph6<<C~\n\nBw\n";
    let got: Vec<(usize, _)> = read_graph6(text.as_bytes())
        .collect::<Result<_, _>>()
        .unwrap();
    assert_eq!(got.iter().map(|(l, _)| *l).collect::<Vec<_>>(), [1, 3]);
}
