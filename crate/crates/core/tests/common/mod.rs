#![allow(dead_code)]

pub mod oracle;

use eulerplex_core::Complex;

pub fn facet_labels(x: &Complex) -> Vec<Vec<String>> {
    x.facets()
        .iter()
        .map(|f| x.simplex_labels(f).into_iter().map(String::from).collect())
        .collect()
}

pub fn oracle_faces(x: &Complex) -> std::collections::BTreeSet<oracle::Face> {
    oracle::faces(&facet_labels(x))
}
