//! Plain-text facet lists and the bundled corpus.
//!
//! One facet per line, vertex labels separated by runs of spaces or tabs.
//! Blank lines and lines whose first non-blank character is `#` are ignored.
//! LF and CRLF line endings are both accepted. Serialization is canonical:
//! labels within a facet and facets themselves are sorted lexicographically,
//! tokens are joined by single spaces, and every line ends in LF.

use std::io::Write;

use itertools::Itertools;

use crate::complex::{validate_label, Complex};
use crate::error::{Error, Result};

pub fn parse(input: &[u8]) -> Result<Complex> {
    parse_str(std::str::from_utf8(input).map_err(|_| Error::Encoding)?)
}

pub fn parse_str(input: &str) -> Result<Complex> {
    let mut facets: Vec<Vec<&str>> = Vec::new();
    for (idx, raw) in input.split('\n').enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let trimmed = line.trim_start_matches([' ', '\t']);
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed
            .split([' ', '\t'])
            .filter(|t| !t.is_empty())
            .collect();
        for token in &tokens {
            validate_label(token).map_err(|_| {
                Error::Malformed(format!("line {}: invalid label `{token}`", idx + 1))
            })?;
        }
        if let Some(dup) = tokens.iter().duplicates().next() {
            return Err(Error::DuplicateVertex {
                line: idx + 1,
                label: dup.to_string(),
            });
        }
        facets.push(tokens);
    }
    if facets.is_empty() {
        return Err(Error::EmptyInput);
    }
    Complex::from_facets(facets)
}

pub fn serialize(x: &Complex) -> String {
    let mut out = String::new();
    for facet in x.facets() {
        out.push_str(&x.simplex_labels(facet).join(" "));
        out.push('\n');
    }
    out
}

pub fn write_complex<W: Write>(mut w: W, x: &Complex) -> std::io::Result<()> {
    w.write_all(serialize(x).as_bytes())
}

const CORPUS: &[(&str, &str)] = &[
    (
        "tetrahedron-surface",
        include_str!("../corpus/tetrahedron-surface.cplx"),
    ),
    ("rp2-6", include_str!("../corpus/rp2-6.cplx")),
    ("torus-7", include_str!("../corpus/torus-7.cplx")),
    ("bowtie", include_str!("../corpus/bowtie.cplx")),
    ("path-2", include_str!("../corpus/path-2.cplx")),
];

pub fn corpus_names() -> Vec<&'static str> {
    CORPUS.iter().map(|(name, _)| *name).collect()
}

/// Raw text of a bundled complex, comments included.
pub fn corpus_source(name: &str) -> Result<&'static str> {
    CORPUS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, src)| *src)
        .ok_or_else(|| Error::UnknownCorpus {
            name: name.to_string(),
            valid: corpus_names(),
        })
}

pub fn load_corpus(name: &str) -> Result<Complex> {
    parse_str(corpus_source(name)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TETRA: &str = "a b c\na b d\na c d\nb c d\n";

    #[test]
    fn parse_tetra() {
        let t = parse(TETRA.as_bytes()).unwrap();
        assert_eq!(t.f_vector().unwrap().counts(), &[4, 6, 4]);
    }

    #[test]
    fn comments_and_blanks() {
        let x = parse_str("# comment\n\nx\n").unwrap();
        assert_eq!(x.labels(), &["x"]);
        assert_eq!(x.dimension(), 0);
    }

    #[test]
    fn duplicate_token_reports_line() {
        assert_eq!(
            parse_str("a a b\n"),
            Err(Error::DuplicateVertex {
                line: 1,
                label: "a".into()
            })
        );
        assert!(matches!(
            parse_str("# c\na b\nc\td c\n"),
            Err(Error::DuplicateVertex { line: 3, .. })
        ));
    }

    #[test]
    fn empty_inputs() {
        assert_eq!(parse_str(""), Err(Error::EmptyInput));
        assert_eq!(parse_str("# only\n  \n"), Err(Error::EmptyInput));
    }

    #[test]
    fn bad_encoding() {
        assert_eq!(parse(&[0x61, 0xff, 0x0a]), Err(Error::Encoding));
    }

    #[test]
    fn crlf_tabs_and_absorption() {
        let x = parse_str("d  c\tb\r\na b\r\nb c\r\nb c d\r\n").unwrap();
        assert_eq!(serialize(&x), "a b\nb c d\n");
    }

    #[test]
    fn canonical_output() {
        let t = parse_str("d c b\nc a d\nb a d\nc b a\n").unwrap();
        assert_eq!(serialize(&t), TETRA);
        assert_eq!(serialize(&Complex::empty()), "");
    }

    #[test]
    fn corpus_lookup() {
        assert_eq!(
            load_corpus("tetrahedron-surface")
                .unwrap()
                .euler_characteristic()
                .unwrap(),
            2
        );
        let err = load_corpus("klein").unwrap_err();
        assert!(err.to_string().contains("rp2-6"), "{err}");
    }
}
