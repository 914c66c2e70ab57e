//! Brute-force reference computations on raw label sets.
//!
//! Nothing here touches the library's face enumeration, link, or counting
//! code: complexes are plain sets of label sets, every face is produced by
//! bitmask subset enumeration, and links follow the closed-star definition.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Face = BTreeSet<String>;

/// All non-empty faces of the given facets.
pub fn faces(facets: &[Vec<String>]) -> BTreeSet<Face> {
    let mut out = BTreeSet::new();
    for f in facets {
        assert!(f.len() < 24, "facet too large for brute force");
        for mask in 1u32..(1 << f.len()) {
            let face: Face = f
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, l)| l.clone())
                .collect();
            out.insert(face);
        }
    }
    out
}

pub fn f_vector(faces: &BTreeSet<Face>) -> Vec<u64> {
    let top = faces.iter().map(BTreeSet::len).max().unwrap_or(0);
    let mut counts = vec![0u64; top];
    for f in faces {
        counts[f.len() - 1] += 1;
    }
    counts
}

pub fn chi(faces: &BTreeSet<Face>) -> i64 {
    f_vector(faces)
        .iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

pub fn dimension(faces: &BTreeSet<Face>) -> isize {
    faces
        .iter()
        .map(|f| f.len() as isize - 1)
        .max()
        .unwrap_or(-1)
}

/// Link by definition: faces of the closed star that are disjoint from `s`.
pub fn link(faces: &BTreeSet<Face>, s: &Face) -> BTreeSet<Face> {
    let star: Vec<&Face> = faces.iter().filter(|t| s.is_subset(t)).collect();
    let closed_star: BTreeSet<Face> = faces
        .iter()
        .filter(|t| star.iter().any(|st| t.is_subset(st)))
        .cloned()
        .collect();
    closed_star
        .into_iter()
        .filter(|t| t.is_disjoint(s))
        .collect()
}

pub fn maximal(faces: &BTreeSet<Face>) -> Vec<&Face> {
    faces
        .iter()
        .filter(|f| !faces.iter().any(|g| g.len() > f.len() && f.is_subset(g)))
        .collect()
}

pub fn is_pure(faces: &BTreeSet<Face>) -> bool {
    let m = maximal(faces);
    m.iter().all(|f| f.len() == m[0].len())
}

/// Pure, and each non-empty face's link has the Euler characteristic of the
/// sphere of dimension `n - dim(face) - 1` (the (-1)-sphere being empty).
pub fn is_euler(faces: &BTreeSet<Face>) -> bool {
    if faces.is_empty() || !is_pure(faces) {
        return false;
    }
    let n = dimension(faces);
    faces.iter().all(|s| {
        let d = n - (s.len() as isize - 1) - 1;
        let expected = if d < 0 {
            0
        } else if d % 2 == 0 {
            2
        } else {
            0
        };
        chi(&link(faces, s)) == expected
    })
}

/// Faces failing the link condition, assuming purity.
pub fn bad_links(faces: &BTreeSet<Face>) -> Vec<Face> {
    let n = dimension(faces);
    faces
        .iter()
        .filter(|s| {
            let d = n - s.len() as isize;
            let expected = if d < 0 {
                0
            } else if d % 2 == 0 {
                2
            } else {
                0
            };
            chi(&link(faces, s)) != expected
        })
        .cloned()
        .collect()
}

/// Number of l-faces containing `s`, by scanning every face.
pub fn cofaces(faces: &BTreeSet<Face>, s: &Face, l: usize) -> u64 {
    faces
        .iter()
        .filter(|t| t.len() == l + 1 && s.is_subset(t))
        .count() as u64
}

/// Pascal's triangle, independent of any multiplicative formula.
pub fn pascal(n: usize, k: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

pub fn labeled<S: AsRef<str>>(facets: &[&[S]]) -> Vec<Vec<String>> {
    facets
        .iter()
        .map(|f| f.iter().map(|s| s.as_ref().to_string()).collect())
        .collect()
}
