//! Star, closure, and link of a simplex.
//!
//! The star of `s` is every simplex containing `s`; it is generally not
//! closed under faces. Its closure is a subcomplex, and the link is the part
//! of that closure disjoint from `s`. The link of the empty simplex would be
//! the whole complex; the operators here reject the empty simplex.

use std::collections::BTreeSet;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::simplex::Simplex;

/// A set of simplices of a common ambient complex, not necessarily closed under faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexSet<'a> {
    ambient: &'a Complex,
    members: BTreeSet<Simplex>,
}

impl<'a> SimplexSet<'a> {
    /// Panics if a member does not belong to `ambient`.
    pub fn new(ambient: &'a Complex, members: impl IntoIterator<Item = Simplex>) -> Self {
        let members: BTreeSet<Simplex> = members.into_iter().collect();
        assert!(
            members.iter().all(|m| !m.is_empty() && ambient.contains(m)),
            "members of a SimplexSet must be non-empty simplices of the ambient complex"
        );
        Self { ambient, members }
    }

    pub fn ambient(&self) -> &'a Complex {
        self.ambient
    }

    pub fn members(&self) -> &BTreeSet<Simplex> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.members.iter()
    }
}

fn require_simplex(x: &Complex, s: &Simplex) -> Result<()> {
    if s.is_empty() {
        return Err(Error::Parameter(
            "the empty simplex has no star or link here".into(),
        ));
    }
    if !x.contains(s) {
        return Err(Error::NotASimplex(format!("{s}")));
    }
    Ok(())
}

/// Every simplex of `x` containing `s`, including `s` itself.
pub fn star<'a>(x: &'a Complex, s: &Simplex) -> Result<SimplexSet<'a>> {
    require_simplex(x, s)?;
    let members = x
        .facets()
        .iter()
        .filter(|f| s.is_face_of(f))
        .flat_map(|f| {
            // Cofaces of s inside f are s joined with any face of f \ s.
            let rest = f.difference(s);
            (0..=rest.len())
                .flat_map(move |size| rest.faces_of_size(size).collect::<Vec<_>>())
                .map(|extra| extra.union(s))
        })
        .collect();
    Ok(SimplexSet {
        ambient: x,
        members,
    })
}

/// All faces of the members; facets of the result are the maximal members.
pub fn closure(set: &SimplexSet<'_>) -> Complex {
    Complex::from_ambient(set.ambient, set.members.iter().cloned())
}

/// Link of a non-empty simplex: `{t : t ∩ s = ∅, t ∪ s ∈ x}`.
///
/// Computed from the facets containing `s`: the link is generated by
/// `f \ s` for each such facet `f`.
pub fn link(x: &Complex, s: &Simplex) -> Result<Complex> {
    require_simplex(x, s)?;
    Ok(Complex::from_ambient(
        x,
        x.facets()
            .iter()
            .filter(|f| s.is_face_of(f))
            .map(|f| f.difference(s)),
    ))
}

/// Link computed literally as the simplices of the closed star that miss `s`.
///
/// Slower than [`link`]; kept as an independent reference route.
pub fn link_from_closed_star(x: &Complex, s: &Simplex) -> Result<Complex> {
    let closed = closure(&star(x, s)?);
    let s_local = x
        .translate(s, &closed)
        .expect("s lies in its own closed star");
    let disjoint: Vec<Simplex> = closed
        .simplices()
        .filter(|t| t.is_disjoint(&s_local))
        .cloned()
        .collect();
    Ok(Complex::from_ambient(&closed, disjoint))
}
