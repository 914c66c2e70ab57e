//! Finite abstract simplicial complexes stored by their facets.
//!
//! A [`Complex`] keeps only its maximal simplices together with a table of
//! vertex labels. Membership of an arbitrary simplex is "is a subset of some
//! facet", so the face set is closed under subsets by construction. The full
//! face lattice, split by dimension, is enumerated lazily on first use and
//! cached for the lifetime of the value.
//!
//! Conventions for degenerate cases:
//! - the empty complex has dimension -1, is pure, has an empty f-vector and
//!   Euler characteristic 0;
//! - the empty simplex is a face of every non-empty complex but is never
//!   counted in f-vectors or in the Euler characteristic.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::simplex::{Simplex, VertexId};

pub struct Complex {
    labels: Vec<String>,
    facets: Vec<Simplex>,
    faces: OnceLock<Vec<Vec<Simplex>>>,
}

/// Simplex counts per dimension, `counts[k]` being the number of k-simplices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct FVector {
    counts: Vec<u64>,
}

impl FVector {
    pub fn new(counts: Vec<u64>) -> Self {
        Self { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Count in dimension `k`, zero outside `0..=dim`.
    pub fn get(&self, k: isize) -> u64 {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.counts.get(k))
            .copied()
            .unwrap_or(0)
    }

    pub fn dimension(&self) -> isize {
        self.counts.len() as isize - 1
    }

    /// Alternating sum `s_0 - s_1 + s_2 - ...` with checked arithmetic.
    pub fn euler_characteristic(&self) -> Result<i64> {
        self.counts
            .iter()
            .enumerate()
            .try_fold(0i64, |acc, (k, &c)| {
                let c = i64::try_from(c).map_err(|_| Error::Overflow("Euler characteristic"))?;
                let next = if k % 2 == 0 {
                    acc.checked_add(c)
                } else {
                    acc.checked_sub(c)
                };
                next.ok_or(Error::Overflow("Euler characteristic"))
            })
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.counts.iter().join(","))
    }
}

pub(crate) fn validate_label(label: &str) -> Result<()> {
    if label.is_empty() || label.chars().any(char::is_whitespace) {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    Ok(())
}

/// Drops empty and non-maximal simplices, returning the rest sorted.
fn maximal(mut sets: Vec<Simplex>) -> Vec<Simplex> {
    sets.retain(|s| !s.is_empty());
    sets.sort_unstable();
    sets.dedup();
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<Simplex> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.len() > s.len() && s.is_face_of(k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

impl Complex {
    pub fn empty() -> Self {
        Self {
            labels: Vec::new(),
            facets: Vec::new(),
            faces: OnceLock::new(),
        }
    }

    /// Builds a complex from a generating list of facets given by vertex label.
    ///
    /// Facets contained in other facets are absorbed. Vertex ids are assigned
    /// in lexicographic label order.
    pub fn from_facets<I, F, S>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let raw: Vec<Vec<String>> = facets
            .into_iter()
            .map(|f| f.into_iter().map(|s| s.as_ref().to_string()).collect())
            .collect();
        for (i, facet) in raw.iter().enumerate() {
            if facet.is_empty() {
                return Err(Error::Malformed(format!("facet {} is empty", i + 1)));
            }
            for label in facet {
                validate_label(label)?;
            }
            if let Some(dup) = facet.iter().duplicates().next() {
                return Err(Error::Malformed(format!(
                    "facet {} repeats vertex `{dup}`",
                    i + 1
                )));
            }
        }

        let labels: Vec<String> = raw.iter().flatten().cloned().sorted().dedup().collect();
        let id_of = |label: &String| {
            VertexId(labels.binary_search(label).expect("label collected above") as u32)
        };
        let sets = raw
            .iter()
            .map(|f| Simplex::new(f.iter().map(id_of)).expect("duplicates rejected above"))
            .collect();
        Ok(Self {
            facets: maximal(sets),
            labels,
            faces: OnceLock::new(),
        })
    }

    /// Builds the complex generated by simplices of `ambient`, keeping only the
    /// labels that are actually used.
    pub(crate) fn from_ambient(ambient: &Complex, sets: impl IntoIterator<Item = Simplex>) -> Self {
        let facets = maximal(sets.into_iter().collect());
        let used: BTreeSet<VertexId> = facets.iter().flat_map(|f| f.vertices()).copied().collect();
        let mut remap = vec![u32::MAX; ambient.labels.len()];
        let mut labels = Vec::with_capacity(used.len());
        for (new, old) in used.iter().enumerate() {
            remap[old.index()] = new as u32;
            labels.push(ambient.labels[old.index()].clone());
        }
        // Remapping is monotone, so sortedness of facets is preserved.
        let facets = facets
            .into_iter()
            .map(|f| {
                Simplex::from_sorted(
                    f.vertices()
                        .iter()
                        .map(|v| VertexId(remap[v.index()]))
                        .collect(),
                )
            })
            .collect();
        Self {
            labels,
            facets,
            faces: OnceLock::new(),
        }
    }

    /// Applies `rename` to every label. The mapping must stay injective.
    pub fn relabel(&self, mut rename: impl FnMut(&str) -> String) -> Result<Self> {
        let renamed: Vec<String> = self.labels.iter().map(|l| rename(l)).collect();
        if let Some(dup) = renamed.iter().duplicates().next() {
            return Err(Error::LabelCollision(dup.clone()));
        }
        Self::from_facets(
            self.facets
                .iter()
                .map(|f| f.vertices().iter().map(|v| renamed[v.index()].as_str())),
        )
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    pub fn vertex_id(&self, label: &str) -> Option<VertexId> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .ok()
            .map(|i| VertexId(i as u32))
    }

    /// Maximal simplices, sorted lexicographically.
    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    /// Resolves a list of labels to a simplex of this complex.
    pub fn simplex<S: AsRef<str>>(&self, labels: &[S]) -> Result<Simplex> {
        let render = || format!("{{{}}}", labels.iter().map(AsRef::as_ref).join(","));
        let ids = labels
            .iter()
            .map(|l| {
                self.vertex_id(l.as_ref())
                    .ok_or_else(|| Error::NotASimplex(render()))
            })
            .collect::<Result<Vec<_>>>()?;
        let simplex = Simplex::new(ids)
            .ok_or_else(|| Error::Parameter(format!("{} repeats a vertex", render())))?;
        if !self.contains(&simplex) {
            return Err(Error::NotASimplex(render()));
        }
        Ok(simplex)
    }

    pub fn simplex_labels(&self, s: &Simplex) -> Vec<&str> {
        s.vertices().iter().map(|&v| self.label(v)).collect()
    }

    /// Renders a simplex as `{a,b,c}` using this complex's labels.
    pub fn display_simplex(&self, s: &Simplex) -> String {
        format!("{{{}}}", self.simplex_labels(s).join(","))
    }

    /// Re-expresses a simplex of `self` in the vertex ids of `target`, matching by label.
    pub fn translate(&self, s: &Simplex, target: &Complex) -> Option<Simplex> {
        let ids = s
            .vertices()
            .iter()
            .map(|&v| target.vertex_id(self.label(v)))
            .collect::<Option<Vec<_>>>()?;
        Simplex::new(ids)
    }

    /// True iff `s` is a face of some facet. The empty simplex belongs to
    /// every non-empty complex and to no empty one.
    pub fn contains(&self, s: &Simplex) -> bool {
        self.facets.iter().any(|f| s.is_face_of(f))
    }

    /// Maximum facet dimension; -1 for the empty complex.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(Simplex::dim).max().unwrap_or(-1)
    }

    /// All facets have the same size. The empty complex counts as pure.
    pub fn is_pure(&self) -> bool {
        self.facets.iter().map(Simplex::len).all_equal()
    }

    fn faces(&self) -> &[Vec<Simplex>] {
        self.faces.get_or_init(|| {
            let top = self.facets.iter().map(Simplex::len).max().unwrap_or(0);
            (1..=top)
                .map(|size| {
                    let set: BTreeSet<Simplex> = self
                        .facets
                        .iter()
                        .flat_map(|f| f.faces_of_size(size))
                        .collect();
                    set.into_iter().collect()
                })
                .collect()
        })
    }

    /// The k-simplices, sorted; empty when `k` exceeds the dimension.
    pub fn simplices_of_dim(&self, k: usize) -> &[Simplex] {
        self.faces().get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Every non-empty simplex, by increasing dimension.
    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.faces().iter().flatten()
    }

    pub fn f_vector(&self) -> Result<FVector> {
        let counts = self
            .faces()
            .iter()
            .map(|faces| u64::try_from(faces.len()).map_err(|_| Error::Overflow("f-vector")))
            .collect::<Result<_>>()?;
        Ok(FVector { counts })
    }

    pub fn euler_characteristic(&self) -> Result<i64> {
        self.f_vector()?.euler_characteristic()
    }
}

impl Clone for Complex {
    fn clone(&self) -> Self {
        Self {
            labels: self.labels.clone(),
            facets: self.facets.clone(),
            faces: self.faces.clone(),
        }
    }
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.facets == other.facets
    }
}

impl Eq for Complex {}

impl Hash for Complex {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.labels.hash(state);
        self.facets.hash(state);
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.facets.iter().map(|s| self.display_simplex(s)))
            .finish()
    }
}
