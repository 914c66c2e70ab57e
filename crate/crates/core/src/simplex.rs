use std::fmt;

use itertools::Itertools;

/// Dense index of a vertex into the label table of its complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An abstract simplex: a finite set of vertices, kept sorted ascending.
///
/// The derived ordering is lexicographic on the sorted vertex sequence,
/// which coincides with lexicographic label order because vertex ids are
/// assigned in label order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    vertices: Vec<VertexId>,
}

impl Simplex {
    /// The (-1)-dimensional empty simplex.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a simplex from arbitrary vertex ids. Returns `None` if a vertex repeats.
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Option<Self> {
        let mut vertices: Vec<VertexId> = vertices.into_iter().collect();
        vertices.sort_unstable();
        let len = vertices.len();
        vertices.dedup();
        (vertices.len() == len).then_some(Self { vertices })
    }

    /// Wraps a vector that is already strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Number of vertices minus one; the empty simplex has dimension -1.
    pub fn dim(&self) -> isize {
        self.vertices.len() as isize - 1
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// True if every vertex of `self` is a vertex of `other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.len() > other.len() {
            return false;
        }
        // Both sides are sorted, so a single merge pass suffices.
        let mut theirs = other.vertices.iter();
        'outer: for v in &self.vertices {
            for w in theirs.by_ref() {
                match w.cmp(v) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.len() && j < other.len() {
            match self.vertices[i].cmp(&other.vertices[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let vertices = self
            .vertices
            .iter()
            .merge(other.vertices.iter())
            .dedup()
            .copied()
            .collect();
        Simplex::from_sorted(vertices)
    }

    /// Vertices of `self` not in `other`.
    pub fn difference(&self, other: &Simplex) -> Simplex {
        let vertices = self
            .vertices
            .iter()
            .filter(|v| !other.contains_vertex(**v))
            .copied()
            .collect();
        Simplex::from_sorted(vertices)
    }

    /// All faces with exactly `size` vertices, in lexicographic order.
    pub fn faces_of_size(&self, size: usize) -> impl Iterator<Item = Simplex> + '_ {
        self.vertices
            .iter()
            .copied()
            .combinations(size)
            .map(Simplex::from_sorted)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.vertices.iter().join(","))
    }
}
