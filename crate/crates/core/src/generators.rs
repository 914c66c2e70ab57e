//! Constructors for standard complexes and combinators on complexes.
//!
//! Generated labels are deterministic: `v0, v1, ...` for simplices, cycles
//! and random complexes; `p0.., q0..` for antipodal cross-polytope pairs;
//! `L:`/`R:` prefixes for the two sides of joins and disjoint unions; `apex0`
//! and `apex1` for suspension apexes.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{validate_label, Complex};
use crate::counting::binomial;
use crate::error::{Error, Result};

/// Seed for [`random_pure_complex`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Seed(pub u64);

fn vertex_labels(count: usize) -> Vec<String> {
    (0..count).map(|i| format!("v{i}")).collect()
}

fn build(facets: Vec<Vec<String>>) -> Complex {
    Complex::from_facets(facets).expect("generated labels are valid and distinct per facet")
}

/// The n-simplex with all its faces, on `v0..vn`.
pub fn full_simplex(n: usize) -> Complex {
    build(vec![vertex_labels(n + 1)])
}

/// Boundary of the (n+1)-simplex: every (n+1)-subset of `v0..v(n+1)`.
/// A triangulated n-sphere.
pub fn simplex_boundary(n: usize) -> Complex {
    let labels = vertex_labels(n + 2);
    build(labels.into_iter().combinations(n + 1).collect())
}

/// Boundary of the n-dimensional cross-polytope: an (n-1)-sphere on the
/// antipodal pairs `(p_i, q_i)`, one facet per choice of one vertex per pair.
pub fn cross_polytope_boundary(n: usize) -> Result<Complex> {
    if n == 0 {
        return Err(Error::Parameter("cross-polytope needs n >= 1".into()));
    }
    let facets = (0..n)
        .map(|i| [format!("p{i}"), format!("q{i}")])
        .multi_cartesian_product()
        .collect();
    Ok(build(facets))
}

/// The m-cycle `v0 v1 ... v(m-1) v0`.
pub fn cycle(m: usize) -> Result<Complex> {
    if m < 3 {
        return Err(Error::Parameter(format!(
            "a cycle needs at least 3 vertices, got {m}"
        )));
    }
    let labels = vertex_labels(m);
    let facets = (0..m)
        .map(|i| vec![labels[i].clone(), labels[(i + 1) % m].clone()])
        .collect();
    Ok(build(facets))
}

fn facet_labels(x: &Complex) -> impl Iterator<Item = Vec<String>> + '_ {
    x.facets()
        .iter()
        .map(move |f| x.simplex_labels(f).into_iter().map(String::from).collect())
}

/// Every facet of `x` extended by a new apex vertex. The cone over the empty
/// complex is the apex alone.
pub fn cone(x: &Complex, apex: &str) -> Result<Complex> {
    validate_label(apex)?;
    if x.vertex_id(apex).is_some() {
        return Err(Error::LabelCollision(apex.to_string()));
    }
    if x.is_empty() {
        return Ok(build(vec![vec![apex.to_string()]]));
    }
    Ok(build(
        facet_labels(x)
            .map(|mut f| {
                f.push(apex.to_string());
                f
            })
            .collect(),
    ))
}

fn fresh_label(x: &Complex, base: &str) -> String {
    let mut label = base.to_string();
    while x.vertex_id(&label).is_some() {
        label.push('\'');
    }
    label
}

/// Two cones over `x` glued along `x`. Apexes are `apex0` and `apex1`, with
/// primes appended if those labels are already taken.
pub fn suspension(x: &Complex) -> Complex {
    let apexes = [fresh_label(x, "apex0"), fresh_label(x, "apex1")];
    if x.is_empty() {
        return build(apexes.into_iter().map(|a| vec![a]).collect());
    }
    build(
        facet_labels(x)
            .cartesian_product(apexes.iter())
            .map(|(mut f, a)| {
                f.push(a.clone());
                f
            })
            .collect(),
    )
}

fn prefixed(x: &Complex, prefix: &str) -> Vec<Vec<String>> {
    facet_labels(x)
        .map(|f| f.into_iter().map(|l| format!("{prefix}{l}")).collect())
        .collect()
}

/// Facets `f ∪ g` for each facet `f` of `x` and `g` of `y`, with labels
/// prefixed `L:` and `R:`. Joining with the empty complex returns the other
/// side, prefixed.
pub fn join(x: &Complex, y: &Complex) -> Complex {
    let left = prefixed(x, "L:");
    let right = prefixed(y, "R:");
    if left.is_empty() || right.is_empty() {
        return build(left.into_iter().chain(right).collect());
    }
    build(
        left.iter()
            .cartesian_product(right.iter())
            .map(|(f, g)| f.iter().chain(g).cloned().collect())
            .collect(),
    )
}

/// Side-by-side union, labels prefixed `L:` and `R:`.
pub fn disjoint_union(x: &Complex, y: &Complex) -> Complex {
    build(
        prefixed(x, "L:")
            .into_iter()
            .chain(prefixed(y, "R:"))
            .collect(),
    )
}

/// `num_facets` distinct n-simplices on the labels `v0..v(num_vertices-1)`.
///
/// Draws use ChaCha8 seeded with [`SeedableRng::seed_from_u64`]. Each draw is
/// a partial Fisher-Yates shuffle of `0..num_vertices` where position `i`
/// swaps with `i + next_u64() % (num_vertices - i)`; the first `n + 1` entries
/// form the candidate facet, and repeats are discarded.
pub fn random_pure_complex(
    seed: Seed,
    n: usize,
    num_facets: usize,
    num_vertices: usize,
) -> Result<Complex> {
    if num_vertices < n + 1 {
        return Err(Error::Parameter(format!(
            "need at least {} vertices for {n}-simplices, got {num_vertices}",
            n + 1
        )));
    }
    if num_facets == 0 {
        return Err(Error::Parameter("need at least one facet".into()));
    }
    let available = binomial(num_vertices as u64, n as i64 + 1).unwrap_or(u64::MAX);
    if num_facets as u64 > available {
        return Err(Error::Infeasible {
            requested: num_facets as u64,
            available,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
    let mut pool: Vec<usize> = (0..num_vertices).collect();
    let mut chosen: BTreeSet<Vec<usize>> = BTreeSet::new();
    while chosen.len() < num_facets {
        for i in 0..=n {
            let span = (num_vertices - i) as u64;
            let j = i + (rng.next_u64() % span) as usize;
            pool.swap(i, j);
        }
        let mut facet = pool[..=n].to_vec();
        facet.sort_unstable();
        chosen.insert(facet);
    }
    let labels = vertex_labels(num_vertices);
    Ok(build(
        chosen
            .into_iter()
            .map(|f| f.into_iter().map(|i| labels[i].clone()).collect())
            .collect(),
    ))
}
