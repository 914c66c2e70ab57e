//! Standard spheres and combinators checked against brute force.

mod common;

use common::{oracle, oracle_faces};
use eulerplex_core::counting::{binomial, coefficient_sum, verify_main_identity};
use eulerplex_core::euler_check::{check_euler, verify_theorem};
use eulerplex_core::generators::{
    cone, cross_polytope_boundary, cycle, disjoint_union, full_simplex, join, simplex_boundary,
    suspension,
};
use eulerplex_core::{io, CheckOptions, Complex};

fn opts() -> CheckOptions {
    CheckOptions::default()
}

fn sphere_chi(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        2
    } else {
        0
    }
}

#[test]
fn full_simplex_f_vector_is_binomial() {
    for l in 0..=8usize {
        let f = full_simplex(l).f_vector().unwrap();
        for k in 0..=l {
            assert_eq!(f.counts()[k], binomial(l as u64 + 1, k as i64 + 1).unwrap());
            assert_eq!(f.counts()[k], oracle::pascal(l + 1, k + 1));
        }
        assert_eq!(full_simplex(l).euler_characteristic().unwrap(), 1);
    }
}

#[test]
fn simplex_boundaries_are_spheres() {
    for n in 0..=10usize {
        let x = simplex_boundary(n);
        assert_eq!(x.dimension(), n as isize);
        assert_eq!(x.euler_characteristic().unwrap(), sphere_chi(n), "n = {n}");
        assert_eq!(oracle::chi(&oracle_faces(&x)), sphere_chi(n), "n = {n}");
    }
    for n in 0..=6usize {
        let x = simplex_boundary(n);
        assert!(check_euler(&x, &opts()).unwrap().is_euler, "n = {n}");
    }
    for n in 0..=4usize {
        assert!(oracle::is_euler(&oracle_faces(&simplex_boundary(n))));
    }
}

#[test]
fn cross_polytope_boundaries_are_spheres() {
    for n in 0..=6usize {
        let x = cross_polytope_boundary(n + 1).unwrap();
        assert_eq!(x.dimension(), n as isize);
        assert_eq!(x.facets().len(), 1 << (n + 1));
        assert_eq!(x.euler_characteristic().unwrap(), sphere_chi(n));
        assert!(check_euler(&x, &opts()).unwrap().is_euler, "n = {n}");
    }
    for n in 1..=4usize {
        let faces = oracle_faces(&cross_polytope_boundary(n).unwrap());
        assert!(oracle::is_euler(&faces));
    }
}

#[test]
fn suspension_of_tetra_surface() {
    let s = suspension(&simplex_boundary(2));
    let r = check_euler(&s, &opts()).unwrap();
    assert_eq!((r.dimension, r.chi, r.is_euler), (3, 0, true));
    assert!(oracle::is_euler(&oracle_faces(&s)));
}

#[test]
fn two_disjoint_spheres() {
    let t = simplex_boundary(2);
    let u = disjoint_union(&t, &t);
    let r = check_euler(&u, &opts()).unwrap();
    assert_eq!((r.chi, r.is_euler, r.pure, r.dimension), (4, true, true, 2));
}

#[test]
fn join_with_points_is_cone_and_suspension() {
    let x = io::load_corpus("torus-7").unwrap();
    let point = Complex::from_facets([["apex"]]).unwrap();
    let as_cone = join(&point, &x)
        .relabel(|l| {
            l.trim_start_matches("L:")
                .trim_start_matches("R:")
                .to_string()
        })
        .unwrap();
    assert_eq!(as_cone, cone(&x, "apex").unwrap());

    let s0 = simplex_boundary(0);
    let as_susp = join(&s0, &x)
        .relabel(|l| match l {
            "L:v0" => "apex0".into(),
            "L:v1" => "apex1".into(),
            other => other.trim_start_matches("R:").to_string(),
        })
        .unwrap();
    assert_eq!(as_susp, suspension(&x));
}

#[test]
fn disjoint_union_with_empty_is_identity() {
    let t = simplex_boundary(2);
    let u = disjoint_union(&t, &Complex::empty())
        .relabel(|l| l.trim_start_matches("L:").to_string())
        .unwrap();
    assert_eq!(u, t);
}

#[test]
fn join_of_triangles_is_three_sphere() {
    let j = join(&cycle(3).unwrap(), &cycle(3).unwrap());
    let faces = oracle_faces(&j);
    assert!(oracle::is_euler(&faces));
    assert_eq!(oracle::chi(&faces), 0);
    let r = verify_theorem(&j, &opts()).unwrap();
    assert!(r.is_euler && r.passed());
    assert_eq!((r.dimension, r.chi), (3, 0));
}

#[test]
fn cycles_satisfy_theorem() {
    for m in 3..=12 {
        let c = cycle(m).unwrap();
        let r = verify_theorem(&c, &opts()).unwrap();
        assert!(r.is_euler && r.theorem_applicable);
        assert_eq!(r.theorem_holds, Some(true));
        let main = r.main_identity.unwrap();
        assert_eq!((main.lhs, main.rhs), (2 * m as i64, 2 * m as i64));
    }
}

#[test]
fn main_identity_on_four_simplex_boundary() {
    let x = simplex_boundary(3);
    let f = oracle::f_vector(&oracle_faces(&x));
    assert_eq!(f, [5, 10, 10, 5]);
    // Double sum expanded by hand from the f-vector:
    // k=0: C(2,1)*10 - C(3,1)*10 + C(4,1)*5 = 20 - 30 + 20 = 10
    // k=1: C(3,2)*10 - C(4,2)*5 = 30 - 30 = 0
    // k=2: C(4,3)*5 = 20
    let r = verify_main_identity(&x).unwrap();
    assert_eq!((r.lhs, r.rhs, r.holds), (30, 30, true));
}

#[test]
fn main_identity_on_octahedral_three_sphere() {
    let x = cross_polytope_boundary(4).unwrap();
    let f = oracle::f_vector(&oracle_faces(&x));
    let expected_lhs = 2 * (f[0] + f[2]) as i64;
    let r = verify_main_identity(&x).unwrap();
    assert_eq!(r.lhs, expected_lhs);
    assert!(r.holds);
}

#[test]
fn coefficient_sums_alternate() {
    for l in 1..=30u32 {
        let brute: i64 = (0..l as usize)
            .map(|k| {
                let c = oracle::pascal(l as usize + 1, k + 1) as i64;
                if (l as usize - k - 1).is_multiple_of(2) {
                    c
                } else {
                    -c
                }
            })
            .sum();
        let closed = 1 + (-1i64).pow(l + 1);
        assert_eq!(coefficient_sum(l).unwrap(), brute, "l = {l}");
        assert_eq!(brute, closed, "l = {l}");
    }
}

#[test]
fn sphere_euler_characteristic_for_small_dimensions() {
    // s_k of the boundary of the (n+1)-simplex is C(n+2, k+1) for k <= n.
    for n in 0..=10usize {
        let f = simplex_boundary(n).f_vector().unwrap();
        for k in 0..=n {
            assert_eq!(f.counts()[k], oracle::pascal(n + 2, k + 1));
        }
    }
}
