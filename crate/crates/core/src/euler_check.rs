//! Euler complex classification.
//!
//! A pure n-complex is an Euler complex when the link of every non-empty
//! k-simplex has the Euler characteristic of the (n-k-1)-sphere, namely
//! `1 + (-1)^(n-k-1)`. Facets have the empty link, whose characteristic is 0,
//! matching the (-1)-sphere value, so they pass automatically. The link of
//! the empty simplex (the whole complex) is not examined.
//!
//! For odd n every Euler complex has characteristic 0; [`verify_theorem`]
//! checks that directly and also evaluates the summed counting identity
//! behind it.

use rayon::prelude::*;

use crate::complex::Complex;
use crate::counting::{main_identity, LemmaReport};
use crate::error::{Error, Result};
use crate::simplex::Simplex;
use crate::star_link::link;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Keep passing checks in the report as well as failures.
    pub verbose: bool,
    /// Upper bound on the failures listed; the total is still counted.
    pub max_failures: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            verbose: false,
            max_failures: 100,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkCheck {
    pub simplex: Simplex,
    pub link_dim: isize,
    pub link_chi: i64,
    pub expected_chi: i64,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerReport {
    pub pure: bool,
    pub dimension: isize,
    pub chi: i64,
    /// Failing checks (capped), plus passing ones in verbose mode, in
    /// (dimension, simplex) order.
    pub checks: Vec<LinkCheck>,
    /// Number of link checks performed.
    pub checked: usize,
    /// Total number of failing checks, including any beyond the cap.
    pub failures: usize,
    pub is_euler: bool,
    /// The dimension is odd.
    pub theorem_applicable: bool,
    /// `chi == 0`; present iff the complex is Euler and odd-dimensional.
    pub theorem_holds: Option<bool>,
    /// Summed counting identity; filled in by [`verify_theorem`] when applicable.
    pub main_identity: Option<LemmaReport>,
}

impl EulerReport {
    /// Euler complex and, if odd-dimensional, zero characteristic and a
    /// holding summed identity.
    pub fn passed(&self) -> bool {
        self.is_euler
            && (!self.theorem_applicable
                || (self.theorem_holds == Some(true)
                    && self.main_identity.as_ref().is_none_or(|m| m.holds)))
    }

    pub fn failing(&self) -> impl Iterator<Item = &LinkCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

/// `1 + (-1)^d` for `d >= -1`: the Euler characteristic of the d-sphere,
/// with the (-1)-sphere being empty.
pub fn sphere_chi(d: isize) -> i64 {
    if d.rem_euclid(2) == 0 {
        2
    } else {
        0
    }
}

fn link_check(x: &Complex, n: isize, s: &Simplex) -> Result<LinkCheck> {
    let lk = link(x, s)?;
    let link_dim = lk.dimension();
    let link_chi = lk.euler_characteristic()?;
    let ambient_dim = n - s.dim() - 1;
    assert_eq!(
        link_dim,
        ambient_dim,
        "link of {} in a pure {n}-complex has dimension {link_dim}",
        x.display_simplex(s)
    );
    let expected_chi = sphere_chi(ambient_dim);
    let by_link_dim = if link_dim >= 0 {
        1 + (-1i64).pow(link_dim as u32)
    } else {
        0
    };
    assert_eq!(expected_chi, by_link_dim);
    Ok(LinkCheck {
        simplex: s.clone(),
        link_dim,
        link_chi,
        expected_chi,
        ok: link_chi == expected_chi,
    })
}

pub fn check_euler(x: &Complex, opts: &CheckOptions) -> Result<EulerReport> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    let dimension = x.dimension();
    let chi = x.euler_characteristic()?;
    let pure = x.is_pure();
    let theorem_applicable = dimension % 2 == 1;
    let mut report = EulerReport {
        pure,
        dimension,
        chi,
        checks: Vec::new(),
        checked: 0,
        failures: 0,
        is_euler: false,
        theorem_applicable,
        theorem_holds: None,
        main_identity: None,
    };
    if !pure {
        return Ok(report);
    }

    let simplices: Vec<&Simplex> = x.simplices().collect();
    let mut all = simplices
        .into_par_iter()
        .map(|s| link_check(x, dimension, s))
        .collect::<Result<Vec<_>>>()?;
    all.sort_by(|a, b| (a.simplex.len(), &a.simplex).cmp(&(b.simplex.len(), &b.simplex)));

    report.checked = all.len();
    report.failures = all.iter().filter(|c| !c.ok).count();
    report.is_euler = report.failures == 0;
    let mut listed_failures = 0;
    report.checks = all
        .into_iter()
        .filter(|c| {
            if c.ok {
                opts.verbose
            } else {
                listed_failures += 1;
                listed_failures <= opts.max_failures
            }
        })
        .collect();
    if report.is_euler && theorem_applicable {
        report.theorem_holds = Some(chi == 0);
    }
    Ok(report)
}

/// [`check_euler`], plus the summed counting identity when the complex is an
/// odd-dimensional Euler complex.
pub fn verify_theorem(x: &Complex, opts: &CheckOptions) -> Result<EulerReport> {
    let mut report = check_euler(x, opts)?;
    if report.is_euler && report.theorem_applicable {
        report.main_identity = Some(main_identity(x)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tetra() -> Complex {
        Complex::from_facets([
            ["a", "b", "c"],
            ["a", "b", "d"],
            ["a", "c", "d"],
            ["b", "c", "d"],
        ])
        .unwrap()
    }

    #[test]
    fn sphere_values() {
        assert_eq!(sphere_chi(-1), 0);
        assert_eq!(sphere_chi(0), 2);
        assert_eq!(sphere_chi(1), 0);
        assert_eq!(sphere_chi(2), 2);
    }

    #[test]
    fn tetra_is_euler() {
        let r = check_euler(&tetra(), &CheckOptions::default()).unwrap();
        assert!(r.pure && r.is_euler);
        assert_eq!((r.dimension, r.chi), (2, 2));
        assert!(!r.theorem_applicable);
        assert_eq!(r.theorem_holds, None);
        assert_eq!(r.checked, 14);
        assert!(r.checks.is_empty());
        assert!(r.passed());
    }

    #[test]
    fn verbose_keeps_passes() {
        let opts = CheckOptions {
            verbose: true,
            ..CheckOptions::default()
        };
        let r = check_euler(&tetra(), &opts).unwrap();
        assert_eq!(r.checks.len(), 14);
        assert!(r.checks.iter().all(|c| c.ok));
        assert_eq!(r.checks[0].simplex.len(), 1);
    }

    #[test]
    fn bowtie_is_not_euler() {
        let bowtie = Complex::from_facets([["a", "b", "c"], ["a", "d", "e"]]).unwrap();
        let r = check_euler(&bowtie, &CheckOptions::default()).unwrap();
        assert!(r.pure);
        assert!(!r.is_euler);
        let bad: Vec<_> = r.failing().collect();
        assert_eq!(bowtie.display_simplex(&bad[0].simplex), "{a}");
        assert_eq!((bad[0].link_chi, bad[0].expected_chi), (2, 0));
    }

    #[test]
    fn non_pure_has_no_checks() {
        let x = Complex::from_facets(vec![vec!["a", "b", "c"], vec!["d", "e"]]).unwrap();
        let r = check_euler(&x, &CheckOptions::default()).unwrap();
        assert!(!r.pure && !r.is_euler);
        assert!(r.checks.is_empty());
    }

    #[test]
    fn empty_rejected() {
        assert_eq!(
            check_euler(&Complex::empty(), &CheckOptions::default()),
            Err(Error::EmptyInput)
        );
    }

    #[test]
    fn failure_cap() {
        // Three disjoint paths: each path end is a failing vertex.
        let x = Complex::from_facets([
            ["a", "b"],
            ["b", "c"],
            ["d", "e"],
            ["e", "f"],
            ["g", "h"],
            ["h", "i"],
        ])
        .unwrap();
        let opts = CheckOptions {
            verbose: false,
            max_failures: 2,
        };
        let r = check_euler(&x, &opts).unwrap();
        assert_eq!(r.failures, 6);
        assert_eq!(r.checks.len(), 2);
    }

    #[test]
    fn odd_cycle_theorem() {
        let c = Complex::from_facets([["a", "b"], ["b", "c"], ["a", "c"]]).unwrap();
        let r = verify_theorem(&c, &CheckOptions::default()).unwrap();
        assert!(r.is_euler && r.theorem_applicable);
        assert_eq!(r.theorem_holds, Some(true));
        let m = r.main_identity.as_ref().unwrap();
        assert_eq!((m.lhs, m.rhs), (6, 6));
        assert!(r.passed());
    }
}
