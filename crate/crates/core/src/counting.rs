//! Exact face and coface counts, and checkers for the counting identities
//! that relate them.
//!
//! Every checker computes both sides of its identity along separate code
//! paths and returns a [`LemmaReport`] holding both values, so a failing
//! identity can be diagnosed rather than just detected.
//!
//! Sign convention: alternating sums use `(-1)^(l-k-1)`, which equals
//! `(-1)^(l-k+1)` since the exponents differ by two.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::euler_check::{check_euler, CheckOptions};
use crate::simplex::Simplex;
use crate::star_link::link;

/// Which identity a report is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// `sum over k-simplices s of cofaces_l(s) = C(l+1, k+1) * faces_l(X)`.
    CofaceSum,
    /// `cofaces_l(s) = faces_{l-k-1}(link s)` for a k-simplex `s`.
    LinkCount,
    /// `sum_{k<l} (-1)^(l-k-1) C(l+1, k+1)` is 0 for even `l` and 2 for odd `l`.
    CoefficientSum,
    /// `2 * sum_{k even} s_k` equals the double alternating binomial sum,
    /// for an odd-dimensional Euler complex.
    Main,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Parameters {
    Dimensions { k: usize, l: usize },
    Simplex { simplex: Vec<String>, l: usize },
    Degree { l: u32 },
    Complex { dimension: isize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub identity: Identity,
    pub parameters: Parameters,
    pub lhs: i64,
    pub rhs: i64,
    /// `lhs == rhs`.
    pub holds: bool,
    /// Outcome of the explicit `t -> s ∪ t` bijection check; link counts only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bijection: Option<bool>,
}

impl LemmaReport {
    fn new(identity: Identity, parameters: Parameters, lhs: i64, rhs: i64) -> Self {
        Self {
            identity,
            parameters,
            lhs,
            rhs,
            holds: lhs == rhs,
            bijection: None,
        }
    }

    /// The identity holds and, where checked, so does the bijection.
    pub fn passed(&self) -> bool {
        self.holds && self.bijection != Some(false)
    }
}

fn to_i64(v: u64, what: &'static str) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow(what))
}

/// Exact binomial coefficient; zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> Result<u64> {
    if k < 0 || k as u64 > n {
        return Ok(0);
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is C(n, i + 1), always an integer.
        acc = acc
            .checked_mul(u128::from(n - i))
            .ok_or(Error::Overflow("binomial coefficient"))?
            / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow("binomial coefficient"));
        }
    }
    Ok(acc as u64)
}

/// Number of l-simplices of `y`.
///
/// By convention a non-empty complex has exactly one (-1)-simplex, the empty
/// set, and the empty complex has none.
pub fn count_faces(y: &Complex, l: isize) -> u64 {
    match l {
        -1 => u64::from(!y.is_empty()),
        l if l < -1 => 0,
        l => y.simplices_of_dim(l as usize).len() as u64,
    }
}

/// Number of l-simplices of `x` that contain `s`.
pub fn count_cofaces(x: &Complex, s: &Simplex, l: isize) -> Result<u64> {
    if !x.contains(s) {
        return Err(Error::NotASimplex(x.display_simplex(s)));
    }
    if l < 0 {
        return Ok(u64::from(l == s.dim()));
    }
    Ok(x.simplices_of_dim(l as usize)
        .iter()
        .filter(|t| s.is_face_of(t))
        .count() as u64)
}

fn check_range(x: &Complex, k: isize, l: isize) -> Result<()> {
    if k < 0 || k > l || l > x.dimension() {
        return Err(Error::Parameter(format!(
            "need 0 <= k <= l <= dim = {}, got k = {k}, l = {l}",
            x.dimension()
        )));
    }
    Ok(())
}

/// Sum of l-coface counts over all k-simplices against `C(l+1, k+1)` times
/// the number of l-simplices.
pub fn verify_coface_sum(x: &Complex, k: usize, l: usize) -> Result<LemmaReport> {
    check_range(x, k as isize, l as isize)?;
    let mut lhs: u64 = 0;
    for sigma in x.simplices_of_dim(k) {
        lhs = lhs
            .checked_add(count_cofaces(x, sigma, l as isize)?)
            .ok_or(Error::Overflow("coface sum"))?;
    }
    let rhs = binomial(l as u64 + 1, k as i64 + 1)?
        .checked_mul(count_faces(x, l as isize))
        .ok_or(Error::Overflow("coface sum"))?;
    Ok(LemmaReport::new(
        Identity::CofaceSum,
        Parameters::Dimensions { k, l },
        to_i64(lhs, "coface sum")?,
        to_i64(rhs, "coface sum")?,
    ))
}

/// l-coface count of `s` against the (l-k-1)-face count of its link, plus
/// an explicit check that `t -> s ∪ t` maps the (l-k-1)-simplices of the
/// link bijectively onto the l-cofaces of `s`.
pub fn verify_link_count(x: &Complex, s: &Simplex, l: usize) -> Result<LemmaReport> {
    if s.is_empty() {
        return Err(Error::Parameter("simplex must be non-empty".into()));
    }
    if !x.contains(s) {
        return Err(Error::NotASimplex(x.display_simplex(s)));
    }
    let k = s.dim();
    check_range(x, k, l as isize)?;
    let target_dim = l as isize - k - 1;

    let lhs = count_cofaces(x, s, l as isize)?;
    let lk = link(x, s)?;
    // The link of a facet is stored as the empty complex, yet it still has
    // the empty face (s ∪ ∅ = s lies in x), so the (-1)-count is always 1.
    let rhs = if target_dim == -1 {
        1
    } else {
        count_faces(&lk, target_dim)
    };

    let link_faces: Vec<Simplex> = if target_dim == -1 {
        vec![Simplex::empty()]
    } else {
        lk.simplices_of_dim(target_dim as usize).to_vec()
    };
    let mut image = BTreeSet::new();
    let mut well_defined = true;
    for t in &link_faces {
        let Some(t_ambient) = lk.translate(t, x) else {
            well_defined = false;
            continue;
        };
        let rho = s.union(&t_ambient);
        let lands = t_ambient.is_disjoint(s)
            && rho.len() == l + 1
            && x.contains(&rho)
            && rho.difference(s) == t_ambient;
        well_defined &= lands;
        image.insert(rho);
    }
    let injective = image.len() == link_faces.len();
    let cofaces: BTreeSet<Simplex> = x
        .simplices_of_dim(l)
        .iter()
        .filter(|t| s.is_face_of(t))
        .cloned()
        .collect();
    let surjective = image == cofaces;

    let mut report = LemmaReport::new(
        Identity::LinkCount,
        Parameters::Simplex {
            simplex: x.simplex_labels(s).into_iter().map(String::from).collect(),
            l,
        },
        to_i64(lhs, "coface count")?,
        to_i64(rhs, "link face count")?,
    );
    report.bijection = Some(well_defined && injective && surjective);
    Ok(report)
}

/// `sum_{k=0}^{l-1} (-1)^(l-k-1) C(l+1, k+1)`, evaluated term by term.
pub fn coefficient_sum(l: u32) -> Result<i64> {
    if l == 0 {
        return Err(Error::Parameter("coefficient sum needs l >= 1".into()));
    }
    (0..l).try_fold(0i64, |acc, k| {
        let term = to_i64(
            binomial(u64::from(l) + 1, i64::from(k) + 1)?,
            "coefficient sum",
        )?;
        let next = if (l - k - 1).is_multiple_of(2) {
            acc.checked_add(term)
        } else {
            acc.checked_sub(term)
        };
        next.ok_or(Error::Overflow("coefficient sum"))
    })
}

pub fn coefficient_report(l: u32) -> Result<LemmaReport> {
    let lhs = coefficient_sum(l)?;
    let rhs = if l.is_multiple_of(2) { 0 } else { 2 };
    Ok(LemmaReport::new(
        Identity::CoefficientSum,
        Parameters::Degree { l },
        lhs,
        rhs,
    ))
}

/// Checks that `x` is an odd-dimensional Euler complex, then evaluates both
/// sides of the summed link identity.
pub fn verify_main_identity(x: &Complex) -> Result<LemmaReport> {
    if x.is_empty() {
        return Err(Error::Precondition("complex is empty".into()));
    }
    if !x.is_pure() {
        return Err(Error::Precondition("complex is not pure".into()));
    }
    let n = x.dimension();
    if n % 2 == 0 {
        return Err(Error::Precondition(format!("dimension {n} is even")));
    }
    let report = check_euler(x, &CheckOptions::default())?;
    if let Some(bad) = report.checks.iter().find(|c| !c.ok) {
        return Err(Error::Precondition(format!(
            "not an Euler complex: link of {} has chi {}, expected {}",
            x.display_simplex(&bad.simplex),
            bad.link_chi,
            bad.expected_chi
        )));
    }
    main_identity(x)
}

/// Evaluates both sides without re-checking the hypotheses.
pub(crate) fn main_identity(x: &Complex) -> Result<LemmaReport> {
    let n = x.dimension();
    let f = x.f_vector()?;
    let overflow = || Error::Overflow("main identity");

    let mut even_total: i64 = 0;
    for k in (0..=n).step_by(2) {
        even_total = even_total
            .checked_add(to_i64(f.get(k), "main identity")?)
            .ok_or_else(overflow)?;
    }
    let lhs = even_total.checked_mul(2).ok_or_else(overflow)?;

    let mut rhs: i64 = 0;
    for k in 0..n {
        for l in (k + 1)..=n {
            let coeff = to_i64(binomial(l as u64 + 1, k as i64 + 1)?, "main identity")?;
            let term = coeff
                .checked_mul(to_i64(f.get(l), "main identity")?)
                .ok_or_else(overflow)?;
            rhs = if (l - k - 1) % 2 == 0 {
                rhs.checked_add(term)
            } else {
                rhs.checked_sub(term)
            }
            .ok_or_else(overflow)?;
        }
    }
    Ok(LemmaReport::new(
        Identity::Main,
        Parameters::Complex { dimension: n },
        lhs,
        rhs,
    ))
}

/// Coface-sum reports for every `0 <= k <= l <= dim`.
pub fn sweep_coface_sums(x: &Complex) -> Result<Vec<LemmaReport>> {
    let n = x.dimension();
    if n < 0 {
        return Ok(Vec::new());
    }
    let n = n as usize;
    (0..=n)
        .flat_map(|l| (0..=l).map(move |k| (k, l)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(k, l)| verify_coface_sum(x, k, l))
        .collect()
}

/// Link-count reports for every non-empty simplex and every admissible `l`,
/// ordered by simplex then `l`.
pub fn sweep_link_counts(x: &Complex) -> Result<Vec<LemmaReport>> {
    let n = x.dimension();
    let simplices: Vec<&Simplex> = x.simplices().collect();
    let per_simplex: Vec<Vec<LemmaReport>> = simplices
        .into_par_iter()
        .map(|s| {
            (s.dim()..=n)
                .map(|l| verify_link_count(x, s, l as usize))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(per_simplex.into_iter().flatten().collect())
}
