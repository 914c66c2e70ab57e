use std::fmt;

use eulerplex_core::{Complex, EulerReport, LemmaReport, Parameters, Result};
use serde::Serialize;

/// `info` output; the JSON field set is fixed.
#[derive(Serialize)]
pub struct Info {
    dimension: isize,
    pure: bool,
    f_vector: Vec<u64>,
    chi: i64,
}

impl Info {
    pub fn new(x: &Complex) -> Result<Self> {
        let f = x.f_vector()?;
        Ok(Self {
            dimension: x.dimension(),
            pure: x.is_pure(),
            chi: f.euler_characteristic()?,
            f_vector: f.counts().to_vec(),
        })
    }
}

impl fmt::Display for Info {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<String> = self.f_vector.iter().map(u64::to_string).collect();
        write!(
            f,
            "dim {}, {}, f = ({}), chi = {}",
            self.dimension,
            if self.pure { "pure" } else { "not pure" },
            counts.join(","),
            self.chi
        )
    }
}

#[derive(Serialize)]
pub struct LinkCheckJson {
    simplex: Vec<String>,
    link_dim: isize,
    link_chi: i64,
    expected_chi: i64,
    ok: bool,
}

#[derive(Serialize)]
pub struct CheckJson {
    pure: bool,
    dimension: isize,
    chi: i64,
    is_euler: bool,
    theorem_applicable: bool,
    theorem_holds: Option<bool>,
    main_identity: Option<LemmaReport>,
    checked: usize,
    failures: usize,
    checks: Vec<LinkCheckJson>,
    passed: bool,
}

fn labels(x: &Complex, s: &eulerplex_core::Simplex) -> Vec<String> {
    x.simplex_labels(s).into_iter().map(String::from).collect()
}

impl CheckJson {
    pub fn new(x: &Complex, r: &EulerReport) -> Self {
        Self {
            pure: r.pure,
            dimension: r.dimension,
            chi: r.chi,
            is_euler: r.is_euler,
            theorem_applicable: r.theorem_applicable,
            theorem_holds: r.theorem_holds,
            main_identity: r.main_identity.clone(),
            checked: r.checked,
            failures: r.failures,
            checks: r
                .checks
                .iter()
                .map(|c| LinkCheckJson {
                    simplex: labels(x, &c.simplex),
                    link_dim: c.link_dim,
                    link_chi: c.link_chi,
                    expected_chi: c.expected_chi,
                    ok: c.ok,
                })
                .collect(),
            passed: r.passed(),
        }
    }
}

pub fn check_text(x: &Complex, r: &EulerReport) -> String {
    let parity = if r.dimension % 2 == 0 { "even" } else { "odd" };
    let mut out = String::new();
    if !r.pure {
        out.push_str(&format!(
            "NOT AN EULER COMPLEX, dim {}, chi = {}: not pure (facets of different dimensions)\n",
            r.dimension, r.chi
        ));
        return out;
    }
    if r.is_euler {
        let verdict = match (r.theorem_holds, &r.main_identity) {
            (None, _) => "theorem not applicable".to_string(),
            (Some(true), Some(m)) if m.holds => "theorem verified".to_string(),
            (Some(true), None) => "theorem verified".to_string(),
            _ => "THEOREM VIOLATED".to_string(),
        };
        out.push_str(&format!(
            "EULER COMPLEX, dim {} ({parity}), chi = {}, {verdict}\n",
            r.dimension, r.chi
        ));
        if let Some(m) = &r.main_identity {
            out.push_str(&format!(
                "  summed link identity: {} {} {}\n",
                m.lhs,
                if m.holds { "=" } else { "!=" },
                m.rhs
            ));
        }
    } else {
        out.push_str(&format!(
            "NOT AN EULER COMPLEX, dim {} ({parity}), chi = {}: {} of {} links fail\n",
            r.dimension, r.chi, r.failures, r.checked
        ));
    }
    for c in &r.checks {
        out.push_str(&format!(
            "  {} link of {}: dim {}, chi {}, expected {}\n",
            if c.ok { "ok  " } else { "FAIL" },
            x.display_simplex(&c.simplex),
            c.link_dim,
            c.link_chi,
            c.expected_chi
        ));
    }
    let listed = r.checks.iter().filter(|c| !c.ok).count();
    if r.failures > listed {
        out.push_str(&format!(
            "  ... {} more failing links\n",
            r.failures - listed
        ));
    }
    out
}

#[derive(Serialize)]
pub struct LemmaSummary {
    pub all_hold: bool,
    coface_sum: Vec<LemmaReport>,
    link_count: Vec<LemmaReport>,
}

impl LemmaSummary {
    pub fn new(coface_sum: Vec<LemmaReport>, link_count: Vec<LemmaReport>) -> Self {
        let all_hold = coface_sum
            .iter()
            .chain(&link_count)
            .all(LemmaReport::passed);
        Self {
            all_hold,
            coface_sum,
            link_count,
        }
    }
}

fn describe(r: &LemmaReport) -> String {
    let params = match &r.parameters {
        Parameters::Dimensions { k, l } => format!("k = {k}, l = {l}"),
        Parameters::Simplex { simplex, l } => format!("simplex {{{}}}, l = {l}", simplex.join(",")),
        Parameters::Degree { l } => format!("l = {l}"),
        Parameters::Complex { dimension } => format!("dim {dimension}"),
    };
    let bijection = match r.bijection {
        Some(false) => ", bijection FAILED",
        _ => "",
    };
    format!("{params}: lhs {} rhs {}{bijection}", r.lhs, r.rhs)
}

impl fmt::Display for LemmaSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ok = |rs: &[LemmaReport]| rs.iter().filter(|r| r.passed()).count();
        writeln!(
            f,
            "coface sums: {}/{} hold; link counts: {}/{} hold",
            ok(&self.coface_sum),
            self.coface_sum.len(),
            ok(&self.link_count),
            self.link_count.len()
        )?;
        for r in self
            .coface_sum
            .iter()
            .chain(&self.link_count)
            .filter(|r| !r.passed())
        {
            writeln!(f, "  FAIL {:?} {}", r.identity, describe(r))?;
        }
        Ok(())
    }
}
