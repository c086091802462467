//! Set comparisons behind the support formulas: enumeration against interval
//! unions and against column-by-column sumsets.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{
    interval_union, m_convex_violation, minkowski_sumset, schubert_matroid_bases,
    schubert_spanning_sets, ExchangeWitness, LatticePointSet,
};
use crate::diagram::{rothe_diagram, Diagram};
use crate::error::{Error, Result};
use crate::perm::{max_weight_formula, pi_of, Permutation};
use crate::poly::{homogenize_support, schubert_and_grothendieck};
use crate::vector::ExponentVector;

/// Outcome of comparing two lattice point sets for one instance of a claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub claim: String,
    pub instance: String,
    pub ok: bool,
    pub lhs_minus_rhs: Vec<ExponentVector>,
    pub rhs_minus_lhs: Vec<ExponentVector>,
}

impl Report {
    /// Reports set equality.
    pub fn equality(claim: &str, instance: String, lhs: &LatticePointSet, rhs: &LatticePointSet) -> Self {
        let lhs_minus_rhs = lhs.difference(rhs);
        let rhs_minus_lhs = rhs.difference(lhs);
        Report {
            claim: claim.into(),
            instance,
            ok: lhs_minus_rhs.is_empty() && rhs_minus_lhs.is_empty(),
            lhs_minus_rhs,
            rhs_minus_lhs,
        }
    }

    /// Reports `lhs ⊆ rhs`; points of `rhs` outside `lhs` are listed but allowed.
    pub fn inclusion(claim: &str, instance: String, lhs: &LatticePointSet, rhs: &LatticePointSet) -> Self {
        let lhs_minus_rhs = lhs.difference(rhs);
        Report {
            claim: claim.into(),
            instance,
            ok: lhs_minus_rhs.is_empty(),
            lhs_minus_rhs,
            rhs_minus_lhs: rhs.difference(lhs),
        }
    }

    pub fn pass(claim: &str, instance: String) -> Self {
        Report { claim: claim.into(), instance, ok: true, lhs_minus_rhs: vec![], rhs_minus_lhs: vec![] }
    }

    pub fn fail(claim: &str, instance: String) -> Self {
        Report { ok: false, ..Self::pass(claim, instance) }
    }
}

/// Supports of 𝔖_w and 𝔊_w, computed from the pipe dream expansions.
#[derive(Debug, Clone)]
pub struct Supports {
    pub schubert: LatticePointSet,
    pub grothendieck: LatticePointSet,
}

pub fn supports_by_enumeration(w: &Permutation) -> Supports {
    let (s, g) = schubert_and_grothendieck(w);
    Supports { schubert: s.support(), grothendieck: g.support() }
}

/// The weight of the upward closure of a diagram, as a sum of fundamental weights.
pub fn closure_weight(d: &Diagram) -> ExponentVector {
    d.upward_closure().row_weight()
}

/// `Σ_j` of the given per-column point sets of a diagram.
fn column_sumset(
    d: &Diagram,
    per_column: fn(&BTreeSet<usize>, usize) -> Result<LatticePointSet>,
) -> LatticePointSet {
    let sets: Vec<LatticePointSet> = d
        .columns()
        .iter()
        .map(|col| per_column(col, d.n_rows()).expect("columns lie in [n_rows]"))
        .collect();
    if sets.is_empty() {
        return LatticePointSet::origin(d.n_rows());
    }
    minkowski_sumset(&sets).expect("columns share a dimension")
}

/// `Σ_j` base points of the Schubert matroids of the columns.
pub fn column_base_sumset(d: &Diagram) -> LatticePointSet {
    column_sumset(d, schubert_matroid_bases)
}

/// `Σ_j` spanning-set points of the Schubert matroids of the columns.
pub fn column_spanning_sumset(d: &Diagram) -> LatticePointSet {
    column_sumset(d, schubert_spanning_sets)
}

/// Both sides of the fireworks support formula against enumeration.
#[derive(Debug, Clone, Serialize)]
pub struct MainSupportCheck {
    /// supp(𝔊_w) against `⋃_{α ∈ supp(𝔖_w)} [α, wt(D̄(w))]`.
    pub interval: Report,
    /// supp(𝔊_w) against the sumset of column spanning-set points.
    pub column: Report,
}

impl MainSupportCheck {
    pub fn ok(&self) -> bool {
        self.interval.ok && self.column.ok
    }
}

pub fn check_main_support(w: &Permutation) -> Result<MainSupportCheck> {
    let top = max_weight_formula(w)?;
    let supports = supports_by_enumeration(w);
    let by_interval = interval_union(&supports.schubert, &top)?;
    let by_columns = column_spanning_sumset(&rothe_diagram(w));
    Ok(MainSupportCheck {
        interval: Report::equality("main-support/interval", w.to_string(), &supports.grothendieck, &by_interval),
        column: Report::equality("main-support/column", w.to_string(), &supports.grothendieck, &by_columns),
    })
}

/// supp(𝔖_w) against the column base sumset of D(w).
pub fn check_schub_support(w: &Permutation) -> Report {
    let supports = supports_by_enumeration(w);
    let sumset = column_base_sumset(&rothe_diagram(w));
    Report::equality("schub-support", w.to_string(), &supports.schubert, &sumset)
}

/// M-convexity of the homogenized support of 𝔊_w, homogenized at |D̄(w)|.
pub fn check_m_convex(w: &Permutation) -> Result<(Report, Option<ExchangeWitness>)> {
    let top = max_weight_formula(w)?;
    let supports = supports_by_enumeration(w);
    let homogenized = homogenize_support(&supports.grothendieck, top.degree())?;
    let witness = m_convex_violation(&homogenized);
    let report = if witness.is_none() {
        Report::pass("m-convex", w.to_string())
    } else {
        Report::fail("m-convex", w.to_string())
    };
    Ok((report, witness))
}

/// Column spanning sumset against the interval union over the column base sumset.
pub fn check_psp_formula(d: &Diagram) -> Report {
    let spanning = column_spanning_sumset(d);
    let bases = column_base_sumset(d);
    let by_interval = interval_union(&bases, &closure_weight(d)).expect("bases lie below the closure weight");
    let instance = serde_json::to_string(d).expect("diagram serializes");
    Report::equality("psp-formula", instance, &spanning, &by_interval)
}

/// For `A ⊆ B ⊆ [n]` with equal maxima: spanning points of B lie among those of A.
pub fn check_psp_inclusion(a: &BTreeSet<usize>, b: &BTreeSet<usize>, n: usize) -> Result<bool> {
    if a.is_empty() || !a.is_subset(b) || a.last() != b.last() {
        return Err(Error::Precondition(format!(
            "need nonempty A ⊆ B with max(A) = max(B), got A={a:?}, B={b:?}"
        )));
    }
    let span_a = schubert_spanning_sets(a, n)?;
    let span_b = schubert_spanning_sets(b, n)?;
    Ok(span_b.is_subset(&span_a))
}

/// supp(𝔊_w) ⊆ supp(𝔊_{π(w)}).
pub fn check_layered_domination(w: &Permutation) -> Result<Report> {
    let layered = pi_of(w)?;
    let lhs = supports_by_enumeration(w).grothendieck;
    let rhs = supports_by_enumeration(&layered).grothendieck;
    Ok(Report::inclusion("layered", format!("{w} vs {layered}"), &lhs, &rhs))
}

/// Every point of supp(𝔊_w) dominates some point of supp(𝔖_w).
pub fn check_groth_lower_bounded(w: &Permutation) -> Report {
    let s = supports_by_enumeration(w);
    let bad: Vec<ExponentVector> = s
        .grothendieck
        .iter()
        .filter(|beta| !s.schubert.iter().any(|alpha| alpha.le(beta)))
        .cloned()
        .collect();
    Report {
        claim: "groth-lower-bounded".into(),
        instance: w.to_string(),
        ok: bad.is_empty(),
        lhs_minus_rhs: bad,
        rhs_minus_lhs: vec![],
    }
}

/// When 𝔊_w^top has more than one term, supp(𝔊_w) is a proper subset of the
/// column spanning sumset. Returns `None` when the top component is a monomial.
pub fn check_strict_column_inclusion(w: &Permutation) -> Option<Report> {
    let (_, g) = schubert_and_grothendieck(w);
    if g.top_component().num_terms() <= 1 {
        return None;
    }
    let lhs = g.support();
    let rhs = column_spanning_sumset(&rothe_diagram(w));
    let mut report = Report::inclusion("strict-column-inclusion", w.to_string(), &lhs, &rhs);
    report.ok = report.ok && !report.rhs_minus_lhs.is_empty();
    Some(report)
}
