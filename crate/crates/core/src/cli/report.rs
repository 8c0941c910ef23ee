use std::time::Instant;

use serde::Serialize;

use super::config::Settings;
use crate::cyclic::{space_size, Distance, DistanceOptions, Method};
use crate::error::Result;
use crate::field::Field;
use crate::poly::Poly;
use crate::qc::{
    check_self_orth_condition, exact_qc_distance, h_admissible, verify_orthogonality, BoundTerm, Branch, DualForm,
    OrthogonalityReport, QcCode,
};
use crate::quantum::derive_params;

#[derive(Clone, Debug, Serialize)]
pub struct Timings {
    pub total_ms: f64,
}

/// Everything established about one code under one form.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub input: Settings,
    /// Qudit count of the quantum code.
    pub n: usize,
    /// Alphabet of the quantum code.
    pub q: u64,
    pub form: DualForm,
    pub field_order: u64,
    pub f: String,
    pub g: String,
    pub h: String,
    /// Dimension of the classical code Q.
    pub dim: usize,
    pub certified: bool,
    pub k: Option<usize>,
    pub d_lower: Option<Distance>,
    pub d_upper: Option<Distance>,
    pub d_method: Option<Method>,
    /// Minimum weight outside the dual, when small enough to enumerate.
    pub d_exact: Option<Distance>,
    pub params: Option<String>,
    pub condition_holds: bool,
    pub condition_branch: Option<Branch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub literal_branch_i: Option<bool>,
    pub admissible: bool,
    pub oracle: OrthogonalityReport,
    pub terms: Vec<BoundTerm>,
    pub timings: Timings,
}

impl Report {
    /// (n, k, d_lower), the search dedup key.
    pub fn key(&self) -> (usize, Option<usize>, Option<Distance>) {
        (self.n, self.k, self.d_lower)
    }
}

pub fn evaluate(
    settings: &Settings,
    field: &Field,
    f: &Poly,
    g: &Poly,
    h: &Poly,
    form: DualForm,
    opts: &DistanceOptions,
) -> Result<Report> {
    let start = Instant::now();
    let n = settings.n;
    let code = QcCode::new(field, n, f, g, h)?;
    let alphabet = match form {
        DualForm::Hermitian => code.hermitian_q()?,
        _ => field.order(),
    };
    let cond = check_self_orth_condition(&code, form);
    let oracle = verify_orthogonality(&code, form)?;
    let certified = cond.holds && oracle.holds();
    let derived = if certified {
        Some(derive_params(&code, form, opts)?)
    } else {
        None
    };
    let d_exact = if certified && space_size(field.order(), code.dimension()) <= opts.budget as u128 {
        Some(exact_qc_distance(&code, form, opts)?.lower)
    } else {
        None
    };
    let bound = derived.as_ref().and_then(|d| d.bound.as_ref());
    let qn = match form {
        DualForm::Symplectic => n,
        _ => 2 * n,
    };
    Ok(Report {
        input: settings.clone(),
        n: qn,
        q: alphabet,
        form,
        field_order: field.order(),
        f: f.to_string(),
        g: g.to_string(),
        h: h.to_string(),
        dim: code.dimension(),
        certified,
        k: derived.as_ref().map(|d| d.params.k),
        d_lower: bound.map(|b| b.value.lower),
        d_upper: bound.map(|b| b.value.upper),
        d_method: bound.map(|b| b.value.method),
        d_exact,
        params: derived.as_ref().map(|d| d.params.to_string()),
        condition_holds: cond.holds,
        condition_branch: cond.branch,
        literal_branch_i: cond.literal_branch_i,
        admissible: h_admissible(h, n),
        oracle,
        terms: bound.map(|b| b.terms.clone()).unwrap_or_default(),
        timings: Timings {
            total_ms: start.elapsed().as_secs_f64() * 1e3,
        },
    })
}
