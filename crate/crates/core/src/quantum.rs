//! Stabilizer code parameters from self-orthogonal QC codes.

use std::fmt;

use serde::Serialize;

use crate::cyclic::{Distance, DistanceOptions, Method};
use crate::error::{Error, Result};
use crate::linalg::RowSpace;
use crate::qc::{
    check_self_orth_condition, d_q_bound, d_qe_bound, h_admissible, verify_orthogonality, Branch, DualForm, QcBound,
    QcCode,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuantumParams {
    pub n: usize,
    pub k: usize,
    /// None when h is not admissible and no bound applies.
    pub d_lower: Option<Distance>,
    /// Distance quoted from elsewhere, kept apart from anything certified.
    pub d_claim: Option<u64>,
    pub q: u64,
    pub form: DualForm,
    pub d_method: Option<Method>,
    /// One entry per bound term: "label: lower..upper (method)".
    pub provenance: Vec<String>,
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d_lower {
            Some(d) => write!(f, "[[{}, {}, >={}]]_{}", self.n, self.k, d, self.q),
            None => write!(f, "[[{}, {}, ?]]_{}", self.n, self.k, self.q),
        }
    }
}

/// What [`derive_params`] established along the way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Derivation {
    pub params: QuantumParams,
    pub branch: Option<Branch>,
    pub bound: Option<QcBound>,
}

/// Parameters of the stabilizer code built from Q under the form. Both the
/// divisibility condition and the linear-algebra check must pass.
pub fn derive_params(q: &QcCode, form: DualForm, opts: &DistanceOptions) -> Result<Derivation> {
    let cond = check_self_orth_condition(q, form);
    if !cond.holds {
        return Err(Error::NotSelfOrthogonal(format!(
            "{form} divisibility condition fails for {q}"
        )));
    }
    let oracle = verify_orthogonality(q, form)?;
    if !oracle.holds() {
        return Err(Error::NotSelfOrthogonal(format!("{form} rank check fails for {q}")));
    }
    let n = q.n();
    let degs = q.f().deg() + q.g().deg();
    let (len, k, alphabet) = match form {
        DualForm::Symplectic => (n, n - degs, q.field().order()),
        DualForm::Euclidean => (2 * n, 2 * n - 2 * degs, q.field().order()),
        DualForm::Hermitian => (2 * n, 2 * n - 2 * degs, q.hermitian_q()?),
    };
    let bound = if h_admissible(q.h(), n) {
        Some(match form {
            DualForm::Symplectic => d_q_bound(q, opts)?,
            _ => d_qe_bound(q, opts)?,
        })
    } else {
        None
    };
    let provenance = bound
        .iter()
        .flat_map(|b| &b.terms)
        .map(|t| {
            let methods: Vec<&str> = t.methods.iter().map(|m| m.label()).collect();
            format!("{}: {}..{} ({})", t.label, t.lower, t.upper, methods.join(", "))
        })
        .collect();
    Ok(Derivation {
        params: QuantumParams {
            n: len,
            k,
            d_lower: bound.as_ref().map(|b| b.value.lower),
            d_claim: None,
            q: alphabet,
            form,
            d_method: bound.as_ref().map(|b| b.value.method),
            provenance,
        },
        branch: cond.branch,
        bound,
    })
}

/// [[n, dim C1 - dim C2, min(w1, w2)]] for a nested pair C2 in C1, with w1
/// the weight of C1 \ C2 and w2 that of C2^perp \ C1^perp.
pub fn css_generic(
    c1_dim: usize,
    c2_dim: usize,
    n: usize,
    w1: Distance,
    w2: Distance,
    q: u64,
) -> Result<QuantumParams> {
    if c2_dim > c1_dim || c1_dim > n {
        return Err(Error::NotNested);
    }
    if c1_dim == c2_dim {
        return Err(Error::ZeroLogical);
    }
    Ok(QuantumParams {
        n,
        k: c1_dim - c2_dim,
        d_lower: Some(w1.min(w2)),
        d_claim: None,
        q,
        form: DualForm::Euclidean,
        d_method: None,
        provenance: Vec::new(),
    })
}

/// [`css_generic`] after checking C2 is inside C1 by rank.
pub fn css_from_spaces(c1: &RowSpace, c2: &RowSpace, w1: Distance, w2: Distance, q: u64) -> Result<QuantumParams> {
    if c1.cols() != c2.cols() || !c1.contains_space(c2) {
        return Err(Error::NotNested);
    }
    css_generic(c1.rank(), c2.rank(), c1.cols(), w1, w2, q)
}
