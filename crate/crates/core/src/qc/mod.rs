//! Index-2 quasi-cyclic codes Q(f, g, h): the R-submodule of R^2,
//! R = F[x]/(x^n - 1), generated by ([f], [hf]) and (0, [g]).

mod admissible;
mod bounds;
mod condition;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{gcd_u64, Field};
use crate::linalg::RowSpace;
use crate::poly::{check_polynomial, dual_generator, q_power_map, reciprocal_bar, Poly, Residue};

pub use admissible::{h_admissible, h_admissible_by_gcd, h_shortcut_tests, linear_h_admissible, trace_h, Shortcut};
pub use bounds::{d_q_bound, d_qe_bound, exact_qc_distance, exact_qc_weights, BoundTerm, QcBound, QcWeights};
pub use condition::{check_self_orth_condition, verify_orthogonality, Branch, ConditionReport, OrthogonalityReport};

/// Largest field for which the admissibility scan over nonzero constants
/// is run.
pub const MAX_QC_FIELD_ORDER: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DualForm {
    Symplectic,
    Euclidean,
    Hermitian,
}

impl DualForm {
    pub const ALL: [DualForm; 3] = [DualForm::Symplectic, DualForm::Euclidean, DualForm::Hermitian];

    pub fn label(self) -> &'static str {
        match self {
            DualForm::Symplectic => "symplectic",
            DualForm::Euclidean => "euclidean",
            DualForm::Hermitian => "hermitian",
        }
    }
}

impl fmt::Display for DualForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for DualForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<DualForm> {
        match s.to_ascii_lowercase().as_str() {
            "symplectic" => Ok(DualForm::Symplectic),
            "euclidean" => Ok(DualForm::Euclidean),
            "hermitian" => Ok(DualForm::Hermitian),
            _ => Err(Error::Parse(format!("unknown form {s:?}"))),
        }
    }
}

/// A generator (a(x), b(x)) of an R-submodule of R^2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorPair {
    pub first: Residue,
    pub second: Residue,
}

impl GeneratorPair {
    pub fn new(first: &Poly, second: &Poly, n: usize) -> GeneratorPair {
        GeneratorPair {
            first: Residue::from_poly(first, n),
            second: Residue::from_poly(second, n),
        }
    }

    /// (x^i a, x^i b) as one vector of length 2n.
    pub fn shifted_row(&self, i: usize) -> Vec<u32> {
        let mut v = self.first.shift_by(i).to_vector();
        v.extend(self.second.shift_by(i).to_vector());
        v
    }
}

/// Row space of the submodule spanned by the pairs: all n shifts of each.
pub fn qc_span(field: &Field, n: usize, pairs: &[GeneratorPair]) -> RowSpace {
    let mut s = RowSpace::new(field, 2 * n);
    for p in pairs {
        for i in 0..n {
            s.insert(&p.shifted_row(i));
        }
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QcCode {
    n: usize,
    field: Field,
    f: Poly,
    g: Poly,
    h: Poly,
}

impl QcCode {
    /// Validates f, g as monic proper divisors of x^n - 1 and deg h < n.
    pub fn new(field: &Field, n: usize, f: &Poly, g: &Poly, h: &Poly) -> Result<QcCode> {
        let q = field.order();
        if n == 0 || gcd_u64(n as u64, q) != 1 {
            return Err(Error::NotCoprime { n: n as u64, q });
        }
        if q > MAX_QC_FIELD_ORDER {
            return Err(Error::PreconditionViolated(format!(
                "field order {q} exceeds {MAX_QC_FIELD_ORDER}"
            )));
        }
        for p in [f, g, h] {
            if p.field() != field {
                return Err(Error::MixedFields);
            }
        }
        for p in [f, g] {
            check_polynomial(p, n)?;
            if p.deg() >= n {
                return Err(Error::DegreeTooLarge { what: p.to_string(), n });
            }
        }
        if h.degree().is_some_and(|d| d >= n) {
            return Err(Error::DegreeTooLarge { what: h.to_string(), n });
        }
        Ok(QcCode {
            n,
            field: field.clone(),
            f: f.clone(),
            g: g.clone(),
            h: h.clone(),
        })
    }

    /// Builds the code generated by ([f], [hf]) and (0, [g]) when g need not
    /// divide x^n - 1: the ideal of g equals that of gcd(g, x^n - 1), so g
    /// is replaced by that gcd. Returns the code and whether g changed.
    pub fn normalized(field: &Field, n: usize, f: &Poly, g: &Poly, h: &Poly) -> Result<(QcCode, bool)> {
        let xn1 = Poly::xn_minus_1(field, n);
        let g_eff = g.gcd(&xn1)?;
        let changed = g_eff != *g;
        Ok((QcCode::new(field, n, f, &g_eff, h)?, changed))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> usize {
        2 * self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn g(&self) -> &Poly {
        &self.g
    }

    pub fn h(&self) -> &Poly {
        &self.h
    }

    pub fn dimension(&self) -> usize {
        2 * self.n - self.f.deg() - self.g.deg()
    }

    pub fn generator_pairs(&self) -> [GeneratorPair; 2] {
        let z = Poly::zero(&self.field);
        [
            GeneratorPair::new(&self.f, &self.h.mul(&self.f), self.n),
            GeneratorPair::new(&z, &self.g, self.n),
        ]
    }

    /// Rows (x^i f, x^i hf) for i < n - deg f, then (0, x^j g) for
    /// j < n - deg g.
    pub fn generator_matrix(&self) -> Vec<Vec<u32>> {
        let [a, b] = self.generator_pairs();
        let mut rows: Vec<Vec<u32>> = (0..self.n - self.f.deg()).map(|i| a.shifted_row(i)).collect();
        rows.extend((0..self.n - self.g.deg()).map(|j| b.shifted_row(j)));
        rows
    }

    pub fn row_space(&self) -> RowSpace {
        RowSpace::from_rows(&self.field, 2 * self.n, &self.generator_matrix())
    }

    /// Alphabet size q for which the Hermitian form x -> x^q applies.
    pub fn hermitian_q(&self) -> Result<u64> {
        self.field.sqrt_order().ok_or(Error::WrongFieldForHermitian)
    }

    /// The two generator pairs of the dual code under the form.
    pub fn dual_generators(&self, form: DualForm) -> Result<(GeneratorPair, GeneratorPair)> {
        let n = self.n;
        let z = Poly::zero(&self.field);
        let (f, g, h) = match form {
            DualForm::Hermitian => {
                let q = self.hermitian_q()?;
                (
                    q_power_map(&self.f, q),
                    q_power_map(&self.g, q),
                    q_power_map(&self.h, q),
                )
            }
            _ => (self.f.clone(), self.g.clone(), self.h.clone()),
        };
        let f_perp = dual_generator(&f, n)?;
        let g_perp = dual_generator(&g, n)?;
        let hbar = reciprocal_bar(&h, n)?;
        let hbar_g = hbar.rep().mul(&g_perp);
        Ok(match form {
            DualForm::Symplectic => (
                GeneratorPair::new(&g_perp, &hbar_g, n),
                GeneratorPair::new(&z, &f_perp, n),
            ),
            DualForm::Euclidean | DualForm::Hermitian => (
                GeneratorPair::new(&hbar_g.neg(), &g_perp, n),
                GeneratorPair::new(&f_perp, &z, n),
            ),
        })
    }

    pub fn dual_span(&self, form: DualForm) -> Result<RowSpace> {
        let (a, b) = self.dual_generators(form)?;
        Ok(qc_span(&self.field, self.n, &[a, b]))
    }
}

impl fmt::Display for QcCode {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            out,
            "Q(f = {}, g = {}, h = {}) over {}, n = {}",
            self.f, self.g, self.h, self.field, self.n
        )
    }
}

/// The named form on vectors over the field. Symplectic needs even length.
pub fn inner_product(field: &Field, u: &[u32], v: &[u32], form: DualForm) -> Result<u32> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    match form {
        DualForm::Euclidean => Ok(crate::linalg::dot(field, u, v)),
        DualForm::Hermitian => {
            let q = field.sqrt_order().ok_or(Error::WrongFieldForHermitian)?;
            Ok(u.iter()
                .zip(v)
                .fold(0, |acc, (&a, &b)| field.add(acc, field.mul(field.pow(a, q), b))))
        }
        DualForm::Symplectic => {
            if !u.len().is_multiple_of(2) {
                return Err(Error::OddLength(u.len()));
            }
            let n = u.len() / 2;
            let mut acc = 0;
            for i in 0..n {
                acc = field.add(acc, field.mul(u[i], v[n + i]));
                acc = field.sub(acc, field.mul(u[n + i], v[i]));
            }
            Ok(acc)
        }
    }
}

/// Number of i with (v_i, v_{n+i}) != (0, 0).
pub fn symplectic_weight(v: &[u32]) -> Result<usize> {
    if !v.len().is_multiple_of(2) {
        return Err(Error::OddLength(v.len()));
    }
    let n = v.len() / 2;
    Ok((0..n).filter(|&i| v[i] != 0 || v[n + i] != 0).count())
}

/// The vector w with <u, v>_form = w . v (standard dot product) for all v.
pub(crate) fn form_row(field: &Field, u: &[u32], form: DualForm) -> Result<Vec<u32>> {
    match form {
        DualForm::Euclidean => Ok(u.to_vec()),
        DualForm::Hermitian => {
            let q = field.sqrt_order().ok_or(Error::WrongFieldForHermitian)?;
            Ok(u.iter().map(|&a| field.pow(a, q)).collect())
        }
        DualForm::Symplectic => {
            if !u.len().is_multiple_of(2) {
                return Err(Error::OddLength(u.len()));
            }
            let n = u.len() / 2;
            let mut w: Vec<u32> = u[n..].iter().map(|&a| field.neg(a)).collect();
            w.extend_from_slice(&u[..n]);
            Ok(w)
        }
    }
}

#[cfg(test)]
mod tests;
