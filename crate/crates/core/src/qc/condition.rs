use serde::Serialize;

use super::{form_row, DualForm, QcCode};
use crate::linalg::{dot, RowSpace};
use crate::poly::{dual_generator, q_power_map, reciprocal_bar, reduce_mod_xn1, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// f | g^perp, g | f^perp and h | hbar, with g | (hbar - h) g^perp.
    I,
    /// f | g | g^perp | f^perp.
    Ii,
    /// The single divisibility chain of the Euclidean or Hermitian case.
    Chain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub form: DualForm,
    pub holds: bool,
    pub branch: Option<Branch>,
    /// Symplectic only: the three divisibilities of branch (i) as stated,
    /// without the extra requirement on (hbar - h) g^perp.
    pub literal_branch_i: Option<bool>,
}

/// Divisibility test for Q^perp being inside Q. Sufficient, never claimed
/// necessary.
///
/// Branch (i) read literally (f | g^perp, g | f^perp, h | hbar) does not
/// imply containment: for n = 7 over GF(2) with f = 1, g = (x^7-1)/(x-1),
/// h = x + 1 all three hold while (g^perp, hbar g^perp) lies outside Q.
/// The pair lies in Q exactly when, in addition, g divides (hbar - h) g^perp
/// mod x^n - 1, so that is required for branch (i) to count.
pub fn check_self_orth_condition(q: &QcCode, form: DualForm) -> ConditionReport {
    let n = q.n();
    let (f, g, h) = (q.f(), q.g(), q.h());
    match form {
        DualForm::Symplectic => {
            let f_perp = dual_generator(f, n).expect("validated divisor");
            let g_perp = dual_generator(g, n).expect("validated divisor");
            let hbar = reciprocal_bar(h, n).expect("validated degree");
            let literal = f.divides(&g_perp) && g.divides(&f_perp) && h.divides(hbar.rep());
            let twist = reduce_mod_xn1(&hbar.rep().sub(h).mul(&g_perp), n);
            let branch_i = literal && g.divides(&twist);
            let branch_ii = chain(f, g, &g_perp, &f_perp);
            let branch = if branch_ii {
                Some(Branch::Ii)
            } else if branch_i {
                Some(Branch::I)
            } else {
                None
            };
            ConditionReport {
                form,
                holds: branch.is_some(),
                branch,
                literal_branch_i: Some(literal),
            }
        }
        DualForm::Euclidean | DualForm::Hermitian => {
            let (fq, gq) = if form == DualForm::Hermitian {
                match q.hermitian_q() {
                    Ok(s) => (q_power_map(f, s), q_power_map(g, s)),
                    Err(_) => {
                        return ConditionReport {
                            form,
                            holds: false,
                            branch: None,
                            literal_branch_i: None,
                        }
                    }
                }
            } else {
                (f.clone(), g.clone())
            };
            let f_perp = dual_generator(&fq, n).expect("validated divisor");
            let g_perp = dual_generator(&gq, n).expect("validated divisor");
            let holds = chain(f, g, &g_perp, &f_perp);
            ConditionReport {
                form,
                holds,
                branch: holds.then_some(Branch::Chain),
                literal_branch_i: None,
            }
        }
    }
}

fn chain(a: &Poly, b: &Poly, c: &Poly, d: &Poly) -> bool {
    a.divides(b) && b.divides(c) && c.divides(d)
}

/// Independent linear-algebra check of the dual generators and of
/// self-orthogonality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrthogonalityReport {
    pub form: DualForm,
    pub dim: usize,
    /// Rank of the span of the dual generators.
    pub dual_dim: usize,
    /// deg f + deg g.
    pub expected_dual_dim: usize,
    /// Every basis row of Q pairs to zero with every dual basis row.
    pub cross_products_vanish: bool,
    /// The dual span equals the dual computed as a nullspace.
    pub matches_nullspace: bool,
    /// rank([G; D]) = rank(G), i.e. Q^perp lies in Q.
    pub dual_contained: bool,
}

impl OrthogonalityReport {
    pub fn duality_holds(&self) -> bool {
        self.cross_products_vanish && self.dual_dim == self.expected_dual_dim && self.matches_nullspace
    }

    pub fn holds(&self) -> bool {
        self.duality_holds() && self.dual_contained
    }
}

pub fn verify_orthogonality(q: &QcCode, form: DualForm) -> crate::error::Result<OrthogonalityReport> {
    let field = q.field();
    let gspace = q.row_space();
    let dspace = q.dual_span(form)?;
    let transformed: Vec<Vec<u32>> = gspace
        .basis()
        .iter()
        .map(|r| form_row(field, r, form))
        .collect::<crate::error::Result<_>>()?;
    let cross = transformed
        .iter()
        .all(|t| dspace.basis().iter().all(|d| dot(field, t, d) == 0));
    let null = RowSpace::from_rows(
        field,
        2 * q.n(),
        &RowSpace::from_rows(field, 2 * q.n(), &transformed).nullspace(),
    );
    let matches = null.rank() == dspace.rank() && null.contains_space(&dspace);
    Ok(OrthogonalityReport {
        form,
        dim: gspace.rank(),
        dual_dim: dspace.rank(),
        expected_dual_dim: q.f().deg() + q.g().deg(),
        cross_products_vanish: cross,
        matches_nullspace: matches,
        dual_contained: gspace.contains_space(&dspace),
    })
}
