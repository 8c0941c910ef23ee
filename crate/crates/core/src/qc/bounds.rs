//! Lower bounds on the symplectic and Hamming weights of Q(f, g, h), and
//! exact weights by enumeration at small scale.

use std::collections::HashMap;

use serde::Serialize;

use super::{form_row, h_admissible, DualForm, QcCode};
use crate::cyclic::{
    fold_codewords, min_distance, CyclicCode, Distance, DistanceBound, DistanceOptions, Method, Strategy,
};
use crate::error::{Error, Result};
use crate::linalg::dot;
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundTerm {
    pub label: String,
    /// Generators of the cyclic codes the term is built from.
    pub generators: Vec<String>,
    pub lower: Distance,
    pub upper: Distance,
    pub methods: Vec<Method>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QcBound {
    /// The bound expression evaluated with every cyclic distance replaced
    /// by its certified lower (resp. upper) bound.
    pub value: DistanceBound,
    pub terms: Vec<BoundTerm>,
}

struct DistanceCache<'a> {
    n: usize,
    opts: &'a DistanceOptions,
    seen: HashMap<Vec<u32>, DistanceBound>,
}

impl DistanceCache<'_> {
    fn get(&mut self, gen: &Poly) -> Result<DistanceBound> {
        if let Some(b) = self.seen.get(gen.coeffs()) {
            return Ok(*b);
        }
        let b = min_distance(&CyclicCode::new(gen, self.n)?, Strategy::Auto, self.opts)?;
        self.seen.insert(gen.coeffs().to_vec(), b);
        Ok(b)
    }
}

/// The least certain of the methods behind the terms.
fn weakest(methods: &[Method]) -> Method {
    let rank = |m: &Method| match m {
        Method::ZeroCode => 0,
        Method::ExactEnumeration => 1,
        Method::DualEnumeration => 2,
        Method::Bch => 3,
        Method::MonteCarlo => 3,
        Method::BchMonteCarlo => 4,
    };
    let worst = methods
        .iter()
        .max_by_key(|m| rank(m))
        .copied()
        .unwrap_or(Method::ZeroCode);
    let has = |m: Method| methods.contains(&m);
    if rank(&worst) == 3 && has(Method::Bch) && has(Method::MonteCarlo) {
        Method::BchMonteCarlo
    } else {
        worst
    }
}

fn bound(q: &QcCode, opts: &DistanceOptions, symplectic: bool) -> Result<QcBound> {
    if !h_admissible(q.h(), q.n()) {
        return Err(Error::InadmissibleH);
    }
    let field = q.field();
    let n = q.n();
    let (f, g, h) = (q.f(), q.g(), q.h());
    let xn1 = Poly::xn_minus_1(field, n);
    let mut cache = DistanceCache {
        n,
        opts,
        seen: HashMap::new(),
    };

    let t2 = xn1.exact_div(&xn1.gcd(h)?)?;
    let g_over = g.exact_div(&g.gcd(h)?)?;
    let t3 = f.lcm(&g_over)?;
    // gcd on the unreduced product hf
    let hf_g = h.mul(f).gcd(g)?;
    let f_g = f.gcd(g)?;

    let mut terms = Vec::new();
    for (label, gen) in [
        ("d(g)", g.clone()),
        ("d((x^n-1)/gcd(x^n-1,h))", t2),
        ("d(lcm(f,g/gcd(g,h)))", t3),
    ] {
        let b = cache.get(&gen)?;
        terms.push(BoundTerm {
            label: label.to_string(),
            generators: vec![gen.to_string()],
            lower: b.lower,
            upper: b.upper,
            methods: vec![b.method],
        });
    }
    let bf = cache.get(f)?;
    let bhfg = cache.get(&hf_g)?;
    let qo = field.order();
    let (label, lower, upper, gens, methods) = if symplectic {
        let bfg = cache.get(&f_g)?;
        let combine = |a: Distance, b: Distance, c: Distance| a.add(b).add(c.scale(qo - 1)).div_ceil(qo);
        (
            "ceil((d(f)+d(gcd(hf,g))+(q-1)d(gcd(f,g)))/q)",
            combine(bf.lower, bhfg.lower, bfg.lower),
            combine(bf.upper, bhfg.upper, bfg.upper),
            vec![f.to_string(), hf_g.to_string(), f_g.to_string()],
            vec![bf.method, bhfg.method, bfg.method],
        )
    } else {
        (
            "d(f)+d(gcd(hf,g))",
            bf.lower.add(bhfg.lower),
            bf.upper.add(bhfg.upper),
            vec![f.to_string(), hf_g.to_string()],
            vec![bf.method, bhfg.method],
        )
    };
    terms.push(BoundTerm {
        label: label.to_string(),
        generators: gens,
        lower,
        upper,
        methods,
    });

    let lower = terms.iter().map(|t| t.lower).min().expect("four terms");
    let upper = terms.iter().map(|t| t.upper).min().expect("four terms");
    let all: Vec<Method> = terms.iter().flat_map(|t| t.methods.clone()).collect();
    Ok(QcBound {
        value: DistanceBound {
            lower,
            upper,
            method: weakest(&all),
        },
        terms,
    })
}

/// Four-term lower bound on the symplectic weight of Q.
pub fn d_q_bound(q: &QcCode, opts: &DistanceOptions) -> Result<QcBound> {
    bound(q, opts, true)
}

/// Four-term lower bound on the Hamming weight of Q; the fourth term is
/// the plain sum. For the Hermitian construction call it on the code over
/// GF(q^2).
pub fn d_qe_bound(q: &QcCode, opts: &DistanceOptions) -> Result<QcBound> {
    bound(q, opts, false)
}

/// Minimum weights of Q by full enumeration: symplectic weight for the
/// symplectic form, Hamming weight otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QcWeights {
    /// Over Q minus {0}.
    pub nonzero: Distance,
    /// Over Q minus its dual under the form.
    pub outside_dual: Distance,
}

pub fn exact_qc_weights(q: &QcCode, form: DualForm, opts: &DistanceOptions) -> Result<QcWeights> {
    let field = q.field();
    let basis = q.row_space().basis().to_vec();
    let k = basis.len();
    let need = crate::cyclic::space_size(field.order(), k);
    if need > opts.budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: need,
            budget: opts.budget,
        });
    }
    let len = 2 * q.n();
    // append the syndrome <b_i, c>_form for every basis row b_i; it is
    // linear in c, so it rides along the enumeration
    let transformed = basis
        .iter()
        .map(|b| form_row(field, b, form))
        .collect::<Result<Vec<_>>>()?;
    let rows: Vec<Vec<u32>> = basis
        .iter()
        .map(|c| {
            let mut r = c.clone();
            r.extend(transformed.iter().map(|t| dot(field, t, c)));
            r
        })
        .collect();
    let symplectic = form == DualForm::Symplectic;
    let n = q.n();
    let (nonzero, outside) = fold_codewords(
        field,
        &rows,
        opts.workers,
        || (u64::MAX, u64::MAX),
        |acc, w| {
            let word = &w[..len];
            let wt = if symplectic {
                (0..n).filter(|&i| word[i] != 0 || word[n + i] != 0).count()
            } else {
                word.iter().filter(|&&c| c != 0).count()
            } as u64;
            if wt == 0 {
                return;
            }
            acc.0 = acc.0.min(wt);
            if w[len..].iter().any(|&s| s != 0) {
                acc.1 = acc.1.min(wt);
            }
        },
        |a, b| (a.0.min(b.0), a.1.min(b.1)),
    );
    let wrap = |d: u64| {
        if d == u64::MAX {
            Distance::Infinite
        } else {
            Distance::Finite(d)
        }
    };
    Ok(QcWeights {
        nonzero: wrap(nonzero),
        outside_dual: wrap(outside),
    })
}

/// Minimum weight of Q outside its dual: symplectic weight for the
/// symplectic form, Hamming weight for the others.
pub fn exact_qc_distance(q: &QcCode, form: DualForm, opts: &DistanceOptions) -> Result<DistanceBound> {
    let w = exact_qc_weights(q, form, opts)?;
    Ok(DistanceBound {
        lower: w.outside_dual,
        upper: w.outside_dual,
        method: Method::ExactEnumeration,
    })
}
