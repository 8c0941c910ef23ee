//! Batch search over coset-generated (f, g) pairs.

use std::collections::HashSet;

use rayon::prelude::*;

use super::config::{Selector, Settings};
use super::report::{evaluate, Report};
use crate::cyclic::{coset_generator_poly, cosets_from_reps, cyclotomic_cosets};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Largest coset pool a search accepts (2^MAX_POOL subsets per side).
pub const MAX_POOL: usize = 16;
/// Most (f, g) pairs a single search evaluates.
pub const MAX_CANDIDATES: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub f_reps: Vec<usize>,
    pub g_reps: Vec<usize>,
}

fn pool(reps: &Option<Vec<usize>>, n: usize, q: u64) -> Result<Vec<Vec<usize>>> {
    match reps {
        Some(r) => cosets_from_reps(r, n, q),
        None => cyclotomic_cosets(n, q),
    }
}

fn subsets(pool: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..1 << pool.len())
        .filter_map(|mask| {
            let chosen: Vec<&Vec<usize>> = pool
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, c)| c)
                .collect();
            let size: usize = chosen.iter().map(|c| c.len()).sum();
            (size < n).then(|| chosen.iter().map(|c| c[0]).collect())
        })
        .collect();
    out.sort();
    out
}

/// Candidates in lexicographic order of (g representatives, f
/// representatives). Unless all pairs are requested, f's cosets are a
/// subset of g's.
pub fn candidates(settings: &Settings) -> Result<Vec<Candidate>> {
    let q = settings.field()?.order();
    let n = settings.n;
    let g_pool = pool(&settings.g_pool, n, q)?;
    let f_pool = match &settings.f_pool {
        Some(_) => pool(&settings.f_pool, n, q)?,
        None => g_pool.clone(),
    };
    if settings.g_pool.as_ref().is_some_and(|r| r.is_empty()) {
        return Ok(Vec::new());
    }
    for p in [&f_pool, &g_pool] {
        if p.len() > MAX_POOL {
            return Err(Error::PreconditionViolated(format!(
                "{} cosets in the search pool, at most {MAX_POOL} allowed; narrow it with --f-cosets/--g-cosets",
                p.len()
            )));
        }
    }
    let gs = subsets(&g_pool, n);
    let fs = subsets(&f_pool, n);
    let mut out = Vec::new();
    for g in &gs {
        for f in &fs {
            if settings.all_pairs || f.iter().all(|r| g.contains(r)) {
                if out.len() == MAX_CANDIDATES {
                    return Err(Error::PreconditionViolated(format!(
                        "more than {MAX_CANDIDATES} (f, g) pairs; narrow the pool with --f-cosets/--g-cosets"
                    )));
                }
                out.push(Candidate {
                    f_reps: f.clone(),
                    g_reps: g.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// Certified reports for every candidate and form, in candidate order,
/// keeping the first report for each (n, k, d_lower).
pub fn search(settings: &Settings) -> Result<Vec<Report>> {
    let field = settings.field()?;
    let n = settings.n;
    let h = settings.h.resolve(&field, n)?;
    let opts = settings.distance_options();
    let cands = candidates(settings)?;
    let poly_of = |reps: &[usize]| -> Result<Poly> {
        let cosets = cosets_from_reps(reps, n, field.order())?;
        coset_generator_poly(n, &field, &cosets)
    };
    let run = || {
        cands
            .par_iter()
            .map(|c| -> Result<Vec<Report>> {
                let f = poly_of(&c.f_reps)?;
                let g = poly_of(&c.g_reps)?;
                let mut local = settings.clone();
                local.f = Selector::Cosets(c.f_reps.clone());
                local.g = Selector::Cosets(c.g_reps.clone());
                local.f_pool = None;
                local.g_pool = None;
                let mut out = Vec::new();
                for &form in &settings.forms {
                    let r = evaluate(&local, &field, &f, &g, &h, form, &opts)?;
                    if r.certified {
                        out.push(r);
                    }
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()
    };
    let per = match settings.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| Error::PreconditionViolated(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    let mut seen = HashSet::new();
    Ok(per.into_iter().flatten().filter(|r| seen.insert(r.key())).collect())
}
