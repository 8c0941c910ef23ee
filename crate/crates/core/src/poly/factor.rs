//! Factorization of square-free polynomials over GF(q): distinct-degree
//! splitting followed by Cantor-Zassenhaus equal-degree splitting.
//!
//! Property tests need every divisor of x^n - 1 even when the splitting
//! field is far too large to hold (q = 3, n = 31 needs GF(3^30)), so this
//! works entirely in GF(q)[x].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Poly;
use crate::error::{Error, Result};
use crate::field::{gcd_u64, Field};

const SPLIT_SEED: u64 = 0x005e_ed0f_c0de;
const MAX_DIVISOR_FACTORS: usize = 24;

/// Monic irreducible factors of a monic square-free polynomial, sorted
/// by degree and then by coefficient code, highest degree first.
pub fn irreducible_factors(f: &Poly) -> Result<Vec<Poly>> {
    let field = f.field().clone();
    if f.is_zero() {
        return Err(Error::DivideByZero);
    }
    let f = f.monic();
    let q = field.order() as u128;
    let x = Poly::x(&field);
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let mut out = Vec::new();
    let mut rest = f;
    let mut h = x.clone();
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = h.pow_mod(q, &rest)?;
        let g = h.sub(&x).gcd(&rest)?;
        if !g.is_one() {
            equal_degree(&g, d, &mut rng, &mut out)?;
            rest = rest.exact_div(&g)?;
            h = h.rem(&rest)?;
        }
        d += 1;
    }
    if rest.deg() > 0 {
        out.push(rest);
    }
    out.sort_by(|a, b| {
        a.deg()
            .cmp(&b.deg())
            .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
    });
    Ok(out)
}

fn equal_degree(g: &Poly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) -> Result<()> {
    if g.deg() == d {
        out.push(g.clone());
        return Ok(());
    }
    let field = g.field().clone();
    let q = field.order();
    let one = Poly::one(&field);
    loop {
        let a = Poly::new(&field, (0..g.deg()).map(|_| rng.gen_range(0..q) as u32).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = if q % 2 == 1 {
            // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q - 1)/2)
            let mut t = a.rem(g)?;
            let mut norm = t.clone();
            for _ in 1..d {
                t = t.pow_mod(q as u128, g)?;
                norm = norm.mul(&t).rem(g)?;
            }
            norm.pow_mod(((q - 1) / 2) as u128, g)?.sub(&one)
        } else {
            // absolute trace a + a^2 + ... + a^(2^(kd - 1)), q = 2^k
            let steps = field.r() as usize * d;
            let mut t = a.rem(g)?;
            let mut tr = t.clone();
            for _ in 1..steps {
                t = t.mul(&t).rem(g)?;
                tr = tr.add(&t);
            }
            tr
        };
        if b.is_zero() {
            continue;
        }
        let u = b.gcd(g)?;
        if u.deg() > 0 && u.deg() < g.deg() {
            let w = g.exact_div(&u)?;
            equal_degree(&u, d, rng, out)?;
            return equal_degree(&w, d, rng, out);
        }
    }
}

/// Irreducible factors of x^n - 1 over the given field; requires
/// gcd(n, q) = 1 so that x^n - 1 is square-free.
pub fn irreducible_factors_of_xn_minus_1(field: &Field, n: usize) -> Result<Vec<Poly>> {
    let q = field.order();
    if n == 0 || gcd_u64(n as u64, q) != 1 {
        return Err(Error::NotCoprime { n: n as u64, q });
    }
    irreducible_factors(&Poly::xn_minus_1(field, n))
}

/// Every monic divisor of x^n - 1, indexed by subsets of the sorted
/// irreducible factors: bit i of the index selects factor i.
pub fn divisors_of_xn_minus_1(field: &Field, n: usize) -> Result<Vec<Poly>> {
    let factors = irreducible_factors_of_xn_minus_1(field, n)?;
    if factors.len() > MAX_DIVISOR_FACTORS {
        return Err(Error::BudgetExceeded {
            needed: 1u128 << factors.len(),
            budget: 1 << MAX_DIVISOR_FACTORS,
        });
    }
    let mut out = vec![Poly::one(field)];
    for fac in &factors {
        let more: Vec<Poly> = out.iter().map(|d| d.mul(fac)).collect();
        out.extend(more);
    }
    Ok(out)
}
