//! Admissibility of h: gcd(h - b, x^n - 1) = 1 for every nonzero constant b.

use crate::error::{Error, Result};
use crate::field::{gcd_u64, multiplicative_order, Embedding, Field};
use crate::linalg::RowSpace;
use crate::poly::{reduce_mod_xn1, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shortcut {
    /// h = x + 1.
    Linear,
    /// h = x^p - x with n = p^m - 1.
    ArtinSchreier,
}

/// Whether gcd(h - b, x^n - 1) = 1 for all nonzero b in the field.
///
/// When the roots of x^n - 1 are all nonzero elements of its splitting
/// field (n = |GF(q^m)| - 1) and h is a linearized polynomial, this is the
/// statement that the image of the GF(p)-linear map h meets GF(q) only in
/// 0, decided by rank. Otherwise each b is checked by a gcd.
pub fn h_admissible(h: &Poly, n: usize) -> bool {
    if let Some(answer) = linearized_admissible(h, n) {
        return answer;
    }
    h_admissible_by_gcd(h, n)
}

/// The definition, one gcd per nonzero constant. x^n is reduced modulo
/// h - b first, so the cost depends on deg h rather than n.
pub fn h_admissible_by_gcd(h: &Poly, n: usize) -> bool {
    let field = h.field();
    let x = Poly::x(field);
    let one = Poly::one(field);
    field.nonzero_elements().all(|b| {
        let u = h.sub(&Poly::constant(field, b));
        if u.deg() == 0 {
            return !u.is_zero();
        }
        let r = x.pow_mod(n as u128, &u).expect("nonzero modulus").sub(&one);
        r.gcd(&u).expect("u is nonzero").is_one()
    })
}

fn linearized_admissible(h: &Poly, n: usize) -> Option<bool> {
    let field = h.field();
    let p = field.p() as u64;
    let q = field.order();
    if h.is_zero() || gcd_u64(n as u64, q) != 1 {
        return None;
    }
    let m = multiplicative_order(q, n as u64).ok()? as u32;
    let big_r = field.r().checked_mul(m)?;
    let order = (p as u128).checked_pow(big_r)?;
    if order != n as u128 + 1 {
        return None;
    }
    // nonzero coefficients must sit at exponents p^j
    let mut terms = Vec::new();
    for (e, &c) in h.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mut j = 0u32;
        let mut pj = 1usize;
        while pj < e {
            pj = pj.checked_mul(p as usize)?;
            j += 1;
        }
        if pj != e {
            return None;
        }
        terms.push((j, c));
    }
    let ext = Field::new(p, big_r).ok()?;
    let emb = Embedding::new(field, &ext).ok()?;
    let lifted: Vec<(u64, u32)> = terms.iter().map(|&(j, c)| (j as u64, emb.embed(c))).collect();
    let apply = |a: u32| {
        lifted
            .iter()
            .fold(0, |acc, &(j, c)| ext.add(acc, ext.mul(c, ext.frobenius(a, j))))
    };
    // coordinates over GF(p) of the image of the basis 1, x, ..., x^(R-1)
    let prime = Field::new(p, 1).ok()?;
    let mut image = RowSpace::new(&prime, big_r as usize);
    let mut x_pow = 1u32;
    let xcode = if big_r == 1 { ext.primitive() } else { p as u32 };
    for _ in 0..big_r {
        image.insert(&ext.coords(apply(x_pow)));
        x_pow = ext.mul(x_pow, xcode);
    }
    let rank_image = image.rank();
    let mut both = image;
    let mut sub_basis = 1u32;
    let sub_x = if field.r() == 1 { 1 } else { p as u32 };
    for _ in 0..field.r() {
        both.insert(&ext.coords(emb.embed(sub_basis)));
        sub_basis = field.mul(sub_basis, sub_x);
    }
    Some(both.rank() == rank_image + field.r() as usize)
}

/// The exact condition for h = x + 1: over odd characteristic b = 2 makes
/// h - b = x - 1, a factor of x^n - 1, so x + 1 is never admissible; over
/// characteristic 2 it is admissible iff gcd(q - 1, n) = 1.
pub fn linear_h_admissible(n: usize, q: u64) -> bool {
    q.is_multiple_of(2) && gcd_u64(q - 1, n as u64) == 1
}

/// Closed-form admissibility predictions for the two special choices of h.
pub fn h_shortcut_tests(n: usize, field: &Field, which: Shortcut) -> Result<bool> {
    match which {
        Shortcut::Linear => Ok(linear_h_admissible(n, field.order())),
        Shortcut::ArtinSchreier => {
            if !field.is_prime_field() {
                return Err(Error::NotOfRequiredForm(format!(
                    "x^p - x needs a prime field, got {field}"
                )));
            }
            let p = field.p() as u64;
            let mut m = 0u32;
            let mut pm = 1u64;
            while pm < n as u64 + 1 {
                pm *= p;
                m += 1;
            }
            if pm != n as u64 + 1 || m == 0 {
                return Err(Error::NotOfRequiredForm(format!("{n} is not {p}^m - 1")));
            }
            Ok(!(m as u64).is_multiple_of(p))
        }
    }
}

/// (p - s) tr_{mr/s}(x) + tr_{mr/1}(x) reduced mod x^n - 1, where
/// tr_{ji/i}(x) = x + x^(p^i) + ... + x^(p^((j-1) i)) and q = p^r is the
/// field order.
///
/// Needs 2 <= s < p, s | m and gcd(s, r) = 1. With s = 1 the two sums
/// cancel to the zero polynomial, so s = 1 is rejected.
pub fn trace_h(field: &Field, m: u32, s: u32, n: usize) -> Result<Poly> {
    let p = field.p();
    let r = field.r();
    if s < 2 || s >= p || m == 0 || !m.is_multiple_of(s) || gcd_u64(s as u64, r as u64) != 1 || n == 0 {
        return Err(Error::PreconditionViolated(format!(
            "trace construction needs 2 <= s < p, s | m, gcd(s, r) = 1; got p = {p}, r = {r}, m = {m}, s = {s}"
        )));
    }
    let mr = m * r;
    let mut coeffs = vec![0u32; n];
    let mut add_term = |j: u32, c: u32| {
        // exponent p^j mod n
        let e = crate::field::pow_mod(p as u64, j as u64, n as u64) as usize;
        coeffs[e] = field.add(coeffs[e], c);
    };
    let lead = field.constant((p - s) as u64);
    for j in 0..mr / s {
        add_term(s * j, lead);
    }
    for j in 0..mr {
        add_term(j, 1);
    }
    Ok(reduce_mod_xn1(&Poly::new(field, coeffs), n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, r: u32) -> Field {
        Field::new(p, r).unwrap()
    }

    #[test]
    fn definition_examples() {
        let f2 = gf(2, 1);
        assert!(h_admissible(&Poly::parse(&f2, "x + 1").unwrap(), 7));
        let f4 = gf(2, 2);
        assert!(!h_admissible(&Poly::parse(&f4, "x + 1").unwrap(), 3));
        assert!(h_admissible(&Poly::zero(&f4), 3));
        let f3 = gf(3, 1);
        // b = 2 gives x - 1
        assert!(!h_admissible(&Poly::parse(&f3, "x + 1").unwrap(), 5));
    }

    #[test]
    fn shortcut_examples() {
        let f2 = gf(2, 1);
        for n in [1usize, 3, 7, 9, 15] {
            assert!(h_shortcut_tests(n, &f2, Shortcut::Linear).unwrap());
        }
        assert!(!h_shortcut_tests(3, &gf(2, 2), Shortcut::Linear).unwrap());
        let f3 = gf(3, 1);
        assert!(h_shortcut_tests(80, &f3, Shortcut::ArtinSchreier).unwrap());
        assert!(h_admissible(&Poly::parse(&f3, "x^3 - x").unwrap(), 80));
        assert!(!h_shortcut_tests(26, &f3, Shortcut::ArtinSchreier).unwrap());
        assert!(matches!(
            h_shortcut_tests(10, &f3, Shortcut::ArtinSchreier),
            Err(Error::NotOfRequiredForm(_))
        ));
        assert!(h_shortcut_tests(8, &gf(3, 2), Shortcut::ArtinSchreier).is_err());
    }

    #[test]
    fn linear_path_agrees_with_gcd_path() {
        // n = |GF(q^m)| - 1 with linearized h, including affine failures
        for (p, r) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1), (3, 2)] {
            let f = gf(p, r);
            let q = f.order();
            for m in 1..=4u32 {
                let Some(n) = q.checked_pow(m).map(|v| v as usize - 1) else {
                    continue;
                };
                if n > 700 || n == 0 {
                    continue;
                }
                let pp = p as usize;
                let mut candidates = vec![
                    Poly::monomial(&f, 1, pp).sub(&Poly::x(&f)),
                    Poly::monomial(&f, 1, pp).add(&Poly::x(&f)),
                    Poly::x(&f),
                ];
                if pp * pp < n {
                    candidates.push(Poly::monomial(&f, 1, pp * pp).add(&Poly::monomial(&f, f.constant(2), 1)));
                }
                for h in candidates {
                    let h = reduce_mod_xn1(&h, n);
                    if let Some(fast) = linearized_admissible(&h, n) {
                        assert_eq!(fast, h_admissible_by_gcd(&h, n), "q={q} n={n} h={h}");
                    }
                }
            }
        }
    }

    #[test]
    fn trace_construction() {
        let f3 = gf(3, 1);
        let h = trace_h(&f3, 2, 2, 8).unwrap();
        assert_eq!(h, Poly::parse(&f3, "x^3 + 2*x").unwrap());
        assert!(h_admissible(&h, 8));
        assert!(h_admissible_by_gcd(&h, 8));
        assert!(matches!(trace_h(&f3, 2, 1, 8), Err(Error::PreconditionViolated(_))));
        assert!(trace_h(&f3, 3, 2, 26).is_err());
        let f5 = gf(5, 1);
        let h5 = trace_h(&f5, 2, 2, 24).unwrap();
        assert!(h_admissible_by_gcd(&h5, 24));
        // the result stays admissible for the divisors of 24 as well
        for n in [2usize, 3, 4, 6, 8, 12] {
            assert!(
                h_admissible_by_gcd(&reduce_mod_xn1(&trace_h(&f5, 2, 2, 24).unwrap(), n), n),
                "n={n}"
            );
        }
    }
}
