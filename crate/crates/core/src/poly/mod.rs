//! Dense univariate polynomials over a [`Field`] and residues modulo x^n - 1.

mod factor;
mod residue;

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

pub use factor::{divisors_of_xn_minus_1, irreducible_factors, irreducible_factors_of_xn_minus_1};
pub use residue::{reduce_mod_xn1, Residue};

/// Ascending coefficients with no trailing zeros. The zero polynomial has
/// no coefficients and degree `None`, which orders below every `Some`.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<u32>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::new(field, vec![1])
    }

    pub fn constant(field: &Field, c: u32) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, 1, 1)
    }

    /// c x^k.
    pub fn monomial(field: &Field, c: u32, k: usize) -> Poly {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Poly::new(field, coeffs)
    }

    /// x^n - 1.
    pub fn xn_minus_1(field: &Field, n: usize) -> Poly {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = field.neg(1);
        coeffs[n] = 1;
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u32> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; for dimension counts
    /// where the caller has already excluded zero.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn lead(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    fn assert_field(&self, other: &Poly) {
        assert!(self.field == other.field, "polynomials over different fields");
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_field(other);
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Poly::new(f, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.assert_field(other);
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Poly::new(f, coeffs)
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: u32) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_field(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    out[i + j] = f.add(out[i + j], f.mul(a, b));
                }
            }
        }
        Poly::new(f, out)
    }

    /// x^k · self.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly::new(&self.field, coeffs)
    }

    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(divisor)?;
        let Some(db) = divisor.degree() else {
            return Err(Error::DivideByZero);
        };
        let f = &self.field;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(f), self.clone()));
        }
        let inv_lead = f.inv(divisor.lead())?;
        let mut quot = vec![0u32; rem.len() - db];
        for top in (db..rem.len()).rev() {
            let c = rem[top];
            if c == 0 {
                continue;
            }
            let t = f.mul(c, inv_lead);
            quot[top - db] = t;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                if b != 0 {
                    let idx = top - db + j;
                    rem[idx] = f.sub(rem[idx], f.mul(t, b));
                }
            }
        }
        rem.truncate(db);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// self / divisor when the division is exact.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divmod(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotADivisor(divisor.to_string()))
        }
    }

    /// Whether self divides other. Zero divides only zero.
    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.field.inv(self.lead()).expect("nonzero lead");
        self.scale(inv)
    }

    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic lcm; zero if either argument is zero.
    pub fn lcm(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() || other.is_zero() {
            self.same_field(other)?;
            return Ok(Poly::zero(&self.field));
        }
        let g = self.gcd(other)?;
        Ok(self.exact_div(&g)?.mul(other).monic())
    }

    pub fn gcd_lcm(&self, other: &Poly) -> Result<(Poly, Poly)> {
        Ok((self.gcd(other)?, self.lcm(other)?))
    }

    /// Horner evaluation at a point of the same field.
    pub fn eval(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Coefficient reversal x^d · self(1/x), d = deg self.
    pub fn reversal(&self) -> Poly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Poly::new(&self.field, c)
    }

    pub fn map_coeffs(&self, op: impl Fn(u32) -> u32) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().map(|&c| op(c)).collect())
    }

    /// self^e mod m.
    pub fn pow_mod(&self, mut e: u128, m: &Poly) -> Result<Poly> {
        let mut base = self.rem(m)?;
        let mut acc = Poly::one(&self.field).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m)?;
            }
            base = base.mul(&base).rem(m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.constant(i as u64), c))
            .collect();
        Poly::new(f, coeffs)
    }

    /// Parses the grammar of `+`/`-` separated terms `c*x^k`, `x^k`, `x`,
    /// `c*x`, `c`, where `c` uses the field's element syntax. Repeated
    /// degrees are summed.
    pub fn parse(field: &Field, text: &str) -> Result<Poly> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        let mut depth = 0;
        for ch in s.chars() {
            match ch {
                '[' => {
                    depth += 1;
                    current.push(ch);
                }
                ']' => {
                    depth -= 1;
                    current.push(ch);
                }
                '+' | '-' if depth == 0 && !current.is_empty() && !current.ends_with('^') => {
                    terms.push((negative, std::mem::take(&mut current)));
                    negative = ch == '-';
                }
                '-' if depth == 0 && current.is_empty() => negative = !negative,
                '+' if depth == 0 && current.is_empty() => {}
                _ => current.push(ch),
            }
        }
        if current.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        terms.push((negative, current));

        let mut acc = Poly::zero(field);
        for (neg, term) in terms {
            let (c, k) = parse_term(field, &term)?;
            let c = if neg { field.neg(c) } else { c };
            acc = acc.add(&Poly::monomial(field, c, k));
        }
        Ok(acc)
    }
}

fn parse_term(field: &Field, term: &str) -> Result<(u32, usize)> {
    let (coef, mono) = match term.rfind('*') {
        Some(i) => (Some(&term[..i]), &term[i + 1..]),
        None if term.starts_with('x') => (None, term),
        None => return Ok((field.parse_element(term)?, 0)),
    };
    let k = if mono == "x" {
        1
    } else if let Some(e) = mono.strip_prefix("x^") {
        e.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad exponent in term {term:?}")))?
    } else {
        return Err(Error::Parse(format!("bad monomial in term {term:?}")));
    };
    let c = match coef {
        Some(c) => field.parse_element(c)?,
        None => 1,
    };
    Ok((c, k))
}

impl fmt::Display for Poly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return out.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                out.write_str(" + ")?;
            }
            first = false;
            let coef = self.field.format_element(c);
            match (k, c) {
                (0, _) => write!(out, "{coef}")?,
                (1, 1) => out.write_str("x")?,
                (1, _) => write!(out, "{coef}*x")?,
                (_, 1) => write!(out, "x^{k}")?,
                _ => write!(out, "{coef}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self} over {:?})", self.field)
    }
}

fn require_monic(f: &Poly) -> Result<()> {
    if f.is_monic() {
        Ok(())
    } else {
        Err(Error::NotMonic(f.to_string()))
    }
}

/// f' = (x^n - 1)/f.
pub fn check_polynomial(f: &Poly, n: usize) -> Result<Poly> {
    require_monic(f)?;
    Poly::xn_minus_1(f.field(), n)
        .exact_div(f)
        .map_err(|_| Error::NotADivisor(f.to_string()))
}

/// Monic reversal of the check polynomial. Generates the Euclidean dual of
/// the cyclic code of f. For f = 1 this is x^n - 1 itself, the generator
/// of the zero code.
pub fn dual_generator(f: &Poly, n: usize) -> Result<Poly> {
    Ok(check_polynomial(f, n)?.reversal().monic())
}

/// Class of x^n h(1/x) = sum h_i x^(n-i) in F[x]/(x^n - 1).
pub fn reciprocal_bar(h: &Poly, n: usize) -> Result<Residue> {
    if h.degree().is_some_and(|d| d >= n) {
        return Err(Error::DegreeTooLarge { what: h.to_string(), n });
    }
    let mut coeffs = vec![0u32; n];
    for (i, &c) in h.coeffs().iter().enumerate() {
        coeffs[(n - i) % n] = c;
    }
    Ok(Residue::from_poly(&Poly::new(h.field(), coeffs), n))
}

/// Coefficient-wise e -> e^q.
pub fn q_power_map(f: &Poly, q: u64) -> Poly {
    let field = f.field();
    f.map_coeffs(|c| field.pow(c, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64, r: u32) -> Field {
        Field::new(p, r).unwrap()
    }

    fn p2(s: &str) -> Poly {
        Poly::parse(&gf(2, 1), s).unwrap()
    }

    #[test]
    fn divmod_hamming() {
        let (q, r) = p2("x^7 + 1").divmod(&p2("x^3 + x + 1")).unwrap();
        assert_eq!(q, p2("x^4 + x^2 + x + 1"));
        assert!(r.is_zero());
        let a = p2("x^5 + x + 1");
        assert_eq!(
            a.divmod(&Poly::one(a.field())).unwrap(),
            (a.clone(), Poly::zero(a.field()))
        );
        assert_eq!(a.divmod(&a).unwrap().0, Poly::one(a.field()));
        assert_eq!(a.divmod(&Poly::zero(a.field())).unwrap_err(), Error::DivideByZero);
        let other = Poly::one(&gf(3, 1));
        assert_eq!(a.divmod(&other).unwrap_err(), Error::MixedFields);
    }

    #[test]
    fn gcd_and_lcm() {
        let a = p2("x^3 + x + 1");
        let b = p2("x + 1");
        assert!(a.gcd(&b).unwrap().is_one());
        let z = Poly::zero(a.field());
        assert_eq!(a.gcd(&z).unwrap(), a);
        assert_eq!(a.lcm(&a).unwrap(), a);
        assert_eq!(z.gcd(&z).unwrap_err(), Error::BothZero);
        let g3 = gf(3, 1);
        let c = Poly::parse(&g3, "2*x^2 + 1").unwrap();
        assert_eq!(c.gcd(&Poly::zero(&g3)).unwrap(), Poly::parse(&g3, "x^2 + 2").unwrap());
    }

    #[test]
    fn check_polynomial_examples() {
        let x1 = p2("x + 1");
        assert_eq!(check_polynomial(&x1, 7).unwrap(), p2("x^6+x^5+x^4+x^3+x^2+x+1"));
        let one = Poly::one(x1.field());
        assert_eq!(check_polynomial(&one, 7).unwrap(), p2("x^7 + 1"));
        assert_eq!(check_polynomial(&p2("x^3+x+1"), 7).unwrap(), p2("x^4+x^2+x+1"));
        assert!(matches!(check_polynomial(&p2("x^2+1"), 7), Err(Error::NotADivisor(_))));
        let g3 = gf(3, 1);
        let nm = Poly::parse(&g3, "2*x + 1").unwrap();
        assert!(matches!(check_polynomial(&nm, 2), Err(Error::NotMonic(_))));
    }

    #[test]
    fn dual_generator_examples() {
        assert_eq!(dual_generator(&p2("x^3+x+1"), 7).unwrap(), p2("x^4+x^3+x^2+1"));
        let one = Poly::one(&gf(2, 1));
        assert_eq!(dual_generator(&one, 7).unwrap(), p2("x^7+1"));
        // over GF(3): f = x - 1 gives f' = x + 1 for n = 2, reversal x + 1
        let g3 = gf(3, 1);
        let f = Poly::parse(&g3, "x - 1").unwrap();
        assert_eq!(dual_generator(&f, 2).unwrap(), Poly::parse(&g3, "x + 1").unwrap());
        // f = x^2 + 1, n = 4: the reversal 2x^2 + 1 of f' = x^2 + 2 is rescaled
        let f = Poly::parse(&g3, "x^2 + 1").unwrap();
        let d = dual_generator(&f, 4).unwrap();
        assert!(d.is_monic());
        assert_eq!(d, Poly::parse(&g3, "x^2 + 2").unwrap());
    }

    #[test]
    fn reciprocal_bar_examples() {
        assert_eq!(reciprocal_bar(&p2("x + 1"), 7).unwrap().rep(), &p2("x^6 + 1"));
        assert_eq!(reciprocal_bar(&p2("1"), 7).unwrap().rep(), &p2("1"));
        assert_eq!(reciprocal_bar(&p2("x^3"), 7).unwrap().rep(), &p2("x^4"));
        assert!(matches!(
            reciprocal_bar(&p2("x^7"), 7),
            Err(Error::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn q_power_map_gf9() {
        let f9 = gf(3, 2);
        let z = f9.primitive();
        let p = Poly::new(&f9, vec![z, 1]);
        let expect = Poly::new(&f9, vec![f9.pow(z, 3), 1]);
        assert_eq!(q_power_map(&p, 3), expect);
        assert_eq!(q_power_map(&q_power_map(&p, 3), 3), p);
        let b = p2("x^5 + x^2 + 1");
        assert_eq!(q_power_map(&b, 2), b);
    }

    #[test]
    fn text_round_trip() {
        let f9 = gf(3, 2);
        let p = Poly::parse(&f9, "x^3 + z^5*x^2 + [1,1]*x + 2").unwrap();
        assert_eq!(p.coeff(2), f9.z_pow(5));
        assert_eq!(p.coeff(1), 4);
        assert_eq!(Poly::parse(&f9, &p.to_string()).unwrap(), p);
        let q = Poly::parse(&gf(2, 1), "1 + x^2 + x^2 + x").unwrap();
        assert_eq!(q.to_string(), "x + 1");
        let r = Poly::parse(&gf(5, 1), "x^4 - 1").unwrap();
        assert_eq!(r.coeffs(), &[4, 0, 0, 0, 1]);
        assert_eq!(r.to_string(), "x^4 + 4");
        let s = Poly::parse(&gf(5, 1), "-x - 2*x^2").unwrap();
        assert_eq!(s.coeffs(), &[0, 4, 3]);
        assert!(Poly::parse(&gf(2, 1), "x^").is_err());
        assert!(Poly::parse(&gf(2, 1), "x +").is_err());
        assert_eq!(Poly::zero(&gf(2, 1)).to_string(), "0");
        assert!(Poly::parse(&gf(2, 1), "0").unwrap().is_zero());
    }

    fn field_strategy() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just((2u64, 1u32)),
            Just((3, 1)),
            Just((2, 2)),
            Just((3, 2)),
            Just((5, 1))
        ]
        .prop_map(|(p, r)| gf(p, r))
    }

    fn poly_in(field: Field, max_len: usize) -> impl Strategy<Value = Poly> {
        let q = field.order() as u32;
        proptest::collection::vec(0..q, 0..max_len).prop_map(move |c| Poly::new(&field, c))
    }

    fn two_polys() -> impl Strategy<Value = (Poly, Poly)> {
        field_strategy().prop_flat_map(|f| (poly_in(f.clone(), 24), poly_in(f, 12)))
    }

    proptest! {
        #[test]
        fn divmod_reconstructs((a, b) in two_polys()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.divmod(&b).unwrap();
            prop_assert_eq!(q.mul(&b).add(&r), a);
            prop_assert!(r.degree() < b.degree());
        }

        #[test]
        fn gcd_lcm_product((a, b) in two_polys()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let (g, l) = a.gcd_lcm(&b).unwrap();
            prop_assert!(g.is_monic());
            prop_assert!(g.divides(&a) && g.divides(&b));
            prop_assert_eq!(g.mul(&l), a.mul(&b).monic());
        }

        #[test]
        fn q_power_map_is_additive_involution(f in poly_in(gf(3, 2), 10), g in poly_in(gf(3, 2), 10)) {
            prop_assert_eq!(q_power_map(&f.add(&g), 3), q_power_map(&f, 3).add(&q_power_map(&g, 3)));
            prop_assert_eq!(q_power_map(&q_power_map(&f, 3), 3), f);
        }

        #[test]
        fn printer_parser_round_trip((a, _) in two_polys()) {
            prop_assert_eq!(Poly::parse(a.field(), &a.to_string()).unwrap(), a);
        }
    }
}
