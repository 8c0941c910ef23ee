//! Arithmetic in GF(p^r).
//!
//! Elements are encoded as `u32` codes in the polynomial basis: the element
//! `c_0 + c_1 x + ... + c_{r-1} x^{r-1}` (mod the field's modulus) has code
//! `c_0 + c_1 p + ... + c_{r-1} p^{r-1}`. Code 0 is zero and code 1 is one,
//! and the prime subfield occupies codes `0..p`. Fields up to 2^16 elements
//! carry log/antilog tables; larger ones multiply in the polynomial basis.

mod conway;
mod element;
mod embed;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use element::FieldElement;
pub use embed::{subfield_embed, subfield_project, Embedding};

/// Alias matching the name used for the construction parameters of a field.
pub type FieldSpec = Field;

/// Upper bound on the number of field elements, inclusive.
pub const MAX_FIELD_ORDER: u64 = 1 << 32;
const LOG_TABLE_LIMIT: u64 = 1 << 16;

/// Handle to a finite field. Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

struct Inner {
    p: u32,
    r: u32,
    order: u64,
    /// Ascending, monic, length r + 1.
    modulus: Vec<u32>,
    /// Bit pattern of the modulus, characteristic 2 only.
    modulus_bits: u64,
    /// p^i for i in 0..=r.
    pow_p: Vec<u64>,
    primitive: u32,
    tables: Option<Tables>,
}

struct Tables {
    /// exp[i] = primitive^i for i in 0..2(order-1).
    exp: Vec<u32>,
    /// log[a] for a != 0; log[0] is unused.
    log: Vec<u32>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.r)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.r == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.r)
        }
    }
}

impl Field {
    /// GF(p^r) with its canonical modulus: the Conway polynomial when
    /// tabulated, otherwise the least monic irreducible polynomial.
    pub fn new(p: u64, r: u32) -> Result<Field> {
        let (p32, order) = check_params(p, r)?;
        let modulus = canonical_modulus(p32, r);
        Ok(Self::build(p32, r, order, modulus))
    }

    /// GF(p^r) with a caller-chosen monic modulus of degree r (ascending
    /// coefficients, leading 1 included). Rejects reducible moduli.
    pub fn with_modulus(p: u64, modulus: Vec<u32>) -> Result<Field> {
        if modulus.len() < 2 {
            return Err(Error::DegreeZero);
        }
        let r = (modulus.len() - 1) as u32;
        let (p32, order) = check_params(p, r)?;
        if *modulus.last().unwrap() != 1 {
            return Err(Error::NotMonic(format!("{modulus:?}")));
        }
        let modulus: Vec<u32> = modulus.into_iter().map(|c| c % p32).collect();
        if !is_irreducible_mod_p(&modulus, p32) {
            return Err(Error::ReducibleModulus);
        }
        Ok(Self::build(p32, r, order, modulus))
    }

    fn build(p: u32, r: u32, order: u64, modulus: Vec<u32>) -> Field {
        let mut pow_p = Vec::with_capacity(r as usize + 1);
        let mut acc = 1u64;
        for _ in 0..=r {
            pow_p.push(acc);
            acc = acc.saturating_mul(p as u64);
        }
        let modulus_bits = if p == 2 {
            modulus
                .iter()
                .enumerate()
                .fold(0u64, |bits, (i, &c)| bits | ((c as u64) << i))
        } else {
            0
        };
        let mut inner = Inner {
            p,
            r,
            order,
            modulus,
            modulus_bits,
            pow_p,
            primitive: 0,
            tables: None,
        };
        inner.primitive = find_primitive(&inner);
        if order <= LOG_TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Field(Arc::new(inner))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn r(&self) -> u32 {
        self.0.r
    }

    /// Number of elements, p^r.
    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// Ascending coefficients of the defining polynomial over GF(p).
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.r == 1
    }

    /// sqrt(|F|) when the order is an even power of p.
    pub fn sqrt_order(&self) -> Option<u64> {
        self.0.r.is_multiple_of(2).then(|| self.0.pow_p[self.0.r as usize / 2])
    }

    pub fn primitive(&self) -> u32 {
        self.0.primitive
    }

    /// primitive^k.
    pub fn z_pow(&self, k: u64) -> u32 {
        self.pow(self.0.primitive, k)
    }

    pub fn element(&self, value: u32) -> FieldElement {
        FieldElement::new(self, value)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        (0..self.0.order).map(|a| a as u32)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = u32> {
        (1..self.0.order).map(|a| a as u32)
    }

    /// Prime-field constant c mod p.
    pub fn constant(&self, c: u64) -> u32 {
        (c % self.0.p as u64) as u32
    }

    pub fn coords(&self, a: u32) -> Vec<u32> {
        let p = self.0.p;
        let mut a = a;
        (0..self.0.r)
            .map(|_| {
                let c = a % p;
                a /= p;
                c
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<u32> {
        if coords.len() != self.0.r as usize {
            return Err(Error::Parse(format!(
                "expected {} coordinates, got {}",
                self.0.r,
                coords.len()
            )));
        }
        let p = self.0.p as u64;
        let mut code = 0u64;
        for (i, &c) in coords.iter().enumerate() {
            if c as u64 >= p {
                return Err(Error::Parse(format!("coordinate {c} not reduced mod {p}")));
            }
            code += c as u64 * self.0.pow_p[i];
        }
        Ok(code as u32)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.0;
        if inner.p == 2 {
            a ^ b
        } else if inner.r == 1 {
            ((a as u64 + b as u64) % inner.p as u64) as u32
        } else {
            digitwise(inner, a, b, |x, y, p| (x + y) % p)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let inner = &*self.0;
        if inner.p == 2 || a == 0 {
            a
        } else if inner.r == 1 {
            inner.p - a
        } else {
            digitwise(inner, a, 0, |x, _, p| (p - x) % p)
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.0;
        if inner.p == 2 {
            a ^ b
        } else if inner.r == 1 {
            ((a as u64 + inner.p as u64 - b as u64) % inner.p as u64) as u32
        } else {
            digitwise(inner, a, b, |x, y, p| (x + p - y) % p)
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let inner = &*self.0;
        match &inner.tables {
            Some(t) => t.exp[t.log[a as usize] as usize + t.log[b as usize] as usize],
            None => slow_mul(inner, a, b),
        }
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::InverseOfZero);
        }
        let inner = &*self.0;
        Ok(match &inner.tables {
            Some(t) => {
                let n = inner.order as usize - 1;
                t.exp[(n - t.log[a as usize] as usize) % n]
            }
            None => self.pow(a, inner.order - 2),
        })
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let inner = &*self.0;
        let group = inner.order - 1;
        if let Some(t) = &inner.tables {
            let l = t.log[a as usize] as u128 * (e % group) as u128 % group as u128;
            return t.exp[l as usize];
        }
        let mut e = e % group;
        if e == 0 {
            return 1;
        }
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = slow_mul(inner, acc, base);
            }
            base = slow_mul(inner, base, base);
            e >>= 1;
        }
        acc
    }

    /// a^(p^k).
    pub fn frobenius(&self, a: u32, k: u64) -> u32 {
        let k = (k % self.0.r as u64) as usize;
        if k == 0 || a == 0 {
            return a;
        }
        self.pow(a, self.0.pow_p[k])
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u32) -> Result<u64> {
        if a == 0 {
            return Err(Error::InverseOfZero);
        }
        let mut ord = self.0.order - 1;
        for (ell, _) in factorize(ord) {
            while ord.is_multiple_of(ell) && self.pow(a, ord / ell) == 1 {
                ord /= ell;
            }
        }
        Ok(ord)
    }

    /// Parses an element in one of the accepted forms: a decimal integer
    /// (reduced into the prime subfield), `z^k` or `z` for powers of the
    /// primitive element, or `[c0,c1,...]` in coordinates.
    pub fn parse_element(&self, text: &str) -> Result<u32> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty field element".into()));
        }
        if let Some(body) = s.strip_prefix('[') {
            let body = body
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unterminated coordinates in {s:?}")))?;
            let coords = body
                .split(',')
                .map(|c| {
                    c.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad coordinate {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            return self.from_coords(&coords);
        }
        if let Some(rest) = s.strip_prefix('z') {
            let k = if rest.is_empty() {
                1
            } else {
                let digits = rest
                    .strip_prefix('^')
                    .ok_or_else(|| Error::Parse(format!("expected z^k, got {s:?}")))?;
                digits
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?
            };
            return Ok(self.z_pow(k));
        }
        let (neg, digits) = match s.strip_prefix('-') {
            Some(d) => (true, d),
            None => (false, s.as_str()),
        };
        let v = digits
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad field element {s:?}")))?;
        if self.0.r == 1 && !neg && v >= self.0.p as u64 {
            return Err(Error::Parse(format!("{v} is not reduced mod {}", self.0.p)));
        }
        let c = self.constant(v);
        Ok(if neg { self.neg(c) } else { c })
    }

    /// Decimal for prime fields, `[c0,...,c_{r-1}]` otherwise.
    pub fn format_element(&self, a: u32) -> String {
        if self.0.r == 1 {
            return a.to_string();
        }
        let coords: Vec<String> = self.coords(a).iter().map(|c| c.to_string()).collect();
        format!("[{}]", coords.join(","))
    }
}

#[inline]
fn digitwise(inner: &Inner, a: u32, b: u32, op: impl Fn(u32, u32, u32) -> u32) -> u32 {
    let p = inner.p;
    let (mut a, mut b) = (a, b);
    let mut out = 0u64;
    for i in 0..inner.r as usize {
        let d = op(a % p, b % p, p);
        a /= p;
        b /= p;
        out += d as u64 * inner.pow_p[i];
    }
    out as u32
}

fn slow_mul(inner: &Inner, a: u32, b: u32) -> u32 {
    let r = inner.r as usize;
    if inner.p == 2 {
        let (a, b) = (a as u64, b as u64);
        let mut prod = 0u64;
        for i in 0..r {
            if (b >> i) & 1 == 1 {
                prod ^= a << i;
            }
        }
        for i in (r..2 * r - 1).rev() {
            if (prod >> i) & 1 == 1 {
                prod ^= inner.modulus_bits << (i - r);
            }
        }
        return prod as u32;
    }
    let p = inner.p as u64;
    if r == 1 {
        return (a as u64 * b as u64 % p) as u32;
    }
    let mut da = [0u64; 32];
    let mut db = [0u64; 32];
    let (mut x, mut y) = (a as u64, b as u64);
    for i in 0..r {
        da[i] = x % p;
        db[i] = y % p;
        x /= p;
        y /= p;
    }
    let mut prod = [0u64; 64];
    for i in 0..r {
        if da[i] == 0 {
            continue;
        }
        for j in 0..r {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    for i in (r..2 * r - 1).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        let neg_c = p - c;
        for j in 0..r {
            prod[i - r + j] = (prod[i - r + j] + neg_c * inner.modulus[j] as u64) % p;
        }
        prod[i] = 0;
    }
    let mut out = 0u64;
    for i in 0..r {
        out += prod[i] * inner.pow_p[i];
    }
    out as u32
}

fn find_primitive(inner: &Inner) -> u32 {
    let group = inner.order - 1;
    if group == 1 {
        return 1;
    }
    let primes: Vec<u64> = factorize(group).into_iter().map(|(q, _)| q).collect();
    let pow = |a: u32, mut e: u64| {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = slow_mul(inner, acc, base);
            }
            base = slow_mul(inner, base, base);
            e >>= 1;
        }
        acc
    };
    (2..inner.order)
        .map(|a| a as u32)
        .find(|&a| primes.iter().all(|&q| pow(a, group / q) != 1))
        .expect("every finite field has a primitive element")
}

fn build_tables(inner: &Inner) -> Tables {
    let group = (inner.order - 1) as usize;
    let mut exp = vec![0u32; 2 * group.max(1)];
    let mut log = vec![0u32; inner.order as usize];
    let mut acc = 1u32;
    for i in 0..group {
        exp[i] = acc;
        log[acc as usize] = i as u32;
        acc = slow_mul(inner, acc, inner.primitive);
    }
    for i in group..2 * group {
        exp[i] = exp[i - group];
    }
    if group == 0 {
        exp[0] = 1;
    }
    Tables { exp, log }
}

fn check_params(p: u64, r: u32) -> Result<(u32, u64)> {
    if r == 0 {
        return Err(Error::DegreeZero);
    }
    if !is_prime(p) {
        return Err(Error::NonPrimeP(p));
    }
    let order = (p as u128).checked_pow(r).unwrap_or(u128::MAX);
    if order > MAX_FIELD_ORDER as u128 {
        return Err(Error::FieldTooLarge { p, r });
    }
    Ok((p as u32, order as u64))
}

fn canonical_modulus(p: u32, r: u32) -> Vec<u32> {
    if r == 1 {
        let g = least_primitive_root(p);
        return vec![(p - g) % p, 1];
    }
    if let Some((_, _, c)) = conway::CONWAY.iter().find(|(cp, cr, _)| *cp == p && *cr == r) {
        return c.to_vec();
    }
    // Least monic irreducible, ordering the lower coefficients as a
    // base-p number with c_{r-1} most significant.
    let rest = (p as u64).pow(r);
    (0..rest)
        .map(|code| {
            let mut m: Vec<u32> = {
                let mut x = code;
                (0..r)
                    .map(|_| {
                        let c = (x % p as u64) as u32;
                        x /= p as u64;
                        c
                    })
                    .collect()
            };
            m.push(1);
            m
        })
        .find(|m| m[0] != 0 && is_irreducible_mod_p(m, p))
        .expect("irreducible polynomials exist in every degree")
}

fn least_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let group = p as u64 - 1;
    let primes: Vec<u64> = factorize(group).into_iter().map(|(q, _)| q).collect();
    (2..p)
        .find(|&g| primes.iter().all(|&q| pow_mod(g as u64, group / q, p as u64) != 1))
        .unwrap()
}

pub(crate) fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u128;
    let mut b = (base % m) as u128;
    let m = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as u64
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Trial-division factorization as (prime, exponent) pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Least m >= 1 with q^m = 1 (mod n): GF(q^m) is the splitting field of
/// x^n - 1 over GF(q).
pub fn multiplicative_order(q: u64, n: u64) -> Result<u64> {
    if n == 0 || gcd_u64(q, n) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    if n == 1 {
        return Ok(1);
    }
    let mut acc = q % n;
    let mut m = 1;
    while acc != 1 {
        acc = (acc as u128 * q as u128 % n as u128) as u64;
        m += 1;
    }
    Ok(m)
}

// Polynomials over GF(p) for modulus selection, ascending Vec<u32>.

fn pf_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn pf_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let p = p as u64;
    let mut a: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let dm = m.len() - 1;
    let inv_lead = pow_mod(m[dm] as u64, p - 2, p);
    while a.len() > dm && !a.is_empty() {
        let top = a.len() - 1;
        let c = a[top] * inv_lead % p;
        if c != 0 {
            for j in 0..=dm {
                let idx = top - dm + j;
                a[idx] = (a[idx] + (p - c) * m[j] as u64) % p;
            }
        }
        a.pop();
        while a.last() == Some(&0) {
            a.pop();
        }
    }
    a.into_iter().map(|c| c as u32).collect()
}

fn pf_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let pp = p as u64;
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % pp;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    pf_rem(&pf_trim(prod), m, p)
}

/// x^(p^k) mod m by k successive p-th powers.
fn pf_frobenius_x(k: u32, m: &[u32], p: u32) -> Vec<u32> {
    let mut t = pf_rem(&[0, 1], m, p);
    for _ in 0..k {
        let mut acc = vec![1u32];
        let mut base = t.clone();
        let mut e = p as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = pf_mulmod(&acc, &base, m, p);
            }
            base = pf_mulmod(&base, &base, m, p);
            e >>= 1;
        }
        t = acc;
    }
    t
}

fn pf_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = pf_trim(a.to_vec());
    let mut b = pf_trim(b.to_vec());
    while !b.is_empty() {
        let r = pf_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin's test: m of degree r is irreducible over GF(p) iff
/// x^(p^r) = x (mod m) and gcd(x^(p^(r/l)) - x, m) = 1 for primes l | r.
pub(crate) fn is_irreducible_mod_p(m: &[u32], p: u32) -> bool {
    let r = (m.len() - 1) as u32;
    if r == 1 {
        return true;
    }
    if m[0] == 0 {
        return false;
    }
    let x_minus = |mut t: Vec<u32>| {
        if t.len() < 2 {
            t.resize(2, 0);
        }
        t[1] = (t[1] + p - 1) % p;
        pf_trim(t)
    };
    if !x_minus(pf_frobenius_x(r, m, p)).is_empty() {
        return false;
    }
    factorize(r as u64).into_iter().all(|(ell, _)| {
        let t = x_minus(pf_frobenius_x(r / ell as u32, m, p));
        let g = pf_gcd(&t, m, p);
        g.len() == 1
    })
}
