use std::fmt;

use super::Poly;
use crate::error::{Error, Result};
use crate::field::Field;

/// Fold x^i -> x^(i mod n).
pub fn reduce_mod_xn1(p: &Poly, n: usize) -> Poly {
    if p.coeffs().len() <= n {
        return p.clone();
    }
    let f = p.field();
    let mut out = vec![0u32; n];
    for (i, &c) in p.coeffs().iter().enumerate() {
        if c != 0 {
            out[i % n] = f.add(out[i % n], c);
        }
    }
    Poly::new(f, out)
}

/// A class in F[x]/(x^n - 1), held by its representative of degree < n.
#[derive(Clone, PartialEq, Eq)]
pub struct Residue {
    n: usize,
    rep: Poly,
}

impl Residue {
    pub fn from_poly(p: &Poly, n: usize) -> Residue {
        Residue {
            n,
            rep: reduce_mod_xn1(p, n),
        }
    }

    pub fn zero(field: &Field, n: usize) -> Residue {
        Residue {
            n,
            rep: Poly::zero(field),
        }
    }

    /// Vector a_0, ..., a_{n-1} to the class of sum a_i x^i.
    pub fn from_vector(field: &Field, v: &[u32]) -> Residue {
        Residue {
            n: v.len(),
            rep: Poly::new(field, v.to_vec()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rep(&self) -> &Poly {
        &self.rep
    }

    pub fn field(&self) -> &Field {
        self.rep.field()
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn to_vector(&self) -> Vec<u32> {
        let mut v = self.rep.coeffs().to_vec();
        v.resize(self.n, 0);
        v
    }

    fn compatible(&self, other: &Residue) -> Result<()> {
        if self.n != other.n {
            return Err(Error::MixedModulus);
        }
        if self.field() != other.field() {
            return Err(Error::MixedFields);
        }
        Ok(())
    }

    pub fn add(&self, other: &Residue) -> Result<Residue> {
        self.compatible(other)?;
        Ok(Residue {
            n: self.n,
            rep: self.rep.add(&other.rep),
        })
    }

    pub fn sub(&self, other: &Residue) -> Result<Residue> {
        self.compatible(other)?;
        Ok(Residue {
            n: self.n,
            rep: self.rep.sub(&other.rep),
        })
    }

    pub fn mul(&self, other: &Residue) -> Result<Residue> {
        self.compatible(other)?;
        Ok(Residue::from_poly(&self.rep.mul(&other.rep), self.n))
    }

    pub fn neg(&self) -> Residue {
        Residue {
            n: self.n,
            rep: self.rep.neg(),
        }
    }

    pub fn scale(&self, c: u32) -> Residue {
        Residue {
            n: self.n,
            rep: self.rep.scale(c),
        }
    }

    /// Multiplication by x, the cyclic shift of the coefficient vector.
    pub fn shift(&self) -> Residue {
        self.shift_by(1)
    }

    pub fn shift_by(&self, k: usize) -> Residue {
        if self.n == 0 {
            return self.clone();
        }
        let v = self.to_vector();
        let k = k % self.n;
        let mut out = vec![0u32; self.n];
        for (i, c) in v.into_iter().enumerate() {
            out[(i + k) % self.n] = c;
        }
        Residue {
            n: self.n,
            rep: Poly::new(self.field(), out),
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rep)
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Residue({} mod x^{} - 1)", self.rep, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> Field {
        Field::new(2, 1).unwrap()
    }

    #[test]
    fn shift_wraps_around() {
        let f = gf2();
        let top = Residue::from_poly(&Poly::monomial(&f, 1, 6), 7);
        assert_eq!(top.shift(), Residue::from_poly(&Poly::one(&f), 7));
        let a = Residue::from_poly(&Poly::parse(&f, "x^5 + x^2 + 1").unwrap(), 7);
        let mut b = a.clone();
        for _ in 0..7 {
            b = b.shift();
        }
        assert_eq!(a, b);
        let x = Residue::from_poly(&Poly::x(&f), 7);
        assert_eq!(a.shift(), a.mul(&x).unwrap());
    }

    #[test]
    fn square_of_x_plus_1() {
        let f = gf2();
        let a = Residue::from_poly(&Poly::parse(&f, "x + 1").unwrap(), 7);
        assert_eq!(a.mul(&a).unwrap().rep(), &Poly::parse(&f, "x^2 + 1").unwrap());
    }

    #[test]
    fn mixed_moduli_rejected() {
        let f = gf2();
        let a = Residue::from_poly(&Poly::one(&f), 5);
        let b = Residue::from_poly(&Poly::one(&f), 7);
        assert_eq!(a.add(&b).unwrap_err(), Error::MixedModulus);
    }

    #[test]
    fn vector_layout_is_ascending() {
        let f = Field::new(3, 1).unwrap();
        let r = Residue::from_vector(&f, &[1, 0, 2, 0]);
        assert_eq!(r.rep(), &Poly::parse(&f, "2*x^2 + 1").unwrap());
        assert_eq!(r.to_vector(), vec![1, 0, 2, 0]);
        let wrap = Residue::from_poly(&Poly::parse(&f, "x^5 + x^4").unwrap(), 4);
        assert_eq!(wrap.to_vector(), vec![1, 1, 0, 0]);
    }
}
