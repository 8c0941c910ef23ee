//! Cyclotomic cosets, coset-product generator polynomials and cyclic codes.

mod distance;
mod enumerate;

use crate::error::{Error, Result};
use crate::field::{gcd_u64, multiplicative_order, Embedding, Field};
use crate::poly::{check_polynomial, Poly};

pub(crate) use distance::space_size;
pub use distance::{
    bch_bound, min_distance, Distance, DistanceBound, DistanceOptions, Method, Strategy, DEFAULT_BUDGET,
    DEFAULT_MC_SAMPLES,
};
pub use enumerate::{fold_codewords, macwilliams_min_weight, weight_distribution};

/// Orbits of {0, ..., n-1} under multiplication by q, each sorted, listed
/// by least element.
pub fn cyclotomic_cosets(n: usize, q: u64) -> Result<Vec<Vec<usize>>> {
    if n == 0 || gcd_u64(n as u64, q) != 1 {
        return Err(Error::NotCoprime { n: n as u64, q });
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let c = coset_of(start, n, q);
        for &e in &c {
            seen[e] = true;
        }
        out.push(c);
    }
    Ok(out)
}

/// The q-coset of e modulo n, sorted.
pub fn coset_of(e: usize, n: usize, q: u64) -> Vec<usize> {
    let mut c = Vec::new();
    let mut x = e % n;
    loop {
        c.push(x);
        x = ((x as u128 * q as u128) % n as u128) as usize;
        if x == e % n {
            break;
        }
    }
    c.sort_unstable();
    c
}

/// Union of the q-cosets containing the given representatives.
pub fn cosets_from_reps(reps: &[usize], n: usize, q: u64) -> Result<Vec<Vec<usize>>> {
    if n == 0 || gcd_u64(n as u64, q) != 1 {
        return Err(Error::NotCoprime { n: n as u64, q });
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &r in reps {
        let c = coset_of(r % n, n, q);
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out.sort();
    Ok(out)
}

/// GF(q^m) = GF(p^(rm)) with m = ord_n(q), together with the primitive
/// n-th root of unity beta = w^((|GF(q^m)| - 1)/n) of its canonical
/// primitive element w.
#[derive(Clone, Debug)]
pub struct SplittingField {
    n: usize,
    embedding: Embedding,
    beta: u32,
}

impl SplittingField {
    pub fn new(base: &Field, n: usize) -> Result<SplittingField> {
        let m = multiplicative_order(base.order(), n as u64)? as u32;
        let ext = Field::new(base.p() as u64, base.r() * m)?;
        let embedding = Embedding::new(base, &ext)?;
        let beta = ext.z_pow((ext.order() - 1) / n as u64);
        Ok(SplittingField { n, embedding, beta })
    }

    pub fn base(&self) -> &Field {
        self.embedding.sub()
    }

    pub fn ext(&self) -> &Field {
        self.embedding.ext()
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    /// Product of (x - beta^e) over the exponents, projected to the base
    /// field.
    pub fn coset_poly(&self, exponents: &[usize]) -> Result<Poly> {
        let ext = self.ext();
        let mut acc = Poly::one(ext);
        for &e in exponents {
            let root = ext.pow(self.beta, e as u64);
            acc = acc.mul(&Poly::new(ext, vec![ext.neg(root), 1]));
        }
        let coeffs = acc
            .coeffs()
            .iter()
            .map(|&c| self.embedding.project(c).map_err(|_| Error::IncompleteCoset))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(self.base(), coeffs))
    }

    /// Exponents e in 0..n with p(beta^e) = 0.
    pub fn root_exponents(&self, p: &Poly) -> Vec<usize> {
        let ext = self.ext();
        let lifted = Poly::new(ext, p.coeffs().iter().map(|&c| self.embedding.embed(c)).collect());
        let mut point = 1u32;
        let mut out = Vec::new();
        for e in 0..self.n {
            if lifted.eval(point) == 0 {
                out.push(e);
            }
            point = ext.mul(point, self.beta);
        }
        out
    }
}

/// Generator polynomial attached to a union of q-cosets: prod (x - beta^e).
pub fn coset_generator_poly(n: usize, base: &Field, cosets: &[Vec<usize>]) -> Result<Poly> {
    let sf = SplittingField::new(base, n)?;
    let exps: Vec<usize> = cosets.iter().flatten().copied().collect();
    sf.coset_poly(&exps)
}

/// A cyclic code of length n with monic generator dividing x^n - 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCode {
    n: usize,
    gen: Poly,
}

impl CyclicCode {
    pub fn new(gen: &Poly, n: usize) -> Result<CyclicCode> {
        check_polynomial(gen, n)?;
        Ok(CyclicCode { n, gen: gen.clone() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        self.gen.field()
    }

    pub fn generator(&self) -> &Poly {
        &self.gen
    }

    pub fn dimension(&self) -> usize {
        self.n - self.gen.deg()
    }

    pub fn is_zero_code(&self) -> bool {
        self.dimension() == 0
    }

    /// Rows x^i g for 0 <= i < dimension.
    pub fn generator_rows(&self) -> Vec<Vec<u32>> {
        (0..self.dimension())
            .map(|i| {
                let mut row = vec![0u32; self.n];
                for (j, &c) in self.gen.coeffs().iter().enumerate() {
                    row[i + j] = c;
                }
                row
            })
            .collect()
    }

    /// The Euclidean dual, generated by the monic reversal of the check
    /// polynomial.
    pub fn dual(&self) -> CyclicCode {
        let g = crate::poly::dual_generator(&self.gen, self.n).expect("validated divisor");
        CyclicCode { n: self.n, gen: g }
    }
}

/// Dimension n - deg g.
pub fn cyclic_dim(code: &CyclicCode) -> usize {
    code.dimension()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;

    fn gf(p: u64, r: u32) -> Field {
        Field::new(p, r).unwrap()
    }

    #[test]
    fn cosets_mod_7() {
        assert_eq!(
            cyclotomic_cosets(7, 2).unwrap(),
            vec![vec![0], vec![1, 2, 4], vec![3, 5, 6]]
        );
        assert_eq!(cyclotomic_cosets(3, 4).unwrap(), vec![vec![0], vec![1], vec![2]]);
        assert!(cyclotomic_cosets(6, 2).is_err());
    }

    #[test]
    fn coset_of_one_mod_151() {
        let listed = [2, 4, 8, 16, 32, 64, 128, 105, 59, 118, 85, 19, 38, 76, 1];
        let mut expect = listed.to_vec();
        expect.sort();
        let cosets = cyclotomic_cosets(151, 2).unwrap();
        assert!(cosets.contains(&expect));
        assert_eq!(cosets.len(), 11);
    }

    #[test]
    fn cosets_partition_and_close() {
        for (n, q) in [(7usize, 2u64), (15, 2), (31, 5), (80, 9), (73, 8), (21, 4), (40, 3)] {
            let cs = cyclotomic_cosets(n, q).unwrap();
            let mut all: Vec<usize> = cs.iter().flatten().copied().collect();
            all.sort();
            assert_eq!(all, (0..n).collect::<Vec<_>>());
            for c in &cs {
                for &e in c {
                    assert!(c.contains(&((e * q as usize) % n)));
                }
            }
        }
    }

    #[test]
    fn coset_polys_mod_7() {
        let f = gf(2, 1);
        assert_eq!(
            coset_generator_poly(7, &f, &[vec![0]]).unwrap(),
            Poly::parse(&f, "x + 1").unwrap()
        );
        let one = coset_generator_poly(7, &f, &[vec![1, 2, 4]]).unwrap();
        assert!(one.to_string() == "x^3 + x + 1" || one.to_string() == "x^3 + x^2 + 1");
        let both = coset_generator_poly(7, &f, &[vec![1, 2, 4], vec![3, 5, 6]]).unwrap();
        assert_eq!(both, Poly::parse(&f, "x^6+x^5+x^4+x^3+x^2+x+1").unwrap());
    }

    #[test]
    fn incomplete_coset_fails_projection() {
        let f = gf(2, 1);
        assert_eq!(
            coset_generator_poly(7, &f, &[vec![1, 2]]).unwrap_err(),
            Error::IncompleteCoset
        );
    }

    #[test]
    fn example_one_generators() {
        let f = gf(2, 1);
        let c1 = coset_of(1, 151, 2);
        let c5 = coset_of(5, 151, 2);
        assert_eq!(c1.len(), 15);
        assert_eq!(c5.len(), 15);
        let fpoly = coset_generator_poly(151, &f, std::slice::from_ref(&c1)).unwrap();
        let gpoly = coset_generator_poly(151, &f, &[c1, c5]).unwrap();
        assert_eq!(fpoly.deg(), 15);
        assert_eq!(gpoly.deg(), 30);
        assert!(gpoly.divides(&Poly::xn_minus_1(&f, 151)));
        assert!(fpoly.divides(&gpoly));
        let code = CyclicCode::new(&fpoly, 151).unwrap();
        assert_eq!(cyclic_dim(&code), 136);
    }

    #[test]
    fn coset_polys_divide_and_roots_round_trip() {
        for (p, r, n) in [(2u64, 1u32, 15usize), (3, 1, 13), (2, 2, 21), (3, 2, 10), (2, 3, 9)] {
            let f = gf(p, r);
            let sf = SplittingField::new(&f, n).unwrap();
            for c in cyclotomic_cosets(n, f.order()).unwrap() {
                let poly = sf.coset_poly(&c).unwrap();
                assert!(poly.is_monic());
                assert_eq!(poly.deg(), c.len());
                assert!(poly.divides(&Poly::xn_minus_1(&f, n)));
                assert_eq!(sf.root_exponents(&poly), c);
            }
        }
    }

    #[test]
    fn dimension_matches_rank() {
        let f = gf(3, 1);
        let sf = SplittingField::new(&f, 13).unwrap();
        for c in cyclotomic_cosets(13, 3).unwrap() {
            let code = CyclicCode::new(&sf.coset_poly(&c).unwrap(), 13).unwrap();
            assert_eq!(rank(&f, 13, &code.generator_rows()), code.dimension());
        }
        let full = CyclicCode::new(&Poly::one(&f), 13).unwrap();
        assert_eq!(full.dimension(), 13);
        let zero = CyclicCode::new(&Poly::xn_minus_1(&f, 13), 13).unwrap();
        assert_eq!(zero.dimension(), 0);
    }
}
