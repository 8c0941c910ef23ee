use std::collections::HashMap;

use super::Field;
use crate::error::{Error, Result};

const TABLE_LIMIT: u64 = 1 << 16;

/// Field embedding GF(p^s) -> GF(p^t) for s | t.
///
/// The generator x of the small field is sent to the root of its modulus
/// of the form w^(j (Q_t - 1)/(Q_s - 1)) with least j >= 1, where w is the
/// primitive element of the large field. For Conway moduli j = 1.
#[derive(Clone, Debug)]
pub struct Embedding {
    sub: Field,
    ext: Field,
    /// Images of 1, x, ..., x^(s-1).
    basis: Vec<u32>,
    back: Option<HashMap<u32, u32>>,
}

impl Embedding {
    pub fn new(sub: &Field, ext: &Field) -> Result<Embedding> {
        if sub.p() != ext.p() || !ext.r().is_multiple_of(sub.r()) {
            return Err(Error::NotASubfield {
                sub: sub.order(),
                ext: ext.order(),
            });
        }
        let s = sub.r() as usize;
        let basis = if sub == ext {
            (0..s).map(|i| ext.pow(x_code(ext), i as u64)).collect()
        } else if s == 1 {
            vec![1]
        } else {
            let step = (ext.order() - 1) / (sub.order() - 1);
            let gamma = ext.z_pow(step);
            let modulus = sub.modulus();
            let mut cand = gamma;
            let alpha = loop {
                // evaluate the modulus, whose coefficients lie in GF(p)
                let v = modulus
                    .iter()
                    .rev()
                    .fold(0u32, |acc, &c| ext.add(ext.mul(acc, cand), c));
                if v == 0 {
                    break cand;
                }
                cand = ext.mul(cand, gamma);
            };
            (0..s).map(|i| ext.pow(alpha, i as u64)).collect()
        };
        let mut emb = Embedding {
            sub: sub.clone(),
            ext: ext.clone(),
            basis,
            back: None,
        };
        if sub.order() <= TABLE_LIMIT && s > 1 {
            let back = sub.elements().map(|a| (emb.embed(a), a)).collect();
            emb.back = Some(back);
        }
        Ok(emb)
    }

    pub fn sub(&self) -> &Field {
        &self.sub
    }

    pub fn ext(&self) -> &Field {
        &self.ext
    }

    pub fn embed(&self, a: u32) -> u32 {
        if self.sub.r() == 1 {
            return a;
        }
        let coords = self.sub.coords(a);
        coords
            .iter()
            .zip(&self.basis)
            .fold(0, |acc, (&c, &b)| self.ext.add(acc, self.ext.mul(c, b)))
    }

    /// Inverse of [`embed`](Self::embed) on its image.
    pub fn project(&self, b: u32) -> Result<u32> {
        if self.sub.r() == 1 {
            return if b < self.sub.p() {
                Ok(b)
            } else {
                Err(Error::NotInSubfield)
            };
        }
        if let Some(back) = &self.back {
            return back.get(&b).copied().ok_or(Error::NotInSubfield);
        }
        self.solve(b)
    }

    /// Solves sum c_i basis_i = b over GF(p) by elimination.
    fn solve(&self, b: u32) -> Result<u32> {
        let p = self.ext.p() as u64;
        let t = self.ext.r() as usize;
        let s = self.sub.r() as usize;
        // t rows, s + 1 columns
        let mut m: Vec<Vec<u64>> = (0..t).map(|_| vec![0u64; s + 1]).collect();
        for (j, &col) in self.basis.iter().enumerate() {
            for (i, c) in self.ext.coords(col).into_iter().enumerate() {
                m[i][j] = c as u64;
            }
        }
        for (i, c) in self.ext.coords(b).into_iter().enumerate() {
            m[i][s] = c as u64;
        }
        let mut pivots = Vec::with_capacity(s);
        let mut row = 0;
        for col in 0..s {
            let Some(pr) = (row..t).find(|&i| m[i][col] != 0) else {
                continue;
            };
            m.swap(row, pr);
            let inv = super::pow_mod(m[row][col], p - 2, p);
            for v in m[row].iter_mut() {
                *v = *v * inv % p;
            }
            for i in 0..t {
                if i != row && m[i][col] != 0 {
                    let f = m[i][col];
                    for j in 0..=s {
                        m[i][j] = (m[i][j] + (p - f) * m[row][j]) % p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        if (row..t).any(|i| m[i][s] != 0) {
            return Err(Error::NotInSubfield);
        }
        let mut coords = vec![0u32; s];
        for (i, &col) in pivots.iter().enumerate() {
            coords[col] = m[i][s] as u32;
        }
        self.sub.from_coords(&coords)
    }
}

fn x_code(f: &Field) -> u32 {
    if f.r() == 1 {
        1
    } else {
        f.p()
    }
}

pub fn subfield_embed(sub: &Field, ext: &Field, a: u32) -> Result<u32> {
    Ok(Embedding::new(sub, ext)?.embed(a))
}

pub fn subfield_project(sub: &Field, ext: &Field, b: u32) -> Result<u32> {
    Embedding::new(sub, ext)?.project(b)
}
