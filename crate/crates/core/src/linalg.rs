//! Row spaces over a finite field, kept in reduced row echelon form.

use crate::field::Field;

#[derive(Clone, Debug)]
pub struct RowSpace {
    field: Field,
    cols: usize,
    /// Each row has a 1 at its pivot and 0 at every other row's pivot.
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(field: &Field, cols: usize) -> RowSpace {
        RowSpace {
            field: field.clone(),
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<'a>(field: &Field, cols: usize, rows: impl IntoIterator<Item = &'a Vec<u32>>) -> RowSpace {
        let mut s = RowSpace::new(field, cols);
        for r in rows {
            s.insert(r);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// v minus its projection onto the span along the pivot columns.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length");
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let t = v[c];
            if t != 0 {
                for (x, &b) in v.iter_mut().zip(row) {
                    if b != 0 {
                        *x = f.sub(*x, f.mul(t, b));
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }

    pub fn contains_space(&self, other: &RowSpace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Adds v to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let mut v = self.reduce(v);
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = &self.field;
        let inv = f.inv(v[c]).expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let t = row[c];
            if t != 0 {
                for (x, &b) in row.iter_mut().zip(&v) {
                    if b != 0 {
                        *x = f.sub(*x, f.mul(t, b));
                    }
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(c);
        true
    }

    /// Basis of {x : <row, x> = 0 for every row}, standard dot product.
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&j| !is_pivot[j])
            .map(|j| {
                let mut x = vec![0u32; self.cols];
                x[j] = 1;
                for (row, &c) in self.rows.iter().zip(&self.pivots) {
                    x[c] = f.neg(row[j]);
                }
                x
            })
            .collect()
    }
}

pub fn rank(field: &Field, cols: usize, rows: &[Vec<u32>]) -> usize {
    RowSpace::from_rows(field, cols, rows).rank()
}

pub fn dot(field: &Field, u: &[u32], v: &[u32]) -> u32 {
    u.iter().zip(v).fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
}
