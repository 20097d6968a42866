//! Dense linear algebra over GF(q) by Gaussian elimination.
//!
//! Elimination is deterministic: columns are scanned left to right and the
//! pivot in each column is the first row (top-down) with a nonzero entry.

use crate::gf::{Elem, Gf};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Elem>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, f: &Gf, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self, f: &Gf) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).unwrap();
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &Gf) -> usize {
        self.clone().rref(f).len()
    }

    /// Nullspace basis. Vector i sets the i-th free column (left to right) to
    /// one and the other free columns to zero.
    pub fn nullspace(&self, f: &Gf) -> Vec<Vec<Elem>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Elem::ZERO; self.cols];
                v[fc] = Elem::ONE;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, fc));
                }
                v
            })
            .collect()
    }

    /// Solves `self * x = b`. Returns a particular solution (free variables
    /// zero) and a nullspace basis, or `None` if inconsistent.
    pub fn solve_affine(&self, f: &Gf, b: &[Elem]) -> Option<AffineSolution> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (r, &br) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, br);
        }
        let pivots = aug.rref(f);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut particular = vec![Elem::ZERO; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            particular[pc] = aug.get(r, self.cols);
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let kernel = free
            .iter()
            .map(|&fc| {
                let mut v = vec![Elem::ZERO; self.cols];
                v[fc] = Elem::ONE;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(aug.get(r, fc));
                }
                v
            })
            .collect();
        Some(AffineSolution { particular, kernel })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Elem>,
    pub kernel: Vec<Vec<Elem>>,
}

impl AffineSolution {
    pub fn dimension(&self) -> usize {
        self.kernel.len()
    }

    /// Number of points, saturating at u128::MAX.
    pub fn size(&self, q: u32) -> u128 {
        (q as u128)
            .checked_pow(self.kernel.len() as u32)
            .unwrap_or(u128::MAX)
    }

    /// Reduced row echelon kernel basis and the particular solution reduced
    /// against it. Equal spaces have equal canonical forms.
    pub fn canonical(&self, f: &Gf) -> (Vec<Vec<Elem>>, Vec<Elem>) {
        let n = self.particular.len();
        if self.kernel.is_empty() {
            return (Vec::new(), self.particular.clone());
        }
        let mut m = Matrix::from_rows(self.kernel.clone());
        let pivots = m.rref(f);
        let basis: Vec<Vec<Elem>> = (0..pivots.len()).map(|r| m.row(r).to_vec()).collect();
        let mut p = self.particular.clone();
        for (row, &pc) in basis.iter().zip(&pivots) {
            let c = p[pc];
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                p[i] = f.sub(p[i], f.mul(c, row[i]));
            }
        }
        (basis, p)
    }

    pub fn same_space(&self, f: &Gf, other: &AffineSolution) -> bool {
        self.canonical(f) == other.canonical(f)
    }

    /// particular + sum coeffs[i] * kernel[i].
    pub fn point(&self, f: &Gf, coeffs: &[Elem]) -> Vec<Elem> {
        let mut v = self.particular.clone();
        for (k, &c) in self.kernel.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(k) {
                *x = f.add(*x, f.mul(c, y));
            }
        }
        v
    }
}
