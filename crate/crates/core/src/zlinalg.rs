//! Exact integer linear algebra: dense matrices over arbitrary-precision
//! integers, Hermite normal form, integer kernel bases and rank.
//!
//! Everything here is exact. Intermediate entries of a Hermite reduction can
//! grow beyond machine words, so all arithmetic goes through [`BigInt`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::Error;

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Build from machine-integer rows; panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        for r in rows {
            assert_eq!(r.len(), nc, "ragged rows");
        }
        IntMatrix::from_fn(nr, nc, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        IntMatrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = BigInt::zero();
            for k in 0..self.cols {
                acc += self.get(r, k) * other.get(k, c);
            }
            acc
        })
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |r, c| -self.get(r, c))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        IntMatrix::from_fn(self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.get(r, c).clone()
            } else {
                other.get(r - self.rows, c).clone()
            }
        })
    }

    /// Glue `other` to the right of `self`.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        IntMatrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn submatrix_rows(&self, rows: &[usize]) -> IntMatrix {
        IntMatrix::from_fn(rows.len(), self.cols, |r, c| self.get(rows[r], c).clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// row[dst] -= q * row[src]
    fn sub_scaled_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.get(dst, c) - q * self.get(src, c);
            self.set(dst, c, v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !a.get(r, k).is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
                a.set(i, k, BigInt::zero());
            }
            prev = a.get(k, k).clone();
        }
        let d = a.get(n - 1, n - 1).clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Convert to machine-integer rows, failing on overflow.
    pub fn to_i64_rows(&self) -> Result<Vec<Vec<i64>>, Error> {
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for c in 0..self.cols {
                row.push(i64::try_from(self.get(r, c)).map_err(|_| Error::EntryOverflow)?);
            }
            out.push(row);
        }
        Ok(out)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Row-style Hermite normal form.
///
/// Returns `(h, u)` with `u` unimodular and `u * m = h`, where `h` is in row
/// echelon form with positive pivots and entries above each pivot reduced
/// into `[0, pivot)`. The form is canonical, so repeated application is the
/// identity.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut pivot_row = 0;
    for col in 0..h.cols() {
        if pivot_row == h.rows() {
            break;
        }
        // Euclidean descent on the column until only the pivot survives.
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..h.rows() {
                if h.get(r, col).is_zero() {
                    continue;
                }
                best = match best {
                    Some(b) if h.get(b, col).abs() <= h.get(r, col).abs() => Some(b),
                    _ => Some(r),
                };
            }
            let Some(b) = best else {
                break;
            };
            h.swap_rows(pivot_row, b);
            u.swap_rows(pivot_row, b);
            let mut finished = true;
            let pivot = h.get(pivot_row, col).clone();
            for r in pivot_row + 1..h.rows() {
                if h.get(r, col).is_zero() {
                    continue;
                }
                let q = h.get(r, col).div_floor(&pivot);
                h.sub_scaled_row(r, pivot_row, &q);
                u.sub_scaled_row(r, pivot_row, &q);
                if !h.get(r, col).is_zero() {
                    finished = false;
                }
            }
            if finished {
                break;
            }
        }
        if h.get(pivot_row, col).is_zero() {
            continue;
        }
        if h.get(pivot_row, col).is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        let pivot = h.get(pivot_row, col).clone();
        for r in 0..pivot_row {
            let q = h.get(r, col).div_floor(&pivot);
            h.sub_scaled_row(r, pivot_row, &q);
            u.sub_scaled_row(r, pivot_row, &q);
        }
        pivot_row += 1;
    }
    (h, u)
}

fn nonzero_row_count(m: &IntMatrix) -> usize {
    (0..m.rows())
        .filter(|&r| (0..m.cols()).any(|c| !m.get(r, c).is_zero()))
        .count()
}

/// Rank over the rationals.
pub fn rank(m: &IntMatrix) -> usize {
    let (h, _) = hermite_normal_form(m);
    nonzero_row_count(&h)
}

/// Basis of the integer kernel `{ v : m * v = 0 }`, returned as a
/// `cols x k` matrix whose columns are the basis vectors.
///
/// The basis spans the saturated kernel lattice (every integer kernel vector
/// is an integer combination of the columns) and is canonicalized through a
/// second Hermite reduction, so the output is deterministic.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let mt = m.transpose();
    let (h, u) = hermite_normal_form(&mt);
    let r = nonzero_row_count(&h);
    let k = m.cols() - r;
    // Rows of u beyond the rank annihilate m^T, i.e. they span ker(m).
    let rows: Vec<usize> = (r..r + k).collect();
    let kernel_rows = u.submatrix_rows(&rows);
    let (canon, _) = hermite_normal_form(&kernel_rows);
    canon.transpose()
}

/// Solve `a * x = b` over the integers, where `a` has full column rank.
///
/// Returns `None` when no integer solution exists (including the
/// rank-deficient case, which cannot give a unique solution).
pub fn solve_exact(a: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    assert_eq!(a.rows(), b.rows(), "dimension mismatch in solve");
    let (h, u) = hermite_normal_form(a);
    let rhs = u.mul(b);
    let d = a.cols();
    // Pivot positions; with full column rank every column carries one.
    let mut pivots = Vec::new();
    for r in 0..h.rows() {
        if let Some(c) = (0..d).find(|&c| !h.get(r, c).is_zero()) {
            pivots.push((r, c));
        }
    }
    if pivots.len() != d {
        return None;
    }
    // Zero rows of h demand zero right-hand sides.
    for r in pivots.len()..h.rows() {
        for j in 0..rhs.cols() {
            if !rhs.get(r, j).is_zero() {
                return None;
            }
        }
    }
    let mut x = IntMatrix::zero(d, b.cols());
    for &(r, c) in pivots.iter().rev() {
        for j in 0..rhs.cols() {
            let mut acc = rhs.get(r, j).clone();
            for c2 in c + 1..d {
                acc -= h.get(r, c2) * x.get(c2, j);
            }
            let (q, rem) = acc.div_rem(h.get(r, c));
            if !rem.is_zero() {
                return None;
            }
            x.set(c, j, q);
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn assert_unimodular(u: &IntMatrix) {
        let d = u.det();
        assert!(d.abs().is_one(), "not unimodular, det = {}", d);
    }

    fn assert_hnf_shape(h: &IntMatrix) {
        let mut last_col: Option<usize> = None;
        for r in 0..h.rows() {
            let lead = (0..h.cols()).find(|&c| !h.get(r, c).is_zero());
            match lead {
                None => {
                    for r2 in r + 1..h.rows() {
                        assert!((0..h.cols()).all(|c| h.get(r2, c).is_zero()));
                    }
                    break;
                }
                Some(c) => {
                    if let Some(lc) = last_col {
                        assert!(c > lc, "pivots not strictly to the right");
                    }
                    last_col = Some(c);
                    let pivot = h.get(r, c);
                    assert!(pivot.is_positive(), "pivot not positive");
                    for r2 in 0..r {
                        let above = h.get(r2, c);
                        assert!(
                            !above.is_negative() && above < pivot,
                            "entry above pivot not reduced"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn hnf_identity_is_fixed() {
        let id = IntMatrix::identity(2);
        let (h, u) = hermite_normal_form(&id);
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn hnf_zero_matrix() {
        let z = IntMatrix::zero(3, 3);
        let (h, u) = hermite_normal_form(&z);
        assert_eq!(h, z);
        assert_eq!(u, IntMatrix::identity(3));
    }

    #[test]
    fn hnf_small_example() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![1, 3]]);
        let (h, u) = hermite_normal_form(&m);
        assert_eq!(u.mul(&m), h);
        assert_unimodular(&u);
        assert_hnf_shape(&h);
        // Canonical form of this lattice: rows (1,1) and (0,2).
        assert_eq!(h, IntMatrix::from_rows(&[vec![1, 1], vec![0, 2]]));
    }

    #[test]
    fn hnf_is_idempotent() {
        let m = IntMatrix::from_rows(&[vec![6, 5, 9], vec![4, 10, 11], vec![7, 5, 2]]);
        let (h, u) = hermite_normal_form(&m);
        assert_eq!(u.mul(&m), h);
        assert_unimodular(&u);
        let (h2, u2) = hermite_normal_form(&h);
        assert_eq!(h2, h);
        assert_eq!(u2, IntMatrix::identity(3));
    }

    #[test]
    fn kernel_of_bipartite_a3_transpose() {
        // B for the bipartite A3 seed; kernel of B^T is spanned by (1,0,-1).
        let b = IntMatrix::from_rows(&[vec![0, 1, 0], vec![-1, 0, -1], vec![0, 1, 0]]);
        let k = kernel_basis(&b.transpose());
        assert_eq!(k, IntMatrix::from_rows(&[vec![1], vec![0], vec![-1]]));
    }

    #[test]
    fn kernel_of_a2_is_empty() {
        let b = IntMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]);
        let k = kernel_basis(&b.transpose());
        assert_eq!(k.rows(), 2);
        assert_eq!(k.cols(), 0);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        for n in 1..5 {
            let k = kernel_basis(&IntMatrix::identity(n));
            assert_eq!(k.cols(), 0);
        }
    }

    #[test]
    fn rank_of_zero_and_bipartite_a5() {
        assert_eq!(rank(&IntMatrix::zero(3, 4)), 0);
        let b = IntMatrix::from_rows(&[
            vec![0, 1, 0, 0, 0],
            vec![-1, 0, -1, 0, 0],
            vec![0, 1, 0, 1, 0],
            vec![0, 0, -1, 0, -1],
            vec![0, 0, 0, 1, 0],
        ]);
        assert_eq!(rank(&b), 4);
        assert_eq!(kernel_basis(&b.transpose()).cols(), 1);
    }

    #[test]
    fn solve_exact_small() {
        let a = IntMatrix::from_rows(&[vec![1], vec![0], vec![-1]]);
        let b = IntMatrix::from_rows(&[vec![-2], vec![0], vec![2]]);
        let x = solve_exact(&a, &b).unwrap();
        assert_eq!(x, IntMatrix::from_rows(&[vec![-2]]));
        // 3 is not an integer multiple of 2 in the first coordinate.
        let b_bad = IntMatrix::from_rows(&[vec![3], vec![0], vec![-2]]);
        assert!(solve_exact(&a, &b_bad).is_none());
    }

    #[test]
    fn random_matrices_satisfy_kernel_and_rank_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let m = IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-4i64..=4)));
            let (h, u) = hermite_normal_form(&m);
            assert_eq!(u.mul(&m), h);
            assert_unimodular(&u);
            assert_hnf_shape(&h);
            let k = kernel_basis(&m);
            assert!(m.mul(&k).is_zero(), "m * kernel != 0");
            assert_eq!(rank(&m) + k.cols(), cols);
            // Determinism.
            assert_eq!(kernel_basis(&m), k);
        }
    }
}
