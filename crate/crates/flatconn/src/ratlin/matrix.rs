//! Dense matrices over the rationals with exact elimination.

use super::subspace::Subspace;
use super::vecops;
use super::{RationalPolynomial, Rational};
use num::{One, Signed, Zero};
use std::fmt;

/// Row-major dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Output of reduced row echelon elimination.
#[derive(Clone, Debug)]
pub struct RrefResult {
    pub reduced: Matrix,
    pub pivot_columns: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vecops::zero(rows * cols))
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        assert!(!rows.is_empty(), "at least one row required");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let nrows = rows.len();
        Matrix::new(nrows, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_columns(ambient: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Matrix::zero(ambient, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), ambient, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    /// Builds from integer literals, row-major. Test and catalog helper.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix::new(
            rows,
            cols,
            entries.iter().map(|&n| super::rat_int(n)).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        vecops::is_zero(&self.entries)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::new(self.rows, self.cols, vecops::add(&self.entries, &other.entries))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::new(self.rows, self.cols, vecops::sub(&self.entries, &other.entries))
    }

    pub fn neg(&self) -> Matrix {
        Matrix::new(self.rows, self.cols, self.entries.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix::new(self.rows, self.cols, vecops::scale(&self.entries, c))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let cur = out.get(r, c) + a * b;
                        out.set(r, c, cur);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, x)| a * x)
                    .fold(Rational::zero(), |acc, t| acc + t)
            })
            .collect()
    }

    /// Commutator `self*other - other*self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    /// Flattens row-major into a vector; used to treat matrices as
    /// vectors when spanning matrix algebras.
    pub fn vectorize(&self) -> Vec<Rational> {
        self.entries.clone()
    }

    pub fn from_vectorized(rows: usize, cols: usize, v: Vec<Rational>) -> Matrix {
        Matrix::new(rows, cols, v)
    }

    /// Reduced row echelon form by exact Gauss-Jordan elimination.
    /// Partial pivoting picks the entry of smallest bit size to keep
    /// intermediate numerators small.
    pub fn rref(&self) -> RrefResult {
        let mut m = self.clone();
        let mut pivot_columns = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let candidate = (pivot_row..m.rows)
                .filter(|&r| !m.get(r, col).is_zero())
                .min_by_key(|&r| {
                    let x = m.get(r, col);
                    x.numer().abs().bits() + x.denom().bits()
                });
            let Some(r0) = candidate else { continue };
            m.swap_rows(pivot_row, r0);
            let inv = {
                let p = m.get(pivot_row, col).clone();
                Rational::one() / p
            };
            m.scale_row(pivot_row, &inv);
            for r in 0..m.rows {
                if r != pivot_row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    m.axpy_row(r, pivot_row, &-factor);
                }
            }
            pivot_columns.push(col);
            pivot_row += 1;
        }
        let rank = pivot_columns.len();
        RrefResult { reduced: m, pivot_columns, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Exact null space `{v : self * v = 0}`, in canonical form.
    pub fn kernel(&self) -> Subspace {
        let RrefResult { reduced, pivot_columns, .. } = self.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<Option<usize>> = {
            // pivot column -> which pivot row it belongs to
            let mut v = vec![None; self.cols];
            for (row, &col) in pivot_columns.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vecops::zero(self.cols);
            v[free] = Rational::one();
            for (col, &owner) in pivot_set.iter().enumerate() {
                if let Some(row) = owner {
                    v[col] = -reduced.get(row, free).clone();
                }
            }
            basis.push(v);
        }
        Subspace::from_spanning(self.cols, &basis)
    }

    /// One exact solution of `self * x = b`, if the system is consistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let RrefResult { reduced, pivot_columns, .. } = aug.rref();
        if pivot_columns.contains(&self.cols) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = vecops::zero(self.cols);
        for (row, &col) in pivot_columns.iter().enumerate() {
            x[col] = reduced.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Monic polynomial of least degree annihilating the matrix, found by
    /// iterating powers until they become linearly dependent.
    pub fn minimal_polynomial(&self) -> RationalPolynomial {
        assert!(self.is_square(), "minimal polynomial of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return RationalPolynomial::one();
        }
        let mut powers: Vec<Matrix> = vec![Matrix::identity(n)];
        loop {
            let k = powers.len();
            let next = powers.last().unwrap().mul(self);
            // Express vec(self^k) in the span of the earlier powers, if possible.
            let stacked = Matrix::from_columns(
                n * n,
                &powers.iter().map(Matrix::vectorize).collect::<Vec<_>>(),
            );
            if let Some(coeffs) = stacked.solve(&next.vectorize()) {
                // self^k = sum coeffs[i] self^i, so p(x) = x^k - sum coeffs[i] x^i.
                let mut poly = vec![Rational::zero(); k + 1];
                for (i, c) in coeffs.into_iter().enumerate() {
                    poly[i] = -c;
                }
                poly[k] = Rational::one();
                return RationalPolynomial::new(poly);
            }
            powers.push(next);
            assert!(powers.len() <= n + 1, "power iteration exceeded dimension bound");
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Rational) {
        for c in 0..self.cols {
            let v = self.get(r, c) * factor;
            self.set(r, c, v);
        }
    }

    /// row[target] += factor * row[source]
    fn axpy_row(&mut self, target: usize, source: usize, factor: &Rational) {
        for c in 0..self.cols {
            let add = self.get(source, c) * factor;
            if !add.is_zero() {
                let v = self.get(target, c) + add;
                self.set(target, c, v);
            }
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    #[test]
    fn rref_identity() {
        let m = Matrix::identity(3);
        let r = m.rref();
        assert_eq!(r.reduced, Matrix::identity(3));
        assert_eq!(r.pivot_columns, vec![0, 1, 2]);
        assert_eq!(r.rank, 3);
    }

    #[test]
    fn rref_dependent_rows() {
        let m = Matrix::from_i64(2, 2, &[1, 2, 2, 4]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_columns, vec![0]);
        assert_eq!(r.reduced.row(0), &[rat_int(1), rat_int(2)]);
        assert!(vecops::is_zero(r.reduced.row(1)));
    }

    // Brute-force Laplace determinant, used only as an oracle here.
    fn det(m: &Matrix) -> Rational {
        let n = m.rows();
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = Rational::zero();
        for c in 0..n {
            if m.get(0, c).is_zero() {
                continue;
            }
            let minor_rows: Vec<Vec<Rational>> = (1..n)
                .map(|r| {
                    (0..n)
                        .filter(|&cc| cc != c)
                        .map(|cc| m.get(r, cc).clone())
                        .collect()
                })
                .collect();
            let minor = Matrix::from_rows(minor_rows);
            let term = m.get(0, c) * det(&minor);
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn rref_full_rank_rotation_block_matrix() {
        // Linear action of the diagonal su(2) generator on R^4: two
        // orthogonal rotation blocks. Full rank, cross-checked against a
        // brute-force determinant.
        let f_h = Matrix::from_i64(
            4,
            4,
            &[
                0, -1, 0, 0, //
                1, 0, 0, 0, //
                0, 0, 0, 1, //
                0, 0, -1, 0,
            ],
        );
        assert!(!det(&f_h).is_zero());
        assert_eq!(f_h.rref().rank, 4);
    }

    #[test]
    fn kernel_zero_matrix_is_full() {
        let m = Matrix::zero(2, 2);
        let k = m.kernel();
        assert_eq!(k.dim(), 2);
        assert_eq!(k, Subspace::full(2));
    }

    #[test]
    fn kernel_of_block_projection() {
        // q maps the four gl(2) coordinates (E11, E21, E12, E22) onto the
        // first column block: q(E11)=e1, q(E21)=e2, q(E12)=q(E22)=0.
        let q = Matrix::from_i64(2, 4, &[1, 0, 0, 0, 0, 1, 0, 0]);
        let k = q.kernel();
        let expected = Subspace::from_spanning(
            4,
            &[
                vec![rat_int(0), rat_int(0), rat_int(1), rat_int(0)],
                vec![rat_int(0), rat_int(0), rat_int(0), rat_int(1)],
            ],
        );
        assert_eq!(k, expected);
    }

    #[test]
    fn kernel_of_bijective_map_is_zero() {
        // The su(2)+center translation map is bijective on R^4: columns
        // e2, -e3, e4, e1.
        let q = Matrix::from_i64(
            4,
            4,
            &[
                0, 0, 0, 1, //
                1, 0, 0, 0, //
                0, -1, 0, 0, //
                0, 0, 1, 0,
            ],
        );
        assert_eq!(q.kernel().dim(), 0);
        assert_eq!(q.rank(), 4);
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let id = Matrix::identity(3);
        let b = vec![rat_int(3), rat(1, 2), rat_int(-7)];
        assert_eq!(id.solve(&b).unwrap(), b);

        let m = Matrix::from_i64(2, 1, &[1, 1]);
        assert!(m.solve(&[rat_int(0), rat_int(1)]).is_none());
    }

    #[test]
    fn solve_recovers_cyclic_vector_of_plane_witness() {
        // Stack f(F) = I and f(E) = J0 over the rotation-dilation plane and
        // solve f(Y) v = q(Y) for both basis elements at once; the solution
        // is the cyclic vector e1.
        let stacked = Matrix::from_i64(
            4,
            2,
            &[
                1, 0, //
                0, 1, //
                0, -1, //
                1, 0,
            ],
        );
        let rhs = vec![rat_int(1), rat_int(0), rat_int(0), rat_int(1)];
        assert_eq!(stacked.solve(&rhs).unwrap(), vec![rat_int(1), rat_int(0)]);
    }

    #[test]
    fn minimal_polynomial_examples() {
        let id = Matrix::identity(4);
        assert_eq!(
            id.minimal_polynomial(),
            RationalPolynomial::from_i64(&[-1, 1]) // x - 1
        );

        let j0 = Matrix::from_i64(2, 2, &[0, -1, 1, 0]);
        assert_eq!(
            j0.minimal_polynomial(),
            RationalPolynomial::from_i64(&[1, 0, 1]) // x^2 + 1
        );

        // Nilpotent elementary matrix: E32 squares to zero.
        let e32 = Matrix::from_i64(3, 3, &[0, 0, 0, 0, 0, 0, 0, 1, 0]);
        assert!(e32.mul(&e32).is_zero());
        assert_eq!(
            e32.minimal_polynomial(),
            RationalPolynomial::from_i64(&[0, 0, 1]) // x^2
        );
    }

    #[test]
    fn solve_then_multiply_round_trip() {
        let m = Matrix::from_i64(3, 3, &[2, 1, 0, 0, 3, -1, 4, 0, 5]);
        let b = vec![rat_int(1), rat_int(2), rat_int(3)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
    }
}
