//! Canonical subspaces of rational coordinate space.
//!
//! A subspace is stored as the unique reduced-echelon basis of its span,
//! so two subspaces are equal exactly when their representations are
//! entry-wise equal. This makes exact regression assertions possible.

use super::matrix::Matrix;
use super::vecops;
use super::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    /// Linearly independent vectors in reduced echelon form (the nonzero
    /// rows of the RREF of any spanning set).
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn from_spanning(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "spanning vector length mismatch");
        }
        let nonzero: Vec<Vec<Rational>> = vectors
            .iter()
            .filter(|v| !vecops::is_zero(v))
            .cloned()
            .collect();
        if nonzero.is_empty() {
            return Subspace { ambient_dim, basis: Vec::new() };
        }
        let reduced = Matrix::from_rows(nonzero).rref();
        let basis = (0..reduced.rank)
            .map(|r| reduced.reduced.row(r).to_vec())
            .collect();
        Subspace { ambient_dim, basis }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let id = Matrix::identity(ambient_dim);
        let basis = (0..ambient_dim).map(|r| id.row(r).to_vec()).collect();
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Ambient x dim matrix whose columns are the basis vectors.
    pub fn as_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient_dim, &self.basis)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        if vecops::is_zero(v) {
            return true;
        }
        if self.basis.is_empty() {
            return false;
        }
        self.as_matrix().solve(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimension mismatch");
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.ambient_dim, &all)
    }

    /// Intersection computed from the kernel of the stacked basis matrix
    /// [A | -B]: a kernel vector (x, y) identifies A x = B y, a point of
    /// the intersection.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimension mismatch");
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient_dim);
        }
        let a = self.as_matrix();
        let b = other.as_matrix();
        let mut stacked = Matrix::zero(self.ambient_dim, a.cols() + b.cols());
        for r in 0..self.ambient_dim {
            for c in 0..a.cols() {
                stacked.set(r, c, a.get(r, c).clone());
            }
            for c in 0..b.cols() {
                stacked.set(r, a.cols() + c, -b.get(r, c).clone());
            }
        }
        let kernel = stacked.kernel();
        let points: Vec<Vec<Rational>> = kernel
            .basis()
            .iter()
            .map(|k| a.mul_vec(&k[..a.cols()]))
            .collect();
        Subspace::from_spanning(self.ambient_dim, &points)
    }

    /// True when the sum is direct: dim(A+B) = dim A + dim B and the
    /// intersection is zero. Both conditions are checked exactly.
    pub fn direct_sum_check(&self, other: &Subspace) -> bool {
        let dims_add = self.sum(other).dim() == self.dim() + other.dim();
        let trivial_meet = self.intersect(other).is_zero();
        dims_add && trivial_meet
    }

    /// Smallest subspace containing the seeds and invariant under every
    /// generator, by repeated application until the dimension stabilizes.
    pub fn spin(generators: &[Matrix], seeds: &[Vec<Rational>]) -> Subspace {
        let ambient = if let Some(g) = generators.first() {
            assert!(g.is_square(), "generators must be square");
            g.rows()
        } else if let Some(s) = seeds.first() {
            s.len()
        } else {
            return Subspace::zero(0);
        };
        for g in generators {
            assert_eq!(g.rows(), ambient, "generator size mismatch");
            assert!(g.is_square(), "generators must be square");
        }
        let mut current = Subspace::from_spanning(ambient, seeds);
        loop {
            let mut images: Vec<Vec<Rational>> = current.basis.clone();
            for g in generators {
                for v in current.basis() {
                    images.push(g.mul_vec(v));
                }
            }
            let next = Subspace::from_spanning(ambient, &images);
            if next.dim() == current.dim() {
                return next;
            }
            current = next;
        }
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of {}) [", self.dim(), self.ambient_dim)?;
        for v in &self.basis {
            let row: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            write!(f, " [{}]", row.join(", "))?;
        }
        write!(f, " ]")
    }
}

/// Convenience: coordinate vector e_i of the ambient space.
pub(crate) fn unit_vector(ambient: usize, i: usize) -> Vec<Rational> {
    let mut v = vecops::zero(ambient);
    v[i] = num::One::one();
    v
}

impl Subspace {
    pub fn line(ambient: usize, v: &[Rational]) -> Subspace {
        Subspace::from_spanning(ambient, &[v.to_vec()])
    }

    pub fn coordinate_plane(ambient: usize, axes: &[usize]) -> Subspace {
        let vectors: Vec<Vec<Rational>> =
            axes.iter().map(|&i| unit_vector(ambient, i)).collect();
        Subspace::from_spanning(ambient, &vectors)
    }
}
