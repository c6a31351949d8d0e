//! Matrix algebra generated by a representation, and its commutant.

use super::ValidatedAffineRep;
use crate::ratlin::{Matrix, Rational, Subspace};
use num::Zero;

/// Row-echelon span tracker for incremental independence tests on
/// vectorized matrices.
struct EchelonSpan {
    rows: Vec<Vec<Rational>>,
}

impl EchelonSpan {
    fn new() -> Self {
        EchelonSpan { rows: Vec::new() }
    }

    /// Reduces v against the stored rows; inserts and returns true when a
    /// nonzero remainder survives.
    fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        for row in &self.rows {
            let pivot = row.iter().position(|x| !x.is_zero()).expect("rows are nonzero");
            if !v[pivot].is_zero() {
                let factor = &v[pivot] / &row[pivot];
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi -= &factor * ri;
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                let idx = self
                    .rows
                    .iter()
                    .position(|r| {
                        r.iter().position(|x| !x.is_zero()).expect("nonzero") > pivot
                    })
                    .unwrap_or(self.rows.len());
                self.rows.insert(idx, v);
                true
            }
            None => false,
        }
    }
}

/// Basis of the unital associative algebra generated by the linear parts,
/// built breadth-first over products so the result is deterministic. The
/// identity is always the first element.
pub fn envelope(rep: &ValidatedAffineRep) -> Vec<Matrix> {
    let d = rep.dim_v();
    let identity = Matrix::identity(d);
    let mut span = EchelonSpan::new();
    span.insert(identity.vectorize());
    let mut basis = vec![identity];
    let mut cursor = 0;
    while cursor < basis.len() {
        let word = basis[cursor].clone();
        for gen in rep.f_mats() {
            let product = word.mul(gen);
            if span.insert(product.vectorize()) {
                basis.push(product);
            }
        }
        cursor += 1;
    }
    basis
}

/// Basis of {C : C f(X) = f(X) C for every basis X}, computed as the
/// kernel of the stacked commutation system. The output is canonical
/// because the kernel basis is.
pub fn commutant(rep: &ValidatedAffineRep) -> Vec<Matrix> {
    let d = rep.dim_v();
    let gens = rep.f_mats();
    let mut system = Matrix::zero(gens.len() * d * d, d * d);
    for (g, f) in gens.iter().enumerate() {
        for i in 0..d {
            for j in 0..d {
                let row = g * d * d + i * d + j;
                // entry (i, j) of C f - f C, coefficient of C_ab:
                // delta_ia f_bj - f_ia delta_bj
                for b in 0..d {
                    let cur = system.get(row, i * d + b) + f.get(b, j);
                    system.set(row, i * d + b, cur);
                }
                for a in 0..d {
                    let cur = system.get(row, a * d + j) - f.get(i, a);
                    system.set(row, a * d + j, cur);
                }
            }
        }
    }
    system
        .kernel()
        .basis()
        .iter()
        .map(|v| Matrix::from_vectorized(d, d, v.clone()))
        .collect()
}

/// True when the subspace is carried into itself by every linear part.
pub fn subspace_is_invariant(generators: &[Matrix], space: &Subspace) -> bool {
    generators
        .iter()
        .all(|g| space.basis().iter().all(|v| space.contains(&g.mul_vec(v))))
}
