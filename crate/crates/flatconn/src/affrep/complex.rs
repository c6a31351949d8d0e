//! Invariant complex structures, stored without irrational entries, and
//! cyclic vectors splitting the space into orbit plus central line.
//!
//! A complex structure J commuting with the action may have an
//! irrational scale, but K = b J is rational whenever f-data is: K is
//! kept together with b^2, and every statement about J is restated for K
//! (J-invariance is K-invariance, J^2 = -I is K^2 = -b^2 I).

use super::envelope::commutant;
use super::meataxe::MeatAxeOptions;
use super::{as_scalar, ValidatedAffineRep};
use crate::liealg::Subalgebra;
use crate::ratlin::{rat_int, vecops, Matrix, Rational, Subspace};
use num::{Signed, Zero};

/// Rational matrix K with K^2 = -b^2 I and b^2 > 0, commuting with every
/// linear part of the owning representation; represents J = K / b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledComplexStructure {
    k_mat: Matrix,
    a: Rational,
    b_squared: Rational,
}

impl ScaledComplexStructure {
    /// Builds after verifying all invariants against the representation;
    /// None when any fails.
    pub fn verified(
        rep: &ValidatedAffineRep,
        k_mat: Matrix,
        a: Rational,
        b_squared: Rational,
    ) -> Option<Self> {
        if !b_squared.is_positive() {
            return None;
        }
        let d = rep.dim_v();
        if k_mat.rows() != d || k_mat.cols() != d {
            return None;
        }
        let square_ok = k_mat
            .mul(&k_mat)
            .add(&Matrix::identity(d).scale(&b_squared))
            .is_zero();
        if !square_ok {
            return None;
        }
        let commutes = rep.f_mats().iter().all(|f| k_mat.commutator(f).is_zero());
        commutes.then_some(ScaledComplexStructure { k_mat, a, b_squared })
    }

    pub fn k_mat(&self) -> &Matrix {
        &self.k_mat
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b_squared(&self) -> &Rational {
        &self.b_squared
    }
}

/// Searches the commutant for a non-scalar element whose minimal
/// polynomial is an irreducible quadratic with negative discriminant;
/// such an element is a shifted scaled complex structure. Absent for odd
/// dimension or when the deterministic sweep finds nothing.
pub fn find_scaled_complex_structure(
    rep: &ValidatedAffineRep,
    options: &MeatAxeOptions,
) -> Option<ScaledComplexStructure> {
    let d = rep.dim_v();
    if d % 2 != 0 {
        return None;
    }
    let comm = commutant(rep);
    let singles = comm.iter().cloned();
    let sums = comm.iter().enumerate().flat_map(|(i, a)| {
        comm.iter().skip(i + 1).map(move |b| a.add(b))
    });
    for c in singles.chain(sums).take(options.budget) {
        if as_scalar(&c).is_some() {
            continue;
        }
        let minpoly = c.minimal_polynomial();
        if minpoly.degree() != 2 {
            continue;
        }
        let p = minpoly.coeff(1);
        let q = minpoly.coeff(0);
        let discriminant = &p * &p - rat_int(4) * &q;
        if !discriminant.is_negative() {
            continue;
        }
        let a = -&p / rat_int(2);
        let b_squared = &q - &a * &a;
        let k_mat = c.sub(&Matrix::identity(d).scale(&a));
        if let Some(s) = ScaledComplexStructure::verified(rep, k_mat, a, b_squared) {
            return Some(s);
        }
    }
    None
}

/// The two halves of the cyclic splitting: the orbit of v0 under the
/// base algebra and the line through the central image of v0.
#[derive(Clone, Debug)]
pub struct CyclicDecomposition {
    pub base_orbit: Subspace,
    pub central_line: Subspace,
}

impl CyclicDecomposition {
    pub fn is_direct_and_full(&self, dim_v: usize) -> bool {
        self.base_orbit.direct_sum_check(&self.central_line)
            && self.base_orbit.sum(&self.central_line).dim() == dim_v
    }
}

/// Orbit-plus-line data for a candidate cyclic vector.
pub fn cyclic_decomposition(rep: &ValidatedAffineRep, v0: &[Rational]) -> CyclicDecomposition {
    let e = rep.e_index().expect("cyclic decomposition requires a designated central element");
    let d = rep.dim_v();
    let orbit_vectors: Vec<Vec<Rational>> = rep
        .base_indices()
        .iter()
        .map(|&i| rep.f_mats()[i].mul_vec(v0))
        .collect();
    CyclicDecomposition {
        base_orbit: Subspace::from_spanning(d, &orbit_vectors),
        central_line: Subspace::line(d, &rep.f_mats()[e].mul_vec(v0)),
    }
}

fn annihilated_by_k(rep: &ValidatedAffineRep, k: &Subalgebra, v: &[Rational]) -> bool {
    k.space()
        .basis()
        .iter()
        .all(|z| vecops::is_zero(&rep.f_of(z).mul_vec(v)))
}

fn qualifies(rep: &ValidatedAffineRep, k: &Subalgebra, v: &[Rational]) -> bool {
    !vecops::is_zero(v)
        && annihilated_by_k(rep, k, v)
        && cyclic_decomposition(rep, v).is_direct_and_full(rep.dim_v())
}

/// Finds a nonzero v0 with f(k) v0 = 0 whose base orbit and central line
/// split the space directly. Tries the constructive candidate first when
/// the central linear part has an irreducible quadratic minimal
/// polynomial, then a deterministic small-integer grid over the joint
/// kernel of f(k).
pub fn find_v0(rep: &ValidatedAffineRep, k: &Subalgebra) -> Option<Vec<Rational>> {
    let e = rep.e_index().expect("cyclic vector search requires a designated central element");
    let d = rep.dim_v();
    let f_e = &rep.f_mats()[e];

    // Constructive candidate: with f(E) = a I + b J the vector
    // (2a I - f(E)) q(E) / (a^2 + b^2) satisfies q(Y) = f(Y) v0 for all Y.
    let minpoly = f_e.minimal_polynomial();
    if minpoly.degree() == 2 {
        let p = minpoly.coeff(1);
        let q = minpoly.coeff(0);
        let discriminant = &p * &p - rat_int(4) * &q;
        if discriminant.is_negative() {
            let a = -&p / rat_int(2);
            let shifted = Matrix::identity(d).scale(&(rat_int(2) * &a)).sub(f_e);
            let scale = rat_int(1) / &q; // q = a^2 + b^2
            let candidate = vecops::scale(&shifted.mul_vec(&rep.q_column(e)), &scale);
            if qualifies(rep, k, &candidate) {
                return Some(candidate);
            }
        }
    }

    // Grid search over the joint kernel of the isotropy action.
    let mut joint = Subspace::full(d);
    for z in k.space().basis() {
        joint = joint.intersect(&rep.f_of(z).kernel());
        if joint.is_zero() {
            return None;
        }
    }
    let basis = joint.basis();
    let slots = basis.len().min(4);
    const COEFFS: [i64; 5] = [0, 1, -1, 2, -2];
    let mut counters = vec![0usize; slots];
    loop {
        // advance the odometer, first slot fastest
        let mut advanced = false;
        for c in counters.iter_mut() {
            *c += 1;
            if *c < COEFFS.len() {
                advanced = true;
                break;
            }
            *c = 0;
        }
        if !advanced {
            return None;
        }
        let mut v = vecops::zero(d);
        for (slot, &ci) in counters.iter().enumerate() {
            let coeff = rat_int(COEFFS[ci]);
            if !coeff.is_zero() {
                v = vecops::add(&v, &vecops::scale(&basis[slot], &coeff));
            }
        }
        debug_assert!(annihilated_by_k(rep, k, &v));
        if qualifies(rep, k, &v) {
            return Some(v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::test_reps::*;
    use super::*;
    use crate::liealg::unit;

    #[test]
    fn rotation_dilation_structure_is_the_rotation_part() {
        let rep = rotation_dilation();
        let s = find_scaled_complex_structure(&rep, &MeatAxeOptions::default()).unwrap();
        assert_eq!(s.a(), &rat_int(0));
        assert_eq!(s.b_squared(), &rat_int(1));
        let j0 = Matrix::from_i64(2, 2, &[0, -1, 1, 0]);
        assert!(s.k_mat() == &j0 || s.k_mat() == &j0.neg());
    }

    #[test]
    fn block_rep_has_no_invariant_complex_structure() {
        assert!(find_scaled_complex_structure(&gl2_block_rep(), &MeatAxeOptions::default())
            .is_none());
    }

    #[test]
    fn odd_dimension_is_absent_immediately() {
        assert!(
            find_scaled_complex_structure(&heisenberg_rep(), &MeatAxeOptions::default()).is_none()
        );
    }

    #[test]
    fn su2_central_structure_satisfies_all_invariants() {
        let rep = su2_central();
        let s = find_scaled_complex_structure(&rep, &MeatAxeOptions::default()).unwrap();
        assert!(s.b_squared().is_positive());
        let square = s.k_mat().mul(s.k_mat());
        assert_eq!(square, Matrix::identity(4).scale(&-s.b_squared().clone()));
        for f in rep.f_mats() {
            assert!(s.k_mat().commutator(f).is_zero());
        }
    }

    #[test]
    fn cyclic_vector_of_rotation_dilation_is_the_first_translation() {
        let rep = rotation_dilation();
        let k = Subalgebra::zero(rep.algebra());
        let v0 = find_v0(&rep, &k).unwrap();
        assert_eq!(v0, unit(2, 0)); // equals q(F)
        let dec = cyclic_decomposition(&rep, &v0);
        assert_eq!(dec.base_orbit, Subspace::line(2, &unit(2, 0)));
        assert_eq!(dec.central_line, Subspace::line(2, &unit(2, 1)));
    }

    #[test]
    fn cyclic_vector_of_su2_central_is_the_first_unit() {
        let rep = su2_central();
        let k = Subalgebra::zero(rep.algebra());
        let v0 = find_v0(&rep, &k).unwrap();
        assert_eq!(v0, unit(4, 0));
        let dec = cyclic_decomposition(&rep, &v0);
        assert_eq!(dec.base_orbit, Subspace::coordinate_plane(4, &[1, 2, 3]));
        assert_eq!(dec.central_line, Subspace::line(4, &unit(4, 0)));
        assert!(dec.is_direct_and_full(4));
    }
}
