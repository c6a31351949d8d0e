//! Affine representations (f, q, V) of a Lie algebra and the membership
//! predicates built on them.
//!
//! An affine representation consists of a linear part f (one matrix per
//! basis element, extended by linearity) and a translation part q (a
//! dim V x dim g matrix) obeying the homomorphism and cocycle laws
//!
//!   [f(X), f(Y)] = f([X, Y])
//!   q([X, Y])    = f(X) q(Y) - f(Y) q(X)
//!
//! checked exactly over all basis pairs. Representations that pass the
//! gate become [`ValidatedAffineRep`] and feed the flat-structure
//! predicates: full-rank membership (surjective q with prescribed
//! kernel), the scalar-central condition, and the complex-structure
//! condition with a cyclic vector.

mod complex;
mod envelope;
mod meataxe;

pub use complex::{
    cyclic_decomposition, find_scaled_complex_structure, find_v0, CyclicDecomposition,
    ScaledComplexStructure,
};
pub use envelope::{commutant, envelope};
pub use meataxe::{
    is_irreducible, IrreducibilityStatus, IrreducibilityVerdict, MeatAxeOptions,
    NortonCertificate,
};

use crate::liealg::{Subalgebra, ValidatedLieAlgebra};
use crate::ratlin::{vecops, Matrix, Rational, Subspace};
use num::Zero;
use std::ops::Deref;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AffrepError {
    #[error("expected one linear-part matrix per basis element ({expected}), got {got}")]
    WrongMatrixCount { expected: usize, got: usize },
    #[error("linear-part matrix {index} is {rows}x{cols}, expected {dim_v}x{dim_v}")]
    WrongMatrixShape { index: usize, rows: usize, cols: usize, dim_v: usize },
    #[error("translation matrix is {rows}x{cols}, expected {dim_v}x{dim_g}")]
    WrongTranslationShape { rows: usize, cols: usize, dim_v: usize, dim_g: usize },
    #[error("central index {e_index} out of range for algebra dimension {dim_g}")]
    BadCentralIndex { e_index: usize, dim_g: usize },
    #[error("operation requires a designated central element but none is set")]
    MissingCentralElement,
}

#[derive(Clone, Debug)]
pub struct AffineRep {
    algebra: ValidatedLieAlgebra,
    dim_v: usize,
    f_mats: Vec<Matrix>,
    q_mat: Matrix,
    e_index: Option<usize>,
}

impl AffineRep {
    pub fn new(
        algebra: ValidatedLieAlgebra,
        dim_v: usize,
        f_mats: Vec<Matrix>,
        q_mat: Matrix,
        e_index: Option<usize>,
    ) -> Result<Self, AffrepError> {
        let dim_g = algebra.dim();
        if f_mats.len() != dim_g {
            return Err(AffrepError::WrongMatrixCount { expected: dim_g, got: f_mats.len() });
        }
        for (index, m) in f_mats.iter().enumerate() {
            if m.rows() != dim_v || m.cols() != dim_v {
                return Err(AffrepError::WrongMatrixShape {
                    index,
                    rows: m.rows(),
                    cols: m.cols(),
                    dim_v,
                });
            }
        }
        if q_mat.rows() != dim_v || q_mat.cols() != dim_g {
            return Err(AffrepError::WrongTranslationShape {
                rows: q_mat.rows(),
                cols: q_mat.cols(),
                dim_v,
                dim_g,
            });
        }
        if let Some(e) = e_index {
            if e >= dim_g {
                return Err(AffrepError::BadCentralIndex { e_index: e, dim_g });
            }
        }
        Ok(AffineRep { algebra, dim_v, f_mats, q_mat, e_index })
    }

    pub fn algebra(&self) -> &ValidatedLieAlgebra {
        &self.algebra
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn f_mats(&self) -> &[Matrix] {
        &self.f_mats
    }

    pub fn q_mat(&self) -> &Matrix {
        &self.q_mat
    }

    pub fn e_index(&self) -> Option<usize> {
        self.e_index
    }

    /// Linear part at an arbitrary algebra vector, by linearity.
    pub fn f_of(&self, x: &[Rational]) -> Matrix {
        assert_eq!(x.len(), self.algebra.dim(), "algebra vector length mismatch");
        let mut out = Matrix::zero(self.dim_v, self.dim_v);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.f_mats[i].scale(c));
            }
        }
        out
    }

    /// Translation part at an arbitrary algebra vector.
    pub fn q_of(&self, x: &[Rational]) -> Vec<Rational> {
        self.q_mat.mul_vec(x)
    }

    /// Translation part of the i-th basis element.
    pub fn q_column(&self, i: usize) -> Vec<Rational> {
        self.q_mat.column(i)
    }

    /// Both defining laws over all basis pairs; failures carry the pair
    /// and the exact residuals.
    pub fn check(&self) -> AffineRepReport {
        let dim_g = self.algebra.dim();
        let mut failures = Vec::new();
        for i in 0..dim_g {
            for j in (i + 1)..dim_g {
                let bracket = self.algebra.basis_bracket(i, j);
                let hom_residual = self.f_mats[i]
                    .commutator(&self.f_mats[j])
                    .sub(&self.f_of(&bracket));
                let cocycle_residual = vecops::sub(
                    &self.q_of(&bracket),
                    &vecops::sub(
                        &self.f_mats[i].mul_vec(&self.q_column(j)),
                        &self.f_mats[j].mul_vec(&self.q_column(i)),
                    ),
                );
                let hom_ok = hom_residual.is_zero();
                let cocycle_ok = vecops::is_zero(&cocycle_residual);
                if !hom_ok || !cocycle_ok {
                    failures.push(AffineRepFailure {
                        pair: (i, j),
                        labels: (
                            self.algebra.basis_labels()[i].clone(),
                            self.algebra.basis_labels()[j].clone(),
                        ),
                        hom_residual: (!hom_ok).then_some(hom_residual),
                        cocycle_residual: (!cocycle_ok).then_some(cocycle_residual),
                    });
                }
            }
        }
        AffineRepReport { failures }
    }

    pub fn validate(self) -> Result<ValidatedAffineRep, AffineRepReport> {
        let report = self.check();
        if report.passed() {
            Ok(ValidatedAffineRep { inner: Arc::new(self) })
        } else {
            Err(report)
        }
    }
}

/// A basis pair violating one of the two defining laws.
#[derive(Clone, Debug)]
pub struct AffineRepFailure {
    pub pair: (usize, usize),
    pub labels: (String, String),
    /// [f(X), f(Y)] - f([X, Y]) when nonzero.
    pub hom_residual: Option<Matrix>,
    /// q([X, Y]) - f(X)q(Y) + f(Y)q(X) when nonzero.
    pub cocycle_residual: Option<Vec<Rational>>,
}

#[derive(Clone, Debug)]
pub struct AffineRepReport {
    pub failures: Vec<AffineRepFailure>,
}

impl AffineRepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// An affine representation that passed both defining laws.
#[derive(Clone, Debug)]
pub struct ValidatedAffineRep {
    inner: Arc<AffineRep>,
}

impl Deref for ValidatedAffineRep {
    type Target = AffineRep;

    fn deref(&self) -> &AffineRep {
        &self.inner
    }
}

impl ValidatedAffineRep {
    /// Central element of the linear part, when designated.
    pub fn f_central(&self) -> Result<&Matrix, AffrepError> {
        let e = self.e_index.ok_or(AffrepError::MissingCentralElement)?;
        Ok(&self.f_mats[e])
    }

    /// Translation of the central element, when designated.
    pub fn q_central(&self) -> Result<Vec<Rational>, AffrepError> {
        let e = self.e_index.ok_or(AffrepError::MissingCentralElement)?;
        Ok(self.q_column(e))
    }

    /// Indices of the base-algebra part (everything except the central
    /// line); equals all indices when no central element is designated.
    pub fn base_indices(&self) -> Vec<usize> {
        (0..self.algebra.dim())
            .filter(|&i| Some(i) != self.e_index)
            .collect()
    }
}

/// Full-rank membership: q surjective, kernel exactly the given
/// subalgebra, and dim V accounts for the quotient dimension.
#[derive(Clone, Debug)]
pub struct MembershipReport {
    pub surjective: bool,
    pub kernel: Subspace,
    pub kernel_matches: bool,
    pub expected_dim_v: usize,
    pub dim_ok: bool,
}

impl MembershipReport {
    pub fn passed(&self) -> bool {
        self.surjective && self.kernel_matches && self.dim_ok
    }
}

pub fn check_f_membership(rep: &ValidatedAffineRep, k: &Subalgebra) -> MembershipReport {
    let kernel = rep.q_mat().kernel();
    let surjective = rep.q_mat().rank() == rep.dim_v();
    let kernel_matches = &kernel == k.space();
    let expected_dim_v = rep.algebra().dim() - k.dim();
    let dim_ok = rep.dim_v() == expected_dim_v;
    MembershipReport { surjective, kernel, kernel_matches, expected_dim_v, dim_ok }
}

/// Scalar-central membership: full-rank membership plus f(E) = c I with
/// c nonzero and q(E) nonzero.
#[derive(Clone, Debug)]
pub struct ScalarCentralReport {
    pub membership: MembershipReport,
    /// c with f(E) = c I, when the central linear part is scalar.
    pub scalar: Option<Rational>,
    pub q_e_nonzero: bool,
}

impl ScalarCentralReport {
    pub fn passed(&self) -> bool {
        self.membership.passed()
            && self.scalar.as_ref().is_some_and(|c| !c.is_zero())
            && self.q_e_nonzero
    }
}

/// Decides membership in the projectively-flat family: q has full rank
/// with kernel k, the central element acts as a nonzero scalar, and its
/// translation is nonzero.
pub fn is_pf(rep: &ValidatedAffineRep, k: &Subalgebra) -> Result<ScalarCentralReport, AffrepError> {
    let f_e = rep.f_central()?;
    let q_e = rep.q_central()?;
    let membership = check_f_membership(rep, k);
    let scalar = as_scalar(f_e);
    let q_e_nonzero = !vecops::is_zero(&q_e);
    Ok(ScalarCentralReport { membership, scalar, q_e_nonzero })
}

/// c such that m = c I, if any.
pub(crate) fn as_scalar(m: &Matrix) -> Option<Rational> {
    debug_assert!(m.is_square());
    let c = m.get(0, 0).clone();
    let candidate = Matrix::identity(m.rows()).scale(&c);
    (&candidate == m).then_some(c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Undetermined,
}

/// Class-II membership: irreducible, dim V = dim M + 1, an invariant
/// complex structure exists, and a cyclic vector splits V into the
/// base-algebra orbit plus the central orbit line.
#[derive(Clone, Debug)]
pub struct ClassIiReport {
    pub status: CheckStatus,
    pub irreducibility: IrreducibilityVerdict,
    pub dim_ok: bool,
    pub structure: Option<ScaledComplexStructure>,
    pub v0: Option<Vec<Rational>>,
    pub diagnostics: Vec<String>,
}

impl ClassIiReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

pub fn is_class_ii(
    rep: &ValidatedAffineRep,
    k: &Subalgebra,
    dim_m: usize,
    options: &MeatAxeOptions,
) -> Result<ClassIiReport, AffrepError> {
    rep.f_central()?;
    let irreducibility = is_irreducible(rep, options);
    let dim_ok = rep.dim_v() == dim_m + 1;
    let mut diagnostics = Vec::new();
    if let IrreducibilityStatus::Undetermined = irreducibility.status {
        diagnostics.push("irreducibility undetermined within the configured budget".to_string());
        return Ok(ClassIiReport {
            status: CheckStatus::Undetermined,
            irreducibility,
            dim_ok,
            structure: None,
            v0: None,
            diagnostics,
        });
    }
    let irreducible = irreducibility.status == IrreducibilityStatus::Irreducible;
    if !irreducible {
        diagnostics.push("representation is reducible".to_string());
    }
    if !dim_ok {
        diagnostics.push(format!(
            "dim V = {} but the quotient dimension requires {}",
            rep.dim_v(),
            dim_m + 1
        ));
    }
    let structure = find_scaled_complex_structure(rep, options);
    if structure.is_none() {
        diagnostics.push("no invariant complex structure found".to_string());
    }
    let v0 = find_v0(rep, k);
    if v0.is_none() {
        diagnostics.push("no cyclic vector found in the search grid".to_string());
    }
    let pass = irreducible && dim_ok && structure.is_some() && v0.is_some();
    Ok(ClassIiReport {
        status: if pass { CheckStatus::Pass } else { CheckStatus::Fail },
        irreducibility,
        dim_ok,
        structure,
        v0,
        diagnostics,
    })
}
