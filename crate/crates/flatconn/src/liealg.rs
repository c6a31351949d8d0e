//! Lie algebras by structure constants.
//!
//! Brackets are stored sparsely for index pairs i < j only; the opposite
//! orientation is derived, so antisymmetry cannot be violated by input.
//! Anything downstream of this module refuses an algebra that has not
//! passed the Jacobi gate, which is what [`ValidatedLieAlgebra`] encodes.

use crate::ratlin::{vecops, Rational, Subspace};
use num::Zero;
use std::collections::BTreeMap;
use std::ops::Deref;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("vector length {got} does not match algebra dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("bracket index pair ({i}, {j}) out of range or not increasing for dimension {dim}")]
    BadBracketIndex { i: usize, j: usize, dim: usize },
    #[error("bracket target index {k} out of range for dimension {dim}")]
    BadTargetIndex { k: usize, dim: usize },
    #[error("basis label count {got} does not match dimension {expected}")]
    BadLabelCount { expected: usize, got: usize },
}

/// Sparse bracket table: (i, j) with i < j maps to the expansion of
/// [e_i, e_j] in the basis, as (index, coefficient) terms.
pub type BracketTable = BTreeMap<(usize, usize), Vec<(usize, Rational)>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    basis_labels: Vec<String>,
    brackets: BracketTable,
}

/// One failing Jacobi triple with its nonzero residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiFailure {
    pub triple: (usize, usize, usize),
    pub labels: (String, String, String),
    pub residual: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    pub failures: Vec<JacobiFailure>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl LieAlgebra {
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        basis_labels: Vec<String>,
        brackets: BracketTable,
    ) -> Result<Self, LieError> {
        if basis_labels.len() != dim {
            return Err(LieError::BadLabelCount { expected: dim, got: basis_labels.len() });
        }
        let mut cleaned: BracketTable = BTreeMap::new();
        for ((i, j), terms) in brackets {
            if i >= j || j >= dim {
                return Err(LieError::BadBracketIndex { i, j, dim });
            }
            let mut collected: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, c) in terms {
                if k >= dim {
                    return Err(LieError::BadTargetIndex { k, dim });
                }
                *collected.entry(k).or_insert_with(Rational::zero) += c;
            }
            let terms: Vec<(usize, Rational)> = collected
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !terms.is_empty() {
                cleaned.insert((i, j), terms);
            }
        }
        Ok(LieAlgebra { name: name.into(), dim, basis_labels, brackets: cleaned })
    }

    /// Abelian algebra of the given dimension.
    pub fn abelian(name: impl Into<String>, labels: Vec<String>) -> Self {
        let dim = labels.len();
        LieAlgebra::new(name, dim, labels, BTreeMap::new()).expect("abelian input is well formed")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn brackets(&self) -> &BracketTable {
        &self.brackets
    }

    /// [e_i, e_j] as a coordinate vector, any index order.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut out = vecops::zero(self.dim);
        if i == j {
            return out;
        }
        let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
        if let Some(terms) = self.brackets.get(&(a, b)) {
            for (k, c) in terms {
                out[*k] = if sign == 1 { c.clone() } else { -c.clone() };
            }
        }
        out
    }

    /// Bilinear bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, LieError> {
        if x.len() != self.dim {
            return Err(LieError::DimensionMismatch { expected: self.dim, got: x.len() });
        }
        if y.len() != self.dim {
            return Err(LieError::DimensionMismatch { expected: self.dim, got: y.len() });
        }
        let mut out = vecops::zero(self.dim);
        for ((i, j), terms) in &self.brackets {
            let coeff = &x[*i] * &y[*j] - &x[*j] * &y[*i];
            if coeff.is_zero() {
                continue;
            }
            for (k, c) in terms {
                out[*k] += &coeff * c;
            }
        }
        Ok(out)
    }

    /// Jacobi identity over all basis triples; failing triples are
    /// reported with their residuals.
    pub fn check_jacobi(&self) -> JacobiReport {
        let mut failures = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let ei = unit(self.dim, i);
                    let ej = unit(self.dim, j);
                    let ek = unit(self.dim, k);
                    let t1 = self
                        .bracket(&self.basis_bracket(i, j), &ek)
                        .expect("dimension is consistent");
                    let t2 = self
                        .bracket(&self.basis_bracket(j, k), &ei)
                        .expect("dimension is consistent");
                    let t3 = self
                        .bracket(&self.basis_bracket(k, i), &ej)
                        .expect("dimension is consistent");
                    let residual = vecops::add(&vecops::add(&t1, &t2), &t3);
                    if !vecops::is_zero(&residual) {
                        failures.push(JacobiFailure {
                            triple: (i, j, k),
                            labels: (
                                self.basis_labels[i].clone(),
                                self.basis_labels[j].clone(),
                                self.basis_labels[k].clone(),
                            ),
                            residual,
                        });
                    }
                }
            }
        }
        JacobiReport { failures }
    }

    /// Jacobi gate: the only way to obtain a [`ValidatedLieAlgebra`].
    pub fn validate(self) -> Result<ValidatedLieAlgebra, JacobiReport> {
        let report = self.check_jacobi();
        if report.passed() {
            Ok(ValidatedLieAlgebra { inner: Arc::new(self) })
        } else {
            Err(report)
        }
    }

    /// True iff [v, e_i] = 0 for every basis element.
    pub fn is_central(&self, v: &[Rational]) -> Result<bool, LieError> {
        if v.len() != self.dim {
            return Err(LieError::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        for i in 0..self.dim {
            let b = self.bracket(v, &unit(self.dim, i))?;
            if !vecops::is_zero(&b) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub(crate) fn unit(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vecops::zero(dim);
    v[i] = num::One::one();
    v
}

/// A Lie algebra that has passed the Jacobi gate. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidatedLieAlgebra {
    inner: Arc<LieAlgebra>,
}

impl Deref for ValidatedLieAlgebra {
    type Target = LieAlgebra;

    fn deref(&self) -> &LieAlgebra {
        &self.inner
    }
}

/// One bracket of subspace basis vectors that escapes the subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureFailure {
    pub pair: (usize, usize),
    pub bracket: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraReport {
    pub failures: Vec<ClosureFailure>,
}

impl SubalgebraReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Closure of a subspace under the ambient bracket.
pub fn check_subalgebra(algebra: &ValidatedLieAlgebra, space: &Subspace) -> SubalgebraReport {
    assert_eq!(space.ambient_dim(), algebra.dim(), "subspace lives in the wrong space");
    let mut failures = Vec::new();
    let basis = space.basis();
    for (a, x) in basis.iter().enumerate() {
        for (b, y) in basis.iter().enumerate().skip(a + 1) {
            let bracket = algebra.bracket(x, y).expect("dimensions agree");
            if !space.contains(&bracket) {
                failures.push(ClosureFailure { pair: (a, b), bracket });
            }
        }
    }
    SubalgebraReport { failures }
}

/// A subspace certified closed under the parent bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    algebra: ValidatedLieAlgebra,
    space: Subspace,
}

impl Subalgebra {
    pub fn new(algebra: &ValidatedLieAlgebra, space: Subspace) -> Result<Self, SubalgebraReport> {
        let report = check_subalgebra(algebra, &space);
        if report.passed() {
            Ok(Subalgebra { algebra: algebra.clone(), space })
        } else {
            Err(report)
        }
    }

    pub fn zero(algebra: &ValidatedLieAlgebra) -> Self {
        Subalgebra {
            algebra: algebra.clone(),
            space: Subspace::zero(algebra.dim()),
        }
    }

    pub fn algebra(&self) -> &ValidatedLieAlgebra {
        &self.algebra
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// g extended by a central line: dim + 1 basis elements, the new one
/// bracketing to zero against everything.
#[derive(Clone, Debug)]
pub struct CentralExtension {
    base: ValidatedLieAlgebra,
    extended: ValidatedLieAlgebra,
    e_index: usize,
}

impl CentralExtension {
    pub fn new(base: &ValidatedLieAlgebra) -> Self {
        Self::with_label(base, "E")
    }

    pub fn with_label(base: &ValidatedLieAlgebra, e_label: &str) -> Self {
        let mut labels = base.basis_labels().to_vec();
        labels.push(e_label.to_string());
        let extended = LieAlgebra::new(
            format!("{}+center", base.name()),
            base.dim() + 1,
            labels,
            base.brackets().clone(),
        )
        .expect("extension of a valid table is well formed")
        .validate()
        .expect("central extension preserves the Jacobi identity");
        CentralExtension { base: base.clone(), extended, e_index: base.dim() }
    }

    pub fn base(&self) -> &ValidatedLieAlgebra {
        &self.base
    }

    pub fn extended(&self) -> &ValidatedLieAlgebra {
        &self.extended
    }

    pub fn e_index(&self) -> usize {
        self.e_index
    }
}

#[cfg(test)]
pub(crate) mod test_algebras {
    use super::*;
    use crate::ratlin::rat_int;

    pub fn heisenberg() -> LieAlgebra {
        let mut table = BracketTable::new();
        table.insert((0, 1), vec![(2, rat_int(1))]);
        LieAlgebra::new(
            "heisenberg",
            3,
            vec!["X".into(), "Y".into(), "Z".into()],
            table,
        )
        .unwrap()
    }

    /// gl(n) in the elementary-matrix basis E_ab, ordered row-major by
    /// (a, b); structure constants from [E_ab, E_cd] = d_bc E_ad - d_da E_cb.
    pub fn gl_elementary(n: usize) -> LieAlgebra {
        let idx = |a: usize, b: usize| a * n + b;
        let mut table = BracketTable::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let (i, j) = (idx(a, b), idx(c, d));
                        if i >= j {
                            continue;
                        }
                        let mut terms: Vec<(usize, Rational)> = Vec::new();
                        if b == c {
                            terms.push((idx(a, d), rat_int(1)));
                        }
                        if d == a {
                            terms.push((idx(c, b), rat_int(-1)));
                        }
                        if !terms.is_empty() {
                            table.insert((i, j), terms);
                        }
                    }
                }
            }
        }
        let labels = (0..n)
            .flat_map(|a| (0..n).map(move |b| format!("E{}{}", a + 1, b + 1)))
            .collect();
        LieAlgebra::new(format!("gl({n})"), n * n, labels, table).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::test_algebras::{gl_elementary, heisenberg};
    use super::*;
    use crate::ratlin::{rat, rat_int, Matrix};
    use proptest::prelude::*;

    fn unit(dim: usize, i: usize) -> Vec<Rational> {
        super::unit(dim, i)
    }

    #[test]
    fn bracket_with_itself_vanishes() {
        let h = heisenberg();
        let x = vec![rat_int(2), rat(1, 3), rat_int(-1)];
        assert!(vecops::is_zero(&h.bracket(&x, &x).unwrap()));
    }

    #[test]
    fn heisenberg_defining_bracket() {
        let h = heisenberg();
        let b = h.bracket(&unit(3, 0), &unit(3, 1)).unwrap();
        assert_eq!(b, unit(3, 2));
        // Cross-check against the commutator of the unipotent generators.
        let x = Matrix::from_i64(3, 3, &[0, 1, 0, 0, 0, 0, 0, 0, 0]);
        let y = Matrix::from_i64(3, 3, &[0, 0, 0, 0, 0, 1, 0, 0, 0]);
        let z = Matrix::from_i64(3, 3, &[0, 0, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(x.commutator(&y), z);
    }

    #[test]
    fn gl2_bracket_of_elementary_matrices() {
        let gl2 = gl_elementary(2);
        // order: E11=0, E12=1, E21=2, E22=3; [E11, E21] = -E21
        let b = gl2.bracket(&unit(4, 0), &unit(4, 2)).unwrap();
        let mut expected = vecops::zero(4);
        expected[2] = rat_int(-1);
        assert_eq!(b, expected);
    }

    #[test]
    fn jacobi_passes_for_abelian_and_matrix_algebras() {
        assert!(LieAlgebra::abelian("r2", vec!["a".into(), "b".into()])
            .check_jacobi()
            .passed());
        assert!(gl_elementary(3).check_jacobi().passed());
        assert!(heisenberg().check_jacobi().passed());
    }

    #[test]
    fn jacobi_fails_for_corrupted_heisenberg() {
        // Inject [X, Z] = X on top of [X, Y] = Z.
        let mut table = BracketTable::new();
        table.insert((0, 1), vec![(2, rat_int(1))]);
        table.insert((0, 2), vec![(0, rat_int(1))]);
        let bad = LieAlgebra::new(
            "corrupted",
            3,
            vec!["X".into(), "Y".into(), "Z".into()],
            table,
        )
        .unwrap();
        let report = bad.check_jacobi();
        assert_eq!(report.failures.len(), 1);
        let failure = &report.failures[0];
        assert_eq!(failure.triple, (0, 1, 2));
        assert_eq!(
            failure.labels,
            ("X".to_string(), "Y".to_string(), "Z".to_string())
        );
        assert!(!vecops::is_zero(&failure.residual));
        assert!(bad.validate().is_err());
    }

    #[test]
    fn subalgebra_closure_check() {
        let gl2 = gl_elementary(2).validate().unwrap();
        // k = span{E12, E22} (indices 1, 3) is closed.
        let k = Subspace::coordinate_plane(4, &[1, 3]);
        assert!(check_subalgebra(&gl2, &k).passed());
        assert!(Subalgebra::new(&gl2, k).is_ok());
        // zero subspace is trivially closed
        assert!(check_subalgebra(&gl2, &Subspace::zero(4)).passed());
        // span{E12, E21} is not: [E12, E21] = E11 - E22 escapes.
        let bad = Subspace::coordinate_plane(4, &[1, 2]);
        let report = check_subalgebra(&gl2, &bad);
        assert_eq!(report.failures.len(), 1);
        let mut expected = vecops::zero(4);
        expected[0] = rat_int(1);
        expected[3] = rat_int(-1);
        assert_eq!(report.failures[0].bracket, expected);
    }

    #[test]
    fn central_extension_adds_a_central_line() {
        let h = heisenberg().validate().unwrap();
        let ext = CentralExtension::new(&h);
        assert_eq!(ext.extended().dim(), 4);
        assert_eq!(ext.e_index(), 3);
        assert!(ext.extended().is_central(&unit(4, 3)).unwrap());
        assert!(ext.extended().check_jacobi().passed());

        let r1 = LieAlgebra::abelian("r", vec!["t".into()]).validate().unwrap();
        let ext1 = CentralExtension::new(&r1);
        assert_eq!(ext1.extended().dim(), 2);
        assert!(ext1.extended().brackets().is_empty());
    }

    #[test]
    fn centrality_in_heisenberg() {
        let h = heisenberg();
        assert!(h.is_central(&unit(3, 2)).unwrap()); // Z
        assert!(!h.is_central(&unit(3, 0)).unwrap()); // X
        assert!(matches!(
            h.is_central(&unit(4, 0)),
            Err(LieError::DimensionMismatch { expected: 3, got: 4 })
        ));
    }

    #[test]
    fn centrally_extended_sl2_matches_gl2() {
        // sl(2) in the basis {H, X+, X-} with [H,X+] = 2X+, [H,X-] = -2X-,
        // [X+,X-] = H; adjoining a central E gives an algebra with the
        // same structure constants as gl(2) under H -> E11 - E22,
        // X+ -> E12, X- -> E21, E -> I.
        let mut table = BracketTable::new();
        table.insert((0, 1), vec![(1, rat_int(2))]);
        table.insert((0, 2), vec![(2, rat_int(-2))]);
        table.insert((1, 2), vec![(0, rat_int(1))]);
        let sl2 = LieAlgebra::new("sl2", 3, vec!["H".into(), "X+".into(), "X-".into()], table)
            .unwrap()
            .validate()
            .unwrap();
        let ext = CentralExtension::new(&sl2).extended().clone();

        let gl2 = gl_elementary(2).validate().unwrap();
        // images of the extension basis inside gl(2) coordinates
        let images: Vec<Vec<Rational>> = vec![
            vec![rat_int(1), rat_int(0), rat_int(0), rat_int(-1)], // H
            vec![rat_int(0), rat_int(1), rat_int(0), rat_int(0)],  // X+
            vec![rat_int(0), rat_int(0), rat_int(1), rat_int(0)],  // X-
            vec![rat_int(1), rat_int(0), rat_int(0), rat_int(1)],  // E -> I
        ];
        for i in 0..4 {
            for j in 0..4 {
                let lhs = ext.basis_bracket(i, j);
                // push lhs through the map
                let mut mapped = vecops::zero(4);
                for (k, c) in lhs.iter().enumerate() {
                    if !c.is_zero() {
                        mapped = vecops::add(&mapped, &vecops::scale(&images[k], c));
                    }
                }
                let rhs = gl2.bracket(&images[i], &images[j]).unwrap();
                assert_eq!(mapped, rhs, "bracket mismatch at pair ({i}, {j})");
            }
        }
    }

    proptest! {
        #[test]
        fn bracket_is_bilinear(
            xs in proptest::collection::vec(-6i64..=6, 3),
            ys in proptest::collection::vec(-6i64..=6, 3),
            zs in proptest::collection::vec(-6i64..=6, 3),
            an in -5i64..=5, ad in 1i64..=4,
            bn in -5i64..=5, bd in 1i64..=4,
        ) {
            let h = heisenberg();
            let x: Vec<Rational> = xs.iter().map(|&v| rat_int(v)).collect();
            let y: Vec<Rational> = ys.iter().map(|&v| rat_int(v)).collect();
            let z: Vec<Rational> = zs.iter().map(|&v| rat_int(v)).collect();
            let alpha = rat(an, ad);
            let beta = rat(bn, bd);
            let lhs = h.bracket(
                &vecops::add(&vecops::scale(&x, &alpha), &vecops::scale(&y, &beta)),
                &z,
            ).unwrap();
            let rhs = vecops::add(
                &vecops::scale(&h.bracket(&x, &z).unwrap(), &alpha),
                &vecops::scale(&h.bracket(&y, &z).unwrap(), &beta),
            );
            prop_assert_eq!(lhs, rhs);
        }
    }
}
