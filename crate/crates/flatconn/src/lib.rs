//! Exact-arithmetic toolkit for invariant flat and projectively flat
//! connections on homogeneous spaces.
//!
//! The crate decides, in exact rational arithmetic, the algebraic
//! conditions under which a homogeneous space carries an invariant flat
//! or projectively flat affine connection: Lie algebras are given by
//! structure constants, connections by their origin data, and flat
//! structures by affine representations. A constructive classifier
//! splits the irreducible flat family into a scalar-central case and a
//! complex-structure case and emits checkable witnesses for both.
//!
//! Modules:
//! - [`ratlin`]: rational matrices, subspaces, minimal polynomials,
//!   factorization over the rationals.
//! - [`liealg`]: Lie algebras by structure constants, subalgebras,
//!   central extensions.
//! - [`affrep`]: affine representations, membership predicates,
//!   irreducibility (meataxe with Norton certificates), commutants,
//!   invariant complex structures, cyclic vectors.
//! - [`conncalc`]: origin-level torsion, curvature, Ricci, flatness,
//!   projective-flatness conditions, infinitesimal equivariance, and the
//!   (floating point, demonstration-only) orbit sampler.
//! - [`classify`]: the constructive case split with witness emission.
//! - [`catalog`]: built-in worked structures and static classification
//!   tables.
//! - [`cli`]: JSON input formats, scenario runner, canonical reports.

pub mod affrep;
pub mod catalog;
pub mod classify;
pub mod cli;
pub mod conncalc;
pub mod liealg;
pub mod ratlin;
