//! Exact deformation quantization of coadjoint orbits of semisimple Lie
//! algebras, over arbitrary-precision rationals and polynomials in the
//! formal parameter h.
//!
//! The pipeline: the dual g* carries the linear Lie-Poisson bracket
//! ([`poly::poisson_bracket`]); the deformed enveloping algebra U_h is
//! realized as a terminating rewriting system on tensor words with PBW
//! normal forms ([`uh`]); the PBW and symmetrizer quantization maps
//! transport its product to star products on polynomials ([`star`]);
//! Casimir ideals cut out quantized orbit algebras U_h/I_h with a
//! canonical basis and a quotient star product ([`orbit`]); and the
//! su(2) case is cross-checked against finite-dimensional matrix
//! representations at specialized hbar ([`su2rep`]).
//!
//! All arithmetic is exact; every check either passes identically or
//! reports a concrete counterexample.

pub mod checks;
pub mod config;
pub mod error;
pub mod expr;
pub mod lie;
pub mod linalg;
pub mod orbit;
pub mod poly;
pub mod scalars;
pub mod star;
pub mod su2rep;
pub mod uh;

pub use error::{Error, Result};
pub use lie::{regularity_check, BracketEntry, InvariantPolySet, LieAlgebra, Regularity};
pub use linalg::RatMatrix;
pub use orbit::{casimir_operator, CasimirShift, QuantizedOrbitAlgebra};
pub use poly::{
    classical_reduce, in_orbit_ideal, monomials_of_degree, monomials_up_to_degree, poisson_bracket,
    Monomial, MonomialOrder, Orbit, Poly,
};
pub use scalars::{HPoly, Rational};
pub use star::{
    gauge_transform, intertwine_check, CochainValue, StarOrdering, StarProduct, Witness,
};
pub use su2rep::{
    build_irrep, casimir_eigenvalue_check, evaluate, kernel_and_span_check, MatrixRep,
};
pub use uh::{
    centrality_check, pbw_normal_form, psi_pbw, psi_pbw_inv, symmetrize, symmetrize_inv,
    RewriteStrategy, SymCache, UhElement, Word,
};
