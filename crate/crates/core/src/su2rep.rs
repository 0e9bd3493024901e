//! Finite-dimensional sl(2) representations at specialized hbar,
//! reproducing the matrix-algebra side of the quantization: the Casimir
//! acts as l(l + hbar) with l = hbar m / 2, the ideal I_h with
//! C(h) = l^2 + l h evaluates to zero, and the canonical quotient basis
//! spans the full (m+1)^2 matrix algebra from degree m on.
//!
//! A lowest-weight integer model keeps all entries rational: the
//! orthonormal basis would introduce square roots, and the Casimir
//! eigenvalue and kernel statements are basis-independent.

use crate::error::{Error, Result};
use crate::linalg::{span_dimension, RatMatrix};
use crate::orbit::{CasimirShift, QuantizedOrbitAlgebra};
use crate::poly::Orbit;
use crate::scalars::{HPoly, Rational};
use crate::uh::{expand_word, UhElement};

/// An (m+1)-dimensional representation of the sl2 relations with h
/// specialized to `hbar`: `[H,X] = 2 hbar X`, `[H,Y] = -2 hbar Y`,
/// `[X,Y] = hbar H`, with H diagonal.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub m: usize,
    pub hbar: Rational,
    pub h: RatMatrix,
    pub x: RatMatrix,
    pub y: RatMatrix,
}

impl MatrixRep {
    pub fn dim(&self) -> usize {
        self.m + 1
    }

    /// The Casimir value the quantization predicts: l(l + hbar) with
    /// l = hbar m / 2.
    pub fn expected_casimir(&self) -> Rational {
        let l = self.lowest_weight_scale();
        &l * &(&l + &self.hbar)
    }

    /// l = hbar m / 2.
    pub fn lowest_weight_scale(&self) -> Rational {
        &(&self.hbar * &Rational::from_int(self.m as i64)) * &Rational::new(1, 2)
    }

    fn check_relations(&self) -> Result<()> {
        let comm = |a: &RatMatrix, b: &RatMatrix| &(a * b) - &(b * a);
        let two_hbar = &self.hbar * &Rational::from_int(2);
        if comm(&self.h, &self.x) != self.x.scale(&two_hbar) {
            return Err(Error::RelationViolation("[H,X] != 2 hbar X".into()));
        }
        if comm(&self.h, &self.y) != self.y.scale(&(-&two_hbar)) {
            return Err(Error::RelationViolation("[H,Y] != -2 hbar Y".into()));
        }
        if comm(&self.x, &self.y) != self.h.scale(&self.hbar) {
            return Err(Error::RelationViolation("[X,Y] != hbar H".into()));
        }
        Ok(())
    }
}

/// The lowest-weight model with integer-pattern entries:
/// `H = hbar diag(m, m-2, ..., -m)`, `X v_k = hbar (m-k+1) v_{k-1}`,
/// `Y v_k = hbar (k+1) v_{k+1}`. Relations are verified at construction.
pub fn build_irrep(m: usize, hbar: Rational) -> Result<MatrixRep> {
    if hbar.is_zero() {
        return Err(Error::ZeroHbar);
    }
    let dim = m + 1;
    let mut h = RatMatrix::zeros(dim, dim);
    let mut x = RatMatrix::zeros(dim, dim);
    let mut y = RatMatrix::zeros(dim, dim);
    for k in 0..dim {
        let weight = Rational::from_int(m as i64 - 2 * k as i64);
        h.set(k, k, &hbar * &weight);
        if k > 0 {
            // X v_k = hbar (m - k + 1) v_{k-1}
            x.set(k - 1, k, &hbar * &Rational::from_int((m - k + 1) as i64));
        }
        if k + 1 < dim {
            // Y v_k = hbar (k + 1) v_{k+1}
            y.set(k + 1, k, &hbar * &Rational::from_int((k + 1) as i64));
        }
    }
    let rep = MatrixRep { m, hbar, h, x, y };
    rep.check_relations()?;
    Ok(rep)
}

/// Evaluate a U_h element in the representation: every coefficient is
/// specialized at h = hbar and words become matrix products. This is an
/// algebra map.
pub fn evaluate(a: &UhElement, rep: &MatrixRep) -> Result<RatMatrix> {
    if a.nvars() != 3 {
        return Err(Error::AlgebraMismatch(format!(
            "representation evaluation needs the 3-dimensional sl2, element has {} generators",
            a.nvars()
        )));
    }
    let dim = rep.dim();
    let mats = [&rep.h, &rep.x, &rep.y];
    let mut acc = RatMatrix::zeros(dim, dim);
    for (word, coeff) in a.terms() {
        let mut prod = RatMatrix::identity(dim);
        for letter in expand_word(word) {
            prod = &prod * mats[letter];
        }
        let scalar = coeff.specialize(&rep.hbar);
        acc = &acc + &prod.scale(&scalar);
    }
    Ok(acc)
}

/// The sl2 Casimir P = Sym(xX xY + 1/4 xH^2) as a U_h element.
fn sl2_casimir() -> UhElement {
    let l = crate::lie::LieAlgebra::sl2();
    let p = l
        .quadratic_invariant()
        .expect("sl2 Killing form invertible");
    crate::orbit::casimir_operator(&p, &l).expect("sl2 Casimir is central")
}

/// Verify that the Casimir acts as a scalar and that the scalar is
/// l(l + hbar); returns the eigenvalue.
pub fn casimir_eigenvalue_check(rep: &MatrixRep) -> Result<Rational> {
    let value = evaluate(&sl2_casimir(), rep)?;
    let c = value.as_scalar().ok_or(Error::NotScalar)?;
    let expected = rep.expected_casimir();
    if c != expected {
        return Err(Error::RelationViolation(format!(
            "Casimir eigenvalue {c} does not match l(l + hbar) = {expected}"
        )));
    }
    Ok(c)
}

/// Outcome of the kernel and span checks against a quantized orbit
/// algebra.
#[derive(Clone, Debug)]
pub struct RepCheckReport {
    pub m: usize,
    pub hbar: Rational,
    pub c_expected: Rational,
    pub c_computed: Option<Rational>,
    pub casimir_matches: bool,
    pub kernel_pass: bool,
    /// (degree, span dimension, expected dimension) per degree.
    pub span_dims: Vec<(u32, usize, usize)>,
    pub span_pass: bool,
}

impl RepCheckReport {
    pub fn passed(&self) -> bool {
        self.casimir_matches && self.kernel_pass && self.span_pass
    }
}

/// (i) every generator of I_h evaluates to the zero matrix; (ii) the
/// evaluations of canonical quotient basis words of degree <= d span a
/// space of dimension min((m+1)^2, number of words) at every degree.
pub fn kernel_and_span_check(
    q: &QuantizedOrbitAlgebra,
    rep: &MatrixRep,
    d: u32,
) -> Result<RepCheckReport> {
    let c_computed = evaluate(&sl2_casimir(), rep)?.as_scalar();
    let c_expected = rep.expected_casimir();
    let casimir_matches = c_computed.as_ref() == Some(&c_expected);
    let mut kernel_pass = true;
    for g in q.ideal_elements() {
        if !evaluate(&g, rep)?.is_zero() {
            kernel_pass = false;
        }
    }
    let full = rep.dim() * rep.dim();
    let mut span_dims = Vec::new();
    let mut span_pass = true;
    for deg in 0..=d {
        let words = q.canonical_words_up_to(deg);
        let vectors: Vec<Vec<Rational>> = words
            .iter()
            .map(|w| {
                evaluate(&UhElement::from_term(w.clone(), HPoly::one(), 3), rep)
                    .map(|mat| mat.flatten())
            })
            .collect::<Result<_>>()?;
        let dim = span_dimension(&vectors);
        let expected = full.min(words.len());
        if dim != expected {
            span_pass = false;
        }
        span_dims.push((deg, dim, expected));
    }
    Ok(RepCheckReport {
        m: rep.m,
        hbar: rep.hbar.clone(),
        c_expected,
        c_computed,
        casimir_matches,
        kernel_pass,
        span_dims,
        span_pass,
    })
}

/// The quantized orbit algebra matching the m-th irrep at the given
/// hbar: c = l^2 and C(h) = l^2 + l h with l = hbar m / 2.
pub fn standard_quantized(m: usize, hbar: &Rational) -> Result<QuantizedOrbitAlgebra> {
    let l = &(hbar * &Rational::from_int(m as i64)) * &Rational::new(1, 2);
    let c = &l * &l;
    let shift = HPoly::from_coeffs(vec![c.clone(), l]);
    quantized_with_shift(c, shift)
}

/// Same orbit but with an arbitrary shift (used for the wrong-shift
/// counterexample C(h) = l^2).
pub fn quantized_with_shift(c: Rational, shift: HPoly) -> Result<QuantizedOrbitAlgebra> {
    let algebra = crate::lie::LieAlgebra::sl2();
    let point = vec![Rational::zero(), Rational::one(), c.clone()];
    let orbit = Orbit::new(algebra, vec![c.clone()], point)?;
    let shifts = CasimirShift::new(vec![shift], &[c])?;
    QuantizedOrbitAlgebra::new(orbit, shifts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn smallest_irrep_matrices() {
        let rep = build_irrep(1, r(1, 1)).unwrap();
        let mut h = RatMatrix::zeros(2, 2);
        h.set(0, 0, r(1, 1));
        h.set(1, 1, r(-1, 1));
        let mut x = RatMatrix::zeros(2, 2);
        x.set(0, 1, r(1, 1));
        let mut y = RatMatrix::zeros(2, 2);
        y.set(1, 0, r(1, 1));
        assert_eq!(rep.h, h);
        assert_eq!(rep.x, x);
        assert_eq!(rep.y, y);
    }

    #[test]
    fn trivial_rep_is_valid() {
        let rep = build_irrep(0, r(1, 1)).unwrap();
        assert_eq!(rep.dim(), 1);
        assert!(rep.h.is_zero() && rep.x.is_zero() && rep.y.is_zero());
        assert_eq!(casimir_eigenvalue_check(&rep).unwrap(), Rational::zero());
    }

    #[test]
    fn weights_scale_with_hbar() {
        let rep = build_irrep(2, r(1, 2)).unwrap();
        assert_eq!(*rep.h.get(0, 0), r(1, 1));
        assert_eq!(*rep.h.get(1, 1), r(0, 1));
        assert_eq!(*rep.h.get(2, 2), r(-1, 1));
    }

    #[test]
    fn zero_hbar_rejected() {
        assert!(matches!(build_irrep(2, r(0, 1)), Err(Error::ZeroHbar)));
    }

    #[test]
    fn relations_hold_across_parameters() {
        for m in 0..=6 {
            for hbar in [r(1, 1), r(1, 2), r(2, 1)] {
                let rep = build_irrep(m, hbar).unwrap();
                // construction already checks; confirm Casimir value too
                let c = casimir_eigenvalue_check(&rep).unwrap();
                assert_eq!(c, rep.expected_casimir());
            }
        }
    }

    #[test]
    fn evaluate_examples() {
        let rep = build_irrep(1, r(1, 1)).unwrap();
        let h = UhElement::generator(0, 3);
        assert_eq!(evaluate(&h, &rep).unwrap(), rep.h);
        // XY - YX evaluates to hbar H
        let l = crate::lie::LieAlgebra::sl2();
        let x = UhElement::generator(1, 3);
        let y = UhElement::generator(2, 3);
        let comm = &x.mul(&y, &l) - &y.mul(&x, &l);
        assert_eq!(evaluate(&comm, &rep).unwrap(), rep.h.scale(&rep.hbar));
        // the Casimir acts as 3/4 on the two-dimensional irrep
        let p = sl2_casimir();
        assert_eq!(
            evaluate(&p, &rep).unwrap(),
            RatMatrix::identity(2).scale(&r(3, 4))
        );
    }

    #[test]
    fn evaluate_is_an_algebra_map() {
        let l = crate::lie::LieAlgebra::sl2();
        let rep = build_irrep(2, r(1, 2)).unwrap();
        let samples = [
            UhElement::from_term(Monomial(vec![1, 1, 0]), HPoly::one(), 3),
            UhElement::from_term(Monomial(vec![0, 1, 1]), HPoly::h(), 3),
            &UhElement::generator(2, 3) + &UhElement::one(3),
        ];
        for a in &samples {
            for b in &samples {
                let lhs = evaluate(&a.mul(b, &l), &rep).unwrap();
                let rhs = &evaluate(a, &rep).unwrap() * &evaluate(b, &rep).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn casimir_eigenvalues_match_prediction() {
        // m = 1, hbar = 1: C = (1/2)(3/2) = 3/4; m = 2, hbar = 1: C = 2
        let c = casimir_eigenvalue_check(&build_irrep(1, r(1, 1)).unwrap()).unwrap();
        assert_eq!(c, r(3, 4));
        let c = casimir_eigenvalue_check(&build_irrep(2, r(1, 1)).unwrap()).unwrap();
        assert_eq!(c, r(2, 1));
    }

    #[test]
    fn kernel_and_span_m1() {
        let rep = build_irrep(1, r(1, 1)).unwrap();
        let q = standard_quantized(1, &r(1, 1)).unwrap();
        let report = kernel_and_span_check(&q, &rep, 1).unwrap();
        assert!(report.passed());
        assert_eq!(report.span_dims.last().unwrap(), &(1, 4, 4));
    }

    #[test]
    fn kernel_and_span_m2() {
        let rep = build_irrep(2, r(1, 1)).unwrap();
        let q = standard_quantized(2, &r(1, 1)).unwrap();
        let report = kernel_and_span_check(&q, &rep, 2).unwrap();
        assert!(report.passed());
        assert_eq!(report.span_dims.last().unwrap(), &(2, 9, 9));
    }

    #[test]
    fn wrong_shift_fails_kernel() {
        // C(h) = l^2 without the linear term: P - C evaluates to
        // (3/4 - 1/4) I != 0 for m = 1, hbar = 1
        let rep = build_irrep(1, r(1, 1)).unwrap();
        let q = quantized_with_shift(r(1, 4), HPoly::constant(r(1, 4))).unwrap();
        let report = kernel_and_span_check(&q, &rep, 1).unwrap();
        assert!(!report.kernel_pass);
        assert!(!report.passed());
        let g = q.ideal_elements()[0].clone();
        let residual = evaluate(&g, &rep).unwrap();
        assert_eq!(residual, RatMatrix::identity(2).scale(&r(1, 2)));
    }

    #[test]
    fn reducible_rep_is_not_scalar() {
        // direct sum of the m = 1 and m = 0 representations: relations
        // hold but the Casimir is diag(3/4, 3/4, 0)
        let mut h = RatMatrix::zeros(3, 3);
        h.set(0, 0, r(1, 1));
        h.set(1, 1, r(-1, 1));
        let mut x = RatMatrix::zeros(3, 3);
        x.set(0, 1, r(1, 1));
        let mut y = RatMatrix::zeros(3, 3);
        y.set(1, 0, r(1, 1));
        let rep = MatrixRep {
            m: 2,
            hbar: r(1, 1),
            h,
            x,
            y,
        };
        rep.check_relations().unwrap();
        assert!(matches!(
            casimir_eigenvalue_check(&rep),
            Err(Error::NotScalar)
        ));
    }
}
