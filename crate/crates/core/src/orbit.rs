//! The quantized orbit algebra U_h/I_h: Casimir operators, the central
//! ideal I_h = (P_i - C_i(h)), reduction to a canonical basis, the
//! quotient star product through the exponent-pattern section, and the
//! degree-by-degree Hilbert comparison that witnesses the module
//! isomorphism with `Pol(Theta)[h]`.
//!
//! Reduction eliminates the leading word of each P_i - C_i(h) under the
//! algebra's word order. For sl2 the single rule is
//! `HH -> 4 C(h) + 2h H - 4 XY`; the termination measure is the count of
//! H letters, which drops by two per application while the degree never
//! increases. Multi-Casimir rule sets are completed by S-pair reduction
//! under a degree bound; exceeding the bound is a reported error, never
//! silent wrong output.

use crate::error::{Error, Result};
use crate::poly::{
    classical_reduce, monomials_up_to_degree, poisson_bracket, Monomial, MonomialOrder, Orbit, Poly,
};
use crate::scalars::{HPoly, Rational};
use crate::uh::{psi_pbw, psi_pbw_inv, symmetrize, uh_mul_cached, MulCache, SymCache, UhElement};

/// The h-dependent scalars C_i(h) defining the ideal, constrained by
/// C_i(0) = c_i against the orbit's constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasimirShift {
    values: Vec<HPoly>,
}

impl CasimirShift {
    pub fn new(values: Vec<HPoly>, constants: &[Rational]) -> Result<CasimirShift> {
        if values.len() != constants.len() {
            return Err(Error::ShiftConstantMismatch {
                index: values.len().min(constants.len()) + 1,
                got: "<missing>".into(),
                expected: "<one shift per invariant>".into(),
            });
        }
        for (i, (v, c)) in values.iter().zip(constants).enumerate() {
            if v.constant_term() != *c {
                return Err(Error::ShiftConstantMismatch {
                    index: i + 1,
                    got: v.constant_term().to_string(),
                    expected: c.to_string(),
                });
            }
        }
        Ok(CasimirShift { values })
    }

    /// The constant shifts C_i(h) = c_i.
    pub fn constant(constants: &[Rational]) -> CasimirShift {
        CasimirShift {
            values: constants.iter().cloned().map(HPoly::constant).collect(),
        }
    }

    pub fn values(&self) -> &[HPoly] {
        &self.values
    }
}

/// Oriented rewrite rule: the leading word of an ideal element is
/// replaced by the rest. The element is kept whole so reduction can
/// subtract exact left multiples of it.
#[derive(Clone, Debug)]
struct Rule {
    lead: Monomial,
    lead_coeff: Rational,
    element: UhElement,
}

impl Rule {
    fn from_element(element: UhElement, order: &MonomialOrder, bound: u32) -> Result<Rule> {
        let lead = element
            .terms()
            .map(|(w, _)| w)
            .max_by(|a, b| order.compare(a, b))
            .expect("rule element is nonzero")
            .clone();
        let lc = element.coeff(&lead);
        if !lc.is_constant() {
            // a rule with an h-divisible leading coefficient cannot be
            // used for division over Q[h]
            return Err(Error::ReductionBoundExceeded {
                bound,
                detail: format!("derived rule has h-dependent leading coefficient {lc}"),
            });
        }
        Ok(Rule {
            lead,
            lead_coeff: lc.constant_term(),
            element,
        })
    }
}

/// Which divisible word a reduction step eliminates. Both strategies
/// must agree on the normal form (checked by the dual-strategy test).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReduceStrategy {
    LargestFirst,
    SmallestFirst,
}

/// U_h together with the reduction rules modulo I_h = (P_i - C_i(h)).
pub struct QuantizedOrbitAlgebra {
    orbit: Orbit,
    shifts: CasimirShift,
    casimirs: Vec<UhElement>,
    rules: Vec<Rule>,
    products: MulCache,
}

pub const DEFAULT_IDEAL_BOUND: u32 = 8;

/// Sym of an invariant polynomial, verified central. A failure signals
/// that the input was not invariant.
pub fn casimir_operator(p: &Poly, algebra: &crate::lie::LieAlgebra) -> Result<UhElement> {
    let cas = symmetrize(p, algebra, &SymCache::new());
    for i in 0..algebra.dim() {
        let x = UhElement::generator(i, algebra.dim());
        if cas.mul(&x, algebra) != x.mul(&cas, algebra) {
            return Err(Error::NotCentral {
                generator: algebra.names()[i].clone(),
            });
        }
    }
    Ok(cas)
}

impl QuantizedOrbitAlgebra {
    pub fn new(orbit: Orbit, shifts: CasimirShift) -> Result<QuantizedOrbitAlgebra> {
        QuantizedOrbitAlgebra::with_bound(orbit, shifts, DEFAULT_IDEAL_BOUND)
    }

    pub fn with_bound(
        orbit: Orbit,
        shifts: CasimirShift,
        bound: u32,
    ) -> Result<QuantizedOrbitAlgebra> {
        CasimirShift::new(shifts.values.clone(), orbit.constants())?;
        let algebra = orbit.algebra().clone();
        let n = algebra.dim();
        let mut casimirs = Vec::new();
        for p in orbit.invariants().polys() {
            let cas = casimir_operator(p, &algebra)?;
            casimirs.push(cas);
        }
        let order = orbit.monomial_order().clone();
        let generators: Vec<UhElement> = casimirs
            .iter()
            .zip(&shifts.values)
            .map(|(p, c)| p - &UhElement::from_term(Monomial::one(n), c.clone(), n))
            .collect();
        let products = MulCache::new();
        let rules = complete_rules(generators, &algebra, &order, bound, &products)?;
        Ok(QuantizedOrbitAlgebra {
            orbit,
            shifts,
            casimirs,
            rules,
            products,
        })
    }

    pub fn orbit(&self) -> &Orbit {
        &self.orbit
    }

    pub fn shifts(&self) -> &CasimirShift {
        &self.shifts
    }

    pub fn casimirs(&self) -> &[UhElement] {
        &self.casimirs
    }

    pub fn algebra(&self) -> &crate::lie::LieAlgebra {
        self.orbit.algebra()
    }

    /// Generators P_i - C_i(h) of the ideal.
    pub fn ideal_elements(&self) -> Vec<UhElement> {
        let n = self.algebra().dim();
        self.casimirs
            .iter()
            .zip(&self.shifts.values)
            .map(|(p, c)| p - &UhElement::from_term(Monomial::one(n), c.clone(), n))
            .collect()
    }

    /// The rewrite rules, rendered as `lead -> rest` strings.
    pub fn rules_rendered(&self) -> Vec<String> {
        let names = self.algebra().names();
        self.rules
            .iter()
            .map(|rule| {
                let n = self.algebra().dim();
                let lead_elem = UhElement::from_term(
                    rule.lead.clone(),
                    HPoly::constant(rule.lead_coeff.clone()),
                    n,
                );
                let rhs = (&lead_elem - &rule.element).scale_rat(&rule.lead_coeff.recip());
                format!(
                    "{} -> {}",
                    crate::poly::render_monomial(&rule.lead, names),
                    rhs.display(names)
                )
            })
            .collect()
    }

    pub fn is_canonical_word(&self, w: &Monomial) -> bool {
        self.rules.iter().all(|r| !r.lead.divides(w))
    }

    /// Canonical quotient basis words of total degree <= d, ascending.
    pub fn canonical_words_up_to(&self, d: u32) -> Vec<Monomial> {
        monomials_up_to_degree(self.algebra().dim(), d)
            .into_iter()
            .filter(|m| self.is_canonical_word(m))
            .collect()
    }

    /// Canonical representative modulo I_h: no stored word divisible by
    /// any rule's leading word. Idempotent.
    pub fn ideal_reduce(&self, a: &UhElement) -> Result<UhElement> {
        self.ideal_reduce_with(a, ReduceStrategy::LargestFirst)
    }

    pub fn ideal_reduce_with(&self, a: &UhElement, strategy: ReduceStrategy) -> Result<UhElement> {
        if a.nvars() != self.algebra().dim() {
            return Err(Error::DimensionMismatch {
                expected: self.algebra().dim(),
                got: a.nvars(),
            });
        }
        let algebra = self.algebra();
        let mut current = a.clone();
        loop {
            let target = {
                let mut it: Box<dyn Iterator<Item = (&Monomial, &HPoly)>> = match strategy {
                    ReduceStrategy::LargestFirst => Box::new(current.terms().rev()),
                    ReduceStrategy::SmallestFirst => Box::new(current.terms()),
                };
                it.find_map(|(w, c)| {
                    self.rules
                        .iter()
                        .position(|r| r.lead.divides(w))
                        .map(|idx| (w.clone(), c.clone(), idx))
                })
            };
            let Some((word, coeff, idx)) = target else {
                return Ok(current);
            };
            let rule = &self.rules[idx];
            let q = rule.lead.quotient(&word);
            let q_elem = UhElement::from_term(q, HPoly::one(), current.nvars());
            let multiple = uh_mul_cached(&q_elem, &rule.element, algebra, &self.products);
            let factor = coeff.scale(&rule.lead_coeff.recip());
            current = &current - &multiple.scale(&factor);
        }
    }

    /// The quotient star product through the exponent-pattern section:
    /// classical canonical monomials are sent to the quotient words with
    /// the same exponent pattern, multiplied in U_h, reduced modulo I_h,
    /// read back, and classically reduced.
    pub fn quotient_star(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        let ra = classical_reduce(a, &self.orbit)?;
        let rb = classical_reduce(b, &self.orbit)?;
        let prod = uh_mul_cached(&psi_pbw(&ra), &psi_pbw(&rb), self.algebra(), &self.products);
        let reduced = self.ideal_reduce(&prod)?;
        classical_reduce(&psi_pbw_inv(&reduced), &self.orbit)
    }

    /// Cumulative dimension comparison: for each degree d, the number of
    /// canonical quotient words of degree <= d against the number of
    /// canonical classical monomials of degree <= d. Equality is the
    /// desk-scale witness of the module isomorphism.
    pub fn hilbert_check(&self, d_max: u32) -> Result<Vec<(u32, usize, usize)>> {
        let n = self.algebra().dim();
        let classical_leads = self.orbit.classical_leading_monomials();
        let mut out = Vec::new();
        let mut quotient_acc = 0usize;
        let mut classical_acc = 0usize;
        for d in 0..=d_max {
            for m in crate::poly::monomials_of_degree(n, d) {
                if self.is_canonical_word(&m) {
                    quotient_acc += 1;
                }
                if classical_leads.iter().all(|lm| !lm.divides(&m)) {
                    classical_acc += 1;
                }
            }
            out.push((d, quotient_acc, classical_acc));
        }
        Ok(out)
    }

    /// Deformation axioms on the quotient: for all canonical monomial
    /// pairs of degree <= d_max, the quotient star mod h equals the
    /// classical product and the commutator equals h times the reduced
    /// Poisson bracket mod h^2.
    pub fn quotient_axiom_check(&self, d_max: u32) -> Result<QuotientAxiomReport> {
        let n = self.algebra().dim();
        let basis: Vec<Monomial> = monomials_up_to_degree(n, d_max)
            .into_iter()
            .filter(|m| self.orbit.is_classical_canonical(m))
            .collect();
        let mut report = QuotientAxiomReport {
            pairs_checked: 0,
            failures: Vec::new(),
        };
        let names = self.algebra().coordinate_names();
        for ma in &basis {
            let a = Poly::from_term(ma.clone(), HPoly::one(), n);
            for mb in &basis {
                let b = Poly::from_term(mb.clone(), HPoly::one(), n);
                report.pairs_checked += 1;
                let sab = self.quotient_star(&a, &b)?;
                let classical = classical_reduce(&(&a * &b), &self.orbit)?;
                if sab.set_h_zero() != classical.set_h_zero() {
                    report.failures.push(format!(
                        "axiom a fails at ({}, {})",
                        a.display(&names),
                        b.display(&names)
                    ));
                    continue;
                }
                let sba = self.quotient_star(&b, &a)?;
                let comm = &sab - &sba;
                let bracket =
                    classical_reduce(&poisson_bracket(&a, &b, self.algebra())?, &self.orbit)?;
                let defect = &comm - &bracket.scale(&HPoly::h());
                if !defect.terms().all(|(_, c)| c.vanishes_mod(2)) {
                    report.failures.push(format!(
                        "axiom b fails at ({}, {})",
                        a.display(&names),
                        b.display(&names)
                    ));
                }
            }
        }
        Ok(report)
    }
}

/// Outcome of [`QuantizedOrbitAlgebra::quotient_axiom_check`].
#[derive(Clone, Debug)]
pub struct QuotientAxiomReport {
    pub pairs_checked: usize,
    pub failures: Vec<String>,
}

impl QuotientAxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Inter-reduce the generators and complete the rule set by S-pair
/// reduction. Central generators make the two-sided ideal a left ideal,
/// so left multiples suffice throughout.
fn complete_rules(
    generators: Vec<UhElement>,
    algebra: &crate::lie::LieAlgebra,
    order: &MonomialOrder,
    bound: u32,
    products: &MulCache,
) -> Result<Vec<Rule>> {
    let mut rules: Vec<Rule> = Vec::new();
    for g in generators {
        let r = reduce_element(&g, &rules, algebra, products);
        if !r.is_zero() {
            rules.push(Rule::from_element(r, order, bound)?);
        }
    }
    if rules.len() <= 1 {
        return Ok(rules);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..rules.len() {
        for j in (i + 1)..rules.len() {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        let pos = (0..pairs.len())
            .min_by_key(|&k| {
                let (i, j) = pairs[k];
                rules[i].lead.lcm(&rules[j].lead).degree()
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(pos);
        let lcm = rules[i].lead.lcm(&rules[j].lead);
        if lcm.degree() > bound {
            return Err(Error::ReductionBoundExceeded {
                bound,
                detail: format!(
                    "unresolved S-pair at degree {} between rules {} and {}",
                    lcm.degree(),
                    i + 1,
                    j + 1
                ),
            });
        }
        let n = algebra.dim();
        let side = |rule: &Rule| {
            let q = rule.lead.quotient(&lcm);
            let q_elem = UhElement::from_term(q, HPoly::constant(rule.lead_coeff.recip()), n);
            uh_mul_cached(&q_elem, &rule.element, algebra, products)
        };
        let s = &side(&rules[i]) - &side(&rules[j]);
        let r = reduce_element(&s, &rules, algebra, products);
        if !r.is_zero() {
            let new_idx = rules.len();
            rules.push(Rule::from_element(r, order, bound)?);
            for k in 0..new_idx {
                pairs.push((k, new_idx));
            }
        }
    }
    Ok(rules)
}

fn reduce_element(
    a: &UhElement,
    rules: &[Rule],
    algebra: &crate::lie::LieAlgebra,
    products: &MulCache,
) -> UhElement {
    let mut current = a.clone();
    loop {
        let target = current.terms().rev().find_map(|(w, c)| {
            rules
                .iter()
                .position(|r| r.lead.divides(w))
                .map(|idx| (w.clone(), c.clone(), idx))
        });
        let Some((word, coeff, idx)) = target else {
            return current;
        };
        let rule = &rules[idx];
        let q = rule.lead.quotient(&word);
        let q_elem = UhElement::from_term(q, HPoly::one(), current.nvars());
        let multiple = uh_mul_cached(&q_elem, &rule.element, algebra, products);
        let factor = coeff.scale(&rule.lead_coeff.recip());
        current = &current - &multiple.scale(&factor);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieAlgebra;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn sl2_orbit(c: Rational) -> Orbit {
        let point = vec![Rational::zero(), Rational::one(), c.clone()];
        Orbit::new(LieAlgebra::sl2(), vec![c], point).unwrap()
    }

    fn sl2_quantized(c: Rational, shift: HPoly) -> QuantizedOrbitAlgebra {
        let orbit = sl2_orbit(c.clone());
        let shifts = CasimirShift::new(vec![shift], &[c]).unwrap();
        QuantizedOrbitAlgebra::new(orbit, shifts).unwrap()
    }

    fn var(i: usize) -> Poly {
        Poly::var(i, 3)
    }

    #[test]
    fn casimir_operator_examples() {
        let l = LieAlgebra::sl2();
        let p = l.quadratic_invariant().unwrap();
        let cas = casimir_operator(&p, &l).unwrap();
        let mut expect = UhElement::zero(3);
        expect.add_term(Monomial(vec![2, 0, 0]), HPoly::constant(r(1, 4)));
        expect.add_term(Monomial(vec![0, 1, 1]), HPoly::one());
        expect.add_term(Monomial(vec![1, 0, 0]), HPoly::term(r(-1, 2), 1));
        assert_eq!(cas, expect);
        // a non-invariant input is rejected
        let err = casimir_operator(&var(0), &l).unwrap_err();
        assert!(matches!(err, Error::NotCentral { .. }));
        // sl3 quadratic invariant passes
        let l3 = LieAlgebra::sl3();
        let p2 = l3.invariant_set().polys()[0].clone();
        assert!(casimir_operator(&p2, &l3).is_ok());
    }

    #[test]
    fn sl2_rule_is_the_expected_one() {
        // HH -> 4C(h) + 2h H - 4 XY with C(h) = c + h
        let q = sl2_quantized(r(1, 1), HPoly::from_coeffs(vec![r(1, 1), r(1, 1)]));
        let rendered = q.rules_rendered();
        assert_eq!(rendered.len(), 1);
        assert_eq!(rendered[0], "H^2 -> -4*X*Y + 2*h*H + (4 + 4*h)");
    }

    #[test]
    fn ideal_reduce_examples() {
        let c = r(1, 1);
        let c1 = r(2, 1);
        let shift = HPoly::from_coeffs(vec![c.clone(), c1.clone()]);
        let q = sl2_quantized(c.clone(), shift.clone());
        // reduce HH
        let hh = UhElement::from_term(Monomial(vec![2, 0, 0]), HPoly::one(), 3);
        let got = q.ideal_reduce(&hh).unwrap();
        let mut expect = UhElement::zero(3);
        expect.add_term(Monomial(vec![0, 0, 0]), shift.scale(&r(4, 1)));
        expect.add_term(Monomial(vec![1, 0, 0]), HPoly::term(r(2, 1), 1));
        expect.add_term(Monomial(vec![0, 1, 1]), HPoly::constant(r(-4, 1)));
        assert_eq!(got, expect);
        // the Casimir reduces to its shift
        let cas = q.casimirs()[0].clone();
        let got = q.ideal_reduce(&cas).unwrap();
        assert_eq!(got, UhElement::from_term(Monomial(vec![0, 0, 0]), shift, 3));
        // X is already canonical
        let x = UhElement::generator(1, 3);
        assert_eq!(q.ideal_reduce(&x).unwrap(), x);
    }

    #[test]
    fn ideal_membership_reduces_to_zero() {
        let q = sl2_quantized(r(1, 1), HPoly::from_coeffs(vec![r(1, 1), r(-1, 2)]));
        let g = q.ideal_elements()[0].clone();
        let l = q.algebra().clone();
        for m in monomials_up_to_degree(3, 3) {
            let a = UhElement::from_term(m, HPoly::one(), 3);
            assert!(q.ideal_reduce(&a.mul(&g, &l)).unwrap().is_zero());
            assert!(q.ideal_reduce(&g.mul(&a, &l)).unwrap().is_zero());
        }
    }

    #[test]
    fn dual_strategy_reduction_agrees() {
        let q = sl2_quantized(r(2, 1), HPoly::from_coeffs(vec![r(2, 1), r(1, 3)]));
        for m in monomials_up_to_degree(3, 4) {
            let a = UhElement::from_term(m, HPoly::one(), 3);
            let big = q
                .ideal_reduce_with(&a, ReduceStrategy::LargestFirst)
                .unwrap();
            let small = q
                .ideal_reduce_with(&a, ReduceStrategy::SmallestFirst)
                .unwrap();
            assert_eq!(big, small);
        }
    }

    #[test]
    fn quotient_star_hh() {
        // xH (*) xH = (4c - 4 xX xY) + 2h xH + 4 c1 h with C(h) = c + c1 h
        let c = r(1, 1);
        let c1 = r(3, 1);
        let q = sl2_quantized(c.clone(), HPoly::from_coeffs(vec![c.clone(), c1.clone()]));
        let got = q.quotient_star(&var(0), &var(0)).unwrap();
        let mut expect = Poly::zero(3);
        expect.add_term(
            Monomial(vec![0, 0, 0]),
            HPoly::from_coeffs(vec![&r(4, 1) * &c, &r(4, 1) * &c1]),
        );
        expect.add_term(Monomial(vec![0, 1, 1]), HPoly::constant(r(-4, 1)));
        expect.add_term(Monomial(vec![1, 0, 0]), HPoly::term(r(2, 1), 1));
        assert_eq!(got, expect);
    }

    #[test]
    fn quotient_star_unit_and_bracket() {
        let q = sl2_quantized(r(2, 1), HPoly::constant(r(2, 1)));
        let f = &(&var(1) * &var(2)) + &var(0);
        assert_eq!(q.quotient_star(&Poly::one(3), &f).unwrap(), f);
        // (xX * xY) - (xY * xX) = h xH on the quotient
        let comm = &q.quotient_star(&var(1), &var(2)).unwrap()
            - &q.quotient_star(&var(2), &var(1)).unwrap();
        assert_eq!(comm, var(0).scale(&HPoly::h()));
    }

    #[test]
    fn hilbert_sl2_squares() {
        let q = sl2_quantized(r(1, 1), HPoly::constant(r(1, 1)));
        let rows = q.hilbert_check(4).unwrap();
        let expect: Vec<(u32, usize, usize)> = (0..=4u32)
            .map(|d| {
                let sq = ((d + 1) * (d + 1)) as usize;
                (d, sq, sq)
            })
            .collect();
        assert_eq!(rows, expect);
        assert_eq!(rows[0], (0, 1, 1));
    }

    #[test]
    fn hilbert_sl3_quadratic_truncation() {
        // single-invariant truncation of sl3: quotient and classical
        // dimensions agree through degree 2
        let l = LieAlgebra::sl3();
        let p2 = l.invariant_set().polys()[0].clone();
        let inv = crate::lie::InvariantPolySet::new(vec![p2], &l).unwrap();
        let mut point = vec![Rational::zero(); 8];
        point[0] = Rational::one();
        point[1] = Rational::one();
        let orbit = Orbit::with_invariants(l, inv, vec![Rational::one()], point).unwrap();
        let shifts = CasimirShift::constant(&[Rational::one()]);
        let q = QuantizedOrbitAlgebra::new(orbit, shifts).unwrap();
        for (_, quot, class) in q.hilbert_check(2).unwrap() {
            assert_eq!(quot, class);
        }
    }

    #[test]
    fn quotient_axioms_pass() {
        // nontrivial shift
        let q = sl2_quantized(r(1, 1), HPoly::from_coeffs(vec![r(1, 1), r(5, 1)]));
        let report = q.quotient_axiom_check(2).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
        // constant shift also passes
        let q = sl2_quantized(r(1, 1), HPoly::constant(r(1, 1)));
        let report = q.quotient_axiom_check(2).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
    }

    #[test]
    fn quotient_star_is_associative_on_canonical_triples() {
        let q = sl2_quantized(r(1, 1), HPoly::from_coeffs(vec![r(1, 1), r(1, 2)]));
        let basis: Vec<Poly> = monomials_up_to_degree(3, 2)
            .into_iter()
            .filter(|m| q.orbit().is_classical_canonical(m))
            .map(|m| Poly::from_term(m, HPoly::one(), 3))
            .collect();
        for a in &basis {
            for b in &basis {
                for c in &basis {
                    let left = q.quotient_star(&q.quotient_star(a, b).unwrap(), c).unwrap();
                    let right = q.quotient_star(a, &q.quotient_star(b, c).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn so3_sphere_quantization() {
        // the unit sphere orbit of so3: rule e1^2 -> C(h) - e2^2 - e3^2 + ...
        let l = LieAlgebra::so3();
        let c = Rational::one();
        let orbit = Orbit::new(
            l,
            vec![c.clone()],
            vec![Rational::one(), Rational::zero(), Rational::zero()],
        )
        .unwrap();
        let q = QuantizedOrbitAlgebra::new(orbit, CasimirShift::constant(&[c])).unwrap();
        for (_, quot, class) in q.hilbert_check(4).unwrap() {
            assert_eq!(quot, class);
        }
        let report = q.quotient_axiom_check(2).unwrap();
        assert!(report.passed(), "failures: {:?}", report.failures);
    }

    #[test]
    fn generators_commute_with_action() {
        let q = sl2_quantized(r(1, 1), HPoly::from_coeffs(vec![r(1, 1), r(1, 1)]));
        let l = q.algebra().clone();
        for g in q.ideal_elements() {
            for i in 0..3 {
                let x = UhElement::generator(i, 3);
                let comm = &x.mul(&g, &l) - &g.mul(&x, &l);
                assert!(q.ideal_reduce(&comm).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn shift_constant_mismatch_is_rejected() {
        let orbit = sl2_orbit(r(1, 1));
        let err = CasimirShift::new(vec![HPoly::constant(r(2, 1))], orbit.constants());
        assert!(matches!(err, Err(Error::ShiftConstantMismatch { .. })));
    }

    #[test]
    fn canonical_words_have_h_exponent_below_two() {
        let q = sl2_quantized(r(1, 1), HPoly::constant(r(1, 1)));
        for w in q.canonical_words_up_to(5) {
            assert!(w.0[0] <= 1, "word {w:?} should have been reduced");
        }
    }
}
