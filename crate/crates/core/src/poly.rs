//! The commutative algebra Pol(g*) with coefficients in `Q[h]`, the linear
//! Lie-Poisson bracket, and classical orbit ideals with normal-form
//! reduction.
//!
//! Monomials are exponent vectors ordered degree-lexicographically with
//! the algebra's declared variable precedence (declaration order, first
//! variable heaviest). For the built-in sl2 this makes the leading
//! monomial of `p - c` equal to `xH^2`, so the classical normal-form
//! basis is `{xX^a * xY^b * xH^e : e <= 1}`.

use std::cmp::Ordering as CmpOrdering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::lie::{regularity_check, InvariantPolySet, LieAlgebra, Regularity};
use crate::scalars::{HPoly, Rational};

/// Exponent vector of a commutative monomial (and, shared with the
/// enveloping-algebra module, of a nondecreasing PBW word).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(i: usize, n: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }
}

impl Ord for Monomial {
    /// Degree-lexicographic with index 0 heaviest.
    fn cmp(&self, other: &Self) -> CmpOrdering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<CmpOrdering> {
        Some(self.cmp(other))
    }
}

/// Degree-lexicographic monomial order with a declared variable
/// precedence (a permutation; position 0 is compared first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    precedence: Vec<usize>,
}

impl MonomialOrder {
    /// Declaration-order precedence: variable 0 heaviest.
    pub fn deglex(n: usize) -> Self {
        MonomialOrder {
            precedence: (0..n).collect(),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> CmpOrdering {
        let byd = a.degree().cmp(&b.degree());
        if byd != CmpOrdering::Equal {
            return byd;
        }
        for &v in &self.precedence {
            let c = a.0[v].cmp(&b.0[v]);
            if c != CmpOrdering::Equal {
                return c;
            }
        }
        CmpOrdering::Equal
    }
}

/// Commutative polynomial over `Q[h]` in n coordinates. Canonical: no zero
/// coefficients are stored, so equal values have identical term maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Monomial, HPoly>,
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Poly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Poly::constant(n, HPoly::one())
    }

    pub fn constant(n: usize, c: HPoly) -> Self {
        Poly::from_term(Monomial::one(n), c, n)
    }

    pub fn var(i: usize, n: usize) -> Self {
        Poly::from_term(Monomial::var(i, n), HPoly::one(), n)
    }

    pub fn from_term(m: Monomial, c: HPoly, n: usize) -> Self {
        debug_assert_eq!(m.0.len(), n);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { n, terms }
    }

    pub fn from_terms(n: usize, items: impl IntoIterator<Item = (Monomial, HPoly)>) -> Self {
        let mut p = Poly::zero(n);
        for (m, c) in items {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> std::collections::btree_map::Iter<'_, Monomial, HPoly> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> HPoly {
        self.terms.get(m).cloned().unwrap_or_else(HPoly::zero)
    }

    /// Total degree in the coordinates; the zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: HPoly) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.0.len(), self.n);
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &HPoly) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn scale_rat(&self, c: &Rational) -> Poly {
        self.scale(&HPoly::constant(c.clone()))
    }

    /// Partial derivative with respect to coordinate `i`.
    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] = e - 1;
            out.add_term(m2, c.scale(&Rational::from_int(e as i64)));
        }
        out
    }

    /// Exact evaluation of the coordinates at a rational point; the
    /// h-dependence of coefficients is preserved.
    pub fn eval(&self, point: &[Rational]) -> HPoly {
        assert_eq!(point.len(), self.n);
        let mut acc = HPoly::zero();
        for (m, c) in &self.terms {
            let mut factor = Rational::one();
            for (i, &e) in m.0.iter().enumerate() {
                factor = &factor * &point[i].pow(e);
            }
            acc += &c.scale(&factor);
        }
        acc
    }

    /// The classical part: every coefficient evaluated at h = 0.
    pub fn set_h_zero(&self) -> Poly {
        Poly::from_terms(
            self.n,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), HPoly::constant(c.constant_term()))),
        )
    }

    /// The coefficient of `h^k`, an h-free polynomial.
    pub fn coeff_of_h(&self, k: usize) -> Poly {
        Poly::from_terms(
            self.n,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), HPoly::constant(c.coeff(k)))),
        )
    }

    /// Largest h-power appearing in any coefficient.
    pub fn h_degree(&self) -> usize {
        self.terms.values().map(HPoly::degree).max().unwrap_or(0)
    }

    pub fn is_h_free(&self) -> bool {
        self.terms.values().all(HPoly::is_constant)
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.terms.keys().max_by(|a, b| order.compare(a, b))
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out = Poly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

/// Rendering of a polynomial against coordinate names, in descending
/// monomial order. Single h-power coefficients print inline
/// (`1/2*h*xH`); multi-term coefficients are parenthesized.
pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    names: &'a [String],
}

pub(crate) fn format_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (Monomial, HPoly)>,
    names: &[String],
) -> fmt::Result {
    let mut first = true;
    let mut any = false;
    for (m, c) in terms {
        any = true;
        let mono = render_monomial(&m, names);
        if let Some((k, coeff)) = single_h_term(&c) {
            let neg = coeff.is_negative();
            let mag = coeff.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut pieces: Vec<String> = Vec::new();
            if !mag.is_one() || (k == 0 && mono.is_empty()) {
                pieces.push(mag.to_string());
            }
            if k == 1 {
                pieces.push("h".into());
            } else if k > 1 {
                pieces.push(format!("h^{k}"));
            }
            if !mono.is_empty() {
                pieces.push(mono);
            }
            write!(f, "{}", pieces.join("*"))?;
        } else {
            if !first {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{mono}")?;
            }
        }
        first = false;
    }
    if !any {
        write!(f, "0")?;
    }
    Ok(())
}

fn single_h_term(c: &HPoly) -> Option<(usize, Rational)> {
    let mut found = None;
    for k in 0..=c.degree() {
        let v = c.coeff(k);
        if !v.is_zero() {
            if found.is_some() {
                return None;
            }
            found = Some((k, v));
        }
    }
    found
}

/// `xH^2*xX` style rendering of a bare monomial; empty for the unit.
pub fn render_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 1 {
            parts.push(names[i].clone());
        } else if e > 1 {
            parts.push(format!("{}^{}", names[i], e));
        }
    }
    parts.join("*")
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(
            f,
            self.poly
                .terms
                .iter()
                .rev()
                .map(|(m, c)| (m.clone(), c.clone())),
            self.names,
        )
    }
}

/// All monomials of exact total degree `d` in `n` variables, ascending
/// in the deglex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fn rec(i: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == current.len() {
            current[i] = left;
            out.push(Monomial(current.clone()));
            current[i] = 0;
            return;
        }
        for e in 0..=left {
            current[i] = e;
            rec(i + 1, left - e, current, out);
        }
        current[i] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(0, d, &mut current, &mut out);
    out.sort();
    out
}

/// All monomials of total degree `<= d`, ascending in deglex.
pub fn monomials_up_to_degree(n: usize, d: u32) -> Vec<Monomial> {
    (0..=d).flat_map(|k| monomials_of_degree(n, k)).collect()
}

/// The linear Lie-Poisson bracket
/// `{f, g} = sum c_ij^k x_k (df/dx_i)(dg/dx_j)`.
pub fn poisson_bracket(f: &Poly, g: &Poly, algebra: &LieAlgebra) -> Result<Poly> {
    let n = algebra.dim();
    if f.nvars() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: f.nvars(),
        });
    }
    if g.nvars() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: g.nvars(),
        });
    }
    let df: Vec<Poly> = (0..n).map(|i| f.partial(i)).collect();
    let dg: Vec<Poly> = (0..n).map(|j| g.partial(j)).collect();
    let mut out = Poly::zero(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let bracket = algebra.bracket_poly(i, j);
            if bracket.is_zero() {
                continue;
            }
            let mixed = &(&df[i] * &dg[j]) - &(&df[j] * &dg[i]);
            if !mixed.is_zero() {
                out = &out + &(&bracket * &mixed);
            }
        }
    }
    Ok(out)
}

/// A (regular) coadjoint orbit: the variety `p_i(x) = c_i` together with
/// the reduction machinery for its vanishing ideal.
#[derive(Clone, Debug)]
pub struct Orbit {
    algebra: LieAlgebra,
    invariants: InvariantPolySet,
    constants: Vec<Rational>,
    order: MonomialOrder,
    regular_point: Vec<Rational>,
    groebner: Vec<Poly>,
}

pub const DEFAULT_COMPLETION_BOUND: u32 = 8;

impl Orbit {
    /// Full orbit: one constant per invariant, count equal to the rank,
    /// validated against a regular point lying on the orbit.
    pub fn new(
        algebra: LieAlgebra,
        constants: Vec<Rational>,
        point: Vec<Rational>,
    ) -> Result<Orbit> {
        let invariants = algebra.invariant_set();
        Orbit::with_invariants(algebra, invariants, constants, point)
    }

    /// Orbit defined by an explicit (possibly truncated) invariant list.
    /// Regularity is checked for the supplied set only.
    pub fn with_invariants(
        algebra: LieAlgebra,
        invariants: InvariantPolySet,
        constants: Vec<Rational>,
        point: Vec<Rational>,
    ) -> Result<Orbit> {
        Orbit::with_bound(
            algebra,
            invariants,
            constants,
            point,
            DEFAULT_COMPLETION_BOUND,
        )
    }

    pub fn with_bound(
        algebra: LieAlgebra,
        invariants: InvariantPolySet,
        constants: Vec<Rational>,
        point: Vec<Rational>,
        bound: u32,
    ) -> Result<Orbit> {
        let l = invariants.len();
        if constants.len() != l {
            return Err(Error::InvalidOrbitPoint(format!(
                "expected {l} constants, got {}",
                constants.len()
            )));
        }
        if point.len() != algebra.dim() {
            return Err(Error::InvalidOrbitPoint(format!(
                "point has {} coordinates, algebra has {}",
                point.len(),
                algebra.dim()
            )));
        }
        for (i, (p, c)) in invariants.polys().iter().zip(&constants).enumerate() {
            let value = p.eval(&point);
            if value != HPoly::constant(c.clone()) {
                return Err(Error::InvalidOrbitPoint(format!(
                    "p_{} evaluates to {} at the point, expected {}",
                    i + 1,
                    value,
                    c
                )));
            }
        }
        match regularity_check(&algebra, &invariants, &point)? {
            Regularity::Regular => {}
            Regularity::Singular(rank) => {
                return Err(Error::InvalidOrbitPoint(format!(
                    "point is singular: Jacobian rank {rank} < {l}"
                )));
            }
        }
        let order = MonomialOrder::deglex(algebra.dim());
        let generators: Vec<Poly> = invariants
            .polys()
            .iter()
            .zip(&constants)
            .map(|(p, c)| p - &Poly::constant(algebra.dim(), HPoly::constant(c.clone())))
            .collect();
        let groebner = buchberger(generators, &order, bound)?;
        Ok(Orbit {
            algebra,
            invariants,
            constants,
            order,
            regular_point: point,
            groebner,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn invariants(&self) -> &InvariantPolySet {
        &self.invariants
    }

    pub fn constants(&self) -> &[Rational] {
        &self.constants
    }

    pub fn monomial_order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn regular_point(&self) -> &[Rational] {
        &self.regular_point
    }

    pub fn ideal_generators(&self) -> Vec<Poly> {
        self.invariants
            .polys()
            .iter()
            .zip(&self.constants)
            .map(|(p, c)| p - &Poly::constant(self.algebra.dim(), HPoly::constant(c.clone())))
            .collect()
    }

    pub fn groebner_basis(&self) -> &[Poly] {
        &self.groebner
    }

    /// Leading monomials of the completed classical generator set; a
    /// monomial is in classical normal form iff divisible by none.
    pub fn classical_leading_monomials(&self) -> Vec<Monomial> {
        self.groebner
            .iter()
            .filter_map(|g| g.leading_monomial(&self.order).cloned())
            .collect()
    }

    pub fn is_classical_canonical(&self, m: &Monomial) -> bool {
        self.classical_leading_monomials()
            .iter()
            .all(|lm| !lm.divides(m))
    }
}

/// Normal form of `f` modulo the orbit ideal `(p_1 - c_1, ..., p_l - c_l)`:
/// the result contains no monomial divisible by a leading monomial of the
/// completed generator set. Idempotent.
pub fn classical_reduce(f: &Poly, orbit: &Orbit) -> Result<Poly> {
    if f.nvars() != orbit.algebra.dim() {
        return Err(Error::DimensionMismatch {
            expected: orbit.algebra.dim(),
            got: f.nvars(),
        });
    }
    Ok(reduce_by(f, &orbit.groebner, &orbit.order))
}

/// Membership in the classical orbit ideal.
pub fn in_orbit_ideal(f: &Poly, orbit: &Orbit) -> Result<bool> {
    Ok(classical_reduce(f, orbit)?.is_zero())
}

/// Full multivariate division: repeatedly eliminates the largest monomial
/// divisible by some basis leading monomial.
fn reduce_by(f: &Poly, basis: &[Poly], order: &MonomialOrder) -> Poly {
    let leads: Vec<(Monomial, Rational)> = basis
        .iter()
        .map(|g| {
            let lm = g
                .leading_monomial(order)
                .expect("basis polynomials are nonzero")
                .clone();
            let lc = g.coeff(&lm).constant_term();
            debug_assert!(!lc.is_zero());
            (lm, lc)
        })
        .collect();
    let mut current = f.clone();
    loop {
        // largest reducible monomial, scanning descending
        let target = current.terms.iter().rev().find_map(|(m, c)| {
            leads
                .iter()
                .position(|(lm, _)| lm.divides(m))
                .map(|idx| (m.clone(), c.clone(), idx))
        });
        let Some((mono, coeff, idx)) = target else {
            return current;
        };
        let (lm, lc) = &leads[idx];
        let q = lm.quotient(&mono);
        let factor = coeff.scale(&lc.recip());
        let subtract = basis[idx].scale(&factor);
        let shifted = Poly::from_terms(
            current.n,
            subtract.terms.iter().map(|(m, c)| (q.mul(m), c.clone())),
        );
        current = &current - &shifted;
    }
}

/// Buchberger completion over Q (generators must be h-free). The degree
/// bound caps the lcm degree of processed S-pairs; exceeding it while
/// unresolved pairs remain is a hard error, never silent wrong output.
fn buchberger(generators: Vec<Poly>, order: &MonomialOrder, bound: u32) -> Result<Vec<Poly>> {
    let mut basis: Vec<Poly> = Vec::new();
    for g in generators {
        if g.is_zero() {
            continue;
        }
        assert!(g.is_h_free(), "orbit ideal generators must be h-free");
        basis.push(g);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        // smallest lcm degree first
        let lcm_deg = |&(i, j): &(usize, usize)| {
            let li = basis[i].leading_monomial(order).unwrap();
            let lj = basis[j].leading_monomial(order).unwrap();
            li.lcm(lj).degree()
        };
        let pos = (0..pairs.len())
            .min_by_key(|&k| lcm_deg(&pairs[k]))
            .unwrap();
        let (i, j) = pairs.swap_remove(pos);
        let li = basis[i].leading_monomial(order).unwrap().clone();
        let lj = basis[j].leading_monomial(order).unwrap().clone();
        if li.gcd_is_one(&lj) {
            continue;
        }
        let lcm = li.lcm(&lj);
        if lcm.degree() > bound {
            return Err(Error::GroebnerIncomplete { bound });
        }
        let ci = basis[i].coeff(&li).constant_term();
        let cj = basis[j].coeff(&lj).constant_term();
        let qi = li.quotient(&lcm);
        let qj = lj.quotient(&lcm);
        let mi = Poly::from_term(qi, HPoly::constant(ci.recip()), basis[i].n);
        let mj = Poly::from_term(qj, HPoly::constant(cj.recip()), basis[j].n);
        let s = &(&mi * &basis[i]) - &(&mj * &basis[j]);
        let r = reduce_by(&s, &basis, order);
        if !r.is_zero() {
            let new_idx = basis.len();
            for k in 0..new_idx {
                pairs.push((k, new_idx));
            }
            basis.push(r);
        }
    }
    // inter-reduce and make monic for a canonical basis
    let mut reduced: Vec<Poly> = Vec::new();
    for i in 0..basis.len() {
        let others: Vec<Poly> = basis
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = reduce_by(&basis[i], &others, order);
        if r.is_zero() {
            continue;
        }
        let lm = r.leading_monomial(order).unwrap().clone();
        let lc = r.coeff(&lm).constant_term();
        let monic = r.scale_rat(&lc.recip());
        if !reduced.contains(&monic) {
            reduced.push(monic);
        }
    }
    reduced.sort_by(|a, b| {
        let la = a.leading_monomial(order).unwrap();
        let lb = b.leading_monomial(order).unwrap();
        order.compare(la, lb)
    });
    Ok(reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieAlgebra;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn sl2_orbit(c: Rational) -> Orbit {
        let l = LieAlgebra::sl2();
        let point = vec![Rational::zero(), Rational::one(), c.clone()];
        Orbit::new(l, vec![c], point).unwrap()
    }

    fn var(i: usize) -> Poly {
        Poly::var(i, 3)
    }

    #[test]
    fn deglex_order() {
        // degree first, then lex with index 0 heaviest
        let xh2 = Monomial(vec![2, 0, 0]);
        let xxy = Monomial(vec![0, 1, 1]);
        let xh = Monomial(vec![1, 0, 0]);
        assert!(xh2 > xxy);
        assert!(xxy > xh);
        assert!(Monomial(vec![1, 0, 0]) > Monomial(vec![0, 1, 0]));
    }

    #[test]
    fn bracket_linear_cases() {
        let l = LieAlgebra::sl2();
        // {xX, xY} = xH
        let b = poisson_bracket(&var(1), &var(2), &l).unwrap();
        assert_eq!(b, var(0));
        // {xH, xX} = 2 xX
        let b = poisson_bracket(&var(0), &var(1), &l).unwrap();
        assert_eq!(b, var(1).scale_rat(&r(2, 1)));
    }

    #[test]
    fn bracket_kills_invariant_pairings() {
        let l = LieAlgebra::sl2();
        // {xH, xX*xY} = 0 by Leibniz cancellation
        let xxy = &var(1) * &var(2);
        let b = poisson_bracket(&var(0), &xxy, &l).unwrap();
        assert!(b.is_zero());
        // {p, f} = 0 for the invariant p and all monomials f of degree <= 3
        let p = l.quadratic_invariant().unwrap();
        for m in monomials_up_to_degree(3, 3) {
            let f = Poly::from_term(m, HPoly::one(), 3);
            let b = poisson_bracket(&p, &f, &l).unwrap();
            assert!(b.is_zero(), "bracket with {:?} is nonzero", f);
        }
    }

    #[test]
    fn classical_reduce_sl2() {
        let c = r(2, 1);
        let orbit = sl2_orbit(c.clone());
        // xH^2 -> 4c - 4 xX xY
        let xh2 = &var(0) * &var(0);
        let reduced = classical_reduce(&xh2, &orbit).unwrap();
        let expect = &Poly::constant(3, HPoly::constant(&r(4, 1) * &c))
            - &(&var(1) * &var(2)).scale_rat(&r(4, 1));
        assert_eq!(reduced, expect);
        // xX already normal
        assert_eq!(classical_reduce(&var(1), &orbit).unwrap(), var(1));
        // p reduces to its constant
        let p = orbit.algebra().quadratic_invariant().unwrap();
        assert_eq!(
            classical_reduce(&p, &orbit).unwrap(),
            Poly::constant(3, HPoly::constant(c))
        );
    }

    #[test]
    fn ideal_membership() {
        let c = r(1, 1);
        let orbit = sl2_orbit(c.clone());
        let p = orbit.algebra().quadratic_invariant().unwrap();
        let pc = &p - &Poly::constant(3, HPoly::constant(c.clone()));
        // (p - c) * xH is in the ideal
        assert!(in_orbit_ideal(&(&pc * &var(0)), &orbit).unwrap());
        // xH is not
        assert!(!in_orbit_ideal(&var(0), &orbit).unwrap());
        // constructed multiple: xH^2*xX - (4c - 4 xX xY)*xX
        let lhs = &(&var(0) * &var(0)) * &var(1);
        let rhs = &(&Poly::constant(3, HPoly::constant(&r(4, 1) * &c))
            - &(&var(1) * &var(2)).scale_rat(&r(4, 1)))
            * &var(1);
        assert!(in_orbit_ideal(&(&lhs - &rhs), &orbit).unwrap());
    }

    #[test]
    fn reduce_is_algebra_map_mod_ideal() {
        let orbit = sl2_orbit(r(3, 1));
        let f = &(&var(0) * &var(0)) + &(&var(1) * &var(0));
        let g = &(&var(2) * &var(0)) + &Poly::one(3);
        let fg = classical_reduce(&(&f * &g), &orbit).unwrap();
        let rf = classical_reduce(&f, &orbit).unwrap();
        let rg = classical_reduce(&g, &orbit).unwrap();
        let reduced_product = classical_reduce(&(&rf * &rg), &orbit).unwrap();
        assert_eq!(fg, reduced_product);
    }

    #[test]
    fn bracket_descends_to_quotient() {
        // in_orbit_ideal(f) implies in_orbit_ideal({f, g}) for monomial g
        let orbit = sl2_orbit(r(1, 1));
        let p = orbit.algebra().quadratic_invariant().unwrap();
        let pc = &p - &Poly::one(3);
        for m in monomials_up_to_degree(3, 3) {
            let g = Poly::from_term(m, HPoly::one(), 3);
            for f in [pc.clone(), &pc * &var(0), &pc * &var(2)] {
                let b = poisson_bracket(&f, &g, orbit.algebra()).unwrap();
                assert!(in_orbit_ideal(&b, &orbit).unwrap());
            }
        }
    }

    #[test]
    fn orbit_rejects_bad_points() {
        let l = LieAlgebra::sl2();
        // point not on the orbit
        let err = Orbit::new(
            l.clone(),
            vec![r(1, 1)],
            vec![Rational::zero(), Rational::zero(), Rational::zero()],
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidOrbitPoint(_)));
        // origin is on the c = 0 cone but singular
        let err = Orbit::new(
            l,
            vec![Rational::zero()],
            vec![Rational::zero(), Rational::zero(), Rational::zero()],
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidOrbitPoint(_)));
    }

    #[test]
    fn monomial_enumeration_counts() {
        // C(n + d - 1, d) monomials of degree d
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_up_to_degree(3, 2).len(), 10);
        let ms = monomials_of_degree(2, 2);
        assert_eq!(
            ms,
            vec![
                Monomial(vec![0, 2]),
                Monomial(vec![1, 1]),
                Monomial(vec![2, 0])
            ]
        );
    }

    #[test]
    fn display_matches_grammar() {
        let l = LieAlgebra::sl2();
        let names = l.coordinate_names();
        let p = &(&var(1) * &var(2)) + &var(0).scale(&HPoly::term(r(1, 2), 1));
        assert_eq!(p.display(&names).to_string(), "xX*xY + 1/2*h*xH");
        let q = &var(0).scale_rat(&r(-1, 1))
            + &Poly::constant(3, HPoly::from_coeffs(vec![r(1, 1), r(1, 1)]));
        assert_eq!(q.display(&names).to_string(), "-xH + (1 + h)");
        assert_eq!(Poly::zero(3).display(&names).to_string(), "0");
    }
}
