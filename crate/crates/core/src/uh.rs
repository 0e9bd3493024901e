//! The deformed enveloping algebra U_h as a terminating rewriting system.
//!
//! Tensor words over the generators are rewritten by the oriented
//! relations `X_j X_i -> X_i X_j + h [X_j, X_i]` (for `j > i`) until every
//! word is nondecreasing. Termination follows from the measure
//! (word length, inversion count) ordered lexicographically: a bracket
//! term shortens the word, a swap keeps the length and removes one
//! inversion. Nondecreasing words are stored as exponent vectors, which
//! makes the PBW map between commutative monomials and basis words the
//! identity on the underlying data.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Mutex;

use crate::lie::LieAlgebra;
use crate::poly::{format_terms, Monomial, Poly};
use crate::scalars::{HPoly, Rational};

/// A tensor word: a finite sequence of generator indices, not
/// necessarily sorted.
pub type Word = Vec<usize>;

/// Which descending adjacent pair a rewrite step targets. Both
/// strategies must produce the same normal form; the acceptance suite
/// checks this as the confluence witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteStrategy {
    LeftmostFirst,
    RightmostFirst,
}

/// Element of U_h in PBW normal form: a map from nondecreasing words
/// (stored as exponent vectors) to coefficients in `Q[h]`. Canonical: no
/// zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UhElement {
    n: usize,
    terms: BTreeMap<Monomial, HPoly>,
}

impl UhElement {
    pub fn zero(n: usize) -> Self {
        UhElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        UhElement::from_term(Monomial::one(n), HPoly::one(), n)
    }

    /// The generator `X_i` as an element.
    pub fn generator(i: usize, n: usize) -> Self {
        UhElement::from_term(Monomial::var(i, n), HPoly::one(), n)
    }

    pub fn from_term(word: Monomial, c: HPoly, n: usize) -> Self {
        debug_assert_eq!(word.0.len(), n);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(word, c);
        }
        UhElement { n, terms }
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

    pub fn coeff(&self, word: &Monomial) -> HPoly {
        self.terms.get(word).cloned().unwrap_or_else(HPoly::zero)
    }

    /// Maximal word length (= total degree) present.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, word: Monomial, c: HPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
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

    pub fn scale(&self, c: &HPoly) -> UhElement {
        if c.is_zero() {
            return UhElement::zero(self.n);
        }
        UhElement {
            n: self.n,
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    pub fn scale_rat(&self, c: &Rational) -> UhElement {
        self.scale(&HPoly::constant(c.clone()))
    }

    /// Product in U_h: concatenate word pairs and renormalize.
    pub fn mul(&self, rhs: &UhElement, algebra: &LieAlgebra) -> UhElement {
        assert_eq!(self.n, rhs.n, "algebra mismatch");
        let mut pending: Vec<(Word, HPoly)> = Vec::new();
        for (wa, ca) in &self.terms {
            let a = expand_word(wa);
            for (wb, cb) in &rhs.terms {
                let mut word = a.clone();
                word.extend(expand_word(wb));
                pending.push((word, ca * cb));
            }
        }
        pbw_normal_form(pending, algebra, RewriteStrategy::LeftmostFirst)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> UhDisplay<'a> {
        UhDisplay {
            element: self,
            names,
        }
    }
}

impl Add for &UhElement {
    type Output = UhElement;
    fn add(self, rhs: &UhElement) -> UhElement {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &UhElement {
    type Output = UhElement;
    fn sub(self, rhs: &UhElement) -> UhElement {
        self + &(-rhs)
    }
}

impl Neg for &UhElement {
    type Output = UhElement;
    fn neg(self) -> UhElement {
        UhElement {
            n: self.n,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

/// Printing of a normal form: words as `H^2*X*Y` style strings with
/// sorted exponent grouping, coefficients in `Q[h]` textual form.
pub struct UhDisplay<'a> {
    element: &'a UhElement,
    names: &'a [String],
}

impl fmt::Display for UhDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(
            f,
            self.element
                .terms
                .iter()
                .rev()
                .map(|(m, c)| (m.clone(), c.clone())),
            self.names,
        )
    }
}

/// The nondecreasing word for an exponent vector.
pub fn expand_word(m: &Monomial) -> Word {
    let mut w = Vec::with_capacity(m.degree() as usize);
    for (i, &e) in m.0.iter().enumerate() {
        for _ in 0..e {
            w.push(i);
        }
    }
    w
}

fn word_to_monomial(w: &Word, n: usize) -> Monomial {
    let mut e = vec![0u32; n];
    for &i in w {
        e[i] += 1;
    }
    Monomial(e)
}

/// Rewrite a formal sum of tensor words into PBW normal form. Every
/// descending adjacent pair `X_j X_i` (j > i) becomes
/// `X_i X_j + h * [X_j, X_i]`; the result is independent of the
/// rewrite order.
pub fn pbw_normal_form(
    input: Vec<(Word, HPoly)>,
    algebra: &LieAlgebra,
    strategy: RewriteStrategy,
) -> UhElement {
    let n = algebra.dim();
    let mut result = UhElement::zero(n);
    let mut stack: Vec<(Word, HPoly)> = input.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    while let Some((word, coeff)) = stack.pop() {
        let descent = match strategy {
            RewriteStrategy::LeftmostFirst => {
                (0..word.len().saturating_sub(1)).find(|&t| word[t] > word[t + 1])
            }
            RewriteStrategy::RightmostFirst => (0..word.len().saturating_sub(1))
                .rev()
                .find(|&t| word[t] > word[t + 1]),
        };
        let Some(t) = descent else {
            result.add_term(word_to_monomial(&word, n), coeff);
            continue;
        };
        let j = word[t];
        let i = word[t + 1];
        let mut swapped = word.clone();
        swapped.swap(t, t + 1);
        // bracket term: h * c_ji^k with the pair replaced by X_k
        for (k, v) in algebra.bracket_coeffs(j, i).iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let mut shorter = Vec::with_capacity(word.len() - 1);
            shorter.extend_from_slice(&word[..t]);
            shorter.push(k);
            shorter.extend_from_slice(&word[t + 2..]);
            stack.push((shorter, coeff.scale(v).shift(1)));
        }
        stack.push((swapped, coeff));
    }
    result
}

/// The PBW quantization map of a polynomial: each sorted monomial goes
/// to the corresponding nondecreasing word. On the underlying data this
/// is the identity, which is exactly why it is a module isomorphism.
pub fn psi_pbw(f: &Poly) -> UhElement {
    let mut out = UhElement::zero(f.nvars());
    for (m, c) in f.terms() {
        out.add_term(m.clone(), c.clone());
    }
    out
}

/// Inverse of [`psi_pbw`].
pub fn psi_pbw_inv(a: &UhElement) -> Poly {
    Poly::from_terms(a.n, a.terms.iter().map(|(w, c)| (w.clone(), c.clone())))
}

/// Memo table for products of PBW basis words, keyed per algebra.
/// Guarded so cached and uncached computations agree (the products are
/// pure).
#[derive(Default)]
pub struct MulCache {
    map: Mutex<BTreeMap<(Monomial, Monomial), UhElement>>,
}

impl MulCache {
    pub fn new() -> Self {
        MulCache::default()
    }

    fn get_or_compute(&self, a: &Monomial, b: &Monomial, algebra: &LieAlgebra) -> UhElement {
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.map.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let mut word = expand_word(a);
        word.extend(expand_word(b));
        let computed = pbw_normal_form(
            vec![(word, HPoly::one())],
            algebra,
            RewriteStrategy::LeftmostFirst,
        );
        self.map
            .lock()
            .unwrap()
            .entry(key)
            .or_insert(computed)
            .clone()
    }
}

/// Product in U_h with basis-word products memoized across calls.
pub fn uh_mul_cached(
    a: &UhElement,
    b: &UhElement,
    algebra: &LieAlgebra,
    cache: &MulCache,
) -> UhElement {
    assert_eq!(a.n, b.n, "algebra mismatch");
    let mut out = UhElement::zero(a.n);
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let prod = cache.get_or_compute(ma, mb, algebra);
            for (w, c) in &prod.terms {
                out.add_term(w.clone(), &(ca * cb) * c);
            }
        }
    }
    out
}

/// Memo table for symmetrized monomials, keyed per algebra. Guarded so
/// cached and uncached computations agree (the function is pure).
#[derive(Default)]
pub struct SymCache {
    map: Mutex<BTreeMap<Monomial, UhElement>>,
}

impl SymCache {
    pub fn new() -> Self {
        SymCache::default()
    }

    fn get_or_compute(&self, m: &Monomial, algebra: &LieAlgebra) -> UhElement {
        if let Some(hit) = self.map.lock().unwrap().get(m) {
            return hit.clone();
        }
        let computed = symmetrize_monomial(m, algebra);
        self.map
            .lock()
            .unwrap()
            .entry(m.clone())
            .or_insert(computed)
            .clone()
    }
}

/// Sym of a single monomial: the average over all distinct arrangements
/// of its letters, weighted by the multiplicity of each arrangement in
/// the full permutation sum.
fn symmetrize_monomial(m: &Monomial, algebra: &LieAlgebra) -> UhElement {
    let word = expand_word(m);
    let k = word.len();
    if k == 0 {
        return UhElement::one(algebra.dim());
    }
    // each distinct arrangement occurs (prod e_i!) times among the k!
    // permutations
    let mut weight = Rational::one();
    for &e in &m.0 {
        for f in 1..=e as i64 {
            weight = &weight * &Rational::from_int(f);
        }
    }
    for f in 1..=k as i64 {
        weight = &weight / &Rational::from_int(f);
    }
    let mut arrangements = Vec::new();
    let mut current = word.clone();
    current.sort_unstable();
    loop {
        arrangements.push((current.clone(), HPoly::constant(weight.clone())));
        if !next_permutation(&mut current) {
            break;
        }
    }
    pbw_normal_form(arrangements, algebra, RewriteStrategy::LeftmostFirst)
}

/// Standard next lexicographic permutation; returns false after the last
/// one. Naturally enumerates the distinct arrangements of a multiset.
pub fn next_permutation(w: &mut [usize]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// The symmetrizer quantization map, extended HPoly-linearly.
pub fn symmetrize(f: &Poly, algebra: &LieAlgebra, cache: &SymCache) -> UhElement {
    let mut out = UhElement::zero(f.nvars());
    for (m, c) in f.terms() {
        out = &out + &cache.get_or_compute(m, algebra).scale(c);
    }
    out
}

/// Inverse of the symmetrizer, computed degree by degree using the
/// triangularity Sym(x^e) = word(e) + (strictly shorter words with
/// positive h-order). Exact round trip both ways.
pub fn symmetrize_inv(a: &UhElement, algebra: &LieAlgebra, cache: &SymCache) -> Poly {
    let n = a.n;
    let mut residue = a.clone();
    let mut out = Poly::zero(n);
    while !residue.is_zero() {
        let top = residue.degree();
        let slice: Vec<(Monomial, HPoly)> = residue
            .terms
            .iter()
            .filter(|(w, _)| w.degree() == top)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        let layer = Poly::from_terms(n, slice);
        out = &out + &layer;
        residue = &residue - &symmetrize(&layer, algebra, cache);
        debug_assert!(residue.is_zero() || residue.degree() < top);
    }
    out
}

/// True iff `A` commutes with every generator in U_h.
pub fn centrality_check(a: &UhElement, algebra: &LieAlgebra) -> bool {
    (0..algebra.dim()).all(|i| {
        let x = UhElement::generator(i, algebra.dim());
        a.mul(&x, algebra) == x.mul(a, algebra)
    })
}
