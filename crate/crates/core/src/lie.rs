//! Lie-algebra data: structure constants over exact rationals, validated
//! against antisymmetry, the Jacobi identity and nondegeneracy of the
//! Killing form (the semisimplicity gate). Ships the built-in algebras
//! sl2, so3 and sl3, their invariant polynomials, and the pointwise
//! regularity test for orbit points.
//!
//! Generator order is declaration order; it fixes both the PBW word
//! order and the variable precedence of the monomial order. sl2 is
//! declared (H, X, Y) so normal words read `H^a X^b Y^c`.

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::poly::{poisson_bracket, Poly};
use crate::scalars::Rational;

/// A semisimple Lie algebra given by structure constants `c[i][j][k]`
/// (the coefficient of `X_k` in `[X_i, X_j]`).
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    name: String,
    names: Vec<String>,
    rank: usize,
    c: Vec<Vec<Vec<Rational>>>,
    invariants: Vec<Poly>,
    quad_norm: Rational,
}

/// One row of a user bracket table: `[X_i, X_j] = sum_k coeffs[k] X_k`
/// with `i < j` (0-based); the antisymmetric completion is applied.
#[derive(Clone, Debug)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<(usize, Rational)>,
}

impl LieAlgebra {
    /// Validated constructor. Checks antisymmetry of the table shape, the
    /// Jacobi identity on every index triple, and nondegeneracy of the
    /// Killing form. When `rank == 1` the quadratic invariant (inverse
    /// Killing form, unnormalized) is attached automatically.
    pub fn make_algebra(
        name: &str,
        names: Vec<String>,
        rank: usize,
        entries: &[BracketEntry],
    ) -> Result<LieAlgebra> {
        let n = names.len();
        let mut c = vec![vec![vec![Rational::zero(); n]; n]; n];
        for e in entries {
            if e.i >= e.j {
                return Err(Error::AntisymmetryViolation {
                    i: e.i + 1,
                    j: e.j + 1,
                });
            }
            if e.j >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: e.j + 1,
                });
            }
            for (k, v) in &e.coeffs {
                if *k >= n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        got: k + 1,
                    });
                }
                c[e.i][e.j][*k] = &c[e.i][e.j][*k] + v;
                c[e.j][e.i][*k] = &c[e.j][e.i][*k] - v;
            }
        }
        let mut algebra = LieAlgebra {
            name: name.to_string(),
            names,
            rank,
            c,
            invariants: Vec::new(),
            quad_norm: Rational::one(),
        };
        algebra.check_jacobi()?;
        if algebra.killing_form().rank() != n {
            return Err(Error::DegenerateKillingForm);
        }
        if rank == 1 {
            let p = algebra.quadratic_invariant()?;
            algebra = algebra.with_invariants(vec![p])?;
        }
        Ok(algebra)
    }

    /// Attach validated invariant polynomials (count must equal the rank,
    /// each homogeneous, h-free and Poisson-central).
    pub fn with_invariants(mut self, polys: Vec<Poly>) -> Result<LieAlgebra> {
        self.invariants.clear();
        let validated = InvariantPolySet::new(polys, &self)?;
        if validated.len() != self.rank {
            return Err(Error::MissingInvariants { rank: self.rank });
        }
        self.invariants = validated.polys;
        Ok(self)
    }

    fn with_quad_norm(mut self, norm: Rational) -> Self {
        self.quad_norm = norm;
        self
    }

    fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    for r in 0..n {
                        let mut sum = Rational::zero();
                        for m in 0..n {
                            sum += &(&self.c[i][j][m] * &self.c[m][k][r]);
                            sum += &(&self.c[j][k][m] * &self.c[m][i][r]);
                            sum += &(&self.c[k][i][m] * &self.c[m][j][r]);
                        }
                        if !sum.is_zero() {
                            return Err(Error::JacobiViolation {
                                i: i + 1,
                                j: j + 1,
                                k: k + 1,
                                r: r + 1,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    // --- built-ins ---------------------------------------------------

    /// sl(2) with relations `[H,X] = 2X`, `[H,Y] = -2Y`, `[X,Y] = H`.
    pub fn sl2() -> LieAlgebra {
        let entries = [
            BracketEntry {
                i: 0,
                j: 1,
                coeffs: vec![(1, Rational::from_int(2))],
            },
            BracketEntry {
                i: 0,
                j: 2,
                coeffs: vec![(2, Rational::from_int(-2))],
            },
            BracketEntry {
                i: 1,
                j: 2,
                coeffs: vec![(0, Rational::one())],
            },
        ];
        let names = vec!["H".into(), "X".into(), "Y".into()];
        let core = LieAlgebra::make_algebra("sl2", names, 1, &entries)
            .expect("sl2 table is valid")
            .with_quad_norm(Rational::from_int(2));
        // re-derive the invariant with the sl2 normalization: p = xX*xY + 1/4*xH^2
        let p = core
            .quadratic_invariant()
            .expect("sl2 Killing form invertible");
        core.with_invariants(vec![p])
            .expect("sl2 invariant is central")
    }

    /// so(3) with cyclic relations `[e_i, e_j] = e_k`.
    pub fn so3() -> LieAlgebra {
        let entries = [
            BracketEntry {
                i: 0,
                j: 1,
                coeffs: vec![(2, Rational::one())],
            },
            BracketEntry {
                i: 0,
                j: 2,
                coeffs: vec![(1, Rational::from_int(-1))],
            },
            BracketEntry {
                i: 1,
                j: 2,
                coeffs: vec![(0, Rational::one())],
            },
        ];
        let names = vec!["e1".into(), "e2".into(), "e3".into()];
        let core = LieAlgebra::make_algebra("so3", names, 1, &entries)
            .expect("so3 table is valid")
            .with_quad_norm(Rational::from_int(-2));
        let p = core
            .quadratic_invariant()
            .expect("so3 Killing form invertible");
        core.with_invariants(vec![p])
            .expect("so3 invariant is central")
    }

    /// sl(3) as the 8-dimensional algebra of its defining representation,
    /// basis (H1, H2, E12, E13, E23, E21, E31, E32). Rank 2; quadratic
    /// invariant from the inverse Killing form, cubic invariant the trace
    /// power tr(M(x)^3) with g identified with g* via the trace form.
    pub fn sl3() -> LieAlgebra {
        let mats = sl3_basis_matrices();
        let n = mats.len();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let comm = &(&mats[i] * &mats[j]) - &(&mats[j] * &mats[i]);
                let coeffs = expand_sl3(&comm);
                if !coeffs.is_empty() {
                    entries.push(BracketEntry { i, j, coeffs });
                }
            }
        }
        let names = vec![
            "H1".into(),
            "H2".into(),
            "E12".into(),
            "E13".into(),
            "E23".into(),
            "E21".into(),
            "E31".into(),
            "E32".into(),
        ];
        let core = LieAlgebra::make_algebra("sl3", names, 2, &entries)
            .expect("sl3 defining-representation table is valid")
            .with_quad_norm(Rational::from_int(3));
        let p2 = core
            .quadratic_invariant()
            .expect("sl3 Killing form invertible");
        let p3 = sl3_cubic_invariant(&mats);
        core.with_invariants(vec![p2, p3])
            .expect("sl3 trace-power invariants are central")
    }

    /// Look up a built-in algebra by name.
    pub fn builtin(name: &str) -> Option<LieAlgebra> {
        match name {
            "sl2" => Some(LieAlgebra::sl2()),
            "so3" => Some(LieAlgebra::so3()),
            "sl3" => Some(LieAlgebra::sl3()),
            _ => None,
        }
    }

    pub const BUILTIN_NAMES: [&'static str; 3] = ["sl2", "so3", "sl3"];

    // --- accessors ---------------------------------------------------

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Coordinate-function names on g*: `x` prefixed to the generator
    /// names, e.g. `xH, xX, xY` for sl2.
    pub fn coordinate_names(&self) -> Vec<String> {
        self.names.iter().map(|s| format!("x{s}")).collect()
    }

    pub fn struct_const(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[i][j][k]
    }

    pub fn bracket_coeffs(&self, i: usize, j: usize) -> &[Rational] {
        &self.c[i][j]
    }

    /// The linear polynomial `sum_k c_ij^k x_k`.
    pub fn bracket_poly(&self, i: usize, j: usize) -> Poly {
        let n = self.dim();
        let mut p = Poly::zero(n);
        for (k, v) in self.c[i][j].iter().enumerate() {
            if !v.is_zero() {
                p = &p + &Poly::var(k, n).scale_rat(v);
            }
        }
        p
    }

    /// Structure-constant equality (names and labels ignored).
    pub fn same_structure(&self, other: &LieAlgebra) -> bool {
        self.c == other.c
    }

    /// Killing form `kappa_ij = sum_{k,m} c_ik^m c_jm^k`.
    pub fn killing_form(&self) -> RatMatrix {
        let n = self.dim();
        let mut kappa = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut sum = Rational::zero();
                for k in 0..n {
                    for m in 0..n {
                        sum += &(&self.c[i][k][m] * &self.c[j][m][k]);
                    }
                }
                kappa.set(i, j, sum);
            }
        }
        kappa
    }

    /// The quadratic invariant `sum kappa^{ij} x_i x_j` rescaled by the
    /// algebra's normalization constant (2 for sl2, so the built-in sl2
    /// yields exactly `xX*xY + 1/4*xH^2`).
    pub fn quadratic_invariant(&self) -> Result<Poly> {
        let n = self.dim();
        let inv = self
            .killing_form()
            .inverse()
            .ok_or(Error::DegenerateKillingForm)?;
        let mut p = Poly::zero(n);
        for i in 0..n {
            for j in 0..n {
                let v = inv.get(i, j);
                if v.is_zero() {
                    continue;
                }
                let m = &Poly::var(i, n) * &Poly::var(j, n);
                p = &p + &m.scale_rat(v);
            }
        }
        Ok(p.scale_rat(&self.quad_norm))
    }

    /// The algebra's validated invariant polynomial set.
    pub fn invariant_set(&self) -> InvariantPolySet {
        assert!(
            !self.invariants.is_empty(),
            "algebra `{}` carries no invariant polynomials; supply them explicitly",
            self.name
        );
        InvariantPolySet {
            polys: self.invariants.clone(),
        }
    }

    pub fn has_invariants(&self) -> bool {
        !self.invariants.is_empty()
    }
}

fn sl3_basis_matrices() -> Vec<RatMatrix> {
    let e = |a: usize, b: usize| {
        let mut m = RatMatrix::zeros(3, 3);
        m.set(a, b, Rational::one());
        m
    };
    let h1 = {
        let mut m = RatMatrix::zeros(3, 3);
        m.set(0, 0, Rational::one());
        m.set(1, 1, Rational::from_int(-1));
        m
    };
    let h2 = {
        let mut m = RatMatrix::zeros(3, 3);
        m.set(1, 1, Rational::one());
        m.set(2, 2, Rational::from_int(-1));
        m
    };
    vec![h1, h2, e(0, 1), e(0, 2), e(1, 2), e(1, 0), e(2, 0), e(2, 1)]
}

/// Expand a traceless 3x3 matrix in the sl3 basis above.
fn expand_sl3(m: &RatMatrix) -> Vec<(usize, Rational)> {
    let mut coeffs = Vec::new();
    let push = |coeffs: &mut Vec<(usize, Rational)>, idx: usize, v: Rational| {
        if !v.is_zero() {
            coeffs.push((idx, v));
        }
    };
    push(&mut coeffs, 0, m.get(0, 0).clone());
    push(&mut coeffs, 1, -m.get(2, 2));
    let offdiag = [
        (2, 0, 1),
        (3, 0, 2),
        (4, 1, 2),
        (5, 1, 0),
        (6, 2, 0),
        (7, 2, 1),
    ];
    for (idx, a, b) in offdiag {
        push(&mut coeffs, idx, m.get(a, b).clone());
    }
    coeffs
}

/// tr(M(x)^3) where M(x) is the matrix of the point x under the
/// trace-form identification of g* with g.
#[allow(clippy::needless_range_loop)]
fn sl3_cubic_invariant(mats: &[RatMatrix]) -> Poly {
    let n = mats.len();
    let mut gram = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let prod = &mats[i] * &mats[j];
            let mut tr = Rational::zero();
            for a in 0..3 {
                tr += prod.get(a, a);
            }
            gram.set(i, j, tr);
        }
    }
    let gram_inv = gram.inverse().expect("trace form of sl3 is nondegenerate");
    // y = t^{-1} x as linear polynomials, M(x) = sum y_i rho(X_i)
    let mut entries = vec![vec![Poly::zero(n); 3]; 3];
    for i in 0..n {
        let mut y = Poly::zero(n);
        for j in 0..n {
            let v = gram_inv.get(i, j);
            if !v.is_zero() {
                y = &y + &Poly::var(j, n).scale_rat(v);
            }
        }
        for a in 0..3 {
            for b in 0..3 {
                let v = mats[i].get(a, b);
                if !v.is_zero() {
                    entries[a][b] = &entries[a][b] + &y.scale_rat(v);
                }
            }
        }
    }
    let square = poly_mat3_mul(&entries, &entries);
    let cube = poly_mat3_mul(&square, &entries);
    let mut trace = Poly::zero(n);
    for a in 0..3 {
        trace = &trace + &cube[a][a];
    }
    trace
}

fn poly_mat3_mul(a: &[Vec<Poly>], b: &[Vec<Poly>]) -> Vec<Vec<Poly>> {
    let n = a[0][0].nvars();
    let mut out = vec![vec![Poly::zero(n); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
            }
        }
    }
    out
}

/// A validated family of invariant polynomials: each homogeneous, h-free
/// and Poisson-commuting with every coordinate function.
#[derive(Clone, Debug)]
pub struct InvariantPolySet {
    polys: Vec<Poly>,
}

impl InvariantPolySet {
    pub fn new(polys: Vec<Poly>, algebra: &LieAlgebra) -> Result<InvariantPolySet> {
        let n = algebra.dim();
        for (idx, p) in polys.iter().enumerate() {
            if p.nvars() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: p.nvars(),
                });
            }
            if !p.is_h_free() || !is_homogeneous(p) {
                return Err(Error::NotInvariant {
                    index: idx + 1,
                    coordinate: "<not homogeneous and h-free>".into(),
                });
            }
            for i in 0..n {
                let b = poisson_bracket(p, &Poly::var(i, n), algebra)?;
                if !b.is_zero() {
                    return Err(Error::NotInvariant {
                        index: idx + 1,
                        coordinate: algebra.coordinate_names()[i].clone(),
                    });
                }
            }
        }
        Ok(InvariantPolySet { polys })
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

fn is_homogeneous(p: &Poly) -> bool {
    let mut degrees = p.terms().map(|(m, _)| m.degree());
    match degrees.next() {
        None => true,
        Some(d) => degrees.all(|e| e == d),
    }
}

/// Regularity status of a point of g*.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regularity {
    Regular,
    /// The differentials of the invariants span only this rank.
    Singular(usize),
}

/// Pointwise regularity: the point is regular iff the differentials
/// `dp_1, ..., dp_l` are linearly independent there.
pub fn regularity_check(
    algebra: &LieAlgebra,
    invariants: &InvariantPolySet,
    point: &[Rational],
) -> Result<Regularity> {
    let n = algebra.dim();
    if point.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: point.len(),
        });
    }
    let l = invariants.len();
    let mut jacobian = RatMatrix::zeros(l, n);
    for (row, p) in invariants.polys().iter().enumerate() {
        for j in 0..n {
            let d = p.partial(j).eval(point);
            // invariants are h-free, so the evaluation is a constant
            jacobian.set(row, j, d.constant_term());
        }
    }
    let rank = jacobian.rank();
    if rank == l {
        Ok(Regularity::Regular)
    } else {
        Ok(Regularity::Singular(rank))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use crate::scalars::HPoly;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn sl2_is_valid() {
        let l = LieAlgebra::sl2();
        assert_eq!(l.dim(), 3);
        assert_eq!(l.rank(), 1);
        assert_eq!(l.names(), &["H", "X", "Y"]);
        assert_eq!(l.coordinate_names(), vec!["xH", "xX", "xY"]);
    }

    #[test]
    fn abelian_is_rejected() {
        let err = LieAlgebra::make_algebra("ab", vec!["a".into(), "b".into()], 1, &[]);
        assert_eq!(err.unwrap_err(), Error::DegenerateKillingForm);
    }

    #[test]
    fn broken_sl2_fails_jacobi() {
        // replace [X,Y] = H by [X,Y] = H + X
        let entries = [
            BracketEntry {
                i: 0,
                j: 1,
                coeffs: vec![(1, r(2, 1))],
            },
            BracketEntry {
                i: 0,
                j: 2,
                coeffs: vec![(2, r(-2, 1))],
            },
            BracketEntry {
                i: 1,
                j: 2,
                coeffs: vec![(0, r(1, 1)), (1, r(1, 1))],
            },
        ];
        let err =
            LieAlgebra::make_algebra("bad", vec!["H".into(), "X".into(), "Y".into()], 1, &entries)
                .unwrap_err();
        assert!(matches!(err, Error::JacobiViolation { .. }), "got {err:?}");
    }

    #[test]
    fn killing_sl2_exact() {
        let kappa = LieAlgebra::sl2().killing_form();
        let expect = RatMatrix::from_rows(vec![
            vec![r(8, 1), r(0, 1), r(0, 1)],
            vec![r(0, 1), r(0, 1), r(4, 1)],
            vec![r(0, 1), r(4, 1), r(0, 1)],
        ]);
        assert_eq!(kappa, expect);
    }

    #[test]
    fn killing_so3_exact() {
        let kappa = LieAlgebra::so3().killing_form();
        assert_eq!(kappa, RatMatrix::identity(3).scale(&r(-2, 1)));
    }

    #[test]
    fn killing_is_symmetric_and_invariant() {
        for l in [LieAlgebra::sl2(), LieAlgebra::so3(), LieAlgebra::sl3()] {
            let n = l.dim();
            let kappa = l.killing_form();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(kappa.get(i, j), kappa.get(j, i));
                }
            }
            // kappa([x,y],z) + kappa(y,[x,z]) = 0 on all basis triples
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let mut sum = Rational::zero();
                        for m in 0..n {
                            sum += &(l.struct_const(x, y, m) * kappa.get(m, z));
                            sum += &(l.struct_const(x, z, m) * kappa.get(y, m));
                        }
                        assert!(sum.is_zero(), "{} triple ({x},{y},{z})", l.name());
                    }
                }
            }
        }
    }

    #[test]
    fn sl2_quadratic_invariant_exact() {
        let l = LieAlgebra::sl2();
        let p = l.quadratic_invariant().unwrap();
        let mut expect = Poly::from_term(Monomial(vec![0, 1, 1]), HPoly::one(), 3);
        expect.add_term(Monomial(vec![2, 0, 0]), HPoly::constant(r(1, 4)));
        assert_eq!(p, expect);
    }

    #[test]
    fn so3_quadratic_invariant_is_sphere() {
        let p = LieAlgebra::so3().quadratic_invariant().unwrap();
        let mut expect = Poly::zero(3);
        for i in 0..3 {
            expect.add_term(Monomial::var(i, 3).mul(&Monomial::var(i, 3)), HPoly::one());
        }
        assert_eq!(p, expect);
    }

    #[test]
    fn sl3_invariants_validate() {
        let l = LieAlgebra::sl3();
        assert_eq!(l.dim(), 8);
        assert_eq!(l.rank(), 2);
        let inv = l.invariant_set();
        assert_eq!(inv.len(), 2);
        assert_eq!(inv.polys()[1].degree(), 3);
    }

    #[test]
    fn regularity_examples() {
        let l = LieAlgebra::sl2();
        let inv = l.invariant_set();
        // (1, 0, 0): gradient (1/2, 0, 0), regular
        let reg = regularity_check(&l, &inv, &[r(1, 1), r(0, 1), r(0, 1)]).unwrap();
        assert_eq!(reg, Regularity::Regular);
        // origin: all homogeneous invariants of degree >= 2 vanish to first order
        let reg = regularity_check(&l, &inv, &[r(0, 1), r(0, 1), r(0, 1)]).unwrap();
        assert_eq!(reg, Regularity::Singular(0));
        // (0, 1, 0): gradient (0, 0, 1), regular
        let reg = regularity_check(&l, &inv, &[r(0, 1), r(1, 1), r(0, 1)]).unwrap();
        assert_eq!(reg, Regularity::Regular);
    }

    #[test]
    fn origin_singular_for_all_builtins() {
        for l in [LieAlgebra::sl2(), LieAlgebra::so3(), LieAlgebra::sl3()] {
            let origin = vec![Rational::zero(); l.dim()];
            let reg = regularity_check(&l, &l.invariant_set(), &origin).unwrap();
            assert_eq!(reg, Regularity::Singular(0), "{}", l.name());
        }
    }

    #[test]
    fn custom_table_matches_builtin() {
        let entries = [
            BracketEntry {
                i: 0,
                j: 1,
                coeffs: vec![(1, r(2, 1))],
            },
            BracketEntry {
                i: 0,
                j: 2,
                coeffs: vec![(2, r(-2, 1))],
            },
            BracketEntry {
                i: 1,
                j: 2,
                coeffs: vec![(0, r(1, 1))],
            },
        ];
        let custom = LieAlgebra::make_algebra(
            "custom",
            vec!["H".into(), "X".into(), "Y".into()],
            1,
            &entries,
        )
        .unwrap();
        assert!(custom.same_structure(&LieAlgebra::sl2()));
    }

    #[test]
    fn entry_with_bad_order_is_antisymmetry_violation() {
        let entries = [BracketEntry {
            i: 1,
            j: 1,
            coeffs: vec![(0, r(1, 1))],
        }];
        let err =
            LieAlgebra::make_algebra("bad", vec!["a".into(), "b".into()], 1, &entries).unwrap_err();
        assert!(matches!(err, Error::AntisymmetryViolation { .. }));
    }
}
