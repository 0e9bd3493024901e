//! Command-line surface of the quantization engine.
//!
//! Exit codes: 0 = computed / all checks pass; 1 = a check failed or a
//! completion bound was exceeded (the report names the counterexample);
//! 2 = usage, parse or config error; 3 = internal invariant violation.

mod output;

use std::panic::AssertUnwindSafe;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use coadq_core::checks;
use coadq_core::config::load_algebra;
use coadq_core::expr::{parse_hpoly, parse_poly, parse_word_expr};
use coadq_core::su2rep;
use coadq_core::uh::{pbw_normal_form, RewriteStrategy};
use coadq_core::{
    CasimirShift, Error, HPoly, InvariantPolySet, LieAlgebra, Orbit, QuantizedOrbitAlgebra,
    Rational, StarOrdering, StarProduct,
};

use output::{
    pass_fail, Format, HilbertRow, QuantizeReport, RepReport, SpanRow, SuiteReport, Summary,
    ValueReport, WitnessReport,
};

#[derive(Parser)]
#[command(
    name = "coadq",
    version,
    about = "Exact star products and quantized coadjoint orbits over Q[h]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderingArg {
    Pbw,
    Sym,
}

impl From<OrderingArg> for StarOrdering {
    fn from(o: OrderingArg) -> StarOrdering {
        match o {
            OrderingArg::Pbw => StarOrdering::Pbw,
            OrderingArg::Sym => StarOrdering::Sym,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Axioms,
    Assoc,
    Equivalence,
    Centrality,
    Hilbert,
    Witness,
    All,
}

#[derive(Args)]
struct OrbitFlags {
    /// Orbit constants c_1,...,c_l (comma separated rationals). Defaults
    /// to the built-in sample orbit of the algebra.
    #[arg(long)]
    constants: Option<String>,
    /// A regular point on the orbit, as comma separated rationals
    /// (required for custom constants on so3/sl3).
    #[arg(long)]
    point: Option<String>,
    /// Casimir shifts C_i(h), one h-polynomial expression per invariant,
    /// comma separated. Defaults to the constant shifts C_i(h) = c_i.
    #[arg(long)]
    shift: Option<String>,
    /// Degree bound for ideal completion.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..=24))]
    bound: u32,
}

#[derive(Subcommand)]
enum Command {
    /// PBW normal form of a noncommutative expression in the generators.
    NormalForm {
        #[arg(long)]
        algebra: String,
        /// Expression in generator names, h, rationals, + - * ^ and
        /// parentheses; products are not commuted.
        #[arg(long)]
        expr: String,
    },
    /// Star product of two polynomials.
    Star {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum)]
        ordering: OrderingArg,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Cochain values C^0..C^n of a star product of two polynomials.
    Cochain {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum)]
        ordering: OrderingArg,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Largest h-order to print.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(0..=16))]
        max_degree: u32,
    },
    /// Run a verification suite; exit 1 on the first failed property.
    Check {
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Restrict to one quantization map (default: both).
        #[arg(long, value_enum)]
        ordering: Option<OrderingArg>,
        /// Degree bound for the suite (per-suite default when omitted).
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=16))]
        max_degree: Option<u32>,
        /// Check a single pair or triple instead of the exhaustive
        /// family: --a/--b for axioms, --a/--b/--c for assoc.
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        c: Option<String>,
        #[command(flatten)]
        orbit: OrbitFlags,
    },
    /// Build the quantized orbit algebra and print its report.
    Quantize {
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        orbit: OrbitFlags,
        /// Largest degree for the basis listing and Hilbert table.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(0..=16))]
        max_degree: u32,
    },
    /// Check an sl2 irrep against the quantized orbit algebra.
    RepCheck {
        /// Highest weight; the representation has dimension m + 1.
        #[arg(long, value_parser = clap::value_parser!(u16).range(0..=64))]
        m: u16,
        /// The specialization of h, a nonzero rational.
        #[arg(long)]
        hbar: String,
        /// Casimir shift C(h) as an h-polynomial expression. Defaults to
        /// l^2 + l*h with l = hbar*m/2 (the geometric-quantization value).
        #[arg(long)]
        shift: Option<String>,
        /// Largest degree for the span table (default m).
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=16))]
        max_degree: Option<u32>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match std::panic::catch_unwind(AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(code)) => code,
        Ok(Err(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
        Err(_) => {
            eprintln!("error: internal invariant violation");
            ExitCode::from(3)
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::GroebnerIncomplete { .. } | Error::ReductionBoundExceeded { .. } => 1,
        Error::SyntaxError { .. }
        | Error::UnknownIdentifier { .. }
        | Error::IoError { .. }
        | Error::FormatError { .. }
        | Error::JacobiViolation { .. }
        | Error::AntisymmetryViolation { .. }
        | Error::DegenerateKillingForm
        | Error::NotInvariant { .. }
        | Error::MissingInvariants { .. }
        | Error::InvalidOrbitPoint(_)
        | Error::ShiftConstantMismatch { .. }
        | Error::ZeroHbar => 2,
        Error::DimensionMismatch { .. }
        | Error::AlgebraMismatch(_)
        | Error::NotCentral { .. }
        | Error::RelationViolation(_)
        | Error::NotScalar => 3,
    }
}

fn run(cli: Cli) -> coadq_core::Result<ExitCode> {
    let format = cli.format;
    match cli.command {
        Command::NormalForm { algebra, expr } => {
            let l = load_algebra(&algebra)?;
            let words = parse_word_expr(&expr, &l)?;
            let nf = pbw_normal_form(words, &l, RewriteStrategy::LeftmostFirst);
            let rendered = nf.display(l.names()).to_string();
            let report = ValueReport {
                command: "normal-form".into(),
                algebra: l.name().into(),
                inputs: vec![("expr".into(), expr)],
                results: vec![("normal_form".into(), rendered)],
            };
            print!("{}", report.render(format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Star {
            algebra,
            ordering,
            a,
            b,
        } => {
            let l = load_algebra(&algebra)?;
            let pa = parse_poly(&a, &l)?;
            let pb = parse_poly(&b, &l)?;
            let sp = StarProduct::new(l.clone(), ordering.into());
            let result = sp.star(&pa, &pb)?;
            let names = l.coordinate_names();
            let report = ValueReport {
                command: "star".into(),
                algebra: l.name().into(),
                inputs: vec![
                    (
                        "ordering".into(),
                        StarOrdering::from(ordering).label().into(),
                    ),
                    ("a".into(), a),
                    ("b".into(), b),
                ],
                results: vec![("result".into(), result.display(&names).to_string())],
            };
            print!("{}", report.render(format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Cochain {
            algebra,
            ordering,
            a,
            b,
            max_degree,
        } => {
            let l = load_algebra(&algebra)?;
            let pa = parse_poly(&a, &l)?;
            let pb = parse_poly(&b, &l)?;
            let sp = StarProduct::new(l.clone(), ordering.into());
            let names = l.coordinate_names();
            let mut results = Vec::new();
            for n in 0..=max_degree {
                let c = sp.extract_cochain(n as usize, &pa, &pb)?;
                results.push((
                    format!("C^{n}"),
                    format!("C^{n} = {}", c.value.display(&names)),
                ));
            }
            let report = ValueReport {
                command: "cochain".into(),
                algebra: l.name().into(),
                inputs: vec![
                    (
                        "ordering".into(),
                        StarOrdering::from(ordering).label().into(),
                    ),
                    ("a".into(), a),
                    ("b".into(), b),
                ],
                results,
            };
            print!("{}", report.render(format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            algebra,
            suite,
            ordering,
            max_degree,
            a,
            b,
            c,
            orbit,
        } => {
            if a.is_some() || b.is_some() || c.is_some() {
                run_single_check(
                    &algebra,
                    suite,
                    ordering,
                    a.as_deref(),
                    b.as_deref(),
                    c.as_deref(),
                    format,
                )
            } else {
                run_check(&algebra, suite, ordering, max_degree, &orbit, format)
            }
        }
        Command::Quantize {
            algebra,
            orbit,
            max_degree,
        } => run_quantize(&algebra, &orbit, max_degree, format),
        Command::RepCheck {
            m,
            hbar,
            shift,
            max_degree,
        } => run_rep_check(m as usize, &hbar, shift.as_deref(), max_degree, format),
    }
}

fn parse_rational_list(src: &str, what: &str) -> coadq_core::Result<Vec<Rational>> {
    src.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<Rational>()
                .map_err(|_| Error::SyntaxError {
                    pos: 0,
                    expected: format!("{what}: comma separated rationals, got `{piece}`"),
                })
        })
        .collect()
}

fn parse_shift_list(src: &str) -> coadq_core::Result<Vec<HPoly>> {
    src.split(',')
        .map(|piece| parse_hpoly(piece.trim()))
        .collect()
}

/// Built-in sample orbits: sl2 on c = 1 through (0, 1, 1); so3 on the
/// unit sphere through (1, 0, 0); sl3 as the quadratic-only truncation
/// through the trace-dual of diag(1, 0, -1).
fn default_orbit(l: &LieAlgebra, bound: u32) -> coadq_core::Result<Orbit> {
    let r = |n: i64| Rational::from_int(n);
    match l.name() {
        "sl2" => Orbit::with_bound(
            l.clone(),
            l.invariant_set(),
            vec![r(1)],
            vec![r(0), r(1), r(1)],
            bound,
        ),
        "so3" => Orbit::with_bound(
            l.clone(),
            l.invariant_set(),
            vec![r(1)],
            vec![r(1), r(0), r(0)],
            bound,
        ),
        "sl3" => {
            let p2 = l.invariant_set().polys()[0].clone();
            let inv = InvariantPolySet::new(vec![p2], l)?;
            let mut point = vec![Rational::zero(); 8];
            point[0] = Rational::one();
            point[1] = Rational::one();
            Orbit::with_bound(l.clone(), inv, vec![r(1)], point, bound)
        }
        other => Err(Error::InvalidOrbitPoint(format!(
            "no default orbit for `{other}`: pass --constants and --point"
        ))),
    }
}

fn orbit_from_flags(l: &LieAlgebra, flags: &OrbitFlags) -> coadq_core::Result<Orbit> {
    let Some(constants_src) = &flags.constants else {
        return default_orbit(l, flags.bound);
    };
    let constants = parse_rational_list(constants_src, "--constants")?;
    let point = match &flags.point {
        Some(p) => parse_rational_list(p, "--point")?,
        None if l.name() == "sl2" && constants.len() == 1 => {
            // (0, 1, c) lies on the orbit and is regular for every c
            vec![Rational::zero(), Rational::one(), constants[0].clone()]
        }
        None => {
            return Err(Error::InvalidOrbitPoint(
                "custom constants need --point (a regular point on the orbit)".into(),
            ))
        }
    };
    Orbit::with_bound(l.clone(), l.invariant_set(), constants, point, flags.bound)
}

fn quantized_from_flags(
    l: &LieAlgebra,
    flags: &OrbitFlags,
) -> coadq_core::Result<QuantizedOrbitAlgebra> {
    let orbit = orbit_from_flags(l, flags)?;
    let shifts = match &flags.shift {
        Some(src) => CasimirShift::new(parse_shift_list(src)?, orbit.constants())?,
        None => CasimirShift::constant(orbit.constants()),
    };
    QuantizedOrbitAlgebra::with_bound(orbit, shifts, flags.bound)
}

/// One-off pair/triple checks: `--a/--b` with the axioms suite, plus
/// `--c` with assoc.
fn run_single_check(
    algebra: &str,
    suite: SuiteArg,
    ordering: Option<OrderingArg>,
    a: Option<&str>,
    b: Option<&str>,
    c: Option<&str>,
    format: Format,
) -> coadq_core::Result<ExitCode> {
    let l = load_algebra(algebra)?;
    let orderings: Vec<StarOrdering> = match ordering {
        Some(o) => vec![o.into()],
        None => vec![StarOrdering::Pbw, StarOrdering::Sym],
    };
    let usage = |msg: &str| Error::SyntaxError {
        pos: 0,
        expected: msg.to_string(),
    };
    let (Some(a_src), Some(b_src)) = (a, b) else {
        return Err(usage("--a and --b together for a single-input check"));
    };
    let pa = parse_poly(a_src, &l)?;
    let pb = parse_poly(b_src, &l)?;
    let names = l.coordinate_names();
    let mut records = Vec::new();
    match suite {
        SuiteArg::Axioms => {
            if c.is_some() {
                return Err(usage("--c applies to the assoc suite only"));
            }
            for &o in &orderings {
                let sp = StarProduct::new(l.clone(), o);
                for (property, ok) in [
                    ("axiom_a", sp.check_axiom_a(&pa, &pb)?),
                    ("axiom_b", sp.check_axiom_b(&pa, &pb)?),
                ] {
                    records.push(coadq_core::checks::CheckRecord {
                        property: property.into(),
                        algebra: l.name().into(),
                        ordering: Some(o.label().into()),
                        degree_bound: pa.degree().max(pb.degree()),
                        passed: ok,
                        counterexample: (!ok).then(|| {
                            format!("a = {}, b = {}", pa.display(&names), pb.display(&names))
                        }),
                    });
                }
            }
        }
        SuiteArg::Assoc => {
            let Some(c_src) = c else {
                return Err(usage("--c (the third operand) for a single assoc check"));
            };
            let pc = parse_poly(c_src, &l)?;
            for &o in &orderings {
                let sp = StarProduct::new(l.clone(), o);
                let ok = sp.check_associativity(&pa, &pb, &pc)?;
                records.push(coadq_core::checks::CheckRecord {
                    property: "associativity".into(),
                    algebra: l.name().into(),
                    ordering: Some(o.label().into()),
                    degree_bound: pa.degree().max(pb.degree()).max(pc.degree()),
                    passed: ok,
                    counterexample: (!ok).then(|| {
                        format!(
                            "triple ({}, {}, {})",
                            pa.display(&names),
                            pb.display(&names),
                            pc.display(&names)
                        )
                    }),
                });
            }
        }
        _ => return Err(usage("--a/--b/--c apply to the axioms and assoc suites")),
    }
    let passed = records.iter().filter(|r| r.passed).count();
    let failed = records.len() - passed;
    let report = SuiteReport {
        command: "check".into(),
        algebra: l.name().into(),
        records,
        witnesses: Vec::new(),
        summary: Summary { passed, failed },
    };
    print!("{}", report.render(format));
    if report.all_passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn run_check(
    algebra: &str,
    suite: SuiteArg,
    ordering: Option<OrderingArg>,
    max_degree: Option<u32>,
    orbit_flags: &OrbitFlags,
    format: Format,
) -> coadq_core::Result<ExitCode> {
    let l = load_algebra(algebra)?;
    let orderings: Vec<StarOrdering> = match ordering {
        Some(o) => vec![o.into()],
        None => vec![StarOrdering::Pbw, StarOrdering::Sym],
    };
    let mut records = Vec::new();
    let mut witnesses = Vec::new();
    let deg = |default: u32| max_degree.unwrap_or(default);

    let want = |s: SuiteArg| suite == s || suite == SuiteArg::All;
    if want(SuiteArg::Axioms) {
        records.extend(checks::suite_axioms(&l, &orderings, deg(4))?);
    }
    if want(SuiteArg::Assoc) {
        records.extend(checks::suite_assoc(&l, &orderings, deg(2))?);
    }
    if want(SuiteArg::Equivalence) {
        records.extend(checks::suite_equivalence(&l, deg(3))?);
    }
    if want(SuiteArg::Centrality) {
        records.extend(checks::suite_centrality(&l)?);
    }
    if want(SuiteArg::Hilbert) {
        let q = quantized_from_flags(&l, orbit_flags)?;
        records.extend(checks::suite_hilbert(&q, deg(6))?);
    }
    if want(SuiteArg::Witness) {
        let orbit = orbit_from_flags(&l, orbit_flags)?;
        let d = deg(2);
        for &o in &orderings {
            let sp = StarProduct::new(l.clone(), o);
            let found = sp.orbit_closure_witness(&orbit, d)?;
            let names = l.coordinate_names();
            witnesses.push(match found {
                Some(w) => WitnessReport {
                    ordering: o.label().into(),
                    max_degree: d,
                    found: true,
                    a: Some(w.a.display(&names).to_string()),
                    invariant_index: Some(w.invariant_index),
                    remainder: Some(w.remainder.display(&names).to_string()),
                },
                None => WitnessReport {
                    ordering: o.label().into(),
                    max_degree: d,
                    found: false,
                    a: None,
                    invariant_index: None,
                    remainder: None,
                },
            });
        }
    }
    let passed = records.iter().filter(|r| r.passed).count();
    let failed = records.len() - passed;
    let report = SuiteReport {
        command: "check".into(),
        algebra: l.name().into(),
        records,
        witnesses,
        summary: Summary { passed, failed },
    };
    print!("{}", report.render(format));
    if report.all_passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn run_quantize(
    algebra: &str,
    orbit_flags: &OrbitFlags,
    max_degree: u32,
    format: Format,
) -> coadq_core::Result<ExitCode> {
    let l = load_algebra(algebra)?;
    let q = quantized_from_flags(&l, orbit_flags)?;
    let names = l.names();
    let hilbert = q.hilbert_check(max_degree)?;
    let hilbert_pass = hilbert.iter().all(|(_, a, b)| a == b);
    let mut basis_by_degree = Vec::new();
    let words = q.canonical_words_up_to(max_degree);
    for d in 0..=max_degree {
        let in_degree: Vec<String> = words
            .iter()
            .filter(|w| w.degree() == d)
            .map(|w| {
                if w.is_one() {
                    "1".to_string()
                } else {
                    coadq_core::poly::render_monomial(w, names)
                }
            })
            .collect();
        basis_by_degree.push((d, in_degree));
    }
    let report = QuantizeReport {
        command: "quantize".into(),
        algebra: l.name().into(),
        invariants_used: q.orbit().invariants().len(),
        rank: l.rank(),
        constants: q
            .orbit()
            .constants()
            .iter()
            .map(|c| c.to_string())
            .collect(),
        shifts: q.shifts().values().iter().map(|s| s.to_string()).collect(),
        rules: q.rules_rendered(),
        basis_by_degree,
        hilbert: hilbert
            .into_iter()
            .map(|(degree, quotient_dim, classical_dim)| HilbertRow {
                degree,
                quotient_dim,
                classical_dim,
            })
            .collect(),
        hilbert_pass,
    };
    print!("{}", report.render(format));
    if hilbert_pass {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn run_rep_check(
    m: usize,
    hbar_src: &str,
    shift_src: Option<&str>,
    max_degree: Option<u32>,
    format: Format,
) -> coadq_core::Result<ExitCode> {
    let hbar: Rational = hbar_src.parse()?;
    if hbar.is_zero() {
        return Err(Error::ZeroHbar);
    }
    let l_value = &(&hbar * &Rational::from_int(m as i64)) * &Rational::new(1, 2);
    let shift = match shift_src {
        Some(src) => parse_hpoly(src)?,
        None => HPoly::from_coeffs(vec![&l_value * &l_value, l_value.clone()]),
    };
    let c = shift.constant_term();
    let q = su2rep::quantized_with_shift(c, shift.clone())?;
    let rep = su2rep::build_irrep(m, hbar.clone())?;
    let d = max_degree.unwrap_or(m as u32);
    let result = su2rep::kernel_and_span_check(&q, &rep, d)?;
    let report = RepReport {
        command: "rep-check".into(),
        m,
        hbar: hbar.to_string(),
        shift: shift.to_string(),
        c_expected: result.c_expected.to_string(),
        c_computed: result
            .c_computed
            .as_ref()
            .map_or("<not scalar>".to_string(), |c| c.to_string()),
        casimir: pass_fail(result.casimir_matches),
        kernel: pass_fail(result.kernel_pass),
        span_dims: result
            .span_dims
            .iter()
            .map(|&(degree, dim, expected)| SpanRow {
                degree,
                dim,
                expected,
            })
            .collect(),
        span: pass_fail(result.span_pass),
        passed: result.passed(),
    };
    print!("{}", report.render(format));
    if result.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
