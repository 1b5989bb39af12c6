use std::io::Write;
use std::path::PathBuf;

use hypercover::algebra::{PolyRing, PrimeField, Rational, RationalField, Ring};
use hypercover::constructions::{
    build_family, build_thm1, eprime_curve, g_poly, h1_poly, h_poly, params_from_a, params_from_j, quartic_d,
    reference_curve, CURVE_NAMES,
};
use hypercover::curves::{cubic_json, rational_pair, CurveJson, HyperellipticModel, RationalPair};
use hypercover::twists::{census, census_tsv, growth_table, growth_tsv};
use hypercover::verify::{all_pass, run_suite, verify_specializations, Theorem, VerificationReport};
use hypercover::zeta::{check_remarks, lpoly_from_counts, thm1_mod_p, CountSpec, LPolynomial, Skipped};
use hypercover::Error;
use serde::Serialize;
use thiserror::Error as ThisError;

use crate::args::{
    CensusArgs, Command, Common, ConstructArgs, CurveArg, GrowthArgs, Param, RemarksArgs, TheoremArg, VerifyArgs,
    ZetaArgs,
};

/// Random specializations checked by `verify`.
const SPECIALIZATIONS: usize = 20;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(
                Error::WeilBound(_) | Error::Unfactored(_) | Error::SearchExhausted { .. },
            ) => 1,
            CliError::Core(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Runs one subcommand; `Ok(false)` when a check failed.
pub fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Construct(a) => construct(a),
        Command::Verify(a) => verify(a),
        Command::Zeta(a) => zeta(a),
        Command::Remarks(a) => remarks(a),
        Command::Twists(a) => twists(a),
        Command::Growth(a) => growth(a),
    }
}

fn resolve_a(p: &Param) -> Result<Rational> {
    let a = match (&p.j, &p.a) {
        (Some(j), _) => params_from_j(j)?.a,
        (None, Some(a)) => a.clone(),
        (None, None) => return Err(CliError::Usage("one of --j, --A is required".into())),
    };
    if a == Rational::from_integer(0.into()) {
        return Err(CliError::Usage("A must be nonzero".into()));
    }
    Ok(a)
}

fn check_primes(primes: &[u64]) -> Result<()> {
    if primes.is_empty() {
        return Err(CliError::Usage("--primes is empty".into()));
    }
    match primes.iter().find(|&&p| PrimeField::new(p).is_err()) {
        Some(p) => Err(CliError::Usage(format!("{p} is not a prime > 3"))),
        None => Ok(()),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit_json<T: Serialize>(common: &Common, value: &T) -> Result<()> {
    let mut text = serde_json::to_string(value).expect("serializable");
    text.push('\n');
    emit(&common.out, &text)
}

#[derive(Serialize)]
struct NamedCurve {
    name: &'static str,
    #[serde(flatten)]
    curve: CurveJson,
}

#[derive(Serialize)]
struct FamilyOut {
    j: RationalPair,
    #[serde(rename = "A")]
    a: RationalPair,
    curves: Vec<NamedCurve>,
}

/// `C`: the conic `x^2 + x z + z^2 - A` as coefficients of
/// `(x^2, x z, z^2, 1)`, with `E` and `E'_1`.
#[derive(Serialize)]
struct SpaceCurveOut {
    #[serde(rename = "A")]
    a: RationalPair,
    #[serde(rename = "B")]
    b: RationalPair,
    conic: Vec<RationalPair>,
    curves: Vec<NamedCurve>,
}

fn construct(args: ConstructArgs) -> Result<bool> {
    let a = resolve_a(&args.common.param)?;
    let q = RationalField;
    match args.theorem {
        TheoremArg::Two => {
            let params = params_from_a(&a)?;
            let fam = build_family(&q, &a)?;
            let curves = CURVE_NAMES
                .iter()
                .map(|&name| NamedCurve {
                    name,
                    curve: fam.curve_json(name).expect("known curve name"),
                })
                .collect();
            emit_json(
                &args.common,
                &FamilyOut {
                    j: rational_pair(&params.j),
                    a: rational_pair(&a),
                    curves,
                },
            )?;
        }
        TheoremArg::One => {
            let b = args.b.unwrap_or_else(|| a.clone());
            let c = build_thm1(&q, &a, &b)?;
            let one = q.one();
            emit_json(
                &args.common,
                &SpaceCurveOut {
                    a: rational_pair(&a),
                    b: rational_pair(&b),
                    conic: [one.clone(), one.clone(), one, q.neg(&a)].iter().map(rational_pair).collect(),
                    curves: vec![
                        NamedCurve { name: "E", curve: cubic_json(&c.cubic) },
                        NamedCurve { name: "Eprime1", curve: cubic_json(&c.aux_cubic) },
                    ],
                },
            )?;
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct VerifyOut {
    #[serde(rename = "A")]
    a: RationalPair,
    #[serde(rename = "B")]
    b: RationalPair,
    reports: Vec<VerificationReport>,
}

fn verify(args: VerifyArgs) -> Result<bool> {
    let a = resolve_a(&args.common.param)?;
    let b = args.b.clone().unwrap_or_else(|| a.clone());
    check_primes(&args.primes)?;
    let theorem = match args.theorem {
        None => Theorem::All,
        Some(TheoremArg::One) => Theorem::One,
        Some(TheoremArg::Two) => Theorem::Two,
    };
    let mut reports = run_suite(theorem, &a, &b, args.primes[0]);
    if theorem != Theorem::One {
        reports.push(verify_specializations(args.seed, SPECIALIZATIONS));
    }
    let ok = all_pass(&reports);
    emit_json(
        &args.common,
        &VerifyOut {
            a: rational_pair(&a),
            b: rational_pair(&b),
            reports,
        },
    )?;
    Ok(ok)
}

/// The named curve reduced mod `p`; only that curve needs good reduction.
fn count_spec(curve: CurveArg, a: &Rational, b: &Rational, p: u64) -> hypercover::Result<CountSpec> {
    if curve == CurveArg::C {
        return Ok(CountSpec::space_curve(p, &thm1_mod_p(a, b, p)?));
    }
    let fp = PrimeField::new(p).map_err(|e| Error::BadPrime(p, e.to_string()))?;
    let ap = match fp.reduce(a) {
        Some(0) => return Err(Error::BadPrime(p, "A = 0 mod p".into())),
        Some(ap) => ap,
        None => return Err(Error::BadPrime(p, "p divides the denominator of A".into())),
    };
    let bad = |e: Error| Error::BadPrime(p, format!("{}: {e}", curve.name()));
    let ring = PolyRing::new(fp, "x");
    let hyper = |f| {
        HyperellipticModel::new(&ring, f)
            .map(|h| CountSpec::hyperelliptic(p, h.f()))
            .map_err(bad)
    };
    match curve {
        CurveArg::E => Ok(CountSpec::weierstrass(p, &reference_curve(&fp, &ap).map_err(bad)?)),
        CurveArg::Eprime => Ok(CountSpec::weierstrass(p, &eprime_curve(&fp, &ap).map_err(bad)?)),
        CurveArg::D => hyper(ring.from_coeffs(quartic_d(&fp, &ap).map_err(bad)?.coeffs().to_vec())),
        CurveArg::H => hyper(h_poly(&ring, &ap)),
        CurveArg::H1 => hyper(h1_poly(&ring, &ap)),
        CurveArg::H2 => hyper(g_poly(&ring, &ap)),
        CurveArg::C => unreachable!("handled above"),
    }
}

#[derive(Serialize)]
struct ZetaOut {
    curve: &'static str,
    #[serde(rename = "A")]
    a: RationalPair,
    #[serde(rename = "B", skip_serializing_if = "Option::is_none")]
    b: Option<RationalPair>,
    lpolys: Vec<LPolynomial>,
    skipped: Vec<Skipped>,
}

fn zeta(args: ZetaArgs) -> Result<bool> {
    let a = resolve_a(&args.common.param)?;
    let b = args.b.clone().unwrap_or_else(|| a.clone());
    check_primes(&args.primes)?;
    let mut out = ZetaOut {
        curve: args.curve.name(),
        a: rational_pair(&a),
        b: (args.curve == CurveArg::C).then(|| rational_pair(&b)),
        lpolys: vec![],
        skipped: vec![],
    };
    for &p in &args.primes {
        match count_spec(args.curve, &a, &b, p) {
            Ok(spec) => {
                let counts = spec.counts(spec.genus)?;
                out.lpolys.push(lpoly_from_counts(p, spec.genus, &counts)?);
            }
            Err(Error::BadPrime(p, reason)) => out.skipped.push(Skipped { p, reason }),
            Err(e) => return Err(e.into()),
        }
    }
    emit_json(&args.common, &out)?;
    Ok(true)
}

fn remarks(args: RemarksArgs) -> Result<bool> {
    let a = resolve_a(&args.common.param)?;
    let b = args.b.clone().unwrap_or_else(|| a.clone());
    check_primes(&args.primes)?;
    let report = check_remarks(&a, &b, &args.primes)?;
    emit_json(&args.common, &report)?;
    Ok(report.all_pass())
}

fn twists(args: CensusArgs) -> Result<bool> {
    let a = resolve_a(&args.common.param)?;
    if args.height == 0 {
        return Err(CliError::Usage("--height must be at least 1".into()));
    }
    let records = census(&a, args.height)?;
    emit(&args.common.out, &census_tsv(&records))?;
    Ok(true)
}

fn growth(args: GrowthArgs) -> Result<bool> {
    let common = &args.census.common;
    let a = resolve_a(&common.param)?;
    if args.census.height == 0 {
        return Err(CliError::Usage("--height must be at least 1".into()));
    }
    if let Some(x) = args.grid.iter().find(|&&x| x <= 1) {
        return Err(CliError::Usage(format!("grid value {x} must exceed 1")));
    }
    let records = census(&a, args.census.height)?;
    let summary = growth_table(&records, &args.grid)?;
    emit(&common.out, &growth_tsv(&summary))?;
    Ok(true)
}
