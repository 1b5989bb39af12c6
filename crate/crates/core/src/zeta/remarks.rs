//! Zeta-function evidence for the isogeny decompositions of `Jac C` and
//! `Jac H`.

use serde::Serialize;

use super::count::{family_mod_p, thm1_mod_p, CountSpec};
use super::lpoly::{lpoly_divides, lpoly_from_counts, lpoly_quotient, quartic_factor, within_weil, LPolynomial};
use crate::algebra::{PrimeField, Rational, RationalField};
use crate::constructions::eprime_curve;
use crate::curves::CubicModel;
use crate::error::{Error, Result};
use crate::verify::VerificationReport;

/// `A` values tried for simplicity of the residual factor.
pub const SIMPLICITY_SAMPLE_A: [i64; 5] = [-27, 1, 2, 3, -1];
pub const DEFAULT_PRIMES: [u64; 3] = [7, 11, 13];

fn lpoly_of(spec: &CountSpec) -> Result<LPolynomial> {
    let counts = spec.counts(spec.genus)?;
    lpoly_from_counts(spec.p, spec.genus, &counts)
}

fn fmt_poly(c: &[i64]) -> String {
    format!("{c:?}")
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimeRemarks {
    pub p: u64,
    pub l_e: LPolynomial,
    pub l_eprime: LPolynomial,
    pub l_h: LPolynomial,
    pub l_h1: LPolynomial,
    pub l_h2: LPolynomial,
    /// `L_H / (L_E^2 L_E')`, when the division is exact.
    pub l_f: Option<LPolynomial>,
    /// A factor of `L_F` over `Z`, or `None` when `L_F` is irreducible.
    pub l_f_factor: Option<Vec<i64>>,
    pub l_f_irreducible: bool,
    pub checks: Vec<VerificationReport>,
    /// `L_H != L_H1 L_H2`; derived rather than claimed, so reported
    /// separately from the checks.
    pub structural_alarm: bool,
}

/// The genus 5 decomposition at one good prime, with `E'` supplied.
pub fn check_prime_with(a: &Rational, p: u64, eprime: &CubicModel<Rational>) -> Result<PrimeRemarks> {
    let fam = family_mod_p(a, p)?;
    let fp = PrimeField::new(p)?;
    let ep = eprime
        .try_map(&fp, |c| fp.reduce(c))
        .map_err(|e| Error::BadPrime(p, format!("E': {e}")))?;
    let l_e = lpoly_of(&CountSpec::weierstrass(p, &fam.e))?;
    let l_eprime = lpoly_of(&CountSpec::weierstrass(p, &ep))?;
    let l_h = lpoly_of(&CountSpec::hyperelliptic(p, fam.h.f()))?;
    let l_h1 = lpoly_of(&CountSpec::hyperelliptic(p, fam.h1.f()))?;
    let l_h2 = lpoly_of(&CountSpec::hyperelliptic(p, fam.h2.f()))?;

    let mut checks = vec![];
    let e2ep = l_e.mul(&l_e)?.mul(&l_eprime)?;
    let (divides, quot) = lpoly_divides(&e2ep, &l_h);
    let l_f = lpoly_quotient(&e2ep, &l_h);
    let f_ok = l_f
        .as_ref()
        .is_some_and(|f| f.degree() == 4 && f.satisfies_functional_equation());
    checks.push(VerificationReport::expect(
        format!("p{p}-LE^2*LE'-divides-LH"),
        divides && f_ok,
        || format!("quotient {}", fmt_poly(&quot)),
    ));
    let prod = l_e.mul(&l_eprime)?;
    checks.push(VerificationReport::expect(
        format!("p{p}-LH2=LE*LE'"),
        prod.coeffs == l_h2.coeffs,
        || format!("L_H2 = {}, L_E L_E' = {}", fmt_poly(&l_h2.coeffs), fmt_poly(&prod.coeffs)),
    ));
    let ef = match &l_f {
        Some(f) => l_e.mul(f)?.coeffs,
        None => vec![],
    };
    checks.push(VerificationReport::expect(
        format!("p{p}-LH1=LE*LF"),
        ef == l_h1.coeffs,
        || format!("L_H1 = {}, L_E L_F = {}", fmt_poly(&l_h1.coeffs), fmt_poly(&ef)),
    ));
    let l_f_factor = l_f.as_ref().and_then(|f| {
        let c: [i64; 5] = f.coeffs.clone().try_into().ok()?;
        quartic_factor(&c)
    });
    let l_f_irreducible = l_f.is_some() && l_f_factor.is_none();
    let structural_alarm = l_h.coeffs != l_h1.mul(&l_h2)?.coeffs;
    Ok(PrimeRemarks {
        p,
        l_e,
        l_eprime,
        l_h,
        l_h1,
        l_h2,
        l_f,
        l_f_factor,
        l_f_irreducible,
        checks,
        structural_alarm,
    })
}

pub fn check_prime(a: &Rational, p: u64) -> Result<PrimeRemarks> {
    check_prime_with(a, p, &eprime_curve(&RationalField, a)?)
}

/// `#C(F_q) = q + 1 - (2 a_E + a_E'1)` for `E'1: y^2 = x^3 - 27B x^2 + 27A^3 x`.
#[derive(Clone, Debug, Serialize)]
pub struct CCountRow {
    pub q: u64,
    pub count_c: i64,
    pub a_e: i64,
    pub a_eprime1: i64,
    pub holds: bool,
}

pub fn c_count_consistency(a: &Rational, b: &Rational, q: u64) -> Result<CCountRow> {
    let c = thm1_mod_p(a, b, q)?;
    c_count_from(q, &c, &CountSpec::space_curve(q, &c))
}

fn c_count_from(q: u64, c: &crate::constructions::SpaceCurveC<u64>, spec: &CountSpec) -> Result<CCountRow> {
    let count_c = spec.count(1)?;
    let a_e = q as i64 + 1 - CountSpec::weierstrass(q, &c.cubic).count(1)?;
    let a_eprime1 = q as i64 + 1 - CountSpec::weierstrass(q, &c.aux_cubic).count(1)?;
    Ok(CCountRow {
        q,
        count_c,
        a_e,
        a_eprime1,
        holds: count_c == q as i64 + 1 - (2 * a_e + a_eprime1),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Skipped {
    pub p: u64,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SimplicityWitness {
    pub a: i64,
    pub p: u64,
    pub l_f: Vec<i64>,
    pub irreducible: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RemarksReport {
    pub a: String,
    pub b: String,
    pub primes: Vec<PrimeRemarks>,
    pub skipped: Vec<Skipped>,
    pub c_counts: Vec<CCountRow>,
    pub c_counts_skipped: Vec<Skipped>,
    pub simplicity_sample: Vec<SimplicityWitness>,
}

impl RemarksReport {
    /// Every divisibility check and every row of `C` counts holds, and at least
    /// one prime was checked.
    pub fn all_pass(&self) -> bool {
        !self.primes.is_empty()
            && self.primes.iter().all(|p| p.checks.iter().all(VerificationReport::passed))
            && self.c_counts.iter().all(|r| r.holds)
    }

    /// The first sampled `(A, p)` with irreducible `L_F`.
    pub fn simplicity_witness(&self) -> Option<&SimplicityWitness> {
        self.simplicity_sample.iter().find(|w| w.irreducible)
    }
}

/// `L_F` over the sample `A` values and the given primes, skipping bad
/// pairs.
pub fn simplicity_sample(primes: &[u64]) -> Vec<SimplicityWitness> {
    let mut out = vec![];
    for a in SIMPLICITY_SAMPLE_A {
        for &p in primes {
            let Ok(r) = check_prime(&Rational::from_integer(a.into()), p) else {
                continue;
            };
            if let Some(f) = r.l_f {
                out.push(SimplicityWitness {
                    a,
                    p,
                    l_f: f.coeffs,
                    irreducible: r.l_f_irreducible,
                });
            }
        }
    }
    out
}

pub fn check_remarks(a: &Rational, b: &Rational, primes: &[u64]) -> Result<RemarksReport> {
    let eprime = eprime_curve(&RationalField, a)?;
    check_remarks_with(a, b, primes, &eprime)
}

pub fn check_remarks_with(
    a: &Rational,
    b: &Rational,
    primes: &[u64],
    eprime: &CubicModel<Rational>,
) -> Result<RemarksReport> {
    let mut report = RemarksReport {
        a: a.to_string(),
        b: b.to_string(),
        primes: vec![],
        skipped: vec![],
        c_counts: vec![],
        c_counts_skipped: vec![],
        simplicity_sample: simplicity_sample(&DEFAULT_PRIMES),
    };
    for &p in primes {
        match check_prime_with(a, p, eprime) {
            Ok(r) => report.primes.push(r),
            Err(Error::BadPrime(p, reason)) => report.skipped.push(Skipped { p, reason }),
            Err(e) => return Err(e),
        }
        match c_count_consistency(a, b, p) {
            Ok(r) => report.c_counts.push(r),
            Err(Error::BadPrime(p, reason)) => report.c_counts_skipped.push(Skipped { p, reason }),
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

/// Counts for `k <= g` fix the L-polynomial; its predictions for
/// `g < k <= 2g` must match the direct counts, and every count must lie in
/// its Weil interval.
pub fn overdetermination(name: &str, spec: &CountSpec) -> Result<VerificationReport> {
    let g = spec.genus;
    let counts = spec.counts(2 * g)?;
    let check = format!("{name}-overdetermined-F{}", spec.p);
    if let Some(k) = (1..=2 * g).find(|&k| !within_weil(spec.p, g, k, counts[k - 1])) {
        return Ok(VerificationReport::fail(check, format!("N_{k} = {} outside the Weil interval", counts[k - 1])));
    }
    let l = lpoly_from_counts(spec.p, g, &counts[..g])?;
    let predicted = l.predicted_counts(2 * g);
    Ok(VerificationReport::expect(check, predicted == counts, || {
        format!("predicted {predicted:?}, counted {counts:?}")
    }))
}

/// The overdetermination check for `H`, `H1`, `H2` at `A` and for `C` at
/// `(A, B)`.
pub fn overdetermination_suite(a: &Rational, b: &Rational, p: u64) -> Result<Vec<VerificationReport>> {
    let fam = family_mod_p(a, p)?;
    let c = thm1_mod_p(a, b, p)?;
    Ok(vec![
        overdetermination("H", &CountSpec::hyperelliptic(p, fam.h.f()))?,
        overdetermination("H1", &CountSpec::hyperelliptic(p, fam.h1.f()))?,
        overdetermination("H2", &CountSpec::hyperelliptic(p, fam.h2.f()))?,
        overdetermination("C", &CountSpec::space_curve(p, &c))?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rint;

    #[test]
    fn decomposition_at_oracle_primes() {
        let expect_f: [(u64, [i64; 5], bool); 3] = [
            (7, [1, 0, 6, 0, 49], true),
            (11, [1, 2, 6, 22, 121], true),
            (13, [1, 2, 2, 26, 169], false),
        ];
        for (p, lf, irr) in expect_f {
            let r = check_prime(&rint(-27), p).unwrap();
            assert!(r.checks.iter().all(|c| c.passed()), "{:?}", r.checks);
            assert_eq!(r.l_f.as_ref().unwrap().coeffs, lf.to_vec());
            assert_eq!(r.l_f_irreducible, irr);
            assert!(!r.structural_alarm);
        }
        let r = check_prime(&rint(-27), 11).unwrap();
        assert_eq!(
            r.l_h.coeffs,
            vec![1, -10, 51, -176, 502, -1452, 5522, -21296, 67881, -146410, 161051]
        );
    }

    #[test]
    fn wrong_eprime_breaks_divisibility() {
        let q = RationalField;
        let a = rint(-27);
        // y^2 = x^3 + A x^2 + A, the 2A x term dropped
        let bad = CubicModel::new(&q, a.clone(), rint(0), a.clone()).unwrap();
        let failed = DEFAULT_PRIMES.iter().any(|&p| {
            check_prime_with(&a, p, &bad).is_ok_and(|r| r.checks.iter().any(|c| !c.passed()))
        });
        assert!(failed);
    }

    #[test]
    fn c_counts_at_small_primes() {
        let rows: Vec<_> = [5u64, 7, 11, 13, 17, 19]
            .iter()
            .filter_map(|&q| c_count_consistency(&rint(1), &rint(1), q).ok())
            .collect();
        assert_eq!(rows.len(), 6);
        assert!(rows.iter().all(|r| r.holds));
        assert_eq!((rows[3].count_c, rows[3].a_e, rows[3].a_eprime1), (26, -5, -2));
    }

    #[test]
    fn c_count_mutation_breaks_consistency() {
        // 4A - x^2 in place of 4A - 3x^2
        let broken = [5u64, 7, 11, 13, 17, 19].iter().any(|&q| {
            let c = thm1_mod_p(&rint(1), &rint(1), q).unwrap();
            let mut spec = CountSpec::space_curve(q, &c);
            spec.factors[1] = vec![4 % q, 0, q - 1];
            !c_count_from(q, &c, &spec).unwrap().holds
        });
        assert!(broken);
    }

    #[test]
    fn bad_primes_are_skipped() {
        let r = check_remarks(&rint(-27), &rint(-27), &[3, 7]).unwrap();
        assert_eq!(r.skipped.len(), 1);
        assert_eq!(r.skipped[0].p, 3);
        assert_eq!(r.primes.len(), 1);
        assert!(r.all_pass());
        assert!(r.simplicity_witness().is_some());
    }

    #[test]
    fn overdetermination_small_genus() {
        let fam = family_mod_p(&rint(-27), 7).unwrap();
        let r = overdetermination("H2", &CountSpec::hyperelliptic(7, fam.h2.f())).unwrap();
        assert!(r.passed(), "{r:?}");
        let c = thm1_mod_p(&rint(1), &rint(1), 7).unwrap();
        let r = overdetermination("C", &CountSpec::space_curve(7, &c)).unwrap();
        assert!(r.passed(), "{r:?}");
        // a wrong point count at infinity is caught
        let mut spec = CountSpec::hyperelliptic(7, fam.h2.f());
        spec.infinity = super::super::count::Infinity::One;
        let r = overdetermination("H2", &spec);
        assert!(r.map_or(true, |r| !r.passed()));
    }

    #[test]
    fn overdetermination_genus_five() {
        let reps = overdetermination_suite(&rint(-27), &rint(-27), 7).unwrap();
        assert!(reps.iter().all(|r| r.passed()), "{reps:?}");
    }
}
